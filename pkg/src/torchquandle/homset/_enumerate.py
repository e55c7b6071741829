"""Homset enumeration by propagated backtracking and by brute force."""

__all__ = [
    "SearchStep",
    "compile_plan",
    "enumerate_colorings",
    "brute_force_colorings",
    "counting_invariant",
]

import logging

from typing import NamedTuple

import torch

from ..base.config import prepare_search_limits
from ..base.errors import CapExceeded, OracleTooLarge
from ..diagram import Diagram, crossing_relations
from ..quandle import Quandle
from ._coloring import Homset, satisfies

logger = logging.getLogger(__name__)


class SearchStep(NamedTuple):
    """
    One step of a compiled search plan.

    ``branch`` assigns every element to ``target``. ``derive`` sets
    ``target = source op^sign actor``. ``check`` keeps the rows with
    ``target == source op^sign actor``.
    """

    kind: str
    target: int
    source: int = -1
    actor: int = -1
    sign: int = 1


def compile_plan(d: Diagram) -> tuple[SearchStep, ...]:
    """
    Compile the search plan of a diagram.

    Relations with a known actor and one known end fix the other end
    (``under_out`` from ``under_in`` via the operation, ``under_in`` from
    ``under_out`` via its inverse). When nothing can be derived the plan
    branches on the arc that unlocks most relations.

    Parameters
    ----------
    d : Diagram
        The diagram.

    Returns
    -------
    tuple[SearchStep, ...]
        Steps in execution order; every arc is assigned exactly once and
        every relation is enforced exactly once.

    """
    known = [False] * d.arc_count
    pending = list(crossing_relations(d))
    steps = []
    while True:
        progress = True
        while progress:
            progress = False
            remaining = []
            for r in pending:
                lhs, base, actor = known[r.lhs], known[r.rhs_base], known[r.rhs_actor]
                if lhs and base and actor:
                    steps.append(SearchStep("check", r.lhs, r.rhs_base, r.rhs_actor, r.sign))
                elif base and actor:
                    steps.append(SearchStep("derive", r.lhs, r.rhs_base, r.rhs_actor, r.sign))
                    known[r.lhs] = progress = True
                elif lhs and actor:
                    steps.append(SearchStep("derive", r.rhs_base, r.lhs, r.rhs_actor, -r.sign))
                    known[r.rhs_base] = progress = True
                else:
                    remaining.append(r)
            pending = remaining
        if all(known):
            break
        arc = _pick_branch_arc(pending, known)
        steps.append(SearchStep("branch", arc))
        known[arc] = True

    logger.debug(
        "search plan for %r: %d branch, %d derive, %d check steps",
        d,
        sum(step.kind == "branch" for step in steps),
        sum(step.kind == "derive" for step in steps),
        sum(step.kind == "check" for step in steps),
    )
    return tuple(steps)


def enumerate_colorings(
    d: Diagram, q: Quandle, cap: int | None = None, chunk_size: int | None = None
) -> Homset:
    """
    All colorings of ``d`` by ``q``.

    Parameters
    ----------
    d : Diagram
        The diagram.
    q : Quandle
        The coloring quandle.
    cap : int | None, optional
        Maximum homset size. Defaults to ``TORCHQUANDLE_CAP`` or ``1_000_000``.
    chunk_size : int | None, optional
        Maximum number of partial assignments expanded at once.

    Returns
    -------
    Homset
        Colorings in lexicographic order.

    Raises
    ------
    CapExceeded
        If there are more than ``cap`` colorings.

    Examples
    --------
    >>> from torchquandle.diagram import load_corpus
    >>> from torchquandle.quandle import dihedral_quandle
    >>> len(enumerate_colorings(load_corpus("3_1"), dihedral_quandle(3)))
    9

    """
    limits = prepare_search_limits(cap=cap, chunk_size=chunk_size)
    plan = compile_plan(d)
    frontier = torch.full((1, d.arc_count), -1, dtype=torch.long)
    found = []
    _execute(plan, 0, frontier, q, limits, found, [0])
    rows = torch.cat(found) if found else frontier[:0]
    homset = Homset.from_rows(d, q, rows)
    logger.info("homset of %r by %r: %d colorings", d, q, len(homset))
    return homset


def brute_force_colorings(d: Diagram, q: Quandle, limit: int | None = None) -> Homset:
    """
    All colorings by exhaustive filtering of the ``n ** arc_count`` assignments.

    Parameters
    ----------
    d : Diagram
        The diagram.
    q : Quandle
        The coloring quandle.
    limit : int | None, optional
        Maximum number of assignments. Defaults to
        ``TORCHQUANDLE_ORACLE_LIMIT`` or ``10**8``.

    Returns
    -------
    Homset
        Colorings in lexicographic order.

    Raises
    ------
    OracleTooLarge
        If ``n ** arc_count`` exceeds the limit.

    """
    limits = prepare_search_limits(oracle_limit=limit)
    n, arcs = q.n, d.arc_count
    total = n**arcs
    if total > limits.oracle_limit:
        raise OracleTooLarge(total, limits.oracle_limit)

    # most significant digit first, so arange order is lexicographic
    radix = torch.tensor([n ** (arcs - 1 - k) for k in range(arcs)], dtype=torch.long)
    found = []
    for start in range(0, total, limits.chunk_size):
        index = torch.arange(start, min(start + limits.chunk_size, total), dtype=torch.long)
        rows = (index[:, None] // radix) % n
        found.append(rows[satisfies(d, q, rows)])
    return Homset.from_rows(d, q, torch.cat(found))


def counting_invariant(d: Diagram, q: Quandle, cap: int | None = None) -> int:
    """Number of colorings of ``d`` by ``q``."""
    return len(enumerate_colorings(d, q, cap=cap))


# %% subroutines
def _execute(plan, start, frontier, q, limits, found, total):
    n = q.n
    for position in range(start, len(plan)):
        step = plan[position]
        if step.kind == "branch":
            rows = frontier.shape[0]
            if rows * n > limits.chunk_size and rows > 1:
                # split and go depth first
                size = max(1, limits.chunk_size // n)
                for chunk in torch.split(frontier, size):
                    _execute(plan, position, chunk, q, limits, found, total)
                return
            frontier = frontier.repeat_interleave(n, dim=0)
            frontier[:, step.target] = torch.arange(n, dtype=torch.long).repeat(rows)
            continue

        table = q.operation(step.sign)
        image = table[frontier[:, step.source], frontier[:, step.actor]]
        if step.kind == "derive":
            frontier[:, step.target] = image
        else:
            frontier = frontier[frontier[:, step.target] == image]
            if frontier.shape[0] == 0:
                return

    total[0] += frontier.shape[0]
    if total[0] > limits.cap:
        raise CapExceeded(limits.cap)
    found.append(frontier)


def _pick_branch_arc(pending, known):
    score = {}
    for r in pending:
        end_known = known[r.lhs] or known[r.rhs_base]
        for arc in {r.lhs, r.rhs_base, r.rhs_actor}:
            if not known[arc]:
                gain = 2 if arc == r.rhs_actor and end_known else 1
                score[arc] = score.get(arc, 0) + gain
    if score:
        return min(score, key=lambda arc: (-score[arc], arc))
    return known.index(False)
