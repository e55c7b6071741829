"""Quandle action polynomials."""

__all__ = ["ActionPolynomial", "parse_polynomial"]

import tokenize

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import sympy

from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from ..base.errors import MalformedPolynomial

U = sympy.Symbol("u")

_TRANSFORMATIONS = standard_transformations + (
    implicit_multiplication_application,
    convert_xor,
)


@dataclass(frozen=True)
class ActionPolynomial:
    """
    Sparse polynomial ``sum_j c_j u^j`` with positive integer coefficients.

    Attributes
    ----------
    terms : tuple[tuple[int, int], ...]
        ``(exponent, coefficient)`` pairs in descending exponent order.
    acting_element : int | None
        Element the polynomial was computed for. Not part of equality.

    """

    terms: tuple[tuple[int, int], ...]
    acting_element: int | None = field(default=None, compare=False)

    def __post_init__(self):
        merged = Counter()
        for exponent, coefficient in self.terms:
            exponent, coefficient = int(exponent), int(coefficient)
            if exponent < 1 or coefficient < 0:
                raise MalformedPolynomial(
                    f"term {coefficient}u^{exponent}: exponents must be positive "
                    "and coefficients nonnegative"
                )
            merged[exponent] += coefficient
        terms = tuple(sorted(((j, c) for j, c in merged.items() if c), reverse=True))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_terms(
        cls, terms: Mapping[int, int], acting_element: int | None = None
    ) -> "ActionPolynomial":
        """Build from an exponent -> coefficient mapping."""
        return cls(tuple(terms.items()), acting_element)

    @classmethod
    def from_loop_lengths(
        cls, lengths: Iterable[int], acting_element: int | None = None
    ) -> "ActionPolynomial":
        """Sum of ``u^l`` over per-vertex loop lengths ``l``."""
        return cls(tuple(Counter(int(j) for j in lengths).items()), acting_element)

    @classmethod
    def from_cycle_lengths(
        cls, lengths: Iterable[int], acting_element: int | None = None
    ) -> "ActionPolynomial":
        """Polynomial of a disjoint union of cycles; a j-cycle adds ``j u^j``."""
        counts = Counter(int(j) for j in lengths)
        return cls(tuple((j, j * k) for j, k in counts.items()), acting_element)

    def coefficient(self, j: int) -> int:
        """Coefficient of ``u^j``."""
        return dict(self.terms).get(j, 0)

    @property
    def degree(self) -> int:
        """Largest exponent (0 for the zero polynomial)."""
        return self.terms[0][0] if self.terms else 0

    def evaluate(self, u: int = 1) -> int:
        """Value at ``u``; at ``u=1`` this is the number of colorings."""
        return sum(c * u**j for j, c in self.terms)

    def cycle_lengths(self) -> tuple[int, ...]:
        """
        Cycle lengths of the quiver the polynomial describes, ascending.

        Raises
        ------
        MalformedPolynomial
            If a coefficient ``c_j`` is not a multiple of ``j``.

        """
        lengths = []
        for j, c in sorted(self.terms):
            if c % j:
                raise MalformedPolynomial(f"coefficient {c} of u^{j} is not a multiple of {j}")
            lengths.extend([j] * (c // j))
        return tuple(lengths)

    def as_expr(self) -> sympy.Expr:
        """The polynomial as a sympy expression in ``u``."""
        return sympy.Add(*(c * U**j for j, c in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_format_term(j, c) for j, c in self.terms)


def parse_polynomial(text: str) -> ActionPolynomial:
    """
    Parse a polynomial in ``u``.

    Accepts the display format (``8u^2 + u``), the compact published form
    (``4u+9u^3``) and anything else sympy reads as a polynomial in ``u``
    with positive integer coefficients and no constant term. Malformed
    published entries such as ``12^2u+4u`` are read literally (as ``148u``).

    Parameters
    ----------
    text : str
        The polynomial.

    Returns
    -------
    ActionPolynomial
        The parsed polynomial.

    Raises
    ------
    MalformedPolynomial
        If the text is not such a polynomial.

    Examples
    --------
    >>> str(parse_polynomial("4u+9u^3"))
    '9u^3 + 4u'

    """
    try:
        expr = parse_expr(text, local_dict={"u": U}, transformations=_TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError, tokenize.TokenError, sympy.SympifyError):
        raise MalformedPolynomial(f"cannot parse {text!r}") from None
    if not isinstance(expr, sympy.Expr) or not expr.free_symbols <= {U}:
        raise MalformedPolynomial(f"{text!r} is not a polynomial in u")
    try:
        poly = sympy.Poly(expr, U)
    except sympy.PolynomialError:
        raise MalformedPolynomial(f"{text!r} is not a polynomial in u") from None
    if poly.is_zero:
        return ActionPolynomial(())

    terms = []
    for (exponent,), coefficient in poly.terms():
        if exponent == 0 or not coefficient.is_Integer or coefficient <= 0:
            raise MalformedPolynomial(f"invalid term {coefficient}*u^{exponent} in {text!r}")
        terms.append((exponent, int(coefficient)))
    return ActionPolynomial(tuple(terms))


# %% local utils
def _format_term(j, c):
    coefficient = "" if c == 1 else str(c)
    power = "u" if j == 1 else f"u^{j}"
    return coefficient + power
