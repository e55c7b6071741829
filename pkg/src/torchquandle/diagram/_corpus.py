"""Bundled link corpus."""

__all__ = [
    "corpus_names",
    "table_links",
    "load_corpus",
    "invariance_pairs",
    "diagram_from_source",
    "published_pd_codes",
    "freeze_corpus",
]

import functools
import logging

from importlib import resources
from pathlib import Path

from ..base.errors import ParseError, UnknownName
from ._braid import diagram_from_braid, parse_braid
from ._diagram import Diagram
from ._gauss import parse_signed_gauss
from ._native import parse_crossing_list, serialize
from ._pd import parse_pd

_READERS = {".pd": parse_pd, ".gauss": parse_signed_gauss, ".braid": parse_braid}

logger = logging.getLogger(__name__)

_KNOTS = ("0_1", "3_1")


def corpus_names() -> tuple[str, ...]:
    """Names of all bundled diagrams, in table order."""
    return _KNOTS + tuple(published_pd_codes()) + tuple(_braid_words())


def table_links() -> tuple[str, ...]:
    """Multi-component links of the corpus, excluding alternative diagrams."""
    return tuple(published_pd_codes())


def invariance_pairs() -> tuple[tuple[str, str], ...]:
    """Pairs ``(link, variant)`` of bundled diagrams of the same link."""
    names = set(corpus_names())
    pairs = []
    for name in corpus_names():
        base = _base(name, names)
        if base is not None:
            pairs.append((base, name))
    return tuple(pairs)


@functools.lru_cache(maxsize=None)
def published_pd_codes() -> dict[str, tuple[str, str]]:
    """
    Published PD codes the frozen link diagrams are generated from.

    Returns
    -------
    dict[str, tuple[str, str]]
        Table name mapped to ``(source, pd)``, where ``source`` names the
        published oriented link, e.g. ``"L6a4{0,0}"``.

    """
    codes = {}
    text = _links().joinpath("pd_codes.txt").read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        tokens = raw.split(maxsplit=2)
        if len(tokens) != 3:
            raise ParseError("expected '<name> <source> <PD code>'", lineno)
        name, source, pd = tokens
        codes[name] = (source, pd.strip())
    return codes


def freeze_corpus(directory: str | Path) -> list[Path]:
    """
    Convert the published PD codes to native diagram files.

    Each file starts with a comment naming the source code, followed by the
    ``serialize`` output of the converted diagram.

    Parameters
    ----------
    directory : str | Path
        Output directory; created if missing.

    Returns
    -------
    list[Path]
        Written files, in table order.

    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (source, pd) in published_pd_codes().items():
        diagram = parse_pd(pd, name=name)
        path = directory / f"{name}.txt"
        path.write_text(f"# {source}: {pd}\n" + serialize(diagram))
        logger.info("froze %s (%d arcs) to %s", source, diagram.arc_count, path)
        written.append(path)
    return written


@functools.lru_cache(maxsize=None)
def load_corpus(name: str) -> Diagram:
    """
    Load a bundled diagram.

    Parameters
    ----------
    name : str
        Corpus name, e.g. ``"3_1"``, ``"L2a1"`` or ``"L2a1_r1"``.

    Returns
    -------
    Diagram
        The diagram.

    Raises
    ------
    UnknownName
        If ``name`` is not in the corpus.

    """
    if name in _KNOTS or name in published_pd_codes():
        text = _links().joinpath(f"{name}.txt").read_text()
        return parse_crossing_list(text, name=name)
    words = _braid_words()
    if name not in words:
        raise UnknownName(name)
    strands, word = words[name]
    logger.debug("closing corpus braid %s: %s", name, word)
    return diagram_from_braid(word, strands, name=name)


def diagram_from_source(source: str | Path) -> Diagram:
    """
    Load a diagram from a file or the corpus.

    Files are read by suffix: ``.pd`` PD code, ``.gauss`` signed Gauss
    code, ``.braid`` braid word, anything else the native format. A source
    that is not an existing file is looked up in the corpus.

    Parameters
    ----------
    source : str | Path
        File path or corpus name.

    Returns
    -------
    Diagram
        The diagram, named after the file stem or corpus entry.

    """
    path = Path(source)
    if path.is_file():
        reader = _READERS.get(path.suffix.lower(), parse_crossing_list)
        logger.debug("reading %s with %s", path, reader.__name__)
        return reader(path.read_text(), name=path.stem)
    return load_corpus(str(source))


# %% local utils
def _links():
    return resources.files("torchquandle.data").joinpath("links")


@functools.lru_cache(maxsize=None)
def _braid_words():
    words = {}
    text = _links().joinpath("braids.txt").read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) < 2:
            raise ParseError("expected '<name> <strands> <generators...>'", lineno)
        name, *numbers = tokens
        try:
            strands, *word = (int(token) for token in numbers)
        except ValueError:
            raise ParseError(f"non-integer token in {raw.strip()!r}", lineno) from None
        words[name] = (strands, tuple(word))
    return words


def _base(name, names):
    head, sep, _ = name.rpartition("_")
    if sep and head in names:
        return head
    return None
