"""Base invariant class"""

__all__ = ["AbstractInvariant"]

import logging

from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from types import SimpleNamespace
from typing import Any

from .errors import ConfigError

logger = logging.getLogger(__name__)


class AbstractInvariant(ABC):
    """
    Abstract base class for link invariants evaluated over a batch of links.

    Subclasses store the coloring algebra with ``set_algebra`` and the
    diagrams with ``set_links``; ``_engine`` evaluates a single diagram.
    Calling the instance evaluates every link, in order.
    """

    def __init__(self, cap: int | None = None, workers: int = 1):
        """
        Initialize the invariant.

        Parameters
        ----------
        cap : int | None, optional
            Homset size cap passed to the engine. The default is ``None``
            (use ``TORCHQUANDLE_CAP``).
        workers : int, optional
            Number of threads evaluating links concurrently.
            The default is ``1``.

        """
        if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
            raise ConfigError(f"workers must be a positive integer, got {workers!r}")
        self.cap = cap
        self.workers = workers
        self.algebra = SimpleNamespace()
        self.links = SimpleNamespace(diagrams=())

    @abstractmethod
    def set_algebra(self, *args, **kwargs):
        """
        Define the coloring quandle and related parameters.
        """
        raise NotImplementedError("Subclasses must implement `set_algebra`.")

    @abstractmethod
    def set_links(self, *args, **kwargs):
        """
        Define the diagrams to evaluate.
        """
        raise NotImplementedError("Subclasses must implement `set_links`.")

    @staticmethod
    @abstractmethod
    def _engine(diagram, *args, **kwargs):
        """
        Evaluate the invariant on one diagram.
        """
        raise NotImplementedError("Subclasses must implement `_engine`.")

    def _collect(self, results: list[Any]) -> Any:
        """Combine per-link results; identity by default."""
        return results

    def __call__(self) -> Any:
        """
        Evaluate the invariant on every link.

        Results are ordered like the links, whatever the number of workers.
        """
        if not hasattr(self.algebra, "quandle"):
            raise ConfigError("call `set_algebra` before evaluating")
        engine = partial(self._engine, cap=self.cap, **vars(self.algebra))
        diagrams = tuple(self.links.diagrams)
        logger.info(
            "%s: evaluating %d links with %d worker(s)",
            type(self).__name__,
            len(diagrams),
            self.workers,
        )
        if self.workers > 1 and len(diagrams) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(engine, diagrams))
        else:
            results = [engine(d) for d in diagrams]
        return self._collect(results)
