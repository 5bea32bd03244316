"""
Lasso frames: finite deterministic serial transition systems.

Every state starts exactly one path, so paths are identified with states.
The subpath relation is the reflexive-transitive closure of the successor
function.

"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Tuple
import networkx as nx
import numpy as np
from ..validation import validate_oracle_bounds


@dataclass(frozen=True)
class LassoFrame:
    """
    Transition system with states ``0, ..., n - 1`` and a total successor
    function.

    Attributes
    ----------
    succ : tuple[int, ...]
        ``succ[s]`` is the unique successor of state ``s``.

    """

    succ: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.succ)
        if n == 0:
            raise ValueError("a frame needs at least one state")
        if any((not 0 <= s < n) for s in self.succ):
            raise ValueError("successors must be states of the frame")

    @property
    def n(self) -> int:
        return len(self.succ)

    def to_dict(self) -> dict:
        return {"n": self.n, "succ": list(self.succ)}

    @staticmethod
    def from_dict(d: dict) -> "LassoFrame":
        frame = LassoFrame(tuple(d["succ"]))
        if d.get("n", frame.n) != frame.n:
            raise ValueError("n does not match the length of succ")
        return frame


@dataclass(frozen=True, eq=False)
class PathStructure:
    """
    Relations of the first-order path signature over the states of a frame.

    Attributes
    ----------
    le : array of bool, shape (n, n)
        ``le[s, t]`` if the path of ``t`` is a suffix of the path of ``s``.
    lt : array of bool, shape (n, n)
        `le` without the identity.
    succ : array of int, shape (n,)

    """

    le: np.ndarray
    lt: np.ndarray
    succ: np.ndarray

    @property
    def n(self) -> int:
        return self.succ.size


@lru_cache(maxsize=4096)
def path_structure(frame: LassoFrame) -> PathStructure:
    """
    Builds the path structure of a frame.

    Parameters
    ----------
    frame : LassoFrame

    Returns
    -------
    PathStructure

    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(frame.n))
    graph.add_edges_from(enumerate(frame.succ))
    closure = nx.transitive_closure(graph, reflexive=True)
    le = nx.to_numpy_array(closure, nodelist=range(frame.n), dtype=bool, weight=None)
    lt = le & ~np.eye(frame.n, dtype=bool)
    succ = np.array(frame.succ, dtype=int)
    for array in (le, lt, succ):
        array.setflags(write=False)
    return PathStructure(le, lt, succ)


def enumerate_lasso_frames(n_max: int) -> Iterator[LassoFrame]:
    """
    Yields every successor function on ``n`` states for ``n = 1, ..., n_max``.

    Frames are not quotiented by isomorphism: there are ``sum(n ** n)``
    frames, in increasing size and lexicographic successor order.

    Parameters
    ----------
    n_max : int
        At most ``MAX_FRAME_STATES``.

    Raises
    ------
    ValueError
        If `n_max` is out of bounds.

    Examples
    --------
    >>> len(list(enumerate_lasso_frames(3)))
    32

    """
    validate_oracle_bounds({"n_max": n_max, "n_atoms": 0})
    for n in range(1, n_max + 1):
        for succ in itertools.product(range(n), repeat=n):
            yield LassoFrame(succ)


def count_lasso_frames(n_max: int) -> int:
    return sum(n**n for n in range(1, n_max + 1))


def frames_from(succs: Sequence[Sequence[int]]) -> Iterator[LassoFrame]:
    for succ in succs:
        yield LassoFrame(tuple(succ))
