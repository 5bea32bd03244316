"""
Valuations of atoms over the states of a frame.

A :class:`ValuationTable` stores many valuations at once as a boolean array
so that formulas are evaluated under every valuation in a single pass.

"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple
import numpy as np
from ..validation import validate_oracle_bounds


class UnresolvedSymbolError(ValueError):
    """Raised when evaluation meets an unbound variable or predicate."""


@dataclass(frozen=True)
class Valuation:
    """
    Assignment of a set of states to each atom.

    Attributes
    ----------
    extensions : Mapping[str, Tuple[int, ...]]
        sorted states where each atom holds.

    """

    extensions: Mapping[str, Tuple[int, ...]]

    def __getitem__(self, atom: str) -> Tuple[int, ...]:
        return self.extensions[atom]

    @property
    def atoms(self) -> List[str]:
        return list(self.extensions)

    def mask(self, atom: str, n: int) -> np.ndarray:
        """Boolean vector of length `n` of the states where `atom` holds."""
        result = np.zeros(n, dtype=bool)
        result[list(self.extensions[atom])] = True
        return result

    def is_subset(self, other: "Valuation") -> bool:
        """Checks ``h1(q) ⊆ h2(q)`` for every atom of `self`."""
        return all(set(v) <= set(other.extensions.get(k, ())) for k, v in self.extensions.items())

    def to_dict(self) -> Dict[str, List[int]]:
        return {k: list(v) for k, v in self.extensions.items()}

    @staticmethod
    def from_masks(masks: Mapping[str, np.ndarray]) -> "Valuation":
        extensions = {k: tuple(int(s) for s in np.flatnonzero(v)) for k, v in masks.items()}
        return Valuation(extensions)


class ValuationTable:
    """
    Stack of valuations over the same atoms and states.

    Attributes
    ----------
    atoms : list[str]
    values : array of bool, shape (V, k, n)
        ``values[r, j, s]`` if atom ``atoms[j]`` holds at state ``s`` in
        valuation ``r``.

    """

    def __init__(self, atoms: Sequence[str], values: np.ndarray):
        atoms = list(atoms)
        if values.ndim != 3 or values.shape[1] != len(atoms):
            msg = "values must have shape (V, {}, n)".format(len(atoms))
            raise ValueError(msg)
        self.atoms = atoms
        self.values = values
        self._index = {atom: k for k, atom in enumerate(atoms)}

    @property
    def size(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.shape[2]

    def __contains__(self, atom: str) -> bool:
        return atom in self._index

    def column(self, atom: str) -> np.ndarray:
        """Extensions of `atom` in every valuation, shape (V, n)."""
        if atom not in self._index:
            raise UnresolvedSymbolError("no valuation for atom `{}`".format(atom))
        return self.values[:, self._index[atom], :]

    def valuation(self, row: int) -> Valuation:
        masks = {atom: self.values[row, k] for k, atom in enumerate(self.atoms)}
        return Valuation.from_masks(masks)

    @staticmethod
    def enumerate(
        atoms: Sequence[str], n: int, fixed: Optional[Mapping[str, np.ndarray]] = None
    ) -> "ValuationTable":
        """
        Builds the table of every valuation of `atoms` on `n` states.

        Row ``r`` assigns state ``s`` to the ``j``-th enumerated atom when bit
        ``j * n + s`` of ``r`` is set, so setting one more bit of a row gives
        a pointwise larger valuation.

        Parameters
        ----------
        atoms : Sequence[str]
        n : int
            number of states.
        fixed : Mapping[str, array], optional
            Atoms held at the given boolean mask in every row. They are not
            enumerated.

        Returns
        -------
        ValuationTable
            ``2 ** (n * k)`` rows, ``k`` being the number of enumerated atoms.

        Raises
        ------
        ValueError
            If the number of valuation bits exceeds the enumeration guard.

        """
        fixed = dict() if fixed is None else dict(fixed)
        free = [x for x in atoms if x not in fixed]
        validate_oracle_bounds({"n_max": n, "n_atoms": len(free)})
        n_bits = n * len(free)
        rows = np.arange(2**n_bits, dtype=np.int64)
        bits = ((rows[:, None] >> np.arange(n_bits)) & 1).astype(bool)
        enumerated = bits.reshape(rows.size, len(free), n)
        columns = list()
        for atom in atoms:
            if atom in fixed:
                mask = np.asarray(fixed[atom], dtype=bool)
                columns.append(np.broadcast_to(mask, (rows.size, n)))
            else:
                columns.append(enumerated[:, free.index(atom), :])
        values = np.stack(columns, axis=1) if columns else np.zeros((rows.size, 0, n), bool)
        return ValuationTable(atoms, values)

    @staticmethod
    def from_valuations(atoms: Sequence[str], n: int, valuations: Sequence[Valuation]):
        values = np.zeros((len(valuations), len(atoms), n), dtype=bool)
        for r, h in enumerate(valuations):
            for k, atom in enumerate(atoms):
                values[r, k] = h.mask(atom, n)
        return ValuationTable(atoms, values)

    def single_bit_successors(self) -> np.ndarray:
        """
        Pairs ``(r1, r2)`` of enumerated rows whose valuations differ in one
        state of one atom, the second being the larger.

        Only meaningful for tables built by :meth:`enumerate` without fixed
        atoms.

        Returns
        -------
        array of int, shape (m, 2)

        """
        n_bits = self.values.shape[1] * self.n
        rows = np.arange(self.size, dtype=np.int64)
        pairs = list()
        for b in range(n_bits):
            lower = rows[(rows >> b) & 1 == 0]
            pairs.append(np.stack([lower, lower | (1 << b)], axis=1))
        if not pairs:
            return np.zeros((0, 2), dtype=np.int64)
        return np.concatenate(pairs)
