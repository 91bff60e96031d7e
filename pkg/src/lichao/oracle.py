"""Brute-force envelope ground truth.

A flat append-only list of lines and segments; every query is answered by
evaluating all entries whose range covers x and taking the minimum.  This
is the independent oracle the real structures are differentially tested
against: it shares no code path with them, only the definition of the
answer.

O(N) per query, vectorized over the entry list; workloads are expected to
stay small (<= ~10^4 entries).  Single-threaded use only.
"""

from typing import Optional

import numpy as np

from .core import InvalidSegmentError

_I64 = np.iinfo(np.int64)


class NaiveSet:
    """Append-only set of lines / segments with linear-scan minimum queries."""

    def __init__(self):
        cap = 16
        self._ks = np.empty(cap, dtype=np.int64)
        self._bs = np.empty(cap, dtype=np.int64)
        self._xls = np.empty(cap, dtype=np.int64)
        self._xrs = np.empty(cap, dtype=np.int64)
        self._n = 0

    def __len__(self) -> int:
        return self._n

    def _append(self, k: int, b: int, xl: int, xr: int) -> None:
        n = self._n
        if n == len(self._ks):
            for name in ("_ks", "_bs", "_xls", "_xrs"):
                old = getattr(self, name)
                grown = np.empty(2 * n, dtype=np.int64)
                grown[:n] = old
                setattr(self, name, grown)
        self._ks[n] = k
        self._bs[n] = b
        self._xls[n] = xl
        self._xrs[n] = xr
        self._n = n + 1

    def add_line(self, line) -> None:
        """Append a full line (valid at every coordinate)."""
        k, b = line
        self._append(k, b, _I64.min, _I64.max)

    def add_segment(self, line, xl: int, xr: int) -> None:
        """Append a line valid only on [xl, xr]."""
        if xl > xr:
            raise InvalidSegmentError(f"segment bounds reversed: [{xl}, {xr}]")
        k, b = line
        self._append(k, b, xl, xr)

    def query(self, x: int) -> Optional[int]:
        """Minimum over all entries covering x; None if none apply."""
        n = self._n
        if n == 0:
            return None
        mask = (self._xls[:n] <= x) & (x <= self._xrs[:n])
        if not mask.any():
            return None
        vals = self._ks[:n][mask] * x + self._bs[:n][mask]
        return int(vals.min())
