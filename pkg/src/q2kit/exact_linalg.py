"""Exact dense matrices over the rationals, Householder projector families.

Scalars are :class:`fractions.Fraction`.  Products clear denominators first
and multiply Python integers, which keeps witness-sized (a few hundred rows)
products cheap without giving up exactness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations
from math import lcm
from typing import NamedTuple

import numpy as np


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"refusing to convert {type(x).__name__} to an exact rational")


class RationalMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data):
        rows = [tuple(_frac(x) for x in row) for row in data]
        cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        self.rows = len(rows)
        self.cols = cols
        self._data = tuple(rows)

    @classmethod
    def _wrap(cls, rows: tuple) -> RationalMatrix:
        m = cls.__new__(cls)
        m._data = rows
        m.rows = len(rows)
        m.cols = len(rows[0]) if rows else 0
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> RationalMatrix:
        cols = rows if cols is None else cols
        z = Fraction(0)
        return cls._wrap(tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values) -> RationalMatrix:
        values = [_frac(v) for v in values]
        n = len(values)
        z = Fraction(0)
        return cls._wrap(tuple(tuple(values[i] if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> RationalMatrix:
        cols = rows if cols is None else cols
        return cls._wrap(tuple((Fraction(1),) * cols for _ in range(rows)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in r] for r in self._data]})"

    def _check_same(self, other: RationalMatrix):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same(other)
        return RationalMatrix._wrap(tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self._data, other._data)))

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        self._check_same(other)
        return RationalMatrix._wrap(tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self._data, other._data)))

    def __neg__(self) -> RationalMatrix:
        return RationalMatrix._wrap(tuple(tuple(-x for x in r) for r in self._data))

    def scale(self, c) -> RationalMatrix:
        c = _frac(c)
        return RationalMatrix._wrap(tuple(tuple(c * x for x in r) for r in self._data))

    def __rmul__(self, c) -> RationalMatrix:
        return self.scale(c)

    def shift(self, lam) -> RationalMatrix:
        """``self - lam * I``."""
        lam = _frac(lam)
        if self.rows != self.cols:
            raise ValueError("shift needs a square matrix")
        return RationalMatrix._wrap(
            tuple(tuple(x - lam if i == j else x for j, x in enumerate(r)) for i, r in enumerate(self._data))
        )

    @property
    def T(self) -> RationalMatrix:
        return RationalMatrix._wrap(tuple(zip(*self._data)) if self.rows else ())

    def _as_integers(self) -> tuple[list[list[int]], int]:
        den = reduce(lcm, (x.denominator for r in self._data for x in r), 1)
        return [[x.numerator * (den // x.denominator) for x in r] for r in self._data], den

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        a, da = self._as_integers()
        b, db = other._as_integers()
        bt = list(zip(*b)) if b else [()] * other.cols
        den = da * db
        out = []
        for r in a:
            nz = [(k, x) for k, x in enumerate(r) if x]
            out.append(tuple(Fraction(sum(x * col[k] for k, x in nz), den) for col in bt))
        return RationalMatrix._wrap(tuple(out))

    def matvec(self, v) -> list[Fraction]:
        v = [_frac(x) for x in v]
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum((x * y for x, y in zip(r, v)), Fraction(0)) for r in self._data]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(self._data[i][j] == self._data[j][i] for i in range(self.rows) for j in range(i))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def nonzero_mask(self) -> np.ndarray:
        return np.array([[x != 0 for x in r] for r in self._data], dtype=bool).reshape(self.rows, self.cols)

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self._data], dtype=float).reshape(self.rows, self.cols)

    def block(self, i: int, j: int, size: int) -> RationalMatrix:
        return RationalMatrix._wrap(tuple(r[j * size : (j + 1) * size] for r in self._data[i * size : (i + 1) * size]))

    def trace(self) -> Fraction:
        return sum((self._data[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def to_text(self) -> str:
        tag = "symmetric" if self.is_symmetric() else "general"
        lines = [f"matrix {self.rows} {self.cols} {tag}"]
        lines += [" ".join(str(x) for x in r) for r in self._data]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, strict: bool = True) -> RationalMatrix:
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        head = lines[0].split()
        if len(head) != 4 or head[0] != "matrix" or head[3] not in ("symmetric", "general"):
            raise ValueError(f"bad matrix header {lines[0]!r}")
        rows, cols = int(head[1]), int(head[2])
        body = lines[1:]
        if len(body) != rows:
            raise ValueError(f"expected {rows} matrix rows, found {len(body)}")
        data = [[Fraction(tok) for tok in ln.split()] for ln in body]
        if any(len(r) != cols for r in data):
            raise ValueError(f"expected {cols} entries per row")
        m = cls._wrap(tuple(tuple(r) for r in data)) if rows else cls.zeros(0, cols)
        if strict and head[3] == "symmetric" and not m.is_symmetric():
            raise ValueError("matrix flagged symmetric is not symmetric")
        return m


def kron(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Kronecker product; block (i, j) of the result is ``a[i, j] * b``."""
    rows = []
    for ra in a:
        for rb in b:
            rows.append(tuple(x * y for x in ra for y in rb))
    return RationalMatrix._wrap(tuple(rows))


def kron_vec(v, w) -> list[Fraction]:
    return [_frac(x) * _frac(y) for x in v for y in w]


class Annihilation(NamedTuple):
    annihilates: bool
    first_attained: bool
    second_attained: bool

    @property
    def exactly_two(self) -> bool:
        """Spectrum is exactly {lam1, lam2} (symmetric matrices are diagonalizable)."""
        return self.annihilates and self.first_attained and self.second_attained


def annihilates(m: RationalMatrix, lam1, lam2) -> Annihilation:
    """Check ``(M - lam1 I)(M - lam2 I) == 0`` exactly, and whether each factor is nonzero."""
    if not m.is_symmetric():
        raise ValueError("annihilation certificate needs a symmetric matrix")
    lam1, lam2 = _frac(lam1), _frac(lam2)
    if lam1 == lam2:
        raise ValueError("eigenvalue candidates must be distinct")
    a, b = m.shift(lam1), m.shift(lam2)
    return Annihilation((a @ b).is_zero(), not b.is_zero(), not a.is_zero())


def annihilated_by(m: RationalMatrix, lams) -> bool:
    """True iff the product of ``M - lam I`` over the distinct ``lams`` vanishes."""
    lams = sorted({_frac(x) for x in lams})
    if not lams:
        return m.rows == 0
    acc = m.shift(lams[0])
    for lam in lams[1:]:
        acc = acc @ m.shift(lam)
    return acc.is_zero()


# -- Householder projector families --------------------------------------------


def unit_profile(k: int) -> tuple[int, ...]:
    """Integer direction ``w`` with ``u = w / |w|``: all ones for odd k, (2, 1, ..., 1) for even k."""
    if k < 1:
        raise ValueError(f"projector family needs k >= 1, got {k}")
    return (1,) * k if k % 2 else (2,) + (1,) * (k - 1)


@dataclass(frozen=True)
class ProjectorFamily:
    k: int
    profile: tuple[int, ...]
    Q: RationalMatrix = field(repr=False)
    J: tuple[RationalMatrix, ...] = field(repr=False)

    @property
    def norm_sq(self) -> int:
        return sum(w * w for w in self.profile)

    def column(self, i: int) -> list[Fraction]:
        return [self.Q[r, i] for r in range(self.k)]

    def scaled_columns(self) -> np.ndarray:
        """``norm_sq * Q`` as an int64 array (column i is ``norm_sq * q_i``)."""
        d = self.norm_sq
        w = np.array(self.profile, dtype=np.int64)
        return d * np.eye(self.k, dtype=np.int64) - 2 * np.outer(w, w)


@lru_cache(maxsize=None)
def build_projector_family(k: int) -> ProjectorFamily:
    w = unit_profile(k)
    d = sum(x * x for x in w)
    # uu^T = w w^T / d; for even k this is 4/(k+3) once and 1/(k+3) for the rest
    assert Fraction(w[0] ** 2, d) + Fraction(k - 1, d) * w[-1] ** 2 == 1
    q = RationalMatrix._wrap(
        tuple(tuple(Fraction(int(i == j)) - Fraction(2 * w[i] * w[j], d) for j in range(k)) for i in range(k))
    )
    cols = [[q[r, i] for r in range(k)] for i in range(k)]
    js = tuple(RationalMatrix._wrap(tuple(tuple(a * b for b in c) for a in c)) for c in cols)
    return ProjectorFamily(k, w, q, js)


def subset_projector(fam: ProjectorFamily, subset) -> RationalMatrix:
    """Sum of ``J_i`` over ``i`` in ``subset``, i.e. ``Q D_K Q^T``."""
    subset = sorted(set(subset))
    if any(not 0 <= i < fam.k for i in subset):
        raise IndexError(f"subset {subset} out of range for k={fam.k}")
    acc = RationalMatrix.zeros(fam.k)
    for i in subset:
        acc = acc + fam.J[i]
    return acc


@dataclass
class NowhereZeroReport:
    k: int
    mode: str
    checked: int = 0
    zero_entries: dict = field(default_factory=dict)
    # subset -> list of failed scalar conditions ("half", "quarter")
    condition_failures: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.zero_entries

    @property
    def conditions_ok(self) -> bool:
        return not self.condition_failures


EXHAUSTIVE_MAX_K = 20


def _conditions(fam: ProjectorFamily, subset) -> list[str]:
    # u_K^T u_K = S/d; checked only for nonempty proper subsets
    d = fam.norm_sq
    sq = [w * w for w in fam.profile]
    s = sum(sq[i] for i in subset)
    failed = []
    if 2 * s == d:
        failed.append("half")
    if any(4 * (d - s) * sq[i] == d * d for i in subset):
        failed.append("quarter")
    return failed


def verify_nowhere_zero(fam: ProjectorFamily, mode: str = "exhaustive", subsets=None) -> NowhereZeroReport:
    """Scan ``Q D_K Q^T`` for zero entries.

    ``exhaustive`` walks every nonempty proper subset in Gray-code order,
    updating an integer matrix ``norm_sq**2 * sum J_i`` by one rank-one term per
    step.  ``targeted`` scans only the given subsets.
    """
    k = fam.k
    rep = NowhereZeroReport(k, mode)
    cols = fam.scaled_columns()
    outer = [np.outer(cols[:, i], cols[:, i]) for i in range(k)]

    def record(subset, acc):
        rep.checked += 1
        zeros = np.argwhere(acc == 0)
        if len(zeros):
            rep.zero_entries[subset] = [tuple(map(int, z)) for z in zeros]
        if 0 < len(subset) < k:
            failed = _conditions(fam, subset)
            if failed:
                rep.condition_failures[subset] = failed

    if mode == "exhaustive":
        if k > EXHAUSTIVE_MAX_K:
            raise ValueError(f"exhaustive scan limited to k <= {EXHAUSTIVE_MAX_K}, got {k}")
        acc = np.zeros((k, k), dtype=np.int64)
        mask = 0
        for step in range(1, 1 << k):
            bit = (step & -step).bit_length() - 1
            mask ^= 1 << bit
            acc = acc + outer[bit] if mask >> bit & 1 else acc - outer[bit]
            if mask == (1 << k) - 1:
                continue
            record(tuple(i for i in range(k) if mask >> i & 1), acc)
    elif mode == "targeted":
        for subset in subsets or ():
            subset = tuple(sorted(set(subset)))
            if any(not 0 <= i < k for i in subset):
                raise IndexError(f"subset {subset} out of range for k={k}")
            acc = sum((outer[i] for i in subset), np.zeros((k, k), dtype=np.int64))
            record(subset, acc)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return rep


def proper_subsets(k: int):
    for r in range(1, k):
        yield from combinations(range(k), r)
