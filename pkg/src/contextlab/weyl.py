"""Exact symbolic algebra of generalized Pauli (Weyl) operators on n qudits.

An operator is stored in the normal form

    tau^p * prod_a X_a^{x_a} Z_a^{z_a}

where X and Z are the shift and clock matrices of a d-level system,

    X = sum_k |k><k+1|,    Z = sum_k w^k |k><k|,    w = exp(2*pi*i/d),

and tau = exp(i*pi/d) is a square root of w, tracked as an exponent mod 2d.
The half-angle phase group is the smallest one closed under products of X/Z
words: for qubits it contains i, so Y = i X Z is an exact symbol.

The defining commutation rule is X Z = w Z X, hence reordering
Z^a X^b -> X^b Z^a picks up w^{-ab}, i.e. a tau exponent of -2ab.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .errors import IncompatibleOperands, MatrixCapExceeded, OperatorFormatError

DEFAULT_MATRIX_CAP = 4096

_TOKEN_RE = re.compile(r"([XYZ])(\d+)(?:\^(\d+))?$")
_PHASE_RE = re.compile(r"(?:tau\^(-?\d+)|w\^(-?\d+)|omega\^(-?\d+)|-i|\+?i|-|\+)$")


@dataclass(frozen=True)
class WeylOperator:
    """A phase-tracked tensor of X^x Z^z factors over n qudits of dimension d.

    ``x`` and ``z`` hold per-site exponents reduced mod d; ``phase`` is the
    exponent of tau = exp(i*pi/d), reduced mod 2d.  Values are immutable and
    every operation below is a pure function.
    """

    n: int
    d: int
    x: tuple[int, ...]
    z: tuple[int, ...]
    phase: int = 0

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"qudit dimension must be >= 2, got {self.d}")
        if len(self.x) != self.n or len(self.z) != self.n:
            raise ValueError("exponent vectors must have length n")
        object.__setattr__(self, "x", tuple(v % self.d for v in self.x))
        object.__setattr__(self, "z", tuple(v % self.d for v in self.z))
        object.__setattr__(self, "phase", self.phase % (2 * self.d))

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, n: int, d: int) -> "WeylOperator":
        return cls(n, d, (0,) * n, (0,) * n, 0)

    @classmethod
    def shift(cls, site: int, n: int, d: int, power: int = 1) -> "WeylOperator":
        """X_site^power (sites are 1-based, as in operator text)."""
        return cls._single(site, n, d, x=power, z=0)

    @classmethod
    def clock(cls, site: int, n: int, d: int, power: int = 1) -> "WeylOperator":
        """Z_site^power."""
        return cls._single(site, n, d, x=0, z=power)

    @classmethod
    def pauli_y(cls, site: int, n: int, d: int) -> "WeylOperator":
        """Qubit Y = i X Z; defined for d = 2 only."""
        if d != 2:
            raise OperatorFormatError("Y is only defined for qubits (d=2)")
        op = cls._single(site, n, d, x=1, z=1)
        return WeylOperator(n, d, op.x, op.z, 1)

    @classmethod
    def _single(cls, site: int, n: int, d: int, x: int, z: int) -> "WeylOperator":
        if not 1 <= site <= n:
            raise OperatorFormatError(f"site index {site} outside 1..{n}")
        xs = [0] * n
        zs = [0] * n
        xs[site - 1] = x
        zs[site - 1] = z
        return cls(n, d, tuple(xs), tuple(zs), 0)

    # -- algebra ------------------------------------------------------------

    def _check_compatible(self, other: "WeylOperator") -> None:
        if self.n != other.n or self.d != other.d:
            raise IncompatibleOperands(
                f"operands live on (n={self.n}, d={self.d}) vs (n={other.n}, d={other.d})"
            )

    def __mul__(self, other: "WeylOperator") -> "WeylOperator":
        return weyl_mul(self, other)

    def dagger(self) -> "WeylOperator":
        return weyl_dagger(self)

    def power(self, k: int) -> "WeylOperator":
        """k-th power by repeated squaring on the normal form."""
        if k < 0:
            return self.dagger().power(-k)
        result = WeylOperator.identity(self.n, self.d)
        base = self
        while k:
            if k & 1:
                result = weyl_mul(result, base)
            base = weyl_mul(base, base)
            k >>= 1
        return result

    @property
    def is_identity_word(self) -> bool:
        """True when x = z = 0 (the operator is a pure phase)."""
        return all(v == 0 for v in self.x) and all(v == 0 for v in self.z)

    def is_hermitian(self) -> bool:
        return weyl_dagger(self) == self

    def phase_value(self) -> complex:
        """The scalar tau^phase as a complex number."""
        return complex(np.exp(1j * math.pi * self.phase / self.d))

    # -- dense realization ---------------------------------------------------

    def to_matrix(self, max_dim: int = DEFAULT_MATRIX_CAP) -> np.ndarray:
        return to_matrix(self, max_dim=max_dim)

    def __str__(self) -> str:
        return format_weyl(self)


def weyl_mul(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    """Normal-form product a*b.

    Per site, Z^{z_a} X^{x_b} = w^{-z_a x_b} X^{x_b} Z^{z_a}; exponents add
    mod d (X^d = Z^d = I exactly) and phases add mod 2d.
    """
    a._check_compatible(b)
    d = a.d
    reorder = sum(za * xb for za, xb in zip(a.z, b.x))
    phase = (a.phase + b.phase - 2 * reorder) % (2 * d)
    x = tuple((xa + xb) % d for xa, xb in zip(a.x, b.x))
    z = tuple((za + zb) % d for za, zb in zip(a.z, b.z))
    return WeylOperator(a.n, d, x, z, phase)


def weyl_dagger(a: WeylOperator) -> WeylOperator:
    """Conjugate transpose; satisfies a * a.dagger() = identity exactly."""
    d = a.d
    cross = sum(xa * za for xa, za in zip(a.x, a.z))
    phase = (-a.phase - 2 * cross) % (2 * d)
    x = tuple((-v) % d for v in a.x)
    z = tuple((-v) % d for v in a.z)
    return WeylOperator(a.n, d, x, z, phase)


def symplectic_product(a: WeylOperator, b: WeylOperator) -> int:
    """s with a*b = w^s b*a, i.e. sum_a (x^A_a z^B_a - z^A_a x^B_a) mod d."""
    a._check_compatible(b)
    s = sum(xa * zb - za * xb for xa, za, xb, zb in zip(a.x, a.z, b.x, b.z))
    return s % a.d


def commutes(a: WeylOperator, b: WeylOperator) -> bool:
    return symplectic_product(a, b) == 0


def weyl_order(a: WeylOperator) -> int:
    """Smallest m >= 1 with a^m a pure phase; divides d."""
    for m in range(1, a.d + 1):
        if all((m * v) % a.d == 0 for v in a.x) and all((m * v) % a.d == 0 for v in a.z):
            return m
    return a.d


def _site_matrix(d: int, x: int, z: int) -> np.ndarray:
    w = np.exp(2j * np.pi / d)
    m = np.zeros((d, d), dtype=complex)
    for k in range(d):
        # X^x Z^z |k> = w^{zk} |k-x>
        m[(k - x) % d, k] = w ** (z * k)
    return m


def to_matrix(a: WeylOperator, max_dim: int = DEFAULT_MATRIX_CAP) -> np.ndarray:
    """Dense d^n x d^n unitary; faithful under products and daggers."""
    dim = a.d ** a.n
    if dim > max_dim:
        raise MatrixCapExceeded(f"d^n = {dim} exceeds cap {max_dim}")
    factors = [_site_matrix(a.d, a.x[i], a.z[i]) for i in range(a.n)]
    full = reduce(np.kron, factors, np.eye(1, dtype=complex))
    return a.phase_value() * full


@dataclass(frozen=True)
class MeasurementContext:
    """A set of pairwise commuting observables, measured jointly."""

    observables: tuple[WeylOperator, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.observables:
            raise ValueError("context needs at least one observable")
        first = self.observables[0]
        for op in self.observables[1:]:
            first._check_compatible(op)
        for i, a in enumerate(self.observables):
            for b in self.observables[i + 1:]:
                if not commutes(a, b):
                    raise IncompatibleOperands(
                        f"context observables do not commute: {a} vs {b}"
                    )
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple(format_weyl(o) for o in self.observables)
            )
        elif len(self.labels) != len(self.observables):
            raise ValueError("one label per observable")

    @property
    def n(self) -> int:
        return self.observables[0].n

    @property
    def d(self) -> int:
        return self.observables[0].d


# -- text grammar ------------------------------------------------------------
#
#   operator := [phase] token*
#   phase    := "+" | "-" | "i" | "-i" | "tau^INT" | "w^INT" | "omega^INT"
#   token    := ("X"|"Z"|"Y") SITE ["^" EXP]          (SITE is 1-based)
#
# Tokens multiply left to right, so "Z1 X1" folds the reorder phase in.


def parse_weyl(text: str, n: int, d: int) -> WeylOperator:
    """Parse operator text into normal form; inverse of :func:`format_weyl`."""
    op = WeylOperator.identity(n, d)
    parts = text.split()
    if not parts:
        return op
    start = 0
    m = _PHASE_RE.match(parts[0])
    if m:
        tag = parts[0]
        if m.group(1) is not None:
            op = WeylOperator(n, d, op.x, op.z, int(m.group(1)))
        elif m.group(2) is not None or m.group(3) is not None:
            k = int(m.group(2) if m.group(2) is not None else m.group(3))
            op = WeylOperator(n, d, op.x, op.z, 2 * k)
        elif tag == "-":
            op = WeylOperator(n, d, op.x, op.z, d)
        elif tag in ("i", "+i"):
            if d % 2 != 0:
                raise OperatorFormatError(f"phase i is not a tau power for d={d}")
            op = WeylOperator(n, d, op.x, op.z, d // 2)
        elif tag == "-i":
            if d % 2 != 0:
                raise OperatorFormatError(f"phase -i is not a tau power for d={d}")
            op = WeylOperator(n, d, op.x, op.z, d + d // 2)
        start = 1
    for token in parts[start:]:
        if token == "I":
            continue
        m = _TOKEN_RE.match(token)
        if not m:
            raise OperatorFormatError(f"unrecognized token {token!r}")
        kind, site, exp = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        if kind == "X":
            factor = WeylOperator.shift(site, n, d, exp)
        elif kind == "Z":
            factor = WeylOperator.clock(site, n, d, exp)
        else:
            factor = WeylOperator.pauli_y(site, n, d).power(exp)
        op = weyl_mul(op, factor)
    return op


def format_weyl(a: WeylOperator) -> str:
    """Canonical text for a normal-form operator; round-trips via parse_weyl."""
    parts = []
    p = a.phase
    if p:
        if p == a.d:
            parts.append("-")
        elif a.d % 2 == 0 and p == a.d // 2:
            parts.append("i")
        elif a.d % 2 == 0 and p == a.d + a.d // 2:
            parts.append("-i")
        else:
            parts.append(f"tau^{p}")
    for site in range(a.n):
        if a.x[site]:
            suffix = f"^{a.x[site]}" if a.x[site] != 1 else ""
            parts.append(f"X{site + 1}{suffix}")
        if a.z[site]:
            suffix = f"^{a.z[site]}" if a.z[site] != 1 else ""
            parts.append(f"Z{site + 1}{suffix}")
    if not parts:
        return "I"
    if parts == ["-"]:
        return "- I"
    if parts and parts[0] in ("i", "-i") and len(parts) == 1:
        return f"{parts[0]} I"
    return " ".join(parts)
