"""Dense linear algebra for small systems: spectral projectors, joint
eigenspaces of commuting contexts, transition amplitudes, and ABL
pre/post-selection probabilities.

Everything runs in floating point; an amplitude "vanishes" when its modulus
is below VANISH_TOL.  All identities verified by this package are exact and
well separated from the nonzero values that occur (the smallest nonzero
magnitudes are >= 1/8), so the threshold is not delicate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation, IncompatibleOperands, UndefinedDistribution
from .weyl import (
    DEFAULT_MATRIX_CAP,
    MeasurementContext,
    WeylOperator,
    to_matrix,
    weyl_mul,
    weyl_order,
)

VANISH_TOL = 1e-10
EIGENVALUE_TOL = 1e-8


@dataclass(frozen=True)
class StateVector:
    """A unit vector in a d^n dimensional Hilbert space."""

    amplitudes: np.ndarray

    def __post_init__(self):
        vec = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        norm = np.linalg.norm(vec)
        if abs(norm - 1.0) > 1e-8:
            raise ContractViolation(f"state norm {norm} is not 1")
        object.__setattr__(self, "amplitudes", vec / norm)

    @classmethod
    def from_amplitudes(cls, vec) -> "StateVector":
        """Normalize an arbitrary nonzero vector."""
        vec = np.asarray(vec, dtype=complex).reshape(-1)
        norm = np.linalg.norm(vec)
        if norm < 1e-12:
            raise ContractViolation("cannot normalize the zero vector")
        return cls(vec / norm)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def overlap(self, other: "StateVector") -> complex:
        """<self|other>."""
        if self.dim != other.dim:
            raise IncompatibleOperands("state dimensions differ")
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True)
class OutcomeProjector:
    """Projector onto a joint outcome of a commuting context."""

    context: MeasurementContext
    outcome: tuple[complex, ...]
    matrix: np.ndarray

    @property
    def rank(self) -> int:
        return int(round(np.trace(self.matrix).real))


def spectral_projectors(
    op: WeylOperator, max_dim: int = DEFAULT_MATRIX_CAP
) -> dict[complex, np.ndarray]:
    """Eigenvalue -> projector for a Weyl operator.

    Uses the group-averaging formula: if op^m = tau^q I (m is the operator's
    order, found symbolically), the spectrum lies on the m-th roots of tau^q
    and P_lambda = (1/m) sum_k lambda^{-k} op^k.  Candidate eigenvalues with
    zero rank are dropped.  Projectors are complete and mutually orthogonal
    by construction; eigenvalues are returned sorted by phase angle.
    """
    m = weyl_order(op)
    power = op.power(m)
    assert power.is_identity_word
    q = power.phase
    d = op.d
    base = to_matrix(op, max_dim=max_dim)
    mats = [np.eye(d ** op.n, dtype=complex)]
    for _ in range(m - 1):
        mats.append(mats[-1] @ base)
    out: dict[complex, np.ndarray] = {}
    for j in range(m):
        lam = np.exp(1j * (np.pi * q / (d * m) + 2 * np.pi * j / m))
        proj = sum(lam ** (-k) * mats[k] for k in range(m)) / m
        rank = round(np.trace(proj).real)
        if rank > 0:
            out[complex(lam)] = proj
    items = sorted(out.items(), key=lambda kv: round(np.angle(kv[0]) % (2 * np.pi), 9))
    return dict(items)


def projector_for(
    decomposition: dict[complex, np.ndarray], value: complex, tol: float = EIGENVALUE_TOL
) -> np.ndarray | None:
    """Nearest-eigenvalue lookup; None when value is not in the spectrum."""
    for lam, proj in decomposition.items():
        if abs(lam - value) < tol:
            return proj
    return None


def outcome_projector(
    ctx: MeasurementContext,
    outcomes,
    max_dim: int = DEFAULT_MATRIX_CAP,
) -> OutcomeProjector:
    """Joint projector for one outcome tuple of a commuting context.

    The product of the per-observable spectral projectors is the joint
    projector because the observables commute.  An outcome value outside an
    observable's spectrum yields the zero projector (rank 0).
    """
    outcomes = tuple(complex(v) for v in outcomes)
    if len(outcomes) != len(ctx.observables):
        raise ContractViolation("one outcome per observable")
    dim = ctx.d ** ctx.n
    mat = np.eye(dim, dtype=complex)
    for op, val in zip(ctx.observables, outcomes):
        proj = projector_for(spectral_projectors(op, max_dim=max_dim), val)
        if proj is None:
            mat = np.zeros((dim, dim), dtype=complex)
            break
        mat = mat @ proj
    return OutcomeProjector(ctx, outcomes, mat)


def enumerate_outcomes(
    ctx: MeasurementContext, max_dim: int = DEFAULT_MATRIX_CAP
) -> list[OutcomeProjector]:
    """All joint outcomes with nonzero rank, in deterministic order."""
    import itertools

    spectra = [
        list(spectral_projectors(op, max_dim=max_dim).keys()) for op in ctx.observables
    ]
    found = []
    for combo in itertools.product(*spectra):
        proj = outcome_projector(ctx, combo, max_dim=max_dim)
        if proj.rank > 0:
            found.append(proj)
    return found


def joint_eigenspace(
    ctx: MeasurementContext,
    outcomes,
    max_dim: int = DEFAULT_MATRIX_CAP,
) -> list[StateVector]:
    """Orthonormal basis of the joint eigenspace; empty when infeasible."""
    proj = outcome_projector(ctx, outcomes, max_dim=max_dim)
    if proj.rank == 0:
        return []
    vals, vecs = np.linalg.eigh(proj.matrix)
    basis = [StateVector(vecs[:, i]) for i in range(len(vals)) if vals[i] > 0.5]
    if len(basis) != proj.rank:
        raise ContractViolation("projector rank does not match eigenspace dimension")
    return basis


def amplitude(psi_i: StateVector, proj: OutcomeProjector | np.ndarray, psi_f: StateVector) -> complex:
    """<psi_i| P |psi_f>."""
    mat = proj.matrix if isinstance(proj, OutcomeProjector) else np.asarray(proj)
    if mat.shape != (psi_i.dim, psi_f.dim):
        raise IncompatibleOperands("projector shape does not match state dimensions")
    return complex(psi_i.amplitudes.conj() @ mat @ psi_f.amplitudes)


def abl_probability(
    psi_i: StateVector,
    psi_f: StateVector,
    projectors,
    tol: float = VANISH_TOL,
) -> list[float]:
    """Aharonov-Bergmann-Lebowitz conditional probabilities.

    P(k) is proportional to |<psi_f| Pi_k |psi_i>|^2, normalized over the
    complete orthogonal family {Pi_k}.  Raises UndefinedDistribution when
    every amplitude vanishes (pre/post pair incompatible with the context).
    """
    weights = []
    for proj in projectors:
        a = amplitude(psi_f, proj, psi_i)
        weights.append(abs(a) ** 2)
    total = sum(weights)
    if total < tol ** 2:
        raise UndefinedDistribution("all intermediate amplitudes vanish")
    return [w / total for w in weights]


def postselection_probability(psi_i: StateVector, post) -> float:
    """|<psi_f|psi_i>|^2, or <psi_i|P|psi_i> for a post-selection subspace."""
    if isinstance(post, StateVector):
        return abs(post.overlap(psi_i)) ** 2
    mat = np.asarray(post)
    return float((psi_i.amplitudes.conj() @ mat @ psi_i.amplitudes).real)


def subspace_projector(basis: list[StateVector]) -> np.ndarray:
    """Projector onto the span of an orthonormal family."""
    if not basis:
        raise ContractViolation("empty basis has no projector")
    dim = basis[0].dim
    mat = np.zeros((dim, dim), dtype=complex)
    for vec in basis:
        mat += np.outer(vec.amplitudes, vec.amplitudes.conj())
    return mat


def operator_norm(mat: np.ndarray) -> float:
    """Spectral norm."""
    return float(np.linalg.norm(mat, 2))


def context_operator_matrix(
    ops: list[WeylOperator], max_dim: int = DEFAULT_MATRIX_CAP
) -> np.ndarray:
    """Dense matrix of a product of operators (left to right)."""
    if not ops:
        raise ContractViolation("empty operator product")
    acc = ops[0]
    for op in ops[1:]:
        acc = weyl_mul(acc, op)
    return to_matrix(acc, max_dim=max_dim)
