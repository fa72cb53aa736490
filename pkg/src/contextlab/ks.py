"""Finite ray sets with orthogonality structure and the exhaustive search for
{0,1} Kochen-Specker value assignments.

Rules enforced on an assignment:
  - noncontextuality: rays equal up to global phase are one variable
    (handled by canonicalization and dedup at construction time),
  - orthogonality: two orthogonal rays are never both 1,
  - completeness: every complete orthonormal basis contains a 1.

Since all members of a basis are mutually orthogonal, each basis carries
exactly one 1; the search branches over which ray that is, with unit
propagation in between.  An UNSAT answer is exhaustive, not heuristic.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import ContractViolation
from .states import VANISH_TOL

UNASSIGNED = -1


def canonicalize_ray(vec, tol: float = 1e-8) -> np.ndarray:
    """Unit-normalize and fix the global phase: first nonzero entry real > 0."""
    vec = np.asarray(vec, dtype=complex).reshape(-1)
    norm = np.linalg.norm(vec)
    if norm < tol:
        raise ContractViolation("zero vector is not a ray")
    vec = vec / norm
    for entry in vec:
        if abs(entry) > tol:
            vec = vec * (entry.conjugate() / abs(entry))
            break
    return vec


@dataclass
class RaySet:
    dimension: int
    vectors: list[np.ndarray]
    labels: list[str]
    adjacency: np.ndarray
    bases: list[tuple[int, ...]]
    bases_declared: bool

    def __len__(self) -> int:
        return len(self.vectors)

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def degree(self, i: int) -> int:
        return int(self.adjacency[i].sum())


def build_rayset(
    rays,
    labels=None,
    bases=None,
    tol: float = VANISH_TOL,
) -> RaySet:
    """Canonicalize, dedup mod global phase, compute orthogonality, fix bases.

    When ``bases`` is omitted, every maximal orthogonal clique whose size
    equals the dimension is declared a complete basis.
    """
    for i, vec in enumerate(rays):
        norm = np.linalg.norm(np.asarray(vec, dtype=complex))
        if abs(norm - 1.0) > 1e-8:
            raise ContractViolation(f"ray {i} is not a unit vector (norm {norm})")
    canonical = [canonicalize_ray(v) for v in rays]
    if not canonical:
        raise ContractViolation("empty ray set")
    dim = canonical[0].shape[0]
    if any(v.shape[0] != dim for v in canonical):
        raise ContractViolation("rays live in different dimensions")
    if labels is None:
        labels = [f"r{i}" for i in range(len(canonical))]
    labels = list(labels)
    if len(labels) != len(canonical):
        raise ContractViolation("one label per ray")

    kept: list[np.ndarray] = []
    kept_labels: list[str] = []
    remap: list[int] = []
    for vec, label in zip(canonical, labels):
        found = None
        for j, other in enumerate(kept):
            if abs(abs(np.vdot(other, vec)) - 1.0) < 1e-9:
                found = j
                break
        if found is None:
            kept.append(vec)
            kept_labels.append(label)
            remap.append(len(kept) - 1)
        else:
            remap.append(found)

    m = len(kept)
    adjacency = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(i + 1, m):
            if abs(np.vdot(kept[i], kept[j])) < tol:
                adjacency[i, j] = adjacency[j, i] = True

    if bases is not None:
        declared = []
        for basis in bases:
            idx = tuple(sorted(remap[i] for i in basis))
            if len(set(idx)) != dim:
                raise ContractViolation(f"basis {basis} does not have {dim} distinct rays")
            for i, j in itertools.combinations(idx, 2):
                if not adjacency[i, j]:
                    raise ContractViolation(f"declared basis {basis} is not orthogonal")
            declared.append(idx)
        return RaySet(dim, kept, kept_labels, adjacency, sorted(set(declared)), True)

    graph = nx.from_numpy_array(adjacency)
    found = set()
    for clique in nx.find_cliques(graph):
        if len(clique) == dim:
            found.add(tuple(sorted(clique)))
    return RaySet(dim, kept, kept_labels, adjacency, sorted(found), False)


@dataclass
class KSSearchResult:
    satisfiable: bool
    assignment: dict[int, int] | None
    nodes: int
    propagations: int
    elapsed: float
    order: tuple[int, ...]

    def assignment_by_label(self, rayset: RaySet) -> dict[str, int] | None:
        if self.assignment is None:
            return None
        return {rayset.labels[i]: v for i, v in self.assignment.items()}


def validate_assignment(rayset: RaySet, assignment: dict[int, int]) -> list[str]:
    """Independent re-check of both KS rules; returns violation messages."""
    problems = []
    m = len(rayset)
    for i in range(m):
        if assignment.get(i) not in (0, 1):
            problems.append(f"ray {i} unassigned")
    for i in range(m):
        for j in range(i + 1, m):
            if rayset.adjacency[i, j] and assignment.get(i) == 1 and assignment.get(j) == 1:
                problems.append(f"orthogonal rays {i}, {j} both 1")
    for basis in rayset.bases:
        if not any(assignment.get(i) == 1 for i in basis):
            problems.append(f"basis {basis} has no ray assigned 1")
    return problems


def _canonical_order(rayset: RaySet) -> list[int]:
    """Descending adjacency degree, ties by index."""
    return sorted(range(len(rayset)), key=lambda i: (-rayset.degree(i), i))


def propagate(
    rayset: RaySet, values: list[int], counter: list[int]
) -> bool:
    """Unit propagation to fixpoint; False on conflict.

    Rules: a ray at 1 zeroes its neighbors; a basis with no 1 and a single
    unassigned ray forces that ray to 1; a basis of all 0 is a conflict.
    """
    neighbors = [np.flatnonzero(rayset.adjacency[i]) for i in range(len(rayset))]
    changed = True
    while changed:
        changed = False
        for i, v in enumerate(values):
            if v == 1:
                for j in neighbors[i]:
                    if values[j] == 1 and j != i:
                        return False
                    if values[j] == UNASSIGNED:
                        values[j] = 0
                        counter[0] += 1
                        changed = True
        for basis in rayset.bases:
            states = [values[i] for i in basis]
            if any(v == 1 for v in states):
                continue
            open_rays = [i for i in basis if values[i] == UNASSIGNED]
            if not open_rays:
                return False
            if len(open_rays) == 1:
                values[open_rays[0]] = 1
                counter[0] += 1
                changed = True
    return True


def ks_search(
    rayset: RaySet,
    preassigned: dict[int, int] | dict[str, int] | None = None,
    order: list[int] | None = None,
) -> KSSearchResult:
    """Exhaustive backtracking search for a KS value assignment.

    ``preassigned`` pins ray values before the search (labels or indices);
    an inconsistent preassignment raises ContractViolation, which is distinct
    from an UNSAT verdict.  ``order`` permutes the candidate ordering and is
    only used to confirm that UNSAT verdicts are ordering-independent.
    """
    start = time.perf_counter()
    values = [UNASSIGNED] * len(rayset)
    if preassigned:
        for key, val in preassigned.items():
            idx = rayset.index_of(key) if isinstance(key, str) else int(key)
            if val not in (0, 1):
                raise ContractViolation(f"preassigned value {val} is not 0/1")
            if values[idx] not in (UNASSIGNED, val):
                raise ContractViolation(f"conflicting preassignment for ray {idx}")
            values[idx] = val
        for i in range(len(rayset)):
            for j in range(i + 1, len(rayset)):
                if rayset.adjacency[i, j] and values[i] == 1 and values[j] == 1:
                    raise ContractViolation(
                        f"preassignment puts 1 on orthogonal rays {i} and {j}"
                    )
        for basis in rayset.bases:
            if all(values[i] == 0 for i in basis):
                raise ContractViolation(f"preassignment zeroes the whole basis {basis}")

    rank = order if order is not None else _canonical_order(rayset)
    position = {ray: pos for pos, ray in enumerate(rank)}
    nodes = [0]
    props = [0]

    def choose_basis(vals):
        best = None
        best_key = None
        for bi, basis in enumerate(rayset.bases):
            if any(vals[i] == 1 for i in basis):
                continue
            open_rays = [i for i in basis if vals[i] == UNASSIGNED]
            key = (len(open_rays), bi)
            if best_key is None or key < best_key:
                best_key = key
                best = open_rays
        return best

    def search(vals) -> dict[int, int] | None:
        nodes[0] += 1
        work = list(vals)
        if not propagate(rayset, work, props):
            return None
        open_rays = choose_basis(work)
        if open_rays is None:
            # every basis satisfied; remaining rays can safely stay 0
            for i, v in enumerate(work):
                if v == UNASSIGNED:
                    work[i] = 0
            return {i: v for i, v in enumerate(work)}
        for ray in sorted(open_rays, key=lambda r: position[r]):
            trial = list(work)
            trial[ray] = 1
            found = search(trial)
            if found is not None:
                return found
        return None

    assignment = search(values)
    elapsed = time.perf_counter() - start
    if assignment is not None:
        problems = validate_assignment(rayset, assignment)
        if problems:
            raise AssertionError(f"search returned an invalid assignment: {problems}")
    return KSSearchResult(
        satisfiable=assignment is not None,
        assignment=assignment,
        nodes=nodes[0],
        propagations=props[0],
        elapsed=elapsed,
        order=tuple(rank),
    )


def propagate_consequences(
    rayset: RaySet, preassigned: dict[str, int] | dict[int, int]
) -> dict[int, int]:
    """Values fixed by unit propagation alone (depth-0, no branching)."""
    values = [UNASSIGNED] * len(rayset)
    for key, val in preassigned.items():
        idx = rayset.index_of(key) if isinstance(key, str) else int(key)
        values[idx] = val
    if not propagate(rayset, values, [0]):
        raise ContractViolation("preassignment already conflicts under propagation")
    return {i: v for i, v in enumerate(values) if v != UNASSIGNED}


# -- builtin ray sets ----------------------------------------------------------


def _qubit_states():
    z0 = np.array([1, 0], dtype=complex)
    z1 = np.array([0, 1], dtype=complex)
    xp = np.array([1, 1], dtype=complex) / np.sqrt(2)
    xm = np.array([1, -1], dtype=complex) / np.sqrt(2)
    yp = np.array([1, 1j], dtype=complex) / np.sqrt(2)
    ym = np.array([1, -1j], dtype=complex) / np.sqrt(2)
    return z0, z1, xp, xm, yp, ym


def _bells():
    z0, z1, *_ = _qubit_states()
    return {
        "Phi+": (np.kron(z0, z0) + np.kron(z1, z1)) / np.sqrt(2),
        "Phi-": (np.kron(z0, z0) - np.kron(z1, z1)) / np.sqrt(2),
        "Psi+": (np.kron(z0, z1) + np.kron(z1, z0)) / np.sqrt(2),
        "Psi-": (np.kron(z0, z1) - np.kron(z1, z0)) / np.sqrt(2),
    }


def _place_pair(pair_vec: np.ndarray, single: np.ndarray, pair: tuple[int, int]) -> np.ndarray:
    """Order the tensor factors so the Bell pair sits on `pair` (1-based)."""
    a, b = pair
    c = ({1, 2, 3} - {a, b}).pop()
    out = np.zeros(8, dtype=complex)
    for i, j, k in itertools.product(range(2), repeat=3):
        bits = {a: i, b: j, c: k}
        idx = bits[1] * 4 + bits[2] * 2 + bits[3]
        out[idx] = pair_vec[i * 2 + j] * single[k]
    return out


def builtin_34_rays() -> RaySet:
    """psi_i, psi_f, the 24 Bell-pair-times-basis states, and the
    computational basis: the state-dependent proof behind the original
    pigeonhole scenario."""
    z0, z1, xp, xm, yp, ym = _qubit_states()
    rays = []
    labels = []
    psi_i = np.kron(np.kron(xp, xp), xp)
    psi_f = np.kron(np.kron(yp, yp), yp)
    rays.append(psi_i)
    labels.append("psi_i")
    rays.append(psi_f)
    labels.append("psi_f")
    bells = _bells()
    for pair in [(1, 2), (2, 3), (1, 3)]:
        for bell_name, bell_vec in bells.items():
            for mu, single in ((0, z0), (1, z1)):
                rays.append(_place_pair(bell_vec, single, pair))
                labels.append(f"{bell_name}_{pair[0]}{pair[1]}|{mu}>")
    for bits in itertools.product(range(2), repeat=3):
        vec = np.zeros(8, dtype=complex)
        vec[bits[0] * 4 + bits[1] * 2 + bits[2]] = 1.0
        rays.append(vec)
        labels.append("z" + "".join(map(str, bits)))
    return build_rayset(rays, labels)


def builtin_48_rays() -> RaySet:
    """Joint eigenstates of the six maximal commuting contexts
    {X_a}, {Y_a}, {Z_a}, {X_ab, Y_ab, Z_c}: the state-independent proof."""
    z0, z1, xp, xm, yp, ym = _qubit_states()
    rays = []
    labels = []
    bases = []
    singles = {
        "X": {0: xp, 1: xm},
        "Y": {0: yp, 1: ym},
        "Z": {0: z0, 1: z1},
    }
    for kind in ("X", "Y", "Z"):
        basis = []
        for bits in itertools.product(range(2), repeat=3):
            vec = np.kron(
                np.kron(singles[kind][bits[0]], singles[kind][bits[1]]),
                singles[kind][bits[2]],
            )
            basis.append(len(rays))
            rays.append(vec)
            labels.append(f"{kind}:" + "".join("+-"[b] for b in bits))
        bases.append(basis)
    bells = _bells()
    for pair in [(1, 2), (2, 3), (1, 3)]:
        basis = []
        for bell_name, bell_vec in bells.items():
            for mu, single in ((0, z0), (1, z1)):
                basis.append(len(rays))
                rays.append(_place_pair(bell_vec, single, pair))
                labels.append(f"{bell_name}_{pair[0]}{pair[1]}|{mu}>")
        bases.append(basis)
    return build_rayset(rays, labels, bases=bases)


# -- file format -----------------------------------------------------------------


def rayset_to_dict(rayset: RaySet) -> dict:
    data = {
        "dimension": rayset.dimension,
        "rays": [
            {
                "label": label,
                "amplitudes": [[float(z.real), float(z.imag)] for z in vec],
            }
            for label, vec in zip(rayset.labels, rayset.vectors)
        ],
    }
    if rayset.bases_declared:
        data["bases"] = [list(b) for b in rayset.bases]
    return data


def rayset_from_dict(data: dict) -> RaySet:
    rays = []
    labels = []
    for entry in data["rays"]:
        rays.append(np.array([complex(re, im) for re, im in entry["amplitudes"]]))
        labels.append(entry["label"])
    bases = data.get("bases")
    return build_rayset(rays, labels, bases=bases)


def load_rayset(path) -> RaySet:
    with open(path, "r", encoding="utf-8") as fh:
        return rayset_from_dict(json.load(fh))


def save_rayset(rayset: RaySet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rayset_to_dict(rayset), fh, indent=2)
        fh.write("\n")
