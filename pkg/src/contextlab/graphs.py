"""Z_d-weighted graphs, the GHZ-graph predicate, qudit graph states, and the
stabilizer identities they satisfy.

A weighted graph on n vertices carries a symmetric adjacency matrix over
Z_d with zero diagonal.  It is a GHZ graph when every vertex weight-sum
d_a = sum_b Gamma_ab vanishes mod d while the total weight W = sum_{a>b}
Gamma_ab does not; this forces d even and w^W = -1, and makes the stabilizer
product collapse to -X_V.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation
from .states import StateVector
from .weyl import DEFAULT_MATRIX_CAP, MeasurementContext, WeylOperator, weyl_mul


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    d: int
    weights: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one vertex")
        mat = tuple(tuple(v % self.d for v in row) for row in self.weights)
        if len(mat) != self.n or any(len(row) != self.n for row in mat):
            raise ValueError("weight matrix must be n x n")
        for a in range(self.n):
            if mat[a][a] != 0:
                raise ContractViolation("self loops are not allowed")
            for b in range(self.n):
                if mat[a][b] != mat[b][a]:
                    raise ContractViolation("weight matrix must be symmetric")
        object.__setattr__(self, "weights", mat)

    @classmethod
    def from_edges(cls, n: int, d: int, edges) -> "WeightedGraph":
        """Edges as (a, b, weight) with 1-based vertex indices."""
        mat = [[0] * n for _ in range(n)]
        for a, b, w in edges:
            if not (1 <= a <= n and 1 <= b <= n) or a == b:
                raise ContractViolation(f"bad edge ({a}, {b})")
            mat[a - 1][b - 1] = w % d
            mat[b - 1][a - 1] = w % d
        return cls(n, d, tuple(tuple(row) for row in mat))

    def edges(self) -> list[tuple[int, int, int]]:
        out = []
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if self.weights[a][b]:
                    out.append((a + 1, b + 1, self.weights[a][b]))
        return out

    def vertex_sums(self) -> list[int]:
        return [sum(row) % self.d for row in self.weights]

    def total_weight(self) -> int:
        return sum(
            self.weights[a][b] for a in range(self.n) for b in range(a)
        ) % self.d


@dataclass(frozen=True)
class GhzVerdict:
    is_ghz: bool
    vertex_sums: tuple[int, ...]
    total_weight: int
    reason: str


def is_ghz_graph(graph: WeightedGraph) -> GhzVerdict:
    """Row sums must vanish mod d and the total weight must not."""
    sums = graph.vertex_sums()
    w = graph.total_weight()
    if any(s != 0 for s in sums):
        bad = [a + 1 for a, s in enumerate(sums) if s != 0]
        return GhzVerdict(False, tuple(sums), w, f"vertex sums nonzero at {bad}")
    if w == 0:
        return GhzVerdict(False, tuple(sums), w, "total weight vanishes mod d")
    # both conditions together force even d (2W = sum_a d_a = 0 mod d)
    assert graph.d % 2 == 0, "GHZ conditions imply even d"
    assert w == graph.d // 2, "total weight must equal d/2 mod d"
    return GhzVerdict(True, tuple(sums), w, "GHZ graph")


def stabilizer_generators(graph: WeightedGraph) -> list[WeylOperator]:
    """G_a = X_a prod_b Z_b^{Gamma_ab}; pairwise commuting by symmetry."""
    gens = []
    for a in range(graph.n):
        x = tuple(1 if b == a else 0 for b in range(graph.n))
        z = tuple(graph.weights[a][b] for b in range(graph.n))
        gens.append(WeylOperator(graph.n, graph.d, x, z, 0))
    return gens


def neighborhood_clock(graph: WeightedGraph, a: int) -> WeylOperator:
    """Z_{N_a} = prod_b Z_b^{Gamma_ab} (a is 0-based here)."""
    z = tuple(graph.weights[a][b] for b in range(graph.n))
    zero = (0,) * graph.n
    return WeylOperator(graph.n, graph.d, zero, z, 0)


def site_shift_all(graph: WeightedGraph) -> WeylOperator:
    """X_V = prod_a X_a."""
    return WeylOperator(graph.n, graph.d, (1,) * graph.n, (0,) * graph.n, 0)


def stabilizer_product(graph: WeightedGraph) -> WeylOperator:
    """prod_a G_a in normal form.

    For any weighted graph this equals w^{-W} X_V tensor_a Z_a^{d_a}; for a
    GHZ graph the Z part is trivial and w^{-W} = w^{W} = -1, giving -X_V.
    """
    gens = stabilizer_generators(graph)
    acc = gens[0]
    for g in gens[1:]:
        acc = weyl_mul(acc, g)
    return acc


def graph_state(graph: WeightedGraph, max_dim: int = DEFAULT_MATRIX_CAP) -> StateVector:
    """The +1 joint eigenstate of the stabilizer generators.

    Built from the quadratic form |G> ~ sum_k w^{-q(k)} |k> with
    q(k) = sum_{a<b} Gamma_ab k_a k_b, then validated against the defining
    eigen-condition G_a|G> = |G>; on failure falls back to projecting a
    reference vector with prod_a (sum_k G_a^k)/d.
    """
    return eigenstate_family(graph, (0,) * graph.n, max_dim=max_dim)


def eigenstate_family(
    graph: WeightedGraph, exponents, max_dim: int = DEFAULT_MATRIX_CAP
) -> StateVector:
    """Joint eigenstate of {G_a} with eigenvalues w^{m_a}; always rank 1.

    Closed form: |psi^g> = d^{-n/2} sum_k w^{-q(k) + sum_b m_b k_b} |k>.
    """
    n, d = graph.n, graph.d
    if d ** n > max_dim:
        raise ContractViolation(f"d^n = {d ** n} exceeds cap {max_dim}")
    m = tuple(int(v) % d for v in exponents)
    if len(m) != n:
        raise ContractViolation("one eigenvalue exponent per vertex")
    w = np.exp(2j * np.pi / d)
    vec = np.zeros(d ** n, dtype=complex)
    for k in itertools.product(range(d), repeat=n):
        q = sum(
            graph.weights[a][b] * k[a] * k[b]
            for a in range(n)
            for b in range(a + 1, n)
        )
        idx = 0
        for ka in k:
            idx = idx * d + ka
        vec[idx] = w ** (-q + sum(mb * kb for mb, kb in zip(m, k)))
    state = StateVector.from_amplitudes(vec)
    if not _eigen_condition_holds(graph, state, m, max_dim):
        state = _projective_eigenstate(graph, m, max_dim)
        if not _eigen_condition_holds(graph, state, m, max_dim):
            raise ContractViolation(
                "graph-state construction convention failed the eigen-condition"
            )
    return state


def _eigen_condition_holds(graph, state, m, max_dim, tol=1e-10) -> bool:
    w = np.exp(2j * np.pi / graph.d)
    for a, gen in enumerate(stabilizer_generators(graph)):
        image = gen.to_matrix(max_dim=max_dim) @ state.amplitudes
        if np.linalg.norm(image - (w ** m[a]) * state.amplitudes) > tol:
            return False
    return True


def _projective_eigenstate(graph, m, max_dim) -> StateVector:
    n, d = graph.n, graph.d
    w = np.exp(2j * np.pi / d)
    dim = d ** n
    proj = np.eye(dim, dtype=complex)
    for a, gen in enumerate(stabilizer_generators(graph)):
        base = gen.to_matrix(max_dim=max_dim)
        acc = np.zeros((dim, dim), dtype=complex)
        power = np.eye(dim, dtype=complex)
        for k in range(d):
            acc += (w ** (-m[a] * k)) * power
            power = power @ base
        proj = proj @ (acc / d)
    rng = np.random.default_rng(0)
    vec = proj @ (rng.standard_normal(dim) + 1j * rng.standard_normal(dim))
    return StateVector.from_amplitudes(vec)


def stabilizer_context(graph: WeightedGraph) -> MeasurementContext:
    labels = tuple(f"G{a + 1}" for a in range(graph.n))
    return MeasurementContext(tuple(stabilizer_generators(graph)), labels)


# -- builtin families ---------------------------------------------------------


def triangle_graph(d: int, weight: int | None = None) -> WeightedGraph:
    """The 3-vertex graph with all edges equal.

    With the default weight d/2 (even d) this is the unique GHZ graph on
    three vertices; at d=2 that is the all-weights-1 triangle.
    """
    if weight is None:
        if d % 2 != 0:
            weight = 1  # no GHZ triangle exists for odd d; predicate rejects it
        else:
            weight = d // 2
    return WeightedGraph.from_edges(3, d, [(1, 2, weight), (2, 3, weight), (1, 3, weight)])


def k4_graph(d: int, a: int, b: int, c: int) -> WeightedGraph:
    """The 4-vertex GHZ family: opposite edge pairs carry (x, x + d/2).

    Requires even d and a + b + c = d/2 (mod d); edges are
    w23=a, w13=b, w12=c, w14=a+d/2, w24=b+d/2, w34=c+d/2.
    """
    if d % 2 != 0:
        raise ContractViolation("4-vertex GHZ graphs need even d")
    if (a + b + c) % d != d // 2:
        raise ContractViolation("labels must satisfy a + b + c = d/2 (mod d)")
    h = d // 2
    edges = [
        (2, 3, a), (1, 3, b), (1, 2, c),
        (1, 4, a + h), (2, 4, b + h), (3, 4, c + h),
    ]
    return WeightedGraph.from_edges(4, d, [(x, y, w % d) for x, y, w in edges if w % d])


def enumerate_ghz_graphs(n: int, d: int) -> list[WeightedGraph]:
    """Brute force over all symmetric weight matrices; feasible for n <= 4, d <= 6."""
    if n > 4:
        raise ContractViolation("enumeration supported for n <= 4")
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    found = []
    for combo in itertools.product(range(d), repeat=len(pairs)):
        mat = [[0] * n for _ in range(n)]
        for (a, b), w in zip(pairs, combo):
            mat[a][b] = w
            mat[b][a] = w
        graph = WeightedGraph(n, d, tuple(tuple(row) for row in mat))
        if is_ghz_graph(graph).is_ghz:
            found.append(graph)
    return found


def random_ghz_graph(rng: np.random.Generator, n: int, d: int) -> WeightedGraph:
    """A random GHZ graph on 3 or 4 vertices (even d)."""
    if d % 2 != 0:
        raise ContractViolation("GHZ graphs need even d")
    if n == 3:
        return triangle_graph(d)
    if n == 4:
        a = int(rng.integers(d))
        b = int(rng.integers(d))
        c = (d // 2 - a - b) % d
        return k4_graph(d, a, b, c)
    raise ContractViolation("random generation supported for n in {3, 4}")


# -- file format --------------------------------------------------------------


def graph_to_dict(graph: WeightedGraph) -> dict:
    return {"n": graph.n, "d": graph.d, "edges": [list(e) for e in graph.edges()]}


def graph_from_dict(data: dict) -> WeightedGraph:
    return WeightedGraph.from_edges(int(data["n"]), int(data["d"]), data.get("edges", []))


def load_graph(path) -> WeightedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_dict(json.load(fh))


def save_graph(graph: WeightedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_dict(graph), fh, indent=2)
        fh.write("\n")
