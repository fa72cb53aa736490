"""Magic configurations: unitary observables on nodes, commuting lines with
claimed scalar products, and the parity argument that rules out noncontextual
unit-modulus valuations.

A configuration is a parity proof when every node's occurrences cancel for
any unit-modulus valuation - an even number of plain occurrences for a
Hermitian (+-1 valued) node, or plain/daggered occurrences in equal number in
the qudit case - while the quantum line products multiply to something other
than 1.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation, MalformedConfiguration
from .graphs import WeightedGraph, is_ghz_graph, neighborhood_clock, stabilizer_generators
from .weyl import (
    DEFAULT_MATRIX_CAP,
    WeylOperator,
    commutes,
    format_weyl,
    parse_weyl,
    to_matrix,
    weyl_dagger,
    weyl_mul,
)


@dataclass(frozen=True)
class LineOccurrence:
    node: int
    dagger: bool = False


@dataclass(frozen=True)
class MagicLine:
    occurrences: tuple[LineOccurrence, ...]
    claimed_phase: int  # tau exponent of the claimed scalar product


@dataclass(frozen=True)
class MagicConfiguration:
    name: str
    n: int
    d: int
    nodes: tuple[WeylOperator, ...]
    node_labels: tuple[str, ...]
    lines: tuple[MagicLine, ...]
    reconstructed: bool = False

    def __post_init__(self):
        if len(self.node_labels) != len(self.nodes):
            raise MalformedConfiguration("one label per node")
        for op in self.nodes:
            if op.n != self.n or op.d != self.d:
                raise MalformedConfiguration("node operators must share (n, d)")
        counts = [0] * len(self.nodes)
        for line in self.lines:
            members = [self.nodes[o.node] for o in line.occurrences]
            for a, b in itertools.combinations(members, 2):
                if not commutes(a, b):
                    raise MalformedConfiguration(
                        f"line {line} members do not commute"
                    )
            for o in line.occurrences:
                counts[o.node] += 1
        for i, c in enumerate(counts):
            if c < 2:
                raise MalformedConfiguration(
                    f"node {self.node_labels[i]} occurs in fewer than two lines"
                )

    def occurrence_counts(self) -> list[tuple[int, int]]:
        """(plain, daggered) occurrence counts per node."""
        plain = [0] * len(self.nodes)
        dag = [0] * len(self.nodes)
        for line in self.lines:
            for o in line.occurrences:
                if o.dagger:
                    dag[o.node] += 1
                else:
                    plain[o.node] += 1
        return list(zip(plain, dag))


@dataclass(frozen=True)
class LineProduct:
    line_index: int
    computed_phase: int
    claimed_phase: int
    matrix_residual: float
    symbolic: str

    @property
    def matches(self) -> bool:
        return self.computed_phase == self.claimed_phase


def line_operator(cfg: MagicConfiguration, line: MagicLine) -> WeylOperator:
    acc = WeylOperator.identity(cfg.n, cfg.d)
    for occ in line.occurrences:
        op = cfg.nodes[occ.node]
        if occ.dagger:
            op = weyl_dagger(op)
        acc = weyl_mul(acc, op)
    return acc


def verify_quantum_products(
    cfg: MagicConfiguration,
    max_dim: int = DEFAULT_MATRIX_CAP,
    tol: float = 1e-10,
) -> list[LineProduct]:
    """Per-line scalar products, symbolically and by dense matrices.

    Raises MalformedConfiguration when a line product is not proportional to
    the identity.
    """
    results = []
    for idx, line in enumerate(cfg.lines):
        product = line_operator(cfg, line)
        if not product.is_identity_word:
            raise MalformedConfiguration(
                f"line {idx} product is not a scalar: {format_weyl(product)}"
            )
        dim = cfg.d ** cfg.n
        mat = np.eye(dim, dtype=complex)
        for occ in line.occurrences:
            factor = to_matrix(cfg.nodes[occ.node], max_dim=max_dim)
            if occ.dagger:
                factor = factor.conj().T
            mat = mat @ factor
        expected = product.phase_value() * np.eye(dim)
        residual = float(np.max(np.abs(mat - expected)))
        if residual > tol:
            raise MalformedConfiguration(
                f"line {idx}: symbolic product disagrees with matrices ({residual:.2e})"
            )
        results.append(
            LineProduct(
                line_index=idx,
                computed_phase=product.phase,
                claimed_phase=line.claimed_phase % (2 * cfg.d),
                matrix_residual=residual,
                symbolic=format_weyl(product),
            )
        )
    return results


@dataclass(frozen=True)
class ParityReport:
    grand_phase: int            # tau exponent of the product of all line products
    parity_sound: bool          # occurrence structure forces value 1 classically
    contradiction: bool
    node_structure: tuple[tuple[str, int, int], ...]  # (label, plain, daggered)
    detail: str

    @property
    def grand_value_is_one(self) -> bool:
        return self.grand_phase == 0


def parity_contradiction(
    cfg: MagicConfiguration, max_dim: int = DEFAULT_MATRIX_CAP
) -> ParityReport:
    """Grand product of the verified line products versus the classical 1.

    Soundness of the parity argument is purely structural: a Hermitian node
    (values +-1) must occur an even number of times in total, any other node
    must occur equally often plain and daggered.  When the structure is sound
    and the grand product is not 1, no noncontextual unit-modulus valuation
    exists.
    """
    products = verify_quantum_products(cfg, max_dim=max_dim)
    grand = sum(p.computed_phase for p in products) % (2 * cfg.d)
    structure = []
    sound = True
    reasons = []
    for (plain, dag), label, op in zip(
        cfg.occurrence_counts(), cfg.node_labels, cfg.nodes
    ):
        structure.append((label, plain, dag))
        if op.is_hermitian():
            if (plain + dag) % 2 != 0:
                sound = False
                reasons.append(f"{label}: odd occurrence count {plain + dag}")
        else:
            if plain != dag:
                sound = False
                reasons.append(f"{label}: {plain} plain vs {dag} daggered")
    contradiction = sound and grand != 0
    if not sound:
        detail = "not a parity proof: " + "; ".join(reasons)
    elif contradiction:
        detail = "noncontextual value assignment impossible"
    else:
        detail = "grand product is 1; no parity contradiction"
    return ParityReport(grand, sound, contradiction, tuple(structure), detail)


# -- builtin configurations -----------------------------------------------------


def _cyclic_pairs(n: int) -> list[tuple[int, int]]:
    pairs = []
    for a in range(1, n + 1):
        b = a % n + 1
        pairs.append((min(a, b), max(a, b)))
    return pairs


def pm_square(n: int) -> MagicConfiguration:
    """The pair magic square on an odd number of qubits.

    Rows are the X-, Z-, and Y-pair observables over cyclically adjacent
    pairs; columns are the per-pair triples.  For n = 3 this is exactly the
    three-qubit square (pairs (1,2), (2,3), (1,3)).
    """
    if n % 2 == 0:
        raise ContractViolation("the pair square needs an odd number of qubits")
    pairs = _cyclic_pairs(n)
    nodes = []
    labels = []
    index = {}

    def add(op, label):
        index[label] = len(nodes)
        nodes.append(op)
        labels.append(label)

    for a, b in pairs:
        add(WeylOperator.shift(a, n, 2) * WeylOperator.shift(b, n, 2), f"X{a}X{b}")
    for a, b in pairs:
        add(WeylOperator.clock(a, n, 2) * WeylOperator.clock(b, n, 2), f"Z{a}Z{b}")
    for a, b in pairs:
        add(WeylOperator.pauli_y(a, n, 2) * WeylOperator.pauli_y(b, n, 2), f"Y{a}Y{b}")
    lines = []
    for kind in ("X", "Z", "Y"):
        occ = tuple(
            LineOccurrence(index[f"{kind}{a}{kind}{b}"]) for a, b in pairs
        )
        lines.append(MagicLine(occ, 0))
    for a, b in pairs:
        occ = tuple(
            LineOccurrence(index[f"{kind}{a}{kind}{b}"]) for kind in ("X", "Z", "Y")
        )
        lines.append(MagicLine(occ, 2))  # tau^2 = -1 for qubits
    return MagicConfiguration(
        name=f"pm_square_{n}q", n=n, d=2, nodes=tuple(nodes),
        node_labels=tuple(labels), lines=tuple(lines),
    )


def pm_square_3q() -> MagicConfiguration:
    return pm_square(3)


def pm_square_2q() -> MagicConfiguration:
    """The two-qubit Peres-Mermin square (rows all +1, third column -1)."""
    n = 2
    specs = [
        ("X1", "X1"), ("X2", "X2"), ("X1X2", "X1 X2"),
        ("Z2", "Z2"), ("Z1", "Z1"), ("Z1Z2", "Z1 Z2"),
        ("X1Z2", "X1 Z2"), ("Z1X2", "Z1 X2"), ("Y1Y2", "Y1 Y2"),
    ]
    nodes = tuple(parse_weyl(text, n, 2) for _, text in specs)
    labels = tuple(label for label, _ in specs)
    rows = [(0, 1, 2), (3, 4, 5), (6, 7, 8)]
    cols = [(0, 3, 6), (1, 4, 7), (2, 5, 8)]
    lines = [MagicLine(tuple(LineOccurrence(i) for i in row), 0) for row in rows]
    lines.append(MagicLine(tuple(LineOccurrence(i) for i in cols[0]), 0))
    lines.append(MagicLine(tuple(LineOccurrence(i) for i in cols[1]), 0))
    lines.append(MagicLine(tuple(LineOccurrence(i) for i in cols[2]), 2))
    return MagicConfiguration(
        name="pm_square_2q", n=n, d=2, nodes=nodes, node_labels=labels,
        lines=tuple(lines),
    )


def wa_triangle_3q() -> MagicConfiguration:
    """Triangle-shaped parity proof over the six three-qubit contexts.

    Reconstructed from the context lists {X_a}, {Y_a}, {Z_a},
    {X_ab, Y_ab, Z_c}: 18 observables on 12 lines, every node on exactly two
    lines, with the three {X_ab, Y_ab, Z_ab} lines carrying the -1 products.
    The printed figure's exact layout is not recoverable from text; this
    reconstruction is validated by the checker instead.
    """
    n = 3
    nodes = []
    labels = []
    index = {}

    def add(text, label):
        index[label] = len(nodes)
        nodes.append(parse_weyl(text, n, 2))
        labels.append(label)

    for a in range(1, 4):
        add(f"X{a}", f"X{a}")
    for a in range(1, 4):
        add(f"Y{a}", f"Y{a}")
    for a in range(1, 4):
        add(f"Z{a}", f"Z{a}")
    for a, b in [(1, 2), (2, 3), (1, 3)]:
        add(f"X{a} X{b}", f"X{a}X{b}")
        add(f"Y{a} Y{b}", f"Y{a}Y{b}")
        add(f"Z{a} Z{b}", f"Z{a}Z{b}")
    lines = []
    for a, b in [(1, 2), (2, 3), (1, 3)]:
        for kind in ("X", "Y", "Z"):
            occ = (
                LineOccurrence(index[f"{kind}{a}"]),
                LineOccurrence(index[f"{kind}{b}"]),
                LineOccurrence(index[f"{kind}{a}{kind}{b}"]),
            )
            lines.append(MagicLine(occ, 0))
        occ = (
            LineOccurrence(index[f"X{a}X{b}"]),
            LineOccurrence(index[f"Y{a}Y{b}"]),
            LineOccurrence(index[f"Z{a}Z{b}"]),
        )
        lines.append(MagicLine(occ, 2))
    return MagicConfiguration(
        name="wa_triangle_3q", n=n, d=2, nodes=tuple(nodes),
        node_labels=tuple(labels), lines=tuple(lines), reconstructed=True,
    )


def pentagram_3q() -> MagicConfiguration:
    """Pentagram-style parity proof from the GHZ scenario observables.

    Reconstructed from {G_a}, {X_a}, {Z_ab} and X_123: ten nodes, each on
    exactly two lines, with prod G_a = -X_123 supplying the odd line.
    """
    n = 3
    specs = [
        ("G1", "X1 Z2 Z3"), ("G2", "Z1 X2 Z3"), ("G3", "Z1 Z2 X3"),
        ("X1", "X1"), ("X2", "X2"), ("X3", "X3"),
        ("Z1Z2", "Z1 Z2"), ("Z2Z3", "Z2 Z3"), ("Z1Z3", "Z1 Z3"),
        ("X123", "X1 X2 X3"),
    ]
    nodes = tuple(parse_weyl(text, n, 2) for _, text in specs)
    labels = tuple(label for label, _ in specs)
    index = {label: i for i, label in enumerate(labels)}
    lines = [
        MagicLine(
            (
                LineOccurrence(index["G1"]),
                LineOccurrence(index["X1"]),
                LineOccurrence(index["Z2Z3"]),
            ),
            0,
        ),
        MagicLine(
            (
                LineOccurrence(index["G2"]),
                LineOccurrence(index["X2"]),
                LineOccurrence(index["Z1Z3"]),
            ),
            0,
        ),
        MagicLine(
            (
                LineOccurrence(index["G3"]),
                LineOccurrence(index["X3"]),
                LineOccurrence(index["Z1Z2"]),
            ),
            0,
        ),
        MagicLine(
            (
                LineOccurrence(index["G1"]),
                LineOccurrence(index["G2"]),
                LineOccurrence(index["G3"]),
                LineOccurrence(index["X123"]),
            ),
            2,
        ),
        MagicLine(
            (
                LineOccurrence(index["X1"]),
                LineOccurrence(index["X2"]),
                LineOccurrence(index["X3"]),
                LineOccurrence(index["X123"]),
            ),
            0,
        ),
        MagicLine(
            (
                LineOccurrence(index["Z1Z2"]),
                LineOccurrence(index["Z2Z3"]),
                LineOccurrence(index["Z1Z3"]),
            ),
            0,
        ),
    ]
    return MagicConfiguration(
        name="pentagram_3q", n=n, d=2, nodes=nodes, node_labels=labels,
        lines=tuple(lines), reconstructed=True,
    )


def qudit_config(graph: WeightedGraph) -> MagicConfiguration:
    """The qudit magic configuration attached to a GHZ graph.

    Three rows [X_a..., X_V^dag], [Z_{N_a}..., I], [G_a^dag..., X_V] taken
    plain, and the n+1 columns taken daggered, per the identity
    prod_rc O_rc prod_cr O_rc^dag = -1.
    """
    verdict = is_ghz_graph(graph)
    if not verdict.is_ghz:
        raise ContractViolation(f"not a GHZ graph: {verdict.reason}")
    n, d = graph.n, graph.d
    gens = stabilizer_generators(graph)
    xv = WeylOperator.identity(n, d)
    for a in range(1, n + 1):
        xv = xv * WeylOperator.shift(a, n, d)
    nodes = []
    labels = []
    for a in range(1, n + 1):
        nodes.append(WeylOperator.shift(a, n, d))
        labels.append(f"X{a}")
    nodes.append(weyl_dagger(xv))
    labels.append("XV+")
    for a in range(n):
        nodes.append(neighborhood_clock(graph, a))
        labels.append(f"Z_N{a + 1}")
    nodes.append(WeylOperator.identity(n, d))
    labels.append("I")
    for a in range(n):
        nodes.append(weyl_dagger(gens[a]))
        labels.append(f"G{a + 1}+")
    nodes.append(xv)
    labels.append("XV")
    row = lambda r: list(range(r * (n + 1), (r + 1) * (n + 1)))
    lines = [
        MagicLine(tuple(LineOccurrence(i) for i in row(0)), 0),
        MagicLine(tuple(LineOccurrence(i) for i in row(1)), 0),
        MagicLine(tuple(LineOccurrence(i) for i in row(2)), d),  # tau^d = -1
    ]
    for c in range(n + 1):
        occ = tuple(LineOccurrence(row(r)[c], dagger=True) for r in range(3))
        lines.append(MagicLine(occ, 0))
    return MagicConfiguration(
        name=f"qudit_config_n{n}_d{d}", n=n, d=d, nodes=tuple(nodes),
        node_labels=tuple(labels), lines=tuple(lines),
    )


def builtin_configurations() -> dict[str, MagicConfiguration]:
    from .graphs import triangle_graph

    return {
        "pm_square_2q": pm_square_2q(),
        "pm_square_3q": pm_square_3q(),
        "wa_triangle_3q": wa_triangle_3q(),
        "pentagram_3q": pentagram_3q(),
        "qudit_triangle_d2": qudit_config(triangle_graph(2)),
        "qudit_triangle_d4": qudit_config(triangle_graph(4)),
    }


# -- file format ------------------------------------------------------------------


def config_to_dict(cfg: MagicConfiguration) -> dict:
    return {
        "name": cfg.name,
        "n": cfg.n,
        "d": cfg.d,
        "reconstructed": cfg.reconstructed,
        "nodes": [
            {"label": label, "op": format_weyl(op)}
            for label, op in zip(cfg.node_labels, cfg.nodes)
        ],
        "lines": [
            {
                "occurrences": [[o.node, o.dagger] for o in line.occurrences],
                "claimed_phase": line.claimed_phase,
            }
            for line in cfg.lines
        ],
    }


def config_from_dict(data: dict) -> MagicConfiguration:
    n = int(data["n"])
    d = int(data["d"])
    nodes = tuple(parse_weyl(entry["op"], n, d) for entry in data["nodes"])
    labels = tuple(entry["label"] for entry in data["nodes"])
    lines = tuple(
        MagicLine(
            tuple(LineOccurrence(int(i), bool(dag)) for i, dag in entry["occurrences"]),
            int(entry["claimed_phase"]),
        )
        for entry in data["lines"]
    )
    return MagicConfiguration(
        name=data.get("name", "configuration"),
        n=n,
        d=d,
        nodes=nodes,
        node_labels=labels,
        lines=lines,
        reconstructed=bool(data.get("reconstructed", False)),
    )


def load_config(path) -> MagicConfiguration:
    with open(path, "r", encoding="utf-8") as fh:
        return config_from_dict(json.load(fh))


def save_config(cfg: MagicConfiguration, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(config_to_dict(cfg), fh, indent=2)
        fh.write("\n")
