"""Magic configurations: line products against the matrix oracle and the
parity contradiction checker."""

import numpy as np
import pytest

import oracle
from contextlab import (
    MagicConfiguration,
    builtin_configurations,
    parity_contradiction,
    pm_square,
    qudit_config,
    triangle_graph,
    verify_quantum_products,
)
from contextlab.errors import MalformedConfiguration
from contextlab.magic import (
    LineOccurrence,
    MagicLine,
    config_from_dict,
    config_to_dict,
    pm_square_2q,
    pm_square_3q,
)
from contextlab.weyl import WeylOperator, parse_weyl


def oracle_line_product(cfg, line) -> complex:
    """Independent dense-matrix product of one line; must be a scalar."""
    dim = cfg.d ** cfg.n
    mat = np.eye(dim, dtype=complex)
    for occ in line.occurrences:
        op = cfg.nodes[occ.node]
        factor = oracle.weyl_matrix(cfg.n, cfg.d, op.x, op.z, op.phase)
        if occ.dagger:
            factor = factor.conj().T
        mat = mat @ factor
    scalar = mat[0, 0]
    assert np.max(np.abs(mat - scalar * np.eye(dim))) < 1e-10
    return scalar


class TestPmSquare2q:
    def test_row_products_plus_one(self):
        cfg = pm_square_2q()
        products = verify_quantum_products(cfg)
        rows = products[:3]
        assert [p.computed_phase for p in rows] == [0, 0, 0]
        for p, line in zip(rows, cfg.lines[:3]):
            assert abs(oracle_line_product(cfg, line) - 1) < 1e-10

    def test_column_products(self):
        cfg = pm_square_2q()
        products = verify_quantum_products(cfg)
        cols = products[3:]
        # first two columns are +1, the Y1Y2 column is -1
        assert [p.computed_phase for p in cols] == [0, 0, 2]
        assert abs(oracle_line_product(cfg, cfg.lines[5]) + 1) < 1e-10

    def test_grand_product_and_contradiction(self):
        report = parity_contradiction(pm_square_2q())
        assert report.grand_phase == 2  # tau^2 = -1
        assert report.parity_sound
        assert report.contradiction


class TestPmSquare3q:
    def test_rows_plus_columns_minus(self):
        cfg = pm_square_3q()
        products = verify_quantum_products(cfg)
        assert [p.computed_phase for p in products[:3]] == [0, 0, 0]
        assert [p.computed_phase for p in products[3:]] == [2, 2, 2]
        for p, line in zip(products, cfg.lines):
            expected = 1 if p.computed_phase == 0 else -1
            assert abs(oracle_line_product(cfg, line) - expected) < 1e-10

    def test_row_labels(self):
        cfg = pm_square_3q()
        assert cfg.node_labels[:3] == ("X1X2", "X2X3", "X1X3")
        assert cfg.node_labels[3:6] == ("Z1Z2", "Z2Z3", "Z1Z3")
        assert cfg.node_labels[6:9] == ("Y1Y2", "Y2Y3", "Y1Y3")

    def test_contradiction(self):
        report = parity_contradiction(pm_square_3q())
        assert report.grand_phase == 2
        assert report.contradiction

    def test_generalization_to_five_qubits(self):
        report = parity_contradiction(pm_square(5))
        assert report.parity_sound
        assert report.contradiction

    def test_even_qubit_square_rejected(self):
        # even n would give an even number of -1 columns: grand product 1
        from contextlab import ContractViolation

        with pytest.raises(ContractViolation):
            pm_square(4)


class TestQuditConfig:
    @pytest.mark.parametrize("d", [2, 4])
    def test_line_products(self, d):
        cfg = qudit_config(triangle_graph(d))
        products = verify_quantum_products(cfg)
        # rows: +1, +1, -1; columns: +1 each
        assert products[0].computed_phase == 0
        assert products[1].computed_phase == 0
        assert products[2].computed_phase == d  # tau^d = -1
        for p in products[3:]:
            assert p.computed_phase == 0
        for p, line in zip(products, cfg.lines):
            expected = 1 if p.computed_phase == 0 else -1
            assert abs(oracle_line_product(cfg, line) - expected) < 1e-10

    @pytest.mark.parametrize("d", [2, 4])
    def test_grand_product_minus_one(self, d):
        report = parity_contradiction(qudit_config(triangle_graph(d)))
        assert report.grand_phase == d
        assert report.parity_sound
        assert report.contradiction

    def test_row_three_carries_the_stabilizer_identity(self):
        # prod_a G_a^dag times X_V should give the -1
        cfg = qudit_config(triangle_graph(2))
        row3 = cfg.lines[2]
        product = oracle_line_product(cfg, row3)
        assert abs(product + 1) < 1e-10

    def test_dagger_pairing(self):
        cfg = qudit_config(triangle_graph(4))
        for (label, plain, dag) in parity_contradiction(cfg).node_structure:
            assert plain == 1 and dag == 1


class TestReconstructions:
    def test_wa_triangle(self):
        cfg = builtin_configurations()["wa_triangle_3q"]
        assert cfg.reconstructed
        assert len(cfg.nodes) == 18
        assert len(cfg.lines) == 12
        report = parity_contradiction(cfg)
        assert report.parity_sound and report.contradiction
        # thin lines +1, thick lines -1: nine positive, three negative
        products = verify_quantum_products(cfg)
        phases = [p.computed_phase for p in products]
        assert phases.count(0) == 9 and phases.count(2) == 3

    def test_wa_triangle_every_node_on_two_lines(self):
        cfg = builtin_configurations()["wa_triangle_3q"]
        for (label, plain, dag) in parity_contradiction(cfg).node_structure:
            assert plain + dag == 2

    def test_pentagram(self):
        cfg = builtin_configurations()["pentagram_3q"]
        assert cfg.reconstructed
        assert len(cfg.nodes) == 10
        for (label, plain, dag) in parity_contradiction(cfg).node_structure:
            assert plain + dag == 2
        report = parity_contradiction(cfg)
        assert report.contradiction
        # the G-line carries the -X123 identity
        products = verify_quantum_products(cfg)
        assert [p.computed_phase for p in products] == [0, 0, 0, 2, 0, 0]


class TestCheckerMechanics:
    def test_claim_mismatch_reported(self):
        cfg = pm_square_2q()
        bad_lines = list(cfg.lines)
        bad_lines[0] = MagicLine(bad_lines[0].occurrences, 2)  # claim -1, truth +1
        bad = MagicConfiguration(
            name="bad", n=cfg.n, d=cfg.d, nodes=cfg.nodes,
            node_labels=cfg.node_labels, lines=tuple(bad_lines),
        )
        products = verify_quantum_products(bad)
        assert not products[0].matches

    def test_line_ordering_is_irrelevant(self):
        for name, cfg in builtin_configurations().items():
            reversed_lines = tuple(
                MagicLine(tuple(reversed(line.occurrences)), line.claimed_phase)
                for line in cfg.lines
            )
            flipped = MagicConfiguration(
                name=cfg.name, n=cfg.n, d=cfg.d, nodes=cfg.nodes,
                node_labels=cfg.node_labels, lines=reversed_lines,
                reconstructed=cfg.reconstructed,
            )
            lhs = [p.computed_phase for p in verify_quantum_products(cfg)]
            rhs = [p.computed_phase for p in verify_quantum_products(flipped)]
            assert lhs == rhs

    def test_noncommuting_line_rejected(self):
        x = WeylOperator.shift(1, 1, 2)
        z = WeylOperator.clock(1, 1, 2)
        with pytest.raises(MalformedConfiguration):
            MagicConfiguration(
                name="bad", n=1, d=2, nodes=(x, z), node_labels=("X", "Z"),
                lines=(
                    MagicLine((LineOccurrence(0), LineOccurrence(1)), 0),
                    MagicLine((LineOccurrence(0), LineOccurrence(1)), 0),
                ),
            )

    def test_non_scalar_line_rejected(self):
        x1 = parse_weyl("X1", 2, 2)
        x2 = parse_weyl("X2", 2, 2)
        cfg = MagicConfiguration(
            name="bad", n=2, d=2, nodes=(x1, x2), node_labels=("X1", "X2"),
            lines=(
                MagicLine((LineOccurrence(0), LineOccurrence(1)), 0),
                MagicLine((LineOccurrence(0), LineOccurrence(1)), 0),
            ),
        )
        with pytest.raises(MalformedConfiguration):
            verify_quantum_products(cfg)

    def test_unsound_occurrence_structure_flagged(self):
        # a non-Hermitian node occurring only plain cannot support parity
        a = parse_weyl("X1", 1, 4)
        b = parse_weyl("X1^2", 1, 4)
        cfg = MagicConfiguration(
            name="unsound", n=1, d=4, nodes=(a, b), node_labels=("A", "B"),
            lines=(
                MagicLine((LineOccurrence(0), LineOccurrence(0), LineOccurrence(1)), 0),
                MagicLine((LineOccurrence(1), LineOccurrence(1)), 0),
            ),
        )
        report = parity_contradiction(cfg)
        assert not report.parity_sound
        assert not report.contradiction
        assert "not a parity proof" in report.detail

    def test_parity_soundness_arithmetic(self):
        # for sound structures, any unit-modulus valuation gives grand
        # product 1: sample random valuations for a qudit configuration
        cfg = qudit_config(triangle_graph(4))
        rng = np.random.default_rng(73)
        for _ in range(20):
            values = np.exp(2j * np.pi * rng.integers(4, size=len(cfg.nodes)) / 4)
            grand = 1.0 + 0j
            for line in cfg.lines:
                for occ in line.occurrences:
                    v = values[occ.node]
                    grand *= v.conjugate() if occ.dagger else v
            assert abs(grand - 1) < 1e-9


class TestFileFormat:
    def test_round_trip_all_builtins(self):
        for name, cfg in builtin_configurations().items():
            again = config_from_dict(config_to_dict(cfg))
            assert again.nodes == cfg.nodes
            assert again.lines == cfg.lines
            lhs = parity_contradiction(cfg)
            rhs = parity_contradiction(again)
            assert lhs.grand_phase == rhs.grand_phase
            assert lhs.contradiction == rhs.contradiction
