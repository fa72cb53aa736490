"""The named pre/post-selection paradoxes as executable scenarios.

Each scenario derives its forbidden and forced intermediate outcomes twice:
once symbolically, from the operator-sandwich identity the construction rests
on, and once numerically, from vanishing transition amplitudes.  The two must
agree, and the classical contradiction is computed by enumerating every
classical configuration rather than asserted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import ContractViolation
from .graphs import (
    WeightedGraph,
    is_ghz_graph,
    neighborhood_clock,
    stabilizer_context,
    stabilizer_generators,
    triangle_graph,
)
from .reporting import CheckResult, ReportDocument
from .states import (
    VANISH_TOL,
    StateVector,
    abl_probability,
    amplitude,
    enumerate_outcomes,
    joint_eigenspace,
    operator_norm,
    outcome_projector,
    postselection_probability,
    subspace_projector,
)
from .weyl import DEFAULT_MATRIX_CAP, MeasurementContext, WeylOperator

FORBIDDEN = "forbidden"
FORCED = "forced"
POSSIBLE = "possible"


def omega(d: int, k: int = 1) -> complex:
    return complex(np.exp(2j * np.pi * k / d))


def value_label(value: complex, d: int) -> str:
    """Unit-modulus eigenvalue as an exponent label: +1, -1, w^k."""
    for k in range(d):
        if abs(value - omega(d, k)) < 1e-8:
            if k == 0:
                return "+1"
            if 2 * k == d:
                return "-1"
            return f"w^{k}"
    return f"{value:.4f}"


@dataclass(frozen=True)
class OutcomeRecord:
    label: str
    value: complex
    amplitude: complex
    abl_probability: float
    status: str
    predicted_status: str

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "value": [self.value.real, self.value.imag],
            "amplitude": [self.amplitude.real, self.amplitude.imag],
            "abl_probability": self.abl_probability,
            "status": self.status,
            "predicted_status": self.predicted_status,
        }


@dataclass(frozen=True)
class ContextVerdict:
    name: str
    outcomes: tuple[OutcomeRecord, ...]
    forced_label: str | None

    def to_dict(self) -> dict:
        return {
            "context": self.name,
            "outcomes": [o.to_dict() for o in self.outcomes],
            "forced": self.forced_label,
        }


@dataclass
class ScenarioReport:
    scenario: str
    params: dict
    feasible: bool
    overlap: complex | None
    contexts: list[ContextVerdict] = field(default_factory=list)
    contradiction: bool | None = None
    classical: dict | None = None
    checks: list[CheckResult] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def forced_values(self) -> dict[str, str]:
        return {c.name: c.forced_label for c in self.contexts if c.forced_label}

    def status_of(self, context_name: str, outcome_label: str) -> str:
        """forbidden/forced/possible for one outcome of one context."""
        for ctx in self.contexts:
            if ctx.name == context_name:
                for rec in ctx.outcomes:
                    if rec.label == outcome_label:
                        return rec.status
        raise KeyError(f"no outcome {outcome_label!r} in context {context_name!r}")

    def forbidden_outcomes(self, context_name: str) -> list[str]:
        for ctx in self.contexts:
            if ctx.name == context_name:
                return [r.label for r in ctx.outcomes if r.status == FORBIDDEN]
        raise KeyError(f"no context {context_name!r}")

    def to_report_document(self) -> ReportDocument:
        data = {
            "feasible": self.feasible,
            "overlap": None
            if self.overlap is None
            else [self.overlap.real, self.overlap.imag],
            "contexts": [c.to_dict() for c in self.contexts],
            "contradiction": self.contradiction,
            "classical": self.classical,
        }
        return ReportDocument(
            kind="scenario",
            identifier=self.scenario,
            inputs=self.params,
            checks=list(self.checks),
            trace=list(self.trace),
            data=data,
        )


@dataclass(frozen=True)
class PrePostScenario:
    """A user-defined pre/post-selection scenario.

    Preparation and post-selection are (context, joint outcomes) pairs whose
    eigenspaces must be nonempty; intermediates are the counterfactual
    contexts analyzed between them.
    """

    name: str
    preparation: tuple[MeasurementContext, tuple]
    postselection: tuple[MeasurementContext, tuple]
    intermediates: tuple[MeasurementContext, ...]

    def analyze(
        self, tol: float = VANISH_TOL, max_dim: int = DEFAULT_MATRIX_CAP
    ) -> ScenarioReport:
        """Amplitude table and forced/forbidden statuses for every
        intermediate context; infeasible pre/post pairs yield a structured
        infeasible report rather than an error."""
        prep_ctx, prep_out = self.preparation
        post_ctx, post_out = self.postselection
        pre_basis = joint_eigenspace(prep_ctx, prep_out, max_dim=max_dim)
        post_basis = joint_eigenspace(post_ctx, post_out, max_dim=max_dim)
        if not pre_basis or not post_basis:
            raise ContractViolation("preparation/post-selection eigenspace is empty")
        if len(pre_basis) != 1 or len(post_basis) != 1:
            raise ContractViolation(
                "vector analysis needs rank-1 preparation and post-selection"
            )
        psi_i, psi_f = pre_basis[0], post_basis[0]
        overlap = psi_i.overlap(psi_f)
        report = ScenarioReport(
            scenario=self.name,
            params={},
            feasible=abs(overlap) > tol,
            overlap=overlap,
        )
        if not report.feasible:
            report.trace.append("pre/post pair orthogonal: scenario infeasible")
            return report
        for ctx in self.intermediates:
            verdict, _ = _context_verdict(
                psi_i, psi_f, ctx, " ".join(ctx.labels), {}, tol, max_dim
            )
            report.contexts.append(verdict)
        return report


# -- shared machinery ---------------------------------------------------------


def _unique_state(ctx: MeasurementContext, outcomes, max_dim: int) -> StateVector:
    basis = joint_eigenspace(ctx, outcomes, max_dim=max_dim)
    if len(basis) != 1:
        raise ContractViolation(
            f"expected a unique joint eigenstate, got dimension {len(basis)}"
        )
    return basis[0]


def _context_verdict(
    psi_i: StateVector,
    psi_f: StateVector,
    ctx: MeasurementContext,
    name: str,
    predicted: dict[str, str],
    tol: float,
    max_dim: int,
) -> tuple[ContextVerdict, CheckResult]:
    """Amplitude table for one intermediate context plus the agreement check.

    ``predicted`` maps outcome labels to forbidden/forced statuses derived
    from the closed-form identity; unlisted outcomes default to forbidden for
    contexts with a forced outcome.
    """
    projs = enumerate_outcomes(ctx, max_dim=max_dim)
    amps = [amplitude(psi_i, proj, psi_f) for proj in projs]
    abl = abl_probability(psi_i, psi_f, projs, tol=tol)
    d = ctx.d
    statuses = []
    for a, proj in zip(amps, projs):
        statuses.append(FORBIDDEN if abs(a) < tol else POSSIBLE)
    for i, status in enumerate(statuses):
        if status == POSSIBLE and all(
            s == FORBIDDEN for j, s in enumerate(statuses) if j != i
        ):
            statuses[i] = FORCED
    default_status = FORBIDDEN if predicted else POSSIBLE
    records = []
    for proj, a, p, status in zip(projs, amps, abl, statuses):
        label = ",".join(value_label(v, d) for v in proj.outcome)
        records.append(
            OutcomeRecord(
                label=label,
                value=proj.outcome[0]
                if len(proj.outcome) == 1
                else complex(np.prod(proj.outcome)),
                amplitude=a,
                abl_probability=p,
                status=status,
                predicted_status=predicted.get(label, default_status),
            )
        )
    forced = [r.label for r in records if r.status == FORCED]
    verdict = ContextVerdict(name, tuple(records), forced[0] if forced else None)
    mismatches = [r.label for r in records if r.status != r.predicted_status]
    residual = max(
        (abs(r.amplitude) for r in records if r.predicted_status == FORBIDDEN),
        default=0.0,
    )
    check = CheckResult(
        name=f"{name}: symbolic derivation matches amplitudes",
        passed=not mismatches,
        residual=residual,
        tolerance=tol,
        detail="" if not mismatches else f"status mismatch at {mismatches}",
    )
    return verdict, check


def _classical_hole_search(
    n: int,
    d: int,
    forced: list[tuple[WeylOperator, complex]],
) -> dict:
    """Enumerate all d^n hole configurations against forced Z-type values.

    Each forced observable must be a pure Z monomial; a configuration
    k in Z_d^n assigns it the classical value w^{sum_b z_b k_b}.
    """
    for op, _ in forced:
        if any(op.x) or op.phase:
            raise ContractViolation("classical hole model needs pure Z observables")
    consistent = 0
    for k in itertools.product(range(d), repeat=n):
        ok = True
        for op, val in forced:
            classical = omega(d, sum(zb * kb for zb, kb in zip(op.z, k)))
            if abs(classical - val) > 1e-8:
                ok = False
                break
        if ok:
            consistent += 1
    return {
        "configurations": d ** n,
        "consistent": consistent,
        "contradiction": consistent == 0,
    }


def _check(name, passed, residual=None, tolerance=None, detail="") -> CheckResult:
    return CheckResult(name, bool(passed), residual, tolerance, detail)


def _sign_tuple(values) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    if any(v not in (-1, 1) for v in out):
        raise ContractViolation(f"signs must be +1/-1, got {out}")
    return out


# -- qubit pigeonhole family --------------------------------------------------


def _pair_contexts(n: int = 3) -> list[tuple[tuple[int, int, int], MeasurementContext]]:
    """Z_ab contexts over cyclic pairs of (1, 2, 3) with complement c."""
    out = []
    for a, b, c in [(1, 2, 3), (2, 3, 1), (1, 3, 2)]:
        zab = WeylOperator.clock(a, n, 2) * WeylOperator.clock(b, n, 2)
        ctx = MeasurementContext((zab,), (f"Z{a}Z{b}",))
        out.append(((a, b, c), ctx))
    return out


def _x_context(n: int = 3) -> MeasurementContext:
    return MeasurementContext(
        tuple(WeylOperator.shift(a, n, 2) for a in range(1, n + 1)),
        tuple(f"X{a}" for a in range(1, n + 1)),
    )


def _y_context(n: int = 3) -> MeasurementContext:
    return MeasurementContext(
        tuple(WeylOperator.pauli_y(a, n, 2) for a in range(1, n + 1)),
        tuple(f"Y{a}" for a in range(1, n + 1)),
    )


def pigeonhole_state_independent(
    s, t, tol: float = VANISH_TOL, max_dim: int = DEFAULT_MATRIX_CAP
) -> ScenarioReport:
    """Three pigeons, arbitrary X-preparation outcomes s and Y-post-selection
    outcomes t: the detector at v_ab = s_a s_b t_a t_b never fires."""
    s = _sign_tuple(s)
    t = _sign_tuple(t)
    psi_i = _unique_state(_x_context(), [complex(v) for v in s], max_dim)
    psi_f = _unique_state(_y_context(), [complex(v) for v in t], max_dim)
    overlap = psi_i.overlap(psi_f)
    report = ScenarioReport(
        scenario="pigeonhole-si",
        params={"s": list(s), "t": list(t)},
        feasible=True,
        overlap=overlap,
    )
    report.trace.append(
        "identity: v_ab <psi_i|P_ab^{v}|psi_f> = <psi_i|X_ab P_ab^{v} Y_ab|psi_f>"
        " = -v_ab <psi_i|P_ab^{v}|psi_f>, so the amplitude at v_ab = s_a s_b t_a t_b vanishes"
    )
    v = {}
    forced_for_classical = []
    for (a, b, c), ctx in _pair_contexts():
        vab = s[a - 1] * s[b - 1] * t[a - 1] * t[b - 1]
        v[(a, b)] = vab
        predicted = {
            value_label(complex(vab), 2): FORBIDDEN,
            value_label(complex(-vab), 2): FORCED,
        }
        verdict, check = _context_verdict(
            psi_i, psi_f, ctx, f"Z{a}Z{b}", predicted, tol, max_dim
        )
        report.contexts.append(verdict)
        report.checks.append(check)
        report.trace.append(f"Z{a}Z{b}: forbidden outcome {vab:+d}, forced {-vab:+d}")
        forced_for_classical.append((ctx.observables[0], complex(-vab)))
    parity = v[(1, 2)] * v[(2, 3)] * v[(1, 3)]
    report.checks.append(
        _check(
            "parity identity v12*v23*v13 = +1",
            parity == 1,
            residual=float(abs(parity - 1)),
            tolerance=0.0,
            detail=f"v = {v}",
        )
    )
    report.classical = _classical_hole_search(3, 2, forced_for_classical)
    report.contradiction = report.classical["contradiction"]
    report.checks.append(
        _check(
            "no classical hole configuration matches the forced values",
            report.contradiction,
            detail=f"{report.classical['consistent']}/{report.classical['configurations']} consistent",
        )
    )
    report.trace.append(
        "classically the number of pairs in different holes is even; the forced"
        f" values demand product {-parity}, impossible over all 8 configurations"
    )
    return report


def pigeonhole_original(
    tol: float = VANISH_TOL, max_dim: int = DEFAULT_MATRIX_CAP
) -> ScenarioReport:
    """|+,+,+> prepared, |0,0,0>_Y post-selected: every pair of qubits would
    have been found in different holes."""
    report = pigeonhole_state_independent((1, 1, 1), (1, 1, 1), tol=tol, max_dim=max_dim)
    report.scenario = "pigeonhole-original"
    report.params = {}
    # the forced branch of each binary context must carry ABL probability 1
    for ctx in report.contexts:
        for rec in ctx.outcomes:
            if rec.status == FORCED:
                report.checks.append(
                    _check(
                        f"{ctx.name}: forced outcome has ABL probability 1",
                        abs(rec.abl_probability - 1.0) < tol,
                        residual=abs(rec.abl_probability - 1.0),
                        tolerance=tol,
                    )
                )
    return report


def magic_square_pigeonhole(
    pre_vec: StateVector | None = None,
    post_vec: StateVector | None = None,
    tol: float = VANISH_TOL,
    max_dim: int = DEFAULT_MATRIX_CAP,
) -> ScenarioReport:
    """Subspace version over the +1 eigenspaces of {X_ab} and {Y_ab} rows.

    Without vectors, checks the operator identity P_pre P_ab^+ P_post = 0 in
    spectral norm, quantifying over every state pair at once; with vectors it
    validates membership and reduces to the vector scenario.
    """
    x_row = MeasurementContext(
        tuple(
            WeylOperator.shift(a, 3, 2) * WeylOperator.shift(b, 3, 2)
            for a, b in [(1, 2), (2, 3), (1, 3)]
        ),
        ("X1X2", "X2X3", "X1X3"),
    )
    y_row = MeasurementContext(
        tuple(
            WeylOperator.pauli_y(a, 3, 2) * WeylOperator.pauli_y(b, 3, 2)
            for a, b in [(1, 2), (2, 3), (1, 3)]
        ),
        ("Y1Y2", "Y2Y3", "Y1Y3"),
    )
    pre_basis = joint_eigenspace(x_row, (1, 1, 1), max_dim=max_dim)
    post_basis = joint_eigenspace(y_row, (1, 1, 1), max_dim=max_dim)
    p_pre = subspace_projector(pre_basis)
    p_post = subspace_projector(post_basis)

    if (pre_vec is None) != (post_vec is None):
        raise ContractViolation("supply both vectors or neither")

    if pre_vec is not None:
        for vec, proj, side in ((pre_vec, p_pre, "pre"), (post_vec, p_post, "post")):
            if np.linalg.norm(proj @ vec.amplitudes - vec.amplitudes) > 1e-8:
                raise ContractViolation(f"{side}-selection vector is outside its subspace")
        report = ScenarioReport(
            scenario="magic-square-pigeonhole",
            params={"mode": "vectors"},
            feasible=True,
            overlap=pre_vec.overlap(post_vec),
        )
        forced_classical = []
        for (a, b, c), ctx in _pair_contexts():
            predicted = {"+1": FORBIDDEN, "-1": FORCED}
            verdict, check = _context_verdict(
                pre_vec, post_vec, ctx, f"Z{a}Z{b}", predicted, tol, max_dim
            )
            report.contexts.append(verdict)
            report.checks.append(check)
            forced_classical.append((ctx.observables[0], complex(-1)))
        report.classical = _classical_hole_search(3, 2, forced_classical)
        report.contradiction = report.classical["contradiction"]
        report.checks.append(
            _check(
                "no classical hole configuration matches the forced values",
                report.contradiction,
            )
        )
        return report

    report = ScenarioReport(
        scenario="magic-square-pigeonhole",
        params={"mode": "subspace"},
        feasible=True,
        overlap=None,
    )
    report.trace.append(
        "P_pre projects on the +1 eigenspace of {X12,X23,X13} (dimension 2);"
        " P_post on that of {Y12,Y23,Y13}"
    )
    report.checks.append(
        _check("pre-selection subspace has dimension 2", len(pre_basis) == 2)
    )
    report.checks.append(
        _check("post-selection subspace has dimension 2", len(post_basis) == 2)
    )
    forced_classical = []
    for (a, b, c), ctx in _pair_contexts():
        plus = outcome_projector(ctx, (1,), max_dim=max_dim)
        norm = operator_norm(p_pre @ plus.matrix @ p_post)
        report.checks.append(
            _check(
                f"operator identity P_pre P_{a}{b}^+ P_post = 0",
                norm < tol,
                residual=norm,
                tolerance=tol,
            )
        )
        forced_classical.append((ctx.observables[0], complex(-1)))
    report.classical = _classical_hole_search(3, 2, forced_classical)
    report.contradiction = report.classical["contradiction"]
    report.checks.append(
        _check(
            "no classical hole configuration matches the forced values",
            report.contradiction,
        )
    )
    report.trace.append(
        "every state pair from the two subspaces forces all three pairs of"
        " qubits into different holes: the pigeonhole violation is state-independent"
    )
    return report


# -- Cheshire cat family -------------------------------------------------------


def cheshire_cat_state_independent(
    alpha: int,
    beta: int,
    mu: int,
    nu: int,
    tol: float = VANISH_TOL,
    max_dim: int = DEFAULT_MATRIX_CAP,
) -> ScenarioReport:
    """Bell-state preparation |Phi_ab>, product post-selection |(-1)^mu>|nu>.

    Forced path u = beta + nu, forced spin v = alpha + mu, forbidden
    correlation w = alpha + beta + mu + nu (all mod 2): the spin is found on
    the path the particle did not take.
    """
    bits = tuple(int(v) % 2 for v in (alpha, beta, mu, nu))
    alpha, beta, mu, nu = bits
    prep = MeasurementContext(
        (
            WeylOperator.shift(1, 2, 2) * WeylOperator.shift(2, 2, 2),
            WeylOperator.clock(1, 2, 2) * WeylOperator.clock(2, 2, 2),
        ),
        ("X1X2", "Z1Z2"),
    )
    post = MeasurementContext(
        (WeylOperator.shift(1, 2, 2), WeylOperator.clock(2, 2, 2)),
        ("X1", "Z2"),
    )
    psi_i = _unique_state(prep, ((-1) ** alpha, (-1) ** beta), max_dim)
    psi_f = _unique_state(post, ((-1) ** mu, (-1) ** nu), max_dim)
    u = (beta + nu) % 2
    v = (alpha + mu) % 2
    w = (alpha + beta + mu + nu) % 2
    report = ScenarioReport(
        scenario="cheshire-cat-si",
        params={"alpha": alpha, "beta": beta, "mu": mu, "nu": nu},
        feasible=True,
        overlap=psi_i.overlap(psi_f),
    )
    report.trace.append(
        "path: (-1)^(beta+nu) <Pi^{Z1}_u> = <Z12 Pi^{Z1}_u Z2> = (-1)^u <Pi^{Z1}_u>"
    )
    report.trace.append(
        "spin: (-1)^(alpha+mu) <Pi^{X2}_v> = <X12 Pi^{X2}_v X1> = (-1)^v <Pi^{X2}_v>"
    )
    report.trace.append(
        "correlation: (-1)^(alpha+beta+mu+nu) <Pi^{ZX}_w> = -<Y12 Pi^{ZX}_w X1Z2>"
        " = -(-1)^w <Pi^{ZX}_w>"
    )
    z1 = MeasurementContext((WeylOperator.clock(1, 2, 2),), ("Z1",))
    x2 = MeasurementContext((WeylOperator.shift(2, 2, 2),), ("X2",))
    zx = MeasurementContext(
        (WeylOperator.clock(1, 2, 2) * WeylOperator.shift(2, 2, 2),), ("Z1X2",)
    )
    plans = [
        (z1, "Z1", {value_label((-1.0) ** u, 2): FORCED, value_label((-1.0) ** (u + 1), 2): FORBIDDEN}),
        (x2, "X2", {value_label((-1.0) ** v, 2): FORCED, value_label((-1.0) ** (v + 1), 2): FORBIDDEN}),
        (zx, "Z1X2", {value_label((-1.0) ** w, 2): FORBIDDEN, value_label((-1.0) ** (w + 1), 2): FORCED}),
    ]
    forced_vals = {}
    for ctx, name, predicted in plans:
        verdict, check = _context_verdict(psi_i, psi_f, ctx, name, predicted, tol, max_dim)
        report.contexts.append(verdict)
        report.checks.append(check)
        forced_vals[name] = next(
            r.value for r in verdict.outcomes if r.predicted_status == FORCED
        )
    product_rule = forced_vals["Z1"] * forced_vals["X2"]
    anti = abs(product_rule + forced_vals["Z1X2"]) < 1e-9
    report.checks.append(
        _check(
            "forced correlation anti-aligned with forced path*spin",
            anti,
            detail=f"path*spin = {product_rule.real:+.0f}, Z1X2 forced = {forced_vals['Z1X2'].real:+.0f}",
        )
    )
    consistent = 0
    for pz, px in itertools.product((1, -1), repeat=2):
        if (
            abs(pz - forced_vals["Z1"]) < 1e-9
            and abs(px - forced_vals["X2"]) < 1e-9
            and abs(pz * px - forced_vals["Z1X2"]) < 1e-9
        ):
            consistent += 1
    report.classical = {
        "configurations": 4,
        "consistent": consistent,
        "contradiction": consistent == 0,
    }
    report.contradiction = consistent == 0
    report.checks.append(
        _check(
            "no noncontextual (path, spin) valuation matches the forced values",
            report.contradiction,
        )
    )
    report.trace.append(
        f"the particle takes path |{u}> while its spin (-1)^{v} rides path |{(u + 1) % 2}>:"
        " a grin without a cat"
    )
    return report


def cheshire_cat(tol: float = VANISH_TOL, max_dim: int = DEFAULT_MATRIX_CAP) -> ScenarioReport:
    """|Phi_+> prepared, |+>|0> post-selected: the particle travels path |0>
    while its spin is found on path |1>."""
    report = cheshire_cat_state_independent(0, 0, 0, 0, tol=tol, max_dim=max_dim)
    report.scenario = "cheshire-cat"
    report.params = {}
    return report


# -- GHZ / pentagram family ----------------------------------------------------


def ghz_pentagram(
    s, t, tol: float = VANISH_TOL, max_dim: int = DEFAULT_MATRIX_CAP
) -> ScenarioReport:
    """GHZ-class preparation (eigenstate of {G_a = X_a Z_b Z_c}) with X-basis
    post-selection; feasible only when s*t = -1, and then Z_ab is forced to
    v_ab = t_c s_c with product -1."""
    s = _sign_tuple(s)
    t = _sign_tuple(t)
    graph = triangle_graph(2)
    prep = stabilizer_context(graph)
    psi_i = _unique_state(prep, [complex(v) for v in s], max_dim)
    psi_f = _unique_state(_x_context(), [complex(v) for v in t], max_dim)
    overlap = psi_i.overlap(psi_f)
    s_prod = s[0] * s[1] * s[2]
    t_prod = t[0] * t[1] * t[2]
    predicted_feasible = s_prod * t_prod == -1
    feasible = abs(overlap) > tol
    report = ScenarioReport(
        scenario="ghz-pentagram",
        params={"s": list(s), "t": list(t)},
        feasible=feasible,
        overlap=overlap,
    )
    report.trace.append(
        "-s <psi_i|psi_f> = <psi_i|X123|psi_f> = t <psi_i|psi_f>, so st != -1"
        " forces orthogonal pre/post states"
    )
    report.checks.append(
        _check(
            "feasibility matches the st = -1 criterion",
            predicted_feasible == feasible,
            residual=abs(overlap) if not predicted_feasible else None,
            tolerance=tol if not predicted_feasible else None,
            detail=f"st = {s_prod * t_prod:+d}, |overlap| = {abs(overlap):.3e}",
        )
    )
    if not feasible:
        report.trace.append("pre/post pair orthogonal: scenario infeasible (st = +1)")
        return report
    v = {}
    forced_classical = []
    for (a, b, c), ctx in _pair_contexts():
        vab = t[c - 1] * s[c - 1]
        v[(a, b)] = vab
        predicted = {
            value_label(complex(vab), 2): FORCED,
            value_label(complex(-vab), 2): FORBIDDEN,
        }
        verdict, check = _context_verdict(
            psi_i, psi_f, ctx, f"Z{a}Z{b}", predicted, tol, max_dim
        )
        report.contexts.append(verdict)
        report.checks.append(check)
        report.trace.append(
            f"s_{c} t_{c} <Pi^v_{a}{b}> = <G_{c} Pi^v_{a}{b} X_{c}> = v <Pi^v_{a}{b}>:"
            f" forced v_{a}{b} = {vab:+d}"
        )
        forced_classical.append((ctx.observables[0], complex(vab)))
    parity = v[(1, 2)] * v[(2, 3)] * v[(1, 3)]
    report.checks.append(
        _check(
            "parity v12*v23*v13 = st = -1",
            parity == -1 == s_prod * t_prod,
            detail=f"v = {v}",
        )
    )
    report.classical = _classical_hole_search(3, 2, forced_classical)
    report.contradiction = report.classical["contradiction"]
    report.checks.append(
        _check(
            "no classical hole configuration matches the forced values",
            report.contradiction,
            detail=f"{report.classical['consistent']}/8 consistent",
        )
    )
    report.trace.append(
        "an odd number of pairs in different holes contradicts putting three"
        " pigeons into two holes"
    )
    return report


# -- qudit graph-state paradoxes ------------------------------------------------


def _x_eigenstate_context(n: int, d: int) -> MeasurementContext:
    return MeasurementContext(
        tuple(WeylOperator.shift(a, n, d) for a in range(1, n + 1)),
        tuple(f"X{a}" for a in range(1, n + 1)),
    )


def _z_eigenstate_context(n: int, d: int) -> MeasurementContext:
    return MeasurementContext(
        tuple(WeylOperator.clock(a, n, d) for a in range(1, n + 1)),
        tuple(f"Z{a}" for a in range(1, n + 1)),
    )


def qudit_pigeonhole(
    graph: WeightedGraph,
    g,
    h,
    tol: float = VANISH_TOL,
    max_dim: int = DEFAULT_MATRIX_CAP,
) -> ScenarioReport:
    """n pigeons in d holes from a GHZ graph: stabilizer eigenvalues w^{g_a}
    prepared, X outcomes w^{h_a} post-selected.

    Feasibility requires prod h = -prod g; the intermediate Z_{N_a} is then
    forced to S_a = g_a h_a^*, whose product is -1 while every classical hole
    configuration yields +1.
    """
    verdict = is_ghz_graph(graph)
    if not verdict.is_ghz:
        raise ContractViolation(f"not a GHZ graph: {verdict.reason}")
    n, d = graph.n, graph.d
    g = tuple(int(v) % d for v in g)
    h = tuple(int(v) % d for v in h)
    prep = stabilizer_context(graph)
    post = _x_eigenstate_context(n, d)
    psi_i = _unique_state(prep, [omega(d, k) for k in g], max_dim)
    psi_f = _unique_state(post, [omega(d, k) for k in h], max_dim)
    overlap = psi_i.overlap(psi_f)
    feasible = abs(overlap) > tol
    # prod h = -prod g  <=>  sum(h) = sum(g) + d/2 (mod d)
    parity_ok = (sum(h) - sum(g)) % d == d // 2
    report = ScenarioReport(
        scenario="qudit-pigeonhole",
        params={"n": n, "d": d, "g": list(g), "h": list(h), "edges": [list(e) for e in graph.edges()]},
        feasible=feasible,
        overlap=overlap,
    )
    report.trace.append(
        "<psi_i^g|X_V|psi_f^h> evaluated two ways: prod_a h_a versus"
        " -prod_a g_a (using prod_a G_a = -X_V), so prod h != -prod g kills the overlap"
    )
    report.checks.append(
        _check(
            "infeasible whenever prod h != -prod g",
            parity_ok or not feasible,
            residual=None if parity_ok else abs(overlap),
            tolerance=None if parity_ok else tol,
            detail=f"parity condition {'holds' if parity_ok else 'fails'},"
            f" |overlap| = {abs(overlap):.3e}",
        )
    )
    if not feasible:
        report.trace.append("pre/post pair orthogonal: scenario infeasible")
        return report
    forced_classical = []
    s_exponents = []
    for a in range(n):
        ctx = MeasurementContext((neighborhood_clock(graph, a),), (f"Z_N{a + 1}",))
        s_exp = (g[a] - h[a]) % d
        s_exponents.append(s_exp)
        predicted = {value_label(omega(d, s_exp), d): FORCED}
        spectrum = enumerate_outcomes(ctx, max_dim=max_dim)
        for proj in spectrum:
            label = value_label(proj.outcome[0], d)
            predicted.setdefault(label, FORBIDDEN)
        verdict_ctx, check = _context_verdict(
            psi_i, psi_f, ctx, f"Z_N{a + 1}", predicted, tol, max_dim
        )
        report.contexts.append(verdict_ctx)
        report.checks.append(check)
        report.trace.append(
            f"S_{a + 1} <Pi_S> = <G_{a + 1} Pi_S X_{a + 1}^dag> = g h* <Pi_S>:"
            f" forced S_{a + 1} = w^{s_exp}"
        )
        forced_classical.append((ctx.observables[0], omega(d, s_exp)))
    total = sum(s_exponents) % d
    report.checks.append(
        _check(
            "forced product prod_a S_a = -1",
            total == d // 2,
            detail=f"sum of S exponents = {total} (d/2 = {d // 2})",
        )
    )
    report.classical = _classical_hole_search(n, d, forced_classical)
    report.contradiction = report.classical["contradiction"]
    report.checks.append(
        _check(
            "no classical hole configuration matches the forced values",
            report.contradiction,
            detail=f"{report.classical['consistent']}/{report.classical['configurations']} consistent",
        )
    )
    report.trace.append(
        "classically prod_a S_a = prod_a s_a^{d_a} = 1 since every vertex sum"
        " vanishes mod d: the forced -1 is unreachable"
    )
    return report


def qudit_product_prepost(
    graph: WeightedGraph,
    s,
    h,
    tol: float = VANISH_TOL,
    max_dim: int = DEFAULT_MATRIX_CAP,
) -> ScenarioReport:
    """Product-state preparation in the Z basis, X-basis post-selection.

    All outcome pairs are feasible; the intermediate G_a is forced to
    g_a = h_a S_a with S_a = prod_b s_b^{Gamma_ab}, which pins the X_V value
    to -prod h while the post-state is an X_V eigenstate with value +prod h.
    """
    verdict = is_ghz_graph(graph)
    if not verdict.is_ghz:
        raise ContractViolation(f"not a GHZ graph: {verdict.reason}")
    n, d = graph.n, graph.d
    s = tuple(int(v) % d for v in s)
    h = tuple(int(v) % d for v in h)
    prep = _z_eigenstate_context(n, d)
    post = _x_eigenstate_context(n, d)
    psi_i = _unique_state(prep, [omega(d, k) for k in s], max_dim)
    psi_f = _unique_state(post, [omega(d, k) for k in h], max_dim)
    overlap = psi_i.overlap(psi_f)
    report = ScenarioReport(
        scenario="qudit-product",
        params={"n": n, "d": d, "s": list(s), "h": list(h), "edges": [list(e) for e in graph.edges()]},
        feasible=abs(overlap) > tol,
        overlap=overlap,
    )
    report.checks.append(
        _check(
            "product pre-selection is always feasible",
            abs(overlap) > tol,
            residual=abs(overlap),
            tolerance=tol,
        )
    )
    gens = stabilizer_generators(graph)
    s_exponents = []
    g_exponents = []
    for a in range(n):
        s_exp = sum(graph.weights[a][b] * s[b] for b in range(n)) % d
        g_exp = (h[a] + s_exp) % d
        s_exponents.append(s_exp)
        g_exponents.append(g_exp)
        ctx = MeasurementContext((gens[a],), (f"G{a + 1}",))
        predicted = {value_label(omega(d, g_exp), d): FORCED}
        for proj in enumerate_outcomes(ctx, max_dim=max_dim):
            predicted.setdefault(value_label(proj.outcome[0], d), FORBIDDEN)
        verdict_ctx, check = _context_verdict(
            psi_i, psi_f, ctx, f"G{a + 1}", predicted, tol, max_dim
        )
        report.contexts.append(verdict_ctx)
        report.checks.append(check)
        report.trace.append(
            f"h_a S_a <Pi_g> = <Z_N{a + 1} Pi_g X_{a + 1}> = g <Pi_g>:"
            f" forced g_{a + 1} = w^{g_exp} with S_{a + 1} = w^{s_exp}"
        )
    total_s = sum(s_exponents) % d
    report.checks.append(
        _check(
            "prod_a S_a = 1",
            total_s == 0,
            detail=f"sum of S exponents = {total_s}",
        )
    )
    derived_xv = (d // 2 + sum(g_exponents)) % d  # -prod g_a as an exponent
    eigen_xv = sum(h) % d
    dilemma = derived_xv != eigen_xv
    # the post-state really is an X_V eigenstate with eigenvalue prod h
    xv = WeylOperator.identity(n, d)
    for a in range(1, n + 1):
        xv = xv * WeylOperator.shift(a, n, d)
    image = xv.to_matrix(max_dim=max_dim) @ psi_f.amplitudes
    eigen_residual = float(
        np.linalg.norm(image - omega(d, eigen_xv) * psi_f.amplitudes)
    )
    report.checks.append(
        _check(
            "post-state is an X_V eigenstate with value prod h",
            eigen_residual < tol,
            residual=eigen_residual,
            tolerance=tol,
        )
    )
    report.checks.append(
        _check(
            "X_V dilemma: derived -prod h conflicts with eigenvalue prod h",
            dilemma,
            detail=f"derived exponent {derived_xv} vs eigenstate exponent {eigen_xv}",
        )
    )
    report.contradiction = dilemma
    report.classical = {
        "configurations": d,
        "consistent": 0 if dilemma else d,
        "contradiction": dilemma,
    }
    report.trace.append(
        "forced values give X_V -> -prod_a g_a = -prod_a h_a, yet the"
        " post-selected state is an X_V eigenstate with eigenvalue +prod_a h_a"
    )
    return report


# -- success-probability comparison ---------------------------------------------


def postselection_success(max_dim: int = DEFAULT_MATRIX_CAP) -> dict:
    """Fixed |+>|0> post-selection from |Phi_+| versus accepting all four
    {X_1, Z_2} outcomes: 1/4 against 1, a 300% gain."""
    prep = MeasurementContext(
        (
            WeylOperator.shift(1, 2, 2) * WeylOperator.shift(2, 2, 2),
            WeylOperator.clock(1, 2, 2) * WeylOperator.clock(2, 2, 2),
        ),
    )
    post = MeasurementContext(
        (WeylOperator.shift(1, 2, 2), WeylOperator.clock(2, 2, 2)),
    )
    psi_i = _unique_state(prep, (1, 1), max_dim)
    fixed_state = _unique_state(post, (1, 1), max_dim)
    p_fixed = postselection_probability(psi_i, fixed_state)
    p_all = 0.0
    for proj in enumerate_outcomes(post, max_dim=max_dim):
        p_all += postselection_probability(psi_i, proj.matrix)
    return {
        "fixed": p_fixed,
        "all_outcomes": p_all,
        "gain_percent": 100.0 * (p_all - p_fixed) / p_fixed,
    }


# -- exhaustive sweeps -----------------------------------------------------------


def _all_sign_tuples():
    return list(itertools.product((1, -1), repeat=3))


def sweep_pigeonhole_si(tol: float = VANISH_TOL) -> list[ScenarioReport]:
    """All 64 (s, t) sign tuples."""
    return [
        pigeonhole_state_independent(s, t, tol=tol)
        for s in _all_sign_tuples()
        for t in _all_sign_tuples()
    ]


def sweep_cheshire_si(tol: float = VANISH_TOL) -> list[ScenarioReport]:
    """All 16 (alpha, beta, mu, nu) tuples."""
    return [
        cheshire_cat_state_independent(a, b, m, n, tol=tol)
        for a, b, m, n in itertools.product((0, 1), repeat=4)
    ]


def sweep_ghz_pentagram(tol: float = VANISH_TOL) -> list[ScenarioReport]:
    """All 64 (s, t) tuples; exactly half are feasible."""
    return [
        ghz_pentagram(s, t, tol=tol)
        for s in _all_sign_tuples()
        for t in _all_sign_tuples()
    ]


def sweep_qudit_pigeonhole(
    graph: WeightedGraph | None = None, tol: float = VANISH_TOL
) -> list[ScenarioReport]:
    """All (g, h) exponent tuples for the given GHZ graph (triangle d=2 by default)."""
    if graph is None:
        graph = triangle_graph(2)
    n, d = graph.n, graph.d
    return [
        qudit_pigeonhole(graph, g, h, tol=tol)
        for g in itertools.product(range(d), repeat=n)
        for h in itertools.product(range(d), repeat=n)
    ]


SWEEPS = {
    "pigeonhole-si": sweep_pigeonhole_si,
    "cheshire-cat-si": sweep_cheshire_si,
    "ghz-pentagram": sweep_ghz_pentagram,
    "qudit-pigeonhole": sweep_qudit_pigeonhole,
}
