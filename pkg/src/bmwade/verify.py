"""Relation suites, dimension reports, and the rank-2 dimension reproduction.

Every defining and derived relation of the algebra is checked against the
representation matrices, either exactly over the symbolic coefficient ring
(generic mode, feasible through A5 and D5) or exactly over the rationals at
a specialization point l = l0, r = r0 with the one-dimensional character
z -> 1/r0 (specialized mode, all types including E8).  A failing check
always carries a concrete witness: the indices involved and the first
nonzero residual cell.

The dimension report reproduces the closed-form counts: |Phi+|^2 |W_C| for
the middle layer, the odd double factorial totals for type A with their
per-layer breakdown, the D4 total 1569 with its four layers, and the
conjectured D_n totals, labeled as conjectural since this artifact neither
confirms nor denies them.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .hecke import HeckeElement
from .lkrep import CharacterSpecialization, LawrenceKrammer, SparseMatrix, build_lk
from .rootsys import build_type, enumerate_parabolic, parabolic_order, weyl_order
from .scalar import Scalar, x_value
from .wordalg import reduce_word, rep_image_word

GENERIC_TYPES = ("A1", "A2", "A3", "A4", "A5", "D4", "D5")
SUITE_NAMES = ("braid", "essential", "eiproj", "table1", "zaction", "tau_monoid")
DEFAULT_L0 = Fraction(5, 7)
DEFAULT_R0 = Fraction(3, 2)
POINT_SEED = 20260801

_M = Scalar.m()
_L = Scalar.l(1)
_L_INV = Scalar.l(-1)
_X = x_value()


class UnsupportedModeError(ValueError):
    pass


@dataclass
class CheckResult:
    name: str
    ok: bool
    witness: str | None = None


@dataclass
class SuiteReport:
    suite: str
    type_label: str
    mode: str
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def sort(self):
        self.checks.sort(key=lambda c: c.name)
        return self

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "type": self.type_label,
            "mode": self.mode,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "status": "pass" if c.ok else "fail", "witness": c.witness}
                for c in self.checks
            ],
        }

    def text_lines(self) -> list[str]:
        lines = [f"suite {self.suite} on {self.type_label} ({self.mode}), {self.elapsed:.2f}s"]
        for c in self.checks:
            status = "pass" if c.ok else "FAIL"
            extra = "" if c.witness is None else f"  [{c.witness}]"
            lines.append(f"  {status}  {c.name}{extra}")
        return lines


def seeded_points(count: int = 2, seed: int = POINT_SEED) -> list[tuple[Fraction, Fraction]]:
    """Reproducible specialization points beyond the default (5/7, 3/2)."""
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        l0 = Fraction(rng.randint(2, 9), rng.randint(2, 9))
        r0 = Fraction(rng.randint(2, 9), rng.randint(2, 9))
        if l0 == 0 or r0 in (0, 1, -1) or abs(l0) == 1:
            continue
        points.append((l0, r0))
    return points


class _Context:
    """Uniform access to the matrices and coefficients in one evaluation mode.

    Generic mode works with symbolic Hecke entries; specialized mode works
    with exact rationals through the classical character, in which case the
    whole coefficient recursion runs at the character level and generic
    elements are never materialized.
    """

    def __init__(self, lk: LawrenceKrammer, mode: str, l0=None, r0=None):
        self.lk = lk
        self.rs = lk.rs
        self.mode = mode
        if mode == "generic":
            self.impl = lk
            self.scalars = {"one": Scalar.one(), "m": _M, "l": _L, "linv": _L_INV, "x": _X}
        elif mode == "specialized":
            try:
                self.impl = CharacterSpecialization(lk, l0, r0)
            except ValueError as exc:
                raise UnsupportedModeError(str(exc)) from exc
            char = self.impl
            self.scalars = {
                "one": Fraction(1),
                "m": char.m0,
                "l": char.l0,
                "linv": 1 / char.l0,
                "x": char.x0,
            }
        else:
            raise UnsupportedModeError(f"unknown mode {mode!r}")

    def S(self, i) -> SparseMatrix:
        return self.impl.sigma(i)

    def Sinv(self, i) -> SparseMatrix:
        return self.impl.sigma_inv(i)

    def E(self, i) -> SparseMatrix:
        return self.impl.e_matrix(i)

    def F(self, i) -> SparseMatrix:
        return self.impl.e_and_f(i)[1]

    def Tau(self, i) -> SparseMatrix:
        return self.impl.tau(i)

    def I(self) -> SparseMatrix:
        return self.impl.identity_matrix()

    def word(self, word) -> SparseMatrix:
        out = self.I()
        for i in word:
            out = out * self.S(i)
        return out

    def smul(self, mat: SparseMatrix, name: str) -> SparseMatrix:
        return mat.scale(self.scalars[name])

    # -- coefficient-level values (T, z, and friends) ---------------------

    def t(self, i, beta):
        if self.mode == "generic":
            return self.lk.t_coeff(i, beta)
        return self.impl.t_char(i, beta)

    def zh(self, node: int):
        if self.mode == "generic":
            return self.lk.z(node)
        return self.impl.c0

    def zh_inv(self, node: int):
        if self.mode == "generic":
            return self.lk.z(node) + self.lk.unit().scale(_M)
        return self.impl.c0 + self.impl.m0

    def coeff(self, name: str):
        """A ground scalar as a coefficient-ring element."""
        if self.mode == "generic":
            return self.lk.unit().scale(self.scalars[name])
        return self.scalars[name]

    def cscale(self, value, name: str):
        if self.mode == "generic":
            return value.scale(self.scalars[name])
        return value * self.scalars[name]

    def hval(self, helem: HeckeElement):
        """A generic Hecke element as an entry in this mode's ring."""
        if self.mode == "generic":
            return helem
        return self.impl.hval(helem)


def _mat_witness(a: SparseMatrix, b: SparseMatrix, rs) -> str | None:
    keys = set()
    for m in (a, b):
        for c, col in m.cols.items():
            keys.update((r, c) for r in col)
    for r, c in sorted(keys):
        va, vb = a.entry(r, c), b.entry(r, c)
        if (va or vb) and va != vb:
            beta, gamma = rs.positive_roots[c], rs.positive_roots[r]
            return f"cell x_{gamma} <- x_{beta}: {va!r} != {vb!r}"
    return None


def _check_eq(out: list, name: str, a: SparseMatrix, b: SparseMatrix, rs):
    w = _mat_witness(a, b, rs)
    out.append(CheckResult(name, w is None, w))


# -- individual suites ------------------------------------------------------


def _suite_braid(ctx: _Context) -> list[CheckResult]:
    rs, out = ctx.rs, []
    for i in rs.nodes:
        for j in rs.nodes:
            if j <= i:
                continue
            if j in rs.neighbors[i]:
                _check_eq(out, f"braid_{i}_{j}", ctx.S(i) * ctx.S(j) * ctx.S(i),
                          ctx.S(j) * ctx.S(i) * ctx.S(j), rs)
            else:
                _check_eq(out, f"commute_{i}_{j}", ctx.S(i) * ctx.S(j), ctx.S(j) * ctx.S(i), rs)
    return out


def _suite_essential(ctx: _Context) -> list[CheckResult]:
    rs, out = ctx.rs, []
    for i in rs.nodes:
        S, E = ctx.S(i), ctx.E(i)
        _check_eq(out, f"r1_ge_{i}", S * E, ctx.smul(E, "linv"), rs)
        _check_eq(out, f"r1_eg_{i}", E * S, ctx.smul(E, "linv"), rs)
        _check_eq(out, f"esq_{i}", E * E, ctx.smul(E, "x"), rs)
        _check_eq(out, f"cubic_{i}", ctx.F(i) * (S - ctx.smul(ctx.I(), "linv")),
                  SparseMatrix(ctx.lk.size), rs)
        _check_eq(out, f"inverse_{i}", S * (S + ctx.smul(ctx.I() - E, "m")), ctx.I(), rs)
    for i in rs.nodes:
        for j in rs.nodes:
            if i == j:
                continue
            Ei, Ej, Si, Sj = ctx.E(i), ctx.E(j), ctx.S(i), ctx.S(j)
            if j in rs.neighbors[i]:
                m = ctx.scalars["m"]
                _check_eq(out, f"r2_{i}_{j}", Ei * Sj * Ei, ctx.smul(Ei, "l"), rs)
                _check_eq(out, f"wenzl_cross_{i}_{j}", Ei * ctx.Sinv(j) * Ei,
                          ctx.smul(Ei, "linv"), rs)
                _check_eq(out, f"iji_gge_a_{i}_{j}", Sj * Si * Ej, Ei * Sj * Si, rs)
                _check_eq(out, f"iji_gge_b_{i}_{j}", Sj * Si * Ej, Ei * Ej, rs)
                _check_eq(out, f"iji_geg_a_{i}_{j}", Sj * Ei * Sj, ctx.Sinv(i) * Ej * ctx.Sinv(i), rs)
                expanded = (Si * Ej * Si
                            + (Ej * Si - Ei * Sj + Si * Ej - Sj * Ei).scale(m)
                            + (Ej - Ei).scale(m * m))
                _check_eq(out, f"iji_geg_b_{i}_{j}", Sj * Ei * Sj, expanded, rs)
                _check_eq(out, f"iji_eeg_a_{i}_{j}", Ej * Ei * Sj, Ej * ctx.Sinv(i), rs)
                _check_eq(out, f"iji_eeg_b_{i}_{j}", Ej * Ei * Sj,
                          Ej * Si + (Ej - Ej * Ei).scale(m), rs)
                _check_eq(out, f"iji_gee_a_{i}_{j}", Sj * Ei * Ej, ctx.Sinv(i) * Ej, rs)
                _check_eq(out, f"iji_gee_b_{i}_{j}", Sj * Ei * Ej,
                          Si * Ej + (Ej - Ei * Ej).scale(m), rs)
                _check_eq(out, f"iji_eje_{i}_{j}", Ei * Ej * Ei, Ei, rs)
            elif j > i:
                _check_eq(out, f"ee_zero_{i}_{j}", Ei * Ej, SparseMatrix(ctx.lk.size), rs)
                _check_eq(out, f"commute_eg_{i}_{j}", Ei * Sj, Sj * Ei, rs)
                _check_eq(out, f"commute_ee_{i}_{j}", Ei * Ej, Ej * Ei, rs)
    return out


def _suite_eiproj(ctx: _Context) -> list[CheckResult]:
    rs, lk, out = ctx.rs, ctx.lk, []
    for i in rs.nodes:
        cols: dict[int, dict[int, object]] = {}
        ai_idx = rs.root_index[rs.alpha(i)]
        for b_idx, beta in enumerate(rs.positive_roots):
            p = rs.pairing_simple(i, beta)
            if p == 2:
                coeff = ctx.cscale(ctx.coeff("linv"), "linv") \
                    + ctx.cscale(ctx.coeff("m"), "linv") - ctx.coeff("one")
            elif p == 0:
                h = lk.h_node(beta, i)
                inner = ctx.zh(h) + ctx.coeff("m") + ctx.coeff("linv")
                coeff = ctx.cscale(ctx.t(i, beta) * inner, "linv")
            elif p == -1:
                coeff = ctx.cscale(
                    ctx.t(i, rs.add_simple(beta, i)) + ctx.cscale(ctx.t(i, beta), "linv"),
                    "linv")
            else:
                inner = ctx.cscale(ctx.t(i, beta), "m") + ctx.cscale(ctx.t(i, beta), "linv")
                coeff = ctx.cscale(ctx.t(i, rs.sub_simple(beta, i)) + inner, "linv")
            if coeff:
                cols[b_idx] = {ai_idx: coeff}
        _check_eq(out, f"eiproj_{i}", ctx.F(i), SparseMatrix(lk.size, cols), rs)
    return out


def _suite_table1(ctx: _Context) -> list[CheckResult]:
    rs, lk = ctx.rs, ctx.lk
    out = []

    def run(name, instances):
        for label, lhs, rhs in instances:
            if lhs != rhs:
                out.append(CheckResult(name, False, label))
                return
        out.append(CheckResult(name, True))

    roots = rs.positive_roots
    zero = ctx.coeff("one") - ctx.coeff("one")

    run("t_row1_zero", (
        (f"i={i} beta=alpha_{j}", ctx.t(i, rs.alpha(j)), zero)
        for i in rs.nodes for j in rs.nodes if i != j
    ))
    run("t_row2_unit", (
        (f"i={i}", ctx.t(i, rs.alpha(i)), ctx.coeff("one")) for i in rs.nodes
    ))
    run("t_row3_m", (
        (f"i={i} j={j}", ctx.t(i, rs.add_simple(rs.alpha(i), j)), ctx.coeff("m"))
        for i in rs.nodes for j in rs.neighbors[i]
    ))

    def row4():
        for beta in roots:
            for i in rs.nodes:
                for j in rs.nodes:
                    if j == i or j in rs.neighbors[i] or rs.pairing_simple(j, beta) != 1:
                        continue
                    if beta == rs.alpha(j):
                        continue
                    hinv = ctx.zh_inv(lk.h_node(rs.alpha(i), j))
                    yield (f"i={i} j={j} beta={beta}", ctx.t(i, beta),
                           hinv * ctx.t(i, rs.sub_simple(beta, j)))

    def row5():
        for beta in roots:
            for i in rs.nodes:
                if rs.pairing_simple(i, beta) != 0:
                    continue
                for j in rs.neighbors[i]:
                    if rs.pairing_simple(j, beta) != 1 or beta == rs.alpha(j):
                        continue
                    gamma = rs.sub_simple(beta, j)
                    yield (f"i={i} j={j} beta={beta}", ctx.t(i, beta),
                           ctx.t(j, rs.sub_simple(gamma, i)) + ctx.cscale(ctx.t(i, gamma), "m"))

    def row6():
        for beta in roots:
            for i in rs.nodes:
                if rs.pairing_simple(i, beta) != -1:
                    continue
                for j in rs.neighbors[i]:
                    if rs.pairing_simple(j, beta) != 1 or beta == rs.alpha(j):
                        continue
                    gamma = rs.sub_simple(beta, j)
                    yield (f"i={i} j={j} beta={beta}", ctx.t(i, beta),
                           ctx.t(j, gamma) * ctx.zh(lk.h_node(gamma, i))
                           + ctx.cscale(ctx.t(i, gamma), "m"))

    def row7():
        for beta in roots:
            for i in rs.nodes:
                if rs.pairing_simple(i, beta) != 1 or beta == rs.alpha(i):
                    continue
                for j in rs.neighbors[i]:
                    if rs.pairing_simple(j, beta) != 0:
                        continue
                    yield (f"i={i} j={j} beta={beta}", ctx.t(i, beta),
                           ctx.t(j, rs.sub_simple(beta, i)) * ctx.zh_inv(lk.h_node(beta, j)))

    run("t_row4_commuting", row4())
    run("t_row5_adjacent0", row5())
    run("t_row6_adjacent-1", row6())
    run("t_row7_pairing1", row7())

    def jast3():
        for beta in roots:
            for i in rs.nodes:
                if rs.pairing_simple(i, beta) != 0:
                    continue
                for j in rs.neighbors[i]:
                    if j < i or rs.pairing_simple(j, beta) != 0:
                        continue
                    yield (f"i={i} j={j} beta={beta}",
                           ctx.t(i, beta) * ctx.zh(lk.h_node(beta, j)),
                           ctx.t(j, beta) * ctx.zh(lk.h_node(beta, i)))

    run("t_both_orthogonal", jast3())

    if ctx.mode == "generic":
        ok = all(lk.t_coeff(i, beta).is_l_free() for i in rs.nodes for beta in roots)
        out.append(CheckResult("t_lfree", ok))

    if rs.dtype.label in ("A3", "A4", "D4"):
        bad = None
        for beta in roots:
            for i in rs.nodes:
                if rs.pairing_simple(i, beta) != 0:
                    continue
                if lk.h_oracle(beta, i) != lk.h_elem(beta, i):
                    bad = f"i={i} beta={beta}"
                    break
            if bad:
                break
        out.append(CheckResult("t_hnode_oracle", bad is None, bad))
    return out


def _suite_choice(ctx: _Context) -> list[CheckResult]:
    """Choice independence of the commuting-node and adjacent-node steps."""
    rs, lk = ctx.rs, ctx.lk
    out = []
    bad_iv = bad_v = None
    for beta in rs.positive_roots:
        if rs.height(beta) < 3:
            continue
        for i in rs.support(beta):
            p = rs.pairing_simple(i, beta)
            if p not in (0, -1):
                continue
            expected = ctx.t(i, beta)
            for j in rs.nodes:
                if rs.pairing_simple(j, beta) != 1:
                    continue
                if j != i and j not in rs.neighbors[i]:
                    val = ctx.zh_inv(lk.h_node(rs.alpha(i), j)) * ctx.t(i, rs.sub_simple(beta, j))
                    if val != expected and bad_iv is None:
                        bad_iv = f"i={i} j={j} beta={beta}"
                elif j in rs.neighbors[i]:
                    gamma = rs.sub_simple(beta, j)
                    if p == 0:
                        val = ctx.t(j, rs.sub_simple(gamma, i)) + ctx.cscale(ctx.t(i, gamma), "m")
                    else:
                        val = ctx.t(j, gamma) * ctx.zh(lk.h_node(gamma, i)) \
                            + ctx.cscale(ctx.t(i, gamma), "m")
                    if val != expected and bad_v is None:
                        bad_v = f"i={i} j={j} beta={beta}"
    out.append(CheckResult("t_choice_commuting_step", bad_iv is None, bad_iv))
    out.append(CheckResult("t_choice_adjacent_step", bad_v is None, bad_v))
    return out


def _suite_zaction(ctx: _Context) -> list[CheckResult]:
    rs, lk = ctx.rs, ctx.lk
    out = []
    for i in rs.nodes:
        ai_idx = rs.root_index[rs.alpha(i)]
        bad = None
        for k in rs.nodes:
            for j in rs.nodes:
                if j == k or j in rs.neighbors[k]:
                    continue
                mat = (ctx.word(rs.geodesic_word(k, i)) * ctx.S(j)
                       * ctx.word(rs.geodesic_word(i, k)) * ctx.E(i))
                col = mat.column(ai_idx)
                expect = ctx.cscale(ctx.zh(lk.h_node(rs.alpha(k), j)), "x")
                good = set(col) <= {ai_idx} and col.get(ai_idx, 0) == expect
                if not good and bad is None:
                    bad = f"j={j} k={k}"
        out.append(CheckResult(f"zaction_{i}", bad is None, bad))
    return out


def _suite_tau(ctx: _Context) -> list[CheckResult]:
    rs, out = ctx.rs, []
    for i in rs.nodes:
        for j in rs.nodes:
            if j <= i:
                continue
            Ti, Tj = ctx.Tau(i), ctx.Tau(j)
            if j in rs.neighbors[i]:
                _check_eq(out, f"tau_braid_{i}_{j}", Ti * Tj * Ti, Tj * Ti * Tj, rs)
            else:
                _check_eq(out, f"tau_commute_{i}_{j}", Ti * Tj, Tj * Ti, rs)
    return out


_SUITE_FNS = {
    "braid": _suite_braid,
    "essential": _suite_essential,
    "eiproj": _suite_eiproj,
    "table1": lambda ctx: _suite_table1(ctx) + _suite_choice(ctx),
    "zaction": _suite_zaction,
    "tau_monoid": _suite_tau,
}


def run_suite(suite: str, type_label: str, mode: str = "generic",
              l0=None, r0=None) -> SuiteReport:
    if suite != "all" and suite not in SUITE_NAMES:
        raise UnsupportedModeError(f"unknown suite {suite!r}")
    if mode == "generic" and type_label not in GENERIC_TYPES:
        raise UnsupportedModeError(
            f"generic mode supports {', '.join(GENERIC_TYPES)}; "
            f"use specialized mode for {type_label}")
    if mode == "specialized":
        l0 = DEFAULT_L0 if l0 is None else Fraction(l0)
        r0 = DEFAULT_R0 if r0 is None else Fraction(r0)
        mode_label = f"specialized l={l0} r={r0}"
    elif mode == "generic":
        mode_label = "generic"
    else:
        raise UnsupportedModeError(f"unknown mode {mode!r}")
    start = time.monotonic()
    ctx = _Context(build_lk(type_label), mode, l0, r0)
    names = SUITE_NAMES if suite == "all" else (suite,)
    report = SuiteReport(suite, type_label, mode_label)
    for name in names:
        report.checks.extend(_SUITE_FNS[name](ctx))
    report.elapsed = time.monotonic() - start
    return report.sort()


# -- dimension formulas ---------------------------------------------------------


def _a_layers(n: int) -> list[dict]:
    layers = []
    for i in range(0, (n + 1) // 2 + 1):
        orbit = factorial(n + 1) // (2 ** i * factorial(i) * factorial(n + 1 - 2 * i))
        layers.append({
            "cocliques": i,
            "orbit": orbit,
            "dim": orbit ** 2 * factorial(n + 1 - 2 * i),
        })
    return layers


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def dims_report(type_label: str) -> dict:
    rs = build_type(type_label)
    fam, n = rs.dtype.family, rs.dtype.rank
    phi = len(rs.positive_roots)
    wc = parabolic_order(rs, rs.c_nodes)
    w = weyl_order(fam, n)
    report = {
        "type": type_label,
        "phi_plus": phi,
        "c_nodes": list(rs.c_nodes),
        "w_c_order": wc,
        "hecke_dim": w,
        "i1_mod_i2_dim": phi * phi * wc,
        "total_dim": None,
        "total_conjectural": False,
        "layers": None,
    }
    if fam == "A":
        layers = _a_layers(n)
        report["layers"] = layers
        report["total_dim"] = sum(v["dim"] for v in layers)
    elif fam == "D" and n == 4:
        report["layers"] = [
            {"cocliques": 0, "orbit": 1, "dim": 192},
            {"cocliques": 1, "orbit": 12, "dim": 1152},
            {"cocliques": 2, "orbit": 18, "dim": 216},
            {"cocliques": 3, "orbit": 3, "dim": 9},
        ]
        report["total_dim"] = 1569
    elif fam == "D":
        report["total_dim"] = (2 ** n + 1) * _double_factorial(2 * n - 1) \
            - (2 ** (n - 1) + 1) * factorial(n)
        report["total_conjectural"] = True
    return report


# -- rank-2 dimension reproduction ------------------------------------------------


A2_MONOMIALS = (
    (),
    ((1, "g"),), ((2, "g"),), ((1, "e"),), ((2, "e"),),
    ((1, "g"), (2, "g")), ((1, "g"), (2, "e")), ((2, "g"), (1, "g")),
    ((2, "g"), (1, "e")), ((1, "e"), (2, "g")), ((1, "e"), (2, "e")),
    ((2, "e"), (1, "g")), ((2, "e"), (1, "e")),
    ((1, "g"), (2, "g"), (1, "g")), ((1, "g"), (2, "e"), (1, "g")),
)


def rational_rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                c = rows[r][col]
                rows[r] = [v - c * p for v, p in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _a2_vector(lk: LawrenceKrammer, word, l0: Fraction, m0: Fraction) -> list[Fraction]:
    """Coordinates of a word image: 6 Hecke coefficients and 9 matrix cells."""
    rs = lk.rs
    hecke, mat = rep_image_word(lk, word)
    basis = enumerate_parabolic(rs, rs.nodes)
    vec = [hecke.terms.get(w, Scalar.zero()).eval_at(l0, m0) for w in basis]
    ident = rs.identity
    for c in range(lk.size):
        for r in range(lk.size):
            entry = mat.entry(r, c)
            s = Scalar.zero() if entry is None else entry.terms.get(ident, Scalar.zero())
            vec.append(s.eval_at(l0, m0))
    return vec


def a2_dimension_check() -> SuiteReport:
    """Pin dim B(A2) = 15: independent images plus closure under generators."""
    start = time.monotonic()
    lk = build_lk("A2")
    rs = lk.rs
    l0, m0 = DEFAULT_L0, Fraction(3, 2)
    report = SuiteReport("a2dim", "A2", "generic")

    vectors = [_a2_vector(lk, w, l0, m0) for w in A2_MONOMIALS]
    rank = rational_rank(vectors)
    report.checks.append(CheckResult(
        "rank_15", rank == 15, None if rank == 15 else f"rank={rank}"))

    shorter = [v for w, v in zip(A2_MONOMIALS, vectors) if len(w) < 3]
    top = vectors[A2_MONOMIALS.index(((1, "g"), (2, "e"), (1, "g")))]
    rank14 = rational_rank(shorter + [top])
    report.checks.append(CheckResult(
        "g1e2g1_independent", rank14 == 14, None if rank14 == 14 else f"rank={rank14}"))

    allowed = set(A2_MONOMIALS)
    letters = (((1, "g"),), ((2, "g"),), ((1, "e"),), ((2, "e"),))
    bad = None
    for mono in A2_MONOMIALS:
        for letter in letters:
            for product in (mono + letter, letter + mono):
                comb = reduce_word(rs, product)
                outside = [w for w in comb if w not in allowed]
                if outside and bad is None:
                    bad = f"product {product} leaves span via {outside[0]}"
    report.checks.append(CheckResult("closure", bad is None, bad))
    report.elapsed = time.monotonic() - start
    return report.sort()
