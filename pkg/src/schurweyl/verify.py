"""Named verification suites behind the `verify` subcommand.

Each check recomputes one family of identities or bounds from scratch and
returns a small report dict {check, lhs, rhs, pass}.  The formulas suite is
pure weight calculus, the bounds suite evaluates the distance bounds, and
the oracle suite rebuilds everything as dense matrices and re-measures.
All checks are deterministic for a fixed (size_cap, seed).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from . import oracle
from .characters import (
    CharacterTable,
    dim_sym,
    dim_unitary,
    dim_unitary_charsum,
    mn_character,
)
from .coefficients import (
    branching_sum_kron,
    branching_sum_lr,
    kronecker,
    littlewood_richardson,
    littlewood_richardson_char,
)
from .partitions import (
    class_size,
    conjugate,
    contains,
    normalized,
    partitions_of,
    rows,
    skew_standard_count,
)
from .symfunc import falling_factorial, schur_eval, schur_eval_tableau, shifted_schur_eval
from .werner import (
    character_polynomial,
    cycle_sum_expansion,
    definetti_bound_dual,
    definetti_bound_sym,
    dual_trace,
    dual_twirl_cycle,
    fully_mixed,
    recombine_cycle_sum,
    root_range,
    trace_distance,
    trace_out_sym,
    twirl_power,
)


def _report(name: str, failures: int, cases: int, detail: str = "") -> dict:
    lhs = f"{failures} failures in {cases} cases"
    if detail and failures:
        lhs += f" ({detail})"
    return {"check": name, "lhs": lhs, "rhs": "0 failures", "pass": failures == 0}


def check_character_orthogonality(max_n: int = 8) -> dict:
    failures = cases = 0
    for n in range(1, max_n + 1):
        cases += 1
        if not CharacterTable(n).check_orthogonality():
            failures += 1
    return _report("character-orthogonality", failures, cases)


def check_dimension_identities(max_n: int = 6, max_d: int = 5) -> dict:
    failures = cases = 0
    for n in range(1, max_n + 1):
        cases += 1
        if sum(dim_sym(lam) ** 2 for lam in partitions_of(n)) != factorial(n):
            failures += 1
        for d in range(1, max_d + 1):
            cases += 1
            total = sum(dim_unitary(lam, d) * dim_sym(lam) for lam in partitions_of(n, d))
            if total != d**n:
                failures += 1
            for lam in partitions_of(n):
                cases += 1
                if dim_unitary(lam, d) != dim_unitary_charsum(lam, d):
                    failures += 1
    return _report("dimension-identities", failures, cases)


def check_lr_two_paths(max_n: int = 6) -> dict:
    failures = cases = 0
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            for k in range(n + 1):
                for mu in partitions_of(k):
                    for nu in partitions_of(n - k):
                        cases += 1
                        if littlewood_richardson(lam, mu, nu) != littlewood_richardson_char(lam, mu, nu):
                            failures += 1
    return _report("lr-two-paths", failures, cases)


def check_kron_symmetry(max_n: int = 6) -> dict:
    from itertools import permutations as iperm

    failures = cases = 0
    for n in range(1, max_n + 1):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                for nu in parts:
                    base = kronecker(lam, mu, nu)
                    for a, b, c in iperm((lam, mu, nu)):
                        cases += 1
                        if kronecker(a, b, c) != base:
                            failures += 1
    return _report("kronecker-symmetry", failures, cases)


def check_kronecker_row_bound(max_n: int = 6) -> dict:
    """Some nu with few rows couples to every (lam, mu) pair."""
    failures = cases = 0
    for n in range(1, max_n + 1):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                cases += 1
                cap = max(rows(lam), rows(mu))
                if not any(
                    kronecker(lam, mu, nu) > 0 for nu in partitions_of(n, cap)
                ):
                    failures += 1
    return _report("kronecker-row-bound", failures, cases)


def check_inner_sum_lr(max_n: int = 7) -> dict:
    """f * s*_mu(lam) / (n falling k) = sum_nu c f_nu = skew count, exactly."""
    failures = cases = 0
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            d = max(rows(lam), 1)
            for k in range(n + 1):
                for mu in partitions_of(k):
                    if not contains(mu, lam):
                        continue
                    cases += 1
                    via_skew = skew_standard_count(lam, mu)
                    via_lr = branching_sum_lr(lam, mu, n)
                    shifted = shifted_schur_eval(mu, lam, max(d, rows(mu)))
                    via_shifted = Fraction(dim_sym(lam)) * shifted / falling_factorial(n, k)
                    if not (via_skew == via_lr == via_shifted):
                        failures += 1
    return _report("inner-sum-subsystem", failures, cases)


def check_inner_sum_vanishing(max_n: int = 6) -> dict:
    """Outside containment the shifted Schur value and the sums vanish."""
    failures = cases = 0
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            for k in range(n + 1):
                for mu in partitions_of(k):
                    if contains(mu, lam):
                        continue
                    cases += 1
                    d = max(rows(lam), rows(mu))
                    if shifted_schur_eval(mu, lam, d) != 0 or branching_sum_lr(lam, mu, n) != 0:
                        failures += 1
    return _report("inner-sum-vanishing", failures, cases)


def check_inner_sum_kron(max_n: int = 6, max_q: int = 6) -> dict:
    """n! * sum_nu g e^q_nu = value of the character polynomial at q."""
    failures = cases = 0
    for n in range(1, max_n + 1):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                poly = character_polynomial(lam, mu)
                for q in range(1, max_q + 1):
                    cases += 1
                    if factorial(n) * branching_sum_kron(lam, mu, q) != poly(q):
                        failures += 1
    return _report("inner-sum-inner-trace", failures, cases)


def check_chi_poly_symmetries(max_n: int = 6) -> dict:
    """Symmetry in the pair, conjugate-pair equality, sign rule under one
    conjugation, and orthogonality at q=1."""
    failures = cases = 0
    for n in range(1, max_n + 1):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                cases += 1
                a = character_polynomial(lam, mu)
                ok = a == character_polynomial(mu, lam)
                ok = ok and a == character_polynomial(conjugate(lam), conjugate(mu))
                b = character_polynomial(conjugate(lam), mu)
                ok = ok and all(
                    b(q) == (-1) ** n * a(-q) for q in range(-n, n + 1)
                )
                ok = ok and a(1) == (factorial(n) if lam == mu else 0)
                ok = ok and (not a.coeffs or a.coeffs[0] == 0)
                if not ok:
                    failures += 1
    return _report("character-polynomial-symmetries", failures, cases)


def check_root_structure(max_n: int = 6) -> dict:
    """Contiguous integer roots around 0, the row bound on q+, and q+ = 1
    exactly on the diagonal.  root_range raises if structure is broken."""
    failures = cases = 0
    for n in range(1, max_n + 1):
        parts = partitions_of(n)
        for lam in parts:
            for mu in parts:
                cases += 1
                try:
                    rr = root_range(lam, mu)
                except Exception:
                    failures += 1
                    continue
                ok = 0 in rr.roots or (rr.q_plus == 1 and lam == mu)
                ok = ok and rr.roots == list(range(rr.q_minus + 1, rr.q_plus))
                ok = ok and ((rr.q_plus == 1) == (lam == mu))
                if not ok:
                    failures += 1
    return _report("root-structure", failures, cases)


def check_trace_states(max_n: int = 5, max_d: int = 4) -> dict:
    """Both trace maps return genuine states: non-negative weights, sum 1."""
    failures = cases = 0
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            for lam in partitions_of(n, d):
                for k in range(1, n + 1):
                    cases += 1
                    if not trace_out_sym(lam, k, d).is_state():
                        failures += 1
        for p in range(1, 5):
            for q in range(1, 5):
                for lam in partitions_of(n, p * q):
                    cases += 1
                    if not dual_trace(lam, p, q).is_state():
                        failures += 1
    return _report("trace-maps-preserve-states", failures, cases)


def check_cycle_sum(max_n: int = 4) -> dict:
    failures = cases = 0
    for n in range(1, max_n + 1):
        for p in (2, 3):
            for q in (2, 3):
                for lam in partitions_of(n, p * q):
                    cases += 1
                    coeffs = cycle_sum_expansion(lam, p, q)
                    if recombine_cycle_sum(coeffs, p) != dual_trace(lam, p, q):
                        failures += 1
    return _report("cycle-sum-recombination", failures, cases)


def check_dual_twirl_trace(max_n: int = 6, max_d: int = 5) -> dict:
    failures = cases = 0
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            for alpha in partitions_of(n):
                cases += 1
                w = dual_twirl_cycle(alpha, d)
                if w.total() != Fraction(d ** rows(alpha), d**n):
                    failures += 1
    return _report("cycle-operator-trace", failures, cases)


def _random_spectrum(rng: random.Random, d: int) -> tuple[Fraction, ...]:
    raw = [Fraction(rng.randint(1, 12), 1) for _ in range(d)]
    total = sum(raw)
    return tuple(sorted((x / total for x in raw), reverse=True))


def check_twirl_sum(seed: int = 0) -> dict:
    """Twirled powers are states; pure and fully mixed specializations."""
    rng = random.Random(seed)
    failures = cases = 0
    for d in (2, 3):
        for k in (1, 2, 3):
            for _ in range(4):
                cases += 1
                if not twirl_power(_random_spectrum(rng, d), k).is_state():
                    failures += 1
            cases += 1
            pure = twirl_power((1,) + (0,) * (d - 1), k)
            if pure.weight((k,)) != 1:
                failures += 1
            cases += 1
            flat = twirl_power((Fraction(1, d),) * d, k)
            if flat != fully_mixed(k, d):
                failures += 1
    return _report("twirl-power-weights", failures, cases)


def check_schur_two_paths(seed: int = 0) -> dict:
    rng = random.Random(seed)
    failures = cases = 0
    shapes = [mu for k in range(1, 5) for mu in partitions_of(k)]
    for d in (2, 3, 4):
        for _ in range(3):
            r = _random_spectrum(rng, d)
            for mu in shapes:
                cases += 1
                if schur_eval(mu, r) != schur_eval_tableau(mu, list(r)):
                    failures += 1
    return _report("schur-evaluation-paths", failures, cases)


def check_shifted_schur_scaling() -> dict:
    """Scaled diagrams: the normalized shifted value approaches the Schur
    value monotonically at an O(1/m) rate (ratio within a factor 2 of 10
    per decade of m)."""
    failures = cases = 0
    for mu, lam in (((2,), (2, 1)), ((1, 1), (2, 1)), ((2, 1), (3, 2, 1))):
        cases += 1
        n, k = sum(lam), sum(mu)
        d = len(lam)
        target = schur_eval(mu, normalized(lam))
        deltas = []
        for m in (1, 10, 100):
            scaled = tuple(m * x for x in lam)
            val = shifted_schur_eval(mu, scaled, d) / falling_factorial(m * n, k)
            deltas.append(abs(val - target))
        ok = deltas[0] > deltas[1] > deltas[2]
        ok = ok and Fraction(5) <= deltas[1] / deltas[2] <= Fraction(20)
        if not ok:
            failures += 1
    return _report("shifted-schur-scaling-limit", failures, cases)


def check_dual_definetti_weights(max_n: int = 4, max_p: int = 3, max_q: int = 6) -> dict:
    """Distance from the traced state to fully mixed obeys the exact bound,
    for every diagram in range.  Pure rational comparison, no tolerance."""
    failures = cases = 0
    for n in range(1, max_n + 1):
        for p in range(1, max_p + 1):
            for q in range(n, max_q + 1):
                mixed = fully_mixed(n, p)
                bound = definetti_bound_dual(n, q)
                for lam in partitions_of(n, p * q):
                    cases += 1
                    if trace_distance(dual_trace(lam, p, q), mixed) > bound:
                        failures += 1
    return _report("dual-definetti-weight-sweep", failures, cases)


def check_dual_definetti_asymptote() -> dict:
    """For large q the exact bound is within 1% of 2n(n-1)/q."""
    failures = cases = 0
    for n in (2, 3):
        cases += 1
        q = 1000
        exact = definetti_bound_dual(n, q)
        lead = Fraction(2 * n * (n - 1), q)
        if abs(exact - lead) > lead / 100:
            failures += 1
    return _report("dual-definetti-asymptote", failures, cases)


def check_sym_definetti_regime() -> dict:
    """Subsystem-trace distance to the twirled power state obeys the leading
    bound in the regime lam_min >= 20 k^2 where that term dominates."""
    failures = cases = 0
    for k, lam in ((2, (160, 80)), (3, (360, 180)), (2, (120, 100, 80))):
        cases += 1
        d = len(lam)
        dist = trace_distance(trace_out_sym(lam, k, d), twirl_power(normalized(lam), k))
        if dist > definetti_bound_sym(k, lam[-1]):
            failures += 1
    return _report("sym-definetti-dominant-regime", failures, cases)


def check_bound_edges() -> dict:
    failures = cases = 0
    cases += 1
    if definetti_bound_dual(1, 7) != 0 or definetti_bound_dual(2, 2) != Fraction(3, 2):
        failures += 1
    cases += 1
    if definetti_bound_sym(1, 5) != 0:
        failures += 1
    cases += 1
    try:
        definetti_bound_dual(3, 2)
        failures += 1
    except ValueError:
        pass
    return _report("bound-edge-cases", failures, cases)


# --- oracle suite ----------------------------------------------------------


def check_perm_traces(size_cap: int | None = None) -> dict:
    from itertools import permutations as iperm

    failures = cases = 0
    for n in (2, 3):
        for d in (2, 3):
            for pi in iperm(range(n)):
                cases += 1
                op = oracle.permutation_operator(pi, d, size_cap=size_cap)
                if op.trace() != d ** rows(oracle.cycle_type(pi)):
                    failures += 1
    return _report("permutation-traces", failures, cases)


def check_sw_families(size_cap: int | None = None) -> dict:
    """Orthogonality, completeness and traces of the duality projectors."""
    failures = cases = 0
    for d, n in ((2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (4, 2), (6, 2), (4, 3)):
        cases += 1
        parts = partitions_of(n, d)
        ps = {lam: oracle.schur_weyl_projector(lam, d, size_cap=size_cap) for lam in parts}
        total = oracle.identity_operator(n, d, size_cap=size_cap) * 0
        ok = True
        for lam, p in ps.items():
            ok = ok and p.is_symmetric() and (p @ p).same_as(p)
            ok = ok and p.trace() == dim_unitary(lam, d) * dim_sym(lam)
            total = total + p
        ok = ok and total.same_as(oracle.identity_operator(n, d, size_cap=size_cap))
        for a in parts:
            for b in parts:
                if a != b:
                    ok = ok and (ps[a] @ ps[b]).is_zero()
        if not ok:
            failures += 1
    return _report("duality-projector-families", failures, cases)


def check_trace_formula_oracle(max_d: int = 3, max_n: int = 4,
                               size_cap: int | None = None) -> dict:
    """Dense partial trace of each block state equals the weight formula."""
    failures = cases = 0
    for d in range(2, max_d + 1):
        for n in range(2, max_n + 1):
            for lam in partitions_of(n, d):
                ef = dim_unitary(lam, d) * dim_sym(lam)
                rho = oracle.schur_weyl_projector(lam, d, size_cap=size_cap) * Fraction(1, ef)
                for k in range(1, n + 1):
                    cases += 1
                    red = oracle.partial_trace_subsystems(rho, k)
                    wts = oracle.schur_weyl_weights(red, size_cap=size_cap)
                    expect = trace_out_sym(lam, k, d)
                    ok = wts == dict(expect.weights)
                    ok = ok and oracle.werner_combination(expect, size_cap=size_cap).same_as(red)
                    if not ok:
                        failures += 1
    return _report("subsystem-trace-oracle", failures, cases)


def check_dual_trace_oracle(size_cap: int | None = None) -> dict:
    """Dense inner partial trace equals the dual weight formula, both for the
    full block state and for a single-irrep copy."""
    failures = cases = 0
    for p, q, n in ((2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3)):
        for lam in partitions_of(n, p * q):
            cases += 1
            expect = dict(dual_trace(lam, p, q).weights)
            ef = dim_unitary(lam, p * q) * dim_sym(lam)
            rho = oracle.schur_weyl_projector(lam, p * q, size_cap=size_cap) * Fraction(1, ef)
            rho.bipartite = (p, q)
            red = oracle.partial_trace_inner(rho, p, q)
            ok = oracle.schur_weyl_weights(red, size_cap=size_cap) == expect
            ok = ok and oracle.werner_combination(
                dual_trace(lam, p, q), size_cap=size_cap
            ).same_as(red)
            single = oracle.young_projector(
                oracle.first_standard_tableau(lam), p * q, size_cap=size_cap
            ) * Fraction(1, dim_unitary(lam, p * q))
            single.bipartite = (p, q)
            red2 = oracle.partial_trace_inner(single, p, q)
            ok = ok and oracle.schur_weyl_weights(red2, size_cap=size_cap) == expect
            if not ok:
                failures += 1
    return _report("inner-trace-oracle", failures, cases)


def check_dual_twirl_oracle(size_cap: int | None = None) -> dict:
    """Averaged permutation operators expand with the predicted coefficients,
    including the (2,1) at d=3 value (10/27, 0, -1/27)."""
    from itertools import permutations as iperm

    failures = cases = 0
    for d in (2, 3):
        for pi in iperm(range(3)):
            cases += 1
            op = oracle.permutation_operator(pi, d, size_cap=size_cap) * Fraction(1, d**3)
            sym = oracle.symmetric_average(op)
            wts = oracle.schur_weyl_weights(sym, size_cap=size_cap)
            if wts != dict(dual_twirl_cycle(oracle.cycle_type(pi), d).weights):
                failures += 1
    cases += 1
    special = dict(dual_twirl_cycle((2, 1), 3).weights)
    if special != {(3,): Fraction(10, 27), (2, 1): Fraction(0), (1, 1, 1): Fraction(-1, 27)}:
        failures += 1
    return _report("cycle-operator-oracle", failures, cases)


def check_young_projectors(size_cap: int | None = None) -> dict:
    """Idempotence, symmetry, trace (= rank = unitary dimension), the
    symmetric-subspace and antisymmetrizer specializations, and the
    permutation average collapsing to the block projector."""
    failures = cases = 0
    for n in (2, 3):
        for shape in partitions_of(n):
            for t in oracle.standard_tableaux(shape):
                for d in (2, 3):
                    cases += 1
                    yp = oracle.young_projector(t, d, size_cap=size_cap)
                    ok = yp.is_symmetric() and (yp @ yp).same_as(yp)
                    ok = ok and yp.trace() == dim_unitary(shape, d)
                    if not ok:
                        failures += 1
    cases += 1
    row = oracle.first_standard_tableau((3,))
    if not oracle.young_projector(row, 2, size_cap=size_cap).same_as(
        oracle.schur_weyl_projector((3,), 2, size_cap=size_cap)
    ):
        failures += 1
    cases += 1
    col = tuple((k,) for k in (1, 2, 3))
    anti = oracle.young_projector(col, 3, size_cap=size_cap)
    if anti.trace() != 1:  # binom(3, 3)
        failures += 1
    cases += 1
    t21 = oracle.first_standard_tableau((2, 1))
    avg = oracle.symmetric_average(oracle.young_projector(t21, 2, size_cap=size_cap))
    want = oracle.schur_weyl_projector((2, 1), 2, size_cap=size_cap) * Fraction(1, dim_sym((2, 1)))
    if not avg.same_as(want):
        failures += 1
    return _report("tableau-projectors", failures, cases)


def check_twirl_projection_oracle(seed: int = 0, size_cap: int | None = None) -> dict:
    """For diagonal states the dense block projections of sigma^(x k) match
    the twirled-power weights exactly."""
    import numpy as np
    from math import gcd

    rng = random.Random(seed)
    failures = cases = 0
    d = 2
    for k in (2, 3):
        for _ in range(3):
            cases += 1
            r = _random_spectrum(rng, d)
            den = 1
            for x in r:
                den = den * x.denominator // gcd(den, x.denominator)
            dim = d**k
            mat = np.empty((dim, dim), dtype=object)
            mat[:] = 0
            for idx in range(dim):
                digits = [(idx // d ** (k - 1 - i)) % d for i in range(k)]
                val = 1
                for dig in digits:
                    val *= int(r[dig] * den)
                mat[idx, idx] = val
            power = oracle.DenseOperator(mat, Fraction(1, den**k), k, d)
            wts = oracle.schur_weyl_weights(power, size_cap=size_cap)
            if wts != dict(twirl_power(r, k).weights):
                failures += 1
    return _report("twirl-power-oracle", failures, cases)


def check_general_dual_oracle(max_q: int = 6, size_cap: int | None = None) -> dict:
    """Single-irrep states of shape (2,1): bound, remainder positivity and
    monotone approach to fully mixed over the q sweep."""
    failures = cases = 0
    t21 = oracle.first_standard_tableau((2, 1))
    deltas = []
    for q in range(3, max_q + 1):
        cases += 1
        rep = oracle.verify_general_dual(t21, 2, q, size_cap=size_cap)
        deltas.append(rep["delta"])
        if not rep["pass"]:
            failures += 1
    cases += 1
    if not all(a > b for a, b in zip(deltas, deltas[1:])):
        failures += 1
    cases += 1
    rep = oracle.verify_general_dual(oracle.first_standard_tableau((2,)), 2, 3,
                                     size_cap=size_cap)
    if not rep["pass"]:
        failures += 1
    return _report("general-dual-definetti", failures, cases)


def check_trace_norm_paths(size_cap: int | None = None) -> dict:
    """Float trace norm agrees with the exact weight-difference norm for
    operators diagonal in the duality basis."""
    failures = cases = 0
    for lam in partitions_of(2, 4):
        cases += 1
        red = oracle.werner_combination(dual_trace(lam, 2, 2), size_cap=size_cap)
        mixed = oracle.werner_combination(fully_mixed(2, 2), size_cap=size_cap)
        exact = trace_distance(dual_trace(lam, 2, 2), fully_mixed(2, 2))
        if abs(oracle.trace_norm(red - mixed) - float(exact)) > 1e-9:
            failures += 1
    cases += 1
    proj = oracle.schur_weyl_projector((2,), 2, size_cap=size_cap)
    if abs(oracle.trace_norm(proj) - float(proj.trace())) > 1e-9:
        failures += 1
    return _report("trace-norm-paths", failures, cases)


def check_partial_trace_rules(size_cap: int | None = None) -> dict:
    """Product states reduce factor-wise and traces are preserved."""
    import numpy as np

    failures = cases = 0
    a = np.empty((2, 2), dtype=object)
    a[:] = [[2, 1], [1, 3]]
    b = np.empty((2, 2), dtype=object)
    b[:] = [[1, 1], [1, 5]]
    ab = oracle.DenseOperator(np.array(np.kron(a, b).tolist(), dtype=object),
                              Fraction(1, 7), 2, 2)
    cases += 1
    red = oracle.partial_trace_subsystems(ab, 1)
    want = oracle.DenseOperator(a * 6, Fraction(1, 7), 1, 2)  # trace(b) = 6
    if not red.same_as(want) or red.trace() != ab.trace():
        failures += 1
    cases += 1
    ab4 = oracle.DenseOperator(np.array(np.kron(a, b).tolist(), dtype=object),
                               Fraction(1, 7), 1, 4, bipartite=(2, 2))
    inner = oracle.partial_trace_inner(ab4)
    if not inner.same_as(want) or inner.trace() != ab4.trace():
        failures += 1
    cases += 1
    full = oracle.partial_trace_subsystems(ab, 2)
    if not full.same_as(ab):
        failures += 1
    return _report("partial-trace-rules", failures, cases)


FORMULA_CHECKS = [
    check_character_orthogonality,
    check_dimension_identities,
    check_lr_two_paths,
    check_kron_symmetry,
    check_kronecker_row_bound,
    check_inner_sum_lr,
    check_inner_sum_vanishing,
    check_inner_sum_kron,
    check_chi_poly_symmetries,
    check_root_structure,
    check_trace_states,
    check_cycle_sum,
    check_dual_twirl_trace,
    check_shifted_schur_scaling,
]

BOUND_CHECKS = [
    check_dual_definetti_weights,
    check_dual_definetti_asymptote,
    check_sym_definetti_regime,
    check_bound_edges,
]


def _run(check, *args, **kwargs) -> dict:
    """A crash inside a check is a failed check, not a crashed suite.
    Size-cap errors do propagate: they are a resource condition, not a
    verification verdict."""
    from .errors import SizeCapError

    try:
        return check(*args, **kwargs)
    except SizeCapError:
        raise
    except Exception as exc:
        name = check.__name__.removeprefix("check_").replace("_", "-")
        return {"check": name, "lhs": f"exception: {exc}", "rhs": "0 failures",
                "pass": False}


def run_suite(suite: str, size_cap: int | None = None, seed: int = 0) -> list[dict]:
    """Run one of formulas | bounds | oracle | all; returns the report list."""
    reports: list[dict] = []
    if suite in ("formulas", "all"):
        for check in FORMULA_CHECKS:
            reports.append(_run(check))
        reports.append(_run(check_twirl_sum, seed))
        reports.append(_run(check_schur_two_paths, seed))
    if suite in ("bounds", "all"):
        for check in BOUND_CHECKS:
            reports.append(_run(check))
    if suite in ("oracle", "all"):
        reports.append(_run(check_perm_traces, size_cap))
        reports.append(_run(check_sw_families, size_cap))
        reports.append(_run(check_trace_formula_oracle, size_cap=size_cap))
        reports.append(_run(check_dual_trace_oracle, size_cap))
        reports.append(_run(check_dual_twirl_oracle, size_cap))
        reports.append(_run(check_young_projectors, size_cap))
        reports.append(_run(check_twirl_projection_oracle, seed, size_cap))
        reports.append(_run(check_general_dual_oracle, size_cap=size_cap))
        reports.append(_run(check_trace_norm_paths, size_cap))
        reports.append(_run(check_partial_trace_rules, size_cap))
    if not reports:
        raise ValueError(f"unknown suite {suite!r}")
    return reports
