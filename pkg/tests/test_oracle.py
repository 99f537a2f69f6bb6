from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import numpy as np
import pytest

from schurweyl import oracle
from schurweyl.characters import dim_sym, dim_unitary
from schurweyl.errors import SizeCapError
from schurweyl.oracle import (
    DenseOperator,
    check_standard_tableau,
    cycle_type,
    first_standard_tableau,
    identity_operator,
    operator_from_json,
    operator_to_json,
    partial_trace_inner,
    partial_trace_subsystems,
    permutation_operator,
    schur_weyl_projector,
    schur_weyl_weights,
    standard_tableaux,
    symmetric_average,
    trace_norm,
    verify_general_dual,
    werner_combination,
    young_projector,
)
from schurweyl.partitions import partitions_of, rows
from schurweyl.werner import dual_trace, dual_twirl_cycle, fully_mixed, trace_out_sym


def _obj(rows_):
    arr = np.empty((len(rows_), len(rows_[0])), dtype=object)
    arr[:] = rows_
    return arr


def test_permutation_operator_basics():
    ident = permutation_operator((0, 1), 3)
    assert ident.same_as(identity_operator(2, 3))
    swap = permutation_operator((1, 0), 2)
    assert swap.trace() == 2  # one cycle
    assert (swap @ swap).same_as(identity_operator(2, 2))
    with pytest.raises(ValueError):
        permutation_operator((0, 0), 2)


def test_permutation_traces_count_cycles():
    for d in (2, 3):
        for pi in permutations(range(3)):
            op = permutation_operator(pi, d)
            assert op.trace() == d ** rows(cycle_type(pi))


def test_permutation_operators_compose():
    for a in permutations(range(3)):
        for b in permutations(range(3)):
            composed = tuple(a[b[i]] for i in range(3))
            lhs = permutation_operator(a, 2) @ permutation_operator(b, 2)
            assert lhs.same_as(permutation_operator(composed, 2))


def test_size_cap():
    with pytest.raises(SizeCapError):
        permutation_operator((0, 1, 2), 5, size_cap=64)
    with pytest.raises(ValueError):
        permutation_operator((0, 1), 2, size_cap=32)
    permutation_operator((0, 1, 2), 4, size_cap=64)


def test_schur_weyl_projector_family():
    for d, n in ((2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (4, 2), (6, 2), (4, 3)):
        parts = partitions_of(n, d)
        ps = {lam: schur_weyl_projector(lam, d) for lam in parts}
        total = identity_operator(n, d) * 0
        for lam, p in ps.items():
            assert p.is_symmetric()
            assert (p @ p).same_as(p)
            assert p.trace() == dim_unitary(lam, d) * dim_sym(lam)
            total = total + p
        assert total.same_as(identity_operator(n, d))
        for a in parts:
            for b in parts:
                if a != b:
                    assert (ps[a] @ ps[b]).is_zero()


def test_schur_weyl_projector_simple_traces():
    for d in (2, 3):
        for n in (2, 3):
            assert schur_weyl_projector((n,), d).trace() == comb(d + n - 1, n)
    assert schur_weyl_projector((2, 1), 2).trace() == 4
    assert schur_weyl_projector((1, 1, 1), 2).is_zero()


def test_standard_tableaux_enumeration():
    for n in range(1, 6):
        for shape in partitions_of(n):
            tabs = list(standard_tableaux(shape))
            assert len(tabs) == dim_sym(shape)
            for t in tabs:
                check_standard_tableau(t)
    assert first_standard_tableau((2, 1)) == ((1, 2), (3,))
    with pytest.raises(ValueError):
        check_standard_tableau(((1, 4), (2, 3)))  # second column decreases
    with pytest.raises(ValueError):
        check_standard_tableau(((2, 1), (3,)))  # first row decreases
    with pytest.raises(ValueError):
        check_standard_tableau(((1, 2), (4,)))  # entries are not 1..n


def test_young_projector_properties():
    for n in (2, 3):
        for shape in partitions_of(n):
            for t in standard_tableaux(shape):
                for d in (2, 3):
                    yp = young_projector(t, d)
                    assert yp.is_symmetric()
                    assert (yp @ yp).same_as(yp)
                    assert yp.trace() == dim_unitary(shape, d)


def test_young_projector_row_and_column_tableaux():
    row = first_standard_tableau((3,))
    assert young_projector(row, 2).same_as(schur_weyl_projector((3,), 2))
    col = ((1,), (2,), (3,))
    for d in (3, 4):
        assert young_projector(col, d).trace() == comb(d, 3)
    assert young_projector(col, 2).is_zero()


def test_young_projector_symmetric_average_collapses_the_block():
    t = first_standard_tableau((2, 1))
    avg = symmetric_average(young_projector(t, 2))
    want = schur_weyl_projector((2, 1), 2) * Fraction(1, dim_sym((2, 1)))
    assert avg.same_as(want)


def test_partial_trace_subsystems_product_rule():
    a = _obj([[2, 1], [1, 3]])
    b = _obj([[1, 1], [1, 5]])
    ab = DenseOperator(np.array(np.kron(a, b).tolist(), dtype=object), Fraction(1, 7), 2, 2)
    red = partial_trace_subsystems(ab, 1)
    want = DenseOperator(a * 6, Fraction(1, 7), 1, 2)
    assert red.same_as(want)
    assert red.trace() == ab.trace()
    assert partial_trace_subsystems(ab, 2).same_as(ab)
    with pytest.raises(ValueError):
        partial_trace_subsystems(ab, 3)


def test_partial_trace_matches_weight_formula():
    for d in (2, 3):
        for n in (2, 3):
            for lam in partitions_of(n, d):
                ef = dim_unitary(lam, d) * dim_sym(lam)
                rho = schur_weyl_projector(lam, d) * Fraction(1, ef)
                for k in range(1, n + 1):
                    red = partial_trace_subsystems(rho, k)
                    assert red.trace() == 1
                    expect = trace_out_sym(lam, k, d)
                    assert schur_weyl_weights(red) == dict(expect.weights)
                    assert werner_combination(expect).same_as(red)


def test_partial_trace_inner_product_rule():
    a = _obj([[2, 1], [1, 3]])
    b = _obj([[1, 1], [1, 5]])
    ab = DenseOperator(np.array(np.kron(a, b).tolist(), dtype=object),
                       Fraction(1), 1, 4, bipartite=(2, 2))
    red = partial_trace_inner(ab)
    assert red.same_as(DenseOperator(a * 6, Fraction(1), 1, 2))
    assert red.trace() == ab.trace()
    with pytest.raises(ValueError):
        partial_trace_inner(ab, 3, 2)
    plain = DenseOperator(_obj([[1, 0], [0, 1]]), Fraction(1), 1, 2)
    with pytest.raises(ValueError):
        partial_trace_inner(plain)


def test_partial_trace_inner_matches_dual_weights():
    for p, q in ((2, 2), (2, 3)):
        lam = (2,)
        ef = dim_unitary(lam, p * q) * dim_sym(lam)
        rho = schur_weyl_projector(lam, p * q) * Fraction(1, ef)
        rho.bipartite = (p, q)
        red = partial_trace_inner(rho)
        assert red.trace() == 1
        wts = schur_weyl_weights(red)
        den = 2 * (p * q + 1)
        assert wts[(2,)] == Fraction((p + 1) * (q + 1), den)
        assert wts[(1, 1)] == Fraction((p - 1) * (q - 1), den)


def test_symmetric_average_fixes_invariant_operators():
    p = schur_weyl_projector((2, 1), 2)
    assert symmetric_average(p).same_as(p)


def test_symmetric_average_output_commutes_with_permutations():
    avg = symmetric_average(young_projector(first_standard_tableau((2, 1)), 2))
    for pi in permutations(range(3)):
        op = permutation_operator(pi, 2)
        assert (op @ avg).same_as(avg @ op)


def test_symmetric_average_of_cycle_operators():
    for d in (2, 3):
        for pi in permutations(range(3)):
            op = permutation_operator(pi, d) * Fraction(1, d**3)
            wts = schur_weyl_weights(symmetric_average(op))
            assert wts == dict(dual_twirl_cycle(cycle_type(pi), d).weights)


def test_trace_norm():
    p = schur_weyl_projector((2,), 2)
    assert abs(trace_norm(p) - 3.0) < 1e-9
    a = werner_combination(fully_mixed(2, 2))
    b = schur_weyl_projector((2,), 2) * Fraction(1, 3)
    c = schur_weyl_projector((1, 1), 2)
    assert abs(trace_norm(b - c) - 2.0) < 1e-9  # orthogonal states
    assert abs(trace_norm(a - a)) < 1e-12
    with pytest.raises(ValueError):
        trace_norm(permutation_operator((1, 2, 0), 2))


def test_trace_norm_worked_example():
    # distance between the traced symmetric state and fully mixed at p=q=2
    p = q = 2
    lam = (2,)
    ef = dim_unitary(lam, p * q) * dim_sym(lam)
    rho = schur_weyl_projector(lam, p * q) * Fraction(1, ef)
    rho.bipartite = (p, q)
    red = partial_trace_inner(rho)
    mixed = werner_combination(fully_mixed(2, p))
    expect = Fraction(p * p - 1, p * p * q + p)
    assert expect == Fraction(3, 10)
    assert abs(trace_norm(red - mixed) - float(expect)) < 1e-9


def test_verify_general_dual_report():
    rep = verify_general_dual(first_standard_tableau((2, 1)), 2, 3)
    assert rep["pass"]
    assert Fraction(rep["beta"]) == Fraction(8, 35)  # (q-1)(q-2)/((q-1/p)(q+1/p))
    assert rep["delta"] <= rep["bound"]
    rep = verify_general_dual(first_standard_tableau((2,)), 2, 2)
    assert rep["pass"]
    with pytest.raises(ValueError):
        verify_general_dual(first_standard_tableau((2, 1)), 2, 2)


def test_operator_json_roundtrip():
    op = schur_weyl_projector((2, 1), 2) * Fraction(3, 7)
    data = operator_to_json(op)
    back = operator_from_json(data)
    assert back.same_as(op)
    assert data["entries"][0] == str(op.entry(0, 0))


def test_operator_arithmetic_sanity():
    ident = identity_operator(2, 2)
    twice = ident + ident
    assert twice.entry(0, 0) == 2
    assert (twice * Fraction(1, 2)).same_as(ident)
    swap = permutation_operator((1, 0), 2)
    assert not swap.same_as(ident)
    assert (swap - swap).is_zero()
    with pytest.raises(ValueError):
        ident + identity_operator(3, 2)
