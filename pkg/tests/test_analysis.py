import random

import pytest

from cdindex.algebra import MultiGradedAlgebra
from cdindex.analysis import (ColoredComplexWitness, check_inequalities, check_product_inequality,
                              color_sets, load_counterexample, realizable_as_colored_complex,
                              verify_witness, witness_from_algebra)
from cdindex.cd import CdPolynomial, cd_index_of_flag, coefficient, word_from_mdeg
from cdindex.poset import build_boolean, flag_f_vector
from cdindex.simplicial import SearchExhausted, f_vector, flag_from_f, h_vector, octahedron
from oracles import colored_complex_exists


def boolean_psi(m):
    return cd_index_of_flag(flag_f_vector(build_boolean(m)))


def psi_from_table(n, table):
    coeffs = {}
    for S, c in table.items():
        if c:
            coeffs[word_from_mdeg(tuple(int(i + 1 in S) for i in range(n)))] = c
    return CdPolynomial(n, coeffs)


def test_b5_inequalities():
    psi = boolean_psi(5)
    assert check_inequalities(psi) == []
    assert check_product_inequality(psi) == []
    assert coefficient(psi, (1, 0, 1, 0)) == 4
    assert coefficient(psi, (1, 0, 0, 0)) * coefficient(psi, (0, 0, 1, 0)) == 9


def test_counterexample_passes_inequalities():
    psi = load_counterexample()
    assert psi.n == 6
    assert psi["ddd"] == 2 and psi["cccccc"] == 1
    assert check_inequalities(psi) == []
    assert check_product_inequality(psi) == []
    assert coefficient(psi, (1, 0, 1, 0, 1, 0)) == 2


def test_violation_reported():
    psi = CdPolynomial(4, {"cccc": 1, "dcc": 1, "ccd": 1, "dd": 2})
    bad = check_inequalities(psi)
    assert [(v.v, v.w) for v in bad] == [((1, 0, 0, 0), (0, 0, 1, 0)), ((0, 0, 1, 0), (1, 0, 0, 0))]
    assert "2 > 1" in str(bad[0])
    assert len(check_product_inequality(psi)) == 1


@pytest.mark.parametrize("k", [1, 2, 5, 17])
def test_c2_plus_kd_has_no_violations(k):
    assert check_inequalities(CdPolynomial(2, {"cc": 1, "d": k})) == []


def test_color_sets():
    assert color_sets(4) == [(), (1,), (2,), (3,), (1, 3)]
    assert color_sets(0) == [()]


def test_counterexample_not_realizable():
    assert realizable_as_colored_complex(load_counterexample()) is None


def test_b5_realizable():
    psi = boolean_psi(5)
    W = realizable_as_colored_complex(psi)
    assert W is not None and verify_witness(W, psi)
    assert W.vertex_counts == {1: 3, 2: 5, 3: 3}


def test_cn_gives_empty_witness():
    for n in range(0, 5):
        W = realizable_as_colored_complex(CdPolynomial(n, {"c" * n: 1}))
        assert W.faces == () and all(v == 0 for v in W.vertex_counts.values())


def test_negative_and_caps():
    with pytest.raises(ValueError):
        realizable_as_colored_complex(CdPolynomial(2, {"cc": 1, "d": -1}))
    with pytest.raises(SearchExhausted):
        realizable_as_colored_complex(boolean_psi(5), max_vertices=5)
    with pytest.raises(SearchExhausted):
        realizable_as_colored_complex(boolean_psi(7), budget=3)


def test_algebra_witnesses():
    A = MultiGradedAlgebra(4)
    W = witness_from_algebra(A)
    assert W.vertex_counts == {1: 3, 2: 5, 3: 3}
    assert W.flag_numbers()[(1, 3)] == 4
    assert verify_witness(W, boolean_psi(5))
    assert witness_from_algebra(MultiGradedAlgebra(0)).faces == ()
    K = octahedron()
    Wo = witness_from_algebra(MultiGradedAlgebra(3, h_vector(f_vector(K))))
    assert Wo.flag_numbers() == {(): 1, (1,): 4, (2,): 6}
    assert verify_witness(Wo, cd_index_of_flag(flag_from_f(K)))


@pytest.mark.parametrize("n", range(1, 7))
def test_algebra_witness_boolean(n):
    assert verify_witness(witness_from_algebra(MultiGradedAlgebra(n)), boolean_psi(n + 1))


def test_verify_witness_rejects_bad():
    psi = CdPolynomial(2, {"cc": 1, "d": 2})
    good = ColoredComplexWitness(2, {1: 2}, (((1, 0),), ((1, 1),)))
    assert verify_witness(good, psi)
    assert not verify_witness(ColoredComplexWitness(2, {1: 2}, (((1, 0),),)), psi)
    assert not verify_witness(ColoredComplexWitness(3, {1: 2}, good.faces), psi)


def test_witness_format():
    W = realizable_as_colored_complex(CdPolynomial(4, {"cccc": 1, "dcc": 1, "ccd": 1, "dd": 1}))
    assert W.format() == "color 1: v1.1;\ncolor 2: ;\ncolor 3: v3.1;\nv1.1 v3.1\n"


def random_table(rng, n):
    sets = color_sets(n)
    table = {(): 1}
    for S in sets:
        if len(S) == 1:
            table[S] = rng.randint(0, 3)
    for S in sets:
        if len(S) >= 2:
            cap = 1
            for c in S:
                cap *= table[(c,)]
            table[S] = rng.randint(0, min(cap, 4))
    return table


@pytest.mark.parametrize("seed", range(40))
def test_search_agrees_with_unpruned_oracle(seed):
    rng = random.Random(seed)
    n = rng.choice([4, 5, 6])
    table = random_table(rng, n)
    psi = psi_from_table(n, table)
    W = realizable_as_colored_complex(psi)
    assert (W is not None) == colored_complex_exists(n, table)
    if W is not None:
        assert verify_witness(W, psi)


def test_counterexample_unpruned_oracle():
    psi = load_counterexample()
    table = {S: coefficient(psi, tuple(int(i + 1 in S) for i in range(6))) for S in color_sets(6)}
    assert not colored_complex_exists(6, table)
