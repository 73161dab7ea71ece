import pytest

from qgrass.indices import MultiIndex
from qgrass.qarith import q_int, root_of_unity
from qgrass.superspaces import Family, SuperVector, basis_of_degree, make_space
from qgrass.uqrep import (
    Gen,
    component_report,
    dim_formula,
    exact_rank,
    expected_highest_weight,
    generator_word,
    verify_module_algebra,
    verify_uq_relations,
    weight_of,
)
from qgrass.weyl import apply_word

D3 = root_of_unity(3)

OMEGA11 = make_space(Family.OMEGA, 1, 1)
OMEGA21 = make_space(Family.OMEGA, 2, 1)
DUAL21 = make_space(Family.DUAL, 2, 1)
OMEGA21_R3 = make_space(Family.OMEGA_RESTRICTED, 2, 1, D3)


def mono(space, *entries):
    return SuperVector.monomial(space, MultiIndex(tuple(entries), space.shape))


# ---------------------------------------------------------------------------
# generator actions, frozen closed forms
# ---------------------------------------------------------------------------


def test_raising_at_odd_root_omega11():
    e1 = generator_word(Gen.E, 1, OMEGA11)
    assert apply_word(e1, mono(OMEGA11, 2, 1)) == mono(OMEGA11, 3, 0).scaled(q_int(3))
    assert apply_word(e1, mono(OMEGA11, 2, 0)).is_zero()


def test_lowering_at_odd_root_kills_occupied():
    f2 = generator_word(Gen.F, 2, OMEGA21)
    assert apply_word(f2, mono(OMEGA21, 1, 1, 1)).is_zero()
    assert apply_word(f2, mono(OMEGA21, 1, 1, 0)) == mono(OMEGA21, 1, 0, 1)


def test_bosonic_raising_closed_form():
    e1 = generator_word(Gen.E, 1, OMEGA21)
    assert apply_word(e1, mono(OMEGA21, 1, 2, 1)) == mono(OMEGA21, 2, 1, 1).scaled(q_int(2))


def test_anticommutator_eigenvalue_at_odd_root():
    em = generator_word(Gen.E, 2, OMEGA21)
    fm = generator_word(Gen.F, 2, OMEGA21)
    for beta_m in range(3):
        for mu in (0, 1):
            u = mono(OMEGA21, 0, beta_m, mu)
            got = apply_word(em, apply_word(fm, u)) + apply_word(fm, apply_word(em, u))
            assert got == u.scaled(q_int(beta_m + mu))


def test_dual_raising_closed_form():
    em = generator_word(Gen.E, 2, DUAL21)
    assert apply_word(em, mono(DUAL21, 1, 0, 2)) == mono(DUAL21, 1, 1, 1)
    assert apply_word(em, mono(DUAL21, 1, 1, 2)).is_zero()


def test_generator_index_validation():
    with pytest.raises(ValueError):
        generator_word(Gen.E, 3, OMEGA21)
    with pytest.raises(ValueError):
        generator_word(Gen.K, 4, OMEGA21)


# ---------------------------------------------------------------------------
# relations and module-algebra law
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("space", [OMEGA11, DUAL21], ids=["omega11", "dual21"])
def test_uq_relations_generic_small(space):
    report = verify_uq_relations(space, 4)
    assert report.passed, [r.to_json() for r in report.results if not r.passed][:3]


def test_uq_relations_sl_variant():
    report = verify_uq_relations(OMEGA11, 4, variant="sl")
    assert report.passed
    assert not any(r.name.startswith("K") for r in report.results)


def test_uq_relations_vacuous_when_no_simple_roots():
    space = make_space(Family.OMEGA, 0, 1)
    report = verify_uq_relations(space, 3)
    assert report.passed


def test_uq_relations_restricted_extras():
    space = make_space(Family.OMEGA_RESTRICTED, 1, 1, D3)
    report = verify_uq_relations(space, 4)
    names = [r.name for r in report.results]
    assert any("(restricted)" in n for n in names)
    assert report.passed, [r.to_json() for r in report.results if not r.passed][:3]
    # at an odd root the toral squares already close at the half order
    info = [r for r in report.results if "informative" in r.name]
    assert info and all(r.passed for r in info)


@pytest.mark.parametrize(
    "space",
    [OMEGA11, make_space(Family.DUAL, 1, 1), make_space(Family.DUAL_RESTRICTED, 1, 1, D3)],
    ids=["omega", "dual", "dual-restricted"],
)
def test_module_algebra_small(space):
    report = verify_module_algebra(space, 3)
    assert report.passed, [r.to_json() for r in report.results if not r.passed][:3]


# ---------------------------------------------------------------------------
# dimension formulas vs enumeration
# ---------------------------------------------------------------------------


def test_dim_formula_spot_values():
    assert dim_formula(OMEGA21, 2) == 5
    assert dim_formula(make_space(Family.OMEGA_RESTRICTED, 1, 1, D3), 2) == 2
    assert dim_formula(DUAL21, 1) == 3


@pytest.mark.parametrize(
    "space, t_hi",
    [
        (OMEGA21, 6),
        (make_space(Family.OMEGA, 3, 2), 5),
        (make_space(Family.DUAL, 2, 2), 6),
        (OMEGA21_R3, 5),
        (make_space(Family.DUAL_RESTRICTED, 2, 2, D3), 6),
        (make_space(Family.AFFINE, 2, 1), 5),
    ],
    ids=lambda x: str(x),
)
def test_dim_formula_matches_enumeration(space, t_hi):
    for t in range(t_hi + 1):
        assert dim_formula(space, t) == len(basis_of_degree(space, t))


def test_dim_formula_range_errors():
    with pytest.raises(ValueError):
        dim_formula(OMEGA21, -1)
    with pytest.raises(ValueError):
        dim_formula(OMEGA21_R3, 6)


# ---------------------------------------------------------------------------
# exact rank
# ---------------------------------------------------------------------------


def test_exact_rank_basics():
    u = mono(OMEGA21, 1, 0, 1)
    v = mono(OMEGA21, 0, 1, 1)
    assert exact_rank([u])[0] == 1
    assert exact_rank([u, u.scaled(q_int(2))])[0] == 1
    rank, basis = exact_rank([u + v, v])
    assert rank == 2
    assert basis[0] == v and basis[1] == u  # reduced echelon in monomial order


def test_exact_rank_rejects_mixed_degree():
    with pytest.raises(ValueError):
        exact_rank([mono(OMEGA21, 1, 0, 0) + mono(OMEGA21, 1, 1, 0)])


def test_exact_rank_full_component():
    vecs = [SuperVector.monomial(OMEGA21, i) for i in basis_of_degree(OMEGA21, 3)]
    assert exact_rank(vecs)[0] == dim_formula(OMEGA21, 3)


# ---------------------------------------------------------------------------
# weights, highest-weight vectors, simplicity
# ---------------------------------------------------------------------------


def test_weight_of_negates_second_block():
    idx = MultiIndex((2, 0, 1), OMEGA21.shape)
    assert weight_of(OMEGA21, idx) == ((2, 0, -1), 1)
    idxd = MultiIndex((1, 0, 2), DUAL21.shape)
    assert weight_of(DUAL21, idxd) == ((1, 0, -2), 0)


def test_weight_separation_within_components():
    for space in (OMEGA21, OMEGA21_R3, DUAL21):
        for t in range(5):
            if dim_formula(space, t) == 0:
                continue
            seen = set()
            for idx in basis_of_degree(space, t):
                w = weight_of(space, idx)
                assert w not in seen
                seen.add(w)


def test_expected_hw_generic_and_restricted():
    idx, weight, label = expected_highest_weight(OMEGA21, 3)
    assert idx.entries == (3, 0, 0) and label == "3*w1"
    idx, weight, label = expected_highest_weight(OMEGA21_R3, 5)
    assert idx.entries == (2, 2, 1)
    assert label == "(1)*w2 + w3"
    idx, weight, label = expected_highest_weight(DUAL21, 3)
    assert idx.entries == (1, 1, 1)


def test_component_report_generic_omega():
    for t in range(4):
        rep = component_report(OMEGA21, t)
        assert rep.dim == rep.dim_by_formula
        assert rep.hw_matches_expected
        assert rep.simple == "simple"


def test_component_report_restricted_top_band():
    rep = component_report(OMEGA21_R3, 5)
    assert rep.expected_hw["monomial"] == "(2,2 | 1)"
    assert rep.simple == "simple" and rep.hw_matches_expected


def test_component_report_dual():
    for t in range(4):
        rep = component_report(DUAL21, t)
        assert rep.passed, rep.to_json()


def test_component_report_out_of_range():
    with pytest.raises(ValueError):
        component_report(OMEGA21_R3, 6)
