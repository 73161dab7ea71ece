import itertools

import pytest

from qgrass.indices import MultiIndex
from qgrass.qarith import GENERIC, q_int, root_of_unity
from qgrass.superspaces import (
    Family,
    SuperVector,
    basis_of_degree,
    make_space,
)
from qgrass.weyl import (
    InvalidAtomError,
    OperatorWord,
    apply_word,
    mult_x,
    mult_x_divpow,
    operators_equal,
    parity,
    partial,
    sigma,
    smash_mul,
    smash_normal_form,
    tau,
    theta_op,
    verify_relation_suite,
)

D3 = root_of_unity(3)
D8 = root_of_unity(8)

OMEGA21 = make_space(Family.OMEGA, 2, 1)
OMEGA11 = make_space(Family.OMEGA, 1, 1)
DUAL21 = make_space(Family.DUAL, 2, 1)


def mono(space, *entries):
    return SuperVector.monomial(space, MultiIndex(tuple(entries), space.shape))


def word(space, *atoms, coeff=None):
    return OperatorWord(space, tuple(atoms), coeff)


# ---------------------------------------------------------------------------
# atomic actions, frozen examples
# ---------------------------------------------------------------------------


def test_partial_bosonic_prefix_free_example():
    u = mono(OMEGA21, 2, 1, 1)
    img = apply_word(word(OMEGA21, partial(1)), u)
    assert img == mono(OMEGA21, 1, 1, 1)


def test_partial_bosonic_prefix_factor():
    u = mono(OMEGA21, 2, 1, 0)
    img = apply_word(word(OMEGA21, partial(2)), u)
    assert img == mono(OMEGA21, 2, 0, 0).scaled(GENERIC.q_power(-2))


def test_partial_fermionic_cross_factor():
    u = mono(OMEGA21, 1, 1, 1)
    img = apply_word(word(OMEGA21, partial(3)), u)
    assert img == mono(OMEGA21, 1, 1, 0).scaled(GENERIC.q_power(-2))


def test_sigma_eigenvalues():
    u = mono(OMEGA21, 2, 0, 1)
    assert apply_word(word(OMEGA21, sigma(1)), u) == u.scaled(GENERIC.q_power(2))
    assert apply_word(word(OMEGA21, sigma(3)), u) == u.scaled(-GENERIC.q())
    assert apply_word(word(OMEGA21, tau(3)), u) == -u


def test_mult_x_bosonic_includes_bracket():
    u = mono(OMEGA21, 1, 0, 0)
    img = apply_word(word(OMEGA21, mult_x(1)), u)
    assert img == mono(OMEGA21, 2, 0, 0).scaled(q_int(2))


def test_theta_label_twist_equals_sigma_sigma_tau():
    # the twist at the odd simple-root label equals the grading twists times
    # the exterior involution, as operators (here m = 2, so the label -e2+e3)
    lab = MultiIndex.basis_vector(OMEGA21.shape, 3) - MultiIndex.basis_vector(OMEGA21.shape, 2)
    lhs = word(OMEGA21, theta_op(lab))
    rhs = word(OMEGA21, sigma(2), sigma(3), tau(3))
    assert operators_equal(lhs, rhs, 4).equal


def test_parity_atom_matches_tau_product():
    lhs = word(OMEGA21, parity())
    rhs = word(OMEGA21, tau(3))
    assert operators_equal(lhs, rhs, 4).equal


def test_dual_e_m_closed_form():
    for nu2 in (0, 1):
        for a in (1, 2):
            u = mono(DUAL21, 1, nu2, a)
            img = apply_word(word(DUAL21, mult_x(2), partial(3), sigma(2)), u)
            if nu2 == 1:
                assert img.is_zero()
            else:
                assert img == mono(DUAL21, 1, 1, a - 1)


def test_dual_f_m_closed_form():
    for nu2 in (0, 1):
        u = mono(DUAL21, 1, nu2, 1)
        img = apply_word(word(DUAL21, sigma(2, -1), mult_x(3), partial(2)), u)
        if nu2 == 0:
            assert img.is_zero()
        else:
            assert img == mono(DUAL21, 1, 0, 2).scaled(q_int(2))


def test_invalid_atoms_rejected():
    with pytest.raises(InvalidAtomError):
        apply_word(word(OMEGA21, tau(1)), mono(OMEGA21, 0, 0, 0))
    with pytest.raises(InvalidAtomError):
        apply_word(word(DUAL21, tau(1)), mono(DUAL21, 0, 0, 0))
    with pytest.raises(InvalidAtomError):
        apply_word(word(DUAL21, theta_op(MultiIndex.basis_vector(DUAL21.shape, 1))),
                   mono(DUAL21, 0, 0, 0))
    with pytest.raises(InvalidAtomError):
        apply_word(word(OMEGA21, mult_x_divpow(1)), mono(OMEGA21, 0, 0, 0))


def test_degree_bookkeeping():
    w = word(OMEGA21, mult_x(1), partial(2), sigma(1))
    assert w.net_degree() == 0
    omega_root = make_space(Family.OMEGA, 2, 1, D3)
    w2 = word(omega_root, mult_x_divpow(1), partial(3))
    assert w2.net_degree() == 2
    for t in range(4):
        for idx in basis_of_degree(omega_root, t):
            img = apply_word(w2, SuperVector.monomial(omega_root, idx))
            if not img.is_zero():
                assert img.degree() == t + 2


# ---------------------------------------------------------------------------
# operator equality and relation suites
# ---------------------------------------------------------------------------


def test_operators_equal_reports_witness():
    lhs = word(OMEGA11, partial(1), mult_x(1))
    rhs = word(OMEGA11, mult_x(1), partial(1))
    res = operators_equal(lhs, rhs, 3)
    assert not res.equal and res.witness["monomial"] == "(0 | 0)"


def test_weyl_defining_relation_bosonic():
    lhs = [
        word(OMEGA11, partial(1), mult_x(1)),
        word(OMEGA11, mult_x(1), partial(1), coeff=-GENERIC.q()),
    ]
    rhs = word(OMEGA11, sigma(1, -1))
    assert operators_equal(lhs, rhs, 5).equal


def test_weyl_defining_relation_fermionic():
    lhs = [
        word(OMEGA11, partial(2), mult_x(2)),
        word(OMEGA11, mult_x(2), partial(2)),
    ]
    assert operators_equal(lhs, word(OMEGA11, ), 5).equal


@pytest.mark.parametrize("suite", ["partials", "dq", "weyl-generic"])
def test_generic_suites_pass_small(suite):
    report = verify_relation_suite(suite, OMEGA11, 4)
    assert report.passed, [r.to_json() for r in report.results if not r.passed][:2]


def test_leibniz_suite_small():
    report = verify_relation_suite("leibniz", OMEGA11, 3)
    assert report.passed, [r.to_json() for r in report.results if not r.passed][:2]


def test_weyl_odd_root_suite_small():
    space = make_space(Family.OMEGA, 1, 1, D3)
    report = verify_relation_suite("weyl-odd-root", space, 4)
    assert report.passed, [r.to_json() for r in report.results if not r.passed][:2]


def test_weyl_even_root_suite_small():
    space = make_space(Family.OMEGA, 1, 1, D8)
    report = verify_relation_suite("weyl-even-root", space, 4)
    assert report.passed, [r.to_json() for r in report.results if not r.passed][:2]


def test_root_suite_rejects_wrong_branch():
    space = make_space(Family.OMEGA, 1, 1, D3)
    with pytest.raises(InvalidAtomError):
        verify_relation_suite("weyl-even-root", space, 3)


def test_vacuous_suite_on_tiny_space():
    space = make_space(Family.OMEGA, 0, 1)
    report = verify_relation_suite("weyl-generic", space, 3)
    assert report.passed


# ---------------------------------------------------------------------------
# smash normal form
# ---------------------------------------------------------------------------


def sample_words(space, with_divpow=False):
    gens = [partial(1), partial(space.shape.size), mult_x(1), mult_x(space.shape.size),
            sigma(1), sigma(space.shape.size, -1)]
    if space.shape.n:
        gens.append(tau(space.shape.fermionic_positions()[0]))
    gens.append(theta_op(MultiIndex.basis_vector(space.shape, 1)))
    if with_divpow:
        gens.append(mult_x_divpow(1))
    words = [[]]
    words += [[g] for g in gens]
    words += [[a, b] for a, b in itertools.product(gens[:6], repeat=2)]
    words += [[partial(1), mult_x(1), partial(1)], [mult_x(1), partial(1), mult_x(1)]]
    return words


def nf_equals_operator(space, atoms, t_max=4):
    el = smash_normal_form(space, atoms)
    wop = OperatorWord(space, tuple(atoms))
    for t in range(t_max + 1):
        for idx in basis_of_degree(space, t):
            u = SuperVector.monomial(space, idx)
            if el.act(u) != apply_word(wop, u):
                return False, atoms, idx
    return True, None, None


@pytest.mark.parametrize(
    "space",
    [OMEGA11, make_space(Family.OMEGA, 1, 1, D3), make_space(Family.OMEGA_RESTRICTED, 1, 1, D3)],
    ids=["generic", "root", "restricted"],
)
def test_smash_normal_form_is_operator_faithful(space):
    for atoms in sample_words(space, with_divpow=(space.family is Family.OMEGA and not space.mode.is_generic)):
        ok, bad, idx = nf_equals_operator(space, atoms)
        assert ok, (bad, idx)


def test_smash_normal_form_examples():
    # d1 x1 -> s1^-1 + q x1 d1
    el = smash_normal_form(OMEGA11, [partial(1), mult_x(1)])
    data = el.to_json()
    assert len(data) == 2
    terms = {(tuple(t["x"]), tuple(t["sigma"]), tuple(t["partial"])): t["coefficient"] for t in data}
    assert terms[((0, 0), (-1, 0), (0, 0))] == "1"
    assert terms[((1, 0), (0, 0), (1, 0))] == "v"
    # group elements commute: Th(e1) s2 and s2 Th(e1) agree
    a = smash_normal_form(OMEGA11, [theta_op(MultiIndex.basis_vector(OMEGA11.shape, 1)), sigma(2)])
    b = smash_normal_form(OMEGA11, [sigma(2), theta_op(MultiIndex.basis_vector(OMEGA11.shape, 1))])
    assert a == b


def test_smash_product_matches_concatenation_and_associates():
    space = OMEGA11
    words = sample_words(space)[:18]
    els = [smash_normal_form(space, w) for w in words]
    for (wa, ea), (wb, eb) in itertools.product(list(zip(words, els))[:10], repeat=2):
        assert smash_mul(ea, eb) == smash_normal_form(space, list(wa) + list(wb))
    for a, b, c in itertools.product(els[:6], repeat=3):
        assert smash_mul(smash_mul(a, b), c) == smash_mul(a, smash_mul(b, c))
