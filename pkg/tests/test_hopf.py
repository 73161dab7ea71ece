import itertools
import math

import pytest

from qgrass.hopf import (
    AbelianQuotient,
    build,
    divided_power_coproduct_check,
    pbw_dim,
    presentation_diff,
    verify_hopf,
)
from qgrass.qarith import GENERIC, q_binom_unbalanced, root_of_unity

D3 = root_of_unity(3)
D6 = root_of_unity(6)


# ---------------------------------------------------------------------------
# abelian quotients
# ---------------------------------------------------------------------------


def brute_force_order(rank, relations, box=9):
    # count cosets of the sublattice inside a large box (valid for finite index)
    from itertools import product

    lattice = set()
    coeffs = list(product(range(-4, 5), repeat=len(relations)))
    for cs in coeffs:
        v = tuple(sum(c * r[i] for c, r in zip(cs, relations)) for i in range(rank))
        lattice.add(v)
    reps = set()
    g = AbelianQuotient(rank, relations)
    for v in product(range(box), repeat=rank):
        reps.add(g.reduce(v))
    return len(reps)


@pytest.mark.parametrize(
    "rank, rels, expected",
    [
        (1, [(3,)], 3),
        (2, [(2, 0), (0, 5)], 10),
        (2, [(2, 1), (0, 3)], 6),
        (3, [(2, 0, 0), (0, 2, 0), (1, 1, 1)], 4),
        (2, [(2, 0)], math.inf),
    ],
)
def test_quotient_orders(rank, rels, expected):
    g = AbelianQuotient(rank, rels)
    assert g.order() == expected
    if expected is not math.inf:
        assert len(g.elements()) == expected
        assert brute_force_order(rank, rels) == expected
        for a, b in itertools.product(g.elements()[:6], repeat=2):
            assert g.mul(a, b) == g.mul(b, a)
            assert g.mul(a, g.inv(a)) == g.identity()


def test_reduce_is_projection():
    g = AbelianQuotient(2, [(2, 1), (0, 3)])
    for v in itertools.product(range(-4, 5), repeat=2):
        r = g.reduce(v)
        assert g.reduce(r) == r


# ---------------------------------------------------------------------------
# rank-one Taft algebra: full certification
# ---------------------------------------------------------------------------


def test_taft_rank_one_presentation():
    p = build("taft-mn", m=1, n=0, mode=D3)
    assert pbw_dim(p) == 9
    k, x = p.gen_g(0), p.gen_x(0)
    kxk_inv = p.mul(p.mul(k, x), p.gen_g(0, -1))
    assert kxk_inv == p.scale(x, D3.q())
    assert p.mul(p.mul(x, x), x) == {}
    report = verify_hopf(p, depth="exhaustive")
    assert report.passed, [c.to_json() for c in report.checks if not c.passed]
    assert not p.warnings


def test_taft_rank_one_antipode_order_four():
    # S^2 = conjugation by K, so S has order 4 on the skew primitive
    p = build("taft-mn", m=1, n=0, mode=D3)
    x = p.gen_x(0)
    s2 = p.antipode(p.antipode(x))
    k, kinv = p.gen_g(0), p.gen_g(0, -1)
    assert s2 == p.mul(p.mul(kinv, x), k)


def test_sweedler_point():
    p = build("taft-mn", m=0, n=1, mode=D3)
    assert pbw_dim(p) == 4
    report = verify_hopf(p, depth="exhaustive")
    assert report.passed
    assert not p.warnings


# ---------------------------------------------------------------------------
# mixed-rank families: dimensions per the stated presentations
# ---------------------------------------------------------------------------


def test_taft_mixed_rank_dimension_and_warning():
    p = build("taft-mn", m=1, n=1, mode=D3)
    assert pbw_dim(p) == 36
    # the stated order-2 fermionic group-likes truncate their conjugation
    # characters; the builder records this instead of hiding it
    assert p.warnings
    report = verify_hopf(p, depth="generators")
    assert report.passed  # the stated axiom checks hold on generators
    assoc = [c for c in report.probes if c.name.startswith("normal-form product assoc")]
    assert assoc and not assoc[0].passed


def test_taft_orders_dimension():
    p = build("taft-orders", orders=(2, 3), mode=D6)
    assert pbw_dim(p) == 36
    assert not p.warnings
    report = verify_hopf(p, depth="exhaustive")
    assert report.passed, [c.to_json() for c in report.checks if not c.passed]


def test_taft_orders_generalized_dimension():
    p = build("taft-orders-generalized", orders=(2,), group_orders=(4,), mode=root_of_unity(4))
    assert pbw_dim(p) == 8
    assert verify_hopf(p, depth="exhaustive").passed


def test_taft_orders_validation():
    with pytest.raises(ValueError):
        build("taft-orders", orders=(4,), mode=D6)  # 4 does not divide 6
    with pytest.raises(ValueError):
        build("taft-orders-generalized", orders=(2,), group_orders=(3,), mode=D6)


def test_gq_restricted_dimension_and_diff_with_taft():
    g = build("gq-restricted", m=1, n=1, mode=D3)
    t = build("taft-mn", m=1, n=1, mode=D3)
    assert pbw_dim(g) == 36 == pbw_dim(t)
    diff = presentation_diff(t, g)
    assert diff["x_dims_equal"] and diff["group_orders_equal"]
    # the rule sets differ exactly in the diagonal conjugation exponent on the
    # divided-power directions: q vs q^2
    assert len(diff["differences"]) == 1
    (d,) = diff["differences"]
    assert (d["kind"], d["group_gen"], d["x_gen"]) == ("conjugation", "K1", "x1")
    assert d["left"] == str(D3.q())
    assert d["right"] == str(D3.q_power(2))


def test_gq_restricted_rejects_even_char():
    with pytest.raises(ValueError):
        build("gq-restricted", m=1, n=1, mode=root_of_unity(8))


def test_aq_infinite_dimension():
    p = build("aq", m=1, n=1, mode=GENERIC)
    assert pbw_dim(p) is math.inf


@pytest.mark.parametrize("d", [3, 4], ids=["odd-order", "even-order"])
def test_aq_antipode_negates_top_power(d):
    # S(x^L) = -x^L at ord(q) = L, both parities of the order
    mode = root_of_unity(d)
    p = build("aq", m=1, n=0, mode=mode)
    zero_g = p.group.identity()
    top = {((d,), zero_g): mode.one()}
    assert p.antipode(top) == p.scale(top, -mode.one())
    # and the top power is central among the generators
    x, k = p.gen_x(0), p.gen_g(0)
    assert p.mul(top, x) == p.mul(x, top)
    assert p.mul(top, k) == p.mul(k, top)


def test_group_likes_invert_under_antipode():
    p = build("dq", m=1, n=1, mode=GENERIC)
    for i in range(p.group.rank):
        g = p.gen_g(i)
        assert p.mul(g, p.antipode(g)) == p.unit()
        assert p.antipode(g) == p.gen_g(i, -1)


# ---------------------------------------------------------------------------
# derivative cover
# ---------------------------------------------------------------------------


def test_dq_generators_only_passes():
    p = build("dq", m=1, n=1, mode=GENERIC)
    assert pbw_dim(p) is math.inf
    assert not p.warnings
    report = verify_hopf(p, depth="generators")
    assert report.passed, [c.to_json() for c in report.checks if not c.passed]
    # the square of the coproduct of an exterior derivative vanishes
    d2 = p.gen_x(1)
    dd = p.tensor_mul(p.delta_gen_x(1), p.delta_gen_x(1), 2)
    assert dd == {}
    assert p.mul(d2, d2) == {}


def test_dq_minus_variant_also_hopf():
    p = build("dq", m=1, n=1, mode=GENERIC, coproduct_variant="minus")
    assert verify_hopf(p, depth="generators").passed


def test_dq_restricted_group_is_finite_and_consistent():
    p = build("dq-restricted", m=1, n=1, mode=D3)
    assert not p.warnings
    order = p.group.order()
    assert order is not math.inf
    # derivative part has dimension ell^m 2^n = 6
    assert p.x_dim() == 6
    assert pbw_dim(p) == 6 * order
    report = verify_hopf(p, depth="generators")
    assert report.passed, [c.to_json() for c in report.checks if not c.passed]


def test_dq_restricted_even_char():
    p = build("dq-restricted", m=1, n=1, mode=root_of_unity(8))
    assert not p.warnings
    assert verify_hopf(p, depth="generators").passed


def test_antipode_of_bosonic_derivative_matches_closed_form():
    # S(d) = -q Theta(e) d for the polynomial-direction derivative
    p = build("dq", m=1, n=0, mode=GENERIC)
    s = p.antipode(p.gen_x(0))
    th_idx = p.group_names.index("Th1")
    direct = p.scale(p.mul(p.gen_g(th_idx), p.gen_x(0)), -GENERIC.q())
    assert s == direct


# ---------------------------------------------------------------------------
# divided-power coproduct expansions
# ---------------------------------------------------------------------------


def test_aq_binomial_expansion_and_threshold():
    p = build("aq", m=1, n=0, mode=D3)
    report = divided_power_coproduct_check(p, 0, 4)
    assert report.passed, [c.to_json() for c in report.checks if not c.passed]
    names = [c.name for c in report.checks]
    assert any("threshold p = 3" in n for n in names)


def test_aq_expansion_spot_value_p2():
    p = build("aq", m=1, n=0, mode=GENERIC)
    lhs = p.tensor_mul(p.delta_gen_x(0), p.delta_gen_x(0), 2)
    two_q = q_binom_unbalanced(2, 1, GENERIC)
    x2 = ((2,), (0,))
    x1k = ((1,), (1,))
    x1 = ((1,), (0,))
    k2 = ((0,), (2,))
    expected = {
        (x2, ((0,), (0,))): GENERIC.one(),
        (x1k, x1): two_q,
        (k2, x2): GENERIC.one(),
    }
    assert lhs == expected


def test_gq_expansion_and_top_primitivity():
    p = build("gq", m=1, n=0, mode=D3)
    report = divided_power_coproduct_check(p, 0, 3)
    assert report.passed, [c.to_json() for c in report.checks if not c.passed]
    names = [c.name for c in report.checks]
    assert any("base-q^2" in n for n in names)
    # the adjoined top divided power is primitive by construction
    top = len(p.xgens) - 1
    d = p.delta_gen_x(top)
    assert len(d) == 2 and all(
        g == p.group.identity() for key in d for (_, g) in key
    )


def test_dq_threshold_primitivity_at_char_3():
    # group orders capped, derivative powers left free: Delta(d)^3 collapses
    p = build("dq-restricted", m=1, n=1, mode=D3, partial_caps=False)
    report = divided_power_coproduct_check(p, 0, 3)
    thr = [c for c in report.checks if "threshold" in c.name]
    assert thr and all(c.passed for c in thr)


def test_hopf_json_shape():
    p = build("taft-mn", m=1, n=0, mode=D3)
    data = verify_hopf(p, "exhaustive").to_json()
    assert data["dimension"] == 9
    assert data["passed"] is True
    blob = p.to_json()
    assert blob["group"]["order"] == 3
    assert blob["skew_generators"][0]["coproduct"] == "x1 (x) 1 + K1 (x) x1"
