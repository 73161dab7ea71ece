"""Chevalley-generator actions, module-algebra laws, weights and simplicity.

The raising/lowering operators act through three-atom words (coordinate times
derivative times grading twist); the toral generators are grading twists.  The
same words serve the Grassmann side and the dual side, with the side-specific
atomic actions supplied by the weyl module.

Verification is exhaustive on graded components: the defining relations of the
quantum general (special) linear supergroup, the module-algebra (twisted
Leibniz) law against the bosonized coproduct, highest-weight extraction by
exact kernel computation, and a simplicity certificate via cyclic spans.  The
simplicity criterion is sound because every graded component checked has
pairwise distinct toral weights on its monomial basis: any nonzero submodule
then contains a basis monomial, so simplicity is equivalent to every basis
monomial generating the full component.  When the weight-separation
precondition fails the verdict is reported as inconclusive, never as a
definite answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from enum import Enum

from .indices import MultiIndex
from .qarith import ScalarQ, char_of
from .superspaces import (
    Family,
    SpaceSpec,
    SuperVector,
    basis_of_degree,
    multiply,
    top_degree,
)
from concurrent.futures import ThreadPoolExecutor

from .weyl import (
    OperatorWord,
    PairCheck,
    Relation,
    RelationReport,
    _worker_count,
    apply_word,
    mult_x,
    parity,
    partial,
    run_checks,
    sigma,
    tau,
)

__all__ = [
    "Gen",
    "generator_word",
    "verify_uq_relations",
    "verify_module_algebra",
    "dim_formula",
    "exact_rank",
    "RowSpace",
    "weight_of",
    "expected_highest_weight",
    "component_report",
    "ComponentReport",
]

_DUAL_SIDE = (Family.DUAL, Family.DUAL_RESTRICTED)


class Gen(Enum):
    E = "E"
    F = "F"
    K = "K"
    KINV = "Kinv"
    SK = "SK"
    SKINV = "SKinv"
    PARITY = "sigma"


def _check_index(space: SpaceSpec, kind: Gen, i: int) -> None:
    size = space.shape.size
    if kind in (Gen.E, Gen.F, Gen.SK, Gen.SKINV):
        if not 1 <= i <= size - 1:
            raise ValueError(f"{kind.value}_{i}: index must lie in 1..{size - 1}")
    elif kind in (Gen.K, Gen.KINV):
        if not 1 <= i <= size:
            raise ValueError(f"{kind.value}_{i}: index must lie in 1..{size}")


def generator_word(kind: Gen, i: int, space: SpaceSpec) -> OperatorWord:
    """Operator word realizing one Chevalley/toral generator on the space."""
    if space.family is Family.AFFINE:
        raise ValueError("generator actions are defined on the Grassmann-type spaces")
    if kind is not Gen.PARITY:
        _check_index(space, kind, i)
    m = space.shape.m
    dual = space.family in _DUAL_SIDE

    if kind is Gen.E:
        atoms = (mult_x(i), partial(i + 1), sigma(i, 1))
    elif kind is Gen.F:
        atoms = (sigma(i, -1), mult_x(i + 1), partial(i))
    elif kind is Gen.PARITY:
        atoms = (parity(),)
    elif kind in (Gen.K, Gen.KINV):
        e = 1 if kind is Gen.K else -1
        if dual or not space.shape.is_fermionic_pos(i):
            atoms = (sigma(i, e),)
        else:
            atoms = (sigma(i, -e), tau(i))
    else:  # SK / SKINV
        e = 1 if kind is Gen.SK else -1
        if dual:
            atoms = (sigma(i, e), sigma(i + 1, -e))
        elif i < m:
            atoms = (sigma(i, e), sigma(i + 1, -e))
        elif i == m:
            atoms = (sigma(m, e), sigma(m + 1, e), tau(m + 1))
        else:
            atoms = (sigma(i, -e), sigma(i + 1, e), tau(i), tau(i + 1))
    return OperatorWord(space, atoms)


def _q_sub(space: SpaceSpec, i: int) -> int:
    """Exponent sign of q_i: +1 on the first block of indices, -1 after."""
    return 1 if i <= space.shape.m else -1


def _cartan(space: SpaceSpec, i: int, j: int) -> int:
    """(alpha_i, alpha_j) for the super bilinear form with signature (m, n)."""
    m = space.shape.m

    def form(a: int, b: int) -> int:
        if a != b:
            return 0
        return 1 if a <= m else -1

    return form(i, j) - form(i, j + 1) - form(i + 1, j) + form(i + 1, j + 1)


def _w(space: SpaceSpec) -> OperatorWord:
    return OperatorWord(space, ())


def verify_uq_relations(space: SpaceSpec, t_max: int, variant: str = "gl") -> RelationReport:
    """All defining relations of the (bosonized) quantum supergroup action,
    instantiated over every index combination and checked on degrees <= t_max.

    ``variant='gl'`` checks the individual toral generators; ``variant='sl'``
    keeps only the simple-root ones.  Root-of-unity modes on restricted spaces
    additionally check the restricted-quotient relations.
    """
    if variant not in ("gl", "sl"):
        raise ValueError("variant must be 'gl' or 'sl'")
    mode = space.mode
    size = space.shape.size
    m = space.shape.m
    J = range(1, size)
    checks: list = []

    def word(kind: Gen, i: int = 0) -> OperatorWord:
        return generator_word(kind, i, space)

    if variant == "gl":
        for i in J if False else range(1, size + 1):
            checks.append(
                Relation(f"K{i} Kinv{i} = 1", (word(Gen.K, i).then(word(Gen.KINV, i)),), (_w(space),))
            )
            for j in range(i + 1, size + 1):
                checks.append(
                    Relation(
                        f"K{i} K{j} = K{j} K{i}",
                        (word(Gen.K, i).then(word(Gen.K, j)),),
                        (word(Gen.K, j).then(word(Gen.K, i)),),
                    )
                )
        for i in range(1, size + 1):
            qi = _q_sub(space, i)
            for j in J:
                for kind, sgn in ((Gen.E, 1), (Gen.F, -1)):
                    exp = qi * sgn * ((1 if i == j else 0) - (1 if i == j + 1 else 0))
                    checks.append(
                        Relation(
                            f"K{i} {kind.value}{j} = q_{i}^{sgn * ((i == j) - (i == j + 1))} {kind.value}{j} K{i}",
                            (word(Gen.K, i).then(word(kind, j)),),
                            (word(kind, j).then(word(Gen.K, i)).scaled(mode.q_power(exp)),),
                        )
                    )
    for i in J:
        checks.append(
            Relation(f"SK{i} SKinv{i} = 1", (word(Gen.SK, i).then(word(Gen.SKINV, i)),), (_w(space),))
        )
        for j in J:
            for kind, sgn in ((Gen.E, 1), (Gen.F, -1)):
                exp = sgn * _cartan(space, i, j)
                checks.append(
                    Relation(
                        f"SK{i} {kind.value}{j} = q^{exp} {kind.value}{j} SK{i}",
                        (word(Gen.SK, i).then(word(kind, j)),),
                        (word(kind, j).then(word(Gen.SK, i)).scaled(mode.q_power(exp)),),
                    )
                )

    denom_plus = mode.q() - mode.q_power(-1)
    for i in J:
        for j in J:
            odd_pair = i == j == m
            lhs = [word(Gen.E, i).then(word(Gen.F, j))]
            lhs.append(
                word(Gen.F, j).then(word(Gen.E, i)).scaled(mode.scalar(1 if odd_pair else -1))
            )
            if i == j:
                denom = denom_plus if _q_sub(space, i) == 1 else -denom_plus
                rhs = (
                    word(Gen.SK, i).scaled(denom.inverse()),
                    word(Gen.SKINV, i).scaled(-denom.inverse()),
                )
            else:
                rhs = ()
            name = (
                f"E{i} F{j} {'+' if odd_pair else '-'} F{j} E{i} = "
                + (f"(SK{i} - SKinv{i})/(q_{i} - q_{i}^-1)" if i == j else "0")
            )
            checks.append(Relation(name, tuple(lhs), rhs))

    for kind in (Gen.E, Gen.F):
        for i in J:
            for j in J:
                if abs(i - j) > 1:
                    checks.append(
                        Relation(
                            f"{kind.value}{i} {kind.value}{j} commute",
                            (word(kind, i).then(word(kind, j)),),
                            (word(kind, j).then(word(kind, i)),),
                        )
                    )
                if abs(i - j) == 1 and i != m:
                    a, b = word(kind, i), word(kind, j)
                    checks.append(
                        Relation(
                            f"{kind.value}: quadratic Serre at ({i},{j})",
                            (
                                a.then(a).then(b),
                                a.then(b).then(a).scaled(-(mode.q() + mode.q_power(-1))),
                                b.then(a).then(a),
                            ),
                            (),
                        )
                    )
        if 1 <= m <= size - 1:
            em = word(kind, m)
            checks.append(
                Relation(f"{kind.value}{m}^2 = 0", (em.then(em),), ())
            )
            if m - 1 >= 1 and m + 1 <= size - 1:
                a, b, c = word(kind, m - 1), em, word(kind, m + 1)
                checks.append(
                    Relation(
                        f"{kind.value}: quartic Serre around the odd root",
                        (
                            a.then(b).then(c).then(b),
                            b.then(a).then(b).then(c),
                            c.then(b).then(a).then(b),
                            b.then(c).then(b).then(a),
                            b.then(a).then(c).then(b).scaled(-(mode.q() + mode.q_power(-1))),
                        ),
                        (),
                    )
                )

    if space.family in (Family.OMEGA_RESTRICTED, Family.DUAL_RESTRICTED):
        ell = char_of(mode).ell
        for j in J:
            if j == m:
                continue
            for kind in (Gen.E, Gen.F):
                checks.append(
                    Relation(
                        f"{kind.value}{j}^ell = 0 (restricted)",
                        (word(kind, j).power(ell),),
                        (),
                    )
                )
        if variant == "gl":
            for i in range(1, size + 1):
                checks.append(
                    Relation(
                        f"K{i}^(2 ell) = 1 (restricted)",
                        (word(Gen.K, i).power(2 * ell),),
                        (_w(space),),
                    )
                )
                k_ell = Relation(
                    f"K{i}^ell = 1 (informative)",
                    (word(Gen.K, i).power(ell),),
                    (_w(space),),
                )
                checks.append(k_ell)

    return run_checks(f"uq-relations-{variant}", space, checks, t_max)


def verify_module_algebra(space: SpaceSpec, t_max: int) -> RelationReport:
    """Twisted Leibniz law g(uv) = sum g_(1)(u) g_(2)(v) for every generator,
    with the bosonized coproducts, on all monomial pairs with degree sum
    <= t_max."""
    m = space.shape.m
    size = space.shape.size
    checks: list = []

    par = generator_word(Gen.PARITY, 0, space)

    def pair_check(name, fn):
        checks.append(PairCheck(name, space, fn))

    for j in range(1, size):
        e_j = generator_word(Gen.E, j, space)
        f_j = generator_word(Gen.F, j, space)
        sk_j = generator_word(Gen.SK, j, space)
        skinv_j = generator_word(Gen.SKINV, j, space)
        odd = j == m

        def e_fn(u, v, e_j=e_j, sk_j=sk_j, odd=odd):
            lhs = apply_word(e_j, multiply(u, v))
            left = u if not odd else apply_word(par, u)
            rhs = multiply(apply_word(e_j, u), apply_word(sk_j, v)) + multiply(
                left, apply_word(e_j, v)
            )
            return lhs, rhs

        def f_fn(u, v, f_j=f_j, skinv_j=skinv_j, odd=odd):
            lhs = apply_word(f_j, multiply(u, v))
            left = apply_word(skinv_j, u)
            if odd:
                left = apply_word(par, left)
            rhs = multiply(apply_word(f_j, u), v) + multiply(left, apply_word(f_j, v))
            return lhs, rhs

        pair_check(f"E{j} twisted Leibniz", e_fn)
        pair_check(f"F{j} twisted Leibniz", f_fn)

    for i in range(1, size + 1):
        k_i = generator_word(Gen.K, i, space)

        def k_fn(u, v, k_i=k_i):
            return apply_word(k_i, multiply(u, v)), multiply(
                apply_word(k_i, u), apply_word(k_i, v)
            )

        pair_check(f"K{i} is an algebra automorphism", k_fn)

    def par_fn(u, v):
        return apply_word(par, multiply(u, v)), multiply(apply_word(par, u), apply_word(par, v))

    pair_check("parity is an algebra automorphism", par_fn)
    return run_checks("module-algebra", space, checks, t_max)


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------


def _compositions(k: int, total: int) -> int:
    if total < 0:
        return 0
    if k == 0:
        return 1 if total == 0 else 0
    return math.comb(k + total - 1, k - 1)


def _bounded_compositions(k: int, total: int, ell: int) -> int:
    """Compositions of total into k parts each < ell, by inclusion-exclusion."""
    if total < 0:
        return 0
    out = 0
    for i in range(total // ell + 1):
        term = math.comb(k, i) * _compositions(k, total - i * ell)
        out += -term if i % 2 else term
    return out


def dim_formula(space: SpaceSpec, t: int) -> int:
    """Closed-form dimension of the degree-t component."""
    if t < 0:
        raise ValueError("degree must be nonnegative")
    top = top_degree(space)
    if top is not None and t > top:
        raise ValueError(f"degree {t} exceeds the top degree {top}")
    m, n = space.shape.m, space.shape.n
    fam = space.family
    if fam in (Family.OMEGA, Family.AFFINE):
        return sum(
            math.comb(n, s) * _compositions(m, t - s) for s in range(0, min(t, n) + 1)
        )
    if fam is Family.OMEGA_RESTRICTED:
        ell = space.shape.restricted_ell
        return sum(
            math.comb(n, s) * _bounded_compositions(m, t - s, ell)
            for s in range(0, min(t, n) + 1)
        )
    if fam is Family.DUAL:
        return sum(
            math.comb(m, s) * _compositions(n, t - s) for s in range(0, min(t, m) + 1)
        )
    ell = space.shape.restricted_ell
    return sum(
        math.comb(m, s) * _bounded_compositions(n, t - s, ell)
        for s in range(0, min(t, m) + 1)
    )


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------


class RowSpace:
    """Reduced row span of homogeneous vectors, pivoted in monomial order."""

    def __init__(self, space: SpaceSpec):
        self.space = space
        self.degree: int | None = None
        self.rows: dict[MultiIndex, SuperVector] = {}  # pivot monomial -> row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _leading(self, v: SuperVector) -> MultiIndex:
        return min(v.terms, key=lambda idx: idx.entries)

    def reduce(self, v: SuperVector) -> SuperVector:
        while not v.is_zero():
            lead = self._leading(v)
            row = self.rows.get(lead)
            if row is None:
                return v
            v = v - row.scaled(v.terms[lead])
        return v

    def add(self, v: SuperVector) -> bool:
        """Insert v; True iff it enlarges the span."""
        if v.is_zero():
            return False
        deg = v.degree()
        if deg is None:
            raise ValueError("inhomogeneous vector")
        if self.degree is None:
            self.degree = deg
        elif deg != self.degree:
            raise ValueError("mixed degrees rejected")
        v = self.reduce(v)
        if v.is_zero():
            return False
        lead = self._leading(v)
        v = v.scaled(v.terms[lead].inverse())
        # keep previously stored rows fully reduced against the new pivot
        for key in list(self.rows):
            row = self.rows[key]
            c = row.terms.get(lead)
            if c is not None:
                self.rows[key] = row - v.scaled(c)
        self.rows[lead] = v
        return True

    def basis(self) -> list[SuperVector]:
        return [self.rows[k] for k in sorted(self.rows, key=lambda idx: idx.entries)]


def exact_rank(vectors: list[SuperVector]) -> tuple[int, list[SuperVector]]:
    """Rank and a reduced basis of the span of homogeneous vectors."""
    if not vectors:
        return 0, []
    space = vectors[0].space
    rs = RowSpace(space)
    for v in vectors:
        if v.space != space:
            raise ValueError("vectors live in different spaces")
        rs.add(v)
    return rs.rank, rs.basis()


# ---------------------------------------------------------------------------
# weights, highest-weight vectors, simplicity
# ---------------------------------------------------------------------------


def weight_of(space: SpaceSpec, idx: MultiIndex) -> tuple[tuple[int, ...], int]:
    """Toral eigen-exponents (second block negated) plus the parity sign bit.

    In root-of-unity mode the exponents are reduced modulo the order of q, so
    equal weights mean equal eigenvalue tuples.
    """
    m = space.shape.m
    exps = [e if pos <= m else -e for pos, e in enumerate(idx.entries, start=1)]
    if not space.mode.is_generic:
        d = space.mode.d
        exps = [e % d for e in exps]
    par = sum(idx.entries[m:]) % 2
    return tuple(exps), par


_OMEGA_LIKE = (Family.OMEGA, Family.OMEGA_RESTRICTED)


def expected_highest_weight(space: SpaceSpec, t: int) -> tuple[MultiIndex, tuple[int, ...], str] | None:
    """Predicted highest-weight monomial, weight (epsilon-coordinates) and a
    fundamental-weight label for the component of degree t, when covered."""
    m, n = space.shape.m, space.shape.n
    shape = space.shape
    if space.family in _OMEGA_LIKE and m == 0:
        return None
    if space.family is Family.OMEGA:
        idx = MultiIndex((t,) + (0,) * (m - 1) + (0,) * n, shape)
        return idx, tuple(idx.entries), f"{t}*w1"
    if space.family is Family.OMEGA_RESTRICTED:
        ell = shape.restricted_ell
        cap = m * (ell - 1)
        if t <= cap:
            i = max(1, -(-t // (ell - 1)))  # ceil
            t_i = t - (i - 1) * (ell - 1)
            bos = [ell - 1] * (i - 1) + [t_i] + [0] * (m - i)
            idx = MultiIndex(tuple(bos) + (0,) * n, shape)
            label = f"({ell - 1 - t_i})*w{i - 1} + {t_i}*w{i}"
            return idx, tuple(idx.entries), label
        p = t - cap
        idx = MultiIndex((ell - 1,) * m + (1,) * p + (0,) * (n - p), shape)
        return idx, tuple(idx.entries), f"({ell - 2})*w{m} + w{m + p}"
    if space.family is Family.DUAL:
        if t <= m:
            idx = MultiIndex((1,) * t + (0,) * (m - t) + (0,) * n, shape)
            return idx, tuple(idx.entries), f"w{t}"
        if n == 0:
            return None
        idx = MultiIndex((1,) * m + (t - m,) + (0,) * (n - 1), shape)
        return idx, tuple(idx.entries), f"w{m} + {t - m}*e{m + 1}"
    # restricted dual
    ell = shape.restricted_ell
    if t <= m:
        idx = MultiIndex((1,) * t + (0,) * (m - t) + (0,) * n, shape)
        return idx, tuple(idx.entries), f"w{t}"
    r = t - m
    i = max(1, -(-r // (ell - 1)))
    t_i = r - (i - 1) * (ell - 1)
    bos = [ell - 1] * (i - 1) + [t_i] + [0] * (n - i)
    idx = MultiIndex((1,) * m + tuple(bos), shape)
    label = f"w{m} + ({ell - 1})*(e{m + 1}..e{m + i - 1}) + {t_i}*e{m + i}"
    return idx, tuple(idx.entries), label


def _highest_weight_space(space: SpaceSpec, t: int) -> list[SuperVector]:
    """Exact joint kernel of all raising operators on the degree-t component."""
    basis = basis_of_degree(space, t)
    dim = len(basis)
    size = space.shape.size
    raisers = [generator_word(Gen.E, j, space) for j in range(1, size)]
    if not raisers or dim == 0:
        return [SuperVector.monomial(space, idx) for idx in basis]
    # columns: input basis monomials; rows: stacked output coordinates
    cols = []
    out_keys: dict[tuple[int, MultiIndex], int] = {}
    for c, idx in enumerate(basis):
        u = SuperVector.monomial(space, idx)
        col: dict[int, ScalarQ] = {}
        for jw, w in enumerate(raisers):
            img = apply_word(w, u)
            for oidx, coeff in img.terms.items():
                key = (jw, oidx)
                row = out_keys.setdefault(key, len(out_keys))
                col[row] = coeff
        cols.append(col)
    # gaussian elimination on the columns' coordinates to find the null space
    nrows = len(out_keys)
    pivots: dict[int, int] = {}  # row -> col index of pivot
    reduced: list[dict[int, ScalarQ]] = []
    combos: list[dict[int, ScalarQ]] = []  # expression of reduced col in inputs
    one = space.mode.one()
    kernel: list[SuperVector] = []
    for c, col in enumerate(cols):
        combo = {c: one}
        col = dict(col)
        while col:
            r = min(col)
            p = pivots.get(r)
            if p is None:
                break
            factor = col[r]
            pcol, pcombo = reduced[p], combos[p]
            for rr, vv in pcol.items():
                s = col.get(rr)
                s = -vv * factor if s is None else s - vv * factor
                if s.is_zero():
                    col.pop(rr, None)
                else:
                    col[rr] = s
            for cc, vv in pcombo.items():
                s = combo.get(cc)
                s = -vv * factor if s is None else s - vv * factor
                if s.is_zero():
                    combo.pop(cc, None)
                else:
                    combo[cc] = s
        if not col:
            vec = SuperVector(space, {basis[cc]: vv for cc, vv in combo.items()})
            lead = min(vec.terms, key=lambda i: i.entries)
            kernel.append(vec.scaled(vec.terms[lead].inverse()))
        else:
            r = min(col)
            lead = col[r].inverse()
            col = {rr: vv * lead for rr, vv in col.items()}
            combo = {cc: vv * lead for cc, vv in combo.items()}
            pivots[r] = len(reduced)
            reduced.append(col)
            combos.append(combo)
    return kernel


@dataclass
class ComponentReport:
    space: SpaceSpec
    t: int
    dim: int
    dim_by_formula: int
    hw_basis: list[list[dict]]
    hw_weights: list[tuple[tuple[int, ...], int]]
    expected_hw: dict | None
    hw_matches_expected: bool | None
    simple: str  # "simple" | "not_simple" | "inconclusive"
    witnesses: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        ok = self.dim == self.dim_by_formula and self.simple == "simple"
        if self.hw_matches_expected is not None:
            ok = ok and self.hw_matches_expected
        return ok

    def to_json(self) -> dict:
        verdict = {"simple": True, "not_simple": False}.get(self.simple, "inconclusive")
        return {
            "space": self.space.describe(),
            "t": self.t,
            "dim": self.dim,
            "dim_formula": self.dim_by_formula,
            "hw_basis": self.hw_basis,
            "hw_weight": [list(w) for w, _ in self.hw_weights],
            "hw_parity": [p for _, p in self.hw_weights],
            "expected_hw": self.expected_hw,
            "hw_matches_expected": self.hw_matches_expected,
            "simple": verdict,
            "witnesses": self.witnesses,
        }


def component_report(space: SpaceSpec, t: int) -> ComponentReport:
    """Dimension, highest-weight data and a simplicity certificate for the
    degree-t component."""
    if space.family is Family.AFFINE:
        raise ValueError("module structure lives on the Grassmann-type spaces")
    dim_closed = dim_formula(space, t)  # raises on out-of-range t
    basis = basis_of_degree(space, t)
    dim = len(basis)
    witnesses: list = []

    # weight-separation precondition
    weights: dict[tuple, MultiIndex] = {}
    separated = True
    for idx in basis:
        w = weight_of(space, idx)
        if w in weights:
            separated = False
            witnesses.append(
                {"weight_collision": [str(weights[w]), str(idx)], "weight": list(w[0])}
            )
            break
        weights[w] = idx

    kernel = _highest_weight_space(space, t)
    hw_weights = []
    for vec in kernel:
        ws = {weight_of(space, idx) for idx in vec.terms}
        if len(ws) == 1:
            hw_weights.append(ws.pop())
        else:
            hw_weights.append(((), -1))
            witnesses.append({"hw_not_weight_vector": vec.to_json()})

    expected = expected_highest_weight(space, t)
    expected_json = None
    matches: bool | None = None
    if expected is not None:
        idx, weps, label = expected
        expected_json = {"monomial": str(idx), "weight": list(weps), "label": label}
        matches = (
            len(kernel) == 1
            and kernel[0] == SuperVector.monomial(space, idx)
            and hw_weights[0] == weight_of(space, idx)
        )
        if not matches:
            witnesses.append({"hw_mismatch": [v.to_json() for v in kernel]})

    size = space.shape.size
    ops = [generator_word(Gen.E, j, space) for j in range(1, size)] + [
        generator_word(Gen.F, j, space) for j in range(1, size)
    ]

    def span_rank(seed: MultiIndex) -> int:
        rs = RowSpace(space)
        seed_vec = SuperVector.monomial(space, seed)
        rs.add(seed_vec)
        frontier = [seed_vec]
        while frontier and rs.rank < dim:
            new = []
            for v in frontier:
                for op in ops:
                    img = apply_word(op, v)
                    if not img.is_zero() and rs.add(img):
                        new.append(img)
            frontier = new
        return rs.rank

    if not separated:
        verdict = "inconclusive"
    else:
        verdict = "simple"
        workers = _worker_count()
        if workers > 1 and len(basis) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                ranks = list(pool.map(span_rank, basis))
        else:
            ranks = [span_rank(seed) for seed in basis]
        for seed, rank in zip(basis, ranks):
            if rank < dim:
                verdict = "not_simple"
                witnesses.append({"seed_with_proper_span": str(seed), "span_rank": rank})
                break

    return ComponentReport(
        space=space,
        t=t,
        dim=dim,
        dim_by_formula=dim_closed,
        hw_basis=[v.to_json() for v in kernel],
        hw_weights=hw_weights,
        expected_hw=expected_json,
        hw_matches_expected=matches,
        simple=verdict,
        witnesses=witnesses,
    )
