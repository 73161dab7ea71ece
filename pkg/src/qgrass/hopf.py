"""Finitely presented pointed Hopf algebras of diagonal type, with axioms
checked mechanically.

Every algebra in scope has the same skeleton: a finitely generated abelian
group of group-like generators acting diagonally on skew-primitive generators
that q-commute pairwise and are nilpotent (or free).  Normal forms are
(ordered power product of skew primitives) times (canonical group element), so
elements are sparse maps from normal-form keys to coefficients and all
products are scalar-twisted exponent merges.

The group is an explicit quotient of Z^k by a relation lattice, canonicalized
through a Hermite normal form; orders and dimensions come from the lattice,
not from closed-form claims.  Coproduct, counit and antipode live on the
generators and extend (anti)multiplicatively; the axiom checker evaluates
coassociativity, the counit laws, the antipode convolution identity, and
compatibility of the coproduct with every defining relation inside the tensor
square.  It also probes whether the diagonal conjugation characters factor
through the declared group orders -- the stated fermionic group orders of the
mixed-type presentations fail this probe, which the report records as named
warnings rather than hiding.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .indices import MultiIndex, Shape, theta
from .qarith import (
    GENERIC,
    QMode,
    QParity,
    ScalarQ,
    char_of,
    q_binom,
    q_binom_unbalanced,
)

__all__ = [
    "AbelianQuotient",
    "HopfPresentation",
    "build",
    "HOPF_FAMILIES",
    "pbw_dim",
    "verify_hopf",
    "divided_power_coproduct_check",
    "presentation_diff",
]


# ---------------------------------------------------------------------------
# finitely generated abelian groups as lattice quotients
# ---------------------------------------------------------------------------


class AbelianQuotient:
    """Z^k modulo the row lattice of integer relation vectors."""

    def __init__(self, rank: int, relations: list[tuple[int, ...]]):
        self.rank = rank
        self.relations = [tuple(r) for r in relations if any(r)]
        self._hnf = _hermite_normal_form(self.relations, rank)
        self._pivots = {}
        for row in self._hnf:
            col = next(i for i, v in enumerate(row) if v)
            self._pivots[col] = row

    def reduce(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        v = list(vec)
        for col in sorted(self._pivots):
            row = self._pivots[col]
            t = v[col] // row[col]
            if t:
                for i in range(col, self.rank):
                    v[i] -= t * row[i]
        return tuple(v)

    def identity(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return self.reduce(tuple(x + y for x, y in zip(a, b)))

    def inv(self, a: tuple[int, ...]) -> tuple[int, ...]:
        return self.reduce(tuple(-x for x in a))

    def power(self, a: tuple[int, ...], k: int) -> tuple[int, ...]:
        return self.reduce(tuple(k * x for x in a))

    def order(self) -> int | float:
        if len(self._pivots) < self.rank:
            return math.inf
        out = 1
        for col, row in self._pivots.items():
            out *= row[col]
        return out

    def elements(self) -> list[tuple[int, ...]]:
        if self.order() is math.inf:
            raise ValueError("infinite group")
        # with a pivot in every column the canonical transversal is the box
        # of exponent vectors below the pivot values
        ranges = [range(self._pivots[c][c]) for c in range(self.rank)]
        return [tuple(v) for v in itertools.product(*ranges)]


def _hermite_normal_form(rows: list[tuple[int, ...]], ncols: int) -> list[list[int]]:
    work = [list(r) for r in rows]
    out: list[list[int]] = []
    for col in range(ncols):
        live = [r for r in work if r[col]]
        if not live:
            continue
        # combine rows until a single one carries this column
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            a, b = live[0], live[1]
            t = b[col] // a[col]
            for i in range(ncols):
                b[i] -= t * a[i]
            live = [r for r in live if r[col]]
        piv = live[0]
        if piv[col] < 0:
            for i in range(ncols):
                piv[i] = -piv[i]
        for r in work:
            if r is not piv and r[col]:
                t = r[col] // piv[col]
                for i in range(ncols):
                    r[i] -= t * piv[i]
        work = [r for r in work if any(r) and r is not piv]
        out.append(piv)
    # reduce entries above each pivot (proper column-reduced form)
    for i, row in enumerate(out):
        col = next(c for c, v in enumerate(row) if v)
        for other in out[:i]:
            t = other[col] // row[col]
            if t:
                for c in range(ncols):
                    other[c] -= t * row[c]
    return out


# ---------------------------------------------------------------------------
# presentation data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkewGen:
    """Nilpotent/skew-primitive generator with Delta(x) = x (x) gR + gL (x) x."""

    name: str
    cap: int | None  # x^cap = 0; None = free exponent
    gL: tuple[int, ...]
    gR: tuple[int, ...]


Word = tuple[tuple[str, int], ...]  # letters ("x", i) / ("g", i) / ("ginv", i)
Key = tuple[tuple[int, ...], tuple[int, ...]]  # (x exponents, group element)


@dataclass
class HopfPresentation:
    family: str
    mode: QMode
    group_names: list[str]
    group: AbelianQuotient
    xgens: list[SkewGen]
    chi: list[list[ScalarQ]]  # chi[g][x]: g x g^-1 = chi * x
    comm: list[list[ScalarQ]]  # comm[i][j]: x_i x_j = comm[i][j] x_j x_i
    relations: list[tuple[str, list[tuple[ScalarQ, Word]]]]
    params: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    # ---- elements ---------------------------------------------------------

    def zero(self) -> dict[Key, ScalarQ]:
        return {}

    def unit(self) -> dict[Key, ScalarQ]:
        return {((0,) * len(self.xgens), self.group.identity()): self.mode.one()}

    def gen_x(self, i: int) -> dict[Key, ScalarQ]:
        xv = [0] * len(self.xgens)
        xv[i] = 1
        return {(tuple(xv), self.group.identity()): self.mode.one()}

    def gen_g(self, i: int, e: int = 1) -> dict[Key, ScalarQ]:
        gv = [0] * self.group.rank
        gv[i] = e
        return {((0,) * len(self.xgens), self.group.reduce(tuple(gv))): self.mode.one()}

    def element_of_word(self, word: Word) -> dict[Key, ScalarQ]:
        out = self.unit()
        for kind, i in word:
            if kind == "x":
                out = self.mul(out, self.gen_x(i))
            elif kind == "g":
                out = self.mul(out, self.gen_g(i))
            else:
                out = self.mul(out, self.gen_g(i, -1))
        return out

    def chi_of(self, gvec: tuple[int, ...], j: int) -> ScalarQ:
        out = self.mode.one()
        for gi, e in enumerate(gvec):
            if e:
                out = out * self.chi[gi][j] ** e
        return out

    def _merge_x(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[ScalarQ, tuple[int, ...]] | None:
        coeff = self.mode.one()
        out = []
        for i, (ai, bi) in enumerate(zip(a, b)):
            cap = self.xgens[i].cap
            if cap is not None and ai + bi >= cap:
                return None
            out.append(ai + bi)
        for i in range(len(a)):
            if not a[i]:
                continue
            for j in range(i):
                if b[j]:
                    coeff = coeff * self.comm[i][j] ** (a[i] * b[j])
        return coeff, tuple(out)

    def mul(self, u: dict[Key, ScalarQ], v: dict[Key, ScalarQ]) -> dict[Key, ScalarQ]:
        out: dict[Key, ScalarQ] = {}
        for (xa, ga), ca in u.items():
            for (xb, gb), cb in v.items():
                coeff = ca * cb
                for j, e in enumerate(xb):
                    if e:
                        coeff = coeff * self.chi_of(ga, j) ** e
                hit = self._merge_x(xa, xb)
                if hit is None:
                    continue
                c2, xv = hit
                key = (xv, self.group.mul(ga, gb))
                s = out.get(key)
                s = coeff * c2 if s is None else s + coeff * c2
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    def add(self, u: dict[Key, ScalarQ], v: dict[Key, ScalarQ]) -> dict[Key, ScalarQ]:
        out = dict(u)
        for k, c in v.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return out

    def scale(self, u: dict[Key, ScalarQ], c: ScalarQ) -> dict[Key, ScalarQ]:
        if c.is_zero():
            return {}
        return {k: a * c for k, a in u.items()}

    # ---- structure maps ---------------------------------------------------

    def counit_key(self, key: Key) -> ScalarQ:
        xv, _ = key
        return self.mode.zero() if any(xv) else self.mode.one()

    def counit(self, u: dict[Key, ScalarQ]) -> ScalarQ:
        out = self.mode.zero()
        for k, c in u.items():
            out = out + c * self.counit_key(k)
        return out

    def antipode(self, u: dict[Key, ScalarQ]) -> dict[Key, ScalarQ]:
        out: dict[Key, ScalarQ] = {}
        for (xv, gv), c in u.items():
            term = {((0,) * len(self.xgens), self.group.inv(gv)): c}
            for i in reversed(range(len(self.xgens))):
                for _ in range(xv[i]):
                    term = self.mul(term, self._antipode_x(i))
            out = self.add(out, term)
        return out

    def _antipode_x(self, i: int) -> dict[Key, ScalarQ]:
        # S(x) = -gL^-1 x gR^-1, forced by the convolution identity
        g = self.xgens[i]
        left = {((0,) * len(self.xgens), self.group.inv(g.gL)): self.mode.one()}
        right = {((0,) * len(self.xgens), self.group.inv(g.gR)): self.mode.one()}
        return self.scale(self.mul(self.mul(left, self.gen_x(i)), right), -self.mode.one())

    # ---- tensor powers ----------------------------------------------------

    def tensor_mul(self, u: dict, v: dict, legs: int) -> dict:
        out: dict = {}
        for ka, ca in u.items():
            for kb, cb in v.items():
                coeff = ca * cb
                key = []
                dead = False
                for leg in range(legs):
                    (xa, ga), (xb, gb) = ka[leg], kb[leg]
                    for j, e in enumerate(xb):
                        if e:
                            coeff = coeff * self.chi_of(ga, j) ** e
                    hit = self._merge_x(xa, xb)
                    if hit is None:
                        dead = True
                        break
                    c2, xv = hit
                    coeff = coeff * c2
                    key.append((xv, self.group.mul(ga, gb)))
                if dead:
                    continue
                key = tuple(key)
                s = out.get(key)
                s = coeff if s is None else s + coeff
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    def tensor_unit(self, legs: int) -> dict:
        key = (((0,) * len(self.xgens), self.group.identity()),) * legs
        return {key: self.mode.one()}

    def delta_gen_x(self, i: int) -> dict:
        zero_x = (0,) * len(self.xgens)
        xv = list(zero_x)
        xv[i] = 1
        xv = tuple(xv)
        g = self.xgens[i]
        return {
            ((xv, self.group.identity()), (zero_x, self.group.reduce(g.gR))): self.mode.one(),
            ((zero_x, self.group.reduce(g.gL)), (xv, self.group.identity())): self.mode.one(),
        }

    def delta_key(self, key: Key) -> dict:
        xv, gv = key
        zero_x = (0,) * len(self.xgens)
        out = {((zero_x, gv), (zero_x, gv)): self.mode.one()}
        for i in reversed(range(len(self.xgens))):
            for _ in range(xv[i]):
                out = self.tensor_mul(self.delta_gen_x(i), out, 2)
        return out

    def delta(self, u: dict[Key, ScalarQ]) -> dict:
        out: dict = {}
        for k, c in u.items():
            for kk, cc in self.delta_key(k).items():
                s = out.get(kk)
                s = cc * c if s is None else s + cc * c
                if s.is_zero():
                    out.pop(kk, None)
                else:
                    out[kk] = s
        return out

    def delta_leg(self, tel: dict, leg: int, legs: int) -> dict:
        out: dict = {}
        for key, c in tel.items():
            for kk, cc in self.delta_key(key[leg]).items():
                nk = key[:leg] + kk + key[leg + 1 :]
                s = out.get(nk)
                s = cc * c if s is None else s + cc * c
                if s.is_zero():
                    out.pop(nk, None)
                else:
                    out[nk] = s
        return out

    # ---- bases ------------------------------------------------------------

    def x_dim(self) -> int | float:
        out = 1
        for g in self.xgens:
            if g.cap is None:
                return math.inf
            out *= g.cap
        return out

    def basis_keys(self) -> list[Key]:
        if self.x_dim() is math.inf or self.group.order() is math.inf:
            raise ValueError("infinite presentation has no finite basis")
        xr = [range(g.cap) for g in self.xgens]
        return [
            (tuple(xv), gv)
            for xv in itertools.product(*xr)
            for gv in self.group.elements()
        ]

    def render_key(self, key: Key) -> str:
        xv, gv = key
        parts = [f"{self.xgens[i].name}^{e}" if e > 1 else self.xgens[i].name
                 for i, e in enumerate(xv) if e]
        parts += [f"{self.group_names[i]}^{e}" if e != 1 else self.group_names[i]
                  for i, e in enumerate(gv) if e]
        return " ".join(parts) or "1"

    def render_element(self, u: dict[Key, ScalarQ]) -> str:
        if not u:
            return "0"
        return " + ".join(f"({c}) {self.render_key(k)}" for k, c in sorted(u.items()))

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "mode": "generic" if self.mode.is_generic else f"root-of-unity d={self.mode.d}",
            "group": {
                "generators": self.group_names,
                "relations": [list(r) for r in self.group.relations],
                "order": _dim_json(self.group.order()),
            },
            "skew_generators": [
                {
                    "name": g.name,
                    "nilpotency": g.cap,
                    "coproduct": f"{g.name} (x) {self._gname(g.gR)} + {self._gname(g.gL)} (x) {g.name}",
                    "antipode": self.render_element(self._antipode_x(self.xgens.index(g))),
                    "counit": "0",
                }
                for g in self.xgens
            ],
            "relations": [name for name, _ in self.relations],
            "warnings": self.warnings,
        }

    def _gname(self, gv: tuple[int, ...]) -> str:
        gv = self.group.reduce(gv)
        parts = [f"{self.group_names[i]}^{e}" if e != 1 else self.group_names[i]
                 for i, e in enumerate(gv) if e]
        return " ".join(parts) or "1"


def _dim_json(v: int | float):
    return "infinite" if v is math.inf else int(v)


def pbw_dim(p: HopfPresentation) -> int | float:
    """Exact count of normal-form monomials (nilpotent part times group)."""
    xd = p.x_dim()
    gd = p.group.order()
    if xd is math.inf or gd is math.inf:
        return math.inf
    return xd * gd


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


HOPF_FAMILIES = (
    "taft-mn",
    "taft-orders",
    "taft-orders-generalized",
    "aq",
    "dq",
    "dq-restricted",
    "gq",
    "gq-restricted",
)


def _theta_gens(mode: QMode, shape: Shape, i: int, j: int) -> ScalarQ:
    return theta(
        MultiIndex.basis_vector(shape, i), MultiIndex.basis_vector(shape, j), mode
    )


def _mixed_rank_presentation(
    family: str,
    m: int,
    n: int,
    mode: QMode,
    *,
    x_bos_cap: int | None,
    k_bos_order: int | None,
    diag_exp: int,
    divided_power_tops: bool = False,
) -> HopfPresentation:
    """Common core of the coordinate-side bosonizations: group-likes K_i over
    the (m|n) grading, coordinates x_i with the twist commutation, and the
    one-sided coproduct Delta(x_i) = x_i (x) 1 + K_i (x) x_i."""
    if m + n < 1:
        raise ValueError("need at least one generator")
    shape = Shape(m, n)
    size = m + n
    names_g = [f"K{i}" for i in range(1, size + 1)]
    relations: list[tuple[int, ...]] = []
    orders: list[int | None] = []
    for i in range(1, size + 1):
        if i <= m:
            orders.append(k_bos_order)
        else:
            orders.append(2)
    for i, o in enumerate(orders):
        if o is not None:
            rel = [0] * size
            rel[i] = o
            relations.append(tuple(rel))

    xgens = []
    n_x = size + (m if divided_power_tops else 0)
    zero_g = (0,) * size

    def kvec(i: int) -> tuple[int, ...]:
        v = [0] * size
        v[i - 1] = 1
        return tuple(v)

    for i in range(1, size + 1):
        cap = x_bos_cap if i <= m else 2
        xgens.append(SkewGen(f"x{i}", cap, kvec(i), zero_g))
    if divided_power_tops:
        for i in range(1, m + 1):
            xgens.append(SkewGen(f"x{i}^(top)", None, zero_g, zero_g))

    one = mode.one()
    chi = [[one for _ in range(n_x)] for _ in range(size)]
    comm = [[one for _ in range(n_x)] for _ in range(n_x)]
    for gi in range(1, size + 1):
        for xj in range(1, size + 1):
            c = _theta_gens(mode, shape, gi, xj)
            if gi == xj:
                c = c * (mode.q_power(diag_exp) if xj <= m else mode.scalar(-1))
            chi[gi - 1][xj - 1] = c
        # divided-power tops are declared central
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            if i != j:
                comm[i - 1][j - 1] = _theta_gens(mode, shape, i, j)

    pres_relations: list[tuple[str, list[tuple[ScalarQ, Word]]]] = []

    def add_rel(name, terms):
        pres_relations.append((name, terms))

    minus = -one
    for i, o in enumerate(orders):
        if o is not None:
            add_rel(
                f"{names_g[i]}^{o} = 1",
                [(one, tuple([("g", i)] * o)), (minus, ())],
            )
    for i in range(size):
        for j in range(size):
            if i >= j:
                continue
            add_rel(
                f"{names_g[i]} {names_g[j]} commute",
                [(one, (("g", i), ("g", j))), (minus, (("g", j), ("g", i)))],
            )
    for gi in range(size):
        for xj in range(n_x):
            add_rel(
                f"{names_g[gi]} {xgens[xj].name} = chi {xgens[xj].name} {names_g[gi]}",
                [
                    (one, (("g", gi), ("x", xj))),
                    (-chi[gi][xj], (("x", xj), ("g", gi))),
                ],
            )
    for i in range(n_x):
        for j in range(i):
            add_rel(
                f"{xgens[i].name} {xgens[j].name} = c {xgens[j].name} {xgens[i].name}",
                [
                    (one, (("x", i), ("x", j))),
                    (-comm[i][j], (("x", j), ("x", i))),
                ],
            )
        cap = xgens[i].cap
        if cap is not None:
            add_rel(f"{xgens[i].name}^{cap} = 0", [(one, tuple([("x", i)] * cap))])

    pres = HopfPresentation(
        family=family,
        mode=mode,
        group_names=names_g,
        group=AbelianQuotient(size, relations),
        xgens=xgens,
        chi=chi,
        comm=comm,
        relations=pres_relations,
        params={"m": m, "n": n},
    )
    _character_warnings(pres)
    return pres


def _character_warnings(pres: HopfPresentation) -> None:
    """Record group relations that the conjugation characters do not respect."""
    for rel in pres.group.relations:
        for j, xg in enumerate(pres.xgens):
            val = pres.mode.one()
            for gi, e in enumerate(rel):
                if e:
                    val = val * pres.chi[gi][j] ** e
            if val != pres.mode.one():
                pres.warnings.append(
                    f"group relation {list(rel)} conjugates {xg.name} by {val}, not 1 "
                    "(stated group order is smaller than the character order)"
                )


def build(family: str, **params) -> HopfPresentation:
    """Construct one of the supported presentations.

    Families: taft-mn (m, n, mode), aq (m, n, mode, group_order_cap=True),
    gq / gq-restricted (m, n, mode), dq / dq-restricted (m, n, mode,
    coproduct_variant='plus'|'minus'), taft-orders (orders, mode, mu=None),
    taft-orders-generalized (orders, group_orders, mode, mu=None).
    """
    if family not in HOPF_FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {HOPF_FAMILIES}")
    mode: QMode = params.get("mode", GENERIC)

    if family == "taft-mn":
        m, n = params["m"], params["n"]
        if mode.is_generic:
            raise ValueError("the finite multi-rank family needs q of finite order")
        L = mode.d  # nilpotency bound is the order of q here
        pres = _mixed_rank_presentation(
            family, m, n, mode, x_bos_cap=L, k_bos_order=L, diag_exp=1
        )
        pres.params["order_of_q"] = L
        return pres

    if family == "aq":
        m, n = params["m"], params["n"]
        cap_flag = params.get("group_order_cap", True)
        k_order = mode.d if (not mode.is_generic and cap_flag) else None
        pres = _mixed_rank_presentation(
            family, m, n, mode, x_bos_cap=None, k_bos_order=k_order, diag_exp=1
        )
        pres.params["group_order_cap"] = bool(k_order)
        return pres

    if family in ("gq", "gq-restricted"):
        m, n = params["m"], params["n"]
        caps = params.get("nilpotency_caps", True)
        if mode.is_generic:
            if family == "gq-restricted":
                raise ValueError("the restricted bosonization needs char(q) = ell >= 3")
            return _mixed_rank_presentation(family, m, n, mode, x_bos_cap=None,
                                            k_bos_order=None, diag_exp=2)
        profile = char_of(mode)
        if profile.parity is not QParity.ODD_ROOT:
            raise ValueError("the divided-power bosonization is stated for odd char(q)")
        ell = profile.ell
        pres = _mixed_rank_presentation(
            family, m, n, mode,
            x_bos_cap=ell if caps else None, k_bos_order=ell, diag_exp=2,
            divided_power_tops=(family == "gq" and caps),
        )
        pres.params["ell"] = ell
        return pres

    if family in ("dq", "dq-restricted"):
        return _build_dq(family, mode=mode, **{k: v for k, v in params.items() if k != "mode"})

    # multi-rank families over an arbitrary diagonal matrix
    orders = tuple(params["orders"])
    n = len(orders)
    if family == "taft-orders-generalized":
        group_orders = tuple(params["group_orders"])
        if len(group_orders) != n or any(g % l for g, l in zip(group_orders, orders)):
            raise ValueError("group orders must be multiples of the nilpotency orders")
    else:
        group_orders = orders
    mu = params.get("mu")
    if mu is None:
        if mode.is_generic:
            raise ValueError("need a root-of-unity mode to build the default diagonal matrix")
        d = mode.d
        mu = [[mode.one() for _ in range(n)] for _ in range(n)]
        for i, l in enumerate(orders):
            if d % l:
                raise ValueError(f"order {l} does not divide the order of q ({d})")
            mu[i][i] = mode.q_power(d // l)
    for i in range(n):
        for j in range(n):
            if i != j and mu[i][j] * mu[j][i] != mode.one():
                raise ValueError("off-diagonal entries must be mutually inverse")
        val, o = mu[i][i], orders[i]
        if val**o != mode.one() or any(val**k == mode.one() for k in range(1, o)):
            raise ValueError(f"diagonal entry {i + 1} must have exact order {orders[i]}")

    names_g = [f"K{i}" for i in range(1, n + 1)]
    relations = []
    for i, o in enumerate(group_orders):
        rel = [0] * n
        rel[i] = o
        relations.append(tuple(rel))
    zero_g = (0,) * n
    xgens = [
        SkewGen(f"x{i + 1}", orders[i],
                tuple(1 if k == i else 0 for k in range(n)), zero_g)
        for i in range(n)
    ]
    chi = [[mu[i][j] for j in range(n)] for i in range(n)]
    comm = [[mu[i][j] for j in range(n)] for i in range(n)]
    one = mode.one()
    pres_relations = []
    for i, o in enumerate(group_orders):
        pres_relations.append(
            (f"K{i + 1}^{o} = 1", [(one, tuple([("g", i)] * o)), (-one, ())])
        )
    for i in range(n):
        for j in range(n):
            pres_relations.append(
                (f"K{i + 1} x{j + 1} = mu x{j + 1} K{i + 1}",
                 [(one, (("g", i), ("x", j))), (-chi[i][j], (("x", j), ("g", i)))])
            )
        for j in range(i):
            pres_relations.append(
                (f"x{i + 1} x{j + 1} = mu x{j + 1} x{i + 1}",
                 [(one, (("x", i), ("x", j))), (-comm[i][j], (("x", j), ("x", i)))])
            )
        pres_relations.append(
            (f"x{i + 1}^{orders[i]} = 0", [(one, tuple([("x", i)] * orders[i]))])
        )
    pres = HopfPresentation(
        family=family,
        mode=mode,
        group_names=names_g,
        group=AbelianQuotient(n, relations),
        xgens=xgens,
        chi=chi,
        comm=comm,
        relations=pres_relations,
        params={"orders": list(orders), "group_orders": list(group_orders)},
    )
    _character_warnings(pres)
    return pres


def _build_dq(family: str, m: int, n: int, mode: QMode,
              coproduct_variant: str = "plus", partial_caps: bool | None = None) -> HopfPresentation:
    """The pointed-Hopf cover of the derivative algebra: grading twists,
    exterior involutions and twist labels as group-likes over the derivative
    Nichols algebra, with the label-dependency relations."""
    shape = Shape(m, n)
    size = m + n
    restricted = family == "dq-restricted"
    if restricted and (mode.is_generic or char_of(mode).ell < 3):
        raise ValueError("the restricted cover needs char(q) = ell >= 3")
    if coproduct_variant not in ("plus", "minus"):
        raise ValueError("coproduct_variant must be 'plus' or 'minus'")
    # group generators: sigma_1.. , tau_(m+1).., Theta_1..
    names_g = [f"s{i}" for i in range(1, size + 1)]
    names_g += [f"t{j}" for j in range(m + 1, size + 1)]
    names_g += [f"Th{i}" for i in range(1, size + 1)]
    rank = 2 * size + n

    def sig(i):  # 1-based
        return i - 1

    def ta(j):
        return size + (j - m - 1)

    def th(i):
        return size + n + i - 1

    relations: list[tuple[int, ...]] = []
    for j in range(m + 1, size + 1):
        rel = [0] * rank
        rel[ta(j)] = 2
        relations.append(tuple(rel))
    # twist-label dependency on the simple roots
    for i in range(1, size):
        rel = [0] * rank
        rel[th(i + 1)] = 1
        rel[th(i)] = -1
        rel[sig(i)] -= 1
        rel[sig(i + 1)] -= 1
        if i == m:
            for j in range(m + 1, size + 1):
                rel[ta(j)] -= 1
        relations.append(tuple(rel))
    gen_orders: dict[int, int] = {}
    if restricted:
        profile = char_of(mode)
        ell = profile.ell
        for i in range(1, size + 1):
            # order of the eigenvalue system: the exterior directions carry
            # base -q, hence the doubled order at an odd root
            if profile.parity is QParity.ODD_ROOT:
                o = ell if i <= m else 2 * ell
            else:
                o = 2 * ell
            for col in (sig(i), th(i)):
                rel = [0] * rank
                rel[col] = o
                relations.append(tuple(rel))
                gen_orders[col] = o

    zero_g = (0,) * rank

    def gvec(*cols_exps) -> tuple[int, ...]:
        v = [0] * rank
        for col, e in cols_exps:
            v[col] += e
        return tuple(v)

    minus_variant = coproduct_variant == "minus"
    if partial_caps is None:
        use_caps = restricted
    else:
        use_caps = partial_caps and not mode.is_generic
    xgens = []
    for i in range(1, size + 1):
        if i <= m:
            cap = char_of(mode).ell if use_caps else None
            gR = gvec((sig(i), 1 if minus_variant else -1))
            gL = gvec((th(i), -1), (sig(i), -1 if minus_variant else 1))
        else:
            cap = 2
            gR = zero_g
            gL = gvec((th(i), -1), (ta(i), 1))
        xgens.append(SkewGen(f"d{i}", cap, gL, gR))

    one = mode.one()
    chi = [[one for _ in range(size)] for _ in range(rank)]
    comm = [[one for _ in range(size)] for _ in range(size)]
    for i in range(1, size + 1):  # x-gen d_i
        for g in range(1, size + 1):
            c = mode.q_power(-1) if g == i else one
            if g == i and i > m:
                c = -c
            chi[sig(g)][i - 1] = c
            chi[th(g)][i - 1] = _theta_gens(mode, shape, i, g)
        for j in range(m + 1, size + 1):
            chi[ta(j)][i - 1] = mode.scalar(-1 if j == i else 1)
        for j in range(1, size + 1):
            if i != j:
                comm[i - 1][j - 1] = _theta_gens(mode, shape, i, j)

    pres_relations: list[tuple[str, list[tuple[ScalarQ, Word]]]] = []
    for i in range(1, size):
        lhs: Word = (("g", th(i + 1)),)
        rhs: list[tuple[str, int]] = [("g", th(i)), ("g", sig(i)), ("g", sig(i + 1))]
        if i == m:
            rhs += [("g", ta(j)) for j in range(m + 1, size + 1)]
        pres_relations.append(
            (f"Th{i + 1} = Th{i} s{i} s{i + 1}" + (" tau" if i == m else ""),
             [(one, lhs), (-one, tuple(rhs))])
        )
    for col, o in gen_orders.items():
        pres_relations.append(
            (f"{names_g[col]}^{o} = 1", [(one, tuple([("g", col)] * o)), (-one, ())])
        )
    for j in range(m + 1, size + 1):
        pres_relations.append(
            (f"t{j}^2 = 1", [(one, (("g", ta(j)), ("g", ta(j)))), (-one, ())])
        )
    for gi in range(rank):
        for xj in range(size):
            pres_relations.append(
                (f"{names_g[gi]} d{xj + 1} conjugation",
                 [(one, (("g", gi), ("x", xj))), (-chi[gi][xj], (("x", xj), ("g", gi)))])
            )
    for i in range(size):
        for j in range(i):
            pres_relations.append(
                (f"d{i + 1} d{j + 1} twisted commutation",
                 [(one, (("x", i), ("x", j))), (-comm[i][j], (("x", j), ("x", i)))])
            )
        cap = xgens[i].cap
        if cap is not None:
            pres_relations.append(
                (f"d{i + 1}^{cap} = 0", [(one, tuple([("x", i)] * cap))])
            )

    pres = HopfPresentation(
        family=family,
        mode=mode,
        group_names=names_g,
        group=AbelianQuotient(rank, relations),
        xgens=xgens,
        chi=chi,
        comm=comm,
        relations=pres_relations,
        params={"m": m, "n": n, "coproduct_variant": coproduct_variant},
    )
    _character_warnings(pres)
    return pres


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------


@dataclass
class HopfCheck:
    name: str
    passed: bool
    detail: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class HopfReport:
    presentation: HopfPresentation
    depth: str
    checks: list[HopfCheck]
    probes: list[HopfCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "family": self.presentation.family,
            "params": self.presentation.params,
            "dimension": _dim_json(pbw_dim(self.presentation)),
            "depth": self.depth,
            "passed": self.passed,
            "warnings": self.presentation.warnings,
            "checks": [c.to_json() for c in self.checks],
            "probes": [c.to_json() for c in self.probes],
        }


def verify_hopf(pres: HopfPresentation, depth: str = "generators") -> HopfReport:
    """Check the Hopf axioms: the coproduct and counit respect every defining
    relation (inside the tensor-square normal-form algebra), coassociativity,
    the counit laws and the antipode convolution identity -- on generators, or
    on every normal-form basis element when depth='exhaustive'."""
    if depth not in ("generators", "exhaustive"):
        raise ValueError("depth must be 'generators' or 'exhaustive'")
    mode = pres.mode
    checks: list[HopfCheck] = []

    for name, terms in pres.relations:
        dsum: dict = {}
        esum = mode.zero()
        for coeff, word in terms:
            dword = pres.tensor_unit(2)
            eword = mode.one()
            for kind, i in word:
                if kind == "x":
                    dword = pres.tensor_mul(dword, pres.delta_gen_x(i), 2)
                    eword = mode.zero()
                elif kind == "g":
                    dg = pres.delta(pres.gen_g(i))
                    dword = pres.tensor_mul(dword, dg, 2)
                else:
                    dg = pres.delta(pres.gen_g(i, -1))
                    dword = pres.tensor_mul(dword, dg, 2)
            for k, c in dword.items():
                s = dsum.get(k)
                s = c * coeff if s is None else s + c * coeff
                if s.is_zero():
                    dsum.pop(k, None)
                else:
                    dsum[k] = s
            esum = esum + eword * coeff
        checks.append(
            HopfCheck(f"Delta respects: {name}", not dsum,
                      None if not dsum else f"residual {len(dsum)} tensor terms")
        )
        checks.append(HopfCheck(f"counit respects: {name}", esum.is_zero()))

    if depth == "exhaustive":
        keys = pres.basis_keys()
        elements = [({k: mode.one()}, pres.render_key(k)) for k in keys]
    else:
        elements = [(pres.gen_x(i), pres.xgens[i].name) for i in range(len(pres.xgens))]
        elements += [(pres.gen_g(i), pres.group_names[i]) for i in range(pres.group.rank)]

    unit = pres.unit()
    for el, name in elements:
        d = pres.delta(el)
        lhs = pres.delta_leg(d, 0, 2)
        rhs = pres.delta_leg(d, 1, 2)
        checks.append(HopfCheck(f"coassociativity on {name}", lhs == rhs))
        left = pres.zero()
        right = pres.zero()
        for (ka, kb), c in d.items():
            left = pres.add(left, pres.scale({ka: mode.one()}, c * pres.counit_key(kb)))
            right = pres.add(right, pres.scale({kb: mode.one()}, c * pres.counit_key(ka)))
        checks.append(HopfCheck(f"counit law on {name}", left == el and right == el))
        conv_l = pres.zero()
        conv_r = pres.zero()
        for (ka, kb), c in d.items():
            conv_l = pres.add(
                conv_l, pres.scale(pres.mul(pres.antipode({ka: mode.one()}), {kb: mode.one()}), c)
            )
            conv_r = pres.add(
                conv_r, pres.scale(pres.mul({ka: mode.one()}, pres.antipode({kb: mode.one()})), c)
            )
        target = pres.scale(unit, pres.counit(el))
        checks.append(
            HopfCheck(
                f"antipode convolution on {name}", conv_l == target and conv_r == target
            )
        )

    # associativity probe over generator triples: a diagnostic beyond the
    # axiom checks above, surfacing presentation-level inconsistencies such as
    # group orders smaller than the orders of their conjugation characters
    gens = [pres.gen_x(i) for i in range(len(pres.xgens))]
    gens += [pres.gen_g(i) for i in range(pres.group.rank)]
    assoc_ok = True
    for a, b, c in itertools.product(gens, repeat=3):
        if pres.mul(pres.mul(a, b), c) != pres.mul(a, pres.mul(b, c)):
            assoc_ok = False
            break
    probes = [
        HopfCheck(
            "normal-form product associative on generator triples",
            assoc_ok,
            None if assoc_ok else "the stated group orders truncate the conjugation characters",
        )
    ]
    return HopfReport(pres, depth, checks, probes)


# ---------------------------------------------------------------------------
# divided-power coproduct expansions
# ---------------------------------------------------------------------------


def divided_power_coproduct_check(pres: HopfPresentation, i: int, p_max: int) -> HopfReport:
    """Binomial expansions of Delta(x_i^p) and the threshold primitivity.

    For the one-sided coproduct Delta(x) = x (x) 1 + K (x) x with
    K x K^-1 = c x the expansion reads
    Delta(x^p) = sum_r C_c(p, r) x^(p-r) K^r (x) x^r with one-sided binomials
    at base c; the coordinate bosonizations have c = q and the divided-power
    bosonization c = q^2, where the base-q^2 binomial equals the balanced
    binomial times the explicit q-power of the pairwise-swap count.  At
    p = ord(c) the middle terms vanish and the power is primitive (when the
    group order closes).  Two-sided coproducts (the derivative cover) get the
    threshold check only.
    """
    mode = pres.mode
    checks: list[HopfCheck] = []
    xg = pres.xgens[i]
    zero_x = (0,) * len(pres.xgens)
    identity = pres.group.identity()
    one_sided = pres.group.reduce(xg.gR) == identity
    chi_L = pres.chi_of(pres.group.reduce(xg.gL), i)
    chi_R = pres.chi_of(pres.group.reduce(xg.gR), i)
    c_swap = chi_L * chi_R.inverse()

    def delta_power(p: int) -> dict:
        out = pres.tensor_unit(2)
        for _ in range(p):
            out = pres.tensor_mul(out, pres.delta_gen_x(i), 2)
        return out

    def x_power_leg(p: int) -> tuple[int, ...]:
        xv = list(zero_x)
        xv[i] = p
        return tuple(xv)

    if one_sided:
        top = p_max if xg.cap is None else min(p_max, xg.cap)
        for p in range(0, top + 1):
            lhs = delta_power(p)
            rhs: dict = {}
            for r in range(p + 1):
                coeff = _binom_at_base(mode, chi_L, p, r)
                if coeff.is_zero():
                    continue
                if xg.cap is not None and (p - r >= xg.cap or r >= xg.cap):
                    continue
                key = (
                    (x_power_leg(p - r), pres.group.power(xg.gL, r)),
                    (x_power_leg(r), identity),
                )
                rhs[key] = coeff
            checks.append(
                HopfCheck(
                    f"Delta({xg.name}^{p}) matches the one-sided binomial expansion",
                    lhs == rhs,
                    None if lhs == rhs else f"p={p}",
                )
            )
        # the displayed coefficient forms for the two diagonal bases
        if chi_L == mode.q():
            ok = all(
                _binom_at_base(mode, chi_L, p, r) == q_binom_unbalanced(p, r, mode)
                for p in range(0, min(p_max, 8) + 1)
                for r in range(p + 1)
            )
            checks.append(HopfCheck("base-q coefficients are the one-sided q-binomials", ok))
        if chi_L == mode.q_power(2):
            ok = True
            for p in range(0, min(p_max, 8) + 1):
                for r in range(p + 1):
                    swaps = math.comb(p, 2) - math.comb(r, 2) - math.comb(p - r, 2)
                    want = q_binom(p, r, mode) * mode.q_power(swaps)
                    if _binom_at_base(mode, chi_L, p, r) != want:
                        ok = False
            checks.append(
                HopfCheck(
                    "base-q^2 coefficients equal balanced binomials times the swap q-power",
                    ok,
                )
            )

    order = _multiplicative_order(mode, c_swap)
    if order is not None and order > 1 and (xg.cap is None or order < xg.cap):
        p = order
        lhs = delta_power(p)
        left_g = pres.group.power(xg.gL, p)
        right_g = pres.group.power(xg.gR, p)
        expected = {
            ((x_power_leg(p), identity), (zero_x, right_g)): mode.one(),
            ((zero_x, left_g), (x_power_leg(p), identity)): mode.one(),
        }
        primitive = left_g == identity and right_g == identity
        checks.append(
            HopfCheck(
                f"Delta({xg.name}^{p}) = {xg.name}^{p} (x) 1 + 1 (x) {xg.name}^{p} "
                f"at the threshold p = {p}",
                lhs == expected and primitive,
                None if primitive else "group part of the coproduct does not close",
            )
        )
    return HopfReport(pres, f"divided-power {xg.name}", checks)


def _binom_at_base(mode: QMode, base: ScalarQ, p: int, r: int) -> ScalarQ:
    """One-sided binomial coefficient at an arbitrary invertible base."""
    # Pascal recursion C(p, r) = C(p-1, r-1) + base^r C(p-1, r)
    row = [mode.one()]
    for _ in range(p):
        new = [mode.one()]
        for rr in range(1, len(row)):
            new.append(row[rr - 1] + base**rr * row[rr])
        new.append(mode.one())
        row = new
    return row[r] if 0 <= r <= p else mode.zero()


def _multiplicative_order(mode: QMode, val: ScalarQ, bound: int = 64) -> int | None:
    acc = mode.one()
    for k in range(1, bound + 1):
        acc = acc * val
        if acc == mode.one():
            return k
    return None


def presentation_diff(a: HopfPresentation, b: HopfPresentation) -> dict:
    """Structural diff of two presentations over the same ranks: which
    conjugation/commutation scalars differ."""
    diffs = []
    for gi in range(min(len(a.chi), len(b.chi))):
        for xj in range(min(len(a.chi[gi]), len(b.chi[gi]))):
            if a.chi[gi][xj] != b.chi[gi][xj]:
                diffs.append(
                    {
                        "kind": "conjugation",
                        "group_gen": a.group_names[gi],
                        "x_gen": a.xgens[xj].name,
                        "left": str(a.chi[gi][xj]),
                        "right": str(b.chi[gi][xj]),
                    }
                )
    for i in range(min(len(a.comm), len(b.comm))):
        for j in range(min(len(a.comm[i]), len(b.comm[i]))):
            if a.comm[i][j] != b.comm[i][j]:
                diffs.append(
                    {
                        "kind": "commutation",
                        "pair": [a.xgens[i].name, a.xgens[j].name],
                        "left": str(a.comm[i][j]),
                        "right": str(b.comm[i][j]),
                    }
                )
    return {
        "x_dims_equal": a.x_dim() == b.x_dim(),
        "group_orders_equal": a.group.order() == b.group.order(),
        "differences": diffs,
    }
