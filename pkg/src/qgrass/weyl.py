"""Quantum differential operators, relation verification, smash normal forms.

Atomic operators send basis monomials to scalar multiples of basis monomials:

* ``partial(i)`` -- the twisted derivative in direction i,
* ``mult_x(i)`` -- left multiplication by the i-th coordinate,
* ``mult_x_divpow(i)`` -- left multiplication by the ell-th divided power of a
  bosonic coordinate (root-of-unity modes only),
* ``sigma(i, e)``, ``tau(i)``, ``theta_op(label)``, ``parity()`` -- diagonal
  twist automorphisms.

An OperatorWord is a scalar times a composition of atoms (rightmost acts
first).  Relation suites instantiate the defining relation systems of the
derivative algebra, its pointed-Hopf cover, and the quantum Weyl algebra of
(m|n)-type as operator identities, decided by exhaustive evaluation on graded
bases up to a degree bound; the identities are degree-homogeneous, so this is
sound for the degrees checked.

The smash product (polynomial part) # (group part) # (derivative part) gets a
normal form by left-to-right absorption of generators; its induced product is
checked against operator composition (faithfulness) in the test suite.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Sequence

from .indices import MultiIndex, Shape, theta
from .qarith import QParity, ScalarQ, char_of, q_factorial
from .superspaces import (
    Family,
    SpaceSpec,
    SuperVector,
    basis_of_degree,
    make_space,
    monomial_product,
    multiply,
    top_degree,
)

__all__ = [
    "AtomKind",
    "Atom",
    "InvalidAtomError",
    "partial",
    "mult_x",
    "mult_x_divpow",
    "sigma",
    "tau",
    "theta_op",
    "parity",
    "OperatorWord",
    "apply_word",
    "apply_expr",
    "operators_equal",
    "EqualityResult",
    "Relation",
    "PairCheck",
    "TripleCheck",
    "CheckResult",
    "RelationReport",
    "SUITE_NAMES",
    "build_suite",
    "verify_relation_suite",
    "SmashElement",
    "smash_normal_form",
    "smash_mul",
]


class InvalidAtomError(ValueError):
    pass


class AtomKind(Enum):
    PARTIAL = "d"
    MULT_X = "x"
    MULT_X_DIV_POW = "X"
    SIGMA = "s"
    TAU = "t"
    THETA = "Th"
    PARITY = "par"


@dataclass(frozen=True)
class Atom:
    kind: AtomKind
    pos: int = 0
    exp: int = 1
    label: MultiIndex | None = None

    def render(self) -> str:
        if self.kind is AtomKind.THETA:
            return f"Th{self.label}"
        if self.kind is AtomKind.PARITY:
            return "par"
        if self.kind is AtomKind.SIGMA and self.exp == -1:
            return f"s{self.pos}^-1"
        return f"{self.kind.value}{self.pos}"


def partial(i: int) -> Atom:
    return Atom(AtomKind.PARTIAL, i)


def mult_x(i: int) -> Atom:
    return Atom(AtomKind.MULT_X, i)


def mult_x_divpow(i: int) -> Atom:
    return Atom(AtomKind.MULT_X_DIV_POW, i)


def sigma(i: int, e: int = 1) -> Atom:
    if e not in (1, -1):
        raise ValueError("sigma exponent must be +-1")
    return Atom(AtomKind.SIGMA, i, e)


def tau(i: int) -> Atom:
    return Atom(AtomKind.TAU, i)


def theta_op(label: MultiIndex) -> Atom:
    return Atom(AtomKind.THETA, label=label)


def parity() -> Atom:
    return Atom(AtomKind.PARITY)


_POLY_SIDE = (Family.OMEGA, Family.OMEGA_RESTRICTED)
_DUAL_SIDE = (Family.DUAL, Family.DUAL_RESTRICTED)


def _is_fermionic(space: SpaceSpec, pos: int) -> bool:
    return space.shape.is_fermionic_pos(pos)


def atom_degree(space: SpaceSpec, atom: Atom) -> int:
    if atom.kind is AtomKind.PARTIAL:
        return -1
    if atom.kind is AtomKind.MULT_X:
        return 1
    if atom.kind is AtomKind.MULT_X_DIV_POW:
        return char_of(space.mode).ell
    return 0


def apply_atom(space: SpaceSpec, atom: Atom, idx: MultiIndex) -> tuple[ScalarQ, MultiIndex] | None:
    """One atomic operator on one basis monomial; None when the image is 0."""
    mode = space.mode
    kind = atom.kind
    pos = atom.pos
    entries = idx.entries

    if kind is AtomKind.SIGMA:
        v = entries[pos - 1]
        if _is_fermionic(space, pos):
            if space.family in _POLY_SIDE:
                coeff = mode.minus_q_power(atom.exp * v)
            else:
                coeff = mode.q_power(atom.exp * v)
        else:
            if space.family in _POLY_SIDE or space.family is Family.AFFINE:
                coeff = mode.q_power(atom.exp * v)
            else:
                coeff = mode.q_power(-atom.exp * v)
        return coeff, idx

    if kind is AtomKind.TAU:
        if space.family not in _POLY_SIDE or not _is_fermionic(space, pos):
            raise InvalidAtomError("tau acts on exterior directions of the polynomial side")
        v = entries[pos - 1]
        return (mode.scalar(-1 if v % 2 else 1)), idx

    if kind is AtomKind.THETA:
        if space.family not in _POLY_SIDE:
            raise InvalidAtomError("twist labels act on the polynomial side")
        return theta(atom.label, idx, mode), idx

    if kind is AtomKind.PARITY:
        if space.family is Family.AFFINE:
            raise InvalidAtomError("parity operator undefined on the affine superspace")
        dual = space.family in _DUAL_SIDE
        w = idx.bosonic_degree() if dual else idx.fermionic_degree()
        return mode.scalar(-1 if w % 2 else 1), idx

    if kind is AtomKind.MULT_X_DIV_POW:
        if space.family is not Family.OMEGA or mode.is_generic:
            raise InvalidAtomError("divided-power multiplication needs the unrestricted "
                                   "Grassmann space at a root of unity")
        if _is_fermionic(space, pos):
            raise InvalidAtomError("divided-power multiplication is bosonic")
        ell = char_of(mode).ell
        gen_label = MultiIndex.basis_vector(space.shape, pos, ell)
        return monomial_product(space, gen_label, idx)

    fermionic = _is_fermionic(space, pos)
    poly_side = space.family in _POLY_SIDE or space.family is Family.AFFINE

    if kind is AtomKind.MULT_X:
        gen_label = MultiIndex.basis_vector(space.shape, pos)
        return monomial_product(space, gen_label, idx)

    if kind is AtomKind.PARTIAL:
        v = entries[pos - 1]
        if v == 0:
            return None
        if space.family is Family.AFFINE:
            raise InvalidAtomError("derivatives act on the Grassmann-type spaces")
        prefix = idx.prefix_sum(pos)
        target = idx.shifted(pos, -1)
        if poly_side:
            if fermionic:
                fer_prefix = sum(
                    e for p, e in enumerate(entries[: pos - 1], start=1)
                    if _is_fermionic(space, p)
                )
                coeff = mode.q_power(-prefix)
                if fer_prefix % 2:
                    coeff = -coeff
            else:
                coeff = mode.q_power(-prefix)
            return coeff, target
        # dual side
        if fermionic:
            coeff = mode.minus_q_power(prefix)
        else:
            fer_deg = idx.fermionic_degree()
            coeff = mode.q_power(prefix)
            if fer_deg % 2:
                coeff = -coeff
        return coeff, target

    raise InvalidAtomError(f"unknown atom {atom}")


@dataclass(frozen=True)
class OperatorWord:
    """scalar * (atoms[0] o atoms[1] o ... ), the rightmost atom acting first."""

    space: SpaceSpec
    atoms: tuple[Atom, ...]
    scalar: ScalarQ | None = None

    def coeff(self) -> ScalarQ:
        return self.scalar if self.scalar is not None else self.space.mode.one()

    def scaled(self, c: ScalarQ) -> "OperatorWord":
        return OperatorWord(self.space, self.atoms, self.coeff() * c)

    def then(self, other: "OperatorWord") -> "OperatorWord":
        """self o other (other acts first)."""
        if self.space != other.space:
            raise InvalidAtomError("operator words on different spaces")
        return OperatorWord(self.space, self.atoms + other.atoms, self.coeff() * other.coeff())

    def power(self, k: int) -> "OperatorWord":
        out = OperatorWord(self.space, ())
        for _ in range(k):
            out = out.then(self)
        return out

    def net_degree(self) -> int:
        return sum(atom_degree(self.space, a) for a in self.atoms)

    def render(self) -> str:
        body = " ".join(a.render() for a in self.atoms) or "1"
        return body

    def apply_to_index(self, idx: MultiIndex) -> tuple[ScalarQ, MultiIndex] | None:
        coeff = self.coeff()
        cur = idx
        for atom in reversed(self.atoms):
            hit = apply_atom(self.space, atom, cur)
            if hit is None:
                return None
            c, cur = hit
            coeff = coeff * c
        if coeff.is_zero():
            return None
        return coeff, cur


def apply_word(w: OperatorWord, u: SuperVector) -> SuperVector:
    if w.space != u.space:
        raise InvalidAtomError("operator and vector live on different spaces")
    out: dict[MultiIndex, ScalarQ] = {}
    for idx, c in u.terms.items():
        hit = w.apply_to_index(idx)
        if hit is None:
            continue
        coeff, target = hit
        coeff = coeff * c
        s = out.get(target)
        s = coeff if s is None else s + coeff
        if s.is_zero():
            out.pop(target, None)
        else:
            out[target] = s
    res = SuperVector.__new__(SuperVector)
    res.space, res.terms = u.space, out
    return res


Expr = Sequence[OperatorWord]


def _as_expr(x: OperatorWord | Expr) -> tuple[OperatorWord, ...]:
    if isinstance(x, OperatorWord):
        return (x,)
    return tuple(x)


def apply_expr(expr: OperatorWord | Expr, u: SuperVector) -> SuperVector:
    out = SuperVector.zero(u.space)
    for w in _as_expr(expr):
        out = out + apply_word(w, u)
    return out


@dataclass
class EqualityResult:
    equal: bool
    witness: dict | None = None


def _degree_range(space: SpaceSpec, t_max: int) -> range:
    top = top_degree(space)
    if top is not None:
        t_max = min(t_max, top)
    return range(t_max + 1)


def operators_equal(wA: OperatorWord | Expr, wB: OperatorWord | Expr, t_max: int) -> EqualityResult:
    """Exhaustively compare two operator expressions on all basis monomials of
    degree <= t_max; on failure reports the first witness monomial."""
    exprA, exprB = _as_expr(wA), _as_expr(wB)
    space = (exprA or exprB)[0].space
    for t in _degree_range(space, t_max):
        for idx in basis_of_degree(space, t):
            u = SuperVector.monomial(space, idx)
            va = apply_expr(exprA, u)
            vb = apply_expr(exprB, u)
            if va != vb:
                return EqualityResult(
                    False,
                    {
                        "monomial": str(idx),
                        "lhs_image": va.to_json(),
                        "rhs_image": vb.to_json(),
                    },
                )
    return EqualityResult(True)


# ---------------------------------------------------------------------------
# relation checks and suites
# ---------------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Relation:
    """Operator-expression identity lhs = rhs, decided on its own space."""

    name: str
    lhs: tuple[OperatorWord, ...]
    rhs: tuple[OperatorWord, ...]

    def run(self, t_max: int) -> CheckResult:
        res = operators_equal(self.lhs, self.rhs, t_max)
        return CheckResult(self.name, res.equal, res.witness)


@dataclass
class PairCheck:
    """Identity quantified over ordered pairs of basis monomials."""

    name: str
    space: SpaceSpec
    fn: Callable[[SuperVector, SuperVector], tuple[SuperVector, SuperVector]]

    def run(self, t_max: int) -> CheckResult:
        space = self.space
        for t1 in _degree_range(space, t_max):
            for t2 in _degree_range(space, t_max - t1):
                for ia in basis_of_degree(space, t1):
                    u = SuperVector.monomial(space, ia)
                    for ib in basis_of_degree(space, t2):
                        v = SuperVector.monomial(space, ib)
                        lhs, rhs = self.fn(u, v)
                        if lhs != rhs:
                            return CheckResult(
                                self.name,
                                False,
                                {"pair": [str(ia), str(ib)],
                                 "lhs": lhs.to_json(), "rhs": rhs.to_json()},
                            )
        return CheckResult(self.name, True)


@dataclass
class TripleCheck:
    """Identity quantified over triples of basis monomials (degree sum bound)."""

    name: str
    space: SpaceSpec
    fn: Callable[[SuperVector, SuperVector, SuperVector], tuple[SuperVector, SuperVector]]

    def run(self, t_max: int) -> CheckResult:
        space = self.space
        monos = []
        for t in _degree_range(space, t_max):
            monos.extend(basis_of_degree(space, t))
        for ia, ib, ic in itertools.product(monos, repeat=3):
            if ia.degree() + ib.degree() + ic.degree() > t_max:
                continue
            u, v, w = (SuperVector.monomial(space, i) for i in (ia, ib, ic))
            lhs, rhs = self.fn(u, v, w)
            if lhs != rhs:
                return CheckResult(
                    self.name,
                    False,
                    {"triple": [str(ia), str(ib), str(ic)],
                     "lhs": lhs.to_json(), "rhs": rhs.to_json()},
                )
        return CheckResult(self.name, True)


@dataclass
class RelationReport:
    suite: str
    space: SpaceSpec
    t_max: int
    results: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        params = self.space.describe()
        params["t_max"] = self.t_max
        return {
            "suite": self.suite,
            "params": params,
            "passed": self.passed,
            "relations": [r.to_json() for r in self.results],
        }


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("QGRASS_WORKERS", "1")))
    except ValueError:
        return 1


def run_checks(suite: str, space: SpaceSpec, checks: list, t_max: int) -> RelationReport:
    workers = _worker_count()
    if workers > 1 and len(checks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: c.run(t_max), checks))
    else:
        results = [c.run(t_max) for c in checks]
    return RelationReport(suite, space, t_max, results)


# ---- generator shorthand ---------------------------------------------------


def _w(space: SpaceSpec, *atoms: Atom, coeff: ScalarQ | None = None) -> OperatorWord:
    return OperatorWord(space, tuple(atoms), coeff)


def _gen_label(space: SpaceSpec, i: int, value: int = 1) -> MultiIndex:
    return MultiIndex.basis_vector(space.shape, i, value)


def _parity_word(space: SpaceSpec) -> OperatorWord:
    """The global parity as a product of the order-2 exterior twists."""
    atoms = tuple(tau(j) for j in space.shape.fermionic_positions())
    return _w(space, *atoms)


def _divpow_mult_word(space: SpaceSpec, i: int, power: int) -> OperatorWord:
    """Left multiplication by the divided power x_i^(power) for power < ell."""
    coeff = q_factorial(power, space.mode).inverse()
    return _w(space, *([mult_x(i)] * power), coeff=coeff)


def _theta_of(space: SpaceSpec, i: int, j: int) -> ScalarQ:
    return theta(_gen_label(space, i), _gen_label(space, j), space.mode)


def _sigma_x_factor(space: SpaceSpec, i: int, j: int) -> ScalarQ:
    # conjugation of the j-th coordinate by sigma_i; the exterior directions
    # carry base -q (their twist eigenvalue), the bosonic ones base q
    if i != j:
        return space.mode.one()
    if _is_fermionic(space, i):
        return space.mode.minus_q_power(1)
    return space.mode.q()


# ---- the suites ------------------------------------------------------------


SUITE_NAMES = (
    "partials",
    "dq",
    "weyl-generic",
    "weyl-odd-root",
    "weyl-even-root",
    "leibniz",
)


def _suite_partials(space: SpaceSpec) -> list:
    """Defining relations of the derivative algebra: twisted commutation of
    the partials plus square-zero exterior derivatives."""
    checks: list = []
    size = space.shape.size
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            if i == j:
                continue
            c = _theta_of(space, i, j)
            checks.append(
                Relation(
                    f"d{i} d{j} = theta(e{i},e{j}) d{j} d{i}",
                    (_w(space, partial(i), partial(j)),),
                    (_w(space, partial(j), partial(i), coeff=c),),
                )
            )
    for j in space.shape.fermionic_positions():
        checks.append(
            Relation(f"d{j}^2 = 0", (_w(space, partial(j), partial(j)),), ())
        )
    return checks


def _suite_dq(space: SpaceSpec) -> list:
    """Relations of the pointed-Hopf cover of the derivative algebra: group
    commutations, the label dependency identities, the conjugation table, the
    twisted commutation of the partials."""
    mode = space.mode
    checks: list = []
    size = space.shape.size
    fermi = space.shape.fermionic_positions()
    m = space.shape.m

    for i in range(1, size + 1):
        checks.append(
            Relation(
                f"s{i} s{i}^-1 = 1",
                (_w(space, sigma(i), sigma(i, -1)),),
                (_w(space),),
            )
        )
    for i, j in itertools.combinations(range(1, size + 1), 2):
        checks.append(
            Relation(
                f"s{i} s{j} = s{j} s{i}",
                (_w(space, sigma(i), sigma(j)),),
                (_w(space, sigma(j), sigma(i)),),
            )
        )
    for j in fermi:
        checks.append(Relation(f"t{j}^2 = 1", (_w(space, tau(j), tau(j)),), (_w(space),)))
        for i in range(1, size + 1):
            checks.append(
                Relation(
                    f"s{i} t{j} = t{j} s{i}",
                    (_w(space, sigma(i), tau(j)),),
                    (_w(space, tau(j), sigma(i)),),
                )
            )
    for i in range(1, size + 1):
        e_i = _gen_label(space, i)
        checks.append(
            Relation(
                f"Th(e{i}) Th(-e{i}) = 1",
                (_w(space, theta_op(e_i), theta_op(-e_i)),),
                (_w(space),),
            )
        )
        for j in range(i + 1, size + 1):
            e_j = _gen_label(space, j)
            checks.append(
                Relation(
                    f"Th(e{i}) Th(e{j}) = Th(e{i}+e{j})",
                    (_w(space, theta_op(e_i), theta_op(e_j)),),
                    (_w(space, theta_op(e_i + e_j)),),
                )
            )
        for j in range(1, size + 1):
            checks.append(
                Relation(
                    f"s{j} Th(e{i}) = Th(e{i}) s{j}",
                    (_w(space, sigma(j), theta_op(e_i)),),
                    (_w(space, theta_op(e_i), sigma(j)),),
                )
            )
    # dependency of the simple-root twist labels on the grading twists
    for i in range(1, size):
        lab = _gen_label(space, i + 1) - _gen_label(space, i)
        if i == m:
            rhs = _parity_word(space).then(_w(space, sigma(m), sigma(m + 1)))
            name = f"Th(-e{m}+e{m+1}) = parity s{m} s{m+1}"
        else:
            rhs = _w(space, sigma(i), sigma(i + 1))
            name = f"Th(-e{i}+e{i+1}) = s{i} s{i+1}"
        checks.append(Relation(name, (_w(space, theta_op(lab)),), (rhs,)))
    # conjugation of the partials by the group part
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            e_j = _gen_label(space, j)
            c = _theta_of(space, i, j)
            checks.append(
                Relation(
                    f"Th(e{j}) d{i} Th(-e{j}) = theta(e{i},e{j}) d{i}",
                    (_w(space, theta_op(e_j), partial(i), theta_op(-e_j)),),
                    (_w(space, partial(i), coeff=c),),
                )
            )
            if i == j:
                c2 = mode.q_power(-1)
                if _is_fermionic(space, i):
                    c2 = -c2
            else:
                c2 = mode.one()
            checks.append(
                Relation(
                    f"s{j} d{i} s{j}^-1 = (-1)^(par) q^-delta d{i}",
                    (_w(space, sigma(j), partial(i), sigma(j, -1)),),
                    (_w(space, partial(i), coeff=c2),),
                )
            )
        for j in fermi:
            c3 = mode.scalar(-1 if i == j else 1)
            checks.append(
                Relation(
                    f"t{j} d{i} = (-1)^delta d{i} t{j}",
                    (_w(space, tau(j), partial(i)),),
                    (_w(space, partial(i), tau(j), coeff=c3),),
                )
            )
    checks.extend(_suite_partials(space))
    return checks


def _cross_relations(space: SpaceSpec) -> list:
    """Cross relations between coordinates, twists and derivatives."""
    mode = space.mode
    checks: list = []
    size = space.shape.size
    fermi = set(space.shape.fermionic_positions())

    for i in range(1, size + 1):
        e_i = _gen_label(space, i)
        for j in range(1, size + 1):
            c = _theta_of(space, i, j)
            checks.append(
                Relation(
                    f"Th(e{i}) x{j} Th(-e{i}) = theta(e{i},e{j}) x{j}",
                    (_w(space, theta_op(e_i), mult_x(j), theta_op(-e_i)),),
                    (_w(space, mult_x(j), coeff=c),),
                )
            )
            checks.append(
                Relation(
                    f"s{i} x{j} s{i}^-1 = q^delta x{j} (base -q on exterior directions)",
                    (_w(space, sigma(i), mult_x(j), sigma(i, -1)),),
                    (_w(space, mult_x(j), coeff=_sigma_x_factor(space, i, j)),),
                )
            )
        if i in fermi:
            for j in range(1, size + 1):
                c = mode.scalar(-1 if i == j else 1)
                checks.append(
                    Relation(
                        f"t{i} x{j} t{i} = (-1)^delta x{j}",
                        (_w(space, tau(i), mult_x(j), tau(i)),),
                        (_w(space, mult_x(j), coeff=c),),
                    )
                )
    for i in range(1, size + 1):
        if i in fermi:
            checks.append(
                Relation(
                    f"d{i} x{i} + x{i} d{i} = 1",
                    (_w(space, partial(i), mult_x(i)), _w(space, mult_x(i), partial(i))),
                    (_w(space),),
                )
            )
            checks.append(Relation(f"x{i}^2 = 0", (_w(space, mult_x(i), mult_x(i)),), ()))
        else:
            checks.append(
                Relation(
                    f"d{i} x{i} - q x{i} d{i} = s{i}^-1",
                    (
                        _w(space, partial(i), mult_x(i)),
                        _w(space, mult_x(i), partial(i), coeff=-mode.q()),
                    ),
                    (_w(space, sigma(i, -1)),),
                )
            )
        for j in range(1, size + 1):
            if i == j:
                continue
            c = _theta_of(space, j, i)
            checks.append(
                Relation(
                    f"d{i} x{j} = theta(e{j},e{i}) x{j} d{i}",
                    (_w(space, partial(i), mult_x(j)),),
                    (_w(space, mult_x(j), partial(i), coeff=c),),
                )
            )
            c2 = _theta_of(space, i, j)
            checks.append(
                Relation(
                    f"x{i} x{j} = theta(e{i},e{j}) x{j} x{i}",
                    (_w(space, mult_x(i), mult_x(j)),),
                    (_w(space, mult_x(j), mult_x(i), coeff=c2),),
                )
            )
    return checks


def _suite_weyl_generic(space: SpaceSpec) -> list:
    return _cross_relations(space) + _suite_dq(space)


def _suite_weyl_root(space: SpaceSpec, want_parity: QParity) -> list:
    profile = char_of(space.mode)
    if profile.parity is not want_parity or profile.ell < 3:
        raise InvalidAtomError(
            f"suite needs char(q) >= 3 with the {want_parity.value} root branch"
        )
    if space.family is not Family.OMEGA:
        raise InvalidAtomError("root branches act on the unrestricted Grassmann space")
    mode = space.mode
    ell = profile.ell
    odd = want_parity is QParity.ODD_ROOT
    checks = _suite_weyl_generic(space)
    size = space.shape.size
    bos = [p for p in range(1, size + 1) if not _is_fermionic(space, p)]
    fermi = space.shape.fermionic_positions()
    one = mode.one()
    for j in bos:
        for i in range(1, size + 1):
            e_i = _gen_label(space, i)
            c = one if odd else (one if i == j else -one)
            checks.append(
                Relation(
                    f"Th(e{i}) X{j} = +- X{j} Th(e{i})",
                    (_w(space, theta_op(e_i), mult_x_divpow(j)),),
                    (_w(space, mult_x_divpow(j), theta_op(e_i), coeff=c),),
                )
            )
            c = one if odd else (-one if i == j else one)
            checks.append(
                Relation(
                    f"s{i} X{j} = +- X{j} s{i}",
                    (_w(space, sigma(i), mult_x_divpow(j)),),
                    (_w(space, mult_x_divpow(j), sigma(i), coeff=c),),
                )
            )
            if i != j:
                c = one if odd else -one
                checks.append(
                    Relation(
                        f"d{i} X{j} = +- X{j} d{i}",
                        (_w(space, partial(i), mult_x_divpow(j)),),
                        (_w(space, mult_x_divpow(j), partial(i), coeff=c),),
                    )
                )
            c = one if odd else (one if i == j else -one)
            checks.append(
                Relation(
                    f"x{i} X{j} = +- X{j} x{i}",
                    (_w(space, mult_x(i), mult_x_divpow(j)),),
                    (_w(space, mult_x_divpow(j), mult_x(i), coeff=c),),
                )
            )
        for i in fermi:
            checks.append(
                Relation(
                    f"t{i} X{j} = X{j} t{i}",
                    (_w(space, tau(i), mult_x_divpow(j)),),
                    (_w(space, mult_x_divpow(j), tau(i)),),
                )
            )
        sgn = one if odd else -one
        checks.append(
            Relation(
                f"d{j} X{j} -+ X{j} d{j} = x{j}^(ell-1) s{j}^-1",
                (
                    _w(space, partial(j), mult_x_divpow(j)),
                    _w(space, mult_x_divpow(j), partial(j), coeff=-sgn),
                ),
                (_divpow_mult_word(space, j, ell - 1).then(_w(space, sigma(j, -1))),),
            )
        )
    # nilpotency of the bosonic derivatives on the restricted space
    restricted = make_space(Family.OMEGA_RESTRICTED, space.shape.m, space.shape.n, mode)
    for j in bos:
        checks.append(
            Relation(
                f"d{j}^ell = 0 on the restricted space",
                (_w(restricted, *([partial(j)] * ell)),),
                (),
            )
        )
    return checks


def _suite_leibniz(space: SpaceSpec) -> list:
    """Twisted Leibniz laws of the derivatives and the twist calculus:
    pairwise derivation laws (both grading-twist sign choices), the label
    additivity/dependency identities, the conjugation table, the twisted
    commutation of monomials, and the composite-derivation law."""
    mode = space.mode
    checks: list = list(_suite_dq(space))
    size = space.shape.size
    fermi = set(space.shape.fermionic_positions())

    def leibniz_fn(i: int, sign: int):
        e_i = _gen_label(space, i)
        d_i = _w(space, partial(i))

        def fn(u: SuperVector, v: SuperVector):
            lhs = apply_word(d_i, multiply(u, v))
            if i in fermi:
                tw = _w(space, theta_op(-e_i), tau(i))
                rhs = multiply(apply_word(d_i, u), v) + multiply(
                    apply_word(tw, u), apply_word(d_i, v)
                )
            else:
                tw = _w(space, theta_op(-e_i), sigma(i, sign))
                rhs = multiply(apply_word(d_i, u), apply_word(_w(space, sigma(i, -sign)), v)) + multiply(
                    apply_word(tw, u), apply_word(d_i, v)
                )
            return lhs, rhs

        return fn

    for i in range(1, size + 1):
        if i in fermi:
            checks.append(PairCheck(f"d{i} twisted Leibniz (exterior)", space, leibniz_fn(i, 1)))
        else:
            for sign in (1, -1):
                checks.append(
                    PairCheck(f"d{i} twisted Leibniz (sign {sign:+d})", space, leibniz_fn(i, sign))
                )

    def comm_fn(u: SuperVector, v: SuperVector):
        (ia,) = u.terms
        (ib,) = v.terms
        c = theta(ia, ib, mode)
        return multiply(u, v), multiply(v, u).scaled(c)

    checks.append(PairCheck("monomial twisted commutation", space, comm_fn))

    def assoc_fn(u, v, w):
        return multiply(multiply(u, v), w), multiply(u, multiply(v, w))

    checks.append(TripleCheck("associativity", space, assoc_fn))

    def twist_move_fn(u, v, w):
        (ia,) = u.terms
        lhs = multiply(multiply(u, v), w)
        rhs = multiply(
            apply_word(_w(space, theta_op(ia)), v), multiply(u, w)
        )
        return lhs, rhs

    checks.append(TripleCheck("left factor moves past via its twist", space, twist_move_fn))

    # composite derivation law: (mult by a monomial) o d_i
    seeds = [idx for t in range(0, 3) for idx in basis_of_degree(space, t)][:6]
    for i in range(1, size + 1):
        e_i = _gen_label(space, i)
        d_i = _w(space, partial(i))
        for lab in seeds:
            u0 = SuperVector.monomial(space, lab)

            def fn(v, w, lab=lab, u0=u0, i=i, e_i=e_i, d_i=d_i):
                op = lambda z: multiply(u0, apply_word(d_i, z))
                lhs = op(multiply(v, w))
                if i in fermi:
                    tw = _w(space, theta_op(lab - e_i), tau(i))
                    rhs = multiply(op(v), w) + multiply(apply_word(tw, v), op(w))
                else:
                    tw = _w(space, theta_op(lab - e_i), sigma(i, -1))
                    rhs = multiply(op(v), apply_word(_w(space, sigma(i, 1)), w)) + multiply(
                        apply_word(tw, v), op(w)
                    )
                return lhs, rhs

            checks.append(
                PairCheck(f"(x^{lab} d{i}) composite derivation", space, fn)
            )
    return checks


def build_suite(suite: str, space: SpaceSpec) -> list:
    if suite == "partials":
        return _suite_partials(space)
    if suite == "dq":
        return _suite_dq(space)
    if suite == "weyl-generic":
        return _suite_weyl_generic(space)
    if suite == "weyl-odd-root":
        return _suite_weyl_root(space, QParity.ODD_ROOT)
    if suite == "weyl-even-root":
        return _suite_weyl_root(space, QParity.EVEN_ROOT)
    if suite == "leibniz":
        return _suite_leibniz(space)
    raise ValueError(f"unknown suite {suite!r}; choose from {SUITE_NAMES}")


def verify_relation_suite(suite: str, space: SpaceSpec, t_max: int) -> RelationReport:
    if space.family in _DUAL_SIDE or space.family is Family.AFFINE:
        raise InvalidAtomError("relation suites run on the Grassmann-type polynomial side")
    checks = build_suite(suite, space)
    return run_checks(suite, space, checks, t_max)


# ---------------------------------------------------------------------------
# smash-product normal form
# ---------------------------------------------------------------------------


GroupKey = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
SmashKey = tuple[tuple[int, ...], GroupKey, tuple[int, ...]]


def _group_reduce(space: SpaceSpec, th: tuple[int, ...], sg: tuple[int, ...], tu: tuple[int, ...]) -> GroupKey:
    # in root mode every grading twist has eigenvalues of order dividing 2d
    if not space.mode.is_generic:
        p = 2 * space.mode.d
        th = tuple(a % p for a in th)
        sg = tuple(a % p for a in sg)
    tu = tuple(a % 2 for a in tu)
    return th, sg, tu


class SmashElement:
    """Sum of (coordinate monomial) (group element) (derivative monomial) terms.

    The group part is recorded as exponent vectors (twist label, grading
    twists, exterior involutions); in root-of-unity mode the exponents are
    reduced modulo the order of the corresponding eigenvalue system, so that
    equal keys act equally on the underlying space.
    """

    __slots__ = ("space", "terms")

    def __init__(self, space: SpaceSpec, terms: dict[SmashKey, ScalarQ] | None = None):
        self.space = space
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def unit(cls, space: SpaceSpec) -> "SmashElement":
        size = space.shape.size
        n = len(space.shape.fermionic_positions())
        key = ((0,) * size, ((0,) * size, (0,) * size, (0,) * n), (0,) * size)
        return cls(space, {key: space.mode.one()})

    def _add_term(self, key: SmashKey, coeff: ScalarQ) -> None:
        s = self.terms.get(key)
        s = coeff if s is None else s + coeff
        if s.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = s

    def __add__(self, other: "SmashElement") -> "SmashElement":
        out = SmashElement(self.space, dict(self.terms))
        for k, c in other.terms.items():
            out._add_term(k, c)
        return out

    def scaled(self, c: ScalarQ) -> "SmashElement":
        return SmashElement(self.space, {k: a * c for k, a in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SmashElement)
            and self.space == other.space
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def to_json(self) -> list[dict]:
        out = []
        for (x, (th, sg, tu), d), c in self.sorted_terms():
            out.append(
                {
                    "x": list(x),
                    "theta": list(th),
                    "sigma": list(sg),
                    "tau": list(tu),
                    "partial": list(d),
                    "coefficient": str(c),
                }
            )
        return out

    # ---- action on the underlying space ---------------------------------

    def act(self, u: SuperVector) -> SuperVector:
        space = self.space
        out = SuperVector.zero(space)
        for (x, (th, sg, tu), d), c in self.terms.items():
            atoms: list[Atom] = []
            lab = MultiIndex(th, space.shape)
            if any(th):
                atoms.append(theta_op(lab))
            for i, e in enumerate(sg, start=1):
                if e:
                    s = 1 if e > 0 else -1
                    atoms.extend([sigma(i, s)] * abs(e))
            for j, e in zip(space.shape.fermionic_positions(), tu):
                if e % 2:
                    atoms.append(tau(j))
            atoms.extend(_partial_letters(space, MultiIndex(d, space.shape)))
            w = OperatorWord(space, tuple(atoms), c)
            img = apply_word(w, u)
            if not img.is_zero():
                out = out + multiply(SuperVector.monomial(space, MultiIndex(x, space.shape)), img)
        return out


def _partial_letters(space: SpaceSpec, d_idx: MultiIndex) -> list[Atom]:
    letters = []
    for pos, e in enumerate(d_idx.entries, start=1):
        letters.extend([partial(pos)] * e)
    return letters


def _group_conj_on_label(space: SpaceSpec, key: GroupKey, w: MultiIndex) -> ScalarQ:
    """chi(g, w): g x_w g^-1 = chi * x_w for a group element g."""
    th, sg, tu = key
    mode = space.mode
    coeff = theta(MultiIndex(th, space.shape), w, mode) if any(th) else mode.one()
    for pos, e in enumerate(sg, start=1):
        if not e:
            continue
        v = w.entries[pos - 1]
        if not v:
            continue
        if _is_fermionic(space, pos):
            coeff = coeff * mode.minus_q_power(e * v)
        else:
            coeff = coeff * mode.q_power(e * v)
    sign = 0
    for j, e in zip(space.shape.fermionic_positions(), tu):
        sign += e * w.entries[j - 1]
    if sign % 2:
        coeff = -coeff
    return coeff


def _partials_past_group(space: SpaceSpec, d_idx: tuple[int, ...], atom: Atom) -> ScalarQ:
    """c with (d^D) g = c g (d^D) for a single group atom g."""
    mode = space.mode
    lab = MultiIndex(d_idx, space.shape)
    if atom.kind is AtomKind.THETA:
        return theta(lab, atom.label, mode).inverse()
    if atom.kind is AtomKind.SIGMA:
        e = lab.entries[atom.pos - 1]
        coeff = mode.q_power(atom.exp * e)
        if _is_fermionic(space, atom.pos) and (atom.exp * e) % 2:
            coeff = -coeff
        return coeff
    if atom.kind is AtomKind.TAU:
        e = lab.entries[atom.pos - 1]
        return mode.scalar(-1 if e % 2 else 1)
    raise InvalidAtomError(f"not a group atom: {atom}")


def _smash_absorb_atom(el: SmashElement, atom: Atom) -> SmashElement:
    """Right-multiply a normal-form element by one generator."""
    space = el.space
    mode = space.mode
    shape = space.shape
    size = shape.size
    cap = shape.restricted_ell
    fermi_positions = shape.fermionic_positions()
    out = SmashElement(space)

    if atom.kind in (AtomKind.SIGMA, AtomKind.TAU, AtomKind.THETA):
        for (x, (th, sg, tu), d), c in el.terms.items():
            c2 = c * _partials_past_group(space, d, atom)
            th2, sg2, tu2 = list(th), list(sg), list(tu)
            if atom.kind is AtomKind.THETA:
                th2 = [a + b for a, b in zip(th2, atom.label.entries)]
            elif atom.kind is AtomKind.SIGMA:
                sg2[atom.pos - 1] += atom.exp
            else:
                tu2[fermi_positions.index(atom.pos)] += 1
            key = (x, _group_reduce(space, tuple(th2), tuple(sg2), tuple(tu2)), d)
            out._add_term(key, c2)
        return out

    if atom.kind is AtomKind.PARITY:
        for j in fermi_positions:
            el = _smash_absorb_atom(el, tau(j))
        return el

    if atom.kind is AtomKind.PARTIAL:
        pos = atom.pos
        for (x, g, d), c in el.terms.items():
            d_lab = MultiIndex(d, shape)
            e_pos = MultiIndex.basis_vector(shape, pos)
            # the derivative letters compose like affine-superspace coordinates
            bb, ff, fb, _ = _dd_star(shape, d_lab, e_pos)
            newd = list(d)
            newd[pos - 1] += 1
            if shape.is_fermionic_pos(pos) and newd[pos - 1] > 1:
                continue
            if cap is not None and not shape.is_fermionic_pos(pos) and newd[pos - 1] >= cap:
                continue
            coeff = mode.q_power(bb + ff + fb)
            if ff % 2:
                coeff = -coeff
            out._add_term((x, g, tuple(newd)), c * coeff)
        return out

    if atom.kind in (AtomKind.MULT_X, AtomKind.MULT_X_DIV_POW):
        if atom.kind is AtomKind.MULT_X_DIV_POW:
            if mode.is_generic or _is_fermionic(space, atom.pos):
                raise InvalidAtomError("divided-power letters need a bosonic root-of-unity direction")
            w = MultiIndex.basis_vector(shape, atom.pos, char_of(mode).ell)
        else:
            w = MultiIndex.basis_vector(shape, atom.pos)
        for (x, g, d), c in el.terms.items():
            for c2, key in _term_times_monomial(space, x, g, d, w):
                out._add_term(key, c * c2)
        return out

    raise InvalidAtomError(f"unknown atom {atom}")


def _dd_star(shape: Shape, a: MultiIndex, b: MultiIndex) -> tuple[int, int, int, int]:
    mask = shape.fermionic_mask
    bb = ff = fb = bf = 0
    run_bos = run_fer = 0
    for ai, bi, fer in zip(a.entries, b.entries, mask):
        if ai:
            if fer:
                ff += ai * run_fer
                fb += ai * run_bos
            else:
                bb += ai * run_bos
                bf += ai * run_fer
        if fer:
            run_fer += bi
        else:
            run_bos += bi
    return bb, ff, fb, bf


def _term_times_monomial(
    space: SpaceSpec, x: tuple[int, ...], g: GroupKey, d: tuple[int, ...], w: MultiIndex
) -> list[tuple[ScalarQ, SmashKey]]:
    """(x g d^D) * x^w expanded back into normal form."""
    mode = space.mode
    shape = space.shape
    if not any(d):
        # move x^w past the group part, then multiply coordinate monomials
        chi = _group_conj_on_label(space, g, w)
        hit = monomial_product(space, MultiIndex(x, shape), w)
        if hit is None:
            return []
        coeff, target = hit
        return [(coeff * chi, (target.entries, g, d))]
    # peel the last derivative letter: d_pos x^w = (d_pos applied to x^w) gamma
    # + (left-twist eigenvalue on x^w) x^w d_pos
    pos = max(p for p in range(1, shape.size + 1) if d[p - 1])
    d_rest = list(d)
    d_rest[pos - 1] -= 1
    d_rest = tuple(d_rest)
    results: list[tuple[ScalarQ, SmashKey]] = []

    def collect(sub_terms, coeff, trailing_atoms):
        for c2, key in sub_terms:
            el = SmashElement(space, {key: coeff * c2})
            for at in trailing_atoms:
                el = _smash_absorb_atom(el, at)
            results.extend((cc, kk) for kk, cc in el.terms.items())

    hit = apply_atom(space, partial(pos), w)
    if hit is not None:
        c_a, w_a = hit
        gamma: list[Atom] = [] if _is_fermionic(space, pos) else [sigma(pos, -1)]
        collect(_term_times_monomial(space, x, g, d_rest, w_a), c_a, gamma)

    e_pos = MultiIndex.basis_vector(shape, pos)
    tw = theta(-e_pos, w, mode)
    if _is_fermionic(space, pos):
        if w.entries[pos - 1] % 2:
            tw = -tw
    elif w.entries[pos - 1]:
        tw = tw * mode.q_power(w.entries[pos - 1])
    collect(_term_times_monomial(space, x, g, d_rest, w), tw, [partial(pos)])
    return results


def smash_normal_form(space: SpaceSpec, atoms: Iterable[Atom], coeff: ScalarQ | None = None) -> SmashElement:
    """Normal form of a word in the Weyl-algebra generator alphabet."""
    if space.family not in _POLY_SIDE:
        raise InvalidAtomError("the smash product is built over the Grassmann space")
    el = SmashElement.unit(space)
    if coeff is not None:
        el = el.scaled(coeff)
    for atom in atoms:
        el = _smash_absorb_atom(el, atom)
    return el


def _monomial_atom_word(space: SpaceSpec, x: tuple[int, ...]) -> tuple[list[Atom], ScalarQ]:
    """Atom word whose normal form is exactly the coordinate monomial x."""
    shape = space.shape
    mode = space.mode
    atoms: list[Atom] = []
    ell = None if mode.is_generic else char_of(mode).ell
    for pos, e in enumerate(x, start=1):
        if not e:
            continue
        if _is_fermionic(space, pos):
            atoms.append(mult_x(pos))
        else:
            if ell is not None and shape.restricted_ell is None:
                lo, hi = e % ell, e // ell
            else:
                lo, hi = e, 0
            atoms.extend([mult_x(pos)] * lo)
            atoms.extend([mult_x_divpow(pos)] * hi)
    # normalize: applying the word to the unit must give exactly x^(x)
    probe = SuperVector.unit(space)
    for at in reversed(atoms):
        probe = apply_word(OperatorWord(space, (at,)), probe)
    target = MultiIndex(x, shape)
    c = probe.terms.get(target)
    if c is None:
        raise ArithmeticError(f"monomial {target} is not generated by the coordinate letters")
    return atoms, c.inverse()


def smash_mul(a: SmashElement, b: SmashElement) -> SmashElement:
    """Product of two normal forms (bilinear, associative on bounded degrees)."""
    if a.space != b.space:
        raise InvalidAtomError("smash elements over different spaces")
    space = a.space
    out = SmashElement(space)
    for (x, (th, sg, tu), d), c in b.terms.items():
        atoms, scale = _monomial_atom_word(space, x)
        lab = MultiIndex(th, space.shape)
        if any(th):
            atoms.append(theta_op(lab))
        for i, e in enumerate(sg, start=1):
            s = 1 if e > 0 else -1
            atoms.extend([sigma(i, s)] * abs(e))
        for j, e in zip(space.shape.fermionic_positions(), tu):
            if e % 2:
                atoms.append(tau(j))
        atoms.extend(_partial_letters(space, MultiIndex(d, space.shape)))
        piece = a.scaled(c * scale)
        for at in atoms:
            piece = _smash_absorb_atom(piece, at)
        out = out + piece
    return out
