"""Algebraic laws of the approximation operators, checked exhaustively on an instance.

A :class:`Law` is a point predicate plus a domain describing which points
to visit (single subsets, ordered pairs, comparable primal pairs, ...).
:func:`check_laws` walks the domain and stops at the first failing point,
which becomes the witness.

Laws fall in three categories:

``catalog``
    Derivable statements. They must hold wherever their preconditions do.
``refuted``
    Statements that are asserted in the literature these operators come
    from but are false as stated; each has a known failing instance.
    Their derivable replacement lives in the catalog.
``non-property``
    Classical rough-set properties the primal models are known to lack.
    They are the targets of :mod:`primalrough.analysis.search`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from ..foundation import ENUMERATION_CAP, UNDEFINED, CapacityError, StructuralError, Subset
from ..models import PRIMAL_MODELS, ModelId, approximation_table
from ..primal import Level, Primal, SetFamily, power_minus_universe, union_primal
from ..relations import ALL_KINDS, Kind, Relation, is_reflexive, is_serial

EMPTY_PRIMAL = "{}"
MAX_PRIMAL = "max"
BASE_PRIMAL = "P"

Y, N1, N2, N3, N4 = ModelId.YAO, ModelId.N1, ModelId.N2, ModelId.N3, ModelId.N4


# -- evaluation environment ----------------------------------------------------


class Table:
    """Lower, upper, boundary and accuracy for every subset, as int masks."""

    __slots__ = ("lo", "up", "bd", "acc")

    def __init__(self, results):
        self.lo = [r.lower.bits for r in results]
        self.up = [r.upper.bits for r in results]
        self.bd = [r.boundary.bits for r in results]
        self.acc = [r.accuracy for r in results]


class Env:
    """Cached approximation tables for one relation and a set of named primals.

    Besides the supplied primals, ``"{}"`` (only the empty set) and
    ``"max"`` (every proper subset) are always available, and ``"A|B"``
    names the member-wise union of two named primals.
    """

    def __init__(self, relation: Relation, primal: Primal, aux: Mapping[str, Primal] | None = None):
        universe = relation.universe
        if universe.size > ENUMERATION_CAP:
            raise CapacityError(f"law checks enumerate subsets; {universe.size} elements exceeds cap {ENUMERATION_CAP}")
        self.relation = relation
        self.universe = universe
        self.n = universe.size
        self.full = universe.mask
        self.count = 1 << self.n
        self.primals: dict[str, Primal] = {BASE_PRIMAL: primal}
        for name, p in (aux or {}).items():
            if p.universe != universe:
                raise StructuralError(f"auxiliary primal {name!r} lives on a different universe")
            self.primals[name] = p
        self.supplied = tuple(self.primals)
        self._tables: dict[tuple, Table] = {}
        self.reflexive = is_reflexive(relation)

    def primal(self, name: str) -> Primal:
        if name not in self.primals:
            if name == EMPTY_PRIMAL:
                self.primals[name] = Primal.validated(SetFamily(self.universe, [0]), Level.WEAK)
            elif name == MAX_PRIMAL:
                self.primals[name] = power_minus_universe(self.universe)
            elif "|" in name:
                a, b = name.split("|", 1)
                self.primals[name] = union_primal(self.primal(a), self.primal(b))
            else:
                raise StructuralError(f"unknown primal {name!r}")
        return self.primals[name]

    def table(self, model: ModelId, kind: Kind, primal: str | None) -> Table:
        key = (model, kind, None if model is Y else primal)
        t = self._tables.get(key)
        if t is None:
            p = None if model is Y else self.primal(primal)
            t = Table(approximation_table(self.relation, p, model, kind))
            self._tables[key] = t
        return t

    def candidates(self) -> tuple[str, ...]:
        """Primals used by two-primal laws: the supplied ones plus the two extremes."""
        return self.supplied + (EMPTY_PRIMAL, MAX_PRIMAL)

    def members(self, name: str) -> frozenset[int]:
        return self.primal(name).masks


@dataclass(frozen=True)
class Point:
    """Where a law is evaluated: kind, one or two subsets, one or two primals."""

    kind: Kind | None
    v: int
    w: int | None = None
    p: str = BASE_PRIMAL
    q: str | None = None

    def describe(self, env: Env) -> str:
        u = env.universe
        parts = []
        if self.kind is not None:
            parts.append(f"kind={self.kind}")
        parts.append(f"V={u.render(u.from_bits(self.v))}")
        if self.w is not None:
            parts.append(f"W={u.render(u.from_bits(self.w))}")
        parts.append(f"P={self.p}")
        if self.q is not None:
            parts.append(f"Q={self.q}")
        return ", ".join(parts)

    def as_dict(self, env: Env) -> dict:
        u = env.universe
        out = {"kind": str(self.kind) if self.kind is not None else None, "V": u.labels_of(u.from_bits(self.v))}
        if self.w is not None:
            out["W"] = u.labels_of(u.from_bits(self.w))
        out["P"] = self.p
        if self.q is not None:
            out["Q"] = self.q
        return out


class Category(str, enum.Enum):
    CATALOG = "catalog"
    REFUTED = "refuted"
    NON_PROPERTY = "non-property"

    def __str__(self) -> str:
        return self.value


class Domain(str, enum.Enum):
    SINGLE = "single"  # every kind, every V
    EDGE = "edge"  # every kind, one evaluation
    SUBSET_PAIR = "subset-pair"  # every kind, V <= W
    PAIR = "pair"  # every kind, every ordered (V, W)
    SYM_PAIR = "sym-pair"  # every kind, unordered (V, W); for laws symmetric in V and W
    PRIMAL_CHAIN = "primal-chain"  # every kind, V, and P <= Q among candidate primals
    PRIMAL_PAIR = "primal-pair"  # every kind, V, and every ordered pair of distinct candidates
    PRIMAL_UNION = "primal-union"  # every kind, V, and unordered distinct candidates
    KINDS = "kinds"  # every V, all kinds at once

    def __str__(self) -> str:
        return self.value


PRECONDITIONS: dict[str, tuple[Callable[[Env], bool], str]] = {
    "reflexive": (lambda env: env.reflexive, "relation is not reflexive"),
    "nonempty-primal": (lambda env: bool(env.primal(BASE_PRIMAL).masks), "primal is the empty family"),
}


@dataclass(frozen=True)
class Law:
    id: str
    statement: str
    category: Category
    domain: Domain
    predicate: Callable[[Env, Point], bool] = field(repr=False)
    models: tuple[ModelId, ...] = ()
    requires: tuple[str, ...] = ()
    primal: str = BASE_PRIMAL
    replaces: str | None = None  # for refuted laws: the catalog law that holds instead

    def skip_reason(self, env: Env, kinds: Sequence[Kind]) -> str | None:
        for name in self.requires:
            ok, reason = PRECONDITIONS[name]
            if not ok(env):
                return reason
        if self.domain is Domain.KINDS and set(kinds) != set(ALL_KINDS):
            return "compares kinds, so needs all four"
        return None


# -- points --------------------------------------------------------------------


def points(law: Law, env: Env, kinds: Sequence[Kind]) -> Iterator[Point]:
    rng = range(env.count)
    p = law.primal
    d = law.domain
    if d is Domain.KINDS:
        for v in rng:
            yield Point(None, v, p=p)
        return
    for kind in kinds:
        if d is Domain.SINGLE:
            for v in rng:
                yield Point(kind, v, p=p)
        elif d is Domain.EDGE:
            yield Point(kind, 0, p=p)
        elif d is Domain.SUBSET_PAIR:
            for w in rng:
                sub = w
                while True:
                    yield Point(kind, sub, w, p=p)
                    if sub == 0:
                        break
                    sub = (sub - 1) & w
        elif d is Domain.PAIR:
            for v in rng:
                for w in rng:
                    yield Point(kind, v, w, p=p)
        elif d is Domain.SYM_PAIR:
            for v in rng:
                for w in range(v, env.count):
                    yield Point(kind, v, w, p=p)
        else:
            for a, b in _primal_pairs(env, d):
                for v in rng:
                    yield Point(kind, v, p=a, q=b)


def _primal_pairs(env: Env, d: Domain) -> list[tuple[str, str]]:
    names = env.candidates()
    # distinct families only, keeping the first name for each
    seen: dict[frozenset[int], str] = {}
    for name in names:
        seen.setdefault(env.members(name), name)
    uniq = list(seen.values())
    if d is Domain.PRIMAL_CHAIN:
        return [(a, b) for a in uniq for b in uniq if a != b and env.members(a) <= env.members(b)]
    if d is Domain.PRIMAL_PAIR:
        return [(a, b) for a in uniq for b in uniq if a != b]
    return [(a, b) for i, a in enumerate(uniq) for b in uniq[i + 1 :]]


# -- reports -------------------------------------------------------------------


class Verdict(str, enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    SKIPPED = "Skipped"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LawReport:
    law: str
    instance: str
    verdict: Verdict
    reason: str = ""
    witness: Point | None = None
    witness_text: str = ""
    checked: int = 0

    def as_dict(self, env: Env | None = None) -> dict:
        out = {"law": self.law, "instance": self.instance, "verdict": str(self.verdict), "checked": self.checked}
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = self.witness.as_dict(env) if env is not None else self.witness_text
            out["witness_text"] = self.witness_text
        return out


def evaluate(law: Law, env: Env, kinds: Sequence[Kind] = ALL_KINDS, instance: str = "instance") -> LawReport:
    kinds = tuple(Kind(k) for k in kinds)
    reason = law.skip_reason(env, kinds)
    if reason:
        return LawReport(law.id, instance, Verdict.SKIPPED, reason)
    checked = 0
    for pt in points(law, env, kinds):
        checked += 1
        if not law.predicate(env, pt):
            return LawReport(law.id, instance, Verdict.FAILS, "", pt, pt.describe(env), checked)
    return LawReport(law.id, instance, Verdict.HOLDS, "", None, "", checked)


def recheck(law: Law, relation: Relation, primal: Primal, aux: Mapping[str, Primal] | None, pt: Point) -> bool:
    """Evaluate ``law`` at ``pt`` in a fresh environment; True means it holds there."""
    return law.predicate(Env(relation, primal, aux), pt)


def resolve(ids: Iterable[str] | None, category: Category | None = Category.CATALOG) -> list[Law]:
    if ids is None:
        return [law for law in REGISTRY.values() if category is None or law.category is category]
    out = []
    for law_id in ids:
        if law_id not in REGISTRY:
            raise StructuralError(f"unknown law {law_id!r}")
        out.append(REGISTRY[law_id])
    return out


def check_laws(
    relation: Relation,
    primal: Primal,
    laws: Iterable[str] | None = None,
    kinds: Iterable[Kind | str] = ALL_KINDS,
    aux: Mapping[str, Primal] | None = None,
    instance: str = "instance",
) -> list[LawReport]:
    """Check each law over its whole domain; ``laws=None`` means the full catalog."""
    selected = resolve(laws)
    kinds = tuple(Kind.parse(k) if isinstance(k, str) else Kind(k) for k in kinds)
    env = Env(relation, primal, aux)
    return [evaluate(law, env, kinds, instance) for law in selected]


# -- predicate helpers ---------------------------------------------------------


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


def _le(x, y) -> bool:
    """Accuracy ordering; comparisons with an undefined side are vacuous."""
    if x is UNDEFINED or y is UNDEFINED:
        return True
    return x <= y


def _tab(env: Env, pt: Point, model: ModelId, kind: Kind | None = None, primal: str | None = None) -> Table:
    return env.table(model, kind or pt.kind, primal or pt.p)


REGISTRY: dict[str, Law] = {}


def _law(law_id, statement, domain, models=(), requires=(), primal=BASE_PRIMAL, category=Category.CATALOG, replaces=None):
    def register(fn):
        if law_id in REGISTRY:
            raise RuntimeError(f"duplicate law id {law_id}")
        REGISTRY[law_id] = Law(law_id, statement, category, domain, fn, tuple(models), tuple(requires), primal, replaces)
        return fn

    return register


# -- catalog: single-model laws --------------------------------------------------------


@_law("N1-duality", "lower1(V) = (upper1(V'))'", Domain.SINGLE, [N1])
def _n1_duality(env, pt):
    t = _tab(env, pt, N1)
    return t.lo[pt.v] == env.full & ~t.up[env.full & ~pt.v]


@_law("N3-duality", "upper3(V) = (lower3(V'))' and lower3(V) = (upper3(V'))'", Domain.SINGLE, [N3])
def _n3_duality(env, pt):
    t = _tab(env, pt, N3)
    vc = env.full & ~pt.v
    return t.up[pt.v] == env.full & ~t.lo[vc] and t.lo[pt.v] == env.full & ~t.up[vc]


@_law("N4-duality", "lower4(V) = (upper4(V'))' and upper4(V) = (lower4(V'))'", Domain.SINGLE, [N4])
def _n4_duality(env, pt):
    t = _tab(env, pt, N4)
    vc = env.full & ~pt.v
    return t.lo[pt.v] == env.full & ~t.up[vc] and t.up[pt.v] == env.full & ~t.lo[vc]


@_law("boundary-definition", "B(V) = upper(V) - lower(V) for every model", Domain.SINGLE, [Y, N1, N2, N3, N4])
def _boundary(env, pt):
    for m in (Y,) + PRIMAL_MODELS:
        t = _tab(env, pt, m)
        if t.bd[pt.v] != t.up[pt.v] & ~t.lo[pt.v]:
            return False
    return True


def _edge(model):
    def pred(env, pt):
        t = _tab(env, pt, model)
        return t.lo[env.full] == env.full and t.up[0] == 0

    return pred


for _m in (N1, N2, N4):
    _law(
        f"{_m}-edge",
        f"lower{str(_m)[1]}(U) = U and upper{str(_m)[1]}(empty) = empty",
        Domain.EDGE,
        [_m],
        requires=["nonempty-primal"],
    )(_edge(_m))


@_law("N2-upper-extensive", "V <= upper2(V)", Domain.SINGLE, [N2])
def _n2_extensive(env, pt):
    return _sub(pt.v, _tab(env, pt, N2).up[pt.v])


@_law("complement-member-lower-full", "V nonempty and V' in P imply lower1(V) = lower2(V) = U", Domain.SINGLE, [N1, N2])
def _complement_member(env, pt):
    if not pt.v or (env.full & ~pt.v) not in env.members(pt.p):
        return True
    return _tab(env, pt, N1).lo[pt.v] == env.full and _tab(env, pt, N2).lo[pt.v] == env.full


@_law("member-upper-collapse", "V nonempty and V in P imply upper1(V) = empty and upper2(V) = V", Domain.SINGLE, [N1, N2])
def _member_upper(env, pt):
    if not pt.v or pt.v not in env.members(pt.p):
        return True
    return _tab(env, pt, N1).up[pt.v] == 0 and _tab(env, pt, N2).up[pt.v] == pt.v


@_law("N4-member-collapse", "V in P implies upper4(V) = empty; V' in P implies lower4(V) = U", Domain.SINGLE, [N4])
def _n4_member(env, pt):
    # every w & V sits inside V, so downward closure keeps it in P
    t = _tab(env, pt, N4)
    members = env.members(pt.p)
    if pt.v in members and t.up[pt.v]:
        return False
    return (env.full & ~pt.v) not in members or t.lo[pt.v] == env.full


def _monotone(model):
    def pred(env, pt):
        t = _tab(env, pt, model)
        return _sub(t.lo[pt.v], t.lo[pt.w]) and _sub(t.up[pt.v], t.up[pt.w])

    return pred


def _union_meet(model):
    def pred(env, pt):
        t = _tab(env, pt, model)
        v, w = pt.v, pt.w
        return (
            _sub(t.lo[v] | t.lo[w], t.lo[v | w])
            and _sub(t.up[v] | t.up[w], t.up[v | w])
            and _sub(t.lo[v & w], t.lo[v] & t.lo[w])
            and _sub(t.up[v & w], t.up[v] & t.up[w])
        )

    return pred


def _accuracy_bounds(model):
    def pred(env, pt):
        a = _tab(env, pt, model).acc[pt.v]
        return a is not UNDEFINED and 0 <= a <= 1

    return pred


for _m in PRIMAL_MODELS:
    _k = str(_m)[1]
    _law(f"{_m}-monotone", f"V <= W implies lower{_k}(V) <= lower{_k}(W) and upper{_k}(V) <= upper{_k}(W)", Domain.SUBSET_PAIR, [_m])(
        _monotone(_m)
    )
    _law(
        f"{_m}-union-intersection",
        f"lower{_k} and upper{_k} of V|W contain the unions of the parts; of V&W are contained in the intersections",
        Domain.SYM_PAIR,
        [_m],
    )(_union_meet(_m))
    _law(f"{_m}-accuracy-bounds", f"0 <= sigma{_k}(V) <= 1", Domain.SINGLE, [_m])(_accuracy_bounds(_m))


@_law("Yao-accuracy-bound", "sigma_Yao(V) <= 1 whenever the kind is serial", Domain.SINGLE, [Y])
def _yao_bound(env, pt):
    if not is_serial(env.relation, pt.kind):
        return True
    return _le(_tab(env, pt, Y).acc[pt.v], Fraction(1))


# -- catalog: fixed-primal laws ---------------------------------------------------------


@_law("empty-primal-reduction", "with P = {empty}, lower1 and upper1 coincide with the Yao operators", Domain.SINGLE, [N1, Y], primal=EMPTY_PRIMAL)
def _reduction(env, pt):
    a, b = _tab(env, pt, N1), _tab(env, pt, Y)
    return a.lo[pt.v] == b.lo[pt.v] and a.up[pt.v] == b.up[pt.v]


@_law(
    "maximal-primal-collapse",
    "with P = all proper subsets: V nonempty gives lower1 = lower2 = lower4 = U; "
    "V proper gives upper1 = upper4 = empty and upper2 = V",
    Domain.SINGLE,
    [N1, N2, N4],
    primal=MAX_PRIMAL,
)
def _maximal(env, pt):
    v, full = pt.v, env.full
    t1, t2, t4 = _tab(env, pt, N1), _tab(env, pt, N2), _tab(env, pt, N4)
    if v and not (t1.lo[v] == full and t2.lo[v] == full and t4.lo[v] == full):
        return False
    if v != full and not (t1.up[v] == 0 and t4.up[v] == 0 and t2.up[v] == v):
        return False
    return t2.up[v] == v if v == full else True


# -- catalog: two-primal laws -----------------------------------------------------------


def _primal_monotone(model):
    def pred(env, pt):
        small, big = _tab(env, pt, model, primal=pt.p), _tab(env, pt, model, primal=pt.q)
        v = pt.v
        return (
            _sub(small.lo[v], big.lo[v])
            and _sub(big.up[v], small.up[v])
            and _sub(big.bd[v], small.bd[v])
            and _le(small.acc[v], big.acc[v])
        )

    return pred


for _m in PRIMAL_MODELS:
    _k = str(_m)[1]
    _law(
        f"{_m}-primal-monotone",
        f"P <= Q implies lower{_k}^P <= lower{_k}^Q, upper{_k}^Q <= upper{_k}^P, B^Q <= B^P and sigma^P <= sigma^Q",
        Domain.PRIMAL_CHAIN,
        [_m],
    )(_primal_monotone(_m))


def _union_tables(env, pt, model):
    return (
        _tab(env, pt, model, primal=pt.p),
        _tab(env, pt, model, primal=pt.q),
        _tab(env, pt, model, primal=f"{pt.p}|{pt.q}"),
    )


@_law("N1-primal-union", "upper1^(P|Q) = upper1^P & upper1^Q and lower1^(P|Q) = lower1^P | lower1^Q", Domain.PRIMAL_UNION, [N1])
def _n1_union(env, pt):
    a, b, c = _union_tables(env, pt, N1)
    v = pt.v
    return c.up[v] == a.up[v] & b.up[v] and c.lo[v] == a.lo[v] | b.lo[v]


@_law("N2-primal-union", "upper2^(P|Q) = upper2^P & upper2^Q", Domain.PRIMAL_UNION, [N2])
def _n2_union(env, pt):
    a, b, c = _union_tables(env, pt, N2)
    return c.up[pt.v] == a.up[pt.v] & b.up[pt.v]


@_law("N3-primal-union", "lower3^(P|Q) = lower3^P | lower3^Q and upper3^(P|Q) = upper3^P & upper3^Q", Domain.PRIMAL_UNION, [N3])
def _n3_union(env, pt):
    a, b, c = _union_tables(env, pt, N3)
    v = pt.v
    return c.lo[v] == a.lo[v] | b.lo[v] and c.up[v] == a.up[v] & b.up[v]


@_law("N4-primal-union", "lower4^(P|Q) contains lower4^P | lower4^Q; upper4^(P|Q) is inside upper4^P & upper4^Q", Domain.PRIMAL_UNION, [N4])
def _n4_union(env, pt):
    a, b, c = _union_tables(env, pt, N4)
    v = pt.v
    return _sub(a.lo[v] | b.lo[v], c.lo[v]) and _sub(c.up[v], a.up[v] & b.up[v])


# -- catalog: kind chains ----------------------------------------------------------


def _kind_chain(model, part):
    def pred(env, pt):
        t = {k: env.table(model, k, pt.p) for k in ALL_KINDS}
        a, b, i, u = t[Kind.A], t[Kind.B], t[Kind.I], t[Kind.U]
        v = pt.v
        if part == "sets":
            return all(
                _sub(u.lo[v], mid.lo[v]) and _sub(mid.lo[v], i.lo[v]) and _sub(i.up[v], mid.up[v]) and _sub(mid.up[v], u.up[v])
                for mid in (a, b)
            )
        if part == "boundary":
            return all(_sub(i.bd[v], mid.bd[v]) and _sub(mid.bd[v], u.bd[v]) for mid in (a, b))
        return all(_le(u.acc[v], mid.acc[v]) and _le(mid.acc[v], i.acc[v]) for mid in (a, b))

    return pred


_CHAIN_TEXT = {
    "sets": "lower_u <= lower_a, lower_b <= lower_i and upper_i <= upper_a, upper_b <= upper_u",
    "boundary": "B_i <= B_a, B_b <= B_u",
    "accuracy": "sigma_u <= sigma_a, sigma_b <= sigma_i",
}

for _m in (N1, N2, N4):
    for _part, _suffix in (("sets", "kind-chain"), ("boundary", "kind-boundary-chain"), ("accuracy", "kind-accuracy-chain")):
        _law(f"{_m}-{_suffix}", f"{_m}: {_CHAIN_TEXT[_part]}", Domain.KINDS, [_m])(_kind_chain(_m, _part))


# -- catalog: cross-model comparisons ------------------------------------------------


@_law("N1-N2-comparison", "lower2 = lower1, upper1 <= upper2, B1 <= B2, sigma1 = sigma2", Domain.SINGLE, [N1, N2])
def _n1_n2(env, pt):
    a, b = _tab(env, pt, N1), _tab(env, pt, N2)
    v = pt.v
    return a.lo[v] == b.lo[v] and _sub(a.up[v], b.up[v]) and _sub(a.bd[v], b.bd[v]) and a.acc[v] == b.acc[v]


@_law(
    "reflexive-N2-N1-N3-chain",
    "reflexive relation: lower2 <= lower1 <= lower3, upper3 <= upper1 <= upper2, B3 <= B1 <= B2, sigma2 <= sigma1 <= sigma3",
    Domain.SINGLE,
    [N1, N2, N3],
    requires=["reflexive"],
)
def _refl_213(env, pt):
    t1, t2, t3 = _tab(env, pt, N1), _tab(env, pt, N2), _tab(env, pt, N3)
    v = pt.v
    return (
        _sub(t2.lo[v], t1.lo[v])
        and _sub(t1.lo[v], t3.lo[v])
        and _sub(t3.up[v], t1.up[v])
        and _sub(t1.up[v], t2.up[v])
        and _sub(t3.bd[v], t1.bd[v])
        and _sub(t1.bd[v], t2.bd[v])
        and _le(t2.acc[v], t1.acc[v])
        and _le(t1.acc[v], t3.acc[v])
    )


@_law(
    "reflexive-N4-N1-N3-chain",
    "reflexive relation: lower4 <= lower1 <= lower3, upper3 <= upper1 <= upper4, B3 <= B1 <= B4, sigma4 <= sigma1 <= sigma3",
    Domain.SINGLE,
    [N1, N3, N4],
    requires=["reflexive"],
)
def _refl_413(env, pt):
    t1, t3, t4 = _tab(env, pt, N1), _tab(env, pt, N3), _tab(env, pt, N4)
    v = pt.v
    return (
        _sub(t4.lo[v], t1.lo[v])
        and _sub(t1.lo[v], t3.lo[v])
        and _sub(t3.up[v], t1.up[v])
        and _sub(t1.up[v], t4.up[v])
        and _sub(t3.bd[v], t1.bd[v])
        and _sub(t1.bd[v], t4.bd[v])
        and _le(t4.acc[v], t1.acc[v])
        and _le(t1.acc[v], t3.acc[v])
    )


@_law("Yao-N1-containment", "nonempty primal: lower_Yao <= lower1 and upper1 <= upper_Yao", Domain.SINGLE, [Y, N1], requires=["nonempty-primal"])
def _yao_n1(env, pt):
    y, t = _tab(env, pt, Y), _tab(env, pt, N1)
    return _sub(y.lo[pt.v], t.lo[pt.v]) and _sub(t.up[pt.v], y.up[pt.v])


@_law(
    "Yao-N1-accuracy",
    "reflexive relation, nonempty primal: sigma_Yao <= sigma1",
    Domain.SINGLE,
    [Y, N1],
    requires=["reflexive", "nonempty-primal"],
)
def _yao_n1_acc(env, pt):
    return _le(_tab(env, pt, Y).acc[pt.v], _tab(env, pt, N1).acc[pt.v])


# -- refuted statements ----------------------------------------------------------------
# Each is false as written; the catalog law named in ``replaces`` is what holds.


@_law(
    "maximal-primal-lower-empty",
    "with P = all proper subsets, V != U implies lower1(V) = lower2(V) = empty",
    Domain.SINGLE,
    [N1, N2],
    primal=MAX_PRIMAL,
    category=Category.REFUTED,
    replaces="maximal-primal-collapse",
)
def _refuted_max_lower(env, pt):
    if pt.v == env.full:
        return True
    return _tab(env, pt, N1).lo[pt.v] == 0 and _tab(env, pt, N2).lo[pt.v] == 0


@_law(
    "maximal-primal-upper-empty-everywhere",
    "with P = all proper subsets, upper1(V) = empty for every V including U",
    Domain.SINGLE,
    [N1],
    primal=MAX_PRIMAL,
    category=Category.REFUTED,
    replaces="maximal-primal-collapse",
)
def _refuted_max_upper(env, pt):
    return _tab(env, pt, N1).up[pt.v] == 0


@_law(
    "N4-primal-union-lower-equality",
    "lower4^(P|Q) = lower4^P | lower4^Q",
    Domain.PRIMAL_UNION,
    [N4],
    category=Category.REFUTED,
    replaces="N4-primal-union",
)
def _refuted_n4_union(env, pt):
    a, b, c = _union_tables(env, pt, N4)
    return c.lo[pt.v] == a.lo[pt.v] | b.lo[pt.v]


for _part, _suffix in (("sets", "kind-chain"), ("boundary", "kind-boundary-chain"), ("accuracy", "kind-accuracy-chain")):
    _law(f"N3-{_suffix}", f"N3: {_CHAIN_TEXT[_part]}", Domain.KINDS, [N3], category=Category.REFUTED)(_kind_chain(N3, _part))


def _printed_boundary(model):
    def pred(env, pt):
        # pt.p <= pt.q; the printed direction puts the smaller primal's boundary inside the larger's
        small, big = _tab(env, pt, model, primal=pt.p), _tab(env, pt, model, primal=pt.q)
        return _sub(small.bd[pt.v], big.bd[pt.v])

    return pred


for _m in PRIMAL_MODELS:
    _law(
        f"{_m}-primal-boundary-as-printed",
        f"P <= Q implies B^P <= B^Q for {_m}",
        Domain.PRIMAL_CHAIN,
        [_m],
        category=Category.REFUTED,
        replaces=f"{_m}-primal-monotone",
    )(_printed_boundary(_m))


@_law(
    "Yao-N1-accuracy-unrestricted",
    "nonempty primal, any relation: sigma_Yao <= sigma1",
    Domain.SINGLE,
    [Y, N1],
    requires=["nonempty-primal"],
    category=Category.REFUTED,
    replaces="Yao-N1-accuracy",
)
def _refuted_yao_acc(env, pt):
    return _le(_tab(env, pt, Y).acc[pt.v], _tab(env, pt, N1).acc[pt.v])


def catalog() -> list[Law]:
    return [law for law in REGISTRY.values() if law.category is Category.CATALOG]


def refuted() -> list[Law]:
    return [law for law in REGISTRY.values() if law.category is Category.REFUTED]
