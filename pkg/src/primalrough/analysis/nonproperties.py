"""Classical rough-set properties that the primal models do not always have.

Each one is registered as a :class:`~primalrough.analysis.laws.Law` in the
``non-property`` category, so the machinery that verifies laws can also look
for points where these fail. :data:`TARGETS` adds search metadata: the group
of classical properties the target belongs to (``remark`` targets are the
advertised deficiencies of each model, the others are converses and
cross-model comparisons) and the shipped fixture that illustrates it.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..models import PRIMAL_MODELS, ModelId
from .laws import BASE_PRIMAL, MAX_PRIMAL, REGISTRY, Category, Domain, _le, _law, _sub, _tab

Y, N1, N2, N3, N4 = ModelId.YAO, ModelId.N1, ModelId.N2, ModelId.N3, ModelId.N4
NP = Category.NON_PROPERTY


@dataclass(frozen=True)
class Target:
    id: str
    companion: str
    remark: bool

    @property
    def law(self):
        return REGISTRY[self.id]


TARGETS: dict[str, Target] = {}


def _target(law_id, statement, domain, models, companion, remark=True, primal=BASE_PRIMAL):
    def register(fn):
        _law(law_id, statement, domain, models, primal=primal, category=NP)(fn)
        TARGETS[law_id] = Target(law_id, companion, remark)
        return fn

    return register


# -- classical properties, per model ---------------------------------------------------

_COMPANIONS = {
    # model: {property: fixture}
    N1: {
        "contraction": "sparse-loop",
        "extensivity": "partial-chain",
        "lower-idempotence": "sparse-loop",
        "upper-idempotence": "reflexive-cycle",
        "lower-intersection-equality": "sparse-loop",
        "upper-union-equality": "reflexive-cycle",
        "upper-of-lower": "reflexive-cycle",
        "lower-of-upper": "reflexive-cycle",
        "lower-union-equality": "star-symmetric",
        "upper-intersection-equality": "star-symmetric",
    },
    N2: {
        "contraction": "swap-pair",
        "lower-idempotence": "swap-pair",
        "upper-idempotence": "before-kind",
        "lower-intersection-equality": "partial-chain",
        "upper-union-equality": "reflexive-cycle",
        "upper-of-lower": "swap-pair",
        "lower-of-upper": "swap-pair",
        "upper-intersection-equality": "swap-pair",
    },
    N3: {
        "contraction": "fan-out",
        "extensivity": "fan-out",
        "lower-idempotence": "partial-chain",
        "upper-idempotence": "partial-chain",
        "lower-intersection-equality": "partial-chain",
        "upper-union-equality": "partial-chain",
        "upper-of-lower": "fan-out",
        "lower-of-upper": "three-point",
        "lower-union-equality": "fan-out",
        "upper-intersection-equality": "fan-out",
    },
    N4: {
        "contraction": "fan-out",
        "extensivity": "fan-out",
        "lower-idempotence": "reflexive-cycle",
        "upper-idempotence": "reflexive-cycle",
        "lower-intersection-equality": "reflexive-cycle",
        "upper-union-equality": "reflexive-cycle",
        "upper-of-lower": "fan-out",
        "lower-of-upper": "fan-out",
        "upper-intersection-equality": "fan-out",
    },
}

# properties outside the advertised list for each model; illustrated by examples only
_EXTRA = {"lower-union-equality", "upper-intersection-equality"}


def _contraction(m):
    return lambda env, pt: _sub(_tab(env, pt, m).lo[pt.v], pt.v)


def _extensivity(m):
    return lambda env, pt: _sub(pt.v, _tab(env, pt, m).up[pt.v])


def _lower_idem(m):
    def pred(env, pt):
        t = _tab(env, pt, m)
        return t.lo[t.lo[pt.v]] == t.lo[pt.v]

    return pred


def _upper_idem(m):
    def pred(env, pt):
        t = _tab(env, pt, m)
        return t.up[t.up[pt.v]] == t.up[pt.v]

    return pred


def _upper_of_lower(m):
    def pred(env, pt):
        t = _tab(env, pt, m)
        return t.up[t.lo[pt.v]] == t.lo[pt.v]

    return pred


def _lower_of_upper(m):
    def pred(env, pt):
        t = _tab(env, pt, m)
        return t.lo[t.up[pt.v]] == t.up[pt.v]

    return pred


def _pairwise(m, side, op):
    def pred(env, pt):
        t = _tab(env, pt, m)
        arr = t.lo if side == "lo" else t.up
        v, w = pt.v, pt.w
        if op == "and":
            return arr[v & w] == arr[v] & arr[w]
        return arr[v | w] == arr[v] | arr[w]

    return pred


_TEXT = {
    "contraction": ("lower{k}(V) <= V", Domain.SINGLE, _contraction),
    "extensivity": ("V <= upper{k}(V)", Domain.SINGLE, _extensivity),
    "lower-idempotence": ("lower{k}(lower{k}(V)) = lower{k}(V)", Domain.SINGLE, _lower_idem),
    "upper-idempotence": ("upper{k}(upper{k}(V)) = upper{k}(V)", Domain.SINGLE, _upper_idem),
    "upper-of-lower": ("upper{k}(lower{k}(V)) = lower{k}(V)", Domain.SINGLE, _upper_of_lower),
    "lower-of-upper": ("lower{k}(upper{k}(V)) = upper{k}(V)", Domain.SINGLE, _lower_of_upper),
    "lower-intersection-equality": ("lower{k}(V&W) = lower{k}(V) & lower{k}(W)", Domain.SYM_PAIR, lambda m: _pairwise(m, "lo", "and")),
    "upper-union-equality": ("upper{k}(V|W) = upper{k}(V) | upper{k}(W)", Domain.SYM_PAIR, lambda m: _pairwise(m, "up", "or")),
    "lower-union-equality": ("lower{k}(V|W) = lower{k}(V) | lower{k}(W)", Domain.SYM_PAIR, lambda m: _pairwise(m, "lo", "or")),
    "upper-intersection-equality": ("upper{k}(V&W) = upper{k}(V) & upper{k}(W)", Domain.SYM_PAIR, lambda m: _pairwise(m, "up", "and")),
}

for _m in PRIMAL_MODELS:
    for _prop, _fixture in _COMPANIONS[_m].items():
        _text, _domain, _factory = _TEXT[_prop]
        _target(f"{_m}-{_prop}", _text.format(k=str(_m)[1]), _domain, [_m], _fixture, remark=_prop not in _EXTRA)(_factory(_m))


@_target("N2-duality", "lower2(V) = (upper2(V'))'", Domain.SINGLE, [N2], "swap-pair")
def _n2_duality(env, pt):
    t = _tab(env, pt, N2)
    return t.lo[pt.v] == env.full & ~t.up[env.full & ~pt.v]


# -- model-specific degeneracies that fail -------------------------------------------------


@_target("N3-lower-full-on-full", "lower3(U) = U", Domain.EDGE, [N3], "fan-out")
def _n3_full(env, pt):
    return _tab(env, pt, N3).lo[env.full] == env.full


@_target("N3-upper-empty-on-empty", "upper3(empty) = empty", Domain.EDGE, [N3], "fan-out")
def _n3_empty(env, pt):
    return _tab(env, pt, N3).up[0] == 0


@_target("N3-maximal-primal-lower-empty", "with P = all proper subsets, V != U implies lower3(V) = empty", Domain.SINGLE, [N3], "three-point", primal=MAX_PRIMAL)
def _n3_max_lower(env, pt):
    return pt.v == env.full or _tab(env, pt, N3).lo[pt.v] == 0


@_target("N3-maximal-primal-upper-empty", "with P = all proper subsets, upper3(V) = empty", Domain.SINGLE, [N3], "three-point", primal=MAX_PRIMAL)
def _n3_max_upper(env, pt):
    return _tab(env, pt, N3).up[pt.v] == 0


def _complement_member_full(m):
    def pred(env, pt):
        if (env.full & ~pt.v) not in env.members(pt.p):
            return True
        return _tab(env, pt, m).lo[pt.v] == env.full

    return pred


def _member_upper_empty(m):
    def pred(env, pt):
        if pt.v not in env.members(pt.p):
            return True
        return _tab(env, pt, m).up[pt.v] == 0

    return pred


_target("N3-complement-member-lower-full", "V' in P implies lower3(V) = U", Domain.SINGLE, [N3], "fan-out")(_complement_member_full(N3))
_target("N3-member-upper-empty", "V in P implies upper3(V) = empty", Domain.SINGLE, [N3], "three-point")(_member_upper_empty(N3))
_target("N4-complement-member-lower-full", "V' in P implies lower4(V) = U", Domain.SINGLE, [N4], "fan-out")(_complement_member_full(N4))
_target("N4-member-upper-empty", "V in P implies upper4(V) = empty", Domain.SINGLE, [N4], "fan-out")(_member_upper_empty(N4))


# -- converses ----------------------------------------------------------------------------


def _reflects(m, side):
    def pred(env, pt):
        t = _tab(env, pt, m)
        arr = t.lo if side == "lo" else t.up
        return not _sub(arr[pt.v], arr[pt.w]) or _sub(pt.v, pt.w)

    return pred


for _m, _side, _fixture in ((N1, "lo", "partial-chain"), (N2, "up", "swap-pair"), (N3, "lo", "fan-out"), (N4, "up", "fan-out")):
    _name = "lower" if _side == "lo" else "upper"
    _k = str(_m)[1]
    _target(
        f"{_m}-{_name}-reflects-inclusion",
        f"{_name}{_k}(V) <= {_name}{_k}(W) implies V <= W",
        Domain.PAIR,
        [_m],
        _fixture,
        remark=False,
    )(_reflects(_m, _side))


@_target("N1-upper-empty-implies-member", "upper1(V) = empty implies V in P", Domain.SINGLE, [N1], "partial-chain", remark=False)
def _n1_up_empty(env, pt):
    return _tab(env, pt, N1).up[pt.v] != 0 or pt.v in env.members(pt.p)


@_target("N1-lower-full-implies-complement-member", "lower1(V) = U implies V' in P", Domain.SINGLE, [N1], "sparse-loop", remark=False)
def _n1_lo_full(env, pt):
    return _tab(env, pt, N1).lo[pt.v] != env.full or (env.full & ~pt.v) in env.members(pt.p)


@_target("N2-upper-fixed-implies-member", "upper2(V) = V implies V in P", Domain.SINGLE, [N2], "swap-pair", remark=False)
def _n2_up_fixed(env, pt):
    return _tab(env, pt, N2).up[pt.v] != pt.v or pt.v in env.members(pt.p)


@_target("N4-upper-empty-implies-member", "upper4(V) = empty implies V in P", Domain.SINGLE, [N4], "fan-out", remark=False)
def _n4_up_empty(env, pt):
    return _tab(env, pt, N4).up[pt.v] != 0 or pt.v in env.members(pt.p)


@_target(
    "N3-lower-reflects-primal-inclusion",
    "lower3^P(V) <= lower3^Q(V) implies P <= Q",
    Domain.PRIMAL_PAIR,
    [N3],
    "fan-out",
    remark=False,
)
def _n3_primal_reflect(env, pt):
    a, b = _tab(env, pt, N3, primal=pt.p), _tab(env, pt, N3, primal=pt.q)
    return not _sub(a.lo[pt.v], b.lo[pt.v]) or env.members(pt.p) <= env.members(pt.q)


@_target(
    "N4-upper-reflects-primal-inclusion",
    "upper4^Q(V) <= upper4^P(V) implies P <= Q",
    Domain.PRIMAL_PAIR,
    [N4],
    "fan-out",
    remark=False,
)
def _n4_primal_reflect(env, pt):
    a, b = _tab(env, pt, N4, primal=pt.p), _tab(env, pt, N4, primal=pt.q)
    return not _sub(b.up[pt.v], a.up[pt.v]) or env.members(pt.p) <= env.members(pt.q)


def _accuracy_invariant(m):
    def pred(env, pt):
        return _tab(env, pt, m, primal=pt.p).acc[pt.v] == _tab(env, pt, m, primal=pt.q).acc[pt.v]

    return pred


for _m, _fixture in ((N1, "partial-chain"), (N2, "before-kind"), (N3, "three-point"), (N4, "partial-chain")):
    _target(
        f"{_m}-accuracy-primal-invariant",
        f"P <= Q implies sigma{str(_m)[1]}^P(V) = sigma{str(_m)[1]}^Q(V)",
        Domain.PRIMAL_CHAIN,
        [_m],
        _fixture,
        remark=False,
    )(_accuracy_invariant(_m))


# -- cross-model comparisons that only hold one way ---------------------------------------------


def _cross(a, b, part):
    def pred(env, pt):
        ta, tb = _tab(env, pt, a), _tab(env, pt, b)
        v = pt.v
        if part == "lo":
            return _sub(ta.lo[v], tb.lo[v])
        if part == "up":
            return _sub(ta.up[v], tb.up[v])
        if part == "bd":
            return _sub(ta.bd[v], tb.bd[v])
        return _le(ta.acc[v], tb.acc[v])

    return pred


_WORD = {"lo": "lower", "up": "upper", "bd": "boundary"}

for _a, _b, _part, _fixture in (
    (N3, N1, "lo", "reflexive-cycle"),
    (N1, N3, "up", "reflexive-cycle"),
    (N3, N1, "acc", "reflexive-cycle"),
    (N1, N4, "lo", "reflexive-cycle"),
    (N4, N1, "up", "reflexive-cycle"),
    (N1, N4, "acc", "reflexive-cycle"),
    (N1, Y, "lo", "reflexive-cycle"),
    (Y, N1, "up", "reflexive-cycle"),
    (N1, Y, "acc", "reflexive-cycle"),
    (N2, N1, "up", "partial-chain"),
    (N2, N1, "bd", "swap-pair"),
):
    if _part == "acc":
        _id, _text = f"{_a}-accuracy-at-most-{_b}", f"sigma_{_a}(V) <= sigma_{_b}(V)"
    else:
        _id, _text = f"{_a}-{_WORD[_part]}-within-{_b}-{_WORD[_part]}", f"{_WORD[_part]}_{_a}(V) <= {_WORD[_part]}_{_b}(V)"
    _target(_id, _text, Domain.SINGLE, [_a, _b], _fixture, remark=False)(_cross(_a, _b, _part))


def remark_targets() -> list[Target]:
    return [t for t in TARGETS.values() if t.remark]
