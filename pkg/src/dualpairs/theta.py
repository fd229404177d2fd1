"""Descent and lift of nilpotent orbits along the moment maps of a dual pair.

For a dual pair (G(V), G(V')) with epsilon * epsilon' = -1, an orbit O' in
g' descends to the orbit O in g obtained by erasing the first column of its
diagram, keeping the multiplicity forms, and padding with 1-boxes; the lift
is the inverse operation, resolved to the closure-maximal candidate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (AmbiguousMaximum, EmptyLift, IncompatiblePair,
                     NotInImage, UnsupportedRealClosure)
from .forms import (FormedSpace, GroupDescriptor, direct_sum, embeds,
                    formed_space, group_factor, isometry_group,
                    orth_complement, tensor_with_sl2)
from .orbits import (DEFAULT_DIM_BOUND, AdmissibleTableau, TableauRow,
                     closure_leq, enumerate_orbits, validate)


def _zero_space(model: FormedSpace, tag: tuple) -> FormedSpace:
    from .forms import SIG_KINDS
    if tag in SIG_KINDS:
        return formed_space(*tag, signature=(0, 0))
    return formed_space(*tag, dim=0)


def _check_pair(op_space: FormedSpace, v: FormedSpace):
    if (op_space.base, op_space.division) != (v.base, v.division) \
            or op_space.epsilon * v.epsilon != -1:
        raise IncompatiblePair("spaces do not form a dual pair",
                               left=v.render(), right=op_space.render())


def _descent_pieces(op: AdmissibleTableau, v: FormedSpace):
    """Core (rows >= 3 after erasure), U1 (2-row mult), s (1-row mult dim)."""
    validate(op)
    eps = v.epsilon
    core = _zero_space(v, v.tag())
    u1 = _zero_space(v, (v.base, v.division, eps))
    s_mult = None
    for row in op.rows:
        if row.t >= 3:
            core = direct_sum(core, tensor_with_sl2(row.mult, row.t - 1))
        elif row.t == 2:
            u1 = row.mult
        else:
            s_mult = row.mult
    return core, u1, s_mult


def in_moment_image(op: AdmissibleTableau, v: FormedSpace) -> bool:
    """Whether orbits in op lie in the image of the moment map from Hom(V, V')."""
    _check_pair(op.space, v)
    core, u1, _ = _descent_pieces(op, v)
    return embeds(direct_sum(core, u1), v)


@dataclass(frozen=True)
class DescentResult:
    source: AdmissibleTableau
    target: AdmissibleTableau
    U: FormedSpace
    U1: FormedSpace
    a: int
    b: int
    s: int
    strict: bool

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(),
                "U": self.U.to_json(), "U1": self.U1.to_json(),
                "a": self.a, "b": self.b, "s": self.s, "strict": self.strict}


def generalized_descent(op: AdmissibleTableau, v: FormedSpace) -> DescentResult:
    """Erase the first column of op's diagram, pad with 1-boxes inside V."""
    _check_pair(op.space, v)
    core, u1, s_mult = _descent_pieces(op, v)
    if not embeds(direct_sum(core, u1), v):
        raise NotInImage("orbit is not in the moment-map image",
                         orbit=op.diagram(), space=v.render())
    u = orth_complement(core, v)
    a = u1.dim
    b = u.dim - a
    rows = [TableauRow(row.t - 1, row.mult) for row in op.rows if row.t >= 3]
    if not u.is_zero:
        rows.append(TableauRow(1, u))
    target = AdmissibleTableau(v, tuple(rows))
    validate(target)
    return DescentResult(source=op, target=target, U=u, U1=u1, a=a, b=b,
                         s=s_mult.dim if s_mult is not None else 0,
                         strict=b == 0)


def theta_lift(o: AdmissibleTableau, vp: FormedSpace,
               bound: int = DEFAULT_DIM_BOUND) -> AdmissibleTableau:
    """The closure-maximal orbit over vp whose descent to o.space equals o."""
    if o.space.base != "C" or vp.base != "C":
        raise UnsupportedRealClosure("orbit lift needs the complex closure order")
    _check_pair(vp, o.space)
    candidates = []
    for op in enumerate_orbits(vp, bound):
        if not in_moment_image(op, o.space):
            continue
        if generalized_descent(op, o.space).target == o:
            candidates.append(op)
    if not candidates:
        raise EmptyLift("no orbit descends to the given one",
                        orbit=o.diagram(), space=vp.render())
    best = candidates[0]
    for cand in candidates[1:]:
        if closure_leq(best, cand):
            best = cand
    if not all(closure_leq(cand, best) for cand in candidates):
        raise AmbiguousMaximum("candidate set has no unique closure maximum",
                               candidates=[c.diagram() for c in candidates])
    return best


def k_descent(op_real: AdmissibleTableau, v_real: FormedSpace):
    """Real-form descent; None when the formed-space embedding fails over R."""
    if op_real.space.base != "R" or v_real.base != "R":
        raise IncompatiblePair("real descent needs base R on both sides",
                               left=v_real.render(), right=op_real.space.render())
    _check_pair(op_real.space, v_real)
    if not in_moment_image(op_real, v_real):
        return None
    return generalized_descent(op_real, v_real).target


@dataclass(frozen=True)
class PairFactorization:
    m_xxp: GroupDescriptor
    l: GroupDescriptor
    lp: GroupDescriptor
    l_space: FormedSpace
    lp_space: FormedSpace

    def to_json(self) -> dict:
        return {"M_XXp": self.m_xxp.to_json(), "L": self.l.to_json(),
                "Lp": self.lp.to_json(), "L_space": self.l_space.to_json(),
                "Lp_space": self.lp_space.to_json()}


def pair_factorization(dr: DescentResult) -> PairFactorization:
    """Common stabilizer M_{X,X'} plus the smaller dual pair (L, L')."""
    factors = tuple(group_factor(row.mult) for row in dr.source.rows if row.t >= 2)
    m_xxp = GroupDescriptor(factors)
    ker_t = orth_complement(dr.U1, dr.U)
    one_row = dr.source.row_of_length(1)
    lp_space = one_row.mult if one_row is not None else \
        _zero_space(dr.source.space, dr.source.space.tag())
    return PairFactorization(m_xxp=m_xxp, l=isometry_group(ker_t),
                             lp=isometry_group(lp_space),
                             l_space=ker_t, lp_space=lp_space)


def _weight_dims(diagram: tuple) -> dict:
    """D-dimension of each H-weight space of the standard realization."""
    out = {}
    for t in diagram:
        for r in range(t):
            k = t - 1 - 2 * r
            out[k] = out.get(k, 0) + 1
    return out


def reduced_pair_dims(dr: DescentResult) -> tuple:
    """(dim W_{gamma,gamma'}, dim W_0) over the base field.

    W_{gamma,gamma'} = Hom_D(Ker T, 1-row multiplicity of O'); W_0 pairs the
    matching weight spaces of the two sl2 gradings.
    """
    d = dr.target.space.d
    dim_w = d * dr.b * dr.s
    wv = _weight_dims(dr.target.diagram())
    wvp = _weight_dims(dr.source.diagram())
    dim_w0 = sum(d * wv[k] * wvp.get(k, 0) for k in wv)
    return dim_w, dim_w0
