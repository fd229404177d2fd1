"""Nilpotent orbits as Young tableaux with formed multiplicity spaces.

An orbit of the isometry group of V is a strictly decreasing list of row
lengths t_j, each carrying a formed multiplicity space whose sign is
epsilon_j = (-1)^(t_j - 1) * epsilon(V), subject to the admissibility
constraint that the tensor blocks sum to V.  Over the complex base field
the multiplicity form is determined by its dimension and the tableau is
just a constrained partition; over R the signatures distinguish the real
forms of an orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (BadShape, BadSign, BoundExceeded, NotAdmissible,
                     UnsupportedRealClosure)
from .forms import (FormedSpace, GroupDescriptor, complexify, direct_sum,
                    formed_space, group_factor, isometry_group,
                    tensor_with_sl2)

DEFAULT_DIM_BOUND = 12


@dataclass(frozen=True)
class TableauRow:
    t: int
    mult: FormedSpace

    def to_json(self) -> dict:
        return {"t": self.t, "mult": self.mult.to_json()}


@dataclass(frozen=True)
class AdmissibleTableau:
    space: FormedSpace
    rows: tuple

    def diagram(self) -> tuple:
        """Row lengths with multiplicity, weakly decreasing."""
        out = []
        for row in self.rows:
            out.extend([row.t] * row.mult.dim)
        return tuple(out)

    def row_of_length(self, t: int) -> TableauRow | None:
        for row in self.rows:
            if row.t == t:
                return row
        return None

    @property
    def is_zero_orbit(self) -> bool:
        return all(row.t == 1 for row in self.rows)

    def sort_key(self) -> tuple:
        rows = tuple(
            (r.t,) + (r.mult.signature if r.mult.kind == "sig" else (r.mult.dim, r.mult.dim))
            for r in self.rows)
        return (self.diagram(), rows)

    def to_json(self) -> dict:
        return {"space": self.space.to_json(),
                "rows": [r.to_json() for r in self.rows]}

    @staticmethod
    def from_json(obj: dict) -> "AdmissibleTableau":
        if not isinstance(obj, dict):
            raise ValueError("tableau must be a JSON object")
        unknown = set(obj) - {"space", "rows"}
        if unknown:
            raise ValueError(f"unknown tableau fields {sorted(unknown)}")
        try:
            space = FormedSpace.from_json(obj["space"])
            rows = tuple(TableauRow(int(r["t"]), FormedSpace.from_json(r["mult"]))
                         for r in obj["rows"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed tableau: {exc}") from exc
        return AdmissibleTableau(space, rows)

    def render(self) -> str:
        if not self.rows:
            return "(empty)"
        lines = []
        for row in self.rows:
            cells = "[]" * row.t
            lines.append(f"{cells}  [{row.mult.render()}]")
            lines.extend([cells] * (row.mult.dim - 1))
        return "\n".join(lines)


def tableau(space: FormedSpace, rows) -> AdmissibleTableau:
    """Build and validate a tableau from (t, mult) pairs."""
    tab = AdmissibleTableau(space, tuple(TableauRow(t, m) for t, m in rows))
    validate(tab)
    return tab


def zero_orbit(space: FormedSpace) -> AdmissibleTableau:
    if space.is_zero:
        return AdmissibleTableau(space, ())
    return AdmissibleTableau(space, (TableauRow(1, space),))


def validate(tab: AdmissibleTableau) -> None:
    """Raise unless tab is an admissible tableau for its ambient space."""
    ts = [row.t for row in tab.rows]
    if any(t < 1 for t in ts):
        raise BadShape("row lengths must be positive", rows=ts)
    if any(a <= b for a, b in zip(ts, ts[1:])):
        raise BadShape("row lengths must be strictly decreasing", rows=ts)
    if any(row.mult.dim == 0 for row in tab.rows):
        raise BadShape("rows must have nonzero multiplicity")
    total = formed_space(*tab.space.tag(),
                         **({"signature": (0, 0)} if tab.space.kind == "sig" else {"dim": 0}))
    for row in tab.rows:
        expected_eps = tab.space.epsilon * (-1) ** (row.t - 1)
        if (row.mult.base, row.mult.division) != (tab.space.base, tab.space.division):
            raise BadSign("multiplicity space over wrong base/division",
                          t=row.t, mult=row.mult.render())
        if row.mult.epsilon != expected_eps:
            raise BadSign("multiplicity sign must be (-1)^(t-1)*epsilon",
                          t=row.t, expected=expected_eps, got=row.mult.epsilon)
        total = direct_sum(total, tensor_with_sl2(row.mult, row.t))
    if total != tab.space:
        raise NotAdmissible("tensor blocks do not sum to the ambient space",
                            got=total.render(), expected=tab.space.render())


def _mult_choices(space: FormedSpace, t: int, count: int):
    """All multiplicity spaces of D-dimension count for a row of length t."""
    eps = space.epsilon * (-1) ** (t - 1)
    tag = (space.base, space.division, eps)
    from .forms import EVEN_DIM_KINDS, SIG_KINDS
    if tag in SIG_KINDS:
        return [formed_space(*tag, signature=(p, count - p)) for p in range(count + 1)]
    if tag in EVEN_DIM_KINDS and count % 2 != 0:
        return []
    return [formed_space(*tag, dim=count)]


def _partitions(n: int, max_part: int | None = None):
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_orbits(v: FormedSpace, bound: int = DEFAULT_DIM_BOUND) -> list:
    """All admissible tableaux over V, canonically ordered."""
    if v.dim_f > bound:
        raise BoundExceeded("space exceeds enumeration bound",
                            dim_f=v.dim_f, bound=bound)
    found = []
    for diagram in _partitions(v.dim):
        parts = {}
        for t in diagram:
            parts[t] = parts.get(t, 0) + 1
        lengths = sorted(parts, reverse=True)
        pools = [_mult_choices(v, t, parts[t]) for t in lengths]
        if any(not pool for pool in pools):
            continue
        for combo in _product(pools):
            tab = AdmissibleTableau(v, tuple(TableauRow(t, m)
                                             for t, m in zip(lengths, combo)))
            try:
                validate(tab)
            except NotAdmissible:
                continue
            found.append(tab)
    found.sort(key=lambda tb: tb.sort_key(), reverse=True)
    return found


def _product(pools):
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for rest in _product(pools[1:]):
            yield (head,) + rest


def complexify_tableau(tab: AdmissibleTableau) -> AdmissibleTableau:
    """Extension of scalars applied row by row (divisions R and H only)."""
    space = complexify(tab.space)
    rows = tuple(TableauRow(r.t, complexify(r.mult)) for r in tab.rows)
    out = AdmissibleTableau(space, rows)
    if tab.space.base == "R":
        validate(out)
    return out


def real_forms(diagram: tuple, v_real: FormedSpace,
               bound: int = DEFAULT_DIM_BOUND) -> list:
    """Real orbits over v_real whose complexified diagram equals diagram."""
    return [tab for tab in enumerate_orbits(v_real, bound)
            if complexify_tableau(tab).diagram() == tuple(diagram)]


def stabilizer(tab: AdmissibleTableau) -> GroupDescriptor:
    """The reductive stabilizer M_X, one isometry factor per row."""
    validate(tab)
    return GroupDescriptor(tuple(group_factor(row.mult) for row in tab.rows))


def column_partition(tab: AdmissibleTableau) -> list:
    diagram = tab.diagram()
    if not diagram:
        return []
    return [sum(1 for t in diagram if t > i) for i in range(diagram[0])]


def _dominates(lam: tuple, mu: tuple) -> bool:
    """Partial sums of lam dominate those of mu (same total)."""
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_m > acc_l:
            return False
    return True


def closure_leq(a: AdmissibleTableau, b: AdmissibleTableau) -> bool:
    """Zariski closure order (complex base field only): dominance of diagrams."""
    if a.space != b.space:
        raise BadShape("closure order needs a common ambient space",
                       left=a.space.render(), right=b.space.render())
    if a.space.base != "C":
        raise UnsupportedRealClosure("closure order implemented for base C only")
    return _dominates(b.diagram(), a.diagram())


def orbit_dimension(tab: AdmissibleTableau, bound: int = DEFAULT_DIM_BOUND) -> int:
    """dim of the orbit through tab over the base field, via the matrix oracle."""
    from . import oracle
    validate(tab)
    real = oracle.realize_triple(tab, bound=bound)
    g_dim = isometry_group(tab.space).lie_dim
    return g_dim - oracle.centralizer_dim(real.x, real.ambient)


@dataclass(frozen=True)
class WhittakerDatum:
    grading: dict
    dim_u: int
    dim_n: int
    dim_g_minus1: int
    heisenberg_case: bool
    stabilizer: GroupDescriptor

    def to_json(self) -> dict:
        return {"grading": {str(k): v for k, v in sorted(self.grading.items())},
                "dim_u": self.dim_u, "dim_n": self.dim_n,
                "dim_g_minus1": self.dim_g_minus1,
                "heisenberg_case": self.heisenberg_case,
                "stabilizer": self.stabilizer.to_json()}


def whittaker_datum(tab: AdmissibleTableau, bound: int = DEFAULT_DIM_BOUND) -> WhittakerDatum:
    """Grading dims of g under ad(H) plus the character/Heisenberg dichotomy."""
    from . import oracle
    validate(tab)
    real = oracle.realize_triple(tab, bound=bound)
    grading = oracle.graded_dims(real)
    dim_u = sum(v for k, v in grading.items() if k <= -2)
    g1 = grading.get(-1, 0)
    return WhittakerDatum(grading=grading, dim_u=dim_u, dim_n=dim_u + g1,
                          dim_g_minus1=g1, heisenberg_case=g1 != 0,
                          stabilizer=stabilizer(tab))
