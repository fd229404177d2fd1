"""Formed spaces over the real and complex base fields.

A formed space is a finite-dimensional right module over a division algebra
D in {R, C, H} carrying a non-degenerate epsilon-Hermitian form.  Over base
field R all three divisions occur; over base field C only D = C.  Isometry
classes are discrete: some types are classified by a signature (p, q), the
others by dimension alone (with a parity constraint for the symplectic
ones).  Everything here is invariant arithmetic; explicit Gram matrices
live in the matrix oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadShape, MismatchedType, NotEmbeddable

# classification: which (base, division, epsilon) triples carry a signature
SIG_KINDS = {("R", "R", 1), ("R", "C", 1), ("R", "C", -1), ("R", "H", 1)}
DIM_KINDS = {("R", "R", -1), ("R", "H", -1), ("C", "C", 1), ("C", "C", -1)}
# dim-classified types whose dimension over D must be even
EVEN_DIM_KINDS = {("R", "R", -1), ("C", "C", -1)}

# dimension of D over the base field F
_DIM_F_D = {("R", "R"): 1, ("R", "C"): 2, ("R", "H"): 4, ("C", "C"): 1}
# dimension of D over R (realification width used by the oracle)
_DIM_R_D = {"R": 1, "C": 2, "H": 4}


@dataclass(frozen=True)
class FormedSpace:
    base: str
    division: str
    epsilon: int
    signature: tuple | None
    dim: int

    def __post_init__(self):
        key = (self.base, self.division, self.epsilon)
        if (self.base, self.division) not in _DIM_F_D:
            raise BadShape(f"invalid base/division pair ({self.base},{self.division})")
        if self.epsilon not in (1, -1):
            raise BadShape(f"epsilon must be +1 or -1, got {self.epsilon}")
        if key in SIG_KINDS:
            if self.signature is None:
                raise BadShape(f"type {key} is signature-classified", kind=key)
            p, q = self.signature
            if p < 0 or q < 0 or p + q != self.dim:
                raise BadShape("signature must be non-negative and sum to dim",
                               signature=self.signature, dim=self.dim)
        else:
            if self.signature is not None:
                raise BadShape(f"type {key} is dimension-classified", kind=key)
            if self.dim < 0:
                raise BadShape("dimension must be non-negative", dim=self.dim)
            if key in EVEN_DIM_KINDS and self.dim % 2 != 0:
                raise BadShape("symplectic type requires even dimension",
                               kind=key, dim=self.dim)

    # -- invariants ------------------------------------------------------

    @property
    def kind(self) -> str:
        return "sig" if (self.base, self.division, self.epsilon) in SIG_KINDS else "dim"

    @property
    def d(self) -> int:
        """dim_F D for this space's base field."""
        return _DIM_F_D[(self.base, self.division)]

    @property
    def dim_over_r(self) -> int:
        """dim of D over R, the realification width."""
        return _DIM_R_D[self.division]

    @property
    def dim_f(self) -> int:
        """Dimension over the base field."""
        return self.d * self.dim

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def tag(self) -> tuple:
        return (self.base, self.division, self.epsilon)

    # -- encoding --------------------------------------------------------

    def to_json(self) -> dict:
        out = {"base": self.base, "division": self.division, "epsilon": self.epsilon}
        if self.kind == "sig":
            out["signature"] = list(self.signature)
        else:
            out["dim"] = self.dim
        return out

    @staticmethod
    def from_json(obj: dict) -> "FormedSpace":
        if not isinstance(obj, dict):
            raise ValueError("formed space must be a JSON object")
        unknown = set(obj) - {"base", "division", "epsilon", "signature", "dim"}
        if unknown:
            raise ValueError(f"unknown formed-space fields {sorted(unknown)}")
        try:
            base, division, eps = obj["base"], obj["division"], obj["epsilon"]
        except KeyError as exc:
            raise ValueError(f"formed space missing field {exc}") from exc
        has_sig = "signature" in obj
        has_dim = "dim" in obj
        if has_sig == has_dim:
            raise ValueError("exactly one of 'signature'/'dim' must be present")
        try:
            if has_sig:
                p, q = obj["signature"]
                return formed_space(base, division, eps, signature=(int(p), int(q)))
            return formed_space(base, division, eps, dim=int(obj["dim"]))
        except BadShape as exc:
            raise ValueError(str(exc)) from exc

    def render(self) -> str:
        sign = "+1" if self.epsilon > 0 else "-1"
        if self.kind == "sig":
            inv = f"sig=({self.signature[0]},{self.signature[1]})"
        else:
            inv = f"dim={self.dim}"
        return f"{self.base},{self.division},{sign} {inv}"


def formed_space(base: str, division: str, epsilon: int,
                 signature: tuple | None = None, dim: int | None = None) -> FormedSpace:
    if signature is not None:
        p, q = signature
        return FormedSpace(base, division, epsilon, (int(p), int(q)), int(p) + int(q))
    if dim is None:
        raise BadShape("one of signature/dim is required")
    return FormedSpace(base, division, epsilon, None, int(dim))


# convenience constructors for the seven families

def orthogonal_space(p: int, q: int) -> FormedSpace:
    return formed_space("R", "R", 1, signature=(p, q))


def symplectic_space(dim: int) -> FormedSpace:
    return formed_space("R", "R", -1, dim=dim)


def hermitian_space(p: int, q: int) -> FormedSpace:
    return formed_space("R", "C", 1, signature=(p, q))


def skew_hermitian_space(p: int, q: int) -> FormedSpace:
    return formed_space("R", "C", -1, signature=(p, q))


def quaternionic_hermitian_space(p: int, q: int) -> FormedSpace:
    return formed_space("R", "H", 1, signature=(p, q))


def quaternionic_skew_space(dim: int) -> FormedSpace:
    return formed_space("R", "H", -1, dim=dim)


def complex_orthogonal_space(dim: int) -> FormedSpace:
    return formed_space("C", "C", 1, dim=dim)


def complex_symplectic_space(dim: int) -> FormedSpace:
    return formed_space("C", "C", -1, dim=dim)


# -- operations ----------------------------------------------------------


def _check_same_type(a: FormedSpace, b: FormedSpace):
    if a.tag() != b.tag():
        raise MismatchedType("spaces have different (base, division, epsilon)",
                             left=a.render(), right=b.render())


def direct_sum(a: FormedSpace, b: FormedSpace) -> FormedSpace:
    _check_same_type(a, b)
    if a.kind == "sig":
        return formed_space(*a.tag(), signature=(a.signature[0] + b.signature[0],
                                                 a.signature[1] + b.signature[1]))
    return formed_space(*a.tag(), dim=a.dim + b.dim)


def tensor_with_sl2(a: FormedSpace, m: int) -> FormedSpace:
    """Tensor with the m-dimensional irreducible and its (-1)^(m-1)-symmetric form.

    The form on F^m is normalized to signature (ceil(m/2), floor(m/2)) over R.
    """
    if m < 1:
        raise BadShape("tensor length must be positive", m=m)
    eps = a.epsilon * (-1) ** (m - 1)
    tag = (a.base, a.division, eps)
    if a.kind == "sig":
        p, q = a.signature
        if m % 2 == 1:
            hi, lo = (m + 1) // 2, m // 2
            return formed_space(*tag, signature=(p * hi + q * lo, p * lo + q * hi))
        n = (p + q) * m
        if tag in SIG_KINDS:
            return formed_space(*tag, signature=(n // 2, n // 2))
        return formed_space(*tag, dim=n)
    n = a.dim * m
    if tag in SIG_KINDS:
        # only reachable for even m, so n is even
        return formed_space(*tag, signature=(n // 2, n // 2))
    return formed_space(*tag, dim=n)


def embeds(a: FormedSpace, b: FormedSpace) -> bool:
    _check_same_type(a, b)
    if a.kind == "sig":
        return a.signature[0] <= b.signature[0] and a.signature[1] <= b.signature[1]
    return a.dim <= b.dim


def orth_complement(a: FormedSpace, b: FormedSpace) -> FormedSpace:
    """The unique C with a + C = b (Witt cancellation)."""
    if not embeds(a, b):
        raise NotEmbeddable("no isometric embedding", sub=a.render(), ambient=b.render())
    if a.kind == "sig":
        return formed_space(*a.tag(), signature=(b.signature[0] - a.signature[0],
                                                 b.signature[1] - a.signature[1]))
    return formed_space(*a.tag(), dim=b.dim - a.dim)


def complexify(v: FormedSpace) -> FormedSpace:
    """Extension of scalars to C for base-R spaces of division R or H.

    Division C over R would complexify to a general linear group, which has
    no epsilon-Hermitian encoding here, so it is rejected.
    """
    if v.base == "C":
        return v
    if v.division == "R":
        return formed_space("C", "C", v.epsilon, dim=v.dim)
    if v.division == "H":
        return formed_space("C", "C", -v.epsilon, dim=2 * v.dim)
    raise MismatchedType("division C spaces have no formed complexification",
                         space=v.render())


# -- isometry groups -----------------------------------------------------


@dataclass(frozen=True)
class GroupFactor:
    family: str
    name: str
    lie_dim: int

    def to_json(self) -> dict:
        return {"family": self.family, "name": self.name, "lie_dim": self.lie_dim}


@dataclass(frozen=True)
class GroupDescriptor:
    factors: tuple

    @property
    def lie_dim(self) -> int:
        return sum(f.lie_dim for f in self.factors)

    @property
    def name(self) -> str:
        if not self.factors:
            return "1"
        return " x ".join(f.name for f in self.factors)

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    @property
    def is_real_symplectic(self) -> bool:
        return len(self.factors) == 1 and self.factors[0].family == "SpR"

    def __mul__(self, other: "GroupDescriptor") -> "GroupDescriptor":
        return GroupDescriptor(self.factors + other.factors)

    def to_json(self) -> dict:
        return {"name": self.name, "lie_dim": self.lie_dim,
                "factors": [f.to_json() for f in self.factors]}


def _pq_name(prefix: str, p: int, q: int) -> str:
    if p == 0 or q == 0:
        return f"{prefix}({p + q})"
    return f"{prefix}({p},{q})"


def group_factor(v: FormedSpace) -> GroupFactor:
    """The isometry group of a nonzero formed space, with its Lie dimension
    over the base field."""
    key = v.tag()
    n = v.dim
    if key == ("R", "R", 1):
        return GroupFactor("O", _pq_name("O", *v.signature), n * (n - 1) // 2)
    if key == ("R", "R", -1):
        return GroupFactor("SpR", f"Sp({n},R)", (n // 2) * (n + 1))
    if key in (("R", "C", 1), ("R", "C", -1)):
        return GroupFactor("U", _pq_name("U", *v.signature), n * n)
    if key == ("R", "H", 1):
        return GroupFactor("SpH", _pq_name("Sp", *v.signature), n * (2 * n + 1))
    if key == ("R", "H", -1):
        return GroupFactor("OstarH", f"O*({2 * n})", n * (2 * n - 1))
    if key == ("C", "C", 1):
        return GroupFactor("OC", f"O({n},C)", n * (n - 1) // 2)
    if key == ("C", "C", -1):
        return GroupFactor("SpC", f"Sp({n},C)", (n // 2) * (n + 1))
    raise BadShape("unclassifiable space", space=v.render())


def isometry_group(v: FormedSpace) -> GroupDescriptor:
    if v.is_zero:
        return GroupDescriptor(())
    return GroupDescriptor((group_factor(v),))


def iter_spaces(max_dim_f: int, bases=("R", "C"), include_zero: bool = False):
    """All formed spaces with 1 <= dim_F <= max_dim_f (0 included on request)."""
    combos = [(b, d) for (b, d) in _DIM_F_D if b in bases]
    for base, division in sorted(combos):
        d = _DIM_F_D[(base, division)]
        for eps in (1, -1):
            key = (base, division, eps)
            lo = 0 if include_zero else 1
            for n in range(lo, max_dim_f // d + 1):
                if key in EVEN_DIM_KINDS and n % 2 != 0:
                    continue
                if key in SIG_KINDS:
                    for p in range(n + 1):
                        yield formed_space(base, division, eps, signature=(p, n - p))
                else:
                    yield formed_space(base, division, eps, dim=n)
