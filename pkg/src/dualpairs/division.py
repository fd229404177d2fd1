"""The three real division algebras with exact rational coordinates.

Elements are tuples of Fraction in the basis (1,), (1, i) or (1, i, j, k).
Left/right multiplication matrices feed the matrix realizations: a module
over D is realified with the division coordinate innermost, D-linear maps
become real matrices commuting with the right-multiplication structures.
"""

from __future__ import annotations

from fractions import Fraction

from .rational import frac, zeros


class DivisionAlgebra:
    def __init__(self, name: str, dim: int, mul_fn):
        self.name = name
        self.dim = dim
        self._mul = mul_fn

    def scalar(self, x) -> tuple:
        return (frac(x),) + (Fraction(0),) * (self.dim - 1)

    def unit(self, k: int) -> tuple:
        return tuple(Fraction(1 if i == k else 0) for i in range(self.dim))

    def zero(self) -> tuple:
        return (Fraction(0),) * self.dim

    def mul(self, x: tuple, y: tuple) -> tuple:
        return self._mul(x, y)

    def conj(self, x: tuple) -> tuple:
        return (x[0],) + tuple(-c for c in x[1:])

    def re(self, x: tuple) -> Fraction:
        return x[0]

    def lmat(self, x: tuple):
        """Real matrix of y -> x*y."""
        out = zeros(self.dim, self.dim)
        for b in range(self.dim):
            col = self._mul(x, self.unit(b))
            for a in range(self.dim):
                out[a][b] = col[a]
        return out

    def rmat(self, x: tuple):
        """Real matrix of y -> y*x."""
        out = zeros(self.dim, self.dim)
        for b in range(self.dim):
            col = self._mul(self.unit(b), x)
            for a in range(self.dim):
                out[a][b] = col[a]
        return out


def _mul_r(x, y):
    return (x[0] * y[0],)


def _mul_c(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _mul_h(x, y):
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return (
        x0 * y0 - x1 * y1 - x2 * y2 - x3 * y3,
        x0 * y1 + x1 * y0 + x2 * y3 - x3 * y2,
        x0 * y2 - x1 * y3 + x2 * y0 + x3 * y1,
        x0 * y3 + x1 * y2 - x2 * y1 + x3 * y0,
    )


REALS = DivisionAlgebra("R", 1, _mul_r)
COMPLEXES = DivisionAlgebra("C", 2, _mul_c)
QUATERNIONS = DivisionAlgebra("H", 4, _mul_h)

DIVISIONS = {"R": REALS, "C": COMPLEXES, "H": QUATERNIONS}
