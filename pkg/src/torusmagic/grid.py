"""Torus grid C_n x C_m: dimensions, canonical edge naming, vertex incidence.

The graph is the Cartesian product of two cycles: vertices x_{ij} for
i in 1..n (rows) and j in 1..m (columns), with edges between positions
that differ by 1 (mod n) in the row or by 1 (mod m) in the column.

All public indices are 1-based; modular wrap is ((x-1) mod n) + 1, so
formulas can be transcribed without off-by-one adjustments.

Every edge has exactly one canonical name:

    H(i,j) = the horizontal edge x_{i,j} -- x_{i,j+1}
    V(i,j) = the vertical   edge x_{i,j} -- x_{i+1,j}

(second coordinate wrapping mod m, first mod n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class DimensionTooSmall(ValueError):
    """Raised when a cycle length is below 3 (no C_1 or C_2 factors)."""


def wrap(x: int, size: int) -> int:
    """Wrap an integer into the 1-based range 1..size."""
    return (x - 1) % size + 1


@dataclass(frozen=True)
class GridDims:
    """Dimensions of C_n x C_m with the derived diagonal parameters.

    l = lcm(n,m) is the half-length of every diagonal cycle, d = gcd(n,m)
    the number of diagonals, q = 2nm the edge count.  lp = (l-1)/2 is
    defined only when l is odd (equivalently when n and m are both odd).
    """

    n: int
    m: int
    l: int
    d: int
    q: int
    lp: int | None

    def __post_init__(self) -> None:
        if self.l * self.d != self.n * self.m:
            raise ValueError("inconsistent lcm/gcd")


def dims(n: int, m: int) -> GridDims:
    """Build GridDims for C_n x C_m.  Requires n, m >= 3."""
    if n < 3 or m < 3:
        raise DimensionTooSmall(f"need n, m >= 3, got ({n}, {m})")
    d = math.gcd(n, m)
    l = n * m // d
    lp = (l - 1) // 2 if l % 2 == 1 else None
    return GridDims(n=n, m=m, l=l, d=d, q=2 * n * m, lp=lp)


@dataclass(frozen=True)
class VertexRef:
    """Vertex x_{ij}, i in 1..n, j in 1..m.  Degree is always 4."""

    i: int
    j: int


@dataclass(frozen=True)
class EdgeRef:
    """Canonical name of one torus edge: orientation 'H' or 'V' plus 1-based (i, j)."""

    orient: str
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.orient not in ("H", "V"):
            raise ValueError(f"orient must be 'H' or 'V', got {self.orient!r}")

    def endpoints(self, dims: GridDims) -> tuple[VertexRef, VertexRef]:
        """The two vertices of this edge, in trace order."""
        if self.orient == "H":
            return (VertexRef(self.i, self.j),
                    VertexRef(self.i, wrap(self.j + 1, dims.m)))
        return (VertexRef(self.i, self.j),
                VertexRef(wrap(self.i + 1, dims.n), self.j))

    def sort_key(self) -> tuple[int, int, str]:
        """Lexicographic order by (i, j, orient), 'H' before 'V'."""
        return (self.i, self.j, self.orient)

    def __str__(self) -> str:
        return f"{self.orient}({self.i},{self.j})"


def H(i: int, j: int) -> EdgeRef:
    return EdgeRef("H", i, j)


def V(i: int, j: int) -> EdgeRef:
    return EdgeRef("V", i, j)


def all_vertices(dims: GridDims):
    """All nm vertices in row-major order."""
    for i in range(1, dims.n + 1):
        for j in range(1, dims.m + 1):
            yield VertexRef(i, j)


def all_edges(dims: GridDims):
    """All q edges: the horizontal block row-major, then the vertical block."""
    for i in range(1, dims.n + 1):
        for j in range(1, dims.m + 1):
            yield EdgeRef("H", i, j)
    for i in range(1, dims.n + 1):
        for j in range(1, dims.m + 1):
            yield EdgeRef("V", i, j)


def check_vertex(v: VertexRef, dims: GridDims) -> None:
    if not (1 <= v.i <= dims.n and 1 <= v.j <= dims.m):
        raise ValueError(f"vertex {v} out of range for C_{dims.n} x C_{dims.m}")


def incident_edges(v: VertexRef, dims: GridDims) -> set[EdgeRef]:
    """The 4 canonical edges at vertex x_{ij}.

    Two horizontal (toward columns j-1 and j+1) and two vertical (toward
    rows i-1 and i+1): H(i,j), H(i,j-1), V(i,j), V(i-1,j), wrapping mod m/n.
    """
    check_vertex(v, dims)
    return {
        EdgeRef("H", v.i, v.j),
        EdgeRef("H", v.i, wrap(v.j - 1, dims.m)),
        EdgeRef("V", v.i, v.j),
        EdgeRef("V", wrap(v.i - 1, dims.n), v.j),
    }
