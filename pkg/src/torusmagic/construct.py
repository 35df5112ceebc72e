"""Direct supermagic labelings of C_n x C_m for same-parity dimensions.

Each diagonal receives labels drawn from contiguous blocks: horizontal
edges counted upward, vertical edges downward, so that every HV-corner
and VH-corner carries one of five partial weights

    2nm, 2nm+1, 2nm+2, 2nm+l, 2nm-l+2

arranged so that the HV weight of a vertex (from its diagonal) and the
VH weight (from the successor diagonal) always sum to the magic constant
4nm+2.  The "exceptional" corners carrying 2nm+l and 2nm-l+2 are aligned
across consecutive diagonals by the choice of start columns: diagonal 1
starts at column d+1 (wrapped), every other diagonal j at column j.

Odd/odd grids with gcd(n,m) > 1 additionally reroute the last two
diagonals: d-1 gets its exceptional corner shifted to step l'+2, and the
last diagonal interleaves two label blocks with stride 2 so that its
VH-corners absorb the seam back into diagonal 1.

Even/even grids need no exceptional diagonals: odd diagonals take the
plain increasing/decreasing blocks and even diagonals the one-step
rotation that moves the top label to the front.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .diagonals import CornerPos, Diagonal, decompose
from .grid import GridDims, dims as make_dims, wrap
from .labeling import Labeling

ODD_ODD = "odd-odd"
EVEN_EVEN = "even-even"


class UnsupportedShape(ValueError):
    """Grid shape outside what the direct constructions cover."""


class PlanShapeMismatch(ValueError):
    """Construction plan inconsistent with the grid's parity."""


@dataclass(frozen=True)
class Unsupported:
    """Typed refusal: the shape needs the search module instead."""

    n: int
    m: int
    reason: str
    suggestion: str


@dataclass(frozen=True)
class ConstructionPlan:
    """Which construction ran and where each diagonal starts."""

    variant: str
    start_cols: tuple[int, ...]


def plan_for(variant: str, dims: GridDims) -> ConstructionPlan:
    """Canonical plan: diagonal 1 starts at column d+1 (wrapped into 1..m),
    diagonal j at column j otherwise.

    Both variants share the start columns: the wrap-around seam between the
    last diagonal and diagonal 1 aligns its exceptional corners only when
    diagonal 1 starts at column d+1.  (On square grids that wraps to
    column 1, so all diagonals start at their own index.)
    """
    if variant == ODD_ODD:
        if dims.n % 2 == 0 or dims.m % 2 == 0 or dims.d == 1:
            raise PlanShapeMismatch(f"{variant} needs odd n, m with gcd > 1, got {dims.n}x{dims.m}")
    elif variant == EVEN_EVEN:
        if dims.n % 2 == 1 or dims.m % 2 == 1:
            raise PlanShapeMismatch(f"{variant} needs even n and m, got {dims.n}x{dims.m}")
    else:
        raise PlanShapeMismatch(f"unknown variant {variant!r}")
    starts = [wrap(dims.d + 1, dims.m)] + list(range(2, dims.d + 1))
    return ConstructionPlan(variant=variant, start_cols=tuple(starts))


def _plain_blocks(j: int, l: int, q: int) -> tuple[list[int], list[int]]:
    # Increasing horizontals, decreasing verticals: every HV-corner sums
    # to 2nm+1, VH-corner 1 to 2nm-l+2, later VH-corners to 2nm+2.
    h = [(j - 1) * l + k for k in range(1, l + 1)]
    v = [q - (j - 1) * l - k + 1 for k in range(1, l + 1)]
    return h, v


def _rotated_blocks(j: int, l: int, q: int) -> tuple[list[int], list[int]]:
    # Horizontal labels shifted one step down with jl moved to the front:
    # HV-corner 1 sums to 2nm+l (exceptional), the rest to 2nm; all
    # VH-corners to 2nm+1.
    h = [j * l] + [(j - 1) * l + k - 1 for k in range(2, l + 1)]
    v = [q - (j - 1) * l - k + 1 for k in range(1, l + 1)]
    return h, v


def _shifted_blocks(d: int, l: int, lp: int, q: int) -> tuple[list[int], list[int]]:
    # Diagonal d-1 (odd/odd only): same label blocks as the rotated form
    # but with the exceptional HV-corner moved to step l'+2 so that it
    # faces the exceptional VH-corner of the interleaved last diagonal.
    j = d - 1
    h = [(j - 1) * l + k + lp - 1 if k <= lp + 2 else (j - 1) * l + k - lp - 2
         for k in range(1, l + 1)]
    v = [q - (j - 1) * l - k - lp + 1 if k <= lp + 1 else q - (j - 1) * l - k + lp + 2
         for k in range(1, l + 1)]
    return h, v


def _interleaved_blocks(d: int, l: int, lp: int, q: int) -> tuple[list[int], list[int]]:
    # Last diagonal (odd/odd only): consumes the two central label blocks
    # with stride 2.  HV-corner 1 carries 2nm+l, VH-corner l'+2 carries
    # 2nm-l+2, everything else 2nm / 2nm+2.
    h = [d * l]
    h += [(d - 1) * l + 2 * k - 2 if k <= lp + 1 else (d - 2) * l + 2 * k - 2
          for k in range(2, l + 1)]
    v = [q - (d - 1) * l - 2 * k + 2 if k <= lp + 1 else q - (d - 2) * l - 2 * k + 2
         for k in range(1, l + 1)]
    return h, v


class _Writer:
    """Write-once accumulator; formula transcription errors fail immediately."""

    def __init__(self, dims: GridDims) -> None:
        self.dims = dims
        self.h = np.zeros((dims.n, dims.m), dtype=np.int64)
        self.v = np.zeros((dims.n, dims.m), dtype=np.int64)

    def put_diagonal(self, diag: Diagonal, h_labels: list[int], v_labels: list[int]) -> None:
        for k in range(1, diag.length + 1):
            self._put(diag.h(k), h_labels[k - 1])
            self._put(diag.v(k), v_labels[k - 1])

    def _put(self, e, value: int) -> None:
        assert 1 <= value <= self.dims.q, f"label {value} out of range at {e}"
        matrix = self.h if e.orient == "H" else self.v
        assert matrix[e.i - 1, e.j - 1] == 0, f"double write at {e}"
        matrix[e.i - 1, e.j - 1] = value

    def finish(self) -> Labeling:
        assert (self.h > 0).all() and (self.v > 0).all(), "unlabeled edges remain"
        return Labeling(self.dims, self.h, self.v)


def construct_odd_odd(dims: GridDims) -> Labeling:
    """Supermagic labeling for n, m odd with gcd(n,m) > 1.

    For n > m the transposed instance is built and flipped back; corner
    audits apply to the n <= m orientation.
    """
    if dims.n % 2 == 0 or dims.m % 2 == 0:
        raise UnsupportedShape(f"odd/odd construction needs odd n, m, got {dims.n}x{dims.m}")
    if dims.d == 1:
        raise UnsupportedShape(
            f"odd/odd construction needs gcd(n,m) > 1, got coprime {dims.n}x{dims.m}"
        )
    if dims.n > dims.m:
        return construct_odd_odd(make_dims(dims.m, dims.n)).transpose()

    l, d, q, lp = dims.l, dims.d, dims.q, dims.lp
    assert lp is not None and d % 2 == 1 and d >= 3
    plan = plan_for(ODD_ODD, dims)
    writer = _Writer(dims)
    for diag in decompose(dims, list(plan.start_cols)):
        j = diag.index
        if j == d:
            blocks = _interleaved_blocks(d, l, lp, q)
        elif j == d - 1:
            blocks = _shifted_blocks(d, l, lp, q)
        elif j % 2 == 1:
            blocks = _plain_blocks(j, l, q)
        else:
            blocks = _rotated_blocks(j, l, q)
        writer.put_diagonal(diag, *blocks)
    return writer.finish()


def construct_even_even(dims: GridDims) -> Labeling:
    """Supermagic labeling for n, m even (so d is even and no diagonal
    needs the shifted or interleaved treatment)."""
    if dims.n % 2 == 1 or dims.m % 2 == 1:
        raise UnsupportedShape(f"even/even construction needs even n, m, got {dims.n}x{dims.m}")
    if dims.n > dims.m:
        return construct_even_even(make_dims(dims.m, dims.n)).transpose()

    l, d, q = dims.l, dims.d, dims.q
    plan = plan_for(EVEN_EVEN, dims)
    writer = _Writer(dims)
    for diag in decompose(dims, list(plan.start_cols)):
        j = diag.index
        blocks = _plain_blocks(j, l, q) if j % 2 == 1 else _rotated_blocks(j, l, q)
        writer.put_diagonal(diag, *blocks)
    return writer.finish()


def construct(n: int, m: int) -> Labeling | Unsupported:
    """Dispatch to the covering construction, or explain why none applies."""
    d = make_dims(n, m)
    if n % 2 == 1 and m % 2 == 1:
        if math.gcd(n, m) == 1:
            return Unsupported(n, m, reason="coprime odd",
                               suggestion=f"no direct construction; try: search {n} {m}")
        return construct_odd_odd(d)
    if n % 2 == 0 and m % 2 == 0:
        return construct_even_even(d)
    return Unsupported(n, m, reason="mixed parity",
                       suggestion=f"no direct construction; try: search {n} {m}")


@dataclass(frozen=True)
class ExpectedCornerTable:
    """Expected partial weight for every corner of every diagonal."""

    dims: GridDims
    plan: ConstructionPlan
    entries: dict[CornerPos, int]

    def __getitem__(self, c: CornerPos) -> int:
        return self.entries[c]


def expected_corner_table(plan: ConstructionPlan, dims: GridDims) -> ExpectedCornerTable:
    """Partial weights the construction promises at each (diagonal, k, kind).

    Within each diagonal at most one HV-corner carries 2nm+l and at most
    one VH-corner carries 2nm-l+2; for every vertex the HV entry of its
    diagonal plus the VH entry of the successor diagonal is 4nm+2.
    """
    if plan != plan_for(plan.variant, dims):
        raise PlanShapeMismatch(f"plan {plan} is not the canonical plan for {dims.n}x{dims.m}")
    base, l, d = dims.q, dims.l, dims.d  # base = 2nm
    hv = {}
    vh = {}
    for j in range(1, d + 1):
        if plan.variant == ODD_ODD:
            lp = dims.lp
            if j == d:
                hv[j] = lambda k: base + l if k == 1 else base
                vh[j] = lambda k, lp=lp: base - l + 2 if k == lp + 2 else base + 2
            elif j == d - 1:
                hv[j] = lambda k, lp=lp: base + l if k == lp + 2 else base
                vh[j] = lambda k: base + 1
            elif j % 2 == 1:
                hv[j] = lambda k: base + 1
                vh[j] = lambda k: base - l + 2 if k == 1 else base + 2
            else:
                hv[j] = lambda k: base + l if k == 1 else base
                vh[j] = lambda k: base + 1
        else:
            if j % 2 == 1:
                hv[j] = lambda k: base + 1
                vh[j] = lambda k: base - l + 2 if k == 1 else base + 2
            else:
                hv[j] = lambda k: base + l if k == 1 else base
                vh[j] = lambda k: base + 1
    entries = {}
    for j in range(1, d + 1):
        for k in range(1, l + 1):
            entries[CornerPos(j, k, "HV")] = hv[j](k)
            entries[CornerPos(j, k, "VH")] = vh[j](k)
    return ExpectedCornerTable(dims=dims, plan=plan, entries=entries)
