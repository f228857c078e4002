"""Phase-torus analysis of one-cosine-per-coordinate closed curves.

Everything here works in units of pi: a phase pair (phi_y, phi_z) is the
rational (or float) point (u, v) = (phi_y/pi, phi_z/pi).  The xy-projection
of the curve

    x = cos(nx t),  y = cos(ny t + phi_y),  z = cos(nz t + phi_z)

has two families of double points ("row" crossings on nx-1 horizontal
lines and "column" crossings on ny-1 vertical lines), indexed by integer
pairs (k, j).  The exact path never evaluates a trig function: height
differences and tangent cross products factor into products of sines of
rational multiples of pi, so their signs are integer arithmetic.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .exactmath import PiRational, mod_inverse, sin_sign_int

__all__ = [
    "Phase",
    "LissajousSpec",
    "CrossingRecord",
    "PlanarDiagram",
    "Wall",
    "PhaseRegion",
    "DegenerateProjection",
    "SingularCrossing",
    "VerticalWall",
    "DEFAULT_TOLERANCE",
    "default_tolerance",
    "crossing_count",
    "enumerate_crossings",
    "resolve_heights",
    "extract_diagram",
    "reduce_to_fundamental",
    "decompose_phase_torus",
    "wall_adjacent_samples",
    "predict_flips",
    "sign_sequence_4plat",
    "classify_sample",
    "classify_spec",
    "pattern_identity",
    "enumerate_L",
    "enumerate_L_family",
    "region_report",
]

Phase = Union[PiRational, float]

DEFAULT_TOLERANCE = 1e-9


def default_tolerance() -> float:
    """Height tolerance for the float path; KNOTFORGE_TOLERANCE overrides."""
    import os

    raw = os.environ.get("KNOTFORGE_TOLERANCE")
    return float(raw) if raw else DEFAULT_TOLERANCE


class DegenerateProjection(ValueError):
    """phi_y sits on a vertical singular line, collapsing the projection."""


class SingularCrossing(ValueError):
    """A crossing has exactly (or nearly) equal heights on both strands."""

    def __init__(self, kind: str, k: int, j: int, detail: str = ""):
        self.kind, self.k, self.j = kind, k, j
        super().__init__(f"singular {kind} crossing (k={k}, j={j}) {detail}".strip())


class VerticalWall(ValueError):
    """Vertical singular lines have no crossing-flip semantics."""


def _as_units(phase: Phase) -> Fraction | float:
    """Phase as a multiple of pi: exact Fraction or float."""
    if isinstance(phase, PiRational):
        return phase.coeff
    return float(phase) / math.pi


@dataclass(frozen=True)
class LissajousSpec:
    """Frequencies (nx, ny, nz) and phases (phi_x fixed at 0)."""

    nx: int
    ny: int
    nz: int
    phi_y: Phase
    phi_z: Phase

    def __post_init__(self):
        if not (0 < self.nx < self.ny):
            raise ValueError("frequencies must satisfy 0 < nx < ny")
        if self.nz < 1:
            raise ValueError("nz must be a positive integer")
        for a, b in ((self.nx, self.ny), (self.nx, self.nz), (self.ny, self.nz)):
            if math.gcd(a, b) != 1:
                raise ValueError(f"frequencies must be pairwise coprime; gcd({a},{b})>1")
        for phi in (self.phi_y, self.phi_z):
            if isinstance(phi, PiRational):
                continue
            if not math.isfinite(float(phi)):
                raise ValueError("phases must be finite")

    @property
    def is_exact(self) -> bool:
        return isinstance(self.phi_y, PiRational) and isinstance(self.phi_z, PiRational)

    def phase_units(self) -> tuple[Fraction | float, Fraction | float]:
        return _as_units(self.phi_y), _as_units(self.phi_z)


@dataclass(frozen=True)
class CrossingRecord:
    """One double point of the xy-projection.

    Times are in units of pi and satisfy t1 < t2; over_first is True when
    the strand passing at t1 is the higher one.  sign is the usual
    orientation sign: sgn(ux*vy - uy*vx) with u the planar tangent of the
    over strand and v of the under strand.
    """

    kind: str  # "I" (row) or "II" (column)
    k: int
    j: int
    t1: Fraction | float
    t2: Fraction | float
    over_first: bool | None = None
    sign: int | None = None


@dataclass(frozen=True)
class PlanarDiagram:
    """Crossings plus the passage order along the curve.

    passages holds (crossing index, strand_is_over) sorted by time; every
    crossing appears exactly twice.
    """

    crossings: tuple[CrossingRecord, ...]
    passages: tuple[tuple[int, bool], ...]

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


def crossing_count(nx: int, ny: int) -> int:
    """Number of double points of the xy-projection."""
    return 2 * nx * ny - nx - ny


# ---------------------------------------------------------------------------
# crossing grid
# ---------------------------------------------------------------------------


def _row_j_range(nx: int, ny: int, k: int, u) -> tuple[int, int]:
    if isinstance(u, Fraction):
        lo = 1 + (ny * k * u.denominator + nx * u.numerator) // (nx * u.denominator)
        hi = (2 * ny * nx * u.denominator - ny * k * u.denominator + nx * u.numerator) // (
            nx * u.denominator
        )
        return lo, hi
    return 1 + math.floor(ny * k / nx + u), math.floor(2 * ny - ny * k / nx + u)


def _col_j_range(nx: int, ny: int, k: int) -> tuple[int, int]:
    return 1 + (nx * k) // ny, (2 * nx * ny - nx * k) // ny


def _iter_crossings(nx: int, ny: int, u) -> Iterator[tuple[str, int, int]]:
    for k in range(1, nx):
        lo, hi = _row_j_range(nx, ny, k, u)
        for j in range(lo, hi + 1):
            yield "I", k, j
    for k in range(1, ny):
        lo, hi = _col_j_range(nx, ny, k)
        for j in range(lo, hi + 1):
            yield "II", k, j


def _times(kind: str, nx: int, ny: int, k: int, j: int, u):
    """(t1, t2) in units of pi; exact when u is a Fraction."""
    if kind == "I":
        if isinstance(u, Fraction):
            mean = Fraction(j - u, ny)
        else:
            mean = (j - u) / ny
        half = Fraction(-k, nx) if isinstance(u, Fraction) else -k / nx
    else:
        mean = Fraction(j, nx) if isinstance(u, Fraction) else j / nx
        half = Fraction(-k, ny) if isinstance(u, Fraction) else -k / ny
    return mean + half, mean - half


def enumerate_crossings(spec: LissajousSpec) -> list[CrossingRecord]:
    """All double points of the xy-projection, heights unresolved.

    Raises DegenerateProjection when phi_y = l*pi/nx for integer l, in
    which case the whole projection collapses to an arc.
    """
    u, _ = spec.phase_units()
    nx, ny = spec.nx, spec.ny
    if isinstance(u, Fraction):
        if (u * nx).denominator == 1:
            raise DegenerateProjection(f"phi_y = {u}*pi lies on a vertical singular line")
    else:
        if abs(math.sin(nx * u * math.pi)) < default_tolerance():
            raise DegenerateProjection("phi_y within tolerance of a vertical singular line")
    records = [
        CrossingRecord(kind, k, j, *_times(kind, nx, ny, k, j, u))
        for kind, k, j in _iter_crossings(nx, ny, u)
    ]
    n_row = sum(1 for r in records if r.kind == "I")
    n_col = len(records) - n_row
    assert n_row == nx * ny - ny and n_col == nx * ny - nx, "crossing count mismatch"
    return records


# ---------------------------------------------------------------------------
# exact and float height resolution
#
# For a crossing with times t1 < t2 the height difference is
#     z(t1) - z(t2) = -2 sin(pi*(nz*(t1+t2)/2 + v)) * sin(pi*nz*(t1-t2)/2).
# At the crossing the two strands share |sin(nx pi t)| and |sin(ny pi t +
# phi_y)| up to sign (row crossings flip the y factor, column crossings
# the x factor), so the tangent cross product collapses to a product of
# two sine signs.
# ---------------------------------------------------------------------------


def _resolve_exact(nx, ny, nz, un, ud, vn, vd):
    """Resolved pattern at exact phases (un/ud, vn/vd) in units of pi.

    Returns two lists of (k, j, over_first, sign), one per crossing kind.
    All arithmetic is on plain integers.
    """
    rows = []
    dy = ny * ud
    for k in range(1, nx):
        lo = 1 + (ny * k * ud + nx * un) // (nx * ud)
        hi = (2 * ny * nx * ud - ny * k * ud + nx * un) // (nx * ud)
        s_half = sin_sign_int(-nz * k, nx)
        if s_half == 0:
            raise SingularCrossing("I", k, 0, "degenerate half-time factor")
        for j in range(lo, hi + 1):
            s_mean = sin_sign_int(nz * (j * ud - un) * vd + vn * dy, dy * vd)
            if s_mean == 0:
                raise SingularCrossing("I", k, j)
            over_first = -s_mean * s_half > 0
            sk = -k if over_first else k
            sx = sin_sign_int(sk * ny * ud + nx * (j * ud - un), dy)
            sy = sin_sign_int(j * nx + sk * ny, nx)
            if sx == 0 or sy == 0:
                raise SingularCrossing("I", k, j, "tangent through a fold point")
            rows.append((k, j, over_first, -sx * sy))
    cols = []
    for k in range(1, ny):
        lo = 1 + (nx * k) // ny
        hi = (2 * nx * ny - nx * k) // ny
        s_half = sin_sign_int(-nz * k, ny)
        if s_half == 0:
            raise SingularCrossing("II", k, 0, "degenerate half-time factor")
        for j in range(lo, hi + 1):
            s_mean = sin_sign_int(nz * j * vd + vn * nx, nx * vd)
            if s_mean == 0:
                raise SingularCrossing("II", k, j)
            over_first = -s_mean * s_half > 0
            sk = -k if over_first else k
            sx = sin_sign_int(j * ny + sk * nx, ny)
            sy = sin_sign_int((j * ny + sk * nx) * ud + nx * un, nx * ud)
            if sx == 0 or sy == 0:
                raise SingularCrossing("II", k, j, "tangent through a fold point")
            cols.append((k, j, over_first, sx * sy))
    return rows, cols


def _sin(x: float) -> float:
    return math.sin(math.pi * x)


def _resolve_float(nx, ny, nz, u, v, tol):
    """Float twin of _resolve_exact; phases in units of pi."""
    rows = []
    for k in range(1, nx):
        lo = 1 + math.floor(ny * k / nx + u)
        hi = math.floor(2 * ny - ny * k / nx + u)
        half = _sin(-nz * k / nx)
        for j in range(lo, hi + 1):
            delta = -2.0 * _sin(nz * (j - u) / ny + v) * half
            if abs(delta) < tol:
                raise SingularCrossing("I", k, j, f"|dz|={abs(delta):.3e} below tolerance")
            over_first = delta > 0
            sk = -k if over_first else k
            sx = _sin(nx * (j - u) / ny + sk)
            sy = _sin(j + sk * ny / nx)
            if abs(sx) < tol or abs(sy) < tol:
                raise SingularCrossing("I", k, j, "tangent within tolerance of a fold")
            rows.append((k, j, over_first, -1 if sx * sy > 0 else 1))
    cols = []
    for k in range(1, ny):
        lo, hi = _col_j_range(nx, ny, k)
        half = _sin(-nz * k / ny)
        for j in range(lo, hi + 1):
            delta = -2.0 * _sin(nz * j / nx + v) * half
            if abs(delta) < tol:
                raise SingularCrossing("II", k, j, f"|dz|={abs(delta):.3e} below tolerance")
            over_first = delta > 0
            sk = -k if over_first else k
            sx = _sin(j + sk * nx / ny)
            sy = _sin((j + sk * nx / ny) * ny / nx + u)
            if abs(sx) < tol or abs(sy) < tol:
                raise SingularCrossing("II", k, j, "tangent within tolerance of a fold")
            cols.append((k, j, over_first, 1 if sx * sy > 0 else -1))
    return rows, cols


def _resolved_pattern(spec: LissajousSpec, tolerance: float | None = None):
    u, v = spec.phase_units()
    if spec.is_exact:
        return _resolve_exact(
            spec.nx, spec.ny, spec.nz, u.numerator, u.denominator, v.numerator, v.denominator
        )
    tol = default_tolerance() if tolerance is None else tolerance
    return _resolve_float(spec.nx, spec.ny, spec.nz, float(u), float(v), tol)


def resolve_heights(
    spec: LissajousSpec,
    crossings: Sequence[CrossingRecord] | None = None,
    tolerance: float | None = None,
) -> list[CrossingRecord]:
    """Fill over_first and sign on every crossing record."""
    if crossings is None:
        crossings = enumerate_crossings(spec)
    rows, cols = _resolved_pattern(spec, tolerance)
    table = {("I", k, j): (o, s) for k, j, o, s in rows}
    table.update({("II", k, j): (o, s) for k, j, o, s in cols})
    out = []
    for rec in crossings:
        over_first, sign = table[(rec.kind, rec.k, rec.j)]
        out.append(replace(rec, over_first=over_first, sign=sign))
    return out


def extract_diagram(spec: LissajousSpec, tolerance: float | None = None) -> PlanarDiagram:
    """Resolved crossings ordered into a passage list along the curve."""
    resolved = resolve_heights(spec, tolerance=tolerance)
    events = []
    for i, rec in enumerate(resolved):
        events.append((rec.t1, i, True))
        events.append((rec.t2, i, False))
    events.sort(key=lambda e: e[0])
    passages = tuple(
        (i, resolved[i].over_first if first else not resolved[i].over_first)
        for _, i, first in events
    )
    n = crossing_count(spec.nx, spec.ny)
    assert len(passages) == 2 * n
    return PlanarDiagram(tuple(resolved), passages)


# ---------------------------------------------------------------------------
# fundamental domain
# ---------------------------------------------------------------------------


def reduce_to_fundamental(spec: LissajousSpec) -> LissajousSpec:
    """Equivalent spec (same knot up to mirror) with phases in the
    fundamental domain [0, pi/nx] x [0, pi].

    Uses the pi-shift relation on either phase together with the
    simultaneous shift (phi_y, phi_z) -> (phi_y + ny*pi/nx, phi_z + nz*pi/nx).
    Exact phases only.
    """
    if not spec.is_exact:
        raise ValueError("fundamental-domain reduction requires exact phases")
    u, v = spec.phase_units()
    nx = spec.nx
    m0 = -math.floor(u * nx)  # integer shift count, in units of pi/nx
    k = (m0 * mod_inverse(spec.ny % nx, nx)) % nx if nx > 1 else 0
    u2 = u + Fraction(m0, nx)
    v2 = (v + Fraction(k * spec.nz, nx)) % 1
    assert 0 <= u2 < Fraction(1, nx) or u2 == Fraction(1, nx)
    return replace(spec, phi_y=PiRational(u2), phi_z=PiRational(v2))


# ---------------------------------------------------------------------------
# singular-line arrangement and face sampling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Wall:
    """One singular line: slanted v=(nz*u+l)/ny, horizontal v=l/nx, or
    vertical u=l/nx, identified by its integer index l."""

    kind: str  # "slanted" | "horizontal" | "vertical"
    index: int


@dataclass(frozen=True)
class PhaseRegion:
    """A face of the singular-line arrangement in the fundamental domain.

    strip records the u-interval of the sweep strip that produced the
    sample; a wide face shows up once per strip it spans.
    """

    sample_point: tuple[PiRational, PiRational]
    below: Wall
    above: Wall
    strip: tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))

    @property
    def walls(self) -> list[Wall]:
        return [self.below, self.above]

    def sample_units(self) -> tuple[Fraction, Fraction]:
        return self.sample_point[0].coeff, self.sample_point[1].coeff

    def wall_height(self, wall: Wall, u: Fraction, nx: int, ny: int, nz: int) -> Fraction:
        if wall.kind == "horizontal":
            return Fraction(wall.index, nx)
        if wall.kind == "slanted":
            return Fraction(nz * u + wall.index, ny)
        raise VerticalWall("vertical walls have no height function")


def _slanted_indices(nx: int, ny: int, nz: int) -> list[int]:
    """Indices l of slanted lines meeting the open fundamental domain."""
    lo = math.floor(Fraction(-nz, nx)) + 1
    return list(range(lo, ny))


def decompose_phase_torus(nx: int, ny: int, nz: int) -> list[PhaseRegion]:
    """One exact interior sample point per face of the arrangement.

    Sweep construction: collect the u-coordinates of every intersection of
    a slanted line with a horizontal line or domain edge, take midpoints
    of consecutive u-values, and at each such u take midpoints between
    consecutive wall heights.  A face spanning several sweep strips is
    sampled once per strip; duplicates collapse after classification.
    """
    for a, b in ((nx, ny), (nx, nz), (ny, nz)):
        if math.gcd(a, b) != 1:
            raise ValueError("frequencies must be pairwise coprime")
    bound = Fraction(1, nx)
    slants = _slanted_indices(nx, ny, nz)
    breaks = {Fraction(0), bound}
    for l in slants:
        for h in range(nx + 1):
            ucross = Fraction(h * ny - l * nx, nx * nz)
            if 0 < ucross < bound:
                breaks.add(ucross)
    regions = []
    us = sorted(breaks)
    for a, b in zip(us, us[1:]):
        u = (a + b) / 2
        walls = [(Fraction(h, nx), Wall("horizontal", h)) for h in range(nx + 1)]
        for l in slants:
            val = Fraction(nz * u + l, ny)
            if 0 < val < 1:
                walls.append((val, Wall("slanted", l)))
        walls.sort(key=lambda w: w[0])
        assert len({w[0] for w in walls}) == len(walls), "wall collision inside a strip"
        for (v0, w0), (v1, w1) in zip(walls, walls[1:]):
            sample = (PiRational(u), PiRational((v0 + v1) / 2))
            regions.append(PhaseRegion(sample, w0, w1, (a, b)))
    return regions


def wall_adjacent_samples(
    nx: int, ny: int, nz: int
) -> list[tuple[Wall, tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
    """(wall, sample just below, sample just above) for every interior
    wall segment met by the sweep; every interior wall appears at least once."""
    out = []
    regions = decompose_phase_torus(nx, ny, nz)
    by_strip: dict[Fraction, list[PhaseRegion]] = {}
    for reg in regions:
        by_strip.setdefault(reg.sample_point[0].coeff, []).append(reg)
    for u, regs in sorted(by_strip.items()):
        regs.sort(key=lambda r: r.sample_point[1].coeff)
        for below, above in zip(regs, regs[1:]):
            assert below.above == above.below
            out.append((below.above, below.sample_units(), above.sample_units()))
    return out


def predict_flips(nx: int, ny: int, nz: int, wall: Wall) -> frozenset[tuple[str, int, int]]:
    """Crossings that change over/under when phases cross the given wall.

    Slanted wall l flips the row crossings with j*nz + l = 0 mod ny
    (nx - 1 of them); horizontal wall l flips the column crossings with
    j*nz + l = 0 mod nx (ny - 1 of them).  Vertical walls degenerate the
    projection and have no flip semantics.
    """
    if wall.kind == "vertical":
        raise VerticalWall("vertical singular lines do not flip crossings")
    u = Fraction(1, 2 * nx)  # row j-windows are constant over the open domain
    flips = set()
    if wall.kind == "slanted":
        j0 = (-wall.index * mod_inverse(nz % ny, ny)) % ny
        for k in range(1, nx):
            lo, hi = _row_j_range(nx, ny, k, u)
            j = lo + (j0 - lo) % ny
            while j <= hi:
                flips.add(("I", k, j))
                j += ny
        expected = nx - 1
    elif wall.kind == "horizontal":
        j0 = (-wall.index * mod_inverse(nz % nx, nx)) % nx
        for k in range(1, ny):
            lo, hi = _col_j_range(nx, ny, k)
            j = lo + (j0 - lo) % nx
            while j <= hi:
                flips.add(("II", k, j))
                j += nx
        expected = ny - 1
    else:
        raise ValueError(f"unknown wall kind {wall.kind!r}")
    assert len(flips) == expected, f"flip count {len(flips)} != {expected}"
    return frozenset(flips)


# ---------------------------------------------------------------------------
# 4-plat sign sequence (nx = 2) and identities
# ---------------------------------------------------------------------------


def _fold(c: Fraction) -> Fraction:
    """Order key f in [0,1] with x = cos(pi*f); smaller f means larger x."""
    m = c % 2
    return m if m <= 1 else 2 - m


def _sequence_from_pattern_exact(ny, un, ud, rows, cols):
    items = []
    dy = ny * ud
    for k, j, over, sign in rows:
        key = _fold(Fraction(2 * (j * ud - un) - k * dy, dy))
        items.append((key, "I", sign, (k, j)))
    for k, j, over, sign in cols:
        key = _fold(Fraction(j * ny - 2 * k, ny))
        items.append((key, "II", sign, (k, j)))
    items.sort(key=lambda it: (it[0], it[1]), reverse=True)
    return items


def _sequence_from_pattern_float(ny, u, rows, cols):
    items = []
    for k, j, over, sign in rows:
        x = math.cos(math.pi * (2 * (j - u) / ny - k))
        items.append((round(x, 9), "I", sign, (k, j)))
    for k, j, over, sign in cols:
        x = math.cos(math.pi * (j - 2 * k / ny))
        items.append((round(x, 9), "II", sign, (k, j)))
    items.sort(key=lambda it: (it[0], it[1]))
    return items


def _eta_eps_from_items(ny, items):
    """Collapse the x-sorted crossing list into row signs and column sign
    pairs, checking the strict row/column alternation of the 4-plat."""
    eta: list[int] = []
    eps: list[tuple[int, int]] = []
    i = 0
    n = len(items)
    while i < n:
        key, kind, sign, _ = items[i]
        if kind == "I":
            eta.append(sign)
            i += 1
        else:
            if i + 1 >= n or items[i + 1][1] != "II" or items[i + 1][0] != key:
                raise ValueError("column crossings failed to pair by position")
            eps.append((sign, items[i + 1][2]))
            i += 2
    if len(eta) != ny or len(eps) != ny - 1:
        raise ValueError("diagram is not in 4-plat position")
    # verify alternation: positions must interleave I, II, I, ..., I
    kinds = [it[1] for it in items]
    expected = []
    for _ in range(ny - 1):
        expected += ["I", "II", "II"]
    expected.append("I")
    if kinds != expected:
        raise ValueError("row and column crossings do not alternate along x")
    return tuple(eta), tuple(eps)


def sign_sequence_4plat(spec: LissajousSpec, tolerance: float | None = None):
    """Row signs and column sign pairs of an nx=2 diagram, left to right.

    Returns a twobridge.SignSequence4Plat.
    """
    from .twobridge import SignSequence4Plat

    if spec.nx != 2:
        raise ValueError("4-plat extraction requires nx = 2")
    u, v = spec.phase_units()
    rows, cols = _resolved_pattern(spec, tolerance)
    if spec.is_exact:
        items = _sequence_from_pattern_exact(spec.ny, u.numerator, u.denominator, rows, cols)
    else:
        items = _sequence_from_pattern_float(spec.ny, float(u), rows, cols)
    eta, eps = _eta_eps_from_items(spec.ny, items)
    return SignSequence4Plat(eta, eps)


def pattern_identity(rows, cols) -> str:
    """Deterministic identity string for a resolved crossing pattern.

    Used for nx > 2, where no fraction classification exists.  Two faces
    with equal patterns carry the same knot (they differ by planar
    isotopy and triangle moves only), so distinct patterns bound the
    number of knot types from above.
    """
    bits = []
    for kind, recs in (("I", rows), ("II", cols)):
        for k, j, over, sign in sorted(recs):
            bits.append(f"{kind}{k}.{j}{'o' if over else 'u'}{'+' if sign > 0 else '-'}")
    return "pat:" + ",".join(bits)


def classify_sample(nx: int, ny: int, nz: int, u: Fraction, v: Fraction) -> str:
    """Knot identity at exact phases (u*pi, v*pi).

    nx = 2 gives the canonical 2-bridge fraction ("1/1" for the unknot);
    larger nx gives a resolved-pattern identity.
    """
    from .twobridge import UNKNOT, fraction_from_diagram

    rows, cols = _resolve_exact(nx, ny, nz, u.numerator, u.denominator, v.numerator, v.denominator)
    if nx != 2:
        return pattern_identity(rows, cols)
    from .twobridge import SignSequence4Plat

    items = _sequence_from_pattern_exact(ny, u.numerator, u.denominator, rows, cols)
    eta, eps = _eta_eps_from_items(ny, items)
    frac = fraction_from_diagram(SignSequence4Plat(eta, eps))
    return frac.identity


def classify_spec(spec: LissajousSpec, tolerance: float | None = None) -> str:
    """Knot identity of a spec along either the exact or float path."""
    if spec.is_exact:
        u, v = spec.phase_units()
        return classify_sample(spec.nx, spec.ny, spec.nz, u, v)
    from .twobridge import fraction_from_diagram

    if spec.nx == 2:
        frac = fraction_from_diagram(sign_sequence_4plat(spec, tolerance))
        return frac.identity
    rows, cols = _resolved_pattern(spec, tolerance)
    return pattern_identity(rows, cols)


# ---------------------------------------------------------------------------
# set-level enumeration
# ---------------------------------------------------------------------------


def _classify_chunk(args) -> list[str]:
    nx, ny, nz, points = args
    return [
        classify_sample(nx, ny, nz, Fraction(un, ud), Fraction(vn, vd))
        for un, ud, vn, vd in points
    ]


def _classify_regions(nx, ny, nz, regions, workers=1) -> list[str]:
    points = []
    for reg in regions:
        u, v = reg.sample_units()
        points.append((u.numerator, u.denominator, v.numerator, v.denominator))
    if workers <= 1 or len(points) < 2 * workers:
        return _classify_chunk((nx, ny, nz, points))
    size = (len(points) + workers - 1) // workers
    chunks = [(nx, ny, nz, points[i : i + size]) for i in range(0, len(points), size)]
    out: list[str] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_classify_chunk, chunks):
            out.extend(part)
    return out


def enumerate_L(nx: int, ny: int, nz: int, workers: int = 1) -> frozenset[str]:
    """Deduplicated knot identities over every face of the fundamental
    domain (the unknot "1/1" included when nx = 2)."""
    regions = decompose_phase_torus(nx, ny, nz)
    return frozenset(_classify_regions(nx, ny, nz, regions, workers))


def admissible_nz_values(nx: int, ny: int, window: str = "stabilized") -> list[int]:
    """nz values whose union realizes every knot with the given nx, ny.

    "stabilized" starts at 2*nx*ny - ny (the equality threshold of the
    nz-periodicity theorem) and spans one full period 2*nx*ny;
    "paper" reproduces the published window 3*ny + 2 .. 7*ny (nx=2 only).
    Both cover the same admissible residues.
    """
    if window == "stabilized":
        start = 2 * nx * ny - ny
        stop = start + 2 * nx * ny
    elif window == "paper":
        if nx != 2:
            raise ValueError("the published window is specific to nx = 2")
        start, stop = 3 * ny + 2, 7 * ny + 1
    else:
        raise ValueError(f"unknown window {window!r}")
    return [
        nz
        for nz in range(start, stop)
        if math.gcd(nz, nx) == 1 and math.gcd(nz, ny) == 1
    ]


def enumerate_L_family(
    nx: int, ny: int, window: str = "stabilized", workers: int = 1
) -> frozenset[str]:
    """Union of enumerate_L over a sufficient nz window, unknot excluded."""
    found: set[str] = set()
    for nz in admissible_nz_values(nx, ny, window):
        found |= enumerate_L(nx, ny, nz, workers=workers)
    found.discard("1/1")
    return frozenset(found)


def region_report(nx: int, ny: int, nz: int, workers: int = 1) -> list[dict]:
    """Per-face classification records for JSON emission."""
    regions = decompose_phase_torus(nx, ny, nz)
    ids = _classify_regions(nx, ny, nz, regions, workers)
    out = []
    for reg, ident in zip(regions, ids):
        u, v = reg.sample_units()
        out.append(
            {
                "frequencies": [nx, ny, nz],
                "sample_point": [f"{u.numerator}/{u.denominator}", f"{v.numerator}/{v.denominator}"],
                "knot_id": ident,
                "crossing_count": crossing_count(nx, ny),
            }
        )
    return out
