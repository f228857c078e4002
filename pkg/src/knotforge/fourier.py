"""Curves whose z-coordinate is a sum of two cosines.

The xy-projection is the same two-frequency curve as in the
single-cosine case, so the crossing grid is shared; only the height
resolution changes.  Heights are sums of two sine products at mixed
rational/pi-rational phases, which are not exactly comparable, so this
module works in floating point with an extended-precision escalation
near zero and a hard refusal below tolerance.

Also here: the four singular-curve types on the (phi_z1, phi_z2) phase
torus, bitmap-based region sampling, random parameter sampling, and the
explicit twist-knot and torus-knot generator specs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
import numpy as np

from .exactmath import PiRational, sin_sign_int
from .lissajous import (
    CrossingRecord,
    PlanarDiagram,
    _col_j_range,
    _eta_eps_from_items,
    _iter_crossings,
    _row_j_range,
    _sequence_from_pattern_float,
    _times,
    crossing_count,
    default_tolerance,
    pattern_identity,
)

__all__ = [
    "FourierSpec",
    "SingularCurve",
    "NearSingular",
    "UnsupportedResidue",
    "NoKnownPhases",
    "resolve_fourier_heights",
    "extract_diagram",
    "classify_fourier",
    "classify_singular_curves",
    "singular_height",
    "bitmap_sample_fourier",
    "random_sample_fourier",
    "twist_knot_spec",
    "torus_knot_spec",
]

# recompute with mpmath when a float height lands below this
_ESCALATE = 1e-6
_MP_DPS = 40


class NearSingular(ValueError):
    """A crossing height fell below tolerance on the float path."""

    def __init__(self, kind: str, k: int, j: int, magnitude: float):
        self.kind, self.k, self.j, self.magnitude = kind, k, j, magnitude
        super().__init__(f"near-singular {kind} crossing (k={k}, j={j}): |dz|={magnitude:.3e}")


class UnsupportedResidue(ValueError):
    """Twist-knot index outside the two families with explicit specs."""


class NoKnownPhases(ValueError):
    """No recorded phase data for this torus-knot frequency pair."""


@dataclass(frozen=True)
class FourierSpec:
    """Frequencies and phases of a two-cosine-z curve.

    Phases are radians; the first z-amplitude is fixed at 1 and amp is
    the second.  nx, ny and gcd(nz1, nz2) must be pairwise coprime.
    """

    nx: int
    ny: int
    phi_y: float
    nz1: int
    phi_z1: float
    nz2: int
    phi_z2: float
    amp: float = 1.0

    def __post_init__(self):
        if not (0 < self.nx < self.ny):
            raise ValueError("frequencies must satisfy 0 < nx < ny")
        if math.gcd(self.nx, self.ny) != 1:
            raise ValueError("nx and ny must be coprime")
        if self.nz1 < 1 or self.nz2 < 1:
            raise ValueError("z-frequencies must be positive")
        g = math.gcd(self.nz1, self.nz2)
        if math.gcd(g, self.nx) != 1 or math.gcd(g, self.ny) != 1:
            raise ValueError("gcd(nz1, nz2) must be coprime to nx and ny")
        for val in (self.phi_y, self.phi_z1, self.phi_z2, self.amp):
            if not math.isfinite(float(val)):
                raise ValueError("phases and amplitude must be finite")
        if self.amp < 0:
            raise ValueError("amplitude must be nonnegative")

    def z_value(self, t: float) -> float:
        return math.cos(self.nz1 * t + self.phi_z1) + self.amp * math.cos(
            self.nz2 * t + self.phi_z2
        )


def _height(spec: FourierSpec, mean: float, half: float) -> float:
    """z(t1) - z(t2) for a crossing with times mean +- half (units of pi)."""
    return -2.0 * (
        math.sin(spec.nz1 * mean * math.pi + spec.phi_z1) * math.sin(spec.nz1 * half * math.pi)
        + spec.amp
        * math.sin(spec.nz2 * mean * math.pi + spec.phi_z2)
        * math.sin(spec.nz2 * half * math.pi)
    )


def _height_mp(spec: FourierSpec, mean_num: float, half_num: float) -> float:
    with mpmath.workdps(_MP_DPS):
        pi = mpmath.pi
        d = -2 * (
            mpmath.sin(spec.nz1 * mean_num * pi + spec.phi_z1)
            * mpmath.sin(spec.nz1 * half_num * pi)
            + spec.amp
            * mpmath.sin(spec.nz2 * mean_num * pi + spec.phi_z2)
            * mpmath.sin(spec.nz2 * half_num * pi)
        )
        return float(d)


def _resolve_fourier(spec: FourierSpec, tol: float):
    """(rows, cols) of (k, j, over_first, sign) for the xy crossing grid."""
    nx, ny = spec.nx, spec.ny
    u = spec.phi_y / math.pi
    if abs(math.sin(nx * spec.phi_y)) < tol:
        from .lissajous import DegenerateProjection

        raise DegenerateProjection("phi_y within tolerance of a vertical singular line")
    rows, cols = [], []
    for kind, k, j in _iter_crossings(nx, ny, u):
        if kind == "I":
            mean, half = (j - u) / ny, -k / nx
        else:
            mean, half = j / nx, -k / ny
        delta = _height(spec, mean, half)
        if abs(delta) < _ESCALATE:
            delta = _height_mp(spec, mean, half)
        if abs(delta) < tol:
            raise NearSingular(kind, k, j, abs(delta))
        over_first = delta > 0
        sk = -k if over_first else k
        if kind == "I":
            sx = math.sin(math.pi * (nx * (j - u) / ny + sk))
            sy = math.sin(math.pi * (j + sk * ny / nx))
            sign = -1 if sx * sy > 0 else 1
        else:
            sx = math.sin(math.pi * (j + sk * nx / ny))
            sy = math.sin(math.pi * (j * ny / nx + sk) + spec.phi_y)
            sign = 1 if sx * sy > 0 else -1
        if abs(sx) < tol or abs(sy) < tol:
            raise NearSingular(kind, k, j, min(abs(sx), abs(sy)))
        (rows if kind == "I" else cols).append((k, j, over_first, sign))
    return rows, cols


def resolve_fourier_heights(
    spec: FourierSpec,
    crossings: Sequence[CrossingRecord] | None = None,
    tolerance: float | None = None,
) -> list[CrossingRecord]:
    """Crossing records with over/under and sign resolved."""
    tol = default_tolerance() if tolerance is None else tolerance
    u = spec.phi_y / math.pi
    rows, cols = _resolve_fourier(spec, tol)
    table = {("I", k, j): (o, s) for k, j, o, s in rows}
    table.update({("II", k, j): (o, s) for k, j, o, s in cols})
    if crossings is None:
        crossings = [
            CrossingRecord(kind, k, j, *_times(kind, spec.nx, spec.ny, k, j, u))
            for kind, k, j in _iter_crossings(spec.nx, spec.ny, u)
        ]
    out = []
    for rec in crossings:
        over_first, sign = table[(rec.kind, rec.k, rec.j)]
        out.append(replace(rec, over_first=over_first, sign=sign))
    return out


def extract_diagram(spec: FourierSpec, tolerance: float | None = None) -> PlanarDiagram:
    """Resolved crossings in passage order along the curve."""
    resolved = resolve_fourier_heights(spec, tolerance=tolerance)
    events = []
    for i, rec in enumerate(resolved):
        events.append((rec.t1, i, True))
        events.append((rec.t2, i, False))
    events.sort(key=lambda e: e[0])
    passages = tuple(
        (i, resolved[i].over_first if first else not resolved[i].over_first)
        for _, i, first in events
    )
    assert len(passages) == 2 * crossing_count(spec.nx, spec.ny)
    return PlanarDiagram(tuple(resolved), passages)


def classify_fourier(spec: FourierSpec, tolerance: float | None = None) -> str:
    """Knot identity: canonical fraction for nx=2, pattern string otherwise."""
    tol = default_tolerance() if tolerance is None else tolerance
    rows, cols = _resolve_fourier(spec, tol)
    if spec.nx != 2:
        return pattern_identity(rows, cols)
    from .twobridge import SignSequence4Plat, fraction_from_diagram

    items = _sequence_from_pattern_float(spec.ny, spec.phi_y / math.pi, rows, cols)
    eta, eps = _eta_eps_from_items(spec.ny, items)
    return fraction_from_diagram(SignSequence4Plat(eta, eps)).identity


# ---------------------------------------------------------------------------
# singular curves on the (phi_z1, phi_z2) torus
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SingularCurve:
    """One singular locus contributed by a single xy-crossing.

    kinds: "vertical"  phi_z1 = c, "horizontal" phi_z2 = c,
    "diagonal" phi_z2 = slope_sign*phi_z1 + c (all constants mod 2*pi),
    and "sine"  sin(b1 + phi_z1) = C * sin(b2 + phi_z2) with |C| not in
    {0, 1}.  b1, b2 are the crossing's angular offsets in radians.
    """

    kind: str
    source: tuple[str, int, int]
    c: float = 0.0
    slope_sign: int = 0
    C: float = 0.0
    b1: float = 0.0
    b2: float = 0.0


def _crossing_offsets(spec: FourierSpec, kind: str, k: int, j: int):
    """(b1, b2, alpha1_sign_exact, alpha1, alpha2) for one crossing."""
    u = spec.phi_y / math.pi
    if kind == "I":
        mean = (j - u) / spec.ny
        half_num, half_den = -k, spec.nx
    else:
        mean = j / spec.nx
        half_num, half_den = -k, spec.ny
    b1 = spec.nz1 * mean * math.pi
    b2 = spec.nz2 * mean * math.pi
    a1_sign = sin_sign_int(spec.nz1 * half_num, half_den)
    a2_sign = sin_sign_int(spec.nz2 * half_num, half_den)
    a1 = math.sin(spec.nz1 * half_num * math.pi / half_den)
    a2 = math.sin(spec.nz2 * half_num * math.pi / half_den)
    return b1, b2, a1_sign, a2_sign, a1, a2


def classify_singular_curves(spec: FourierSpec) -> list[SingularCurve]:
    """Typed singular curves for every crossing; z-phases of the input
    are ignored (the curves live on the z-phase torus)."""
    curves: list[SingularCurve] = []
    u = spec.phi_y / math.pi
    for kind, k, j in _iter_crossings(spec.nx, spec.ny, u):
        b1, b2, a1s, a2s, a1, a2 = _crossing_offsets(spec, kind, k, j)
        src = (kind, k, j)
        if a1s == 0 and a2s == 0:
            raise AssertionError("both half-time factors vanish; frequencies not admissible")
        if a1s == 0:
            if spec.amp == 0:
                continue  # z ignores the second cosine; crossing never singular
            curves.append(SingularCurve("horizontal", src, c=(-b2) % math.pi, b1=b1, b2=b2))
            continue
        if a2s == 0 or spec.amp == 0:
            curves.append(SingularCurve("vertical", src, c=(-b1) % math.pi, b1=b1, b2=b2))
            continue
        C = -spec.amp * a2 / a1
        if abs(abs(C) - 1.0) < 1e-12:
            # sin(b1+z1) = +-sin(b2+z2): two lines of slope +-1
            if C > 0:
                cs = [(1, (b1 - b2) % (2 * math.pi)), (-1, (math.pi - b1 - b2) % (2 * math.pi))]
            else:
                cs = [(1, (b1 - b2 + math.pi) % (2 * math.pi)), (-1, (-b1 - b2) % (2 * math.pi))]
            for slope, c in cs:
                curves.append(SingularCurve("diagonal", src, c=c, slope_sign=slope, b1=b1, b2=b2))
            continue
        curves.append(SingularCurve("sine", src, C=C, b1=b1, b2=b2))
    return curves


def singular_height(spec: FourierSpec, kind: str, k: int, j: int, pz1: float, pz2: float) -> float:
    """Height difference of one crossing as a function of the z-phases."""
    probe = replace(spec, phi_z1=pz1, phi_z2=pz2)
    if kind == "I":
        mean, half = (j - spec.phi_y / math.pi) / spec.ny, -k / spec.nx
    else:
        mean, half = j / spec.nx, -k / spec.ny
    return _height(probe, mean, half)


def bitmap_sample_fourier(
    spec: FourierSpec, resolution: int = 250
) -> list[tuple[float, float]]:
    """One sample point per white region of the rasterized phase torus.

    Rasterizes the exact singular condition of every crossing onto a
    resolution x resolution grid over [0, pi]^2 by marking sign changes,
    flood-fills the complement 4-connectedly, and returns the centroid
    of each component (an arbitrary interior pixel when the centroid
    falls outside).  Regions smaller than a pixel are missed by design.
    """
    if resolution < 50:
        raise ValueError("resolution must be at least 50")
    from scipy import ndimage

    u = spec.phi_y / math.pi
    step = math.pi / resolution
    z1 = (np.arange(resolution) + 0.5) * step
    z2 = (np.arange(resolution) + 0.5) * step
    wall = np.zeros((resolution, resolution), dtype=bool)
    for kind, k, j in _iter_crossings(spec.nx, spec.ny, u):
        if kind == "I":
            mean, half = (j - u) / spec.ny, -k / spec.nx
        else:
            mean, half = j / spec.nx, -k / spec.ny
        a1 = math.sin(spec.nz1 * half * math.pi)
        a2 = math.sin(spec.nz2 * half * math.pi)
        # rows index phi_z2, columns index phi_z1
        g = a1 * np.sin(spec.nz1 * mean * math.pi + z1)[None, :] + spec.amp * a2 * np.sin(
            spec.nz2 * mean * math.pi + z2
        )[:, None]
        flips_h = g[:, :-1] * g[:, 1:] <= 0
        flips_v = g[:-1, :] * g[1:, :] <= 0
        wall[:, :-1] |= flips_h
        wall[:-1, :] |= flips_v
    white = ~wall
    labels, count = ndimage.label(white, structure=np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]]))
    samples = []
    for lab in range(1, count + 1):
        ys, xs = np.nonzero(labels == lab)
        ci, cj = int(round(ys.mean())), int(round(xs.mean()))
        if labels[ci, cj] != lab:
            ci, cj = int(ys[0]), int(xs[0])
        samples.append(((cj + 0.5) * step, (ci + 0.5) * step))
    return samples


# ---------------------------------------------------------------------------
# random sampling
# ---------------------------------------------------------------------------


def random_sample_fourier(
    ny: int,
    rng_seed: int,
    batch_size: int = 10000,
    max_batches: int | None = None,
    stop_after_empty: int = 3,
    zmax: int = 301,
    amp_max: float = 2.0,
    crossing_cap: int = 16,
    tolerance: float | None = None,
) -> list[tuple[FourierSpec, str]]:
    """Random search of the nx=2 parameter space for 2-bridge knots.

    Draws phi_y from {k*pi/7}, 0 < nz1 < nz2 < zmax, phi_z1 in [0, pi],
    phi_z2 in [0, 2*pi], amp in [0, amp_max]; batches run until
    stop_after_empty consecutive batches find nothing new (or
    max_batches is hit).  Knots above crossing_cap crossings and
    near-singular draws are skipped.  For a rediscovered knot the spec
    with the lexicographically smallest (nx, ny, nz1, nz2) is kept.
    Fixed seed gives bit-identical output (counter-based generator).
    """
    from numpy.random import Generator, Philox

    from .twobridge import TwoBridgeFraction, canonical, crossing_number

    if ny % 2 == 0:
        raise ValueError("ny must be odd when nx = 2")
    rng = Generator(Philox(key=rng_seed))
    found: dict[str, FourierSpec] = {}
    empty_run = 0
    batch = 0
    while True:
        batch += 1
        new_this_batch = 0
        for _ in range(batch_size):
            nz1 = int(rng.integers(1, zmax - 1))
            nz2 = int(rng.integers(nz1 + 1, zmax))
            g = math.gcd(nz1, nz2)
            if g % 2 == 0 or math.gcd(g, ny) != 1:
                continue
            spec = FourierSpec(
                nx=2,
                ny=ny,
                phi_y=int(rng.integers(1, 7)) * math.pi / 7,
                nz1=nz1,
                phi_z1=float(rng.uniform(0.0, math.pi)),
                nz2=nz2,
                phi_z2=float(rng.uniform(0.0, 2 * math.pi)),
                amp=float(rng.uniform(0.0, amp_max)),
            )
            try:
                ident = classify_fourier(spec, tolerance)
            except NearSingular:
                continue
            if ident == "1/1":
                continue
            p, q = map(int, ident.split("/"))
            if crossing_number(canonical(p, q)) > crossing_cap:
                continue
            old = found.get(ident)
            key = (spec.nx, spec.ny, spec.nz1, spec.nz2)
            if old is None:
                found[ident] = spec
                new_this_batch += 1
            elif key < (old.nx, old.ny, old.nz1, old.nz2):
                found[ident] = spec
        empty_run = empty_run + 1 if new_this_batch == 0 else 0
        if max_batches is not None and batch >= max_batches:
            break
        if empty_run >= stop_after_empty:
            break
    return [(spec, ident) for ident, spec in sorted(found.items())]


# ---------------------------------------------------------------------------
# explicit generator families
# ---------------------------------------------------------------------------


def twist_knot_spec(m: int) -> FourierSpec:
    """Two-cosine spec of the twist knot with m half-twists (fraction
    (2m+1)/2).

    Even m uses the n = m/2 family, m = 4n+1 the other; m = 3 mod 4
    already embeds as a single-cosine curve and has no spec here.
    phi_y = 1/2 is in radians.
    """
    if m < 2:
        raise UnsupportedResidue("twist index must be at least 2")
    if m % 2 == 0:
        n = m // 2
        return FourierSpec(
            nx=2,
            ny=2 * n + 1,
            phi_y=0.5,
            nz1=2,
            phi_z1=math.pi / 4,
            nz2=2 * n + 3,
            phi_z2=(2 * n + 3 - 3 * math.pi) / (2 * (2 * n + 1)),
            amp=1.0,
        )
    if m % 4 == 1:
        n = (m - 1) // 4
        return FourierSpec(
            nx=2,
            ny=8 * n + 3,
            phi_y=0.5,
            nz1=2,
            phi_z1=math.pi / 4,
            nz2=8 * n + 1,
            phi_z2=(8 * n + 1 + (8 * n + 5) * math.pi) / (2 * (8 * n + 3)),
            amp=1.0,
        )
    raise UnsupportedResidue(f"twist knot {m} = 3 mod 4 needs no two-cosine spec")


_TORUS_PHASES = {
    # (p, q) -> (nz1, nz2, phi_y, phi_z1, phi_z2), all amplitudes 1
    (3, 4): (1, 3, math.pi / 6, 0.26389, 1.58336),
    (3, 5): (2, 3, math.pi / 6, 0.31415, 1.58336),
    (3, 7): (3, 4, math.pi / 6, 1.57079, 0.37699),
    (4, 5): (1, 4, math.pi / 8, 0.40212, 1.58336),
    (3, 8): (3, 5, math.pi / 6, 1.57079, 0.40212),
}


def torus_knot_spec(p: int, q: int) -> FourierSpec:
    """Two-cosine spec conjectured to realize the (p, q) torus knot.

    For p = 2 the family (nz1, nz2) = (2, q-2) with phases
    (pi/4, pi/2, pi/4) applies for every odd q >= 3; other pairs come
    from a fixed table of verified phase data.
    """
    if not 0 < p < q:
        raise ValueError("need 0 < p < q")
    if p == 2:
        if q % 2 == 0:
            raise ValueError("q must be odd when p = 2")
        return FourierSpec(
            nx=2, ny=q, phi_y=math.pi / 4, nz1=2, phi_z1=math.pi / 2,
            nz2=q - 2, phi_z2=math.pi / 4, amp=1.0,
        )
    if (p, q) not in _TORUS_PHASES:
        raise NoKnownPhases(f"no recorded phases for the ({p},{q}) torus knot")
    nz1, nz2, py, pz1, pz2 = _TORUS_PHASES[(p, q)]
    return FourierSpec(nx=p, ny=q, phi_y=py, nz1=nz1, phi_z1=pz1, nz2=nz2, phi_z2=pz2, amp=1.0)
