"""Diagram-level services that do not need the 2-bridge structure:
Dowker-Thistlethwaite export, writhe, and an Alexander-polynomial-mod-2
screen computed from the crossing/arc matrix of any connected diagram.

Polynomials over GF(2) are bit-packed integers: bit k is the
coefficient of t^k (zero polynomial is 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .lissajous import PlanarDiagram

__all__ = [
    "DTCode",
    "MalformedDiagram",
    "dt_code",
    "writhe",
    "alexander_mod2_from_diagram",
    "gf2_mul",
    "gf2_divmod",
    "gf2_poly_str",
]


class MalformedDiagram(ValueError):
    """Passage list is not a closed curve visiting each crossing twice."""


@dataclass(frozen=True)
class DTCode:
    """Signed even labels paired with odd labels 1, 3, 5, ...

    entry i is the even partner of label 2i+1, negative when the
    odd-labelled passage goes under.
    """

    entries: tuple[int, ...]

    def knotscape_line(self) -> str:
        return " ".join(str(e) for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def dt_code(diagram: PlanarDiagram) -> DTCode:
    """Label passages 1..2N along the curve and pair odd with even."""
    n = diagram.crossing_count
    by_crossing: dict[int, list[int]] = {}
    for pos, (ci, _) in enumerate(diagram.passages):
        by_crossing.setdefault(ci, []).append(pos)
    if len(by_crossing) != n or any(len(v) != 2 for v in by_crossing.values()):
        raise MalformedDiagram("each crossing must be visited exactly twice")
    entries = []
    for ci, (p1, p2) in sorted(by_crossing.items()):
        l1, l2 = p1 + 1, p2 + 1
        if l1 % 2 == l2 % 2:
            raise MalformedDiagram("passage labels at a crossing must have opposite parity")
        odd_pos, even_label = (p1, l2) if l1 % 2 == 1 else (p2, l1)
        odd_is_over = diagram.passages[odd_pos][1]
        entries.append((p1 if l1 % 2 == 1 else p2, -even_label if not odd_is_over else even_label))
    entries.sort()
    return DTCode(tuple(e for _, e in entries))


def writhe(diagram: PlanarDiagram) -> int:
    return sum(rec.sign for rec in diagram.crossings)


# ---------------------------------------------------------------------------
# GF(2)[t] arithmetic on bit-packed ints
# ---------------------------------------------------------------------------


def gf2_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def gf2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("GF(2)[t] division by zero")
    db = b.bit_length() - 1
    q = 0
    while a.bit_length() - 1 >= db and a:
        shift = a.bit_length() - 1 - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def gf2_poly_str(bits: int) -> str:
    if bits == 0:
        return "0"
    terms = []
    e = 0
    while bits:
        if bits & 1:
            terms.append("1" if e == 0 else ("t" if e == 1 else f"t^{e}"))
        bits >>= 1
        e += 1
    return "+".join(terms)


def _gf2_bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant over GF(2)[t]; divisions are exact."""
    n = len(m)
    if n == 0:
        return 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = gf2_mul(m[i][j], m[k][k]) ^ gf2_mul(m[i][k], m[k][j])
                q, rem = gf2_divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                m[i][j] = q
            m[i][k] = 0
        prev = m[k][k]
    return m[n - 1][n - 1]


def alexander_mod2_from_diagram(diagram: PlanarDiagram) -> int:
    """Alexander polynomial over GF(2), normalized to lowest degree 0.

    Builds the crossing-by-arc matrix (over-arc 1+t; at a positive
    crossing the incoming under-arc carries t and the outgoing one 1, at
    a negative crossing the other way around), deletes one row and one
    column, and takes the determinant over GF(2)[t].
    """
    n = diagram.crossing_count
    if n == 0:
        return 1
    passages = diagram.passages
    under_positions = [pos for pos, (_, over) in enumerate(passages) if not over]
    if len(under_positions) != n:
        raise MalformedDiagram("expected exactly one under-passage per crossing")
    # arc_of[pos] = index of the first under-passage at or after pos (cyclic):
    # arcs are labelled by the under-passage that terminates them.
    total = len(passages)
    arc_of = [0] * total
    nxt = 0
    for pos in range(total):
        while nxt < n and under_positions[nxt] < pos:
            nxt += 1
        arc_of[pos] = nxt % n
    rows = []
    for i, upos in enumerate(under_positions):
        ci = passages[upos][0]
        over_pos = next(
            pos for pos, (cj, over) in enumerate(passages) if cj == ci and over
        )
        row = [0] * n
        row[arc_of[over_pos]] ^= 0b11  # 1 + t
        t_coeff, one_coeff = (0b10, 0b01) if diagram.crossings[ci].sign > 0 else (0b01, 0b10)
        row[i] ^= t_coeff  # incoming arc
        row[(i + 1) % n] ^= one_coeff  # outgoing arc
        rows.append(row)
    minor = [row[: n - 1] for row in rows[: n - 1]]
    det = _gf2_bareiss_det(minor)
    if det == 0:
        return 0
    return det >> ((det & -det).bit_length() - 1)
