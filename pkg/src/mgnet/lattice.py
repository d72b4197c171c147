"""Axial hexagonal lattice arithmetic.

Cells live at integer coordinates (a, b) meaning a*e_x + b*e_y with basis
vectors 120 degrees apart.  The graph distance between cells is
max(|da|, |db|, |da-db|); the six unit neighbours are +-(1,0), +-(0,1),
+-(1,1).

Master cells for a subnet spacing ``tau`` form the sublattice

    { (a, b) : a % tau == 0, b % tau == 0, (a + b) % (3 * tau) == 0 }

which is generated by (tau, 2*tau) and (2*tau, tau).  Masters are 2*tau
apart, every cell lies within tau of one, and the cells at distance
exactly tau tile the plane into disjoint radius-(tau-1) balls.
"""

from __future__ import annotations

from dataclasses import dataclass

Coord = tuple[int, int]

NEIGHBOR_STEPS: tuple[Coord, ...] = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))


def hex_distance(c1: Coord, c2: Coord) -> int:
    da = c1[0] - c2[0]
    db = c1[1] - c2[1]
    return max(abs(da), abs(db), abs(da - db))


def rotate_ccw(c: Coord) -> Coord:
    """Rotate a coordinate by 2*pi/3 about the origin: (a, b) -> (-b, a-b)."""
    return (-c[1], c[0] - c[1])


def ball(radius: int) -> list[Coord]:
    """All cells within hex distance ``radius`` of the origin, row-major order."""
    cells = [(a, b)
             for a in range(-radius, radius + 1)
             for b in range(-radius, radius + 1)
             if hex_distance((a, b), (0, 0)) <= radius]
    cells.sort()
    return cells


def is_master(c: Coord, tau: int) -> bool:
    a, b = c
    return a % tau == 0 and b % tau == 0 and (a + b) % (3 * tau) == 0


class PlaneGeometry:
    """Cells of the infinite lattice; master sublattice of spacing ``tau`` everywhere."""

    def canon(self, c: Coord) -> Coord:
        return c

    def nearest_masters(self, c: Coord, tau: int) -> tuple[int, list[tuple[Coord, Coord]]]:
        """Distance to the master lattice and all (master, displacement) pairs attaining it."""
        a, b = c
        m0 = round((2 * b - a) / (3 * tau))
        n0 = round((2 * a - b) / (3 * tau))
        best = None
        hits: list[tuple[Coord, Coord]] = []
        for dm in (-2, -1, 0, 1, 2):
            for dn in (-2, -1, 0, 1, 2):
                m, n = m0 + dm, n0 + dn
                ma, mb = (m + 2 * n) * tau, (2 * m + n) * tau
                d = hex_distance(c, (ma, mb))
                if best is None or d < best:
                    best, hits = d, [((ma, mb), (a - ma, b - mb))]
                elif d == best:
                    hits.append(((ma, mb), (a - ma, b - mb)))
        assert best is not None
        return best, hits


@dataclass(frozen=True)
class TorusGeometry:
    """Quotient of the lattice by M copies of the master lattice of spacing tau.

    The torus holds exactly M*M whole subnets (3 * M^2 * tau^2 cells), so
    per-subnet counts on it are free of edge effects.
    """

    tau: int
    copies: int

    @property
    def period(self) -> int:
        return 3 * self.tau * self.copies

    def canon(self, c: Coord) -> Coord:
        mt = self.tau * self.copies
        a, b = c
        for _ in range(4):
            m = (2 * b - a) // self.period
            n = (2 * a - b) // self.period
            if m == 0 and n == 0:
                return (a, b)
            a -= (m + 2 * n) * mt
            b -= (2 * m + n) * mt
        raise AssertionError(f"canonicalisation did not converge for {c}")

    def cells(self) -> list[Coord]:
        reps = {self.canon((a, b)) for a in range(self.period) for b in range(self.period)}
        assert len(reps) == 3 * self.copies**2 * self.tau**2
        return sorted(reps)

    def masters(self) -> list[Coord]:
        out = sorted({self.canon(c) for c in _lattice_window(self.tau, self.period)})
        assert len(out) == self.copies**2
        return out

    def displacements(self, c: Coord, m: Coord) -> tuple[int, list[Coord]]:
        """Shortest torus displacement(s) from master m to cell c."""
        mt = self.tau * self.copies
        da, db = c[0] - m[0], c[1] - m[1]
        best = None
        reps: list[Coord] = []
        for i in (-2, -1, 0, 1, 2):
            for j in (-2, -1, 0, 1, 2):
                r = (da - (i + 2 * j) * mt, db - (2 * i + j) * mt)
                d = max(abs(r[0]), abs(r[1]), abs(r[0] - r[1]))
                if best is None or d < best:
                    best, reps = d, [r]
                elif d == best:
                    reps.append(r)
        assert best is not None
        return best, reps

    def nearest_masters(self, c: Coord, tau: int) -> tuple[int, list[tuple[Coord, Coord]]]:
        if tau != self.tau:
            raise ValueError(f"torus was built for tau={self.tau}, not tau={tau}")
        best = None
        hits: list[tuple[Coord, Coord]] = []
        for m in self.masters():
            d, reps = self.displacements(c, m)
            if best is None or d < best:
                best, hits = d, [(m, r) for r in reps]
            elif d == best:
                hits.extend((m, r) for r in reps)
        assert best is not None
        return best, hits


def _lattice_window(tau: int, span: int) -> list[Coord]:
    pts = []
    for a in range(-span, 2 * span, tau):
        for b in range(-span, 2 * span, tau):
            if (a + b) % (3 * tau) == 0:
                pts.append((a, b))
    return pts
