"""Cell / sector association rules: who is silent, fast, slow, and who is a master.

The cooperative schemes silence a sparse separator set so that the active
cells split into non-interfering subnets, each owning one master node that
every slow node can reach within the conferencing budget.

Hexagonal models: masters sit on the sublattice of spacing tau (tau = D/2
when both message types are sent, D/2 + 1 when only delay-tolerant data is
sent) and the silenced separator is the set of cells at hex distance
exactly tau from the master lattice.  In the mixed scheme the fast cells
are those with (a + b) % 3 == 0, which is an independent set of the
6-neighbour interference graph.

Sectorized model: the layer-D/2 separator silences whole corner cells at
(D/2, D/2), (-D/2, 0), (0, -D/2) relative to a master, keeps the corner
cells at (D/2, 0), (0, D/2), (-D/2, -D/2) fully active, and silences one
sector of each non-corner layer cell; three all-slow spokes of cells run
from the master towards the silenced corners, every other interior cell
has exactly one fast sector, and all active layer-D/2 sectors are fast.
The orientation of the per-cell choices is pinned by the requirement that
fast sectors never interfere and that the per-subnet load counts close
(see tests); it is the unique such orientation for the sector geometry of
this model.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .lattice import Coord, is_master
from .topology import HEX, SECTORED, WYNER, Network, cell_coord


class Scheme(str, enum.Enum):
    BOTH_COMP_RX = "BothCompRx"
    BOTH_COMP_TX = "BothCompTx"
    SLOW_COMP_RX = "SlowOnlyCompRx"
    SLOW_COMP_TX = "SlowOnlyCompTx"
    NO_COOP = "NoCoop"

    @property
    def cooperative(self) -> bool:
        return self is not Scheme.NO_COOP

    @property
    def mixed(self) -> bool:
        return self in (Scheme.BOTH_COMP_RX, Scheme.BOTH_COMP_TX)

    @property
    def comp_side(self) -> str:
        if self in (Scheme.BOTH_COMP_RX, Scheme.SLOW_COMP_RX):
            return "rx"
        if self in (Scheme.BOTH_COMP_TX, Scheme.SLOW_COMP_TX):
            return "tx"
        return "none"


SCHEME_ALIASES = {
    "both-rx": Scheme.BOTH_COMP_RX,
    "both-tx": Scheme.BOTH_COMP_TX,
    "slow-rx": Scheme.SLOW_COMP_RX,
    "slow-tx": Scheme.SLOW_COMP_TX,
    "no-coop": Scheme.NO_COOP,
}


class Role(str, enum.Enum):
    FAST = "F"
    SLOW = "S"
    SILENT = "X"


@dataclass
class Association:
    """Role per Tx node plus the designated master nodes for one scheme."""

    net: Network
    scheme: Scheme
    D: int
    roles: dict[int, Role]
    masters: tuple[int, ...]  # Rx ids for CoMP reception, Tx ids for CoMP transmission

    def nodes_with(self, role: Role) -> list[int]:
        return [k for k in self.net.tx_nodes if self.roles[k] is role]

    def to_json_dict(self) -> dict:
        return {
            "scheme": self.scheme.value,
            "D": self.D,
            "roles": {str(k): r.value for k, r in sorted(self.roles.items())},
            "masters": list(self.masters),
        }


def shifted_mod(x: int, tau: int) -> int:
    """Reduce x modulo 3*tau into the window [-tau, 2*tau)."""
    if tau < 1:
        raise ValueError("tau must be >= 1")
    return ((x + tau) % (3 * tau)) - tau


def _check_d(D: int, scheme: Scheme, *, hex_lattice: bool = False) -> None:
    if scheme is Scheme.NO_COOP:
        if D < 0:
            raise ValueError("D must be >= 0")
        return
    if D < 2 or D % 2 != 0:
        raise ValueError(f"D={D}: cooperative schemes need an even D >= 2")
    if hex_lattice and (D // 2 - 1) % 3 != 0:
        raise ValueError(f"D={D}: hexagonal schemes need (D/2 - 1) mod 3 == 0")


def assign_wyner(net: Network, D: int, scheme: Scheme) -> Association:
    if net.model != WYNER:
        raise ValueError("assign_wyner needs a Wyner network")
    _check_d(D, scheme)
    K = net.n_tx
    roles: dict[int, Role] = {}
    masters: list[int] = []
    if scheme is Scheme.NO_COOP:
        for k in net.tx_nodes:
            roles[k] = Role.SILENT if k % 2 == 0 else Role.FAST
        return Association(net, scheme, D, roles, ())

    period = D + 2
    silent = {j * period for j in range(1, K // period + 1)}
    for k in net.tx_nodes:
        if k in silent:
            roles[k] = Role.SILENT
        elif scheme.mixed:
            roles[k] = Role.FAST if k % 2 == 1 else Role.SLOW
        else:
            roles[k] = Role.SLOW
    # one master per complete subnet {s+1, ..., s+D+1}; a short tail gets none
    s = 0
    while s + D + 1 <= K:
        masters.append(s + D // 2 + 1)
        s += period
    return Association(net, scheme, D, roles, tuple(masters))


def scheme_tau(model: str, scheme: Scheme, D: int) -> int:
    """Master-lattice spacing used by a cooperative scheme on a hex-lattice model."""
    if model == HEX and scheme in (Scheme.SLOW_COMP_RX, Scheme.SLOW_COMP_TX):
        return D // 2 + 1
    return D // 2


def _hex_layers(net: Network, tau: int):
    """(distance-to-master-lattice, displacement reps) per cell id."""
    geo = net.geometry
    out = {}
    for i in net.rx_nodes:
        c = cell_coord(net, i)
        out[i] = geo.nearest_masters(c, tau)
    return out


def assign_hex(net: Network, D: int, scheme: Scheme) -> Association:
    if net.model != HEX:
        raise ValueError("assign_hex needs a hexagonal network")
    roles: dict[int, Role] = {}
    if scheme is Scheme.NO_COOP:
        _check_d(D, scheme)
        for i in net.tx_nodes:
            a, b = net.coords[i]
            roles[i] = Role.FAST if (a + b) % 3 == 0 else Role.SILENT
        return Association(net, scheme, D, roles, ())

    _check_d(D, scheme, hex_lattice=True)
    tau = scheme_tau(HEX, scheme, D)
    if hasattr(net.geometry, "tau") and net.geometry.tau != tau:
        raise ValueError(f"torus network has tau={net.geometry.tau}, scheme needs tau={tau}")
    layers = _hex_layers(net, tau)
    masters = []
    for i in net.tx_nodes:
        a, b = net.coords[i]
        dist = layers[i][0]
        if dist == tau:
            roles[i] = Role.SILENT
        elif scheme.mixed and (a + b) % 3 == 0:
            roles[i] = Role.FAST
        else:
            roles[i] = Role.SLOW
        if is_master((a, b), tau):
            masters.append(i)
    return Association(net, scheme, D, roles, tuple(masters))


# Sector-role tables for the mixed sectorized scheme, in coordinates
# relative to the nearest master.  Kept corners stay fully active, the
# other three corners are silenced entirely, non-corner layer cells lose
# one sector, and interior cells off the three all-slow spokes carry one
# fast sector each.
def _sector_silenced(delta: Coord, tau: int) -> set[str]:
    a, b = delta
    if (a, b) in ((tau, 0), (0, tau), (-tau, -tau)):
        return set()
    if (a, b) in ((tau, tau), (-tau, 0), (0, -tau)):
        return {"E", "W", "S"}
    if abs(a) == tau and (a > 0) == (b > 0):
        return {"S"}
    if abs(b) == tau and (a > 0) == (b > 0):
        return {"W"}
    return {"E"}


def _sector_fast_kind(delta: Coord) -> str | None:
    a, b = delta
    if (a == b and a >= 0) or (b == 0 and a <= 0) or (a == 0 and b <= 0):
        return None  # all-slow spoke
    if a > 0 and b < a:
        return "W"
    if b > 0 and b > a:
        return "S"
    return "E"


def assign_sectored(net: Network, D: int, scheme: Scheme,
                    no_coop_kind: str = "W") -> Association:
    if net.model != SECTORED:
        raise ValueError("assign_sectored needs a sectorized network")
    if scheme.comp_side == "tx":
        raise ValueError("the sectorized model only supports CoMP reception")
    roles: dict[int, Role] = {}
    if scheme is Scheme.NO_COOP:
        _check_d(D, scheme)
        for t in net.tx_nodes:
            _, kind = net.coords[t]
            roles[t] = Role.FAST if kind == no_coop_kind else Role.SILENT
        return Association(net, scheme, D, roles, ())

    _check_d(D, scheme)
    tau = D // 2
    if hasattr(net.geometry, "tau") and net.geometry.tau != tau:
        raise ValueError(f"torus network has tau={net.geometry.tau}, scheme needs tau={tau}")
    layers = _hex_layers(net, tau)
    masters = []
    for i in net.rx_nodes:
        c = cell_coord(net, i)
        dist, hits = layers[i]
        if is_master(c, tau):
            masters.append(i)
        if dist < tau:
            fast = None if not scheme.mixed else _sector_fast_kind(hits[0][1])
            for t in net.cell_sectors[i]:
                _, kind = net.coords[t]
                roles[t] = Role.FAST if kind == fast else Role.SLOW
        else:
            assert dist == tau, "every cell lies within tau of a master"
            silenced: set[str] | None = None
            for _, delta in hits:
                s = _sector_silenced(delta, tau)
                if silenced is not None and s != silenced:
                    raise AssertionError(f"inconsistent layer rules at cell {c}: {silenced} vs {s}")
                silenced = s
            active = Role.FAST if scheme.mixed else Role.SLOW
            for t in net.cell_sectors[i]:
                _, kind = net.coords[t]
                roles[t] = Role.SILENT if kind in silenced else active
    return Association(net, scheme, D, roles, tuple(masters))


def assign(net: Network, D: int, scheme: Scheme) -> Association:
    """Model dispatch."""
    if net.model == WYNER:
        return assign_wyner(net, D, scheme)
    if net.model == HEX:
        return assign_hex(net, D, scheme)
    return assign_sectored(net, D, scheme)
