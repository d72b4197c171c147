"""Construction of the three cellular interference network models.

* Wyner linear network: K cells on a line, each interfering with its two
  neighbours; cooperation links mirror the interference links, so the
  directed link totals are 2K-2.
* Hexagonal network: cells on the axial hex lattice, 6-regular interference
  and cooperation in the interior.
* Sectorized hexagonal network: three 120-degree transmitter sectors per
  cell (kinds "E", "W", "S", dividers pointing at the edge midpoints
  towards neighbours (0,1), (-1,-1), (1,0)).  A sector wedge touches one
  neighbour cell across a full edge and two more across half edges, which
  gives every sector exactly four interfering sectors spread over three
  neighbouring cells; sectors of the same cell never interfere.  Receiver
  cooperation stays cell-to-cell (6 neighbours), transmitter cooperation
  follows the sector interference graph (4 neighbours).

Finite instances come in two flavours: hex-distance balls of a given
radius (edge effects at the rim) and tori holding M x M whole subnets of a
given master spacing tau (no edge effects; used by the exact count
oracles).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import (Coord, NEIGHBOR_STEPS, PlaneGeometry, TorusGeometry,
                      ball)

WYNER = "WynerLinear"
HEX = "Hexagonal"
SECTORED = "SectorizedHexagonal"

SECTOR_KINDS = ("E", "W", "S")

# Interfering sectors of each sector kind, as (kind, cell offset) pairs.
# Two partners sit in the full-edge neighbour, one in each half-edge
# neighbour.  The relation is symmetric, 4-regular and invariant under the
# 2*pi/3 rotation (a,b) -> (-b, a-b) with the kind cycle E -> W -> S.
SECTOR_RULE: dict[str, tuple[tuple[str, Coord], ...]] = {
    "E": (("W", (1, 1)), ("S", (1, 1)), ("W", (1, 0)), ("S", (0, 1))),
    "W": (("E", (-1, 0)), ("S", (-1, 0)), ("S", (0, 1)), ("E", (-1, -1))),
    "S": (("E", (0, -1)), ("W", (0, -1)), ("E", (-1, -1)), ("W", (1, 0))),
}


@dataclass
class Network:
    """Immutable-by-convention interference/cooperation topology."""

    model: str
    L: int
    tx_nodes: tuple[int, ...]
    rx_nodes: tuple[int, ...]
    interference: dict[int, tuple[int, ...]]  # I_k: tx nodes heard at node k's receiver unit
    tx_coop: dict[int, tuple[int, ...]]
    rx_coop: dict[int, tuple[int, ...]]
    q_tx: int
    q_rx: int
    params: dict = field(default_factory=dict)
    coords: dict[int, object] = field(default_factory=dict, repr=False)
    tx_cell: dict[int, int] = field(default_factory=dict, repr=False)  # sector -> cell (sectorized)
    cell_sectors: dict[int, tuple[int, ...]] = field(default_factory=dict, repr=False)
    geometry: object | None = field(default=None, repr=False)

    @property
    def n_tx(self) -> int:
        return len(self.tx_nodes)

    @property
    def n_rx(self) -> int:
        return len(self.rx_nodes)

    def cell_of(self, tx: int) -> int:
        return self.tx_cell[tx] if self.model == SECTORED else tx

    def to_json_dict(self) -> dict:
        if self.model == SECTORED:
            nodes = [{"id": t, "coord": list(self.coords[t][0]), "kind": self.coords[t][1]}
                     for t in self.tx_nodes]
        elif self.model == HEX:
            nodes = [{"id": t, "coord": list(self.coords[t])} for t in self.tx_nodes]
        else:
            nodes = [{"id": t, "coord": t} for t in self.tx_nodes]
        pairs = lambda adj: [[a, b] for a in sorted(adj) for b in adj[a]]
        return {
            "model": self.model,
            "L": self.L,
            "params": self.params,
            "nodes": nodes,
            "interference": pairs(self.interference),
            "tx_coop": pairs(self.tx_coop),
            "rx_coop": pairs(self.rx_coop),
            "q_tx": self.q_tx,
            "q_rx": self.q_rx,
        }


def network_from_json_dict(obj: dict) -> Network:
    """Rebuild a network from its serialized parameters (adjacency is re-derived)."""
    model, L, p = obj["model"], obj["L"], obj["params"]
    if model == WYNER:
        return build_wyner(p["K"], L)
    if model == HEX:
        if "tau" in p:
            return build_hex_torus(p["tau"], p["copies"], L)
        return build_hex(p["radius"], L)
    if model == SECTORED:
        if "tau" in p:
            return build_sectored_hex_torus(p["tau"], p["copies"], L)
        return build_sectored_hex(p["radius"], L)
    raise ValueError(f"unknown model {model!r}")


def build_wyner(K: int, L: int) -> Network:
    """Linear network with cells 1..K; node k interferes with k-1 and k+1."""
    if K < 1 or L < 1:
        raise ValueError("K and L must be positive")
    nodes = tuple(range(1, K + 1))
    adj = {k: tuple(n for n in (k - 1, k + 1) if 1 <= n <= K) for k in nodes}
    q = sum(len(v) for v in adj.values())
    return Network(
        model=WYNER, L=L, tx_nodes=nodes, rx_nodes=nodes,
        interference=adj, tx_coop=dict(adj), rx_coop=dict(adj),
        q_tx=q, q_rx=q, params={"K": K},
        coords={k: k for k in nodes},
    )


def _hex_from_cells(cells: list[Coord], L: int, canon, params: dict,
                    geometry) -> Network:
    index = {c: i for i, c in enumerate(cells)}
    adj: dict[int, tuple[int, ...]] = {}
    for c, i in index.items():
        nbrs = []
        for da, db in NEIGHBOR_STEPS:
            n = canon((c[0] + da, c[1] + db))
            if n in index:
                nbrs.append(index[n])
        adj[i] = tuple(sorted(set(nbrs)))
    q = sum(len(v) for v in adj.values())
    nodes = tuple(range(len(cells)))
    return Network(
        model=HEX, L=L, tx_nodes=nodes, rx_nodes=nodes,
        interference=adj, tx_coop=dict(adj), rx_coop=dict(adj),
        q_tx=q, q_rx=q, params=params,
        coords={i: c for c, i in index.items()},
        geometry=geometry,
    )


def build_hex(radius: int, L: int) -> Network:
    """Hexagonal network on the radius-``radius`` hex ball around the origin."""
    if radius < 0 or L < 1:
        raise ValueError("radius must be >= 0 and L >= 1")
    return _hex_from_cells(ball(radius), L, lambda c: c,
                           {"radius": radius}, PlaneGeometry())


def build_hex_torus(tau: int, copies: int, L: int) -> Network:
    """Hexagonal network on a torus of ``copies`` x ``copies`` whole spacing-``tau`` subnets."""
    if tau < 1 or copies < 1 or L < 1:
        raise ValueError("tau, copies and L must be positive")
    geo = TorusGeometry(tau, copies)
    return _hex_from_cells(geo.cells(), L, geo.canon,
                           {"tau": tau, "copies": copies}, geo)


def _sectored_from_cells(cells: list[Coord], L: int, canon, params: dict,
                         geometry) -> Network:
    index = {c: i for i, c in enumerate(cells)}
    rx_nodes = tuple(range(len(cells)))
    kind_idx = {k: j for j, k in enumerate(SECTOR_KINDS)}

    def sector_id(cell: int, kind: str) -> int:
        return 3 * cell + kind_idx[kind]

    tx_nodes = tuple(range(3 * len(cells)))
    coords: dict[int, object] = {}
    tx_cell: dict[int, int] = {}
    cell_sectors: dict[int, tuple[int, ...]] = {}
    for c, i in index.items():
        ids = tuple(sector_id(i, k) for k in SECTOR_KINDS)
        cell_sectors[i] = ids
        for k, t in zip(SECTOR_KINDS, ids):
            coords[t] = (c, k)
            tx_cell[t] = i

    interference: dict[int, tuple[int, ...]] = {}
    for c, i in index.items():
        for k in SECTOR_KINDS:
            nbrs = []
            for k2, (da, db) in SECTOR_RULE[k]:
                n = canon((c[0] + da, c[1] + db))
                if n in index:
                    nbrs.append(sector_id(index[n], k2))
            interference[sector_id(i, k)] = tuple(sorted(set(nbrs)))
    q_tx = sum(len(v) for v in interference.values())

    rx_coop: dict[int, tuple[int, ...]] = {}
    for c, i in index.items():
        nbrs = []
        for da, db in NEIGHBOR_STEPS:
            n = canon((c[0] + da, c[1] + db))
            if n in index:
                nbrs.append(index[n])
        rx_coop[i] = tuple(sorted(set(nbrs)))
    q_rx = sum(len(v) for v in rx_coop.values())

    rx_coords = {i: c for c, i in index.items()}
    coords.update({("cell", i): c for i, c in rx_coords.items()})
    return Network(
        model=SECTORED, L=L, tx_nodes=tx_nodes, rx_nodes=rx_nodes,
        interference=interference, tx_coop=dict(interference), rx_coop=rx_coop,
        q_tx=q_tx, q_rx=q_rx, params=params,
        coords=coords, tx_cell=tx_cell, cell_sectors=cell_sectors,
        geometry=geometry,
    )


def build_sectored_hex(radius: int, L: int) -> Network:
    """Sectorized hexagonal network (3 Tx sectors per cell, one 3L-antenna Rx per cell)."""
    if radius < 0 or L < 1:
        raise ValueError("radius must be >= 0 and L >= 1")
    return _sectored_from_cells(ball(radius), L, lambda c: c,
                                {"radius": radius}, PlaneGeometry())


def build_sectored_hex_torus(tau: int, copies: int, L: int) -> Network:
    if tau < 1 or copies < 1 or L < 1:
        raise ValueError("tau, copies and L must be positive")
    geo = TorusGeometry(tau, copies)
    return _sectored_from_cells(geo.cells(), L, geo.canon,
                                {"tau": tau, "copies": copies}, geo)


def cell_coord(net: Network, rx: int) -> Coord:
    if net.model == SECTORED:
        return net.coords[("cell", rx)]
    return net.coords[rx]
