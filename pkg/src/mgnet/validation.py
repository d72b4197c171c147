"""Structural checks for an association: fast independence, subnet decomposition,
hop distances to the masters, and the conferencing-round split.

An association is sound when

* no fast transmitter interferes at any fast receiver,
* silencing decomposes the active nodes into non-interfering subnets,
* each subnet owns exactly one master, and every slow node reaches it over
  the cooperation graph within the scheme's round budget:
  floor((D-2)/2) hops when both message types are sent (one conferencing
  round goes to the opposite side and the remaining D-1 rounds split into
  a gather and a scatter phase), floor(D/2) hops for the slow-only scheme.

Finite line/ball instances may contain clipped subnets at the network rim;
those are reported as warnings, not violations, and are excluded from the
reachability check when they lack a master.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .association import Association, Role, Scheme
from .topology import SECTORED, WYNER, Network


@dataclass
class Subnet:
    members: tuple[int, ...]              # active Tx nodes of one component
    master: int | None                    # Rx id (CoMP reception) or Tx id (transmission)
    gamma: dict[int, int]                 # member -> cooperation hops to the master
    slow_members: tuple[int, ...] = ()


@dataclass
class ValidationReport:
    fast_independent: bool = True
    subnets_disjoint: bool = True
    master_reachable: bool = True
    hop_budget: int = 0
    violations: list[tuple[int, str]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.fast_independent and self.subnets_disjoint and self.master_reachable

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(
            self.fast_independent and other.fast_independent,
            self.subnets_disjoint and other.subnets_disjoint,
            self.master_reachable and other.master_reachable,
            max(self.hop_budget, other.hop_budget),
            self.violations + other.violations,
            self.warnings + other.warnings,
        )

    def to_json_dict(self) -> dict:
        return {
            "fast_independent": self.fast_independent,
            "subnets_disjoint": self.subnets_disjoint,
            "master_reachable": self.master_reachable,
            "hop_budget": self.hop_budget,
            "violations": [{"node": n, "code": c} for n, c in self.violations],
            "warnings": list(self.warnings),
        }


def check_round_split(scheme: Scheme, D: int) -> tuple[int, int]:
    """Conferencing rounds (d_tx, d_rx) used by each scheme, with d_tx + d_rx <= D."""
    if scheme is Scheme.NO_COOP:
        if D < 0:
            raise ValueError("D must be >= 0")
        return (0, 0)
    if D < 2:
        raise ValueError(f"D={D} is too small for {scheme.value}")
    if scheme is Scheme.BOTH_COMP_RX:
        return (1, D - 1)
    if scheme is Scheme.BOTH_COMP_TX:
        return (D - 1, 1)
    if scheme is Scheme.SLOW_COMP_RX:
        return (0, D)
    return (D, 0)


def hop_budget(scheme: Scheme, D: int) -> int:
    if scheme is Scheme.NO_COOP:
        return 0
    if scheme.mixed:
        return (D - 2) // 2
    return D // 2


def _require_same_net(net: Network, assoc: Association) -> None:
    if assoc.net is not net:
        raise ValueError("association was built for a different network")


def fast_noninterference(net: Network, assoc: Association) -> ValidationReport:
    """No fast Tx may appear in the interference set of a fast node's receiver unit."""
    _require_same_net(net, assoc)
    report = ValidationReport(hop_budget=hop_budget(assoc.scheme, assoc.D))
    for k in net.tx_nodes:
        if assoc.roles[k] is not Role.FAST:
            continue
        for j in net.interference[k]:
            if assoc.roles[j] is Role.FAST:
                report.fast_independent = False
                report.violations.append((k, f"fast-interference-from-{j}"))
    return report


def _components(net: Network, active: set[int]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in net.tx_nodes:
        if start not in active or start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in net.interference[u]:
                if v in active and v not in seen:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def _bfs_hops(adj: dict[int, tuple[int, ...]], allowed: set[int], start: int) -> dict[int, int]:
    hops = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in allowed and v not in hops:
                hops[v] = hops[u] + 1
                queue.append(v)
    return hops


def subnet_decompose(net: Network, assoc: Association) -> tuple[list[Subnet], ValidationReport]:
    """Connected components of the active interference graph, with masters and hop counts."""
    _require_same_net(net, assoc)
    report = ValidationReport(hop_budget=hop_budget(assoc.scheme, assoc.D))
    active = {k for k in net.tx_nodes if assoc.roles[k] is not Role.SILENT}
    comps = _components(net, active)
    relaxed = net.model == WYNER or "radius" in net.params
    master_set = set(assoc.masters)

    subnets = []
    for comp in comps:
        slow = tuple(k for k in comp if assoc.roles[k] is Role.SLOW)
        if net.model == SECTORED:
            cells = {net.tx_cell[k] for k in comp}
            masters = sorted(cells & master_set)
        else:
            masters = sorted(set(comp) & master_set)
        master = masters[0] if len(masters) == 1 else None
        if len(masters) > 1:
            report.subnets_disjoint = False
            report.violations.append((masters[1], "multi-master"))
        elif not masters and assoc.scheme.cooperative:
            if relaxed:
                report.warnings.append(f"partial-subnet:{comp[0]}")
            else:
                report.master_reachable = False
                report.violations.append((comp[0], "no-master"))

        gamma: dict[int, int] = {}
        if master is not None:
            if net.model == SECTORED:
                coop_cells = {net.tx_cell[k] for k in comp} | {master}
                hops = _bfs_hops(net.rx_coop, coop_cells, master)
                for k in comp:
                    if net.tx_cell[k] in hops:
                        gamma[k] = hops[net.tx_cell[k]]
            else:
                adj = net.tx_coop if assoc.scheme.comp_side == "tx" else net.rx_coop
                hops = _bfs_hops(adj, set(comp), master)
                gamma.update(hops)
            for k in comp:
                if k not in gamma:
                    report.master_reachable = False
                    report.violations.append((k, "unreachable"))
        subnets.append(Subnet(tuple(comp), master, gamma, slow))

    # components never share an interference edge by construction; verify anyway
    owner = {k: i for i, s in enumerate(subnets) for k in s.members}
    for k in active:
        for j in net.interference[k]:
            if j in active and owner[j] != owner[k]:
                report.subnets_disjoint = False
                report.violations.append((k, f"cross-subnet-interference-{j}"))
    return subnets, report


def master_reachability(subnets: list[Subnet], scheme: Scheme, D: int) -> ValidationReport:
    """Every slow node must reach its subnet master within the scheme's hop budget."""
    budget = hop_budget(scheme, D)
    report = ValidationReport(hop_budget=budget)
    for sub in subnets:
        if sub.master is None:
            continue
        for k in sub.slow_members:
            g = sub.gamma.get(k)
            if g is None:
                report.master_reachable = False
                report.violations.append((k, "unreachable"))
            elif g > budget:
                report.master_reachable = False
                report.violations.append((k, f"hop-budget-exceeded-{g}>{budget}"))
    return report


def validate(net: Network, assoc: Association) -> tuple[list[Subnet], ValidationReport]:
    """Run all structural checks and merge the reports."""
    r1 = fast_noninterference(net, assoc)
    subnets, r2 = subnet_decompose(net, assoc)
    r3 = master_reachability(subnets, assoc.scheme, assoc.D)
    return subnets, r1.merge(r2).merge(r3)
