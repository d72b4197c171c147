"""Exact cooperation-message accounting and the matching closed-form expressions.

Every conferencing message carries prelog L, so cooperation loads are pure
message counts.  The ledger distinguishes:

* precancel_msgs: quantized slow-signal descriptions delivered to fast
  transmitters so they can pre-subtract slow interference;
* fast_share_msgs: decoded fast messages passed from a fast receiver to
  each neighbouring receiver that still has to decode slow data behind
  that interference (counted once per receiving cell);
* fanin/fanout_msgs: quantized outputs hopping towards the master and the
  jointly decoded slow messages hopping back (one message per hop);
* q_dedup: descriptions counted both for CoMP transmission fan-out and for
  precancelation at fast Txs and thus sent only once;
* fast_master_dedup: fast-master saving in the linear model (a fast master
  decodes all slow messages itself, so it never forwards its own decoded
  message to its slow neighbours).  The 2-D closed forms do not take this
  saving, so the ledger applies it in the linear model only.

Average prelogs divide by the idealised directed-link totals (2 per node
in the linear model, 6 per cell in the hexagonal models, 4 per sector /
6 per cell in the sectorized one); `finite_prelogs` divides by the actual
finite link counts instead.  On a whole-subnet torus both coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .association import Association, Role, Scheme
from .rationals import ratio_to_json
from .topology import HEX, SECTORED, WYNER, Network
from .validation import Subnet


@dataclass
class LoadReport:
    scheme: Scheme
    D: int
    L: int
    precancel_msgs: int
    fast_share_msgs: int
    fanin_msgs: int
    fanout_msgs: int
    q_dedup: int
    fast_master_dedup: int
    tx_message_total: int
    rx_message_total: int
    mu_tx: Fraction
    mu_rx: Fraction
    max_tx_link_load: int
    max_rx_link_load: int
    n_subnets: int

    def to_json_dict(self) -> dict:
        d = {
            "scheme": self.scheme.value, "D": self.D, "L": self.L,
            "precancel_msgs": self.precancel_msgs,
            "fast_share_msgs": self.fast_share_msgs,
            "fanin_msgs": self.fanin_msgs, "fanout_msgs": self.fanout_msgs,
            "q_dedup": self.q_dedup, "fast_master_dedup": self.fast_master_dedup,
            "tx_message_total": self.tx_message_total,
            "rx_message_total": self.rx_message_total,
            "mu_tx": ratio_to_json(self.mu_tx), "mu_rx": ratio_to_json(self.mu_rx),
            "max_tx_link_load": self.max_tx_link_load,
            "max_rx_link_load": self.max_rx_link_load,
            "n_subnets": self.n_subnets,
        }
        return d


@dataclass
class ClosedForm:
    model: str
    scheme: Scheme
    D: int
    L: int
    s_f: Fraction
    s_s: Fraction
    mu_tx: Fraction
    mu_rx: Fraction

    def to_json_dict(self) -> dict:
        return {
            "model": self.model, "scheme": self.scheme.value, "D": self.D, "L": self.L,
            "s_f": ratio_to_json(self.s_f), "s_s": ratio_to_json(self.s_s),
            "mu_tx": ratio_to_json(self.mu_tx), "mu_rx": ratio_to_json(self.mu_rx),
        }


def _check_closed_form_args(model: str, scheme: Scheme, D: int) -> None:
    if scheme is Scheme.NO_COOP:
        if D < 0:
            raise ValueError("D must be >= 0")
        return
    if D < 2 or D % 2 != 0:
        raise ValueError(f"D={D}: cooperative schemes need an even D >= 2")
    if model == HEX and (D // 2 - 1) % 3 != 0:
        raise ValueError(f"D={D}: hexagonal schemes need (D/2 - 1) mod 3 == 0")
    if model == SECTORED and scheme.comp_side == "tx":
        raise ValueError("the sectorized model only supports CoMP reception")


def formulas(model: str, D: int, L: int) -> dict[str, Fraction]:
    """All closed-form MG values and prelog requirements of one model at (D, L)."""
    F = Fraction
    if model == WYNER:
        odd_master = (D // 2 + 1) % 2 == 1
        rx_num = F(D) + F(D * D, 4) - (2 if odd_master else 1)
        return {
            "s_nocoop": F(L, 2),
            "s_max": F(L * (D + 1), D + 2),
            "s_f_both": F(L, 2),
            "s_s_both": F(L * D, 2 * (D + 2)),
            "mu_r_tx": F(L * D, 2 * (D + 2)),
            "mu_r_rx": L * rx_num / (2 * (D + 2)),
            "mu_t_tx": F(L * D, 8),
            "mu_t_rx": F(L * D, 2 * (D + 2)),
            "mu_s_tx": F(L * D, 4),
            "mu_s_rx": F(L * D, 4),
        }
    if model == HEX:
        return {
            "s_nocoop": F(L, 3),
            "s_max": F(L * (4 + 3 * D * (D + 2)), 3 * (D + 2) ** 2),
            "s_f_both": F(L * (D * D - 2 * D + 4), 3 * D * D),
            "s_s_both": F(L * (2 * D - 4), 3 * D),
            "mu_r_tx": F(L * (3 * D - 4) * (D - 2), 9 * D * D),
            "mu_r_rx": F(L * (2 * D**3 + 3 * D * D - 30 * D + 32), 27 * D * D),
            "mu_t_tx": F(L * (2 * D**3 - 12 * D - 28), 27 * D * D),
            "mu_t_rx": F(L * (3 * D - 4) * (D - 2), 9 * D * D),
            "mu_s_tx": F(L * D * (D + 1), 9 * (D + 2)),
            "mu_s_rx": F(L * D * (D + 1), 9 * (D + 2)),
        }
    if model == SECTORED:
        return {
            "s_nocoop": F(L, 3),
            "s_max": F(L * (3 * D - 2), 3 * D),
            "s_f_both": F(L, 3),
            "s_s_both": F(L * (2 * D - 2), 3 * D),
            "mu_r_tx": F(L * (D - 1), 3 * D),
            "mu_r_rx": F(L * (2 * D * D - 5), 9 * D),
            "mu_s_rx": F(L * (D - 1), 3),
        }
    raise ValueError(f"unknown model {model!r}")


def closed_form(model: str, scheme: Scheme, D: int, L: int) -> ClosedForm:
    """Asymptotic (MG pair, required prelogs) for one scheme on one model."""
    _check_closed_form_args(model, scheme, D)
    zero = Fraction(0)
    if scheme is Scheme.NO_COOP:
        f = formulas(model, max(D, 2), L)  # no-coop values do not depend on D
        return ClosedForm(model, scheme, D, L, f["s_nocoop"], zero, zero, zero)
    f = formulas(model, D, L)
    if scheme is Scheme.BOTH_COMP_RX:
        return ClosedForm(model, scheme, D, L, f["s_f_both"], f["s_s_both"],
                          f["mu_r_tx"], f["mu_r_rx"])
    if scheme is Scheme.BOTH_COMP_TX:
        return ClosedForm(model, scheme, D, L, f["s_f_both"], f["s_s_both"],
                          f["mu_t_tx"], f["mu_t_rx"])
    if scheme is Scheme.SLOW_COMP_RX:
        return ClosedForm(model, scheme, D, L, zero, f["s_max"], zero, f["mu_s_rx"])
    return ClosedForm(model, scheme, D, L, zero, f["s_max"], f["mu_s_tx"], zero)


def mixed_subnet_counts(D: int) -> tuple[int, int]:
    """Fast and slow cells per subnet of the mixed hexagonal association."""
    if D < 2 or D % 2 != 0 or (D // 2 - 1) % 3 != 0:
        raise ValueError(f"D={D}: need an even D >= 2 with (D/2 - 1) mod 3 == 0")
    return (D * D // 4 - D // 2 + 1, D * D // 2 - D)


def subnet_sizes(model: str, scheme: Scheme, D: int) -> tuple[int, int]:
    """(partition cells used as asymptotic denominator, active members per subnet)."""
    _check_closed_form_args(model, scheme, D)
    if model == WYNER:
        return (2, 1) if scheme is Scheme.NO_COOP else (D + 2, D + 1)
    if model == HEX:
        if scheme is Scheme.NO_COOP:
            return (3, 1)
        if scheme.mixed:
            return (3 * D * D // 4, 1 + 3 * D * (D - 2) // 4)
        return (3 * (D + 2) ** 2 // 4, 1 + 3 * D * (D + 2) // 4)
    if scheme is Scheme.NO_COOP:
        return (3, 1)
    return (9 * D * D // 4, 9 * D * D // 4 - 3 * D // 2)


def _asymptotic_denominators(net: Network) -> tuple[int, int]:
    if net.model == WYNER:
        return 2 * net.n_tx, 2 * net.n_rx
    if net.model == HEX:
        return 6 * net.n_tx, 6 * net.n_rx
    return 4 * net.n_tx, 6 * net.n_rx


def _wyner_q_dedup(D: int, master_role: Role) -> int:
    return D // 2 if master_role is Role.FAST else D // 2 - 1


def message_ledger(net: Network, assoc: Association, subnets: list[Subnet]) -> LoadReport:
    """Count every cooperation message of the scheme on this finite network."""
    roles = assoc.roles
    scheme = assoc.scheme
    D, L = assoc.D, net.L

    precancel = 0
    fast_cells: dict[int, set[int]] = {}
    for k in net.tx_nodes:
        if roles[k] is Role.FAST:
            slow_nbrs = [j for j in net.interference[k] if roles[j] is Role.SLOW]
            precancel += len(slow_nbrs)
            fast_cells[k] = {net.cell_of(j) for j in slow_nbrs} - {net.cell_of(k)}
    fast_share = sum(len(c) for c in fast_cells.values())

    fanin = 0
    fast_master_saved = 0
    q_dedup = 0
    for sub in subnets:
        fanin += sum(sub.gamma.get(k, 0) for k in sub.slow_members)
        if sub.master is None or not scheme.cooperative:
            continue
        if scheme is Scheme.BOTH_COMP_RX and net.model == WYNER \
                and roles[sub.master] is Role.FAST:
            fast_master_saved += sum(1 for j in net.interference[sub.master]
                           if roles[j] is Role.SLOW)
        if scheme is Scheme.BOTH_COMP_TX:
            if net.model == WYNER:
                q_dedup += _wyner_q_dedup(D, roles[sub.master])
            else:
                tau = D // 2
                q_dedup += 6 if roles[sub.master] is Role.FAST else 0
                q_dedup += 2 * sum(1 for k in sub.members
                                   if roles[k] is Role.FAST
                                   and 1 <= sub.gamma.get(k, 0) <= tau - 2)
    fanout = fanin

    if scheme is Scheme.BOTH_COMP_RX:
        tx_total = precancel
        rx_total = fast_share + fanin + fanout - fast_master_saved
    elif scheme is Scheme.BOTH_COMP_TX:
        tx_total = fanin + fanout + precancel - q_dedup
        rx_total = fast_share
    elif scheme is Scheme.SLOW_COMP_RX:
        tx_total, rx_total = 0, fanin + fanout
    elif scheme is Scheme.SLOW_COMP_TX:
        tx_total, rx_total = fanin + fanout, 0
    else:
        tx_total = rx_total = 0

    den_tx, den_rx = _asymptotic_denominators(net)
    mu_tx = Fraction(L * tx_total, den_tx) if den_tx else Fraction(0)
    mu_rx = Fraction(L * rx_total, den_rx) if den_rx else Fraction(0)
    max_tx, max_rx = _link_loads(net, assoc, subnets, fast_cells)
    return LoadReport(
        scheme=scheme, D=D, L=L,
        precancel_msgs=precancel, fast_share_msgs=fast_share,
        fanin_msgs=fanin, fanout_msgs=fanout,
        q_dedup=q_dedup, fast_master_dedup=fast_master_saved,
        tx_message_total=tx_total, rx_message_total=rx_total,
        mu_tx=mu_tx, mu_rx=mu_rx,
        max_tx_link_load=max_tx, max_rx_link_load=max_rx,
        n_subnets=len(subnets),
    )


def finite_prelogs(report: LoadReport, net: Network) -> tuple[Fraction, Fraction]:
    """Prelogs normalized by the actual finite link counts of the network."""
    out = []
    for total, q in ((report.tx_message_total, net.q_tx),
                     (report.rx_message_total, net.q_rx)):
        if total and not q:
            raise ZeroDivisionError("scheme requires cooperation on a network without links")
        out.append(Fraction(report.L * total, q) if q else Fraction(0))
    return out[0], out[1]


def _link_loads(net: Network, assoc: Association, subnets: list[Subnet],
                fast_cells: dict[int, set[int]]) -> tuple[int, int]:
    """Per-link message counts of the un-time-shared schedule (informational).

    Quantization traffic is routed along a deterministic shortest-path tree
    (lowest-id parent); CoMP-transmission dedup savings are not modelled.
    """
    roles = assoc.roles
    tx_use: dict[tuple[int, int], int] = {}
    rx_use: dict[tuple[int, int], int] = {}

    def bump(use, a, b):
        use[(a, b)] = use.get((a, b), 0) + 1

    for k, cells in fast_cells.items():
        for j in net.interference[k]:
            if roles[j] is Role.SLOW:
                bump(tx_use, j, k)
        src = net.cell_of(k)
        for c in cells:
            bump(rx_use, src, c)

    coop = net.rx_coop if assoc.scheme.comp_side != "tx" else net.tx_coop
    use = rx_use if assoc.scheme.comp_side != "tx" else tx_use
    for sub in subnets:
        if sub.master is None:
            continue
        if net.model == SECTORED:
            hops = {net.tx_cell[k]: g for k, g in sub.gamma.items()}
            hops[sub.master] = 0
            unit_cells = [net.tx_cell[k] for k in sub.slow_members]
        else:
            hops = dict(sub.gamma)
            unit_cells = list(sub.slow_members)
        parent = {}
        for c, g in hops.items():
            if g == 0:
                continue
            parent[c] = min(v for v in coop[c] if hops.get(v, 10**9) == g - 1)
        for c in unit_cells:
            while hops[c] > 0:
                p = parent[c]
                bump(use, c, p)
                bump(use, p, c)
                c = p
    return (max(tx_use.values(), default=0), max(rx_use.values(), default=0))
