#!/usr/bin/env python3
"""Show the finite-network prelogs approaching the closed forms.

Linear model: K = m (D + 2); the finite denominator 2K - 2 makes the
deviation shrink like 1/K.  Hexagonal model: growing balls, where the
clipped rim subnets contribute an O(1/radius) error.
"""

from fractions import Fraction

from mgnet import (HEX, Scheme, assign, build_hex, build_wyner, closed_form,
                   finite_prelogs, message_ledger, subnet_decompose)


def wyner_rows(D=6, L=3):
    cf = closed_form("WynerLinear", Scheme.BOTH_COMP_RX, D, L)
    print(f"# wyner D={D} L={L}: asymptotic mu_rx = {cf.mu_rx} = {float(cf.mu_rx):.6f}")
    for m in (1, 2, 8, 32, 128, 512):
        net = build_wyner(m * (D + 2), L)
        assoc = assign(net, D, Scheme.BOTH_COMP_RX)
        subnets, _ = subnet_decompose(net, assoc)
        led = message_ledger(net, assoc, subnets)
        _, mu_rx = finite_prelogs(led, net)
        dev = abs(mu_rx - cf.mu_rx)
        print(f"K={net.n_tx:5d}  mu_rx={float(mu_rx):.6f}  |dev|={float(dev):.2e}"
              f"  K*|dev|={float(net.n_tx * dev):.3f}")


def hex_rows(D=8, L=3):
    cf = closed_form(HEX, Scheme.BOTH_COMP_RX, D, L)
    print(f"# hex D={D} L={L}: asymptotic mu_rx = {cf.mu_rx} = {float(cf.mu_rx):.6f}")
    for radius in (8, 12, 16, 24, 32):
        net = build_hex(radius, L)
        assoc = assign(net, D, Scheme.BOTH_COMP_RX)
        subnets, _ = subnet_decompose(net, assoc)
        led = message_ledger(net, assoc, subnets)
        _, mu_rx = finite_prelogs(led, net)
        dev = abs(mu_rx - cf.mu_rx)
        print(f"radius={radius:3d} K={net.n_tx:5d}  mu_rx={float(mu_rx):.6f}"
              f"  |dev|={float(dev):.2e}  radius*|dev|={float(radius * dev):.3f}")


if __name__ == "__main__":
    wyner_rows()
    hex_rows()
