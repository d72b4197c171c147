"""Deterministic construction, validation and exact load/MG analysis of
Wyner-linear, hexagonal and sectorized-hexagonal interference networks
under mixed-delay cell-association schemes."""

from .association import (Association, Role, Scheme, assign, assign_hex,
                          assign_sectored, assign_wyner, shifted_mod)
from .lattice import hex_distance
from .loads import (ClosedForm, LoadReport, closed_form, finite_prelogs,
                    formulas, mixed_subnet_counts, message_ledger, subnet_sizes)
from .regions import (HalfPlane, MgPoint, MgRegion, achievable_region,
                      alpha_wyner, alphas_hex, alphas_sectored,
                      boundary_polyline, contains, convex_hull, is_subset,
                      outer_bound_wyner, outer_polygon_wyner, region_subset)
from .topology import (HEX, SECTORED, WYNER, Network, build_hex,
                       build_hex_torus, build_sectored_hex,
                       build_sectored_hex_torus, build_wyner)
from .validation import (Subnet, ValidationReport, check_round_split,
                         fast_noninterference, master_reachability,
                         subnet_decompose, validate)

__all__ = [name for name in dir() if not name.startswith("_")]
