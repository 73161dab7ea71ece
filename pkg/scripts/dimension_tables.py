#!/usr/bin/env python3
"""Print side-by-side dimension tables for the graded components.

For each rank pair and coefficient mode the table lists the closed-form
dimension, the enumerated dimension, and (root modes) the restricted column,
so the inclusion-exclusion branch can be eyeballed against the unrestricted
counts.

    python3 scripts/dimension_tables.py [m n [d ...]]
"""

import sys

from qgrass.qarith import root_of_unity
from qgrass.superspaces import Family, basis_of_degree, make_space, top_degree
from qgrass.uqrep import dim_formula


def table(m: int, n: int, orders: list[int]) -> None:
    omega = make_space(Family.OMEGA, m, n)
    dual = make_space(Family.DUAL, m, n)
    restricted = [
        (d, make_space(Family.OMEGA_RESTRICTED, m, n, root_of_unity(d)),
         make_space(Family.DUAL_RESTRICTED, m, n, root_of_unity(d)))
        for d in orders
    ]
    t_hi = max([8] + [top_degree(sp) for _, sp, _ in restricted] + [top_degree(sp) for _, _, sp in restricted])
    header = ["t", "poly", "dual"]
    for d, _, _ in restricted:
        header += [f"poly d={d}", f"dual d={d}"]
    print(f"\nrank ({m}|{n})")
    print("  ".join(f"{h:>9}" for h in header))
    for t in range(t_hi + 1):
        row = [t, dim_formula(omega, t), dim_formula(dual, t)]
        for _, sp_o, sp_d in restricted:
            for sp in (sp_o, sp_d):
                if t <= top_degree(sp):
                    val = dim_formula(sp, t)
                    assert val == len(basis_of_degree(sp, t))
                    row.append(val)
                else:
                    row.append("")
        for sp, val in ((omega, row[1]), (dual, row[2])):
            assert val == len(basis_of_degree(sp, t))
        print("  ".join(f"{v:>9}" for v in row))


def main() -> int:
    args = [int(a) for a in sys.argv[1:]]
    if args:
        m, n = args[0], args[1]
        orders = args[2:] or [3, 5]
        table(m, n, orders)
    else:
        for m, n in [(1, 1), (2, 1), (2, 2), (3, 2)]:
            table(m, n, [3, 5])
    return 0


if __name__ == "__main__":
    sys.exit(main())
