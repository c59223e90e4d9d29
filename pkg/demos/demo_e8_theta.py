"""Three routes to the same q-series, plus a floating-point sanity check.

The theta series of the even unimodular rank-8 lattice, the half sum of the
eighth powers of the theta zero values, and the weight-4 Eisenstein series
all agree; dividing by the eighth power of the Euler product produces the
character row 1, 248, 4124, ...  Run from the repository root:

    python3 demos/demo_e8_theta.py
"""

from charmod.charring import default_ring
from charmod.thetamod import (
    e8_character,
    e8_lattice_theta,
    eisenstein,
    numeric_transform_check,
    theta_eighth_sum,
)


def main():
    order = 5
    lattice = e8_lattice_theta(order)
    eighth = theta_eighth_sum(order)
    e4 = eisenstein(4, order)

    def row_of(series):
        return [int(c) for c in series.as_q_coeffs()]

    print("lattice point counts:  %s" % row_of(lattice))
    print("eighth-power half sum: %s" % row_of(eighth))
    print("weight-4 series:       %s" % row_of(e4))
    print("all equal: %s" % (lattice == eighth == e4))

    ring = default_ring(4)
    zero = ring.zero()
    char = e8_character((zero, zero, zero), order)
    row = [int(char.coefficient(n).constant_term()) for n in range(order + 1)]
    print("character row:         %s" % row)

    print("\nnumeric transformation laws at tau = 2i, v = 0.3 + 0.1i:")
    for kind in ("theta", "theta1", "theta2", "theta3", "E2"):
        result = numeric_transform_check(kind, 0.3 + 0.1j, 2j, terms=40, tol=1e-8)
        print(
            "  %-7s shift %.2e  inversion %.2e  %s"
            % (
                kind,
                result["shift_residual"],
                result["inversion_residual"],
                "ok" if result["passed"] else "FAIL",
            )
        )


if __name__ == "__main__":
    main()
