#!/usr/bin/env python3
"""Regenerate goldens/phi_reference.json from an adaptive-quadrature oracle.

Reference values for the standard normal CDF and tail are computed by
adaptive quadrature of the density exp(-t^2/2)/sqrt(2*pi) at 40 decimal
digits, independently of the complementary-error-function route used by
the library. For x >= 0 the tail integral is evaluated after the shift
t = x + u, which keeps full relative precision arbitrarily far out:

    int_x^inf e^{-t^2/2} dt = e^{-x^2/2} int_0^inf e^{-x u - u^2/2} du.

Values are stored as 25-significant-digit strings; reading them back
through float() yields the correctly rounded binary64 reference.

Usage: python tools/gen_phi_golden.py
"""

import json
import math
from pathlib import Path

import mpmath as mp

mp.mp.dps = 40

SQRT_2PI = mp.sqrt(2 * mp.pi)
HALF_MASS = mp.quad(lambda t: mp.e ** (-t * t / 2), [0, mp.inf])


def tail_quad(x) -> mp.mpf:
    """P(Z > x) by quadrature; relative accuracy ~dps for all x."""
    x = mp.mpf(x)
    if x >= 0:
        shifted = mp.quad(lambda u: mp.e ** (-x * u - u * u / 2), [0, mp.inf])
        return mp.e ** (-x * x / 2) * shifted / SQRT_2PI
    left = mp.quad(lambda t: mp.e ** (-t * t / 2), [x, 0])
    return (left + HALF_MASS) / SQRT_2PI


def cdf_quad(x) -> mp.mpf:
    # reflection of the defining integral (the density is even)
    return tail_quad(-mp.mpf(x))


def grid() -> list[float]:
    xs = {0.0}
    for v in [0.01, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5,
              4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 12.0, 15.0, 20.0, 30.0, 40.0]:
        xs.add(v)
        xs.add(-v)
    # positive atoms of the p=0.08 and p=0.15 two-point laws, as exact doubles
    for p in (0.08, 0.15):
        t = math.sqrt((1 - p) / p)
        xs.add(t)
        xs.add(-t)
    return sorted(xs)


def main() -> None:
    # oracle sanity: the quadrature half-mass must match sqrt(2*pi)/2
    assert abs(2 * HALF_MASS / SQRT_2PI - 1) < mp.mpf("1e-38")

    entries = []
    for x in grid():
        c = cdf_quad(x)
        t = tail_quad(x)
        # the two routes differ (shifted vs. finite+half), so this is a check
        assert abs(c + t - 1) < mp.mpf("1e-38"), x
        entries.append({
            "x": repr(x),
            "cdf": mp.nstr(c, 25),
            "tail": mp.nstr(t, 25),
        })
    out = {
        "generator": "tools/gen_phi_golden.py",
        "method": "mpmath adaptive quadrature of the normal density, dps=40",
        "entries": entries,
    }
    path = Path(__file__).resolve().parent.parent / "goldens" / "phi_reference.json"
    path.write_text(json.dumps(out, indent=1) + "\n")
    print(f"wrote {path} ({len(entries)} entries)")


if __name__ == "__main__":
    main()
