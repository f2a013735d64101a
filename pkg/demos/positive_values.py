"""Renormalized values at positive arguments: T-polynomials over convergent MZVs.

Run: python demos/positive_values.py
"""

from rmzv.exact import mzv_numeric
from rmzv.renorm import gzeta_positive, numeric_value, symbolic_mul


def main():
    for s in [(1,), (1, 1), (1, 2), (1, 1, 2), (1, 1, 1), (3, 1)]:
        print("gζ(%s)%s = %s" % (",".join(map(str, s)), " " * (6 - 2 * len(s)), gzeta_positive(s)))

    # the values multiply like the nested sums they regularize
    a, b = gzeta_positive((1,)), gzeta_positive((1, 2))
    print("\ngζ(1) * gζ(1,2) =", symbolic_mul(a, b))
    rhs = gzeta_positive((1, 1, 2)) * 2 + gzeta_positive((1, 2, 1)) + gzeta_positive((2, 2)) + gzeta_positive((1, 3))
    print("via the stuffle  =", rhs)

    print("\nnumeric, T = 0:")
    for s in [(1, 1), (1, 2), (1, 1, 1)]:
        print("  gζ(%s) ~ %.12f" % (",".join(map(str, s)), numeric_value(gzeta_positive(s), 0.0)))
    print("  z(2,1) - z(3) ~ %.1e" % (mzv_numeric((2, 1)) - mzv_numeric((3,))))


if __name__ == "__main__":
    main()
