"""Follow gζ(0, 0) through the pipeline: regularize, decompose, take limits.

Run: python demos/birkhoff_walkthrough.py
"""

from rmzv.birkhoff import phi_minus, phi_plus, zeta_directional
from rmzv.hopf import Word
from rmzv.ratfunc import eval_at_delta_zero
from rmzv.zreg import z_nonpos


def show(title, series):
    print(title)
    for k, c in series.items():
        if c:
            print("  e^%-3d %s" % (k, c))


def main():
    w = Word.deformed((0, 0))
    print("word", w, "(directions |s| + d)\n")

    # the regularized sum has a double pole in e
    show("Z(0,0 | d,d; e)", z_nonpos(w, 1))

    # Birkhoff: counterterm holds the poles, the rest is holomorphic
    show("\nphi_-", phi_minus(w, 0))
    show("\nphi_+", phi_plus(w, 1))

    value = zeta_directional(w)
    print("\ne -> 0:", value)
    print("d -> 0:", eval_at_delta_zero(value))

    # the quasi-shuffle relation gζ(0)^2 = 2 gζ(0,0) + gζ(0) forces the same number
    z0 = eval_at_delta_zero(zeta_directional(Word.deformed((0,))))
    print("forced by the stuffle relation:", (z0 * z0 - z0) / 2)


if __name__ == "__main__":
    main()
