"""Print the grid gζ(-s1, -s2) and point out its visible structure.

Run: python demos/negative_table.py
"""

from rmzv.exact import zeta_nonpositive
from rmzv.renorm import gzeta_nonpos, z2_closed_form

def main(rows=8, cols=7):
    grid = {(i, j): gzeta_nonpos((-i, -j)) for i in range(1, rows + 1) for j in range(1, cols + 1)}
    width = {j: max(len(str(grid[i, j])) for i in range(1, rows + 1)) + 2 for j in range(1, cols + 1)}
    print("s1\\s2" + "".join(str(j).rjust(width[j]) for j in range(1, cols + 1)))
    for i in range(1, rows + 1):
        print(str(i).ljust(5) + "".join(str(grid[i, j]).rjust(width[j]) for j in range(1, cols + 1)))

    print("\nodd s1 + s2: each anti-diagonal is constant, equal to -ζ(-s1-s2)/2")
    for t in range(3, rows + cols + 1, 2):
        cells = {grid[i, t - i] for i in range(1, rows + 1) if 1 <= t - i <= cols}
        print("  s1 + s2 = %2d: %s  (-ζ(%d)/2 = %s)" % (t, ", ".join(map(str, cells)), -t, -zeta_nonpositive(-t) / 2))

    print("\neven diagonal entries vanish:", all(grid[i, i] == 0 for i in range(2, min(rows, cols) + 1, 2)))

    agree = all(grid[i, j] == z2_closed_form(-i, -j) for i, j in grid)
    print("two-argument closed form agrees on every cell:", agree)

    # the parity rule does not reach a trailing zero
    print("\ngζ(-1, 0) =", gzeta_nonpos((-1, 0)), "while -ζ(-1)/2 =", -zeta_nonpositive(-1) / 2)

if __name__ == "__main__":
    main()
