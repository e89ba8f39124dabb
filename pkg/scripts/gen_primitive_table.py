"""Print the built-in primitive polynomial table used by wdist.gf."""

from wdist.gf import find_primitive_polynomial

if __name__ == "__main__":
    for p in (3, 5, 7):
        for m in range(1, 9):
            print(f"    ({p}, {m}): {find_primitive_polynomial(p, m)},")
