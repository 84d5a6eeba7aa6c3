"""Print measured redundancy next to the reference formulas.

Nothing here is asserted: the formulas are asymptotic, so the table is
meant to be read, not gated on.
"""
import math

from asymdl import bch, block_codes, lee_codes, shift_codes, single_codes


def single_rows(lengths):
    print("single error (0-deletion or transposition)")
    print(f"{'n':>4} {'p':>4} {'a':>4} {'size':>6} {'red':>7} {'log2n+3':>8}")
    for n in lengths:
        spec = single_codes.best_residue(n)
        size = single_codes.residue_counts(n, spec.p)[spec.a]
        print(f"{n:>4} {spec.p:>4} {spec.a:>4} {size:>6} {n - math.log2(size):>7.3f} {math.log2(n) + 3:>8.3f}")


def shift_rows(cases):
    print("\none deletion plus shifts")
    print(f"{'n':>4} {'s+':>3} {'s-':>3} {'size':>6} {'red':>7} {'target':>7} {'slack':>6} {'bch_r':>6}")
    for n, sp, sm in cases:
        r = shift_codes.redundancy_report(n, sp, sm)
        print(f"{n:>4} {sp:>3} {sm:>3} {r['size']:>6} {r['redundancy']:>7.3f} {r['target']:>7.3f} "
              f"{r['shortening_slack']:>6.3f} {r['bch_parity']:>6}")


def lee_rows(cases):
    print("\npower-sum codes for t deletions and s transpositions")
    print(f"{'n':>4} {'t':>2} {'s':>2} {'p':>4} {'size':>6} {'red':>7} {'(t+s)log2n':>11}")
    for n, t, s in cases:
        spec, size = lee_codes.best_residue(n, t + 2 * s)
        print(f"{n:>4} {t:>2} {s:>2} {spec.p:>4} {size:>6} {n - math.log2(size):>7.3f} "
              f"{(t + s) * math.log2(n):>11.3f}")


def systematic_rows(cases):
    print("\nsystematic block-deletion code (identity protector)")
    print(f"{'k':>6} {'t_b':>3} {'ell':>3} {'s':>2} {'p':>3} {'m':>2} {'N':>7} {'n1':>5} {'n2':>6} "
          f"{'deg':>4} {'formula':>7} {'in_range':>8}")
    for k, t_b, ell, s in cases:
        lay = block_codes.layout_for(k, t_b, ell, s)
        rep = bch.parity_report(lay.p, lay.m, lay.d)
        print(f"{k:>6} {t_b:>3} {ell:>3} {s:>2} {lay.p:>3} {lay.m:>2} {lay.N:>7} {lay.n1:>5} {lay.n2:>6} "
              f"{rep['generator_degree']:>4} {rep['formula']:>7} {str(rep['formula_applies']):>8}")


if __name__ == "__main__":
    single_rows(range(8, 17))
    shift_rows([(10, 1, 0), (12, 1, 0), (12, 1, 1), (14, 2, 0)])
    lee_rows([(10, 1, 0), (12, 1, 1), (12, 2, 0), (13, 0, 1)])
    systematic_rows([(16, 1, 1, 0), (100, 2, 2, 1), (1000, 1, 2, 1), (10_000, 2, 2, 1)])
