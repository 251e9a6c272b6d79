"""How many permutations sort in t passes?

Under the base-12 map, every permutation of length n sorts within n-1
passes, and the count of t-pass-sortable permutations has the closed form
n! (n <= t) or t!(t+1)^(n-t).  Under the base-21 map nothing of length >= 2
ever sorts.  Both statements are checked here against exhaustive counts.
"""

from pss import MapId, brute_t_sortable
from pss.formulas import count_t_sortable_s12, count_t_sortable_s21

print("base-12 map: t-sortable counts, formula vs exhaustive")
print(f"{'n':>3} {'t':>3} {'formula':>10} {'brute':>10}")
for n in range(1, 8):
    for t in range(1, n + 1):
        formula = count_t_sortable_s12(n, t)
        brute = brute_t_sortable(MapId.S12, n, t)
        flag = "" if formula == brute else "  MISMATCH"
        print(f"{n:>3} {t:>3} {formula:>10} {brute:>10}{flag}")

print("\nbase-21 map: t-sortable counts (t swept to 2n)")
for n in range(1, 7):
    brute = max(brute_t_sortable(MapId.S21, n, t) for t in range(1, 2 * n + 1))
    print(f"  n={n}: formula {count_t_sortable_s21(n)}, max over t of brute {brute}")
