"""Which words become redundant when a smaller word is dependent."""
from diagharm import harmonics
from diagharm.operators import EWordCache, vandermonde
from diagharm.exactla import rank

words = EWordCache(vandermonde(5))
print("rank of {E3 E2 Delta, E4 E1 Delta} at n = 5:", rank([words([3, 2]), words([4, 1])]))

n = 5
discarded = harmonics.discarded_words(n - 1)
print(f"\ndiscarded words at n = {n - 1}:", [(c, list(w)) for c, w in discarded])
ex = harmonics.theorem21_prune(n, discarded)
print(f"{len(ex)} predicted exclusions at n = {n}; first few:")
for e in ex[:6]:
    print(f"  {e.bidegree} {list(e.word)}  (adds part {e.r_b}; grid condition {e.grid_condition})")

checked = harmonics.check_exclusions(n, ex)
print("\nno predicted exclusion is a starter where the grid condition holds:",
      all(ok for e, ok in checked if e.grid_condition))
