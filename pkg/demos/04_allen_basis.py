"""A bi-homogeneous basis indexed by co-partitions."""
from diagharm import dyck, harmonics

n = 4
res = harmonics.allen_basis(n)
print(f"n = {n}: {len(res.elements)} elements, Catalan number {dyck.catalan_number(n)}")
for e in res.elements:
    terms = " + ".join(f"({c})*E{list(mu)}" for mu, c in e.terms)
    print(f"  co-partition {list(e.copartition)!s:10} bi-degree {e.bidegree}:  {terms} Delta")
print("grid matches c_n:", res.grid() == dyck.coefficient_grid(n))
print("failures:", res.failures)

alt = harmonics.allen_basis(n, order="increasing-lex")
print("\nwith increasing-lex scanning the construction also succeeds:", alt.ok)
