"""sl(2) strings inside the alternating harmonics and how they rebuild c_n."""
from diagharm import dyck, harmonics

n = 5
print(f"starter grid from c_{n} (u >= v):")
sg = harmonics.starter_grid_from_catalan(n)
for (u, v), k in sorted(sg.b.items()):
    print(f"  b[{u},{v}] = {k}")
print("total strings:", sg.total)

print("\nthe same count three more ways:")
print("  q-series:", harmonics.starter_count_qseries(n))
print("  moments: ", sum(harmonics.starter_count_moments(n).values()))
print("  kernels: ", harmonics.starter_count_kernel(n))

print("\nstarter polynomials as combinations of E-words on the Vandermonde:")
for st in harmonics.get_space(n).all_starters():
    print(f"  {st.bidegree}  length {st.length}:  {st.describe()}")
rep = harmonics.verify_sl2_decomposition(n)
print("all starter identities hold:", rep.ok, "  span rank:", rep.total_rank, "=", dyck.catalan_number(n))

print("\nrebuilt from strings equals c_n:", harmonics.reconstruct_catalan_from_strings(n) == dyck.qt_catalan(n))

print("\nstarter counts for n = 2..10:")
print(" ", [harmonics.starter_count_qseries(m) for m in range(2, 11)])
