"""Dyck paths, their statistics, and the q,t-Catalan polynomial."""
from math import comb

from diagharm import dyck
from diagharm.qtpoly import q_catalan

n = 4
paths = dyck.enumerate_paths(n)
print(f"{len(paths)} Dyck paths of size {n}")
for p in paths[:5]:
    print(f"  d={list(p.d)}  area={p.area}  bounce={p.bounce}  dinv={p.dinv}")

c = dyck.qt_catalan(n)
print(f"\nc_{n}(q,t) = {c}")
print("bounce and dinv agree:", c == dyck.qt_catalan(n, "dinv"))
print("symmetric in q and t:", c == c.swap_qt())

spec = c.specialize_t_to_q_inverse().shift_q(comb(n, 2))
print(f"\nq^{comb(n, 2)} c_{n}(q,1/q) = {spec}")
print("equals the q-Catalan number:", spec == q_catalan(n))

print("\nbi-degree grid (rows: y-degree b, columns: x-degree a)")
grid = dyck.coefficient_grid(n)
N = comb(n, 2)
for b in range(N, -1, -1):
    print("  " + " ".join(f"{grid.get((a, b), 0):2d}" for a in range(N + 1)))
