"""The operators E_{r,s} and F_{r,s}: brackets and harmonicity."""
import random

from diagharm.mvpoly import is_diagonal_harmonic, random_poly
from diagharm.operators import E, F, commutator_check, harmonic_preservation_check, partition_alternant, sl2_F, vandermonde

n = 3
delta = vandermonde(n)
print("Vandermonde:", delta)
print("E1 applied to it:", E(1)(delta))
print("the lowering operator F0,1 kills it:", not sl2_F(delta))

rng = random.Random(0)
P = random_poly(n, rng, nterms=3, max_exp=3)
pairs = [(E(1, 1), E(2, 0)), (F(1, 0), F(0, 2)), (E(0, 2), F(1, 1))]
for g1, g2 in pairs:
    print(f"bracket identity for [{g1}, {g2}] on a random polynomial:", commutator_check(g1, g2, P))

mu = [2, 1]
D = partition_alternant(mu)
print(f"\nDelta_{mu} =", D)
print("harmonic:", is_diagonal_harmonic(D))
for g in (E(2), E(1, 1), F(0, 1), F(2, 1)):
    print(f"  {g} keeps it harmonic:", harmonic_preservation_check(g, D))
