"""The hook-product formula for c_n, checked at integer points."""
from diagharm import harmonics

for n in range(1, 7):
    rep = harmonics.musum_catalan(n)
    note = f", {len(rep.skipped)} points moved off a pole" if rep.skipped else ""
    print(f"n = {n}: {rep.points_checked} points, agreement {rep.ok}{note}")

qs, ts, _ = harmonics.evaluation_points(3)
q, t = qs[0], ts[0]
value = harmonics.musum_value(harmonics.musum_terms(3), q, t)
print(f"\nat q={q}, t={t} the sum over partitions of 3 gives {value}")
print("c_3 at the same point:", q**3 + q * q * t + q * t + q * t * t + t**3)
