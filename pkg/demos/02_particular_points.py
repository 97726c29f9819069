#!/usr/bin/env python3
"""Walkthrough: the particular points X and X* of a parity vector.

X = P*a is a realizer that can be written down from the characteristic
equation alone; X* decomposes over the one-positions with one odd residue
theta_k per one.  Both realize the vector, and X - X* is a multiple of 2^n.
"""

from collatz_parity import (
    ParityVector,
    ab_recurrence,
    apply_vector,
    collatz_sequence,
    is_member,
    nth_realizer,
    solve_n0,
    xstar_decompose,
    xy_points,
)

v = ParityVector.from_string("1011010111")
n, m = v.n, v.ones
print(f"vector v = {v}   (n = {n}, m = {m})")

print("\n-- solving 3^7 a + 1 = 2^10 b by repeated halving --")
for i, (a, b) in enumerate(ab_recurrence(m, n), start=1):
    print(f"  i={i:>2}  a={a:>4}  b={b:>5}")
a, b = ab_recurrence(m, n)[-1]
print(f"check: 3^{m} * {a} + 1 = {3**m * a + 1} = 2^{n} * {b}")

print("\n-- the X point --")
X, Y = xy_points(v)
print(f"  X = P*a = 5645 * {a} = {X}")
print(f"  member? {is_member(v, X)};  sequence starts {collatz_sequence(X, 3)} ...")
print(f"  T^10(X) = {apply_vector(v, X)} = P*b = {Y}")

print("\n-- the X* decomposition --")
dec = xstar_decompose(v)
print(f"  {'k':>2} {'j_k':>4} {'theta_k':>8} {'z_k':>6} {'t_k':>6}")
for r in dec.rows:
    print(f"  {r.k:>2} {r.j:>4} {r.theta:>8} {r.z:>6} {r.t:>6}")
print(f"  X* = sum z_k = {dec.Xstar},  Y* = sum 3^(m-k) t_k = {dec.Ystar}")
print(f"  T^10(X*) = {apply_vector(v, dec.Xstar)}")
print(f"  J = (X - X*) / 2^10 = {dec.J}")

print("\n-- both points live on the realizer ladder --")
print(f"  N0 = {solve_n0(v)}")
print("  first realizers:", [nth_realizer(v, j) for j in range(5)])
print(f"  X* = {dec.Xstar} is the realizer with index {(dec.Xstar - solve_n0(v)) >> n}")
