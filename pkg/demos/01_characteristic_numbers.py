#!/usr/bin/env python3
"""Walkthrough: the characteristic numbers of one finite parity vector.

Every length-n parity vector v with m ones acts on its realizers as the
affine map N -> (3^m N + P) / 2^n.  This demo computes every number attached
to the vector 1101001 (the parity vector of the 7-step sequence starting
at 11) and checks the identities that tie them together.
"""

from fractions import Fraction

from collatz_parity import (
    ParityVector,
    apply_vector,
    char_set,
    collatz_sequence,
    g_of,
    p_closed_form,
    p_recurrence,
    parity_vector,
)

v = ParityVector.from_string("1101001")
print(f"vector v = {v}   (n = {v.n}, ones at positions {v.one_positions()})")

print("\n-- where it comes from --")
seq = collatz_sequence(11, 7)
print(f"sequence starting at 11: {seq}")
print(f"parities of those terms: {parity_vector(11, 7)}")

print("\n-- the offset P, two ways --")
table = p_recurrence(v)
for j, (e, P) in enumerate(zip(v.bits, table), start=1):
    rule = f"3*P + 2^{j - 1}" if e else "P unchanged"
    print(f"  j={j}  e_j={e}  P_j={P:>5}   ({rule})")
print(f"closed form over one-positions: {p_closed_form(v)}")

print("\n-- the full characteristic set --")
cs = char_set(v)
print(f"  n = {cs.n}, m = {cs.m}, P = {cs.P}, c = 2^n - 3^m = {cs.c}")
print(f"  characteristic equation: 3^{cs.m} * {cs.a} + 1 = 2^{cs.n} * {cs.b}")
print(f"  Euclidean splits: P = 3^m * {cs.alpha} + {cs.beta} = 2^n * {cs.A} + {cs.B}")
print(f"  smallest realizer N0 = {cs.N0},  r0 = {cs.r0}")
print(f"  particular points X = P*a = {cs.X},  Y = P*b = {cs.Y}")

print("\n-- the affine identity --")
print(f"  g(11) = (3^4 * 11 + 133) / 2^7 = {g_of(v, 11)}")
print(f"  seven shortcut steps from 11 land on {apply_vector(v, 11)}")
assert apply_vector(v, 11) == 8

print("\n-- non-realizers are caught exactly --")
print(f"  g(12) = {g_of(v, 12)} = {float(Fraction(g_of(v, 12))):.4f}, not an integer,")
print("  so no length-7 sequence starting at 12 has this parity vector.")
