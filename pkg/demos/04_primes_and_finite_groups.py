"""Good primes, residue rings, and finite special unitary groups.

The construction needs primes p that stay inert in E = Q(sqrt(-3)); these
are exactly p = 2 and p congruent to 2 mod 3 (equivalently 5 or 11 mod 12,
together with 2).  Over a good prime the residue ring F_{p^2} carries a
conjugation, and the matrices g with conj(g)^T g = 1 and det(g) = 1 form
the finite group SU_3(p).  We enumerate it exhaustively for p = 2 and climb
one level of the congruence tower.

Run:  python demos/04_primes_and_finite_groups.py
"""

from ramanujan_bigraphs import (
    classify_prime,
    congruence_tower,
    enumerate_su3,
    good_primes_up_to,
    su3_order_formula,
)

print("-- Prime classification in Z[omega] --")
for p in (2, 3, 5, 7, 11, 13):
    c = classify_prime(p)
    print(f"p = {p:2d}: {c.cls:8s} good: {c.good}")
print("good primes up to 60:", good_primes_up_to(60))

print("\n-- Exhaustive enumeration of SU_3 over F_4 (q = 2, level 1) --")
rep1 = enumerate_su3(2, 1)
print(f"order (enumerated) = {rep1.order}; closed form gives "
      f"{su3_order_formula(2)}")

print("\n-- Level 2: the kernel of reduction mod 2 --")
rep2 = enumerate_su3(2, 2)
print(f"kernel of SU_3(Z/4) -> SU_3(Z/2): {rep2.kernel_size} elements "
      f"(= 2^8, the Lie algebra su_3 over F_2)")
print(f"reduction is surjective: {rep2.surjective}; "
      f"|SU_3(Z/4)| = {rep2.order}")

print("\n-- Congruence tower indices at q = 2 (residue char differs from p = 7) --")
tower = congruence_tower(2, 3, 7)
for entry in tower:
    print(f"level {entry.k}: index {entry.index:6d}  [{entry.method}]")
print("level 0 is the full residue group; every deeper step multiplies by q^8.")
