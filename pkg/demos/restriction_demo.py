"""Walk through one restriction computation, end to end.

We take rank n = 3, the class indexed by alpha = {1, 3, bar(2)} and the
fixed point indexed by beta = {3, bar(2), bar(1)}, and compute the exact
restriction in both theories, showing every ingredient on the way.
"""

from lgrass import (IsotropicIndex, enumerate_isotropic, enumerate_ssvt,
                    enumerate_ssyt, length, pi, restrict_h, restrict_k, sigma)
from lgrass.render import ascii_shifted_tableau

alpha = IsotropicIndex.from_signed(3, (1, 3, -2))
beta = IsotropicIndex.from_signed(3, (3, -2, -1))

print("alpha =", alpha, "  as a subset of {1..6}:", alpha.values)
print("beta  =", beta, "  as a subset of {1..6}:", beta.values)
print()

# Each index corresponds to a symmetric partition and a strict partition.
print("pi(alpha)    =", pi(alpha), "   sigma(alpha) =", sigma(alpha))
print("pi(beta)     =", pi(beta), "  sigma(beta)  =", sigma(beta))
print("length(alpha) =", length(alpha))
print("complement beta' =", beta.complement().values)
print()

# The K-theory restriction sums over set-valued tableaux of shape
# sigma(alpha) on sigma(beta); cohomology uses the single-entry ones.
lam, mu = sigma(alpha), sigma(beta)
print(f"set-valued tableaux of shape {lam} on {mu}:")
for t in enumerate_ssvt(lam, mu):
    print(ascii_shifted_tableau(t))
    print()
print(f"single-entry subset ({len(enumerate_ssyt(lam, mu))} of "
      f"{len(enumerate_ssvt(lam, mu))}):",
      [repr(t) for t in enumerate_ssyt(lam, mu)])
print()

rk = restrict_k(alpha, beta)
rh = restrict_h(alpha, beta)
print("K-theory restriction  :", rk.value.pretty())
print("cohomology restriction:", rh.value.pretty())
print()

# Restrictions at every fixed point determine the class; here is the
# cohomology row of alpha over all eight fixed points of rank 3.
print("cohomology restrictions of alpha at all fixed points:")
for b in enumerate_isotropic(3):
    print(f"  at {str(b):>8} : {restrict_h(alpha, b).value.pretty()}")
