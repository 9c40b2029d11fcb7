"""
Arithmetic in Z[i] and Z[w]
===========================

Norms, division with remainder, factorization and square classes in the two
Euclidean rings behind Q(i) and Q(sqrt(-3)).
"""

from cyclotors.rings import QInt, RingTag, divrem, factor, primes_above, squarefree_part

G, W = RingTag.GAUSSIAN, RingTag.OMEGA

# w = (1 - sqrt(-3))/2 satisfies w^2 = w - 1, so it has order 6
w = QInt.gen(W)
print("w^2 =", w**2, " w^6 =", w**6)

# division rounds the exact quotient to the nearest lattice point
q, r = divrem(QInt(7, 3, G), QInt(2, 0, G))
print(f"7+3i = 2*({q}) + ({r})  norm of remainder {r.norm()}")

# rational primes split, ramify or stay inert
for p in (2, 3, 5, 7, 11, 13):
    print(p, "in Z[i]:", [str(pi.value) for pi in primes_above(p, G)],
          " in Z[w]:", [str(pi.value) for pi in primes_above(p, W)])

print("5 =", factor(QInt(5, 0, G)))
print("3 =", factor(QInt(3, 0, W)))

# square classes: 2 = -i(1+i)^2 is i times a square in Q(i), and -3 is a square in Q(sqrt(-3))
print("class of 2 over Q(i):", squarefree_part(QInt(2, 0, G)))
print("class of -3 over Q(sqrt(-3)):", squarefree_part(QInt(-3, 0, W)))
