"""Count points of S_2((mu1, mu2), lam) over a few primes and read off degree
and leading coefficient of the interpolating polynomial.

Run: python3 demos/hall_counts.py
"""

from crystalbench.decomp import lr_coefficient
from crystalbench.ffgeom import count_spaltenstein, interpolate
from crystalbench.weights import enumerate_partitions, spaltenstein_dim

mu1, mu2, n = (2, 1, 0), (1, 0, 0), 3
primes = (2, 3, 5, 7)

for lam in enumerate_partitions(n, sum(mu1) + sum(mu2)):
    counts = [(q, count_spaltenstein((mu1, mu2), lam, q)) for q in primes]
    poly = interpolate(counts)
    lr = lr_coefficient(mu1, mu2, lam, n)
    print(f"lam={lam}: counts {[c for _, c in counts]}  fit {poly}")
    if lr:
        print(f"    dimension {spaltenstein_dim((mu1, mu2), lam)}, LR coefficient {lr}")
    else:
        print("    LR coefficient 0")
