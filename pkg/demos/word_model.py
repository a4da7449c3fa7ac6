"""Decompose V (x) V (x) V for gl_3 and follow tau_N on V (x) L(2,1).

Run: python3 demos/word_model.py
"""

from crystalbench.decomp import decompose_product, product_crystal, tau_n
from crystalbench.tableaux import arabic_word

print(decompose_product([(1, 0, 0)] * 3, 3).to_text())

mu1, mu2 = (1, 0, 0), (2, 1, 0)
c = product_crystal((mu1, mu2), 3)
print(f"\ntau_3 on L{mu1} (x) L{mu2}, first 10 elements")
for x in c.elements[:10]:
    lam, slot, image = tau_n(mu1, mu2, 3, x)
    print(f"  {x[0]} (x) {x[1]} -> L{lam}[{slot}] {image}  word {arabic_word(image)}")
