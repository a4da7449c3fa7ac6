"""Walk M_2(2,0) (x) M_2(1,0) and show where tau_2 sends each element.

Run: python3 demos/gl2_tensor.py
"""

from crystalbench.crystal import decompose, tensor
from crystalbench.gl2 import gl2_crystal, tau2_element

A, B = gl2_crystal(2, 0), gl2_crystal(1, 0)
T = tensor(A, B)

print(f"{len(A)} x {len(B)} = {len(T)} elements")
for weight, members, head in decompose(T):
    print(f"\ncomponent with head weight {weight}:")
    for x in members:
        label, image = tau2_element(x)
        print(f"  {x[0]} (x) {x[1]}  ->  {label} x {image}")
