"""Compare the practical binary mode sorter against the quantum optimum.

With no prior information (p = 1/2), the sorter's advantage a_d trails the
optimal advantage a_qod.  How closely it trails depends strongly on the
coherence phase: for strongly coherent, out-of-phase sources the two
curves nearly coincide at sub-PSF separations, which is exactly the regime
where resolving the pair is hardest.
"""

import math

from cohdet import ScenarioParams, qod_advantage, spade_advantage

PHASES = (("theta = 0   ", 0.0), ("theta = pi/3", math.pi / 3),
          ("theta = 2pi/3", 2 * math.pi / 3), ("theta = pi  ", math.pi))

for gamma in (0.1, 0.9):
    print(f"\ngamma = {gamma}: a_d / a_qod (sorter advantage over optimal advantage)")
    ks = [0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0]
    print("      k:" + "".join(f"{k:8.2f}" for k in ks))
    for label, theta in PHASES:
        ratios = []
        for k in ks:
            params = ScenarioParams(k=k, gamma=gamma, theta=theta, p=0.5)
            ratios.append(spade_advantage(params) / qod_advantage(params))
        print(f"  {label}" + "".join(f"{r:8.4f}" for r in ratios))

print("\nDetail at gamma = 0.9, theta = pi (out of phase):")
for k in (0.5, 0.75, 0.92, 1.0, 1.25, 2.0):
    params = ScenarioParams(k=k, gamma=0.9, theta=math.pi, p=0.5)
    a_d, a_qod = spade_advantage(params), qod_advantage(params)
    print(f"  k = {k:4.2f}: a_d = {a_d:8.5f}  a_qod = {a_qod:8.5f}  ratio = {a_d / a_qod:.6f}")
print("The sorter is essentially optimal near k ~ 1 and falls behind at")
print("large separations, where it ignores the information carried by the")
print("surviving coherence between the sources.")
