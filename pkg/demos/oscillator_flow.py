"""Walk through the oscillator flow and the half-angle coordinates.

Run as: python3 demos/oscillator_flow.py
"""

import math

from operadyn import exact_flow, integrate_rk4, quasi_coords, quasi_coords_derivative

OMEGA, P0 = 1.0, 2.0

print("Harmonic oscillator, H = (p^2 + omega^2 q^2)/2, started at (q, p) = (0, p0)")
print(f"omega = {OMEGA}, p0 = {P0}, energy = {P0 ** 2 / 2}")
print()

print("closed-form flow at a few times:")
for t in (0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4):
    s = exact_flow(OMEGA, P0, t)
    print(f"  t = {t:8.5f}   q = {s.q:+.6f}   p = {s.p:+.6f}   H = {s.energy:.12f}")
print()

# the RK4 cross-check: one full period in 1000 steps
period = 2 * math.pi / OMEGA
states = integrate_rk4(OMEGA, P0, period, 1000)
worst = max(
    max(abs(s.q - exact_flow(OMEGA, P0, k * period / 1000).q),
        abs(s.p - exact_flow(OMEGA, P0, k * period / 1000).p))
    for k, s in enumerate(states))
drift = max(abs(s.energy - P0 ** 2 / 2) for s in states)
print(f"RK4 over one period, 1000 steps: max deviation from the closed form"
      f" = {worst:.3e}, energy drift = {drift:.3e}")
print()

print("half-angle coordinates A+ = sqrt(p0 + p), A- = omega q / A+:")
print("  (valid on the principal window |omega t| < pi)")
for t in (-2.0, -0.5, 0.0, 0.5, 2.0):
    s = exact_flow(OMEGA, P0, t)
    c = quasi_coords(s)
    ap_ref = math.sqrt(2 * P0) * math.cos(OMEGA * t / 2)
    am_ref = math.sqrt(2 * P0) * math.sin(OMEGA * t / 2)
    print(f"  t = {t:+.2f}   A+ = {c.a_plus:+.6f} (cos form {ap_ref:+.6f})"
          f"   A- = {c.a_minus:+.6f} (sin form {am_ref:+.6f})")
print()

print("their evolution closes linearly, d/dt (A+, A-) = (omega/2)(-A-, A+):")
c = quasi_coords(exact_flow(OMEGA, P0, 0.7))
dap, dam = quasi_coords_derivative(c, OMEGA)
print(f"  at t = 0.7:  dA+/dt = {dap:+.6f}   dA-/dt = {dam:+.6f}")
print("so the pair rotates at half the oscillator frequency; one oscillator")
print("period advances (A+, A-) by only half a turn, which is why the window")
print("is a single period of the doubled angle.")
