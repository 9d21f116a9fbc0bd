#!/usr/bin/env python3
"""Walk through the core effect: two microspheres, each split into a 250 um
superposition 450 um apart, pick up branch-dependent gravitational phases
during a 2.5 s hold.  Recombination maps those phases onto the two embedded
spins, whose state is then certifiably entangled.
"""

import warnings

import gravwitness as gw

warnings.simplefilter("ignore", gw.ConfigConsistencyWarning)

cfg = gw.validate(gw.paper_defaults())

print("=== geometry ===")
for branch, sep in gw.pairwise_separations(cfg).items():
    print(f"  branch {branch}: separation {sep * 1e6:7.1f} um")
print(f"  mutual acceleration at closest approach: "
      f"{gw.mutual_acceleration(cfg):.2e} m/s^2  (free fall stays parallel)")

print("\n=== branch phases over the hold stage ===")
ph = gw.static_phases(cfg)
print(f"  common phase     phi     = {ph.phiRef:+.6f} rad")
print(f"  differential     dPhiRL  = {ph.dPhiRL:+.6f} rad")
print(f"  differential     dPhiLR  = {ph.dPhiLR:+.6f} rad")
print(f"  entangling sum           = {ph.dPhiLR + ph.dPhiRL:+.6f} rad")

dyn = gw.dynamic_phases(cfg, 20_000)
print("\n  including the 0.5 s split/recombine stages:")
print(f"  dPhiRL grows {ph.dPhiRL:.4f} -> {dyn.dPhiRL:.4f} rad "
      f"(phase also accumulates while the splits open and close)")

print("\n=== two-spin state after recombination ===")
state = gw.entangled_state(ph.dPhiLR, ph.dPhiRL)
print(f"  purity                  = {state.purity():.12f}")
print(f"  negativity              = {gw.negativity(state):.6f}  (> 0 iff entangled)")

result = gw.witness(state)
print(f"  correlator <sx sz>      = {result.expXZ:+.6f}")
print(f"  correlator <sy sz>      = {result.expYZ:+.6f}")
print(f"  witness W (as printed)  = {result.w:.6f}")

settings, optimized = gw.optimize_witness(state)
print(f"  witness after local z-rotation ({settings.thetaZ1:+.4f} rad on "
      f"spin 1) = {optimized.w:.6f}")
print(f"  (the z-rotation optimum equals sqrt(2)|sin((dPhiLR+dPhiRL)/2)|; "
      f"it crosses 1 once the phase sum exceeds pi/2)")

print("\n=== the same state at the phase values quoted for this scenario ===")
quoted = gw.entangled_state(-0.2, 0.7)
print(f"  negativity(-0.2, 0.7)   = {gw.negativity(quoted):.6f}")
print(f"  witness    (-0.2, 0.7)  = {gw.witness(quoted).w:.6f}")
print(f"  optimized  (-0.2, 0.7)  = {gw.optimize_witness(quoted)[1].w:.6f}")
