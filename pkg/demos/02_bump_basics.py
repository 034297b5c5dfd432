"""
The activity bump: stability and steering
=========================================

The attractor layer holds a localized bump of activity. Left alone it
stays put for as long as we care to run it; a nonzero direction
vector translates it across the lattice.
"""
from wavenav import AttractorParams, build_manifold
from wavenav import bump_center, footprint_diameter, init_bump, step_attractor

m = build_manifold(41, 41)
params = AttractorParams()

# seed a bump at the center and relax it
state = init_bump(m, m.index(20, 20), params)
print("warmed-up center:", m.coords(bump_center(state)))
print("half-max footprint diameter:", footprint_diameter(state))

# stability: a thousand steps without any drive
for _ in range(1000):
    step_attractor(state)
print("center after 1000 idle steps:", m.coords(bump_center(state)))

# steering: hold a direction vector for a few steps
state.set_delta((0.05, 0.0))
track = []
for _ in range(6):
    step_attractor(state)
    track.append(m.coords(bump_center(state)))
print("centers while driven east:", track)

# the normalized direction vector scales with the lattice: 0.05 of
# the grid width is about two nodes per step on a 41-wide lattice
