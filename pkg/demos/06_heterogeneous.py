"""
Robustness under randomized neuron parameters
=============================================

Heterogeneous mode redraws every neuron's parameters from the seeded
per-node distributions. The traversal keeps working, and the built-in
asymmetry often breaks the symmetric block maze faster than the
homogeneous run, which needs weight jitter to decide on a side.
"""
import os
import statistics

from wavenav import load_config, run_scenario

SCENARIOS = os.path.join(os.path.dirname(__file__), os.pardir,
                         "src", "wavenav", "scenarios")

# homogeneous baseline with symmetry jitter
cfg = load_config(os.path.join(SCENARIOS, "block.cfg"))
baseline, _ = run_scenario(cfg)
print(f"homogeneous block maze: {baseline.outcome}",
      f"in {len(baseline.trajectory)} steps")

# ten heterogeneous seeds on the same maze
steps = []
for seed in range(10):
    cfg = load_config(os.path.join(SCENARIOS, "block_heterogeneous.cfg"))
    cfg.seed = seed
    result, _ = run_scenario(cfg)
    print(f"seed {seed}: {result.outcome} in {len(result.trajectory)} steps")
    if result.outcome == "reached":
        steps.append(len(result.trajectory))

print(f"reached {len(steps)}/10,",
      f"median {statistics.median(steps):g} steps",
      f"(homogeneous needed {len(baseline.trajectory)})")
