"""Spiking-layer tests.

The single-neuron reference values were frozen from an independent
scalar implementation of the two membrane equations (same Euler
scheme, same substep count) before this module existed.
"""
import numpy as np
import pytest

from wavenav.manifold import build_manifold
from wavenav.wave import (FS, RS, NumericalError, SynapseConfig,
                          build_synapses, init_neurons, lattice_offsets,
                          randomize_synapses, set_stimulus, step_wave)

# isolated RS neuron, dc = 25, v_floor = -90: first twelve spike times
SPIKES_SUBSTEPS_2 = [2, 6, 16, 36, 56, 78, 100, 124, 144, 164, 186, 209]
SPIKES_SUBSTEPS_1 = [2, 6, 12, 30, 51, 72, 94, 115, 136, 157, 178, 199]
COUNT_1000_SUBSTEPS_2 = 48
COUNT_1000_SUBSTEPS_1 = 51


def isolated_neuron(substeps=2):
    """3x3 lattice with everything but the center blocked."""
    m = build_manifold(3, 3, obstacles=[(0, 0, 2, 0), (0, 2, 2, 2),
                                        (0, 1, 0, 1), (2, 1, 2, 1)])
    state = init_neurons(m, substeps=substeps)
    tables = build_synapses(m)
    return m, state, tables


def run_isolated(steps, substeps, dc=25.0):
    m, state, tables = isolated_neuron(substeps)
    center = m.index(1, 1)
    set_stimulus(state, center, True, amplitude=dc)
    times = []
    for t in range(steps):
        se, _ = step_wave(state, tables)
        if se[center]:
            times.append(t)
    return times


def scalar_reference(steps, substeps, dc=25.0, v_floor=-90.0):
    """Straight-line float implementation of the same update scheme."""
    a, b, c, d = 0.02, 0.2, -65.0, 8.0
    v, u = c, b * c
    h = 1.0 / substeps
    times = []
    for t in range(steps):
        i = dc
        for _ in range(substeps):
            v += h * (0.04 * v * v + 5.0 * v + 140.0 - u + i)
            u += h * (a * (b * v - u))
            if v < v_floor:
                v = v_floor
        if v >= 30.0:
            v = c
            u += d
            times.append(t)
    return times


@pytest.mark.parametrize("substeps,expected,count", [
    (2, SPIKES_SUBSTEPS_2, COUNT_1000_SUBSTEPS_2),
    (1, SPIKES_SUBSTEPS_1, COUNT_1000_SUBSTEPS_1),
])
def test_rs_neuron_matches_frozen_spike_times(substeps, expected, count):
    times = run_isolated(1000, substeps)
    assert times[:12] == expected
    assert len(times) == count


@pytest.mark.parametrize("substeps", [1, 2])
def test_rs_neuron_matches_scalar_reference_exactly(substeps):
    assert run_isolated(1000, substeps) == scalar_reference(1000, substeps)


def test_rest_is_silent_for_1e5_steps():
    assert run_isolated(100_000, 2, dc=0.0) == []


def test_rest_state_drifts_down_not_up():
    # dv/dt at (v, u) = (-65, -13) with I = 0 is exactly -3
    v, u = -65.0, 0.2 * -65.0
    dv = 0.04 * v * v + 5.0 * v + 140.0 - u
    assert dv == pytest.approx(-3.0)


def test_initial_state_is_rest():
    m = build_manifold(5, 5)
    state = init_neurons(m)
    assert np.all(state.v_e == -65.0)
    assert np.all(state.u_e == -13.0)
    assert np.all(state.v_i == -65.0)
    assert np.all(state.u_i == pytest.approx(-13.0))
    assert np.all(state.dc == 0.0)


def test_homogeneous_parameters():
    m = build_manifold(5, 5)
    state = init_neurons(m)
    assert np.all(state.a_e == RS.a) and np.all(state.d_e == RS.d)
    assert np.all(state.a_i == FS.a) and np.all(state.d_i == FS.d)
    assert (RS.a, RS.b, RS.c, RS.d) == (0.02, 0.2, -65.0, 8.0)
    assert (FS.a, FS.b, FS.c, FS.d) == (0.1, 0.2, -65.0, 2.0)


def test_heterogeneous_parameter_ranges_and_coupling():
    m = build_manifold(21, 21)
    state = init_neurons(m, mode="heterogeneous", seed=7)
    c, d = state.c_e, state.d_e
    assert np.all((c >= -65.0) & (c <= -50.0))
    assert np.all((d >= 2.0) & (d <= 8.0))
    # c and d are driven by the same draw: d = 8 - 0.4 * (c + 65)
    assert np.allclose(d, 8.0 - 0.4 * (c + 65.0))
    assert np.all((state.a_i >= 0.02) & (state.a_i <= 0.1))
    assert np.all((state.b_i >= 0.2) & (state.b_i <= 0.25))
    # r_e = 1 endpoint of the excitatory maps
    assert -65.0 + 15.0 * 1.0 ** 2 == -50.0
    assert 8.0 - 6.0 * 1.0 ** 2 == 2.0


def test_heterogeneous_is_seeded():
    m = build_manifold(9, 9)
    s1 = init_neurons(m, mode="heterogeneous", seed=3)
    s2 = init_neurons(m, mode="heterogeneous", seed=3)
    s3 = init_neurons(m, mode="heterogeneous", seed=4)
    assert np.array_equal(s1.c_e, s2.c_e)
    assert not np.array_equal(s1.c_e, s3.c_e)
    with pytest.raises(ValueError):
        init_neurons(m, mode="heterogeneous")
    with pytest.raises(ValueError):
        init_neurons(m, mode="chaotic")


def test_set_stimulus():
    m = build_manifold(5, 5, obstacles=[(2, 2, 2, 2)])
    state = init_neurons(m)
    node = m.index(1, 1)
    set_stimulus(state, node, True)
    assert state.dc[node] == 25.0
    set_stimulus(state, node, False)
    assert state.dc[node] == 0.0
    with pytest.raises(ValueError):
        set_stimulus(state, m.index(2, 2), True)


def test_lattice_offsets_metrics():
    manhattan = lattice_offsets(2.0, "manhattan")
    assert (1, 1, 2.0) in manhattan
    assert (2, 0, 2.0) in manhattan
    assert not any(dx == 2 and dy == 1 for dx, dy, _ in manhattan)
    euclid = lattice_offsets(2.0, "euclid")
    assert any(dx == 2 and dy == 0 for dx, dy, _ in euclid)
    assert (0, 0) not in [(dx, dy) for dx, dy, _ in euclid]
    with pytest.raises(ValueError):
        lattice_offsets(2.0, "hexagonal")


def test_synapse_kernel_strengths():
    m = build_manifold(9, 9)
    tables = build_synapses(m, SynapseConfig())
    ee = tables.ee.toarray()
    ie = tables.ie.toarray()
    c = m.index(4, 4)
    assert ee[m.index(5, 4), c] == 50.0          # d = 1 -> s / 1
    assert ee[m.index(6, 4), c] == 25.0          # d = 2 -> s / 2
    assert ee[m.index(5, 5), c] == 25.0          # manhattan diagonal d = 2
    assert ee[c, c] == 0.0                       # no self-excitation
    assert ee[m.index(7, 4), c] == 0.0           # beyond range
    assert tables.ei[c, c] == 0.0                # no co-located e->i entry
    assert ie[c, c] == -200.0                    # i->e includes d = 0
    assert ie[m.index(5, 4), c] == -200.0 / 1.0


def test_synapse_kernel_literal_form():
    # the d = 0 entry of i->e carries s_ie_max itself
    m = build_manifold(5, 5)
    cfg = SynapseConfig(s_ie_max=-9.0)
    tables = build_synapses(m, cfg)
    assert tables.ie[m.index(2, 2), m.index(2, 2)] == -9.0


def test_synapses_avoid_blocked_nodes():
    m = build_manifold(9, 9, obstacles=[(4, 4, 4, 4)])
    tables = build_synapses(m)
    b = m.index(4, 4)
    for mat in (tables.ee, tables.ei, tables.ie):
        assert mat[b].count_nonzero() == 0
        assert mat[:, b].count_nonzero() == 0


def test_synapse_config_validation():
    with pytest.raises(ValueError):
        SynapseConfig(s_ee_max=-1.0).validate()
    with pytest.raises(ValueError):
        SynapseConfig(s_ie_max=5.0).validate()
    with pytest.raises(ValueError):
        SynapseConfig(d_e=0.0).validate()
    with pytest.raises(ValueError):
        SynapseConfig(metric="polar").validate()


def test_randomize_synapses():
    m = build_manifold(9, 9)
    tables = build_synapses(m)
    r1 = randomize_synapses(tables, seed=11)
    r2 = randomize_synapses(tables, seed=11)
    r3 = randomize_synapses(tables, seed=12)
    for a, b in ((r1.ee, r2.ee), (r1.ei, r2.ei), (r1.ie, r2.ie)):
        assert np.array_equal(a.data, b.data)
    assert not np.array_equal(r1.ee.data, r3.ee.data)
    # pattern unchanged, each strength within +/- 50 percent, sign kept
    assert np.array_equal(r1.ee.indices, tables.ee.indices)
    assert np.array_equal(r1.ee.indptr, tables.ee.indptr)
    ratio = r1.ee.data / tables.ee.data
    assert np.all((ratio >= 0.5) & (ratio <= 1.5))
    assert np.all(r1.ie.data < 0.0)
    assert np.all((r1.ie.data >= 1.5 * tables.ie.data)
                  & (r1.ie.data <= 0.5 * tables.ie.data))


def test_step_is_deterministic():
    def run():
        m = build_manifold(13, 13)
        state = init_neurons(m)
        tables = build_synapses(m)
        set_stimulus(state, m.index(6, 6), True)
        return [step_wave(state, tables)[0].copy() for _ in range(30)]

    for a, b in zip(run(), run()):
        assert np.array_equal(a, b)


def test_no_spike_without_cause():
    m = build_manifold(13, 13)
    state = init_neurons(m)
    tables = build_synapses(m)
    for _ in range(200):
        se, si = step_wave(state, tables)
        assert not se.any() and not si.any()


def test_inhibition_trails_excitation_by_two_steps():
    m = build_manifold(21, 21)
    state = init_neurons(m)
    tables = build_synapses(m)
    set_stimulus(state, m.index(10, 10), True)
    first_e = first_i = None
    for t in range(60):
        se, si = step_wave(state, tables)
        if first_e is None and se.any():
            first_e = t
        if first_i is None and si.any():
            first_i = t
    assert first_e is not None and first_i is not None
    assert first_i - first_e >= 2


def test_membrane_below_threshold_after_every_step():
    m = build_manifold(15, 15)
    state = init_neurons(m)
    tables = build_synapses(m)
    set_stimulus(state, m.index(7, 7), True)
    for _ in range(120):
        step_wave(state, tables)
        assert np.all(state.v_e < 30.0)
        assert np.all(state.v_i < 30.0)


def test_single_spike_per_front():
    """Between source spikes, every other neuron fires at most once.

    The first emission burst is excluded: its fronts leave before any
    trailing inhibition exists, so the wake guarantee starts with the
    second burst.
    """
    m = build_manifold(25, 25)
    state = init_neurons(m)
    tables = build_synapses(m)
    src = m.index(12, 12)
    set_stimulus(state, src, True)
    spikes = []
    for _ in range(220):
        se, _ = step_wave(state, tables)
        spikes.append(se.copy())
    src_times = [t for t, se in enumerate(spikes) if se[src]]
    assert len(src_times) >= 8
    second_burst = next(b for a, b in zip(src_times, src_times[1:])
                        if b - a > 5)
    start = src_times.index(second_burst)
    for lo, hi in zip(src_times[start:], src_times[start + 1:]):
        counts = np.sum(spikes[lo:hi], axis=0)
        counts[src] = 0
        assert counts.max() <= 1, f"window [{lo},{hi}) re-ignited its wake"


def test_obstacles_are_opaque():
    # a full-height wall of thickness 2: nothing ever spikes beyond it
    m = build_manifold(21, 21, obstacles=[(10, 0, 11, 20)])
    state = init_neurons(m)
    tables = build_synapses(m)
    set_stimulus(state, m.index(5, 10), True)
    far = m.xs >= 12
    for _ in range(80):
        se, si = step_wave(state, tables)
        assert not se[m.blocked].any()
        assert not si[m.blocked].any()
        assert not se[far].any()


def test_non_finite_state_raises_with_node():
    m = build_manifold(5, 5)
    state = init_neurons(m)
    tables = build_synapses(m)
    state.v_e[7] = np.inf
    with pytest.raises(NumericalError) as err:
        step_wave(state, tables)
    assert err.value.node == 7
