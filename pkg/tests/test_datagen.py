import math

import pytest

from robust_sched import GenParams, derive_family, generate, random_schedule
from robust_sched.datagen import (
    ds1_params,
    ds2_params,
    job_segments,
    params_for_dataset,
    provenance,
    segment_bounds,
)
from robust_sched.io import dumps, instance_to_dict
from robust_sched.model import validate_schedule


class TestGenParams:
    def test_ds1_defaults(self):
        params = ds1_params(50, 5)
        assert (params.r_domain_hi, params.segments) == (150, 10)
        assert (params.p_lo, params.p_hi) == (5, 50)

    def test_ds2_defaults(self):
        params = ds2_params(50, 5)
        assert (params.r_domain_hi, params.segments) == (300, 5)

    def test_dataset_lookup(self):
        assert params_for_dataset("ds2", 10, 2).segments == 5
        with pytest.raises(ValueError):
            params_for_dataset("ds9", 10, 2)

    def test_needs_one_job_per_segment(self):
        with pytest.raises(ValueError):
            GenParams(n=5, m=2, segments=10)

    def test_rejects_reversed_offsets(self):
        with pytest.raises(ValueError):
            GenParams(n=20, m=2, offset_lo=3.0, offset_hi=1.0)

    def test_rejects_zero_processing_floor(self):
        with pytest.raises(ValueError):
            GenParams(n=20, m=2, p_lo=0)


class TestSegments:
    def test_even_split(self):
        params = ds1_params(50, 5)
        bounds = segment_bounds(params)
        assert bounds[0] == (0, 14)
        assert bounds[-1] == (135, 149)
        assert len(bounds) == 10

    def test_owners_round_robin_leftovers(self):
        params = GenParams(n=7, m=1, segments=3, r_domain_hi=30)
        owners = job_segments(params)
        # 7 = 3*2 + 1 leftover, handed to the first segment
        assert owners == [0, 0, 0, 1, 1, 2, 2]


class TestGenerate:
    def test_deterministic(self):
        params = ds1_params(50, 5)
        first = generate(params, seed=7)
        second = generate(params, seed=7)
        assert first == second
        assert dumps(instance_to_dict(first)) == dumps(instance_to_dict(second))

    def test_seed_changes_output(self):
        params = ds1_params(50, 5)
        assert generate(params, seed=1) != generate(params, seed=2)

    def test_shapes_and_ranges(self):
        params = ds1_params(50, 5)
        inst = generate(params, seed=3)
        assert inst.n == 50 and inst.m == 5
        assert all(5 <= v <= 50 for row in inst.p for v in row)
        assert all(0 <= lo <= hi for lo, hi in inst.release)

    def test_segment_coverage(self):
        params = ds1_params(50, 5)
        inst = generate(params, seed=11)
        bounds = segment_bounds(params)
        quota = params.n // params.segments
        for lo_edge, hi_edge in bounds:
            inside = sum(
                1 for lo, _ in inst.release if lo_edge <= lo <= hi_edge
            )
            assert inside >= quota

    def test_degenerate_offset_width(self):
        params = GenParams(
            n=12, m=3, segments=3, r_domain_hi=60, offset_lo=1.0, offset_hi=1.0
        )
        inst = generate(params, seed=5)
        for j, (lo, hi) in enumerate(inst.release):
            averaged = sum(inst.p[i][j] for i in range(inst.m)) / inst.m
            assert hi - lo == math.floor(averaged + 0.5)

    def test_provenance_header(self):
        params = ds2_params(20, 2)
        header = provenance(params, seed=9)
        assert header["seed"] == 9
        assert header["params"]["segments"] == 5
        assert header["generatorVersion"]


class TestDeriveFamily:
    def test_identity(self):
        params = ds1_params(50, 5)
        base = generate(params, seed=13)
        assert derive_family(base, params, 50, 5, seed=99) == base

    def test_subset_property(self):
        params = ds1_params(60, 4)
        base = generate(params, seed=21)
        derived = derive_family(base, params, 30, 2, seed=5)
        assert derived.n == 30 and derived.m == 2
        # every surviving job keeps its data; survivors keep base order
        positions = []
        for pair in derived.release:
            start = positions[-1] + 1 if positions else 0
            matches = [
                j for j in range(start, base.n) if base.release[j] == pair
            ]
            assert matches
            positions.append(matches[0])
        used = positions
        for col, j in enumerate(used):
            for i in range(2):
                assert derived.p[i][col] == base.p[i][j]

    def test_segment_share(self):
        params = ds1_params(100, 3)
        base = generate(params, seed=2)
        derived = derive_family(base, params, 40, 3, seed=8)
        bounds = segment_bounds(params)
        for lo_edge, hi_edge in bounds:
            inside = sum(
                1 for lo, _ in derived.release if lo_edge <= lo <= hi_edge
            )
            assert inside >= 40 // params.segments

    def test_deterministic(self):
        params = ds1_params(50, 5)
        base = generate(params, seed=4)
        assert derive_family(base, params, 20, 3, seed=6) == derive_family(
            base, params, 20, 3, seed=6
        )

    def test_rejects_oversize_targets(self):
        params = ds1_params(50, 5)
        base = generate(params, seed=4)
        with pytest.raises(ValueError):
            derive_family(base, params, 60, 5, seed=0)
        with pytest.raises(ValueError):
            derive_family(base, params, 50, 6, seed=0)

    def test_rejects_mismatched_params(self):
        params = ds1_params(50, 5)
        base = generate(params, seed=4)
        with pytest.raises(ValueError):
            derive_family(base, ds1_params(40, 5), 20, 2, seed=0)


class TestRandomSchedule:
    def test_valid_and_deterministic(self):
        params = ds1_params(30, 3)
        inst = generate(params, seed=1)
        first = random_schedule(inst, seed=5)
        assert validate_schedule(first, inst) is None
        assert first == random_schedule(inst, seed=5)
        assert first != random_schedule(inst, seed=6)
