"""Range engines: frozen small cases, oracle agreement, and invariants.

Expected value tuples were computed once with the naive filter oracle
(range_naive) and frozen here; the agreement tests keep both paths
honest on fresh random inputs.
"""

import dataclasses
import random

import pytest

from hermrange.hermitian import CapacityError, HermMatrix, block_diag
from hermrange.ranges import (EXHAUSTIVE, KIND_NUM0_PRIME,
                              KIND_NUM0_PRIME_SUBFIELD, KIND_NUM_K,
                              KIND_NUM_K_SUBFIELD, SAMPLED, fiber_count,
                              fiber_table, num0_prime, num0_prime_subfield,
                              num_k, num_k_subfield, range_naive,
                              resolve_affine_shift, scaling_law_check)


def _m(ctx, rows):
    return HermMatrix.from_encs(ctx, tuple(tuple(r) for r in rows))


def _rand(ctx, rng, n, limit=None):
    limit = ctx.q2 if limit is None else limit
    return _m(ctx, [[rng.randrange(limit) for _ in range(n)]
                    for _ in range(n)])


def test_frozen_null_ranges(f2, f5):
    assert num0_prime(_m(f2, [[0, 1], [0, 0]])).values == (1, 2, 3)
    assert num0_prime(_m(f2, [[0, 0], [0, 1]])).values == (1,)
    assert num_k(_m(f2, [[0, 0], [0, 1]]), f2.elem(0)).values == (0, 1)
    assert num_k(_m(f2, [[0, 0], [0, 1]]), f2.elem(1)).values == (0, 1)
    assert num0_prime_subfield(_m(f2, [[0, 1], [0, 0]])).values == (1,)
    assert num0_prime_subfield(_m(f5, [[0, 0], [0, 1]])).values == (1, 4)
    assert num_k_subfield(_m(f5, [[0, 0], [0, 1]]), f5.elem(0)).values \
        == (0, 1, 4)


def test_identity_null_range_is_zero(f3, f4):
    for ctx in (f3, f4):
        for n in (2, 3):
            ident = HermMatrix.identity(ctx, n)
            assert num0_prime(ident).values == (0,)


def test_subfield_null_range_empty_when_squares_cannot_cancel(f3):
    # q = 3: x^2 + y^2 = 0 has no nonzero solution, so there is no
    # nonzero subfield null vector at all for n = 2
    rng = random.Random(11)
    for _ in range(10):
        m = _rand(f3, rng, 2, 3)
        assert num0_prime_subfield(m).values == ()


def test_engine_agrees_with_naive_oracle(towers):
    rng = random.Random(47)
    for q in (2, 3, 4, 5):
        ctx = towers[q]
        for _ in range(6):
            m = _rand(ctx, rng, 2)
            for k in range(ctx.q):
                ke = ctx.elem(k)
                assert num_k(m, ke) == range_naive(m, KIND_NUM_K, ke)
            assert num0_prime(m) == range_naive(m, KIND_NUM0_PRIME,
                                                ctx.zero)
            ms = _rand(ctx, rng, 2, ctx.q)
            assert num_k_subfield(ms, ctx.one) \
                == range_naive(ms, KIND_NUM_K_SUBFIELD, ctx.one)
            assert num0_prime_subfield(ms) \
                == range_naive(ms, KIND_NUM0_PRIME_SUBFIELD, ctx.zero)


def test_level_zero_range_is_null_range_plus_zero(f3, f4):
    rng = random.Random(53)
    for ctx in (f3, f4):
        for _ in range(8):
            m = _rand(ctx, rng, 2)
            at_zero = set(num_k(m, ctx.zero).values)
            assert at_zero == set(num0_prime(m).values) | {0}


def test_null_range_nonempty_for_full_coordinates(f2, f3):
    # level zero always has nonzero vectors once n >= 2
    rng = random.Random(59)
    for ctx in (f2, f3):
        for n in (2, 3):
            m = _rand(ctx, rng, n)
            assert num0_prime(m).cardinality >= 1


def test_nonzero_levels_scale_from_level_one(f2, f3):
    rng = random.Random(61)
    for ctx in (f2, f3):
        for _ in range(10):
            assert scaling_law_check(_rand(ctx, rng, 2))


def test_dagger_preserves_null_range_size(f2):
    rng = random.Random(67)
    from hermrange.hermitian import dagger
    for _ in range(15):
        m = _rand(f2, rng, 2)
        assert num0_prime(m).cardinality == num0_prime(dagger(m)).cardinality


def test_fiber_table_partitions_the_cone(f3, f5):
    from hermrange.hermitian import SUBFIELD, cone_encs
    for ctx, n in ((f3, 3), (f5, 2)):
        m = _m(ctx, [[(i + j) % ctx.q for j in range(n)] for i in range(n)])
        table = fiber_table(m)
        assert len(table) == ctx.q
        assert sum(fc.count for fc in table) \
            == len(cone_encs(ctx, n, 0, SUBFIELD))
        for fc in table:
            assert fiber_count(m, fc.value) == fc


def test_scalar_fiber_counts(f2, f3, f5):
    # zero vector included, so these count all subfield null vectors
    for ctx, n, expect in ((f2, 2, 2), (f3, 2, 1), (f5, 2, 9), (f2, 3, 4)):
        scalar = HermMatrix.scalar(ctx, n, ctx.one)
        assert fiber_count(scalar, ctx.zero).count == expect


def test_fiber_counting_rejects_bad_inputs(f3):
    with pytest.raises(ValueError):
        fiber_count(_m(f3, [[3, 0], [0, 0]]), f3.zero)
    with pytest.raises(ValueError):
        fiber_count(_m(f3, [[1, 0], [0, 1]]), f3.elem(4))
    with pytest.raises(ValueError):
        fiber_table(_m(f3, [[3, 0], [0, 0]]))


def test_sampling_modes(f3):
    m = _rand(f3, random.Random(71), 4)
    with pytest.raises(CapacityError):
        num_k(m, f3.one, capacity=1000)
    with pytest.raises(ValueError):
        num_k(m, f3.one, capacity=1000, sample_budget=50)
    full = num_k(m, f3.one)
    assert full.mode == EXHAUSTIVE
    part = num_k(m, f3.one, capacity=1000, sample_budget=200,
                 rng=random.Random(3))
    again = num_k(m, f3.one, capacity=1000, sample_budget=200,
                  rng=random.Random(3))
    assert part.mode == SAMPLED
    assert part == again
    assert set(part.values) <= set(full.values)
    with pytest.raises(ValueError):
        part.require_exhaustive()


def test_range_set_shape(f2):
    rs = num0_prime(_m(f2, [[0, 1], [0, 0]]))
    assert rs.cardinality == 3
    assert rs.contains_enc(2) and not rs.contains_enc(0)
    assert tuple(e.enc for e in rs.elems()) == rs.values
    assert rs.to_json_dict() == {
        "kind": "num0_prime", "k": 0, "mode": "exhaustive",
        "witness_count": 9, "cardinality": 3, "values": [1, 2, 3]}
    rows = rs.csv_rows()
    assert rows[0] == ("num0_prime", 0, 1, "1")
    assert len(rows) == 3
    # provenance fields do not affect equality
    assert dataclasses.replace(rs, witness_count=999) == rs


def test_validation_errors(f3, f4):
    with pytest.raises(ValueError):
        num0_prime(_m(f4, [[1]]))
    with pytest.raises(ValueError):
        num_k(_m(f3, [[0, 0], [0, 1]]), f3.elem(3))
    with pytest.raises(ValueError):
        num_k(_m(f3, [[0, 0], [0, 1]]), f4.elem(1))
    with pytest.raises(ValueError):
        num_k_subfield(_m(f3, [[3, 0], [0, 1]]), f3.one)
    with pytest.raises(ValueError):
        range_naive(_m(f3, [[0, 0], [0, 1]]), KIND_NUM0_PRIME, f3.one)


def test_block_sum_value_sets_union_at_matching_levels(f2):
    # <(u, v), (A + B)(u, v)> splits across the blocks, so every level
    # one value of A appears at level one of the sum via v = 0
    rng = random.Random(73)
    a = _rand(f2, rng, 1)
    b = _rand(f2, rng, 1)
    s = block_diag(a, b)
    lvl1 = set(num_k(s, f2.one).values)
    assert set(num_k(a, f2.one).values) <= lvl1
    assert set(num_k(b, f2.one).values) <= lvl1


def test_affine_shift_resolution(f3):
    assert resolve_affine_shift(f3, k=f3.elem(2), trials=20,
                                rng=random.Random(0)) == "ck"
    assert resolve_affine_shift(f3, k=f3.one, trials=5,
                                rng=random.Random(0)) == "tie"
    with pytest.raises(ValueError):
        resolve_affine_shift(f3, k=f3.elem(2))
