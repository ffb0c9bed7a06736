import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from dagconvex import (
    DisconnectedInput,
    FullSet,
    InvalidParameter,
    NotConnectedConvex,
    OrderTooSmall,
    VertexSet,
    build_digraph,
    convex_hull,
    convexity_witness,
    enumerate_cc_extension,
    find_extension_vertex,
    find_non_cut_endpoints,
    gen_gi,
    gen_path,
    gen_random_connected_dag,
    is_convex,
    is_underlying_connected,
)
from dagconvex.errors import EmptySet


def sampled_sets(d, rng, count=5):
    """A few non-empty subsets of d's vertices, plus the extremes."""
    out = [{0}, set(range(d.n))]
    for _ in range(count):
        s = {v for v in range(d.n) if rng.random() < 0.5}
        if s:
            out.append(s)
    return out


class TestIsConvex:
    def test_path_examples(self):
        d = gen_path(3)
        assert not is_convex(d, VertexSet(3, [0, 2]))
        assert is_convex(d, VertexSet(3, [0, 1]))
        assert is_convex(d, VertexSet(3, [1]))

    def test_empty_set_rejected(self):
        with pytest.raises(EmptySet):
            is_convex(gen_path(3), VertexSet(3))
        with pytest.raises(EmptySet):
            convex_hull(gen_path(3), VertexSet(3))

    def test_universe_mismatch(self):
        with pytest.raises(InvalidParameter):
            is_convex(gen_path(3), VertexSet(4, [0]))

    def test_exhaustive_agreement_with_path_oracle(self):
        # every subset of a few small digraphs, against path enumeration
        instances = [
            gen_path(5),
            gen_gi(2)[0],
            build_digraph(5, [(0, 2), (1, 2), (2, 3), (2, 4)]),
            gen_random_connected_dag(6, 0.4, 11),
        ]
        for d in instances:
            for k in range(1, d.n + 1):
                for combo in combinations(range(d.n), k):
                    expected = oracles.oracle_is_convex(d, combo)
                    assert is_convex(d, VertexSet(d.n, combo)) == expected

    def test_sampled_agreement_on_random_corpus(self):
        # 200 connected DAGs, a handful of subsets each
        rng = random.Random(1234)
        for idx in range(200):
            d = gen_random_connected_dag(1 + idx % 10, (0.2, 0.35, 0.5)[idx % 3], 5000 + idx)
            for s in sampled_sets(d, rng):
                assert is_convex(d, VertexSet(d.n, s)) == oracles.oracle_is_convex(d, s)


class TestWitness:
    def test_p3_witness(self):
        w = convexity_witness(gen_path(3), VertexSet(3, [0, 2]))
        assert w is not None
        assert w.path == (0, 1, 2)
        assert (w.u, w.v) == (0, 2)

    def test_none_for_convex(self):
        assert convexity_witness(gen_path(3), VertexSet(3, [0, 1])) is None

    def test_witness_validity_on_corpus(self):
        rng = random.Random(99)
        for idx in range(80):
            d = gen_random_connected_dag(2 + idx % 9, 0.4, 6000 + idx)
            for s in sampled_sets(d, rng):
                x = VertexSet(d.n, s)
                w = convexity_witness(d, x)
                if w is None:
                    assert is_convex(d, x)
                else:
                    assert not is_convex(d, x)
                    assert w.is_valid_for(d, x)
                    # interior vertices certify non-convexity definitionally
                    assert any(v not in s for v in w.path[1:-1])

    def test_is_valid_for_rejects_junk(self):
        d = gen_path(4)
        x = VertexSet(4, [0, 2])
        w = convexity_witness(d, x)
        assert w.is_valid_for(d, x)
        from dagconvex import ConvexityWitness

        # wrong endpoints, non-arcs, all-inside paths
        assert not ConvexityWitness(0, 2, (0, 2)).is_valid_for(d, x)
        assert not ConvexityWitness(0, 2, (0, 3, 2)).is_valid_for(d, x)
        assert not ConvexityWitness(0, 1, (0, 1)).is_valid_for(d, VertexSet(4, [0, 1]))


class TestHull:
    def test_fill_the_path(self):
        got = convex_hull(gen_path(3), VertexSet(3, [0, 2]))
        assert got.members() == (0, 1, 2)

    def test_hull_of_convex_set_is_identity(self):
        d = gen_path(5)
        x = VertexSet(5, [1, 2, 3])
        assert convex_hull(d, x) == x

    def test_matches_path_closure_oracle(self, small_corpus):
        rng = random.Random(31)
        for d in small_corpus:
            for s in sampled_sets(d, rng, count=3):
                got = convex_hull(d, VertexSet(d.n, s))
                assert set(got) == oracles.oracle_hull(d, s)

    @given(st.integers(0, 2**32 - 1), st.integers(1, 9))
    @settings(max_examples=60, deadline=None)
    def test_hull_properties(self, seed, n):
        d = gen_random_connected_dag(n, 0.4, seed)
        rng = random.Random(seed ^ 0xA5)
        members = {v for v in range(n) if rng.random() < 0.4} or {rng.randrange(n)}
        x = VertexSet(n, members)
        h = convex_hull(d, x)
        assert x.issubset(h)
        assert is_convex(d, h)
        assert convex_hull(d, h) == h
        # minimality: no convex set strictly between x and h exists; the
        # path-closure oracle builds the least one, so equality suffices
        assert set(h) == oracles.oracle_hull(d, members)


class TestExtensionVertex:
    def test_gi2_lowest_label(self):
        d, labels = gen_gi(2)
        h = VertexSet(d.n, [labels["s"], labels["a1"]])
        assert find_extension_vertex(d, h) == labels["b1"]

    def test_extension_keeps_connected_convex(self, small_corpus):
        for d in small_corpus:
            if d.n < 2:
                continue
            sets, _ = enumerate_cc_extension(d)
            for h in sets:
                if len(h) == d.n:
                    continue
                w = find_extension_vertex(d, h)
                grown = h.with_vertex(w)
                assert is_convex(d, grown)
                assert is_underlying_connected(d, grown)

    def test_errors(self):
        d = gen_path(4)
        with pytest.raises(FullSet):
            find_extension_vertex(d, VertexSet.universe(4))
        with pytest.raises(NotConnectedConvex):
            find_extension_vertex(d, VertexSet(4))
        with pytest.raises(NotConnectedConvex):
            find_extension_vertex(d, VertexSet(4, [0, 2]))
        split = build_digraph(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedInput):
            find_extension_vertex(split, VertexSet(4, [0]))


class TestNonCutEndpoints:
    def test_path_endpoints(self):
        for n in range(2, 8):
            assert find_non_cut_endpoints(gen_path(n)) == [0, n - 1]

    def test_gi2(self):
        d, labels = gen_gi(2)
        got = find_non_cut_endpoints(d)
        assert labels["s"] in got and labels["t"] in got

    def test_errors(self):
        with pytest.raises(OrderTooSmall):
            find_non_cut_endpoints(gen_path(1))
        with pytest.raises(DisconnectedInput):
            find_non_cut_endpoints(build_digraph(4, [(0, 1), (2, 3)]))

    def test_at_least_two_verified(self, small_corpus):
        for d in small_corpus:
            if d.n < 2:
                continue
            got = find_non_cut_endpoints(d)
            assert len(got) >= 2
            for v in got:
                assert not oracles.oracle_is_cut(d, v)
                assert not d.in_adj[v] or not d.out_adj[v]
