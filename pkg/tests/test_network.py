"""Resistor-network solver, series/parallel reducer, and stack validator."""

import numpy as np
import pytest

from cogres import (LayerSpec, OpenCircuitError, ResistorNetwork,
                    SingularNetworkError, StackAssembly, ValidationError,
                    discretize_layer, equivalent_resistance,
                    reduce_series_parallel, solve_network, validate_stack)
from netrandom import (fully_connected, pinv_resistance,
                       random_connected_network, random_series_parallel)


def net(node_count, edges, source=0, sink=None):
    if sink is None:
        sink = node_count - 1
    return ResistorNetwork(node_count, tuple(edges), source, sink)


class TestNetworkInvariants:
    def test_self_loop_rejected(self):
        with pytest.raises(ValidationError, match="self-loop"):
            net(2, [(0, 0, 1.0)])

    def test_source_equals_sink_rejected(self):
        with pytest.raises(ValidationError):
            ResistorNetwork(2, ((0, 1, 1.0),), 1, 1)

    def test_node_out_of_range_rejected(self):
        with pytest.raises(ValidationError, match="out of range"):
            net(2, [(0, 2, 1.0)])

    @pytest.mark.parametrize("g", [0.0, -1.0, float("inf"), float("nan")])
    def test_bad_conductance_rejected(self, g):
        with pytest.raises(ValidationError, match="conductance"):
            net(2, [(0, 1, g)])


class TestSolveNetwork:
    def test_series_chain(self):
        # 1 ohm + 2 ohm
        assert solve_network(net(3, [(0, 1, 1.0), (1, 2, 0.5)])) \
            == pytest.approx(3.0, rel=1e-12)

    def test_parallel_pair(self):
        # two 2 ohm edges
        assert solve_network(net(2, [(0, 1, 0.5), (0, 1, 0.5)])) \
            == pytest.approx(1.0, rel=1e-12)

    def test_balanced_wheatstone_bridge(self):
        # four 1 ohm arms and a 1 ohm bridge; zero bridge current
        edges = [(0, 1, 1.0), (0, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0),
                 (1, 2, 1.0)]
        assert solve_network(net(4, edges)) == pytest.approx(1.0, rel=1e-12)

    def test_matches_pinv_oracle_on_random_6_node_network(self):
        rng = np.random.default_rng(66)
        network = random_connected_network(rng, max_nodes=6)
        assert solve_network(network) == \
            pytest.approx(pinv_resistance(network), rel=1e-9)

    def test_disconnected_terminals(self):
        with pytest.raises(OpenCircuitError):
            solve_network(net(4, [(0, 1, 1.0), (2, 3, 1.0)], source=0, sink=3))

    def test_no_edges(self):
        with pytest.raises(OpenCircuitError):
            solve_network(net(2, []))

    def test_floating_component_is_singular(self):
        # nodes 2,3 form an island: grounded system is singular
        edges = [(0, 1, 1.0), (2, 3, 1.0)]
        with pytest.raises(SingularNetworkError):
            solve_network(net(4, edges, source=0, sink=1))

    def test_invariant_under_relabeling_and_edge_order(self):
        rng = np.random.default_rng(17)
        for _ in range(25):
            network = random_connected_network(rng)
            baseline = solve_network(network)
            perm = [int(p) for p in rng.permutation(network.node_count)]
            edges = [(perm[a], perm[b], g) for a, b, g in network.edges]
            rng.shuffle(edges)
            relabeled = ResistorNetwork(network.node_count, tuple(edges),
                                        perm[network.source],
                                        perm[network.sink])
            assert solve_network(relabeled) == pytest.approx(baseline,
                                                             rel=1e-12)


class TestReduceSeriesParallel:
    def test_series_chain(self):
        assert reduce_series_parallel(net(3, [(0, 1, 1.0), (1, 2, 0.5)])) \
            == pytest.approx(3.0, rel=1e-12)

    def test_parallel_product_over_sum(self):
        # 3 ohm with 6 ohm gives 2 ohm
        network = net(2, [(0, 1, 1.0 / 3.0), (0, 1, 1.0 / 6.0)])
        assert reduce_series_parallel(network) == pytest.approx(2.0, rel=1e-12)

    def test_unbalanced_wheatstone_not_reducible(self):
        edges = [(0, 1, 1.0), (0, 2, 0.5), (1, 3, 0.25), (2, 3, 2.0),
                 (1, 2, 1.0)]
        assert reduce_series_parallel(net(4, edges)) is None

    def test_dangling_branch_pruned(self):
        # node 2 dangles off the live 1 ohm path
        network = net(3, [(0, 1, 1.0), (1, 2, 4.0)], source=0, sink=1)
        assert reduce_series_parallel(network) == pytest.approx(1.0, rel=1e-12)

    def test_agrees_with_solver_on_random_reducible_networks(self):
        rng = np.random.default_rng(2024)
        for _ in range(120):
            network, expected = random_series_parallel(rng)
            reduced = reduce_series_parallel(network)
            assert reduced is not None
            assert reduced == pytest.approx(expected, rel=1e-9)
            assert reduced == pytest.approx(solve_network(network), rel=1e-9)


class TestRayleighMonotonicity:
    def test_edge_changes_move_resistance_the_right_way(self):
        rng = np.random.default_rng(55)
        for _ in range(120):
            network = random_connected_network(rng)
            baseline = solve_network(network)

            a = int(rng.integers(0, network.node_count))
            b = int(rng.integers(0, network.node_count))
            if a != b:
                grown = ResistorNetwork(
                    network.node_count,
                    network.edges + ((a, b, float(10 ** rng.uniform(-1, 1))),),
                    network.source, network.sink)
                assert solve_network(grown) <= baseline * (1 + 1e-9)

            drop = int(rng.integers(0, len(network.edges)))
            remaining = network.edges[:drop] + network.edges[drop + 1:]
            if remaining and fully_connected(remaining, network.node_count):
                shrunk = ResistorNetwork(network.node_count, remaining,
                                         network.source, network.sink)
                assert solve_network(shrunk) >= baseline * (1 - 1e-9)


class TestDiscretizeLayer:
    def test_single_cube(self):
        network = discretize_layer(LayerSpec("x", 2.0, cube_count=1.0), 1)
        assert solve_network(network) == pytest.approx(2.0, rel=1e-12)

    def test_two_cubes_in_parallel(self):
        network = discretize_layer(LayerSpec("x", 2.0, cube_count=2.0), 2)
        assert solve_network(network) == pytest.approx(1.0, rel=1e-12)

    def test_coupled_grid_matches_sheet_over_n(self):
        layer = LayerSpec("x", 0.5, cube_count=16.0)
        network = discretize_layer(layer, 16, lateral_coupling=True)
        assert solve_network(network) == pytest.approx(0.03125, rel=1e-9)

    def test_zero_cubes_rejected(self):
        with pytest.raises(ValidationError):
            discretize_layer(LayerSpec("x", 1.0, cube_count=1.0), 0)

    def test_parallel_bundle_exactness(self):
        # n-edge bundle solves to R/n; direct check of the parallel identity
        for n in (1, 10, 100, 1000, 10000):
            layer = LayerSpec("x", 3.7, cube_count=float(n))
            network = discretize_layer(layer, n)
            assert solve_network(network) == pytest.approx(3.7 / n, rel=1e-9)

    def test_lateral_coupling_carries_no_current(self):
        # equipotential plates keep midpoints symmetric
        for cubes in (2, 7, 64):
            layer = LayerSpec("x", 1.3, cube_count=float(cubes))
            plain = solve_network(discretize_layer(layer, cubes))
            coupled = solve_network(
                discretize_layer(layer, cubes, lateral_coupling=True))
            assert coupled == pytest.approx(plain, rel=1e-9)


class TestValidateStack:
    def test_default_stack_passes_at_1e6(self, default_stack):
        report = validate_stack(default_stack, cubes_per_layer=32,
                                tolerance=1e-6)
        assert report.passed
        assert report.relative_error <= 1e-6
        assert report.closed_form == \
            equivalent_resistance(default_stack).total
        assert [d.name for d in report.per_layer_detail] == \
            ["aluminum", "barrier", "gold_bump", "acf", "ito_pad"]
        for detail in report.per_layer_detail:
            assert detail.network_solve == pytest.approx(detail.closed_form,
                                                         rel=1e-9)

    def test_single_cube_layer_is_exact(self):
        stack = StackAssembly((LayerSpec("x", 2.5, cube_count=1.0),))
        report = validate_stack(stack, cubes_per_layer=1, tolerance=1e-9)
        assert report.network_solve == pytest.approx(2.5, rel=1e-12)
        assert report.passed

    def test_full_n_mode(self, default_stack):
        report = validate_stack(default_stack, cubes_per_layer=None,
                                tolerance=1e-6)
        assert report.passed

    def test_open_joint_raises(self, default_stack):
        from dataclasses import replace
        layers = list(default_stack.layers)
        layers[3] = replace(layers[3], contact_count=0.0, density=None,
                            area=None)
        with pytest.raises(OpenCircuitError):
            validate_stack(StackAssembly(tuple(layers)))

    def test_bad_cubes_rejected(self, default_stack):
        with pytest.raises(ValidationError):
            validate_stack(default_stack, cubes_per_layer=0)

    def test_negative_tolerance_rejected(self, default_stack):
        with pytest.raises(ValidationError):
            validate_stack(default_stack, tolerance=-1.0)
