"""Discretized resistor-network cross-check of the closed-form model.

A sheet layer's unit-cube decomposition is an n-edge parallel bundle
between two equipotential terminal plates; a whole stack is those bundles
chained in series.  Solving the resulting network by nodal analysis gives
an independent number to hold against the closed form R_sheet / n.

Two-terminal resistance is computed the standard way: assemble the
weighted graph Laplacian, ground the sink, inject one ampere at the
source, and read the source potential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.sparse.linalg import splu

from .errors import OpenCircuitError, SingularNetworkError, ValidationError
from .model import (AcfContactSpec, LayerSpec, StackAssembly,
                    acf_layer_resistance, equivalent_resistance,
                    layer_resistance, particle_resistance)


@dataclass(frozen=True)
class ResistorNetwork:
    """Conductance multigraph with two designated terminals.

    Edges are (node_a, node_b, conductance in siemens); parallel edges are
    allowed, self-loops and non-positive conductances are not.
    """

    node_count: int
    edges: tuple  # of (int, int, float)
    source: int
    sink: int

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((a, b, g) for a, b, g in self.edges))
        if not isinstance(self.node_count, int) or self.node_count < 1:
            raise ValidationError(
                f"node_count must be a positive integer, "
                f"got {self.node_count}")
        for terminal, label in ((self.source, "source"), (self.sink, "sink")):
            if not isinstance(terminal, int) \
                    or not 0 <= terminal < self.node_count:
                raise ValidationError(
                    f"{label} {terminal} out of range 0..{self.node_count - 1}")
        if self.source == self.sink:
            raise ValidationError("source and sink must differ")
        for i, (a, b, g) in enumerate(self.edges):
            for node in (a, b):
                if not isinstance(node, int) \
                        or not 0 <= node < self.node_count:
                    raise ValidationError(
                        f"edges[{i}]: node {node} out of range "
                        f"0..{self.node_count - 1}")
            if a == b:
                raise ValidationError(f"edges[{i}]: self-loop at node {a}")
            if not (g > 0 and math.isfinite(g)):
                raise ValidationError(
                    f"edges[{i}]: conductance must be positive and finite, "
                    f"got {g}")


@dataclass(frozen=True)
class LayerValidation:
    """Closed form vs. network solve for one layer."""

    name: str
    closed_form: float
    network_solve: float
    relative_error: float


@dataclass(frozen=True)
class ValidationReport:
    """Stack-level closed form vs. network solve, flagged against a tolerance."""

    closed_form: float
    network_solve: float
    relative_error: float
    per_layer_detail: tuple  # of LayerValidation
    tolerance: float
    passed: bool


def _laplacian(net: ResistorNetwork) -> coo_matrix:
    a = np.fromiter((e[0] for e in net.edges), dtype=np.int64,
                    count=len(net.edges))
    b = np.fromiter((e[1] for e in net.edges), dtype=np.int64,
                    count=len(net.edges))
    g = np.fromiter((e[2] for e in net.edges), dtype=np.float64,
                    count=len(net.edges))
    rows = np.concatenate([a, b, a, b])
    cols = np.concatenate([a, b, b, a])
    data = np.concatenate([g, g, -g, -g])
    n = net.node_count
    return coo_matrix((data, (rows, cols)), shape=(n, n))


def solve_network(net: ResistorNetwork) -> float:
    """Two-terminal equivalent resistance by nodal analysis.

    Raises OpenCircuitError if the terminals are not connected and
    SingularNetworkError if the grounded system cannot be factorized
    (e.g. floating components).
    """
    n = net.node_count
    if not net.edges:
        raise OpenCircuitError("network has no edges")
    lap = _laplacian(net)
    adjacency = coo_matrix(
        (np.ones(len(net.edges)),
         ([e[0] for e in net.edges], [e[1] for e in net.edges])),
        shape=(n, n))
    _, labels = connected_components(adjacency, directed=False)
    if labels[net.source] != labels[net.sink]:
        raise OpenCircuitError("source and sink are not connected")

    keep = np.arange(n) != net.sink
    reduced = lap.tocsr()[keep][:, keep].tocsc()
    source_row = net.source - (1 if net.source > net.sink else 0)
    rhs = np.zeros(n - 1)
    rhs[source_row] = 1.0
    try:
        potentials = splu(reduced).solve(rhs)
    except RuntimeError as exc:
        raise SingularNetworkError(
            f"nodal system is singular: {exc}") from exc
    resistance = float(potentials[source_row])
    if not math.isfinite(resistance):
        raise SingularNetworkError("nodal solve produced a non-finite value")
    return resistance


def reduce_series_parallel(net: ResistorNetwork) -> float | None:
    """Equivalent resistance by series/parallel reduction, or None.

    Repeatedly merges parallel edge bundles, prunes dangling non-terminal
    nodes, and contracts series chains.  Returns the resistance if the
    network collapses to a single source-sink edge; bridge-like topologies
    (e.g. an unbalanced Wheatstone bridge) report None.
    """
    conductance: dict[int, dict[int, float]] = {}
    for a, b, g in net.edges:
        conductance.setdefault(a, {})
        conductance.setdefault(b, {})
        conductance[a][b] = conductance[a].get(b, 0.0) + g
        conductance[b][a] = conductance[b].get(a, 0.0) + g

    terminals = (net.source, net.sink)

    def drop(node):
        for neighbor in list(conductance[node]):
            del conductance[neighbor][node]
        del conductance[node]

    changed = True
    while changed:
        changed = False
        for node in list(conductance):
            if node in terminals or node not in conductance:
                continue
            neighbors = list(conductance[node])
            if len(neighbors) <= 1:
                drop(node)
                changed = True
            elif len(neighbors) == 2:
                u, w = neighbors
                series = 1.0 / conductance[node][u] \
                    + 1.0 / conductance[node][w]
                drop(node)
                conductance[u][w] = conductance[u].get(w, 0.0) + 1.0 / series
                conductance[w][u] = conductance[u][w]
                changed = True

    internal = [v for v in conductance
                if v not in terminals and conductance[v]]
    if internal:
        return None
    g = conductance.get(net.source, {}).get(net.sink)
    if g is None:
        return None
    return 1.0 / g


def _parallel_bundle(node_count, source, sink, conductances):
    edges = [(source, sink, g) for g in conductances]
    return ResistorNetwork(node_count, tuple(edges), source, sink)


def discretize_layer(layer: LayerSpec, cubes: int,
                     lateral_coupling: bool = False) -> ResistorNetwork:
    """Unit-cube decomposition of one sheet layer.

    One resistor of value R_sheet per cube runs between two equipotential
    terminal plates.  With lateral_coupling, each cube is split at its
    midpoint and adjacent midpoints are tied with conductance 1/R_sheet
    (a unit cube's x, y and z resistances are identical); the plates keep
    the midpoints equipotential, so the lateral ties carry no current.
    """
    if not isinstance(cubes, int) or cubes < 1:
        raise ValidationError(f"cubes must be a positive integer, got {cubes}")
    sheet = layer.sheet_resistance
    if not lateral_coupling:
        return _parallel_bundle(2, 0, 1, [1.0 / sheet] * cubes)
    edges = []
    for i in range(cubes):
        midpoint = 2 + i
        edges.append((0, midpoint, 2.0 / sheet))
        edges.append((midpoint, 1, 2.0 / sheet))
    for i in range(cubes - 1):
        edges.append((2 + i, 3 + i, 1.0 / sheet))
    return ResistorNetwork(cubes + 2, tuple(edges), 0, 1)


def _layer_conductances(layer, cubes_per_layer):
    """Per-edge conductances whose parallel total preserves the closed form."""
    if isinstance(layer, AcfContactSpec):
        count = layer.effective_count
        if count == 0:
            raise OpenCircuitError(
                f"layer {layer.name!r}: open joint: no contacting particles")
        unit = 1.0 / particle_resistance(layer.particle)
        m = math.ceil(count)
        return [unit] * (m - 1) + [(count - (m - 1)) * unit]
    n_true = layer.unit_cubes
    m = cubes_per_layer if cubes_per_layer is not None \
        else max(1, round(n_true))
    # per-cube resistance R_sheet * m / n_true, so the m-edge bundle
    # reproduces R_sheet / n_true exactly
    return [n_true / (layer.sheet_resistance * m)] * m


def validate_stack(stack: StackAssembly, cubes_per_layer: int | None = 32,
                   tolerance: float = 1e-6) -> ValidationReport:
    """Solve the discretized stack and compare with the closed form.

    Each sheet layer becomes a cubes_per_layer-edge bundle with per-cube
    resistance rescaled to preserve the layer's true z-resistance
    (cubes_per_layer=None uses round(n) cubes, the full-n mode); the ACF
    layer becomes effective_count parallel particle edges.  Bundles share
    plate nodes, chaining the layers in series.
    """
    if cubes_per_layer is not None and (
            not isinstance(cubes_per_layer, int) or cubes_per_layer < 1):
        raise ValidationError(
            f"cubes_per_layer must be a positive integer or None, "
            f"got {cubes_per_layer}")
    if not tolerance >= 0:
        raise ValidationError(f"tolerance must be >= 0, got {tolerance}")

    closed = equivalent_resistance(stack)

    edges = []
    detail = []
    for plate, layer in enumerate(stack.layers):
        conductances = _layer_conductances(layer, cubes_per_layer)
        edges.extend((plate, plate + 1, g) for g in conductances)
        if isinstance(layer, AcfContactSpec):
            layer_closed = acf_layer_resistance(layer)
        else:
            layer_closed = layer_resistance(layer)
        layer_solved = solve_network(
            _parallel_bundle(2, 0, 1, conductances))
        detail.append(LayerValidation(
            layer.name, layer_closed, layer_solved,
            abs(layer_closed - layer_solved) / layer_closed))

    chain = ResistorNetwork(len(stack.layers) + 1, tuple(edges),
                            0, len(stack.layers))
    solved = solve_network(chain)
    relative_error = abs(closed.total - solved) / closed.total
    return ValidationReport(
        closed_form=closed.total,
        network_solve=solved,
        relative_error=relative_error,
        per_layer_detail=tuple(detail),
        tolerance=tolerance,
        passed=relative_error <= tolerance,
    )
