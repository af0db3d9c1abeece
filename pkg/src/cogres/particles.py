"""Contact-count statistics and single-parameter sweeps of the joint model.

The number of particles bridging a bump is what assembly actually controls,
so the interesting questions are how the joint resistance moves with the
contact count and with the particles' metal shell thickness, and how much
the count scatters when placement is random.  Placement is modeled as a
homogeneous spatial Poisson process: a particle contacts iff its center
lands in the bump footprint, so per-trial counts are Poisson with mean
density * area.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import ValidationError
from .model import (AcfContactSpec, ResistanceBreakdown, StackAssembly,
                    equivalent_resistance)


@dataclass(frozen=True)
class SweepPoint:
    value: float
    total: float  # ohm
    breakdown: ResistanceBreakdown


@dataclass(frozen=True)
class SweepResult:
    """Sweep points sorted ascending by parameter value."""

    parameter: str
    points: tuple  # of SweepPoint

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        values = [p.value for p in self.points]
        if values != sorted(values):
            raise ValidationError("sweep points must be sorted ascending")
        for p in self.points:
            if not (p.total > 0 and math.isfinite(p.total)):
                raise ValidationError(
                    f"sweep point {p.value} has non-finite or non-positive "
                    f"total {p.total}")

    @property
    def values(self) -> np.ndarray:
        return np.array([p.value for p in self.points])

    @property
    def totals(self) -> np.ndarray:
        return np.array([p.total for p in self.points])


@dataclass(frozen=True, eq=False)
class ContactDistribution:
    """Per-trial contact counts from repeated random placements."""

    trials: int
    counts: np.ndarray
    mean: float
    expected: float

    def __post_init__(self):
        if len(self.counts) != self.trials:
            raise ValidationError(
                f"{len(self.counts)} counts for {self.trials} trials")
        if np.any(self.counts < 0):
            raise ValidationError("contact counts must be >= 0")
        if self.mean != float(np.mean(self.counts)):
            raise ValidationError("mean must be the arithmetic mean of counts")


def expected_particle_count(density: float, area: float) -> float:
    """Mean number of contacting particles: density * area."""
    if not density >= 0:
        raise ValidationError(f"density must be >= 0, got {density}")
    if not area >= 0:
        raise ValidationError(f"area must be >= 0, got {area}")
    return density * area


def monte_carlo_contacts(density: float, area: float, trials: int,
                         seed: int) -> ContactDistribution:
    """Draw per-trial contact counts; identical seeds give identical counts."""
    expected = expected_particle_count(density, area)
    if not isinstance(trials, int) or trials < 1:
        raise ValidationError(
            f"trials must be a positive integer, got {trials}")
    if not isinstance(seed, int) or seed < 0:
        raise ValidationError(
            f"seed must be a non-negative integer, got {seed}")
    counts = np.random.default_rng(seed).poisson(expected, size=trials)
    return ContactDistribution(trials, counts, float(np.mean(counts)),
                               expected)


def _require_acf(stack: StackAssembly) -> AcfContactSpec:
    acf = stack.acf
    if acf is None:
        raise ValidationError("stack has no ACF layer to sweep")
    return acf


def _swap_acf(stack: StackAssembly, acf: AcfContactSpec) -> StackAssembly:
    layers = list(stack.layers)
    layers[stack.acf_index] = acf
    return replace(stack, layers=tuple(layers))


def sweep_particle_count(stack: StackAssembly, counts) -> SweepResult:
    """Recompute the stack total for each ACF contact count.

    The ACF term scales exactly as 1/count; every other term is constant.
    """
    acf = _require_acf(stack)
    values = [float(c) for c in counts]
    if not values:
        raise ValidationError("counts must be non-empty")
    for c in values:
        if not c > 0:
            raise ValidationError(f"counts must be > 0, got {c}")
    points = []
    for c in sorted(values):
        swapped = _swap_acf(stack, replace(
            acf, contact_count=c, density=None, area=None))
        breakdown = equivalent_resistance(swapped)
        points.append(SweepPoint(c, breakdown.total, breakdown))
    return SweepResult("particle_count", tuple(points))


def sweep_shell_thickness(stack: StackAssembly, thicknesses) -> SweepResult:
    """Recompute the stack total for each particle shell thickness (um)."""
    acf = _require_acf(stack)
    radius = acf.particle.radius
    values = [float(t) for t in thicknesses]
    if not values:
        raise ValidationError("thicknesses must be non-empty")
    for t in values:
        if not 0 < t <= radius:
            raise ValidationError(
                f"shell thickness must be in (0, {radius}], got {t}")
    points = []
    for t in sorted(values):
        swapped = _swap_acf(stack, replace(
            acf, particle=replace(acf.particle, shell_thickness=t)))
        breakdown = equivalent_resistance(swapped)
        points.append(SweepPoint(t, breakdown.total, breakdown))
    return SweepResult("shell_thickness_um", tuple(points))


def stability_onset(result: SweepResult, threshold: float = 0.01):
    """First swept value where the step-to-step relative change drops
    below threshold; None if it never does."""
    for prev, cur in zip(result.points, result.points[1:]):
        if abs(prev.total - cur.total) / prev.total < threshold:
            return cur.value
    return None
