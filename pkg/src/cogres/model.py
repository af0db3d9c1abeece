"""Closed-form contact resistance model for chip-on-glass packaging stacks.

A bonded COG joint is treated as a series chain of thin conductive layers
(aluminum pad, barrier metallization, gold bump, ITO pad) bridged by the
metal-shelled particles of an anisotropic conductive film.  Within a layer
conduction is parallel, between layers it is series:

* A sheet layer of thickness t decomposes into n = W*L/t**2 unit cubes,
  each with z-axis resistance equal to the sheet resistance, so the layer's
  z-axis resistance is R_sheet / n.
* A compressed ACF particle conducts through its metal shell, modeled as a
  hollow cylinder of length 2r and annular cross-section
  pi*(r**2 - (r - t_shell)**2).  The contacting particles act in parallel.

Canonical internal units are ohm and micrometer (resistivity in ohm*um).
Shell resistivity is accepted in the vendors' customary micro-ohm*cm and
converted where it is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CogresError, OpenCircuitError, ValidationError

# 1 uOhm*cm = 1e-6 Ohm * 1e4 um = 1e-2 Ohm*um
UOHM_CM_TO_OHM_UM = 1e-2

# Relative tolerance used when a layer gives both geometry and cube_count.
CUBE_COUNT_CONSISTENCY_RTOL = 1e-6


def unit_cube_count(width: float, length: float, thickness: float) -> float:
    """Number of thickness-sized unit cubes in a width x length film.

    The count W*L/t**2 is an area ratio and is generally non-integral.
    """
    for name, value in (("width", width), ("length", length),
                        ("thickness", thickness)):
        if not value > 0:
            raise ValidationError(f"{name} must be > 0, got {value}")
    return width * length / thickness**2


def convert_resistivity(value: float) -> float:
    """Convert a resistivity from micro-ohm*cm to ohm*um."""
    if not value >= 0:
        raise ValidationError(f"resistivity must be >= 0, got {value}")
    return value * UOHM_CM_TO_OHM_UM


@dataclass(frozen=True)
class LayerSpec:
    """A conductive sheet layer, sized either by geometry or by cube count.

    Geometry (width/length/thickness, um) must be given all together;
    cube_count may be given instead of, or in addition to, geometry.  When
    both are present they must agree to within 1e-6 relative.
    """

    name: str
    sheet_resistance: float  # ohm/square
    width: float | None = None  # um
    length: float | None = None  # um
    thickness: float | None = None  # um
    cube_count: float | None = None

    def __post_init__(self):
        if not self.sheet_resistance > 0:
            raise ValidationError(
                f"layer {self.name!r}: sheet_resistance must be > 0, "
                f"got {self.sheet_resistance}")
        geometry = (self.width, self.length, self.thickness)
        given = [g for g in geometry if g is not None]
        if given and len(given) != 3:
            raise ValidationError(
                f"layer {self.name!r}: width, length and thickness must be "
                "given together")
        if not given and self.cube_count is None:
            raise ValidationError(
                f"layer {self.name!r}: needs geometry or cube_count")
        if self.cube_count is not None and not self.cube_count > 0:
            raise ValidationError(
                f"layer {self.name!r}: cube_count must be > 0, "
                f"got {self.cube_count}")
        if given:
            derived = unit_cube_count(self.width, self.length, self.thickness)
            if self.cube_count is not None and not math.isclose(
                    self.cube_count, derived,
                    rel_tol=CUBE_COUNT_CONSISTENCY_RTOL):
                raise ValidationError(
                    f"layer {self.name!r}: cube_count {self.cube_count} is "
                    f"inconsistent with geometry (W*L/t^2 = {derived})")

    @property
    def unit_cubes(self) -> float:
        """The parallel cube count n, from cube_count or geometry."""
        if self.cube_count is not None:
            return self.cube_count
        return unit_cube_count(self.width, self.length, self.thickness)


def layer_resistance(layer: LayerSpec) -> float:
    """z-axis resistance of a sheet layer: R_sheet / n."""
    return layer.sheet_resistance / layer.unit_cubes


@dataclass(frozen=True)
class ParticleSpec:
    """One metal-shelled ACF conductive particle."""

    radius: float  # um
    shell_thickness: float  # um
    shell_resistivity: float  # uOhm*cm

    def __post_init__(self):
        if not self.radius > 0:
            raise ValidationError(f"radius must be > 0, got {self.radius}")
        if not self.shell_resistivity > 0:
            raise ValidationError(
                f"shell_resistivity must be > 0, got {self.shell_resistivity}")
        if self.shell_thickness == 0:
            raise OpenCircuitError(
                "shell_thickness 0 leaves no conduction cross-section")
        if not 0 < self.shell_thickness <= self.radius:
            raise ValidationError(
                f"shell_thickness must be in (0, radius], got "
                f"{self.shell_thickness} with radius {self.radius}")


def particle_resistance(particle: ParticleSpec) -> float:
    """Resistance of one compressed particle via the hollow-cylinder model.

    R = rho * 2r / (pi * (r^2 - (r - t)^2)): the conduction length is the
    particle diameter and the cross-section is the metal-shell annulus.
    At t = r this degrades gracefully to the solid cylinder 2*rho/(pi*r).
    """
    rho = convert_resistivity(particle.shell_resistivity)
    r = particle.radius
    annulus = math.pi * (r**2 - (r - particle.shell_thickness)**2)
    return rho * (2.0 * r) / annulus


@dataclass(frozen=True)
class AcfContactSpec:
    """The ACF joint: one particle spec plus how many particles contact.

    The effective count is either given directly (contact_count) or as
    density * area.  A count of zero is representable; it flags an open
    joint and makes acf_layer_resistance raise.
    """

    particle: ParticleSpec
    contact_count: float | None = None
    density: float | None = None  # particles/um^2
    area: float | None = None  # um^2
    name: str = "acf"

    def __post_init__(self):
        by_count = self.contact_count is not None
        by_density = self.density is not None or self.area is not None
        if by_count and by_density:
            raise ValidationError(
                f"layer {self.name!r}: give contact_count or density+area, "
                "not both")
        if not by_count and (self.density is None or self.area is None):
            raise ValidationError(
                f"layer {self.name!r}: needs contact_count or both density "
                "and area")
        if by_count and not self.contact_count >= 0:
            raise ValidationError(
                f"layer {self.name!r}: contact_count must be >= 0, "
                f"got {self.contact_count}")
        if not by_count:
            if not self.density >= 0:
                raise ValidationError(
                    f"layer {self.name!r}: density must be >= 0, "
                    f"got {self.density}")
            if not self.area >= 0:
                raise ValidationError(
                    f"layer {self.name!r}: area must be >= 0, got {self.area}")

    @property
    def effective_count(self) -> float:
        if self.contact_count is not None:
            return self.contact_count
        return self.density * self.area


def acf_layer_resistance(contact: AcfContactSpec) -> float:
    """Resistance of the ACF joint: identical particles in parallel."""
    count = contact.effective_count
    if count == 0:
        raise OpenCircuitError("open joint: no contacting particles")
    return particle_resistance(contact.particle) / count


@dataclass(frozen=True)
class StackAssembly:
    """Ordered layers of a COG joint: sheet layers plus at most one ACF."""

    layers: tuple  # of LayerSpec | AcfContactSpec
    measured_resistance: float | None = None  # ohm

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if not self.layers:
            raise ValidationError("stack has no layers")
        acf_entries = 0
        for i, layer in enumerate(self.layers):
            if isinstance(layer, AcfContactSpec):
                acf_entries += 1
            elif not isinstance(layer, LayerSpec):
                raise ValidationError(
                    f"layers[{i}] is neither a LayerSpec nor an "
                    f"AcfContactSpec: {layer!r}")
        if acf_entries > 1:
            raise ValidationError(
                f"stack has {acf_entries} ACF layers, at most one allowed")
        if self.measured_resistance is not None \
                and not self.measured_resistance > 0:
            raise ValidationError(
                f"measured_resistance must be > 0, "
                f"got {self.measured_resistance}")

    @property
    def acf_index(self) -> int | None:
        for i, layer in enumerate(self.layers):
            if isinstance(layer, AcfContactSpec):
                return i
        return None

    @property
    def acf(self) -> AcfContactSpec | None:
        i = self.acf_index
        return None if i is None else self.layers[i]

    @property
    def sheet_layers(self) -> tuple:
        return tuple(l for l in self.layers if isinstance(l, LayerSpec))


@dataclass(frozen=True)
class ResistanceBreakdown:
    """Per-layer resistances (stack order) and their series total."""

    per_layer: tuple  # of (name, ohm)
    total: float  # ohm

    def __post_init__(self):
        object.__setattr__(
            self, "per_layer",
            tuple((name, value) for name, value in self.per_layer))
        if not self.per_layer:
            raise ValidationError("breakdown has no entries")
        for name, value in self.per_layer:
            if not value >= 0:
                raise ValidationError(
                    f"entry {name!r} has negative resistance {value}")
        if self.total != sum(value for _, value in self.per_layer):
            raise ValidationError("total does not equal the sum of entries")


def equivalent_resistance(stack: StackAssembly) -> ResistanceBreakdown:
    """Total joint resistance: within-layer parallel, between-layer series.

    Failures of an individual layer op are re-raised with the layer name
    attached, keeping their type (and so the CLI exit code).
    """
    entries = []
    for layer in stack.layers:
        try:
            if isinstance(layer, AcfContactSpec):
                value = acf_layer_resistance(layer)
            else:
                value = layer_resistance(layer)
        except CogresError as exc:
            raise type(exc)(f"layer {layer.name!r}: {exc}") from exc
        entries.append((layer.name, value))
    total = sum(value for _, value in entries)
    return ResistanceBreakdown(tuple(entries), total)
