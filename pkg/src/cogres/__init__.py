"""Contact resistance modeling for chip-on-glass ACF packaging stacks.

Closed-form within-layer-parallel / between-layer-series model, a
resistor-network cross-check solver, contact-count statistics, parameter
sweeps, and a config-driven CLI (`cogres`).
"""

from .config import (AssemblyConfig, MonteCarloSettings, SweepSettings,
                     assembly_from_dict, assembly_to_dict, config_from_dict,
                     load_assembly, load_builtin_config, load_config)
from .errors import (CogresError, ConfigError, OpenCircuitError,
                     SingularNetworkError, ValidationError)
from .model import (UOHM_CM_TO_OHM_UM, AcfContactSpec, LayerSpec,
                    ParticleSpec, ResistanceBreakdown, StackAssembly,
                    acf_layer_resistance, convert_resistivity,
                    equivalent_resistance, layer_resistance,
                    particle_resistance, unit_cube_count)
from .network import (LayerValidation, ResistorNetwork, ValidationReport,
                      discretize_layer, reduce_series_parallel,
                      solve_network, validate_stack)
from .particles import (ContactDistribution, SweepPoint, SweepResult,
                        expected_particle_count, monte_carlo_contacts,
                        stability_onset, sweep_particle_count,
                        sweep_shell_thickness)
from .reporting import ComparisonResult, compare_measurement

__version__ = "0.1.0"

__all__ = [
    "AcfContactSpec",
    "AssemblyConfig",
    "CogresError",
    "ComparisonResult",
    "ConfigError",
    "ContactDistribution",
    "LayerSpec",
    "LayerValidation",
    "MonteCarloSettings",
    "OpenCircuitError",
    "ParticleSpec",
    "ResistanceBreakdown",
    "ResistorNetwork",
    "SingularNetworkError",
    "StackAssembly",
    "SweepPoint",
    "SweepResult",
    "SweepSettings",
    "UOHM_CM_TO_OHM_UM",
    "ValidationError",
    "ValidationReport",
    "acf_layer_resistance",
    "assembly_from_dict",
    "assembly_to_dict",
    "compare_measurement",
    "config_from_dict",
    "convert_resistivity",
    "discretize_layer",
    "equivalent_resistance",
    "expected_particle_count",
    "layer_resistance",
    "load_assembly",
    "load_builtin_config",
    "load_config",
    "monte_carlo_contacts",
    "particle_resistance",
    "reduce_series_parallel",
    "solve_network",
    "stability_onset",
    "sweep_particle_count",
    "sweep_shell_thickness",
    "unit_cube_count",
    "validate_stack",
]
