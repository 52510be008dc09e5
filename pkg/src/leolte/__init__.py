"""Feasibility toolkit for LTE relay backhaul over LEO mega-constellations."""

from .doppler import (
    LTE_MAX_DOPPLER_HZ,
    DopplerResult,
    PositionErrorCase,
    doppler_at_elevation,
    doppler_excess_factor,
    doppler_profile,
    max_residual_doppler,
    max_tolerable_position_error,
    residual_doppler,
    worst_case_doppler,
)
from .grid import GridParams, all_grids, doppler_margin, grid_for_bandwidth
from .handover import (
    ConstellationTrack,
    HandoverEvent,
    Mechanism,
    availability,
    handover_schedule,
    outage_model,
)
from .harq import (
    ChannelModel,
    HarqConfig,
    HarqMetrics,
    HarqSimulator,
    Strategy,
    analytic_goodput,
    compare_strategies,
    min_harq_processes,
    run_simulation,
)
from .orbit import (
    LinkGeometrySample,
    OrbitScenario,
    PhysicalConstants,
    VisibilityWindow,
    angular_velocity,
    orbital_period,
    orbital_speed,
    pass_profile,
    round_trip_time,
    slant_range,
    visibility_window,
)
from .scenario import FeasibilityReport, ScenarioFile, load_scenario, run_full_report, sweep
from .timers import (
    LteTimingConstants,
    TimerVerdict,
    max_timing_advance,
    ra_feasibility,
    rn_attach_plan,
    ta_applicability,
)

__version__ = "0.1.0"
