"""Shape outlier detection and visualization for samples of curves.

The central objects: a :class:`FunctionalSample` of curves on a shared time
grid; modified band depth and modified epigraph index per curve; and the
outliergram, the (MEI, MBD) scatter against its theoretical bounding
parabola, where atypically shaped curves drop visibly below the crowd.
"""

from .adjusted import (
    CalibrationConfig,
    CovarianceEstimate,
    calibrate_factor,
    ogk_covariance,
    simulate_null,
)
from .core import (
    Boundary,
    BoundaryKind,
    OutlierReport,
    ShapeOutlier,
    Stage,
    compute_records,
    detect_direct,
    detect_shifted,
    quartiles,
    run_outliergram,
    shift_candidates,
)
from .depth import (
    ParabolaCoefficients,
    cross_term,
    depth_all,
    mbd_all_fast,
    mbd_all_oracle,
    mei_all,
    parabola_coefficients,
    parabola_value,
)
from .fbplot import FunctionalBoxplotResult, functional_boxplot
from .kernels import BACKEND
from .report import report_json, report_to_dict
from .sample import (
    DepthRecord,
    FunctionalSample,
    TimeGrid,
    equidistant_grid,
    load_csv,
    make_grid,
    write_csv,
)
from .simulation import ModelSpec, SimulationResult, evaluate, generate, gp_sample
from .svg import PlotSpec, render_curves, render_fbplot, render_outliergram

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Boundary",
    "BoundaryKind",
    "CalibrationConfig",
    "CovarianceEstimate",
    "DepthRecord",
    "FunctionalBoxplotResult",
    "FunctionalSample",
    "ModelSpec",
    "OutlierReport",
    "ParabolaCoefficients",
    "PlotSpec",
    "ShapeOutlier",
    "SimulationResult",
    "Stage",
    "TimeGrid",
    "calibrate_factor",
    "compute_records",
    "cross_term",
    "depth_all",
    "detect_direct",
    "detect_shifted",
    "equidistant_grid",
    "evaluate",
    "functional_boxplot",
    "generate",
    "gp_sample",
    "load_csv",
    "make_grid",
    "mbd_all_fast",
    "mbd_all_oracle",
    "mei_all",
    "ogk_covariance",
    "parabola_coefficients",
    "parabola_value",
    "quartiles",
    "render_curves",
    "render_fbplot",
    "render_outliergram",
    "report_json",
    "report_to_dict",
    "run_outliergram",
    "shift_candidates",
    "simulate_null",
    "write_csv",
]
