"""JSON report emission (schema ``outliergram/1``)."""

from __future__ import annotations

import json

from .adjusted import RNG_NAME
from .core import OutlierReport, Stage
from .sample import FunctionalSample

__all__ = ["report_to_dict", "report_json", "SCHEMA"]

SCHEMA = "outliergram/1"


def report_to_dict(report: OutlierReport, sample: FunctionalSample,
                   seed: int | None = None) -> dict:
    """Schema-stable dictionary form of a detection report.

    ``seed`` (with the generator identifier) is recorded only when the run
    was seeded.
    """
    boundary = report.boundary
    out: dict = {
        "schema": SCHEMA,
        "n": sample.n,
        "p": sample.p,
        "boundary": {
            "kind": boundary.kind.value,
            "factor": boundary.factor,
            "q1": boundary.q1,
            "q3": boundary.q3,
            "iqr": boundary.iqr,
            "threshold": boundary.threshold,
        },
        "records": [
            {
                "index": i,
                "label": sample.label_of(i),
                "mbd": rec.mbd,
                "mei": rec.mei,
                "parabola": rec.parabola,
                "distance": rec.distance,
            }
            for i, rec in enumerate(report.records)
        ],
        "shape_outliers": [
            {
                "index": o.index,
                "stage": o.stage.value,
                **(
                    {"shifted_mei": o.shifted_mei, "shifted_mbd": o.shifted_mbd}
                    if o.stage is not Stage.DIRECT
                    else {}
                ),
            }
            for o in report.shape_outliers
        ],
        "magnitude_outliers": list(report.magnitude_outliers),
    }
    if seed is not None:
        out["seed"] = seed
        out["rng"] = RNG_NAME
    return out


def report_json(report: OutlierReport, sample: FunctionalSample,
                seed: int | None = None) -> str:
    return json.dumps(report_to_dict(report, sample, seed), indent=2) + "\n"
