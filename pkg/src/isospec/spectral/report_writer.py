"""/src/isospec/spectral/report_writer.py"""

import csv
import logging
from pathlib import Path

from pydantic import BaseModel

from isospec.errors import MetadataMismatchError

from .models import SpectrumReport

logger = logging.getLogger(__name__)

CSV_HEADER = ["weight_m1", "weight_m2", "index", "value_A", "value_B", "gap"]


def write_report_json(report: BaseModel, path: str | Path) -> Path:
    """Write any report model as indented JSON; returns the path written."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.model_dump_json(indent=2) + "\n")
    logger.info("wrote %s", path)
    return path


def write_report_csv(report_a: SpectrumReport, report_b: SpectrumReport | None, path: str | Path) -> Path:
    """One row per eigenvalue: weight, index, both values and their gap.

    With a single report the B columns repeat the A values.
    """
    report_b = report_b or report_a
    blocks_b = report_b.block_map()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for block in report_a.blocks:
            values_b = blocks_b.get(tuple(block.weight))
            if values_b is None or len(values_b) != len(block.eigenvalues):
                raise MetadataMismatchError(f"block {block.weight} does not match between reports")
            for index, (value_a, value_b) in enumerate(zip(block.eigenvalues, values_b)):
                gap = abs(value_a - value_b)
                writer.writerow([block.weight[0], block.weight[1], index, repr(value_a), repr(value_b), repr(gap)])
    logger.info("wrote %s", path)
    return path
