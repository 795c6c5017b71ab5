"""
Utility functions for writing result files.

``write_csv`` writes the pandas tables produced by the pipeline steps and
``write_json`` writes reports and series with a stable key order.
"""

import json
from pathlib import Path
from typing import Any

import pandas as pd


def write_csv(df: pd.DataFrame, filepath: str) -> None:
    """Write ``df`` as UTF-8 CSV without the index, creating parent directories."""
    Path(filepath).parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(filepath, index=False, encoding="utf-8")


def dump_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


def write_json(data: Any, filepath: str) -> None:
    Path(filepath).parent.mkdir(parents=True, exist_ok=True)
    with open(filepath, "w", encoding="utf-8") as fh:
        fh.write(dump_json(data) + "\n")
