import os
import sys
from pathlib import Path
from typing import Callable

import orjson
import pytest

PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

from src.gains.graph import GainGraph  # noqa: E402


@pytest.fixture()
def shi2() -> GainGraph:
    return GainGraph.build(2, [(1, 2, 0), (1, 2, 1)])


@pytest.fixture()
def linial2() -> GainGraph:
    return GainGraph.build(2, [(1, 2, 1)])


@pytest.fixture()
def zero_triangle() -> GainGraph:
    return GainGraph.build(3, [(1, 2, 0), (2, 3, 0), (1, 3, 0)])


@pytest.fixture()
def write_document(tmp_path: Path) -> Callable[[dict], str]:
    counter = iter(range(1_000))

    def _write(payload: dict) -> str:
        path = tmp_path / f"graph-{next(counter)}.json"
        path.write_bytes(orjson.dumps(payload))
        return str(path)

    return _write
