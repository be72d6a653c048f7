import sys
from pathlib import Path

import pytest

# Top-level packages (domains, equations, ...) import each other by absolute name
sys.path.insert(0, str(Path(__file__).resolve().parent))

from run_management import run_processor  # noqa: E402


@pytest.fixture(autouse=True)
def serial_workers():
    run_processor.set_workers(1)
    yield
    run_processor.set_workers(1)


@pytest.fixture
def write_spec(tmp_path):
    """Write a problem spec document and return its path."""

    def write(text: str, name: str = "spec.json") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
