import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from chords.diagram import ChordDiagram  # noqa: E402
from chords.enumeration import rccd  # noqa: E402


@pytest.fixture(scope="session")
def rccd_by_n():
    """RCCD(n) for n = 1..6, canonically sorted."""
    return {n: rccd(n) for n in range(1, 7)}


@pytest.fixture(scope="session")
def rccd3():
    return {
        "wheel": ChordDiagram.from_chords([(1, 4), (2, 5), (3, 6)]),
        "cycloid": ChordDiagram.from_chords([(1, 3), (2, 5), (4, 6)]),
        "ladder": ChordDiagram.from_chords([(1, 4), (2, 6), (3, 5)]),
        "other": ChordDiagram.from_chords([(1, 5), (2, 4), (3, 6)]),
    }
