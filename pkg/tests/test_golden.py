"""Pinned driver output for every shipped space."""

from pathlib import Path

import pytest

from looplab import cli
from looplab.thom import SPACES

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("name", sorted(SPACES))
def test_group_table_matches_golden(name, tmp_path, capsys):
    target = tmp_path / "table.tsv"
    code = cli.main(
        ["compare", "--space", name, "--coeff", "z", "--max-degree", "60",
         "--out", str(target)]
    )
    capsys.readouterr()
    assert code == 0
    assert target.read_text() == (GOLDEN / f"{name}_loop_z.tsv").read_text()


def test_every_shipped_space_has_a_golden_table():
    names = {path.name for path in GOLDEN.glob("*_loop_z.tsv")}
    assert names == {f"{name}_loop_z.tsv" for name in SPACES}
