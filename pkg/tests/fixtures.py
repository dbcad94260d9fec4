from pathlib import Path
from unittest.mock import MagicMock

import pytest
from numwall.algebra import Domain

# (d, period, depth, order)
DEFICIENCY_TABLE = [
    (1, '1', 1, 1),
    (2, '111010', 5, 5),
    (3, '11110101001111010010', 19, 19),
    (4, '000110010001101100110001101100111011000110010011001110010011', 56, 56),
]

GF2 = Domain.prime_field(2)
GF3 = Domain.prime_field(3)
GF5 = Domain.prime_field(5)
GF7 = Domain.prime_field(7)
ZZ = Domain.integers()

PAGODA_TERMS = {
    -2: 1, -1: 2, 0: 2, 1: 0, 2: 1,
}

SIMPLE_SPEC = '''\
# Thue-Morse
alphabet A B
gen A -> AB
gen B -> BA
seed A
ext A -> 0
ext B -> 1
mod 2
'''

def write_file(directory, name: str, content: str) -> Path:
    path = Path(directory) / name
    path.write_text(content)
    return path


@pytest.fixture
def mock_action(monkeypatch):
    """clickclick's Action as a silent context manager"""
    m = MagicMock()
    m.return_value = m
    m.__enter__.return_value = m
    m.__exit__.return_value = False
    return m


@pytest.fixture
def app_config(monkeypatch, tmp_path):
    """A fresh configuration file per test"""
    from numwall.configuration import configuration
    monkeypatch.setattr(configuration, 'config_path', tmp_path / 'numwall' / 'config.yaml')
    return configuration


@pytest.fixture
def no_output_dir(monkeypatch):
    monkeypatch.delenv('NUMWALL_OUTPUT_DIR', raising=False)
