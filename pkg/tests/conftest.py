"""Shared test fixtures for wcm tests."""

import random
import sys
from pathlib import Path

import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from formats import write_canonical  # noqa: E402
from graph import build_graph  # noqa: E402
from instance import Instance  # noqa: E402

P6_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]
K3_EDGES = [(0, 1), (0, 2), (1, 2)]
TWO_K2_EDGES = [(0, 1), (2, 3)]


def _make(n, edges, weights=None, name=""):
    weights = [1.0] * len(edges) if weights is None else weights
    return Instance(graph=build_graph(n, edges), weights=weights, name=name)


def _random_instance(rng: random.Random, n_min: int, n_max: int, name: str = "") -> Instance:
    n = rng.randint(n_min, n_max)
    p = rng.choice([0.3, 0.6])
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    weights = [round(rng.uniform(-1.0, 1.0), 3) for _ in edges]
    return _make(n, edges, weights, name)


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point the config file into a temporary ~/.wcm and clear the env override."""
    wcm_dir = tmp_path / ".wcm"

    import config

    monkeypatch.setattr(config, "WCM_DIR", wcm_dir)
    monkeypatch.setattr(config, "CONFIG_FILE", wcm_dir / "config.toml")
    monkeypatch.delenv("WCM_TIME_LIMIT", raising=False)

    import commands.config as config_cmd

    monkeypatch.setattr(config_cmd, "CONFIG_FILE", wcm_dir / "config.toml")

    return wcm_dir


@pytest.fixture
def make_instance():
    """Factory: ``make_instance(n, edges, weights=None, name="")`` (unit weights by default)."""
    return _make


@pytest.fixture
def random_instances():
    """Factory: ``random_instances(count, seed, n_min=2, n_max=10)`` with mixed-sign weights."""

    def build(count, seed, n_min=2, n_max=10):
        rng = random.Random(seed)
        return [_random_instance(rng, n_min, n_max, name=f"rand-{seed}-{i}") for i in range(count)]

    return build


@pytest.fixture
def path6():
    """Unit-weight path 0-1-2-3-4-5."""
    return _make(6, P6_EDGES, name="p6")


@pytest.fixture
def k3():
    """Unit-weight triangle."""
    return _make(3, K3_EDGES, name="k3")


@pytest.fixture
def two_k2():
    """Two disjoint unit-weight edges."""
    return _make(4, TWO_K2_EDGES, name="2k2")


@pytest.fixture
def instance_file(tmp_path):
    """Factory writing an instance in the canonical format; returns the path."""

    def write(inst, filename=None, directory=None):
        directory = directory or tmp_path
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / (filename or f"{inst.name or 'instance'}.wcm")
        path.write_bytes(write_canonical(inst))
        return path

    return write


@pytest.fixture
def cli_runner(capsys):
    """Helper to run CLI commands and capture output."""

    def run(argv):
        import cli

        try:
            exit_code = cli.main(argv)
        except SystemExit as e:
            exit_code = e.code if e.code is not None else 0

        captured = capsys.readouterr()
        return exit_code, captured.out, captured.err

    return run
