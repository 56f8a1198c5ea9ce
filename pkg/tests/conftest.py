"""Shared fixtures: the on-disk fixture corpus, parsed once per session."""

from pathlib import Path

import pytest

from hyperscope import load_machine, parse_formula

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def read_fixture(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fig1_machine():
    return load_machine(read_fixture("fig1.json"))


@pytest.fixture(scope="session")
def fig1_circuit_machine():
    return load_machine(read_fixture("fig1.aag"))


@pytest.fixture(scope="session")
def od_formula():
    return parse_formula(read_fixture("od.hltl"))


@pytest.fixture(scope="session")
def arbiter_machine():
    return load_machine(read_fixture("arbiter.json"))


@pytest.fixture(scope="session")
def symmetry_formula():
    return parse_formula(read_fixture("symmetry.hltl"))


@pytest.fixture(scope="session")
def drone_machine():
    return load_machine(read_fixture("drone_v1.json"))


@pytest.fixture(scope="session")
def drone_fixed_machine():
    return load_machine(read_fixture("drone_fixed.json"))


@pytest.fixture(scope="session")
def drone_formula():
    return parse_formula(read_fixture("drone.hltl"))


@pytest.fixture(scope="session")
def drone_broken_formula():
    return parse_formula(read_fixture("drone_broken.hltl"))
