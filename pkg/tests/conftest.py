import json
import sys
from functools import lru_cache
from pathlib import Path

import pytest

from cdlat.catalog import bundled_path, load_catalog
from cdlat.cd import cd_lattice
from cdlat.families import build_family, parse_family
from cdlat.subgroups import enumerate_subgroups

DATA = Path(__file__).parent / "data"
sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def fam(spec):
    """Family group from short notation, cached across tests."""
    return build_family(parse_family(spec))


@lru_cache(maxsize=None)
def golden(bundle):
    return {(r["order"], r["id"]): r for r in json.loads((DATA / f"golden_{bundle}.json").read_text())}


@lru_cache(maxsize=None)
def bundled(name):
    return load_catalog(bundled_path(name), validate=False)


@lru_cache(maxsize=None)
def built(name):
    """(key, group) for every entry of a bundled catalog."""
    return tuple((e.key, e.build()) for e in bundled(name))


@lru_cache(maxsize=None)
def analysis(name):
    """(key, group, lattice, CD report) for every entry of a bundled catalog."""
    out = []
    for key, g in built(name):
        lat = enumerate_subgroups(g)
        out.append((key, g, lat, cd_lattice(g, lat)))
    return tuple(out)


@pytest.fixture(scope="session")
def small_groups():
    return built("orders_1_32")


@pytest.fixture(scope="session")
def groups_upto_64():
    return built("orders_1_32") + built("order_64")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
