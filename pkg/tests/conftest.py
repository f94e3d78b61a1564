import sys

import pytest

from flagpush.rootsys import build_root_system
from flagpush.weylgrp import weyl_group


@pytest.fixture(scope="session")
def systems():
    cache = {}

    def get(name):
        if name not in cache:
            rs = build_root_system(name)
            cache[name] = (rs, weyl_group(rs))
        return cache[name]

    return get


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    RESULTS = getattr(mod, "RESULTS", None)
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
