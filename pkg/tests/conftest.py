import os

import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the slow tiers")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running tier")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow") or os.environ.get("CELLSCHUR_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow tier: pass --runslow or set CELLSCHUR_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
