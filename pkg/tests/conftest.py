from __future__ import annotations

import pytest


def pytest_addoption(parser):
    parser.addoption("--long-run", action="store_true", default=False,
                     help="run hour-scale checks such as the quartic order-15 census")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long-run"):
        return
    skip = pytest.mark.skip(reason="needs --long-run")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip)
