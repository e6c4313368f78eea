import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_collection_modifyitems(config, items):
    if os.environ.get("ISG_STRETCH") == "1":
        return
    skip = pytest.mark.skip(reason="stretch target; set ISG_STRETCH=1 to run")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def group_catalog():
    from isgenum.groups import catalog

    return catalog(15)


@pytest.fixture(scope="session")
def groups_by_name(group_catalog):
    return {G.name: G for G in group_catalog}
