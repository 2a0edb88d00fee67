import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("FUNCBATCH_STRETCH") == "1":
        return
    skip = pytest.mark.skip(reason="stretch run; set FUNCBATCH_STRETCH=1 to enable")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip)
