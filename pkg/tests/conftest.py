import random

import pytest

from tiltcell.docio import catalog_document
from tiltcell.highest_weight import Registry, verify_standard_category
from tiltcell.tilting import TiltingRegistry


GOOD_CATALOG = ["trivial", "semisimple2", "a2path", "auslander-dualnumbers", "ut3"]


@pytest.fixture(scope="session")
def pipelines():
    """Verified registry + tilting data for every good catalog algebra."""
    out = {}
    for name in GOOD_CATALOG:
        doc = catalog_document(name)
        reg = Registry(doc.algebra, doc.poset)
        verify_standard_category(reg).raise_if_failed()
        tilt = TiltingRegistry(reg)
        out[name] = (doc, reg, tilt)
    return out


@pytest.fixture()
def rng():
    return random.Random(12345)
