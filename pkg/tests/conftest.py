import warnings

import pytest

from gravwitness.core import ConfigConsistencyWarning, paper_defaults, validate


@pytest.fixture(scope="session")
def paper_config():
    """Validated reference configuration (the dx-consistency warning between
    the quoted 250 um and the kinematic 232 um is expected).  Frozen, so a
    single session-wide instance is safe to share."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConfigConsistencyWarning)
        return validate(paper_defaults())
