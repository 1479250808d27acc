from __future__ import annotations

import pytest

from strongcolor.corpus import general_instances, small_instances, subcubic_instances


@pytest.fixture(scope="session")
def subcubic_corpus():
    return subcubic_instances()


@pytest.fixture(scope="session")
def general_corpus():
    return general_instances()


@pytest.fixture(scope="session")
def small_corpus():
    return small_instances()
