"""Shared fixtures: the expensive distance fields are built once per session
and reused by the estimator and acceptance tests."""

from __future__ import annotations

import time

import pytest

from leapers.pieces import king, knight
from leapers.reach import compute_field, shells


def _timed_field(piece, radius):
    t0 = time.perf_counter()
    field = compute_field(piece, radius)
    return field, time.perf_counter() - t0


@pytest.fixture(scope="session")
def knight12_1000():
    """(field, build seconds) for the ordinary knight out to radius 1000."""
    return _timed_field(knight(1, 2), 1000)


@pytest.fixture(scope="session")
def knight23_1000():
    return _timed_field(knight(2, 3), 1000)


@pytest.fixture(scope="session")
def knight14_1000():
    return _timed_field(knight(1, 4), 1000)


@pytest.fixture(scope="session")
def knight25_800():
    return _timed_field(knight(2, 5), 800)


@pytest.fixture(scope="session")
def knight34_800():
    return _timed_field(knight(3, 4), 800)


@pytest.fixture(scope="session")
def king_1000():
    return _timed_field(king(), 1000)


@pytest.fixture(scope="session")
def king_shells_200():
    return shells(king(), 200)
