"""Resource bounds for operations that enumerate elements or subgroups.

Operations that would exceed a bound raise ``OrderTooLarge`` (or
``IndexTooLarge`` for coset actions) instead of silently degrading.
The active limits are process-global; scan workers run in separate
processes and install their own copy.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace

ENUM_BOUND_ENV = "NORMLAB_ENUM_BOUND"


@dataclass(frozen=True)
class Limits:
    enum_bound: int = 10**6        # max group order for element enumeration
    subgroup_bound: int = 2000     # max group order for full subgroup enumeration
    index_bound: int = 10**5       # max coset-action degree for quotients
    intro_bound: int = 200         # max group order for the intro property suite


_active = Limits()


def get_limits() -> Limits:
    return _active


def set_limits(limits: Limits) -> None:
    global _active
    _active = limits


def limits_from_env() -> Limits:
    base = Limits()
    raw = os.environ.get(ENUM_BOUND_ENV)
    if raw:
        try:
            base = replace(base, enum_bound=int(raw))
        except ValueError:
            pass
    return base


@contextmanager
def using_limits(limits: Limits):
    global _active
    previous = _active
    _active = limits
    try:
        yield limits
    finally:
        _active = previous
