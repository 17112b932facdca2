"""Enumeration caps shared by the exhaustive routines.

Setting ``CARTER_CAP`` in the environment replaces every default cap.
"""

from __future__ import annotations

import os

DEFAULTS = {
    "closure": 10**6,
    "interval": 10**6,
    "orbit": 10**7,
    "cosets": 10**6,
}


class CapExceeded(RuntimeError):
    pass


def get_cap(kind: str, override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("CARTER_CAP")
    if env:
        return int(env)
    return DEFAULTS[kind]
