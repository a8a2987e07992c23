"""Deterministic seed derivation.

All randomness in the package flows from a single 64-bit seed; child
generators are derived by hashing the seed together with a label path, so
independent sampling sites never share a stream.
"""

from __future__ import annotations

import hashlib
import random


def derive_seed(seed, *labels):
    """A 64-bit child seed determined by ``seed`` and the label path."""
    h = hashlib.sha256()
    h.update(str(int(seed)).encode())
    for lab in labels:
        h.update(b"/")
        h.update(str(lab).encode())
    return int.from_bytes(h.digest()[:8], "big")


def rng_for(seed, *labels):
    return random.Random(derive_seed(seed, *labels))
