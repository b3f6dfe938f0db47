"""Named, splittable random streams.

Every Monte Carlo draw in this package goes through a stream obtained from
``stream(seed, label)``.  The label is folded into the Philox key via
SeedSequence's spawn mechanism, so a given (seed, label) pair always produces
the same sequence no matter how many other streams were created before it or
in what order the suites run.  This is what makes parallel and serial runs
of the verification harness emit identical reports.
"""

from __future__ import annotations

import numpy as np


def stream(seed: int, label: str) -> np.random.Generator:
    """Return a Generator keyed by (seed, label), independent across labels."""
    if not label:
        raise ValueError("stream label must be a non-empty string")
    key = tuple(int(b) for b in label.encode("utf-8"))
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=key)
    return np.random.Generator(np.random.Philox(ss))
