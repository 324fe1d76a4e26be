#!/usr/bin/env python3

"""
Random Streams
--------------
Counter-based seeding: every random stream is a function of a base seed
and an integer index, so results do not depend on execution order.
"""

from typing import List

import numpy as np


def seed_entropy(seed: int, *counters: int) -> List[int]:
    """
    Entropy words for numpy's SeedSequence from any integer seed.

    SeedSequence only takes nonnegative words; a negative seed is stored by
    its magnitude with a trailing sign word, so two distinct seeds with the
    same counters never share a stream.
    """
    seed = int(seed)
    counters = [int(c) for c in counters]
    if seed >= 0:
        return [seed, *counters]
    return [-seed, *counters, 1]


def stream_rng(seed: int, index: int) -> np.random.Generator:
    """Generator for stream `index` under `seed`."""
    return np.random.default_rng(seed_entropy(seed, index))


def instance_seed(base_seed: int, index: int) -> int:
    """
    Derive the seed of instance `index` in a campaign.

    Args:
        base_seed (int): Campaign seed, any integer
        index (int): Instance index

    Returns:
        int: A 32-bit seed recorded in the instance
    """
    return int(np.random.SeedSequence(seed_entropy(base_seed, index)).generate_state(1)[0])
