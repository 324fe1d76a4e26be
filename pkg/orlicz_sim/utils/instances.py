#!/usr/bin/env python3

"""
Instances
---------
Verification instances (a matrix, a vector and their provenance) and
their seeded generation.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..analysis.data_storage import load_json, save_json
from ..combinat.weight_matrix import WeightMatrix
from ..errors import ValidationError
from ..generation.generated_space import Variant, matrix_from_functions
from ..orlicz import PowerOrlicz
from .random_streams import instance_seed, seed_entropy

ENTRY_RANGE = (0.05, 1.0)
EXPONENT_RANGE = (1.0, 4.0)


class InstanceKind(str, Enum):
    RANDOM_NORMALIZED = "random_normalized"
    POWER_ROWS = "power_rows"
    USER = "user"

    @classmethod
    def parse(cls, value) -> "InstanceKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "_")
        for member in cls:
            if key == member.value:
                return member
        raise ValidationError(f"Unknown instance kind: {value}")


@dataclass
class Instance:
    """
    An n x N matrix with positive nonincreasing rows and a vector x.

    exponents is set for POWER_ROWS instances: row i was built from M_i(t) = t^{p_i}.
    """
    n: int
    N: int
    matrix: np.ndarray
    x: np.ndarray
    seed: Optional[int] = None
    kind: InstanceKind = InstanceKind.USER
    exponents: Optional[List[float]] = None

    def __post_init__(self):
        self.kind = InstanceKind.parse(self.kind)
        self.matrix = np.asarray(self.matrix, dtype=np.float64)
        self.x = np.asarray(self.x, dtype=np.float64)
        if self.n < 1 or self.N < self.n:
            raise ValidationError(f"invalid dimensions n={self.n}, N={self.N}: need 1 <= n <= N")
        if self.matrix.shape != (self.n, self.N):
            raise ValidationError(f"matrix has shape {self.matrix.shape}, expected ({self.n}, {self.N})")
        if self.x.shape != (self.n,):
            raise ValidationError(f"x has shape {self.x.shape}, expected ({self.n},)")
        if not np.all(np.isfinite(self.x)):
            raise ValidationError("x must have finite entries")
        WeightMatrix(self.matrix)
        if self.exponents is not None:
            self.exponents = [float(p) for p in self.exponents]
            if len(self.exponents) != self.n:
                raise ValidationError(f"expected {self.n} exponents, got {len(self.exponents)}")

    def weight_matrix(self) -> WeightMatrix:
        return WeightMatrix(self.matrix)

    def functions(self) -> List[PowerOrlicz]:
        """The functions M_i(t) = t^{p_i} behind a POWER_ROWS instance."""
        if self.exponents is None:
            raise ValidationError("instance has no 'exponents'; the converse check needs them")
        return [PowerOrlicz(p) for p in self.exponents]

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "n": self.n,
            "N": self.N,
            "matrix": self.matrix.tolist(),
            "x": self.x.tolist(),
            "seed": self.seed,
            "kind": self.kind.value.upper(),
        }
        if self.exponents is not None:
            data["exponents"] = list(self.exponents)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Instance":
        missing = [k for k in ("matrix", "x") if k not in data]
        if missing:
            raise ValidationError(f"instance is missing fields: {missing}")
        matrix = np.asarray(data["matrix"], dtype=np.float64)
        if matrix.ndim != 2:
            raise ValidationError("instance matrix must be two-dimensional")
        return cls(
            n=int(data.get("n", matrix.shape[0])),
            N=int(data.get("N", matrix.shape[1])),
            matrix=matrix,
            x=data["x"],
            seed=data.get("seed"),
            kind=data.get("kind", InstanceKind.USER),
            exponents=data.get("exponents"),
        )

    def save(self, path: str) -> str:
        return save_json(self.to_dict(), path)

    @classmethod
    def load(cls, path: str) -> "Instance":
        return cls.from_dict(load_json(path))


def generate_instance(n: int, N: Optional[int] = None, kind=InstanceKind.RANDOM_NORMALIZED, seed: int = 0,
                      variant=Variant.ROWSUM_NORMALIZED,
                      exponents: Optional[Sequence[float]] = None) -> Instance:
    """
    Draw a reproducible instance.

    RANDOM_NORMALIZED draws entries uniformly in [0.05, 1], sorts every row
    decreasingly and divides it by its sum. POWER_ROWS draws p_i uniformly in
    [1, 4] (unless exponents are given) and builds the rows from t^{p_i} with
    matrix_from_functions; under ROWSUM_NORMALIZED the rows are divided by N
    so that they sum to 1. In both cases x is standard normal.

    Args:
        n (int): Number of rows
        N (int, optional): Number of columns (defaults to n)
        kind: RANDOM_NORMALIZED or POWER_ROWS
        seed (int): Seed of the instance
        variant: Row scaling of POWER_ROWS instances
        exponents: Fixed exponents for POWER_ROWS

    Returns:
        Instance: The generated instance
    """
    kind = InstanceKind.parse(kind)
    variant = Variant.parse(variant)
    N = n if N is None else int(N)
    if n < 1 or N < n:
        raise ValidationError(f"invalid dimensions n={n}, N={N}: need 1 <= n <= N")
    if seed is None:
        raise ValidationError("an integer seed is required")
    rng = np.random.default_rng(seed_entropy(seed))

    if kind is InstanceKind.RANDOM_NORMALIZED:
        entries = -np.sort(-rng.uniform(*ENTRY_RANGE, size=(n, N)), axis=1)
        matrix = entries / entries.sum(axis=1, keepdims=True)
        x = rng.standard_normal(n)
        return Instance(n, N, matrix, x, seed, kind)

    if kind is InstanceKind.POWER_ROWS:
        if exponents is None:
            p = rng.uniform(*EXPONENT_RANGE, size=n).tolist()
        else:
            p = [float(e) for e in exponents]
        matrix = matrix_from_functions([PowerOrlicz(e) for e in p], columns=N).entries.copy()
        if variant is Variant.ROWSUM_NORMALIZED:
            matrix /= N
        x = rng.standard_normal(n)
        return Instance(n, N, matrix, x, seed, kind, exponents=p)

    raise ValidationError("USER instances are loaded from files, not generated")


def generate_campaign(count: int, sizes: Sequence[int], kind=InstanceKind.RANDOM_NORMALIZED, seed: int = 0,
                      columns: Optional[int] = None, variant=Variant.ROWSUM_NORMALIZED) -> List[Instance]:
    """
    `count` instances for every n in sizes; instance i gets instance_seed(seed, i).

    Args:
        count (int): Instances per size
        sizes: Row counts n
        kind: Instance kind
        seed (int): Campaign seed
        columns (int, optional): Column count N (defaults to n)
        variant: Row scaling of POWER_ROWS instances

    Returns:
        list: Instances ordered by size, then by index
    """
    if count < 1:
        raise ValidationError(f"campaign size must be positive, got {count}")
    instances = []
    index = 0
    for n in sizes:
        for _ in range(count):
            N = n if columns is None else max(columns, n)
            instances.append(generate_instance(n, N, kind, instance_seed(seed, index), variant))
            index += 1
    return instances
