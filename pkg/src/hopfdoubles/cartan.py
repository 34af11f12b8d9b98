"""Symmetric Cartan data and the q-scalars they determine."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ConfigurationError, InputError
from .scalar import QFunc


@dataclass(frozen=True)
class CartanDatum:
    """Symmetric form i.j on the simple roots, with i.i even and positive."""

    matrix: tuple
    name: str = ""

    def __post_init__(self):
        M = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", M)
        n = len(M)
        if n == 0 or any(len(r) != n for r in M):
            raise ConfigurationError("Cartan datum must be a nonempty square matrix")
        for i in range(n):
            if M[i][i] <= 0 or M[i][i] % 2:
                raise ConfigurationError(f"i.i must be even and positive (entry {i})")
            for j in range(n):
                if M[i][j] != M[j][i]:
                    raise ConfigurationError("Cartan datum must be symmetric")
                if (2 * M[i][j]) % M[i][i]:
                    raise ConfigurationError("2 i.j / i.i must be an integer")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def dot(self, i, j) -> int:
        return self.matrix[i][j]

    def d(self, i) -> int:
        return self.matrix[i][i] // 2

    def a(self, i, j) -> int:
        """Cartan integer 2 i.j / i.i."""
        return 2 * self.matrix[i][j] // self.matrix[i][i]

    def q_i(self, i) -> QFunc:
        return QFunc.q_power(self.d(i))

    def names(self, letter: str):
        if self.rank == 1:
            return [letter]
        return [f"{letter}{i + 1}" for i in range(self.rank)]

    def k_names(self):
        return self.names("K")

    @staticmethod
    def sl(n: int) -> "CartanDatum":
        r = n - 1
        return CartanDatum(tuple(tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r))
                                 for i in range(r)), f"sl{n}")

    @staticmethod
    def from_json(obj) -> "CartanDatum":
        try:
            M = obj["matrix"] if isinstance(obj, dict) else obj
            return CartanDatum(tuple(tuple(r) for r in M), obj.get("name", "") if isinstance(obj, dict) else "")
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed Cartan datum: {exc}") from exc

    def to_json(self):
        return {"name": self.name, "matrix": [list(r) for r in self.matrix]}


def load_datum(path) -> CartanDatum:
    try:
        with open(path) as fh:
            return CartanDatum.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


SL2 = CartanDatum.sl(2)
SL3 = CartanDatum.sl(3)
B2 = CartanDatum(((2, -2), (-2, 4)), "b2")
