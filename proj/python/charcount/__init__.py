"""Point counts of multiplicative and additive character varieties.

Polynomials are returned as :class:`Polynomial`, a thin coefficient list
(lowest degree first) with integer or Fraction entries.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _charcount
from ._charcount import CharcountError

__all__ = [
    "CharcountError",
    "Count",
    "Polynomial",
    "check",
    "count",
    "euler",
    "figures",
    "g_types",
    "lie_types",
    "reproduce",
]


def _number(s: str):
    v = Fraction(s)
    return v.numerator if v.denominator == 1 else v


@dataclass(frozen=True)
class Polynomial:
    coefficients: tuple

    @classmethod
    def _from(cls, raw: Sequence[str]) -> "Polynomial":
        return cls(tuple(_number(c) for c in raw))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * q + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            coef = str(c) if (c != 1 and c != -1) or not mono else ("-" if c == -1 else "")
            terms.append(f"{coef}{mono}")
        if not terms:
            return "0"
        return "+".join(terms).replace("+-", "-")


@dataclass(frozen=True)
class Count:
    group: str
    g: int
    n: int
    variant: str
    polynomial: Polynomial
    dimension: int
    validity_modulus: int
    palindromic: bool
    monic: bool
    nonnegative: bool
    factored: str = field(repr=False)


def count(group: str, g: int, n: int, variant: str = "mult", *, threads: int = 1,
          data_dirs: Sequence[str] = ()) -> Count:
    r = _charcount.count(group, g, n, variant, threads, list(data_dirs))
    return Count(group, g, n, variant, Polynomial._from(r["coefficients"]), r["dimension"],
                 r["validity_modulus"], r["palindromic"], r["monic"], r["nonnegative"], r["factored"])


def euler(group: str, g: int, n: int, variant: str = "mult", *, data_dirs: Sequence[str] = ()) -> int:
    return int(_charcount.euler(group, g, n, variant, list(data_dirs)))


def _convert_types(rows, poly_keys, int_keys):
    out = []
    for row in rows:
        row = dict(row)
        for k in poly_keys:
            row[k] = Polynomial._from(row[k])
        for k in int_keys:
            row[k] = int(row[k])
        out.append(row)
    return out


def g_types(group: str, *, data_dirs: Sequence[str] = ()) -> list[dict]:
    return _convert_types(_charcount.g_types(group, list(data_dirs)),
                          ("generic_degree", "mass", "levi_order"), ("weyl_order",))


def lie_types(group: str, *, data_dirs: Sequence[str] = ()) -> list[dict]:
    return _convert_types(_charcount.lie_types(group, list(data_dirs)),
                          ("orbit_size", "green", "levi_order"), ("weyl_order",))


def check(group: str, gmax: int = 2, nmax: int = 4, *, data_dirs: Sequence[str] = ()) -> dict:
    return json.loads(_charcount.check(group, gmax, nmax, list(data_dirs)))


def reproduce(figure: int) -> dict:
    return json.loads(_charcount.reproduce(figure))


def figures() -> list[int]:
    return list(_charcount.figures())
