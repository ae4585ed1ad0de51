"""Defining sets, ambient trace codes over GF(p), and weight distributions.

A trace code is the linear code whose codeword for each index element a is
(Tr(a*d1), ..., Tr(a*dn)) with the d's running over a defining set in
canonical field order. The weight census here is an exhaustive count over
the materialized distinct codewords; it shares no logic with the closed-form
predictors it is checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .charsums import quadratic_trace_sign
from .errors import DegenerateSet, FieldMismatch, OddDegree, UnsupportedDegree, ZeroCode
from .gfpm import Field, FieldElement


@dataclass(frozen=True)
class WeightDistribution:
    """Sorted (weight, frequency) pairs with positive frequencies."""

    pairs: tuple

    @classmethod
    def from_counts(cls, counts: dict) -> "WeightDistribution":
        return cls(tuple(sorted((int(w), int(c)) for w, c in counts.items() if c)))

    def as_dict(self) -> dict:
        return dict(self.pairs)

    def total(self) -> int:
        return sum(c for _, c in self.pairs)

    def __iter__(self):
        return iter(self.pairs)


class DefiningSet:
    """Ordered set of nonzero field elements indexing the code coordinates."""

    def __init__(self, field: Field, kind: str, alpha, indices: np.ndarray):
        self.field = field
        self.kind = kind  # "D-alpha" or "E"
        self.alpha = alpha
        indices = np.asarray(indices, dtype=np.int64)
        indices.setflags(write=False)
        self.indices = indices
        self.elements = tuple(field.element_at(int(i)) for i in indices)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        tag = f"D({self.alpha})" if self.kind == "D-alpha" else "E"
        return f"DefiningSet({tag} over {self.field!r}, n={len(self)})"


def build_defining_set_D(field: Field, alpha: int) -> DefiningSet:
    """All nonzero d with Tr(d) = alpha, in canonical order."""
    alpha = int(alpha) % field.p
    if field.m < 2:
        if alpha == 0:
            raise DegenerateSet("the prime field has no nonzero element of trace zero")
        raise UnsupportedDegree("defining sets require extension degree at least 2")
    mask = field.trace_table == alpha
    mask[0] = False
    indices = np.flatnonzero(mask)
    if indices.size == 0:
        raise DegenerateSet(f"D({alpha}) is empty over {field!r}")
    return DefiningSet(field, "D-alpha", alpha, indices)


def build_defining_set_E(field: Field) -> DefiningSet:
    """All nonzero d with Tr(d**2) = 0; defined for even extension degree."""
    if field.m % 2:
        raise OddDegree("this defining set requires an even extension degree")
    trace_of_square = field.trace_table[field.square_index_table]
    mask = trace_of_square == 0
    mask[0] = False
    indices = np.flatnonzero(mask)
    if indices.size == 0:
        raise DegenerateSet(f"E is empty over {field!r}")
    return DefiningSet(field, "E", None, indices)


class TraceCode:
    """All q indexed codewords plus the deduplicated distinct view.

    `matrix[i]` is the codeword of the element with canonical index i.
    """

    def __init__(self, defining_set, matrix, distinct_words, dimension):
        self.defining_set = defining_set
        self.field = defining_set.field
        self.matrix = matrix
        self.distinct_words = distinct_words
        self.dimension = dimension

    @property
    def length(self) -> int:
        return self.matrix.shape[1]

    @property
    def distinct_count(self) -> int:
        return self.distinct_words.shape[0]

    def codeword(self, a: FieldElement) -> np.ndarray:
        if a.field != self.field:
            raise FieldMismatch("index element belongs to a different field")
        return self.matrix[a.index].copy()

    def __repr__(self):
        return (
            f"TraceCode([{self.length}, {self.dimension}] over GF({self.field.p}), "
            f"defining set {self.defining_set.kind})"
        )


def _distinct_first_occurrence(matrix: np.ndarray) -> np.ndarray:
    seen = {}
    for i in range(matrix.shape[0]):
        key = matrix[i].tobytes()
        if key not in seen:
            seen[key] = i
    return np.fromiter(seen.values(), dtype=np.int64, count=len(seen))


def build_trace_code(ds: DefiningSet) -> TraceCode:
    """Materialize every indexed codeword of the trace construction."""
    field = ds.field
    p, m, q = field.p, field.m, field.q
    n = len(ds)
    # Tr(a*d) is linear in the coefficients of a, so the whole codeword matrix
    # is (digits @ T) mod p with T[i, j] = Tr(x^i * d_j)
    gen = np.empty((m, n), dtype=np.float32)
    for i in range(m):
        b = field.basis_element(i)
        gen[i] = [(b * d).trace() for d in ds.elements]
    matrix = np.empty((q, n), dtype=np.int8)
    digits = field.digits.astype(np.float32)
    block = max(1, (1 << 24) // max(n, 1))
    for lo in range(0, q, block):
        chunk = digits[lo : lo + block] @ gen  # entries stay far below 2**24, exact
        chunk %= p
        matrix[lo : lo + block] = chunk.astype(np.int8)
    first = _distinct_first_occurrence(matrix)
    distinct = matrix[first]
    count = distinct.shape[0]
    dimension = round(math.log(count, p))
    assert p**dimension == count, "distinct codeword count is not a power of p"
    return TraceCode(ds, matrix, distinct, dimension)


def weight_distribution(code: TraceCode) -> WeightDistribution:
    """Exhaustive weight census over the distinct codewords."""
    weights = np.count_nonzero(code.distinct_words, axis=1)
    freq = np.bincount(weights, minlength=code.length + 1)
    return WeightDistribution.from_counts({w: int(c) for w, c in enumerate(freq) if c})


def minimum_distance(code: TraceCode) -> int:
    """Minimum nonzero Hamming weight over the distinct codewords."""
    weights = np.count_nonzero(code.distinct_words, axis=1)
    nonzero = weights[weights > 0]
    if nonzero.size == 0:
        raise ZeroCode("the code has no nonzero codeword")
    return int(nonzero.min())


def predicted_weight_distribution_thm31(p: int, m: int, alpha: int) -> WeightDistribution:
    """Closed-form weight table of the code defined by D(alpha)."""
    if m < 2:
        raise UnsupportedDegree("the closed form requires extension degree at least 2")
    alpha = int(alpha) % p
    counts = {0: 1}
    if alpha == 0:
        counts[p ** (m - 2) * (p - 1)] = p ** (m - 1) - 1
    else:
        counts[p ** (m - 1)] = p - 1
        counts[p ** (m - 2) * (p - 1)] = p**m - p
    return WeightDistribution.from_counts(counts)


def predicted_weight_distribution_lem41(p: int, m: int) -> WeightDistribution:
    """Closed-form two-weight table of the code defined by E (even m)."""
    if m < 2:
        raise UnsupportedDegree("the closed form requires extension degree at least 2")
    tau = quadratic_trace_sign(p, m)
    half = p ** (m // 2 - 1)
    n = p ** (m - 1) - tau * (p - 1) * half - 1
    if n <= 0:
        raise DegenerateSet(f"the E construction degenerates for p={p}, m={m}")
    counts = {0: 1}
    counts[(p - 1) * p ** (m - 2)] = n
    w2 = (p - 1) * (p ** (m - 2) - tau * half)
    counts[w2] = counts.get(w2, 0) + (p - 1) * (p ** (m - 1) + tau * half)
    return WeightDistribution.from_counts(counts)


# -- serialization -------------------------------------------------------------


def codewords_as_strings(words: np.ndarray) -> list:
    """Codewords as base-p digit strings, one string per word."""
    return ["".join(str(int(s)) for s in row) for row in words]


def trace_code_json(code: TraceCode, emit_codewords: bool = False) -> dict:
    field = code.field
    doc = {
        "p": field.p,
        "m": field.m,
        "modulus": list(field.modulus),
        "kind": code.defining_set.kind,
    }
    if code.defining_set.kind == "D-alpha":
        doc["alpha"] = code.defining_set.alpha
    doc["length"] = code.length
    doc["dimension"] = code.dimension
    doc["weight_distribution"] = [list(pair) for pair in weight_distribution(code)]
    if emit_codewords:
        doc["codewords"] = codewords_as_strings(code.distinct_words)
    return doc


def weight_table_csv(wd: WeightDistribution) -> str:
    lines = ["weight,frequency"]
    lines += [f"{w},{c}" for w, c in wd]
    return "\n".join(lines) + "\n"
