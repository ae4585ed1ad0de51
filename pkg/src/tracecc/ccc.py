"""Constant composition subcodes of the ambient trace codes.

Extraction keeps two independent routes to the minimum distance: the
O(M^2 * n) pairwise census (the oracle) and the ambient minimum weight (the
shortcut justified by the difference argument). Both are stored so reports
can compare them. The pairwise oracle is skipped above PAIRWISE_ORACLE_CAP
words, where only the shortcut value is available.

The bound evaluation is exact integer/rational arithmetic throughout;
optimality means M * denominator == n * d with no floating point involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .charsums import quadratic_trace_sign
from .codes import TraceCode, minimum_distance
from .errors import (
    CompositionLengthMismatch,
    CompositionViolation,
    DegenerateSet,
    DuplicateWords,
    UnsupportedDegree,
)

#: largest word count for which the O(M^2 n) pairwise distance oracle runs
PAIRWISE_ORACLE_CAP = 5000


def composition_vector(word, p: int) -> tuple:
    """Occurrence count of each symbol 0 .. p-1 in one word."""
    counts = np.bincount(np.asarray(word, dtype=np.int64), minlength=p)
    if counts.size > p:
        raise ValueError("word contains a symbol outside the alphabet")
    return tuple(int(c) for c in counts)


def pairwise_min_distance(words) -> int:
    """Exact minimum Hamming distance over all unordered pairs of words.

    Runs the full O(M^2 * n) census via one match-count matrix per symbol;
    float32 accumulation is exact because counts never exceed 2**24.
    """
    w = np.ascontiguousarray(np.asarray(words, dtype=np.int8))
    if w.ndim != 2 or w.shape[0] < 2:
        raise ValueError("need a 2-d array of at least two words")
    m_words, n = w.shape
    matches = np.zeros((m_words, m_words), dtype=np.float32)
    for symbol in np.unique(w):
        hits = (w == symbol).astype(np.float32)
        matches += hits @ hits.T
    np.fill_diagonal(matches, -1.0)
    best = int(matches.max())
    if best >= n:
        raise DuplicateWords("two identical words found (distance 0)")
    return n - best


class CccParams(NamedTuple):
    n: int
    M: int
    d: int
    omega: tuple


class CccCode:
    """Extracted subcode with its composition vector and both distance routes."""

    def __init__(
        self,
        source: TraceCode,
        construction: str,
        index_set_kind: str,
        words: np.ndarray,
        composition: tuple,
        index_count: int,
        d_pairwise: Optional[int],
        d_ambient: int,
        alpha=None,
        tau=None,
    ):
        self.source = source
        self.construction = construction  # "first" | "second-S" | "second-complement"
        self.index_set_kind = index_set_kind
        self.words = words
        self.composition = composition
        self.index_count = index_count
        self.d_pairwise = d_pairwise
        self.d_ambient = d_ambient
        self.alpha = alpha
        self.tau = tau

    @property
    def n(self) -> int:
        return self.words.shape[1]

    @property
    def M(self) -> int:
        return self.words.shape[0]

    @property
    def d(self) -> int:
        return self.d_pairwise if self.d_pairwise is not None else self.d_ambient

    @property
    def params(self) -> CccParams:
        return CccParams(self.n, self.M, self.d, self.composition)

    def lfvc(self) -> "LfvcReport":
        return lfvc_evaluate(self.n, self.M, self.d, self.composition)

    def __repr__(self):
        return (
            f"CccCode({self.construction}, n={self.n}, M={self.M}, d={self.d}, "
            f"omega={self.composition})"
        )


def _dedupe_rows(rows: np.ndarray) -> np.ndarray:
    seen = {}
    for i in range(rows.shape[0]):
        key = rows[i].tobytes()
        if key not in seen:
            seen[key] = i
    keep = np.fromiter(seen.values(), dtype=np.int64, count=len(seen))
    return rows[keep]


def _constant_composition(words: np.ndarray, p: int) -> tuple:
    counts = np.stack([(words == s).sum(axis=1) for s in range(p)], axis=1)
    if not (counts == counts[0]).all():
        bad = int(np.flatnonzero((counts != counts[0]).any(axis=1))[0])
        raise CompositionViolation(
            f"word {bad} has composition {tuple(counts[bad])}, expected {tuple(counts[0])}"
        )
    return tuple(int(c) for c in counts[0])


def _extract(code, keep_mask, construction, index_set_kind, pairwise_cap, alpha=None, tau=None):
    rows = code.matrix[np.flatnonzero(keep_mask)]
    words = _dedupe_rows(rows)
    composition = _constant_composition(words, code.field.p)
    d_ambient = minimum_distance(code)
    d_pairwise = pairwise_min_distance(words) if words.shape[0] <= pairwise_cap else None
    return CccCode(
        code,
        construction,
        index_set_kind,
        words,
        composition,
        index_count=int(rows.shape[0]),
        d_pairwise=d_pairwise,
        d_ambient=d_ambient,
        alpha=alpha,
        tau=tau,
    )


def extract_subcode_first(code: TraceCode, pairwise_cap: int = PAIRWISE_ORACLE_CAP) -> CccCode:
    """Subcode indexed by every a outside the prime subfield; deduplicated."""
    if code.defining_set.kind != "D-alpha":
        raise ValueError("first-construction subcodes come from a D(alpha) code")
    field = code.field
    keep = np.ones(field.q, dtype=bool)
    keep[list(field.prime_subfield_indices())] = False
    return _extract(
        code,
        keep,
        construction="first",
        index_set_kind="complement-of-Fp",
        pairwise_cap=pairwise_cap,
        alpha=code.defining_set.alpha,
    )


def extract_subcode_second(
    code: TraceCode, which: str, pairwise_cap: int = PAIRWISE_ORACLE_CAP
) -> CccCode:
    """Subcode of a C_E code indexed by S = {a : Tr(a**2) != 0} or its complement."""
    if code.defining_set.kind != "E":
        raise ValueError("second-construction subcodes come from the E code")
    field = code.field
    trace_of_square = field.trace_table[field.square_index_table]
    if which == "S":
        keep = trace_of_square != 0  # zero element drops out automatically
        kind = "S"
        construction = "second-S"
    elif which == "complement":
        keep = trace_of_square == 0
        keep[0] = False
        kind = "complement-of-S"
        construction = "second-complement"
    else:
        raise ValueError("which must be 'S' or 'complement'")
    return _extract(
        code,
        keep,
        construction=construction,
        index_set_kind=kind,
        pairwise_cap=pairwise_cap,
        tau=quadratic_trace_sign(field.p, field.m),
    )


# -- closed-form parameter predictions ---------------------------------------


def predicted_ccc_first(p: int, m: int, alpha: int) -> CccParams:
    """Predicted (n, M, d, omega) of the first-construction subcode."""
    if m < 2:
        raise UnsupportedDegree("the closed form requires extension degree at least 2")
    alpha = int(alpha) % p
    base = p ** (m - 2)
    d = base * (p - 1)
    if alpha == 0:
        n = p ** (m - 1) - 1
        return CccParams(n, n, d, (base - 1,) + (base,) * (p - 1))
    return CccParams(p ** (m - 1), p**m - p, d, (base,) * p)


def predicted_ccc_second(p: int, m: int, which: str) -> CccParams:
    """Predicted (n, M, d, omega) of the S or complement subcode (even m)."""
    tau = quadratic_trace_sign(p, m)
    base = p ** (m - 2)
    half = p ** (m // 2 - 1)
    n = p ** (m - 1) - tau * (p - 1) * half - 1
    if n <= 0:
        raise DegenerateSet(f"the E construction degenerates for p={p}, m={m}")
    d = (p - 1) * base if tau == -1 else (p - 1) * (base - half)
    if which == "S":
        M = p**m - p ** (m - 1) + tau * (p - 1) * half
        omega = (base - 1,) + (base - tau * half,) * (p - 1)
    elif which == "complement":
        M = n
        omega = (base - tau * (p - 1) * half - 1,) + (base,) * (p - 1)
    else:
        raise ValueError("which must be 'S' or 'complement'")
    return CccParams(n, M, d, omega)


# -- the size bound -----------------------------------------------------------


@dataclass(frozen=True)
class LfvcReport:
    n: int
    M: int
    d: int
    omega: tuple
    denominator: int
    bound: Optional[Fraction]
    verdict: str  # "optimal" | "not-optimal" | "bound-inapplicable"

    def to_json_dict(self) -> dict:
        doc = {"denominator": self.denominator}
        if self.bound is not None:
            doc["bound"] = str(self.bound)
        doc["verdict"] = self.verdict
        return doc


def lfvc_evaluate(n: int, M: int, d: int, omega) -> LfvcReport:
    """Evaluate the size bound M <= n*d / (n*d - n**2 + sum of omega**2) exactly.

    The bound only applies when the denominator is positive; meeting it with
    equality makes the code optimal. All arithmetic is exact.
    """
    n, M, d = int(n), int(M), int(d)
    omega = tuple(int(w) for w in omega)
    if n <= 0 or M <= 0 or d <= 0:
        raise ValueError("n, M and d must be positive")
    if any(w < 0 for w in omega):
        raise ValueError("composition counts must be non-negative")
    if sum(omega) != n:
        raise CompositionLengthMismatch(
            f"composition sums to {sum(omega)} but the length is {n}"
        )
    denominator = n * d - n * n + sum(w * w for w in omega)
    if denominator <= 0:
        return LfvcReport(n, M, d, omega, denominator, None, "bound-inapplicable")
    bound = Fraction(n * d, denominator)
    verdict = "optimal" if M * denominator == n * d else "not-optimal"
    return LfvcReport(n, M, d, omega, denominator, bound, verdict)


# -- serialization -------------------------------------------------------------


def predicted_params_for(subcode: CccCode) -> CccParams:
    field = subcode.source.field
    if subcode.construction == "first":
        return predicted_ccc_first(field.p, field.m, subcode.alpha)
    which = "S" if subcode.construction == "second-S" else "complement"
    return predicted_ccc_second(field.p, field.m, which)


def ccc_json(subcode: CccCode, emit_codewords: bool = False) -> dict:
    from .codes import codewords_as_strings

    field = subcode.source.field
    doc = {"construction": subcode.construction, "p": field.p, "m": field.m}
    if subcode.alpha is not None:
        doc["alpha"] = subcode.alpha
    if subcode.tau is not None:
        doc["tau"] = subcode.tau
    doc["n"] = subcode.n
    doc["M"] = subcode.M
    doc["d"] = subcode.d
    doc["d_pairwise"] = subcode.d_pairwise
    doc["d_ambient"] = subcode.d_ambient
    doc["omega"] = list(subcode.composition)
    doc["lfvc"] = subcode.lfvc().to_json_dict()
    predicted = predicted_params_for(subcode)
    doc["checks"] = {
        "composition_ok": True,  # extraction would have raised otherwise
        "distance_matches_ambient": (
            None if subcode.d_pairwise is None else subcode.d_pairwise == subcode.d_ambient
        ),
        "prediction_matches": subcode.params == predicted,
    }
    if emit_codewords:
        doc["codewords"] = codewords_as_strings(subcode.words)
    return doc
