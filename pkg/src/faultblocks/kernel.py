"""Suspiciousness kernel over binary block vectors, plus the usual SBFL
coefficients for side-by-side comparison.

The kernel is evaluated position by position on hit-function values ``h``::

    eta(+1) = exp(-(1 - h)) = 1      phi(+1) = 1
    eta( 0) = -exp(-h)      = -1     phi( 0) = 1
    eta(-1) = 0                      phi(-1) = 0

    score = 0.5 * (1 + sum(eta) / sum(phi))

Positions where both vectors miss contribute nothing, so whenever any
position carries evidence the score reduces to ``n11 / (n11 + n_mismatch)``,
the Jaccard coefficient of the two vectors read as sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .spectrum import BinaryVector, HitValue, _check_lengths, feature_vector

#: Value reported when neither vector has a single hit.
NO_EVIDENCE_SCORE = 0.5

BASELINES = ("tarantula", "ochiai", "jaccard", "dstar")


@dataclass(frozen=True)
class SimilarityScore:
    value: float
    evidence_count: int

    @property
    def no_evidence(self) -> bool:
        return self.evidence_count == 0

    def __float__(self) -> float:
        return self.value


def eta(h: int) -> float:
    h = HitValue(h)
    if h is HitValue.BOTH_HIT:
        return math.exp(-(1 - h))
    if h is HitValue.BOTH_MISS:
        return 0.0
    return -math.exp(-h)


def phi(h: int) -> float:
    # The only 0/1 assignment that reproduces the sorting case study and
    # keeps the score defined and inside [0, 1] whenever anything is hit.
    return 0.0 if HitValue(h) is HitValue.BOTH_MISS else 1.0


def sflm(u: Sequence[int], v: Sequence[int]) -> SimilarityScore:
    """Kernel similarity of two equal-length bit vectors.

    Two all-zero vectors have no evidence; they get ``NO_EVIDENCE_SCORE``
    with ``evidence_count == 0`` instead of dividing by zero.
    """
    hv = feature_vector(u, v)
    num = sum(eta(h) for h in hv)
    den = sum(phi(h) for h in hv)
    if den == 0:
        return SimilarityScore(NO_EVIDENCE_SCORE, 0)
    return SimilarityScore(0.5 * (1.0 + num / den), int(den))


def _div(a: float, b: float) -> float:
    return a / b if b else 0.0


def baseline_scores(block: Sequence[int], decisions: Sequence[int]) -> dict[str, float]:
    """Tarantula, Ochiai, Jaccard and DStar (star=2) for one block.

    Any zero denominator yields 0.0, DStar's ``ep + nf == 0`` included.
    """
    block, decisions = BinaryVector(block), BinaryVector(decisions)
    _check_lengths(block, decisions)
    ef = ep = nf = np_ = 0
    for hit, failed in zip(block, decisions):
        if hit and failed:
            ef += 1
        elif hit:
            ep += 1
        elif failed:
            nf += 1
        else:
            np_ += 1

    fail_ratio = _div(ef, ef + nf)
    pass_ratio = _div(ep, ep + np_)
    return {
        "tarantula": _div(fail_ratio, fail_ratio + pass_ratio),
        "ochiai": _div(ef, math.sqrt((ef + nf) * (ef + ep))),
        "jaccard": _div(ef, ef + nf + ep),
        "dstar": _div(ef**2, ep + nf),
    }
