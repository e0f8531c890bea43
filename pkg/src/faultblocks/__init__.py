"""Block-level spectrum fault localization with a ternary hit-function kernel."""

from .kernel import SimilarityScore, baseline_scores, eta, phi, sflm
from .localizer import BlockScore, SuspiciousnessReport, evaluate_rank, localize
from .spectrum import (
    BinaryVector,
    BlockFeatureVector,
    HitValue,
    SpectrumFormatError,
    SpectrumMatrix,
    column,
    dumps_csv,
    feature_vector,
    hit_function,
    loads_csv,
    read_csv,
    write_csv,
)

__all__ = [
    "BinaryVector", "BlockFeatureVector", "BlockScore", "HitValue", "SimilarityScore",
    "SpectrumFormatError", "SpectrumMatrix", "SuspiciousnessReport", "baseline_scores",
    "column", "dumps_csv", "eta", "evaluate_rank", "feature_vector", "hit_function",
    "loads_csv", "localize", "phi", "read_csv", "sflm", "write_csv",
]
