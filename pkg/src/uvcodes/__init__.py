"""Trace codes over GF(p)[u,v]/(u^2, v^2, uv-vu): construction, exact Lee
weight distributions via exhaustive enumeration, Gray images, and the
character-sum / Gauss-sum closed forms they are checked against."""

__version__ = "0.1.0"

from .gf import FieldElement, FieldParams, field_new
from .ring import BaseRingElement, RingElement, enumerate_L, enumerate_M, ring_element
from .code import TraceCode, WeightDistribution
from .theory import SpectrumPrediction, predict_spectrum

__all__ = [
    "FieldElement",
    "FieldParams",
    "field_new",
    "BaseRingElement",
    "RingElement",
    "ring_element",
    "enumerate_L",
    "enumerate_M",
    "TraceCode",
    "WeightDistribution",
    "SpectrumPrediction",
    "predict_spectrum",
    "__version__",
]
