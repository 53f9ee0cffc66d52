from tiltserver.engine.algebra import NakayamaAlgebra, make_cyclic, make_gamma, make_linear, zero_algebra
from tiltserver.engine.modcat import Indec
from tiltserver.engine.tautilt import SttPair, enumerate_stt

__all__ = [
    "NakayamaAlgebra",
    "make_cyclic",
    "make_gamma",
    "make_linear",
    "zero_algebra",
    "Indec",
    "SttPair",
    "enumerate_stt",
]
