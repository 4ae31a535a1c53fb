"""Exact verification kernel for torsion generating sets of mapping class groups.

The package builds a combinatorial model of the rotationally symmetric closed
genus-g surface, computes the integral symplectic action of mapping classes
on first homology, tracks isotopy classes of curves through Dehn-twist words,
and replays bundled derivation scripts step by step, emitting machine
re-checkable generation certificates.
"""

from .words import MappingWord, WordError, word
from .surface import SurfaceModel, build_model, CurveId, GenusError
from .homology import (SpMatrix, HomologyData, homology_of, element_order,
                       lemma_order_transfer)
from .curves import CurveEngine, NormalCurve, engine_of
from .validate import validate_model
from .replay import (ProofScript, replay, export_certificate, repair_step,
                     ScriptError, LedgerViolation)

__all__ = [
    "MappingWord", "WordError", "word",
    "SurfaceModel", "build_model", "CurveId", "GenusError",
    "SpMatrix", "HomologyData", "homology_of", "element_order",
    "lemma_order_transfer",
    "CurveEngine", "NormalCurve", "engine_of",
    "validate_model",
    "ProofScript", "replay", "export_certificate", "repair_step",
    "ScriptError", "LedgerViolation",
]
