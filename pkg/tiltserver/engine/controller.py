# tiltserver/engine/controller.py
import json
import logging
import re
from typing import List, Optional, Sequence, Union

from errors import AlgebraSpecError, AlgebraTooLarge, MismatchReport, NotInDomain
from settings import EngineSettings
from tiltserver.algebra_spec import AlgebraSpec
from tiltserver.engine.algebra import NakayamaAlgebra
from tiltserver.engine.geometry import (
    Arc,
    Triangulation,
    enumerate_restricted,
    enumerate_signed,
    enumerate_triangulations,
    tau_tilt_to_triangulation,
    triangulation_to_tau_tilt,
)
from tiltserver.engine.poset import HasseQuiver, StepTrace, hasse_direct, hasse_rejection
from tiltserver.engine.sequences import SeqA, in_Z_restricted, top_of_triangulation, x_of_sequence
from tiltserver.engine.tautilt import SttPair, enumerate_ps_tau_tilt, enumerate_stt, enumerate_tau_tilt, is_support_tau_tilting

MODELS = ("module", "arcs", "seq")
WHICH = {"stt": enumerate_stt, "tau": enumerate_tau_tilt, "proper": enumerate_ps_tau_tilt}
ARC_PATTERN = re.compile(r"<\s*(\*|\d+)\s*,\s*(\d+)\s*>")

Payload = Union[SttPair, Triangulation, SeqA]


class TiltController:
    """
    Shared entry point for the CLI and the MCP server.
    Holds the settings, enforces the vertex cap and caches the expensive verification runs.
    """

    def __init__(self, settings: EngineSettings):
        self.settings = settings
        self._table_reports = None
        self._counting = None

    @property
    def counting(self):
        """
        Get the counting module.
        Lazy-loads the verification harness on first access.
        """
        if self._counting is None:
            from tiltserver.engine import counting
            self._counting = counting
        return self._counting

    @property
    def table_reports(self):
        """
        Get the reports reproducing the four count tables.
        Lazy-loads the reports on first access.
        """
        if self._table_reports is None:
            self._table_reports = self.counting.verify_tables(raise_on_mismatch=False)
        return self._table_reports

    def algebra(self, spec: Union[str, AlgebraSpec]) -> NakayamaAlgebra:
        if isinstance(spec, str):
            spec = AlgebraSpec.parse(spec)
        alg = spec.build()
        self.check_size(alg)
        return alg

    def check_size(self, alg: NakayamaAlgebra) -> None:
        if len(alg) > self.settings.max_vertices:
            raise AlgebraTooLarge(
                f"{alg.describe()} has {len(alg)} vertices, more than NAKAYAMA_MAX_VERTICES={self.settings.max_vertices}"
            )

    def enumerate(self, alg: NakayamaAlgebra, which: str = "stt") -> List[SttPair]:
        if which not in WHICH:
            raise ValueError(f"which must be one of {', '.join(WHICH)}, got {which!r}")
        self.check_size(alg)
        return WHICH[which](alg)

    def hasse(self, alg: NakayamaAlgebra, method: str = "direct", order: Optional[Sequence[int]] = None,
              trace: Optional[StepTrace] = None) -> HasseQuiver:
        self.check_size(alg)
        if method == "direct":
            return hasse_direct(alg)
        if method == "rejection":
            return hasse_rejection(alg, order, trace)
        if method == "both":
            direct = hasse_direct(alg)
            rejected = hasse_rejection(alg, order, trace)
            if direct != rejected:
                logging.error(f"Hasse quivers of {alg.describe()} disagree between methods")
                raise MismatchReport([f"{alg.describe()}: direct and rejection Hasse quivers differ"])
            return direct
        raise ValueError(f"method must be direct, rejection or both, got {method!r}")

    def parse_payload(self, model: str, text: str, n: Optional[int] = None) -> Payload:
        """
        Read a payload of one of the three models.

        Args:
            model: module, arcs or seq
            text: JSON (SttPair object, list of Indec objects, list of arc objects, integer array)
                  or the text forms "<*,2> <8,2>" and "2,1,0"
            n: number of boundary points, needed for arcs

        Returns:
            SttPair, Triangulation or SeqA
        """
        text = text.strip()
        if model == "seq":
            if text.startswith("["):
                return SeqA(tuple(int(x) for x in self._load(text)))
            return SeqA.parse(text)
        if model == "module":
            data = self._load(text)
            if isinstance(data, dict):
                return SttPair.from_dict(data)
            return SttPair.from_dict({"summands": data})
        if model == "arcs":
            if n is None:
                raise ValueError("arcs need the number of boundary points")
            if text.startswith("["):
                arcs = [Arc.from_dict(item) for item in self._load(text)]
            else:
                arcs = [
                    Arc.proj(int(j)) if i == "*" else Arc.inner(int(i), int(j))
                    for i, j in ARC_PATTERN.findall(text)
                ]
            return Triangulation.of(n, arcs)
        raise ValueError(f"model must be one of {', '.join(MODELS)}, got {model!r}")

    def _load(self, text: str):
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise AlgebraSpecError(f"invalid payload: {e.msg}", e.lineno, e.colno)

    def translate(self, source: str, target: str, payload: Payload,
                  alg: Optional[NakayamaAlgebra] = None) -> Payload:
        """Carry a payload through the bijections module <-> arcs <-> seq"""
        for model in (source, target):
            if model not in MODELS:
                raise ValueError(f"model must be one of {', '.join(MODELS)}, got {model!r}")
        if "module" in (source, target) and alg is None:
            raise NotInDomain("translating modules needs an algebra")
        if alg is not None and isinstance(payload, (SeqA, Triangulation)) and payload.n != len(alg):
            raise NotInDomain(f"{source} payload has {payload.n} entries but {alg.describe()} has {len(alg)} vertices")
        if source == "seq" and alg is not None and not in_Z_restricted(payload, alg.loewy_series):
            raise NotInDomain(f"{payload} violates the length bounds of {alg.describe()}")

        steps = {
            ("module", "arcs"): lambda p: tau_tilt_to_triangulation(self._checked_pair(p, alg), alg),
            ("arcs", "module"): lambda p: triangulation_to_tau_tilt(p, alg),
            ("arcs", "seq"): top_of_triangulation,
            ("seq", "arcs"): x_of_sequence,
        }
        path = {
            "module": {"arcs": ["arcs"], "seq": ["arcs", "seq"], "module": []},
            "arcs": {"module": ["module"], "seq": ["seq"], "arcs": []},
            "seq": {"arcs": ["arcs"], "module": ["arcs", "module"], "seq": []},
        }[source][target]
        current, model = payload, source
        for following in path:
            current = steps[(model, following)](current)
            model = following
        logging.info(f"Translated {source} to {target}")
        return current

    def _checked_pair(self, pair: SttPair, alg: NakayamaAlgebra) -> SttPair:
        checked = is_support_tau_tilting(alg, pair.module)
        if checked is None or not checked.is_tau_tilting:
            raise NotInDomain("the module is not tau-tilting")
        return checked

    def triangulations(self, n: int, bounds: Optional[Sequence[int]] = None, signed: bool = False) -> list:
        if n > self.settings.max_vertices:
            raise AlgebraTooLarge(f"{n} boundary points exceed NAKAYAMA_MAX_VERTICES={self.settings.max_vertices}")
        if signed:
            return enumerate_signed(n, bounds)
        return enumerate_triangulations(n) if bounds is None else enumerate_restricted(n, bounds)

    def count(self, alg: NakayamaAlgebra):
        self.check_size(alg)
        return self.counting.count_pairs(alg)

    def verify_tables(self):
        mismatches = [report for report in self.table_reports if not report.agrees]
        if mismatches:
            raise MismatchReport(mismatches)
        return self.table_reports

    def verify_bijections(self, n_max: int):
        return self._raise_on_failure(self.counting.verify_bijections(n_max))

    def verify_rejection(self, n_max: int, r_max: int):
        return self._raise_on_failure(self.counting.verify_rejection(n_max, r_max))

    def _raise_on_failure(self, result):
        if not result.ok:
            raise MismatchReport(result.failures)
        return result
