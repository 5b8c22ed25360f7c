"""
Realization pipelines for rational score sequences.

Orchestrates the blow-up, integer realization and shrink-down stages, and
the symmetrization path used as an independent oracle and as the fallback
when the blow-up is larger than the search cap.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from selfconverse.core.conditions import check_condition_I, scores_of
from selfconverse.core.config import get_settings
from selfconverse.core.converse import is_self_converse_witness
from selfconverse.core.observability.tracer import tracer
from selfconverse.core.schema import (
    BlowUpPlan,
    GeneralisedTournament,
    ScoreSequence,
    VertexBijection,
)
from selfconverse.core.utils.errors import ConditionViolation, InternalError, ResourceLimit
from selfconverse.realize.blowup import (
    blowup_involution,
    blowup_scores,
    cluster_targets_met,
    lcm_denominator,
    shrink_down,
)
from selfconverse.realize.landau import realize_labeled_scores
from selfconverse.realize.symmetric import symmetric_realize

logger = logging.getLogger(__name__)


class RealizationMethod(str, Enum):
    """How a rational sequence is realized."""

    AUTO = "auto"
    PIPELINE = "pipeline"
    SYMMETRIZE = "symmetrize"
    MOON = "moon"


@dataclass
class RealizationResult:
    """Result of a realization run."""

    tournament: GeneralisedTournament
    method: RealizationMethod
    witness: Optional[VertexBijection] = None
    plan: Optional[BlowUpPlan] = None
    notices: List[str] = field(default_factory=list)

    started_at: float = 0.0
    completed_at: float = 0.0

    @property
    def duration_seconds(self) -> float:
        return self.completed_at - self.started_at

    def to_dict(self) -> Dict[str, Any]:
        data = self.tournament.to_json_dict()
        data["method"] = self.method.value
        if self.witness is not None:
            data["witness"] = self.witness.to_json_dict()
        if self.plan is not None:
            data["plan"] = self.plan.to_json_dict()
        return data


def _require_conditions(d: ScoreSequence, need_II: bool) -> None:
    report = check_condition_I(d)
    if not report.condition_I:
        raise ConditionViolation(
            f"{d} fails Condition I at k={report.first_violation}",
            report=report,
            suggestion="Every prefix of the sorted scores must sum to at least C(k, 2), "
            "with equality for the whole sequence.",
        )
    if need_II and not report.condition_II:
        raise ConditionViolation(
            f"{d} fails Condition II, so no self-converse realization exists",
            report=report,
            suggestion="Use the moon method for a realization without the self-converse property.",
        )


def _verify_scores(G: GeneralisedTournament, d: ScoreSequence) -> None:
    labeled, _ = scores_of(G)
    if labeled != d.scores:
        raise InternalError(f"Realized scores {labeled} differ from {d}")


def realize_self_converse_rational(
    d: ScoreSequence, cap: Optional[int] = None
) -> Tuple[GeneralisedTournament, VertexBijection]:
    """
    A self-converse generalised tournament with labeled scores exactly d.

    Pipeline: lcm_denominator -> blowup_scores -> symmetric_realize with the
    blown-up involution -> shrink_down. The returned witness is
    rho(i) = n + 1 - i.

    Raises:
        ConditionViolation: d fails Condition I or II.
        ResourceLimit: the blow-up has more than ``cap`` vertices.
    """
    cap = get_settings().symmetric_search_cap if cap is None else cap
    _require_conditions(d, need_II=True)

    m = lcm_denominator(d)
    if m * d.n > cap:
        raise ResourceLimit(
            f"Blow-up of {d} needs {m * d.n} vertices (m={m}), above the cap of {cap}",
            m * d.n,
            cap,
        )

    with tracer.start_span("blowup") as span:
        plan = blowup_scores(d, m)
        span.set_attribute("m", m)
    with tracer.start_span("symmetric_realize") as span:
        H = symmetric_realize(plan.flat_targets(), blowup_involution(plan), cap=cap)
        span.set_attribute("vertices", H.n)
    if not cluster_targets_met(H, plan):
        raise InternalError("Blown-up tournament misses its cluster targets", plan)
    with tracer.start_span("shrink_down"):
        G = shrink_down(H, plan)

    rho = VertexBijection.reversal(d.n)
    with tracer.start_span("verify"):
        _verify_scores(G, d)
        if not is_self_converse_witness(G, rho):
            raise InternalError(f"Shrink-down of {d} is not self-converse under reversal")
    return G, rho


def moon_realize(d: ScoreSequence) -> GeneralisedTournament:
    """
    A generalised tournament with labeled scores exactly d (Condition II not required).

    Pipeline: blow-up -> Landau realization of the labeled targets -> shrink_down.
    """
    _require_conditions(d, need_II=False)
    m = lcm_denominator(d)
    with tracer.start_span("blowup") as span:
        plan = blowup_scores(d, m)
        span.set_attribute("m", m)
    with tracer.start_span("landau") as span:
        H = realize_labeled_scores(plan.flat_targets())
        span.set_attribute("vertices", H.n)
    with tracer.start_span("shrink_down"):
        G = shrink_down(H, plan)
    _verify_scores(G, d)
    return G


def symmetrize(G: GeneralisedTournament) -> GeneralisedTournament:
    """
    Average G with the reversal-relabeled converse of itself.

    beta(i, j) = (alpha(i, j) + 1 - alpha(n+1-i, n+1-j)) / 2 off the diagonal.
    The result keeps the labeled scores and has the witness rho(i) = n + 1 - i.

    Raises:
        ConditionViolation: the labeled scores are unsorted or fail Condition II.
    """
    labeled = G.labeled_scores()
    n = G.n
    if any(a > b for a, b in zip(labeled, labeled[1:])):
        raise ConditionViolation("symmetrize needs non-decreasing labeled scores")
    if any(labeled[i] + labeled[n - 1 - i] != n - 1 for i in range(n)):
        raise ConditionViolation("symmetrize needs labeled scores satisfying Condition II")

    w = G.weights
    half = Fraction(1, 2)
    rows = [
        [
            Fraction(0) if i == j else (w[i][j] + 1 - w[n - 1 - i][n - 1 - j]) * half
            for j in range(n)
        ]
        for i in range(n)
    ]
    return GeneralisedTournament(weights=rows)


def realize(
    d: ScoreSequence,
    method: RealizationMethod = RealizationMethod.AUTO,
    cap: Optional[int] = None,
) -> RealizationResult:
    """
    Realize d with the requested method.

    ``auto`` runs the blow-up pipeline when the blow-up fits under the cap and
    otherwise falls back to symmetrize(moon_realize(d)), recording a notice.
    """
    cap = get_settings().symmetric_search_cap if cap is None else cap
    method = RealizationMethod(method)
    started_at = time.time()
    notices: List[str] = []
    plan: Optional[BlowUpPlan] = None
    witness: Optional[VertexBijection] = None

    if method is RealizationMethod.AUTO:
        _require_conditions(d, need_II=True)
        if lcm_denominator(d) * d.n <= cap:
            method = RealizationMethod.PIPELINE
        else:
            notices.append(
                f"Blow-up needs {lcm_denominator(d) * d.n} vertices, above the cap of {cap}; "
                "used symmetrize(moon_realize(d)) instead of the blow-up pipeline."
            )
            logger.info(notices[-1])
            method = RealizationMethod.SYMMETRIZE

    if method is RealizationMethod.PIPELINE:
        G, witness = realize_self_converse_rational(d, cap=cap)
        plan = blowup_scores(d, lcm_denominator(d))
    elif method is RealizationMethod.SYMMETRIZE:
        _require_conditions(d, need_II=True)
        with tracer.start_span("symmetrize"):
            G = symmetrize(moon_realize(d))
        witness = VertexBijection.reversal(d.n)
        if not is_self_converse_witness(G, witness):
            raise InternalError(f"Symmetrized realization of {d} failed the witness check")
    else:
        G = moon_realize(d)

    return RealizationResult(
        tournament=G,
        method=method,
        witness=witness,
        plan=plan,
        notices=notices,
        started_at=started_at,
        completed_at=time.time(),
    )
