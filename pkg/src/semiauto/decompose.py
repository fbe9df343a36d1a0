"""Decomposing quasi-ideal automata, and composing them from factors.

``decompose`` splits a quasi-ideal automaton A into the quotient by the
kernel congruence of its minimal ideal (a permutation automaton) and the
quotient by the idempotent-image congruence (a synchronizing automaton),
and builds an explicit isomorphism from A onto their direct product.

Every intermediate claim the decomposition relies on is checked at run
time.  A failed check raises :class:`InternalInconsistency`; that is a bug,
never a property of the input.  A negative verdict is reported in
``DecompositionReport.failure_stage`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .congruence import Partition, is_congruence, pi_congruence, quotient, rho_congruence
from .core import Automaton, AutomatonError, transformation_of_word
from .product import StateMap, direct_product, factor_pair_check, factor_pair_iso, find_isomorphism
from .structure import (
    QuasiIdealReport,
    is_permutation,
    is_strongly_connected,
    is_synchronizing,
    quasi_ideal_report,
)


class InternalInconsistency(AssertionError):
    pass


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise InternalInconsistency(what)


@dataclass(frozen=True)
class DecompositionReport:
    automaton: Automaton
    quasi_ideal: QuasiIdealReport
    pi: Partition | None = None
    rho: Partition | None = None
    quotient_pi: Automaton | None = None
    quotient_rho: Automaton | None = None
    quotient_pi_permutation: bool | None = None
    quotient_pi_strongly_connected: bool | None = None
    quotient_rho_synchronizing: bool | None = None
    quotient_rho_strongly_connected: bool | None = None
    product: Automaton | None = None
    iso: StateMap | None = None

    @property
    def ok(self) -> bool:
        return self.iso is not None

    @property
    def failure_stage(self) -> str | None:
        return self.quasi_ideal.failure_stage


def decompose(aut: Automaton) -> DecompositionReport:
    report = quasi_ideal_report(aut)
    if not report.verdict:
        return DecompositionReport(aut, report)

    sg, ideal = report.semigroup, report.ideal
    pi = pi_congruence(aut, sg, ideal)
    rho = rho_congruence(aut, ideal, sg)
    _require(is_congruence(aut, pi), "kernel relation of the minimal ideal is not a congruence")
    _require(is_congruence(aut, rho), "idempotent-image relation is not a congruence")

    qp = quotient(aut, pi)
    qr = quotient(aut, rho)
    qp_perm, qp_sc = is_permutation(qp), is_strongly_connected(qp)
    qr_sync, qr_sc = is_synchronizing(qr), is_strongly_connected(qr)
    _require(qp_perm and qp_sc, "pi-quotient is not a strongly connected permutation automaton")
    _require(qr_sync and qr_sc, "rho-quotient is not a strongly connected synchronizing automaton")
    for e in ideal.idempotents:
        witness = sg.elements[e].witness
        _require(
            transformation_of_word(qr, witness).rank == 1,
            f"idempotent {sg.elements[e].label} is not a reset word of the rho-quotient",
        )

    evidence = factor_pair_check(aut, pi, rho)
    _require(evidence.meet_trivial, f"pi ∩ rho is not trivial: {evidence.meet_counterexample}")
    _require(evidence.composition_full, f"pi ∘ rho is not full: {evidence.composition_counterexample}")
    try:
        fp = factor_pair_iso(aut, pi, rho)
    except (AutomatonError, AssertionError) as exc:
        raise InternalInconsistency(str(exc)) from exc
    _require(qp.n_states * qr.n_states == aut.n_states, "factor sizes do not multiply to the state count")

    return DecompositionReport(
        aut,
        report,
        pi,
        rho,
        qp,
        qr,
        qp_perm,
        qp_sc,
        qr_sync,
        qr_sc,
        fp.product,
        fp.iso,
    )


def verify_product(perm: Automaton, sync: Automaton) -> QuasiIdealReport:
    """Quasi-ideal report of ``perm × sync`` after checking the factor hypotheses."""
    if perm.alphabet != sync.alphabet:
        raise AutomatonError("factors do not share the same alphabet")
    if not is_permutation(perm):
        raise AutomatonError("first factor is not a permutation automaton")
    if not is_strongly_connected(perm):
        raise AutomatonError("first factor is not strongly connected")
    if not is_synchronizing(sync):
        raise AutomatonError("second factor is not synchronizing")
    if not is_strongly_connected(sync):
        raise AutomatonError("second factor is not strongly connected")
    report = quasi_ideal_report(direct_product(perm, sync))
    _require(report.verdict, "product of a permutation and a synchronizing factor is not quasi-ideal")
    return report


def roundtrip(aut: Automaton) -> bool:
    """Decompose, recompose from the quotients, and match the result against ``aut``.

    False when ``aut`` is not quasi-ideal (see ``decompose(aut).failure_stage``).
    """
    rep = decompose(aut)
    if not rep.ok:
        return False
    verify_product(rep.quotient_pi, rep.quotient_rho)
    rebuilt = direct_product(rep.quotient_pi, rep.quotient_rho)
    return find_isomorphism(aut, rebuilt) is not None
