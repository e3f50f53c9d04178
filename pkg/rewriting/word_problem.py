"""
Termination certification and the normal-form procedure for the word problem.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from presentations.cells import Polygraph, Word
from presentations.exceptions import PolygraphError
from .exceptions import NotCertified
from .interpretations import CertificateReport, InterpretationCert, check_interpretation_certificate
from .normalize import normal_form
from .orders import TerminationReport, check_deglex_termination

logger = logging.getLogger(__name__)


@dataclass
class TerminationVerdict:
    certified: bool
    method: str
    report: TerminationReport | CertificateReport
    witness: str = ''


def certify_termination(p: Polygraph, order: Sequence[str] | None = None,
                        certificate: InterpretationCert | None = None,
                        accept_sampled: bool = False,
                        pump_bound: int | None = None) -> TerminationVerdict:
    """
    Deglex (with ``order``, the declared order or declaration order) unless a
    certificate is given. Sampled evidence only certifies with ``accept_sampled``.
    """
    if certificate is not None:
        report = check_interpretation_certificate(p, certificate, pump_bound=pump_bound)
        witness = '; '.join(str(f) for f in report.failures)
        if report.missing:
            witness = f'no interpretation for {", ".join(report.missing)}'
        elif report.passed and not accept_sampled:
            witness = 'sampled certificate not acknowledged'
        return TerminationVerdict(report.passed and accept_sampled, 'certificate', report, witness)

    report = check_deglex_termination(p, order, pump_bound)
    certified = report.terminating and (accept_sampled or not report.sampled)
    witness = ''
    if report.failures:
        witness = f'rule {report.failures[0].rule} is not decreasing'
    elif not certified:
        witness = 'pumped instances only sampled'
    return TerminationVerdict(certified, 'deglex', report, witness)


def word_eq(p: Polygraph, u: Word, v: Word, *, fuel: int | None = None,
            pump_bound: int | None = None, order: Sequence[str] | None = None,
            certificate: InterpretationCert | None = None, accept_sampled: bool = False,
            assume_convergent: bool = False) -> bool:
    """
    True iff u and v have the same normal form. Convergence is certified first
    unless the caller already did so (``assume_convergent``).
    """
    if u.source != v.source or u.target != v.target:
        raise PolygraphError(f'words "{u}" and "{v}" are not parallel')
    if not assume_convergent:
        from branchings.confluence import decide_confluence

        report = decide_confluence(p, order=order, certificate=certificate,
                                   accept_sampled=accept_sampled, fuel=fuel,
                                   pump_bound=pump_bound)
        if not report.confluent:
            raise NotCertified('presentation is not confluent', witness=report.first_failure)
    return normal_form(p, u, fuel, pump_bound) == normal_form(p, v, fuel, pump_bound)
