"""Exact value-semigroup machinery for unibranch curve singularities.

The package computes numerical-semigroup invariants, canonical-ideal value
sets, blowup stabilization, and covering certificates at a singular point,
and checks Max Noether surjectivity on explicit rational curve models with
an independent exact linear-algebra oracle.
"""

from .blowup import BlowupAnalysis, analyze, genus_drop, nearly_gorenstein_local_checks
from .curves import (
    Branch,
    NDifferential,
    NoetherCheck,
    RationalCurveModel,
    ResolutionCheck,
    check_hyperelliptic_resolution,
    check_resolution_quotient,
    choose_x,
    global_sections,
    is_certified_hyperelliptic,
    local_support_set,
    max_noether_holds,
    products_span,
    resolve,
    section_valuations,
)
from .linalg import Subspace, nullspace, rref, span
from .local import (
    BasisCertificate,
    CertEntry,
    EpsilonCase,
    LocalContext,
    QDecomposition,
    SurjectivityCheck,
    build_certificates,
    epsilon_case,
    minimal_epsilon,
    q_decomposition,
    verify_local_surjectivity,
)
from .reports import VerificationReport, write_jsonl
from .semigroup import NumericalSemigroup, enumerate_semigroups
from .suites import SuiteParams, run_suite
from .valueset import (
    ValueSet,
    canonical_ideal,
    dualizing_values,
    module_closure,
    n_fold,
    quotient_dim,
    ring_closure,
    shift,
    sumset,
)

__version__ = "0.1.0"

__all__ = [
    "BasisCertificate",
    "BlowupAnalysis",
    "Branch",
    "CertEntry",
    "EpsilonCase",
    "LocalContext",
    "NDifferential",
    "NoetherCheck",
    "NumericalSemigroup",
    "QDecomposition",
    "RationalCurveModel",
    "ResolutionCheck",
    "Subspace",
    "SuiteParams",
    "SurjectivityCheck",
    "ValueSet",
    "VerificationReport",
    "analyze",
    "build_certificates",
    "canonical_ideal",
    "check_hyperelliptic_resolution",
    "check_resolution_quotient",
    "choose_x",
    "dualizing_values",
    "enumerate_semigroups",
    "epsilon_case",
    "genus_drop",
    "global_sections",
    "is_certified_hyperelliptic",
    "local_support_set",
    "max_noether_holds",
    "minimal_epsilon",
    "module_closure",
    "n_fold",
    "nearly_gorenstein_local_checks",
    "nullspace",
    "products_span",
    "q_decomposition",
    "quotient_dim",
    "resolve",
    "rref",
    "ring_closure",
    "run_suite",
    "section_valuations",
    "shift",
    "span",
    "sumset",
    "verify_local_surjectivity",
    "write_jsonl",
]
