"""Entanglement analysis of bipartite pure states through their Gram matrices.

The package is organised bottom-up:

* :mod:`entgram.numerics` — self-contained Hermitian eigensolver, singular
  values, semidefinite Cholesky, and Haar-distributed unitaries;
* :mod:`entgram.state` — truncated coefficient matrices and their Schmidt
  decomposition;
* :mod:`entgram.gram` — Gram matrices of the component vectors, realization,
  unitary invariance, and the four-dimensional membership check;
* :mod:`entgram.entangle` — entanglement entropy, deviation from the balanced
  matrix, and the two-dimensional closed form;
* :mod:`entgram.explore` — parameter scans, random sampling, constrained
  entropy maximization, and the deviation/entropy trade-off harness;
* :mod:`entgram.cli` — command-line front end emitting CSV/JSON.
"""

from .errors import (
    DimensionMismatch,
    EntgramError,
    InfeasibleConstraint,
    InfeasibleParams,
    InvalidInput,
    NegativeEigenvalue,
    NoConvergence,
    NotHermitian,
    NotNormalized,
    NotPSD,
    NotUnitary,
    ShapeMismatch,
    TraceNotOne,
    UnknownFamily,
    ZeroState,
)
from .numerics import (
    cholesky_psd,
    eigenvalues_batch,
    eigh,
    frobenius,
    random_unitary,
    singular_values,
)
from .state import (
    PureState,
    SchmidtForm,
    apply_right_unitary,
    load_state,
    make_state,
    save_state,
    schmidt_decompose,
    state_from_json,
    state_to_json,
)
from .gram import (
    G4Verdict,
    GramMatrix,
    check_g4_membership,
    gram_from_entries,
    gram_from_state,
    gram_from_json,
    gram_from_vectors,
    gram_to_json,
    is_invariant_under,
    principal_minor,
    rank,
    realize,
)
from .entangle import (
    D2Params,
    EntanglementReport,
    analyze,
    d2_closed_form,
    d2_deviation,
    deviation,
    deviation_from_entries,
    entropy,
    entropy_from_eigenvalues,
    max_deviation,
    max_entropy,
    report_to_json,
)
from .explore import (
    FAMILIES,
    GridAxis,
    MaximizeResult,
    ScanGrid,
    ScanRecord,
    ScanResult,
    VerifyReport,
    maximize_entropy,
    random_gram,
    random_state,
    scan_d2,
    scan_d4,
    scan_to_csv,
    scan_to_json,
    verify_conjecture,
    verify_report_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "EntgramError",
    "InvalidInput",
    "ShapeMismatch",
    "DimensionMismatch",
    "NotHermitian",
    "NoConvergence",
    "NotPSD",
    "ZeroState",
    "NotNormalized",
    "NotUnitary",
    "TraceNotOne",
    "NegativeEigenvalue",
    "InfeasibleParams",
    "UnknownFamily",
    "InfeasibleConstraint",
    # numerics
    "eigh",
    "eigenvalues_batch",
    "singular_values",
    "cholesky_psd",
    "random_unitary",
    "frobenius",
    # state
    "PureState",
    "SchmidtForm",
    "make_state",
    "schmidt_decompose",
    "apply_right_unitary",
    "state_to_json",
    "state_from_json",
    "save_state",
    "load_state",
    # gram
    "GramMatrix",
    "G4Verdict",
    "gram_from_entries",
    "gram_from_state",
    "gram_from_vectors",
    "gram_to_json",
    "gram_from_json",
    "is_invariant_under",
    "principal_minor",
    "rank",
    "realize",
    "check_g4_membership",
    # entangle
    "D2Params",
    "EntanglementReport",
    "analyze",
    "d2_closed_form",
    "d2_deviation",
    "deviation",
    "deviation_from_entries",
    "entropy",
    "entropy_from_eigenvalues",
    "max_deviation",
    "max_entropy",
    "report_to_json",
    # explore
    "FAMILIES",
    "GridAxis",
    "ScanGrid",
    "ScanRecord",
    "ScanResult",
    "MaximizeResult",
    "VerifyReport",
    "scan_d2",
    "scan_d4",
    "scan_to_csv",
    "scan_to_json",
    "random_state",
    "random_gram",
    "maximize_entropy",
    "verify_conjecture",
    "verify_report_to_json",
]
