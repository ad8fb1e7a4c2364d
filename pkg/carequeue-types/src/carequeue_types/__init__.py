"""
carequeue types - Pydantic models shared by the carequeue packages
"""

from .attributes import (
    AttributeUtilities,
    ClassAttributes,
    FacilityParameters,
    FacilityTable,
)
from .base import FingerprintBase, FrozenModel
from .calibration import CalibrationResult
from .choice import (
    ChoiceDistribution,
    GumbelNoise,
    MonteCarloEstimate,
    NoiseSpec,
    NormalNoise,
    UtilityVector,
)
from .enums import DelayKind, EvaluationModel, SignVerdict, StartMode, WaitMeasure
from .equilibrium import (
    Equilibrium,
    NonSaturationCheck,
    ObjectiveReport,
    SolverSettings,
)
from .experiment import (
    PairedOutcome,
    PerturbationSample,
    ReportRow,
    SignificanceReport,
    StudyRecord,
    VariableOutcome,
    VariableSignificance,
)
from .facility import FacilityLevel
from .intervention import InterventionSpec
from .patient import PatientClass
from .queueing import DelayModel
from .scenario import Scenario
from .validation import Violation

__version__ = "0.1.0"
__all__ = [
    "AttributeUtilities",
    "CalibrationResult",
    "ChoiceDistribution",
    "ClassAttributes",
    "DelayKind",
    "DelayModel",
    "Equilibrium",
    "EvaluationModel",
    "FacilityLevel",
    "FacilityParameters",
    "FacilityTable",
    "FingerprintBase",
    "FrozenModel",
    "GumbelNoise",
    "InterventionSpec",
    "MonteCarloEstimate",
    "NoiseSpec",
    "NonSaturationCheck",
    "NormalNoise",
    "ObjectiveReport",
    "PairedOutcome",
    "PatientClass",
    "PerturbationSample",
    "ReportRow",
    "Scenario",
    "SignVerdict",
    "SignificanceReport",
    "SolverSettings",
    "StartMode",
    "StudyRecord",
    "UtilityVector",
    "VariableOutcome",
    "VariableSignificance",
    "Violation",
    "WaitMeasure",
]
