from .certificate import SCHEMA as SCHEMA
from .certificate import canonical_json as canonical_json
from .certificate import Certificate as Certificate
from .freeness import CertificateKind as CertificateKind
from .freeness import FreenessCertificate as FreenessCertificate
from .freeness import Verdict as Verdict
from .freeness import verdict_for as verdict_for
from .report import ReportGenerator as ReportGenerator
from .split import SplitCertificate as SplitCertificate

# certificates.verify imports saito and is not re-exported here.

__all__ = [
    "SCHEMA",
    "canonical_json",
    "Certificate",
    "CertificateKind",
    "FreenessCertificate",
    "SplitCertificate",
    "Verdict",
    "verdict_for",
    "ReportGenerator",
]
