"""Property suites and the service that runs them."""

from badseq_cli.verify.service import ProgressCallback, VerifyService, suites_for
from badseq_cli.verify.suites import SUITES, Instance, SuiteContext

__all__ = [
    "SUITES",
    "Instance",
    "ProgressCallback",
    "SuiteContext",
    "VerifyService",
    "suites_for",
]
