"""Per-t certificates, group facts, class numbers and the command line."""
from .a7 import certify_2a7_setup, obstruction_table
from .batch import odd_range, run_batch
from .certificate import CONDITIONAL, FAIL, PASS, Certificate, Check, CheckSpec, run_check
from .classnum import CapExceeded, class_number, reduced_forms
from .groupfacts import Fact, group_facts
from .sl27 import certify_sl27, d_value, sl27_times_c2_check

__all__ = [
    "CONDITIONAL",
    "FAIL",
    "PASS",
    "CapExceeded",
    "Certificate",
    "Check",
    "CheckSpec",
    "Fact",
    "certify_2a7_setup",
    "certify_sl27",
    "class_number",
    "d_value",
    "group_facts",
    "obstruction_table",
    "odd_range",
    "reduced_forms",
    "run_batch",
    "run_check",
    "sl27_times_c2_check",
]
