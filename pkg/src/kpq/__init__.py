"""Exact verification of class-number divisibility for K_{p,q} = Q(sqrt(q^2 - p^n))."""
from kpq.kernels import BACKEND
from kpq.fieldcase import build_case, check_conditions, verify, theorem4_case, scan_theorem2
from kpq.quadforms import QuadForm, class_number, compose, form_order, prime_form, reduce

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "QuadForm",
    "build_case",
    "check_conditions",
    "verify",
    "theorem4_case",
    "scan_theorem2",
    "class_number",
    "compose",
    "reduce",
    "prime_form",
    "form_order",
]
