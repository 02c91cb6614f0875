from .verifier import AdmReport, AdmTerm, OrderCheck, adm_identity_check, adm_rhs, lift
from ..polynomials.bivariate import BivariatePolynomial, divide_by_z, integrate_z
