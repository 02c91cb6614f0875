from .rational import format_rational, to_rational
from .ypolynomial import YPolynomial, differentiate_y
from .bivariate import BivariatePolynomial, divide_by_z, integrate_z
