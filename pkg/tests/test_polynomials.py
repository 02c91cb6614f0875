from fractions import Fraction

import pytest

from liteseries.errors import DivisionByZError
from liteseries.polynomials import BivariatePolynomial, YPolynomial, differentiate_y, divide_by_z, integrate_z, to_rational


def test_differentiate_power_rule():
    assert differentiate_y(YPolynomial((3, 0, 1))) == YPolynomial((0, 2))


def test_differentiate_zero():
    assert differentiate_y(YPolynomial.zero()).is_zero()


def test_differentiate_drops_one_degree():
    k1 = 3
    p = YPolynomial.monomial(1, k1 - 1)
    assert differentiate_y(p) == YPolynomial.constant(2)
    q = YPolynomial((1, 2, 3, 4))
    assert differentiate_y(q).degree == q.degree - 1


def test_trailing_zeros_trimmed():
    p = YPolynomial((1, 2, 0, 0))
    assert p.degree == 1
    assert YPolynomial((0, 0)).degree == -1


def test_evaluation_exact_and_float():
    p = YPolynomial(("1/2", 0, 3))
    assert p(Fraction(1, 3)) == Fraction(1, 2) + Fraction(1, 3)
    assert p(2.0) == pytest.approx(12.5)


def test_floats_rejected_as_coefficients():
    with pytest.raises(TypeError):
        YPolynomial((0.5,))
    with pytest.raises(ValueError):
        to_rational("one half")


def test_integrate_z_power_rule():
    p = BivariatePolynomial({(0, 3): 1})
    assert integrate_z(p) == BivariatePolynomial({(0, 4): Fraction(1, 4)})


def test_integrate_z_of_y_only_term():
    assert integrate_z(BivariatePolynomial({(2, 0): 1})) == BivariatePolynomial({(2, 1): 1})


def test_integrate_and_divide_mixed():
    p = BivariatePolynomial({(1, 1): 2, (0, 2): 3})
    integrated = integrate_z(p)
    assert integrated == BivariatePolynomial({(1, 2): 1, (0, 3): 1})
    assert divide_by_z(integrated) == BivariatePolynomial({(1, 1): 1, (0, 2): 1})


def test_divide_by_z():
    assert divide_by_z(BivariatePolynomial({(0, 4): Fraction(1, 4)})) == BivariatePolynomial({(0, 3): Fraction(1, 4)})
    with pytest.raises(DivisionByZError):
        divide_by_z(BivariatePolynomial({(1, 0): 1}))


def test_fundamental_theorem_for_monomials():
    for b in range(65):
        p = BivariatePolynomial({(0, b): 1})
        assert divide_by_z(integrate_z(p)) == BivariatePolynomial({(0, b): Fraction(1, b + 1)})


def test_zero_coefficients_not_stored():
    p = BivariatePolynomial({(1, 1): 1}) - BivariatePolynomial({(1, 1): 1})
    assert p.is_zero()
    assert p.terms == {}
    assert p.min_z_degree() is None


def test_z_component_and_bits():
    p = BivariatePolynomial({(0, 3): 4, (1, 4): -2})
    assert p.z_component(4) == YPolynomial((0, -2))
    assert p.max_numerator_bits() == 3
