"""Typed errors raised by the series engine, the ADM verifier and the oracle."""


class LiteSeriesError(Exception):
    pass


class InadmissibleInitialError(LiteSeriesError):
    """f0 is not in the polynomial kernel of the order-0 operator."""

    def __init__(self, residual):
        self.residual = residual
        super().__init__(f"initial profile is inadmissible, L_0[f0] = {residual}")


class ResonanceError(LiteSeriesError):
    """No polynomial particular solution exists for the forcing at this order."""

    def __init__(self, order: int, degree: int, coefficient=None):
        self.order = order
        self.degree = degree
        self.coefficient = coefficient
        super().__init__(
            f"resonant forcing at order {order}: degree {degree} requires "
            f"coefficient {coefficient} against a zero diagonal"
        )


class DivisionByZError(LiteSeriesError):
    pass


class SingularTimeError(LiteSeriesError, ValueError):
    pass


class InstabilityError(LiteSeriesError):
    def __init__(self, step: int, z: float):
        self.step = step
        self.z = z
        super().__init__(f"non-finite value at step {step} (z={z:.6g})")


class GridError(LiteSeriesError, ValueError):
    pass


class SeriesFormatError(LiteSeriesError, ValueError):
    pass
