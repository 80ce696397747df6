"""Exception hierarchy.  Every numeric failure derives from :class:`SpinPairError`."""


class SpinPairError(ValueError):
    """Base class for numeric-domain failures (CLI exit code 3)."""


class DimensionError(SpinPairError):
    pass


class NotHermitianError(SpinPairError):
    def __init__(self, asymmetry):
        self.asymmetry = asymmetry
        super().__init__(f"matrix is not Hermitian: max |A - A^H| = {asymmetry:.3e}")


class FunctionDomainError(SpinPairError):
    pass


class InvalidStateError(SpinPairError):
    pass


class ParameterRangeError(SpinPairError):
    pass


class OverflowGuardError(ParameterRangeError):
    pass


class SolverError(SpinPairError):
    pass
