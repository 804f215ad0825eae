class CubicBirError(Exception):
    """Base class for domain errors raised by this package."""


class IncompatibleSpacesError(CubicBirError, ValueError):
    pass


class UnsupportedSpaceError(CubicBirError, ValueError):
    pass


class InternalInconsistencyError(CubicBirError, RuntimeError):
    """A verifier found no (or more than one) certificate; carries the evidence."""

    def __init__(self, message: str, certificate: dict | None = None):
        super().__init__(message)
        self.certificate = certificate or {}
