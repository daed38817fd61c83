"""
Toricmorse-specific exception classes.
"""

from .utils.misc import oneline


class InputError(ValueError):
    """
    Raised for any problem with user-supplied data. The CLI exits with status 1.
    """

    pass


class MalformedInputError(InputError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super(MalformedInputError, self).__init__(message)
        self.line_number = line_number


class ZeroCharacterError(InputError):
    @classmethod
    def for_vector(cls, vector):
        return cls(f"zero character: {tuple(vector)!r} has no nonzero entry")


class NoCellStructureError(InputError):
    @classmethod
    def for_arrangement(cls, dim, n_items, rank):
        return cls(
            oneline(
                f"""
            no cell structure: a toric arrangement in dimension {dim}
            with {n_items} items of rank {rank} does not decompose the
            compact torus into cells; normalize it first"""
            )
        )


class LatticeChainError(InputError):
    pass


class NotAChamberError(InputError):
    @classmethod
    def for_signs(cls, signs_str):
        return cls(f"Sign vector {signs_str!r} is not a chamber of the arrangement")


class FaceNotInLayerError(InputError):
    pass


class InternalVerificationError(Exception):
    """
    Raised when a theorem-backed runtime check fails. This always indicates a
    bug; the CLI exits with status 2.
    """

    def __init__(self, message, check=None):
        super(InternalVerificationError, self).__init__(message)
        self.check = check

    @classmethod
    def for_check(cls, check, detail):
        return cls(f"verification {check!r} failed: {detail}", check=check)


class MatchingValidationError(InternalVerificationError):
    def __init__(self, message, cycle=None):
        super(MatchingValidationError, self).__init__(message, check="matching")
        self.cycle = cycle


class MatchingSearchError(Exception):
    """
    Raised when no matching with the requested critical objects was found.
    ``exhaustive`` is True when the whole search space was explored, and False
    when the search stopped because it ran out of budget.
    """

    def __init__(self, message, exhaustive):
        super(MatchingSearchError, self).__init__(message)
        self.exhaustive = exhaustive
