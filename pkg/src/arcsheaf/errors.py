"""Shared exception types."""


class InputError(ValueError):
    """Raised when caller-supplied data is malformed or out of domain.

    CLI and HTTP layers map this to exit code 2 / status 400; anything else
    escaping is a bug and surfaces as exit code 1 / status 500.
    """
