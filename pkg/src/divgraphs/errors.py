"""Exceptions shared across the package.

Kept in one place so the command line tool can map them to exit codes
without importing the heavyweight modules.
"""


class CapExceeded(Exception):
    """A resource cap would be exceeded (group order, field size, algebra size).

    The offending size is stored in .needed and the configured limit in .cap,
    when known, so callers can report both.
    """

    def __init__(self, message, needed=None, cap=None):
        super().__init__(message)
        self.needed = needed
        self.cap = cap


class VerificationError(Exception):
    """A structural property that must hold for the given input failed to hold."""
