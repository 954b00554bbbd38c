"""Exception types shared across orblab."""


class OrblabError(Exception):
    pass


class BudgetExceeded(OrblabError):
    """An enumeration would exceed its configured element/state budget."""


class ValidationError(OrblabError):
    """Input data failed a consistency check.

    ``witness`` carries whatever identifies the failing case (a Jacobi
    index tuple, a cycle type, ...).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
