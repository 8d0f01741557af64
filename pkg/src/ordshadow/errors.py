"""Error taxonomy shared by the whole package.

The CLI maps these onto its exit codes: rejected input -> 2, infeasible
request -> 3. Everything else is an ordinary bug.
"""


class InvalidInput(ValueError):
    """A precondition on user-supplied data failed."""


class UnrealizableType(InvalidInput):
    """A (type, level) combination admits no ordered graph."""


class Infeasible(RuntimeError):
    """The request exceeds an enumeration guard or the node budget."""
