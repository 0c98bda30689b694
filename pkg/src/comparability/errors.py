"""Exception hierarchy shared by the library and the command line tool.

The three leaf classes map onto the CLI exit codes: InputError -> 2,
DomainError -> 1, OracleBoundError -> 3.
"""

from __future__ import annotations


class ComparabilityError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ComparabilityError):
    """Malformed or out-of-contract input (bad vertex ids, parse failures,
    invalid partitions, preconditions on the shape of the input graph)."""


class DomainError(ComparabilityError):
    """Structurally valid input outside the mathematical domain of the
    operation (e.g. asking for transitive orientations of a graph that is
    not a comparability graph)."""


class OracleBoundError(ComparabilityError):
    """An exhaustive-search oracle refused to run because the input exceeds
    the configured size bound."""
