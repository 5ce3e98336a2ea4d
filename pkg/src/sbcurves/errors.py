"""Exception types shared across the package.

The CLI maps each class to a distinct exit status, so raising the right
type matters for scripted callers:

* ``ConfigParseError`` -- a configuration file is unreadable or ill-formed.
* ``InvariantError``   -- structured input violates a construction invariant
  (malformed algebra triple, unstable group action, proportional vertex
  coordinates, ...).
* ``PreconditionError`` -- the input is well-formed but a hypothesis required
  by the requested operation does not hold (non-division algebra, empty
  Hilbert scheme, composite index where a prime is needed, ...).
"""


class ConfigParseError(ValueError):
    """A configuration file is unreadable or ill-formed."""


class InvariantError(ValueError):
    """Structured input violates a construction invariant."""


class PreconditionError(ValueError):
    """A hypothesis required by the requested operation fails."""
