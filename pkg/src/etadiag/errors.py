"""Exception hierarchy shared by every module."""


class EtaDiagError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 2)."""


class GroupMismatch(EtaDiagError, ValueError):
    """Domains, codomains or shapes do not line up."""


class IllDefined(EtaDiagError, ValueError):
    """A matrix entry violates ``d_j * M[i][j] == 0 (mod e_i)``."""

    def __init__(self, i: int, j: int, detail: str = ""):
        self.i, self.j = i, j
        msg = f"IllDefined({i},{j})"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class InfiniteGroup(EtaDiagError, ValueError):
    pass


class InfiniteHomSet(EtaDiagError, ValueError):
    pass


class NotExact(EtaDiagError, ValueError):
    pass


class RelationFailed(EtaDiagError, ValueError):
    def __init__(self, name: str, detail: str = ""):
        self.name = name
        super().__init__(f"RelationFailed({name})" + (f": {detail}" if detail else ""))


class NotInEmdPrime(EtaDiagError, ValueError):
    """eta is not surjective with kernel 2A."""


class ParseError(ValueError):
    """Malformed group literal or JSON payload (CLI exit code 1)."""
