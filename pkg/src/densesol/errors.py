"""Exception types raised across the package."""


class GroupError(ValueError):
    """Bad input to a group constructor or query."""


class OrderCapExceeded(GroupError):
    def __init__(self, order, cap):
        super().__init__(f"group order {order} exceeds the element cap {cap}")
        self.order = order
        self.cap = cap


class InvalidZmTriple(GroupError):
    """A triple (m, n, r) that does not define a ZM-group.

    ``reason`` is a short machine-readable code, used by the CLI.
    """

    reason = "invalid"

    def __init__(self, m, n, r, message):
        super().__init__(f"ZM({m},{n},{r}): {message}")
        self.triple = (m, n, r)


class RangeViolation(InvalidZmTriple):
    reason = "range"


class GcdViolation(InvalidZmTriple):
    reason = "gcd"


class OrderViolation(InvalidZmTriple):
    reason = "order"


class AbelianTriple(InvalidZmTriple):
    reason = "abelian"
