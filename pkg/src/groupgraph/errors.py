"""Exception hierarchy shared by every module."""


class GroupGraphError(Exception):
    pass


class InvalidSpec(GroupGraphError, ValueError):
    pass


class NoFaithfulAction(InvalidSpec):
    pass


class InvalidTable(GroupGraphError, ValueError):
    """A multiplication table that is not a group."""


class TrivialGroup(GroupGraphError, ValueError):
    pass


class VertexMismatch(GroupGraphError, ValueError):
    pass


class NotSubgraph(GroupGraphError, ValueError):
    pass


class SizeBound(GroupGraphError):
    """An exact solver was asked to run on a graph above its configured limit."""

    def __init__(self, what, size, limit):
        super().__init__(f"{what}: {size} vertices exceeds limit {limit}")
        self.size = size
        self.limit = limit


class Cancelled(GroupGraphError):
    pass


class SpecSyntaxError(GroupGraphError, ValueError):
    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class SpecSemanticError(GroupGraphError, ValueError):
    def __init__(self, message, text, position=0):
        super().__init__(f"{message} (in {text!r} at position {position})")
        self.text = text
        self.position = position
