class DomainError(ValueError):
    """Input outside the domain of an operation (bad parameters, missing links)."""


class GraphParseError(ValueError):
    """Malformed edge-list or graph argument."""
