class SizeLimitError(ValueError):
    """A request exceeds a configured enumeration or storage bound."""


class StructureError(ValueError):
    """Operands have incompatible leg structure (shapes or colors)."""


class DomainError(ValueError):
    """An operation was applied outside the set where it is defined."""
