"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class NotDetermined(DomainError):
    """The encoded results do not decide this input."""


class OutsideSerreRange(NotDetermined):
    """A homotopy-group query outside the tabulated Serre range."""


class InvalidDescriptor(ValueError):
    """A manifold descriptor violates one or more invariants.

    ``violations`` holds ``(invariant_name, message)`` pairs.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        msg = "; ".join(f"{name}: {text}" for name, text in self.violations)
        super().__init__(msg)


class IntegrityError(RuntimeError):
    """A chain complex failed the boundary-of-boundary check."""


class CellBudgetExceeded(RuntimeError):
    """A deleted product would exceed the configured cell budget."""

    def __init__(self, counted, budget, stage=""):
        self.counted = counted
        self.budget = budget
        where = f" ({stage})" if stage else ""
        super().__init__(
            f"deleted product has more than {budget} cells{where}: "
            f"counted {counted} before stopping"
        )
