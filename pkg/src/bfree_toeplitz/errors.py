"""Exception types shared across the package.

The CLI maps these onto exit codes: family/value validation -> 1,
depth or window insufficiency -> 2, search budget refusal -> 3.
"""


class BFreeError(Exception):
    """Base class for package errors."""


class FamilyError(BFreeError, ValueError):
    """A generator list violates the family hypotheses."""


class NotOddError(FamilyError):
    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"generator b_{index} = {value} is even")


class NotGreaterThanOneError(FamilyError):
    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"generator b_{index} = {value} must exceed 1")


class NotCoprimeError(FamilyError):
    def __init__(self, i: int, j: int, common: int):
        self.i = i
        self.j = j
        self.common = common
        super().__init__(f"generators b_{i}, b_{j} share the factor {common}")


class DepthInsufficientError(BFreeError):
    """The truncation depth cannot decide the requested value."""

    def __init__(self, position: int, message: str | None = None):
        self.position = position
        super().__init__(message or f"depth insufficient to decide position {position}")


class DepthMismatchError(BFreeError, ValueError):
    """Odometer elements of different depths were combined."""


class WindowTooShortError(BFreeError, ValueError):
    """A window is too short for the requested scan."""


class ComplexityRefusalError(BFreeError):
    """The enumeration would exceed the configured budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(f"search needs {required} rule checks, budget is {budget}")


class InconsistentLevelsError(BFreeError):
    """Skeleton levels disagree on a filled cell (an internal bug, never valid data)."""
