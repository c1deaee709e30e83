class InvalidRingError(ValueError):
    pass


class RingMismatchError(ValueError):
    pass


class DeterminantError(ValueError):
    pass


class MalformedMatrixError(ValueError):
    pass


class NonUnitDeterminantError(ValueError):
    pass


class WordSyntaxError(ValueError):
    pass


class ShapeMismatchError(ValueError):
    pass


class NotInvertibleError(ValueError):
    pass


class UnknownEmbeddingError(ValueError):
    pass


class BudgetExceededError(ValueError):
    def __init__(self, count, budget):
        self.count = count
        self.budget = budget
        super().__init__(f"Scan would enumerate {count} elements, budget is {budget}")
