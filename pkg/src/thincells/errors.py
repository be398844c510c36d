"""Exception hierarchy shared by every module of the package."""


class ThinCellError(Exception):
    pass


class InvalidParameter(ThinCellError, ValueError):
    pass


class InvalidFamily(ThinCellError, ValueError):
    pass


class ExchangeViolation(InvalidFamily):
    """A basis family fails the exchange property.

    ``witness`` is the triple ``(I, J, i)``: no ``j`` in ``J - I`` makes
    ``(I - {i}) | {j}`` a member of the family.
    """

    def __init__(self, I, J, i):
        self.witness = (I, J, i)
        super().__init__(f"exchange fails for I={I}, J={J}, i={i}")


class TooLarge(ThinCellError, ValueError):
    pass


class NotASubspace(ThinCellError, ValueError):
    pass


class RankDeficient(ThinCellError, ValueError):
    pass


class NotNested(ThinCellError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"stage {index} is not contained in stage {index + 1}")


class SamplingExhausted(ThinCellError, RuntimeError):
    pass


class EmptyCell(ThinCellError, ValueError):
    pass


class InvalidSignature(ThinCellError, ValueError):
    pass
