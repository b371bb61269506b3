"""Exception types raised by cellhom."""


class CellhomError(Exception):
    """Base class for every error raised by this package."""


class InvalidLieType(CellhomError, ValueError):
    pass


class NotARootError(CellhomError, ValueError):
    pass


class NonReducedWordError(CellhomError, ValueError):
    pass


class GroupTooLargeError(CellhomError, RuntimeError):
    pass


class ElementParseError(CellhomError, ValueError):
    pass


class BoundarySquareError(CellhomError):
    """delta o delta != 0 for some pair of cells.

    ``top`` is the cell in degree d+1 and ``bottom`` the cell in degree d-1
    whose composite coefficient is ``value``.
    """

    def __init__(self, degree, top, bottom, value):
        self.degree = degree
        self.top = top
        self.bottom = bottom
        self.value = value
        super().__init__(
            f"boundary does not square to zero: coefficient of {bottom} in "
            f"delta_{degree - 1}(delta_{degree}({top})) is {value}"
        )


class ComplexNotValidated(CellhomError):
    pass
