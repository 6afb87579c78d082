"""Exception hierarchy shared by every module of the package."""


class FussCatalanError(ValueError):
    """Base class for all invalid-object errors raised here."""


class InvalidPartition(FussCatalanError):
    pass


class NotWeaklyDecreasing(InvalidPartition):
    pass


class ExceedsStaircase(InvalidPartition):
    def __init__(self, index, value, bound):
        self.index = index
        self.value = value
        self.bound = bound
        super().__init__(f"part {index} is {value}, exceeds staircase bound {bound}")


class OutOfRangeEntry(FussCatalanError):
    pass


class ShiViolation(FussCatalanError):
    """Raised with every failing ``(i, l, j)`` triplet in :attr:`triplets`."""

    def __init__(self, triplets):
        self.triplets = list(triplets)
        shown = ", ".join(str(t) for t in self.triplets[:5])
        more = "" if len(self.triplets) <= 5 else f" (+{len(self.triplets) - 5} more)"
        super().__init__(f"Shi condition fails at (i, l, j) = {shown}{more}")


class RankTooSmall(FussCatalanError):
    pass


class UnknownLabel(FussCatalanError):
    pass


class NotAnMDiagonal(FussCatalanError):
    pass


class NonConsecutiveCrossing(FussCatalanError):
    pass


class InvalidDissection(FussCatalanError):
    pass


class WrongLabeling(FussCatalanError):
    pass


class InstanceTooLarge(FussCatalanError):
    pass


class NotFound(LookupError):
    pass
