"""Exceptions raised across the package."""


class SkeletalError(Exception):
    """Base class for all package errors."""


class CapExceeded(SkeletalError):
    """A closure or orbit grew past its configured size bound."""


class InvalidGeneratorSystem(SkeletalError):
    pass


class NonPlanarInfiniteFace(SkeletalError):
    """The base face is infinite but not a planar zigzag (helical)."""


class BoundaryVertex(SkeletalError):
    pass


class BoundaryEdge(SkeletalError):
    pass


class NotEdgeStabilizer(SkeletalError):
    pass


class Unrecognized(SkeletalError):
    pass


class NotInG2(SkeletalError):
    pass


class NotInvolution(SkeletalError):
    pass


class RegionMismatch(SkeletalError):
    pass


class UnknownId(SkeletalError):
    pass


class InvalidRadius(SkeletalError):
    pass
