"""Shared exception and warning types."""


class OrthocubError(ValueError):
    """Invalid construction parameters or mismatched inputs."""


class ExtrapolationWarning(UserWarning):
    """Evaluation point lies outside the bounding box.

    The result is well defined (polynomial extrapolation) but its
    stability is the caller's concern.
    """


class OrientationWarning(UserWarning):
    """Boundary was supplied clockwise and has been reversed."""
