"""Shipped demo geometries: a curved spline element and a ball union.

The concrete vertex and center values are package defaults chosen to
exercise the pipeline (a smooth lobed element, five mutually
intersecting balls); any geometry of the same shape works.
"""

import json
from importlib import resources

from .geometry import balls_from_config, spline_from_config


def _load(name):
    with resources.files("orthocub.data").joinpath(name).open("r") as fh:
        return json.load(fh)


def demo_spline_element():
    """Closed cubic spline element used by the 2D integration demos."""
    return spline_from_config(_load("spline_element.json"))


def demo_ball_union():
    """Five intersecting balls used by the QMC compression demos."""
    return balls_from_config(_load("ball_union.json"))
