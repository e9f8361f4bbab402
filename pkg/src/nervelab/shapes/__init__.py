from .delta import DeltaKShape, MultiMap, SimplexMap, delta_shape
from .gamma import GammaMap, GammaShape, gamma_shape
from .theta2 import Theta2Map, Theta2Shape, theta2_shape

SHAPES = {
    "delta": delta_shape(1),
    "delta2": delta_shape(2),
    "gamma": gamma_shape(),
    "theta2": theta2_shape(),
}


def shape_by_name(name: str):
    return SHAPES[name]


__all__ = [
    "DeltaKShape",
    "GammaMap",
    "GammaShape",
    "MultiMap",
    "SHAPES",
    "SimplexMap",
    "Theta2Map",
    "Theta2Shape",
    "delta_shape",
    "gamma_shape",
    "shape_by_name",
    "theta2_shape",
]
