"""Boundary unit conversions.

Everything inside the package is SI (metres, pascals, radians,
newton-metres). Millimetres, kilopascals and degrees exist only at the
CLI/service boundary and in exported files.
"""

import math


def mm_to_m(value_mm: float) -> float:
    return value_mm / 1000.0


def m_to_mm(value_m: float) -> float:
    return value_m * 1000.0


def kpa_to_pa(value_kpa: float) -> float:
    return value_kpa * 1000.0


def pa_to_kpa(value_pa: float) -> float:
    return value_pa / 1000.0


def deg_to_rad(value_deg: float) -> float:
    return math.radians(value_deg)


def rad_to_deg(value_rad: float) -> float:
    return math.degrees(value_rad)
