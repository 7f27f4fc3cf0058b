"""Exact monotone Hurwitz numbers via four independent pipelines.

Every value is an exact :class:`fractions.Fraction`; nothing in this
package touches floating point.
"""

from ._core import engine_version, hurwitz, omega, p_table, verify, wave_grid

__version__ = engine_version
__all__ = [
    "engine_version",
    "hurwitz",
    "omega",
    "p_table",
    "verify",
    "wave_grid",
]
