"""Exact-arithmetic toolkit for nilpotent orbit covers of exceptional groups.

The package is organised around the pipeline

    root systems -> Levi subgroups -> orbit catalogues
                 -> equivariant fundamental groups -> covers
                 -> birationally rigid induction data

Everything is integer or rational arithmetic; no floats enter any
mathematical computation.
"""

__version__ = "0.1.0"
