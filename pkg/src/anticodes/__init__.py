"""Projective linear codes and anticodes over small finite fields.

Exact (integer) weight-distribution enumeration, complements inside the
projective space, distribution transforms, packing/covering bounds, and
strong-walk-regularity certificates for the associated coset graphs.
"""

__version__ = "0.1.0"
