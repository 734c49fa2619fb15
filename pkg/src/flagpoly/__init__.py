"""Exact flag counts and unipotent-radical class counts for GL_n as
polynomials in q, with brute-force checks over small prime fields."""

from flagpoly.polyring import Polynomial
from flagpoly.qcombinatorics import Partition, partitions

__version__ = "0.1.0"

__all__ = ["Partition", "Polynomial", "partitions"]
