"""Exact partition calculus for easy quantum groups."""

from .errors import DomainError, SizeLimitError, StructureError
from .kernels import BACKEND
from .partitions import PartitionFamily, SetPartition, count_partitions, enumerate_partitions

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DomainError",
    "PartitionFamily",
    "SetPartition",
    "SizeLimitError",
    "StructureError",
    "count_partitions",
    "enumerate_partitions",
]
