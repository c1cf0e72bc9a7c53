"""Exact toolkit for quadratic algebras with binomial relations."""

from .core import CapExceeded, ConsistencyError, Enumeration, Field, InputError, QbxError, Tensor
from .presentation import BinomialRelation, Presentation

__version__ = "0.1.0"
