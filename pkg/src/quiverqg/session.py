"""A computation session: quiver, cutoffs and the shared caches built on them."""
from functools import cached_property

from .casimir import Casimir
from .double import DoubleAlgebra
from .pairing import Pairing
from .quiver import random_nu
from .uplus import UPlus


class Session:
    def __init__(self, q, max_height=4, series_order=20, seed=0, margin=0):
        if max_height < 1:
            raise ValueError("max-height must be at least 1")
        if series_order < 1:
            raise ValueError("series-order must be at least 1")
        self.q = q
        self.max_height = max_height
        self.series_order = series_order
        self.seed = seed
        self.margin = margin

    @cached_property
    def pairing(self):
        return Pairing(self.q, self.max_height)

    @cached_property
    def uplus(self):
        return UPlus(self.pairing)

    @cached_property
    def double(self):
        return DoubleAlgebra(self.pairing)

    @cached_property
    def casimir(self):
        return Casimir(self.uplus, self.double, self.margin)

    def with_quiver(self, q):
        return Session(q, self.max_height, self.series_order, self.seed, self.margin)

    def random_variant(self, k):
        """Same session with ν drawn from seed ``seed + k``."""
        return self.with_quiver(random_nu(self.q, self.seed + k, self.max_height))
