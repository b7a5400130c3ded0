import numpy as np
from factory import Factory
from factory import LazyAttribute
from factory import Sequence

from wdlab.concepts.context import FormalContext


class FormalContextFactory(Factory[FormalContext]):
    """Random contexts; the incidence is drawn from a per-instance seed so a failure can be rebuilt."""

    objects = LazyAttribute(lambda o: [f"g{i + 1}" for i in range(o.rows)])
    attributes = LazyAttribute(lambda o: [f"m{j + 1}" for j in range(o.columns)])
    incidence = LazyAttribute(lambda o: np.random.default_rng(o.seed).random((o.rows, o.columns)) < o.density)

    class Params:
        rows = 3
        columns = 3
        density = 0.5
        seed = Sequence(lambda n: n)

    class Meta:
        model = FormalContext
