"""Concrete instances of catalog entries at admissible sampled parameters."""

from degenlab.degen import sample_assignments
from degenlab.exact import RatFun


def concrete_instances(catalog, count=1, seed=0):
    """Yield ``(entry, values, pair)`` with every family parameter specialised."""
    for e in catalog.entries:
        pair = e.pair
        if not e.params:
            yield e, {}, pair
            continue
        for values in sample_assignments(pair.params.names, count, seed, pair.params.admits, special=False):
            yield e, values, pair.substitute(values)
