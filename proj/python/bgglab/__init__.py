"""Exact sl2 computations over Q(k): truncated complexes, cuts, pairings and Weyl shapes."""

import json as _json

from ._bgglab import (
    RatFunc,
    Matrix,
    ConfigError,
    __version__,
    xi,
    kernel_generator,
    kernel_basis,
    surjectivity_witness,
    boundary_complex,
    homology_dims,
    cut,
    central_character,
    specialize,
    rank_oracle,
    dot_orbit,
    weyl_length_histogram,
    bgg_shape,
    _run,
    _acceptance,
)


def run(command, **config):
    """Run a bgg-lab command and return its report as a dict.

    Keyword arguments mirror the CLI flags with underscores (n_max, s_max, seed, chi, ...).
    """
    return _json.loads(_run(command, _json.dumps(config)))


def acceptance(seed=0):
    """All acceptance criteria as a report dict."""
    return _json.loads(_acceptance(seed))


__all__ = [name for name in dir() if not name.startswith("_")]
