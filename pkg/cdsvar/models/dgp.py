# -*- coding: utf-8 -*-

"""
cdsvar.models.dgp
~~~~~~~~~~~~~~~~~

This module contains the class representation of a synthetic data-generating process:
a Gaussian VAR, a random walk, white noise or an AR(1), each driven by a counter-based
random stream seeded with a 64-bit integer.

:copyright: (c) 2026 cdsvar developers
:license: MIT LICENSE
"""

# Package imports
from dataclasses import dataclass
from enum import Enum

import numpy as np
from statsmodels.tsa.vector_ar.util import comp_matrix

# Local imports

# # Configs
from cdsvar.config.stats import StatsDefaults

# # Exception Handling
from cdsvar.models.exceptions import (
    InvalidOptionError,
    NotPositiveDefinite,
    UnstableProcess,
)


class DgpKind(str, Enum):
    """Families of generating processes"""

    VarProcess = "VarProcess"
    RandomWalk = "RandomWalk"
    WhiteNoise = "WhiteNoise"
    Ar1 = "Ar1"


@dataclass(frozen=True)
class DgpSpec:
    """A seeded data-generating process

    For ``VarProcess`` and ``Ar1`` the process is
    ``y_t = c + A_1 y_{t-1} + ... + A_p y_{t-p} + e_t``; an ``Ar1`` carries a single
    diagonal lag matrix. ``RandomWalk`` cumulates the innovations and ``WhiteNoise``
    returns them as they are.

    :param kind: Process family
    :type kind: DgpKind

    :param dimension: Number of variables k
    :type dimension: int

    :param lag_matrices: p x k x k lag coefficient matrices (empty for noise and walks)
    :type lag_matrices: numpy.ndarray

    :param intercept: Intercept vector of length k
    :type intercept: numpy.ndarray

    :param innovation_covariance: k x k symmetric positive definite matrix
    :type innovation_covariance: numpy.ndarray

    :param length: Number of rows T returned
    :type length: int

    :param burn_in: Leading rows generated and discarded
    :type burn_in: int

    :param seed: 64-bit seed of the random stream
    :type seed: int

    :param stable: Whether the companion spectral radius must be below 1
    :type stable: bool

    :param columns: Column names of the simulated panel
    :type columns: tuple

    '''
    :raise NotPositiveDefinite: Covariance not symmetric positive definite
    :raise UnstableProcess: Stability requested but violated
    '''

    Usage::
        >>> from cdsvar.models.dgp import DgpSpec
        >>> DgpSpec.ar1(0.5, length=1000, seed=1).spectral_radius()
        0.5
    """

    kind: DgpKind
    dimension: int
    lag_matrices: np.ndarray
    intercept: np.ndarray
    innovation_covariance: np.ndarray
    length: int
    burn_in: int = 200
    seed: int = 0
    stable: bool = True
    columns: tuple = None
    start_date: str = "2001-01-01"

    def __post_init__(self) -> None:
        kind = DgpKind(self.kind)
        k = int(self.dimension)

        if k < 1:
            raise InvalidOptionError(param="dimension", value=self.dimension,
                                     options=["integer >= 1"])

        if int(self.length) < 1 or int(self.burn_in) < 0:
            raise InvalidOptionError(
                param="length/burn_in",
                value=(self.length, self.burn_in),
                options=["length >= 1", "burn_in >= 0"],
            )

        if not 0 <= int(self.seed) < 2**64:
            raise InvalidOptionError(param="seed", value=self.seed,
                                     options=["0 <= seed < 2**64"])

        lag_matrices = np.array(self.lag_matrices, dtype=float).reshape(-1, k, k)
        intercept = np.array(self.intercept, dtype=float).reshape(k)
        covariance = np.array(self.innovation_covariance, dtype=float).reshape(k, k)

        if kind in (DgpKind.WhiteNoise, DgpKind.RandomWalk) and lag_matrices.shape[0]:
            raise InvalidOptionError(param="lag_matrices", value=lag_matrices.shape,
                                     options=[f"no lag matrices for {kind.value}"])

        if kind in (DgpKind.VarProcess, DgpKind.Ar1) and lag_matrices.shape[0] == 0:
            raise InvalidOptionError(param="lag_matrices", value=lag_matrices.shape,
                                     options=[f"at least one lag matrix for {kind.value}"])

        if not np.allclose(covariance, covariance.T, rtol=0.0,
                           atol=StatsDefaults.symmetry_tolerance):
            raise NotPositiveDefinite("innovation covariance is not symmetric")

        try:
            np.linalg.cholesky(covariance)
        except np.linalg.LinAlgError:
            raise NotPositiveDefinite("innovation covariance is not positive definite")

        columns = self.columns
        if columns is None:
            columns = tuple(f"X{index + 1}" for index in range(k))
        columns = tuple(str(column) for column in columns)
        if len(columns) != k:
            raise InvalidOptionError(param="columns", value=columns,
                                     options=[f"{k} column names"])

        for name, array in (
            ("lag_matrices", lag_matrices),
            ("intercept", intercept),
            ("innovation_covariance", covariance),
        ):
            array.setflags(write=False)
            object.__setattr__(self, name, array)

        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "dimension", k)
        object.__setattr__(self, "length", int(self.length))
        object.__setattr__(self, "burn_in", int(self.burn_in))
        object.__setattr__(self, "seed", int(self.seed))
        object.__setattr__(self, "columns", columns)

        if self.stable and kind in (DgpKind.VarProcess, DgpKind.Ar1):
            radius = self.spectral_radius()
            if not radius < 1.0:
                raise UnstableProcess(radius)

    @property
    def lag_order(self) -> int:
        return int(self.lag_matrices.shape[0])

    def companion(self) -> np.ndarray:
        """kp x kp companion matrix of the lag polynomial"""

        if self.lag_order == 0:
            return np.zeros((self.dimension, self.dimension))

        return comp_matrix(np.asarray(self.lag_matrices))

    def spectral_radius(self) -> float:
        """Largest eigenvalue modulus of the companion matrix"""

        return float(np.max(np.abs(np.linalg.eigvals(self.companion()))))

    @classmethod
    def var_process(cls, lag_matrices, intercept=None, covariance=None, **kwargs) -> "DgpSpec":
        """Gaussian VAR(p) with the given lag matrices"""

        lag_matrices = np.asarray(lag_matrices, dtype=float)
        k = lag_matrices.shape[-1]
        return cls(
            kind=DgpKind.VarProcess,
            dimension=k,
            lag_matrices=lag_matrices,
            intercept=np.zeros(k) if intercept is None else intercept,
            innovation_covariance=np.eye(k) if covariance is None else covariance,
            **kwargs,
        )

    @classmethod
    def ar1(cls, coefficient, covariance=None, **kwargs) -> "DgpSpec":
        """Independent AR(1) processes, ``coefficient`` scalar or one per variable"""

        coefficients = np.atleast_1d(np.asarray(coefficient, dtype=float))
        k = coefficients.shape[0]
        return cls(
            kind=DgpKind.Ar1,
            dimension=k,
            lag_matrices=np.diag(coefficients).reshape(1, k, k),
            intercept=np.zeros(k),
            innovation_covariance=np.eye(k) if covariance is None else covariance,
            **kwargs,
        )

    @classmethod
    def white_noise(cls, dimension=1, covariance=None, **kwargs) -> "DgpSpec":
        """Gaussian white noise"""

        return cls(
            kind=DgpKind.WhiteNoise,
            dimension=dimension,
            lag_matrices=np.zeros((0, dimension, dimension)),
            intercept=np.zeros(dimension),
            innovation_covariance=np.eye(dimension) if covariance is None else covariance,
            **kwargs,
        )

    @classmethod
    def random_walk(cls, dimension=1, covariance=None, **kwargs) -> "DgpSpec":
        """Driftless Gaussian random walk started at zero"""

        return cls(
            kind=DgpKind.RandomWalk,
            dimension=dimension,
            lag_matrices=np.zeros((0, dimension, dimension)),
            intercept=np.zeros(dimension),
            innovation_covariance=np.eye(dimension) if covariance is None else covariance,
            stable=False,
            **kwargs,
        )

    @classmethod
    def from_dict(cls, document: dict) -> "DgpSpec":
        """Builds a spec from its JSON document layout"""

        kind = DgpKind(document["kind"])
        k = int(document.get("dimension", 1))
        lag_matrices = document.get("lag_matrices")
        if lag_matrices is None:
            lag_matrices = np.zeros((0, k, k))
            if kind == DgpKind.Ar1:
                coefficient = np.broadcast_to(
                    np.asarray(document["coefficient"], dtype=float), (k,)
                )
                lag_matrices = np.diag(coefficient).reshape(1, k, k)

        return cls(
            kind=kind,
            dimension=k,
            lag_matrices=lag_matrices,
            intercept=document.get("intercept", np.zeros(k)),
            innovation_covariance=document.get("innovation_covariance", np.eye(k)),
            length=document["length"],
            burn_in=document.get("burn_in", 200),
            seed=document.get("seed", 0),
            stable=document.get("stable", kind in (DgpKind.VarProcess, DgpKind.Ar1)),
            columns=document.get("columns"),
            start_date=document.get("start_date", "2001-01-01"),
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "dimension": self.dimension,
            "lag_matrices": self.lag_matrices.tolist(),
            "intercept": self.intercept.tolist(),
            "innovation_covariance": self.innovation_covariance.tolist(),
            "length": self.length,
            "burn_in": self.burn_in,
            "seed": self.seed,
            "stable": self.stable,
            "columns": list(self.columns),
            "start_date": self.start_date,
            "random_algorithm": StatsDefaults.random_algorithm,
        }
