"""Agglomerative Ward clustering, optionally restricted to adjacent samples.

One implementation serves both uses in the pipeline: grouping whole periods
into typical periods (unconstrained) and merging neighbouring time steps
into segments (chain connectivity). Sample distance is the summed squared
attribute difference, d(i, j) = sum_a (x[i, a] - x[j, a])^2; cluster
distances evolve by the Lance-Williams recurrence for Ward's
minimum-variance criterion, so for two singletons the merge cost equals
d(i, j) and in general it is proportional to the within-cluster variance
increase of the merge.

Determinism: cluster ids are 0..n-1 for the input samples and n+m for the
cluster created by merge m. Among equal-cost candidate merges the pair
with the lexicographically smallest (id_a, id_b), id_a < id_b, wins.
Under a connectivity constraint only pairs of clusters containing at least
one allowed sample pair may merge, and a merged cluster inherits the union
of its parents' neighbour relations. Constrained merge costs may invert
(decrease between consecutive merges); unconstrained Ward costs never do.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial.distance import cdist

from .errors import ConfigError, DataError


@dataclass(frozen=True)
class Connectivity:
    """Symmetric allowed-merge relation over samples (boolean matrix)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DataError(f"connectivity matrix must be square, got {m.shape}")
        if not np.array_equal(m, m.T):
            raise DataError("connectivity matrix must be symmetric")
        m = m.copy()
        np.fill_diagonal(m, False)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def chain(cls, n: int) -> "Connectivity":
        """Adjacency of consecutive indices: i may merge with i-1 and i+1."""
        m = np.zeros((n, n), dtype=bool)
        idx = np.arange(n - 1)
        m[idx, idx + 1] = True
        m[idx + 1, idx] = True
        return cls(m)

    @property
    def n_samples(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_components(self) -> int:
        n, _ = connected_components(csr_matrix(self.matrix), directed=False)
        return int(n)


@dataclass(frozen=True)
class Merge:
    id_a: int
    id_b: int
    cost: float
    size: int


@dataclass(frozen=True)
class Linkage:
    """Deterministic merge history; cut at any cluster count it reached."""

    n_samples: int
    merges: tuple[Merge, ...]
    n_components: int = 1

    def cut(self, k: int) -> "ClusterResult":
        """Partition into k clusters by replaying the first n - k merges."""
        n = self.n_samples
        if not 1 <= k <= n:
            raise ConfigError(f"k={k} out of range [1, {n}]")
        if k < self.n_components:
            raise ConfigError(
                f"cannot form {k} clusters: connectivity graph has "
                f"{self.n_components} components")
        n_merges = n - k
        parent = np.arange(n + n_merges)
        for m, merge in enumerate(self.merges[:n_merges]):
            parent[merge.id_a] = n + m
            parent[merge.id_b] = n + m
        roots = np.empty(n, dtype=np.int64)
        for i in range(n):
            r = i
            while parent[r] != r:
                r = parent[r]
            roots[i] = r
        # label clusters 0..k-1 in order of first appearance
        labels: dict[int, int] = {}
        assignment = np.empty(n, dtype=np.int64)
        for i, r in enumerate(roots):
            assignment[i] = labels.setdefault(int(r), len(labels))
        sizes = np.bincount(assignment, minlength=k)
        return ClusterResult(k=k, assignment=assignment, sizes=sizes)


@dataclass(frozen=True)
class ClusterResult:
    """Per-sample cluster index in [0, k) plus the cluster sizes |C_k|.

    Clusters are numbered by first appearance in sample order, so the
    labelling is reproducible.
    """

    k: int
    assignment: np.ndarray
    sizes: np.ndarray

    @property
    def n_samples(self) -> int:
        return self.assignment.shape[0]

    def members(self, cluster: int) -> np.ndarray:
        return np.flatnonzero(self.assignment == cluster)


def ward_linkage(samples: np.ndarray, connectivity: Connectivity | None = None) -> Linkage:
    """Build the full merge history for the given samples.

    Runs until one cluster per connected component remains (n - 1 merges
    for connected or unconstrained inputs).
    """
    samples = np.asarray(samples, dtype=np.float64)
    if samples.ndim == 1:
        samples = samples.reshape(-1, 1)
    if not np.all(np.isfinite(samples)):
        raise DataError("samples contain non-finite values")
    n = samples.shape[0]
    if n == 0:
        raise DataError("no samples to cluster")
    if connectivity is not None and connectivity.n_samples != n:
        raise DataError(
            f"connectivity is over {connectivity.n_samples} samples, data has {n}")
    n_comp = connectivity.n_components if connectivity is not None else 1
    n_merges = n - n_comp
    total = n + n_merges

    size = np.zeros(total, dtype=np.float64)
    size[:n] = 1.0
    # full symmetric Lance-Williams distances among active clusters
    dist = np.full((total, total), np.inf)
    dist[:n, :n] = cdist(samples, samples, "sqeuclidean")
    if connectivity is None:
        allowed = np.ones((total, total), dtype=bool)
        np.fill_diagonal(allowed, False)
        allowed[n:, :] = allowed[:, n:] = False
    else:
        allowed = np.zeros((total, total), dtype=bool)
        allowed[:n, :n] = connectivity.matrix
    # search matrix: upper triangle of allowed active pairs, inf elsewhere
    search = np.full((total, total), np.inf)
    iu = np.triu_indices(n, k=1)
    search[:n, :n][iu] = np.where(allowed[:n, :n][iu], dist[:n, :n][iu], np.inf)

    merges = []
    for step in range(n_merges):
        flat = int(np.argmin(search))
        i, j = divmod(flat, total)
        cost = search[i, j]
        if not np.isfinite(cost):
            raise AssertionError("ran out of allowed merges before reaching components")
        q = n + step
        size[q] = size[i] + size[j]
        merges.append(Merge(id_a=i, id_b=j, cost=float(dist[i, j]), size=int(size[q])))

        others = np.flatnonzero(size[:q] > 0)
        others = others[(others != i) & (others != j)]
        nm = size[others]
        new_d = ((size[i] + nm) * dist[i, others]
                 + (size[j] + nm) * dist[j, others]
                 - nm * dist[i, j]) / (size[i] + size[j] + nm)
        dist[q, others] = new_d
        dist[others, q] = new_d
        new_allowed = np.zeros(total, dtype=bool)
        new_allowed[others] = allowed[i, others] | allowed[j, others]
        allowed[q, :] = new_allowed
        allowed[:, q] = new_allowed
        search[i, :] = np.inf
        search[:, i] = np.inf
        search[j, :] = np.inf
        search[:, j] = np.inf
        search[:q, q] = np.where(new_allowed[:q], dist[:q, q], np.inf)
        size[i] = size[j] = 0.0
    return Linkage(n_samples=n, merges=tuple(merges), n_components=n_comp)


def ward_cluster(samples: np.ndarray, k: int,
                 connectivity: Connectivity | None = None) -> ClusterResult:
    """Cluster samples into k groups under Ward's criterion."""
    samples = np.asarray(samples, dtype=np.float64)
    n = samples.shape[0]
    if not 1 <= k <= n:
        raise ConfigError(f"k={k} out of range [1, {n}]")
    return ward_linkage(samples, connectivity).cut(k)


def medoid_of(samples: np.ndarray, members) -> int:
    """Member index minimizing the summed squared distance to all members.

    Ties resolve to the lowest sample index.
    """
    members = np.asarray(sorted(int(m) for m in members), dtype=np.int64)
    if members.size == 0:
        raise ConfigError("member set is empty")
    samples = np.asarray(samples, dtype=np.float64)
    if samples.ndim == 1:
        samples = samples.reshape(-1, 1)
    pts = samples[members]
    sums = cdist(pts, pts, "sqeuclidean").sum(axis=1)
    return int(members[int(np.argmin(sums))])
