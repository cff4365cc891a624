"""Dense multi-index tensors over an exact scalar ring.

A tensor carries one variance tag per axis: ``'d'`` for covariant (lower)
and ``'u'`` for contravariant (upper) slots, so metric contractions cannot
silently mix index positions.  All axes share one length (the space
dimension); storage is a flat row-major tuple.  Dimension is small (4 or
4n), so everything is explicit summation, no sparsity or BLAS.

Index convention: 0-based internally, 1-based in report output.
"""

from __future__ import annotations

from itertools import product

from .rings import scalar_is_zero

COV = "d"
CONTRA = "u"


class TensorError(Exception):
    """Base class for tensor shape/variance violations."""


class DimensionMismatch(TensorError):
    pass


class VarianceMismatch(TensorError):
    pass


class Tensor:
    __slots__ = ("dim", "variance", "data")

    def __init__(self, dim: int, variance: str, data):
        if dim < 1:
            raise DimensionMismatch(f"dimension must be positive, got {dim}")
        for v in variance:
            if v not in (COV, CONTRA):
                raise VarianceMismatch(f"variance tag must be 'd' or 'u', got {v!r}")
        data = tuple(data)
        if len(data) != dim ** len(variance):
            raise DimensionMismatch(
                f"need {dim ** len(variance)} entries for rank {len(variance)}, got {len(data)}"
            )
        self.dim = dim
        self.variance = str(variance)
        self.data = data

    # -- construction -------------------------------------------------

    @classmethod
    def zeros(cls, dim: int, variance: str) -> "Tensor":
        return cls(dim, variance, (0,) * (dim ** len(variance)))

    @classmethod
    def from_function(cls, dim: int, variance: str, fn) -> "Tensor":
        """Build from a callable taking one index per axis."""
        rank = len(variance)
        data = [fn(*idx) for idx in product(range(dim), repeat=rank)]
        return cls(dim, variance, data)

    @classmethod
    def identity(cls, dim: int) -> "Tensor":
        """The (1,1) identity, axes ordered (upper, lower)."""
        return cls.from_function(dim, "ud", lambda i, j: 1 if i == j else 0)

    # -- indexing -----------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.variance)

    def _flat(self, idx) -> int:
        flat = 0
        for i in idx:
            flat = flat * self.dim + i
        return flat

    def __getitem__(self, idx):
        if isinstance(idx, int):
            idx = (idx,)
        if len(idx) != self.rank:
            raise DimensionMismatch(f"rank-{self.rank} tensor indexed with {len(idx)} indices")
        return self.data[self._flat(idx)]

    def item(self):
        if self.rank != 0:
            raise DimensionMismatch("item() requires a rank-0 tensor")
        return self.data[0]

    def indices(self):
        return product(range(self.dim), repeat=self.rank)

    def nonzero_items(self):
        """Yield (index tuple, value) for entries that are not exactly zero."""
        for idx in self.indices():
            v = self[idx]
            if not scalar_is_zero(v):
                yield idx, v

    def is_zero(self) -> bool:
        return all(scalar_is_zero(v) for v in self.data)

    # -- algebra ------------------------------------------------------

    def _check_same_shape(self, other: "Tensor"):
        if not isinstance(other, Tensor):
            raise TypeError(f"expected Tensor, got {type(other).__name__}")
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions differ: {self.dim} vs {other.dim}")
        if self.variance != other.variance:
            raise VarianceMismatch(f"variances differ: {self.variance!r} vs {other.variance!r}")

    def __add__(self, other):
        self._check_same_shape(other)
        return Tensor(self.dim, self.variance, (a + b for a, b in zip(self.data, other.data)))

    def __sub__(self, other):
        self._check_same_shape(other)
        return Tensor(self.dim, self.variance, (a - b for a, b in zip(self.data, other.data)))

    def __neg__(self):
        return Tensor(self.dim, self.variance, (-a for a in self.data))

    def scale(self, s) -> "Tensor":
        return Tensor(self.dim, self.variance, (s * a for a in self.data))

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if self.dim != other.dim or self.variance != other.variance:
            return False
        return all(a == b for a, b in zip(self.data, other.data))

    def __hash__(self):
        return hash((self.dim, self.variance))

    def __repr__(self):
        return f"Tensor(dim={self.dim}, variance={self.variance!r})"


def transpose(t: Tensor, perm) -> Tensor:
    """Reorder axes; ``perm[i]`` is the source axis placed at position ``i``."""
    perm = tuple(perm)
    if sorted(perm) != list(range(t.rank)):
        raise DimensionMismatch(f"bad permutation {perm} for rank {t.rank}")
    variance = "".join(t.variance[p] for p in perm)

    def entry(*idx):
        src = [0] * t.rank
        for target_pos, src_axis in enumerate(perm):
            src[src_axis] = idx[target_pos]
        return t[tuple(src)]

    return Tensor.from_function(t.dim, variance, entry)


def contract(t: Tensor, u: Tensor, pairs) -> Tensor:
    """Einstein summation of ``t`` against ``u`` over axis pairs.

    Every pair (axis-in-t, axis-in-u) must join axes of equal length and
    opposite variance.  Remaining axes keep their original order, t's axes
    first.  With no pairs this is the outer product.
    """
    pairs = [(int(a), int(b)) for a, b in pairs]
    if t.dim != u.dim and pairs:
        raise DimensionMismatch(f"dimensions differ: {t.dim} vs {u.dim}")
    seen_t, seen_u = set(), set()
    for a, b in pairs:
        if not (0 <= a < t.rank and 0 <= b < u.rank):
            raise DimensionMismatch(f"axis pair ({a},{b}) out of range")
        if a in seen_t or b in seen_u:
            raise DimensionMismatch(f"axis used twice in contraction: ({a},{b})")
        seen_t.add(a)
        seen_u.add(b)
        if t.variance[a] == u.variance[b]:
            raise VarianceMismatch(
                f"cannot contract axes of equal variance ({t.variance[a]!r} with {u.variance[b]!r})"
            )

    free_t = [a for a in range(t.rank) if a not in seen_t]
    free_u = [b for b in range(u.rank) if b not in seen_u]
    variance = "".join(t.variance[a] for a in free_t) + "".join(u.variance[b] for b in free_u)
    dim = t.dim
    nt, nu = len(free_t), len(free_u)

    def entry(*idx):
        total = 0
        t_idx = [0] * t.rank
        u_idx = [0] * u.rank
        for a, i in zip(free_t, idx[:nt]):
            t_idx[a] = i
        for b, i in zip(free_u, idx[nt:nt + nu]):
            u_idx[b] = i
        for summed in product(range(dim), repeat=len(pairs)):
            for (a, b), s in zip(pairs, summed):
                t_idx[a] = s
                u_idx[b] = s
            total = total + t[tuple(t_idx)] * u[tuple(u_idx)]
        return total

    return Tensor.from_function(dim, variance, entry)


class MetricPair:
    """A symmetric metric together with its exact inverse.

    ``g`` is rank-2 covariant, ``g_inv`` rank-2 contravariant, and
    ``g . g_inv`` must be the identity exactly (checked at construction).
    Both metrics used here are diagonal with entries +-1.
    """

    __slots__ = ("g", "g_inv")

    def __init__(self, g: Tensor, g_inv: Tensor):
        if g.variance != "dd" or g_inv.variance != "uu":
            raise VarianceMismatch("metric must be 'dd' and its inverse 'uu'")
        if g.dim != g_inv.dim:
            raise DimensionMismatch("metric and inverse dimensions differ")
        for i, j in g.indices():
            if g[i, j] != g[j, i]:
                raise TensorError(f"metric not symmetric at ({i},{j})")
        ident = Tensor.identity(g.dim)
        prod_ = contract(g_inv, g, [(1, 0)])
        if prod_ != ident:
            raise TensorError("g_inv is not the exact inverse of g")
        self.g = g
        self.g_inv = g_inv

    @classmethod
    def diagonal(cls, signs) -> "MetricPair":
        signs = tuple(signs)
        if any(s not in (1, -1) for s in signs):
            raise TensorError("diagonal metric entries must be +1 or -1")
        dim = len(signs)
        g = Tensor.from_function(dim, "dd", lambda i, j: signs[i] if i == j else 0)
        g_inv = Tensor.from_function(dim, "uu", lambda i, j: signs[i] if i == j else 0)
        return cls(g, g_inv)

    @property
    def dim(self) -> int:
        return self.g.dim

    def signs(self):
        return tuple(self.g[i, i] for i in range(self.dim))


def raise_index(t: Tensor, axis: int, metric: MetricPair) -> Tensor:
    """Raise one covariant axis with g^{ij}, keeping the axis position."""
    if t.variance[axis] != COV:
        raise VarianceMismatch(f"axis {axis} is not covariant")
    moved = contract(metric.g_inv, t, [(1, axis)])
    return _axis_zero_to(moved, axis)


def lower_index(t: Tensor, axis: int, metric: MetricPair) -> Tensor:
    """Lower one contravariant axis with g_{ij}, keeping the axis position."""
    if t.variance[axis] != CONTRA:
        raise VarianceMismatch(f"axis {axis} is not contravariant")
    moved = contract(metric.g, t, [(1, axis)])
    return _axis_zero_to(moved, axis)


def _axis_zero_to(t: Tensor, axis: int) -> Tensor:
    # after contract(metric, t, [(1, axis)]) the new axis sits at position 0
    perm = list(range(1, t.rank))
    perm.insert(axis, 0)
    return transpose(t, perm)


def square_norm(t: Tensor, metric: MetricPair):
    """Scalar square of a fully covariant tensor: raise all indices of one
    copy with g^{ij} and contract against the tensor itself.

    For an indefinite metric the result may be negative or zero on a
    nonzero tensor (isotropic tensors exist).
    """
    if any(v != COV for v in t.variance):
        raise VarianceMismatch("square_norm requires a fully covariant tensor")
    raised = t
    for axis in range(t.rank):
        raised = raise_index(raised, axis, metric)
    if t.rank == 0:
        return t.item() * t.item()
    return contract(raised, t, [(a, a) for a in range(t.rank)]).item()
