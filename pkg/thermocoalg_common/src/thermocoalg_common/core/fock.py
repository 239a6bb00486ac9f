"""
Truncated bosonic Fock spaces and dense operators on them.

A single mode is truncated at n_max, giving the basis |0>, ..., |n_max>. The
doubled space is the tensor product of a plain copy and a tilde copy, with
basis |n, m~> stored at flat index n * (n_max + 1) + m.

Truncation only breaks the canonical commutation relations on the top level:
[a, a+] = diag(1, ..., 1, -n_max). Checks that depend on the infinite algebra
are therefore made on the interior block, see interior_indices().
"""
from enum import Enum

import numpy as np
import scipy.linalg
from scipy.sparse.linalg import expm_multiply
from wrapt import synchronized

from thermocoalg_common.core.errors import DimensionError, NormalizationError, ValidationError
from thermocoalg_common.tools.decorators import finite_entries

Mode = Enum('Mode', 'Plain Tilde')

NORMALIZATION_TOL = 1e-12


class FockSpace(object):
    """
    @brief Truncated state space of one mode, or of a mode and its tilde copy

    >>> FockSpace(3, 2).dim
    16
    """
    __slots__ = ['_n_max', '_mode_count']

    def __init__(self, n_max, mode_count=1):
        if isinstance(n_max, bool) or not isinstance(n_max, (int, np.integer)) or n_max < 1:
            raise ValidationError("n_max", "must be an integer >= 1, got {!r}".format(n_max))
        if mode_count not in (1, 2):
            raise ValidationError("mode_count", "must be 1 (single) or 2 (doubled), got {!r}".format(mode_count))
        self._n_max = int(n_max)
        self._mode_count = mode_count

    @staticmethod
    def single(n_max):
        return FockSpace(n_max, 1)

    @staticmethod
    def doubled(n_max):
        return FockSpace(n_max, 2)

    @property
    def n_max(self):
        return self._n_max

    @property
    def mode_count(self):
        return self._mode_count

    @property
    def single_dim(self):
        return self._n_max + 1

    @property
    def dim(self):
        return self.single_dim ** self._mode_count

    def isDoubled(self):
        return self._mode_count == 2

    def singleSpace(self):
        return FockSpace(self._n_max, 1)

    def doubledSpace(self):
        return FockSpace(self._n_max, 2)

    def index(self, n, m=None):
        """
        @brief Flat index of |n> (single) or |n, m~> (doubled)
        """
        if self.isDoubled():
            if m is None:
                raise DimensionError("doubled space needs both occupations")
            return n * self.single_dim + m
        return n

    def pairIndices(self):
        """
        @brief Flat indices of the pair sector |n, n~>, n = 0..n_max
        """
        if not self.isDoubled():
            raise DimensionError("pair sector needs a doubled space")
        return np.arange(self.single_dim) * (self.single_dim + 1)

    def __eq__(self, other):
        return isinstance(other, FockSpace) and self._n_max == other._n_max and self._mode_count == other._mode_count

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._n_max, self._mode_count))

    def printState(self):
        return "FockSpace(n_max={}, {})".format(self._n_max, "doubled" if self.isDoubled() else "single")

    __repr__ = printState


class FockOperator(object):
    """
    @brief Dense complex matrix bound to a FockSpace

    Entries are copied on construction and frozen, so operators can be
    shared between threads.
    """
    __slots__ = ['_space', '_entries']
    __array_ufunc__ = None

    def __init__(self, space, entries):
        entries = np.array(entries, dtype=complex)
        if entries.shape != (space.dim, space.dim):
            raise DimensionError("entries of shape {} do not fit {} (dim {})".format(
                entries.shape, space.printState(), space.dim))
        entries.setflags(write=False)
        self._space = space
        self._entries = entries

    @property
    def space(self):
        return self._space

    @property
    def entries(self):
        return self._entries

    @property
    def shape(self):
        return self._entries.shape

    def adjoint(self):
        return FockOperator(self._space, self._entries.conj().T)

    @property
    def H(self):
        return self.adjoint()

    def _check(self, other):
        if not isinstance(other, FockOperator):
            raise TypeError("expected FockOperator, got {}".format(type(other).__name__))
        if other.space != self._space:
            raise DimensionError("operators live on different spaces: {} vs {}".format(
                self._space.printState(), other.space.printState()))

    def __add__(self, other):
        self._check(other)
        return FockOperator(self._space, self._entries + other.entries)

    def __sub__(self, other):
        self._check(other)
        return FockOperator(self._space, self._entries - other.entries)

    def __neg__(self):
        return FockOperator(self._space, -self._entries)

    def __mul__(self, scalar):
        if isinstance(scalar, FockOperator):
            raise TypeError("use @ for operator products")
        return FockOperator(self._space, self._entries * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return FockOperator(self._space, self._entries / scalar)

    def __matmul__(self, other):
        if isinstance(other, FockOperator):
            self._check(other)
            return FockOperator(self._space, self._entries @ other.entries)
        return self.apply(other)

    def apply(self, state):
        state = np.asarray(state)
        if state.shape != (self._space.dim,):
            raise DimensionError("state of shape {} does not fit {}".format(state.shape, self._space.printState()))
        return self._entries @ state

    def power(self, k):
        return FockOperator(self._space, np.linalg.matrix_power(self._entries, k))

    def norm(self):
        """Frobenius norm."""
        return float(np.linalg.norm(self._entries))

    def distance(self, other):
        self._check(other)
        return float(np.max(np.abs(self._entries - other.entries))) if self._entries.size else 0.0

    def isHermitian(self, tol=0.0):
        return float(np.max(np.abs(self._entries - self._entries.conj().T))) <= tol

    def interiorBlock(self, margin=1):
        idx = interior_indices(self._space, margin)
        return self._entries[np.ix_(idx, idx)]

    def printState(self):
        return "FockOperator({}, norm={:.6g})".format(self._space.printState(), self.norm())

    __repr__ = printState


_LADDER_CACHE = {}


@synchronized
def _ladder(n_max):
    """
    Single-mode annihilation matrix, a[n-1, n] = sqrt(n). Cached per n_max.
    """
    a = _LADDER_CACHE.get(n_max)
    if a is None:
        a = np.diag(np.sqrt(np.arange(1, n_max + 1, dtype=float)), k=1).astype(complex)
        a.setflags(write=False)
        _LADDER_CACHE[n_max] = a
    return a


def lift(op, which_mode=Mode.Plain):
    """
    @brief Embed a single-mode operator into the doubled space as op x I or I x op
    """
    space = op.space
    if space.isDoubled():
        raise DimensionError("lift expects a single-mode operator")
    eye = np.eye(space.single_dim)
    if which_mode == Mode.Plain:
        entries = np.kron(op.entries, eye)
    else:
        entries = np.kron(eye, op.entries)
    return FockOperator(space.doubledSpace(), entries)


def make_annihilator(space, which_mode=Mode.Plain):
    """
    @brief a (plain) or a~ = I x a (tilde) on the given space

    The adjoint of the result is the matching creation operator.
    """
    if which_mode == Mode.Tilde and not space.isDoubled():
        raise DimensionError("tilde annihilator requested on {}".format(space.printState()))
    a = FockOperator(space.singleSpace(), _ladder(space.n_max))
    if not space.isDoubled():
        return a
    return lift(a, which_mode)


def make_creator(space, which_mode=Mode.Plain):
    return make_annihilator(space, which_mode).adjoint()


def number_operator(space, which_mode=Mode.Plain):
    a = make_annihilator(space, which_mode)
    return a.adjoint() @ a


def identity(space):
    return FockOperator(space, np.eye(space.dim))


def zero(space):
    return FockOperator(space, np.zeros((space.dim, space.dim)))


def swap_operator(space):
    """
    @brief Permutation |n, m~> -> |m, n~> exchanging the tensor factors
    """
    if not space.isDoubled():
        raise DimensionError("swap needs a doubled space")
    d = space.single_dim
    n, m = np.divmod(np.arange(space.dim), d)
    entries = np.zeros((space.dim, space.dim))
    entries[m * d + n, n * d + m] = 1.0
    return FockOperator(space, entries)


def basis_state(space, n, m=None):
    state = np.zeros(space.dim, dtype=complex)
    state[space.index(n, m)] = 1.0
    return state


def commutator(x, y):
    """
    @brief [x, y] = xy - yx
    """
    x._check(y)
    return FockOperator(x.space, x.entries @ y.entries - y.entries @ x.entries)


def expectation(state, op):
    """
    @brief <state|op|state> for a state normalized to 1e-12
    """
    state = np.asarray(state, dtype=complex)
    norm = np.linalg.norm(state)
    if abs(norm - 1.0) > NORMALIZATION_TOL:
        raise NormalizationError("state norm is {!r}, expected 1".format(norm))
    return complex(np.vdot(state, op.apply(state)))


@finite_entries("op")
def exp_operator(op):
    """
    @brief Matrix exponential by scaling and squaring (scipy.linalg.expm)
    """
    return FockOperator(op.space, scipy.linalg.expm(op.entries))


@finite_entries("op")
def exp_apply(op, state):
    """
    @brief exp(op) applied to a vector, without forming the full exponential
    """
    state = np.asarray(state, dtype=complex)
    if state.shape != (op.space.dim,):
        raise DimensionError("state of shape {} does not fit {}".format(state.shape, op.space.printState()))
    return expm_multiply(op.entries, state)


def interior_indices(space, margin=1):
    """
    @brief Flat indices of {|n>: n <= n_max - margin} or {|n, m~>: n, m <= n_max - margin}
    """
    if margin < 0 or margin > space.n_max:
        raise ValidationError("margin", "must lie in [0, {}], got {}".format(space.n_max, margin))
    keep = np.arange(space.single_dim - margin)
    if not space.isDoubled():
        return keep
    return (keep[:, None] * space.single_dim + keep[None, :]).ravel()


def interior_block(op, margin=1):
    return op.interiorBlock(margin)


def interior_residual(x, y, margin=1):
    """
    @brief Largest entrywise deviation between two operators on the interior block
    """
    x._check(y)
    diff = x.interiorBlock(margin) - y.interiorBlock(margin)
    return float(np.max(np.abs(diff))) if diff.size else 0.0


def compress(op, indices):
    """
    @brief Restrict op to the coordinate subspace spanned by indices

    Raises DimensionError if op maps the subspace outside itself.
    """
    indices = np.asarray(indices)
    others = np.setdiff1d(np.arange(op.space.dim), indices)
    leak = op.entries[np.ix_(others, indices)]
    if leak.size and np.any(leak != 0):
        raise DimensionError("subspace is not invariant, leakage {:.3e}".format(float(np.max(np.abs(leak)))))
    return np.array(op.entries[np.ix_(indices, indices)])


def partial_trace_tilde(state, space):
    """
    @brief Reduced density matrix of the plain factor for a doubled pure state
    """
    if not space.isDoubled():
        raise DimensionError("partial trace needs a doubled space")
    psi = np.asarray(state, dtype=complex).reshape(space.single_dim, space.single_dim)
    return psi @ psi.conj().T
