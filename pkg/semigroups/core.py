"""Construction and elementary structure of finite semigroups."""

import logging
from collections.abc import Sequence

import numpy as np

from models.errors import BadIdentity, IndexOutOfRange, NonAssociative, NotIdempotent
from models.schemas import GreenClasses, GreenSide
from semigroups.structures import FiniteSemigroup

logger = logging.getLogger(__name__)


# =============================================================================
# Construction
# =============================================================================

def check_associativity(table: np.ndarray) -> tuple[int, int, int] | None:
    """Find a triple (a, b, c) with (ab)c != a(bc), or None.

    Works one left factor at a time so memory stays at n*n.
    """
    for a in range(table.shape[0]):
        left = table[table[a]]
        right = table[a][table]
        bad = np.argwhere(left != right)
        if bad.size:
            b, c = bad[0]
            return a, int(b), int(c)
    return None


def find_identity(table: np.ndarray) -> int | None:
    """First element acting as a two-sided identity, if any."""
    n = table.shape[0]
    ref = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], ref) and np.array_equal(table[:, e], ref):
            return e
    return None


def make_from_table(
    table: Sequence[Sequence[int]],
    identity: int | None = None,
    labels: Sequence[str] | None = None,
) -> FiniteSemigroup:
    """Validate a Cayley table and wrap it as a FiniteSemigroup.

    Args:
        table: Square grid; row i holds the products i*j
        identity: Declared identity element, detected automatically if omitted
        labels: Optional display strings, one per element

    Returns:
        The validated semigroup

    Raises:
        IndexOutOfRange: for a non-square grid or an entry outside 0..n-1
        NonAssociative: with the first failing triple
        BadIdentity: if the declared identity does not act as one
    """
    rows = [tuple(int(v) for v in row) for row in table]
    n = len(rows)
    if n == 0:
        raise IndexOutOfRange("a semigroup needs at least one element")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise IndexOutOfRange(f"row {i} has {len(row)} entries, expected {n}")
        for j, value in enumerate(row):
            if not 0 <= value < n:
                raise IndexOutOfRange(f"entry ({i}, {j}) = {value} is outside 0..{n - 1}")
    if labels is not None and len(labels) != n:
        raise IndexOutOfRange(f"expected {n} labels, got {len(labels)}")

    arr = np.array(rows, dtype=np.int64)
    witness = check_associativity(arr)
    if witness is not None:
        raise NonAssociative(*witness)

    if identity is None:
        identity = find_identity(arr)
    else:
        if not 0 <= identity < n:
            raise IndexOutOfRange(f"identity {identity} is outside 0..{n - 1}")
        ref = np.arange(n)
        if not (np.array_equal(arr[identity], ref) and np.array_equal(arr[:, identity], ref)):
            raise BadIdentity(f"element {identity} is not a two-sided identity")

    return FiniteSemigroup(
        size=n,
        table=tuple(rows),
        identity=identity,
        labels=tuple(labels) if labels is not None else None,
    )


def adjoin_identity(semigroup: FiniteSemigroup) -> FiniteSemigroup:
    """Return S^1: S itself if it has an identity, else S with a fresh one appended."""
    if semigroup.is_monoid:
        return semigroup
    n = semigroup.size
    rows = [list(row) + [i] for i, row in enumerate(semigroup.table)]
    rows.append(list(range(n + 1)))
    labels = None
    if semigroup.labels is not None:
        labels = list(semigroup.labels) + ["1"]
    return make_from_table(rows, identity=n, labels=labels)


# =============================================================================
# Green's Preorders
# =============================================================================

def left_ideal(semigroup: FiniteSemigroup, y: int) -> frozenset[int]:
    """S^1 y."""
    return frozenset(semigroup.array[:, y].tolist()) | {y}


def right_ideal(semigroup: FiniteSemigroup, y: int) -> frozenset[int]:
    """y S^1."""
    return frozenset(semigroup.array[y].tolist()) | {y}


def ideal_intersection_sizes(semigroup: FiniteSemigroup) -> np.ndarray:
    """counts[a, b] is the size of a S^1 intersected with S^1 b."""
    n = semigroup.size
    arr = semigroup.array
    rows = np.arange(n)
    right = np.zeros((n, n), dtype=bool)
    right[rows[:, None], arr] = True
    right[rows, rows] = True
    left = np.zeros((n, n), dtype=bool)
    left[np.broadcast_to(rows, (n, n)), arr] = True
    left[rows, rows] = True
    return right.astype(np.int64) @ left.T.astype(np.int64)


def green_leq(side: GreenSide, x: int, y: int, semigroup: FiniteSemigroup) -> bool:
    """Green's preorder: L tests x in S^1 y, R tests x in y S^1."""
    if x == y:
        return True
    if GreenSide(side) is GreenSide.L:
        return bool((semigroup.array[:, y] == x).any())
    return bool((semigroup.array[y] == x).any())


def _partition(keys: list) -> list[list[int]]:
    classes: dict = {}
    for x, key in enumerate(keys):
        classes.setdefault(key, []).append(x)
    return sorted(classes.values())


def green_classes(semigroup: FiniteSemigroup) -> GreenClasses:
    """L-, R-, H- and D-classes, each as a sorted list of sorted element lists."""
    lefts = [left_ideal(semigroup, x) for x in semigroup.elements]
    rights = [right_ideal(semigroup, x) for x in semigroup.elements]
    l_classes = _partition(lefts)
    r_classes = _partition(rights)
    h_classes = _partition(list(zip(lefts, rights)))

    # D is the join of L and R
    parent = list(semigroup.elements)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cls in l_classes + r_classes:
        root = find(cls[0])
        for x in cls[1:]:
            parent[find(x)] = root
    d_classes = _partition([find(x) for x in semigroup.elements])

    return GreenClasses(
        l_classes=l_classes,
        r_classes=r_classes,
        h_classes=h_classes,
        d_classes=d_classes,
    )


# =============================================================================
# Idempotents
# =============================================================================

def idempotents(semigroup: FiniteSemigroup) -> list[int]:
    """Elements e with ee = e, in index order."""
    arr = semigroup.array
    diag = arr[np.arange(semigroup.size), np.arange(semigroup.size)]
    return np.nonzero(diag == np.arange(semigroup.size))[0].tolist()


def is_idempotent(semigroup: FiniteSemigroup, e: int) -> bool:
    return semigroup.table[e][e] == e


def isomorphic_idempotents(e: int, f: int, semigroup: FiniteSemigroup) -> tuple[int, int] | None:
    """Find (x, y) with e = xy and f = yx.

    Raises:
        NotIdempotent: if e or f is not idempotent
    """
    for z in (e, f):
        if not is_idempotent(semigroup, z):
            raise NotIdempotent(f"element {semigroup.label(z)} is not idempotent")
    if e == f:
        return e, e

    arr = semigroup.array
    for x in semigroup.elements:
        for y in np.nonzero(arr[x] == e)[0].tolist():
            if arr[y, x] == f:
                return x, y
    return None
