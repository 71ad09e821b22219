"""The Freyd completion of a monoid, built independently of D(M).

An arrow a -> b of the arrow category of M is a commuting square (u, v)
with u b = a v; squares compose by (u, v)(u', v') = (u u', v v'). Two
squares a -> b are identified when a v = a v' and u b = u' b.
"""

import logging

from categories.core import check_arrow_cap
from categories.structures import FinCategory
from models.errors import InternalDisagreement, NotAMonoid
from semigroups.core import ideal_intersection_sizes
from semigroups.structures import FiniteSemigroup

logger = logging.getLogger(__name__)


def build_freyd_quotient(monoid: FiniteSemigroup) -> FinCategory:
    """Quotient of the arrow category of M by the square relation.

    Composition is computed on every pair of representatives and must not
    depend on the choice.

    Raises:
        NotAMonoid: if M has no identity
        BudgetExceeded: if the quotient would have more than SFS_ARROW_CAP arrows
        InternalDisagreement: if a composite class depends on representatives
    """
    if not monoid.is_monoid:
        raise NotAMonoid("the Freyd completion needs a monoid")
    # classes a -> b are indexed by the common value a v = u b in aM and Mb
    check_arrow_cap(int(ideal_intersection_sizes(monoid).sum()), what=f"Freyd quotient of {monoid!r}")
    t = monoid.table
    one = monoid.one

    # class key of a square (u, v): a -> b is (a v, u b)
    classes: dict[tuple[int, int, tuple[int, int]], list[tuple[int, int]]] = {}
    for a in monoid.elements:
        for b in monoid.elements:
            for u in monoid.elements:
                for v in monoid.elements:
                    if t[u][b] == t[a][v]:
                        classes.setdefault((a, b, (t[a][v], t[u][b])), []).append((u, v))

    keys = sorted(classes)
    index = {key: i for i, key in enumerate(keys)}
    outgoing: dict[int, list[tuple[int, int, tuple[int, int]]]] = {}
    for key in keys:
        outgoing.setdefault(key[0], []).append(key)

    compose: dict[tuple[int, int], int] = {}
    for first in keys:
        a, b, _ = first
        for second in outgoing.get(b, []):
            c = second[1]
            results = {
                (t[a][t[v][v2]], t[t[u][u2]][c])
                for u, v in classes[first]
                for u2, v2 in classes[second]
            }
            if len(results) != 1:
                raise InternalDisagreement(
                    f"composite of classes {first} and {second} depends on representatives"
                )
            compose[(index[first], index[second])] = index[(a, c, results.pop())]

    logger.debug("Freyd quotient of %r has %d classes", monoid, len(keys))
    return FinCategory(
        object_count=monoid.size,
        arrows=tuple((a, b) for a, b, _ in keys),
        identity_of=tuple(index[(a, a, (t[a][one], t[one][a]))] for a in monoid.elements),
        compose=compose,
        arrow_labels=tuple(f"{monoid.label(a)} [{monoid.label(x)}] {monoid.label(b)}" for a, b, (x, _) in keys),
        object_labels=monoid.labels,
    )
