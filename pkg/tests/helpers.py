"""Independent brute-force reference implementations used as test oracles.

Nothing here shares code with the library's enumeration or verification
paths: tableaux are generated by filtering the full assignment space with
the definitions, and partitions are handled with plain tuples.
"""

import itertools

from lgrass import SetValuedShiftedTableau


def brute_force_tableaux(lam, mu, set_valued=True):
    """All semistandard (set-valued) shifted tableaux of shape lam on mu.

    Generates every assignment of nonempty subsets of {1..len(mu)} to the
    boxes and filters by the semistandard and on-mu definitions directly.
    """
    h = len(mu)
    boxes = [(r, c) for r, part in enumerate(lam, start=1)
             for c in range(r, r + part)]
    if h == 0:
        return [] if boxes else [SetValuedShiftedTableau(())]
    pool = []
    for size in range(1, h + 1):
        pool.extend(itertools.combinations(range(1, h + 1), size))
    found = []
    for assignment in itertools.product(pool, repeat=len(boxes)):
        content = dict(zip(boxes, assignment))
        if not _semistandard(content) or not _on_mu(content, mu):
            continue
        if not set_valued and any(len(v) > 1 for v in assignment):
            continue
        rows = [tuple(content[(r, c)] for c in range(r, r + part))
                for r, part in enumerate(lam, start=1)]
        found.append(SetValuedShiftedTableau(rows))
    return sorted(found, key=lambda t: t.rows)


def _semistandard(content):
    for (r, c), box in content.items():
        right = content.get((r, c + 1))
        if right is not None and max(box) > min(right):
            return False
        below = content.get((r + 1, c))
        if below is not None and max(box) >= min(below):
            return False
    return True


def _on_mu(content, mu):
    for (r, c), box in content.items():
        for x in box:
            if x > len(mu) or x + c - r > mu[x - 1] + x - 1:
                return False
    return True


def isotropic_subsets(n):
    """I_n by filtering all n-subsets of {1..2n} with the defining rule."""
    out = []
    for values in itertools.combinations(range(1, 2 * n + 1), n):
        if all((k in values) != (2 * n + 1 - k in values)
               for k in range(1, 2 * n + 1)):
            out.append(values)
    return sorted(out)
