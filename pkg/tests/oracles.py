"""Brute-force reference computations on raw grade tuples.

These deliberately avoid the library's FuzzySet comparisons so they can
serve as an independent check.
"""


def _le(c, d):
    return all(x <= y for x, y in zip(c, d))


def _lt(c, d):
    return _le(c, d) and tuple(c) != tuple(d)


def brute_min(columns):
    cols = {tuple(c) for c in columns}
    nonzero = [c for c in cols if any(x != 0 for x in c)]
    return {c for c in nonzero if not any(_lt(d, c) for d in nonzero)}


def brute_max(columns):
    cols = {tuple(c) for c in columns}
    nonunit = [c for c in cols if any(x != 1 for x in c)]
    return {c for c in nonunit if not any(_lt(c, d) for d in nonunit)}


def brute_approx_internal(fcols, gcols):
    fcols = [tuple(c) for c in fcols if any(x != 0 for x in c)]
    for d in gcols:
        if any(x != 0 for x in d) and not any(_le(c, d) for c in fcols):
            return False
    return True


def brute_approx_external(fcols, gcols):
    fcols = [tuple(c) for c in fcols if any(x != 1 for x in c)]
    for d in gcols:
        if any(x != 1 for x in d) and not any(_le(d, c) for c in fcols):
            return False
    return True


def grade_columns(f):
    """Image grades of a soft set in universe order."""
    return [img.grades for img in f.images]
