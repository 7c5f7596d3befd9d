from amcmpy.core.exceptions import NoVariant


def score_variants(obj, ctx) -> list:
    """(index, score) for every variant whose guard the context satisfies."""
    return [
        (index, guard.score)
        for index, (guard, _) in enumerate(obj.variants)
        if guard.satisfied_by(ctx)
    ]

def resolve_variant(obj, ctx):
    """
    Select the payload of the first satisfied guard with the highest number
    of satisfied conditions. ``default`` is satisfied with score 0.
    """
    best = None
    for index, score in score_variants(obj, ctx):
        if best is None or score > best[1]:
            best = (index, score)
    if best is None:
        raise NoVariant(obj.path)
    return obj.variants[best[0]][1]
