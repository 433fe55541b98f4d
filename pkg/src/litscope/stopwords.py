"""Bundled English stopword list.

Applied at keyword-labeling time (and opt-in for the TF-IDF vectorizer);
embeddings always see the full token stream.
"""

from __future__ import annotations

ENGLISH_STOPWORDS = frozenset(
    """
    a about above after again against all also am an and any are as at
    be because been before being below between both but by
    can cannot could
    did do does doing down during
    each
    few for from further
    had has have having he her here hers herself him himself his how
    i if in into is it its itself
    just
    may me might more most must my myself
    no nor not now
    of off on once only or other our ours ourselves out over own
    per
    same she should so some such
    than that the their theirs them themselves then there these they this
    those through to too
    under until up upon us
    very via
    was we were what when where which while who whom why will with within
    without would
    you your yours yourself yourselves
    """.split()
)
