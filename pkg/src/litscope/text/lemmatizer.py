"""Coarse rule-based POS tagging and suffix lemmatization.

Deliberately lightweight: a closed-class word list, a small irregular
lexicon, and suffix rules. Nouns get plural -> singular, verbs get
inflection -> base; everything else passes through. The rules are
idempotent, so re-lemmatizing output is a no-op.
"""

from __future__ import annotations

NOUN = "noun"
VERB = "verb"
OTHER = "other"

VOWELS = set("aeiou")

# Function words: never lemmatized, tagged OTHER.
CLOSED_CLASS = frozenset(
    """
    a an the this that these those some any each every no
    i you he she it we they me him her us them
    my your his its our their
    in on at by for with from into onto over under between through during
    of to as via per
    and or but nor so yet if then than because while although
    is are was were be been being am
    has have had having do does did done
    will would can could may might must shall should
    not
    """.split()
)

AUXILIARIES = frozenset(
    "is are was were be been being am has have had do does did "
    "will would can could may might must shall should to".split()
)

SUBJECT_PRONOUNS = frozenset("i you he she it we they".split())

# Irregular plurals common in scientific prose.
IRREGULAR_NOUNS = {
    "analyses": "analysis",
    "axes": "axis",
    "children": "child",
    "criteria": "criterion",
    "hypotheses": "hypothesis",
    "indices": "index",
    "matrices": "matrix",
    "maxima": "maximum",
    "men": "man",
    "minima": "minimum",
    "optima": "optimum",
    "people": "person",
    "phenomena": "phenomenon",
    "spectra": "spectrum",
    "theses": "thesis",
    "vertices": "vertex",
    "women": "woman",
}

# Irregular verb inflections -> base.
IRREGULAR_VERBS = {
    "began": "begin",
    "begun": "begin",
    "built": "build",
    "came": "come",
    "chose": "choose",
    "chosen": "choose",
    "drew": "draw",
    "drawn": "draw",
    "fell": "fall",
    "found": "find",
    "gave": "give",
    "given": "give",
    "grew": "grow",
    "grown": "grow",
    "held": "hold",
    "kept": "keep",
    "knew": "know",
    "known": "know",
    "led": "lead",
    "made": "make",
    "met": "meet",
    "ran": "run",
    "rose": "rise",
    "saw": "see",
    "seen": "see",
    "showed": "show",
    "shown": "show",
    "took": "take",
    "taken": "take",
    "went": "go",
    "wrote": "write",
    "written": "write",
}


def tag_tokens(tokens: list[str]) -> list[str]:
    """One coarse POS tag per token, using only the previous token."""
    tags = []
    previous = ""
    for token in tokens:
        if token in CLOSED_CLASS:
            tags.append(OTHER)
        elif token in IRREGULAR_VERBS:
            tags.append(VERB)
        elif previous in AUXILIARIES or previous in SUBJECT_PRONOUNS:
            tags.append(VERB)
        else:
            # Bare -ing/-ed forms read as nominals in technical text
            # ("machine learning", "weighted graph"), so default to noun.
            tags.append(NOUN)
        previous = token
    return tags


def lemmatize(token: str, tag: str) -> str:
    if tag == VERB:
        return _verb_base(token)
    if tag == NOUN:
        return _singular(token)
    return token


def _has_vowel(text: str) -> bool:
    return any(ch in VOWELS for ch in text)


def _singular(token: str) -> str:
    if token in IRREGULAR_NOUNS:
        return IRREGULAR_NOUNS[token]
    if len(token) >= 5 and token.endswith("ies"):
        return token[:-3] + "y"
    for suffix in ("xes", "ches", "shes", "sses", "zes", "oes"):
        if token.endswith(suffix) and len(token) >= len(suffix) + 2:
            return token[:-2]
    if token.endswith(("ss", "us", "is")):
        return token
    if token.endswith("s") and len(token) >= 4 and _has_vowel(token[:-1]):
        return token[:-1]
    return token


def _verb_base(token: str) -> str:
    if token in IRREGULAR_VERBS:
        return IRREGULAR_VERBS[token]
    if len(token) >= 5 and token.endswith("ies"):
        return token[:-3] + "y"
    if token.endswith("ing") and len(token) >= 6:
        return _repair_stem(token[:-3])
    if token.endswith("ied") and len(token) >= 5:
        return token[:-3] + "y"
    if token.endswith("ed") and len(token) >= 5:
        return _repair_stem(token[:-2])
    if token.endswith("es") and len(token) >= 5 and token[-3] in "sxzo":
        return token[:-2]
    if token.endswith("ches") or token.endswith("shes"):
        return token[:-2]
    if token.endswith("s") and not token.endswith("ss") and len(token) >= 4:
        return token[:-1]
    return token


def _repair_stem(stem: str) -> str:
    """Porter-style cleanup after stripping -ed / -ing."""
    if stem.endswith("i"):
        return stem[:-1] + "y"
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in "lsz"
        and stem[-1] not in VOWELS
    ):
        return stem[:-1]
    if stem.endswith(("at", "bl", "iz")):
        return stem + "e"
    if _short_cvc(stem):
        return stem + "e"
    return stem


def _short_cvc(stem: str) -> bool:
    if len(stem) != 3:
        return False
    c1, v, c2 = stem
    return (
        c1 not in VOWELS
        and v in VOWELS
        and c2 not in VOWELS
        and c2 not in "wxy"
    )
