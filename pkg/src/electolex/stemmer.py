"""Suffix-stripping stemmer for Spanish (Snowball algorithm).

Reduces inflected Spanish words to their root form by removing attached
pronouns, standard derivational suffixes, verb endings and residual vowels,
then dropping acute accents. Region boundaries (RV, R1, R2) are computed
once per word and all suffix conditions are tested against them.

The whole module is pure functions over strings, so it is reentrant and
safe to call from multiple threads.
"""

VOWELS = frozenset("aeiouáéíóúü")

# Removing an acute accent is the final step of the algorithm; diaeresis
# (ü) and ñ are left alone.
_DEACCENT = str.maketrans("áéíóú", "aeiou")


def _mark_regions(word: str) -> tuple[int, int, int]:
    """Return (rv, r1, r2) as start indices; len(word) when a region is empty.

    R1 is the region after the first non-vowel following a vowel, R2 the
    same definition applied inside R1. RV depends on the first two letters:
    after the next vowel when the second letter is a consonant, after the
    next consonant when the first two letters are vowels, and after the
    third letter in the consonant-vowel case.
    """
    n = len(word)

    def after_next(start: int, in_vowels: bool) -> int:
        i = start
        while i < n and (word[i] in VOWELS) != in_vowels:
            i += 1
        return i + 1 if i < n else n

    if n < 2:
        rv = n
    elif word[1] not in VOWELS:
        rv = after_next(2, True)
    elif word[0] in VOWELS:
        rv = after_next(2, False)
    else:
        rv = 3 if n >= 3 else n

    def r_after(start: int) -> int:
        i = start
        while i < n and word[i] not in VOWELS:
            i += 1
        while i < n and word[i] in VOWELS:
            i += 1
        return i + 1 if i < n else n

    r1 = r_after(0)
    r2 = r_after(r1)
    return rv, r1, r2


def _longest_first(suffixes) -> tuple[str, ...]:
    # Equal-length suffixes are mutually exclusive on any given tail, so
    # sorting by length alone reproduces longest-match semantics.
    return tuple(sorted(suffixes, key=len, reverse=True))


# Step 0: attached pronouns, removed after selected gerund/infinitive
# endings. Accented endings lose their accent in the same step.
_PRONOUNS = _longest_first(
    ["me", "se", "sela", "selo", "selas", "selos",
     "la", "le", "lo", "las", "les", "los", "nos"]
)
_PRON_ACCENTED = {"iéndo": "iendo", "ándo": "ando", "ár": "ar", "ér": "er", "ír": "ir"}
_PRON_PLAIN = frozenset(["ando", "iendo", "ar", "er", "ir"])
_PRON_ENDINGS = _longest_first(set(_PRON_ACCENTED) | _PRON_PLAIN | {"yendo"})

# Step 1: standard (mostly derivational) suffixes, keyed by action:
#   1 delete in R2
#   2 delete in R2, then a preceding "ic" in R2
#   3 replace with "log" in R2
#   4 replace with "u" in R2
#   5 replace with "ente" in R2
#   6 "amente": delete in R1, then "iv" (then "at") or one of os/ic/ad in R2
#   7 "mente": delete in R2, then ante/able/ible in R2
#   8 delete in R2, then abil/ic/iv in R2
#   9 delete in R2, then "at" in R2
_STEP1_ACTIONS = {}
for _sufs, _act in [
    (("ica", "icas", "ico", "icos", "ismo", "ismos", "osa", "osas", "oso",
      "osos", "anza", "anzas", "ista", "istas", "able", "ables", "ible",
      "ibles", "amiento", "amientos", "imiento", "imientos"), 1),
    (("adora", "adoras", "ador", "adores", "ación", "aciones", "ante",
      "antes", "ancia", "ancias"), 2),
    (("logía", "logías"), 3),
    (("ución", "uciones"), 4),
    (("encia", "encias"), 5),
    (("amente",), 6),
    (("mente",), 7),
    (("idad", "idades"), 8),
    (("iva", "ivo", "ivas", "ivos"), 9),
]:
    for _s in _sufs:
        _STEP1_ACTIONS[_s] = _act
_STEP1_SUFFIXES = _longest_first(_STEP1_ACTIONS)

# Step 2a: verb suffixes beginning with y, valid only after a u.
_STEP2A_SUFFIXES = _longest_first(
    ["ya", "ye", "yan", "yen", "yeron", "yendo", "yo", "yó",
     "yas", "yes", "yais", "yamos"]
)

# Step 2b: remaining verb suffixes. The first group additionally strips a
# preceding u when it follows g (sigue -> sig).
_STEP2B_GU = frozenset(["en", "es", "éis", "emos"])
_STEP2B_SUFFIXES = _longest_first([
    "aba", "ada", "ida", "ara", "iera", "ía", "aría", "ería", "iría",
    "ad", "ed", "id", "ase", "iese", "aste", "iste", "an", "aban", "aran",
    "ieran", "ían", "arían", "erían", "irían", "en", "asen", "iesen",
    "aron", "ieron", "arán", "erán", "irán", "ado", "ido", "ando",
    "iendo", "ar", "er", "ir", "as", "abas", "adas", "idas", "aras",
    "ieras", "ías", "arías", "erías", "irías", "es", "ases", "ieses",
    "abais", "arais", "ierais", "íais", "aríais", "eríais", "iríais",
    "aseis", "ieseis", "asteis", "isteis", "áis", "éis", "aréis",
    "eréis", "iréis", "ados", "idos", "amos", "ábamos", "áramos",
    "iéramos", "íamos", "aríamos", "eríamos", "iríamos", "emos",
    "aremos", "eremos", "iremos", "ásemos", "iésemos", "imos", "arás",
    "erás", "irás", "ís", "ará", "erá", "irá", "aré", "eré", "iré", "ió",
])

# Step 3: residual single vowels; e/é may also take a preceding u after g.
_STEP3_SUFFIXES = _longest_first(["os", "a", "o", "á", "í", "ó", "e", "é"])


def _step0(word: str, rv: int) -> str:
    for pron in _PRONOUNS:
        if not word.endswith(pron):
            continue
        base = word[: len(word) - len(pron)]
        for end in _PRON_ENDINGS:
            if not base.endswith(end):
                continue
            start = len(base) - len(end)
            if start < rv:
                return word
            if end in _PRON_ACCENTED:
                return base[:start] + _PRON_ACCENTED[end]
            if end == "yendo":
                return base if base[:start].endswith("u") else word
            return base
        return word
    return word


def _step1(word: str, r1: int, r2: int) -> str | None:
    """Apply the standard-suffix step; None when it removed nothing."""
    for suf in _STEP1_SUFFIXES:
        if not word.endswith(suf):
            continue
        start = len(word) - len(suf)
        act = _STEP1_ACTIONS[suf]
        if act == 6:
            if start < r1:
                return None
            base = word[:start]
            if base.endswith("iv") and len(base) - 2 >= r2:
                base = base[:-2]
                if base.endswith("at") and len(base) - 2 >= r2:
                    base = base[:-2]
            elif base.endswith(("os", "ic", "ad")) and len(base) - 2 >= r2:
                base = base[:-2]
            return base
        if start < r2:
            return None
        base = word[:start]
        if act == 2:
            if base.endswith("ic") and len(base) - 2 >= r2:
                base = base[:-2]
            return base
        if act == 3:
            return base + "log"
        if act == 4:
            return base + "u"
        if act == 5:
            return base + "ente"
        if act == 7:
            for pre in ("ante", "able", "ible"):
                if base.endswith(pre) and len(base) - len(pre) >= r2:
                    return base[: len(base) - len(pre)]
            return base
        if act == 8:
            for pre in ("abil", "ic", "iv"):
                if base.endswith(pre) and len(base) - len(pre) >= r2:
                    return base[: len(base) - len(pre)]
            return base
        if act == 9:
            if base.endswith("at") and len(base) - 2 >= r2:
                return base[:-2]
            return base
        return base  # act == 1
    return None


def _step2a(word: str, rv: int) -> str | None:
    for suf in _STEP2A_SUFFIXES:
        if not word.endswith(suf):
            continue
        start = len(word) - len(suf)
        if start < rv:
            # Suffix sticks out of RV: treat as unmatched, shorter ones
            # may still apply.
            continue
        if word[:start].endswith("u"):
            return word[:start]
        return None
    return None


def _step2b(word: str, rv: int) -> str:
    for suf in _STEP2B_SUFFIXES:
        if not word.endswith(suf):
            continue
        start = len(word) - len(suf)
        if start < rv:
            continue
        base = word[:start]
        if suf in _STEP2B_GU and base.endswith("gu"):
            return base[:-1]
        return base
    return word


def _step3(word: str, rv: int) -> str:
    for suf in _STEP3_SUFFIXES:
        if not word.endswith(suf):
            continue
        start = len(word) - len(suf)
        if start < rv:
            return word
        base = word[:start]
        if suf in ("e", "é"):
            # The u of a preceding gu goes too, but only from inside RV.
            if base.endswith("gu") and len(base) - 1 >= rv:
                return base[:-1]
        return base
    return word


def stem(word: str) -> str:
    """Stem one lowercase Spanish word; unstemmable tokens pass through."""
    if not word:
        return word
    rv, r1, r2 = _mark_regions(word)
    word = _step0(word, rv)
    replaced = _step1(word, r1, r2)
    if replaced is None:
        replaced = _step2a(word, rv)
        if replaced is None:
            replaced = _step2b(word, rv)
    word = replaced
    word = _step3(word, rv)
    return word.translate(_DEACCENT)
