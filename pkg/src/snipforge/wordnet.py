"""Princeton WordNet 3.0 database parser and taxonomy operations.

Loads the ``data.{noun,verb,adj,adv}`` / ``index.{noun,verb,adj,adv}`` file
pairs from a directory and answers sense lookups, typed relation traversals,
shortest-path depth, least common subsumer and Wu-Palmer similarity queries.
The loaded database is immutable and safe for concurrent readers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path

POS_TAGS = ("noun", "verb", "adj", "adv")

# ss_type / pointer pos letters -> canonical POS tag ("s" = adjective satellite)
_POS_LETTER = {"n": "noun", "v": "verb", "a": "adj", "s": "adj", "r": "adv"}


class WordNetError(Exception):
    """Base error for lexical-database problems."""


class LoadError(WordNetError):
    """A required database file is missing or unreadable."""


class ParseError(WordNetError):
    """A database record could not be parsed."""


class IntegrityError(WordNetError):
    """The parsed database violates a structural invariant."""


class UnknownSenseError(WordNetError, KeyError):
    """A SenseId does not exist in the loaded database."""


class RelationType(enum.Enum):
    SYNONYMY = "synonymy"
    HYPERNYMY = "hypernymy"
    HYPONYMY = "hyponymy"
    CO_HYPONYMY = "co_hyponymy"
    MERONYMY = "meronymy"
    HOLONYMY = "holonymy"


# WordNet pointer symbols we keep; everything else (antonyms, entailment,
# instance hypernyms, ...) is ignored.  Co-hyponymy is derived, never stored.
_POINTER_MAP = {
    "@": RelationType.HYPERNYMY,
    "~": RelationType.HYPONYMY,
    "%p": RelationType.MERONYMY,
    "%m": RelationType.MERONYMY,
    "%s": RelationType.MERONYMY,
    "#p": RelationType.HOLONYMY,
    "#m": RelationType.HOLONYMY,
    "#s": RelationType.HOLONYMY,
}


@dataclass(frozen=True, order=True)
class SenseId:
    """(pos, offset) pair uniquely identifying a synset."""

    pos: str
    offset: int

    def __str__(self) -> str:
        return f"{self.pos}:{self.offset:08d}"


@dataclass
class Synset:
    id: SenseId
    lemmas: list[str]
    gloss: str
    relations: list[tuple[RelationType, SenseId]] = field(default_factory=list)

    def targets(self, rel: RelationType) -> list[SenseId]:
        return [t for r, t in self.relations if r is rel]


class LexicalDb:
    """Immutable in-memory lexical database.

    ``lemma_index`` keeps senses in database sense order (index-file order,
    supplemented with any data-file lemmas the index omits).
    """

    def __init__(
        self,
        synsets: dict[SenseId, Synset],
        lemma_index: dict[tuple[str, str], list[SenseId]],
    ):
        self.synsets = synsets
        self.lemma_index = lemma_index
        self.depth_cache: dict[SenseId, int] = {}
        self._compute_depths()

    # -- construction helpers -------------------------------------------------

    def _compute_depths(self) -> None:
        """Shortest hypernym-path depth, with a virtual root (depth 1) above
        every hypernym-less synset.  Raises IntegrityError on hypernym cycles.
        """
        WHITE, GRAY, BLACK = 0, 1, 2
        color = dict.fromkeys(self.synsets, WHITE)
        for start in self.synsets:
            if color[start] == BLACK:
                continue
            stack = [(start, False)]
            while stack:
                sid, done = stack.pop()
                if done:
                    parents = self.synsets[sid].targets(RelationType.HYPERNYMY)
                    if parents:
                        self.depth_cache[sid] = 1 + min(
                            self.depth_cache[p] for p in parents
                        )
                    else:
                        self.depth_cache[sid] = 2
                    color[sid] = BLACK
                    continue
                if color[sid] == BLACK:
                    continue
                if color[sid] == GRAY:
                    raise IntegrityError(f"hypernym cycle through {sid}")
                color[sid] = GRAY
                stack.append((sid, True))
                for parent in self.synsets[sid].targets(RelationType.HYPERNYMY):
                    if color[parent] == GRAY:
                        raise IntegrityError(f"hypernym cycle through {parent}")
                    if color[parent] == WHITE:
                        stack.append((parent, False))

    # -- queries --------------------------------------------------------------

    def synset(self, s: SenseId) -> Synset:
        try:
            return self.synsets[s]
        except KeyError:
            raise UnknownSenseError(f"unknown sense {s}") from None


def _parse_data_line(line: str, pos: str, lineno: int, filename: str):
    """Parse one data-file record into (Synset, pointer targets)."""
    if "|" in line:
        body, _, gloss = line.partition("|")
        gloss = gloss.strip()
    else:
        body, gloss = line, ""
    tokens = body.split()
    try:
        offset = int(tokens[0])
        ss_type = tokens[2]
        w_cnt = int(tokens[3], 16)
        idx = 4
        lemmas = []
        for _ in range(w_cnt):
            word = tokens[idx]
            # strip adjective syntactic markers like "(p)"
            if word.endswith(")") and "(" in word:
                word = word[: word.index("(")]
            lemmas.append(word.lower())
            idx += 2  # skip lex_id
        p_cnt = int(tokens[idx])
        idx += 1
        relations: list[tuple[RelationType, SenseId]] = []
        for _ in range(p_cnt):
            symbol, tgt_offset, tgt_pos, _src = tokens[idx : idx + 4]
            idx += 4
            rel = _POINTER_MAP.get(symbol)
            if rel is not None:
                relations.append(
                    (rel, SenseId(_POS_LETTER[tgt_pos], int(tgt_offset)))
                )
        if not lemmas:
            raise ValueError("no lemmas")
        sid = SenseId(_POS_LETTER[ss_type], offset)
        if sid.pos != pos:
            raise ValueError(f"ss_type {ss_type!r} in {pos} file")
        return Synset(sid, lemmas, gloss, relations)
    except (IndexError, ValueError, KeyError) as exc:
        raise ParseError(f"{filename}:{lineno}: malformed record ({exc})") from None


def load_lexical_db(directory_path: str | Path) -> LexicalDb:
    """Load a WordNet 3.0 format database directory.

    Expects ``data.<pos>`` and ``index.<pos>`` for each of noun/verb/adj/adv.
    Raises LoadError for missing files, ParseError for malformed records and
    IntegrityError for dangling relation targets or hypernym cycles.
    """
    directory = Path(directory_path)
    suffix = {"noun": "noun", "verb": "verb", "adj": "adj", "adv": "adv"}
    synsets: dict[SenseId, Synset] = {}
    lemma_index: dict[tuple[str, str], list[SenseId]] = {}

    for pos, suf in suffix.items():
        data_path = directory / f"data.{suf}"
        if not data_path.is_file():
            raise LoadError(f"missing database file: {data_path}")
        with open(data_path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if line.startswith("  ") or not line.strip():
                    continue  # license header / blank
                syn = _parse_data_line(line.rstrip("\n"), pos, lineno, str(data_path))
                synsets[syn.id] = syn

    for pos, suf in suffix.items():
        index_path = directory / f"index.{suf}"
        if not index_path.is_file():
            raise LoadError(f"missing database file: {index_path}")
        with open(index_path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if line.startswith("  ") or not line.strip():
                    continue
                tokens = line.split()
                try:
                    lemma = tokens[0].lower()
                    p_cnt = int(tokens[3])
                    offsets = tokens[4 + p_cnt + 2 :]
                    senses = [SenseId(pos, int(off)) for off in offsets]
                    if not senses:
                        raise ValueError("no synset offsets")
                except (IndexError, ValueError) as exc:
                    raise ParseError(
                        f"{index_path}:{lineno}: malformed record ({exc})"
                    ) from None
                lemma_index.setdefault((lemma, pos), []).extend(senses)

    # supplement the index with any data-file lemmas it omits
    for sid, syn in synsets.items():
        for lemma in syn.lemmas:
            bucket = lemma_index.setdefault((lemma, sid.pos), [])
            if sid not in bucket:
                bucket.append(sid)

    for key, senses in lemma_index.items():
        for sid in senses:
            if sid not in synsets:
                raise IntegrityError(f"index entry {key} references unknown {sid}")
    for syn in synsets.values():
        for _, target in syn.relations:
            if target not in synsets:
                raise IntegrityError(
                    f"synset {syn.id} has dangling relation target {target}"
                )

    return LexicalDb(synsets, lemma_index)


def lookup_lemma(db: LexicalDb, lemma: str, pos: str | None = None) -> list[SenseId]:
    """All senses of ``lemma`` in database sense order; [] when absent."""
    if pos is not None:
        return list(db.lemma_index.get((lemma, pos), []))
    out: list[SenseId] = []
    for p in POS_TAGS:
        out.extend(db.lemma_index.get((lemma, p), []))
    return out


def related_senses(
    db: LexicalDb, s: SenseId, rels: set[RelationType]
) -> set[SenseId]:
    """Union of direct relation targets of ``s`` for the requested types.

    Co-hyponymy is derived: hyponyms of each direct hypernym, minus ``s``.
    Synonymy contributes ``s`` itself (same-synset membership is a lemma test).
    """
    syn = db.synset(s)
    out: set[SenseId] = set()
    for rel in rels:
        if rel is RelationType.SYNONYMY:
            out.add(s)
        elif rel is RelationType.CO_HYPONYMY:
            for parent in syn.targets(RelationType.HYPERNYMY):
                out.update(db.synset(parent).targets(RelationType.HYPONYMY))
            out.discard(s)
        else:
            out.update(syn.targets(rel))
    return out


def depth(db: LexicalDb, s: SenseId) -> int:
    """1 + shortest hypernym path length to the virtual root (root depth 1)."""
    db.synset(s)
    return db.depth_cache[s]


def _ancestors(db: LexicalDb, s: SenseId) -> set[SenseId]:
    """s plus all transitive hypernyms."""
    seen = {s}
    frontier = [s]
    while frontier:
        cur = frontier.pop()
        for parent in db.synset(cur).targets(RelationType.HYPERNYMY):
            if parent not in seen:
                seen.add(parent)
                frontier.append(parent)
    return seen


def lcs(db: LexicalDb, a: SenseId, b: SenseId) -> SenseId | None:
    """Deepest common hypernym ancestor (inclusive); None across POS or when
    the only shared ancestor is the virtual root.  Ties break on smaller offset.
    """
    db.synset(a)
    db.synset(b)
    if a.pos != b.pos:
        return None
    common = _ancestors(db, a) & _ancestors(db, b)
    if not common:
        return None
    return max(common, key=lambda s: (db.depth_cache[s], -s.offset))


def wu_palmer(db: LexicalDb, a: SenseId, b: SenseId) -> float:
    """2*depth(lcs) / (depth(a)+depth(b)); 0.0 when there is no LCS."""
    sub = lcs(db, a, b)
    if sub is None:
        return 0.0
    return 2.0 * db.depth_cache[sub] / (db.depth_cache[a] + db.depth_cache[b])
