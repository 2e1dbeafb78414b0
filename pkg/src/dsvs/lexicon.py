"""Lexicons: senses with tensor formulae, and the counts that build them.

A lexicon file is JSON:

    {
      "format": "dsvs-lexicon/1",
      "spaces": {"W": ["infant", "nappy", "pitch", "goal"],
                 "S": ["⊤", "⊥"]},
      "map": {"entity": "W", "sentence": "S"},
      "senses": [
        {"id": "baby#n", "word": "baby", "forms": ["babies"],
         "type": "e", "tensor": [34, 10, 0, 0]},
        {"id": "vomit#v", "word": "vomit", "forms": ["vomits"],
         "type": "et", "tensor": [[10, 2], [9, 3], [3, 9], [0, 12]]},
        {"id": "who#rel", "word": "who", "type": "link"}
      ]
    }

Tensor entries nest outermost-first: an "et" sense is a list of rows, one
per entity basis label, each row one entry per sentence basis label.  A
sense of type "link" carries no tensor; it triggers adjunct-tree
construction in the parser instead of decorating a node.

Corpus text is plain UTF-8.  Excerpts are separated by blank lines; tokens
are whitespace-split, lowercased, and stripped of leading and trailing
punctuation.  Counting is excerpt-level throughout: a word either occurs in
an excerpt or it does not, multiplicity is ignored.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import EmptyCorpus, ParseError, ValidationError
from .semtypes import SemType, SpaceMap, check_formula, parse_type, signature_of
from .tensor import Signature, Space, Tensor

TOP = "⊤"
BOTTOM = "⊥"

FORMAT_TAG = "dsvs-lexicon/1"

_STRIP = string.punctuation + "‘’“”…"


def tokenize(text: str) -> list[str]:
    """Lowercase, whitespace-split, strip edge punctuation, drop empties."""
    out = []
    for raw in text.lower().split():
        tok = raw.strip(_STRIP)
        if tok:
            out.append(tok)
    return out


@dataclass(frozen=True)
class CorpusExcerpt:
    """One blank-line-delimited stretch of corpus text, already tokenized."""

    excerpt_id: str
    tokens: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not self.tokens:
            raise ValueError(f"excerpt {self.excerpt_id!r} has no tokens")

    def contains(self, word: str) -> bool:
        return word in self.tokens


def parse_excerpts(text: str, source: str = "<string>") -> list[CorpusExcerpt]:
    """Split corpus text on blank lines into tokenized excerpts."""
    excerpts = []
    block: list[str] = []
    k = 0

    def flush():
        nonlocal k
        toks = tokenize(" ".join(block))
        if toks:
            excerpts.append(CorpusExcerpt(f"{source}:{k}", toks))
            k += 1
        block.clear()

    for line in text.splitlines():
        if line.strip():
            block.append(line)
        else:
            flush()
    flush()
    return excerpts


def read_corpus(path) -> list[CorpusExcerpt]:
    """Read every *.txt file under a directory (or one file) as excerpts."""
    p = Path(path)
    if p.is_dir():
        files = sorted(p.glob("*.txt"))
    elif p.is_file():
        files = [p]
    else:
        raise FileNotFoundError(f"no corpus at {p}")
    excerpts = []
    for f in files:
        excerpts.extend(parse_excerpts(f.read_text(encoding="utf-8"), source=f.name))
    return excerpts


# ---------------------------------------------------------------------------
# counting


def build_cooccurrence(
    excerpts: list[CorpusExcerpt],
    targets: list[str],
    contexts: list[str],
) -> Tensor:
    """Excerpt-level co-occurrence counts.

    Entry (i, j) is the number of excerpts in which both targets[i] and
    contexts[j] occur at least once.  The result is a tensor over
    Space("targets", targets) @ Space("contexts", contexts).
    """
    if not excerpts:
        raise EmptyCorpus("cannot count over zero excerpts")
    t_space = Space("targets", tuple(targets))
    c_space = Space("contexts", tuple(contexts))
    counts = np.zeros((t_space.dim, c_space.dim), dtype=np.int64)
    for ex in excerpts:
        present = set(ex.tokens)
        t_hits = [i for i, w in enumerate(targets) if w in present]
        if not t_hits:
            continue
        c_hits = [j for j, w in enumerate(contexts) if w in present]
        for i in t_hits:
            for j in c_hits:
                counts[i, j] += 1
    return Tensor(Signature((t_space, c_space)), counts)


def build_verb_matrix(
    excerpts: list[CorpusExcerpt],
    verb: str,
    properties: list[str],
) -> Tensor:
    """Count a verb's truth-value profile against a set of properties.

    Restricted to excerpts containing the verb: entry (p, top) counts those
    that also contain p, entry (p, bottom) those that do not.  Rows
    therefore all sum to the number of excerpts containing the verb.  The
    result lives over Space("W", properties) @ Space("S", (top, bottom)).
    """
    if not excerpts:
        raise EmptyCorpus("cannot count over zero excerpts")
    w_space = Space("W", tuple(properties))
    s_space = Space("S", (TOP, BOTTOM))
    counts = np.zeros((w_space.dim, 2), dtype=np.int64)
    for ex in excerpts:
        if not ex.contains(verb):
            continue
        present = set(ex.tokens)
        for i, p in enumerate(properties):
            if p in present:
                counts[i, 0] += 1
            else:
                counts[i, 1] += 1
    return Tensor(Signature((w_space, s_space)), counts)


# ---------------------------------------------------------------------------
# senses and lexicons

LINK_TYPE = "link"


@dataclass(frozen=True)
class Sense:
    """One sense of a surface word.

    Tensor-bearing senses pair a semantic type with a formula of the
    matching signature.  Link senses (sem_type and tensor both None) carry
    no content of their own; they trigger adjunct-tree construction.
    Extra surface forms ("babies" for "baby") resolve to the same sense.
    """

    sense_id: str
    word: str
    sem_type: SemType | None
    tensor: Tensor | None
    gloss: str | None = None
    forms: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "forms", tuple(self.forms))
        if (self.sem_type is None) != (self.tensor is None):
            raise ValueError(
                f"sense {self.sense_id!r} must carry both a type and a tensor, "
                f"or neither"
            )

    @property
    def is_link(self) -> bool:
        return self.sem_type is None

    def matches(self, surface: str) -> bool:
        return surface == self.word or surface in self.forms


@dataclass(frozen=True)
class Lexicon:
    """An ordered collection of senses over a fixed pair of spaces."""

    spaces: tuple[Space, ...]
    space_map: SpaceMap
    senses: tuple[Sense, ...]
    _by_surface: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "spaces", tuple(self.spaces))
        object.__setattr__(self, "senses", tuple(self.senses))
        if not self.senses:
            raise ValidationError("a lexicon must declare at least one sense")
        seen = set()
        for s in self.senses:
            if s.sense_id in seen:
                raise ValidationError(f"duplicate sense id {s.sense_id!r}")
            seen.add(s.sense_id)
            if s.tensor is not None and not check_formula(
                s.sem_type, s.tensor, self.space_map
            ):
                raise ValidationError(
                    f"sense {s.sense_id!r}: tensor signature "
                    f"{s.tensor.signature!r} does not fit type {s.sem_type} "
                    f"(expected {signature_of(s.sem_type, self.space_map)!r})"
                )
        index: dict[str, list[Sense]] = {}
        for s in self.senses:
            for surface in (s.word, *s.forms):
                index.setdefault(surface, []).append(s)
        object.__setattr__(self, "_by_surface", index)

    def lookup(self, surface: str) -> list[Sense]:
        """All senses reachable from a surface token, declaration order."""
        return list(self._by_surface.get(surface, []))

    def sense(self, sense_id: str) -> Sense:
        for s in self.senses:
            if s.sense_id == sense_id:
                return s
        raise KeyError(f"no sense with id {sense_id!r}")

    def space(self, name: str) -> Space:
        for sp in self.spaces:
            if sp.name == name:
                return sp
        raise KeyError(f"no space named {name!r}")


# ---------------------------------------------------------------------------
# file format


def _parse_sense(obj, pos: int, smap: SpaceMap) -> Sense:
    if not isinstance(obj, dict):
        raise ParseError(f"senses[{pos}]: expected an object")
    try:
        sid = obj["id"]
        word = obj["word"]
        tyname = obj["type"]
    except KeyError as e:
        raise ParseError(f"senses[{pos}]: missing required field {e.args[0]!r}")
    if not isinstance(sid, str) or not isinstance(word, str) or not isinstance(tyname, str):
        raise ParseError(f"senses[{pos}]: id, word and type must be strings")
    gloss = obj.get("gloss")
    if gloss is not None and not isinstance(gloss, str):
        raise ParseError(f"senses[{pos}] ({sid}): gloss must be a string")
    forms = obj.get("forms", [])
    if not isinstance(forms, list) or not all(isinstance(f, str) for f in forms):
        raise ParseError(f"senses[{pos}] ({sid}): forms must be a list of strings")

    if tyname == LINK_TYPE:
        if "tensor" in obj:
            raise ParseError(f"senses[{pos}] ({sid}): link senses carry no tensor")
        return Sense(sid, word, None, None, gloss=gloss, forms=tuple(forms))

    try:
        ty = parse_type(tyname)
    except ValueError:
        raise ParseError(f"senses[{pos}] ({sid}): unrecognised type {tyname!r}")
    if "tensor" not in obj:
        raise ParseError(f"senses[{pos}] ({sid}): missing required field 'tensor'")
    sig = signature_of(ty, smap)
    try:
        tensor = Tensor(sig, obj["tensor"])
    except (TypeError, ValueError) as e:
        raise ValidationError(f"sense {sid!r}: bad tensor: {e}")
    return Sense(sid, word, ty, tensor, gloss=gloss, forms=tuple(forms))


def load_lexicon(path) -> Lexicon:
    """Read and validate a lexicon file.

    Syntax problems raise ParseError with file and position information;
    well-formed files that break a consistency rule (duplicate sense ids,
    tensors that do not fit their type) raise ValidationError naming the
    offending sense.
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read lexicon {p}: {e}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{p}: line {e.lineno} column {e.colno}: {e.msg}")

    if not isinstance(doc, dict):
        raise ParseError(f"{p}: top level must be an object")
    tag = doc.get("format")
    if tag != FORMAT_TAG:
        raise ParseError(f"{p}: expected format {FORMAT_TAG!r}, got {tag!r}")

    spaces_obj = doc.get("spaces")
    if not isinstance(spaces_obj, dict) or not spaces_obj:
        raise ParseError(f"{p}: 'spaces' must be a non-empty object")
    spaces = []
    for name, basis in spaces_obj.items():
        if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
            raise ParseError(f"{p}: space {name!r}: basis must be a list of strings")
        try:
            spaces.append(Space(name, tuple(basis)))
        except ValueError as e:
            raise ValidationError(f"{p}: {e}")

    map_obj = doc.get("map")
    if not isinstance(map_obj, dict):
        raise ParseError(f"{p}: 'map' must be an object")
    by_name = {sp.name: sp for sp in spaces}
    try:
        smap = SpaceMap(entity=by_name[map_obj["entity"]], sentence=by_name[map_obj["sentence"]])
    except KeyError as e:
        raise ParseError(f"{p}: 'map' must name declared spaces for 'entity' and "
                         f"'sentence' (missing {e.args[0]!r})")

    senses_obj = doc.get("senses")
    if not isinstance(senses_obj, list):
        raise ParseError(f"{p}: 'senses' must be an array")
    senses = [_parse_sense(o, i, smap) for i, o in enumerate(senses_obj)]
    return Lexicon(tuple(spaces), smap, tuple(senses))


def save_lexicon(lexicon: Lexicon, path) -> None:
    """Write a lexicon back out; load_lexicon(save) reproduces it exactly."""
    doc = {
        "format": FORMAT_TAG,
        "spaces": {sp.name: list(sp.basis) for sp in lexicon.spaces},
        "map": {
            "entity": lexicon.space_map.entity.name,
            "sentence": lexicon.space_map.sentence.name,
        },
        "senses": [],
    }
    for s in lexicon.senses:
        entry: dict = {"id": s.sense_id, "word": s.word}
        if s.forms:
            entry["forms"] = list(s.forms)
        if s.is_link:
            entry["type"] = LINK_TYPE
        else:
            entry["type"] = s.sem_type.compact()
            entry["tensor"] = s.tensor.tolist()
        if s.gloss is not None:
            entry["gloss"] = s.gloss
        doc["senses"].append(entry)
    Path(path).write_text(
        json.dumps(doc, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
