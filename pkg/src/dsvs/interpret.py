"""Scoring trees, finished or not.

A finished tree carries a vector over the sentence space at its root; its
first coordinate is evidence for the sentence, the second against, and the
ratio top / (top + bottom) is the plausibility read off it.

An unfinished tree still denotes something: every unmet requirement stands
for a value not yet heard.  compile_root rebuilds the root value bottom-up,
substituting a stand-in for each requirement leaf according to a strategy:

    unit        the all-ones tensor of the right signature
    sum         the entrywise sum of every known tensor of that signature
    direct_sum  the same tensors kept apart as a tuple of alternatives

"Known tensors of a signature" means lexicon formulae of that signature
plus every one-argument saturation of a lexicon function against a lexicon
entity that lands in it.  With direct_sum the alternatives ride through
composition (tuples combine pairwise), so the root comes back as a tuple
whose entrywise sum equals the sum strategy's single tensor.

On those root values the module ranks: disambiguate orders a state's live
candidates by plausibility, expect orders candidate next words by the
plausibility of the parse that would follow.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoInhabitants, SignatureMismatch
from .lexicon import Lexicon
from .parser import (
    ParseState,
    Tree,
    _link_finished,
    _links_in_clause,
    advance_with_sense,
)
from .semtypes import E, T, application_slot, signature_of
from .tensor import (
    Signature,
    Tensor,
    TensorTuple,
    contract,
    direct_sum,
    mu,
    sum_tensors,
    unit_tensor,
)

STRATEGIES = ("unit", "sum", "direct_sum")


def known_inhabitants(signature: Signature, lexicon: Lexicon) -> list[tuple[str, Tensor]]:
    """Labelled tensors of a signature derivable from the lexicon.

    Lexicon formulae of the signature come first, in declaration order,
    then one-argument saturations: each function sense contracted against
    each entity sense at the function's application slot, kept when the
    result lands in the requested signature.  Saturations are labelled
    "function+argument".
    """
    found: list[tuple[str, Tensor]] = []
    for s in lexicon.senses:
        if s.tensor is not None and s.tensor.signature == signature:
            found.append((s.sense_id, s.tensor))
    for f in lexicon.senses:
        if f.tensor is None or not f.sem_type.is_function:
            continue
        slot = application_slot(f.sem_type)
        for a in lexicon.senses:
            if a.tensor is None or a.sem_type != E:
                continue
            saturated = contract(f.tensor, a.tensor, [(slot, 0)])
            if saturated.signature == signature:
                found.append((f"{f.sense_id}+{a.sense_id}", saturated))
    return found


def underspec_tensor(signature: Signature, strategy: str, lexicon: Lexicon):
    """Stand-in value for a requirement of the given signature."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    if strategy == "unit":
        return unit_tensor(signature)
    tensors = [t for _, t in known_inhabitants(signature, lexicon)]
    if not tensors:
        raise NoInhabitants(f"lexicon has no tensors of signature {signature!r}")
    if strategy == "sum":
        return sum_tensors(tensors)
    return direct_sum(tensors)


def _components(value):
    if isinstance(value, TensorTuple):
        return value.components, True
    return (value,), False


def _apply_value(f_value, f_type, a_value):
    slot = application_slot(f_type)
    fs, f_tup = _components(f_value)
    as_, a_tup = _components(a_value)
    out = [contract(f, a, [(slot, 0)]) for f in fs for a in as_]
    if f_tup or a_tup:
        return TensorTuple(tuple(out))
    return out[0]


def _mu_value(x, y):
    xs, x_tup = _components(x)
    ys, y_tup = _components(y)
    out = [mu(a, b) for a in xs for b in ys]
    if x_tup or y_tup:
        return TensorTuple(tuple(out))
    return out[0]


def compile_root(tree: Tree, lexicon: Lexicon, strategy: str = "sum"):
    """Root value of a tree, unmet requirements filled by strategy.

    Recomputes every internal node from its daughters instead of trusting
    stored formulae, so on a finished tree this reproduces the stored root
    exactly.  Finished adjunct trees fold into their clause's proposition
    node entrywise; unfinished adjuncts do not contribute.
    """

    def value(i: int):
        n = tree.nodes[i]
        if n.argument is not None and n.functor is not None:
            f_node = tree.nodes[n.functor]
            v = _apply_value(value(n.functor), f_node.sem_type, value(n.argument))
            if n.sem_type == T:
                for link_root in _links_in_clause(tree, i):
                    if _link_finished(tree, link_root):
                        v = _mu_value(v, value(link_root))
            return v
        if n.formula is not None and not n.requirement:
            return n.formula
        sig = signature_of(n.sem_type, lexicon.space_map)
        return underspec_tensor(sig, strategy, lexicon)

    return value(tree.root)


# ---------------------------------------------------------------------------
# scoring


@dataclass(frozen=True)
class PlausibilityScore:
    """Evidence for and against a sentence, with their normalised ratio."""

    top: float
    bottom: float
    ratio: float

    @classmethod
    def of(cls, vector: Tensor) -> "PlausibilityScore":
        if vector.rank != 1 or vector.signature.dims != (2,):
            raise SignatureMismatch(
                f"plausibility needs a vector over a two-point space, got "
                f"{vector.signature!r}"
            )
        top = vector.array[0].item()
        bottom = vector.array[1].item()
        total = top + bottom
        ratio = 0.5 if total == 0 else top / total
        return cls(top, bottom, ratio)


def plausibility(vector) -> PlausibilityScore:
    """Score a sentence-space value; tuples collapse by entrywise sum."""
    if isinstance(vector, TensorTuple):
        vector = vector.collapse()
    return PlausibilityScore.of(vector)


def score_candidate(candidate, lexicon: Lexicon, strategy: str = "sum") -> PlausibilityScore:
    return plausibility(compile_root(candidate.tree, lexicon, strategy))


def disambiguate(state: ParseState, lexicon: Lexicon, strategy: str = "sum"):
    """Live candidates ranked by plausibility, most plausible first.

    Returns (candidate, score) pairs.  Sorting is stable, so candidates
    with equal ratios keep their discovery order.
    """
    scored = [
        (cand, score_candidate(cand, lexicon, strategy))
        for cand in state.candidates
    ]
    scored.sort(key=lambda pair: -pair[1].ratio)
    return scored


@dataclass(frozen=True)
class ExpectEntry:
    """One candidate continuation: a word, the sense tried, its score.

    score is None when no live parse accepts the word under that sense;
    such entries sort after every scored one.
    """

    word: str
    sense_id: str | None
    score: PlausibilityScore | None


def expect(state: ParseState, words, lexicon: Lexicon, strategy: str = "sum") -> list[ExpectEntry]:
    """Rank candidate next words by the plausibility of what would follow.

    Each word is tried sense by sense against every live candidate; a
    sense's score is the best plausibility among the parses it yields.
    Words or senses that nothing accepts come back with score None, after
    all scored entries.
    """
    scored: list[ExpectEntry] = []
    dead: list[ExpectEntry] = []
    for word in words:
        senses = lexicon.lookup(word)
        if not senses:
            dead.append(ExpectEntry(word, None, None))
            continue
        for sense in senses:
            survivors = advance_with_sense(state, sense)
            if not survivors:
                dead.append(ExpectEntry(word, sense.sense_id, None))
                continue
            best = max(
                (score_candidate(c, lexicon, strategy) for c in survivors),
                key=lambda s: s.ratio,
            )
            scored.append(ExpectEntry(word, sense.sense_id, best))
    scored.sort(key=lambda e: -e.score.ratio)
    return scored + dead
