"""Word-by-word growth of semantic trees.

A tree starts as a single node requiring a proposition and grows as words
are consumed.  Nodes carry a semantic type, a requirement flag (the node
still awaits content), possibly a formula (a tensor), and up to three
outgoing edges: an argument daughter, a functor daughter, and an adjunct
(link) tree hanging off the node sideways.

Between words the tree saturates: a pointed bare proposition requirement
grows argument and functor daughters, and any node whose daughters both
carry formulae receives the contraction of functor against argument.  At
proposition nodes the contraction is additionally multiplied entrywise
with the root formula of every finished adjunct tree in the clause.

The pointer marks where the next word may act.  It can travel up from a
finished node to its mother (also crossing from a finished adjunct root
back to its host) and down into any daughter or adjunct whose subtree
still has unmet requirements.  A word sense applies at the first reachable
position that accepts it; each live candidate therefore forks into at most
one successor per sense, and parsing a locally ambiguous word multiplies
the candidate set.
"""

from __future__ import annotations

from dataclasses import dataclass, replace as _dc_replace

from .errors import DeadEnd, LexiconMiss, LinkUnavailable
from .lexicon import Lexicon, Sense
from .semtypes import E, SemType, T, application_slot, fn
from .tensor import Tensor, contract, mu

ET = fn(E, T)


@dataclass(frozen=True)
class Node:
    node_id: int
    sem_type: SemType
    requirement: bool
    formula: Tensor | None = None
    argument: int | None = None
    functor: int | None = None
    link: int | None = None
    parent: int | None = None

    @property
    def complete(self) -> bool:
        return not self.requirement and self.formula is not None

    @property
    def is_leaf(self) -> bool:
        return self.argument is None and self.functor is None


@dataclass(frozen=True)
class Tree:
    """An immutable tree; node ids index straight into the node tuple."""

    nodes: tuple[Node, ...]
    pointer: int
    root: int = 0

    def node(self, i: int) -> Node:
        return self.nodes[i]

    @property
    def pointed(self) -> Node:
        return self.nodes[self.pointer]

    def with_node(self, node: Node) -> "Tree":
        nodes = list(self.nodes)
        nodes[node.node_id] = node
        return Tree(tuple(nodes), self.pointer, self.root)

    def with_pointer(self, i: int) -> "Tree":
        return Tree(self.nodes, i, self.root)

    def is_complete(self) -> bool:
        """No unmet requirements anywhere, and a vector at the root."""
        if _has_requirement(self, self.root):
            return False
        r = self.nodes[self.root]
        return r.formula is not None and r.formula.rank == 1


def axiom() -> Tree:
    """The starting tree: one pointed node requiring a proposition."""
    return Tree((Node(0, T, requirement=True),), pointer=0)


# ---------------------------------------------------------------------------
# traversal helpers


def _has_requirement(tree: Tree, top: int) -> bool:
    stack = [top]
    while stack:
        n = tree.nodes[stack.pop()]
        if n.requirement:
            return True
        for c in (n.argument, n.functor, n.link):
            if c is not None:
                stack.append(c)
    return False


def _links_in_clause(tree: Tree, top: int) -> list[int]:
    """Adjunct roots hanging anywhere in the application subtree of top.

    Does not cross into the adjuncts themselves; links nested inside an
    adjunct belong to that adjunct's own clause.
    """
    found: list[int] = []

    def visit(i: int):
        n = tree.nodes[i]
        if n.link is not None:
            found.append(n.link)
        for c in (n.argument, n.functor):
            if c is not None:
                visit(c)

    visit(top)
    return found


def _link_finished(tree: Tree, link_root: int) -> bool:
    lr = tree.nodes[link_root]
    return lr.formula is not None and not _has_requirement(tree, link_root)


def _first_requirement_leaf(tree: Tree) -> int | None:
    def visit(i: int) -> int | None:
        n = tree.nodes[i]
        if n.requirement and n.is_leaf:
            return i
        for c in (n.argument, n.functor, n.link):
            if c is not None:
                r = visit(c)
                if r is not None:
                    return r
        return None

    return visit(tree.root)


# ---------------------------------------------------------------------------
# saturation


def _saturate_step(tree: Tree) -> Tree:
    # growth: a pointed bare proposition requirement sprouts daughters
    p = tree.pointed
    if p.requirement and p.sem_type == T and p.is_leaf and p.formula is None:
        base = len(tree.nodes)
        nodes = list(tree.nodes)
        nodes[p.node_id] = _dc_replace(p, argument=base, functor=base + 1)
        nodes.append(Node(base, E, requirement=True, parent=p.node_id))
        nodes.append(Node(base + 1, ET, requirement=True, parent=p.node_id))
        return Tree(tuple(nodes), pointer=base, root=tree.root)

    # reduction: contract finished daughters, fold finished adjuncts
    for i, n in enumerate(tree.nodes):
        if n.argument is None or n.functor is None:
            continue
        a = tree.nodes[n.argument]
        f = tree.nodes[n.functor]
        if not (a.complete and f.complete):
            continue
        slot = application_slot(f.sem_type)
        value = contract(f.formula, a.formula, [(slot, 0)])
        if n.sem_type == T:
            for link_root in _links_in_clause(tree, i):
                if _link_finished(tree, link_root):
                    value = mu(value, tree.nodes[link_root].formula)
        if n.requirement or n.formula != value:
            return tree.with_node(
                _dc_replace(n, requirement=False, formula=value)
            )
    return tree


def saturate(tree: Tree) -> Tree:
    """Run growth and reduction to a fixed point."""
    while True:
        nxt = _saturate_step(tree)
        if nxt is tree:
            return tree
        tree = nxt


def canonical_view(tree: Tree) -> Tree:
    """Saturated tree with the pointer advanced to the next open slot.

    The pointer lands on the first requirement leaf in depth-first order
    (argument before functor, adjuncts after the node they hang from), or
    on the root when nothing is left to fill.  This is the form traces
    display.
    """
    t = saturate(tree)
    i = _first_requirement_leaf(t)
    return t.with_pointer(i if i is not None else t.root)


# ---------------------------------------------------------------------------
# pointer travel


def apply_computational(tree: Tree) -> list[Tree]:
    """All trees reachable from here without consuming a word.

    Saturates, then enumerates every position the pointer can travel to:
    up from a finished node to its mother (or from a finished adjunct root
    to its host), down into any subtree that still has requirements.  The
    stored position comes first; a tree with nothing to do comes back as a
    single unchanged variant.
    """
    t = saturate(tree)
    seen = [t.pointer]
    queue = [t.pointer]
    while queue:
        i = queue.pop(0)
        n = t.nodes[i]
        moves = []
        if n.complete and n.parent is not None:
            moves.append(n.parent)
        for c in (n.argument, n.functor, n.link):
            if c is not None and _has_requirement(t, c):
                moves.append(c)
        for m in moves:
            if m not in seen:
                seen.append(m)
                queue.append(m)
    return [t.with_pointer(p) for p in seen]


# ---------------------------------------------------------------------------
# word actions


def apply_link(tree: Tree, relative_pronoun: bool = True) -> list[Tree]:
    """Hang an adjunct tree off the pointed node.

    The pointed node must be a formula-bearing entity node without an
    adjunct already.  With relative_pronoun the new tree comes pre-grown:
    its argument daughter repeats the host's formula (the head noun is the
    adjunct clause's subject) and the pointer rests there; otherwise the
    adjunct is a bare proposition requirement holding the pointer.
    """
    p = tree.pointed
    if not (p.sem_type == E and p.complete and p.link is None):
        raise LinkUnavailable(
            f"node {p.node_id} cannot host an adjunct "
            f"(needs a finished entity node with no adjunct yet)"
        )
    base = len(tree.nodes)
    nodes = list(tree.nodes)
    if relative_pronoun:
        nodes[p.node_id] = _dc_replace(p, link=base)
        nodes.append(
            Node(base, T, requirement=True, argument=base + 1, functor=base + 2,
                 parent=p.node_id)
        )
        nodes.append(
            Node(base + 1, E, requirement=False, formula=p.formula, parent=base)
        )
        nodes.append(Node(base + 2, ET, requirement=True, parent=base))
        return [Tree(tuple(nodes), pointer=base + 1, root=tree.root)]
    nodes[p.node_id] = _dc_replace(p, link=base)
    nodes.append(Node(base, T, requirement=True, parent=p.node_id))
    return [Tree(tuple(nodes), pointer=base, root=tree.root)]


def apply_lexical(tree: Tree, sense: Sense) -> Tree | None:
    """Try one sense at the pointed node; None if it does not apply.

    Three actions cover the lexicon.  A sense whose type matches a pointed
    requirement leaf decorates it.  A function sense whose result type
    matches a pointed requirement leaf of function type grows the leaf:
    a fresh entity requirement (taking the pointer) plus a functor daughter
    carrying the sense's tensor.  A link sense hangs an adjunct tree off a
    finished entity node.
    """
    if sense.is_link:
        try:
            return apply_link(tree)[0]
        except LinkUnavailable:
            return None

    p = tree.pointed
    if not (p.requirement and p.is_leaf and p.formula is None):
        return None
    ty = sense.sem_type

    if ty == p.sem_type:
        return tree.with_node(
            _dc_replace(p, requirement=False, formula=sense.tensor)
        )

    if ty.is_function and ty.res == p.sem_type and p.sem_type.is_function:
        base = len(tree.nodes)
        nodes = list(tree.nodes)
        nodes[p.node_id] = _dc_replace(p, argument=base, functor=base + 1)
        nodes.append(Node(base, ty.arg, requirement=True, parent=p.node_id))
        nodes.append(
            Node(base + 1, ty, requirement=False, formula=sense.tensor,
                 parent=p.node_id)
        )
        return Tree(tuple(nodes), pointer=base, root=tree.root)

    return None


# ---------------------------------------------------------------------------
# candidate sets


@dataclass(frozen=True)
class Candidate:
    """One live parse: a tree plus the sense chosen for each word so far."""

    tree: Tree
    senses: tuple[str, ...] = ()


@dataclass(frozen=True)
class ParseState:
    candidates: tuple[Candidate, ...]
    consumed: tuple[str, ...] = ()

    def complete_candidates(self) -> list[Candidate]:
        return [c for c in self.candidates if c.tree.is_complete()]


def initial_state() -> ParseState:
    return ParseState((Candidate(axiom()),))


def advance_with_sense(state: ParseState, sense: Sense) -> list[Candidate]:
    """Successors of every candidate under one fixed sense.

    Each candidate contributes at most one successor: the sense acts at the
    first reachable pointer position that accepts it.
    """
    out = []
    for cand in state.candidates:
        for variant in apply_computational(cand.tree):
            grown = apply_lexical(variant, sense)
            if grown is not None:
                out.append(
                    Candidate(saturate(grown), cand.senses + (sense.sense_id,))
                )
                break
    return out


def parse_word(state: ParseState, word: str, lexicon: Lexicon) -> ParseState:
    """Consume one token, forking candidates over its senses.

    Raises LexiconMiss for an unknown token and DeadEnd when no candidate
    survives; both carry the 1-based token position.
    """
    position = len(state.consumed) + 1
    senses = lexicon.lookup(word)
    if not senses:
        raise LexiconMiss(word, position)
    survivors: list[Candidate] = []
    for sense in senses:
        survivors.extend(advance_with_sense(state, sense))
    if not survivors:
        raise DeadEnd(word, position)
    return ParseState(tuple(survivors), state.consumed + (word,))


def parse_sequence(words, lexicon: Lexicon) -> ParseState:
    """Fold parse_word over a token list, starting from the axiom tree."""
    state = initial_state()
    for word in words:
        state = parse_word(state, word, lexicon)
    return state


# ---------------------------------------------------------------------------
# rendering


def render(tree: Tree) -> str:
    """Multi-line picture of a tree.

    One node per line: requirement marker, type, formula when present, and
    a lozenge on the pointed node.  Arguments print above functors; an
    adjunct prints under its host flagged LINK.
    """
    lines: list[str] = []

    def emit(i: int, depth: int, prefix: str = ""):
        n = tree.nodes[i]
        s = prefix + ("?" if n.requirement else "") + str(n.sem_type)
        if n.formula is not None:
            s += " = " + repr(n.formula.tolist())
        if i == tree.pointer:
            s += " ◊"
        lines.append("  " * depth + s)
        if n.argument is not None:
            emit(n.argument, depth + 1)
        if n.functor is not None:
            emit(n.functor, depth + 1)
        if n.link is not None:
            emit(n.link, depth + 1, prefix="LINK: ")

    emit(tree.root, 0)
    return "\n".join(lines)
