"""Bundled lexicon files.

paper_s4.lexicon       four nouns, three one-place verbs, one two-place
                       verb, a relative pronoun; the worked-example counts
                       over the infant/nappy/pitch/goal property space.
split_senses.lexicon   same, but "dribble" split into a one-place leaking
                       sense and a two-place ball-control sense.
traces.lexicon         a tiny two-property lexicon used by the trace tests.
"""

from importlib import resources
from pathlib import Path


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled lexicon, e.g. fixture_path("paper_s4")."""
    if not name.endswith(".lexicon"):
        name += ".lexicon"
    ref = resources.files(__package__).joinpath(name)
    p = Path(str(ref))
    if not p.is_file():
        raise FileNotFoundError(f"no bundled lexicon named {name!r}")
    return p
