"""JSON interchange for automata and words.

An automaton is stored as::

    {"alphabet": ["0", "1"], "states": 3, "initial": [0], "final": [0, 1, 2],
     "transitions": [[0, "1", 0], [0, "1", 1], ...]}

Whether it is deterministic is inferred on load, never stored.
"""

from __future__ import annotations

import json
from typing import Any, Sequence, Union

from nfakit.core import AutomatonError, Dfa, Nfa

__all__ = ["AutomatonParseError", "to_dict", "from_dict", "dumps", "loads", "load", "dump", "word_to_json"]


class AutomatonParseError(AutomatonError):
    """The input text is not a valid automaton document."""


def to_dict(m: Union[Nfa, Dfa]) -> dict:
    nfa = m.nfa if isinstance(m, Dfa) else m
    return {
        "alphabet": list(nfa.alphabet),
        "states": nfa.n,
        "initial": sorted(nfa.initial),
        "final": sorted(nfa.final),
        "transitions": [[p, nfa.alphabet[a], q] for p, a, q in nfa.transitions()],
    }


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise AutomatonParseError(msg)


def from_dict(doc: Any) -> Nfa:
    _expect(isinstance(doc, dict), "automaton document must be a JSON object")
    missing = [k for k in ("alphabet", "states", "initial", "final", "transitions") if k not in doc]
    _expect(not missing, f"missing keys: {', '.join(missing)}")
    alphabet = doc["alphabet"]
    _expect(isinstance(alphabet, list) and all(isinstance(a, str) for a in alphabet),
            "'alphabet' must be an array of strings")
    n = doc["states"]
    _expect(isinstance(n, int) and not isinstance(n, bool) and n >= 0, "'states' must be a non-negative integer")
    for key in ("initial", "final"):
        v = doc[key]
        _expect(isinstance(v, list) and all(isinstance(q, int) and not isinstance(q, bool) for q in v),
                f"'{key}' must be an array of state ids")
    trans = doc["transitions"]
    _expect(isinstance(trans, list), "'transitions' must be an array")
    triples = []
    for i, t in enumerate(trans):
        _expect(isinstance(t, list) and len(t) == 3 and isinstance(t[0], int) and isinstance(t[1], str)
                and isinstance(t[2], int), f"transition #{i} must be [from, symbolName, to], got {t!r}")
        triples.append(tuple(t))
    try:
        return Nfa.build(alphabet, n, triples, doc["initial"], doc["final"])
    except AutomatonParseError:
        raise
    except AutomatonError as exc:
        raise AutomatonParseError(str(exc)) from exc


def dumps(m: Union[Nfa, Dfa], indent: int | None = None) -> str:
    return json.dumps(to_dict(m), indent=indent)


def loads(text: str) -> Nfa:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AutomatonParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return from_dict(doc)


def load(path) -> Nfa:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(m: Union[Nfa, Dfa], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(m, indent=2))
        fh.write("\n")


def word_to_json(alphabet: Sequence[str], word: Sequence[int] | None):
    if word is None:
        return None
    return [alphabet[a] for a in word]
