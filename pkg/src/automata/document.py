"""
PFA documents.

A document is a JSON object with the fields ``outputs``, ``inputs``,
``start``, ``states``, ``action`` and ``delta``. State labels are written as
strings; integer-tuple labels use the form ``"(100,1,0)"`` and are read back
as tuples. Observations are written ``"arm:reward"``. Serialization always
materializes rule-generated tables.
"""

import json
import logging
import re
from typing import Any, Dict, List, Tuple

from ..common.exceptions import PfaFormatError, StructureError
from .distribution import DistributionError, check_distribution
from .pfa import Label, Observation, Pfa, TablePfa

logger = logging.getLogger(__name__)

_TUPLE_LABEL = re.compile(r"^\((-?\d+(?:,-?\d+)*)\)$")
FIELDS = ("outputs", "inputs", "start", "states", "action", "delta")


def encode_label(label: Label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(str(part) for part in label) + ")"
    return label


def decode_label(text: str) -> Label:
    match = _TUPLE_LABEL.match(text)
    if match:
        return tuple(int(part) for part in match.group(1).split(","))
    return text


def to_document(pfa: Pfa) -> Dict[str, Any]:
    """
    Materialize ``pfa`` into a JSON-ready document.

    Args:
        pfa (Pfa): The automaton.

    Returns:
        Dict[str, Any]: The document.
    """
    names = [encode_label(label) for label in pfa.labels]
    action = {
        names[s]: [[arm, p] for arm, p in pfa.action_distribution(s)]
        for s in pfa.states
    }
    delta = {}
    for s in pfa.states:
        row = {
            str(obs): [[names[t], p] for t, p in pfa.transition_distribution(s, obs)]
            for obs in pfa.defined_inputs(s)
        }
        if row:
            delta[names[s]] = row
    return {
        "outputs": list(pfa.outputs),
        "inputs": [str(obs) for obs in pfa.inputs],
        "start": encode_label(pfa.start_label),
        "states": names,
        "action": action,
        "delta": delta,
    }


def serialize(pfa: Pfa) -> str:
    """
    Write ``pfa`` as a PFA document.

    Probabilities are written with ``repr`` precision so a round trip is exact.
    """
    text = json.dumps(to_document(pfa), separators=(",", ":"))
    logger.info(f"Serialized PFA with {pfa.num_states} states ({len(text)} bytes)")
    return text


def _fail(message: str) -> PfaFormatError:
    logger.error(f"Rejected PFA document: {message}")
    return PfaFormatError(message)


def _distribution(pairs: Any, where: str, known: Dict[Any, Any]) -> List[Tuple[Any, float]]:
    if not isinstance(pairs, list):
        raise _fail(f"{where}: expected a list of (symbol, probability) pairs")
    checked = []
    for pair in pairs:
        if not isinstance(pair, list) or len(pair) != 2:
            raise _fail(f"{where}: malformed pair {pair!r}")
        symbol, p = pair
        if isinstance(p, bool) or not isinstance(p, (int, float)):
            raise _fail(f"{where}: probability {p!r} is not a decimal literal")
        if symbol not in known:
            raise _fail(f"{where}: unknown symbol {symbol!r}")
        checked.append((known[symbol], float(p)))
    try:
        check_distribution(checked)
    except DistributionError as exc:
        raise _fail(f"{where}: {exc}") from None
    return checked


def from_document(document: Any) -> TablePfa:
    """
    Build a PFA from a parsed document.

    Args:
        document (Any): The parsed JSON value.

    Returns:
        TablePfa: The automaton.

    Raises:
        PfaFormatError: If a field is missing or malformed, or a distribution is
            invalid; the message names the offending state.
    """
    if not isinstance(document, dict):
        raise _fail("document must be an object")
    missing = [name for name in FIELDS if name not in document]
    if missing:
        raise _fail(f"missing fields {missing}")
    unknown = sorted(set(document) - set(FIELDS))
    if unknown:
        raise _fail(f"unknown fields {unknown}")

    states = document["states"]
    if not isinstance(states, list) or not states:
        raise _fail("state set must be a non-empty list")
    if not all(isinstance(name, str) for name in states):
        raise _fail("state labels must be strings")
    if len(set(states)) != len(states):
        raise _fail("state labels must be unique")
    state_ids = {name: i for i, name in enumerate(states)}
    if document["start"] not in state_ids:
        raise _fail(f"start state {document['start']!r} is not in the state set")

    outputs = document["outputs"]
    if not isinstance(outputs, list) or not all(
        isinstance(o, int) and not isinstance(o, bool) for o in outputs
    ):
        raise _fail("outputs must be a list of arm numbers")
    try:
        inputs = {name: Observation.parse(name) for name in document["inputs"]}
    except (TypeError, ValueError, StructureError):
        raise _fail("inputs must be a list of 'arm:reward' symbols") from None

    action_doc = document["action"]
    if not isinstance(action_doc, dict):
        raise _fail("action must map states to distributions")
    action = {}
    for name in states:
        if name not in action_doc:
            raise _fail(f"state {name!r} has no action distribution")
        action[state_ids[name]] = _distribution(
            action_doc[name], f"action of state {name!r}", {o: o for o in outputs}
        )
    stray = sorted(set(action_doc) - set(state_ids))
    if stray:
        raise _fail(f"action mentions unknown states {stray}")

    delta_doc = document["delta"]
    if not isinstance(delta_doc, dict):
        raise _fail("delta must map states to rows")
    delta = {}
    for name, row in delta_doc.items():
        if name not in state_ids:
            raise _fail(f"delta mentions unknown state {name!r}")
        if not isinstance(row, dict):
            raise _fail(f"delta row of state {name!r} must map inputs to distributions")
        for symbol, pairs in row.items():
            if symbol not in inputs:
                raise _fail(f"state {name!r}: unknown input {symbol!r}")
            delta[(state_ids[name], inputs[symbol])] = _distribution(
                pairs, f"transition of state {name!r} on {symbol}", state_ids
            )

    labels = [decode_label(name) for name in states]
    try:
        return TablePfa(
            labels,
            decode_label(document["start"]),
            outputs,
            inputs.values(),
            action,
            delta,
        )
    except StructureError as exc:
        raise _fail(str(exc)) from None


def deserialize(text: str) -> TablePfa:
    """
    Read a PFA document.

    Raises:
        PfaFormatError: If the text is not valid JSON or not a valid document.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _fail(f"not valid JSON: {exc}") from None
    return from_document(document)
