"""JSON file formats for spaces, self-maps and groups."""
import json

from .errors import AlexError, InvalidMapError, InvalidSpaceError
from .functional import KPrimalFamily, SelfMap
from .groups import group_from_json
from .space import FiniteSpace, OpenSetFamily, from_open_sets


class ParseError(AlexError):
    pass


def read_json(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _int(doc, key, where):
    v = doc.get(key) if isinstance(doc, dict) else None
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{where}: field '{key}' must be an integer")
    return v


def _point_lists(value, field, n, where):
    if not isinstance(value, list):
        raise ParseError(f"{where}: field '{field}' must be a list of point lists")
    out = []
    for i, item in enumerate(value):
        if not isinstance(item, list):
            raise ParseError(f"{where}: {field}[{i}] must be a list")
        for j, p in enumerate(item):
            if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < n:
                raise ParseError(f"{where}: {field}[{i}][{j}] = {p!r} is not a point in 0..{n - 1}")
        out.append(item)
    return out


def space_from_doc(doc, where="space"):
    """``{"n", "basis"}`` or ``{"n", "opens"}``; an optional ``labels`` list is returned separately."""
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected a JSON object")
    n = _int(doc, "n", where)
    has_basis, has_opens = "basis" in doc, "opens" in doc
    if has_basis == has_opens:
        raise ParseError(f"{where}: exactly one of 'basis' or 'opens' must be present")
    try:
        if has_basis:
            basis = _point_lists(doc["basis"], "basis", n, where)
            if len(basis) != n:
                raise ParseError(f"{where}: 'basis' has {len(basis)} entries, expected n = {n}")
            space = FiniteSpace.from_basis(basis)
        else:
            opens = _point_lists(doc["opens"], "opens", n, where)
            space = from_open_sets(OpenSetFamily.from_lists(n, opens))
    except InvalidSpaceError as exc:
        raise ParseError(f"{where}: {exc}") from exc
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n:
            raise ParseError(f"{where}: 'labels' must be a list of {n} names")
        labels = {i: str(s) for i, s in enumerate(labels)}
    return space, labels


def map_from_doc(doc, where="map"):
    """A :class:`SelfMap` for ``{"n", "f"}`` or a :class:`KPrimalFamily` for ``{"n", "maps"}``."""
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected a JSON object")
    n = _int(doc, "n", where)
    if ("f" in doc) == ("maps" in doc):
        raise ParseError(f"{where}: exactly one of 'f' or 'maps' must be present")
    try:
        if "f" in doc:
            f = doc["f"]
            if not isinstance(f, list):
                raise ParseError(f"{where}: 'f' must be a list of images")
            return SelfMap(n, tuple(f))
        maps = doc["maps"]
        if not isinstance(maps, list) or not all(isinstance(m, list) for m in maps):
            raise ParseError(f"{where}: 'maps' must be a list of image lists")
        return KPrimalFamily(tuple(SelfMap(n, tuple(m)) for m in maps))
    except InvalidMapError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def load_space(path):
    return space_from_doc(read_json(path), str(path))


def load_map(path):
    return map_from_doc(read_json(path), str(path))


def load_group(path):
    doc = read_json(path)
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return group_from_json(doc)


def dumps(obj):
    """Canonical JSON text (sorted keys) so equal reports are byte-identical."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
