"""
    @file:              utils.py
    @Author:            Maxence Larose

    @Creation Date:     10/2026
    @Last modification: 10/2026

    @Description:       JSON encoding of complexes, bundles and almost representations, with the schemas their files
                        are validated against.
"""

import json
import logging
from typing import Any, Dict, Optional

from jsonschema import Draft7Validator
import numpy as np

from .bundle import CocycleBundle
from .errors import SchemaError
from .quasirep import AlmostRep
from .sampled import SampledUnitaryMap
from .simplicial import Complex, Presentation, SimplicialPath, build_complex, proper_faces

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"
INCLUSION = "⊂"

MATRIX_SCHEMA = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}}
}

COMPLEX_SCHEMA = {
    "type": "object",
    "required": ["vertices", "faces"],
    "properties": {
        "vertices": {"type": "array", "items": {"type": "integer"}},
        "faces": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 1}},
        "orientation": {
            "type": "object",
            "patternProperties": {"^[0-9]+$": {"enum": [1, -1]}},
            "additionalProperties": False
        }
    }
}

BUNDLE_SCHEMA = {
    "type": "object",
    "required": ["complex", "rank", "depth", "transitions"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "complex": COMPLEX_SCHEMA,
        "rank": {"type": "integer", "minimum": 1},
        "depth": {"type": "integer", "minimum": 1},
        "transitions": {"type": "object", "additionalProperties": {"type": "array", "items": MATRIX_SCHEMA}}
    }
}

WORD_SCHEMA = {
    "type": "array",
    "items": {
        "type": "array",
        "items": [{"type": "string"}, {"enum": [1, -1]}],
        "minItems": 2,
        "maxItems": 2
    }
}

REP_SCHEMA = {
    "type": "object",
    "required": ["presentation", "images"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "presentation": {
            "type": "object",
            "required": ["generators", "relations"],
            "properties": {
                "generators": {"type": "array", "items": {"type": "string"}},
                "relations": {"type": "array", "items": WORD_SCHEMA},
                "generator_loops": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
                "basepoint": {"type": ["integer", "null"]},
                "generator_edges": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}
                }
            }
        },
        "images": {"type": "object", "additionalProperties": MATRIX_SCHEMA}
    }
}


def validate(document: Any, schema: dict, name: str) -> None:
    """
    Validates a decoded JSON document, raising a SchemaError naming the first violation.

    Parameters
    ----------
    document : Any
        Decoded JSON.
    schema : dict
        JSON schema.
    name : str
        Document kind, for the message.
    """
    errors = sorted(Draft7Validator(schema).iter_errors(document), key=lambda e: list(e.absolute_path))
    if errors:
        location = "/".join(str(p) for p in errors[0].absolute_path) or "<root>"
        raise SchemaError(f"Invalid {name} document at {location}: {errors[0].message}")


def read_json(path: str) -> Any:
    """
    Reads a JSON file.

    Parameters
    ----------
    path : str
        Path to the file.

    Returns
    -------
    document : Any
        Decoded JSON.
    """
    try:
        with open(path, "r", encoding="utf-8") as file:
            return json.load(file)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{path} is not valid JSON: {e}") from e


def _to_builtin(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable.")


def dump_json(document: Any, path: Optional[str] = None) -> str:
    """
    Serializes a document with sorted keys, numpy scalars included, writing it to path when given.

    Parameters
    ----------
    document : Any
        JSON-compatible document.
    path : Optional[str]
        Output file.

    Returns
    -------
    text : str
        Serialized document.
    """
    text = json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False, default=_to_builtin)
    if path is not None:
        with open(path, "w", encoding="utf-8") as file:
            file.write(text + "\n")
        logger.debug(f"Wrote {path}.")

    return text


def matrix_to_json(matrix: np.ndarray) -> list:
    matrix = np.asarray(matrix, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in matrix]


def matrix_from_json(rows: list) -> np.ndarray:
    array = np.asarray(rows, dtype=float)
    if array.ndim != 3 or array.shape[0] != array.shape[1]:
        raise SchemaError(f"Expected a square matrix of [re, im] pairs, got shape {array.shape[:-1]}.")
    return array[..., 0] + 1j * array[..., 1]


def complex_to_dict(x: Complex) -> Dict[str, Any]:
    """
    Encodes a complex by its vertices, maximal simplices and the orientation signs of the oriented ones.

    Parameters
    ----------
    x : Complex
        Complex.

    Returns
    -------
    document : Dict[str, Any]
        JSON-compatible document.
    """
    covered = {face for s in x.simplices for face in proper_faces(s)}
    faces = [s for s in x.simplices if s not in covered]
    document: Dict[str, Any] = {"vertices": list(x.vertices), "faces": [list(f) for f in faces]}
    if x.orientation is not None:
        signs = dict(x.orientation)
        document["orientation"] = {str(i): signs[f] for i, f in enumerate(faces) if f in signs}

    return document


def complex_from_dict(document: Dict[str, Any]) -> Complex:
    """
    Decodes and validates a complex document.

    Parameters
    ----------
    document : Dict[str, Any]
        Decoded JSON.

    Returns
    -------
    complex : Complex
        Complex.
    """
    validate(document, COMPLEX_SCHEMA, "complex")
    faces = [tuple(f) for f in document["faces"]]
    orientation = None
    if "orientation" in document:
        orientation = []
        for index, sign in document["orientation"].items():
            if int(index) >= len(faces):
                raise SchemaError(f"Orientation refers to face {index}, only {len(faces)} faces are listed.")
            orientation.append((faces[int(index)], sign))

    return build_complex(faces, vertices=document["vertices"], orientation=orientation)


def transition_key(rho, sigma) -> str:
    return json.dumps(list(rho)) + INCLUSION + json.dumps(list(sigma))


def _parse_transition_key(key: str):
    try:
        rho, sigma = key.split(INCLUSION)
        return tuple(json.loads(rho)), tuple(json.loads(sigma))
    except ValueError as e:
        raise SchemaError(f"Malformed transition key {key!r}.") from e


def bundle_to_dict(bundle: CocycleBundle) -> Dict[str, Any]:
    """
    Encodes a bundle with the sampled values of every transition.

    Parameters
    ----------
    bundle : CocycleBundle
        Bundle.

    Returns
    -------
    document : Dict[str, Any]
        JSON-compatible document.
    """
    return {
        "schema": SCHEMA_VERSION,
        "complex": complex_to_dict(bundle.base),
        "rank": bundle.rank,
        "depth": bundle.depth,
        "transitions": {
            transition_key(rho, sigma): [matrix_to_json(v) for v in bundle.transitions[(rho, sigma)].values]
            for rho, sigma in bundle.pairs()
        }
    }


def bundle_from_dict(document: Dict[str, Any]) -> CocycleBundle:
    """
    Decodes and validates a bundle document.

    Parameters
    ----------
    document : Dict[str, Any]
        Decoded JSON.

    Returns
    -------
    bundle : CocycleBundle
        Bundle.
    """
    validate(document, BUNDLE_SCHEMA, "bundle")
    base = complex_from_dict(document["complex"])
    depth = document["depth"]
    transitions = {}
    for key, values in document["transitions"].items():
        rho, sigma = _parse_transition_key(key)
        transitions[(rho, sigma)] = SampledUnitaryMap(rho, depth, np.stack([matrix_from_json(v) for v in values]))

    return CocycleBundle(base=base, rank=document["rank"], depth=depth, transitions=transitions)


def rep_to_dict(phi: AlmostRep) -> Dict[str, Any]:
    """
    Encodes an almost representation with its presentation.

    Parameters
    ----------
    phi : AlmostRep
        Almost representation.

    Returns
    -------
    document : Dict[str, Any]
        JSON-compatible document.
    """
    presentation = phi.presentation
    return {
        "schema": SCHEMA_VERSION,
        "presentation": {
            "generators": list(presentation.generators),
            "relations": [[[label, power] for label, power in r] for r in presentation.relations],
            "generator_loops": [list(loop.vertices) for loop in presentation.generator_loops],
            "basepoint": presentation.basepoint,
            "generator_edges": [list(e) for e in presentation.generator_edges]
        },
        "images": {label: matrix_to_json(phi.images[label]) for label in presentation.generators}
    }


def rep_from_dict(document: Dict[str, Any]) -> AlmostRep:
    """
    Decodes and validates an almost representation document.

    Parameters
    ----------
    document : Dict[str, Any]
        Decoded JSON.

    Returns
    -------
    phi : AlmostRep
        Almost representation.
    """
    validate(document, REP_SCHEMA, "almost representation")
    data = document["presentation"]
    presentation = Presentation(
        generators=data["generators"],
        relations=data["relations"],
        generator_loops=[SimplicialPath(tuple(loop)) for loop in data.get("generator_loops", [])],
        basepoint=data.get("basepoint"),
        generator_edges=data.get("generator_edges", [])
    )

    return AlmostRep(presentation=presentation, images={k: matrix_from_json(v) for k, v in document["images"].items()})
