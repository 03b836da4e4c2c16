"""Published JSON schemas for every CLI payload.

Kept as plain dicts so callers can validate outputs with any JSON-schema
implementation; the test suite checks every subcommand against these.
"""

_VERTEX_LIST = {"type": "array", "items": {"type": "string"}}

_FACE = {
    "type": "object",
    "required": ["elements", "dim", "unsaturated"],
    "additionalProperties": False,
    "properties": {
        "elements": {"type": "array", "items": _VERTEX_LIST},
        "dim": {"type": "integer", "minimum": 0},
        "unsaturated": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["B", "alpha"],
                "additionalProperties": False,
                "properties": {"B": _VERTEX_LIST, "alpha": _VERTEX_LIST},
            },
        },
    },
}

_RATIONAL = {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}

_LETTER = {
    "type": "object",
    "required": ["letter", "exp"],
    "additionalProperties": False,
    "properties": {
        "exp": {"type": "integer"},
        "letter": {
            "type": "object",
            "required": ["type"],
            "properties": {
                "type": {"enum": ["S", "Phi", "a"]},
                "vertex": {"type": "string"},
                "B": _VERTEX_LIST,
                "pair": _VERTEX_LIST,
                "alpha": {"type": "string"},
            },
        },
    },
}

SCHEMAS = {
    "faces": {
        "type": "object",
        "required": ["faces"],
        "additionalProperties": False,
        "properties": {"faces": {"type": "array", "items": _FACE}},
    },
    "fvector": {
        "type": "object",
        "required": ["f"],
        "additionalProperties": False,
        "properties": {"f": {"type": "array", "items": {"type": "integer"}}},
    },
    "twofaces": {
        "type": "object",
        "required": ["twofaces", "counts"],
        "additionalProperties": False,
        "properties": {
            "twofaces": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["elements", "kind"],
                    "additionalProperties": False,
                    "properties": {
                        "elements": {"type": "array", "items": _VERTEX_LIST},
                        "kind": {"enum": ["square", "pentagon", "hexagon"]},
                    },
                },
            },
            "counts": {
                "type": "object",
                "required": ["square", "pentagon", "hexagon"],
                "additionalProperties": False,
                "properties": {
                    "square": {"type": "integer"},
                    "pentagon": {"type": "integer"},
                    "hexagon": {"type": "integer"},
                },
            },
        },
    },
    "polytope": {
        "type": "object",
        "required": ["vertices", "h_representation"],
        "additionalProperties": False,
        "properties": {
            "off": {"type": "string"},
            "vertices": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["face", "coords"],
                    "additionalProperties": False,
                    "properties": {
                        "face": {"type": "array", "items": _VERTEX_LIST},
                        "coords": {"type": "array", "items": _RATIONAL},
                    },
                },
            },
            "h_representation": {
                "type": "object",
                "required": ["equality", "inequalities"],
                "additionalProperties": False,
                "properties": {
                    "equality": {
                        "type": "object",
                        "required": ["B", "rhs"],
                        "properties": {"B": _VERTEX_LIST, "rhs": _RATIONAL},
                    },
                    "inequalities": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["B", "rhs"],
                            "properties": {"B": _VERTEX_LIST, "rhs": _RATIONAL},
                        },
                    },
                },
            },
        },
    },
    "homology": {
        "type": "object",
        "required": ["H"],
        "additionalProperties": False,
        "properties": {
            "H": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["betti"],
                    "additionalProperties": False,
                    "properties": {
                        "betti": {"type": "integer"},
                        "torsion": {"type": "array", "items": {"type": "integer"}},
                    },
                },
            }
        },
    },
    "dynkin": {
        "type": "object",
        "required": ["HD", "dims"],
        "additionalProperties": False,
        "properties": {
            "HD": {"type": "array", "items": {"type": "integer"}},
            "dims": {"type": "array", "items": {"type": "integer"}},
        },
    },
    "relations": {
        "type": "object",
        "required": ["generators", "relations"],
        "additionalProperties": False,
        "properties": {
            "generators": {
                "type": "object",
                "required": ["S", "Phi", "a"],
                "additionalProperties": False,
                "properties": {
                    "S": _VERTEX_LIST,
                    "Phi": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["B", "pair"],
                            "properties": {"B": _VERTEX_LIST, "pair": _VERTEX_LIST},
                        },
                    },
                    "a": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["B", "alpha"],
                            "properties": {"B": _VERTEX_LIST, "alpha": {"type": "string"}},
                        },
                    },
                },
            },
            "relations": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["kind", "word"],
                    "additionalProperties": False,
                    "properties": {
                        "kind": {"enum": ["pentagon5", "hexagon6", "braid", "orientation"]},
                        "word": {"type": "array", "items": _LETTER},
                    },
                },
            },
        },
    },
    "sequence": {
        "type": "object",
        "required": ["sequence"],
        "additionalProperties": False,
        "properties": {
            "sequence": {
                "type": "array",
                "items": {"type": "array", "items": _VERTEX_LIST},
            }
        },
    },
    "support": {
        "type": "object",
        "required": ["supp", "zsupp"],
        "additionalProperties": False,
        "properties": {"supp": _VERTEX_LIST, "zsupp": _VERTEX_LIST},
    },
}
