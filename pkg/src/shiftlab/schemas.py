"""JSON schemas for the machine-readable reports."""

_monomial = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_support_list = {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 1}}}
_field = {"type": "integer", "minimum": 0}
_nullable_int = {"type": ["integer", "null"]}
_nullable_bool = {"type": ["boolean", "null"]}

BETTI = {
    "type": "object",
    "required": ["field", "entries"],
    "properties": {
        "field": _field,
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "multidegree", "dim"],
                "properties": {
                    "i": {"type": "integer", "minimum": 0},
                    "multidegree": _monomial,
                    "dim": {"type": "integer", "minimum": 1},
                },
                "additionalProperties": False,
            },
        },
    },
}

VNUMBER = {
    "type": "object",
    "required": ["v", "primes"],
    "properties": {
        "v": {"type": "integer", "minimum": 0},
        "primes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["prime", "v_p", "witness"],
                "properties": {
                    "prime": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "v_p": {"type": "integer", "minimum": 0},
                    "witness": _monomial,
                },
            },
        },
    },
}

ASS = {"type": "object", "required": ["field", "ass"], "properties": {"field": _field, "ass": _support_list}}

ORDER = {
    "type": "object",
    "required": ["order", "sets"],
    "properties": {
        "order": {"type": "array", "items": _monomial},
        "sets": _support_list,
    },
}

_row = {
    "type": "object",
    "required": ["k", "gens", "reg", "depth", "v", "ass", "linear", "forward", "backward"],
    "properties": {
        "k": {"type": "integer", "minimum": 1},
        "gens": {"type": "integer", "minimum": 0},
        "reg": _nullable_int,
        "depth": _nullable_int,
        "v": _nullable_int,
        "ass": {"anyOf": [{"type": "null"}, _support_list]},
        "linear": _nullable_bool,
        "forward": _nullable_bool,
        "backward": _nullable_bool,
    },
}

SWEEP = {
    "type": "object",
    "required": ["field", "i", "kmax", "truncated_at", "rows"],
    "properties": {
        "field": _field,
        "i": {"type": "integer", "minimum": 0},
        "kmax": {"type": "integer", "minimum": 2},
        "truncated_at": _nullable_int,
        "rows": {"type": "array", "items": _row},
        "report": {"type": "object"},
    },
}

HLP = {
    "type": "object",
    "required": ["field", "kmax", "flags", "verdict"],
    "properties": {
        "field": _field,
        "kmax": {"type": "integer"},
        "flags": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "k", "linear"],
                "properties": {"i": {"type": "integer"}, "k": {"type": "integer"}, "linear": _nullable_bool},
            },
        },
        "verdict": {"type": "string"},
    },
}

GOLOD = {
    "type": "object",
    "required": ["strongly_golod", "derivative", "witnesses"],
    "properties": {
        "strongly_golod": {"type": "boolean"},
        "derivative": {"type": "array", "items": _monomial},
        "witnesses": {"type": "array", "items": {"type": "array", "items": _monomial}},
    },
}

IDEAL = {
    "type": "object",
    "required": ["field", "n", "ideal", "generators"],
    "properties": {
        "field": _field,
        "n": {"type": "integer", "minimum": 1},
        "ideal": {"type": "string"},
        "generators": {"type": "array", "items": _monomial},
    },
}
