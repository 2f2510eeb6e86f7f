from matherlift.constants import RATIONAL_PATTERN


def get_matrix_schema(min_rows=0):
    """Return a schema for a list of rows of rational entries."""
    return {
        "type": "array",
        "minItems": min_rows,
        "items": {"type": "array", "items": RATIONAL_SCHEMA},
    }


RATIONAL_SCHEMA = {
    "oneOf": [
        {"type": "string", "pattern": RATIONAL_PATTERN},
        {"type": "integer"},
    ]
}

POLYNOMIAL_SCHEMA = {
    "type": "object",
    "properties": {
        "vars": {
            "type": "array",
            "items": {"type": "string", "minLength": 1},
            "uniqueItems": True,
        },
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "c": RATIONAL_SCHEMA,
                    "e": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                },
                "required": ["c", "e"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["vars", "terms"],
}

IDEAL_SCHEMA = {
    "oneOf": [
        {"type": "array", "items": POLYNOMIAL_SCHEMA},
        {
            "type": "object",
            "properties": {
                "vars": POLYNOMIAL_SCHEMA["properties"]["vars"],
                "generators": {"type": "array", "items": POLYNOMIAL_SCHEMA},
            },
            "required": ["vars", "generators"],
        },
    ]
}

HYPERSURFACE_SCHEMA = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "f": POLYNOMIAL_SCHEMA,
    },
    "required": ["f"],
}

FLAG_SCHEMA = get_matrix_schema(min_rows=1)

CONE_INPUT_SCHEMA = {
    "type": "object",
    "properties": {
        "base_betti": {
            "type": "array",
            "items": {"type": "integer", "minimum": 0},
            "minItems": 1,
        },
        "middle_pd_rank": {"type": "integer", "minimum": 0},
    },
    "required": ["base_betti", "middle_pd_rank"],
    "additionalProperties": False,
}

GRADED_CLASS_SCHEMA = {
    "type": "object",
    "patternProperties": {
        "^deg[0-9]+$": {
            "type": "object",
            "additionalProperties": RATIONAL_SCHEMA,
        }
    },
    "additionalProperties": False,
}
