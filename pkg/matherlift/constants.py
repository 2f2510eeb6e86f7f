from types import SimpleNamespace


MONOMIAL_ORDER = SimpleNamespace(
    LEX="lex",
    DEGREVLEX="degrevlex",
    BLOCK="block",
)

EXIT_CODE = SimpleNamespace(
    SUCCESS=0,
    INPUT_ERROR=1,
    GENERICITY_FAILURE=2,
    PROPERTY_VIOLATION=3,
)

OUTPUT_FORMAT = SimpleNamespace(
    JSON="json",
    TABLE="table",
)

EXAMPLE = SimpleNamespace(
    QUADRIC_CONE="quadric_cone",
    NODE="node",
    CUSP="cusp",
    SMOOTH_CONIC="smooth_conic",
    SMOOTH_QUADRIC="smooth_quadric",
    PROJECTIVE_PLANE="projective_plane",
)

# splitmix64 constants
SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
SPLITMIX_MIX_1 = 0xBF58476D1CE4E5B9
SPLITMIX_MIX_2 = 0x94D049BB133111EB
UINT64_MASK = (1 << 64) - 1

RATIONAL_PATTERN = r"^-?[0-9]+(/[0-9]+)?$"

# Variable name prepended when an elimination variable is needed.
ELIMINATION_VARIABLE = "_t"
