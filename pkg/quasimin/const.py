from fractions import Fraction

AXIS_X = "x"
AXIS_Y = "y"

STATUS_LOCAL_MIN = "LocalMin"
STATUS_NOT_LOCAL_MIN = "NotLocalMin"
STATUS_UNRESOLVED = "Unresolved"

KIND_AXIS_DESCENT = "axis-descent"
KIND_SCALED_POINT_DESCENT = "scaled-point-descent"
KIND_CURVE_DESCENT = "curve-descent"

RULE_SINGLE_FORM = "single-form"
RULE_MAIN_TERM = "main-term"
RULE_CORNER_CONDITION = "corner-condition"
RULE_AXIS_CONDITION = "axis-condition"
RULE_FACE_NONNEGATIVE = "face-nonnegative"
RULE_FACE_NEGATIVE = "face-negative"
RULE_WEAKLY_NONDEGENERATE = "weakly-nondegenerate"
RULE_LEVEL_JOINT = "level-system-joint"
RULE_LEVEL_CLEAR = "level-system-clear"
RULE_LEVEL_VANISHES = "level-vanishes"
RULE_PREFIX_MIN = "prefix-local-min"
RULE_PREFIX_FAILED = "prefix-not-settled"
RULE_DEPTH_EXHAUSTED = "depth-exhausted"
RULE_FORMS_EXHAUSTED = "forms-exhausted"
RULE_ROOT_CASE = "root-case"
RULE_TWO_FORM = "two-form"
RULE_AXIS_GATE = "axis-gate"
RULE_DESCENT_SEARCH = "descent-search"
RULE_DISCREPANCY = "discrepancy"

# criterion each rule applies, reported with every trace entry
RULE_REFERENCES = {
    RULE_SINGLE_FORM: "single form: nonnegative characteristic polynomial",
    RULE_MAIN_TERM: "single term: positive coefficient, even exponents",
    RULE_CORNER_CONDITION: "corner terms: positive coefficients, even exponents",
    RULE_AXIS_CONDITION: "axis restriction: positive leading term of even degree",
    RULE_FACE_NONNEGATIVE: "face form: real roots of even multiplicity only",
    RULE_FACE_NEGATIVE: "face form: negative value on the face direction",
    RULE_WEAKLY_NONDEGENERATE: "face form: characteristic polynomial has no real roots",
    RULE_LEVEL_JOINT: "level system: solvable sign system at a root",
    RULE_LEVEL_CLEAR: "level system: unsolvable sign system at a root",
    RULE_LEVEL_VANISHES: "level system: higher form vanishes at the root",
    RULE_PREFIX_MIN: "level system: leading forms sum to a local minimum",
    RULE_PREFIX_FAILED: "level system: leading forms not settled",
    RULE_DEPTH_EXHAUSTED: "level system: depth limit reached",
    RULE_FORMS_EXHAUSTED: "level system: no further forms",
    RULE_ROOT_CASE: "two forms: multiplicity of the root in the second form",
    RULE_TWO_FORM: "two forms: every root absorbed or sign system unsolvable",
    RULE_AXIS_GATE: "axis restriction: descent along a coordinate axis",
    RULE_DESCENT_SEARCH: "curve search: negative leading coefficient",
    RULE_DISCREPANCY: "level system: joint sign system overrides higher form sign",
}

DISCREPANCY_NOTE = (
    "descent decided by the joint sign system at this root, "
    "not by the sign of the higher form alone"
)

LEADING_CASE_1 = "1"
LEADING_CASE_2 = "2"
LEADING_CASE_3 = "3a"

DEFAULT_DEPTH = 4
DEFAULT_MAX_NU = 3
DEFAULT_UNKNOWNS = 3
DEFAULT_NODE_LIMIT = 4000
DEFAULT_MAX_KAPPA = 64
DEFAULT_GRID = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-2),
    Fraction(1, 2),
    Fraction(-1, 2),
)

EXIT_LOCAL_MIN = 0
EXIT_NOT_LOCAL_MIN = 1
EXIT_UNRESOLVED = 2
EXIT_USAGE = 64

OUTPUT_HUMAN = "human"
OUTPUT_JSON = "json"
