"Constants for the schubertkit library and command line."
from typing import Final

DOMAIN: Final = "schubertkit"

# Option keys
CONF_DEGREE_CAP: Final = "degree_cap"
CONF_WORD_LIMIT: Final = "word_limit"
CONF_JOBS: Final = "jobs"
CONF_OUTPUT_FORMAT: Final = "output_format"

DEFAULT_DEGREE_CAP: Final = 12
DEFAULT_WORD_LIMIT: Final = 1_000_000
DEFAULT_JOBS: Final = 1
DEFAULT_OUTPUT_FORMAT: Final = "text"

ENV_DEGREE_CAP: Final = "SCHUBERTKIT_DEGREE_CAP"

OUTPUT_FORMATS: Final = ["text", "json"]

# Generator token for s_box in type D; sorts before s_1.
BOX: Final = -1
BOX_TOKEN: Final = "b"

# Shared polynomial ring layout: alphabet name -> number of variables.
ALPHABET_ORDER: Final = ("q", "x", "y", "z", "t", "w")
ALPHABET_ARITY: Final = {
    "q": 18,
    "x": 8,
    "y": 8,
    "z": 8,
    "t": 8,
    "w": 4,
}

RING_GAMMA: Final = "Gamma"
RING_GAMMA_PRIME: Final = "GammaPrime"

SCHUBERT_TYPES: Final = ["A", "B", "C", "D"]

BASIS_SCHUR: Final = "schur_s"
BASIS_Q: Final = "Q"
BASIS_P: Final = "P"
BASIS_THETA: Final = "theta"
BASIS_ETA: Final = "eta"
BASES: Final = [BASIS_SCHUR, BASIS_Q, BASIS_P, BASIS_THETA, BASIS_ETA]

STANLEY_VARIANTS: Final = ["single", "double", "mixed", "restricted_mixed"]

# Choice of the f_k correction sign in hatted families.
F_ALTERNATING: Final = "alternating"
F_B: Final = "b"
F_BTILDE: Final = "btilde"
F_HALF: Final = "half"
F_CHOICES: Final = [F_ALTERNATING, F_B, F_BTILDE, F_HALF]

SUITES: Final = [
    "top",
    "characterization",
    "flagged",
    "duality",
    "reverse",
    "grassmannian",
    "typeD",
    "splitting",
    "stanley",
    "key",
]
SUITE_ALL: Final = "all"

LOG_FORMAT: Final = (
    "%(asctime)s.%(msecs)03d %(levelname)-8s %(name)s:%(filename)s:%(lineno)d %(message)s"
)
LOG_DATE_FORMAT: Final = "%Y-%m-%d %H:%M:%S"
