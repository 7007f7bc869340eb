# config/constants.py
from typing import Tuple

APP_TITLE = "kohomologi: H*(A_Γ, ℤA_Γ) från flaggkomplexet, 1.0"

# Orakel-vakt: 2^n-uppräkningar över W_σ vägras när n överstiger gränsen
DEFAULT_EXPONENT_BOUND: int = 20
EXPONENT_BOUND_ENV: str = "RAAG_EXPONENT_BOUND"

# Korpus: märkta grafer, 2^(n över 2) stycken per storlek
DEFAULT_CORPUS_MAX_VERTICES: int = 5
CORPUS_VERTEX_LIMIT: int = 6
# Barycentrisk borttagningsmodell blir dyr snabbt; körs bara upp till 4 hörn i korpus
DELETION_MODEL_MAX_VERTICES: int = 4

PRESET_NAMES: Tuple[str, ...] = ("path", "cycle", "complete", "discrete", "rp2")
ORACLE_NAMES: Tuple[str, ...] = ("mirror", "davis", "lemma", "deletion", "doublelink", "coxeter")

# Avslutningskoder
EXIT_OK: int = 0
EXIT_FAILURE: int = 1
EXIT_USAGE: int = 2

INFINITE_TAG: str = "inf"
