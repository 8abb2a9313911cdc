from .models import CheckReport, GenConfig
from .generators import InstanceGenerator, gen_herm, gen_matched_pair
from .checks import CHECKS, LawCheck, get_check
from .oracles import holzer_isotropic, holzer_solution, legendre_normal
from .runner import CheckRunner, create_result_dictionary, minimize, replay, resolve_check_names, run_check

__all__ = [
    "CheckReport", "GenConfig",
    "InstanceGenerator", "gen_herm", "gen_matched_pair",
    "CHECKS", "LawCheck", "get_check",
    "holzer_isotropic", "holzer_solution", "legendre_normal",
    "CheckRunner", "create_result_dictionary", "minimize", "replay", "resolve_check_names", "run_check",
]
