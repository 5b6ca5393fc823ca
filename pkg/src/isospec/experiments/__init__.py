"""/src/isospec/experiments/__init__.py"""

from .models import (
    BumpReport,
    ExperimentConfig,
    InvariantsReport,
    SpectrumExperimentReport,
    VerifyReport,
)
from .commands import cmd_bump, cmd_invariants, cmd_spectrum, cmd_verify
from .config_file import build_config, load_config_file, parse_pair_token, resolve_pairs

COMMANDS = {
    "invariants": cmd_invariants,
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "bump": cmd_bump,
}

__all__ = [
    "BumpReport",
    "COMMANDS",
    "ExperimentConfig",
    "InvariantsReport",
    "SpectrumExperimentReport",
    "VerifyReport",
    "build_config",
    "cmd_bump",
    "cmd_invariants",
    "cmd_spectrum",
    "cmd_verify",
    "load_config_file",
    "parse_pair_token",
    "resolve_pairs",
]
