"""/src/isospec/experiments/config_file.py

Experiment files are INI files with a [common] section and one section per
command:

    [common]
    example = s5-pair
    seed = 20010501

    [spectrum]
    degree = 3
    quad_orders = 9, 19

Values from the command's section override [common]; CLI flags override both.
"""

import configparser
import math
import re
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from isospec.algebra import family_j, generic_example, pair_c, zero_skew_pair, zero_sym_pair
from isospec.algebra.models import MapPair, SymMapPair
from isospec.errors import ConfigError

from .models import ExperimentConfig

LIST_KEYS = {"t_values", "quad_orders", "bump_center", "bump_radii"}
INT_KEYS = {"degree", "weight_bound", "samples", "test_polynomials", "points", "mc_samples", "seed"}
INT_LIST_KEYS = {"quad_orders"}

_PI_PATTERN = re.compile(r"^(?P<coef>[-+]?[\d.]*)\s*\*?\s*pi(?:\s*/\s*(?P<den>[\d.]+))?$")


def parse_real(text: str) -> float:
    """Float, or a multiple of pi such as 'pi/2', '-pi', '0.5*pi'."""
    text = text.strip()
    match = _PI_PATTERN.match(text)
    if match is None:
        return float(text)
    coef = match.group("coef")
    value = math.pi * (float(coef) if coef not in ("", "+", "-") else (-1.0 if coef == "-" else 1.0))
    if match.group("den"):
        value /= float(match.group("den"))
    return value


def parse_value(key: str, raw: str) -> Any:
    raw = raw.strip()
    if key in LIST_KEYS:
        items = [item for item in raw.split(",") if item.strip()]
        if key in INT_LIST_KEYS:
            return [int(item) for item in items]
        return [parse_real(item) for item in items]
    if key in INT_KEYS:
        return int(raw)
    if key in {"tol", "verify_tol", "eps", "bump_amplitude"}:
        return parse_real(raw)
    return raw


def load_config_file(path: str | Path, command: str) -> dict[str, Any]:
    """Merged key/value mapping for one command.

    Raises:
        ConfigError: if the file is missing, malformed or holds unparsable values
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file {path} does not exist")
    parser = configparser.ConfigParser()
    try:
        parser.read(path)
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    values: dict[str, Any] = {}
    for section in ("common", command):
        if not parser.has_section(section):
            continue
        for key, raw in parser.items(section):
            try:
                values[key] = parse_value(key, raw)
            except ValueError as exc:
                raise ConfigError(f"{path} [{section}] {key}: {exc}") from exc
    return values


def build_config(command: str, file_values: dict[str, Any], overrides: dict[str, Any]) -> ExperimentConfig:
    """Validate defaults < file values < overrides into an ExperimentConfig."""
    merged = {**file_values, **{key: value for key, value in overrides.items() if value is not None}}
    merged["command"] = command
    try:
        return ExperimentConfig(**merged)
    except ValidationError as exc:
        raise ConfigError(str(exc)) from exc


def parse_pair_token(token: str) -> MapPair:
    """Resolve a pair token.

    zero-su:<m>, zero-sym, c, c-prime, j:<t>, c-scaled:<factor>,
    generic:<a1;a2;...>

    Raises:
        ConfigError: for unknown tokens or invalid parameters
    """
    name, _, argument = token.strip().partition(":")
    try:
        if name == "zero-su":
            return zero_skew_pair(int(argument))
        if name == "zero-sym":
            return zero_sym_pair()
        if name == "c":
            return pair_c()[0]
        if name == "c-prime":
            return pair_c()[1]
        if name == "j":
            return family_j(parse_real(argument))
        if name == "c-scaled":
            base = pair_c()[0]
            return SymMapPair(C1=base.C1, C2=parse_real(argument) * base.C2)
        if name == "generic":
            return generic_example([parse_real(a) for a in argument.split(";")])
    except (ValueError, ValidationError) as exc:
        raise ConfigError(f"invalid pair token {token!r}: {exc}") from exc
    raise ConfigError(f"unknown pair token {token!r}")


def resolve_pairs(cfg: ExperimentConfig) -> list[tuple[str, MapPair]]:
    """Labelled matrix pairs an experiment works on, in a fixed order."""
    if cfg.example == "s5-pair":
        c, c_prime = pair_c()
        return [("c", c), ("c-prime", c_prime)]
    if cfg.example == "s7-family":
        return [(f"j({t:.6g})", family_j(t)) for t in cfg.t_values]
    pairs = [(cfg.pair_a, parse_pair_token(cfg.pair_a))]
    if cfg.pair_b:
        pairs.append((cfg.pair_b, parse_pair_token(cfg.pair_b)))
    kinds = {(pair.kind, pair.size) for _, pair in pairs}
    if len(kinds) > 1:
        raise ConfigError(f"pairs {cfg.pair_a!r} and {cfg.pair_b!r} act on different spaces")
    return pairs
