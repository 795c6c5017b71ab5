"""Settings loading and the validated run configuration for the CLI."""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple

import yaml

from chords.errors import ChordError, LimitExceededError
from symbolic.polynomial import SYMBOL_COUNT

ROOT = Path(__file__).parents[2]
ENV_LIMITS = {
    "bruteforce": "CHORDS_BRUTEFORCE_LIMIT",
    "constructive": "CHORDS_CONSTRUCTIVE_LIMIT",
}


def load_settings(path: Optional[Path] = None, env: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
    """Load config/settings.yaml and apply the environment overrides for the limits."""
    settings_path = path or ROOT / "config" / "settings.yaml"
    with open(settings_path, "r", encoding="utf-8") as f:
        settings = yaml.safe_load(f) or {}
    env = os.environ if env is None else env
    limits = settings.setdefault("limits", {})
    for key, var in ENV_LIMITS.items():
        raw = env.get(var, "").strip()
        if raw:
            try:
                limits[key] = int(raw)
            except ValueError:
                raise ChordError(f"{var} must be an integer, got {raw!r}")
    return settings


@dataclass(frozen=True)
class RunConfig:
    command: str
    action: Optional[str] = None
    n: int = 4
    order: int = 6
    k: int = 1
    method: str = "constructive"
    format: str = "text"
    c_bound: str = "1"
    family: Optional[str] = None
    params: Tuple[int, ...] = ()
    pairing: Tuple[int, ...] = ()
    fvals: Optional[str] = None
    report: Optional[str] = None
    csv: Optional[str] = None
    bruteforce_limit: int = 7
    constructive_limit: int = 8
    extra: Dict[str, Any] = field(default_factory=dict)

    def validate(self) -> "RunConfig":
        for name in ("n", "order", "k", "bruteforce_limit", "constructive_limit"):
            value = getattr(self, name)
            if value < 1:
                raise ChordError(f"{name} must be >= 1, got {value}")
        if self.order > SYMBOL_COUNT:
            raise LimitExceededError("order", self.order, SYMBOL_COUNT)
        if self.format not in ("text", "json"):
            raise ChordError(f"format must be text or json, got {self.format!r}")
        if self.method not in ("constructive", "bruteforce", "both", "sum", "solver"):
            raise ChordError(f"unknown method {self.method!r}")
        return self


def build_run_config(args: Any, settings: Mapping[str, Any]) -> RunConfig:
    """Merge argparse values over settings; flags beat env, env beats YAML."""
    defaults = settings.get("defaults", {})
    limits = settings.get("limits", {})

    def pick(name: str, fallback: Any) -> Any:
        value = getattr(args, name, None)
        return fallback if value is None else value

    config = RunConfig(
        command=args.command,
        action=getattr(args, "action", None),
        n=int(pick("n", defaults.get("n", 4))),
        order=int(pick("order", defaults.get("order", 6))),
        k=int(pick("k", 1)),
        method=pick("method", "constructive"),
        format=pick("format", defaults.get("format", "text")),
        c_bound=str(pick("c", "1")),
        family=getattr(args, "family", None),
        params=tuple(getattr(args, "params", None) or ()),
        pairing=tuple(getattr(args, "pairing", None) or ()),
        fvals=getattr(args, "fvals", None),
        report=getattr(args, "report", None),
        csv=getattr(args, "csv", None),
        bruteforce_limit=int(pick("bruteforce_limit", limits.get("bruteforce", 7))),
        constructive_limit=int(pick("constructive_limit", limits.get("constructive", 8))),
        extra={"output_dir": str(ROOT / settings.get("output", {}).get("dir", "data_clean"))},
    )
    return config.validate()
