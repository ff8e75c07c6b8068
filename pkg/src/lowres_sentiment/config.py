"""Dataclass configs for training, sweeps and CLI runs."""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional

from .errors import ConfigError, FractionOutOfRangeError, MissingFileError

CONFIG_ENV_VAR = "LOWRES_SENTIMENT_CONFIG"

METHODS = ("decision_tree", "knn", "mlp", "naive_bayes")


@dataclass(frozen=True)
class TrainConfig:
    seed: int = 0
    knn_k: int = 5
    dt_max_depth: Optional[int] = None
    dt_min_leaf: int = 1
    mlp_hidden: int = 16
    mlp_learning_rate: float = 0.05
    mlp_epochs: int = 200
    nb_alpha: float = 1.0

    def __post_init__(self):
        for name in ("knn_k", "dt_min_leaf", "mlp_hidden", "mlp_epochs"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.dt_max_depth is not None and (not isinstance(self.dt_max_depth, int) or self.dt_max_depth < 1):
            raise ConfigError(f"dt_max_depth must be a positive integer or None, got {self.dt_max_depth!r}")
        if not self.mlp_learning_rate > 0:
            raise ConfigError(f"mlp_learning_rate must be positive, got {self.mlp_learning_rate!r}")
        if not self.nb_alpha >= 0:
            raise ConfigError(f"nb_alpha must be >= 0, got {self.nb_alpha!r}")
        if not isinstance(self.seed, int):
            raise ConfigError(f"seed must be an integer, got {self.seed!r}")


@dataclass(frozen=True)
class SweepConfig:
    start: float = 0.25
    end: float = 0.75
    step: float = 0.05
    seed: int = 42
    stratify: bool = False

    def __post_init__(self):
        if not self.step > 0:
            raise FractionOutOfRangeError(f"sweep step must be positive, got {self.step}")
        for name in ("start", "end"):
            f = getattr(self, name)
            if not 0 < f < 1:
                raise FractionOutOfRangeError(f"sweep {name} must lie in (0, 1), got {f}")


@dataclass(frozen=True)
class RunConfig:
    """Everything a CLI run needs. Loaded from a flat JSON object."""

    corpus: Optional[str] = None
    format: Optional[str] = None
    stopwords: Optional[str] = None
    variant: str = "standard"
    methods: tuple = METHODS
    seed: int = 42
    output_dir: str = "results"
    jobs: int = 1
    train: TrainConfig = field(default_factory=TrainConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any], base_dir: Path | None = None) -> "RunConfig":
        data = dict(data)
        if "seed" not in data:
            raise ConfigError("config must pin a seed")
        train_keys = {f.name for f in dataclasses.fields(TrainConfig)}
        sweep_map = {"sweep_start": "start", "sweep_end": "end", "sweep_step": "step", "stratify": "stratify"}
        run_keys = {f.name for f in dataclasses.fields(cls)} - {"train", "sweep"}

        unknown = set(data) - train_keys - set(sweep_map) - run_keys
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")

        seed = data["seed"]
        train_kwargs = {k: data[k] for k in train_keys if k in data}
        train_kwargs["seed"] = seed
        sweep_kwargs = {v: data[k] for k, v in sweep_map.items() if k in data}
        sweep_kwargs["seed"] = seed
        run_kwargs = {k: data[k] for k in run_keys if k in data}
        if "methods" in run_kwargs:
            methods = run_kwargs["methods"]
            if isinstance(methods, str):
                methods = [m.strip() for m in methods.split(",") if m.strip()]
            run_kwargs["methods"] = tuple(methods)
        if base_dir is not None:
            for key in ("corpus", "stopwords"):
                value = run_kwargs.get(key)
                if value and not Path(value).is_absolute():
                    run_kwargs[key] = str(base_dir / value)
        try:
            return cls(train=TrainConfig(**train_kwargs), sweep=SweepConfig(**sweep_kwargs), **run_kwargs)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc

    @classmethod
    def load(cls, path) -> "RunConfig":
        path = Path(path)
        if not path.is_file():
            raise MissingFileError(path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"{path}: expected a JSON object")
        return cls.from_mapping(data, base_dir=path.parent)

    def validate_paths(self) -> None:
        for key in ("corpus", "stopwords"):
            value = getattr(self, key)
            if value and not Path(value).is_file():
                raise MissingFileError(value)


def default_config_path() -> Optional[str]:
    return os.environ.get(CONFIG_ENV_VAR)
