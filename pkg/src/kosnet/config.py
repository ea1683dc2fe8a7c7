"""Pipeline configuration: flat ``key = value`` files overridden by CLI flags."""
from __future__ import annotations

import configparser
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Mapping, Optional

from kosnet.enrichment import EnrichConfig
from kosnet.recommender import DEFAULT_MIN_SCORE, DEFAULT_TOP_K

OUTPUT_DIR_ENV = "KOSNET_OUTPUT_DIR"

_FLOAT_KEYS = ("w_direct", "w_related", "w_broader", "min_score")
_INT_KEYS = ("top_k",)
_BOOL_KEYS = ("enrichment_enabled",)
_PATH_KEYS = ("data_path", "kos_path", "output_dir")
KNOWN_KEYS = _FLOAT_KEYS + _INT_KEYS + _BOOL_KEYS + _PATH_KEYS


class ConfigError(ValueError):
    pass


def parse_config_text(text: str, source: str = "<config>") -> dict[str, Any]:
    """Parse ``key = value`` lines (``#`` comments) into typed values."""
    cp = configparser.ConfigParser(
        delimiters=("=",), comment_prefixes=("#",), inline_comment_prefixes=("#",),
        interpolation=None,
    )
    try:
        cp.read_string("[kosnet]\n" + text, source=source)
    except configparser.Error as exc:
        raise ConfigError(f"{source}: {exc}") from None
    section = cp["kosnet"]
    out: dict[str, Any] = {}
    for key in section:
        if key not in KNOWN_KEYS:
            raise ConfigError(f"{source}: unknown key {key!r}")
        try:
            if key in _FLOAT_KEYS:
                out[key] = section.getfloat(key)
            elif key in _INT_KEYS:
                out[key] = section.getint(key)
            elif key in _BOOL_KEYS:
                out[key] = section.getboolean(key)
            else:
                out[key] = section[key]
        except ValueError as exc:
            raise ConfigError(f"{source}: bad value for {key!r}: {exc}") from None
    return out


def load_config_file(path) -> dict[str, Any]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc.strerror}") from None
    return parse_config_text(text, str(path))


@dataclass(frozen=True)
class PipelineConfig:
    data_path: Path
    kos_path: Path
    output_dir: Optional[Path] = None
    enrich: EnrichConfig = field(default_factory=EnrichConfig)
    top_k: int = DEFAULT_TOP_K
    min_score: float = DEFAULT_MIN_SCORE

    def __post_init__(self):
        for name in ("data_path", "kos_path"):
            p = Path(getattr(self, name))
            if not p.is_file() or not os.access(p, os.R_OK):
                raise ConfigError(f"{name.replace('_path', '')} file is missing or unreadable: {p}")
        if self.top_k < 0:
            raise ConfigError("top_k must be >= 0")
        if not 0 <= self.min_score <= 1:
            raise ConfigError("min_score must lie in [0, 1]")

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any], env: Optional[Mapping[str, str]] = None) -> "PipelineConfig":
        """Build from merged settings; ``output_dir`` falls back to ``$KOSNET_OUTPUT_DIR``."""
        env = os.environ if env is None else env
        for key in ("data_path", "kos_path"):
            if not values.get(key):
                raise ConfigError(f"missing required setting {key!r}")
        enrich_kw = {f.name: values[f.name] for f in fields(EnrichConfig) if values.get(f.name) is not None}
        try:
            enrich = EnrichConfig(**enrich_kw)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        out = values.get("output_dir") or env.get(OUTPUT_DIR_ENV) or None
        return cls(
            data_path=Path(values["data_path"]),
            kos_path=Path(values["kos_path"]),
            output_dir=Path(out) if out else None,
            enrich=enrich,
            top_k=DEFAULT_TOP_K if values.get("top_k") is None else values["top_k"],
            min_score=DEFAULT_MIN_SCORE if values.get("min_score") is None else values["min_score"],
        )
