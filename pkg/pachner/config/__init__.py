"""Run configuration."""

from pachner.config.loader import load_config
from pachner.config.models import GuardConfig, RunConfig

__all__ = ["GuardConfig", "RunConfig", "load_config"]
