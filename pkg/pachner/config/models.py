"""Pydantic models for pachner run configuration."""

from pathlib import Path

from pydantic import BaseModel, Field

from pachner.store.cache import default_cache_dir


class GuardConfig(BaseModel):
    """Limits that stop long searches."""

    max_height: int = Field(
        default=8, ge=0, description="Highest excess height the height analysis reaches"
    )
    max_rounds: int = Field(
        default=64, ge=0, description="Jump rounds for length analysis and simplify"
    )
    census_ceiling: int = Field(
        default=6, ge=1, description="Largest census size run without override"
    )
    allow_above_ceiling: bool = Field(
        default=False, description="Permit census sizes above the ceiling"
    )


class RunConfig(BaseModel):
    """Main pachner configuration model."""

    jobs: int = Field(default=1, ge=1, description="Worker processes")
    guards: GuardConfig = GuardConfig()
    spheres_dir: Path | None = Field(
        default=None, description="Sphere level files (per-user cache if unset)"
    )
    sphere_height: int = Field(
        default=2, ge=0, description="Height allowance used when closing sphere levels"
    )
    verbosity: int = Field(
        default=0, ge=0, le=2, description="0 warnings, 1 info, 2 debug"
    )
    quiet: bool = Field(default=False, description="Suppress log output")

    def model_post_init(self, __context) -> None:
        """Validate configuration after initialization."""
        if self.quiet and self.verbosity:
            raise ValueError("quiet and verbose output cannot both be requested")

    @property
    def spheres_path(self) -> Path:
        """:return:"""
        return self.spheres_dir if self.spheres_dir is not None else default_cache_dir()
