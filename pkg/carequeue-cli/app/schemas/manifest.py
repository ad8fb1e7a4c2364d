from typing import Any, Dict, Optional

from pydantic import Field

from carequeue_types.base import FrozenModel


class RunManifest(FrozenModel):
    """What a CLI run read and how it was configured, saved next to its output."""

    command: str = Field(..., description="CLI command name", title="Command")
    run_id: str = Field(..., description="Run id carried by log events", title="Run Id")
    inputs: Dict[str, str] = Field(
        default_factory=dict, description="Input paths by role", title="Inputs"
    )
    input_fingerprints: Dict[str, str] = Field(
        default_factory=dict,
        description="SHA-256 of each input scenario by role",
        title="Input Fingerprints",
    )
    intervention: Optional[str] = Field(None, title="Intervention")
    instances: Optional[int] = Field(None, title="Instances")
    master_seed: Optional[int] = Field(None, title="Master Seed")
    settings: Dict[str, Any] = Field(
        default_factory=dict,
        description="Effective settings after command-line overrides",
        title="Settings",
    )
    version: str = Field(..., description="carequeue version", title="Version")
