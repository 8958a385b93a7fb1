from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class RunManifest(BaseModel):
    """Everything needed to reproduce one CLI invocation"""

    command: str
    argv: List[str] = Field(default_factory=list)
    input_digests: Dict[str, str] = Field(default_factory=dict)  # path -> canonical hex digest
    rng_seed: Optional[int] = None
    parameters: Dict[str, Any] = Field(default_factory=dict)
    tool_version: str
