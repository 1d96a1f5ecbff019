from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional, Tuple


@dataclass(frozen=True)
class RunManifest:
    config_hash: str
    toolkit_version: str
    seed: Optional[int]
    wall_time_seconds: float
    warnings: Tuple[str, ...] = ()
    outputs: Tuple[str, ...] = ()
    metadata: Dict[str, Any] = field(default_factory=dict)

    def with_warnings(self, *warnings: str) -> 'RunManifest':
        fresh = tuple(warning for warning in warnings if warning not in self.warnings)
        return replace(self, warnings=self.warnings + fresh)

    def as_dict(self) -> Dict[str, Any]:
        return dict(
            config_hash=self.config_hash,
            toolkit_version=self.toolkit_version,
            seed=self.seed,
            wall_time_seconds=self.wall_time_seconds,
            warnings=list(self.warnings),
            outputs=list(self.outputs),
            metadata=dict(self.metadata),
        )
