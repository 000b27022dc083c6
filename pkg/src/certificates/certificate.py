import abc
import json
from pathlib import Path
from typing import Any, Union

SCHEMA = "logfree-certificate/1"


def canonical_json(payload: Any) -> str:
    """Sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


class Certificate(abc.ABC):
    schema = SCHEMA

    @abc.abstractmethod
    def generate(self) -> dict[str, Any]: ...

    def to_json(self) -> str:
        return canonical_json(self.generate())

    def dump(self, output_path: Union[str, Path]) -> None:
        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(), encoding="utf-8")
