from dataclasses import dataclass, replace
from typing import Any, Optional

from matrices.determinant import DeterminantMethod
from polys import GrevLex, MonomialOrder, get_order
from sequences import SequenceSpec


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every check.

    Defaults are overridden by a problem file's ``options`` and then by
    command-line flags.
    """

    order: MonomialOrder = GrevLex()
    method: DeterminantMethod = DeterminantMethod.BAREISS
    syzygy_degree_bound: Optional[int] = None
    assume_independent: bool = False
    pair_limit: int = 20000

    @classmethod
    def from_options(cls, options: dict[str, Any], **overrides: Any) -> "RunConfig":
        merged = {key: value for key, value in options.items() if value is not None}
        merged.update({key: value for key, value in overrides.items() if value is not None})
        config = cls()
        if "order" in merged:
            config = replace(config, order=get_order(merged["order"]))
        if "method" in merged:
            config = replace(config, method=DeterminantMethod(merged["method"]))
        if "degree_bound" in merged:
            config = replace(config, syzygy_degree_bound=int(merged["degree_bound"]))
        if merged.get("assume_independent"):
            config = replace(config, assume_independent=True)
        if "pair_limit" in merged:
            config = replace(config, pair_limit=int(merged["pair_limit"]))
        return config

    def degree_bound_for(self, sigma: SequenceSpec) -> int:
        if self.syzygy_degree_bound is not None:
            return self.syzygy_degree_bound
        return 1 + sum(sigma.degrees)
