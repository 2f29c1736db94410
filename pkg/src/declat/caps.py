from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Caps:
    """Size limits for the exhaustive algorithms."""

    max_n: int = 24
    max_family: int = 2**20
    max_lattice: int = 100_000
    max_graph_n: int = 15
    max_tree_n: int = 12
    max_korp_size: int = 8
    max_clique_oracle: int = 512

    def with_overrides(self, **kwargs):
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_CAPS = Caps()
