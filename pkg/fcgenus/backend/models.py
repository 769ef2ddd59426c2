"""
Pydantic models for reports, budgets, generator specs and run configuration.
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from fcgenus.backend.graph.spanning_forest import SpanningTree

FAMILIES = (
    "cartesian-path",
    "hypercube",
    "gen-petersen",
    "halin-composition",
    "bouquet",
    "dumbbell",
    "complete",
    "complete-bipartite",
    "random-connected",
)

FamilyName = Literal[
    "cartesian-path",
    "hypercube",
    "gen-petersen",
    "halin-composition",
    "bouquet",
    "dumbbell",
    "complete",
    "complete-bipartite",
    "random-connected",
]


class CertificatePair(BaseModel):
    """Two matched fundamental cycles and the vertex they share."""

    model_config = ConfigDict(frozen=True)

    cycle_a: int
    cycle_b: int
    witness_vertex: int = Field(description="dense vertex id; the input label is vertex_labels[witness_vertex]")
    cotree_edge_a: int
    cotree_edge_b: int


class GenusReport(BaseModel):
    """Outcome of the fundamental-cycle pipeline on one graph."""

    n_vertices: int
    n_edges: int
    beta: int
    gamma_max: int
    xi: int
    upper_embeddable: bool
    tree_edges: List[int]
    tree_xi: int = Field(description="odd components of G minus E(T) for the tree used; not minimised")
    strategy: str
    seed: Optional[int] = None
    intersection_edges: int
    vertex_labels: List[int]
    certificate: List[CertificatePair]

    _tree_used: Optional[SpanningTree] = PrivateAttr(default=None)

    @property
    def tree_used(self) -> Optional[SpanningTree]:
        return self._tree_used

    def with_tree(self, tree: SpanningTree) -> "GenusReport":
        self._tree_used = tree
        return self


class Theorem4Result(BaseModel):
    """Reports before and after adding two edges whose tree cycles meet."""

    before: GenusReport
    after: GenusReport
    shared_vertex: int
    increment: int
    exact_increment: bool
    upper_embeddability_agrees: bool


class Theorem5Result(BaseModel):
    """Edge-cut criteria for a cut splitting the graph into two sides."""

    bound_holds: bool
    condition1: bool
    condition2: bool
    upper_claim_applicable: bool
    sides_upper_embeddable: bool
    upper_embeddable: bool
    beta: int
    beta_1: int
    beta_2: int
    cut_size: int
    gamma_max: int


class OracleBudget(BaseModel):
    """Limits beyond which the brute-force oracles refuse to run."""

    max_vertices: int = Field(default=8, gt=0)
    max_edges: int = Field(default=14, gt=0)
    max_trees: int = Field(default=1_000_000, gt=0)
    max_matching_vertices: int = Field(default=14, gt=0)


class HalinSpec(BaseModel):
    """One side of a Halin composition: a wheel with ``size`` spokes, or a random Halin graph."""

    kind: Literal["wheel", "random"] = "wheel"
    size: int = Field(default=4, ge=3)


class FamilySpec(BaseModel):
    """A graph family and its integer parameters."""

    family: FamilyName
    parameters: List[int] = Field(default_factory=list)
    seed: Optional[int] = None


class CheckOutcome(BaseModel):
    """Pipeline versus oracle on one graph."""

    source: str
    beta: int
    gamma_pipeline: int
    gamma_oracle: int
    xi_pipeline: int
    xi_oracle: int
    trees_enumerated: int
    agrees: bool
    bundle_path: Optional[str] = None


class RunConfig(BaseModel):
    """Validated settings of one CLI invocation."""

    subcommand: Literal["compute", "check", "gen", "gm-dump"]
    inputs: List[str] = Field(default_factory=list)
    output_format: Literal["text", "json"] = "text"
    output: Optional[str] = None
    tree_strategy: Literal["dfs", "random"] = "dfs"
    seed: Optional[int] = None
    budget: OracleBudget = Field(default_factory=OracleBudget)
    bundle_dir: str = "counterexamples"
    family: Optional[FamilySpec] = None
    base_graph: Optional[str] = None
    workers: int = Field(default=4, gt=0)
    verbose: bool = False
    quiet: bool = False

    @model_validator(mode="after")
    def _check_combination(self) -> "RunConfig":
        if self.tree_strategy == "random" and self.seed is None:
            raise ValueError("--tree random needs --seed")
        if self.subcommand == "gen" and self.family is None:
            raise ValueError("gen needs a family")
        if self.subcommand != "gen" and not self.inputs:
            raise ValueError(f"{self.subcommand} needs at least one input file")
        return self
