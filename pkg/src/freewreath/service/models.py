"""Pydantic request/response models for the service and CLI reports.

Response field order is the report key order, so serialized reports are
byte-stable across runs.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from ..action import PermRep, rep_from_dict
from ..errors import InputError
from ..groups import FiniteGroup, SubgroupSpec, group_from_dict, subgrouped_group_from_dict


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


# ---------------------------------------------------------------------------
# input specs


class RepSpec(StrictModel):
    alphabet: list[str]
    degree: int
    images: dict[str, list[int]]
    basepoint: int = 0

    def to_core(self) -> PermRep:
        return rep_from_dict(self.model_dump())


class GroupSpec(StrictModel):
    degree: int
    generators: list[list[int]]

    def to_core(self) -> FiniteGroup:
        return group_from_dict(self.model_dump())


class SubgroupedGroupSpec(StrictModel):
    degree: int
    generators: list[list[int]]
    subgroup_generators: list[list[int]] | None = None

    def to_core(self) -> FiniteGroup:
        return group_from_dict({"degree": self.degree, "generators": self.generators})

    def to_core_pair(self) -> tuple[FiniteGroup, SubgroupSpec]:
        if self.subgroup_generators is None:
            raise InputError("group spec is missing subgroup_generators")
        return subgrouped_group_from_dict(self.model_dump())


class AssignmentSpec(StrictModel):
    values: dict[str, list[int]] = {}


# ---------------------------------------------------------------------------
# requests


class TransversalRequest(StrictModel):
    rep: RepSpec


class BasisRequest(StrictModel):
    rep: RepSpec


class RewriteRequest(StrictModel):
    rep: RepSpec
    word: str


class EmbedRequest(StrictModel):
    group: SubgroupedGroupSpec


class ExtendRequest(StrictModel):
    rep: RepSpec
    target: GroupSpec
    assignment: AssignmentSpec
    seed: int = 0
    samples: int = 50


class WitnessRequest(StrictModel):
    word: str
    alphabet: list[str] | None = None


class VerifyRequest(StrictModel):
    rep: RepSpec | None = None
    group: SubgroupedGroupSpec | None = None
    assignment: AssignmentSpec | None = None
    seed: int = 0
    samples: int = 100


# ---------------------------------------------------------------------------
# reports


class ReportHead(BaseModel):
    command: str
    tool_version: str
    input_digest: str


class TransversalReport(ReportHead):
    index: int
    transversal: list[str]


class BasisReport(ReportHead):
    index: int
    transversal: list[str]
    basis: list[str]
    rank_formula_check: bool


class RewriteReport(ReportHead):
    word: str
    basis: list[str]
    rewritten: list[str]


class WreathElementOut(BaseModel):
    fiber: list[list[int]]
    top: list[int]


class EmbedTableRow(BaseModel):
    element: list[int]
    image: WreathElementOut


class EmbedReport(ReportHead):
    group_order: int
    subgroup_order: int
    num_cosets: int
    representatives: list[list[int]]
    table: list[EmbedTableRow]
    injective: bool
    homomorphism: bool
    lemma_pi_identity: bool


class CheckOutcome(BaseModel):
    name: str
    passed: bool
    detail: str = ""
    counterexample: dict[str, str] | None = None


class ExtendReport(ReportHead):
    index: int
    basis: list[str]
    seed: int
    samples: int
    checks: list[CheckOutcome]
    all_passed: bool


class WitnessReport(ReportHead):
    word: str
    rep: RepSpec
    image_point: int
    separated: bool


class VerifyReport(ReportHead):
    seed: int
    samples: int
    checks: list[CheckOutcome]
    all_passed: bool
