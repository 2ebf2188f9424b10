"""Schreier transversals, Nielsen-Schreier bases, and wreath-product
embeddings for free and finite permutation groups."""

__version__ = "0.1.0"

from .action import (
    PermRep,
    act,
    contains,
    index,
    is_transitive,
    normal_core_image,
    rep_from_dict,
    rep_to_dict,
)
from .errors import InputError, InternalConsistencyError, ResourceLimitError
from .extension import (
    BasisAssignment,
    FiniteSupportMap,
    assignment_from_dict,
    chi,
    chi_letter,
    extend_free,
    psi,
    psi_by_rewrite,
    tau,
)
from .groups import (
    CosetSpace,
    FiniteGroup,
    SubgroupSpec,
    closure,
    compose,
    cyclic_group,
    dihedral_group,
    group_from_dict,
    identity_perm,
    invert_perm,
    right_cosets,
    subgrouped_group_from_dict,
    symmetric_group,
)
from .residual import separate_all, witness
from .schreier import Basis, Transversal, basis, evaluate, mu, rewrite, transversal
from .words import Alphabet, Letter, Word, format_word, parse_word, reduce_letters
from .wreath import (
    Embedding,
    WreathContext,
    WreathElement,
    diagonal,
    embed,
    project_pi,
    winv,
    wmul,
    wreath_identity,
)

__all__ = [
    "__version__",
    "Alphabet",
    "Basis",
    "BasisAssignment",
    "CosetSpace",
    "Embedding",
    "FiniteGroup",
    "FiniteSupportMap",
    "InputError",
    "InternalConsistencyError",
    "Letter",
    "PermRep",
    "ResourceLimitError",
    "SubgroupSpec",
    "Transversal",
    "Word",
    "WreathContext",
    "WreathElement",
    "act",
    "assignment_from_dict",
    "basis",
    "chi",
    "chi_letter",
    "closure",
    "compose",
    "contains",
    "cyclic_group",
    "diagonal",
    "dihedral_group",
    "embed",
    "evaluate",
    "extend_free",
    "format_word",
    "group_from_dict",
    "identity_perm",
    "index",
    "invert_perm",
    "is_transitive",
    "mu",
    "normal_core_image",
    "parse_word",
    "project_pi",
    "psi",
    "psi_by_rewrite",
    "reduce_letters",
    "rep_from_dict",
    "rep_to_dict",
    "rewrite",
    "right_cosets",
    "separate_all",
    "subgrouped_group_from_dict",
    "symmetric_group",
    "tau",
    "transversal",
    "winv",
    "witness",
    "wmul",
    "wreath_identity",
]
