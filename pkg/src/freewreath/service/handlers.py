"""Request handlers shared by the FastAPI routes and the CLI."""

from __future__ import annotations

import hashlib
import json
import random

from pydantic import BaseModel

from .. import __version__
from ..action import act, index, rep_to_dict
from ..errors import InputError
from ..extension import assignment_from_dict
from ..residual import witness
from ..schreier import basis, rewrite, transversal
from ..verify import (
    CheckResult,
    check_embedding_homomorphism,
    check_embedding_injective,
    check_projection_identity,
    embedding_suite,
    extension_suite,
    random_assignment,
    rep_suite,
)
from ..words import Alphabet, parse_word
from ..wreath import embed
from . import models


def _digest(request: BaseModel) -> str:
    canonical = json.dumps(
        request.model_dump(), sort_keys=True, separators=(",", ":")
    )
    return "sha256:" + hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _head(command: str, request: BaseModel) -> dict:
    return {
        "command": command,
        "tool_version": __version__,
        "input_digest": _digest(request),
    }


def _outcomes(results: list[CheckResult]) -> list[models.CheckOutcome]:
    return [
        models.CheckOutcome(
            name=r.name,
            passed=r.passed,
            detail=r.detail,
            counterexample=r.counterexample,
        )
        for r in results
    ]


def handle_transversal(request: models.TransversalRequest) -> models.TransversalReport:
    rep = request.rep.to_core()
    t = transversal(rep)
    return models.TransversalReport(
        **_head("transversal", request),
        index=index(rep),
        transversal=[str(w) for w in t.words],
    )


def handle_basis(request: models.BasisRequest) -> models.BasisReport:
    rep = request.rep.to_core()
    t = transversal(rep)
    b = basis(t)
    expected = 1 + rep.degree * (len(rep.alphabet) - 1)
    return models.BasisReport(
        **_head("basis", request),
        index=index(rep),
        transversal=[str(w) for w in t.words],
        basis=[str(w) for w in b.elements],
        rank_formula_check=len(b.elements) == expected,
    )


def handle_rewrite(request: models.RewriteRequest) -> models.RewriteReport:
    rep = request.rep.to_core()
    word = parse_word(rep.alphabet, request.word)
    b = basis(transversal(rep))
    rewritten = rewrite(b, word)
    return models.RewriteReport(
        **_head("rewrite", request),
        word=str(word),
        basis=[str(w) for w in b.elements],
        rewritten=[f"+{i}" if s > 0 else f"-{i}" for i, s in rewritten],
    )


def handle_embed(request: models.EmbedRequest) -> models.EmbedReport:
    group, subgroup = request.group.to_core_pair()
    e = embed(group, subgroup)
    table = [
        models.EmbedTableRow(
            element=list(g),
            image=models.WreathElementOut(
                fiber=[list(p) for p in e.phi[g].fiber], top=list(e.phi[g].top)
            ),
        )
        for g in group.elements
    ]
    return models.EmbedReport(
        **_head("embed", request),
        group_order=group.order,
        subgroup_order=e.coset_space.subgroup.order,
        num_cosets=e.coset_space.num_cosets,
        representatives=[list(r) for r in e.coset_space.representatives],
        table=table,
        injective=check_embedding_injective(e).passed,
        homomorphism=check_embedding_homomorphism(e).passed,
        lemma_pi_identity=check_projection_identity(e).passed,
    )


def handle_extend(request: models.ExtendRequest) -> models.ExtendReport:
    rep = request.rep.to_core()
    target = request.target.to_core()
    b = basis(transversal(rep))
    asg = assignment_from_dict(b, target, request.assignment.model_dump())
    rng = random.Random(request.seed)
    checks = _outcomes(extension_suite(asg, rng, request.samples))
    return models.ExtendReport(
        **_head("extend", request),
        index=index(rep),
        basis=[str(w) for w in b.elements],
        seed=request.seed,
        samples=request.samples,
        checks=checks,
        all_passed=all(c.passed for c in checks),
    )


def infer_alphabet(text: str) -> Alphabet:
    """Generator names in order of first appearance in a word string."""
    names: list[str] = []
    for token in text.split():
        name = token[:-3] if token.endswith("^-1") else token
        if name == "1":
            continue
        if name not in names:
            names.append(name)
    return Alphabet(tuple(names))


def handle_witness(request: models.WitnessRequest) -> models.WitnessReport:
    if request.alphabet is not None:
        alphabet = Alphabet(tuple(request.alphabet))
    else:
        alphabet = infer_alphabet(request.word)
    word = parse_word(alphabet, request.word)
    rep = witness(word)
    image = act(rep, word, rep.basepoint)
    return models.WitnessReport(
        **_head("witness", request),
        word=str(word),
        rep=models.RepSpec.model_validate(rep_to_dict(rep)),
        image_point=image,
        separated=image != rep.basepoint,
    )


def handle_verify(request: models.VerifyRequest) -> models.VerifyReport:
    rng = random.Random(request.seed)
    samples = request.samples
    results: list[CheckResult] = []
    ran_anything = False
    if request.group is not None and request.group.subgroup_generators is not None:
        group, subgroup = request.group.to_core_pair()
        results += embedding_suite(embed(group, subgroup))
        ran_anything = True
    if request.rep is not None:
        rep = request.rep.to_core()
        results += rep_suite(rep, rng, samples)
        ran_anything = True
        if request.group is not None and request.group.subgroup_generators is None:
            target = request.group.to_core()
            b = basis(transversal(rep))
            if request.assignment is not None:
                asg = assignment_from_dict(b, target, request.assignment.model_dump())
            else:
                asg = random_assignment(rng, b, target)
            results += extension_suite(asg, rng, samples)
    if not ran_anything:
        raise InputError("nothing to verify: provide a rep and/or a group spec")
    checks = _outcomes(results)
    return models.VerifyReport(
        **_head("verify", request),
        seed=request.seed,
        samples=samples,
        checks=checks,
        all_passed=all(c.passed for c in checks),
    )
