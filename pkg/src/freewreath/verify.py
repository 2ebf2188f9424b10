"""Randomized and exhaustive property checks behind the verify command.

Each check returns a `CheckResult`; failures carry a counterexample so
reports can point at the offending words or elements.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .action import PermRep, act, contains, is_transitive
from .errors import InputError
from .extension import BasisAssignment, chi_letter, psi, psi_by_rewrite, tau
from .groups import FiniteGroup, Perm, compose, invert_perm
from .residual import witness
from .schreier import Basis, Transversal, evaluate, mu, rewrite
from .words import Alphabet, Letter, Word, reduce_letters
from .wreath import Embedding, project_pi, wmul


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: dict[str, str] | None = None


def _ok(name: str, detail: str = "") -> CheckResult:
    return CheckResult(name, True, detail)


def _fail(name: str, detail: str = "", **counterexample: object) -> CheckResult:
    return CheckResult(
        name, False, detail, {k: str(v) for k, v in counterexample.items()}
    )


# ---------------------------------------------------------------------------
# sampling


def random_reduced_word(rng: random.Random, alphabet: Alphabet, length: int) -> Word:
    """Uniform reduced word of exactly the given length (0 if the alphabet is empty)."""
    if not len(alphabet):
        return Word(alphabet)
    letters: list[Letter] = []
    for _ in range(length):
        choices = [
            Letter(gen, sign)
            for gen in range(len(alphabet))
            for sign in (1, -1)
            if not letters or Letter(gen, sign) != letters[-1].inverse()
        ]
        letters.append(rng.choice(choices))
    return Word(alphabet, tuple(letters))


def random_raw_letters(
    rng: random.Random, alphabet: Alphabet, length: int
) -> list[Letter]:
    """Unreduced letter soup, for exercising reduction."""
    return [
        Letter(rng.randrange(len(alphabet)), rng.choice((1, -1))) for _ in range(length)
    ]


def random_permutation(rng: random.Random, degree: int) -> Perm:
    points = list(range(degree))
    rng.shuffle(points)
    return tuple(points)


def random_transitive_rep(
    rng: random.Random, alphabet: Alphabet, degree: int
) -> PermRep:
    if not len(alphabet) and degree > 1:
        raise InputError("no transitive action of the trivial group on >1 points")
    while True:
        images = tuple(random_permutation(rng, degree) for _ in alphabet.names)
        rep = PermRep(alphabet, degree, images)
        if is_transitive(rep):
            return rep


def all_transitive_reps(alphabet: Alphabet, degree: int) -> list[PermRep]:
    """Every transitive rep of the given degree, in lexicographic image order."""
    perms = list(itertools.permutations(range(degree)))
    reps = []
    for images in itertools.product(perms, repeat=len(alphabet)):
        rep = PermRep(alphabet, degree, images)
        if is_transitive(rep):
            reps.append(rep)
    return reps


def random_subgroup_element(
    rng: random.Random, t: Transversal, max_length: int
) -> Word:
    """A subgroup member: a random word corrected into H by its coset representative."""
    w = random_reduced_word(rng, t.rep.alphabet, rng.randint(0, max_length))
    return w * mu(t, w).inverse()


def random_assignment(
    rng: random.Random, b: Basis, target: FiniteGroup
) -> BasisAssignment:
    values = tuple(rng.choice(target.elements) for _ in b.elements)
    return BasisAssignment(b, target, values)


# ---------------------------------------------------------------------------
# word checks


def check_reduce_idempotent(
    alphabet: Alphabet, rng: random.Random, samples: int
) -> CheckResult:
    name = "reduce_idempotent"
    for _ in range(samples):
        raw = random_raw_letters(rng, alphabet, rng.randint(0, 24))
        once = reduce_letters(alphabet, raw)
        twice = reduce_letters(alphabet, once.letters)
        if once != twice:
            return _fail(name, counterexample={"raw": raw})
    return _ok(name, f"{samples} samples")


def check_word_group_axioms(
    alphabet: Alphabet, rng: random.Random, samples: int
) -> CheckResult:
    name = "word_group_axioms"
    one = Word(alphabet)
    for _ in range(samples):
        u, v, w = (
            random_reduced_word(rng, alphabet, rng.randint(0, 12)) for _ in range(3)
        )
        if (u * v) * w != u * (v * w):
            return _fail(name, "associativity", u=u, v=v, w=w)
        if u * one != u or one * u != u:
            return _fail(name, "identity", u=u)
        if u * u.inverse() != one or u.inverse() * u != one:
            return _fail(name, "inverse", u=u)
    return _ok(name, f"{samples} samples")


# ---------------------------------------------------------------------------
# action checks


def check_action_group_law(
    rep: PermRep, rng: random.Random, samples: int
) -> CheckResult:
    name = "action_group_law"
    for _ in range(samples):
        u = random_reduced_word(rng, rep.alphabet, rng.randint(0, 10))
        v = random_reduced_word(rng, rep.alphabet, rng.randint(0, 10))
        for p in range(rep.degree):
            if act(rep, u * v, p) != act(rep, v, act(rep, u, p)):
                return _fail(name, u=u, v=v, point=p)
    return _ok(name, f"{samples} samples")


def check_membership_closure(
    t: Transversal, rng: random.Random, samples: int
) -> CheckResult:
    name = "membership_closure"
    rep = t.rep
    for _ in range(samples):
        h1 = random_subgroup_element(rng, t, 12)
        h2 = random_subgroup_element(rng, t, 12)
        if not (contains(rep, h1) and contains(rep, h2)):
            return _fail(name, "sampler left the subgroup", h1=h1, h2=h2)
        if not contains(rep, h1 * h2) or not contains(rep, h1.inverse()):
            return _fail(name, h1=h1, h2=h2)
    return _ok(name, f"{samples} samples")


def check_words_reach_all_cosets(
    rep: PermRep, rng: random.Random, samples: int
) -> CheckResult:
    name = "words_reach_all_cosets"
    reached = set()
    for _ in range(samples):
        w = random_reduced_word(rng, rep.alphabet, rng.randint(0, 2 * rep.degree + 4))
        reached.add(act(rep, w, rep.basepoint))
        if len(reached) == rep.degree:
            return _ok(name)
    return _fail(name, f"only {len(reached)} of {rep.degree} cosets reached")


# ---------------------------------------------------------------------------
# transversal and basis checks


def check_prefix_closure(t: Transversal) -> CheckResult:
    name = "transversal_prefix_closure"
    entries = set(t.words)
    for word in t.words:
        for prefix in word.prefixes():
            if prefix not in entries:
                return _fail(name, entry=word, prefix=prefix)
    return _ok(name)


def check_representatives(t: Transversal) -> CheckResult:
    name = "transversal_represents_cosets"
    for p, word in enumerate(t.words):
        if act(t.rep, word, t.rep.basepoint) != p:
            return _fail(name, point=p, entry=word)
    return _ok(name)


def check_rank_formula(b: Basis) -> CheckResult:
    name = "rank_formula"
    rep = b.transversal.rep
    expected = 1 + rep.degree * (len(rep.alphabet) - 1)
    if len(b.elements) != expected:
        return _fail(name, f"got {len(b.elements)}, expected {expected}")
    return _ok(name, f"rank {expected}")


def check_basis_membership(b: Basis) -> CheckResult:
    name = "basis_in_subgroup"
    rep = b.transversal.rep
    for element in b.elements:
        if not contains(rep, element):
            return _fail(name, element=element)
    return _ok(name)


def check_round_trip(
    b: Basis, rng: random.Random, samples: int, max_length: int = 30
) -> CheckResult:
    name = "rewrite_round_trip"
    for _ in range(samples):
        h = random_subgroup_element(rng, b.transversal, max_length)
        if evaluate(b, rewrite(b, h)) != h:
            return _fail(name, h=h)
    return _ok(name, f"{samples} samples")


def _reduce_signed(seq: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for idx, sign in seq:
        if stack and stack[-1] == (idx, -sign):
            stack.pop()
        else:
            stack.append((idx, sign))
    return tuple(stack)


def check_rewrite_homomorphism(
    b: Basis, rng: random.Random, samples: int
) -> CheckResult:
    name = "rewrite_homomorphism"
    for _ in range(samples):
        h1 = random_subgroup_element(rng, b.transversal, 12)
        h2 = random_subgroup_element(rng, b.transversal, 12)
        combined = rewrite(b, h1 * h2)
        concatenated = _reduce_signed(rewrite(b, h1) + rewrite(b, h2))
        if combined != concatenated:
            return _fail(name, h1=h1, h2=h2)
    return _ok(name, f"{samples} samples")


# ---------------------------------------------------------------------------
# embedding checks


def check_embedding_homomorphism(e: Embedding) -> CheckResult:
    name = "embedding_homomorphism"
    group = e.coset_space.group
    for g1 in group.elements:
        for g2 in group.elements:
            if e.phi[compose(g1, g2)] != wmul(e.context, e.phi[g1], e.phi[g2]):
                return _fail(name, g1=list(g1), g2=list(g2))
    return _ok(name, f"all {group.order}^2 pairs")


def check_embedding_injective(e: Embedding) -> CheckResult:
    name = "embedding_injective"
    group = e.coset_space.group
    if len(set(e.phi[g] for g in group.elements)) != group.order:
        return _fail(name)
    return _ok(name, f"all {group.order} elements distinct")


def check_projection_identity(e: Embedding) -> CheckResult:
    name = "projection_restores_subgroup"
    for h in e.coset_space.subgroup.elements:
        if project_pi(e.context, e.phi[h]) != h:
            return _fail(name, h=list(h))
    return _ok(name, f"all {e.coset_space.subgroup.order} subgroup elements")


def check_projection_homomorphism(e: Embedding) -> CheckResult:
    name = "projection_homomorphism_over_subgroup_tops"
    sub = e.coset_space.subgroup
    for h1 in sub.elements:
        for h2 in sub.elements:
            u, v = e.phi[h1], e.phi[h2]
            lhs = project_pi(e.context, wmul(e.context, u, v))
            rhs = compose(project_pi(e.context, u), project_pi(e.context, v))
            if lhs != rhs:
                return _fail(name, h1=list(h1), h2=list(h2))
    return _ok(name, f"all {sub.order}^2 pairs")


# ---------------------------------------------------------------------------
# extension checks


def check_extension_values(asg: BasisAssignment) -> CheckResult:
    name = "extension_matches_assignment"
    for element, value in zip(asg.basis.elements, asg.values):
        if psi(asg, element) != value:
            return _fail(name, element=element)
    return _ok(name, f"all {len(asg.values)} basis elements")


def check_extension_homomorphism(
    asg: BasisAssignment, rng: random.Random, samples: int, max_length: int = 12
) -> CheckResult:
    name = "extension_homomorphism"
    t = asg.basis.transversal
    for _ in range(samples):
        h1 = random_subgroup_element(rng, t, max_length)
        h2 = random_subgroup_element(rng, t, max_length)
        if psi(asg, h1 * h2) != compose(psi(asg, h1), psi(asg, h2)):
            return _fail(name, h1=h1, h2=h2)
    return _ok(name, f"{samples} samples")


def check_extension_oracle(
    asg: BasisAssignment, rng: random.Random, samples: int, max_length: int = 12
) -> CheckResult:
    name = "extension_matches_rewrite_oracle"
    t = asg.basis.transversal
    for _ in range(samples):
        h = random_subgroup_element(rng, t, max_length)
        if psi(asg, h) != psi_by_rewrite(asg, h):
            return _fail(name, h=h)
    return _ok(name, f"{samples} samples")


def check_expansion_formula(
    asg: BasisAssignment, rng: random.Random, samples: int, max_length: int = 10
) -> CheckResult:
    name = "expansion_formula"
    alphabet = asg.basis.transversal.rep.alphabet
    for _ in range(samples):
        w1 = random_reduced_word(rng, alphabet, rng.randint(0, max_length))
        w2 = random_reduced_word(rng, alphabet, rng.randint(0, max_length))
        t1, t2, t12 = tau(asg, w1), tau(asg, w2), tau(asg, w1 * w2)
        for s in range(len(t12.fiber)):
            if t12.fiber[s] != compose(t1.fiber[s], t2.fiber[t1.top[s]]):
                return _fail(name, w1=w1, w2=w2, point=s)
    return _ok(name, f"{samples} samples")


def check_inverse_formula(
    asg: BasisAssignment, rng: random.Random, samples: int, max_length: int = 10
) -> CheckResult:
    name = "inverse_formula"
    alphabet = asg.basis.transversal.rep.alphabet
    for _ in range(samples):
        w = random_reduced_word(rng, alphabet, rng.randint(0, max_length))
        tw, tw_inv = tau(asg, w), tau(asg, w.inverse())
        for s in range(len(tw.fiber)):
            if tw_inv.fiber[s] != invert_perm(tw.fiber[tw_inv.top[s]]):
                return _fail(name, w=w, point=s)
    return _ok(name, f"{samples} samples")


def check_vanishing_property(
    asg: BasisAssignment, rng: random.Random, samples: int, max_length: int = 10
) -> CheckResult:
    """When the Schreier pair of (coset of w, letter) collapses, the chi fiber
    there is the identity."""
    name = "vanishing_property"
    t = asg.basis.transversal
    rep = t.rep
    one = asg.target.identity
    found = 0
    for _ in range(max(samples * 50, 1)):
        if found >= samples:
            break
        w = random_reduced_word(rng, rep.alphabet, rng.randint(0, max_length))
        gen = rng.randrange(len(rep.alphabet)) if len(rep.alphabet) else None
        if gen is None:
            break
        letter = Letter(gen, rng.choice((1, -1)))
        p = act(rep, w, rep.basepoint)
        step = Word(rep.alphabet, (letter,))
        q = act(rep, step, p)
        if not (t.words[p] * step * t.words[q].inverse()).is_identity:
            continue
        found += 1
        if chi_letter(asg, letter).fiber[p] != one:
            return _fail(name, w=w, letter=str(step))
    if found == 0:
        return _ok(name, "vacuous: no collapsing instances for this rep")
    return _ok(name, f"{found} collapsing instances")


# ---------------------------------------------------------------------------
# residual checks


def check_residual_witnesses(
    alphabet: Alphabet, rng: random.Random, samples: int, max_length: int = 20
) -> CheckResult:
    name = "residual_witnesses"
    for _ in range(samples):
        w = random_reduced_word(rng, alphabet, rng.randint(1, max_length))
        rep = witness(w)
        image = act(rep, w, 0)
        if image != len(w.letters) or image == 0:
            return _fail(name, w=w, image=image)
    return _ok(name, f"{samples} samples")


# ---------------------------------------------------------------------------
# suites


def rep_suite(rep: PermRep, rng: random.Random, samples: int) -> list[CheckResult]:
    """Word, action, transversal, and basis checks for one coset action."""
    from .schreier import basis as build_basis
    from .schreier import transversal as build_transversal

    results = [
        check_reduce_idempotent(rep.alphabet, rng, samples),
        check_word_group_axioms(rep.alphabet, rng, samples),
        check_action_group_law(rep, rng, samples),
    ]
    if is_transitive(rep):
        t = build_transversal(rep)
        b = build_basis(t)
        results += [
            check_membership_closure(t, rng, samples),
            check_words_reach_all_cosets(rep, rng, max(samples, 20 * rep.degree)),
            check_prefix_closure(t),
            check_representatives(t),
            check_rank_formula(b),
            check_basis_membership(b),
            check_round_trip(b, rng, samples),
            check_rewrite_homomorphism(b, rng, samples),
        ]
    else:
        results.append(
            CheckResult(
                "transversal_suite",
                False,
                "coset action not transitive; transversal checks skipped",
            )
        )
    if len(rep.alphabet):
        results.append(check_residual_witnesses(rep.alphabet, rng, samples))
    return results


def embedding_suite(e: Embedding) -> list[CheckResult]:
    return [
        check_embedding_homomorphism(e),
        check_embedding_injective(e),
        check_projection_identity(e),
        check_projection_homomorphism(e),
    ]


def extension_suite(
    asg: BasisAssignment, rng: random.Random, samples: int
) -> list[CheckResult]:
    return [
        check_extension_values(asg),
        check_extension_homomorphism(asg, rng, samples),
        check_extension_oracle(asg, rng, samples),
        check_expansion_formula(asg, rng, samples),
        check_inverse_formula(asg, rng, samples),
        check_vanishing_property(asg, rng, samples),
    ]
