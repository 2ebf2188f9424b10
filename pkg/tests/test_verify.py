import random

from freewreath import Alphabet, Transversal, embed, symmetric_group
from freewreath.verify import (
    all_transitive_reps,
    check_representatives,
    check_round_trip,
    embedding_suite,
    extension_suite,
    random_assignment,
    random_reduced_word,
    random_transitive_rep,
    rep_suite,
)
from freewreath.schreier import basis, transversal

AB = Alphabet.of("a", "b")


def test_rep_suite_all_pass(e1):
    rng = random.Random(0)
    results = rep_suite(e1, rng, 25)
    assert results
    for result in results:
        assert result.passed, result


def test_rep_suite_flags_non_transitive(ab):
    from freewreath import PermRep

    rep = PermRep(ab, 2, ((0, 1), (0, 1)))
    rng = random.Random(0)
    results = rep_suite(rep, rng, 10)
    names = {r.name: r for r in results}
    assert not names["transversal_suite"].passed


def test_embedding_suite_all_pass(e2):
    group, subgroup = e2
    for result in embedding_suite(embed(group, subgroup)):
        assert result.passed, result


def test_extension_suite_all_pass(e1_basis):
    rng = random.Random(1)
    asg = random_assignment(rng, e1_basis, symmetric_group(3))
    for result in extension_suite(asg, rng, 30):
        assert result.passed, result


def test_check_catches_corrupted_transversal(e1, e1_transversal):
    bad = Transversal(
        e1,
        (e1_transversal.words[0], e1_transversal.words[2], e1_transversal.words[1]),
        e1_transversal.bfs_order,
    )
    result = check_representatives(bad)
    assert not result.passed
    assert result.counterexample


def test_round_trip_check_counterexample_reporting(e1_basis):
    rng = random.Random(2)
    result = check_round_trip(e1_basis, rng, 10)
    assert result.passed
    assert result.counterexample is None


def test_random_reduced_word_lengths():
    rng = random.Random(3)
    for length in range(0, 20):
        w = random_reduced_word(rng, AB, length)
        assert len(w.letters) == length


def test_random_transitive_rep_is_transitive():
    rng = random.Random(4)
    from freewreath import is_transitive

    for degree in (1, 2, 5):
        rep = random_transitive_rep(rng, AB, degree)
        assert rep.degree == degree
        assert is_transitive(rep)


def test_all_transitive_reps_counts():
    # degree 2: one of the four image pairs fixes both points
    assert len(all_transitive_reps(AB, 2)) == 3
    assert len(all_transitive_reps(AB, 1)) == 1


def test_single_generator_vanishing_is_vacuous_on_full_group():
    a = Alphabet.of("a")
    from freewreath import PermRep
    from freewreath.verify import check_vanishing_property

    rep = PermRep(a, 1, ((0,),))
    asg = random_assignment(random.Random(5), basis(transversal(rep)), symmetric_group(2))
    result = check_vanishing_property(asg, random.Random(5), 10)
    assert result.passed
    assert "vacuous" in result.detail
