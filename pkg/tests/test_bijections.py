import pytest

from gammaexc.bijections import (
    DuplicateEntries,
    PreconditionViolated,
    cycle_excedances,
    foata_fft,
    foata_fft_inverse,
    long_cycle_to_perm,
    penultimate_to_front,
    perm_to_long_cycle,
    standardize_cycle,
    swap_last_two,
)
from gammaexc.groups import (
    GroupSpec,
    Perm,
    asc,
    cycle_type,
    des,
    exc,
    inv,
    iterate,
    nexc,
    pos_n,
)


def _multiset(values):
    out = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return out


class TestFoataFFT:
    def test_identity_maps_to_zero_descents(self):
        image = foata_fft(Perm.identity(5))
        assert des(image.window) == 0

    def test_distribution_matches_eulerian(self):
        images = [foata_fft(p) for p in iterate(GroupSpec("S", 4))]
        dist = _multiset(des(q.window) for q in images)
        assert dist == {0: 1, 1: 11, 2: 11, 3: 1}
        assert dist == _multiset(exc(p.window)
                                 for p in iterate(GroupSpec("S", 4)))

    def test_small_case(self):
        values = {exc(p.window) for p in iterate(GroupSpec("S", 2))}
        images = {des(foata_fft(p).window) for p in iterate(GroupSpec("S", 2))}
        assert values == images == {0, 1}

    def test_pointwise_and_bijective(self):
        for n in range(1, 7):
            seen = set()
            for p in iterate(GroupSpec("S", n)):
                image = foata_fft(p)
                assert des(image.window) == exc(p.window)
                assert foata_fft_inverse(image) == p
                seen.add(image.window)
            assert len(seen) == sum(1 for _ in iterate(GroupSpec("S", n)))


class TestPenultimateToFront:
    def test_n2(self):
        image = penultimate_to_front(Perm((2, 1)))
        assert image == Perm((2, 1))
        assert exc((2, 1)) == des(image.window) == 1

    def test_statistic_transport(self):
        n = 5
        left = _multiset(
            (exc(p.window), nexc(p.window) - 1)
            for p in iterate(GroupSpec("S", n, pos_n=n - 1))
        )
        right = _multiset(
            (des(p.window), asc(p.window))
            for p in iterate(GroupSpec("S", n, pos_n=1))
        )
        assert left == right
        for p in iterate(GroupSpec("S", n, pos_n=n - 1)):
            image = penultimate_to_front(p)
            assert pos_n(image.window) == 1
            assert exc(p.window) == des(image.window)
            assert nexc(p.window) == asc(image.window) + 1

    def test_injective_on_domain(self):
        images = {penultimate_to_front(p).window
                  for p in iterate(GroupSpec("S", 4, pos_n=3))}
        assert len(images) == 6

    def test_precondition(self):
        with pytest.raises(PreconditionViolated):
            penultimate_to_front(Perm((1, 2, 3)))


class TestSwapLastTwo:
    def test_example(self):
        image = swap_last_two(Perm((3, 1, 2)))
        assert image == Perm((3, 2, 1))
        assert exc(image.window) == exc((3, 1, 2)) == 1
        assert inv(image.window) % 2 != inv((3, 1, 2)) % 2

    def test_involution_everywhere_applicable(self):
        for n in range(2, 6):
            for r in range(1, n - 1):
                for p in iterate(GroupSpec("S", n, pos_n=r)):
                    assert swap_last_two(swap_last_two(p)) == p

    def test_halving_consequence(self):
        for r in (1, 2):
            whole = _multiset(
                (exc(p.window), nexc(p.window))
                for p in iterate(GroupSpec("S", 4, pos_n=r))
            )
            even = _multiset(
                (exc(p.window), nexc(p.window))
                for p in iterate(GroupSpec("S", 4, parity="even", pos_n=r))
            )
            assert {k: 2 * v for k, v in even.items()} == whole

    def test_precondition(self):
        with pytest.raises(PreconditionViolated):
            swap_last_two(Perm((1, 3, 2)))
        with pytest.raises(PreconditionViolated):
            swap_last_two(Perm((1, 2, 3)))


class TestLongCycleMaps:
    def test_example_n3(self):
        image = perm_to_long_cycle(Perm((1, 2)))
        assert image == Perm((3, 1, 2))
        assert des((1, 2)) == 0 and exc(image.window) == 1

    def test_distribution(self):
        dist = _multiset(
            exc(perm_to_long_cycle(p).window)
            for p in iterate(GroupSpec("S", 2))
        )
        assert dist == {1: 1, 2: 1}  # t + t^2 over the two 3-cycles

    def test_round_trip(self):
        for p in iterate(GroupSpec("S", 3)):
            image = perm_to_long_cycle(p)
            assert cycle_type(image.window).parts == (4,)
            assert long_cycle_to_perm(image) == p

    def test_statistic(self):
        for n in range(2, 7):
            for p in iterate(GroupSpec("S", n - 1)):
                assert exc(perm_to_long_cycle(p).window) == des(p.window) + 1

    def test_inverse_domain(self):
        with pytest.raises(PreconditionViolated):
            long_cycle_to_perm(Perm((2, 1, 4, 3)))


class TestStandardize:
    def test_example(self):
        assert standardize_cycle((2, 7, 5)) == (1, 3, 2)
        assert cycle_excedances((2, 7, 5)) == cycle_excedances((1, 3, 2))

    def test_identity_on_initial_segment(self):
        assert standardize_cycle((1, 3, 2)) == (1, 3, 2)

    def test_duplicates_rejected(self):
        with pytest.raises(DuplicateEntries):
            standardize_cycle((2, 2, 5))
        with pytest.raises(DuplicateEntries):
            cycle_excedances((1, 1))

    def test_excedance_preservation(self):
        from itertools import permutations

        for subset in ((4, 9, 11), (2, 3, 8, 10)):
            for arrangement in permutations(subset):
                assert cycle_excedances(arrangement) \
                    == cycle_excedances(standardize_cycle(arrangement))
