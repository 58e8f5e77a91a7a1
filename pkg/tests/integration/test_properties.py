"""
Integration tests for structural properties

Sweeps catalog groups and checks identities every correct implementation must
satisfy: Shapiro's lemma, H^2(G, Z) = G^ab, agreement of the cyclic shortcut with
the bar resolution, the character description of Ker e, invariance of Sha^2 under
the field reductions, exactness of Z -> Lambda -> L1, functoriality of restriction
and monotonicity of Sha in the decomposition family.
"""

import pytest
from hnp_lattice.characters import (
    Abelianization,
    CharacterSubgroup,
    h2z_prime,
    ker_e,
    ker_e_for_subgroup,
    sha2_order_by_criteria,
)
from hnp_lattice.cohomology import cohomology, cyclic_h2, induced_map, restriction_map, sha
from hnp_lattice.groups import (
    all_subgroups,
    catalog_entries,
    conjugates,
    cyclic,
    cyclic_subgroups,
    coset_space,
    dihedral,
    generated,
    is_normal,
    maximal_cyclic_subgroups,
    symmetric,
)
from hnp_lattice.lattices import (
    LatticeMap,
    build_norm_tori,
    check_exactness,
    hnp_lattice,
    permutation_lattice,
    restrict_lattice,
    trivial_lattice,
)
from hnp_lattice.linalg import span_generators, subgroup_structure
from ..fixtures.test_helpers import klein_four, klein_subgroups


def small_groups(max_order):
    return [(entry.expression, entry.build()) for entry in catalog_entries(max_order, min_order=2)]


def phnp_sha(G, stabilizers):
    tori = build_norm_tori(G, stabilizers)
    return sha(G, tori.phnp, 2, family=maximal_cyclic_subgroups(G))


def subgroup_classes(G):
    """One subgroup from each conjugacy class."""
    representatives = []
    seen = set()
    for H in all_subgroups(G):
        if H.members in seen:
            continue
        representatives.append(H)
        seen.update(K.members for K in conjugates(H))
    return representatives


def families(G):
    """Every stabilizer family of one or two subgroups, up to conjugacy of each member."""
    classes = subgroup_classes(G)
    result = [[H] for H in classes]
    for i, A in enumerate(classes):
        for B in classes[i + 1:]:
            result.append([A, B])
    return result


def check_ker_e(name, G, stabilizers):
    """
    Ker e from the lattice against the characters vanishing on some stabilizer.

    In H^2(G, Z) coordinates the kernel must be the span of the restriction kernels
    to the stabilizers; in character coordinates ker_e must be the span found by
    evaluating every character.
    """
    label = (name, [H.members for H in stabilizers])
    tori = build_norm_tori(G, stabilizers)
    source = cohomology(G, tori.incl.source, 2)
    kernel = induced_map(tori.incl, 2, source=source).kernel()

    restricted = []
    for H in stabilizers:
        if H.is_trivial:
            k = len(source.moduli)
            restricted += [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]
        else:
            restricted += restriction_map(G, H, tori.incl.source, 2, source=source).kernel().generators
    assert span_generators(kernel.generators, source.moduli) == span_generators(restricted, source.moduli), label

    ab = Abelianization(G)
    vanishing = [
        chi for chi in ab.characters()
        if any(all(ab.evaluate(chi, h) == 0 for h in H.members) for H in stabilizers)
    ]
    expected = ker_e(G, stabilizers, ab=ab)
    assert expected == CharacterSubgroup(ab.moduli, vanishing), label
    assert kernel.structure == expected.structure, label


@pytest.mark.integration
class TestShapiro:
    """Test H^n(G, Z[G/H]) = H^n(H, Z)."""

    def test_permutation_lattices(self):
        """Test H^1 vanishes and H^2 is H^ab for every subgroup."""
        for name, G in small_groups(8):
            for H in all_subgroups(G):
                P = permutation_lattice(coset_space(G, H))
                assert cohomology(G, P, 1).structure.is_trivial, (name, H.members)
                expected = list(Abelianization(H.as_group()).invariant_factors)
                assert cohomology(G, P, 2).structure.to_list() == expected, (name, H.members)


@pytest.mark.integration
class TestTrivialCoefficients:
    """Test H^2(G, Z) = G^ab across the catalog."""

    def test_h2_is_abelianization(self):
        """Test every catalog group of order at most 12."""
        for name, G in small_groups(12):
            expected = list(Abelianization(G).invariant_factors)
            assert cohomology(G, trivial_lattice(G), 2).structure.to_list() == expected, name


@pytest.mark.integration
class TestCyclicShortcut:
    """Test the cyclic H^2 shortcut against the bar resolution."""

    def test_agrees_on_cyclic_subgroups(self):
        """Test structures match and bar representatives generate the shortcut group."""
        for name, G in small_groups(12):
            order_two = [H for H in all_subgroups(G) if H.order == 2]
            stabilizer = order_two[0] if order_two else G.trivial()
            lattices = [trivial_lattice(G), hnp_lattice(G, [stabilizer])[0]]
            for D in cyclic_subgroups(G):
                if D.is_trivial:
                    continue
                for M in lattices:
                    M_D = restrict_lattice(M, D)
                    bar = cohomology(D.as_group(), M_D, 2)
                    fast = cyclic_h2(D.as_group(), M_D)
                    assert fast.structure == bar.structure, (name, D.members, M.name)
                    images = [fast.coords(rep) for rep in bar.rep_cocycles]
                    assert subgroup_structure(images, fast.moduli) == fast.structure, (name, D.members, M.name)


@pytest.mark.integration
class TestKerE:
    """Test Ker(H^2(G, Z) -> H^2(G, Lambda)) against the character description."""

    def test_named_cases(self):
        """Test hand-picked stabilizer families, normal or not."""
        G = klein_four()
        N, A, _ = klein_subgroups(G)
        S3 = symmetric(3)
        transposition = S3.index_of_label("(1 2)")
        C6 = cyclic(6)
        cases = [
            (G, [N, G.trivial()]),
            (G, [N, A]),
            (G, [N]),
            (S3, [S3.subgroup([0, transposition])]),
            (S3, [S3.subgroup([0, transposition]), S3.trivial()]),
            (C6, [C6.subgroup([0, 2, 4]), C6.subgroup([0, 3])]),
            (C6, [C6.subgroup([0, 3])]),
        ]
        for group, stabilizers in cases:
            check_ker_e(group.name, group, stabilizers)

    def test_sweep(self):
        """Test every one- and two-element family up to conjugacy, orders up to 6 and D4."""
        for name, G in small_groups(6) + [("dihedral(4)", dihedral(4))]:
            for stabilizers in families(G):
                check_ker_e(name, G, stabilizers)

    @pytest.mark.slow
    def test_catalog_sweep(self):
        """Test every one- and two-element family up to conjugacy for orders up to 12."""
        for name, G in small_groups(12):
            for stabilizers in families(G):
                check_ker_e(name, G, stabilizers)

    def test_local_kernels(self):
        """Test Ker e_D from the restricted lattice against the local character description."""
        for name, G in [("symmetric(3)", symmetric(3)), ("dihedral(4)", dihedral(4)), ("klein", klein_four())]:
            for stabilizers in families(G):
                tori = build_norm_tori(G, stabilizers)
                for D in cyclic_subgroups(G):
                    if D.is_trivial:
                        continue
                    e_D = LatticeMap(
                        restrict_lattice(tori.incl.source, D),
                        restrict_lattice(tori.phnp, D),
                        tori.incl.matrix,
                        validate=False,
                    )
                    expected = ker_e_for_subgroup(G, D, stabilizers, over_conjugates=True)
                    kernel = induced_map(e_D, 2).kernel()
                    label = (name, D.members, [H.members for H in stabilizers])
                    assert kernel.structure == expected.structure, label
                    if all(is_normal(H) for H in stabilizers):
                        assert ker_e_for_subgroup(G, D, stabilizers, over_conjugates=False) == expected, label

    def test_over_conjugates(self):
        """Test a reflection stabilizer in S3 seen from a conjugate reflection."""
        S3 = symmetric(3)
        H = generated(S3, [S3.index_of_label("(1 2)")])
        D = generated(S3, [S3.index_of_label("(1 3)")])
        C3 = generated(S3, [S3.index_of_label("(1 2 3)")])
        # D fixes the coset gH with gHg^-1 = D while D ∩ H is trivial
        assert ker_e_for_subgroup(S3, D, [H], over_conjugates=True).order == 1
        assert ker_e_for_subgroup(S3, D, [H], over_conjugates=False).order == 2
        assert h2z_prime(S3, [H], [D, C3], over_conjugates=True).order == 1
        assert h2z_prime(S3, [H], [D, C3], over_conjugates=False).order == 2


@pytest.mark.integration
class TestCriteriaAgreement:
    """Test |H^2(Z)'| / |Ker e| against |Sha^2(Lambda)| whenever the HNP gate holds."""

    def check(self, name, G):
        family = maximal_cyclic_subgroups(G)
        gated = 0
        for stabilizers in families(G):
            result = sha2_order_by_criteria(G, stabilizers, family)
            if not result.hnp_gate:
                continue
            gated += 1
            assert result.order == phnp_sha(G, stabilizers).order, (name, [H.members for H in stabilizers])
        assert gated, name

    def test_sweep(self):
        """Test every one- and two-element family up to conjugacy, orders up to 6 and D4."""
        for name, G in small_groups(6) + [("dihedral(4)", dihedral(4))]:
            self.check(name, G)

    @pytest.mark.slow
    def test_catalog_sweep(self):
        """Test every one- and two-element family up to conjugacy for orders up to 12."""
        for name, G in small_groups(12):
            self.check(name, G)


@pytest.mark.integration
class TestFieldReductions:
    """Test Sha^2(Lambda) under adding the base field or repeating a field."""

    def test_appending_base_field(self):
        """Test a stabilizer equal to G leaves Sha^2 unchanged."""
        G = klein_four()
        N, A, _ = klein_subgroups(G)
        C4 = cyclic(4)
        S3 = symmetric(3)
        cases = [
            (G, [N, G.trivial()]),
            (G, [N, A]),
            (G, [G.trivial()]),
            (C4, [C4.subgroup([0, 2]), C4.trivial()]),
            (S3, [S3.subgroup([0, S3.index_of_label("(1 2)")])]),
        ]
        for group, stabilizers in cases:
            before = phnp_sha(group, stabilizers)
            after = phnp_sha(group, stabilizers + [group.whole()])
            assert after == before, group.name

    def test_repeated_field(self):
        """Test Sha^2 for (H, H) equals Sha^2 of Z[G/H]/<d>."""
        G = klein_four()
        N, _, _ = klein_subgroups(G)
        C4 = cyclic(4)
        S3 = symmetric(3)
        cases = [
            (G, G.trivial(), [2]),
            (G, N, []),
            (C4, C4.trivial(), []),
            (S3, S3.subgroup([0, S3.index_of_label("(1 2)")]), []),
        ]
        for group, H, expected in cases:
            family = maximal_cyclic_subgroups(group)
            L1, _ = hnp_lattice(group, [H])
            assert sha(group, L1, 2, family=family).to_list() == expected, group.name
            assert phnp_sha(group, [H, H]).to_list() == expected, group.name


@pytest.mark.integration
class TestExactness:
    """Test 0 -> Z -> Lambda -> L1 -> 0 for arbitrary subgroup pairs."""

    def test_all_subgroup_pairs(self):
        """Test every pair of subgroups of groups of order at most 8."""
        for name, G in small_groups(8):
            subgroups = all_subgroups(G)
            for i, A in enumerate(subgroups):
                for B in subgroups[i:]:
                    tori = build_norm_tori(G, [A, B], check=False)
                    check_exactness(tori.incl, tori.proj)
                    assert tori.phnp.rank == A.index + B.index - 1, name
                    assert tori.hnp.rank == tori.phnp.rank - 1, name


@pytest.mark.integration
class TestRestrictionFunctoriality:
    """Test restriction along a chain of subgroups."""

    def test_chain_in_cyclic_group(self):
        """Test res(D1 -> D2) . res(G -> D1) = res(G -> D2) for C8 > C4 > C2."""
        G = cyclic(8)
        Z = trivial_lattice(G)
        D1 = G.subgroup([0, 2, 4, 6])
        D2 = G.subgroup([0, 4])
        D1_group = D1.as_group()
        # 4 sits at position 2 of D1
        D2_in_D1 = D1_group.subgroup([0, 2])

        to_d1 = restriction_map(G, D1, Z, 2)
        to_d2 = restriction_map(G, D2, Z, 2)
        d1_to_d2 = restriction_map(D1_group, D2_in_D1, restrict_lattice(Z, D1), 2, source=to_d1.target)

        assert to_d1.source.moduli == (8,)
        assert to_d1.target.moduli == (4,)
        assert to_d2.target.moduli == (2,)
        for x in range(8):
            assert d1_to_d2(to_d1((x,))) == to_d2((x,))


@pytest.mark.integration
class TestFamilyMonotonicity:
    """Test a larger decomposition family never gives a larger Sha."""

    def test_subfamilies(self):
        """Test Sha over a subfamily is at least as large."""
        G = klein_four()
        N, A, B = klein_subgroups(G)
        S3 = symmetric(3)
        lattices = [
            (G, hnp_lattice(G, [G.trivial()])[0]),
            (G, build_norm_tori(G, [N, G.trivial()]).phnp),
            (S3, hnp_lattice(S3, [S3.trivial()])[0]),
        ]
        for group, M in lattices:
            family = maximal_cyclic_subgroups(group)
            full = sha(group, M, 2, family=family)
            for k in range(1, len(family)):
                partial = sha(group, M, 2, family=family[:k])
                assert partial.order >= full.order, (group.name, k)
                assert partial.order % full.order == 0, (group.name, k)
            with_trivial = sha(group, M, 2, family=[group.trivial()])
            assert with_trivial == cohomology(group, M, 2).structure
