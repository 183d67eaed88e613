import pytest

from circlet import (
    degree_profile,
    euler_characteristic,
    require_circlet,
    serialize,
    strong_components,
    validate_regularity,
)
from circlet.errors import BadParameters
from circlet.families import (
    FAMILIES,
    FamilySpec,
    crosspolytope_skeleton,
    cycle,
    finned_circlet,
    generate,
    hypercube_skeleton,
    random_even,
    random_even_multigraph,
    simplex_skeleton,
    triangular_grid,
)


def counts(k):
    return [len(k.cells_of_dim(r)) for r in range(k.dim + 1)]


# ---- individual generators --------------------------------------------


def test_cycle():
    k = cycle(6)
    assert counts(k) == [6, 6]
    assert set(degree_profile(k).histogram()) == {2}
    assert k.facets[0] == "e0-1"
    with pytest.raises(BadParameters):
        cycle(2)


def test_triangular_grid():
    k = triangular_grid(3)
    assert counts(k) == [10, 18]
    assert degree_profile(k).histogram() == {2: 3, 4: 6, 6: 1}
    assert degree_profile(k).is_even
    assert len(strong_components(k)) == 1
    assert counts(triangular_grid(1)) == [3, 3]
    assert "v0.0" in k.cells_of_dim(0)
    with pytest.raises(BadParameters):
        triangular_grid(0)


def test_simplex_skeleton():
    assert counts(simplex_skeleton(6, 2)) == [6, 15, 20]
    assert counts(simplex_skeleton(5, 2)) == [5, 10, 10]
    assert counts(simplex_skeleton(4, 2)) == [4, 6, 4]
    assert counts(simplex_skeleton(4, 3)) == [4, 6, 4, 1]
    assert simplex_skeleton(5, 2).facets[:2] == ("1-2-3", "1-2-4")
    with pytest.raises(BadParameters):
        simplex_skeleton(3, 3)
    with pytest.raises(BadParameters):
        simplex_skeleton(0, 0)


def test_hypercube_skeleton():
    assert counts(hypercube_skeleton(3, 2)) == [8, 12, 6]
    assert counts(hypercube_skeleton(4, 2)) == [16, 32, 24]
    assert counts(hypercube_skeleton(3, 3)) == [8, 12, 6, 1]
    assert hypercube_skeleton(3, 2).facets == (
        "**0",
        "**1",
        "*0*",
        "*1*",
        "0**",
        "1**",
    )
    with pytest.raises(BadParameters):
        hypercube_skeleton(3, 4)
    with pytest.raises(BadParameters):
        hypercube_skeleton(0, 0)


def test_crosspolytope_skeleton():
    assert counts(crosspolytope_skeleton(3, 2)) == [6, 12, 8]
    assert counts(crosspolytope_skeleton(4, 3)) == [8, 24, 32, 16]
    assert crosspolytope_skeleton(3, 2).facets[0] == "n1-n2-n3"
    with pytest.raises(BadParameters):
        crosspolytope_skeleton(3, 3)


def test_skeleta_are_regular():
    for k in (
        simplex_skeleton(6, 2),
        hypercube_skeleton(4, 2),
        crosspolytope_skeleton(4, 3),
        hypercube_skeleton(3, 3),
    ):
        assert validate_regularity(k).passed


def test_finned_circlet_profiles():
    expected = {
        (3, 4): ([15, 27, 13], {2: 24, 4: 3}),
        (3, 6): ([21, 39, 19], {2: 36, 6: 3}),
        (4, 4): ([20, 36, 17], {2: 32, 4: 4}),
    }
    for (kk, m), (cnt, hist) in expected.items():
        k = finned_circlet(kk, m)
        assert counts(k) == cnt
        assert degree_profile(k).histogram() == hist
        assert euler_characteristic(k) == 1
        assert validate_regularity(k).passed
        require_circlet(k)


def test_finned_circlet_rejects_bad_parameters():
    with pytest.raises(BadParameters):
        finned_circlet(2, 4)
    with pytest.raises(BadParameters):
        finned_circlet(3, 5)
    with pytest.raises(BadParameters):
        finned_circlet(3, 2)


def test_random_even():
    for seed in (0, 5):
        k = random_even(seed, 4)
        profile = degree_profile(k)
        assert profile.is_pure and profile.is_even
        assert len(strong_components(k)) == 1
        assert validate_regularity(k).passed
    with pytest.raises(BadParameters):
        random_even(0, 0)


def test_random_even_deterministic():
    a = serialize.dumps(serialize.complex_to_dict(random_even(3, 4)))
    b = serialize.dumps(serialize.complex_to_dict(random_even(3, 4)))
    assert a == b
    c = serialize.dumps(serialize.complex_to_dict(random_even(4, 4)))
    assert a != c


def test_random_even_multigraph():
    for seed in range(6):
        k = random_even_multigraph(seed)
        assert k.dim == 1
        assert len(k.cells_of_dim(0)) <= 12
        assert all(d % 2 == 0 for d in degree_profile(k).histogram())
        assert len(strong_components(k)) == 1
    one = serialize.dumps(serialize.complex_to_dict(random_even_multigraph(2)))
    two = serialize.dumps(serialize.complex_to_dict(random_even_multigraph(2)))
    assert one == two


# ---- dispatch ---------------------------------------------------------


def test_generate_dispatch():
    assert generate(FamilySpec("cycle", (5,))) == cycle(5)
    assert generate(FamilySpec("simplex_skeleton", (5, 2))) == simplex_skeleton(5, 2)
    assert set(FAMILIES) == {
        "cycle",
        "triangular_grid",
        "simplex_skeleton",
        "hypercube_skeleton",
        "crosspolytope_skeleton",
        "finned_circlet",
        "random_even",
    }


def test_generate_rejects_unknown_family():
    with pytest.raises(BadParameters):
        generate(FamilySpec("moebius", (3,)))


def test_generate_rejects_wrong_arity():
    with pytest.raises(BadParameters):
        generate(FamilySpec("cycle", (5, 2)))
    with pytest.raises(BadParameters):
        generate(FamilySpec("simplex_skeleton", (5,)))
