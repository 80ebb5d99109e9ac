import random
from fractions import Fraction as F

import pytest

from spherical_models import (
    BrCharacter,
    GaloisAction,
    HorosphericalDatum,
    IntMatrix,
    Lattice,
    LocalSite,
    PADIC,
    REAL,
    TitsClassSpec,
    UnsupportedBaseField,
    all_characters,
    based_root_datum,
    catalog_lookup,
    catalog_names,
    decide_diagonal,
    decide_embedding,
    decide_gu,
    decide_horospherical,
    decide_local_general,
    decide_number_field,
    delta_markers_from_catalog,
    diagram_automorphism_group,
    galois_from_permutations,
    replay,
    theta_lattice,
)
from spherical_models.decision import (
    center_invariants,
    check_local_mode,
    resolve_local_character,
    _horospherical_fast_path,
)
from spherical_models.lattice import fixed_sublattice


def _char(rd, galois, values, mode=PADIC):
    _, inv, _ = center_invariants(rd, galois)
    return BrCharacter(inv, [F(str(v)) for v in values])


# -- theta ---------------------------------------------------------------------


def test_theta_zero_character_gives_fixed_weights():
    rd = based_root_datum("A3")
    g = GaloisAction.trivial(3)
    t0 = _char(rd, g, ["0"])
    theta, _, theta_p = theta_lattice(rd, g, t0)
    assert theta_p == fixed_sublattice(3, list(g.matrices))


def test_theta_e7_order_two():
    rd = based_root_datum("E7")
    g = GaloisAction.trivial(7)
    t0 = _char(rd, g, ["1/2"])
    theta, _, theta_p = theta_lattice(rd, g, t0)
    assert theta.is_trivial()
    assert theta_p == rd.root_lattice


def test_theta_a3_order_two_on_z4():
    rd = based_root_datum("A3")
    g = GaloisAction.trivial(3)
    t0 = _char(rd, g, ["1/2"])
    _, _, theta_p = theta_lattice(rd, g, t0)
    doubled = Lattice(3, [[2 if i == j else 0 for j in range(3)] for i in range(3)])
    assert theta_p == doubled.sum(rd.root_lattice)


# -- local general -------------------------------------------------------------


def test_quadric_orthogonal_exists(so10_datum, galois_d5_flip):
    for galois, mode in ((GaloisAction.trivial(5), PADIC), (galois_d5_flip, REAL)):
        v = decide_local_general(so10_datum, galois, TitsClassSpec.zero(), mode)
        assert v.exists and replay(v)


def test_quadric_quaternionic_fails(so10_datum, galois_d5_flip):
    v = decide_local_general(so10_datum, galois_d5_flip, TitsClassSpec.from_values(["1/2"]), REAL)
    assert not v.exists and replay(v) == v.exists
    v = decide_local_general(
        so10_datum, GaloisAction.trivial(5), TitsClassSpec.from_values(["1/4"]), PADIC
    )
    assert not v.exists


def test_sl3_sl2_cases(sl3_datum, rd_a2):
    flip = diagram_automorphism_group(rd_a2.type)[1]
    g_out = galois_from_permutations(rd_a2, [flip])
    g_in = GaloisAction.trivial(2)
    assert decide_local_general(sl3_datum, g_in, TitsClassSpec.zero(), PADIC).exists
    assert decide_local_general(sl3_datum, g_out, TitsClassSpec.zero(), REAL).exists
    assert not decide_local_general(
        sl3_datum, g_in, TitsClassSpec.from_values(["1/3"]), PADIC
    ).exists
    with pytest.raises(UnsupportedBaseField):
        check_local_mode("general")


def test_stability_short_circuit(rd_a2):
    from spherical_models import SphericalDatum

    flip = diagram_automorphism_group(rd_a2.type)[1]
    g = galois_from_permutations(rd_a2, [flip])
    d = SphericalDatum(rd_a2, [[1, 0]], [], [])
    v = decide_local_general(d, g, TitsClassSpec.zero(), REAL)
    assert not v.exists
    assert v.reasons[0]["condition"] == "invariants-stability"
    assert v.reasons[0]["witness"] == "generator 1"


# -- horospherical -------------------------------------------------------------


def test_e7_dichotomy():
    rd = based_root_datum("E7")
    g = GaloisAction("cyclic2", [IntMatrix.identity(7)])
    half = TitsClassSpec.from_values(["1/2"])
    h_p = HorosphericalDatum(rd, [], Lattice.full(7).basis.data)
    v = decide_horospherical(h_p, g, half, REAL)
    assert not v.exists
    h_q = HorosphericalDatum(rd, [], rd.root_lattice.basis.data)
    v = decide_horospherical(h_q, g, half, REAL)
    assert v.exists and v.uniqueness_note
    assert any(r.get("rule") == "*1" for r in v.reasons)


def test_index_two_condition_at_real_site(rd_a5, galois_a5_flip, m_2p_plus_q):
    h = HorosphericalDatum(rd_a5, [], m_2p_plus_q.basis.data)
    v = decide_horospherical(h, galois_a5_flip, TitsClassSpec.from_values(["1/2"]), REAL)
    assert v.exists
    assert any(r.get("rule") == "*2" for r in v.reasons)
    assert v.uniqueness_note is None  # outer action: no splitness claim


def test_padic_zero_character_never_fails_cohomology(rd_a5):
    rng = random.Random(6)
    g = GaloisAction.trivial(5)
    for _ in range(20):
        rows = [
            [rng.randint(-2, 2) for _ in range(5)] for _ in range(rng.randint(1, 4))
        ]
        h = HorosphericalDatum(rd_a5, [], rows)
        v = decide_horospherical(h, g, TitsClassSpec.zero(), PADIC)
        coh = [r for r in v.reasons if r["condition"] == "cohomology"]
        assert coh and coh[0]["ok"]


# -- fast paths agree with the kernel-preimage test ------------------------------


FAST_PATH_TYPES = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "C3", "D4", "D5", "G2"]


@pytest.mark.parametrize("label", FAST_PATH_TYPES)
def test_fast_path_matches_generic(label):
    rng = random.Random(hash(label) % 10000)
    rd = based_root_datum(label)
    n = rd.rank
    for auto in diagram_automorphism_group(rd.type):
        galois = (
            GaloisAction.trivial(n)
            if auto.is_identity()
            else galois_from_permutations(rd, [auto])
        )
        mod, inv, incl = center_invariants(rd, galois)
        chars = [c for c in all_characters(inv) if not c.is_zero()]
        thetas = {c.values: theta_lattice(rd, galois, c)[2] for c in chars}
        node_orbits = _node_orbits(auto, n)
        for _ in range(40):
            m_lat = _random_stable_m(rng, galois, node_orbits, n)
            m_fix = fixed_sublattice(m_lat, list(galois.matrices))
            for c in chars:
                fast = _horospherical_fast_path(rd, galois, c, m_lat, mod, inv, incl)
                generic = thetas[c.values].contains(m_fix)
                if fast is not None:
                    assert fast[1] == generic, (label, auto.one_line(), c.values)


def _node_orbits(auto, n):
    seen, orbits = set(), []
    for i in range(1, n + 1):
        if i in seen:
            continue
        orb, j = [], i
        while j not in orb:
            orb.append(j)
            j = auto.image(j)
        orbits.append(tuple(orb))
        seen.update(orb)
    return orbits


def _random_stable_m(rng, galois, node_orbits, n):
    nodes = set()
    for orb in node_orbits:
        if rng.random() < 0.35:
            nodes |= set(orb)
    rows = []
    for _ in range(rng.randint(1, 3)):
        v = [0] * n
        for j in range(n):
            if (j + 1) not in nodes:
                v[j] = rng.randint(-3, 3)
        for m in galois.matrices:
            rows.append([sum(v[i] * m.data[i][j] for i in range(n)) for j in range(n)])
    return Lattice(n, rows)


# -- specialization coherence ----------------------------------------------------


@pytest.mark.parametrize(
    "label", ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "D5"]
)
def test_horospherical_agrees_with_orbit_test(label):
    rng = random.Random(len(label) * 37)
    rd = based_root_datum(label)
    n = rd.rank
    for auto in diagram_automorphism_group(rd.type):
        galois = (
            GaloisAction.trivial(n)
            if auto.is_identity()
            else galois_from_permutations(rd, [auto])
        )
        _, inv, _ = center_invariants(rd, galois)
        node_orbits = _node_orbits(auto, n)
        for _ in range(15):
            m_lat = _random_stable_m(rng, galois, node_orbits, n)
            nodes = [
                i
                for i in range(1, n + 1)
                if all(row[i - 1] == 0 for row in m_lat.basis.data)
            ]
            h = HorosphericalDatum(rd, nodes, m_lat.basis.data)
            if not h.stable(galois):
                continue
            for t0 in all_characters(inv):
                tits = (
                    TitsClassSpec.zero()
                    if t0.is_zero()
                    else TitsClassSpec.from_values(list(t0.values))
                )
                via_pair = decide_horospherical(h, galois, tits, PADIC)
                via_orbit = decide_local_general(h.to_spherical(), galois, tits, PADIC)
                assert via_pair.exists == via_orbit.exists, (label, h.to_dict(), t0.values)


# -- G/U --------------------------------------------------------------------------


def test_gu_su_family_parity():
    for m in range(1, 6):
        for s in range(0, 2 * m + 1):
            entry = catalog_lookup("SU(%d,%d)" % (s, 2 * m - s))
            rd = based_root_datum(entry.type)
            v = decide_gu(rd, entry.galois, entry.tits, entry.mode)
            assert v.exists == ((s - m) % 2 == 0)


def test_gu_zero_character_exists():
    rd = based_root_datum("B3")
    v = decide_gu(rd, GaloisAction.trivial(3), TitsClassSpec.zero(), PADIC)
    assert v.exists


def test_gu_symplectic_quaternionic_fails():
    entry = catalog_lookup("Sp(2,1)")
    rd = based_root_datum(entry.type)
    v = decide_gu(rd, entry.galois, entry.tits, entry.mode)
    assert not v.exists


def test_gu_agrees_with_full_weight_lattice_pair():
    for name in ["SU(2,2)", "SU(3,1)", "SU(4)", "SL(3,R)", "SL(2,H)", "Sp(6,R)", "Sp(2,1)", "SO*(10)"]:
        entry = catalog_lookup(name)
        rd = based_root_datum(entry.type)
        h = HorosphericalDatum(rd, [], Lattice.full(rd.rank).basis.data)
        a = decide_gu(rd, entry.galois, entry.tits, entry.mode)
        b = decide_horospherical(h, entry.galois, entry.tits, entry.mode)
        assert a.exists == b.exists, name


# -- number field ------------------------------------------------------------------


def test_number_field_index_two(rd_a5, galois_a5_flip, m_2p_plus_q):
    sites = [
        LocalSite("inf", REAL, galois_a5_flip, ("1/2",)),
        LocalSite("p2", PADIC, galois_a5_flip, ("1/2",)),
        LocalSite("split", PADIC, GaloisAction.trivial(5), None),
    ]
    h = HorosphericalDatum(rd_a5, [], m_2p_plus_q.basis.data)
    assert decide_number_field(h, galois_a5_flip, sites).exists
    h_full = HorosphericalDatum(rd_a5, [], Lattice.full(5).basis.data)
    v = decide_number_field(h_full, galois_a5_flip, sites)
    assert not v.exists
    failing = [r for r in v.reasons if not r["ok"]]
    assert failing and failing[0]["condition"].startswith("site:")


def test_number_field_all_trivial_sites(rd_a5, galois_a5_flip):
    h = HorosphericalDatum(rd_a5, [], Lattice.full(5).basis.data)
    sites = [LocalSite("p", PADIC, galois_a5_flip, None)]
    assert decide_number_field(h, galois_a5_flip, sites).exists
    h_bad = HorosphericalDatum(rd_a5, [1], [])
    assert not decide_number_field(h_bad, galois_a5_flip, sites).exists


def test_number_field_s3_global_cyclic_sites():
    # the full symmetric group acts globally on the fork; completions see
    # cyclic subgroups only, and the order-3 ones admit no nonzero character
    rd = based_root_datum("D4")
    autos = diagram_automorphism_group(rd.type)
    three = [a for a in autos if a.order() == 3][0]
    two = [a for a in autos if a.order() == 2][0]
    global_g = galois_from_permutations(rd, [three, two])
    site3 = LocalSite("p3", PADIC, galois_from_permutations(rd, [three]), None)
    site2 = LocalSite("p2", PADIC, galois_from_permutations(rd, [two]), ("1/2",))
    h_root = HorosphericalDatum(rd, [], rd.root_lattice.basis.data)
    v = decide_number_field(h_root, global_g, [site3, site2])
    assert v.exists
    h_full = HorosphericalDatum(rd, [], Lattice.full(4).basis.data)
    v = decide_number_field(h_full, global_g, [site3, site2])
    assert not v.exists
    # a nonzero character at an order-3 completion is structurally impossible
    from spherical_models.decision import center_invariants

    _, inv3, _ = center_invariants(rd, galois_from_permutations(rd, [three]))
    assert inv3.is_trivial()


def test_number_field_rejects_non_subaction(rd_a5, galois_a5_flip):
    h = HorosphericalDatum(rd_a5, [], Lattice.full(5).basis.data)
    site = LocalSite("bad", PADIC, galois_a5_flip, None)
    with pytest.raises(ValueError):
        decide_number_field(h, GaloisAction.trivial(5), [site])


# -- diagonal -----------------------------------------------------------------------


def test_diagonal_all_trivial():
    assert decide_diagonal(3, ["trivial", "trivial"]).exists


def test_diagonal_catalog_pairs():
    assert decide_diagonal(2, delta_markers_from_catalog(["SU(2,2)", "SU(4)"])).exists
    assert not decide_diagonal(
        2, delta_markers_from_catalog(["Sp(4,R)", "Sp(2,0)"])
    ).exists


def test_diagonal_marker_count():
    with pytest.raises(ValueError):
        decide_diagonal(2, [])


# -- embedding ----------------------------------------------------------------------


def test_embedding_su6_family(sl6_fan, sl6_datum):
    outcomes = []
    for j in range(4):
        entry = catalog_lookup("SU(%d,%d)" % (6 - j, j))
        v = decide_embedding(sl6_fan, sl6_datum, entry.galois, entry.tits, REAL)
        outcomes.append(v.exists)
        assert replay(v) == v.exists
    assert outcomes == [False, True, False, True]


def test_embedding_split_exists(sl6_fan, sl6_datum):
    entry = catalog_lookup("SL(6,R)")
    v = decide_embedding(sl6_fan, sl6_datum, entry.galois, entry.tits, REAL)
    assert v.exists


def test_embedding_sl3_fan_fails_on_lift(sl3_fan, sl3_datum, rd_a2):
    flip = diagram_automorphism_group(rd_a2.type)[1]
    g = galois_from_permutations(rd_a2, [flip])
    v = decide_embedding(sl3_fan, sl3_datum, g, TitsClassSpec.zero(), REAL)
    assert not v.exists
    fan_reason = [r for r in v.reasons if r["condition"] == "fan-stability"][0]
    assert not fan_reason["ok"]


# -- catalog ------------------------------------------------------------------------


def test_catalog_su_values():
    assert catalog_lookup("SU(2,2)").tits.kind == "zero"
    assert catalog_lookup("SU(5,1)").tits.kind == "zero"
    assert catalog_lookup("SU(6)").tits.values == (F(1, 2),)
    assert catalog_lookup("Sp(4,R)").tits.kind == "zero"


def test_catalog_unknown_name():
    with pytest.raises(KeyError):
        catalog_lookup("bogus")


def test_catalog_extension_env(tmp_path, monkeypatch):
    import json

    path = tmp_path / "extra.json"
    path.write_text(
        json.dumps(
            {"MyForm": {"type": "A3", "galois": "flip", "t0": ["1/2"], "mode": "real"}}
        )
    )
    monkeypatch.setenv("SPHERICAL_MODELS_CATALOG", str(path))
    entry = catalog_lookup("MyForm")
    assert str(entry.type) == "A3" and entry.tits.values == (F(1, 2),)
    assert "MyForm" in catalog_names()


def test_verdict_reasons_replay_everywhere(sl6_fan, sl6_datum, galois_a5_flip, rd_a5, m_2p_plus_q):
    verdicts = [
        decide_embedding(
            sl6_fan, sl6_datum, catalog_lookup("SU(6)").galois, catalog_lookup("SU(6)").tits, REAL
        ),
        decide_horospherical(
            HorosphericalDatum(rd_a5, [], m_2p_plus_q.basis.data),
            galois_a5_flip,
            TitsClassSpec.from_values(["1/2"]),
            REAL,
        ),
        decide_diagonal(2, ["trivial"]),
    ]
    for v in verdicts:
        assert replay(v) == v.exists
