"""Planar diagram model: construction, codes, and surgeries."""

import json

import pytest

from skeinkit.corpus import (
    CORPUS,
    corpus_names,
    empty_link,
    figure_eight,
    hopf_minus,
    hopf_plus,
    load_corpus,
    trefoil,
    unknot,
    unlink,
)
from skeinkit.diagram import AmbiguousOrientationError, DiagramError, LinkDiagram


class TestConstruction:
    def test_hopf_plus_metadata(self):
        d = hopf_plus()
        assert d.n_components == 2
        assert len(d.crossings) == 2
        assert d.signs == (1, 1)
        assert d.writhe() == 2
        assert d.linking_number(0, 1) == 1
        assert d.self_writhe(0) == 0

    def test_hopf_minus_metadata(self):
        d = hopf_minus()
        assert d.signs == (-1, -1)
        assert d.writhe() == -2
        assert d.linking_number(0, 1) == -1

    def test_trefoil_metadata(self):
        d = trefoil()
        assert d.n_components == 1
        assert d.writhe() == 3
        assert d.self_writhe(0) == 3

    def test_figure_eight_metadata(self):
        d = figure_eight()
        assert d.n_components == 1
        assert len(d.crossings) == 4
        assert d.writhe() == 0

    def test_unlink_and_empty(self):
        assert empty_link().n_components == 0
        assert unlink(3).n_components == 3
        assert unlink(3).free_loops == (0, 1, 2)
        assert unknot().crossings == ()

    def test_signs_are_derived(self):
        # same quads, no signs supplied: derivation must match the stored ones
        d = hopf_plus()
        rebuilt = LinkDiagram(
            name="x",
            n_components=2,
            crossings=d.crossings,
            component_of_edge=d.component_of_edge,
        )
        assert rebuilt.signs == d.signs

    def test_wrong_signs_rejected(self):
        d = hopf_plus()
        with pytest.raises(DiagramError):
            LinkDiagram(
                name="x",
                n_components=2,
                crossings=d.crossings,
                signs=(1, -1),
                component_of_edge=d.component_of_edge,
            )

    def test_all_over_component_is_ambiguous(self):
        # a circle running over another at both transits: either direction
        # of the over circle is globally consistent, so there is no unique
        # orientation to derive
        with pytest.raises(AmbiguousOrientationError):
            LinkDiagram(
                name="bad",
                n_components=2,
                crossings=((1, 3, 2, 4), (2, 4, 1, 3)),
                component_of_edge={1: 0, 2: 0, 3: 1, 4: 1},
            )

    def test_supplied_signs_resolve_ambiguity(self):
        # both orientations of the all-over circle are legal diagrams; the
        # signs field picks one, and serialization keeps the choice
        quads = ((1, 3, 2, 4), (2, 4, 1, 3))
        comp = {1: 0, 2: 0, 3: 1, 4: 1}
        for chosen in ((1, 1), (-1, -1)):
            d = LinkDiagram("clasp", 2, quads, comp, signs=chosen)
            assert d.signs == chosen
            back = LinkDiagram.from_json(d.to_json())
            assert back.signs == chosen
        with pytest.raises(DiagramError):
            LinkDiagram("clasp", 2, quads, comp, signs=(1, -1))


class TestSerialization:
    def test_hopf_json_golden(self):
        want = {
            "component_of_edge": {"1": 0, "2": 0, "3": 1, "4": 1},
            "components": 2,
            "crossings": [[1, 4, 2, 3], [4, 1, 3, 2]],
            "free_loops": [],
            "name": "hopf_plus",
            "signs": [1, 1],
        }
        assert json.loads(hopf_plus().to_json()) == want

    def test_curl_json_golden(self):
        d = unknot().with_curl(0, 1)
        assert json.loads(d.to_json())["crossings"] == [[2, 2, 1, 1]]
        assert d.signs == (1,)
        d = unknot().with_curl(0, -1)
        assert d.signs == (-1,)

    @pytest.mark.parametrize("name", sorted(CORPUS))
    def test_roundtrip_preserves_structure(self, name):
        d = load_corpus(name)
        back = LinkDiagram.from_json(d.to_json())
        assert back.same_diagram_as(d)
        assert back.signs == d.signs

    def test_corpus_listing(self):
        names = corpus_names()
        assert "trefoil" in names and "hopf_plus" in names
        with pytest.raises(KeyError):
            load_corpus("no_such_link")


class TestCanonicalCode:
    def test_meridian_insertion_matches_hopf(self):
        # one meridian bead around an unknot core IS the positive hopf
        # diagram; this pins the handedness of the insertion
        beaded = unknot().with_meridians(0, 1)
        assert beaded.canonical_code() == hopf_plus().canonical_code()

    def test_distinguishes_mirror(self):
        assert hopf_plus().canonical_code() != hopf_minus().canonical_code()

    def test_stable_under_relabeling(self):
        d = trefoil()
        back = LinkDiagram.from_json(d.to_json())
        assert back.canonical_code() == d.canonical_code()


class TestSurgeries:
    def test_cable_hopf(self):
        d = hopf_plus().cable(0, 2)
        assert d.n_components == 3
        assert len(d.crossings) == 4
        assert d.writhe() == 4
        lk = [
            [0 if i == j else d.linking_number(i, j) for j in range(3)]
            for i in range(3)
        ]
        assert lk == [[0, 0, 1], [0, 0, 1], [1, 1, 0]]

    def test_cable_trefoil_counts(self):
        # doubling squares self-crossings: 3 -> 12
        d = trefoil().cable(0, 2)
        assert len(d.crossings) == 12
        assert d.n_components == 2
        assert d.self_writhe(0) == 3 and d.self_writhe(1) == 3
        assert d.linking_number(0, 1) == 3
        assert d.writhe() == 12

    def test_cable_then_delete_copy_restores(self):
        d = trefoil().cable(0, 2).delete_component(1)
        assert d.same_diagram_as(trefoil())

    def test_meridian_beads(self):
        d = unknot().with_meridians(0, 2)
        assert d.n_components == 3
        assert len(d.crossings) == 4
        assert d.writhe() == 4
        assert d.linking_number(0, 1) == 1
        assert d.linking_number(0, 2) == 1
        assert d.linking_number(1, 2) == 0

    def test_delete_to_free_loops(self):
        d = hopf_plus().delete_component(1)
        assert d.n_components == 1
        assert d.crossings == ()
        assert d.free_loops == (0,)
        d = unknot().with_meridians(0, 3).delete_component(0)
        assert d.free_loops == (0, 1, 2)

    def test_reverse_component(self):
        d = hopf_plus().reverse_component(0)
        assert d.writhe() == -2
        assert d.linking_number(0, 1) == -1
        # reversing one bead flips only its linking number with the core
        d = unknot().with_meridians(0, 2).reverse_component(1)
        assert d.linking_number(0, 1) == -1
        assert d.linking_number(0, 2) == 1
        assert d.writhe() == 0

    def test_double_reverse_is_identity(self):
        d = trefoil().reverse_component(0).reverse_component(0)
        assert d.same_diagram_as(trefoil())

    def test_mirror(self):
        d = trefoil().mirror()
        assert d.writhe() == -3
        assert d.mirror().same_diagram_as(trefoil())

    def test_disjoint_union(self):
        d = hopf_plus().disjoint_union(unknot())
        assert d.n_components == 3
        assert d.free_loops == (2,)
        assert len(d.crossings) == 2

    def test_curl_changes_writhe_only(self):
        d = trefoil().with_curl(0, -1)
        assert d.writhe() == 2
        assert d.n_components == 1
        assert len(d.crossings) == 4
