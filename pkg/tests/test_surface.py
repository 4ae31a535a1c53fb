import pytest

from mcgv.cells import build_complex
from mcgv.surface import (SurfaceModel, build_model, GenusError,
                          resolve_curve_key, rotate_curve_key,
                          reflect_curve_key)
from mcgv.words import WordError
from mcgv.drawings import map_drawing, curves_isotopic


def test_genus_out_of_range():
    with pytest.raises(GenusError):
        SurfaceModel(2)


def test_complex_invariants(model3):
    cx = model3.cx
    assert cx.euler_characteristic() == -4
    assert model3.rot.order(10) == 4
    assert model3.refl.order(4) == 2
    assert model3.rot.preserves_orientation
    assert not model3.refl.preserves_orientation


def test_complex_euler_character_general():
    for g in (4, 6):
        cx, rot, refl = build_complex(g)
        assert cx.euler_characteristic() == 2 - 2 * g
        assert rot.order(2 * g + 3) == g + 1


def test_curve_census_g3(model3):
    keys = model3.curve_keys()
    # 4 meridians, 4 chain connectors, 4 skip connectors, lantern curve, d
    assert len(keys) == 14
    assert ("A", 3) in keys and ("A", "g") in keys
    # chain cycle of length g+1: a1, c1, c2, ag
    assert ("C", 1) in keys and ("C", 2) in keys


def test_resolve_aliases(model3):
    g = model3.genus
    assert resolve_curve_key("A", 2, g) == ("E", 0)
    assert resolve_curve_key("A", "g", g) == ("A", "g")
    assert resolve_curve_key("A", 3, g) == ("A", 3)
    with pytest.raises(WordError):
        resolve_curve_key("B", g + 2, g)
    with pytest.raises(WordError):
        resolve_curve_key("C", 0, g)


def test_rotation_action_table(model14):
    g = model14.genus
    assert model14.rotation_action(("B", 1)) == ("B", 2)
    assert model14.rotation_action(("B", g + 1)) == ("B", 1)
    assert model14.rotation_action(("A", 1)) == ("C", 1)
    assert model14.rotation_action(("C", g - 1)) == ("A", "g")
    assert model14.rotation_action(("A", "g")) == ("A", 1)
    assert model14.rotation_action(("E", g)) == ("E", 0)
    # S^2 sends (a_g, b_6, a_2) to (c_1, b_8, e_2)
    assert model14.rotation_action(("A", "g"), 2) == ("C", 1)
    assert model14.rotation_action(("B", 6), 2) == ("B", 8)
    assert model14.rotation_action(("E", 0), 2) == ("E", 2)
    with pytest.raises(WordError):
        model14.rotation_action(("D",))


def test_reflection_action(model14):
    for key in model14.curve_keys():
        if key == ("D",):
            with pytest.raises(WordError):
                model14.reflection_action(key)
        else:
            assert model14.reflection_action(key) == key


def test_rotation_matches_drawings(model3):
    for key in model3.curve_keys():
        img = map_drawing(model3.rot, model3.curves[key])
        try:
            target = model3.rotation_action(key)
        except WordError:
            assert not curves_isotopic(img, model3.curves[key])
            continue
        assert curves_isotopic(img, model3.curves[target])


def test_deterministic_build():
    a = SurfaceModel(4).to_json()
    b = SurfaceModel(4).to_json()
    assert a == b


def test_model_json_schema(model3):
    data = model3.to_json()
    assert data["genus"] == 3
    assert set(data) >= {"vertices", "edges", "faces", "rotation",
                         "reflection", "curves"}
    # curve coordinates are decimal strings
    some = data["curves"]["B_1"]
    assert all(isinstance(v, str) and v.isdigit() for v in some.values())
    assert sum(int(v) for v in some.values()) == 8


def test_build_model_cached():
    assert build_model(3) is build_model(3)
