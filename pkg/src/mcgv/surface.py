"""The symmetric genus-g surface model with its named curve system.

Curve families on the g+1 handles (sectors are indexed 0..g internally,
published indices are 1-based):

* ``b_i``  -- meridian circle of handle i-1 (one per handle, g+1 of them);
* chain connectors through consecutive handles: ``a_1`` (handles g,0),
  ``c_i`` (handles i-1,i), ``a_g`` (handles g-1,g); the rotation cycles
  a_1 -> c_1 -> ... -> c_{g-1} -> a_g -> a_1;
* ``e_i`` -- skip connectors through handles {i-1, i+1} passing over handle
  i, with ``a_2 = e_0`` stored once;
* ``a_3`` -- double-skip connector through handles {g, 2} over handles 0,1
  (the fourth boundary curve of the lantern configuration);
* ``d``   -- band sum of a_1 and c_2 inside the lantern; the single named
  curve not fixed by the reflection.

Only the edge sequence of a route matters for the isotopy class (port
heights are normalized away), so routes are stored as edge-id lists.
"""

from fractions import Fraction

from .cells import build_complex
from .drawings import (Component, Drawing, reduce_state, build_arrangement,
                       map_drawing, curves_isotopic)
from .words import WordError


class GenusError(ValueError):
    """Genus below the supported range."""


class CurveId(object):
    """A named curve: family in {A,B,C,E,D} plus an index.

    Canonical storage keys identify a_2 with e_0; a_g uses the symbolic
    index "g" so that it stays distinct from the lantern curve a_3 at g=3.
    """

    def __init__(self, family, index=None):
        self.family = family
        self.index = index

    def __repr__(self):
        return "CurveId(%s)" % (self.name(),)

    def name(self):
        if self.family == "D":
            return "d"
        idx = self.index
        return "%s%s" % (self.family.lower(), idx)

    def __eq__(self, other):
        return (isinstance(other, CurveId)
                and (self.family, self.index) == (other.family, other.index))

    def __hash__(self):
        return hash((self.family, self.index))


def resolve_curve_key(family, index, genus):
    """Canonical storage key for a named curve, or raise WordError."""
    g = genus
    if family == "D":
        return ("D",)
    if index is None:
        raise WordError("family %s needs an index" % family)
    if family == "A":
        if index == "g" or (index == g and g != 3):
            return ("A", "g")
        if index == 2:
            return ("E", 0)
        if index in (1, 3):
            return ("A", index)
        raise WordError("a-curve index must be 1, 2, 3 or g (got %r)" % (index,))
    if family == "B":
        if 1 <= index <= g + 1:
            return ("B", index)
        raise WordError("b-curve index out of range: %r" % (index,))
    if family == "C":
        if 1 <= index <= g - 1:
            return ("C", index)
        raise WordError("c-curve index out of range: %r" % (index,))
    if family == "E":
        if 0 <= index <= g:
            return ("E", index)
        raise WordError("e-curve index out of range: %r" % (index,))
    raise WordError("unknown curve family %r" % (family,))


def rotate_curve_key(key, genus, steps=1):
    """Image of a stored curve key under the rotation (or its powers).

    Raises WordError when the image is not a named curve (a_3 and d leave
    the named system).
    """
    g = genus
    n = g + 1
    steps = steps % n
    if steps == 0:
        return key
    fam = key[0]
    if fam == "B":
        return ("B", (key[1] - 1 + steps) % n + 1)
    if fam == "E":
        return ("E", (key[1] + steps) % n)
    if fam in ("A", "C"):
        if key == ("A", 3):
            raise WordError("rotation image of a3 is not a named curve")
        # chain: position p = 0..g for a1, c1..c_{g-1}, ag
        if key == ("A", 1):
            p = 0
        elif fam == "C":
            p = key[1]
        else:  # ("A", "g")
            p = g
        p = (p + steps) % n
        if p == 0:
            return ("A", 1)
        if p == g:
            return ("A", "g")
        return ("C", p)
    if fam == "D":
        raise WordError("rotation image of d is not a named curve")
    raise WordError("unknown curve key %r" % (key,))


def reflect_curve_key(key, genus):
    """Image under the reflection: every named curve but d is fixed."""
    if key == ("D",):
        raise WordError("reflection image of d is not a named curve")
    return key


# ----------------------------------------------------------------------
# routes


def _meridian_route(s):
    out = []
    for i in range(4):
        out.append(("vertR", s, i))
        out.append(("diagR", s, i))
    return out


def _tube_lr(s, i):
    """Tube pass left-to-right through ring position i."""
    return [("rimL", s, i), ("diagL", s, i), ("eq", s, i),
            ("diagR", s, i), ("rimR", s, i)]


def _tube_rl(s, i):
    return list(reversed(_tube_lr(s, i)))


def _connector_route(j, n):
    """Chain connector through handles j and j+1."""
    jn = (j + 1) % n
    route = _tube_lr(j, 1)
    route += [("erI", j, 1), ("seamR", jn), ("erO", jn, 3)]
    route += _tube_rl(jn, 3)
    route += [("elO", jn, 3), ("seamL", jn), ("elI", j, 1)]
    return route


def _hop_route(j, span, n):
    """Connector through handles j and j+span flying over the holes between."""
    jp = (j + span) % n
    route = _tube_lr(j, 0)
    route += [("erO", j, 1), ("seamR", (j + 1) % n)]
    for a in range(1, span):
        h = (j + a) % n
        route += [("erO", h, 3), ("erO", h, 0), ("erO", h, 1),
                  ("seamR", (h + 1) % n)]
    route += [("erO", jp, 3)]
    route += _tube_rl(jp, 3)
    route += [("elO", jp, 3), ("seamL", jp)]
    for a in range(span - 1, 0, -1):
        h = (j + a) % n
        route += [("elO", h, 1), ("elO", h, 0), ("elO", h, 3),
                  ("seamL", h)]
    route += [("elO", j, 1)]
    return route


def _band_sum_route(n):
    """The lantern interior curve d: a_1 and c_2 joined inside the lantern."""
    g = n - 1
    route = _tube_lr(g, 1)
    route += [("erI", g, 1), ("seamR", 0), ("erO", 0, 3)]
    route += _tube_rl(0, 3)
    # wrap from handle 0 to handle 1 on the outer-pole side of the left sphere
    route += [("elO", 0, 0), ("elO", 0, 1), ("seamL", 1), ("elO", 1, 3),
              ("elO", 1, 0), ("elO", 1, 1), ("elI", 1, 1)]
    route += _tube_lr(1, 1)
    route += [("erI", 1, 1), ("seamR", 2), ("erO", 2, 3)]
    route += _tube_rl(2, 3)
    # poleward return from handle 2 back over holes 1, 0 to handle g
    route += [("elO", 2, 3), ("seamL", 2)]
    for h in (1, 0):
        route += [("elO", h, 1), ("elO", h, 0), ("elO", h, 3), ("seamL", h)]
    route += [("elI", g, 1)]
    return route


def named_routes(genus):
    """Canonical key -> edge route for every named curve."""
    n = genus + 1
    routes = {}
    for i in range(1, n + 1):
        routes[("B", i)] = _meridian_route(i - 1)
    routes[("A", 1)] = _connector_route(genus, n)
    for i in range(1, genus):
        routes[("C", i)] = _connector_route(i - 1, n)
    routes[("A", "g")] = _connector_route(genus - 1, n)
    for i in range(n):
        routes[("E", i)] = _hop_route((i - 1) % n, 2, n)
    routes[("A", 3)] = _hop_route(genus, 3, n)
    routes[("D",)] = _band_sum_route(n)
    return routes


def _key_sort_token(key):
    return tuple(str(part) for part in key)


def layout_drawings(cx, routes):
    """Assign port positions for all routes jointly, one Drawing per key."""
    visits = {}
    for key in sorted(routes, key=_key_sort_token):
        for k, eid in enumerate(routes[key]):
            visits.setdefault(eid, []).append((key, k))
    params = {}
    for eid, vlist in visits.items():
        m = len(vlist)
        for i, (key, k) in enumerate(vlist):
            params[(key, k)] = Fraction(i + 1, m + 1)
    out = {}
    for key, route in routes.items():
        ports = [(eid, params[(key, k)]) for k, eid in enumerate(route)]
        faces = route_faces(cx, route, key)
        out[key] = Drawing(cx, [Component(ports, faces)])
    return out


def route_faces(cx, route, key=None):
    """Chord faces of a transverse route, enforcing side alternation.

    Crossing an edge moves the curve to the other incident face, so the face
    sequence is forced once seeded; an invalid route raises.
    """
    n = len(route)
    faces = [cx.common_face(route[0], route[1])]
    for k in range(1, n):
        prev = faces[-1]
        nxt = cx.other_face(prev, route[k])
        target = route[(k + 1) % n]
        if all(e != target for e, _s in cx.faces[nxt]):
            raise ValueError("route %r breaks at step %d: face %r lacks %r"
                             % (key, k, nxt, target))
        faces.append(nxt)
    if cx.other_face(faces[-1], route[0]) != faces[0]:
        raise ValueError("route %r does not close up consistently" % (key,))
    return faces


# ----------------------------------------------------------------------
# the model


class SurfaceModel(object):
    """Immutable bundle: complex, symmetries, and the named curve system."""

    def __init__(self, genus):
        if genus < 3:
            raise GenusError("genus must be at least 3, got %r" % (genus,))
        self.genus = genus
        self.cx, self.rot, self.refl = build_complex(genus)
        self.curves = {}
        drawings = layout_drawings(self.cx, named_routes(genus))
        for key, drawing in drawings.items():
            comps, arr = reduce_state(self.cx, [c.copy()
                                                for c in drawing.components])
            if len(comps) != 1 or arr.crossings:
                raise AssertionError(
                    "route for %r is not an embedded essential curve" % (key,))
            self.curves[key] = Drawing(self.cx, comps)

    def curve(self, key):
        return self.curves[key]

    def curve_keys(self):
        return sorted(self.curves, key=_key_sort_token)

    def resolve(self, family, index):
        return resolve_curve_key(family, index, self.genus)

    def rotation_action(self, key, steps=1):
        return rotate_curve_key(key, self.genus, steps)

    def reflection_action(self, key):
        return reflect_curve_key(key, self.genus)

    # -- export ---------------------------------------------------------

    def to_json(self):
        """Stable serialization: cells, symmetries, curve coordinates."""
        cx = self.cx

        def cell_name(c):
            return "/".join(str(x) for x in c) if isinstance(c, tuple) else str(c)

        edges = {cell_name(e): [cell_name(v) for v in tv]
                 for e, tv in cx.edges.items()}
        faces = {cell_name(f): [[cell_name(e), s] for e, s in walk]
                 for f, walk in cx.faces.items()}
        curves = {}
        for key in self.curve_keys():
            weights = self.curves[key].edge_weights()
            curves["_".join(str(x) for x in key)] = {
                cell_name(e): str(w) for e, w in sorted(
                    weights.items(), key=lambda kv: cell_name(kv[0]))}
        return {
            "genus": self.genus,
            "vertices": sorted(cell_name(v) for v in cx.vertices),
            "edges": dict(sorted(edges.items())),
            "faces": dict(sorted(faces.items())),
            "rotation": {
                "vertices": {cell_name(v): cell_name(w)
                             for v, w in sorted(self.rot.vmap.items(),
                                                key=lambda kv: cell_name(kv[0]))},
                "edges": {cell_name(e): cell_name(w)
                          for e, w in sorted(self.rot.emap.items(),
                                             key=lambda kv: cell_name(kv[0]))},
                "faces": {cell_name(f): cell_name(w)
                          for f, w in sorted(self.rot.fmap.items(),
                                             key=lambda kv: cell_name(kv[0]))},
            },
            "reflection": {
                "vertices": {cell_name(v): cell_name(w)
                             for v, w in sorted(self.refl.vmap.items(),
                                                key=lambda kv: cell_name(kv[0]))},
                "edges": {cell_name(e): cell_name(w)
                          for e, w in sorted(self.refl.emap.items(),
                                             key=lambda kv: cell_name(kv[0]))},
                "faces": {cell_name(f): cell_name(w)
                          for f, w in sorted(self.refl.fmap.items(),
                                             key=lambda kv: cell_name(kv[0]))},
            },
            "curves": curves,
        }


_MODEL_CACHE = {}


def build_model(genus):
    """Validated model for the genus; cached per process (models are immutable)."""
    if genus not in _MODEL_CACHE:
        _MODEL_CACHE[genus] = SurfaceModel(genus)
    return _MODEL_CACHE[genus]
