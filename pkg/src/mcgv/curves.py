"""Isotopy-class computations: normal curves, twist words, identity certificates.

The engine applies mapping words to curves (rotation/reflection act by the
cellular symmetries, twist letters by annular surgery), tests unoriented
isotopy, and certifies identity words against the named filling system.
All answers are exact; geometric intersection numbers come from honest
minimal-position reduction.
"""

from fractions import Fraction

from .drawings import (Component, Drawing, build_arrangement, reduce_state,
                       map_drawing, twist_drawing, curves_isotopic,
                       geometric_intersection_number, component_is_trivial,
                       tighten_state)
from .words import MappingWord, WordError


class UnrealizableCoordinates(ValueError):
    """Edge weights violating the triangle matching conditions."""


class NormalCurve(object):
    """A multicurve on the model, normal after `normalize`.

    Wraps a transverse drawing; the per-edge coordinate vector and the
    homology class are derived data.
    """

    def __init__(self, model, drawing):
        self.model = model
        self.drawing = drawing
        self._class = None

    @property
    def coordinates(self):
        return self.drawing.edge_weights()

    def coordinate_vector(self):
        w = self.drawing.edge_weights()
        return {e: w.get(e, 0) for e in self.model.cx.edges}

    def total_weight(self):
        return self.drawing.total_weight()

    def homology_class(self, hom):
        if self._class is None:
            self._class = hom.class_of_drawing(self.drawing)
        return self._class

    def copy(self):
        return NormalCurve(self.model, self.drawing.copy())


class IdentityCertificate(object):
    def __init__(self, word, genus, ok, matrix_ok=None, failed_curve=None,
                 checked=0):
        self.word = str(word)
        self.genus = genus
        self.ok = ok
        self.matrix_ok = matrix_ok
        self.failed_curve = failed_curve
        self.checked = checked

    def to_json(self):
        return {"word": self.word, "genus": self.genus, "ok": self.ok,
                "matrix_identity": self.matrix_ok,
                "curves_checked": self.checked,
                "failed_curve": (None if self.failed_curve is None
                                 else "_".join(str(x) for x in self.failed_curve))}


class ClaimReport(object):
    def __init__(self, word, results):
        self.word = str(word)
        self.results = results  # list of dicts per pair

    @property
    def ok(self):
        return all(r["ok"] for r in self.results)

    def to_json(self):
        return {"word": self.word, "ok": self.ok, "pairs": self.results}


class CurveEngine(object):
    """Curve-level operations for one surface model."""

    def __init__(self, model, hom=None):
        self.model = model
        self._hom = hom
        self._rot_pow = {0: None}
        self._isect_cache = {}
        self._filling_checked = None

    # -- basics -----------------------------------------------------------

    def curve(self, key):
        return NormalCurve(self.model, self.model.curves[key].copy())

    def resolve_letter(self, kind, index_expr):
        idx = None
        if index_expr is not None:
            idx = index_expr.resolve(self.model.genus)
        return self.model.resolve(kind, idx)

    # -- normalization ------------------------------------------------------

    def normalize(self, curve):
        """Canonical reduced representative; drops null components."""
        comps = [c.copy() for c in curve.drawing.components]
        comps, _arr = reduce_state(self.model.cx, comps)
        keep = []
        for comp in comps:
            if not component_is_trivial(self.model.cx, comp):
                keep.append(comp)
        return NormalCurve(self.model, Drawing(self.model.cx, keep))

    def from_coordinates(self, weights):
        """Multicurve from per-edge crossing counts (matching enforced)."""
        cx = self.model.cx
        w = {e: int(weights.get(e, 0)) for e in cx.edges}
        if any(v < 0 for v in w.values()):
            raise UnrealizableCoordinates("negative edge weight")
        # corner counts per face
        corner = {}
        for fid, walk in cx.faces.items():
            ws = [w[e] for e, _s in walk]
            for i in range(3):
                n2 = ws[(i + 2) % 3] + ws[i] - ws[(i + 1) % 3]
                if n2 < 0 or n2 % 2:
                    raise UnrealizableCoordinates(
                        "matching fails in face %r" % (fid,))
                corner[(fid, i)] = n2 // 2
        # ports: per edge, evenly spaced; per face side, index ports by
        # distance from the side's starting corner
        port_t = {e: [Fraction(k + 1, w[e] + 1) for k in range(w[e])]
                  for e in cx.edges if w[e]}
        # connection maps: in face fid, the arc entering side i at depth k
        # (k-th port counted from corner i) pairs into side i-1 or side i+1
        link = {}
        for fid, walk in cx.faces.items():
            ws = [w[e] for e, _s in walk]
            for i in range(3):
                ni = corner[(fid, i)]       # arcs cutting corner i
                # these connect side i-1 (last ni ports) to side i (first ni)
                for k in range(ni):
                    a = (fid, (i + 2) % 3, ws[(i + 2) % 3] - 1 - k)
                    b = (fid, i, k)
                    link[a] = b
                    link[b] = a
        # side-position -> (edge, global index along edge orientation)
        def edge_slot(fid, side, pos):
            eid, sign = cx.faces[fid][side]
            m = w[eid]
            k = pos if sign > 0 else m - 1 - pos
            return (eid, k)

        # trace components
        seen = set()
        comps = []
        for fid0 in sorted(cx.faces, key=repr):
            for side0 in range(3):
                for pos0 in range(w[cx.faces[fid0][side0][0]]):
                    start = (fid0, side0, pos0)
                    if start in seen or start not in link:
                        continue
                    ports = []
                    faces = []
                    cur = start
                    while True:
                        # arc inside cur's face: from cur to link[cur]
                        nxt = link[cur]
                        seen.add(cur)
                        seen.add(nxt)
                        eid, k = edge_slot(nxt[0], nxt[1], nxt[2])
                        ports.append((eid, port_t[eid][k]))
                        faces.append(nxt[0])
                        # continue on the other side of that edge
                        fid2 = cx.other_face(nxt[0], eid)
                        sides = cx.side_of_edge(fid2, eid)
                        side2 = sides[0]
                        _e, sign2 = cx.faces[fid2][side2]
                        m = w[eid]
                        pos2 = k if sign2 > 0 else m - 1 - k
                        cur = (fid2, side2, pos2)
                        if cur == start:
                            break
                    # faces[i] should be the face of the chord AFTER ports[i]
                    faces = faces[1:] + faces[:1]
                    comps.append(Component(ports, faces))
        return NormalCurve(self.model, Drawing(cx, comps))

    # -- the mapping class action -----------------------------------------

    def _rot_power(self, k):
        n = self.model.genus + 1
        k = k % n
        if k not in self._rot_pow:
            auto = self.model.rot
            cur = auto
            for _ in range(k - 1):
                cur = cur.compose(auto)
            self._rot_pow[k] = cur
        return self._rot_pow[k]

    def apply_word(self, word, curve):
        """Image of the curve class under the mapping word."""
        if isinstance(word, str):
            word = MappingWord.parse(word)
        drawing = curve.drawing if isinstance(curve, NormalCurve) else curve
        drawing = drawing.copy()
        atoms = list(word.atoms())
        for kind, index, step in reversed(atoms):
            if kind == "S":
                auto = self._rot_power(step % (self.model.genus + 1))
                if auto is not None:
                    drawing = map_drawing(auto, drawing)
            elif kind == "R":
                drawing = map_drawing(self.model.refl, drawing)
            elif kind == "T":
                if step > 0:
                    drawing = map_drawing(self.model.refl, drawing)
                    drawing = map_drawing(self.model.rot, drawing)
                else:
                    auto = self._rot_power(self.model.genus)
                    drawing = map_drawing(auto, drawing)
                    drawing = map_drawing(self.model.refl, drawing)
            else:
                key = self.resolve_letter(kind, index)
                drawing = twist_drawing(drawing, self.model.curves[key], step)
        comps = tighten_state(self.model.cx, list(drawing.components))
        return NormalCurve(self.model, Drawing(self.model.cx, comps))

    def apply_word_key(self, word, key):
        return self.apply_word(word, self.curve(key))

    # -- comparisons --------------------------------------------------------

    def isotopic(self, c1, c2):
        d1 = c1.drawing if isinstance(c1, NormalCurve) else c1
        d2 = c2.drawing if isinstance(c2, NormalCurve) else c2
        if len(d1.components) == 1 and len(d2.components) == 1:
            if self._hom is not None:
                v1 = self._hom.class_of_drawing(d1)
                v2 = self._hom.class_of_drawing(d2)
                if v1 != v2 and v1 != tuple(-x for x in v2):
                    return False
            return curves_isotopic(d1, d2)
        # multicurves: match components greedily
        left = [Drawing(d1.cx, [c]) for c in d1.components]
        right = [Drawing(d2.cx, [c]) for c in d2.components]
        if len(left) != len(right):
            return False
        for l in left:
            hit = None
            for k, r in enumerate(right):
                if curves_isotopic(l, r):
                    hit = k
                    break
            if hit is None:
                return False
            right.pop(hit)
        return True

    def isotopic_to_key(self, curve, key):
        return self.isotopic(curve, NormalCurve(self.model,
                                                self.model.curves[key]))

    def geometric_intersection(self, c1, c2):
        k1 = c1 if isinstance(c1, tuple) else None
        k2 = c2 if isinstance(c2, tuple) else None
        if k1 is not None and k2 is not None:
            pair = tuple(sorted((k1, k2), key=repr))
            if pair in self._isect_cache:
                return self._isect_cache[pair]
        d1 = self.model.curves[k1] if k1 else (
            c1.drawing if isinstance(c1, NormalCurve) else c1)
        d2 = self.model.curves[k2] if k2 else (
            c2.drawing if isinstance(c2, NormalCurve) else c2)
        if d1 is d2:
            return 0
        # fast path: disjoint face supports
        f1 = set()
        for comp in d1.components:
            f1.update(comp.faces)
        if not any(f in f1 for comp in d2.components for f in comp.faces):
            val = 0
        else:
            val = geometric_intersection_number(d1, d2)
        if k1 is not None and k2 is not None:
            self._isect_cache[pair] = val
        return val

    def intersection_table(self):
        keys = self.model.curve_keys()
        table = {}
        for i, k1 in enumerate(keys):
            for k2 in keys[i:]:
                v = 0 if k1 == k2 else self.geometric_intersection(k1, k2)
                table[(k1, k2)] = v
                table[(k2, k1)] = v
        return table

    # -- tuple claims and identity certification ----------------------------

    def verify_tuple_claim(self, word, pairs):
        """Check f(input_i) ~ expected_i for named curve pairs."""
        if isinstance(word, str):
            word = MappingWord.parse(word)
        results = []
        for src_key, dst_key in pairs:
            img = self.apply_word(word, self.curve(src_key))
            ok = self.isotopic_to_key(img, dst_key)
            entry = {"input": _key_name(src_key), "expected": _key_name(dst_key),
                     "ok": bool(ok)}
            if not ok and self._hom is not None:
                entry["image_class"] = list(img.homology_class(self._hom))
            results.append(entry)
        return ClaimReport(word, results)

    def filling_system_valid(self):
        """Complement of the meridian+connector union is a union of disks.

        That subsystem alone fills (any curve missing every meridian lives in
        a holed sphere, and disjointness from the chain connectors would force
        a trivial partition of the holes), so fixing every named curve pins
        the mapping class via the standard filling-system argument.
        """
        if self._filling_checked is not None:
            return self._filling_checked
        model = self.model
        keys = ([("B", i) for i in range(1, model.genus + 2)]
                + [("A", 1), ("A", "g")]
                + [("C", i) for i in range(1, model.genus)])
        comps = []
        for k in keys:
            comps.extend(c.copy() for c in model.curves[k].components)
        from .drawings import respace_components
        respace_components(comps)
        arr = build_arrangement(model.cx, comps)
        ok = all(r["chi"] == 1 and len(r["walks"]) == 1
                 for r in arr.regions())
        self._filling_checked = ok
        return ok

    def certify_identity(self, word, hom=None, keys=None):
        """Certificate that the word is the identity mapping class.

        Requires (a) the induced matrix to be the identity with multiplier +1
        and (b) every named curve to be fixed as an isotopy class; the named
        system contains a filling subsystem (validated once per model).
        """
        if isinstance(word, str):
            word = MappingWord.parse(word)
        hom = hom or self._hom
        genus = self.model.genus
        if hom is not None:
            M = hom.word_matrix(word)
            matrix_ok = M.is_identity() and M.multiplier == 1
            if not matrix_ok:
                return IdentityCertificate(word, genus, False, matrix_ok=False)
        else:
            matrix_ok = None
        if not self.filling_system_valid():
            raise AssertionError("named system failed the filling check")
        checked = 0
        for key in (keys or self.model.curve_keys()):
            img = self.apply_word(word, self.curve(key))
            checked += 1
            if not self.isotopic_to_key(img, key):
                return IdentityCertificate(word, genus, False,
                                           matrix_ok=matrix_ok,
                                           failed_curve=key, checked=checked)
        return IdentityCertificate(word, genus, True, matrix_ok=matrix_ok,
                                   checked=checked)


def _key_name(key):
    return "_".join(str(x) for x in key)


_ENGINE_CACHE = {}


def engine_of(model, hom=None):
    k = id(model)
    if k not in _ENGINE_CACHE:
        _ENGINE_CACHE[k] = CurveEngine(model, hom)
    elif hom is not None and _ENGINE_CACHE[k]._hom is None:
        _ENGINE_CACHE[k]._hom = hom
    return _ENGINE_CACHE[k]
