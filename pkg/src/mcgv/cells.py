"""Oriented triangulated closed surfaces built from rotationally symmetric blocks.

The surface of genus g is assembled from g+1 identical sectors.  Each sector
carries one handle: a square-profile tube joining a right sphere-with-holes to
its mirror-image left sphere.  Both spheres have two polar vertices (fixed by
the rotation) and one rim square per hole.  The rotation shifts sector labels;
the reflection exchanges the left/right halves and fixes the tube equators.

Face charts: every face is a triangle with corners at (0,0), (1,0), (0,1) and
its boundary walk is counterclockwise in the chart, so the charts define a
global orientation.  Ports on edges are parametrized by t in (0,1) measured
from the edge's tail vertex.
"""

from fractions import Fraction


class Complex(object):
    """A closed oriented triangulated surface with named cells."""

    def __init__(self, vertices, edges, faces):
        self.vertices = list(vertices)
        self.edges = dict(edges)      # eid -> (tail_vertex, head_vertex)
        self.faces = dict(faces)      # fid -> tuple of 3 (eid, sign) entries
        self._check_and_index()

    def _check_and_index(self):
        self.edge_faces = {eid: [] for eid in self.edges}
        for fid, walk in self.faces.items():
            if len(walk) != 3:
                raise ValueError("face %r is not a triangle" % (fid,))
            # the walk must close up
            verts = []
            for eid, sign in walk:
                tail, head = self.edges[eid]
                verts.append((tail, head) if sign > 0 else (head, tail))
            for i in range(3):
                if verts[i][1] != verts[(i + 1) % 3][0]:
                    raise ValueError("face %r walk does not close" % (fid,))
            for side, (eid, sign) in enumerate(walk):
                self.edge_faces[eid].append((fid, side, sign))
        for eid, inc in self.edge_faces.items():
            if len(inc) != 2:
                raise ValueError("edge %r lies in %d faces" % (eid, len(inc)))
            if inc[0][2] == inc[1][2]:
                raise ValueError("edge %r traversed twice in the same direction"
                                 % (eid,))

    # ------------------------------------------------------------------
    # chart geometry

    CORNERS = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)),
               (Fraction(0), Fraction(1)))

    def face_corners(self, fid):
        """Vertices of fid in chart order (corner i starts side i)."""
        walk = self.faces[fid]
        out = []
        for eid, sign in walk:
            tail, head = self.edges[eid]
            out.append(tail if sign > 0 else head)
        return out

    def side_of_edge(self, fid, eid):
        """All side indices of fid carried by edge eid (usually one)."""
        return [side for side, (e, _s) in enumerate(self.faces[fid]) if e == eid]

    def chart_point(self, fid, eid, t):
        """Chart coordinates of the port at edge-parameter t on side eid of fid."""
        sides = self.side_of_edge(fid, eid)
        if len(sides) != 1:
            raise ValueError("edge %r not on face %r exactly once" % (eid, fid))
        side = sides[0]
        _e, sign = self.faces[fid][side]
        s = t if sign > 0 else 1 - t
        a = self.CORNERS[side]
        b = self.CORNERS[(side + 1) % 3]
        return (a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1]))

    def other_face(self, fid, eid):
        inc = self.edge_faces[eid]
        faces = [f for f, _side, _sign in inc]
        if faces[0] == fid:
            return faces[1]
        if faces[1] == fid:
            return faces[0]
        raise ValueError("face %r not adjacent to edge %r" % (fid, eid))

    def common_face(self, eid1, eid2):
        """The unique face containing both edges (error if not unique)."""
        f1 = set(f for f, _s, _g in self.edge_faces[eid1])
        f2 = set(f for f, _s, _g in self.edge_faces[eid2])
        both = f1 & f2
        if len(both) != 1:
            raise ValueError("edges %r,%r share %d faces" % (eid1, eid2, len(both)))
        return both.pop()

    def euler_characteristic(self):
        return len(self.vertices) - len(self.edges) + len(self.faces)


class Automorphism(object):
    """A cellular automorphism given by vertex and edge maps."""

    def __init__(self, complex_, vmap, emap, name=""):
        self.complex = complex_
        self.vmap = dict(vmap)
        self.emap = dict(emap)
        self.name = name
        # edge direction flags: True if the automorphism reverses the edge
        self.ereversed = {}
        for eid, (tail, head) in complex_.edges.items():
            itail, ihead = complex_.edges[self.emap[eid]]
            if (self.vmap[tail], self.vmap[head]) == (itail, ihead):
                self.ereversed[eid] = False
            elif (self.vmap[tail], self.vmap[head]) == (ihead, itail):
                self.ereversed[eid] = True
            else:
                raise ValueError("edge map inconsistent with vertex map at %r"
                                 % (eid,))
        self.fmap, self.preserves_orientation = self._derive_face_map()

    def _derive_face_map(self):
        cx = self.complex
        by_edgeset = {}
        for fid, walk in cx.faces.items():
            key = frozenset(e for e, _s in walk)
            by_edgeset.setdefault(key, []).append(fid)
        fmap = {}
        parities = set()
        for fid, walk in cx.faces.items():
            ikey = frozenset(self.emap[e] for e, _s in walk)
            cands = by_edgeset.get(ikey, [])
            if len(cands) != 1:
                raise ValueError("image of face %r not a unique face" % (fid,))
            target = cands[0]
            fmap[fid] = target
            # orientation parity: does the image walk run forward or backward?
            imset = [(self.emap[e], (-s if self.ereversed[e] else s))
                     for e, s in walk]
            twalk = list(cx.faces[target])
            if _cyclic_equal(imset, twalk):
                parities.add(1)
            elif _cyclic_equal(_reverse_walk(imset), twalk):
                parities.add(-1)
            else:
                raise ValueError("face %r does not map to a face walk" % (fid,))
        if len(parities) != 1:
            raise ValueError("automorphism mixes orientation behaviour")
        return fmap, (parities.pop() == 1)

    def port(self, eid, t):
        """Image of the port (eid, t)."""
        ie = self.emap[eid]
        return (ie, 1 - t if self.ereversed[eid] else t)

    def compose(self, other):
        """self after other (functional order)."""
        vmap = {v: self.vmap[other.vmap[v]] for v in other.vmap}
        emap = {e: self.emap[other.emap[e]] for e in other.emap}
        return Automorphism(self.complex, vmap, emap,
                            name="%s*%s" % (self.name, other.name))

    def inverse(self):
        vmap = {img: v for v, img in self.vmap.items()}
        emap = {img: e for e, img in self.emap.items()}
        return Automorphism(self.complex, vmap, emap, name="%s^-1" % self.name)

    def order(self, bound=10000):
        # the complex has no loop edges, so emap == id forces the identity map
        cur = self
        ident_e = {e: e for e in self.emap}
        for k in range(1, bound + 1):
            if cur.emap == ident_e and not any(cur.ereversed.values()):
                return k
            cur = cur.compose(self)
        raise ValueError("order exceeds bound")


def _cyclic_equal(a, b):
    if len(a) != len(b):
        return False
    for shift in range(len(a)):
        if all(a[(i + shift) % len(a)] == b[i] for i in range(len(b))):
            return True
    return False


def _reverse_walk(walk):
    return [(e, -s) for e, s in reversed(walk)]


# ----------------------------------------------------------------------
# the genus-g model complex


def build_complex(genus):
    """Triangulated closed surface of the given genus with its two symmetries.

    Returns (complex, rotation, reflection).
    """
    if genus < 3:
        raise ValueError("genus must be at least 3")
    n = genus + 1  # number of sectors / handles

    vertices = []
    edges = {}
    faces = {}

    poles = {("P", "R", "out"), ("P", "R", "in"), ("P", "L", "out"), ("P", "L", "in")}
    vertices.extend(sorted(poles))
    PRo, PRi = ("P", "R", "out"), ("P", "R", "in")
    PLo, PLi = ("P", "L", "out"), ("P", "L", "in")

    def r(s, i):
        return ("r", s % n, i % 4)

    def l(s, i):
        return ("l", s % n, i % 4)

    def q(s, i):
        return ("q", s % n, i % 4)

    for s in range(n):
        for i in range(4):
            vertices.extend([r(s, i), l(s, i), q(s, i)])

    def E(name, s, tail, head, i=None):
        eid = (name, s % n) if i is None else (name, s % n, i % 4)
        edges[eid] = (tail, head)
        return eid

    for s in range(n):
        # right sphere edges
        E("seamR", s, PRo, PRi)
        E("erO", s, PRo, r(s, 0), 0)
        E("erO", s, PRo, r(s, 1), 1)
        E("erO", s, PRo, r(s, 3), 3)
        E("erI", s, PRi, r(s, 1), 1)
        E("erI", s, PRi, r(s, 2), 2)
        E("erI", s, PRi, r(s, 3), 3)
        # left sphere edges
        E("seamL", s, PLo, PLi)
        E("elO", s, PLo, l(s, 0), 0)
        E("elO", s, PLo, l(s, 1), 1)
        E("elO", s, PLo, l(s, 3), 3)
        E("elI", s, PLi, l(s, 1), 1)
        E("elI", s, PLi, l(s, 2), 2)
        E("elI", s, PLi, l(s, 3), 3)
        for i in range(4):
            E("rimR", s, r(s, i), r(s, i + 1), i)
            E("rimL", s, l(s, i), l(s, i + 1), i)
            E("vertR", s, r(s, i), q(s, i), i)
            E("diagR", s, r(s, i), q(s, i + 1), i)
            E("vertL", s, l(s, i), q(s, i), i)
            E("diagL", s, l(s, i), q(s, i + 1), i)
            E("eq", s, q(s, i), q(s, i + 1), i)

    def F(fid, walk):
        faces[fid] = tuple(walk)

    for s in range(n):
        sn = (s + 1) % n
        # right sphere sector faces
        F(("RA", s), ((("seamR", s), 1), (("erI", s, 3), 1), (("erO", s, 3), -1)))
        F(("RB", s), ((("erO", s, 3), 1), (("rimR", s, 3), 1), (("erO", s, 0), -1)))
        F(("RC", s), ((("erO", s, 0), 1), (("rimR", s, 0), 1), (("erO", s, 1), -1)))
        F(("RD", s), ((("erO", s, 1), 1), (("erI", s, 1), -1), (("seamR", sn), -1)))
        F(("RE", s), ((("erI", s, 1), 1), (("rimR", s, 1), 1), (("erI", s, 2), -1)))
        F(("RF", s), ((("erI", s, 2), 1), (("rimR", s, 2), 1), (("erI", s, 3), -1)))
        # left sphere sector faces (mirrored walks)
        F(("LA", s), ((("elO", s, 3), 1), (("elI", s, 3), -1), (("seamL", s), -1)))
        F(("LB", s), ((("elO", s, 0), 1), (("rimL", s, 3), -1), (("elO", s, 3), -1)))
        F(("LC", s), ((("elO", s, 1), 1), (("rimL", s, 0), -1), (("elO", s, 0), -1)))
        F(("LD", s), ((("seamL", sn), 1), (("elI", s, 1), 1), (("elO", s, 1), -1)))
        F(("LE", s), ((("elI", s, 2), 1), (("rimL", s, 1), -1), (("elI", s, 1), -1)))
        F(("LF", s), ((("elI", s, 3), 1), (("rimL", s, 2), -1), (("elI", s, 2), -1)))
        for i in range(4):
            # right tube ring
            F(("TRa", s, i), ((("rimR", s, i), -1), (("diagR", s, i), 1),
                              (("vertR", s, (i + 1) % 4), -1)))
            F(("TRb", s, i), ((("vertR", s, i), 1), (("eq", s, i), 1),
                              (("diagR", s, i), -1)))
            # left tube ring
            F(("TLa", s, i), ((("rimL", s, i), 1), (("vertL", s, (i + 1) % 4), 1),
                              (("diagL", s, i), -1)))
            F(("TLb", s, i), ((("diagL", s, i), 1), (("eq", s, i), -1),
                              (("vertL", s, i), -1)))

    cx = Complex(vertices, edges, faces)

    # rotation: sector shift
    def shift_v(v):
        if v[0] == "P":
            return v
        return (v[0], (v[1] + 1) % n, v[2])

    def shift_e(eid):
        if len(eid) == 2:
            return (eid[0], (eid[1] + 1) % n)
        return (eid[0], (eid[1] + 1) % n, eid[2])

    rot = Automorphism(cx, {v: shift_v(v) for v in vertices},
                       {e: shift_e(e) for e in edges}, name="S")

    # reflection: swap left and right
    swap_v = {"r": "l", "l": "r", "q": "q"}
    swap_e = {"seamR": "seamL", "seamL": "seamR", "erO": "elO", "elO": "erO",
              "erI": "elI", "elI": "erI", "rimR": "rimL", "rimL": "rimR",
              "vertR": "vertL", "vertL": "vertR", "diagR": "diagL",
              "diagL": "diagR", "eq": "eq"}

    def mirror_v(v):
        if v[0] == "P":
            return ("P", "L" if v[1] == "R" else "R", v[2])
        return (swap_v[v[0]], v[1], v[2])

    def mirror_e(eid):
        return (swap_e[eid[0]],) + eid[1:]

    refl = Automorphism(cx, {v: mirror_v(v) for v in vertices},
                        {e: mirror_e(e) for e in edges}, name="R")

    return cx, rot, refl
