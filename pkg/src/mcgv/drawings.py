"""Transverse curve drawings on a triangulated surface, with exact geometry.

A drawing is a disjoint-or-crossing union of closed curves, each recorded as a
cyclic list of ports (edge crossings with exact rational positions) joined by
straight chords inside faces.  All computations are exact over Fraction:

* arrangements resolve every chord/chord crossing inside each face chart;
* complement regions are assembled from per-face planar cells glued across
  edge intervals, giving Euler characteristics and boundary walks;
* empty bigon/monogon removal drives curves to minimal position (the bigon
  criterion makes this complete for embedded curves);
* Dehn twists act by helix insertion along the twisting curve.
"""

from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


class DegeneratePosition(Exception):
    """Ports collide or three chords meet in a point; caller should perturb."""


class Component(object):
    """A closed transverse curve: ports[i] --chord in faces[i]--> ports[i+1]."""

    def __init__(self, ports, faces):
        assert len(ports) == len(faces) and len(ports) >= 2
        self.ports = list(ports)   # [(eid, Fraction t), ...]
        self.faces = list(faces)   # faces[i] carries chord ports[i] -> ports[i+1]

    def __len__(self):
        return len(self.ports)

    def copy(self):
        return Component(list(self.ports), list(self.faces))


class Drawing(object):
    """A multicurve drawing: a list of components on a fixed complex."""

    def __init__(self, cx, components):
        self.cx = cx
        self.components = [c for c in components if c is not None]

    def copy(self):
        return Drawing(self.cx, [c.copy() for c in self.components])

    def edge_weights(self):
        w = {}
        for comp in self.components:
            for eid, _t in comp.ports:
                w[eid] = w.get(eid, 0) + 1
        return w

    def total_weight(self):
        return sum(len(c) for c in self.components)

    def is_empty(self):
        return not self.components


# ----------------------------------------------------------------------
# exact 2D helpers (chart coordinates)


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def segment_intersection(p1, p2, p3, p4):
    """Proper interior intersection of segments p1p2 and p3p4, or None.

    Touching at endpoints is reported as degenerate, since the callers
    guarantee distinct ports; collinear overlap is degenerate too.
    """
    d1 = _sub(p2, p1)
    d2 = _sub(p4, p3)
    denom = _cross(d1, d2)
    if denom == 0:
        if _cross(_sub(p3, p1), d1) == 0:
            lo1, hi1 = sorted((p1, p2))
            lo2, hi2 = sorted((p3, p4))
            if max(lo1, lo2) < min(hi1, hi2):
                raise DegeneratePosition("collinear overlapping chords")
        return None
    t = Fraction(_cross(_sub(p3, p1), d2), denom)
    u = Fraction(_cross(_sub(p3, p1), d1), denom)
    if t <= 0 or t >= 1 or u <= 0 or u >= 1:
        if t in (0, 1) and 0 <= u <= 1 or u in (0, 1) and 0 <= t <= 1:
            if 0 < t < 1 or 0 < u < 1:
                raise DegeneratePosition("chord endpoint on another chord")
        return None
    point = (p1[0] + t * d1[0], p1[1] + t * d1[1])
    return t, u, point


def _ccw_sorted(items):
    """Sort (vec, payload) pairs counterclockwise starting at direction (1,0)."""
    def key(item):
        x, y = item[0]
        half = 0 if (y > 0 or (y == 0 and x > 0)) else 1
        return half

    halves = ([], [])
    for item in items:
        halves[key(item)].append(item)

    def cmp_sort(lst):
        # within a half-plane, order by cross product
        out = list(lst)
        n = len(out)
        for i in range(1, n):
            j = i
            while j > 0 and _cross(out[j - 1][0], out[j][0]) < 0:
                out[j - 1], out[j] = out[j], out[j - 1]
                j -= 1
        return out

    return cmp_sort(halves[0]) + cmp_sort(halves[1])


# ----------------------------------------------------------------------
# arrangement


class Arrangement(object):
    """Exact overlay of drawing components on the complex.

    Provides crossings, complement regions with Euler characteristics and
    boundary walks, and signed intersection sums.
    """

    def __init__(self, cx, components):
        self.cx = cx
        self.components = components
        self._build()

    # -- construction ---------------------------------------------------

    def _build(self):
        cx = self.cx
        # ports per edge: (t, (comp_idx, port_idx))
        self.edge_ports = {}
        for ci, comp in enumerate(self.components):
            for pi, (eid, t) in enumerate(comp.ports):
                if not (F0 < t < F1):
                    raise DegeneratePosition("port parameter out of range")
                self.edge_ports.setdefault(eid, []).append((t, (ci, pi)))
        for eid, plist in self.edge_ports.items():
            plist.sort()
            for k in range(1, len(plist)):
                if plist[k - 1][0] == plist[k][0]:
                    raise DegeneratePosition("coincident ports on edge %r" % (eid,))

        # chords per face with chart endpoints
        self.chords = {}        # (ci, i) -> (face, P1, P2)
        self.face_chords = {}
        for ci, comp in enumerate(self.components):
            n = len(comp)
            for i in range(n):
                e1, t1 = comp.ports[i]
                e2, t2 = comp.ports[(i + 1) % n]
                fid = comp.faces[i]
                p1 = cx.chart_point(fid, e1, t1)
                p2 = cx.chart_point(fid, e2, t2)
                if p1 == p2:
                    raise DegeneratePosition("zero-length chord")
                self.chords[(ci, i)] = (fid, p1, p2)
                self.face_chords.setdefault(fid, []).append((ci, i))

        # crossings
        self.crossings = []     # idx -> dict
        self.chord_events = {ch: [] for ch in self.chords}
        for fid, chlist in self.face_chords.items():
            for a in range(len(chlist)):
                for b in range(a + 1, len(chlist)):
                    ch1, ch2 = chlist[a], chlist[b]
                    _f1, p1, p2 = self.chords[ch1]
                    _f2, p3, p4 = self.chords[ch2]
                    hit = segment_intersection(p1, p2, p3, p4)
                    if hit is None:
                        continue
                    t, u, point = hit
                    idx = len(self.crossings)
                    self.crossings.append({
                        "face": fid, "point": point,
                        "chords": (ch1, ch2), "params": (t, u),
                    })
                    self.chord_events[ch1].append((t, idx))
                    self.chord_events[ch2].append((u, idx))
        for ch, events in self.chord_events.items():
            events.sort()
            for k in range(1, len(events)):
                if events[k - 1][0] == events[k][0]:
                    raise DegeneratePosition("three chords concurrent")
        self._cells_built = False

        # arcs: pieces of chords between events
        # arc id -> dict(chord, seg index, node ids + points at both ends)
        self.arcs = []
        self.chord_arcs = {}
        for ci, comp in enumerate(self.components):
            n = len(comp)
            for i in range(n):
                ch = (ci, i)
                fid, p1, p2 = self.chords[ch]
                stops = ([(F0, ("port", ci, i))]
                         + [(t, ("cross", idx)) for t, idx in self.chord_events[ch]]
                         + [(F1, ("port", ci, (i + 1) % n))])
                ids = []
                for k in range(len(stops) - 1):
                    t1, n1 = stops[k]
                    t2, n2 = stops[k + 1]
                    q1 = (p1[0] + t1 * (p2[0] - p1[0]), p1[1] + t1 * (p2[1] - p1[1]))
                    q2 = (p1[0] + t2 * (p2[0] - p1[0]), p1[1] + t2 * (p2[1] - p1[1]))
                    aid = len(self.arcs)
                    self.arcs.append({"chord": ch, "face": fid,
                                      "n1": n1, "n2": n2, "p1": q1, "p2": q2})
                    ids.append(aid)
                self.chord_arcs[ch] = ids

    # -- per-face planar subdivision ------------------------------------

    def ensure_cells(self):
        if not self._cells_built:
            self._build_cells()
            self._cells_built = True

    def _build_cells(self):
        cx = self.cx
        self.cells = []            # cell idx -> list of directed tokens
        self.cell_of_slot = {}     # (token, dirflag) -> cell idx
        self.interval_slots = {}   # interval id -> [cell idx from each face]

        for fid in cx.faces:
            if self.face_chords.get(fid):
                self._build_face_cells(fid)
            else:
                self._build_untouched_face_cell(fid)

        # glue cells across intervals with union-find
        parent = list(range(len(self.cells)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for ivl, slots in self.interval_slots.items():
            if len(slots) != 2:
                raise AssertionError("interval %r has %d cells" % (ivl, len(slots)))
            union(slots[0], slots[1])

        self.region_of_cell = [find(i) for i in range(len(self.cells))]
        regions = {}
        for ci, root in enumerate(self.region_of_cell):
            regions.setdefault(root, []).append(ci)
        self.region_cells = regions

    def _build_untouched_face_cell(self, fid):
        # a face without chords has no ports on its edges either
        cx = self.cx
        corners = cx.face_corners(fid)
        cycle = []
        for side in range(3):
            eid, _sign = cx.faces[fid][side]
            n1 = ("corner", corners[side])
            n2 = ("corner", corners[(side + 1) % 3])
            cycle.append((n1, n2, ("ivl", eid, 0)))
        idx = len(self.cells)
        self.cells.append({"face": fid, "walk": cycle})
        for (u, v, token) in cycle:
            self.interval_slots.setdefault(token, []).append(idx)
            self.cell_of_slot[(u, v, token)] = idx

    def _build_face_cells(self, fid):
        cx = self.cx
        corners = cx.face_corners(fid)
        nodes = {}
        for i in range(3):
            nodes[("corner", corners[i])] = cx.CORNERS[i]

        small = []  # (n1, n2, token) undirected; token identifies 1-cell globally

        # perimeter: for each side, corner + ports in order
        for side in range(3):
            a = cx.CORNERS[side]
            b = cx.CORNERS[(side + 1) % 3]
            eid, sign = cx.faces[fid][side]
            plist = self.edge_ports.get(eid, [])
            seq = [("corner", corners[side])]
            ks = range(len(plist)) if sign > 0 else range(len(plist) - 1, -1, -1)
            for k in ks:
                t, pid = plist[k]
                nid = ("port",) + pid
                s = t if sign > 0 else 1 - t
                nodes[nid] = (a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1]))
                seq.append(nid)
            seq.append(("corner", corners[(side + 1) % 3]))
            for j in range(len(seq) - 1):
                if sign > 0:
                    ivl = ("ivl", eid, j)
                else:
                    ivl = ("ivl", eid, len(seq) - 2 - j)
                small.append((seq[j], seq[j + 1], ivl))

        # chord arcs
        for ch in self.face_chords.get(fid, []):
            for aid in self.chord_arcs[ch]:
                arc = self.arcs[aid]
                n1, n2 = arc["n1"], arc["n2"]
                if n1[0] == "cross":
                    nid1 = ("cross", n1[1])
                    nodes[nid1] = arc["p1"]
                else:
                    nid1 = n1
                    nodes[nid1] = arc["p1"]
                if n2[0] == "cross":
                    nid2 = ("cross", n2[1])
                    nodes[nid2] = arc["p2"]
                else:
                    nid2 = n2
                    nodes[nid2] = arc["p2"]
                small.append((nid1, nid2, ("arc", aid)))

        # incidence with exact angular order
        incid = {}
        for n1, n2, token in small:
            incid.setdefault(n1, []).append((n2, token))
            incid.setdefault(n2, []).append((n1, token))
        order_at = {}
        for nid, nbrs in incid.items():
            p = nodes[nid]
            items = []
            for other, token in nbrs:
                vec = _sub(nodes[other], p)
                items.append((vec, (other, token)))
            items = _ccw_sorted(items)
            order_at[nid] = [payload for _v, payload in items]

        # trace faces: directed half edge (n1, n2, token); next rule: at n2,
        # find (n1, token) among neighbours, take the previous one cyclically
        # (clockwise), which traces cells counterclockwise (interior left).
        visited = set()
        cells_here = []
        for n1, n2, token in small:
            for (u, v) in ((n1, n2), (n2, n1)):
                if (u, v, token) in visited:
                    continue
                # trace
                cycle = []
                cu, cv, ctok = u, v, token
                area2 = F0
                while (cu, cv, ctok) not in visited:
                    visited.add((cu, cv, ctok))
                    cycle.append((cu, cv, ctok))
                    area2 += _cross(nodes[cu], nodes[cv])
                    lst = order_at[cv]
                    k = lst.index((cu, ctok))
                    nu, ntok = lst[(k - 1) % len(lst)]
                    cu, cv, ctok = cv, nu, ntok
                if area2 <= 0:
                    continue  # outer face of the chart triangle
                cells_here.append(cycle)

        for cycle in cells_here:
            idx = len(self.cells)
            self.cells.append({"face": fid, "walk": cycle})
            for (u, v, token) in cycle:
                if token[0] == "ivl":
                    self.interval_slots.setdefault(token, []).append(idx)
                self.cell_of_slot[(u, v, token)] = idx

    # -- queries ---------------------------------------------------------

    def crossing_pairs(self):
        """List of (comp_i, comp_j, crossing_idx) for all crossings."""
        out = []
        for idx, cr in enumerate(self.crossings):
            (c1, _i1), (c2, _i2) = cr["chords"]
            out.append((c1, c2, idx))
        return out

    def count_between(self, set_a, set_b):
        n = 0
        for c1, c2, _ in self.crossing_pairs():
            if (c1 in set_a and c2 in set_b) or (c1 in set_b and c2 in set_a):
                n += 1
        return n

    def signed_between(self, set_a, set_b):
        """Signed crossings: + when (dir_a, dir_b) is positively oriented."""
        total = 0
        for cr in self.crossings:
            (ch1, ch2) = cr["chords"]
            c1, c2 = ch1[0], ch2[0]
            if c1 in set_a and c2 in set_b:
                first, second = ch1, ch2
            elif c2 in set_a and c1 in set_b:
                first, second = ch2, ch1
            else:
                continue
            _f, p1, p2 = self.chords[first]
            _f, p3, p4 = self.chords[second]
            s = _cross(_sub(p2, p1), _sub(p4, p3))
            total += 1 if s > 0 else -1
        return total

    def regions(self):
        """Complement regions: list of dicts with chi, walks, corner counts."""
        self.ensure_cells()
        out = []
        for root, cell_ids in self.region_cells.items():
            verts = set()
            edges1 = set()
            arcs = set()
            for ci in cell_ids:
                for (u, v, token) in self.cells[ci]["walk"]:
                    verts.add(u)
                    verts.add(v)
                    if token[0] == "ivl":
                        edges1.add(token)
                    else:
                        arcs.add(token)
            chi = len(verts) - (len(edges1) + len(arcs)) + len(cell_ids)
            walks = self._boundary_walks(cell_ids)
            out.append({
                "cells": cell_ids, "chi": chi, "walks": walks,
                "arcs": arcs,
            })
        return out

    def _boundary_walks(self, cell_ids):
        """Boundary walks: cycles of directed arc tokens with corner markers."""
        cellset = set(cell_ids)
        # directed arc slots in these cells
        slots = []
        for ci in cell_ids:
            for (u, v, token) in self.cells[ci]["walk"]:
                if token[0] == "arc":
                    slots.append((u, v, token))
        slotset = set(slots)
        walks = []
        used = set()
        for start in slots:
            if start in used:
                continue
            walk = []
            cur = start
            while cur not in used:
                used.add(cur)
                walk.append(cur)
                # advance within the cell walk, jumping across intervals,
                # until the next arc slot
                ci = self.cell_of_slot[cur]
                cycle = self.cells[ci]["walk"]
                k = cycle.index(cur)
                nxt = cycle[(k + 1) % len(cycle)]
                while nxt[2][0] == "ivl":
                    # jump to the partner cell across this interval
                    token = nxt[2]
                    rev = (nxt[1], nxt[0], token)
                    cj = self.cell_of_slot[rev]
                    cyc2 = self.cells[cj]["walk"]
                    k2 = cyc2.index(rev)
                    nxt = cyc2[(k2 + 1) % len(cyc2)]
                cur = nxt
            walks.append(walk)
        return walks

    def walk_corners(self, walk):
        """Crossing nodes where consecutive arcs of a boundary walk meet."""
        corners = []
        m = len(walk)
        for i in range(m):
            _u, v, _tok = walk[i]
            if v[0] == "cross":
                nxt_u = walk[(i + 1) % m][0]
                if nxt_u == v:
                    corners.append(v[1])
        return corners


# ----------------------------------------------------------------------
# state utilities


def map_component(auto, comp):
    ports = [auto.port(e, t) for e, t in comp.ports]
    faces = [auto.fmap[f] for f in comp.faces]
    return Component(ports, faces)


def map_drawing(auto, drawing):
    return Drawing(drawing.cx, [map_component(auto, c) for c in drawing.components])


def respace_components(comps, jitter=0):
    """Evenly respace ports per edge, preserving order (joint position)."""
    per_edge = {}
    for ci, comp in enumerate(comps):
        for pi, (eid, t) in enumerate(comp.ports):
            per_edge.setdefault(eid, []).append((t, ci, pi))
    for eid, plist in per_edge.items():
        plist.sort()
        m = len(plist)
        for i, (_t, ci, pi) in enumerate(plist):
            base = Fraction(i + 1, m + 1)
            if jitter:
                wob = ((jitter * 31 + i * 17 + ci * 7 + pi * 3) % 89) - 44
                base += Fraction(wob, (m + 1) * 97 * 4)
            comps[ci].ports[pi] = (eid, base)


def tighten_component(cx, comp):
    """Remove immediate same-edge returns; None if the component dies."""
    changed = True
    while changed:
        changed = False
        n = len(comp.ports)
        if n == 0:
            return None
        for i in range(n):
            j = (i + 1) % n
            if comp.ports[i][0] != comp.ports[j][0]:
                continue
            if n == 2:
                return None  # contractible loop hugging the edge
            iprev = (i - 1) % n
            fprev = comp.faces[iprev]
            keep_ports = []
            keep_faces = []
            k = (j + 1) % n
            while True:
                keep_ports.append(comp.ports[k])
                keep_faces.append(comp.faces[k])
                if k == iprev:
                    break
                k = (k + 1) % n
            keep_faces[-1] = fprev
            comp.ports = keep_ports
            comp.faces = keep_faces
            changed = True
            break
    return comp


def tighten_state(cx, comps):
    out = []
    for comp in comps:
        t = tighten_component(cx, comp)
        if t is not None:
            out.append(t)
    return out


def build_arrangement(cx, comps, attempts=10):
    for a in range(attempts):
        try:
            return Arrangement(cx, comps)
        except DegeneratePosition:
            respace_components(comps, jitter=a + 1)
    return Arrangement(cx, comps)  # propagate the error on final failure


# ----------------------------------------------------------------------
# defect removal: monogons and empty bigons


def _walk_sides(arr, walk):
    """Split a boundary walk at its crossing corners into sides.

    Each side is the list of consecutive directed arc slots from one corner
    to the next (walk order).  Returns [] when the walk has no corners.
    """
    m = len(walk)
    corner_pos = [i for i in range(m) if walk[i][1][0] == "cross"
                  and walk[(i + 1) % m][0] == walk[i][1]]
    if not corner_pos:
        return []
    sides = []
    for k in range(len(corner_pos)):
        i1 = corner_pos[k]
        i2 = corner_pos[(k + 1) % len(corner_pos)]
        span = (i2 - i1) % m or m
        sides.append([walk[(i1 + 1 + j) % m] for j in range(span)])
    return sides


def _slot_chord(arr, slot):
    return arr.arcs[slot[2][1]]["chord"]


def _side_component(arr, side):
    owners = set(_slot_chord(arr, slot)[0] for slot in side)
    if len(owners) != 1:
        raise AssertionError("mixed-owner side in boundary walk")
    return owners.pop()


def _slot_forward(arr, slot):
    """True if the walk traverses this arc along its chord direction."""
    arc = arr.arcs[slot[2][1]]
    n1 = arc["n1"]
    nid1 = ("cross", n1[1]) if n1[0] == "cross" else n1
    return slot[0] == nid1


def _slot_dirvec(arr, slot):
    arc = arr.arcs[slot[2][1]]
    v = _sub(arc["p2"], arc["p1"])
    if not _slot_forward(arr, slot):
        v = (-v[0], -v[1])
    return v


def _edge_param_dir(cx, fid, eid):
    """Chart displacement of a port when its edge parameter increases."""
    p0 = cx.chart_point(fid, eid, Fraction(1, 3))
    p1 = cx.chart_point(fid, eid, Fraction(2, 3))
    return _sub(p1, p0)


def _gap_at(comps, eid, t):
    vals = [F0, F1]
    for comp in comps:
        for e2, t2 in comp.ports:
            if e2 == eid and t2 != t:
                vals.append(t2)
    below = max(v for v in vals if v < t)
    above = min(v for v in vals if v > t)
    return min(t - below, above - t) / 2


def _offset_port(cx, comps, fid, eid, t, dirvec, want_left):
    """A port near (eid, t) displaced to one side of the direction dirvec."""
    w = _edge_param_dir(cx, fid, eid)
    leftv = (-dirvec[1], dirvec[0])
    d = w[0] * leftv[0] + w[1] * leftv[1]
    if d == 0:
        raise DegeneratePosition("chord parallel to edge")
    sign = 1 if (d > 0) == want_left else -1
    return (eid, t + sign * _gap_at(comps, eid, t))


def _ref_corridor(cx, arr, comps, side, want_left):
    """Ports and faces of a path parallel to `side`, on the chosen side.

    Returns (ports, faces) in walk order: ports q'_1..q'_r at the side's
    transit ports, faces F_0..F_r of the side's arcs (r+1 of them).
    """
    ref_ci = _side_component(arr, side)
    refcomp = comps[ref_ci]
    ports = []
    faces = [arr.arcs[side[0][2][1]]["face"]]
    for k in range(len(side) - 1):
        slot = side[k]
        arc = arr.arcs[slot[2][1]]
        end = slot[1]
        assert end[0] == "port" and end[1] == ref_ci
        eid, t = refcomp.ports[end[2]]
        dirvec = _slot_dirvec(arr, slot)
        ports.append(_offset_port(cx, comps, arc["face"], eid, t,
                                  dirvec, want_left))
        faces.append(arr.arcs[side[k + 1][2][1]]["face"])
    return ports, faces


def _splice(comp, i_start, i_end, ports, faces_between, face_entry, face_exit):
    """Replace ports strictly between chords i_start and i_end by a new path.

    The kept part runs (component order) ..., ports[i_start], NEW..., then
    ports[i_end + 1], ...; face_entry hosts the chord out of ports[i_start],
    faces_between[k] hosts the chord ports[k] -> ports[k+1] of the new path,
    and face_exit hosts the final chord into ports[i_end + 1].
    """
    n = len(comp.ports)
    cnt = (i_end - i_start) % n
    keep_p = []
    keep_f = []
    k = (i_end + 1) % n
    for _ in range(n - cnt):
        keep_p.append(comp.ports[k])
        keep_f.append(comp.faces[k])
        k = (k + 1) % n
    # keep_p ends with ports[i_start]; its outgoing chord enters the new path
    keep_f[-1] = face_entry
    if ports:
        assert len(faces_between) == len(ports) - 1
        new_f = list(faces_between) + [face_exit]
    else:
        keep_f[-1] = face_entry
        new_f = []
        assert face_entry == face_exit
    comp.ports = keep_p + list(ports)
    comp.faces = keep_f + new_f


def _remove_bigon(cx, comps, arr, walk):
    """Homotope one side of an empty bigon across the other."""
    sides = _walk_sides(arr, walk)
    assert len(sides) == 2
    infos = []
    for side in sides:
        ci = _side_component(arr, side)
        c1 = _slot_chord(arr, side[0])[1]
        c2 = _slot_chord(arr, side[-1])[1]
        fwd = _slot_forward(arr, side[0])
        n = len(comps[ci].ports)
        if fwd:
            i_start, i_end = c1, c2
        else:
            i_start, i_end = c2, c1
        interior = (i_end - i_start) % n
        infos.append({"side": side, "comp": ci, "fwd": fwd,
                      "i_start": i_start, "i_end": i_end, "interior": interior})
    infos.sort(key=lambda d: d["interior"])
    mov, ref = infos[0], infos[1]
    comp = comps[mov["comp"]]
    # corridor parallel to the reference side, on its far side (the bigon
    # lies to the LEFT of the walk direction)
    cports, cfaces = _ref_corridor(cx, arr, comps, ref["side"], want_left=False)
    # walk order of ref runs opposite to mov's walk order around the bigon;
    # express the corridor in mov's component order
    if mov["fwd"]:
        comp_ports = cports[::-1]
        faces_between = cfaces[1:-1][::-1] if len(cfaces) > 2 else []
        face_entry = cfaces[-1]
        face_exit = cfaces[0]
    else:
        comp_ports = cports
        faces_between = cfaces[1:-1] if len(cfaces) > 2 else []
        face_entry = cfaces[0]
        face_exit = cfaces[-1]
    _splice(comp, mov["i_start"], mov["i_end"],
            comp_ports, faces_between, face_entry, face_exit)


def _remove_monogon(cx, comps, arr, walk):
    """Contract the loop of an empty monogon."""
    sides = _walk_sides(arr, walk)
    assert len(sides) == 1
    side = sides[0]
    ci = _side_component(arr, side)
    comp = comps[ci]
    n = len(comp.ports)
    c1 = _slot_chord(arr, side[0])[1]
    c2 = _slot_chord(arr, side[-1])[1]
    fwd = _slot_forward(arr, side[0])
    if fwd:
        i_start, i_end = c1, c2
    else:
        i_start, i_end = c2, c1
    if i_start == i_end:
        raise AssertionError("monogon loop collapsed onto one chord")
    face = arr.chords[(ci, i_start)][0]
    assert arr.chords[(ci, i_end)][0] == face
    _splice(comp, i_start, i_end, [], [], face, face)
    if len(comp.ports) < 2:
        comps[ci] = None


def find_defect(arr):
    """An empty monogon or bigon region, or None.

    Returns ("monogon"|"bigon", walk).
    """
    best = None
    for region in arr.regions():
        if region["chi"] != 1 or len(region["walks"]) != 1:
            continue
        walk = region["walks"][0]
        corners = [slot[1][1] for slot in walk if slot[1][0] == "cross"]
        if len(corners) == 1:
            return ("monogon", walk)
        if len(corners) == 2 and corners[0] != corners[1]:
            best = best or ("bigon", walk)
    return best


def reduce_state(cx, comps, max_rounds=4000):
    """Drive components to minimal position by defect removal.

    Mutates and returns (live components, final arrangement).
    """
    comps = tighten_state(cx, comps)
    rounds = 0
    while True:
        rounds += 1
        if rounds > max_rounds:
            raise RuntimeError("reduction did not terminate")
        arr = build_arrangement(cx, comps)
        if not arr.crossings:
            return comps, arr
        defect = find_defect(arr)
        if defect is None:
            return comps, arr
        kind, walk = defect
        if kind == "monogon":
            _remove_monogon(cx, comps, arr, walk)
        else:
            _remove_bigon(cx, comps, arr, walk)
        comps = tighten_state(cx, [c for c in comps if c is not None])


# ----------------------------------------------------------------------
# drawing-level queries


def drawing_self_reduce(drawing):
    """Minimal-position representative of a drawing (all components jointly)."""
    comps = [c.copy() for c in drawing.components]
    comps, _arr = reduce_state(drawing.cx, comps)
    return Drawing(drawing.cx, comps)


def geometric_intersection_number(d1, d2):
    """Minimal crossing count between two drawings (their classes)."""
    cx = d1.cx
    n1 = len(d1.components)
    comps = ([c.copy() for c in d1.components]
             + [c.copy() for c in d2.components])
    comps, arr = reduce_state(cx, comps)
    # component indices shift as components die; rebuild identity by count:
    # reduction never kills essential components, and drawings fed here are
    # essential, so the split is positional
    idx = {}
    for i, comp in enumerate(comps):
        idx[id(comp)] = i
    # recompute which components originated from d1: reduction preserves
    # list order, only deleting dead ones; count survivors by walking
    # (essential components never die, so first n1 live entries are d1's)
    set_a = set(range(n1))
    set_b = set(range(n1, len(comps)))
    return arr.count_between(set_a, set_b)


def signed_intersection_number(d1, d2):
    """Algebraic intersection of oriented drawings (position independent)."""
    cx = d1.cx
    n1 = len(d1.components)
    comps = ([c.copy() for c in d1.components]
             + [c.copy() for c in d2.components])
    respace_components(comps)
    arr = build_arrangement(cx, comps)
    return arr.signed_between(set(range(n1)), set(range(n1, len(comps))))


def component_is_trivial(cx, comp):
    """True if the closed curve bounds a disk."""
    comps, arr = reduce_state(cx, [comp.copy()])
    if not comps:
        return True
    for region in arr.regions():
        if region["chi"] == 1 and len(region["walks"]) == 1:
            walk = region["walks"][0]
            if not any(slot[1][0] == "cross" for slot in walk):
                return True
    return False


def same_edge_cycle(c1, c2):
    """Same cyclic edge sequence up to rotation and reversal.

    Equal sequences give freely-homotopic curves (port heights never change
    the class), so this is a sound fast path for isotopy of simple curves.
    """
    e1 = [e for e, _t in c1.ports]
    e2 = [e for e, _t in c2.ports]
    if len(e1) != len(e2):
        return False
    dbl = e1 + e1
    for cand in (e2, e2[::-1]):
        for s in range(len(e1)):
            if dbl[s:s + len(e1)] == cand:
                return True
    return False


def curves_isotopic(d1, d2):
    """Unoriented isotopy test for single essential simple closed curves."""
    cx = d1.cx
    assert len(d1.components) == 1 and len(d2.components) == 1
    if same_edge_cycle(d1.components[0], d2.components[0]):
        return True
    comps = [d1.components[0].copy(), d2.components[0].copy()]
    comps, arr = reduce_state(cx, comps)
    if len(comps) != 2:
        raise ValueError("curves_isotopic expects essential curves")
    if arr.crossings:
        return False
    # disjoint: isotopic iff they cobound an annulus
    for region in arr.regions():
        if region["chi"] != 0 or len(region["walks"]) != 2:
            continue
        owners = []
        for walk in region["walks"]:
            ow = set(_slot_chord(arr, slot)[0] for slot in walk)
            if len(ow) != 1:
                ow = {-1}
            owners.append(ow.pop())
        if sorted(owners) == [0, 1]:
            return True
    return False


# ----------------------------------------------------------------------
# Dehn twists

# Global handedness fix: exponent +1 is the right-handed twist, pinned so the
# induced homology map is v -> v + <v, c> c.  Checked by the test-suite.
TWIST_CHIRALITY = -1


def _offset_port_mag(cx, fid, eid, t, dirvec, offset):
    """Port displaced from (eid, t) by |offset|, left of dirvec iff offset>0."""
    w = _edge_param_dir(cx, fid, eid)
    leftv = (-dirvec[1], dirvec[0])
    d = w[0] * leftv[0] + w[1] * leftv[1]
    if d == 0:
        raise DegeneratePosition("chord parallel to edge")
    sign = 1 if (d > 0) == (offset > 0) else -1
    return (eid, t + sign * abs(offset))


def twist_once(cx, gamma_comps, c_comp, sign):
    """One full Dehn twist of the gamma components about the curve c."""
    state = [g.copy() for g in gamma_comps] + [c_comp.copy()]
    state, arr = reduce_state(cx, state)
    nc = len(state) - 1
    c = state[nc]
    m = len(c.ports)

    # crossings of gamma components with c, ranked along c
    events = []
    for idx, cr in enumerate(arr.crossings):
        (c1, i1), (c2, i2) = cr["chords"]
        t1, t2 = cr["params"]
        if c1 == nc and c2 != nc:
            events.append((i1, t1, c2, i2, t2, idx))
        elif c2 == nc and c1 != nc:
            events.append((i2, t2, c1, i1, t1, idx))
    if not events:
        return [state[i] for i in range(nc)]
    events.sort(key=lambda ev: (ev[0], ev[1]))
    rank = {ev[5]: r for r, ev in enumerate(events)}
    K = len(events)

    # per gamma chord: crossings sorted along the chord
    chord_hits = {}
    for cj, cu, gi, gchord, gt, idx in events:
        chord_hits.setdefault((gi, gchord), []).append((gt, cj, cu, idx))
    for lst in chord_hits.values():
        lst.sort()

    # precompute gaps at the c ports (before inserting anything)
    base_gap = [
        _gap_at(state, c.ports[k][0], c.ports[k][1]) for k in range(m)]
    # direction of c's chord k in chart coords
    cdir = {}
    for k in range(m):
        _f, p1, p2 = arr.chords[(nc, k)]
        cdir[k] = _sub(p2, p1)

    def helix(cj, s_in, direction, rk):
        """Helix ports+faces starting after c chord cj, one full turn."""
        ports = []
        faces = []
        scale = Fraction(rk + 1, K + 2)
        wob = Fraction(1, 3 + rk)
        for a in range(1, m + 1):
            if direction > 0:
                k = (cj + a) % m           # port q_k, arrived via c chord k-1
                incoming = (k - 1) % m
                next_face_chord = k
            else:
                k = (cj - a + 1) % m       # port q_k, arrived via c chord k
                incoming = k
                next_face_chord = (k - 1) % m
            eid, t = c.ports[k]
            off = s_in * base_gap[k] * scale * (m + 1 - 2 * a + wob) / (m + 1)
            fid_in = arr.chords[(nc, incoming)][0]
            ports.append(_offset_port_mag(cx, fid_in, eid, t,
                                          cdir[incoming], off))
            if a < m:
                faces.append(arr.chords[(nc, next_face_chord)][0])
        return ports, faces

    out = []
    for gi in range(nc):
        comp = state[gi]
        n = len(comp.ports)
        new_ports = []
        new_faces = []
        for i in range(n):
            new_ports.append(comp.ports[i])
            hits = chord_hits.get((gi, i), [])
            fid = comp.faces[i]
            if not hits:
                new_faces.append(fid)
                continue
            _f, gp1, gp2 = arr.chords[(gi, i)]
            gdir = _sub(gp2, gp1)
            for (gt, cj, cu, idx) in hits:
                cross_sign = 1 if _cross(cdir[cj], gdir) > 0 else -1
                s_in = -cross_sign
                direction = 1 if cross_sign * sign * TWIST_CHIRALITY > 0 else -1
                hp, hf = helix(cj, s_in, direction, rank[idx])
                new_faces.append(fid)       # chord into the helix
                new_ports.extend(hp)
                new_faces.extend(hf)
            new_faces.append(fid)           # chord out of the last helix
        out.append(Component(new_ports, new_faces))
    out = tighten_state(cx, out)
    return out


def twist_drawing(gamma, c, power):
    """Dehn twist about the single-component drawing c, any integer power."""
    cx = gamma.cx
    assert len(c.components) == 1
    comps = [g.copy() for g in gamma.components]
    sign = 1 if power > 0 else -1
    for _ in range(abs(power)):
        comps = twist_once(cx, comps, c.components[0], sign)
    return Drawing(cx, comps)
