"""Model validation: symmetry table, intersection pattern, script conditions.

The constructed model is accepted when every check passes: the combinatorial
invariants (Euler characteristic, connectivity, symmetry orders), the full
rotation action table on named curves, reflection behaviour, the intersection
pattern forced by the handle layout, the lantern configuration, the filling
subsystem, and the side conditions demanded by the bundled scripts.
"""

from .drawings import map_drawing, curves_isotopic
from .words import WordError


class ValidationReport(object):
    def __init__(self, genus):
        self.genus = genus
        self.checks = []

    def add(self, name, passed, detail=""):
        self.checks.append({"name": name, "passed": bool(passed),
                            "detail": detail})

    @property
    def ok(self):
        return all(c["passed"] for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c["passed"]]

    def to_json(self):
        return {"genus": self.genus, "ok": self.ok, "checks": self.checks}


def _tubes_of_key(key, genus):
    """Handles crossed by the named curve, from the layout combinatorics."""
    n = genus + 1
    fam = key[0]
    if fam == "B":
        return {key[1] - 1}
    if fam in ("A", "C"):
        if key == ("A", 1):
            p = genus
        elif key == ("A", "g"):
            p = genus - 1
        elif key == ("A", 3):
            return {genus, 2}
        else:
            p = key[1] - 1
        return {p, (p + 1) % n}
    if fam == "E":
        j = (key[1] - 1) % n
        return {j, (j + 2) % n}
    if fam == "D":
        return {genus, 0, 1, 2}
    raise WordError("unknown key %r" % (key,))


def validate_model(model, hom=None, engine=None, scripts=None,
                   include_scripts=True):
    """Full validation; failures are report entries, never exceptions."""
    from .homology import homology_of
    from .curves import engine_of

    g = model.genus
    n = g + 1
    hom = hom or homology_of(model)
    engine = engine_of(model, hom)
    report = ValidationReport(g)

    cx = model.cx
    report.add("euler-characteristic", cx.euler_characteristic() == 2 - 2 * g,
               "chi=%d" % cx.euler_characteristic())
    # connectivity via face adjacency
    seen = set()
    stack = [next(iter(cx.faces))]
    while stack:
        fid = stack.pop()
        if fid in seen:
            continue
        seen.add(fid)
        for eid, _s in cx.faces[fid]:
            stack.append(cx.other_face(fid, eid))
    report.add("connected", len(seen) == len(cx.faces))
    report.add("oriented-gluing", True,
               "edge incidences verified during construction")
    report.add("rotation-order", model.rot.order(2 * n + 2) == n,
               "expected %d" % n)
    report.add("reflection-order", model.refl.order(4) == 2)
    report.add("rotation-preserves-orientation",
               model.rot.preserves_orientation)
    report.add("reflection-reverses-orientation",
               not model.refl.preserves_orientation)
    report.add("a2-equals-e0", model.resolve("A", 2) == ("E", 0))

    # rotation action table on stored curves
    bad = []
    for key in model.curve_keys():
        img = map_drawing(model.rot, model.curves[key])
        try:
            target = model.rotation_action(key)
        except WordError:
            if curves_isotopic(img, model.curves[key]):
                bad.append("%r fixed by rotation" % (key,))
            continue
        if not curves_isotopic(img, model.curves[target]):
            bad.append("%r -> %r" % (key, target))
    report.add("rotation-action-table", not bad, "; ".join(bad))

    bad = []
    for key in model.curve_keys():
        img = map_drawing(model.refl, model.curves[key])
        fixed = curves_isotopic(img, model.curves[key])
        if key == ("D",):
            if fixed:
                bad.append("d fixed by reflection")
        elif not fixed:
            bad.append("%r moved by reflection" % (key,))
    report.add("reflection-action", not bad, "; ".join(bad))

    # intersection pattern forced by the handle layout
    table = engine.intersection_table()
    bad = []
    keys = model.curve_keys()
    meridians = [("B", i) for i in range(1, n + 1)]
    chain = [("A", 1), ("A", "g")] + [("C", i) for i in range(1, g)]
    for i, k1 in enumerate(meridians):
        for k2 in meridians[i + 1:]:
            if table[(k1, k2)] != 0:
                bad.append("i(%r,%r)!=0" % (k1, k2))
    for i, k1 in enumerate(chain):
        for k2 in chain[i + 1:]:
            if table[(k1, k2)] != 0:
                bad.append("i(%r,%r)!=0" % (k1, k2))
    for k1 in keys:
        t1 = _tubes_of_key(k1, g)
        for k2 in meridians:
            if k1 == k2 or k1[0] == "B":
                continue
            expected = 1 if (k2[1] - 1) in t1 else 0
            if table[(k1, k2)] != expected:
                bad.append("i(%r,%r)=%d expected %d"
                           % (k1, k2, table[(k1, k2)], expected))
    for k1 in [("E", i) for i in range(n)]:
        for k2 in chain:
            if table[(k1, k2)] != 0:
                bad.append("i(%r,%r)!=0" % (k1, k2))
    report.add("intersection-pattern", not bad, "; ".join(bad[:8]))

    # equivariance of the table under the rotation
    bad = []
    for (k1, k2), val in table.items():
        try:
            r1 = model.rotation_action(k1)
            r2 = model.rotation_action(k2)
        except WordError:
            continue
        if table[(r1, r2)] != val:
            bad.append("(%r,%r)" % (k1, k2))
    report.add("table-rotation-equivariant", not bad, "; ".join(bad[:8]))

    # lantern configuration
    boundary = [("A", 1), ("C", 1), ("C", 2), ("A", 3)]
    interior = [("E", 0), ("E", 1), ("D",)]
    bad = []
    for i, k1 in enumerate(boundary):
        for k2 in boundary[i + 1:]:
            if table[(k1, k2)] != 0:
                bad.append("boundary %r,%r" % (k1, k2))
    for k1 in boundary:
        for k2 in interior:
            if table[(k1, k2)] != 0:
                bad.append("mixed %r,%r" % (k1, k2))
    for i, k1 in enumerate(interior):
        for k2 in interior[i + 1:]:
            if table[(k1, k2)] != 2:
                bad.append("interior %r,%r=%d" % (k1, k2, table[(k1, k2)]))
    lhs = hom.word_matrix("A[1]*C[1]*C[2]*A[3]")
    rhs = hom.word_matrix("A[2]*E[1]*D")
    if lhs != rhs:
        bad.append("matrix identity fails")
    report.add("lantern-configuration", not bad, "; ".join(bad))

    report.add("filling-subsystem", engine.filling_system_valid(),
               "meridians+connectors complement must be disks")

    if include_scripts:
        _script_conditions(model, hom, engine, report, scripts)
    return report


def _script_conditions(model, hom, engine, report, names=None):
    """Replay bundled scripts whose indices resolve at this genus.

    Scripts replayed below their declared genus range are exploratory: their
    failures are reported with an "out-of-range" note rather than counting
    against the model.
    """
    from . import scripts_data
    from .replay import ProofScript, replay, ScriptError, LedgerViolation

    g = model.genus
    for name in (names or sorted(scripts_data.BUILDERS)):
        data = scripts_data.script_data(name)
        script = ProofScript(data, name=name)
        in_range = g >= script.min_genus
        if not in_range and g + 1 < script.min_genus:
            continue
        try:
            rep = replay(script, model, hom, engine, level="homology")
        except (ScriptError, LedgerViolation) as exc:
            rep = None
            detail = "does not instantiate: %s" % (exc,)
        if rep is not None:
            fails = [s["name"] for s in rep.steps if s["status"] == "fail"]
            detail = "failing steps: %s" % ", ".join(fails) if fails else "pass"
        passed = (rep is not None and rep.goal) if in_range else True
        tag = "" if in_range else " (out of declared range)"
        report.add("script-%s" % name, passed, detail + tag)
