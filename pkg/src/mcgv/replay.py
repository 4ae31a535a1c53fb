"""Script replay: ledger-checked derivations with exact algebraic verification.

A proof script derives elements of a subgroup generated by a small given set.
Every step is machine-checked:

* ``define``     -- compose ledger entries; the claimed twist-word must match
  the composition under free cancellation and disjointness commutations
  (each commutation is a checked i=0 side condition);
* ``power_conjugate`` / ``conjugate_claim`` -- u X u^-1 with exact matrix
  verification, plus per-letter curve-mapping side conditions at mcg level
  (twist exponents flip under orientation-reversing conjugators);
* ``commute``    -- pure reordering backed by i=0 checks;
* ``lantern``    -- invokes the seven-curve relation after verifying its
  matrix identity (and, at mcg level, an identity certificate for it);
* ``order_claim`` -- torsion orders through the order-transfer lemma and
  exact matrix iteration;
* ``conclude_generator`` -- the ledger element equals a target generator.

The goal passes when every listed generator is concluded (plus one
orientation-reversing element for extended-group scripts).
"""

import json
import re

from .words import MappingWord, Letter, IndexExpr, WordError
from .homology import element_order, lemma_order_transfer


class ScriptError(ValueError):
    """Structurally invalid script."""


class LedgerViolation(ValueError):
    """A step referenced a name that has not been derived."""


_REF_RE = re.compile(r"^(?P<name>[A-Za-z][A-Za-z0-9_]*)(?:\^(?P<exp>\(?[-0-9a-z+*/ ()]+\)?))?$")


def _eval_expr(text, genus):
    """Evaluate a small arithmetic expression in g (integers only)."""
    inner = text.strip()
    if not set(inner) <= set("0123456789+-*/(), gcd"):
        raise ScriptError("bad expression %r" % (text,))
    import math
    namespace = {"g": genus, "gcd": math.gcd, "__builtins__": {}}
    cleaned = inner.replace("/", "//")
    try:
        val = eval(cleaned, namespace)  # arithmetic over a tiny whitelist
    except Exception as exc:
        raise ScriptError("cannot evaluate %r: %s" % (text, exc))
    return int(val)


class ProofScript(object):
    """Parsed script: given words, steps, goal templates."""

    KINDS = ("given", "define", "conjugate_claim", "power_conjugate",
             "commute", "lantern", "conclude_generator", "order_claim")

    def __init__(self, data, name="script"):
        self.name = name
        try:
            self.ambient = data["ambient"]
            self.min_genus = int(data["min_genus"])
            self.given = list(data["given"])
            self.steps = list(data["steps"])
            self.goal = list(data["goal"])
        except KeyError as exc:
            raise ScriptError("missing field %s" % (exc,))
        if self.ambient not in ("mod", "mod*"):
            raise ScriptError("ambient must be 'mod' or 'mod*'")
        for step in self.steps:
            if step.get("kind") not in self.KINDS:
                raise ScriptError("unknown step kind %r" % (step.get("kind"),))
            for field in ("name", "kind", "operands"):
                if field not in step:
                    raise ScriptError("step missing %r" % (field,))

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            data = json.load(fh)
        return cls(data, name=str(path))

    @classmethod
    def loads(cls, text, name="script"):
        return cls(json.loads(text), name=name)

    def expanded_steps(self, genus):
        """Steps with index ranges instantiated for the genus."""
        out = []
        for step in self.steps:
            rng = step.get("range")
            if not rng:
                out.append(dict(step))
                continue
            var = rng["var"]
            lo = _eval_expr(str(rng["from"]), genus)
            hi = _eval_expr(str(rng["to"]), genus)
            stride = int(rng.get("step", 1))
            for val in range(lo, hi + 1, stride):
                inst = {
                    "name": "%s_%d" % (step["name"], val),
                    "kind": step["kind"],
                    "operands": [_subst_var(o, var, val)
                                 for o in step["operands"]],
                    "claimed": _subst_var(step.get("claimed"), var, val),
                }
                out.append(inst)
        return out

    def goal_names(self, genus):
        out = []
        for entry in self.goal:
            m = re.match(r"^([ABCE])\[(\d+|g[+-]?\d*)\.\.(\d+|g[+-]?\d*)\]$",
                         entry)
            if m:
                fam = m.group(1)
                lo = _eval_expr(m.group(2), genus)
                hi = _eval_expr(m.group(3), genus)
                for i in range(lo, hi + 1):
                    out.append("%s[%d]" % (fam, i))
            else:
                out.append(entry)
        return out


def _subst_var(text, var, val):
    if text is None:
        return None
    # "@i" marks instance-name references; bare occurrences of the variable
    # appear only inside index arithmetic, which is folded to integers
    out = text.replace("@" + var, str(val))
    out = re.sub(r"\b%s\b" % var, str(val), out)

    def fold(match):
        return "[%d]" % _eval_expr(match.group(1), 0)

    out = re.sub(r"\[([0-9+\-*/ ()]+)\]", fold, out)

    def foldexp(match):
        return "^%d" % _eval_expr(match.group(1), 0)

    out = re.sub(r"\^\(([0-9+\-*/ ()]+)\)", foldexp, out)
    return out


# ----------------------------------------------------------------------
# word-level reduction over the twist alphabet (free cancellation plus
# commutation of disjoint twists; symmetry letters commute with nothing)


def letters_of(word, genus):
    """(key-or-symbol, exponent-unit) letters of a twist word."""
    out = []
    for kind, index, step in word.atoms():
        if kind in ("S", "R", "T"):
            out.append((kind, step))
        else:
            idx = index.resolve(genus) if index is not None else None
            out.append((("letter", kind, idx), step))
    return out


class WordChecker(object):
    """Equality of twist words modulo cancellation and disjoint swaps."""

    def __init__(self, model, engine):
        self.model = model
        self.engine = engine
        self.used_pairs = set()

    def _commutes(self, l1, l2):
        if l1[0] == "letter" and l2[0] == "letter":
            k1 = self.model.resolve(l1[1], l1[2])
            k2 = self.model.resolve(l2[1], l2[2])
            if k1 == k2:
                return True
            if self.engine.geometric_intersection(k1, k2) == 0:
                self.used_pairs.add(tuple(sorted((k1, k2), key=repr)))
                return True
        return False

    def _cancel(self, letters):
        changed = True
        while changed:
            changed = False
            for i in range(len(letters)):
                base, exp = letters[i]
                # look ahead for an inverse that commutes past everything
                for j in range(i + 1, len(letters)):
                    base2, exp2 = letters[j]
                    if base2 == base and exp2 == -exp:
                        if all(self._commutes(base, letters[k][0])
                               for k in range(i + 1, j)):
                            del letters[j]
                            del letters[i]
                            changed = True
                        break
                    if not self._commutes(base, base2):
                        break
                if changed:
                    break
        return letters

    def reaches(self, src_word, dst_word, genus):
        """True if src equals dst using cancellations and i=0 swaps only."""
        src = self._cancel(letters_of(src_word, genus))
        dst = self._cancel(letters_of(dst_word, genus))
        while dst:
            target = dst[0]
            hit = None
            for i, cand in enumerate(src):
                if cand == target:
                    if all(self._commutes(cand[0], src[k][0])
                           for k in range(i)):
                        hit = i
                    break
                if cand[0] == target[0]:
                    break
            if hit is None:
                return False
            src.pop(hit)
            dst.pop(0)
        return not src


# ----------------------------------------------------------------------
# replay


class LedgerEntry(object):
    def __init__(self, name, provenance, claimed, matrix):
        self.name = name
        self.provenance = provenance     # MappingWord over given handles
        self.claimed = claimed           # MappingWord over twist letters
        self.matrix = matrix


class ReplayReport(object):
    def __init__(self, script, genus, level):
        self.script = script
        self.genus = genus
        self.level = level
        self.steps = []
        self.goal = False
        self.goal_missing = []
        self.certificates = []
        self.ledger = None

    @property
    def ok(self):
        return self.goal and all(s["status"] in ("pass", "repaired")
                                 for s in self.steps)

    def to_json(self):
        return {
            "script": self.script,
            "genus": self.genus,
            "level": self.level,
            "steps": self.steps,
            "goal": self.goal,
            "goal_missing": self.goal_missing,
            "certificates": self.certificates,
        }


def _given_handle(i):
    return "G%d" % (i + 1)


class Replayer(object):
    def __init__(self, script, model, hom, engine, level="homology",
                 repair=False, order_bound=None):
        self.script = script
        self.model = model
        self.hom = hom
        self.engine = engine
        self.level = level
        self.repair = repair
        self.order_bound = order_bound
        self.ledger = {}
        self.checker = WordChecker(model, engine) if engine else None
        self.report = ReplayReport(script.name, model.genus, level)
        self._lantern_certified = False

    # -- ledger helpers ---------------------------------------------------

    def _resolve_product(self, refs):
        """Product of ledger refs 'NAME' or 'NAME^k'; returns components."""
        prov = _HandleWord(())
        claimed = MappingWord()
        M = None
        for ref in refs:
            m = _REF_RE.match(ref.strip())
            if not m:
                raise ScriptError("bad operand %r" % (ref,))
            name = m.group("name")
            exp = _eval_expr(m.group("exp"), self.model.genus) \
                if m.group("exp") else 1
            if name not in self.ledger:
                raise LedgerViolation("operand %r not in ledger" % (name,))
            entry = self.ledger[name]
            prov = prov * (self._handle_word(name) ** exp)
            claimed = claimed * (entry.claimed ** exp)
            Mk = entry.matrix if exp >= 0 else entry.matrix.inverse()
            for _ in range(abs(exp)):
                M = Mk if M is None else M * Mk
        if M is None:
            M = self.hom.word_matrix(MappingWord())
        return prov, claimed, M

    def _handle_word(self, name):
        return self.ledger[name].provenance

    def _add(self, name, provenance, claimed, matrix):
        if name in self.ledger:
            raise ScriptError("duplicate ledger name %r" % (name,))
        self.ledger[name] = LedgerEntry(name, provenance, claimed, matrix)

    def _record(self, step, status, side=None, message=""):
        self.report.steps.append({
            "name": step.get("name", "?"), "kind": step.get("kind", "?"),
            "status": status, "level": self.level,
            "side_conditions": side or [], "message": message,
        })
        return status == "pass"

    # -- main -------------------------------------------------------------

    def run(self):
        genus = self.model.genus
        for i, text in enumerate(self.script.given):
            word = MappingWord.parse(text)
            handle = _given_handle(i)
            self.ledger[handle] = LedgerEntry(
                handle, _HandleWord([(handle, 1)]), word,
                self.hom.word_matrix(word))
        ok_all = True
        for step in self.script.expanded_steps(genus):
            try:
                ok = self._run_step(step)
            except (LedgerViolation, ScriptError, WordError) as exc:
                ok = self._record(step, "fail", message=str(exc))
            ok_all = ok_all and ok
        # goal
        concluded = {s.get("concluded") for s in self.report.steps
                     if s.get("concluded")}
        missing = []
        for gname in self.script.goal_names(genus):
            if gname == "orientation-reversing":
                if not any(e.matrix.multiplier == -1
                           for e in self.ledger.values()):
                    missing.append(gname)
            elif gname not in concluded:
                missing.append(gname)
        self.report.goal = ok_all and not missing
        self.report.goal_missing = missing
        self.report.ledger = self.ledger
        return self.report

    # -- step kinds ---------------------------------------------------------

    def _run_step(self, step):
        kind = step["kind"]
        handler = getattr(self, "_step_" + kind)
        return handler(step)

    def _claimed_word(self, step):
        text = step.get("claimed")
        return MappingWord.parse(text) if text else None

    def _step_define(self, step):
        prov, claimed_comp, M = self._resolve_product(step["operands"])
        claimed = self._claimed_word(step)
        side = []
        if claimed is None:
            claimed = claimed_comp
        else:
            M_claimed = self.hom.word_matrix(claimed)
            if M_claimed != M:
                return self._fail_or_repair(step, M, prov, claimed_comp)
            if self.level == "mcg":
                checker = self.checker
                before = set(checker.used_pairs)
                if not checker.reaches(claimed_comp, claimed,
                                       self.model.genus):
                    return self._record(
                        step, "fail",
                        message="claimed word not reachable by "
                                "cancellation and disjoint commutation")
                side = [_pair_name(p) for p in checker.used_pairs - before]
        self._add(step["name"], prov, claimed, M)
        return self._record(step, "pass", side=side)

    def _step_commute(self, step):
        prov, claimed_comp, M = self._resolve_product(step["operands"])
        claimed = self._claimed_word(step)
        if claimed is None:
            raise ScriptError("commute step needs a claimed word")
        if self.hom.word_matrix(claimed) != M:
            return self._record(step, "fail", message="matrix mismatch")
        side = []
        checker = self.checker
        if checker is not None:
            before = set(checker.used_pairs)
            if not checker.reaches(claimed_comp, claimed, self.model.genus):
                return self._record(step, "fail",
                                    message="not a disjoint reordering")
            side = [_pair_name(p) for p in checker.used_pairs - before]
        self._add(step["name"], prov, claimed, M)
        return self._record(step, "pass", side=side)

    def _step_power_conjugate(self, step):
        return self._conjugate(step)

    def _step_conjugate_claim(self, step):
        return self._conjugate(step)

    def _conjugate(self, step):
        u_ref, x_ref = step["operands"][0], step["operands"][1]
        uprov, uclaim, Mu = self._resolve_product([u_ref])
        xprov, xclaim, Mx = self._resolve_product([x_ref])
        claimed = self._claimed_word(step)
        if claimed is None:
            raise ScriptError("conjugation needs a claimed word")
        M = Mu * Mx * Mu.inverse()
        M_claimed = self.hom.word_matrix(claimed)
        side = []
        if M != M_claimed:
            return self._fail_or_repair(step, M,
                                        uprov * xprov * uprov ** -1, claimed)
        if self.level == "mcg":
            eps = Mu.multiplier
            xl = letters_of(xclaim, self.model.genus)
            cl = letters_of(claimed, self.model.genus)
            if len(xl) != len(cl):
                return self._record(step, "fail",
                                    message="support tuples differ in length")
            uword = uclaim
            for (lx, ex), (lc, ec) in zip(xl, cl):
                if lx[0] != "letter" or lc[0] != "letter":
                    return self._record(step, "fail",
                                        message="symbol inside support tuple")
                if ec != ex * eps:
                    return self._record(
                        step, "fail",
                        message="twist exponent does not account for "
                                "the conjugator orientation")
                src = self.model.resolve(lx[1], lx[2])
                dst = self.model.resolve(lc[1], lc[2])
                img = self.engine.apply_word(uword, self.engine.curve(src))
                if not self.engine.isotopic_to_key(img, dst):
                    return self._record(
                        step, "fail", side=side,
                        message="curve mapping %s -> %s fails"
                                % (_key_str(src), _key_str(dst)))
                side.append("%s->%s" % (_key_str(src), _key_str(dst)))
        prov = uprov * xprov * (uprov ** -1)
        self._add(step["name"], prov, claimed, M)
        return self._record(step, "pass", side=side)

    def _step_lantern(self, step):
        genus = self.model.genus
        rel_lhs = MappingWord.parse("A[1]*C[1]*C[2]*A[3]")
        rel_rhs = MappingWord.parse("A[2]*E[1]*D")
        if self.hom.word_matrix(rel_lhs) != self.hom.word_matrix(rel_rhs):
            return self._record(step, "fail",
                                message="lantern matrix identity fails")
        side = ["lantern-relation"]
        if self.level == "mcg" and not self._lantern_certified:
            word = rel_lhs * rel_rhs.inverse()
            cert = self.engine.certify_identity(word, hom=self.hom)
            if not cert.ok:
                return self._record(step, "fail",
                                    message="lantern certificate failed")
            self._lantern_certified = True
            side.append("lantern-certified")
        prov, claimed_comp, M = self._resolve_product(step["operands"])
        claimed = self._claimed_word(step)
        if self.hom.word_matrix(claimed) != M:
            return self._record(step, "fail", message="matrix mismatch")
        self._add(step["name"], prov, claimed, M)
        return self._record(step, "pass", side=side)

    def _step_order_claim(self, step):
        genus = self.model.genus
        refs = []
        params = {}
        for op in step["operands"]:
            if "=" in op:
                k, v = op.split("=", 1)
                params[k] = v
            else:
                refs.append(op)
        if "order" not in params:
            raise ScriptError("order_claim needs order=<expr>")
        expected = _eval_expr(params["order"], genus)
        if refs:
            prov, claimed, M = self._resolve_product(refs)
            target_word = claimed
        else:
            target_word = MappingWord.parse(params["word"])
            M = self.hom.word_matrix(target_word)
        side = []
        if "r" in params:
            hyp, k = lemma_order_transfer(self.hom, params["r"], params["x"],
                                          params["y"], self.order_bound)
            if not hyp:
                return self._record(step, "fail",
                                    message="order-transfer hypothesis fails")
            side.append("order-transfer")
            rxy = (MappingWord.parse(params["r"])
                   * MappingWord.parse(params["x"])
                   * MappingWord.parse(params["y"]).inverse())
            if self.hom.word_matrix(rxy) != M:
                return self._record(
                    step, "fail",
                    message="element is not of the transfer shape")
            if k != expected:
                return self._record(step, "fail",
                                    message="transfer gives order %r, "
                                            "claimed %d" % (k, expected))
        k2 = element_order(M, self.order_bound)
        if k2 != expected:
            return self._record(step, "fail",
                                message="computed order %r != %d"
                                        % (k2, expected))
        if self.level == "mcg" and params.get("certify") == "1":
            word_pow = target_word ** expected
            cert = self.engine.certify_identity(word_pow, hom=self.hom)
            if not cert.ok:
                return self._record(step, "fail",
                                    message="power is not the identity "
                                            "mapping class")
            side.append("identity-certificate")
        self.report.certificates.append({
            "name": step["name"], "word": str(target_word), "order": expected})
        return self._record(step, "pass", side=side)

    def _step_conclude_generator(self, step):
        prov, claimed, M = self._resolve_product(step["operands"])
        target = self._claimed_word(step)
        if target is None or len(target.letters) != 1:
            raise ScriptError("conclude_generator needs one target letter")
        letter = target.letters[0]
        key = self.model.resolve(letter.kind,
                                 letter.index.resolve(self.model.genus)
                                 if letter.index else None)
        M_target = self.hom.twist_matrix(key, letter.power)
        if M != M_target:
            return self._record(step, "fail",
                                message="matrix differs from the generator")
        if self.level == "mcg":
            if not self.checker.reaches(claimed, target, self.model.genus):
                return self._record(step, "fail",
                                    message="claimed word is not literally "
                                            "the generator")
        name = step["name"]
        self._add(name, prov, target, M)
        self.report.steps.append({
            "name": name, "kind": "conclude_generator", "status": "pass",
            "level": self.level, "side_conditions": [],
            "message": "", "concluded": str(target),
        })
        return True

    def _step_given(self, step):
        raise ScriptError("given entries belong in the header")

    def _fail_or_repair(self, step, M_true, prov, claimed_comp):
        claimed = self._claimed_word(step)
        if self.repair and claimed is not None:
            cands = repair_candidates(self.hom, claimed, M_true)
            if cands:
                best = cands[0]
                self._add(step["name"], prov, best, M_true)
                self.report.steps.append({
                    "name": step["name"], "kind": step["kind"],
                    "status": "repaired", "level": self.level,
                    "side_conditions": [],
                    "message": "sign repair: %s" % (best,),
                })
                return True
        return self._record(step, "fail", message="identity mismatch")


class _HandleWord(MappingWord):
    """Word over opaque given-handles, tracked for certificate export."""

    def __init__(self, pairs):
        self.pairs = tuple(pairs)   # (handle, exponent)
        MappingWord.__init__(self, [])

    def __mul__(self, other):
        if isinstance(other, _HandleWord):
            return _HandleWord(_reduce_pairs(self.pairs + other.pairs))
        raise TypeError("cannot mix handle words with letter words")

    def inverse(self):
        return _HandleWord(tuple((h, -e) for h, e in reversed(self.pairs)))

    def __pow__(self, n):
        if n == 0:
            return _HandleWord(())
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def __str__(self):
        if not self.pairs:
            return "1"
        bits = []
        for h, e in self.pairs:
            bits.append(h if e == 1 else "%s^%d" % (h, e))
        return "*".join(bits)

    def substitute(self, given_words):
        word = MappingWord()
        for h, e in self.pairs:
            word = word * (given_words[h] ** e)
        return word


def _reduce_pairs(pairs):
    out = []
    for h, e in pairs:
        if e == 0:
            continue
        if out and out[-1][0] == h:
            tot = out[-1][1] + e
            out.pop()
            if tot:
                out.append((h, tot))
        else:
            out.append((h, e))
    return tuple(out)


def _key_str(key):
    return "_".join(str(x) for x in key)


def _pair_name(pair):
    return tuple(_key_str(k) for k in pair)


def repair_candidates(hom, claimed, target_matrix, budget=1 << 16):
    """Sign assignments of the claimed word matching the target matrix."""
    letters = list(claimed.letters)
    twists = [i for i, l in enumerate(letters) if l.is_twist]
    if 2 ** len(twists) > budget:
        raise ValueError("budget-exceeded")
    out = []
    for mask in range(2 ** len(twists)):
        cand = list(letters)
        dist = 0
        for bit, i in enumerate(twists):
            if mask >> bit & 1:
                cand[i] = cand[i].inverse()
                dist += 1
        word = MappingWord(cand)
        if hom.word_matrix(word) == target_matrix:
            out.append((dist, word))
    out.sort(key=lambda t: (t[0], str(t[1])))
    return [w for _d, w in out]


def repair_step(hom, claimed_word, target_matrix, budget=1 << 16):
    """Public wrapper: sign-variant candidates for a failed identity."""
    if isinstance(claimed_word, str):
        claimed_word = MappingWord.parse(claimed_word)
    return repair_candidates(hom, claimed_word, target_matrix, budget)


def replay(script, model, hom, engine, level="homology", repair=False,
           order_bound=None):
    return Replayer(script, model, hom, engine, level=level, repair=repair,
                    order_bound=order_bound).run()


def export_certificate(report, script, model, hom):
    """Self-contained generation certificate from a passing replay."""
    if not report.goal:
        raise ValueError("goal-not-met")
    given_words = {}
    for i, text in enumerate(script.given):
        given_words[_given_handle(i)] = MappingWord.parse(text)
    generators = []
    seen = set()
    for stepinfo in report.steps:
        gname = stepinfo.get("concluded")
        if not gname or gname in seen:
            continue
        seen.add(gname)
        entry = report.ledger[stepinfo["name"]]
        word = entry.provenance.substitute(given_words)
        M = hom.word_matrix(word)
        letter = MappingWord.parse(gname).letters[0]
        key = model.resolve(letter.kind,
                            letter.index.resolve(model.genus)
                            if letter.index else None)
        if M != hom.twist_matrix(key, letter.power):
            raise AssertionError("certificate re-evaluation failed for %s"
                                 % (gname,))
        generators.append({
            "generator": gname,
            "word_in_given": str(entry.provenance),
            "word": str(word),
        })
    return {
        "script": report.script,
        "genus": report.genus,
        "given": list(script.given),
        "generators": generators,
        "orders": report.certificates,
    }
