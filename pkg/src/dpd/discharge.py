"""Exact discharging: initial charges, rules R1-R10 as ledgered transfers.

Elements are ``("vertex", v)``, ``("face", f)`` and ``("edge", (u, v))`` for
middle-edge agents.  Cluster charges are sums over member faces and are
never stored on their own.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from . import scan

ZERO = Fraction(0)
SIXTH, THIRD, HALF = Fraction(1, 6), Fraction(1, 3), Fraction(1, 2)


class HypothesisViolation(ValueError):
    def __init__(self, failed):
        super().__init__(f"hypotheses fail: {', '.join(failed)}")
        self.failed = failed


class AmbiguousRule(UserWarning):
    pass


def V(v):
    return ("vertex", v)


def F(f):
    return ("face", f)


def E(u, v):
    return ("edge", (min(u, v), max(u, v)))


def fmt(x):
    return str(Fraction(x))


def elem_json(el):
    kind, x = el
    return {kind: list(x) if kind == "edge" else x}


def elem_from_json(d):
    ((kind, x),) = d.items()
    return (kind, tuple(x)) if kind == "edge" else (kind, int(x))


@dataclass
class Transfer:
    rule: str
    src: tuple
    dst: tuple
    amount: Fraction
    why: str = ""
    phase: int = 1

    def to_json(self):
        return {
            "rule": self.rule,
            "from": elem_json(self.src),
            "to": elem_json(self.dst),
            "amount": fmt(self.amount),
            "phase": self.phase,
            "why": self.why,
        }

    def key(self):
        return (self.rule, self.src, self.dst, self.amount, self.phase)


@dataclass
class ChargeLedger:
    initial: dict
    transfers: list = field(default_factory=list)
    mu_star: dict = None
    mu_final: dict = None
    notes: list = field(default_factory=list)
    failed_hypotheses: list = field(default_factory=list)
    clusters: list = field(default_factory=list)

    def add(self, rule, src, dst, amount, why="", phase=1):
        self.transfers.append(Transfer(rule, src, dst, Fraction(amount), why, phase))

    def replay(self, upto_phase=2):
        ch = defaultdict(Fraction, self.initial)
        for t in self.transfers:
            if t.phase > upto_phase:
                continue
            ch[t.src] -= t.amount
            ch[t.dst] += t.amount
        return dict(ch)

    def cluster_charge(self, charges, c):
        return sum((charges.get(F(f), ZERO) for f in c.faces), ZERO)

    def to_json(self):
        def dump(ch):
            return [{"element": elem_json(k), "charge": fmt(v)} for k, v in sorted(ch.items(), key=_order)]

        return {
            "initial": dump(self.initial),
            "transfers": [t.to_json() for t in self.transfers],
            "mu_star": dump(self.mu_star or {}),
            "mu_final": dump(self.mu_final or {}),
            "failed_hypotheses": list(self.failed_hypotheses),
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, (str, bytes)):
            data = json.loads(data)

        def load(rows):
            return {elem_from_json(r["element"]): Fraction(r["charge"]) for r in rows}

        led = cls(load(data["initial"]))
        for t in data["transfers"]:
            led.add(t["rule"], elem_from_json(t["from"]), elem_from_json(t["to"]),
                    Fraction(t["amount"]), t.get("why", ""), t.get("phase", 1))
        led.mu_star = load(data.get("mu_star", []))
        led.mu_final = load(data.get("mu_final", []))
        led.notes = list(data.get("notes", []))
        led.failed_hypotheses = list(data.get("failed_hypotheses", []))
        return led


def _order(item):
    kind, x = item[0]
    return (kind, x if kind != "edge" else tuple(x))


# initial charges -------------------------------------------------------------------------


def initial_charges(G, require="outer3", lint=None):
    """``mu(x) = d(x) - 4`` for vertices and bounded faces, ``d(D) + 4`` for D.

    ``require`` picks the lint tier that must pass: ``outer3`` (the rules
    need the outer 3-cycle and classifiable clusters), ``theorem``,
    ``full`` or ``none``.  Failures of the full tier are always recorded.
    """
    report = lint if lint is not None else scan.lint_hypotheses(G, "full")
    failed = scan.failed(report)
    needed = {
        "none": (),
        "outer3": ("outer3", "clusters"),
        "theorem": scan.THEOREM_TIER + ("clusters",),
        "full": scan.FULL_TIER,
    }[require]
    bad = [k for k in needed if k in failed]
    if bad:
        raise HypothesisViolation(bad)
    init = {}
    for v in range(G.n):
        init[V(v)] = Fraction(G.degree(v) - 4)
    for f in G.faces:
        d = f.degree
        init[F(f.id)] = Fraction(d + 4) if f.id == G.outer else Fraction(d - 4)
    for u, v in middle_edges(G):
        init[E(u, v)] = ZERO
    led = ChargeLedger(init, failed_hypotheses=failed)
    assert sum(init.values()) == 0
    return led


def middle_edges(G):
    outer = G.outer_vertices
    D = G.outer
    out = []
    for u, v in G.edges:
        if (u in outer or v in outer) and D not in G.edge_faces(u, v):
            out.append((u, v))
    return out


# rules ----------------------------------------------------------------------------------


def _internal_c4(cl):
    return [c for c in cl if c.kind == "C4" and c.is_internal]


def apply_rules(G, ledger, cl=None):
    """Apply R1-R9, snapshot mu*, then R10 and snapshot mu'."""
    if cl is None:
        cl = scan.clusters(G)
    ledger.clusters = cl
    ledger.transfers = []
    ledger.notes = []
    deg = G.degree
    fdeg = G.face_degree
    internal = G.is_internal
    bounded = G.is_bounded
    D = G.outer
    c4_faces = {}
    c4_verts = defaultdict(list)
    for c in _internal_c4(cl):
        for f in c.faces:
            c4_faces[f] = c
        for x in c.vertices:
            c4_verts[x].append(c)

    for v in range(G.n):
        if not internal(v):
            continue
        d = deg(v)
        fs = G.faces_incident(v)
        if d == 4:
            # R1
            L = len(fs)
            for i in range(L):
                f1, f2, f3, f4 = (fs[(i + j) % L] for j in range(4))
                if fdeg(f1) != 3 and fdeg(f4) != 3 and fdeg(f2) == 3 and fdeg(f3) == 3:
                    why = f"window {[f1, f2, f3, f4]}"
                    ledger.add("R1", V(v), F(f2), SIXTH, why)
                    ledger.add("R1", V(v), F(f3), SIXTH, why)
        elif d == 5:
            # R2: exactly one case per incident 3-face
            for f in fs:
                if fdeg(f) != 3:
                    continue
                if f in c4_faces:
                    amt, case = HALF, "f in an internal C4"
                elif c4_verts.get(v):
                    amt, case = ZERO, "v in an internal C4, f outside it"
                else:
                    amt, case = THIRD, "otherwise"
                ledger.add("R2", V(v), F(f), amt, case)
        else:
            for f in fs:
                if fdeg(f) == 3 and G.is_internal_face(f):
                    ledger.add("R3", V(v), F(f), HALF, f"d(v) = {d}")

    for f in G.faces:
        if f.degree != 3 or f.id == D:
            continue
        for g in G.adjacent_faces(f.id):
            if g == D:
                continue
            m = fdeg(g)
            k = len(G.shared_edges(f.id, g))
            if m == 4 and G.is_internal_face(f.id):
                for _ in range(k):
                    ledger.add("R4", F(g), F(f.id), Fraction(2, 5), "4-face next to internal 3-face")
            if m >= 6:
                for _ in range(k):
                    ledger.add("R5", F(g), F(f.id), Fraction(m - 4, m), f"{m}-face next to 3-face")

    for g in G.faces:
        if g.degree != 4 or g.id == D:
            continue
        for h in G.adjacent_faces(g.id):
            m = fdeg(h)
            if h == D or m < 5:
                continue
            for _ in range(len(G.shared_edges(g.id, h))):
                ledger.add("R6", F(h), F(g.id), Fraction(m - 4, m), f"{m}-face next to 4-face")

    for v in range(G.n):
        if not internal(v) or deg(v) != 4:
            continue
        for u in G.rotations[v]:
            f, g = G.edge_faces(u, v)
            if f != g and fdeg(f) >= 6 and fdeg(g) >= 6:
                for h in (f, g):
                    m = fdeg(h)
                    ledger.add("R7", F(h), V(v), Fraction(m - 4, 2 * m), f"edge {u}{v} between 6+-faces")

    for v in sorted(G.outer_vertices):
        ledger.add("R8", V(v), F(D), ledger.initial[V(v)], "outer vertex")

    for u, v in middle_edges(G):
        ledger.add("R9", F(D), E(u, v), Fraction(1), "D to middle edge")
        f, g = G.edge_faces(u, v)
        ledger.add("R9", E(u, v), F(f), HALF, "middle edge to face")
        ledger.add("R9", E(u, v), F(g), HALF, "middle edge to face")

    ledger.mu_star = ledger.replay(1)
    _apply_r10(G, ledger, cl)
    ledger.mu_final = ledger.replay(2)
    return ledger


def special_c4s(G, cl):
    return [c for c in _internal_c4(cl) if sum(1 for x in c.vertices if G.degree(x) >= 5) >= 3]


def special_c3s(G, cl, mu_star):
    out = []
    for c in cl:
        if c.kind == "C3" and c.is_internal:
            if sum((mu_star[F(f)] for f in c.faces), ZERO) < 0:
                out.append(c)
    return out


def special_vertices(G, cl, mu_star):
    s4 = special_c4s(G, cl)
    s3 = special_c3s(G, cl, mu_star)
    out = []
    for v in range(G.n):
        if G.degree(v) != 5:
            continue
        if any(v in c.vertices for c in s4) and any(v in c.vertices for c in s3):
            out.append(v)
    return out


def _apply_r10(G, ledger, cl):
    mu = ledger.mu_star
    s4 = special_c4s(G, cl)
    s3 = special_c3s(G, cl, mu)
    if not s4 or not s3:
        return
    current = dict(mu)

    def charge(c):
        return sum((current[F(f)] for f in c.faces), ZERO)

    served = Counter()
    for c4 in sorted(s4, key=lambda c: min(c.faces)):
        for v in sorted(c4.vertices):
            if G.degree(v) != 5:
                continue
            mine = [c3 for c3 in s3 if v in c3.vertices]
            if len(mine) > 1:
                ledger.notes.append({"warning": "AmbiguousRule", "vertex": v,
                                     "detail": "5-vertex on several special C3s; one transfer each"})
            for c3 in sorted(mine, key=lambda c: min(c.faces)):
                m3 = sum((mu[F(f)] for f in c3.faces), ZERO)
                if charge(c3) >= 0:
                    ledger.notes.append({"warning": "AmbiguousRule", "vertex": v,
                                         "detail": f"C3 {sorted(c3.faces)} already satisfied; skipped"})
                    continue
                amt = THIRD if m3 < -THIRD else -m3
                src = min(f for f in c4.faces if v in G.faces[f].boundary)
                dst = min(f for f in c3.faces if v in G.faces[f].boundary)
                why = f"special vertex {v}: C4 {sorted(c4.faces)} -> C3 {sorted(c3.faces)}, mu*(C3) = {fmt(m3)}"
                ledger.add("R10", F(src), F(dst), amt, why, phase=2)
                current[F(src)] -= amt
                current[F(dst)] += amt
                served[tuple(sorted(c3.faces))] += 1
    for key, k in served.items():
        if k > 1:
            ledger.notes.append({"warning": "AmbiguousRule", "c3": list(key),
                                 "detail": f"served by {k} special vertices"})


def discharge(G, require="outer3"):
    led = initial_charges(G, require)
    return apply_rules(G, led)


# verification ---------------------------------------------------------------------------


def _trace(ledger, els):
    els = set(els)
    return [t.to_json() for t in ledger.transfers if t.src in els or t.dst in els]


def verify(G, ledger):
    """Integrity checks plus the nonnegativity claims; never raises."""
    report = {"integrity": [], "violations": []}
    integ = report["integrity"]
    total0 = sum(ledger.initial.values(), ZERO)
    if total0 != 0:
        integ.append({"check": "initial sum", "value": fmt(total0)})
    replay1 = ledger.replay(1)
    replay2 = ledger.replay(2)
    seen_r10 = False
    for t in ledger.transfers:
        if t.phase == 2:
            seen_r10 = True
        elif seen_r10:
            integ.append({"check": "phase order", "rule": t.rule})
            break
    for name, stored, got in (("mu_star", ledger.mu_star, replay1), ("mu_final", ledger.mu_final, replay2)):
        if stored is None:
            integ.append({"check": f"{name} missing"})
            continue
        keys = set(stored) | set(got)
        bad = [k for k in keys if stored.get(k, ZERO) != got.get(k, ZERO)]
        if bad:
            integ.append({"check": f"{name} replay", "elements": [elem_json(k) for k in sorted(bad, key=lambda k: _order((k, 0)))][:10]})
    for k, x in replay2.items():
        if k[0] == "edge" and x != 0:
            integ.append({"check": "middle edge keeps charge", "element": elem_json(k), "charge": fmt(x)})
    if sum(replay2.values(), ZERO) != 0:
        integ.append({"check": "conservation", "value": fmt(sum(replay2.values(), ZERO))})
    try:
        fresh = apply_rules(G, ChargeLedger(dict(ledger.initial)), ledger.clusters or None)
        a = Counter(t.key() for t in fresh.transfers)
        b = Counter(t.key() for t in ledger.transfers)
        if a != b:
            missing = list((a - b).elements())
            extra = list((b - a).elements())
            integ.append({"check": "rule audit",
                          "missing": [_key_json(k) for k in missing[:10]],
                          "unexpected": [_key_json(k) for k in extra[:10]]})
    except Exception as exc:  # verification reports, never throws
        integ.append({"check": "rule audit", "error": f"{type(exc).__name__}: {exc}"})

    mu = replay2
    D = G.outer
    vertices = {v: mu[V(v)] for v in range(G.n)}
    faces = {f.id: mu[F(f.id)] for f in G.faces}
    clusters = []
    in_cluster = set()
    for c in ledger.clusters:
        star = ledger.cluster_charge(replay1, c)
        final = ledger.cluster_charge(mu, c)
        special = c in special_c4s(G, ledger.clusters) or (c.kind == "C3" and c.is_internal and star < 0)
        clusters.append({**c.to_json(), "mu_star": fmt(star), "mu_final": fmt(final), "special": special})
        in_cluster |= set(c.faces)
        if final < 0:
            report["violations"].append({"kind": "cluster", "faces": sorted(c.faces), "kind_c": c.kind,
                                         "charge": fmt(final), "trace": _trace(ledger, [F(f) for f in c.faces])})
    for v, x in vertices.items():
        if x < 0:
            report["violations"].append({"kind": "vertex", "vertex": v, "degree": G.degree(v),
                                         "charge": fmt(x), "trace": _trace(ledger, [V(v)])})
    for f, x in faces.items():
        if f == D or f in in_cluster:
            continue
        if x < 0:
            report["violations"].append({"kind": "face", "face": f, "degree": G.face_degree(f),
                                         "charge": fmt(x), "trace": _trace(ledger, [F(f)])})
    if faces[D] != 1:
        report["violations"].append({"kind": "outer", "face": D, "charge": fmt(faces[D]),
                                     "trace": _trace(ledger, [F(D)])})
    report["vertices"] = {str(v): fmt(x) for v, x in vertices.items()}
    report["faces"] = {str(f): fmt(x) for f, x in faces.items()}
    report["clusters"] = clusters
    report["outer"] = {"face": D, "mu_final": fmt(faces[D])}
    report["total"] = fmt(sum(mu.values(), ZERO))
    report["failed_hypotheses"] = list(ledger.failed_hypotheses)
    report["hypotheses_hold"] = not ledger.failed_hypotheses
    report["notes"] = list(ledger.notes)
    ok_integrity = not integ
    claims = not report["violations"]
    report["claims_hold"] = claims
    # the claims are asserted only for inputs meeting every hypothesis
    report["ok"] = ok_integrity and (claims or not report["hypotheses_hold"])
    return report


def _key_json(k):
    rule, src, dst, amt, phase = k
    return {"rule": rule, "from": elem_json(src), "to": elem_json(dst), "amount": fmt(amt), "phase": phase}


# the special C4 bound ------------------------------------------------------------------------


def bound_trace(G, ledger, c4):
    """Charge terms of a special C4 next to the lower bound for the case
    with three special vertices and four 7+-faces around the fans.

    Returns exact receipts by rule, the bound terms and both values.
    """
    els = {F(f) for f in c4.faces}
    rec = defaultdict(list)
    sent = []
    for t in ledger.transfers:
        if t.dst in els and t.src not in els:
            rec[t.rule].append(t.amount)
        if t.src in els and t.dst not in els:
            sent.append(t.amount)
    star = ledger.cluster_charge(ledger.mu_star, c4)
    final = ledger.cluster_charge(ledger.mu_final, c4)
    base = -4 + 4 * THIRD + 6 * HALF + 2 * SIXTH
    terms = [
        ("mu*(C4) lower bound", base),
        ("R10 out, three special vertices", -3 * THIRD),
        ("7+-face excess over a 6-face", 4 * (Fraction(3, 7) - THIRD)),
    ]
    bound = sum((x for _, x in terms), ZERO)
    return {
        "mu": fmt(sum((ledger.initial[e] for e in els), ZERO)),
        "received": {r: [fmt(x) for x in sorted(xs)] for r, xs in sorted(rec.items())},
        "sent_R10": [fmt(x) for x in sent],
        "mu_star": fmt(star),
        "mu_final": fmt(final),
        "terms": [(name, fmt(x)) for name, x in terms],
        "bound": fmt(bound),
        "star_ok": star >= base,
        "final_ok": final >= bound > 0,
    }
