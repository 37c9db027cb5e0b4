"""Elements of a graph product of cyclic groups as syllable words.

A group is described by a graph together with a per-vertex order (an integer
>= 2, or None for infinite).  Words are sequences of syllables (vertex,
exponent).  `normalize` returns the canonical representative: the ShortLex
least word among the shuffle-equivalent reduced words, under the spec's
stored vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .graphs import SimpleGraph

INF = None  # vertex-group order marker for the infinite cyclic group


@dataclass(frozen=True)
class GroupSpec:
    """A graph plus a cyclic-group order for each vertex."""

    graph: SimpleGraph
    orders: tuple

    def __init__(self, graph, orders):
        if isinstance(orders, int) or orders is INF:
            orders = {v: orders for v in graph.vertices}
        items = []
        for v in graph.vertices:
            if v not in orders:
                raise ValueError("vertex %r has no order" % (v,))
            m = orders[v]
            if m is not INF and m < 2:
                raise ValueError("order of %r must be >= 2 or infinite" % (v,))
            items.append((v, m))
        if set(orders) - set(graph.vertices):
            raise ValueError("order given for unknown vertex")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "orders", tuple(items))

    @cached_property
    def order(self):
        return dict(self.orders)

    @cached_property
    def finite_part(self):
        return tuple(v for v, m in self.orders if m is not INF)

    def reduce_exp(self, v, e):
        m = self.order[v]
        return e % m if m is not INF else e


@dataclass(frozen=True)
class Word:
    """A word over a GroupSpec; `canonical` marks a normalized value."""

    spec: GroupSpec
    syllables: tuple
    canonical: bool = False

    def __init__(self, spec, syllables, canonical=False):
        syls = []
        for v, e in syllables:
            if v not in spec.order:
                raise ValueError("unknown vertex %r" % (v,))
            e = spec.reduce_exp(v, e)
            if e == 0:
                raise ValueError("zero syllable at %r" % (v,))
            syls.append((v, e))
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "syllables", tuple(syls))
        object.__setattr__(self, "canonical", canonical)

    def __len__(self):
        return len(self.syllables)

    def __str__(self):
        return format_word(self)


def identity(spec):
    return Word(spec, (), canonical=True)


def _push(spec, nf, v, e):
    """Append one syllable to a reduced syllable list, keeping it reduced.

    The new syllable walks left past commuting syllables; meeting its own
    vertex it merges, and a merge to zero re-pushes the displaced tail.
    """
    e = spec.reduce_exp(v, e)
    if e == 0:
        return nf
    adj = spec.graph.adj
    i = len(nf) - 1
    while i >= 0:
        u, f = nf[i]
        if u == v:
            merged = spec.reduce_exp(v, f + e)
            if merged == 0:
                out = nf[:i]
                for (tv, te) in nf[i + 1:]:
                    out = _push(spec, out, tv, te)
                return out
            return nf[:i] + [(v, merged)] + nf[i + 1:]
        if v in adj[u]:
            i -= 1
            continue
        break
    return nf + [(v, e)]


def _syl_key(spec, syl):
    v, e = syl
    return (spec.graph.index[v], e < 0, abs(e))


def _shortlex(spec, syls):
    """ShortLex-least shuffle of a reduced syllable list (greedy front pick)."""
    adj = spec.graph.adj
    remaining = list(syls)
    out = []
    while remaining:
        best = None
        for i, (v, e) in enumerate(remaining):
            if all(v in adj[u] for u, _ in remaining[:i]):
                if best is None or _syl_key(spec, (v, e)) < _syl_key(spec, remaining[best]):
                    best = i
        out.append(remaining.pop(best))
    return out


def normalize(w):
    """Canonical normal form of w; idempotent."""
    if w.canonical:
        return w
    nf = []
    for v, e in w.syllables:
        nf = _push(w.spec, nf, v, e)
    return Word(w.spec, _shortlex(w.spec, nf), canonical=True)


def _require_same_spec(u, v):
    if u.spec is not v.spec and u.spec != v.spec:
        raise ValueError("words live over different group specs")


def multiply(u, v):
    _require_same_spec(u, v)
    nf = list(normalize(u).syllables)
    for sv, se in v.syllables:
        nf = _push(u.spec, nf, sv, se)
    return Word(u.spec, _shortlex(u.spec, nf), canonical=True)


def invert(u):
    syls = [(v, -e) for v, e in reversed(u.syllables)]
    return normalize(Word(u.spec, syls))


def equal(u, v):
    _require_same_spec(u, v)
    return normalize(u).syllables == normalize(v).syllables


def project(w, v):
    """Total v-exponent of w, reduced modulo the order of v."""
    if v not in w.spec.order:
        raise ValueError("unknown vertex %r" % (v,))
    total = sum(e for u, e in w.syllables if u == v)
    return w.spec.reduce_exp(v, total)


def in_kernel_kp0(w):
    """Member of the kernel of the surjection onto the full direct product."""
    return all(project(w, v) == 0 for v in w.spec.graph.vertices)


def in_kernel_kpf(w):
    """Member of the kernel of the projections to the finite-order vertices."""
    return all(project(w, v) == 0 for v in w.spec.finite_part)


def cyclically_reduce(w):
    """Return (w_reduced, c) with w = c * w_reduced * c^-1, w_reduced of
    minimal length among conjugates reachable by stripping end syllables."""
    spec = w.spec
    adj = spec.graph.adj
    cur = normalize(w)
    conj = identity(spec)
    while True:
        syls = cur.syllables
        n = len(syls)
        improved = None
        for i, (v, e) in enumerate(syls):
            front_ok = all(v in adj[u] for u, _ in syls[:i])
            back_ok = all(v in adj[u] for u, _ in syls[i + 1:])
            if not (front_ok or back_ok):
                continue
            s = Word(spec, ((v, e),))
            if front_ok:
                cand = multiply(multiply(invert(s), cur), s)
                if len(cand) < n:
                    improved = (cand, s)
                    break
            if back_ok:
                cand = multiply(multiply(s, cur), invert(s))
                if len(cand) < n:
                    improved = (cand, invert(s))
                    break
        if improved is None:
            return cur, conj
        cur, s = improved
        conj = multiply(conj, s)


def generator_syllables(spec, exp_bound=1):
    """All single syllables with bounded exponents; the enumeration alphabet.

    Finite-order vertices contribute every nonzero exponent; infinite-order
    vertices contribute exponents in [-exp_bound, exp_bound] minus zero.
    """
    out = []
    for v, m in spec.orders:
        if m is INF:
            exps = [e for e in range(-exp_bound, exp_bound + 1) if e != 0]
        else:
            exps = list(range(1, m))
        out.extend((v, e) for e in exps)
    return out


def enumerate_elements(spec, max_len, exp_bound=1, cap=None):
    """Distinct group elements with canonical length <= max_len, each once.

    For infinite-order vertices only syllable exponents within exp_bound are
    reached.  Yields canonical words, sorted by length then ShortLex.  With a
    cap, enumeration aborts as soon as more elements than the cap are found.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    gens = generator_syllables(spec, exp_bound)
    seen = {(): identity(spec)}
    frontier = [identity(spec)]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for v, e in gens:
                prod = multiply(w, Word(spec, ((v, e),)))
                if prod.syllables not in seen:
                    seen[prod.syllables] = prod
                    nxt.append(prod)
                    if cap is not None and len(seen) > cap:
                        raise ValueError("ball exceeds the cap of %d elements"
                                         % (cap,))
        frontier = [w for w in nxt if len(w) <= max_len]
    words = [w for w in seen.values() if len(w) <= max_len]
    words.sort(key=lambda w: (len(w), [_syl_key(spec, s) for s in w.syllables]))
    return words


# -- text formats ----------------------------------------------------------

def format_word(w):
    if not w.syllables:
        return "1"
    parts = []
    for v, e in w.syllables:
        parts.append(str(v) if e == 1 else "%s^%d" % (v, e))
    return " ".join(parts)


def parse_word(spec, text):
    """Parse whitespace-separated syllables `v` or `v^e`; empty text or `1`
    is the identity."""
    text = text.strip()
    if not text or text == "1":
        return identity(spec)
    syls = []
    for tok in text.split():
        if "^" in tok:
            v, _, es = tok.partition("^")
            try:
                e = int(es)
            except ValueError:
                raise ValueError("bad exponent in %r" % (tok,))
        else:
            v, e = tok, 1
        if v not in spec.order:
            raise ValueError("unknown vertex %r in word" % (v,))
        if e == 0:
            continue
        if spec.order[v] is not INF and e < 0:
            e = spec.reduce_exp(v, e)
        syls.append((v, e))
    return Word(spec, [s for s in syls if spec.reduce_exp(*s) != 0])


def format_spec(spec):
    from .graphs import write_edgelist
    lines = write_edgelist(spec.graph).rstrip("\n").splitlines()
    for v, m in spec.orders:
        lines.append("o %s %s" % (v, "inf" if m is INF else m))
    return "\n".join(lines) + "\n"


def parse_spec(text):
    """Parse the edge-list format extended with `o <v> <m|inf>` lines."""
    from .graphs import read_edgelist
    graph = read_edgelist(text)
    orders = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "o":
            continue
        if len(parts) != 3:
            raise ValueError("line %d: malformed order line" % lineno)
        v, ms = parts[1], parts[2]
        orders[v] = INF if ms in ("inf", "oo") else int(ms)
    missing = set(graph.vertices) - set(orders)
    if missing:
        raise ValueError("missing orders for %r" % (sorted(map(str, missing)),))
    return GroupSpec(graph, orders)
