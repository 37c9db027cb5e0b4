"""Generator-level homomorphisms between graph products, with computational
certification: relator annihilation and collision-free bounded balls.

The two constructions provided (doubling along a link, co-contraction) send
each source generator either to itself or to a conjugate t x t^-1 of a target
generator; the relator check certifies well-definedness and the injectivity
sample gives a finite certificate on a ball.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import co_contract, double_along_link, opposite
from .words import (GroupSpec, INF, Word, enumerate_elements, identity,
                    invert, multiply, normalize, parse_word, format_word)


@dataclass(frozen=True)
class HomomorphismSpec:
    source: GroupSpec
    target: GroupSpec
    images: tuple  # ((source vertex, target Word), ...)

    def __init__(self, source, target, images):
        items = []
        imap = dict(images)
        for v in source.graph.vertices:
            if v not in imap:
                raise ValueError("no image for source vertex %r" % (v,))
            items.append((v, normalize(imap[v])))
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", tuple(items))

    def image(self, v):
        return dict(self.images)[v]

    def apply(self, w):
        """Image of a source word, in target normal form."""
        imap = dict(self.images)
        out = identity(self.target)
        for v, e in w.syllables:
            g = imap[v]
            step = g if e > 0 else invert(g)
            for _ in range(abs(e)):
                out = multiply(out, step)
        return out


def _normalize_orders(g, orders):
    if isinstance(orders, int) or orders is INF:
        return {v: orders for v in g.vertices}
    return dict(orders)


def double_homomorphism(g, t, orders, mirror=False):
    """Embedding of the graph product over the double of g minus st(t) along
    lk(t) into the graph product over g.

    First-copy generators map to themselves; a second-copy generator u' maps
    to t u t^-1 (or t^-1 u t with mirror=True).  Orders pull back along the
    copy projection.
    """
    orders = _normalize_orders(g, orders)
    if orders.get(t) is not INF and orders.get(t, 0) < 2:
        raise ValueError("vertex %r needs a nontrivial group" % (t,))
    dbl, rho = double_along_link(g, t)
    src = GroupSpec(dbl, {u: orders[rho[u]] for u in dbl.vertices})
    tgt = GroupSpec(g, orders)
    conj = Word(tgt, ((t, 1),)) if not mirror else Word(tgt, ((t, -1),))
    images = []
    for u in dbl.vertices:
        base = Word(tgt, ((rho[u], 1),))
        if u == rho[u]:
            images.append((u, base))
        else:
            images.append((u, multiply(multiply(conj, base), invert(conj))))
    return HomomorphismSpec(src, tgt, images)


def co_contraction_embedding(g, e, orders, mirror=False):
    """Embedding induced by co-contracting the opposite-graph edge e = {x, t}.

    The contracted vertex y inherits the order of x and maps to t x t^-1; all
    other generators map to themselves.
    """
    orders = _normalize_orders(g, orders)
    e = frozenset(e)
    if e not in opposite(g).edges:
        raise ValueError("%r is not an edge of the opposite graph"
                         % (sorted(map(str, e)),))
    x, t = sorted(e, key=g.index.__getitem__)
    src_graph = co_contract(g, e)
    y = "%s*%s" % (x, t)
    src = GroupSpec(src_graph,
                    {v: (orders[x] if v == y else orders[v])
                     for v in src_graph.vertices})
    tgt = GroupSpec(g, orders)
    conj = Word(tgt, ((t, 1),)) if not mirror else Word(tgt, ((t, -1),))
    images = []
    for v in src_graph.vertices:
        if v == y:
            xw = Word(tgt, ((x, 1),))
            images.append((v, multiply(multiply(conj, xw), invert(conj))))
        else:
            images.append((v, Word(tgt, ((v, 1),))))
    return HomomorphismSpec(src, tgt, images)


def compose(h1, h2):
    """The composite h2 . h1 (apply h1 first); specs must chain."""
    if h1.target != h2.source:
        raise ValueError("homomorphisms do not chain")
    images = [(v, h2.apply(w)) for v, w in h1.images]
    return HomomorphismSpec(h1.source, h2.target, images)


def relator_check(h):
    """Verify every source relator maps to the identity.

    Relators: v^m for each finite-order source vertex, and the commutator
    [u, w] for each source edge.  Returns (ok, failures) where each failure
    is (description, image normal form).
    """
    src = h.source
    failures = []
    for v, m in src.orders:
        if m is INF:
            continue
        img = h.apply(Word(src, ((v, 1),) * m))
        if len(img):
            failures.append(("%s^%d" % (v, m), format_word(img)))
    for u, w in src.graph.sorted_edges():
        comm = Word(src, ((u, 1), (w, 1), (u, -1), (w, -1)))
        img = h.apply(comm)
        if len(img):
            failures.append(("[%s,%s]" % (u, w), format_word(img)))
    return (not failures), failures


def injectivity_sample(h, max_len, exp_bound=1, cap=200000):
    """Check that distinct source elements of canonical length <= max_len
    have distinct images.  Returns (ok, collision or None)."""
    ball = enumerate_elements(h.source, max_len, exp_bound, cap=cap)
    seen = {}
    for w in ball:
        img = h.apply(w).syllables
        if img in seen:
            return False, (seen[img], w)
        seen[img] = w
    return True, None


def format_homomorphism(h):
    lines = []
    for v, w in h.images:
        lines.append("im %s %s" % (v, format_word(w)))
    return "\n".join(lines) + "\n"


def parse_homomorphism(source, target, text):
    images = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 2)
        if parts[0] != "im":
            raise ValueError("line %d: expected an `im` line" % lineno)
        v = parts[1]
        word = parse_word(target, parts[2] if len(parts) > 2 else "")
        images.append((v, word))
    return HomomorphismSpec(source, target, images)
