"""Named verification suites: curated instances with pinned expectations.

Each item carries a provenance tag — "paper" for values asserted by the
source material, "derived" for values computed by an independent oracle and
frozen, "trivial" for direct consequences — and the runner reports one
pass/fail record per item.  Items are deterministic; ordering is fixed by
the suite definitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import families
from .autgroup import are_isomorphic, automorphism_group, brute_automorphisms
from .cosets import sabidussi
from .errors import StartransError
from .graphs import girth, is_connected, subdivide_1, subdivide_2, valency_profile
from .localsym import analyze, stabiliser_tower
from .perms import PermGroup, Permutation

PAPER = "paper"
DERIVED = "derived"
TRIVIAL = "trivial"


@dataclass(frozen=True)
class ItemResult:
    suite: str
    name: str
    provenance: str
    expectation: str
    observed: str
    passed: bool

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status}  [{self.provenance:7}] {self.name}: "
            f"expected {self.expectation}; observed {self.observed}"
        )


class _Runner:
    def __init__(self, suite):
        self.suite = suite
        self.results = []
        self._reports = {}

    def report_for(self, key, graph, group=None):
        if key not in self._reports:
            self._reports[key] = analyze(graph, group)
        return self._reports[key]

    def item(self, name, provenance, expectation, thunk):
        try:
            observed, ok = thunk()
        except StartransError as exc:
            observed, ok = f"error: {exc}", False
        except Exception as exc:  # defensive: a crash is a failure, not an abort
            observed, ok = f"{type(exc).__name__}: {exc}", False
        self.results.append(
            ItemResult(self.suite, name, provenance, expectation, str(observed), ok)
        )


def _both_checks(runner, key, name, graph, star, stedge, provenance, group=None):
    def thunk():
        rep = runner.report_for(key, graph, group)
        got = (rep.star_transitive, rep.stedge_transitive)
        return f"star={got[0]}, stedge={got[1]}", got == (star, stedge)

    runner.item(name, provenance, f"star={star}, stedge={stedge}", thunk)


def suite_small_valency():
    """Shapes with minimum valency one or two."""
    r = _Runner("small-valency")
    for n in range(1, 6):
        inst = families.complete_bipartite(1, n)
        _both_checks(r, f"K1{n}", f"K_{{1,{n}}}", inst.graph, True, True, PAPER)
    for n in range(3, 13):
        inst = families.cycle(n)
        _both_checks(r, f"C{n}", f"C_{n}", inst.graph, True, True, PAPER)
    petersen = families.odd_graph(3).graph
    k4 = families.complete_graph(4).graph
    k5 = families.complete_graph(5).graph
    k33 = families.complete_bipartite(3, 3).graph
    for name, sigma in [("K_4", k4), ("K_5", k5), ("Petersen", petersen), ("K_{3,3}", k33)]:
        g1 = subdivide_1(sigma)
        _both_checks(r, f"sub1-{name}", f"1-subdivision of {name}", g1, True, True, PAPER)
    _both_checks(r, "P4", "P_4", families.path(4).graph, False, True, PAPER)
    for n in range(3, 6):
        _both_checks(r, f"T{n}", f"T_{n}", families.spider(n).graph, False, True, PAPER)
    _both_checks(
        r, "sub2-K4", "2-subdivision of K_4", subdivide_2(k4), False, True, PAPER
    )
    for name, g in [("K_4", k4), ("K_5", k5)]:
        def thunk(g=g, name=name):
            rep = r.report_for(f"stedge-{name}", g)
            return f"stedge={rep.stedge_transitive}", rep.stedge_transitive is False

        r.item(f"{name}-stedge-false", PAPER, "stedge=False (girth 3)", thunk)
    return r.results


def suite_vertex_transitive():
    r = _Runner("vertex-transitive")
    pet = families.odd_graph(3)

    def petersen():
        rep = r.report_for("petersen", pet.graph)
        tower = rep.towers[0]
        edge_stab = (
            automorphism_group(pet.graph).setwise_stabiliser([tower.v, tower.w]).order()
        )
        obs = (
            rep.star_transitive,
            rep.stedge_transitive,
            rep.group_order,
            tower.order_v,
            edge_stab,
            rep.s_transitive,
            rep.theorem_case,
        )
        want = (True, True, 120, 12, 8, 3, "vertex-transitive:1")
        return str(obs), obs == want

    r.item(
        "Petersen",
        PAPER,
        "both true, |Aut|=120, |G_v|=12, |G_{u,v}|=8, s=3, case 1",
        petersen,
    )

    heawood = families.pg_incidence(2)

    def heawood_item():
        rep = r.report_for("heawood", heawood.graph)
        obs = (
            rep.group_order,
            rep.towers[0].order_v,
            rep.s_transitive,
            rep.star_transitive and rep.stedge_transitive,
            rep.theorem_case,
        )
        return str(obs), obs == (336, 24, 4, True, "vertex-transitive:2")

    r.item("Heawood", DERIVED, "|Aut|=336, |G_v|=24, s=4, case 2", heawood_item)

    o4 = families.odd_graph(4)

    def o4_item():
        rep = r.report_for("o4", o4.graph, o4.group)
        obs = (
            girth(o4.graph),
            rep.towers[0].order_v,
            rep.star_transitive and rep.stedge_transitive,
            rep.theorem_case,
        )
        return str(obs), obs == (6, 144, True, "vertex-transitive:1")

    r.item("O_4", PAPER, "girth 6, |G_v|=144 under the 7-symbol group, case 1", o4_item)

    pg3 = families.pg_incidence(3)

    def pg3_item():
        rep = r.report_for("pg3", pg3.graph)
        obs = (
            rep.vertex_orbits,
            rep.towers[0].order_v,
            rep.s_transitive,
            rep.star_transitive and rep.stedge_transitive,
            rep.theorem_case,
        )
        return str(obs), obs == (1, 432, 4, True, "vertex-transitive:3")

    r.item(
        "PG(2,3)",
        PAPER,
        "vertex-transitive, |G_v|=432, s=4, case 3",
        pg3_item,
    )
    return r.results


def suite_vertex_intransitive():
    r = _Runner("vertex-intransitive")
    gq = families.hermitian_gq()

    def gq_item():
        rep = r.report_for("gq", gq.graph)
        line_v = gq.extras["point_block"]
        aut = automorphism_group(gq.graph)
        tower = stabiliser_tower(gq.graph, aut, line_v, min(gq.graph.adj[line_v]))
        obs = (
            rep.bivalency,
            tower.order_v,
            tower.ball_orders_v[0],
            tower.order_vw1,
            rep.max_local_s >= 4,
            rep.star_transitive and rep.stedge_transitive,
            rep.theorem_case,
        )
        want = ((3, 5), 1920, 16, 8, True, True, "vertex-intransitive:1")
        return str(obs), obs == want

    r.item(
        "GQ(2,4)",
        PAPER,
        "bivalency {3,5}, |G_v|=1920, |G_v^[1]|=16, |G_vw^[1]|=8, locally 4-arc-transitive, case 1",
        gq_item,
    )

    j = families.johnson_incidence(7, 3)

    def johnson_item():
        rep = r.report_for("johnson", j.graph, j.group)
        towers = {(len(j.graph.adj[t.v])): t.order_v for t in rep.towers}
        obs = (towers.get(3), towers.get(5), rep.theorem_case)
        want = (factorial(3) * factorial(4), factorial(5) * factorial(2), "vertex-intransitive:2")
        return str(obs), obs == want

    r.item(
        "J(7,3)",
        PAPER,
        "|G_v|=3!*4!=144, |G_w|=5!*2!=240, case 2",
        johnson_item,
    )

    h = families.hamming_clique_incidence(3, 4)

    def hamming_item():
        rep = r.report_for("hamming", h.graph, h.group)
        obs = rep.theorem_case
        return str(obs), obs == "vertex-intransitive:3"

    r.item("H(3,4)-cliques", PAPER, "case 3", hamming_item)

    t4 = families.gf3_translate_graph(4)

    def gf3_item():
        rep = r.report_for("gf3", t4.graph, t4.group)
        obs = (rep.bivalency, rep.theorem_case)
        return str(obs), obs == ((3, 4), "vertex-intransitive:2")

    r.item("ternary-translates(4)", PAPER, "bivalency {3,4}, case 2", gf3_item)
    return r.results


def suite_coset():
    r = _Runner("coset")

    def k4_item():
        G = PermGroup.symmetric(4)
        H = PermGroup(
            [Permutation.from_cycles(4, (0, 1)), Permutation.from_cycles(4, (0, 1, 2))],
            degree=4,
            order=6,
        )
        inst = sabidussi(G, H, Permutation.from_cycles(4, (2, 3)))
        iso = are_isomorphic(inst.graph, families.complete_graph(4).graph)
        return f"iso={'found' if iso else 'none'}", iso is not None

    r.item(
        "Cos(S4, point-stab, flip)",
        DERIVED,
        "isomorphic to K_4",
        k4_item,
    )

    def pair_coset_shape():
        inst = families.s_squared_example(4)
        g = inst.graph
        obs = (g.n, is_connected(g), valency_profile(g))
        return str(obs), obs == (2520, True, {4: 2520})

    r.item(
        "pair-coset(4) shape",
        PAPER,
        "2520 vertices, connected, 4-regular",
        pair_coset_shape,
    )

    def pair_coset_symmetry():
        inst = families.s_squared_example(4)
        rep = analyze(inst.graph, inst.group)
        obs = (
            rep.star_transitive,
            rep.stedge_transitive,
            rep.s_transitive,
            rep.towers[0].order_v,
        )
        return str(obs), obs == (True, True, 3, 144)

    r.item(
        "pair-coset(4) symmetry",
        PAPER,
        "star and stedge transitive, (G,3)-transitive, |G_v|=144",
        pair_coset_symmetry,
    )
    return r.results


SUITES = {
    "small-valency": suite_small_valency,
    "vertex-transitive": suite_vertex_transitive,
    "vertex-intransitive": suite_vertex_intransitive,
    "coset": suite_coset,
}


def run_suite(name):
    if name == "all":
        out = []
        for key in ("small-valency", "vertex-transitive", "vertex-intransitive", "coset"):
            out.extend(SUITES[key]())
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name]()
