//! The verification suites behind `cisgraph verify`.

use cisgraph::checks::{
    clique_bound_violation, clique_intersection_violation, is_complete_bipartite, rho_exchange_violation,
};
use cisgraph::enumeration::{is_cis, p4_property, CliqueStructure};
use cisgraph::families::{self, derive_extremal_locals, is_extremal_local};
use cisgraph::reduction::{factor_lex_complete, factor_lex_empty, irreducible_quotient, is_irreducible};
use cisgraph::symmetry::{
    are_isomorphic, automorphism_group, canonical_form, find_regular_subgroup, is_regular, transitivity, vt_cis_check,
    DEFAULT_GROUP_CAP,
};
use cisgraph::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::context::Context;
use crate::error::{CliError, Result};
use crate::explore;
use crate::sample::Sampler;
use crate::suite::SuiteResult;

pub const SUITES: [&str; 11] = [
    "families",
    "vt-cis-equivalence",
    "lex-product",
    "quotient",
    "clique-intersection",
    "triangle-free",
    "locals",
    "omega3-small",
    "valency7-positive",
    "q-noncayley",
    "open-questions",
];

/// Cases per randomized law.
pub const RANDOM_CASES: usize = 500;

pub fn run_suite(name: &str, ctx: &Context) -> Result<SuiteResult> {
    match name {
        "families" => families_suite(ctx),
        "vt-cis-equivalence" => vt_cis_equivalence(ctx),
        "lex-product" => closure_laws(ctx),
        "quotient" => quotient(ctx),
        "clique-intersection" => clique_intersection(ctx),
        "triangle-free" => triangle_free(ctx),
        "locals" => locals(ctx),
        "omega3-small" => omega3_small(ctx),
        "valency7-positive" => valency7_positive(ctx),
        "q-noncayley" => q_noncayley(ctx),
        "open-questions" => open_questions(ctx),
        other => Err(CliError::Input(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    }
}

fn rng(ctx: &Context, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(ctx.settings.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn structure(ctx: &Context, g: &Graph) -> Result<CliqueStructure> {
    Ok(CliqueStructure::compute(g, ctx.settings.limit)?)
}

fn cis(ctx: &Context, g: &Graph) -> Result<bool> {
    Ok(is_cis(g, ctx.settings.limit)?.is_cis)
}

fn families_suite(ctx: &Context) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("families");
    for n in 1..=8 {
        let g = families::rook(n)?;
        let s = structure(ctx, &g)?;
        let ok = s.cis().is_cis
            && g.order() == n * n
            && g.profile().valency == Some(2 * (n - 1))
            && (s.alpha(), s.omega()) == (n, n);
        r.check(&g, ok, || format!("LKnn:{n} alpha={} omega={}", s.alpha(), s.omega()));
    }
    for n in 4..=16 {
        let g = families::q_graph(n)?;
        let s = structure(ctx, &g)?;
        let vt = transitivity(&g, ctx.settings.budget)?.is_vertex_transitive;
        let ok = s.cis().is_cis
            && g.profile().valency == Some(7)
            && (s.alpha(), s.omega()) == (n, 4)
            && is_irreducible(&g)
            && vt;
        r.check(&g, ok, || format!("Q:{n} alpha={} omega={} vt={vt}", s.alpha(), s.omega()));
    }
    let q3 = families::q_graph(3)?;
    let cert = is_cis(&q3, ctx.settings.limit)?;
    r.check(&q3, !cert.is_cis && cert.verify(&q3), || "Q:3 reported CIS".into());
    for n in 2..=6 {
        let g = families::r_graph(n)?;
        let s = structure(ctx, &g)?;
        let ok = s.cis().is_cis && g.profile().valency == Some(2 * n + 3) && (s.alpha(), s.omega()) == (2 * n, 4);
        r.check(&g, ok, || format!("R:{n} alpha={} omega={}", s.alpha(), s.omega()));
    }
    for n in 2..=5 {
        let g = families::s_graph(n)?;
        let ok = cis(ctx, &g)? && g.profile().valency == Some(3 * n + 2);
        r.check(&g, ok, || format!("S:{n} valency={:?}", g.profile().valency));
    }
    let r2 = families::r_graph(2)?;
    let forms = [
        canonical_form(&r2, ctx.settings.budget)?,
        canonical_form(&families::q_graph(4)?, ctx.settings.budget)?,
        canonical_form(&families::s_graph(2)?.complement(), ctx.settings.budget)?,
    ];
    r.check(&r2, forms[0] == forms[1] && forms[1] == forms[2], || "R:2, Q:4 and co-S:2 differ".into());
    Ok(r)
}

/// The connected vertex-transitive CIS graphs of valency at most 7 that
/// `valency7-positive` checks.
pub fn valency7_list() -> Result<Vec<(String, Graph)>> {
    let k = |n| Graph::complete(n);
    let e = |n| Graph::empty(n);
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((format!("K:{n}"), k(n)?));
    }
    for n in 2..=7 {
        out.push((format!("Kmn:{n},{n}"), families::complete_bipartite(n, n)?));
    }
    out.push(("LKnn:3".into(), families::rook(3)?));
    out.push(("LKnn:4".into(), families::rook(4)?));
    out.push(("C4[K2]".into(), families::cycle(4)?.lexicographic_product(&k(2)?)?));
    out.push(("K3[E2]".into(), k(3)?.lexicographic_product(&e(2)?)?));
    out.push(("K3[E3]".into(), k(3)?.lexicographic_product(&e(3)?)?));
    out.push(("K4[E2]".into(), k(4)?.lexicographic_product(&e(2)?)?));
    out.push(("K33[K2]".into(), families::complete_bipartite(3, 3)?.lexicographic_product(&k(2)?)?));
    for n in 4..=10 {
        out.push((format!("Q:{n}"), families::q_graph(n)?));
    }
    Ok(out)
}

/// Vertex-transitive test corpus: the valency-7 list and complements,
/// lexicographic products of small vertex-transitive graphs, and 50 random
/// circulants of order at most 24.
pub fn vt_corpus(ctx: &Context) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for (name, g) in valency7_list()? {
        out.push((format!("co-{name}"), g.complement()));
        out.push((name, g));
    }
    let small = [
        ("K2", Graph::complete(2)?),
        ("K3", Graph::complete(3)?),
        ("C4", families::cycle(4)?),
        ("C5", families::cycle(5)?),
        ("K33", families::complete_bipartite(3, 3)?),
    ];
    for (a, ga) in &small {
        for (b, gb) in &small {
            out.push((format!("{a}[{b}]"), ga.lexicographic_product(gb)?));
        }
    }
    let mut sampler = Sampler::new(ctx, rng(ctx, 5))?;
    for i in 0..50 {
        let n = 3 + (i % 22);
        out.push((format!("circulant#{i}"), sampler.circulant(n)));
    }
    Ok(out)
}

fn vt_cis_equivalence(ctx: &Context) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("vt-cis-equivalence");
    let mut cis_count = 0;
    for (name, g) in vt_corpus(ctx)? {
        let fast = match vt_cis_check(&g, ctx.settings.limit, ctx.settings.budget) {
            Err(cisgraph::Error::NotVertexTransitive) => {
                r.check(&g, false, || format!("{name} is not vertex-transitive"));
                continue;
            }
            other => other?,
        };
        let s = structure(ctx, &g)?;
        let slow = s.cis().is_cis;
        r.check(&g, fast.is_cis == slow, || format!("{name}: shortcut={} direct={slow}", fast.is_cis));
        if slow {
            cis_count += 1;
            let ok = g.profile().is_regular() && s.well_covered().holds && s.co_well_covered().holds;
            r.check(&g, ok, || format!("{name}: CIS but not regular, well-covered and co-well-covered"));
        }
    }
    r.note(format!("cis_graphs={cis_count}"));
    Ok(r)
}

fn closure_laws(ctx: &Context) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("lex-product");
    let mut sampler = Sampler::new(ctx, rng(ctx, 3))?;
    for _ in 0..RANDOM_CASES {
        let g = sampler.mixed(1, 10);
        let (a, b) = (cis(ctx, &g)?, cis(ctx, &g.complement())?);
        r.check(&g, a == b, || format!("complement: cis={a} co-cis={b}"));
    }
    for _ in 0..RANDOM_CASES {
        let (g, h) = (sampler.mixed(1, 6), sampler.mixed(1, 6));
        let u = g.disjoint_union(&h)?;
        let (a, b, c) = (cis(ctx, &g)?, cis(ctx, &h)?, cis(ctx, &u)?);
        r.check(&u, c == (a && b), || format!("union: parts {a},{b} union {c}"));
    }
    for _ in 0..RANDOM_CASES {
        let (g, h) = (sampler.mixed(1, 5), sampler.mixed(1, 5));
        let p = g.lexicographic_product(&h)?;
        let (a, b, c) = (cis(ctx, &g)?, cis(ctx, &h)?, cis(ctx, &p)?);
        r.check(&p, c == (a && b), || format!("product: factors {a},{b} product {c}"));
    }
    Ok(r)
}

fn quotient(ctx: &Context) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("quotient");
    let budget = ctx.settings.budget;
    let mut sampler = Sampler::new(ctx, rng(ctx, 4))?;
    for i in 0..RANDOM_CASES {
        let g = if i % 2 == 0 { sampler.blown_up(8) } else { sampler.mixed(1, 8) };
        let q = irreducible_quotient(&g).quotient;
        let (a, b) = (cis(ctx, &g)?, cis(ctx, &q)?);
        r.check(&g, a == b, || format!("cis={a} quotient cis={b}"));
        r.check(&g, irreducible_quotient(&q).quotient == q, || "quotient not idempotent".into());
        if let Some((x, n)) = factor_lex_empty(&g) {
            let rebuilt = x.lexicographic_product(&Graph::empty(n)?)?;
            r.check(&g, are_isomorphic(&rebuilt, &g, budget)?, || format!("X[E{n}] differs from input"));
        }
        if let Some((z, m)) = factor_lex_complete(&g) {
            let rebuilt = z.lexicographic_product(&Graph::complete(m)?)?;
            r.check(&g, are_isomorphic(&rebuilt, &g, budget)?, || format!("Z[K{m}] differs from input"));
        }
    }
    // vertex-transitive iff the quotient is and all twin classes agree in size
    let mut graphs: Vec<Graph> = vt_corpus(ctx)?.into_iter().map(|(_, g)| g).collect();
    for _ in 0..100 {
        graphs.push(sampler.blown_up(8));
    }
    for g in graphs {
        let vt = transitivity(&g, budget)?.is_vertex_transitive;
        let rhs = match factor_lex_empty(&g) {
            Some((x, _)) => transitivity(&x, budget)?.is_vertex_transitive,
            None => false,
        };
        r.check(&g, vt == rhs, || format!("vertex-transitive={vt} but quotient test gives {rhs}"));
    }
    Ok(r)
}

fn clique_intersection(ctx: &Context) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("clique-intersection");
    for c in ctx.all_classes()? {
        let (g, s) = (&c.graph, &c.structure);
        let is_cis = c.is_cis();
        let irreducible = is_irreducible(g);
        if is_cis {
            let p4 = p4_property(g);
            r.check(g, p4.holds, || format!("CIS but induced path {:?} has no bull vertex", p4.failing_path));
        }
        if is_cis && irreducible {
            let bad = clique_intersection_violation(s);
            r.check(g, bad.is_none(), || format!("maximum cliques {:?} share all but one vertex", bad));
        }
        if is_cis && irreducible && s.co_well_covered().holds {
            let t = s.omega();
            for v in (0..g.order()).filter(|&v| g.degree(v) > 0) {
                let local = g.local_graph(v)?;
                r.check(g, is_extremal_local(&local, t - 1), || format!("local graph at {v} is not extremal"));
            }
        }
        if s.well_covered().holds && (0..g.order()).all(|v| g.degree(v) > 0) {
            let bad = rho_exchange_violation(g, s);
            r.check(g, bad.is_none(), || bad.clone().unwrap_or_default());
        }
        let p = g.profile();
        let complete = g.edge_count() == g.order() * (g.order() - 1) / 2;
        if p.is_connected && p.is_regular() && !complete && s.well_covered().holds && s.co_well_covered().holds {
            let bad = clique_bound_violation(g, s);
            r.check(g, bad.is_none(), || bad.clone().unwrap_or_default());
        }
    }
    r.note(format!("orders=1..{}", ctx.exhaustive_order()));
    Ok(r)
}

fn triangle_free(ctx: &Context) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("triangle-free");
    for c in ctx.all_classes()? {
        let g = &c.graph;
        if !g.is_connected() || c.structure.omega() > 2 || g.order() < 2 {
            continue;
        }
        let bip = is_complete_bipartite(g);
        r.check(g, c.is_cis() == bip, || format!("cis={} complete-bipartite={bip}", c.is_cis()));
        if is_irreducible(g) && c.structure.omega() == 2 {
            let ok = c.is_cis() == (g.order() == 2);
            r.check(g, ok, || "irreducible with omega 2: CIS iff K2 fails".into());
        }
    }
    for m in 1..=8 {
        for n in m..=8 {
            let g = families::complete_bipartite(m, n)?;
            r.check(&g, cis(ctx, &g)?, || format!("K_{{{m},{n}}} not CIS"));
        }
    }
    r.note(format!("orders=1..{}", ctx.exhaustive_order()));
    Ok(r)
}

fn omega3_small(ctx: &Context) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("omega3-small");
    let mut found = 0;
    for c in ctx.all_classes()? {
        let (g, s) = (&c.graph, &c.structure);
        if g.is_connected() && is_irreducible(g) && s.well_covered().holds && c.is_cis() && s.omega() <= 3 {
            found += 1;
            let complete = g.edge_count() == g.order() * (g.order() - 1) / 2;
            r.check(g, complete && g.order() <= 3, || "not K1, K2 or K3".into());
        }
    }
    // the one member beyond the exhaustive range
    let rook = families::rook(3)?;
    let s = structure(ctx, &rook)?;
    let ok = rook.is_connected() && is_irreducible(&rook) && s.well_covered().holds && s.cis().is_cis && s.omega() == 3;
    r.check(&rook, ok, || "L(K_{3,3}) does not qualify".into());
    r.note(format!("orders=1..{} qualifying={found}", ctx.exhaustive_order()));
    Ok(r)
}

fn locals(ctx: &Context) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("locals");
    let budget = ctx.settings.budget;
    let mut classes = Vec::new();
    for ((k, t), want) in [((5, 3), 1), ((6, 3), 1), ((7, 3), 2), ((7, 4), 1)] {
        let found = derive_extremal_locals(k, t, budget)?;
        let stand_in = found.first().cloned().unwrap_or(Graph::empty(k)?);
        r.check(&stand_in, found.len() == want, || {
            format!("(k,t)=({k},{t}): {} classes, expected {want}", found.len())
        });
        r.note(format!("({k},{t}) classes={}", found.len()));
        classes.push(found);
    }
    let k3 = Graph::complete(3)?;
    let two_k3 = k3.disjoint_union(&k3)?;
    let six_ok = classes[1].len() == 1 && are_isomorphic(&classes[1][0], &two_k3, budget)?;
    r.check(&two_k3, six_ok, || "(6,3) class is not 2K3".into());

    let universal = classes[2].iter().filter(|g| g.has_universal_vertex()).count();
    r.check(&two_k3, universal == 1, || format!("{universal} (7,3) classes have a universal vertex"));
    if let Some(u2) = classes[3].first() {
        let count = (0..7).filter(|&v| u2.degree(v) == 6).count();
        r.check(u2, count == 1, || format!("(7,4) class has {count} universal vertices"));
    }
    if let Some(t3) = classes[2].iter().find(|g| !g.has_universal_vertex()) {
        let q5 = families::q_graph(5)?;
        let mut ok = true;
        for v in 0..q5.order() {
            ok &= are_isomorphic(&q5.local_graph(v)?, t3, budget)?;
        }
        r.check(&q5, ok, || "a local graph of Q_5 differs from the (7,3) class without universal vertex".into());
    }
    Ok(r)
}

fn valency7_positive(ctx: &Context) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("valency7-positive");
    for (name, g) in valency7_list()? {
        let p = g.profile();
        let vt = transitivity(&g, ctx.settings.budget)?.is_vertex_transitive;
        let is = cis(ctx, &g)?;
        let ok = p.is_connected && vt && p.valency.is_some_and(|k| k <= 7) && is;
        r.check(&g, ok, || format!("{name}: connected={} vt={vt} valency={:?} cis={is}", p.is_connected, p.valency));
    }
    Ok(r)
}

fn q_noncayley(ctx: &Context) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("q-noncayley");
    let budget = ctx.settings.budget;
    let cases = [
        ("Q:5", families::q_graph(5)?, false),
        ("Q:7", families::q_graph(7)?, false),
        ("Q:4", families::q_graph(4)?, true),
        ("C:5", families::cycle(5)?, true),
        ("K:4", Graph::complete(4)?, true),
    ];
    for (name, g, cayley) in cases {
        let group = automorphism_group(&g, budget)?;
        let found = find_regular_subgroup(&group, DEFAULT_GROUP_CAP)?;
        let ok = match &found {
            Some(gens) => {
                cayley
                    && is_regular(g.order(), gens)
                    && gens.iter().all(|p| g.edges().iter().all(|&(u, v)| g.is_adjacent(p.image(u), p.image(v))))
            }
            None => !cayley,
        };
        r.check(&g, ok, || format!("{name}: regular subgroup found={}", found.is_some()));
        r.note(format!("{name} |Aut|={} regular_subgroup={}", group.order(), found.is_some()));
    }
    Ok(r)
}

fn open_questions(ctx: &Context) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("open-questions");
    let n = ctx.exhaustive_order();
    r.merge(explore::q1(ctx, n)?);
    r.merge(explore::q2(4..=8)?);
    r.merge(explore::q3(ctx, n)?);
    Ok(r)
}
