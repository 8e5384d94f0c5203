//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use insat_core::enumeration::{exhaust_labeled, labeled_pairs};
use insat_core::{
    find_induced_path, is_induced_path, is_isomorphic, named, paper_witness,
    triangle_free_w_quintuple, verify_h_is, verify_pn_is, DihedralMap, Execution, Graph, LabeledGn,
    Mode,
};
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn gn(n: usize) -> Result<LabeledGn, String> {
    LabeledGn::build(n).map_err(err)
}

fn graph_from_mask(order: usize, mask: u64) -> Graph {
    let pairs = labeled_pairs(order);
    Graph::from_edges(
        order,
        pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p),
    )
    .unwrap()
}

/// Every ordered sequence of `k` distinct vertices.
fn naive_path_exists(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, k: usize, seq: &mut Vec<usize>) -> bool {
        if seq.len() == k {
            return is_induced_path(g, seq);
        }
        for v in 0..g.order() {
            if !seq.contains(&v) {
                seq.push(v);
                if rec(g, k, seq) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }
    rec(g, k, &mut Vec::new())
}

/// Every injective map of `h` into `g`, checking edges and non-edges.
fn naive_contains(g: &Graph, h: &Graph) -> bool {
    fn rec(g: &Graph, h: &Graph, image: &mut Vec<usize>) -> bool {
        let d = image.len();
        if d == h.order() {
            return true;
        }
        for y in 0..g.order() {
            if !image.contains(&y) && (0..d).all(|p| h.has_edge(d, p) == g.has_edge(y, image[p])) {
                image.push(y);
                if rec(g, h, image) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }
    h.order() <= g.order() && rec(g, h, &mut Vec::new())
}

fn definition_literal(g: &Graph, h: &Graph) -> bool {
    !naive_contains(g, h)
        && g.edges()
            .iter()
            .all(|&e| naive_contains(&g.toggle_edge(e, false).unwrap(), h))
        && g.non_edges()
            .iter()
            .all(|&e| naive_contains(&g.toggle_edge(e, true).unwrap(), h))
}

fn theorem_reproduction() -> Outcome {
    let started = Instant::now();
    for n in 6..=12 {
        let g = gn(n)?;
        let r = verify_pn_is(&g).map_err(err)?;
        ensure(r.verdict, || format!("G_{n} verdict false"))?;
        r.validate(g.graph(), &named::path(n).map_err(err)?)
            .map_err(err)?;
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}, budget 60s")
    })?;
    Ok(format!(
        "G_6..G_12 all P_n-induced-saturated in {:.3}s",
        elapsed.as_secs_f64()
    ))
}

fn petersen_identity() -> Outcome {
    let ok = is_isomorphic(gn(6)?.graph(), &named::petersen()).map_err(err)?;
    ensure(ok, || "G_6 not isomorphic to Petersen".into())?;
    Ok("G_6 ≅ Petersen".into())
}

fn claim_free_at_scale() -> Outcome {
    for n in 6..=12 {
        let g = gn(n)?;
        let found = find_induced_path(g.graph(), n).map_err(err)?;
        ensure(found.is_none(), || {
            format!("G_{n} contains induced P_{n}: {found:?}")
        })?;
    }
    for n in 7..=12 {
        let q = triangle_free_w_quintuple(&gn(n)?);
        ensure(q.is_none(), || {
            format!("G_{n}: triangle-free w-quintuple {q:?}")
        })?;
    }
    Ok("no induced P_n in G_n for n=6..12; w-quintuples contain triangles for n=7..12".into())
}

fn witness_formulas() -> Outcome {
    let mut checked = 0usize;
    for n in 6..=10 {
        let g = gn(n)?;
        let perturbations = g
            .graph()
            .edges()
            .into_iter()
            .map(|e| (e, Mode::Delete))
            .chain(g.graph().non_edges().into_iter().map(|e| (e, Mode::Add)));
        for (e, mode) in perturbations {
            let path = paper_witness(&g, e, mode).map_err(err)?;
            let perturbed = g.graph().toggle_edge(e, mode == Mode::Add).map_err(err)?;
            ensure(
                path.len() == n && is_induced_path(&perturbed, path.vertices()),
                || format!("G_{n} {e} {mode:?}: {path:?} is not an induced P_{n}"),
            )?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} perturbations certified, 0 consistency errors"
    ))
}

fn negative_control() -> Outcome {
    let g = gn(5)?;
    let r = verify_pn_is(&g).map_err(err)?;
    ensure(!r.free_ok, || "G_5 reported free of induced P_5".into())?;
    let w = r.counterexample.as_ref().ok_or("missing counterexample")?;
    ensure(w.len() == 5 && is_induced_path(g.graph(), w), || {
        format!("bad witness {w:?}")
    })?;
    let names: Vec<String> = w.iter().map(|&v| g.name(v)).collect();
    Ok(format!("G_5 contains induced P_5: {}", names.join(" ")))
}

fn background_facts() -> Outcome {
    let started = Instant::now();
    let p4 = named::path(4).map_err(err)?;
    for k in 2..=7 {
        let s = exhaust_labeled(k, &p4, Execution::Parallel).map_err(err)?;
        ensure(s.labeled_hits == 0, || {
            format!("order {k}: {} P_4-IS graphs", s.labeled_hits)
        })?;
    }
    let p4_elapsed = started.elapsed();
    ensure(p4_elapsed < Duration::from_secs(300), || {
        format!("P_4 sweep took {p4_elapsed:?}")
    })?;

    let s = exhaust_labeled(2, &named::path(2).map_err(err)?, Execution::Parallel).map_err(err)?;
    ensure(!s.hits.is_empty(), || "no P_2-IS graph of order 2".into())?;

    let k3 = named::complete(3).map_err(err)?;
    let two_k3 = named::disjoint_union(&k3, &k3).map_err(err)?;
    let s = exhaust_labeled(6, &named::path(3).map_err(err)?, Execution::Parallel).map_err(err)?;
    let mut has_two_k3 = false;
    for h in &s.hits {
        has_two_k3 |=
            is_isomorphic(&Graph::from_graph6(&h.graph6).map_err(err)?, &two_k3).map_err(err)?;
    }
    ensure(has_two_k3, || {
        "2·K_3 missing from P_3-IS hits at order 6".into()
    })?;
    Ok(format!(
        "0 P_4-IS graphs on 2..7 vertices ({:.2}s); P_2-IS at order 2; 2·K_3 among {} P_3-IS classes at order 6",
        p4_elapsed.as_secs_f64(),
        s.hits.len()
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut graphs = 0usize;
    for order in 1..=6 {
        for mask in 0..1u64 << labeled_pairs(order).len() {
            let g = graph_from_mask(order, mask);
            for k in 1..=order {
                let fast = find_induced_path(&g, k).map_err(err)?.is_some();
                ensure(fast == naive_path_exists(&g, k), || {
                    format!("order {order} mask {mask} k {k}")
                })?;
            }
            graphs += 1;
        }
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let targets: Vec<Graph> = (2..=4).map(|k| named::path(k).unwrap()).collect();
    for trial in 0..1000 {
        let order = rng.gen_range(1..=6);
        let mask = rng.gen_range(0..1u64 << labeled_pairs(order).len());
        let g = graph_from_mask(order, mask);
        let h = &targets[trial % 3];
        let report = verify_h_is(&g, h).map_err(err)?;
        ensure(report.verdict == definition_literal(&g, h), || {
            format!(
                "verify_h_is disagrees on {} vs P_{}",
                g.to_graph6(),
                h.order()
            )
        })?;
    }
    Ok(format!("find_induced_path matches naive oracle on {graphs} graphs; verify_h_is matches on 1000 random cases"))
}

fn structural_invariants() -> Outcome {
    for n in 6..=12 {
        let g = gn(n)?;
        let graph = g.graph();
        let m = n - 1;
        ensure((0..m).all(|v| graph.degree(v) == 3), || {
            format!("G_{n}: v-degree != 3")
        })?;
        ensure((m..2 * m).all(|v| graph.degree(v) == n - 3), || {
            format!("G_{n}: w-degree != n-3")
        })?;
        ensure(graph.edge_count() == n * (n - 1) / 2, || {
            format!("G_{n}: edge count")
        })?;
        for map in DihedralMap::all(m) {
            let perm = g.apply_automorphism(map).map_err(err)?;
            let ok = (0..2 * m).all(|x| {
                (0..2 * m).all(|y| graph.has_edge(x, y) == graph.has_edge(perm[x], perm[y]))
            });
            ensure(ok, || format!("G_{n}: {map} is not an automorphism"))?;
        }
    }
    Ok("degrees, edge counts and all 2(n-1) dihedral automorphisms verified for n=6..12".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 theorem reproduction", theorem_reproduction),
        ("2 petersen identity", petersen_identity),
        ("3 freeness at scale", claim_free_at_scale),
        ("4 witness formulas", witness_formulas),
        ("5 negative control", negative_control),
        ("6 background facts", background_facts),
        ("7 oracle equivalence", oracle_equivalence),
        ("8 structural invariants", structural_invariants),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
