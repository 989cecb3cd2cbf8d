//! Acceptance run: one PASS/FAIL line per criterion, then a non-zero exit if
//! any line failed that is not listed in `KNOWN_FAILURES`.
//!
//! Run alone with `cargo test -p tricover --test acceptance`.

use std::time::Instant;

use rand::Rng;
use tricover::bench::{self, guess_bound, BenchConfig, GUESS_BOUND_C};
use tricover::cover3::{solve, solve_report, Variant};
use tricover::gen::{random_hypergraph, random_rects, random_unit_squares, random_weighted_graph, rng, scaling_unit_squares};
use tricover::geom::{dist2, int, point_in_rect, rat, ExtRect, ExtScalar, PointD};
use tricover::grid::{build_grid, capacity, count_maximal_grid_points, KGrid};
use tricover::kcenter::{rect_d3c_decide, rect_d3c_optimize, Metric, RadiusSearch};
use tricover::oracles::{brute_cover_k, brute_discrete_kcenter, hyperclique, OracleBudget};
use tricover::planar::KRect;
use tricover::reductions::*;
use tricover::Rational;

/// Lines that fail by construction: the literal reading of two hardness
/// constructions admits counterexamples. The repaired variants are checked
/// on separate lines.
const KNOWN_FAILURES: [&str; 2] = ["3a-d3c-r4-literal", "3e-maxcov-literal"];

struct Report {
    lines: Vec<(String, bool, String)>,
}

impl Report {
    fn line(&mut self, id: &str, ok: bool, detail: String) {
        let tag = match (ok, KNOWN_FAILURES.contains(&id)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("[{tag}] {id}: {detail}");
        self.lines.push((id.to_string(), ok, detail));
    }
}

fn budget() -> OracleBudget {
    OracleBudget { max_subsets: u128::MAX, wall_clock: None, ..Default::default() }
}

fn secs(t: Instant) -> String {
    format!("{:.1}s", t.elapsed().as_secs_f64())
}

fn oracle_weight(points: &[PointD], rects: &[ExtRect], weighted: bool) -> Option<Rational> {
    brute_cover_k(points, rects, 3, weighted, &budget()).unwrap().map(|x| x.1)
}

fn criterion_1(rep: &mut Report) {
    let t = Instant::now();
    let mut bad = Vec::new();
    for seed in 0..500u64 {
        let n = 5 + (seed as usize * 7) % 36;
        let inst = random_rects(&mut rng(10_000 + seed), n, true, 4 * n as i64);
        let want = oracle_weight(&inst.points, &inst.rects, true);
        for v in [Variant::Basic, Variant::WeightedRect] {
            let got = solve(&inst.points, &inst.rects, v, None).unwrap().map(|s| s.weight);
            if got != want {
                bad.push(format!("rect seed {seed} {v}"));
            }
        }
    }
    rep.line("1-weighted-rects", bad.is_empty(), format!("500 instances, basic + weighted-rect vs oracle, {} mismatches, {}", bad.len(), secs(t)));
    let t = Instant::now();
    let mut bad = Vec::new();
    for seed in 0..500u64 {
        let n = 5 + (seed as usize * 7) % 36;
        let weighted = seed % 2 == 0;
        let side = (n as f64).sqrt() as i64 + 1;
        let inst = random_unit_squares(&mut rng(20_000 + seed), n, weighted, side);
        let want = oracle_weight(&inst.points, &inst.rects, weighted);
        let variants: &[Variant] =
            if weighted { &[Variant::UnitW, Variant::WeightedRect, Variant::Basic] } else { &[Variant::UnitUnw, Variant::Unweighted, Variant::Basic] };
        for &v in variants {
            let got = solve(&inst.points, &inst.rects, v, None).unwrap().map(|s| s.weight);
            let same = if weighted { got == want } else { got.is_some() == want.is_some() };
            if !same {
                bad.push(format!("square seed {seed} {v}"));
            }
        }
    }
    rep.line("1-unit-squares", bad.is_empty(), format!("500 instances (half weighted), every unit and general variant vs oracle, {} mismatches, {}", bad.len(), secs(t)));
}

fn criterion_2(rep: &mut Report) {
    let t = Instant::now();
    let (mut wrong, mut non_monotone) = (0, 0);
    for seed in 0..200u64 {
        let mut r = rng(30_000 + seed);
        let n = r.gen_range(1..=25);
        let side = r.gen_range(5..200);
        let p: Vec<PointD> = (0..n).map(|_| PointD::from_ints(&[r.gen_range(0..=side), r.gen_range(0..=side)])).collect();
        let want = brute_discrete_kcenter(&p, 3.min(n), Metric::Linf, &budget()).unwrap().value;
        let got = rect_d3c_optimize(&p, None, RadiusSearch::SortedMatrix).unwrap().value;
        wrong += (got != want) as usize;
        let top = &want * int(2) + int(1);
        let mut prev = false;
        for i in 0..10 {
            let radius = &top * rat(i, 9);
            let yes = rect_d3c_decide(&p, None, &radius).unwrap().is_some();
            if (prev && !yes) || yes != (radius >= want) {
                non_monotone += 1;
            }
            prev = yes;
        }
    }
    rep.line(
        "2-d3c",
        wrong == 0 && non_monotone == 0,
        format!("200 instances n<=25: {wrong} optimizer mismatches, {non_monotone} ladder violations, {}", secs(t)),
    );
}

fn graph_iff(rep: &mut Report, id: &str, what: &str, graphs: &[WeightedGraph], make: impl Fn(&WeightedGraph) -> ReductionInstance) {
    let t = Instant::now();
    let mut bad = 0;
    for g in graphs {
        let src = Source::Graph(g.clone());
        let inst = make(g);
        if !verify_reduction(&src, &inst, &budget()).unwrap().agree {
            bad += 1;
        }
    }
    rep.line(id, bad == 0, format!("{what}: {} graphs, {bad} disagree, {}", graphs.len(), secs(t)));
}

fn hypergraph_full_minus(k: usize) -> Vec<PartiteHypergraph3> {
    let mut all = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                all.push([(a, 0), (b, 0), (c, 0)]);
            }
        }
    }
    let parts = vec![vec![rat(1, 2)]; 6];
    let mut out = Vec::new();
    let m = all.len();
    let mut drop = Vec::new();
    fn rec(start: usize, left: usize, m: usize, drop: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        f(drop);
        if left == 0 {
            return;
        }
        for i in start..m {
            drop.push(i);
            rec(i + 1, left - 1, m, drop, f);
            drop.pop();
        }
    }
    rec(0, k, m, &mut drop, &mut |d: &[usize]| {
        let edges = all.iter().enumerate().filter(|(i, _)| !d.contains(i)).map(|(_, e)| *e).collect();
        out.push(PartiteHypergraph3::new(parts.clone(), edges).unwrap());
    });
    out
}

fn two_per_part(count: u64, seed0: u64) -> Vec<PartiteHypergraph3> {
    (0..count)
        .map(|s| {
            let mut r = rng(seed0 + s);
            let p = [0.6, 0.8, 0.95][s as usize % 3];
            pad_parts(&random_hypergraph(&mut r, 6, 2, p, s % 2 == 0)).unwrap()
        })
        .collect()
}

fn hyper_iff(
    rep: &mut Report,
    id: &str,
    what: &str,
    hs: &[PartiteHypergraph3],
    make: impl Fn(&PartiteHypergraph3) -> tricover::Result<ReductionInstance>,
) {
    let t = Instant::now();
    let (mut bad, mut yes, mut rejected) = (0, 0, 0);
    for h in hs {
        let Ok(inst) = make(h) else {
            // Rejected inputs must be ones without a hyperclique.
            rejected += 1;
            bad += hyperclique(h, 6) as usize;
            continue;
        };
        let r = verify_reduction(&Source::Hypergraph(h.clone()), &inst, &budget()).unwrap();
        bad += !r.agree as usize;
        yes += r.source_yes as usize;
    }
    rep.line(
        id,
        bad == 0,
        format!("{what}: {} hypergraphs ({yes} with a 6-hyperclique, {rejected} rejected as degenerate), {bad} disagree, {}", hs.len(), secs(t)),
    );
}

fn criterion_3(rep: &mut Report) {
    let labeled: Vec<WeightedGraph> = (2..=6).flat_map(all_graphs).collect();
    graph_iff(rep, "3a-boxes-r3", "3-cover in R^3 iff triangle, every labeled graph on 2..6 vertices", &labeled, |g| gen_triangle_boxes_r3(g).unwrap());
    graph_iff(rep, "3a-orthants-r4", "3-cover by orthants in R^4 iff triangle, every labeled graph on 2..6 vertices", &labeled, |g| {
        gen_triangle_orthants_r4(g).unwrap()
    });
    let classes: Vec<WeightedGraph> = (2..=6).flat_map(graph_classes).collect();
    graph_iff(rep, "3a-d3c-r4-literal", "L-inf radius <= 5 iff triangle, closed cubes, one graph per isomorphism class on 2..6 vertices", &classes, |g| {
        gen_d3c_r4(g).unwrap()
    });
    graph_iff(rep, "3a-d3c-r4-open-shift", "same with open sides shifted inward", &classes, |g| gen_d3c_r4_open_shift(g).unwrap());

    let weighted: Vec<WeightedGraph> = (0..100u64).map(|s| random_weighted_graph(&mut rng(40_000 + s), 3 + s as usize % 4, 0.5, false)).collect();
    graph_iff(rep, "3b-weighted-triangle", "min 3-cover weight = 3n + w(min triangle), 100 weighted graphs on 3..6 vertices", &weighted, |g| {
        gen_weighted_triangle_r2(g).unwrap()
    });
    let weighted4: Vec<WeightedGraph> =
        (0..50u64).map(|s| random_weighted_graph(&mut rng(50_000 + s), 4 + s as usize % 2, 0.8, true)).collect();
    graph_iff(rep, "3c-4clique", "min 6-cover weight = 8n + w(min 4-clique), 50 weighted graphs on 4..5 vertices", &weighted4, |g| {
        gen_4clique_cover6_r2(g).unwrap()
    });

    let mut hs = hypergraph_full_minus(3);
    hs.extend(two_per_part(200, 60_000));
    let scope = "one vertex per part with up to 3 missing edges (exhaustive) plus 200 seeded with 2 per part";
    hyper_iff(rep, "3d-d2c-r13", &format!("squared radius < 41/4 iff hyperclique, {scope}"), &hs, |h| gen_hyperclique_d2c_r13(h));
    hyper_iff(rep, "3d-dkc", &format!("kappa=2, radius^2 < 16 in Q(sqrt39) iff hyperclique, {scope}"), &hs, |h| {
        gen_hyperclique_dkc(h, 2)
    });
    hyper_iff(rep, "3e-maxcov-literal", &format!("best pair covers >= 18(n^2+n) iff hyperclique, {scope}"), &hs, |h| gen_maxcov2_r12(h));
    hyper_iff(rep, "3e-maxcov-balanced", &format!("with the two balancing points, >= 18(n^2+n)+2, {scope}"), &hs, |h| {
        gen_maxcov2_r12_balanced(h)
    });
}

fn vertex_of(h: &PartiteHypergraph3, r: &ExtRect, p: usize) -> usize {
    match &r.sides[2 * p].hi {
        ExtScalar::Finite(x) => h.parts[p].iter().position(|l| l == x).unwrap(),
        _ => unreachable!(),
    }
}

fn criterion_4(rep: &mut Report) {
    let hs = two_per_part(40, 70_000);
    let (mut checked, mut bad) = (0, 0);
    for h in &hs {
        let inst = gen_hyperclique_d2c_r13(h).unwrap();
        let s = &inst.points[inst.roles.iter().position(|r| *r == PointRole::Anchor { group: 0 }).unwrap()];
        for (p, role) in inst.points.iter().zip(&inst.roles) {
            if let PointRole::Edge { group } = role {
                let want = if *group == 0 { rat(37, 4) } else { rat(93, 4) };
                checked += 1;
                bad += (dist2(s, p) != want) as usize;
            }
        }
    }
    rep.line("4-d2c-distances", bad == 0 && checked > 0, format!("{checked} points: squared distance 37/4 (first group) and 93/4 (second group), {bad} wrong"));

    let (mu, nu) = dkc_constants();
    let two = Q39::rational(int(2));
    let a = &mu.square() + &(&nu - &two).square();
    let b = &(&mu - &two).square() + &nu.square();
    rep.line("4-dkc-constants", a == Q39::rational(int(8)) && b == Q39::rational(int(6)), format!("mu^2+(nu-2)^2 = {a}, (mu-2)^2+nu^2 = {b}"));

    let (mut hits, mut misses, mut bad) = (0, 0, 0);
    for h in &hs {
        let n = h.parts[0].len();
        let inst = gen_maxcov2_r12(h).unwrap();
        let edges = h.edge_set();
        let (g0, g1): (Vec<&ExtRect>, Vec<&ExtRect>) = inst.ranges.iter().partition(|r| r.sides[0].hi.is_finite());
        for a in &g0 {
            for b in &g1 {
                for (ti, &[i, j, k]) in maxcov_triples().iter().enumerate() {
                    let (pair, single) = if i < 3 { (a, b) } else { (b, a) };
                    let e = normalize([(i, vertex_of(h, pair, i)), (j, vertex_of(h, pair, j)), (k, vertex_of(h, single, k))]);
                    let covered = inst
                        .points
                        .iter()
                        .zip(&inst.roles)
                        .filter(|(_, r)| matches!(r, PointRole::Triple { triple, .. } if *triple == ti))
                        .filter(|(p, _)| point_in_rect(p, a).unwrap() || point_in_rect(p, b).unwrap())
                        .count();
                    let hit = edges.contains(&e);
                    let want = n * n + n - (!hit) as usize;
                    bad += (covered != want) as usize;
                    if hit {
                        hits += 1;
                    } else {
                        misses += 1;
                    }
                }
            }
        }
    }
    rep.line(
        "4-maxcov-triple-counts",
        bad == 0 && hits > 0 && misses > 0,
        format!("{} cross-group pairs x triples: n^2+n on edges ({hits}), n^2+n-1 on non-edges ({misses}), {bad} wrong", hits + misses),
    );
}

fn criterion_5(rep: &mut Report) {
    let t = Instant::now();
    let mut worst = [0f64; 2];
    let mut bad = 0;
    for (slot, v) in [Variant::Basic, Variant::Unweighted].into_iter().enumerate() {
        let cfg = BenchConfig { variant: v, sizes: vec![8, 20, 40, 100, 300], reps: 3, seed: 80_000, g: None, oracle: false };
        for r in bench::run(&cfg, |_| {}).unwrap() {
            let cap = guess_bound(v, r.g).unwrap();
            worst[slot] = worst[slot].max(r.guesses as f64 / cap * GUESS_BOUND_C);
            bad += (r.guesses as f64 > cap) as usize;
        }
        for g in [1, 2, 3, 4] {
            for seed in 0..3 {
                let inst = bench::instance_for(v, 60, 81_000 + seed);
                let r = solve_report(&inst.points, &inst.rects, v, Some(g)).unwrap();
                let cap = guess_bound(v, g).unwrap();
                worst[slot] = worst[slot].max(r.guesses as f64 / cap * GUESS_BOUND_C);
                bad += (r.guesses as f64 > cap) as usize;
            }
        }
    }
    rep.line(
        "5-guess-bounds",
        bad == 0,
        format!("c = {GUESS_BOUND_C}: max guesses/g^8 (basic) = {:.2}, max guesses/g^5 (unweighted) = {:.2}, {bad} over, {}", worst[0], worst[1], secs(t)),
    );

    let mut bad = 0;
    let mut r = rng(90_000);
    for _ in 0..200 {
        let g = r.gen_range(1..=64usize);
        let m = r.gen_range(1..=4 * g * g / 3 + 1);
        let s: Vec<Vec<usize>> = (0..m).map(|_| vec![r.gen_range(1..=g), r.gen_range(1..=g)]).collect();
        bad += (count_maximal_grid_points(&s) > 2 * g - 1) as usize;
    }
    rep.line("5-maximal-points", bad == 0, format!("200 random subsets of {{1..g}}^2, g <= 64: {bad} exceed 2g-1"));

    let mut bad = 0;
    let mut grids = 0;
    for seed in 0..200u64 {
        let mut r = rng(91_000 + seed);
        let n = r.gen_range(1..200);
        let g = r.gen_range(1..30);
        let side = r.gen_range(5..500);
        let inst = random_rects(&mut r, n, false, side);
        let grid = build_grid(&inst.rects, g);
        let (cc, rc) = grid.occupancy(&inst.rects);
        bad += cc.iter().chain(&rc).any(|&c| c > capacity(n, g)) as usize;
        let keys: Vec<KRect> = (0..n).map(|_| {
            let (a, b, c, d) = (r.gen_range(-50..50), r.gen_range(-50..50), r.gen_range(-50..50), r.gen_range(-50..50));
            KRect::new(a.min(b), a.max(b), c.min(d), c.max(d))
        }).collect();
        bad += (KGrid::build(&keys, g).max_occupancy(&keys) > capacity(n, g)) as usize;
        grids += 2;
    }
    rep.line("5-occupancy", bad == 0, format!("{grids} grids: {bad} with a column or row over ceil(4n/g)"));
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    v[v.len() / 2]
}

fn criterion_6(rep: &mut Report) {
    let t = Instant::now();
    let sizes = [1usize << 12, 1 << 13, 1 << 14, 1 << 15];
    let mut med = Vec::new();
    for &n in &sizes {
        let mut times = Vec::new();
        for rep_i in 0..5u64 {
            let inst = scaling_unit_squares(&mut rng(100_000 + rep_i), n);
            let t0 = Instant::now();
            let s = solve(&inst.points, &inst.rects, Variant::UnitUnw, None).unwrap();
            times.push(t0.elapsed().as_secs_f64());
            assert!(s.is_some(), "planted cover missing at n = {n}");
        }
        med.push(median(times));
    }
    let ratios: Vec<f64> = med.windows(2).map(|w| w[1] / w[0]).collect();
    let limit = 2f64.powf(1.9);
    let ok = ratios.iter().all(|&r| r <= limit);
    rep.line(
        "6-scaling-ratio",
        ok,
        format!(
            "median seconds {:?}, ratios {:?} (limit {limit:.3}), {}",
            med.iter().map(|x| (x * 1000.0).round() / 1000.0).collect::<Vec<_>>(),
            ratios.iter().map(|x| (x * 100.0).round() / 100.0).collect::<Vec<_>>(),
            secs(t)
        ),
    );

    // Brute force on the same family, timed at small sizes and extrapolated
    // with its cubic subset count.
    let mut per_subset = Vec::new();
    for &n in &[128usize, 256] {
        let inst = scaling_unit_squares(&mut rng(110_000), n);
        let t0 = Instant::now();
        let w = brute_cover_k(&inst.points, &inst.rects, 3, false, &budget()).unwrap();
        assert!(w.is_some());
        let subsets = tricover::oracles::binomial(n, 3) as f64;
        per_subset.push(t0.elapsed().as_secs_f64() / subsets);
    }
    let n = *sizes.last().unwrap();
    let brute_est = per_subset.iter().cloned().fold(f64::INFINITY, f64::min) * tricover::oracles::binomial(n, 3) as f64;
    let speedup = brute_est / med[3];
    rep.line(
        "6-vs-brute",
        speedup >= 100.0,
        format!("n = {n}: solver {:.2}s, brute force extrapolated {:.0}s, speedup {speedup:.0}x", med[3], brute_est),
    );
}

fn main() {
    // Under `cargo test -- --list` or filtered runs, do nothing.
    let args: Vec<String> = std::env::args().collect();
    if args.iter().any(|a| a == "--list") {
        return;
    }
    let t = Instant::now();
    let mut rep = Report { lines: Vec::new() };
    criterion_1(&mut rep);
    criterion_2(&mut rep);
    criterion_3(&mut rep);
    criterion_4(&mut rep);
    criterion_5(&mut rep);
    criterion_6(&mut rep);
    let unexpected: Vec<&str> = rep.lines.iter().filter(|(id, ok, _)| !ok && !KNOWN_FAILURES.contains(&id.as_str())).map(|(id, _, _)| id.as_str()).collect();
    let passed = rep.lines.iter().filter(|l| l.1).count();
    println!("acceptance: {passed}/{} lines pass, {} unexpected failures, {}", rep.lines.len(), unexpected.len(), secs(t));
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
