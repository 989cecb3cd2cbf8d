//! Seeded random instances for tests, benchmarks and the command line.
//!
//! All randomness comes from ChaCha8 seeded with a 64-bit integer, so a seed
//! reproduces an instance bit for bit on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{int, rat, ExtRect, PointD, Rational};
use crate::reductions::{spread_labels, PartiteHypergraph3, WeightedGraph};

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug, Default)]
pub struct Instance {
    pub points: Vec<PointD>,
    pub rects: Vec<ExtRect>,
}

fn span(rng: &mut InstanceRng, max: i64) -> (i64, i64) {
    let a = rng.gen_range(0..=max);
    let b = rng.gen_range(0..=max);
    (a.min(b), a.max(b))
}

/// `n` points and `n` rectangles on the integer grid `[0, side]²`. About half
/// the instances plant a three-rectangle cover.
pub fn random_rects(rng: &mut InstanceRng, n: usize, weighted: bool, side: i64) -> Instance {
    let weight = |rng: &mut InstanceRng| weighted.then(|| Rational::from_integer(rng.gen_range(1..=100).into()));
    let mut rects = Vec::with_capacity(n);
    let mut points = Vec::with_capacity(n);
    let planted = n >= 3 && rng.gen_bool(0.5);
    let mut boxes = Vec::new();
    for _ in 0..n {
        let (x0, x1) = span(rng, side);
        let (y0, y1) = span(rng, side);
        boxes.push((x0, x1, y0, y1));
    }
    for _ in 0..n {
        let (x, y) = if planted {
            let &(x0, x1, y0, y1) = boxes[..3].choose(rng).unwrap();
            (rng.gen_range(x0..=x1), rng.gen_range(y0..=y1))
        } else {
            (rng.gen_range(0..=side), rng.gen_range(0..=side))
        };
        points.push(PointD::from_ints(&[x, y]));
    }
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    for (i, &(x0, x1, y0, y1)) in boxes.iter().enumerate() {
        let w = weight(rng);
        rects.push(ExtRect::closed2(int(x0), int(x1), int(y0), int(y1), w, ids[i]));
    }
    Instance { points, rects }
}

/// `n` points and `n` closed unit squares with corners on the grid of step
/// `1/4` inside `[0, side]²`. About half the instances plant a three-square
/// cover.
pub fn random_unit_squares(rng: &mut InstanceRng, n: usize, weighted: bool, side: i64) -> Instance {
    let q = 4 * side;
    let mut corners = Vec::with_capacity(n);
    for _ in 0..n {
        corners.push((rng.gen_range(0..=q - 4), rng.gen_range(0..=q - 4)));
    }
    let planted = n >= 3 && rng.gen_bool(0.5);
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        let (x, y) = if planted {
            let &(cx, cy) = corners[..3].choose(rng).unwrap();
            (cx + rng.gen_range(0..=4), cy + rng.gen_range(0..=4))
        } else {
            (rng.gen_range(0..=q), rng.gen_range(0..=q))
        };
        points.push(PointD::new(vec![rat(x, 4), rat(y, 4)]));
    }
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let rects = corners
        .iter()
        .enumerate()
        .map(|(i, &(cx, cy))| {
            let w = weighted.then(|| Rational::from_integer(rng.gen_range(1..=100).into()));
            ExtRect::closed2(rat(cx, 4), rat(cx + 4, 4), rat(cy, 4), rat(cy + 4, 4), w, ids[i])
        })
        .collect();
    Instance { points, rects }
}

/// Scaling workload: `n` unit squares with real-valued spread and `n` points
/// drawn from three planted squares, so a cover always exists.
pub fn scaling_unit_squares(rng: &mut InstanceRng, n: usize) -> Instance {
    let side = ((n as f64).sqrt() as i64).max(4);
    let den = 1 << 20;
    let coord = |rng: &mut InstanceRng| rng.gen_range(0..side * den);
    let mut corners: Vec<(i64, i64)> = (0..n).map(|_| (coord(rng), coord(rng))).collect();
    // Planted squares overlap a little so the instance is not split trivially.
    let (px, py) = (side * den / 2, side * den / 2);
    corners[0] = (px, py);
    corners[1] = (px + den / 2, py + den / 3);
    corners[2] = (px + den, py - den / 4);
    let points = (0..n)
        .map(|_| {
            let (cx, cy) = corners[rng.gen_range(0..3)];
            PointD::new(vec![rat(cx + rng.gen_range(0..=den), den), rat(cy + rng.gen_range(0..=den), den)])
        })
        .collect();
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let rects = corners
        .iter()
        .enumerate()
        .map(|(i, &(cx, cy))| ExtRect::closed2(rat(cx, den), rat(cx + den, den), rat(cy, den), rat(cy + den, den), None, ids[i]))
        .collect();
    Instance { points, rects }
}

/// Weighted graph on `n ≥ 2` vertices with labels spread over `[0, 1/10]`;
/// each edge is kept with probability `p` and weighs `k/1000` for `k ≤ 100`.
/// With `isolate_zero` the vertex labelled 0 gets no edges.
pub fn random_weighted_graph(rng: &mut InstanceRng, n: usize, p: f64, isolate_zero: bool) -> WeightedGraph {
    let mut edges = Vec::new();
    let first = isolate_zero as usize;
    for u in first..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, Some(rat(rng.gen_range(0..=100), 1000))));
            }
        }
    }
    WeightedGraph { labels: spread_labels(n), edges }
}

/// Hypergraph with `parts` parts of `per_part` vertices. Labels are distinct
/// multiples of 1/16 in `[0, 1]`. Each cross-part triple is an edge with
/// probability `p`; with `plant` a random hyperclique over all parts is added.
pub fn random_hypergraph(rng: &mut InstanceRng, parts: usize, per_part: usize, p: f64, plant: bool) -> PartiteHypergraph3 {
    let labels: Vec<Vec<Rational>> = (0..parts)
        .map(|_| {
            let mut ks: Vec<i64> = (0..=16).collect();
            ks.shuffle(rng);
            ks.truncate(per_part);
            ks.into_iter().map(|k| rat(k, 16)).collect()
        })
        .collect();
    let chosen: Vec<usize> = (0..parts).map(|_| rng.gen_range(0..per_part)).collect();
    let mut edges = Vec::new();
    for a in 0..parts {
        for b in a + 1..parts {
            for c in b + 1..parts {
                for x in 0..per_part {
                    for y in 0..per_part {
                        for z in 0..per_part {
                            let in_clique = plant && chosen[a] == x && chosen[b] == y && chosen[c] == z;
                            if in_clique || rng.gen_bool(p) {
                                edges.push([(a, x), (b, y), (c, z)]);
                            }
                        }
                    }
                }
            }
        }
    }
    PartiteHypergraph3 { parts: labels, edges }
}
