//! Exhaustive reference solvers. They share no code with the fast paths
//! beyond exact geometric predicates.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geom::{dist2, dist_linf, point_in_rect, ExtRect, PointD};
use crate::kcenter::{CenterSolution, Metric};
use crate::reductions::{PartiteHypergraph3, WeightedGraph};
use crate::Rational;

/// Size limits checked before any enumeration starts.
#[derive(Clone, Debug)]
pub struct OracleBudget {
    pub max_subsets: u128,
    pub max_points: usize,
    pub wall_clock: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_subsets: 2_000_000_000, max_points: 1 << 16, wall_clock: Some(Duration::from_secs(600)) }
    }
}

impl OracleBudget {
    pub(crate) fn check(&self, subsets: u128, points: usize) -> Result<()> {
        if subsets > self.max_subsets {
            return Err(Error::Budget(format!("{subsets} subsets exceed the limit {}", self.max_subsets)));
        }
        if points > self.max_points {
            return Err(Error::Budget(format!("{points} points exceed the limit {}", self.max_points)));
        }
        Ok(())
    }

    pub(crate) fn clock(&self) -> Clock {
        Clock { start: self.wall_clock.map(|_| Instant::now()), cap: self.wall_clock, ticks: 0 }
    }
}

pub(crate) struct Clock {
    // Only read when a cap is set; `Instant` is unavailable in the browser.
    start: Option<Instant>,
    cap: Option<Duration>,
    ticks: u32,
}

impl Clock {
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 4096 == 0 {
            if let (Some(c), Some(t)) = (self.cap, self.start) {
                if t.elapsed() > c {
                    return Err(Error::Budget("wall-clock limit reached".into()));
                }
            }
        }
        Ok(())
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Exact weights multiplied by a common denominator.
fn scaled(ws: &[Rational]) -> Result<(Vec<i128>, BigInt)> {
    let scale = ws.iter().fold(BigInt::one(), |a, w| a.lcm(w.denom()));
    let mut out = Vec::with_capacity(ws.len());
    for w in ws {
        let v = w.numer() * (&scale / w.denom());
        out.push(v.to_i128().filter(|v| v.abs() < 1 << 100).ok_or_else(|| Error::Invalid("weight too large".into()))?);
    }
    Ok((out, scale))
}

/// Minimum-weight `k`-subset of `rects` covering `points`, with ties broken by
/// the lexicographically first id tuple. Unweighted mode returns the first
/// feasible subset and reports its size as the weight.
pub fn brute_cover_k(
    points: &[PointD],
    rects: &[ExtRect],
    k: usize,
    weighted: bool,
    budget: &OracleBudget,
) -> Result<Option<(Vec<usize>, Rational)>> {
    if !(1..=6).contains(&k) {
        return Err(Error::Invalid(format!("k = {k} is outside 1..=6")));
    }
    budget.check(binomial(rects.len(), k), points.len())?;
    let mut order: Vec<usize> = (0..rects.len()).collect();
    order.sort_by_key(|&i| rects[i].id);
    let words = points.len().div_ceil(64).max(1);
    let mut masks = Vec::with_capacity(rects.len());
    for &i in &order {
        let mut m = vec![0u64; words];
        for (j, p) in points.iter().enumerate() {
            if point_in_rect(p, &rects[i])? {
                m[j / 64] |= 1 << (j % 64);
            }
        }
        masks.push(m);
    }
    let mut full = vec![0u64; words];
    for j in 0..points.len() {
        full[j / 64] |= 1 << (j % 64);
    }
    let raw: Vec<Rational> =
        order.iter().map(|&i| if weighted { rects[i].weight_or_one() } else { Rational::one() }).collect();
    let (w, scale) = scaled(&raw)?;
    // Suffix minima bound the cost of the remaining picks.
    let m = w.len();
    let mut suffix_min = vec![i128::MAX; m + 1];
    for i in (0..m).rev() {
        suffix_min[i] = suffix_min[i + 1].min(w[i]);
    }
    // Union of masks from each index on; prunes branches that can no longer cover.
    let mut suffix_union = vec![vec![0u64; words]; m + 1];
    for i in (0..m).rev() {
        suffix_union[i] = suffix_union[i + 1].iter().zip(&masks[i]).map(|(a, b)| a | b).collect();
    }
    let mut st = Search {
        masks: &masks,
        suffix_union: &suffix_union,
        full: &full,
        w: &w,
        suffix_min: &suffix_min,
        k,
        best: None,
        stack: Vec::with_capacity(k),
        first_only: !weighted,
        clock: budget.clock(),
    };
    let acc = vec![0u64; words];
    st.go(0, &acc, 0)?;
    Ok(st.best.map(|(c, picks)| {
        let ids = picks.iter().map(|&i| rects[order[i]].id).collect();
        (ids, Rational::new(BigInt::from(c), scale.clone()))
    }))
}

struct Search<'a> {
    masks: &'a [Vec<u64>],
    suffix_union: &'a [Vec<u64>],
    full: &'a [u64],
    w: &'a [i128],
    suffix_min: &'a [i128],
    k: usize,
    best: Option<(i128, Vec<usize>)>,
    stack: Vec<usize>,
    first_only: bool,
    clock: Clock,
}

impl Search<'_> {
    fn go(&mut self, from: usize, acc: &[u64], cost: i128) -> Result<bool> {
        if self.stack.len() == self.k {
            if acc == self.full && self.best.as_ref().is_none_or(|b| cost < b.0) {
                self.best = Some((cost, self.stack.clone()));
                return Ok(self.first_only);
            }
            return Ok(false);
        }
        let left = self.k - self.stack.len();
        let m = self.masks.len();
        for i in from..m {
            if m - i < left {
                break;
            }
            self.clock.tick()?;
            if acc.iter().zip(&self.suffix_union[i]).zip(self.full).any(|((a, u), f)| a | u != *f) {
                break;
            }
            let lower = cost + self.w[i] + (left as i128 - 1) * self.suffix_min[i + 1].min(i128::MAX / 8);
            if left == 1 {
                if self.best.as_ref().is_some_and(|b| cost + self.w[i] >= b.0) {
                    continue;
                }
            } else if self.best.as_ref().is_some_and(|b| lower >= b.0) {
                continue;
            }
            let next: Vec<u64> = acc.iter().zip(&self.masks[i]).map(|(a, b)| a | b).collect();
            self.stack.push(i);
            let stop = self.go(i + 1, &next, cost + self.w[i])?;
            self.stack.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Optimal discrete `k`-center by enumerating all center subsets. The value
/// is the radius under L∞ and the squared radius under L2.
pub fn brute_discrete_kcenter(points: &[PointD], k: usize, metric: Metric, budget: &OracleBudget) -> Result<CenterSolution> {
    let n = points.len();
    if k == 0 || k > n {
        return Err(Error::Invalid(format!("k = {k} with {n} points")));
    }
    budget.check(binomial(n, k), n)?;
    let d: Vec<Vec<Rational>> = points
        .iter()
        .map(|a| {
            points
                .iter()
                .map(|b| match metric {
                    Metric::Linf => dist_linf(a, b),
                    Metric::L2 => dist2(a, b),
                })
                .collect()
        })
        .collect();
    let (value, centers) = kcenter_on_matrix(&d, k, budget)?;
    Ok(CenterSolution { value, metric, centers })
}

/// Optimal `k` centers given the full distance matrix `d[center][point]`.
/// Ties go to the lexicographically first center set.
pub fn kcenter_on_matrix<T: Ord + Clone>(d: &[Vec<T>], k: usize, budget: &OracleBudget) -> Result<(T, Vec<usize>)> {
    let n = d.len();
    if k == 0 || k > n {
        return Err(Error::Invalid(format!("k = {k} with {n} points")));
    }
    budget.check(binomial(n, k), n)?;
    let mut vals: Vec<&T> = d.iter().flatten().collect();
    vals.sort();
    vals.dedup();
    let rank: Vec<Vec<u32>> =
        d.iter().map(|row| row.iter().map(|v| vals.binary_search(&v).unwrap() as u32).collect()).collect();
    let mut best: Option<(u32, Vec<usize>)> = None;
    let mut clock = budget.clock();
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        clock.tick()?;
        let mut worst = 0u32;
        for p in 0..n {
            let near = combo.iter().map(|&c| rank[c][p]).min().unwrap();
            worst = worst.max(near);
            if best.as_ref().is_some_and(|b| worst >= b.0) {
                break;
            }
        }
        if best.as_ref().is_none_or(|b| worst < b.0) {
            best = Some((worst, combo.clone()));
        }
        if !next_combination(&mut combo, n) {
            break;
        }
    }
    let (r, centers) = best.unwrap();
    Ok((vals[r as usize].clone(), centers))
}

/// Advances to the next `k`-combination of `0..n` in lexicographic order.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Pair of ranges covering the most points of a multiset, counted by
/// inclusion–exclusion of per-range counts. Ties go to the first pair by id.
pub fn brute_maxcov(points: &[PointD], rects: &[ExtRect], budget: &OracleBudget) -> Result<Option<((usize, usize), usize)>> {
    budget.check(binomial(rects.len(), 2), points.len())?;
    let mut order: Vec<usize> = (0..rects.len()).collect();
    order.sort_by_key(|&i| rects[i].id);
    let words = points.len().div_ceil(64).max(1);
    let mut masks = Vec::with_capacity(rects.len());
    for &i in &order {
        let mut m = vec![0u64; words];
        for (j, p) in points.iter().enumerate() {
            if point_in_rect(p, &rects[i])? {
                m[j / 64] |= 1 << (j % 64);
            }
        }
        masks.push(m);
    }
    let single: Vec<usize> = masks.iter().map(|m| m.iter().map(|w| w.count_ones() as usize).sum()).collect();
    let mut best: Option<((usize, usize), usize)> = None;
    let mut clock = budget.clock();
    for a in 0..masks.len() {
        for b in a + 1..masks.len() {
            clock.tick()?;
            let both: usize = masks[a].iter().zip(&masks[b]).map(|(x, y)| (x & y).count_ones() as usize).sum();
            let c = single[a] + single[b] - both;
            if best.is_none_or(|(_, bc)| c > bc) {
                best = Some(((rects[order[a]].id, rects[order[b]].id), c));
            }
        }
    }
    Ok(best)
}

/// Minimum-weight triangle; unweighted edges weigh zero.
pub fn graph_min_triangle(g: &WeightedGraph) -> Option<([usize; 3], Rational)> {
    let a = g.adjacency();
    let n = g.n();
    let mut best: Option<([usize; 3], Rational)> = None;
    for i in 0..n {
        for j in i + 1..n {
            let Some(wij) = &a[i][j] else { continue };
            for k in j + 1..n {
                if let (Some(wjk), Some(wik)) = (&a[j][k], &a[i][k]) {
                    let w = wij + wjk + wik;
                    if best.as_ref().is_none_or(|b| w < b.1) {
                        best = Some(([i, j, k], w));
                    }
                }
            }
        }
    }
    best
}

pub fn graph_has_triangle(g: &WeightedGraph) -> bool {
    graph_min_triangle(g).is_some()
}

/// Minimum-weight 4-clique, weight being the sum of its six edges.
pub fn graph_min_4clique(g: &WeightedGraph) -> Option<([usize; 4], Rational)> {
    let a = g.adjacency();
    let n = g.n();
    let mut best: Option<([usize; 4], Rational)> = None;
    let mut c = vec![0, 1, 2, 3];
    if n < 4 {
        return None;
    }
    loop {
        let mut w = Rational::zero();
        let mut ok = true;
        'pairs: for x in 0..4 {
            for y in x + 1..4 {
                match &a[c[x]][c[y]] {
                    Some(v) => w += v,
                    None => {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
        }
        if ok && best.as_ref().is_none_or(|b| w < b.1) {
            best = Some(([c[0], c[1], c[2], c[3]], w));
        }
        if !next_combination(&mut c, n) {
            break;
        }
    }
    best
}

/// True iff some `size` vertices from distinct parts have every triple as an edge.
pub fn hyperclique(h: &PartiteHypergraph3, size: usize) -> bool {
    let edges = h.edge_set();
    let m = h.parts.len();
    if size > m {
        return false;
    }
    if size < 3 {
        return (0..size).all(|i| !h.parts[i].is_empty()) || size == 0;
    }
    let mut parts: Vec<usize> = (0..size).collect();
    loop {
        let mut chosen = Vec::with_capacity(size);
        if extend_clique(h, &edges, &parts, &mut chosen) {
            return true;
        }
        if !next_combination(&mut parts, m) {
            return false;
        }
    }
}

fn extend_clique(
    h: &PartiteHypergraph3,
    edges: &std::collections::HashSet<[(usize, usize); 3]>,
    parts: &[usize],
    chosen: &mut Vec<(usize, usize)>,
) -> bool {
    if chosen.len() == parts.len() {
        return true;
    }
    let p = parts[chosen.len()];
    for v in 0..h.parts[p].len() {
        let cand = (p, v);
        let ok = (0..chosen.len()).all(|i| {
            (i + 1..chosen.len()).all(|j| edges.contains(&crate::reductions::normalize([chosen[i], chosen[j], cand])))
        });
        if ok {
            chosen.push(cand);
            if extend_clique(h, edges, parts, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
