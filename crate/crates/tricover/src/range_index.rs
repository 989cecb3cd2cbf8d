//! Static orthogonal range structures: a planar point index answering counts
//! and axis extremes, and a 4D dominance index answering minimum-weight
//! rectangle-enclosure queries.

use crate::geom::{BBox, ExtRect, ExtScalar, Interval, PointD, Rational};
use crate::planar::{KRect, NEG, POS};
use crate::wavelet::WaveletMatrix;

/// Point index over integer keys.
#[derive(Clone, Debug, Default)]
pub struct KeyPointIndex {
    xkeys: Vec<i64>,
    ykeys: Vec<i64>,
    by_x: WaveletMatrix,
    by_y: WaveletMatrix,
}

impl KeyPointIndex {
    pub fn new(pts: &[(i64, i64)]) -> Self {
        let n = pts.len();
        let mut xo: Vec<usize> = (0..n).collect();
        xo.sort_by_key(|&i| (pts[i].0, pts[i].1, i));
        let mut yo: Vec<usize> = (0..n).collect();
        yo.sort_by_key(|&i| (pts[i].1, pts[i].0, i));
        let mut xpos = vec![0u32; n];
        let mut ypos = vec![0u32; n];
        for (p, &i) in xo.iter().enumerate() {
            xpos[i] = p as u32;
        }
        for (p, &i) in yo.iter().enumerate() {
            ypos[i] = p as u32;
        }
        let seq_x: Vec<u32> = xo.iter().map(|&i| ypos[i]).collect();
        let seq_y: Vec<u32> = yo.iter().map(|&i| xpos[i]).collect();
        KeyPointIndex {
            xkeys: xo.iter().map(|&i| pts[i].0).collect(),
            ykeys: yo.iter().map(|&i| pts[i].1).collect(),
            by_x: WaveletMatrix::new(&seq_x),
            by_y: WaveletMatrix::new(&seq_y),
        }
    }

    pub fn len(&self) -> usize {
        self.xkeys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xkeys.is_empty()
    }

    #[inline]
    fn span(keys: &[i64], lo: i64, hi: i64) -> (usize, usize) {
        if lo > hi {
            return (0, 0);
        }
        let l = keys.partition_point(|&k| k < lo);
        let r = keys.partition_point(|&k| k <= hi);
        (l, r.max(l))
    }

    pub fn count(&self, q: &KRect) -> usize {
        let (l, r) = Self::span(&self.xkeys, q.xl, q.xh);
        let (u, v) = Self::span(&self.ykeys, q.yl, q.yh);
        if l >= r || u >= v {
            return 0;
        }
        self.by_x.count_range(l, r, u as u64, v as u64)
    }

    /// Bounding box (in keys) of the points inside `q`.
    pub fn extremes(&self, q: &KRect) -> Option<KRect> {
        let (l, r) = Self::span(&self.xkeys, q.xl, q.xh);
        let (u, v) = Self::span(&self.ykeys, q.yl, q.yh);
        if l >= r || u >= v {
            return None;
        }
        let miny = self.by_x.next_value(l, r, u as u64).filter(|&p| p < v as u64)?;
        let maxy = self.by_x.prev_value(l, r, v as u64)?;
        let minx = self.by_y.next_value(u, v, l as u64)?;
        let maxx = self.by_y.prev_value(u, v, r as u64)?;
        Some(KRect {
            xl: self.xkeys[minx as usize],
            xh: self.xkeys[maxx as usize],
            yl: self.ykeys[miny as usize],
            yh: self.ykeys[maxy as usize],
        })
    }

    pub fn extremes_union(&self, qs: &[KRect]) -> Option<KRect> {
        qs.iter().filter_map(|q| self.extremes(q)).reduce(|a, b| a.hull(&b))
    }
}

/// Planar point index over exact coordinates.
#[derive(Clone, Debug)]
pub struct PointIndex {
    xs: Vec<Rational>,
    ys: Vec<Rational>,
    core: KeyPointIndex,
}

fn lower_key(vals: &[Rational], s: &ExtScalar, closed: bool) -> i64 {
    match s {
        ExtScalar::NegInf => NEG,
        ExtScalar::PosInf => POS,
        ExtScalar::Finite(v) => {
            if closed {
                vals.partition_point(|a| a < v) as i64
            } else {
                vals.partition_point(|a| a <= v) as i64
            }
        }
    }
}

fn upper_key(vals: &[Rational], s: &ExtScalar, closed: bool) -> i64 {
    match s {
        ExtScalar::NegInf => NEG,
        ExtScalar::PosInf => POS,
        ExtScalar::Finite(v) => {
            if closed {
                vals.partition_point(|a| a <= v) as i64 - 1
            } else {
                vals.partition_point(|a| a < v) as i64 - 1
            }
        }
    }
}

impl PointIndex {
    pub fn xs(&self) -> &[Rational] {
        &self.xs
    }

    fn query_key(&self, r: &ExtRect) -> KRect {
        let (sx, sy) = (&r.sides[0], &r.sides[1]);
        KRect {
            xl: lower_key(&self.xs, &sx.lo, sx.lo_closed),
            xh: upper_key(&self.xs, &sx.hi, sx.hi_closed),
            yl: lower_key(&self.ys, &sy.lo, sy.lo_closed),
            yh: upper_key(&self.ys, &sy.hi, sy.hi_closed),
        }
    }
}

pub fn build_point_index(points: &[PointD]) -> PointIndex {
    let mut xs: Vec<Rational> = points.iter().map(|p| p.coords[0].clone()).collect();
    let mut ys: Vec<Rational> = points.iter().map(|p| p.coords[1].clone()).collect();
    xs.sort();
    xs.dedup();
    ys.sort();
    ys.dedup();
    let keys: Vec<(i64, i64)> = points
        .iter()
        .map(|p| {
            (
                xs.binary_search(&p.coords[0]).unwrap() as i64,
                ys.binary_search(&p.coords[1]).unwrap() as i64,
            )
        })
        .collect();
    PointIndex { core: KeyPointIndex::new(&keys), xs, ys }
}

/// Min/max x and y over the points inside the union of `ranges`.
pub fn extremes_in_ranges(idx: &PointIndex, ranges: &[ExtRect]) -> Option<BBox> {
    let qs: Vec<KRect> = ranges.iter().map(|r| idx.query_key(r)).collect();
    let b = idx.core.extremes_union(&qs)?;
    Some(BBox {
        xmin: idx.xs[b.xl as usize].clone(),
        xmax: idx.xs[b.xh as usize].clone(),
        ymin: idx.ys[b.yl as usize].clone(),
        ymax: idx.ys[b.yh as usize].clone(),
    })
}

pub fn count_in_rect(idx: &PointIndex, r: &ExtRect) -> usize {
    idx.core.count(&idx.query_key(r))
}

/// Weight and tie-break key of an indexed rectangle: smaller is better.
pub type Rank = (i64, u32);

#[derive(Clone, Copy, Debug)]
struct Node {
    min: [i64; 4],
    max: [i64; 4],
    best: Rank,
    lo: u32,
    hi: u32,
    left: u32,
    right: u32,
}

const LEAF: usize = 8;
const NONE: u32 = u32::MAX;

/// Minimum-weight enclosure index over integer-keyed rectangles.
///
/// Rectangle `[a,b]×[c,d]` becomes the 4D point `(a, -b, c, -d)`; it encloses
/// the box `[p,q]×[s,t]` iff that point is dominated by `(p, -q, s, -t)`.
#[derive(Clone, Debug, Default)]
pub struct KeyEnclosureIndex {
    pts: Vec<[i64; 4]>,
    rank: Vec<Rank>,
    nodes: Vec<Node>,
}

impl KeyEnclosureIndex {
    /// `weights[i]` and index `i` form the ranking of rectangle `i`.
    pub fn new(rects: &[KRect], weights: &[i64]) -> Self {
        let mut items: Vec<([i64; 4], Rank)> = rects
            .iter()
            .zip(weights)
            .enumerate()
            .map(|(i, (r, &w))| ([r.xl, -r.xh, r.yl, -r.yh], (w, i as u32)))
            .collect();
        let mut nodes = Vec::new();
        if !items.is_empty() {
            let n = items.len();
            Self::build(&mut items, 0, n, 0, &mut nodes);
        }
        KeyEnclosureIndex {
            pts: items.iter().map(|t| t.0).collect(),
            rank: items.iter().map(|t| t.1).collect(),
            nodes,
        }
    }

    fn build(items: &mut [([i64; 4], Rank)], lo: usize, hi: usize, depth: usize, nodes: &mut Vec<Node>) -> u32 {
        let slice = &mut items[lo..hi];
        let mut min = [i64::MAX; 4];
        let mut max = [i64::MIN; 4];
        let mut best = (i64::MAX, u32::MAX);
        for (p, r) in slice.iter() {
            for d in 0..4 {
                min[d] = min[d].min(p[d]);
                max[d] = max[d].max(p[d]);
            }
            if *r < best {
                best = *r;
            }
        }
        let id = nodes.len() as u32;
        nodes.push(Node { min, max, best, lo: lo as u32, hi: hi as u32, left: NONE, right: NONE });
        if hi - lo > LEAF {
            let dim = (0..4).max_by_key(|&d| (max[d] as i128 - min[d] as i128, 4 - d as i128)).unwrap_or(depth % 4);
            let mid = (hi - lo) / 2;
            slice.select_nth_unstable_by(mid, |a, b| a.0[dim].cmp(&b.0[dim]));
            let l = Self::build(items, lo, lo + mid, depth + 1, nodes);
            let r = Self::build(items, lo + mid, hi, depth + 1, nodes);
            nodes[id as usize].left = l;
            nodes[id as usize].right = r;
        }
        id
    }

    pub fn len(&self) -> usize {
        self.pts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pts.is_empty()
    }

    /// The `k` best enclosers of `b` by (weight, index), skipping `exclude`.
    pub fn top_k(&self, b: &KRect, k: usize, exclude: &[u32], out: &mut Vec<Rank>) {
        out.clear();
        if self.nodes.is_empty() || k == 0 {
            return;
        }
        let q = [b.xl, -b.xh, b.yl, -b.yh];
        self.visit(0, &q, k, exclude, out);
    }

    fn visit(&self, ni: u32, q: &[i64; 4], k: usize, exclude: &[u32], out: &mut Vec<Rank>) {
        let node = &self.nodes[ni as usize];
        if out.len() == k && node.best >= out[k - 1] {
            return;
        }
        if (0..4).any(|d| node.min[d] > q[d]) {
            return;
        }
        if node.left == NONE {
            let inside = (0..4).all(|d| node.max[d] <= q[d]);
            for i in node.lo as usize..node.hi as usize {
                let r = self.rank[i];
                if out.len() == k && r >= out[k - 1] {
                    continue;
                }
                if exclude.contains(&r.1) {
                    continue;
                }
                if inside || (0..4).all(|d| self.pts[i][d] <= q[d]) {
                    let pos = out.partition_point(|x| *x < r);
                    out.insert(pos, r);
                    out.truncate(k);
                }
            }
            return;
        }
        let (a, b) = (node.left, node.right);
        let (fa, fb) = (self.nodes[a as usize].best, self.nodes[b as usize].best);
        let (first, second) = if fa <= fb { (a, b) } else { (b, a) };
        self.visit(first, q, k, exclude, out);
        self.visit(second, q, k, exclude, out);
    }

    pub fn best(&self, b: &KRect, exclude: &[u32]) -> Option<Rank> {
        let mut out = Vec::with_capacity(1);
        self.top_k(b, 1, exclude, &mut out);
        out.first().copied()
    }
}

/// Enclosure index over exact planar rectangles with optional weights.
#[derive(Clone, Debug)]
pub struct EnclosureIndex {
    vals_x: Vec<Rational>,
    vals_y: Vec<Rational>,
    ids: Vec<usize>,
    weights: Vec<Rational>,
    core: KeyEnclosureIndex,
}

fn gap_key(vals: &[Rational], v: &Rational) -> i64 {
    match vals.binary_search(v) {
        Ok(i) => 2 * i as i64 + 1,
        Err(i) => 2 * i as i64,
    }
}

fn side_keys(vals: &[Rational], s: &Interval) -> (i64, i64) {
    let lo = match &s.lo {
        ExtScalar::NegInf => NEG,
        ExtScalar::PosInf => POS,
        ExtScalar::Finite(v) => gap_key(vals, v) + if s.lo_closed { 0 } else { 1 },
    };
    let hi = match &s.hi {
        ExtScalar::NegInf => NEG,
        ExtScalar::PosInf => POS,
        ExtScalar::Finite(v) => gap_key(vals, v) - if s.hi_closed { 0 } else { 1 },
    };
    (lo, hi)
}

/// Builds the index; unweighted rectangles carry weight 1.
pub fn build_enclosure_index(rects: &[ExtRect]) -> EnclosureIndex {
    let mut vx = Vec::new();
    let mut vy = Vec::new();
    for r in rects {
        for s in [&r.sides[0].lo, &r.sides[0].hi] {
            if let Some(v) = s.finite() {
                vx.push(v.clone());
            }
        }
        for s in [&r.sides[1].lo, &r.sides[1].hi] {
            if let Some(v) = s.finite() {
                vy.push(v.clone());
            }
        }
    }
    vx.sort();
    vx.dedup();
    vy.sort();
    vy.dedup();
    let mut order: Vec<usize> = (0..rects.len()).collect();
    order.sort_by_key(|&i| rects[i].id);
    let weights: Vec<Rational> = order.iter().map(|&i| rects[i].weight_or_one()).collect();
    // Rank weights to integers so ties stay ties.
    let mut sorted = weights.clone();
    sorted.sort();
    sorted.dedup();
    let wk: Vec<i64> = weights.iter().map(|w| sorted.binary_search(w).unwrap() as i64).collect();
    let keys: Vec<KRect> = order
        .iter()
        .map(|&i| {
            let (xl, xh) = side_keys(&vx, &rects[i].sides[0]);
            let (yl, yh) = side_keys(&vy, &rects[i].sides[1]);
            KRect { xl, xh, yl, yh }
        })
        .collect();
    EnclosureIndex {
        core: KeyEnclosureIndex::new(&keys, &wk),
        ids: order.iter().map(|&i| rects[i].id).collect(),
        weights,
        vals_x: vx,
        vals_y: vy,
    }
}

impl EnclosureIndex {
    pub(crate) fn query_key(&self, b: &BBox) -> KRect {
        KRect {
            xl: gap_key(&self.vals_x, &b.xmin),
            xh: gap_key(&self.vals_x, &b.xmax),
            yl: gap_key(&self.vals_y, &b.ymin),
            yh: gap_key(&self.vals_y, &b.ymax),
        }
    }

    pub(crate) fn index_of(&self, id: usize) -> Option<u32> {
        self.ids.binary_search(&id).ok().map(|i| i as u32)
    }

    pub(crate) fn core(&self) -> &KeyEnclosureIndex {
        &self.core
    }

    pub(crate) fn entry(&self, i: usize) -> (usize, Rational) {
        (self.ids[i], self.weights[i].clone())
    }
}

/// Minimum-weight rectangle enclosing the closed box `b`; ties go to the smallest id.
pub fn min_weight_enclosing(idx: &EnclosureIndex, b: &BBox) -> Option<(usize, Rational)> {
    let q = idx.query_key(b);
    let (_, i) = idx.core.best(&q, &[])?;
    Some((idx.ids[i as usize], idx.weights[i as usize].clone()))
}
