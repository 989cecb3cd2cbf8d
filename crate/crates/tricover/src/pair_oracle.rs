//! Given two rectangles, find the cheapest third rectangle that completes a
//! cover of the point set.

use crate::geom::{BBox, ExtRect, ExtScalar, Interval, PointD};
use crate::planar::{KRect, NEG, POS};
use crate::range_index::{
    build_enclosure_index, build_point_index, extremes_in_ranges, EnclosureIndex, KeyEnclosureIndex, KeyPointIndex,
    PointIndex, Rank,
};
use crate::Rational;

fn lo_le(a: &ExtScalar, ac: bool, b: &ExtScalar, bc: bool) -> bool {
    // Lower endpoint a admits at least what b admits.
    match a.cmp(b) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => ac || !bc,
    }
}

fn intersect(a: &Interval, b: &Interval) -> Option<Interval> {
    let (lo, lc) = if lo_le(&a.lo, a.lo_closed, &b.lo, b.lo_closed) {
        (b.lo.clone(), b.lo_closed)
    } else {
        (a.lo.clone(), a.lo_closed)
    };
    let (hi, hc) = match a.hi.cmp(&b.hi) {
        std::cmp::Ordering::Less => (a.hi.clone(), a.hi_closed),
        std::cmp::Ordering::Greater => (b.hi.clone(), b.hi_closed),
        std::cmp::Ordering::Equal => (a.hi.clone(), a.hi_closed && b.hi_closed),
    };
    let iv = Interval::new(lo, lc, hi, hc);
    iv.is_valid().then_some(iv)
}

/// Splits the line into maximal runs on which membership in both intervals is constant.
fn axis_runs(a: &Interval, b: &Interval) -> Vec<(Interval, [bool; 2])> {
    let mut vals: Vec<Rational> = [&a.lo, &a.hi, &b.lo, &b.hi].iter().filter_map(|s| s.finite().cloned()).collect();
    vals.sort();
    vals.dedup();
    let mut pieces: Vec<Interval> = Vec::new();
    let mut prev = ExtScalar::NegInf;
    for v in &vals {
        let f = ExtScalar::Finite(v.clone());
        if prev < f {
            pieces.push(Interval::new(prev.clone(), false, f.clone(), false));
        }
        pieces.push(Interval::closed(v.clone(), v.clone()));
        prev = f;
    }
    pieces.push(Interval::new(prev, false, ExtScalar::PosInf, false));
    let sig = |p: &Interval| -> [bool; 2] {
        [a.encloses(p), b.encloses(p)]
    };
    let mut runs: Vec<(Interval, [bool; 2])> = Vec::new();
    for p in pieces {
        let s = sig(&p);
        if let Some(last) = runs.last_mut() {
            if last.1 == s {
                last.0.hi = p.hi;
                last.0.hi_closed = p.hi_closed;
                continue;
            }
        }
        runs.push((p, s));
    }
    runs
}

/// Disjoint ranges whose union is `B0 \ (r1 ∪ r2)`.
pub fn complement_decomposition(r1: &ExtRect, r2: &ExtRect, b0: &BBox) -> Vec<ExtRect> {
    let bx = Interval::closed(b0.xmin.clone(), b0.xmax.clone());
    let by = Interval::closed(b0.ymin.clone(), b0.ymax.clone());
    let xr: Vec<(Interval, [bool; 2])> = axis_runs(&r1.sides[0], &r2.sides[0])
        .into_iter()
        .filter_map(|(iv, s)| intersect(&iv, &bx).map(|c| (c, s)))
        .collect();
    let yr: Vec<(Interval, [bool; 2])> = axis_runs(&r1.sides[1], &r2.sides[1])
        .into_iter()
        .filter_map(|(iv, s)| intersect(&iv, &by).map(|c| (c, s)))
        .collect();
    let mut out = Vec::new();
    for (ix, sx) in &xr {
        for (iy, sy) in &yr {
            let in1 = sx[0] && sy[0];
            let in2 = sx[1] && sy[1];
            if !in1 && !in2 {
                out.push(ExtRect::new(vec![ix.clone(), iy.clone()], None, out.len()));
            }
        }
    }
    out
}

/// Point index, enclosure index and bounding box of the points.
#[derive(Clone, Debug)]
pub struct PairOracle {
    pidx: PointIndex,
    eidx: EnclosureIndex,
    b0: Option<BBox>,
}

impl PairOracle {
    pub fn new(points: &[PointD], rects: &[ExtRect]) -> Self {
        PairOracle {
            pidx: build_point_index(points),
            eidx: build_enclosure_index(rects),
            b0: BBox::of_points(points),
        }
    }
}

/// Cheapest rectangle `r3` of the family, distinct by id from `r1` and `r2`,
/// such that the points are covered by `r1 ∪ r2 ∪ r3`. When `r1 ∪ r2`
/// already covers everything, the cheapest remaining rectangle is returned.
pub fn best_third(po: &PairOracle, r1: &ExtRect, r2: &ExtRect) -> Option<(usize, Rational)> {
    let exclude = [r1.id, r2.id];
    let rem = po.b0.as_ref().and_then(|b0| {
        let ranges = complement_decomposition(r1, r2, b0);
        extremes_in_ranges(&po.pidx, &ranges)
    });
    po.eidx.min_excluding(rem.as_ref(), &exclude)
}

/// Integer-key variant used by the solvers.
#[derive(Clone, Debug)]
pub struct KeyPairOracle {
    pub pidx: KeyPointIndex,
    pub eidx: KeyEnclosureIndex,
    pub b0: Option<KRect>,
    by_x: Vec<(i64, i64)>,
    by_y: Vec<(i64, i64)>,
}

/// A query box that every rectangle encloses.
pub const ANY: KRect = KRect { xl: POS, xh: NEG, yl: POS, yh: NEG };

const SCAN: usize = 24;

impl KeyPairOracle {
    pub fn new(pts: &[(i64, i64)], rects: &[KRect], weights: &[i64]) -> Self {
        let mut by_x = pts.to_vec();
        by_x.sort();
        let mut by_y: Vec<(i64, i64)> = pts.iter().map(|&(x, y)| (y, x)).collect();
        by_y.sort();
        let b0 = if pts.is_empty() {
            None
        } else {
            Some(KRect::new(by_x[0].0, by_x[by_x.len() - 1].0, by_y[0].0, by_y[by_y.len() - 1].0))
        };
        KeyPairOracle {
            pidx: KeyPointIndex::new(pts),
            eidx: KeyEnclosureIndex::new(rects, weights),
            b0,
            by_x,
            by_y,
        }
    }

    /// Cells of the grid cut by the sides of `a` and `b` inside `B0`, outside both.
    pub fn complement_cells(&self, a: &KRect, b: &KRect, out: &mut Vec<KRect>) {
        out.clear();
        let Some(b0) = self.b0 else { return };
        let cuts = |lo: i64, hi: i64, s: [i64; 4]| -> ([i64; 6], usize) {
            let mut c = [0i64; 6];
            let mut n = 0;
            c[n] = lo;
            n += 1;
            for v in s {
                if v > lo && v <= hi {
                    c[n] = v;
                    n += 1;
                }
            }
            c[n] = hi + 1;
            n += 1;
            c[..n].sort_unstable();
            let mut m = 1;
            for i in 1..n {
                if c[i] != c[m - 1] {
                    c[m] = c[i];
                    m += 1;
                }
            }
            (c, m)
        };
        let (cx, nx) = cuts(b0.xl, b0.xh, [a.xl, a.xh.saturating_add(1), b.xl, b.xh.saturating_add(1)]);
        let (cy, ny) = cuts(b0.yl, b0.yh, [a.yl, a.yh.saturating_add(1), b.yl, b.yh.saturating_add(1)]);
        for i in 0..nx - 1 {
            let (xl, xh) = (cx[i], cx[i + 1] - 1);
            for j in 0..ny - 1 {
                let (yl, yh) = (cy[j], cy[j + 1] - 1);
                if a.contains(xl, yl) || b.contains(xl, yl) {
                    continue;
                }
                out.push(KRect::new(xl, xh, yl, yh));
            }
        }
    }

    /// Bounding box of the points outside `a ∪ b`.
    pub fn remainder_bbox(&self, a: &KRect, b: &KRect) -> Option<KRect> {
        let outside = |x: i64, y: i64| !a.contains(x, y) && !b.contains(x, y);
        let mut res = [0i64; 4];
        let n = self.by_x.len();
        // Extremes are first sought by a short scan from each end, which settles
        // most queries; anything unsettled falls back to the range decomposition.
        let mut found = [false; 4];
        for &(x, y) in self.by_x.iter().take(SCAN) {
            if outside(x, y) {
                res[0] = x;
                found[0] = true;
                break;
            }
        }
        for &(x, y) in self.by_x.iter().rev().take(SCAN) {
            if outside(x, y) {
                res[1] = x;
                found[1] = true;
                break;
            }
        }
        for &(y, x) in self.by_y.iter().take(SCAN) {
            if outside(x, y) {
                res[2] = y;
                found[2] = true;
                break;
            }
        }
        for &(y, x) in self.by_y.iter().rev().take(SCAN) {
            if outside(x, y) {
                res[3] = y;
                found[3] = true;
                break;
            }
        }
        if found.iter().all(|&f| f) {
            return Some(KRect::new(res[0], res[1], res[2], res[3]));
        }
        if n <= SCAN {
            return None;
        }
        let mut cells = Vec::with_capacity(25);
        self.complement_cells(a, b, &mut cells);
        self.pidx.extremes_union(&cells)
    }

    /// Best `k` thirds for the pair `(a, b)`, skipping the listed indices.
    pub fn best_third(&self, a: &KRect, b: &KRect, exclude: &[u32], k: usize, out: &mut Vec<Rank>) {
        let q = self.remainder_bbox(a, b).unwrap_or(ANY);
        self.eidx.top_k(&q, k, exclude, out);
    }

    pub fn best_third1(&self, a: &KRect, b: &KRect, exclude: &[u32]) -> Option<Rank> {
        let q = self.remainder_bbox(a, b).unwrap_or(ANY);
        self.eidx.best(&q, exclude)
    }

    /// True iff the union of the given rectangles covers every point.
    pub fn covers(&self, rs: &[KRect]) -> bool {
        let Some(b0) = self.b0 else { return true };
        // Walk the cells cut by all sides inside B0 and check each uncovered one is empty.
        let mut xs: Vec<i64> = vec![b0.xl, b0.xh + 1];
        let mut ys: Vec<i64> = vec![b0.yl, b0.yh + 1];
        for r in rs {
            for v in [r.xl, r.xh.saturating_add(1)] {
                if v > b0.xl && v <= b0.xh {
                    xs.push(v);
                }
            }
            for v in [r.yl, r.yh.saturating_add(1)] {
                if v > b0.yl && v <= b0.yh {
                    ys.push(v);
                }
            }
        }
        xs.sort_unstable();
        xs.dedup();
        ys.sort_unstable();
        ys.dedup();
        for i in 0..xs.len() - 1 {
            for j in 0..ys.len() - 1 {
                let (x, y) = (xs[i], ys[j]);
                if rs.iter().any(|r| r.contains(x, y)) {
                    continue;
                }
                if self.pidx.count(&KRect::new(x, xs[i + 1] - 1, y, ys[j + 1] - 1)) > 0 {
                    return false;
                }
            }
        }
        true
    }
}

impl EnclosureIndex {
    /// Cheapest encloser of `b` (any rectangle when `b` is absent) whose id is not excluded.
    pub fn min_excluding(&self, b: Option<&BBox>, exclude_ids: &[usize]) -> Option<(usize, Rational)> {
        let q = match b {
            Some(b) => self.query_key(b),
            None => ANY,
        };
        let ex: Vec<u32> = exclude_ids.iter().filter_map(|id| self.index_of(*id)).collect();
        let (_, i) = self.core().best(&q, &ex)?;
        Some(self.entry(i as usize))
    }
}
