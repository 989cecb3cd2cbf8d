//! Non-uniform grids over rectangle sides, side extension, maximal-rectangle
//! filtering and extreme-cell search along a rectangle side.

use crate::geom::{BBox, ExtRect, ExtScalar, Interval, PointD};
use crate::planar::{KRect, NEG, POS};
use crate::range_index::{count_in_rect, KeyEnclosureIndex, KeyPointIndex, PointIndex};

/// A side of a planar rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
    Bottom,
    Top,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Left, Side::Right, Side::Bottom, Side::Top];

    pub fn is_vertical(self) -> bool {
        matches!(self, Side::Left | Side::Right)
    }
}

/// Grid cell as (column, row).
pub type CellRef = (usize, usize);

/// Picks boundaries at every `cap`-th coordinate of the sorted multiset, so
/// that every open slab between boundaries holds fewer than `cap` of them
/// and the number of slabs is at most `g`.
pub fn choose_boundaries<T: Ord + Clone>(mut coords: Vec<T>, cap: usize) -> Vec<T> {
    coords.sort();
    let mut out: Vec<T> = Vec::new();
    let mut i = cap;
    while i < coords.len() {
        if out.last() != Some(&coords[i]) {
            out.push(coords[i].clone());
        }
        i += cap;
    }
    out
}

/// ⌈4n/g⌉, the per-slab vertex capacity.
pub fn capacity(n: usize, g: usize) -> usize {
    (4 * n.max(1)).div_ceil(g.max(1)).max(1)
}

/// Grid in integer key space. Column `c` covers keys `[cols[c], cols[c+1])`,
/// the first column starting at minus infinity and the last ending at plus infinity.
#[derive(Clone, Debug)]
pub struct KGrid {
    pub cols: Vec<i64>,
    pub rows: Vec<i64>,
    pub cap: usize,
}

impl KGrid {
    pub fn build(rects: &[KRect], g: usize) -> KGrid {
        let cap = capacity(rects.len(), g);
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for r in rects {
            for v in [r.xl, r.xh] {
                if v > NEG && v < POS {
                    xs.push(v);
                    xs.push(v);
                }
            }
            for v in [r.yl, r.yh] {
                if v > NEG && v < POS {
                    ys.push(v);
                    ys.push(v);
                }
            }
        }
        let mut cols = vec![NEG];
        cols.extend(choose_boundaries(xs, cap));
        let mut rows = vec![NEG];
        rows.extend(choose_boundaries(ys, cap));
        KGrid { cols, rows, cap }
    }

    /// Adds boundaries so that `r` is a union of cells.
    pub fn refined_by(&self, r: &KRect) -> KGrid {
        let mut cols = self.cols.clone();
        let mut rows = self.rows.clone();
        for v in [r.xl, r.xh.saturating_add(1)] {
            if v > NEG && v < POS {
                cols.push(v);
            }
        }
        for v in [r.yl, r.yh.saturating_add(1)] {
            if v > NEG && v < POS {
                rows.push(v);
            }
        }
        cols.sort_unstable();
        cols.dedup();
        rows.sort_unstable();
        rows.dedup();
        KGrid { cols, rows, cap: self.cap }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn col_of(&self, x: i64) -> usize {
        self.cols.partition_point(|&b| b <= x) - 1
    }

    #[inline]
    pub fn row_of(&self, y: i64) -> usize {
        self.rows.partition_point(|&b| b <= y) - 1
    }

    #[inline]
    pub fn col_span(&self, c: usize) -> (i64, i64) {
        let hi = if c + 1 < self.cols.len() { self.cols[c + 1] - 1 } else { POS };
        (self.cols[c], hi)
    }

    #[inline]
    pub fn row_span(&self, r: usize) -> (i64, i64) {
        let hi = if r + 1 < self.rows.len() { self.rows[r + 1] - 1 } else { POS };
        (self.rows[r], hi)
    }

    /// Key rectangle of the block of columns `c0..=c1` and rows `r0..=r1`.
    #[inline]
    pub fn block(&self, c0: usize, c1: usize, r0: usize, r1: usize) -> KRect {
        KRect::new(self.col_span(c0).0, self.col_span(c1).1, self.row_span(r0).0, self.row_span(r1).1)
    }

    pub fn cell_rect(&self, c: usize, r: usize) -> KRect {
        self.block(c, c, r, r)
    }

    /// Column of a bounded vertical side, or `None` for an infinite one.
    pub fn side_col(&self, x: i64) -> Option<usize> {
        (x > NEG && x < POS).then(|| self.col_of(x))
    }

    pub fn side_row(&self, y: i64) -> Option<usize> {
        (y > NEG && y < POS).then(|| self.row_of(y))
    }

    /// Largest number of rectangle vertices strictly inside a column or row.
    pub fn max_occupancy(&self, rects: &[KRect]) -> usize {
        let mut col_cnt = vec![0usize; self.ncols()];
        let mut row_cnt = vec![0usize; self.nrows()];
        for r in rects {
            for v in [r.xl, r.xh] {
                if v > NEG && v < POS {
                    let c = self.col_of(v);
                    if self.cols[c] != v {
                        col_cnt[c] += 2;
                    }
                }
            }
            for v in [r.yl, r.yh] {
                if v > NEG && v < POS {
                    let c = self.row_of(v);
                    if self.rows[c] != v {
                        row_cnt[c] += 2;
                    }
                }
            }
        }
        col_cnt.into_iter().chain(row_cnt).max().unwrap_or(0)
    }

    /// Cells crossed by side `s` of `r`: a fixed column or row plus an index range.
    pub fn side_cells(&self, r: &KRect, s: Side) -> Option<(bool, usize, usize, usize)> {
        match s {
            Side::Left | Side::Right => {
                let x = if s == Side::Left { r.xl } else { r.xh };
                let c = self.side_col(x)?;
                let r0 = self.side_row(r.yl).unwrap_or(0);
                let r1 = self.side_row(r.yh).unwrap_or(self.nrows() - 1);
                Some((true, c, r0, r1))
            }
            Side::Bottom | Side::Top => {
                let y = if s == Side::Bottom { r.yl } else { r.yh };
                let row = self.side_row(y)?;
                let c0 = self.side_col(r.xl).unwrap_or(0);
                let c1 = self.side_col(r.xh).unwrap_or(self.ncols() - 1);
                Some((false, row, c0, c1))
            }
        }
    }

    /// Extreme cells crossed by side `s` of `r` holding a point not covered by `r`.
    pub fn gamma_cells(&self, pidx: &KeyPointIndex, r: &KRect, s: Side) -> (Option<CellRef>, Option<CellRef>) {
        let Some((vertical, fixed, a, b)) = self.side_cells(r, s) else {
            return (None, None);
        };
        let cell = |i: usize| if vertical { (fixed, i) } else { (i, fixed) };
        let uncovered = |i: usize| {
            let (c, w) = cell(i);
            let q = self.cell_rect(c, w);
            let inner = q.intersect(r);
            let total = pidx.count(&q);
            total > 0 && total > if inner.is_empty() { 0 } else { pidx.count(&inner) }
        };
        let first = (a..=b).find(|&i| uncovered(i));
        let Some(f) = first else { return (None, None) };
        let last = (f..=b).rev().find(|&i| uncovered(i)).unwrap_or(f);
        (Some(cell(f)), Some(cell(last)))
    }
}

impl KGrid {
    /// Same result as [`KGrid::gamma_cells`], from extreme queries over the
    /// strip of cells crossed by the side minus `r`.
    pub fn gamma_cells_fast(&self, pidx: &KeyPointIndex, r: &KRect, s: Side) -> (Option<CellRef>, Option<CellRef>) {
        let Some((vertical, fixed, a, b)) = self.side_cells(r, s) else {
            return (None, None);
        };
        let strip = if vertical {
            let (x0, x1) = self.col_span(fixed);
            KRect::new(x0, x1, self.row_span(a).0, self.row_span(b).1)
        } else {
            let (y0, y1) = self.row_span(fixed);
            KRect::new(self.col_span(a).0, self.col_span(b).1, y0, y1)
        };
        let parts = [
            KRect { xh: r.xl.saturating_sub(1), ..strip },
            KRect { xl: r.xh.saturating_add(1), ..strip },
            KRect { yh: r.yl.saturating_sub(1), ..strip },
            KRect { yl: r.yh.saturating_add(1), ..strip },
        ];
        let mut hull: Option<KRect> = None;
        for q in parts.iter().filter(|q| !q.is_empty()) {
            if let Some(e) = pidx.extremes(q) {
                hull = Some(hull.map_or(e, |h| h.hull(&e)));
            }
        }
        let Some(h) = hull else { return (None, None) };
        if vertical {
            (Some((fixed, self.row_of(h.yl))), Some((fixed, self.row_of(h.yh))))
        } else {
            (Some((self.col_of(h.xl), fixed)), Some((self.col_of(h.xh), fixed)))
        }
    }
}

/// Replaces every side of a planar rectangle lying on or beyond the matching
/// side of `b0` by the matching infinity. Within `b0` nothing changes.
pub fn extend_rects(rects: &[ExtRect], b0: &BBox) -> Vec<ExtRect> {
    rects
        .iter()
        .map(|r| {
            let mut r = r.clone();
            let bounds = [(&b0.xmin, &b0.xmax), (&b0.ymin, &b0.ymax)];
            for (s, (lo, hi)) in r.sides.iter_mut().zip(bounds) {
                let lo_vacuous = match &s.lo {
                    ExtScalar::Finite(v) => v < lo || (v == lo && s.lo_closed),
                    ExtScalar::NegInf => true,
                    ExtScalar::PosInf => false,
                };
                let hi_vacuous = match &s.hi {
                    ExtScalar::Finite(v) => v > hi || (v == hi && s.hi_closed),
                    ExtScalar::PosInf => true,
                    ExtScalar::NegInf => false,
                };
                if lo_vacuous {
                    s.lo = ExtScalar::NegInf;
                    s.lo_closed = false;
                }
                if hi_vacuous {
                    s.hi = ExtScalar::PosInf;
                    s.hi_closed = false;
                }
            }
            r
        })
        .collect()
}

/// Grid over exact coordinates: `cols` and `rows` hold all boundaries,
/// starting with minus infinity and ending with plus infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub cols: Vec<ExtScalar>,
    pub rows: Vec<ExtScalar>,
    pub cap: usize,
}

pub fn build_grid(rects: &[ExtRect], g: usize) -> Grid {
    let cap = capacity(rects.len(), g);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for r in rects {
        for s in [&r.sides[0].lo, &r.sides[0].hi] {
            if let Some(v) = s.finite() {
                xs.push(v.clone());
                xs.push(v.clone());
            }
        }
        for s in [&r.sides[1].lo, &r.sides[1].hi] {
            if let Some(v) = s.finite() {
                ys.push(v.clone());
                ys.push(v.clone());
            }
        }
    }
    let wrap = |b: Vec<crate::Rational>| {
        let mut v = vec![ExtScalar::NegInf];
        v.extend(b.into_iter().map(ExtScalar::Finite));
        v.push(ExtScalar::PosInf);
        v
    };
    Grid { cols: wrap(choose_boundaries(xs, cap)), rows: wrap(choose_boundaries(ys, cap)), cap }
}

impl Grid {
    pub fn ncols(&self) -> usize {
        self.cols.len() - 1
    }

    pub fn nrows(&self) -> usize {
        self.rows.len() - 1
    }

    fn slab(b: &[ExtScalar], i: usize) -> Interval {
        Interval::new(b[i].clone(), true, b[i + 1].clone(), false)
    }

    /// Half-open cell `[b_c, b_{c+1}) × [b_r, b_{r+1})`.
    pub fn cell(&self, (c, r): CellRef) -> ExtRect {
        ExtRect::new(vec![Self::slab(&self.cols, c), Self::slab(&self.rows, r)], None, 0)
    }

    fn slot(b: &[ExtScalar], v: &ExtScalar) -> usize {
        b[1..].partition_point(|x| x <= v).min(b.len() - 2)
    }

    /// Count of rectangle vertices strictly inside each column, then each row.
    pub fn occupancy(&self, rects: &[ExtRect]) -> (Vec<usize>, Vec<usize>) {
        let mut cc = vec![0; self.ncols()];
        let mut rc = vec![0; self.nrows()];
        for r in rects {
            for s in [&r.sides[0].lo, &r.sides[0].hi] {
                if s.is_finite() && !self.cols.contains(s) {
                    cc[Self::slot(&self.cols, s)] += 2;
                }
            }
            for s in [&r.sides[1].lo, &r.sides[1].hi] {
                if s.is_finite() && !self.rows.contains(s) {
                    rc[Self::slot(&self.rows, s)] += 2;
                }
            }
        }
        (cc, rc)
    }
}

/// Extreme cells crossed by side `side` of `r1` that hold a point not covered by `r1`.
pub fn gamma_cells(r1: &ExtRect, side: Side, grid: &Grid, points: &[PointD], pidx: &PointIndex) -> (Option<CellRef>, Option<CellRef>) {
    let _ = points;
    let (sx, sy) = (&r1.sides[0], &r1.sides[1]);
    let (vertical, fixed_v, lo, hi) = match side {
        Side::Left => (true, &sx.lo, &sy.lo, &sy.hi),
        Side::Right => (true, &sx.hi, &sy.lo, &sy.hi),
        Side::Bottom => (false, &sy.lo, &sx.lo, &sx.hi),
        Side::Top => (false, &sy.hi, &sx.lo, &sx.hi),
    };
    if !fixed_v.is_finite() {
        return (None, None);
    }
    let (fb, ob) = if vertical { (&grid.cols, &grid.rows) } else { (&grid.rows, &grid.cols) };
    let fixed = Grid::slot(fb, fixed_v);
    let a = Grid::slot(ob, lo);
    let b = Grid::slot(ob, hi);
    let cell = |i: usize| if vertical { (fixed, i) } else { (i, fixed) };
    let uncovered = |i: usize| {
        let q = grid.cell(cell(i));
        let total = count_in_rect(pidx, &q);
        let inner = ExtRect::new(
            q.sides.iter().zip(&r1.sides).map(|(a, b)| meet(a, b)).collect(),
            None,
            0,
        );
        let covered = if inner.is_valid() { count_in_rect(pidx, &inner) } else { 0 };
        total > covered
    };
    let first = (a..=b).find(|&i| uncovered(i));
    let Some(f) = first else { return (None, None) };
    let last = (f..=b).rev().find(|&i| uncovered(i)).unwrap_or(f);
    (Some(cell(f)), Some(cell(last)))
}

fn meet(a: &Interval, b: &Interval) -> Interval {
    let (lo, lc) = match a.lo.cmp(&b.lo) {
        std::cmp::Ordering::Greater => (a.lo.clone(), a.lo_closed),
        std::cmp::Ordering::Less => (b.lo.clone(), b.lo_closed),
        std::cmp::Ordering::Equal => (a.lo.clone(), a.lo_closed && b.lo_closed),
    };
    let (hi, hc) = match a.hi.cmp(&b.hi) {
        std::cmp::Ordering::Less => (a.hi.clone(), a.hi_closed),
        std::cmp::Ordering::Greater => (b.hi.clone(), b.hi_closed),
        std::cmp::Ordering::Equal => (a.hi.clone(), a.hi_closed && b.hi_closed),
    };
    Interval { lo, hi, lo_closed: lc, hi_closed: hc }
}

/// Indices of rectangles not strictly contained in another one, in key space.
/// Identical copies are all kept.
pub fn maximal_indices(rects: &[KRect]) -> Vec<usize> {
    let ones = vec![0i64; rects.len()];
    let idx = KeyEnclosureIndex::new(rects, &ones);
    let mut out = Vec::new();
    let mut buf = Vec::new();
    for (i, r) in rects.iter().enumerate() {
        let mut exclude: Vec<u32> = vec![i as u32];
        let mut strict = false;
        loop {
            idx.top_k(r, 1, &exclude, &mut buf);
            let Some(&(_, j)) = buf.first() else { break };
            if rects[j as usize] != *r {
                strict = true;
                break;
            }
            exclude.push(j);
        }
        if !strict {
            out.push(i);
        }
    }
    out
}

/// Rectangles not strictly contained in another rectangle of the family.
pub fn maximal_filter(rects: &[ExtRect]) -> Vec<ExtRect> {
    let mut out = Vec::new();
    'outer: for (i, r) in rects.iter().enumerate() {
        for (j, o) in rects.iter().enumerate() {
            if i != j && o.sides != r.sides && o.sides.iter().zip(&r.sides).all(|(a, b)| a.encloses(b)) {
                continue 'outer;
            }
        }
        out.push(r.clone());
    }
    out
}

/// Number of points of `s` not strictly dominated by another point of `s`.
pub fn count_maximal_grid_points(s: &[Vec<usize>]) -> usize {
    if s.is_empty() {
        return 0;
    }
    if s[0].len() == 2 {
        // Sweep by decreasing x; a point is dominated iff some point with
        // strictly larger x has strictly larger y.
        let mut pts: Vec<(usize, usize)> = s.iter().map(|p| (p[0], p[1])).collect();
        pts.sort_unstable();
        pts.dedup();
        let mut count = 0;
        let mut best_above: Option<usize> = None;
        let mut i = pts.len();
        while i > 0 {
            let x = pts[i - 1].0;
            let mut j = i;
            while j > 0 && pts[j - 1].0 == x {
                j -= 1;
            }
            for p in &pts[j..i] {
                if best_above.is_none_or(|m| m <= p.1) {
                    count += 1;
                }
            }
            let group_max = pts[j..i].iter().map(|p| p.1).max().unwrap();
            best_above = Some(best_above.map_or(group_max, |m| m.max(group_max)));
            i = j;
        }
        return count;
    }
    s.iter()
        .filter(|p| !s.iter().any(|q| q.iter().zip(p.iter()).all(|(a, b)| a > b)))
        .count()
}
