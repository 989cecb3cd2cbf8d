//! Shared solver state: extended rectangles, point and enclosure indexes,
//! the grid, and the same-column and extreme-cell pair searches.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::Provenance;
use crate::grid::{KGrid, Side};
use crate::pair_oracle::KeyPairOracle;
use crate::planar::{KRect, Planar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Cand {
    pub w: i128,
    pub ids: [u32; 3],
    pub prov: Provenance,
}

impl Cand {
    pub fn new(w: i128, mut ids: [u32; 3], prov: Provenance) -> Cand {
        ids.sort_unstable();
        Cand { w, ids, prov }
    }

    fn key(&self) -> (i128, [u32; 3]) {
        (self.w, self.ids)
    }
}

pub(crate) fn merge(a: Option<Cand>, b: Option<Cand>) -> Option<Cand> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.key() < x.key() { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

#[derive(Debug, Default)]
pub(crate) struct Stats {
    pub guesses: AtomicU64,
    pub unclassified: AtomicU64,
    pub pair_queries: AtomicU64,
}

impl Stats {
    pub fn add(c: &AtomicU64, v: u64) {
        c.fetch_add(v, Ordering::Relaxed);
    }
}

/// A side lying in a column or row: owner, its coordinate, and its extent
/// along the other axis.
#[derive(Clone, Copy, Debug)]
pub(crate) struct SideRef {
    pub owner: u32,
    pub lo: i64,
    pub hi: i64,
}

pub(crate) struct Ctx {
    /// Extended rectangles of the active family.
    pub rects: Vec<KRect>,
    pub w: Vec<i64>,
    /// Position of each active rectangle in the full family.
    pub members: Vec<u32>,
    pub po: KeyPairOracle,
    pub grid: KGrid,
    pub col_sides: Vec<Vec<SideRef>>,
    pub row_sides: Vec<Vec<SideRef>>,
    pub stats: Stats,
}

impl Ctx {
    /// `members` lists the rectangles of `pl` taking part, in increasing order.
    pub fn new(pl: &Planar, ext: &[KRect], members: Vec<u32>, g: usize) -> Ctx {
        let rects: Vec<KRect> = members.iter().map(|&i| ext[i as usize]).collect();
        let w: Vec<i64> = members.iter().map(|&i| pl.weights[i as usize]).collect();
        Self::from_parts(&pl.pts, rects, w, members, g)
    }

    pub fn from_parts(pts: &[(i64, i64)], rects: Vec<KRect>, w: Vec<i64>, members: Vec<u32>, g: usize) -> Ctx {
        let grid = KGrid::build(&rects, g);
        let po = KeyPairOracle::new(pts, &rects, &w);
        let mut col_sides = vec![Vec::new(); grid.ncols()];
        let mut row_sides = vec![Vec::new(); grid.nrows()];
        for (i, r) in rects.iter().enumerate() {
            for x in [r.xl, r.xh] {
                if let Some(c) = grid.side_col(x) {
                    col_sides[c].push(SideRef { owner: i as u32, lo: r.yl, hi: r.yh });
                }
            }
            for y in [r.yl, r.yh] {
                if let Some(c) = grid.side_row(y) {
                    row_sides[c].push(SideRef { owner: i as u32, lo: r.xl, hi: r.xh });
                }
            }
        }
        Ctx { rects, w, members, po, grid, col_sides, row_sides, stats: Stats::default() }
    }

    pub fn n(&self) -> usize {
        self.rects.len()
    }

    /// Pair `(a, b)` completed by the cheapest valid third.
    pub fn pair(&self, a: u32, b: u32, prov: Provenance) -> Option<Cand> {
        if a == b {
            return None;
        }
        Stats::add(&self.stats.pair_queries, 1);
        let (ra, rb) = (&self.rects[a as usize], &self.rects[b as usize]);
        let (wc, c) = self.po.best_third1(ra, rb, &[a, b])?;
        Some(Cand::new(self.w[a as usize] as i128 + self.w[b as usize] as i128 + wc as i128, [a, b, c], prov))
    }

    /// True iff the three rectangles cover every point.
    pub fn covers3(&self, a: u32, b: u32, c: u32) -> bool {
        match self.po.remainder_bbox(&self.rects[a as usize], &self.rects[b as usize]) {
            None => true,
            Some(q) => self.rects[c as usize].encloses(&q),
        }
    }

    /// Pairs of rectangles with vertical sides in a common column or
    /// horizontal sides in a common row.
    pub fn step1(&self) -> Option<Cand> {
        let lines: Vec<&Vec<SideRef>> = self.col_sides.iter().chain(self.row_sides.iter()).collect();
        lines
            .par_iter()
            .map(|sides| {
                let mut owners: Vec<u32> = sides.iter().map(|s| s.owner).collect();
                owners.sort_unstable();
                owners.dedup();
                let mut best = None;
                for i in 0..owners.len() {
                    for j in i + 1..owners.len() {
                        best = merge(best, self.pair(owners[i], owners[j], Provenance::Step1));
                    }
                }
                best
            })
            .reduce(|| None, merge)
    }

    /// Rectangles with a side in cell `(c, r)`.
    pub fn owners_in_cell(&self, c: usize, r: usize, out: &mut Vec<u32>) {
        out.clear();
        let (x0, x1) = self.grid.col_span(c);
        let (y0, y1) = self.grid.row_span(r);
        for s in &self.col_sides[c] {
            if s.lo <= y1 && s.hi >= y0 {
                out.push(s.owner);
            }
        }
        for s in &self.row_sides[r] {
            if s.lo <= x1 && s.hi >= x0 {
                out.push(s.owner);
            }
        }
        out.sort_unstable();
        out.dedup();
    }

    /// Each rectangle paired with every rectangle having a side in an extreme
    /// cell of one of its sides.
    pub fn step2(&self) -> Option<Cand> {
        (0..self.n() as u32)
            .into_par_iter()
            .map(|a| {
                let ra = &self.rects[a as usize];
                let mut best = None;
                let mut owners = Vec::new();
                let mut seen: Vec<(usize, usize)> = Vec::with_capacity(8);
                for s in Side::ALL {
                    let (lo, hi) = self.grid.gamma_cells_fast(&self.po.pidx, ra, s);
                    for cell in [lo, hi].into_iter().flatten() {
                        if seen.contains(&cell) {
                            continue;
                        }
                        seen.push(cell);
                        self.owners_in_cell(cell.0, cell.1, &mut owners);
                        for &b in &owners {
                            best = merge(best, self.pair(a, b, Provenance::Step2));
                        }
                    }
                }
                best
            })
            .reduce(|| None, merge)
    }
}
