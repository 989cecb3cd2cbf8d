//! Combinatorial classification of grid cells against a guessed arrangement
//! of three rectangles, each known only by the columns and rows of its sides.

use crate::error::{Error, Result};

/// Columns (rows) of the bounded sides of one guessed rectangle.
/// `None` means the side is at infinity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Desc {
    pub xl: Option<u16>,
    pub xh: Option<u16>,
    pub yl: Option<u16>,
    pub yh: Option<u16>,
}

impl Desc {
    pub const FREE: Desc = Desc { xl: None, xh: None, yl: None, yh: None };

    pub fn is_valid(&self) -> bool {
        let ok = |a: Option<u16>, b: Option<u16>| match (a, b) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        };
        ok(self.xl, self.xh) && ok(self.yl, self.yh)
    }

    pub fn bounded_sides(&self) -> usize {
        [self.xl, self.xh, self.yl, self.yh].iter().filter(|s| s.is_some()).count()
    }

    fn cols(&self) -> impl Iterator<Item = u16> {
        self.xl.into_iter().chain(self.xh)
    }

    fn rows(&self) -> impl Iterator<Item = u16> {
        self.yl.into_iter().chain(self.yh)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rel {
    Out,
    Edge,
    In,
}

#[inline]
pub fn rel1(lo: Option<u16>, hi: Option<u16>, c: u16) -> Rel {
    if lo == Some(c) || hi == Some(c) {
        return Rel::Edge;
    }
    let after_lo = lo.is_none_or(|l| l < c);
    let before_hi = hi.is_none_or(|h| c < h);
    if after_lo && before_hi {
        Rel::In
    } else {
        Rel::Out
    }
}

#[inline]
pub fn rel_cell(d: &Desc, c: u16, r: u16) -> Rel {
    let a = rel1(d.xl, d.xh, c);
    if a == Rel::Out {
        return Rel::Out;
    }
    let b = rel1(d.yl, d.yh, r);
    a.min(b)
}

/// Three guessed rectangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GuessConfig {
    pub descs: [Desc; 3],
    /// Bit `j` set when rectangle `j` is not part of the arrangement.
    pub absent: u8,
    /// Cells inside rectangle `j` are assigned to it only from this
    /// (column, row) onward.
    pub inside_from: [(u16, u16); 3],
}

impl GuessConfig {
    pub fn new(descs: [Desc; 3]) -> Self {
        GuessConfig { descs, absent: 0, inside_from: [(0, 0); 3] }
    }

    #[inline]
    pub fn rel(&self, j: usize, c: u16, r: u16) -> Rel {
        if self.absent >> j & 1 == 1 {
            Rel::Out
        } else {
            rel_cell(&self.descs[j], c, r)
        }
    }

    fn present(&self) -> impl Iterator<Item = &Desc> {
        self.descs.iter().enumerate().filter(|(j, _)| self.absent >> j & 1 == 0).map(|(_, d)| d)
    }

    /// Vertical sides of different rectangles lie in different columns, and
    /// likewise for horizontal sides and rows.
    pub fn separated(&self) -> bool {
        let ds: Vec<&Desc> = self.present().collect();
        for i in 0..ds.len() {
            for j in i + 1..ds.len() {
                let (a, b) = (ds[i], ds[j]);
                if a.cols().any(|c| b.cols().any(|d| d == c)) || a.rows().any(|r| b.rows().any(|s| s == r)) {
                    return false;
                }
            }
        }
        true
    }

    /// Every direction has a side at infinity among the three.
    pub fn reaches_all_directions(&self) -> bool {
        let d: Vec<&Desc> = self.present().collect();
        d.iter().any(|x| x.xl.is_none())
            && d.iter().any(|x| x.xh.is_none())
            && d.iter().any(|x| x.yl.is_none())
            && d.iter().any(|x| x.yh.is_none())
    }

    pub fn validate(&self, ncols: usize, nrows: usize) -> Result<()> {
        for d in &self.descs {
            if !d.is_valid() {
                return Err(Error::Invalid("side order reversed in a guessed rectangle".into()));
            }
            if d.cols().any(|c| c as usize >= ncols) || d.rows().any(|r| r as usize >= nrows) {
                return Err(Error::Invalid("guessed side outside the grid".into()));
            }
        }
        if !self.separated() {
            return Err(Error::Invalid("two guessed rectangles share a column or row".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellType {
    /// Inside at least one guessed rectangle.
    A,
    /// Touches the boundary of exactly one guessed rectangle.
    B,
    /// Touches the boundaries of two guessed rectangles.
    C,
    /// Disjoint from all three.
    Empty,
}

/// Block of cells with identical classification: columns `c0..=c1`, rows `r0..=r1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub c0: u16,
    pub c1: u16,
    pub r0: u16,
    pub r1: u16,
    pub ty: CellType,
    /// Bit `j` set when the block is assigned to rectangle `j`.
    pub mask: u8,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellAssignment {
    pub blocks: Vec<Block>,
    /// Boundary-touching cells that no walk could assign.
    pub unclassified: usize,
}

impl CellAssignment {
    pub fn cell(&self, c: u16, r: u16) -> Option<(CellType, u8)> {
        self.blocks
            .iter()
            .find(|b| b.c0 <= c && c <= b.c1 && b.r0 <= r && r <= b.r1)
            .map(|b| (b.ty, b.mask))
    }
}

/// Splits `0..n` into the listed indices and the gaps between them.
fn classes(mut keys: Vec<u16>, n: usize, out: &mut Vec<(u16, u16)>) {
    out.clear();
    keys.sort_unstable();
    keys.dedup();
    let mut next = 0u16;
    for k in keys {
        if k > next {
            out.push((next, k - 1));
        }
        out.push((k, k));
        next = k + 1;
    }
    if (next as usize) < n {
        out.push((next, n as u16 - 1));
    }
}

/// Classifies every cell of an `ncols × nrows` grid. Assumes `cfg.validate` holds.
pub fn classify(cfg: &GuessConfig, ncols: usize, nrows: usize) -> CellAssignment {
    let mut cc = Vec::with_capacity(13);
    let mut rc = Vec::with_capacity(13);
    classes(cfg.present().flat_map(|d| d.cols()).collect(), ncols, &mut cc);
    classes(cfg.present().flat_map(|d| d.rows()).collect(), nrows, &mut rc);
    let mut out = CellAssignment { blocks: Vec::with_capacity(cc.len() * rc.len()), unclassified: 0 };
    for &(c0, c1) in &cc {
        for &(r0, r1) in &rc {
            let rels = [cfg.rel(0, c0, r0), cfg.rel(1, c0, r0), cfg.rel(2, c0, r0)];
            let mut mask = 0u8;
            let mut inside = false;
            for (j, r) in rels.iter().enumerate() {
                if *r == Rel::In {
                    inside = true;
                    if c0 >= cfg.inside_from[j].0 && r0 >= cfg.inside_from[j].1 {
                        mask |= 1 << j;
                    }
                }
            }
            let ty;
            if inside {
                ty = CellType::A;
            } else {
                let edges: Vec<usize> = (0..3).filter(|&j| rels[j] == Rel::Edge).collect();
                match edges.len() {
                    0 => ty = CellType::Empty,
                    1 => {
                        ty = CellType::B;
                        mask = 1 << edges[0];
                    }
                    _ => {
                        ty = CellType::C;
                        match walk(cfg, &edges, c0, r0, ncols, nrows) {
                            Some(j) => mask = 1 << j,
                            None => out.unclassified += 1,
                        }
                    }
                }
            }
            out.blocks.push(Block { c0, c1, r0, r1, ty, mask });
        }
    }
    out
}

/// For a cell crossed by a horizontal side of one rectangle and a vertical
/// side of another, finds the rectangle whose side can be followed from the
/// cell to its end through cells that no other guessed rectangle meets.
fn walk(cfg: &GuessConfig, edges: &[usize], c: u16, r: u16, ncols: usize, nrows: usize) -> Option<usize> {
    if edges.len() != 2 {
        return None;
    }
    let d = &cfg.descs;
    let horiz = edges.iter().copied().find(|&j| rel1(d[j].yl, d[j].yh, r) == Rel::Edge && rel1(d[j].xl, d[j].xh, c) == Rel::In);
    let vert = edges.iter().copied().find(|&j| rel1(d[j].xl, d[j].xh, c) == Rel::Edge && rel1(d[j].yl, d[j].yh, r) == Rel::In);
    let (Some(h), Some(v)) = (horiz, vert) else { return None };
    fn clear_of(cfg: &GuessConfig, j: usize, mut cells: impl Iterator<Item = (u16, u16)>) -> bool {
        cells.all(|(x, y)| (0..3).filter(|&k| k != j).all(|k| cfg.rel(k, x, y) == Rel::Out))
    }
    let clear = |j: usize, cells: &mut dyn Iterator<Item = (u16, u16)>| clear_of(cfg, j, cells);
    let lo_c = d[h].xl.unwrap_or(0);
    let hi_c = d[h].xh.unwrap_or(ncols as u16 - 1);
    if clear(h, &mut (lo_c..c).map(|x| (x, r))) || clear(h, &mut (c + 1..=hi_c).map(|x| (x, r))) {
        return Some(h);
    }
    let lo_r = d[v].yl.unwrap_or(0);
    let hi_r = d[v].yh.unwrap_or(nrows as u16 - 1);
    if clear(v, &mut (lo_r..r).map(|y| (c, y))) || clear(v, &mut (r + 1..=hi_r).map(|y| (c, y))) {
        return Some(v);
    }
    None
}
