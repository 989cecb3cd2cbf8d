//! Discrete k-center: the rectilinear 3-center optimizer in the plane and
//! exact deciders used by the hardness constructions.

use num_traits::{Signed, Zero};

use crate::cover3::{solve, Variant};
use crate::error::{Error, Result};
use crate::geom::{dist2, dist_linf, ExtRect, PointD};
use crate::oracles::OracleBudget;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    Linf,
    L2,
}

/// Radius (L∞) or squared radius (L2) and the chosen center indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterSolution {
    pub value: Rational,
    pub metric: Metric,
    pub centers: Vec<usize>,
}

/// How `rect_d3c_optimize` walks the candidate radii.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RadiusSearch {
    /// Weighted-median selection over implicit sorted matrices of
    /// coordinate differences.
    #[default]
    SortedMatrix,
    /// Materialize and sort every candidate, then binary search.
    SortAll,
}

fn check_planar(p: &[PointD]) -> Result<()> {
    match p.iter().find(|q| q.dim() != 2) {
        Some(q) => Err(Error::DimensionMismatch { expected: 2, found: q.dim() }),
        None => Ok(()),
    }
}

fn covered_by(demand: &[PointD], supply: &[PointD], centers: &[usize], r: &Rational) -> bool {
    demand.iter().all(|p| centers.iter().any(|&c| dist_linf(p, &supply[c]) <= *r))
}

/// Three centers from `supply` (default: `demand`) whose L∞ balls of radius
/// `r` cover `demand`, or `None`. Fewer than three centers are returned only
/// when the supply has fewer than three points.
pub fn rect_d3c_decide(demand: &[PointD], supply: Option<&[PointD]>, r: &Rational) -> Result<Option<Vec<usize>>> {
    let supply = supply.unwrap_or(demand);
    check_planar(demand)?;
    check_planar(supply)?;
    if r.is_negative() || supply.is_empty() {
        return Ok(None);
    }
    if supply.len() <= 3 {
        let all: Vec<usize> = (0..supply.len()).collect();
        return Ok(covered_by(demand, supply, &all, r).then_some(all));
    }
    if r.is_zero() {
        // Every demand point must be a chosen center.
        let mut centers: Vec<usize> = Vec::new();
        for p in demand {
            if centers.iter().any(|&c| supply[c] == *p) {
                continue;
            }
            let Some(c) = supply.iter().position(|s| s == p) else { return Ok(None) };
            centers.push(c);
            if centers.len() > 3 {
                return Ok(None);
            }
        }
        for c in 0..supply.len() {
            if centers.len() == 3 {
                break;
            }
            if !centers.contains(&c) {
                centers.push(c);
            }
        }
        centers.sort_unstable();
        return Ok(Some(centers));
    }
    // Squares of side 2r around the supply, scaled to unit side.
    let scale = Rational::from_integer(2.into()) * r;
    let half = Rational::new(1.into(), 2.into());
    let pts: Vec<PointD> = demand.iter().map(|p| PointD::new(p.coords.iter().map(|c| c / &scale).collect())).collect();
    let squares: Vec<ExtRect> = supply
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let x = &s.coords[0] / &scale;
            let y = &s.coords[1] / &scale;
            ExtRect::closed2(&x - &half, &x + &half, &y - &half, &y + &half, None, i)
        })
        .collect();
    Ok(solve(&pts, &squares, Variant::UnitUnw, None)?.map(|s| s.ids.to_vec()))
}

/// Rows of a sorted matrix `a[i] - b[j]`, with `a` ascending and `b`
/// descending so every row and column increases.
struct DiffMatrix<'a> {
    a: &'a [Rational],
    b: Vec<Rational>,
}

impl DiffMatrix<'_> {
    fn at(&self, i: usize, j: usize) -> Rational {
        &self.a[i] - &self.b[j]
    }

    /// First column of row `i` whose value is not below (or, with
    /// `strict`, above) `v`.
    fn bound(&self, i: usize, v: &Rational, strict: bool) -> usize {
        let (mut lo, mut hi) = (0, self.b.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            let x = self.at(i, mid);
            if if strict { x <= *v } else { x < *v } {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        lo
    }
}

fn sorted(v: impl Iterator<Item = Rational>) -> Vec<Rational> {
    let mut v: Vec<Rational> = v.collect();
    v.sort();
    v
}

/// Minimum L∞ radius at which three supply points cover the demand, with a
/// witness. The supply defaults to the demand.
pub fn rect_d3c_optimize(demand: &[PointD], supply: Option<&[PointD]>, search: RadiusSearch) -> Result<CenterSolution> {
    let sup = supply.unwrap_or(demand);
    check_planar(demand)?;
    check_planar(sup)?;
    if sup.is_empty() {
        return Err(Error::Invalid("no candidate centers".into()));
    }
    let finish = |r: Rational| -> Result<CenterSolution> {
        let centers = rect_d3c_decide(demand, supply, &r)?.expect("radius was decided feasible");
        Ok(CenterSolution { value: r, metric: Metric::Linf, centers })
    };
    if demand.is_empty() {
        return finish(Rational::zero());
    }
    let feasible = |r: &Rational| rect_d3c_decide(demand, supply, r).map(|o| o.is_some());
    let dx = sorted(demand.iter().map(|p| p.coords[0].clone()));
    let dy = sorted(demand.iter().map(|p| p.coords[1].clone()));
    let sx: Vec<Rational> = sup.iter().map(|p| p.coords[0].clone()).collect();
    let sy: Vec<Rational> = sup.iter().map(|p| p.coords[1].clone()).collect();
    match search {
        RadiusSearch::SortAll => {
            let mut cand: Vec<Rational> = Vec::with_capacity(2 * dx.len() * sx.len() + 1);
            cand.push(Rational::zero());
            for (d, s) in [(&dx, &sx), (&dy, &sy)] {
                for a in d.iter() {
                    for b in s.iter() {
                        cand.push((a - b).abs());
                    }
                }
            }
            cand.sort();
            cand.dedup();
            // Largest candidate always works: one center reaches everything.
            let (mut lo, mut hi) = (0usize, cand.len() - 1);
            while lo < hi {
                let mid = (lo + hi) / 2;
                if feasible(&cand[mid])? {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            finish(cand[lo].clone())
        }
        RadiusSearch::SortedMatrix => {
            // d - s and s - d = (-d) - (-s) on each axis.
            let desc = |v: &[Rational], sign: bool| {
                let mut v: Vec<Rational> = v.iter().map(|x| if sign { -x } else { x.clone() }).collect();
                v.sort_by(|a, b| b.cmp(a));
                v
            };
            let ndx = sorted(dx.iter().map(|x| -x));
            let ndy = sorted(dy.iter().map(|x| -x));
            let mats = [
                DiffMatrix { a: &dx, b: desc(&sx, false) },
                DiffMatrix { a: &dy, b: desc(&sy, false) },
                DiffMatrix { a: &ndx, b: desc(&sx, true) },
                DiffMatrix { a: &ndy, b: desc(&sy, true) },
            ];
            finish(matrix_search(&mats, feasible)?)
        }
    }
}

/// Smallest nonnegative entry `v` of the matrices with `feasible(v)`, given
/// that feasibility is monotone and zero or some entry is feasible.
fn matrix_search(mats: &[DiffMatrix], feasible: impl Fn(&Rational) -> Result<bool>) -> Result<Rational> {
    if feasible(&Rational::zero())? {
        return Ok(Rational::zero());
    }
    // Active entries lie strictly between `lo` and `hi`.
    let mut lo = Rational::zero();
    let mut hi: Option<Rational> = None;
    loop {
        // Per-row active column ranges.
        let mut rows: Vec<(usize, usize, usize, u64)> = Vec::new();
        let mut total = 0u64;
        for (m, mat) in mats.iter().enumerate() {
            for i in 0..mat.a.len() {
                let c0 = mat.bound(i, &lo, true);
                let c1 = hi.as_ref().map_or(mat.b.len(), |v| mat.bound(i, v, false));
                if c0 < c1 {
                    rows.push((m, i, c0, (c1 - c0) as u64));
                    total += (c1 - c0) as u64;
                }
            }
        }
        if total == 0 {
            return Ok(hi.expect("largest candidate is feasible"));
        }
        // Weighted median of row medians.
        let mut meds: Vec<(Rational, u64)> =
            rows.iter().map(|&(m, i, c0, len)| (mats[m].at(i, c0 + (len as usize - 1) / 2), len)).collect();
        meds.sort_by(|a, b| a.0.cmp(&b.0));
        let mut acc = 0u64;
        let mut pivot = meds[0].0.clone();
        for (v, w) in &meds {
            acc += w;
            if 2 * acc >= total {
                pivot = v.clone();
                break;
            }
        }
        if feasible(&pivot)? {
            hi = Some(pivot);
        } else {
            lo = pivot;
        }
    }
}

/// Optimal discrete `k`-center under L2; the value is the squared radius.
pub fn euclid_dkc_brute(points: &[PointD], k: usize) -> Result<CenterSolution> {
    crate::oracles::brute_discrete_kcenter(points, k, Metric::L2, &OracleBudget::default())
}

/// True iff two balls of radius `r` centered at input points cover every
/// point. `r` is a radius under L∞ and a squared radius under L2. Computed as
/// a Boolean product of the "farther than r" matrix with itself.
pub fn d2c_matrix_decide(points: &[PointD], r: &Rational, metric: Metric) -> bool {
    let n = points.len();
    if n == 0 {
        return true;
    }
    let words = n.div_ceil(64);
    let far: Vec<Vec<u64>> = points
        .iter()
        .map(|p| {
            let mut row = vec![0u64; words];
            for (z, q) in points.iter().enumerate() {
                let d = match metric {
                    Metric::Linf => dist_linf(p, q),
                    Metric::L2 => dist2(p, q),
                };
                if d > *r {
                    row[z / 64] |= 1 << (z % 64);
                }
            }
            row
        })
        .collect();
    // Entry (p, q) of the product is set iff some z is far from both.
    (0..n).any(|p| (p..n).any(|q| far[p].iter().zip(&far[q]).all(|(a, b)| a & b == 0)))
}
