//! Integer key space for planar instances. Every finite coordinate is replaced
//! by its rank among the coordinate values of the same axis, so all solver
//! comparisons are integer comparisons with the same outcome as the exact ones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::geom::{ExtRect, ExtScalar, PointD, Rational};

pub const NEG: i64 = -(1 << 40);
pub const POS: i64 = 1 << 40;

/// Closed rectangle in key space; `NEG`/`POS` stand for the infinities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KRect {
    pub xl: i64,
    pub xh: i64,
    pub yl: i64,
    pub yh: i64,
}

impl KRect {
    pub const ALL: KRect = KRect { xl: NEG, xh: POS, yl: NEG, yh: POS };

    pub fn new(xl: i64, xh: i64, yl: i64, yh: i64) -> Self {
        KRect { xl, xh, yl, yh }
    }

    #[inline]
    pub fn contains(&self, x: i64, y: i64) -> bool {
        self.xl <= x && x <= self.xh && self.yl <= y && y <= self.yh
    }

    pub fn is_empty(&self) -> bool {
        self.xl > self.xh || self.yl > self.yh
    }

    pub fn intersect(&self, o: &KRect) -> KRect {
        KRect { xl: self.xl.max(o.xl), xh: self.xh.min(o.xh), yl: self.yl.max(o.yl), yh: self.yh.min(o.yh) }
    }

    pub fn encloses(&self, o: &KRect) -> bool {
        self.xl <= o.xl && self.xh >= o.xh && self.yl <= o.yl && self.yh >= o.yh
    }

    pub fn hull(&self, o: &KRect) -> KRect {
        KRect { xl: self.xl.min(o.xl), xh: self.xh.max(o.xh), yl: self.yl.min(o.yl), yh: self.yh.max(o.yh) }
    }
}

/// A planar instance with closed rectangles, mapped to key space.
#[derive(Clone, Debug)]
pub struct Planar {
    pub xs: Vec<Rational>,
    pub ys: Vec<Rational>,
    pub pts: Vec<(i64, i64)>,
    /// Rectangles sorted by id.
    pub rects: Vec<KRect>,
    /// Weights multiplied by `scale`, exact integers.
    pub weights: Vec<i64>,
    pub scale: BigInt,
    pub ids: Vec<usize>,
    pub weighted: bool,
}

fn key_of(vals: &[Rational], v: &ExtScalar) -> i64 {
    match v {
        ExtScalar::NegInf => NEG,
        ExtScalar::PosInf => POS,
        ExtScalar::Finite(r) => vals.binary_search(r).expect("value registered") as i64,
    }
}

impl Planar {
    /// Requires planar points, closed rectangles and distinct ids.
    pub fn new(points: &[PointD], rects: &[ExtRect]) -> Result<Planar> {
        for p in points {
            if p.dim() != 2 {
                return Err(Error::DimensionMismatch { expected: 2, found: p.dim() });
            }
        }
        let mut order: Vec<usize> = (0..rects.len()).collect();
        order.sort_by_key(|&i| rects[i].id);
        for w in order.windows(2) {
            if rects[w[0]].id == rects[w[1]].id {
                return Err(Error::Invalid(format!("duplicate rectangle id {}", rects[w[0]].id)));
            }
        }
        for r in rects {
            if r.dim() != 2 {
                return Err(Error::DimensionMismatch { expected: 2, found: r.dim() });
            }
            if !r.is_valid() {
                return Err(Error::Invalid(format!("rectangle {} has an empty side", r.id)));
            }
            if !r.is_closed() {
                return Err(Error::OpenSide(r.id));
            }
        }
        let weighted = rects.iter().any(|r| r.weight.is_some());
        if weighted && rects.iter().any(|r| r.weight.is_none()) {
            return Err(Error::Invalid("mixed weighted and unweighted rectangles".into()));
        }
        let mut xs: Vec<Rational> = points.iter().map(|p| p.coords[0].clone()).collect();
        let mut ys: Vec<Rational> = points.iter().map(|p| p.coords[1].clone()).collect();
        for r in rects {
            for s in [&r.sides[0].lo, &r.sides[0].hi] {
                if let Some(v) = s.finite() {
                    xs.push(v.clone());
                }
            }
            for s in [&r.sides[1].lo, &r.sides[1].hi] {
                if let Some(v) = s.finite() {
                    ys.push(v.clone());
                }
            }
        }
        xs.sort();
        xs.dedup();
        ys.sort();
        ys.dedup();
        let pts = points
            .iter()
            .map(|p| {
                (
                    xs.binary_search(&p.coords[0]).unwrap() as i64,
                    ys.binary_search(&p.coords[1]).unwrap() as i64,
                )
            })
            .collect();
        let krects = order
            .iter()
            .map(|&i| {
                let r = &rects[i];
                KRect {
                    xl: key_of(&xs, &r.sides[0].lo),
                    xh: key_of(&xs, &r.sides[0].hi),
                    yl: key_of(&ys, &r.sides[1].lo),
                    yh: key_of(&ys, &r.sides[1].hi),
                }
            })
            .collect();
        let raw: Vec<Rational> = order.iter().map(|&i| rects[i].weight_or_one()).collect();
        let scale = raw.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let mut weights = Vec::with_capacity(raw.len());
        let limit = BigInt::from(1i64 << 56);
        for w in &raw {
            let v = w.numer() * (&scale / w.denom());
            if v.abs() >= limit {
                return Err(Error::Invalid("weights too large for exact integer scaling".into()));
            }
            weights.push(v.to_i64().unwrap());
        }
        Ok(Planar {
            xs,
            ys,
            pts,
            rects: krects,
            weights,
            scale,
            ids: order.iter().map(|&i| rects[i].id).collect(),
            weighted,
        })
    }

    pub fn n_points(&self) -> usize {
        self.pts.len()
    }

    pub fn n_rects(&self) -> usize {
        self.rects.len()
    }

    pub fn weight_value(&self, w: i128) -> Rational {
        Rational::new(BigInt::from(w), self.scale.clone())
    }

    /// Bounding box of all points in key space.
    pub fn bbox0(&self) -> Option<KRect> {
        let mut it = self.pts.iter();
        let &(x, y) = it.next()?;
        let mut b = KRect::new(x, x, y, y);
        for &(x, y) in it {
            b = b.hull(&KRect::new(x, x, y, y));
        }
        Some(b)
    }

    /// Replaces each side whose constraint is vacuous over the points'
    /// bounding box by the matching infinity. The covered point set of every
    /// rectangle is unchanged.
    pub fn extended(&self) -> Vec<KRect> {
        let Some(b) = self.bbox0() else {
            return self.rects.clone();
        };
        self.rects
            .iter()
            .map(|r| KRect {
                xl: if r.xl <= b.xl { NEG } else { r.xl },
                xh: if r.xh >= b.xh { POS } else { r.xh },
                yl: if r.yl <= b.yl { NEG } else { r.yl },
                yh: if r.yh >= b.yh { POS } else { r.yh },
            })
            .collect()
    }

    pub fn key_to_ext_x(&self, k: i64) -> ExtScalar {
        key_to_ext(&self.xs, k)
    }

    pub fn key_to_ext_y(&self, k: i64) -> ExtScalar {
        key_to_ext(&self.ys, k)
    }
}

fn key_to_ext(vals: &[Rational], k: i64) -> ExtScalar {
    if k <= NEG {
        ExtScalar::NegInf
    } else if k >= POS {
        ExtScalar::PosInf
    } else {
        ExtScalar::Finite(vals[k as usize].clone())
    }
}
