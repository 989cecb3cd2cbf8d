//! Exact scalars, points and axis-aligned boxes with extended, possibly open endpoints.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Shorthand for building `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for an integer rational.
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `a`, `-a`, `a/b`, or a finite decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n).ok()?;
        let d = BigInt::from_str(d).ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = ip.starts_with('-');
        let ip_abs = ip.trim_start_matches(['-', '+']);
        let whole = if ip_abs.is_empty() {
            BigInt::zero()
        } else {
            if !ip_abs.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            BigInt::from_str(ip_abs).ok()?
        };
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let frac = BigInt::from_str(fp).ok()?;
        let mag = Rational::new(whole * &scale + frac, scale);
        return Some(if neg { -mag } else { mag });
    }
    BigInt::from_str(s).ok().map(Rational::from_integer)
}

/// Canonical text form: `p` or `p/q` in lowest terms.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A rational extended with the two infinities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtScalar {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtScalar {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtScalar::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtScalar::Finite(_))
    }

    fn rank(&self) -> u8 {
        match self {
            ExtScalar::NegInf => 0,
            ExtScalar::Finite(_) => 1,
            ExtScalar::PosInf => 2,
        }
    }
}

impl From<Rational> for ExtScalar {
    fn from(v: Rational) -> Self {
        ExtScalar::Finite(v)
    }
}

impl Ord for ExtScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtScalar::Finite(a), ExtScalar::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for ExtScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtScalar::NegInf => write!(f, "-inf"),
            ExtScalar::PosInf => write!(f, "inf"),
            ExtScalar::Finite(v) => write!(f, "{}", fmt_rational(v)),
        }
    }
}

impl FromStr for ExtScalar {
    type Err = ();
    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s.trim() {
            "-inf" => Ok(ExtScalar::NegInf),
            "inf" | "+inf" => Ok(ExtScalar::PosInf),
            t => parse_rational(t).map(ExtScalar::Finite).ok_or(()),
        }
    }
}

/// A point with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointD {
    pub coords: Vec<Rational>,
}

impl PointD {
    pub fn new(coords: Vec<Rational>) -> Self {
        PointD { coords }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        PointD { coords: c.iter().map(|&v| int(v)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// One axis of a box: an interval with extended endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: ExtScalar,
    pub hi: ExtScalar,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Interval { lo: lo.into(), hi: hi.into(), lo_closed: true, hi_closed: true }
    }

    pub fn new(lo: ExtScalar, lo_closed: bool, hi: ExtScalar, hi_closed: bool) -> Self {
        let lo_closed = lo_closed && lo.is_finite();
        let hi_closed = hi_closed && hi.is_finite();
        Interval { lo, hi, lo_closed, hi_closed }
    }

    pub fn all() -> Self {
        Interval::new(ExtScalar::NegInf, false, ExtScalar::PosInf, false)
    }

    pub fn contains(&self, v: &Rational) -> bool {
        let lo_ok = match &self.lo {
            ExtScalar::NegInf => true,
            ExtScalar::PosInf => false,
            ExtScalar::Finite(a) => {
                if self.lo_closed {
                    a <= v
                } else {
                    a < v
                }
            }
        };
        lo_ok
            && match &self.hi {
                ExtScalar::PosInf => true,
                ExtScalar::NegInf => false,
                ExtScalar::Finite(b) => {
                    if self.hi_closed {
                        v <= b
                    } else {
                        v < b
                    }
                }
            }
    }

    pub fn is_valid(&self) -> bool {
        match self.lo.cmp(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.lo.is_finite() && self.lo_closed && self.hi_closed,
            Ordering::Greater => false,
        }
    }

    pub fn is_closed(&self) -> bool {
        (self.lo_closed || !self.lo.is_finite()) && (self.hi_closed || !self.hi.is_finite())
    }

    /// True iff `self ⊇ inner` as point sets.
    pub fn encloses(&self, inner: &Interval) -> bool {
        let lo_ok = match self.lo.cmp(&inner.lo) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => !inner.lo.is_finite() || self.lo_closed || !inner.lo_closed,
        };
        let hi_ok = match self.hi.cmp(&inner.hi) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => !inner.hi.is_finite() || self.hi_closed || !inner.hi_closed,
        };
        lo_ok && hi_ok
    }
}

/// Axis-aligned box in R^d with per-side extended, open or closed endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtRect {
    pub sides: Vec<Interval>,
    pub weight: Option<Rational>,
    pub id: usize,
}

impl ExtRect {
    pub fn new(sides: Vec<Interval>, weight: Option<Rational>, id: usize) -> Self {
        ExtRect { sides, weight, id }
    }

    /// Closed planar rectangle `[x0,x1] × [y0,y1]`.
    pub fn closed2(x0: Rational, x1: Rational, y0: Rational, y1: Rational, weight: Option<Rational>, id: usize) -> Self {
        ExtRect::new(vec![Interval::closed(x0, x1), Interval::closed(y0, y1)], weight, id)
    }

    pub fn universe(d: usize, id: usize) -> Self {
        ExtRect::new(vec![Interval::all(); d], None, id)
    }

    pub fn dim(&self) -> usize {
        self.sides.len()
    }

    pub fn is_valid(&self) -> bool {
        self.sides.iter().all(Interval::is_valid)
    }

    pub fn is_closed(&self) -> bool {
        self.sides.iter().all(Interval::is_closed)
    }

    /// Weight, with unweighted rectangles counting 1.
    pub fn weight_or_one(&self) -> Rational {
        self.weight.clone().unwrap_or_else(Rational::one)
    }
}

/// A closed finite planar box, used for bounding boxes of point sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BBox {
    pub xmin: Rational,
    pub xmax: Rational,
    pub ymin: Rational,
    pub ymax: Rational,
}

impl BBox {
    pub fn to_rect(&self, id: usize) -> ExtRect {
        ExtRect::closed2(self.xmin.clone(), self.xmax.clone(), self.ymin.clone(), self.ymax.clone(), None, id)
    }

    pub fn of_points<'a>(pts: impl IntoIterator<Item = &'a PointD>) -> Option<BBox> {
        let mut it = pts.into_iter();
        let p = it.next()?;
        let mut b = BBox {
            xmin: p.coords[0].clone(),
            xmax: p.coords[0].clone(),
            ymin: p.coords[1].clone(),
            ymax: p.coords[1].clone(),
        };
        for p in it {
            let (x, y) = (&p.coords[0], &p.coords[1]);
            if *x < b.xmin {
                b.xmin = x.clone();
            }
            if *x > b.xmax {
                b.xmax = x.clone();
            }
            if *y < b.ymin {
                b.ymin = y.clone();
            }
            if *y > b.ymax {
                b.ymax = y.clone();
            }
        }
        Some(b)
    }
}

fn check_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { expected: a, found: b });
    }
    Ok(())
}

pub fn point_in_rect(p: &PointD, r: &ExtRect) -> Result<bool> {
    check_dim(r.dim(), p.dim())?;
    Ok(r.sides.iter().zip(&p.coords).all(|(s, v)| s.contains(v)))
}

pub fn covers_all(rects: &[ExtRect], points: &[PointD]) -> Result<bool> {
    if let Some(r0) = rects.first() {
        for r in rects {
            check_dim(r0.dim(), r.dim())?;
        }
        for p in points {
            check_dim(r0.dim(), p.dim())?;
        }
    }
    for p in points {
        let mut hit = false;
        for r in rects {
            if point_in_rect(p, r)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn rect_encloses(outer: &ExtRect, inner: &ExtRect) -> Result<bool> {
    check_dim(outer.dim(), inner.dim())?;
    Ok(outer.sides.iter().zip(&inner.sides).all(|(o, i)| o.encloses(i)))
}

/// Squared Euclidean distance.
pub fn dist2(a: &PointD, b: &PointD) -> Rational {
    a.coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| {
            let d = x - y;
            &d * &d
        })
        .fold(Rational::zero(), |s, v| s + v)
}

/// Chebyshev distance.
pub fn dist_linf(a: &PointD, b: &PointD) -> Rational {
    a.coords
        .iter()
        .zip(&b.coords)
        .map(|(x, y)| (x - y).abs())
        .max()
        .unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_and_fractions() {
        assert_eq!(parse_rational("0.25"), Some(rat(1, 4)));
        assert_eq!(parse_rational("-1.5"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("-0.5"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("6/4"), Some(rat(3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(fmt_rational(&rat(6, 4)), "3/2");
    }

    #[test]
    fn ext_order() {
        let a = ExtScalar::NegInf;
        let b = ExtScalar::Finite(int(-1000));
        let c = ExtScalar::PosInf;
        assert!(a < b && b < c && a < c);
    }
}
