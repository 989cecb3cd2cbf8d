//! Exact arithmetic in the field of rationals extended by the square root of 39.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::geom::fmt_rational;
use crate::Rational;

/// The number `a + b·√39`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Q39 {
    pub a: Rational,
    pub b: Rational,
}

impl Q39 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Q39 { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        Q39 { a, b: Rational::zero() }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Sign decided without approximating the root: when the parts disagree
    /// in sign, compare `a²` with `39·b²`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            (sa, _) => {
                let lhs = &self.a * &self.a;
                let rhs = Rational::from_integer(39.into()) * &self.b * &self.b;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn square(&self) -> Q39 {
        self * self
    }
}

impl Ord for Q39 {
    fn cmp(&self, o: &Self) -> Ordering {
        (self - o).signum()
    }
}

impl PartialOrd for Q39 {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Q39 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", fmt_rational(&self.a))
        } else {
            let sign = if self.b.is_negative() { "-" } else { "+" };
            write!(f, "{}{}{}*sqrt39", fmt_rational(&self.a), sign, fmt_rational(&self.b.abs()))
        }
    }
}

impl Add for &Q39 {
    type Output = Q39;
    fn add(self, o: &Q39) -> Q39 {
        Q39 { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &Q39 {
    type Output = Q39;
    fn sub(self, o: &Q39) -> Q39 {
        Q39 { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &Q39 {
    type Output = Q39;
    fn mul(self, o: &Q39) -> Q39 {
        let r39 = Rational::from_integer(39.into());
        Q39 { a: &self.a * &o.a + r39 * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a }
    }
}

impl Neg for &Q39 {
    type Output = Q39;
    fn neg(self) -> Q39 {
        Q39 { a: -&self.a, b: -&self.b }
    }
}

impl From<Rational> for Q39 {
    fn from(a: Rational) -> Self {
        Q39::rational(a)
    }
}

/// Squared Euclidean distance between two points over the extension.
pub fn dist2_q39(p: &[Q39], q: &[Q39]) -> Q39 {
    p.iter().zip(q).fold(Q39::default(), |s, (x, y)| {
        let d = x - y;
        &s + &d.square()
    })
}
