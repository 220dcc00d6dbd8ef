//! Outward-rounded interval arithmetic: scalars, boxes and matrices.
//!
//! Every operation returns an enclosure of the exact real-arithmetic result
//! set; see [`rounding`] for how the directed rounding is realised. An empty
//! intersection is a value (`None`), not a fault — covering checks consume
//! emptiness as data.

mod rounding;
mod vec;

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

pub(crate) use rounding::{add_down, add_up, div_down, div_up, mul_down, mul_up, sub_down, sub_up};
pub use rounding::{next_down, next_up};
pub use vec::{IMat, IVec, Mat2, Mat3, Matf, Vecf};

/// Errors raised by fallible interval operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalError {
    /// Division by an interval containing zero.
    DivisionByContainedZero,
    /// Argument outside the representable range of the operation.
    Overflow,
}

impl fmt::Display for IntervalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalError::DivisionByContainedZero => write!(f, "division by interval containing zero"),
            IntervalError::Overflow => write!(f, "argument outside representable range"),
        }
    }
}

/// A closed interval `[lo, hi]` of reals with `lo <= hi`.
///
/// Arithmetic rounds outward, so the result of any operation contains the
/// exact result set `{a ∘ b : a ∈ A, b ∈ B}`.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    /// Interval from endpoints. Panics when `lo > hi` or either is NaN.
    #[inline]
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    /// Degenerate interval `[x, x]`.
    #[inline]
    pub fn point(x: f64) -> Self {
        debug_assert!(!x.is_nan());
        Interval { lo: x, hi: x }
    }

    /// Symmetric interval `[-r, r]`; `r` must be non-negative.
    #[inline]
    pub fn symmetric(r: f64) -> Self {
        Interval::new(-r, r)
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn width(&self) -> f64 {
        sub_up(self.hi, self.lo)
    }

    #[inline]
    pub fn midpoint(&self) -> f64 {
        let m = 0.5 * (self.lo + self.hi);
        if m.is_finite() {
            m
        } else {
            0.5 * self.lo + 0.5 * self.hi
        }
    }

    /// Magnitude: `max |x|` over the interval.
    #[inline]
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Mignitude: `min |x|` over the interval (0 when 0 is contained).
    #[inline]
    pub fn mig(&self) -> f64 {
        if self.contains(0.0) {
            0.0
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    #[inline]
    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    #[inline]
    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Strict containment in the interior.
    #[inline]
    pub fn contains_in_interior(&self, other: &Interval) -> bool {
        self.lo < other.lo && other.hi < self.hi
    }

    /// Smallest interval containing both operands.
    #[inline]
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Overlap of two intervals; `None` when they are disjoint.
    #[inline]
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }

    /// Widen both endpoints outward by `eps >= 0`.
    #[inline]
    pub fn inflate(&self, eps: f64) -> Interval {
        debug_assert!(eps >= 0.0);
        Interval {
            lo: sub_down(self.lo, eps),
            hi: add_up(self.hi, eps),
        }
    }

    /// Tight enclosure of `x²`; sharper than `x * x` when 0 is inside.
    #[inline]
    pub fn sqr(&self) -> Interval {
        let a = mul_down(self.lo, self.lo).min(mul_down(self.hi, self.hi));
        let b = mul_up(self.lo, self.lo).max(mul_up(self.hi, self.hi));
        if self.contains(0.0) {
            Interval { lo: 0.0, hi: b }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    /// Division with the contained-zero check surfaced as an error.
    #[inline]
    pub fn checked_div(&self, rhs: &Interval) -> Result<Interval, IntervalError> {
        if rhs.contains(0.0) {
            return Err(IntervalError::DivisionByContainedZero);
        }
        Ok(div_impl(self, rhs))
    }

    /// Enclosure of `self * scale + offset` for point scalars.
    #[inline]
    pub fn mul_add_point(&self, scale: f64, offset: &Interval) -> Interval {
        *self * Interval::point(scale) + *offset
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.lo, self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl From<f64> for Interval {
    #[inline]
    fn from(x: f64) -> Self {
        Interval::point(x)
    }
}

impl Neg for Interval {
    type Output = Interval;
    #[inline]
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Add for Interval {
    type Output = Interval;
    #[inline]
    fn add(self, rhs: Interval) -> Interval {
        Interval {
            lo: add_down(self.lo, rhs.lo),
            hi: add_up(self.hi, rhs.hi),
        }
    }
}

impl Sub for Interval {
    type Output = Interval;
    #[inline]
    fn sub(self, rhs: Interval) -> Interval {
        Interval {
            lo: sub_down(self.lo, rhs.hi),
            hi: sub_up(self.hi, rhs.lo),
        }
    }
}

impl Mul for Interval {
    type Output = Interval;
    #[inline]
    fn mul(self, rhs: Interval) -> Interval {
        let (a, b) = (self.lo, self.hi);
        let (c, d) = (rhs.lo, rhs.hi);
        // Endpoint selection by sign class; the mixed/mixed case needs two
        // candidates per bound.
        if a >= 0.0 {
            if c >= 0.0 {
                Interval { lo: mul_down(a, c), hi: mul_up(b, d) }
            } else if d <= 0.0 {
                Interval { lo: mul_down(b, c), hi: mul_up(a, d) }
            } else {
                Interval { lo: mul_down(b, c), hi: mul_up(b, d) }
            }
        } else if b <= 0.0 {
            if c >= 0.0 {
                Interval { lo: mul_down(a, d), hi: mul_up(b, c) }
            } else if d <= 0.0 {
                Interval { lo: mul_down(b, d), hi: mul_up(a, c) }
            } else {
                Interval { lo: mul_down(a, d), hi: mul_up(a, c) }
            }
        } else {
            if c >= 0.0 {
                Interval { lo: mul_down(a, d), hi: mul_up(b, d) }
            } else if d <= 0.0 {
                Interval { lo: mul_down(b, c), hi: mul_up(a, c) }
            } else {
                Interval {
                    lo: mul_down(a, d).min(mul_down(b, c)),
                    hi: mul_up(a, c).max(mul_up(b, d)),
                }
            }
        }
    }
}

impl Mul<f64> for Interval {
    type Output = Interval;
    #[inline]
    fn mul(self, rhs: f64) -> Interval {
        self * Interval::point(rhs)
    }
}

impl Add<f64> for Interval {
    type Output = Interval;
    #[inline]
    fn add(self, rhs: f64) -> Interval {
        self + Interval::point(rhs)
    }
}

impl Sub<f64> for Interval {
    type Output = Interval;
    #[inline]
    fn sub(self, rhs: f64) -> Interval {
        self - Interval::point(rhs)
    }
}

/// Panics when the divisor contains zero; use [`Interval::checked_div`] on
/// fallible paths.
impl Div for Interval {
    type Output = Interval;
    #[inline]
    fn div(self, rhs: Interval) -> Interval {
        self.checked_div(&rhs)
            .expect("division by interval containing zero")
    }
}

impl Div<f64> for Interval {
    type Output = Interval;
    #[inline]
    fn div(self, rhs: f64) -> Interval {
        self / Interval::point(rhs)
    }
}

#[inline]
fn div_impl(lhs: &Interval, rhs: &Interval) -> Interval {
    let (a, b) = (lhs.lo, lhs.hi);
    let (c, d) = (rhs.lo, rhs.hi);
    if c > 0.0 {
        if a >= 0.0 {
            Interval { lo: div_down(a, d), hi: div_up(b, c) }
        } else if b <= 0.0 {
            Interval { lo: div_down(a, c), hi: div_up(b, d) }
        } else {
            Interval { lo: div_down(a, c), hi: div_up(b, c) }
        }
    } else {
        // d < 0
        if a >= 0.0 {
            Interval { lo: div_down(b, d), hi: div_up(a, c) }
        } else if b <= 0.0 {
            Interval { lo: div_down(b, c), hi: div_up(a, d) }
        } else {
            Interval { lo: div_down(b, d), hi: div_up(a, d) }
        }
    }
}

/// Upper bound for `eˣ`: returns `u ≥ eˣ` within a few ulps.
///
/// The `libm` exponential is faithfully rounded (error below one ulp); two
/// upward steps turn it into a guaranteed upper bound under that assumption.
/// The test suite pins the result against frozen high-precision reference
/// values across the usable range.
pub fn exp_upper(x: f64) -> Result<f64, IntervalError> {
    if !x.is_finite() {
        return Err(IntervalError::Overflow);
    }
    let e = libm::exp(x);
    if e == f64::INFINITY {
        return Err(IntervalError::Overflow);
    }
    Ok(next_up(next_up(e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi)
    }

    #[test]
    fn endpoint_arithmetic_examples() {
        let s = iv(1.0, 2.0) + iv(3.0, 4.0);
        assert!(s.contains(4.0) && s.contains(6.0));
        assert!(s.width() <= 2.0 + 1e-14);

        let p = iv(-1.0, 2.0) * iv(3.0, 4.0);
        assert!(p.lo() <= -4.0 && p.hi() >= 8.0);
        assert!(p.lo() >= -4.0 - 1e-13 && p.hi() <= 8.0 + 1e-13);
    }

    #[test]
    fn division_by_contained_zero_is_an_error() {
        let r = iv(1.0, 2.0).checked_div(&iv(0.0, 1.0));
        assert_eq!(r, Err(IntervalError::DivisionByContainedZero));
        assert_eq!(
            iv(1.0, 2.0).checked_div(&iv(-1.0, 1.0)),
            Err(IntervalError::DivisionByContainedZero)
        );
    }

    #[test]
    fn hull_and_intersect() {
        assert_eq!(iv(0.0, 1.0).hull(&iv(2.0, 3.0)), iv(0.0, 3.0));
        assert_eq!(iv(0.0, 2.0).intersect(&iv(1.0, 3.0)), Some(iv(1.0, 2.0)));
        assert_eq!(iv(0.0, 1.0).intersect(&iv(2.0, 3.0)), None);
        assert!(iv(0.0, 1.0).contains(0.5));
    }

    #[test]
    fn sqr_is_tight_around_zero() {
        let s = iv(-2.0, 3.0).sqr();
        assert_eq!(s.lo(), 0.0);
        assert!(s.hi() >= 9.0 && s.hi() <= 9.0 * (1.0 + 1e-15));
    }

    #[test]
    fn exp_upper_basics() {
        let u0 = exp_upper(0.0).unwrap();
        assert!(u0 >= 1.0 && u0 <= 1.0 + 1e-12);
        let u1 = exp_upper(1.0).unwrap();
        assert!(u1 >= 2.718281828459045);
        assert!(u1 - 2.718281828459045 <= 4.0 * f64::EPSILON);
        assert_eq!(exp_upper(1000.0), Err(IntervalError::Overflow));
    }

    #[test]
    fn exp_upper_monotone_on_samples() {
        let mut prev = exp_upper(-30.0).unwrap();
        let mut x = -30.0;
        while x <= 30.0 {
            let u = exp_upper(x).unwrap();
            assert!(u >= prev, "exp_upper not monotone at {x}");
            prev = u;
            x += 0.0173;
        }
    }

    #[test]
    fn inflate_widens_by_two_eps() {
        let i = iv(0.25, 0.75);
        let eps = 1e-3;
        let w = i.inflate(eps).width();
        assert!(w >= i.width() + 2.0 * eps - 4.0 * f64::EPSILON);
    }
}
