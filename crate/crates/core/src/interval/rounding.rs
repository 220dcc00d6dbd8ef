//! Directed-rounding primitives on `f64`.
//!
//! IEEE 754 hardware rounds to nearest; sound interval arithmetic needs
//! results rounded toward ∓∞. Two realisations sit behind the same four
//! functions, selected by the `ulp-rounding` cargo feature:
//!
//! - default: error-free transformations (Knuth two-sum, Dekker/Veltkamp
//!   two-product, fused residual for division). The rounding error of the
//!   nearest result is recovered exactly and the endpoint is nudged only
//!   when the error has the wrong sign, so exact operations stay exact.
//! - `ulp-rounding`: unconditionally step one ulp outward after every
//!   operation. Blunter, trivially auditable.
//!
//! Both are sound; the containment fuzz suite passes under either.

/// 2^27 + 1, Veltkamp splitter for `f64`.
const SPLIT: f64 = 134_217_729.0;

/// Magnitude guard below which the Veltkamp split cannot overflow.
const SPLIT_GUARD: f64 = 1e300;

#[inline(always)]
pub fn next_down(x: f64) -> f64 {
    if x.is_nan() || x == f64::NEG_INFINITY {
        x
    } else if x == 0.0 {
        -f64::from_bits(1)
    } else if x > 0.0 {
        f64::from_bits(x.to_bits() - 1)
    } else {
        f64::from_bits(x.to_bits() + 1)
    }
}

#[inline(always)]
pub fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        x
    } else if x == 0.0 {
        f64::from_bits(1)
    } else if x > 0.0 {
        f64::from_bits(x.to_bits() + 1)
    } else {
        f64::from_bits(x.to_bits() - 1)
    }
}

/// Knuth two-sum: `s = fl(a+b)` and the exact error `e` with `a+b = s+e`.
/// Exact whenever `s` is finite.
#[inline(always)]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Veltkamp split of `a` into a 26-bit head and tail, `a = hi + lo` exactly.
#[inline(always)]
fn veltkamp(a: f64) -> (f64, f64) {
    let t = SPLIT * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

/// Dekker two-product: `p = fl(a·b)` and the exact error `e` with
/// `a·b = p+e`. Requires `p` normal and both factors below the split guard.
#[inline(always)]
fn two_product(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = veltkamp(a);
    let (bh, bl) = veltkamp(b);
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

#[cfg(not(feature = "ulp-rounding"))]
mod imp {
    use super::*;

    #[inline(always)]
    pub fn add_down(a: f64, b: f64) -> f64 {
        let (s, e) = two_sum(a, b);
        if !s.is_finite() {
            return if s == f64::INFINITY { f64::MAX } else { s };
        }
        if e < 0.0 {
            next_down(s)
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn add_up(a: f64, b: f64) -> f64 {
        let (s, e) = two_sum(a, b);
        if !s.is_finite() {
            return if s == f64::NEG_INFINITY { -f64::MAX } else { s };
        }
        if e > 0.0 {
            next_up(s)
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn mul_down(a: f64, b: f64) -> f64 {
        if a == 0.0 || b == 0.0 {
            return 0.0;
        }
        let p = a * b;
        if !p.is_normal() || a.abs() > SPLIT_GUARD || b.abs() > SPLIT_GUARD {
            // Subnormal or saturated: the error term is unreliable, step blindly.
            return if p == f64::INFINITY { f64::MAX } else { next_down(p) };
        }
        let (p, e) = two_product(a, b);
        if e < 0.0 {
            next_down(p)
        } else {
            p
        }
    }

    #[inline(always)]
    pub fn mul_up(a: f64, b: f64) -> f64 {
        if a == 0.0 || b == 0.0 {
            return 0.0;
        }
        let p = a * b;
        if !p.is_normal() || a.abs() > SPLIT_GUARD || b.abs() > SPLIT_GUARD {
            return if p == f64::NEG_INFINITY { -f64::MAX } else { next_up(p) };
        }
        let (p, e) = two_product(a, b);
        if e > 0.0 {
            next_up(p)
        } else {
            p
        }
    }

    /// Residual-corrected division. `q = fl(a/b)`; the sign of the exact
    /// residual `q·b - a` (recovered through a two-product, exact in the
    /// guarded range) decides which side `q` errs on. When the residual is
    /// zero we still step outward: a nonzero true residual can round to
    /// zero in the extreme subnormal range, so exactness is not certain.
    #[inline(always)]
    pub fn div_down(a: f64, b: f64) -> f64 {
        let q = a / b;
        if !q.is_normal() || q.abs() > SPLIT_GUARD || b.abs() > SPLIT_GUARD {
            return if q == f64::INFINITY { f64::MAX } else { next_down(q) };
        }
        let (p, e) = two_product(q, b);
        // residual = (q·b - a) exactly = (p - a) + e; p - a is exact by Sterbenz.
        let r = (p - a) + e;
        let q_high = if b > 0.0 { r > 0.0 } else { r < 0.0 };
        if q_high || r == 0.0 {
            next_down(q)
        } else {
            q
        }
    }

    #[inline(always)]
    pub fn div_up(a: f64, b: f64) -> f64 {
        let q = a / b;
        if !q.is_normal() || q.abs() > SPLIT_GUARD || b.abs() > SPLIT_GUARD {
            return if q == f64::NEG_INFINITY { -f64::MAX } else { next_up(q) };
        }
        let (p, e) = two_product(q, b);
        let r = (p - a) + e;
        let q_low = if b > 0.0 { r < 0.0 } else { r > 0.0 };
        if q_low || r == 0.0 {
            next_up(q)
        } else {
            q
        }
    }
}

#[cfg(feature = "ulp-rounding")]
mod imp {
    use super::*;

    #[inline(always)]
    pub fn add_down(a: f64, b: f64) -> f64 {
        let s = a + b;
        if s == f64::NEG_INFINITY {
            s
        } else {
            next_down(s)
        }
    }

    #[inline(always)]
    pub fn add_up(a: f64, b: f64) -> f64 {
        let s = a + b;
        if s == f64::INFINITY {
            s
        } else {
            next_up(s)
        }
    }

    #[inline(always)]
    pub fn mul_down(a: f64, b: f64) -> f64 {
        if a == 0.0 || b == 0.0 {
            return 0.0;
        }
        let p = a * b;
        if p == f64::NEG_INFINITY {
            p
        } else {
            next_down(p)
        }
    }

    #[inline(always)]
    pub fn mul_up(a: f64, b: f64) -> f64 {
        if a == 0.0 || b == 0.0 {
            return 0.0;
        }
        let p = a * b;
        if p == f64::INFINITY {
            p
        } else {
            next_up(p)
        }
    }

    #[inline(always)]
    pub fn div_down(a: f64, b: f64) -> f64 {
        let q = a / b;
        if q == f64::NEG_INFINITY {
            q
        } else {
            next_down(q)
        }
    }

    #[inline(always)]
    pub fn div_up(a: f64, b: f64) -> f64 {
        let q = a / b;
        if q == f64::INFINITY {
            q
        } else {
            next_up(q)
        }
    }
}

pub(crate) use imp::{add_down, add_up, div_down, div_up, mul_down, mul_up};

#[inline(always)]
pub(crate) fn sub_down(a: f64, b: f64) -> f64 {
    add_down(a, -b)
}

#[inline(always)]
pub(crate) fn sub_up(a: f64, b: f64) -> f64 {
    add_up(a, -b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_sums_bracket_the_exact_value() {
        let a = 0.1;
        let b = 0.2;
        let lo = add_down(a, b);
        let hi = add_up(a, b);
        assert!(lo <= 0.3 && 0.3 <= hi);
        assert!(hi - lo <= 2.0 * f64::EPSILON);
    }

    #[test]
    fn exact_operations_stay_exact_under_eft() {
        #[cfg(not(feature = "ulp-rounding"))]
        {
            assert_eq!(add_down(0.5, 0.25), 0.75);
            assert_eq!(add_up(0.5, 0.25), 0.75);
            assert_eq!(mul_down(3.0, 4.0), 12.0);
            assert_eq!(mul_up(3.0, 4.0), 12.0);
        }
    }

    #[test]
    fn division_brackets_quotient() {
        let lo = div_down(1.0, 3.0);
        let hi = div_up(1.0, 3.0);
        assert!(lo < hi);
        assert!(lo * 3.0 <= 1.0 && 1.0 <= hi * 3.0);
    }

    #[test]
    fn saturation_at_the_range_edge() {
        assert_eq!(add_up(f64::MAX, f64::MAX), f64::INFINITY);
        assert_eq!(add_down(f64::MAX, f64::MAX), f64::MAX);
        assert_eq!(mul_down(-f64::MAX, f64::MAX), f64::NEG_INFINITY);
    }

    #[test]
    fn next_functions_step_one_ulp() {
        assert_eq!(next_up(1.0), 1.0 + f64::EPSILON);
        assert_eq!(next_down(1.0 + f64::EPSILON), 1.0);
        assert!(next_up(0.0) > 0.0);
        assert!(next_down(0.0) < 0.0);
    }
}
