//! Interval boxes (axis-aligned interval vectors) and interval matrices,
//! plus the point (`f64`) vector and matrix aliases they interoperate with.

use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::{add_up, mul_up, Interval, IntervalError};

/// Point vector.
pub type Vecf<const N: usize> = [f64; N];
/// Point matrix, row major.
pub type Matf<const R: usize, const C: usize> = [[f64; C]; R];
pub type Mat2 = Matf<2, 2>;
pub type Mat3 = Matf<3, 3>;

/// An axis-aligned box: a vector of intervals, one per coordinate.
#[derive(Clone, Copy, PartialEq)]
pub struct IVec<const N: usize> {
    comps: [Interval; N],
}

impl<const N: usize> IVec<N> {
    pub const ZERO: IVec<N> = IVec {
        comps: [Interval::ZERO; N],
    };

    #[inline]
    pub fn new(comps: [Interval; N]) -> Self {
        IVec { comps }
    }

    /// Degenerate box at a point.
    #[inline]
    pub fn point(p: Vecf<N>) -> Self {
        IVec {
            comps: p.map(Interval::point),
        }
    }

    /// Box `[c - r, c + r]` componentwise, `r >= 0`.
    pub fn centered(c: Vecf<N>, r: Vecf<N>) -> Self {
        let mut comps = [Interval::ZERO; N];
        for i in 0..N {
            comps[i] = Interval::point(c[i]) + Interval::symmetric(r[i]);
        }
        IVec { comps }
    }

    #[inline]
    pub fn components(&self) -> &[Interval; N] {
        &self.comps
    }

    #[inline]
    pub fn midpoint(&self) -> Vecf<N> {
        self.comps.map(|c| c.midpoint())
    }

    #[inline]
    pub fn widths(&self) -> Vecf<N> {
        self.comps.map(|c| c.width())
    }

    /// Largest componentwise width.
    #[inline]
    pub fn width_max(&self) -> f64 {
        self.comps.iter().map(|c| c.width()).fold(0.0, f64::max)
    }

    /// Upper bound for `sup {‖x‖∞ : x ∈ box}`.
    #[inline]
    pub fn mag_norm_inf(&self) -> f64 {
        self.comps.iter().map(|c| c.mag()).fold(0.0, f64::max)
    }

    pub fn contains_point(&self, p: &Vecf<N>) -> bool {
        (0..N).all(|i| self.comps[i].contains(p[i]))
    }

    pub fn contains_box(&self, other: &IVec<N>) -> bool {
        (0..N).all(|i| self.comps[i].contains_interval(&other.comps[i]))
    }

    pub fn contains_in_interior(&self, other: &IVec<N>) -> bool {
        (0..N).all(|i| self.comps[i].contains_in_interior(&other.comps[i]))
    }

    pub fn hull(&self, other: &IVec<N>) -> IVec<N> {
        let mut comps = self.comps;
        for i in 0..N {
            comps[i] = comps[i].hull(&other.comps[i]);
        }
        IVec { comps }
    }

    /// Componentwise overlap; `None` when empty in any coordinate.
    pub fn intersect(&self, other: &IVec<N>) -> Option<IVec<N>> {
        let mut comps = [Interval::ZERO; N];
        for i in 0..N {
            comps[i] = self.comps[i].intersect(&other.comps[i])?;
        }
        Some(IVec { comps })
    }

    pub fn inflate(&self, eps: f64) -> IVec<N> {
        IVec {
            comps: self.comps.map(|c| c.inflate(eps)),
        }
    }

    /// Inflate each component by `eps` times its own width plus `abs`.
    pub fn inflate_relative(&self, eps: f64, abs: f64) -> IVec<N> {
        IVec {
            comps: self
                .comps
                .map(|c| c.inflate(add_up(mul_up(eps, c.width()), abs))),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.comps.iter().all(|c| c.is_finite())
    }
}

impl<const N: usize> Index<usize> for IVec<N> {
    type Output = Interval;
    #[inline]
    fn index(&self, i: usize) -> &Interval {
        &self.comps[i]
    }
}

impl<const N: usize> IndexMut<usize> for IVec<N> {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut Interval {
        &mut self.comps[i]
    }
}

impl<const N: usize> fmt::Debug for IVec<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.comps.iter()).finish()
    }
}

impl<const N: usize> Neg for IVec<N> {
    type Output = IVec<N>;
    fn neg(self) -> IVec<N> {
        IVec {
            comps: self.comps.map(|c| -c),
        }
    }
}

impl<const N: usize> Add for IVec<N> {
    type Output = IVec<N>;
    fn add(self, rhs: IVec<N>) -> IVec<N> {
        let mut comps = self.comps;
        for i in 0..N {
            comps[i] = comps[i] + rhs.comps[i];
        }
        IVec { comps }
    }
}

impl<const N: usize> Sub for IVec<N> {
    type Output = IVec<N>;
    fn sub(self, rhs: IVec<N>) -> IVec<N> {
        let mut comps = self.comps;
        for i in 0..N {
            comps[i] = comps[i] - rhs.comps[i];
        }
        IVec { comps }
    }
}

impl<const N: usize> Mul<Interval> for IVec<N> {
    type Output = IVec<N>;
    fn mul(self, rhs: Interval) -> IVec<N> {
        IVec {
            comps: self.comps.map(|c| c * rhs),
        }
    }
}

impl<const N: usize> Mul<f64> for IVec<N> {
    type Output = IVec<N>;
    fn mul(self, rhs: f64) -> IVec<N> {
        self * Interval::point(rhs)
    }
}

/// A matrix of intervals, row major.
#[derive(Clone, Copy, PartialEq)]
pub struct IMat<const R: usize, const C: usize> {
    rows: [[Interval; C]; R],
}

impl<const R: usize, const C: usize> IMat<R, C> {
    pub const ZERO: IMat<R, C> = IMat {
        rows: [[Interval::ZERO; C]; R],
    };

    #[inline]
    pub fn new(rows: [[Interval; C]; R]) -> Self {
        IMat { rows }
    }

    #[inline]
    pub fn from_point(m: &Matf<R, C>) -> Self {
        let mut rows = [[Interval::ZERO; C]; R];
        for i in 0..R {
            for j in 0..C {
                rows[i][j] = Interval::point(m[i][j]);
            }
        }
        IMat { rows }
    }

    #[inline]
    pub fn rows(&self) -> &[[Interval; C]; R] {
        &self.rows
    }

    pub fn midpoint(&self) -> Matf<R, C> {
        let mut m = [[0.0; C]; R];
        for i in 0..R {
            for j in 0..C {
                m[i][j] = self.rows[i][j].midpoint();
            }
        }
        m
    }

    pub fn hull(&self, other: &IMat<R, C>) -> IMat<R, C> {
        let mut rows = self.rows;
        for i in 0..R {
            for j in 0..C {
                rows[i][j] = rows[i][j].hull(&other.rows[i][j]);
            }
        }
        IMat { rows }
    }

    pub fn contains_mat(&self, other: &IMat<R, C>) -> bool {
        (0..R).all(|i| (0..C).all(|j| self.rows[i][j].contains_interval(&other.rows[i][j])))
    }

    pub fn width_max(&self) -> f64 {
        let mut w = 0.0f64;
        for i in 0..R {
            for j in 0..C {
                w = w.max(self.rows[i][j].width());
            }
        }
        w
    }

    /// Upper bound for the operator ∞-norm `max_i Σ_j |a_ij|` over all
    /// point matrices inside.
    pub fn op_norm_inf(&self) -> f64 {
        let mut norm = 0.0f64;
        for i in 0..R {
            let mut row = 0.0f64;
            for j in 0..C {
                row = add_up(row, self.rows[i][j].mag());
            }
            norm = norm.max(row);
        }
        norm
    }

    pub fn mul_vec(&self, v: &IVec<C>) -> IVec<R> {
        let mut out = [Interval::ZERO; R];
        for i in 0..R {
            let mut acc = Interval::ZERO;
            for j in 0..C {
                acc = acc + self.rows[i][j] * v[j];
            }
            out[i] = acc;
        }
        IVec::new(out)
    }

    pub fn transpose(&self) -> IMat<C, R> {
        let mut rows = [[Interval::ZERO; R]; C];
        for i in 0..R {
            for j in 0..C {
                rows[j][i] = self.rows[i][j];
            }
        }
        IMat { rows }
    }
}

impl<const N: usize> IMat<N, N> {
    pub fn identity() -> Self {
        let mut rows = [[Interval::ZERO; N]; N];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Interval::ONE;
        }
        IMat { rows }
    }
}

impl<const R: usize, const C: usize> Index<(usize, usize)> for IMat<R, C> {
    type Output = Interval;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Interval {
        &self.rows[i][j]
    }
}

impl<const R: usize, const C: usize> IndexMut<(usize, usize)> for IMat<R, C> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Interval {
        &mut self.rows[i][j]
    }
}

impl<const R: usize, const C: usize> fmt::Debug for IMat<R, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for row in &self.rows {
            list.entry(&&row[..]);
        }
        list.finish()
    }
}

impl<const R: usize, const C: usize> Add for IMat<R, C> {
    type Output = IMat<R, C>;
    fn add(self, rhs: IMat<R, C>) -> IMat<R, C> {
        let mut rows = self.rows;
        for i in 0..R {
            for j in 0..C {
                rows[i][j] = rows[i][j] + rhs.rows[i][j];
            }
        }
        IMat { rows }
    }
}

impl<const R: usize, const K: usize, const C: usize> Mul<IMat<K, C>> for IMat<R, K> {
    type Output = IMat<R, C>;
    fn mul(self, rhs: IMat<K, C>) -> IMat<R, C> {
        let mut rows = [[Interval::ZERO; C]; R];
        for i in 0..R {
            for j in 0..C {
                let mut acc = Interval::ZERO;
                for k in 0..K {
                    acc = acc + self.rows[i][k] * rhs.rows[k][j];
                }
                rows[i][j] = acc;
            }
        }
        IMat { rows }
    }
}

impl<const R: usize, const C: usize> Mul<Interval> for IMat<R, C> {
    type Output = IMat<R, C>;
    fn mul(self, rhs: Interval) -> IMat<R, C> {
        let mut rows = self.rows;
        for row in rows.iter_mut() {
            for e in row.iter_mut() {
                *e = *e * rhs;
            }
        }
        IMat { rows }
    }
}

impl IMat<2, 2> {
    /// Rigorous inverse through the adjugate; errs when the determinant
    /// enclosure contains zero.
    pub fn inverse(&self) -> Result<IMat<2, 2>, IntervalError> {
        let [[a, b], [c, d]] = self.rows;
        let det = a * d - b * c;
        if det.contains(0.0) {
            return Err(IntervalError::DivisionByContainedZero);
        }
        Ok(IMat {
            rows: [[d / det, -b / det], [-c / det, a / det]],
        })
    }
}

impl IMat<3, 3> {
    /// Rigorous inverse through the adjugate; errs when the determinant
    /// enclosure contains zero.
    pub fn inverse(&self) -> Result<IMat<3, 3>, IntervalError> {
        let m = &self.rows;
        let cof = |r1: usize, c1: usize, r2: usize, c2: usize| m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
        let c00 = cof(1, 1, 2, 2);
        let c01 = cof(1, 0, 2, 2);
        let c02 = cof(1, 0, 2, 1);
        let det = m[0][0] * c00 - m[0][1] * c01 + m[0][2] * c02;
        if det.contains(0.0) {
            return Err(IntervalError::DivisionByContainedZero);
        }
        let adj = [
            [c00, -(m[0][1] * m[2][2] - m[0][2] * m[2][1]), m[0][1] * m[1][2] - m[0][2] * m[1][1]],
            [-c01, m[0][0] * m[2][2] - m[0][2] * m[2][0], -(m[0][0] * m[1][2] - m[0][2] * m[1][0])],
            [c02, -(m[0][0] * m[2][1] - m[0][1] * m[2][0]), m[0][0] * m[1][1] - m[0][1] * m[1][0]],
        ];
        let mut rows = adj;
        for row in rows.iter_mut() {
            for e in row.iter_mut() {
                *e = *e / det;
            }
        }
        Ok(IMat { rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi)
    }

    #[test]
    fn box_midpoint_and_containment() {
        let b = IVec::new([iv(0.0, 1.0), iv(-2.0, 2.0)]);
        let m = b.midpoint();
        assert!(b.contains_point(&m));
        assert!(b.widths()[0] >= 1.0);
    }

    #[test]
    fn box_intersection_empty_is_none() {
        let a = IVec::new([iv(0.0, 1.0), iv(0.0, 1.0)]);
        let b = IVec::new([iv(2.0, 3.0), iv(0.0, 1.0)]);
        assert!(a.intersect(&b).is_none());
        assert!(a.intersect(&a).is_some());
    }

    #[test]
    fn matrix_vector_product_encloses_point_products() {
        let m = IMat::from_point(&[[1.0, 2.0], [-1.0, 0.5]]);
        let v = IVec::new([iv(-1.0, 1.0), iv(0.0, 2.0)]);
        let r = m.mul_vec(&v);
        // sample corners
        for &x in &[-1.0, 1.0] {
            for &y in &[0.0, 2.0] {
                assert!(r[0].contains(x + 2.0 * y));
                assert!(r[1].contains(-x + 0.5 * y));
            }
        }
    }

    #[test]
    fn inverse_2x2_encloses_true_inverse() {
        let m = IMat::from_point(&[[2.0, 1.0], [1.0, 1.0]]);
        let inv = m.inverse().unwrap();
        // true inverse [[1,-1],[-1,2]]
        assert!(inv[(0, 0)].contains(1.0));
        assert!(inv[(0, 1)].contains(-1.0));
        assert!(inv[(1, 0)].contains(-1.0));
        assert!(inv[(1, 1)].contains(2.0));
        let id = m * inv;
        assert!(id[(0, 0)].contains(1.0) && id[(0, 1)].contains(0.0));
    }

    #[test]
    fn inverse_3x3_round_trip() {
        let m = IMat::from_point(&[[1.0, 2.0, 0.0], [0.0, 1.0, 1.0], [1.0, 0.0, 3.0]]);
        let inv = m.inverse().unwrap();
        let id = m * inv;
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!(id[(i, j)].contains(want));
                assert!(id[(i, j)].width() < 1e-12);
            }
        }
    }

    #[test]
    fn singular_matrix_inverse_fails() {
        let m = IMat::from_point(&[[1.0, 2.0], [2.0, 4.0]]);
        assert!(m.inverse().is_err());
    }

    #[test]
    fn op_norm_inf_is_max_abs_row_sum() {
        let m = IMat::from_point(&[[1.0, -2.0], [0.5, 0.25]]);
        let n = m.op_norm_inf();
        assert!(n >= 3.0 && n < 3.0 + 1e-12);
    }
}
