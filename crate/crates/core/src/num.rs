//! Hypercomplex values and their arithmetic.
//!
//! A value is four real coefficients over the basis of one system:
//! `w = a1*e1 + a2*e2 + a3*e3 + a4*e4`. All operations are pure; binary
//! operations require both operands to come from the same system and
//! report a mismatch otherwise instead of coercing.

use crate::error::Error;
use crate::matrix::Matrix4;
use crate::system::System;

/// Relative tolerance of the zero-divisor test. A value is treated as a
/// zero divisor when `|pseudonorm| <= ZERO_DIVISOR_EPS * (1 + max a_i^2)`;
/// division refuses divisors inside the same band.
pub const ZERO_DIVISOR_EPS: f64 = 1e-12;

/// A hypercomplex number: a system together with coefficients
/// `(a1, a2, a3, a4)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HNum {
    system: System,
    coeffs: [f64; 4],
}

impl System {
    /// A value of this system. Coefficients must be finite.
    pub fn num(&self, coeffs: [f64; 4]) -> Result<HNum, Error> {
        for (i, value) in coeffs.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteCoefficient {
                    index: i + 1,
                    value: *value,
                });
            }
        }
        Ok(HNum {
            system: *self,
            coeffs,
        })
    }

    /// The basis element `e_index`, index in 1..=4.
    pub fn basis(&self, index: usize) -> HNum {
        assert!(
            (1..=4).contains(&index),
            "basis index out of range: {index}"
        );
        let mut coeffs = [0.0; 4];
        coeffs[index - 1] = 1.0;
        HNum {
            system: *self,
            coeffs,
        }
    }

    pub fn zero(&self) -> HNum {
        HNum {
            system: *self,
            coeffs: [0.0; 4],
        }
    }

    /// The unit element `e1`.
    pub fn one(&self) -> HNum {
        self.basis(1)
    }
}

impl HNum {
    /// Internal constructor for operation results, which may carry
    /// overflow infinities like any other float arithmetic.
    pub(crate) fn raw(system: System, coeffs: [f64; 4]) -> HNum {
        HNum { system, coeffs }
    }

    pub fn system(&self) -> &System {
        &self.system
    }

    pub fn coeffs(&self) -> [f64; 4] {
        self.coeffs
    }

    /// Coefficient `a_index`, index in 1..=4.
    pub fn coeff(&self, index: usize) -> f64 {
        assert!(
            (1..=4).contains(&index),
            "coefficient index out of range: {index}"
        );
        self.coeffs[index - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0.0)
    }

    fn check_same_system(&self, other: &HNum) -> Result<(), Error> {
        if self.system == other.system {
            Ok(())
        } else {
            Err(Error::SystemMismatch {
                left: self.system.label(),
                right: other.system.label(),
            })
        }
    }

    pub fn add(&self, other: &HNum) -> Result<HNum, Error> {
        self.check_same_system(other)?;
        let mut coeffs = self.coeffs;
        for (c, o) in coeffs.iter_mut().zip(other.coeffs) {
            *c += o;
        }
        Ok(HNum::raw(self.system, coeffs))
    }

    pub fn sub(&self, other: &HNum) -> Result<HNum, Error> {
        self.check_same_system(other)?;
        let mut coeffs = self.coeffs;
        for (c, o) in coeffs.iter_mut().zip(other.coeffs) {
            *c -= o;
        }
        Ok(HNum::raw(self.system, coeffs))
    }

    pub fn neg(&self) -> HNum {
        HNum::raw(self.system, self.coeffs.map(|c| -c))
    }

    pub fn scale(&self, k: f64) -> HNum {
        HNum::raw(self.system, self.coeffs.map(|c| k * c))
    }

    /// Product through the system's Cayley table:
    /// `sum_ij a_i b_j (e_i e_j)`.
    pub fn mul(&self, other: &HNum) -> Result<HNum, Error> {
        self.check_same_system(other)?;
        let table = self.system.table();
        let mut coeffs = [0.0; 4];
        for i in 0..4 {
            if self.coeffs[i] == 0.0 {
                continue;
            }
            for j in 0..4 {
                let cell = table.entry(i + 1, j + 1);
                if cell.is_zero() {
                    continue;
                }
                let term = self.coeffs[i] * other.coeffs[j];
                coeffs[cell.index() as usize - 1] += f64::from(cell.sign()) * term;
            }
        }
        Ok(HNum::raw(self.system, coeffs))
    }

    /// Conjugate: `a1*e1 - a2*e2 - a3*e3 - a4*e4`. The same formula holds
    /// in every system of the class, and `w * conj(w) = pseudonorm(w) * e1`.
    pub fn conj(&self) -> HNum {
        let [a1, a2, a3, a4] = self.coeffs;
        HNum::raw(self.system, [a1, -a2, -a3, -a4])
    }

    /// Matrix of left multiplication `x -> w*x` in basis coordinates:
    /// column j holds the coefficients of `w * e_j`.
    pub fn left_rep(&self) -> Matrix4 {
        let table = self.system.table();
        let mut m = Matrix4::ZERO;
        for j in 0..4 {
            for i in 0..4 {
                let cell = table.entry(i + 1, j + 1);
                if cell.is_zero() {
                    continue;
                }
                let row = cell.index() as usize - 1;
                m.set(
                    row,
                    j,
                    m.get(row, j) + f64::from(cell.sign()) * self.coeffs[i],
                );
            }
        }
        m
    }

    /// Norm: the determinant of the left regular representation. Equals
    /// the squared pseudonorm.
    pub fn norm(&self) -> f64 {
        self.left_rep().det()
    }

    /// Pseudonorm, the quadratic form
    /// `a1^2 - mu1*a2^2 - mu2*a3^2 + mu1*mu2*a4^2`.
    ///
    /// Computed from the closed form rather than as a square root of the
    /// norm, which would lose the sign: the pseudonorm is negative on part
    /// of some systems.
    pub fn pseudonorm(&self) -> f64 {
        let [a1, a2, a3, a4] = self.coeffs;
        let mu1 = self.system.mu1().as_f64();
        let mu2 = self.system.mu2().as_f64();
        a1 * a1 - mu1 * (a2 * a2) - mu2 * (a3 * a3) + mu1 * mu2 * (a4 * a4)
    }

    fn zero_divisor_band(&self) -> f64 {
        let max_sq = self.coeffs.iter().map(|c| c * c).fold(0.0, f64::max);
        ZERO_DIVISOR_EPS * (1.0 + max_sq)
    }

    /// True when the value is nonzero and its pseudonorm is within the
    /// scaled tolerance band of zero. Such values annihilate some nonzero
    /// partner and cannot divide. Quaternions (`mu = (-1,-1)`) have no
    /// zero divisors, so this is always false for them on nonzero input.
    pub fn is_zero_divisor(&self) -> bool {
        !self.is_zero() && self.pseudonorm().abs() <= self.zero_divisor_band()
    }

    fn divisor_pseudonorm(divisor: &HNum) -> Result<f64, Error> {
        let pn = divisor.pseudonorm();
        if pn.abs() <= divisor.zero_divisor_band() {
            Err(Error::ZeroDivisor { pseudonorm: pn })
        } else {
            Ok(pn)
        }
    }

    /// Left quotient: the solution `x` of `divisor * x = self`, namely
    /// `conj(divisor) * self / pseudonorm(divisor)`.
    ///
    /// Division is refused not only by zero but by any zero divisor.
    pub fn div_left(&self, divisor: &HNum) -> Result<HNum, Error> {
        self.check_same_system(divisor)?;
        let pn = HNum::divisor_pseudonorm(divisor)?;
        Ok(divisor.conj().mul(self)?.scale(1.0 / pn))
    }

    /// Right quotient: the solution `x` of `x * divisor = self`, namely
    /// `self * conj(divisor) / pseudonorm(divisor)`. Differs from the left
    /// quotient in general; these systems are non-commutative.
    pub fn div_right(&self, divisor: &HNum) -> Result<HNum, Error> {
        self.check_same_system(divisor)?;
        let pn = HNum::divisor_pseudonorm(divisor)?;
        Ok(self.mul(&divisor.conj())?.scale(1.0 / pn))
    }
}

impl std::fmt::Display for HNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a1, a2, a3, a4] = self.coeffs;
        write!(
            f,
            "[{} | {}, {}, {}, {}]",
            self.system.label(),
            a1,
            a2,
            a3,
            a4
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::SystemKind;

    fn sys(kind: SystemKind) -> System {
        System::builtin(kind).unwrap()
    }

    fn assert_coeffs(w: &HNum, expect: [f64; 4], tol: f64) {
        let got = w.coeffs();
        for i in 0..4 {
            assert!(
                (got[i] - expect[i]).abs() <= tol,
                "coefficient {}: got {:?}, expected {:?}",
                i + 1,
                got,
                expect
            );
        }
    }

    #[test]
    fn componentwise_sum_and_difference() {
        let h = sys(SystemKind::H);
        let a = h.num([1.0, 2.0, 3.0, 4.0]).unwrap();
        let b = h.num([4.0, 3.0, 2.0, 1.0]).unwrap();
        assert_coeffs(&a.add(&b).unwrap(), [5.0, 5.0, 5.0, 5.0], 0.0);
        let one = h.one();
        assert!(one.sub(&one).unwrap().is_zero());
        assert_coeffs(&a.scale(0.0), [0.0, 0.0, 0.0, 0.0], 0.0);
    }

    #[test]
    fn mixed_systems_are_rejected() {
        let a = sys(SystemKind::H).one();
        let b = sys(SystemKind::DD).one();
        assert!(matches!(a.add(&b), Err(Error::SystemMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(Error::SystemMismatch { .. })));
        // A generic system with the same squares is still a distinct tag.
        let g = System::from_squares(crate::SquareSign::NEG, crate::SquareSign::NEG).one();
        assert!(matches!(a.add(&g), Err(Error::SystemMismatch { .. })));
    }

    #[test]
    fn non_finite_coefficients_rejected() {
        let h = sys(SystemKind::H);
        assert!(matches!(
            h.num([1.0, f64::NAN, 0.0, 0.0]),
            Err(Error::NonFiniteCoefficient { index: 2, .. })
        ));
        assert!(h.num([1.0, 2.0, 3.0, 4.0]).is_ok());
    }

    #[test]
    fn quaternion_basis_product() {
        let h = sys(SystemKind::H);
        let prod = h.basis(2).mul(&h.basis(3)).unwrap();
        assert_coeffs(&prod, [0.0, 0.0, 0.0, 1.0], 0.0);
    }

    #[test]
    fn unit_element_is_identity() {
        for kind in SystemKind::NAMED {
            let s = sys(kind);
            let w = s.num([0.3, -1.2, 2.5, 0.7]).unwrap();
            assert_eq!(s.one().mul(&w).unwrap(), w);
            assert_eq!(w.mul(&s.one()).unwrap(), w);
        }
    }

    #[test]
    fn cd_non_commutativity_witness() {
        // Hand expansion through the mu = (-1,0) table.
        let cd = sys(SystemKind::CD);
        let a = cd.num([1.0, 1.0, 0.0, 0.0]).unwrap();
        let b = cd.num([0.0, 0.0, 1.0, 1.0]).unwrap();
        assert_coeffs(&a.mul(&b).unwrap(), [0.0, 0.0, 0.0, 2.0], 0.0);
        assert_coeffs(&b.mul(&a).unwrap(), [0.0, 0.0, 2.0, 0.0], 0.0);
    }

    #[test]
    fn conjugation_formula_and_product() {
        let ah = sys(SystemKind::AH);
        let w = ah.num([1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_coeffs(&w.conj(), [1.0, -2.0, -3.0, -4.0], 0.0);
        assert_eq!(ah.one().conj(), ah.one());
        // 1 + 4 - 9 - 16 = -20
        assert_coeffs(&w.mul(&w.conj()).unwrap(), [-20.0, 0.0, 0.0, 0.0], 0.0);
        assert_eq!(w.pseudonorm(), -20.0);
    }

    #[test]
    fn left_rep_ww_matrix() {
        let ww = sys(SystemKind::WW);
        let w = ww.num([1.0, 2.0, 3.0, 4.0]).unwrap();
        let m = w.left_rep();
        let expect = [
            [1.0, 2.0, 3.0, -4.0],
            [2.0, 1.0, 4.0, -3.0],
            [3.0, -4.0, 1.0, 2.0],
            [4.0, -3.0, 2.0, 1.0],
        ];
        assert_eq!(*m.rows(), expect);
    }

    #[test]
    fn left_rep_h_matrix() {
        // Matches the H multiplication rule; note the reference display of
        // this matrix misprints the (2,3) and (2,4) entries, which the
        // homomorphism property rules out.
        let h = sys(SystemKind::H);
        let w = h.num([1.0, 2.0, 3.0, 4.0]).unwrap();
        let expect = [
            [1.0, -2.0, -3.0, -4.0],
            [2.0, 1.0, -4.0, 3.0],
            [3.0, 4.0, 1.0, -2.0],
            [4.0, -3.0, 2.0, 1.0],
        ];
        assert_eq!(*w.left_rep().rows(), expect);
    }

    #[test]
    fn left_rep_of_unit_is_identity() {
        for kind in SystemKind::NAMED {
            assert_eq!(sys(kind).one().left_rep(), Matrix4::identity());
        }
    }

    #[test]
    fn norm_and_pseudonorm_values() {
        let h = sys(SystemKind::H);
        let w = h.num([1.0, 2.0, 3.0, 4.0]).unwrap();
        assert!((w.norm() - 900.0).abs() < 1e-9);
        assert_eq!(w.pseudonorm(), 30.0);
        assert_eq!(h.one().norm(), 1.0);

        let ww = sys(SystemKind::WW);
        let w = ww.num([1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(w.pseudonorm(), 1.0 - 4.0 - 9.0 + 16.0);

        let dd = sys(SystemKind::DD);
        assert_eq!(dd.num([5.0, 1.0, 2.0, 3.0]).unwrap().pseudonorm(), 25.0);
    }

    #[test]
    fn zero_divisor_detection() {
        let ah = sys(SystemKind::AH);
        assert!(ah.num([1.0, 0.0, 1.0, 0.0]).unwrap().is_zero_divisor());
        let dd = sys(SystemKind::DD);
        assert!(dd.num([0.0, 5.0, 7.0, 9.0]).unwrap().is_zero_divisor());
        let h = sys(SystemKind::H);
        assert!(!h.num([1.0, 2.0, 3.0, 4.0]).unwrap().is_zero_divisor());
        assert!(!h.zero().is_zero_divisor());
    }

    #[test]
    fn division_round_trip_and_identity() {
        let h = sys(SystemKind::H);
        let w = h.num([0.5, -1.0, 2.0, 3.0]).unwrap();
        assert_eq!(w.div_left(&h.one()).unwrap(), w);
        assert_eq!(w.div_right(&h.one()).unwrap(), w);

        let b = h.num([1.0, 1.0, -2.0, 0.5]).unwrap();
        let left = b.mul(&w).unwrap().div_left(&b).unwrap();
        assert_coeffs(&left, w.coeffs(), 1e-12);
        let right = w.mul(&b).unwrap().div_right(&b).unwrap();
        assert_coeffs(&right, w.coeffs(), 1e-12);
    }

    #[test]
    fn left_and_right_quotients_differ() {
        let h = sys(SystemKind::H);
        let a = h.basis(2);
        let b = h.basis(3);
        // conj(e3)*e2 = e4 but e2*conj(e3) = -e4.
        assert_coeffs(&a.div_left(&b).unwrap(), [0.0, 0.0, 0.0, 1.0], 0.0);
        assert_coeffs(&a.div_right(&b).unwrap(), [0.0, 0.0, 0.0, -1.0], 0.0);
    }

    #[test]
    fn division_by_zero_divisor_fails() {
        let ah = sys(SystemKind::AH);
        let w = ah.num([1.0, 2.0, 3.0, 4.0]).unwrap();
        let zd = ah.num([1.0, 0.0, 1.0, 0.0]).unwrap();
        match w.div_left(&zd) {
            Err(Error::ZeroDivisor { pseudonorm }) => assert_eq!(pseudonorm, 0.0),
            other => panic!("expected zero-divisor error, got {other:?}"),
        }
        assert!(w.div_right(&ah.zero()).is_err());
    }
}
