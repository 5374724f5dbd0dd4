//! Cayley tables and the doubling construction that generates them.
//!
//! A 4-dimensional system of this class is obtained by doubling a
//! 2-dimensional base system (complex, double or dual numbers) by another
//! one. Each 2-dimensional system is fully described by the square of its
//! non-unit element: -1 for complex, +1 for double, 0 for dual numbers.
//! The doubled basis is ordered `{e1*f1, e2*f1, e1*f2, e2*f2}`, the two
//! non-unit generators anticommute, and every basis product lands on a
//! single signed basis element or on zero.

use crate::error::Error;

/// The square of the non-unit element of a 2-dimensional base system:
/// -1 (complex), +1 (double) or 0 (dual).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquareSign(i8);

impl SquareSign {
    /// Complex base: the non-unit element squares to -1.
    pub const NEG: SquareSign = SquareSign(-1);
    /// Dual base: the non-unit element squares to 0.
    pub const ZERO: SquareSign = SquareSign(0);
    /// Double base: the non-unit element squares to +1.
    pub const POS: SquareSign = SquareSign(1);

    pub fn new(value: i8) -> Result<SquareSign, Error> {
        match value {
            -1..=1 => Ok(SquareSign(value)),
            other => Err(Error::InvalidSquareSign(other)),
        }
    }

    pub fn value(self) -> i8 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0)
    }
}

/// A signed basis element or zero: the value of one Cayley-table cell.
///
/// `sign == 0` encodes the zero product; its index is canonically 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBasis {
    sign: i8,
    index: u8,
}

impl SignedBasis {
    /// The zero product.
    pub const ZERO: SignedBasis = SignedBasis { sign: 0, index: 1 };

    /// `sign` must be -1, 0 or +1 and `index` in 1..=4. A zero sign is
    /// canonicalized to index 1.
    pub fn new(sign: i8, index: u8) -> SignedBasis {
        assert!(
            sign == -1 || sign == 0 || sign == 1,
            "sign out of range: {sign}"
        );
        assert!(
            (1..=4).contains(&index),
            "basis index out of range: {index}"
        );
        if sign == 0 {
            SignedBasis::ZERO
        } else {
            SignedBasis { sign, index }
        }
    }

    pub fn pos(index: u8) -> SignedBasis {
        SignedBasis::new(1, index)
    }

    pub fn neg(index: u8) -> SignedBasis {
        SignedBasis::new(-1, index)
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn sign(self) -> i8 {
        self.sign
    }

    /// Basis index in 1..=4; meaningful only when `sign() != 0`.
    pub fn index(self) -> u8 {
        self.index
    }

    fn negate(self) -> SignedBasis {
        SignedBasis {
            sign: -self.sign,
            index: if self.sign == 0 { 1 } else { self.index },
        }
    }
}

impl std::fmt::Display for SignedBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            1 => write!(f, "e{}", self.index),
            _ => write!(f, "-e{}", self.index),
        }
    }
}

/// The 4x4 table of basis products `e_i * e_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CayleyTable4 {
    entries: [[SignedBasis; 4]; 4],
}

impl CayleyTable4 {
    pub fn from_entries(entries: [[SignedBasis; 4]; 4]) -> CayleyTable4 {
        CayleyTable4 { entries }
    }

    /// The product `e_i * e_j`, with `i`, `j` in 1..=4.
    pub fn entry(&self, i: usize, j: usize) -> SignedBasis {
        assert!(
            (1..=4).contains(&i) && (1..=4).contains(&j),
            "basis index out of range"
        );
        self.entries[i - 1][j - 1]
    }

    /// Product of two signed basis elements through the table, exact
    /// integer arithmetic.
    pub fn compose(&self, x: SignedBasis, y: SignedBasis) -> SignedBasis {
        if x.is_zero() || y.is_zero() {
            return SignedBasis::ZERO;
        }
        let cell = self.entry(x.index() as usize, y.index() as usize);
        match x.sign() * y.sign() {
            1 => cell,
            -1 => cell.negate(),
            _ => unreachable!(),
        }
    }
}

/// Doubles the base system with square `mu1` by the one with square `mu2`.
///
/// With the basis ordered `{e1*f1, e2*f1, e1*f2, e2*f2}` and the two
/// non-unit generators anticommuting, the products reduce to:
///
/// ```text
/// e2^2 = mu1*e1      e3^2 = mu2*e1      e4^2 = -mu1*mu2*e1
/// e2*e3 =  e4        e2*e4 =  mu1*e3    e3*e4 = -mu2*e2
/// e3*e2 = -e4        e4*e2 = -mu1*e3    e4*e3 =  mu2*e2
/// ```
///
/// Row 1 and column 1 are the identity row and column.
pub fn gc_double(mu1: SquareSign, mu2: SquareSign) -> CayleyTable4 {
    let signed = |coef: i8, index: u8| SignedBasis::new(coef.signum(), index);
    let m1 = mu1.value();
    let m2 = mu2.value();

    let e = |i: u8| SignedBasis::pos(i);
    let entries = [
        [e(1), e(2), e(3), e(4)],
        [e(2), signed(m1, 1), e(4), signed(m1, 3)],
        [e(3), SignedBasis::neg(4), signed(m2, 1), signed(-m2, 2)],
        [e(4), signed(-m1, 3), signed(m2, 2), signed(-m1 * m2, 1)],
    ];
    CayleyTable4::from_entries(entries)
}
