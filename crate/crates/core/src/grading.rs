//! Z_2-degree bookkeeping shared by cubic supermatrices and superalgebra
//! elements.

use crate::error::{Error, Result};

/// Homogeneity classification of a graded object.
///
/// The zero object is compatible with *every* degree; it gets its own
/// variant so callers can both accept it where homogeneity is required and
/// report it distinctly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Even,
    Odd,
    /// Identically zero; counts as either degree.
    Zero,
    /// Mixed even and odd support; rejected by every graded operation.
    Inhomogeneous,
}

impl Degree {
    /// The Z_2 parity used in sign computations: 0 for even, 1 for odd.
    ///
    /// `Zero` maps to 0 — an arbitrary but harmless representative, since
    /// every sign it influences multiplies a term that vanishes with the
    /// zero object. `Inhomogeneous` is an error.
    pub fn parity(self) -> Result<u8> {
        match self {
            Degree::Even | Degree::Zero => Ok(0),
            Degree::Odd => Ok(1),
            Degree::Inhomogeneous => Err(Error::Homogeneity(
                "operation requires a homogeneous argument, got mixed even/odd support".into(),
            )),
        }
    }

    /// The degree of a product of homogeneous factors: parities add mod 2.
    pub fn of_parity(p: u8) -> Degree {
        if p % 2 == 0 {
            Degree::Even
        } else {
            Degree::Odd
        }
    }
}

/// `(-1)^e` as a convenience for sign-laden graded formulas.
pub fn neg_one_pow(e: u8) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_of_each_variant() {
        assert_eq!(Degree::Even.parity().unwrap(), 0);
        assert_eq!(Degree::Odd.parity().unwrap(), 1);
        assert_eq!(Degree::Zero.parity().unwrap(), 0);
        assert!(matches!(
            Degree::Inhomogeneous.parity(),
            Err(Error::Homogeneity(_))
        ));
    }

    #[test]
    fn sign_helper() {
        assert_eq!(neg_one_pow(0), 1);
        assert_eq!(neg_one_pow(1), -1);
        assert_eq!(neg_one_pow(2), 1);
        assert_eq!(neg_one_pow(3), -1);
    }
}
