use serde::{Deserialize, Serialize};

use crate::algebra::apoly::APoly;
use crate::algebra::field::Field;
use crate::algebra::tpoly::TPoly;
use crate::error::{Error, Result};

/// A reduced fraction num/den with num in A[t] and den in A.
///
/// Every fraction in the L-series identities has denominator in A (L_d, D_d,
/// products of monic polynomials), so no bivariate gcd is needed. Invariants:
/// den is monic and gcd_A(den, content_A(num)) = 1, which makes structural
/// equality semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalForm {
    pub num: TPoly,
    pub den: APoly,
}

impl RationalForm {
    /// Build and reduce. Zero normalizes to 0/1.
    pub fn new(num: TPoly, den: APoly, fd: &Field) -> Result<RationalForm> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalForm {
                num: TPoly::zero(),
                den: APoly::one(fd),
            });
        }
        let g = den.gcd(&num.content(fd), fd);
        let (num, den) = if g.degree() > Some(0) || !g.is_monic(fd) {
            (
                num.exact_div_apoly(&g, fd)?,
                den.exact_div(&g, fd)?,
            )
        } else {
            (num, den)
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        let num = num.mul_fq(&fd.inv(&lead), fd);
        let den = den.monic(fd);
        Ok(RationalForm { num, den })
    }

    pub fn zero(fd: &Field) -> RationalForm {
        RationalForm {
            num: TPoly::zero(),
            den: APoly::one(fd),
        }
    }

    pub fn one(fd: &Field) -> RationalForm {
        RationalForm {
            num: TPoly::one(fd),
            den: APoly::one(fd),
        }
    }

    pub fn from_tpoly(num: TPoly, fd: &Field) -> RationalForm {
        RationalForm {
            num,
            den: APoly::one(fd),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the fraction reduces to a polynomial (denominator 1).
    pub fn is_polynomial(&self, fd: &Field) -> bool {
        self.den == APoly::one(fd)
    }

    pub fn add(&self, other: &RationalForm, fd: &Field) -> RationalForm {
        let num = self
            .num
            .mul_apoly(&other.den, fd)
            .add(&other.num.mul_apoly(&self.den, fd), fd);
        let den = self.den.mul(&other.den, fd);
        RationalForm::new(num, den, fd).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &RationalForm, fd: &Field) -> RationalForm {
        self.add(&other.neg(fd), fd)
    }

    pub fn neg(&self, fd: &Field) -> RationalForm {
        RationalForm {
            num: self.num.neg(fd),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalForm, fd: &Field) -> RationalForm {
        RationalForm::new(
            self.num.mul(&other.num, fd),
            self.den.mul(&other.den, fd),
            fd,
        )
        .expect("nonzero denominators")
    }

    pub fn mul_tpoly(&self, c: &TPoly, fd: &Field) -> RationalForm {
        RationalForm::new(self.num.mul(c, fd), self.den.clone(), fd)
            .expect("nonzero denominator")
    }
}

/// A polynomial in z with RationalForm coefficients, used where the scalar
/// L_d/D_d turns Carlitz approximations into fraction-coefficient identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracPoly(pub Vec<RationalForm>);

impl FracPoly {
    pub fn new(mut coeffs: Vec<RationalForm>) -> FracPoly {
        while coeffs.last().map(RationalForm::is_zero) == Some(true) {
            coeffs.pop();
        }
        FracPoly(coeffs)
    }

    pub fn zero() -> FracPoly {
        FracPoly(vec![])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize, fd: &Field) -> RationalForm {
        self.0.get(i).cloned().unwrap_or_else(|| RationalForm::zero(fd))
    }

    /// Scale a ZPoly by a fraction.
    pub fn from_zpoly_scaled(
        z: &crate::algebra::zpoly::ZPoly,
        scale: &RationalForm,
        fd: &Field,
    ) -> FracPoly {
        FracPoly::new(z.0.iter().map(|c| scale.mul_tpoly(c, fd)).collect())
    }

    pub fn sub(&self, other: &FracPoly, fd: &Field) -> FracPoly {
        let n = self.0.len().max(other.0.len());
        FracPoly::new(
            (0..n)
                .map(|i| self.coeff(i, fd).sub(&other.coeff(i, fd), fd))
                .collect(),
        )
    }
}
