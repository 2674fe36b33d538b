use serde::{Deserialize, Serialize};

use crate::algebra::field::Field;
use crate::algebra::tpoly::TPoly;

/// A polynomial in u = x^{-1} with coefficients in A[t]. Houses the special
/// polynomials z(chi_t^beta, x, -k); the degree in u is the degree in x^{-1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UPoly(pub Vec<TPoly>);

impl UPoly {
    pub fn new(mut coeffs: Vec<TPoly>) -> UPoly {
        while coeffs.last().map(TPoly::is_zero) == Some(true) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn zero() -> UPoly {
        UPoly(vec![])
    }

    pub fn one(fd: &Field) -> UPoly {
        UPoly(vec![TPoly::one(fd)])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree_u(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> TPoly {
        self.0.get(i).cloned().unwrap_or_else(TPoly::zero)
    }

    pub fn add(&self, other: &UPoly, fd: &Field) -> UPoly {
        let n = self.0.len().max(other.0.len());
        UPoly::new(
            (0..n)
                .map(|i| self.coeff(i).add(&other.coeff(i), fd))
                .collect(),
        )
    }

    pub fn sub(&self, other: &UPoly, fd: &Field) -> UPoly {
        let n = self.0.len().max(other.0.len());
        UPoly::new(
            (0..n)
                .map(|i| self.coeff(i).sub(&other.coeff(i), fd))
                .collect(),
        )
    }

    pub fn mul(&self, other: &UPoly, fd: &Field) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![TPoly::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b, fd), fd);
            }
        }
        UPoly::new(coeffs)
    }

    pub fn mul_tpoly(&self, c: &TPoly, fd: &Field) -> UPoly {
        UPoly::new(self.0.iter().map(|a| a.mul(c, fd)).collect())
    }

    /// Multiply by u^k.
    pub fn shift_u(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![TPoly::zero(); k];
        coeffs.extend(self.0.iter().cloned());
        UPoly(coeffs)
    }

    /// Evaluation at x = 1 (u = 1): the sum of all coefficients.
    pub fn eval_at_one(&self, fd: &Field) -> TPoly {
        let mut acc = TPoly::zero();
        for c in &self.0 {
            acc = acc.add(c, fd);
        }
        acc
    }

    /// The formal x-derivative evaluated at x = 1. For Sum c_e x^{-e} the
    /// derivative is Sum (-e) c_e x^{-e-1}, so at x = 1 this is
    /// Sum (-e mod p) c_e.
    pub fn x_derivative_at_one(&self, fd: &Field) -> TPoly {
        let p = fd.p;
        let mut acc = TPoly::zero();
        for (e, c) in self.0.iter().enumerate() {
            let scalar = fd.from_u64((p - (e as u64 % p)) % p);
            acc = acc.add(&c.mul_fq(&scalar, fd), fd);
        }
        acc
    }
}
