use serde::{Deserialize, Serialize};

use crate::algebra::apoly::APoly;
use crate::algebra::field::{Field, FqElem};
use crate::algebra::tpoly::TPoly;

/// A polynomial in the interpolation variable z with coefficients in A[t].
/// Houses e_d(z) and the Carlitz approximations M_d(f)(z), P_d(f)(z).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ZPoly(pub Vec<TPoly>);

impl ZPoly {
    pub fn new(mut coeffs: Vec<TPoly>) -> ZPoly {
        while coeffs.last().map(TPoly::is_zero) == Some(true) {
            coeffs.pop();
        }
        ZPoly(coeffs)
    }

    pub fn zero() -> ZPoly {
        ZPoly(vec![])
    }

    pub fn one(fd: &Field) -> ZPoly {
        ZPoly(vec![TPoly::one(fd)])
    }

    pub fn constant(c: TPoly) -> ZPoly {
        ZPoly::new(vec![c])
    }

    /// z^n
    pub fn z_pow(n: usize, fd: &Field) -> ZPoly {
        let mut coeffs = vec![TPoly::zero(); n + 1];
        coeffs[n] = TPoly::one(fd);
        ZPoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> TPoly {
        self.0.get(i).cloned().unwrap_or_else(TPoly::zero)
    }

    pub fn constant_term(&self) -> TPoly {
        self.coeff(0)
    }

    pub fn is_monic(&self, fd: &Field) -> bool {
        self.0.last() == Some(&TPoly::one(fd))
    }

    pub fn add(&self, other: &ZPoly, fd: &Field) -> ZPoly {
        let n = self.0.len().max(other.0.len());
        ZPoly::new(
            (0..n)
                .map(|i| self.coeff(i).add(&other.coeff(i), fd))
                .collect(),
        )
    }

    pub fn sub(&self, other: &ZPoly, fd: &Field) -> ZPoly {
        let n = self.0.len().max(other.0.len());
        ZPoly::new(
            (0..n)
                .map(|i| self.coeff(i).sub(&other.coeff(i), fd))
                .collect(),
        )
    }

    pub fn mul(&self, other: &ZPoly, fd: &Field) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![TPoly::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b, fd), fd);
            }
        }
        ZPoly::new(coeffs)
    }

    pub fn mul_tpoly(&self, c: &TPoly, fd: &Field) -> ZPoly {
        ZPoly::new(self.0.iter().map(|a| a.mul(c, fd)).collect())
    }

    pub fn mul_fq(&self, c: &FqElem, fd: &Field) -> ZPoly {
        ZPoly::new(self.0.iter().map(|a| a.mul_fq(c, fd)).collect())
    }

    pub fn pow(&self, mut n: u64, fd: &Field) -> ZPoly {
        let mut base = self.clone();
        let mut acc = ZPoly::one(fd);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, fd);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, fd);
            }
        }
        acc
    }

    /// Multiply by the linear factor (z - a).
    pub fn mul_linear(&self, a: &TPoly, fd: &Field) -> ZPoly {
        let shifted = {
            let mut coeffs = vec![TPoly::zero()];
            coeffs.extend(self.0.iter().cloned());
            ZPoly(coeffs)
        };
        shifted.sub(&self.mul_tpoly(a, fd), fd)
    }

    /// Synthetic division by (z - a), assuming a is a root (the remainder is
    /// discarded; callers where exactness matters check it via `eval`).
    pub fn syn_div_linear(&self, a: &TPoly, fd: &Field) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let n = self.0.len();
        let mut quo = vec![TPoly::zero(); n - 1];
        let mut carry = TPoly::zero();
        for i in (1..n).rev() {
            let v = self.0[i].add(&carry.mul(a, fd), fd);
            quo[i - 1] = v.clone();
            carry = v;
        }
        ZPoly::new(quo)
    }

    /// Horner evaluation at a point of A[t].
    pub fn eval(&self, x: &TPoly, fd: &Field) -> TPoly {
        let mut acc = TPoly::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(x, fd).add(c, fd);
        }
        acc
    }

    pub fn eval_apoly(&self, x: &APoly, fd: &Field) -> TPoly {
        self.eval(&TPoly::from_apoly(x.clone()), fd)
    }

    /// Formal derivative with respect to z.
    pub fn derivative(&self, fd: &Field) -> ZPoly {
        let p = fd.p;
        ZPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_fq(&fd.from_u64(i as u64 % p), fd))
                .collect(),
        )
    }

    /// Substitute z -> z + c by Horner: acc <- acc * (z + c) + coeff.
    pub fn compose_z_plus(&self, c: &TPoly, fd: &Field) -> ZPoly {
        let neg_c = c.neg(fd);
        let mut acc = ZPoly::zero();
        for coeff in self.0.iter().rev() {
            acc = acc
                .mul_linear(&neg_c, fd)
                .add(&ZPoly::constant(coeff.clone()), fd);
        }
        acc
    }

    /// Affine means supported only on exponents {0} and {q^i}.
    pub fn is_affine(&self, fd: &Field) -> bool {
        let q = fd.q() as usize;
        self.0
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || i == 0 || is_q_power(i, q))
    }

    /// F_q-linear means supported only on exponents q^i.
    pub fn is_fq_linear(&self, fd: &Field) -> bool {
        let q = fd.q() as usize;
        self.0
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || is_q_power(i, q))
    }
}

fn is_q_power(mut n: usize, q: usize) -> bool {
    if n == 0 {
        return false;
    }
    while n % q == 0 {
        n /= q;
    }
    n == 1
}
