use serde::{Deserialize, Serialize};

use crate::algebra::apoly::APoly;
use crate::algebra::field::{Field, FqElem};
use crate::error::{Error, Result};

/// An element of A[t] = F_q[theta][t], stored as t-coefficients in A,
/// low-to-high, no trailing zeros. A embeds as the degree-0 slice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TPoly(pub Vec<APoly>);

impl TPoly {
    pub fn new(mut coeffs: Vec<APoly>) -> TPoly {
        while coeffs.last().map(APoly::is_zero) == Some(true) {
            coeffs.pop();
        }
        TPoly(coeffs)
    }

    pub fn zero() -> TPoly {
        TPoly(vec![])
    }

    pub fn one(fd: &Field) -> TPoly {
        TPoly(vec![APoly::one(fd)])
    }

    pub fn from_apoly(a: APoly) -> TPoly {
        TPoly::new(vec![a])
    }

    pub fn from_u64(n: u64, fd: &Field) -> TPoly {
        TPoly::from_apoly(APoly::from_u64(n, fd))
    }

    /// t^n
    pub fn t_pow(n: usize, fd: &Field) -> TPoly {
        let mut coeffs = vec![APoly::zero(); n + 1];
        coeffs[n] = APoly::one(fd);
        TPoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree_t(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> APoly {
        self.0.get(i).cloned().unwrap_or_else(APoly::zero)
    }

    pub fn add(&self, other: &TPoly, fd: &Field) -> TPoly {
        let n = self.0.len().max(other.0.len());
        TPoly::new(
            (0..n)
                .map(|i| self.coeff(i).add(&other.coeff(i), fd))
                .collect(),
        )
    }

    pub fn neg(&self, fd: &Field) -> TPoly {
        TPoly(self.0.iter().map(|c| c.neg(fd)).collect())
    }

    pub fn sub(&self, other: &TPoly, fd: &Field) -> TPoly {
        self.add(&other.neg(fd), fd)
    }

    pub fn mul(&self, other: &TPoly, fd: &Field) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![APoly::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b, fd), fd);
            }
        }
        TPoly::new(coeffs)
    }

    pub fn mul_apoly(&self, a: &APoly, fd: &Field) -> TPoly {
        TPoly::new(self.0.iter().map(|c| c.mul(a, fd)).collect())
    }

    pub fn mul_fq(&self, c: &FqElem, fd: &Field) -> TPoly {
        TPoly::new(self.0.iter().map(|a| a.mul_fq(c, fd)).collect())
    }

    pub fn pow(&self, mut n: u64, fd: &Field) -> TPoly {
        let mut base = self.clone();
        let mut acc = TPoly::one(fd);
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

    /// Divide every t-coefficient by `den` in A; the scaling identities of
    /// the L-series demand exactness, so any remainder aborts.
    pub fn exact_div_apoly(&self, den: &APoly, fd: &Field) -> Result<TPoly> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut coeffs = Vec::with_capacity(self.0.len());
        for c in &self.0 {
            coeffs.push(c.exact_div(den, fd)?);
        }
        Ok(TPoly::new(coeffs))
    }

    /// The gcd over A of all t-coefficients.
    pub fn content(&self, fd: &Field) -> APoly {
        let mut g = APoly::zero();
        for c in &self.0 {
            g = g.gcd(c, fd);
        }
        g
    }

    /// Substitute t = theta^{q^m}, landing back in A.
    pub fn subst_theta_q_pow(&self, m: u32, fd: &Field) -> APoly {
        let step = fd.q().pow(m) as usize;
        let mut acc = APoly::zero();
        for (i, c) in self.0.iter().enumerate() {
            acc = acc.add(&c.shift(i * step, fd), fd);
        }
        acc
    }

    /// Evaluate at t = x for x in A.
    pub fn eval_t(&self, x: &APoly, fd: &Field) -> APoly {
        let mut acc = APoly::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(x, fd).add(c, fd);
        }
        acc
    }

    /// Synthetic division by (t - r) with r in A: returns (quotient, remainder),
    /// the remainder being self evaluated at t = r.
    pub fn divrem_linear_t(&self, r: &APoly, fd: &Field) -> (TPoly, APoly) {
        if self.is_zero() {
            return (TPoly::zero(), APoly::zero());
        }
        let n = self.0.len();
        let mut quo = vec![APoly::zero(); n - 1];
        let mut carry = APoly::zero();
        for i in (0..n).rev() {
            let v = self.0[i].add(&carry.mul(r, fd), fd);
            if i == 0 {
                return (TPoly::new(quo), v);
            }
            quo[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }
}

/// The evaluation character chi_t: reinterpret every theta-coefficient of
/// `a` as a t-coefficient, landing in F_q[t] inside A[t].
pub fn chi_eval(a: &APoly, fd: &Field) -> TPoly {
    TPoly::new(
        a.0.iter()
            .map(|c| APoly::constant(c.clone(), fd))
            .collect(),
    )
}
