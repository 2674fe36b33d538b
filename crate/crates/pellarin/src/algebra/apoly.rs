use serde::{Deserialize, Serialize};

use crate::algebra::field::{Field, FqElem};
use crate::error::{Error, Result};

/// An element of A = F_q[theta]. Coefficients are stored low-to-high with no
/// trailing zeros; the zero polynomial is the empty sequence, so structural
/// equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct APoly(pub Vec<FqElem>);

impl APoly {
    pub fn new(mut coeffs: Vec<FqElem>, fd: &Field) -> APoly {
        while coeffs.last().map(|c| fd.is_zero(c)) == Some(true) {
            coeffs.pop();
        }
        APoly(coeffs)
    }

    pub fn zero() -> APoly {
        APoly(vec![])
    }

    pub fn one(fd: &Field) -> APoly {
        APoly(vec![fd.one()])
    }

    pub fn constant(c: FqElem, fd: &Field) -> APoly {
        APoly::new(vec![c], fd)
    }

    pub fn from_u64(n: u64, fd: &Field) -> APoly {
        APoly::constant(fd.from_u64(n), fd)
    }

    /// theta^n
    pub fn theta_pow(n: usize, fd: &Field) -> APoly {
        let mut coeffs = vec![fd.zero(); n + 1];
        coeffs[n] = fd.one();
        APoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FqElem> {
        self.0.last()
    }

    pub fn is_monic(&self, fd: &Field) -> bool {
        self.leading() == Some(&fd.one())
    }

    pub fn coeff(&self, i: usize, fd: &Field) -> FqElem {
        self.0.get(i).cloned().unwrap_or_else(|| fd.zero())
    }

    pub fn add(&self, other: &APoly, fd: &Field) -> APoly {
        let n = self.0.len().max(other.0.len());
        let coeffs = (0..n)
            .map(|i| fd.add(&self.coeff(i, fd), &other.coeff(i, fd)))
            .collect();
        APoly::new(coeffs, fd)
    }

    pub fn neg(&self, fd: &Field) -> APoly {
        APoly(self.0.iter().map(|c| fd.neg(c)).collect())
    }

    pub fn sub(&self, other: &APoly, fd: &Field) -> APoly {
        self.add(&other.neg(fd), fd)
    }

    pub fn mul(&self, other: &APoly, fd: &Field) -> APoly {
        if self.is_zero() || other.is_zero() {
            return APoly::zero();
        }
        let mut coeffs = vec![fd.zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if fd.is_zero(a) {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                coeffs[i + j] = fd.add(&coeffs[i + j], &fd.mul(a, b));
            }
        }
        APoly::new(coeffs, fd)
    }

    pub fn mul_fq(&self, c: &FqElem, fd: &Field) -> APoly {
        APoly::new(self.0.iter().map(|a| fd.mul(a, c)).collect(), fd)
    }

    /// Multiply by theta^k.
    pub fn shift(&self, k: usize, fd: &Field) -> APoly {
        if self.is_zero() {
            return APoly::zero();
        }
        let mut coeffs = vec![fd.zero(); k];
        coeffs.extend(self.0.iter().cloned());
        APoly(coeffs)
    }

    pub fn pow(&self, mut n: u64, fd: &Field) -> APoly {
        let mut base = self.clone();
        let mut acc = APoly::one(fd);
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

    /// Euclidean division: self = q * den + r with deg r < deg den.
    pub fn divrem(&self, den: &APoly, fd: &Field) -> (APoly, APoly) {
        assert!(!den.is_zero(), "division by zero in A");
        let dd = den.0.len() - 1;
        let lead_inv = fd.inv(den.leading().unwrap());
        let mut rem = self.0.clone();
        let mut quo = vec![fd.zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd {
            let c = fd.mul(rem.last().unwrap(), &lead_inv);
            let k = rem.len() - 1 - dd;
            if !fd.is_zero(&c) {
                quo[k] = c.clone();
                for (j, m) in den.0.iter().enumerate() {
                    rem[k + j] = fd.sub(&rem[k + j], &fd.mul(&c, m));
                }
            }
            rem.pop();
            while rem.last().map(|x| fd.is_zero(x)) == Some(true) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (APoly::new(quo, fd), APoly::new(rem, fd))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, den: &APoly, fd: &Field) -> Result<APoly> {
        let (q, r) = self.divrem(den, fd);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision)
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &APoly, fd: &Field) -> APoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b, fd);
            a = b;
            b = r;
        }
        a.monic(fd)
    }

    pub fn lcm(&self, other: &APoly, fd: &Field) -> APoly {
        if self.is_zero() || other.is_zero() {
            return APoly::zero();
        }
        let g = self.gcd(other, fd);
        self.mul(other, fd)
            .exact_div(&g, fd)
            .expect("gcd divides the product")
            .monic(fd)
    }

    pub fn monic(&self, fd: &Field) -> APoly {
        match self.leading() {
            None => APoly::zero(),
            Some(l) if l == &fd.one() => self.clone(),
            Some(l) => self.mul_fq(&fd.inv(l), fd),
        }
    }

    pub fn eval_fq(&self, x: &FqElem, fd: &Field) -> FqElem {
        let mut acc = fd.zero();
        for c in self.0.iter().rev() {
            acc = fd.add(&fd.mul(&acc, x), c);
        }
        acc
    }
}
