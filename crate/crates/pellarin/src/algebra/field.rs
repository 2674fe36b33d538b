use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A concrete finite field F_q, q = p^e, presented on the power basis of an
/// explicit monic irreducible modulus over F_p.
///
/// The modulus is stored low-to-high and is part of every serialized
/// artifact, so outputs are bit-exact across implementations. For e = 1 the
/// modulus is the polynomial x and arithmetic is plain mod p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Field {
    pub p: u64,
    pub e: usize,
    pub modulus: Vec<u64>,
}

/// An element of F_q: exactly e coordinates in [0, p) on the power basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FqElem(pub Vec<u64>);

impl Field {
    /// Validate and build a field. When `modulus` is omitted and e > 1,
    /// selects the lexicographically smallest monic irreducible of degree e
    /// over F_p, comparing coefficient sequences low-to-high.
    pub fn make(p: u64, e: usize, modulus: Option<Vec<u64>>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::DegreeMismatch);
        }
        let modulus = match modulus {
            None => {
                if e == 1 {
                    vec![0, 1]
                } else {
                    smallest_irreducible(p, e)
                }
            }
            Some(raw) => {
                if raw.len() != e + 1 {
                    return Err(Error::DegreeMismatch);
                }
                let m: Vec<u64> = raw.iter().map(|c| c % p).collect();
                if m[e] != 1 {
                    return Err(Error::DegreeMismatch);
                }
                if e > 1 && !is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
        };
        Ok(Field { p, e, modulus })
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.e as u32)
    }

    pub fn zero(&self) -> FqElem {
        FqElem(vec![0; self.e])
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    /// The residue of an integer in the prime subfield F_p.
    pub fn from_u64(&self, n: u64) -> FqElem {
        let mut c = vec![0; self.e];
        c[0] = n % self.p;
        FqElem(c)
    }

    pub fn is_zero(&self, a: &FqElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| (x + y) % self.p)
                .collect(),
        )
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        FqElem(a.0.iter().map(|&x| (self.p - x) % self.p).collect())
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| (x + self.p - y) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let e = self.e;
        if e == 1 {
            return FqElem(vec![a.0[0] * b.0[0] % self.p]);
        }
        // Schoolbook convolution followed by reduction mod the monic modulus.
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for i in (e..2 * e - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..e {
                let sub = c * self.modulus[j] % self.p;
                prod[i - e + j] = (prod[i - e + j] + self.p * self.p - sub) % self.p;
            }
        }
        prod.truncate(e);
        FqElem(prod)
    }

    pub fn pow(&self, a: &FqElem, mut n: u64) -> FqElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero; callers guard.
    pub fn inv(&self, a: &FqElem) -> FqElem {
        assert!(!self.is_zero(a), "inverse of zero in F_q");
        self.pow(a, self.q() - 2)
    }

    /// Index of an element in [0, q): coordinates read as base-p digits,
    /// coordinate 0 least significant. Fixes the enumeration order.
    pub fn index_of(&self, a: &FqElem) -> u64 {
        let mut n = 0;
        for &c in a.0.iter().rev() {
            n = n * self.p + c;
        }
        n
    }

    pub fn from_index(&self, mut n: u64) -> FqElem {
        let mut c = vec![0; self.e];
        for slot in c.iter_mut() {
            *slot = n % self.p;
            n /= self.p;
        }
        FqElem(c)
    }

    /// All q elements in index order.
    pub fn elements(&self) -> Vec<FqElem> {
        (0..self.q()).map(|n| self.from_index(n)).collect()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// --- dense polynomial arithmetic over F_p, used only for modulus validation ---

fn fp_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn fp_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    fp_rem(&mut prod, m, p);
    prod
}

fn fp_rem(a: &mut Vec<u64>, m: &[u64], p: u64) {
    let d = m.len() - 1;
    while a.len() > d {
        let c = *a.last().unwrap();
        let k = a.len() - 1 - d;
        if c != 0 {
            for (j, &mj) in m.iter().enumerate() {
                a[k + j] = (a[k + j] + p * p - c * mj % p) % p;
            }
        }
        a.pop();
        fp_trim(a);
        if a.len() <= d {
            break;
        }
    }
    fp_trim(a);
}

fn fp_powmod(a: &[u64], mut n: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut base = a.to_vec();
    fp_rem(&mut base, m, p);
    let mut acc = vec![1u64];
    while n > 0 {
        if n & 1 == 1 {
            acc = fp_mulmod(&acc, &base, m, p);
        }
        base = fp_mulmod(&base, &base, m, p);
        n >>= 1;
    }
    acc
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    fp_trim(&mut a);
    fp_trim(&mut b);
    while !b.is_empty() {
        // reduce a mod b (b made monic on the fly)
        let lead = *b.last().unwrap();
        let inv = mod_inv(lead, p);
        let monic: Vec<u64> = b.iter().map(|&c| c * inv % p).collect();
        fp_rem(&mut a, &monic, p);
        std::mem::swap(&mut a, &mut b);
        fp_trim(&mut b);
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime and small; Fermat.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut n = p - 2;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        n >>= 1;
    }
    acc
}

/// Full irreducibility test over F_p for a monic polynomial of degree e:
/// x^{p^e} == x mod f, and gcd(x^{p^{e/r}} - x, f) = 1 for every prime r | e.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = f.len() - 1;
    let x = vec![0u64, 1];
    // frob[j] = x^{p^j} mod f, computed by iterated p-th powers
    let mut cur = x.clone();
    let mut frob = vec![x.clone()];
    for _ in 0..e {
        cur = fp_powmod(&cur, p, f, p);
        frob.push(cur.clone());
    }
    // x^{p^e} must equal x
    let mut xe = frob[e].clone();
    let mut xx = x.clone();
    fp_trim(&mut xe);
    fp_trim(&mut xx);
    if xe != xx {
        return false;
    }
    for r in prime_divisors(e as u64) {
        let j = e / r as usize;
        let mut diff: Vec<u64> = frob[j].clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(&mut diff);
        let g = fp_gcd(&diff, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Lexicographically smallest (coefficients compared low-to-high) monic
/// irreducible of degree e over F_p.
fn smallest_irreducible(p: u64, e: usize) -> Vec<u64> {
    let total = p.pow(e as u32);
    for n in 0..total {
        // coordinate 0 is the most significant counter digit so that the
        // scan order matches low-to-high lexicographic comparison
        let mut coeffs = vec![0u64; e + 1];
        coeffs[e] = 1;
        let mut rem = n;
        for i in 0..e {
            let place = p.pow((e - 1 - i) as u32);
            coeffs[i] = rem / place;
            rem %= place;
        }
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible of every degree exists over F_p")
}
