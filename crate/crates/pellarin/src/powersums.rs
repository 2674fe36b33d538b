//! Power sums S_d(k), twisted power sums S_d(chi_t^beta, k), the q-length,
//! the exact-degree formula phi(beta, k), and the Sheats and Boeckle
//! predicates as brute-force-checkable black boxes.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{chi_eval, APoly, Field, TPoly};
use crate::carlitz::enumerate_monic;
use crate::error::Result;

/// A base-b digit expansion, index = place value, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitVector {
    pub base: u64,
    pub digits: Vec<u64>,
}

impl DigitVector {
    pub fn from_value(mut n: u64, base: u64) -> DigitVector {
        assert!(base >= 2);
        let mut digits = vec![];
        while n > 0 {
            digits.push(n % base);
            n /= base;
        }
        DigitVector { base, digits }
    }

    pub fn value(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.base + d)
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }
}

/// S_d(k), the literal sum of a^k over A_+(d). This is the transparent
/// oracle everything else is checked against.
pub fn power_sum(fd: &Field, d: usize, k: u64) -> Result<APoly> {
    let mut acc = APoly::zero();
    for a in enumerate_monic(fd, d)? {
        acc = acc.add(&a.pow(k, fd), fd);
    }
    Ok(acc)
}

/// S_d(chi_t^beta, k), the literal sum of chi_t(a)^beta a^k over A_+(d).
pub fn twisted_power_sum(fd: &Field, d: usize, beta: u64, k: u64) -> Result<TPoly> {
    let mut acc = TPoly::zero();
    for a in enumerate_monic(fd, d)? {
        let term = chi_eval(&a, fd)
            .pow(beta, fd)
            .mul_apoly(&a.pow(k, fd), fd);
        acc = acc.add(&term, fd);
    }
    Ok(acc)
}

/// The q-length l(n): the sum of the base-`base` digits of n (n >= 1).
pub fn q_length(n: u64, base: u64) -> u64 {
    assert!(n >= 1, "q-length is defined for positive integers");
    DigitVector::from_value(n, base).digit_sum()
}

fn digit_sum_allowing_zero(n: u64, base: u64) -> u64 {
    if n == 0 {
        0
    } else {
        q_length(n, base)
    }
}

/// phi(beta, k) = min over 0 <= i < e of
/// floor((l(p^i beta) + l(p^i k)) / (q - 1)), lengths in base q.
pub fn phi_degree(fd: &Field, beta: u64, k: u64) -> u64 {
    assert!(beta >= 1 && k >= 1, "phi is defined for positive beta, k");
    degree_bound(fd, beta, k)
}

/// The same minimum with l(0) = 0, usable at the edges beta = 0 or k = 0.
/// Specializing t = theta^{q^m} for large m turns S_d(chi_t^beta, k) into
/// S_d(q^m beta + k) with no base-q carries, so Boeckle's bound applies with
/// total length l(p^i beta) + l(p^i k); this stays valid when one of the two
/// is zero.
pub fn degree_bound(fd: &Field, beta: u64, k: u64) -> u64 {
    let q = fd.q();
    (0..fd.e as u32)
        .map(|i| {
            let pi = fd.p.pow(i);
            let l = digit_sum_allowing_zero(pi * beta, q) + digit_sum_allowing_zero(pi * k, q);
            l / (q - 1)
        })
        .min()
        .expect("e >= 1")
}

/// Boeckle's exact degree in x^{-1} of z(x, -k):
/// min over 0 <= i < e of floor(l(p^i k) / (q - 1)).
pub fn boeckle_degree(fd: &Field, k: u64) -> u64 {
    assert!(k >= 1);
    degree_bound(fd, 0, k)
}

/// Sheats' criterion: S_d(k) != 0 iff k splits as i_0 + ... + i_d with no
/// base-p carries, where i_j > 0 and (q-1) | i_j for j <= d-1.
///
/// Implemented as a digit-wise DFS over the base-p expansion of k: each
/// digit is distributed among the d+1 slots while tracking the residue mod
/// (q-1) and the positivity of every slot. Memoized on
/// (position, residues, positivity mask).
pub fn sheats_test(fd: &Field, d: usize, k: u64) -> bool {
    assert!(d <= 6, "sheats_test supports d <= 6");
    assert!(k >= 1);
    let p = fd.p;
    let m = fd.q() - 1; // residues mod m; m = 1 collapses the residue track
    let digits = DigitVector::from_value(k, p).digits;
    let mut memo: HashMap<(usize, Vec<u64>, u64), bool> = HashMap::new();
    search(&digits, 0, &mut vec![0; d + 1], 0, d, p, m, &mut memo)
}

#[allow(clippy::too_many_arguments)]
fn search(
    digits: &[u64],
    pos: usize,
    residues: &mut Vec<u64>,
    positive_mask: u64,
    d: usize,
    p: u64,
    m: u64,
    memo: &mut HashMap<(usize, Vec<u64>, u64), bool>,
) -> bool {
    if pos == digits.len() {
        // i_j > 0 and (q-1) | i_j for the first d slots; the last is free
        return (0..d).all(|j| {
            residues[j] == 0 && (positive_mask >> j) & 1 == 1
        });
    }
    let key = (pos, residues.clone(), positive_mask);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let place = mod_pow(p, pos as u64, m);
    let digit = digits[pos];
    let found = distribute(
        digits,
        pos,
        digit,
        0,
        residues,
        positive_mask,
        place,
        d,
        p,
        m,
        memo,
    );
    memo.insert(key, found);
    found
}

/// Enumerate all ways to split the current digit among slots `slot..=d`.
#[allow(clippy::too_many_arguments)]
fn distribute(
    digits: &[u64],
    pos: usize,
    remaining: u64,
    slot: usize,
    residues: &mut Vec<u64>,
    positive_mask: u64,
    place: u64,
    d: usize,
    p: u64,
    m: u64,
    memo: &mut HashMap<(usize, Vec<u64>, u64), bool>,
) -> bool {
    if slot == d {
        // last slot takes the rest
        let mut mask = positive_mask;
        if remaining > 0 {
            mask |= 1 << d;
        }
        let saved = residues[d];
        residues[d] = (residues[d] + remaining * place) % m;
        let found = search(digits, pos + 1, residues, mask, d, p, m, memo);
        residues[d] = saved;
        return found;
    }
    for c in 0..=remaining {
        let mut mask = positive_mask;
        if c > 0 {
            mask |= 1 << slot;
        }
        let saved = residues[slot];
        residues[slot] = (residues[slot] + c * place) % m;
        let found = distribute(
            digits,
            pos,
            remaining - c,
            slot + 1,
            residues,
            mask,
            place,
            d,
            p,
            m,
            memo,
        );
        residues[slot] = saved;
        if found {
            return true;
        }
    }
    false
}

fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn field(p: u64, e: usize) -> Field {
        Field::make(p, e, None).unwrap()
    }

    fn ap(fd: &Field, coeffs: &[u64]) -> APoly {
        APoly::new(coeffs.iter().map(|&c| fd.from_u64(c)).collect(), fd)
    }

    #[test]
    fn power_sum_examples() {
        let f2 = field(2, 1);
        assert_eq!(power_sum(&f2, 1, 1).unwrap(), APoly::one(&f2));
        let f3 = field(3, 1);
        assert_eq!(power_sum(&f3, 1, 1).unwrap(), APoly::zero());
        assert_eq!(power_sum(&f3, 1, 2).unwrap(), ap(&f3, &[2]));
    }

    #[test]
    fn twisted_power_sum_examples() {
        let f3 = field(3, 1);
        assert_eq!(
            twisted_power_sum(&f3, 0, 4, 7).unwrap(),
            TPoly::one(&f3)
        );
        assert_eq!(
            twisted_power_sum(&f3, 1, 1, 1).unwrap(),
            TPoly::from_u64(2, &f3)
        );
        // theta + 2t
        assert_eq!(
            twisted_power_sum(&f3, 1, 1, 2).unwrap(),
            TPoly::new(vec![ap(&f3, &[0, 1]), ap(&f3, &[2])])
        );
        let f4 = field(2, 2);
        assert_eq!(twisted_power_sum(&f4, 1, 1, 1).unwrap(), TPoly::zero());
    }

    #[test]
    fn beta_zero_reduces_to_power_sum() {
        for (p, e) in [(2u64, 1usize), (3, 1), (2, 2)] {
            let fd = field(p, e);
            for d in 0..=2 {
                for k in 0..=8 {
                    assert_eq!(
                        twisted_power_sum(&fd, d, 0, k).unwrap(),
                        TPoly::from_apoly(power_sum(&fd, d, k).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn q_length_examples() {
        assert_eq!(q_length(5, 3), 3);
        assert_eq!(q_length(81, 3), 1);
        assert_eq!(q_length(8, 2), 1);
    }

    #[test]
    fn digit_vector_round_trip() {
        for n in [1u64, 7, 30, 81, 12345] {
            for b in [2u64, 3, 4, 5] {
                let dv = DigitVector::from_value(n, b);
                assert_eq!(dv.value(), n);
                assert!(dv.digits.last() != Some(&0));
            }
        }
    }

    #[test]
    fn phi_degree_examples() {
        let f3 = field(3, 1);
        assert_eq!(phi_degree(&f3, 1, 1), 1);
        assert_eq!(phi_degree(&f3, 2, 2), 2);
        let f4 = field(2, 2);
        assert_eq!(phi_degree(&f4, 1, 1), 0);
    }

    #[test]
    fn boeckle_degree_examples() {
        let f3 = field(3, 1);
        assert_eq!(boeckle_degree(&f3, 1), 0);
        assert_eq!(boeckle_degree(&f3, 2), 1);
        let f4 = field(2, 2);
        assert_eq!(boeckle_degree(&f4, 2), 0);
    }

    #[test]
    fn sheats_examples() {
        let f3 = field(3, 1);
        assert!(!sheats_test(&f3, 1, 1));
        assert!(sheats_test(&f3, 1, 2));
        let f2 = field(2, 1);
        assert!(sheats_test(&f2, 1, 1));
    }

    #[test]
    fn sheats_equivalence_small_grid() {
        for (p, e) in [(2u64, 1usize), (3, 1), (2, 2)] {
            let fd = field(p, e);
            for d in 0..=2usize {
                for k in 1..=40u64 {
                    let nonzero = !power_sum(&fd, d, k).unwrap().is_zero();
                    let predicted = if d == 0 { true } else { sheats_test(&fd, d, k) };
                    if d == 0 {
                        // S_0(k) = 1 always
                        assert!(nonzero);
                    } else {
                        assert_eq!(predicted, nonzero, "q={} d={d} k={k}", fd.q());
                    }
                }
            }
        }
    }

    #[test]
    fn sheats_d0_matches_definition() {
        // for d = 0 the criterion asks for a 1-tuple (i_0) ... with no
        // constraints besides summing to k, so it always holds
        let f3 = field(3, 1);
        for k in 1..=20 {
            assert!(sheats_test(&f3, 0, k));
            assert!(!power_sum(&f3, 0, k).unwrap().is_zero());
        }
    }

    #[test]
    fn vanishing_bound_small_length() {
        // S_d(chi^beta, k) = 0 when k < q^d - q^{d-1} l(beta) - 1, l(beta) < q
        for (p, e) in [(2u64, 1usize), (3, 1)] {
            let fd = field(p, e);
            let q = fd.q();
            for d in 1..=2usize {
                for beta in 1..q {
                    let bound = q.pow(d as u32) as i64
                        - (q.pow(d as u32 - 1) * q_length(beta, q)) as i64
                        - 1;
                    for k in 0..bound.max(0) as u64 {
                        assert!(
                            twisted_power_sum(&fd, d, beta, k).unwrap().is_zero(),
                            "q={q} d={d} beta={beta} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn specialization_identity() {
        // substituting t = theta^{q^m} into S_d(chi^beta, k) gives
        // S_d(q^m beta + k) for every m
        for (p, e) in [(2u64, 1usize), (3, 1)] {
            let fd = field(p, e);
            let q = fd.q();
            for d in 0..=2usize {
                for beta in 0..=3u64 {
                    for k in 0..=4u64 {
                        for m in 1..=3u32 {
                            let lhs = twisted_power_sum(&fd, d, beta, k)
                                .unwrap()
                                .subst_theta_q_pow(m, &fd);
                            let rhs =
                                power_sum(&fd, d, q.pow(m) * beta + k).unwrap();
                            assert_eq!(lhs, rhs, "q={q} d={d} beta={beta} k={k} m={m}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn too_large_propagates() {
        let f5 = field(5, 1);
        assert!(matches!(power_sum(&f5, 30, 1), Err(Error::TooLarge)));
    }

    #[test]
    fn frobenius_additivity_on_tpoly() {
        // (f+g)^p = f^p + g^p in characteristic p
        let fd = field(3, 1);
        let f = twisted_power_sum(&fd, 1, 2, 3).unwrap();
        let g = twisted_power_sum(&fd, 2, 1, 4).unwrap();
        let lhs = f.add(&g, &fd).pow(fd.p, &fd);
        let rhs = f.pow(fd.p, &fd).add(&g.pow(fd.p, &fd), &fd);
        assert_eq!(lhs, rhs);
    }
}
