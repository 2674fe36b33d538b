//! Enumeration of A_+(d) and A(d), the Carlitz factorials D_d and L_d, and
//! the F_q-linear polynomials e_d(z) with their shifted variant over A_+(d).

use crate::algebra::{APoly, Field, TPoly, ZPoly};
use crate::error::{Error, Result};

/// Default enumeration guard: q^d must stay within 2^24 elements.
pub const DEFAULT_ENUM_BITS: u32 = 24;

/// The bracket [d] = theta^{q^d} - theta together with D_d and L_d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarlitzBasics {
    pub d: usize,
    /// D_d, the product of all monic polynomials of degree d.
    pub dd: APoly,
    /// L_d, the least common multiple of all polynomials of degree d.
    pub ld: APoly,
    /// theta^{q^d} - theta.
    pub bracket: APoly,
}

pub fn check_enum_size(fd: &Field, d: usize) -> Result<u64> {
    check_enum_size_with_limit(fd, d, DEFAULT_ENUM_BITS)
}

pub fn check_enum_size_with_limit(fd: &Field, d: usize, max_bits: u32) -> Result<u64> {
    let q = fd.q();
    let mut count: u64 = 1;
    for _ in 0..d {
        count = count.checked_mul(q).ok_or(Error::TooLarge)?;
        if count > 1u64 << max_bits {
            return Err(Error::TooLarge);
        }
    }
    Ok(count)
}

/// All q^d monic polynomials of degree d, in lexicographic order of the
/// coefficient tuple with the low-degree coefficient varying fastest. The
/// order is part of the contract.
pub fn enumerate_monic(fd: &Field, d: usize) -> Result<Vec<APoly>> {
    let count = check_enum_size(fd, d)?;
    let q = fd.q();
    let mut out = Vec::with_capacity(count as usize);
    for n in 0..count {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut rem = n;
        for _ in 0..d {
            coeffs.push(fd.from_index(rem % q));
            rem /= q;
        }
        coeffs.push(fd.one());
        out.push(APoly::new(coeffs, fd));
    }
    Ok(out)
}

/// All q^d polynomials of degree strictly less than d, including 0, in the
/// same lexicographic order. A(0) = {0}.
pub fn enumerate_below(fd: &Field, d: usize) -> Result<Vec<APoly>> {
    let count = check_enum_size(fd, d)?;
    let q = fd.q();
    let mut out = Vec::with_capacity(count as usize);
    for n in 0..count {
        let mut coeffs = Vec::with_capacity(d);
        let mut rem = n;
        for _ in 0..d {
            coeffs.push(fd.from_index(rem % q));
            rem /= q;
        }
        out.push(APoly::new(coeffs, fd));
    }
    Ok(out)
}

/// D_d, L_d and the bracket by the closed recursions
/// D_d = [d] D_{d-1}^q, L_d = [d] L_{d-1}, with D_0 = L_0 = 1.
pub fn factorials(fd: &Field, d: usize) -> CarlitzBasics {
    let q = fd.q();
    let mut dd = APoly::one(fd);
    let mut ld = APoly::one(fd);
    let mut bracket = APoly::zero();
    for i in 1..=d {
        let qi = (q as usize).pow(i as u32);
        bracket = APoly::theta_pow(qi, fd).sub(&APoly::theta_pow(1, fd), fd);
        dd = bracket.mul(&dd.pow(q, fd), fd);
        ld = bracket.mul(&ld, fd);
    }
    if d == 0 {
        bracket = APoly::zero();
    }
    CarlitzBasics { d, dd, ld, bracket }
}

/// e_d(z) = prod over a in A(d) of (z - a), by the literal product.
pub fn e_poly(fd: &Field, d: usize) -> Result<ZPoly> {
    let mut acc = ZPoly::one(fd);
    for a in enumerate_below(fd, d)? {
        acc = acc.mul_linear(&TPoly::from_apoly(a), fd);
    }
    Ok(acc)
}

/// e_d(z - theta^d) = prod over a in A_+(d) of (z - a), by the literal product.
pub fn e_shift(fd: &Field, d: usize) -> Result<ZPoly> {
    let mut acc = ZPoly::one(fd);
    for a in enumerate_monic(fd, d)? {
        acc = acc.mul_linear(&TPoly::from_apoly(a), fd);
    }
    Ok(acc)
}

/// The constant M_d(1) = (-1)^d D_d / L_d, the coefficient of z in e_d(z)
/// and the formal z-derivative of both e_d(z) and its shift.
pub fn m_one(fd: &Field, d: usize) -> APoly {
    let basics = factorials(fd, d);
    let ratio = basics
        .dd
        .exact_div(&basics.ld, fd)
        .expect("L_d divides D_d");
    if d % 2 == 1 {
        ratio.neg(fd)
    } else {
        ratio
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, e: usize) -> Field {
        Field::make(p, e, None).unwrap()
    }

    fn ap(fd: &Field, coeffs: &[u64]) -> APoly {
        APoly::new(coeffs.iter().map(|&c| fd.from_u64(c)).collect(), fd)
    }

    #[test]
    fn enumerate_monic_examples() {
        let f3 = field(3, 1);
        assert_eq!(enumerate_monic(&f3, 0).unwrap(), vec![APoly::one(&f3)]);
        assert_eq!(
            enumerate_monic(&f3, 1).unwrap(),
            vec![ap(&f3, &[0, 1]), ap(&f3, &[1, 1]), ap(&f3, &[2, 1])]
        );
        let f2 = field(2, 1);
        assert_eq!(
            enumerate_monic(&f2, 2).unwrap(),
            vec![
                ap(&f2, &[0, 0, 1]),
                ap(&f2, &[1, 0, 1]),
                ap(&f2, &[0, 1, 1]),
                ap(&f2, &[1, 1, 1]),
            ]
        );
    }

    #[test]
    fn enumerate_below_examples() {
        let f3 = field(3, 1);
        assert_eq!(enumerate_below(&f3, 0).unwrap(), vec![APoly::zero()]);
        assert_eq!(
            enumerate_below(&f3, 1).unwrap(),
            vec![APoly::zero(), ap(&f3, &[1]), ap(&f3, &[2])]
        );
        let f2 = field(2, 1);
        assert_eq!(
            enumerate_below(&f2, 1).unwrap(),
            vec![APoly::zero(), APoly::one(&f2)]
        );
    }

    #[test]
    fn enumeration_guard() {
        let f5 = field(5, 1);
        assert_eq!(enumerate_monic(&f5, 20).unwrap_err(), Error::TooLarge);
    }

    // Oracle: the defining product and lcm over the enumeration.
    fn brute_factorials(fd: &Field, d: usize) -> (APoly, APoly) {
        let monic = enumerate_monic(fd, d).unwrap();
        let mut prod = APoly::one(fd);
        let mut lcm = APoly::one(fd);
        for a in &monic {
            prod = prod.mul(a, fd);
            lcm = lcm.lcm(a, fd);
        }
        // L_d: lcm of ALL polynomials of degree d equals lcm of the monic
        // ones (scalars do not change the lcm)
        (prod, lcm)
    }

    #[test]
    fn factorials_match_defining_products() {
        for (p, e, dmax) in [(2u64, 1usize, 3usize), (3, 1, 3), (2, 2, 2), (5, 1, 2)] {
            let fd = field(p, e);
            for d in 0..=dmax {
                let basics = factorials(&fd, d);
                let (prod, lcm) = brute_factorials(&fd, d);
                assert_eq!(basics.dd, prod, "D_{d} over q={}", fd.q());
                assert_eq!(basics.ld, lcm, "L_{d} over q={}", fd.q());
                assert!(basics.dd.is_monic(&fd));
                assert!(basics.ld.is_monic(&fd));
            }
        }
    }

    #[test]
    fn factorials_examples() {
        let f3 = field(3, 1);
        let b = factorials(&f3, 1);
        let theta_cubed = ap(&f3, &[0, 2, 0, 1]); // theta^3 - theta
        assert_eq!(b.dd, theta_cubed);
        assert_eq!(b.ld, theta_cubed);
        let f2 = field(2, 1);
        let b = factorials(&f2, 2);
        let b1 = ap(&f2, &[0, 1, 0, 0, 1]); // theta^4 + theta
        let b0 = ap(&f2, &[0, 1, 1]); // theta^2 + theta
        assert_eq!(b.dd, b1.mul(&b0, &f2).mul(&b0, &f2));
        assert_eq!(b.ld, b1.mul(&b0, &f2));
    }

    #[test]
    fn e_poly_examples() {
        let f3 = field(3, 1);
        assert_eq!(e_poly(&f3, 0).unwrap(), ZPoly::z_pow(1, &f3));
        // z^3 - z
        let e1 = e_poly(&f3, 1).unwrap();
        let mut expect = ZPoly::z_pow(3, &f3);
        expect = expect.sub(&ZPoly::z_pow(1, &f3), &f3);
        assert_eq!(e1, expect);
        let f2 = field(2, 1);
        // z^2 + z
        let e1 = e_poly(&f2, 1).unwrap();
        assert_eq!(
            e1,
            ZPoly::z_pow(2, &f2).add(&ZPoly::z_pow(1, &f2), &f2)
        );
    }

    #[test]
    fn e_shift_examples() {
        let f2 = field(2, 1);
        // d=0: z - 1
        let e0 = e_shift(&f2, 0).unwrap();
        assert_eq!(
            e0,
            ZPoly::z_pow(1, &f2).add(&ZPoly::one(&f2), &f2)
        );
        // d=1, q=2: z^2 + z + theta^2 + theta
        let e1 = e_shift(&f2, 1).unwrap();
        let expect = ZPoly::new(vec![
            TPoly::from_apoly(ap(&f2, &[0, 1, 1])),
            TPoly::one(&f2),
            TPoly::one(&f2),
        ]);
        assert_eq!(e1, expect);
        // d=1, q=3: constant term -(theta^3 - theta) = (-1)^{q^d} D_d
        let f3 = field(3, 1);
        let e1 = e_shift(&f3, 1).unwrap();
        assert_eq!(
            e1.constant_term(),
            TPoly::from_apoly(factorials(&f3, 1).dd.neg(&f3))
        );
    }

    #[test]
    fn e_poly_is_fq_linear_with_m_one_z_coefficient() {
        for (p, e) in [(2u64, 1usize), (3, 1), (2, 2)] {
            let fd = field(p, e);
            for d in 0..=2 {
                let ed = e_poly(&fd, d).unwrap();
                assert!(ed.is_fq_linear(&fd), "q={} d={d}", fd.q());
                assert!(ed.is_monic(&fd));
                assert_eq!(ed.degree(), Some(fd.q().pow(d as u32) as usize));
                assert_eq!(ed.coeff(1), TPoly::from_apoly(m_one(&fd, d)));
            }
        }
    }

    #[test]
    fn e_polys_vanish_on_their_root_sets() {
        let fd = field(3, 1);
        for d in 0..=2 {
            let ed = e_poly(&fd, d).unwrap();
            for a in enumerate_below(&fd, d).unwrap() {
                assert!(ed.eval_apoly(&a, &fd).is_zero());
            }
            let es = e_shift(&fd, d).unwrap();
            for a in enumerate_monic(&fd, d).unwrap() {
                assert!(es.eval_apoly(&a, &fd).is_zero());
            }
            // e_shift(0) = (-1)^{q^d} D_d
            let sign_exp = fd.q().pow(d as u32);
            let dd = factorials(&fd, d).dd;
            let expect = if sign_exp % 2 == 1 { dd.neg(&fd) } else { dd };
            assert_eq!(es.constant_term(), TPoly::from_apoly(expect));
            // derivative of the shifted product is the constant M_d(1)
            assert_eq!(
                es.derivative(&fd),
                ZPoly::constant(TPoly::from_apoly(m_one(&fd, d)))
            );
        }
    }

    #[test]
    fn m_one_examples() {
        let f3 = field(3, 1);
        assert_eq!(m_one(&f3, 0), APoly::one(&f3));
        assert_eq!(m_one(&f3, 1), ap(&f3, &[2]));
        let f2 = field(2, 1);
        assert_eq!(m_one(&f2, 2), ap(&f2, &[0, 1, 1]));
    }

    #[test]
    fn e_poly_is_additive_as_a_map() {
        let fd = field(3, 1);
        let d = 2;
        let ed = e_poly(&fd, d).unwrap();
        let a = ap(&fd, &[1, 2, 0, 1]);
        let b = ap(&fd, &[2, 0, 1]);
        for c in fd.elements() {
            let lhs = ed.eval_apoly(&a.add(&b.mul_fq(&c, &fd), &fd), &fd);
            let rhs = ed
                .eval_apoly(&a, &fd)
                .add(&ed.eval_apoly(&b, &fd).mul_fq(&c, &fd), &fd);
            assert_eq!(lhs, rhs);
        }
    }
}
