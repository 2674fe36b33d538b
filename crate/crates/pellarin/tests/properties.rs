//! Randomized algebraic properties, driven by proptest. These complement
//! the seeded verify suites with shrinking on failure.

use proptest::prelude::*;

use pellarin::algebra::{chi_eval, APoly, Field, TPoly};

fn f3() -> Field {
    Field::make(3, 1, None).unwrap()
}

fn f4() -> Field {
    Field::make(2, 2, None).unwrap()
}

fn apoly_strategy(q: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..q, 0..6)
}

fn build(fd: &Field, coeffs: &[u64]) -> APoly {
    APoly::new(coeffs.iter().map(|&c| fd.from_index(c)).collect(), fd)
}

proptest! {
    #[test]
    fn apoly_multiplication_commutes_and_associates(
        a in apoly_strategy(3),
        b in apoly_strategy(3),
        c in apoly_strategy(3),
    ) {
        let fd = f3();
        let (a, b, c) = (build(&fd, &a), build(&fd, &b), build(&fd, &c));
        prop_assert_eq!(a.mul(&b, &fd), b.mul(&a, &fd));
        prop_assert_eq!(a.mul(&b, &fd).mul(&c, &fd), a.mul(&b.mul(&c, &fd), &fd));
    }

    #[test]
    fn division_inverts_multiplication(
        a in apoly_strategy(4),
        b in apoly_strategy(4),
    ) {
        let fd = f4();
        let (a, b) = (build(&fd, &a), build(&fd, &b));
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b, &fd).exact_div(&b, &fd), Ok(a.clone()));
        let (quot, rem) = a.divrem(&b, &fd);
        prop_assert_eq!(quot.mul(&b, &fd).add(&rem, &fd), a);
    }

    #[test]
    fn chi_is_a_homomorphism_respecting_frobenius(
        a in apoly_strategy(3),
        b in apoly_strategy(3),
    ) {
        let fd = f3();
        let (a, b) = (build(&fd, &a), build(&fd, &b));
        let (ca, cb) = (chi_eval(&a, &fd), chi_eval(&b, &fd));
        prop_assert_eq!(chi_eval(&a.mul(&b, &fd), &fd), ca.mul(&cb, &fd));
        prop_assert_eq!(chi_eval(&a.add(&b, &fd), &fd), ca.add(&cb, &fd));
        // (f + g)^p = f^p + g^p in characteristic p
        let p = fd.p;
        prop_assert_eq!(
            ca.add(&cb, &fd).pow(p, &fd),
            ca.pow(p, &fd).add(&cb.pow(p, &fd), &fd)
        );
    }

    #[test]
    fn specializing_t_to_theta_power_is_frobenius(
        a in apoly_strategy(4),
        m in 0u32..3,
    ) {
        let fd = f4();
        let a = build(&fd, &a);
        prop_assert_eq!(
            chi_eval(&a, &fd).subst_theta_q_pow(m, &fd),
            a.pow(fd.q().pow(m), &fd)
        );
    }

    #[test]
    fn gcd_divides_both_arguments(
        a in apoly_strategy(3),
        b in apoly_strategy(3),
    ) {
        let fd = f3();
        let (a, b) = (build(&fd, &a), build(&fd, &b));
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = a.gcd(&b, &fd);
        prop_assert!(g.is_monic(&fd));
        if !a.is_zero() {
            prop_assert!(a.exact_div(&g, &fd).is_ok());
        }
        if !b.is_zero() {
            prop_assert!(b.exact_div(&g, &fd).is_ok());
        }
    }

    #[test]
    fn tpoly_linear_division_reconstructs(
        coeffs in prop::collection::vec(prop::collection::vec(0u64..3, 0..4), 1..4),
        root in apoly_strategy(3),
    ) {
        let fd = f3();
        let f = TPoly::new(coeffs.iter().map(|c| build(&fd, c)).collect());
        let r = build(&fd, &root);
        let (quot, rem) = f.divrem_linear_t(&r, &fd);
        // f = quot * (t - r) + rem, and rem = f(r)
        let t_minus_r = TPoly::new(vec![r.neg(&fd), APoly::one(&fd)]);
        let rebuilt = quot.mul(&t_minus_r, &fd).add(&TPoly::from_apoly(rem.clone()), &fd);
        prop_assert_eq!(rebuilt, f.clone());
        prop_assert_eq!(rem, f.eval_t(&r, &fd));
    }
}
