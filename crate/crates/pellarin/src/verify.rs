//! Invariant suites: every structural property promised by the library,
//! runnable as a batch with a seeded RNG for the randomized checks. Each
//! suite reports a case count and a list of failures carrying a minimal
//! reproducer, so a failing run doubles as a counterexample report.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{binom_mod_p, chi_eval, APoly, Field, FracPoly, RationalForm, TPoly, UPoly, ZPoly};
use crate::approximation::{
    alpha_decompose, carlitz_approx, gen_series, m_d_power_product,
    p_approx, pellarin_degree_sum, wagner_coeff, wagner_product, wagner_truncated_eval,
    LinearMapSpec,
};
use crate::carlitz::{e_poly, e_shift, enumerate_below, enumerate_monic, factorials, m_one};
use crate::error::{Error, Result};
use crate::powersums::{
    boeckle_degree, phi_degree, power_sum, q_length, sheats_test, twisted_power_sum,
};
use crate::specialpolys::{l_value, trivial_zero_order, z_brute, z_recursive};

/// Size bounds and seed for a verification run. The grids inside each suite
/// are additionally clamped to the documented limits of the checks they
/// exercise, so large values here cannot make a run explode.
#[derive(Debug, Clone, Copy)]
pub struct VerifyParams {
    pub max_d: usize,
    pub max_k: u64,
    pub max_beta: u64,
    pub seed: u64,
}

impl Default for VerifyParams {
    fn default() -> VerifyParams {
        VerifyParams {
            max_d: 2,
            max_k: 10,
            max_beta: 4,
            seed: 0,
        }
    }
}

/// One failed check: the inputs that produced it and both sides of the
/// comparison, rendered as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one suite. `status` is "pass" exactly when `failures` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub status: String,
}

pub const SUITE_NAMES: [&str; 5] = [
    "algebra",
    "carlitz",
    "powersums",
    "specialpolys",
    "approximation",
];

struct Checker {
    cases: u64,
    failures: Vec<Failure>,
}

impl Checker {
    fn new() -> Checker {
        Checker {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, inputs: String, expected: &T, actual: &T) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                inputs,
                expected: format!("{:?}", expected),
                actual: format!("{:?}", actual),
            });
        }
    }

    fn ok(&mut self, inputs: String, cond: bool) {
        self.eq(inputs, &true, &cond);
    }

    fn finish(self, suite: &str) -> VerifyReport {
        let status = if self.failures.is_empty() {
            "pass"
        } else {
            "fail"
        };
        VerifyReport {
            suite: suite.to_string(),
            cases: self.cases,
            failures: self.failures,
            status: status.to_string(),
        }
    }
}

fn rand_fq(fd: &Field, rng: &mut ChaCha8Rng) -> crate::algebra::FqElem {
    fd.from_index(rand::Rng::gen_range(rng, 0..fd.q()))
}

fn rand_apoly(fd: &Field, max_deg: usize, rng: &mut ChaCha8Rng) -> APoly {
    APoly::new((0..=max_deg).map(|_| rand_fq(fd, rng)).collect(), fd)
}

fn rand_tpoly(fd: &Field, max_t: usize, max_theta: usize, rng: &mut ChaCha8Rng) -> TPoly {
    TPoly::new(
        (0..=max_t)
            .map(|_| rand_apoly(fd, max_theta, rng))
            .collect(),
    )
}

/// Ring axioms, Frobenius, chi_t as a homomorphism, the t = theta^{q^m}
/// specialization, Lucas binomials against a Pascal-triangle oracle, and
/// round-trip exact division.
pub fn suite_algebra(fd: &Field, params: &VerifyParams) -> VerifyReport {
    let mut c = Checker::new();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let q = fd.q();
    let samples = 8usize;

    for s in 0..samples {
        let tag = |what: &str| format!("suite=algebra check={} q={} sample={}", what, q, s);
        // FqElem axioms
        let (a, b, cc) = (rand_fq(fd, &mut rng), rand_fq(fd, &mut rng), rand_fq(fd, &mut rng));
        c.eq(tag("fq-assoc"), &fd.mul(&fd.mul(&a, &b), &cc), &fd.mul(&a, &fd.mul(&b, &cc)));
        c.eq(
            tag("fq-distrib"),
            &fd.mul(&a, &fd.add(&b, &cc)),
            &fd.add(&fd.mul(&a, &b), &fd.mul(&a, &cc)),
        );
        c.ok(tag("fq-addinv"), fd.is_zero(&fd.add(&a, &fd.neg(&a))));

        // APoly axioms and exact division round trip
        let (f, g, h) = (
            rand_apoly(fd, 3, &mut rng),
            rand_apoly(fd, 3, &mut rng),
            rand_apoly(fd, 3, &mut rng),
        );
        c.eq(tag("apoly-assoc"), &f.mul(&g, fd).mul(&h, fd), &f.mul(&g.mul(&h, fd), fd));
        c.eq(
            tag("apoly-distrib"),
            &f.mul(&g.add(&h, fd), fd),
            &f.mul(&g, fd).add(&f.mul(&h, fd), fd),
        );
        c.ok(tag("apoly-addinv"), f.add(&f.neg(fd), fd).is_zero());
        if !g.is_zero() {
            let prod = f.mul(&g, fd);
            c.eq(
                tag("apoly-exactdiv"),
                &Ok(f.clone()),
                &prod.exact_div(&g, fd),
            );
        }

        // TPoly axioms and Frobenius
        let (u, v, w) = (
            rand_tpoly(fd, 2, 2, &mut rng),
            rand_tpoly(fd, 2, 2, &mut rng),
            rand_tpoly(fd, 2, 2, &mut rng),
        );
        c.eq(tag("tpoly-assoc"), &u.mul(&v, fd).mul(&w, fd), &u.mul(&v.mul(&w, fd), fd));
        c.eq(
            tag("tpoly-distrib"),
            &u.mul(&v.add(&w, fd), fd),
            &u.mul(&v, fd).add(&u.mul(&w, fd), fd),
        );
        c.ok(tag("tpoly-addinv"), u.add(&u.neg(fd), fd).is_zero());
        let p = fd.p;
        c.eq(
            tag("tpoly-frobenius"),
            &u.add(&v, fd).pow(p, fd),
            &u.pow(p, fd).add(&v.pow(p, fd), fd),
        );

        // chi_t is a ring homomorphism
        c.eq(
            tag("chi-mul"),
            &chi_eval(&f.mul(&g, fd), fd),
            &chi_eval(&f, fd).mul(&chi_eval(&g, fd), fd),
        );
        c.eq(
            tag("chi-add"),
            &chi_eval(&f.add(&g, fd), fd),
            &chi_eval(&f, fd).add(&chi_eval(&g, fd), fd),
        );

        // chi_t(a) at t = theta^{q^m} is a^{q^m}
        for m in 0..3u32 {
            c.eq(
                format!("{} m={}", tag("chi-specialize"), m),
                &f.pow(q.pow(m), fd),
                &chi_eval(&f, fd).subst_theta_q_pow(m, fd),
            );
        }

        // UPoly and ZPoly axioms
        let (x, y, z) = (
            UPoly::new((0..=2).map(|_| rand_tpoly(fd, 1, 1, &mut rng)).collect()),
            UPoly::new((0..=2).map(|_| rand_tpoly(fd, 1, 1, &mut rng)).collect()),
            UPoly::new((0..=2).map(|_| rand_tpoly(fd, 1, 1, &mut rng)).collect()),
        );
        c.eq(tag("upoly-assoc"), &x.mul(&y, fd).mul(&z, fd), &x.mul(&y.mul(&z, fd), fd));
        c.eq(
            tag("upoly-distrib"),
            &x.mul(&y.add(&z, fd), fd),
            &x.mul(&y, fd).add(&x.mul(&z, fd), fd),
        );
        let (zx, zy, zz) = (
            ZPoly::new((0..=2).map(|_| rand_tpoly(fd, 1, 1, &mut rng)).collect()),
            ZPoly::new((0..=2).map(|_| rand_tpoly(fd, 1, 1, &mut rng)).collect()),
            ZPoly::new((0..=2).map(|_| rand_tpoly(fd, 1, 1, &mut rng)).collect()),
        );
        c.eq(
            tag("zpoly-assoc"),
            &zx.mul(&zy, fd).mul(&zz, fd),
            &zx.mul(&zy.mul(&zz, fd), fd),
        );
        c.eq(
            tag("zpoly-distrib"),
            &zx.mul(&zy.add(&zz, fd), fd),
            &zx.mul(&zy, fd).add(&zx.mul(&zz, fd), fd),
        );
    }

    // Lucas binomials against a full Pascal triangle (C(64,32) fits in u128).
    let p = fd.p;
    let mut row: Vec<u128> = vec![1];
    for n in 0..=64u64 {
        for r in 0..=n {
            c.eq(
                format!("suite=algebra check=binom p={} n={} r={}", p, n, r),
                &((row[r as usize] % p as u128) as u64),
                &binom_mod_p(n, r, p),
            );
        }
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }

    c.finish("algebra")
}

/// Carlitz factorials against brute product/lcm, F_q-linearity and the
/// z-coefficient of e_d, root sets of e_d and its monic shift, and the
/// constant term of the shift.
pub fn suite_carlitz(fd: &Field, params: &VerifyParams) -> VerifyReport {
    let mut c = Checker::new();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed.wrapping_add(1));
    let q = fd.q();
    let d_fact = if q <= 3 { 3 } else { 2 };

    for d in 0..=d_fact {
        let tag = |what: &str| format!("suite=carlitz check={} q={} d={}", what, q, d);
        let basics = factorials(fd, d);
        let monics = enumerate_monic(fd, d).expect("small enumeration");
        let mut prod = APoly::one(fd);
        let mut lcm = APoly::one(fd);
        for a in &monics {
            prod = prod.mul(a, fd);
            lcm = lcm.lcm(a, fd);
        }
        c.eq(tag("factorial-product"), &prod, &basics.dd);
        c.eq(tag("factorial-lcm"), &lcm, &basics.ld);
    }

    for d in 0..=params.max_d.min(2) {
        let tag = |what: &str| format!("suite=carlitz check={} q={} d={}", what, q, d);
        let ep = e_poly(fd, d).expect("small enumeration");
        let es = e_shift(fd, d).expect("small enumeration");
        let basics = factorials(fd, d);

        c.ok(tag("e-linear"), ep.is_fq_linear(fd));
        c.eq(tag("e-z-coefficient"), &TPoly::from_apoly(m_one(fd, d)), &ep.coeff(1));
        for a in enumerate_below(fd, d).expect("small enumeration") {
            c.ok(
                format!("{} a={:?}", tag("e-root"), a),
                ep.eval_apoly(&a, fd).is_zero(),
            );
        }
        for a in enumerate_monic(fd, d).expect("small enumeration") {
            c.ok(
                format!("{} a={:?}", tag("eshift-root"), a),
                es.eval_apoly(&a, fd).is_zero(),
            );
        }
        let sign_dd = if q % 2 == 1 {
            basics.dd.neg(fd)
        } else {
            basics.dd.clone()
        };
        c.eq(
            tag("eshift-constant"),
            &TPoly::from_apoly(sign_dd),
            &es.constant_term(),
        );

        // F_q-linearity as a map on random inputs
        for s in 0..4 {
            let a = rand_apoly(fd, 3, &mut rng);
            let b = rand_apoly(fd, 3, &mut rng);
            let scalar = rand_fq(fd, &mut rng);
            let lhs = ep.eval_apoly(&a.add(&b.mul_fq(&scalar, fd), fd), fd);
            let rhs = ep
                .eval_apoly(&a, fd)
                .add(&ep.eval_apoly(&b, fd).mul_fq(&scalar, fd), fd);
            c.eq(format!("{} sample={}", tag("e-additive"), s), &lhs, &rhs);
        }
    }

    c.finish("carlitz")
}

/// Sheats' non-vanishing criterion against brute sums, the specialization
/// identity, the vanishing bound, the beta = 0 reduction, and Boeckle's
/// maximal non-vanishing degree.
pub fn suite_powersums(fd: &Field, params: &VerifyParams) -> VerifyReport {
    let mut c = Checker::new();
    let q = fd.q();
    let p = fd.p;

    let d_cap = params.max_d.min(2);
    for d in 0..=d_cap {
        for k in 1..=params.max_k.min(40) {
            c.eq(
                format!("suite=powersums check=sheats q={} d={} k={}", q, d, k),
                &sheats_test(fd, d, k),
                &!power_sum(fd, d, k).expect("small enumeration").is_zero(),
            );
        }
    }

    let bk_cap = params.max_beta.min(6);
    let kk_cap = params.max_k.min(6);
    for d in 0..=d_cap {
        for beta in 0..=bk_cap {
            for k in 0..=kk_cap {
                let tag = |what: &str| {
                    format!(
                        "suite=powersums check={} q={} d={} beta={} k={}",
                        what, q, d, beta, k
                    )
                };
                let tw = twisted_power_sum(fd, d, beta, k).expect("small enumeration");

                // smallest m with q^m > p^i k for every i < e
                let mut m = 0u32;
                while q.pow(m) <= k * p.pow(fd.e as u32 - 1) {
                    m += 1;
                }
                c.eq(
                    format!("{} m={}", tag("specialization"), m),
                    &power_sum(fd, d, q.pow(m) * beta + k).expect("small enumeration"),
                    &tw.subst_theta_q_pow(m, fd),
                );

                if beta == 0 {
                    c.eq(
                        tag("beta-zero"),
                        &TPoly::from_apoly(power_sum(fd, d, k).expect("small enumeration")),
                        &tw,
                    );
                }
                if beta >= 1 && d >= 1 {
                    let l = q_length(beta, q);
                    let bound =
                        q.pow(d as u32) as i128 - q.pow(d as u32 - 1) as i128 * l as i128 - 1;
                    if l < q && (k as i128) < bound {
                        // k < q^d - q^{d-1} l(beta) - 1 forces vanishing
                        c.ok(tag("vanishing-bound"), tw.is_zero());
                    }
                }
            }
        }
    }

    for k in 1..=params.max_k.min(30) {
        let bd = boeckle_degree(fd, k);
        let mut observed: Option<u64> = None;
        for d in 0..=(bd as usize + 1) {
            if !power_sum(fd, d, k).expect("small enumeration").is_zero() {
                observed = Some(d as u64);
            }
        }
        c.eq(
            format!("suite=powersums check=boeckle q={} k={}", q, k),
            &Some(bd),
            &observed,
        );
    }

    c.finish("powersums")
}

/// Recursion against brute force, the exact-degree formula, trivial-zero
/// classification with simplicity, the non-vanishing shape, and the beta = 0
/// degree.
pub fn suite_specialpolys(fd: &Field, params: &VerifyParams) -> VerifyReport {
    let mut c = Checker::new();
    let q = fd.q();

    for beta in 0..=params.max_beta.min(6) {
        for k in 0..=params.max_k.min(10) {
            if beta + k == 0 {
                continue;
            }
            let tag =
                |what: &str| format!("suite=specialpolys check={} q={} beta={} k={}", what, q, beta, k);
            let zb = z_brute(fd, beta, k).expect("within grid limits");
            let zr = z_recursive(fd, beta, k).expect("within grid limits");
            c.eq(tag("recursion-vs-brute"), &zb.z, &zr.z);

            if beta >= 1 && k >= 1 {
                c.eq(
                    tag("exact-degree"),
                    &Some(phi_degree(fd, beta, k) as usize),
                    &zb.z.degree_u(),
                );
            }
            if beta == 0 {
                c.eq(
                    tag("beta-zero-degree"),
                    &Some(boeckle_degree(fd, k) as usize),
                    &zb.z.degree_u(),
                );
            }
            if k >= 1 {
                let lv = l_value(fd, beta, k).expect("within grid limits");
                let divisible = (beta + k) % (q - 1).max(1) == 0;
                c.eq(tag("trivial-zero-iff"), &divisible, &lv.is_zero());
                if divisible {
                    c.eq(tag("zero-simple"), &Ok(1), &trivial_zero_order(fd, beta, k));
                } else {
                    // shape 1 + t f + theta g: constant coefficient 1
                    c.eq(
                        tag("nonzero-shape"),
                        &fd.one(),
                        &lv.coeff(0).coeff(0, fd),
                    );
                    c.eq(tag("zero-order"), &Ok(0), &trivial_zero_order(fd, beta, k));
                }
            }
        }
    }

    c.finish("specialpolys")
}

/// Interpolation, the fundamental relation, F_q-linearity of P_d, affinity
/// and degree of M_d, the digit principle, Wagner factorization and the
/// degree-sum fraction, the recursion and scaling lemmas for the alpha
/// coefficients, the truncated Wagner series, the cofactor and evaluation
/// identities for b_d, and generating-series extraction.
pub fn suite_approximation(fd: &Field, params: &VerifyParams) -> VerifyReport {
    let mut c = Checker::new();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed.wrapping_add(2));
    let q = fd.q();
    let d_cap = params.max_d.min(2);

    // linear maps: the three named ones plus seeded random ones
    for d in 1..=d_cap {
        let mut maps: Vec<(String, LinearMapSpec)> = vec![
            ("chi".into(), LinearMapSpec::chi(fd, d)),
            ("identity".into(), LinearMapSpec::identity(fd, d)),
            ("chi-frob1".into(), LinearMapSpec::chi_frobenius(fd, 1, d)),
        ];
        for s in 0..4 {
            maps.push((
                format!("random{}", s),
                LinearMapSpec::random(fd, d, 2, 2, &mut rng),
            ));
        }
        let scale = TPoly::from_apoly(m_one(fd, d));
        for (name, f) in &maps {
            let tag = |what: &str| {
                format!("suite=approximation check={} q={} d={} f={}", what, q, d, name)
            };
            let md = carlitz_approx(fd, d, f).expect("small enumeration");
            for b in enumerate_monic(fd, d).expect("small enumeration") {
                c.eq(
                    format!("{} b={:?}", tag("interpolation"), b),
                    &f.apply(&b, fd).expect("bound d").mul(&scale, fd),
                    &md.eval_apoly(&b, fd),
                );
            }
            for cc in enumerate_below(fd, d).expect("small enumeration") {
                let lhs = md
                    .compose_z_plus(&TPoly::from_apoly(cc.clone()), fd)
                    .sub(&md, fd);
                let rhs = ZPoly::constant(f.apply(&cc, fd).expect("bound d").mul(&scale, fd));
                c.eq(format!("{} c={:?}", tag("fundamental"), cc), &rhs, &lhs);
            }
            let pd = p_approx(fd, d, f).expect("small enumeration");
            c.ok(tag("p-linear"), pd.is_fq_linear(fd));
            for b in enumerate_below(fd, d).expect("small enumeration") {
                c.eq(
                    format!("{} b={:?}", tag("p-interpolation"), b),
                    &f.apply(&b, fd).expect("bound d").mul(&scale, fd),
                    &pd.eval_apoly(&b, fd),
                );
            }
            c.ok(tag("m-affine"), md.is_affine(fd));
            c.ok(
                tag("m-degree"),
                md.degree().map_or(true, |deg| d == 0 || deg <= q.pow(d as u32 - 1) as usize),
            );
        }
    }

    // digit principle for l(beta) < q, beta <= q^2, cross-multiplied
    for d in 1..=d_cap {
        for beta in 1..=q * q {
            if q_length(beta, q) >= q {
                continue;
            }
            let (lhs, rhs) = m_d_power_product(fd, d, beta).expect("small enumeration");
            c.eq(
                format!(
                    "suite=approximation check=digit-principle q={} d={} beta={}",
                    q, d, beta
                ),
                &lhs,
                &rhs,
            );
        }
    }

    // Wagner coefficient identities
    let d_wagner = params.max_d.max(2).min(3);
    for d in 1..=d_wagner {
        let tag = |what: &str| format!("suite=approximation check={} q={} d={}", what, q, d);
        let wd = wagner_coeff(fd, d).expect("small enumeration");
        let basics = factorials(fd, d);
        c.eq(tag("wagner-product"), &wagner_product(fd, d), &wd.b);

        // degree-sum fraction: sum over A_+(d) of chi(a)/a = (-1)^d b_d / L_d
        let signed_b = if d % 2 == 1 { wd.b.neg(fd) } else { wd.b.clone() };
        c.eq(
            tag("degree-sum"),
            &RationalForm::new(signed_b, basics.ld.clone(), fd).expect("nonzero L_d"),
            &pellarin_degree_sum(fd, d).expect("small enumeration"),
        );

        // truncated Wagner series interpolates chi on A(d)
        for a in enumerate_below(fd, d).expect("small enumeration") {
            c.eq(
                format!("{} a={:?}", tag("truncated-series"), a),
                &RationalForm::from_tpoly(chi_eval(&a, fd), fd),
                &wagner_truncated_eval(fd, d, &a).expect("degree in range"),
            );
        }

        // b_d at t = theta^{q^d} is D_d
        c.eq(
            tag("evaluation-identity"),
            &basics.dd,
            &wd.b.eval_t(&APoly::theta_pow(q.pow(d as u32) as usize, fd), fd),
        );

        // cofactor of (t - theta) at t = theta is (-1)^{d-1} L_{d-1}
        let (g, rem) = wd.b.divrem_linear_t(&APoly::theta_pow(1, fd), fd);
        c.ok(tag("cofactor-divides"), rem.is_zero());
        let prev = factorials(fd, d - 1).ld;
        let expect = if (d - 1) % 2 == 1 { prev.neg(fd) } else { prev };
        c.eq(
            tag("cofactor-value"),
            &expect,
            &g.eval_t(&APoly::theta_pow(1, fd), fd),
        );
    }

    // alpha-coefficient recursion and scaling identities, f = chi
    for d in 1..=d_cap {
        let tag = |what: &str| format!("suite=approximation check={} q={} d={}", what, q, d);
        let f_lo = LinearMapSpec::chi(fd, d);
        let f_hi = LinearMapSpec::chi(fd, d + 1);
        let alphas = alpha_decompose(fd, d + 1, &f_hi).expect("chi is linear");

        let scaled = |dd: usize, f: &LinearMapSpec| -> FracPoly {
            let basics = factorials(fd, dd);
            let mut s = RationalForm::new(TPoly::from_apoly(basics.ld), basics.dd, fd)
                .expect("nonzero D_d");
            if dd % 2 == 1 {
                s = s.neg(fd);
            }
            FracPoly::from_zpoly_scaled(&p_approx(fd, dd, f).expect("small enumeration"), &s, fd)
        };
        let lhs = scaled(d + 1, &f_hi).sub(
            &FracPoly::from_zpoly_scaled(
                &e_poly(fd, d).expect("small enumeration"),
                &alphas[d],
                fd,
            ),
            fd,
        );
        c.eq(tag("alpha-recursion"), &scaled(d, &f_lo), &lhs);

        let basics = factorials(fd, d);
        let m0 = carlitz_approx(fd, d, &f_lo)
            .expect("small enumeration")
            .constant_term();
        let signed_m0 = if d % 2 == 1 { m0.neg(fd) } else { m0 };
        let lhs44 = RationalForm::new(signed_m0.mul_apoly(&basics.ld, fd), basics.dd.clone(), fd)
            .expect("nonzero D_d");
        let rhs44 = alphas[d].mul_tpoly(&TPoly::from_apoly(basics.dd), fd);
        c.eq(tag("alpha-scaling"), &lhs44, &rhs44);
    }

    // generating series matches the twisted power sums
    for d in 0..=d_cap {
        for beta in 0..=params.max_beta.min(4) {
            let n = (q.pow(d as u32) + 4) as usize;
            let series = gen_series(fd, d, beta, n).expect("small enumeration");
            let mut leading_zeros = 0usize;
            for (k, coeff) in series.iter().enumerate() {
                c.eq(
                    format!(
                        "suite=approximation check=gen-series q={} d={} beta={} k={}",
                        q, d, beta, k
                    ),
                    &twisted_power_sum(fd, d, beta as u64, k as u64).expect("small enumeration"),
                    coeff,
                );
                if coeff.is_zero() && leading_zeros == k {
                    leading_zeros += 1;
                }
            }
            if beta >= 1 && d >= 1 && q_length(beta, q) < q {
                let bound = q.pow(d as u32) as i128
                    - q.pow(d as u32 - 1) as i128 * q_length(beta, q) as i128
                    - 1;
                c.ok(
                    format!(
                        "suite=approximation check=series-vanishing q={} d={} beta={}",
                        q, d, beta
                    ),
                    (leading_zeros as i128) >= bound,
                );
            }
        }
    }

    c.finish("approximation")
}

/// Run one named suite, or all of them in a fixed order for `"all"`.
pub fn run_suites(fd: &Field, suite: &str, params: &VerifyParams) -> Result<Vec<VerifyReport>> {
    let run_one = |name: &str| -> VerifyReport {
        match name {
            "algebra" => suite_algebra(fd, params),
            "carlitz" => suite_carlitz(fd, params),
            "powersums" => suite_powersums(fd, params),
            "specialpolys" => suite_specialpolys(fd, params),
            "approximation" => suite_approximation(fd, params),
            _ => unreachable!(),
        }
    };
    if suite == "all" {
        Ok(SUITE_NAMES.iter().map(|s| run_one(s)).collect())
    } else if SUITE_NAMES.contains(&suite) {
        Ok(vec![run_one(suite)])
    } else {
        Err(Error::UnknownSuite(suite.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> VerifyParams {
        VerifyParams {
            max_d: 2,
            max_k: 8,
            max_beta: 4,
            seed: 1,
        }
    }

    #[test]
    fn all_suites_pass_over_f3() {
        let fd = Field::make(3, 1, None).unwrap();
        for report in run_suites(&fd, "all", &params()).unwrap() {
            assert_eq!(report.status, "pass", "{:?}", report.failures.first());
            assert!(report.cases > 0);
        }
    }

    #[test]
    fn all_suites_pass_over_f4() {
        let fd = Field::make(2, 2, None).unwrap();
        for report in run_suites(&fd, "all", &params()).unwrap() {
            assert_eq!(report.status, "pass", "{:?}", report.failures.first());
        }
    }

    #[test]
    fn single_suite_and_unknown_suite() {
        let fd = Field::make(2, 1, None).unwrap();
        let reports = run_suites(&fd, "powersums", &params()).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].suite, "powersums");
        assert!(matches!(
            run_suites(&fd, "nonsense", &params()),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn reports_are_deterministic_for_a_fixed_seed() {
        let fd = Field::make(2, 1, None).unwrap();
        let a = run_suites(&fd, "all", &params()).unwrap();
        let b = run_suites(&fd, "all", &params()).unwrap();
        assert_eq!(a, b);
        let json_a = serde_json::to_string(&a).unwrap();
        let json_b = serde_json::to_string(&b).unwrap();
        assert_eq!(json_a, json_b);
    }
}
