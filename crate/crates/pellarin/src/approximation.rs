//! Carlitz approximation operators M_d and P_d, generating series for the
//! twisted power sums, Wagner coefficients b_d(chi_t), and the alpha-basis
//! decomposition against the e_i(z).

use serde::Serialize;

use crate::algebra::{chi_eval, APoly, Field, FracPoly, RationalForm, TPoly, ZPoly};
use crate::carlitz::{e_poly, e_shift, enumerate_monic, factorials, m_one};
use crate::error::{Error, Result};
use crate::powersums::{q_length, DigitVector};

/// An F_q-linear map A -> A[t], represented by the images of the theta-power
/// basis: images[i] = f(theta^i). Usable on polynomials of degree <= bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMapSpec {
    pub images: Vec<TPoly>,
}

impl LinearMapSpec {
    pub fn new(images: Vec<TPoly>) -> LinearMapSpec {
        assert!(!images.is_empty());
        LinearMapSpec { images }
    }

    /// Largest usable theta-degree.
    pub fn bound(&self) -> usize {
        self.images.len() - 1
    }

    /// chi_t: theta^i -> t^i.
    pub fn chi(fd: &Field, bound: usize) -> LinearMapSpec {
        LinearMapSpec::new((0..=bound).map(|i| TPoly::t_pow(i, fd)).collect())
    }

    /// The inclusion A -> A[t].
    pub fn identity(fd: &Field, bound: usize) -> LinearMapSpec {
        LinearMapSpec::new(
            (0..=bound)
                .map(|i| TPoly::from_apoly(APoly::theta_pow(i, fd)))
                .collect(),
        )
    }

    /// chi_t^{q^j}: theta^i -> t^{i q^j}, the j-th Frobenius twist of chi.
    pub fn chi_frobenius(fd: &Field, j: u32, bound: usize) -> LinearMapSpec {
        let qj = fd.q().pow(j) as usize;
        LinearMapSpec::new((0..=bound).map(|i| TPoly::t_pow(i * qj, fd)).collect())
    }

    /// A seeded random F_q-linear map, for property checks.
    pub fn random<R: rand::Rng>(
        fd: &Field,
        bound: usize,
        max_t_deg: usize,
        max_theta_deg: usize,
        rng: &mut R,
    ) -> LinearMapSpec {
        let images = (0..=bound)
            .map(|_| {
                let coeffs = (0..=max_t_deg)
                    .map(|_| {
                        APoly::new(
                            (0..=max_theta_deg)
                                .map(|_| fd.from_index(rng.gen_range(0..fd.q())))
                                .collect(),
                            fd,
                        )
                    })
                    .collect();
                TPoly::new(coeffs)
            })
            .collect();
        LinearMapSpec::new(images)
    }

    /// Apply by F_q-linearity: f(sum c_i theta^i) = sum c_i f(theta^i).
    pub fn apply(&self, a: &APoly, fd: &Field) -> Result<TPoly> {
        if a.0.len() > self.images.len() {
            return Err(Error::BoundTooSmall);
        }
        let mut acc = TPoly::zero();
        for (c, img) in a.0.iter().zip(&self.images) {
            acc = acc.add(&img.mul_fq(c, fd), fd);
        }
        Ok(acc)
    }
}

/// The Wagner coefficient b_d(chi_t) together with the interpolation value
/// M_d(chi_t)(0) it is scaled from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WagnerData {
    pub d: usize,
    pub b: TPoly,
    pub m0: TPoly,
}

/// M_d(f)(z) for an arbitrary function on A_+(d): the interpolation sum
/// over a in A_+(d) of f(a) * e_shift(d)/(z - a), each quotient obtained by
/// synthetic division of the shared product.
pub fn carlitz_approx_fn(
    fd: &Field,
    d: usize,
    f: &mut dyn FnMut(&APoly) -> TPoly,
) -> Result<ZPoly> {
    let es = e_shift(fd, d)?;
    let mut acc = ZPoly::zero();
    for a in enumerate_monic(fd, d)? {
        let quotient = es.syn_div_linear(&TPoly::from_apoly(a.clone()), fd);
        acc = acc.add(&quotient.mul_tpoly(&f(&a), fd), fd);
    }
    Ok(acc)
}

/// M_d(f)(z) for an F_q-linear map.
pub fn carlitz_approx(fd: &Field, d: usize, f: &LinearMapSpec) -> Result<ZPoly> {
    if f.bound() < d {
        return Err(Error::BoundTooSmall);
    }
    let mut err = None;
    let out = carlitz_approx_fn(fd, d, &mut |a| match f.apply(a, fd) {
        Ok(v) => v,
        Err(e) => {
            err = Some(e);
            TPoly::zero()
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// M_d of the power map a -> chi_t(a)^beta (not F_q-linear in general).
pub fn carlitz_approx_power(fd: &Field, d: usize, beta: u64) -> Result<ZPoly> {
    carlitz_approx_fn(fd, d, &mut |a| chi_eval(a, fd).pow(beta, fd))
}

/// Both sides of the digit principle for M_d(chi_t^beta), cross-multiplied
/// so no negative power of M_d(1) appears: returns
/// (M_d(chi^beta) * M_d(1)^{l(beta)-1}, prod_i M_d(chi^{q^i})^{beta_i})
/// where beta = sum beta_i q^i in base q. The two are equal when l(beta) < q.
pub fn m_d_power_product(fd: &Field, d: usize, beta: u64) -> Result<(ZPoly, ZPoly)> {
    assert!(beta >= 1);
    let q = fd.q();
    let l = q_length(beta, q);
    let lhs = carlitz_approx_power(fd, d, beta)?;
    let mut prod = ZPoly::one(fd);
    for (i, &bi) in DigitVector::from_value(beta, q).digits.iter().enumerate() {
        if bi > 0 {
            let mi = carlitz_approx(fd, d, &LinearMapSpec::chi_frobenius(fd, i as u32, d))?;
            prod = prod.mul(&mi.pow(bi, fd), fd);
        }
    }
    let scale = TPoly::from_apoly(m_one(fd, d));
    Ok((lhs.mul_tpoly(&scale.pow(l - 1, fd), fd), prod))
}

/// P_d(f)(z) = M_d(f)(z) - M_d(f)(0): drops the constant so the result is
/// F_q-linear for F_q-linear f and interpolates M_d(1) f on all of A(d).
pub fn p_approx(fd: &Field, d: usize, f: &LinearMapSpec) -> Result<ZPoly> {
    let m = carlitz_approx(fd, d, f)?;
    Ok(m.sub(&ZPoly::constant(m.constant_term()), fd))
}

/// b_d(chi_t) = (-1)^d (L_d / D_d) M_d(chi_t)(0), via exact division. A
/// NonExactDivision here would falsify the scaling identity and is fatal.
pub fn wagner_coeff(fd: &Field, d: usize) -> Result<WagnerData> {
    let m0 = carlitz_approx(fd, d, &LinearMapSpec::chi(fd, d))?.constant_term();
    let basics = factorials(fd, d);
    let scaled = m0.mul_apoly(&basics.ld, fd);
    let signed = if d % 2 == 1 { scaled.neg(fd) } else { scaled };
    let b = signed.exact_div_apoly(&basics.dd, fd)?;
    Ok(WagnerData { d, b, m0 })
}

/// The closed product: b_d(chi_t) = prod over 0 <= l < d of (t - theta^{q^l}).
pub fn wagner_product(fd: &Field, d: usize) -> TPoly {
    let q = fd.q();
    let mut acc = TPoly::one(fd);
    for l in 0..d {
        let factor = TPoly::new(vec![
            APoly::theta_pow(q.pow(l as u32) as usize, fd).neg(fd),
            APoly::one(fd),
        ]);
        acc = acc.mul(&factor, fd);
    }
    acc
}

/// The coefficients alpha_{d,i}(f), 0 <= i < d, defined by
/// (-1)^d (L_d / D_d) P_d(f)(z) = sum alpha_{d,i}(f) e_i(z), found by
/// descending-degree elimination against the monic e_i of degree q^i.
pub fn alpha_decompose(fd: &Field, d: usize, f: &LinearMapSpec) -> Result<Vec<RationalForm>> {
    assert!(d >= 1);
    let pd = p_approx(fd, d, f)?;
    if !pd.is_fq_linear(fd) {
        return Err(Error::NotLinear);
    }
    let basics = factorials(fd, d);
    let mut scale = RationalForm::new(TPoly::from_apoly(basics.ld), basics.dd, fd)?;
    if d % 2 == 1 {
        scale = scale.neg(fd);
    }
    let mut rem = FracPoly::from_zpoly_scaled(&pd, &scale, fd);
    let mut alphas = vec![RationalForm::zero(fd); d];
    for i in (0..d).rev() {
        let qi = fd.q().pow(i as u32) as usize;
        let alpha = rem.coeff(qi, fd);
        if !alpha.is_zero() {
            let ei = e_poly(fd, i)?;
            let scaled_ei = FracPoly::from_zpoly_scaled(&ei, &alpha, fd);
            rem = rem.sub(&scaled_ei, fd);
        }
        alphas[i] = alpha;
    }
    if !rem.is_zero() {
        return Err(Error::NotLinear);
    }
    Ok(alphas)
}

/// Expand M_d(chi_t^beta)(z) / e_shift(d)(z) as a power series in 1/z; the
/// coefficient of 1/z^{k+1} is S_d(chi_t^beta, k). Returns the first `n`
/// coefficients.
pub fn gen_series(fd: &Field, d: usize, beta: u64, n: usize) -> Result<Vec<TPoly>> {
    let numerator = carlitz_approx_power(fd, d, beta)?;
    let denominator = e_shift(fd, d)?;
    let big_q = denominator.degree().expect("monic product");
    // reverse both: num z^{Q-1-j} pairs with w^j, den z^{Q-j} with w^j
    let num_rev: Vec<TPoly> = (0..big_q).map(|j| numerator.coeff(big_q - 1 - j)).collect();
    let den_rev: Vec<TPoly> = (0..=big_q).map(|j| denominator.coeff(big_q - j)).collect();
    debug_assert_eq!(den_rev[0], TPoly::one(fd));
    // series long division against a unit constant term
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut c = num_rev.get(k).cloned().unwrap_or_else(TPoly::zero);
        for j in 1..=k.min(big_q) {
            let prev: &TPoly = &out[k - j];
            c = c.sub(&den_rev[j].mul(prev, fd), fd);
        }
        out.push(c);
    }
    Ok(out)
}

/// The degree-d partial sum of Pellarin's L-series at 1:
/// sum over a in A_+(d) of chi_t(a)/a, as an exact reduced fraction over the
/// common denominator D_d.
pub fn pellarin_degree_sum(fd: &Field, d: usize) -> Result<RationalForm> {
    let basics = factorials(fd, d);
    let mut num = TPoly::zero();
    for a in enumerate_monic(fd, d)? {
        let cofactor = basics.dd.exact_div(&a, fd)?;
        num = num.add(&chi_eval(&a, fd).mul_apoly(&cofactor, fd), fd);
    }
    RationalForm::new(num, basics.dd, fd)
}

/// The truncated Wagner series sum over j < d of (b_j/D_j) e_j(a); for
/// a in A(d) this reduces to the polynomial value chi_t(a).
pub fn wagner_truncated_eval(fd: &Field, d: usize, a: &APoly) -> Result<RationalForm> {
    if a.0.len() > d {
        return Err(Error::DegreeTooHigh);
    }
    let mut acc = RationalForm::zero(fd);
    for j in 0..d {
        let bj = wagner_coeff(fd, j)?.b;
        let ej_at_a = e_poly(fd, j)?.eval_apoly(a, fd);
        let term = RationalForm::new(bj.mul(&ej_at_a, fd), factorials(fd, j).dd, fd)?;
        acc = acc.add(&term, fd);
    }
    Ok(acc)
}
