/// C(n, r) mod p by Lucas: the product of the base-p digit binomials.
/// Returns 0 when r > n.
pub fn binom_mod_p(mut n: u64, mut r: u64, p: u64) -> u64 {
    if r > n {
        return 0;
    }
    let mut acc = 1u64;
    while r > 0 || n > 0 {
        let nd = n % p;
        let rd = r % p;
        if rd > nd {
            return 0;
        }
        acc = acc * small_binom(nd, rd) % p;
        n /= p;
        r /= p;
    }
    acc
}

/// C(n, r) for n, r < p, small enough for u128 accumulation.
fn small_binom(n: u64, r: u64) -> u64 {
    let r = r.min(n - r);
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..r {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(binom_mod_p(5, 2, 3), 1); // 10 mod 3
        assert_eq!(binom_mod_p(4, 2, 2), 0); // 6 mod 2
        assert_eq!(binom_mod_p(17, 0, 5), 1);
        assert_eq!(binom_mod_p(3, 7, 5), 0);
    }

    #[test]
    fn matches_bigint_factorials() {
        use num_bigint::BigUint;
        let fact = |n: u64| -> BigUint {
            (1..=n).map(BigUint::from).product::<BigUint>().max(BigUint::from(1u32))
        };
        for p in [2u64, 3, 5, 7] {
            for n in 0..=64u64 {
                for r in 0..=n {
                    let exact = fact(n) / (fact(r) * fact(n - r));
                    let expect = (exact % BigUint::from(p)).to_u64_digits();
                    let expect = expect.first().copied().unwrap_or(0);
                    assert_eq!(binom_mod_p(n, r, p), expect, "n={n} r={r} p={p}");
                }
            }
        }
    }
}
