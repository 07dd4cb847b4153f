//! Splitting cyclotomic polynomials over prime fields.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::poly::{self, PrimeField, Scalars};

/// Multiplicative order of `p` modulo `l` (with `ord_1(p) = 1`).
pub(crate) fn multiplicative_order(p: u64, l: u64) -> u64 {
    if l == 1 {
        return 1;
    }
    let base = p % l;
    let mut x = base;
    let mut k = 1;
    while x != 1 {
        x = x * base % l;
        k += 1;
        assert!(k <= l, "p is not a unit modulo l");
    }
    k
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a monic squarefree `f` over `F_p` whose irreducible factors all
/// have degree `d` (Cantor-Zassenhaus). Factors are monic and sorted.
pub(crate) fn equal_degree_factors(p: u64, f: &[u64], d: usize, seed: u64) -> Vec<Vec<u64>> {
    let field = PrimeField(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut stack = vec![poly::monic(&field, f)];
    while let Some(g) = stack.pop() {
        let n = g.len() - 1;
        if n == d {
            out.push(g);
            continue;
        }
        assert!(n % d == 0 && n > d, "degree {n} is not a multiple of {d}");
        loop {
            let a: Vec<u64> = poly::trim(&field, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.len() < 2 {
                continue;
            }
            let probe = splitting_probe(&field, &a, &g, d);
            let h = poly::gcd(&field, &probe, &g);
            let k = h.len().saturating_sub(1);
            if k > 0 && k < n {
                let (q, r) = poly::divrem(&field, &g, &h);
                debug_assert!(r.is_empty());
                stack.push(h);
                stack.push(poly::monic(&field, &q));
                break;
            }
        }
    }
    out.sort();
    out
}

/// An element whose gcd with `g` is a proper factor with probability about
/// one half.
fn splitting_probe(field: &PrimeField, a: &[u64], g: &[u64], d: usize) -> Vec<u64> {
    let p = field.0;
    if p == 2 {
        // absolute trace a + a^2 + ... + a^(2^(d-1)) into F_2
        let mut term = poly::rem(field, a, g);
        let mut acc = term.clone();
        for _ in 1..d {
            term = poly::mul_mod(field, &term, &term, g);
            acc = poly::add(field, &acc, &term);
        }
        acc
    } else {
        let e = (BigInt::from(p).pow(d as u32) - 1u32) / 2u32;
        let b = poly::pow_mod_poly(field, a, &e, g);
        poly::sub(field, &b, &[field.one()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(2, 3), 2);
        assert_eq!(multiplicative_order(3, 4), 2);
        assert_eq!(multiplicative_order(2, 7), 3);
        assert_eq!(multiplicative_order(5, 1), 1);
        assert_eq!(multiplicative_order(11, 5), 1);
    }

    #[test]
    fn splits_seventh_cyclotomic_mod_two() {
        // v^6 + ... + 1 = (v^3 + v + 1)(v^3 + v^2 + 1) over F_2
        let f = vec![1; 7];
        let factors = equal_degree_factors(2, &f, 3, 1);
        assert_eq!(factors, vec![vec![1, 0, 1, 1], vec![1, 1, 0, 1]]);
    }

    #[test]
    fn splits_into_linear_factors_mod_eleven() {
        // 11 = 1 mod 5, so the fifth cyclotomic polynomial splits completely
        let f = vec![1; 5];
        let factors = equal_degree_factors(11, &f, 1, 9);
        assert_eq!(factors.len(), 4);
        let field = PrimeField(11);
        let prod = factors.iter().fold(vec![1], |acc, g| poly::mul(&field, &acc, g));
        assert_eq!(prod, f);
    }
}
