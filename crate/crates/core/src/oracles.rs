//! Classical cross-checks that share no arithmetic with the Gram pipeline.
//!
//! Everything here works with machine integers and the invariant form on
//! the root lattice. Only the list of positive roots is borrowed from
//! [`RootSystem`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, Weight};

/// Invariant form on the root lattice and the data needed to pair weights
/// with roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerProductData {
    /// `form[i][j] = (alpha_i, alpha_j) = a[i][j] * lengths[j]`.
    pub form: Vec<Vec<i64>>,
    /// Half squared lengths `(alpha_j, alpha_j) / 2`, coprime per component.
    pub lengths: Vec<i64>,
    pub rho: Weight,
}

impl InnerProductData {
    pub fn new(cartan: &[Vec<i64>]) -> Self {
        let n = cartan.len();
        // lengths as fractions num/den, fixed one component at a time
        let mut frac: Vec<Option<(i64, i64)>> = vec![None; n];
        for start in 0..n {
            if frac[start].is_some() {
                continue;
            }
            frac[start] = Some((1, 1));
            let mut stack = vec![start];
            let mut component = vec![start];
            while let Some(i) = stack.pop() {
                let (ni, di) = frac[i].unwrap();
                for j in 0..n {
                    if cartan[i][j] == 0 || frac[j].is_some() {
                        continue;
                    }
                    // a_ij L_j = a_ji L_i
                    let (num, den) = (cartan[j][i] * ni, cartan[i][j] * di);
                    let g = num.gcd(&den);
                    let sign = if den < 0 { -1 } else { 1 };
                    frac[j] = Some((sign * num / g, sign * den / g));
                    stack.push(j);
                    component.push(j);
                }
            }
            let lcm = component.iter().fold(1i64, |acc, &k| acc.lcm(&frac[k].unwrap().1));
            let mut ints: Vec<i64> = component.iter().map(|&k| frac[k].unwrap().0 * lcm / frac[k].unwrap().1).collect();
            let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
            ints.iter_mut().for_each(|x| *x /= g);
            for (&k, &x) in component.iter().zip(&ints) {
                frac[k] = Some((x, 1));
            }
        }
        let lengths: Vec<i64> = frac.into_iter().map(|f| f.unwrap().0).collect();
        let form = (0..n).map(|i| (0..n).map(|j| cartan[i][j] * lengths[j]).collect()).collect();
        InnerProductData { form, lengths, rho: Weight(vec![1; n]) }
    }

    /// `(x, beta)` for a weight `x` and a root-lattice vector `beta`.
    pub fn weight_root(&self, x: &Weight, beta: &[i64]) -> i64 {
        x.0.iter().zip(beta).zip(&self.lengths).map(|((a, b), l)| a * b * l).sum()
    }

    pub fn root_root(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = a.len();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| a[i] * self.form[i][j] * b[j]).sum()
    }
}

/// Root coordinates of a weight, if it lies in the root lattice.
fn root_coords(cartan: &[Vec<i64>], w: &[i64]) -> Option<Vec<i64>> {
    // w_j = sum_i c_i a[i][j]: solve the transposed system by fraction-free
    // elimination over i128
    let n = cartan.len();
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|j| {
            let mut row: Vec<i128> = (0..n).map(|i| cartan[i][j] as i128).collect();
            row.push(w[j] as i128);
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| m[r][col] != 0)?;
        m.swap(col, p);
        for r in 0..n {
            if r != col && m[r][col] != 0 {
                let (a, b) = (m[col][col], m[r][col]);
                for c in 0..=n {
                    m[r][c] = m[r][c] * a - m[col][c] * b;
                }
                let g = m[r].iter().fold(0i128, |acc, x| acc.gcd(x));
                if g > 1 {
                    m[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
    }
    (0..n)
        .map(|i| {
            let (num, den) = (m[i][n], m[i][i]);
            (num % den == 0).then(|| (num / den) as i64)
        })
        .collect()
}

/// Dominant representative of the Weyl orbit of `mu`.
fn dominant_conjugate(cartan: &[Vec<i64>], mu: &[i64]) -> Vec<i64> {
    let mut x = mu.to_vec();
    while let Some(i) = x.iter().position(|&c| c < 0) {
        let k = x[i];
        for (j, xj) in x.iter_mut().enumerate() {
            *xj -= k * cartan[i][j];
        }
    }
    x
}

/// Freudenthal evaluation for one dominant highest weight, memoized on the
/// root coordinates of `lambda - mu`.
pub struct Freudenthal<'a> {
    cartan: &'a [Vec<i64>],
    lambda: Weight,
    ip: InnerProductData,
    roots: Vec<Vec<i64>>,
    lambda_rho: Weight,
    memo: HashMap<Vec<i64>, u64>,
}

impl<'a> Freudenthal<'a> {
    pub fn new(rs: &'a RootSystem, lambda: &Weight) -> Result<Self> {
        if lambda.rank() != rs.rank() {
            return Err(Error::DimensionMismatch { expected: rs.rank(), got: lambda.rank() });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let ip = InnerProductData::new(rs.cartan());
        let lambda_rho = lambda + &ip.rho;
        Ok(Freudenthal {
            cartan: rs.cartan(),
            lambda: lambda.clone(),
            roots: rs.positive_roots().iter().map(|r| r.0.clone()).collect(),
            ip,
            lambda_rho,
            memo: HashMap::new(),
        })
    }

    fn is_weight(&self, beta: &[i64]) -> bool {
        let mu: Vec<i64> = (0..beta.len())
            .map(|j| self.lambda.0[j] - (0..beta.len()).map(|i| beta[i] * self.cartan[i][j]).sum::<i64>())
            .collect();
        let top = dominant_conjugate(self.cartan, &mu);
        let diff: Vec<i64> = self.lambda.0.iter().zip(&top).map(|(a, b)| a - b).collect();
        matches!(root_coords(self.cartan, &diff), Some(c) if c.iter().all(|&x| x >= 0))
    }

    /// Multiplicity of `lambda - beta`, `beta` in root coordinates.
    pub fn at_depth(&mut self, beta: &[i64]) -> u64 {
        if beta.iter().any(|&b| b < 0) {
            return 0;
        }
        if beta.iter().all(|&b| b == 0) {
            return 1;
        }
        if let Some(&m) = self.memo.get(beta) {
            return m;
        }
        let m = if self.is_weight(beta) { self.recurse(beta) } else { 0 };
        self.memo.insert(beta.to_vec(), m);
        m
    }

    fn recurse(&mut self, beta: &[i64]) -> u64 {
        // ||lambda+rho||^2 - ||mu+rho||^2 = 2 (lambda+rho, beta) - (beta, beta)
        let lhs = 2 * self.ip.weight_root(&self.lambda_rho, beta) - self.ip.root_root(beta, beta);
        assert!(lhs > 0, "Freudenthal denominator vanished at depth {beta:?}");
        let mut rhs: i64 = 0;
        for a in self.roots.clone() {
            let mut k = 1;
            loop {
                let shifted: Vec<i64> = beta.iter().zip(&a).map(|(b, x)| b - k * x).collect();
                if shifted.iter().any(|&x| x < 0) {
                    break;
                }
                let mult = self.at_depth(&shifted) as i64;
                if mult != 0 {
                    // (mu + k alpha, alpha) with mu + k alpha = lambda - shifted
                    let pair = self.ip.weight_root(&self.lambda, &a) - self.ip.root_root(&shifted, &a);
                    rhs += pair * mult;
                }
                k += 1;
            }
        }
        let rhs = 2 * rhs;
        assert_eq!(rhs % lhs, 0, "Freudenthal quotient is not integral at depth {beta:?}");
        u64::try_from(rhs / lhs).expect("multiplicities are nonnegative")
    }

    pub fn multiplicity(&mut self, mu: &Weight) -> Result<u64> {
        if mu.rank() != self.lambda.rank() {
            return Err(Error::DimensionMismatch { expected: self.lambda.rank(), got: mu.rank() });
        }
        let diff = &self.lambda - mu;
        Ok(match root_coords(self.cartan, &diff.0) {
            Some(beta) => self.at_depth(&beta),
            None => 0,
        })
    }
}

/// Classical (characteristic zero, `q = 1`) multiplicity of `mu` in the
/// simple module of dominant highest weight `lambda`.
pub fn freudenthal_multiplicity(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<u64> {
    Freudenthal::new(rs, lambda)?.multiplicity(mu)
}

/// Weyl dimension formula.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let ip = InnerProductData::new(rs.cartan());
    let top = lambda + &ip.rho;
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for a in rs.positive_roots() {
        num *= ip.weight_root(&top, &a.0);
        den *= ip.weight_root(&ip.rho, &a.0);
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension is integral");
    Ok(q)
}

/// 1 iff `binom(m, n)` is nonzero mod `p`, read digitwise in base `p`.
pub fn lucas_predictor(p: u64, mut m: u64, mut n: u64) -> u8 {
    assert!(p >= 2);
    while n > 0 {
        if n % p > m % p {
            return 0;
        }
        n /= p;
        m /= p;
    }
    1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(xs: &[i64]) -> Weight {
        Weight(xs.to_vec())
    }

    #[test]
    fn root_lengths() {
        let b2 = RootSystem::named("B2").unwrap();
        let g2 = RootSystem::named("G2").unwrap();
        let a3 = RootSystem::named("A3").unwrap();
        let lb = InnerProductData::new(b2.cartan());
        let lg = InnerProductData::new(g2.cartan());
        for ip in [&lb, &lg, &InnerProductData::new(a3.cartan())] {
            let n = ip.form.len();
            assert!((0..n).all(|i| (0..n).all(|j| ip.form[i][j] == ip.form[j][i])));
        }
        assert_eq!(lb.lengths.iter().min(), Some(&1));
        assert_eq!(lb.lengths.iter().max(), Some(&2));
        assert_eq!(lg.lengths.iter().max(), Some(&3));
    }

    #[test]
    fn adjoint_a2() {
        let a2 = RootSystem::named("A2").unwrap();
        assert_eq!(freudenthal_multiplicity(&a2, &w(&[1, 1]), &w(&[0, 0])).unwrap(), 2);
        assert_eq!(freudenthal_multiplicity(&a2, &w(&[1, 1]), &w(&[1, 1])).unwrap(), 1);
        assert_eq!(freudenthal_multiplicity(&a2, &w(&[1, 1]), &w(&[-1, -1])).unwrap(), 1);
        assert_eq!(freudenthal_multiplicity(&a2, &w(&[1, 1]), &w(&[-2, -2])).unwrap(), 0);
        assert_eq!(freudenthal_multiplicity(&a2, &w(&[1, 1]), &w(&[1, 0])).unwrap(), 0);
        assert_eq!(weyl_dimension(&a2, &w(&[1, 1])).unwrap(), BigInt::from(8));
    }

    #[test]
    fn a1_strings() {
        let a1 = RootSystem::named("A1").unwrap();
        for m in 0..8 {
            for n in 0..=m {
                assert_eq!(freudenthal_multiplicity(&a1, &w(&[m]), &w(&[m - 2 * n])).unwrap(), 1);
            }
            assert_eq!(freudenthal_multiplicity(&a1, &w(&[m]), &w(&[-m - 2])).unwrap(), 0);
        }
    }

    #[test]
    fn sums_match_weyl_dimension() {
        for (name, lam, bound) in [("B2", [1, 1], 8), ("G2", [1, 0], 8), ("G2", [0, 1], 8), ("A2", [2, 1], 8)] {
            let rs = RootSystem::named(name).unwrap();
            let lam = w(&lam);
            let mut f = Freudenthal::new(&rs, &lam).unwrap();
            let mut total = 0;
            for a in 0..=bound {
                for b in 0..=bound {
                    total += f.at_depth(&[a, b]);
                }
            }
            assert_eq!(BigInt::from(total), weyl_dimension(&rs, &lam).unwrap(), "{name} {lam}");
        }
    }

    #[test]
    fn rejects_non_dominant() {
        let a2 = RootSystem::named("A2").unwrap();
        assert!(matches!(freudenthal_multiplicity(&a2, &w(&[-1, 1]), &w(&[0, 0])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn lucas() {
        assert_eq!(lucas_predictor(2, 2, 1), 0);
        assert_eq!(lucas_predictor(3, 4, 2), 0);
        assert_eq!(lucas_predictor(7, 0, 0), 1);
        assert_eq!(lucas_predictor(2, 3, 5), 0);
        for p in [2u64, 3, 5] {
            for m in 0..20u64 {
                let mut row = vec![1u64];
                for _ in 0..m {
                    let mut next = vec![1u64; row.len() + 1];
                    for k in 1..row.len() {
                        next[k] = (row[k - 1] + row[k]) % p;
                    }
                    row = next;
                }
                for n in 0..=m {
                    assert_eq!(lucas_predictor(p, m, n), u8::from(row[n as usize] % p != 0));
                }
            }
        }
    }
}
