//! Exact arithmetic in `Z[v, v^-1]`.
//!
//! [`LaurentPoly`] is the universal coefficient type of the crate: quantum
//! integers, factorials, Gaussian binomials and every Gram matrix entry live
//! here. [`IntPoly`] holds ordinary integer polynomials (cyclotomic
//! polynomials and their residues).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Element of `Z[v, v^-1]`, stored as a sparse map exponent -> coefficient.
///
/// No stored coefficient is zero, so structural equality is ring equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// The formal variable `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Substitutes `v -> v^k` for `k >= 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Evaluation at `v = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Converts to an [`IntPoly`] when no exponent is negative.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let deg = self.max_exp().unwrap_or(-1);
        let mut coeffs = vec![BigInt::zero(); (deg + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[*e as usize] = c.clone();
        }
        Some(IntPoly::new(coeffs))
    }

    /// Dense coefficients after shifting the lowest exponent to 0.
    fn dense(&self) -> (i64, Vec<BigInt>) {
        let lo = self.min_exp().unwrap_or(0);
        let hi = self.max_exp().unwrap_or(-1);
        let mut out = vec![BigInt::zero(); (hi - lo + 1).max(0) as usize];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        (lo, out)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Renders terms in decreasing exponent order, e.g. `v^2 + 1 + v^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(e, c)| (*e, c)))
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let negative = c.is_negative();
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        let mag = c.abs();
        match (e, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (_, true) => write_var(f, e)?,
            (_, false) => {
                write!(f, "{mag}*")?;
                write_var(f, e)?;
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn write_var(f: &mut fmt::Formatter<'_>, e: i64) -> fmt::Result {
    if e == 1 {
        f.write_str("v")
    } else {
        write!(f, "v^{e}")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the rendering produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Invalid(format!("cannot parse Laurent polynomial `{s}`: {msg}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let bytes = compact.as_bytes();
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            } else if i != 0 {
                return Err(bad("expected `+` or `-` between terms"));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff = if i > start {
                compact[start..i].parse::<BigInt>().map_err(|_| bad("bad coefficient"))?
            } else {
                BigInt::one()
            };
            let mut exp = 0i64;
            let has_star = i < bytes.len() && bytes[i] == b'*';
            if has_star {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b'v' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let es = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = compact[es..i].parse().map_err(|_| bad("bad exponent"))?;
                }
            } else if has_star || i == start {
                return Err(bad("expected `v`"));
            }
            out.add_term(exp, sign * coeff);
        }
        Ok(out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // Dense accumulation is much cheaper than repeated map inserts.
        let (lo_a, a) = self.dense();
        let (lo_b, b) = rhs.dense();
        let mut acc = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    acc[i + j] += x * y;
                }
            }
        }
        let lo = lo_a + lo_b;
        LaurentPoly {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (lo + k as i64, c))
                .collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<&IntPoly> for LaurentPoly {
    fn from(p: &IntPoly) -> Self {
        LaurentPoly::from_terms(p.coeffs.iter().enumerate().map(|(e, c)| (e as i64, c.clone())))
    }
}

/// Polynomial in `Z[v]` with nonnegative exponents, coefficients low to high.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// `v^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += BigInt::one();
        Self::new(coeffs)
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n)
            .map(|i| {
                self.coeffs.get(i).cloned().unwrap_or_default()
                    + rhs.coeffs.get(i).cloned().unwrap_or_default()
            })
            .collect();
        IntPoly::new(out)
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, modulus: &IntPoly) -> IntPoly {
        assert!(modulus.is_monic(), "modulus must be monic");
        let m = modulus.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        while r.len() > m {
            let lead = r.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = r.len() - m;
            for (k, c) in modulus.coeffs[..m].iter().enumerate() {
                r[shift + k] -= &lead * c;
            }
        }
        IntPoly::new(r)
    }

    /// Exact quotient by a polynomial whose leading coefficient divides every
    /// step; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = poly_divmod(&self.coeffs, &divisor.coeffs)?;
        r.iter().all(Zero::is_zero).then(|| IntPoly::new(q))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as i64, c)),
        )
    }
}

/// Dense long division over `Z`. Returns `None` as soon as a leading
/// coefficient fails to divide, which already rules out exactness.
fn poly_divmod(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let lead = b.last().expect("divisor must be nonzero");
    let mut r = a.to_vec();
    while r.last().is_some_and(Zero::is_zero) {
        r.pop();
    }
    if r.len() < b.len() {
        return Some((Vec::new(), r));
    }
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (quot, rem) = top.div_rem(lead);
        if !rem.is_zero() {
            return None;
        }
        for (j, c) in b.iter().enumerate() {
            if !c.is_zero() {
                r[k + j] -= &quot * c;
            }
        }
        q[k] = quot;
    }
    r.truncate(b.len() - 1);
    Some((q, r))
}

/// Quantum integer `[n]` in the variable `v^d`:
/// `v^{d(n-1)} + v^{d(n-3)} + ... + v^{-d(n-1)}`, negated for `n < 0`.
pub fn qint(n: i64, d: u32) -> LaurentPoly {
    assert!(d >= 1, "symmetrizer must be positive");
    let d = i64::from(d);
    let m = n.abs();
    let sign = if n < 0 { -1 } else { 1 };
    LaurentPoly::from_terms((0..m).map(|k| (d * (m - 1 - 2 * k), sign)))
}

/// `[1][2]...[n]` in the variable `v^d`.
pub fn qfact(n: u32, d: u32) -> LaurentPoly {
    (1..=i64::from(n)).fold(LaurentPoly::one(), |acc, k| &acc * &qint(k, d))
}

/// Gaussian binomial `[n][n-1]...[n-r+1] / [r]!` in the variable `v^d`.
pub fn qbinom(n: i64, r: u32, d: u32) -> LaurentPoly {
    let num = (0..i64::from(r)).fold(LaurentPoly::one(), |acc, k| &acc * &qint(n - k, d));
    exact_div(&num, &qfact(r, d)).expect("Gaussian binomials are Laurent polynomials")
}

/// Exact quotient `a / b` in `Z[v, v^-1]`.
pub fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if a.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    if b.len() == 1 {
        let (e, c) = b.terms().next().unwrap();
        let mut terms = BTreeMap::new();
        for (ea, ca) in a.terms() {
            let (q, r) = ca.div_rem(c);
            if !r.is_zero() {
                return Err(non_exact(a, b));
            }
            terms.insert(ea - e, q);
        }
        return Ok(LaurentPoly { terms });
    }
    // Both shifted to polynomials with nonzero constant term; then any
    // Laurent quotient is itself a polynomial.
    let (lo_a, da) = a.dense();
    let (lo_b, db) = b.dense();
    match poly_divmod(&da, &db) {
        Some((q, r)) if r.iter().all(Zero::is_zero) => {
            let lo = lo_a - lo_b;
            Ok(LaurentPoly {
                terms: q
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (lo + k as i64, c))
                    .collect(),
            })
        }
        _ => Err(non_exact(a, b)),
    }
}

fn non_exact(a: &LaurentPoly, b: &LaurentPoly) -> Error {
    Error::NonExactDivision {
        dividend: a.to_string(),
        divisor: b.to_string(),
    }
}

fn cyclotomic_memo() -> &'static RwLock<HashMap<u64, Arc<IntPoly>>> {
    static MEMO: OnceLock<RwLock<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The `l`-th cyclotomic polynomial, memoized process-wide.
pub fn cyclotomic(l: u64) -> IntPoly {
    assert!(l >= 1, "cyclotomic index must be positive");
    if let Some(p) = cyclotomic_memo().read().unwrap().get(&l) {
        return (**p).clone();
    }
    let mut divisor = IntPoly::from_i64s(&[1]);
    for d in (1..l).filter(|d| l.is_multiple_of(*d)) {
        divisor = divisor.mul(&cyclotomic(d));
    }
    let poly = IntPoly::x_pow_minus_one(l as usize)
        .div_exact(&divisor)
        .expect("v^l - 1 is the product of cyclotomic polynomials of divisors of l");
    // Racing writers compute the same value; first insert wins.
    let mut memo = cyclotomic_memo().write().unwrap();
    (**memo.entry(l).or_insert_with(|| Arc::new(poly))).clone()
}

/// Euler's totient, equal to the degree of `cyclotomic(l)`.
pub fn euler_phi(l: u64) -> u64 {
    let mut n = l;
    let mut out = l;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Canonical representative of `p` in `Z[v]/(cyclotomic(l))`, of degree
/// below `euler_phi(l)`. Uses `v^-1 = v^(l-1)` modulo the cyclotomic
/// polynomial.
pub fn mod_cyclotomic(p: &LaurentPoly, l: u64) -> IntPoly {
    assert!(l >= 1, "cyclotomic index must be positive");
    let l_i = l as i64;
    let mut folded = vec![BigInt::zero(); l as usize];
    for (e, c) in p.terms() {
        folded[e.rem_euclid(l_i) as usize] += c;
    }
    IntPoly::new(folded).rem_monic(&cyclotomic(l))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn qint_values() {
        assert!(qint(0, 1).is_zero());
        assert_eq!(qint(3, 1), lp("v^2 + 1 + v^-2"));
        assert_eq!(qint(-2, 1), lp("-v - v^-1"));
        assert_eq!(qint(2, 3), lp("v^3 + v^-3"));
        for n in -12..=12 {
            assert_eq!(qint(-n, 2), -qint(n, 2));
        }
    }

    #[test]
    fn qint_matches_quotient_definition() {
        let denom = &LaurentPoly::v() - &LaurentPoly::monomial(1, -1);
        for n in -9..=9 {
            let num = &LaurentPoly::monomial(1, n) - &LaurentPoly::monomial(1, -n);
            assert_eq!(exact_div(&num, &denom).unwrap(), qint(n, 1), "n = {n}");
        }
    }

    #[test]
    fn qfact_values() {
        assert!(qfact(0, 1).is_one());
        assert_eq!(qfact(2, 1), lp("v + v^-1"));
        assert_eq!(qfact(3, 1), &lp("v + v^-1") * &lp("v^2 + 1 + v^-2"));
    }

    #[test]
    fn qbinom_values() {
        assert!(qbinom(5, 0, 1).is_one());
        assert_eq!(qbinom(2, 1, 1), lp("v + v^-1"));
        assert_eq!(qbinom(4, 2, 1), lp("v^4 + v^2 + 2 + v^-2 + v^-4"));
        assert!(qbinom(-1, 2, 1).is_one());
        // r > n >= 0 gives zero
        assert!(qbinom(2, 3, 1).is_zero());
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic(3), IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(cyclotomic(6), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64s(&[1, 0, -1, 0, 1]));
        // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic(105).coeffs().iter().any(|c| c == &BigInt::from(-2)));
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        for l in 1..=40 {
            assert_eq!(cyclotomic(l).degree(), Some(euler_phi(l) as usize), "l = {l}");
        }
    }

    #[test]
    fn exact_div_cases() {
        assert_eq!(exact_div(&lp("v^2 - v^-2"), &lp("v - v^-1")).unwrap(), lp("v + v^-1"));
        let x = lp("3*v^5 - v + 7 + 2*v^-4");
        assert_eq!(exact_div(&x, &LaurentPoly::one()).unwrap(), x);
        assert!(matches!(
            exact_div(&lp("v + 1"), &lp("v - 1")),
            Err(Error::NonExactDivision { .. })
        ));
        assert!(matches!(exact_div(&x, &LaurentPoly::zero()), Err(Error::DivisionByZero)));
        assert!(matches!(
            exact_div(&lp("3*v"), &lp("2")),
            Err(Error::NonExactDivision { .. })
        ));
    }

    #[test]
    fn mod_cyclotomic_cases() {
        assert_eq!(mod_cyclotomic(&LaurentPoly::monomial(1, 3), 3), IntPoly::from_i64s(&[1]));
        assert!(mod_cyclotomic(&qint(4, 1), 4).is_zero());
        assert_eq!(
            mod_cyclotomic(&LaurentPoly::monomial(1, -1), 5),
            IntPoly::from_i64s(&[-1, -1, -1, -1])
        );
        // [3] - [1] = v^2 + v^-2 is 2 modulo v + 1
        assert_eq!(mod_cyclotomic(&(&qint(3, 1) - &qint(1, 1)), 2), IntPoly::from_i64s(&[2]));
    }

    #[test]
    fn display_format() {
        assert_eq!(qint(3, 1).to_string(), "v^2 + 1 + v^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp("-3*v^2 + v - 1 - 2*v^-1").to_string(), "-3*v^2 + v - 1 - 2*v^-1");
        assert_eq!(cyclotomic(6).to_string(), "v^2 - v + 1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("v^".parse::<LaurentPoly>().is_err());
        assert!("2*".parse::<LaurentPoly>().is_err());
        assert!("x".parse::<LaurentPoly>().is_err());
    }
}
