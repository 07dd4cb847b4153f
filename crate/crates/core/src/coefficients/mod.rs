//! Coefficient fields `K` together with the image `q` of `v`.
//!
//! Every supported field is presented as `B[v]/(g)` for a prime field `B`
//! (`Q` or `F_p`) and a monic irreducible `g`, with `q` the class of `v`:
//!
//! | spec            | base  | modulus `g`                       |
//! |-----------------|-------|-----------------------------------|
//! | `Q@1`           | `Q`   | `v - 1`                           |
//! | `F<p>@1`        | `F_p` | `v - 1`                           |
//! | `Q@zeta<l>`     | `Q`   | `l`-th cyclotomic polynomial      |
//! | `F<p>@zeta<l>`  | `F_p` | one irreducible factor of it mod p|
//!
//! In every case `q^l = 1` (with `l = 1` for `q = 1`), which is what makes
//! specialization of Laurent polynomials cheap: exponents fold modulo `l`.

mod factor;
pub(crate) mod poly;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{cyclotomic, LaurentPoly};
use poly::{PrimeField, Rationals, Scalars};

/// Which element of `K` the variable `v` specializes to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QKind {
    One,
    /// A primitive `l`-th root of unity; the field is chosen automatically.
    PrimitiveRoot(u64),
    /// A primitive `l`-th root of unity in `F_p[v]/(g)` for a user-supplied
    /// irreducible factor `g` of the cyclotomic polynomial mod `p`
    /// (coefficients low to high).
    Explicit { l: u64, g: Vec<u64> },
}

/// Description of the pair `(K, q)`. Characteristic 0 means `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub characteristic: u64,
    pub q: QKind,
}

impl FieldSpec {
    pub fn rationals() -> Self {
        Self { characteristic: 0, q: QKind::One }
    }

    pub fn prime(p: u64) -> Self {
        Self { characteristic: p, q: QKind::One }
    }

    pub fn cyclotomic(l: u64) -> Self {
        Self { characteristic: 0, q: QKind::PrimitiveRoot(l) }
    }

    pub fn prime_root(p: u64, l: u64) -> Self {
        Self { characteristic: p, q: QKind::PrimitiveRoot(l) }
    }

    /// Multiplicative order of `q`.
    pub fn root_order(&self) -> u64 {
        match &self.q {
            QKind::One => 1,
            QKind::PrimitiveRoot(l) | QKind::Explicit { l, .. } => *l,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => f.write_str("Q")?,
            p => write!(f, "F{p}")?,
        }
        match &self.q {
            QKind::One => f.write_str("@1"),
            QKind::PrimitiveRoot(l) => write!(f, "@zeta{l}"),
            QKind::Explicit { l, g } => {
                let g: Vec<String> = g.iter().map(u64::to_string).collect();
                write!(f, "@zeta{l}[g={}]", g.join(","))
            }
        }
    }
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::FieldSpecSyntax { pos: self.pos, expected: expected.to_string() })
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.fail(&format!("`{token}`"))
        }
    }

    fn number(&mut self, what: &str) -> Result<u64> {
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.fail(what);
        }
        match rest[..len].parse() {
            Ok(n) => {
                self.pos += len;
                Ok(n)
            }
            Err(_) => self.fail(&format!("{what} that fits in 64 bits")),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Grammar: `Q@1`, `F<p>@1`, `Q@zeta<l>`, `F<p>@zeta<l>`,
    /// `F<p>@zeta<l>[g=<c0,c1,...>]`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = SpecParser { src: s, pos: 0 };
        let characteristic = if p.eat("Q") {
            0
        } else if p.eat("F") {
            p.number("prime characteristic")?
        } else {
            return p.fail("`Q` or `F`");
        };
        p.expect("@")?;
        let q = if p.eat("zeta") {
            let l = p.number("root of unity order")?;
            if characteristic != 0 && p.eat("[") {
                p.expect("g=")?;
                let mut g = vec![p.number("coefficient")?];
                while p.eat(",") {
                    g.push(p.number("coefficient")?);
                }
                p.expect("]")?;
                QKind::Explicit { l, g }
            } else {
                QKind::PrimitiveRoot(l)
            }
        } else if p.eat("1") {
            QKind::One
        } else {
            return p.fail("`1` or `zeta`");
        };
        if p.pos != s.len() {
            return p.fail("end of input");
        }
        Ok(FieldSpec { characteristic, q })
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Element of `K`, as a reduced polynomial in `q` (coefficients low to
/// high, no trailing zeros; zero is the empty vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(Vec<BigRational>),
    Modular(Vec<u64>),
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(c) => c.is_empty(),
            FieldElement::Modular(c) => c.is_empty(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, String, bool)> = match self {
            FieldElement::Rational(c) => c
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(e, x)| (e, x.abs().to_string(), x.is_negative()))
                .collect(),
            FieldElement::Modular(c) => c
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(e, x)| (e, x.to_string(), false))
                .collect(),
        };
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, mag, neg)) in terms.iter().rev().enumerate() {
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (*e, mag.as_str()) {
                (0, m) => f.write_str(m)?,
                (1, "1") => f.write_str("q")?,
                (1, m) => write!(f, "{m}*q")?,
                (e, "1") => write!(f, "q^{e}")?,
                (e, m) => write!(f, "{m}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
enum Base {
    Rational { modulus: Vec<BigRational> },
    Prime { p: PrimeField, modulus: Vec<u64> },
}

/// An immutable field handle `K = B[v]/(g)` with `q = v mod g`.
#[derive(Clone, Debug)]
pub struct Field {
    spec: FieldSpec,
    base: Base,
    /// `q^k` for `k < l`, where `l` is the order of `q`.
    q_powers: Vec<FieldElement>,
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let base = match (spec.characteristic, &spec.q) {
            (0, QKind::One) => Base::Rational { modulus: rational_poly(&[-1, 1]) },
            (0, QKind::PrimitiveRoot(l)) => {
                check_order(*l)?;
                let sigma = cyclotomic(*l);
                Base::Rational {
                    modulus: sigma.coeffs().iter().map(|c| Rationals.from_bigint(c)).collect(),
                }
            }
            (0, QKind::Explicit { .. }) => {
                return Err(Error::InvalidSpec("explicit moduli need a prime characteristic".into()))
            }
            (p, kind) => {
                if !factor::is_prime(p) || p >= 1 << 31 {
                    return Err(Error::InvalidSpec(format!(
                        "characteristic {p} is not a prime below 2^31"
                    )));
                }
                let fp = PrimeField(p);
                let modulus = match kind {
                    QKind::One => vec![p - 1, 1],
                    QKind::PrimitiveRoot(l) => {
                        check_coprime(p, *l)?;
                        let sigma = reduce_cyclotomic(fp, *l);
                        let d = factor::multiplicative_order(p, *l) as usize;
                        let seed = p.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ l;
                        factor::equal_degree_factors(p, &sigma, d, seed).swap_remove(0)
                    }
                    QKind::Explicit { l, g } => {
                        check_coprime(p, *l)?;
                        explicit_modulus(fp, *l, g)?
                    }
                };
                Base::Prime { p: fp, modulus }
            }
        };
        let mut field = Field { spec, base, q_powers: Vec::new() };
        let q = field.reduce_dense(&[BigInt::zero(), BigInt::one()]);
        let l = field.spec.root_order() as usize;
        let mut powers = Vec::with_capacity(l);
        let mut acc = field.one();
        for _ in 0..l {
            powers.push(acc.clone());
            acc = field.mul(&acc, &q);
        }
        debug_assert_eq!(acc, field.one(), "q must have order dividing l");
        field.q_powers = powers;
        Ok(field)
    }

    pub fn parse(spec: &str) -> Result<Self> {
        Self::new(spec.parse()?)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.characteristic
    }

    /// Degree of `K` over its prime field.
    pub fn degree(&self) -> usize {
        match &self.base {
            Base::Rational { modulus } => modulus.len() - 1,
            Base::Prime { modulus, .. } => modulus.len() - 1,
        }
    }

    /// Defining polynomial of `K` over the prime field, low to high;
    /// rational coefficients are rendered as strings.
    pub fn modulus_string(&self) -> String {
        let elem = match &self.base {
            Base::Rational { modulus } => FieldElement::Rational(modulus.clone()),
            Base::Prime { modulus, .. } => FieldElement::Modular(modulus.clone()),
        };
        elem.to_string().replace('q', "v")
    }

    pub fn zero(&self) -> FieldElement {
        match self.base {
            Base::Rational { .. } => FieldElement::Rational(Vec::new()),
            Base::Prime { .. } => FieldElement::Modular(Vec::new()),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(&BigInt::one())
    }

    pub fn from_int(&self, n: &BigInt) -> FieldElement {
        self.reduce_dense(std::slice::from_ref(n))
    }

    /// The image `q` of `v`.
    pub fn q(&self) -> FieldElement {
        self.q_powers.get(1).cloned().unwrap_or_else(|| self.one())
    }

    fn reduce_dense(&self, coeffs: &[BigInt]) -> FieldElement {
        match &self.base {
            Base::Rational { modulus } => {
                let c: Vec<_> = coeffs.iter().map(|x| Rationals.from_bigint(x)).collect();
                FieldElement::Rational(poly::rem(&Rationals, &poly::trim(&Rationals, c), modulus))
            }
            Base::Prime { p, modulus } => {
                let c: Vec<_> = coeffs.iter().map(|x| p.from_bigint(x)).collect();
                FieldElement::Modular(poly::rem(p, &poly::trim(p, c), modulus))
            }
        }
    }

    /// Base change `Z[v, v^-1] -> K`, `v -> q`.
    pub fn specialize(&self, x: &LaurentPoly) -> FieldElement {
        let l = self.q_powers.len() as i64;
        let mut folded = vec![BigInt::zero(); l as usize];
        for (k, c) in x.terms() {
            folded[k.rem_euclid(l) as usize] += c;
        }
        self.reduce_dense(&folded)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (&self.base, a, b) {
            (Base::Rational { .. }, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(poly::add(&Rationals, x, y))
            }
            (Base::Prime { p, .. }, FieldElement::Modular(x), FieldElement::Modular(y)) => {
                FieldElement::Modular(poly::add(p, x, y))
            }
            _ => panic!("field element does not belong to {}", self.spec),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (&self.base, a, b) {
            (Base::Rational { .. }, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(poly::sub(&Rationals, x, y))
            }
            (Base::Prime { p, .. }, FieldElement::Modular(x), FieldElement::Modular(y)) => {
                FieldElement::Modular(poly::sub(p, x, y))
            }
            _ => panic!("field element does not belong to {}", self.spec),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (&self.base, a, b) {
            (Base::Rational { modulus }, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(poly::mul_mod(&Rationals, x, y, modulus))
            }
            (Base::Prime { p, modulus }, FieldElement::Modular(x), FieldElement::Modular(y)) => {
                FieldElement::Modular(poly::mul_mod(p, x, y, modulus))
            }
            _ => panic!("field element does not belong to {}", self.spec),
        }
    }

    pub fn invert(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = match (&self.base, a) {
            (Base::Rational { modulus }, FieldElement::Rational(x)) => {
                poly::inv_mod(&Rationals, x, modulus).map(FieldElement::Rational)
            }
            (Base::Prime { p, modulus }, FieldElement::Modular(x)) => {
                poly::inv_mod(p, x, modulus).map(FieldElement::Modular)
            }
            _ => panic!("field element does not belong to {}", self.spec),
        };
        Ok(inv.expect("the modulus is irreducible, so nonzero classes are units"))
    }
}

fn rational_poly(c: &[i64]) -> Vec<BigRational> {
    c.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

fn check_order(l: u64) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidSpec("root of unity order must be positive".into()));
    }
    if l > 10_000 {
        return Err(Error::InvalidSpec(format!("root of unity order {l} is too large")));
    }
    Ok(())
}

fn check_coprime(p: u64, l: u64) -> Result<()> {
    check_order(l)?;
    if l.is_multiple_of(p) {
        return Err(Error::InvalidSpec(format!(
            "no primitive {l}-th root of unity exists in characteristic {p}"
        )));
    }
    Ok(())
}

fn reduce_cyclotomic(p: PrimeField, l: u64) -> Vec<u64> {
    let sigma = cyclotomic(l);
    poly::trim(&p, sigma.coeffs().iter().map(|c| p.from_bigint(c)).collect())
}

fn explicit_modulus(p: PrimeField, l: u64, g: &[u64]) -> Result<Vec<u64>> {
    let g = poly::trim(&p, g.iter().map(|c| c % p.0).collect());
    if g.len() < 2 {
        return Err(Error::InvalidSpec("explicit modulus must have positive degree".into()));
    }
    let g = poly::monic(&p, &g);
    let sigma = reduce_cyclotomic(p, l);
    if !poly::rem(&p, &sigma, &g).is_empty() {
        return Err(Error::InvalidSpec(format!(
            "explicit modulus does not divide the {l}-th cyclotomic polynomial mod {}",
            p.0
        )));
    }
    // Every irreducible factor has degree ord_l(p); a divisor of exactly
    // that degree is therefore irreducible.
    let d = factor::multiplicative_order(p.0, l) as usize;
    if g.len() - 1 != d {
        return Err(Error::InvalidSpec(format!(
            "explicit modulus of degree {} is reducible (irreducible factors have degree {d})",
            g.len() - 1
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{qint, LaurentPoly};

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn parse_and_render_grammar() {
        for s in ["Q@1", "F2@1", "Q@zeta5", "F3@zeta4", "F2@zeta7[g=1,1,0,1]"] {
            let spec: FieldSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!(
            "F7@zeta3".parse::<FieldSpec>().unwrap(),
            FieldSpec::prime_root(7, 3)
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = |s: &str| match s.parse::<FieldSpec>() {
            Err(Error::FieldSpecSyntax { pos, expected }) => (pos, expected),
            other => panic!("expected syntax error for {s}, got {other:?}"),
        };
        assert_eq!(err("R@1").0, 0);
        assert_eq!(err("F@1"), (1, "prime characteristic".into()));
        assert_eq!(err("Q1").0, 1);
        assert_eq!(err("Q@2").0, 2);
        assert_eq!(err("Q@zeta").0, 6);
        assert_eq!(err("Q@zeta3[g=1]").0, 7);
        assert_eq!(err("F2@zeta3[g=1,]").0, 13);
        assert_eq!(err("F2@1x"), (4, "end of input".into()));
    }

    #[test]
    fn construction_examples() {
        let q = Field::parse("Q@1").unwrap();
        assert_eq!(q.degree(), 1);
        assert_eq!(q.q(), q.one());

        let z5 = Field::parse("Q@zeta5").unwrap();
        assert_eq!(z5.degree(), 4);

        let f4 = Field::parse("F2@zeta3").unwrap();
        assert_eq!(f4.degree(), 2);
        assert_eq!(f4.modulus_string(), "v^2 + v + 1");

        assert!(matches!(Field::parse("F2@zeta4"), Err(Error::InvalidSpec(_))));
        assert!(matches!(Field::parse("F4@1"), Err(Error::InvalidSpec(_))));
        assert!(matches!(Field::parse("Q@zeta0"), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn explicit_modulus_validation() {
        let f = Field::parse("F2@zeta7[g=1,1,0,1]").unwrap();
        assert_eq!(f.degree(), 3);
        // v^2 + 1 = (v + 1)^2 does not divide sigma_7 mod 2
        assert!(matches!(Field::parse("F2@zeta7[g=1,0,1]"), Err(Error::InvalidSpec(_))));
        // sigma_7 itself divides sigma_7 but is reducible mod 2
        assert!(matches!(
            Field::parse("F2@zeta7[g=1,1,1,1,1,1,1]"),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn specialize_examples() {
        let q = Field::parse("Q@1").unwrap();
        for n in -10..=10 {
            assert_eq!(q.specialize(&qint(n, 1)), q.from_int(&int(n)));
        }
        let f2 = Field::parse("F2@1").unwrap();
        assert!(f2.specialize(&qint(4, 1)).is_zero());
        let z3 = Field::parse("Q@zeta3").unwrap();
        assert!(z3.specialize(&qint(3, 1)).is_zero());
        assert_eq!(z3.specialize(&LaurentPoly::monomial(1, -1)), z3.mul(&z3.q(), &z3.q()));
    }

    #[test]
    fn invert_examples() {
        let q = Field::parse("Q@1").unwrap();
        let half = q.invert(&q.from_int(&int(2))).unwrap();
        assert_eq!(half, FieldElement::Rational(vec![BigRational::new(int(1), int(2))]));
        let z3 = Field::parse("Q@zeta3").unwrap();
        assert_eq!(z3.invert(&z3.q()).unwrap(), z3.mul(&z3.q(), &z3.q()));
        for spec in ["Q@1", "F5@1", "Q@zeta7", "F3@zeta4"] {
            let f = Field::parse(spec).unwrap();
            assert_eq!(f.invert(&f.zero()), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn element_display() {
        let z3 = Field::parse("Q@zeta3").unwrap();
        assert_eq!(z3.q().to_string(), "q");
        assert_eq!(z3.mul(&z3.q(), &z3.q()).to_string(), "-q - 1");
        let half = Field::parse("Q@1").unwrap();
        let h = half.invert(&half.from_int(&int(-2))).unwrap();
        assert_eq!(h.to_string(), "-1/2");
    }
}
