//! Simple root paths and the operators `epsilon_alpha`, `phi_alpha` on the
//! free space they span.
//!
//! This module is deliberately direct: operators act term by term on explicit
//! vectors. It serves as the reference model that the memoized Gram
//! recursion in [`crate::gram`] is checked against.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{exact_div, qfact, qint, LaurentPoly};
use crate::rootsystem::{RootSystem, RootVector, Weight};

/// Finite sequence of simple-root indices, ordered lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<u8>);

impl Path {
    pub fn empty() -> Self {
        Path(Vec::new())
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Path(indices.iter().map(|&i| u8::try_from(i).expect("root index fits in u8")).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    /// Multiset of entries as an element of the root lattice.
    pub fn height(&self, rank: usize) -> RootVector {
        let mut c = vec![0; rank];
        for &e in &self.0 {
            c[e as usize] += 1;
        }
        RootVector(c)
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// Deletes the entry at position `i` (0-based).
    pub fn delete(&self, i: usize) -> Path {
        let mut v = self.0.clone();
        v.remove(i);
        Path(v)
    }

    /// Prepends `alpha` `n` times.
    pub fn prepend(&self, alpha: u8, n: usize) -> Path {
        let mut v = vec![alpha; n];
        v.extend_from_slice(&self.0);
        Path(v)
    }
}

/// Renders as `[0,1,0]`.
impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// All distinct paths with content `nu`, in increasing lexicographic order.
pub fn enumerate_paths(nu: &RootVector) -> Vec<Path> {
    assert!(nu.is_nonnegative(), "path heights are nonnegative");
    fn go(remaining: &mut [i64], prefix: &mut Vec<u8>, out: &mut Vec<Path>) {
        if remaining.iter().all(|&c| c == 0) {
            out.push(Path(prefix.clone()));
            return;
        }
        for i in 0..remaining.len() {
            if remaining[i] > 0 {
                remaining[i] -= 1;
                prefix.push(i as u8);
                go(remaining, prefix, out);
                prefix.pop();
                remaining[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut nu.0.clone(), &mut Vec::new(), &mut out);
    out
}

/// Number of paths of height `nu` (a multinomial coefficient), saturating at
/// `u128::MAX`. Heights with a negative coordinate have no paths.
pub fn path_count(nu: &RootVector) -> u128 {
    if nu.0.iter().any(|&c| c < 0) {
        return 0;
    }
    let mut total = 0u128;
    let mut count = 1u128;
    for &c in &nu.0 {
        for k in 1..=c as u128 {
            total += 1;
            match count.checked_mul(total) {
                Some(x) => count = x / k,
                None => return u128::MAX,
            }
        }
    }
    count
}

/// Product of `[s]!_alpha` over the maximal runs `alpha^s` of the path.
pub fn path_factorial(rs: &RootSystem, path: &Path) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    let entries = path.entries();
    let mut i = 0;
    while i < entries.len() {
        let alpha = entries[i];
        let run = entries[i..].iter().take_while(|&&e| e == alpha).count();
        if run > 1 {
            out = &out * &qfact(run as u32, rs.symmetrizer(alpha as usize));
        }
        i += run;
    }
    out
}

/// Finite combination of paths with Laurent-polynomial numerators over a
/// common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathVector {
    terms: BTreeMap<Path, LaurentPoly>,
    denom: LaurentPoly,
}

impl Default for PathVector {
    fn default() -> Self {
        Self::zero()
    }
}

impl PathVector {
    pub fn zero() -> Self {
        PathVector { terms: BTreeMap::new(), denom: LaurentPoly::one() }
    }

    pub fn basis(path: Path) -> Self {
        Self::from_terms([(path, LaurentPoly::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Path, LaurentPoly)>) -> Self {
        let mut out = Self::zero();
        for (p, c) in terms {
            out.add_term(p, &c);
        }
        out
    }

    fn add_term(&mut self, p: Path, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denom
    }

    /// Numerator terms; the represented vector is `sum(c * path) / denominator`.
    pub fn numerators(&self) -> impl Iterator<Item = (&Path, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Coefficient of `path` as `(numerator, denominator)`.
    pub fn coefficient(&self, path: &Path) -> (LaurentPoly, LaurentPoly) {
        (self.terms.get(path).cloned().unwrap_or_default(), self.denom.clone())
    }

    /// Clears the denominator when it divides every numerator.
    fn normalize(mut self) -> Self {
        if self.terms.is_empty() {
            self.denom = LaurentPoly::one();
            return self;
        }
        if self.denom.is_one() {
            return self;
        }
        let divided: Result<BTreeMap<Path, LaurentPoly>> = self
            .terms
            .iter()
            .map(|(p, c)| exact_div(c, &self.denom).map(|q| (p.clone(), q)))
            .collect();
        if let Ok(terms) = divided {
            self.terms = terms;
            self.denom = LaurentPoly::one();
        }
        self
    }

    pub fn add(&self, other: &PathVector) -> PathVector {
        if self.denom == other.denom {
            let mut out = self.clone();
            for (p, c) in &other.terms {
                out.add_term(p.clone(), c);
            }
            return out.normalize();
        }
        let mut out = PathVector { terms: BTreeMap::new(), denom: &self.denom * &other.denom };
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &(c * &other.denom));
        }
        for (p, c) in &other.terms {
            out.add_term(p.clone(), &(c * &self.denom));
        }
        out.normalize()
    }

    pub fn scale(&self, s: &LaurentPoly) -> PathVector {
        PathVector {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), c * s))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
            denom: self.denom.clone(),
        }
        .normalize()
    }

    /// Divides by a nonzero Laurent polynomial.
    pub fn divide(&self, s: &LaurentPoly) -> PathVector {
        assert!(!s.is_zero(), "division of a path vector by zero");
        PathVector { terms: self.terms.clone(), denom: &self.denom * s }.normalize()
    }

    /// Equality of the represented vectors (denominators may differ).
    pub fn same_vector(&self, other: &PathVector) -> bool {
        if self.denom == other.denom {
            return self.terms == other.terms;
        }
        let keys: std::collections::BTreeSet<&Path> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().all(|p| {
            let a = self.terms.get(p).cloned().unwrap_or_default();
            let b = other.terms.get(p).cloned().unwrap_or_default();
            &a * &other.denom == &b * &self.denom
        })
    }

    /// The integral numerators, provided the denominator has been cleared.
    pub fn into_integral(self) -> Result<BTreeMap<Path, LaurentPoly>> {
        let v = self.normalize();
        if v.denom.is_one() {
            Ok(v.terms)
        } else {
            let (p, c) = v.terms.iter().next().expect("normalized zero has denominator 1");
            Err(Error::NonExactDivision {
                dividend: format!("{c} (coefficient of {p})"),
                divisor: v.denom.to_string(),
            })
        }
    }

    /// Scalar coefficient of the empty path.
    pub fn empty_coefficient(&self) -> (LaurentPoly, LaurentPoly) {
        self.coefficient(&Path::empty())
    }

    /// Coordinates in the divided basis `<gamma> = gamma / gamma!`: the
    /// coefficient of `<gamma>` is `c_gamma * gamma!`. Fails with
    /// `NonExactDivision` if some coordinate is not a Laurent polynomial.
    pub fn divided_basis_coordinates(
        &self,
        rs: &RootSystem,
    ) -> Result<BTreeMap<Path, LaurentPoly>> {
        self.terms
            .iter()
            .map(|(p, c)| {
                let scaled = c * &path_factorial(rs, p);
                exact_div(&scaled, &self.denom).map(|q| (p.clone(), q))
            })
            .collect()
    }
}

/// `epsilon_alpha` on `P(lambda)`:
/// `(d_1..d_l) -> sum_{i: d_i = alpha} [<lambda - d_{i+1} - ... - d_l, alpha^vee>]_alpha (d without d_i)`.
pub fn epsilon_apply(rs: &RootSystem, lambda: &Weight, alpha: usize, x: &PathVector) -> PathVector {
    let d = rs.symmetrizer(alpha);
    let a = alpha as u8;
    let mut out = PathVector { terms: BTreeMap::new(), denom: x.denom.clone() };
    for (path, c) in &x.terms {
        let entries = path.entries();
        let mut pairing = rs.pairing(lambda, alpha);
        for i in (0..entries.len()).rev() {
            if entries[i] == a {
                let coeff = qint(pairing, d);
                if !coeff.is_zero() {
                    out.add_term(path.delete(i), &(c * &coeff));
                }
            }
            pairing -= rs.cartan_entry(entries[i] as usize, alpha);
        }
    }
    out.normalize()
}

/// `phi_alpha^n`: prepends `alpha` `n` times to every path.
pub fn phi_apply(alpha: usize, n: usize, x: &PathVector) -> PathVector {
    let a = u8::try_from(alpha).expect("root index fits in u8");
    PathVector {
        terms: x.terms.iter().map(|(p, c)| (p.prepend(a, n), c.clone())).collect(),
        denom: x.denom.clone(),
    }
}

/// `epsilon_alpha^n / [n]!_alpha`.
pub fn epsilon_divided(
    rs: &RootSystem,
    lambda: &Weight,
    alpha: usize,
    n: usize,
    x: &PathVector,
) -> PathVector {
    let mut y = x.clone();
    for _ in 0..n {
        y = epsilon_apply(rs, lambda, alpha, &y);
    }
    y.divide(&qfact(n as u32, rs.symmetrizer(alpha)))
}

/// `phi_alpha^n / [n]!_alpha`.
pub fn phi_divided(rs: &RootSystem, alpha: usize, n: usize, x: &PathVector) -> PathVector {
    phi_apply(alpha, n, x).divide(&qfact(n as u32, rs.symmetrizer(alpha)))
}

/// The bilinear form on two paths of equal height, computed by applying
/// `epsilon_{delta_1}`, then `epsilon_{delta_2}`, ... to `gamma` and reading
/// off the coefficient of the empty path. Independent of the memoized
/// recursion in [`crate::gram`].
pub fn bilinear_oracle(rs: &RootSystem, lambda: &Weight, delta: &Path, gamma: &Path) -> LaurentPoly {
    let mut x = PathVector::basis(gamma.clone());
    for &alpha in delta.entries() {
        x = epsilon_apply(rs, lambda, alpha as usize, &x);
        if x.is_zero() {
            return LaurentPoly::zero();
        }
    }
    let (num, den) = x.empty_coefficient();
    exact_div(&num, &den).expect("operators without divided powers keep integral coefficients")
}
