//! Gram matrices of the contravariant form on root paths.
//!
//! For paths `delta`, `gamma` of equal height the raw value
//! `b(delta, gamma)` is obtained by applying `epsilon_{delta_1}` first,
//! then `epsilon_{delta_2}`, and so on, to `gamma`. Peeling `delta_1` gives
//! the recursion
//!
//! ```text
//! b(delta, gamma) = sum_{i : gamma_i = delta_1}
//!     [<lambda - gamma_{i+1} - ... - gamma_l, delta_1^vee>]_{delta_1}
//!     * b((delta_2, ..., delta_l), gamma without gamma_i)
//! ```
//!
//! with `b(empty, empty) = 1`. Printed versions of this recursion sometimes
//! sum over `gamma_i = delta_l` while using `delta_1` in the coefficient;
//! the form above is the one that agrees with the operator definition, and
//! the test suite checks it against [`crate::pathspace::bilinear_oracle`].
//!
//! The normalized entry divides by `delta! * gamma!`; the quotient is always
//! a Laurent polynomial, and a failed division is reported as an error.

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::laurent::{exact_div, qint, LaurentPoly};
use crate::pathspace::{enumerate_paths, path_factorial, Path};
use crate::rootsystem::{RootSystem, RootVector, Weight};

/// Unordered pair of paths; the weight is fixed by the owning session.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MemoKey {
    lo: Path,
    hi: Path,
}

impl MemoKey {
    pub fn new(a: &[u8], b: &[u8]) -> Self {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        MemoKey { lo: Path(lo.to_vec()), hi: Path(hi.to_vec()) }
    }
}

/// Memoized evaluation of the form for one root system and one weight.
/// Safe to share across threads; concurrent misses may recompute a value but
/// always store the same one.
pub struct GramSession<'a> {
    rs: &'a RootSystem,
    lambda: Weight,
    memo: DashMap<MemoKey, LaurentPoly>,
}

impl<'a> GramSession<'a> {
    pub fn new(rs: &'a RootSystem, lambda: Weight) -> Self {
        assert_eq!(lambda.rank(), rs.rank(), "weight rank does not match the root system");
        GramSession { rs, lambda, memo: DashMap::new() }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// Number of memoized path pairs.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn check_heights(&self, delta: &Path, gamma: &Path) -> Result<()> {
        let n = self.rs.rank();
        if let Some(bad) = delta.entries().iter().chain(gamma.entries()).find(|&&e| e as usize >= n) {
            return Err(Error::Invalid(format!("path entry {bad} exceeds rank {n}")));
        }
        let (hd, hg) = (delta.height(n), gamma.height(n));
        if hd != hg {
            return Err(Error::HeightMismatch { left: hd.to_string(), right: hg.to_string() });
        }
        Ok(())
    }

    /// Raw form value `b(delta, gamma)` before normalization.
    pub fn raw(&self, delta: &Path, gamma: &Path) -> Result<LaurentPoly> {
        self.check_heights(delta, gamma)?;
        Ok(self.raw_rec(delta.entries(), gamma.entries()))
    }

    fn raw_rec(&self, delta: &[u8], gamma: &[u8]) -> LaurentPoly {
        let Some((&beta, rest)) = delta.split_first() else {
            return LaurentPoly::one();
        };
        let key = MemoKey::new(delta, gamma);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let b = beta as usize;
        let d = self.rs.symmetrizer(b);
        let mut pairing = self.rs.pairing(&self.lambda, b);
        let mut total = LaurentPoly::zero();
        let mut reduced = Vec::with_capacity(gamma.len().saturating_sub(1));
        for i in (0..gamma.len()).rev() {
            if gamma[i] == beta && pairing != 0 {
                reduced.clear();
                reduced.extend_from_slice(&gamma[..i]);
                reduced.extend_from_slice(&gamma[i + 1..]);
                let sub = self.raw_rec(rest, &reduced);
                if !sub.is_zero() {
                    total += &(&qint(pairing, d) * &sub);
                }
            }
            pairing -= self.rs.cartan_entry(gamma[i] as usize, b);
        }
        self.memo.entry(key).or_insert(total).clone()
    }

    /// Normalized entry `b(delta, gamma) / (delta! gamma!)`.
    pub fn entry(&self, delta: &Path, gamma: &Path) -> Result<LaurentPoly> {
        let raw = self.raw(delta, gamma)?;
        let denom = &path_factorial(self.rs, delta) * &path_factorial(self.rs, gamma);
        exact_div(&raw, &denom)
    }

    /// The matrix of normalized entries on all paths of height `nu`.
    pub fn matrix(&self, nu: &RootVector, strategy: Strategy) -> Result<GramMatrix> {
        if nu.rank() != self.rs.rank() || !nu.is_nonnegative() {
            return Err(Error::Invalid(format!("height {nu} is not a nonnegative root vector")));
        }
        let paths = enumerate_paths(nu);
        let n = paths.len();
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let values = exec::try_map(strategy, &cells, |&(i, j)| self.entry(&paths[i], &paths[j]))?;
        let mut entries = vec![vec![LaurentPoly::zero(); n]; n];
        for (&(i, j), v) in cells.iter().zip(values) {
            if i != j {
                entries[j][i] = v.clone();
            }
            entries[i][j] = v;
        }
        Ok(GramMatrix {
            system: self.rs.name().to_string(),
            lambda: self.lambda.clone(),
            height: nu.clone(),
            paths,
            entries,
        })
    }
}

pub fn gram_raw(rs: &RootSystem, lambda: &Weight, delta: &Path, gamma: &Path) -> Result<LaurentPoly> {
    GramSession::new(rs, lambda.clone()).raw(delta, gamma)
}

pub fn gram_entry(rs: &RootSystem, lambda: &Weight, delta: &Path, gamma: &Path) -> Result<LaurentPoly> {
    GramSession::new(rs, lambda.clone()).entry(delta, gamma)
}

pub fn gram_matrix(rs: &RootSystem, lambda: &Weight, nu: &RootVector) -> Result<GramMatrix> {
    GramSession::new(rs, lambda.clone()).matrix(nu, Strategy::default())
}

/// Square matrix of normalized form values, rows and columns indexed by
/// `paths` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub system: String,
    pub lambda: Weight,
    pub height: RootVector,
    pub paths: Vec<Path>,
    pub entries: Vec<Vec<LaurentPoly>>,
}

#[derive(Serialize, Deserialize)]
struct GramDocument {
    system: String,
    lambda: Weight,
    height: RootVector,
    paths: Vec<Path>,
    entries: Vec<Vec<String>>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.paths.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Same matrix with rows and columns permuted: new index `k` takes old
    /// index `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> GramMatrix {
        assert_eq!(perm.len(), self.size());
        GramMatrix {
            system: self.system.clone(),
            lambda: self.lambda.clone(),
            height: self.height.clone(),
            paths: perm.iter().map(|&k| self.paths[k].clone()).collect(),
            entries: perm
                .iter()
                .map(|&r| perm.iter().map(|&c| self.entries[r][c].clone()).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = GramDocument {
            system: self.system.clone(),
            lambda: self.lambda.clone(),
            height: self.height.clone(),
            paths: self.paths.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect(),
        };
        serde_json::to_value(doc).expect("gram document serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: GramDocument = serde_json::from_value(value.clone())
            .map_err(|e| Error::Invalid(format!("bad Gram matrix JSON: {e}")))?;
        let entries = doc
            .entries
            .iter()
            .map(|row| row.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if entries.len() != doc.paths.len() || entries.iter().any(|r| r.len() != doc.paths.len()) {
            return Err(Error::Invalid("Gram matrix is not square over its paths".into()));
        }
        Ok(GramMatrix {
            system: doc.system,
            lambda: doc.lambda,
            height: doc.height,
            paths: doc.paths,
            entries,
        })
    }
}
