//! Cartan data of finite root systems.
//!
//! Convention: `cartan[i][j] = <alpha_i, alpha_j^vee>`, and the symmetrizer
//! `d` makes `d[i] * cartan[i][j]` symmetric. Note that many references use
//! the transpose. Under this convention B2 is `[[2,-2],[-1,2]]` with
//! `d = [1, 2]`.
//!
//! Weights are stored in fundamental-weight coordinates, so coordinate `j` of
//! a weight is its pairing with `alpha_j^vee`; elements of the root lattice
//! are stored as coefficient vectors over the simple roots.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Sub};
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integral weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

/// Element of the root lattice as coefficients over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Sum of the coefficients (path length of this height).
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Largest coefficient, i.e. the largest `c_alpha`.
    pub fn max_coeff(&self) -> i64 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

fn fmt_coords(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(f, &self.0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(f, &self.0)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// On-disk form of a custom Cartan matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CartanDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub cartan: Vec<Vec<i64>>,
}

#[derive(Debug)]
pub struct RootSystem {
    name: String,
    cartan: Vec<Vec<i64>>,
    d: Vec<u32>,
    positive_roots: OnceLock<Vec<RootVector>>,
}

impl Clone for RootSystem {
    fn clone(&self) -> Self {
        RootSystem {
            name: self.name.clone(),
            cartan: self.cartan.clone(),
            d: self.d.clone(),
            positive_roots: self.positive_roots.clone(),
        }
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

impl Eq for RootSystem {}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

impl RootSystem {
    /// Named finite types: `A<n>`, `B<n>` (n >= 2), `C<n>` (n >= 2),
    /// `D<n>` (n >= 4), `F4`, `G2`.
    pub fn named(code: &str) -> Result<Self> {
        let unknown = || Error::UnknownSystem(code.to_string());
        let code_trim = code.trim();
        let (kind, n) = code_trim.split_at(code_trim.len().min(1));
        let n: usize = n.parse().map_err(|_| unknown())?;
        let cartan = match (kind, n) {
            ("A", n) if (1..=12).contains(&n) => chain(n),
            ("B", n) if (2..=12).contains(&n) => {
                let mut a = chain(n);
                a[n - 2][n - 1] = -2;
                a
            }
            ("C", n) if (2..=12).contains(&n) => {
                let mut a = chain(n);
                a[n - 1][n - 2] = -2;
                a
            }
            ("D", n) if (4..=12).contains(&n) => {
                let mut a = chain(n);
                a[n - 2][n - 1] = 0;
                a[n - 1][n - 2] = 0;
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
                a
            }
            ("F", 4) => {
                let mut a = chain(4);
                a[1][2] = -2;
                a
            }
            ("G", 2) => vec![vec![2, -1], vec![-3, 2]],
            _ => return Err(unknown()),
        };
        Self::from_cartan(code_trim, cartan)
    }

    /// Validates a Cartan matrix and computes its minimal symmetrizer.
    pub fn from_cartan(name: impl Into<String>, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        if n == 0 || n > 64 {
            return Err(Error::Invalid(format!("Cartan matrix must have rank 1..=64, got {n}")));
        }
        if cartan.iter().any(|row| row.len() != n) {
            return Err(Error::Invalid("Cartan matrix must be square".into()));
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::NotFiniteType(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..n {
                if i != j && cartan[i][j] > 0 {
                    return Err(Error::NotFiniteType(format!("entry ({i},{j}) is positive")));
                }
                if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return Err(Error::NotSymmetrizable(format!(
                        "entries ({i},{j}) and ({j},{i}) are not both zero"
                    )));
                }
            }
        }
        let d = symmetrizer(&cartan)?;
        let sym: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| i128::from(d[i]) * i128::from(cartan[i][j])).collect())
            .collect();
        for k in 1..=n {
            if leading_minor(&sym, k) <= 0 {
                return Err(Error::NotFiniteType(format!(
                    "leading principal minor of order {k} is not positive"
                )));
            }
        }
        if d.iter().any(|&x| !(1..=3).contains(&x)) {
            return Err(Error::NotFiniteType(format!("symmetrizer {d:?} leaves {{1,2,3}}")));
        }
        Ok(RootSystem {
            name: name.into(),
            cartan,
            d,
            positive_roots: OnceLock::new(),
        })
    }

    pub fn from_document(doc: CartanDocument) -> Result<Self> {
        let name = doc.name.unwrap_or_else(|| "custom".to_string());
        Self::from_cartan(name, doc.cartan)
    }

    /// Parses `{ "cartan": [[...], ...] }`.
    pub fn from_json(json: &str) -> Result<Self> {
        let doc: CartanDocument = serde_json::from_str(json)
            .map_err(|e| Error::Invalid(format!("bad Cartan JSON: {e}")))?;
        Self::from_document(doc)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `<alpha_i, alpha_j^vee>`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn symmetrizers(&self) -> &[u32] {
        &self.d
    }

    pub fn symmetrizer(&self, i: usize) -> u32 {
        self.d[i]
    }

    /// `<mu, alpha_j^vee>`.
    pub fn pairing(&self, mu: &Weight, j: usize) -> i64 {
        mu.0[j]
    }

    pub fn simple_root_as_weight(&self, i: usize) -> Weight {
        Weight(self.cartan[i].clone())
    }

    pub fn root_to_weight(&self, c: &RootVector) -> Weight {
        let n = self.rank();
        let mut w = vec![0; n];
        for (i, &ci) in c.0.iter().enumerate() {
            if ci != 0 {
                for (j, wj) in w.iter_mut().enumerate() {
                    *wj += ci * self.cartan[i][j];
                }
            }
        }
        Weight(w)
    }

    /// Expresses `nu` as a nonnegative integer combination of simple roots,
    /// or returns `None` if it is not one.
    pub fn root_decompose(&self, nu: &Weight) -> Option<RootVector> {
        let c = self.solve_root_coords(nu)?;
        c.0.iter().all(|&x| x >= 0).then_some(c)
    }

    /// Integer simple-root coordinates of `nu`, if `nu` lies in the root
    /// lattice.
    pub fn solve_root_coords(&self, nu: &Weight) -> Option<RootVector> {
        let n = self.rank();
        assert_eq!(nu.rank(), n, "weight has the wrong rank");
        // sum_i c_i a[i][j] = nu_j, i.e. the transposed system.
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|j| {
                let mut row: Vec<BigRational> =
                    (0..n).map(|i| BigRational::from_integer(self.cartan[i][j].into())).collect();
                row.push(BigRational::from_integer(nu.0[j].into()));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, pivot);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in col..=n {
                        let t = &f * &m[col][k];
                        m[r][k] -= t;
                    }
                }
            }
        }
        let mut out = Vec::with_capacity(n);
        for row in &m {
            let x = &row[n];
            if !x.is_integer() {
                return None;
            }
            out.push(i64::try_from(x.to_integer()).ok()?);
        }
        Some(RootVector(out))
    }

    /// Dominance order: `mu <= lambda` iff `lambda - mu` is a nonnegative
    /// combination of simple roots.
    pub fn leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.root_decompose(&(lambda - mu)).is_some()
    }

    /// Positive roots in simple-root coordinates, sorted by height then
    /// lexicographically.
    pub fn positive_roots(&self) -> &[RootVector] {
        self.positive_roots.get_or_init(|| {
            let n = self.rank();
            let simple: Vec<RootVector> = (0..n)
                .map(|i| {
                    let mut c = vec![0; n];
                    c[i] = 1;
                    RootVector(c)
                })
                .collect();
            let mut seen: HashSet<RootVector> = simple.iter().cloned().collect();
            let mut queue: VecDeque<RootVector> = simple.into();
            while let Some(beta) = queue.pop_front() {
                for i in 0..n {
                    let pairing: i64 = (0..n).map(|j| beta.0[j] * self.cartan[j][i]).sum();
                    let mut image = beta.clone();
                    image.0[i] -= pairing;
                    if image.is_nonnegative() && !image.is_zero() && seen.insert(image.clone()) {
                        queue.push_back(image);
                    }
                }
            }
            let mut roots: Vec<RootVector> = seen.into_iter().collect();
            roots.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
            roots
        })
    }
}

/// Minimal positive integer `d` with `d[i] a[i][j] = d[j] a[j][i]`, one
/// normalization per connected component.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<u32>> {
    let n = a.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    let mut out = vec![0u32; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Ratio::one());
        let mut component = vec![root];
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                let dj = di * Ratio::from_integer(a[i][j]) / Ratio::from_integer(a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        stack.push(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::NotSymmetrizable(format!(
                            "inconsistent ratios around node {j}"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm_den = component.iter().fold(1i64, |acc, &i| acc.lcm(d[i].unwrap().denom()));
        let scaled: Vec<i64> =
            component.iter().map(|&i| (d[i].unwrap() * lcm_den).to_integer()).collect();
        let g = scaled.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&i, &x) in component.iter().zip(&scaled) {
            out[i] = u32::try_from(x / g)
                .map_err(|_| Error::NotSymmetrizable("symmetrizer out of range".into()))?;
        }
    }
    Ok(out)
}

/// Determinant of the leading `k x k` block, fraction-free (Bareiss).
fn leading_minor(m: &[Vec<i128>], k: usize) -> i128 {
    let mut a: Vec<Vec<i128>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if p != col {
            a.swap(p, col);
            sign = -sign;
        }
        for r in col + 1..k {
            for c in col + 1..k {
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    sign * a[k - 1][k - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_cartan_and_symmetrizers() {
        let a1 = RootSystem::named("A1").unwrap();
        assert_eq!(a1.cartan(), &[vec![2]]);
        assert_eq!(a1.symmetrizers(), &[1]);
        let b2 = RootSystem::named("B2").unwrap();
        assert_eq!(b2.cartan(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(b2.symmetrizers(), &[1, 2]);
        let g2 = RootSystem::named("G2").unwrap();
        assert_eq!(g2.cartan(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(g2.symmetrizers(), &[3, 1]);
        assert_eq!(RootSystem::named("C3").unwrap().symmetrizers(), &[2, 2, 1]);
        assert_eq!(RootSystem::named("F4").unwrap().symmetrizers(), &[1, 1, 2, 2]);
        assert_eq!(RootSystem::named("D4").unwrap().symmetrizers(), &[1, 1, 1, 1]);
    }

    #[test]
    fn symmetrizability_holds_for_builtins() {
        for code in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "F4", "G2"] {
            let rs = RootSystem::named(code).unwrap();
            let n = rs.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(
                        i64::from(rs.symmetrizer(i)) * rs.cartan_entry(i, j),
                        i64::from(rs.symmetrizer(j)) * rs.cartan_entry(j, i),
                        "{code} ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(matches!(RootSystem::named("E6"), Err(Error::UnknownSystem(_))));
        assert!(matches!(RootSystem::named("A0"), Err(Error::UnknownSystem(_))));
        // affine A1
        assert!(matches!(
            RootSystem::from_cartan("x", vec![vec![2, -2], vec![-2, 2]]),
            Err(Error::NotFiniteType(_))
        ));
        // hyperbolic rank 2
        assert!(matches!(
            RootSystem::from_cartan("x", vec![vec![2, -3], vec![-2, 2]]),
            Err(Error::NotFiniteType(_))
        ));
        // 3-cycle with inconsistent ratios
        let bad = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert!(matches!(RootSystem::from_cartan("x", bad), Err(Error::NotSymmetrizable(_))));
        assert!(matches!(
            RootSystem::from_cartan("x", vec![vec![2, -1], vec![0, 2]]),
            Err(Error::NotSymmetrizable(_))
        ));
    }

    #[test]
    fn json_loading() {
        let rs = RootSystem::from_json(r#"{ "cartan": [[2,-1],[-3,2]] }"#).unwrap();
        assert_eq!(rs.symmetrizers(), &[3, 1]);
        assert_eq!(rs.name(), "custom");
        assert!(RootSystem::from_json(r#"{ "cartan": 3 }"#).is_err());
    }

    #[test]
    fn pairing_and_simple_roots() {
        let a2 = RootSystem::named("A2").unwrap();
        assert_eq!(a2.pairing(&Weight(vec![3, -1]), 1), -1);
        assert_eq!(a2.simple_root_as_weight(0), Weight(vec![2, -1]));
        let g2 = RootSystem::named("G2").unwrap();
        assert_eq!(g2.simple_root_as_weight(1), Weight(vec![-3, 2]));
        for rs in [&a2, &g2] {
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(rs.pairing(&rs.simple_root_as_weight(i), j), rs.cartan_entry(i, j));
                }
            }
        }
        let a1 = RootSystem::named("A1").unwrap();
        assert_eq!(a1.pairing(&Weight(vec![0]), 0), 0);
    }

    #[test]
    fn decompose_examples() {
        let a2 = RootSystem::named("A2").unwrap();
        assert_eq!(a2.root_decompose(&Weight(vec![1, 1])), Some(RootVector(vec![1, 1])));
        assert_eq!(a2.root_decompose(&Weight(vec![1, 0])), None);
        assert_eq!(a2.root_decompose(&Weight(vec![0, 0])), Some(RootVector(vec![0, 0])));
        // -alpha_1 is in the root lattice but not nonnegative
        assert_eq!(a2.root_decompose(&Weight(vec![-2, 1])), None);
        assert_eq!(a2.solve_root_coords(&Weight(vec![-2, 1])), Some(RootVector(vec![-1, 0])));
    }

    #[test]
    fn positive_root_counts() {
        let expected = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A4", 10),
            ("B2", 4),
            ("C2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("F4", 24),
            ("G2", 6),
        ];
        for (code, count) in expected {
            assert_eq!(RootSystem::named(code).unwrap().positive_roots().len(), count, "{code}");
        }
        let a2 = RootSystem::named("A2").unwrap();
        assert_eq!(
            a2.positive_roots(),
            &[RootVector(vec![0, 1]), RootVector(vec![1, 0]), RootVector(vec![1, 1])]
        );
        assert_eq!(RootSystem::named("A1").unwrap().positive_roots(), &[RootVector(vec![1])]);
    }
}
