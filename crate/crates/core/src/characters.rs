//! Weight multiplicities as ranks of specialized Gram matrices.
//!
//! `dim L(lambda)_mu` over `K` equals the rank over `K` of the Gram matrix
//! at height `lambda - mu`, with every entry sent through `v -> q`.

use serde::{Deserialize, Serialize};

use crate::coefficients::{Field, FieldElement, FieldSpec};
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::gram::{GramMatrix, GramSession};
use crate::rootsystem::{RootSystem, RootVector, Weight};

/// Rank of a matrix of field elements by Gaussian elimination, taking the
/// first nonzero entry of each column as pivot.
pub fn field_rank(field: &Field, mut rows: Vec<Vec<FieldElement>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.invert(&rows[rank][col]).expect("pivot is nonzero");
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = field.mul(&rows[r][col], &inv);
            for c in col..ncols {
                if rows[rank][c].is_zero() {
                    continue;
                }
                let t = field.mul(&factor, &rows[rank][c]);
                rows[r][c] = field.sub(&rows[r][c], &t);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank over `field` of a Gram matrix.
pub fn matrix_rank(field: &Field, m: &GramMatrix) -> usize {
    let rows = m
        .entries
        .iter()
        .map(|row| row.iter().map(|x| field.specialize(x)).collect())
        .collect();
    field_rank(field, rows)
}

/// Multiplicity of `mu` in the simple module of highest weight `lambda`,
/// reusing the memo of an existing session.
pub fn session_multiplicity(session: &GramSession<'_>, field: &Field, mu: &Weight) -> Result<usize> {
    let rs = session.root_system();
    if mu.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: mu.rank() });
    }
    let Some(nu) = rs.root_decompose(&(session.lambda() - mu)) else {
        return Ok(0);
    };
    let m = session.matrix(&nu, Strategy::Sequential)?;
    Ok(matrix_rank(field, &m))
}

pub fn weight_multiplicity(field: &Field, rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<usize> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: lambda.rank() });
    }
    session_multiplicity(&GramSession::new(rs, lambda.clone()), field, mu)
}

/// One row of a [`MultiplicityTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    /// Root coordinates of `lambda - mu`.
    pub depth: RootVector,
    pub mu: Weight,
    pub dim: usize,
}

/// Multiplicities of all `mu = lambda - c` with `0 <= c <= height_bound`,
/// sorted by total depth and then lexicographically in `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub system: String,
    pub field: FieldSpec,
    pub lambda: Weight,
    pub height_bound: RootVector,
    pub entries: Vec<TableEntry>,
}

#[derive(Serialize, Deserialize)]
struct TableDocument {
    system: String,
    field: FieldSpec,
    lambda: Weight,
    height_bound: RootVector,
    mults: Vec<MultRow>,
}

#[derive(Serialize, Deserialize)]
struct MultRow {
    mu: Weight,
    dim: usize,
    depth: RootVector,
}

impl MultiplicityTable {
    /// Multiplicity of `mu`, or `None` if `mu` lies outside the table.
    pub fn get(&self, mu: &Weight) -> Option<usize> {
        self.entries.iter().find(|e| &e.mu == mu).map(|e| e.dim)
    }

    pub fn total_dim(&self) -> usize {
        self.entries.iter().map(|e| e.dim).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = TableDocument {
            system: self.system.clone(),
            field: self.field.clone(),
            lambda: self.lambda.clone(),
            height_bound: self.height_bound.clone(),
            mults: self
                .entries
                .iter()
                .map(|e| MultRow { mu: e.mu.clone(), dim: e.dim, depth: e.depth.clone() })
                .collect(),
        };
        serde_json::to_value(doc).expect("table document serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: TableDocument = serde_json::from_value(value.clone())
            .map_err(|e| Error::Invalid(format!("bad multiplicity table JSON: {e}")))?;
        let rank = doc.lambda.rank();
        if let Some(bad) = doc.mults.iter().find(|r| r.mu.rank() != rank || r.depth.rank() != rank) {
            return Err(Error::DimensionMismatch { expected: rank, got: bad.mu.rank().min(bad.depth.rank()) });
        }
        let entries = doc
            .mults
            .into_iter()
            .map(|row| TableEntry { depth: row.depth, mu: row.mu, dim: row.dim })
            .collect();
        Ok(MultiplicityTable {
            system: doc.system,
            field: doc.field,
            lambda: doc.lambda,
            height_bound: doc.height_bound,
            entries,
        })
    }

    /// CSV with columns `mu_1, ..., mu_n, dim`.
    pub fn to_csv(&self) -> String {
        let n = self.lambda.rank();
        let mut out: Vec<String> = (1..=n).map(|i| format!("mu_{i}")).collect();
        out.push("dim".into());
        let mut text = out.join(",");
        text.push('\n');
        for e in &self.entries {
            let mut cells: Vec<String> = e.mu.0.iter().map(i64::to_string).collect();
            cells.push(e.dim.to_string());
            text.push_str(&cells.join(","));
            text.push('\n');
        }
        text
    }
}

/// All root vectors `c` with `0 <= c <= bound`, lexicographic.
pub fn root_box(bound: &RootVector) -> Vec<RootVector> {
    let mut out = vec![Vec::new()];
    for &b in &bound.0 {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (0..=b).map(move |k| {
                    let mut next = prefix.clone();
                    next.push(k);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(RootVector).collect()
}

pub fn character_table(
    field: &Field,
    rs: &RootSystem,
    lambda: &Weight,
    height_bound: &RootVector,
    strategy: Strategy,
) -> Result<MultiplicityTable> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: lambda.rank() });
    }
    if height_bound.rank() != rs.rank() || !height_bound.is_nonnegative() {
        return Err(Error::Invalid(format!("height bound {height_bound} is not a nonnegative root vector")));
    }
    let mut depths = root_box(height_bound);
    depths.sort_by(|a, b| (a.total(), &a.0).cmp(&(b.total(), &b.0)));
    let session = GramSession::new(rs, lambda.clone());
    let dims = exec::try_map(strategy, &depths, |c| {
        session.matrix(c, Strategy::Sequential).map(|m| matrix_rank(field, &m))
    })?;
    let entries = depths
        .into_iter()
        .zip(dims)
        .map(|(depth, dim)| TableEntry { mu: lambda - &rs.root_to_weight(&depth), depth, dim })
        .collect();
    Ok(MultiplicityTable {
        system: rs.name().to_string(),
        field: field.spec().clone(),
        lambda: lambda.clone(),
        height_bound: height_bound.clone(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn field(s: &str) -> Field {
        Field::parse(s).unwrap()
    }

    fn ints(f: &Field, rows: &[&[i64]]) -> Vec<Vec<FieldElement>> {
        rows.iter().map(|r| r.iter().map(|&x| f.from_int(&BigInt::from(x))).collect()).collect()
    }

    #[test]
    fn small_ranks() {
        for s in ["Q@1", "F3@1", "F2@zeta3", "Q@zeta5"] {
            let f = field(s);
            assert_eq!(field_rank(&f, ints(&f, &[&[1, 0], &[0, 1]])), 2);
            assert_eq!(field_rank(&f, ints(&f, &[&[0, 0], &[0, 0]])), 0);
        }
        let f3 = field("F3@1");
        assert_eq!(field_rank(&f3, ints(&f3, &[&[2, 1], &[1, 2]])), 1);
        let q = field("Q@1");
        assert_eq!(field_rank(&q, ints(&q, &[&[2, 1], &[1, 2]])), 2);
        assert_eq!(field_rank(&q, ints(&q, &[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])), 2);
    }

    #[test]
    fn multiplicities_from_examples() {
        let a1 = RootSystem::named("A1").unwrap();
        let a2 = RootSystem::named("A2").unwrap();
        let w = |xs: &[i64]| Weight(xs.to_vec());
        assert_eq!(weight_multiplicity(&field("Q@1"), &a2, &w(&[1, 1]), &w(&[0, 0])).unwrap(), 2);
        assert_eq!(weight_multiplicity(&field("F3@1"), &a2, &w(&[1, 1]), &w(&[0, 0])).unwrap(), 1);
        assert_eq!(weight_multiplicity(&field("F2@1"), &a1, &w(&[2]), &w(&[0])).unwrap(), 0);
        assert_eq!(weight_multiplicity(&field("Q@zeta3"), &a1, &w(&[3]), &w(&[1])).unwrap(), 0);
        assert_eq!(weight_multiplicity(&field("Q@1"), &a2, &w(&[1, 1]), &w(&[2, 2])).unwrap(), 0);
        assert_eq!(weight_multiplicity(&field("Q@1"), &a2, &w(&[-3, 1]), &w(&[-3, 1])).unwrap(), 1);
    }

    #[test]
    fn adjoint_table() {
        let a2 = RootSystem::named("A2").unwrap();
        let t = character_table(&field("Q@1"), &a2, &Weight(vec![1, 1]), &RootVector(vec![1, 1]), Strategy::default())
            .unwrap();
        let got: Vec<(Vec<i64>, usize)> = t.entries.iter().map(|e| (e.mu.0.clone(), e.dim)).collect();
        assert_eq!(got, vec![(vec![1, 1], 1), (vec![2, -1], 1), (vec![-1, 2], 1), (vec![0, 0], 2)]);
        assert_eq!(t.get(&Weight(vec![-1, -1])), None);
    }

    #[test]
    fn trivial_bound_and_lucas_string() {
        let a1 = RootSystem::named("A1").unwrap();
        let t = character_table(&field("F5@zeta4"), &a1, &Weight(vec![-7]), &RootVector(vec![0]), Strategy::Sequential)
            .unwrap();
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.get(&Weight(vec![-7])), Some(1));
        let t = character_table(&field("F2@1"), &a1, &Weight(vec![2]), &RootVector(vec![2]), Strategy::Sequential).unwrap();
        let got: Vec<(i64, usize)> = t.entries.iter().map(|e| (e.mu.0[0], e.dim)).collect();
        assert_eq!(got, vec![(2, 1), (0, 0), (-2, 1)]);
    }

    #[test]
    fn table_serializations() {
        let a2 = RootSystem::named("A2").unwrap();
        let t = character_table(&field("F3@1"), &a2, &Weight(vec![1, 1]), &RootVector(vec![1, 1]), Strategy::Sequential)
            .unwrap();
        let json = t.to_json();
        assert_eq!(json["field"], "F3@1");
        assert_eq!(json["mults"][3], serde_json::json!({"mu": [0, 0], "dim": 1, "depth": [1, 1]}));
        assert_eq!(MultiplicityTable::from_json(&json).unwrap(), t);
        assert_eq!(t.to_csv(), "mu_1,mu_2,dim\n1,1,1\n2,-1,1\n-1,2,1\n0,0,1\n");
    }
}
