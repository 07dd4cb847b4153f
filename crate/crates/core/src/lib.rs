//! Exact weight multiplicities of quantum group modules over arbitrary
//! fields, computed from Gram matrices of the contravariant form on root
//! paths, plus checkers for the periodicity of those multiplicities.

pub mod characters;
pub mod coefficients;
pub mod error;
pub mod exec;
pub mod gram;
pub mod laurent;
pub mod oracles;
pub mod pathspace;
pub mod rootsystem;
pub mod verify;

pub use characters::{character_table, matrix_rank, weight_multiplicity, MultiplicityTable};
pub use coefficients::{Field, FieldElement, FieldSpec, QKind};
pub use error::{Error, Result};
pub use exec::Strategy;
pub use gram::{gram_entry, gram_matrix, gram_raw, GramMatrix, GramSession};
pub use laurent::{cyclotomic, exact_div, mod_cyclotomic, qbinom, qfact, qint, IntPoly, LaurentPoly};
pub use pathspace::{enumerate_paths, Path, PathVector};
pub use rootsystem::{RootSystem, RootVector, Weight};
