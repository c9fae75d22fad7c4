//! JSON structure-constant tables for finite binary algebras.
//!
//! ```json
//! {"dim": 3, "basis": ["e_-2", "e_0", "e_2"],
//!  "brackets": [[0, 1, [[0, "2"]]], [0, 2, [[1, "-1"]]], [1, 2, [[2, "2"]]]]}
//! ```
//!
//! Indices are 0-based positions in the basis. Only pairs `i < j` with a
//! nonzero bracket are listed; the rest follows from antisymmetry. `basis` is
//! optional on import and defaults to `e_0 .. e_{dim-1}`.

use serde::{Deserialize, Serialize};

use super::{AlgebraError, AlgebraSpec, FiniteTable, Kind, Params, Sector};
use crate::basis::{BasisIndex, Family};
use crate::element::Element;
use crate::grammar::parse_element_with;
use crate::scalar::Scalar;

/// `(i, j, [(k, c), ..])` meaning `[b_i, b_j] = Σ c b_k`.
pub type BracketEntry = (usize, usize, Vec<(usize, Scalar)>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureTable {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub brackets: Vec<BracketEntry>,
}

impl StructureTable {
    /// Table of a finite binary algebra; `None` for infinite or n-ary ones.
    pub fn from_algebra(alg: &AlgebraSpec) -> Option<StructureTable> {
        if alg.arity() != 2 {
            return None;
        }
        let basis = alg.finite_basis()?;
        let pos = |b: &BasisIndex| basis.binary_search(b).expect("closed bracket");
        let mut brackets = Vec::new();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate().skip(i) {
                let v = alg.rule(&[*x, *y]);
                if v.is_zero() {
                    continue;
                }
                let terms = v.iter().map(|(k, c)| (pos(k), c.clone())).collect();
                brackets.push((i, j, terms));
            }
        }
        Some(StructureTable {
            dim: basis.len(),
            basis: Some(basis.iter().map(ToString::to_string).collect()),
            brackets,
        })
    }

    /// Imports the table as an algebra named `name`. Imported tables carry no
    /// grading.
    pub fn into_algebra(self, name: &str) -> Result<AlgebraSpec, AlgebraError> {
        let basis: Vec<BasisIndex> = match &self.basis {
            Some(names) => {
                if names.len() != self.dim {
                    return Err(AlgebraError::Table(format!(
                        "basis has {} names but dim is {}",
                        names.len(),
                        self.dim
                    )));
                }
                names
                    .iter()
                    .map(|n| {
                        let e = parse_element_with(n, |_| true)
                            .map_err(|e| AlgebraError::Table(e.to_string()))?;
                        let single = match e.iter().next() {
                            Some((idx, c)) if e.len() == 1 && c.is_one() => Some(*idx),
                            _ => None,
                        };
                        single.ok_or_else(|| {
                            AlgebraError::Table(format!("`{n}` is not a basis label"))
                        })
                    })
                    .collect::<Result<_, _>>()?
            }
            None => (0..self.dim as i64).map(|k| BasisIndex::int(Family::E, k)).collect(),
        };
        let mut sorted = basis.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != basis.len() {
            return Err(AlgebraError::Table("duplicate basis labels".into()));
        }
        let at = |k: usize| {
            basis
                .get(k)
                .copied()
                .ok_or_else(|| AlgebraError::Table(format!("index {k} out of range")))
        };
        let mut entries = Vec::new();
        for (i, j, terms) in &self.brackets {
            let value: Element = terms
                .iter()
                .map(|(k, c)| Ok((at(*k)?, c.clone())))
                .collect::<Result<Vec<(BasisIndex, Scalar)>, AlgebraError>>()?
                .into_iter()
                .collect();
            entries.push((at(*i)?, at(*j)?, value));
        }
        let table = FiniteTable::new(basis, entries, false)?;
        Ok(AlgebraSpec::from_parts(
            name.into(),
            2,
            Sector::None,
            Params::new(),
            Kind::Table(table),
        ))
    }
}
