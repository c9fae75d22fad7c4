use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{LinMapWindow, SolverError};
use crate::algebras::{AlgebraSpec, Params};
use crate::basis::BasisIndex;
use crate::element::Element;
use crate::linalg::{RowReducer, SparseRow};
use crate::scalar::Scalar;

/// A basis of the δ-derivations found on one window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    algebra: String,
    label: String,
    params: Params,
    delta: Scalar,
    window: i64,
    shift_bound: i64,
    finite: bool,
    stable: bool,
    basis: Vec<LinMapWindow>,
}

/// Serialized form of a [`SolutionSpace`]. `window` and `shift` are `null`
/// for finite algebras, which ignore them. Each basis map lists its nonzero
/// images in canonical source order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionSpaceJson {
    pub algebra: String,
    pub params: BTreeMap<String, String>,
    pub delta: Scalar,
    pub window: Option<i64>,
    pub shift: Option<i64>,
    pub dimension: usize,
    pub stable: bool,
    pub trivial_only: bool,
    pub basis: Vec<Vec<ImageJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageJson {
    pub source: String,
    pub image: String,
}

impl SolutionSpace {
    pub(crate) fn new(
        alg: &AlgebraSpec,
        delta: Scalar,
        window: i64,
        shift_bound: i64,
        basis: Vec<LinMapWindow>,
        stable: bool,
    ) -> Self {
        SolutionSpace {
            algebra: alg.name().to_string(),
            label: alg.label(),
            params: alg.params().clone(),
            delta,
            window,
            shift_bound,
            finite: alg.is_finite(),
            stable,
            basis,
        }
    }

    pub fn algebra_label(&self) -> &str {
        &self.label
    }

    pub fn delta(&self) -> &Scalar {
        &self.delta
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn shift_bound(&self) -> i64 {
        self.shift_bound
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LinMapWindow] {
        &self.basis
    }

    /// Whether window-boundary solutions have been removed (always true for
    /// finite algebras).
    pub fn is_stable(&self) -> bool {
        self.stable
    }

    fn in_window(&self, idx: &BasisIndex) -> bool {
        self.finite || idx.is_central() || idx.degree2.abs() <= 2 * self.window
    }

    /// Whether `phi`, restricted to this window, is a combination of the
    /// basis. Sources of the window missing from `phi` count as mapped to 0.
    pub fn contains(&self, phi: &LinMapWindow) -> bool {
        let restricted = phi.restrict(|s| self.in_window(s), self.window);
        let mut coords = Coords::default();
        let rows: Vec<SparseRow> = self.basis.iter().map(|m| coords.encode(m)).collect();
        let target = coords.encode(&restricted);
        let mut rr = RowReducer::new();
        for r in rows {
            rr.insert(r);
        }
        rr.contains(&target)
    }

    pub fn to_json(&self) -> SolutionSpaceJson {
        SolutionSpaceJson {
            algebra: self.algebra.clone(),
            params: self.params.clone(),
            delta: self.delta.clone(),
            window: (!self.finite).then_some(self.window),
            shift: (!self.finite).then_some(self.shift_bound),
            dimension: self.dimension(),
            stable: self.stable,
            trivial_only: is_trivial_space(self),
            basis: self
                .basis
                .iter()
                .map(|m| {
                    m.images()
                        .iter()
                        .filter(|(_, img)| !img.is_zero())
                        .map(|(s, img)| ImageJson {
                            source: s.to_string(),
                            image: img.to_string(),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Column numbering for map entries, assigned in first-seen order.
#[derive(Default)]
struct Coords {
    index: BTreeMap<(BasisIndex, BasisIndex), usize>,
    list: Vec<(BasisIndex, BasisIndex)>,
}

impl Coords {
    fn encode(&mut self, m: &LinMapWindow) -> SparseRow {
        m.entries()
            .map(|(key, c)| {
                let next = self.list.len();
                let col = *self.index.entry(key).or_insert(next);
                if col == next {
                    self.list.push(key);
                }
                (col, c.clone())
            })
            .collect()
    }
}

/// Restricts every solution of `large` to the window of `small` and returns
/// a basis of the span of those restrictions.
///
/// Both spaces must come from the same algebra, δ and shift bound, and the
/// larger window must exceed the smaller by at least `max(S, 1)`, so that
/// every window-boundary tuple of `small` is interior to `large`.
pub fn stabilize(small: &SolutionSpace, large: &SolutionSpace) -> Result<SolutionSpace, SolverError> {
    if small.label != large.label || small.params != large.params {
        return Err(SolverError::Mismatch(format!(
            "algebras differ: {} vs {}",
            small.label, large.label
        )));
    }
    if small.delta != large.delta {
        return Err(SolverError::Mismatch(format!(
            "delta differs: {} vs {}",
            small.delta, large.delta
        )));
    }
    if small.shift_bound != large.shift_bound {
        return Err(SolverError::Mismatch(format!(
            "shift bound differs: {} vs {}",
            small.shift_bound, large.shift_bound
        )));
    }
    if small.finite {
        let mut out = small.clone();
        out.stable = true;
        return Ok(out);
    }
    let margin = large.window - small.window;
    let need = small.shift_bound.max(1);
    if margin < need {
        return Err(SolverError::Mismatch(format!(
            "larger window must exceed the smaller by at least {need} (got {margin})"
        )));
    }
    let restricted: Vec<LinMapWindow> = large
        .basis
        .iter()
        .map(|m| m.restrict(|s| small.in_window(s), small.window))
        .collect();
    let domain: Vec<BasisIndex> = match restricted.first() {
        Some(m) => m.sources().copied().collect(),
        None => Vec::new(),
    };
    // Columns in canonical (source, target) order so the RREF basis is
    // independent of how the large basis happened to be chosen.
    let mut keys: Vec<(BasisIndex, BasisIndex)> = restricted
        .iter()
        .flat_map(|m| m.entries().map(|(k, _)| k))
        .collect();
    keys.sort();
    keys.dedup();
    let col: BTreeMap<_, _> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let mut rr = RowReducer::new();
    for m in &restricted {
        rr.insert(m.entries().map(|(k, c)| (col[&k], c.clone())).collect());
    }
    let basis = rr
        .rref()
        .into_iter()
        .map(|(_, row)| {
            let mut images: BTreeMap<BasisIndex, Element> =
                domain.iter().map(|s| (*s, Element::zero())).collect();
            for (c, v) in row {
                let (s, t) = keys[c];
                images.entry(s).or_default().add_term(t, &v);
            }
            LinMapWindow::new(images, small.window, small.shift_bound)
        })
        .collect();
    Ok(SolutionSpace {
        stable: true,
        basis,
        ..small.clone()
    })
}

/// Whether the space is spanned by a nonzero multiple of the identity.
pub fn is_trivial_space(space: &SolutionSpace) -> bool {
    space.dimension() == 1 && space.basis[0].scalar_multiple_of_identity().is_some()
}
