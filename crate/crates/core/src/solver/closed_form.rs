use std::collections::BTreeMap;

use super::{LinMapWindow, SolverError};
use crate::algebras::{AlgebraSpec, Kind};
use crate::basis::{BasisIndex, Family};
use crate::element::Element;
use crate::scalar::Scalar;

/// Explicit candidate maps, materialized on a window by [`closed_form_map`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedForm {
    /// Witt or Laurent: `e_i ↦ Σ_j α_j e_{i+j}`, keyed by shift `j`.
    WittShift(BTreeMap<i64, Scalar>),
    /// `W(a,b)`: `L_m ↦ Σ_j α_j L_{m+j}`, `I_m ↦ Σ_j α_j I_{m+j}`.
    WabEven(BTreeMap<i64, Scalar>),
    /// `W(a,b)`: `L_m ↦ Σ_j β_j I_{m+j}`, `I_m ↦ 0`.
    WabOdd(BTreeMap<i64, Scalar>),
    /// Thin algebra: `e_1 ↦ Σ α_i e_i`, `e_2 ↦ Σ β_i e_i` and for `n ≥ 3`
    /// `e_n ↦ (1 - 2^{2-n}) α_1 e_n + 2^{2-n} L^{n-2} φ(e_2)` with
    /// `L = ad e_1`. Keyed by basis degree.
    ThinCandidate {
        alpha: BTreeMap<i64, Scalar>,
        beta: BTreeMap<i64, Scalar>,
    },
    /// Solvable algebra: `e_1 ↦ α e_1 + Σ_{i≥2} α_i e_i`, `e_n ↦ α e_n`.
    SolvableCandidate {
        alpha: Scalar,
        tail: BTreeMap<i64, Scalar>,
    },
}

impl ClosedForm {
    pub fn family_name(&self) -> &'static str {
        match self {
            ClosedForm::WittShift(_) => "witt_shift",
            ClosedForm::WabEven(_) => "wab_even",
            ClosedForm::WabOdd(_) => "wab_odd",
            ClosedForm::ThinCandidate { .. } => "thin_candidate",
            ClosedForm::SolvableCandidate { .. } => "solvable_candidate",
        }
    }
}

fn shifted(family: Family, degree2: i64, coeffs: &BTreeMap<i64, Scalar>) -> Element {
    coeffs
        .iter()
        .map(|(j, c)| (BasisIndex::new(family, degree2 + 2 * j), c.clone()))
        .collect()
}

fn by_degree(
    alg: &AlgebraSpec,
    coeffs: &BTreeMap<i64, Scalar>,
) -> Result<Element, SolverError> {
    coeffs
        .iter()
        .map(|(i, c)| {
            let idx = BasisIndex::int(Family::E, *i);
            if alg.valid_index(&idx) {
                Ok((idx, c.clone()))
            } else {
                Err(SolverError::InvalidCoefficient(idx.to_string()))
            }
        })
        .collect()
}

/// `[e_1, x]` in the thin algebra.
fn ad_e1(alg: &AlgebraSpec, x: &Element) -> Element {
    let mut out = Element::zero();
    for (idx, c) in x.iter() {
        out.add_scaled(c, &alg.rule(&[BasisIndex::int(Family::E, 1), *idx]));
    }
    out
}

/// The candidate on the sources of window `w` of `alg`. The reported shift
/// bound is the largest degree shift actually used.
pub fn closed_form_map(
    form: &ClosedForm,
    alg: &AlgebraSpec,
    w: i64,
) -> Result<LinMapWindow, SolverError> {
    let mismatch = || SolverError::FamilyMismatch {
        family: form.family_name().into(),
        algebra: alg.label(),
    };
    let sources = alg.window_basis(w);
    let mut images: BTreeMap<BasisIndex, Element> = BTreeMap::new();
    match (form, &alg.kind) {
        (ClosedForm::WittShift(a), Kind::Witt | Kind::Laurent) => {
            for s in &sources {
                images.insert(*s, shifted(Family::E, s.degree2, a));
            }
        }
        (ClosedForm::WabEven(a), Kind::Wab { .. } | Kind::ExtendedLaurent { .. }) => {
            for s in &sources {
                images.insert(*s, shifted(s.family, s.degree2, a));
            }
        }
        (ClosedForm::WabOdd(b), Kind::Wab { .. } | Kind::ExtendedLaurent { .. }) => {
            for s in &sources {
                let img = match s.family {
                    Family::L => shifted(Family::I, s.degree2, b),
                    _ => Element::zero(),
                };
                images.insert(*s, img);
            }
        }
        (ClosedForm::ThinCandidate { alpha, beta }, Kind::Thin) => {
            let phi1 = by_degree(alg, alpha)?;
            let phi2 = by_degree(alg, beta)?;
            let alpha1 = alpha.get(&1).cloned().unwrap_or_default();
            // L^{level} φ(e_2), advanced as sources arrive in increasing degree.
            let mut pushed = phi2.clone();
            let mut level = 0;
            for s in &sources {
                let n = s.degree();
                let img = match n {
                    1 => phi1.clone(),
                    2 => phi2.clone(),
                    _ => {
                        while level < n - 2 {
                            pushed = ad_e1(alg, &pushed);
                            level += 1;
                        }
                        let p = Scalar::pow2(2 - n);
                        let mut img = Element::term(&(Scalar::one() - &p) * &alpha1, *s);
                        img.add_scaled(&p, &pushed);
                        img
                    }
                };
                images.insert(*s, img);
            }
        }
        (ClosedForm::SolvableCandidate { alpha, tail }, Kind::Solvable) => {
            let mut head = by_degree(alg, tail)?;
            if head.support().any(|i| i.degree() < 2) {
                return Err(SolverError::InvalidCoefficient("e_1 in tail".into()));
            }
            head.add_term(BasisIndex::int(Family::E, 1), alpha);
            for s in &sources {
                let img = if s.degree() == 1 {
                    head.clone()
                } else {
                    Element::term(alpha.clone(), *s)
                };
                images.insert(*s, img);
            }
        }
        _ => return Err(mismatch()),
    }
    let shift = images
        .iter()
        .flat_map(|(s, img)| img.support().map(move |t| (t.degree2 - s.degree2).abs()))
        .max()
        .unwrap_or(0);
    Ok(LinMapWindow::new(images, w, (shift + 1) / 2))
}
