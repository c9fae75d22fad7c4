//! Windowed δ-derivation spaces.
//!
//! An infinite graded algebra cannot be handled whole, so a candidate map is
//! posed on a window: every basis vector of degree at most `W` in absolute
//! value (plus central generators) is a source, and each source may map to
//! anything within `S` degrees of itself. The δ-derivation condition is
//! imposed on every tuple whose arguments and bracket output stay inside the
//! window, which yields an exact linear system in the image coefficients.
//! Its nullspace is the windowed solution space; [`stabilize`] then removes
//! solutions that exist only because of the window boundary.

mod closed_form;
mod map;
mod space;
mod system;

use thiserror::Error;

use crate::algebras::{AlgebraError, AlgebraSpec};
use crate::basis::{BasisIndex, Parity};
use crate::element::Element;
use crate::scalar::Scalar;

pub use closed_form::{closed_form_map, ClosedForm};
pub use map::{LinMapWindow, MapParity};
pub use space::{is_trivial_space, stabilize, ImageJson, SolutionSpace, SolutionSpaceJson};
pub use system::{rows_for_tuple, solve_delta_derivations, solve_stabilized, Unknowns};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("tuple ({tuple}) leaves the window: {missing} has no image")]
    TupleEscapesWindow { tuple: String, missing: String },
    #[error("mismatched configuration: {0}")]
    Mismatch(String),
    #[error("closed form `{family}` does not apply to {algebra}")]
    FamilyMismatch { family: String, algebra: String },
    #[error("coefficient index {0} gives an invalid basis vector")]
    InvalidCoefficient(String),
}

fn render_tuple(args: &[BasisIndex]) -> String {
    args.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// `φ[x_1..x_n] - δ Σ_i ε_i [x_1, .., φ(x_i), .., x_n]`, where for the part
/// of `φ` of parity `p` the Koszul sign is `ε_i = (-1)^{p(|x_1|+..+|x_{i-1}|)}`.
///
/// Zero iff `φ` satisfies the δ-derivation condition on this tuple. A tuple
/// whose arguments or bracket output have no image under `φ` is an error.
pub fn delta_residual(
    alg: &AlgebraSpec,
    phi: &LinMapWindow,
    delta: &Scalar,
    args: &[BasisIndex],
) -> Result<Element, SolverError> {
    let bracket = alg.bracket_basis(args)?;
    let escape = |idx: &BasisIndex| SolverError::TupleEscapesWindow {
        tuple: render_tuple(args),
        missing: idx.to_string(),
    };
    for idx in args.iter().chain(bracket.support()) {
        if phi.image(idx).is_none() {
            return Err(escape(idx));
        }
    }
    let mut out = Element::zero();
    for part in [Parity::Even, Parity::Odd] {
        let phi_p = |idx: &BasisIndex| phi.parity_part(idx, part);
        for (t, c) in bracket.iter() {
            out.add_scaled(c, &phi_p(t));
        }
        let mut prefix = Parity::Even;
        for (i, x) in args.iter().enumerate() {
            let image = phi_p(x);
            if !image.is_zero() {
                let mut slots: Vec<Element> = args.iter().map(|a| Element::basis(*a)).collect();
                slots[i] = image;
                let term = alg.bracket_unchecked(&slots);
                let sign = Scalar::sign(part.koszul(prefix));
                out.add_scaled(&-(&sign * delta), &term);
            }
            prefix = prefix + x.parity();
        }
    }
    Ok(out)
}

/// Basis tuples on which the condition is imposed for window `w`.
///
/// Binary algebras use unordered pairs (with repetition, needed for odd
/// generators); n-ary ones use sets of `n` distinct vectors. Other orderings
/// give equivalent equations by (super) skew-symmetry. A tuple is kept iff
/// its arguments and every output term are window sources.
pub fn window_tuples(alg: &AlgebraSpec, w: i64) -> Vec<Vec<BasisIndex>> {
    let sources = alg.window_basis(w);
    let inside = |idx: &BasisIndex| sources.binary_search(idx).is_ok();
    let n = alg.arity();
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(n);
    combos(&sources, n, 0, n == 2, &mut tuple, &mut |t| {
        if alg.rule(t).support().all(&inside) {
            out.push(t.to_vec());
        }
    });
    out
}

pub(crate) fn combos(
    pool: &[BasisIndex],
    n: usize,
    start: usize,
    repeat: bool,
    tuple: &mut Vec<BasisIndex>,
    f: &mut impl FnMut(&[BasisIndex]),
) {
    if tuple.len() == n {
        f(tuple);
        return;
    }
    for k in start..pool.len() {
        tuple.push(pool[k]);
        combos(pool, n, if repeat { k } else { k + 1 }, repeat, tuple, f);
        tuple.pop();
    }
}

/// Re-checks every basis map of `space` against [`delta_residual`] on every
/// window tuple. Returns the number of (map, tuple) checks, or the first
/// failure.
pub fn verify_space(
    alg: &AlgebraSpec,
    space: &SolutionSpace,
) -> Result<usize, (usize, Vec<BasisIndex>, Element)> {
    let tuples = window_tuples(alg, space.window());
    let mut checked = 0;
    for (k, phi) in space.basis().iter().enumerate() {
        for t in &tuples {
            let r = delta_residual(alg, phi, space.delta(), t)
                .unwrap_or_else(|e| panic!("window tuple rejected: {e}"));
            if !r.is_zero() {
                return Err((k, t.clone(), r));
            }
            checked += 1;
        }
    }
    Ok(checked)
}
