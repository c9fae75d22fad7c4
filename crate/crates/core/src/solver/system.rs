use std::collections::{BTreeMap, HashMap};

use super::{window_tuples, LinMapWindow, SolutionSpace, SolverError};
use crate::algebras::AlgebraSpec;
use crate::basis::{BasisIndex, Parity};
use crate::element::Element;
use crate::linalg::{RowReducer, SparseRow};
use crate::scalar::Scalar;

/// Unknown image coefficients of a windowed map of fixed parity: one per
/// `(source, target)` pair with the target within the shift bound.
#[derive(Debug, Clone)]
pub struct Unknowns {
    parity: Parity,
    coords: Vec<(BasisIndex, BasisIndex)>,
    index: HashMap<(BasisIndex, BasisIndex), usize>,
    by_source: BTreeMap<BasisIndex, Vec<(BasisIndex, usize)>>,
}

impl Unknowns {
    /// Unknowns for a map of parity `parity` on window `w` with shift bound
    /// `s`. Finite algebras ignore both and allow every target.
    pub fn new(alg: &AlgebraSpec, parity: Parity, w: i64, s: i64) -> Self {
        let mut coords = Vec::new();
        let mut by_source = BTreeMap::new();
        for src in alg.window_basis(w) {
            let want = src.parity() + parity;
            let targets = match alg.finite_basis() {
                Some(b) => b,
                None => alg.indices_in_range(src.degree2 - 2 * s, src.degree2 + 2 * s),
            };
            let mut slots = Vec::new();
            for t in targets.into_iter().filter(|t| t.parity() == want) {
                slots.push((t, coords.len()));
                coords.push((src, t));
            }
            by_source.insert(src, slots);
        }
        let index = coords.iter().enumerate().map(|(k, c)| (*c, k)).collect();
        Unknowns {
            parity,
            coords,
            index,
            by_source,
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn coord(&self, k: usize) -> (BasisIndex, BasisIndex) {
        self.coords[k]
    }

    pub fn position(&self, source: BasisIndex, target: BasisIndex) -> Option<usize> {
        self.index.get(&(source, target)).copied()
    }

    /// The map with coefficient vector `v`; every source is in the domain.
    pub fn to_map(&self, v: &SparseRow, w: i64, s: i64) -> LinMapWindow {
        let mut images: BTreeMap<BasisIndex, Element> =
            self.by_source.keys().map(|k| (*k, Element::zero())).collect();
        for (k, c) in v {
            let (src, tgt) = self.coords[*k];
            images.get_mut(&src).expect("known source").add_term(tgt, c);
        }
        LinMapWindow::new(images, w, s)
    }
}

/// Linear equations imposed by one tuple: one row per output basis vector
/// with a nonzero coefficient.
pub fn rows_for_tuple(
    alg: &AlgebraSpec,
    unknowns: &Unknowns,
    delta: &Scalar,
    tuple: &[BasisIndex],
) -> Vec<(BasisIndex, SparseRow)> {
    let mut sym: BTreeMap<BasisIndex, SparseRow> = BTreeMap::new();
    let mut add = |out: &BasisIndex, var: usize, c: Scalar| {
        let row = sym.entry(*out).or_default();
        let slot = row.entry(var).or_insert_with(Scalar::zero);
        *slot += &c;
    };
    let no_slots = Vec::new();
    let slots = |idx: &BasisIndex| unknowns.by_source.get(idx).unwrap_or(&no_slots);
    for (t, ct) in alg.rule(tuple).iter() {
        for (u, var) in slots(t) {
            add(u, *var, ct.clone());
        }
    }
    let mut prefix = Parity::Even;
    for (i, x) in tuple.iter().enumerate() {
        let sign = Scalar::sign(unknowns.parity.koszul(prefix));
        let factor = -(&sign * delta);
        for (u, var) in slots(x) {
            let mut args = tuple.to_vec();
            args[i] = *u;
            for (v, cv) in alg.rule(&args).iter() {
                add(v, *var, &factor * cv);
            }
        }
        prefix = prefix + x.parity();
    }
    sym.into_iter()
        .map(|(k, mut row)| {
            row.retain(|_, c| !c.is_zero());
            (k, row)
        })
        .filter(|(_, row)| !row.is_empty())
        .collect()
}

fn solve_parity(
    alg: &AlgebraSpec,
    delta: &Scalar,
    parity: Parity,
    w: i64,
    s: i64,
    tuples: &[Vec<BasisIndex>],
) -> Vec<LinMapWindow> {
    let unknowns = Unknowns::new(alg, parity, w, s);
    let mut rows: Vec<Vec<(usize, Scalar)>> = tuples
        .iter()
        .flat_map(|t| rows_for_tuple(alg, &unknowns, delta, t))
        .map(|(_, row)| row.into_iter().collect())
        .collect();
    // Short rows first keeps fill-in low; the full key keeps the order fixed.
    rows.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    rows.dedup();
    let mut rr = RowReducer::new();
    for row in rows {
        rr.insert(row.into_iter().collect());
    }
    rr.nullspace(unknowns.len())
        .iter()
        .map(|v| unknowns.to_map(v, w, s))
        .collect()
}

/// All δ-derivations on window `w` with shift bound `s` (even maps, then odd
/// ones for superalgebras). Infinite algebras need `s < w`. Finite algebras
/// are solved in full and reported as stable.
pub fn solve_delta_derivations(
    alg: &AlgebraSpec,
    delta: &Scalar,
    w: i64,
    s: i64,
) -> Result<SolutionSpace, SolverError> {
    if w < 0 || s < 0 {
        return Err(SolverError::Mismatch(format!(
            "window and shift must be non-negative (got {w}, {s})"
        )));
    }
    let finite = alg.is_finite();
    if !finite && s >= w {
        return Err(SolverError::Mismatch(format!(
            "shift bound must be below the window (got S = {s}, W = {w})"
        )));
    }
    let tuples = window_tuples(alg, w);
    let mut basis = solve_parity(alg, delta, Parity::Even, w, s, &tuples);
    if alg.is_super() {
        basis.extend(solve_parity(alg, delta, Parity::Odd, w, s, &tuples));
    }
    Ok(SolutionSpace::new(alg, delta.clone(), w, s, basis, finite))
}

/// Solves on windows `w` and `w + s + 2` and keeps what survives the larger
/// window.
pub fn solve_stabilized(
    alg: &AlgebraSpec,
    delta: &Scalar,
    w: i64,
    s: i64,
) -> Result<SolutionSpace, SolverError> {
    let small = solve_delta_derivations(alg, delta, w, s)?;
    if alg.is_finite() {
        return Ok(small);
    }
    let large = solve_delta_derivations(alg, delta, w + s + 2, s)?;
    super::stabilize(&small, &large)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{make_algebra, Params};
    use crate::basis::Family;

    #[test]
    fn unknown_layout() {
        let w = make_algebra("witt", &Params::new()).unwrap();
        let u = Unknowns::new(&w, Parity::Even, 2, 1);
        // Sources e_-2..e_2, each with targets at shift -1, 0, 1.
        assert_eq!(u.len(), 15);
        let e = |k| BasisIndex::int(Family::E, k);
        assert_eq!(u.coord(0), (e(-2), e(-3)));
        assert!(u.position(e(0), e(1)).is_some());
        assert!(u.position(e(0), e(2)).is_none());
    }

    #[test]
    fn rows_match_residual() {
        // Each row, evaluated at a random-free explicit map, equals the
        // residual coefficient computed directly.
        let w = make_algebra("witt", &Params::new()).unwrap();
        let u = Unknowns::new(&w, Parity::Even, 6, 1);
        let e = |k| BasisIndex::int(Family::E, k);
        let v: SparseRow = (0..u.len())
            .map(|k| (k, Scalar::from_int((k as i64 * 7) % 5 - 2)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let phi = u.to_map(&v, 6, 1);
        let delta = Scalar::ratio(1, 3);
        for t in [[e(1), e(2)], [e(-3), e(2)], [e(0), e(5)]] {
            let direct = super::super::delta_residual(&w, &phi, &delta, &t).unwrap();
            let mut from_rows = Element::zero();
            for (out, row) in rows_for_tuple(&w, &u, &delta, &t) {
                let val = row
                    .iter()
                    .fold(Scalar::zero(), |acc, (k, c)| acc + &(c * &v.get(k).cloned().unwrap_or_default()));
                from_rows.add_term(out, &val);
            }
            assert_eq!(direct, from_rows);
        }
    }
}
