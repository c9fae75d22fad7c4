//! Finite-dimensional algebras: explicit binary tables and direct sums.

use std::collections::BTreeMap;

use super::{AlgebraError, AlgebraSpec, Kind, Params};
use crate::basis::{BasisIndex, Family};
use crate::element::Element;
use crate::scalar::Scalar;

/// Explicit binary bracket table on a finite basis.
///
/// Stored for both argument orders; the mirrored entry follows super
/// antisymmetry `[y,x] = -(-1)^{|x||y|} [x,y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTable {
    basis: Vec<BasisIndex>,
    products: BTreeMap<(BasisIndex, BasisIndex), Element>,
    graded: bool,
}

impl FiniteTable {
    /// Builds a table from brackets given for one order of each pair.
    /// Pairs absent from `entries` bracket to zero.
    pub fn new(
        mut basis: Vec<BasisIndex>,
        entries: impl IntoIterator<Item = (BasisIndex, BasisIndex, Element)>,
        graded: bool,
    ) -> Result<Self, AlgebraError> {
        basis.sort();
        basis.dedup();
        let mut products = BTreeMap::new();
        for (x, y, value) in entries {
            for idx in [x, y].iter().chain(value.support()) {
                if basis.binary_search(idx).is_err() {
                    return Err(AlgebraError::Table(format!("{idx} is not a basis vector")));
                }
            }
            if x == y && !x.parity().is_odd() && !value.is_zero() {
                return Err(AlgebraError::Table(format!("[{x},{x}] must vanish")));
            }
            let mirror = if x.parity().koszul(y.parity()) {
                value.clone()
            } else {
                -&value
            };
            if let Some(prev) = products.get(&(x, y)) {
                if prev != &value {
                    return Err(AlgebraError::Table(format!(
                        "conflicting entries for [{x},{y}]"
                    )));
                }
            }
            if value.is_zero() {
                continue;
            }
            products.insert((x, y), value);
            products.insert((y, x), mirror);
        }
        Ok(FiniteTable {
            basis,
            products,
            graded,
        })
    }

    pub fn basis(&self) -> &[BasisIndex] {
        &self.basis
    }

    pub fn contains(&self, idx: &BasisIndex) -> bool {
        self.basis.binary_search(idx).is_ok()
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn bracket(&self, x: BasisIndex, y: BasisIndex) -> Element {
        self.products.get(&(x, y)).cloned().unwrap_or_default()
    }
}

fn e(k: i64) -> BasisIndex {
    BasisIndex::int(Family::E, k)
}

fn i(k: i64) -> BasisIndex {
    BasisIndex::int(Family::I, k)
}

fn scaled(c: i64, idx: BasisIndex) -> Element {
    Element::term(Scalar::from_int(c), idx)
}

/// `sl2` with `e = e_2`, `h = e_0`, `f = e_-2`, graded by `ad h`.
fn sl2_entries() -> Vec<(BasisIndex, BasisIndex, Element)> {
    vec![
        (e(2), e(-2), scaled(1, e(0))),
        (e(0), e(2), scaled(2, e(2))),
        (e(0), e(-2), scaled(-2, e(-2))),
    ]
}

pub(super) fn sl2() -> FiniteTable {
    FiniteTable::new(vec![e(-2), e(0), e(2)], sl2_entries(), true).expect("sl2 table")
}

/// Heisenberg algebra `p = I_1`, `q = I_-1`, `z = c` with `[p, q] = z`.
pub(super) fn heisenberg() -> FiniteTable {
    FiniteTable::new(
        vec![i(-1), i(1), BasisIndex::central()],
        [(i(1), i(-1), scaled(1, BasisIndex::central()))],
        true,
    )
    .expect("heisenberg table")
}

/// Schrödinger algebra `sl2 ⋉ H` on `{e, f, h, p, q, z}`:
/// `[h,p] = p`, `[h,q] = -q`, `[e,q] = p`, `[f,p] = q`, `[p,q] = z`.
pub(super) fn schrodinger() -> FiniteTable {
    let mut entries = sl2_entries();
    entries.extend([
        (e(0), i(1), scaled(1, i(1))),
        (e(0), i(-1), scaled(-1, i(-1))),
        (e(2), i(-1), scaled(1, i(1))),
        (e(-2), i(1), scaled(1, i(-1))),
        (i(1), i(-1), scaled(1, BasisIndex::central())),
    ]);
    FiniteTable::new(
        vec![e(-2), e(0), e(2), i(-1), i(1), BasisIndex::central()],
        entries,
        true,
    )
    .expect("schrodinger table")
}

/// Summands of a direct sum with the family relabelling applied to each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct DirectSumParts {
    parts: Vec<(AlgebraSpec, BTreeMap<Family, Family>)>,
}

impl DirectSumParts {
    /// Summand holding `idx` and the index in that summand's own labels.
    pub(crate) fn locate(&self, idx: &BasisIndex) -> Option<(usize, BasisIndex)> {
        self.parts.iter().enumerate().find_map(|(k, (alg, map))| {
            let orig = map
                .iter()
                .find(|(_, to)| **to == idx.family)
                .map(|(from, _)| *from)?;
            let local = BasisIndex::new(orig, idx.degree2);
            alg.valid_index(&local).then_some((k, local))
        })
    }

    fn relabel(&self, k: usize, x: &Element) -> Element {
        let map = &self.parts[k].1;
        x.iter()
            .map(|(idx, c)| (BasisIndex::new(map[&idx.family], idx.degree2), c.clone()))
            .collect()
    }

    pub(crate) fn basis(&self) -> Vec<BasisIndex> {
        let mut out: Vec<BasisIndex> = self
            .parts
            .iter()
            .flat_map(|(alg, map)| {
                alg.finite_basis()
                    .unwrap_or_default()
                    .into_iter()
                    .map(|b| BasisIndex::new(map[&b.family], b.degree2))
            })
            .collect();
        out.sort();
        out
    }

    pub(crate) fn is_super(&self) -> bool {
        self.parts.iter().any(|(a, _)| a.is_super())
    }

    pub(crate) fn weight(&self, idx: &BasisIndex) -> Option<i64> {
        let (k, local) = self.locate(idx)?;
        self.parts[k].0.weight(&local)
    }

    pub(crate) fn rule(&self, args: &[BasisIndex]) -> Element {
        let located: Vec<(usize, BasisIndex)> = args
            .iter()
            .map(|a| self.locate(a).expect("validated index"))
            .collect();
        let k = located[0].0;
        if located.iter().any(|(j, _)| *j != k) {
            return Element::zero();
        }
        let local: Vec<BasisIndex> = located.into_iter().map(|(_, b)| b).collect();
        self.relabel(k, &self.parts[k].0.rule(&local))
    }
}

/// Direct sum `A ⊕ B` of finite-dimensional algebras of the same arity and
/// sector. `A` keeps its labels; each family of `B` is moved to a family
/// unused by `A` of the same parity.
pub fn direct_sum(a: &AlgebraSpec, b: &AlgebraSpec) -> Result<AlgebraSpec, AlgebraError> {
    for x in [a, b] {
        if !x.is_finite() {
            return Err(AlgebraError::InfiniteOperand(x.label()));
        }
    }
    if a.arity() != b.arity() {
        return Err(AlgebraError::ArityMismatch(a.arity(), b.arity()));
    }
    if a.sector() != b.sector() {
        return Err(AlgebraError::SectorMismatch);
    }
    let mut used: Vec<Family> = a.families();
    let mut map_b = BTreeMap::new();
    for fam in b.families() {
        let preferred = std::iter::once(fam).chain(Family::ALL);
        let target = preferred
            .filter(|t| !used.contains(t))
            .filter(|t| t.parity() == fam.parity())
            // Only the central family may land on `c`, which is pinned to degree 0.
            .find(|t| *t != Family::C || fam == Family::C)
            .ok_or_else(|| AlgebraError::RelabelExhausted(b.label()))?;
        used.push(target);
        map_b.insert(fam, target);
    }
    let map_a: BTreeMap<Family, Family> = a.families().into_iter().map(|f| (f, f)).collect();
    let mut params = Params::new();
    for (prefix, x) in [("left", a), ("right", b)] {
        for (k, v) in x.params() {
            params.insert(format!("{prefix}.{k}"), v.clone());
        }
    }
    let parts = DirectSumParts {
        parts: vec![(a.clone(), map_a), (b.clone(), map_b)],
    };
    Ok(AlgebraSpec::from_parts(
        format!("{}+{}", a.name(), b.name()),
        a.arity(),
        a.sector(),
        params,
        Kind::DirectSum(Box::new(parts)),
    ))
}
