//! Built-in algebras as lazy structure-constant rules.
//!
//! Every infinite algebra is evaluated on demand from its closed-form
//! brackets; nothing is truncated here. Windows are a solver concern.

mod families;
mod finite;
mod identities;
mod table_json;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::{BasisIndex, Family};
use crate::element::Element;
use crate::scalar::Scalar;

pub use finite::{direct_sum, FiniteTable};
pub use identities::{
    antisymmetry_residual, identity_residual, identity_scan, identity_tuple_len, IdentityScan,
};
pub use table_json::StructureTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("algebra `{algebra}` requires parameter `{key}`")]
    MissingParam { algebra: String, key: String },
    #[error("algebra `{algebra}` does not take parameter `{key}`")]
    UnexpectedParam { algebra: String, key: String },
    #[error("bad value `{value}` for parameter `{key}`: {reason}")]
    BadParam {
        key: String,
        value: String,
        reason: String,
    },
    #[error("index {index} not valid in {algebra}")]
    InvalidIndex { algebra: String, index: String },
    #[error("{algebra} is {expected}-ary but got {got} arguments")]
    WrongArity {
        algebra: String,
        expected: usize,
        got: usize,
    },
    #[error("direct sum needs finite-dimensional operands; {0} is infinite")]
    InfiniteOperand(String),
    #[error("direct sum operands differ in arity ({0} vs {1})")]
    ArityMismatch(usize, usize),
    #[error("direct sum operands differ in sector")]
    SectorMismatch,
    #[error("not enough free basis families to relabel {0}")]
    RelabelExhausted(String),
    #[error("structure table: {0}")]
    Table(String),
}

/// Grading sector of the odd generators of a superconformal algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sector {
    None,
    /// Odd generators carry integer degrees.
    Ramond,
    /// Odd generators carry half-integer degrees.
    NeveuSchwarz,
}

impl Sector {
    pub fn as_str(self) -> &'static str {
        match self {
            Sector::None => "none",
            Sector::Ramond => "ramond",
            Sector::NeveuSchwarz => "neveu_schwarz",
        }
    }

    fn parse(value: &str) -> Result<Sector, AlgebraError> {
        match value.to_ascii_lowercase().as_str() {
            "ramond" | "r" => Ok(Sector::Ramond),
            "neveu_schwarz" | "neveu-schwarz" | "ns" => Ok(Sector::NeveuSchwarz),
            _ => Err(AlgebraError::BadParam {
                key: "sector".into(),
                value: value.into(),
                reason: "expected `ramond` or `neveu_schwarz`".into(),
            }),
        }
    }

    /// Whether an odd generator may sit at doubled degree `degree2`.
    fn admits_odd_degree(self, degree2: i64) -> bool {
        match self {
            Sector::Ramond => degree2 % 2 == 0,
            Sector::NeveuSchwarz => degree2 % 2 != 0,
            Sector::None => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Kind {
    Witt,
    Laurent,
    Wab { a: Scalar, b: Scalar },
    ExtendedLaurent { a: Scalar },
    Virasoro,
    SuperVirasoro,
    N2,
    Thin,
    Solvable,
    NarySimple { n: usize },
    Table(FiniteTable),
    DirectSum(Box<finite::DirectSumParts>),
}

/// A (super, n-ary) algebra given by its bracket rule on basis tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    name: String,
    arity: usize,
    sector: Sector,
    params: BTreeMap<String, String>,
    pub(crate) kind: Kind,
}

/// Names accepted by [`make_algebra`], with a one-line description each.
pub const ALGEBRA_NAMES: [(&str, &str); 13] = [
    ("witt", "Witt algebra [e_i,e_j] = (i-j)e_{i+j}"),
    ("laurent", "Laurent polynomials e_i e_j = e_{i+j}, with the Witt bracket"),
    ("wab", "W(a,b): Witt algebra plus tensor density module I(a,b); params a, b"),
    ("virasoro", "Virasoro algebra, central extension of Witt"),
    ("svir", "N=1 super Virasoro algebra; param sector"),
    ("n2sca", "N=2 superconformal algebra; param sector"),
    ("thin", "thin Lie algebra [e_1,e_n] = e_{n+1}, n > 1"),
    ("solvable", "solvable algebra [e_1,e_n] = e_n, n >= 2"),
    ("extended_laurent", "extended Laurent polynomials with the W(a,-1) bracket; optional param a"),
    ("sl2", "sl(2) with e = e_2, h = e_0, f = e_-2"),
    ("heisenberg", "3-dim Heisenberg algebra [I_1, I_-1] = c"),
    ("schrodinger", "Schrodinger algebra sl(2) + Heisenberg"),
    ("nary_simple", "simple (n+1)-dim n-Lie algebra A_{n+1}; param n >= 3"),
];

/// Parameter map for [`make_algebra`]; values are parsed per key.
pub type Params = BTreeMap<String, String>;

fn take_scalar(
    name: &str,
    params: &mut Params,
    key: &str,
    default: Option<Scalar>,
) -> Result<Scalar, AlgebraError> {
    match params.remove(key) {
        Some(v) => v.parse::<Scalar>().map_err(|e| AlgebraError::BadParam {
            key: key.into(),
            value: v.clone(),
            reason: e.to_string(),
        }),
        None => default.ok_or_else(|| AlgebraError::MissingParam {
            algebra: name.into(),
            key: key.into(),
        }),
    }
}

/// Builds a named algebra. Unknown names and missing or surplus parameters
/// are errors.
pub fn make_algebra(name: &str, params: &Params) -> Result<AlgebraSpec, AlgebraError> {
    let mut rest = params.clone();
    let mut shown = Params::new();
    let (arity, sector, kind) = match name {
        "witt" => (2, Sector::None, Kind::Witt),
        "laurent" => (2, Sector::None, Kind::Laurent),
        "wab" => {
            let a = take_scalar(name, &mut rest, "a", None)?;
            let b = take_scalar(name, &mut rest, "b", None)?;
            shown.insert("a".into(), a.to_string());
            shown.insert("b".into(), b.to_string());
            (2, Sector::None, Kind::Wab { a, b })
        }
        "extended_laurent" => {
            let a = take_scalar(name, &mut rest, "a", Some(Scalar::zero()))?;
            shown.insert("a".into(), a.to_string());
            (2, Sector::None, Kind::ExtendedLaurent { a })
        }
        "virasoro" => (2, Sector::None, Kind::Virasoro),
        "svir" | "n2sca" => {
            let raw = rest.remove("sector").ok_or_else(|| AlgebraError::MissingParam {
                algebra: name.into(),
                key: "sector".into(),
            })?;
            let sector = Sector::parse(&raw)?;
            shown.insert("sector".into(), sector.as_str().into());
            let kind = if name == "svir" {
                Kind::SuperVirasoro
            } else {
                Kind::N2
            };
            (2, sector, kind)
        }
        "thin" => (2, Sector::None, Kind::Thin),
        "solvable" => (2, Sector::None, Kind::Solvable),
        "sl2" => (2, Sector::None, Kind::Table(finite::sl2())),
        "heisenberg" => (2, Sector::None, Kind::Table(finite::heisenberg())),
        "schrodinger" => (2, Sector::None, Kind::Table(finite::schrodinger())),
        "nary_simple" => {
            let raw = rest.remove("n").ok_or_else(|| AlgebraError::MissingParam {
                algebra: name.into(),
                key: "n".into(),
            })?;
            let n: usize = raw.trim().parse().map_err(|_| AlgebraError::BadParam {
                key: "n".into(),
                value: raw.clone(),
                reason: "expected a positive integer".into(),
            })?;
            if n < 3 {
                return Err(AlgebraError::BadParam {
                    key: "n".into(),
                    value: raw,
                    reason: "n must be at least 3".into(),
                });
            }
            shown.insert("n".into(), n.to_string());
            (n, Sector::None, Kind::NarySimple { n })
        }
        other => return Err(AlgebraError::UnknownAlgebra(other.into())),
    };
    if let Some(key) = rest.keys().next() {
        return Err(AlgebraError::UnexpectedParam {
            algebra: name.into(),
            key: key.clone(),
        });
    }
    Ok(AlgebraSpec {
        name: name.into(),
        arity,
        sector,
        params: shown,
        kind,
    })
}

impl AlgebraSpec {
    pub(crate) fn from_parts(
        name: String,
        arity: usize,
        sector: Sector,
        params: Params,
        kind: Kind,
    ) -> Self {
        AlgebraSpec {
            name,
            arity,
            sector,
            params,
            kind,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    /// Normalised parameters, as they were interpreted.
    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Parameter `key` as a scalar, if present.
    pub fn param_scalar(&self, key: &str) -> Option<Scalar> {
        self.params.get(key).and_then(|v| v.parse().ok())
    }

    /// `name(k=v, ...)`, used in reports.
    pub fn label(&self) -> String {
        if self.params.is_empty() {
            self.name.clone()
        } else {
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{}({})", self.name, ps.join(", "))
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(
            self.kind,
            Kind::Table(_) | Kind::NarySimple { .. } | Kind::DirectSum(_)
        )
    }

    /// Whether the algebra has odd generators.
    pub fn is_super(&self) -> bool {
        match &self.kind {
            Kind::SuperVirasoro | Kind::N2 => true,
            Kind::Table(t) => t.basis().iter().any(|b| b.parity().is_odd()),
            Kind::DirectSum(parts) => parts.is_super(),
            _ => false,
        }
    }

    pub fn has_center_generator(&self) -> bool {
        matches!(
            self.kind,
            Kind::Virasoro | Kind::SuperVirasoro | Kind::N2
        )
    }

    pub fn has_assoc(&self) -> bool {
        matches!(self.kind, Kind::Laurent | Kind::ExtendedLaurent { .. })
    }

    /// Full basis of a finite-dimensional algebra, in canonical order.
    pub fn finite_basis(&self) -> Option<Vec<BasisIndex>> {
        match &self.kind {
            Kind::Table(t) => Some(t.basis().to_vec()),
            Kind::NarySimple { n } => Some((1..=*n as i64 + 1).map(|k| BasisIndex::int(Family::E, k)).collect()),
            Kind::DirectSum(parts) => Some(parts.basis()),
            _ => None,
        }
    }

    pub fn dimension(&self) -> Option<usize> {
        self.finite_basis().map(|b| b.len())
    }

    pub fn valid_index(&self, idx: &BasisIndex) -> bool {
        let even_int = idx.degree2 % 2 == 0;
        match &self.kind {
            Kind::Witt | Kind::Laurent => idx.family == Family::E && even_int,
            Kind::Wab { .. } | Kind::ExtendedLaurent { .. } => {
                matches!(idx.family, Family::L | Family::I) && even_int
            }
            Kind::Virasoro => match idx.family {
                Family::L => even_int,
                Family::C => idx.degree2 == 0,
                _ => false,
            },
            Kind::SuperVirasoro => match idx.family {
                Family::L => even_int,
                Family::C => idx.degree2 == 0,
                Family::G => self.sector.admits_odd_degree(idx.degree2),
                _ => false,
            },
            Kind::N2 => match idx.family {
                Family::L | Family::J => even_int,
                Family::C => idx.degree2 == 0,
                Family::Gplus | Family::Gminus => self.sector.admits_odd_degree(idx.degree2),
                _ => false,
            },
            Kind::Thin | Kind::Solvable => {
                idx.family == Family::E && even_int && idx.degree2 >= 2
            }
            Kind::NarySimple { n } => {
                idx.family == Family::E && even_int && (1..=*n as i64 + 1).contains(&idx.degree())
            }
            Kind::Table(t) => t.contains(idx),
            Kind::DirectSum(parts) => parts.locate(idx).is_some(),
        }
    }

    /// Valid indices with `lo2 <= degree2 <= hi2`, canonical order.
    pub fn indices_in_range(&self, lo2: i64, hi2: i64) -> Vec<BasisIndex> {
        if let Some(basis) = self.finite_basis() {
            return basis
                .into_iter()
                .filter(|b| (lo2..=hi2).contains(&b.degree2))
                .collect();
        }
        let families: &[Family] = match &self.kind {
            Kind::Witt | Kind::Laurent | Kind::Thin | Kind::Solvable => &[Family::E],
            Kind::Wab { .. } | Kind::ExtendedLaurent { .. } => &[Family::L, Family::I],
            Kind::Virasoro => &[Family::L, Family::C],
            Kind::SuperVirasoro => &[Family::L, Family::G, Family::C],
            Kind::N2 => &[Family::L, Family::J, Family::Gplus, Family::Gminus, Family::C],
            _ => unreachable!("finite kinds handled above"),
        };
        let mut out = Vec::new();
        for &family in families {
            if family == Family::C {
                if lo2 <= 0 && 0 <= hi2 {
                    out.push(BasisIndex::central());
                }
                continue;
            }
            for d2 in lo2..=hi2 {
                let idx = BasisIndex::new(family, d2);
                if self.valid_index(&idx) {
                    out.push(idx);
                }
            }
        }
        out
    }

    /// Basis vectors of degree at most `window` in absolute value (all of
    /// them for finite algebras). Central generators are always included.
    pub fn window_basis(&self, window: i64) -> Vec<BasisIndex> {
        match self.finite_basis() {
            Some(b) => b,
            None => self.indices_in_range(-2 * window, 2 * window),
        }
    }

    /// Grading weight (doubled) of a basis vector, or `None` when the algebra
    /// carries no grading (imported tables).
    ///
    /// This is `degree2` except for the solvable algebra, where `e_1` has
    /// weight 0, and the simple n-Lie algebras, which are concentrated in
    /// weight 0.
    pub fn weight(&self, idx: &BasisIndex) -> Option<i64> {
        match &self.kind {
            Kind::Solvable if idx.degree2 == 2 => Some(0),
            Kind::NarySimple { .. } => Some(0),
            Kind::Table(t) if !t.is_graded() => None,
            Kind::DirectSum(parts) => parts.weight(idx),
            _ => Some(if idx.is_central() { 0 } else { idx.degree2 }),
        }
    }

    fn check_index(&self, idx: &BasisIndex) -> Result<(), AlgebraError> {
        if self.valid_index(idx) {
            Ok(())
        } else {
            Err(AlgebraError::InvalidIndex {
                algebra: self.label(),
                index: idx.to_string(),
            })
        }
    }

    fn check_arity(&self, got: usize) -> Result<(), AlgebraError> {
        if got == self.arity {
            Ok(())
        } else {
            Err(AlgebraError::WrongArity {
                algebra: self.label(),
                expected: self.arity,
                got,
            })
        }
    }

    /// Bracket of basis vectors.
    pub fn bracket_basis(&self, args: &[BasisIndex]) -> Result<Element, AlgebraError> {
        self.check_arity(args.len())?;
        for a in args {
            self.check_index(a)?;
        }
        Ok(self.rule(args))
    }

    /// Bracket rule on valid basis tuples of the right length.
    pub(crate) fn rule(&self, args: &[BasisIndex]) -> Element {
        match &self.kind {
            Kind::Witt | Kind::Laurent => families::witt(args[0], args[1]),
            Kind::Wab { a, b } => families::wab(a, b, args[0], args[1]),
            Kind::ExtendedLaurent { a } => families::wab(a, &Scalar::from_int(-1), args[0], args[1]),
            Kind::Virasoro => families::virasoro(args[0], args[1]),
            Kind::SuperVirasoro => families::super_virasoro(args[0], args[1]),
            Kind::N2 => families::n2(args[0], args[1]),
            Kind::Thin => families::thin(args[0], args[1]),
            Kind::Solvable => families::solvable(args[0], args[1]),
            Kind::NarySimple { n } => families::nary_simple(*n, args),
            Kind::Table(t) => t.bracket(args[0], args[1]),
            Kind::DirectSum(parts) => parts.rule(args),
        }
    }

    /// Multilinear extension of the bracket to elements.
    pub fn bracket(&self, args: &[Element]) -> Result<Element, AlgebraError> {
        self.check_arity(args.len())?;
        for x in args {
            for idx in x.support() {
                self.check_index(idx)?;
            }
        }
        Ok(self.bracket_unchecked(args))
    }

    pub(crate) fn bracket_unchecked(&self, args: &[Element]) -> Element {
        let mut out = Element::zero();
        let mut tuple = Vec::with_capacity(args.len());
        self.expand(args, &mut tuple, &Scalar::one(), &mut out);
        out
    }

    fn expand(
        &self,
        args: &[Element],
        tuple: &mut Vec<BasisIndex>,
        coeff: &Scalar,
        out: &mut Element,
    ) {
        let k = tuple.len();
        if k == args.len() {
            out.add_scaled(coeff, &self.rule(tuple));
            return;
        }
        for (idx, c) in args[k].iter() {
            tuple.push(*idx);
            self.expand(args, tuple, &(coeff * c), out);
            tuple.pop();
        }
    }

    /// Commutative associative product on basis pairs, for the algebras that
    /// carry one.
    pub fn assoc_basis(&self, x: BasisIndex, y: BasisIndex) -> Option<Element> {
        match &self.kind {
            Kind::Laurent => Some(Element::basis(BasisIndex::new(
                Family::E,
                x.degree2 + y.degree2,
            ))),
            Kind::ExtendedLaurent { .. } => Some(match (x.family, y.family) {
                (Family::L, Family::L) => {
                    Element::basis(BasisIndex::new(Family::L, x.degree2 + y.degree2))
                }
                (Family::I, Family::I) => Element::zero(),
                _ => Element::basis(BasisIndex::new(Family::I, x.degree2 + y.degree2)),
            }),
            _ => None,
        }
    }

    /// Bilinear extension of [`assoc_basis`](Self::assoc_basis).
    pub fn assoc(&self, x: &Element, y: &Element) -> Option<Element> {
        if !self.has_assoc() {
            return None;
        }
        let mut out = Element::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let p = self.assoc_basis(*a, *b)?;
                out.add_scaled(&(ca * cb), &p);
            }
        }
        Some(out)
    }

    /// Every family that occurs in some valid index.
    pub fn families(&self) -> Vec<Family> {
        let mut fs: Vec<Family> = self.window_basis(2).iter().map(|b| b.family).collect();
        fs.sort();
        fs.dedup();
        fs
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_element;

    fn params(kv: &[(&str, &str)]) -> Params {
        kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    fn alg(name: &str, kv: &[(&str, &str)]) -> AlgebraSpec {
        make_algebra(name, &params(kv)).unwrap()
    }

    fn br(a: &AlgebraSpec, x: &str, y: &str) -> String {
        let x = parse_element(x, a).unwrap();
        let y = parse_element(y, a).unwrap();
        a.bracket(&[x, y]).unwrap().to_string()
    }

    #[test]
    fn witt_bracket() {
        let w = alg("witt", &[]);
        assert_eq!(br(&w, "e_2", "e_3"), "-e_5");
        assert_eq!(br(&w, "e_1", "e_1"), "0");
    }

    #[test]
    fn wab_bracket() {
        let w = alg("wab", &[("a", "1"), ("b", "2")]);
        assert_eq!(br(&w, "L_1", "I_3"), "-6*I_4");
        assert_eq!(br(&w, "I_3", "L_1"), "6*I_4");
    }

    #[test]
    fn virasoro_central_term() {
        let v = alg("virasoro", &[]);
        assert_eq!(br(&v, "L_2", "L_-2"), "4*L_0 + 1/2*c");
        assert_eq!(br(&v, "c", "L_5"), "0");
    }

    #[test]
    fn super_virasoro_ns() {
        let s = alg("svir", &[("sector", "neveu_schwarz")]);
        assert_eq!(br(&s, "G_1/2", "G_-1/2"), "2*L_0");
        assert_eq!(br(&s, "G_3/2", "G_-3/2"), "2*L_0 + 2/3*c");
        assert!(parse_element("G_1", &s).is_err());
        let r = alg("svir", &[("sector", "ramond")]);
        assert_eq!(br(&r, "G_0", "G_0"), "2*L_0 - 1/12*c");
    }

    #[test]
    fn thin_and_solvable() {
        let t = alg("thin", &[]);
        assert_eq!(br(&t, "e_2", "e_3"), "0");
        assert_eq!(br(&t, "e_1", "e_3"), "e_4");
        assert_eq!(br(&t, "e_1", "e_1"), "0");
        let s = alg("solvable", &[]);
        assert_eq!(br(&s, "e_4", "e_1"), "-e_4");
        assert!(parse_element("e_0", &s).is_err());
    }

    #[test]
    fn n2_brackets() {
        let n = alg("n2sca", &[("sector", "ns")]);
        assert_eq!(br(&n, "G+_1/2", "G-_-1/2"), "L_0 + 1/2*J_0");
        assert_eq!(br(&n, "G-_-1/2", "G+_1/2"), "L_0 + 1/2*J_0");
        assert_eq!(br(&n, "J_1", "J_-1"), "1/3*c");
        assert_eq!(br(&n, "J_2", "G-_1/2"), "-G-_5/2");
        assert_eq!(br(&n, "G+_1/2", "G+_3/2"), "0");
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            make_algebra("wab", &params(&[("a", "1")])),
            Err(AlgebraError::MissingParam { .. })
        ));
        assert!(matches!(
            make_algebra("witt", &params(&[("a", "1")])),
            Err(AlgebraError::UnexpectedParam { .. })
        ));
        assert!(matches!(
            make_algebra("nary_simple", &params(&[("n", "2")])),
            Err(AlgebraError::BadParam { .. })
        ));
        assert!(matches!(
            make_algebra("svir", &params(&[("sector", "x")])),
            Err(AlgebraError::BadParam { .. })
        ));
        assert!(matches!(
            make_algebra("nope", &params(&[])),
            Err(AlgebraError::UnknownAlgebra(_))
        ));
    }

    #[test]
    fn arity_and_index_errors() {
        let w = alg("witt", &[]);
        let e1 = BasisIndex::int(Family::E, 1);
        assert!(matches!(
            w.bracket_basis(&[e1]),
            Err(AlgebraError::WrongArity { .. })
        ));
        assert!(matches!(
            w.bracket_basis(&[e1, BasisIndex::int(Family::I, 0)]),
            Err(AlgebraError::InvalidIndex { .. })
        ));
    }

    #[test]
    fn wab_00_restricts_to_witt() {
        let wab = alg("wab", &[("a", "0"), ("b", "0")]);
        let witt = alg("witt", &[]);
        for i in -6..=6 {
            for j in -6..=6 {
                let got = wab.rule(&[BasisIndex::int(Family::L, i), BasisIndex::int(Family::L, j)]);
                let want = witt.rule(&[BasisIndex::int(Family::E, i), BasisIndex::int(Family::E, j)]);
                let got_coeff = got.coeff(&BasisIndex::int(Family::L, i + j));
                assert_eq!(got_coeff, want.coeff(&BasisIndex::int(Family::E, i + j)));
                assert_eq!(got.len(), want.len());
            }
        }
    }

    #[test]
    fn assoc_rules() {
        let l = alg("laurent", &[]);
        let w = parse_element("e_1 + e_-1", &l).unwrap();
        let e0 = parse_element("e_0", &l).unwrap();
        let p = l.assoc(&l.assoc(&e0, &w).unwrap(), &e0).unwrap();
        assert_eq!(p.to_string(), "e_-1 + e_1");
        let x = alg("extended_laurent", &[]);
        let i1 = BasisIndex::int(Family::I, 1);
        assert!(x.assoc_basis(i1, i1).unwrap().is_zero());
        assert!(alg("witt", &[]).assoc_basis(BasisIndex::int(Family::E, 0), BasisIndex::int(Family::E, 0)).is_none());
    }

    #[test]
    fn window_includes_center() {
        let v = alg("virasoro", &[]);
        let w = v.window_basis(2);
        assert_eq!(w.len(), 6);
        assert!(w.contains(&BasisIndex::central()));
        let s = alg("svir", &[("sector", "ns")]);
        assert_eq!(s.window_basis(1).len(), 3 + 2 + 1);
    }
}
