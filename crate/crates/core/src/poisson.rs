//! Transposed Poisson structures.
//!
//! A commutative associative product `·` is compatible with a bracket when
//! `n z·[x_1..x_n] = Σ_i [x_1, .., z·x_i, .., x_n]`. The products here are
//! mutations `x·w·y` of the Laurent and extended Laurent algebras and the
//! normal forms on the thin and solvable algebras. Each check scans a window
//! exhaustively and reports the first failing tuple, if any.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebras::{make_algebra, AlgebraError, AlgebraSpec, Params};
use crate::basis::{BasisIndex, Family, Parity};
use crate::element::Element;
use crate::grammar::parse_element;
use crate::scalar::Scalar;
use crate::solver::{combos, delta_residual, window_tuples, LinMapWindow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PoissonError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0} carries no associative product to mutate")]
    NoAssociativeStructure(String),
    #[error("unknown product family `{0}`")]
    UnknownFamily(String),
    #[error("bad product parameter: {0}")]
    BadParam(String),
    #[error("bad product literal `{literal}`: {reason}")]
    BadLiteral { literal: String, reason: String },
    #[error("{index} is not a basis vector of the product's algebra")]
    InvalidIndex { index: String },
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Table products on the thin and solvable algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalForm {
    /// `e_1*e_1 = e_k`, all else 0.
    Thin { k: i64 },
    /// `e_1*e_1 = e_1 + e_2`, `e_1*e_n = e_n` for `n ≥ 2`.
    Solvable1,
    /// `e_1*e_1 = e_2`.
    Solvable2,
    /// `e_1*e_n = e_n` for `n ≥ 1`.
    Solvable3,
}

impl NormalForm {
    /// Algebra the product lives on.
    pub fn partner(self) -> &'static str {
        match self {
            NormalForm::Thin { .. } => "thin",
            _ => "solvable",
        }
    }

    fn rule(self, x: BasisIndex, y: BasisIndex) -> Element {
        let e = |k: i64| Element::basis(BasisIndex::int(Family::E, k));
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        let (i, j) = (lo.degree(), hi.degree());
        match self {
            NormalForm::Thin { k } if i == 1 && j == 1 => e(k),
            NormalForm::Solvable1 if i == 1 && j == 1 => &e(1) + &e(2),
            NormalForm::Solvable1 | NormalForm::Solvable3 if i == 1 => e(j),
            NormalForm::Solvable2 if i == 1 && j == 1 => e(2),
            _ => Element::zero(),
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::Thin { k } => write!(f, "table:thin_k:{k}"),
            NormalForm::Solvable1 => f.write_str("table:solvable:1"),
            NormalForm::Solvable2 => f.write_str("table:solvable:2"),
            NormalForm::Solvable3 => f.write_str("table:solvable:3"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductKind {
    /// `x·y = x w y` in the ambient associative algebra.
    Mutation { w: Element },
    Table(NormalForm),
}

/// A commutative product on the basis of `ambient`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpec {
    ambient: AlgebraSpec,
    kind: ProductKind,
}

impl ProductSpec {
    pub fn ambient(&self) -> &AlgebraSpec {
        &self.ambient
    }

    pub fn kind(&self) -> &ProductKind {
        &self.kind
    }

    /// Whether the product vanishes on every basis pair.
    pub fn is_zero(&self) -> bool {
        match &self.kind {
            ProductKind::Mutation { w } => w.is_zero(),
            ProductKind::Table(_) => false,
        }
    }

    /// Product of two basis vectors; both must be valid in the ambient.
    pub fn basis_product(&self, x: BasisIndex, y: BasisIndex) -> Element {
        match &self.kind {
            ProductKind::Mutation { w } => {
                let amb = &self.ambient;
                let xw = amb.assoc(&Element::basis(x), w).expect("associative ambient");
                amb.assoc(&xw, &Element::basis(y)).expect("associative ambient")
            }
            ProductKind::Table(nf) => nf.rule(x, y),
        }
    }

    fn check(&self, x: &Element) -> Result<(), PoissonError> {
        match x.support().find(|i| !self.ambient.valid_index(i)) {
            Some(i) => Err(PoissonError::InvalidIndex {
                index: i.to_string(),
            }),
            None => Ok(()),
        }
    }

    fn eval_unchecked(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&(ca * cb), &self.basis_product(*a, *b));
            }
        }
        out
    }
}

impl fmt::Display for ProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ProductKind::Mutation { w } => write!(f, "mutation:w={w} on {}", self.ambient),
            ProductKind::Table(nf) => write!(f, "{nf}"),
        }
    }
}

/// The mutation `x·y = x w y` of an associative ambient algebra.
pub fn mutation_product(ambient: &AlgebraSpec, w: Element) -> Result<ProductSpec, PoissonError> {
    if !ambient.has_assoc() {
        return Err(PoissonError::NoAssociativeStructure(ambient.label()));
    }
    if let Some(i) = w.support().find(|i| !ambient.valid_index(i)) {
        return Err(PoissonError::InvalidIndex {
            index: i.to_string(),
        });
    }
    Ok(ProductSpec {
        ambient: ambient.clone(),
        kind: ProductKind::Mutation { w },
    })
}

/// Associative ambient whose mutations are paired with `alg`: the Laurent
/// algebra for Witt, the extended Laurent algebra for `W(a,-1)`, and `alg`
/// itself when it already carries a product.
pub fn mutation_ambient(alg: &AlgebraSpec) -> Result<AlgebraSpec, PoissonError> {
    if alg.has_assoc() {
        return Ok(alg.clone());
    }
    match alg.name() {
        "witt" => Ok(make_algebra("laurent", &Params::new())?),
        "wab" if alg.param_scalar("b") == Some(Scalar::from_int(-1)) => {
            let mut p = Params::new();
            p.insert("a".into(), alg.params()["a"].clone());
            Ok(make_algebra("extended_laurent", &p)?)
        }
        _ => Err(PoissonError::NoAssociativeStructure(alg.label())),
    }
}

/// Normal-form product. `family` is `thin_k` (with param `k ≥ 2`),
/// `solvable_1`, `solvable_2`, `solvable_3`, or `solvable` with param
/// `variant` in 1..=3.
pub fn normal_form_product(family: &str, params: &Params) -> Result<ProductSpec, PoissonError> {
    let int_param = |key: &str| -> Result<i64, PoissonError> {
        let raw = params
            .get(key)
            .ok_or_else(|| PoissonError::BadParam(format!("`{family}` needs `{key}`")))?;
        raw.trim()
            .parse()
            .map_err(|_| PoissonError::BadParam(format!("{key} = `{raw}` is not an integer")))
    };
    let allow = |keys: &[&str]| -> Result<(), PoissonError> {
        match params.keys().find(|k| !keys.contains(&k.as_str())) {
            Some(k) => Err(PoissonError::BadParam(format!("`{family}` takes no `{k}`"))),
            None => Ok(()),
        }
    };
    let solvable = |v: i64| match v {
        1 => Ok(NormalForm::Solvable1),
        2 => Ok(NormalForm::Solvable2),
        3 => Ok(NormalForm::Solvable3),
        _ => Err(PoissonError::BadParam(format!("solvable variant {v} not in 1..=3"))),
    };
    let nf = match family {
        "thin_k" => {
            allow(&["k"])?;
            let k = int_param("k")?;
            if k < 2 {
                return Err(PoissonError::BadParam(format!("k = {k} must be at least 2")));
            }
            NormalForm::Thin { k }
        }
        "solvable" => {
            allow(&["variant"])?;
            solvable(int_param("variant")?)?
        }
        "solvable_1" | "solvable_2" | "solvable_3" => {
            allow(&[])?;
            solvable(family[family.len() - 1..].parse().expect("digit"))?
        }
        other => return Err(PoissonError::UnknownFamily(other.into())),
    };
    Ok(ProductSpec {
        ambient: make_algebra(nf.partner(), &Params::new())?,
        kind: ProductKind::Table(nf),
    })
}

/// Parses `mutation:w=<element>`, `table:thin_k:<k>` or
/// `table:solvable:<variant>` for use with `alg`.
pub fn parse_product(literal: &str, alg: &AlgebraSpec) -> Result<ProductSpec, PoissonError> {
    let bad = |reason: &str| PoissonError::BadLiteral {
        literal: literal.into(),
        reason: reason.into(),
    };
    if let Some(rest) = literal.strip_prefix("mutation:") {
        let expr = rest
            .strip_prefix("w=")
            .ok_or_else(|| bad("expected `mutation:w=<element>`"))?;
        let ambient = mutation_ambient(alg)?;
        let w = parse_element(expr, &ambient).map_err(|e| bad(&e.to_string()))?;
        return mutation_product(&ambient, w);
    }
    if let Some(rest) = literal.strip_prefix("table:") {
        let (family, value) = rest
            .split_once(':')
            .ok_or_else(|| bad("expected `table:<family>:<value>`"))?;
        let key = match family {
            "thin_k" => "k",
            "solvable" => "variant",
            _ => return Err(PoissonError::UnknownFamily(family.into())),
        };
        let params: Params = [(key.to_string(), value.to_string())].into_iter().collect();
        let p = normal_form_product(family, &params)?;
        if p.ambient.name() != alg.name() {
            return Err(bad(&format!("this product lives on `{}`", p.ambient.name())));
        }
        return Ok(p);
    }
    Err(bad("expected a `mutation:` or `table:` literal"))
}

/// Random mutation element: one to three basis vectors of degree at most
/// `radius` in absolute value, with nonzero integer coefficients in
/// `-3..=3`.
pub fn random_mutation_w(ambient: &AlgebraSpec, radius: i64, rng: &mut impl Rng) -> Element {
    let pool = ambient.window_basis(radius);
    let mut w = Element::zero();
    while w.is_zero() {
        for _ in 0..rng.gen_range(1..=3) {
            let idx = pool[rng.gen_range(0..pool.len())];
            let mut c = rng.gen_range(-3..=2);
            if c >= 0 {
                c += 1;
            }
            w.add_term(idx, &Scalar::from_int(c));
        }
    }
    w
}

/// Bilinear extension of the basis rule.
pub fn product_eval(p: &ProductSpec, x: &Element, y: &Element) -> Result<Element, PoissonError> {
    p.check(x)?;
    p.check(y)?;
    Ok(p.eval_unchecked(x, y))
}

/// `((x·y)·z - x·(y·z), x·y - y·x)`.
pub fn assoc_comm_residuals(
    p: &ProductSpec,
    x: BasisIndex,
    y: BasisIndex,
    z: BasisIndex,
) -> Result<(Element, Element), PoissonError> {
    let (x, y, z) = (Element::basis(x), Element::basis(y), Element::basis(z));
    let xy = product_eval(p, &x, &y)?;
    let yz = product_eval(p, &y, &z)?;
    let assoc = &p.eval_unchecked(&xy, &z) - &p.eval_unchecked(&x, &yz);
    let comm = &xy - &p.eval_unchecked(&y, &x);
    Ok((assoc, comm))
}

fn bracket(alg: &AlgebraSpec, args: &[Element]) -> Result<Element, PoissonError> {
    Ok(alg.bracket(args)?)
}

fn parity_parts(z: &Element) -> [(Parity, Element); 2] {
    let part = |want: Parity| -> Element {
        z.iter()
            .filter(|(i, _)| i.parity() == want)
            .map(|(i, c)| (*i, c.clone()))
            .collect()
    };
    [(Parity::Even, part(Parity::Even)), (Parity::Odd, part(Parity::Odd))]
}

/// `n z·[x_1..x_n] - Σ_i ε_i [x_1, .., z·x_i, .., x_n]` with
/// `ε_i = (-1)^{|z|(|x_1|+..+|x_{i-1}|)}`; zero iff compatible on the tuple.
/// The arguments are taken to be homogeneous; `z` may be mixed.
pub fn tpa_residual(
    alg: &AlgebraSpec,
    p: &ProductSpec,
    z: &Element,
    args: &[Element],
) -> Result<Element, PoissonError> {
    if args.len() != alg.arity() {
        return Err(PoissonError::ArityMismatch {
            expected: alg.arity(),
            got: args.len(),
        });
    }
    p.check(z)?;
    for a in args {
        p.check(a)?;
    }
    let br = bracket(alg, args)?;
    let mut out = p.eval_unchecked(z, &br).scale(&Scalar::from_int(args.len() as i64));
    for (zp, zpart) in parity_parts(z) {
        if zpart.is_zero() {
            continue;
        }
        let mut prefix = Parity::Even;
        for (i, x) in args.iter().enumerate() {
            let mut slots = args.to_vec();
            slots[i] = p.eval_unchecked(&zpart, x);
            let term = bracket(alg, &slots)?;
            out.add_scaled(&-Scalar::sign(zp.koszul(prefix)), &term);
            prefix = prefix + x.parity().unwrap_or(Parity::Even);
        }
    }
    Ok(out)
}

/// `[x·y, z] - x·[y,z] - y·[x,z]`; zero iff the classical Leibniz rule holds.
pub fn poisson_residual(
    alg: &AlgebraSpec,
    p: &ProductSpec,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element, PoissonError> {
    if alg.arity() != 2 {
        return Err(PoissonError::ArityMismatch {
            expected: 2,
            got: alg.arity(),
        });
    }
    let xy = product_eval(p, x, y)?;
    p.check(z)?;
    let mut out = bracket(alg, &[xy, z.clone()])?;
    let yz = bracket(alg, &[y.clone(), z.clone()])?;
    let xz = bracket(alg, &[x.clone(), z.clone()])?;
    out.add_scaled(&Scalar::from_int(-1), &p.eval_unchecked(x, &yz));
    out.add_scaled(&Scalar::from_int(-1), &p.eval_unchecked(y, &xz));
    Ok(out)
}

/// A tuple with a nonzero residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub triple: [BasisIndex; 3],
    pub residual: Element,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub triple: Vec<String>,
    pub residual: String,
}

impl Witness {
    pub fn to_json(&self) -> WitnessJson {
        WitnessJson {
            triple: self.triple.iter().map(ToString::to_string).collect(),
            residual: self.residual.to_string(),
        }
    }
}

/// Window triples in lexicographic order of (degree triple, family triple).
fn ordered_triples(alg: &AlgebraSpec, w: i64) -> Vec<[BasisIndex; 3]> {
    let basis = alg.window_basis(w);
    let mut out = Vec::with_capacity(basis.len().pow(3));
    for x in &basis {
        for y in &basis {
            for z in &basis {
                out.push([*x, *y, *z]);
            }
        }
    }
    let key = |t: &[BasisIndex; 3]| {
        (
            [t[0].degree2, t[1].degree2, t[2].degree2],
            [t[0].family, t[1].family, t[2].family],
        )
    };
    out.sort_by_key(key);
    out
}

/// First window triple violating the classical Leibniz rule, if any.
pub fn find_poisson_witness(
    alg: &AlgebraSpec,
    p: &ProductSpec,
    w: i64,
) -> Result<Option<Witness>, PoissonError> {
    for t in ordered_triples(alg, w) {
        let [x, y, z] = t.map(Element::basis);
        let r = poisson_residual(alg, p, &x, &y, &z)?;
        if !r.is_zero() {
            return Ok(Some(Witness {
                triple: t,
                residual: r,
            }));
        }
    }
    Ok(None)
}

/// Outcome of an exhaustive window scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub checked: usize,
    /// First failing `(z, args)` with its residual.
    pub failure: Option<(BasisIndex, Vec<BasisIndex>, Element)>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// `tpa_residual` on every window `z` and every window tuple of arguments
/// (unordered, as the residual is skew in them).
pub fn tpa_scan(alg: &AlgebraSpec, p: &ProductSpec, w: i64) -> Result<ScanReport, PoissonError> {
    let basis = alg.window_basis(w);
    let n = alg.arity();
    let mut tuples = Vec::new();
    combos(&basis, n, 0, n == 2, &mut Vec::new(), &mut |t| tuples.push(t.to_vec()));
    let mut checked = 0;
    for z in &basis {
        for t in &tuples {
            let args: Vec<Element> = t.iter().map(|i| Element::basis(*i)).collect();
            let r = tpa_residual(alg, p, &Element::basis(*z), &args)?;
            checked += 1;
            if !r.is_zero() {
                return Ok(ScanReport {
                    checked,
                    failure: Some((*z, t.clone(), r)),
                });
            }
        }
    }
    Ok(ScanReport {
        checked,
        failure: None,
    })
}

/// The map `x ↦ x·z` on the window sources of `alg`.
pub fn right_mult_map(
    p: &ProductSpec,
    z: &Element,
    alg: &AlgebraSpec,
    w: i64,
) -> Result<LinMapWindow, PoissonError> {
    p.check(z)?;
    let mut images = BTreeMap::new();
    let mut shift = 0;
    for x in alg.window_basis(w) {
        let img = p.eval_unchecked(&Element::basis(x), z);
        for t in img.support() {
            shift = shift.max((t.degree2 - x.degree2).abs());
        }
        images.insert(x, img);
    }
    Ok(LinMapWindow::new(images, w, (shift + 1) / 2))
}

/// For every window basis `z`, checks that right multiplication by `z` is a
/// ½-derivation on every window tuple.
pub fn right_mult_scan(
    alg: &AlgebraSpec,
    p: &ProductSpec,
    w: i64,
) -> Result<ScanReport, PoissonError> {
    let half = Scalar::ratio(1, 2);
    let tuples = window_tuples(alg, w);
    let mut checked = 0;
    for z in alg.window_basis(w) {
        let phi = right_mult_map(p, &Element::basis(z), alg, w)?;
        for t in &tuples {
            let r = delta_residual(alg, &phi, &half, t)
                .map_err(|e| PoissonError::Precondition(e.to_string()))?;
            checked += 1;
            if !r.is_zero() {
                return Ok(ScanReport {
                    checked,
                    failure: Some((z, t.clone(), r)),
                });
            }
        }
    }
    Ok(ScanReport {
        checked,
        failure: None,
    })
}

/// Whether the further mutation `x∘y = x·q·y` of a mutation product that is
/// already transposed Poisson on the window is again compatible there.
/// `x·q·y = x w q w y`, so the new product is the mutation by `w q w`.
pub fn mutation_closure_check(
    alg: &AlgebraSpec,
    p: &ProductSpec,
    q: &Element,
    w: i64,
) -> Result<bool, PoissonError> {
    let ProductKind::Mutation { w: pw } = &p.kind else {
        return Err(PoissonError::Precondition("product is not a mutation".into()));
    };
    p.check(q)?;
    let base = tpa_scan(alg, p, w)?;
    if let Some((z, t, _)) = base.failure {
        let t: Vec<String> = t.iter().map(ToString::to_string).collect();
        return Err(PoissonError::Precondition(format!(
            "product fails compatibility at z = {z}, ({})",
            t.join(", ")
        )));
    }
    let amb = &p.ambient;
    let wq = amb.assoc(pw, q).expect("associative ambient");
    let wqw = amb.assoc(&wq, pw).expect("associative ambient");
    let next = mutation_product(amb, wqw)?;
    Ok(tpa_scan(alg, &next, w)?.passed())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(name: &str) -> AlgebraSpec {
        make_algebra(name, &Params::new()).unwrap()
    }

    fn e(k: i64) -> Element {
        Element::basis(BasisIndex::int(Family::E, k))
    }

    fn el(text: &str, a: &AlgebraSpec) -> Element {
        parse_element(text, a).unwrap()
    }

    fn table(literal: &str, on: &str) -> ProductSpec {
        parse_product(literal, &alg(on)).unwrap()
    }

    #[test]
    fn laurent_mutations() {
        let l = alg("laurent");
        let unit = mutation_product(&l, e(0)).unwrap();
        assert_eq!(product_eval(&unit, &e(2), &e(3)).unwrap(), e(5));
        let p = mutation_product(&l, el("e_1 + e_-1", &l)).unwrap();
        assert_eq!(product_eval(&p, &e(0), &e(0)).unwrap().to_string(), "e_-1 + e_1");
        assert_eq!(
            product_eval(&unit, &(&e(1) + &e(2)), &e(0)).unwrap(),
            &e(1) + &e(2)
        );
        assert!(product_eval(&unit, &e(1), &Element::zero()).unwrap().is_zero());
    }

    #[test]
    fn extended_laurent_mutation() {
        let x = alg("extended_laurent");
        let p = mutation_product(&x, el("I_0", &x)).unwrap();
        let pe = |a: &str, b: &str| product_eval(&p, &el(a, &x), &el(b, &x)).unwrap().to_string();
        assert_eq!(pe("L_1", "L_2"), "I_3");
        assert_eq!(pe("L_1", "I_2"), "0");
        assert_eq!(pe("I_1", "I_2"), "0");
    }

    #[test]
    fn mutation_needs_associative_ambient() {
        assert!(matches!(
            mutation_product(&alg("witt"), e(0)),
            Err(PoissonError::NoAssociativeStructure(_))
        ));
    }

    #[test]
    fn normal_forms() {
        let thin3 = table("table:thin_k:3", "thin");
        assert_eq!(product_eval(&thin3, &e(1), &e(1)).unwrap(), e(3));
        assert!(product_eval(&thin3, &e(1), &e(2)).unwrap().is_zero());
        let s1 = table("table:solvable:1", "solvable");
        assert_eq!(product_eval(&s1, &e(1), &e(1)).unwrap().to_string(), "e_1 + e_2");
        let s3 = table("table:solvable:3", "solvable");
        assert_eq!(product_eval(&s3, &e(1), &e(1)).unwrap(), e(1));
        let thin2 = table("table:thin_k:2", "thin");
        let six = Scalar::from_int(6);
        assert_eq!(
            product_eval(&thin2, &e(1).scale(&Scalar::from_int(2)), &e(1).scale(&Scalar::from_int(3)))
                .unwrap(),
            e(2).scale(&six)
        );
        assert!(normal_form_product("thin_k", &[("k".into(), "1".into())].into()).is_err());
        assert!(matches!(
            normal_form_product("cubic", &Params::new()),
            Err(PoissonError::UnknownFamily(_))
        ));
        assert!(parse_product("table:thin_k:3", &alg("witt")).is_err());
    }

    #[test]
    fn assoc_comm_examples() {
        let b = |k| BasisIndex::int(Family::E, k);
        let thin = table("table:thin_k:4", "thin");
        let (a, c) = assoc_comm_residuals(&thin, b(1), b(1), b(1)).unwrap();
        assert!(a.is_zero() && c.is_zero());
        let s1 = table("table:solvable:1", "solvable");
        let (a, c) = assoc_comm_residuals(&s1, b(1), b(1), b(2)).unwrap();
        assert!(a.is_zero() && c.is_zero());
    }

    #[test]
    fn tpa_examples() {
        let w = alg("witt");
        let p = parse_product("mutation:w=e_0", &w).unwrap();
        assert!(tpa_residual(&w, &p, &e(0), &[e(1), e(2)]).unwrap().is_zero());
        assert!(tpa_residual(&w, &p, &e(3), &[e(2), e(2)]).unwrap().is_zero());
        let t = alg("thin");
        let thin2 = table("table:thin_k:2", "thin");
        assert!(tpa_residual(&t, &thin2, &e(1), &[e(1), e(4)]).unwrap().is_zero());
        assert!(matches!(
            tpa_residual(&w, &p, &e(0), &[e(1)]),
            Err(PoissonError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn poisson_examples() {
        let w = alg("witt");
        let p = parse_product("mutation:w=e_0", &w).unwrap();
        assert_eq!(poisson_residual(&w, &p, &e(1), &e(2), &e(1)).unwrap(), e(4));
        let zero = parse_product("mutation:w=0", &w).unwrap();
        assert!(poisson_residual(&w, &zero, &e(1), &e(2), &e(1)).unwrap().is_zero());
        assert_eq!(find_poisson_witness(&w, &zero, 2).unwrap(), None);
        let t = alg("thin");
        let thin2 = table("table:thin_k:2", "thin");
        assert!(poisson_residual(&t, &thin2, &e(1), &e(1), &e(2)).unwrap().is_zero());
        let wit = find_poisson_witness(&t, &thin2, 6).unwrap().unwrap();
        assert_eq!(
            serde_json::to_string(&wit.to_json()).unwrap(),
            r#"{"triple":["e_1","e_1","e_1"],"residual":"-e_3"}"#
        );
        assert!(find_poisson_witness(&w, &p, 3).unwrap().is_some());
    }

    #[test]
    fn right_multiplications() {
        let w = alg("witt");
        let p = parse_product("mutation:w=e_0", &w).unwrap();
        let r = right_mult_map(&p, &e(1), &w, 4).unwrap();
        assert_eq!(r.image(&BasisIndex::int(Family::E, -2)), Some(&e(-1)));
        assert_eq!(r.shift_bound(), 1);
        assert!(right_mult_map(&p, &Element::zero(), &w, 4).unwrap().is_zero());
        let s = alg("solvable");
        let s3 = table("table:solvable:3", "solvable");
        let id = right_mult_map(&s3, &e(1), &s, 6).unwrap();
        assert_eq!(id, LinMapWindow::identity(&s, 6));
        assert!(right_mult_scan(&w, &p, 4).unwrap().passed());
    }

    #[test]
    fn closure() {
        let w = alg("witt");
        let p = parse_product("mutation:w=e_0", &w).unwrap();
        assert!(mutation_closure_check(&w, &p, &e(2), 4).unwrap());
        assert!(mutation_closure_check(&w, &p, &Element::zero(), 4).unwrap());
        let p2 = parse_product("mutation:w=e_1 + e_-1", &w).unwrap();
        assert!(mutation_closure_check(&w, &p2, &e(1), 4).unwrap());
        let thin = table("table:thin_k:3", "thin");
        assert!(mutation_closure_check(&alg("thin"), &thin, &e(1), 4).is_err());
    }
}
