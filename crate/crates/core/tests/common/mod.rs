#![allow(dead_code)]

use halfder::algebras::{make_algebra, AlgebraSpec, Params};
use halfder::{BasisIndex, Element, Family, Scalar};

pub fn alg(name: &str, kv: &[(&str, &str)]) -> AlgebraSpec {
    let p: Params = kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    make_algebra(name, &p).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// One instance of every built-in algebra, with both sectors of the super
/// ones and two sizes of the n-ary one.
pub fn builtins() -> Vec<AlgebraSpec> {
    vec![
        alg("witt", &[]),
        alg("laurent", &[]),
        alg("wab", &[("a", "1/2"), ("b", "5")]),
        alg("wab", &[("a", "3"), ("b", "-1")]),
        alg("virasoro", &[]),
        alg("svir", &[("sector", "ramond")]),
        alg("svir", &[("sector", "neveu_schwarz")]),
        alg("n2sca", &[("sector", "ramond")]),
        alg("n2sca", &[("sector", "neveu_schwarz")]),
        alg("thin", &[]),
        alg("solvable", &[]),
        alg("extended_laurent", &[("a", "-1/2")]),
        alg("sl2", &[]),
        alg("heisenberg", &[]),
        alg("schrodinger", &[]),
        alg("nary_simple", &[("n", "3")]),
        alg("nary_simple", &[("n", "4")]),
    ]
}

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

pub fn e(k: i64) -> BasisIndex {
    BasisIndex::int(Family::E, k)
}

pub fn el(text: &str, a: &AlgebraSpec) -> Element {
    halfder::parse_element(text, a).unwrap_or_else(|err| panic!("`{text}`: {err}"))
}

pub fn params(kv: &[(&str, &str)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

/// Rank by plain dense Gaussian elimination, kept separate from the
/// library's sparse reducer so it can serve as an oracle.
pub fn dense_rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip().unwrap();
        let pivot: Vec<Scalar> = rows[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    let d = &f * p;
                    *x -= &d;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// The products exercised by the compatibility suites, paired with their
/// Lie algebra: 20 random Laurent mutations on Witt, 8 random extended
/// Laurent mutations on `W(a,-1)` (two for each `a`), the thin normal forms
/// for `k = 2, 3, 5` and the three solvable normal forms.
pub fn tpa_products(seed: u64) -> Vec<(AlgebraSpec, halfder::poisson::ProductSpec)> {
    use halfder::poisson::{mutation_ambient, mutation_product, normal_form_product, random_mutation_w};
    use rand::SeedableRng;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let witt = alg("witt", &[]);
    let laurent = mutation_ambient(&witt).unwrap();
    for _ in 0..20 {
        let w = random_mutation_w(&laurent, 3, &mut rng);
        out.push((witt.clone(), mutation_product(&laurent, w).unwrap()));
    }
    for a in ["0", "1", "3", "-1/2"] {
        let wab = alg("wab", &[("a", a), ("b", "-1")]);
        let amb = mutation_ambient(&wab).unwrap();
        for _ in 0..2 {
            let w = random_mutation_w(&amb, 3, &mut rng);
            out.push((wab.clone(), mutation_product(&amb, w).unwrap()));
        }
    }
    let thin = alg("thin", &[]);
    for k in ["2", "3", "5"] {
        out.push((thin.clone(), normal_form_product("thin_k", &params(&[("k", k)])).unwrap()));
    }
    let solvable = alg("solvable", &[]);
    for v in ["1", "2", "3"] {
        let p = normal_form_product("solvable", &params(&[("variant", v)])).unwrap();
        out.push((solvable.clone(), p));
    }
    out
}

/// Window used for the compatibility scan of a product: 5 for mutations,
/// 10 for the normal forms.
pub fn tpa_window(p: &halfder::poisson::ProductSpec) -> i64 {
    match p.kind() {
        halfder::poisson::ProductKind::Mutation { .. } => 5,
        halfder::poisson::ProductKind::Table(_) => 10,
    }
}
