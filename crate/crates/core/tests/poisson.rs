//! Transposed Poisson structures against the solver and linear oracles.

mod common;

use common::*;
use halfder::algebras::AlgebraSpec;
use halfder::poisson::*;
use halfder::solver::{delta_residual, is_trivial_space, solve_stabilized, window_tuples};
use halfder::{BasisIndex, Element, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn half() -> Scalar {
    q(1, 2)
}

#[test]
fn every_product_is_compatible() {
    for (a, p) in tpa_products(0) {
        let report = tpa_scan(&a, &p, tpa_window(&p)).unwrap();
        assert!(report.passed(), "{a} with {p}: {:?}", report.failure);
        assert!(report.checked > 0);
    }
}

#[test]
fn right_multiplications_are_half_derivations() {
    for (a, p) in tpa_products(0) {
        let report = right_mult_scan(&a, &p, tpa_window(&p)).unwrap();
        assert!(report.passed(), "{a} with {p}: {:?}", report.failure);
    }
}

#[test]
fn no_product_is_poisson() {
    for (a, p) in tpa_products(0) {
        assert!(!p.is_zero());
        let wit = find_poisson_witness(&a, &p, 6).unwrap();
        let wit = wit.unwrap_or_else(|| panic!("{a} with {p}: no witness"));
        let [x, y, z] = wit.triple.map(Element::basis);
        assert_eq!(poisson_residual(&a, &p, &x, &y, &z).unwrap(), wit.residual);
        assert!(!wit.residual.is_zero());
    }
}

/// Mutations of Witt and W(a,-1) whose right multiplications shift degrees
/// by at most 2 land in the stabilized solution space.
#[test]
fn right_multiplications_lie_in_solver_span() {
    let mut cases = vec![alg("witt", &[])];
    for a in ["0", "3", "-1/2"] {
        cases.push(alg("wab", &[("a", a), ("b", "-1")]));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for a in cases {
        let space = solve_stabilized(&a, &half(), 6, 2).unwrap();
        let amb = mutation_ambient(&a).unwrap();
        for _ in 0..4 {
            let p = mutation_product(&amb, random_mutation_w(&amb, 1, &mut rng)).unwrap();
            for z in amb.window_basis(1) {
                let phi = right_mult_map(&p, &Element::basis(z), &a, 6).unwrap();
                assert!(phi.shift_bound() <= 2);
                assert!(space.contains(&phi), "{a} with {p}, z = {z}");
            }
        }
    }
}

/// A mutation whose right multiplications shift by more than the solver's
/// bound is correctly reported outside the span.
#[test]
fn wide_right_multiplication_is_outside_span() {
    let w = alg("witt", &[]);
    let space = solve_stabilized(&w, &half(), 6, 2).unwrap();
    let amb = mutation_ambient(&w).unwrap();
    let p = mutation_product(&amb, el("e_3", &amb)).unwrap();
    let phi = right_mult_map(&p, &el("e_0", &amb), &w, 6).unwrap();
    assert!(!space.contains(&phi));
    assert!(window_tuples(&w, 6)
        .iter()
        .all(|t| delta_residual(&w, &phi, &half(), t).unwrap().is_zero()));
}

#[test]
fn mutation_closure_on_witt() {
    let w = alg("witt", &[]);
    let amb = mutation_ambient(&w).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let p = mutation_product(&amb, random_mutation_w(&amb, 2, &mut rng)).unwrap();
        let qq = random_mutation_w(&amb, 2, &mut rng);
        assert!(mutation_closure_check(&w, &p, &qq, 4).unwrap(), "{p} by {qq}");
    }
    let p = mutation_product(&amb, el("e_1 + e_-1", &amb)).unwrap();
    assert!(mutation_closure_check(&w, &p, &Element::zero(), 4).unwrap());
    let t = normal_form_product("thin_k", &params(&[("k", "2")])).unwrap();
    assert!(mutation_closure_check(&alg("thin", &[]), &t, &el("e_1", &alg("thin", &[])), 4).is_err());
}

/// Random associative commutative scan of the normal forms, including
/// element (not only basis) arguments.
#[test]
fn normal_forms_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (a, p) in tpa_products(0).into_iter().skip(28) {
        let basis = a.window_basis(6);
        let mut pick = || -> Element {
            let mut x = Element::zero();
            for _ in 0..3 {
                let idx = basis[rng.gen_range(0..basis.len())];
                x.add_term(idx, &Scalar::from_int(rng.gen_range(-4..=4)));
            }
            x
        };
        for _ in 0..30 {
            let (x, y, z) = (pick(), pick(), pick());
            let xy = product_eval(&p, &x, &y).unwrap();
            assert_eq!(xy, product_eval(&p, &y, &x).unwrap());
            let l = product_eval(&p, &xy, &z).unwrap();
            let r = product_eval(&p, &x, &product_eval(&p, &y, &z).unwrap()).unwrap();
            assert_eq!(l, r);
            assert!(tpa_residual(&a, &p, &z, &[x.clone(), y.clone()]).unwrap().is_zero());
        }
    }
}

/// Unknown structure constants `c[x][z][t]` of a product with
/// `x·z = Σ_t c[x][z][t] t`. Rows impose that every right multiplication is
/// a ½-derivation; with `commutative` they also impose `x·z = z·x`.
/// Returns the nullity of the system, computed by dense elimination.
fn product_nullity(a: &AlgebraSpec, commutative: bool) -> usize {
    let basis = a.finite_basis().unwrap();
    let n = basis.len();
    let var = |x: usize, z: usize, t: usize| (x * n + z) * n + t;
    let coeff = |args: [BasisIndex; 2], out: usize| a.bracket_basis(&args).unwrap().coeff(&basis[out]);
    let mut rows = Vec::new();
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                for o in 0..n {
                    let mut row = vec![Scalar::zero(); n * n * n];
                    for u in 0..n {
                        let c = coeff([basis[x], basis[y]], u);
                        row[var(u, z, o)] += &c;
                    }
                    for t in 0..n {
                        let c1 = &half() * &coeff([basis[t], basis[y]], o);
                        row[var(x, z, t)] -= &c1;
                        let c2 = &half() * &coeff([basis[x], basis[t]], o);
                        row[var(y, z, t)] -= &c2;
                    }
                    rows.push(row);
                }
            }
        }
    }
    if commutative {
        for x in 0..n {
            for z in 0..x {
                for t in 0..n {
                    let mut row = vec![Scalar::zero(); n * n * n];
                    row[var(x, z, t)] = Scalar::one();
                    row[var(z, x, t)] = Scalar::from_int(-1);
                    rows.push(row);
                }
            }
        }
    }
    n * n * n - dense_rank(rows)
}

/// On algebras with only trivial ½-derivations, right multiplications are
/// scalars (one free scalar per `z`), and commutativity then kills the
/// product.
#[test]
fn trivial_algebras_admit_no_nonzero_product() {
    for a in [alg("sl2", &[]), alg("schrodinger", &[])] {
        let space = solve_stabilized(&a, &half(), 0, 0).unwrap();
        assert!(is_trivial_space(&space), "{a}");
        let n = a.dimension().unwrap();
        assert_eq!(product_nullity(&a, false), n, "{a}");
        assert_eq!(product_nullity(&a, true), 0, "{a}");
    }
}

/// The Virasoro version on a window: every right multiplication is a
/// multiple `κ_z` of the identity, so commutativity on basis pairs
/// `x ≠ z` reads `κ_z x = κ_x z`, forcing every `κ` to vanish.
#[test]
fn virasoro_admits_no_nonzero_product() {
    let v = alg("virasoro", &[]);
    let space = solve_stabilized(&v, &half(), 8, 2).unwrap();
    assert!(is_trivial_space(&space));
    let basis = v.window_basis(4);
    let n = basis.len();
    let mut rows = Vec::new();
    for (i, x) in basis.iter().enumerate() {
        for (j, z) in basis.iter().enumerate().filter(|(j, _)| *j != i) {
            // x·z - z·x = κ_z x - κ_x z, one row per output coordinate.
            for t in &basis {
                let mut row = vec![Scalar::zero(); n];
                if t == x {
                    row[j] += &Scalar::one();
                }
                if t == z {
                    row[i] -= &Scalar::one();
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    assert_eq!(dense_rank(rows), n);
}

#[test]
fn thin_two_witness() {
    let t = alg("thin", &[]);
    let p = parse_product("table:thin_k:2", &t).unwrap();
    let w = find_poisson_witness(&t, &p, 4).unwrap().unwrap();
    assert_eq!(w.triple, [e(1), e(1), e(1)]);
    assert_eq!(
        serde_json::to_string(&w.to_json()).unwrap(),
        r#"{"triple":["e_1","e_1","e_1"],"residual":"-e_3"}"#
    );
}

#[test]
fn witnesses_are_first_in_order() {
    let w = alg("witt", &[]);
    let amb = mutation_ambient(&w).unwrap();
    let p = mutation_product(&amb, el("e_0", &amb)).unwrap();
    let wit = find_poisson_witness(&w, &p, 4).unwrap().unwrap();
    let key = |t: &[BasisIndex; 3]| [t[0].degree2, t[1].degree2, t[2].degree2];
    let basis = w.window_basis(4);
    for x in &basis {
        for y in &basis {
            for z in &basis {
                let t = [*x, *y, *z];
                if key(&t) < key(&wit.triple) {
                    let [a, b, c] = t.map(Element::basis);
                    assert!(poisson_residual(&w, &p, &a, &b, &c).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn product_errors() {
    let w = alg("witt", &[]);
    assert!(matches!(
        mutation_ambient(&alg("virasoro", &[])),
        Err(PoissonError::NoAssociativeStructure(_))
    ));
    assert!(matches!(
        normal_form_product("thin_k", &params(&[("k", "1")])),
        Err(PoissonError::BadParam(_))
    ));
    assert!(matches!(
        normal_form_product("nope", &params(&[])),
        Err(PoissonError::UnknownFamily(_))
    ));
    assert!(matches!(parse_product("mutation:e_0", &w), Err(PoissonError::BadLiteral { .. })));
    assert!(parse_product("table:thin_k:3", &w).is_err());
    let s = alg("sl2", &[]);
    assert!(matches!(
        parse_product("mutation:w=e_0", &s),
        Err(PoissonError::NoAssociativeStructure(_))
    ));
}
