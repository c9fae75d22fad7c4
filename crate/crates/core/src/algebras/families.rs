//! Closed-form brackets of the infinite built-in algebras.
//!
//! Each function receives basis vectors already validated for its algebra.
//! Rules are written for every ordering of the arguments directly where a
//! formula exists, so the antisymmetry checks test the formulas rather than
//! a derived mirror.

use crate::basis::{BasisIndex, Family};
use crate::element::Element;
use crate::scalar::Scalar;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// Degree as a scalar (`degree2 / 2`).
fn deg(x: BasisIndex) -> Scalar {
    Scalar::ratio(x.degree2, 2)
}

fn at(family: Family, degree2: i64, coeff: Scalar) -> Element {
    Element::term(coeff, BasisIndex::new(family, degree2))
}

/// `(m^3 - m) / 12` with `m` an integer degree.
fn virasoro_cocycle(m: i64) -> Scalar {
    Scalar::ratio(m * m * m - m, 12)
}

/// `[e_i, e_j] = (i - j) e_{i+j}`.
pub(super) fn witt(x: BasisIndex, y: BasisIndex) -> Element {
    at(Family::E, x.degree2 + y.degree2, s(x.degree() - y.degree()))
}

/// `W(a,b)`: `[L_m, L_n] = (m-n) L_{m+n}`, `[L_m, I_n] = -(n + a + bm) I_{m+n}`,
/// `[I_m, I_n] = 0`.
pub(super) fn wab(a: &Scalar, b: &Scalar, x: BasisIndex, y: BasisIndex) -> Element {
    let d2 = x.degree2 + y.degree2;
    match (x.family, y.family) {
        (Family::L, Family::L) => at(Family::L, d2, s(x.degree() - y.degree())),
        (Family::L, Family::I) => {
            let c = s(y.degree()) + a + b * &s(x.degree());
            at(Family::I, d2, -c)
        }
        (Family::I, Family::L) => {
            let c = s(x.degree()) + a + b * &s(y.degree());
            at(Family::I, d2, c)
        }
        _ => Element::zero(),
    }
}

/// Virasoro bracket `(m-n) L_{m+n} + (m^3-m)/12 δ_{m+n,0} c`; `c` central.
pub(super) fn virasoro(x: BasisIndex, y: BasisIndex) -> Element {
    if x.is_central() || y.is_central() {
        return Element::zero();
    }
    let (m, n) = (x.degree(), y.degree());
    let mut out = at(Family::L, x.degree2 + y.degree2, s(m - n));
    if m + n == 0 {
        out.add_term(BasisIndex::central(), &virasoro_cocycle(m));
    }
    out
}

/// N=1 super Virasoro: Virasoro on `L`, `[L_m, G_r] = (m/2 - r) G_{m+r}`,
/// `[G_r, G_s] = 2 L_{r+s} + (c/3)(r^2 - 1/4) δ_{r+s,0}`.
pub(super) fn super_virasoro(x: BasisIndex, y: BasisIndex) -> Element {
    if x.is_central() || y.is_central() {
        return Element::zero();
    }
    let d2 = x.degree2 + y.degree2;
    match (x.family, y.family) {
        (Family::L, Family::L) => virasoro(x, y),
        (Family::L, Family::G) => at(Family::G, d2, &deg(x) / &s(2) - deg(y)),
        (Family::G, Family::L) => at(Family::G, d2, deg(x) - &deg(y) / &s(2)),
        (Family::G, Family::G) => {
            let mut out = at(Family::L, d2, s(2));
            if d2 == 0 {
                let r = deg(x);
                let c = &(&r * &r - Scalar::ratio(1, 4)) / &s(3);
                out.add_term(BasisIndex::central(), &c);
            }
            out
        }
        _ => unreachable!("invalid super Virasoro pair"),
    }
}

/// N=2 superconformal algebra in either sector.
pub(super) fn n2(x: BasisIndex, y: BasisIndex) -> Element {
    use Family::{Gminus, Gplus, J, L};
    if x.is_central() || y.is_central() {
        return Element::zero();
    }
    let d2 = x.degree2 + y.degree2;
    match (x.family, y.family) {
        (L, L) => virasoro(x, y),
        // [L_m, J_n] = -n J_{m+n}
        (L, J) => at(J, d2, s(-y.degree())),
        (J, L) => at(J, d2, s(x.degree())),
        // [J_m, J_n] = (c/3) m δ_{m+n,0}
        (J, J) => {
            if d2 == 0 {
                Element::term(Scalar::ratio(x.degree(), 3), BasisIndex::central())
            } else {
                Element::zero()
            }
        }
        // [J_m, G±_r] = ±G±_{m+r}
        (J, g @ (Gplus | Gminus)) => at(g, d2, if g == Gplus { s(1) } else { s(-1) }),
        (g @ (Gplus | Gminus), J) => at(g, d2, if g == Gplus { s(-1) } else { s(1) }),
        // [L_m, G±_r] = (m/2 - r) G±_{m+r}
        (L, g @ (Gplus | Gminus)) => at(g, d2, &deg(x) / &s(2) - deg(y)),
        (g @ (Gplus | Gminus), L) => at(g, d2, deg(x) - &deg(y) / &s(2)),
        // [G+_r, G-_s] = L_{r+s} + (r-s)/2 J_{r+s} + (c/6)(r^2 - 1/4) δ_{r+s,0}
        (Gplus, Gminus) | (Gminus, Gplus) => {
            let (r, sdeg) = if x.family == Gplus {
                (deg(x), deg(y))
            } else {
                (deg(y), deg(x))
            };
            let mut out = at(L, d2, s(1));
            out.add_term(BasisIndex::new(J, d2), &(&(&r - &sdeg) / &s(2)));
            if d2 == 0 {
                let c = &(&r * &r - Scalar::ratio(1, 4)) / &s(6);
                out.add_term(BasisIndex::central(), &c);
            }
            out
        }
        (Gplus, Gplus) | (Gminus, Gminus) => Element::zero(),
        _ => unreachable!("invalid N=2 pair"),
    }
}

/// Thin algebra: `[e_1, e_n] = e_{n+1}` for `n > 1`, all other brackets of
/// basis vectors vanish.
pub(super) fn thin(x: BasisIndex, y: BasisIndex) -> Element {
    match (x.degree(), y.degree()) {
        (1, n) if n > 1 => at(Family::E, 2 * (n + 1), s(1)),
        (n, 1) if n > 1 => at(Family::E, 2 * (n + 1), s(-1)),
        _ => Element::zero(),
    }
}

/// Solvable algebra with abelian radical: `[e_1, e_n] = e_n` for `n >= 2`.
pub(super) fn solvable(x: BasisIndex, y: BasisIndex) -> Element {
    match (x.degree(), y.degree()) {
        (1, n) if n > 1 => at(Family::E, 2 * n, s(1)),
        (n, 1) if n > 1 => at(Family::E, 2 * n, s(-1)),
        _ => Element::zero(),
    }
}

/// Simple n-Lie algebra `A_{n+1}` on `e_1, ..., e_{n+1}`:
/// `[e_1, ..., ê_i, ..., e_{n+1}] = (-1)^{n+1-i} e_i`, extended skew-symmetrically.
pub(super) fn nary_simple(n: usize, args: &[BasisIndex]) -> Element {
    let mut labels: Vec<i64> = args.iter().map(|a| a.degree()).collect();
    // Sorting by adjacent swaps tracks the permutation sign.
    let mut odd = false;
    for i in 0..labels.len() {
        for j in 0..labels.len() - 1 - i {
            if labels[j] > labels[j + 1] {
                labels.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    if labels.windows(2).any(|w| w[0] == w[1]) {
        return Element::zero();
    }
    let total = n as i64 + 1;
    let missing = (1..=total)
        .find(|k| !labels.contains(k))
        .expect("n distinct labels out of n+1");
    if (total - missing) % 2 != 0 {
        odd = !odd;
    }
    Element::term(Scalar::sign(odd), BasisIndex::int(Family::E, missing))
}
