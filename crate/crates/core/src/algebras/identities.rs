//! Defining-identity residuals: (super-)Jacobi for binary brackets, the
//! Filippov identity for n-ary ones, and (skew-)symmetry.

use super::{AlgebraError, AlgebraSpec};
use crate::basis::BasisIndex;
use crate::element::Element;
use crate::scalar::Scalar;

/// Number of basis arguments [`identity_residual`] expects: `2n - 1`.
pub fn identity_tuple_len(alg: &AlgebraSpec) -> usize {
    2 * alg.arity() - 1
}

/// Residual of the defining identity on a basis tuple; zero iff the identity
/// holds there.
///
/// Binary (super) algebras use the super-Leibniz form
/// `[x,[y,z]] - [[x,y],z] - (-1)^{|x||y|} [y,[x,z]]` on `(x, y, z)`.
/// For `n > 2` the tuple is `(x_1..x_{n-1}, y_1..y_n)` and the residual is
/// `[x, [y_1..y_n]] - Σ_i [y_1, .., [x, y_i], .., y_n]`.
pub fn identity_residual(alg: &AlgebraSpec, args: &[BasisIndex]) -> Result<Element, AlgebraError> {
    let want = identity_tuple_len(alg);
    if args.len() != want {
        return Err(AlgebraError::WrongArity {
            algebra: alg.label(),
            expected: want,
            got: args.len(),
        });
    }
    for a in args {
        alg.check_index(a)?;
    }
    let n = alg.arity();
    if n == 2 {
        let (x, y, z) = (args[0], args[1], args[2]);
        let el = Element::basis;
        let yz = alg.rule(&[y, z]);
        let lhs = alg.bracket_unchecked(&[el(x), yz]);
        let xy = alg.rule(&[x, y]);
        let t1 = alg.bracket_unchecked(&[xy, el(z)]);
        let xz = alg.rule(&[x, z]);
        let t2 = alg.bracket_unchecked(&[el(y), xz]);
        let sign = Scalar::sign(x.parity().koszul(y.parity()));
        let mut out = lhs;
        out.add_scaled(&Scalar::from_int(-1), &t1);
        out.add_scaled(&-sign, &t2);
        return Ok(out);
    }
    let (xs, ys) = args.split_at(n - 1);
    let inner = alg.rule(ys);
    let mut outer: Vec<Element> = xs.iter().map(|x| Element::basis(*x)).collect();
    outer.push(inner);
    let mut out = alg.bracket_unchecked(&outer);
    for i in 0..n {
        let mut head: Vec<BasisIndex> = xs.to_vec();
        head.push(ys[i]);
        let replaced = alg.rule(&head);
        let mut tuple: Vec<Element> = ys.iter().map(|y| Element::basis(*y)).collect();
        tuple[i] = replaced;
        out.add_scaled(&Scalar::from_int(-1), &alg.bracket_unchecked(&tuple));
    }
    Ok(out)
}

/// `[x_1..x_n] + (sign) [x_σ]` for the transposition swapping positions `i`
/// and `j`, with the Koszul sign of the swap. Zero iff the bracket is
/// (super) skew-symmetric on that pair of slots.
pub fn antisymmetry_residual(
    alg: &AlgebraSpec,
    args: &[BasisIndex],
    i: usize,
    j: usize,
) -> Result<Element, AlgebraError> {
    let base = alg.bracket_basis(args)?;
    let mut swapped = args.to_vec();
    swapped.swap(i, j);
    let (lo, hi) = (i.min(j), i.max(j));
    // Moving x_hi past x_lo and everything between picks up Koszul signs.
    let mut odd = args[lo].parity().koszul(args[hi].parity());
    for mid in &args[lo + 1..hi] {
        odd ^= mid.parity().koszul(args[lo].parity());
        odd ^= mid.parity().koszul(args[hi].parity());
    }
    let other = alg.rule(&swapped);
    let mut out = base;
    out.add_scaled(&Scalar::sign(odd), &other);
    Ok(out)
}

/// Outcome of [`identity_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityScan {
    /// (tuple, adjacent slot pair) combinations checked for (super)
    /// skew-symmetry.
    pub antisymmetry_checked: usize,
    /// Ordered tuples checked for the defining identity.
    pub identity_checked: usize,
    /// First failing tuple with its residual.
    pub failure: Option<(Vec<BasisIndex>, Element)>,
}

fn for_each_tuple(pool: &[BasisIndex], len: usize, f: &mut impl FnMut(&[BasisIndex]) -> bool) {
    let mut idx = vec![0usize; len];
    let mut tuple: Vec<BasisIndex> = vec![pool[0]; len];
    loop {
        for (t, i) in tuple.iter_mut().zip(&idx) {
            *t = pool[*i];
        }
        if !f(&tuple) {
            return;
        }
        let mut k = len;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < pool.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Checks (super) skew-symmetry and the defining identity on every ordered
/// tuple of window basis vectors (the full basis for finite algebras).
pub fn identity_scan(alg: &AlgebraSpec, window: i64) -> IdentityScan {
    let pool = alg.window_basis(window);
    let mut scan = IdentityScan {
        antisymmetry_checked: 0,
        identity_checked: 0,
        failure: None,
    };
    if pool.is_empty() {
        return scan;
    }
    let n = alg.arity();
    // Adjacent transpositions generate every permutation of the slots.
    for_each_tuple(&pool, n, &mut |t| {
        for i in 0..n - 1 {
            let r = antisymmetry_residual(alg, t, i, i + 1).expect("window tuple");
            scan.antisymmetry_checked += 1;
            if !r.is_zero() {
                scan.failure = Some((t.to_vec(), r));
                return false;
            }
        }
        true
    });
    if scan.failure.is_some() {
        return scan;
    }
    for_each_tuple(&pool, identity_tuple_len(alg), &mut |t| {
        let r = identity_residual(alg, t).expect("window tuple");
        scan.identity_checked += 1;
        if r.is_zero() {
            true
        } else {
            scan.failure = Some((t.to_vec(), r));
            false
        }
    });
    scan
}
