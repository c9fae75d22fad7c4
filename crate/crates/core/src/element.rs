//! Finitely supported linear combinations of basis vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::basis::{BasisIndex, Parity};
use crate::scalar::Scalar;

/// A finite sum `Σ c_i b_i` with no zero coefficients.
///
/// Terms are kept in canonical [`BasisIndex`] order, so `Eq`, `Hash` and
/// rendering are all deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<BasisIndex, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(idx: BasisIndex) -> Self {
        Element::term(Scalar::one(), idx)
    }

    pub fn term(coeff: Scalar, idx: BasisIndex) -> Self {
        let mut e = Element::zero();
        e.add_term(idx, &coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &BasisIndex) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &BasisIndex> {
        self.terms.keys()
    }

    /// Adds `coeff * idx` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, idx: BasisIndex, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += coeff * other`.
    pub fn add_scaled(&mut self, coeff: &Scalar, other: &Element) {
        if coeff.is_zero() {
            return;
        }
        for (idx, c) in &other.terms {
            self.add_term(*idx, &(coeff * c));
        }
    }

    pub fn scale(&self, coeff: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(coeff, self);
        out
    }

    /// Parity of the element if all terms share one.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(BasisIndex::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }
}

/// Exact linear combination `Σ a_k x_k`, canonicalised.
pub fn element_combine<'a, I>(pairs: I) -> Element
where
    I: IntoIterator<Item = (&'a Scalar, &'a Element)>,
{
    let mut out = Element::zero();
    for (a, x) in pairs {
        out.add_scaled(a, x);
    }
    out
}

impl From<BasisIndex> for Element {
    fn from(idx: BasisIndex) -> Self {
        Element::basis(idx)
    }
}

impl FromIterator<(BasisIndex, Scalar)> for Element {
    fn from_iter<T: IntoIterator<Item = (BasisIndex, Scalar)>>(iter: T) -> Self {
        let mut out = Element::zero();
        for (idx, c) in iter {
            out.add_term(idx, &c);
        }
        out
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), rhs);
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Scalar::from_int(-1))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (idx, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{idx}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Family;

    fn e(i: i64) -> Element {
        Element::basis(BasisIndex::int(Family::E, i))
    }

    #[test]
    fn cancellation() {
        let one = Scalar::one();
        let m1 = Scalar::from_int(-1);
        let x = e(2);
        assert!(element_combine([(&one, &x), (&m1, &x)]).is_zero());
    }

    #[test]
    fn scaling() {
        let two = Scalar::from_int(2);
        let x = &e(0) + &e(3);
        let got = element_combine([(&two, &x)]);
        assert_eq!(got.to_string(), "2*e_0 + 2*e_3");
    }

    #[test]
    fn rational_combination() {
        // (1/2)(3 e_1) + (1/2) e_1 = 2 e_1
        let half = Scalar::ratio(1, 2);
        let a = e(1).scale(&Scalar::from_int(3));
        let b = e(1);
        let got = element_combine([(&half, &a), (&half, &b)]);
        assert_eq!(got, e(1).scale(&Scalar::from_int(2)));
    }

    #[test]
    fn rendering_signs() {
        let x: Element = [
            (BasisIndex::int(Family::L, 1), Scalar::one()),
            (BasisIndex::int(Family::I, 0), Scalar::ratio(-1, 2)),
        ]
        .into_iter()
        .collect();
        assert_eq!(x.to_string(), "L_1 - 1/2*I_0");
        assert_eq!((-&x).to_string(), "-L_1 + 1/2*I_0");
        assert_eq!(Element::zero().to_string(), "0");
    }
}
