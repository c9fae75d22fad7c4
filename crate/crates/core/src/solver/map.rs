use std::collections::BTreeMap;
use std::fmt;

use crate::algebras::AlgebraSpec;
use crate::basis::{BasisIndex, Parity};
use crate::element::Element;
use crate::scalar::Scalar;

/// Parity of a linear map relative to the `Z/2` grading of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MapParity {
    Even,
    Odd,
    /// Both parts present, or unknown.
    Mixed,
}

impl fmt::Display for MapParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapParity::Even => "even",
            MapParity::Odd => "odd",
            MapParity::Mixed => "mixed",
        })
    }
}

/// A linear map given by the images of finitely many basis vectors.
///
/// The key set is the domain: every source of the window, including those
/// sent to zero. `apply` on anything outside the domain is `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMapWindow {
    images: BTreeMap<BasisIndex, Element>,
    window: i64,
    shift_bound: i64,
}

impl LinMapWindow {
    pub fn new(images: BTreeMap<BasisIndex, Element>, window: i64, shift_bound: i64) -> Self {
        LinMapWindow {
            images,
            window,
            shift_bound,
        }
    }

    /// Identity on the window sources of `alg`.
    pub fn identity(alg: &AlgebraSpec, window: i64) -> Self {
        let images = alg
            .window_basis(window)
            .into_iter()
            .map(|b| (b, Element::basis(b)))
            .collect();
        LinMapWindow::new(images, window, 0)
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn shift_bound(&self) -> i64 {
        self.shift_bound
    }

    pub fn sources(&self) -> impl Iterator<Item = &BasisIndex> {
        self.images.keys()
    }

    pub fn images(&self) -> &BTreeMap<BasisIndex, Element> {
        &self.images
    }

    pub fn image(&self, idx: &BasisIndex) -> Option<&Element> {
        self.images.get(idx)
    }

    pub fn is_zero(&self) -> bool {
        self.images.values().all(Element::is_zero)
    }

    /// Terms of `φ(idx)` whose parity differs from that of `idx` by `part`.
    pub fn parity_part(&self, idx: &BasisIndex, part: Parity) -> Element {
        let want = idx.parity() + part;
        self.images
            .get(idx)
            .map(|img| {
                img.iter()
                    .filter(|(t, _)| t.parity() == want)
                    .map(|(t, c)| (*t, c.clone()))
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn parity(&self) -> MapParity {
        let mut even = false;
        let mut odd = false;
        for (s, img) in &self.images {
            for t in img.support() {
                if s.parity() == t.parity() {
                    even = true;
                } else {
                    odd = true;
                }
            }
        }
        match (even, odd) {
            (_, false) => MapParity::Even,
            (false, true) => MapParity::Odd,
            (true, true) => MapParity::Mixed,
        }
    }

    /// Image of a combination of domain vectors.
    pub fn apply(&self, x: &Element) -> Option<Element> {
        let mut out = Element::zero();
        for (idx, c) in x.iter() {
            out.add_scaled(c, self.images.get(idx)?);
        }
        Some(out)
    }

    /// The same map on the subset of sources kept by `keep`.
    pub fn restrict(&self, keep: impl Fn(&BasisIndex) -> bool, window: i64) -> Self {
        let images = self
            .images
            .iter()
            .filter(|(s, _)| keep(s))
            .map(|(s, img)| (*s, img.clone()))
            .collect();
        LinMapWindow::new(images, window, self.shift_bound)
    }

    /// Coordinates `(source, target) → coefficient` of the nonzero entries.
    pub fn entries(&self) -> impl Iterator<Item = ((BasisIndex, BasisIndex), &Scalar)> {
        self.images
            .iter()
            .flat_map(|(s, img)| img.iter().map(move |(t, c)| ((*s, *t), c)))
    }

    /// `λ` when the map is `λ·id` on its whole domain with `λ ≠ 0`.
    pub fn scalar_multiple_of_identity(&self) -> Option<Scalar> {
        let mut lambda: Option<Scalar> = None;
        for (s, img) in &self.images {
            if img.len() != 1 {
                return None;
            }
            let c = img.coeff(s);
            if c.is_zero() {
                return None;
            }
            match &lambda {
                None => lambda = Some(c),
                Some(l) if *l == c => {}
                Some(_) => return None,
            }
        }
        lambda
    }
}

impl fmt::Display for LinMapWindow {
    /// One `source -> image` line per source with a nonzero image.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (s, img) in &self.images {
            if img.is_zero() {
                continue;
            }
            if any {
                writeln!(f)?;
            }
            write!(f, "{s} -> {img}")?;
            any = true;
        }
        if !any {
            f.write_str("0")?;
        }
        Ok(())
    }
}
