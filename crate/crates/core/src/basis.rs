//! Graded basis labels.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Generator family. The declaration order is the canonical term order used
/// when rendering and comparing elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    E,
    L,
    I,
    J,
    /// Odd generator of the N=1 super Virasoro algebra.
    G,
    Gplus,
    Gminus,
    /// Central element.
    C,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::E,
        Family::L,
        Family::I,
        Family::J,
        Family::G,
        Family::Gplus,
        Family::Gminus,
        Family::C,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Family::E => "e",
            Family::L => "L",
            Family::I => "I",
            Family::J => "J",
            Family::G => "G",
            Family::Gplus => "G+",
            Family::Gminus => "G-",
            Family::C => "c",
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            Family::G | Family::Gplus | Family::Gminus => Parity::Odd,
            _ => Parity::Even,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// `(-1)^(self * other)` is negative.
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

/// Sum in Z/2.
impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// One basis vector: a family and twice its degree.
///
/// Degrees live in half the integers, so they are stored doubled. Parity is a
/// function of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub family: Family,
    pub degree2: i64,
}

impl BasisIndex {
    pub const fn new(family: Family, degree2: i64) -> Self {
        BasisIndex { family, degree2 }
    }

    /// Integer-degree constructor: `BasisIndex::int(Family::L, -2)` is `L_-2`.
    pub const fn int(family: Family, degree: i64) -> Self {
        BasisIndex {
            family,
            degree2: 2 * degree,
        }
    }

    pub const fn central() -> Self {
        BasisIndex {
            family: Family::C,
            degree2: 0,
        }
    }

    pub fn parity(&self) -> Parity {
        self.family.parity()
    }

    pub fn is_central(&self) -> bool {
        self.family == Family::C
    }

    pub fn has_integer_degree(&self) -> bool {
        self.degree2 % 2 == 0
    }

    /// Integer subscript. Only meaningful when [`has_integer_degree`] holds.
    ///
    /// [`has_integer_degree`]: BasisIndex::has_integer_degree
    pub fn degree(&self) -> i64 {
        self.degree2.div_euclid(2)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::C {
            return f.write_str("c");
        }
        if self.has_integer_degree() {
            write!(f, "{}_{}", self.family.token(), self.degree2 / 2)
        } else {
            write!(f, "{}_{}/2", self.family.token(), self.degree2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render() {
        assert_eq!(BasisIndex::int(Family::L, -2).to_string(), "L_-2");
        assert_eq!(BasisIndex::new(Family::Gplus, 1).to_string(), "G+_1/2");
        assert_eq!(BasisIndex::new(Family::G, -3).to_string(), "G_-3/2");
        assert_eq!(BasisIndex::central().to_string(), "c");
    }

    #[test]
    fn canonical_order_is_family_then_degree() {
        let mut v = [
            BasisIndex::int(Family::I, 0),
            BasisIndex::int(Family::L, 3),
            BasisIndex::int(Family::L, -1),
            BasisIndex::central(),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["L_-1", "L_3", "I_0", "c"]);
    }

    #[test]
    fn parity_by_family() {
        assert!(Family::Gminus.parity().is_odd());
        assert!(!Family::J.parity().is_odd());
        assert!(Parity::Odd.koszul(Parity::Odd));
        assert!(!Parity::Odd.koszul(Parity::Even));
    }
}
