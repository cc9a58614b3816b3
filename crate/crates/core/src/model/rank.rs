//! Archimedean ranks: finite rational sequences under the lexicographic
//! order, with trailing zeros immaterial. Between any two ranks there is
//! always room to interpolate a fresh one.

use crate::{rat, Rat};
use num::{One, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rank(Vec<Rat>);

impl Rank {
    pub fn new(coords: Vec<Rat>) -> Self {
        let mut r = Rank(coords);
        r.normalize();
        r
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Rank::new(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    fn normalize(&mut self) {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn coord(&self, i: usize) -> Rat {
        self.0.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// A rank strictly between `self` and `other` (mediant at the first
    /// differing coordinate, so repeated interpolation against a fixed
    /// endpoint yields 1/2, 1/3, 1/4, ...).
    pub fn between(&self, other: &Rank) -> Rank {
        assert!(self != other, "no rank strictly between equal ranks");
        let n = self.0.len().max(other.0.len());
        let mut coords = Vec::new();
        for i in 0..n {
            let a = self.coord(i);
            let b = other.coord(i);
            if a == b {
                coords.push(a);
                continue;
            }
            coords.push(mediant(&a, &b));
            return Rank::new(coords);
        }
        unreachable!("ranks compared equal coordinate-wise");
    }

    /// A rank strictly below `self` (and below anything in its class gap).
    pub fn just_below(&self) -> Rank {
        Rank::new(vec![self.coord(0) - Rat::one()])
    }

    /// A rank strictly above `self`.
    pub fn just_above(&self) -> Rank {
        Rank::new(vec![self.coord(0) + Rat::one()])
    }
}

/// Mediant of two rationals, strictly between them when they differ.
fn mediant(a: &Rat, b: &Rat) -> Rat {
    Rat::new(a.numer() + b.numer(), a.denom() + b.denom())
}

impl PartialOrd for Rank {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rank {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        for i in 0..n {
            match self.coord(i).cmp(&other.coord(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.0.is_empty() {
            write!(f, "0")?;
        }
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratq;

    #[test]
    fn padding_is_immaterial() {
        assert_eq!(Rank::from_ints(&[1]), Rank::new(vec![rat(1), rat(0)]));
        assert!(Rank::from_ints(&[0]) < Rank::new(vec![rat(0), rat(1)]));
        assert!(Rank::from_ints(&[1, -2]) < Rank::from_ints(&[1, -1]));
    }

    #[test]
    fn mediant_interpolation_walks_harmonically() {
        let zero = Rank::from_ints(&[0]);
        let one = Rank::from_ints(&[1]);
        let r1 = zero.between(&one);
        let r2 = zero.between(&r1);
        let r3 = zero.between(&r2);
        assert_eq!(r1, Rank::new(vec![ratq(1, 2)]));
        assert_eq!(r2, Rank::new(vec![ratq(1, 3)]));
        assert_eq!(r3, Rank::new(vec![ratq(1, 4)]));
        assert!(zero < r3 && r3 < r2 && r2 < r1 && r1 < one);
    }

    #[test]
    fn between_on_longer_tuples() {
        let a = Rank::from_ints(&[1, -3]);
        let b = Rank::from_ints(&[1, -2]);
        let m = a.between(&b);
        assert!(a < m && m < b);
        assert_eq!(m.coords()[0], rat(1));
    }
}
