//! Elements of a presented ordered ℚ-vector space: finite ℚ-linear
//! combinations of named basis symbols, kept in canonical form (no zero
//! coefficients).

use super::rank::Rank;
use super::value::LeadingValue;
use crate::Rat;
use num::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisSymbol {
    pub name: String,
    pub rank: Rank,
    pub leading: LeadingValue,
}

impl BasisSymbol {
    pub fn new(name: &str, rank: Rank, leading: LeadingValue) -> Self {
        assert!(!leading.is_zero(), "basis symbol needs a nonzero leading value");
        BasisSymbol {
            name: name.to_string(),
            rank,
            leading,
        }
    }
}

/// A finite ℚ-combination of basis symbols, identified by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelElement {
    combo: BTreeMap<String, Rat>,
}

impl ModelElement {
    pub fn zero() -> Self {
        ModelElement::default()
    }

    pub fn symbol(name: &str) -> Self {
        ModelElement::from_coeff(name, Rat::from_integer(1.into()))
    }

    pub fn from_coeff(name: &str, coeff: Rat) -> Self {
        let mut combo = BTreeMap::new();
        if !coeff.is_zero() {
            combo.insert(name.to_string(), coeff);
        }
        ModelElement { combo }
    }

    pub fn is_zero(&self) -> bool {
        self.combo.is_empty()
    }

    pub fn coeff(&self, name: &str) -> Rat {
        self.combo.get(name).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Rat)> {
        self.combo.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &String> {
        self.combo.keys()
    }

    pub fn scale(&self, c: &Rat) -> ModelElement {
        if c.is_zero() {
            return ModelElement::zero();
        }
        ModelElement {
            combo: self.combo.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &ModelElement, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.combo {
            let entry = self.combo.entry(k.clone()).or_insert_with(Rat::zero);
            *entry += v * c;
            if entry.is_zero() {
                self.combo.remove(k);
            }
        }
    }
}

impl Add for &ModelElement {
    type Output = ModelElement;
    fn add(self, rhs: &ModelElement) -> ModelElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rat::from_integer(1.into()));
        out
    }
}

impl Sub for &ModelElement {
    type Output = ModelElement;
    fn sub(self, rhs: &ModelElement) -> ModelElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rat::from_integer((-1).into()));
        out
    }
}

impl Neg for &ModelElement {
    type Output = ModelElement;
    fn neg(self) -> ModelElement {
        self.scale(&Rat::from_integer((-1).into()))
    }
}

impl fmt::Display for ModelElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.combo.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (name, c) in &self.combo {
            if first {
                if c == &Rat::from_integer(1.into()) {
                    write!(f, "{}", name)?;
                } else if c == &Rat::from_integer((-1).into()) {
                    write!(f, "-{}", name)?;
                } else {
                    write!(f, "{}*{}", c, name)?;
                }
                first = false;
                continue;
            }
            if c.is_negative() {
                let a = -c;
                if a == Rat::from_integer(1.into()) {
                    write!(f, " - {}", name)?;
                } else {
                    write!(f, " - {}*{}", a, name)?;
                }
            } else if c == &Rat::from_integer(1.into()) {
                write!(f, " + {}", name)?;
            } else {
                write!(f, " + {}*{}", c, name)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratq};

    #[test]
    fn canonical_form_drops_zeros() {
        let b0 = ModelElement::symbol("b0");
        let x = &(&b0 + &b0) - &b0.scale(&rat(2));
        assert!(x.is_zero());
        assert_eq!(ModelElement::from_coeff("b0", rat(0)), ModelElement::zero());
    }

    #[test]
    fn vector_space_laws_on_samples() {
        let x = &ModelElement::from_coeff("a", ratq(2, 3)) + &ModelElement::symbol("b");
        let y = ModelElement::from_coeff("b", rat(-4));
        let z = ModelElement::from_coeff("c", ratq(1, 7));
        assert_eq!(&x + &y, &y + &x);
        assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        assert_eq!((&x + &y).scale(&rat(3)), &x.scale(&rat(3)) + &y.scale(&rat(3)));
    }

    #[test]
    fn display_reads_naturally() {
        let e = &ModelElement::symbol("b1") - &ModelElement::from_coeff("b0", rat(1000));
        assert_eq!(e.to_string(), "-1000*b0 + b1");
    }
}
