//! Leading values: real numbers of the form `q + qpi·π`. The restriction to
//! ℚ + ℚπ keeps the value zero syntactically recognizable while still
//! providing an irrational completion point for value cuts.

use super::pi::sign_with_pi;
use crate::Rat;
use num::Zero;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LeadingValue {
    pub q: Rat,
    pub qpi: Rat,
}

impl LeadingValue {
    pub fn rational(q: Rat) -> Self {
        LeadingValue { q, qpi: Rat::zero() }
    }

    pub fn pi_multiple(qpi: Rat) -> Self {
        LeadingValue { q: Rat::zero(), qpi }
    }

    pub fn zero() -> Self {
        LeadingValue::default()
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero() && self.qpi.is_zero()
    }

    pub fn sign(&self) -> Ordering {
        sign_with_pi(&self.q, &self.qpi)
    }

    pub fn scale(&self, c: &Rat) -> LeadingValue {
        LeadingValue {
            q: &self.q * c,
            qpi: &self.qpi * c,
        }
    }
}

impl Add for &LeadingValue {
    type Output = LeadingValue;
    fn add(self, rhs: &LeadingValue) -> LeadingValue {
        LeadingValue {
            q: &self.q + &rhs.q,
            qpi: &self.qpi + &rhs.qpi,
        }
    }
}

impl Sub for &LeadingValue {
    type Output = LeadingValue;
    fn sub(self, rhs: &LeadingValue) -> LeadingValue {
        LeadingValue {
            q: &self.q - &rhs.q,
            qpi: &self.qpi - &rhs.qpi,
        }
    }
}

impl Neg for &LeadingValue {
    type Output = LeadingValue;
    fn neg(self) -> LeadingValue {
        LeadingValue {
            q: -&self.q,
            qpi: -&self.qpi,
        }
    }
}

impl Mul<&Rat> for &LeadingValue {
    type Output = LeadingValue;
    fn mul(self, c: &Rat) -> LeadingValue {
        self.scale(c)
    }
}

impl PartialOrd for LeadingValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LeadingValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign()
    }
}

impl fmt::Display for LeadingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.qpi.is_zero() {
            return write!(f, "{}", self.q);
        }
        if self.q.is_zero() {
            return write!(f, "{}*pi", self.qpi);
        }
        write!(f, "{} + {}*pi", self.q, self.qpi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratq};

    #[test]
    fn ordering_through_pi() {
        let four = LeadingValue::rational(rat(4));
        let pi = LeadingValue::pi_multiple(rat(1));
        let three = LeadingValue::rational(rat(3));
        assert!(three < pi && pi < four);
        assert!(LeadingValue::pi_multiple(ratq(-1, 2)) < LeadingValue::zero());
    }

    #[test]
    fn zero_iff_both_components_vanish() {
        assert!(LeadingValue::zero().is_zero());
        let v = LeadingValue { q: rat(-3), qpi: rat(1) };
        assert!(!v.is_zero());
        assert_eq!(v.sign(), Ordering::Greater); // π > 3
    }
}
