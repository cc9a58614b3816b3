//! Interval refinement of π and sign determination for numbers of the form
//! `q + qpi·π` with rational `q`, `qpi`.
//!
//! The enclosure comes from Machin's formula
//! `π = 16·arctan(1/5) − 4·arctan(1/239)` with the alternating-series tail
//! bound, so both endpoints are exact rationals.

use crate::{rat, Rat};
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Mutex;

static CACHE: Mutex<BTreeMap<u32, (Rat, Rat)>> = Mutex::new(BTreeMap::new());

/// Enclosure of arctan(1/x) with tail error below `eps`.
fn arctan_recip(x: i64, eps: &Rat) -> (Rat, Rat) {
    let xx = rat(x * x);
    let mut term = Rat::one() / rat(x);
    let mut sum = Rat::zero();
    let mut k: i64 = 0;
    loop {
        let contrib = &term / rat(2 * k + 1);
        if &contrib < eps {
            // alternating series: truncation error bounded by the next term
            return if k % 2 == 0 {
                (sum.clone(), sum + contrib)
            } else {
                (sum.clone() - contrib, sum)
            };
        }
        if k % 2 == 0 {
            sum += &contrib;
        } else {
            sum -= &contrib;
        }
        term /= &xx;
        k += 1;
    }
}

/// Rational enclosure `[lo, hi]` of π with `hi − lo < 2^−bits`.
pub fn pi_enclosure(bits: u32) -> (Rat, Rat) {
    if let Some(hit) = CACHE.lock().unwrap().get(&bits) {
        return hit.clone();
    }
    let eps = Rat::new(num::BigInt::one(), num::BigInt::from(2).pow(bits + 6));
    let (a_lo, a_hi) = arctan_recip(5, &eps);
    let (b_lo, b_hi) = arctan_recip(239, &eps);
    let lo = rat(16) * a_lo - rat(4) * b_hi;
    let hi = rat(16) * a_hi - rat(4) * b_lo;
    CACHE.lock().unwrap().insert(bits, (lo.clone(), hi.clone()));
    (lo, hi)
}

/// Sign of `q + qpi·π`, exact.
///
/// Zero is recognized syntactically (`q = qpi = 0`, using the ℚ-linear
/// independence of 1 and π); otherwise the precision doubles until the
/// interval excludes zero, starting at 64 bits.
pub fn sign_with_pi(q: &Rat, qpi: &Rat) -> Ordering {
    if qpi.is_zero() {
        return q.cmp(&Rat::zero());
    }
    if q.is_zero() {
        return qpi.cmp(&Rat::zero());
    }
    let mut bits = 64;
    loop {
        let (pi_lo, pi_hi) = pi_enclosure(bits);
        let (lo, hi) = if qpi.is_positive() {
            (q + qpi * pi_lo, q + qpi * pi_hi)
        } else {
            (q + qpi * pi_hi, q + qpi * pi_lo)
        };
        if lo.is_positive() {
            return Ordering::Greater;
        }
        if hi.is_negative() {
            return Ordering::Less;
        }
        bits *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratq;

    #[test]
    fn enclosure_brackets_pi() {
        let (lo, hi) = pi_enclosure(64);
        assert!(lo < hi);
        // 3.14159265 < π < 3.14159266
        assert!(lo > ratq(314159265, 100000000));
        assert!(hi < ratq(314159266, 100000000));
    }

    #[test]
    fn sign_resolution() {
        assert_eq!(sign_with_pi(&rat(4), &rat(-1)), Ordering::Greater); // 4 − π
        assert_eq!(sign_with_pi(&rat(3), &rat(-1)), Ordering::Less); // 3 − π
        assert_eq!(sign_with_pi(&rat(0), &rat(0)), Ordering::Equal);
        assert_eq!(sign_with_pi(&rat(-7), &rat(2)), Ordering::Less); // 2π − 7
        // 355/113 is above π by ~2.7e−7; forces a few refinement rounds
        assert_eq!(sign_with_pi(&ratq(355, 113), &rat(-1)), Ordering::Greater);
        assert_eq!(sign_with_pi(&ratq(-333, 106), &rat(1)), Ordering::Greater);
    }
}
