//! The `G_{m,n}`-type mixed-radix number system.
//!
//! Position `i` (0-based, least significant first) carries weight
//! `G_i = m^i * i!` and admits digits `0 ..= m(i+1) - 1`, so `n` digits cover
//! exactly `[0, m^n n!)`. For `m = 1` this is the factorial number system.
//!
//! Text form is most-significant first with `:` separators, e.g. `3:13:1:5:2`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A digit vector of the `G_{m,n}` number system.
///
/// Digits are stored least-significant first and validated on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedRadixNumber {
    m: usize,
    digits: Vec<u64>,
}

/// Exclusive upper bound of the digit at `position`.
#[inline]
pub fn radix_at(m: usize, position: usize) -> u64 {
    (m as u64) * (position as u64 + 1)
}

impl MixedRadixNumber {
    /// Builds a number from least-significant-first digits.
    pub fn new(m: usize, digits: Vec<u64>) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroRadix);
        }
        if digits.is_empty() {
            return Err(Error::parse("", "a number needs at least one digit"));
        }
        for (position, &digit) in digits.iter().enumerate() {
            let bound = radix_at(m, position) - 1;
            if digit > bound {
                return Err(Error::DigitBound {
                    position,
                    digit,
                    bound,
                    m,
                });
            }
        }
        Ok(MixedRadixNumber { m, digits })
    }

    /// Builds a number from digits written most-significant first, the way
    /// they are printed.
    pub fn from_msf(m: usize, digits: &[u64]) -> Result<Self> {
        Self::new(m, digits.iter().rev().copied().collect())
    }

    pub fn zero(m: usize, width: usize) -> Result<Self> {
        Self::new(m, vec![0; width.max(1)])
    }

    /// The all-maximal digit string `(nm-1 : ... : 2m-1 : m-1)`, which decodes
    /// to `m^n n! - 1`.
    pub fn max_digits(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroRadix);
        }
        Self::new(m, (0..n.max(1)).map(|i| radix_at(m, i) - 1).collect())
    }

    /// Parses the colon-separated, most-significant-first text form.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::parse(text, "empty digit string"));
        }
        let mut msf = Vec::new();
        for entry in text.split(':') {
            if entry.is_empty() || !entry.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(entry, "digit must be a decimal integer"));
            }
            let digit = entry
                .parse::<u64>()
                .map_err(|_| Error::parse(entry, "digit too large"))?;
            msf.push(digit);
        }
        Self::from_msf(m, &msf)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of digits.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digits, least significant first.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Digit `d_position`.
    pub fn digit(&self, position: usize) -> u64 {
        self.digits[position]
    }

    /// Digits, most significant first.
    pub fn digits_msf(&self) -> Vec<u64> {
        self.digits.iter().rev().copied().collect()
    }

    /// Drops leading (most significant) zero digits, keeping at least one.
    pub fn trimmed(&self) -> Self {
        let keep = self
            .digits
            .iter()
            .rposition(|&d| d != 0)
            .map_or(1, |p| p + 1);
        MixedRadixNumber {
            m: self.m,
            digits: self.digits[..keep].to_vec(),
        }
    }

    /// Exact value `sum d_i G_i`.
    pub fn decode(&self) -> BigUint {
        // Horner form: G_{i+1} = m (i+1) G_i.
        let mut acc = BigUint::zero();
        for position in (0..self.digits.len()).rev() {
            acc *= radix_at(self.m, position);
            acc += self.digits[position];
        }
        acc
    }

    /// Value as `u64`, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        let mut acc: u64 = 0;
        for position in (0..self.digits.len()).rev() {
            acc = acc
                .checked_mul(radix_at(self.m, position))?
                .checked_add(self.digits[position])?;
        }
        Some(acc)
    }
}

impl fmt::Display for MixedRadixNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.digits.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(":")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// `[G_0, ..., G_{count-1}]` with `G_i = m^i i!`.
pub fn weights(m: usize, count: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(count);
    let mut g = BigUint::one();
    for i in 0..count {
        if i > 0 {
            g *= m as u64 * i as u64;
        }
        out.push(g.clone());
    }
    out
}

/// `G_n = m^n n!`, the order of `G(m,1,n)`.
pub fn group_order(m: usize, n: usize) -> BigUint {
    let mut g = BigUint::one();
    for i in 1..=n {
        g *= m as u64 * i as u64;
    }
    g
}

/// `m^n n!` as a `u64`, if it fits.
pub fn group_order_u64(m: usize, n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, i| acc.checked_mul(m as u64 * i))
}

/// Minimal-width representation of `x` by the successive-division chain
/// `x = m q_0 + d_0`, `q_{i-1} = (i+1) m q_i + d_i`, stopping at the first
/// zero quotient.
pub fn encode(x: &BigUint, m: usize) -> Result<MixedRadixNumber> {
    if m == 0 {
        return Err(Error::ZeroRadix);
    }
    let mut digits = Vec::new();
    let mut q = x.clone();
    loop {
        let radix = BigUint::from(radix_at(m, digits.len()));
        let (next, d) = q.div_rem(&radix);
        digits.push(d.to_u64().expect("remainder below a u64 radix"));
        if next.is_zero() {
            break;
        }
        q = next;
    }
    MixedRadixNumber::new(m, digits)
}

/// Exactly `n` digits, zero-padded; fails with [`Error::Overflow`] when
/// `x >= m^n n!`.
pub fn encode_width(x: &BigUint, m: usize, n: usize) -> Result<MixedRadixNumber> {
    if m == 0 {
        return Err(Error::ZeroRadix);
    }
    let mut digits = Vec::with_capacity(n);
    let mut q = x.clone();
    for position in 0..n {
        let (next, d) = q.div_rem(&BigUint::from(radix_at(m, position)));
        digits.push(d.to_u64().expect("remainder below a u64 radix"));
        q = next;
    }
    if !q.is_zero() || n == 0 {
        return Err(Error::Overflow { m, digits: n });
    }
    MixedRadixNumber::new(m, digits)
}

/// `u64` fast path of [`encode_width`] for whole-group sweeps.
pub fn encode_width_u64(x: u64, m: usize, n: usize) -> Result<MixedRadixNumber> {
    if m == 0 {
        return Err(Error::ZeroRadix);
    }
    let mut digits = Vec::with_capacity(n);
    let mut q = x;
    for position in 0..n {
        let radix = radix_at(m, position);
        digits.push(q % radix);
        q /= radix;
    }
    if q != 0 || n == 0 {
        return Err(Error::Overflow { m, digits: n });
    }
    Ok(MixedRadixNumber { m, digits })
}

/// Exact value of a digit string; see [`MixedRadixNumber::decode`].
pub fn decode(d: &MixedRadixNumber) -> BigUint {
    d.decode()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn weights_match_direct_products() {
        let as_u64 = |v: Vec<BigUint>| v.iter().map(|g| g.to_u64().unwrap()).collect::<Vec<_>>();
        assert_eq!(as_u64(weights(7, 5)), vec![1, 7, 98, 2058, 57624]);
        assert_eq!(as_u64(weights(1, 4)), vec![1, 1, 2, 6]);
        assert_eq!(as_u64(weights(3, 5)), vec![1, 3, 18, 162, 1944]);
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&big(199761), 7).unwrap().to_string(), "3:13:1:5:2");
        assert_eq!(encode(&big(0), 5).unwrap().to_string(), "0");
        assert_eq!(encode(&big(100), 2).unwrap().to_string(), "2:0:2:0");
        assert_eq!(
            decode(&MixedRadixNumber::parse("2:0:2:0", 2).unwrap()),
            big(100)
        );
    }

    #[test]
    fn encode_width_examples() {
        assert_eq!(
            encode_width(&big(2161), 3, 5).unwrap().to_string(),
            "1:1:3:0:1"
        );
        assert_eq!(encode_width(&big(0), 3, 3).unwrap().to_string(), "0:0:0");
        assert_eq!(
            encode_width(&big(162), 3, 3),
            Err(Error::Overflow { m: 3, digits: 3 })
        );
        assert_eq!(encode_width(&big(161), 3, 3).unwrap().to_string(), "8:5:2");
        assert!(encode_width_u64(162, 3, 3).is_err());
        assert_eq!(
            encode_width_u64(2161, 3, 5).unwrap().to_string(),
            "1:1:3:0:1"
        );
    }

    #[test]
    fn decode_examples() {
        let d = MixedRadixNumber::parse("3:13:1:5:2", 7).unwrap();
        assert_eq!(d.decode(), big(199761));
        assert_eq!(d.to_u64(), Some(199761));
        let d = MixedRadixNumber::parse("1:1:3:0:1", 3).unwrap();
        assert_eq!(d.decode(), big(2161));
        for m in 1..=5 {
            for n in 1..=6 {
                let max = MixedRadixNumber::max_digits(m, n).unwrap();
                assert_eq!(max.decode(), group_order(m, n) - 1u32);
            }
        }
    }

    #[test]
    fn digit_bounds_are_enforced() {
        assert!(MixedRadixNumber::parse("3:13:1:13:2", 7).is_ok());
        let err = MixedRadixNumber::parse("3:13:1:14:2", 7).unwrap_err();
        assert_eq!(
            err,
            Error::DigitBound {
                position: 1,
                digit: 14,
                bound: 13,
                m: 7
            }
        );
        assert!(matches!(
            MixedRadixNumber::parse("1:x:2", 3),
            Err(Error::Parse { entry, .. }) if entry == "x"
        ));
        assert!(MixedRadixNumber::parse("1: 2", 3).is_err());
        assert!(MixedRadixNumber::parse("", 3).is_err());
        assert!(MixedRadixNumber::parse("1::2", 3).is_err());
        assert_eq!(MixedRadixNumber::new(0, vec![0]), Err(Error::ZeroRadix));
    }

    #[test]
    fn trimmed_drops_leading_zeros() {
        let d = MixedRadixNumber::parse("0:0:3:1", 2).unwrap();
        assert_eq!(d.trimmed().to_string(), "3:1");
        assert_eq!(
            MixedRadixNumber::zero(4, 3).unwrap().trimmed().to_string(),
            "0"
        );
    }

    #[test]
    fn group_order_matches_weights() {
        for m in 1..=4 {
            let w = weights(m, 8);
            for (n, g) in w.iter().enumerate() {
                assert_eq!(&group_order(m, n), g);
                assert_eq!(group_order_u64(m, n).map(BigUint::from).as_ref(), Some(g));
            }
        }
        assert_eq!(group_order_u64(1000, 20), None);
    }
}
