//! Inversion tables, rank and unrank.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{ColoredValue, GroupElement};
use crate::mixed_radix::{encode_width, group_order, MixedRadixNumber};

/// `inv_i(w)` from the window alone:
/// `r_p + m * #{j < p : beta_j < beta_p}` (the second term only when
/// `r_p != 0`) `+ #{j < p : beta_j > beta_p}`, where `p = n + 1 - i`.
pub fn inv_closed(w: &GroupElement, i: usize) -> Result<usize> {
    let n = w.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: n,
        });
    }
    Ok(inv_at(w, n + 1 - i))
}

fn inv_at(w: &GroupElement, p: usize) -> usize {
    let beta = w.beta();
    let pivot = beta[p - 1];
    let r = w.colors()[p - 1];
    let below = beta[..p - 1].iter().filter(|&&v| v < pivot).count();
    let above = p - 1 - below;
    if r == 0 {
        above
    } else {
        r + w.m() * below + above
    }
}

/// `Inv(w) = (inv_1 : ... : inv_n)` with `0 <= inv_i <= m(n - i + 1) - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InversionTable {
    m: usize,
    entries: Vec<u64>,
}

impl InversionTable {
    /// `entries[i - 1] = inv_i`.
    pub fn new(m: usize, entries: Vec<u64>) -> Result<Self> {
        let digits = MixedRadixNumber::from_msf(m, &entries)?;
        Ok(Self::from_digits(&digits))
    }

    /// Reads `d_{n-i}` as `inv_i`.
    pub fn from_digits(d: &MixedRadixNumber) -> Self {
        InversionTable {
            m: d.m(),
            entries: d.digits_msf(),
        }
    }

    pub fn parse(text: &str, m: usize) -> Result<Self> {
        Ok(Self::from_digits(&MixedRadixNumber::parse(text, m)?))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// `inv_1, ..., inv_n`.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// `inv_i` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> u64 {
        self.entries[i - 1]
    }

    /// Sum of entries, `inv(w)`.
    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// The table as a `G_{m,n}` digit string: `d_{n-i} = inv_i`.
    pub fn to_digits(&self) -> MixedRadixNumber {
        MixedRadixNumber::from_msf(self.m, &self.entries)
            .expect("inversion table entries satisfy the digit bounds")
    }
}

/// Same colon form as digit strings, `inv_1` first.
impl fmt::Display for InversionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(":")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub fn inversion_table(w: &GroupElement) -> InversionTable {
    let n = w.n();
    InversionTable {
        m: w.m(),
        entries: (1..=n).map(|i| inv_at(w, n + 1 - i) as u64).collect(),
    }
}

/// `rank(w) = x + 1` where `x` is `Inv(w)` read in the `G_{m,n}` system.
pub fn rank(w: &GroupElement) -> BigUint {
    inversion_table(w).to_digits().decode() + 1u32
}

/// `u64` fast path of [`rank`].
pub fn rank_u64(w: &GroupElement) -> Option<u64> {
    inversion_table(w).to_digits().to_u64()?.checked_add(1)
}

/// The element of rank `r`, `1 <= r <= m^n n!`.
pub fn unrank(r: &BigUint, m: usize, n: usize) -> Result<GroupElement> {
    let out_of_range = || Error::RankOutOfRange {
        rank: r.to_string(),
        max: group_order(m, n).to_string(),
    };
    if r.is_zero() {
        return Err(out_of_range());
    }
    let digits = encode_width(&(r - BigUint::one()), m, n).map_err(|e| match e {
        Error::Overflow { .. } => out_of_range(),
        other => other,
    })?;
    element_of_table(&InversionTable::from_digits(&digits))
}

/// Rebuilds `w` from `Inv(w)`, filling positions `n, n-1, ..., 1`.
///
/// Candidates are listed as the remaining plain values in descending order,
/// then `[1]v, ..., [m-1]v` for each remaining `v` in ascending order; step
/// `i` takes the candidate at index `inv_i` and drops every entry with the
/// same absolute value.
pub fn element_of_table(table: &InversionTable) -> Result<GroupElement> {
    let (m, n) = (table.m(), table.n());
    let mut candidates: Vec<ColoredValue> = (1..=n).rev().map(ColoredValue::plain).collect();
    for v in 1..=n {
        candidates.extend((1..m).map(|c| ColoredValue::new(v, c)));
    }
    let mut window = vec![ColoredValue::plain(0); n];
    for i in 1..=n {
        let index = table.get(i) as usize;
        let chosen = *candidates.get(index).ok_or_else(|| Error::DigitBound {
            position: n - i,
            digit: index as u64,
            bound: candidates.len() as u64 - 1,
            m,
        })?;
        window[n - i] = chosen;
        candidates.retain(|c| c.value != chosen.value);
    }
    GroupElement::from_window(m, &window)
}
