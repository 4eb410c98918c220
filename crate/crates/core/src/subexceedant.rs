//! Integer representation `I(w)` through subexceedant functions.
//!
//! The chain is: digits `(d_{n-1}:...:d_0)` -> subexceedant function
//! `f(i) = 1 + floor(d_{i-1} / m)` plus colors `r_i = d_{i-1} mod m` ->
//! `beta = psi(f)` -> the window `eps^{r_i} beta_i`. This correspondence is
//! unrelated to the inversion-table ranking in [`crate::statistics`].

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::mixed_radix::{encode_width, encode_width_u64, MixedRadixNumber};

/// A map `f` on `[1, n]` with `1 <= f(i) <= i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubexceedantFunction {
    values: Vec<usize>,
}

impl SubexceedantFunction {
    /// `values[i - 1] = f(i)`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        for (k, &v) in values.iter().enumerate() {
            if v == 0 || v > k + 1 {
                return Err(Error::InvalidElement(format!(
                    "f({}) = {v} outside 1..={}",
                    k + 1,
                    k + 1
                )));
            }
        }
        Ok(SubexceedantFunction { values })
    }

    /// The function `f(i) = i`, which `psi` sends to the identity.
    pub fn identity(n: usize) -> Self {
        SubexceedantFunction {
            values: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `f(i)` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// All `n!` subexceedant functions on `[1, n]`, in odometer order.
    pub fn all(n: usize) -> impl Iterator<Item = SubexceedantFunction> {
        let total: usize = (1..=n).product();
        (0..total).map(move |mut x| {
            let mut values = vec![0; n];
            for (k, v) in values.iter_mut().enumerate() {
                *v = 1 + x % (k + 1);
                x /= k + 1;
            }
            SubexceedantFunction { values }
        })
    }
}

/// Written `f(1);f(2);...;f(n)`.
impl fmt::Display for SubexceedantFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `psi(f) = (n f(n)) ... (2 f(2)) (1 f(1))`, rightmost transposition first.
/// Returns the window `beta_1..beta_n`.
pub fn psi(f: &SubexceedantFunction) -> Vec<usize> {
    let n = f.n();
    // image[k] = current image of k + 1; position[v] = preimage of v + 1.
    let mut image: Vec<usize> = (1..=n).collect();
    let mut position: Vec<usize> = (0..n).collect();
    for i in 1..=n {
        let j = f.get(i);
        if i == j {
            continue;
        }
        // Composing (i j) on the left swaps the values i and j in the image.
        let (p, q) = (position[i - 1], position[j - 1]);
        image[p] = j;
        image[q] = i;
        position.swap(i - 1, j - 1);
    }
    image
}

/// Recovers `f` with `psi(f) = beta` by repeatedly reading `f(k) = beta_k`
/// and moving `beta_k` into the slot that held `k`, which leaves `k` fixed.
pub fn psi_inverse(beta: &[usize]) -> SubexceedantFunction {
    let n = beta.len();
    let mut current = beta.to_vec();
    let mut position = vec![0; n + 1];
    for (p, &v) in current.iter().enumerate() {
        position[v] = p;
    }
    let mut values = vec![0; n];
    for k in (1..=n).rev() {
        let image = current[k - 1];
        values[k - 1] = image;
        let p = position[k];
        current[p] = image;
        position[image] = p;
        current[k - 1] = k;
        position[k] = k - 1;
    }
    SubexceedantFunction { values }
}

/// The subexceedant function `f(i) = 1 + floor(d_{i-1} / m)` of a digit string.
pub fn subexceedant_of_digits(d: &MixedRadixNumber) -> SubexceedantFunction {
    let m = d.m() as u64;
    SubexceedantFunction {
        values: d.digits().iter().map(|&x| 1 + (x / m) as usize).collect(),
    }
}

/// `pi_x`: `beta = psi(f)` with colors `r_i = d_{i-1} mod m`.
pub fn element_of_digits(d: &MixedRadixNumber) -> Result<GroupElement> {
    let m = d.m();
    let beta = psi(&subexceedant_of_digits(d));
    let colors = d
        .digits()
        .iter()
        .map(|&x| (x % m as u64) as usize)
        .collect();
    Ok(GroupElement::from_parts_unchecked(m, beta, colors))
}

/// `d_i = m (f(i+1) - 1) + r_{i+1}` with `f = psi^{-1}(beta)`.
pub fn digits_of_element(w: &GroupElement) -> MixedRadixNumber {
    let m = w.m();
    let f = psi_inverse(w.beta());
    let digits = f
        .values()
        .iter()
        .zip(w.colors())
        .map(|(&fi, &r)| (m * (fi - 1) + r) as u64)
        .collect();
    MixedRadixNumber::new(m, digits).expect("digits of a valid element satisfy their bounds")
}

/// `I(w)`, in `[0, m^n n! - 1]`.
pub fn integer_of_element(w: &GroupElement) -> BigUint {
    digits_of_element(w).decode()
}

/// Inverse of [`integer_of_element`]; fails with [`Error::Overflow`] when
/// `x >= m^n n!`.
pub fn element_of_integer(x: &BigUint, m: usize, n: usize) -> Result<GroupElement> {
    element_of_digits(&encode_width(x, m, n)?)
}

pub fn element_of_integer_u64(x: u64, m: usize, n: usize) -> Result<GroupElement> {
    element_of_digits(&encode_width_u64(x, m, n)?)
}
