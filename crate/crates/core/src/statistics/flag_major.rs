//! The flag-major index and the transport map `phi`.
//!
//! Every `w` factors uniquely as `sigma_{n-1}^{k_{n-1}} ... sigma_1^{k_1} sigma_0^{k_0}`
//! with `0 <= k_i <= m(i+1) - 1`, and `fmaj(w) = sum k_i`. The factorisation
//! is found by peeling cosets: `sigma_i` only moves positions `1..=i+1`, so the
//! colored value `w(i+1)` for the top `i` fixes `k_i`.

use crate::error::{Error, Result};
use crate::group::{gen_sigma, identity, ColoredValue, GroupElement};
use crate::statistics::inversions::inversion_table;

const UNSET: usize = usize::MAX;

/// Cached powers of `sigma_i` and the lookup from `sigma_i^k(i+1)` to `k`.
#[derive(Debug, Clone)]
pub struct FlagDecomposer {
    m: usize,
    n: usize,
    /// `powers[i][k] = sigma_i^k`.
    powers: Vec<Vec<GroupElement>>,
    /// `inverse_powers[i][k] = sigma_i^{-k}`.
    inverse_powers: Vec<Vec<GroupElement>>,
    /// `exponent_of[i][(v - 1) m + c] = k` with `sigma_i^k(i+1) = eps^c v`.
    exponent_of: Vec<Vec<usize>>,
}

impl FlagDecomposer {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let mut powers = Vec::with_capacity(n);
        let mut inverse_powers = Vec::with_capacity(n);
        let mut exponent_of = Vec::with_capacity(n);
        for i in 0..n {
            let sigma = gen_sigma(m, n, i)?;
            let sigma_inv = sigma.inverse();
            let count = m * (i + 1);
            let mut table = vec![UNSET; count];
            let mut up = Vec::with_capacity(count);
            let mut down = Vec::with_capacity(count);
            let (mut p, mut q) = (identity(m, n), identity(m, n));
            for k in 0..count {
                let image = p.apply(ColoredValue::plain(i + 1));
                if image.value > i + 1 {
                    return Err(Error::DecompositionFailure(i));
                }
                let slot = &mut table[(image.value - 1) * m + image.color];
                if *slot != UNSET {
                    return Err(Error::DecompositionFailure(i));
                }
                *slot = k;
                let next_p = sigma.compose_unchecked(&p);
                let next_q = sigma_inv.compose_unchecked(&q);
                up.push(std::mem::replace(&mut p, next_p));
                down.push(std::mem::replace(&mut q, next_q));
            }
            powers.push(up);
            inverse_powers.push(down);
            exponent_of.push(table);
        }
        Ok(FlagDecomposer {
            m,
            n,
            powers,
            inverse_powers,
            exponent_of,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `[k_0, ..., k_{n-1}]`.
    pub fn exponents(&self, w: &GroupElement) -> Result<Vec<usize>> {
        if w.m() != self.m || w.n() != self.n {
            return Err(Error::DimensionMismatch(self.m, self.n, w.m(), w.n()));
        }
        let mut rest = w.clone();
        let mut k = vec![0; self.n];
        for i in (1..self.n).rev() {
            let target = rest.at(i + 1);
            if target.value > i + 1 {
                return Err(Error::DecompositionFailure(i));
            }
            let exponent = self.exponent_of[i][(target.value - 1) * self.m + target.color];
            if exponent == UNSET {
                return Err(Error::DecompositionFailure(i));
            }
            rest = self.inverse_powers[i][exponent].compose_unchecked(&rest);
            if rest.at(i + 1) != ColoredValue::plain(i + 1) {
                return Err(Error::DecompositionFailure(i));
            }
            k[i] = exponent;
        }
        // What is left is t_1^{k_0}.
        if rest.beta()[0] != 1 {
            return Err(Error::DecompositionFailure(0));
        }
        k[0] = rest.colors()[0];
        Ok(k)
    }

    /// `sigma_{n-1}^{k_{n-1}} ... sigma_0^{k_0}` from `[k_0, ..., k_{n-1}]`.
    pub fn compose(&self, exponents: &[usize]) -> Result<GroupElement> {
        if exponents.len() != self.n {
            return Err(Error::InvalidElement(format!(
                "{} exponents for n = {}",
                exponents.len(),
                self.n
            )));
        }
        let mut w = identity(self.m, self.n);
        for (i, &k) in exponents.iter().enumerate() {
            let max = self.m * (i + 1) - 1;
            if k > max {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    min: 0,
                    max,
                });
            }
            // Lower indices act first, so they are multiplied on the right.
            w = self.powers[i][k].compose_unchecked(&w);
        }
        Ok(w)
    }

    pub fn fmaj(&self, w: &GroupElement) -> Result<usize> {
        Ok(self.exponents(w)?.iter().sum())
    }

    /// `phi(w) = sigma_{n-1}^{a_{n-1}} ... sigma_0^{a_0}` where
    /// `Inv(w) = (a_{n-1} : ... : a_0)`.
    pub fn phi(&self, w: &GroupElement) -> Result<GroupElement> {
        let table = inversion_table(w);
        let exponents: Vec<usize> = table.entries().iter().rev().map(|&a| a as usize).collect();
        self.compose(&exponents)
    }
}

/// `[k_0, ..., k_{n-1}]` of the unique flag factorisation of `w`.
pub fn fmaj_exponents(w: &GroupElement) -> Result<Vec<usize>> {
    FlagDecomposer::new(w.m(), w.n())?.exponents(w)
}

pub fn fmaj(w: &GroupElement) -> Result<usize> {
    Ok(fmaj_exponents(w)?.iter().sum())
}

/// The bijection with `fmaj(phi(w)) = inv(w)`.
pub fn phi(w: &GroupElement) -> Result<GroupElement> {
    FlagDecomposer::new(w.m(), w.n())?.phi(w)
}
