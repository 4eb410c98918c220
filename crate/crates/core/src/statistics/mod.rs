//! Root-system length, inversion tables, ranking, the flag-major index and
//! their generating functions.

pub mod flag_major;
pub mod inversions;
pub mod poly;
pub mod roots;

use std::fmt;
use std::str::FromStr;

pub use flag_major::{fmaj, fmaj_exponents, phi, FlagDecomposer};
pub use inversions::{
    element_of_table, inv_closed, inversion_table, rank, rank_u64, unrank, InversionTable,
};
pub use poly::{poincare, QPolynomial};
pub use roots::{
    act, all_roots, delta, delta_block, inv_oracle, is_negative, root_length, Root, RootSystem,
};

use crate::error::{Error, Result};
use crate::group::{element_at, guarded_order};
use crate::par::{fold_indices, Execution};

/// A statistic tallied over the whole group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    /// `inv(w) = sum_i inv_i(w)`, from the closed form.
    Inv,
    /// Flag-major index.
    Fmaj,
    /// `L(w)`, counted over the roots of `Delta`.
    Length,
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistic::Inv => "inv",
            Statistic::Fmaj => "fmaj",
            Statistic::Length => "L",
        })
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inv" => Ok(Statistic::Inv),
            "fmaj" => Ok(Statistic::Fmaj),
            "L" | "length" => Ok(Statistic::Length),
            _ => Err(Error::parse(s, "expected one of inv, fmaj, L")),
        }
    }
}

/// `sum_w q^{stat(w)}` over `G(m,1,n)`, by enumeration.
pub fn histogram(stat: Statistic, m: usize, n: usize, budget: u64) -> Result<QPolynomial> {
    histogram_with(Execution::default(), stat, m, n, budget)
}

pub fn histogram_with(
    exec: Execution,
    stat: Statistic,
    m: usize,
    n: usize,
    budget: u64,
) -> Result<QPolynomial> {
    let order = guarded_order(m, n, budget)?;
    let roots = match stat {
        Statistic::Length => Some(RootSystem::new(m, n)?),
        _ => None,
    };
    let flags = match stat {
        Statistic::Fmaj => Some(FlagDecomposer::new(m, n)?),
        _ => None,
    };
    let value = |x: u64| -> Result<usize> {
        let w = element_at(m, n, x);
        match stat {
            Statistic::Inv => Ok(inversion_table(&w).total() as usize),
            Statistic::Fmaj => flags.as_ref().expect("decomposer built").fmaj(&w),
            Statistic::Length => roots.as_ref().expect("root system built").length(&w),
        }
    };
    let counts = fold_indices(
        exec,
        0..order,
        || Ok(Vec::new()),
        |acc: Result<Vec<u64>>, x| {
            let mut counts = acc?;
            let k = value(x)?;
            if counts.len() <= k {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
            Ok(counts)
        },
        |a, b| {
            let (mut a, b) = (a?, b?);
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            for (slot, c) in a.iter_mut().zip(b) {
                *slot += c;
            }
            Ok(a)
        },
    )?;
    Ok(QPolynomial::from_counts(&counts))
}
