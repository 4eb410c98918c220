//! Exhaustive invariant sweep over one group `G(m,1,n)`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;

use crate::error::Result;
use crate::group::{
    element_at, gen_s, gen_t, guarded_order, identity, longest_element, GroupElement, WordLengths,
};
use crate::mixed_radix::{encode_width_u64, group_order_u64, MixedRadixNumber};
use crate::par::{count_failures, map_indices, Execution};
use crate::statistics::{
    all_roots, delta, histogram_with, inv_closed, inversion_table, is_negative, poincare, rank_u64,
    unrank, FlagDecomposer, RootSystem, Statistic,
};
use crate::subexceedant::{digits_of_element, element_of_digits};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub outcome: Outcome,
    pub detail: String,
}

impl PropertyCheck {
    fn new(name: &'static str, failures: u64, detail: impl Into<String>) -> Self {
        PropertyCheck {
            name,
            outcome: if failures == 0 {
                Outcome::Pass
            } else {
                Outcome::Fail
            },
            detail: detail.into(),
        }
    }

    fn skip(name: &'static str, why: impl Into<String>) -> Self {
        PropertyCheck {
            name,
            outcome: Outcome::Skip,
            detail: why.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome != Outcome::Fail
    }
}

impl fmt::Display for PropertyCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "SKIP",
        };
        write!(f, "{tag} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

fn mismatches(count: u64) -> String {
    format!("{count} mismatches")
}

/// Runs every property on `G(m,1,n)`. Fails only when the group order exceeds
/// `budget`; individual property failures are reported in the result.
pub fn verify_group(
    m: usize,
    n: usize,
    budget: u64,
    exec: Execution,
) -> Result<Vec<PropertyCheck>> {
    let order = guarded_order(m, n, budget)?;
    let mut out = Vec::new();

    // Digit strings: round trip and injectivity.
    let failures = count_failures(exec, 0..order, |x| {
        encode_width_u64(x, m, n)
            .ok()
            .and_then(|d| d.to_u64())
            .is_some_and(|y| y == x)
    });
    let digit_count: u64 = (0..n).map(|i| (m * (i + 1)) as u64).product();
    out.push(PropertyCheck::new(
        "mixed-radix round trip",
        failures + u64::from(digit_count != order),
        format!("{order} values, {digit_count} digit strings"),
    ));

    // Subexceedant correspondence in both directions.
    let failures = count_failures(exec, 0..order, |x| {
        let d = encode_width_u64(x, m, n).expect("x below the group order");
        let w = element_of_digits(&d).expect("valid digits");
        digits_of_element(&w) == d
    });
    let images: HashSet<GroupElement> = map_indices(exec, 0..order, |x| {
        element_of_digits(&encode_width_u64(x, m, n).expect("in range")).expect("valid digits")
    })
    .into_iter()
    .collect();
    out.push(PropertyCheck::new(
        "integer representation bijection",
        failures + (order - images.len() as u64),
        mismatches(failures),
    ));

    out.push(check_presentation(m, n));

    // I(w0) digits are the exponents im - 1.
    let w0_digits = digits_of_element(&longest_element(m, n));
    let expected = MixedRadixNumber::max_digits(m, n)?;
    out.push(PropertyCheck::new(
        "longest element digits",
        u64::from(w0_digits != expected),
        w0_digits.to_string(),
    ));

    if m >= 2 {
        out.push(check_root_counts(m, n)?);
        let roots = RootSystem::new(m, n)?;
        let failures = count_failures(exec, 0..order, |x| {
            let w = element_at(m, n, x);
            let table = inversion_table(&w);
            (1..=n).all(|i| {
                roots.inv(&w, i).ok() == Some(table.get(i) as usize)
                    && inv_closed(&w, i).ok() == Some(table.get(i) as usize)
            }) && roots.length(&w).ok() == Some(table.total() as usize)
        });
        out.push(PropertyCheck::new(
            "inv oracle = closed form, sum = L",
            failures,
            mismatches(failures),
        ));
    } else {
        out.push(PropertyCheck::skip("root system identities", "m = 1"));
        out.push(PropertyCheck::skip(
            "inv oracle = closed form, sum = L",
            "m = 1",
        ));
    }

    // Rank is a bijection onto [1, order] and unrank inverts it.
    let failures = count_failures(exec, 0..order, |x| {
        let w = element_at(m, n, x);
        match rank_u64(&w) {
            Some(r) if (1..=order).contains(&r) => {
                unrank(&BigUint::from(r), m, n).ok().as_ref() == Some(&w)
            }
            _ => false,
        }
    });
    let ranks: HashSet<u64> = map_indices(exec, 0..order, |x| {
        rank_u64(&element_at(m, n, x)).unwrap_or(0)
    })
    .into_iter()
    .collect();
    out.push(PropertyCheck::new(
        "rank/unrank bijection",
        failures + (order - ranks.len() as u64),
        mismatches(failures),
    ));

    // Equidistribution of inv and fmaj with the product formula.
    let target = poincare(m, n);
    let inv_hist = histogram_with(exec, Statistic::Inv, m, n, budget)?;
    let fmaj_hist = histogram_with(exec, Statistic::Fmaj, m, n, budget)?;
    out.push(PropertyCheck::new(
        "equidistribution inv = fmaj = poincare",
        u64::from(inv_hist != target) + u64::from(fmaj_hist != target),
        target.to_string(),
    ));
    if m >= 2 {
        let length_hist = histogram_with(exec, Statistic::Length, m, n, budget)?;
        out.push(PropertyCheck::new(
            "L histogram = poincare",
            u64::from(length_hist != target),
            format!("degree {:?}", target.degree()),
        ));
    }

    // Flag factorisation bounds and the phi transport.
    let flags = FlagDecomposer::new(m, n)?;
    let failures = count_failures(exec, 0..order, |x| {
        let w = element_at(m, n, x);
        let Ok(k) = flags.exponents(&w) else {
            return false;
        };
        let bounded = k.iter().enumerate().all(|(i, &ki)| ki < m * (i + 1));
        let Ok(image) = flags.phi(&w) else {
            return false;
        };
        bounded
            && flags.compose(&k).ok().as_ref() == Some(&w)
            && flags.fmaj(&image).ok() == Some(inversion_table(&w).total() as usize)
    });
    let phi_images: HashSet<GroupElement> = map_indices(exec, 0..order, |x| {
        flags
            .phi(&element_at(m, n, x))
            .unwrap_or_else(|_| identity(m, n))
    })
    .into_iter()
    .collect();
    out.push(PropertyCheck::new(
        "fmaj(phi(w)) = inv(w), phi bijective",
        failures + (order - phi_images.len() as u64),
        mismatches(failures),
    ));

    // Word length over {t_1, s_1, ..., s_{n-1}}.
    if m >= 2 {
        let lengths = WordLengths::compute(m, n, budget)?;
        let mut failures = 0u64;
        let w0 = lengths.length(&longest_element(m, n))?;
        failures += u64::from(w0 != n * (n + m - 2));
        for j in 1..=n {
            failures += u64::from(lengths.length(&gen_t(m, n, j)?)? != 2 * j - 1);
        }
        out.push(PropertyCheck::new(
            "word lengths l(w0) = n(n+m-2), l(t_j) = 2j-1",
            failures,
            format!("l(w0) = {w0}"),
        ));
        if m == 2 {
            let roots = RootSystem::new(m, n)?;
            let failures = count_failures(exec, 0..order, |x| {
                let w = element_at(m, n, x);
                roots.length(&w).ok() == lengths.length(&w).ok()
            });
            out.push(PropertyCheck::new(
                "L = l when m = 2",
                failures,
                mismatches(failures),
            ));
        }
    } else {
        out.push(PropertyCheck::skip("word lengths", "m = 1"));
    }

    Ok(out)
}

/// Defining relations of `G(m,1,n)` and the conjugation law
/// `tau t_i tau^{-1} = t_{tau(i)}` for every `tau` in `S_n`.
pub fn check_presentation(m: usize, n: usize) -> PropertyCheck {
    let e = identity(m, n);
    let mul = |a: &GroupElement, b: &GroupElement| a.compose_unchecked(b);
    let s = |i| gen_s(m, n, i).expect("index in range");
    let t = |i| gen_t(m, n, i).expect("index in range");
    let mut failures = 0u64;
    let mut fail_if = |bad: bool| failures += u64::from(bad);

    for i in 1..n {
        fail_if(mul(&s(i), &s(i)) != e);
        if i + 1 < n {
            fail_if(mul(&s(i), &s(i + 1)).pow(3) != e);
        }
        for j in i + 2..n {
            fail_if(mul(&s(i), &s(j)).pow(2) != e);
        }
        fail_if(mul(&mul(&s(i), &t(i)), &s(i)) != t(i + 1));
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            fail_if(mul(&s(i), &t(j)) != mul(&t(j), &s(i)));
        }
    }
    fail_if(t(1).pow(m as i64) != e);
    for i in 1..=n {
        for j in 1..=n {
            fail_if(mul(&t(i), &t(j)) != mul(&t(j), &t(i)));
        }
    }
    let perms = group_order_u64(1, n).expect("n! fits for presentation checks");
    for x in 0..perms {
        let tau = element_at(1, n, x);
        let tau = GroupElement::new(m, tau.beta().to_vec(), vec![0; n]).expect("permutation");
        for i in 1..=n {
            let conj = mul(&mul(&tau, &t(i)), &tau.inverse());
            fail_if(conj != t(tau.beta()[i - 1]));
        }
    }
    PropertyCheck::new("presentation relations", failures, mismatches(failures))
}

fn check_root_counts(m: usize, n: usize) -> Result<PropertyCheck> {
    let phi = all_roots(m, n)?;
    let mut failures = u64::from(phi.len() != m * n * (m * n - 1));
    let negatives = phi.iter().filter(|&&r| is_negative(r)).count();
    failures += u64::from(2 * negatives != phi.len());
    failures += phi
        .iter()
        .filter(|&&r| is_negative(r) == is_negative(r.negate()))
        .count() as u64;
    let delta = delta(m, n)?;
    failures += delta.iter().filter(|&&r| is_negative(r)).count() as u64;
    let blocks: Vec<_> = (1..=n)
        .map(|i| crate::statistics::delta_block(m, n, i))
        .collect::<Result<_>>()?;
    let union: HashSet<_> = blocks.iter().flatten().copied().collect();
    let total: usize = blocks.iter().map(Vec::len).sum();
    failures += u64::from(total != union.len());
    failures += u64::from(union != delta.iter().copied().collect::<HashSet<_>>());
    for (i, b) in blocks.iter().enumerate() {
        failures += u64::from(b.len() != m * (n - i) - 1);
    }
    Ok(PropertyCheck::new(
        "root system identities",
        failures,
        format!("|Phi| = {}, |Delta| = {}", phi.len(), delta.len()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups_pass() {
        for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
            for check in verify_group(m, n, 10_000, Execution::default()).unwrap() {
                assert!(check.passed(), "G({m},1,{n}): {check}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(verify_group(3, 3, 100, Execution::Sequential).is_err());
    }

    #[test]
    fn report_lines() {
        let c = PropertyCheck::new("x", 0, "");
        assert_eq!(c.to_string(), "PASS x");
        let c = PropertyCheck::new("y", 2, "2 mismatches");
        assert_eq!(c.to_string(), "FAIL y (2 mismatches)");
        assert!(!c.passed());
        assert!(PropertyCheck::skip("z", "m = 1").passed());
    }
}
