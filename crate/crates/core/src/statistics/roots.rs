//! The root system of type `B_n^(m)` and the root-theoretic length `L`.
//!
//! A root `eps^a e_j - eps^b e_l` is kept as the formal quadruple
//! `(a, j, b, l)`; its negative swaps the two terms.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::GroupElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub a: usize,
    pub j: usize,
    pub b: usize,
    pub l: usize,
}

impl Root {
    pub fn new(m: usize, n: usize, a: usize, j: usize, b: usize, l: usize) -> Result<Self> {
        if a >= m || b >= m {
            return Err(Error::InvalidElement(format!(
                "root exponents ({a}, {b}) must lie in 0..{m}"
            )));
        }
        if j == 0 || j > n || l == 0 || l > n {
            return Err(Error::InvalidElement(format!(
                "root indices ({j}, {l}) must lie in 1..={n}"
            )));
        }
        if (a, j) == (b, l) {
            return Err(Error::InvalidElement("root terms coincide".into()));
        }
        Ok(Root { a, j, b, l })
    }

    pub fn negate(self) -> Root {
        Root {
            a: self.b,
            j: self.l,
            b: self.a,
            l: self.j,
        }
    }

    pub fn is_negative(self) -> bool {
        is_negative(self)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |f: &mut fmt::Formatter<'_>, k: usize, idx: usize| match k {
            0 => write!(f, "e{idx}"),
            1 => write!(f, "eps e{idx}"),
            _ => write!(f, "eps^{k} e{idx}"),
        };
        term(f, self.a, self.j)?;
        f.write_str(" - ")?;
        term(f, self.b, self.l)
    }
}

fn require_root_system(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::UnsupportedRadix(m));
    }
    Ok(())
}

/// Membership in `Phi^-`. The positive roots are
/// `eps^a e_j - eps^b e_j` with `a < b`, `e_j - eps^b e_l` with `l < j`, and
/// `eps^a e_j - eps^b e_l` with `b != 0`, `j < l`; negatives are their negations.
pub fn is_negative(r: Root) -> bool {
    use std::cmp::Ordering::*;
    match r.j.cmp(&r.l) {
        Equal => r.a > r.b,
        Greater => r.a != 0,
        Less => r.b == 0,
    }
}

/// `w(eps^a e_j) = eps^{a + r_j} e_{beta_j}`, applied to both terms.
pub fn act(w: &GroupElement, r: Root) -> Root {
    let m = w.m();
    let (beta, colors) = (w.beta(), w.colors());
    Root {
        a: (r.a + colors[r.j - 1]) % m,
        j: beta[r.j - 1],
        b: (r.b + colors[r.l - 1]) % m,
        l: beta[r.l - 1],
    }
}

/// All of `Phi`, `m n (m n - 1)` roots.
pub fn all_roots(m: usize, n: usize) -> Result<Vec<Root>> {
    require_root_system(m)?;
    let mut out = Vec::with_capacity(m * n * (m * n - 1));
    for j in 1..=n {
        for a in 0..m {
            for l in 1..=n {
                for b in 0..m {
                    if (a, j) != (b, l) {
                        out.push(Root { a, j, b, l });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `Delta = { e_j - eps^k e_l : l <= j }`, without the degenerate `e_j - e_j`.
pub fn delta(m: usize, n: usize) -> Result<Vec<Root>> {
    require_root_system(m)?;
    let mut out = Vec::new();
    for j in 1..=n {
        for l in 1..=j {
            for k in 0..m {
                if l == j && k == 0 {
                    continue;
                }
                out.push(Root { a: 0, j, b: k, l });
            }
        }
    }
    Ok(out)
}

/// `Delta_i`, the roots of `Delta` anchored at coordinate `p = n + 1 - i`:
/// `e_p - eps^k e_p` for `0 < k < m`, then `e_p - eps^k e_j` for `j < p`.
pub fn delta_block(m: usize, n: usize, i: usize) -> Result<Vec<Root>> {
    require_root_system(m)?;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: n,
        });
    }
    let p = n + 1 - i;
    let mut out = Vec::with_capacity(m * (n - i + 1) - 1);
    out.extend((1..m).map(|k| Root {
        a: 0,
        j: p,
        b: k,
        l: p,
    }));
    for j in 1..p {
        out.extend((0..m).map(|k| Root {
            a: 0,
            j: p,
            b: k,
            l: j,
        }));
    }
    Ok(out)
}

/// Precomputed `Delta_1, ..., Delta_n` for repeated length computations.
#[derive(Debug, Clone)]
pub struct RootSystem {
    m: usize,
    n: usize,
    blocks: Vec<Vec<Root>>,
}

impl RootSystem {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        require_root_system(m)?;
        let blocks = (1..=n)
            .map(|i| delta_block(m, n, i))
            .collect::<Result<_>>()?;
        Ok(RootSystem { m, n, blocks })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Delta_i`, `1 <= i <= n`.
    pub fn block(&self, i: usize) -> &[Root] {
        &self.blocks[i - 1]
    }

    fn check(&self, w: &GroupElement) -> Result<()> {
        if w.m() != self.m || w.n() != self.n {
            return Err(Error::DimensionMismatch(self.m, self.n, w.m(), w.n()));
        }
        Ok(())
    }

    /// `|w(Delta_i) cap Phi^-|`, counted root by root.
    pub fn inv(&self, w: &GroupElement, i: usize) -> Result<usize> {
        self.check(w)?;
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 1,
                max: self.n,
            });
        }
        Ok(self
            .block(i)
            .iter()
            .filter(|&&r| is_negative(act(w, r)))
            .count())
    }

    /// `L(w) = |w(Delta) cap Phi^-|`.
    pub fn length(&self, w: &GroupElement) -> Result<usize> {
        self.check(w)?;
        Ok(self
            .blocks
            .iter()
            .flatten()
            .filter(|&&r| is_negative(act(w, r)))
            .count())
    }
}

/// `L(w)`, the number of roots of `Delta` that `w` sends into `Phi^-`.
pub fn root_length(w: &GroupElement) -> Result<usize> {
    require_root_system(w.m())?;
    Ok(delta(w.m(), w.n())?
        .into_iter()
        .filter(|&r| is_negative(act(w, r)))
        .count())
}

/// `inv_i(w) = |w(Delta_i) cap Phi^-|` by direct count.
pub fn inv_oracle(w: &GroupElement, i: usize) -> Result<usize> {
    Ok(delta_block(w.m(), w.n(), i)?
        .into_iter()
        .filter(|&r| is_negative(act(w, r)))
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{gen_s, gen_t, identity, longest_element};
    use std::collections::HashSet;

    fn root(a: usize, j: usize, b: usize, l: usize) -> Root {
        Root { a, j, b, l }
    }

    #[test]
    fn set_sizes() {
        assert_eq!(all_roots(3, 3).unwrap().len(), 72);
        assert_eq!(delta(3, 3).unwrap().len(), 15);
        let sizes: Vec<_> = (1..=3)
            .map(|i| delta_block(3, 3, i).unwrap().len())
            .collect();
        assert_eq!(sizes, vec![8, 5, 2]);
        assert_eq!(delta_block(2, 2, 1).unwrap().len(), 3);
        assert_eq!(delta_block(2, 2, 2).unwrap().len(), 1);
        for m in 2..=5 {
            for n in 1..=5 {
                assert_eq!(
                    delta(m, n).unwrap().len(),
                    n * (m - 1) + m * n * (n - 1) / 2
                );
            }
        }
    }

    #[test]
    fn blocks_match_the_listed_sets() {
        // G(3,1,3): Delta_3 = { e1 - eps e1, e1 - eps^2 e1 }.
        assert_eq!(
            delta_block(3, 3, 3).unwrap(),
            vec![root(0, 1, 1, 1), root(0, 1, 2, 1)]
        );
        let d2: HashSet<_> = delta_block(3, 3, 2).unwrap().into_iter().collect();
        let expected: HashSet<_> = [
            root(0, 2, 1, 2),
            root(0, 2, 2, 2),
            root(0, 2, 0, 1),
            root(0, 2, 1, 1),
            root(0, 2, 2, 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(d2, expected);
    }

    #[test]
    fn m_one_is_rejected() {
        assert_eq!(all_roots(1, 3), Err(Error::UnsupportedRadix(1)));
        assert_eq!(delta(1, 3), Err(Error::UnsupportedRadix(1)));
        assert!(RootSystem::new(1, 2).is_err());
        assert_eq!(
            root_length(&identity(1, 3)),
            Err(Error::UnsupportedRadix(1))
        );
        assert!(matches!(
            delta_block(3, 3, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn negativity_examples() {
        assert!(is_negative(root(1, 1, 0, 1)));
        assert!(!is_negative(root(0, 2, 0, 1)));
        assert!(is_negative(root(0, 1, 0, 2)));
        assert!(Root::new(3, 2, 1, 1, 1, 1).is_err());
        assert!(Root::new(3, 2, 3, 1, 0, 1).is_err());
    }

    #[test]
    fn action_examples() {
        let t1 = gen_t(3, 2, 1).unwrap();
        let image = act(&t1, root(0, 1, 2, 1));
        assert_eq!(image, root(1, 1, 0, 1));
        assert!(is_negative(image));
        for r in all_roots(3, 2).unwrap() {
            assert_eq!(act(&identity(3, 2), r), r);
        }
        let s1 = gen_s(3, 2, 1).unwrap();
        let image = act(&s1, root(0, 2, 0, 1));
        assert_eq!(image, root(0, 1, 0, 2));
        assert!(is_negative(image));
    }

    #[test]
    fn length_examples() {
        assert_eq!(root_length(&identity(4, 3)).unwrap(), 0);
        for (m, n) in [(2, 3), (3, 3), (5, 4)] {
            assert_eq!(
                root_length(&longest_element(m, n)).unwrap(),
                n * (m - 1) + m * n * (n - 1) / 2
            );
        }
        let w = GroupElement::parse("[2]3 [4]1 [1]6 5 [1]4 [2]2", 5).unwrap();
        assert_eq!(root_length(&w).unwrap(), 43);
        assert_eq!(RootSystem::new(5, 6).unwrap().length(&w).unwrap(), 43);
        assert_eq!(root_length(&gen_t(3, 2, 2).unwrap()).unwrap(), 4);
    }

    #[test]
    fn oracle_examples() {
        let w = GroupElement::parse("[2]3 [1]1 2", 3).unwrap();
        let inv: Vec<_> = (1..=3).map(|i| inv_oracle(&w, i).unwrap()).collect();
        assert_eq!(inv, vec![1, 2, 2]);

        // The witnesses named for this element: w(Delta_1) meets Phi^- in
        // { e2 - e3 }, w(Delta_2) in { eps e1 - e1, eps e1 - e3 }.
        let witnesses = |i| -> HashSet<Root> {
            delta_block(3, 3, i)
                .unwrap()
                .into_iter()
                .map(|r| act(&w, r))
                .filter(|&r| is_negative(r))
                .collect()
        };
        assert_eq!(witnesses(1), [root(0, 2, 0, 3)].into_iter().collect());
        assert_eq!(
            witnesses(2),
            [root(1, 1, 0, 1), root(1, 1, 0, 3)].into_iter().collect()
        );
        assert_eq!(
            witnesses(3),
            [root(2, 3, 0, 3), root(2, 3, 1, 3)].into_iter().collect()
        );

        let w = GroupElement::parse("[2]3 [4]1 [1]6 5 [1]4 [2]2", 5).unwrap();
        let inv: Vec<_> = (1..=6).map(|i| inv_oracle(&w, i).unwrap()).collect();
        assert_eq!(inv, vec![11, 13, 1, 11, 5, 2]);
        for i in 1..=3 {
            assert_eq!(inv_oracle(&identity(3, 3), i).unwrap(), 0);
        }
    }
}
