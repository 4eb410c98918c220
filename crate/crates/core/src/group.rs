//! Elements of `G(m,1,n)` as colored permutations.
//!
//! An element is stored in window form: position `k` maps to the colored value
//! `eps^{r_k} beta_k`. Colors are exponents mod `m`; the root of unity itself
//! is never evaluated. Products follow the right-to-left convention,
//! `(u v)(x) = u(v(x))`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mixed_radix::group_order_u64;

/// The colored point `eps^color * value` of `I_n^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredValue {
    pub value: usize,
    pub color: usize,
}

impl ColoredValue {
    pub fn new(value: usize, color: usize) -> Self {
        ColoredValue { value, color }
    }

    pub fn plain(value: usize) -> Self {
        ColoredValue { value, color: 0 }
    }
}

impl fmt::Display for ColoredValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.color == 0 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "[{}]{}", self.color, self.value)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    m: usize,
    beta: Vec<usize>,
    colors: Vec<usize>,
}

impl GroupElement {
    /// Validates a window given as the permutation `beta` (values `1..=n`) and
    /// the color exponents `r_1..r_n`.
    pub fn new(m: usize, beta: Vec<usize>, colors: Vec<usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroRadix);
        }
        let n = beta.len();
        if n == 0 {
            return Err(Error::InvalidElement("empty window".into()));
        }
        if colors.len() != n {
            return Err(Error::InvalidElement(format!(
                "{} colors for {} positions",
                colors.len(),
                n
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &beta {
            if v == 0 || v > n {
                return Err(Error::InvalidElement(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidElement(format!("value {v} repeated")));
            }
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= m) {
            return Err(Error::InvalidElement(format!("color {c} outside 0..{m}")));
        }
        Ok(GroupElement { m, beta, colors })
    }

    pub(crate) fn from_parts_unchecked(m: usize, beta: Vec<usize>, colors: Vec<usize>) -> Self {
        debug_assert!(GroupElement::new(m, beta.clone(), colors.clone()).is_ok());
        GroupElement { m, beta, colors }
    }

    /// Builds an element from its window entries.
    pub fn from_window(m: usize, window: &[ColoredValue]) -> Result<Self> {
        Self::new(
            m,
            window.iter().map(|c| c.value).collect(),
            window.iter().map(|c| c.color).collect(),
        )
    }

    /// Parses the window text form, e.g. `[2]3 [4]1 [1]6 5 [1]4 [2]2`.
    ///
    /// An entry is an optional `[k]` prefix with `1 <= k <= m-1` followed by
    /// the decimal value; `n` is the number of entries.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroRadix);
        }
        let mut window = Vec::new();
        for entry in text.split_whitespace() {
            window.push(parse_entry(entry, m)?);
        }
        if window.is_empty() {
            return Err(Error::parse(text, "empty window"));
        }
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for (entry, cv) in text.split_whitespace().zip(&window) {
            if cv.value == 0 || cv.value > n {
                return Err(Error::parse(entry, format!("value outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[cv.value], true) {
                return Err(Error::parse(entry, "value repeated"));
            }
        }
        Self::from_window(m, &window)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.beta.len()
    }

    /// `beta_1..beta_n`.
    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    /// `r_1..r_n`.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// `w(k)` for a 1-based position `k`.
    pub fn at(&self, k: usize) -> ColoredValue {
        ColoredValue::new(self.beta[k - 1], self.colors[k - 1])
    }

    pub fn window(&self) -> impl Iterator<Item = ColoredValue> + '_ {
        self.beta
            .iter()
            .zip(&self.colors)
            .map(|(&v, &c)| ColoredValue::new(v, c))
    }

    /// Action on a colored point: `eps^c x -> eps^{c + r_x} beta_x`.
    pub fn apply(&self, x: ColoredValue) -> ColoredValue {
        let i = x.value - 1;
        ColoredValue::new(self.beta[i], (x.color + self.colors[i]) % self.m)
    }

    pub fn is_identity(&self) -> bool {
        self.colors.iter().all(|&c| c == 0)
            && self.beta.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    fn check_same_group(&self, other: &GroupElement) -> Result<()> {
        if self.m != other.m || self.n() != other.n() {
            return Err(Error::DimensionMismatch(
                self.m,
                self.n(),
                other.m,
                other.n(),
            ));
        }
        Ok(())
    }

    /// `self * other`; `other` acts first.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_same_group(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &GroupElement) -> GroupElement {
        let m = self.m;
        let (beta, colors) = other
            .beta
            .iter()
            .zip(&other.colors)
            .map(|(&g, &v)| (self.beta[g - 1], (v + self.colors[g - 1]) % m))
            .unzip();
        GroupElement { m, beta, colors }
    }

    pub fn inverse(&self) -> GroupElement {
        let n = self.n();
        let mut beta = vec![0; n];
        let mut colors = vec![0; n];
        for (k, (&v, &r)) in self.beta.iter().zip(&self.colors).enumerate() {
            beta[v - 1] = k + 1;
            colors[v - 1] = (self.m - r) % self.m;
        }
        GroupElement {
            m: self.m,
            beta,
            colors,
        }
    }

    /// `self^k`; negative exponents go through the inverse.
    pub fn pow(&self, k: i64) -> GroupElement {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = identity(self.m, self.n());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Position of this element in [`enumerate_group`] order: permutations in
    /// lexicographic order, and within each permutation the color vectors as
    /// base-`m` numbers with `r_1` most significant.
    pub fn dense_index(&self) -> u64 {
        let n = self.n();
        let mut perm_rank: u64 = 0;
        for i in 0..n {
            let smaller_later = self.beta[i + 1..]
                .iter()
                .filter(|&&v| v < self.beta[i])
                .count() as u64;
            perm_rank = perm_rank * (n - i) as u64 + smaller_later;
        }
        let color_rank = self
            .colors
            .iter()
            .fold(0u64, |acc, &c| acc * self.m as u64 + c as u64);
        perm_rank * (self.m as u64).pow(n as u32) + color_rank
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, cv) in self.window().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{cv}")?;
        }
        Ok(())
    }
}

fn parse_entry(entry: &str, m: usize) -> Result<ColoredValue> {
    let bad = |reason: &str| Error::parse(entry, reason);
    let (color, value_text) = match entry.strip_prefix('[') {
        Some(rest) => {
            let close = rest.find(']').ok_or_else(|| bad("unclosed color prefix"))?;
            let color_text = &rest[..close];
            if color_text.is_empty() || !color_text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("color must be a decimal integer"));
            }
            let color: usize = color_text.parse().map_err(|_| bad("color too large"))?;
            if color == 0 || color >= m {
                return Err(bad(&format!("color prefix must lie in 1..={}", m - 1)));
            }
            (color, &rest[close + 1..])
        }
        None => (0, entry),
    };
    if value_text.is_empty() || !value_text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("value must be a decimal integer"));
    }
    let value: usize = value_text.parse().map_err(|_| bad("value too large"))?;
    Ok(ColoredValue::new(value, color))
}

impl FromStr for ColoredValue {
    type Err = Error;

    /// Parses one window entry without an upper bound on its color.
    fn from_str(s: &str) -> Result<Self> {
        parse_entry(s, usize::MAX)
    }
}

pub fn identity(m: usize, n: usize) -> GroupElement {
    GroupElement {
        m,
        beta: (1..=n).collect(),
        colors: vec![0; n],
    }
}

/// `u * v` with `v` acting first.
pub fn multiply(u: &GroupElement, v: &GroupElement) -> Result<GroupElement> {
    u.compose(v)
}

pub fn inverse(u: &GroupElement) -> GroupElement {
    u.inverse()
}

pub fn power(u: &GroupElement, k: i64) -> GroupElement {
    u.pow(k)
}

fn check_degree(m: usize, n: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroRadix);
    }
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            index: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    Ok(())
}

/// The transposition `s_i = (i, i+1)`, `1 <= i <= n-1`.
pub fn gen_s(m: usize, n: usize, i: usize) -> Result<GroupElement> {
    check_degree(m, n)?;
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: n.saturating_sub(1),
        });
    }
    let mut w = identity(m, n);
    w.beta.swap(i - 1, i);
    Ok(w)
}

/// `t_i`: identity permutation with color 1 at position `i`, `1 <= i <= n`.
pub fn gen_t(m: usize, n: usize, i: usize) -> Result<GroupElement> {
    check_degree(m, n)?;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 1,
            max: n,
        });
    }
    let mut w = identity(m, n);
    w.colors[i - 1] = 1 % m;
    Ok(w)
}

/// `sigma_0 = t_1`, `sigma_i = s_i s_{i-1} ... s_1 t_1` for `1 <= i <= n-1`.
pub fn gen_sigma(m: usize, n: usize, i: usize) -> Result<GroupElement> {
    check_degree(m, n)?;
    if i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 0,
            max: n - 1,
        });
    }
    let mut w = gen_t(m, n, 1)?;
    for j in 1..=i {
        w = gen_s(m, n, j)?.compose_unchecked(&w);
    }
    Ok(w)
}

/// `w_0 = prod t_k^{m-1}`: identity permutation, every color `m-1`. For
/// `m = 1` this is the identity.
pub fn longest_element(m: usize, n: usize) -> GroupElement {
    GroupElement {
        m,
        beta: (1..=n).collect(),
        colors: vec![m.saturating_sub(1); n],
    }
}

/// The generating set `S = {t_1, s_1, ..., s_{n-1}}`.
pub fn standard_generators(m: usize, n: usize) -> Result<Vec<GroupElement>> {
    let mut gens = vec![gen_t(m, n, 1)?];
    for i in 1..n {
        gens.push(gen_s(m, n, i)?);
    }
    Ok(gens)
}

/// Group order as `u64`, failing when it exceeds `budget`.
pub fn guarded_order(m: usize, n: usize, budget: u64) -> Result<u64> {
    match group_order_u64(m, n) {
        Some(order) if order <= budget => Ok(order),
        _ => Err(Error::BudgetExceeded {
            order: crate::mixed_radix::group_order(m, n).to_string(),
            budget,
        }),
    }
}

/// Inverse of [`GroupElement::dense_index`].
pub fn element_at(m: usize, n: usize, index: u64) -> GroupElement {
    let color_count = (m as u64).pow(n as u32);
    let mut color_rank = index % color_count;
    let mut perm_rank = index / color_count;

    let mut colors = vec![0; n];
    for c in colors.iter_mut().rev() {
        *c = (color_rank % m as u64) as usize;
        color_rank /= m as u64;
    }

    // Factorial-base digits of the lexicographic rank, most significant first.
    let mut lehmer = vec![0usize; n];
    for (i, slot) in lehmer.iter_mut().enumerate().rev() {
        let radix = (n - i) as u64;
        *slot = (perm_rank % radix) as usize;
        perm_rank /= radix;
    }
    let mut pool: Vec<usize> = (1..=n).collect();
    let beta = lehmer.into_iter().map(|k| pool.remove(k)).collect();
    GroupElement { m, beta, colors }
}

/// Every element of `G(m,1,n)` exactly once: permutations in lexicographic
/// order, each paired with all `m^n` color vectors.
pub fn enumerate_group(
    m: usize,
    n: usize,
    budget: u64,
) -> Result<impl Iterator<Item = GroupElement> + Clone> {
    check_degree(m, n)?;
    let order = guarded_order(m, n, budget)?;
    Ok((0..order).map(move |x| element_at(m, n, x)))
}

/// Word lengths over `S` of every element, indexed by [`GroupElement::dense_index`],
/// from a breadth-first search of the Cayley graph rooted at the identity.
#[derive(Debug, Clone)]
pub struct WordLengths {
    m: usize,
    n: usize,
    dist: Vec<u32>,
}

impl WordLengths {
    pub fn compute(m: usize, n: usize, budget: u64) -> Result<Self> {
        Self::search(m, n, budget, None)
    }

    fn search(m: usize, n: usize, budget: u64, target: Option<u64>) -> Result<Self> {
        check_degree(m, n)?;
        let order = guarded_order(m, n, budget)?;
        let gens = standard_generators(m, n)?;
        let mut dist = vec![u32::MAX; order as usize];
        let start = identity(m, n).dense_index();
        dist[start as usize] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            if Some(x) == target {
                break;
            }
            let w = element_at(m, n, x);
            let d = dist[x as usize];
            for g in &gens {
                let y = w.compose_unchecked(g).dense_index() as usize;
                if dist[y] == u32::MAX {
                    dist[y] = d + 1;
                    queue.push_back(y as u64);
                }
            }
        }
        Ok(WordLengths { m, n, dist })
    }

    pub fn length(&self, w: &GroupElement) -> Result<usize> {
        if w.m() != self.m || w.n() != self.n {
            return Err(Error::DimensionMismatch(self.m, self.n, w.m(), w.n()));
        }
        Ok(self.dist[w.dense_index() as usize] as usize)
    }

    /// Largest word length, attained by the longest element.
    pub fn max_length(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }
}

/// Length of a shortest word in `t_1, s_1, ..., s_{n-1}` equal to `w`.
pub fn canonical_length(w: &GroupElement, budget: u64) -> Result<usize> {
    let target = w.dense_index();
    WordLengths::search(w.m(), w.n(), budget, Some(target))?.length(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(text: &str, m: usize) -> GroupElement {
        GroupElement::parse(text, m).unwrap()
    }

    #[test]
    fn identity_window() {
        assert_eq!(identity(3, 3).to_string(), "1 2 3");
        assert!(identity(3, 3).is_identity());
        assert_eq!(identity(3, 3).inverse(), identity(3, 3));
    }

    #[test]
    fn multiply_examples() {
        let s1 = gen_s(3, 2, 1).unwrap();
        let t1 = gen_t(3, 2, 1).unwrap();
        assert_eq!(multiply(&s1, &t1).unwrap().to_string(), "[1]2 1");
        let t2 = multiply(&multiply(&s1, &t1).unwrap(), &s1).unwrap();
        assert_eq!(t2, gen_t(3, 2, 2).unwrap());
        assert_eq!(t2.to_string(), "1 [1]2");
        let w = el("[2]3 [1]1 2", 3);
        assert_eq!(multiply(&w, &identity(3, 3)).unwrap(), w);
        assert_eq!(
            multiply(&w, &identity(3, 2)),
            Err(Error::DimensionMismatch(3, 3, 3, 2))
        );
        assert!(multiply(&w, &identity(4, 3)).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(el("[1]2 1", 3).inverse().to_string(), "2 [2]1");
        let t1 = gen_t(5, 3, 1).unwrap();
        assert_eq!(t1.inverse(), t1.pow(4));
        let s2 = gen_s(5, 3, 2).unwrap();
        assert_eq!(s2.inverse(), s2);
        assert_eq!(t1.pow(-1), t1.inverse());
    }

    #[test]
    fn power_examples() {
        for m in 1..=5 {
            assert!(gen_t(m, 3, 1).unwrap().pow(m as i64).is_identity());
        }
        assert!(gen_s(4, 3, 1).unwrap().pow(2).is_identity());
        assert!(gen_sigma(4, 3, 1).unwrap().pow(0).is_identity());
        // sigma_i acts as a colored (i+1)-cycle of order m(i+1).
        let sigma = gen_sigma(3, 4, 3).unwrap();
        assert!(sigma.pow(12).is_identity());
        assert!(!sigma.pow(4).is_identity());
    }

    #[test]
    fn generator_windows() {
        assert_eq!(gen_t(3, 3, 2).unwrap().to_string(), "1 [1]2 3");
        assert_eq!(gen_sigma(3, 2, 1).unwrap().to_string(), "[1]2 1");
        assert_eq!(gen_sigma(3, 3, 0).unwrap(), gen_t(3, 3, 1).unwrap());
        assert_eq!(gen_s(3, 3, 2).unwrap().to_string(), "1 3 2");
        assert!(matches!(gen_s(3, 3, 3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(gen_s(3, 3, 0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(gen_t(3, 3, 4), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(
            gen_sigma(3, 3, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn longest_element_windows() {
        assert_eq!(longest_element(3, 3).to_string(), "[2]1 [2]2 [2]3");
        assert_eq!(longest_element(2, 2).to_string(), "[1]1 [1]2");
        assert!(longest_element(1, 4).is_identity());
    }

    #[test]
    fn window_round_trip_and_errors() {
        let text = "[2]3 [4]1 [1]6 5 [1]4 [2]2";
        let w = el(text, 5);
        assert_eq!(w.to_string(), text);
        assert_eq!(w.beta(), &[3, 1, 6, 5, 4, 2]);
        assert_eq!(w.colors(), &[2, 4, 1, 0, 1, 2]);

        let entry_of = |r: Result<GroupElement>| match r {
            Err(Error::Parse { entry, .. }) => entry,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(entry_of(GroupElement::parse("1 [3]2", 3)), "[3]2");
        assert_eq!(entry_of(GroupElement::parse("1 [0]2", 3)), "[0]2");
        assert_eq!(entry_of(GroupElement::parse("1 [1]x", 3)), "[1]x");
        assert_eq!(entry_of(GroupElement::parse("1 [12", 3)), "[12");
        assert_eq!(entry_of(GroupElement::parse("1 4", 3)), "4");
        assert_eq!(entry_of(GroupElement::parse("2 [1]2", 3)), "[1]2");
        assert!(GroupElement::parse("   ", 3).is_err());
        assert_eq!(
            "[2]7".parse::<ColoredValue>().unwrap(),
            ColoredValue::new(7, 2)
        );
    }

    #[test]
    fn constructor_validation() {
        assert!(GroupElement::new(3, vec![1, 1], vec![0, 0]).is_err());
        assert!(GroupElement::new(3, vec![1, 3], vec![0, 0]).is_err());
        assert!(GroupElement::new(3, vec![1, 2], vec![0, 3]).is_err());
        assert!(GroupElement::new(3, vec![1, 2], vec![0]).is_err());
        assert!(GroupElement::new(0, vec![1], vec![0]).is_err());
    }

    #[test]
    fn dense_index_is_a_bijection() {
        for (m, n) in [(1, 4), (2, 3), (3, 3)] {
            let order = group_order_u64(m, n).unwrap();
            for x in 0..order {
                assert_eq!(element_at(m, n, x).dense_index(), x);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_group(3, 3, 1_000).unwrap().count(), 162);
        assert_eq!(enumerate_group(2, 2, 1_000).unwrap().count(), 8);
        assert_eq!(enumerate_group(1, 3, 1_000).unwrap().count(), 6);
        assert!(matches!(
            enumerate_group(3, 3, 161),
            Err(Error::BudgetExceeded { .. })
        ));
        let first: Vec<_> = enumerate_group(2, 2, 8).unwrap().take(5).collect();
        assert!(first[0].is_identity());
        assert_eq!(first[1].to_string(), "1 [1]2");
        assert_eq!(first[4].to_string(), "2 1");
    }

    #[test]
    fn canonical_length_examples() {
        assert_eq!(
            canonical_length(&gen_t(3, 3, 2).unwrap(), 1_000).unwrap(),
            3
        );
        assert_eq!(canonical_length(&identity(3, 3), 1_000).unwrap(), 0);
        assert_eq!(canonical_length(&longest_element(3, 2), 1_000).unwrap(), 6);
        assert!(matches!(
            canonical_length(&identity(5, 6), 1_000_000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
