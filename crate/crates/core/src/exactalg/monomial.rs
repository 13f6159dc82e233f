use std::cmp::Ordering;
use std::fmt;

/// A power product `∏ A_i^{k_i}` stored sparsely as `(variable, exponent)`
/// pairs sorted by variable index. Exponents are never zero; the empty
/// product is the unit monomial.
///
/// `Ord` is graded lexicographic: higher total degree is larger, ties are
/// broken lexicographically with `A1 > A2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial {
    factors: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(index: usize) -> Self {
        Self {
            factors: vec![(index, 1)],
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs, merging
    /// repeats and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut factors: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_unstable();
        let mut merged: Vec<(usize, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Self { factors: merged }
    }

    /// Square-free monomial on the given variables.
    pub fn product_of(vars: impl IntoIterator<Item = usize>) -> Self {
        Self::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.factors
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn max_var(&self) -> Option<usize> {
        self.factors.last().map(|&(v, _)| v)
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, b) = (self.factors[i], other.factors[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// Lowers the exponent of `var` by one. Returns the old exponent together
    /// with the new monomial, or `None` if `var` does not occur.
    pub fn differentiate(&self, var: usize) -> Option<(u32, Monomial)> {
        let pos = self.factors.binary_search_by_key(&var, |&(v, _)| v).ok()?;
        let e = self.factors[pos].1;
        let mut factors = self.factors.clone();
        if e == 1 {
            factors.remove(pos);
        } else {
            factors[pos].1 -= 1;
        }
        Some((e, Monomial { factors }))
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.factors.get(i), other.factors.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // smaller variable index present only on one side wins
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: &dyn Fn(usize) -> String) -> fmt::Result {
        for (k, &(v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            f.write_str(&names(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        self.fmt_with(f, &|v| format!("A{}", v + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let a1a2 = Monomial::product_of([0, 1]);
        let a1a3 = Monomial::product_of([0, 2]);
        let a2a3 = Monomial::product_of([1, 2]);
        let a1sq = Monomial::from_pairs([(0, 2)]);
        let a1 = Monomial::var(0);
        assert!(a1a2 > a1a3);
        assert!(a1a3 > a2a3);
        assert!(a1sq > a1a2);
        assert!(a2a3 > a1);
        assert!(a1 > Monomial::one());
        assert!(Monomial::product_of([0, 3]) > Monomial::product_of([1, 2]));
    }

    #[test]
    fn merge_and_differentiate() {
        let m = Monomial::from_pairs([(2, 1), (0, 1), (2, 2), (1, 0)]);
        assert_eq!(m.factors(), &[(0, 1), (2, 3)]);
        let (e, d) = m.differentiate(2).unwrap();
        assert_eq!(e, 3);
        assert_eq!(d.factors(), &[(0, 1), (2, 2)]);
        assert!(m.differentiate(1).is_none());
        assert_eq!(m.to_string(), "A1*A3^3");
    }
}
