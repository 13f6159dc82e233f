use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial over ℚ in the variables `A1 … A{nvars}`.
///
/// Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose order is
/// graded lexicographic; [`Polynomial::terms`] walks them from the largest
/// monomial down, which is also the order of the canonical text form.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, [(Monomial::one(), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `A{index+1}`.
    ///
    /// Panics if `index >= nvars`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable A{} outside {nvars} variables", index + 1);
        Self::from_terms(nvars, [(Monomial::var(index), Rational::one())])
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    ///
    /// Panics if a monomial mentions a variable `>= nvars`.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if let Some(v) = m.max_var() {
                assert!(v < nvars, "monomial {m} outside {nvars} variables");
            }
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (largest monomial first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Lowest degree among the terms; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    /// Every variable occurs with exponent at most one.
    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(Monomial::is_square_free)
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether `A{var+1}` occurs in any term.
    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(var) > 0)
    }

    /// The same polynomial viewed in a larger (or equal) variable set.
    pub fn with_nvars(&self, nvars: usize) -> Result<Polynomial> {
        if let Some(v) = self.terms.keys().filter_map(Monomial::max_var).max() {
            if v >= nvars {
                return Err(Error::dim(format!(
                    "polynomial uses A{} but only {nvars} variables requested",
                    v + 1
                )));
            }
        }
        Ok(Self {
            nvars,
            terms: self.terms.clone(),
        })
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::dim(format!(
                "polynomials in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `point`, which must have one entry per variable.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::dim(format!(
                "point of length {} for a polynomial in {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(var, e) in m.factors() {
                let x = &point[var];
                if x.is_zero() {
                    v = Rational::zero();
                    break;
                }
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Formal partial derivative in one variable.
    pub fn derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.nvars {
            return Err(Error::arg(format!(
                "cannot differentiate by A{} in {} variables",
                var + 1,
                self.nvars
            )));
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.differentiate(var) {
                out.add_term(dm, c * Rational::from_integer(e.into()));
            }
        }
        Ok(out)
    }

    /// Iterated partial derivative `∂_{v1} ⋯ ∂_{vk}`; repeated indices
    /// differentiate repeatedly.
    pub fn partial(&self, vars: &[usize]) -> Result<Polynomial> {
        if let Some(&bad) = vars.iter().find(|&&w| w >= self.nvars) {
            return Err(Error::arg(format!(
                "cannot differentiate by A{} in {} variables",
                bad + 1,
                self.nvars
            )));
        }
        let mut out = self.clone();
        for &v in vars {
            if out.is_zero() {
                break;
            }
            out = out.derivative(v)?;
        }
        Ok(out)
    }

    /// Returns `c` with `self = c * other`, if such a nonzero constant exists.
    /// Two zero polynomials are proportional with `c = 1`.
    pub fn proportional(&self, other: &Polynomial) -> Option<Rational> {
        match (self.leading_term(), other.leading_term()) {
            (None, None) => Some(Rational::one()),
            (Some((ma, ca)), Some((mb, cb))) => {
                if ma != mb || self.terms.len() != other.terms.len() {
                    return None;
                }
                // compare self * lc(other) against other * lc(self) term by term
                let same = self.terms.iter().zip(other.terms.iter()).all(|((m1, c1), (m2, c2))| {
                    m1 == m2 && c1 * cb == c2 * ca
                });
                same.then(|| ca / cb)
            }
            _ => None,
        }
    }

    /// Substitutes `images[i]` for `A{i+1}`. All images share one variable
    /// set, which becomes the variable set of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::dim(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars
            )));
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => return Ok(self.clone()),
        };
        if images.iter().any(|p| p.nvars != target) {
            return Err(Error::dim("substitution images live in different rings"));
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); self.nvars];
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for &(v, e) in m.factors() {
                let cache = &mut powers[v];
                if cache.is_empty() {
                    cache.push(Polynomial::one(target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &images[v];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
                if t.is_zero() {
                    break;
                }
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// The Taylor shift `A ↦ point + A`, i.e. the expansion of `self`
    /// around `point` in the displacement variables.
    pub fn translate(&self, point: &[Rational]) -> Result<Polynomial> {
        if point.len() != self.nvars {
            return Err(Error::dim(format!(
                "shift of length {} for {} variables",
                point.len(),
                self.nvars
            )));
        }
        let images: Vec<Polynomial> = point
            .iter()
            .enumerate()
            .map(|(i, a)| &Polynomial::var(self.nvars, i) + &Polynomial::constant(self.nvars, a.clone()))
            .collect();
        self.substitute(&images)
    }

    /// Canonical text using custom variable names.
    pub fn display_with<'a>(&'a self, names: &'a dyn Fn(usize) -> String) -> impl fmt::Display + 'a {
        Named { poly: self, names }
    }

    fn write_terms(&self, f: &mut fmt::Formatter<'_>, names: &dyn Fn(usize) -> String) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.fmt_with(f, names)?;
            }
        }
        Ok(())
    }
}

struct Named<'a> {
    poly: &'a Polynomial,
    names: &'a dyn Fn(usize) -> String,
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.write_terms(f, self.names)
    }
}

/// `A1*A2 + 4*A1*A3 + 4*A2*A3`: terms in canonical order, coefficients as
/// reduced fractions, unit coefficients omitted.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, &|v| format!("A{}", v + 1))
    }
}

// Operator forms panic on mismatched variable sets; use the `checked_*`
// methods where the operands are not known to agree.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial add")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial sub")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial mul")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{rat, ratio};

    fn a(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn psi_cfg1() -> Polynomial {
        // A1A2 + 4A1A3 + 4A2A3
        let p12 = &a(3, 0) * &a(3, 1);
        let p13 = (&a(3, 0) * &a(3, 2)).scale(&rat(4));
        let p23 = (&a(3, 1) * &a(3, 2)).scale(&rat(4));
        &(&p12 + &p13) + &p23
    }

    #[test]
    fn canonical_text() {
        assert_eq!(psi_cfg1().to_string(), "A1*A2 + 4*A1*A3 + 4*A2*A3");
        let p = &(&a(2, 1).pow(2) - &a(2, 0).scale(&ratio(1, 2))) + &Polynomial::constant(2, rat(-3));
        assert_eq!(p.to_string(), "A2^2 - 1/2*A1 - 3");
        assert_eq!(Polynomial::zero(4).to_string(), "0");
        assert_eq!((-&a(2, 0)).to_string(), "-A1");
    }

    #[test]
    fn arithmetic_examples() {
        let x = &a(3, 0) * &a(3, 1);
        assert!((&x + &(-&x)).is_zero());
        let lhs = &(&a(3, 0) + &a(3, 1)) * &a(3, 2);
        assert_eq!(lhs.to_string(), "A1*A3 + A2*A3");
        assert_eq!(
            psi_cfg1().scale(&rat(9)).to_string(),
            "9*A1*A2 + 36*A1*A3 + 36*A2*A3"
        );
        assert!(matches!(a(2, 0).checked_add(&a(3, 0)), Err(Error::Dimension(_))));
        assert!(matches!(a(2, 0).checked_mul(&a(3, 0)), Err(Error::Dimension(_))));
    }

    #[test]
    fn eval_examples() {
        let p = psi_cfg1();
        assert_eq!(p.eval(&[rat(1), rat(1), rat(1)]).unwrap(), rat(9));
        assert_eq!(p.eval(&[rat(0), rat(0), rat(1)]).unwrap(), rat(0));
        let prod = &(&a(3, 0) * &a(3, 1)) * &a(3, 2);
        assert_eq!(prod.eval(&[rat(2), rat(3), rat(5)]).unwrap(), rat(30));
        assert!(p.eval(&[rat(1)]).is_err());
    }

    #[test]
    fn partial_examples() {
        let p = psi_cfg1();
        assert_eq!(p.partial(&[0]).unwrap().to_string(), "A2 + 4*A3");
        let x = &a(3, 0) * &a(3, 1);
        assert!(x.partial(&[0, 0]).unwrap().is_zero());
        assert!(p.partial(&[3]).is_err());
        let sq = a(1, 0).pow(3);
        assert_eq!(sq.partial(&[0, 0]).unwrap().to_string(), "6*A1");
        let ban4 = Polynomial::from_terms(
            4,
            [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]].map(|f| (Monomial::product_of(f), rat(1))),
        );
        assert_eq!(ban4.partial(&[1, 2]).unwrap().to_string(), "A1 + A4");
    }

    #[test]
    fn proportional_examples() {
        let p = psi_cfg1();
        assert_eq!(p.scale(&rat(9)).proportional(&p), Some(rat(9)));
        assert_eq!(a(2, 0).proportional(&a(2, 1)), None);
        assert_eq!(Polynomial::zero(2).proportional(&a(2, 0)), None);
        assert_eq!(a(2, 0).proportional(&Polynomial::zero(2)), None);
        assert_eq!(Polynomial::zero(2).proportional(&Polynomial::zero(2)), Some(rat(1)));
        let q = &a(2, 0) + &a(2, 1);
        let r = &a(2, 0) + &a(2, 1).scale(&rat(2));
        assert_eq!(q.proportional(&r), None);
    }

    #[test]
    fn substitute_and_translate() {
        // (A1 + A2)^2 at A1 -> A2, A2 -> 1
        let p = (&a(2, 0) + &a(2, 1)).pow(2);
        let img = [a(2, 1), Polynomial::one(2)];
        assert_eq!(p.substitute(&img).unwrap().to_string(), "A2^2 + 2*A2 + 1");
        let t = (&a(2, 0) * &a(2, 1)).translate(&[rat(1), rat(0)]).unwrap();
        assert_eq!(t.to_string(), "A1*A2 + A2");
        assert_eq!(t.min_degree(), Some(1));
        assert_eq!(t.homogeneous_part(1).to_string(), "A2");
    }
}
