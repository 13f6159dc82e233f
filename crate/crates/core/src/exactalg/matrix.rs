use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use super::rational::{clear_denominators, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::dim(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows of equal length. An empty row list gives a
    /// `0 x cols` matrix.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::dim(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            entries.extend(r);
        }
        Self::new(nrows, cols, entries)
    }

    /// Convenience constructor for integer test data; panics on ragged rows.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
        .expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.denom().is_one())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::dim(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Submatrix on the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> RatMatrix {
        let mut out = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> RatMatrix {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend_from_slice(self.row(r));
        }
        RatMatrix {
            rows: rows.len(),
            cols: self.cols,
            entries,
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.cols {
            return Err(Error::dim(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination. Each row is first
    /// scaled to integers, so all intermediate values stay integral.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::dim(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let (ints, s) = clear_denominators(self.row(r));
            scale *= s;
            m.push(ints);
        }
        let det = bareiss_det(m);
        Ok(Rational::new(det, scale))
    }

    /// Reduced row echelon form together with the pivot columns. Pivots are
    /// taken at the first row (from the top) with a nonzero entry.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..self.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..self.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : M x = 0}`, one basis vector per row.
    /// The vector for free column `f` has a 1 in position `f` and zeros in
    /// the other free columns.
    pub fn kernel(&self) -> RatMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = RatMatrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, Rational::one());
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, -r.get(pr, f));
            }
        }
        out
    }

    /// Basis of the lattice `ker(M) ∩ ℤ^cols`, in Hermite normal form.
    /// Every rational kernel vector is a rational combination of these rows
    /// and every integral kernel vector an integral one.
    pub fn integer_kernel(&self) -> RatMatrix {
        let m = self.rows;
        let n = self.cols;
        // rows of [Mᵀ | I]; a unimodular echelon of the left block leaves the
        // kernel in the right block of the zero rows
        let mut aug: Vec<Vec<BigInt>> = (0..n)
            .map(|c| {
                let mut row = Vec::with_capacity(m + n);
                row.extend(std::iter::repeat_n(BigInt::zero(), m));
                row.extend((0..n).map(|j| if j == c { BigInt::one() } else { BigInt::zero() }));
                row
            })
            .collect();
        let integral: Vec<Vec<BigInt>> = (0..m).map(|r| clear_denominators(self.row(r)).0).collect();
        for (c, row) in aug.iter_mut().enumerate() {
            for (r, ints) in integral.iter().enumerate() {
                row[r] = ints[c].clone();
            }
        }
        let rank = hermite_rows(&mut aug, m);
        let mut basis: Vec<Vec<BigInt>> = aug[rank..].iter().map(|row| row[m..].to_vec()).collect();
        let k = hermite_rows(&mut basis, n);
        debug_assert_eq!(k, basis.len());
        RatMatrix {
            rows: basis.len(),
            cols: n,
            entries: basis
                .into_iter()
                .flatten()
                .map(Rational::from_integer)
                .collect(),
        }
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &RatMatrix) -> Result<bool> {
        if other.rows == 0 {
            return Ok(true);
        }
        Ok(self.vstack(other)?.rank() == self.rank())
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Unimodular row reduction of the first `upto` columns to Hermite normal
/// form (positive pivots, entries above a pivot reduced into `[0, pivot)`).
/// Rows that end up zero on those columns are moved to the bottom. Returns
/// the number of pivot rows.
pub(crate) fn hermite_rows(rows: &mut [Vec<BigInt>], upto: usize) -> usize {
    let mut r = 0;
    for c in 0..upto {
        if r == rows.len() {
            break;
        }
        loop {
            let best = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                sub_multiple(rows, i, r, &q);
                if !rows[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            if !q.is_zero() {
                sub_multiple(rows, i, r, &q);
            }
        }
        r += 1;
    }
    r
}

fn sub_multiple(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let src = rows[source].clone();
    for (x, s) in rows[target].iter_mut().zip(src.iter()) {
        if !s.is_zero() {
            *x -= q * s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{rat, ratio};

    /// Laplace expansion along the first row.
    fn cofactor_det(m: &RatMatrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return rat(1);
        }
        let mut total = rat(0);
        for j in 0..n {
            if m.get(0, j).is_zero() {
                continue;
            }
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = m.select_rows(&(1..n).collect::<Vec<_>>()).select_columns(&cols);
            let term = m.get(0, j) * cofactor_det(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn det_examples() {
        assert_eq!(RatMatrix::identity(3).det().unwrap(), rat(1));
        assert_eq!(RatMatrix::from_i64(&[&[1, 1], &[0, -1]]).det().unwrap(), rat(-1));
        assert_eq!(RatMatrix::from_i64(&[&[1, 0], &[-1, 2]]).det().unwrap(), rat(2));
        assert!(matches!(
            RatMatrix::zeros(2, 3).det(),
            Err(Error::Dimension(_))
        ));
        let m = RatMatrix::from_rows(
            2,
            vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(2, 5), rat(7)]],
        )
        .unwrap();
        assert_eq!(m.det().unwrap(), cofactor_det(&m));
        // needs a pivot swap
        let p = RatMatrix::from_i64(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(p.det().unwrap(), cofactor_det(&p));
    }

    #[test]
    fn rank_kernel_examples() {
        let d = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(d.rank(), 1);
        assert_eq!(d.kernel().rows(), 2);
        let i = RatMatrix::identity(4);
        assert_eq!(i.rank(), 4);
        assert_eq!(i.kernel().rows(), 0);
        let m = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.rows(), 1);
        let expected = RatMatrix::from_i64(&[&[2, -1]]);
        assert!(k.row_space_contains(&expected).unwrap());
        assert!(expected.row_space_contains(&k).unwrap());
    }

    #[test]
    fn integer_kernel_is_saturated() {
        // kernel of (2 4 6) over ℤ: spanned by (-2,1,0),(-3,0,1)
        let m = RatMatrix::from_i64(&[&[2, 4, 6]]);
        let k = m.integer_kernel();
        assert_eq!(k.rows(), 2);
        assert!(k.is_integral());
        // gcd of 2x2 minors is 1 for a saturated lattice
        let mut g = BigInt::zero();
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let minor = k.select_columns(&[a, b]).det().unwrap();
            g = g.gcd(minor.numer());
        }
        assert_eq!(g, BigInt::one());
        for r in 0..k.rows() {
            assert!(m.apply(k.row(r)).unwrap().iter().all(Zero::is_zero));
        }
        // rational entries are fine too
        let q = RatMatrix::from_rows(2, vec![vec![ratio(1, 2), ratio(-1, 3)]]).unwrap();
        assert_eq!(q.integer_kernel().row(0), &[rat(2), rat(3)]);
    }
}
