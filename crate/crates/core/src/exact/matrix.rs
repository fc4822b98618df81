//! Dense matrices of polynomials: fraction-free determinants, rank and kernel.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::content_free;
use super::poly::{MultiPoly, Ring};
use super::Rational;
use crate::error::{Error, Result};

/// A dense rectangular matrix whose entries share one [`Ring`].
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

/// Result of [`PolyMatrix::rank_and_kernel`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankKernel {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// One vector per non-pivot column, content removed.
    pub kernel: Vec<Vec<MultiPoly>>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> PolyMatrix {
        PolyMatrix::from_fn(ring, n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn from_fn<F>(ring: &Ring, rows: usize, cols: usize, mut f: F) -> PolyMatrix
    where
        F: FnMut(usize, usize) -> MultiPoly,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert!(e.ring() == ring, "entry ({i},{j}) lives in a different ring");
                entries.push(e);
            }
        }
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<MultiPoly>>) -> Result<PolyMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {c}", row.len())));
            }
            for e in row {
                entries.push(e.embed(ring)?);
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: MultiPoly) {
        assert!(value.ring() == &self.ring);
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[MultiPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<MultiPoly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn map<F>(&self, f: F) -> PolyMatrix
    where
        F: Fn(&MultiPoly) -> MultiPoly,
    {
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    pub fn specialize(&self, values: &[(usize, Rational)]) -> PolyMatrix {
        self.map(|e| e.specialize(values))
    }

    pub fn mul_vec(&self, v: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.ring.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        self.ring_check(other)?;
        Ok(PolyMatrix::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let mut acc = self.ring.zero();
            for l in 0..self.cols {
                acc += &(self.get(i, l) * other.get(l, j));
            }
            acc
        }))
    }

    fn ring_check(&self, other: &PolyMatrix) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.ring.vars().join(","),
                other.ring.vars().join(","),
            ))
        }
    }

    /// Exact determinant: cofactor expansion up to 4x4, Bareiss elimination above.
    pub fn det_fraction_free(&self) -> Result<MultiPoly> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows <= 4 {
            let idx: Vec<usize> = (0..self.rows).collect();
            return Ok(self.cofactor_det(&idx, &idx));
        }
        self.bareiss_det()
    }

    fn cofactor_det(&self, rows: &[usize], cols: &[usize]) -> MultiPoly {
        match rows.len() {
            0 => self.ring.one(),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                let a = self.get(rows[0], cols[0]) * self.get(rows[1], cols[1]);
                let b = self.get(rows[0], cols[1]) * self.get(rows[1], cols[0]);
                a - b
            }
            _ => {
                let mut acc = self.ring.zero();
                let rest_rows = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let e = self.get(rows[0], c);
                    if e.is_zero() {
                        continue;
                    }
                    let rest_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let minor = self.cofactor_det(rest_rows, &rest_cols);
                    let term = e * &minor;
                    if k % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                acc
            }
        }
    }

    fn bareiss_det(&self) -> Result<MultiPoly> {
        let n = self.rows;
        let mut a = self.to_rows();
        let mut prev = self.ring.one();
        let mut sign = 1i64;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return Ok(self.ring.zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev).map_err(internal("Bareiss step"))?;
                }
                a[i][k] = self.ring.zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// Rank over the fraction field, greedy ascending pivot columns, and one
    /// polynomial kernel vector per free column.
    ///
    /// Uses fraction-free Gauss-Jordan elimination: after processing, every
    /// pivot entry equals the same polynomial `d`, so the kernel vector for a
    /// free column `f` is `d` at `f` and minus the reduced column at the pivots.
    pub fn rank_and_kernel(&self) -> Result<RankKernel> {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.to_rows();
        let mut prev = self.ring.one();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let piv = a[r][c].clone();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = a[i][c].clone();
                for j in 0..cols {
                    if j == c {
                        continue;
                    }
                    let mut num = &piv * &a[i][j];
                    if !factor.is_zero() && !a[r][j].is_zero() {
                        num -= &(&factor * &a[r][j]);
                    }
                    a[i][j] = num.exact_div(&prev).map_err(internal("Gauss-Jordan step"))?;
                }
                a[i][c] = self.ring.zero();
            }
            // Earlier pivot rows had pivot entry `prev`; after the update it is `piv`.
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        let d = prev;
        let mut kernel = Vec::new();
        for f in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![self.ring.zero(); cols];
            v[f] = d.clone();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[i][f];
            }
            let mut v = content_free(&v);
            if v[f].leading_sign() < 0 {
                v = v.iter().map(|e| -e).collect();
            }
            kernel.push(v);
        }
        Ok(RankKernel {
            rank: pivots.len(),
            pivot_cols: pivots,
            kernel,
        })
    }

    /// Rank alone, over the fraction field.
    pub fn rank(&self) -> Result<usize> {
        Ok(self.rank_and_kernel()?.rank)
    }

    /// Reduces every entry modulo the prime of [`super::modp`] at `point`.
    pub fn eval_mod(&self, point: &[u64]) -> Option<Vec<Vec<u64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.eval_mod(point)).collect())
            .collect()
    }
}

fn internal(stage: &'static str) -> impl Fn(Error) -> Error {
    move |e| Error::Internal(format!("{stage}: {e}"))
}

impl std::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "PolyMatrix {}x{} over {:?}", self.rows, self.cols, self.ring)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank, greedy ascending pivot columns and primitive kernel vectors of an
/// integer matrix, by the same fraction-free Gauss-Jordan scheme as
/// [`PolyMatrix::rank_and_kernel`].
pub fn integer_rank_and_kernel(mut a: Vec<Vec<BigInt>>) -> Result<(Vec<usize>, Vec<Vec<BigInt>>)> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape("ragged integer matrix".into()));
    }
    let mut prev = BigInt::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = std::mem::take(&mut row[c]);
            for j in 0..cols {
                if j == c {
                    continue;
                }
                let mut num = &piv * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    num -= &factor * &pivot_row[j];
                }
                let (q, rem) = num.div_rem(&prev);
                if !rem.is_zero() {
                    return Err(Error::Internal("integer Gauss-Jordan step".into()));
                }
                row[j] = q;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    let mut kernel = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigInt::zero(); cols];
        v[f] = prev.clone();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[i][f];
        }
        let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let sign = if v[f].is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        kernel.push(v.into_iter().map(|x| (x / &g) * &sign).collect());
    }
    Ok((pivots, kernel))
}

/// Determinant of a dense rational matrix by Gaussian elimination.
pub fn det_rational(m: &[Vec<Rational>]) -> Result<Rational> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("determinant of a non-square matrix".into()));
    }
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let piv = a[k][k].clone();
        det *= &piv;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn ring() -> Ring {
        Ring::new(["x1", "x2", "x3", "b"])
    }

    fn m(r: &Ring, rows: &[&[&str]]) -> PolyMatrix {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|s| r.parse(s).unwrap()).collect())
            .collect();
        PolyMatrix::from_rows(r, rows).unwrap()
    }

    #[test]
    fn constant_theory_g2_determinant() {
        let r = ring();
        let g = m(&r, &[&["b^2", "b"], &["b", "0"]]);
        assert_eq!(g.det_fraction_free().unwrap(), r.parse("-1*b^2").unwrap());
    }

    #[test]
    fn identity_determinant_is_one() {
        let r = ring();
        for n in [0, 1, 4, 6] {
            assert!(PolyMatrix::identity(&r, n).det_fraction_free().unwrap().is_one());
        }
    }

    #[test]
    fn vandermonde_determinant() {
        let r = ring();
        let v = m(&r, &[&["1", "x1", "x1^2"], &["1", "x2", "x2^2"], &["1", "x3", "x3^2"]]);
        let expected = r.parse("(x2-x1)*(x3-x1)*(x3-x2)").unwrap();
        assert_eq!(v.det_fraction_free().unwrap(), expected);
        let prod = r.parse("(x1-x2)*(x1-x3)*(x2-x3)").unwrap();
        assert_eq!(v.transpose().det_fraction_free().unwrap(), -prod);
    }

    #[test]
    fn bareiss_agrees_with_cofactor_on_5x5_vandermonde() {
        let r = Ring::new(Ring::indexed("x", 5));
        let v = PolyMatrix::from_fn(&r, 5, 5, |i, j| r.gen(i).pow(j as u32));
        let mut expected = r.one();
        for i in 0..5 {
            for j in i + 1..5 {
                expected = &expected * &(&r.gen(j) - &r.gen(i));
            }
        }
        assert_eq!(v.det_fraction_free().unwrap(), expected);
    }

    #[test]
    fn non_square_is_shape_error() {
        let r = ring();
        let z = PolyMatrix::zeros(&r, 2, 3);
        assert!(matches!(z.det_fraction_free(), Err(Error::Shape(_))));
    }

    #[test]
    fn rank_of_all_ones() {
        let r = ring();
        let g = m(&r, &[&["1", "1"], &["1", "1"]]);
        let rk = g.rank_and_kernel().unwrap();
        assert_eq!(rk.rank, 1);
        assert_eq!(rk.pivot_cols, vec![0]);
        assert_eq!(rk.kernel, vec![vec![r.int(-1), r.int(1)]]);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let r = ring();
        let g = m(
            &r,
            &[
                &["b", "b^2", "x1", "b*x1"],
                &["x2", "b*x2", "1", "b"],
                &["b+x2", "b^2+b*x2", "x1+1", "b*x1+b"],
            ],
        );
        let rk = g.rank_and_kernel().unwrap();
        assert_eq!(rk.rank, 2);
        assert_eq!(rk.pivot_cols, vec![0, 2]);
        assert_eq!(rk.kernel.len(), 2);
        for v in &rk.kernel {
            assert!(g.mul_vec(v).unwrap().iter().all(MultiPoly::is_zero));
        }
    }

    #[test]
    fn rational_determinant() {
        let a = vec![vec![rat(1, 2), int(1)], vec![int(3), int(4)]];
        assert_eq!(det_rational(&a).unwrap(), int(-1));
        assert_eq!(det_rational(&[]).unwrap(), int(1));
    }
}
