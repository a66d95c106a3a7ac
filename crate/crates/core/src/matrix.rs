//! Exact integer matrix algebra: Smith normal form with unimodular
//! transforms, fraction-free determinants, and a minor-gcd oracle for
//! elementary divisors.
//!
//! Everything here is exact; the scalar type is any signed integer type
//! implementing [`Scalar`] (arbitrary precision by default, see
//! [`crate::Int`]).

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{FromPrimitive, Signed};

/// Scalar type for exact matrix computations: `i64`, `i128` or `BigInt`.
pub trait Scalar:
    num_integer::Integer + Signed + FromPrimitive + Clone + fmt::Debug + fmt::Display
{
}

impl<T> Scalar for T where
    T: num_integer::Integer + Signed + FromPrimitive + Clone + fmt::Debug + fmt::Display
{
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("determinant requires a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("minor enumeration limited to {limit}x{limit} matrices, got {rows}x{cols}")]
    OracleBudget { rows: usize, cols: usize, limit: usize },
}

/// Dense row-major matrix over an exact integer scalar.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from rows of `i64` entries (test and fixture helper).
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| T::from_i64(x).expect("scalar from i64")))
            .collect();
        Matrix { rows: r, cols: c, data }
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

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i -= q * row_k
    fn row_sub(&mut self, i: usize, k: usize, q: &T) {
        for c in 0..self.cols {
            let t = self[(k, c)].clone() * q.clone();
            self[(i, c)] = self[(i, c)].clone() - t;
        }
    }

    /// col_j -= q * col_k
    fn col_sub(&mut self, j: usize, k: usize, q: &T) {
        for r in 0..self.rows {
            let t = self[(r, k)].clone() * q.clone();
            self[(r, j)] = self[(r, j)].clone() - t;
        }
    }

    fn row_add(&mut self, i: usize, k: usize) {
        for c in 0..self.cols {
            let t = self[(k, c)].clone();
            self[(i, c)] = self[(i, c)].clone() + t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            self[(i, c)] = -self[(i, c)].clone();
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = self[(i, k)].clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + t;
                }
            }
        }
        out
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<T, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[(i, j)].clone() * a[(k, k)].clone()
                        - a[(i, k)].clone() * a[(k, j)].clone();
                    // Bareiss guarantees this division is exact.
                    a[(i, j)] = num / prev.clone();
                }
                a[(i, k)] = T::zero();
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * a[(n - 1, n - 1)].clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

/// Smith normal form `U * A * V = S` with `U`, `V` unimodular and the
/// diagonal of `S` nonnegative in a divisibility chain.
#[derive(Clone, Debug)]
pub struct Snf<T> {
    pub s: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: Scalar> Snf<T> {
    /// Nonzero diagonal entries `s_1 | s_2 | ...` (rank many).
    pub fn divisors(&self) -> Vec<T> {
        self.s.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().len()
    }

    /// Diagonal entries >= 2, i.e. the torsion part of the cokernel.
    pub fn nontrivial_divisors(&self) -> Vec<T> {
        self.divisors().into_iter().filter(|d| !d.is_one()).collect()
    }
}

/// Finds the pivot with smallest nonzero absolute value in the trailing
/// submatrix, ties broken by lowest (row, col).
fn find_pivot<T: Scalar>(a: &Matrix<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some(b) => {
                    if a[(i, j)].abs() < a[b].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Computes the Smith normal form of `a`, always with transforms.
///
/// Deterministic: pivot selection and elimination order are fixed, so equal
/// inputs give equal outputs.
pub fn smith_normal_form<T: Scalar>(a: &Matrix<T>) -> Snf<T> {
    let rows = a.rows();
    let cols = a.cols();
    let mut s = a.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);

    for k in 0..rows.min(cols) {
        'pivot: loop {
            let Some((pi, pj)) = find_pivot(&s, k) else {
                break 'pivot;
            };
            s.swap_rows(k, pi);
            u.swap_rows(k, pi);
            s.swap_cols(k, pj);
            v.swap_cols(k, pj);

            // Reduce column k and row k by division steps; remainders are
            // strictly smaller than the pivot, so re-running pivot selection
            // terminates.
            let mut dirty = false;
            for i in k + 1..rows {
                if !s[(i, k)].is_zero() {
                    let q = s[(i, k)].clone().div_rem(&s[(k, k)]).0;
                    s.row_sub(i, k, &q);
                    u.row_sub(i, k, &q);
                    if !s[(i, k)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..cols {
                if !s[(k, j)].is_zero() {
                    let q = s[(k, j)].clone().div_rem(&s[(k, k)]).0;
                    s.col_sub(j, k, &q);
                    v.col_sub(j, k, &q);
                    if !s[(k, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Pivot must divide every remaining entry so that the diagonal
            // forms a divisibility chain; if not, merge the offending row in
            // and re-reduce.
            let mut offender = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !s[(i, j)].clone().mod_floor(&s[(k, k)]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    s.row_add(k, i);
                    u.row_add(k, i);
                }
                None => break 'pivot,
            }
        }
        if s[(k, k)].is_negative() {
            s.negate_row(k);
            u.negate_row(k);
        }
    }
    Snf { s, u, v }
}

/// Independent elementary-divisor oracle: `d_k` = gcd of all k-by-k minors,
/// `s_k = d_k / d_{k-1}`. Exponential in the matrix size, so capped.
pub fn elementary_divisors_oracle<T: Scalar>(a: &Matrix<T>) -> Result<Vec<T>, MatrixError> {
    const LIMIT: usize = 6;
    if a.rows() > LIMIT || a.cols() > LIMIT {
        return Err(MatrixError::OracleBudget { rows: a.rows(), cols: a.cols(), limit: LIMIT });
    }
    let mut out = Vec::new();
    let mut prev = T::one();
    for k in 1..=a.rows().min(a.cols()) {
        let mut g = T::zero();
        for rs in subsets(a.rows(), k) {
            for cs in subsets(a.cols(), k) {
                let mut m = Matrix::zero(k, k);
                for (ri, &r) in rs.iter().enumerate() {
                    for (ci, &c) in cs.iter().enumerate() {
                        m[(ri, ci)] = a[(r, c)].clone();
                    }
                }
                g = g.gcd(&m.determinant().expect("square minor"));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(g.clone() / prev);
        prev = g;
    }
    Ok(out)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;
    use num_traits::Zero;

    fn m(rows: &[Vec<i64>]) -> Matrix<Int> {
        Matrix::from_rows_i64(rows)
    }

    fn check_snf(a: &Matrix<Int>) -> Snf<Int> {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.s, "U*A*V != S");
        assert_eq!(snf.u.determinant().unwrap().abs(), Int::from(1));
        assert_eq!(snf.v.determinant().unwrap().abs(), Int::from(1));
        let d = snf.s.diagonal();
        for w in d.windows(2) {
            if !w[1].is_zero() {
                assert!(!w[0].is_zero(), "zero before nonzero on diagonal");
            }
            if !w[0].is_zero() && !w[1].is_zero() {
                assert!((w[1].clone() % w[0].clone()).is_zero(), "chain broken: {:?}", d);
            }
        }
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    assert!(snf.s[(i, j)].is_zero());
                }
            }
        }
        snf
    }

    #[test]
    fn identity_is_fixed() {
        let a = m(&[vec![1, 0], vec![0, 1]]);
        let snf = check_snf(&a);
        assert_eq!(snf.s, a);
        assert_eq!(snf.u, Matrix::identity(2));
        assert_eq!(snf.v, Matrix::identity(2));
    }

    #[test]
    fn diag_4_6_gives_2_12() {
        let snf = check_snf(&m(&[vec![4, 0], vec![0, 6]]));
        assert_eq!(snf.divisors(), vec![Int::from(2), Int::from(12)]);
    }

    #[test]
    fn relation_matrix_334() {
        // Base (3,3,4), e = (1,1,1), d = 0.
        let a = m(&[vec![1, 3, 0, 0], vec![1, 0, 3, 0], vec![1, 0, 0, 4], vec![0, 1, 1, 1]]);
        let snf = check_snf(&a);
        assert_eq!(
            snf.divisors(),
            vec![Int::from(1), Int::from(1), Int::from(1), Int::from(33)]
        );
        // agrees with the minor-gcd oracle
        let oracle = elementary_divisors_oracle(&a).unwrap();
        assert_eq!(snf.divisors(), oracle);
    }

    #[test]
    fn empty_and_zero() {
        let z = Matrix::<Int>::zero(2, 2);
        let snf = check_snf(&z);
        assert!(snf.divisors().is_empty());
        assert_eq!(elementary_divisors_oracle(&z).unwrap(), Vec::<Int>::new());
        let e = Matrix::<Int>::zero(0, 3);
        let snf = smith_normal_form(&e);
        assert_eq!(snf.s.rows(), 0);
        assert_eq!(snf.v, Matrix::identity(3));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(Matrix::<Int>::identity(3).determinant().unwrap(), Int::from(1));
        // (3,3,5) relation matrix, e=(1,1,1), d=0: |det| = 3*(5+5+3) = 39
        let a = m(&[vec![1, 3, 0, 0], vec![1, 0, 3, 0], vec![1, 0, 0, 5], vec![0, 1, 1, 1]]);
        assert_eq!(a.determinant().unwrap().abs(), Int::from(39));
        // (4,4,4) relation matrix: |det| = 16*3 = 48
        let b = m(&[vec![1, 4, 0, 0], vec![1, 0, 4, 0], vec![1, 0, 0, 4], vec![0, 1, 1, 1]]);
        assert_eq!(b.determinant().unwrap().abs(), Int::from(48));
        let ns = Matrix::<Int>::zero(2, 3).determinant();
        assert_eq!(ns, Err(MatrixError::NonSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        // cofactor oracle on a handful of fixed matrices
        fn cofactor(a: &Matrix<Int>) -> Int {
            let n = a.rows();
            if n == 0 {
                return Int::from(1);
            }
            if n == 1 {
                return a[(0, 0)].clone();
            }
            let mut acc = Int::from(0);
            for j in 0..n {
                let mut sub = Matrix::zero(n - 1, n - 1);
                for i in 1..n {
                    let mut cc = 0;
                    for c in 0..n {
                        if c == j {
                            continue;
                        }
                        sub[(i - 1, cc)] = a[(i, c)].clone();
                        cc += 1;
                    }
                }
                let term = a[(0, j)].clone() * cofactor(&sub);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let cases = [
            m(&[vec![1, 2], vec![3, 4]]),
            m(&[vec![2, 0, 1], vec![-3, 1, 4], vec![0, 5, -2]]),
            m(&[vec![1, 3, 0, 0], vec![1, 0, 3, 0], vec![1, 0, 0, 5], vec![0, 1, 1, 1]]),
            m(&[vec![0, 0], vec![0, 0]]),
        ];
        for a in &cases {
            assert_eq!(a.determinant().unwrap(), cofactor(a));
        }
    }

    #[test]
    fn oracle_examples() {
        let d24 = elementary_divisors_oracle(&m(&[vec![2, 0], vec![0, 4]])).unwrap();
        assert_eq!(d24, vec![Int::from(2), Int::from(4)]);
        let d64 = elementary_divisors_oracle(&m(&[vec![6, 0], vec![0, 4]])).unwrap();
        assert_eq!(d64, vec![Int::from(2), Int::from(12)]);
        let too_big = Matrix::<Int>::zero(7, 2);
        assert!(matches!(
            elementary_divisors_oracle(&too_big),
            Err(MatrixError::OracleBudget { .. })
        ));
    }

    #[test]
    fn snf_determinant_product() {
        let a = m(&[vec![2, 5, 1], vec![0, -3, 4], vec![7, 1, 1]]);
        let snf = check_snf(&a);
        let det = a.determinant().unwrap().abs();
        let prod: Int = snf.divisors().into_iter().product();
        assert_eq!(prod, det);
    }
}
