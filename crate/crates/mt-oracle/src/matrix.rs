//! Dense exact matrices over `BigInt` / `BigRational`, Smith normal form with
//! unimodular transforms, integer linear-system solving, and lattice bases.
//!
//! Sizes in this crate are tiny (ranks at most a few dozen), so the classic
//! swap-minimal-pivot SNF with full transform tracking is the right tool; all
//! arithmetic is arbitrary precision, so there is no overflow to manage.

use num_traits::{One, Signed, Zero};

use crate::arith::{common_denominator, Int, Rat};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows in integer matrix".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i -= q * row_k
    fn row_sub_mul(&mut self, i: usize, k: usize, q: &Int) {
        for j in 0..self.cols {
            let delta = q * self.get(k, j);
            let v = self.get(i, j) - delta;
            self.set(i, j, v);
        }
    }

    /// col_j -= q * col_k
    fn col_sub_mul(&mut self, j: usize, k: usize, q: &Int) {
        for i in 0..self.rows {
            let delta = q * self.get(i, k);
            let v = self.get(i, j) - delta;
            self.set(i, j, v);
        }
    }

    /// row_k += row_i
    fn row_add(&mut self, k: usize, i: usize) {
        for j in 0..self.cols {
            let v = self.get(k, j) + self.get(i, j);
            self.set(k, j, v);
        }
    }

    fn negate_row(&mut self, k: usize) {
        for j in 0..self.cols {
            let v = -self.get(k, j).clone();
            self.set(k, j, v);
        }
    }

    pub fn to_rat_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect()
    }

    /// Exact determinant (square matrices) via fraction-free rational elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.to_rat_rows();
        let mut det = Rat::one();
        for k in 0..n {
            let pivot_row = (k..n).find(|&i| !m[i][k].is_zero());
            let Some(p) = pivot_row else {
                return Int::zero();
            };
            if p != k {
                m.swap(p, k);
                det = -det;
            }
            let pivot = m[k][k].clone();
            det *= pivot.clone();
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let f = &m[i][k] / &pivot;
                for j in k..n {
                    let delta = &f * &m[k][j];
                    m[i][j] = &m[i][j] - delta;
                }
            }
        }
        debug_assert!(det.is_integer());
        det.to_integer()
    }

    /// Exact inverse of an integer matrix whose inverse is again integral
    /// (unimodular input). Errors otherwise.
    pub fn int_inverse(&self) -> Result<IntMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let rows = self.to_rat_rows();
        let mut inv_cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[j] = Rat::one();
            let col = solve_rows(&rows, &e).ok_or_else(|| {
                Error::InvalidDatum("matrix is singular, cannot invert".into())
            })?;
            inv_cols.push(col);
        }
        let mut out = IntMatrix::zero(n, n);
        for (j, col) in inv_cols.iter().enumerate() {
            for i in 0..n {
                if !col[i].is_integer() {
                    return Err(Error::InvalidDatum("matrix inverse is not integral".into()));
                }
                out.set(i, j, col[i].to_integer());
            }
        }
        Ok(out)
    }
}

/// Smith normal form `u * a * v = s` with `u`, `v` unimodular and `s`
/// diagonal, nonnegative, with each diagonal entry dividing the next.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries d1 | d2 | ...
    pub fn invariant_factors(&self) -> Vec<Int> {
        let k = self.s.n_rows().min(self.s.n_cols());
        (0..k)
            .map(|i| self.s.get(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let m = a.n_rows();
    let n = a.n_cols();
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for k in 0..m.min(n) {
        'pivot: loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in k..m {
                for j in k..n {
                    if s.get(i, j).is_zero() {
                        continue;
                    }
                    let better = match &best {
                        None => true,
                        Some((bi, bj)) => s.get(i, j).abs() < s.get(*bi, *bj).abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivot; // trailing block is zero; done
            };
            s.swap_rows(k, pi);
            u.swap_rows(k, pi);
            s.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut dirty = false;
            for i in k + 1..m {
                if s.get(i, k).is_zero() {
                    continue;
                }
                let q = s.get(i, k) / s.get(k, k); // truncated; remainder shrinks
                if !q.is_zero() {
                    s.row_sub_mul(i, k, &q);
                    u.row_sub_mul(i, k, &q);
                }
                if !s.get(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..n {
                if s.get(k, j).is_zero() {
                    continue;
                }
                let q = s.get(k, j) / s.get(k, k);
                if !q.is_zero() {
                    s.col_sub_mul(j, k, &q);
                    v.col_sub_mul(j, k, &q);
                }
                if !s.get(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }

            // pivot row/column are clear; force divisibility of the block
            let p = s.get(k, k).clone();
            for i in k + 1..m {
                for j in k + 1..n {
                    if !(s.get(i, j) % &p).is_zero() {
                        s.row_add(k, i);
                        u.row_add(k, i);
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
    }

    for k in 0..m.min(n) {
        if s.get(k, k).is_negative() {
            s.negate_row(k);
            u.negate_row(k);
        }
    }

    debug_assert_eq!(u.mul(a).mul(&v), s);
    Snf { u, s, v }
}

/// One integer solution of `a x = b`, if any.
pub fn solve_linear_diophantine(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(a.n_rows(), b.len(), "rhs length mismatch");
    let snf = smith_normal_form(a);
    let y = snf.u.mul_vec(b);
    let m = a.n_rows();
    let n = a.n_cols();
    let mut z = vec![Int::zero(); n];
    for i in 0..m {
        if i < n {
            let d = snf.s.get(i, i);
            if d.is_zero() {
                if !y[i].is_zero() {
                    return None;
                }
            } else {
                if !(&y[i] % d).is_zero() {
                    return None;
                }
                z[i] = &y[i] / d;
            }
        } else if !y[i].is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&z))
}

// ---------------------------------------------------------------------------
// rational elimination
// ---------------------------------------------------------------------------

/// Reduced row echelon form in place; returns the pivot column of each
/// pivot row.
fn rref(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= pivot.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &m[r][j];
                    m[i][j] = &m[i][j] - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rat_rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    rref(&mut m).len()
}

/// One rational solution of `rows * x = b` (free variables set to zero).
pub fn solve_rows(rows: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(rows.len(), b.len(), "rhs length mismatch");
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    // inconsistent iff a pivot lands in the augmented column
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &c) in m.iter().zip(&pivots) {
        x[c] = row[cols].clone();
    }
    Some(x)
}

/// Is `b` a rational combination of `cols` (each entry a column vector)?
/// Returns the coefficients if so.
pub fn solve_columns(cols: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let dim = b.len();
    if cols.iter().any(|c| c.len() != dim) {
        return None;
    }
    let rows: Vec<Vec<Rat>> = (0..dim).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    solve_rows(&rows, b)
}

/// Basis of the right kernel `{x : rows * x = 0}`.
pub fn rat_kernel(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (row, &c) in m.iter().zip(&pivots) {
                v[c] = -row[f].clone();
            }
            v
        })
        .collect()
}

// ---------------------------------------------------------------------------
// lattices given by rational generating sets
// ---------------------------------------------------------------------------

/// A basis of the lattice spanned (over Z) by `gens` (vectors of equal
/// length). Computed by scaling to an integer matrix and reading the image
/// basis off the Smith normal form.
pub fn lattice_basis(gens: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let dim = gens[0].len();
    if gens.iter().any(|g| g.len() != dim) {
        return Err(Error::DimensionMismatch("lattice generators of unequal length".into()));
    }
    let d = common_denominator(gens.iter().map(Vec::as_slice));
    let d_rat = Rat::from_integer(d.clone());
    let mut a = IntMatrix::zero(dim, gens.len());
    for (j, g) in gens.iter().enumerate() {
        for i in 0..dim {
            let scaled = &g[i] * &d_rat;
            debug_assert!(scaled.is_integer());
            a.set(i, j, scaled.to_integer());
        }
    }
    let snf = smith_normal_form(&a);
    let u_inv = snf.u.int_inverse()?;
    let mut basis = Vec::new();
    for k in 0..dim.min(gens.len()) {
        let s_k = snf.s.get(k, k);
        if s_k.is_zero() {
            continue;
        }
        let col = u_inv.col(k);
        basis.push(col.into_iter().map(|x| Rat::new(x * s_k, d.clone())).collect());
    }
    Ok(basis)
}

/// Integer membership: is `v` an integer combination of `gens`?
/// Returns the coefficients of one representation if so.
pub fn integer_combination(gens: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Int>> {
    if gens.is_empty() {
        return if v.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
    }
    let dim = v.len();
    if gens.iter().any(|g| g.len() != dim) {
        return None;
    }
    let d = common_denominator(gens.iter().map(Vec::as_slice).chain(std::iter::once(v)));
    let d_rat = Rat::from_integer(d.clone());
    let mut a = IntMatrix::zero(dim, gens.len());
    for (j, g) in gens.iter().enumerate() {
        for i in 0..dim {
            let scaled = &g[i] * &d_rat;
            debug_assert!(scaled.is_integer());
            a.set(i, j, scaled.to_integer());
        }
    }
    let b: Vec<Int> = v
        .iter()
        .map(|x| {
            let scaled = x * &d_rat;
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    solve_linear_diophantine(&a, &b)
}
