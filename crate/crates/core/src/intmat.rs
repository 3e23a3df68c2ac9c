//! Exact integer matrix kernels: Hermite and Smith normal forms over
//! arbitrary-precision integers. One solver covers both the Borel-Smith
//! lattice computation and the finite-abelian-group structure computations.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    a: Vec<BigInt>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            a: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        debug_assert!(rows.iter().all(|x| x.len() == c));
        Mat {
            rows: r,
            cols: c,
            a: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.a.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.a.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i += c * row_j
    fn row_add(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.cols {
            let v = &self.a[j * self.cols + k] * c;
            self.a[i * self.cols + k] += v;
        }
    }

    /// col_i += c * col_j
    fn col_add(&mut self, i: usize, j: usize, c: &BigInt) {
        for r in 0..self.rows {
            let v = &self.a[r * self.cols + j] * c;
            self.a[r * self.cols + i] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = -self.a[i * self.cols + k].clone();
            self.a[i * self.cols + k] = v;
        }
    }

    fn negate_col(&mut self, i: usize) {
        for r in 0..self.rows {
            let v = -self.a[r * self.cols + i].clone();
            self.a[r * self.cols + i] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.a[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.a[i * self.cols + j]
    }
}

/// Result of a Smith reduction U*M*V = D. Only the column transform V and its
/// inverse are tracked; no caller needs U.
pub struct Smith {
    /// Diagonal entries, nonnegative, each dividing the next.
    pub diag: Vec<BigInt>,
    pub v: Mat,
    pub v_inv: Mat,
}

/// Smith normal form with column-transform tracking.
pub fn smith(m: &Mat) -> Smith {
    let mut m = m.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut v = Mat::identity(cols);
    let mut v_inv = Mat::identity(cols);

    // column op wrappers keeping v and v_inv in sync:
    // col_j += c*col_i on m,v corresponds to row_i -= c*row_j on v_inv.
    macro_rules! cswap {
        ($i:expr, $j:expr) => {{
            m.swap_cols($i, $j);
            v.swap_cols($i, $j);
            v_inv.swap_rows($i, $j);
        }};
    }
    macro_rules! cadd {
        ($j:expr, $i:expr, $c:expr) => {{
            let c: BigInt = $c;
            m.col_add($j, $i, &c);
            v.col_add($j, $i, &c);
            v_inv.row_add($i, $j, &(-c));
        }};
    }
    macro_rules! cneg {
        ($i:expr) => {{
            m.negate_col($i);
            v.negate_col($i);
            v_inv.negate_row($i);
        }};
    }

    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // find a pivot of minimal absolute value in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[(i, j)].is_zero()
                    && pivot.is_none_or(|(pi, pj)| m[(i, j)].abs() < m[(pi, pj)].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap_rows(t, pi);
        cswap!(t, pj);

        // clear column t below the pivot and row t right of the pivot
        let mut dirty = false;
        for i in t + 1..rows {
            if !m[(i, t)].is_zero() {
                let q = div_rounded(&m[(i, t)], &m[(t, t)]);
                if !q.is_zero() {
                    m.row_add(i, t, &(-q));
                }
                if !m[(i, t)].is_zero() {
                    dirty = true;
                }
            }
        }
        for j in t + 1..cols {
            if !m[(t, j)].is_zero() {
                let q = div_rounded(&m[(t, j)], &m[(t, t)]);
                if !q.is_zero() {
                    cadd!(j, t, -q);
                }
                if !m[(t, j)].is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue; // smaller remainders exist; re-pick the pivot
        }
        // enforce divisibility of the rest of the block by the pivot
        let mut fixed = true;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&m[(i, j)] % &m[(t, t)]).is_zero() {
                    // fold row i into row t to create a smaller pivot
                    m.row_add(t, i, &BigInt::one());
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        if m[(t, t)].is_negative() {
            cneg!(t);
        }
        t += 1;
    }

    let diag = (0..n).map(|i| m[(i, i)].clone()).collect();
    Smith { diag, v, v_inv }
}

/// Rounded division: quotient minimizing |a - q*b|.
fn div_rounded(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(a, b);
    let double_r = BigInt::from(2) * r.abs();
    if double_r > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Z-basis of { x : M x = 0 }, one basis vector per returned row.
pub fn kernel_basis(m: &Mat) -> Vec<Vec<BigInt>> {
    let s = smith(m);
    let rank = s.diag.iter().filter(|d| !d.is_zero()).count();
    // kernel is spanned by columns rank..cols of V
    (rank..m.cols)
        .map(|j| (0..m.cols).map(|i| s.v[(i, j)].clone()).collect())
        .collect()
}

/// Canonical row Hermite normal form: zero rows dropped, pivots positive,
/// entries above each pivot reduced into [0, pivot).
pub fn hnf_rows(rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let cols = rows[0].len();
    let mut m = Mat::from_rows(rows);
    let mut r = 0;
    for c in 0..cols {
        loop {
            // pivot: minimal absolute nonzero entry in column c at or below r
            let pivot = (r..m.rows)
                .filter(|&i| !m[(i, c)].is_zero())
                .min_by_key(|&i| m[(i, c)].abs());
            let Some(p) = pivot else { break };
            m.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m.rows {
                if !m[(i, c)].is_zero() {
                    let q = div_rounded(&m[(i, c)], &m[(r, c)]);
                    m.row_add(i, r, &(-q));
                    if !m[(i, c)].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < m.rows && !m[(r, c)].is_zero() {
            if m[(r, c)].is_negative() {
                m.negate_row(r);
            }
            // reduce entries above the pivot into [0, pivot)
            for i in 0..r {
                let q = num_integer::Integer::div_floor(&m[(i, c)], &m[(r, c)]);
                if !q.is_zero() {
                    m.row_add(i, r, &(-q));
                }
            }
            r += 1;
        }
    }
    (0..r).map(|i| m.row(i).to_vec()).collect()
}

/// Solves x * B = target for integer x, where B's rows are an HNF basis
/// (staircase shape). Returns None if no integral solution exists.
pub fn solve_in_hnf(basis: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rem: Vec<BigInt> = target.to_vec();
    let mut coeffs = vec![BigInt::zero(); basis.len()];
    for (bi, brow) in basis.iter().enumerate() {
        let pivot_col = brow.iter().position(|x| !x.is_zero())?;
        let (q, r) = num_integer::Integer::div_rem(&rem[pivot_col], &brow[pivot_col]);
        if !r.is_zero() {
            // pivot does not divide: check later columns can't fix it
            return None;
        }
        if !q.is_zero() {
            for k in 0..rem.len() {
                let v = &brow[k] * &q;
                rem[k] -= v;
            }
        }
        coeffs[bi] = q;
        let _ = bi;
    }
    if rem.iter().all(|x| x.is_zero()) {
        Some(coeffs)
    } else {
        None
    }
}

pub fn to_i64_vec(row: &[BigInt]) -> Vec<i64> {
    row.iter()
        .map(|x| i64::try_from(x).expect("lattice entry exceeds i64"))
        .collect()
}
