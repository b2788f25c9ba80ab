//! Dense matrices over the two scalar fields, with SVD-based numeric rank
//! and exact rational elimination for rank certification.

use nalgebra::{DMatrix, DVector};
use num_traits::Zero;

use crate::rat::{rat_abs, Rat, Scalar};

/// Row-major dense matrix.
#[derive(Clone, Debug)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: T) {
        let x = self.get(r, c).clone() + v;
        self.set(r, c, x);
    }
}

impl Mat<f64> {
    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }
}

/// Numeric rank: singular values below `rel_tol` times the largest count as
/// zero. An all-zero (or empty) matrix has rank 0.
pub fn rank_f64(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().singular_values();
    let max = sv.iter().cloned().fold(0.0f64, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * max).count()
}

/// Orthonormal basis of the (right) null space of `m`.
pub fn nullspace_f64(m: &DMatrix<f64>, rel_tol: f64) -> Vec<Vec<f64>> {
    let cols = m.ncols();
    if cols == 0 {
        return Vec::new();
    }
    // Pad wide matrices with zero rows so the thin SVD still exposes every
    // null direction.
    let work = if m.nrows() < cols {
        let mut padded = DMatrix::zeros(cols, cols);
        padded.view_mut((0, 0), (m.nrows(), cols)).copy_from(m);
        padded
    } else {
        m.clone()
    };
    let svd = work.svd(false, true);
    let v_t = svd.v_t.expect("svd requested v_t");
    let sv = &svd.singular_values;
    let max = sv.iter().cloned().fold(0.0f64, f64::max);
    let mut basis = Vec::new();
    for i in 0..v_t.nrows() {
        let s = if i < sv.len() { sv[i] } else { 0.0 };
        if max == 0.0 || s <= rel_tol * max {
            basis.push(v_t.row(i).iter().cloned().collect());
        }
    }
    basis
}

/// Least-squares solve of m x = b; returns (x, residual_norm).
pub fn lstsq_f64(m: &DMatrix<f64>, b: &[f64]) -> (Vec<f64>, f64) {
    let rhs = DVector::from_row_slice(b);
    let svd = m.clone().svd(true, true);
    let x = svd
        .solve(&rhs, f64::EPSILON * m.nrows().max(m.ncols()) as f64)
        .expect("svd solve");
    let res = (m * &x - rhs).norm();
    (x.iter().cloned().collect(), res)
}

/// Exact rank by Gaussian elimination over the rationals.
pub fn rank_exact(m: &Mat<Rat>) -> usize {
    let (work, rank, _) = eliminate(m);
    let _ = work;
    rank
}

/// Rational basis of the right null space.
pub fn nullspace_exact(m: &Mat<Rat>) -> Vec<Vec<Rat>> {
    let (work, rank, pivots) = eliminate(m);
    let cols = m.cols;
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = Some(row);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut vec = vec![Rat::zero(); cols];
        vec[free] = Rat::from_integer(1.into());
        // back-substitute: rows are in reduced echelon form
        for row in (0..rank).rev() {
            let pc = pivots[row];
            let mut s = Rat::zero();
            for c in (pc + 1)..cols {
                if !vec[c].is_zero() {
                    s += work.get(row, c).clone() * vec[c].clone();
                }
            }
            vec[pc] = -s / work.get(row, pc).clone();
        }
        basis.push(vec);
    }
    basis
}

/// Row echelon elimination with exact pivoting; returns (echelon matrix,
/// rank, pivot column per pivot row).
fn eliminate(m: &Mat<Rat>) -> (Mat<Rat>, usize, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let mut pivot = None;
        for r in row..a.rows {
            if !a.get(r, col).is_zero() {
                pivot = Some(r);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        if p != row {
            for c in col..a.cols {
                let tmp = a.get(row, c).clone();
                a.set(row, c, a.get(p, c).clone());
                a.set(p, c, tmp);
            }
        }
        for r in (row + 1)..a.rows {
            if a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col).clone() / a.get(row, col).clone();
            for c in col..a.cols {
                let v = a.get(r, c).clone() - factor.clone() * a.get(row, c).clone();
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, row, pivots)
}

/// Exact determinant of a square rational matrix.
pub fn det_exact(m: &Mat<Rat>) -> Rat {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let mut a = m.clone();
    let n = a.rows;
    let mut det = Rat::from_integer(1.into());
    for col in 0..n {
        let mut pivot = None;
        for r in col..n {
            if !a.get(r, col).is_zero() {
                pivot = Some(r);
                break;
            }
        }
        let Some(p) = pivot else {
            return Rat::zero();
        };
        if p != col {
            det = -det;
            for c in col..n {
                let tmp = a.get(col, c).clone();
                a.set(col, c, a.get(p, c).clone());
                a.set(p, c, tmp);
            }
        }
        det *= a.get(col, col).clone();
        for r in (col + 1)..n {
            if a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col).clone() / a.get(col, col).clone();
            for c in col..n {
                let v = a.get(r, c).clone() - factor.clone() * a.get(col, c).clone();
                a.set(r, c, v);
            }
        }
    }
    det
}

/// Numeric rank of the framework system given by points and edges: rows are
/// 6 equations per point, one column per edge carrying the joined extensor
/// at each endpoint with opposite signs. Shared by fills and the statics
/// module.
pub fn framework_rank_f64(points: &[[f64; 4]], edges: &[(usize, usize)], rel_tol: f64) -> usize {
    let m = framework_matrix::<f64>(
        &points.iter().map(|p| p.map(|x| x)).collect::<Vec<_>>(),
        edges,
    );
    rank_f64(&m.to_dmatrix(), rel_tol)
}

pub fn framework_matrix<T: Scalar>(points: &[[T; 4]], edges: &[(usize, usize)]) -> Mat<T> {
    let mut m = Mat::zeros(6 * points.len(), edges.len());
    for (col, &(i, j)) in edges.iter().enumerate() {
        let e = crate::extensor::join(&points[i], &points[j]);
        for k in 0..6 {
            m.set(6 * i + k, col, e.0[k].clone());
            m.set(6 * j + k, col, -e.0[k].clone());
        }
    }
    m
}

/// Largest rational magnitude in a matrix compared against a threshold;
/// used when adjudicating near-zero values exactly.
pub fn rat_exceeds(r: &Rat, num: i64, den_pow10: u32) -> bool {
    let mut bound = Rat::new(num.into(), 1.into());
    for _ in 0..den_pow10 {
        bound /= Rat::new(10.into(), 1.into());
    }
    rat_abs(r) > bound
}
