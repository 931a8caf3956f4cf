//! Minimal dense row-major matrix and vector helpers.
//!
//! The models here are small enough that hand-rolled f64 loops are both fast
//! enough and easy to differentiate exactly.

use crate::rng::CounterRng;

/// Dense row-major `rows x cols` matrix of f64.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    /// Identity-like matrix: ones on the main diagonal, zero elsewhere.
    /// Works for non-square shapes (row-truncated identity).
    pub fn eye(rows: usize, cols: usize) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows.min(cols) {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Fill with draws uniform in `[-limit, limit]`.
    pub fn uniform(rows: usize, cols: usize, limit: f64, rng: &mut CounterRng) -> Self {
        let data = (0..rows * cols)
            .map(|_| rng.uniform_f64(-limit, limit))
            .collect();
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// `A x`
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols, "matvec shape");
        (0..self.rows)
            .map(|r| dot(self.row(r), x))
            .collect()
    }

    /// `A^T y`
    pub fn matvec_transposed(&self, y: &[f64]) -> Vec<f64> {
        assert_eq!(y.len(), self.rows, "matvec_transposed shape");
        let mut out = vec![0.0; self.cols];
        for (r, &yr) in y.iter().enumerate() {
            if yr == 0.0 {
                continue;
            }
            let row = self.row(r);
            for (o, &v) in out.iter_mut().zip(row) {
                *o += yr * v;
            }
        }
        out
    }

    /// `A += y x^T`
    pub fn add_outer(&mut self, y: &[f64], x: &[f64]) {
        assert_eq!(y.len(), self.rows, "add_outer rows");
        assert_eq!(x.len(), self.cols, "add_outer cols");
        for (r, &yr) in y.iter().enumerate() {
            if yr == 0.0 {
                continue;
            }
            let row = &mut self.data[r * self.cols..(r + 1) * self.cols];
            for (o, &xv) in row.iter_mut().zip(x) {
                *o += yr * xv;
            }
        }
    }

    /// `A += a * B`
    pub fn add_scaled(&mut self, a: f64, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (o, &v) in self.data.iter_mut().zip(&other.data) {
            *o += a * v;
        }
    }

    pub fn scale(&mut self, a: f64) {
        for v in &mut self.data {
            *v *= a;
        }
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add_scaled_vec(out: &mut [f64], a: f64, v: &[f64]) {
    debug_assert_eq!(out.len(), v.len());
    for (o, &x) in out.iter_mut().zip(v) {
        *o += a * x;
    }
}

/// Numerically stable softmax: subtracts the max before exponentiating.
pub fn softmax(scores: &[f64]) -> Vec<f64> {
    let max = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = scores.iter().map(|&s| (s - max).exp()).collect();
    let sum: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / sum).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matvec_matches_by_hand() {
        let m = Mat::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0], vec![5.0, 6.0]]);
        assert_eq!(m.matvec(&[1.0, -1.0]), vec![-1.0, -1.0, -1.0]);
        assert_eq!(m.matvec_transposed(&[1.0, 0.0, 2.0]), vec![11.0, 14.0]);
    }

    #[test]
    fn outer_product_accumulates() {
        let mut m = Mat::zeros(2, 3);
        m.add_outer(&[2.0, -1.0], &[1.0, 0.0, 3.0]);
        assert_eq!(m.row(0), &[2.0, 0.0, 6.0]);
        assert_eq!(m.row(1), &[-1.0, 0.0, -3.0]);
    }

    #[test]
    fn softmax_sums_to_one_and_is_shift_invariant() {
        let scores = [0.3, -1.2, 2.0, 0.0];
        let p = softmax(&scores);
        let shifted: Vec<f64> = scores.iter().map(|s| s + 123.456).collect();
        let q = softmax(&shifted);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        for (a, b) in p.iter().zip(&q) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn eye_truncates_rows() {
        let m = Mat::eye(2, 4);
        assert_eq!(m.matvec(&[5.0, 6.0, 7.0, 8.0]), vec![5.0, 6.0]);
    }
}
