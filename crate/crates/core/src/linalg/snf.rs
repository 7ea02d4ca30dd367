use super::Matrix;
use crate::scalar::{xgcd, Scalar};

/// Smith normal form `s = u * a * v` with unimodular `u`, `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf<T> {
    pub s: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: Scalar> Snf<T> {
    /// Diagonal entries `d_1 | d_2 | ...`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }
}

/// Computes the Smith normal form of `a` by gcd-driven row and column
/// elimination. Deterministic: the pivot is always the first entry of least
/// absolute value in row-major order.
pub fn smith_normal_form<T: Scalar>(a: &Matrix<T>) -> Snf<T> {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = least_entry(&s, t) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                if s[(i, t)].is_multiple_of(&s[(t, t)]) {
                    let q = s[(i, t)].clone() / s[(t, t)].clone();
                    s.sub_row_multiple(i, t, &q);
                    u.sub_row_multiple(i, t, &q);
                    continue;
                }
                let (g, c, d) = xgcd(&s[(t, t)], &s[(i, t)]);
                let x = -(s[(i, t)].clone() / g.clone());
                let y = s[(t, t)].clone() / g;
                s.combine_rows(t, i, [&c, &d, &x, &y]);
                u.combine_rows(t, i, [&c, &d, &x, &y]);
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                if s[(t, j)].is_multiple_of(&s[(t, t)]) {
                    let q = -(s[(t, j)].clone() / s[(t, t)].clone());
                    let (one, zero) = (T::one(), T::zero());
                    s.combine_cols(t, j, [&one, &zero, &q, &one]);
                    v.combine_cols(t, j, [&one, &zero, &q, &one]);
                    continue;
                }
                let (g, c, d) = xgcd(&s[(t, t)], &s[(t, j)]);
                let x = -(s[(t, j)].clone() / g.clone());
                let y = s[(t, t)].clone() / g;
                s.combine_cols(t, j, [&c, &d, &x, &y]);
                v.combine_cols(t, j, [&c, &d, &x, &y]);
            }
            if (t + 1..m).any(|i| !s[(i, t)].is_zero()) {
                continue;
            }
            // pivot must divide the remaining block; otherwise fold the
            // offending row in and reduce again
            let p = s[(t, t)].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !s[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    s.add_row(t, i);
                    u.add_row(t, i);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    Snf { s, u, v }
}

fn least_entry<T: Scalar>(s: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let x = s[(i, j)].abs();
            if x.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| x < *b) {
                best = Some((i, j, x));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}
