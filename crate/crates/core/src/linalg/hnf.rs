use super::Matrix;
use crate::scalar::{xgcd, Scalar};

/// Row-style Hermite normal form `h = u * a` with unimodular `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf<T> {
    pub h: Matrix<T>,
    pub u: Matrix<T>,
}

/// Computes the row-style Hermite normal form of `a`.
///
/// The result is upper echelon with positive pivots in strictly increasing
/// columns, every entry above a pivot reduced into `[0, pivot)`, and zero rows
/// at the bottom. Row operations are recorded in `u`.
pub fn hermite_normal_form<T: Scalar>(a: &Matrix<T>) -> Hnf<T> {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = Matrix::identity(m);
    let mut r = 0;
    for j in 0..n {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if h[(i, j)].is_zero() {
                continue;
            }
            if h[(r, j)].is_zero() {
                h.swap_rows(r, i);
                u.swap_rows(r, i);
                continue;
            }
            let (g, s, t) = xgcd(&h[(r, j)], &h[(i, j)]);
            let x = -(h[(i, j)].clone() / g.clone());
            let y = h[(r, j)].clone() / g;
            h.combine_rows(r, i, [&s, &t, &x, &y]);
            u.combine_rows(r, i, [&s, &t, &x, &y]);
        }
        if h[(r, j)].is_zero() {
            continue;
        }
        if h[(r, j)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let p = h[(r, j)].clone();
        for i in 0..r {
            let q = h[(i, j)].div_floor(&p);
            h.sub_row_multiple(i, r, &q);
            u.sub_row_multiple(i, r, &q);
        }
        r += 1;
    }
    Hnf { h, u }
}

/// Checks the shape conditions produced by [`hermite_normal_form`].
pub fn is_hermite_normal_form<T: Scalar>(h: &Matrix<T>) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero_row = false;
    for i in 0..h.rows() {
        let row = h.row(i);
        match row.iter().position(|x| !x.is_zero()) {
            None => seen_zero_row = true,
            Some(j) => {
                if seen_zero_row || last_pivot.is_some_and(|lp| j <= lp) {
                    return false;
                }
                let p = &row[j];
                if !p.is_positive() {
                    return false;
                }
                for k in 0..i {
                    let x = &h[(k, j)];
                    if x.is_negative() || x >= p {
                        return false;
                    }
                }
                last_pivot = Some(j);
            }
        }
    }
    true
}
