use crate::linalg::Matrix;
use crate::scalar::{xgcd, Scalar};

/// Canonical Hermite form of the lattice spanned by `gens` together with the
/// relation rows `moduli[j] * e_j`.
///
/// The relation rows belong to the lattice, so every coordinate may be reduced
/// modulo its modulus at any time; this keeps intermediate entries below
/// `max(moduli)^2`.
pub(crate) fn canonical_hnf<T, I>(gens: I, moduli: &[T]) -> Matrix<T>
where
    T: Scalar,
    I: IntoIterator<Item = Vec<T>>,
{
    let k = moduli.len();
    let mut basis: Vec<Vec<T>> = (0..k)
        .map(|j| {
            let mut row = vec![T::zero(); k];
            row[j] = moduli[j].clone();
            row
        })
        .collect();
    for g in gens {
        debug_assert_eq!(g.len(), k);
        insert(&mut basis, g, moduli);
    }
    for j in 0..k {
        let (head, tail) = basis.split_at_mut(j);
        let pivot_row = &tail[0];
        let p = &pivot_row[j];
        for row in head.iter_mut() {
            let q = row[j].div_floor(p);
            if !q.is_zero() {
                for c in j..k {
                    row[c] = row[c].clone() - q.clone() * pivot_row[c].clone();
                }
            }
        }
    }
    Matrix::new(k, k, basis.into_iter().flatten().collect()).expect("square")
}

fn reduce_from<T: Scalar>(v: &mut [T], from: usize, moduli: &[T]) {
    for c in from..v.len() {
        v[c] = v[c].mod_floor(&moduli[c]);
    }
}

fn insert<T: Scalar>(basis: &mut [Vec<T>], mut v: Vec<T>, moduli: &[T]) {
    let k = moduli.len();
    reduce_from(&mut v, 0, moduli);
    for j in 0..k {
        if v[j].is_zero() {
            continue;
        }
        let p = basis[j][j].clone();
        if v[j].is_multiple_of(&p) {
            let q = v[j].clone() / p;
            for c in j..k {
                v[c] = v[c].clone() - q.clone() * basis[j][c].clone();
            }
            reduce_from(&mut v, j + 1, moduli);
            continue;
        }
        let (g, s, t) = xgcd(&p, &v[j]);
        let x = v[j].clone() / g.clone();
        let y = p / g;
        let row = &mut basis[j];
        for c in j..k {
            let b = row[c].clone();
            let w = v[c].clone();
            row[c] = s.clone() * b.clone() + t.clone() * w.clone();
            v[c] = x.clone() * b - y.clone() * w;
        }
        debug_assert!(v[j].is_zero());
        reduce_from(row, j + 1, moduli);
        reduce_from(&mut v, j + 1, moduli);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermite_normal_form;

    fn oracle(gens: &[Vec<i64>], moduli: &[i64]) -> Matrix<i64> {
        let k = moduli.len();
        let g = Matrix::from_rows(k, gens).unwrap();
        let stacked = g.vstack(&Matrix::diagonal(moduli)).unwrap();
        let h = hermite_normal_form(&stacked).h;
        Matrix::from_rows(k, &h.row_vecs()[..k]).unwrap()
    }

    #[test]
    fn relations_only() {
        let h = canonical_hnf(Vec::<Vec<i64>>::new(), &[2, 6]);
        assert_eq!(h, Matrix::diagonal(&[2, 6]));
    }

    #[test]
    fn matches_general_hnf() {
        let cases: Vec<(Vec<Vec<i64>>, Vec<i64>)> = vec![
            (vec![vec![1, 3]], vec![2, 6]),
            (vec![vec![1, 1], vec![0, 2]], vec![4, 8]),
            (vec![vec![6]], vec![18]),
            (vec![vec![4], vec![6]], vec![18]),
            (vec![vec![1, 2, 3], vec![0, 5, 7]], vec![3, 9, 9]),
            (vec![vec![5, 11, 13], vec![-7, 2, 40]], vec![2, 6, 30]),
        ];
        for (gens, moduli) in cases {
            assert_eq!(canonical_hnf(gens.clone(), &moduli), oracle(&gens, &moduli));
        }
    }
}
