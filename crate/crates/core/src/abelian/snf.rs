use super::matrix::{Matrix, Scalar};

/// Result of a Smith normal form computation: `u * m * v == d`.
///
/// `u_inv` and `v_inv` are the inverses of the (unimodular) transforms and
/// are tracked alongside them so that callers can lift quotient coordinates
/// back without a separate inversion.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v_inv: Matrix<T>,
}

impl<T: Scalar> SmithForm<T> {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }

    pub fn invariant_factors(&self) -> Vec<T> {
        self.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }
}

struct Work<T> {
    a: Matrix<T>,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
}

impl<T: Scalar> Work<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    // row[dst] += k row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &T) {
        self.a.add_row(dst, src, k);
        self.u.add_row(dst, src, k);
        self.u_inv.add_col(src, dst, &-k.clone());
    }

    // col[dst] += k col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &T) {
        self.a.add_col(dst, src, k);
        self.v.add_col(dst, src, k);
        self.v_inv.add_row(src, dst, &-k.clone());
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Moves the smallest nonzero entry of row t / column t (from index t on)
    /// into the pivot position.
    fn bring_min_to_pivot(&mut self, t: usize) {
        let (r, c) = (self.a.rows(), self.a.cols());
        let mut best: Option<(usize, usize)> = None;
        let consider = |i: usize, j: usize, a: &Matrix<T>, best: &mut Option<(usize, usize)>| {
            let x = &a[(i, j)];
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                *best = Some((i, j));
            }
        };
        for i in t..r {
            consider(i, t, &self.a, &mut best);
        }
        for j in t..c {
            consider(t, j, &self.a, &mut best);
        }
        if let Some((i, j)) = best {
            self.swap_rows(t, i);
            self.swap_cols(t, j);
        }
    }
}

/// Smith normal form of an integer matrix.
///
/// Returns unimodular `u`, `v` with `u * m * v = d`, where `d` is diagonal
/// with nonnegative entries `d_1 | d_2 | ...` (zeros last).
pub fn smith_normal_form<T: Scalar>(m: &Matrix<T>) -> SmithForm<T> {
    let (r, c) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: Matrix::identity(r),
        u_inv: Matrix::identity(r),
        v: Matrix::identity(c),
        v_inv: Matrix::identity(c),
    };

    for t in 0..r.min(c) {
        // global minimum of the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = &w.a[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < w.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..r {
                if !w.a[(i, t)].is_zero() {
                    let q = w.a[(i, t)].clone() / w.a[(t, t)].clone();
                    w.add_row(i, t, &-q);
                    if !w.a[(i, t)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                if !w.a[(t, j)].is_zero() {
                    let q = w.a[(t, j)].clone() / w.a[(t, t)].clone();
                    w.add_col(j, t, &-q);
                    if !w.a[(t, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                w.bring_min_to_pivot(t);
                continue;
            }
            // pivot must divide the rest of the block
            let p = w.a[(t, t)].clone();
            let offender = (t + 1..r).find(|&i| (t + 1..c).any(|j| !w.a[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => w.add_row(t, i, &T::one()),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }

    SmithForm {
        u: w.u,
        d: w.a,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
    }
}

/// Basis of the integer kernel `{x : m x = 0}`, as columns.
pub fn integer_kernel<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    (rank..m.cols()).map(|j| snf.v.col(j)).collect()
}

/// Basis (as columns) of the lattice spanned by the given columns in `Z^dim`.
pub fn column_span_basis<T: Scalar>(dim: usize, gens: &[Vec<T>]) -> Vec<Vec<T>> {
    if gens.is_empty() {
        return Vec::new();
    }
    let g = Matrix::from_cols(dim, gens);
    let snf = smith_normal_form(&g);
    let diag = snf.d.diagonal();
    (0..snf.rank())
        .map(|j| snf.u_inv.col(j).into_iter().map(|x| x * diag[j].clone()).collect())
        .collect()
}

/// Solves `b y = target` for integer `y`, where `b` has independent columns.
/// Returns `None` when no integer solution exists.
pub fn solve_integer<T: Scalar>(b: &Matrix<T>, target: &[T]) -> Option<Vec<T>> {
    let snf = smith_normal_form(b);
    let ut = snf.u.mul_vec(target);
    let diag = snf.d.diagonal();
    let mut z = vec![T::zero(); b.cols()];
    for (i, x) in ut.iter().enumerate() {
        let d = diag.get(i).cloned().unwrap_or_else(T::zero);
        if d.is_zero() {
            if !x.is_zero() {
                return None;
            }
        } else {
            if !x.is_multiple_of(&d) {
                return None;
            }
            z[i] = x.clone() / d;
        }
    }
    Some(snf.v.mul_vec(&z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn check<T: Scalar>(m: &Matrix<T>) -> SmithForm<T> {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert!(s.d.is_diagonal());
        let diag = s.d.diagonal();
        for w in diag.windows(2) {
            if w[1].is_zero() {
                continue;
            }
            assert!(!w[0].is_zero() && w[1].is_multiple_of(&w[0]), "divisibility {:?}", diag);
        }
        assert_eq!(&s.u * &s.u_inv, Matrix::identity(m.rows()));
        assert_eq!(&s.v * &s.v_inv, Matrix::identity(m.cols()));
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&Matrix::<i64>::from_i64_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.d, Matrix::from_i64_rows(&[vec![1, 0], vec![0, 6]]));
    }

    #[test]
    fn zero_one_by_one() {
        let s = check(&Matrix::<BigInt>::from_i64_rows(&[vec![0]]));
        assert!(s.d.is_zero());
    }

    #[test]
    fn identity_three() {
        let s = check(&Matrix::<BigInt>::identity(3));
        assert_eq!(s.d, Matrix::identity(3));
    }

    #[test]
    fn kernel_and_solve() {
        let m = Matrix::<i64>::from_i64_rows(&[vec![1, -1, 0], vec![0, 1, -1]]);
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|x| *x == 0));
        let b = Matrix::<i64>::from_i64_rows(&[vec![2], vec![0]]);
        assert_eq!(solve_integer(&b, &[4, 0]), Some(vec![2]));
        assert_eq!(solve_integer(&b, &[3, 0]), None);
        assert_eq!(solve_integer(&b, &[4, 1]), None);
    }

    proptest! {
        #[test]
        fn snf_postcondition_random(
            (r, c, entries) in (1usize..=8, 1usize..=8)
                .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-20i64..=20, r * c)))
        ) {
            let rows: Vec<Vec<i64>> = entries.chunks(c).map(|ch| ch.to_vec()).collect();
            check(&Matrix::<BigInt>::from_i64_rows(&rows));
            prop_assert_eq!(rows.len(), r);
        }
    }
}
