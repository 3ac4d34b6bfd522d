use iwk_core::root_datum::RootDatum;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{OracleError, Result, CAPS};

/// A dense integer matrix as a list of rows.
pub type IntRows = Vec<Vec<BigInt>>;

fn cols(m: &IntRows) -> usize {
    m.first().map_or(0, |r| r.len())
}

fn mat_mul(a: &IntRows, b: &IntRows) -> IntRows {
    let (n, k, m) = (a.len(), b.len(), cols(b));
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum()).collect())
        .collect()
}

fn identity(n: usize) -> IntRows {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
}

/// Fraction-free (Bareiss) determinant.
fn det(m: &IntRows) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors `d_k / d_{k-1}`, where `d_k` is the gcd of all `k x k`
/// minors.
pub fn determinantal_invariant_factors(m: &IntRows) -> Vec<BigInt> {
    let (r, c) = (m.len(), cols(m));
    let mut divisors = vec![BigInt::one()];
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rows in subsets(r, k) {
            for cs in subsets(c, k) {
                let minor: IntRows = rows.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

/// Checks a claimed Smith form `u a v = d` with the given inverses. Returns
/// the failed conditions.
pub fn verify_smith(a: &IntRows, u: &IntRows, d: &IntRows, v: &IntRows, u_inv: &IntRows, v_inv: &IntRows) -> Vec<String> {
    let mut bad = Vec::new();
    if mat_mul(&mat_mul(u, a), v) != *d {
        bad.push("u a v != d".to_string());
    }
    if mat_mul(u, u_inv) != identity(u.len()) {
        bad.push("u not inverted by u_inv".to_string());
    }
    if mat_mul(v, v_inv) != identity(v.len()) {
        bad.push("v not inverted by v_inv".to_string());
    }
    for (i, row) in d.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j && !x.is_zero() {
                bad.push(format!("d[{i}][{j}] off-diagonal"));
            }
        }
    }
    let diag: Vec<&BigInt> = (0..d.len().min(cols(d))).map(|i| &d[i][i]).collect();
    if diag.iter().any(|x| x.is_negative()) {
        bad.push("negative diagonal entry".into());
    }
    for w in diag.windows(2) {
        let ok = if w[0].is_zero() { w[1].is_zero() } else { (w[1] % w[0]).is_zero() };
        if !ok {
            bad.push(format!("{} does not divide {}", w[0], w[1]));
        }
    }
    bad
}

/// Simple coroots plus the lattice's own torsion relations, as columns.
pub fn relation_matrix(datum: &RootDatum) -> IntRows {
    let n = datum.dim();
    let f = datum.free_rank();
    let mut columns: Vec<Vec<BigInt>> = (0..datum.rank()).map(|i| datum.simple_coroot(i).0).collect();
    for (j, t) in datum.lattice().torsion().iter().enumerate() {
        let mut c = vec![BigInt::zero(); n];
        c[f + j] = t.clone();
        columns.push(c);
    }
    (0..n).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect()
}

type RatRows = Vec<Vec<BigRational>>;

fn to_rat(m: &IntRows) -> RatRows {
    m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect()
}

/// Row-reduces in place; returns the pivot columns.
fn echelon(a: &mut RatRows) -> Vec<usize> {
    let (n, m) = (a.len(), cols_rat(a));
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..m {
        let Some(p) = (row..n).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(row, p);
        let lead = a[row][c].clone();
        for x in a[row].iter_mut() {
            *x = &*x / &lead;
        }
        for r in 0..n {
            if r != row && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..m {
                    let sub = &f * &a[row][j];
                    a[r][j] -= sub;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    pivots
}

fn cols_rat(m: &RatRows) -> usize {
    m.first().map_or(0, |r| r.len())
}

fn rank(m: &IntRows) -> usize {
    echelon(&mut to_rat(m)).len()
}

/// Integer coefficients `c` with `r c = b`, where `r` has independent columns.
fn solve_integral(r: &IntRows, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let k = cols(r);
    let mut aug: RatRows = to_rat(r);
    for (row, x) in aug.iter_mut().zip(b) {
        row.push(BigRational::from_integer(x.clone()));
    }
    let piv = echelon(&mut aug);
    if piv.contains(&k) {
        return None;
    }
    let mut sol = vec![BigInt::zero(); k];
    for (row, &c) in piv.iter().enumerate() {
        let x = &aug[row][k];
        if !x.is_integer() {
            return None;
        }
        sol[c] = x.to_integer();
    }
    Some(sol)
}

fn with_column(m: &IntRows, c: &[BigInt]) -> IntRows {
    m.iter().zip(c).map(|(r, x)| r.iter().cloned().chain([x.clone()]).collect()).collect()
}

/// `(rank, torsion order)` of `pi1(G)^sigma`, for a torsion-free lattice.
///
/// The rank is `rank(P) - rank(P R)` with `P` the Frobenius average and `R`
/// the coroots; the torsion is counted by enumerating lattice points of the
/// coordinate box that lie in the rational span of the coroots.
pub fn pi1_sigma_shape(datum: &RootDatum) -> Result<(usize, BigInt)> {
    if !datum.lattice().torsion().is_empty() {
        return Err(OracleError::CapExceeded("lattice torsion is outside the oracle's scope".into()));
    }
    let n = datum.dim();
    let s: IntRows = datum.twist_endo().to_rows();
    let id = identity(n);
    let mut p = id.clone();
    let mut power = s.clone();
    let mut order = 1;
    while power != id {
        order += 1;
        if order > 24 {
            return Err(OracleError::CapExceeded("Frobenius order exceeds 24".into()));
        }
        for (pr, qr) in p.iter_mut().zip(&power) {
            for (x, y) in pr.iter_mut().zip(qr) {
                *x += y;
            }
        }
        power = mat_mul(&power, &s);
    }
    let r = relation_matrix(datum);
    let free = rank(&p) - rank(&mat_mul(&p, &r));

    let rk = rank(&r);
    let b = CAPS.max_coord;
    let mut reps: Vec<Vec<BigInt>> = Vec::new();
    let mut v = vec![-b; n];
    loop {
        let lam: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        if rank(&with_column(&r, &lam)) == rk {
            let moved: Vec<BigInt> = (0..n).map(|i| (0..n).map(|j| &s[i][j] * &lam[j]).sum::<BigInt>() - &lam[i]).collect();
            let fixed = solve_integral(&r, &moved).is_some();
            let new = !reps.iter().any(|q| {
                let diff: Vec<BigInt> = lam.iter().zip(q).map(|(a, b)| a - b).collect();
                solve_integral(&r, &diff).is_some()
            });
            if fixed && new {
                reps.push(lam);
            }
        }
        let mut i = 0;
        while i < n && v[i] == b {
            v[i] = -b;
            i += 1;
        }
        if i == n {
            break;
        }
        v[i] += 1;
    }
    Ok((free, BigInt::from(reps.len())))
}
