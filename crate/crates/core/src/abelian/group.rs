use super::matrix::{Matrix, Scalar};
use super::snf::{column_span_basis, integer_kernel, smith_normal_form, solve_integer};
use super::AbelianError;

/// A finitely generated abelian group `Z^n / R`, stored together with its
/// canonical decomposition `Z^f + Z/d_1 + ... + Z/d_t` (`d_1 | d_2 | ...`,
/// every `d_i >= 2`).
///
/// Canonical coordinates list the free part first, then torsion ascending.
/// Torsion coordinates are always reduced into `[0, d_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgAbelian<T> {
    free_rank: usize,
    torsion: Vec<T>,
    /// Relations in the ambient coordinates (columns).
    presentation: Matrix<T>,
    /// `rank x n`: ambient coordinates to canonical coordinates.
    to_canonical: Matrix<T>,
    /// `n x rank`: a section of `to_canonical`.
    from_canonical: Matrix<T>,
}

impl<T: Scalar> FgAbelian<T> {
    /// Cokernel of `relations`, an `ambient_dim x m` matrix whose columns
    /// span the subgroup being quotiented out.
    pub fn quotient(ambient_dim: usize, relations: &Matrix<T>) -> Self {
        assert_eq!(relations.rows(), ambient_dim, "relation matrix has wrong row count");
        let snf = smith_normal_form(relations);
        let diag = snf.d.diagonal();
        let d_at = |i: usize| diag.get(i).cloned().unwrap_or_else(T::zero);

        let free_idx: Vec<usize> = (0..ambient_dim).filter(|&i| d_at(i).is_zero()).collect();
        let tors_idx: Vec<usize> = (0..ambient_dim)
            .filter(|&i| !d_at(i).is_zero() && !d_at(i).is_one())
            .collect();
        let order: Vec<usize> = free_idx.iter().chain(&tors_idx).copied().collect();

        let mut to_canonical = Matrix::zeros(order.len(), ambient_dim);
        let mut from_canonical = Matrix::zeros(ambient_dim, order.len());
        for (k, &i) in order.iter().enumerate() {
            for j in 0..ambient_dim {
                to_canonical[(k, j)] = snf.u[(i, j)].clone();
                from_canonical[(j, k)] = snf.u_inv[(j, i)].clone();
            }
        }
        // sign convention: the first nonzero entry of each free row is positive
        for k in 0..free_idx.len() {
            let lead = (0..ambient_dim).map(|j| to_canonical[(k, j)].clone()).find(|x| !x.is_zero());
            if lead.is_some_and(|x| x.is_negative()) {
                to_canonical.negate_row(k);
                from_canonical.negate_col(k);
            }
        }
        FgAbelian {
            free_rank: free_idx.len(),
            torsion: tors_idx.iter().map(|&i| d_at(i)).collect(),
            presentation: relations.clone(),
            to_canonical,
            from_canonical,
        }
    }

    /// The group `Z^free + (+) Z/d_i` presented directly in canonical form.
    pub fn canonical(free_rank: usize, torsion: Vec<T>) -> Result<Self, AbelianError> {
        for (i, d) in torsion.iter().enumerate() {
            if *d < T::from_i64_exact(2) {
                return Err(AbelianError::BadInvariantFactors(format!(
                    "torsion[{i}] = {d} is smaller than 2"
                )));
            }
            if i > 0 && !d.is_multiple_of(&torsion[i - 1]) {
                return Err(AbelianError::BadInvariantFactors(format!(
                    "torsion[{}] = {} does not divide torsion[{i}] = {d}",
                    i - 1,
                    torsion[i - 1]
                )));
            }
        }
        let n = free_rank + torsion.len();
        let mut rel = Matrix::zeros(n, torsion.len());
        for (k, d) in torsion.iter().enumerate() {
            rel[(free_rank + k, k)] = d.clone();
        }
        Ok(FgAbelian {
            free_rank,
            torsion,
            presentation: rel,
            to_canonical: Matrix::identity(n),
            from_canonical: Matrix::identity(n),
        })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[T] {
        &self.torsion
    }

    /// Number of canonical coordinates.
    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.to_canonical.cols()
    }

    pub fn presentation(&self) -> &Matrix<T> {
        &self.presentation
    }

    pub fn to_canonical(&self) -> &Matrix<T> {
        &self.to_canonical
    }

    pub fn from_canonical(&self) -> &Matrix<T> {
        &self.from_canonical
    }

    pub fn is_trivial(&self) -> bool {
        self.rank() == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<T> {
        if self.free_rank > 0 {
            None
        } else {
            Some(self.torsion.iter().fold(T::one(), |acc, d| acc * d.clone()))
        }
    }

    /// Reduces canonical coordinates in place.
    pub fn reduce(&self, coords: &mut [T]) {
        for (k, d) in self.torsion.iter().enumerate() {
            let c = &mut coords[self.free_rank + k];
            *c = c.mod_floor(d);
        }
    }

    /// Image of an ambient vector in canonical coordinates.
    pub fn project(&self, v: &[T]) -> Vec<T> {
        let mut c = self.to_canonical.mul_vec(v);
        self.reduce(&mut c);
        c
    }

    /// Some ambient preimage of canonical coordinates.
    pub fn lift(&self, c: &[T]) -> Vec<T> {
        self.from_canonical.mul_vec(c)
    }

    pub fn add(&self, a: &[T], b: &[T]) -> Vec<T> {
        let mut c: Vec<T> = a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect();
        self.reduce(&mut c);
        c
    }

    pub fn neg(&self, a: &[T]) -> Vec<T> {
        let mut c: Vec<T> = a.iter().map(|x| -x.clone()).collect();
        self.reduce(&mut c);
        c
    }

    pub fn zero(&self) -> Vec<T> {
        vec![T::zero(); self.rank()]
    }

    pub fn is_zero_elem(&self, a: &[T]) -> bool {
        let mut c = a.to_vec();
        self.reduce(&mut c);
        c.iter().all(|x| x.is_zero())
    }

    /// Matrix on canonical coordinates induced by an ambient endomorphism
    /// that preserves the relation lattice.
    pub fn induced_endo(&self, ambient_endo: &Matrix<T>) -> Matrix<T> {
        let m = &(&self.to_canonical * ambient_endo) * &self.from_canonical;
        let mut cols: Vec<Vec<T>> = (0..m.cols()).map(|j| m.col(j)).collect();
        for c in &mut cols {
            self.reduce(c);
        }
        Matrix::from_cols(self.rank(), &cols)
    }

    /// Checks that `endo` (on canonical coordinates) sends every torsion
    /// relation to zero.
    pub fn check_endo(&self, endo: &Matrix<T>) -> Result<(), AbelianError> {
        if endo.rows() != self.rank() || endo.cols() != self.rank() {
            return Err(AbelianError::EndoIllDefined(format!(
                "expected a {0}x{0} matrix, got {1}x{2}",
                self.rank(),
                endo.rows(),
                endo.cols()
            )));
        }
        for (k, d) in self.torsion.iter().enumerate() {
            let i = self.free_rank + k;
            let img: Vec<T> = endo.col(i).into_iter().map(|x| x * d.clone()).collect();
            if !self.is_zero_elem(&img) {
                return Err(AbelianError::EndoIllDefined(format!(
                    "image of torsion generator {i} times its order {d} is nonzero"
                )));
            }
        }
        Ok(())
    }
}

/// Coinvariants `Z^n / (1 - endo) Z^n` of a lattice endomorphism.
pub fn coinvariants<T: Scalar>(lattice_rank: usize, endo: &Matrix<T>) -> FgAbelian<T> {
    assert_eq!((endo.rows(), endo.cols()), (lattice_rank, lattice_rank));
    FgAbelian::quotient(lattice_rank, &Matrix::identity(lattice_rank).sub(endo))
}

/// Fixed subgroup `ker(endo - 1)` of `g`, with its inclusion.
///
/// `endo` acts on canonical coordinates of `g`. The returned inclusion
/// matrix maps canonical coordinates of the subgroup to canonical
/// coordinates of `g`.
pub fn fixed_subgroup<T: Scalar>(
    g: &FgAbelian<T>,
    endo: &Matrix<T>,
) -> Result<(FgAbelian<T>, Matrix<T>), AbelianError> {
    g.check_endo(endo)?;
    let k = g.rank();
    let f = g.free_rank();
    let t = g.torsion().len();

    // (endo - 1) c = D y  <=>  [endo - 1 | -D] (c, y) = 0
    let mut dmat = Matrix::zeros(k, t);
    for (j, d) in g.torsion().iter().enumerate() {
        dmat[(f + j, j)] = -d.clone();
    }
    let a = endo.sub(&Matrix::identity(k)).hcat(&dmat);
    let gens: Vec<Vec<T>> = integer_kernel(&a).into_iter().map(|v| v[..k].to_vec()).collect();
    let basis = column_span_basis(k, &gens);
    let l = basis.len();
    if l == 0 {
        return Ok((FgAbelian::quotient(0, &Matrix::zeros(0, 0)), Matrix::zeros(k, 0)));
    }
    let b = Matrix::from_cols(k, &basis);

    let mut rels = Vec::with_capacity(t);
    for (j, d) in g.torsion().iter().enumerate() {
        let mut target = vec![T::zero(); k];
        target[f + j] = d.clone();
        let y = solve_integer(&b, &target).ok_or_else(|| {
            AbelianError::EndoIllDefined("torsion relation outside the fixed lattice".into())
        })?;
        rels.push(y);
    }
    let rel = if rels.is_empty() { Matrix::zeros(l, 0) } else { Matrix::from_cols(l, &rels) };
    let sub = FgAbelian::quotient(l, &rel);
    let incl = &b * sub.from_canonical();
    let mut cols: Vec<Vec<T>> = (0..incl.cols()).map(|j| incl.col(j)).collect();
    for c in &mut cols {
        g.reduce(c);
    }
    let incl = if cols.is_empty() { Matrix::zeros(k, 0) } else { Matrix::from_cols(k, &cols) };
    Ok((sub, incl))
}
