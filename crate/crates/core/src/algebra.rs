//! Structure-constant tables and the four supported algebra kinds.
//!
//! A bilinear product on an `n`-dimensional space is stored as the dense table
//! `c[i][j][k]` with `e_i · e_j = Σ_k c[i][j][k] e_k`.  An [`Algebra`] tags one
//! or two tables with the kind of axioms they are expected to satisfy:
//!
//! * `Associative`: `(xy)z = x(yz)`;
//! * `Dendriform`: two products `≻` (succ) and `≺` (prec) with the three
//!   splitting axioms, whose sum `x*y = x≻y + x≺y` is associative;
//! * `PreLie` (left): `(xy)z − x(yz) = (yx)z − y(xz)`, whose commutator is Lie;
//! * `Lie`: antisymmetric bracket with the Jacobi identity.
//!
//! The module also provides the connecting functors: associative → Lie
//! (commutator), dendriform → associative (sum), dendriform → pre-Lie
//! (`x·y = x≻y − y≺x`), pre-Lie → Lie (commutator).

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::scalar::Scalar;
use num_traits::Zero;

/// Hard cap on basis dimension; keeps the dense O(n⁶) checks tractable.
pub const MAX_DIM: usize = 32;

/// Dense structure-constant table `c[i][j][k]`: `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Table<T> {
    dim: usize,
    // Layout (i*dim + j)*dim + k, so the product vector e_i e_j is contiguous.
    data: Vec<T>,
}

impl<T: Scalar> Table<T> {
    /// Zero product on a `dim`-dimensional space.
    pub fn zeros(dim: usize) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::Dimension(format!(
                "dimension {dim} out of supported range 1..={MAX_DIM}"
            )));
        }
        Ok(Table { dim, data: vec![T::zero(); dim * dim * dim] })
    }

    /// Build from sparse entries `(i, j, k, value)`; duplicate `(i,j,k)` keys are
    /// rejected so input files cannot silently shadow coefficients.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, T)]) -> Result<Self> {
        let mut t = Self::zeros(dim)?;
        for (i, j, k, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Invalid(format!(
                    "entry index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            let idx = (*i * dim + *j) * dim + *k;
            if !t.data[idx].is_zero() {
                return Err(Error::Invalid(format!("duplicate entry at ({i},{j},{k})")));
            }
            t.data[idx] = v.clone();
        }
        Ok(t)
    }

    /// Basis dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Structure constant `c[i][j][k]`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    /// Set `c[i][j][k]`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        self.data[(i * self.dim + j) * self.dim + k] = v;
    }

    /// Coordinates of the product `e_i e_j` as a slice of length `dim`.
    pub fn product_basis(&self, i: usize, j: usize) -> &[T] {
        let start = (i * self.dim + j) * self.dim;
        &self.data[start..start + self.dim]
    }

    /// Product of two coordinate vectors.
    pub fn product(&self, x: &[T], y: &[T]) -> Result<Vec<T>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::Dimension(format!(
                "vectors of length {} and {} in algebra of dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = vec![T::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].clone() * y[j].clone();
                for (k, out_k) in out.iter_mut().enumerate() {
                    *out_k = out_k.clone() + c.clone() * self.get(i, j, k).clone();
                }
            }
        }
        Ok(out)
    }

    /// Matrix of left multiplication by `e_i`: `L(e_i) e_j = e_i e_j`, so
    /// `L_i[k][j] = c[i][j][k]`.
    pub fn left_mult(&self, i: usize) -> Matrix<T> {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m.set(k, j, self.get(i, j, k).clone());
            }
        }
        m
    }

    /// Matrix of right multiplication by `e_i`: `R(e_i) e_j = e_j e_i`, so
    /// `R_i[k][j] = c[j][i][k]`.
    pub fn right_mult(&self, i: usize) -> Matrix<T> {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m.set(k, j, self.get(j, i, k).clone());
            }
        }
        m
    }

    /// Matrix of left multiplication by an arbitrary element `x` (coordinates).
    pub fn left_mult_vec(&self, x: &[T]) -> Result<Matrix<T>> {
        if x.len() != self.dim {
            return Err(Error::Dimension("element length != algebra dimension".into()));
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            m = m.add(&self.left_mult(i).scale(xi))?;
        }
        Ok(m)
    }

    /// Matrix of right multiplication by an arbitrary element `x` (coordinates).
    pub fn right_mult_vec(&self, x: &[T]) -> Result<Matrix<T>> {
        if x.len() != self.dim {
            return Err(Error::Dimension("element length != algebra dimension".into()));
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            m = m.add(&self.right_mult(i).scale(xi))?;
        }
        Ok(m)
    }

    /// Opposite product `e_i ∘ e_j = e_j e_i`.
    pub fn opposite(&self) -> Self {
        let mut t = Self::zeros(self.dim).expect("same dim is valid");
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    t.set(i, j, k, self.get(j, i, k).clone());
                }
            }
        }
        t
    }

    /// Entrywise sum of two products on the same space.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Dimension("summing tables of different dimension".into()));
        }
        Ok(Table {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    /// Commutator table `[x, y] = xy − yx`.
    pub fn commutator(&self) -> Self {
        let mut t = Self::zeros(self.dim).expect("same dim is valid");
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    t.set(i, j, k, self.get(i, j, k).clone() - self.get(j, i, k).clone());
                }
            }
        }
        t
    }

    /// Entrywise negation.
    pub fn neg(&self) -> Self {
        Table { dim: self.dim, data: self.data.iter().map(|v| -v.clone()).collect() }
    }

    /// True iff every structure constant is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Iterate the first failing coefficient of `lhs − rhs` on every basis triple
    /// of a triple-product law, recording failures into the certificate.
    ///
    /// `law(i, j, k)` must return the coordinates of the residual for the basis
    /// instance `(e_i, e_j, e_k)`.
    pub fn check_triple_law<F>(
        &self,
        cert: &mut Certificate,
        equation: &str,
        mut law: F,
    ) -> Result<()>
    where
        F: FnMut(usize, usize, usize) -> Result<Vec<T>>,
    {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let res = law(i, j, k)?;
                    if let Some(v) = res.iter().find(|v| !v.is_zero()) {
                        cert.record(equation, &[i, j, k], v);
                    }
                }
            }
        }
        Ok(())
    }
}

/// Sum/difference of coordinate vectors.
pub fn vec_sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

/// Entrywise sum of coordinate vectors.
pub fn vec_add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

/// Standard basis vector `e_i` of length `n`.
pub fn basis_vec<T: Scalar>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

/// The kind tag of an [`Algebra`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Associative,
    Dendriform,
    PreLie,
    Lie,
}

impl Kind {
    /// Stable lowercase name used in files and CLI output.
    pub fn name(self) -> &'static str {
        match self {
            Kind::Associative => "associative",
            Kind::Dendriform => "dendriform",
            Kind::PreLie => "prelie",
            Kind::Lie => "lie",
        }
    }

    /// Parse from the stable name.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "associative" => Kind::Associative,
            "dendriform" => Kind::Dendriform,
            "prelie" => Kind::PreLie,
            "lie" => Kind::Lie,
            _ => return Err(Error::Invalid(format!("unknown algebra kind `{s}`"))),
        })
    }
}

/// An algebra: one or two structure-constant tables tagged with their kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Algebra<T> {
    /// Associative product.
    Associative(Table<T>),
    /// Dendriform pair: `succ` is `x ≻ y`, `prec` is `x ≺ y`.
    Dendriform { succ: Table<T>, prec: Table<T> },
    /// Left pre-Lie product.
    PreLie(Table<T>),
    /// Lie bracket.
    Lie(Table<T>),
}

impl<T: Scalar> Algebra<T> {
    /// Basis dimension.
    pub fn dim(&self) -> usize {
        match self {
            Algebra::Associative(t) | Algebra::PreLie(t) | Algebra::Lie(t) => t.dim(),
            Algebra::Dendriform { succ, .. } => succ.dim(),
        }
    }

    /// Kind tag.
    pub fn kind(&self) -> Kind {
        match self {
            Algebra::Associative(_) => Kind::Associative,
            Algebra::Dendriform { .. } => Kind::Dendriform,
            Algebra::PreLie(_) => Kind::PreLie,
            Algebra::Lie(_) => Kind::Lie,
        }
    }

    /// The single table of a non-dendriform algebra.
    pub fn table(&self) -> Result<&Table<T>> {
        match self {
            Algebra::Associative(t) | Algebra::PreLie(t) | Algebra::Lie(t) => Ok(t),
            Algebra::Dendriform { .. } => {
                Err(Error::Kind("dendriform algebra has two tables".into()))
            }
        }
    }

    /// Check the defining axioms of the kind; exact, zero tolerance.
    pub fn check_axioms(&self) -> Result<Certificate> {
        match self {
            Algebra::Associative(t) => check_associative(t),
            Algebra::Dendriform { succ, prec } => check_dendriform(succ, prec),
            Algebra::PreLie(t) => check_prelie(t),
            Algebra::Lie(t) => check_lie(t),
        }
    }

    /// The associative algebra canonically attached to this one, when defined:
    /// the identity on associative algebras and the sum product `≻ + ≺` on
    /// dendriform algebras.  Errors on pre-Lie and Lie input, which have no
    /// canonical associative envelope in this framework.
    pub fn associated_associative(&self) -> Result<Table<T>> {
        match self {
            Algebra::Associative(t) => Ok(t.clone()),
            Algebra::Dendriform { succ, prec } => succ.sum(prec),
            _ => Err(Error::Kind(format!(
                "no associated associative product for kind {}",
                self.kind().name()
            ))),
        }
    }
}

/// Associativity check `(e_i e_j) e_k = e_i (e_j e_k)`.
pub fn check_associative<T: Scalar>(t: &Table<T>) -> Result<Certificate> {
    let mut cert = Certificate::new("associativity");
    let n = t.dim();
    t.check_triple_law(&mut cert, "assoc", |i, j, k| {
        let lhs = t.product(t.product_basis(i, j), &basis_vec(n, k))?;
        let rhs = t.product(&basis_vec(n, i), t.product_basis(j, k))?;
        Ok(vec_sub(&lhs, &rhs))
    })?;
    Ok(cert)
}

/// The three dendriform splitting axioms, with `x*y = x≻y + x≺y`:
/// `(x≺y)≺z = x≺(y*z)`, `(x≻y)≺z = x≻(y≺z)`, `x≻(y≻z) = (x*y)≻z`.
pub fn check_dendriform<T: Scalar>(succ: &Table<T>, prec: &Table<T>) -> Result<Certificate> {
    let mut cert = Certificate::new("dendriform");
    if succ.dim() != prec.dim() {
        return Err(Error::Dimension("dendriform tables of different dimension".into()));
    }
    let star = succ.sum(prec)?;
    let n = succ.dim();
    succ.check_triple_law(&mut cert, "dend-1", |i, j, k| {
        let lhs = prec.product(prec.product_basis(i, j), &basis_vec(n, k))?;
        let rhs = prec.product(&basis_vec(n, i), star.product_basis(j, k))?;
        Ok(vec_sub(&lhs, &rhs))
    })?;
    succ.check_triple_law(&mut cert, "dend-2", |i, j, k| {
        let lhs = prec.product(succ.product_basis(i, j), &basis_vec(n, k))?;
        let rhs = succ.product(&basis_vec(n, i), prec.product_basis(j, k))?;
        Ok(vec_sub(&lhs, &rhs))
    })?;
    succ.check_triple_law(&mut cert, "dend-3", |i, j, k| {
        let lhs = succ.product(&basis_vec(n, i), succ.product_basis(j, k))?;
        let rhs = succ.product(star.product_basis(i, j), &basis_vec(n, k))?;
        Ok(vec_sub(&lhs, &rhs))
    })?;
    Ok(cert)
}

/// Left pre-Lie check: the associator `(xy)z − x(yz)` is symmetric in `x, y`.
pub fn check_prelie<T: Scalar>(t: &Table<T>) -> Result<Certificate> {
    let mut cert = Certificate::new("prelie");
    let n = t.dim();
    let assoc = |i: usize, j: usize, k: usize| -> Result<Vec<T>> {
        let lhs = t.product(t.product_basis(i, j), &basis_vec(n, k))?;
        let rhs = t.product(&basis_vec(n, i), t.product_basis(j, k))?;
        Ok(vec_sub(&lhs, &rhs))
    };
    t.clone().check_triple_law(&mut cert, "prelie", |i, j, k| {
        Ok(vec_sub(&assoc(i, j, k)?, &assoc(j, i, k)?))
    })?;
    Ok(cert)
}

/// Lie check: antisymmetry `[x,y] = −[y,x]` (with `[x,x]=0` on the basis) and
/// the Jacobi identity `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0`.
pub fn check_lie<T: Scalar>(t: &Table<T>) -> Result<Certificate> {
    let mut cert = Certificate::new("lie");
    let n = t.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = t.get(i, j, k).clone() + t.get(j, i, k).clone();
                if !v.is_zero() {
                    cert.record("antisym", &[i, j, k], &v);
                }
            }
        }
    }
    t.check_triple_law(&mut cert, "jacobi", |i, j, k| {
        let a = t.product(t.product_basis(i, j), &basis_vec(n, k))?;
        let b = t.product(t.product_basis(j, k), &basis_vec(n, i))?;
        let c = t.product(t.product_basis(k, i), &basis_vec(n, j))?;
        Ok(vec_add(&vec_add(&a, &b), &c))
    })?;
    Ok(cert)
}

/// Commutator functor: associative or pre-Lie table → Lie bracket table.
/// The caller is responsible for the input satisfying its own axioms.
pub fn commutator_lie<T: Scalar>(t: &Table<T>) -> Table<T> {
    t.commutator()
}

/// Dendriform → pre-Lie functor `x·y = x≻y − y≺x`.
pub fn dendriform_to_prelie<T: Scalar>(succ: &Table<T>, prec: &Table<T>) -> Result<Table<T>> {
    if succ.dim() != prec.dim() {
        return Err(Error::Dimension("dendriform tables of different dimension".into()));
    }
    let n = succ.dim();
    let mut out = Table::zeros(n)?;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.set(i, j, k, succ.get(i, j, k).clone() - prec.get(j, i, k).clone());
            }
        }
    }
    Ok(out)
}

/// True iff all products of length three vanish, i.e. `x(yz) = (xy)z = 0` for all
/// basis elements — for a dendriform pair, all eight mixed triple products.
pub fn is_two_step_nilpotent<T: Scalar>(alg: &Algebra<T>) -> Result<bool> {
    let tables: Vec<&Table<T>> = match alg {
        Algebra::Associative(t) | Algebra::PreLie(t) | Algebra::Lie(t) => vec![t],
        Algebra::Dendriform { succ, prec } => vec![succ, prec],
    };
    let n = alg.dim();
    for outer in &tables {
        for inner in &tables {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let l = outer.product(inner.product_basis(i, j), &basis_vec(n, k))?;
                        let r = outer.product(&basis_vec(n, i), inner.product_basis(j, k))?;
                        if l.iter().any(|v| !v.is_zero()) || r.iter().any(|v| !v.is_zero()) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rat};

    /// Two-dimensional associative algebra with e1·e0 = e0 and e1·e1 = e1.
    pub fn sample_assoc() -> Table<Rat> {
        Table::from_entries(2, &[(1, 0, 0, int(1)), (1, 1, 1, int(1))]).unwrap()
    }

    #[test]
    fn associativity_pass_and_fail() {
        let t = sample_assoc();
        assert!(check_associative(&t).unwrap().passed());
        // e0·e0 = e1 is not associative: (e0 e0) e0 = e1 e0 = e0 but e0 (e0 e0) = 0.
        let bad = Table::from_entries(2, &[(0, 0, 1, int(1)), (1, 0, 0, int(1))]).unwrap();
        let cert = check_associative(&bad).unwrap();
        assert!(!cert.passed());
        let w = cert.first_witness.unwrap();
        assert_eq!(w.indices, vec![0, 0, 0]);
    }

    #[test]
    fn mult_operator_matrices() {
        let t = sample_assoc();
        // L(e1) = identity: e1·e0=e0, e1·e1=e1.
        assert_eq!(t.left_mult(1), Matrix::identity(2));
        // R(e1): e0·e1 = 0, e1·e1 = e1, so diag(0, 1).
        let r1 = t.right_mult(1);
        assert_eq!(r1.get(0, 0), &int(0));
        assert_eq!(r1.get(1, 1), &int(1));
        assert_eq!(r1.get(0, 1), &int(0));
        assert_eq!(r1.get(1, 0), &int(0));
        // L(e0) = R(e0) on this algebra except e1·e0 = e0: L(e0) = 0, R(e0)[0][1] = 1.
        assert!(t.left_mult(0).is_zero());
        assert_eq!(t.right_mult(0).get(0, 1), &int(1));
    }

    #[test]
    fn commutator_of_associative_is_lie() {
        let br = commutator_lie(&sample_assoc());
        // [e1, e0] = e1 e0 − e0 e1 = e0.
        assert_eq!(br.get(1, 0, 0), &int(1));
        assert_eq!(br.get(0, 1, 0), &int(-1));
        assert!(check_lie(&br).unwrap().passed());
    }

    #[test]
    fn prelie_axiom_detects_failure() {
        // Dimension-1 idempotent e·e = e is associative hence pre-Lie.
        let good = Table::from_entries(1, &[(0, 0, 0, int(1))]).unwrap();
        assert!(check_prelie(&good).unwrap().passed());
        // e0 e0 = e1, e0 e1 = e0 in dim 2 breaks the pre-Lie identity.
        let bad =
            Table::from_entries(2, &[(0, 0, 1, int(1)), (0, 1, 0, int(1))]).unwrap();
        assert!(!check_prelie(&bad).unwrap().passed());
    }

    #[test]
    fn dendriform_axioms_and_functors() {
        // Dendriform structure on the sample associative algebra:
        // e1≻e0 = e0, e1≻e1 = e1, everything else zero; prec = 0.
        // Axiom 3 needs e1≻(e1≻e0) = (e1*e1)≻e0: both give e0.
        let succ = sample_assoc();
        let prec = Table::zeros(2).unwrap();
        assert!(check_dendriform(&succ, &prec).unwrap().passed());
        let star = Algebra::Dendriform { succ: succ.clone(), prec: prec.clone() }
            .associated_associative()
            .unwrap();
        assert_eq!(star, sample_assoc());
        // Pre-Lie product x·y = x≻y − y≺x = x≻y here; check the axiom holds.
        let p = dendriform_to_prelie(&succ, &prec).unwrap();
        assert_eq!(p, sample_assoc());
        assert!(check_prelie(&p).unwrap().passed());
    }

    #[test]
    fn two_step_nilpotency() {
        // e0 e0 = e1 with all longer products zero.
        let nil = Table::from_entries(2, &[(0, 0, 1, int(1))]).unwrap();
        assert!(is_two_step_nilpotent(&Algebra::Associative(nil)).unwrap());
        assert!(!is_two_step_nilpotent(&Algebra::Associative(sample_assoc())).unwrap());
    }

    #[test]
    fn duplicate_entries_rejected() {
        let r = Table::<Rat>::from_entries(2, &[(0, 0, 0, int(1)), (0, 0, 0, int(2))]);
        assert!(matches!(r, Err(Error::Invalid(_))));
    }
}
