//! The four quadratic tensor equations (one per algebra kind), coboundary
//! comultiplication builders and their exact solvability conditions,
//! O-operators with their induced structures and lifting theorems, canonical
//! solutions on semidirect doubles, the two canonical double bialgebras, and
//! the isomorphism witnesses between r-induced doubles and semidirect doubles.
//!
//! Tensor-slot convention (version recorded in certificates): for
//! `r = Σ xᵢ⊗yᵢ` and `s = Σ uⱼ⊗vⱼ` and a binary product `⋄`, the placed
//! product `r_{ab} ⋄ s_{cd}` puts `r`'s components into slots `a,b` and `s`'s
//! into slots `c,d` of a rank-3 tensor; the two placements share exactly one
//! slot, the product of the two shared-slot components lands there with the
//! first-named tensor's component as the left factor, and the free components
//! stay in their own slots.  A subscript pair in reversed order places the
//! swapped tensor.

use crate::actions::{dual_bimodule, semidirect, ActionFamily, Rep};
use crate::algebra::{basis_vec, commutator_lie, Algebra, Kind, Table};
use crate::bialgebra::{check_bialgebra, check_bialgebra_hom, Bialgebra, Comult};
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Tensor2, Tensor3};
use crate::forms::{natural_form, NaturalForm};
use crate::matched::bicross_product;
use crate::scalar::Scalar;

/// Which of the four quadratic tensor equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquationKind {
    /// Three-term equation on an associative algebra.
    Aybe,
    /// Three-term equation on a dendriform algebra.
    Deq,
    /// Three-bracket equation on a Lie algebra.
    Cybe,
    /// Three-term equation on a pre-Lie algebra.
    Seq,
}

impl EquationKind {
    /// Stable lowercase name.
    pub fn name(self) -> &'static str {
        match self {
            EquationKind::Aybe => "aybe",
            EquationKind::Deq => "d-equation",
            EquationKind::Cybe => "cybe",
            EquationKind::Seq => "s-equation",
        }
    }

    /// Parse a stable name.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "aybe" => EquationKind::Aybe,
            "d-equation" | "deq" => EquationKind::Deq,
            "cybe" => EquationKind::Cybe,
            "s-equation" | "seq" => EquationKind::Seq,
        _ => return Err(Error::Invalid(format!("unknown equation kind: {s}"))),
        })
    }

    /// The algebra kind the equation lives on.
    pub fn algebra_kind(self) -> Kind {
        match self {
            EquationKind::Aybe => Kind::Associative,
            EquationKind::Deq => Kind::Dendriform,
            EquationKind::Cybe => Kind::Lie,
            EquationKind::Seq => Kind::PreLie,
        }
    }
}

/// An operator datum: a linear map `map: V → A` from the carrier of a module
/// to the algebra, stored as a `dim(A) × dim(V)` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct OOperatorData<T> {
    pub algebra: Algebra<T>,
    pub module: ActionFamily<T>,
    pub map: Matrix<T>,
}

impl<T: Scalar> OOperatorData<T> {
    pub fn new(algebra: Algebra<T>, module: ActionFamily<T>, map: Matrix<T>) -> Result<Self> {
        if module.alg_dim() != algebra.dim() {
            return Err(Error::Dimension("module algebra dimension != algebra".into()));
        }
        if map.rows() != algebra.dim() || map.cols() != module.car_dim() {
            return Err(Error::Dimension("operator map must be dim(A) x dim(V)".into()));
        }
        Ok(OOperatorData { algebra, module, map })
    }
}

fn check_square<T: Scalar>(r: &Tensor2<T>, n: usize) -> Result<()> {
    if r.left_dim() != n || r.right_dim() != n {
        return Err(Error::Dimension("tensor dimension != algebra dimension".into()));
    }
    Ok(())
}

/// Product of two placed 2-tensors inside a rank-3 tensor, per the module's
/// slot convention.  The slot pairs must each consist of two distinct slots in
/// `{0,1,2}` and share exactly one slot.
pub fn slot_product<T: Scalar>(
    table: &Table<T>,
    r: &Tensor2<T>,
    rslots: (usize, usize),
    s: &Tensor2<T>,
    sslots: (usize, usize),
) -> Result<Tensor3<T>> {
    let n = table.dim();
    check_square(r, n)?;
    check_square(s, n)?;
    let (r0, r1) = rslots;
    let (s0, s1) = sslots;
    if r0 > 2 || r1 > 2 || s0 > 2 || s1 > 2 || r0 == r1 || s0 == s1 {
        return Err(Error::Invalid("slot pairs must be distinct slots in 0..3".into()));
    }
    let shared = if r0 == s0 || r0 == s1 {
        r0
    } else if r1 == s0 || r1 == s1 {
        r1
    } else {
        return Err(Error::Invalid("slot pairs must share a slot".into()));
    };
    let r_free = if r0 == shared { r1 } else { r0 };
    let s_free = if s0 == shared { s1 } else { s0 };
    if r_free == s_free {
        return Err(Error::Invalid("slot pairs must share exactly one slot".into()));
    }
    let mut out = Tensor3::zeros(n);
    for a in 0..n {
        for b in 0..n {
            let cr = r.get(a, b);
            if cr.is_zero() {
                continue;
            }
            // r's component in the shared slot is the left factor.
            let (r_sh, r_fr) = if r0 == shared { (a, b) } else { (b, a) };
            for c in 0..n {
                for d in 0..n {
                    let cs = s.get(c, d);
                    if cs.is_zero() {
                        continue;
                    }
                    let (s_sh, s_fr) = if s0 == shared { (c, d) } else { (d, c) };
                    let prod = table.product_basis(r_sh, s_sh);
                    for (k, pk) in prod.iter().enumerate() {
                        if pk.is_zero() {
                            continue;
                        }
                        let mut idx = [0usize; 3];
                        idx[shared] = k;
                        idx[r_free] = r_fr;
                        idx[s_free] = s_fr;
                        out.add_at(
                            idx[0],
                            idx[1],
                            idx[2],
                            cr.clone() * cs.clone() * pk.clone(),
                        );
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The rank-3 residual of the equation of the given kind: zero iff `r` solves
/// the equation in `a`.
pub fn residual<T: Scalar>(
    kind: EquationKind,
    a: &Algebra<T>,
    r: &Tensor2<T>,
) -> Result<Tensor3<T>> {
    if a.kind() != kind.algebra_kind() {
        return Err(Error::Kind(format!(
            "{} requires a {} algebra",
            kind.name(),
            kind.algebra_kind().name()
        )));
    }
    match (kind, a) {
        (EquationKind::Aybe, Algebra::Associative(t)) => {
            // r12 r13 + r13 r23 − r23 r12
            slot_product(t, r, (0, 1), r, (0, 2))?
                .add(&slot_product(t, r, (0, 2), r, (1, 2))?)?
                .sub(&slot_product(t, r, (1, 2), r, (0, 1))?)
        }
        (EquationKind::Deq, Algebra::Dendriform { succ, prec }) => {
            // r12 * r13 − r13 ≺ r23 − r23 ≻ r12
            let star = succ.sum(prec)?;
            slot_product(&star, r, (0, 1), r, (0, 2))?
                .sub(&slot_product(prec, r, (0, 2), r, (1, 2))?)?
                .sub(&slot_product(succ, r, (1, 2), r, (0, 1))?)
        }
        (EquationKind::Cybe, Algebra::Lie(t)) => {
            // [r12,r13] + [r12,r23] + [r13,r23]
            slot_product(t, r, (0, 1), r, (0, 2))?
                .add(&slot_product(t, r, (0, 1), r, (1, 2))?)?
                .add(&slot_product(t, r, (0, 2), r, (1, 2))?)
        }
        (EquationKind::Seq, Algebra::PreLie(t)) => {
            // −r12·r13 + r12·r23 + [r13,r23]
            let bracket = commutator_lie(t);
            slot_product(t, r, (0, 1), r, (1, 2))?
                .sub(&slot_product(t, r, (0, 1), r, (0, 2))?)?
                .add(&slot_product(&bracket, r, (0, 2), r, (1, 2))?)
        }
        _ => unreachable!("kind gate above"),
    }
}

/// The five-term residual whose vanishing enters the pre-Lie coboundary
/// solvability condition: `r13·r12 − r23·r21 + [r23,r12] − [r13,r21] −
/// [r13,r23]` with `·` the pre-Lie product and `[,]` its commutator.
pub fn prelie_double_bracket<T: Scalar>(t: &Table<T>, r: &Tensor2<T>) -> Result<Tensor3<T>> {
    let bracket = commutator_lie(t);
    slot_product(t, r, (0, 2), r, (0, 1))?
        .sub(&slot_product(t, r, (1, 2), r, (1, 0))?)?
        .add(&slot_product(&bracket, r, (1, 2), r, (0, 1))?)?
        .sub(&slot_product(&bracket, r, (0, 2), r, (1, 0))?)?
        .sub(&slot_product(&bracket, r, (0, 2), r, (1, 2))?)
}

/// The coboundary comultiplication of a single tensor `r`:
///
/// * associative: `Δ(x) = (id⊗L(x) − R(x)⊗id) r`;
/// * Lie: `δ(x) = (ad(x)⊗id + id⊗ad(x)) r`;
/// * pre-Lie: `Δ(x) = (L(x)⊗id + id⊗ad(x)) r`.
///
/// Dendriform algebras take a pair of tensors; use
/// [`coboundary_delta_pair`].
pub fn coboundary_delta<T: Scalar>(a: &Algebra<T>, r: &Tensor2<T>) -> Result<Comult<T>> {
    let n = a.dim();
    check_square(r, n)?;
    let mut images = Vec::with_capacity(n);
    match a {
        Algebra::Associative(t) => {
            for i in 0..n {
                images.push(
                    r.apply_right(&t.left_mult(i))?
                        .sub(&r.apply_left(&t.right_mult(i))?)?,
                );
            }
        }
        Algebra::Lie(t) => {
            for i in 0..n {
                let ad = t.left_mult(i);
                images.push(r.apply_left(&ad)?.add(&r.apply_right(&ad)?)?);
            }
        }
        Algebra::PreLie(t) => {
            let bracket = commutator_lie(t);
            for i in 0..n {
                images.push(
                    r.apply_left(&t.left_mult(i))?
                        .add(&r.apply_right(&bracket.left_mult(i))?)?,
                );
            }
        }
        Algebra::Dendriform { .. } => {
            return Err(Error::Kind(
                "dendriform coboundary takes a pair of tensors".into(),
            ))
        }
    }
    Comult::new(images)
}

/// The coboundary comultiplication pair of a dendriform algebra:
/// `Δ≻(x) = (id⊗L(x) − R≺(x)⊗id) r≻` and `Δ≺(x) = (id⊗L≻(x) − R(x)⊗id) r≺`,
/// with `L`, `R` the multiplications of the sum product.
pub fn coboundary_delta_pair<T: Scalar>(
    a: &Algebra<T>,
    r_succ: &Tensor2<T>,
    r_prec: &Tensor2<T>,
) -> Result<(Comult<T>, Comult<T>)> {
    let (succ, prec) = match a {
        Algebra::Dendriform { succ, prec } => (succ, prec),
        _ => return Err(Error::Kind("pair coboundary requires a dendriform algebra".into())),
    };
    let n = a.dim();
    check_square(r_succ, n)?;
    check_square(r_prec, n)?;
    let star = succ.sum(prec)?;
    let mut isucc = Vec::with_capacity(n);
    let mut iprec = Vec::with_capacity(n);
    for i in 0..n {
        isucc.push(
            r_succ
                .apply_right(&star.left_mult(i))?
                .sub(&r_succ.apply_left(&prec.right_mult(i))?)?,
        );
        iprec.push(
            r_prec
                .apply_right(&succ.left_mult(i))?
                .sub(&r_prec.apply_left(&star.right_mult(i))?)?,
        );
    }
    Ok((Comult::new(isucc)?, Comult::new(iprec)?))
}

/// The bialgebra induced by a coboundary tensor (single-tensor kinds).  For
/// the dendriform kind see [`coboundary_bialgebra_pair`].
pub fn coboundary_bialgebra<T: Scalar>(a: &Algebra<T>, r: &Tensor2<T>) -> Result<Bialgebra<T>> {
    let delta = coboundary_delta(a, r)?;
    Ok(match a {
        Algebra::Associative(t) => Bialgebra::Aib { base: t.clone(), delta },
        Algebra::Lie(t) => Bialgebra::LieBi { bracket: t.clone(), delta },
        Algebra::PreLie(t) => Bialgebra::PreLieBi { base: t.clone(), delta },
        Algebra::Dendriform { .. } => unreachable!("rejected by coboundary_delta"),
    })
}

/// The dendriform bialgebra induced by a coboundary tensor pair.
pub fn coboundary_bialgebra_pair<T: Scalar>(
    a: &Algebra<T>,
    r_succ: &Tensor2<T>,
    r_prec: &Tensor2<T>,
) -> Result<Bialgebra<T>> {
    let (delta_succ, delta_prec) = coboundary_delta_pair(a, r_succ, r_prec)?;
    match a {
        Algebra::Dendriform { succ, prec } => Ok(Bialgebra::Ddb {
            succ: succ.clone(),
            prec: prec.clone(),
            delta_succ,
            delta_prec,
        }),
        _ => unreachable!("rejected by coboundary_delta_pair"),
    }
}

fn record_t2<T: Scalar>(cert: &mut Certificate, eq: &str, idx: &[usize], t: &Tensor2<T>) {
    if let Some((_, _, v)) = t.first_nonzero() {
        cert.record(eq, idx, v);
    }
}

fn record_t3<T: Scalar>(cert: &mut Certificate, eq: &str, idx: &[usize], t: &Tensor3<T>) {
    if let Some((_, _, _, v)) = t.first_nonzero() {
        cert.record(eq, idx, v);
    }
}

/// Outer product of a vector (placed in one slot) with a 2-tensor (placed in
/// the remaining two slots in increasing order), accumulated into `out`.
fn add_vec_tensor<T: Scalar>(
    out: &mut Tensor3<T>,
    vec_slot: usize,
    w: &[T],
    grid: &Tensor2<T>,
    scale: &T,
    negate: bool,
) {
    let n = w.len();
    let free: Vec<usize> = (0..3).filter(|s| *s != vec_slot).collect();
    for (k, wk) in w.iter().enumerate() {
        if wk.is_zero() {
            continue;
        }
        for u in 0..n {
            for v in 0..n {
                let g = grid.get(u, v);
                if g.is_zero() {
                    continue;
                }
                let mut val = scale.clone() * wk.clone() * g.clone();
                if negate {
                    val = -val;
                }
                let mut idx = [0usize; 3];
                idx[vec_slot] = k;
                idx[free[0]] = u;
                idx[free[1]] = v;
                out.add_at(idx[0], idx[1], idx[2], val);
            }
        }
    }
}

/// Checks the exact conditions under which the coboundary comultiplication of
/// `r` makes the dual space an algebra of the dual kind and the pair a
/// bialgebra.  For a dendriform algebra this is the special family
/// `r_≺ = r`, `r_≻ = −σ(r)`; the general two-tensor family is
/// [`check_coboundary_conditions_pair`].  If the conditions pass, the induced
/// bialgebra is re-checked directly and any disagreement is recorded under
/// `crosscheck`.
pub fn check_coboundary_conditions<T: Scalar>(
    a: &Algebra<T>,
    r: &Tensor2<T>,
) -> Result<Certificate> {
    let n = a.dim();
    check_square(r, n)?;
    let mut cert = Certificate::new("coboundary");
    match a {
        Algebra::Associative(t) => {
            // (id⊗id⊗L(x) − R(x)⊗id⊗id)(three-term residual) = 0
            let res = residual(EquationKind::Aybe, a, r)?;
            for i in 0..n {
                let q = res
                    .apply_slot(&t.left_mult(i), 2)?
                    .sub(&res.apply_slot(&t.right_mult(i), 0)?)?;
                record_t3(&mut cert, "cond-1", &[i], &q);
            }
            // [L(x)⊗id − id⊗R(x)][id⊗L(y) − R(y)⊗id](r + σ(r)) = 0
            let s = r.add(&r.swap())?;
            for i in 0..n {
                for j in 0..n {
                    let inner = s
                        .apply_right(&t.left_mult(j))?
                        .sub(&s.apply_left(&t.right_mult(j))?)?;
                    let outer = inner
                        .apply_left(&t.left_mult(i))?
                        .sub(&inner.apply_right(&t.right_mult(i))?)?;
                    record_t2(&mut cert, "cond-2", &[i, j], &outer);
                }
            }
        }
        Algebra::Lie(t) => {
            // (ad(x)⊗id + id⊗ad(x))(r + σ(r)) = 0
            let s = r.add(&r.swap())?;
            for i in 0..n {
                let ad = t.left_mult(i);
                record_t2(
                    &mut cert,
                    "cond-1",
                    &[i],
                    &s.apply_left(&ad)?.add(&s.apply_right(&ad)?)?,
                );
            }
            // three-slot adjoint action kills the bracket residual
            let res = residual(EquationKind::Cybe, a, r)?;
            for i in 0..n {
                let ad = t.left_mult(i);
                let q = res
                    .apply_slot(&ad, 0)?
                    .add(&res.apply_slot(&ad, 1)?)?
                    .add(&res.apply_slot(&ad, 2)?)?;
                record_t3(&mut cert, "cond-2", &[i], &q);
            }
        }
        Algebra::PreLie(t) => {
            // [P(x·y) − P(x)P(y)](r − σ(r)) = 0 with P(x) = L(x)⊗id + id⊗L(x)
            let s = r.sub(&r.swap())?;
            let p_vec = |z: &[T], t2: &Tensor2<T>| -> Result<Tensor2<T>> {
                let l = t.left_mult_vec(z)?;
                t2.apply_left(&l)?.add(&t2.apply_right(&l)?)
            };
            for i in 0..n {
                for j in 0..n {
                    let lhs = p_vec(t.product_basis(i, j), &s)?;
                    let inner = p_vec(&basis_vec(n, j), &s)?;
                    let rhs = p_vec(&basis_vec(n, i), &inner)?;
                    record_t2(&mut cert, "cond-1", &[i, j], &lhs.sub(&rhs)?);
                }
            }
            // (L(x)⊗id⊗id + id⊗L(x)⊗id + id⊗id⊗ad(x))(five-term residual) = 0
            let res = prelie_double_bracket(t, r)?;
            let bracket = commutator_lie(t);
            for i in 0..n {
                let l = t.left_mult(i);
                let q = res
                    .apply_slot(&l, 0)?
                    .add(&res.apply_slot(&l, 1)?)?
                    .add(&res.apply_slot(&bracket.left_mult(i), 2)?)?;
                record_t3(&mut cert, "cond-2", &[i], &q);
            }
        }
        Algebra::Dendriform { succ, prec } => {
            cert = check_dendriform_special(succ, prec, r)?;
        }
    }
    if cert.passed() {
        let induced = match a {
            Algebra::Dendriform { .. } => {
                coboundary_bialgebra_pair(a, &r.swap().neg(), r)?
            }
            _ => coboundary_bialgebra(a, r)?,
        };
        if !check_bialgebra(&induced)?.passed() {
            cert.record("crosscheck", &[], &"induced bialgebra fails its axioms");
        }
    }
    Ok(cert)
}

/// The five conditions of the special dendriform family `r_≺ = r`,
/// `r_≻ = −σ(r)`, with `P(x) = id⊗L≻(x) − R≺(x)⊗id`.  The bracketing of the
/// two summed correction terms follows the module's slot convention, so these
/// certificates are marked convention-sensitive.
fn check_dendriform_special<T: Scalar>(
    succ: &Table<T>,
    prec: &Table<T>,
    r: &Tensor2<T>,
) -> Result<Certificate> {
    let n = succ.dim();
    let mut cert = Certificate::new("coboundary");
    let star = succ.sum(prec)?;
    let anti = r.sub(&r.swap())?;
    let p_op = |z: &[T], t2: &Tensor2<T>| -> Result<Tensor2<T>> {
        let ls = succ.left_mult_vec(z)?;
        let rp = prec.right_mult_vec(z)?;
        t2.apply_right(&ls)?.sub(&t2.apply_left(&rp)?)
    };
    // cond-1: [P(x≻y) − (id⊗L≻(x))P(y)](r − σ(r)) = 0
    for i in 0..n {
        for j in 0..n {
            let lhs = p_op(succ.product_basis(i, j), &anti)?;
            let rhs = p_op(&basis_vec(n, j), &anti)?.apply_right(&succ.left_mult(i))?;
            record_t2(&mut cert, "cond-1", &[i, j], &lhs.sub(&rhs)?);
        }
    }
    // cond-2: σ(P(x)) P(y) (r − σ(r)) = 0
    for i in 0..n {
        for j in 0..n {
            let inner = p_op(&basis_vec(n, j), &anti)?;
            let outer = p_op(&basis_vec(n, i), &inner)?.swap();
            record_t2(&mut cert, "cond-2", &[i, j], &outer);
        }
    }
    // cond-3: (R(x)⊗id⊗id − id⊗id⊗L≻(x))(r12*r13 − r13≺r32 − r23≻r12)
    //         + Σᵢ (aᵢ*x)⊗P(bᵢ)(r−σr) − aᵢ⊗[P(x≻bᵢ)(r−σr)] = 0
    let core3 = slot_product(&star, r, (0, 1), r, (0, 2))?
        .sub(&slot_product(prec, r, (0, 2), r, (2, 1))?)?
        .sub(&slot_product(succ, r, (1, 2), r, (0, 1))?)?;
    for x in 0..n {
        let mut q = core3
            .apply_slot(&star.right_mult(x), 0)?
            .sub(&core3.apply_slot(&succ.left_mult(x), 2)?)?;
        for a in 0..n {
            for b in 0..n {
                let c = r.get(a, b);
                if c.is_zero() {
                    continue;
                }
                let w = star.product_basis(a, x);
                let g1 = p_op(&basis_vec(n, b), &anti)?;
                add_vec_tensor(&mut q, 0, w, &g1, c, false);
                let g2 = p_op(succ.product_basis(x, b), &anti)?;
                add_vec_tensor(&mut q, 0, &basis_vec(n, a), &g2, c, true);
            }
        }
        record_t3(&mut cert, "cond-3", &[x], &q);
    }
    // cond-4: (R≺(x)⊗id⊗id − id⊗id⊗L≺(x))(−r23*r21 + r21≺r13 + r31≻r23) = 0
    let core4 = slot_product(prec, r, (1, 0), r, (0, 2))?
        .add(&slot_product(succ, r, (2, 0), r, (1, 2))?)?
        .sub(&slot_product(&star, r, (1, 2), r, (1, 0))?)?;
    for x in 0..n {
        let q = core4
            .apply_slot(&prec.right_mult(x), 0)?
            .sub(&core4.apply_slot(&prec.left_mult(x), 2)?)?;
        record_t3(&mut cert, "cond-4", &[x], &q);
    }
    // cond-5: (R≺(x)⊗id⊗id − id⊗id⊗L(x))(−r31*r32 + r32≺r21 + r12≻r31)
    //         + Σᵢ [P(bᵢ)(r−σr)⊗(x*aᵢ) − P(bᵢ≺x)(r−σr)⊗aᵢ] = 0
    let core5 = slot_product(prec, r, (2, 1), r, (1, 0))?
        .add(&slot_product(succ, r, (0, 1), r, (2, 0))?)?
        .sub(&slot_product(&star, r, (2, 0), r, (2, 1))?)?;
    for x in 0..n {
        let mut q = core5
            .apply_slot(&prec.right_mult(x), 0)?
            .sub(&core5.apply_slot(&star.left_mult(x), 2)?)?;
        for a in 0..n {
            for b in 0..n {
                let c = r.get(a, b);
                if c.is_zero() {
                    continue;
                }
                let w = star.product_basis(x, a);
                let g1 = p_op(&basis_vec(n, b), &anti)?;
                add_vec_tensor(&mut q, 2, w, &g1, c, false);
                let g2 = p_op(prec.product_basis(b, x), &anti)?;
                add_vec_tensor(&mut q, 2, &basis_vec(n, a), &g2, c, true);
            }
        }
        record_t3(&mut cert, "cond-5", &[x], &q);
    }
    Ok(cert.with_convention(true))
}

/// The six conditions of the general two-tensor dendriform coboundary family.
/// Convention-sensitive: a different reading of the placed products changes
/// these on general inputs.
pub fn check_coboundary_conditions_pair<T: Scalar>(
    a: &Algebra<T>,
    r_succ: &Tensor2<T>,
    r_prec: &Tensor2<T>,
) -> Result<Certificate> {
    let (succ, prec) = match a {
        Algebra::Dendriform { succ, prec } => (succ, prec),
        _ => return Err(Error::Kind("pair conditions require a dendriform algebra".into())),
    };
    let n = a.dim();
    check_square(r_succ, n)?;
    check_square(r_prec, n)?;
    let mut cert = Certificate::new("coboundary");
    let star = succ.sum(prec)?;
    let rs = r_succ;
    let rp = r_prec;
    let sum_sp = rs.add(rp)?;
    // cond-1: (L(x)⊗id − id⊗R≺(x))(id⊗L≻(y) − R(y)⊗id)(r≺ + σ(r≻)) = 0
    let t1 = rp.add(&rs.swap())?;
    for i in 0..n {
        for j in 0..n {
            let inner = t1
                .apply_right(&succ.left_mult(j))?
                .sub(&t1.apply_left(&star.right_mult(j))?)?;
            let outer = inner
                .apply_left(&star.left_mult(i))?
                .sub(&inner.apply_right(&prec.right_mult(i))?)?;
            record_t2(&mut cert, "cond-1", &[i, j], &outer);
        }
    }
    // cond-2: [R≺(x)⊗L≻(y) − id⊗L≻(y≺x) − R≺(y≻x)⊗id](r≻ + r≺) = 0
    for i in 0..n {
        for j in 0..n {
            let q = sum_sp
                .apply_left(&prec.right_mult(i))?
                .apply_right(&succ.left_mult(j))?
                .sub(&sum_sp.apply_right(&succ.left_mult_vec(prec.product_basis(j, i))?)?)?
                .sub(&sum_sp.apply_left(&prec.right_mult_vec(succ.product_basis(j, i))?)?)?;
            record_t2(&mut cert, "cond-2", &[i, j], &q);
        }
    }
    // cond-3: [L≻(x)⊗id − id⊗R≺(x)]{[−id⊗L≻(y) + R≺(y)⊗id](r≺+r≻)
    //         + R≻(y)⊗id (r≺+σ(r≻)) − id⊗L≺(y)(σ(r≺)+r≻)} = 0
    let t2 = rp.swap().add(rs)?;
    for i in 0..n {
        for j in 0..n {
            let inner = sum_sp
                .apply_left(&prec.right_mult(j))?
                .sub(&sum_sp.apply_right(&succ.left_mult(j))?)?
                .add(&t1.apply_left(&succ.right_mult(j))?)?
                .sub(&t2.apply_right(&prec.left_mult(j))?)?;
            let outer = inner
                .apply_left(&succ.left_mult(i))?
                .sub(&inner.apply_right(&prec.right_mult(i))?)?;
            record_t2(&mut cert, "cond-3", &[i, j], &outer);
        }
    }
    // cond-4: (R(x)⊗id⊗id)[(r≺12*r≺13 + r≺13≺r≻23 − r≺23≻r≺12)
    //         + r≺13≻(r≺23+r≻23) − (r≺23+r≻23)≺r≺12]
    //         + (r≺23+r≻23)≺[(id⊗L≺(x)⊗id)r≺12]
    //         + (id⊗id⊗L≻(x))(−r≺12*r≺13 − r≺13≺r≻23 + r≺23≻r≺12)
    //         − [(id⊗id⊗L≻(x))r≺13]≻(r≻23+r≺23) = 0
    let core_a = slot_product(&star, rp, (0, 1), rp, (0, 2))?
        .add(&slot_product(prec, rp, (0, 2), rs, (1, 2))?)?
        .sub(&slot_product(succ, rp, (1, 2), rp, (0, 1))?)?;
    let extra_a = slot_product(succ, rp, (0, 2), &sum_sp, (1, 2))?
        .sub(&slot_product(prec, &sum_sp, (1, 2), rp, (0, 1))?)?;
    for x in 0..n {
        let q = core_a
            .add(&extra_a)?
            .apply_slot(&star.right_mult(x), 0)?
            .add(&slot_product(
                prec,
                &sum_sp,
                (1, 2),
                &rp.apply_right(&prec.left_mult(x))?,
                (0, 1),
            )?)?
            .sub(&core_a.apply_slot(&succ.left_mult(x), 2)?)?
            .sub(&slot_product(
                succ,
                &rp.apply_right(&succ.left_mult(x))?,
                (0, 2),
                &sum_sp,
                (1, 2),
            )?)?;
        record_t3(&mut cert, "cond-4", &[x], &q);
    }
    // cond-5: (R≺(x)⊗id⊗id − id⊗id⊗L≻(x))(r≺23*r≻12 − r≻12≺r≺13 − r≻13≻r≺23) = 0
    let core_b = slot_product(&star, rp, (1, 2), rs, (0, 1))?
        .sub(&slot_product(prec, rs, (0, 1), rp, (0, 2))?)?
        .sub(&slot_product(succ, rs, (0, 2), rp, (1, 2))?)?;
    for x in 0..n {
        let q = core_b
            .apply_slot(&prec.right_mult(x), 0)?
            .sub(&core_b.apply_slot(&succ.left_mult(x), 2)?)?;
        record_t3(&mut cert, "cond-5", &[x], &q);
    }
    // cond-6: (R≺(x)⊗id⊗id)(−r≻13*r≻23 + r≻23≺r≻12 − r≺12≻r≻13)
    //         − (r≻12+r≺12)≺[(R≺(x)⊗id⊗id)r≻13]
    //         + [(id⊗R≺(x)⊗id)r≻23]≻(r≻12+r≺12)
    //         + (id⊗id⊗L(x))[r≻13*r≻23 − r≻23≺r≻12 + r≺12≻r≻13
    //             + (r≻12+r≺12)≺r≻13 − r≻23≻(r≻12+r≺12)] = 0
    let core_c = slot_product(prec, rs, (1, 2), rs, (0, 1))?
        .sub(&slot_product(&star, rs, (0, 2), rs, (1, 2))?)?
        .sub(&slot_product(succ, rp, (0, 1), rs, (0, 2))?)?;
    let core_d = core_c
        .neg()
        .add(&slot_product(prec, &sum_sp, (0, 1), rs, (0, 2))?)?
        .sub(&slot_product(succ, rs, (1, 2), &sum_sp, (0, 1))?)?;
    for x in 0..n {
        let rpx = prec.right_mult(x);
        let q = core_c
            .apply_slot(&rpx, 0)?
            .sub(&slot_product(prec, &sum_sp, (0, 1), &rs.apply_left(&rpx)?, (0, 2))?)?
            .add(&slot_product(succ, &rs.apply_left(&rpx)?, (1, 2), &sum_sp, (0, 1))?)?
            .add(&core_d.apply_slot(&star.left_mult(x), 2)?)?;
        record_t3(&mut cert, "cond-6", &[x], &q);
    }
    let mut cert = cert.with_convention(true);
    if cert.passed() {
        let induced = coboundary_bialgebra_pair(a, rs, rp)?;
        if !check_bialgebra(&induced)?.passed() {
            cert.record("crosscheck", &[], &"induced bialgebra fails its axioms");
        }
    }
    Ok(cert)
}

/// Check the operator identity `T(u)T(v) = T(l(T(u))v + r(T(v))u)` on all
/// carrier basis pairs (bracket version `[T(u),T(v)] = T(ρ(T(u))v − ρ(T(v))u)`
/// for Lie modules).  The module must itself pass its bimodule or
/// representation check.
pub fn is_o_operator<T: Scalar>(data: &OOperatorData<T>) -> Result<Certificate> {
    let pre = crate::actions::check_bimodule(&data.algebra, &data.module)?;
    if !pre.passed() {
        return Err(Error::Precondition("module fails its bimodule check".into()));
    }
    let mut cert = Certificate::new("o-operator");
    let m = data.module.car_dim();
    let tcol = |i: usize| -> Vec<T> {
        (0..data.map.rows()).map(|r| data.map.get(r, i).clone()).collect()
    };
    for u in 0..m {
        for v in 0..m {
            let tu = tcol(u);
            let tv = tcol(v);
            let (lhs, arg) = match &data.module {
                ActionFamily::Associative { l, r } => {
                    let lhs = data.algebra.table()?.product(&tu, &tv)?;
                    // unreachable for associative: table() fails only for dendriform
                    let arg = crate::algebra::vec_add(
                        &l.eval(&tu)?.mul_vec(&basis_vec(m, v))?,
                        &r.eval(&tv)?.mul_vec(&basis_vec(m, u))?,
                    );
                    (lhs, arg)
                }
                ActionFamily::Lie { rho } => {
                    let lhs = data.algebra.table()?.product(&tu, &tv)?;
                    let arg = crate::algebra::vec_sub(
                        &rho.eval(&tu)?.mul_vec(&basis_vec(m, v))?,
                        &rho.eval(&tv)?.mul_vec(&basis_vec(m, u))?,
                    );
                    (lhs, arg)
                }
                _ => {
                    return Err(Error::Kind(
                        "operator identity defined for associative and Lie modules".into(),
                    ))
                }
            };
            let rhs = data.map.mul_vec(&arg)?;
            if let Some(d) = lhs
                .iter()
                .zip(&rhs)
                .map(|(a, b)| a.clone() - b.clone())
                .find(|d| !d.is_zero())
            {
                cert.record("o-op", &[u, v], &d);
            }
        }
    }
    Ok(cert)
}

/// Structures induced on the carrier and on the image by an operator datum.
#[derive(Debug, Clone)]
pub struct OInduced<T> {
    /// The induced algebra on the carrier `V`.
    pub on_carrier: Algebra<T>,
    /// The induced algebra on the image `map(V)`, in the pivot-column basis.
    pub on_image: Algebra<T>,
    /// The pivot columns of the map: `dim(A) × p` basis matrix of the image.
    pub image_basis: Matrix<T>,
    /// The map expressed in image coordinates: `p × dim(V)`.
    pub image_coords: Matrix<T>,
}

/// Pivot-column indices of a matrix by exact row reduction.
fn pivot_columns<T: Scalar>(m: &Matrix<T>) -> Vec<usize> {
    let mut work = m.clone();
    let (rows, cols) = (work.rows(), work.cols());
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|i| !work.get(*i, col).is_zero()) else {
            continue;
        };
        for j in 0..cols {
            let a = work.get(row, j).clone();
            let b = work.get(p, j).clone();
            work.set(row, j, b);
            work.set(p, j, a);
        }
        pivots.push(col);
        let inv = T::one() / work.get(row, col).clone();
        for j in 0..cols {
            let v = work.get(row, j).clone() * inv.clone();
            work.set(row, j, v);
        }
        for i in 0..rows {
            if i == row || work.get(i, col).is_zero() {
                continue;
            }
            let f = work.get(i, col).clone();
            for j in 0..cols {
                let v = work.get(i, j).clone() - f.clone() * work.get(row, j).clone();
                work.set(i, j, v);
            }
        }
        row += 1;
    }
    pivots
}

/// Solve `w · x = b` exactly for a (possibly rectangular) full-column-rank
/// `w`; errors if the system is inconsistent.
fn solve_columns<T: Scalar>(w: &Matrix<T>, b: &[T]) -> Result<Vec<T>> {
    let (rows, cols) = (w.rows(), w.cols());
    if b.len() != rows {
        return Err(Error::Dimension("right-hand side length mismatch".into()));
    }
    let mut aug = Matrix::zeros(rows, cols + 1);
    for i in 0..rows {
        for j in 0..cols {
            aug.set(i, j, w.get(i, j).clone());
        }
        aug.set(i, cols, b[i].clone());
    }
    let mut row = 0usize;
    let mut pivot_of_col = vec![usize::MAX; cols];
    for col in 0..cols {
        let Some(p) = (row..rows).find(|i| !aug.get(*i, col).is_zero()) else {
            continue;
        };
        for j in 0..=cols {
            let a = aug.get(row, j).clone();
            let b2 = aug.get(p, j).clone();
            aug.set(row, j, b2);
            aug.set(p, j, a);
        }
        let inv = T::one() / aug.get(row, col).clone();
        for j in 0..=cols {
            let v = aug.get(row, j).clone() * inv.clone();
            aug.set(row, j, v);
        }
        for i in 0..rows {
            if i == row || aug.get(i, col).is_zero() {
                continue;
            }
            let f = aug.get(i, col).clone();
            for j in 0..=cols {
                let v = aug.get(i, j).clone() - f.clone() * aug.get(row, j).clone();
                aug.set(i, j, v);
            }
        }
        pivot_of_col[col] = row;
        row += 1;
    }
    // consistency: remaining rows must have zero right-hand side
    for i in row..rows {
        if !aug.get(i, cols).is_zero() {
            return Err(Error::Precondition("vector outside the image span".into()));
        }
    }
    let mut x = vec![T::zero(); cols];
    for col in 0..cols {
        if pivot_of_col[col] != usize::MAX {
            x[col] = aug.get(pivot_of_col[col], cols).clone();
        }
    }
    Ok(x)
}

fn induced_structures<T: Scalar>(
    data: &OOperatorData<T>,
    carrier_table: impl Fn(usize, usize) -> Result<Vec<Vec<T>>>,
    products: usize,
    build: impl Fn(Vec<Table<T>>) -> Algebra<T>,
) -> Result<OInduced<T>> {
    let m = data.module.car_dim();
    // carrier tables
    let mut tables = vec![Table::zeros(m)?; products];
    for u in 0..m {
        for v in 0..m {
            let prods = carrier_table(u, v)?;
            for (t, p) in tables.iter_mut().zip(&prods) {
                for k in 0..m {
                    t.set(u, v, k, p[k].clone());
                }
            }
        }
    }
    let on_carrier = build(tables.clone());
    // image basis and coordinates
    let pivots = pivot_columns(&data.map);
    let p = pivots.len();
    let n = data.map.rows();
    let mut w = Matrix::zeros(n, p);
    for (a, col) in pivots.iter().enumerate() {
        for i in 0..n {
            w.set(i, a, data.map.get(i, *col).clone());
        }
    }
    let mut coords = Matrix::zeros(p, m);
    for i in 0..m {
        let b: Vec<T> = (0..n).map(|r| data.map.get(r, i).clone()).collect();
        let x = solve_columns(&w, &b)?;
        for a in 0..p {
            coords.set(a, i, x[a].clone());
        }
    }
    // induced image tables: w_a ⋄ w_b = map(v_{pivot a} ⋄_V v_{pivot b})
    let mut img_tables = vec![Table::zeros(p)?; products];
    for a in 0..p {
        for b in 0..p {
            for (it, vt) in img_tables.iter_mut().zip(&tables) {
                let carrier_prod = vt.product_basis(pivots[a], pivots[b]);
                let in_a = data.map.mul_vec(carrier_prod)?;
                let x = solve_columns(&w, &in_a)?;
                for k in 0..p {
                    it.set(a, b, k, x[k].clone());
                }
            }
        }
    }
    // the map must be a homomorphism carrier → image on all basis pairs
    for u in 0..m {
        for v in 0..m {
            for (it, vt) in img_tables.iter().zip(&tables) {
                let lhs = coords.mul_vec(vt.product_basis(u, v))?;
                let cu: Vec<T> = (0..p).map(|a| coords.get(a, u).clone()).collect();
                let cv: Vec<T> = (0..p).map(|a| coords.get(a, v).clone()).collect();
                let rhs = it.product(&cu, &cv)?;
                if lhs != rhs {
                    return Err(Error::Precondition(
                        "induced image structure is not closed".into(),
                    ));
                }
            }
        }
    }
    let on_image = build(img_tables);
    Ok(OInduced { on_carrier, on_image, image_basis: w, image_coords: coords })
}

/// Dendriform structures induced by an associative operator datum:
/// `u ≻ v = l(T(u))v`, `u ≺ v = r(T(v))u` on the carrier, and the image
/// structure transported through the map.
pub fn dendriform_from_o_operator<T: Scalar>(data: &OOperatorData<T>) -> Result<OInduced<T>> {
    if !is_o_operator(data)?.passed() {
        return Err(Error::Precondition("operator identity fails".into()));
    }
    let (l, r) = match &data.module {
        ActionFamily::Associative { l, r } => (l, r),
        _ => return Err(Error::Kind("dendriform induction requires an associative module".into())),
    };
    let m = data.module.car_dim();
    let tcol = |i: usize| -> Vec<T> {
        (0..data.map.rows()).map(|row| data.map.get(row, i).clone()).collect()
    };
    let out = induced_structures(
        data,
        |u, v| {
            let succ = l.eval(&tcol(u))?.mul_vec(&basis_vec(m, v))?;
            let prec = r.eval(&tcol(v))?.mul_vec(&basis_vec(m, u))?;
            Ok(vec![succ, prec])
        },
        2,
        |mut ts| {
            let prec = ts.pop().expect("two tables");
            let succ = ts.pop().expect("two tables");
            Algebra::Dendriform { succ, prec }
        },
    )?;
    // sanity: both structures satisfy the dendriform axioms
    if !out.on_carrier.check_axioms()?.passed() || !out.on_image.check_axioms()?.passed() {
        return Err(Error::Precondition("induced structure fails dendriform axioms".into()));
    }
    Ok(out)
}

/// Pre-Lie structures induced by a Lie operator datum: `u∘v = ρ(T(u))v` on
/// the carrier, transported to the image.
pub fn prelie_from_o_operator<T: Scalar>(data: &OOperatorData<T>) -> Result<OInduced<T>> {
    if !is_o_operator(data)?.passed() {
        return Err(Error::Precondition("operator identity fails".into()));
    }
    let rho = match &data.module {
        ActionFamily::Lie { rho } => rho,
        _ => return Err(Error::Kind("pre-Lie induction requires a Lie representation".into())),
    };
    let m = data.module.car_dim();
    let tcol = |i: usize| -> Vec<T> {
        (0..data.map.rows()).map(|row| data.map.get(row, i).clone()).collect()
    };
    let out = induced_structures(
        data,
        |u, v| Ok(vec![rho.eval(&tcol(u))?.mul_vec(&basis_vec(m, v))?]),
        1,
        |mut ts| Algebra::PreLie(ts.pop().expect("one table")),
    )?;
    if !out.on_carrier.check_axioms()?.passed() || !out.on_image.check_axioms()?.passed() {
        return Err(Error::Precondition("induced structure fails pre-Lie axioms".into()));
    }
    Ok(out)
}

/// Which combination the lift produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftFlavor {
    /// `T − σ(T)`: antisymmetric solution in the semidirect double of the
    /// dualized module (associative or Lie ambient).
    Antisym,
    /// `T + σ(T)`: symmetric solution in the semidirect double over the image
    /// structure (dendriform or pre-Lie ambient).
    Sym,
}

fn map_tensor<T: Scalar>(coords: &Matrix<T>, alg_dim: usize) -> Tensor2<T> {
    // T = Σᵢ T(vᵢ) ⊗ vᵢ*, components in basis [algebra, carrier-dual]
    let m = coords.cols();
    let total = alg_dim + m;
    let mut grid = Matrix::zeros(total, total);
    for a in 0..alg_dim {
        for i in 0..m {
            grid.set(a, alg_dim + i, coords.get(a, i).clone());
        }
    }
    Tensor2::from_grid(grid)
}

/// Lift an operator datum to a solution of the matching equation in an
/// ambient semidirect double.  Returns the ambient algebra, the lifted tensor
/// and its residual, which is verified to vanish.
pub fn lift_o_operator<T: Scalar>(
    data: &OOperatorData<T>,
    flavor: LiftFlavor,
) -> Result<(Algebra<T>, Tensor2<T>, Tensor3<T>)> {
    if !is_o_operator(data)?.passed() {
        return Err(Error::Precondition("operator identity fails".into()));
    }
    let (ambient, tensor, kind) = match (flavor, &data.module) {
        (LiftFlavor::Antisym, ActionFamily::Associative { .. }) => {
            let ambient = semidirect(&data.algebra, &dual_bimodule(&data.module)?)?;
            let t = map_tensor(&data.map, data.algebra.dim());
            (ambient, t.sub(&t.swap())?, EquationKind::Aybe)
        }
        (LiftFlavor::Antisym, ActionFamily::Lie { .. }) => {
            let ambient = semidirect(&data.algebra, &dual_bimodule(&data.module)?)?;
            let t = map_tensor(&data.map, data.algebra.dim());
            (ambient, t.sub(&t.swap())?, EquationKind::Cybe)
        }
        (LiftFlavor::Sym, ActionFamily::Associative { l, r }) => {
            let ind = dendriform_from_o_operator(data)?;
            let p = ind.image_basis.cols();
            let m = data.module.car_dim();
            // the image acts on the dual carrier by (r*, 0, 0, l*)
            let wcol = |a: usize| -> Vec<T> {
                (0..ind.image_basis.rows())
                    .map(|i| ind.image_basis.get(i, a).clone())
                    .collect()
            };
            let mut lsucc = Vec::with_capacity(p);
            let mut rprec = Vec::with_capacity(p);
            for a in 0..p {
                lsucc.push(r.eval(&wcol(a))?.transpose());
                rprec.push(l.eval(&wcol(a))?.transpose());
            }
            let fam = ActionFamily::Dendriform {
                lsucc: Rep::new(lsucc)?,
                rsucc: Rep::zero(p, m),
                lprec: Rep::zero(p, m),
                rprec: Rep::new(rprec)?,
            };
            let ambient = semidirect(&ind.on_image, &fam)?;
            let t = map_tensor(&ind.image_coords, p);
            (ambient, t.add(&t.swap())?, EquationKind::Deq)
        }
        (LiftFlavor::Sym, ActionFamily::Lie { rho }) => {
            let ind = prelie_from_o_operator(data)?;
            let p = ind.image_basis.cols();
            let m = data.module.car_dim();
            let wcol = |a: usize| -> Vec<T> {
                (0..ind.image_basis.rows())
                    .map(|i| ind.image_basis.get(i, a).clone())
                    .collect()
            };
            let mut lmats = Vec::with_capacity(p);
            for a in 0..p {
                lmats.push(rho.eval(&wcol(a))?.transpose().neg());
            }
            let fam = ActionFamily::PreLie { l: Rep::new(lmats)?, r: Rep::zero(p, m) };
            let ambient = semidirect(&ind.on_image, &fam)?;
            let t = map_tensor(&ind.image_coords, p);
            (ambient, t.add(&t.swap())?, EquationKind::Seq)
        }
        _ => return Err(Error::Kind("lift defined for associative and Lie modules".into())),
    };
    let res = residual(kind, &ambient, &tensor)?;
    if !res.is_zero() {
        return Err(Error::Invalid("lifted tensor fails its equation".into()));
    }
    Ok((ambient, tensor, res))
}

/// The canonical solution families on semidirect doubles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalVariant {
    /// Associative `A`: antisymmetric solution in `A ⋉_{R*,0} A*`.
    AybeRight,
    /// Associative `A`: antisymmetric solution in `A ⋉_{0,L*} A*`.
    AybeLeft,
    /// Dendriform `A`: symmetric solution in `A ⋉_{R≺*,0,0,L≻*} A*`.
    Deq,
    /// Pre-Lie `A`: antisymmetric solution in `G(A) ⋉_{L*} G(A)*`.
    Cybe,
    /// Pre-Lie `A`: symmetric solution in `A ⋉_{L*,0} A*`.
    Seq,
}

fn canonical_tensor<T: Scalar>(n: usize, symmetric: bool) -> Tensor2<T> {
    let mut grid = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        grid.set(i, n + i, T::one());
        grid.set(n + i, i, if symmetric { T::one() } else { -T::one() });
    }
    Tensor2::from_grid(grid)
}

/// Build the canonical solution for the variant: the ambient semidirect
/// algebra, the tensor `Σ (eᵢ⊗eᵢ* ∓ eᵢ*⊗eᵢ)`, and its (zero) residual.
pub fn canonical_solution<T: Scalar>(
    a: &Algebra<T>,
    variant: CanonicalVariant,
) -> Result<(Algebra<T>, Tensor2<T>, Tensor3<T>)> {
    let n = a.dim();
    let (ambient, r, kind) = match (variant, a) {
        (CanonicalVariant::AybeRight, Algebra::Associative(t)) => {
            let fam = ActionFamily::Associative {
                l: Rep::right_regular(t).dual(),
                r: Rep::zero(n, n),
            };
            (semidirect(a, &fam)?, canonical_tensor(n, false), EquationKind::Aybe)
        }
        (CanonicalVariant::AybeLeft, Algebra::Associative(t)) => {
            let fam = ActionFamily::Associative {
                l: Rep::zero(n, n),
                r: Rep::left_regular(t).dual(),
            };
            (semidirect(a, &fam)?, canonical_tensor(n, false), EquationKind::Aybe)
        }
        (CanonicalVariant::Deq, Algebra::Dendriform { succ, prec }) => {
            let fam = ActionFamily::Dendriform {
                lsucc: Rep::right_regular(prec).dual(),
                rsucc: Rep::zero(n, n),
                lprec: Rep::zero(n, n),
                rprec: Rep::left_regular(succ).dual(),
            };
            (semidirect(a, &fam)?, canonical_tensor(n, true), EquationKind::Deq)
        }
        (CanonicalVariant::Cybe, Algebra::PreLie(t)) => {
            let lie = Algebra::Lie(commutator_lie(t));
            let fam = ActionFamily::Lie { rho: Rep::left_regular(t).dual_neg() };
            (semidirect(&lie, &fam)?, canonical_tensor(n, false), EquationKind::Cybe)
        }
        (CanonicalVariant::Seq, Algebra::PreLie(t)) => {
            let fam = ActionFamily::PreLie {
                l: Rep::left_regular(t).dual_neg(),
                r: Rep::zero(n, n),
            };
            (semidirect(a, &fam)?, canonical_tensor(n, true), EquationKind::Seq)
        }
        _ => return Err(Error::Kind("variant does not match the algebra kind".into())),
    };
    let res = residual(kind, &ambient, &r)?;
    if !res.is_zero() {
        return Err(Error::Invalid("canonical tensor fails its equation".into()));
    }
    Ok((ambient, r, res))
}

fn map_column<T: Scalar>(r: &Tensor2<T>, j: usize) -> Vec<T> {
    // r as a map dual→primal: image of the j-th dual basis vector
    (0..r.left_dim()).map(|i| r.get(i, j).clone()).collect()
}

fn transpose_col<T: Scalar>(m: &Matrix<T>, j: usize) -> Vec<T> {
    (0..m.cols()).map(|c| m.get(j, c).clone()).collect()
}

/// The full product table on `A ⊕ A*` induced by a solution `r`, with all
/// dual and mixed products expressed through the products of `A` and the map
/// `r: A* → A`.  Certifies that the map intertwines the dual product with the
/// base product (`hom`).  Requires a zero residual and the matching symmetry
/// (antisymmetric for the associative equation, symmetric for the dendriform
/// one).
pub fn induced_dual_products<T: Scalar>(
    a: &Algebra<T>,
    r: &Tensor2<T>,
    kind: EquationKind,
) -> Result<(Algebra<T>, Certificate)> {
    let n = a.dim();
    check_square(r, n)?;
    if !residual(kind, a, r)?.is_zero() {
        return Err(Error::Precondition("tensor does not solve the equation".into()));
    }
    let mut cert = Certificate::new("induced-products");
    match (kind, a) {
        (EquationKind::Aybe, Algebra::Associative(t)) => {
            if r.add(&r.swap())?.is_zero() == false {
                return Err(Error::Precondition("an antisymmetric tensor is required".into()));
            }
            let mut out = Table::zeros(2 * n)?;
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        out.set(i, j, k, t.get(i, j, k).clone());
                    }
                }
            }
            // dual side: a*∘b* = R*(r(a*))b* + L*(r(b*))a*
            let mut dual = Table::zeros(n)?;
            for i in 0..n {
                for j in 0..n {
                    let m1 = t.right_mult_vec(&map_column(r, i))?;
                    let m2 = t.left_mult_vec(&map_column(r, j))?;
                    let vec = crate::algebra::vec_add(&transpose_col(&m1, j), &transpose_col(&m2, i));
                    for (k, v) in vec.iter().enumerate() {
                        out.set(n + i, n + j, n + k, v.clone());
                        dual.set(i, j, k, v.clone());
                    }
                }
            }
            // mixed: x·a* = x·r(a*) − r(R*(x)a*) + R*(x)a*
            for i in 0..n {
                for j in 0..n {
                    let ra = map_column(r, j);
                    let in_a1 = t.product(&basis_vec(n, i), &ra)?;
                    let dual_part = transpose_col(&t.right_mult(i), j);
                    let in_a2 = r.as_map().mul_vec(&dual_part)?;
                    for k in 0..n {
                        out.set(i, n + j, k, in_a1[k].clone() - in_a2[k].clone());
                        out.set(i, n + j, n + k, dual_part[k].clone());
                    }
                    // a*·x = r(a*)·x − r(L*(x)a*) + L*(x)a*
                    let in_a1 = t.product(&map_column(r, i), &basis_vec(n, j))?;
                    let dual_part = transpose_col(&t.left_mult(j), i);
                    let in_a2 = r.as_map().mul_vec(&dual_part)?;
                    for k in 0..n {
                        out.set(n + i, j, k, in_a1[k].clone() - in_a2[k].clone());
                        out.set(n + i, j, n + k, dual_part[k].clone());
                    }
                }
            }
            // hom: r(a*∘b*) = r(a*)·r(b*)
            for i in 0..n {
                for j in 0..n {
                    let lhs = r.as_map().mul_vec(dual.product_basis(i, j))?;
                    let rhs = t.product(&map_column(r, i), &map_column(r, j))?;
                    if let Some(d) = lhs
                        .iter()
                        .zip(&rhs)
                        .map(|(x, y)| x.clone() - y.clone())
                        .find(|d| !d.is_zero())
                    {
                        cert.record("hom", &[i, j], &d);
                    }
                }
            }
            Ok((Algebra::Associative(out), cert))
        }
        (EquationKind::Deq, Algebra::Dendriform { succ, prec }) => {
            if r.sub(&r.swap())?.is_zero() == false {
                return Err(Error::Precondition("a symmetric tensor is required".into()));
            }
            let star = succ.sum(prec)?;
            let mut osucc = Table::zeros(2 * n)?;
            let mut oprec = Table::zeros(2 * n)?;
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        osucc.set(i, j, k, succ.get(i, j, k).clone());
                        oprec.set(i, j, k, prec.get(i, j, k).clone());
                    }
                }
            }
            let mut dual_star = Table::zeros(n)?;
            for i in 0..n {
                for j in 0..n {
                    let ra = map_column(r, i);
                    let rb = map_column(r, j);
                    // a*≻b* = R*(r(a*))b* − L≺*(r(b*))a*
                    let svec = crate::algebra::vec_sub(
                        &transpose_col(&star.right_mult_vec(&ra)?, j),
                        &transpose_col(&prec.left_mult_vec(&rb)?, i),
                    );
                    // a*≺b* = −R≻*(r(a*))b* + L*(r(b*))a*
                    let pvec = crate::algebra::vec_sub(
                        &transpose_col(&star.left_mult_vec(&rb)?, i),
                        &transpose_col(&succ.right_mult_vec(&ra)?, j),
                    );
                    for k in 0..n {
                        osucc.set(n + i, n + j, n + k, svec[k].clone());
                        oprec.set(n + i, n + j, n + k, pvec[k].clone());
                        dual_star.set(i, j, k, svec[k].clone() + pvec[k].clone());
                    }
                    // x≻a* = x≻r(a*) − r(R*(x)a*) + R*(x)a*
                    let ra_j = map_column(r, j);
                    let d1 = transpose_col(&star.right_mult(i), j);
                    let a1 = crate::algebra::vec_sub(
                        &succ.product(&basis_vec(n, i), &ra_j)?,
                        &r.as_map().mul_vec(&d1)?,
                    );
                    // x≺a* = x≺r(a*) + r(R≻*(x)a*) − R≻*(x)a*
                    let d2 = transpose_col(&succ.right_mult(i), j);
                    let a2 = crate::algebra::vec_add(
                        &prec.product(&basis_vec(n, i), &ra_j)?,
                        &r.as_map().mul_vec(&d2)?,
                    );
                    for k in 0..n {
                        osucc.set(i, n + j, k, a1[k].clone());
                        osucc.set(i, n + j, n + k, d1[k].clone());
                        oprec.set(i, n + j, k, a2[k].clone());
                        oprec.set(i, n + j, n + k, -d2[k].clone());
                    }
                    // a*≻x = r(a*)≻x + r(L≺*(x)a*) − L≺*(x)a*
                    let ra_i = map_column(r, i);
                    let d3 = transpose_col(&prec.left_mult(j), i);
                    let a3 = crate::algebra::vec_add(
                        &succ.product(&ra_i, &basis_vec(n, j))?,
                        &r.as_map().mul_vec(&d3)?,
                    );
                    // a*≺x = r(a*)≺x − r(L*(x)a*) + L*(x)a*
                    let d4 = transpose_col(&star.left_mult(j), i);
                    let a4 = crate::algebra::vec_sub(
                        &prec.product(&ra_i, &basis_vec(n, j))?,
                        &r.as_map().mul_vec(&d4)?,
                    );
                    for k in 0..n {
                        osucc.set(n + i, j, k, a3[k].clone());
                        osucc.set(n + i, j, n + k, -d3[k].clone());
                        oprec.set(n + i, j, k, a4[k].clone());
                        oprec.set(n + i, j, n + k, d4[k].clone());
                    }
                }
            }
            // hom on the sum product: r(a* * b*) = r(a*) * r(b*)
            for i in 0..n {
                for j in 0..n {
                    let lhs = r.as_map().mul_vec(dual_star.product_basis(i, j))?;
                    let rhs = star.product(&map_column(r, i), &map_column(r, j))?;
                    if let Some(d) = lhs
                        .iter()
                        .zip(&rhs)
                        .map(|(x, y)| x.clone() - y.clone())
                        .find(|d| !d.is_zero())
                    {
                        cert.record("hom", &[i, j], &d);
                    }
                }
            }
            Ok((Algebra::Dendriform { succ: osucc, prec: oprec }, cert))
        }
        _ => Err(Error::Kind(
            "induced products are defined for the associative and dendriform equations".into(),
        )),
    }
}

/// Which canonical double bialgebra to build on `A ⊕ A*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleKind {
    /// Associative double of an associative bialgebra.
    Ad,
    /// Dendriform double of a dendriform bialgebra.
    Dd,
}

fn block_inclusion<T: Scalar>(n: usize, lower: bool) -> Matrix<T> {
    let mut m = Matrix::zeros(2 * n, n);
    for i in 0..n {
        m.set(if lower { n + i } else { i }, i, T::one());
    }
    m
}

/// The canonical double bialgebra on `A ⊕ A*` given by the identity-map
/// tensor: the double algebra is the two-sided bicross product of the dual
/// actions, the comultiplications are the coboundaries of
/// `r = Σ eᵢ ⊗ eᵢ*`, and the certificate re-verifies the bialgebra axioms,
/// the vanishing of the defining residual identities, and that both
/// inclusions are bialgebra homomorphisms (the dual-side source carries the
/// negated comultiplication in the associative case).
pub fn build_double<T: Scalar>(
    b: &Bialgebra<T>,
    which: DoubleKind,
) -> Result<(Bialgebra<T>, Certificate)> {
    if !check_bialgebra(b)?.passed() {
        return Err(Error::Precondition("bialgebra check fails".into()));
    }
    let n = b.dim();
    let mut cert = Certificate::new("double-bialgebra");
    match (which, b) {
        (DoubleKind::Ad, Bialgebra::Aib { base, delta }) => {
            let mp = crate::bialgebra::double_matched_pair(b)?;
            let double = bicross_product(&mp)?;
            let r = {
                let mut grid = Matrix::zeros(2 * n, 2 * n);
                for i in 0..n {
                    grid.set(i, n + i, T::one());
                }
                Tensor2::from_grid(grid)
            };
            let delta_double = coboundary_delta(&double, &r)?;
            let table = double.table()?.clone();
            let out = Bialgebra::Aib { base: table, delta: delta_double };
            let inner = check_bialgebra(&out)?;
            if !inner.passed() {
                cert.record("axioms", &[], &"double bialgebra fails its axioms");
            }
            record_t3(
                &mut cert,
                "residual",
                &[],
                &residual(EquationKind::Aybe, &double, &r)?,
            );
            let h1 = check_bialgebra_hom(b, &out, &block_inclusion(n, false))?;
            if !h1.passed() {
                cert.record("inclusion-1", &[], &"primal inclusion not a homomorphism");
            }
            let dual_src = Bialgebra::Aib {
                base: delta.dual_table()?,
                delta: Comult::from_table(base).neg(),
            };
            let h2 = check_bialgebra_hom(&dual_src, &out, &block_inclusion(n, true))?;
            if !h2.passed() {
                cert.record("inclusion-2", &[], &"dual inclusion not a homomorphism");
            }
            Ok((out, cert))
        }
        (DoubleKind::Dd, Bialgebra::Ddb { .. }) => {
            // dendriform bicross product through the dual action families
            let mp = crate::bialgebra::ddb_dendriform_matched_pair(b)?;
            let double = bicross_product(&mp)?;
            let (dsucc, dprec) = match &double {
                Algebra::Dendriform { succ, prec } => (succ.clone(), prec.clone()),
                _ => unreachable!("dendriform bicross"),
            };
            let mut grid = Matrix::zeros(2 * n, 2 * n);
            for i in 0..n {
                grid.set(i, n + i, T::one());
            }
            let r = Tensor2::from_grid(grid);
            let (delta_s, delta_p) = coboundary_delta_pair(&double, &r, &r.neg())?;
            let out = Bialgebra::Ddb {
                succ: dsucc,
                prec: dprec,
                delta_succ: delta_s,
                delta_prec: delta_p,
            };
            if !check_bialgebra(&out)?.passed() {
                cert.record("axioms", &[], &"double bialgebra fails its axioms");
            }
            // the three cyclically-related residual identities of the proof
            let star = double.associated_associative()?;
            let (ds, dp) = match &double {
                Algebra::Dendriform { succ, prec } => (succ, prec),
                _ => unreachable!(),
            };
            let res1 = slot_product(&star, &r, (0, 1), &r, (0, 2))?
                .sub(&slot_product(dp, &r, (0, 2), &r, (1, 2))?)?
                .sub(&slot_product(ds, &r, (1, 2), &r, (0, 1))?)?;
            record_t3(&mut cert, "residual-1", &[], &res1);
            let res2 = slot_product(dp, &r, (0, 1), &r, (0, 2))?
                .add(&slot_product(ds, &r, (0, 2), &r, (1, 2))?)?
                .sub(&slot_product(&star, &r, (1, 2), &r, (0, 1))?)?;
            record_t3(&mut cert, "residual-2", &[], &res2);
            let res3 = slot_product(dp, &r, (1, 2), &r, (0, 1))?
                .add(&slot_product(ds, &r, (0, 1), &r, (0, 2))?)?
                .sub(&slot_product(&star, &r, (0, 2), &r, (1, 2))?)?;
            record_t3(&mut cert, "residual-3", &[], &res3);
            let h1 = check_bialgebra_hom(b, &out, &block_inclusion(n, false))?;
            if !h1.passed() {
                cert.record("inclusion-1", &[], &"primal inclusion not a homomorphism");
            }
            let dual_src = crate::bialgebra::dual_bialgebra(b)?;
            let h2 = check_bialgebra_hom(&dual_src, &out, &block_inclusion(n, true))?;
            if !h2.passed() {
                cert.record("inclusion-2", &[], &"dual inclusion not a homomorphism");
            }
            Ok((out, cert))
        }
        _ => Err(Error::Kind("double kind does not match the bialgebra kind".into())),
    }
}

/// The explicit isomorphism witness between the semidirect double (zero
/// solution) and the `r`-induced double: `φ(x) = x`, `φ(a*) = −r(a*) + a*`,
/// i.e. the block matrix `[[I, −M],[0, I]]` with `M` the coefficient matrix
/// of `r`.  The certificate verifies that `φ` is an algebra homomorphism from
/// the semidirect double to the induced double and preserves the canonical
/// pairing form.
pub fn iso_witness<T: Scalar>(
    a: &Algebra<T>,
    r: &Tensor2<T>,
    kind: EquationKind,
) -> Result<(Matrix<T>, Certificate)> {
    let n = a.dim();
    check_square(r, n)?;
    let mut cert = Certificate::new("iso-witness");
    let (semi, induced, form) = match (kind, a) {
        (EquationKind::Aybe, Algebra::Associative(_)) => {
            let fam = dual_bimodule(&ActionFamily::regular(a))?;
            let semi = semidirect(a, &fam)?;
            let (ind, icert) = induced_dual_products(a, r, kind)?;
            cert.absorb(icert);
            (
                semi.table()?.clone(),
                ind.table()?.clone(),
                natural_form(NaturalForm::Symmetric, n),
            )
        }
        (EquationKind::Deq, Algebra::Dendriform { succ, prec }) => {
            // the associated associative semidirect double A ⋉_{R≺*,L≻*} A*
            let star = Algebra::Associative(succ.sum(prec)?);
            let fam = ActionFamily::Associative {
                l: Rep::right_regular(prec).dual(),
                r: Rep::left_regular(succ).dual(),
            };
            let semi = semidirect(&star, &fam)?;
            let (ind, icert) = induced_dual_products(a, r, kind)?;
            cert.absorb(icert);
            (
                semi.table()?.clone(),
                ind.associated_associative()?,
                natural_form(NaturalForm::Antisymmetric, n),
            )
        }
        _ => {
            return Err(Error::Kind(
                "isomorphism witnesses exist for the associative and dendriform equations".into(),
            ))
        }
    };
    let total = 2 * n;
    let mut phi = Matrix::identity(total);
    for i in 0..n {
        for j in 0..n {
            phi.set(i, n + j, -r.get(i, j).clone());
        }
    }
    // algebra homomorphism semidirect → induced
    for i in 0..total {
        for j in 0..total {
            let lhs = phi.mul_vec(semi.product_basis(i, j))?;
            let ci: Vec<T> = (0..total).map(|k| phi.get(k, i).clone()).collect();
            let cj: Vec<T> = (0..total).map(|k| phi.get(k, j).clone()).collect();
            let rhs = induced.product(&ci, &cj)?;
            if let Some(d) = lhs
                .iter()
                .zip(&rhs)
                .map(|(x, y)| x.clone() - y.clone())
                .find(|d| !d.is_zero())
            {
                cert.record("hom", &[i, j], &d);
            }
        }
    }
    // the canonical pairing form is preserved: φᵀ G φ = G
    let g = form.gram();
    let pulled = phi.transpose().mul(g)?.mul(&phi)?;
    if let Some((i, j, _)) = pulled.sub(g)?.first_nonzero() {
        cert.record("form", &[i, j], pulled.get(i, j));
    }
    Ok((phi, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rat};
    use num_traits::Zero;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Two-dimensional associative algebra with e1·e0 = e0 and e1·e1 = e1.
    fn sample_assoc() -> Table<Rat> {
        Table::from_entries(2, &[(1, 0, 0, int(1)), (1, 1, 1, int(1))]).unwrap()
    }

    /// Dendriform structure on the sample algebra: x≻y = xy, x≺y = 0.
    fn sample_dendriform() -> Algebra<Rat> {
        Algebra::Dendriform { succ: sample_assoc(), prec: Table::zeros(2).unwrap() }
    }

    fn grid2(entries: &[(usize, usize, i64)]) -> Tensor2<Rat> {
        let mut m = Matrix::zeros(2, 2);
        for (i, j, v) in entries {
            m.set(*i, *j, int(*v));
        }
        Tensor2::from_grid(m)
    }

    fn random_tensor(rng: &mut ChaCha8Rng, n: usize) -> Tensor2<Rat> {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, int(rng.gen_range(-1..=1)));
            }
        }
        Tensor2::from_grid(m)
    }

    #[test]
    fn slot_product_readings() {
        let t = sample_assoc();
        let r = grid2(&[(1, 0, 1)]); // r = e1 ⊗ e0
        // r12 r13 = Σ (x_i x_j) ⊗ y_i ⊗ y_j = (e1 e1) ⊗ e0 ⊗ e0
        let p = slot_product(&t, &r, (0, 1), &r, (0, 2)).unwrap();
        assert_eq!(p.get(1, 0, 0), &int(1));
        let total: usize = 0; // only one entry expected
        let mut count = total;
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    if !p.get(a, b, c).is_zero() {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, 1);
        // r23 r12 = Σ u_j ⊗ (x_i v_j) ⊗ y_i = e1 ⊗ (e1 e0) ⊗ e0
        let q = slot_product(&t, &r, (1, 2), &r, (0, 1)).unwrap();
        assert_eq!(q.get(1, 0, 0), &int(1));
    }

    #[test]
    fn aybe_unit_line_has_unit_residual() {
        let t = Table::from_entries(1, &[(0, 0, 0, int(1))]).unwrap();
        let a = Algebra::Associative(t);
        let mut m = Matrix::zeros(1, 1);
        m.set(0, 0, int(1));
        let res = residual(EquationKind::Aybe, &a, &Tensor2::from_grid(m)).unwrap();
        assert_eq!(res.get(0, 0, 0), &int(1));
    }

    #[test]
    fn aybe_antisymmetric_solution_on_sample() {
        let a = Algebra::Associative(sample_assoc());
        let r = grid2(&[(0, 1, 1), (1, 0, -1)]);
        assert!(residual(EquationKind::Aybe, &a, &r).unwrap().is_zero());
        let cert = check_coboundary_conditions(&a, &r).unwrap();
        assert!(cert.passed());
    }

    #[test]
    fn deq_symmetric_solution_on_sample_dendriform() {
        let a = sample_dendriform();
        let r = grid2(&[(1, 1, 1)]);
        assert!(residual(EquationKind::Deq, &a, &r).unwrap().is_zero());
    }

    #[test]
    fn zero_tensor_gives_zero_comult_everywhere() {
        let z = Tensor2::<Rat>::zeros(2, 2);
        for a in [
            Algebra::Associative(sample_assoc()),
            Algebra::Lie(commutator_lie(&sample_assoc())),
            Algebra::PreLie(sample_assoc()),
        ] {
            let d = coboundary_delta(&a, &z).unwrap();
            assert!(d.is_zero());
            assert!(check_coboundary_conditions(&a, &z).unwrap().passed());
        }
        let dd = sample_dendriform();
        let (ds, dp) = coboundary_delta_pair(&dd, &z, &z).unwrap();
        assert!(ds.is_zero() && dp.is_zero());
        assert!(check_coboundary_conditions(&dd, &z).unwrap().passed());
        assert!(check_coboundary_conditions_pair(&dd, &z, &z).unwrap().passed());
    }

    /// The solvability conditions must agree exactly with re-checking the
    /// induced coboundary bialgebra, across random small tensors.
    #[test]
    fn conditions_match_induced_bialgebra_associative() {
        let a = Algebra::Associative(sample_assoc());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut passes = 0;
        for _ in 0..60 {
            let r = random_tensor(&mut rng, 2);
            let cond = check_coboundary_conditions(&a, &r).unwrap();
            let bia = check_bialgebra(&coboundary_bialgebra(&a, &r).unwrap()).unwrap();
            assert!(cond.first_witness.as_ref().map_or(true, |w| w.equation != "crosscheck"));
            assert_eq!(cond.passed(), bia.passed());
            if cond.passed() {
                passes += 1;
            }
        }
        assert!(passes > 0);
    }

    #[test]
    fn conditions_match_induced_bialgebra_lie() {
        let a = Algebra::Lie(commutator_lie(&sample_assoc()));
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..60 {
            let r = random_tensor(&mut rng, 2);
            let cond = check_coboundary_conditions(&a, &r).unwrap();
            let bia = check_bialgebra(&coboundary_bialgebra(&a, &r).unwrap()).unwrap();
            assert!(cond.first_witness.as_ref().map_or(true, |w| w.equation != "crosscheck"));
            assert_eq!(cond.passed(), bia.passed());
        }
    }

    #[test]
    fn conditions_match_induced_bialgebra_prelie() {
        let a = Algebra::PreLie(sample_assoc());
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..60 {
            let r = random_tensor(&mut rng, 2);
            let cond = check_coboundary_conditions(&a, &r).unwrap();
            let bia = check_bialgebra(&coboundary_bialgebra(&a, &r).unwrap()).unwrap();
            assert!(cond.first_witness.as_ref().map_or(true, |w| w.equation != "crosscheck"));
            assert_eq!(cond.passed(), bia.passed());
        }
    }

    #[test]
    fn conditions_match_induced_bialgebra_dendriform_special() {
        let a = sample_dendriform();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..60 {
            let r = random_tensor(&mut rng, 2);
            let cond = check_coboundary_conditions(&a, &r).unwrap();
            let bia = check_bialgebra(
                &coboundary_bialgebra_pair(&a, &r.swap().neg(), &r).unwrap(),
            )
            .unwrap();
            assert!(cond.first_witness.as_ref().map_or(true, |w| w.equation != "crosscheck"));
            assert_eq!(cond.passed(), bia.passed());
        }
    }

    #[test]
    fn conditions_match_induced_bialgebra_dendriform_pair() {
        let a = sample_dendriform();
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..60 {
            let rs = random_tensor(&mut rng, 2);
            let rp = random_tensor(&mut rng, 2);
            let cond = check_coboundary_conditions_pair(&a, &rs, &rp).unwrap();
            let bia =
                check_bialgebra(&coboundary_bialgebra_pair(&a, &rs, &rp).unwrap()).unwrap();
            assert!(cond.first_witness.as_ref().map_or(true, |w| w.equation != "crosscheck"));
            assert_eq!(cond.passed(), bia.passed());
        }
    }

    #[test]
    fn o_operator_identity_variants() {
        let t = sample_assoc();
        let a = Algebra::Associative(t.clone());
        let n = 2;
        let id = Matrix::<Rat>::identity(n);
        // identity map with the (L, 0) action
        let left_only = ActionFamily::Associative {
            l: Rep::left_regular(&t),
            r: Rep::zero(n, n),
        };
        let data = OOperatorData::new(a.clone(), left_only, id.clone()).unwrap();
        assert!(is_o_operator(&data).unwrap().passed());
        // the induced dendriform structure is (≻ = ·, ≺ = 0)
        let ind = dendriform_from_o_operator(&data).unwrap();
        assert_eq!(ind.on_carrier, sample_dendriform());
        assert_eq!(ind.on_image, sample_dendriform());
        // identity map with the (0, R) action
        let right_only = ActionFamily::Associative {
            l: Rep::zero(n, n),
            r: Rep::right_regular(&t),
        };
        let data2 = OOperatorData::new(a.clone(), right_only, id.clone()).unwrap();
        assert!(is_o_operator(&data2).unwrap().passed());
        let ind2 = dendriform_from_o_operator(&data2).unwrap();
        assert_eq!(
            ind2.on_carrier,
            Algebra::Dendriform { succ: Table::zeros(2).unwrap(), prec: sample_assoc() }
        );
        // identity map with the full regular bimodule is not an operator here
        let data3 = OOperatorData::new(a.clone(), ActionFamily::regular(&a), id).unwrap();
        assert!(!is_o_operator(&data3).unwrap().passed());
        // the zero map always is
        let data4 =
            OOperatorData::new(a.clone(), ActionFamily::regular(&a), Matrix::zeros(n, n))
                .unwrap();
        assert!(is_o_operator(&data4).unwrap().passed());
    }

    #[test]
    fn prelie_o_operator_via_left_multiplication() {
        // the identity of a pre-Lie algebra is an operator for its Lie
        // algebra acting by pre-Lie left multiplication
        let t = sample_assoc();
        let lie = Algebra::Lie(commutator_lie(&t));
        let data = OOperatorData::new(
            lie,
            ActionFamily::Lie { rho: Rep::left_regular(&t) },
            Matrix::identity(2),
        )
        .unwrap();
        assert!(is_o_operator(&data).unwrap().passed());
        let ind = prelie_from_o_operator(&data).unwrap();
        assert_eq!(ind.on_carrier, Algebra::PreLie(t.clone()));
        assert_eq!(ind.on_image, Algebra::PreLie(t));
    }

    #[test]
    fn lifts_solve_their_equations() {
        let t = sample_assoc();
        let a = Algebra::Associative(t.clone());
        let left_only = ActionFamily::Associative {
            l: Rep::left_regular(&t),
            r: Rep::zero(2, 2),
        };
        let data = OOperatorData::new(a, left_only, Matrix::identity(2)).unwrap();
        let (amb, r, res) = lift_o_operator(&data, LiftFlavor::Antisym).unwrap();
        assert_eq!(amb.dim(), 4);
        assert!(res.is_zero());
        assert!(r.add(&r.swap()).unwrap().is_zero());
        let (amb2, r2, res2) = lift_o_operator(&data, LiftFlavor::Sym).unwrap();
        assert_eq!(amb2.dim(), 4);
        assert!(res2.is_zero());
        assert!(r2.sub(&r2.swap()).unwrap().is_zero());
        // Lie flavors through the pre-Lie operator
        let lie_data = OOperatorData::new(
            Algebra::Lie(commutator_lie(&t)),
            ActionFamily::Lie { rho: Rep::left_regular(&t) },
            Matrix::identity(2),
        )
        .unwrap();
        let (amb3, _, res3) = lift_o_operator(&lie_data, LiftFlavor::Antisym).unwrap();
        assert_eq!(amb3.kind(), Kind::Lie);
        assert!(res3.is_zero());
        let (amb4, _, res4) = lift_o_operator(&lie_data, LiftFlavor::Sym).unwrap();
        assert_eq!(amb4.kind(), Kind::PreLie);
        assert!(res4.is_zero());
    }

    #[test]
    fn canonical_solutions_solve_their_equations() {
        let t = sample_assoc();
        let assoc = Algebra::Associative(t.clone());
        let dend = sample_dendriform();
        let pre = Algebra::PreLie(t);
        for (alg, variant) in [
            (&assoc, CanonicalVariant::AybeRight),
            (&assoc, CanonicalVariant::AybeLeft),
            (&dend, CanonicalVariant::Deq),
            (&pre, CanonicalVariant::Cybe),
            (&pre, CanonicalVariant::Seq),
        ] {
            let (amb, r, res) = canonical_solution(alg, variant).unwrap();
            assert_eq!(amb.dim(), 4);
            assert!(res.is_zero());
            let sym = matches!(variant, CanonicalVariant::Deq | CanonicalVariant::Seq);
            if sym {
                assert!(r.sub(&r.swap()).unwrap().is_zero());
            } else {
                assert!(r.add(&r.swap()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn induced_products_and_iso_witness_associative() {
        let a = Algebra::Associative(sample_assoc());
        let r = grid2(&[(0, 1, 1), (1, 0, -1)]);
        let (ind, cert) = induced_dual_products(&a, &r, EquationKind::Aybe).unwrap();
        assert!(cert.passed());
        assert!(ind.check_axioms().unwrap().passed());
        let (phi, wcert) = iso_witness(&a, &r, EquationKind::Aybe).unwrap();
        assert!(wcert.passed(), "{:?}", wcert.first_witness);
        assert_eq!(phi.get(0, 3), &int(-1)); // the off-diagonal block is -r
        // zero tensor gives the identity witness
        let z = Tensor2::<Rat>::zeros(2, 2);
        let (phi0, wcert0) = iso_witness(&a, &z, EquationKind::Aybe).unwrap();
        assert!(wcert0.passed());
        assert_eq!(phi0, Matrix::identity(4));
    }

    #[test]
    fn induced_products_and_iso_witness_on_canonical_doubles() {
        // associative: the canonical antisymmetric solution on the 4-dim
        // semidirect double
        let assoc = Algebra::Associative(sample_assoc());
        let (amb, r, _) = canonical_solution(&assoc, CanonicalVariant::AybeRight).unwrap();
        let (ind, cert) = induced_dual_products(&amb, &r, EquationKind::Aybe).unwrap();
        assert!(cert.passed());
        assert!(ind.check_axioms().unwrap().passed());
        let (_, wcert) = iso_witness(&amb, &r, EquationKind::Aybe).unwrap();
        assert!(wcert.passed(), "{:?}", wcert.first_witness);
        // dendriform: the canonical symmetric solution
        let (amb2, r2, _) = canonical_solution(&sample_dendriform(), CanonicalVariant::Deq)
            .unwrap();
        let (ind2, cert2) = induced_dual_products(&amb2, &r2, EquationKind::Deq).unwrap();
        assert!(cert2.passed());
        assert!(ind2.check_axioms().unwrap().passed());
        let (_, wcert2) = iso_witness(&amb2, &r2, EquationKind::Deq).unwrap();
        assert!(wcert2.passed(), "{:?}", wcert2.first_witness);
    }

    #[test]
    fn double_of_coboundary_bialgebras() {
        // associative: nontrivial coboundary bialgebra from the solution
        let a = Algebra::Associative(sample_assoc());
        let r = grid2(&[(0, 1, 1), (1, 0, -1)]);
        let b = coboundary_bialgebra(&a, &r).unwrap();
        assert!(check_bialgebra(&b).unwrap().passed());
        let (double, cert) = build_double(&b, DoubleKind::Ad).unwrap();
        assert!(cert.passed(), "{:?}", cert.first_witness);
        assert_eq!(double.dim(), 4);
        // trivial dendriform bialgebra
        let z = Table::<Rat>::zeros(2).unwrap();
        let dd = Bialgebra::Ddb {
            succ: z.clone(),
            prec: z,
            delta_succ: Comult::zeros(2),
            delta_prec: Comult::zeros(2),
        };
        let (double2, cert2) = build_double(&dd, DoubleKind::Dd).unwrap();
        assert!(cert2.passed(), "{:?}", cert2.first_witness);
        assert_eq!(double2.dim(), 4);
    }

    #[test]
    fn double_of_nontrivial_dendriform_bialgebra() {
        // the symmetric solution on the sample dendriform algebra induces a
        // coboundary dendriform bialgebra; its double must certify
        let a = sample_dendriform();
        let r = grid2(&[(1, 1, 1)]);
        let cond = check_coboundary_conditions(&a, &r).unwrap();
        if cond.passed() {
            let b = coboundary_bialgebra_pair(&a, &r.swap().neg(), &r).unwrap();
            assert!(check_bialgebra(&b).unwrap().passed());
            let (double, cert) = build_double(&b, DoubleKind::Dd).unwrap();
            assert!(cert.passed(), "{:?}", cert.first_witness);
            assert_eq!(double.dim(), 4);
        }
    }
}
