//! Matched pairs of algebras and bicrossed products.
//!
//! A matched pair consists of two algebras of the same kind acting on each
//! other's underlying spaces so that the direct sum carries a product of that
//! kind extending both.  Supported kinds: associative (six compatibility
//! equations `amp-1..6`), dendriform (eighteen equations `dmp-01..18`) and Lie
//! (two equations `lmp-1..2`).  The converse direction is
//! [`decompose_check`]: split an algebra along a basis partition into two
//! subalgebras, extract the mutual actions from the mixed products, check the
//! matched-pair conditions and verify the bicrossed product rebuilds the
//! original table.

use crate::actions::{check_bimodule, ActionFamily, Rep};
use crate::algebra::{basis_vec, vec_add, vec_sub, Algebra, Table};
use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::scalar::Scalar;

/// A matched pair: algebras `a` and `b` of one kind, `a_on_b` the action maps
/// `A → gl(B)` and `b_on_a` the action maps `B → gl(A)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchedPair<T> {
    pub a: Algebra<T>,
    pub b: Algebra<T>,
    pub a_on_b: ActionFamily<T>,
    pub b_on_a: ActionFamily<T>,
}

/// Column `j` of a matrix as a coordinate vector (the image of `e_j`).
fn col<T: Scalar>(m: &Matrix<T>, j: usize) -> Vec<T> {
    (0..m.rows()).map(|i| m.get(i, j).clone()).collect()
}

fn record_vec<T: Scalar>(cert: &mut Certificate, eq: &str, indices: &[usize], residual: &[T]) {
    if let Some(v) = residual.iter().find(|v| !v.is_zero()) {
        cert.record(eq, indices, v);
    }
}

/// Check all matched-pair conditions: both algebras' axioms, both bimodule
/// families, and the kind-specific compatibility equations.
pub fn check_matched_pair<T: Scalar>(mp: &MatchedPair<T>) -> Result<Certificate> {
    if mp.a.kind() != mp.b.kind() {
        return Err(Error::Kind("matched pair requires algebras of one kind".into()));
    }
    let mut cert = Certificate::new("matched-pair");
    cert.absorb(mp.a.check_axioms()?);
    cert.absorb(mp.b.check_axioms()?);
    cert.absorb(check_bimodule(&mp.a, &mp.a_on_b)?);
    cert.absorb(check_bimodule(&mp.b, &mp.b_on_a)?);
    match (&mp.a, &mp.b, &mp.a_on_b, &mp.b_on_a) {
        (
            Algebra::Associative(ta),
            Algebra::Associative(tb),
            ActionFamily::Associative { l: la, r: ra },
            ActionFamily::Associative { l: lb, r: rb },
        ) => {
            assoc_compat(&mut cert, ["amp-1", "amp-2", "amp-5"], ta, tb, la, ra, lb, rb)?;
            assoc_compat(&mut cert, ["amp-3", "amp-4", "amp-6"], tb, ta, lb, rb, la, ra)?;
        }
        (
            Algebra::Dendriform { succ: sa, prec: pa },
            Algebra::Dendriform { succ: sb, prec: pb },
            ActionFamily::Dendriform { lsucc: lsa, rsucc: rsa, lprec: lpa, rprec: rpa },
            ActionFamily::Dendriform { lsucc: lsb, rsucc: rsb, lprec: lpb, rprec: rpb },
        ) => {
            let first = ["dmp-01", "dmp-02", "dmp-03", "dmp-04", "dmp-05", "dmp-06", "dmp-07",
                "dmp-08", "dmp-09"];
            let second = ["dmp-10", "dmp-11", "dmp-12", "dmp-13", "dmp-14", "dmp-15", "dmp-16",
                "dmp-17", "dmp-18"];
            let _ = (sa, pa);
            dend_compat(&mut cert, first, sb, pb, lsa, rsa, lpa, rpa, lsb, rsb, lpb, rpb)?;
            dend_compat(&mut cert, second, sa, pa, lsb, rsb, lpb, rpb, lsa, rsa, lpa, rpa)?;
        }
        (
            Algebra::Lie(ta),
            Algebra::Lie(tb),
            ActionFamily::Lie { rho },
            ActionFamily::Lie { rho: mu },
        ) => {
            let _ = ta;
            lie_compat(&mut cert, "lmp-1", tb, rho, mu)?;
            lie_compat(&mut cert, "lmp-2", ta, mu, rho)?;
        }
        _ => {
            return Err(Error::Kind(format!(
                "matched pairs are not defined for kind {}",
                mp.a.kind().name()
            )))
        }
    }
    Ok(cert)
}

/// The three compatibility equations that involve products in the acted-on
/// algebra `B`: with `x = e_i` in the acting algebra and `a = e_j`, `b = e_k`
/// in `B`,
///
/// * `labels[0]`: `l(x)(a∘b) = l(r'(a)x)b + (l(x)a)∘b`
/// * `labels[1]`: `r(x)(a∘b) = r(l'(b)x)a + a∘(r(x)b)`
/// * `labels[2]`: `l(l'(a)x)b + (r(x)a)∘b − r(r'(b)x)a − a∘(l(x)b) = 0`
///
/// where `(l, r)` is the acting family `A → gl(B)` and `(l', r')` the opposite
/// family `B → gl(A)`.  Called twice with roles exchanged to cover all six.
#[allow(clippy::too_many_arguments)]
fn assoc_compat<T: Scalar>(
    cert: &mut Certificate,
    labels: [&str; 3],
    ta: &Table<T>,
    tb: &Table<T>,
    la: &Rep<T>,
    ra: &Rep<T>,
    lb: &Rep<T>,
    rb: &Rep<T>,
) -> Result<()> {
    let _ = ta;
    let na = la.alg_dim();
    let nb = la.car_dim();
    for i in 0..na {
        for j in 0..nb {
            for k in 0..nb {
                let ek = basis_vec::<T>(nb, k);
                let ej = basis_vec::<T>(nb, j);
                // l(x)(a∘b) = l(r'(a)x)b + (l(x)a)∘b
                let lhs = la.mat(i).mul_vec(tb.product_basis(j, k))?;
                let r1 = col(&la.eval(&col(rb.mat(j), i))?, k);
                let r2 = tb.product(&col(la.mat(i), j), &ek)?;
                record_vec(cert, labels[0], &[i, j, k], &vec_sub(&lhs, &vec_add(&r1, &r2)));
                // r(x)(a∘b) = r(l'(b)x)a + a∘(r(x)b)
                let lhs = ra.mat(i).mul_vec(tb.product_basis(j, k))?;
                let r1 = col(&ra.eval(&col(lb.mat(k), i))?, j);
                let r2 = tb.product(&ej, &col(ra.mat(i), k))?;
                record_vec(cert, labels[1], &[i, j, k], &vec_sub(&lhs, &vec_add(&r1, &r2)));
                // l(l'(a)x)b + (r(x)a)∘b − r(r'(b)x)a − a∘(l(x)b) = 0
                let t1 = col(&la.eval(&col(lb.mat(j), i))?, k);
                let t2 = tb.product(&col(ra.mat(i), j), &ek)?;
                let t3 = col(&ra.eval(&col(rb.mat(k), i))?, j);
                let t4 = tb.product(&ej, &col(la.mat(i), k))?;
                record_vec(
                    cert,
                    labels[2],
                    &[i, j, k],
                    &vec_sub(&vec_add(&t1, &t2), &vec_add(&t3, &t4)),
                );
            }
        }
    }
    Ok(())
}

/// The nine dendriform compatibility equations with the acting algebra on the
/// left: `x = e_i` acting, `a = e_j`, `b = e_k` in the acted-on algebra whose
/// products are `succ_b` / `prec_b`.  `(ls, rs, lp, rp)` is the acting family,
/// `(ls2, rs2, lp2, rp2)` the opposite one.  Called twice for all eighteen.
#[allow(clippy::too_many_arguments)]
fn dend_compat<T: Scalar>(
    cert: &mut Certificate,
    labels: [&str; 9],
    succ_b: &Table<T>,
    prec_b: &Table<T>,
    ls: &Rep<T>,
    rs: &Rep<T>,
    lp: &Rep<T>,
    rp: &Rep<T>,
    ls2: &Rep<T>,
    rs2: &Rep<T>,
    lp2: &Rep<T>,
    rp2: &Rep<T>,
) -> Result<()> {
    let na = ls.alg_dim();
    let nb = ls.car_dim();
    let star_b = succ_b.sum(prec_b)?;
    let l_all = ls.add(lp)?;
    let r_all = rs.add(rp)?;
    let l2_all = ls2.add(lp2)?;
    let r2_all = rs2.add(rp2)?;
    for i in 0..na {
        for j in 0..nb {
            for k in 0..nb {
                let ej = basis_vec::<T>(nb, j);
                let ek = basis_vec::<T>(nb, k);
                let idx = [i, j, k];
                // r≺(x)(a≺b) = a≺(r(x)b) + r≺(l'(b)x)a
                let lhs = rp.mat(i).mul_vec(prec_b.product_basis(j, k))?;
                let r1 = prec_b.product(&ej, &col(r_all.mat(i), k))?;
                let r2 = col(&rp.eval(&col(l2_all.mat(k), i))?, j);
                record_vec(cert, labels[0], &idx, &vec_sub(&lhs, &vec_add(&r1, &r2)));
                // l≺(l'≺(a)x)b + (r≺(x)a)≺b = a≺(l(x)b) + r≺(r'(b)x)a
                let t1 = col(&lp.eval(&col(lp2.mat(j), i))?, k);
                let t2 = prec_b.product(&col(rp.mat(i), j), &ek)?;
                let t3 = prec_b.product(&ej, &col(l_all.mat(i), k))?;
                let t4 = col(&rp.eval(&col(r2_all.mat(k), i))?, j);
                record_vec(cert, labels[1], &idx,
                    &vec_sub(&vec_add(&t1, &t2), &vec_add(&t3, &t4)));
                // l≺(x)(a*b) = (l≺(x)a)≺b + l≺(r'≺(a)x)b
                let lhs = lp.mat(i).mul_vec(star_b.product_basis(j, k))?;
                let r1 = prec_b.product(&col(lp.mat(i), j), &ek)?;
                let r2 = col(&lp.eval(&col(rp2.mat(j), i))?, k);
                record_vec(cert, labels[2], &idx, &vec_sub(&lhs, &vec_add(&r1, &r2)));
                // r≺(x)(a≻b) = r≻(l'≺(b)x)a + a≻(r≺(x)b)
                let lhs = rp.mat(i).mul_vec(succ_b.product_basis(j, k))?;
                let r1 = col(&rs.eval(&col(lp2.mat(k), i))?, j);
                let r2 = succ_b.product(&ej, &col(rp.mat(i), k))?;
                record_vec(cert, labels[3], &idx, &vec_sub(&lhs, &vec_add(&r1, &r2)));
                // l≺(l'≻(a)x)b + (r≻(x)a)≺b = a≻(l≺(x)b) + r≻(r'≺(b)x)a
                let t1 = col(&lp.eval(&col(ls2.mat(j), i))?, k);
                let t2 = prec_b.product(&col(rs.mat(i), j), &ek)?;
                let t3 = succ_b.product(&ej, &col(lp.mat(i), k))?;
                let t4 = col(&rs.eval(&col(rp2.mat(k), i))?, j);
                record_vec(cert, labels[4], &idx,
                    &vec_sub(&vec_add(&t1, &t2), &vec_add(&t3, &t4)));
                // l≻(x)(a≺b) = (l≻(x)a)≺b + l≺(r'≻(a)x)b
                let lhs = ls.mat(i).mul_vec(prec_b.product_basis(j, k))?;
                let r1 = prec_b.product(&col(ls.mat(i), j), &ek)?;
                let r2 = col(&lp.eval(&col(rs2.mat(j), i))?, k);
                record_vec(cert, labels[5], &idx, &vec_sub(&lhs, &vec_add(&r1, &r2)));
                // r≻(x)(a*b) = a≻(r≻(x)b) + r≻(l'≻(b)x)a
                let lhs = rs.mat(i).mul_vec(star_b.product_basis(j, k))?;
                let r1 = succ_b.product(&ej, &col(rs.mat(i), k))?;
                let r2 = col(&rs.eval(&col(ls2.mat(k), i))?, j);
                record_vec(cert, labels[6], &idx, &vec_sub(&lhs, &vec_add(&r1, &r2)));
                // a≻(l≻(x)b) + r≻(r'≻(b)x)a = l≻(l'(a)x)b + (r(x)a)≻b
                let t1 = succ_b.product(&ej, &col(ls.mat(i), k))?;
                let t2 = col(&rs.eval(&col(rs2.mat(k), i))?, j);
                let t3 = col(&ls.eval(&col(l2_all.mat(j), i))?, k);
                let t4 = succ_b.product(&col(r_all.mat(i), j), &ek)?;
                record_vec(cert, labels[7], &idx,
                    &vec_sub(&vec_add(&t1, &t2), &vec_add(&t3, &t4)));
                // l≻(x)(a≻b) = (l(x)a)≻b + l≻(r'(a)x)b
                let lhs = ls.mat(i).mul_vec(succ_b.product_basis(j, k))?;
                let r1 = succ_b.product(&col(l_all.mat(i), j), &ek)?;
                let r2 = col(&ls.eval(&col(r2_all.mat(j), i))?, k);
                record_vec(cert, labels[8], &idx, &vec_sub(&lhs, &vec_add(&r1, &r2)));
            }
        }
    }
    Ok(())
}

/// One Lie compatibility equation: with `x = e_i` in the acting algebra and
/// `a = e_j`, `b = e_k` in the acted-on algebra with bracket `tb`,
/// `ρ(x)[a,b] − [ρ(x)a,b] − [a,ρ(x)b] + ρ(μ(a)x)b − ρ(μ(b)x)a = 0`.
fn lie_compat<T: Scalar>(
    cert: &mut Certificate,
    label: &str,
    tb: &Table<T>,
    rho: &Rep<T>,
    mu: &Rep<T>,
) -> Result<()> {
    let na = rho.alg_dim();
    let nb = rho.car_dim();
    for i in 0..na {
        for j in 0..nb {
            for k in 0..nb {
                let ej = basis_vec::<T>(nb, j);
                let ek = basis_vec::<T>(nb, k);
                let t1 = rho.mat(i).mul_vec(tb.product_basis(j, k))?;
                let t2 = tb.product(&col(rho.mat(i), j), &ek)?;
                let t3 = tb.product(&ej, &col(rho.mat(i), k))?;
                let t4 = col(&rho.eval(&col(mu.mat(j), i))?, k);
                let t5 = col(&rho.eval(&col(mu.mat(k), i))?, j);
                let res = vec_sub(
                    &vec_add(&vec_sub(&vec_sub(&t1, &t2), &t3), &t4),
                    &t5,
                );
                record_vec(cert, label, &[i, j, k], &res);
            }
        }
    }
    Ok(())
}

/// The bicrossed product on `A ⊕ B` (basis: the `A` vectors first).  Its
/// products restrict to the two algebras, and the mixed products are given by
/// the action maps.
pub fn bicross_product<T: Scalar>(mp: &MatchedPair<T>) -> Result<Algebra<T>> {
    let n = mp.a.dim();
    let m = mp.b.dim();

    // Pair-type mixed products: x·a = r'(a)x + l(x)a and a·y = l'(a)y + r(y)a,
    // where (l, r) maps A → gl(B) and (l', r') maps B → gl(A).
    let pair_table =
        |ta: &Table<T>, tb: &Table<T>, la: &Rep<T>, ra: &Rep<T>, lb: &Rep<T>, rb: &Rep<T>|
         -> Result<Table<T>> {
            let mut out = Table::zeros(n + m)?;
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        out.set(i, j, k, ta.get(i, j, k).clone());
                    }
                }
            }
            for i in 0..m {
                for j in 0..m {
                    for k in 0..m {
                        out.set(n + i, n + j, n + k, tb.get(i, j, k).clone());
                    }
                }
            }
            for i in 0..n {
                for j in 0..m {
                    // e_i · b_j: A-part r'(b_j) e_i, B-part l(e_i) b_j.
                    for k in 0..n {
                        out.set(i, n + j, k, rb.mat(j).get(k, i).clone());
                    }
                    for k in 0..m {
                        out.set(i, n + j, n + k, la.mat(i).get(k, j).clone());
                    }
                    // b_j · e_i: A-part l'(b_j) e_i, B-part r(e_i) b_j.
                    for k in 0..n {
                        out.set(n + j, i, k, lb.mat(j).get(k, i).clone());
                    }
                    for k in 0..m {
                        out.set(n + j, i, n + k, ra.mat(i).get(k, j).clone());
                    }
                }
            }
            Ok(out)
        };

    match (&mp.a, &mp.b, &mp.a_on_b, &mp.b_on_a) {
        (
            Algebra::Associative(ta),
            Algebra::Associative(tb),
            ActionFamily::Associative { l: la, r: ra },
            ActionFamily::Associative { l: lb, r: rb },
        ) => Ok(Algebra::Associative(pair_table(ta, tb, la, ra, lb, rb)?)),
        (
            Algebra::Dendriform { succ: sa, prec: pa },
            Algebra::Dendriform { succ: sb, prec: pb },
            ActionFamily::Dendriform { lsucc: lsa, rsucc: rsa, lprec: lpa, rprec: rpa },
            ActionFamily::Dendriform { lsucc: lsb, rsucc: rsb, lprec: lpb, rprec: rpb },
        ) => Ok(Algebra::Dendriform {
            succ: pair_table(sa, sb, lsa, rsa, lsb, rsb)?,
            prec: pair_table(pa, pb, lpa, rpa, lpb, rpb)?,
        }),
        (
            Algebra::Lie(ta),
            Algebra::Lie(tb),
            ActionFamily::Lie { rho },
            ActionFamily::Lie { rho: mu },
        ) => {
            // [x, a] = ρ(x)a − μ(a)x and [a, x] = μ(a)x − ρ(x)a; in the pair
            // builder's slots: l = ρ, r = −ρ, l' = μ, r' = −μ.
            pair_table(ta, tb, rho, &rho.neg(), mu, &mu.neg()).map(Algebra::Lie)
        }
        _ => Err(Error::Kind(format!(
            "bicrossed products are not defined for kind {}",
            mp.a.kind().name()
        ))),
    }
}

/// Split an algebra along a sorted subset of basis indices, extract the induced
/// matched pair and check it, and verify the bicrossed product reproduces the
/// original table(s) (after permuting the basis to subset-first order).
///
/// Failures of the span conditions (products of the two parts escaping their
/// span) are recorded in the certificate under `split-a` / `split-b`.
pub fn decompose_check<T: Scalar>(
    alg: &Algebra<T>,
    subset: &[usize],
) -> Result<(MatchedPair<T>, Certificate)> {
    let n = alg.dim();
    if subset.windows(2).any(|w| w[0] >= w[1]) || subset.iter().any(|&i| i >= n) {
        return Err(Error::Invalid("subset must be strictly increasing and in range".into()));
    }
    if subset.is_empty() || subset.len() == n {
        return Err(Error::Invalid("subset must be a proper nonempty part of the basis".into()));
    }
    let a_idx: Vec<usize> = subset.to_vec();
    let b_idx: Vec<usize> = (0..n).filter(|i| !a_idx.contains(i)).collect();
    let p = a_idx.len();
    let q = b_idx.len();
    // perm[new] = old basis index, subset-first ordering.
    let perm: Vec<usize> = a_idx.iter().chain(b_idx.iter()).copied().collect();
    let mut pos = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        pos[old] = new;
    }

    let mut cert = Certificate::new("decompose");

    // Reindex one table to subset-first order, recording span violations:
    // products inside A (resp. B) must not have components in the other part.
    let mut split_table = |t: &Table<T>, tag: &str| -> Result<(Table<T>, Table<T>, Rep<T>, Rep<T>, Rep<T>, Rep<T>)> {
        let mut ta = Table::zeros(p)?;
        let mut tb = Table::zeros(q)?;
        let mut la = vec![Matrix::zeros(q, q); p];
        let mut ra = vec![Matrix::zeros(q, q); p];
        let mut lb = vec![Matrix::zeros(p, p); q];
        let mut rb = vec![Matrix::zeros(p, p); q];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = t.get(perm[i], perm[j], perm[k]).clone();
                    if v.is_zero() {
                        continue;
                    }
                    match (i < p, j < p, k < p) {
                        (true, true, true) => ta.set(i, j, k, v),
                        (true, true, false) => {
                            cert.record(&format!("{tag}-a"), &[perm[i], perm[j], perm[k]], &v)
                        }
                        (false, false, false) => tb.set(i - p, j - p, k - p, v),
                        (false, false, true) => {
                            cert.record(&format!("{tag}-b"), &[perm[i], perm[j], perm[k]], &v)
                        }
                        // e_i · b_j = r'(b_j) e_i + l(e_i) b_j.
                        (true, false, true) => rb[j - p].set(k, i, v),
                        (true, false, false) => la[i].set(k - p, j - p, v),
                        // b_j · e_i = l'(b_j) e_i + r(e_i) b_j.
                        (false, true, true) => lb[i - p].set(k, j, v),
                        (false, true, false) => ra[j].set(k - p, i - p, v),
                    }
                }
            }
        }
        Ok((ta, tb, Rep::new(la)?, Rep::new(ra)?, Rep::new(lb)?, Rep::new(rb)?))
    };

    let mp = match alg {
        Algebra::Associative(t) => {
            let (ta, tb, la, ra, lb, rb) = split_table(t, "split")?;
            MatchedPair {
                a: Algebra::Associative(ta),
                b: Algebra::Associative(tb),
                a_on_b: ActionFamily::Associative { l: la, r: ra },
                b_on_a: ActionFamily::Associative { l: lb, r: rb },
            }
        }
        Algebra::Dendriform { succ, prec } => {
            let (sa, sb, lsa, rsa, lsb, rsb) = split_table(succ, "split-succ")?;
            let (pa, pb, lpa, rpa, lpb, rpb) = split_table(prec, "split-prec")?;
            MatchedPair {
                a: Algebra::Dendriform { succ: sa, prec: pa },
                b: Algebra::Dendriform { succ: sb, prec: pb },
                a_on_b: ActionFamily::Dendriform {
                    lsucc: lsa,
                    rsucc: rsa,
                    lprec: lpa,
                    rprec: rpa,
                },
                b_on_a: ActionFamily::Dendriform {
                    lsucc: lsb,
                    rsucc: rsb,
                    lprec: lpb,
                    rprec: rpb,
                },
            }
        }
        Algebra::Lie(t) => {
            // [x, b] = ρ(x)b − μ(b)x: the extracted pair builder gives the
            // l/r decomposition, so ρ = l-part and μ = −(r'-part read as l').
            let (ta, tb, la, _ra, lb, _rb) = split_table(t, "split")?;
            MatchedPair {
                a: Algebra::Lie(ta),
                b: Algebra::Lie(tb),
                a_on_b: ActionFamily::Lie { rho: la },
                b_on_a: ActionFamily::Lie { rho: lb },
            }
        }
        Algebra::PreLie(_) => {
            return Err(Error::Kind("matched pairs are not defined for kind prelie".into()))
        }
    };

    cert.absorb(check_matched_pair(&mp)?);

    // Reconstruction: the bicrossed product must reproduce the permuted input.
    if cert.passed() {
        let rebuilt = bicross_product(&mp)?;
        let mut permuted = alg.clone();
        let permute = |t: &Table<T>| -> Result<Table<T>> {
            let mut out = Table::zeros(n)?;
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        out.set(i, j, k, t.get(perm[i], perm[j], perm[k]).clone());
                    }
                }
            }
            Ok(out)
        };
        permuted = match &permuted {
            Algebra::Associative(t) => Algebra::Associative(permute(t)?),
            Algebra::Lie(t) => Algebra::Lie(permute(t)?),
            Algebra::PreLie(t) => Algebra::PreLie(permute(t)?),
            Algebra::Dendriform { succ, prec } => {
                Algebra::Dendriform { succ: permute(succ)?, prec: permute(prec)? }
            }
        };
        if rebuilt != permuted {
            cert.record("reconstruction", &[], &"mismatch");
        }
    }
    Ok((mp, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{dual_bimodule, semidirect};
    use crate::scalar::{int, Rat};

    fn sample_assoc() -> Table<Rat> {
        Table::from_entries(2, &[(1, 0, 0, int(1)), (1, 1, 1, int(1))]).unwrap()
    }

    /// A semidirect sum is the matched pair with the second action trivial.
    fn semidirect_pair() -> MatchedPair<Rat> {
        let a = Algebra::Associative(sample_assoc());
        let fam = dual_bimodule(&ActionFamily::regular(&a)).unwrap();
        MatchedPair {
            a: a.clone(),
            b: Algebra::Associative(Table::zeros(2).unwrap()),
            a_on_b: fam,
            b_on_a: ActionFamily::Associative { l: Rep::zero(2, 2), r: Rep::zero(2, 2) },
        }
    }

    #[test]
    fn semidirect_sum_is_a_matched_pair() {
        let mp = semidirect_pair();
        assert!(check_matched_pair(&mp).unwrap().passed());
        let big = bicross_product(&mp).unwrap();
        assert!(big.check_axioms().unwrap().passed());
        // Bicross with a trivial second action equals the semidirect sum.
        let sd = semidirect(&mp.a, &mp.a_on_b).unwrap();
        assert_eq!(big, sd);
    }

    #[test]
    fn broken_action_is_caught() {
        let mut mp = semidirect_pair();
        // A non-bimodule action: l = R, r = L violates l(xy) = l(x)l(y).
        mp.a_on_b = ActionFamily::Associative {
            l: Rep::right_regular(&sample_assoc()),
            r: Rep::left_regular(&sample_assoc()),
        };
        let cert = check_matched_pair(&mp).unwrap();
        assert!(!cert.passed());
    }

    #[test]
    fn decompose_roundtrip_on_semidirect_sum() {
        let mp = semidirect_pair();
        let big = bicross_product(&mp).unwrap();
        let (mp2, cert) = decompose_check(&big, &[0, 1]).unwrap();
        assert!(cert.passed(), "{:?}", cert.first_witness);
        assert_eq!(mp2.a, mp.a);
        assert_eq!(mp2.b, mp.b);
        assert_eq!(mp2.a_on_b, mp.a_on_b);
    }

    #[test]
    fn decompose_direct_sum_of_algebras() {
        // A ⊕ A with zero mixed products: both actions trivial, everything passes.
        let t = sample_assoc();
        let mut big = Table::zeros(4).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    big.set(i, j, k, t.get(i, j, k).clone());
                    big.set(i + 2, j + 2, k + 2, t.get(i, j, k).clone());
                }
            }
        }
        let alg = Algebra::Associative(big);
        let (_, cert) = decompose_check(&alg, &[0, 1]).unwrap();
        assert!(cert.passed());
        // A non-subalgebra subset is reported, not an error: {e1, e2} has
        // e1·e1 = e1? (e1 is in the span) — use {e0, e2}: e2·e2 = e2 stays, but
        // mixed closure of products inside the span holds; pick {e1} alone:
        // e1·e1 = e1 stays in span, while e1·e0 = e0 makes the action maps
        // nontrivial and the pair still checks out (it is a matched pair).
        let (_, cert2) = decompose_check(&alg, &[1]).unwrap();
        assert!(cert2.passed());
    }

    #[test]
    fn lie_matched_pair_roundtrip() {
        // Two-dimensional nonabelian Lie algebra [e1, e0] = e0, split at {e0}.
        let br = sample_assoc().commutator();
        let alg = Algebra::Lie(br);
        let (mp, cert) = decompose_check(&alg, &[0]).unwrap();
        assert!(cert.passed(), "{:?}", cert.first_witness);
        let rebuilt = bicross_product(&mp).unwrap();
        assert!(rebuilt.check_axioms().unwrap().passed());
    }

    #[test]
    fn dendriform_matched_pair_via_dual_family() {
        let a = Algebra::Dendriform {
            succ: sample_assoc(),
            prec: Table::zeros(2).unwrap(),
        };
        let fam = dual_bimodule(&ActionFamily::regular(&a)).unwrap();
        let mp = MatchedPair {
            a: a.clone(),
            b: Algebra::Dendriform {
                succ: Table::zeros(2).unwrap(),
                prec: Table::zeros(2).unwrap(),
            },
            a_on_b: fam,
            b_on_a: ActionFamily::Dendriform {
                lsucc: Rep::zero(2, 2),
                rsucc: Rep::zero(2, 2),
                lprec: Rep::zero(2, 2),
                rprec: Rep::zero(2, 2),
            },
        };
        assert!(check_matched_pair(&mp).unwrap().passed());
        let big = bicross_product(&mp).unwrap();
        assert!(big.check_axioms().unwrap().passed());
        let (_, cert) = decompose_check(&big, &[0, 1]).unwrap();
        assert!(cert.passed());
    }
}
