//! The bundled corpus: a fixed list of small named algebras and bialgebras
//! used by the acceptance suite, the CLI round-trip check and the tests.
//!
//! Everything here is deterministic: construction order, names and all
//! coefficients are fixed, so serialized corpus output is byte-stable.

use crate::algebra::{Algebra, Table};
use crate::bialgebra::Bialgebra;
use crate::error::Result;
use crate::exactlin::{Matrix, Tensor2};
use crate::forms::{dendriform_from_connes, dendriform_from_form, BilinearForm};
use crate::scalar::{int, Rat};
use crate::yangbaxter::{coboundary_bialgebra, coboundary_bialgebra_pair};

/// A named corpus item.
pub type Named<A> = (String, A);

fn entry(name: &str, a: Algebra<Rat>) -> Named<Algebra<Rat>> {
    (name.to_string(), a)
}

fn table(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Table<Rat> {
    let converted: Vec<_> =
        entries.iter().map(|(i, j, k, v)| (*i, *j, *k, int(*v))).collect();
    Table::from_entries(dim, &converted).expect("static corpus table")
}

/// The two-dimensional algebra with `e₁e₀ = e₀`, `e₁e₁ = e₁`.
pub fn l2() -> Table<Rat> {
    table(2, &[(1, 0, 0, 1), (1, 1, 1, 1)])
}

/// The two-dimensional algebra with `e₀e₀ = e₁` (two-step nilpotent).
pub fn nilpotent2() -> Table<Rat> {
    table(2, &[(0, 0, 1, 1)])
}

/// Associative corpus: eleven algebras of dimensions 1–4, including zero
/// algebras, the standard two-dimensional non-commutative algebra `l2` and
/// the two-step nilpotent one.
pub fn associative_corpus() -> Vec<Named<Algebra<Rat>>> {
    let mut out = Vec::new();
    out.push(entry("zero-1", Algebra::Associative(table(1, &[]))));
    out.push(entry("unit-1", Algebra::Associative(table(1, &[(0, 0, 0, 1)]))));
    out.push(entry("zero-2", Algebra::Associative(table(2, &[]))));
    out.push(entry("l2", Algebra::Associative(l2())));
    out.push(entry("nilpotent-2", Algebra::Associative(nilpotent2())));
    out.push(entry(
        "split-units-2",
        Algebra::Associative(table(2, &[(0, 0, 0, 1), (1, 1, 1, 1)])),
    ));
    // k[x]/x³ with basis 1, x, x²
    out.push(entry(
        "truncated-poly-3",
        Algebra::Associative(table(
            3,
            &[
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (1, 0, 1, 1),
                (0, 2, 2, 1),
                (2, 0, 2, 1),
                (1, 1, 2, 1),
            ],
        )),
    ));
    // strictly upper-triangular 3×3 matrices with basis E₀₁, E₁₂, E₀₂
    out.push(entry(
        "strict-upper-3",
        Algebra::Associative(table(3, &[(0, 1, 2, 1)])),
    ));
    // l2 extended by a central unit line
    out.push(entry(
        "l2-plus-unit",
        Algebra::Associative(table(3, &[(1, 0, 0, 1), (1, 1, 1, 1), (2, 2, 2, 1)])),
    ));
    // full 2×2 matrix algebra with basis E₁₁, E₁₂, E₂₁, E₂₂
    out.push(entry(
        "mat-2",
        Algebra::Associative(table(
            4,
            &[
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (1, 2, 0, 1),
                (1, 3, 1, 1),
                (2, 0, 2, 1),
                (2, 1, 3, 1),
                (3, 2, 2, 1),
                (3, 3, 3, 1),
            ],
        )),
    ));
    // k[x]/x⁴ with basis 1, x, x², x³
    let mut poly4 = Vec::new();
    for i in 0..4usize {
        for j in 0..4usize {
            if i + j < 4 {
                poly4.push((i, j, i + j, 1i64));
            }
        }
    }
    out.push(entry("truncated-poly-4", Algebra::Associative(table(4, &poly4))));
    out
}

fn succ_embedding(t: Table<Rat>) -> Algebra<Rat> {
    let dim = t.dim();
    Algebra::Dendriform { succ: t, prec: Table::zeros(dim).expect("corpus dim") }
}

fn prec_embedding(t: Table<Rat>) -> Algebra<Rat> {
    let dim = t.dim();
    Algebra::Dendriform { succ: Table::zeros(dim).expect("corpus dim"), prec: t }
}

/// The antisymmetric nondegenerate gram `[[0,1],[-1,0]]` on a dim-2 space.
fn omega2() -> BilinearForm<Rat> {
    let mut g = Matrix::zeros(2, 2);
    g.set(0, 1, int(1));
    g.set(1, 0, int(-1));
    BilinearForm::new(g).expect("square gram")
}

/// Dendriform corpus: nine algebras of dimensions 1–3, including both trivial
/// embeddings of associative products (`≻ = ·` / `≺ = ·`), a structure split
/// off a cyclic cocycle, and one split off a nondegenerate form on the
/// nilpotent algebra.
pub fn dendriform_corpus() -> Vec<Named<Algebra<Rat>>> {
    let mut out = Vec::new();
    out.push(entry("dzero-1", Algebra::Dendriform {
        succ: table(1, &[]),
        prec: table(1, &[]),
    }));
    out.push(entry("unit-succ-1", succ_embedding(table(1, &[(0, 0, 0, 1)]))));
    out.push(entry("unit-prec-1", prec_embedding(table(1, &[(0, 0, 0, 1)]))));
    out.push(entry("dzero-2", Algebra::Dendriform {
        succ: table(2, &[]),
        prec: table(2, &[]),
    }));
    out.push(entry("l2-succ", succ_embedding(l2())));
    out.push(entry("l2-prec", prec_embedding(l2())));
    out.push(entry("nilpotent-succ-2", succ_embedding(nilpotent2())));
    // split of the l2 product through its cyclic antisymmetric cocycle
    let (succ, prec) = dendriform_from_connes(&l2(), &omega2())
        .expect("the corpus cocycle is cyclic and nondegenerate");
    out.push(entry("connes-split-l2", Algebra::Dendriform { succ, prec }));
    out.push(entry("poly3-succ", succ_embedding(table(
        3,
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
            (1, 1, 2, 1),
        ],
    ))));
    out
}

/// The dendriform pair split off the nilpotent dim-2 algebra by the
/// nondegenerate (non-cyclic) form `ω(e₀, e₁) = 1, ω(e₁, e₀) = -1`; used by
/// the bridge acceptance instance.
pub fn nilpotent_form_split() -> Result<Algebra<Rat>> {
    let (succ, prec) = dendriform_from_form(&nilpotent2(), &omega2())?;
    Ok(Algebra::Dendriform { succ, prec })
}

/// The antisymmetric solution `e₀⊗e₁ − e₁⊗e₀` of the associative equation on
/// `l2`.
pub fn l2_solution() -> Tensor2<Rat> {
    let mut m = Matrix::zeros(2, 2);
    m.set(0, 1, int(1));
    m.set(1, 0, int(-1));
    Tensor2::from_grid(m)
}

/// Associative bialgebra corpus: trivial comultiplications on small algebras
/// plus the coboundary bialgebra of the `l2` solution.
pub fn aib_corpus() -> Vec<Named<Bialgebra<Rat>>> {
    let trivial = |name: &str, t: Table<Rat>| -> Named<Bialgebra<Rat>> {
        let dim = t.dim();
        (name.to_string(), Bialgebra::Aib {
            base: t,
            delta: crate::bialgebra::Comult::zeros(dim),
        })
    };
    let coboundary = coboundary_bialgebra(&Algebra::Associative(l2()), &l2_solution())
        .expect("corpus coboundary");
    vec![
        trivial("aib-zero-2", table(2, &[])),
        trivial("aib-l2-trivial", l2()),
        trivial("aib-nilpotent-2", nilpotent2()),
        ("aib-l2-coboundary".to_string(), coboundary),
    ]
}

/// Dendriform bialgebra corpus: trivial comultiplications plus the coboundary
/// pair of the symmetric solution `e₁⊗e₁` on the `≻`-embedded `l2`.
pub fn ddb_corpus() -> Vec<Named<Bialgebra<Rat>>> {
    let trivial = |name: &str, a: Algebra<Rat>| -> Named<Bialgebra<Rat>> {
        let dim = a.dim();
        let (succ, prec) = match a {
            Algebra::Dendriform { succ, prec } => (succ, prec),
            _ => unreachable!("dendriform corpus"),
        };
        (name.to_string(), Bialgebra::Ddb {
            succ,
            prec,
            delta_succ: crate::bialgebra::Comult::zeros(dim),
            delta_prec: crate::bialgebra::Comult::zeros(dim),
        })
    };
    let mut m = Matrix::zeros(2, 2);
    m.set(1, 1, int(1));
    let r = Tensor2::from_grid(m);
    let coboundary = coboundary_bialgebra_pair(
        &succ_embedding(l2()),
        &r.swap().neg(),
        &r,
    )
    .expect("corpus coboundary pair");
    vec![
        trivial("ddb-zero-2", Algebra::Dendriform {
            succ: table(2, &[]),
            prec: table(2, &[]),
        }),
        trivial("ddb-l2-succ-trivial", succ_embedding(l2())),
        ("ddb-l2-coboundary".to_string(), coboundary),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::check_bialgebra;

    #[test]
    fn corpus_sizes_and_dimension_ranges() {
        let assoc = associative_corpus();
        assert!(assoc.len() >= 10);
        assert!(assoc.iter().all(|(_, a)| (1..=4).contains(&a.dim())));
        let dend = dendriform_corpus();
        assert!(dend.len() >= 8);
        assert!(dend.iter().all(|(_, a)| (1..=3).contains(&a.dim())));
    }

    #[test]
    fn corpus_algebras_satisfy_their_axioms() {
        for (name, a) in associative_corpus().iter().chain(dendriform_corpus().iter()) {
            assert!(a.check_axioms().unwrap().passed(), "{name}");
        }
        assert!(nilpotent_form_split().unwrap().check_axioms().unwrap().passed());
    }

    #[test]
    fn corpus_bialgebras_pass() {
        for (name, b) in aib_corpus().iter().chain(ddb_corpus().iter()) {
            assert!(check_bialgebra(b).unwrap().passed(), "{name}");
        }
    }

    #[test]
    fn corpus_names_are_unique() {
        let mut names: Vec<String> = associative_corpus()
            .into_iter()
            .chain(dendriform_corpus())
            .map(|(n, _)| n)
            .chain(aib_corpus().into_iter().map(|(n, _)| n))
            .chain(ddb_corpus().into_iter().map(|(n, _)| n))
            .collect();
        let len = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), len);
    }
}
