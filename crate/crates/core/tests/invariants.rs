//! Cross-module invariants: operator forms of the quadratic equations,
//! residual symmetries, canonical-solution reproduction by identity-operator
//! lifts, block restriction of the split double, and the commutator behaviour
//! of the double forms.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use algdouble::actions::{dual_bimodule, semidirect, ActionFamily, Rep};
use algdouble::algebra::{commutator_lie, dendriform_to_prelie, Algebra, Table};
use algdouble::bialgebra::double_construction;
use algdouble::corpus::{
    aib_corpus, associative_corpus, ddb_corpus, dendriform_corpus, l2, l2_solution,
};
use algdouble::exactlin::{Matrix, Tensor2};
use algdouble::forms::{
    check_form, dendriform_from_connes, natural_form, FormLaw, NaturalForm,
};
use algdouble::matched::{bicross_product, check_matched_pair};
use algdouble::scalar::{int, Rat};
use algdouble::yangbaxter::{
    canonical_solution, induced_dual_products, lift_o_operator, residual, slot_product,
    CanonicalVariant, EquationKind, LiftFlavor, OOperatorData,
};

fn rat_range(rng: &mut ChaCha8Rng) -> Rat {
    int(rng.gen_range(-2..=2))
}

fn col(m: &Matrix<Rat>, j: usize) -> Vec<Rat> {
    (0..m.rows()).map(|i| m.get(i, j).clone()).collect()
}

fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(|x| *x == int(0))
}

fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn random_antisym(rng: &mut ChaCha8Rng, n: usize) -> Tensor2<Rat> {
    let mut grid = Matrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rat_range(rng);
            grid.set(i, j, v.clone());
            grid.set(j, i, -v);
        }
    }
    Tensor2::from_grid(grid)
}

fn random_sym(rng: &mut ChaCha8Rng, n: usize) -> Tensor2<Rat> {
    let mut grid = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = rat_range(rng);
            grid.set(i, j, v.clone());
            grid.set(j, i, v);
        }
    }
    Tensor2::from_grid(grid)
}

/// An antisymmetric tensor solves the associative equation exactly when
/// `r(a*)·r(b*) = r(R*(r(a*))b* + L*(r(b*))a*)` for all dual basis pairs.
#[test]
fn operator_form_matches_the_associative_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(241);
    let pool: Vec<Table<Rat>> = associative_corpus()
        .into_iter()
        .filter(|(_, a)| a.dim() <= 3)
        .map(|(_, a)| a.table().unwrap().clone())
        .collect();
    let (mut passes, mut fails) = (0usize, 0usize);
    for it in 0..60 {
        let t = pool[it % pool.len()].clone();
        let n = t.dim();
        let r = if it % 12 == 0 && n == 2 {
            l2_solution()
        } else if it % 12 == 1 {
            Tensor2::zeros(n, n)
        } else {
            random_antisym(&mut rng, n)
        };
        let solves = residual(EquationKind::Aybe, &Algebra::Associative(t.clone()), &r)
            .unwrap()
            .is_zero();
        let grid = r.as_map();
        let mut operator = true;
        'pairs: for i in 0..n {
            for j in 0..n {
                let (ri, rj) = (col(grid, i), col(grid, j));
                let lhs = t.product(&ri, &rj).unwrap();
                // dual actions act on dual coordinates by the transposes
                let arg = vec_add(
                    &t.right_mult_vec(&ri).unwrap().transpose().mul_vec(&{
                        let mut e = vec![int(0); n];
                        e[j] = int(1);
                        e
                    }).unwrap(),
                    &t.left_mult_vec(&rj).unwrap().transpose().mul_vec(&{
                        let mut e = vec![int(0); n];
                        e[i] = int(1);
                        e
                    }).unwrap(),
                );
                let rhs = grid.mul_vec(&arg).unwrap();
                if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                    operator = false;
                    break 'pairs;
                }
            }
        }
        assert_eq!(solves, operator, "iteration {it}");
        if solves {
            passes += 1;
        } else {
            fails += 1;
        }
    }
    assert!(passes > 0 && fails > 0, "coverage: {passes} passes, {fails} fails");
}

/// A symmetric tensor solves the dendriform equation exactly when
/// `r(a*)*r(b*) = r(R≺*(r(a*))b* + L≻*(r(b*))a*)` for all dual basis pairs.
#[test]
fn operator_form_matches_the_dendriform_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(242);
    let pool: Vec<(Table<Rat>, Table<Rat>)> = dendriform_corpus()
        .into_iter()
        .filter(|(_, a)| a.dim() <= 3)
        .map(|(_, a)| match a {
            Algebra::Dendriform { succ, prec } => (succ, prec),
            _ => unreachable!(),
        })
        .collect();
    let mut known = Matrix::zeros(2, 2);
    known.set(1, 1, int(1));
    let known = Tensor2::from_grid(known);
    let (mut passes, mut fails) = (0usize, 0usize);
    for it in 0..60 {
        let (succ, prec) = pool[it % pool.len()].clone();
        let n = succ.dim();
        let alg = Algebra::Dendriform { succ: succ.clone(), prec: prec.clone() };
        // `known` solves the equation on the ≻-embedded two-dimensional algebra
        let r = if it % 12 == 0 && n == 2 && prec.is_zero() {
            known.clone()
        } else if it % 12 == 1 {
            Tensor2::zeros(n, n)
        } else {
            random_sym(&mut rng, n)
        };
        let solves = residual(EquationKind::Deq, &alg, &r).unwrap().is_zero();
        let star = succ.sum(&prec).unwrap();
        let grid = r.as_map();
        let mut operator = true;
        'pairs: for i in 0..n {
            for j in 0..n {
                let (ri, rj) = (col(grid, i), col(grid, j));
                let lhs = star.product(&ri, &rj).unwrap();
                let arg = vec_add(
                    &prec.right_mult_vec(&ri).unwrap().transpose().mul_vec(&{
                        let mut e = vec![int(0); n];
                        e[j] = int(1);
                        e
                    }).unwrap(),
                    &succ.left_mult_vec(&rj).unwrap().transpose().mul_vec(&{
                        let mut e = vec![int(0); n];
                        e[i] = int(1);
                        e
                    }).unwrap(),
                );
                let rhs = grid.mul_vec(&arg).unwrap();
                if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                    operator = false;
                    break 'pairs;
                }
            }
        }
        assert_eq!(solves, operator, "iteration {it}");
        if solves {
            passes += 1;
        } else {
            fails += 1;
        }
    }
    assert!(passes > 0 && fails > 0, "coverage: {passes} passes, {fails} fails");
}

/// For antisymmetric tensors, swapping the outer legs carries the residual of
/// one form of the associative equation to the residual of the other,
/// entry-exactly.
#[test]
fn outer_swap_relates_the_two_associative_residual_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(243);
    for (_, a) in associative_corpus().into_iter().filter(|(_, a)| a.dim() <= 3) {
        let t = a.table().unwrap().clone();
        let n = t.dim();
        for _ in 0..20 {
            let r = random_antisym(&mut rng, n);
            let first = residual(EquationKind::Aybe, &a, &r).unwrap();
            // r₁₃r₁₂ + r₂₃r₁₃ − r₁₂r₂₃
            let second = slot_product(&t, &r, (0, 2), &r, (0, 1))
                .unwrap()
                .add(&slot_product(&t, &r, (1, 2), &r, (0, 2)).unwrap())
                .unwrap()
                .sub(&slot_product(&t, &r, (0, 1), &r, (1, 2)).unwrap())
                .unwrap();
            assert_eq!(first.permute([2, 1, 0]), second);
        }
    }
}

/// The three equivalent forms of the dendriform equation vanish together on
/// symmetric tensors.
#[test]
fn dendriform_equation_equivalent_forms_share_zero_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(244);
    let mut known = Matrix::zeros(2, 2);
    known.set(1, 1, int(1));
    let known = Tensor2::from_grid(known);
    let (mut passes, mut fails) = (0usize, 0usize);
    for (_, a) in dendriform_corpus().into_iter().filter(|(_, a)| a.dim() <= 3) {
        let (succ, prec) = match &a {
            Algebra::Dendriform { succ, prec } => (succ.clone(), prec.clone()),
            _ => unreachable!(),
        };
        let n = succ.dim();
        let star = succ.sum(&prec).unwrap();
        let mut tensors = vec![Tensor2::zeros(n, n)];
        if n == 2 && prec.is_zero() {
            tensors.push(known.clone());
        }
        for _ in 0..20 {
            tensors.push(random_sym(&mut rng, n));
        }
        for r in tensors {
            let first = residual(EquationKind::Deq, &a, &r).unwrap().is_zero();
            // r₂₃*r₁₂ − r₁₂≺r₁₃ − r₁₃≻r₂₃
            let second = slot_product(&star, &r, (1, 2), &r, (0, 1))
                .unwrap()
                .sub(&slot_product(&prec, &r, (0, 1), &r, (0, 2)).unwrap())
                .unwrap()
                .sub(&slot_product(&succ, &r, (0, 2), &r, (1, 2)).unwrap())
                .unwrap()
                .is_zero();
            // r₁₃*r₂₃ − r₂₃≺r₁₂ − r₁₂≻r₁₃
            let third = slot_product(&star, &r, (0, 2), &r, (1, 2))
                .unwrap()
                .sub(&slot_product(&prec, &r, (1, 2), &r, (0, 1)).unwrap())
                .unwrap()
                .sub(&slot_product(&succ, &r, (0, 1), &r, (0, 2)).unwrap())
                .unwrap()
                .is_zero();
            assert_eq!(first, second);
            assert_eq!(first, third);
            if first {
                passes += 1;
            } else {
                fails += 1;
            }
        }
    }
    assert!(passes > 0 && fails > 0, "coverage: {passes} passes, {fails} fails");
}

/// Lifting the identity operator reproduces every canonical solution —
/// ambient algebra and tensor coefficient-exactly.
#[test]
fn identity_operator_lifts_reproduce_canonical_solutions() {
    for t in [l2(), algdouble::corpus::nilpotent2()] {
        let n = t.dim();
        let a = Algebra::Associative(t.clone());
        // associative, antisymmetric flavour
        let data = OOperatorData::new(
            a.clone(),
            ActionFamily::Associative { l: Rep::zero(n, n), r: Rep::right_regular(&t) },
            Matrix::identity(n),
        )
        .unwrap();
        let (ambient, tensor, _) = lift_o_operator(&data, LiftFlavor::Antisym).unwrap();
        let (want_ambient, want_tensor, _) =
            canonical_solution(&a, CanonicalVariant::AybeRight).unwrap();
        assert_eq!(ambient, want_ambient);
        assert_eq!(tensor, want_tensor);
        // associative, symmetric flavour → the ≻-embedded dendriform ambient
        let data = OOperatorData::new(
            a.clone(),
            ActionFamily::Associative { l: Rep::left_regular(&t), r: Rep::zero(n, n) },
            Matrix::identity(n),
        )
        .unwrap();
        let (ambient, tensor, _) = lift_o_operator(&data, LiftFlavor::Sym).unwrap();
        let embedded =
            Algebra::Dendriform { succ: t.clone(), prec: Table::zeros(n).unwrap() };
        let (want_ambient, want_tensor, _) =
            canonical_solution(&embedded, CanonicalVariant::Deq).unwrap();
        assert_eq!(ambient, want_ambient);
        assert_eq!(tensor, want_tensor);
    }
    // pre-Lie flavours through the sub-adjacent Lie module
    for (_, a) in dendriform_corpus() {
        let (succ, prec) = match &a {
            Algebra::Dendriform { succ, prec } => (succ, prec),
            _ => unreachable!(),
        };
        let p = dendriform_to_prelie(succ, prec).unwrap();
        let n = p.dim();
        let prelie = Algebra::PreLie(p.clone());
        let lie = Algebra::Lie(commutator_lie(&p));
        let data = OOperatorData::new(
            lie.clone(),
            ActionFamily::Lie { rho: Rep::left_regular(&p) },
            Matrix::identity(n),
        )
        .unwrap();
        let (ambient, tensor, _) = lift_o_operator(&data, LiftFlavor::Antisym).unwrap();
        let (want_ambient, want_tensor, _) =
            canonical_solution(&prelie, CanonicalVariant::Cybe).unwrap();
        assert_eq!(ambient, want_ambient);
        assert_eq!(tensor, want_tensor);
        let data = OOperatorData::new(
            lie,
            ActionFamily::Lie { rho: Rep::left_regular(&p) },
            Matrix::identity(n),
        )
        .unwrap();
        let (ambient, tensor, _) = lift_o_operator(&data, LiftFlavor::Sym).unwrap();
        let (want_ambient, want_tensor, _) =
            canonical_solution(&prelie, CanonicalVariant::Seq).unwrap();
        assert_eq!(ambient, want_ambient);
        assert_eq!(tensor, want_tensor);
    }
}

/// For a nonzero solution the induced double is a different table from the
/// zero-solution semidirect double: the dual-side products change.
#[test]
fn induced_double_differs_from_the_semidirect_double() {
    let a = Algebra::Associative(l2());
    let (induced, cert) = induced_dual_products(&a, &l2_solution(), EquationKind::Aybe).unwrap();
    assert!(cert.passed());
    let semi = semidirect(&a, &dual_bimodule(&ActionFamily::regular(&a)).unwrap()).unwrap();
    assert_ne!(induced.table().unwrap(), semi.table().unwrap());
}

/// The dendriform splitting of a verified antisymmetric-form double restricts
/// to the primal and dual blocks: products of block basis vectors have no
/// components outside their block.
#[test]
fn double_splitting_restricts_to_the_blocks() {
    for (name, b) in ddb_corpus() {
        let mp = algdouble::bialgebra::double_matched_pair(&b).unwrap();
        assert!(check_matched_pair(&mp).unwrap().passed(), "{name}");
        let double = bicross_product(&mp).unwrap();
        let n = b.dim();
        let form = natural_form::<Rat>(NaturalForm::Antisymmetric, n);
        let (succ, prec) =
            dendriform_from_connes(double.table().unwrap(), &form).unwrap();
        for tab in [&succ, &prec] {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        assert_eq!(tab.get(i, j, n + k), &int(0), "{name}: primal block");
                        assert_eq!(tab.get(n + i, n + j, k), &int(0), "{name}: dual block");
                    }
                }
            }
        }
    }
}

/// The double forms stay compatible after passing to commutators: the
/// symmetric invariant form of an associative double is invariant for the
/// commutator bracket, and the antisymmetric cyclic form of a dendriform-type
/// double is a symplectic 2-cocycle for it.
#[test]
fn double_forms_restrict_to_the_commutator_bracket() {
    for (name, b) in aib_corpus() {
        let (double, form, cert) = double_construction(&b).unwrap();
        assert!(cert.passed(), "{name}");
        let lie = Algebra::Lie(commutator_lie(double.table().unwrap()));
        assert!(check_form(&lie, &form, FormLaw::LieInvariant).unwrap().passed(), "{name}");
    }
    for (name, b) in ddb_corpus() {
        let (double, form, cert) = double_construction(&b).unwrap();
        assert!(cert.passed(), "{name}");
        let lie = Algebra::Lie(commutator_lie(double.table().unwrap()));
        assert!(check_form(&lie, &form, FormLaw::Lie2).unwrap().passed(), "{name}");
    }
}
