//! Command-line surface for the exact-arithmetic algebra verifier.
//!
//! Every command prints one JSON document to standard output and exits with
//! `0` when the certificate passes, `1` when it fails, and `2` on usage,
//! parse or kind errors.  Output is byte-identical for identical inputs and
//! seed.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use algdouble::algebra::{commutator_lie, dendriform_to_prelie};
use algdouble::bialgebra::{
    bialgebra_functor, check_bialgebra, double_construction, Bialgebra, FunctorTarget,
};
use algdouble::cert::Certificate;
use algdouble::error::Error;
use algdouble::fileio::{
    algebra_to_file, any_from_json, bialgebra_to_file, show_rat, tensor_from_json,
    tensor_to_file, AnyFile,
};
use algdouble::forms::{check_form, BilinearForm, FormLaw};
use algdouble::suite::run_suite;
use algdouble::yangbaxter::{
    build_double, canonical_solution, residual, CanonicalVariant, DoubleKind, EquationKind,
};
use algdouble::{Algebra, Rat, CONVENTION};

#[derive(Parser)]
#[command(
    name = "algdouble",
    about = "Exact verification of structure-constant algebras, bialgebras, \
             doubles and Yang-Baxter-type equations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of an algebra file or the compatibility of a
    /// bialgebra file; with --law and --form, check a bilinear-form law.
    Check {
        /// Path to an algebra, tensor or bialgebra JSON file
        file: String,
        /// Form law to verify (invariant, cyclic, dendriform-2, prelie-2,
        /// lie-invariant, lie-2); requires --form
        #[arg(long)]
        law: Option<String>,
        /// Tensor file whose coefficient matrix is the Gram matrix of the
        /// form checked by --law
        #[arg(long)]
        form: Option<String>,
    },
    /// Evaluate the residual of a quadratic tensor equation on an algebra.
    Residual {
        /// Equation: aybe, d, cybe or s
        #[arg(long)]
        eq: String,
        /// Path to the algebra JSON file
        algebra: String,
        /// Path to the tensor JSON file
        tensor: String,
    },
    /// Build a double of a bialgebra and certify it.
    Double {
        /// Kind of double: frobenius, connes, ad or dd
        #[arg(long = "type")]
        which: String,
        /// Path to the bialgebra JSON file
        bialgebra: String,
    },
    /// Derive an algebra (or bialgebra) of another kind through the
    /// standard functors.
    Derive {
        /// Target kind: assoc, prelie or lie
        #[arg(long)]
        functor: String,
        /// Path to the algebra or bialgebra JSON file
        file: String,
    },
    /// Build the canonical solution of an equation on the doubled space.
    Canonical {
        /// Equation: aybe, d, cybe or s
        #[arg(long)]
        eq: String,
        /// Path to the algebra JSON file
        file: String,
    },
    /// Run a named acceptance suite deterministically.
    Certify {
        /// Suite name (paper-core)
        #[arg(long)]
        suite: String,
        /// Seed for the randomized sweeps
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}")))
}

fn parse_eq(token: &str) -> Result<EquationKind, Error> {
    match token {
        "d" => Ok(EquationKind::Deq),
        "s" => Ok(EquationKind::Seq),
        other => EquationKind::parse(other),
    }
}

fn emit(command: &str, cert: &Certificate, extra: Vec<(&str, Value)>) -> ExitCode {
    let mut doc = serde_json::Map::new();
    doc.insert("convention".into(), json!(CONVENTION));
    doc.insert("command".into(), json!(command));
    doc.insert("certificate".into(), serde_json::to_value(cert).expect("serializable"));
    for (k, v) in extra {
        doc.insert(k.into(), v);
    }
    println!("{}", serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable"));
    if cert.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Check { file, law, form } => {
            let parsed = any_from_json(&read(&file)?)?;
            match (law, form) {
                (None, None) => {
                    let cert = match &parsed {
                        AnyFile::Algebra(a) => a.check_axioms()?,
                        AnyFile::Bialgebra(b) => check_bialgebra(b)?,
                        AnyFile::Tensor(_) => Certificate::new("tensor-parse"),
                    };
                    Ok(emit("check", &cert, vec![]))
                }
                (Some(law), Some(form)) => {
                    let alg = match &parsed {
                        AnyFile::Algebra(a) => a,
                        _ => {
                            return Err(Error::Kind(
                                "--law applies to an algebra file".into(),
                            ))
                        }
                    };
                    let law = FormLaw::parse(&law)?;
                    let gram = tensor_from_json(&read(&form)?)?;
                    let form = BilinearForm::new(gram.as_map().clone())?;
                    let cert = check_form(alg, &form, law)?;
                    Ok(emit("check", &cert, vec![]))
                }
                _ => Err(Error::Invalid("--law and --form must be given together".into())),
            }
        }
        Command::Residual { eq, algebra, tensor } => {
            let kind = parse_eq(&eq)?;
            let alg = match any_from_json(&read(&algebra)?)? {
                AnyFile::Algebra(a) => a,
                _ => return Err(Error::Kind("expected an algebra file".into())),
            };
            let r = tensor_from_json(&read(&tensor)?)?;
            let res = residual(kind, &alg, &r)?;
            let mut cert = Certificate::new(format!("residual-{}", kind.name()))
                .with_convention(true);
            let mut entries: Vec<Value> = Vec::new();
            let n = res.dim();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let v = res.get(i, j, k);
                        if !num_is_zero(v) {
                            cert.record("residual", &[i, j, k], v);
                            entries.push(json!([i, j, k, show_rat(v)]));
                        }
                    }
                }
            }
            Ok(emit("residual", &cert, vec![("residual_entries", Value::Array(entries))]))
        }
        Command::Double { which, bialgebra } => {
            let b = match any_from_json(&read(&bialgebra)?)? {
                AnyFile::Bialgebra(b) => b,
                _ => return Err(Error::Kind("expected a bialgebra file".into())),
            };
            match which.as_str() {
                "frobenius" | "connes" => {
                    let wanted_aib = which == "frobenius";
                    if wanted_aib != matches!(b, Bialgebra::Aib { .. }) {
                        return Err(Error::Kind(format!(
                            "--type {which} expects the matching bialgebra kind"
                        )));
                    }
                    let (double, form, cert) = double_construction(&b)?;
                    let gram = algdouble::exactlin::Tensor2::from_grid(form.gram().clone());
                    Ok(emit(
                        "double",
                        &cert,
                        vec![
                            ("double", serde_json::to_value(algebra_to_file(&double)).unwrap()),
                            ("form", serde_json::to_value(tensor_to_file(&gram)?).unwrap()),
                        ],
                    ))
                }
                "ad" | "dd" => {
                    let kind = if which == "ad" { DoubleKind::Ad } else { DoubleKind::Dd };
                    let (double, cert) = build_double(&b, kind)?;
                    Ok(emit(
                        "double",
                        &cert,
                        vec![(
                            "double",
                            serde_json::to_value(bialgebra_to_file(&double)).unwrap(),
                        )],
                    ))
                }
                other => Err(Error::Invalid(format!("unknown double type `{other}`"))),
            }
        }
        Command::Derive { functor, file } => {
            let parsed = any_from_json(&read(&file)?)?;
            match parsed {
                AnyFile::Algebra(a) => {
                    let derived = match (functor.as_str(), &a) {
                        ("assoc", Algebra::Dendriform { succ, prec }) => {
                            Algebra::Associative(succ.sum(prec)?)
                        }
                        ("prelie", Algebra::Dendriform { succ, prec }) => {
                            Algebra::PreLie(dendriform_to_prelie(succ, prec)?)
                        }
                        ("lie", Algebra::Associative(t)) | ("lie", Algebra::PreLie(t)) => {
                            Algebra::Lie(commutator_lie(t))
                        }
                        ("lie", Algebra::Dendriform { succ, prec }) => {
                            Algebra::Lie(commutator_lie(&succ.sum(prec)?))
                        }
                        (f, _) => {
                            return Err(Error::Kind(format!(
                                "functor `{f}` does not apply to this algebra kind"
                            )))
                        }
                    };
                    let cert = derived.check_axioms()?;
                    Ok(emit(
                        "derive",
                        &cert,
                        vec![(
                            "derived",
                            serde_json::to_value(algebra_to_file(&derived)).unwrap(),
                        )],
                    ))
                }
                AnyFile::Bialgebra(b) => {
                    let target = match functor.as_str() {
                        "lie" => FunctorTarget::LieBi,
                        "prelie" => FunctorTarget::PreLieBi,
                        f => {
                            return Err(Error::Kind(format!(
                                "functor `{f}` does not apply to a bialgebra file"
                            )))
                        }
                    };
                    let derived = bialgebra_functor(&b, target)?;
                    let cert = check_bialgebra(&derived)?;
                    Ok(emit(
                        "derive",
                        &cert,
                        vec![(
                            "derived",
                            serde_json::to_value(bialgebra_to_file(&derived)).unwrap(),
                        )],
                    ))
                }
                AnyFile::Tensor(_) => Err(Error::Kind("expected an algebra file".into())),
            }
        }
        Command::Canonical { eq, file } => {
            let kind = parse_eq(&eq)?;
            let alg = match any_from_json(&read(&file)?)? {
                AnyFile::Algebra(a) => a,
                _ => return Err(Error::Kind("expected an algebra file".into())),
            };
            let variant = match kind {
                EquationKind::Aybe => CanonicalVariant::AybeRight,
                EquationKind::Deq => CanonicalVariant::Deq,
                EquationKind::Cybe => CanonicalVariant::Cybe,
                EquationKind::Seq => CanonicalVariant::Seq,
            };
            let (ambient, r, _) = canonical_solution(&alg, variant)?;
            let cert = Certificate::new(format!("canonical-{}", kind.name()))
                .with_convention(true);
            Ok(emit(
                "canonical",
                &cert,
                vec![
                    ("ambient", serde_json::to_value(algebra_to_file(&ambient)).unwrap()),
                    ("tensor", serde_json::to_value(tensor_to_file(&r)?).unwrap()),
                ],
            ))
        }
        Command::Certify { suite, seed } => {
            let certs = run_suite(&suite, seed)?;
            let all_pass = certs.iter().all(|c| c.passed());
            let mut doc = serde_json::Map::new();
            doc.insert("convention".into(), json!(CONVENTION));
            doc.insert("command".into(), json!("certify"));
            doc.insert("suite".into(), json!(suite));
            doc.insert("seed".into(), json!(seed));
            doc.insert("passed".into(), json!(all_pass));
            doc.insert(
                "certificates".into(),
                serde_json::to_value(&certs).expect("serializable"),
            );
            println!(
                "{}",
                serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable")
            );
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn num_is_zero(v: &Rat) -> bool {
    *v == algdouble::rat(0, 1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
