//! JSON file formats for algebras, tensors and bialgebras.
//!
//! All numeric values are exact rationals written as strings, `"num"` or
//! `"num/den"` in lowest terms with a positive denominator.  Serialization is
//! deterministic: entries are emitted in sorted index order, so
//! parse → serialize → parse is value-identical and serialize is
//! byte-identical for equal values.  Unknown fields are rejected.

use crate::algebra::{Algebra, Kind, Table};
use crate::bialgebra::{Bialgebra, Comult};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Tensor2};
use crate::scalar::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

/// One structure-constant entry: `eᵢ ⋄ eⱼ` has coefficient `value` at `e_k`.
pub type ProductEntry = (usize, usize, usize, String);

/// One comultiplication entry: `Δ(e_k)` has coefficient `value` at `eᵢ ⊗ eⱼ`.
pub type ComultEntry = (usize, usize, usize, String);

/// One tensor entry: coefficient `value` at `eᵢ ⊗ eⱼ`.
pub type TensorEntry = (usize, usize, String);

/// Sparse file form of an algebra.  Non-dendriform kinds use `products`;
/// dendriform algebras use `succ` and `prec` instead.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    /// `"associative"`, `"dendriform"`, `"prelie"` or `"lie"`.
    pub kind: String,
    pub dim: usize,
    /// Optional human-readable basis labels; carried through unchanged.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub products: Vec<ProductEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub succ: Vec<ProductEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub prec: Vec<ProductEntry>,
}

/// Sparse file form of an element of `A ⊗ A`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub entries: Vec<TensorEntry>,
}

/// Sparse file form of a bialgebra: a base algebra plus comultiplication
/// entries.  Single-comultiplication kinds use `comult`; the dendriform kind
/// uses `comult_succ` and `comult_prec`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraFile {
    /// `"aib"`, `"ddb"`, `"liebi"` or `"preliebi"`.
    pub kind: String,
    pub algebra: AlgebraFile,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comult: Vec<ComultEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comult_succ: Vec<ComultEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comult_prec: Vec<ComultEntry>,
}

/// Parse `"num"` or `"num/den"` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Invalid(format!("malformed rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Invalid(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(num, den))
}

/// Write a rational as `"num"` or `"num/den"` in lowest terms.
pub fn show_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn table_to_entries(t: &Table<Rat>) -> Vec<ProductEntry> {
    let n = t.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = t.get(i, j, k);
                if !v.is_zero() {
                    out.push((i, j, k, show_rat(v)));
                }
            }
        }
    }
    out
}

fn entries_to_table(dim: usize, entries: &[ProductEntry], what: &str) -> Result<Table<Rat>> {
    let mut t = Table::zeros(dim)?;
    let mut seen = std::collections::BTreeSet::new();
    for (i, j, k, v) in entries {
        if *i >= dim || *j >= dim || *k >= dim {
            return Err(Error::Invalid(format!(
                "{what} entry ({i},{j},{k}) out of range for dim {dim}"
            )));
        }
        if !seen.insert((*i, *j, *k)) {
            return Err(Error::Invalid(format!("duplicate {what} entry ({i},{j},{k})")));
        }
        t.set(*i, *j, *k, parse_rat(v)?);
    }
    Ok(t)
}

fn comult_to_entries(c: &Comult<Rat>) -> Vec<ComultEntry> {
    let n = c.dim();
    let mut out = Vec::new();
    for k in 0..n {
        let img = c.image(k);
        for i in 0..n {
            for j in 0..n {
                let v = img.get(i, j);
                if !v.is_zero() {
                    out.push((k, i, j, show_rat(v)));
                }
            }
        }
    }
    out
}

fn entries_to_comult(dim: usize, entries: &[ComultEntry], what: &str) -> Result<Comult<Rat>> {
    let mut images = vec![Tensor2::<Rat>::zeros(dim, dim); dim];
    let mut seen = std::collections::BTreeSet::new();
    for (k, i, j, v) in entries {
        if *i >= dim || *j >= dim || *k >= dim {
            return Err(Error::Invalid(format!(
                "{what} entry ({k},{i},{j}) out of range for dim {dim}"
            )));
        }
        if !seen.insert((*k, *i, *j)) {
            return Err(Error::Invalid(format!("duplicate {what} entry ({k},{i},{j})")));
        }
        images[*k].set(*i, *j, parse_rat(v)?);
    }
    Comult::new(images)
}

/// Convert an algebra to its file form (entries in sorted order).
pub fn algebra_to_file(a: &Algebra<Rat>) -> AlgebraFile {
    let mut f = AlgebraFile {
        kind: a.kind().name().to_string(),
        dim: a.dim(),
        basis: None,
        products: Vec::new(),
        succ: Vec::new(),
        prec: Vec::new(),
    };
    match a {
        Algebra::Dendriform { succ, prec } => {
            f.succ = table_to_entries(succ);
            f.prec = table_to_entries(prec);
        }
        Algebra::Associative(t) | Algebra::PreLie(t) | Algebra::Lie(t) => {
            f.products = table_to_entries(t);
        }
    }
    f
}

/// Build an algebra from its file form, validating index ranges, duplicate
/// entries, rationals, and kind/field consistency.
pub fn file_to_algebra(f: &AlgebraFile) -> Result<Algebra<Rat>> {
    let kind = Kind::parse(&f.kind)?;
    if let Some(basis) = &f.basis {
        if basis.len() != f.dim {
            return Err(Error::Invalid("basis label count != dim".into()));
        }
    }
    match kind {
        Kind::Dendriform => {
            if !f.products.is_empty() {
                return Err(Error::Invalid(
                    "dendriform files use `succ`/`prec`, not `products`".into(),
                ));
            }
            Ok(Algebra::Dendriform {
                succ: entries_to_table(f.dim, &f.succ, "succ")?,
                prec: entries_to_table(f.dim, &f.prec, "prec")?,
            })
        }
        _ => {
            if !f.succ.is_empty() || !f.prec.is_empty() {
                return Err(Error::Invalid(format!(
                    "{} files use `products`, not `succ`/`prec`",
                    kind.name()
                )));
            }
            let t = entries_to_table(f.dim, &f.products, "product")?;
            Ok(match kind {
                Kind::Associative => Algebra::Associative(t),
                Kind::PreLie => Algebra::PreLie(t),
                Kind::Lie => Algebra::Lie(t),
                Kind::Dendriform => unreachable!(),
            })
        }
    }
}

/// Convert a square tensor to its file form.
pub fn tensor_to_file(t: &Tensor2<Rat>) -> Result<TensorFile> {
    if t.left_dim() != t.right_dim() {
        return Err(Error::Dimension("tensor files hold square tensors".into()));
    }
    let n = t.left_dim();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = t.get(i, j);
            if !v.is_zero() {
                entries.push((i, j, show_rat(v)));
            }
        }
    }
    Ok(TensorFile { dim: n, entries })
}

/// Build a tensor from its file form.
pub fn file_to_tensor(f: &TensorFile) -> Result<Tensor2<Rat>> {
    let mut m = Matrix::zeros(f.dim, f.dim);
    let mut seen = std::collections::BTreeSet::new();
    for (i, j, v) in &f.entries {
        if *i >= f.dim || *j >= f.dim {
            return Err(Error::Invalid(format!(
                "tensor entry ({i},{j}) out of range for dim {}",
                f.dim
            )));
        }
        if !seen.insert((*i, *j)) {
            return Err(Error::Invalid(format!("duplicate tensor entry ({i},{j})")));
        }
        m.set(*i, *j, parse_rat(v)?);
    }
    Ok(Tensor2::from_grid(m))
}

/// Convert a bialgebra to its file form.
pub fn bialgebra_to_file(b: &Bialgebra<Rat>) -> BialgebraFile {
    let (algebra, comult, comult_succ, comult_prec) = match b {
        Bialgebra::Aib { base, delta } => (
            algebra_to_file(&Algebra::Associative(base.clone())),
            comult_to_entries(delta),
            Vec::new(),
            Vec::new(),
        ),
        Bialgebra::Ddb { succ, prec, delta_succ, delta_prec } => (
            algebra_to_file(&Algebra::Dendriform { succ: succ.clone(), prec: prec.clone() }),
            Vec::new(),
            comult_to_entries(delta_succ),
            comult_to_entries(delta_prec),
        ),
        Bialgebra::LieBi { bracket, delta } => (
            algebra_to_file(&Algebra::Lie(bracket.clone())),
            comult_to_entries(delta),
            Vec::new(),
            Vec::new(),
        ),
        Bialgebra::PreLieBi { base, delta } => (
            algebra_to_file(&Algebra::PreLie(base.clone())),
            comult_to_entries(delta),
            Vec::new(),
            Vec::new(),
        ),
    };
    BialgebraFile {
        kind: b.kind_name().to_string(),
        algebra,
        comult,
        comult_succ,
        comult_prec,
    }
}

/// Build a bialgebra from its file form, validating kind consistency between
/// the header and the embedded algebra.
pub fn file_to_bialgebra(f: &BialgebraFile) -> Result<Bialgebra<Rat>> {
    let alg = file_to_algebra(&f.algebra)?;
    let n = alg.dim();
    let single = |entries: &[ComultEntry]| -> Result<Comult<Rat>> {
        entries_to_comult(n, entries, "comult")
    };
    match (f.kind.as_str(), alg) {
        ("aib", Algebra::Associative(base)) => {
            if !f.comult_succ.is_empty() || !f.comult_prec.is_empty() {
                return Err(Error::Invalid("aib files use `comult`".into()));
            }
            Ok(Bialgebra::Aib { base, delta: single(&f.comult)? })
        }
        ("ddb", Algebra::Dendriform { succ, prec }) => {
            if !f.comult.is_empty() {
                return Err(Error::Invalid(
                    "ddb files use `comult_succ`/`comult_prec`".into(),
                ));
            }
            Ok(Bialgebra::Ddb {
                succ,
                prec,
                delta_succ: entries_to_comult(n, &f.comult_succ, "comult_succ")?,
                delta_prec: entries_to_comult(n, &f.comult_prec, "comult_prec")?,
            })
        }
        ("liebi", Algebra::Lie(bracket)) => {
            Ok(Bialgebra::LieBi { bracket, delta: single(&f.comult)? })
        }
        ("preliebi", Algebra::PreLie(base)) => {
            Ok(Bialgebra::PreLieBi { base, delta: single(&f.comult)? })
        }
        (k, alg) => Err(Error::Invalid(format!(
            "bialgebra kind `{k}` does not fit algebra kind `{}`",
            alg.kind().name()
        ))),
    }
}

fn to_json<S: Serialize>(v: &S) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Invalid(e.to_string()))
}

fn from_json<'a, D: Deserialize<'a>>(s: &'a str) -> Result<D> {
    serde_json::from_str(s).map_err(|e| Error::Invalid(e.to_string()))
}

/// Serialize an algebra to deterministic JSON.
pub fn algebra_to_json(a: &Algebra<Rat>) -> Result<String> {
    to_json(&algebra_to_file(a))
}

/// Parse an algebra from JSON.
pub fn algebra_from_json(s: &str) -> Result<Algebra<Rat>> {
    file_to_algebra(&from_json::<AlgebraFile>(s)?)
}

/// Serialize a tensor to deterministic JSON.
pub fn tensor_to_json(t: &Tensor2<Rat>) -> Result<String> {
    to_json(&tensor_to_file(t)?)
}

/// Parse a tensor from JSON.
pub fn tensor_from_json(s: &str) -> Result<Tensor2<Rat>> {
    file_to_tensor(&from_json::<TensorFile>(s)?)
}

/// Serialize a bialgebra to deterministic JSON.
pub fn bialgebra_to_json(b: &Bialgebra<Rat>) -> Result<String> {
    to_json(&bialgebra_to_file(b))
}

/// Parse a bialgebra from JSON.
pub fn bialgebra_from_json(s: &str) -> Result<Bialgebra<Rat>> {
    file_to_bialgebra(&from_json::<BialgebraFile>(s)?)
}

/// Classify a JSON document as an algebra, tensor or bialgebra file and parse
/// it.  Used by CLI commands that accept any of the three.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyFile {
    Algebra(Algebra<Rat>),
    Tensor(Tensor2<Rat>),
    Bialgebra(Bialgebra<Rat>),
}

/// Parse any of the three file kinds, deciding by the fields present.
pub fn any_from_json(s: &str) -> Result<AnyFile> {
    let probe: serde_json::Value =
        serde_json::from_str(s).map_err(|e| Error::Invalid(e.to_string()))?;
    let obj = probe
        .as_object()
        .ok_or_else(|| Error::Invalid("expected a JSON object".into()))?;
    if obj.contains_key("algebra") {
        Ok(AnyFile::Bialgebra(bialgebra_from_json(s)?))
    } else if obj.contains_key("kind") {
        Ok(AnyFile::Algebra(algebra_from_json(s)?))
    } else if obj.contains_key("entries") || obj.contains_key("dim") {
        Ok(AnyFile::Tensor(tensor_from_json(s)?))
    } else {
        Err(Error::Invalid("unrecognized file shape".into()))
    }
}
