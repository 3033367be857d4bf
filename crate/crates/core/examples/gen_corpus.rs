//! Regenerate the bundled corpus JSON files.
//!
//! Usage: `cargo run -p algdouble --example gen_corpus -- [outdir]`
//! (default output directory: `corpus`).

use std::fs;
use std::path::Path;

use algdouble::corpus::{
    aib_corpus, associative_corpus, ddb_corpus, dendriform_corpus, l2_solution,
};
use algdouble::fileio::{algebra_to_json, bialgebra_to_json, tensor_to_json};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let outdir = args.get(1).map(String::as_str).unwrap_or("corpus");
    fs::create_dir_all(outdir).expect("create output directory");
    let write = |name: &str, body: String| {
        let path = Path::new(outdir).join(format!("{name}.json"));
        fs::write(&path, body + "\n").expect("write corpus file");
        println!("wrote {}", path.display());
    };
    for (name, a) in associative_corpus().iter().chain(dendriform_corpus().iter()) {
        write(name, algebra_to_json(a).expect("serialize"));
    }
    for (name, b) in aib_corpus().iter().chain(ddb_corpus().iter()) {
        write(name, bialgebra_to_json(b).expect("serialize"));
    }
    write("tensor-l2-solution", tensor_to_json(&l2_solution()).expect("serialize"));
}
