//! Check a proof script (default: scripts/F-d3.gts) against the rest of its directory.
use std::path::PathBuf;

use twistlab::gt::Corpus;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scripts/F-d3.gts"));
    let id = path.file_stem().unwrap().to_string_lossy().into_owned();
    // cited lemmas live in sibling scripts
    let corpus = Corpus::load_dir(path.parent().unwrap())?;
    let r = corpus.check(&id).ok_or(format!("no script {id}"))?;
    for g in &r.goals {
        println!("{:<10} {:?}  {}", g.name, g.status, g.statement);
    }
    println!("{} steps, {} unjustified", r.steps.len(), r.unjustified());
    println!("{}", r.final_line());
    Ok(())
}
