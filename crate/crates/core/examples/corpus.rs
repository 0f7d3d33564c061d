//! Verifies the bundled corpus of expected results in parallel.

use std::path::Path;

use adorn::cli::{load_corpus, verify_corpus};
use adorn::derived::SeriesLimits;

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/paper.json");
    let entries = load_corpus(&path).expect("corpus loads");
    let outcomes = verify_corpus(&entries, &SeriesLimits::default(), None);
    for o in &outcomes {
        println!("{} {}", if o.passed { "ok  " } else { "FAIL" }, o.name);
        for f in &o.failures {
            println!("       {f}");
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("{passed}/{} passed", outcomes.len());
}
