//! Runs the derived series engine on groups with different outcomes.

use adorn::derived::{derived_series, SeriesLimits};
use adorn::zoo::make;

fn main() {
    let lim = SeriesLimits::default();
    for (family, params) in [("symmetric", &[4][..]), ("sl2z", &[]), ("dihedral_inf", &[]), ("trefoil", &[]), ("sl3z", &[])] {
        let p = make(family, params).expect("known family");
        let run = derived_series(&p, &lim);
        println!("{}", p.name());
        for s in &run.stages {
            let flags = if s.flags.is_empty() { String::new() } else { format!(" {:?}", s.flags) };
            println!("  G^{} / G^{} = {}{flags}", s.depth, s.depth + 1, s.invariants);
        }
        println!("  => {:?}\n", run.verdict);
    }
}
