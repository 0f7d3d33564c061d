//! Presents the commutator subgroup of SL(2,Z) and of a triangle group.

use adorn::abelian::abelianization;
use adorn::cosets::commutator_coset_table;
use adorn::fpgroup::SimplificationCaps;
use adorn::rewriting::{reidemeister_schreier, schreier_transversal};
use adorn::zoo::make;

fn main() {
    for (family, params) in [("sl2z", &[][..]), ("triangle", &[2, 3, 4])] {
        let p = make(family, params).unwrap();
        let t = commutator_coset_table(&p).unwrap();
        let reps: Vec<String> = schreier_transversal(&t).unwrap().iter().map(|w| p.format_word(w)).collect();
        let sub = reidemeister_schreier(&p, &t, &SimplificationCaps::default()).unwrap();
        println!("{}: index {}", p.name(), t.n_cosets());
        println!("  transversal: {}", reps.join(", "));
        println!("  {} Schreier generators simplify to {}", sub.raw_generators, sub.presentation);
        println!("  abelianized: {}\n", abelianization(&sub.presentation));
    }
}
