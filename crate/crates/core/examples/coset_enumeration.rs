//! Todd–Coxeter enumeration and the direct commutator-subgroup table.

use adorn::cosets::{commutator_coset_table, group_order, todd_coxeter, EnumerationCaps};
use adorn::fpgroup::{parse_word, Letter};
use adorn::zoo::make;

fn main() {
    let caps = EnumerationCaps::default();
    let s4 = make("symmetric", &[4]).unwrap();
    println!("{s4}");
    println!("order: {}", group_order(&s4, &caps).unwrap());

    for h in ["s1", "s1, s2", "s1 s2, s2 s3"] {
        let gens: Vec<_> = h.split(',').map(|w| parse_word(w, s4.generator_names()).unwrap()).collect();
        let t = todd_coxeter(&s4, &gens, &caps).unwrap();
        println!("index of <{h}>: {}", t.n_cosets());
    }

    let sl2z = make("sl2z", &[]).unwrap();
    let t = commutator_coset_table(&sl2z).unwrap();
    println!("\nSL(2,Z) commutator subgroup has index {}", t.n_cosets());
    println!("a acts on its cosets as {:?}", t.permutation(Letter::gen(0)));
}
