//! Classifies Seifert fibered spaces by their base orbifold.

use adorn::zoo::{classify_seifert, SeifertData};

fn main() {
    let spaces = [
        SeifertData::closed(0, &[2, 3, 5]),
        SeifertData::closed(0, &[2, 3, 7]),
        SeifertData::closed(0, &[2, 4, 4]),
        SeifertData::closed(0, &[2, 4, 6]),
        SeifertData::closed(1, &[]),
        SeifertData::closed(0, &[2, 3, 5, 7, 11]),
        SeifertData::bounded(0, &[2, 2]),
    ];
    for s in &spaces {
        let c = classify_seifert(s).unwrap();
        let b = if s.has_boundary { " with boundary" } else { "" };
        println!("genus {} cones {:?}{b}: {:?}", s.base_genus, s.cone_indices, c.branch);
        for step in &c.trace {
            println!("    {step}");
        }
    }
}
