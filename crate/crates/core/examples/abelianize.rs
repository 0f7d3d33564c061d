//! Abelian invariants of a few presentations, with the Smith form behind one.

use adorn::abelian::{abelianization, relator_matrix, smith_normal_form};
use adorn::fpgroup::parse_presentation;

fn main() {
    let groups = [
        "< a, b | a^4, a^2 b^-3 >",
        "< a, b | a b a b^-1 a^-1 b^-1 >",
        "< a, b | a^2, b^3, (a b)^5 >",
        "< x, y, z | [x, y], x^6, y^4 z^2 >",
    ];
    for src in groups {
        let p = parse_presentation(src).expect("valid presentation");
        println!("{src:<40} {}", abelianization(&p));
    }

    let sl2z = parse_presentation(groups[0]).unwrap();
    let m = relator_matrix(&sl2z);
    let snf = smith_normal_form(&m);
    println!("\nrelator matrix of SL(2,Z): {m:?}");
    println!("Smith diagonal: {:?}", snf.diagonal());
}
