//! Tietze simplification of a redundant presentation.

use adorn::abelian::abelianization;
use adorn::fpgroup::{parse_presentation, tietze_simplify, SimplificationCaps};

fn main() {
    let p = parse_presentation("< a, b, c, d | c = a b, d = c a, d^-1 a b a, a^2 b^-3 >").unwrap();
    let s = tietze_simplify(&p, &SimplificationCaps::default());
    println!("before: {p}  ({:?})", p.stats());
    println!("after:  {}  ({:?})", s.presentation, s.presentation.stats());
    println!("abelianization {} = {}", abelianization(&p), abelianization(&s.presentation));
}
