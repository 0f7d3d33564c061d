//! Adorability of free products, checked against the derived series engine.

use adorn::cosets::EnumerationCaps;
use adorn::derived::{derived_series, SeriesLimits};
use adorn::zoo::{cyclic, free_product_of, free_product_verdict, make};

fn main() {
    let a5 = make("triangle", &[2, 3, 5]).unwrap();
    let t237 = make("triangle", &[2, 3, 7]).unwrap();
    let pairs = [(cyclic(2), cyclic(2)), (cyclic(2), cyclic(3)), (a5.clone(), t237), (cyclic(2), a5)];
    for (a, b) in &pairs {
        let v = free_product_verdict(a, b, &EnumerationCaps::default()).unwrap();
        let run = derived_series(&free_product_of(a, b), &SeriesLimits::default());
        println!("{a} * {b}");
        println!("    classifier: {:?}, doa {:?}", v.branch, v.doa);
        println!("    engine:     {:?}", run.verdict);
    }
}
