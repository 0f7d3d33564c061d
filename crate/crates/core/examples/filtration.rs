//! Certifies adorability from an explicit normal series.

use adorn::derived::{verify_filtration, SeriesLimits};
use adorn::fpgroup::parse_word;
use adorn::zoo::make;

fn main() {
    let s4 = make("symmetric", &[4]).unwrap();
    let words = |ws: &[&str]| ws.iter().map(|w| parse_word(w, s4.generator_names()).unwrap()).collect::<Vec<_>>();
    let a4 = words(&["s1 s2", "s2 s3"]);
    let v4 = words(&["s1 s3", "s2 s1 s3 s2"]);
    let lim = SeriesLimits::default();

    match verify_filtration(&s4, &[a4, v4.clone(), vec![]], &lim) {
        Ok(w) => println!("S4 > A4 > V4 > 1 certifies doa ≤ {} (indices {:?})", w.length, w.indices),
        Err(e) => println!("rejected: {e}"),
    }
    match verify_filtration(&s4, &[v4, vec![]], &lim) {
        Ok(w) => println!("unexpectedly accepted: {w:?}"),
        Err(e) => println!("S4 > V4 > 1 rejected: {e}"),
    }
}
