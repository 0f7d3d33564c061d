//! Alexander polynomials of knot groups and what they say about adorability.

use adorn::alexander::knot_adorability_report;
use adorn::fpgroup::parse_presentation;
use adorn::zoo::make;

fn main() {
    let knots = [
        ("unknot", parse_presentation("< a | >").unwrap()),
        ("trefoil", make("trefoil", &[]).unwrap()),
        ("figure-eight", make("figure_eight", &[]).unwrap()),
        ("T(3,4)", make("torus_knot", &[3, 4]).unwrap()),
    ];
    for (name, p) in knots {
        let r = knot_adorability_report(&p).unwrap();
        println!("{name:<13} Δ = {:<28} {:?}", r.alexander.to_string(), r.verdict);
        for note in &r.notes {
            println!("{:14}{note}", "");
        }
    }
}
