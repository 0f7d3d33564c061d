//! Lists the built-in families and builds a member of each.

use adorn::abelian::abelianization;
use adorn::zoo::{make, FAMILIES};

fn main() {
    for f in FAMILIES {
        let params: Vec<i64> = match f.name {
            "fuchsian" => vec![0, 2, 3, 7],
            "free" | "cyclic" | "surface" | "dihedral" | "braid" | "symmetric" => vec![3],
            "baumslag_solitar" => vec![1, 2],
            _ if f.params.is_empty() => vec![],
            _ => vec![2, 3, 5][..f.params.split(',').count()].to_vec(),
        };
        let p = make(f.name, &params).unwrap();
        println!("{:<24} {:<14} {}", p.name(), abelianization(&p).to_string(), p);
    }
}
