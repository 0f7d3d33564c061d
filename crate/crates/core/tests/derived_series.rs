mod common;

use adorn::abelian::abelianization;
use adorn::cosets::{group_order, EnumerationCaps};
use adorn::derived::{derived_series, doa, verify_filtration, SeriesLimits, SeriesVerdict};
use adorn::fpgroup::{parse_presentation, parse_word, GroupPresentation, Word};
use adorn::zoo::{direct_product_of, make};
use common::{finite_models, oracle_series};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn models_are_faithful() {
    for m in finite_models() {
        assert!(m.is_valid(), "{}: relators or order wrong in the model", m.name);
        let n = group_order(&m.presentation, &EnumerationCaps::default()).unwrap();
        assert_eq!(n, m.order, "{}", m.name);
    }
}

#[test]
fn stages_match_permutation_oracle() {
    let lim = SeriesLimits::default();
    for m in finite_models() {
        let (quotients, depth) = oracle_series(&m.group());
        let run = derived_series(&m.presentation, &lim);
        assert_eq!(run.verdict.doa(), Some(depth), "{}: {:?}", m.name, run.verdict);
        let got: Vec<_> = run.stages.iter().map(|s| s.invariants.clone()).collect();
        assert_eq!(got, quotients, "{}", m.name);
    }
}

#[test]
fn degree_table() {
    let lim = SeriesLimits::default();
    let cases: &[(&str, usize)] = &[
        ("< | >", 0),
        ("< a, b | a^2, b^3, (a b)^5 >", 0),
        ("< a | >", 1),
        ("< a, b | a^2, b^5, (a b)^4, (a b^-1 a b)^3 >", 1),
        ("< a, b | a^2, b^2, (a b)^3 >", 2),
        ("< a, b | a^2, b^2 >", 2),
        ("< a, b | a^4, a^2 b^-2, b^-1 a b a >", 2),
    ];
    for &(src, want) in cases {
        assert_eq!(doa(&parse_presentation(src).unwrap(), &lim), Some(want), "{src}");
    }
}

#[test]
fn sl2z_has_free_commutator_subgroup() {
    let run = derived_series(&make("sl2z", &[]).unwrap(), &SeriesLimits::default());
    assert_eq!(run.stages[0].invariants.to_string(), "Z/12");
    assert_eq!(run.stages[1].certified_free_rank(), Some(2));
    assert_eq!(run.verdict.kind(), "NonAdorableCertified");
}

fn certified(p: &GroupPresentation) -> Option<usize> {
    derived_series(p, &SeriesLimits::default()).verdict.doa()
}

fn random_word(rng: &mut StdRng, gens: usize, len: usize) -> Word {
    let syl: Vec<(usize, i64)> = (0..len).map(|_| (rng.gen_range(0..gens), if rng.gen() { 1 } else { -1 })).collect();
    Word::from_syllables(&syl)
}

#[test]
fn quotients_never_raise_the_degree() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut groups: Vec<GroupPresentation> = finite_models().into_iter().map(|m| m.presentation).collect();
    groups.push(make("dihedral_inf", &[]).unwrap());
    groups.push(GroupPresentation::free(1));
    let mut checked = 0;
    for g in &groups {
        let Some(d) = certified(g) else { continue };
        if g.n_generators() == 0 {
            continue;
        }
        for _ in 0..4 {
            let len = rng.gen_range(1..=4);
            let q = g.with_relators([random_word(&mut rng, g.n_generators(), len)]);
            if let Some(dq) = certified(&q) {
                assert!(dq <= d, "{q} has doa {dq} above {d}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 40, "only {checked} pairs certified");
}

#[test]
fn direct_products_take_the_maximum() {
    let models = finite_models();
    let small: Vec<_> = models.iter().filter(|m| m.order <= 24).collect();
    for a in &small {
        for b in &small {
            if a.order * b.order > 200 {
                continue;
            }
            let (da, db) = (certified(&a.presentation).unwrap(), certified(&b.presentation).unwrap());
            let prod = direct_product_of(&a.presentation, &b.presentation);
            assert_eq!(certified(&prod), Some(da.max(db)), "{} x {}", a.name, b.name);
        }
    }
}

#[test]
fn product_stages_match_oracle() {
    let models = finite_models();
    let by = |n: &str| models.iter().find(|m| m.name == n).unwrap();
    for (x, y) in [("S3", "Q8"), ("A4", "Z/5"), ("A5", "S3"), ("S4", "Z/2")] {
        let m = by(x).product(by(y));
        let (quotients, depth) = oracle_series(&m.group());
        let run = derived_series(&m.presentation, &SeriesLimits::default());
        assert_eq!(run.verdict.doa(), Some(depth), "{}", m.name);
        let got: Vec<_> = run.stages.iter().map(|s| s.invariants.clone()).collect();
        assert_eq!(got, quotients, "{}", m.name);
    }
}

#[test]
fn stage_zero_is_the_abelianization() {
    for m in finite_models() {
        let run = derived_series(&m.presentation, &SeriesLimits::default());
        assert_eq!(run.stages[0].invariants, abelianization(&m.presentation));
    }
}

#[test]
fn partial_stages_never_certify_freeness() {
    let lim = SeriesLimits { simplification: adorn::fpgroup::SimplificationCaps::new(2, 8, 1).unwrap(), ..Default::default() };
    for name in ["sl2z", "trefoil", "dihedral_inf"] {
        let run = derived_series(&make(name, &[]).unwrap(), &lim);
        for s in &run.stages {
            if s.is_partial() {
                assert_eq!(s.certified_free_rank(), None, "{name} depth {}", s.depth);
            }
        }
        if let SeriesVerdict::NonAdorableCertified(_) = run.verdict {
            assert!(run.stages.iter().any(|s| !s.is_partial() && s.certified_free_rank().is_some()));
        }
    }
}

#[test]
fn filtration_witnesses() {
    let lim = SeriesLimits::default();
    let s4 = make("symmetric", &[4]).unwrap();
    let w = |p: &GroupPresentation, s: &str| parse_word(s, p.generator_names()).unwrap();
    // S4 ⊵ A4 ⊵ V4 ⊵ 1
    let a4 = vec![w(&s4, "s1 s2"), w(&s4, "s2 s3")];
    let v4 = vec![w(&s4, "s1 s3"), w(&s4, "s2 s1 s3 s2")];
    let witness = verify_filtration(&s4, &[a4.clone(), v4.clone(), vec![]], &lim).unwrap();
    assert_eq!(witness.length, 3);
    assert_eq!(witness.indices, vec![Some(2), Some(6), Some(24)]);
    // Skipping A4 leaves a non-abelian quotient S4 / V4.
    assert!(verify_filtration(&s4, &[v4, vec![]], &lim).is_err());
    // Z/2 * Z/2 ⊵ ⟨ab⟩ ⊵ 1 with an infinite last step.
    let dinf = make("dihedral_inf", &[]).unwrap();
    let witness = verify_filtration(&dinf, &[vec![w(&dinf, "a b")], vec![]], &lim).unwrap();
    assert_eq!(witness.indices[0], Some(2));
}
