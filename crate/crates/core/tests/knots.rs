use adorn::alexander::{abelianized_fox_derivative, alexander_polynomial, knot_adorability_report, KnotVerdict, LaurentPoly};
use adorn::fpgroup::{parse_presentation, tietze_simplify, GroupPresentation, SimplificationCaps, Word};
use adorn::zoo::make;
use proptest::prelude::*;

/// Coefficients, lowest first, of `(t^pq − 1)(t − 1) / ((t^p − 1)(t^q − 1))`
/// by schoolbook division.
fn torus_oracle(p: usize, q: usize) -> Vec<i64> {
    let mul = |a: &[i64], b: &[i64]| {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    let binom = |n: usize| {
        let mut v = vec![0; n + 1];
        v[0] = -1;
        v[n] = 1;
        v
    };
    let mut num = mul(&binom(p * q), &binom(1));
    let den = mul(&binom(p), &binom(q));
    let mut quot = vec![0; num.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = num[k + den.len() - 1] / den[den.len() - 1];
        quot[k] = c;
        for (j, d) in den.iter().enumerate() {
            num[k + j] -= c * d;
        }
    }
    assert!(num.iter().all(|&x| x == 0));
    quot
}

fn corpus_knots() -> Vec<(String, GroupPresentation)> {
    let mut out = vec![
        ("unknot".to_string(), parse_presentation("< a | >").unwrap()),
        ("trefoil".to_string(), make("trefoil", &[]).unwrap()),
        ("figure-eight".to_string(), make("figure_eight", &[]).unwrap()),
        ("braid(3)".to_string(), make("braid", &[3]).unwrap()),
    ];
    for (p, q) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (2, 9)] {
        out.push((format!("T({p},{q})"), make("torus_knot", &[p, q]).unwrap()));
    }
    out
}

#[test]
fn knot_criterion_values() {
    let report = |p: &GroupPresentation| knot_adorability_report(p).unwrap();
    let unknot = report(&parse_presentation("< a | >").unwrap());
    assert_eq!(unknot.alexander, LaurentPoly::one());
    assert_eq!(unknot.verdict, KnotVerdict::Adorable);
    let trefoil = report(&make("trefoil", &[]).unwrap());
    assert_eq!(trefoil.alexander.to_string(), "t^2 - t + 1");
    assert_eq!(trefoil.verdict, KnotVerdict::NotAdorable);
    assert_eq!(trefoil.derived_quotient_rank, 2);
    let fig8 = report(&make("figure_eight", &[]).unwrap());
    assert_eq!(fig8.alexander.to_string(), "t^2 - 3t + 1");
    assert_eq!(fig8.verdict, KnotVerdict::NotAdorable);
}

#[test]
fn torus_knots_match_cyclotomic_quotient() {
    for (p, q) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (2, 9), (4, 5)] {
        let got = alexander_polynomial(&make("torus_knot", &[p, q]).unwrap()).unwrap();
        let want = LaurentPoly::from_i64s(0, &torus_oracle(p as usize, q as usize)).normalized();
        assert_eq!(got, want, "T({p},{q})");
    }
}

#[test]
fn corpus_knot_invariants() {
    for (name, p) in corpus_knots() {
        let r = knot_adorability_report(&p).unwrap();
        let d = &r.alexander;
        assert_eq!(d.eval_at_one().magnitude().to_string(), "1", "{name}");
        assert!(r.symmetric, "{name}");
        assert_eq!(d.reversed().normalized(), *d, "{name}");
        assert_eq!(r.degree % 2, 0, "{name}");
        assert!(r.diagnostics.is_empty(), "{name}: {:?}", r.diagnostics);
    }
}

#[test]
fn invariant_under_simplification() {
    let caps = SimplificationCaps::default();
    for (name, p) in corpus_knots() {
        let s = tietze_simplify(&p, &caps).presentation;
        assert_eq!(alexander_polynomial(&s).unwrap(), alexander_polynomial(&p).unwrap(), "{name}");
    }
}

#[test]
fn rejects_non_knot_groups() {
    for src in ["< a, b | a^2 >", "< a, b | >", "< a | a^3 >", "< a, b | a b a^-1 b^-1 >"] {
        assert!(alexander_polynomial(&parse_presentation(src).unwrap()).is_err(), "{src}");
    }
}

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..3, -2i64..=2), 0..12).prop_map(|s| Word::from_syllables(&s))
}

proptest! {
    /// Fundamental formula `w − 1 = Σ ∂w/∂x_j (x_j − 1)`, pushed to `Z[t^±1]`.
    #[test]
    fn fox_fundamental_formula(w in word_strategy(), images in prop::collection::vec(-2i64..=2, 3)) {
        let mut sum = LaurentPoly::zero();
        for j in 0..3 {
            let dj = abelianized_fox_derivative(&w, j, &images);
            sum = &sum + &(&dj * &(&LaurentPoly::t_pow(images[j]) - &LaurentPoly::one()));
        }
        let e: i64 = (0..3).map(|j| images[j] * w.exponent_sum(j)).sum();
        prop_assert_eq!(sum, &LaurentPoly::t_pow(e) - &LaurentPoly::one());
    }
}
