mod common;

use common::*;
use gorlink::catalog::enumerate_ag;
use gorlink::dimension::{dim_acm, dim_pgor, g_cm, DimensionEngine};
use gorlink::hvector::{
    ci_curve_hvector, ci_points_hvector, curve_degree_genus, general_points_hvector,
    is_c2_admissible, is_g3_admissible,
};
use gorlink::liaison::representing_curves;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn general_points_against_hilbert_function() {
    for d in 1..=400 {
        assert_eq!(
            general_points_hvector(d).unwrap().entries(),
            general_points_oracle(d),
            "d={d}"
        );
    }
}

#[test]
fn complete_intersections_against_koszul() {
    for a in 1..=6 {
        for b in a..=7 {
            assert_eq!(
                ci_curve_hvector(a, b).unwrap().h.entries(),
                ci_oracle(&[a, b])
            );
            for c in b..=7 {
                assert_eq!(
                    ci_points_hvector(a, b, c).unwrap().entries(),
                    ci_oracle(&[a, b, c])
                );
            }
        }
    }
}

#[test]
fn c2_against_macaulay_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20_000 {
        let h = random_hvector(&mut rng, 7, 6);
        assert_eq!(is_c2_admissible(&h), c2_oracle(h.entries()), "{h}");
    }
}

#[test]
fn g3_against_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20_000 {
        let h = random_hvector(&mut rng, 8, 8);
        assert_eq!(is_g3_admissible(&h), g3_oracle(h.entries()), "{h}");
    }
}

/// Every sequence `1, h(1), ..., h(b)` of positive integers with sum <= dmax.
fn all_sequences(dmax: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut stack = vec![(vec![1i64], 1i64)];
    while let Some((seq, sum)) = stack.pop() {
        out.push(seq.clone());
        for v in 1..=dmax - sum {
            let mut next = seq.clone();
            next.push(v);
            stack.push((next, sum + v));
        }
    }
    out
}

#[test]
fn enumeration_against_brute_force() {
    let dmax = 16;
    let mut expected: Vec<Vec<i64>> = all_sequences(dmax)
        .into_iter()
        .filter(|s| g3_oracle(s))
        .collect();
    expected.sort_by_key(|s| (s.iter().sum::<i64>(), s.clone()));
    let got: Vec<Vec<i64>> = enumerate_ag(dmax, false)
        .unwrap()
        .iter()
        .map(|h| h.entries().to_vec())
        .collect();
    assert_eq!(got, expected);
}

#[test]
fn representing_curves_against_brute_force() {
    for h in enumerate_ag(24, false).unwrap() {
        let got: Vec<Vec<i64>> = representing_curves(&h)
            .unwrap()
            .iter()
            .map(|c| c.entries().to_vec())
            .collect();
        assert_eq!(got, representing_curves_oracle(h.entries()), "{h}");
    }
}

#[test]
fn dim_pgor_against_unsimplified_count() {
    let engine = DimensionEngine::new();
    for h in enumerate_ag(40, false).unwrap() {
        let expected = dim_pgor_oracle(h.entries());
        assert_eq!(dim_pgor(&h).unwrap().value, expected, "{h}");
        assert_eq!(engine.dim_pgor(&h).unwrap(), expected, "{h}");
    }
}

#[test]
fn dim_acm_of_complete_intersections() {
    for s in 1..=7 {
        for t in s..=9 {
            let c = ci_curve_hvector(s, t).unwrap().h;
            // A line is CI(1,1); its family is G(2,4).
            let expected = if (s, t) == (1, 1) {
                4
            } else {
                ci_curve_family_dim(s, t)
            };
            assert_eq!(dim_acm(&c).unwrap().value, expected, "CI({s},{t})");
        }
    }
}

#[test]
fn degree_genus_against_hilbert_polynomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..5_000 {
        let c = random_c2(&mut rng, 7, 6);
        assert_eq!(
            curve_degree_genus(&c).unwrap(),
            degree_genus_oracle(c.entries()),
            "{c}"
        );
    }
}

#[test]
fn g_cm_against_linkage_count() {
    for s in 1..=12 {
        for d in s * (s - 1) + 1..=150 {
            assert_eq!(g_cm(d, s).unwrap(), g_cm_oracle(d, s), "d={d}, s={s}");
        }
    }
}

#[test]
fn base_cases_against_family_count() {
    for p in 1..=6 {
        for q in p..=9 {
            let h = ci_points_hvector(1, p, q).unwrap();
            assert_eq!(dim_pgor(&h).unwrap().value, pgor_base_oracle(p, q), "{h}");
        }
    }
}
