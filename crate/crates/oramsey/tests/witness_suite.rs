//! Structural test suite over the three named witnesses: freeness claims,
//! degree structure, neighborhood decomposition, hereditarity, and the
//! eight-vertex uniqueness properties.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oramsey::bitset::VertexSet;
use oramsey::circulant::{witness, WitnessName};
use oramsey::detect::{
    count_transitive_triangles, find_independent_set, independence_number, is_free,
};
use oramsey::lemma::{
    check_eight_vertex_properties, check_l3_degree_bound, check_neighborhood_lemma,
};

#[test]
fn witnesses_satisfy_their_freeness_claims() {
    for name in WitnessName::ALL {
        let g = witness(name);
        let (m, n) = name.claims();
        assert_eq!(g.order(), name.spec().modulus);
        assert!(is_free(&g, m, n).is_free(), "{name} is not ({m}, {n})-free");
    }
}

#[test]
fn witnesses_are_tight_one_step_down() {
    // Shrinking either pattern parameter by one produces a certificate.
    for name in WitnessName::ALL {
        let g = witness(name);
        let (m, n) = name.claims();
        let v = is_free(&g, m - 1, n);
        assert!(!v.is_free(), "{name} should contain an I_{}", m - 1);
        assert!(v.certificate().unwrap().validate(&g));
    }
}

#[test]
fn witness_independence_numbers() {
    assert_eq!(independence_number(&witness(WitnessName::W8)), 2);
    assert_eq!(independence_number(&witness(WitnessName::W14)), 3);
    assert_eq!(independence_number(&witness(WitnessName::W22)), 4);
}

#[test]
fn witnesses_have_no_transitive_triangles() {
    for name in WitnessName::ALL {
        assert_eq!(count_transitive_triangles(&witness(name)), 0, "{name}");
    }
}

#[test]
fn w8_has_nonadjacent_pairs() {
    let w8 = witness(WitnessName::W8);
    let cert = find_independent_set(&w8, 2).unwrap();
    assert!(cert.validate(&w8));
    assert!(!w8.adjacent(0, 3));
}

#[test]
fn w14_contains_an_independent_triple() {
    // r(I_3, L_3) = 9 <= 14 forces an I_3 in any 14-vertex oriented graph.
    let w14 = witness(WitnessName::W14);
    let verdict = is_free(&w14, 3, 3);
    let cert = verdict.certificate().expect("must contain an I_3");
    assert_eq!(cert.vertices.len(), 3);
    assert!(cert.validate(&w14));
}

#[test]
fn neighborhood_lemma_passes_on_all_witnesses() {
    for name in WitnessName::ALL {
        let g = witness(name);
        let (m, n) = name.claims();
        let outcome = check_neighborhood_lemma(&g, m, n);
        assert!(outcome.passed(), "{name}: {outcome:?}");
        assert_eq!(outcome.report().unwrap().items.len(), g.order());
    }
}

#[test]
fn degree_caps_hold_on_all_witnesses() {
    for name in WitnessName::ALL {
        let g = witness(name);
        let (m, _) = name.claims();
        let outcome = check_l3_degree_bound(&g, m);
        assert!(outcome.passed(), "{name}: {outcome:?}");
        for v in 0..g.order() {
            assert_eq!(g.out_degree(v), m - 1, "{name} vertex {v}");
            assert_eq!(g.in_degree(v), m - 1, "{name} vertex {v}");
        }
    }
}

#[test]
fn eight_vertex_properties_pass_on_w8() {
    let outcome = check_eight_vertex_properties(&witness(WitnessName::W8));
    assert!(outcome.passed(), "{outcome:?}");
    assert_eq!(outcome.report().unwrap().items.len(), 6);
}

#[test]
fn eight_vertex_properties_pass_on_random_relabelings() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let w8 = witness(WitnessName::W8);
    for _ in 0..20 {
        let mut perm: Vec<usize> = (0..8).collect();
        perm.shuffle(&mut rng);
        let relabeled = w8.relabel(&perm);
        assert!(check_eight_vertex_properties(&relabeled).passed());
    }
}

#[test]
fn freeness_is_hereditary_on_witness_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for name in WitnessName::ALL {
        let g = witness(name);
        let (m, n) = name.claims();
        for _ in 0..30 {
            let size = rng.random_range(1..=g.order());
            let mut picks: Vec<usize> = (0..g.order()).collect();
            picks.shuffle(&mut rng);
            let subset: VertexSet = picks.into_iter().take(size).collect();
            let sub = g.induced_subgraph(subset).unwrap();
            assert!(
                is_free(&sub, m, n).is_free(),
                "{name} subset {subset} lost freeness"
            );
        }
    }
}
