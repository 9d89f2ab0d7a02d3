//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`). Every
//! tolerance and time budget is pinned here.

use std::process::Command;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oramsey::bounds::{appendix_v, edge_minimum, exponential_upper, quadratic_upper};
use oramsey::canon::canonical_code;
use oramsey::cayley::CayleyGroup;
use oramsey::circulant::{witness, WitnessName};
use oramsey::detect::{find_independent_set, find_transitive_tournament, is_free};
use oramsey::graph::OrientedGraph;
use oramsey::io::parse_arc_list;
use oramsey::lemma::{
    check_eight_vertex_properties, check_l3_degree_bound, check_neighborhood_lemma,
};
use oramsey::search::{
    cayley_scan, extremal_search, verify_ramsey_value, LowerEvidence, SearchConfig,
};

fn report(criterion: &str, passed: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_1_witness_verification_via_cli() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_oramsey"))
        .args(["verify", "all"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    let ok = out.status.code() == Some(0)
        && text.matches("verdict: PASS").count() == 3
        && elapsed < Duration::from_secs(1);
    report(
        "1 (witness verification)",
        ok,
        &format!("`verify all` exit 0, three PASS verdicts, in {elapsed:?} (< 1 s)"),
    );
}

#[test]
fn criterion_2_small_values_rederived_by_search() {
    // r(I_2, L_3) = 4, budget 1 s.
    let start = Instant::now();
    let r23 = extremal_search(&SearchConfig::new(2, 3, 5)).unwrap();
    let t23 = start.elapsed();
    assert_eq!(r23.extremal_order, 3);
    assert!(t23 < Duration::from_secs(1), "r(2,3) took {t23:?}");

    // r(I_2, L_4) = 8, budget 30 s.
    let start = Instant::now();
    let r24 = extremal_search(&SearchConfig::new(2, 4, 8)).unwrap();
    let t24 = start.elapsed();
    assert_eq!(r24.extremal_order, 7);
    assert_eq!(r24.per_order.last().unwrap().classes, 0);
    assert!(t24 < Duration::from_secs(30), "r(2,4) took {t24:?}");

    // r(I_3, L_3) = 9 with a unique class at order 8, sequential,
    // budget 10 min.
    let mut cfg = SearchConfig::new(3, 3, 9);
    cfg.worker_count = 1;
    let start = Instant::now();
    let r33 = extremal_search(&cfg).unwrap();
    let t33 = start.elapsed();
    assert_eq!(r33.extremal_order, 8);
    let at8 = r33.per_order.iter().find(|l| l.order == 8).unwrap().classes;
    assert_eq!(at8, 1, "expected exactly one class at order 8");
    assert_eq!(r33.per_order.last().unwrap().classes, 0);
    let rep = parse_arc_list(&r33.representatives[0]).unwrap();
    assert_eq!(
        canonical_code(&rep).unwrap(),
        canonical_code(&witness(WitnessName::W8)).unwrap(),
        "unique order-8 class must be W8"
    );
    assert!(t33 < Duration::from_secs(600), "r(3,3) took {t33:?}");

    report(
        "2 (exact small values)",
        true,
        &format!(
            "r(I_2,L_3)=4 in {t23:?}; r(I_2,L_4)=8 in {t24:?}; r(I_3,L_3)=9 with unique W8 class in {t33:?}"
        ),
    );
}

#[test]
fn criterion_3_exact_values_verified() {
    let mut ok = true;
    let mut details = Vec::new();
    for (m, claimed) in [(4usize, 15u64), (5, 23)] {
        let verdict = verify_ramsey_value(m, 3, claimed).unwrap();
        let witness_side = matches!(verdict.lower_evidence, LowerEvidence::NamedWitness { .. });
        let quadratic = quadratic_upper(m).unwrap();
        ok &= verdict.exact && witness_side && verdict.upper == quadratic;
        details.push(format!(
            "r(I_{m},L_3)={claimed} exact={} upper={} (m^2-m+3={quadratic})",
            verdict.exact, verdict.upper
        ));
    }
    report("3 (exact values 15 and 23)", ok, &details.join("; "));
}

#[test]
fn criterion_4_cayley_remark() {
    let start = Instant::now();
    let cyclic = cayley_scan(CayleyGroup::Cyclic, 14, 4, 3).unwrap();
    let dihedral = cayley_scan(CayleyGroup::Dihedral, 14, 4, 3).unwrap();
    let elapsed = start.elapsed();
    let ok = cyclic.scanned == 729
        && cyclic.free_count == 0
        && dihedral.scanned == 27
        && dihedral.free_count == 0
        && elapsed < Duration::from_secs(60);
    report(
        "4 (Cayley remark)",
        ok,
        &format!(
            "cyclic 729 scanned / {} free, dihedral 27 scanned / {} free, in {elapsed:?} (< 1 min)",
            cyclic.free_count, dihedral.free_count
        ),
    );
}

#[test]
fn criterion_5_appendix_identities() {
    let mut ok = true;
    for n in 3..=9 {
        ok &= appendix_v(2, n).unwrap() == exponential_upper(n).unwrap();
    }
    for m in 3..=8 {
        ok &= appendix_v(m, 3).unwrap() == quadratic_upper(m).unwrap();
    }
    for m in 2..=8 {
        for n in 3..=9 {
            let lhs = appendix_v(m + 1, n + 1).unwrap();
            let rhs = 2 * appendix_v(m + 1, n).unwrap() + appendix_v(m, n + 1).unwrap() - 1;
            ok &= lhs == rhs;
        }
    }
    report(
        "5 (closed-formula identities)",
        ok,
        "v(2,n)=2^(n-1), v(m,3)=m^2-m+3, v(m+1,n+1)=2v(m+1,n)+v(m,n+1)-1 over m in 2..=8, n in 3..=9",
    );
}

#[test]
fn criterion_6_edge_counts() {
    let w8 = witness(WitnessName::W8).arc_count();
    let w14 = witness(WitnessName::W14).arc_count();
    let w22 = witness(WitnessName::W22).arc_count();
    let floor5 = edge_minimum(5).unwrap();
    let ok =
        w8 == 16 && w14 == 42 && w14 >= 38 && w22 == 88 && floor5 == 77 && w22 as u64 >= floor5;
    report(
        "6 (edge counts)",
        ok,
        &format!("W8={w8} (=16), W14={w14} (>=38), W22={w22} (>= edge_minimum(5)={floor5})"),
    );
}

#[test]
fn criterion_7_structural_lemma_suite() {
    let mut ok = check_eight_vertex_properties(&witness(WitnessName::W8)).passed();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let w8 = witness(WitnessName::W8);
    for _ in 0..20 {
        let mut perm: Vec<usize> = (0..8).collect();
        use rand::seq::SliceRandom;
        perm.shuffle(&mut rng);
        ok &= check_eight_vertex_properties(&w8.relabel(&perm)).passed();
    }
    for name in WitnessName::ALL {
        let g = witness(name);
        let (m, n) = name.claims();
        ok &= check_neighborhood_lemma(&g, m, n).passed();
        ok &= check_l3_degree_bound(&g, m).passed();
        ok &= (0..g.order()).all(|v| g.out_degree(v) < m && g.in_degree(v) < m);
    }
    report(
        "7 (structural lemma suite)",
        ok,
        "eight-vertex properties on W8 + 20 relabelings; neighborhood lemma and degree caps on W8/W14/W22",
    );
}

fn naive_independent(g: &OrientedGraph, m: usize) -> bool {
    (0..g.order()).combinations(m).any(|c| {
        c.iter()
            .tuple_combinations()
            .all(|(&a, &b)| !g.adjacent(a, b))
    })
}

fn naive_tournament(g: &OrientedGraph, n: usize) -> bool {
    if n > g.order() {
        return false;
    }
    (0..g.order())
        .permutations(n)
        .any(|c| (0..n).all(|i| (i + 1..n).all(|j| g.has_arc(c[i], c[j]))))
}

#[test]
fn criterion_8_oracle_equivalence_and_labeled_counts() {
    // Detectors vs naive subset/tuple enumeration on 200 random graphs.
    let mut rng = ChaCha8Rng::seed_from_u64(20_26);
    let mut ok = true;
    for round in 0..200 {
        let order = 1 + (round % 6);
        let g = OrientedGraph::random(order, rng.random_range(0.2..0.8), &mut rng);
        for k in 1..=order {
            ok &= find_independent_set(&g, k).is_some() == naive_independent(&g, k);
            ok &= find_transitive_tournament(&g, k).is_some() == naive_tournament(&g, k);
        }
    }

    // Labeled-count cross-check of the search at orders <= 5: the class
    // counts weighted by k!/|Aut| must match brute-force enumeration of all
    // 3^(k choose 2) labeled graphs.
    for (m, n) in [(2usize, 3usize), (3, 3)] {
        for k in 1..=5usize {
            let report = extremal_search(&SearchConfig::new(m, n, k)).unwrap();
            let classes_at_k = report
                .per_order
                .iter()
                .find(|l| l.order == k)
                .map(|l| l.classes)
                .unwrap_or(0);
            let naive = naive_labeled_count(k, m, n);
            if classes_at_k == 0 {
                ok &= naive == 0;
                continue;
            }
            let factorial: u64 = (1..=k as u64).product();
            let weighted: u64 = report
                .representatives
                .iter()
                .map(|t| {
                    let g = parse_arc_list(t).unwrap();
                    factorial / automorphism_count(&g)
                })
                .sum();
            ok &= weighted == naive;
        }
    }
    report(
        "8 (oracle equivalence)",
        ok,
        "detectors match naive enumeration on 200 random graphs of order <= 6; search class counts match labeled brute force at orders <= 5",
    );
}

fn naive_labeled_count(k: usize, m: usize, n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| ((u + 1)..k).map(move |v| (u, v)))
        .collect();
    let mut count = 0;
    for idx in 0..3u64.pow(pairs.len() as u32) {
        let mut g = OrientedGraph::new(k).unwrap();
        let mut rest = idx;
        for &(u, v) in &pairs {
            match rest % 3 {
                0 => {}
                1 => g.add_arc(u, v).unwrap(),
                _ => g.add_arc(v, u).unwrap(),
            }
            rest /= 3;
        }
        if is_free(&g, m, n).is_free() {
            count += 1;
        }
    }
    count
}

fn automorphism_count(g: &OrientedGraph) -> u64 {
    let k = g.order();
    (0..k)
        .permutations(k)
        .filter(|perm| &g.relabel(perm) == g)
        .count() as u64
}

#[test]
fn criterion_9_desk_scale_limits_stated() {
    // These three claims are certified by formulas and witness-level checks
    // only; exhaustive confirmation is out of desk-scale reach:
    //   - the upper bounds r(I_4,L_3) <= 15 and r(I_5,L_3) <= 23 are not
    //     re-proved by searching orders 15 and 23; they come from the
    //     quadratic formula m^2 - m + 3;
    //   - the 38-edge minimum over all 14-vertex free graphs is checked only
    //     on the witness (42 >= 38), not over the whole class;
    //   - the asymptotic tightness of the m^2/log m upper bound rests on the
    //     cited classical lower bound, not on computation here.
    let ok = quadratic_upper(4).unwrap() == 15
        && quadratic_upper(5).unwrap() == 23
        && witness(WitnessName::W14).arc_count() >= 38;
    println!(
        "criterion 9 (desk-scale limits): not reproduced exhaustively — upper bounds at orders 15/23 \
         are formulaic (m^2-m+3), the universal 38-edge bound is witness-checked only, and the \
         asymptotic tightness is cited, not computed"
    );
    report(
        "9 (formula stand-ins in place)",
        ok,
        "quadratic_upper pins 15/23; W14 edge floor holds at the witness",
    );
}
