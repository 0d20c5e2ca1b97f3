//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Tolerances are pinned here: 1e-6 for eigensolver/root agreement, 1e-8
//! for value identity, 1e-9 for strict margins and tie-breaking, 1e-7 for
//! spectrum decompositions.

use sgx_core::constructions::{
    complete_one_negative, gamma, lambda1_gamma, r_of_t,
};
use sgx_core::forbidden::{count_unbalanced_k4, is_tk4_free};
use sgx_core::search::{
    certificate_to_json, extremal_search, lemmas, naive_scan, verify_certificate,
    verify_extremal_structure, Family, Objective, SearchCertificate, SearchSpec,
};
use sgx_core::sgraph::{decode_sg6, encode_sg6, switching_isomorphic, Sign, SignedGraph};

fn report(criterion: &str, pass: bool, detail: &str) {
    println!("acceptance {criterion}: {} - {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn spec(n: usize, objective: Objective, family: Family) -> SearchSpec {
    SearchSpec { n, objective, family, connected_only: false, prune: false, jobs: 1, checkpoint_path: None }
}

fn strip_wall(cert: &SearchCertificate) -> String {
    let mut c = cert.clone();
    c.wall_seconds = 0.0;
    certificate_to_json(&c).unwrap()
}

/// Criterion 1: for 5 <= n <= 60, 1 <= s <= n-2, the eigensolver index of
/// gamma(s,n) equals the largest root of f_{s,n} within 1e-6, lies in
/// [n-2, n-1) with left equality exactly at s = 1.
#[test]
fn criterion_1_gamma_index_suite() {
    let report_21 = lemmas::suite_gamma_index(60, lemmas::Tolerances::default()).unwrap();
    let expected_rows: usize = (5..=60).map(|n| n - 2).sum();
    let ok = report_21.pass && report_21.rows.len() == expected_rows;
    report(
        "1 (index of gamma vs f_{s,n})",
        ok,
        &format!(
            "{} rows, worst margin {:.3e}",
            report_21.rows.len(),
            report_21.worst_margin
        ),
    );
}

/// Criterion 2: the chain lambda_1(gamma(1,n)) < ... < lambda_1(gamma(n-2,n))
/// is strictly increasing with margin > 1e-9 for all n <= 60.
#[test]
fn criterion_2_gamma_chain() {
    let rep = lemmas::suite_gamma_chain(60, lemmas::Tolerances::default()).unwrap();
    report(
        "2 (strict chain in s)",
        rep.pass && rep.rows.len() == 56,
        &format!("{} rows, worst margin {:.3e}", rep.rows.len(), rep.worst_margin),
    );
}

/// Criterion 3: the unbalanced maximizer of the index is the complete graph
/// with one negative edge - exhaustively over all labeled signed graphs at
/// n = 4 (3^6) and n = 5 (3^10), and by switching-class-reduced search at
/// n = 6; best values match lambda1_gamma(n-2, n) within 1e-8.
#[test]
fn criterion_3_unbalanced_maximizer() {
    // n = 4 and n = 5: the naive labeled scan is the oracle.
    for n in [4usize, 5] {
        let (best, argmax) = naive_scan(n, Objective::Index, Family::AllUnbalanced, false).unwrap();
        let expected = lambda1_gamma(n - 2, n).unwrap();
        assert!((best - expected).abs() <= 1e-8, "n={n}: {best} vs {expected}");
        let reference = complete_one_negative(n).unwrap();
        for g in &argmax {
            assert!(
                switching_isomorphic(g, &reference).unwrap(),
                "n={n}: a maximizer is not the one-negative-edge complete graph"
            );
        }
        // Cross-check with the switching-class-reduced search.
        let cert = extremal_search(&spec(n, Objective::Index, Family::AllUnbalanced)).unwrap();
        assert!((cert.best_value - expected).abs() <= 1e-8);
    }
    // n = 4 analytic cross-check: sqrt(5).
    let (best4, _) = naive_scan(4, Objective::Index, Family::AllUnbalanced, false).unwrap();
    assert!((best4 - 5f64.sqrt()).abs() <= 1e-8);

    // n = 6: switching-class-reduced exhaustive search.
    let cert = extremal_search(&spec(6, Objective::Index, Family::AllUnbalanced)).unwrap();
    let witness = decode_sg6(&cert.witness).unwrap();
    let expected = lambda1_gamma(4, 6).unwrap();
    let iso = switching_isomorphic(&witness, &complete_one_negative(6).unwrap()).unwrap();
    let ok = iso && (cert.best_value - expected).abs() <= 1e-8;
    report(
        "3 (one-negative-edge maximizer at n=4,5,6)",
        ok,
        &format!("n=6 best {:.12} vs {:.12}, witness {}", cert.best_value, expected, cert.witness),
    );
}

/// Criterion 4: over connected unbalanced negative-triangle-free graphs of
/// order 4..6, rho <= (sqrt(n^2-8)+n-4)/2 + 1e-9; at n = 4 the bound sqrt(2)
/// is attained by the unbalanced C4.
#[test]
fn criterion_4_c3_free_radius_bound() {
    let rep = lemmas::suite_c3_free_bound(4, 6, 1).unwrap();
    assert!(rep.pass, "bound violated: {:?}", rep.rows);

    let mut s = spec(4, Objective::SpectralRadius, Family::C3Free);
    s.connected_only = true;
    let cert = extremal_search(&s).unwrap();
    let attained = (cert.best_value - 2f64.sqrt()).abs() <= 1e-8;
    let unb_c4 = SignedGraph::new(
        4,
        &[(0, 1, Sign::Minus), (1, 2, Sign::Plus), (2, 3, Sign::Plus), (0, 3, Sign::Plus)],
    )
    .unwrap();
    let witness = decode_sg6(&cert.witness).unwrap();
    let iso = switching_isomorphic(&witness, &unb_c4).unwrap();
    report(
        "4 (C3--free spectral-radius bound)",
        rep.pass && attained && iso,
        &format!("worst margin {:.3e}; n=4 best {:.12} attained by C4-", rep.worst_margin, cert.best_value),
    );
}

/// Criterion 5: at n = 6, for s in {3,4,5}, the maximizer of the index over
/// unbalanced graphs with no unbalanced (s+1)-clique is gamma(s-2, 6).
#[test]
fn criterion_5_kr_free_extremal() {
    let rep = lemmas::suite_kr_free_extremal(1, lemmas::Tolerances::default()).unwrap();
    report(
        "5 (K_{s+1}--free maximizers at n=6)",
        rep.pass && rep.rows.len() == 3,
        &format!("worst margin {:.3e}", rep.worst_margin),
    );
}

/// Criterion 6: Sigma_{k,n} numerics on the grid n in 30..60, r in 2..4,
/// k in 2..5: (a) index agrees with the quotient's largest eigenvalue within
/// 1e-8; (b) h_{k,n} vanishes at the index within 1e-6 * max|coeff|;
/// (c) strict decrease in k with margin > 1e-9 wherever the hypothesis
/// lambda_1 > n-2 holds (on this grid it never does; the gap is recorded);
/// (d) the full spectrum equals the quotient eigenvalues plus -1 and 0 with
/// the prescribed multiplicities, within 1e-7.
#[test]
fn criterion_6_sigma_numerics() {
    let rep = lemmas::suite_sigma(30, 60, lemmas::Tolerances::default()).unwrap();
    let hard_skipped = rep.rows.iter().filter(|r| r.skipped).count();
    let monotone_checked = rep
        .rows
        .iter()
        .filter(|r| !r.detail.contains("monotone skipped"))
        .count();
    let ok = rep.pass && rep.rows.len() == 31 * 3 * 4 && hard_skipped == 0;
    report(
        "6 (Sigma quotient/h-poly/decomposition; monotonicity under its hypothesis)",
        ok,
        &format!(
            "{} rows, worst margin {:.3e}, {} rows qualified for the monotonicity hypothesis",
            rep.rows.len(),
            rep.worst_margin,
            monotone_checked
        ),
    );
}

/// Criterion 7: pruned searches at n = 7 and n = 8 with t = 2 complete and
/// emit verifiable certificates; the witness structure report is emitted;
/// matches_construction is recorded (either way is valid, a match is
/// expected from the theory and found in practice); and gamma(r_of_t(t), n)
/// has exactly t-1 unbalanced 4-cliques for t in {2,4,7,11}, n <= 12.
#[test]
fn criterion_7_tk4_desk_scale() {
    for n in [7usize, 8] {
        let s = SearchSpec {
            n,
            objective: Objective::Index,
            family: Family::Tk4Free(2),
            connected_only: false,
            prune: true,
            jobs: 8,
            checkpoint_path: None,
        };
        let cert = extremal_search(&s).unwrap();
        verify_certificate(&cert).expect("certificate must verify");
        let witness = decode_sg6(&cert.witness).unwrap();
        let structure = verify_extremal_structure(&witness, 2).unwrap();
        println!(
            "acceptance 7 structure report (n={n}): {}",
            serde_json::to_string(&structure).unwrap()
        );
        let mc = cert.matches_construction.as_ref().expect("tk4 family records a construction");
        println!(
            "acceptance 7 (n={n}): best {:.12}, witness {}, matches gamma(2,{n}) = {}, wall {:.1}s, {} classes",
            cert.best_value, cert.witness, mc.switching_isomorphic, cert.wall_seconds,
            cert.classes_examined,
        );
        assert!(structure.unbalanced && structure.connected);
        // Either outcome is acceptance-valid; the observed outcome is a
        // match, so a mismatch here would be a regression to investigate.
        assert!(mc.switching_isomorphic, "expected the gamma(2,{n}) maximizer");
        assert!((cert.best_value - lambda1_gamma(2, n).unwrap()).abs() <= 1e-8);
    }

    let mut checked = 0;
    for t in [2u64, 4, 7, 11] {
        let r = r_of_t(t).unwrap() as usize;
        for n in (r + 2)..=12 {
            let g = gamma(r, n).unwrap();
            assert!(is_tk4_free(&g, t).unwrap(), "t={t} n={n}");
            assert_eq!(count_unbalanced_k4(&g), t - 1, "t={t} n={n}");
            checked += 1;
        }
    }
    report("7 (tK4 searches at n=7,8 and gamma counts)", true, &format!("{checked} (t,n) count checks"));
}

/// Criterion 8: every labeled signed graph with n <= 5 satisfies
/// lambda_1 <= n (1 - 1/omega_b) + 1e-9.
#[test]
fn criterion_8_balanced_clique_bound() {
    let rep = lemmas::suite_balanced_clique_bound(5).unwrap();
    report(
        "8 (balanced-clique-number bound, exhaustive n<=5)",
        rep.pass && rep.rows.len() == 5,
        &format!("worst margin {:.3e}", rep.worst_margin),
    );
}

/// Criterion 9: for every underlying graph with n <= 5, the number of
/// distinct canonical signatures over all 2^m signatures is 2^(m-n+c), and
/// the canonical signature is constant on switching classes (oracle: all
/// 2^n switchings).
#[test]
fn criterion_9_switching_class_machinery() {
    let mut graphs_checked = 0u64;
    for n in 1..=5usize {
        let pairs = n * (n - 1) / 2;
        let edge_list: Vec<(usize, usize)> =
            (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
        for mask in 0u64..(1 << pairs) {
            let present: Vec<(usize, usize)> = edge_list
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let m = present.len();
            let underlying = SignedGraph::new(
                n,
                &present.iter().map(|&(i, j)| (i, j, Sign::Plus)).collect::<Vec<_>>(),
            )
            .unwrap();
            let c = underlying.components().len();
            let mut canon_forms = std::collections::HashSet::new();
            for bits in 0u64..(1 << m) {
                let edges: Vec<(usize, usize, Sign)> = present
                    .iter()
                    .enumerate()
                    .map(|(k, &(i, j))| {
                        (i, j, if bits >> k & 1 == 1 { Sign::Minus } else { Sign::Plus })
                    })
                    .collect();
                let g = SignedGraph::new(n, &edges).unwrap();
                let canon = g.canonical_signature();
                // Constant on the whole switching orbit.
                for u in 0u64..(1 << n) {
                    let switched = g.switch(sgx_core::VertexSet::from_mask(u));
                    assert_eq!(
                        switched.canonical_signature(),
                        canon,
                        "canonical signature not constant on an orbit (n={n}, mask={mask:b})"
                    );
                }
                canon_forms.insert(encode_sg6(&canon));
            }
            assert_eq!(
                canon_forms.len() as u64,
                1u64 << (m + c - n),
                "class count mismatch at n={n}, mask={mask:b}"
            );
            graphs_checked += 1;
        }
    }
    report("9 (switching-class counts and canonicity)", true, &format!("{graphs_checked} underlying graphs"));
}

/// Criterion 10: certificates are byte-identical across jobs in {1,4}
/// (modulo wall_seconds), and pruning never changes the best value or the
/// witness at n in {5,6} for any family.
#[test]
fn criterion_10_determinism_and_pruning() {
    // Determinism across worker counts.
    for (n, family) in [(5usize, Family::Tk4Free(2)), (6, Family::AllUnbalanced)] {
        let mut s1 = spec(n, Objective::Index, family);
        s1.prune = true;
        let mut s4 = s1.clone();
        s1.jobs = 1;
        s4.jobs = 4;
        let c1 = extremal_search(&s1).unwrap();
        let c4 = extremal_search(&s4).unwrap();
        assert_eq!(strip_wall(&c1), strip_wall(&c4), "jobs=1 vs jobs=4 at n={n}");
    }

    // Pruning soundness across all families.
    let families = [
        Family::AllUnbalanced,
        Family::Tk4Free(2),
        Family::KrFree(4),
        Family::C3Free,
    ];
    for n in [5usize, 6] {
        for family in families {
            let mut unpruned = spec(n, Objective::Index, family);
            unpruned.prune = false;
            let mut pruned = unpruned.clone();
            pruned.prune = true;
            let a = extremal_search(&unpruned).unwrap();
            let b = extremal_search(&pruned).unwrap();
            assert_eq!(a.best_value, b.best_value, "family {family:?} n={n}");
            assert_eq!(a.witness, b.witness, "family {family:?} n={n}");
        }
    }
    report("10 (determinism across jobs; pruning soundness)", true, "jobs {1,4}; 8 family/order pairs");
}
