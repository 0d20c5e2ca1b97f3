use super::*;
use crate::constructions::{complete_one_negative, complete_positive, gamma};
use crate::spectra;

const SQRT5: f64 = 2.23606797749979;

fn spec(n: usize, family: Family) -> SearchSpec {
    SearchSpec {
        n,
        objective: Objective::Index,
        family,
        connected_only: false,
        prune: false,
        jobs: 1,
        checkpoint_path: None,
    }
}

fn cert_without_wall(cert: &SearchCertificate) -> String {
    let mut c = cert.clone();
    c.wall_seconds = 0.0;
    serde_json::to_string(&c).unwrap()
}

#[test]
fn switching_class_counts() {
    // C4: 2^(4-4+1) = 2 classes; K4: 2^(6-4+1) = 8; a tree: exactly 1.
    let c4 = SignedGraph::new(
        4,
        &[
            (0, 1, Sign::Plus),
            (1, 2, Sign::Plus),
            (2, 3, Sign::Plus),
            (0, 3, Sign::Plus),
        ],
    )
    .unwrap();
    assert_eq!(enumerate_switching_classes(&c4).unwrap().len(), 2);
    assert_eq!(enumerate_switching_classes(&complete_positive(4).unwrap()).unwrap().len(), 8);
    let tree =
        SignedGraph::new(4, &[(0, 1, Sign::Plus), (0, 2, Sign::Plus), (2, 3, Sign::Plus)])
            .unwrap();
    assert_eq!(enumerate_switching_classes(&tree).unwrap().len(), 1);
}

#[test]
fn switching_class_representatives_are_canonical_and_complete() {
    // Oracle: partition all 2^m signatures of K4 by switching equivalence.
    let k4 = complete_positive(4).unwrap();
    let reps = enumerate_switching_classes(&k4).unwrap();
    for rep in &reps {
        assert_eq!(rep.canonical_signature(), *rep);
    }
    assert!(reps[0].negative_edge_count() == 0 && reps[0].is_balanced());
    for rep in reps.iter().skip(1) {
        assert!(!rep.is_balanced());
    }
    let edge_list: Vec<(usize, usize)> = k4.edges().map(|(i, j, _)| (i, j)).collect();
    let mut seen = std::collections::HashSet::new();
    for bits in 0u64..(1 << 6) {
        let edges: Vec<(usize, usize, Sign)> = edge_list
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| (i, j, if bits >> k & 1 == 1 { Sign::Minus } else { Sign::Plus }))
            .collect();
        let g = SignedGraph::new(4, &edges).unwrap();
        let canon = g.canonical_signature();
        assert!(reps.contains(&canon), "every signature reduces to some representative");
        seen.insert(crate::sgraph::encode_sg6(&canon));
    }
    assert_eq!(seen.len(), reps.len());
}

#[test]
fn switching_class_guard() {
    assert!(matches!(
        enumerate_switching_classes(&complete_positive(10).unwrap()),
        Err(Error::Capability(_))
    ));
}

#[test]
fn underlying_upper_bound_examples() {
    assert!((underlying_upper_bound(&complete_one_negative(6).unwrap()).unwrap() - 5.0).abs()
        < 1e-9);
    assert_eq!(underlying_upper_bound(&SignedGraph::empty(4).unwrap()).unwrap(), 0.0);
}

#[test]
fn pruning_bound_is_sound_exhaustively_at_n4() {
    // lambda_1 of any signature never exceeds lambda_1 of the all-positive
    // signature (oracle: all 2^6 masks x 2^6 signatures).
    for mask in 0u64..(1 << 6) {
        let (adj, _) = super::small::rows_from_mask(4, mask);
        let g = SignedGraph::from_rows(4, adj[..4].to_vec(), vec![0; 4]);
        let ub = underlying_upper_bound(&g).unwrap();
        let edge_list: Vec<(usize, usize)> = g.edges().map(|(i, j, _)| (i, j)).collect();
        for bits in 0u64..(1 << edge_list.len()) {
            let edges: Vec<(usize, usize, Sign)> = edge_list
                .iter()
                .enumerate()
                .map(|(k, &(i, j))| {
                    (i, j, if bits >> k & 1 == 1 { Sign::Minus } else { Sign::Plus })
                })
                .collect();
            let sg = SignedGraph::new(4, &edges).unwrap();
            assert!(spectra::index(&sg).unwrap() <= ub + 1e-9);
        }
    }
}

#[test]
fn search_guards() {
    assert!(matches!(
        extremal_search(&spec(12, Family::AllUnbalanced)),
        Err(Error::Capability(_))
    ));
    let mut s = spec(7, Family::AllUnbalanced);
    s.prune = false;
    assert!(matches!(extremal_search(&s), Err(Error::Capability(_))));
    assert!(extremal_search(&spec(2, Family::AllUnbalanced)).is_err());
    assert!(extremal_search(&spec(4, Family::KrFree(2))).is_err());
    assert!(extremal_search(&spec(4, Family::Tk4Free(0))).is_err());
    let mut s = spec(4, Family::AllUnbalanced);
    s.jobs = 0;
    assert!(extremal_search(&s).is_err());
}

#[test]
fn search_n4_all_unbalanced_finds_sqrt5() {
    let cert = extremal_search(&spec(4, Family::AllUnbalanced)).unwrap();
    assert!((cert.best_value - SQRT5).abs() < 1e-8, "best {}", cert.best_value);
    let witness = crate::sgraph::decode_sg6(&cert.witness).unwrap();
    assert!(
        crate::sgraph::switching_isomorphic(&witness, &complete_one_negative(4).unwrap())
            .unwrap()
    );
    let mc = cert.matches_construction.as_ref().unwrap();
    assert!(mc.switching_isomorphic);
    assert!(cert.witness_checks.unbalanced && cert.witness_checks.family_free);
    verify_certificate(&cert).unwrap();

    // Exhaustive cross-check against the naive 3^6 oracle.
    let (naive_best, argmax) =
        naive_scan(4, Objective::Index, Family::AllUnbalanced, false).unwrap();
    assert!((naive_best - cert.best_value).abs() < 1e-8);
    for g in argmax {
        assert!(crate::sgraph::switching_isomorphic(&g, &witness).unwrap());
    }
}

#[test]
fn search_n4_c3_free_radius_is_sqrt2() {
    let s = SearchSpec {
        n: 4,
        objective: Objective::SpectralRadius,
        family: Family::C3Free,
        connected_only: true,
        prune: false,
        jobs: 1,
        checkpoint_path: None,
    };
    let cert = extremal_search(&s).unwrap();
    assert!((cert.best_value - 2.0f64.sqrt()).abs() < 1e-8);
    let witness = crate::sgraph::decode_sg6(&cert.witness).unwrap();
    let unb_c4 = SignedGraph::new(
        4,
        &[
            (0, 1, Sign::Minus),
            (1, 2, Sign::Plus),
            (2, 3, Sign::Plus),
            (0, 3, Sign::Plus),
        ],
    )
    .unwrap();
    assert!(crate::sgraph::switching_isomorphic(&witness, &unb_c4).unwrap());
    verify_certificate(&cert).unwrap();
}

#[test]
fn pruned_and_unpruned_agree_at_n5() {
    for family in [Family::AllUnbalanced, Family::Tk4Free(2)] {
        let unpruned = extremal_search(&spec(5, family)).unwrap();
        let mut pruned_spec = spec(5, family);
        pruned_spec.prune = true;
        let pruned = extremal_search(&pruned_spec).unwrap();
        assert_eq!(unpruned.best_value, pruned.best_value);
        assert_eq!(unpruned.witness, pruned.witness);
    }
}

#[test]
fn certificates_are_deterministic_across_jobs() {
    let mut s1 = spec(5, Family::AllUnbalanced);
    let mut s4 = spec(5, Family::AllUnbalanced);
    s1.jobs = 1;
    s4.jobs = 4;
    let c1 = extremal_search(&s1).unwrap();
    let c4 = extremal_search(&s4).unwrap();
    assert_eq!(cert_without_wall(&c1), cert_without_wall(&c4));
}

#[test]
fn tampered_certificates_fail_verification() {
    // tk4_free(1): no unbalanced 4-clique at all, so the one-negative-edge
    // K4 (count 1) violates the family when swapped in as witness.
    let cert = extremal_search(&spec(4, Family::Tk4Free(1))).unwrap();
    verify_certificate(&cert).unwrap();

    let mut tampered = cert.clone();
    tampered.best_value += 0.5;
    let err = verify_certificate(&tampered).unwrap_err();
    assert!(err.to_string().contains("objective mismatch"), "{err}");

    // A witness with >= t unbalanced K4s under tk4_free(t) names the family.
    let mut family_violation = cert.clone();
    family_violation.witness = crate::sgraph::encode_sg6(&complete_one_negative(4).unwrap());
    family_violation.best_value =
        spectra::index(&complete_one_negative(4).unwrap()).unwrap();
    let err = verify_certificate(&family_violation).unwrap_err();
    assert!(err.to_string().contains("family violation"), "{err}");

    let mut balanced = cert.clone();
    balanced.witness = crate::sgraph::encode_sg6(&complete_positive(4).unwrap());
    assert!(verify_certificate(&balanced).is_err());
}

#[test]
fn checkpoint_resume_reproduces_the_certificate() {
    let dir = std::env::temp_dir().join(format!("sgx-ckpt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("journal.txt");
    let _ = std::fs::remove_file(&path);

    let fresh = extremal_search(&spec(4, Family::AllUnbalanced)).unwrap();

    let mut with_ckpt = spec(4, Family::AllUnbalanced);
    with_ckpt.checkpoint_path = Some(path.clone());
    let first = extremal_search(&with_ckpt).unwrap();
    assert_eq!(cert_without_wall(&fresh), cert_without_wall(&first));

    // Truncate the journal to a prefix of complete chunk records and resume.
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.len() >= 8, "expected several chunk records");
    let keep = lines.len() / 2 - (lines.len() / 2) % 2;
    std::fs::write(&path, lines[..keep].join("\n") + "\n").unwrap();
    let resumed = extremal_search(&with_ckpt).unwrap();
    assert_eq!(cert_without_wall(&fresh), cert_without_wall(&resumed));

    // A journal written under a different spec is rejected.
    let mut other = spec(4, Family::Tk4Free(2));
    other.checkpoint_path = Some(path.clone());
    assert!(extremal_search(&other).is_err());

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn structure_report_for_gamma_witnesses() {
    let report = verify_extremal_structure(&gamma(2, 8).unwrap(), 2).unwrap();
    assert!(report.unbalanced && report.connected);
    assert_eq!(report.r, Some(2));
    assert_eq!(report.negative_edges_after_switching, Some(1));
    assert_eq!(report.common_neighborhood, Some(2));
    assert_eq!(report.matches_gamma, Some(true));

    let report = verify_extremal_structure(&gamma(3, 9).unwrap(), 4).unwrap();
    assert_eq!(report.common_neighborhood, Some(3));
    assert_eq!(report.matches_gamma, Some(true));

    let report = verify_extremal_structure(&complete_positive(5).unwrap(), 2).unwrap();
    assert!(!report.unbalanced);
    assert_eq!(report.note.as_deref(), Some("not unbalanced"));

    // 8t-7 = 17 is not a perfect square at t = 3.
    let report = verify_extremal_structure(&gamma(2, 6).unwrap(), 3).unwrap();
    assert!(report.note.unwrap().contains("r not integral"));
}

#[test]
fn lemma_suite_dispatch() {
    assert!(lemmas::lemma_suite("nope", &lemmas::SuiteParams::default()).is_err());
    let report = lemmas::lemma_suite(
        "2.1",
        &lemmas::SuiteParams { n_max: Some(8), ..Default::default() },
    )
    .unwrap();
    assert!(report.pass);
    assert!(report.worst_margin >= 0.0);
    let rows = report.rows.len();
    assert_eq!(rows, (5..=8).map(|n| n - 2).sum::<usize>());
}

#[test]
fn seed_candidates_are_family_members() {
    for n in 4..=6 {
        for g in seed_candidates(n) {
            assert_eq!(g.order(), n);
            assert!(!g.is_balanced());
        }
    }
}

#[test]
fn small_graph_gray_walk_matches_direct_enumeration() {
    // The Gray walk over co-tree signs visits each unbalanced class once,
    // with negative-triangle masks consistent with a direct recount.
    let mask = 0b111111u64; // K4
    let ctx = small::UnderlyingCtx::build(4, mask, None);
    assert_eq!(ctx.class_count(), 8);
    let mut seen = std::collections::HashSet::new();
    ctx.for_each_unbalanced_class(|neg, neg_tris| {
        let g = SignedGraph::from_rows(4, ctx.adj[..4].to_vec(), neg[..4].to_vec());
        assert!(!g.is_balanced());
        assert_eq!(g.canonical_signature(), g);
        // Recount negative triangles directly.
        let mut count = 0;
        for t in 0..4u32 {
            // triangle list for K4 in (i<j<k) order: 012, 013, 023, 123
            let tris = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
            let [a, b, c] = tris[t as usize];
            let parity = (g.neg_row(a) >> b & 1) ^ (g.neg_row(a) >> c & 1)
                ^ (g.neg_row(b) >> c & 1);
            if parity == 1 {
                count += 1;
            }
            assert_eq!(parity == 1, neg_tris >> t & 1 == 1, "triangle {t}");
        }
        assert!(count > 0, "unbalanced complete graphs have a negative triangle");
        seen.insert(crate::sgraph::encode_sg6(&g));
    });
    assert_eq!(seen.len(), 7);
}

#[test]
fn torn_final_journal_line_is_tolerated() {
    let dir = std::env::temp_dir().join(format!("sgx-torn-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("journal.txt");
    let _ = std::fs::remove_file(&path);

    let mut with_ckpt = spec(4, Family::AllUnbalanced);
    with_ckpt.checkpoint_path = Some(path.clone());
    let fresh = extremal_search(&with_ckpt).unwrap();

    // Simulate a crash mid-write: drop half of the final record line.
    let text = std::fs::read_to_string(&path).unwrap();
    let keep = &text[..text.len() * 3 / 4];
    let torn = keep.rsplit_once('\n').map(|(head, tail)| {
        format!("{head}\n{}", &tail[..tail.len() / 2])
    });
    std::fs::write(&path, torn.unwrap()).unwrap();
    let resumed = extremal_search(&with_ckpt).unwrap();
    assert_eq!(cert_without_wall(&fresh), cert_without_wall(&resumed));

    // Corruption before well-formed records is rejected.
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    if lines.len() > 4 {
        lines[0] = "0 1 garbage";
        std::fs::write(&path, lines.join("\n")).unwrap();
        assert!(extremal_search(&with_ckpt).is_err());
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
