//! The classification for `n = 7` against the transcribed tables.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use kostant_core::patterns::{consecutive_occurrences, verify_witness, witness_pair, PatternWitness};
use kostant_core::perm::{enumerate_involutions, Permutation};
use kostant_core::pipeline::cases::{run_case, CASES};
use kostant_core::pipeline::fc::{fc_distinct, fc_kostant, fc_verify, SpecialInvolution};
use kostant_core::pipeline::{classify_all, counts_report, parabolic_lift_table, pattern_table, SweepMode, Verdict};
use kostant_core::tableaux::{shape, Partition};
use kostant_core::Hecke;

fn hecke7() -> &'static Hecke {
    static H: OnceLock<Hecke> = OnceLock::new();
    H.get_or_init(|| Hecke::new(7).unwrap())
}

fn fixture(name: &str) -> Vec<Vec<String>> {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.split(';').map(|s| s.trim().to_string()).collect())
        .collect()
}

fn c7(s: &str) -> Permutation {
    Permutation::from_compressed(7, s).unwrap()
}

fn subset(s: &str) -> Vec<usize> {
    s.split(',').map(|t| t.parse().unwrap()).collect()
}

#[test]
fn parabolic_lifts_match_table() {
    let rows = parabolic_lift_table(7).unwrap();
    let want = fixture("table1.txt");
    assert_eq!(rows.len(), 161);
    assert_eq!(want.len(), 161);
    let got: BTreeSet<(Permutation, Vec<usize>, Permutation, bool)> =
        rows.iter().map(|r| (r.d.clone(), r.subset.clone(), r.w.clone(), r.kostant)).collect();
    let exp: BTreeSet<(Permutation, Vec<usize>, Permutation, bool)> =
        want.iter().map(|r| (c7(&r[0]), subset(&r[1]), c7(&r[2]), r[3] == "true")).collect();
    let missing: Vec<_> = exp.difference(&got).collect();
    let extra: Vec<_> = got.difference(&exp).collect();
    assert!(missing.is_empty() && extra.is_empty(), "missing {missing:?}\nextra {extra:?}");
}

fn lift_set() -> BTreeSet<Permutation> {
    parabolic_lift_table(7).unwrap().into_iter().map(|r| r.d).collect()
}

#[test]
fn parabolic_lift_kostant_matches_components() {
    let w0 = Permutation::longest(7);
    for r in parabolic_lift_table(7).unwrap() {
        let ctx = kostant_core::perm::ParabolicContext::new(7, &r.subset).unwrap();
        assert!(ctx.contains(&r.w));
        let lifted = &(&r.w * &ctx.longest_element()) * &w0;
        assert_eq!(kostant_core::tableaux::cell_involution(kostant_core::perm::Side::Left, &lifted), r.d);
    }
}

fn factors(s: &str) -> Vec<SpecialInvolution> {
    if s == "e" {
        return Vec::new();
    }
    s.split_whitespace().map(|t| SpecialInvolution::parse(7, t).unwrap()).collect()
}

#[test]
fn fully_commutative_rows_match_table() {
    let want = fixture("table2.txt");
    assert_eq!(want.len(), 29);
    for r in &want {
        let d = c7(&r[0]);
        let f = factors(&r[1]);
        let k = r[2] == "true";
        assert!(fc_verify(&d, &f), "{}", r[0]);
        assert_eq!(fc_distinct(&f), k, "{}", r[0]);
        assert_eq!(fc_kostant(&d).unwrap(), k, "{}", r[0]);
    }
    let lifts = lift_set();
    let got: BTreeSet<Permutation> =
        enumerate_involutions(7).into_iter().filter(|d| shape(d).parts().len() <= 2 && !lifts.contains(d)).collect();
    let exp: BTreeSet<Permutation> = want.iter().map(|r| c7(&r[0])).collect();
    assert_eq!(got, exp);
}

fn remaining_after_fc() -> Vec<Permutation> {
    let lifts = lift_set();
    enumerate_involutions(7).into_iter().filter(|d| shape(d).parts().len() > 2 && !lifts.contains(d)).collect()
}

#[test]
fn pattern_rows_match_table() {
    let remaining = remaining_after_fc();
    assert_eq!(remaining.len(), 42);
    let rows = pattern_table(&remaining);
    let want = fixture("table3.txt");
    assert_eq!(want.len(), 25);
    let got: BTreeSet<Permutation> = rows.iter().map(|r| r.d.clone()).collect();
    let exp: BTreeSet<Permutation> = want.iter().map(|r| c7(&r[0])).collect();
    assert_eq!(got, exp);
    let h = hecke7();
    for r in &want {
        let d = c7(&r[0]);
        assert_eq!(d, Permutation::from_one_line_str(&r[1]).unwrap());
        let pattern = Permutation::from_one_line_str(&r[2]).unwrap();
        let position: usize = r[3].parse().unwrap();
        assert!(consecutive_occurrences(&d, &pattern).contains(&position), "{}", r[0]);
        let (x, y) = witness_pair(7, &pattern, position).unwrap();
        let w = PatternWitness { pattern, position, x, y };
        assert!(verify_witness(h, &d, &w).unwrap(), "{}", r[0]);
    }
}

#[test]
fn pattern_certificates_hold_for_every_occurrence() {
    let h = hecke7();
    for row in pattern_table(&remaining_after_fc()) {
        assert!(kostant_core::pipeline::table3::certify_row(h, &row).unwrap(), "{}", row.d.to_compressed());
    }
}

#[test]
fn case_scripts_pass() {
    let h = hecke7();
    let positive = ["6a", "6b", "10", "11"];
    let mut bad = Vec::new();
    for script in CASES {
        let res = run_case(h, script, SweepMode::Graded).unwrap();
        let failed: Vec<_> = res.steps.iter().filter(|s| !s.ok).map(|s| s.claim.clone()).collect();
        if !failed.is_empty() {
            bad.push(format!("case {}: {failed:?}", script.id));
        }
        assert_eq!(res.kostant, positive.contains(&script.id), "case {}", script.id);
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn case_scripts_cover_the_rest() {
    let mut rest: BTreeSet<Permutation> = remaining_after_fc().into_iter().collect();
    for r in pattern_table(&remaining_after_fc()) {
        rest.remove(&r.d);
    }
    for script in CASES {
        assert!(rest.remove(&c7(script.d)), "case {}", script.id);
    }
    assert!(rest.is_empty(), "{rest:?}");
}

#[test]
fn pair_plans_match_listing() {
    let h = hecke7();
    let want = fixture("kh_pairs.txt");
    for (id, d) in [("6a", "234_2"), ("10", "2345_2"), ("11", "3_24_25_3")] {
        let plan: BTreeSet<(Permutation, Permutation)> =
            kostant_core::pipeline::kh_pair_plan(h, &c7(d)).unwrap().into_iter().collect();
        let exp: BTreeSet<(Permutation, Permutation)> =
            want.iter().filter(|r| r[0] == id).map(|r| (c7(&r[1]), c7(&r[2]))).collect();
        assert_eq!(plan, exp, "case {id}");
    }
}

fn table4_word(s: &str) -> &str {
    // The listing prints this word without its block separator.
    if s == "2435_26_4" {
        "24_35_26_4"
    } else {
        s
    }
}

#[test]
fn classification_counts() {
    let recs = classify_all(hecke7(), SweepMode::Graded).unwrap();
    assert_eq!(recs.len(), 232);
    assert!(recs.iter().all(|r| r.checked), "unchecked");
    let rep = counts_report(&recs);
    assert_eq!(rep.pending_involutions, 0);
    assert_eq!(rep.positive_involutions, 125);
    assert_eq!(rep.positive_elements, 2631);
    let neg: BTreeSet<Permutation> =
        recs.iter().filter(|r| r.verdict == Verdict::Negative).map(|r| r.d.clone()).collect();
    let exp: BTreeSet<Permutation> = fixture("table4.txt").iter().map(|r| c7(table4_word(&r[0]))).collect();
    assert_eq!(exp.len(), 107);
    assert_eq!(neg, exp);
    let pos = |p: &[usize]| rep.per_shape[&Partition::new(p.to_vec()).unwrap()].0;
    assert_eq!(pos(&[5, 1, 1]), 12);
    assert_eq!(pos(&[3, 1, 1, 1, 1]), 9);
    assert_eq!(pos(&[4, 2, 1]), 19);
    assert_eq!(pos(&[3, 2, 1, 1]), 21);
    assert_eq!(recs.iter().filter(|r| r.graded_sweep_pending).count(), 3);
}

#[test]
fn degree_six_counts_per_shape() {
    let recs = classify_all(&Hecke::new(6).unwrap(), SweepMode::Graded).unwrap();
    let rep = counts_report(&recs);
    let pos = |p: &[usize]| rep.per_shape[&Partition::new(p.to_vec()).unwrap()].0;
    assert_eq!(pos(&[4, 1, 1]), 8);
    assert_eq!(pos(&[3, 1, 1, 1]), 7);
}
