//! The ten acceptance criteria at full sample counts, one report line each.

use bl4kit::autn::{t_subgroup_commutator, TSubgroup};
use bl4kit::normal_form::{are_isomorphic, canonical_label, opposite_witness, IsoResult, StepKind};
use bl4kit::selftest::{self, Counts, SuiteReport};
use bl4kit::{int, is_isomorphism, q, Bl4Presentation, Label, Matrix, NotBl4Reason, Presentation, Rational};

const SEED: u64 = 0x5eed;

fn line(r: &SuiteReport) -> String {
    let verdict = if r.ok() { "PASS" } else { "FAIL" };
    format!("criterion {}: {verdict} ({}, {} passed, {} failed)", r.criterion, r.name, r.passed, r.failed)
}

fn d(lambda: Rational, mu: Rational) -> Presentation {
    Bl4Presentation::normalized(int(1), Matrix::diagonal([mu, lambda]))
}

#[test]
fn all_criteria_at_full_counts() {
    let started = std::time::Instant::now();
    let reports = selftest::run_all(&Counts::full(), SEED);
    assert_eq!(reports.len(), 10);
    for (i, r) in reports.iter().enumerate() {
        assert_eq!(usize::from(r.criterion), i + 1);
        println!("{}", line(r));
        for f in &r.failures {
            println!("    {f}");
        }
    }
    println!("total {:.1?}", started.elapsed());
    let failed: Vec<_> = reports.iter().filter(|r| !r.ok()).map(|r| r.criterion).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
fn frozen_values() {
    // criterion 1 spot checks, including the pair tie-break
    let (l, chain) = canonical_label(&d(int(3), int(2))).unwrap();
    assert_eq!(l, Label::d(q(3, 2), q(1, 2)).unwrap());
    assert!(chain.has_step(StepKind::Opposite));
    let (l, _) = canonical_label(&d(int(1), int(-1))).unwrap();
    assert_eq!(l, Label::d(int(-1), int(-1)).unwrap());
    let (l, _) = canonical_label(&Label::C(int(5)).presentation()).unwrap();
    assert_eq!(l, Label::C(int(5)));

    // criterion 6
    let (d32, half) = (d(int(3), int(2)), d(q(3, 2), q(1, 2)));
    let IsoResult::Isomorphic(w) = are_isomorphic(&d32, &half).unwrap() else { panic!("pair not isomorphic") };
    assert!(is_isomorphism(&d32.to_structure_constants(), &half.to_structure_constants(), &w).unwrap());
    assert!(matches!(are_isomorphic(&d32, &d(int(2), int(3))).unwrap(), IsoResult::NotIsomorphic(..)));
    let m = opposite_witness(&int::<Rational>(2));
    assert!(is_isomorphism(&d32.to_structure_constants(), &half.to_structure_constants(), &m).unwrap());

    // criterion 9
    let c: Rational = t_subgroup_commutator(TSubgroup::Plus, &[int(3), int(4)], &[int(1), int(2)]);
    assert_eq!(c, int(-4));

    // criterion 10
    for c in [1, -2, 7] {
        let p = Bl4Presentation::<Rational>::new(int(0), int(1), Matrix::from_int_rows([[0, 0], [c, 0]])).unwrap();
        assert_eq!(p.check_bl4(), Err(NotBl4Reason::Decomposable));
    }
}
