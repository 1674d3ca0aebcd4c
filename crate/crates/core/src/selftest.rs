//! Property suites exercising the whole library against the structure
//! constant oracle. Each suite is deterministic given its seed.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::is_isomorphism;
use crate::autn::{check_cocycle, delta, t_subgroup_commutator, AutNFactor, PhiVariant, TSubgroup};
use crate::automorphisms::aut_family_of;
use crate::error::{Error, NotBl4Reason, Result};
use crate::extract::extract_presentation;
use crate::field::{int, q};
use crate::groups::sigma;
use crate::linalg::{Matrix, Vector};
use crate::normal_form::{
    are_isomorphic, canonical_label, classify_constants, opposite_params, opposite_witness, properties_of,
    property_table, CanonicalLabel, IsoResult, Properties,
};
use crate::presentation::{iso_condition_holds, Bl4Presentation, WeakIso};
use crate::random;
use crate::{Mat2, Mat4, Presentation, Rational};

type Label = CanonicalLabel<Rational>;

/// Bound on the heights of random rationals.
pub const HEIGHT: i64 = random::DEFAULT_HEIGHT;

/// Sample sizes of the randomized suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    pub orbit_weak: usize,
    pub orbit_general: usize,
    pub eq7: usize,
    pub eq7_min_true: usize,
    pub aut_sound: usize,
    pub aut_complete: usize,
    pub cocycle: usize,
    pub cocycle_theta: usize,
    pub delta: usize,
}

impl Counts {
    pub const fn full() -> Self {
        Self {
            orbit_weak: 500,
            orbit_general: 200,
            eq7: 1000,
            eq7_min_true: 100,
            aut_sound: 1000,
            aut_complete: 1000,
            cocycle: 1000,
            cocycle_theta: 1000,
            delta: 500,
        }
    }

    /// About a tenth of [`full`](Self::full).
    pub const fn quick() -> Self {
        Self {
            orbit_weak: 50,
            orbit_general: 20,
            eq7: 100,
            eq7_min_true: 10,
            aut_sound: 100,
            aut_complete: 100,
            cocycle: 100,
            cocycle_theta: 100,
            delta: 50,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub criterion: u8,
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// The first few failures, for diagnostics.
    pub failures: Vec<String>,
}

const MAX_RECORDED: usize = 5;

impl SuiteReport {
    fn new(criterion: u8, name: &'static str) -> Self {
        Self { criterion, name, passed: 0, failed: 0, failures: Vec::new() }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(what());
            }
        }
    }

    fn check_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => self.check(false, || format!("{}: {e}", what())),
        }
    }
}

fn rng_for(seed: u64, criterion: u8) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (u64::from(criterion) << 56))
}

/// `d(lambda, mu)` read straight from the presentation, without label
/// validation.
fn d_presentation(lambda: &Rational, mu: &Rational) -> Presentation {
    Bl4Presentation::normalized(int(1), Matrix::diagonal([mu.clone(), lambda.clone()]))
}

pub fn b_lambdas() -> Vec<Rational> {
    vec![int(-1), int(0), int(1), int(2), q(1, 2)]
}

pub fn c_lambdas() -> Vec<Rational> {
    vec![int(-1), int(0), int(1), int(2), int(5)]
}

/// The `(lambda, mu)` grid for the `d` family, excluded pairs included.
pub fn d_grid() -> Vec<(Rational, Rational)> {
    let lambdas: [Rational; 5] = [int(-2), int(-1), int(0), int(1), int(3)];
    let mus: [Rational; 5] = [int(-2), int(-1), q(1, 2), int(2), int(3)];
    lambdas.iter().flat_map(|l| mus.iter().map(move |m| (l.clone(), m.clone()))).collect()
}

/// Every canonical algebra of the fixed-point sample, as the label of its
/// defining presentation before the tie-break.
pub fn sample_labels() -> Vec<Label> {
    let mut out = vec![Label::A0, Label::A1];
    out.extend(b_lambdas().into_iter().map(Label::B));
    out.extend(c_lambdas().into_iter().map(Label::C));
    out.extend(d_grid().into_iter().filter_map(|(l, m)| Label::d(l, m).ok()));
    out
}

/// The tie-break representative of a label's class, by the pair rule.
fn representative(label: &Label) -> Label {
    match label {
        Label::D { lambda, mu } if !label.is_tie_break_representative() => {
            let (l, m) = opposite_params(lambda, mu);
            Label::D { lambda: l, mu: m }
        }
        other => other.clone(),
    }
}

/// Criterion 1: Each canonical presentation classifies to itself, up to the pair rule,
/// both as a presentation and through its structure constants.
pub fn fixed_points() -> SuiteReport {
    let mut r = SuiteReport::new(1, "canonical fixed points");
    for label in sample_labels() {
        let expected = representative(&label);
        let p = label.presentation();
        let got = canonical_label(&p).map(|(l, _)| l);
        r.check(got.as_ref() == Ok(&expected), || format!("{label}: expected {expected}, got {got:?}"));
        let got = classify_constants(&p.to_structure_constants()).map(|(l, _)| l);
        r.check(got.as_ref() == Ok(&expected), || format!("{label} from constants: got {got:?}"));
    }
    r
}

/// Criterion 2: Classification is constant on orbits of weak isomorphisms and of
/// general changes of basis; the witness always passes the oracle.
pub fn orbit_invariance(counts: &Counts, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new(2, "orbit invariance");
    let mut rng = rng_for(seed, 2);
    for i in 0..counts.orbit_weak + counts.orbit_general {
        let label: Label = random::canonical_label(&mut rng, HEIGHT);
        let m: Mat4 = if i < counts.orbit_weak {
            random::weak_iso(&mut rng, HEIGHT).to_matrix()
        } else {
            random::invertible_matrix(&mut rng, HEIGHT)
        };
        let sc = label.structure_constants().apply_basis_change(&m).expect("invertible");
        let ok = classify_constants(&sc).and_then(|(l, chain)| {
            Ok(l == label && is_isomorphism(&sc, &label.structure_constants(), chain.product())?)
        });
        r.check_result(ok, || format!("{label} moved by {m:?}"));
    }
    r
}

/// Evaluates the 3x3 isomorphism condition; swapped out in mutation tests.
pub type IsoEvaluator = fn(&Presentation, &Presentation, &WeakIso<Rational>) -> Result<bool>;

fn random_normalized_bl4<R: Rng>(rng: &mut R) -> Presentation {
    random::bl4_presentation::<Rational, _>(rng, HEIGHT).normalize_xi3().0
}

/// `(hatted, w)` with `w` an isomorphism from `hatted` onto `plain`: move
/// `plain` by a random weak isomorphism, read a normalized presentation
/// back and compose the witnesses.
fn pushed_forward<R: Rng>(rng: &mut R, plain: &Presentation) -> (Presentation, WeakIso<Rational>) {
    let w = random::weak_iso::<Rational, _>(rng, HEIGHT).to_matrix();
    let moved = plain.to_structure_constants().apply_basis_change(&w).expect("invertible");
    let ex = extract_presentation(&moved).expect("isomorphic to a BL4 algebra");
    let (hatted, n) = ex.presentation.normalize_xi3();
    let total = &(&w * &ex.basis) * &n.to_matrix();
    let total = WeakIso::from_matrix(&total).expect("isomorphisms preserve the flag p' in p");
    (hatted, total)
}

/// Nudge one parameter of a weak isomorphism, keeping `r3 = det P`.
fn perturbed<R: Rng>(rng: &mut R, w: &WeakIso<Rational>) -> WeakIso<Rational> {
    let bump: Rational = random::nonzero_rational(rng, HEIGHT);
    let mut u = w.u().clone();
    let mut pq3 = w.pq3().clone();
    let mut u0 = w.u0().clone();
    match rng.gen_range(0..4) {
        0 => u[0] = u[0].clone() + bump,
        1 => u[1] = u[1].clone() + bump,
        2 => pq3[rng.gen_range(0..2)] += bump,
        _ => {
            u0 += bump;
            if u0.is_zero() {
                u0 = int(1);
            }
        }
    }
    WeakIso::xi3_preserving(u0, u, w.p().clone(), pq3).expect("P unchanged")
}

/// Criterion 3: The 3x3 matrix condition agrees with the oracle.
pub fn eq7_equivalence_with(counts: &Counts, seed: u64, evaluator: IsoEvaluator) -> SuiteReport {
    let mut r = SuiteReport::new(3, "isomorphism condition vs oracle");
    let mut rng = rng_for(seed, 3);
    let mut trues = 0;
    for i in 0..counts.eq7 {
        let plain = random_normalized_bl4(&mut rng);
        let (hatted, w) = match i % 4 {
            0 | 1 => pushed_forward(&mut rng, &plain),
            2 => {
                let (h, w) = pushed_forward(&mut rng, &plain);
                (h, perturbed(&mut rng, &w))
            }
            _ => (random_normalized_bl4(&mut rng), random::xi3_preserving_weak_iso(&mut rng, HEIGHT)),
        };
        let oracle = is_isomorphism(&plain.to_structure_constants(), &hatted.to_structure_constants(), &w.to_matrix());
        let fast = evaluator(&plain, &hatted, &w);
        if oracle == Ok(true) {
            trues += 1;
        }
        r.check(oracle.is_ok() && oracle == fast, || {
            format!("{plain:?} <- {hatted:?} by {w:?}: oracle {oracle:?}, condition {fast:?}")
        });
    }
    r.check(trues >= counts.eq7_min_true, || format!("only {trues} true instances"));
    r
}

pub fn eq7_equivalence(counts: &Counts, seed: u64) -> SuiteReport {
    eq7_equivalence_with(counts, seed, iso_condition_holds)
}

/// Criterion 4: The property table matches the identity predicates, and the
/// documented rows.
pub fn property_table_suite() -> SuiteReport {
    let mut r = SuiteReport::new(4, "property table");
    let t = |lie, malcev, binary_lie| Properties { lie, malcev, binary_lie };
    for label in sample_labels() {
        let table = property_table(&label);
        let computed = properties_of(&label.structure_constants());
        r.check(table == computed, || format!("{label}: table {table:?}, predicates {computed:?}"));
        let expected = match &label {
            Label::A0 => Some(t(false, false, true)),
            Label::A1 => Some(t(true, true, true)),
            Label::B(_) => Some(t(false, false, false)),
            Label::C(l) if *l == int(2) => Some(t(true, true, true)),
            Label::C(l) if *l == int(-1) => Some(t(false, true, true)),
            Label::C(l) if *l == int(0) => Some(t(false, false, true)),
            Label::D { lambda, mu } => {
                let lie = *lambda == mu.clone() + int::<Rational>(1);
                Some(t(lie, lie, lie))
            }
            _ => None,
        };
        if let Some(e) = expected {
            r.check(computed == e, || format!("{label}: expected {e:?}, predicates {computed:?}"));
        }
    }
    r
}

/// Criterion 5: `J(e0, e1, e2) = (1 + mu - lambda) e3` on `d(lambda, mu)`.
pub fn jacobian_formula() -> SuiteReport {
    let mut r = SuiteReport::new(5, "jacobian formula");
    let e = |i| Vector::<Rational, 4>::basis(i);
    for (l, m) in d_grid() {
        let sc = d_presentation(&l, &m).to_structure_constants();
        let got = sc.jacobian(&e(0), &e(1), &e(2));
        let expected = e(3).scale(&(int::<Rational>(1) + m.clone() - l.clone()));
        r.check(got == expected, || format!("d({l},{m}): {got:?}"));
    }
    r
}

/// Criterion 6: The opposite pair `d(3,2)`, `d(3/2,1/2)` and the non-pair `d(2,3)`.
pub fn opposite_pairs() -> SuiteReport {
    let mut r = SuiteReport::new(6, "opposite pairs");
    let d32 = d_presentation(&int(3), &int(2));
    let half = d_presentation(&q(3, 2), &q(1, 2));
    let d23 = d_presentation(&int(2), &int(3));
    match are_isomorphic(&d32, &half) {
        Ok(IsoResult::Isomorphic(w)) => r
            .check_result(is_isomorphism(&d32.to_structure_constants(), &half.to_structure_constants(), &w), || {
                "witness fails the oracle".into()
            }),
        other => r.check(false, || format!("d(3,2) vs d(3/2,1/2): {other:?}")),
    }
    let got = are_isomorphic(&d32, &d23);
    r.check(matches!(got, Ok(IsoResult::NotIsomorphic(_, _))), || format!("d(3,2) vs d(2,3): {got:?}"));
    r.check_result(
        is_isomorphism(&d32.to_structure_constants(), &half.to_structure_constants(), &opposite_witness(&int(2))),
        || "opposite matrix at mu = 2".into(),
    );
    r
}

/// Random matrix of weak shape near the family: a member with one free
/// entry changed, or an arbitrary weak isomorphism.
fn near_family<R: Rng>(rng: &mut R, m: &Mat4) -> Mat4 {
    let slots = [(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)];
    loop {
        let (row, col) = slots[rng.gen_range(0..slots.len())];
        let v = m.get(row, col).clone() + random::nonzero_rational::<Rational, _>(rng, HEIGHT);
        let out = m.with_entry(row, col, v);
        if out.is_invertible() {
            return out;
        }
    }
}

/// Criterion 7: Literal automorphism families are sound, and exactly the
/// automorphisms among weak-shape matrices.
pub fn automorphisms(counts: &Counts, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new(7, "automorphism families");
    let mut rng = rng_for(seed, 7);
    for label in sample_labels() {
        let fam = aut_family_of(&label).expect("valid label");
        let sc = label.structure_constants();
        let mut cosets = [0usize; 2];
        for _ in 0..counts.aut_sound {
            let (params, m) = fam.literal.sample(&mut rng, HEIGHT);
            cosets[usize::from(params.coset())] += 1;
            r.check_result(is_isomorphism(&sc, &sc, &m), || format!("{label}: sample {m:?}"));
        }
        let mut agreements = [0usize; 2];
        for i in 0..counts.aut_complete {
            let m = match i % 3 {
                0 => fam.literal.sample(&mut rng, HEIGHT).1,
                1 => {
                    let base = fam.literal.sample(&mut rng, HEIGHT).1;
                    near_family(&mut rng, &base)
                }
                _ => random::weak_iso::<Rational, _>(&mut rng, HEIGHT).to_matrix(),
            };
            let oracle = is_isomorphism(&sc, &sc, &m).expect("invertible");
            let member = fam.literal.membership(&m);
            agreements[usize::from(oracle)] += 1;
            r.check(oracle == member.is_ok(), || format!("{label}: oracle {oracle}, membership {member:?} on {m:?}"));
        }
        r.check(agreements[0] > 0 && agreements[1] > 0, || format!("{label}: one-sided sample {agreements:?}"));
        if label == Label::A1 {
            r.check(cosets[0] > 0 && cosets[1] > 0, || format!("a1 cosets sampled {cosets:?}"));
            r.check_result(is_isomorphism(&sc, &sc, &sigma()), || "sigma".into());
            r.check(fam.literal.membership(&sigma()).map(|p| p.coset()) == Ok(true), || "sigma coset flag".into());
        }
    }
    r
}

fn random_factor<R: Rng>(rng: &mut R) -> AutNFactor<Rational> {
    let a: Rational = random::nonzero_rational(rng, HEIGHT);
    let (b, c): (Rational, Rational) = (random::rational(rng, HEIGHT), random::rational(rng, HEIGHT));
    let d = (int::<Rational>(1) + b.clone() * c.clone()) / a.clone();
    let s = Matrix::from_rows([[a, b], [c, d]]);
    AutNFactor::new(random::nonzero_rational(rng, HEIGHT), s, random::pair(rng, HEIGHT)).expect("det S = 1")
}

/// Criterion 8: The cocycle equation for `phi` and `Theta phi`, and multiplicativity
/// of `delta`.
pub fn cocycle_and_delta(counts: &Counts, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new(8, "cocycle and delta");
    let mut rng = rng_for(seed, 8);
    for _ in 0..counts.cocycle {
        let (a, b): (Mat2, Mat2) =
            (random::invertible_matrix(&mut rng, HEIGHT), random::invertible_matrix(&mut rng, HEIGHT));
        let (pa, pb): ([Rational; 2], [Rational; 2]) = (random::pair(&mut rng, HEIGHT), random::pair(&mut rng, HEIGHT));
        r.check_result(check_cocycle(PhiVariant::Phi, &a, &pa, &b, &pb), || format!("phi at {a:?}, {b:?}"));
    }
    for _ in 0..counts.cocycle_theta {
        let (a, b): (Mat2, Mat2) =
            (random::diagonal_matrix(&mut rng, HEIGHT), random::diagonal_matrix(&mut rng, HEIGHT));
        let (pa, pb): ([Rational; 2], [Rational; 2]) = (random::pair(&mut rng, HEIGHT), random::pair(&mut rng, HEIGHT));
        r.check_result(check_cocycle(PhiVariant::ThetaPhi, &a, &pa, &b, &pb), || format!("Theta phi at {a:?}, {b:?}"));
    }
    for _ in 0..counts.delta {
        let (f, g) = (random_factor(&mut rng), random_factor(&mut rng));
        r.check(delta(&f.mul(&g)) == &delta(&f) * &delta(&g), || format!("delta at {f:?}, {g:?}"));
    }
    r
}

/// Criterion 9: The translation subgroup commutes for the `Theta phi` groups and not
/// for the `phi` groups.
pub fn commutator_distinction() -> SuiteReport {
    let mut r = SuiteReport::new(9, "translation commutator");
    let range = -2..=2;
    for p3 in range.clone() {
        for q3 in range.clone() {
            for p3h in range.clone() {
                for q3h in range.clone() {
                    let (a, b) = ([int(p3), int(q3)], [int(p3h), int(q3h)]);
                    let c: Rational = t_subgroup_commutator(TSubgroup::Minus, &a, &b);
                    r.check(c.is_zero(), || format!("{a:?}, {b:?}: {c}"));
                }
            }
        }
    }
    let c: Rational = t_subgroup_commutator(TSubgroup::Plus, &[int(3), int(4)], &[int(1), int(2)]);
    r.check(c == int(-4), || format!("witness gives {c}"));
    r
}

/// Criterion 10: With `x11 = 0`, a zero first row and `x33 = 0`, the presentation is
/// rejected as decomposable, and `e0 - c e1` annihilates everything.
pub fn decomposable_gap() -> SuiteReport {
    let mut r = SuiteReport::new(10, "decomposable gap");
    for c in [1, -2, 7] {
        let p = Bl4Presentation::new(int(0), int(1), Matrix::from_int_rows([[0, 0], [c, 0]])).expect("xi3 = 1");
        r.check(p.check_bl4() == Err(NotBl4Reason::Decomposable), || format!("c = {c}: {:?}", p.check_bl4()));
        let sc = p.to_structure_constants();
        let e0 = Vector::<Rational, 4>::from_ints([1, -c, 0, 0]);
        let all_zero = (1..4).all(|j| sc.multiply(&e0, &Vector::basis(j)).is_zero());
        r.check(all_zero, || format!("c = {c}: e0 - c e1 is not central"));
        let got = canonical_label(&p).map(|(l, _)| l);
        r.check(got == Err(Error::NotBl4(NotBl4Reason::Decomposable)), || format!("c = {c}: {got:?}"));
    }
    r
}

/// All ten suites, run on parallel threads, in criterion order.
pub fn run_all(counts: &Counts, seed: u64) -> Vec<SuiteReport> {
    let c = *counts;
    let jobs: Vec<Box<dyn FnOnce() -> SuiteReport + Send>> = vec![
        Box::new(fixed_points),
        Box::new(move || orbit_invariance(&c, seed)),
        Box::new(move || eq7_equivalence(&c, seed)),
        Box::new(property_table_suite),
        Box::new(jacobian_formula),
        Box::new(opposite_pairs),
        Box::new(move || automorphisms(&c, seed)),
        Box::new(move || cocycle_and_delta(&c, seed)),
        Box::new(commutator_distinction),
        Box::new(decomposable_gap),
    ];
    std::thread::scope(|s| {
        let handles: Vec<_> = jobs.into_iter().map(|job| s.spawn(job)).collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    })
}
