//! Canonical forms of BL4 algebras with verified witness matrices.
//!
//! Every BL4 algebra is isomorphic to exactly one of `a0`, `a1`, `b(l)`,
//! `c(l)`, `d(l, m)`, except that `d(l, m)` and `d(l/m, 1/m)` are
//! isomorphic through an opposite map. The canonical `d` is the member of
//! that pair whose `(m, l)` is lexicographically smaller.

use std::fmt;

use crate::algebra::{is_isomorphism, StructureConstants};
use crate::error::{Error, Result};
use crate::extract::extract_presentation;
use crate::field::{one, zero, Field};
use crate::identities::{is_binary_lie, is_malcev};
use crate::linalg::Matrix;
use crate::presentation::Bl4Presentation;

/// A canonical algebra. `A1` stands for `d(0, -1)` and `C(l)` for `d(l, 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CanonicalLabel<F> {
    A0,
    A1,
    B(F),
    C(F),
    D { lambda: F, mu: F },
}

impl<F: Field> CanonicalLabel<F> {
    /// `D(lambda, mu)` with `mu` outside `{0, 1}` and `(lambda, mu) != (0, -1)`.
    pub fn d(lambda: F, mu: F) -> Result<Self> {
        if mu.is_zero() {
            return Err(Error::InvalidLabel("D requires mu != 0"));
        }
        if mu.is_one() {
            return Err(Error::InvalidLabel("D requires mu != 1"));
        }
        if lambda.is_zero() && mu == -one::<F>() {
            return Err(Error::InvalidLabel("D requires (lambda, mu) != (0, -1)"));
        }
        Ok(Self::D { lambda, mu })
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::D { lambda, mu } => Self::d(lambda.clone(), mu.clone()).map(|_| ()),
            _ => Ok(()),
        }
    }

    /// Whether this is the chosen representative of its isomorphism class.
    pub fn is_tie_break_representative(&self) -> bool {
        match self {
            Self::D { lambda, mu } => {
                let (pl, pm) = opposite_params(lambda, mu);
                (mu, lambda) <= (&pm, &pl)
            }
            _ => true,
        }
    }

    pub fn variant(&self) -> &'static str {
        match self {
            Self::A0 => "A0",
            Self::A1 => "A1",
            Self::B(_) => "B",
            Self::C(_) => "C",
            Self::D { .. } => "D",
        }
    }

    pub fn lambda(&self) -> Option<&F> {
        match self {
            Self::B(l) | Self::C(l) | Self::D { lambda: l, .. } => Some(l),
            _ => None,
        }
    }

    pub fn mu(&self) -> Option<&F> {
        match self {
            Self::D { mu, .. } => Some(mu),
            _ => None,
        }
    }

    /// The defining presentation, with `xi3 = 1`.
    pub fn presentation(&self) -> Bl4Presentation<F> {
        let (x11, x) = match self {
            Self::A0 => (zero(), [[zero(), zero()], [zero(), one()]]),
            Self::A1 => (one(), [[-one::<F>(), zero()], [zero(), zero()]]),
            Self::B(l) => (one(), [[l.clone(), one()], [zero(), zero()]]),
            Self::C(l) => (one(), [[one(), zero()], [zero(), l.clone()]]),
            Self::D { lambda, mu } => (one(), [[mu.clone(), zero()], [zero(), lambda.clone()]]),
        };
        Bl4Presentation::normalized(x11, Matrix::from_rows(x))
    }

    pub fn structure_constants(&self) -> StructureConstants<F, 4> {
        self.presentation().to_structure_constants()
    }
}

impl<F: Field> fmt::Display for CanonicalLabel<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::A0 => write!(f, "A0"),
            Self::A1 => write!(f, "A1"),
            Self::B(l) => write!(f, "B({l})"),
            Self::C(l) => write!(f, "C({l})"),
            Self::D { lambda, mu } => write!(f, "D({lambda},{mu})"),
        }
    }
}

impl<F: Field> fmt::Debug for CanonicalLabel<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Checked constructor for the canonical constants of a label.
pub fn canonical_structure_constants<F: Field>(label: &CanonicalLabel<F>) -> Result<StructureConstants<F, 4>> {
    label.validate()?;
    Ok(label.structure_constants())
}

/// The partner `(l/m, 1/m)` of `d(l, m)`.
pub fn opposite_params<F: Field>(lambda: &F, mu: &F) -> (F, F) {
    (lambda.clone() / mu.clone(), mu.inv())
}

/// Opposite isomorphism from `d(l/m, 1/m)` onto `d(l, m)`.
pub fn opposite_witness<F: Field>(mu: &F) -> Matrix<F, 4, 4> {
    let (z, o) = (zero::<F>, one::<F>);
    Matrix::from_rows([[mu.inv(), z(), z(), z()], [z(), z(), o(), z()], [z(), o(), z(), z()], [z(), z(), z(), -o()]])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// Distinguished basis found in raw structure constants.
    Basis,
    /// Rescaling to `xi3 = 1`.
    NormalizeXi3,
    /// Reduction within the direct isomorphism class.
    Direct,
    /// Swap of `e1` and `e2` between the two members of a `d` pair.
    Opposite,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Basis => "basis",
            Self::NormalizeXi3 => "normalize-xi3",
            Self::Direct => "direct",
            Self::Opposite => "opposite",
        }
    }
}

/// Sequence of basis changes leading from an input algebra to its canonical
/// form. `product` is the ordered product of the steps and maps the
/// canonical algebra isomorphically onto the input.
#[derive(Clone, PartialEq, Eq)]
pub struct WitnessChain<F> {
    steps: Vec<(StepKind, Matrix<F, 4, 4>)>,
    product: Matrix<F, 4, 4>,
}

impl<F: Field> Default for WitnessChain<F> {
    fn default() -> Self {
        Self { steps: Vec::new(), product: Matrix::identity() }
    }
}

impl<F: Field> WitnessChain<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, kind: StepKind, m: Matrix<F, 4, 4>) {
        self.product = &self.product * &m;
        self.steps.push((kind, m));
    }

    /// `prefix` followed by `self`.
    pub fn prepend(self, kind: StepKind, prefix: Matrix<F, 4, 4>) -> Self {
        let mut out = Self::new();
        out.push(kind, prefix);
        for (k, m) in self.steps {
            out.push(k, m);
        }
        out
    }

    pub fn steps(&self) -> &[(StepKind, Matrix<F, 4, 4>)] {
        &self.steps
    }

    pub fn product(&self) -> &Matrix<F, 4, 4> {
        &self.product
    }

    pub fn has_step(&self, kind: StepKind) -> bool {
        self.steps.iter().any(|(k, _)| *k == kind)
    }
}

impl<F: Field> fmt::Debug for WitnessChain<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.steps.iter().map(|(k, _)| k.as_str())).finish()
    }
}

fn verified<F: Field>(
    source: &StructureConstants<F, 4>,
    label: &CanonicalLabel<F>,
    chain: &WitnessChain<F>,
) -> Result<()> {
    // Failure here means a reduction formula is wrong, not that the input is.
    assert!(
        is_isomorphism(source, &label.structure_constants(), chain.product())?,
        "witness chain for {label} fails verification"
    );
    Ok(())
}

/// Reduce to the canonical algebra of the direct isomorphism class, where
/// `d(l, m)` and `d(l/m, 1/m)` are still distinguished.
pub fn reduce_direct<F: Field>(p: &Bl4Presentation<F>) -> Result<(CanonicalLabel<F>, WitnessChain<F>)> {
    p.check_bl4().map_err(Error::NotBl4)?;
    let mut chain = WitnessChain::new();
    let (n, w) = p.normalize_xi3();
    if !w.to_matrix().is_identity() {
        chain.push(StepKind::NormalizeXi3, w.to_matrix());
    }
    let (x11, x22, x32, x23, x33) = (n.x11(), n.x22(), n.x32(), n.x23(), n.x33());
    let (z, o) = (zero::<F>, one::<F>);

    let (label, m) = if x11.is_zero() {
        let m = Matrix::from_rows([
            [x33.inv(), z(), z(), z()],
            [-x23.clone() / x33.clone(), o(), z(), z()],
            [z(), z(), o(), z()],
            [z(), z(), z(), o()],
        ]);
        (CanonicalLabel::A0, m)
    } else if x32.is_zero() {
        let m = Matrix::from_rows([
            [x11.inv(), z(), z(), z()],
            [-x23.clone() / x11.clone(), o(), z(), z()],
            [z(), z(), o(), z()],
            [z(), z(), z(), o()],
        ]);
        let mu = x22.clone() / x11.clone();
        let lambda = x33.clone() / x11.clone();
        let label = if mu.is_one() {
            CanonicalLabel::C(lambda)
        } else if lambda.is_zero() && mu == -o() {
            CanonicalLabel::A1
        } else {
            CanonicalLabel::d(lambda, mu)?
        };
        (label, m)
    } else {
        let u1 = x33.clone() * x22.clone() / (x32.clone() * x11.clone()) - x23.clone() / x11.clone();
        let m = Matrix::from_rows([
            [x11.inv(), z(), z(), z()],
            [u1, x11.clone() / x32.clone(), z(), z()],
            [z(), z(), x32.clone(), z()],
            [z(), z(), x33.clone(), x11.clone()],
        ]);
        (CanonicalLabel::B((x22.clone() + x33.clone()) / x11.clone()), m)
    };
    if !m.is_identity() {
        chain.push(StepKind::Direct, m);
    }
    verified(&p.to_structure_constants(), &label, &chain)?;
    Ok((label, chain))
}

/// Move a direct-class label to the representative of its full isomorphism
/// class, extending the chain by the opposite witness if needed.
fn apply_tie_break<F: Field>(label: CanonicalLabel<F>, chain: &mut WitnessChain<F>) -> CanonicalLabel<F> {
    match label {
        CanonicalLabel::D { ref lambda, ref mu } if !label.is_tie_break_representative() => {
            let (pl, pm) = opposite_params(lambda, mu);
            chain.push(StepKind::Opposite, opposite_witness(mu));
            CanonicalLabel::D { lambda: pl, mu: pm }
        }
        other => other,
    }
}

/// Canonical label of a presentation, with a chain whose product maps the
/// canonical algebra onto the presentation's algebra.
pub fn canonical_label<F: Field>(p: &Bl4Presentation<F>) -> Result<(CanonicalLabel<F>, WitnessChain<F>)> {
    let (label, mut chain) = reduce_direct(p)?;
    let label = apply_tie_break(label, &mut chain);
    verified(&p.to_structure_constants(), &label, &chain)?;
    Ok((label, chain))
}

/// Label and witness chain for an algebra given by structure constants.
pub fn classify_constants<F: Field>(sc: &StructureConstants<F, 4>) -> Result<(CanonicalLabel<F>, WitnessChain<F>)> {
    let ex = extract_presentation(sc)?;
    let (label, chain) = canonical_label(&ex.presentation)?;
    let chain = chain.prepend(StepKind::Basis, ex.basis);
    verified(sc, &label, &chain)?;
    Ok((label, chain))
}

#[derive(Clone, PartialEq, Eq)]
pub enum IsoResult<F> {
    /// Maps the second algebra onto the first.
    Isomorphic(Matrix<F, 4, 4>),
    NotIsomorphic(CanonicalLabel<F>, CanonicalLabel<F>),
}

impl<F: Field> fmt::Debug for IsoResult<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Isomorphic(m) => write!(f, "Isomorphic({m:?})"),
            Self::NotIsomorphic(a, b) => write!(f, "NotIsomorphic({a}, {b})"),
        }
    }
}

fn compare_chains<F: Field>(
    a: &StructureConstants<F, 4>,
    b: &StructureConstants<F, 4>,
    (la, ca): (CanonicalLabel<F>, WitnessChain<F>),
    (lb, cb): (CanonicalLabel<F>, WitnessChain<F>),
) -> Result<IsoResult<F>> {
    if la != lb {
        return Ok(IsoResult::NotIsomorphic(la, lb));
    }
    let inv = cb.product().inverse().ok_or(Error::SingularMatrix)?;
    let witness = ca.product() * &inv;
    assert!(is_isomorphism(a, b, &witness)?, "composed witness fails verification");
    Ok(IsoResult::Isomorphic(witness))
}

/// Decide isomorphism of two BL4 presentations.
pub fn are_isomorphic<F: Field>(a: &Bl4Presentation<F>, b: &Bl4Presentation<F>) -> Result<IsoResult<F>> {
    compare_chains(&a.to_structure_constants(), &b.to_structure_constants(), canonical_label(a)?, canonical_label(b)?)
}

/// Decide isomorphism of two algebras given by structure constants.
pub fn are_isomorphic_constants<F: Field>(
    a: &StructureConstants<F, 4>,
    b: &StructureConstants<F, 4>,
) -> Result<IsoResult<F>> {
    compare_chains(a, b, classify_constants(a)?, classify_constants(b)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Properties {
    pub lie: bool,
    pub malcev: bool,
    pub binary_lie: bool,
}

/// Lie, Malcev and binary-Lie status of a canonical algebra, from closed
/// formulas in its parameters.
pub fn property_table<F: Field>(label: &CanonicalLabel<F>) -> Properties {
    let all = |b| Properties { lie: b, malcev: b, binary_lie: b };
    match label {
        CanonicalLabel::A0 => Properties { lie: false, malcev: false, binary_lie: true },
        CanonicalLabel::A1 => all(true),
        CanonicalLabel::B(_) => all(false),
        CanonicalLabel::C(l) => {
            let two = F::two();
            Properties { lie: *l == two, malcev: *l == two || *l == -one::<F>(), binary_lie: true }
        }
        CanonicalLabel::D { lambda, mu } => all(*lambda == mu.clone() + one()),
    }
}

/// The same three properties decided directly on structure constants.
pub fn properties_of<F: Field>(sc: &StructureConstants<F, 4>) -> Properties {
    Properties {
        lie: sc.is_lie(),
        malcev: is_malcev(sc).expect("dimension 4 is supported"),
        binary_lie: is_binary_lie(sc).expect("dimension 4 is supported"),
    }
}
