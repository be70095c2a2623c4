//! Every nilpotency, solubility and π-nilpotency series and classifier:
//! the descending left/right/weak-derived series, the lower and upper
//! annihilator and socle series, kernel-ideal towers, the mixed L/R
//! series, the dual socle construction, and the derived profiles.

use thiserror::Error;

use crate::brace::SkewBrace;
use crate::group::primes_dividing;
use crate::ideal::{FixatorVariant, IdealError};
use crate::set::ElemSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("the modulo argument {0} is not an ideal")]
    NotAnIdeal(ElemSet),
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("the additive group is not nilpotent")]
    NotNilpotentType,
}

impl From<IdealError> for SeriesError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::NotContainingZero => SeriesError::PreconditionViolated("subset must contain 0"),
            IdealError::PreconditionViolated(tag) => SeriesError::PreconditionViolated(tag),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Right,
    Left,
    WeakDerived,
    LowerAnnihilator,
    LowerSocle,
    UpperAnnihilator,
    UpperSocle,
    KernelIdeal,
    LeftMixed,
    RightMixed,
    DualSocle,
    Loewy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescendingKind {
    /// `B^(n+1) = ⟨B^(n) ★ B⟩₊`
    Right,
    /// `B^{n+1} = ⟨B ★ B^n⟩₊`
    Left,
    /// `B_(n+1) = ⟨B_(n) ★ B_(n)⟩₊`
    WeakDerived,
    /// `Γ_{n+1} = ⟨Γ_n★B, [B,Γ_n]_∘, [B,Γ_n]_+⟩₊`
    LowerAnnihilator,
    /// `Δ_{n+1} = ⟨Δ_n★B, [B,Δ_n]_+⟩₊`
    LowerSocle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscendingKind {
    Annihilator,
    Socle,
    KernelIdeal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixedKind {
    /// `L_0 = ⟨Y⟩₊`, `L_{d+1} = ⟨X ★ L_d⟩₊`
    Left,
    /// `R_0 = ⟨X⟩₊`, `R_{n+1} = ⟨R_n ★ Y⟩₊`
    Right,
    /// `F⁰ = {0}`, `F^{n+1} = Fix^r_I(G/Fⁿ) ∩ C_I⁺(B/Fⁿ)`
    DualSocle,
}

/// A stabilizing sequence of subsets with the classification it witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<ElemSet>,
    pub stabilized: bool,
    pub class_or_length: Option<usize>,
    pub witness: Option<Vec<ElemSet>>,
}

/// All nilpotency classifications of one brace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotencyProfile {
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub strongly_left: Option<usize>,
    pub annihilator: Option<usize>,
    pub socle: Option<usize>,
    pub left_nil: bool,
    pub type_nilpotent: bool,
}

/// All solubility classifications, with shortest witness chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolubilityProfile {
    pub weak: Option<usize>,
    pub left: Option<usize>,
    pub strong_left: Option<usize>,
    pub soluble: Option<usize>,
    pub left_witness: Option<Vec<ElemSet>>,
    pub strong_left_witness: Option<Vec<ElemSet>>,
    pub soluble_witness: Option<Vec<ElemSet>>,
}

/// π-nilpotency data of a nilpotent-type brace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiProfile {
    /// requested primes that divide the order
    pub pi: Vec<usize>,
    /// requested primes ignored because they do not divide the order
    pub ignored_primes: Vec<usize>,
    pub hall_pi: ElemSet,
    pub hall_pi_is_subbrace: bool,
    pub left_class: Option<usize>,
    pub right_class: Option<usize>,
    pub pi_separating: bool,
    pub pi_prime_is_ideal: bool,
}

fn push_descending(terms: &mut Vec<ElemSet>, brace: &SkewBrace, step: impl Fn(&ElemSet) -> ElemSet) -> bool {
    // iterate until two consecutive terms agree; the repeat is kept only
    // when the series stalls above {0}
    for _ in 0..=brace.order() + 1 {
        let prev = terms.last().unwrap().clone();
        if prev.len() == 1 {
            return true;
        }
        let next = step(&prev);
        if next == prev {
            terms.push(next);
            return true;
        }
        terms.push(next);
    }
    false
}

impl SkewBrace {
    /// One step of each descending series.
    fn descending_step(&self, kind: DescendingKind, prev: &ElemSet) -> ElemSet {
        let full = ElemSet::full(self.order());
        match kind {
            DescendingKind::Right => self.star_subgroup(prev, &full),
            DescendingKind::Left => self.star_subgroup(&full, prev),
            DescendingKind::WeakDerived => self.star_subgroup(prev, prev),
            DescendingKind::LowerAnnihilator => {
                let mut gens = self.star_set(prev, &full);
                for b in 0..self.order() {
                    for g in prev.iter() {
                        gens.push(self.mul_group().commutator(b, g));
                        gens.push(self.add_group().commutator(b, g));
                    }
                }
                self.additive_closure(&gens)
            }
            DescendingKind::LowerSocle => {
                let mut gens = self.star_set(prev, &full);
                for b in 0..self.order() {
                    for g in prev.iter() {
                        gens.push(self.add_group().commutator(b, g));
                    }
                }
                self.additive_closure(&gens)
            }
        }
    }

    /// Terms of the requested descending series until stabilization, with
    /// the class (least index whose term is `{0}`) when it terminates.
    pub fn descending_series(&self, kind: DescendingKind) -> SeriesReport {
        let mut terms = vec![ElemSet::full(self.order())];
        let stabilized = push_descending(&mut terms, self, |prev| self.descending_step(kind, prev));
        let class_or_length = terms.iter().position(|t| t.len() == 1);
        let report_kind = match kind {
            DescendingKind::Right => SeriesKind::Right,
            DescendingKind::Left => SeriesKind::Left,
            DescendingKind::WeakDerived => SeriesKind::WeakDerived,
            DescendingKind::LowerAnnihilator => SeriesKind::LowerAnnihilator,
            DescendingKind::LowerSocle => SeriesKind::LowerSocle,
        };
        SeriesReport { kind: report_kind, terms, stabilized, class_or_length, witness: None }
    }

    /// The upper annihilator/socle series and the kernel-ideal tower over
    /// a (validated) ideal `modulo`; every term is verified to be an ideal.
    pub fn ascending_series(&self, kind: AscendingKind, modulo: &ElemSet) -> Result<SeriesReport, SeriesError> {
        if !self.is_ideal(modulo) {
            return Err(SeriesError::NotAnIdeal(modulo.clone()));
        }
        let n = self.order();
        let full = ElemSet::full(n);
        let mut terms = vec![modulo.clone()];
        loop {
            let prev = terms.last().unwrap().clone();
            if prev == full {
                break;
            }
            let next: ElemSet = match kind {
                AscendingKind::Annihilator => (0..n)
                    .filter(|&b| {
                        (0..n).all(|x| {
                            prev.contains(self.star(b, x))
                                && prev.contains(self.add_group().commutator(b, x))
                                && prev.contains(self.mul_group().commutator(b, x))
                        })
                    })
                    .collect(),
                AscendingKind::Socle => (0..n)
                    .filter(|&b| {
                        (0..n).all(|x| {
                            prev.contains(self.star(b, x))
                                && prev.contains(self.add_group().commutator(b, x))
                        })
                    })
                    .collect(),
                AscendingKind::KernelIdeal => self.kernel_ideal(&prev)?,
            };
            assert!(self.is_ideal(&next), "ascending series terms must be ideals");
            if next == prev {
                terms.push(next);
                break;
            }
            terms.push(next);
        }
        let class_or_length = terms.iter().position(|t| t == &full);
        let report_kind = match kind {
            AscendingKind::Annihilator => SeriesKind::UpperAnnihilator,
            AscendingKind::Socle => SeriesKind::UpperSocle,
            AscendingKind::KernelIdeal => SeriesKind::KernelIdeal,
        };
        Ok(SeriesReport { kind: report_kind, terms, stabilized: true, class_or_length, witness: None })
    }

    /// `Kid(B;I)`: the largest ideal inside `Fix^l_B(B/I)`, computed by the
    /// conjugate-intersection formula and cross-checked against the ideal
    /// lattice.
    pub fn kernel_ideal(&self, modulo: &ElemSet) -> Result<ElemSet, SeriesError> {
        let n = self.order();
        let full = ElemSet::full(n);
        let fix = self.fixator(FixatorVariant::FixL, &full, &full, modulo)?;
        let mut result = fix.clone();
        for b in 0..n {
            let image: ElemSet = fix.iter().map(|x| self.lambda(b, x)).collect();
            for c in 0..n {
                let conjugated: ElemSet =
                    image.iter().map(|x| self.add(self.add(c, x), self.neg(c))).collect();
                result = result.intersection(&conjugated);
            }
        }
        let largest = self
            .ideals()
            .iter()
            .filter(|i| i.is_subset_of(&fix))
            .max_by_key(|i| i.len())
            .cloned()
            .unwrap_or_else(ElemSet::zero);
        assert_eq!(result, largest, "kernel ideal formula must agree with the lattice maximum");
        Ok(result)
    }

    /// The mixed series: `L`-series and `R`-series against a seed pair,
    /// and the dual socle tower `F_I(G)`.
    pub fn mixed_series(&self, kind: MixedKind, x: &ElemSet, y: &ElemSet) -> Result<SeriesReport, SeriesError> {
        match kind {
            MixedKind::Left | MixedKind::Right => {
                let seed = match kind {
                    MixedKind::Left => self.additive_closure(&y.iter().collect::<Vec<_>>()),
                    _ => self.additive_closure(&x.iter().collect::<Vec<_>>()),
                };
                let mut terms = vec![seed];
                let stabilized = push_descending(&mut terms, self, |prev| match kind {
                    MixedKind::Left => self.star_subgroup(x, prev),
                    _ => self.star_subgroup(prev, y),
                });
                let class_or_length = terms.iter().position(|t| t.len() == 1);
                let report_kind = if kind == MixedKind::Left { SeriesKind::LeftMixed } else { SeriesKind::RightMixed };
                Ok(SeriesReport { kind: report_kind, terms, stabilized, class_or_length, witness: None })
            }
            MixedKind::DualSocle => self.dual_socle_series(x, y),
        }
    }

    /// `F_I^0(G) = {0}`, `F_I^{n+1}(G) = Fix^r_I(G/F_n) ∩ C_I^+(B/F_n)`;
    /// each term is verified to be a strong left ideal stabilized by the
    /// multiplicative normalizer of `G`.
    fn dual_socle_series(&self, ideal: &ElemSet, g: &ElemSet) -> Result<SeriesReport, SeriesError> {
        if !self.is_strong_left_ideal(ideal) {
            return Err(SeriesError::PreconditionViolated("the dual socle series needs a strong left ideal I"));
        }
        if !self.mul_group().is_subgroup(g) {
            return Err(SeriesError::PreconditionViolated("the dual socle series needs a multiplicative subgroup G"));
        }
        let n = self.order();
        let mul_normalizer: ElemSet = (0..n)
            .filter(|&x| g.iter().all(|e| g.contains(self.mul(self.mul(x, e), self.mul_inv(x)))))
            .collect();
        let mut terms = vec![ElemSet::zero()];
        loop {
            let prev = terms.last().unwrap().clone();
            let fix_r = self.fixator(FixatorVariant::FixR, ideal, g, &prev)?;
            let centralizer: ElemSet = self
                .additive_normalizer_in(ideal, &prev)
                .iter()
                .filter(|&t| {
                    (0..n).all(|b| prev.contains(self.add_group().commutator(t, b)))
                })
                .collect();
            let next = fix_r.intersection(&centralizer);
            assert!(self.is_strong_left_ideal(&next), "dual socle terms must be strong left ideals");
            assert!(
                mul_normalizer.iter().all(|x| next.iter().all(|t| next.contains(self.lambda(x, t)))),
                "dual socle terms must be stabilized by the multiplicative normalizer of G"
            );
            if next == prev {
                if terms.last() != Some(&next) || terms.len() == 1 {
                    terms.push(next);
                }
                break;
            }
            terms.push(next);
            if terms.last().unwrap() == ideal {
                break;
            }
        }
        let class_or_length = terms.iter().position(|t| t == ideal);
        Ok(SeriesReport { kind: SeriesKind::DualSocle, terms, stabilized: true, class_or_length, witness: None })
    }

    /// All nilpotency classifications.
    pub fn nilpotency_profile(&self) -> NilpotencyProfile {
        let left = self.descending_series(DescendingKind::Left).class_or_length;
        let right = self.descending_series(DescendingKind::Right).class_or_length;
        let annihilator = self
            .ascending_series(AscendingKind::Annihilator, &ElemSet::zero())
            .expect("{0} is an ideal")
            .class_or_length;
        let socle = self
            .ascending_series(AscendingKind::Socle, &ElemSet::zero())
            .expect("{0} is an ideal")
            .class_or_length;
        let strongly_left = self.strongly_left_class(false);
        let left_nil = (0..self.order()).all(|b| {
            let mut seen = vec![false; self.order()];
            let mut x = b;
            loop {
                if x == 0 {
                    break true;
                }
                if seen[x] {
                    break false;
                }
                seen[x] = true;
                x = self.star(b, x);
            }
        });
        NilpotencyProfile {
            left,
            right,
            strongly_left,
            annihilator,
            socle,
            left_nil,
            type_nilpotent: self.add_group().is_nilpotent(),
        }
    }

    /// Least `k` admitting a chain `{0}=I_0<…<I_k=B` of strong left ideals
    /// with `B★I_{i+1} ⊆ I_i`; with `central` also `[B,I_{i+1}]_+ ⊆ I_i`.
    pub fn strongly_left_class(&self, central: bool) -> Option<usize> {
        let full = ElemSet::full(self.order());
        let candidates = self.strong_left_ideals();
        let step_ok = |lower: &ElemSet, upper: &ElemSet| -> bool {
            if !lower.is_subset_of(upper) || lower.len() >= upper.len() {
                return false;
            }
            let stars_in = upper.iter().all(|x| (0..self.order()).all(|b| lower.contains(self.star(b, x))));
            if !stars_in {
                return false;
            }
            !central
                || upper
                    .iter()
                    .all(|x| (0..self.order()).all(|b| lower.contains(self.add_group().commutator(b, x))))
        };
        let mut dist: Vec<Option<usize>> = candidates.iter().map(|c| (c.len() == 1).then_some(0)).collect();
        for step in 1..=candidates.len() {
            let mut changed = false;
            for (j, upper) in candidates.iter().enumerate() {
                if dist[j].is_some() {
                    continue;
                }
                let reachable = candidates
                    .iter()
                    .enumerate()
                    .any(|(i, lower)| dist[i] == Some(step - 1) && step_ok(lower, upper));
                if reachable {
                    dist[j] = Some(step);
                    changed = true;
                    if upper == &full {
                        return Some(step);
                    }
                }
            }
            if !changed {
                break;
            }
        }
        candidates.iter().position(|c| c == &full).and_then(|i| dist[i])
    }

    /// All solubility classifications with shortest witness chains.
    pub fn solubility_profile(&self) -> SolubilityProfile {
        let weak = self.descending_series(DescendingKind::WeakDerived).class_or_length;
        let (left, left_witness) = self.soluble_chain(self.left_ideals());
        let (strong_left, strong_left_witness) = self.soluble_chain(self.strong_left_ideals());
        let (soluble, soluble_witness) = self.soluble_chain(self.ideals());
        SolubilityProfile { weak, left, strong_left, soluble, left_witness, strong_left_witness, soluble_witness }
    }

    /// Shortest chain `{0}=I_0<…<I_k=B` inside `candidates` with each term
    /// an ideal of the next and every quotient trivial.
    fn soluble_chain(&self, candidates: &[ElemSet]) -> (Option<usize>, Option<Vec<ElemSet>>) {
        let full = ElemSet::full(self.order());
        if full.len() == 1 {
            return (Some(0), Some(vec![full]));
        }
        let m = candidates.len();
        let mut dist: Vec<Option<usize>> = candidates.iter().map(|c| (c.len() == 1).then_some(0)).collect();
        let mut parent: Vec<Option<usize>> = vec![None; m];
        let trivial_quotient = |lower: &ElemSet, upper: &ElemSet| -> bool {
            lower.len() < upper.len()
                && lower.is_subset_of(upper)
                && self.ideal_in(lower, upper)
                && upper.iter().all(|a| upper.iter().all(|b| lower.contains(self.star(a, b))))
        };
        for step in 1..=m {
            let mut changed = false;
            for j in 0..m {
                if dist[j].is_some() {
                    continue;
                }
                let hit = (0..m).find(|&i| dist[i] == Some(step - 1) && trivial_quotient(&candidates[i], &candidates[j]));
                if let Some(i) = hit {
                    dist[j] = Some(step);
                    parent[j] = Some(i);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let end = candidates.iter().position(|c| c == &full);
        match end {
            Some(mut at) if dist[at].is_some() => {
                let length = dist[at];
                let mut chain = vec![candidates[at].clone()];
                while let Some(prev) = parent[at] {
                    chain.push(candidates[prev].clone());
                    at = prev;
                }
                chain.reverse();
                (length, Some(chain))
            }
            _ => (None, None),
        }
    }

    /// The Hall π-subgroup of the additive group: all π-elements. Only
    /// meaningful for nilpotent type.
    pub fn hall_subgroup(&self, pi: &[usize]) -> ElemSet {
        (0..self.order()).filter(|&a| self.add_group().is_pi_element(a, pi)).collect()
    }

    /// π-nilpotency data; requires nilpotent type. Primes not dividing the
    /// order are reported back as ignored.
    pub fn pi_profile(&self, requested: &[usize]) -> Result<PiProfile, SeriesError> {
        if !self.add_group().is_nilpotent() {
            return Err(SeriesError::NotNilpotentType);
        }
        let divisors = primes_dividing(self.order());
        let mut pi: Vec<usize> = requested.iter().copied().filter(|p| divisors.contains(p)).collect();
        pi.sort_unstable();
        pi.dedup();
        let ignored_primes: Vec<usize> =
            requested.iter().copied().filter(|p| !divisors.contains(p)).collect();
        let hall_pi = self.hall_subgroup(&pi);
        assert!(
            self.add_group().is_subgroup(&hall_pi),
            "π-elements of a nilpotent additive group form a subgroup"
        );
        let pi_prime: Vec<usize> = divisors.iter().copied().filter(|p| !pi.contains(p)).collect();
        let hall_pi_prime = self.hall_subgroup(&pi_prime);
        let full = ElemSet::full(self.order());
        let left_class = self.mixed_series(MixedKind::Left, &full, &hall_pi)?.class_or_length;
        let right_class = self.mixed_series(MixedKind::Right, &hall_pi, &full)?.class_or_length;
        let pi_separating = self.sub_braces().iter().all(|s| {
            let separates = |primes: &[usize]| -> bool {
                let additively = s.iter().all(|a| self.add_group().is_pi_element(a, primes));
                !additively || s.iter().all(|a| self.mul_group().is_pi_element(a, primes))
            };
            separates(&pi) && separates(&pi_prime)
        });
        let pi_prime_is_ideal = self.is_ideal(&hall_pi_prime);
        let star_trivial = self
            .star_set(&hall_pi_prime, &hall_pi)
            .iter()
            .all(|&v| v == 0);
        debug_assert_eq!(pi_prime_is_ideal, star_trivial, "B_π' is an ideal exactly when B_π'★B_π vanishes");
        let hall_pi_is_subbrace = self.is_sub_brace(&hall_pi);
        Ok(PiProfile {
            pi,
            ignored_primes,
            hall_pi,
            hall_pi_is_subbrace,
            left_class,
            right_class,
            pi_separating,
            pi_prime_is_ideal,
        })
    }
}
