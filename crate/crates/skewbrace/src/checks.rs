//! The theorem harness: a registry of structural checks run over every
//! brace of a catalog, each deterministic and witness-producing.

use rayon::prelude::*;
use thiserror::Error;

use crate::brace::SkewBrace;
use crate::catalog::Catalog;
use crate::design::{design_group, design_subgroup, group_pi_nilpotent, verify_design_identities};
use crate::group::primes_dividing;
use crate::ideal::GenKind;
use crate::series::{AscendingKind, DescendingKind, MixedKind};
use crate::set::ElemSet;
use crate::ybe::{solution_from_brace, verify_solution};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("unknown check id {0:?}")]
    UnknownCheckId(String),
}

/// A concrete counterexample: the violated condition plus the elements
/// and subsets involved, re-checkable by hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub condition: String,
    pub elements: Vec<usize>,
    pub sets: Vec<ElemSet>,
}

impl Witness {
    fn new(condition: impl Into<String>) -> Witness {
        Witness { condition: condition.into(), elements: Vec::new(), sets: Vec::new() }
    }

    fn with_elements(mut self, elements: Vec<usize>) -> Witness {
        self.elements = elements;
        self
    }

    fn with_sets(mut self, sets: Vec<ElemSet>) -> Witness {
        self.sets = sets;
        self
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.condition)?;
        if !self.elements.is_empty() {
            write!(f, " elements={:?}", self.elements)?;
        }
        for s in &self.sets {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// the brace is outside the check's scope
    Skip,
    Fail(Witness),
}

pub struct TheoremCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub run: fn(&SkewBrace) -> Outcome,
}

#[derive(Clone, Debug)]
pub struct CheckRun {
    pub id: &'static str,
    pub description: &'static str,
    pub pass: usize,
    pub skip: usize,
    pub failures: Vec<(String, Witness)>,
}

impl CheckRun {
    pub fn applicable(&self) -> usize {
        self.pass + self.failures.len()
    }
}

#[derive(Clone, Debug, Default)]
pub struct CheckSummary {
    pub runs: Vec<CheckRun>,
}

impl CheckSummary {
    pub fn overall_pass(&self) -> bool {
        self.runs.iter().all(|r| r.failures.is_empty())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for run in &self.runs {
            out.push_str(&format!(
                "{:<22} pass={:<4} skip={:<4} fail={}\n",
                run.id,
                run.pass,
                run.skip,
                run.failures.len()
            ));
            for (brace, witness) in &run.failures {
                out.push_str(&format!("    {brace}: {witness}\n"));
            }
        }
        out.push_str(if self.overall_pass() { "all checks passed\n" } else { "CHECK FAILURES\n" });
        out
    }
}

/// Runs the selected checks (default: all) over every catalog entry.
/// Evaluation may be parallel; the summary is aggregated in registry
/// order so the output is deterministic.
pub fn check_theorems(catalog: &Catalog, selection: Option<&[String]>) -> Result<CheckSummary, CheckError> {
    let registry = registry();
    let chosen: Vec<&TheoremCheck> = match selection {
        None => registry.iter().collect(),
        Some(ids) => {
            let mut list = Vec::new();
            for id in ids {
                match registry.iter().find(|c| c.id == id) {
                    Some(c) => list.push(c),
                    None => return Err(CheckError::UnknownCheckId(id.clone())),
                }
            }
            list
        }
    };
    let cells: Vec<(usize, usize)> =
        (0..chosen.len()).flat_map(|c| (0..catalog.entries.len()).map(move |b| (c, b))).collect();
    let mut outcomes: Vec<((usize, usize), Outcome)> = cells
        .par_iter()
        .map(|&(c, b)| ((c, b), (chosen[c].run)(&catalog.entries[b].brace)))
        .collect();
    outcomes.sort_by_key(|(cell, _)| *cell);
    let mut runs: Vec<CheckRun> = chosen
        .iter()
        .map(|c| CheckRun { id: c.id, description: c.description, pass: 0, skip: 0, failures: Vec::new() })
        .collect();
    for ((c, b), outcome) in outcomes {
        match outcome {
            Outcome::Pass => runs[c].pass += 1,
            Outcome::Skip => runs[c].skip += 1,
            Outcome::Fail(w) => runs[c].failures.push((catalog.entries[b].id.clone(), w)),
        }
    }
    Ok(CheckSummary { runs })
}

pub fn check_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

// ---------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------

fn full(brace: &SkewBrace) -> ElemSet {
    ElemSet::full(brace.order())
}

fn prime_subsets(n: usize) -> Vec<Vec<usize>> {
    let primes = primes_dividing(n);
    let mut subsets = vec![Vec::new()];
    for p in primes {
        let mut extended: Vec<Vec<usize>> = subsets
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.push(p);
                t
            })
            .collect();
        subsets.append(&mut extended);
    }
    subsets
}

/// Restriction of the brace to a sub-brace, as its own brace.
fn restrict(brace: &SkewBrace, s: &ElemSet) -> SkewBrace {
    brace.restriction(s).expect("restriction target must be a sub-brace").0
}

/// Is the restriction to this sub-brace left nilpotent of nilpotent type?
fn left_nilpotent_nilpotent_type(brace: &SkewBrace, s: &ElemSet) -> bool {
    let r = restrict(brace, s);
    r.add_group().is_nilpotent() && r.descending_series(DescendingKind::Left).class_or_length.is_some()
}

/// Is the restriction left π-nilpotent (of nilpotent type)?
fn left_pi_nilpotent(brace: &SkewBrace, s: &ElemSet, pi: &[usize]) -> bool {
    let r = restrict(brace, s);
    match r.pi_profile(pi) {
        Ok(profile) => profile.left_class.is_some(),
        Err(_) => false,
    }
}

/// Direct sum test: the brace equals a direct sum of simple sub-braces,
/// all trivial or all non-trivial.
fn is_direct_sum_of_simples(brace: &SkewBrace) -> bool {
    if brace.order() == 1 {
        return false;
    }
    let data = brace.minimal_ideal_data();
    if data.s != full(brace) {
        return false;
    }
    let simple = |i: &ElemSet| restrict(brace, i).ideals().len() == 2;
    if !data.minimal_ideals.iter().all(simple) {
        return false;
    }
    let trivialities: Vec<bool> =
        data.minimal_ideals.iter().map(|i| brace.is_trivial_sub_brace(i)).collect();
    trivialities.windows(2).all(|w| w[0] == w[1])
}

// ---------------------------------------------------------------------
// the registry
// ---------------------------------------------------------------------

pub fn registry() -> &'static [TheoremCheck] {
    &REGISTRY
}

static REGISTRY: &[TheoremCheck] = &[
    TheoremCheck {
        id: "axioms-relations",
        description: "distributivity, λ automorphism/homomorphism laws and the three basic relations",
        run: |b| match b.verify_axioms() {
            Ok(()) => Outcome::Pass,
            Err(e) => Outcome::Fail(Witness::new(e.to_string())),
        },
    },
    TheoremCheck {
        id: "star-identities",
        description: "the three ★ expansion identities on all triples",
        run: |b| {
            let n = b.order();
            for a in 0..n {
                for x in 0..n {
                    for c in 0..n {
                        let lhs = b.star(a, b.add(x, c));
                        let rhs = b.add(b.add(b.add(b.star(a, x), x), b.star(a, c)), b.neg(x));
                        if lhs != rhs {
                            return Outcome::Fail(
                                Witness::new("a★(b+c) = a★b + b + a★c − b").with_elements(vec![a, x, c]),
                            );
                        }
                    }
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "star-zero",
        description: "★ vanishes against the identity on both sides",
        run: |b| {
            for x in 0..b.order() {
                if b.star(x, 0) != 0 || b.star(0, x) != 0 {
                    return Outcome::Fail(Witness::new("a★0 = 0★a = 0").with_elements(vec![x]));
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "ker-lambda-trivial",
        description: "ker λ is a trivial sub-brace",
        run: |b| {
            let ker = b.ker_lambda();
            if b.is_trivial_sub_brace(&ker) {
                Outcome::Pass
            } else {
                Outcome::Fail(Witness::new("ker λ must be a trivial sub-brace").with_sets(vec![ker]))
            }
        },
    },
    TheoremCheck {
        id: "socle-annihilator-ideals",
        description: "the socle and annihilator are ideals",
        run: |b| {
            let socle = b.socle();
            let ann = b.annihilator();
            if b.is_ideal(&socle) && b.is_ideal(&ann) {
                Outcome::Pass
            } else {
                Outcome::Fail(Witness::new("Soc(B) and Ann(B) must be ideals").with_sets(vec![socle, ann]))
            }
        },
    },
    TheoremCheck {
        id: "design-commutator",
        description: "in the design group, [(0,a),(b,0)] = (a★b, 0)",
        run: |b| {
            let dg = design_group(b);
            let g = &dg.group;
            for a in 0..b.order() {
                for x in 0..b.order() {
                    let comm = g.commutator(dg.encode(0, a), dg.encode(x, 0));
                    if comm != dg.encode(b.star(a, x), 0) {
                        return Outcome::Fail(
                            Witness::new("[(0,a),(b,0)] = (a★b,0)").with_elements(vec![a, x]),
                        );
                    }
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "ideal-normal",
        description: "G(I) is normal for every ideal, G(I)G(J) = G(I+J), and I+J = J+I = I∘J = J∘I",
        run: |b| {
            let report = verify_design_identities(b);
            match report.failures.into_iter().find(|f| f.condition != "[(0,a),(b,0)] = (a★b,0)") {
                None => Outcome::Pass,
                Some(f) => {
                    Outcome::Fail(Witness::new(f.condition).with_elements(f.elements).with_sets(f.sets))
                }
            }
        },
    },
    TheoremCheck {
        id: "left-ideal-coset",
        description: "a∘I = a+I for every left ideal and every a",
        run: |b| {
            for ideal in b.left_ideals() {
                for a in 0..b.order() {
                    let mul_coset: ElemSet = ideal.iter().map(|x| b.mul(a, x)).collect();
                    let add_coset: ElemSet = ideal.iter().map(|x| b.add(a, x)).collect();
                    if mul_coset != add_coset {
                        return Outcome::Fail(
                            Witness::new("a∘I = a+I").with_elements(vec![a]).with_sets(vec![ideal.clone()]),
                        );
                    }
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "ideal-sum",
        description: "sums of (strong) (left) ideals are again such, and equal the generated closure",
        run: |b| {
            for kind in [GenKind::LeftIdeal, GenKind::StrongLeftIdeal, GenKind::Ideal] {
                let list = b.all_of_kind(kind);
                for i in list {
                    for j in list {
                        let sum = b.additive_closure(&i.union(j).iter().collect::<Vec<_>>());
                        let good = match kind {
                            GenKind::LeftIdeal => b.is_left_ideal(&sum),
                            GenKind::StrongLeftIdeal => b.is_strong_left_ideal(&sum),
                            _ => b.is_ideal(&sum),
                        };
                        if !good || sum != b.generated(&i.union(j), kind) {
                            return Outcome::Fail(
                                Witness::new("I+J must be an ideal of the same kind")
                                    .with_sets(vec![i.clone(), j.clone()]),
                            );
                        }
                    }
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "descending-structure",
        description: "right terms are ideals, left terms are left ideals with each next term an ideal in the previous",
        run: |b| {
            let right = b.descending_series(DescendingKind::Right);
            for t in &right.terms {
                if !b.is_ideal(t) {
                    return Outcome::Fail(Witness::new("right series terms must be ideals").with_sets(vec![t.clone()]));
                }
            }
            let left = b.descending_series(DescendingKind::Left);
            for w in left.terms.windows(2) {
                if !b.is_left_ideal(&w[0]) || !b.ideal_in(&w[1], &w[0]) {
                    return Outcome::Fail(
                        Witness::new("left series terms must be left ideals with ideal successors")
                            .with_sets(vec![w[0].clone(), w[1].clone()]),
                    );
                }
            }
            for kind in [DescendingKind::LowerAnnihilator, DescendingKind::LowerSocle] {
                let series = b.descending_series(kind);
                for t in &series.terms {
                    if !b.is_ideal(t) {
                        return Outcome::Fail(Witness::new("lower series terms must be ideals").with_sets(vec![t.clone()]));
                    }
                }
            }
            let weak = b.descending_series(DescendingKind::WeakDerived);
            for w in weak.terms.windows(2) {
                if !b.ideal_in(&w[1], &w[0]) {
                    return Outcome::Fail(
                        Witness::new("weak derived terms must be ideals in their predecessors")
                            .with_sets(vec![w[0].clone(), w[1].clone()]),
                    );
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "ascending-ideals",
        description: "upper annihilator/socle terms are ideals matching their fixator descriptions",
        run: |b| {
            let zero = ElemSet::zero();
            let ann = b.ascending_series(AscendingKind::Annihilator, &zero).expect("{0} is an ideal");
            let soc = b.ascending_series(AscendingKind::Socle, &zero).expect("{0} is an ideal");
            let all = full(b);
            for w in ann.terms.windows(2) {
                // Ann_{n+1} = Fix^l ∩ C⁺ ∩ C∘ modulo Ann_n
                let fix = b
                    .fixator(crate::ideal::FixatorVariant::FixL, &all, &all, &w[0])
                    .expect("prior term is an ideal");
                let c_add = b.add_group().relative_centralizer(&all, &w[0]).expect("additively normal");
                let c_mul = b.mul_group().relative_centralizer(&all, &w[0]).expect("multiplicatively normal");
                let described = fix.intersection(&c_add).intersection(&c_mul);
                if described != w[1] {
                    return Outcome::Fail(
                        Witness::new("upper annihilator term must equal Fix^l ∩ C⁺ ∩ C∘")
                            .with_sets(vec![w[0].clone(), w[1].clone(), described]),
                    );
                }
            }
            for w in soc.terms.windows(2) {
                let fix = b
                    .fixator(crate::ideal::FixatorVariant::FixL, &all, &all, &w[0])
                    .expect("prior term is an ideal");
                let c_add = b.add_group().relative_centralizer(&all, &w[0]).expect("additively normal");
                let described = fix.intersection(&c_add);
                if described != w[1] {
                    return Outcome::Fail(
                        Witness::new("upper socle term must equal Fix^l ∩ C⁺")
                            .with_sets(vec![w[0].clone(), w[1].clone(), described]),
                    );
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "soc-right-nilp",
        description: "socle nilpotent ⟺ right nilpotent of nilpotent type; classes agree for abelian type",
        run: |b| {
            let nil = b.nilpotency_profile();
            let soc_nilp = nil.socle.is_some();
            let right_nilp_nilp_type = nil.right.is_some() && nil.type_nilpotent;
            if soc_nilp != right_nilp_nilp_type {
                return Outcome::Fail(Witness::new(format!(
                    "socle nilpotency {:?} must match right nilpotency of nilpotent type {:?}",
                    nil.socle,
                    (nil.right, nil.type_nilpotent)
                )));
            }
            if b.add_group().is_abelian() && soc_nilp && nil.socle != nil.right {
                return Outcome::Fail(Witness::new(format!(
                    "abelian type socle class {:?} must equal right class {:?}",
                    nil.socle, nil.right
                )));
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "strongly-left-nilp",
        description: "left nilpotent of nilpotent type ⟹ strongly left nilpotent via an additively central chain",
        run: |b| {
            let nil = b.nilpotency_profile();
            if !(nil.type_nilpotent && nil.left.is_some()) {
                return Outcome::Skip;
            }
            let central = b.strongly_left_class(true);
            match (nil.strongly_left, central) {
                (Some(plain), Some(central)) if plain <= central => Outcome::Pass,
                _ => Outcome::Fail(Witness::new(format!(
                    "expected a strong chain ({:?}) and a central strong chain ({:?})",
                    nil.strongly_left, central
                ))),
            }
        },
    },
    TheoremCheck {
        id: "bsemib",
        description: "left nilpotent of nilpotent type ⟺ the design group is nilpotent",
        run: |b| {
            let nil = b.nilpotency_profile();
            let lhs = nil.left.is_some() && nil.type_nilpotent;
            let rhs = design_group(b).group.is_nilpotent();
            if lhs == rhs {
                Outcome::Pass
            } else {
                Outcome::Fail(Witness::new(format!(
                    "left nilpotent of nilpotent type = {lhs} but design group nilpotent = {rhs}"
                )))
            }
        },
    },
    TheoremCheck {
        id: "bsemib-bound",
        description: "with a central strong chain of length n, the design group class is at most n(n+3)/2",
        run: |b| {
            let nil = b.nilpotency_profile();
            if !(nil.left.is_some() && nil.type_nilpotent) {
                return Outcome::Skip;
            }
            let n = match b.strongly_left_class(true) {
                Some(n) => n,
                None => return Outcome::Fail(Witness::new("central strong chain must exist")),
            };
            let class = design_group(b).group.nilpotency_class().unwrap_or(usize::MAX);
            if 2 * class <= n * (n + 3) {
                Outcome::Pass
            } else {
                Outcome::Fail(Witness::new(format!(
                    "design class {class} exceeds bound n(n+3)/2 with n={n}"
                )))
            }
        },
    },
    TheoremCheck {
        id: "sum-left-nilp-ideals",
        description: "the sum of two left nilpotent ideals of nilpotent type is again one",
        run: |b| {
            let ideals = b.ideals().to_vec();
            let mut applicable = false;
            for i in &ideals {
                for j in &ideals {
                    if !left_nilpotent_nilpotent_type(b, i) || !left_nilpotent_nilpotent_type(b, j) {
                        continue;
                    }
                    applicable = true;
                    let sum = b.sum_set(i, j);
                    if !b.is_ideal(&sum) || !left_nilpotent_nilpotent_type(b, &sum) {
                        return Outcome::Fail(
                            Witness::new("I+J must be a left nilpotent ideal of nilpotent type")
                                .with_sets(vec![i.clone(), j.clone(), sum]),
                        );
                    }
                }
            }
            if applicable {
                Outcome::Pass
            } else {
                Outcome::Skip
            }
        },
    },
    TheoremCheck {
        id: "fitting-subnormal",
        description: "an ideal plus a sub-ideal, both left nilpotent of nilpotent type, is left nilpotent of nilpotent type",
        run: |b| {
            let ideals = b.ideals().to_vec();
            let subs: Vec<ElemSet> = b
                .sub_braces()
                .iter()
                .filter(|s| {
                    b.classify_subset(s).map(|f| f.subideal_defect.is_some()).unwrap_or(false)
                })
                .cloned()
                .collect();
            let mut applicable = false;
            for i in &ideals {
                if !left_nilpotent_nilpotent_type(b, i) {
                    continue;
                }
                for j in &subs {
                    if !left_nilpotent_nilpotent_type(b, j) {
                        continue;
                    }
                    applicable = true;
                    let sum = b.sum_set(i, j);
                    if !b.is_sub_brace(&sum) || !left_nilpotent_nilpotent_type(b, &sum) {
                        return Outcome::Fail(
                            Witness::new("I+J must be left nilpotent of nilpotent type")
                                .with_sets(vec![i.clone(), j.clone(), sum]),
                        );
                    }
                }
            }
            if applicable {
                Outcome::Pass
            } else {
                Outcome::Skip
            }
        },
    },
    TheoremCheck {
        id: "fitting-pnilp",
        description: "the sum of two left π-nilpotent ideals of nilpotent type is left π-nilpotent of nilpotent type",
        run: |b| {
            let ideals = b.ideals().to_vec();
            let mut applicable = false;
            for pi in prime_subsets(b.order()) {
                for i in &ideals {
                    for j in &ideals {
                        let iok = restrict(b, i).add_group().is_nilpotent() && left_pi_nilpotent(b, i, &pi);
                        let jok = restrict(b, j).add_group().is_nilpotent() && left_pi_nilpotent(b, j, &pi);
                        if !iok || !jok {
                            continue;
                        }
                        applicable = true;
                        let sum = b.sum_set(i, j);
                        let sum_ok = restrict(b, &sum).add_group().is_nilpotent()
                            && left_pi_nilpotent(b, &sum, &pi);
                        if !b.is_ideal(&sum) || !sum_ok {
                            return Outcome::Fail(
                                Witness::new("I+J must be left π-nilpotent of nilpotent type")
                                    .with_elements(pi.clone())
                                    .with_sets(vec![i.clone(), j.clone(), sum]),
                            );
                        }
                    }
                }
            }
            if applicable {
                Outcome::Pass
            } else {
                Outcome::Skip
            }
        },
    },
    TheoremCheck {
        id: "sylow-ideals",
        description: "with both groups nilpotent, the additive Sylow subgroups are ideals and B is their direct sum",
        run: |b| {
            if !(b.add_group().is_nilpotent() && b.mul_group().is_nilpotent()) {
                return Outcome::Skip;
            }
            let mut product = 1usize;
            let mut sylows = Vec::new();
            for p in primes_dividing(b.order()) {
                let part = b.hall_subgroup(&[p]);
                if !b.is_ideal(&part) {
                    return Outcome::Fail(
                        Witness::new("Sylow subgroup must be an ideal").with_elements(vec![p]).with_sets(vec![part]),
                    );
                }
                product *= part.len();
                sylows.push(part);
            }
            for (i, s) in sylows.iter().enumerate() {
                for t in sylows.iter().skip(i + 1) {
                    if s.intersection(t).len() != 1 {
                        return Outcome::Fail(Witness::new("Sylow parts must meet trivially"));
                    }
                }
            }
            let span = b.additive_closure(&sylows.iter().flat_map(|s| s.iter()).collect::<Vec<_>>());
            if product == b.order() && span == full(b) {
                Outcome::Pass
            } else {
                Outcome::Fail(Witness::new("B must be the direct sum of its Sylow ideals"))
            }
        },
    },
    TheoremCheck {
        id: "theo-left-nilp",
        description: "left nilpotent of nilpotent type ⟺ design group nilpotent ⟺ both groups nilpotent",
        run: |b| {
            let nil = b.nilpotency_profile();
            let one = nil.left.is_some() && nil.type_nilpotent;
            let two = design_group(b).group.is_nilpotent();
            let three = b.add_group().is_nilpotent() && b.mul_group().is_nilpotent();
            if one == two && two == three {
                Outcome::Pass
            } else {
                Outcome::Fail(Witness::new(format!(
                    "equivalence broke: left-nilp-of-nilp-type={one}, design-nilp={two}, both-groups-nilp={three}"
                )))
            }
        },
    },
    TheoremCheck {
        id: "cor-left-nil",
        description: "abelian type: left nil ⟺ left nilpotent",
        run: |b| {
            if !b.add_group().is_abelian() {
                return Outcome::Skip;
            }
            let nil = b.nilpotency_profile();
            if nil.left_nil == nil.left.is_some() {
                Outcome::Pass
            } else {
                Outcome::Fail(Witness::new(format!(
                    "left nil = {} but left class = {:?}",
                    nil.left_nil, nil.left
                )))
            }
        },
    },
    TheoremCheck {
        id: "index-agreement",
        description: "additive and multiplicative indices of every sub-brace agree",
        run: |b| {
            for s in b.sub_braces() {
                let add_cosets: std::collections::BTreeSet<ElemSet> =
                    (0..b.order()).map(|a| s.iter().map(|x| b.add(a, x)).collect()).collect();
                let mul_cosets: std::collections::BTreeSet<ElemSet> =
                    (0..b.order()).map(|a| s.iter().map(|x| b.mul(a, x)).collect()).collect();
                if add_cosets.len() != mul_cosets.len() {
                    return Outcome::Fail(
                        Witness::new(format!(
                            "indices disagree: {} additive vs {} multiplicative cosets",
                            add_cosets.len(),
                            mul_cosets.len()
                        ))
                        .with_sets(vec![s.clone()]),
                    );
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "remak",
        description: "ideals below the socle have direct complements among the minimal ideals; inside the non-trivial part they are partial sums",
        run: |b| {
            let data = b.minimal_ideal_data();
            for j in b.ideals() {
                if !j.is_subset_of(&data.s) {
                    continue;
                }
                if !has_direct_complement(b, j, &data.minimal_ideals, &data.s) {
                    return Outcome::Fail(
                        Witness::new("no complement of minimal ideals found").with_sets(vec![j.clone()]),
                    );
                }
                if j.is_subset_of(&data.v) && j.len() > 1 {
                    let nontrivial: Vec<ElemSet> = data
                        .minimal_ideals
                        .iter()
                        .filter(|i| !b.is_trivial_sub_brace(i))
                        .cloned()
                        .collect();
                    if !is_partial_sum(b, j, &nontrivial) {
                        return Outcome::Fail(
                            Witness::new("ideal inside the non-trivial socle must be a partial sum")
                                .with_sets(vec![j.clone()]),
                        );
                    }
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "cornumber",
        description: "direct decompositions of the non-trivial socle into non-trivial minimal ideals are unique",
        run: |b| {
            // verified structurally during socle decomposition; failure
            // there panics, so reaching this point re-checks the split
            let data = b.minimal_ideal_data();
            if data.u.intersection(&data.v) == ElemSet::zero() && b.sum_set(&data.u, &data.v) == data.s {
                Outcome::Pass
            } else {
                Outcome::Fail(Witness::new("socle must split as U ⊕ V").with_sets(vec![data.u, data.v, data.s]))
            }
        },
    },
    TheoremCheck {
        id: "loewy",
        description: "the ascending Loewy series reaches B through strictly increasing ideals",
        run: |b| {
            let report = b.loewy_series();
            if report.terms.last() != Some(&full(b)) {
                return Outcome::Fail(Witness::new("Loewy series must terminate at B"));
            }
            for w in report.terms.windows(2) {
                if w[0].len() >= w[1].len() {
                    return Outcome::Fail(Witness::new("Loewy series must strictly increase"));
                }
            }
            for t in &report.terms {
                if !b.is_ideal(t) {
                    return Outcome::Fail(Witness::new("Loewy terms must be ideals").with_sets(vec![t.clone()]));
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "composition-series",
        description: "a chain with every quotient a direct sum of simple braces, all trivial or all non-trivial",
        run: |b| {
            if b.order() == 1 {
                return Outcome::Pass;
            }
            // breadth-first over sub-braces, stepping when the quotient
            // decomposes correctly
            let subs: Vec<ElemSet> = b.sub_braces().to_vec();
            let target = full(b);
            let mut reachable = vec![false; subs.len()];
            let zero_at = subs.iter().position(|s| s.len() == 1).expect("{0} is a sub-brace");
            reachable[zero_at] = true;
            for _ in 0..b.order() {
                let mut progress = false;
                for (i, lower) in subs.iter().enumerate() {
                    if !reachable[i] {
                        continue;
                    }
                    for (j, upper) in subs.iter().enumerate() {
                        if reachable[j] || lower.len() >= upper.len() || !lower.is_subset_of(upper) {
                            continue;
                        }
                        if !b.ideal_in(lower, upper) {
                            continue;
                        }
                        let (outer, embed) = b.restriction(upper).expect("sub-brace restriction");
                        let inner: ElemSet =
                            embed.iter().enumerate().filter(|(_, old)| lower.contains(**old)).map(|(new, _)| new).collect();
                        let (quotient, _) = outer.quotient(&inner).expect("ideal in the restriction");
                        if is_direct_sum_of_simples(&quotient) {
                            reachable[j] = true;
                            progress = true;
                        }
                    }
                }
                if reachable[subs.iter().position(|s| s == &target).unwrap()] {
                    return Outcome::Pass;
                }
                if !progress {
                    break;
                }
            }
            Outcome::Fail(Witness::new("no chain with simple direct-sum quotients found"))
        },
    },
    TheoremCheck {
        id: "soluble-radical",
        description: "the intersection of strongly prime ideals equals the weakly soluble radical",
        run: |b| {
            let report = b.strongly_prime_and_radicals();
            if report.radical_equality {
                Outcome::Pass
            } else {
                Outcome::Fail(
                    Witness::new("radical intersection must equal the weakly soluble radical")
                        .with_sets(vec![report.radical_intersection, report.weakly_soluble_radical]),
                )
            }
        },
    },
    TheoremCheck {
        id: "n-ideal-soluble",
        description: "every N-ideal is weakly soluble",
        run: |b| {
            let report = b.strongly_prime_and_radicals();
            for (ideal, is_n) in &report.n_ideal_flags {
                if *is_n && !b.is_weakly_soluble_subset(ideal) {
                    return Outcome::Fail(
                        Witness::new("N-ideal must be weakly soluble").with_sets(vec![ideal.clone()]),
                    );
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "loc-bounded-nilp",
        description: "nilpotency classes of sub-braces are bounded by the class of the brace",
        run: |b| {
            let nil = b.nilpotency_profile();
            for s in b.sub_braces() {
                let r = restrict(b, s);
                let rn = r.nilpotency_profile();
                for (name, outer, inner) in [
                    ("annihilator", nil.annihilator, rn.annihilator),
                    ("right", nil.right, rn.right),
                    ("socle", nil.socle, rn.socle),
                    ("left", nil.left, rn.left),
                ] {
                    if let Some(k) = outer {
                        if inner.map(|i| i > k).unwrap_or(true) {
                            return Outcome::Fail(
                                Witness::new(format!("{name} class of a sub-brace exceeds the bound {k}"))
                                    .with_sets(vec![s.clone()]),
                            );
                        }
                    }
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "l-pinilp",
        description: "left π-nilpotent of class d ⟺ the Hall π-subgroup sits inside the dual socle term cd",
        run: |b| {
            if !b.add_group().is_nilpotent() {
                return Outcome::Skip;
            }
            let c = b.add_group().nilpotency_class().expect("nilpotent type");
            let all = full(b);
            for pi in prime_subsets(b.order()) {
                let profile = b.pi_profile(&pi).expect("nilpotent type");
                let f_series = b.mixed_series(MixedKind::DualSocle, &all, &all).expect("B is a strong left ideal");
                let limit = f_series.terms.last().expect("non-empty series");
                let lhs = profile.left_class;
                let in_limit = profile.hall_pi.is_subset_of(limit);
                if lhs.is_some() != in_limit {
                    return Outcome::Fail(
                        Witness::new("left π-nilpotency must match containment in the dual socle limit")
                            .with_elements(pi.clone()),
                    );
                }
                if let Some(d) = lhs {
                    let idx = (c * d).min(f_series.terms.len() - 1);
                    if !profile.hall_pi.is_subset_of(&f_series.terms[idx]) {
                        return Outcome::Fail(
                            Witness::new(format!("Hall π-subgroup must lie in term c·d = {}", c * d))
                                .with_elements(pi.clone()),
                        );
                    }
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "pi-eqcond",
        description: "B_π′★B_π = 0 ⟺ B_π′ is an ideal ⟺ G(B_π′) is normal in G(B)",
        run: |b| {
            if !b.add_group().is_nilpotent() {
                return Outcome::Skip;
            }
            let dg = design_group(b);
            for pi in prime_subsets(b.order()) {
                let pi_prime: Vec<usize> =
                    primes_dividing(b.order()).into_iter().filter(|p| !pi.contains(p)).collect();
                let hall_pi = b.hall_subgroup(&pi);
                let hall_prime = b.hall_subgroup(&pi_prime);
                let one = b.star_set(&hall_prime, &hall_pi).iter().all(|&v| v == 0);
                let two = b.is_ideal(&hall_prime);
                let sub = design_subgroup(&dg, &hall_prime);
                let three = dg.group.is_subgroup(&sub) && dg.group.is_normal(&sub);
                if one != two || two != three {
                    return Outcome::Fail(
                        Witness::new(format!("equivalence broke: star-zero={one}, ideal={two}, normal={three}"))
                            .with_elements(pi.clone()),
                    );
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "pnilp-equivalence",
        description: "left π-nilpotent ⟺ (B_π′ ideal and B_π left nilpotent) ⟺ design group π-nilpotent",
        run: |b| {
            if !b.add_group().is_nilpotent() {
                return Outcome::Skip;
            }
            let dg = design_group(b);
            for pi in prime_subsets(b.order()) {
                let profile = b.pi_profile(&pi).expect("nilpotent type");
                if !profile.pi_separating {
                    return Outcome::Fail(
                        Witness::new("finite braces must be π-separating").with_elements(pi.clone()),
                    );
                }
                let pi_prime: Vec<usize> =
                    primes_dividing(b.order()).into_iter().filter(|p| !pi.contains(p)).collect();
                let hall_prime = b.hall_subgroup(&pi_prime);
                let one = profile.left_class.is_some();
                let two = b.is_ideal(&hall_prime) && {
                    let r = restrict(b, &profile.hall_pi);
                    r.descending_series(DescendingKind::Left).class_or_length.is_some()
                };
                let three = group_pi_nilpotent(&dg.group, &pi).is_some();
                if one != two || two != three {
                    return Outcome::Fail(
                        Witness::new(format!(
                            "equivalence broke: left-π-nilp={one}, split-form={two}, design-π-nilp={three}"
                        ))
                        .with_elements(pi.clone()),
                    );
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "left-right-mulab",
        description: "multiplicative-abelian braces: upper socle terms equal dual socle terms; for nilpotent type, left ⟺ right (π-)nilpotent",
        run: |b| {
            if !b.mul_group().is_abelian() {
                return Outcome::Skip;
            }
            let all = full(b);
            let soc = b.ascending_series(AscendingKind::Socle, &ElemSet::zero()).expect("{0} is an ideal");
            let dual = b.mixed_series(MixedKind::DualSocle, &all, &all).expect("B is a strong left ideal");
            let len = soc.terms.len().max(dual.terms.len());
            for i in 0..len {
                let s = &soc.terms[i.min(soc.terms.len() - 1)];
                let f = &dual.terms[i.min(dual.terms.len() - 1)];
                if s != f {
                    return Outcome::Fail(
                        Witness::new(format!("socle term {i} must equal dual socle term"))
                            .with_sets(vec![s.clone(), f.clone()]),
                    );
                }
            }
            // the left/right transfer lives in the π-nilpotency setting,
            // whose standing hypothesis is nilpotent type; with additive
            // S3 and abelian multiplication one side can fail alone
            if b.add_group().is_nilpotent() {
                let nil = b.nilpotency_profile();
                if nil.left.is_some() != nil.right.is_some() {
                    return Outcome::Fail(Witness::new(format!(
                        "left ({:?}) and right ({:?}) nilpotency must agree",
                        nil.left, nil.right
                    )));
                }
                for pi in prime_subsets(b.order()) {
                    let p = b.pi_profile(&pi).expect("nilpotent type");
                    if p.left_class.is_some() != p.right_class.is_some() {
                        return Outcome::Fail(
                            Witness::new("left and right π-nilpotency must agree").with_elements(pi.clone()),
                        );
                    }
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "p-all-p",
        description: "periodic nilpotent type: left nilpotent ⟺ left p-nilpotent for every prime divisor",
        run: |b| {
            if !b.add_group().is_nilpotent() {
                return Outcome::Skip;
            }
            let nil = b.nilpotency_profile();
            let all_primes = primes_dividing(b.order());
            let per_prime: Vec<Option<usize>> = all_primes
                .iter()
                .map(|&p| b.pi_profile(&[p]).expect("nilpotent type").left_class)
                .collect();
            let rhs = per_prime.iter().all(|c| c.is_some());
            if nil.left.is_some() == rhs {
                Outcome::Pass
            } else {
                Outcome::Fail(Witness::new(format!(
                    "left class {:?} must match per-prime classes {:?}",
                    nil.left, per_prime
                )))
            }
        },
    },
    TheoremCheck {
        id: "braid",
        description: "the derived solution is bijective, non-degenerate and satisfies the braid relation",
        run: |b| {
            let report = verify_solution(&solution_from_brace(b));
            if report.all_ok() {
                Outcome::Pass
            } else {
                let w = report
                    .braid_witness
                    .map(|(x, y, z)| vec![x, y, z])
                    .unwrap_or_default();
                Outcome::Fail(Witness::new("solution flags must all hold").with_elements(w))
            }
        },
    },
    TheoremCheck {
        id: "quotient-revalidate",
        description: "the quotient by every ideal passes full brace validation",
        run: |b| {
            for ideal in b.ideals() {
                match b.quotient(ideal) {
                    Ok((q, _)) => {
                        if q.verify_axioms().is_err() {
                            return Outcome::Fail(
                                Witness::new("quotient must satisfy the axioms").with_sets(vec![ideal.clone()]),
                            );
                        }
                    }
                    Err(e) => {
                        return Outcome::Fail(Witness::new(e.to_string()).with_sets(vec![ideal.clone()]))
                    }
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "min-ideal-socle",
        description: "the socle of minimal ideals splits as U ⊕ V with a greedy direct-sum witness",
        run: |b| {
            let data = b.minimal_ideal_data();
            let mut spanned = ElemSet::zero();
            for part in &data.direct_sum_witness {
                if part.intersection(&spanned) != ElemSet::zero() {
                    return Outcome::Fail(Witness::new("witness must be direct").with_sets(vec![part.clone()]));
                }
                spanned = b.additive_closure(&spanned.union(part).iter().collect::<Vec<_>>());
            }
            if spanned == data.s {
                Outcome::Pass
            } else {
                Outcome::Fail(Witness::new("witness must span the socle").with_sets(vec![spanned, data.s]))
            }
        },
    },
    TheoremCheck {
        id: "lnorm",
        description: "for a sub-brace A and c additively normalizing A with A★c ⊆ A: c ∈ N∘(A) ⟺ λ_c(A) = A",
        run: |b| {
            for a in b.sub_braces() {
                for c in 0..b.order() {
                    let normalizes_add = a.iter().all(|x| a.contains(b.add(b.add(c, x), b.neg(c))));
                    let star_in = a.iter().all(|x| a.contains(b.star(x, c)));
                    if !(normalizes_add && star_in) {
                        continue;
                    }
                    let mul_normal = a.iter().all(|x| a.contains(b.mul(b.mul(c, x), b.mul_inv(c))));
                    let stabilizes = a.iter().all(|x| a.contains(b.lambda(c, x)));
                    if mul_normal != stabilizes {
                        return Outcome::Fail(
                            Witness::new(format!(
                                "multiplicative normalization {mul_normal} must equal λ-stabilization {stabilizes}"
                            ))
                            .with_elements(vec![c])
                            .with_sets(vec![a.clone()]),
                        );
                    }
                }
            }
            Outcome::Pass
        },
    },
    TheoremCheck {
        id: "last",
        description: "fixator intersections over an ideal form a sub-brace containing it with trivial quotient",
        run: |b| {
            let all = full(b);
            for a in b.ideals() {
                let g = b
                    .fixator(crate::ideal::FixatorVariant::FixL, &all, &all, a)
                    .expect("A is an ideal");
                let fix_r = b.fixator(crate::ideal::FixatorVariant::FixR, &all, &g, a).expect("A is an ideal");
                let h = fix_r.intersection(&b.additive_normalizer_in(&all, a));
                // hypotheses: G stabilizes A, H normalizes A additively,
                // A ⊆ G∩H, and G★H ⊆ A
                let star_ok = g.iter().all(|x| h.iter().all(|y| a.contains(b.star(x, y))));
                if !(a.is_subset_of(&g) && a.is_subset_of(&h) && star_ok) {
                    return Outcome::Fail(
                        Witness::new("hypotheses must hold by construction").with_sets(vec![a.clone(), g, h]),
                    );
                }
                let c = g.intersection(&h);
                let trivial_quotient =
                    c.iter().all(|x| c.iter().all(|y| a.contains(b.star(x, y))));
                if !(b.is_sub_brace(&c) && b.ideal_in(a, &c) && trivial_quotient) {
                    return Outcome::Fail(
                        Witness::new("G∩H must be a sub-brace containing A as an ideal with trivial quotient")
                            .with_sets(vec![a.clone(), c]),
                    );
                }
            }
            Outcome::Pass
        },
    },
];

fn has_direct_complement(b: &SkewBrace, j: &ElemSet, minimals: &[ElemSet], target: &ElemSet) -> bool {
    fn rec(b: &SkewBrace, pool: &[ElemSet], at: usize, sum: &ElemSet, target: &ElemSet) -> bool {
        if sum == target {
            return true;
        }
        if at == pool.len() {
            return false;
        }
        if pool[at].intersection(sum) == ElemSet::zero() {
            let grown = b.additive_closure(&sum.union(&pool[at]).iter().collect::<Vec<_>>());
            if grown.is_subset_of(target) && rec(b, pool, at + 1, &grown, target) {
                return true;
            }
        }
        rec(b, pool, at + 1, sum, target)
    }
    rec(b, minimals, 0, j, target)
}

fn is_partial_sum(b: &SkewBrace, j: &ElemSet, minimals: &[ElemSet]) -> bool {
    fn rec(b: &SkewBrace, pool: &[ElemSet], at: usize, sum: &ElemSet, j: &ElemSet) -> bool {
        if sum == j {
            return true;
        }
        if at == pool.len() || sum.len() > j.len() {
            return false;
        }
        if pool[at].is_subset_of(j) {
            let grown = b.additive_closure(&sum.union(&pool[at]).iter().collect::<Vec<_>>());
            if grown.is_subset_of(j) && rec(b, pool, at + 1, &grown, j) {
                return true;
            }
        }
        rec(b, pool, at + 1, sum, j)
    }
    rec(b, minimals, 0, &ElemSet::zero(), j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::sample;

    fn sample_catalog() -> Catalog {
        Catalog::from_braces([
            sample::trivial_cyclic(1),
            sample::trivial_cyclic(2),
            sample::trivial_cyclic(4),
            sample::e4(),
            sample::at6(),
            sample::trivial_cyclic(6),
            crate::brace::SkewBrace::trivial(crate::group::dihedral(3)),
        ])
    }

    #[test]
    fn registry_is_large_and_unique() {
        let ids = check_ids();
        assert!(ids.len() >= 25, "registry has {} checks", ids.len());
        let set: std::collections::BTreeSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
    }

    #[test]
    fn all_checks_pass_on_samples() {
        let catalog = sample_catalog();
        let summary = check_theorems(&catalog, None).unwrap();
        for run in &summary.runs {
            assert!(run.failures.is_empty(), "{} failed: {:?}", run.id, run.failures);
        }
        assert!(summary.overall_pass());
    }

    #[test]
    fn selection_and_unknown_ids() {
        let catalog = sample_catalog();
        let summary = check_theorems(&catalog, Some(&["braid".to_string()])).unwrap();
        assert_eq!(summary.runs.len(), 1);
        assert_eq!(summary.runs[0].pass, catalog.len());
        assert!(matches!(
            check_theorems(&catalog, Some(&["nonexistent".to_string()])),
            Err(CheckError::UnknownCheckId(_))
        ));
    }

    #[test]
    fn bsemib_on_at6_applies_with_both_sides_false() {
        let catalog = Catalog::from_braces([sample::at6()]);
        let summary = check_theorems(&catalog, Some(&["bsemib".to_string()])).unwrap();
        assert_eq!(summary.runs[0].pass, 1);
    }
}
