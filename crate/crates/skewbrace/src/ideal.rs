//! Sub-braces and the lattice of ideal notions: classification, closure
//! generation, minimal ideals and socle decomposition, the Loewy series,
//! fixators and stabilizers, strongly prime ideals and radicals.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use thiserror::Error;

use crate::brace::SkewBrace;
use crate::series::{SeriesKind, SeriesReport};
use crate::set::ElemSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("subsets under classification must contain 0")]
    NotContainingZero,
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
}

/// How a subset sits inside the brace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFlags {
    pub subbrace: bool,
    pub left_ideal: bool,
    pub strong_left_ideal: bool,
    pub ideal: bool,
    /// Least `k` with a chain `B = I_0 ≥ … ≥ I_k = S`, each term an ideal
    /// in its predecessor; absent when `S` is not even a sub-brace.
    pub subideal_defect: Option<usize>,
}

/// Closure kinds for [`SkewBrace::generated`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    SubBrace,
    LeftIdeal,
    StrongLeftIdeal,
    Ideal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixatorVariant {
    /// `Fix^l_G(C/H)`: multiplicative `G`, additive `H`.
    FixL,
    /// `Fix^r_G(C/H)`: additive `G` and `H`.
    FixR,
    /// `Stab_G(A)`: the λ-stabilizer of an additive subgroup.
    Stab,
}

/// Generators of minimal ideals and the sub-braces they span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalIdealData {
    /// elements generating a minimal ideal
    pub b_s: ElemSet,
    /// those generating a trivial one
    pub b_u: ElemSet,
    /// those generating a non-trivial one
    pub b_v: ElemSet,
    pub s: ElemSet,
    pub u: ElemSet,
    pub v: ElemSet,
    pub minimal_ideals: Vec<ElemSet>,
    /// a sublist of minimal ideals whose (direct) sum is `s`
    pub direct_sum_witness: Vec<ElemSet>,
}

/// Strongly prime ideals, the two radicals, and N-ideal classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StronglyPrimeReport {
    pub strongly_prime_ideals: Vec<ElemSet>,
    pub radical_intersection: ElemSet,
    pub weakly_soluble_radical: ElemSet,
    /// per ideal: does every N-sequence inside it reach zero
    pub n_ideal_flags: Vec<(ElemSet, bool)>,
    /// ★-products of ideals were evaluated over all bracketings up to
    /// this length (the definition does not fix a bracketing)
    pub star_product_depth: usize,
    pub radical_equality: bool,
}

/// Cached subgroup/ideal lists of one brace.
#[derive(Clone, Debug, Default)]
pub(crate) struct Lattice {
    additive_subgroups: OnceLock<Vec<ElemSet>>,
    sub_braces: OnceLock<Vec<ElemSet>>,
    left_ideals: OnceLock<Vec<ElemSet>>,
    strong_left_ideals: OnceLock<Vec<ElemSet>>,
    ideals: OnceLock<Vec<ElemSet>>,
}

fn size_lex_sorted(mut sets: Vec<ElemSet>) -> Vec<ElemSet> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets
}

impl SkewBrace {
    /// ⟨X⟩₊: the additive subgroup generated by a set of elements.
    pub fn additive_closure(&self, gens: &[usize]) -> ElemSet {
        self.add_group().generated_subgroup(&ElemSet::from_unsorted(gens.to_vec()))
    }

    /// The set `{x★y : x ∈ xs, y ∈ ys}` (no closure).
    pub fn star_set(&self, xs: &ElemSet, ys: &ElemSet) -> Vec<usize> {
        xs.iter().flat_map(|x| ys.iter().map(move |y| self.star(x, y))).collect()
    }

    /// `⟨X★Y⟩₊`.
    pub fn star_subgroup(&self, xs: &ElemSet, ys: &ElemSet) -> ElemSet {
        self.additive_closure(&self.star_set(xs, ys))
    }

    /// Elementwise sum `{x+y}`; for an ideal and a sub-brace this is the
    /// join `I+J` as a set.
    pub fn sum_set(&self, xs: &ElemSet, ys: &ElemSet) -> ElemSet {
        xs.iter().flat_map(|x| ys.iter().map(move |y| self.add(x, y))).collect()
    }

    /// All subgroups of the additive group, grown by closing seeds one
    /// generator at a time.
    pub fn additive_subgroups(&self) -> &[ElemSet] {
        self.lattice.additive_subgroups.get_or_init(|| {
            let mut seen: BTreeSet<ElemSet> = BTreeSet::new();
            let mut queue = vec![ElemSet::zero()];
            seen.insert(ElemSet::zero());
            while let Some(s) = queue.pop() {
                for x in 0..self.order() {
                    if s.contains(x) {
                        continue;
                    }
                    let grown = self.add_group().generated_subgroup(&s.union(&ElemSet::singleton(x)));
                    if seen.insert(grown.clone()) {
                        queue.push(grown);
                    }
                }
            }
            size_lex_sorted(seen.into_iter().collect())
        })
    }

    /// All sub-braces, in size-then-lexicographic order.
    pub fn sub_braces(&self) -> &[ElemSet] {
        self.lattice.sub_braces.get_or_init(|| {
            self.additive_subgroups().iter().filter(|s| self.is_sub_brace(s)).cloned().collect()
        })
    }

    pub fn is_left_ideal(&self, s: &ElemSet) -> bool {
        self.add_group().is_subgroup(s)
            && (0..self.order()).all(|b| s.iter().all(|x| s.contains(self.lambda(b, x))))
    }

    pub fn is_strong_left_ideal(&self, s: &ElemSet) -> bool {
        self.is_left_ideal(s) && self.add_group().is_normal(s)
    }

    pub fn is_ideal(&self, s: &ElemSet) -> bool {
        self.ideal_defect(s).is_none()
    }

    pub fn left_ideals(&self) -> &[ElemSet] {
        self.lattice.left_ideals.get_or_init(|| {
            self.additive_subgroups().iter().filter(|s| self.is_left_ideal(s)).cloned().collect()
        })
    }

    pub fn strong_left_ideals(&self) -> &[ElemSet] {
        self.lattice.strong_left_ideals.get_or_init(|| {
            self.left_ideals().iter().filter(|s| self.add_group().is_normal(s)).cloned().collect()
        })
    }

    pub fn ideals(&self) -> &[ElemSet] {
        self.lattice.ideals.get_or_init(|| {
            self.strong_left_ideals().iter().filter(|s| self.mul_group().is_normal(s)).cloned().collect()
        })
    }

    pub fn all_of_kind(&self, kind: GenKind) -> &[ElemSet] {
        match kind {
            GenKind::SubBrace => self.sub_braces(),
            GenKind::LeftIdeal => self.left_ideals(),
            GenKind::StrongLeftIdeal => self.strong_left_ideals(),
            GenKind::Ideal => self.ideals(),
        }
    }

    /// Computes all placement flags of a subset containing 0.
    pub fn classify_subset(&self, s: &ElemSet) -> Result<IdealFlags, IdealError> {
        if !s.contains(0) {
            return Err(IdealError::NotContainingZero);
        }
        let subbrace = self.is_sub_brace(s);
        let left_ideal = self.is_left_ideal(s);
        let strong_left_ideal = left_ideal && self.add_group().is_normal(s);
        let ideal = strong_left_ideal && self.mul_group().is_normal(s);
        debug_assert!(!left_ideal || subbrace, "left ideals are multiplicative subgroups");
        let subideal_defect = subbrace.then(|| self.subideal_defect(s)).flatten();
        Ok(IdealFlags { subbrace, left_ideal, strong_left_ideal, ideal, subideal_defect })
    }

    /// Whether `inner` is an ideal of the sub-brace `outer`.
    pub fn ideal_in(&self, inner: &ElemSet, outer: &ElemSet) -> bool {
        inner.is_subset_of(outer)
            && self.add_group().is_subgroup(inner)
            && inner.iter().all(|x| outer.contains(x))
            && outer.iter().all(|o| {
                let oi = self.neg(o);
                let om = self.mul_inv(o);
                inner.iter().all(|x| {
                    inner.contains(self.add(self.add(o, x), oi))
                        && inner.contains(self.lambda(o, x))
                        && inner.contains(self.mul(self.mul(o, x), om))
                })
            })
    }

    /// Least chain length `B = I_0 ≥ … ≥ I_k = S` with each term an ideal
    /// in its predecessor; breadth-first over the sub-brace poset.
    fn subideal_defect(&self, s: &ElemSet) -> Option<usize> {
        let full = ElemSet::full(self.order());
        if s == &full {
            return Some(0);
        }
        let candidates: Vec<&ElemSet> =
            self.sub_braces().iter().filter(|c| s.is_subset_of(c)).collect();
        let mut frontier: Vec<&ElemSet> = vec![&full];
        let mut visited: BTreeSet<&ElemSet> = frontier.iter().copied().collect();
        for depth in 1..=self.order() {
            let mut next = Vec::new();
            for outer in &frontier {
                for cand in &candidates {
                    if cand.len() < outer.len()
                        && !visited.contains(*cand)
                        && cand.is_subset_of(outer)
                        && self.ideal_in(cand, outer)
                    {
                        if *cand == s {
                            return Some(depth);
                        }
                        visited.insert(cand);
                        next.push(*cand);
                    }
                }
            }
            if next.is_empty() {
                return None;
            }
            frontier = next;
        }
        None
    }

    /// Worklist closure of `seed` under the operations of the requested
    /// kind: `+` and additive inverse always; λ-maps for left ideals;
    /// additive conjugation for strong left ideals; multiplicative
    /// conjugation for ideals.
    pub fn generated(&self, seed: &ElemSet, kind: GenKind) -> ElemSet {
        let n = self.order();
        let mut member = vec![false; n];
        member[0] = true;
        let mut elems = vec![0usize];
        let mut queue: Vec<usize> = Vec::new();
        for x in seed.iter() {
            if !member[x] {
                member[x] = true;
                elems.push(x);
                queue.push(x);
            }
        }
        while let Some(x) = queue.pop() {
            let mut fresh: Vec<usize> = Vec::new();
            fresh.push(self.neg(x));
            for &y in &elems {
                fresh.push(self.add(x, y));
                fresh.push(self.add(y, x));
            }
            match kind {
                GenKind::SubBrace => {
                    fresh.push(self.mul_inv(x));
                    for &y in &elems {
                        fresh.push(self.mul(x, y));
                        fresh.push(self.mul(y, x));
                    }
                }
                GenKind::LeftIdeal => {
                    for c in 0..n {
                        fresh.push(self.lambda(c, x));
                    }
                }
                GenKind::StrongLeftIdeal => {
                    for c in 0..n {
                        fresh.push(self.lambda(c, x));
                        fresh.push(self.add(self.add(c, x), self.neg(c)));
                    }
                }
                GenKind::Ideal => {
                    for c in 0..n {
                        fresh.push(self.lambda(c, x));
                        fresh.push(self.add(self.add(c, x), self.neg(c)));
                        fresh.push(self.mul(self.mul(c, x), self.mul_inv(c)));
                    }
                }
            }
            for p in fresh {
                if !member[p] {
                    member[p] = true;
                    elems.push(p);
                    queue.push(p);
                }
            }
        }
        ElemSet::from_bitmap(&member)
    }

    /// The principal ideal `(b)`.
    pub fn principal_ideal(&self, b: usize) -> ElemSet {
        self.generated(&ElemSet::singleton(b), GenKind::Ideal)
    }

    /// Minimal (non-zero) ideals and the S/U/V decomposition data.
    pub fn minimal_ideal_data(&self) -> MinimalIdealData {
        let ideals = self.ideals();
        let minimal_ideals: Vec<ElemSet> = ideals
            .iter()
            .filter(|i| i.len() > 1)
            .filter(|i| {
                ideals.iter().all(|j| j.len() == 1 || !(j.is_subset_of(i) && j.len() < i.len()))
            })
            .cloned()
            .collect();
        let trivial: Vec<bool> = minimal_ideals.iter().map(|i| self.is_trivial_sub_brace(i)).collect();
        let mut b_s = Vec::new();
        let mut b_u = Vec::new();
        let mut b_v = Vec::new();
        for (i, ideal) in minimal_ideals.iter().enumerate() {
            for x in ideal.iter().filter(|&x| x != 0) {
                b_s.push(x);
                if trivial[i] {
                    b_u.push(x);
                } else {
                    b_v.push(x);
                }
            }
        }
        let span = |list: &[ElemSet]| -> ElemSet {
            let gens: Vec<usize> = list.iter().flat_map(|i| i.iter()).collect();
            self.additive_closure(&gens)
        };
        let s = span(&minimal_ideals);
        let u = span(&minimal_ideals.iter().zip(&trivial).filter(|(_, &t)| t).map(|(i, _)| i.clone()).collect::<Vec<_>>());
        let v = span(&minimal_ideals.iter().zip(&trivial).filter(|(_, &t)| !t).map(|(i, _)| i.clone()).collect::<Vec<_>>());
        debug_assert!(self.is_ideal(&s) && self.is_ideal(&u) && self.is_ideal(&v));
        assert_eq!(u.intersection(&v), ElemSet::zero(), "trivial and non-trivial parts meet trivially");
        assert_eq!(self.sum_set(&u, &v), s, "the socle splits as U ⊕ V");
        // greedy direct-sum witness
        let mut witness: Vec<ElemSet> = Vec::new();
        let mut total = ElemSet::zero();
        for ideal in &minimal_ideals {
            if ideal.intersection(&total) == ElemSet::zero() {
                witness.push(ideal.clone());
                total = self.additive_closure(&total.union(ideal).iter().collect::<Vec<_>>());
            }
        }
        assert_eq!(total, s, "greedy sum of minimal ideals spans the socle");
        // non-trivial decompositions of V are unique as sets of ideals
        let nontrivial: Vec<&ElemSet> =
            minimal_ideals.iter().zip(&trivial).filter(|(_, &t)| !t).map(|(i, _)| i).collect();
        let mut v_decomps: Vec<Vec<&ElemSet>> = Vec::new();
        collect_direct_decompositions(self, &nontrivial, 0, &mut Vec::new(), &ElemSet::zero(), &v, &mut v_decomps);
        for d in &v_decomps {
            let a: BTreeSet<&ElemSet> = d.iter().copied().collect();
            let b: BTreeSet<&ElemSet> = v_decomps[0].iter().copied().collect();
            assert_eq!(a, b, "non-trivial minimal decomposition must be unique");
        }
        MinimalIdealData {
            b_s: ElemSet::from_unsorted(b_s),
            b_u: ElemSet::from_unsorted(b_u),
            b_v: ElemSet::from_unsorted(b_v),
            s,
            u,
            v,
            minimal_ideals,
            direct_sum_witness: witness,
        }
    }

    /// The ascending Loewy series `S_0 = {0}`, `S_{k+1}/S_k = S(B/S_k)`.
    pub fn loewy_series(&self) -> SeriesReport {
        let full = ElemSet::full(self.order());
        let mut terms = vec![ElemSet::zero()];
        loop {
            let current = terms.last().unwrap().clone();
            if current == full {
                break;
            }
            let (q, proj) = self.quotient(&current).expect("Loewy terms are ideals");
            let socle_q = q.minimal_ideal_data().s;
            let lifted: ElemSet = (0..self.order()).filter(|&a| socle_q.contains(proj[a])).collect();
            assert!(current.len() < lifted.len(), "the socle of a non-zero finite brace is non-zero");
            terms.push(lifted);
        }
        let length = Some(terms.len() - 1);
        SeriesReport {
            kind: SeriesKind::Loewy,
            terms,
            stabilized: true,
            class_or_length: length,
            witness: None,
        }
    }

    /// λ-stabilizer `Stab_G(A) = {x ∈ G : λ_x(A) = A}`.
    pub fn stabilizer(&self, g: &ElemSet, a: &ElemSet) -> ElemSet {
        g.iter()
            .filter(|&x| {
                a.iter().all(|y| a.contains(self.lambda(x, y)))
            })
            .collect()
    }

    /// Additive normalizer of `h` within `g`.
    pub fn additive_normalizer_in(&self, g: &ElemSet, h: &ElemSet) -> ElemSet {
        g.iter()
            .filter(|&x| h.iter().all(|y| h.contains(self.add(self.add(x, y), self.neg(x)))))
            .collect()
    }

    /// The three fixator constructions; the subgroup property of the
    /// result is re-verified.
    pub fn fixator(
        &self,
        variant: FixatorVariant,
        g: &ElemSet,
        c: &ElemSet,
        h: &ElemSet,
    ) -> Result<ElemSet, IdealError> {
        let result = match variant {
            FixatorVariant::FixL => {
                if !self.add_group().is_subgroup(h) {
                    return Err(IdealError::PreconditionViolated("Fix^l needs an additive subgroup H"));
                }
                if !self.mul_group().is_subgroup(g) {
                    return Err(IdealError::PreconditionViolated("Fix^l needs a multiplicative subgroup G"));
                }
                let stab = self.stabilizer(g, h);
                let set: ElemSet = stab
                    .iter()
                    .filter(|&x| c.iter().all(|e| h.contains(self.add(self.neg(e), self.lambda(x, e)))))
                    .collect();
                if !self.mul_group().is_subgroup(&set) {
                    return Err(IdealError::PreconditionViolated("Fix^l result must be a multiplicative subgroup"));
                }
                set
            }
            FixatorVariant::FixR => {
                if !self.add_group().is_subgroup(h) || !self.add_group().is_subgroup(g) {
                    return Err(IdealError::PreconditionViolated("Fix^r needs additive subgroups G and H"));
                }
                let norm = self.additive_normalizer_in(g, h);
                let set: ElemSet = norm
                    .iter()
                    .filter(|&x| c.iter().all(|e| h.contains(self.add(self.neg(x), self.lambda(e, x)))))
                    .collect();
                if !self.add_group().is_subgroup(&set) {
                    return Err(IdealError::PreconditionViolated("Fix^r result must be an additive subgroup"));
                }
                set
            }
            FixatorVariant::Stab => {
                if !self.add_group().is_subgroup(h) {
                    return Err(IdealError::PreconditionViolated("Stab needs an additive subgroup A"));
                }
                if !self.mul_group().is_subgroup(g) {
                    return Err(IdealError::PreconditionViolated("Stab needs a multiplicative subgroup G"));
                }
                let set = self.stabilizer(g, h);
                if !self.mul_group().is_subgroup(&set) {
                    return Err(IdealError::PreconditionViolated("Stab result must be a multiplicative subgroup"));
                }
                set
            }
        };
        Ok(result)
    }

    /// Stabilized limit of the weak derived series `X, ⟨X★X⟩₊, …` of a
    /// sub-brace (computed in place on subsets).
    pub fn weak_derived_limit(&self, x: &ElemSet) -> ElemSet {
        let mut current = x.clone();
        loop {
            let next = self.star_subgroup(&current, &current);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Whether the weak derived series of a sub-brace reaches `{0}`.
    pub fn is_weakly_soluble_subset(&self, x: &ElemSet) -> bool {
        self.weak_derived_limit(x).len() == 1
    }

    /// Whether `B/I` kills every bracketed ★-product of non-zero ideals.
    pub fn is_strongly_prime_ideal(&self, ideal: &ElemSet) -> bool {
        let (q, _) = self.quotient(ideal).expect("strong primality is tested on ideals");
        let nonzero: Vec<ElemSet> = q.ideals().iter().filter(|i| i.len() > 1).cloned().collect();
        if nonzero.is_empty() {
            return true;
        }
        // level-k sets: all ★-products of k non-zero ideals, any bracketing
        let mut levels: Vec<BTreeSet<ElemSet>> = vec![BTreeSet::new(); STAR_PRODUCT_DEPTH + 1];
        levels[1] = nonzero.into_iter().collect();
        for k in 2..=STAR_PRODUCT_DEPTH {
            let mut products = BTreeSet::new();
            for i in 1..k {
                let j = k - i;
                for x in &levels[i] {
                    for y in &levels[j] {
                        products.insert(q.star_subgroup(x, y));
                    }
                }
            }
            if products.iter().any(|p| p.len() == 1) {
                return false;
            }
            levels[k] = products;
        }
        true
    }

    /// Strongly prime ideals, radical intersection, the weakly soluble
    /// radical, and N-ideal flags.
    pub fn strongly_prime_and_radicals(&self) -> StronglyPrimeReport {
        let ideals: Vec<ElemSet> = self.ideals().to_vec();
        let strongly_prime_ideals: Vec<ElemSet> =
            ideals.iter().filter(|i| self.is_strongly_prime_ideal(i)).cloned().collect();
        let mut radical_intersection = ElemSet::full(self.order());
        for i in &strongly_prime_ideals {
            radical_intersection = radical_intersection.intersection(i);
        }
        let soluble_gens: Vec<usize> = ideals
            .iter()
            .filter(|i| self.is_weakly_soluble_subset(i))
            .flat_map(|i| i.iter())
            .collect();
        let weakly_soluble_radical = self.generated(&ElemSet::from_unsorted(soluble_gens), GenKind::Ideal);
        let reaching = self.cyclic_reaching_elements();
        let n_ideal_flags: Vec<(ElemSet, bool)> = ideals
            .iter()
            .map(|i| (i.clone(), i.iter().all(|x| x == 0 || !reaching.contains(x))))
            .collect();
        let radical_equality = radical_intersection == weakly_soluble_radical;
        StronglyPrimeReport {
            strongly_prime_ideals,
            radical_intersection,
            weakly_soluble_radical,
            n_ideal_flags,
            star_product_depth: STAR_PRODUCT_DEPTH,
            radical_equality,
        }
    }

    /// Elements admitting an infinite walk in the graph `b → b'` for
    /// non-zero `b'` in the stabilized weak derived term of `(b)`.
    fn cyclic_reaching_elements(&self) -> ElemSet {
        let n = self.order();
        let limits: Vec<ElemSet> = (0..n).map(|b| self.weak_derived_limit(&self.principal_ideal(b))).collect();
        let mut alive: Vec<bool> = (0..n).map(|b| b != 0).collect();
        loop {
            let mut removed = false;
            for b in 1..n {
                if !alive[b] {
                    continue;
                }
                let has_successor = limits[b].iter().any(|x| x != 0 && alive[x]);
                if !has_successor {
                    alive[b] = false;
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
        ElemSet::from_bitmap(&alive)
    }
}

/// ★-products of ideal tuples are evaluated over all bracketings up to
/// this length; lattices at the supported orders stabilize well before it.
pub const STAR_PRODUCT_DEPTH: usize = 4;

fn collect_direct_decompositions<'a>(
    brace: &SkewBrace,
    pool: &[&'a ElemSet],
    at: usize,
    chosen: &mut Vec<&'a ElemSet>,
    sum: &ElemSet,
    target: &ElemSet,
    out: &mut Vec<Vec<&'a ElemSet>>,
) {
    if sum == target {
        out.push(chosen.clone());
        return;
    }
    if at == pool.len() {
        return;
    }
    // include pool[at] when the sum stays direct
    if pool[at].intersection(sum) == ElemSet::zero() {
        chosen.push(pool[at]);
        let grown = brace.additive_closure(&sum.union(pool[at]).iter().collect::<Vec<_>>());
        collect_direct_decompositions(brace, pool, at + 1, chosen, &grown, target, out);
        chosen.pop();
    }
    collect_direct_decompositions(brace, pool, at + 1, chosen, sum, target, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic;
    use crate::sample;

    #[test]
    fn classify_examples() {
        let e4 = sample::e4();
        let flags = e4.classify_subset(&ElemSet::from_unsorted(vec![0, 2])).unwrap();
        assert!(flags.subbrace && flags.left_ideal && flags.strong_left_ideal && flags.ideal);
        assert_eq!(flags.subideal_defect, Some(1));

        let at6 = sample::at6();
        let a3 = ElemSet::from_unsorted(vec![0, 1, 2]);
        let flags = at6.classify_subset(&a3).unwrap();
        assert!(flags.ideal);

        let pair = ElemSet::from_unsorted(vec![0, 3]);
        let flags = at6.classify_subset(&pair).unwrap();
        assert!(flags.subbrace && !flags.left_ideal);

        assert_eq!(
            e4.classify_subset(&ElemSet::from_unsorted(vec![1, 3])),
            Err(IdealError::NotContainingZero)
        );
    }

    #[test]
    fn generated_closures() {
        let e4 = sample::e4();
        assert_eq!(e4.generated(&ElemSet::singleton(1), GenKind::Ideal), ElemSet::full(4));
        assert_eq!(e4.generated(&ElemSet::singleton(2), GenKind::Ideal).as_slice(), &[0, 2]);
        assert_eq!(e4.generated(&ElemSet::empty(), GenKind::SubBrace), ElemSet::zero());

        let at6 = sample::at6();
        assert_eq!(
            at6.generated(&ElemSet::singleton(1), GenKind::Ideal).as_slice(),
            &[0, 1, 2]
        );
        // generation is idempotent and output passes its own classification
        for kind in [GenKind::SubBrace, GenKind::LeftIdeal, GenKind::StrongLeftIdeal, GenKind::Ideal] {
            let out = at6.generated(&ElemSet::singleton(3), kind);
            assert_eq!(at6.generated(&out, kind), out);
            let flags = at6.classify_subset(&out).unwrap();
            match kind {
                GenKind::SubBrace => assert!(flags.subbrace),
                GenKind::LeftIdeal => assert!(flags.left_ideal),
                GenKind::StrongLeftIdeal => assert!(flags.strong_left_ideal),
                GenKind::Ideal => assert!(flags.ideal),
            }
        }
    }

    #[test]
    fn ideal_lists() {
        let e4 = sample::e4();
        let ideals = e4.ideals();
        assert_eq!(
            ideals,
            &[ElemSet::zero(), ElemSet::from_unsorted(vec![0, 2]), ElemSet::full(4)]
        );

        let at6 = sample::at6();
        assert_eq!(
            at6.ideals(),
            &[ElemSet::zero(), ElemSet::from_unsorted(vec![0, 1, 2]), ElemSet::full(6)]
        );

        let z5 = sample::trivial_cyclic(5);
        assert_eq!(z5.ideals(), &[ElemSet::zero(), ElemSet::full(5)]);
    }

    #[test]
    fn minimal_ideals_and_socle_split() {
        let e4 = sample::e4();
        let data = e4.minimal_ideal_data();
        assert_eq!(data.b_s.as_slice(), &[2]);
        assert_eq!(data.b_u.as_slice(), &[2]);
        assert!(data.b_v.is_empty());
        assert_eq!(data.s.as_slice(), &[0, 2]);
        assert_eq!(data.u.as_slice(), &[0, 2]);
        assert_eq!(data.v.as_slice(), &[0]);

        let z5 = sample::trivial_cyclic(5);
        let data = z5.minimal_ideal_data();
        assert_eq!(data.b_s, ElemSet::from_unsorted((1..5).collect()));
        assert_eq!(data.s, ElemSet::full(5));

        let z2 = sample::trivial_cyclic(2);
        let sum = z2.direct_sum(&z2);
        let data = sum.minimal_ideal_data();
        assert_eq!(data.minimal_ideals.len(), 3);
        assert_eq!(data.s, ElemSet::full(4));
        assert!(data.direct_sum_witness.len() == 2);
    }

    #[test]
    fn loewy_lengths() {
        let e4 = sample::e4();
        let report = e4.loewy_series();
        assert_eq!(
            report.terms,
            vec![ElemSet::zero(), ElemSet::from_unsorted(vec![0, 2]), ElemSet::full(4)]
        );
        assert_eq!(report.class_or_length, Some(2));

        let z5 = sample::trivial_cyclic(5);
        assert_eq!(z5.loewy_series().class_or_length, Some(1));

        let at6 = sample::at6();
        let report = at6.loewy_series();
        assert_eq!(
            report.terms,
            vec![ElemSet::zero(), ElemSet::from_unsorted(vec![0, 1, 2]), ElemSet::full(6)]
        );
        assert_eq!(report.class_or_length, Some(2));
    }

    #[test]
    fn fixators() {
        let e4 = sample::e4();
        let full = ElemSet::full(4);
        let fix = e4.fixator(FixatorVariant::FixL, &full, &full, &ElemSet::zero()).unwrap();
        assert_eq!(fix.as_slice(), &[0, 2]);

        let stab = e4.fixator(FixatorVariant::Stab, &full, &ElemSet::empty(), &ElemSet::from_unsorted(vec![0, 2])).unwrap();
        assert_eq!(stab, full);

        let at6 = sample::at6();
        let a3 = ElemSet::from_unsorted(vec![0, 1, 2]);
        let full6 = ElemSet::full(6);
        let fix = at6.fixator(FixatorVariant::FixL, &full6, &full6, &a3).unwrap();
        assert_eq!(fix, full6);

        assert!(matches!(
            e4.fixator(FixatorVariant::FixL, &full, &full, &ElemSet::from_unsorted(vec![0, 1])),
            Err(IdealError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn strongly_prime_reports() {
        let e4 = sample::e4();
        let report = e4.strongly_prime_and_radicals();
        assert_eq!(report.strongly_prime_ideals, vec![ElemSet::full(4)]);
        assert_eq!(report.radical_intersection, ElemSet::full(4));
        assert_eq!(report.weakly_soluble_radical, ElemSet::full(4));
        assert!(report.radical_equality);

        let at6 = sample::at6();
        let report = at6.strongly_prime_and_radicals();
        assert_eq!(report.strongly_prime_ideals, vec![ElemSet::full(6)]);
        assert!(report.radical_equality);
        assert!(report.n_ideal_flags.iter().all(|(_, flag)| *flag));

        let z2 = sample::trivial_cyclic(2);
        let report = z2.strongly_prime_and_radicals();
        assert_eq!(report.weakly_soluble_radical, ElemSet::full(2));
        assert!(report.radical_equality);
    }

    #[test]
    fn left_ideal_coset_equality() {
        // a∘I = a+I for every left ideal I and every a
        for brace in [sample::e4(), sample::at6(), SkewBrace::trivial(cyclic(6))] {
            for ideal in brace.left_ideals() {
                for a in 0..brace.order() {
                    let mul_coset: ElemSet = ideal.iter().map(|x| brace.mul(a, x)).collect();
                    let add_coset: ElemSet = ideal.iter().map(|x| brace.add(a, x)).collect();
                    assert_eq!(mul_coset, add_coset);
                }
            }
        }
    }

    use crate::brace::SkewBrace;

    #[test]
    fn sum_of_ideals_is_ideal() {
        for brace in [sample::e4(), sample::at6()] {
            let ideals = brace.ideals().to_vec();
            for i in &ideals {
                for j in &ideals {
                    let sum = brace.additive_closure(&i.union(j).iter().collect::<Vec<_>>());
                    assert!(brace.is_ideal(&sum));
                    assert_eq!(sum, brace.generated(&i.union(j), GenKind::Ideal));
                }
            }
        }
    }
}
