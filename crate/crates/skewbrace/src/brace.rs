//! The skew brace kernel: axiom validation, the λ and ★ operations,
//! constructors, distinguished subsets, quotients, direct sums, and
//! isomorphism with canonical keys.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{canonical_table_form, canonical_table_key, FiniteGroup, GroupError};
use crate::set::ElemSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraceError {
    #[error("additive group has order {add} but multiplicative group has order {mul}")]
    OrderMismatch { add: usize, mul: usize },
    #[error("skew distributivity fails at a={a}, b={b}, c={c}")]
    DistributivityFailure { a: usize, b: usize, c: usize },
    #[error("derived identity `{identity}` fails at a={a}, b={b}")]
    IdentityFailure { identity: &'static str, a: usize, b: usize },
    #[error("subset {subset} is not an ideal: {reason}")]
    NotAnIdeal { subset: ElemSet, reason: IdealDefect },
    #[error("subset {0} is not a sub-brace")]
    NotASubBrace(ElemSet),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Which ideal condition a subset failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealDefect {
    NotAdditiveSubgroup,
    NotAdditiveNormal,
    NotLambdaInvariant,
    NotMultiplicativeNormal,
}

impl std::fmt::Display for IdealDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            IdealDefect::NotAdditiveSubgroup => "not an additive subgroup",
            IdealDefect::NotAdditiveNormal => "not additive-normal",
            IdealDefect::NotLambdaInvariant => "not λ-invariant",
            IdealDefect::NotMultiplicativeNormal => "not mul-normal",
        };
        f.write_str(s)
    }
}

/// Structural flags of a skew brace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceFlags {
    /// addition equals multiplication
    pub trivial: bool,
    /// `a∘b = b+a` for all pairs
    pub almost_trivial: bool,
    pub type_abelian: bool,
    pub type_nilpotent: bool,
    pub type_class: Option<usize>,
    pub mul_abelian: bool,
    pub mul_nilpotent: bool,
    pub mul_class: Option<usize>,
}

/// The distinguished subsets of §-level structure theory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreSubsets {
    pub z_add: ElemSet,
    pub z_mul: ElemSet,
    pub ker_lambda: ElemSet,
    pub socle: ElemSet,
    pub annihilator: ElemSet,
}

/// Two group structures on one carrier satisfying the skew distributive
/// law, with the λ and ★ tables precomputed.
#[derive(Debug)]
pub struct SkewBrace {
    add: FiniteGroup,
    mul: FiniteGroup,
    lambda: Vec<Vec<usize>>,
    lambda_inv: Vec<Vec<usize>>,
    star: Vec<Vec<usize>>,
    key: OnceLock<Vec<u8>>,
    pub(crate) lattice: crate::ideal::Lattice,
}

impl Clone for SkewBrace {
    fn clone(&self) -> Self {
        SkewBrace {
            add: self.add.clone(),
            mul: self.mul.clone(),
            lambda: self.lambda.clone(),
            lambda_inv: self.lambda_inv.clone(),
            star: self.star.clone(),
            key: self.key.clone(),
            lattice: self.lattice.clone(),
        }
    }
}

impl PartialEq for SkewBrace {
    fn eq(&self, other: &Self) -> bool {
        self.add == other.add && self.mul == other.mul
    }
}
impl Eq for SkewBrace {}

impl SkewBrace {
    /// Validates the pair of groups against the skew distributive law and
    /// derives the λ and ★ tables; every structural identity is verified.
    pub fn new(add: FiniteGroup, mul: FiniteGroup) -> Result<SkewBrace, BraceError> {
        let n = add.order();
        if mul.order() != n {
            return Err(BraceError::OrderMismatch { add: n, mul: mul.order() });
        }
        // a∘(b+c) = a∘b − a + a∘c
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = mul.op(a, add.op(b, c));
                    let rhs = add.op(add.op(mul.op(a, b), add.inv(a)), mul.op(a, c));
                    if lhs != rhs {
                        return Err(BraceError::DistributivityFailure { a, b, c });
                    }
                }
            }
        }
        let mut lambda = vec![vec![0usize; n]; n];
        let mut lambda_inv = vec![vec![0usize; n]; n];
        let mut star = vec![vec![0usize; n]; n];
        for b in 0..n {
            for x in 0..n {
                lambda[b][x] = add.op(add.inv(b), mul.op(b, x));
            }
            for x in 0..n {
                lambda_inv[b][lambda[b][x]] = x;
            }
        }
        for a in 0..n {
            for b in 0..n {
                star[a][b] = add.op(lambda[a][b], add.inv(b));
            }
        }
        let brace = SkewBrace {
            add,
            mul,
            lambda,
            lambda_inv,
            star,
            key: OnceLock::new(),
            lattice: Default::default(),
        };
        brace.verify_axioms()?;
        Ok(brace)
    }

    /// Re-checks every defining identity: distributivity, λ additivity and
    /// bijectivity, the λ homomorphism law, the three basic relations and
    /// the three ★ identities.
    pub fn verify_axioms(&self) -> Result<(), BraceError> {
        let n = self.order();
        let (add, mul) = (&self.add, &self.mul);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = mul.op(a, add.op(b, c));
                    let rhs = add.op(add.op(mul.op(a, b), add.inv(a)), mul.op(a, c));
                    if lhs != rhs {
                        return Err(BraceError::DistributivityFailure { a, b, c });
                    }
                }
            }
        }
        for b in 0..n {
            // λ_b is an additive automorphism
            let mut seen = vec![false; n];
            for x in 0..n {
                if seen[self.lambda[b][x]] {
                    return Err(BraceError::IdentityFailure { identity: "lambda bijective", a: b, b: x });
                }
                seen[self.lambda[b][x]] = true;
                for y in 0..n {
                    if self.lambda[b][add.op(x, y)] != add.op(self.lambda[b][x], self.lambda[b][y]) {
                        return Err(BraceError::IdentityFailure { identity: "lambda additive", a: b, b: x });
                    }
                }
            }
        }
        for b in 0..n {
            for c in 0..n {
                let prod = mul.op(b, c);
                for x in 0..n {
                    if self.lambda[prod][x] != self.lambda[b][self.lambda[c][x]] {
                        return Err(BraceError::IdentityFailure { identity: "lambda homomorphism", a: b, b: c });
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                // a+b = a∘λ_a⁻¹(b)
                if add.op(a, b) != mul.op(a, self.lambda_inv[a][b]) {
                    return Err(BraceError::IdentityFailure { identity: "a+b = a∘λ_a⁻¹(b)", a, b });
                }
                // a∘b = a+λ_a(b)
                if mul.op(a, b) != add.op(a, self.lambda[a][b]) {
                    return Err(BraceError::IdentityFailure { identity: "a∘b = a+λ_a(b)", a, b });
                }
            }
            // −a = λ_a(a⁻¹)
            if add.inv(a) != self.lambda[a][mul.inv(a)] {
                return Err(BraceError::IdentityFailure { identity: "−a = λ_a(a⁻¹)", a, b: 0 });
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    // a★(b+c) = a★b + b + a★c − b
                    let lhs = self.star[a][add.op(b, c)];
                    let rhs = add.op(add.op(add.op(self.star[a][b], b), self.star[a][c]), add.inv(b));
                    if lhs != rhs {
                        return Err(BraceError::IdentityFailure { identity: "star additive expansion", a, b });
                    }
                    // (a+b)★c = a★(λ_a⁻¹(b)★c) + λ_a⁻¹(b)★c + a★c
                    let lb = self.lambda_inv[a][b];
                    let lhs = self.star[add.op(a, b)][c];
                    let inner = self.star[lb][c];
                    let rhs = add.op(add.op(self.star[a][inner], inner), self.star[a][c]);
                    if lhs != rhs {
                        return Err(BraceError::IdentityFailure { identity: "star sum expansion", a, b });
                    }
                    // (a∘b)★c = a★(b★c) + b★c + a★c
                    let lhs = self.star[mul.op(a, b)][c];
                    let bc = self.star[b][c];
                    let rhs = add.op(add.op(self.star[a][bc], bc), self.star[a][c]);
                    if lhs != rhs {
                        return Err(BraceError::IdentityFailure { identity: "star product expansion", a, b });
                    }
                }
            }
        }
        Ok(())
    }

    /// The trivial brace on `g`: multiplication equals addition.
    pub fn trivial(g: FiniteGroup) -> SkewBrace {
        SkewBrace::new(g.clone(), g).expect("a group is a trivial skew brace")
    }

    /// The almost trivial brace on `g`: `a∘b = b+a`.
    pub fn almost_trivial(g: FiniteGroup) -> SkewBrace {
        let n = g.order();
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| g.op(b, a)).collect()).collect();
        let mul = FiniteGroup::new(table).expect("opposite of a group is a group");
        SkewBrace::new(g, mul).expect("opposite multiplication satisfies skew distributivity")
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add_group(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn mul_group(&self) -> &FiniteGroup {
        &self.mul
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    pub fn mul_inv(&self, a: usize) -> usize {
        self.mul.inv(a)
    }

    /// `λ_b(x) = −b + b∘x`.
    pub fn lambda(&self, b: usize, x: usize) -> usize {
        self.lambda[b][x]
    }

    pub fn lambda_inv(&self, b: usize, x: usize) -> usize {
        self.lambda_inv[b][x]
    }

    /// `a★b = λ_a(b) − b`.
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.star[a][b]
    }

    pub fn flags(&self) -> BraceFlags {
        let n = self.order();
        let trivial = self.add.table() == self.mul.table();
        let almost_trivial =
            (0..n).all(|a| (0..n).all(|b| self.mul.op(a, b) == self.add.op(b, a)));
        let type_class = self.add.nilpotency_class();
        let mul_class = self.mul.nilpotency_class();
        BraceFlags {
            trivial,
            almost_trivial,
            type_abelian: self.add.is_abelian(),
            type_nilpotent: type_class.is_some(),
            type_class,
            mul_abelian: self.mul.is_abelian(),
            mul_nilpotent: mul_class.is_some(),
            mul_class,
        }
    }

    /// Whether the restriction of both operations to `s` is a sub-brace
    /// (a subset closed under both products; finiteness gives inverses).
    pub fn is_sub_brace(&self, s: &ElemSet) -> bool {
        s.contains(0)
            && s.iter().all(|a| {
                s.iter().all(|b| s.contains(self.add.op(a, b)) && s.contains(self.mul.op(a, b)))
            })
    }

    /// Whether `s` is a trivial sub-brace: both operations agree on it.
    pub fn is_trivial_sub_brace(&self, s: &ElemSet) -> bool {
        self.is_sub_brace(s)
            && s.iter().all(|a| s.iter().all(|b| self.add.op(a, b) == self.mul.op(a, b)))
    }

    pub fn ker_lambda(&self) -> ElemSet {
        let n = self.order();
        (0..n).filter(|&b| (0..n).all(|x| self.lambda[b][x] == x)).collect()
    }

    pub fn socle(&self) -> ElemSet {
        self.ker_lambda().intersection(&self.add.center())
    }

    pub fn annihilator(&self) -> ElemSet {
        self.socle().intersection(&self.mul.center())
    }

    /// The additive/multiplicative centers, `ker λ`, socle and annihilator,
    /// with the kernel verified to be a trivial sub-brace.
    pub fn core_subsets(&self) -> CoreSubsets {
        let ker_lambda = self.ker_lambda();
        assert!(
            self.is_trivial_sub_brace(&ker_lambda),
            "ker λ must be a trivial sub-brace"
        );
        let z_add = self.add.center();
        let z_mul = self.mul.center();
        let socle = ker_lambda.intersection(&z_add);
        let annihilator = socle.intersection(&z_mul);
        CoreSubsets { z_add, z_mul, ker_lambda, socle, annihilator }
    }

    /// Quotient by an ideal, on least-coset-element representatives.
    /// Returns the quotient brace and the projection map.
    pub fn quotient(&self, ideal: &ElemSet) -> Result<(SkewBrace, Vec<usize>), BraceError> {
        if let Some(defect) = self.ideal_defect(ideal) {
            return Err(BraceError::NotAnIdeal { subset: ideal.clone(), reason: defect });
        }
        let n = self.order();
        let mut coset_rep = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if coset_rep[a] != usize::MAX {
                continue;
            }
            reps.push(a);
            for x in ideal.iter() {
                coset_rep[self.add.op(a, x)] = a;
            }
        }
        let label: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let k = reps.len();
        let mut add_table = vec![vec![0usize; k]; k];
        let mut mul_table = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                add_table[i][j] = label[&coset_rep[self.add.op(reps[i], reps[j])]];
                mul_table[i][j] = label[&coset_rep[self.mul.op(reps[i], reps[j])]];
            }
        }
        let projection: Vec<usize> = (0..n).map(|a| label[&coset_rep[a]]).collect();
        let q = SkewBrace::new(FiniteGroup::new(add_table)?, FiniteGroup::new(mul_table)?)?;
        Ok((q, projection))
    }

    /// First ideal condition violated by `s`, if any. Ideals are additive
    /// normal λ-invariant subgroups that are multiplicatively normal.
    pub fn ideal_defect(&self, s: &ElemSet) -> Option<IdealDefect> {
        let n = self.order();
        if !self.add.is_subgroup(s) {
            return Some(IdealDefect::NotAdditiveSubgroup);
        }
        if !self.add.is_normal(s) {
            return Some(IdealDefect::NotAdditiveNormal);
        }
        if !(0..n).all(|b| s.iter().all(|x| s.contains(self.lambda[b][x]))) {
            return Some(IdealDefect::NotLambdaInvariant);
        }
        if !self.mul.is_normal(s) {
            return Some(IdealDefect::NotMultiplicativeNormal);
        }
        None
    }

    /// Restriction to a sub-brace, relabeled to `{0, …, k-1}`; returns the
    /// restricted brace and the list mapping new labels to old elements.
    pub fn restriction(&self, s: &ElemSet) -> Result<(SkewBrace, Vec<usize>), BraceError> {
        if !self.is_sub_brace(s) {
            return Err(BraceError::NotASubBrace(s.clone()));
        }
        let (add, elems) = self.add.restriction(s)?;
        let index: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let k = elems.len();
        let mut mul_table = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                mul_table[i][j] = index[&self.mul.op(elems[i], elems[j])];
            }
        }
        let brace = SkewBrace::new(add, FiniteGroup::new(mul_table)?)?;
        Ok((brace, elems))
    }

    /// Componentwise operations on the row-major product carrier.
    pub fn direct_sum(&self, other: &SkewBrace) -> SkewBrace {
        let add = crate::group::direct_product(&self.add, &other.add);
        let mul = crate::group::direct_product(&self.mul, &other.mul);
        SkewBrace::new(add, mul).expect("componentwise operations form a skew brace")
    }

    /// A carrier bijection fixing 0 preserving both tables, if one exists.
    pub fn isomorphism(&self, other: &SkewBrace) -> Option<Vec<usize>> {
        if self.order() != other.order() {
            return None;
        }
        let n = self.order();
        if self.signature_multiset() != other.signature_multiset() {
            return None;
        }
        let gens = self.brace_generating_sequence();
        let mut images = Vec::new();
        self.search_brace_iso(other, &gens, &mut images, n)
    }

    pub fn is_isomorphic(&self, other: &SkewBrace) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Per-element invariant `(additive order, multiplicative order,
    /// λ-orbit size)` used to prune isomorphism searches.
    fn signature(&self, x: usize) -> (usize, usize, usize) {
        let n = self.order();
        let orbit: ElemSet = (0..n).map(|b| self.lambda[b][x]).collect();
        (self.add.element_order(x), self.mul.element_order(x), orbit.len())
    }

    fn signature_multiset(&self) -> Vec<(usize, usize, usize)> {
        let mut sigs: Vec<_> = (0..self.order()).map(|x| self.signature(x)).collect();
        sigs.sort_unstable();
        sigs
    }

    /// Greedy generating sequence under closure by both operations.
    fn brace_generating_sequence(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut closed = ElemSet::zero();
        while closed.len() < self.order() {
            let next = (0..self.order()).find(|&x| !closed.contains(x)).unwrap();
            gens.push(next);
            closed = self.sub_brace_closure(&closed.union(&ElemSet::singleton(next)));
        }
        gens
    }

    /// Least sub-brace containing `seed`.
    pub fn sub_brace_closure(&self, seed: &ElemSet) -> ElemSet {
        let n = self.order();
        let mut member = vec![false; n];
        member[0] = true;
        let mut elems = vec![0usize];
        let mut queue = Vec::new();
        for x in seed.iter() {
            if !member[x] {
                member[x] = true;
                elems.push(x);
                queue.push(x);
            }
        }
        while let Some(x) = queue.pop() {
            let mut fresh = Vec::new();
            for &y in &elems {
                for p in [
                    self.add.op(x, y),
                    self.add.op(y, x),
                    self.mul.op(x, y),
                    self.mul.op(y, x),
                ] {
                    if !member[p] {
                        fresh.push(p);
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

    fn search_brace_iso(
        &self,
        other: &SkewBrace,
        gens: &[usize],
        images: &mut Vec<usize>,
        n: usize,
    ) -> Option<Vec<usize>> {
        if images.len() == gens.len() {
            let map = self.extend_brace_map(other, gens, images)?;
            return (map.iter().all(|&v| v != usize::MAX)).then_some(map);
        }
        let g = gens[images.len()];
        for y in 0..n {
            if other.signature(y) != self.signature(g) {
                continue;
            }
            images.push(y);
            if self.extend_brace_map(other, &gens[..images.len()], images).is_some() {
                if let Some(map) = self.search_brace_iso(other, gens, images, n) {
                    images.pop();
                    return Some(map);
                }
            }
            images.pop();
        }
        None
    }

    /// Extends a partial generator assignment to the sub-brace it
    /// generates, requiring both tables to be preserved.
    fn extend_brace_map(&self, other: &SkewBrace, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        let mut hit = vec![false; n];
        map[0] = 0;
        hit[0] = true;
        let mut known = vec![0usize];
        let mut queue = Vec::new();
        for (&g, &y) in gens.iter().zip(images) {
            if map[g] == usize::MAX {
                if hit[y] {
                    return None;
                }
                map[g] = y;
                hit[y] = true;
                known.push(g);
                queue.push(g);
            } else if map[g] != y {
                return None;
            }
        }
        while let Some(x) = queue.pop() {
            let mut fresh = Vec::new();
            for &k in &known {
                for (p, q) in [
                    (self.add.op(x, k), other.add.op(map[x], map[k])),
                    (self.add.op(k, x), other.add.op(map[k], map[x])),
                    (self.mul.op(x, k), other.mul.op(map[x], map[k])),
                    (self.mul.op(k, x), other.mul.op(map[k], map[x])),
                ] {
                    if map[p] == usize::MAX {
                        fresh.push((p, q));
                    } else if map[p] != q {
                        return None;
                    }
                }
            }
            for (p, q) in fresh {
                if map[p] == usize::MAX {
                    if hit[q] {
                        return None;
                    }
                    map[p] = q;
                    hit[q] = true;
                    known.push(p);
                    queue.push(p);
                } else if map[p] != q {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// Lexicographically least relabeling of the pair of tables over all
    /// bijections fixing 0; equal keys characterize isomorphic braces.
    pub fn canonical_key(&self) -> &[u8] {
        self.key.get_or_init(|| canonical_table_key(&[self.add.table(), self.mul.table()]))
    }

    /// The canonical key together with a relabeling (old → new) realizing it.
    pub fn canonical_form(&self) -> (Vec<u8>, Vec<usize>) {
        canonical_table_form(&[self.add.table(), self.mul.table()])
    }

    /// Relabels the brace along a bijection `sigma` (old → new) fixing 0.
    pub fn relabel(&self, sigma: &[usize]) -> SkewBrace {
        let n = self.order();
        assert_eq!(sigma[0], 0);
        let mut pi = vec![0usize; n];
        for (old, &new) in sigma.iter().enumerate() {
            pi[new] = old;
        }
        let add: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| sigma[self.add.op(pi[i], pi[j])]).collect()).collect();
        let mul: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| sigma[self.mul.op(pi[i], pi[j])]).collect()).collect();
        SkewBrace::new(
            FiniteGroup::new(add).expect("relabeled table is a group"),
            FiniteGroup::new(mul).expect("relabeled table is a group"),
        )
        .expect("relabeling preserves the axioms")
    }
}
