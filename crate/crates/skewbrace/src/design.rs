//! The design group `G(B) = (B,+) ⋊_λ (B,∘)` with the product
//! `(a,b)(c,d) = (a + λ_b(c), b∘d)`, plus the brace ⇄ group transfer
//! checks and π-nilpotency of finite groups.

use crate::brace::SkewBrace;
use crate::group::{primes_dividing, FiniteGroup};
use crate::set::ElemSet;

/// The design group of a brace, with its pair encoding and the canonical
/// copies of the additive and multiplicative parts.
#[derive(Clone, Debug)]
pub struct DesignGroup {
    pub group: FiniteGroup,
    n: usize,
    /// `{(a, 0)}`
    pub add_part: ElemSet,
    /// `{(0, b)}`
    pub mul_part: ElemSet,
}

impl DesignGroup {
    /// Row-major pair encoding with `(0,0) ↦ 0`.
    pub fn encode(&self, a: usize, b: usize) -> usize {
        a * self.n + b
    }

    pub fn decode(&self, index: usize) -> (usize, usize) {
        (index / self.n, index % self.n)
    }
}

/// One failed identity with its witness elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    pub condition: &'static str,
    pub elements: Vec<usize>,
    pub sets: Vec<ElemSet>,
}

/// Outcome of [`verify_design_identities`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignIdentityReport {
    pub failures: Vec<IdentityFailure>,
}

impl DesignIdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Builds and validates the design group of order `n²`.
pub fn design_group(brace: &SkewBrace) -> DesignGroup {
    let n = brace.order();
    let size = n * n;
    let mut table = vec![vec![0usize; size]; size];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let first = brace.add(a, brace.lambda(b, c));
                    let second = brace.mul(b, d);
                    table[a * n + b][c * n + d] = first * n + second;
                }
            }
        }
    }
    let group = FiniteGroup::new(table).expect("the semidirect product table is a group");
    let add_part: ElemSet = (0..n).map(|a| a * n).collect();
    let mul_part: ElemSet = (0..n).collect();
    DesignGroup { group, n, add_part, mul_part }
}

/// The subgroup `G(S) = {(a,b) : a,b ∈ S}` for a sub-brace `S`.
pub fn design_subgroup(dg: &DesignGroup, s: &ElemSet) -> ElemSet {
    s.iter().flat_map(|a| s.iter().map(move |b| dg.encode(a, b))).collect()
}

/// Checks the commutator identity `[(0,a),(b,0)] = (a★b, 0)`, normality of
/// `G(I)` for every ideal `I`, and `G(I)·G(J) = G(I+J)` for every ideal
/// `I` and sub-brace `J` (with the coset identities `I+J = J+I = I∘J`).
pub fn verify_design_identities(brace: &SkewBrace) -> DesignIdentityReport {
    let n = brace.order();
    let dg = design_group(brace);
    let g = &dg.group;
    let mut failures = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let left = dg.encode(0, a);
            let right = dg.encode(b, 0);
            let comm = g.commutator(left, right);
            if comm != dg.encode(brace.star(a, b), 0) {
                failures.push(IdentityFailure {
                    condition: "[(0,a),(b,0)] = (a★b,0)",
                    elements: vec![a, b],
                    sets: vec![],
                });
            }
        }
    }
    for ideal in brace.ideals() {
        let gi = design_subgroup(&dg, ideal);
        if !g.is_subgroup(&gi) || !g.is_normal(&gi) {
            failures.push(IdentityFailure {
                condition: "G(I) normal in G(B)",
                elements: vec![],
                sets: vec![ideal.clone()],
            });
            continue;
        }
        for sub in brace.sub_braces() {
            let gj = design_subgroup(&dg, sub);
            let product: ElemSet =
                gi.iter().flat_map(|x| gj.iter().map(move |y| g.op(x, y))).collect();
            let sum = brace.sum_set(ideal, sub);
            if product != design_subgroup(&dg, &sum) {
                failures.push(IdentityFailure {
                    condition: "G(I)G(J) = G(I+J)",
                    elements: vec![],
                    sets: vec![ideal.clone(), sub.clone()],
                });
            }
            let ji = brace.sum_set(sub, ideal);
            let mul_ij: ElemSet = ideal.iter().flat_map(|x| sub.iter().map(move |y| brace.mul(x, y))).collect();
            let mul_ji: ElemSet = sub.iter().flat_map(|x| ideal.iter().map(move |y| brace.mul(x, y))).collect();
            if sum != ji || sum != mul_ij || sum != mul_ji {
                failures.push(IdentityFailure {
                    condition: "I+J = J+I = I∘J = J∘I",
                    elements: vec![],
                    sets: vec![ideal.clone(), sub.clone()],
                });
            }
        }
    }
    DesignIdentityReport { failures }
}

/// Least `c` such that `G/O_π′(G)` is a nilpotent π-group of class `c`,
/// when it is one.
pub fn group_pi_nilpotent(g: &FiniteGroup, pi: &[usize]) -> Option<usize> {
    let (_, _, core) = g.pi_decomposition(pi);
    let (quotient, _) = g.quotient(&core).expect("the π′-core is normal");
    let quotient_is_pi = primes_dividing(quotient.order()).iter().all(|p| pi.contains(p));
    if !quotient_is_pi {
        return None;
    }
    quotient.nilpotency_class()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral};
    use crate::sample;

    #[test]
    fn design_group_orders_and_classes() {
        let t2 = sample::trivial_cyclic(2);
        let dg = design_group(&t2);
        assert_eq!(dg.group.order(), 4);
        assert!(dg.group.is_isomorphic(&crate::group::direct_product(&cyclic(2), &cyclic(2))));

        let e4 = sample::e4();
        let dg = design_group(&e4);
        assert_eq!(dg.group.order(), 16);
        assert_eq!(dg.group.nilpotency_class(), Some(2));

        let at6 = sample::at6();
        let dg = design_group(&at6);
        assert_eq!(dg.group.order(), 36);
        assert_eq!(dg.group.nilpotency_class(), None);
    }

    #[test]
    fn add_part_is_regular_and_parts_are_subgroups() {
        let e4 = sample::e4();
        let dg = design_group(&e4);
        assert!(dg.group.is_subgroup(&dg.add_part));
        assert!(dg.group.is_subgroup(&dg.mul_part));
        assert_eq!(dg.decode(dg.encode(3, 2)), (3, 2));
    }

    #[test]
    fn identities_hold_on_samples() {
        for brace in [
            sample::e4(),
            sample::at6(),
            sample::trivial_cyclic(6),
            crate::brace::SkewBrace::trivial(dihedral(4)),
        ] {
            let report = verify_design_identities(&brace);
            assert!(report.passed(), "failures: {:?}", report.failures);
        }
    }

    #[test]
    fn pi_nilpotency_of_groups() {
        let s3 = dihedral(3);
        assert_eq!(group_pi_nilpotent(&s3, &[3]), None);
        assert_eq!(group_pi_nilpotent(&s3, &[2]), Some(1));
        let d4 = dihedral(4);
        assert_eq!(group_pi_nilpotent(&d4, &[2]), Some(2));
        assert_eq!(group_pi_nilpotent(&cyclic(6), &[2, 3]), Some(1));
    }
}
