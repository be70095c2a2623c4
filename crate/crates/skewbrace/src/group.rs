//! Finite group arithmetic on explicit operation tables.
//!
//! Groups live on the carrier `{0, …, n-1}` with the identity pinned to
//! index 0. Everything downstream (braces, ideals, series) relies on the
//! validation done here: closure, identity, associativity and the Latin
//! square property are checked for every constructed table.

use std::collections::HashMap;

use thiserror::Error;

use crate::set::ElemSet;

/// Errors raised while validating an operation table.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("table entry {value} at ({row},{col}) is outside the carrier 0..{order}")]
    NotClosed { row: usize, col: usize, value: usize, order: usize },
    #[error("element 0 is not a two-sided identity (fails at {witness})")]
    NoIdentity { witness: usize },
    #[error("associativity fails at ({a},{b},{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {witness} has no inverse")]
    NoInverse { witness: usize },
    #[error("row or column {witness} is not a permutation of the carrier")]
    NotLatin { witness: usize },
    #[error("subset {0} is not a subgroup")]
    NotASubgroup(ElemSet),
    #[error("element {0} does not normalize the given subgroup")]
    NotNormalizing(usize),
    #[error("subset {0} is not normal")]
    NotNormal(ElemSet),
    #[error("order {0} is empty or too large for table enumeration")]
    OrderTooLarge(usize),
}

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    element_order: Vec<usize>,
    exponent: usize,
}

/// Which classical group series to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupSeriesKind {
    LowerCentral,
    UpperCentral,
    Derived,
}

/// A stabilized chain of subgroups together with the classification it
/// witnesses (nilpotency class or derived length, when applicable).
#[derive(Clone, Debug)]
pub struct GroupSeries {
    pub kind: GroupSeriesKind,
    pub terms: Vec<ElemSet>,
    pub class: Option<usize>,
}

impl FiniteGroup {
    /// Validates an operation table and derives inverses and the exponent.
    pub fn new(table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::OrderTooLarge(0));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotClosed { row: a, col: row.len(), value: 0, order });
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::NotClosed { row: a, col: b, value: v, order });
                }
            }
        }
        for a in 0..order {
            if table[0][a] != a || table[a][0] != a {
                return Err(GroupError::NoIdentity { witness: a });
            }
        }
        // Latin square: every row and column is a permutation.
        for a in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for b in 0..order {
                if seen_row[table[a][b]] || seen_col[table[b][a]] {
                    return Err(GroupError::NotLatin { witness: a });
                }
                seen_row[table[a][b]] = true;
                seen_col[table[b][a]] = true;
            }
        }
        check_associativity(&table)?;
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| table[a][b] == 0) {
                Some(b) => inverse[a] = b,
                None => return Err(GroupError::NoInverse { witness: a }),
            }
        }
        let element_order: Vec<usize> = (0..order)
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != 0 {
                    x = table[x][a];
                    k += 1;
                }
                k
            })
            .collect();
        let exponent = element_order.iter().fold(1, |acc, &k| lcm(acc, k));
        Ok(FiniteGroup { order, table, inverse, element_order, exponent })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `a · b`.
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_order[a]
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// The commutator `[a,b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.op(self.op(a, b), self.op(self.inverse[a], self.inverse[b]))
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.op(self.op(g, x), self.inverse[g])
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Least subgroup containing `seed`, by worklist closure under the
    /// product and inverse.
    pub fn generated_subgroup(&self, seed: &ElemSet) -> ElemSet {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elems = vec![0];
        let mut queue: Vec<usize> = Vec::new();
        for x in seed.iter() {
            if !member[x] {
                member[x] = true;
                elems.push(x);
                queue.push(x);
            }
        }
        while let Some(x) = queue.pop() {
            let mut fresh = Vec::new();
            let ix = self.inverse[x];
            if !member[ix] {
                fresh.push(ix);
            }
            for &y in &elems {
                for p in [self.table[x][y], self.table[y][x]] {
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

    pub fn is_subgroup(&self, s: &ElemSet) -> bool {
        s.contains(0)
            && s.iter().all(|a| s.contains(self.inverse[a]) && s.iter().all(|b| s.contains(self.table[a][b])))
    }

    pub fn is_normal(&self, s: &ElemSet) -> bool {
        (0..self.order).all(|g| s.iter().all(|x| s.contains(self.conjugate(g, x))))
    }

    pub fn normalizer(&self, h: &ElemSet) -> ElemSet {
        (0..self.order)
            .filter(|&g| h.iter().all(|x| h.contains(self.conjugate(g, x))))
            .collect()
    }

    /// The relative centralizer `C_G(X/H) = ∩_{x∈X} {g ∈ N_G(H) : [g,x] ∈ H}`.
    ///
    /// With `H = {0}` and `X = G` this is the center.
    pub fn relative_centralizer(&self, x: &ElemSet, h: &ElemSet) -> Result<ElemSet, GroupError> {
        if !self.is_subgroup(h) {
            return Err(GroupError::NotASubgroup(h.clone()));
        }
        let normalizer = self.normalizer(h);
        if let Some(bad) = x.iter().find(|&e| !normalizer.contains(e)) {
            return Err(GroupError::NotNormalizing(bad));
        }
        Ok(normalizer
            .iter()
            .filter(|&g| x.iter().all(|e| h.contains(self.commutator(g, e))))
            .collect())
    }

    pub fn center(&self) -> ElemSet {
        self.relative_centralizer(&ElemSet::full(self.order), &ElemSet::zero())
            .expect("trivial subgroup is normalized by everything")
    }

    /// Subgroup generated by all commutators `[x,y]` with `x ∈ xs`, `y ∈ ys`.
    pub fn commutator_subgroup(&self, xs: &ElemSet, ys: &ElemSet) -> ElemSet {
        let gens: Vec<usize> = xs
            .iter()
            .flat_map(|x| ys.iter().map(move |y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        self.generated_subgroup(&ElemSet::from_unsorted(gens))
    }

    /// Computes one of the classical series until consecutive terms agree.
    pub fn series(&self, kind: GroupSeriesKind) -> GroupSeries {
        let full = ElemSet::full(self.order);
        let mut terms = Vec::new();
        match kind {
            GroupSeriesKind::LowerCentral => {
                terms.push(full.clone());
                loop {
                    let prev = terms.last().unwrap();
                    let next = self.commutator_subgroup(&full, prev);
                    if &next == prev {
                        break;
                    }
                    terms.push(next);
                }
                let class = terms.last().map(|t| t.len() == 1).unwrap_or(false).then(|| terms.len() - 1);
                GroupSeries { kind, terms, class }
            }
            GroupSeriesKind::Derived => {
                terms.push(full.clone());
                loop {
                    let prev = terms.last().unwrap();
                    let next = self.commutator_subgroup(prev, prev);
                    if &next == prev {
                        break;
                    }
                    terms.push(next);
                }
                let class = (terms.last().unwrap().len() == 1).then(|| terms.len() - 1);
                GroupSeries { kind, terms, class }
            }
            GroupSeriesKind::UpperCentral => {
                terms.push(ElemSet::zero());
                loop {
                    let prev = terms.last().unwrap();
                    let next = self
                        .relative_centralizer(&full, prev)
                        .expect("upper central terms are normal");
                    if &next == prev {
                        break;
                    }
                    terms.push(next);
                }
                if terms.len() == 1 {
                    // stabilized immediately; record the repeat for the report
                    terms.push(terms[0].clone());
                }
                let class = (terms.last().unwrap().len() == self.order).then(|| terms.len() - 1);
                GroupSeries { kind, terms, class }
            }
        }
    }

    /// `(nilpotency class, derived length)`, either of which may be absent.
    pub fn nilpotency_solubility(&self) -> (Option<usize>, Option<usize>) {
        (self.series(GroupSeriesKind::LowerCentral).class, self.series(GroupSeriesKind::Derived).class)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(GroupSeriesKind::LowerCentral).class.is_some()
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        self.series(GroupSeriesKind::LowerCentral).class
    }

    /// Whether the order of `a` is a π-number.
    pub fn is_pi_element(&self, a: usize, pi: &[usize]) -> bool {
        let mut k = self.element_order[a];
        for &p in pi {
            while k % p == 0 {
                k /= p;
            }
        }
        k == 1
    }

    /// Splits the carrier into π-elements, π′-elements, and the largest
    /// normal π′-subgroup `O_π′(G)`.
    pub fn pi_decomposition(&self, pi: &[usize]) -> (ElemSet, ElemSet, ElemSet) {
        let pi_prime: Vec<usize> = primes_dividing(self.order).into_iter().filter(|p| !pi.contains(p)).collect();
        let pi_elems: ElemSet = (0..self.order).filter(|&a| self.is_pi_element(a, pi)).collect();
        let pi_prime_elems: ElemSet = (0..self.order).filter(|&a| self.is_pi_element(a, &pi_prime)).collect();
        // O_π′ is generated by the normal closures of π′-elements that stay π′.
        let mut core_gens: Vec<usize> = Vec::new();
        for a in pi_prime_elems.iter() {
            let class: ElemSet = (0..self.order).map(|g| self.conjugate(g, a)).collect();
            let closure = self.generated_subgroup(&class);
            if closure.iter().all(|x| pi_prime_elems.contains(x)) {
                core_gens.extend(closure.iter());
            }
        }
        let core = self.generated_subgroup(&ElemSet::from_unsorted(core_gens));
        debug_assert!(self.is_normal(&core));
        (pi_elems, pi_prime_elems, core)
    }

    /// All automorphisms, as permutation words in lexicographic order.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let gens = self.generating_sequence();
        let mut found = Vec::new();
        let mut images = Vec::new();
        self.extend_automorphism(&gens, &mut images, &mut found);
        found.sort();
        found
    }

    /// Greedy minimal generating sequence: repeatedly adjoin the least
    /// element outside the closure so far.
    pub fn generating_sequence(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut closed = ElemSet::zero();
        while closed.len() < self.order {
            let next = (0..self.order).find(|&x| !closed.contains(x)).unwrap();
            gens.push(next);
            let mut seed = closed.union(&ElemSet::singleton(next));
            seed = self.generated_subgroup(&seed);
            closed = seed;
        }
        gens
    }

    fn extend_automorphism(&self, gens: &[usize], images: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
        if images.len() == gens.len() {
            if let Some(perm) = self.homomorphism_from_images(gens, images) {
                if is_bijection(&perm) && found.iter().all(|f| f != &perm) {
                    found.push(perm);
                }
            }
            return;
        }
        let g = gens[images.len()];
        for y in 0..self.order {
            // order and centralizer size are isomorphism invariants
            if self.element_order[y] != self.element_order[g] {
                continue;
            }
            if self.centralizer_size(y) != self.centralizer_size(g) {
                continue;
            }
            images.push(y);
            if self.homomorphism_from_images(&gens[..images.len()], images).is_some() {
                self.extend_automorphism(gens, images, found);
            }
            images.pop();
        }
    }

    fn centralizer_size(&self, x: usize) -> usize {
        (0..self.order).filter(|&g| self.table[g][x] == self.table[x][g]).count()
    }

    /// Tries to extend `gens[i] ↦ images[i]` to a homomorphism into `self`;
    /// returns the full map on the generated subgroup when consistent.
    fn homomorphism_from_images(&self, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        self.homomorphism_into(self, gens, images)
    }

    fn homomorphism_into(&self, target: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order];
        map[0] = 0;
        let mut known = vec![0usize];
        let mut queue: Vec<usize> = Vec::new();
        for (&g, &y) in gens.iter().zip(images) {
            if map[g] == usize::MAX {
                map[g] = y;
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
                    (self.table[x][k], target.op(map[x], map[k])),
                    (self.table[k][x], target.op(map[k], map[x])),
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
                    map[p] = q;
                    known.push(p);
                    queue.push(p);
                } else if map[p] != q {
                    return None;
                }
            }
        }
        // the map is total on the subgroup generated by gens; partial maps
        // are returned as-is for consistency checks during backtracking
        Some(map)
    }

    /// Searches for an isomorphism onto `other`; returns the bijection.
    pub fn isomorphism(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order != other.order || self.exponent != other.exponent {
            return None;
        }
        let mut self_orders = self.element_order.clone();
        let mut other_orders = other.element_order.clone();
        self_orders.sort_unstable();
        other_orders.sort_unstable();
        if self_orders != other_orders {
            return None;
        }
        let gens = self.generating_sequence();
        let mut images = Vec::new();
        self.search_isomorphism(other, &gens, &mut images)
    }

    fn search_isomorphism(&self, other: &FiniteGroup, gens: &[usize], images: &mut Vec<usize>) -> Option<Vec<usize>> {
        if images.len() == gens.len() {
            let map = self.homomorphism_into(other, gens, images)?;
            return (map.iter().all(|&v| v != usize::MAX) && is_bijection(&map)).then_some(map);
        }
        let g = gens[images.len()];
        for y in 0..other.order {
            if other.element_order[y] != self.element_order[g] {
                continue;
            }
            if other.centralizer_size(y) != self.centralizer_size(g) {
                continue;
            }
            images.push(y);
            if self.homomorphism_into(other, &gens[..images.len()], images).is_some() {
                if let Some(map) = self.search_isomorphism(other, gens, images) {
                    images.pop();
                    return Some(map);
                }
            }
            images.pop();
        }
        None
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        self.isomorphism(other).is_some()
    }

    /// The holomorph `G ⋊ Aut(G)` with `(a,f)(b,g) = (a·f(b), f∘g)`.
    ///
    /// Pairs are encoded as `a·|Aut| + f`; `decode` inverts the encoding.
    pub fn holomorph(&self) -> (FiniteGroup, Vec<(usize, usize)>) {
        let auts = self.automorphisms();
        let m = auts.len();
        let hol_order = self.order * m;
        let mut aut_index: HashMap<&[usize], usize> = HashMap::new();
        for (i, f) in auts.iter().enumerate() {
            aut_index.insert(f.as_slice(), i);
        }
        let compose_idx = |f: usize, g: usize| -> usize {
            let word: Vec<usize> = (0..self.order).map(|x| auts[f][auts[g][x]]).collect();
            aut_index[word.as_slice()]
        };
        let mut comp = vec![vec![0usize; m]; m];
        for f in 0..m {
            for g in 0..m {
                comp[f][g] = compose_idx(f, g);
            }
        }
        let mut table = vec![vec![0usize; hol_order]; hol_order];
        for a in 0..self.order {
            for f in 0..m {
                for b in 0..self.order {
                    for g in 0..m {
                        let left = a * m + f;
                        let right = b * m + g;
                        table[left][right] = self.table[a][auts[f][b]] * m + comp[f][g];
                    }
                }
            }
        }
        let decode: Vec<(usize, usize)> = (0..hol_order).map(|i| (i / m, i % m)).collect();
        let group = FiniteGroup::new(table).expect("holomorph table is a group");
        (group, decode)
    }

    /// Quotient by a normal subgroup. Cosets are labeled by their least
    /// element, relabeled in increasing order; returns the projection map.
    pub fn quotient(&self, normal: &ElemSet) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        if !self.is_subgroup(normal) {
            return Err(GroupError::NotASubgroup(normal.clone()));
        }
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal(normal.clone()));
        }
        let mut coset_rep = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for a in 0..self.order {
            if coset_rep[a] != usize::MAX {
                continue;
            }
            reps.push(a);
            for x in normal.iter() {
                coset_rep[self.table[a][x]] = a;
            }
        }
        let label: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let k = reps.len();
        let mut table = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                table[i][j] = label[&coset_rep[self.table[reps[i]][reps[j]]]];
            }
        }
        let projection: Vec<usize> = (0..self.order).map(|a| label[&coset_rep[a]]).collect();
        Ok((FiniteGroup::new(table)?, projection))
    }

    /// Restriction of the table to a subgroup, relabeled to `{0, …, k-1}`.
    /// Returns the new group and the list mapping new labels to old ones.
    pub fn restriction(&self, sub: &ElemSet) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        if !self.is_subgroup(sub) {
            return Err(GroupError::NotASubgroup(sub.clone()));
        }
        let elems: Vec<usize> = sub.iter().collect();
        let index: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let k = elems.len();
        let mut table = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                table[i][j] = index[&self.table[elems[i]][elems[j]]];
            }
        }
        Ok((FiniteGroup::new(table)?, elems))
    }

    /// Lexicographically least relabeled table over bijections fixing 0,
    /// serialized as bytes; equal keys characterize isomorphic groups.
    pub fn canonical_key(&self) -> Vec<u8> {
        canonical_table_key(&[&self.table])
    }
}

/// Shared canonical form for one or more parallel tables on the same
/// carrier. Returns the serialized bytes; equal keys characterize
/// simultaneous isomorphism of the table families.
pub(crate) fn canonical_table_key(tables: &[&[Vec<usize>]]) -> Vec<u8> {
    let (key, _) = canonical_table_form(tables);
    key
}

/// Canonical form by breadth-first relabeling: every sequence of
/// generators (each taken outside the coverage of its predecessors)
/// induces a labeling in which elements are numbered in discovery order,
/// expanding label by label through the table products against the
/// generators. The key is the minimum of the relabeled concatenated
/// tables over all such sequences; the minimizing labeling (old → new) is
/// returned with it. Isomorphisms transport generator sequences to
/// generator sequences, so the key is an isomorphism invariant.
pub(crate) fn canonical_table_form(tables: &[&[Vec<usize>]]) -> (Vec<u8>, Vec<usize>) {
    let n = tables[0].len();
    assert!(n <= 256, "canonical form only supported for carriers up to 256");
    let mut best: Option<Vec<u8>> = None;
    let mut best_labels: Vec<usize> = (0..n).collect();
    let mut tuple: Vec<usize> = Vec::new();
    canon_rec(tables, n, &mut tuple, &mut best, &mut best_labels);
    (best.expect("at least one labeling exists"), best_labels)
}

fn bfs_labels(tables: &[&[Vec<usize>]], n: usize, tuple: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut labels = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    labels[0] = 0;
    order.push(0);
    let mut at = 0;
    while at < order.len() {
        let x = order[at];
        at += 1;
        for &g in tuple {
            for t in tables {
                let y = t[x][g];
                if labels[y] == usize::MAX {
                    labels[y] = order.len();
                    order.push(y);
                }
            }
        }
    }
    (labels, order)
}

fn canon_rec(
    tables: &[&[Vec<usize>]],
    n: usize,
    tuple: &mut Vec<usize>,
    best: &mut Option<Vec<u8>>,
    best_labels: &mut Vec<usize>,
) {
    let (labels, order) = bfs_labels(tables, n, tuple);
    if order.len() == n {
        let mut bytes = Vec::with_capacity(1 + tables.len() * n * n);
        bytes.push(n as u8);
        for t in tables {
            for &i in &order {
                for &j in &order {
                    bytes.push(labels[t[i][j]] as u8);
                }
            }
        }
        if best.as_ref().map(|b| bytes < *b).unwrap_or(true) {
            *best = Some(bytes);
            *best_labels = labels;
        }
        return;
    }
    for g in 0..n {
        if labels[g] == usize::MAX {
            tuple.push(g);
            canon_rec(tables, n, tuple, best, best_labels);
            tuple.pop();
        }
    }
}

/// Full cubic check for small tables; for larger ones associativity on a
/// generating set implies it everywhere (the associative elements form a
/// closed submagma containing the generators).
fn check_associativity(table: &[Vec<usize>]) -> Result<(), GroupError> {
    let n = table.len();
    if n <= 32 {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        return Ok(());
    }
    let mut closed = vec![false; n];
    closed[0] = true;
    let mut count = 1;
    let mut gens = Vec::new();
    while count < n {
        let g = (0..n).find(|&x| !closed[x]).unwrap();
        gens.push(g);
        let mut queue = vec![g];
        closed[g] = true;
        count += 1;
        let mut members: Vec<usize> = (0..n).filter(|&x| closed[x]).collect();
        while let Some(x) = queue.pop() {
            let mut fresh = Vec::new();
            for &y in &members {
                for p in [table[x][y], table[y][x]] {
                    if !closed[p] {
                        fresh.push(p);
                    }
                }
            }
            for p in fresh {
                if !closed[p] {
                    closed[p] = true;
                    count += 1;
                    members.push(p);
                    queue.push(p);
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for &c in &gens {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

fn is_bijection(word: &[usize]) -> bool {
    let mut seen = vec![false; word.len()];
    for &v in word {
        if v >= word.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Prime divisors of `n` in increasing order.
pub fn primes_dividing(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

// ---------------------------------------------------------------------
// Table constructors used throughout the tests and the enumeration.
// ---------------------------------------------------------------------

/// The cyclic group Z_n with `a·b = a+b mod n`.
pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::new(table).expect("cyclic table is a group")
}

/// Direct product on the row-major pair encoding `(a1,a2) ↦ a1·n2 + a2`.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> FiniteGroup {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1 * n2;
    let mut table = vec![vec![0usize; n]; n];
    for a1 in 0..n1 {
        for a2 in 0..n2 {
            for b1 in 0..n1 {
                for b2 in 0..n2 {
                    table[a1 * n2 + a2][b1 * n2 + b2] = g1.op(a1, b1) * n2 + g2.op(a2, b2);
                }
            }
        }
    }
    FiniteGroup::new(table).expect("product table is a group")
}

/// The dihedral group of order 2m, elements `r^i s^j ↦ i + m·j`.
pub fn dihedral(m: usize) -> FiniteGroup {
    let n = 2 * m;
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..m {
        for j in 0..2 {
            for k in 0..m {
                for l in 0..2 {
                    let rot = if j == 0 { (i + k) % m } else { (i + m - k % m) % m };
                    table[i + m * j][k + m * l] = rot + m * ((j + l) % 2);
                }
            }
        }
    }
    FiniteGroup::new(table).expect("dihedral table is a group")
}

/// The quaternion group of order 8: `{±1, ±i, ±j, ±k}` with
/// `0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k`.
pub fn quaternion() -> FiniteGroup {
    // sign ⊕ axis representation: element = axis*2 + sign with axis in
    // {1,i,j,k}; hand-rolled table via the usual relations
    let idx = |axis: usize, neg: usize| -> usize { axis * 2 + neg };
    let mut table = vec![vec![0usize; 8]; 8];
    // multiplication of axes: (axis, axis) -> (axis, sign)
    let mul_axis = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, x) => (x, 0),
            (x, 0) => (x, 0),
            (1, 1) | (2, 2) | (3, 3) => (0, 1),
            (1, 2) => (3, 0),
            (2, 1) => (3, 1),
            (2, 3) => (1, 0),
            (3, 2) => (1, 1),
            (3, 1) => (2, 0),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    for a in 0..4 {
        for s in 0..2 {
            for b in 0..4 {
                for t in 0..2 {
                    let (axis, sign) = mul_axis(a, b);
                    table[idx(a, s)][idx(b, t)] = idx(axis, (sign + s + t) % 2);
                }
            }
        }
    }
    FiniteGroup::new(table).expect("quaternion table is a group")
}

/// The symmetric group on `k` letters (small `k`), elements being the
/// permutation words in lexicographic order; the identity word comes first.
pub fn symmetric(k: usize) -> FiniteGroup {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    permutations_rec(&mut current, 0, &mut perms);
    perms.sort();
    group_from_permutations(&perms)
}

/// The alternating group on `k` letters.
pub fn alternating(k: usize) -> FiniteGroup {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    permutations_rec(&mut current, 0, &mut perms);
    perms.retain(|p| permutation_sign(p) == 1);
    perms.sort();
    group_from_permutations(&perms)
}

/// The dicyclic group of order 4m (`m=2` gives the quaternion group):
/// `⟨a,b | a^{2m}=1, b²=a^m, b⁻¹ab=a⁻¹⟩`, elements `a^i b^j ↦ i + 2m·j`.
pub fn dicyclic(m: usize) -> FiniteGroup {
    let half = 2 * m;
    let n = 4 * m;
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..half {
        for j in 0..2 {
            for k in 0..half {
                for l in 0..2 {
                    let (exp, flip) = if j == 0 {
                        (i + k, l)
                    } else if l == 0 {
                        (i + half - k % half, 1)
                    } else {
                        // (a^i b)(a^k b) = a^{i-k} b² = a^{i-k+m}
                        (i + half - k % half + m, 0)
                    };
                    table[i + half * j][k % half + half * l] = exp % half + half * flip;
                }
            }
        }
    }
    FiniteGroup::new(table).expect("dicyclic table is a group")
}

fn permutations_rec(current: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
    if at == current.len() {
        out.push(current.clone());
        return;
    }
    for i in at..current.len() {
        current.swap(at, i);
        permutations_rec(current, at + 1, out);
        current.swap(at, i);
    }
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Builds the abstract group of a closed set of permutations (composition
/// table, indexed by position in the given list).
pub fn group_from_permutations(perms: &[Vec<usize>]) -> FiniteGroup {
    let n = perms.len();
    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut table = vec![vec![0usize; n]; n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let comp: Vec<usize> = (0..p.len()).map(|x| p[q[x]]).collect();
            table[i][j] = *index.get(comp.as_slice()).expect("permutation set must be closed");
        }
    }
    FiniteGroup::new(table).expect("permutation composition is a group")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_is_valid_with_exponent_4() {
        let g = cyclic(4);
        assert_eq!(g.order(), 4);
        assert_eq!(g.exponent(), 4);
        assert!(g.is_abelian());
        assert_eq!(g.inv(1), 3);
    }

    #[test]
    fn s3_is_valid_non_abelian_exponent_6() {
        // independent construction from permutation composition
        let g = symmetric(3);
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        assert!(!g.is_abelian());
        // brute-force associativity over all 216 triples
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
                }
            }
        }
        assert!(g.is_isomorphic(&dihedral(3)));
    }

    #[test]
    fn broken_table_is_rejected() {
        let mut table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        table[1][1] = 1;
        let err = FiniteGroup::new(table).unwrap_err();
        assert!(matches!(err, GroupError::NotLatin { .. } | GroupError::NotAssociative { .. } | GroupError::NoInverse { .. }));
    }

    #[test]
    fn generated_subgroups() {
        let z4 = cyclic(4);
        assert_eq!(z4.generated_subgroup(&ElemSet::singleton(2)).as_slice(), &[0, 2]);
        assert_eq!(z4.generated_subgroup(&ElemSet::empty()).as_slice(), &[0]);
        let s3 = dihedral(3);
        // a transposition and a 3-cycle generate everything
        let gen = ElemSet::from_unsorted(vec![1, 3]);
        assert_eq!(s3.generated_subgroup(&gen).len(), 6);
        // idempotent and monotone
        let sub = s3.generated_subgroup(&ElemSet::singleton(1));
        assert_eq!(s3.generated_subgroup(&sub), sub);
        assert!(sub.is_subset_of(&s3.generated_subgroup(&gen)));
    }

    #[test]
    fn relative_centralizer_matches_brute_force() {
        let s3 = dihedral(3);
        let center = s3.relative_centralizer(&ElemSet::full(6), &ElemSet::zero()).unwrap();
        assert_eq!(center.as_slice(), &[0]);
        // brute force over all 36 pairs
        let naive: ElemSet = (0..6).filter(|&g| (0..6).all(|x| s3.op(g, x) == s3.op(x, g))).collect();
        assert_eq!(center, naive);

        let z4 = cyclic(4);
        assert_eq!(z4.center(), ElemSet::full(4));

        let a3 = ElemSet::from_unsorted(vec![0, 1, 2]);
        let rel = s3.relative_centralizer(&a3, &a3).unwrap();
        assert_eq!(rel, ElemSet::full(6));

        // the result always contains H and is a subgroup
        let h = ElemSet::from_unsorted(vec![0, 1, 2]);
        let rel = s3.relative_centralizer(&ElemSet::full(6), &h).unwrap();
        assert!(h.is_subset_of(&rel));
        assert!(s3.is_subgroup(&rel));
    }

    #[test]
    fn relative_centralizer_errors() {
        let s3 = dihedral(3);
        let not_subgroup = ElemSet::from_unsorted(vec![0, 1, 3]);
        assert!(matches!(
            s3.relative_centralizer(&ElemSet::full(6), &not_subgroup),
            Err(GroupError::NotASubgroup(_))
        ));
        let h = ElemSet::from_unsorted(vec![0, 3]);
        let result = s3.relative_centralizer(&ElemSet::full(6), &h);
        assert!(matches!(result, Err(GroupError::NotNormalizing(_))));
    }

    #[test]
    fn series_and_classification() {
        let z4 = cyclic(4);
        let lc = z4.series(GroupSeriesKind::LowerCentral);
        assert_eq!(lc.terms.len(), 2);
        assert_eq!(lc.class, Some(1));

        let s3 = dihedral(3);
        let derived = s3.series(GroupSeriesKind::Derived);
        assert_eq!(derived.terms, vec![ElemSet::full(6), ElemSet::from_unsorted(vec![0, 1, 2]), ElemSet::zero()]);
        assert_eq!(derived.class, Some(2));
        let uc = s3.series(GroupSeriesKind::UpperCentral);
        assert_eq!(uc.terms, vec![ElemSet::zero(), ElemSet::zero()]);
        assert_eq!(uc.class, None);

        assert_eq!(z4.nilpotency_solubility(), (Some(1), Some(1)));
        assert_eq!(s3.nilpotency_solubility(), (None, Some(2)));
        assert_eq!(dihedral(4).nilpotency_solubility(), (Some(2), Some(2)));
    }

    /// Independent recomputation of nilpotency/solubility by naive
    /// commutator closure, on every group of order covered here.
    #[test]
    fn nilpotency_agrees_with_naive_recomputation() {
        for g in sample_groups() {
            let n = g.order();
            let full = ElemSet::full(n);
            // naive lower central series
            let mut term = full.clone();
            let mut class = None;
            for step in 1..=n + 1 {
                let mut gens = Vec::new();
                for a in 0..n {
                    for b in term.iter() {
                        gens.push(g.commutator(a, b));
                    }
                }
                let next = g.generated_subgroup(&ElemSet::from_unsorted(gens));
                if next.len() == 1 {
                    class = Some(step);
                    break;
                }
                if next == term {
                    break;
                }
                term = next;
            }
            let naive_class = if n == 1 { Some(0) } else { class };
            // naive derived length
            let mut term = full;
            let mut dl = None;
            for step in 1..=n + 1 {
                let mut gens = Vec::new();
                for a in term.iter() {
                    for b in term.iter() {
                        gens.push(g.commutator(a, b));
                    }
                }
                let next = g.generated_subgroup(&ElemSet::from_unsorted(gens));
                if next.len() == 1 {
                    dl = Some(step);
                    break;
                }
                if next == term {
                    break;
                }
                term = next;
            }
            let naive_dl = if n == 1 { Some(0) } else { dl };
            assert_eq!(g.nilpotency_solubility(), (naive_class, naive_dl), "order {n}");
        }
    }

    fn sample_groups() -> Vec<FiniteGroup> {
        vec![
            cyclic(1),
            cyclic(2),
            cyclic(3),
            cyclic(4),
            direct_product(&cyclic(2), &cyclic(2)),
            cyclic(5),
            cyclic(6),
            dihedral(3),
            cyclic(7),
            cyclic(8),
            direct_product(&cyclic(4), &cyclic(2)),
            direct_product(&cyclic(2), &direct_product(&cyclic(2), &cyclic(2))),
            dihedral(4),
            quaternion(),
            cyclic(9),
            direct_product(&cyclic(3), &cyclic(3)),
            cyclic(10),
            dihedral(5),
            cyclic(11),
            cyclic(12),
            direct_product(&cyclic(6), &cyclic(2)),
            dihedral(6),
            alternating(4),
            dicyclic(3),
        ]
    }

    #[test]
    fn sample_groups_are_pairwise_non_isomorphic_within_order() {
        let groups = sample_groups();
        for (i, g) in groups.iter().enumerate() {
            for h in groups.iter().skip(i + 1) {
                if g.order() == h.order() {
                    assert!(!g.is_isomorphic(h));
                }
            }
        }
    }

    #[test]
    fn pi_decomposition_examples() {
        let z6 = cyclic(6);
        let (pi, pi_prime, core) = z6.pi_decomposition(&[2]);
        assert_eq!(pi.as_slice(), &[0, 3]);
        assert_eq!(pi_prime.as_slice(), &[0, 2, 4]);
        assert_eq!(core.as_slice(), &[0, 2, 4]);

        let s3 = dihedral(3);
        let (pi, _, core) = s3.pi_decomposition(&[3]);
        assert_eq!(pi.as_slice(), &[0, 1, 2]);
        assert_eq!(core.as_slice(), &[0]);

        let d4 = dihedral(4);
        let (pi, _, core) = d4.pi_decomposition(&[2]);
        assert_eq!(pi, ElemSet::full(8));
        assert_eq!(core.as_slice(), &[0]);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(cyclic(4).automorphisms().len(), 2);
        assert_eq!(direct_product(&cyclic(2), &cyclic(2)).automorphisms().len(), 6);
        assert_eq!(dihedral(3).automorphisms().len(), 6);
    }

    #[test]
    fn holomorph_examples() {
        let (hol_z3, decode) = cyclic(3).holomorph();
        assert_eq!(hol_z3.order(), 6);
        assert!(hol_z3.is_isomorphic(&dihedral(3)));
        assert_eq!(decode[0], (0, 0));

        let (hol_z2, _) = cyclic(2).holomorph();
        assert_eq!(hol_z2.order(), 2);

        let v4 = direct_product(&cyclic(2), &cyclic(2));
        let (hol_v4, decode) = v4.holomorph();
        assert_eq!(hol_v4.order(), 4 * 6);
        assert!(hol_v4.is_isomorphic(&symmetric(4)));
        // the copy {(a, id)} is a regular subgroup: one element above
        // each carrier point
        let copy: ElemSet = (0..4).map(|a| a * 6).collect();
        assert!(hol_v4.is_subgroup(&copy));
        let carriers: ElemSet = copy.iter().map(|i| decode[i].0).collect();
        assert_eq!(carriers, ElemSet::full(4));
        assert!(copy.iter().all(|i| decode[i].1 == 0));
    }

    #[test]
    fn quotient_group() {
        let s3 = dihedral(3);
        let a3 = ElemSet::from_unsorted(vec![0, 1, 2]);
        let (q, proj) = s3.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj[0], 0);
        assert_eq!(proj[3], 1);
        assert!(s3.quotient(&ElemSet::from_unsorted(vec![0, 3])).is_err());
    }

    #[test]
    fn canonical_keys_detect_isomorphism() {
        let a = cyclic(4);
        // relabel Z4 by the negation automorphism: 0,3,2,1
        let perm = [0usize, 3, 2, 1];
        let table: Vec<Vec<usize>> = (0..4)
            .map(|i| (0..4).map(|j| perm.iter().position(|&p| p == a.op(perm[i], perm[j])).unwrap()).collect())
            .collect();
        let b = FiniteGroup::new(table).unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        let v4 = direct_product(&cyclic(2), &cyclic(2));
        assert_ne!(a.canonical_key(), v4.canonical_key());
    }

    #[test]
    fn primes() {
        assert_eq!(primes_dividing(12), vec![2, 3]);
        assert_eq!(primes_dividing(1), Vec::<usize>::new());
        assert_eq!(primes_dividing(7), vec![7]);
    }
}
