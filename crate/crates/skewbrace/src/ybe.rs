//! Set-theoretic Yang–Baxter solutions derived from skew braces, with
//! braid-relation and non-degeneracy verification and text export.
//!
//! The derived map is `r(a,b) = (λ_a(b), λ_a(b)⁻¹ ∘ a ∘ b)`; the second
//! coordinate is forced by preservation of the ∘-product given the first.

use std::fmt::Write as _;

use crate::brace::SkewBrace;

/// A map `r : X×X → X×X` on pairs over `{0,…,n-1}`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionMap {
    pub n: usize,
    /// `r[a*n + b] = (c, d)`
    pub r: Vec<(usize, usize)>,
}

/// Verification flags for one solution; failing checks carry a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    pub bijective: bool,
    pub braid: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    /// first triple violating the braid relation, if any
    pub braid_witness: Option<(usize, usize, usize)>,
}

impl SolutionReport {
    pub fn all_ok(&self) -> bool {
        self.bijective && self.braid && self.left_nondegenerate && self.right_nondegenerate
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionFormat {
    PairsText,
    MatrixText,
}

/// Derives the solution map of a brace.
pub fn solution_from_brace(brace: &SkewBrace) -> SolutionMap {
    let n = brace.order();
    let mut r = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let c = brace.lambda(a, b);
            let d = brace.mul(brace.mul(brace.mul_inv(c), a), b);
            r.push((c, d));
        }
    }
    SolutionMap { n, r }
}

impl SolutionMap {
    pub fn apply(&self, a: usize, b: usize) -> (usize, usize) {
        self.r[a * self.n + b]
    }
}

/// Checks bijectivity, both non-degeneracies, and the braid relation
/// `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` on all n³ triples.
pub fn verify_solution(sol: &SolutionMap) -> SolutionReport {
    let n = sol.n;
    let mut seen = vec![false; n * n];
    let mut bijective = true;
    for &(c, d) in &sol.r {
        let idx = c * n + d;
        if seen[idx] {
            bijective = false;
            break;
        }
        seen[idx] = true;
    }
    let left_nondegenerate = (0..n).all(|a| {
        let mut hit = vec![false; n];
        (0..n).all(|b| {
            let (c, _) = sol.apply(a, b);
            !std::mem::replace(&mut hit[c], true)
        })
    });
    let right_nondegenerate = (0..n).all(|b| {
        let mut hit = vec![false; n];
        (0..n).all(|a| {
            let (_, d) = sol.apply(a, b);
            !std::mem::replace(&mut hit[d], true)
        })
    });
    let r12 = |x: usize, y: usize, z: usize| {
        let (x2, y2) = sol.apply(x, y);
        (x2, y2, z)
    };
    let r23 = |x: usize, y: usize, z: usize| {
        let (y2, z2) = sol.apply(y, z);
        (x, y2, z2)
    };
    let mut braid = true;
    let mut braid_witness = None;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (a1, b1, c1) = r12(x, y, z);
                let (a1, b1, c1) = r23(a1, b1, c1);
                let lhs = r12(a1, b1, c1);
                let (a2, b2, c2) = r23(x, y, z);
                let (a2, b2, c2) = r12(a2, b2, c2);
                let rhs = r23(a2, b2, c2);
                if lhs != rhs {
                    braid = false;
                    braid_witness = Some((x, y, z));
                    break 'outer;
                }
            }
        }
    }
    SolutionReport { bijective, braid, left_nondegenerate, right_nondegenerate, braid_witness }
}

/// Deterministic textual serialization.
///
/// `pairs-text`: one line `a b -> c d` per input pair, row-major over
/// `(a,b)`. `matrix-text`: the map as a permutation of the n² pair
/// indices, one image index per line. Both end with a final newline.
pub fn export_solution(sol: &SolutionMap, format: SolutionFormat) -> String {
    let mut out = String::new();
    match format {
        SolutionFormat::PairsText => {
            for a in 0..sol.n {
                for b in 0..sol.n {
                    let (c, d) = sol.apply(a, b);
                    writeln!(out, "{a} {b} -> {c} {d}").unwrap();
                }
            }
        }
        SolutionFormat::MatrixText => {
            for a in 0..sol.n {
                for b in 0..sol.n {
                    let (c, d) = sol.apply(a, b);
                    writeln!(out, "{}", c * sol.n + d).unwrap();
                }
            }
        }
    }
    out
}
