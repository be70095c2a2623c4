//! Small worked skew braces used in documentation and tests.

use crate::brace::SkewBrace;
use crate::group::{cyclic, dihedral, FiniteGroup};

/// The brace on Z4 with `a∘b = a + b + 2ab (mod 4)`; its multiplicative
/// group is the Klein four-group.
pub fn e4() -> SkewBrace {
    let add = cyclic(4);
    let table: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b + 2 * a * b) % 4).collect()).collect();
    let mul = FiniteGroup::new(table).expect("a+b+2ab mod 4 is a group law");
    SkewBrace::new(add, mul).expect("E4 satisfies the skew brace axioms")
}

/// The almost trivial brace on the symmetric group of degree 3
/// (as the dihedral table of order 6).
pub fn at6() -> SkewBrace {
    SkewBrace::almost_trivial(dihedral(3))
}

/// The trivial brace on Z_n.
pub fn trivial_cyclic(n: usize) -> SkewBrace {
    SkewBrace::trivial(cyclic(n))
}
