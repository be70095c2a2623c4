//! Per-brace classification records with machine-readable (JSON) and
//! human-readable renderings. The JSON form round-trips.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::brace::{BraceFlags, SkewBrace};
use crate::design::design_group;
use crate::group::primes_dividing;
use crate::ideal::STAR_PRODUCT_DEPTH;
use crate::set::ElemSet;
use crate::ybe::{solution_from_brace, verify_solution};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub abelian: bool,
    pub nilpotency_class: Option<usize>,
    pub derived_length: Option<usize>,
    pub exponent: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NilpotencyReport {
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub strongly_left: Option<usize>,
    pub annihilator: Option<usize>,
    pub socle: Option<usize>,
    pub left_nil: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolubilityReport {
    pub weak: Option<usize>,
    pub left: Option<usize>,
    pub strong_left: Option<usize>,
    pub soluble: Option<usize>,
    pub soluble_witness: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealCounts {
    pub sub_braces: usize,
    pub left_ideals: usize,
    pub strong_left_ideals: usize,
    pub ideals: usize,
    pub minimal_ideals: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PiReport {
    pub hall_pi: Vec<usize>,
    pub left_class: Option<usize>,
    pub right_class: Option<usize>,
    pub pi_prime_is_ideal: bool,
    pub pi_separating: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadicalReport {
    pub strongly_prime_count: usize,
    pub radical_intersection: Vec<usize>,
    pub weakly_soluble_radical: Vec<usize>,
    pub radical_equality: bool,
    /// ★-products were evaluated over all bracketings up to this length
    pub star_product_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DesignReport {
    pub order: usize,
    pub nilpotency_class: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct YbeReport {
    pub bijective: bool,
    pub braid: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
}

/// The full classification record of one catalog brace.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BraceReport {
    pub id: String,
    pub order: usize,
    pub flags: BraceFlags,
    pub add_group: GroupInfo,
    pub mul_group: GroupInfo,
    pub socle: Vec<usize>,
    pub annihilator: Vec<usize>,
    pub ker_lambda: Vec<usize>,
    pub counts: IdealCounts,
    pub nilpotency: NilpotencyReport,
    pub solubility: SolubilityReport,
    pub loewy_length: Option<usize>,
    /// π-profiles keyed by each prime dividing the order; only present
    /// for nilpotent type
    pub pi: BTreeMap<String, PiReport>,
    pub radicals: RadicalReport,
    pub design_group: DesignReport,
    pub ybe: YbeReport,
}

fn group_info(g: &crate::group::FiniteGroup) -> GroupInfo {
    let (class, dl) = g.nilpotency_solubility();
    GroupInfo { abelian: g.is_abelian(), nilpotency_class: class, derived_length: dl, exponent: g.exponent() }
}

fn set_vec(s: &ElemSet) -> Vec<usize> {
    s.iter().collect()
}

/// Computes the full report of one brace.
pub fn analyze(id: &str, brace: &SkewBrace) -> BraceReport {
    let core = brace.core_subsets();
    let nil = brace.nilpotency_profile();
    let sol = brace.solubility_profile();
    let loewy = brace.loewy_series();
    let minimal = brace.minimal_ideal_data();
    let radicals = brace.strongly_prime_and_radicals();
    let dg = design_group(brace);
    let solution = solution_from_brace(brace);
    let ybe = verify_solution(&solution);
    let mut pi = BTreeMap::new();
    if brace.add_group().is_nilpotent() {
        for p in primes_dividing(brace.order()) {
            let profile = brace.pi_profile(&[p]).expect("nilpotent type was checked");
            pi.insert(
                p.to_string(),
                PiReport {
                    hall_pi: set_vec(&profile.hall_pi),
                    left_class: profile.left_class,
                    right_class: profile.right_class,
                    pi_prime_is_ideal: profile.pi_prime_is_ideal,
                    pi_separating: profile.pi_separating,
                },
            );
        }
    }
    BraceReport {
        id: id.to_string(),
        order: brace.order(),
        flags: brace.flags(),
        add_group: group_info(brace.add_group()),
        mul_group: group_info(brace.mul_group()),
        socle: set_vec(&core.socle),
        annihilator: set_vec(&core.annihilator),
        ker_lambda: set_vec(&core.ker_lambda),
        counts: IdealCounts {
            sub_braces: brace.sub_braces().len(),
            left_ideals: brace.left_ideals().len(),
            strong_left_ideals: brace.strong_left_ideals().len(),
            ideals: brace.ideals().len(),
            minimal_ideals: minimal.minimal_ideals.len(),
        },
        nilpotency: NilpotencyReport {
            left: nil.left,
            right: nil.right,
            strongly_left: nil.strongly_left,
            annihilator: nil.annihilator,
            socle: nil.socle,
            left_nil: nil.left_nil,
        },
        solubility: SolubilityReport {
            weak: sol.weak,
            left: sol.left,
            strong_left: sol.strong_left,
            soluble: sol.soluble,
            soluble_witness: sol.soluble_witness.map(|chain| chain.iter().map(set_vec).collect()),
        },
        loewy_length: loewy.class_or_length,
        pi,
        radicals: RadicalReport {
            strongly_prime_count: radicals.strongly_prime_ideals.len(),
            radical_intersection: set_vec(&radicals.radical_intersection),
            weakly_soluble_radical: set_vec(&radicals.weakly_soluble_radical),
            radical_equality: radicals.radical_equality,
            star_product_depth: STAR_PRODUCT_DEPTH,
        },
        design_group: DesignReport { order: dg.group.order(), nilpotency_class: dg.group.nilpotency_class() },
        ybe: YbeReport {
            bijective: ybe.bijective,
            braid: ybe.braid,
            left_nondegenerate: ybe.left_nondegenerate,
            right_nondegenerate: ybe.right_nondegenerate,
        },
    }
}

impl BraceReport {
    /// Machine-readable rendering with stable key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<BraceReport, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        writeln!(out, "brace {} (order {})", self.id, self.order).unwrap();
        writeln!(
            out,
            "  flags: trivial={} almost_trivial={} type_abelian={} type_nilpotent={} mul_abelian={}",
            self.flags.trivial,
            self.flags.almost_trivial,
            self.flags.type_abelian,
            self.flags.type_nilpotent,
            self.flags.mul_abelian
        )
        .unwrap();
        writeln!(
            out,
            "  groups: add(class={}, dl={}, exp={})  mul(class={}, dl={}, exp={})",
            opt(self.add_group.nilpotency_class),
            opt(self.add_group.derived_length),
            self.add_group.exponent,
            opt(self.mul_group.nilpotency_class),
            opt(self.mul_group.derived_length),
            self.mul_group.exponent
        )
        .unwrap();
        writeln!(
            out,
            "  socle={:?} annihilator={:?} ker_lambda={:?}",
            self.socle, self.annihilator, self.ker_lambda
        )
        .unwrap();
        writeln!(
            out,
            "  ideals: sub_braces={} left={} strong_left={} ideals={} minimal={}",
            self.counts.sub_braces,
            self.counts.left_ideals,
            self.counts.strong_left_ideals,
            self.counts.ideals,
            self.counts.minimal_ideals
        )
        .unwrap();
        writeln!(
            out,
            "  nilpotency: left={} right={} strongly_left={} annihilator={} socle={} left_nil={}",
            opt(self.nilpotency.left),
            opt(self.nilpotency.right),
            opt(self.nilpotency.strongly_left),
            opt(self.nilpotency.annihilator),
            opt(self.nilpotency.socle),
            self.nilpotency.left_nil
        )
        .unwrap();
        writeln!(
            out,
            "  solubility: weak={} left={} strong_left={} soluble={}",
            opt(self.solubility.weak),
            opt(self.solubility.left),
            opt(self.solubility.strong_left),
            opt(self.solubility.soluble)
        )
        .unwrap();
        writeln!(out, "  loewy_length={}", opt(self.loewy_length)).unwrap();
        for (p, profile) in &self.pi {
            writeln!(
                out,
                "  pi={p}: hall={:?} left_class={} right_class={} pi_prime_ideal={}",
                profile.hall_pi,
                opt(profile.left_class),
                opt(profile.right_class),
                profile.pi_prime_is_ideal
            )
            .unwrap();
        }
        writeln!(
            out,
            "  radicals: strongly_prime_count={} radical={:?} weakly_soluble={:?} equal={} (star products to depth {})",
            self.radicals.strongly_prime_count,
            self.radicals.radical_intersection,
            self.radicals.weakly_soluble_radical,
            self.radicals.radical_equality,
            self.radicals.star_product_depth
        )
        .unwrap();
        writeln!(
            out,
            "  design_group: order={} class={}",
            self.design_group.order,
            opt(self.design_group.nilpotency_class)
        )
        .unwrap();
        writeln!(
            out,
            "  ybe: bijective={} braid={} left_nondeg={} right_nondeg={}",
            self.ybe.bijective, self.ybe.braid, self.ybe.left_nondegenerate, self.ybe.right_nondegenerate
        )
        .unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;

    #[test]
    fn e4_report_values() {
        let report = analyze("e4", &sample::e4());
        assert_eq!(report.nilpotency.left, Some(2));
        assert_eq!(report.nilpotency.right, Some(2));
        assert_eq!(report.socle, vec![0, 2]);
        assert_eq!(report.loewy_length, Some(2));
        assert_eq!(report.design_group.nilpotency_class, Some(2));
        assert!(report.ybe.braid);
        assert!(report.pi.contains_key("2"));
    }

    #[test]
    fn json_round_trip() {
        for brace in [sample::e4(), sample::at6(), sample::trivial_cyclic(6)] {
            let report = analyze("x", &brace);
            let json = report.to_json();
            let back = BraceReport::from_json(&json).unwrap();
            assert_eq!(report, back);
        }
    }

    #[test]
    fn text_rendering_mentions_key_facts() {
        let report = analyze("at6", &sample::at6());
        let text = report.render_text();
        assert!(text.contains("brace at6 (order 6)"));
        assert!(text.contains("almost_trivial=true"));
        assert!(text.contains("braid=true"));
    }
}
