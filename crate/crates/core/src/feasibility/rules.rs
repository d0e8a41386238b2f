//! External theorems used as axioms.
//!
//! Each rule is a fixed record (identifier, citation, structural matcher) and
//! is never re-derived here. Rules are tried in [`RULES`] order; the first rule
//! that matches a type strikes it and later rules skip it.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::polarization::{double_type, quadric_space_dimension, PolarizationType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RuleId {
    #[serde(rename = "R1_IYER_ONES_N")]
    R1IyerOnesN,
    #[serde(rename = "R2_IYER_124")]
    R2Iyer124,
    #[serde(rename = "R3_LAZARSFELD_17")]
    R3Lazarsfeld17,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::R1IyerOnesN => "R1_IYER_ONES_N",
            RuleId::R2Iyer124 => "R2_IYER_124",
            RuleId::R3Lazarsfeld17 => "R3_LAZARSFELD_17",
        }
    }

    pub fn rule(self) -> &'static Rule {
        RULES
            .iter()
            .find(|r| r.id == self)
            .expect("every rule id has an entry")
    }
}

/// A cited theorem and what it is allowed to strike.
#[derive(Debug)]
pub struct Rule {
    pub id: RuleId,
    pub source: &'static str,
    /// Fixed quote carried into every application.
    pub citation: &'static str,
    pub notes: &'static str,
}

pub const RULES: [Rule; 3] = [
    Rule {
        id: RuleId::R3Lazarsfeld17,
        source: "R. Lazarsfeld, projective normality of abelian surfaces",
        citation:
            "a very ample divisor of type (1,d) with d ≥ 13 or d = 7,8,9 is projectively normal",
        notes: "Applies to surfaces only. The degree-14 surface in P^5 is the projection of a \
                linearly normal A' in P^6; projective normality of A' makes restriction of \
                quadrics onto H^0(O_A'(2)) surjective, and equal dimensions leave no quadric \
                containing A'.",
    },
    Rule {
        id: RuleId::R1IyerOnesN,
        source: "J. N. Iyer, very ampleness of line bundles of type (1,…,1,N)",
        citation: "a line bundle of type (1,…,1,2d+1) is never very ample",
        notes: "The quoted shape has last part 2d+1, which for threefolds is 7, yet the case \
                analysis applies it to (1,1,8). The matcher follows that usage: any \
                (1,…,1,N) with N > 1, restricted to dimension at least 3.",
    },
    Rule {
        id: RuleId::R2Iyer124,
        source: "J. N. Iyer, the (1,2,4) linear system on a generic abelian threefold; \
                 openness of very ampleness for polarized abelian varieties",
        citation:
            "the map of type (1,2,4) is birational but not an isomorphism onto its image on a \
                   generic abelian threefold, and very ampleness is an open condition, so it \
                   cannot be very ample on any abelian threefold",
        notes: "Matches exactly the type (1,2,4) on a threefold.",
    },
];

/// What a rule was applied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleSubject {
    Type(PolarizationType),
    Dimension(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleApplication {
    pub rule_id: RuleId,
    pub citation: String,
    pub subject: RuleSubject,
    pub conclusion: String,
}

impl RuleApplication {
    pub fn struck_type(&self) -> Option<&PolarizationType> {
        match &self.subject {
            RuleSubject::Type(t) => Some(t),
            RuleSubject::Dimension(_) => None,
        }
    }
}

/// Quadric count behind the surface rule for a type `(1, n)`: quadrics on
/// `P^{n-1}` and `h⁰` of the doubled bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricCount {
    pub ambient_dim: u64,
    pub quadrics: BigInt,
    pub restricted: BigInt,
}

impl QuadricCount {
    pub fn excess(&self) -> BigInt {
        &self.quadrics - &self.restricted
    }
}

pub fn quadric_count(t: &PolarizationType) -> Option<QuadricCount> {
    let (_, restricted) = double_type(t);
    let h0: u64 = t.parts().iter().product();
    let ambient_dim = h0.checked_sub(1).filter(|&n| n >= 1)?;
    Some(QuadricCount {
        ambient_dim,
        quadrics: quadric_space_dimension(ambient_dim).ok()?,
        restricted,
    })
}

fn lazarsfeld_applies(n: u64) -> bool {
    n >= 13 || (7..=9).contains(&n)
}

fn conclude(rule: &Rule, d: u32, t: &PolarizationType) -> Option<String> {
    match rule.id {
        RuleId::R3Lazarsfeld17 => {
            if d != 2 || t.g() != 2 || t.parts()[0] != 1 || !lazarsfeld_applies(t.parts()[1]) {
                return None;
            }
            let count = quadric_count(t)?;
            if !count.excess().is_zero() {
                return None;
            }
            Some(format!(
                "h0(O_P{n}(2)) - h0(O_A'(2)) = {q} - {r} = 0: no quadrics contain the lifted \
                 surface; contradiction",
                n = count.ambient_dim,
                q = count.quadrics,
                r = count.restricted,
            ))
        }
        RuleId::R1IyerOnesN => {
            let n = t.is_ones_then()?;
            (t.g() >= 3 && t.g() == d)
                .then(|| format!("type {t} = (1,…,1,{n}) is not very ample; no embedding"))
        }
        RuleId::R2Iyer124 => (d == 3 && t.parts() == [1, 2, 4])
            .then(|| format!("type {t} is not very ample on any abelian threefold; no embedding")),
    }
}

/// Applies the rule base to the candidate types of a `d`-dimensional abelian
/// variety. Output is grouped by rule, in [`RULES`] order, then by candidate
/// order.
pub fn apply_rules(d: u32, candidates: &[PolarizationType]) -> Vec<RuleApplication> {
    let mut struck = vec![false; candidates.len()];
    let mut out = Vec::new();
    for rule in &RULES {
        for (i, t) in candidates.iter().enumerate() {
            if struck[i] {
                continue;
            }
            if let Some(conclusion) = conclude(rule, d, t) {
                struck[i] = true;
                out.push(RuleApplication {
                    rule_id: rule.id,
                    citation: rule.citation.to_string(),
                    subject: RuleSubject::Type(t.clone()),
                    conclusion,
                });
            }
        }
    }
    out
}
