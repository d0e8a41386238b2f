//! Per-dimension elimination of abelian varieties `A^d ⊂ Q^{2d}`.
//!
//! For each `d` the engine solves the self-intersection constraint on the
//! middle Chow group, bounds the degree from both sides, turns surviving
//! classes into candidate polarization types and runs them through the rule
//! base. The resulting [`EliminationRecord`] carries the whole trail.

mod circle;
mod polarization;
mod rules;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::chow::f_closed;
use crate::error::{Error, Result};
use crate::par;
use crate::sequences::factorial;

pub use circle::{
    circle_solutions, circle_solutions_seq, corner_solutions, Point, CIRCLE_SCAN_LIMIT,
};
pub use polarization::{
    double_type, enumerate_polarization_types, quadric_space_dimension, PolarizationType,
};
pub use rules::{
    apply_rules, quadric_count, QuadricCount, Rule, RuleApplication, RuleId, RuleSubject, RULES,
};

/// Types named by the classical case analysis for each dimension it treats.
/// Enumerated types missing from this list are reported as omitted rather than
/// silently excluded.
pub const CASE_ANALYSIS_TYPES: &[(u32, &[&[u64]])] =
    &[(2, &[&[1, 7]]), (3, &[&[1, 1, 8], &[1, 2, 4]])];

fn listed_by_case_analysis(d: u32, t: &PolarizationType) -> bool {
    CASE_ANALYSIS_TYPES
        .iter()
        .any(|(dim, types)| *dim == d && types.iter().any(|p| *p == t.parts()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    AllowedClassical,
    EliminatedByCounting,
    EliminatedByRules,
    Unresolved,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::AllowedClassical => "ALLOWED_CLASSICAL",
            Verdict::EliminatedByCounting => "ELIMINATED_BY_COUNTING",
            Verdict::EliminatedByRules => "ELIMINATED_BY_RULES",
            Verdict::Unresolved => "UNRESOLVED",
        }
    }
}

/// A class that passed the degree and divisibility filters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub pair: Point,
    #[serde(with = "crate::bigint_serde")]
    pub degree: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub h0: BigInt,
    pub types: Vec<PolarizationType>,
    /// Enumerated types the classical case analysis does not mention and no
    /// shipped rule strikes.
    pub paper_omitted: Vec<PolarizationType>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RejectReason {
    ZeroClass,
    BelowMinDegree,
    DegreeNotDivisible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub pair: Point,
    #[serde(with = "crate::bigint_serde")]
    pub degree: BigInt,
    pub reason: RejectReason,
}

/// Full audit of one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationRecord {
    pub d: u32,
    #[serde(with = "crate::bigint_serde")]
    pub f_d: BigInt,
    pub all_solutions: Vec<Point>,
    pub effective_solutions: Vec<Point>,
    #[serde(with = "crate::bigint_serde")]
    pub max_degree: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub min_degree: BigInt,
    pub surviving_candidates: Vec<Candidate>,
    pub rules_applied: Vec<RuleApplication>,
    pub verdict: Verdict,
    /// `false` for `d ≤ 2`: the lower bound needs the variety to span its
    /// ambient space, which is only known for `d > 2`.
    pub min_degree_applies: bool,
    /// `false` when `F_d` exceeds [`CIRCLE_SCAN_LIMIT`]; `all_solutions` then
    /// holds only the four corner points.
    pub solutions_exhaustive: bool,
    pub rejected_candidates: Vec<Rejection>,
}

/// `(2F, (F, F))`: the largest degree on the circle and where it is attained.
pub fn max_degree(f: &BigInt) -> Result<(BigInt, Point)> {
    if !f.is_positive() {
        return Err(Error::Precondition(format!(
            "F must be at least 1, got {f}"
        )));
    }
    let top = Point::new(f.clone(), f.clone());
    if !top.on_circle(f) {
        return Err(Error::Invariant(format!(
            "{top} is not on the circle for F = {f}"
        )));
    }
    Ok((f * 2u32, top))
}

/// `2 (d+1)!`, the Riemann–Roch lower bound for an abelian variety spanning
/// `P^{2d+1}`. Only meaningful for `d > 2`.
pub fn min_degree(d: u32) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    Ok(factorial(d + 1) * 2u32)
}

/// `h⁰(O_A(h)) = deg(A) / d!`.
pub fn h0_from_degree(degree: &BigInt, d: u32) -> Result<BigInt> {
    if !degree.is_positive() || d == 0 {
        return Err(Error::Precondition(format!(
            "need a positive degree and d >= 1, got degree {degree}, d = {d}"
        )));
    }
    let fact = factorial(d);
    let (q, r) = degree.div_rem(&fact);
    if !r.is_zero() {
        return Err(Error::NotDivisible {
            degree: degree.to_string(),
            d,
            factorial: fact.to_string(),
        });
    }
    Ok(q)
}

fn solutions_for(f: &BigInt) -> Result<(Vec<Point>, bool)> {
    match circle_solutions(f) {
        Ok(s) => Ok((s, true)),
        Err(Error::Budget { .. }) => Ok((corner_solutions(f), false)),
        Err(e) => Err(e),
    }
}

fn candidate_for(pair: Point, d: u32, degree: BigInt, h0: BigInt) -> Result<Candidate> {
    let h0_small = h0.to_u64().ok_or_else(|| Error::Budget {
        what: format!("polarization enumeration for h0 = {h0}"),
        budget: u64::MAX.to_string(),
    })?;
    Ok(Candidate {
        pair,
        degree,
        h0,
        types: enumerate_polarization_types(d, h0_small)?,
        paper_omitted: Vec::new(),
    })
}

/// Runs the full elimination pipeline for one dimension.
pub fn eliminate(d: u32) -> Result<EliminationRecord> {
    if d == 0 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    let f_d = f_closed(d)?;
    let (all_solutions, solutions_exhaustive) = solutions_for(&f_d)?;
    if let Some(bad) = all_solutions.iter().find(|p| !p.on_circle(&f_d)) {
        return Err(Error::Invariant(format!(
            "{bad} is not a solution for F = {f_d}"
        )));
    }
    let (max_deg, top) = max_degree(&f_d)?;
    if !all_solutions.contains(&top) {
        return Err(Error::Invariant(format!(
            "{top} missing from the solution set"
        )));
    }
    let effective_solutions: Vec<Point> = all_solutions
        .iter()
        .filter(|p| p.is_effective())
        .cloned()
        .collect();
    let min_deg = min_degree(d)?;
    let min_degree_applies = d > 2;

    let mut record = EliminationRecord {
        d,
        f_d,
        all_solutions,
        effective_solutions,
        max_degree: max_deg,
        min_degree: min_deg,
        surviving_candidates: Vec::new(),
        rules_applied: Vec::new(),
        verdict: Verdict::Unresolved,
        min_degree_applies,
        solutions_exhaustive,
        rejected_candidates: Vec::new(),
    };

    if d == 1 {
        let degree = top.degree();
        let h0 = h0_from_degree(&degree, d)?;
        record
            .surviving_candidates
            .push(candidate_for(top, d, degree, h0)?);
        record.verdict = Verdict::AllowedClassical;
        return Ok(record);
    }

    if d > 3 && factorial(d + 1) > record.f_d {
        // 2F_d < 2(d+1)!: every effective class is below the lower bound
        for p in &record.effective_solutions {
            let degree = p.degree();
            let reason = if degree.is_zero() {
                RejectReason::ZeroClass
            } else {
                RejectReason::BelowMinDegree
            };
            record.rejected_candidates.push(Rejection {
                pair: p.clone(),
                degree,
                reason,
            });
        }
        record.verdict = Verdict::EliminatedByCounting;
        return Ok(record);
    }

    for p in record.effective_solutions.clone() {
        let degree = p.degree();
        if degree.is_zero() {
            record.rejected_candidates.push(Rejection {
                pair: p,
                degree,
                reason: RejectReason::ZeroClass,
            });
            continue;
        }
        if min_degree_applies && degree < record.min_degree {
            record.rejected_candidates.push(Rejection {
                pair: p,
                degree,
                reason: RejectReason::BelowMinDegree,
            });
            continue;
        }
        match h0_from_degree(&degree, d) {
            Ok(h0) => record
                .surviving_candidates
                .push(candidate_for(p, d, degree, h0)?),
            Err(Error::NotDivisible { .. }) => record.rejected_candidates.push(Rejection {
                pair: p,
                degree,
                reason: RejectReason::DegreeNotDivisible,
            }),
            Err(e) => return Err(e),
        }
    }

    if record.surviving_candidates.is_empty() {
        record.verdict = Verdict::EliminatedByCounting;
        return Ok(record);
    }

    let mut unresolved = false;
    for cand in &mut record.surviving_candidates {
        let apps = apply_rules(d, &cand.types);
        for t in &cand.types {
            if apps.iter().any(|a| a.struck_type() == Some(t)) {
                continue;
            }
            if listed_by_case_analysis(d, t)
                || !CASE_ANALYSIS_TYPES.iter().any(|(dim, _)| *dim == d)
            {
                unresolved = true;
            } else {
                cand.paper_omitted.push(t.clone());
            }
        }
        record.rules_applied.extend(apps);
    }
    record.verdict = if unresolved {
        Verdict::Unresolved
    } else {
        Verdict::EliminatedByRules
    };
    Ok(record)
}

/// Records for `1..=max_d`, evaluated on the rayon pool when the `parallel`
/// feature is on. Always in ascending `d`.
pub fn elimination_table(max_d: u32) -> Result<Vec<EliminationRecord>> {
    par::map_range(1..=max_d, eliminate).into_iter().collect()
}

pub fn elimination_table_seq(max_d: u32) -> Result<Vec<EliminationRecord>> {
    par::map_range_seq(1..=max_d, eliminate)
        .into_iter()
        .collect()
}

/// Ordered prose trail for one record.
pub fn explain(record: &EliminationRecord) -> Vec<String> {
    let d = record.d;
    let mut steps = Vec::new();
    steps.push(format!(
        "Top Chern class of the normal bundle: c_{d}(N) = F_{d} h^{d} with F_{d} = {} \
         (coefficient of h^{d} in (1+h)^{}(1+2h)^-1).",
        record.f_d,
        2 * d + 2
    ));
    let listed = |v: &[Point]| {
        v.iter()
            .map(Point::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    };
    steps.push(format!(
        "Self-intersection: a^2 + b^2 = {f}(a + b), i.e. (2a-{f})^2 + (2b-{f})^2 = 2*{f}^2. \
         {} solutions: {}; effective: {}.",
        if record.solutions_exhaustive {
            "All"
        } else {
            "Corner (scan budget exceeded)"
        },
        listed(&record.all_solutions),
        listed(&record.effective_solutions),
        f = record.f_d,
    ));
    steps.push(format!(
        "Upper bound: deg(A) = a + b <= 2F_{d} = {}, attained at ({f},{f}).",
        record.max_degree,
        f = record.f_d
    ));
    if record.min_degree_applies {
        steps.push(format!(
            "Lower bound: A spans P^{} (Van de Ven), so h0(O_A(h)) = deg/{d}! >= {} and deg(A) >= 2({}!) = {}.",
            2 * d + 1,
            2 * d + 2,
            d + 1,
            record.min_degree
        ));
    } else {
        steps.push(format!(
            "Lower bound 2({}!) = {} not applied: spanning P^{} is only guaranteed for d > 2.",
            d + 1,
            record.min_degree,
            2 * d + 1
        ));
    }

    match record.verdict {
        Verdict::AllowedClassical => {
            for c in &record.surviving_candidates {
                steps.push(format!(
                    "Classical case: class {} of degree {}, h0 = {}, type {}: the elliptic curve of \
                     bidegree {} on the quadric surface in P^3.",
                    c.pair,
                    c.degree,
                    c.h0,
                    join_types(&c.types),
                    c.pair
                ));
            }
        }
        Verdict::EliminatedByCounting if d > 3 => {
            steps.push(format!(
                "Counting: ({}!) = {} > F_{d} = {}, so 2F_{d} = {} < 2({}!) = {}; no effective \
                 class reaches the required degree.",
                d + 1,
                factorial(d + 1),
                record.f_d,
                record.max_degree,
                d + 1,
                record.min_degree
            ));
        }
        _ => {}
    }

    for r in &record.rejected_candidates {
        if matches!(record.verdict, Verdict::EliminatedByCounting) && d > 3 {
            break;
        }
        let why = match r.reason {
            RejectReason::ZeroClass => "the zero class".to_string(),
            RejectReason::BelowMinDegree => format!("below the lower bound {}", record.min_degree),
            RejectReason::DegreeNotDivisible => {
                format!(
                    "{d}! = {} does not divide the degree, so h0 is not an integer",
                    factorial(d)
                )
            }
        };
        steps.push(format!("Discard {} (degree {}): {why}.", r.pair, r.degree));
    }

    if record.verdict == Verdict::AllowedClassical {
        return steps;
    }
    for c in &record.surviving_candidates {
        steps.push(format!(
            "Candidate {}: degree {}, h0 = {}/{d}! = {}, polarization types {}.",
            c.pair,
            c.degree,
            c.degree,
            c.h0,
            join_types(&c.types)
        ));
        if d == 3 && c.degree == record.max_degree && c.degree == record.min_degree {
            steps.push(format!(
                "Both bounds meet: F_3 = {} = 4!, so the degree is exactly {}.",
                record.f_d, c.degree
            ));
        }
        for t in &c.types {
            let app = record
                .rules_applied
                .iter()
                .find(|a| a.struck_type() == Some(t));
            match app {
                Some(a) => {
                    if a.rule_id == RuleId::R3Lazarsfeld17 {
                        if let Some(count) = quadric_count(t) {
                            steps.push(format!(
                                "The surface in P^{} with h0 = {} is not linearly normal: it is the \
                                 projection of a linearly normal surface A' in P^{} of type {t}, \
                                 and the quadric lifts to a quadric containing A'.",
                                2 * d + 1,
                                c.h0,
                                count.ambient_dim
                            ));
                        }
                    }
                    steps.push(format!(
                        "[{}] {}: \"{}\". {}",
                        a.rule_id.as_str(),
                        a.rule_id.rule().source,
                        a.citation,
                        a.conclusion
                    ));
                }
                None if c.paper_omitted.contains(t) => {
                    steps.push(format!("Type {t}: paper-omitted; no shipped rule applies."))
                }
                None => steps.push(format!("Type {t}: no rule applies; unresolved.")),
            }
        }
    }
    steps.push(format!("Verdict: {}.", record.verdict.as_str()));
    steps
}

fn join_types(types: &[PolarizationType]) -> String {
    types
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn degree_bounds() {
        assert_eq!(max_degree(&big(7)).unwrap(), (big(14), Point::new(7, 7)));
        assert_eq!(max_degree(&big(24)).unwrap(), (big(48), Point::new(24, 24)));
        assert_eq!(max_degree(&big(2)).unwrap(), (big(4), Point::new(2, 2)));
        assert!(max_degree(&big(0)).is_err());
        assert_eq!(min_degree(3).unwrap(), big(48));
        assert_eq!(min_degree(4).unwrap(), big(240));
        assert_eq!(min_degree(1).unwrap(), big(4));
    }

    #[test]
    fn h0() {
        assert_eq!(h0_from_degree(&big(14), 2).unwrap(), big(7));
        assert_eq!(h0_from_degree(&big(48), 3).unwrap(), big(8));
        assert!(matches!(
            h0_from_degree(&big(13), 2),
            Err(Error::NotDivisible { .. })
        ));
        assert!(matches!(
            h0_from_degree(&big(0), 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn classical_dimension() {
        let r = eliminate(1).unwrap();
        assert_eq!(r.verdict, Verdict::AllowedClassical);
        assert_eq!(r.surviving_candidates.len(), 1);
        assert_eq!(r.surviving_candidates[0].pair, Point::new(2, 2));
        assert!(!r.min_degree_applies);
    }

    #[test]
    fn surfaces() {
        let r = eliminate(2).unwrap();
        assert_eq!(r.verdict, Verdict::EliminatedByRules);
        assert_eq!(r.surviving_candidates.len(), 1);
        let c = &r.surviving_candidates[0];
        assert_eq!(
            (c.pair.clone(), c.degree.clone(), c.h0.clone()),
            (Point::new(7, 7), big(14), big(7))
        );
        assert_eq!(c.types, vec![PolarizationType::new(vec![1, 7]).unwrap()]);
        assert_eq!(r.rules_applied.len(), 1);
        assert_eq!(r.rules_applied[0].rule_id, RuleId::R3Lazarsfeld17);
        let reasons: Vec<_> = r.rejected_candidates.iter().map(|x| x.reason).collect();
        assert_eq!(
            reasons,
            vec![
                RejectReason::ZeroClass,
                RejectReason::DegreeNotDivisible,
                RejectReason::DegreeNotDivisible
            ]
        );
    }

    #[test]
    fn threefolds() {
        let r = eliminate(3).unwrap();
        assert_eq!(r.verdict, Verdict::EliminatedByRules);
        assert_eq!(r.surviving_candidates.len(), 1);
        let c = &r.surviving_candidates[0];
        assert_eq!(c.pair, Point::new(24, 24));
        assert_eq!(c.types.len(), 3);
        assert_eq!(
            c.paper_omitted,
            vec![PolarizationType::new(vec![2, 2, 2]).unwrap()]
        );
        let ids: Vec<_> = r.rules_applied.iter().map(|a| a.rule_id).collect();
        assert_eq!(ids, vec![RuleId::R1IyerOnesN, RuleId::R2Iyer124]);
    }

    #[test]
    fn counting_dimensions() {
        let r = eliminate(5).unwrap();
        assert_eq!(r.verdict, Verdict::EliminatedByCounting);
        assert_eq!(r.f_d, big(314));
        assert!(factorial(6) > r.f_d);
        assert!(r.solutions_exhaustive);
        let big_d = eliminate(40).unwrap();
        assert_eq!(big_d.verdict, Verdict::EliminatedByCounting);
        assert!(!big_d.solutions_exhaustive);
        assert_eq!(big_d.all_solutions.len(), 4);
        assert!(eliminate(0).is_err());
    }

    #[test]
    fn explanations() {
        let two = explain(&eliminate(2).unwrap()).join("\n");
        assert!(two.contains("linearly normal"));
        assert!(two.contains("28 - 28 = 0"));
        assert!(two.contains("is projectively normal"));
        let three = explain(&eliminate(3).unwrap()).join("\n");
        assert!(three.contains("exactly 48"));
        assert!(three.contains("R1_IYER_ONES_N") && three.contains("R2_IYER_124"));
        assert!(three.contains("(2,2,2): paper-omitted; no shipped rule applies"));
        let seven = explain(&eliminate(7).unwrap()).join("\n");
        assert!(seven.contains("Counting"));
        assert!(!seven.contains("[R"));
    }

    #[test]
    fn table_matches_sequential() {
        assert_eq!(
            elimination_table(30).unwrap(),
            elimination_table_seq(30).unwrap()
        );
    }
}
