//! Exhaustive check of the mate bound over every graph of a small order.
//!
//! All graphs of order `n` are reduced to isomorphism classes and grouped by
//! generalized spectrum. For every graph of the larger arithmetic family the
//! number of mates in its group must stay within `2^k - 1`, and every pair in
//! a group is certified and its level checked against the structural
//! constraints. Shards split the sorted group list round-robin; the merged
//! report of all shards equals the unsharded report.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::certificate::{verify_pair, GcmCertificate};
use super::groups::{group_by_generalized_spectrum, MateGroup};
use super::lemmas::{check_prime_power_excluded, check_same_level_permutation, LemmaOutcome};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, isomorphism_classes, Shard};

/// Largest order swept without the long-run opt-in.
pub const SWEEP_MAX_ORDER: usize = 6;
/// Largest order swept at all.
pub const SWEEP_LONG_MAX_ORDER: usize = 7;

pub mod check {
    pub const MATE_BOUND: &str = "mate_bound";
    pub const CERTIFICATE_VALID: &str = "certificate_valid";
    pub const LEVEL_DIVIDES_GCD: &str = "level_divides_gcd";
    pub const LEVEL_ODD_TWO_ADIC: &str = "level_odd_two_adic";
    pub const LEVEL_ODD_SQUARE_FREE: &str = "level_odd_square_free";
    pub const PRIMITIVE: &str = "primitive";
    pub const PRIME_POWER_EXCLUDED: &str = "prime_power_excluded";
    pub const LEVEL_SUPPORT: &str = "level_support";
    pub const DISTINCT_LEVELS: &str = "distinct_levels";
    pub const SAME_LEVEL_PERMUTATION: &str = "same_level_permutation";

    pub const ALL: [&str; 10] = [
        MATE_BOUND,
        CERTIFICATE_VALID,
        LEVEL_DIVIDES_GCD,
        LEVEL_ODD_TWO_ADIC,
        LEVEL_ODD_SQUARE_FREE,
        PRIMITIVE,
        PRIME_POWER_EXCLUDED,
        LEVEL_SUPPORT,
        DISTINCT_LEVELS,
        SAME_LEVEL_PERMUTATION,
    ];
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub holds: u64,
    pub fails: u64,
    pub not_applicable: u64,
}

impl Tally {
    fn record(&mut self, outcome: LemmaOutcome) {
        match outcome {
            LemmaOutcome::Holds => self.holds += 1,
            LemmaOutcome::Fails => self.fails += 1,
            LemmaOutcome::NotApplicable => self.not_applicable += 1,
        }
    }

    fn merge(&mut self, other: &Tally) {
        self.holds += other.holds;
        self.fails += other.fails;
        self.not_applicable += other.not_applicable;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub check: String,
    pub graph_g: String,
    pub graph_h: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub order: usize,
    pub classes: u64,
    pub groups: u64,
    /// Group size → number of groups of that size.
    pub group_size_histogram: BTreeMap<usize, u64>,
    pub controllable: u64,
    pub fn_population: u64,
    pub hn_population: u64,
    pub uncertified_groups: u64,
    pub certified_pairs: u64,
    pub checks: BTreeMap<String, Tally>,
    pub violations: Vec<Violation>,
    /// graph6 of controllable graphs whose two counts of squared primes
    /// (from `det W` and from the last invariant factor) differ.
    pub k_discrepancies: Vec<String>,
}

impl BoundReport {
    fn empty(order: usize) -> Self {
        Self {
            order,
            classes: 0,
            groups: 0,
            group_size_histogram: BTreeMap::new(),
            controllable: 0,
            fn_population: 0,
            hn_population: 0,
            uncertified_groups: 0,
            certified_pairs: 0,
            checks: check::ALL.iter().map(|c| (c.to_string(), Tally::default())).collect(),
            violations: Vec::new(),
            k_discrepancies: Vec::new(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally(&self, name: &str) -> Tally {
        self.checks.get(name).copied().unwrap_or_default()
    }

    /// Associative, commutative combination of partial reports.
    pub fn merge(mut self, other: BoundReport) -> BoundReport {
        assert_eq!(self.order, other.order, "cannot merge sweeps of different orders");
        self.classes += other.classes;
        self.groups += other.groups;
        for (size, count) in other.group_size_histogram {
            *self.group_size_histogram.entry(size).or_default() += count;
        }
        self.controllable += other.controllable;
        self.fn_population += other.fn_population;
        self.hn_population += other.hn_population;
        self.uncertified_groups += other.uncertified_groups;
        self.certified_pairs += other.certified_pairs;
        for (name, tally) in &other.checks {
            self.checks.entry(name.clone()).or_default().merge(tally);
        }
        self.violations.extend(other.violations);
        self.violations.sort();
        self.k_discrepancies.extend(other.k_discrepancies);
        self.k_discrepancies.sort();
        self
    }

    fn record(&mut self, name: &str, outcome: LemmaOutcome, violation: impl FnOnce() -> Violation) {
        self.checks.entry(name.to_string()).or_default().record(outcome);
        if outcome.is_counterexample() {
            self.violations.push(violation());
        }
    }
}

fn combine(outcomes: impl IntoIterator<Item = LemmaOutcome>) -> LemmaOutcome {
    outcomes.into_iter().fold(LemmaOutcome::NotApplicable, |acc, o| match (acc, o) {
        (LemmaOutcome::Fails, _) | (_, LemmaOutcome::Fails) => LemmaOutcome::Fails,
        (LemmaOutcome::Holds, _) | (_, LemmaOutcome::Holds) => LemmaOutcome::Holds,
        _ => LemmaOutcome::NotApplicable,
    })
}

fn sweep_group(order: usize, group: &MateGroup) -> Result<BoundReport> {
    let mut report = BoundReport::empty(order);
    let size = group.len();
    report.classes += size as u64;
    report.groups += 1;
    *report.group_size_histogram.entry(size).or_default() += 1;

    let names: Vec<String> = group.members.iter().map(encode_graph6).collect();
    for (i, class) in group.classifications.iter().enumerate() {
        if group.walk_info[i].controllable {
            report.controllable += 1;
            if class.k_counts_differ() {
                report.k_discrepancies.push(names[i].clone());
            }
        }
        report.fn_population += class.in_fn as u64;
        report.hn_population += class.in_hn as u64;

        let outcome = match class.mate_bound {
            Some(bound) => LemmaOutcome::from_conclusion((size as u64 - 1) <= bound),
            None => LemmaOutcome::NotApplicable,
        };
        report.record(check::MATE_BOUND, outcome, || Violation {
            check: check::MATE_BOUND.into(),
            graph_g: names[i].clone(),
            graph_h: None,
            detail: format!("{} mates exceed the bound {:?} (k = {})", size - 1, class.mate_bound, class.k),
        });
    }

    if size < 2 {
        return Ok(report);
    }
    if group.uncertified() {
        report.uncertified_groups += 1;
        for (i, class) in group.classifications.iter().enumerate() {
            if class.in_fn {
                report.violations.push(Violation {
                    check: check::CERTIFICATE_VALID.into(),
                    graph_g: names[i].clone(),
                    graph_h: None,
                    detail: "family member in a group without controllable walk matrices".into(),
                });
            }
        }
        return Ok(report);
    }

    for (i, class) in group.classifications.iter().enumerate() {
        let g = &group.members[i];
        let mut certs: Vec<GcmCertificate> = Vec::new();
        for (j, h) in group.members.iter().enumerate() {
            if i == j {
                continue;
            }
            let cert = verify_pair(g, h)?;
            report.certified_pairs += 1;
            let pair = |check: &str, detail: String| Violation {
                check: check.into(),
                graph_g: names[i].clone(),
                graph_h: Some(names[j].clone()),
                detail,
            };
            let level = cert.level.clone();

            report.record(check::CERTIFICATE_VALID, LemmaOutcome::from_conclusion(cert.is_mate()), || {
                pair(check::CERTIFICATE_VALID, format!("certificate invalid or isomorphic (level {level})"))
            });
            report.record(
                check::LEVEL_DIVIDES_GCD,
                LemmaOutcome::from_conclusion(cert.level_constraints.divides_last_invariant_gcd),
                || pair(check::LEVEL_DIVIDES_GCD, format!("level {level} does not divide gcd of last invariants")),
            );
            let two_adic = if class.two_adic_exact {
                LemmaOutcome::from_conclusion(cert.level_constraints.odd)
            } else {
                LemmaOutcome::NotApplicable
            };
            report.record(check::LEVEL_ODD_TWO_ADIC, two_adic, || {
                pair(check::LEVEL_ODD_TWO_ADIC, format!("level {level} is even"))
            });

            let in_family = |ok: bool| if class.in_fn { LemmaOutcome::from_conclusion(ok) } else { LemmaOutcome::NotApplicable };
            report.record(
                check::LEVEL_ODD_SQUARE_FREE,
                in_family(cert.level_constraints.odd && cert.level_constraints.square_free),
                || pair(check::LEVEL_ODD_SQUARE_FREE, format!("level {level} is not odd and square-free")),
            );
            report.record(check::PRIMITIVE, in_family(cert.is_primitive), || {
                pair(check::PRIMITIVE, format!("Q of level {level} is not primitive"))
            });
            let squared: Vec<&BigUint> = class.squared_primes().collect();
            let support_ok = cert.level_primes().all(|p| squared.contains(&p));
            report.record(check::LEVEL_SUPPORT, in_family(support_ok), || {
                pair(check::LEVEL_SUPPORT, format!("level {level} has a prime outside {squared:?}"))
            });
            let excluded = if class.in_fn {
                combine(
                    class
                        .per_prime_ranks
                        .iter()
                        .map(|r| check_prime_power_excluded(&cert.level, &r.prime, r.exponent, r.satisfied)),
                )
            } else {
                LemmaOutcome::NotApplicable
            };
            report.record(check::PRIME_POWER_EXCLUDED, excluded, || {
                pair(check::PRIME_POWER_EXCLUDED, format!("level {level} contains a full prime power of det W"))
            });
            certs.push(cert);
        }

        if class.in_fn && certs.len() >= 2 {
            let mut levels: Vec<_> = certs.iter().map(|c| c.level.clone()).collect();
            levels.sort();
            let distinct = levels.windows(2).all(|w| w[0] != w[1]);
            report.record(check::DISTINCT_LEVELS, LemmaOutcome::from_conclusion(distinct), || Violation {
                check: check::DISTINCT_LEVELS.into(),
                graph_g: names[i].clone(),
                graph_h: None,
                detail: format!("two mates share a level among {levels:?}"),
            });
            for a in 0..certs.len() {
                for b in a + 1..certs.len() {
                    if certs[a].level != certs[b].level {
                        continue;
                    }
                    let outcome = check_same_level_permutation(&certs[a].q, &certs[b].q);
                    report.record(check::SAME_LEVEL_PERMUTATION, outcome, || Violation {
                        check: check::SAME_LEVEL_PERMUTATION.into(),
                        graph_g: names[i].clone(),
                        graph_h: None,
                        detail: format!("same-level matrices with non-permutation product (level {})", certs[a].level),
                    });
                }
            }
        }
    }
    Ok(report)
}

fn check_order(n: usize, allow_long: bool) -> Result<()> {
    let limit = if allow_long { SWEEP_LONG_MAX_ORDER } else { SWEEP_MAX_ORDER };
    if n == 0 || n > limit {
        return Err(Error::UnsupportedOrder { order: n, limit });
    }
    Ok(())
}

/// Runs the sweep for the groups owned by `shard`.
pub fn sweep_order(n: usize, shard: Shard, allow_long: bool) -> Result<BoundReport> {
    check_order(n, allow_long)?;
    let groups = group_by_generalized_spectrum(isomorphism_classes(n)?)?;
    let owned: Vec<&MateGroup> =
        groups.iter().enumerate().filter(|(i, _)| i % shard.total == shard.index).map(|(_, g)| g).collect();
    let partials: Vec<BoundReport> = owned.par_iter().map(|g| sweep_group(n, g)).collect::<Result<_>>()?;
    Ok(partials.into_iter().fold(BoundReport::empty(n), BoundReport::merge))
}

/// The whole sweep for order `n ≤ 6`.
pub fn verify_theorem_bound(n: usize) -> Result<BoundReport> {
    sweep_order(n, Shard::WHOLE, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_are_clean() {
        for n in 1..=5 {
            let r = verify_theorem_bound(n).unwrap();
            assert!(r.is_clean(), "{:?}", r.violations);
        }
        assert_eq!(verify_theorem_bound(4).unwrap().classes, 11);
        assert_eq!(verify_theorem_bound(5).unwrap().classes, 34);
    }

    #[test]
    fn guardrails() {
        assert!(matches!(verify_theorem_bound(7), Err(Error::UnsupportedOrder { order: 7, limit: 6 })));
        assert!(matches!(sweep_order(8, Shard::WHOLE, true), Err(Error::UnsupportedOrder { order: 8, limit: 7 })));
    }

    #[test]
    fn merge_is_order_independent() {
        let parts: Vec<BoundReport> = (0..3).map(|i| sweep_order(5, Shard::new(i, 3).unwrap(), false).unwrap()).collect();
        let forward = parts.iter().cloned().fold(BoundReport::empty(5), BoundReport::merge);
        let backward = parts.iter().rev().cloned().fold(BoundReport::empty(5), BoundReport::merge);
        assert_eq!(forward, backward);
        assert_eq!(forward, verify_theorem_bound(5).unwrap());
    }
}
