//! Published reference values, embedded from `data/expected.toml`, and the
//! comparisons the tests and the CLI run against them.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::criteria::{CensusResult, Criterion};
use crate::error::{Error, Result};
use crate::graph::{orbit_key, GraphState, OrbitRecord};

const DATA: &str = include_str!("../data/expected.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct Expected {
    /// Index `n − 1` holds the count for `n` vertices.
    pub lc_orbit_counts: Vec<usize>,
    pub census: Vec<CensusExpectation>,
    pub table1: Vec<Table1Row>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct CensusExpectation {
    pub n: usize,
    pub degree: usize,
    pub criterion: Criterion,
    pub count: u64,
    #[serde(default)]
    pub long_run: bool,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table1Row {
    pub n: usize,
    #[serde(default)]
    pub long_run: bool,
    pub orbits: Vec<ListedOrbit>,
    pub unlisted: Option<UnlistedOrbits>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ListedOrbit {
    pub rep: String,
    pub max_rank: usize,
}

#[derive(Clone, Debug, Deserialize)]
pub struct UnlistedOrbits {
    pub count: usize,
    pub max_rank: usize,
}

/// The embedded reference values.
pub fn expected() -> &'static Expected {
    static E: OnceLock<Expected> = OnceLock::new();
    E.get_or_init(|| toml::from_str(DATA).expect("embedded expected.toml parses"))
}

impl Expected {
    pub fn lc_orbit_count(&self, n: usize) -> Option<usize> {
        n.checked_sub(1)
            .and_then(|i| self.lc_orbit_counts.get(i))
            .copied()
    }

    pub fn table1_row(&self, n: usize) -> Option<&Table1Row> {
        self.table1.iter().find(|r| r.n == n)
    }

    pub fn census_count(
        &self,
        n: usize,
        degree: usize,
        criterion: Criterion,
    ) -> Option<&CensusExpectation> {
        self.census
            .iter()
            .find(|c| c.n == n && c.degree == degree && c.criterion == criterion)
    }
}

/// Outcome of comparing computed values with published ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub pass: bool,
    /// One line per discrepancy.
    pub diff: Vec<String>,
}

impl Comparison {
    fn from_diff(diff: Vec<String>) -> Self {
        Comparison {
            pass: diff.is_empty(),
            diff,
        }
    }
}

/// Compares a census result with its published count, if there is one.
pub fn check_census(r: &CensusResult) -> Option<Comparison> {
    let e = expected().census_count(r.n, r.degree, r.criterion)?;
    let diff = if e.count == r.count {
        Vec::new()
    } else {
        vec![format!(
            "census n={} degree={} {}: expected {}, got {}",
            r.n, r.degree, r.criterion, e.count, r.count
        )]
    };
    Some(Comparison::from_diff(diff))
}

/// Compares an orbit count with the published one, if there is one.
pub fn check_orbit_count(n: usize, got: usize) -> Option<Comparison> {
    let want = expected().lc_orbit_count(n)?;
    let diff = if want == got {
        Vec::new()
    } else {
        vec![format!("LC orbits n={n}: expected {want}, got {got}")]
    };
    Some(Comparison::from_diff(diff))
}

/// One non-LC-bent orbit as matched against the published table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Match {
    pub record: OrbitRecord,
    /// Published representative in the same orbit, if any.
    pub listed_rep: Option<String>,
}

/// Matches computed non-LC-bent orbits against the published row for `n`.
pub fn check_table1(n: usize, found: &[OrbitRecord]) -> Result<(Vec<Table1Match>, Comparison)> {
    let row = expected()
        .table1_row(n)
        .ok_or_else(|| Error::Invalid(format!("no published table row for n = {n}")))?;
    let mut diff = Vec::new();
    let mut matches: Vec<Table1Match> = found
        .iter()
        .map(|r| Table1Match {
            record: r.clone(),
            listed_rep: None,
        })
        .collect();
    let mut used = BTreeSet::new();
    for listed in &row.orbits {
        let key = orbit_key(&GraphState::parse(&listed.rep, n)?)?;
        match matches.iter_mut().position(|m| m.record.key == key) {
            Some(i) => {
                used.insert(i);
                matches[i].listed_rep = Some(listed.rep.clone());
                if matches[i].record.max_rank != listed.max_rank {
                    diff.push(format!(
                        "n={n} orbit of {}: expected max rank {}, got {}",
                        listed.rep, listed.max_rank, matches[i].record.max_rank
                    ));
                }
            }
            None => diff.push(format!("n={n}: no computed orbit matches {}", listed.rep)),
        }
    }
    let rest: Vec<&Table1Match> = matches
        .iter()
        .enumerate()
        .filter(|(i, _)| !used.contains(i))
        .map(|(_, m)| m)
        .collect();
    match &row.unlisted {
        Some(u) => {
            if rest.len() != u.count {
                diff.push(format!(
                    "n={n}: expected {} further orbits, got {}",
                    u.count,
                    rest.len()
                ));
            }
            for m in rest.iter().filter(|m| m.record.max_rank != u.max_rank) {
                diff.push(format!(
                    "n={n} orbit {}: expected max rank {}, got {}",
                    m.record.representative, u.max_rank, m.record.max_rank
                ));
            }
        }
        None => {
            for m in rest {
                diff.push(format!(
                    "n={n}: unexpected orbit {} (max rank {})",
                    m.record.representative, m.record.max_rank
                ));
            }
        }
    }
    Ok((matches, Comparison::from_diff(diff)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_parses() {
        let e = expected();
        assert_eq!(e.lc_orbit_count(7), Some(26));
        assert_eq!(e.lc_orbit_count(0), None);
        assert_eq!(e.table1_row(8).unwrap().orbits.len(), 5);
        assert_eq!(
            e.census_count(5, 3, Criterion::Bent4).unwrap().count,
            252336
        );
        assert!(e.census_count(5, 4, Criterion::IBent).unwrap().long_run);
        let ten = e.table1_row(10).unwrap();
        assert!(ten.long_run);
        assert_eq!(ten.unlisted.as_ref().unwrap().count, 51);
    }

    #[test]
    fn listed_reps_parse() {
        for row in &expected().table1 {
            for o in &row.orbits {
                let g = GraphState::parse(&o.rep, row.n).unwrap();
                assert!(g.is_connected(), "{}", o.rep);
            }
        }
    }

    #[test]
    fn orbit_count_comparison() {
        assert!(check_orbit_count(5, 4).unwrap().pass);
        assert!(!check_orbit_count(5, 5).unwrap().pass);
        assert!(check_orbit_count(40, 1).is_none());
    }
}
