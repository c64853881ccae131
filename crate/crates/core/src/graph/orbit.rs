//! LC orbits: labelled closure, closure up to isomorphism, and the partition
//! of all connected graph classes into LC classes.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use super::canon::{canonical_code, MAX_CANON_VARS};
use super::generate::enumerate_connected_graphs;
use super::GraphState;
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Largest `n` classified (with `long_run`; 9 without).
pub const MAX_ORBIT_VARS: usize = 10;

/// Largest rank Γ can have on `n` vertices. Ranks of symmetric zero-diagonal
/// matrices are even, so for odd `n` this is `n − 1`.
pub fn full_rank(n: usize) -> usize {
    n & !1
}

/// Graphs processed per union-find batch.
const BATCH: usize = 1 << 16;

/// One LC orbit of connected graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    /// Canonical member with the smallest code; also the orbit key.
    #[serde(serialize_with = "ser_graph")]
    pub representative: GraphState,
    pub key: u64,
    /// Isomorphism classes in the orbit.
    pub classes: usize,
    /// Labelled graphs reachable from the representative, when computed.
    pub labeled_size: Option<usize>,
    /// Largest GF(2) rank of Γ over the orbit.
    pub max_rank: usize,
    /// `max_rank` equals [`full_rank`].
    pub lc_bent: bool,
}

fn ser_graph<S: serde::Serializer>(g: &GraphState, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_string())
}

/// Every connected class on `n` vertices with its LC orbit.
#[derive(Clone, Debug)]
pub struct Classification {
    pub n: usize,
    /// Canonical codes of all connected classes, ascending.
    pub codes: Vec<u64>,
    /// Orbit index of each class (into `orbits`).
    pub orbit_of: Vec<u32>,
    /// Orbits ordered by key.
    pub orbits: Vec<OrbitRecord>,
}

impl Classification {
    /// Orbit containing the class of `g`.
    pub fn orbit_of_graph(&self, g: &GraphState) -> Option<&OrbitRecord> {
        let c = canonical_code(g);
        let i = self.codes.binary_search(&c).ok()?;
        Some(&self.orbits[self.orbit_of[i] as usize])
    }

    pub fn non_lc_bent(&self) -> impl Iterator<Item = &OrbitRecord> {
        self.orbits.iter().filter(|o| !o.lc_bent)
    }
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let p = self.0[x as usize];
            self.0[x as usize] = self.0[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b) as usize] = a.min(b);
        }
    }
}

fn check_orbit_cap(n: usize, long_run: bool) -> Result<()> {
    let cap = if long_run {
        MAX_ORBIT_VARS
    } else {
        MAX_ORBIT_VARS - 1
    };
    if n > cap {
        return Err(Error::CapExceeded {
            what: "LC-orbit classification",
            n,
            cap,
            hint: if long_run {
                ""
            } else {
                " (pass the long-run flag for n = 10)"
            },
        });
    }
    Ok(())
}

/// Partitions all connected graph classes on `n` vertices into LC orbits.
pub fn classify_lc_orbits(n: usize, long_run: bool, exec: Exec) -> Result<Classification> {
    check_orbit_cap(n, long_run)?;
    let graphs = enumerate_connected_graphs(n, long_run, exec)?;
    let codes: Vec<u64> = graphs.iter().map(|g| g.code()).collect();
    let mut uf = UnionFind((0..graphs.len() as u32).collect());
    let mut ranks = Vec::with_capacity(graphs.len());
    for (b, chunk) in graphs.chunks(BATCH).enumerate() {
        let base = b * BATCH;
        let sub: Vec<&[GraphState]> = chunk.chunks(1024).collect();
        let parts = exec.map_collect(&sub, |gs| {
            gs.iter()
                .map(|g| {
                    let nbrs: Vec<u32> = (0..n)
                        .map(|v| {
                            let c = canonical_code(&g.local_complement(v));
                            codes.binary_search(&c).expect("LC keeps a graph connected") as u32
                        })
                        .collect();
                    (g.rank(), nbrs)
                })
                .collect::<Vec<_>>()
        });
        for (i, (rank, nbrs)) in parts.into_iter().flatten().enumerate() {
            ranks.push(rank);
            for j in nbrs {
                uf.union((base + i) as u32, j);
            }
        }
    }
    // roots are the smallest index, hence the smallest code, of each orbit
    let mut orbit_index = vec![u32::MAX; graphs.len()];
    let mut orbits: Vec<OrbitRecord> = Vec::new();
    let mut orbit_of = Vec::with_capacity(graphs.len());
    for i in 0..graphs.len() {
        let r = uf.find(i as u32) as usize;
        if orbit_index[r] == u32::MAX {
            orbit_index[r] = orbits.len() as u32;
            orbits.push(OrbitRecord {
                representative: graphs[r],
                key: codes[r],
                classes: 0,
                labeled_size: None,
                max_rank: 0,
                lc_bent: false,
            });
        }
        let o = &mut orbits[orbit_index[r] as usize];
        o.classes += 1;
        o.max_rank = o.max_rank.max(ranks[i]);
        o.lc_bent = o.max_rank == full_rank(n);
        orbit_of.push(orbit_index[r]);
    }
    Ok(Classification {
        n,
        codes,
        orbit_of,
        orbits,
    })
}

/// Number of LC orbits of connected graphs on `n` vertices.
pub fn count_lc_orbits(n: usize, long_run: bool, exec: Exec) -> Result<usize> {
    Ok(classify_lc_orbits(n, long_run, exec)?.orbits.len())
}

/// Orbits with no full-rank member, with labelled orbit sizes filled in.
pub fn non_lc_bent_orbits(n: usize, long_run: bool, exec: Exec) -> Result<Vec<OrbitRecord>> {
    let c = classify_lc_orbits(n, long_run, exec)?;
    Ok(with_labeled_sizes(c.non_lc_bent().cloned().collect()))
}

pub(crate) fn with_labeled_sizes(mut recs: Vec<OrbitRecord>) -> Vec<OrbitRecord> {
    for r in &mut recs {
        let size = lc_orbit_labeled(&r.representative).len();
        assert!(
            size as u64 <= 3u64.pow(r.representative.n() as u32),
            "labelled orbit exceeds 3^n"
        );
        r.labeled_size = Some(size);
    }
    recs
}

/// LC orbit of `g`; up to isomorphism the members are canonical forms.
pub fn lc_orbit(g: &GraphState, up_to_iso: bool) -> Result<Vec<GraphState>> {
    if !up_to_iso {
        let mut v: Vec<GraphState> = lc_orbit_labeled(g).into_iter().collect();
        v.sort();
        return Ok(v);
    }
    if g.n() > MAX_CANON_VARS {
        return Err(Error::CapExceeded {
            what: "LC orbit up to isomorphism",
            n: g.n(),
            cap: MAX_CANON_VARS,
            hint: "",
        });
    }
    let start = canonical_code(g);
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        let h = GraphState::from_code(g.n(), c);
        for v in 0..g.n() {
            let d = canonical_code(&h.local_complement(v));
            if seen.insert(d) {
                queue.push_back(d);
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|c| GraphState::from_code(g.n(), c))
        .collect())
}

/// Labelled closure of `{g}` under local complementation.
pub fn lc_orbit_labeled(g: &GraphState) -> HashSet<GraphState> {
    let mut seen = HashSet::from([*g]);
    let mut queue = VecDeque::from([*g]);
    while let Some(h) = queue.pop_front() {
        for v in 0..h.n() {
            let d = h.local_complement(v);
            if seen.insert(d) {
                queue.push_back(d);
            }
        }
    }
    seen
}

/// Smallest canonical code in the LC orbit of `g`.
pub fn orbit_key(g: &GraphState) -> Result<u64> {
    Ok(lc_orbit(g, true)?[0].code())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str, n: usize) -> GraphState {
        GraphState::parse(text, n).unwrap()
    }

    #[test]
    fn tiny_orbits() {
        assert_eq!(lc_orbit(&GraphState::empty(1), false).unwrap().len(), 1);
        let star = g("01,02,03", 4);
        let orbit = lc_orbit(&star, false).unwrap();
        assert!(orbit.contains(&GraphState::complete(4)));
        assert_eq!(
            orbit_key(&star).unwrap(),
            orbit_key(&GraphState::complete(4)).unwrap()
        );
    }

    #[test]
    fn orbit_closed_under_lc() {
        let p = g("01,12,23,34,45,50", 6);
        let key = orbit_key(&p).unwrap();
        for v in 0..6 {
            assert_eq!(orbit_key(&p.local_complement(v)).unwrap(), key);
        }
        let labeled = lc_orbit(&p, false).unwrap();
        assert!(labeled.len() as u64 <= 3u64.pow(6));
        let iso: BTreeSet<u64> = labeled.iter().map(canonical_code).collect();
        let direct: BTreeSet<u64> = lc_orbit(&p, true)
            .unwrap()
            .iter()
            .map(|h| h.code())
            .collect();
        assert_eq!(iso, direct);
    }

    #[test]
    fn table_row_six_has_rank_four() {
        let rep = g("04,15,25,34,45", 6);
        let orbit = lc_orbit(&rep, false).unwrap();
        assert_eq!(orbit.iter().map(|h| h.rank()).max(), Some(4));
    }

    #[test]
    fn small_orbit_counts_and_modes() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| count_lc_orbits(n, false, Exec::Sequential).unwrap())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 4, 11]);
        let a = classify_lc_orbits(6, false, Exec::Sequential).unwrap();
        let b = classify_lc_orbits(6, false, Exec::Parallel).unwrap();
        assert_eq!(a.orbits, b.orbits);
        assert!(count_lc_orbits(10, false, Exec::Sequential).is_err());
    }

    #[test]
    fn non_bent_orbit_at_six() {
        let recs = non_lc_bent_orbits(6, false, Exec::Sequential).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].max_rank, 4);
        assert_eq!(recs[0].key, orbit_key(&g("04,15,25,34,45", 6)).unwrap());
        assert!(recs[0].labeled_size.unwrap() > 0);
        assert!(non_lc_bent_orbits(5, false, Exec::Sequential)
            .unwrap()
            .is_empty());
    }
}
