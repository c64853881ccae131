//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first non-singleton cell,
//! recurse. Each discrete leaf induces a relabelling; the canonical form is the
//! relabelled graph whose upper-triangle code is smallest among the leaves.
//! Leaves with equal codes give automorphisms, which prune the tree: children
//! in one orbit of the prefix stabiliser are explored once, and a leaf
//! equivalent to the first leaf abandons everything back to the common
//! ancestor with the first path.

use super::GraphState;
use crate::error::{Error, Result};

/// Largest vertex count handled (the code must fit in 64 bits).
pub const MAX_CANON_VARS: usize = 11;

/// Result of canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    /// The canonical representative `g.permute(labeling)`.
    pub graph: GraphState,
    /// `graph.code()`.
    pub code: u64,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
    /// Automorphisms of the input graph discovered by the search,
    /// `gen[v]` = image of `v`.
    pub generators: Vec<Vec<usize>>,
}

impl Canonical {
    /// Orbit representative (smallest vertex) per vertex under the generators.
    pub fn orbits(&self) -> Vec<usize> {
        orbits_of(
            self.labeling.len(),
            self.generators.iter().map(|g| g.as_slice()),
        )
    }
}

fn orbits_of<'a>(n: usize, gens: impl Iterator<Item = &'a [usize]>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// Canonical form, labelling and automorphism generators of `g`.
pub fn canonical_form(g: &GraphState) -> Result<Canonical> {
    let n = g.n();
    if n > MAX_CANON_VARS {
        return Err(Error::CapExceeded {
            what: "canonical form",
            n,
            cap: MAX_CANON_VARS,
            hint: "",
        });
    }
    Ok(canonicalize(g))
}

/// Canonical upper-triangle code only.
pub(crate) fn canonical_code(g: &GraphState) -> u64 {
    canonicalize(g).code
}

pub(crate) fn canonicalize(g: &GraphState) -> Canonical {
    let n = g.n();
    assert!(n <= MAX_CANON_VARS);
    if n == 0 {
        return Canonical {
            graph: *g,
            code: 0,
            labeling: vec![],
            generators: vec![],
        };
    }
    let mut s = Search {
        g,
        n,
        first: None,
        best: None,
        gens: Vec::new(),
        prefix: Vec::with_capacity(n),
    };
    let all = ((1u32 << n) - 1) as u16;
    s.visit(vec![all]);
    let (code, order) = s.best.expect("at least one leaf");
    let mut labeling = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        labeling[v as usize] = k;
    }
    let graph = g.permute(&labeling);
    debug_assert_eq!(graph.code(), code);
    Canonical {
        graph,
        code,
        labeling,
        generators: s.gens,
    }
}

struct Leaf {
    code: u64,
    order: Vec<u8>,
    path: Vec<u8>,
}

struct Search<'a> {
    g: &'a GraphState,
    n: usize,
    first: Option<Leaf>,
    best: Option<(u64, Vec<u8>)>,
    gens: Vec<Vec<usize>>,
    prefix: Vec<u8>,
}

impl Search<'_> {
    /// Returns `Some(d)` to abandon every node deeper than depth `d`.
    fn visit(&mut self, mut cells: Vec<u16>) -> Option<usize> {
        refine(self.g, &mut cells);
        if cells.len() == self.n {
            return self.leaf(&cells);
        }
        let depth = self.prefix.len();
        let t = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition");
        let target = cells[t];
        let mut explored: Vec<usize> = Vec::new();
        let mut m = target;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if !explored.is_empty() {
                let orb = self.stabiliser_orbits();
                if explored.iter().any(|&u| orb[u] == orb[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            self.prefix.push(v as u8);
            let jump = self.visit(child);
            self.prefix.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    /// Orbits of the group generated by the automorphisms that fix the
    /// current prefix pointwise.
    fn stabiliser_orbits(&self) -> Vec<usize> {
        let prefix = &self.prefix;
        let fixing = self
            .gens
            .iter()
            .filter(|g| prefix.iter().all(|&p| g[p as usize] == p as usize));
        orbits_of(self.n, fixing.map(|g| g.as_slice()))
    }

    fn leaf(&mut self, cells: &[u16]) -> Option<usize> {
        let order: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let code = code_of_order(self.g, &order);
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                code,
                order: order.clone(),
                path: self.prefix.clone(),
            });
            self.best = Some((code, order));
            return None;
        };
        if code == first.code {
            let gamma = automorphism(&first.order, &order);
            let common = first
                .path
                .iter()
                .zip(&self.prefix)
                .take_while(|(a, b)| a == b)
                .count();
            self.push_gen(gamma);
            return Some(common);
        }
        let (best_code, best_order) = self.best.as_ref().expect("best set with first");
        match code.cmp(best_code) {
            std::cmp::Ordering::Less => self.best = Some((code, order)),
            std::cmp::Ordering::Equal => {
                let gamma = automorphism(best_order, &order);
                self.push_gen(gamma);
            }
            std::cmp::Ordering::Greater => {}
        }
        None
    }

    fn push_gen(&mut self, gamma: Vec<usize>) {
        if gamma.iter().enumerate().any(|(v, &w)| v != w) && !self.gens.contains(&gamma) {
            debug_assert!(is_automorphism(self.g, &gamma));
            self.gens.push(gamma);
        }
    }
}

/// The map sending `a[k]` to `b[k]`.
fn automorphism(a: &[u8], b: &[u8]) -> Vec<usize> {
    let mut gamma = vec![0; a.len()];
    for (x, y) in a.iter().zip(b) {
        gamma[*x as usize] = *y as usize;
    }
    gamma
}

pub(crate) fn is_automorphism(g: &GraphState, gamma: &[usize]) -> bool {
    g.permute(gamma) == *g
}

/// Code of the graph relabelled so that `order[k]` gets label `k`.
fn code_of_order(g: &GraphState, order: &[u8]) -> u64 {
    let n = order.len();
    let mut c = 0u64;
    for a in 0..n {
        let row = g.neighbors(order[a] as usize);
        for &vb in &order[a + 1..] {
            c = c << 1 | (row >> vb & 1) as u64;
        }
    }
    c
}

/// Equitable refinement of an ordered partition. Cells split by the number of
/// neighbours in each splitter cell; sub-cells are placed in ascending count
/// order, which keeps the procedure label-invariant.
fn refine(g: &GraphState, cells: &mut Vec<u16>) {
    let n = g.n();
    let mut groups = [0u16; 17];
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut x = 0;
            while x < cells.len() {
                let cell = cells[x];
                if cell.count_ones() < 2 {
                    x += 1;
                    continue;
                }
                groups[..=n].fill(0);
                let mut m = cell;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    groups[(g.neighbors(v) & splitter).count_ones() as usize] |= 1 << v;
                }
                let parts: Vec<u16> = groups[..=n].iter().copied().filter(|&p| p != 0).collect();
                if parts.len() > 1 {
                    let k = parts.len();
                    cells.splice(x..=x, parts);
                    changed = true;
                    x += k;
                } else {
                    x += 1;
                }
            }
            w += 1;
        }
        if !changed {
            break;
        }
    }
}
