//! Graph states: quadratic boolean functions viewed as simple graphs.

mod bitmatrix;
mod canon;
mod generate;
mod orbit;

use std::fmt;

use crate::boolfun::{BooleanFunction, Monomial, VarSet, MAX_COMPACT_VARS, MAX_VARS};
use crate::error::{Error, Result};

pub use bitmatrix::{gf2_rank, gf2_rank_rows, principal_submatrix, BitMatrix};
pub use canon::{canonical_form, Canonical, MAX_CANON_VARS};
pub use generate::{enumerate_connected_graphs, MAX_GENERATE_VARS};
pub use orbit::{
    classify_lc_orbits, count_lc_orbits, full_rank, lc_orbit, lc_orbit_labeled, non_lc_bent_orbits,
    orbit_key, Classification, OrbitRecord, MAX_ORBIT_VARS,
};

/// Symmetric zero-diagonal adjacency matrix Γ on `n ≤ 16` vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphState {
    n: u8,
    rows: [u16; MAX_VARS],
}

impl GraphState {
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= MAX_VARS,
            "graph states are limited to {MAX_VARS} vertices"
        );
        GraphState {
            n: n as u8,
            rows: [0; MAX_VARS],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            g.rows[i] = (((1u32 << n) - 1) as u16) & !(1 << i);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::CapExceeded {
                what: "graph state",
                n,
                cap: MAX_VARS,
                hint: "",
            });
        }
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange { index: a.max(b), n });
            }
            if a == b {
                return Err(Error::Invalid(format!("self-loop at vertex {a}")));
            }
            g.set_edge(a, b, true);
        }
        Ok(g)
    }

    /// Parses the compact pair format, e.g. `"04,15,25"`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let f = BooleanFunction::parse_anf(text, n)?;
        Self::from_quadratic(&f)
    }

    /// Graph of the quadratic part of `f`; linear and constant terms are
    /// dropped (see [`affine_part`]).
    pub fn from_quadratic(f: &BooleanFunction) -> Result<Self> {
        if f.degree() > 2 {
            return Err(Error::NotQuadratic(f.degree()));
        }
        let mut g = Self::empty(f.n());
        for m in f.monomials().filter(|m| m.degree() == 2) {
            let v: Vec<usize> = m.vars().iter().collect();
            g.set_edge(v[0], v[1], true);
        }
        Ok(g)
    }

    /// `Σ_{i<j} Γ(i,j) x_i x_j`.
    pub fn to_quadratic(&self) -> BooleanFunction {
        BooleanFunction::from_monomials(
            self.n(),
            self.edges()
                .into_iter()
                .map(|(a, b)| Monomial::new(VarSet::from_indices([a, b]))),
        )
        .expect("edges are distinct and in range")
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn set_edge(&mut self, a: usize, b: usize, on: bool) {
        debug_assert!(a != b);
        if on {
            self.rows[a] |= 1 << b;
            self.rows[b] |= 1 << a;
        } else {
            self.rows[a] &= !(1 << b);
            self.rows[b] &= !(1 << a);
        }
    }

    /// Neighbourhood of `v` as a bit mask.
    pub fn neighbors(&self, v: usize) -> u16 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u16] {
        &self.rows[..self.n()]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(a, b)`, `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|a| {
                (a + 1..n)
                    .filter(move |&b| self.has_edge(a, b))
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let all = ((1u32 << n) - 1) as u16;
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.rows[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == all
    }

    /// Connectivity after deleting `v`.
    pub fn is_connected_without(&self, v: usize) -> bool {
        self.delete_vertex(v).is_connected()
    }

    /// Removes `v`; later vertices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> GraphState {
        let n = self.n();
        let mut g = GraphState::empty(n - 1);
        let squeeze = |r: u16| -> u16 {
            let low = r & ((1 << v) - 1);
            let high = (r >> (v + 1)) << v;
            low | high
        };
        let mut k = 0;
        for i in 0..n {
            if i != v {
                g.rows[k] = squeeze(self.rows[i]);
                k += 1;
            }
        }
        g
    }

    /// Adds a vertex `n` adjacent to the mask `nbrs`.
    pub fn add_vertex(&self, nbrs: u16) -> GraphState {
        let n = self.n();
        let mut g = *self;
        g.n += 1;
        g.rows[n] = nbrs;
        for i in 0..n {
            if nbrs >> i & 1 == 1 {
                g.rows[i] |= 1 << n;
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> GraphState {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut g = GraphState::empty(n);
        for (a, b) in self.edges() {
            g.set_edge(perm[a], perm[b], true);
        }
        g
    }

    /// Local complementation at `v`: `Γ(i,j) += Γ(v,i)·Γ(v,j)` off the diagonal.
    pub fn local_complement(&self, v: usize) -> GraphState {
        assert!(v < self.n(), "vertex {v} out of range");
        let nb = self.rows[v];
        let mut g = *self;
        let mut m = nb;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            g.rows[i] ^= nb & !(1 << i);
        }
        g
    }

    /// Γ as a bit matrix.
    pub fn adjacency(&self) -> BitMatrix {
        BitMatrix::from_rows(self.n(), self.rows().iter().map(|&r| r as u32).collect())
    }

    /// GF(2) rank of Γ.
    pub fn rank(&self) -> usize {
        gf2_rank_rows(self.rows().iter().map(|&r| r as u32).collect())
    }

    /// Upper triangle `(0,1), (0,2), …, (0,n-1), (1,2), …` read as a binary
    /// number, first pair most significant. Needs `n ≤ 11`.
    pub fn code(&self) -> u64 {
        let n = self.n();
        debug_assert!(n <= 11);
        let mut c = 0u64;
        for a in 0..n {
            for b in a + 1..n {
                c = c << 1 | self.has_edge(a, b) as u64;
            }
        }
        c
    }

    pub fn from_code(n: usize, code: u64) -> GraphState {
        let mut g = GraphState::empty(n);
        let mut bit = n * n.saturating_sub(1) / 2;
        for a in 0..n {
            for b in a + 1..n {
                bit -= 1;
                if code >> bit & 1 == 1 {
                    g.set_edge(a, b, true);
                }
            }
        }
        g
    }

    /// Compact pair format (`"04,15"`), for `n ≤ 10`.
    pub fn to_compact(&self) -> Option<String> {
        if self.n() > MAX_COMPACT_VARS {
            return None;
        }
        Some(
            self.edges()
                .iter()
                .map(|(a, b)| format!("{a}{b}"))
                .collect::<Vec<_>>()
                .join(","),
        )
    }

    /// Is the graph bipartite with every edge crossing `part`?
    pub fn is_bipartite_with(&self, part: VarSet) -> bool {
        let p = part.0 as u16;
        (0..self.n()).all(|v| {
            let same = if p >> v & 1 == 1 { p } else { !p };
            self.rows[v] & same == 0
        })
    }

    /// A bipartition side containing vertex 0 of each component, if bipartite.
    pub fn bipartition(&self) -> Option<VarSet> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in 0..n {
                    if self.has_edge(v, u) {
                        if color[u] == u8::MAX {
                            color[u] = 1 - color[v];
                            stack.push(u);
                        } else if color[u] == color[v] {
                            return None;
                        }
                    }
                }
            }
        }
        Some(VarSet::from_indices((0..n).filter(|&v| color[v] == 0)))
    }
}

/// Constant and linear terms of a function of degree ≤ 2.
pub fn affine_part(f: &BooleanFunction) -> BooleanFunction {
    BooleanFunction::from_monomials_xor(f.n(), f.monomials().filter(|m| m.degree() < 2))
}

/// Γ with diagonal replaced by `v`.
pub fn modified_diagonal(g: &GraphState, v: VarSet) -> BitMatrix {
    let mut m = g.adjacency();
    for i in 0..g.n() {
        m.set(i, i, v.contains(i));
    }
    m
}

impl fmt::Debug for GraphState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        write!(f, "GraphState(n={}, [{}])", self.n, edges.join(" "))
    }
}

impl fmt::Display for GraphState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_compact() {
            Some(s) => f.write_str(&s),
            None => f.write_str(&self.to_quadratic().to_string()),
        }
    }
}
