//! Additive codes of graph states: `Γ + ωI` over GF(4), `2Γ + I` over ℤ₄,
//! their weight distributions, and the binary codes of bipartite graphs.

use std::fmt;

use serde::Serialize;

use crate::boolfun::{BooleanFunction, VarSet, MAX_VARS};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{gf2_rank_rows, GraphState};
use crate::transform::{apply_transform, bipolar, Axis, TransformSpec};

/// `a·ω + b·ω̄` in GF(4), so `1 = ω + ω̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gf4 {
    pub a: bool,
    pub b: bool,
}

impl Gf4 {
    pub const ZERO: Gf4 = Gf4 { a: false, b: false };
    pub const ONE: Gf4 = Gf4 { a: true, b: true };
    pub const OMEGA: Gf4 = Gf4 { a: true, b: false };
    pub const OMEGA_BAR: Gf4 = Gf4 { a: false, b: true };

    pub fn is_zero(self) -> bool {
        !self.a && !self.b
    }
}

impl std::ops::Add for Gf4 {
    type Output = Gf4;

    fn add(self, o: Gf4) -> Gf4 {
        Gf4 {
            a: self.a ^ o.a,
            b: self.b ^ o.b,
        }
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match (self.a, self.b) {
            (false, false) => "0",
            (true, true) => "1",
            (true, false) => "w",
            (false, true) => "W",
        };
        f.write_str(s)
    }
}

/// Square generator matrix over GF(4).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf4Matrix {
    rows: Vec<Vec<Gf4>>,
}

/// Square generator matrix over ℤ₄.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4Matrix {
    rows: Vec<Vec<u8>>,
}

impl Gf4Matrix {
    pub fn rows(&self) -> &[Vec<Gf4>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        self.rows[i][j]
    }
}

impl Z4Matrix {
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i][j]
    }
}

/// A generator whose code is the set of GF(2) combinations of its rows.
pub trait AdditiveGenerator: Sync {
    fn len(&self) -> usize;

    /// Hamming weight of the sum of the rows selected by the bits of `sel`.
    fn combination_weight(&self, sel: u32) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl AdditiveGenerator for Gf4Matrix {
    fn len(&self) -> usize {
        self.rows.len()
    }

    fn combination_weight(&self, sel: u32) -> usize {
        let n = self.rows.len();
        let mut word = vec![Gf4::ZERO; n];
        for (i, row) in self.rows.iter().enumerate() {
            if sel >> i & 1 == 1 {
                for (w, &e) in word.iter_mut().zip(row) {
                    *w = *w + e;
                }
            }
        }
        word.iter().filter(|e| !e.is_zero()).count()
    }
}

impl AdditiveGenerator for Z4Matrix {
    fn len(&self) -> usize {
        self.rows.len()
    }

    fn combination_weight(&self, sel: u32) -> usize {
        let n = self.rows.len();
        let mut word = vec![0u8; n];
        for (i, row) in self.rows.iter().enumerate() {
            if sel >> i & 1 == 1 {
                for (w, &e) in word.iter_mut().zip(row) {
                    *w = (*w + e) & 3;
                }
            }
        }
        word.iter().filter(|&&e| e != 0).count()
    }
}

impl fmt::Display for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for Z4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `Γ + ωI`.
pub fn gf4_generator(g: &GraphState) -> Gf4Matrix {
    let n = g.n();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, g.has_edge(i, j)) {
                    (true, _) => Gf4::OMEGA,
                    (false, true) => Gf4::ONE,
                    (false, false) => Gf4::ZERO,
                })
                .collect()
        })
        .collect();
    Gf4Matrix { rows }
}

/// `2Γ + I`.
pub fn z4_generator(g: &GraphState) -> Z4Matrix {
    let n = g.n();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        1
                    } else {
                        2 * g.has_edge(i, j) as u8
                    }
                })
                .collect()
        })
        .collect();
    Z4Matrix { rows }
}

/// `counts[w]` codewords of Hamming weight `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightDistribution {
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    /// Smallest nonzero weight present.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Tab-separated `weight count` lines.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("weight\tcount\n");
        for (w, c) in self.counts.iter().enumerate() {
            s.push_str(&format!("{w}\t{c}\n"));
        }
        s
    }
}

/// Weights of all `2^n` GF(2) combinations of the generator rows.
pub fn weight_distribution<G: AdditiveGenerator>(
    gen: &G,
    exec: Exec,
) -> Result<WeightDistribution> {
    let n = gen.len();
    if n > MAX_VARS {
        return Err(Error::CapExceeded {
            what: "weight distribution",
            n,
            cap: MAX_VARS,
            hint: "",
        });
    }
    let empty = vec![0u64; n + 1];
    let counts = exec.map_reduce(
        0..1u64 << n,
        1 << 10,
        empty.clone(),
        |r| {
            let mut c = vec![0u64; n + 1];
            for sel in r {
                c[gen.combination_weight(sel as u32)] += 1;
            }
            c
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Ok(WeightDistribution { counts })
}

/// Binary linear code read off the `H`-on-`part` spectrum of a bipartite
/// graph state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteCode {
    pub dimension: usize,
    /// Codewords as truth-table indices, ascending.
    pub support: Vec<usize>,
    pub min_distance: Option<usize>,
}

/// Applies `H` on `part` and `I` elsewhere to `(−1)^{f}`, checks that the
/// result is a scaled 0/1 indicator whose support is a GF(2) subspace, and
/// returns that code.
pub fn bipartite_code_check(f: &BooleanFunction, part: VarSet) -> Result<BipartiteCode> {
    let n = f.n();
    let g = GraphState::from_quadratic(f)?;
    if !g.is_bipartite_with(part) {
        return Err(Error::NotBipartite);
    }
    let spec = TransformSpec::new(
        (0..n)
            .map(|j| if part.contains(j) { Axis::H } else { Axis::I })
            .collect(),
    );
    let s = apply_transform(&bipolar(&g.to_quadratic()), &spec)?;
    let mut value = None;
    let mut support = Vec::new();
    for (x, &e) in s.entries().iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        match value {
            None => value = Some(e),
            Some(v) if v != e => {
                return Err(Error::Invalid(format!(
                    "spectrum is not an indicator at index {x}"
                )));
            }
            _ => {}
        }
        support.push(x);
    }
    let rank = gf2_rank_rows(support.iter().map(|&x| x as u32).collect());
    let linear = support.first() == Some(&0) && support.len() == 1usize << rank;
    if !linear {
        return Err(Error::Invalid(
            "indicator support is not closed under addition".into(),
        ));
    }
    let min_distance = support
        .iter()
        .skip(1)
        .map(|&x| x.count_ones() as usize)
        .min();
    Ok(BipartiteCode {
        dimension: rank,
        support,
        min_distance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::lc_orbit;

    fn g(text: &str, n: usize) -> GraphState {
        GraphState::parse(text, n).unwrap()
    }

    #[test]
    fn generators() {
        let one = gf4_generator(&GraphState::empty(1));
        assert_eq!(one.rows(), &[vec![Gf4::OMEGA]]);
        let k2 = gf4_generator(&GraphState::complete(2));
        assert_eq!(
            k2.rows(),
            &[vec![Gf4::OMEGA, Gf4::ONE], vec![Gf4::ONE, Gf4::OMEGA]]
        );
        assert_eq!(
            z4_generator(&GraphState::complete(2)).rows(),
            &[vec![1, 2], vec![2, 1]]
        );
        let t = gf4_generator(&g("04,15,25,34,45", 6));
        let ones = (0..6)
            .flat_map(|i| (0..6).map(move |j| (i, j)))
            .filter(|&(i, j)| t.get(i, j) == Gf4::ONE)
            .count();
        assert_eq!(ones, 10);
        assert!((0..6).all(|i| t.get(i, i) == Gf4::OMEGA));
    }

    #[test]
    fn small_distributions() {
        let wd =
            weight_distribution(&gf4_generator(&GraphState::empty(1)), Exec::Sequential).unwrap();
        assert_eq!(wd.counts, vec![1, 1]);
        let wd = weight_distribution(&gf4_generator(&GraphState::complete(2)), Exec::Sequential)
            .unwrap();
        assert_eq!(wd.counts, vec![1, 0, 3]);
        assert_eq!(wd.min_distance(), Some(2));
        let star = weight_distribution(&gf4_generator(&g("01,02", 3)), Exec::Sequential).unwrap();
        let tri =
            weight_distribution(&gf4_generator(&GraphState::complete(3)), Exec::Parallel).unwrap();
        assert_eq!(star, tri);
        assert_eq!(star.total(), 8);
    }

    #[test]
    fn gf4_and_z4_agree_along_an_orbit() {
        let p = g("01,12,23,34", 5);
        let base = weight_distribution(&gf4_generator(&p), Exec::Sequential).unwrap();
        for h in lc_orbit(&p, false).unwrap() {
            assert_eq!(
                weight_distribution(&gf4_generator(&h), Exec::Sequential).unwrap(),
                base
            );
            assert_eq!(
                weight_distribution(&z4_generator(&h), Exec::Sequential).unwrap(),
                base
            );
        }
    }

    #[test]
    fn bipartite_codes() {
        let f = |t: &str, n| BooleanFunction::parse_anf(t, n).unwrap();
        let c = bipartite_code_check(&f("0.1", 2), VarSet::singleton(0)).unwrap();
        assert_eq!((c.dimension, c.support.clone()), (1, vec![0b00, 0b11]));
        let c = bipartite_code_check(&f("0.1+0.2", 3), VarSet::singleton(0)).unwrap();
        assert_eq!(c.dimension, 2);
        assert_eq!(c.support.len(), 4);
        let c = bipartite_code_check(&BooleanFunction::zero(3), VarSet::EMPTY).unwrap();
        assert_eq!(c.dimension, 3);
        assert!(matches!(
            bipartite_code_check(&f("0.1+1.2+0.2", 3), VarSet::singleton(0)),
            Err(Error::NotBipartite)
        ));
    }
}
