//! Gaussian-integer engine for `{I,H,N}^n` flatness searches.
//!
//! `H` and `N` have entries in `ℤ[i]`, so on a ±1 input every spectrum of the
//! set lives in `ℤ[i]` as well. This engine keeps `(re, im)` pairs in `i32`
//! (`|re| + |im| ≤ 2^n`) and walks specs depth-first, sharing each partial
//! transform among all specs with the same prefix. It agrees exactly with the
//! `ℤ[ω]` path in the parent module; tests check that.

use super::Axis;
use crate::boolfun::MAX_VARS;

pub type Gauss = [i32; 2];

/// Allowed axes per position, as a bit mask over `I = 1, H = 2, N = 4`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AxisSet(u8);

impl AxisSet {
    pub const IH: AxisSet = AxisSet(0b011);
    pub const HN: AxisSet = AxisSet(0b110);
    pub const IHN: AxisSet = AxisSet(0b111);
    pub const H: AxisSet = AxisSet(0b010);

    pub fn contains(self, a: Axis) -> bool {
        self.0 >> (a as u8) & 1 == 1
    }
}

/// What the search looks for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Want {
    Flat,
    NonFlat,
}

/// A depth-first spec search.
#[derive(Clone, Copy, Debug)]
pub struct Query {
    pub allowed: AxisSet,
    pub want: Want,
    /// Skip the all-identity spec.
    pub skip_identity: bool,
}

/// Reusable buffers for repeated searches at one `n`.
pub struct Searcher {
    n: usize,
    bufs: Vec<Vec<Gauss>>,
    spec: Vec<Axis>,
}

impl Searcher {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        Searcher {
            n,
            bufs: vec![vec![[0, 0]; 1 << n]; n + 1],
            spec: vec![Axis::I; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Loads `(−1)^{p(x)}` from a 0/1 truth table.
    pub fn load_table(&mut self, t: &[u8]) {
        assert_eq!(t.len(), 1 << self.n);
        for (d, &b) in self.bufs[0].iter_mut().zip(t) {
            *d = [1 - 2 * (b as i32 & 1), 0];
        }
    }

    /// Loads `(−1)^{p(x)}` from a packed truth table, bit `x` = `p(x)`.
    pub fn load_bits(&mut self, bits: u128) {
        debug_assert!(self.n <= 7);
        for (x, d) in self.bufs[0].iter_mut().enumerate() {
            *d = [1 - 2 * ((bits >> x) & 1) as i32, 0];
        }
    }

    /// Full spectrum of the loaded function for one spec.
    pub fn spectrum(&mut self, axes: &[Axis]) -> Vec<Gauss> {
        assert_eq!(axes.len(), self.n);
        let mut cur = 0;
        for (pos, &a) in axes.iter().enumerate() {
            if a != Axis::I {
                let (src, dst) = split2(&mut self.bufs, cur, cur + 1);
                apply(src, dst, self.n, pos, a);
                cur += 1;
            }
        }
        self.bufs[cur].clone()
    }

    /// First spec in lexicographic `I < H < N` order (position 0 most
    /// significant) whose flatness matches the query.
    pub fn find(&mut self, q: Query) -> Option<Vec<Axis>> {
        if self.dfs(0, 0, q) {
            Some(self.spec.clone())
        } else {
            None
        }
    }

    /// True when some spec matches the query.
    pub fn exists(&mut self, q: Query) -> bool {
        self.dfs(0, 0, q)
    }

    fn dfs(&mut self, pos: usize, cur: usize, q: Query) -> bool {
        if pos == self.n {
            if q.skip_identity && cur == 0 {
                return false;
            }
            // real-valued {I,H} spectra cannot be flat with an odd number of H
            if q.allowed == AxisSet::IH && cur % 2 == 1 {
                return q.want == Want::NonFlat;
            }
            let flat = is_flat(&self.bufs[cur], cur);
            return flat == (q.want == Want::Flat);
        }
        for a in Axis::ALL {
            if !q.allowed.contains(a) {
                continue;
            }
            self.spec[pos] = a;
            let next = if a == Axis::I {
                cur
            } else {
                let (src, dst) = split2(&mut self.bufs, cur, cur + 1);
                apply(src, dst, self.n, pos, a);
                cur + 1
            };
            if self.dfs(pos + 1, next, q) {
                return true;
            }
        }
        false
    }
}

fn split2(bufs: &mut [Vec<Gauss>], a: usize, b: usize) -> (&[Gauss], &mut [Gauss]) {
    debug_assert!(a < b);
    let (lo, hi) = bufs.split_at_mut(b);
    (&lo[a], &mut hi[0])
}

/// One `H` or `N` butterfly from `src` into `dst`.
#[inline]
pub fn apply(src: &[Gauss], dst: &mut [Gauss], n: usize, pos: usize, a: Axis) {
    let stride = 1usize << (n - 1 - pos);
    let len = src.len();
    let mut base = 0;
    while base < len {
        for i in base..base + stride {
            let [ar, ai] = src[i];
            let [br, bi] = src[i + stride];
            match a {
                Axis::H => {
                    dst[i] = [ar + br, ai + bi];
                    dst[i + stride] = [ar - br, ai - bi];
                }
                Axis::N => {
                    // a ± i·b, i·b = (−bi, br)
                    dst[i] = [ar - bi, ai + br];
                    dst[i + stride] = [ar + bi, ai - br];
                }
                Axis::I => {
                    dst[i] = src[i];
                    dst[i + stride] = src[i + stride];
                }
            }
        }
        base += 2 * stride;
    }
}

/// Every entry has `|z|² = 2^weight`.
#[inline]
pub fn is_flat(v: &[Gauss], weight: usize) -> bool {
    let target = 1i64 << weight;
    v.iter()
        .all(|&[r, i]| (r as i64) * (r as i64) + (i as i64) * (i as i64) == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfun::BooleanFunction;
    use crate::cyclo::CyclotomicInt;
    use crate::transform::{all_ihn_spectra, TransformSpec};

    #[test]
    fn agrees_with_exact_path() {
        for text in ["0.1.2+1.3", "0.1+2.3", "0.1.2.3+0+2.3", ""] {
            let p = BooleanFunction::parse_anf(text, 4).unwrap();
            let mut s = Searcher::new(4);
            s.load_table(&p.truth_table());
            for (spec, v) in all_ihn_spectra(&p).unwrap() {
                let fast = s.spectrum(spec.axes());
                assert_eq!(fast.len(), v.entries().len());
                for (&[re, im], e) in fast.iter().zip(v.entries()) {
                    assert_eq!(CyclotomicInt::gaussian(re as i64, im as i64), *e, "{spec}");
                }
                assert_eq!(is_flat(&fast, spec.weight()), v.is_flat());
            }
        }
    }

    #[test]
    fn search_order_is_lexicographic() {
        let p = BooleanFunction::parse_anf("0.1", 2).unwrap();
        let mut s = Searcher::new(2);
        s.load_table(&p.truth_table());
        let q = Query {
            allowed: AxisSet::IHN,
            want: Want::Flat,
            skip_identity: true,
        };
        assert_eq!(TransformSpec::new(s.find(q).unwrap()).to_string(), "IN");
        let q = Query {
            allowed: AxisSet::HN,
            want: Want::Flat,
            skip_identity: false,
        };
        assert_eq!(TransformSpec::new(s.find(q).unwrap()).to_string(), "HH");
        let q = Query {
            allowed: AxisSet::IH,
            want: Want::NonFlat,
            skip_identity: true,
        };
        assert_eq!(TransformSpec::new(s.find(q).unwrap()).to_string(), "IH");
    }

    #[test]
    fn packed_and_byte_tables_match() {
        let p = BooleanFunction::parse_anf("0.1.2+3.4+1", 5).unwrap();
        let t = p.truth_table();
        let bits = t
            .iter()
            .enumerate()
            .fold(0u128, |acc, (x, &b)| acc | (b as u128) << x);
        let mut a = Searcher::new(5);
        let mut b = Searcher::new(5);
        a.load_table(&t);
        b.load_bits(bits);
        let axes = [Axis::H, Axis::N, Axis::I, Axis::N, Axis::H];
        assert_eq!(a.spectrum(&axes), b.spectrum(&axes));
    }
}
