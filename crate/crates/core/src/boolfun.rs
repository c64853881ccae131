//! Boolean functions in algebraic normal form, their truth tables, and the
//! ℤ₄-valued tables produced by negahadamard kernels.
//!
//! Truth-table order: index `idx = Σ_j x_j · 2^{n-1-j}`, so `x_0` is the most
//! significant bit and the last variable varies fastest. Every module in the
//! crate uses this order.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest variable count accepted for full-table operations.
pub const MAX_VARS: usize = 16;

/// Largest variable count for the compact single-digit pair format.
pub const MAX_COMPACT_VARS: usize = 10;

/// A set of variable indices stored as a bit mask (bit `j` ⇔ variable `x_j`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VarSet(pub u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn full(n: usize) -> Self {
        VarSet(if n >= 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn singleton(j: usize) -> Self {
        VarSet(1 << j)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VarSet(it.into_iter().fold(0, |m, j| m | (1 << j)))
    }

    /// Builds a set from a bit vector, `bits[j]` ⇔ `j` in the set.
    pub fn from_bits(bits: &[bool]) -> Self {
        Self::from_indices(bits.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j))
    }

    pub fn contains(self, j: usize) -> bool {
        self.0 >> j & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, j: usize) -> Self {
        VarSet(self.0 | 1 << j)
    }

    pub fn without(self, j: usize) -> Self {
        VarSet(self.0 & !(1 << j))
    }

    pub fn union(self, o: VarSet) -> Self {
        VarSet(self.0 | o.0)
    }

    pub fn intersection(self, o: VarSet) -> Self {
        VarSet(self.0 & o.0)
    }

    pub fn difference(self, o: VarSet) -> Self {
        VarSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: VarSet) -> bool {
        self.0 & !o.0 == 0
    }

    /// Largest index + 1, or 0 for the empty set.
    pub fn span(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Ascending indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(j)
            }
        })
    }

    /// Mask in truth-table index space: variable `j` ↦ bit `n-1-j`.
    pub fn to_index_mask(self, n: usize) -> usize {
        self.iter().fold(0, |m, j| m | 1 << (n - 1 - j))
    }

    pub fn from_index_mask(mask: usize, n: usize) -> Self {
        VarSet(
            (0..n)
                .filter(|&j| mask >> (n - 1 - j) & 1 == 1)
                .fold(0, |m, j| m | 1 << j),
        )
    }

    /// Bit vector of length `n`.
    pub fn to_bits(self, n: usize) -> Vec<bool> {
        (0..n).map(|j| self.contains(j)).collect()
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A monomial `∏_{j ∈ vars} x_j`; the empty monomial is the constant 1.
///
/// Ordered lexicographically by the ascending index sequence, so `[] < [0] <
/// [0,1] < [0,1,2] < [0,2] < [1]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub VarSet);

impl Monomial {
    pub const ONE: Monomial = Monomial(VarSet::EMPTY);

    pub fn new(vars: VarSet) -> Self {
        Monomial(vars)
    }

    /// Builds a monomial, rejecting repeated indices.
    pub fn from_vars(vars: &[usize]) -> Result<Self> {
        let mut set = VarSet::EMPTY;
        for &v in vars {
            if v >= 32 {
                return Err(Error::IndexOutOfRange { index: v, n: 32 });
            }
            if set.contains(v) {
                return Err(Error::MalformedToken {
                    token: format!("{vars:?}"),
                    reason: "repeated variable in monomial",
                });
            }
            set = set.with(v);
        }
        Ok(Monomial(set))
    }

    pub fn vars(self) -> VarSet {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.len()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.iter().cmp(other.0.iter())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1c");
        }
        let parts: Vec<String> = self.0.iter().map(|j| j.to_string()).collect();
        f.write_str(&parts.join("."))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

/// In-place binary Möbius transform over the index bits. It maps an ANF
/// coefficient vector to the truth table and back (it is an involution).
pub fn mobius(table: &mut [u8]) {
    let len = table.len();
    let mut step = 1;
    while step < len {
        for base in (0..len).step_by(2 * step) {
            for i in base..base + step {
                table[i + step] ^= table[i];
            }
        }
        step <<= 1;
    }
}

/// A boolean function `p : GF(2)^n → GF(2)` held by its ANF monomial set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    n: usize,
    anf: BTreeSet<Monomial>,
}

impl BooleanFunction {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS, "n = {n} exceeds {MAX_VARS}");
        BooleanFunction {
            n,
            anf: BTreeSet::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut f = Self::zero(n);
        f.anf.insert(Monomial::ONE);
        f
    }

    /// Builds a function from an explicit monomial list; duplicates are an error.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(
        n: usize,
        monomials: I,
    ) -> Result<Self> {
        check_n(n)?;
        let mut anf = BTreeSet::new();
        for m in monomials {
            if let Some(bad) = m.vars().iter().find(|&j| j >= n) {
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
            if !anf.insert(m) {
                return Err(Error::DuplicateMonomial(m.to_string()));
            }
        }
        Ok(BooleanFunction { n, anf })
    }

    /// Sum over GF(2) of the given monomials; repeated monomials cancel.
    pub fn from_monomials_xor<I: IntoIterator<Item = Monomial>>(n: usize, monomials: I) -> Self {
        let mut f = Self::zero(n);
        for m in monomials {
            debug_assert!(m.vars().span() <= n);
            f.toggle(m);
        }
        f
    }

    /// Function whose quadratic part is the given edge list (`x_a x_b` per pair).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let ms: Result<Vec<Monomial>> = edges
            .iter()
            .map(|&(a, b)| Monomial::from_vars(&[a, b]))
            .collect();
        Self::from_monomials(n, ms?)
    }

    /// Parses either the compact pair format (`"04,15,25"`, one digit per
    /// variable, `n ≤ 10`) or the general format (`"0.1.2+3+1c"`).
    ///
    /// A text containing `,` is compact. A text of digits only is compact when
    /// `n ≤ 10` and general otherwise. Anything else is general.
    pub fn parse_anf(text: &str, n: usize) -> Result<Self> {
        check_n(n)?;
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::zero(n));
        }
        let digits_only = text.chars().all(|c| c.is_ascii_digit());
        if text.contains(',') || (digits_only && n <= MAX_COMPACT_VARS) {
            if n > MAX_COMPACT_VARS {
                return Err(Error::CapExceeded {
                    what: "compact pair format",
                    n,
                    cap: MAX_COMPACT_VARS,
                    hint: "; use the general '.'/'+' format",
                });
            }
            let mut ms = Vec::new();
            for tok in text.split(',') {
                let tok = tok.trim();
                if tok.is_empty() || !tok.chars().all(|c| c.is_ascii_digit()) {
                    return Err(Error::MalformedToken {
                        token: tok.into(),
                        reason: "expected digits",
                    });
                }
                let vars: Vec<usize> = tok.bytes().map(|b| (b - b'0') as usize).collect();
                ms.push(
                    Monomial::from_vars(&vars).map_err(|_| Error::MalformedToken {
                        token: tok.into(),
                        reason: "repeated variable in monomial",
                    })?,
                );
            }
            return Self::from_monomials(n, ms);
        }
        let mut ms = Vec::new();
        for tok in text.split('+') {
            let tok = tok.trim();
            if tok == "1c" {
                ms.push(Monomial::ONE);
                continue;
            }
            if tok.is_empty() {
                return Err(Error::MalformedToken {
                    token: tok.into(),
                    reason: "empty monomial",
                });
            }
            let mut vars = Vec::new();
            for v in tok.split('.') {
                let v = v.trim();
                let idx: usize = v.parse().map_err(|_| Error::MalformedToken {
                    token: tok.into(),
                    reason: "expected a variable index",
                })?;
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, n });
                }
                vars.push(idx);
            }
            ms.push(
                Monomial::from_vars(&vars).map_err(|_| Error::MalformedToken {
                    token: tok.into(),
                    reason: "repeated variable in monomial",
                })?,
            );
        }
        Self::from_monomials(n, ms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.anf.iter().copied()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.anf.contains(&m)
    }

    pub fn num_monomials(&self) -> usize {
        self.anf.len()
    }

    pub fn is_zero(&self) -> bool {
        self.anf.is_empty()
    }

    /// Algebraic degree; 0 for constants (including the zero function).
    pub fn degree(&self) -> usize {
        self.anf.iter().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Adds (XORs) a monomial into the ANF.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.anf.remove(&m) {
            self.anf.insert(m);
        }
    }

    /// Sum over GF(2).
    pub fn add(&self, other: &BooleanFunction) -> BooleanFunction {
        assert_eq!(self.n, other.n);
        let anf = self.anf.symmetric_difference(&other.anf).copied().collect();
        BooleanFunction { n: self.n, anf }
    }

    /// Value at truth-table index `idx`.
    pub fn eval(&self, idx: usize) -> bool {
        let support = VarSet::from_index_mask(idx, self.n);
        self.anf
            .iter()
            .filter(|m| m.vars().is_subset(support))
            .count()
            % 2
            == 1
    }

    /// Truth table of length `2^n`, entries 0/1.
    pub fn truth_table(&self) -> Vec<u8> {
        let mut t = vec![0u8; 1 << self.n];
        for m in &self.anf {
            t[m.vars().to_index_mask(self.n)] ^= 1;
        }
        mobius(&mut t);
        t
    }

    /// Reconstructs the ANF from a 0/1 truth table by the Möbius transform.
    pub fn from_truth_table(n: usize, table: &[u8]) -> Result<Self> {
        check_n(n)?;
        if table.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                got: table.len(),
            });
        }
        let mut c: Vec<u8> = table.iter().map(|&b| b & 1).collect();
        mobius(&mut c);
        let anf = c
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(idx, _)| Monomial(VarSet::from_index_mask(idx, n)))
            .collect();
        Ok(BooleanFunction { n, anf })
    }

    /// Substitutes `x_j := b` for every `(j, b)` in `assignment` and re-indexes
    /// the remaining variables in increasing order.
    pub fn restrict(&self, assignment: &[(usize, bool)]) -> Result<BooleanFunction> {
        let mut fixed = VarSet::EMPTY;
        let mut ones = VarSet::EMPTY;
        for &(j, b) in assignment {
            if j >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    n: self.n,
                });
            }
            fixed = fixed.with(j);
            if b {
                ones = ones.with(j);
            }
        }
        let free: Vec<usize> = (0..self.n).filter(|&j| !fixed.contains(j)).collect();
        let mut relabel = [usize::MAX; 32];
        for (new, &old) in free.iter().enumerate() {
            relabel[old] = new;
        }
        let mut out = BooleanFunction::zero(free.len());
        for m in &self.anf {
            let fixed_part = m.vars().intersection(fixed);
            if !fixed_part.is_subset(ones) {
                continue;
            }
            let rest = VarSet::from_indices(m.vars().difference(fixed).iter().map(|j| relabel[j]));
            out.toggle(Monomial(rest));
        }
        Ok(out)
    }

    /// Splits `p = x_v·N_v + q` with `N_v`, `q` independent of `x_v`.
    pub fn neighbor_decomposition(&self, v: usize) -> Result<(BooleanFunction, BooleanFunction)> {
        if v >= self.n {
            return Err(Error::IndexOutOfRange {
                index: v,
                n: self.n,
            });
        }
        let mut nv = BooleanFunction::zero(self.n);
        let mut q = BooleanFunction::zero(self.n);
        for &m in &self.anf {
            if m.vars().contains(v) {
                nv.anf.insert(Monomial(m.vars().without(v)));
            } else {
                q.anf.insert(m);
            }
        }
        Ok((nv, q))
    }

    /// `p(x) + c·x + d`.
    pub fn add_affine(&self, c: VarSet, d: bool) -> BooleanFunction {
        assert!(
            c.span() <= self.n,
            "linear offset outside the variable range"
        );
        let mut out = self.clone();
        for j in c.iter() {
            out.toggle(Monomial(VarSet::singleton(j)));
        }
        if d {
            out.toggle(Monomial::ONE);
        }
        out
    }

    /// `p(x + a)`.
    pub fn shift_input(&self, a: VarSet) -> BooleanFunction {
        assert!(a.span() <= self.n, "shift outside the variable range");
        let mut out = BooleanFunction::zero(self.n);
        for m in &self.anf {
            // ∏_{j∈m}(x_j + a_j) = Σ_{T ⊆ m∩a} ∏_{j ∈ m∖T} x_j
            let flip = m.vars().intersection(a).0;
            let mut t = flip;
            loop {
                out.toggle(Monomial(VarSet(m.vars().0 & !t)));
                if t == 0 {
                    break;
                }
                t = (t - 1) & flip;
            }
        }
        out
    }

    /// Homogeneous degree-`d` part.
    pub fn part_of_degree(&self, d: usize) -> BooleanFunction {
        let anf = self
            .anf
            .iter()
            .filter(|m| m.degree() == d)
            .copied()
            .collect();
        BooleanFunction { n: self.n, anf }
    }

    /// Compact pair format (`"04,15"`), available for `n ≤ 10`.
    pub fn to_compact(&self) -> Option<String> {
        if self.n > MAX_COMPACT_VARS || self.anf.contains(&Monomial::ONE) {
            return None;
        }
        let toks: Vec<String> = self
            .anf
            .iter()
            .map(|m| {
                m.vars()
                    .iter()
                    .map(|j| char::from(b'0' + j as u8))
                    .collect()
            })
            .collect();
        Some(toks.join(","))
    }
}

impl fmt::Display for BooleanFunction {
    /// General format, monomials sorted lexicographically.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.anf.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join("+"))
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {:?})", self.n, self.to_string())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VARS {
        return Err(Error::CapExceeded {
            what: "boolean function",
            n,
            cap: MAX_VARS,
            hint: "",
        });
    }
    Ok(())
}

/// A function `GF(2)^n → ℤ₄` held as a value table in truth-table order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Z4Function {
    n: usize,
    values: Vec<u8>,
}

impl Z4Function {
    pub fn new(n: usize, values: Vec<u8>) -> Result<Self> {
        check_n(n)?;
        if values.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                got: values.len(),
            });
        }
        Ok(Z4Function {
            n,
            values: values.into_iter().map(|v| v & 3).collect(),
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> u32) -> Self {
        Z4Function {
            n,
            values: (0..1usize << n).map(|x| (f(x) & 3) as u8).collect(),
        }
    }

    /// `2·[f]`.
    pub fn doubled(f: &BooleanFunction) -> Self {
        Z4Function {
            n: f.n(),
            values: f.truth_table().into_iter().map(|b| 2 * b).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn get(&self, idx: usize) -> u8 {
        self.values[idx]
    }

    /// `f/2` when every value lies in `{0, 2}`.
    pub fn halve(&self) -> Option<BooleanFunction> {
        if self.values.iter().any(|v| v & 1 == 1) {
            return None;
        }
        let t: Vec<u8> = self.values.iter().map(|v| v >> 1).collect();
        BooleanFunction::from_truth_table(self.n, &t).ok()
    }

    pub fn sub(&self, other: &Z4Function) -> Z4Function {
        assert_eq!(self.n, other.n);
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a + 4 - b) & 3)
            .collect();
        Z4Function { n: self.n, values }
    }
}

impl fmt::Debug for Z4Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Function(n={}, {:?})", self.n, self.values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(text: &str, n: usize) -> BooleanFunction {
        BooleanFunction::parse_anf(text, n).unwrap()
    }

    fn mono(vars: &[usize]) -> Monomial {
        Monomial::from_vars(vars).unwrap()
    }

    #[test]
    fn parse_compact_table_row() {
        let p = f("04,15,25,34,45", 6);
        let want: Vec<Monomial> = [[0, 4], [1, 5], [2, 5], [3, 4], [4, 5]]
            .iter()
            .map(|v| mono(v))
            .collect();
        assert_eq!(p.monomials().collect::<Vec<_>>(), {
            let mut w = want.clone();
            w.sort();
            w
        });
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn parse_general_and_empty() {
        assert!(f("", 3).is_zero());
        let p = f("0.1+1.2", 3);
        assert_eq!(
            p.monomials().collect::<Vec<_>>(),
            vec![mono(&[0, 1]), mono(&[1, 2])]
        );
        let q = f("0.1.2+3+1c", 4);
        assert!(q.contains(Monomial::ONE));
        assert!(q.contains(mono(&[3])));
        assert_eq!(q.degree(), 3);
        assert_eq!(q.to_string(), "1c+0.1.2+3");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            BooleanFunction::parse_anf("0.3", 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            BooleanFunction::parse_anf("04,17", 6),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            BooleanFunction::parse_anf("0.1+1.0", 3),
            Err(Error::DuplicateMonomial(_))
        ));
        assert!(matches!(
            BooleanFunction::parse_anf("01,10", 3),
            Err(Error::DuplicateMonomial(_))
        ));
        assert!(matches!(
            BooleanFunction::parse_anf("0..1", 3),
            Err(Error::MalformedToken { .. })
        ));
        assert!(matches!(
            BooleanFunction::parse_anf("0.0", 3),
            Err(Error::MalformedToken { .. })
        ));
        assert!(matches!(
            BooleanFunction::parse_anf("0,x", 3),
            Err(Error::MalformedToken { .. })
        ));
        assert!(matches!(
            BooleanFunction::parse_anf("01,23", 11),
            Err(Error::CapExceeded { .. })
        ));
        // general format for n > 10 reads multi-digit indices
        let p = f("12+0.10", 13);
        assert!(p.contains(mono(&[12])) && p.contains(mono(&[0, 10])));
    }

    #[test]
    fn truth_tables() {
        assert_eq!(f("0.1", 2).truth_table(), vec![0, 0, 0, 1]);
        assert_eq!(f("1c", 1).truth_table(), vec![1, 1]);
        let t = f("0.1.2", 3).truth_table();
        assert_eq!(t.iter().position(|&b| b == 1), Some(7));
        assert_eq!(t.iter().filter(|&&b| b == 1).count(), 1);
        // x0 is the most significant index bit
        assert_eq!(f("0", 2).truth_table(), vec![0, 0, 1, 1]);
    }

    #[test]
    fn restrictions() {
        assert_eq!(
            f("0.1+2", 3).restrict(&[(2, true)]).unwrap(),
            f("0.1+1c", 2)
        );
        assert!(f("0.1", 2).restrict(&[(0, false)]).unwrap().is_zero());
        // x0x1 + x0x2 + x1x2 at x0 = 1 → x1 + x2 + x1x2, re-indexed to x0 + x1 + x0x1
        let r = f("0.1+0.2+1.2", 3).restrict(&[(0, true)]).unwrap();
        assert_eq!(r, f("0+1+0.1", 2));
    }

    #[test]
    fn restriction_matches_truth_table() {
        let p = f("0.1.2+1.3+2+0.3+1c", 4);
        let r = p.restrict(&[(1, true), (3, false)]).unwrap();
        let t = p.truth_table();
        for y in 0..4usize {
            let (x0, x2) = (y >> 1 & 1, y & 1);
            let idx = x0 << 3 | 1 << 2 | x2 << 1;
            assert_eq!(r.eval(y), t[idx] == 1);
        }
    }

    #[test]
    fn neighbor_decompositions() {
        let (nv, q) = f("0.1+1.2", 3).neighbor_decomposition(0).unwrap();
        assert_eq!((nv, q), (f("1", 3), f("1.2", 3)));
        let (nv, q) = f("1.2", 3).neighbor_decomposition(0).unwrap();
        assert!(nv.is_zero());
        assert_eq!(q, f("1.2", 3));
        let (nv, q) = f("0.1.2+0.3+1", 4).neighbor_decomposition(0).unwrap();
        assert_eq!((nv, q), (f("1.2+3", 4), f("1", 4)));
    }

    #[test]
    fn affine_and_shift() {
        assert_eq!(
            f("0.1", 2).add_affine(VarSet::from_indices([0]), true),
            f("0.1+0+1c", 2)
        );
        assert_eq!(f("0.1", 2).shift_input(VarSet::EMPTY), f("0.1", 2));
        assert_eq!(
            f("0.1", 2).shift_input(VarSet::from_indices([0])),
            f("0.1+1", 2)
        );
    }

    #[test]
    fn z4_halving() {
        let p = f("0.1+2", 3);
        let z = Z4Function::doubled(&p);
        assert_eq!(z.halve(), Some(p));
        let odd = Z4Function::new(1, vec![1, 0]).unwrap();
        assert_eq!(odd.halve(), None);
        assert!(Z4Function::new(2, vec![0; 3]).is_err());
    }

    #[test]
    fn compact_output() {
        assert_eq!(f("04,15,25", 6).to_compact().as_deref(), Some("04,15,25"));
        assert_eq!(f("1c", 2).to_compact(), None);
    }

    fn arb_function(max_n: usize) -> impl Strategy<Value = BooleanFunction> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), 1 << n).prop_map(move |bits| {
                let ms = bits
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(i, _)| Monomial(VarSet::from_index_mask(i, n)));
                BooleanFunction::from_monomials(n, ms).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn mobius_roundtrip(p in arb_function(10)) {
            let t = p.truth_table();
            prop_assert_eq!(BooleanFunction::from_truth_table(p.n(), &t).unwrap(), p);
        }
    }

    proptest! {
        #[test]
        fn shift_is_an_involution_and_keeps_degree(p in arb_function(8), a in any::<u32>()) {
            let a = VarSet(a).intersection(VarSet::full(p.n()));
            let s = p.shift_input(a);
            prop_assert_eq!(s.shift_input(a), p.clone());
            if p.degree() >= 1 {
                prop_assert_eq!(s.degree(), p.degree());
            }
            let t = p.truth_table();
            let st = s.truth_table();
            let amask = a.to_index_mask(p.n());
            for x in 0..t.len() {
                prop_assert_eq!(st[x], t[x ^ amask]);
            }
        }

        #[test]
        fn decomposition_reconstructs(p in arb_function(8), v in 0usize..8) {
            let v = v % p.n();
            let (nv, q) = p.neighbor_decomposition(v).unwrap();
            let (tn, tq, tp) = (nv.truth_table(), q.truth_table(), p.truth_table());
            let vbit = 1 << (p.n() - 1 - v);
            for x in 0..tp.len() {
                let xv = (x & vbit != 0) as u8;
                prop_assert_eq!(tp[x], (xv & tn[x]) ^ tq[x]);
                prop_assert_eq!(tn[x], tn[x ^ vbit]);
                prop_assert_eq!(tq[x], tq[x ^ vbit]);
            }
        }
    }
}
