//! Tensor-product kernels acting on spectral vectors.
//!
//! Kernels are stored unnormalised together with a scale bit: the true matrix
//! is `m · 2^{-scale/2}`. A [`SpectralVector`] carries the accumulated scale
//! exponent the same way, so every amplitude stays in `ℤ[ω]`.

pub mod fast;
mod rules;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::boolfun::{BooleanFunction, VarSet};
use crate::cyclo::{CyclotomicInt, RootTwoInt};
use crate::error::{Error, Result};
use crate::exec::Exec;

pub use rules::{verify_reduction_rules, ReductionReport, RelationCheck};

/// Largest `n` accepted by the full `3^n` sweep.
pub const MAX_SWEEP_VARS: usize = 12;
/// Largest `n` accepted by [`power_multiset`].
pub const MAX_POWER_VARS: usize = 10;

type C = CyclotomicInt;

/// One tensor slot of a `{I,H,N}^n` transform.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Axis {
    I,
    H,
    N,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::I, Axis::H, Axis::N];

    pub fn kernel(self) -> Kernel {
        match self {
            Axis::I => Kernel::identity(),
            Axis::H => Kernel::hadamard(),
            Axis::N => Kernel::nega(),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Axis::I => 'I',
            Axis::H => 'H',
            Axis::N => 'N',
        }
    }

    pub fn from_char(c: char) -> Option<Axis> {
        match c {
            'I' | 'i' => Some(Axis::I),
            'H' | 'h' => Some(Axis::H),
            'N' | 'n' => Some(Axis::N),
            _ => None,
        }
    }
}

/// A partition `(R_I, R_H, R_N)` of `{0..n-1}`, one axis per variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransformSpec {
    axes: Vec<Axis>,
}

impl TransformSpec {
    pub fn new(axes: Vec<Axis>) -> Self {
        TransformSpec { axes }
    }

    /// Same axis at every position.
    pub fn uniform(n: usize, axis: Axis) -> Self {
        TransformSpec {
            axes: vec![axis; n],
        }
    }

    pub fn from_sets(n: usize, r_i: VarSet, r_h: VarSet, r_n: VarSet) -> Result<Self> {
        let all = VarSet::full(n);
        let disjoint = r_i.intersection(r_h).is_empty()
            && r_i.intersection(r_n).is_empty()
            && r_h.intersection(r_n).is_empty();
        if !disjoint || r_i.union(r_h).union(r_n) != all {
            return Err(Error::InvalidSpec(format!(
                "{r_i:?}/{r_h:?}/{r_n:?} is not a partition of 0..{n}"
            )));
        }
        let axes = (0..n)
            .map(|j| {
                if r_h.contains(j) {
                    Axis::H
                } else if r_n.contains(j) {
                    Axis::N
                } else {
                    Axis::I
                }
            })
            .collect();
        Ok(TransformSpec { axes })
    }

    /// The `{H,N}` spec with `R_N = support(c)`.
    pub fn hn_from_offset(n: usize, c: VarSet) -> Self {
        TransformSpec {
            axes: (0..n)
                .map(|j| if c.contains(j) { Axis::N } else { Axis::H })
                .collect(),
        }
    }

    /// Spec number `idx` in lexicographic `I < H < N` order, position 0 most
    /// significant.
    pub fn from_index(n: usize, mut idx: u64) -> Self {
        let mut axes = vec![Axis::I; n];
        for j in (0..n).rev() {
            axes[j] = Axis::ALL[(idx % 3) as usize];
            idx /= 3;
        }
        TransformSpec { axes }
    }

    pub fn index(&self) -> u64 {
        self.axes.iter().fold(0, |acc, &a| acc * 3 + a as u64)
    }

    pub fn n(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn axis(&self, j: usize) -> Axis {
        self.axes[j]
    }

    fn set_of(&self, a: Axis) -> VarSet {
        VarSet::from_indices(
            self.axes
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == a)
                .map(|(j, _)| j),
        )
    }

    pub fn r_i(&self) -> VarSet {
        self.set_of(Axis::I)
    }

    pub fn r_h(&self) -> VarSet {
        self.set_of(Axis::H)
    }

    pub fn r_n(&self) -> VarSet {
        self.set_of(Axis::N)
    }

    /// Number of non-identity positions, which is the output scale exponent.
    pub fn weight(&self) -> usize {
        self.axes.iter().filter(|&&a| a != Axis::I).count()
    }
}

impl FromStr for TransformSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let axes: Option<Vec<Axis>> = s.trim().chars().map(Axis::from_char).collect();
        axes.map(TransformSpec::new)
            .ok_or_else(|| Error::InvalidSpec(s.to_string()))
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.axes
            .iter()
            .try_for_each(|a| write!(f, "{}", a.as_char()))
    }
}

impl fmt::Debug for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TransformSpec({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KernelKind {
    I,
    H,
    N,
    SigmaX,
    SigmaZ,
    /// `(−iσ_x)^{1/2}`.
    X,
    /// `(iσ_z)^{1/2}`.
    Z,
    /// The product `x·z`.
    XZ,
    /// Anything else, including products and diagonal / anti-diagonal moves.
    Custom,
}

/// A 2×2 matrix over `ℤ[ω]`; the true matrix is `m · 2^{-scale/2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Kernel {
    kind: KernelKind,
    m: [[C; 2]; 2],
    scale: u32,
}

impl Kernel {
    pub fn custom(m: [[C; 2]; 2], scale: u32) -> Self {
        Kernel {
            kind: KernelKind::Custom,
            m,
            scale,
        }
    }

    pub fn identity() -> Self {
        Kernel {
            kind: KernelKind::I,
            m: [[C::ONE, C::ZERO], [C::ZERO, C::ONE]],
            scale: 0,
        }
    }

    pub fn hadamard() -> Self {
        Kernel {
            kind: KernelKind::H,
            m: [[C::ONE, C::ONE], [C::ONE, -C::ONE]],
            scale: 1,
        }
    }

    pub fn nega() -> Self {
        Kernel {
            kind: KernelKind::N,
            m: [[C::ONE, C::I], [C::ONE, -C::I]],
            scale: 1,
        }
    }

    pub fn sigma_x() -> Self {
        Kernel {
            kind: KernelKind::SigmaX,
            m: [[C::ZERO, C::ONE], [C::ONE, C::ZERO]],
            scale: 0,
        }
    }

    pub fn sigma_z() -> Self {
        Kernel {
            kind: KernelKind::SigmaZ,
            m: [[C::ONE, C::ZERO], [C::ZERO, -C::ONE]],
            scale: 0,
        }
    }

    pub fn x() -> Self {
        Kernel {
            kind: KernelKind::X,
            m: [[-C::ONE, C::I], [C::I, -C::ONE]],
            scale: 1,
        }
    }

    pub fn z() -> Self {
        let w = C::omega_power;
        Kernel {
            kind: KernelKind::Z,
            m: [[w(1), C::ZERO], [C::ZERO, w(3)]],
            scale: 0,
        }
    }

    pub fn xz() -> Self {
        Kernel {
            kind: KernelKind::XZ,
            ..Kernel::x().compose(&Kernel::z())
        }
    }

    pub fn of(kind: KernelKind) -> Option<Self> {
        Some(match kind {
            KernelKind::I => Self::identity(),
            KernelKind::H => Self::hadamard(),
            KernelKind::N => Self::nega(),
            KernelKind::SigmaX => Self::sigma_x(),
            KernelKind::SigmaZ => Self::sigma_z(),
            KernelKind::X => Self::x(),
            KernelKind::Z => Self::z(),
            KernelKind::XZ => Self::xz(),
            KernelKind::Custom => return None,
        })
    }

    /// Diagonal `diag(a, b)`, scale 0.
    pub fn diag(a: C, b: C) -> Self {
        Self::custom([[a, C::ZERO], [C::ZERO, b]], 0)
    }

    /// Anti-diagonal `[[0, a], [b, 0]]`, scale 0.
    pub fn anti_diag(a: C, b: C) -> Self {
        Self::custom([[C::ZERO, a], [b, C::ZERO]], 0)
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    pub fn matrix(&self) -> [[C; 2]; 2] {
        self.m
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Kernel) -> Kernel {
        let (a, b) = (self.m, other.m);
        let mut m = [[C::ZERO; 2]; 2];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                *e = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Kernel::custom(m, self.scale + other.scale)
    }

    /// Product of kernels named by letters, read left to right as a matrix
    /// product (`"zxx"` is `z·x·x`). Letters: `I H N x z X Z`, where `X`, `Z`
    /// are the Pauli matrices.
    pub fn word(w: &str) -> Option<Kernel> {
        w.chars().try_fold(Kernel::identity(), |acc, ch| {
            let k = match ch {
                'I' => Kernel::identity(),
                'H' => Kernel::hadamard(),
                'N' => Kernel::nega(),
                'x' => Kernel::x(),
                'z' => Kernel::z(),
                'X' => Kernel::sigma_x(),
                'Z' => Kernel::sigma_z(),
                _ => return None,
            };
            Some(acc.compose(&k))
        })
    }

    pub fn pow(&self, e: u32) -> Kernel {
        (0..e).fold(Kernel::identity(), |acc, _| acc.compose(self))
    }

    /// Left multiplication by a scalar in `ℤ[ω]`.
    pub fn scaled_by(&self, c: C) -> Kernel {
        let m = self.m.map(|row| row.map(|e| c * e));
        Kernel::custom(m, self.scale)
    }

    /// Matrix entries brought to scale `target ≥ self.scale` by factors of √2.
    pub fn entries_at_scale(&self, target: u32) -> [[C; 2]; 2] {
        assert!(target >= self.scale);
        let mut f = C::ONE;
        for _ in self.scale..target {
            f = f * C::SQRT2;
        }
        self.m.map(|row| row.map(|e| f * e))
    }

    /// Exact equality of the normalised matrices.
    pub fn normalized_eq(&self, other: &Kernel) -> bool {
        let s = self.scale.max(other.scale);
        self.entries_at_scale(s) == other.entries_at_scale(s)
    }
}

impl fmt::Debug for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Kernel({:?}, scale {}, [[{:?}, {:?}], [{:?}, {:?}]])",
            self.kind, self.scale, self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

/// `2^n` amplitudes; the true amplitude at `k` is `entries[k] · 2^{-scale_e/2}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpectralVector {
    n: usize,
    entries: Vec<C>,
    scale_e: u32,
}

impl SpectralVector {
    pub fn new(n: usize, entries: Vec<C>, scale_e: u32) -> Result<Self> {
        if entries.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                got: entries.len(),
            });
        }
        Ok(SpectralVector {
            n,
            entries,
            scale_e,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[C] {
        &self.entries
    }

    pub fn scale_e(&self) -> u32 {
        self.scale_e
    }

    pub fn norms(&self) -> Vec<RootTwoInt> {
        self.entries.iter().map(|e| e.norm_sq()).collect()
    }

    /// `Σ_k |entries[k]|²`.
    pub fn total_power(&self) -> RootTwoInt {
        self.entries
            .iter()
            .fold(RootTwoInt::ZERO, |acc, e| acc + e.norm_sq())
    }

    /// True when every normalised amplitude has magnitude one.
    pub fn is_flat(&self) -> bool {
        let target = RootTwoInt::pow2(self.scale_e);
        self.entries.iter().all(|e| e.norm_sq() == target)
    }

    /// In-place kernel application; see [`apply_kernel`].
    pub fn apply_kernel_mut(&mut self, pos: usize, k: &Kernel) {
        assert!(
            pos < self.n,
            "kernel position {pos} out of range for n = {}",
            self.n
        );
        let before = if cfg!(debug_assertions) {
            Some(self.total_power())
        } else {
            None
        };
        let stride = 1usize << (self.n - 1 - pos);
        let e = &mut self.entries;
        match k.kind {
            KernelKind::I => {}
            KernelKind::SigmaX => {
                for_pairs(e.len(), stride, |i, j| e.swap(i, j));
            }
            KernelKind::H => for_pairs(e.len(), stride, |i, j| {
                let (a, b) = (e[i], e[j]);
                e[i] = a + b;
                e[j] = a - b;
            }),
            KernelKind::N => for_pairs(e.len(), stride, |i, j| {
                let (a, ib) = (e[i], e[j].mul_omega_power(2));
                e[i] = a + ib;
                e[j] = a - ib;
            }),
            _ => {
                let m = k.m;
                for_pairs(e.len(), stride, |i, j| {
                    let (a, b) = (e[i], e[j]);
                    e[i] = m[0][0] * a + m[0][1] * b;
                    e[j] = m[1][0] * a + m[1][1] * b;
                })
            }
        }
        self.scale_e += k.scale;
        if let Some(before) = before {
            if k.is_unitary_up_to_scale() {
                debug_assert_eq!(self.total_power(), before.shl(k.scale), "Parseval violated");
            }
        }
    }
}

impl Kernel {
    /// `m·m^† = 2^scale · I`.
    pub fn is_unitary_up_to_scale(&self) -> bool {
        let m = self.m;
        let target = C::from_int(1 << self.scale);
        let dot = |r: usize, s: usize| m[r][0] * m[s][0].conj() + m[r][1] * m[s][1].conj();
        dot(0, 0) == target && dot(1, 1) == target && dot(0, 1).is_zero()
    }
}

#[inline]
fn for_pairs(len: usize, stride: usize, mut f: impl FnMut(usize, usize)) {
    let mut base = 0;
    while base < len {
        for i in base..base + stride {
            f(i, i + stride);
        }
        base += 2 * stride;
    }
}

/// `s_x = (−1)^{p(x)}`, scale 0.
pub fn bipolar(f: &BooleanFunction) -> SpectralVector {
    let entries = f
        .truth_table()
        .into_iter()
        .map(|b| if b == 0 { C::ONE } else { -C::ONE })
        .collect();
    SpectralVector {
        n: f.n(),
        entries,
        scale_e: 0,
    }
}

/// Butterfly over index pairs differing in bit `n-1-pos`; the scale exponent
/// grows by the kernel's scale bit.
pub fn apply_kernel(s: &SpectralVector, pos: usize, k: &Kernel) -> SpectralVector {
    let mut out = s.clone();
    out.apply_kernel_mut(pos, k);
    out
}

/// Applies the spec's kernels in ascending position order.
pub fn apply_transform(s: &SpectralVector, spec: &TransformSpec) -> Result<SpectralVector> {
    if spec.n() != s.n {
        return Err(Error::DimensionMismatch {
            expected: s.n,
            got: spec.n(),
        });
    }
    let mut out = s.clone();
    for (pos, a) in spec.axes.iter().enumerate() {
        if *a != Axis::I {
            out.apply_kernel_mut(pos, &a.kernel());
        }
    }
    Ok(out)
}

pub fn is_flat(s: &SpectralVector) -> bool {
    s.is_flat()
}

/// Walsh-Hadamard transform of `(−1)^{p(x)}`.
pub fn wht(f: &BooleanFunction) -> SpectralVector {
    apply_transform(&bipolar(f), &TransformSpec::uniform(f.n(), Axis::H)).expect("matching n")
}

/// All-H transform of `(−1)^{p(x)} · i^{c·x}`, where `c·x` is the integer sum
/// `Σ c_j x_j` reduced mod 4.
pub fn wht_z4_offset(f: &BooleanFunction, c: VarSet) -> SpectralVector {
    let n = f.n();
    let cmask = c.to_index_mask(n);
    let entries = f
        .truth_table()
        .into_iter()
        .enumerate()
        .map(|(x, b)| {
            let e = 2 * b as i64 + (x & cmask).count_ones() as i64;
            C::i_power(e)
        })
        .collect();
    let s = SpectralVector {
        n,
        entries,
        scale_e: 0,
    };
    apply_transform(&s, &TransformSpec::uniform(n, Axis::H)).expect("matching n")
}

/// Lexicographic `I < H < N` walk over specs, sharing transform prefixes.
///
/// Only positions at and after `fixed` vary; positions before it keep the
/// axes given at construction.
pub struct IhnSweep {
    n: usize,
    fixed: usize,
    choice: Vec<Axis>,
    levels: Vec<SpectralVector>,
    done: bool,
}

impl IhnSweep {
    pub fn new(s: SpectralVector) -> Self {
        Self::with_prefix(s, &[])
    }

    pub fn with_prefix(s: SpectralVector, prefix: &[Axis]) -> Self {
        let n = s.n;
        assert!(prefix.len() <= n);
        let mut choice = vec![Axis::I; n];
        choice[..prefix.len()].copy_from_slice(prefix);
        let mut sweep = IhnSweep {
            n,
            fixed: prefix.len(),
            choice,
            levels: vec![s],
            done: false,
        };
        sweep.rebuild_from(0);
        sweep
    }

    fn rebuild_from(&mut self, j: usize) {
        self.levels.truncate(j + 1);
        for pos in j..self.n {
            let next = match self.choice[pos] {
                Axis::I => self.levels[pos].clone(),
                a => apply_kernel(&self.levels[pos], pos, &a.kernel()),
            };
            self.levels.push(next);
        }
    }
}

impl Iterator for IhnSweep {
    type Item = (TransformSpec, SpectralVector);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = (
            TransformSpec::new(self.choice.clone()),
            self.levels[self.n].clone(),
        );
        match (self.fixed..self.n)
            .rev()
            .find(|&j| self.choice[j] != Axis::N)
        {
            None => self.done = true,
            Some(j) => {
                self.choice[j] = Axis::ALL[self.choice[j] as usize + 1];
                for c in &mut self.choice[j + 1..] {
                    *c = Axis::I;
                }
                self.rebuild_from(j);
            }
        }
        Some(item)
    }
}

/// Streams all `3^n` spectra of `(−1)^{p(x)}` in lexicographic spec order.
pub fn all_ihn_spectra(f: &BooleanFunction) -> Result<IhnSweep> {
    if f.n() > MAX_SWEEP_VARS {
        return Err(Error::CapExceeded {
            what: "full {I,H,N} sweep",
            n: f.n(),
            cap: MAX_SWEEP_VARS,
            hint: "",
        });
    }
    Ok(IhnSweep::new(bipolar(f)))
}

/// A normalised power `(p + q√2) / 2^e` in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PowerValue {
    pub norm: RootTwoInt,
    pub e: u32,
}

impl PowerValue {
    pub fn new(norm: RootTwoInt, mut e: u32) -> Self {
        let (mut p, mut q) = (norm.p, norm.q);
        if p == 0 && q == 0 {
            return PowerValue {
                norm: RootTwoInt::ZERO,
                e: 0,
            };
        }
        while e > 0 && p % 2 == 0 && q % 2 == 0 {
            p /= 2;
            q /= 2;
            e -= 1;
        }
        PowerValue {
            norm: RootTwoInt::new(p, q),
            e,
        }
    }
}

/// Multiset of normalised powers with multiplicities.
pub type PowerMultiset = BTreeMap<PowerValue, u64>;

/// All `3^n · 2^n` normalised power values of the `{I,H,N}^n` spectra.
pub fn power_multiset(f: &BooleanFunction, exec: Exec) -> Result<PowerMultiset> {
    let n = f.n();
    if n > MAX_POWER_VARS {
        return Err(Error::CapExceeded {
            what: "power multiset",
            n,
            cap: MAX_POWER_VARS,
            hint: "",
        });
    }
    let depth = n.min(3);
    let prefixes: Vec<Vec<Axis>> = (0..3u64.pow(depth as u32))
        .map(|i| TransformSpec::from_index(depth, i).axes)
        .collect();
    let s = bipolar(f);
    let parts = exec.map_collect(&prefixes, |prefix| {
        let mut m = PowerMultiset::new();
        for (_, v) in IhnSweep::with_prefix(s.clone(), prefix) {
            for e in &v.entries {
                *m.entry(PowerValue::new(e.norm_sq(), v.scale_e))
                    .or_default() += 1;
            }
        }
        m
    });
    let mut out = PowerMultiset::new();
    for part in parts {
        for (k, c) in part {
            *out.entry(k).or_default() += c;
        }
    }
    Ok(out)
}

/// `A_k = Σ_x (−1)^{p(x) + p(x+k) + Σ_{i∈R_N} k_i (x_i + 1)}` for a spec with
/// `R_I = ∅`.
pub fn autocorrelation(f: &BooleanFunction, spec: &TransformSpec) -> Result<Vec<i64>> {
    if spec.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            got: spec.n(),
        });
    }
    if !spec.r_i().is_empty() {
        return Err(Error::InvalidSpec(format!(
            "{spec}: autocorrelation needs R_I empty"
        )));
    }
    Ok(autocorrelation_table(
        &f.truth_table(),
        f.n(),
        spec.r_n().to_index_mask(f.n()),
    ))
}

fn autocorrelation_table(t: &[u8], n: usize, rn_mask: usize) -> Vec<i64> {
    let len = 1usize << n;
    (0..len)
        .map(|k| {
            (0..len)
                .map(|x| {
                    let nega = (k & rn_mask & !x).count_ones() as u8;
                    if (t[x] ^ t[x ^ k] ^ nega) & 1 == 0 {
                        1
                    } else {
                        -1
                    }
                })
                .sum()
        })
        .collect()
}

/// Autocorrelation over the coset `x = r + y`, `y` ranging over the non-`R_I`
/// positions. `r` lists the `R_I` variables set to one. The output is indexed
/// by the shift restricted to the free positions, first free variable most
/// significant.
pub fn fixed_autocorrelation(
    f: &BooleanFunction,
    spec: &TransformSpec,
    r: VarSet,
) -> Result<Vec<i64>> {
    let n = f.n();
    if spec.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: spec.n(),
        });
    }
    let r_i = spec.r_i();
    if !r.is_subset(r_i) {
        return Err(Error::Invalid("coset assignment outside R_I".into()));
    }
    let assignment: Vec<(usize, bool)> = r_i.iter().map(|j| (j, r.contains(j))).collect();
    let g = f.restrict(&assignment)?;
    let free: Vec<usize> = (0..n).filter(|&j| !r_i.contains(j)).collect();
    let rn = VarSet::from_indices(
        free.iter()
            .enumerate()
            .filter(|(_, &j)| spec.axis(j) == Axis::N)
            .map(|(i, _)| i),
    );
    Ok(autocorrelation_table(
        &g.truth_table(),
        g.n(),
        rn.to_index_mask(g.n()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(text: &str, n: usize) -> BooleanFunction {
        BooleanFunction::parse_anf(text, n).unwrap()
    }

    fn spec(s: &str) -> TransformSpec {
        s.parse().unwrap()
    }

    fn g(re: i64, im: i64) -> C {
        C::gaussian(re, im)
    }

    #[test]
    fn bipolar_vectors() {
        assert_eq!(bipolar(&f("", 1)).entries(), &[C::ONE, C::ONE]);
        assert_eq!(bipolar(&f("0", 1)).entries(), &[C::ONE, -C::ONE]);
        assert_eq!(
            bipolar(&f("0.1", 2)).entries(),
            &[C::ONE, C::ONE, C::ONE, -C::ONE]
        );
    }

    #[test]
    fn single_kernels() {
        let s = bipolar(&f("", 1));
        let h = apply_kernel(&s, 0, &Kernel::hadamard());
        assert_eq!((h.entries(), h.scale_e()), (&[g(2, 0), g(0, 0)][..], 1));
        let nn = apply_kernel(&s, 0, &Kernel::nega());
        assert_eq!((nn.entries(), nn.scale_e()), (&[g(1, 1), g(1, -1)][..], 1));
        assert!(nn.is_flat());
        let i = apply_kernel(&s, 0, &Kernel::identity());
        assert_eq!(i, s);
    }

    #[test]
    fn two_variable_transforms() {
        let s = bipolar(&f("0.1", 2));
        let hh = apply_transform(&s, &spec("HH")).unwrap();
        assert_eq!(hh.scale_e(), 2);
        assert!(hh.norms().iter().all(|&r| r == RootTwoInt::new(4, 0)));
        assert_eq!(apply_transform(&s, &spec("II")).unwrap(), s);
        let nh = apply_transform(&s, &spec("NH")).unwrap();
        assert!(nh.norms().iter().all(|&r| r == RootTwoInt::new(4, 0)));
        assert!(!wht(&f("", 2)).is_flat());
        assert!(wht(&f("0.1", 2)).is_flat());
    }

    #[test]
    fn nega_is_flat_on_one_variable() {
        for t in ["", "0", "1c", "0+1c"] {
            let s = apply_transform(&bipolar(&f(t, 1)), &spec("N")).unwrap();
            assert!(s.is_flat());
        }
    }

    #[test]
    fn spec_parsing_and_indexing() {
        let s = spec("HNI");
        assert_eq!(s.to_string(), "HNI");
        assert_eq!(s.r_h(), VarSet::from_indices([0]));
        assert_eq!(s.r_n(), VarSet::from_indices([1]));
        assert_eq!(s.r_i(), VarSet::from_indices([2]));
        assert!("HQ".parse::<TransformSpec>().is_err());
        for idx in 0..27 {
            assert_eq!(TransformSpec::from_index(3, idx).index(), idx);
        }
        assert_eq!(TransformSpec::from_index(2, 1).to_string(), "IH");
        assert!(TransformSpec::from_sets(2, VarSet(1), VarSet(1), VarSet(2)).is_err());
        assert_eq!(
            TransformSpec::from_sets(3, VarSet(4), VarSet(1), VarSet(2)).unwrap(),
            s
        );
    }

    #[test]
    fn sweep_order_and_counts() {
        assert_eq!(all_ihn_spectra(&f("", 1)).unwrap().count(), 3);
        let specs: Vec<String> = all_ihn_spectra(&f("0.1", 2))
            .unwrap()
            .map(|(s, _)| s.to_string())
            .collect();
        assert_eq!(
            specs,
            ["II", "IH", "IN", "HI", "HH", "HN", "NI", "NH", "NN"]
        );
        let p = f("0.1.2+1.3+2", 4);
        for (sp, v) in all_ihn_spectra(&p).unwrap() {
            assert_eq!(v, apply_transform(&bipolar(&p), &sp).unwrap());
        }
        assert!(all_ihn_spectra(&BooleanFunction::zero(13)).is_err());
    }

    #[test]
    fn hadamard_twice_and_pauli_shift() {
        let p = f("0.1.2+0.2+1", 3);
        let s = bipolar(&p);
        for pos in 0..3 {
            let hh = apply_kernel(
                &apply_kernel(&s, pos, &Kernel::hadamard()),
                pos,
                &Kernel::hadamard(),
            );
            assert_eq!(hh.scale_e(), 2);
            let doubled: Vec<C> = s.entries().iter().map(|e| e.scale(2)).collect();
            assert_eq!(hh.entries(), &doubled[..]);
            let xx = apply_kernel(
                &apply_kernel(&s, pos, &Kernel::sigma_x()),
                pos,
                &Kernel::sigma_x(),
            );
            assert_eq!(xx, s);
            let shifted = bipolar(&p.shift_input(VarSet::singleton(pos)));
            assert_eq!(apply_kernel(&s, pos, &Kernel::sigma_x()), shifted);
        }
    }

    #[test]
    fn power_multiset_of_constant() {
        let m = power_multiset(&f("", 1), Exec::Sequential).unwrap();
        let one = PowerValue::new(RootTwoInt::new(1, 0), 0);
        let two = PowerValue::new(RootTwoInt::new(2, 0), 0);
        let zero = PowerValue::new(RootTwoInt::ZERO, 0);
        assert_eq!(m.get(&one), Some(&4));
        assert_eq!(m.get(&two), Some(&1));
        assert_eq!(m.get(&zero), Some(&1));
        assert_eq!(m.len(), 3);
        assert_eq!(PowerValue::new(RootTwoInt::new(4, 0), 1), two);
    }

    #[test]
    fn power_multiset_modes_agree() {
        let p = f("0.1.2+2.3+0.4+3", 5);
        assert_eq!(
            power_multiset(&p, Exec::Sequential).unwrap(),
            power_multiset(&p, Exec::Parallel).unwrap()
        );
        let total: u64 = power_multiset(&p, Exec::Sequential).unwrap().values().sum();
        assert_eq!(total, 243 * 32);
    }

    #[test]
    fn autocorrelation_examples() {
        let p = f("0.1", 2);
        let a = autocorrelation(&p, &spec("HH")).unwrap();
        assert_eq!(a, vec![4, 0, 0, 0]);
        let a = autocorrelation(&f("0.1.2", 3), &spec("HNH")).unwrap();
        assert_eq!(a[0], 8);
        assert!(autocorrelation(&p, &spec("IH")).is_err());
    }

    #[test]
    fn offset_zero_is_plain_wht() {
        let p = f("0.1", 2);
        assert_eq!(wht_z4_offset(&p, VarSet::EMPTY), wht(&p));
        let cubic = f("0.1.2", 3);
        for c in 0..8 {
            assert!(!wht_z4_offset(&cubic, VarSet(c)).is_flat());
        }
    }
}
