//! One negahadamard kernel on a graph state, read as a ℤ₄ exponent, and the
//! recovery of LC images from the `{I,H,N}^n` spectra.

use std::collections::BTreeSet;

use crate::boolfun::{BooleanFunction, Z4Function};
use crate::cyclo::CyclotomicInt;
use crate::error::{Error, Result};
use crate::transform::{apply_kernel, bipolar, fast::Searcher, IhnSweep, Kernel};

/// Largest `n` for [`orbit_via_spectra`].
pub const MAX_SPECTRAL_ORBIT_VARS: usize = 10;

/// `c0 + Σ c_i [x_i]` mod 4.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z4AffinePart {
    pub c0: u8,
    pub coeffs: Vec<u8>,
}

impl Z4AffinePart {
    pub fn eval(&self, x: usize) -> u8 {
        let n = self.coeffs.len();
        let s: u32 = (0..n)
            .filter(|&j| x >> (n - 1 - j) & 1 == 1)
            .map(|j| self.coeffs[j] as u32)
            .sum();
        ((self.c0 as u32 + s) & 3) as u8
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.coeffs.iter().all(|&c| c == 0)
    }
}

/// `p'(x) = 2[p(x) + Σ_{j<k} m_j(x) m_k(x)] + 3 N'_v(x) + 3[x_v]` mod 4,
/// where `m_i` are the monomials of `N_v` in `p = x_v N_v + q` and
/// `N'_v = Σ [m_i]` is their integer sum.
pub fn lc1_exponent(f: &BooleanFunction, v: usize) -> Result<Z4Function> {
    let n = f.n();
    let (nv, _) = f.neighbor_decomposition(v)?;
    let p = f.truth_table();
    let masks: Vec<usize> = nv.monomials().map(|m| m.vars().to_index_mask(n)).collect();
    let vbit = 1usize << (n - 1 - v);
    Ok(Z4Function::from_fn(n, |x| {
        let cnt = masks.iter().filter(|&&m| x & m == m).count() as u32;
        // Σ_{j<k} m_j m_k counts pairs among the cnt true monomials
        let pairs = cnt * cnt.saturating_sub(1) / 2;
        let xv = (x & vbit != 0) as u32;
        2 * ((p[x] as u32 + pairs) & 1) + 3 * cnt + 3 * xv
    }))
}

/// First index where the single-kernel identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem2Mismatch {
    pub index: usize,
    pub got: CyclotomicInt,
    pub expected: CyclotomicInt,
}

/// Checks `N_v (−1)^{p(x)} = ω · i^{p'(x)}` entrywise; with the unnormalised
/// kernel the right side is `(1+i) · i^{p'(x)}` at scale 1.
pub fn verify_theorem2(
    f: &BooleanFunction,
    v: usize,
) -> Result<std::result::Result<(), Theorem2Mismatch>> {
    let pz4 = lc1_exponent(f, v)?;
    let s = apply_kernel(&bipolar(f), v, &Kernel::nega());
    debug_assert_eq!(s.scale_e(), 1);
    for (x, &got) in s.entries().iter().enumerate() {
        let expected = CyclotomicInt::ONE_PLUS_I * CyclotomicInt::i_power(pz4.get(x) as i64);
        if got != expected {
            return Ok(Err(Theorem2Mismatch {
                index: x,
                got,
                expected,
            }));
        }
    }
    Ok(Ok(()))
}

/// Solves `pz4(x) − 2·f2(x) ≡ c0 + Σ c_i x_i (mod 4)` for all `x`.
pub fn z4_affine_difference(
    pz4: &Z4Function,
    f2: &BooleanFunction,
) -> Result<Option<Z4AffinePart>> {
    let n = pz4.n();
    if f2.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: f2.n(),
        });
    }
    let d = pz4.sub(&Z4Function::doubled(f2));
    Ok(fit_z4_affine(d.values(), n))
}

fn fit_z4_affine(d: &[u8], n: usize) -> Option<Z4AffinePart> {
    let c0 = d[0];
    let coeffs: Vec<u8> = (0..n).map(|j| (d[1 << (n - 1 - j)] + 4 - c0) & 3).collect();
    let part = Z4AffinePart { c0, coeffs };
    (0..d.len()).all(|x| part.eval(x) == d[x]).then_some(part)
}

/// Writes a Gaussian integer of norm `2^e` as `i^a (1+i)^e` and returns `a`.
fn unit_exponent(z: [i64; 2], e: usize) -> Option<u8> {
    let base = CyclotomicInt::one_plus_i_power(e as u32);
    let zc = CyclotomicInt::gaussian(z[0], z[1]);
    (0..4u8).find(|&a| base * CyclotomicInt::i_power(a as i64) == zc)
}

/// `i^{a(x)}` phases of a flat Gaussian spectrum with `a = affine + 2q`,
/// `deg q ≤ 2`; returns the quadratic `q`.
fn graph_in_spectrum(v: &[[i64; 2]], n: usize, weight: usize) -> Option<BooleanFunction> {
    let a: Option<Vec<u8>> = v.iter().map(|&z| unit_exponent(z, weight)).collect();
    let a = a?;
    let c0 = a[0];
    let coeffs: Vec<u8> = (0..n).map(|j| (a[1 << (n - 1 - j)] + 4 - c0) & 3).collect();
    let affine = Z4AffinePart { c0, coeffs };
    let resid: Vec<u8> = (0..a.len())
        .map(|x| (a[x] + 4 - affine.eval(x)) & 3)
        .collect();
    let q = Z4Function::new(n, resid).ok()?.halve()?;
    (q.degree() <= 2).then_some(q)
}

/// Quadratic forms `q` such that some `{I,H,N}^n` spectrum of `(−1)^{f}` is
/// `(−1)^{q}` up to ℤ₄-affine phases and a global constant.
pub fn orbit_via_spectra(f: &BooleanFunction) -> Result<BTreeSet<BooleanFunction>> {
    let n = f.n();
    if f.degree() != 2 {
        return Err(Error::Invalid(format!(
            "expected a quadratic, got degree {}",
            f.degree()
        )));
    }
    if n > MAX_SPECTRAL_ORBIT_VARS {
        return Err(Error::CapExceeded {
            what: "spectral orbit",
            n,
            cap: MAX_SPECTRAL_ORBIT_VARS,
            hint: "",
        });
    }
    let mut out = BTreeSet::new();
    let mut s = Searcher::new(n);
    s.load_table(&f.truth_table());
    for idx in 0..3u64.pow(n as u32) {
        let spec = crate::transform::TransformSpec::from_index(n, idx);
        let v = s.spectrum(spec.axes());
        let weight = spec.weight();
        if !crate::transform::fast::is_flat(&v, weight) {
            continue;
        }
        let v64: Vec<[i64; 2]> = v.iter().map(|&[r, i]| [r as i64, i as i64]).collect();
        if let Some(q) = graph_in_spectrum(&v64, n, weight) {
            out.insert(q);
        }
    }
    Ok(out)
}

/// Exact-ring variant of [`orbit_via_spectra`], used to cross-check it.
pub fn orbit_via_exact_spectra(f: &BooleanFunction) -> Result<BTreeSet<BooleanFunction>> {
    let n = f.n();
    if n > MAX_SPECTRAL_ORBIT_VARS {
        return Err(Error::CapExceeded {
            what: "spectral orbit",
            n,
            cap: MAX_SPECTRAL_ORBIT_VARS,
            hint: "",
        });
    }
    let mut out = BTreeSet::new();
    for (spec, v) in IhnSweep::new(bipolar(f)) {
        if !v.is_flat() {
            continue;
        }
        let g: Vec<[i64; 2]> = v
            .entries()
            .iter()
            .map(|e| {
                let [a0, a1, a2, a3] = e.coeffs();
                debug_assert!(a1 == 0 && a3 == 0, "{{I,H,N}} spectra are Gaussian");
                [a0, a2]
            })
            .collect();
        if let Some(q) = graph_in_spectrum(&g, n, spec.weight()) {
            out.insert(q);
        }
    }
    Ok(out)
}

/// `Σ [A_i] mod 4` and `[Σ A_i] + 2[Σ_{i<j} A_i A_j]` for a bit tuple.
pub fn mod2_mod4_sides(bits: &[bool]) -> (u8, u8) {
    let cnt = bits.iter().filter(|&&b| b).count();
    let lhs = (cnt % 4) as u8;
    let pairs = cnt * cnt.saturating_sub(1) / 2;
    let rhs = ((cnt % 2) + 2 * (pairs % 2)) as u8 % 4;
    (lhs, rhs)
}
