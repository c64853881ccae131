//! Exact arithmetic in ℤ[ω], ω = e^{2πi/8}, and in ℤ[√2].
//!
//! Every operation uses checked 64-bit arithmetic and panics on overflow
//! instead of wrapping. The `checked_*` variants return `None` instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[inline]
fn ck(v: Option<i64>) -> i64 {
    v.expect("cyclotomic integer overflow")
}

/// `a0 + a1·ω + a2·ω² + a3·ω³` with ω⁴ = −1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct CyclotomicInt(pub [i64; 4]);

impl CyclotomicInt {
    pub const ZERO: CyclotomicInt = CyclotomicInt([0; 4]);
    pub const ONE: CyclotomicInt = CyclotomicInt([1, 0, 0, 0]);
    pub const OMEGA: CyclotomicInt = CyclotomicInt([0, 1, 0, 0]);
    pub const I: CyclotomicInt = CyclotomicInt([0, 0, 1, 0]);
    /// √2 = ω − ω³.
    pub const SQRT2: CyclotomicInt = CyclotomicInt([0, 1, 0, -1]);
    /// 1 + i.
    pub const ONE_PLUS_I: CyclotomicInt = CyclotomicInt([1, 0, 1, 0]);

    pub const fn new(a0: i64, a1: i64, a2: i64, a3: i64) -> Self {
        CyclotomicInt([a0, a1, a2, a3])
    }

    pub const fn from_int(a: i64) -> Self {
        CyclotomicInt([a, 0, 0, 0])
    }

    /// Gaussian integer `re + im·i`.
    pub const fn gaussian(re: i64, im: i64) -> Self {
        CyclotomicInt([re, 0, im, 0])
    }

    /// ω^e for any integer e.
    pub fn omega_power(e: i64) -> Self {
        let e = e.rem_euclid(8) as usize;
        let mut c = [0i64; 4];
        if e < 4 {
            c[e] = 1;
        } else {
            c[e - 4] = -1;
        }
        CyclotomicInt(c)
    }

    /// i^e.
    pub fn i_power(e: i64) -> Self {
        Self::omega_power(2 * e.rem_euclid(4))
    }

    /// `(1+i)^e`.
    pub fn one_plus_i_power(e: u32) -> Self {
        let mut r = Self::ONE;
        for _ in 0..e {
            r = r * Self::ONE_PLUS_I;
        }
        r
    }

    pub fn coeffs(self) -> [i64; 4] {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == [0; 4]
    }

    pub fn checked_add(self, o: Self) -> Option<Self> {
        let a = self.0;
        let b = o.0;
        Some(CyclotomicInt([
            a[0].checked_add(b[0])?,
            a[1].checked_add(b[1])?,
            a[2].checked_add(b[2])?,
            a[3].checked_add(b[3])?,
        ]))
    }

    pub fn checked_sub(self, o: Self) -> Option<Self> {
        let a = self.0;
        let b = o.0;
        Some(CyclotomicInt([
            a[0].checked_sub(b[0])?,
            a[1].checked_sub(b[1])?,
            a[2].checked_sub(b[2])?,
            a[3].checked_sub(b[3])?,
        ]))
    }

    pub fn checked_mul(self, o: Self) -> Option<Self> {
        let (a, b) = (self.0, o.0);
        let mut c = [0i64; 4];
        for i in 0..4 {
            if a[i] == 0 {
                continue;
            }
            for j in 0..4 {
                let t = a[i].checked_mul(b[j])?;
                let k = i + j;
                if k < 4 {
                    c[k] = c[k].checked_add(t)?;
                } else {
                    c[k - 4] = c[k - 4].checked_sub(t)?;
                }
            }
        }
        Some(CyclotomicInt(c))
    }

    pub fn checked_scale(self, k: i64) -> Option<Self> {
        let a = self.0;
        Some(CyclotomicInt([
            a[0].checked_mul(k)?,
            a[1].checked_mul(k)?,
            a[2].checked_mul(k)?,
            a[3].checked_mul(k)?,
        ]))
    }

    pub fn scale(self, k: i64) -> Self {
        self.checked_scale(k).expect("cyclotomic integer overflow")
    }

    /// Multiplication by ω^e, a coefficient rotation.
    pub fn mul_omega_power(self, e: i64) -> Self {
        let e = e.rem_euclid(8) as usize;
        let mut c = [0i64; 4];
        for j in 0..4 {
            let k = j + e;
            let v = self.0[j];
            let (slot, neg) = ((k % 4), (k / 4) % 2 == 1);
            c[slot] = if neg { ck(v.checked_neg()) } else { v };
        }
        CyclotomicInt(c)
    }

    /// Complex conjugate, ω ↦ ω⁻¹ = −ω³.
    pub fn conj(self) -> Self {
        let [a0, a1, a2, a3] = self.0;
        CyclotomicInt([
            a0,
            ck(a3.checked_neg()),
            ck(a2.checked_neg()),
            ck(a1.checked_neg()),
        ])
    }

    /// Galois automorphism ω ↦ ω^k, k odd.
    pub fn galois(self, k: i64) -> Self {
        debug_assert!(k % 2 != 0);
        (0..4).fold(Self::ZERO, |acc, j| {
            acc + Self::omega_power(j as i64 * k).scale(self.0[j])
        })
    }

    /// `|x|² = x·conj(x)` as `p + q√2`.
    pub fn norm_sq(self) -> RootTwoInt {
        self.checked_norm_sq().expect("cyclotomic integer overflow")
    }

    pub fn checked_norm_sq(self) -> Option<RootTwoInt> {
        let [a0, a1, a2, a3] = self.0;
        let sq = |v: i64| v.checked_mul(v);
        let p = sq(a0)?
            .checked_add(sq(a1)?)?
            .checked_add(sq(a2)?)?
            .checked_add(sq(a3)?)?;
        let q = a0
            .checked_mul(a1)?
            .checked_add(a1.checked_mul(a2)?)?
            .checked_add(a2.checked_mul(a3)?)?
            .checked_sub(a0.checked_mul(a3)?)?;
        Some(RootTwoInt { p, q })
    }

    /// Field norm down to ℚ: the product of all four Galois conjugates.
    pub fn field_norm(self) -> i64 {
        let r = self.norm_sq();
        // N_{ℚ(√2)/ℚ}(p + q√2) = p² − 2q²
        ck(ck(r.p.checked_mul(r.p)).checked_sub(ck(ck(r.q.checked_mul(r.q)).checked_mul(2))))
    }

    /// Exact quotient `self / d` when it lies in ℤ[ω].
    pub fn div_exact(self, d: Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let nm = d.field_norm();
        let cofactor = d.galois(3) * d.galois(5) * d.galois(7);
        let num = self.checked_mul(cofactor)?;
        let mut out = [0i64; 4];
        for (o, &c) in out.iter_mut().zip(&num.0) {
            if c % nm != 0 {
                return None;
            }
            *o = c / nm;
        }
        Some(CyclotomicInt(out))
    }

    /// The exponent `k` with `self = ω^k`, if there is one.
    pub fn omega_exponent(self) -> Option<u8> {
        (0..8u8).find(|&k| Self::omega_power(k as i64) == self)
    }

    /// True when `self` is a power of ω.
    pub fn is_root_of_unity(self) -> bool {
        self.omega_exponent().is_some()
    }
}

impl Add for CyclotomicInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.checked_add(o).expect("cyclotomic integer overflow")
    }
}

impl Sub for CyclotomicInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.checked_sub(o).expect("cyclotomic integer overflow")
    }
}

impl Mul for CyclotomicInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.checked_mul(o).expect("cyclotomic integer overflow")
    }
}

impl Neg for CyclotomicInt {
    type Output = Self;
    fn neg(self) -> Self {
        self.checked_scale(-1).expect("cyclotomic integer overflow")
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a0, a1, a2, a3] = self.0;
        write!(f, "{a0} + {a1}·w + {a2}·w^2 + {a3}·w^3")
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `p + q√2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug, PartialOrd, Ord)]
pub struct RootTwoInt {
    pub p: i64,
    pub q: i64,
}

impl RootTwoInt {
    pub const ZERO: RootTwoInt = RootTwoInt { p: 0, q: 0 };

    pub const fn new(p: i64, q: i64) -> Self {
        RootTwoInt { p, q }
    }

    pub const fn from_int(p: i64) -> Self {
        RootTwoInt { p, q: 0 }
    }

    /// `2^e` as a rational integer.
    pub fn pow2(e: u32) -> Self {
        RootTwoInt {
            p: 1i64
                .checked_shl(e)
                .filter(|_| e < 63)
                .expect("cyclotomic integer overflow"),
            q: 0,
        }
    }

    /// Sign of `p + q√2`, decided exactly.
    pub fn signum(self) -> Ordering {
        let (p, q) = (self.p as i128, self.q as i128);
        match (p.cmp(&0), q.cmp(&0)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // opposite signs: compare p² with 2q²
            (ps, _) => {
                if p * p > 2 * q * q {
                    ps
                } else {
                    ps.reverse()
                }
            }
        }
    }

    pub fn is_nonnegative(self) -> bool {
        self.signum() != Ordering::Less
    }

    pub fn checked_mul(self, o: Self) -> Option<Self> {
        let p = self
            .p
            .checked_mul(o.p)?
            .checked_add(self.q.checked_mul(o.q)?.checked_mul(2)?)?;
        let q = self
            .p
            .checked_mul(o.q)?
            .checked_add(self.q.checked_mul(o.p)?)?;
        Some(RootTwoInt { p, q })
    }

    pub fn checked_add(self, o: Self) -> Option<Self> {
        Some(RootTwoInt {
            p: self.p.checked_add(o.p)?,
            q: self.q.checked_add(o.q)?,
        })
    }

    /// Multiplication by `2^k`.
    pub fn shl(self, k: u32) -> Self {
        let f = RootTwoInt::pow2(k);
        self * f
    }
}

impl Add for RootTwoInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.checked_add(o).expect("root-two integer overflow")
    }
}

impl Mul for RootTwoInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.checked_mul(o).expect("root-two integer overflow")
    }
}

impl fmt::Display for RootTwoInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·√2", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const W: CyclotomicInt = CyclotomicInt::OMEGA;

    fn w(k: i64) -> CyclotomicInt {
        CyclotomicInt::omega_power(k)
    }

    #[test]
    fn basic_products() {
        assert_eq!(W * w(3), CyclotomicInt::from_int(-1));
        assert_eq!(
            CyclotomicInt::I * CyclotomicInt::I,
            CyclotomicInt::from_int(-1)
        );
        assert_eq!(W.conj(), CyclotomicInt::new(0, 0, 0, -1));
        assert_eq!(
            CyclotomicInt::SQRT2 * CyclotomicInt::SQRT2,
            CyclotomicInt::from_int(2)
        );
    }

    #[test]
    fn omega_powers() {
        assert_eq!(w(2), CyclotomicInt::new(0, 0, 1, 0));
        assert_eq!(w(4), CyclotomicInt::from_int(-1));
        assert_eq!(w(7), CyclotomicInt::new(0, 0, 0, -1));
        assert_eq!(w(-1), w(7));
        for k in 0..16 {
            assert_eq!(w(k) * w(1), w(k + 1));
            assert_eq!(CyclotomicInt::ONE.mul_omega_power(k), w(k));
            assert_eq!(w(k).conj(), w(-k));
        }
    }

    #[test]
    fn norms() {
        assert_eq!((CyclotomicInt::ONE + W).norm_sq(), RootTwoInt::new(2, 1));
        assert_eq!(CyclotomicInt::ZERO.norm_sq(), RootTwoInt::ZERO);
        for k in 0..8 {
            assert_eq!(w(k).norm_sq(), RootTwoInt::new(1, 0));
        }
        assert_eq!(CyclotomicInt::ONE_PLUS_I.norm_sq(), RootTwoInt::new(2, 0));
    }

    #[test]
    fn norm_matches_conjugate_product() {
        let x = CyclotomicInt::new(3, -2, 5, 7);
        let prod = x * x.conj();
        let r = x.norm_sq();
        // x·x̄ = p + q(ω − ω³)
        assert_eq!(prod, CyclotomicInt::new(r.p, r.q, 0, -r.q));
    }

    #[test]
    fn overflow_is_detected() {
        let big = CyclotomicInt::from_int(i64::MAX);
        assert!(big.checked_add(CyclotomicInt::ONE).is_none());
        assert!(big.checked_mul(CyclotomicInt::from_int(2)).is_none());
        assert!(std::panic::catch_unwind(|| big + CyclotomicInt::ONE).is_err());
    }

    #[test]
    fn exact_division() {
        let a = CyclotomicInt::new(1, 2, -3, 4);
        let b = CyclotomicInt::new(2, 0, -1, 1);
        assert_eq!((a * b).div_exact(b), Some(a));
        assert_eq!(
            CyclotomicInt::from_int(2).div_exact(CyclotomicInt::SQRT2),
            Some(CyclotomicInt::SQRT2)
        );
        assert_eq!(
            CyclotomicInt::ONE.div_exact(CyclotomicInt::from_int(2)),
            None
        );
        assert_eq!(CyclotomicInt::ONE.div_exact(CyclotomicInt::ZERO), None);
    }

    #[test]
    fn root_two_sign() {
        assert_eq!(RootTwoInt::new(3, -2).signum(), Ordering::Greater);
        assert_eq!(RootTwoInt::new(2, -2).signum(), Ordering::Less);
        assert_eq!(RootTwoInt::new(-3, 3).signum(), Ordering::Greater);
        assert_eq!(RootTwoInt::ZERO.signum(), Ordering::Equal);
    }

    #[test]
    fn norm_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let rand_elt = |rng: &mut ChaCha8Rng| {
            CyclotomicInt::new(
                rng.gen_range(-100..=100),
                rng.gen_range(-100..=100),
                rng.gen_range(-100..=100),
                rng.gen_range(-100..=100),
            )
        };
        for _ in 0..100_000 {
            let x = rand_elt(&mut rng);
            let y = rand_elt(&mut rng);
            assert_eq!((x * y).norm_sq(), x.norm_sq() * y.norm_sq());
            assert!(x.norm_sq().is_nonnegative());
            assert_eq!(x.conj().conj(), x);
            assert_eq!(x * y, y * x);
        }
    }
}
