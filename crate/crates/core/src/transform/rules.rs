//! Exact checks of the 2×2 reduction rules relating `x`, `z`, `H` and `N`.
//!
//! `u ≃ v` means `u = d·v` with `d` a diagonal or anti-diagonal unitary.

use super::Kernel;
use crate::cyclo::{CyclotomicInt, RootTwoInt};

type C = CyclotomicInt;

/// One verified relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
    /// Rendering of the solved `d` (or of the D-move witnesses).
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionReport {
    pub checks: Vec<RelationCheck>,
}

impl ReductionReport {
    pub fn all_hold(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Solves `lhs = d·rhs` for a diagonal or anti-diagonal unitary `d`.
pub fn solve_d(lhs: &Kernel, rhs: &Kernel) -> Option<Kernel> {
    let s = lhs.scale().max(rhs.scale());
    let l = lhs.entries_at_scale(s);
    let r = rhs.entries_at_scale(s);
    let row_factor = |lr: &[C; 2], rr: &[C; 2]| -> Option<C> {
        let j = (0..2).find(|&j| !rr[j].is_zero())?;
        let a = lr[j].div_exact(rr[j])?;
        (a * rr[0] == lr[0] && a * rr[1] == lr[1] && a.norm_sq() == RootTwoInt::from_int(1))
            .then_some(a)
    };
    if let (Some(a), Some(b)) = (row_factor(&l[0], &r[0]), row_factor(&l[1], &r[1])) {
        return Some(Kernel::diag(a, b));
    }
    if let (Some(a), Some(b)) = (row_factor(&l[0], &r[1]), row_factor(&l[1], &r[0])) {
        return Some(Kernel::anti_diag(a, b));
    }
    None
}

fn word(w: &str) -> Kernel {
    Kernel::word(w).expect("valid kernel word")
}

fn equiv_check(name: String, lhs: &Kernel, rhs: &Kernel) -> RelationCheck {
    let d = solve_d(lhs, rhs);
    RelationCheck {
        name,
        holds: d.is_some(),
        witness: d.map(|d| render(&d)),
    }
}

fn render(d: &Kernel) -> String {
    let m = d.matrix();
    format!(
        "[[{:?}, {:?}], [{:?}, {:?}]]",
        m[0][0], m[0][1], m[1][0], m[1][1]
    )
}

fn d1() -> Vec<Kernel> {
    let one = C::ONE;
    vec![
        Kernel::diag(one, one),
        Kernel::diag(one, -one),
        Kernel::anti_diag(one, one),
        Kernel::anti_diag(one, -one),
    ]
}

fn d2() -> Vec<Kernel> {
    let (one, i) = (C::ONE, C::I);
    vec![
        Kernel::diag(one, i),
        Kernel::diag(one, -i),
        Kernel::anti_diag(one, i),
        Kernel::anti_diag(one, -i),
    ]
}

/// For every `Δ ∈ from`, finds `Δ' ∈ to` and `c ∈ {±1, ±i}` with
/// `outer·Δ = c·Δ'·inner`.
fn d_move(
    name: &str,
    outer: &Kernel,
    from: &[Kernel],
    to: &[Kernel],
    inner: &Kernel,
) -> RelationCheck {
    let units: Vec<C> = (0..4).map(C::i_power).collect();
    let mut found = Vec::new();
    for delta in from {
        let lhs = outer.compose(delta);
        let hit = to.iter().enumerate().find_map(|(t, dp)| {
            units
                .iter()
                .position(|&c| lhs == dp.compose(inner).scaled_by(c))
                .map(|k| (t, k))
        });
        match hit {
            Some((t, k)) => found.push(format!("Δ'#{t}, c=i^{k}")),
            None => {
                return RelationCheck {
                    name: name.into(),
                    holds: false,
                    witness: None,
                }
            }
        }
    }
    RelationCheck {
        name: name.into(),
        holds: true,
        witness: Some(found.join("; ")),
    }
}

/// Runs every reduction rule as an exact matrix identity.
pub fn verify_reduction_rules() -> ReductionReport {
    let mut checks = Vec::new();
    // single-vertex products of x and z
    let table: &[(&str, &str)] = &[
        ("xxx", "x"),
        ("zxx", "I"),
        ("xxz", "I"),
        ("zxz", "xz"),
        ("xzx", "zxz"),
        ("xzx", "xz"),
        ("zzx", "x"),
        ("xzz", "x"),
        ("zxzz", "x"),
        ("xzxz", "x"),
        ("xxzx", "x"),
        ("zzz", "I"),
        ("zx", "x"),
        ("xx", "I"),
        ("z", "I"),
    ];
    for (l, r) in table {
        checks.push(equiv_check(format!("{l} ≃ {r}"), &word(l), &word(r)));
    }
    checks.push(equiv_check("N ≃ x".into(), &Kernel::nega(), &Kernel::x()));
    checks.push(equiv_check(
        "H ≃ xz".into(),
        &Kernel::hadamard(),
        &Kernel::xz(),
    ));

    let n = Kernel::nega();
    for t in 0..=8u32 {
        for (r, target, label) in [
            (0, Kernel::identity(), "I"),
            (1, Kernel::nega(), "N"),
            (2, Kernel::hadamard(), "H"),
        ] {
            checks.push(equiv_check(
                format!("N^{} ≃ {label}", 3 * t + r),
                &n.pow(3 * t + r),
                &target,
            ));
        }
    }
    let n24 = n.pow(24);
    checks.push(RelationCheck {
        name: "N^24 = I".into(),
        holds: n24.normalized_eq(&Kernel::identity()),
        witness: Some(render(&n24)),
    });

    let h = Kernel::hadamard();
    checks.push(d_move("N·Δ1 = c·Δ1'·N", &n, &d1(), &d1(), &n));
    checks.push(d_move("H·Δ1 = c·Δ1'·H", &h, &d1(), &d1(), &h));
    checks.push(d_move("N·Δ2 = c·Δ1·H", &n, &d2(), &d1(), &h));
    checks.push(d_move("H·Δ2 = c·Δ1·N", &h, &d2(), &d1(), &n));
    ReductionReport { checks }
}
