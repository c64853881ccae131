//! The generalised bent hierarchy: spectral and rank decision procedures,
//! lexicographically first witnesses, and family censuses.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boolfun::{BooleanFunction, Monomial, VarSet};
use crate::error::{Error, Result};
use crate::exec::{chunk_ranges, Exec};
use crate::graph::{full_rank, gf2_rank, modified_diagonal, principal_submatrix, GraphState};
use crate::transform::fast::{AxisSet, Query, Searcher, Want};
use crate::transform::{Axis, TransformSpec};

/// Largest `n` for which [`classify`] runs the LC-bent orbit search.
pub const MAX_LC_BENT_VARS: usize = 12;
/// Largest `n` for a census (truth tables packed in a `u128`).
pub const MAX_CENSUS_VARS: usize = 7;
/// Family-size cap without `long_run`.
pub const CENSUS_CAP: u64 = 1 << 26;
/// Family-size cap with `long_run`.
pub const LONG_RUN_CENSUS_CAP: u64 = 1 << 36;
/// Above this `n` quadratic rank verdicts are not re-derived spectrally in
/// debug builds.
const CROSS_CHECK_VARS: usize = 12;

/// One of the seven spectral criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Criterion {
    #[serde(rename = "bent")]
    Bent,
    #[serde(rename = "bent4")]
    Bent4,
    #[serde(rename = "z4-bent")]
    Z4Bent,
    #[serde(rename = "ibent")]
    IBent,
    #[serde(rename = "completely-ibent")]
    CompletelyIBent,
    #[serde(rename = "ibent4")]
    IBent4,
    #[serde(rename = "completely-ibent4")]
    CompletelyIBent4,
}

impl Criterion {
    pub const ALL: [Criterion; 7] = [
        Criterion::Bent,
        Criterion::Bent4,
        Criterion::Z4Bent,
        Criterion::IBent,
        Criterion::CompletelyIBent,
        Criterion::IBent4,
        Criterion::CompletelyIBent4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Bent => "bent",
            Criterion::Bent4 => "bent4",
            Criterion::Z4Bent => "z4-bent",
            Criterion::IBent => "ibent",
            Criterion::CompletelyIBent => "completely-ibent",
            Criterion::IBent4 => "ibent4",
            Criterion::CompletelyIBent4 => "completely-ibent4",
        }
    }

    /// Decides the criterion for the function loaded in `s`.
    pub fn holds_loaded(self, s: &mut Searcher) -> bool {
        let q = |allowed, want, skip_identity| Query {
            allowed,
            want,
            skip_identity,
        };
        match self {
            Criterion::Bent => s.exists(q(AxisSet::H, Want::Flat, false)),
            Criterion::Bent4 => s.exists(q(AxisSet::HN, Want::Flat, false)),
            Criterion::Z4Bent => !s.exists(q(AxisSet::HN, Want::NonFlat, false)),
            Criterion::IBent => s.exists(q(AxisSet::IH, Want::Flat, true)),
            Criterion::CompletelyIBent => !s.exists(q(AxisSet::IH, Want::NonFlat, true)),
            Criterion::IBent4 => s.exists(q(AxisSet::IHN, Want::Flat, true)),
            Criterion::CompletelyIBent4 => !s.exists(q(AxisSet::IHN, Want::NonFlat, true)),
        }
    }

    /// Decides the criterion for `f` on the spectral path.
    pub fn holds(self, f: &BooleanFunction) -> bool {
        let mut s = Searcher::new(f.n());
        s.load_table(&f.truth_table());
        self.holds_loaded(&mut s)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        let c = match key.as_str() {
            "bent" => Criterion::Bent,
            "bent4" => Criterion::Bent4,
            "z4bent" => Criterion::Z4Bent,
            "ibent" => Criterion::IBent,
            "completelyibent" => Criterion::CompletelyIBent,
            "ibent4" => Criterion::IBent4,
            "completelyibent4" => Criterion::CompletelyIBent4,
            _ => {
                return Err(Error::MalformedToken {
                    token: s.to_string(),
                    reason: "unknown criterion",
                })
            }
        };
        Ok(c)
    }
}

fn searcher_for(f: &BooleanFunction) -> Searcher {
    let mut s = Searcher::new(f.n());
    s.load_table(&f.truth_table());
    s
}

fn spectral_find(
    f: &BooleanFunction,
    allowed: AxisSet,
    want: Want,
    skip_identity: bool,
) -> Option<TransformSpec> {
    searcher_for(f)
        .find(Query {
            allowed,
            want,
            skip_identity,
        })
        .map(TransformSpec::new)
}

fn quadratic_graph(f: &BooleanFunction) -> Option<GraphState> {
    if f.degree() <= 2 {
        GraphState::from_quadratic(f).ok()
    } else {
        None
    }
}

fn cross_check(f: &BooleanFunction) -> bool {
    cfg!(debug_assertions) && f.n() <= CROSS_CHECK_VARS
}

/// Spec with `N` on `r_n`, `I` on `r_i`, `H` elsewhere.
fn spec_of(n: usize, r_i: VarSet, r_n: VarSet) -> TransformSpec {
    TransformSpec::new(
        (0..n)
            .map(|j| {
                if r_i.contains(j) {
                    Axis::I
                } else if r_n.contains(j) {
                    Axis::N
                } else {
                    Axis::H
                }
            })
            .collect(),
    )
}

/// `Γ_{I,v}`: drop the `R_I` rows and columns of `Γ + diag(R_N)` and test for
/// full rank.
fn rank_flat(g: &GraphState, r_i: VarSet, r_n: VarSet) -> bool {
    let m = principal_submatrix(&modified_diagonal(g, r_n), r_i);
    gf2_rank(&m) == g.n() - r_i.len()
}

/// First `{I,H,N}` spec in lexicographic order with `allowed` axes whose
/// rank verdict equals `want`.
fn rank_find(
    g: &GraphState,
    allowed: &[Axis],
    want: bool,
    skip_identity: bool,
) -> Option<TransformSpec> {
    let n = g.n();
    let k = allowed.len() as u64;
    let total = k.pow(n as u32);
    (0..total).find_map(|idx| {
        let mut r_i = VarSet::EMPTY;
        let mut r_n = VarSet::EMPTY;
        let mut rest = idx;
        for j in (0..n).rev() {
            match allowed[(rest % k) as usize] {
                Axis::I => r_i = r_i.with(j),
                Axis::N => r_n = r_n.with(j),
                Axis::H => {}
            }
            rest /= k;
        }
        if skip_identity && r_i.len() == n {
            return None;
        }
        (rank_flat(g, r_i, r_n) == want).then(|| spec_of(n, r_i, r_n))
    })
}

/// Flat under the all-`H` transform.
pub fn is_bent(f: &BooleanFunction) -> bool {
    let spectral = || spectral_find(f, AxisSet::H, Want::Flat, false).is_some();
    match quadratic_graph(f) {
        Some(g) => {
            let r = g.rank() == g.n();
            if cross_check(f) {
                debug_assert_eq!(r, spectral(), "bent rank path disagrees for {f}");
            }
            r
        }
        None => spectral(),
    }
}

/// Some `ℤ₄` offset `i^{c·x}` flattens the WHT; the witness is the first `c`
/// with `c_0` most significant.
pub fn is_bent4(f: &BooleanFunction) -> (bool, Option<VarSet>) {
    let spectral = || spectral_find(f, AxisSet::HN, Want::Flat, false);
    let spec = match quadratic_graph(f) {
        Some(g) => {
            let r = rank_find(&g, &[Axis::H, Axis::N], true, false);
            if cross_check(f) {
                debug_assert_eq!(r, spectral(), "bent4 rank path disagrees for {f}");
            }
            r
        }
        None => spectral(),
    };
    match spec {
        Some(s) => (true, Some(s.r_n())),
        None => (false, None),
    }
}

/// Every `ℤ₄` offset flattens the WHT.
pub fn is_z4_bent(f: &BooleanFunction) -> bool {
    let spectral = || spectral_find(f, AxisSet::HN, Want::NonFlat, false).is_none();
    match quadratic_graph(f) {
        Some(g) => {
            let r = rank_find(&g, &[Axis::H, Axis::N], false, false).is_none();
            if cross_check(f) {
                debug_assert_eq!(r, spectral(), "z4-bent rank path disagrees for {f}");
            }
            r
        }
        None => spectral(),
    }
}

/// Some `{I,H}` spec other than all-`I` is flat; the witness is the first.
pub fn is_ibent(f: &BooleanFunction) -> (bool, Option<TransformSpec>) {
    let spectral = || spectral_find(f, AxisSet::IH, Want::Flat, true);
    let spec = match quadratic_graph(f) {
        Some(g) => {
            let r = rank_find(&g, &[Axis::I, Axis::H], true, true);
            if cross_check(f) {
                debug_assert_eq!(r, spectral(), "ibent rank path disagrees for {f}");
            }
            r
        }
        None => spectral(),
    };
    (spec.is_some(), spec)
}

/// Every `{I,H}` spec with `wt(θ) < n` is flat.
pub fn is_completely_ibent(f: &BooleanFunction) -> bool {
    let spectral = || spectral_find(f, AxisSet::IH, Want::NonFlat, true).is_none();
    match quadratic_graph(f) {
        Some(g) => {
            let r = rank_find(&g, &[Axis::I, Axis::H], false, true).is_none();
            if cross_check(f) {
                debug_assert_eq!(
                    r,
                    spectral(),
                    "completely-ibent rank path disagrees for {f}"
                );
            }
            r
        }
        None => spectral(),
    }
}

/// Some `{I,H,N}` spec other than all-`I` is flat; the witness is the first.
pub fn is_ibent4(f: &BooleanFunction) -> (bool, Option<TransformSpec>) {
    let spectral = || spectral_find(f, AxisSet::IHN, Want::Flat, true);
    let spec = match quadratic_graph(f) {
        Some(g) => {
            let r = rank_find(&g, &Axis::ALL, true, true);
            if cross_check(f) {
                debug_assert_eq!(r, spectral(), "ibent4 rank path disagrees for {f}");
            }
            r
        }
        None => spectral(),
    };
    (spec.is_some(), spec)
}

/// Every `{I,H,N}` spec with `wt(θ) < n` is flat.
pub fn is_completely_ibent4(f: &BooleanFunction) -> bool {
    let spectral = || spectral_find(f, AxisSet::IHN, Want::NonFlat, true).is_none();
    match quadratic_graph(f) {
        Some(g) => {
            let r = rank_find(&g, &Axis::ALL, false, true).is_none();
            if cross_check(f) {
                debug_assert_eq!(
                    r,
                    spectral(),
                    "completely-ibent4 rank path disagrees for {f}"
                );
            }
            r
        }
        None => spectral(),
    }
}

/// Single `N` at `v`, `I` elsewhere: always flat.
pub fn single_n_witness(n: usize, v: usize) -> TransformSpec {
    spec_of(n, VarSet::full(n).without(v), VarSet::singleton(v))
}

/// Some member of the LC orbit of `g` has full-rank Γ. The witness is the
/// first such member in breadth-first order from `g`.
pub fn is_lc_bent(g: &GraphState) -> (bool, Option<GraphState>) {
    let target = full_rank(g.n());
    let mut seen = HashSet::from([*g]);
    let mut queue = VecDeque::from([*g]);
    while let Some(h) = queue.pop_front() {
        if h.rank() == target {
            return (true, Some(h));
        }
        for v in 0..h.n() {
            let d = h.local_complement(v);
            if seen.insert(d) {
                queue.push_back(d);
            }
        }
    }
    (false, None)
}

/// Witnesses carried by a [`CriteriaReport`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// `c` as a bit string, `c_0` first.
    pub bent4_offset: Option<String>,
    /// `{I,H}` spec; `I` marks `θ`.
    pub ibent_spec: Option<String>,
    /// `{I,H,N}` spec; `I` marks `θ` and `N` marks `c` on the complement.
    pub ibent4_spec: Option<String>,
    pub lc_bent_member: Option<String>,
}

/// Verdicts of every criterion for one function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriteriaReport {
    pub n: usize,
    pub anf: String,
    pub degree: usize,
    pub bent: bool,
    pub bent4: bool,
    pub z4_bent: bool,
    pub ibent: bool,
    pub completely_ibent: bool,
    pub ibent4: bool,
    pub completely_ibent4: bool,
    /// Quadratics with `n` up to [`MAX_LC_BENT_VARS`] only.
    pub lc_bent: Option<bool>,
    pub witnesses: Witnesses,
    /// Affine terms, which no criterion sees, for degree ≤ 2 inputs.
    pub ignored_affine: Option<String>,
}

impl CriteriaReport {
    /// `bent ⇒ bent4 ∧ ibent` and `bent4 ∨ ibent ⇒ ibent4`.
    pub fn hierarchy_holds(&self) -> bool {
        (!self.bent || (self.bent4 && self.ibent)) && (!(self.bent4 || self.ibent) || self.ibent4)
    }

    pub fn verdict(&self, c: Criterion) -> bool {
        match c {
            Criterion::Bent => self.bent,
            Criterion::Bent4 => self.bent4,
            Criterion::Z4Bent => self.z4_bent,
            Criterion::IBent => self.ibent,
            Criterion::CompletelyIBent => self.completely_ibent,
            Criterion::IBent4 => self.ibent4,
            Criterion::CompletelyIBent4 => self.completely_ibent4,
        }
    }
}

fn bit_string(c: VarSet, n: usize) -> String {
    c.to_bits(n)
        .iter()
        .map(|&b| if b { '1' } else { '0' })
        .collect()
}

/// Runs every criterion on `f`.
pub fn classify(f: &BooleanFunction) -> CriteriaReport {
    let n = f.n();
    let (bent4, c) = is_bent4(f);
    let (ibent, theta) = is_ibent(f);
    let (ibent4, theta4) = is_ibent4(f);
    let quadratic = f.degree() <= 2;
    let lc = if quadratic && n <= MAX_LC_BENT_VARS {
        GraphState::from_quadratic(f).ok().map(|g| is_lc_bent(&g))
    } else {
        None
    };
    let affine = crate::graph::affine_part(f);
    let report = CriteriaReport {
        n,
        anf: f.to_string(),
        degree: f.degree(),
        bent: is_bent(f),
        bent4,
        z4_bent: is_z4_bent(f),
        ibent,
        completely_ibent: is_completely_ibent(f),
        ibent4,
        completely_ibent4: is_completely_ibent4(f),
        lc_bent: lc.as_ref().map(|(b, _)| *b),
        witnesses: Witnesses {
            bent4_offset: c.map(|c| bit_string(c, n)),
            ibent_spec: theta.map(|s| s.to_string()),
            ibent4_spec: theta4.map(|s| s.to_string()),
            lc_bent_member: lc.and_then(|(_, w)| w).map(|g| g.to_string()),
        },
        ignored_affine: (quadratic && !affine.is_zero()).then(|| affine.to_string()),
    };
    assert!(
        report.hierarchy_holds(),
        "criteria hierarchy violated for {f}"
    );
    report
}

/// Functions with a nonzero degree-`d` part, no affine part, and free parts
/// of every degree from 2 to `d − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    n: usize,
    degree: usize,
    top: Vec<Monomial>,
    lower: Vec<Monomial>,
}

impl FamilySpec {
    pub fn new(n: usize, degree: usize) -> Result<Self> {
        if n > MAX_CENSUS_VARS {
            return Err(Error::CapExceeded {
                what: "census",
                n,
                cap: MAX_CENSUS_VARS,
                hint: "",
            });
        }
        if degree < 2 || degree > n {
            return Err(Error::Invalid(format!(
                "family degree must lie in 2..={n}, got {degree}"
            )));
        }
        let mut top = Vec::new();
        let mut lower = Vec::new();
        for m in 0u32..1 << n {
            let d = m.count_ones() as usize;
            let mono = Monomial::new(VarSet::from_index_mask(m as usize, n));
            if d == degree {
                top.push(mono);
            } else if (2..degree).contains(&d) {
                lower.push(mono);
            }
        }
        top.sort();
        lower.sort();
        Ok(FamilySpec {
            n,
            degree,
            top,
            lower,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `(2^{#top} − 1) · 2^{#lower}`.
    pub fn size(&self) -> u128 {
        ((1u128 << self.top.len()) - 1) << self.lower.len()
    }

    /// Member `i`: lower bits of `i` pick lower-degree monomials, the rest
    /// plus one picks the nonzero top-degree part.
    pub fn member(&self, i: u64) -> BooleanFunction {
        let l = self.lower.len();
        let hi = (i >> l) + 1;
        let mons = self
            .top
            .iter()
            .enumerate()
            .filter(|(j, _)| hi >> j & 1 == 1)
            .chain(
                self.lower
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| i >> j & 1 == 1),
            )
            .map(|(_, &m)| m);
        BooleanFunction::from_monomials_xor(self.n, mons)
    }

    fn packed(&self) -> PackedFamily {
        let mask = |m: &Monomial| -> u128 {
            let vm = m.vars().to_index_mask(self.n);
            (0..1usize << self.n)
                .filter(|&x| x & vm == vm)
                .fold(0u128, |acc, x| acc | 1 << x)
        };
        PackedFamily {
            lower_len: self.lower.len(),
            top: self.top.iter().map(mask).collect(),
            lower: self.lower.iter().map(mask).collect(),
        }
    }
}

struct PackedFamily {
    lower_len: usize,
    top: Vec<u128>,
    lower: Vec<u128>,
}

impl PackedFamily {
    fn xor_masks(masks: &[u128], mut sel: u64) -> u128 {
        let mut acc = 0;
        while sel != 0 {
            acc ^= masks[sel.trailing_zeros() as usize];
            sel &= sel - 1;
        }
        acc
    }

    fn bits(&self, i: u64) -> u128 {
        let hi = (i >> self.lower_len) + 1;
        let lo = i & ((1u64 << self.lower_len) - 1);
        Self::xor_masks(&self.top, hi) ^ Self::xor_masks(&self.lower, lo)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    pub exec: Exec,
    pub long_run: bool,
    /// Number of contiguous shards; a default is chosen when `None`.
    pub shards: Option<usize>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            exec: Exec::Parallel,
            long_run: false,
            shards: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShardCount {
    pub start: u64,
    pub end: u64,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub n: usize,
    pub degree: usize,
    pub criterion: Criterion,
    pub family_size: u64,
    pub count: u64,
    pub shards: Vec<ShardCount>,
}

/// Counts family members satisfying `criterion`.
pub fn census(
    family: &FamilySpec,
    criterion: Criterion,
    opts: CensusOptions,
) -> Result<CensusResult> {
    let size = family.size();
    let cap = if opts.long_run {
        LONG_RUN_CENSUS_CAP
    } else {
        CENSUS_CAP
    };
    if size > cap as u128 {
        return Err(Error::SizeCapExceeded {
            what: if opts.long_run {
                "census family"
            } else {
                "census family (pass the long-run flag to raise the cap)"
            },
            size,
            cap: cap as u128,
        });
    }
    let size = size as u64;
    let shards = opts.shards.unwrap_or(256).clamp(1, size.max(1) as usize) as u64;
    let chunk = size.div_ceil(shards);
    let ranges: Vec<Range<u64>> = chunk_ranges(0..size, chunk);
    let packed = family.packed();
    let n = family.n;
    let counts = opts.exec.map_collect(&ranges, |r| {
        // each shard splits again so parallel mode keeps every worker busy
        let sub = chunk_ranges(r.clone(), 4096);
        let parts = opts.exec.map_collect(&sub, |rr| {
            let mut s = Searcher::new(n);
            rr.clone()
                .filter(|&i| {
                    s.load_bits(packed.bits(i));
                    criterion.holds_loaded(&mut s)
                })
                .count() as u64
        });
        parts.into_iter().sum::<u64>()
    });
    let shards: Vec<ShardCount> = ranges
        .iter()
        .zip(&counts)
        .map(|(r, &count)| ShardCount {
            start: r.start,
            end: r.end,
            count,
        })
        .collect();
    Ok(CensusResult {
        n,
        degree: family.degree,
        criterion,
        family_size: size,
        count: counts.iter().sum(),
        shards,
    })
}

/// Count over one index range of the family, for resuming a sharded run.
pub fn census_range(family: &FamilySpec, criterion: Criterion, range: Range<u64>) -> u64 {
    let packed = family.packed();
    let mut s = Searcher::new(family.n);
    range
        .filter(|&i| {
            s.load_bits(packed.bits(i));
            criterion.holds_loaded(&mut s)
        })
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(text: &str, n: usize) -> BooleanFunction {
        BooleanFunction::parse_anf(text, n).unwrap()
    }

    #[test]
    fn bent_examples() {
        assert!(is_bent(&f("0.1", 2)));
        assert!(is_bent(&f("0.1+2.3", 4)));
        assert!(!is_bent(&BooleanFunction::zero(1)));
        for n in [3, 5] {
            assert!(!is_bent(&GraphState::complete(n).to_quadratic()));
        }
        assert!(!is_bent(&f("0.1+1.2", 3)));
        assert!(!is_bent(&f("0.1.2", 3)));
    }

    #[test]
    fn bent4_examples() {
        assert!(!is_bent4(&f("0.1.2", 3)).0);
        let (b, c) = is_bent4(&f("0.1", 2));
        assert!(b);
        assert_eq!(c, Some(VarSet::EMPTY));
        assert!(!is_z4_bent(&f("0.1", 2)));
    }

    #[test]
    fn completely_ibent_fails_for_edge() {
        assert!(!is_completely_ibent(&f("0.1", 2)));
        assert!(!is_completely_ibent4(&f("0.1", 2)));
    }

    #[test]
    fn single_n_spec_is_flat() {
        let spec = single_n_witness(4, 0);
        assert_eq!(spec.to_string(), "NIII");
        let p = f("0.1.2+1.3+0.1.2.3", 4);
        let mut s = searcher_for(&p);
        let v = s.spectrum(spec.axes());
        assert!(crate::transform::fast::is_flat(&v, 1));
    }

    #[test]
    fn lc_bent_examples() {
        let star = GraphState::parse("01,02,03", 4).unwrap();
        let (b, w) = is_lc_bent(&star);
        assert!(b);
        assert_eq!(w.unwrap().rank(), 4);
        assert!(!is_bent(&star.to_quadratic()));
        let (b, w) = is_lc_bent(&GraphState::parse("04,15,25,34,45", 6).unwrap());
        assert!(!b && w.is_none());
    }

    #[test]
    fn report_serialises() {
        let r = classify(&f("0.1+0+1", 2));
        assert!(r.bent && r.bent4 && r.ibent && r.ibent4);
        assert!(!r.z4_bent && !r.completely_ibent && !r.completely_ibent4);
        assert_eq!(r.lc_bent, Some(true));
        assert!(r.ignored_affine.is_some());
        let text = toml::to_string(&r).unwrap();
        assert!(text.contains("bent4 = true"));
    }

    #[test]
    fn criterion_names_round_trip() {
        for c in Criterion::ALL {
            assert_eq!(c.name().parse::<Criterion>().unwrap(), c);
        }
        assert!("nope".parse::<Criterion>().is_err());
    }

    #[test]
    fn family_layout() {
        let fam = FamilySpec::new(5, 3).unwrap();
        assert_eq!(fam.size(), (1 << 20) - (1 << 10));
        assert_eq!(FamilySpec::new(4, 3).unwrap().size(), 15 << 6);
        let packed = fam.packed();
        for i in [0u64, 1, 1023, 1024, 500_000, fam.size() as u64 - 1] {
            let m = fam.member(i);
            assert_eq!(m.degree(), 3);
            assert!(crate::graph::affine_part(&m).is_zero());
            let t = m.truth_table();
            let bits = packed.bits(i);
            assert!(t
                .iter()
                .enumerate()
                .all(|(x, &b)| (bits >> x & 1) as u8 == b));
        }
        assert!(FamilySpec::new(8, 3).is_err());
        assert!(FamilySpec::new(4, 1).is_err());
    }

    #[test]
    fn small_census_modes_agree() {
        let fam = FamilySpec::new(3, 3).unwrap();
        let seq = CensusOptions {
            exec: Exec::Sequential,
            ..Default::default()
        };
        assert_eq!(census(&fam, Criterion::Bent4, seq).unwrap().count, 0);
        assert_eq!(census(&fam, Criterion::IBent, seq).unwrap().count, 0);
        let fam = FamilySpec::new(4, 3).unwrap();
        let a = census(&fam, Criterion::IBent, seq).unwrap();
        let b = census(
            &fam,
            Criterion::IBent,
            CensusOptions {
                shards: Some(7),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.count, b.count);
        assert_eq!(b.shards.len(), 7);
        assert_eq!(
            census_range(&fam, Criterion::IBent, 0..fam.size() as u64),
            a.count
        );
    }

    #[test]
    fn census_cap_refuses() {
        let fam = FamilySpec::new(7, 3).unwrap();
        assert!(matches!(
            census(&fam, Criterion::Bent4, CensusOptions::default()),
            Err(Error::SizeCapExceeded { .. })
        ));
    }
}
