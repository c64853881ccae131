use std::collections::BTreeMap;

use ihn_core::transform::{
    apply_kernel, apply_transform, bipolar, is_flat, wht_z4_offset, Axis, Kernel, PowerValue,
    TransformSpec,
};
use ihn_core::{BooleanFunction, VarSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_functions(n: usize) -> impl Iterator<Item = BooleanFunction> {
    (0..1u64 << (1 << n)).map(move |bits| {
        let t: Vec<u8> = (0..1usize << n).map(|x| (bits >> x & 1) as u8).collect();
        BooleanFunction::from_truth_table(n, &t).unwrap()
    })
}

fn specs(n: usize) -> impl Iterator<Item = TransformSpec> {
    (0..3u64.pow(n as u32)).map(move |i| TransformSpec::from_index(n, i))
}

#[test]
fn z4_offset_matches_hn_spec_both_ways() {
    for n in 1..=4 {
        for f in all_functions(n) {
            for m in 0..1usize << n {
                let c = VarSet::from_index_mask(m, n);
                let off = is_flat(&wht_z4_offset(&f, c));
                let spec = TransformSpec::hn_from_offset(n, c);
                let hn = is_flat(&apply_transform(&bipolar(&f), &spec).unwrap());
                assert_eq!(off, hn, "{f} c={c:?}");
            }
        }
    }
}

/// Entry `(r on R_I, k elsewhere)` of a spec equals entry `k` of the
/// restricted function's transform on the free positions.
#[test]
fn fixed_positions_restrict_the_function() {
    for n in 2..=4 {
        for f in all_functions(n) {
            for spec in specs(n).filter(|s| !s.r_i().is_empty()) {
                let full = apply_transform(&bipolar(&f), &spec).unwrap();
                let r_i = spec.r_i();
                let free: Vec<usize> = (0..n).filter(|&j| !r_i.contains(j)).collect();
                let sub = TransformSpec::new(free.iter().map(|&j| spec.axis(j)).collect());
                for rbits in 0..1usize << r_i.len() {
                    let fixed: Vec<usize> = r_i.iter().collect();
                    let assignment: Vec<(usize, bool)> = fixed
                        .iter()
                        .enumerate()
                        .map(|(b, &j)| (j, rbits >> (fixed.len() - 1 - b) & 1 == 1))
                        .collect();
                    let g = f.restrict(&assignment).unwrap();
                    let part = apply_transform(&bipolar(&g), &sub).unwrap();
                    assert_eq!(part.scale_e(), full.scale_e());
                    for k in 0..1usize << free.len() {
                        let mut idx = 0usize;
                        for &(j, b) in &assignment {
                            idx |= (b as usize) << (n - 1 - j);
                        }
                        for (pos, &j) in free.iter().enumerate() {
                            idx |= (k >> (free.len() - 1 - pos) & 1) << (n - 1 - j);
                        }
                        assert_eq!(full.entries()[idx], part.entries()[k], "{f} {spec}");
                    }
                }
            }
        }
    }
}

fn normalised_powers(v: &ihn_core::SpectralVector) -> BTreeMap<PowerValue, usize> {
    let mut m = BTreeMap::new();
    for e in v.entries() {
        *m.entry(PowerValue::new(e.norm_sq(), v.scale_e()))
            .or_insert(0) += 1;
    }
    m
}

#[test]
fn x_and_xz_kernels_give_the_same_powers() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..=4 {
        for _ in 0..20 {
            let t: Vec<u8> = (0..1usize << n).map(|_| rng.gen_range(0..2)).collect();
            let f = BooleanFunction::from_truth_table(n, &t).unwrap();
            for spec in specs(n) {
                let ihn = apply_transform(&bipolar(&f), &spec).unwrap();
                let mut alt = bipolar(&f);
                for (pos, a) in spec.axes().iter().enumerate() {
                    let k = match a {
                        Axis::I => continue,
                        Axis::H => Kernel::xz(),
                        Axis::N => Kernel::x(),
                    };
                    alt = apply_kernel(&alt, pos, &k);
                }
                assert_eq!(
                    normalised_powers(&ihn),
                    normalised_powers(&alt),
                    "{f} {spec}"
                );
            }
        }
    }
}

#[test]
fn x0x1_flat_count_matches_rank_witnesses() {
    use ihn_core::graph::{gf2_rank, modified_diagonal, principal_submatrix};
    let f = BooleanFunction::parse_anf("0.1", 2).unwrap();
    let g = ihn_core::GraphState::from_quadratic(&f).unwrap();
    let flat = ihn_core::transform::all_ihn_spectra(&f)
        .unwrap()
        .filter(|(_, v)| v.is_flat())
        .count();
    let ranked = specs(2)
        .filter(|s| {
            let m = principal_submatrix(&modified_diagonal(&g, s.r_n()), s.r_i());
            gf2_rank(&m) == 2 - s.r_i().len()
        })
        .count();
    assert_eq!(flat, ranked);
}
