use ihn_core::criteria::{classify, is_bent4, is_ibent4, is_lc_bent, Criterion, FamilySpec};
use ihn_core::graph::{gf2_rank, modified_diagonal, principal_submatrix};
use ihn_core::transform::fast::{is_flat, Searcher};
use ihn_core::transform::TransformSpec;
use ihn_core::{BooleanFunction, GraphState, VarSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Spectral flatness of each spec against full rank of the matching matrix.
#[test]
fn spectral_and_rank_agree_per_spec() {
    for n in 1..=5 {
        let pairs = n * (n - 1) / 2;
        let specs: Vec<TransformSpec> = (0..3u64.pow(n as u32))
            .map(|i| TransformSpec::from_index(n, i))
            .collect();
        for code in 0..1u64 << pairs {
            let g = GraphState::from_code(n, code);
            let mut s = Searcher::new(n);
            s.load_table(&g.to_quadratic().truth_table());
            for spec in &specs {
                let flat = is_flat(&s.spectrum(spec.axes()), spec.weight());
                let m = principal_submatrix(&modified_diagonal(&g, spec.r_n()), spec.r_i());
                assert_eq!(flat, gf2_rank(&m) == n - spec.r_i().len(), "{g} {spec}");
            }
        }
    }
}

#[test]
fn bent4_witness_is_first_full_rank_diagonal() {
    for n in 2..=5 {
        let pairs = n * (n - 1) / 2;
        for code in 0..1u64 << pairs {
            let g = GraphState::from_code(n, code);
            let (_, c) = is_bent4(&g.to_quadratic());
            let first = (0..1usize << n)
                .map(|m| VarSet::from_index_mask(m, n))
                .find(|&v| gf2_rank(&modified_diagonal(&g, v)) == n);
            assert_eq!(c, first, "{g}");
        }
    }
}

#[test]
fn ibent4_witness_is_lexicographically_first() {
    let f = BooleanFunction::parse_anf("0.1.2+2.3", 4).unwrap();
    let (ok, spec) = is_ibent4(&f);
    assert!(ok);
    let spec = spec.unwrap();
    let mut s = Searcher::new(4);
    s.load_table(&f.truth_table());
    for i in 1..spec.index() {
        let earlier = TransformSpec::from_index(4, i);
        assert!(
            !is_flat(&s.spectrum(earlier.axes()), earlier.weight()),
            "{earlier} is flat"
        );
    }
}

#[test]
fn connected_quadratics_up_to_five_are_lc_bent() {
    for n in 1..=5 {
        let pairs = n * (n - 1) / 2;
        for code in 0..1u64 << pairs {
            let g = GraphState::from_code(n, code);
            if g.is_connected() {
                let (b, w) = is_lc_bent(&g);
                assert!(b, "{g}");
                assert_eq!(w.unwrap().rank(), n & !1);
            }
        }
    }
}

#[test]
fn hierarchy_holds_on_random_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let t: Vec<u8> = (0..1usize << n).map(|_| rng.gen_range(0..2)).collect();
        let r = classify(&BooleanFunction::from_truth_table(n, &t).unwrap());
        assert!(r.hierarchy_holds());
        assert!(r.ibent4 && !r.z4_bent && !r.completely_ibent && !r.completely_ibent4);
    }
}

/// Six-variable cubics with each property exist; random sampling finds one.
#[test]
fn six_variable_cubics_exist() {
    let fam = FamilySpec::new(6, 3).unwrap();
    let size = fam.size() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for c in [Criterion::Bent4, Criterion::IBent] {
        let hit = (0..20_000)
            .map(|_| fam.member(rng.gen_range(0..size)))
            .find(|f| c.holds(f));
        let f = hit.unwrap_or_else(|| panic!("no {c} cubic sampled"));
        assert_eq!(f.degree(), 3);
    }
}
