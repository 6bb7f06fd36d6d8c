use proptest::prelude::*;

use twocover::arrangement::{
    combinatorial_betti, equivariant_salvetti, pipeline, pipeline_with_base, salvetti_complex, FacePoset,
    LineArrangement, OmegaSubset, SalvettiCells,
};
use twocover::covers::{oracle_profiles, CoverOutcome};
use twocover::laurent::UnitPoint;

/// Up to five lines with small coefficients; duplicates and degenerate rows
/// are dropped.
fn arrangement() -> impl Strategy<Value = LineArrangement> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -3i64..=3), 1..=5).prop_filter_map("no lines", |raw| {
        let mut kept: Vec<[i64; 3]> = Vec::new();
        for (a, b, c) in raw {
            let candidate = [a, b, c];
            let mut with = kept.clone();
            with.push(candidate);
            if LineArrangement::from_ints(&with).is_ok() {
                kept = with;
            }
        }
        (!kept.is_empty()).then(|| LineArrangement::from_ints(&kept).unwrap())
    })
}

fn omega_for(arr: &LineArrangement, mask: u32) -> OmegaSubset {
    let n = arr.len();
    let picked: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
    if picked.is_empty() {
        OmegaSubset::all(n).unwrap()
    } else {
        OmegaSubset::new(picked, n).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn salvetti_homology_is_combinatorial(arr in arrangement()) {
        let poset = FacePoset::new(&arr);
        prop_assert_eq!(poset.euler_count(), 1);
        let h = salvetti_complex(&poset).homology();
        let (b0, b1, b2) = combinatorial_betti(&arr);
        prop_assert!(h.is_torsion_free());
        prop_assert_eq!(h.ranks(), vec![b0, b1, b2]);
        let [c0, c1, c2] = SalvettiCells::new(&poset).counts();
        prop_assert_eq!(c0 as i64 - c1 as i64 + c2 as i64, b0 as i64 - b1 as i64 + b2 as i64);
    }

    #[test]
    fn lift_specializes_to_the_integral_complex(arr in arrangement(), mask in any::<u32>(), base in any::<usize>()) {
        let poset = FacePoset::new(&arr);
        let omega = omega_for(&arr, mask);
        let base = base % poset.chambers.len();
        let lifted = equivariant_salvetti(&poset, &omega, base).unwrap();
        prop_assert_eq!(lifted.specialize(UnitPoint::Plus), salvetti_complex(&poset));
    }

    #[test]
    fn homology_is_independent_of_base_chamber(arr in arrangement(), mask in any::<u32>(), base in any::<usize>()) {
        let poset = FacePoset::new(&arr);
        let omega = omega_for(&arr, mask);
        let base = base % poset.chambers.len();
        let generic = equivariant_salvetti(&poset, &omega, poset.generic_base_chamber(&arr)).unwrap();
        let other = equivariant_salvetti(&poset, &omega, base).unwrap();
        prop_assert_eq!(oracle_profiles(&generic), oracle_profiles(&other));
    }

    #[test]
    fn pipeline_is_consistent(arr in arrangement(), mask in any::<u32>(), base in any::<usize>()) {
        let poset = FacePoset::new(&arr);
        let omega = omega_for(&arr, mask);
        let report = pipeline(&arr, &omega).unwrap();
        prop_assert!(report.betti_consistent());
        let lifted = equivariant_salvetti(&poset, &omega, poset.generic_base_chamber(&arr)).unwrap();
        let oracle = oracle_profiles(&lifted);
        let (b0, b1, b2) = report.combinatorial_betti;
        match &report.outcome {
            CoverOutcome::Verified(r) => {
                prop_assert_eq!(&report.reduced_ranks, &vec![b0, b1, b2]);
                prop_assert!(r.theorem_holds && r.torsion_matches && r.mod2_consistent && r.corollary2_consistent);
                prop_assert_eq!(r.corollary1_consistent, Some(true));
                prop_assert_eq!(&r.h_cover_direct, &oracle.h_cover_direct);
                prop_assert_eq!(&r.h_local, &oracle.h_local);
                prop_assert!(r.h_cover_direct.degree(1).rank() >= b1);
            }
            CoverOutcome::NonMinimalResidue(p) => {
                prop_assert_eq!(p, &oracle);
                prop_assert!(p.h_cover_direct.degree(1).rank() >= b1);
            }
        }
        let other = pipeline_with_base(&arr, &omega, &poset, base % poset.chambers.len()).unwrap();
        let profiles = |o: &CoverOutcome| match o {
            CoverOutcome::Verified(r) => (r.h_local.clone(), r.h_cover_direct.clone()),
            CoverOutcome::NonMinimalResidue(p) => (p.h_local.clone(), p.h_cover_direct.clone()),
        };
        prop_assert_eq!(profiles(&report.outcome), profiles(&other.outcome));
    }
}

#[test]
fn every_subset_of_small_arrangements() {
    let cases: [&[[i64; 3]]; 4] = [
        &[[1, 0, 0], [0, 1, 0]],
        &[[1, 0, 0], [0, 1, 0], [1, 1, -1]],
        &[[1, 0, 0], [0, 1, 0], [1, 1, 0]],
        &[[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0]],
    ];
    for lines in cases {
        let arr = LineArrangement::from_ints(lines).unwrap();
        for mask in 1u32..(1 << arr.len()) {
            let report = pipeline(&arr, &omega_for(&arr, mask)).unwrap();
            let CoverOutcome::Verified(r) = &report.outcome else {
                panic!("{lines:?} mask {mask}: reduction did not reach a minimal complex");
            };
            assert!(r.theorem_holds, "{lines:?} mask {mask}");
        }
    }
}

#[test]
fn two_crossing_lines_local_homology() {
    // The torus: local homology with both meridians acting by -1.
    let arr = LineArrangement::from_ints(&[[1, 0, 0], [0, 1, 0]]).unwrap();
    let report = pipeline(&arr, &OmegaSubset::all(2).unwrap()).unwrap();
    let CoverOutcome::Verified(r) = report.outcome else { panic!() };
    assert_eq!(r.h_local.to_string(), "(Z/2, Z/2, 0)");
    assert_eq!(r.h_cover_direct.to_string(), "(Z, Z^2, Z)");
    let single = pipeline(&arr, &OmegaSubset::new([1], 2).unwrap()).unwrap();
    let CoverOutcome::Verified(r) = single.outcome else { panic!() };
    assert_eq!(r.h_cover_direct.to_string(), "(Z, Z^2, Z)");
}
