use std::sync::Arc;

use proptest::prelude::*;

use seqspec_core::corpus::{generate_corpus, is_small, moore_spectrum};
use seqspec_core::cospectrum::{
    adjunction_bijection_probe, frame_predicate, realize_left_adjoint, standard_frame, standard_frame_comparison,
    wedge_comparison,
};
use seqspec_core::homology::{Homology, HomologyGroup};
use seqspec_core::simplicial::standard::sphere;
use seqspec_core::simplicial::Budget;
use seqspec_core::smash_product::{kunneth_compare, make_partition, naive_smash, twist_iso, PartitionSpec};
use seqspec_core::spectra::{
    coequalizer_presentation, free_spectrum, is_stable_homology_iso, sphere_spectrum, stable_homology, wedge_spectra,
};

fn floor_half() -> seqspec_core::smash_product::PartitionFunction {
    make_partition(&PartitionSpec::FloorHalf, 8).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn corpus_presentations_and_frames(seed in 0u64..500) {
        let x = standard_frame(2).unwrap();
        for e in generate_corpus(seed, 5).unwrap() {
            prop_assert!(coequalizer_presentation(&e.spectrum).unwrap().is_iso(), "{}", e.name);
            if e.spectrum.truncation() <= 2 {
                let r = realize_left_adjoint(&x, &e.spectrum).unwrap();
                let phi = standard_frame_comparison(&x, &r, &e.spectrum).unwrap();
                prop_assert!(phi.is_levelwise_iso(), "{}", e.name);
            }
        }
    }

    #[test]
    fn corpus_pairs_commute_and_satisfy_kunneth(seed in 0u64..500) {
        let q = floor_half();
        let c = generate_corpus(seed, 3).unwrap();
        for a in &c {
            for b in &c {
                prop_assert!(twist_iso(&a.spectrum, &b.spectrum, &q).unwrap().two_sided().unwrap());
                prop_assert!(kunneth_compare(&a.spectrum, &b.spectrum, &q).unwrap().equal, "{} {}", a.name, b.name);
            }
        }
    }
}

#[test]
fn smashing_with_the_sphere_spectrum_preserves_homology() {
    let q = floor_half();
    let moore = moore_spectrum().unwrap();
    let s = naive_smash(&sphere_spectrum(), &moore, &q).unwrap();
    assert_eq!(stable_homology(s.spectrum()).unwrap(), stable_homology(&moore).unwrap());
}

#[test]
fn free_spectra_shift_homology() {
    for n in 0..=2 {
        for k in 0..=2 {
            let h = stable_homology(&free_spectrum(n, &sphere(k)).unwrap()).unwrap();
            assert_eq!(h, Homology::from_groups([(k as i64 - n as i64, HomologyGroup::free(1))]));
        }
    }
}

#[test]
fn realization_preserves_wedges() {
    let x = standard_frame(1).unwrap();
    let a = Arc::new(free_spectrum(1, &sphere(0)).unwrap());
    let b = Arc::new(moore_spectrum().unwrap());
    let f = wedge_comparison(&x, &a, &b).unwrap();
    assert!(f.is_levelwise_iso());
    assert!(is_stable_homology_iso(&f).unwrap());
    let w = wedge_spectra(&a, &b).unwrap();
    let r = realize_left_adjoint(&x, w.spectrum()).unwrap();
    assert_eq!(
        stable_homology(r.spectrum()).unwrap(),
        Homology::from_groups([(-1, HomologyGroup::free(1)), (0, HomologyGroup::from_cyclic(0, &[2.into()]))])
    );
}

#[test]
fn frame_predicate_and_probe_on_small_targets() {
    for k in 0..=2 {
        assert!(frame_predicate(&standard_frame(k).unwrap()).unwrap().holds);
    }
    let x = standard_frame(1).unwrap();
    let s = Arc::new(sphere_spectrum());
    for e in generate_corpus(2, 8).unwrap() {
        if e.spectrum.truncation() > 1 || !is_small(&e.spectrum, 6) {
            continue;
        }
        let p = adjunction_bijection_probe(&x, &s, &e.spectrum, &mut Budget::new(200_000)).unwrap();
        assert!(p.bijective, "{}", e.name);
    }
}
