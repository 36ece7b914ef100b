use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use seqspec_core::corpus::generate_corpus;
use seqspec_core::homology::{homology, is_divisor_chain, smith_normal_form, tensor, ChainComplex, Matrix};
use seqspec_core::json::{parse_spectrum, spectrum_to_string};
use seqspec_core::simplicial::standard::{sphere, three_edge_circle};
use seqspec_core::simplicial::{coequalizer, enumerate_pointed_maps, Budget, FiniteSimplicialSet, SimplicialMap, Wedge};
use seqspec_core::smash_product::{make_partition, PartitionSpec};

fn matrix(max: usize, spread: i64) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -spread..=spread], r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(c).map(<[i64]>::to_vec).collect();
            Matrix::from_rows(&rows)
        })
    })
}

/// `0 <- Z^b <- Z^a` in degrees `lo` and `lo + 1`.
fn two_term(lo: i64, m: &Matrix) -> ChainComplex {
    let b = m.rows();
    ChainComplex::new(lo, vec![b, m.cols()], vec![Matrix::zeros(0, b).to_sparse(), m.to_sparse()]).unwrap()
}

fn pointed_maps(k: &Arc<FiniteSimplicialSet>, l: &Arc<FiniteSimplicialSet>) -> Vec<SimplicialMap> {
    enumerate_pointed_maps(k, l, &mut Budget::new(100_000)).unwrap()
}

fn circles() -> Vec<Arc<FiniteSimplicialSet>> {
    let s1 = sphere(1);
    let wedge = Wedge::of(&[s1.clone(), s1.clone()]).unwrap().set().clone();
    vec![s1, Arc::new(three_edge_circle()), wedge]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_a_verified_divisor_chain(m in matrix(30, 9)) {
        let r = smith_normal_form(&m);
        prop_assert!(r.verify(&m));
        prop_assert!(is_divisor_chain(&r.diagonal));
        if m.rows() == m.cols() && m.rows() <= 8 {
            let product = r.diagonal.iter().fold(BigInt::from(1), |acc, d| acc * d);
            prop_assert_eq!(product, m.determinant().abs());
        }
    }

    #[test]
    fn tensor_homology_matches_kunneth(a in matrix(4, 4), b in matrix(4, 4), lo in -1i64..2) {
        let (c, d) = (two_term(lo, &a), two_term(0, &b));
        prop_assert_eq!(homology(&tensor(&c, &d)), homology(&c).kunneth(&homology(&d)));
    }

    #[test]
    fn injectivity_matches_brute_force(src in 0usize..3, tgt in 0usize..3, pick in any::<prop::sample::Index>()) {
        let sets = circles();
        let maps = pointed_maps(&sets[src], &sets[tgt]);
        prop_assume!(!maps.is_empty());
        let f = &maps[pick.index(maps.len())];
        let brute = (0..=2).all(|m| {
            let all = sets[src].all_simplices(m);
            all.iter().map(|s| f.apply(s)).collect::<HashSet<_>>().len() == all.len()
        });
        prop_assert_eq!(f.is_injective(), brute);
    }

    #[test]
    fn coequalizer_is_universal(tgt in 1usize..3, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let sets = circles();
        let (x, y) = (sphere(1), sets[tgt].clone());
        let maps = pointed_maps(&x, &y);
        let (f, g) = (&maps[i.index(maps.len())], &maps[j.index(maps.len())]);
        let q = coequalizer(f, g).unwrap();
        let p = q.projection();
        prop_assert_eq!(f.then(p).unwrap(), g.then(p).unwrap());
        prop_assert!(p.is_surjective());
        for z in &sets {
            for h in pointed_maps(&y, z) {
                let agrees = f.then(&h).unwrap() == g.then(&h).unwrap();
                match q.descend(&h) {
                    Ok(k) => {
                        prop_assert!(agrees);
                        prop_assert_eq!(p.then(&k).unwrap(), h);
                    }
                    Err(_) => prop_assert!(!agrees),
                }
            }
        }
    }

    #[test]
    fn corpus_documents_round_trip(seed in 0u64..1000) {
        for e in generate_corpus(seed, 6).unwrap() {
            let text = spectrum_to_string(&e.spectrum);
            let back = parse_spectrum(&text).unwrap();
            prop_assert!(back == *e.spectrum);
            prop_assert_eq!(spectrum_to_string(&back), text);
        }
    }

    #[test]
    fn partitions_step_by_at_most_one(a in 1usize..4, b in 1usize..4, m in 5usize..14) {
        for spec in [PartitionSpec::FloorHalf, PartitionSpec::Interleave(a, b)] {
            let q = make_partition(&spec, m).unwrap();
            prop_assert_eq!(q.q(0), 0);
            for n in 0..m {
                prop_assert!(q.q(n + 1) - q.q(n) <= 1);
                prop_assert_eq!(q.q(n) + q.p(n), n);
                prop_assert_eq!(q.complement().q(n), q.p(n));
            }
        }
    }

    #[test]
    fn table_partitions_validate(steps in prop::collection::vec(0usize..3, 1..10)) {
        let mut values = vec![0usize];
        for s in &steps {
            values.push(values.last().unwrap() + s);
        }
        let text = values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let ok = make_partition(&PartitionSpec::parse(&text).unwrap(), values.len() - 1).is_ok();
        let valid = steps.iter().all(|&s| s <= 1) && values.iter().enumerate().all(|(n, &v)| v <= n);
        let last = values.len() - 1;
        let unbounded = values[last] > 0 && values[last] < last;
        prop_assert_eq!(ok, valid && unbounded, "{}", text);
    }
}

#[test]
fn zero_matrix_has_zero_diagonal() {
    let r = smith_normal_form(&Matrix::zeros(3, 5));
    assert!(r.diagonal.iter().all(Zero::is_zero));
    assert!(r.diagonal.iter().all(|d| !d.is_negative()));
}
