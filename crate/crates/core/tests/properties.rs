use mpg4_core::chrompoly::{chromatic_polynomial, evaluate, Scalar};
use mpg4_core::coloring::{count_proper_colorings, enumerate_partitions, kempe_interchange, Coloring};
use mpg4_core::corpus::enumerate_mpg;
use mpg4_core::triangulation::{canonical_certificate, decode_graph6, encode_graph6, Triangulation};
use mpg4_core::wheelops::{all_extension_sites, contract_wheel, extend_wheel};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use std::sync::OnceLock;

fn corpus() -> &'static [Triangulation] {
    static C: OnceLock<Vec<Triangulation>> = OnceLock::new();
    C.get_or_init(|| (4..=9).flat_map(|n| enumerate_mpg(n, 3).unwrap().graphs).collect())
}

fn config(cases: u32, seed: u64) -> ProptestConfig {
    ProptestConfig { cases, rng_seed: RngSeed::Fixed(seed), ..ProptestConfig::default() }
}

/// A corpus graph and a proper 4-colouring of it.
fn colored() -> impl Strategy<Value = (Triangulation, Coloring)> {
    (0..corpus().len(), any::<prop::sample::Index>(), Just(()).prop_perturb(|_, mut rng| {
        let mut p = [1u8, 2, 3, 4];
        for i in (1..4).rev() {
            p.swap(i, rng.random_range(0..=i));
        }
        p
    }))
        .prop_map(|(gi, pi, perm)| {
            let g = corpus()[gi].clone();
            let set = enumerate_partitions(&g, 4);
            let p = &set.partitions[pi.index(set.len())];
            let mut colors = vec![0u8; g.order()];
            for (i, c) in p.classes.iter().enumerate() {
                for &v in c {
                    colors[v] = perm[i];
                }
            }
            (g, Coloring::new(colors, 4))
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(config(10_000, 0x4b656d70))]

    #[test]
    fn kempe_swap_is_a_proper_involution((g, f) in colored(), v in any::<prop::sample::Index>(), j in 1u8..=3) {
        let v = v.index(g.order());
        let i = f.colors[v];
        let j = if j >= i { j + 1 } else { j };
        let h = kempe_interchange(&g, &f, i, j, v).unwrap();
        prop_assert!(h.is_proper(&g));
        prop_assert_eq!(kempe_interchange(&g, &h, i, j, v).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(config(256, 1))]

    #[test]
    fn polynomial_counts_colourings(gi in 0..corpus().len(), k in 0usize..=6) {
        let g = &corpus()[gi];
        let p = chromatic_polynomial(g).unwrap();
        prop_assert_eq!(evaluate(&p, &Scalar::Int(BigInt::from(k))), Scalar::Int(BigInt::from(count_proper_colorings(g, k))));
    }

    #[test]
    fn partitions_account_for_every_colouring(gi in 0..corpus().len()) {
        let g = &corpus()[gi];
        let set = enumerate_partitions(g, 4);
        prop_assert_eq!(set.coloring_count(), count_proper_colorings(g, 4));
    }

    #[test]
    fn certificate_ignores_labels_and_orientation((gi, perm) in (0..corpus().len()).prop_flat_map(|i| (Just(i), permutation(corpus()[i].order()))), flip in any::<bool>()) {
        let g = &corpus()[gi];
        let mut h = g.relabel(&perm);
        if flip {
            h = h.mirror();
        }
        prop_assert_eq!(canonical_certificate(&h), canonical_certificate(g));
    }

    #[test]
    fn graph6_round_trip((gi, perm) in (0..corpus().len()).prop_flat_map(|i| (Just(i), permutation(corpus()[i].order())))) {
        let g = corpus()[gi].relabel(&perm);
        let back = decode_graph6(&encode_graph6(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(canonical_certificate(&back), canonical_certificate(&g));
    }

    #[test]
    fn extension_contracts_back(gi in 0..corpus().len(), si in any::<prop::sample::Index>()) {
        let g = &corpus()[gi];
        let sites = all_extension_sites(g);
        let site = sites[si.index(sites.len())];
        let (h, step) = extend_wheel(g, site).unwrap();
        prop_assert!(h.is_maximal());
        prop_assert_eq!(h.order(), g.order() + if site.wheel_size() == 3 { 1 } else { 2 });
        prop_assert_eq!(canonical_certificate(&step.apply(&h).unwrap()), canonical_certificate(g));
        prop_assert_eq!(canonical_certificate(&step.recover(g).unwrap().0), canonical_certificate(&h));
    }

    #[test]
    fn contraction_recovers(gi in 0..corpus().len(), vi in any::<prop::sample::Index>()) {
        let g = &corpus()[gi];
        let v = vi.index(g.order());
        let k = g.degree(v);
        prop_assume!((3..=5).contains(&k));
        if let Ok((h, step)) = contract_wheel(g, v, k) {
            prop_assert_eq!(canonical_certificate(&step.recover(&h).unwrap().0), canonical_certificate(g));
        }
    }
}
