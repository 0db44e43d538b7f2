use facecover::classify::{brute_class, classify_tree};
use facecover::decomposition::{is_biconnected, spr_tree_rooted};
use facecover::embedding::{is_planar_rotation, planar_embedding};
use facecover::harness::{gen_planar, Connectivity, GenParams};
use facecover::kernelize::{kernelize, rigidize, separator_vertices, two_separator_free, KernelConfig, Verdict};
use facecover::oracle::{decide, enumeration_cost, fcn_exact_via, OracleConfig, Route};
use facecover::Instance;
use proptest::prelude::*;

fn instance(seed: u64, n: u32, k: u32, density: f64, fraction: f64, bicon: bool) -> Instance {
    let mut p = GenParams::new(seed, n);
    p.k = k;
    p.density = density;
    p.terminal_fraction = fraction;
    if bicon {
        p.connectivity = Connectivity::Biconnected;
    }
    gen_planar(&p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_instances_are_valid(seed in any::<u64>(), n in 3u32..40, density in 0.0f64..=1.0, bicon in any::<bool>()) {
        let inst = instance(seed, n, 2, density, 0.4, bicon);
        let g = &inst.graph;
        prop_assert!(g.is_simple());
        prop_assert!(g.is_connected());
        prop_assert!(planar_embedding(g).is_some());
        if bicon {
            prop_assert!(is_biconnected(g));
        }
        prop_assert_eq!(&instance(seed, n, 2, density, 0.4, bicon), &inst);
    }

    #[test]
    fn kernel_keeps_the_answer(seed in any::<u64>(), n in 3u32..11, k in 1u32..4, density in 0.4f64..=1.0, fraction in 0.1f64..0.8) {
        let inst = instance(seed, n, k, density, fraction, false);
        let cfg = OracleConfig::default();
        let out = kernelize(&inst, &KernelConfig::default()).unwrap();
        let truth = decide(&inst.graph, k, &cfg).unwrap();
        let got = match out.verdict {
            Verdict::Yes => true,
            Verdict::No(_) => false,
            Verdict::Open => decide(&out.instance.graph, out.instance.k, &cfg).unwrap(),
        };
        prop_assert_eq!(got, truth);
        prop_assert!(out.instance.graph.is_simple());
        prop_assert!(planar_embedding(&out.instance.graph).is_some());
        prop_assert!(out.instance.k <= k);
    }

    #[test]
    fn routes_agree(seed in any::<u64>(), n in 3u32..8, density in 0.3f64..=1.0, fraction in 0.2f64..1.0) {
        let g = instance(seed, n, 1, density, fraction, false).graph;
        let cfg = OracleConfig::default();
        prop_assume!(enumeration_cost(&g) <= cfg.rotation_budget);
        prop_assert_eq!(
            fcn_exact_via(&g, Route::Rotations, &cfg).unwrap(),
            fcn_exact_via(&g, Route::Spr, &cfg).unwrap()
        );
    }

    #[test]
    fn classes_agree(seed in any::<u64>(), n in 4u32..10, density in 0.3f64..=1.0, fraction in 0.1f64..0.9) {
        let g = instance(seed, n, 1, density, fraction, true).graph;
        let tree = spr_tree_rooted(&g, g.edge_ids().next().unwrap()).unwrap();
        let cl = classify_tree(&tree);
        for t in 0..tree.len() {
            if t != tree.root() {
                prop_assert_eq!(cl.class(t), brute_class(&tree, t, &OracleConfig::default()).unwrap());
            }
        }
    }

    #[test]
    fn rigidization_is_planar_and_separator_free(seed in any::<u64>(), n in 3u32..16, density in 0.2f64..=1.0) {
        let g = instance(seed, n, 1, density, 0.3, false).graph;
        let rot = planar_embedding(&g).unwrap();
        let (h, r) = rigidize(&g, &rot, &separator_vertices(&g));
        prop_assert!(is_planar_rotation(&h, &r));
        prop_assert!(two_separator_free(&h));
        prop_assert!(h.vertex_count() - g.vertex_count() <= 6 * g.edge_count());
    }
}
