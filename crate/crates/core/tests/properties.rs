use proptest::prelude::*;

use liefusion_core::fusion;
use liefusion_core::{LieContext, Weight};

fn ctx(t: &str) -> LieContext {
    LieContext::new(t.parse().unwrap()).unwrap()
}

fn labels(max: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..=max, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tensor_dimension_and_symmetry(
        t in prop::sample::select(vec!["A2", "B2", "G2", "A3"]),
        a in labels(2),
        b in labels(2),
    ) {
        let c = ctx(t);
        let r = c.root_system().rank();
        let lambda = Weight::new(a[..r].to_vec());
        let mu = Weight::new(b[..r].to_vec());
        let d = c.decompose(&lambda, &mu).unwrap();
        let total: u64 = d.components.iter().map(|(nu, m)| m * c.dim(nu).unwrap()).sum();
        prop_assert_eq!(total, c.dim(&lambda).unwrap() * c.dim(&mu).unwrap());
        prop_assert_eq!(&d.components, &c.decompose(&mu, &lambda).unwrap().components);
    }

    #[test]
    fn weyl_orbit_invariance(coords in prop::collection::vec(0i64..=1, 4), i in 0usize..4) {
        let c = ctx("F4");
        let rs = c.root_system();
        let ws = c.weight_system(&Weight::new(coords)).unwrap();
        for mu in ws.expanded(rs).keys() {
            prop_assert_eq!(ws.mult(rs, &rs.simple_reflection(i, mu)), ws.mult(rs, mu));
        }
    }

    #[test]
    fn fusion_bounded_by_tensor(a in 0usize..9, b in 0usize..9, n in 0usize..9) {
        let c = ctx("F4");
        let adm = fusion::admissible_set(c.root_system(), 3);
        let (x, y, z) = (&adm[a], &adm[b], &adm[n]);
        let f = fusion::fusion_general(&c, 3, x, y, z).unwrap().value;
        prop_assert!(f <= c.hom_dim(x, y, z).unwrap());
    }
}
