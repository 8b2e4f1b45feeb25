use fqhc::code::{LinearCode, Weight};
use fqhc::decode::{folded_hamming_distance, syndrome, FoldedWord};
use fqhc::gf::Field;
use proptest::prelude::*;
use std::sync::Arc;

fn fields() -> Vec<Field> {
    [(2, 4), (3, 2), (7, 2), (2, 8)]
        .into_iter()
        .map(|(p, s)| Field::new(p, s).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn field_axioms(idx in 0usize..4, a in any::<u16>(), b in any::<u16>(), c in any::<u16>()) {
        let f = &fields()[idx];
        let n = f.order() as u16;
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.sub(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        let p = f.characteristic() as u64;
        // Frobenius is additive.
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    }

    #[test]
    fn folded_distance_between_bounds(
        a in proptest::collection::vec(0u16..4, 12),
        b in proptest::collection::vec(0u16..4, 12),
        m in prop_oneof![Just(1usize), Just(2), Just(3), Just(4)],
    ) {
        let d = a.iter().zip(&b).filter(|(x, y)| x != y).count();
        let fa = FoldedWord::new(m, a).unwrap();
        let fb = FoldedWord::new(m, b).unwrap();
        let fd = folded_hamming_distance(&fa, &fb).unwrap();
        prop_assert!(d.div_ceil(m) <= fd && fd <= d);
        prop_assert_eq!(fd, Weight::Block(m).of(
            &fa.symbols().iter().zip(fb.symbols()).map(|(x, y)| x ^ y).collect::<Vec<_>>()
        ));
    }

    #[test]
    fn dual_reduce_and_syndrome(rows in proptest::collection::vec(proptest::collection::vec(0u16..4, 7), 0..6),
                                v in proptest::collection::vec(0u16..4, 7),
                                w in proptest::collection::vec(0u16..4, 7)) {
        let f = Arc::new(Field::new(2, 2).unwrap());
        let code = LinearCode::from_rows(f.clone(), 7, &rows);
        prop_assert_eq!(code.dual().dual(), code.clone());
        prop_assert_eq!(code.dim() + code.dual().dim(), 7);

        let r = code.reduce(&v);
        prop_assert_eq!(code.reduce(&r), r.clone());
        let diff: Vec<u16> = v.iter().zip(&r).map(|(&x, &y)| f.sub(x, y)).collect();
        prop_assert!(code.contains_vector(&diff));

        let sum: Vec<u16> = v.iter().zip(&w).map(|(&x, &y)| f.add(x, y)).collect();
        let (sv, sw) = (syndrome(&code, &v).unwrap(), syndrome(&code, &w).unwrap());
        let s_sum: Vec<u16> = sv.iter().zip(&sw).map(|(&x, &y)| f.add(x, y)).collect();
        prop_assert_eq!(syndrome(&code, &sum).unwrap(), s_sum);
        prop_assert_eq!(syndrome(&code, &v).unwrap().iter().all(|&x| x == 0), code.contains_vector(&v));
    }
}
