use proptest::prelude::*;

use zeckstep::sets::SetCursor;
use zeckstep::{
    classify_step, decompose, floor_div_phi, floor_n_phi, membership, recompose, step, successor,
    summand_count, FibTable, SetId, StepClass, ZeckRep,
};

fn table() -> &'static FibTable {
    FibTable::shared()
}

proptest! {
    #[test]
    fn decompose_round_trips(n in any::<u64>()) {
        let rep = decompose(n, table()).unwrap();
        prop_assert!(ZeckRep::new(rep.indices().to_vec()).is_ok());
        prop_assert_eq!(recompose(&rep, table()).unwrap(), n);
    }

    #[test]
    fn successor_is_decompose_of_next(n in 0..u64::MAX) {
        let next = successor(&decompose(n, table()).unwrap()).unwrap();
        prop_assert_eq!(next, decompose(n + 1, table()).unwrap());
    }

    #[test]
    fn positive_steps_are_one(n in 1..u64::MAX) {
        let f = step(n).unwrap();
        prop_assert!(f <= 1);
        prop_assert_eq!(classify_step(n).unwrap(), StepClass::from_step(f));
    }

    #[test]
    fn kernel_brackets_m_phi(m in 0..=1u64 << 62) {
        // i128 headroom limits m to 2^62 here. p = ⌊mφ⌋ iff p² - pm - m² < 0 <= (p+1)² - (p+1)m - m², with p >= m
        let p = floor_n_phi(m).unwrap() as i128;
        let m = m as i128;
        prop_assert!(p * p - p * m - m * m < 0);
        let q = p + 1;
        prop_assert!(q * q - q * m - m * m > 0);
        prop_assert_eq!(floor_div_phi(m as u64).unwrap() as i128, p - m);
    }

    #[test]
    fn membership_matches_oracle_at_random_points(n in 1..u64::MAX - 2) {
        let l0 = summand_count(n);
        let l1 = summand_count(n + 1);
        let l2 = summand_count(n + 2);
        prop_assert_eq!(membership(SetId::S1, n).unwrap(), l0 < l1);
        prop_assert_eq!(membership(SetId::S2, n).unwrap(), l0 > l1);
        prop_assert_eq!(membership(SetId::S3, n).unwrap(), l0 < l1 && l1 > l2);
    }

    #[test]
    fn z_membership_matches_representation(n in 1..u64::MAX / 2, k in 2u32..60) {
        let rep = decompose(n, table()).unwrap();
        prop_assert_eq!(membership(SetId::Z(k), n).unwrap(), rep.contains(k));
        prop_assert_eq!(
            membership(SetId::Zpair(k), n).unwrap(),
            rep.contains(k) && rep.contains(k + 2)
        );
    }

    #[test]
    fn cursor_matches_membership(start in 1u64..1u64 << 40, k in 2u32..20) {
        let mut cursor = SetCursor::new(SetId::Z(k), start).unwrap();
        for n in start..start + 200 {
            prop_assert_eq!(cursor.contains(n), membership(SetId::Z(k), n).unwrap());
        }
    }
}
