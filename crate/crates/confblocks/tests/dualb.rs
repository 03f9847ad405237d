mod common;

use common::{dualb_algebras, dualb_brute, simple_decompositions};
use confblocks::rootsys::{self, expected_positive_root_count};

#[test]
fn dualb_by_enumeration() {
    for name in dualb_algebras() {
        let rs = rootsys::root_system(&name).unwrap();
        let (count, fail) = dualb_brute(&rs);
        assert!(count >= rs.positive_roots.len(), "{name}");
        assert_eq!(fail, 0, "{name}");
        assert!(rs.check_dualb().holds, "{name}");
    }
}

#[test]
fn every_root_has_a_decomposition() {
    for name in dualb_algebras() {
        let rs = rootsys::root_system(&name).unwrap();
        assert_eq!(rs.positive_roots.len(), expected_positive_root_count(rs.family, rs.rank), "{name}");
        for g in &rs.positive_roots {
            let d = simple_decompositions(&rs, &g.coeffs);
            assert!(!d.is_empty(), "{name} {g}");
            assert!(d.iter().all(|s| s.len() as i64 == g.height()));
        }
    }
}

#[test]
fn g2_decompositions() {
    let rs = rootsys::root_system("G2").unwrap();
    let theta = rs.highest_root.coeffs.clone();
    assert_eq!(theta, vec![3, 2]);
    // 3a1+2a2 is reached only through a2, a1, a1, a1, a2 or a1, a2, a1, a1, a2
    assert_eq!(simple_decompositions(&rs, &theta).len(), 2);
}
