use confblocks::degreelab::*;
use confblocks::ratfun::SparsePoly;
use std::time::{Duration, Instant};

#[test]
fn suite_is_empty_below_each_bound() {
    for p in lemma_suite() {
        let start = Instant::now();
        let v = min_degree_certify(&p, DEFAULT_MONOMIAL_CEILING).unwrap();
        assert_eq!(v, Verdict::Empty { through: p.bound - 1 }, "{}", p.name);
        assert!(start.elapsed() < Duration::from_secs(60), "{}", p.name);
    }
}

#[test]
fn suite_report() {
    let r = run_lemma_suite(DEFAULT_MONOMIAL_CEILING);
    assert!(r.all_empty && r.bansun_example_ok && r.mindeg3_matches_k1);
    let names: Vec<&str> = r.entries.iter().map(|e| e.name.as_str()).collect();
    for want in ["mindeg1", "mindeg2", "mindeg3", "deg3", "deg3'", "mindegk+1 m=2", "mig4 m=1"] {
        assert!(names.contains(&want), "{want}");
    }
}

#[test]
fn solutions_at_bound_satisfy_constraints() {
    for p in [mindeg1(), mindeg2(), deg3(), deg3_prime(), mindeg_k1(1)] {
        let sols = homogeneous_solutions(&p, p.bound);
        assert!(!sols.is_empty(), "{}", p.name);
        for s in &sols {
            assert!(satisfies(&p, s), "{}", p.name);
        }
    }
}

#[test]
fn witness_below_a_too_high_bound() {
    let mut p = bansun_problem(3);
    p.bound = 3;
    match min_degree_certify(&p, DEFAULT_MONOMIAL_CEILING).unwrap() {
        Verdict::Witness { degree, poly } => {
            assert_eq!(degree, 2);
            assert!(satisfies(&p, &poly));
            assert!(bansun_decompose(&poly, &[0, 1, 2]).is_ok());
        }
        v => panic!("{v:?}"),
    }
}

#[test]
fn f4_configuration_is_rejected() {
    let vars: Vec<String> = (0..12).map(|i| format!("x{i}")).collect();
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let p = DegreeProblem::from_names("f4", &names, &[], &[vec!["x0", "x1"]], 21).unwrap();
    assert!(matches!(
        min_degree_certify(&p, DEFAULT_MONOMIAL_CEILING),
        Err(confblocks::Error::CeilingExceeded { .. })
    ));
}

#[test]
fn bansun_rejects_non_symmetric() {
    let g = SparsePoly::diff(2, 0, 1);
    assert!(bansun_decompose(&g, &[0, 1]).is_err());
}
