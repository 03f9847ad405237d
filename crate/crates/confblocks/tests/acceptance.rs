mod common;

use common::*;
use confblocks::admissible::{self, AdmissibleOptions};
use confblocks::degreelab::{self, Verdict, DEFAULT_MONOMIAL_CEILING};
use confblocks::rootsys;
use std::process::ExitCode;
use std::time::Instant;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn c1_sl2_equality() -> Outcome {
    let insts = admissible::sl2_instances(2, 4, 4);
    let bad = verify_all(&insts);
    outcome(bad.is_empty(), format!("{} instances, {} failures {bad:?}", insts.len(), bad.len()))
}

fn c2_spot_instances() -> Outcome {
    let opts = AdmissibleOptions::default();
    let mut bad = Vec::new();
    let spots = admissible::spot_instances();
    for (inst, expected) in &spots {
        let c = admissible::verify_theorem(inst, None, &opts).unwrap();
        if !c.pass || c.dim_blocks != *expected || c.certified != Some(true) {
            bad.push(format!("{} {:?}", c.algebra, c.weights));
        }
    }
    outcome(bad.is_empty(), format!("{} sl3/G2 instances {bad:?}", spots.len()))
}

fn c3_fusion() -> Outcome {
    let (checked, bad) = fusion_mismatches(3);
    outcome(bad.is_empty(), format!("{checked} triples, mismatches {bad:?}"))
}

fn c4_degree_lemmas() -> Outcome {
    let mut bad = Vec::new();
    let mut slowest = 0.0f64;
    let suite = degreelab::lemma_suite();
    for p in &suite {
        let start = Instant::now();
        let v = degreelab::min_degree_certify(p, DEFAULT_MONOMIAL_CEILING);
        let secs = start.elapsed().as_secs_f64();
        slowest = slowest.max(secs);
        if !matches!(v, Ok(Verdict::Empty { through }) if through + 1 == p.bound) || secs >= 60.0 {
            bad.push(p.name.clone());
        }
    }
    outcome(bad.is_empty(), format!("{} problems EMPTY below bound, slowest {slowest:.2}s {bad:?}", suite.len()))
}

fn c5_dualb() -> Outcome {
    let mut total = 0;
    let mut bad = Vec::new();
    for name in dualb_algebras() {
        let rs = rootsys::root_system(&name).unwrap();
        let (count, fail) = dualb_brute(&rs);
        total += count;
        if fail > 0 || !rs.check_dualb().holds {
            bad.push(name);
        }
    }
    outcome(bad.is_empty(), format!("{total} decompositions over A1-6, B2-6, C2-6, D3-6, G2 {bad:?}"))
}

fn c6_residues() -> Outcome {
    let runs: [(&str, fn(u64, usize) -> Result<usize, String>); 8] = [
        ("iter1", iter1_suite),
        ("iter2", iter2_suite),
        ("iter3", iter3_suite),
        ("iter4", iter4_suite),
        ("lemmefondamental", lemmefondamental_suite),
        ("polyvanish", polyvanish_suite),
        ("polyvanish-sym", polyvanish_symmetric_suite),
        ("sum-of-residues", sum_residues_suite),
    ];
    let mut bad = Vec::new();
    for (i, (name, f)) in runs.iter().enumerate() {
        if let Err(e) = f(100 + i as u64, INSTANCES) {
            bad.push(format!("{name}: {e}"));
        }
    }
    outcome(bad.is_empty(), format!("{} suites x {INSTANCES} instances {bad:?}", runs.len()))
}

fn c7_sv_map() -> Outcome {
    let mut bad = Vec::new();
    for m in 1..=4 {
        for n in 1..=3 {
            if let Err(e) = sv_signed_permutation(m, n) {
                bad.push(format!("M={m} N={n}: {e}"));
            }
        }
    }
    for m in 1..=5 {
        for n in 1..=4 {
            if !partition_count_ok(m, n) {
                bad.push(format!("count M={m} N={n}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("signed permutations M<=4 N<=3, counts M<=5 N<=4 {bad:?}"))
}

fn c8_invariance() -> Outcome {
    let insts = theorem_instances();
    let mut bad = Vec::new();
    for inst in &insts {
        let f = invariance_failures(inst);
        if !f.is_empty() {
            bad.push(format!("{} {:?} {f:?}", inst.rs.name(), inst.weights));
        }
    }
    outcome(bad.is_empty(), format!("{} instances x 4 checks {bad:?}", insts.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 sl2 blocks = admissible", c1_sl2_equality),
        ("2 sl3/G2 spot equality", c2_spot_instances),
        ("3 sl2 fusion oracle", c3_fusion),
        ("4 degree-lemma suite", c4_degree_lemmas),
        ("5 dualb enumeration", c5_dualb),
        ("6 residue properties", c6_residues),
        ("7 SV-map bijectivity", c7_sv_map),
        ("8 invariance battery", c8_invariance),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        println!("[{}] criterion {name}: {} ({secs:.1}s)", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
