use crate::config::RunConfig;
use crate::report::{self, Report};
use crate::{CliError, Options};
use confblocks::admissible::{self, AdmissibleOptions};
use confblocks::blocks::{self, default_points};
use confblocks::degreelab::{self, DegreeProblem};
use confblocks::linalg::Q;
use confblocks::logforms::{self, MarkedPartition};
use confblocks::ratfun::{self, RationalForm};
use confblocks::rootsys;
use serde_json::{json, Value};

fn admissible_options(opts: &Options) -> AdmissibleOptions {
    AdmissibleOptions { stratum_cap: opts.stratum_cap, seed: opts.seed, ..AdmissibleOptions::default() }
}

fn instance_header(inst: &blocks::BlockInstance) -> Value {
    json!({
        "algebra": inst.rs.name(),
        "level": inst.k,
        "weights": inst.weights.iter().map(|w| w.coeffs.clone()).collect::<Vec<_>>(),
        "points": inst.points.iter().map(report::rational).collect::<Vec<_>>(),
    })
}

pub fn cmd_blocks(cfg: &RunConfig) -> Result<Report, CliError> {
    let inst = cfg.instance()?;
    let beta = cfg.coloring(inst.rs.rank)?.or_else(|| inst.natural_coloring());
    let mut body = instance_header(&inst);
    let Some(beta) = beta else {
        body["dim"] = json!(0);
        body["basis"] = json!([]);
        body["monomials"] = json!([]);
        body["diagnostic"] = json!("sum of weights is not a nonnegative combination of simple roots");
        return Ok(Report::new("blocks", body, true));
    };
    let cb = blocks::conformal_blocks(&inst, &beta)?;
    body["coloring"] = json!(beta.iter().map(|b| b + 1).collect::<Vec<_>>());
    body["dim"] = json!(cb.dim());
    body["monomials"] = json!(cb.space().monomials.iter().map(report::monomial).collect::<Vec<_>>());
    body["basis"] = report::matrix(cb.basis());
    if !cb.space().weight_ok {
        body["diagnostic"] = json!("coloring weight differs from the sum of weights");
    }
    Ok(Report::new("blocks", body, true))
}

pub fn cmd_verify_theorem(cfg: &RunConfig, opts: &Options) -> Result<Report, CliError> {
    let aopts = admissible_options(opts);
    let mut checks = Vec::new();
    let mut pass = true;
    if opts.suite {
        for inst in admissible::sl2_instances(2, 4, 4) {
            let c = admissible::verify_theorem(&inst, None, &aopts)?;
            pass &= c.pass;
            checks.push(json!(c));
        }
        for (inst, expected) in admissible::spot_instances() {
            let c = admissible::verify_theorem(&inst, None, &aopts)?;
            let ok = c.pass && c.dim_blocks == expected;
            pass &= ok;
            let mut v = json!(c);
            v["expected_dim"] = json!(expected);
            v["pass"] = json!(ok);
            checks.push(v);
        }
    } else {
        let inst = cfg.instance()?;
        let beta = cfg.coloring(inst.rs.rank)?;
        let c = admissible::verify_theorem(&inst, beta, &aopts)?;
        pass &= c.pass;
        checks.push(json!(c));
    }
    let passed = checks.iter().filter(|c| c["pass"] == json!(true)).count();
    let body = json!({ "instances": checks, "passed": passed, "total": checks.len() });
    Ok(Report::new("verify-theorem", body, pass))
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

pub fn cmd_logbasis(cfg: &RunConfig) -> Result<Report, CliError> {
    let (m, n, points, beta) = match &cfg.logbasis {
        Some(lb) => {
            let points = cfg.points()?.unwrap_or_else(|| default_points(lb.n));
            if points.len() != lb.n {
                return Err(CliError::Config(format!("expected {} points", lb.n)));
            }
            (lb.m, lb.n, points, None)
        }
        None => {
            let inst = cfg.instance()?;
            let beta = cfg
                .coloring(inst.rs.rank)?
                .or_else(|| inst.natural_coloring())
                .ok_or_else(|| CliError::Config("no coloring: sum of weights is not in the root cone".into()))?;
            (beta.len(), inst.points.len(), inst.points.clone(), Some((beta, inst.rs.rank)))
        }
    };
    let parts = logforms::enumerate_marked_partitions(m, n);
    let expected = factorial(m) * binomial(m + n - 1, n - 1);
    let forms: Vec<Value> = parts
        .iter()
        .map(|mp| json!({ "partition": mp.to_string(), "form": logforms::omega_basis_form(mp, m, &points).to_string() }))
        .collect();
    let mut body = json!({
        "m": m,
        "n": n,
        "count": parts.len(),
        "expected_count": expected.to_string(),
        "forms": forms,
    });
    if let Some((beta, rank)) = beta {
        let sym = logforms::symmetrized_basis(&beta, &points, rank)?;
        body["coloring"] = json!(beta.iter().map(|b| b + 1).collect::<Vec<_>>());
        body["symmetrized"] = Value::Array(
            sym.iter()
                .map(|(w, f)| json!({ "monomial": report::monomial(w), "form": f.to_string() }))
                .collect(),
        );
    }
    Ok(Report::new("logbasis", body, parts.len() as u128 == expected))
}

pub fn cmd_svmap(cfg: &RunConfig) -> Result<Report, CliError> {
    let inst = cfg.instance()?;
    let beta = cfg
        .coloring(inst.rs.rank)?
        .or_else(|| inst.natural_coloring())
        .ok_or_else(|| CliError::Config("no coloring: sum of weights is not in the root cone".into()))?;
    let cb = blocks::conformal_blocks(&inst, &beta)?;
    let mut images = Vec::new();
    let mut pass = true;
    for psi in cb.functionals.functionals() {
        let form = logforms::sv_map(&psi, &beta, &inst.points)?;
        let back = logforms::expand_in_basis(&form).and_then(|e| logforms::functional_from_expansion(&e, &beta));
        let round_trip = matches!(&back, Ok(b) if cb.space().to_dense(&to_vec(b)) == cb.space().to_dense(&to_vec(&psi)));
        pass &= round_trip;
        images.push(json!({ "form": report::form(&form), "round_trip": round_trip }));
    }
    let mut body = instance_header(&inst);
    body["coloring"] = json!(beta.iter().map(|b| b + 1).collect::<Vec<_>>());
    body["dim"] = json!(cb.dim());
    body["images"] = Value::Array(images);
    Ok(Report::new("svmap", body, pass))
}

fn to_vec(f: &confblocks::repspace::TensorFunctional) -> confblocks::repspace::TensorVec {
    f.coeffs.clone()
}

/// Parses `(1,2|3)` into 0-based chains.
pub fn parse_partition(s: &str) -> Result<MarkedPartition, CliError> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| CliError::Config(format!("partition {s:?} must look like (1,2|3)")))?;
    let chains = inner
        .split('|')
        .map(|c| {
            c.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| match x.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(CliError::Config(format!("bad variable {x:?} in partition"))),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let m = chains.iter().map(Vec::len).sum::<usize>();
    Ok(MarkedPartition::new(&(0..m).collect::<Vec<_>>(), chains)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Divisor {
    Diagonal(usize, usize),
    Point(usize, usize),
}

/// Parses `t2=t1` or `t1=z3` (1-based).
pub fn parse_divisor(s: &str) -> Result<Divisor, CliError> {
    let bad = || CliError::Config(format!("divisor {s:?} must look like t2=t1 or t1=z1"));
    let (l, r) = s.split_once('=').ok_or_else(bad)?;
    let index = |x: &str, p: char| -> Option<usize> {
        x.trim().strip_prefix(p)?.parse::<usize>().ok().filter(|&v| v >= 1).map(|v| v - 1)
    };
    let a = index(l, 't').ok_or_else(bad)?;
    if let Some(b) = index(r, 't') {
        Ok(Divisor::Diagonal(a, b))
    } else {
        Ok(Divisor::Point(a, index(r, 'z').ok_or_else(bad)?))
    }
}

pub fn cmd_residue(cfg: &RunConfig) -> Result<Report, CliError> {
    let rc = cfg.residue.as_ref().ok_or_else(|| CliError::Config("missing [residue] table".into()))?;
    let mp = parse_partition(&rc.partition)?;
    let n = mp.chains().len();
    let m = mp.vars().len();
    let points = cfg.points()?.unwrap_or_else(|| default_points(n));
    if points.len() != n {
        return Err(CliError::Config(format!("partition has {n} chains but {} points", points.len())));
    }
    let mut form = logforms::omega_basis_form(&mp, m, &points);
    let mut steps = vec![json!({ "divisor": Value::Null, "form": form.to_string() })];
    for d in &rc.divisors {
        form = match parse_divisor(d)? {
            Divisor::Diagonal(a, b) => form.residue_diagonal(a, b)?,
            Divisor::Point(a, j) => form.residue_at_point(a, j)?,
        };
        steps.push(json!({ "divisor": d, "form": form.to_string() }));
    }
    let mut body = json!({
        "partition": mp.to_string(),
        "points": points.iter().map(report::rational).collect::<Vec<_>>(),
        "steps": steps,
        "result": report::form(&form),
    });
    if let Some(v) = univariate_summary(&form) {
        body["univariate"] = v;
    }
    Ok(Report::new("residue", body, true))
}

fn univariate_summary(form: &RationalForm) -> Option<Value> {
    let r = ratfun::residues(form).ok()?;
    let total: Q = r.total();
    Some(json!({
        "finite": r.finite.iter().map(|(p, x)| json!([report::rational(p), report::rational(x)])).collect::<Vec<_>>(),
        "infinity": report::rational(&r.infinity),
        "sum": report::rational(&total),
    }))
}

pub fn cmd_degree_lemma(cfg: &RunConfig, opts: &Options) -> Result<Report, CliError> {
    if opts.suite {
        let r = degreelab::run_lemma_suite(opts.monomial_ceiling);
        let pass = r.all_empty && r.bansun_example_ok;
        return Ok(Report::new("degree-lemma", json!(r), pass));
    }
    let pc = cfg
        .problem
        .as_ref()
        .ok_or_else(|| CliError::Config("missing [problem] table (or pass --suite)".into()))?;
    let vars: Vec<&str> = pc.variables.iter().map(String::as_str).collect();
    let blocks: Vec<Vec<&str>> = pc.blocks.iter().map(|b| b.iter().map(String::as_str).collect()).collect();
    let block_refs: Vec<&[&str]> = blocks.iter().map(Vec::as_slice).collect();
    let diags: Vec<Vec<&str>> = pc.diagonals.iter().map(|d| d.iter().map(String::as_str).collect()).collect();
    let p = DegreeProblem::from_names(&pc.name, &vars, &block_refs, &diags, pc.bound)?;
    let count = degreelab::monomial_count(p.nvars(), p.bound.saturating_sub(1));
    if count > opts.monomial_ceiling {
        return Err(confblocks::Error::CeilingExceeded { count, ceiling: opts.monomial_ceiling }.into());
    }
    let entry = degreelab::run_problem(&p, opts.monomial_ceiling);
    let pass = entry.certified_through.is_some();
    Ok(Report::new("degree-lemma", json!({ "entries": [entry] }), pass))
}

pub fn cmd_root_info(cfg: &RunConfig, algebra: Option<&str>) -> Result<Report, CliError> {
    let name = algebra
        .or(cfg.algebra.as_deref())
        .ok_or_else(|| CliError::Config("missing `algebra` (config or --algebra)".into()))?;
    let rs = rootsys::root_system(name)?;
    let dualb = rs.check_dualb();
    let expected = rootsys::expected_positive_root_count(rs.family, rs.rank);
    let body = json!({
        "algebra": rs.name(),
        "rank": rs.rank,
        "cartan": rs.cartan,
        "gram": report::matrix(&rs.gram),
        "positive_roots": rs.positive_roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "positive_root_count": rs.positive_roots.len(),
        "expected_positive_root_count": expected,
        "highest_root": rs.highest_root.to_string(),
        "comarks": rs.comarks().iter().map(report::rational).collect::<Vec<_>>(),
        "dual_coxeter": rs.dual_coxeter,
        "dualb_holds": dualb.holds,
        "dualb_min_margin": report::rational(&dualb.min_margin),
    });
    Ok(Report::new("root-info", body, dualb.holds && expected == rs.positive_roots.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_and_divisor_syntax() {
        let mp = parse_partition("(2,1|3)").unwrap();
        assert_eq!(mp.chains(), &[vec![1, 0], vec![2]]);
        assert!(parse_partition("2,1|3").is_err());
        assert!(parse_partition("(1,1|2)").is_err());
        assert_eq!(parse_divisor("t2=t1").unwrap(), Divisor::Diagonal(1, 0));
        assert_eq!(parse_divisor("t1 = z2").unwrap(), Divisor::Point(0, 1));
        assert!(parse_divisor("t0=z1").is_err());
        assert!(parse_divisor("x1=t2").is_err());
    }

    #[test]
    fn blocks_sl2_vacuum() {
        let cfg = RunConfig::parse("algebra = \"A1\"\nlevel = 1\nweights = [[1], [1], [0]]").unwrap();
        let r = cmd_blocks(&cfg).unwrap();
        assert_eq!(r.body["dim"], json!(1));
    }

    #[test]
    fn blocks_weight_mismatch() {
        let cfg = RunConfig::parse("algebra = \"A1\"\nlevel = 1\nweights = [[1], [0]]").unwrap();
        let r = cmd_blocks(&cfg).unwrap();
        assert_eq!(r.body["dim"], json!(0));
        assert!(r.body["diagnostic"].is_string());
    }

    #[test]
    fn logbasis_count() {
        let cfg = RunConfig::parse("[logbasis]\nm = 3\nn = 2").unwrap();
        let r = cmd_logbasis(&cfg).unwrap();
        assert_eq!(r.body["count"], json!(24));
        assert!(r.pass);
    }
}
