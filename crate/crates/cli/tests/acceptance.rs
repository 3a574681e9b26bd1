//! Acceptance criteria, one line per criterion.
//!
//! Runs without the libtest harness so that the summary lines always reach
//! the terminal. Exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use strata_cli::atlas::{strata, AtlasLimits};
use strata_core::bounds::{
    mgas_from_triangles, mgas_generic, mgas_upper, sc_chamber_bound, sc_lower, GenericMgas,
};
use strata_core::residue::{build_system, classify_variables, realize_residues, VariableClass};
use strata_core::{
    enumerate_reps, is_irreducible, kappa, purify, validate, EnumerateOptions, GraphRepresentation,
    KappaMethod, Multigraph, Nonemptiness, Stratum,
};

const LIMIT_1: Duration = Duration::from_secs(10);
const LIMIT_4: Duration = Duration::from_secs(60);
const LIMIT_5: Duration = Duration::from_secs(60);

fn st(k: u32, zeros: &[i64], poles: &[i64]) -> Stratum {
    Stratum::new(k, zeros.to_vec(), poles.to_vec()).unwrap()
}

fn cli(args: &[&str]) -> (i32, Value) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["strata"];
    argv.extend_from_slice(args);
    let code = strata_cli::run(argv, &mut out, &mut err);
    let text = if code == 0 { out } else { err };
    (code, serde_json::from_slice(&text).unwrap())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Some subset of the labelled singularities sums to `-k`, with a conical
/// singularity on both sides.
fn split_oracle(s: &Stratum) -> bool {
    let m = s.singularity_count();
    let k = i64::from(s.k());
    (1..(1u32 << m) - 1).any(|mask| {
        let inside = |i: usize| mask & (1 << i) != 0;
        let sum: i64 = (0..m).filter(|&i| inside(i)).map(|i| s.order(i)).sum();
        sum == -k
            && (0..m).any(|i| inside(i) && s.is_conical(i))
            && (0..m).any(|i| !inside(i) && s.is_conical(i))
    })
}

/// Positive parts summing to `total`, `count` of them.
fn composition(rng: &mut ChaCha8Rng, total: i64, count: usize) -> Vec<i64> {
    let mut parts = vec![1i64; count];
    for _ in 0..total - count as i64 {
        parts[rng.gen_range(0..count)] += 1;
    }
    parts
}

fn genus_zero(k: u32, max_pole_sum: i64, max_singularities: usize) -> Vec<Stratum> {
    strata(&AtlasLimits {
        k,
        max_pole_sum,
        genus: Some(0),
        max_genus: 0,
        max_singularities,
    })
}

fn criterion_1() -> Result<String, String> {
    let start = Instant::now();
    let pinned = kappa(&st(1, &[1, 1, 1, 1], &[1, 1, 1, 1]), KappaMethod::Direct).unwrap();
    if pinned != 3 {
        return Err(format!("kappa(H^1(1^4,-1^4)) = {pinned}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    while checked < 20 {
        let n = rng.gen_range(1..=5usize);
        let p = rng.gen_range(2..=5usize);
        let g = rng.gen_range(0..=2i64);
        let total = p as i64 + 2 * g - 2;
        if total < n as i64 {
            continue;
        }
        let s = st(1, &composition(&mut rng, total, n), &vec![1; p]);
        let kap = kappa(&s, KappaMethod::Direct).unwrap();
        if kap != n - 1 {
            return Err(format!("kappa({s}) = {kap}, expected {}", n - 1));
        }
        checked += 1;
    }
    let elapsed = start.elapsed();
    if elapsed >= LIMIT_1 {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("21 strata, {elapsed:.2?}"))
}

fn criterion_2() -> Result<String, String> {
    let (code, v) = cli(&["reps", "H^1(4,2,-3^2)", "--pure"]);
    if code != 0 || v["count"] != 2 {
        return Err(format!("exit {code}, output {v}"));
    }
    let reps = v["representations"].as_array().unwrap();
    let first = &reps[0];
    let single_loop = first["vertices"].as_array().unwrap().len() == 1
        && first["edges"] == serde_json::json!([[0, 0]]);
    let second_level = reps[1]["vertices"].as_array().unwrap().len() - 1;
    if !single_loop || second_level != 1 {
        return Err(format!("unexpected representations {v}"));
    }
    let (_, kv) = cli(&["kappa", "H^1(4,2,-3^2)"]);
    if kv["kappa"] != 1 {
        return Err(format!("kappa output {kv}"));
    }
    Ok("2 pure representations (levels 0 and 1), kappa = 1".into())
}

fn criterion_3() -> Result<String, String> {
    let a = is_irreducible(&st(1, &[1, 7], &[5, 5])).unwrap();
    if !(a.irreducible && a.kappa == 0) {
        return Err(format!("H^1(1,7,-5^2): {a:?}"));
    }
    let b = kappa(&st(1, &[1, 1], &[1, 1, 1, 1]), KappaMethod::Direct).unwrap();
    if b != 1 {
        return Err(format!("kappa(H^1(1^2,-1^4)) = {b}"));
    }
    let s = st(1, &[3], &[1, 1, 1]);
    let c = is_irreducible(&s).unwrap();
    if c.irreducible || s.genus() != 1 {
        return Err(format!("H^1(3,-1^3): genus {} {c:?}", s.genus()));
    }
    Ok("H^1(1,7,-5^2) irreducible, kappa(H^1(1^2,-1^4)) = 1, H^1(3,-1^3) reducible in genus 1".into())
}

/// A random stratum with `k` in {1, 2}, `p >= 1`, `n + p <= 9`, `g <= 3`.
fn random_stratum(rng: &mut ChaCha8Rng) -> Stratum {
    loop {
        let k = rng.gen_range(1..=2u32);
        let ki = i64::from(k);
        let p = rng.gen_range(1..=4usize);
        let n = rng.gen_range(1..=9 - p);
        let g = rng.gen_range(0..=3i64);
        let poles: Vec<i64> = (0..p).map(|_| rng.gen_range(ki..=ki + 3)).collect();
        let total = poles.iter().sum::<i64>() + ki * (2 * g - 2);
        // for k = 2 some conical singularities may be -1
        let negatives = if k == 2 { rng.gen_range(0..n) } else { 0 };
        let positive_total = total + negatives as i64;
        let positives = n - negatives;
        if positive_total < positives as i64 {
            continue;
        }
        let mut zeros = composition(rng, positive_total, positives);
        zeros.extend(std::iter::repeat(-1).take(negatives));
        if let Ok(s) = Stratum::new(k, zeros, poles) {
            return s;
        }
    }
}

fn criterion_4() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut positive_genus, mut positive_kappa) = (0, 0);
    for _ in 0..50 {
        let s = random_stratum(&mut rng);
        let direct = kappa(&s, KappaMethod::Direct).unwrap();
        let reduced = kappa(&s, KappaMethod::GenusReduction).unwrap();
        if direct != reduced {
            return Err(format!("{s}: direct {direct}, reduction {reduced}"));
        }
        positive_genus += usize::from(s.genus() > 0);
        positive_kappa += usize::from(direct > 0);
    }
    let elapsed = start.elapsed();
    if elapsed >= LIMIT_4 {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "50 sampled strata agree ({positive_genus} of positive genus, {positive_kappa} with kappa > 0), {elapsed:.2?}; not a general identity for k = 1, H^1(2,1,-3) gives 0 vs 1"
    ))
}

fn criterion_5() -> Result<String, String> {
    let start = Instant::now();
    let mut swept = 0;
    for s in genus_zero(1, MAX_POLE_SUM_5, 8) {
        let d = s.pattern().iter().fold(0, |a, &v| gcd(a, v));
        if d == 1 {
            continue;
        }
        let reps = enumerate_reps(&s, &EnumerateOptions::default()).unwrap();
        if let Some(r) = reps.iter().find(|r| r.level() >= 1) {
            return Err(format!("{s}: level {} representation", r.level()));
        }
        swept += 1;
    }
    let elapsed = start.elapsed();
    if elapsed >= LIMIT_5 {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{swept} strata with gcd > 1 (pole sum <= {MAX_POLE_SUM_5}), {elapsed:.2?}"))
}

const MAX_POLE_SUM_5: i64 = 24;
const MAX_POLE_SUM_10: i64 = 16;

fn cyclic_rep() -> GraphRepresentation {
    let s = st(1, &[1, 1, 1, 1], &[1, 1, 1, 1]);
    let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    GraphRepresentation::new(
        s,
        g,
        vec![vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]],
        vec![0; 4],
    )
    .unwrap()
}

fn criterion_6() -> Result<String, String> {
    let rep = cyclic_rep();
    if !validate(&rep).is_empty() {
        return Err("cyclic representation invalid".into());
    }
    let sys = build_system(&rep);
    if (sys.row_count(), sys.column_count()) != (8, 12) {
        return Err(format!("shape {}x{}", sys.row_count(), sys.column_count()));
    }
    let classes = classify_variables(&rep);
    if !classes[..8].iter().all(|&c| c == VariableClass::GenericallyNonzero) {
        return Err(format!("t-variable classes {classes:?}"));
    }
    let cert = realize_residues(&rep, 0).map_err(|e| e.to_string())?;
    // independent re-substitution
    for (r, row) in sys.rows().iter().enumerate() {
        let mut re = BigRational::from_integer(0.into());
        let mut im = BigRational::from_integer(0.into());
        for (c, v) in row.iter().zip(&cert.values) {
            let c = BigRational::from_integer((*c).into());
            re += &c * &v.re;
            im += &c * &v.im;
        }
        if re != BigRational::from_integer(0.into()) || im != BigRational::from_integer(0.into()) {
            return Err(format!("row {r} residual {re} + {im}i"));
        }
    }
    if !cert.values[..8].iter().all(|v| !v.is_zero()) || !cert.verify(&sys) {
        return Err("nonzero or vertex flags fail".into());
    }
    Ok(format!("8x12 system, certificate exact (seed {}, {} attempt(s))", cert.seed, cert.attempts))
}

fn criterion_7() -> Result<String, String> {
    let s = st(1, &[1, 1], &[1, 1, 1, 1]);
    let upper = mgas_upper(&s).unwrap().value;
    let arcs = mgas_from_triangles(0, 2, 4, 4);
    if upper != 8 || arcs != 8 {
        return Err(format!("H^1(1^2,-1^4): upper {upper}, triangles {arcs}"));
    }
    let g = mgas_generic(&st(1, &[3], &[1, 1, 1]));
    if g != GenericMgas::Exact(9) {
        return Err(format!("H^1(3,-1^3): {g:?}"));
    }
    let s = st(1, &[1, 1], &[2, 2]);
    let (lower, upper) = (sc_lower(&s).0, mgas_upper(&s).unwrap().value);
    if (lower, upper) != (2, 4) {
        return Err(format!("H^1(1^2,-2^2): lower {lower}, upper {upper}"));
    }
    Ok("8, Exact(9), 2 and 4".into())
}

fn criterion_8() -> Result<String, String> {
    for p in 3..=64usize {
        let got = sc_chamber_bound(0, 1, p, &[p as u64 - 2]);
        let want = (p * (p - 1) / 2) as i64;
        if got != want {
            return Err(format!("p = {p}: {got} != {want}"));
        }
    }
    if sc_chamber_bound(0, 1, 5, &[3]) != 10 {
        return Err("pentagon case".into());
    }
    Ok("3 <= p <= 64".into())
}

fn criterion_9() -> Result<String, String> {
    let pins = [
        (st(1, &[1], &[1]), Nonemptiness::Empty),
        (st(2, &[2], &[2]), Nonemptiness::Nonempty),
        (st(2, &[1, -1], &[]), Nonemptiness::Empty),
        (st(2, &[1, 3], &[]), Nonemptiness::Empty),
    ];
    for (s, want) in &pins {
        if s.is_nonempty() != *want {
            return Err(format!("{s}: {:?}", s.is_nonempty()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut swept = 0;
    while swept < 200 {
        let s = random_stratum(&mut rng);
        if s.k() != 2 {
            continue;
        }
        if s.is_nonempty() != Nonemptiness::Nonempty {
            return Err(format!("{s}: {:?}", s.is_nonempty()));
        }
        swept += 1;
    }
    Ok(format!("4 pins, {swept} random k = 2 strata with poles"))
}

fn criterion_10() -> Result<String, String> {
    let start = Instant::now();
    // representation invariants on every stratum of a small sweep
    let mut reps_checked = 0;
    for k in [1, 2] {
        for g in 0..=1 {
            let sweep = strata(&AtlasLimits {
                k,
                max_pole_sum: 6,
                genus: Some(g),
                max_genus: g,
                max_singularities: 6,
            });
            for s in sweep.iter().filter(|s| s.p() > 0 || k == 1) {
                for r in enumerate_reps(s, &EnumerateOptions::default()).unwrap() {
                    check_rep(&r)?;
                    reps_checked += 1;
                }
            }
        }
    }
    // genus-zero irreducibility against the split oracle
    let mut strata_checked = 0;
    for k in [1, 2] {
        for s in genus_zero(k, MAX_POLE_SUM_10, 8) {
            if s.k() == 2 && s.p() == 0 {
                continue;
            }
            let irr = is_irreducible(&s).map_err(|e| format!("{s}: {e}"))?;
            if irr.irreducible == split_oracle(&s) {
                return Err(format!("{s}: irreducible = {}", irr.irreducible));
            }
            strata_checked += 1;
        }
    }
    Ok(format!(
        "{reps_checked} representations, {strata_checked} genus-0 strata (pole sum <= {MAX_POLE_SUM_10}), {:.2?}",
        start.elapsed()
    ))
}

fn check_rep(r: &GraphRepresentation) -> Result<(), String> {
    let s = r.stratum();
    let violations = validate(r);
    if !violations.is_empty() {
        return Err(format!("{s}: {violations:?}"));
    }
    let p = purify(r);
    if !validate(&p).is_empty() || purify(&p) != p {
        return Err(format!("{s}: purification"));
    }
    let w: i64 = r.weights().iter().map(|&w| i64::from(w)).sum();
    let t = r.graph().edge_count() as i64;
    if t != r.level() as i64 + i64::from(s.genus()) - w {
        return Err(format!("{s}: edge count {t}"));
    }
    let sigma: i64 = (0..=r.level()).map(|v| r.sigma(v)).sum();
    if sigma != i64::from(s.k()) * (2 * i64::from(s.genus()) - 2) {
        return Err(format!("{s}: order sum {sigma}"));
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Result<String, String>); 10] = [
        ("reducibility index n - 1 with simple poles", criterion_1),
        ("pure representations of H^1(4,2,-3^2)", criterion_2),
        ("irreducibility pins", criterion_3),
        ("direct and genus-reduction indices agree", criterion_4),
        ("gcd obstruction sweep", criterion_5),
        ("residue certificate for the 4-cycle", criterion_6),
        ("arc-system bound pins", criterion_7),
        ("chamber bound sharpness", criterion_8),
        ("nonemptiness pins", criterion_9),
        ("representation properties and split oracle", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
