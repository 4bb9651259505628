//! Acceptance suite: eleven criteria, each an exact integer comparison over a
//! seeded corpus. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use fatpoints::exactlinalg::{Matrix, Rational};
use fatpoints::scheme::{gen_random, rnc_points};
use fatpoints::verify::{check_two_largest, rnc_reg_formula, run_checks};
use fatpoints::{
    CheckKind, Engine, FatPointScheme, PointConfig, ProjectivePoint, VerificationReport,
};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{corpus, naive_rank, single_point_hilbert, Case, CORPUS_COLUMN_CAP};

struct Outcome {
    id: usize,
    title: &'static str,
    checked: usize,
    failures: Vec<String>,
    elapsed: Duration,
    extra: Option<String>,
}

impl Outcome {
    fn new(id: usize, title: &'static str) -> Self {
        Outcome {
            id,
            title,
            checked: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
            extra: None,
        }
    }

    fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, what: String) {
        self.failures.push(what);
    }

    fn report(&self) {
        println!(
            "{} [{:>2}] {} ({} checks, {:.2}s){}",
            if self.pass() { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checked,
            self.elapsed.as_secs_f64(),
            self.extra
                .as_deref()
                .map(|e| format!(" {e}"))
                .unwrap_or_default()
        );
        for f in self.failures.iter().take(5) {
            println!("       {f}");
        }
        if self.failures.len() > 5 {
            println!("       ... {} more", self.failures.len() - 5);
        }
    }
}

fn single_fat_point() -> Outcome {
    let mut out = Outcome::new(
        1,
        "single fat point: reg = m - 1 and H matches the closed form",
    );
    let start = Instant::now();
    let engine = Engine::default();
    for n in 1..=3usize {
        for m in 1..=4u32 {
            let mut coords = vec![0i64; n + 1];
            coords[0] = 1;
            let generic: Vec<i64> = (0..=n as i64).map(|j| 2 * j - 3).collect();
            for point in [coords, generic] {
                let z = FatPointScheme::single(ProjectivePoint::from_integers(&point).unwrap(), m)
                    .unwrap();
                let reg = engine.regularity_index(&z).unwrap();
                out.checked += 1;
                if reg != m as usize - 1 {
                    out.fail(format!(
                        "n={n} m={m} point={point:?}: reg {reg} != {}",
                        m - 1
                    ));
                }
                for t in 0..=m as usize + 1 {
                    let h = engine.hilbert_function(&z, t).unwrap() as u128;
                    let expected = single_point_hilbert(n, m as usize, t);
                    out.checked += 1;
                    if h != expected {
                        out.fail(format!(
                            "n={n} m={m} point={point:?}: H({t}) = {h} != {expected}"
                        ));
                    }
                }
            }
        }
    }
    out.elapsed = start.elapsed();
    if out.elapsed >= Duration::from_secs(1) {
        out.fail(format!("took {:.2}s, budget 1s", out.elapsed.as_secs_f64()));
    }
    out
}

/// Criteria 2 to 8 share one pass over the corpus.
struct CorpusRun {
    reg: Outcome,
    transfer: Outcome,
    one_step: Outcome,
    stable: Outcome,
    ideal_dim: Outcome,
    restriction: Outcome,
    two_largest: Outcome,
    shifted_failures: usize,
    shifted_witness: Option<String>,
}

fn absorb(
    out: &mut Outcome,
    report: &VerificationReport,
    case: &Case,
    m: usize,
    elapsed: Duration,
) {
    out.elapsed += elapsed;
    out.checked += report.records.len();
    if !report.is_consistent() {
        out.fail(format!("{} -> P^{m}: inconsistent report", case.label()));
    }
    if let Some(r) = report.counterexample() {
        out.fail(format!(
            "{} -> P^{m}: t={:?} {} {} {} ({})",
            case.label(),
            r.t,
            r.lhs,
            r.relation.symbol(),
            r.rhs,
            r.label.as_deref().unwrap_or("")
        ));
    }
}

fn corpus_checks(engine: &Engine, cases: &[Case]) -> CorpusRun {
    let mut run = CorpusRun {
        reg: Outcome::new(2, "regularity index unchanged by the embedding"),
        transfer: Outcome::new(3, "transfer formula for H_m(t), 0 <= t < reg"),
        one_step: Outcome::new(4, "single-step identity, monotonicity and strictness"),
        stable: Outcome::new(5, "stable range values at reg and reg + 1"),
        ideal_dim: Outcome::new(6, "ideal-dimension identity, coefficient C(m-n-1+k, k)"),
        restriction: Outcome::new(
            7,
            "restriction membership and intersection dimension, t <= reg + 1",
        ),
        two_largest: Outcome::new(8, "reg >= m_1 + m_2 - 1"),
        shifted_failures: 0,
        shifted_witness: None,
    };
    let kinds = [
        CheckKind::Reg,
        CheckKind::Transfer,
        CheckKind::OneStep,
        CheckKind::Stable,
        CheckKind::IdealDim,
        CheckKind::IdealDimShifted,
        CheckKind::Restriction,
    ];
    for case in cases {
        let z = &case.z;
        for m in case.targets() {
            for kind in kinds {
                let start = Instant::now();
                let report = match run_checks(engine, z, m, &[kind]) {
                    Ok(mut r) => r.remove(0),
                    Err(e) => {
                        let out = match kind {
                            CheckKind::Reg => &mut run.reg,
                            CheckKind::Transfer => &mut run.transfer,
                            CheckKind::OneStep => &mut run.one_step,
                            CheckKind::Stable => &mut run.stable,
                            CheckKind::Restriction => &mut run.restriction,
                            _ => &mut run.ideal_dim,
                        };
                        out.fail(format!("{} -> P^{m}: {kind:?} errored: {e}", case.label()));
                        continue;
                    }
                };
                let elapsed = start.elapsed();
                match kind {
                    CheckKind::Reg => absorb(&mut run.reg, &report, case, m, elapsed),
                    CheckKind::Transfer => absorb(&mut run.transfer, &report, case, m, elapsed),
                    CheckKind::OneStep => absorb(&mut run.one_step, &report, case, m, elapsed),
                    CheckKind::Stable => absorb(&mut run.stable, &report, case, m, elapsed),
                    CheckKind::IdealDim => absorb(&mut run.ideal_dim, &report, case, m, elapsed),
                    CheckKind::Restriction => {
                        absorb(&mut run.restriction, &report, case, m, elapsed)
                    }
                    CheckKind::IdealDimShifted => {
                        run.ideal_dim.elapsed += elapsed;
                        if !report.pass && m >= z.ambient_dim() + 2 {
                            run.shifted_failures += 1;
                            if run.shifted_witness.is_none() {
                                let r = report.counterexample().unwrap();
                                run.shifted_witness = Some(format!(
                                    "{} -> P^{m} at t={}: {} vs shifted {}",
                                    case.label(),
                                    r.t.unwrap(),
                                    r.lhs,
                                    r.rhs
                                ));
                            }
                        }
                    }
                    _ => unreachable!(),
                }
            }
        }
        if z.len() >= 2 {
            let start = Instant::now();
            match check_two_largest(engine, z) {
                Ok(report) => absorb(
                    &mut run.two_largest,
                    &report,
                    case,
                    z.ambient_dim(),
                    start.elapsed(),
                ),
                Err(e) => run.two_largest.fail(format!("{}: {e}", case.label())),
            }
        }
    }
    if run.shifted_failures == 0 {
        run.ideal_dim
            .fail("diagnostic coefficient C(m-n+k, k) never failed with m >= n + 2".to_string());
    }
    run.ideal_dim.extra = Some(match &run.shifted_witness {
        Some(w) => format!(
            "; shifted variant fails on {} instances with m >= n+2, e.g. {w}",
            run.shifted_failures
        ),
        None => "; shifted variant never failed".to_string(),
    });
    run
}

fn rnc_formula(engine: &Engine) -> Outcome {
    let mut out = Outcome::new(
        9,
        "regularity on the rational normal curve matches the closed form",
    );
    let start = Instant::now();
    let mut configs = 0;

    // (1:0:0), (0:0:1), (1:1:1), (1:2:4), each doubled: reg = 4
    let params: Vec<(Rational, Rational)> = [(1, 0), (0, 1), (1, 1), (1, 2)]
        .iter()
        .map(|&(a, b)| {
            (
                Rational::from_integer(a.into()),
                Rational::from_integer(b.into()),
            )
        })
        .collect();
    let points = rnc_points(2, &params).unwrap();
    let z = FatPointScheme::from_components(
        2,
        points
            .into_iter()
            .map(|p| fatpoints::Component::new(p, 2))
            .collect(),
    )
    .unwrap();
    let reg = engine.regularity_index(&z).unwrap();
    let formula = rnc_reg_formula(&[2, 2, 2, 2], 2).unwrap();
    out.checked += 1;
    configs += 1;
    if (reg, formula) != (4, 4) {
        out.fail(format!(
            "n=2 mults (2,2,2,2): reg {reg}, formula {formula}, expected 4"
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x726e63);
    for n in 1..=3usize {
        for seed in 0..20u64 {
            let s = rng.gen_range(2..=6);
            let mults: Vec<u32> = (0..s).map(|_| rng.gen_range(1..=3)).collect();
            let z = gen_random(n, &mults, PointConfig::Rnc, 1000 + seed).unwrap();
            configs += 1;
            out.checked += 1;
            if !z.on_rational_normal_curve() {
                out.fail(format!(
                    "n={n} seed={seed}: generated points are off the curve"
                ));
                continue;
            }
            let reg = engine.regularity_index(&z).unwrap();
            let formula = rnc_reg_formula(&mults, n).unwrap();
            if reg != formula {
                out.fail(format!(
                    "n={n} mults={mults:?} seed={seed}: reg {reg} != formula {formula}"
                ));
            }
        }
    }
    if configs < 50 {
        out.fail(format!("only {configs} configurations"));
    }
    out.elapsed = start.elapsed();
    out
}

fn table_shape(engine: &Engine, cases: &[Case]) -> Outcome {
    let mut out = Outcome::new(
        10,
        "Hilbert table: H(0) = 1, strict increase to e, flat at reg + 1",
    );
    let start = Instant::now();
    for case in cases {
        let z = &case.z;
        let e = z.multiplicity();
        let reg = match engine.regularity_index(z) {
            Ok(r) => r,
            Err(err) => {
                out.fail(format!("{}: {err}", case.label()));
                continue;
            }
        };
        let h: Vec<u64> = (0..=reg + 1)
            .map(|t| engine.hilbert_function(z, t).unwrap())
            .collect();
        out.checked += 1;
        let strict = h[..=reg].windows(2).all(|w| w[0] < w[1]);
        if h[0] != 1 || !strict || h[reg] != e || h[reg + 1] != e {
            out.fail(format!("{}: H = {h:?}, e = {e}", case.label()));
        }
        match engine.hilbert_table(z) {
            Ok(table) if table.values == h[..=reg] && table.reg == reg => {}
            other => out.fail(format!(
                "{}: hilbert_table disagrees: {other:?}",
                case.label()
            )),
        }
    }
    out.elapsed = start.elapsed();
    out
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<Rational>> {
    let rows = rng.gen_range(1..=8);
    let cols = rng.gen_range(1..=8);
    let entry = |rng: &mut ChaCha8Rng| -> Rational {
        let num = BigInt::from(rng.gen_range(-9i64..=9));
        let den = if rng.gen_bool(0.2) {
            rng.gen_range(1i64..=4)
        } else {
            1
        };
        Rational::new(num, BigInt::from(den))
    };
    match rng.gen_range(0..3) {
        // sparse
        0 => (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        if rng.gen_bool(0.5) {
                            Rational::zero()
                        } else {
                            entry(rng)
                        }
                    })
                    .collect()
            })
            .collect(),
        // low rank product
        1 => {
            let r = rng.gen_range(0..=rows.min(cols));
            let a: Vec<Vec<Rational>> = (0..rows)
                .map(|_| (0..r).map(|_| entry(rng)).collect())
                .collect();
            let b: Vec<Vec<Rational>> = (0..r)
                .map(|_| (0..cols).map(|_| entry(rng)).collect())
                .collect();
            (0..rows)
                .map(|i| {
                    (0..cols)
                        .map(|j| (0..r).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                        .collect()
                })
                .collect()
        }
        // dense
        _ => (0..rows)
            .map(|_| (0..cols).map(|_| entry(rng)).collect())
            .collect(),
    }
}

fn linear_algebra() -> Outcome {
    let mut out = Outcome::new(
        11,
        "rank and nullspace agree with naive elimination, rank + nullity = cols",
    );
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6c696e);
    for i in 0..500 {
        let rows = random_matrix(&mut rng);
        let cols = rows[0].len();
        let m = Matrix::from_rows(rows.clone(), cols);
        out.checked += 1;
        let expected = naive_rank(&rows);
        let rank = m.rank();
        let kernel = m.nullspace_basis();
        if rank != expected {
            out.fail(format!("matrix {i}: rank {rank}, naive {expected}"));
        }
        if rank + kernel.len() != cols {
            out.fail(format!(
                "matrix {i}: rank {rank} + nullity {} != {cols}",
                kernel.len()
            ));
        }
        if kernel
            .iter()
            .any(|v| m.mul_vec(v).iter().any(|x| !x.is_zero()))
        {
            out.fail(format!("matrix {i}: a nullspace vector is not annihilated"));
        }
        if !kernel.is_empty() && naive_rank(&kernel) != kernel.len() {
            out.fail(format!("matrix {i}: nullspace basis is dependent"));
        }
        if m.transpose().rank() != rank {
            out.fail(format!("matrix {i}: rank differs from the transpose"));
        }
    }
    // identity and zero corners
    out.checked += 2;
    if Matrix::identity(8).rank() != 8 || !Matrix::identity(8).nullspace_basis().is_empty() {
        out.fail("identity(8)".to_string());
    }
    let zero = Matrix::zeros(3, 5);
    if zero.rank() != 0 || zero.nullspace_basis().len() != 5 {
        out.fail("zeros(3, 5)".to_string());
    }
    out.elapsed = start.elapsed();
    out
}

fn main() {
    let total = Instant::now();
    let engine = Engine::new(CORPUS_COLUMN_CAP);
    let cases = corpus();
    println!(
        "corpus: {} schemes ({} families x {} seeds), targets n+1..=n+3",
        cases.len(),
        PointConfig::ALL.len(),
        common::SEEDS_PER_FAMILY
    );

    let first = single_fat_point();
    let run = corpus_checks(&engine, &cases);
    let rnc = rnc_formula(&engine);
    let shape = table_shape(&engine, &cases);
    let kernel = linear_algebra();

    let outcomes = [
        &first,
        &run.reg,
        &run.transfer,
        &run.one_step,
        &run.stable,
        &run.ideal_dim,
        &run.restriction,
        &run.two_largest,
        &rnc,
        &shape,
        &kernel,
    ];
    for o in outcomes {
        o.report();
    }
    let passed = outcomes.iter().filter(|o| o.pass()).count();
    println!(
        "acceptance: {passed}/{} criteria passed in {:.1}s",
        outcomes.len(),
        total.elapsed().as_secs_f64()
    );
    if passed != outcomes.len() {
        std::process::exit(1);
    }
}
