//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spark_cert::{
    analyze_spark, certify, exact_spark, generate, is_diagonally_dominant, lemma31_sum, mutual_coherence,
    pairwise_coherences, sparsest_oracle, Matrix, SearchOptions, SparkValue, Threshold, Tolerances, Verdict,
};
use spark_cert_cli::bench::{bench_example31, BenchRow};
use spark_cert_cli::formats::{write_csv, write_matrix_market};
use spark_cert_cli::report::{AnalysisReport, CountField};

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

fn cfg() -> Tolerances {
    Tolerances::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_spark-cert"));
    c.env_remove("SPARK_CERT_BUDGET");
    c
}

/// Shapes for the bound-chain sweep: n in 1..=6, m in 2..=10.
fn chain_matrices() -> Vec<(u64, Matrix)> {
    (0..200u64)
        .map(|i| {
            let n = 1 + (i % 6) as usize;
            let m = 2 + ((i / 6) % 9) as usize;
            (i, generate::random_gaussian::<f64>(n, m, 30_000 + i, &cfg()))
        })
        .collect()
}

fn criterion_1() -> Outcome {
    // closed form 2 + ceil(sqrt(n-1)/3): sqrt(1)/3, sqrt(4)/3, sqrt(9)/3, sqrt(16)/3
    const EXPECTED: [(usize, usize, usize); 4] = [(2, 3, 3), (5, 6, 3), (10, 11, 3), (17, 18, 4)];
    let start = Instant::now();
    let out = bin().args(["bench", "example31", "--n-list", "2,5,10,17", "--json"]).output().unwrap();
    let elapsed = start.elapsed();
    ensure(out.status.success(), || format!("bench exited with {:?}", out.status.code()))?;
    let rows: Vec<BenchRow> = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(rows.len() == 4, || format!("{} rows", rows.len()))?;
    for (row, (n, spark, gamma)) in rows.iter().zip(EXPECTED) {
        ensure(row.n == n, || format!("row for n={} where {n} expected", row.n))?;
        ensure(row.exact_spark == CountField::Finite(spark), || format!("n={n}: exact {}", row.exact_spark))?;
        ensure(row.gamma_bound == CountField::Finite(gamma), || format!("n={n}: 1+gamma {}", row.gamma_bound))?;
        let c = row.classic_bound.ok_or(format!("n={n}: classic bound absent"))?;
        ensure((c - 2.25).abs() <= 1e-12, || format!("n={n}: classic {c}"))?;
        ensure(row.closed_form_gamma_bound == gamma, || format!("n={n}: closed form mismatch"))?;
    }
    let lib_rows = bench_example31(&[2, 5, 10, 17], &cfg(), SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(lib_rows == rows, || "library and CLI rows differ".into())?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("sparks 3/6/11/18, 1+gamma 3/3/3/4, classic 2.25 in {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    const SHAPES: [(usize, usize); 4] = [(2, 4), (4, 8), (6, 10), (8, 12)];
    let mut worst = f64::INFINITY;
    for seed in 0..500u64 {
        let (n, m) = SHAPES[(seed % 4) as usize];
        let a = generate::random_gaussian::<f64>(n, m, seed, &cfg());
        let s = lemma31_sum(&a, &cfg()).map_err(|e| e.to_string())?;
        ensure(s >= 1.0 - 1e-12, || format!("seed {seed} ({n}x{m}): sum {s}"))?;
        worst = worst.min(s);
    }
    Ok(format!("500 matrices, smallest sum {worst:.6}"))
}

fn criterion_3() -> Outcome {
    let mut finite = 0;
    for (seed, a) in chain_matrices() {
        let r = analyze_spark(&a, &cfg(), true, SearchOptions::default()).map_err(|e| e.to_string())?;
        let exact = r.exact.ok_or(format!("seed {seed}: exact spark not computed"))?;
        ensure(exact >= r.gamma_bound, || format!("seed {seed}: exact {exact:?} < {:?}", r.gamma_bound))?;
        let p = pairwise_coherences(&a, &cfg()).map_err(|e| e.to_string())?;
        if let (Some(g), Some(c)) = (p.gamma, r.classic_bound) {
            ensure((1 + g) as f64 >= c, || format!("seed {seed}: 1+gamma {} < classic {c}", 1 + g))?;
            let ceil = (1.0 / p.mu).ceil() as usize;
            ensure(g >= ceil, || format!("seed {seed}: gamma {g} < ceil(1/mu) {ceil}"))?;
        }
        if let Some(c) = r.classic_bound {
            ensure(exact.at_least(c), || format!("seed {seed}: exact {exact:?} < classic {c}"))?;
        }
        finite += usize::from(!exact.is_infinite());
    }
    Ok(format!("200 matrices ({finite} with finite spark)"))
}

fn criterion_4() -> Outcome {
    let matrices = chain_matrices();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut dominant = 0;
    for trial in 0..1000 {
        let (seed, a) = &matrices[rng.random_range(0..matrices.len())];
        let m = a.cols();
        let size = rng.random_range(2..=m);
        let mut subset: Vec<usize> = rand::seq::index::sample(&mut rng, m, size).into_vec();
        subset.sort_unstable();
        let g = a.normalize_columns().gram_matrix().principal_minor(&subset);
        if is_diagonally_dominant(&g).map_err(|e| e.to_string())? {
            dominant += 1;
            let rank = a.column_submatrix(&subset).map_err(|e| e.to_string())?.numerical_rank(&cfg());
            ensure(rank == size, || format!("trial {trial}, seed {seed}, subset {subset:?}: rank {rank}"))?;
        }
    }
    Ok(format!("1000 subsets, {dominant} diagonally dominant, all full rank"))
}

fn criterion_5() -> Outcome {
    let mut unique = 0;
    for trial in 0..100u64 {
        let a = generate::random_gaussian::<f64>(6, 10, 50_000 + trial, &cfg());
        let mut x = vec![0.0; 10];
        x[(trial % 10) as usize] = 1.0 + trial as f64 / 10.0;
        let b = a.mul_vec(&x).map_err(|e| e.to_string())?;
        let spark = exact_spark(&a, &cfg(), SearchOptions::default()).map_err(|e| e.to_string())?;
        for exact in [None, Some(spark.value)] {
            let c = certify(&a, &x, &b, &cfg(), exact).map_err(|e| e.to_string())?;
            if !c.verdict.is_unique() {
                continue;
            }
            unique += 1;
            let found = sparsest_oracle(&a, &b, c.l0, &cfg(), 1_000_000).map_err(|e| e.to_string())?;
            ensure(found.sparsity == c.l0 && found.solutions.len() == 1, || {
                format!(
                    "trial {trial}: oracle found {} solutions at sparsity {}",
                    found.solutions.len(),
                    found.sparsity
                )
            })?;
            let close = found.solutions[0].1.iter().zip(&x).all(|(p, q)| (p - q).abs() <= 1e-9);
            ensure(close, || format!("trial {trial}: oracle solution differs from planted"))?;
        }
    }
    ensure(unique > 0, || "no certificates issued".into())?;

    let a = generate::example31::<f64>(50).map_err(|e| e.to_string())?;
    let mut x = vec![0.0; 51];
    x[0] = 1.0;
    x[50] = 2.0;
    let b = a.mul_vec(&x).map_err(|e| e.to_string())?;
    let c = certify(&a, &x, &b, &cfg(), None).map_err(|e| e.to_string())?;
    ensure(c.verdict == Verdict::UniqueByGamma, || format!("n=50 verdict {:?}", c.verdict))?;
    ensure(c.gamma_threshold == Threshold::Finite(2.5), || format!("gamma threshold {:?}", c.gamma_threshold))?;
    let mc = c.mc_threshold.ok_or("mc threshold absent")?;
    ensure((mc - 1.125).abs() <= 1e-12, || format!("mc threshold {mc}"))?;
    ensure(!c.passing.contains(&spark_cert::Criterion::MutualCoherence), || "mc criterion passed".into())?;
    Ok(format!("{unique} certificates confirmed; n=50 2-sparse: gamma 2 < 2.5, mc 2 >= 1.125"))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for seed in 0..60u64 {
        let n = 2 + (seed % 7) as usize;
        let q = generate::random_orthogonal::<f64>(n, seed, &cfg());
        let r = analyze_spark(&q, &cfg(), true, SearchOptions::default()).map_err(|e| e.to_string())?;
        ensure(r.gamma_bound == SparkValue::Infinite, || format!("seed {seed}: gamma bound {:?}", r.gamma_bound))?;
        ensure(r.exact == Some(SparkValue::Infinite), || format!("seed {seed}: exact {:?}", r.exact))?;

        let dup = q.with_column(&q.column(0), &cfg()).map_err(|e| e.to_string())?;
        let s = exact_spark(&dup, &cfg(), SearchOptions::default()).map_err(|e| e.to_string())?;
        ensure(s.value == SparkValue::Finite(2), || format!("seed {seed}: duplicate spark {:?}", s.value))?;
        ensure(s.witness == Some(vec![0, n]), || format!("seed {seed}: witness {:?}", s.witness))?;
        let mu = mutual_coherence(&dup).map_err(|e| e.to_string())?;
        ensure(mu == 1.0, || format!("seed {seed}: mu {mu}"))?;
        count += 1;
    }
    Ok(format!("{count} orthogonal matrices: infinite spark, duplicate column gives spark 2 and mu 1"))
}

fn criterion_7() -> Outcome {
    for seed in 0..20u64 {
        let n = 3 + (seed % 4) as usize;
        let m = n + 3;
        let mut cols = generate::random_gaussian::<f64>(n, m, 70_000 + seed, &cfg()).columns();
        if seed % 2 == 0 {
            // dependency among four columns near the end of the order
            let k = m - 1;
            cols[k] = (0..n).map(|i| cols[1][i] - 0.5 * cols[3][i] + 2.0 * cols[k - 1][i]).collect();
        }
        let a = Matrix::from_columns(&cols, &cfg()).map_err(|e| e.to_string())?;
        let par = exact_spark(&a, &cfg(), SearchOptions { budget: u64::MAX, parallel: true });
        let ser = exact_spark(&a, &cfg(), SearchOptions { budget: u64::MAX, parallel: false });
        ensure(par == ser, || format!("seed {seed}: parallel {par:?} vs serial {ser:?}"))?;
        for budget in [5, 40, 200] {
            let par = exact_spark(&a, &cfg(), SearchOptions { budget, parallel: true });
            let ser = exact_spark(&a, &cfg(), SearchOptions::serial(budget));
            ensure(par == ser, || format!("seed {seed}, budget {budget}: {par:?} vs {ser:?}"))?;
        }
    }

    let a = generate::random_gaussian::<f64>(5, 9, 77, &cfg());
    let spark = analyze_spark(&a, &cfg(), true, SearchOptions::default()).map_err(|e| e.to_string())?;
    let mut report = AnalysisReport::new(&a, "generator:random", &cfg(), &spark, 1).map_err(|e| e.to_string())?;
    report.seed = Some(77);
    let json = report.to_json();
    let back = AnalysisReport::from_json(&json).map_err(|e| e.to_string())?;
    ensure(back == report, || "JSON round trip changed the report".into())?;
    let bits = |r: &AnalysisReport| -> Vec<u64> {
        let mut v: Vec<u64> = r.coherence.top_coherences.iter().map(|x| x.to_bits()).collect();
        v.push(r.coherence.mu.to_bits());
        v.extend(r.coherence.lemma31_sum.map(f64::to_bits));
        v.extend(r.spark.classic_bound.map(f64::to_bits));
        v
    };
    ensure(bits(&back) == bits(&report), || "float bits changed".into())?;
    ensure(back.to_json() == json, || "re-serialization differs".into())?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let csv = dir.path().join("m.csv");
    let mm = dir.path().join("m.mtx");
    std::fs::write(&csv, write_csv(&a)).map_err(|e| e.to_string())?;
    std::fs::write(&mm, write_matrix_market(&a)).map_err(|e| e.to_string())?;
    let analyze = |path: &std::path::Path| -> Result<AnalysisReport, String> {
        let out = bin().args(["analyze", path.to_str().unwrap(), "--exact", "--json"]).output().unwrap();
        ensure(out.status.success(), || format!("analyze exited {:?}", out.status.code()))?;
        let mut r = AnalysisReport::from_json(std::str::from_utf8(&out.stdout).unwrap()).map_err(|e| e.to_string())?;
        r.matrix.source.clear();
        Ok(r)
    };
    let (from_csv, from_mm) = (analyze(&csv)?, analyze(&mm)?);
    ensure(from_csv == from_mm, || "CSV and Matrix Market reports differ".into())?;
    ensure(from_csv.spark.exact == CountField::Finite(6), || format!("exact {}", from_csv.spark.exact))?;
    Ok("20 instances serial == parallel; JSON bit-exact; CSV and MM reports identical".into())
}

fn main() {
    let criteria: [Check; 7] = [
        ("1 golden example family (exact spark, 1+gamma, classic bound)", criterion_1),
        ("2 top-n coherence sum >= 1 on 500 random matrices", criterion_2),
        ("3 bound chain exact >= 1+gamma >= 1+1/mu on 200 random matrices", criterion_3),
        ("4 diagonally dominant Gram minors have full rank", criterion_4),
        ("5 uniqueness certificates confirmed by brute force", criterion_5),
        ("6 orthogonal columns give infinite spark", criterion_6),
        ("7 determinism and IO round trips", criterion_7),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", 7 - failed, 7);
    if failed > 0 {
        std::process::exit(1);
    }
}
