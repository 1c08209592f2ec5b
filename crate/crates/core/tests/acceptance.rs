//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use seminormed::{
    check_invariance, functional_residual, grid_oracle, random_capacity, random_function, seminormed_integral,
    shilkret_integral, sugeno_integral, synthesize_counterexample, translation_residual_instance, verify_witness,
    witness_instance, FiniteSpace, Instance, Instance64, MeasurableFunction, SamplingPlan, Semicopula, Witness64,
};

const TOL: f64 = 1e-9;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let elapsed = start.elapsed();
    ensure(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"))?;
    Ok(elapsed)
}

/// Deterministic instance `i` of a seeded family: 1 to 6 points, values on
/// the 1/64 lattice.
fn seeded_instance(seed: u64, i: u64) -> Instance64 {
    let mix = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ i.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    let n = 1 + (i % 6) as usize;
    let space = FiniteSpace::with_size(n).unwrap();
    let capacity = random_capacity(&space, mix);
    let top = ((mix >> 7) % 65) as f64 / 64.0;
    let function = random_function(&space, mix.rotate_left(17), top).unwrap();
    Instance::new(capacity, function).unwrap()
}

fn lukasiewicz_invariance() -> Outcome {
    let start = Instant::now();
    let s = Semicopula::lukasiewicz();
    let mut worst = 0.0f64;
    for i in 0..1000u64 {
        let inst = seeded_instance(1, i);
        let used = (inst.function().max_value() * 64.0).round() as u64;
        let a = ((i * 37) % (65 - used)) as f64 / 64.0;
        let r = translation_residual_instance(&s, &inst, a).map_err(|e| e.to_string())?;
        worst = worst.max(r.gap.abs());
        ensure(r.gap.abs() <= TOL, || format!("instance {i}, a = {a}: gap {}", r.gap))?;
    }
    let elapsed = within(start, Duration::from_secs(5))?;
    Ok(format!("1000 instances, max |gap| = {worst:e}, {elapsed:?}"))
}

fn uniqueness() -> Outcome {
    let cases = [
        Semicopula::min(),
        Semicopula::product(),
        Semicopula::drastic(),
        Semicopula::yager(0.5).unwrap(),
        Semicopula::yager(2.0).unwrap(),
    ];
    let mut notes = Vec::new();
    for s in &cases {
        let start = Instant::now();
        let w = synthesize_counterexample(s, 64)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{}: no witness", s.label()))?;
        within(start, Duration::from_secs(1))?;
        ensure(w.gap.abs() >= 0.05, || format!("{}: |gap| = {} < 0.05", s.label(), w.gap.abs()))?;
        notes.push(format!("{} {:.4}", s.label(), w.gap));
    }
    for (s, expected) in [(Semicopula::product(), -0.25), (Semicopula::min(), -0.5)] {
        let w = synthesize_counterexample(&s, 64).unwrap().unwrap();
        ensure(w.a == 0.5 && w.b == Some(0.5), || format!("{}: witness at ({}, {:?})", s.label(), w.a, w.b))?;
        ensure((w.gap - expected).abs() <= TOL, || format!("{}: gap {} != {expected}", s.label(), w.gap))?;
    }
    Ok(notes.join(", "))
}

fn reduction_consistency() -> Outcome {
    let start = Instant::now();
    let mut points = 0usize;
    for s in Semicopula::catalog() {
        for i in 1..=64 {
            let a = i as f64 / 64.0;
            for j in 0..=64 {
                let b = j as f64 / 64.0;
                let fr = functional_residual(&s, a, b).map_err(|e| e.to_string())?;
                let w = witness_instance(a, b).map_err(|e| e.to_string())?;
                let gap = translation_residual_instance(&s, &w, a).map_err(|e| e.to_string())?.gap;
                ensure((fr - gap).abs() <= TOL, || format!("{} at ({a}, {b}): {fr} vs {gap}", s.label()))?;
                points += 1;
            }
        }
    }
    let elapsed = within(start, Duration::from_secs(10))?;
    Ok(format!("{points} lattice points over 7 families, {elapsed:?}"))
}

fn oracle_equivalence() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..500u64 {
        let inst = seeded_instance(2, i);
        for s in Semicopula::catalog() {
            let exact = seminormed_integral(&s, &inst).value;
            let oracle = grid_oracle(&s, &inst, 1e-3).map_err(|e| e.to_string())?;
            worst = worst.max((exact - oracle).abs());
            ensure((exact - oracle).abs() <= TOL, || format!("instance {i}, {}: {exact} vs {oracle}", s.label()))?;
        }
    }
    Ok(format!("500 instances x 7 families, max diff {worst:e}"))
}

fn specialization_and_identities() -> Outcome {
    for i in 0..200u64 {
        let inst = seeded_instance(3, i);
        ensure(sugeno_integral(&inst) == seminormed_integral(&Semicopula::min(), &inst), || {
            format!("sugeno alias, instance {i}")
        })?;
        ensure(shilkret_integral(&inst) == seminormed_integral(&Semicopula::product(), &inst), || {
            format!("shilkret alias, instance {i}")
        })?;
        let space = inst.space().clone();
        let c = inst.function().values()[0];
        let constant = Instance::new(inst.capacity().clone(), MeasurableFunction::constant(space, c).unwrap()).unwrap();
        for s in Semicopula::catalog() {
            let v = seminormed_integral(&s, &constant).value;
            ensure((v - c).abs() <= TOL, || format!("{} on constant {c}: {v}", s.label()))?;
        }
    }
    let verdict =
        check_invariance(&Semicopula::yager(1.0).unwrap(), SamplingPlan { resolution: 64, samples: 1000, seed: 1 })
            .map_err(|e| e.to_string())?;
    ensure(verdict.invariant, || format!("yager(1) judged non-invariant: {:?}", verdict.witness))?;
    Ok(format!("aliases exact, constants preserved, yager(1) invariant over {} samples", verdict.samples_checked))
}

fn certificates_reverify() -> Outcome {
    let mut count = 0;
    for s in Semicopula::catalog() {
        let Some(w) = synthesize_counterexample(&s, 64).map_err(|e| e.to_string())? else {
            continue;
        };
        let json = serde_json::to_string(&w).map_err(|e| e.to_string())?;
        let back: Witness64 = serde_json::from_str(&json).map_err(|e| e.to_string())?;
        let lhs = seminormed_integral(&back.semicopula, &back.instance.shifted(back.a).unwrap()).value;
        let rhs = seminormed_integral(&back.semicopula, &back.instance).value + back.a;
        ensure((lhs - back.lhs).abs() <= TOL, || format!("{}: lhs {lhs} vs {}", s.label(), back.lhs))?;
        ensure((rhs - back.rhs).abs() <= TOL, || format!("{}: rhs {rhs} vs {}", s.label(), back.rhs))?;
        ensure(((lhs - rhs) - back.gap).abs() <= TOL, || format!("{}: gap", s.label()))?;
        ensure(verify_witness(&back).map(|c| c.reproduced).unwrap_or(false), || {
            format!("{}: verify_witness", s.label())
        })?;
        count += 1;
    }
    ensure(count == 5, || format!("expected 5 certificates, got {count}"))?;
    Ok(format!("{count} certificates re-verified from JSON"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("AC1 lukasiewicz translation invariance", lukasiewicz_invariance),
        ("AC2 uniqueness: counterexamples for non-lukasiewicz", uniqueness),
        ("AC3 reduction consistency on the 65x65 lattice", reduction_consistency),
        ("AC4 exact evaluator vs grid oracle", oracle_equivalence),
        ("AC5 specializations and identities", specialization_and_identities),
        ("AC6 certificates re-verify", certificates_reverify),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
