use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use seminormed::{
    check_invariance, grid_oracle, seminormed_integral, synthesize_counterexample, validate_capacity,
    validate_semicopula, verify_witness, SamplingPlan, Semicopula,
};

use crate::input;
use crate::{CheckArgs, IntegrateArgs, OracleArgs, SynthesizeArgs, ValidateArgs, VerifyArgs};

const ORACLE_TOLERANCE: f64 = 1e-9;

#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable files, malformed JSON or descriptors.
    Usage(String),
    /// The instance parsed but is not a valid instance.
    Invalid(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Invalid(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) => m,
        }
    }
}

/// A JSON document to print and the exit code to finish with.
pub struct Output {
    pub body: Value,
    pub code: u8,
}

impl Output {
    fn new(body: impl Serialize, ok: bool) -> Result<Self, Failure> {
        let body = serde_json::to_value(body).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(Self { body, code: if ok { 0 } else { 1 } })
    }
}

pub fn emit(out: &Output, path: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(&out.body).expect("values serialize") + "\n";
    match path {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn integrate(args: &IntegrateArgs) -> Result<Output, Failure> {
    let spec = if args.sugeno {
        Semicopula::min()
    } else if args.shilkret {
        Semicopula::product()
    } else {
        input::semicopula(args.semicopula.as_deref().expect("clap requires one of the three"))?
    };
    let inst = input::instance(&args.instance)?;
    Output::new(seminormed_integral(&spec, &inst), true)
}

pub fn validate(args: &ValidateArgs) -> Result<Output, Failure> {
    let mut body = serde_json::Map::new();
    let mut ok = true;
    if let Some(path) = &args.capacity {
        let report = validate_capacity(&input::capacity(path)?);
        ok &= report.passed;
        body.insert("capacity".into(), serde_json::to_value(report).expect("report serializes"));
    }
    if let Some(desc) = &args.semicopula {
        let spec = input::semicopula(desc)?;
        let report = validate_semicopula(&spec, args.resolution).map_err(|e| Failure::Usage(e.to_string()))?;
        ok &= report.passed;
        body.insert("semicopula".into(), serde_json::to_value(report).expect("report serializes"));
    }
    Output::new(Value::Object(body), ok)
}

pub fn check(args: &CheckArgs) -> Result<Output, Failure> {
    let seed = match (args.samples, args.seed) {
        (0, seed) => seed.unwrap_or(0),
        (_, Some(seed)) => seed,
        (_, None) => return Err(Failure::Usage("--samples needs an explicit --seed".into())),
    };
    let spec = input::checked_semicopula(&args.semicopula.semicopula, args.resolution)?;
    let plan = SamplingPlan { resolution: args.resolution, samples: args.samples, seed };
    let verdict = check_invariance(&spec, plan).map_err(|e| Failure::Usage(e.to_string()))?;
    let invariant = verdict.invariant;
    Output::new(verdict, invariant)
}

pub fn synthesize(args: &SynthesizeArgs) -> Result<Output, Failure> {
    let spec = input::checked_semicopula(&args.semicopula.semicopula, args.resolution)?;
    let witness = synthesize_counterexample(&spec, args.resolution).map_err(|e| Failure::Usage(e.to_string()))?;
    Output::new(witness, true)
}

pub fn oracle_compare(args: &OracleArgs) -> Result<Output, Failure> {
    if !(args.step > 0.0 && args.step <= 0.01) {
        return Err(Failure::Usage(format!("--step must lie in (0, 0.01], got {}", args.step)));
    }
    let spec = input::semicopula(&args.semicopula.semicopula)?;
    let inst = input::instance(&args.instance)?;
    let exact = seminormed_integral(&spec, &inst).value;
    let oracle = grid_oracle(&spec, &inst, args.step).map_err(|e| Failure::Usage(e.to_string()))?;
    let difference = (exact - oracle).abs();
    Output::new(
        json!({ "exact": exact, "oracle": oracle, "difference": difference, "step": args.step }),
        difference <= ORACLE_TOLERANCE,
    )
}

pub fn verify(args: &VerifyArgs) -> Result<Output, Failure> {
    let witness = input::certificate(&args.certificate)?;
    let check = verify_witness(&witness).map_err(|e| Failure::Usage(e.to_string()))?;
    let reproduced = check.reproduced;
    Output::new(check, reproduced)
}
