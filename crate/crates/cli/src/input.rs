use std::fs;
use std::path::Path;

use seminormed::{validate_semicopula, Capacity64, CapacityDoc, Error, Instance64, InstanceDoc, Semicopula};

use crate::commands::Failure;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Structural problems are parse errors; failed axioms or out-of-range
/// values are validation errors.
fn classify(err: Error) -> Failure {
    match err {
        Error::InvalidCapacity(_) | Error::OutOfUnitInterval { .. } | Error::SpaceMismatch => {
            Failure::Invalid(err.to_string())
        }
        other => Failure::Usage(other.to_string()),
    }
}

pub fn instance(path: &Path) -> Result<Instance64, Failure> {
    let doc: InstanceDoc<f64> =
        serde_json::from_str(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    doc.into_instance().map_err(classify)
}

pub fn capacity(path: &Path) -> Result<Capacity64, Failure> {
    let doc: CapacityDoc<f64> =
        serde_json::from_str(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    doc.into_capacity().map_err(|e| Failure::Usage(e.to_string()))
}

pub fn certificate(path: &Path) -> Result<seminormed::Witness64, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// `min`, `product`, `lukasiewicz`, `drastic`, inline JSON, or `@file`.
pub fn semicopula(arg: &str) -> Result<Semicopula, Failure> {
    let arg = arg.trim();
    if let Some(spec) = Semicopula::by_name(arg) {
        return Ok(spec);
    }
    let json = match arg.strip_prefix('@') {
        Some(path) => read(Path::new(path))?,
        None if arg.starts_with('{') => arg.to_string(),
        None => return Err(Failure::Usage(format!("unknown semicopula {arg:?}"))),
    };
    serde_json::from_str(&json).map_err(|e| Failure::Usage(format!("bad semicopula descriptor: {e}")))
}

/// A descriptor usable by the invariance commands: it must satisfy the
/// axioms on the lattice it will be searched on.
pub fn checked_semicopula(arg: &str, resolution: usize) -> Result<Semicopula, Failure> {
    let spec = semicopula(arg)?;
    let report = validate_semicopula(&spec, resolution).map_err(|e| Failure::Usage(e.to_string()))?;
    if !report.passed {
        return Err(Failure::Usage(format!("{} is not a semicopula: {}", spec.label(), report.summary())));
    }
    Ok(spec)
}
