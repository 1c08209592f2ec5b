//! Seeded generators for capacities and functions. Each call owns its
//! generator, so results depend on the seed alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Capacity, FiniteSpace, MeasurableFunction, Subset};
use crate::scalar::check_unit;
use crate::{Result, Scalar};

/// Random function values are multiples of `1 / FUNCTION_LATTICE`, so sums
/// of values and lattice-aligned shifts are exact in binary floating point.
pub const FUNCTION_LATTICE: usize = 64;

/// A monotone capacity built from one uniform draw per nonempty proper
/// subset, rectified to `mu(A) = max_{B ⊆ A} draw(B)`.
pub fn random_capacity<T: Scalar>(space: &FiniteSpace, seed: u64) -> Capacity<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = space.len();
    let full = space.full();
    let count = space.subset_count();
    let mut values = vec![T::zero(); count];
    for m in 1..count as u32 {
        let subset = Subset(m);
        if subset == full {
            continue;
        }
        let draw = T::lit(rng.gen::<f64>());
        // every A \ {i} has a smaller mask and is already rectified
        values[m as usize] =
            (0..n).filter(|&i| subset.contains(i)).map(|i| values[(m & !(1 << i)) as usize]).fold(draw, T::max);
    }
    values[full.index()] = T::one();
    Capacity::new(space.clone(), values).expect("table has 2^n finite entries")
}

/// Uniform draws from `{0, 1/64, ..., 1} ∩ [0, max_value]`, one per point.
pub fn random_function<T: Scalar>(space: &FiniteSpace, seed: u64, max_value: T) -> Result<MeasurableFunction<T>> {
    check_unit("max_value", max_value)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let steps = T::from_usize(FUNCTION_LATTICE).expect("lattice size");
    let top = (max_value * steps + T::TOLERANCE).floor().to_usize().unwrap_or(0).min(FUNCTION_LATTICE);
    let values = (0..space.len()).map(|_| T::lattice(rng.gen_range(0..=top), FUNCTION_LATTICE)).collect();
    MeasurableFunction::new(space.clone(), values)
}
