//! Instance documents: `{"points": [...], "capacity": {"": 0, "x1": ..., ...},
//! "function": {"x1": ...}}`. Capacity keys are comma-joined point labels
//! and every one of the 2^n subsets must be present.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Capacity, FiniteSpace, Instance, MeasurableFunction, Subset};
use crate::{Error, Result, Scalar};

/// The capacity part of an instance document; extra fields are ignored, so
/// a full instance file also parses as a `CapacityDoc`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct CapacityDoc<T> {
    pub points: Vec<String>,
    pub capacity: BTreeMap<String, T>,
}

impl<T: Scalar> CapacityDoc<T> {
    /// Structural conversion only; the axioms are not checked.
    pub fn into_capacity(self) -> Result<Capacity<T>> {
        let space = FiniteSpace::new(self.points)?;
        capacity_from_map(space, &self.capacity)
    }

    pub fn from_capacity(capacity: &Capacity<T>) -> Self {
        Self { points: capacity.space().labels().to_vec(), capacity: capacity_to_map(capacity) }
    }
}

fn capacity_from_map<T: Scalar>(space: FiniteSpace, map: &BTreeMap<String, T>) -> Result<Capacity<T>> {
    let mut values: Vec<Option<T>> = vec![None; space.subset_count()];
    for (key, &v) in map {
        let subset = space.parse_key(key)?;
        if values[subset.index()].replace(v).is_some() {
            return Err(Error::Structural(format!("subset {:?} given more than once", space.key(subset))));
        }
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(m, v)| {
            v.ok_or_else(|| Error::Structural(format!("missing capacity of subset {:?}", space.key(Subset(m as u32)))))
        })
        .collect::<Result<Vec<_>>>()?;
    Capacity::new(space, values)
}

fn capacity_to_map<T: Scalar>(capacity: &Capacity<T>) -> BTreeMap<String, T> {
    let space = capacity.space();
    capacity.values().iter().enumerate().map(|(m, &v)| (space.key(Subset(m as u32)), v)).collect()
}

/// Unvalidated instance document. [`Instance`] serializes through this
/// shape; converting it separates JSON syntax from instance validity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct InstanceDoc<T> {
    pub points: Vec<String>,
    pub capacity: BTreeMap<String, T>,
    pub function: BTreeMap<String, T>,
}

impl<T: Scalar> InstanceDoc<T> {
    pub fn into_instance(self) -> Result<Instance<T>> {
        Instance::try_from(self)
    }
}

impl<T: Scalar> TryFrom<InstanceDoc<T>> for Instance<T> {
    type Error = Error;

    fn try_from(doc: InstanceDoc<T>) -> Result<Self> {
        let space = FiniteSpace::new(doc.points)?;
        let capacity = capacity_from_map(space.clone(), &doc.capacity)?;
        if doc.function.len() != space.len() {
            return Err(Error::Structural(format!(
                "function needs one value per point ({}), got {}",
                space.len(),
                doc.function.len()
            )));
        }
        let values = space
            .labels()
            .iter()
            .map(|l| {
                doc.function
                    .get(l)
                    .copied()
                    .ok_or_else(|| Error::Structural(format!("missing function value at {l:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let function = MeasurableFunction::new(space, values)?;
        Instance::new(capacity, function)
    }
}

impl<T: Scalar> From<Instance<T>> for InstanceDoc<T> {
    fn from(inst: Instance<T>) -> Self {
        let space = inst.space().clone();
        let capacity = capacity_to_map(inst.capacity());
        let function = space.labels().iter().cloned().zip(inst.function().values().iter().copied()).collect();
        InstanceDoc { points: space.labels().to_vec(), capacity, function }
    }
}

impl<T: Scalar> Serialize for Instance<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        InstanceDoc::from(self.clone()).serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Instance<T> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = InstanceDoc::deserialize(deserializer)?;
        Instance::try_from(doc).map_err(serde::de::Error::custom)
    }
}
