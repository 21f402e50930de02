use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use serde::Deserialize;

use crate::EngineError;

/// Smallest and largest block sizes whose cases need `as(m)`.
pub const AS_DATA_RANGE: std::ops::RangeInclusive<u64> = 10..=480;

/// Maximum composition length `as(m)` of the primitive groups of degree `m`,
/// read from a CSV file with header `m,as`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AsData(BTreeMap<u64, u64>);

#[derive(Deserialize)]
struct Row {
    m: u64,
    #[serde(rename = "as")]
    length: u64,
}

impl AsData {
    pub fn from_reader(reader: impl Read) -> Result<Self, EngineError> {
        let mut map = BTreeMap::new();
        for row in csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader).deserialize() {
            let Row { m, length } = row?;
            if !AS_DATA_RANGE.contains(&m) {
                return Err(EngineError::AsData(format!("degree {m} outside 10..=480")));
            }
            if length == 0 {
                return Err(EngineError::AsData(format!("composition length 0 for degree {m}")));
            }
            if map.insert(m, length).is_some() {
                return Err(EngineError::AsData(format!("degree {m} listed twice")));
            }
        }
        Ok(Self(map))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, EngineError> {
        Self::from_reader(std::fs::File::open(path)?)
    }

    pub fn get(&self, m: u64) -> Option<u64> {
        self.0.get(&m).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.0.iter().map(|(&m, &a)| (m, a))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
