//! Modular keys: ordered integer modules with declared per-module domains,
//! and injective packing of module subsets into single `u64` key integers.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Largest prime representable in a `u64` (2^64 - 59). Schema capacity is
/// capped here so a prime strictly larger than any encodable key always
/// exists in `u64`.
pub(crate) const MAX_CAPACITY: u64 = 18_446_744_073_709_551_557;

/// Per-module domain sizes for a family of modular keys.
///
/// Module `j` takes integer values in `[0, cardinalities[j] - 1]`. The
/// mixed-radix capacity (product of all cardinalities) must fit the `u64`
/// key-integer width; this is checked at construction so that every encoded
/// key admits a larger prime modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeySchema {
    cardinalities: Vec<u64>,
}

impl KeySchema {
    pub fn new(cardinalities: Vec<u64>) -> Result<Self> {
        if cardinalities.is_empty() {
            return Err(Error::Schema("schema needs at least one module".into()));
        }
        let mut capacity: u64 = 1;
        for (j, &c) in cardinalities.iter().enumerate() {
            if c < 2 {
                return Err(Error::Schema(format!(
                    "module {j} has cardinality {c}; every module needs at least 2 values"
                )));
            }
            capacity = capacity
                .checked_mul(c)
                .filter(|&cap| cap <= MAX_CAPACITY)
                .ok_or_else(|| {
                    Error::Schema(format!(
                        "mixed-radix capacity exceeds the {MAX_CAPACITY} key-integer limit"
                    ))
                })?;
        }
        Ok(Self { cardinalities })
    }

    /// Modularity: the number of ordered modules in a key.
    pub fn modularity(&self) -> usize {
        self.cardinalities.len()
    }

    pub fn cardinalities(&self) -> &[u64] {
        &self.cardinalities
    }

    /// Total number of distinct keys the schema admits.
    pub fn capacity(&self) -> u64 {
        self.cardinalities.iter().product()
    }

    /// Checks every `ModularKey` invariant, naming the offending module.
    pub fn validate_key(&self, key: &ModularKey) -> Result<()> {
        if key.modules().len() != self.modularity() {
            return Err(Error::Schema(format!(
                "key has {} modules, schema has {}",
                key.modules().len(),
                self.modularity()
            )));
        }
        for (j, (&v, &c)) in key.modules().iter().zip(&self.cardinalities).enumerate() {
            if v >= c {
                return Err(Error::Schema(format!(
                    "violation at module {j}: value {v} outside domain [0, {})",
                    c
                )));
            }
        }
        Ok(())
    }

    /// Checks that `part` is a non-empty, strictly ascending list of valid
    /// module indices.
    pub fn validate_part(&self, part: &[usize]) -> Result<()> {
        if part.is_empty() {
            return Err(Error::Schema("part must name at least one module".into()));
        }
       for pair in part.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::Schema(format!(
                    "part indices must be strictly ascending, got {pair:?}"
                )));
            }
        }
        let last = *part.last().unwrap();
        if last >= self.modularity() {
            return Err(Error::Schema(format!(
                "part index {last} out of range for modularity {}",
                self.modularity()
            )));
        }
        Ok(())
    }

    /// Number of distinct joint values the modules in `part` can take.
    pub fn part_capacity(&self, part: &[usize]) -> Result<u64> {
        self.validate_part(part)?;
        // Cannot overflow: a sub-product of the already-checked capacity.
        Ok(part.iter().map(|&j| self.cardinalities[j]).product())
    }

    /// Packs the modules selected by `part` into one integer.
    ///
    /// Uses mixed-radix positional encoding over the part's domains, so the
    /// packing is injective on the part's joint domain: earlier part members
    /// are more significant. Encoding the full index set of a `[100, 100]`
    /// schema concatenates `(1, 12)` to `112` and `(11, 2)` to `1102`, the
    /// zero-padded decimal concatenation read as an integer.
    pub fn encode_part(&self, key: &ModularKey, part: &[usize]) -> Result<u64> {
        self.validate_key(key)?;
        self.validate_part(part)?;
        let mut packed: u64 = 0;
        for &j in part {
            packed = packed * self.cardinalities[j] + key.modules()[j];
        }
        Ok(packed)
    }

    /// Packs the full key (every module, in order).
    pub fn encode(&self, key: &ModularKey) -> Result<u64> {
        let all: Vec<usize> = (0..self.modularity()).collect();
        self.encode_part(key, &all)
    }
}

/// One item key: an ordered list of module values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModularKey {
    modules: Vec<u64>,
}

impl ModularKey {
    pub fn new(modules: Vec<u64>) -> Self {
        Self { modules }
    }

    pub fn modules(&self) -> &[u64] {
        &self.modules
    }
}

impl From<Vec<u64>> for ModularKey {
    fn from(modules: Vec<u64>) -> Self {
        Self::new(modules)
    }
}

impl std::fmt::Display for ModularKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.modules.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(vals: &[u64]) -> ModularKey {
        ModularKey::new(vals.to_vec())
    }

    #[test]
    fn concatenation_disambiguates_padded_keys() {
        let schema = KeySchema::new(vec![100, 100]).unwrap();
        assert_eq!(schema.encode_part(&key(&[1, 12]), &[0, 1]).unwrap(), 112);
        assert_eq!(schema.encode_part(&key(&[11, 2]), &[0, 1]).unwrap(), 1102);
    }

    #[test]
    fn encode_zero_key() {
        let schema = KeySchema::new(vec![100, 100]).unwrap();
        assert_eq!(schema.encode_part(&key(&[0, 0]), &[0, 1]).unwrap(), 0);
    }

    #[test]
    fn singleton_part_is_identity() {
        let schema = KeySchema::new(vec![10, 10, 10]).unwrap();
        assert_eq!(schema.encode_part(&key(&[3, 4, 5]), &[1]).unwrap(), 4);
    }

    #[test]
    fn encode_rejects_out_of_range_part_index() {
        let schema = KeySchema::new(vec![10, 10]).unwrap();
        let err = schema.encode_part(&key(&[1, 2]), &[0, 2]).unwrap_err();
        assert!(matches!(err, Error::Schema(_)));
    }

    #[test]
    fn encode_rejects_unsorted_and_empty_parts() {
        let schema = KeySchema::new(vec![10, 10]).unwrap();
        assert!(schema.encode_part(&key(&[1, 2]), &[1, 0]).is_err());
        assert!(schema.encode_part(&key(&[1, 2]), &[0, 0]).is_err());
        assert!(schema.encode_part(&key(&[1, 2]), &[]).is_err());
    }

    #[test]
    fn validate_key_accepts_in_domain_values() {
        let schema = KeySchema::new(vec![100, 100]).unwrap();
        assert!(schema.validate_key(&key(&[1, 12])).is_ok());
        let schema = KeySchema::new(vec![10]).unwrap();
        assert!(schema.validate_key(&key(&[9])).is_ok());
    }

    #[test]
    fn validate_key_names_offending_module() {
        let schema = KeySchema::new(vec![100, 100]).unwrap();
        let err = schema.validate_key(&key(&[1, 100])).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("module 1"), "message was: {msg}");
    }

    #[test]
    fn schema_rejects_tiny_modules_and_overflow() {
        assert!(KeySchema::new(vec![]).is_err());
        assert!(KeySchema::new(vec![1, 10]).is_err());
        assert!(KeySchema::new(vec![u64::MAX, 2]).is_err());
        // 256^8 == 2^64 overflows the capacity cap by construction.
        assert!(KeySchema::new(vec![256; 8]).is_err());
        // Just inside the cap.
        assert!(KeySchema::new(vec![2; 63]).is_ok());
    }

    #[test]
    fn full_enumeration_is_injective() {
        // Brute-force check over a full joint domain.
        let schema = KeySchema::new(vec![7, 11, 5]).unwrap();
        let mut seen = std::collections::HashSet::new();
        for a in 0..7 {
            for b in 0..11 {
                for c in 0..5 {
                    let packed = schema.encode_part(&key(&[a, b, c]), &[0, 1, 2]).unwrap();
                    assert!(seen.insert(packed), "collision at ({a},{b},{c})");
                    assert!(packed < schema.capacity());
                }
            }
        }
        assert_eq!(seen.len(), 7 * 11 * 5);
    }
}
