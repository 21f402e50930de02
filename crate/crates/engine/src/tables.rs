//! Printed tables shipped with the crate, each pinned by a SHA-256 digest so
//! that edits to the data files are visible in review.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

/// One embedded data file.
#[derive(Debug, Clone, Copy)]
pub struct EmbeddedTable {
    pub name: &'static str,
    pub source: &'static str,
    pub sha256: &'static str,
}

impl EmbeddedTable {
    pub fn digest(&self) -> String {
        Sha256::digest(self.source.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn verify(&self) -> bool {
        self.digest() == self.sha256
    }
}

pub const TABLE_A1: EmbeddedTable = EmbeddedTable {
    name: "A.1",
    source: include_str!("../data/table_a1.txt"),
    sha256: "8217655e7e5acf3c8fad7f9f72de4cc6c2d8044447152add6abb76cfdaba11ba",
};

pub const TABLE_A2: EmbeddedTable = EmbeddedTable {
    name: "A.2",
    source: transgen_bounds::PRIMITIVE_PROFILES_SOURCE,
    sha256: "582b847987e9d7e3bc323266d2c2daf80895ed40cd06e8d4b02c4dc296540733",
};

pub const TABLE_61: EmbeddedTable = EmbeddedTable {
    name: "6.1",
    source: include_str!("../data/table_61.txt"),
    sha256: "88ab70f67b41bcee06fb265caf9d3dc669d06a316c21de7380349905a2470f46",
};

pub const TABLE_62: EmbeddedTable = EmbeddedTable {
    name: "6.2",
    source: include_str!("../data/table_62.txt"),
    sha256: "24f34311227d78a117f5039918095eabf8c347d6513fa61c251542b337f57271",
};

pub const TABLE_A3: EmbeddedTable = EmbeddedTable {
    name: "A.3",
    source: include_str!("../data/table_a3.txt"),
    sha256: "ce16c4eb97769939f4d489c3337063d774ef226d7e531abde0184a34ddc84718",
};

pub const EMBEDDED_TABLES: [EmbeddedTable; 5] = [TABLE_A1, TABLE_A2, TABLE_61, TABLE_62, TABLE_A3];

fn rows(source: &'static str) -> impl Iterator<Item = Vec<&'static str>> {
    source
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('|').map(str::trim).collect())
}

fn num<T: std::str::FromStr>(field: &str) -> T {
    field.parse().unwrap_or_else(|_| panic!("embedded table field {field:?} is not a number"))
}

/// Maximum `d(G)` over transitive groups of each degree `2..=32`.
pub fn table_a1() -> &'static BTreeMap<u64, u64> {
    static TABLE: OnceLock<BTreeMap<u64, u64>> = OnceLock::new();
    TABLE.get_or_init(|| rows(TABLE_A1.source).map(|r| (num(r[0]), num(r[1]))).collect())
}

/// Printed `(degree, bound)` rows of the table for degrees `2^u * 3` and `2^u`.
pub fn printed_table61() -> &'static [(u64, u64)] {
    static TABLE: OnceLock<Vec<(u64, u64)>> = OnceLock::new();
    TABLE.get_or_init(|| rows(TABLE_61.source).map(|r| (num(r[0]), num(r[1]))).collect())
}

/// A printed row `(n, [(e, r, t)])`, triples in printed order.
pub type PrintedTriples = (u64, Vec<(u32, u32, u32)>);

pub fn printed_table62() -> &'static [PrintedTriples] {
    static TABLE: OnceLock<Vec<PrintedTriples>> = OnceLock::new();
    TABLE.get_or_init(|| {
        rows(TABLE_62.source)
            .map(|r| {
                let triples = r[1]
                    .split(';')
                    .map(|t| {
                        let v: Vec<u32> = t.split(',').map(num).collect();
                        (v[0], v[1], v[2])
                    })
                    .collect();
                (num(r[0]), triples)
            })
            .collect()
    })
}

/// One printed row for degree `2^k * v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrintedA3Row {
    pub v: u64,
    pub k: u32,
    pub f: Option<u32>,
    pub bound: u64,
}

impl PrintedA3Row {
    pub fn degree(&self) -> u64 {
        self.v << self.k
    }
}

pub fn printed_table_a3() -> &'static [PrintedA3Row] {
    static TABLE: OnceLock<Vec<PrintedA3Row>> = OnceLock::new();
    TABLE.get_or_init(|| {
        rows(TABLE_A3.source)
            .map(|r| PrintedA3Row { v: num(r[0]), k: num(r[1]), f: (r[2] != "-").then(|| num(r[2])), bound: num(r[3]) })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksums_match() {
        for table in EMBEDDED_TABLES {
            assert!(table.verify(), "table {} digest {}", table.name, table.digest());
        }
    }

    #[test]
    fn shapes() {
        assert_eq!(table_a1().len(), 31);
        assert_eq!(table_a1()[&8], 4);
        assert_eq!(table_a1()[&32], 10);
        assert_eq!(printed_table61().len(), 23);
        assert_eq!(printed_table62().len(), 15);
        assert_eq!(printed_table62()[8].1.len(), 4);
        assert_eq!(printed_table62()[14].1.len(), 8);
        let a3 = printed_table_a3();
        assert_eq!(a3.iter().filter(|r| r.v == 5).count(), 24);
        assert_eq!(a3.iter().filter(|r| r.v == 15).count(), 34);
        let row = a3.iter().find(|r| r.v == 15 && r.k == 19).unwrap();
        assert_eq!((row.f, row.bound, row.degree()), (Some(3), 1_512_660, 7_864_320));
    }
}
