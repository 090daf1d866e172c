//! The frozen catalogue of short intersecting codes.
//!
//! These generator matrices witness the exact values of `i(k, q)` in the
//! range where randomized and algebraic searches found optimal codes. They
//! are data, not derived objects: entries over extension fields are written
//! against the fixed primitive element of the Conway-modulus field (over
//! GF(4): `alpha = 2`, `alpha^2 = 3`; over GF(9): `alpha^j` for
//! `j = 0..7` encodes to `1, 3, 4, 7, 2, 6, 8, 5`).
//!
//! The table is guarded by an FNV-1a checksum; any edit fails the tests
//! loudly. Regenerate the checksum only when deliberately changing the
//! catalogue.

use crate::code::LinearCode;
use crate::construct::field_of_order;
use crate::error::Result;
use crate::matrix::Matrix;
use serde::Serialize;

/// What the catalogue asserts about an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// Verified intersecting; optimality not asserted.
    Intersecting,
    /// Shortest known at the time of freezing.
    ShortestKnown,
    /// Provably the shortest intersecting code of its dimension and field.
    Optimal,
}

#[derive(Debug, Clone)]
pub struct CatalogueEntry {
    pub label: &'static str,
    pub q: u64,
    pub k: usize,
    pub n: usize,
    /// Stated minimum distance.
    pub d: usize,
    pub claim: Claim,
    rows: &'static [&'static [u64]],
}

impl CatalogueEntry {
    pub fn matrix(&self) -> Result<Matrix> {
        let ctx = field_of_order(self.q)?;
        let rows: Vec<Vec<u64>> = self.rows.iter().map(|r| r.to_vec()).collect();
        Matrix::from_rows(ctx, &rows)
    }

    pub fn code(&self) -> Result<LinearCode> {
        LinearCode::new(self.matrix()?)
    }

    pub fn rows(&self) -> &'static [&'static [u64]] {
        self.rows
    }
}

// GF(4): a = alpha = 2, b = alpha^2 = 3
// GF(9): powers of alpha encode as [1, 3, 4, 7, 2, 6, 8, 5]
const ENTRIES: &[CatalogueEntry] = &[
    CatalogueEntry {
        label: "q3k3",
        q: 3,
        k: 3,
        n: 6,
        d: 3,
        claim: Claim::Optimal,
        rows: &[
            &[1, 0, 0, 1, 0, 2],
            &[0, 1, 0, 2, 2, 1],
            &[0, 0, 1, 1, 1, 1],
        ],
    },
    CatalogueEntry {
        label: "q4k4",
        q: 4,
        k: 4,
        n: 8,
        d: 4,
        claim: Claim::Optimal,
        rows: &[
            &[1, 0, 0, 0, 0, 1, 1, 1],
            &[0, 1, 0, 0, 1, 1, 1, 0],
            &[0, 0, 1, 0, 1, 0, 1, 2],
            &[0, 0, 0, 1, 0, 2, 3, 1],
        ],
    },
    CatalogueEntry {
        label: "q5k4",
        q: 5,
        k: 4,
        n: 8,
        d: 4,
        claim: Claim::Optimal,
        rows: &[
            &[1, 0, 0, 0, 1, 0, 3, 4],
            &[0, 1, 0, 0, 4, 2, 4, 0],
            &[0, 0, 1, 0, 0, 4, 2, 4],
            &[0, 0, 0, 1, 4, 1, 3, 4],
        ],
    },
    CatalogueEntry {
        label: "q3k5",
        q: 3,
        k: 5,
        n: 10,
        d: 5,
        claim: Claim::Optimal,
        rows: &[
            &[1, 0, 0, 0, 0, 1, 2, 2, 2, 1],
            &[0, 1, 0, 0, 0, 1, 1, 1, 0, 1],
            &[0, 0, 1, 0, 0, 1, 1, 0, 2, 2],
            &[0, 0, 0, 1, 0, 2, 1, 2, 2, 0],
            &[0, 0, 0, 0, 1, 0, 2, 1, 2, 2],
        ],
    },
    CatalogueEntry {
        label: "q4k5",
        q: 4,
        k: 5,
        n: 10,
        d: 5,
        claim: Claim::Optimal,
        rows: &[
            &[1, 0, 0, 0, 0, 2, 0, 1, 3, 2],
            &[0, 1, 0, 0, 0, 2, 3, 2, 3, 0],
            &[0, 0, 1, 0, 0, 0, 2, 3, 2, 3],
            &[0, 0, 0, 1, 0, 3, 2, 1, 0, 3],
            &[0, 0, 0, 0, 1, 3, 1, 1, 2, 1],
        ],
    },
    CatalogueEntry {
        label: "q5k5",
        q: 5,
        k: 5,
        n: 10,
        d: 5,
        claim: Claim::Optimal,
        rows: &[
            &[1, 0, 0, 0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 0, 0, 0, 1, 0, 2, 4, 3],
            &[0, 0, 1, 0, 0, 4, 2, 1, 4, 3],
            &[0, 0, 0, 1, 0, 4, 1, 2, 3, 4],
            &[0, 0, 0, 0, 1, 4, 3, 0, 1, 4],
        ],
    },
    CatalogueEntry {
        label: "q7k5",
        q: 7,
        k: 5,
        n: 10,
        d: 5,
        claim: Claim::Optimal,
        rows: &[
            &[1, 0, 0, 0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 0, 0, 0, 1, 3, 6, 6, 3],
            &[0, 0, 1, 0, 0, 3, 4, 2, 5, 1],
            &[0, 0, 0, 1, 0, 5, 5, 0, 4, 2],
            &[0, 0, 0, 0, 1, 6, 1, 6, 6, 0],
        ],
    },
    CatalogueEntry {
        label: "q3k6",
        q: 3,
        k: 6,
        n: 13,
        d: 6,
        claim: Claim::Optimal,
        rows: &[
            &[1, 0, 0, 0, 0, 0, 2, 1, 1, 0, 0, 2, 2],
            &[0, 1, 0, 0, 0, 0, 2, 0, 2, 1, 0, 2, 1],
            &[0, 0, 1, 0, 0, 0, 1, 1, 2, 2, 1, 1, 0],
            &[0, 0, 0, 1, 0, 0, 0, 1, 1, 2, 2, 1, 1],
            &[0, 0, 0, 0, 1, 0, 1, 2, 0, 1, 2, 0, 2],
            &[0, 0, 0, 0, 0, 1, 2, 2, 0, 0, 1, 1, 2],
        ],
    },
    CatalogueEntry {
        label: "q9k6",
        q: 9,
        k: 6,
        n: 12,
        d: 6,
        claim: Claim::Optimal,
        rows: &[
            &[1, 0, 0, 0, 0, 0, 5, 2, 8, 7, 8, 0],
            &[0, 1, 0, 0, 0, 0, 2, 3, 5, 3, 1, 3],
            &[0, 0, 1, 0, 0, 0, 2, 5, 2, 3, 8, 4],
            &[0, 0, 0, 1, 0, 0, 8, 0, 4, 1, 1, 3],
            &[0, 0, 0, 0, 1, 0, 7, 4, 1, 3, 8, 2],
            &[0, 0, 0, 0, 0, 1, 7, 8, 3, 3, 3, 7],
        ],
    },
    CatalogueEntry {
        label: "q7k7",
        q: 7,
        k: 7,
        n: 14,
        d: 7,
        claim: Claim::Optimal,
        rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 3, 3, 4, 3, 2, 2, 6],
            &[0, 1, 0, 0, 0, 0, 0, 6, 3, 3, 4, 3, 2, 2],
            &[0, 0, 1, 0, 0, 0, 0, 2, 6, 3, 3, 4, 3, 2],
            &[0, 0, 0, 1, 0, 0, 0, 2, 2, 6, 3, 3, 4, 3],
            &[0, 0, 0, 0, 1, 0, 0, 3, 2, 2, 6, 3, 3, 4],
            &[0, 0, 0, 0, 0, 1, 0, 4, 3, 2, 2, 6, 3, 3],
            &[0, 0, 0, 0, 0, 0, 1, 3, 4, 3, 2, 2, 6, 3],
        ],
    },
];

/// Frozen FNV-1a checksum of the canonical serialization of the entries.
pub const CATALOGUE_CHECKSUM: u64 = 0x32341b92ac335208;

/// All catalogue entries, in increasing dimension order.
pub fn catalogue() -> Vec<CatalogueEntry> {
    ENTRIES.to_vec()
}

/// Look up an entry by its label, e.g. `"q3k3"`.
pub fn catalogue_entry(label: &str) -> Option<CatalogueEntry> {
    ENTRIES.iter().find(|e| e.label == label).cloned()
}

/// FNV-1a over the canonical serialization of the frozen table.
pub fn catalogue_checksum() -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    let mut eat = |byte: u8| {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    };
    for e in ENTRIES {
        for b in e.label.bytes() {
            eat(b);
        }
        for v in [e.q, e.k as u64, e.n as u64, e.d as u64] {
            for b in v.to_le_bytes() {
                eat(b);
            }
        }
        for row in e.rows {
            for &v in row.iter() {
                for b in v.to_le_bytes() {
                    eat(b);
                }
            }
        }
    }
    hash
}
