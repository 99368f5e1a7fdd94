//! Published reference values for the order-10 cubic graphs, kept verbatim in
//! `data/paper_tables.json`.

use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;

const EMBEDDED: &str = include_str!("../data/paper_tables.json");

#[derive(Debug, Clone, Deserialize)]
struct RawTables {
    table1: Vec<RawPoly>,
    table2: Vec<RawEnergy>,
    permanents: Vec<RawPermanent>,
    matrices: std::collections::BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
struct RawPoly {
    name: String,
    charpoly: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
struct RawEnergy {
    name: String,
    energy: String,
    randic_energy: String,
}

#[derive(Debug, Clone, Deserialize)]
struct RawPermanent {
    name: String,
    permanent: String,
}

/// A printed energy value with its decimal text.
#[derive(Debug, Clone, PartialEq)]
pub struct PrintedValue {
    pub text: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub name: String,
    pub charpoly: IntPolynomial,
    pub energy: PrintedValue,
    pub randic_energy: PrintedValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PaperTables {
    /// Rows `G_1 ..= G_21` in order.
    pub rows: Vec<TableRow>,
    pub permanents: Vec<(String, BigInt)>,
    /// Adjacency matrices printed alongside the tables, keyed by name.
    pub matrices: Vec<(String, Graph)>,
}

impl PaperTables {
    pub fn embedded() -> Self {
        Self::parse(EMBEDDED).expect("embedded paper_tables.json is valid")
    }

    pub fn embedded_json() -> &'static str {
        EMBEDDED
    }

    pub fn parse(json: &str) -> Result<Self> {
        let raw: RawTables =
            serde_json::from_str(json).map_err(|e| Error::Parse(format!("reference tables: {e}")))?;
        if raw.table1.len() != raw.table2.len() {
            return Err(Error::Parse("table1 and table2 have different lengths".into()));
        }
        let printed = |s: &str| -> Result<PrintedValue> {
            let value = s
                .parse()
                .map_err(|e| Error::Parse(format!("bad printed value {s:?}: {e}")))?;
            Ok(PrintedValue { text: s.to_string(), value })
        };
        let mut rows = Vec::with_capacity(raw.table1.len());
        for (p, e) in raw.table1.iter().zip(&raw.table2) {
            if p.name != e.name {
                return Err(Error::Parse(format!("row order differs: {} vs {}", p.name, e.name)));
            }
            rows.push(TableRow {
                name: p.name.clone(),
                charpoly: IntPolynomial::from_strings(&p.charpoly)?,
                energy: printed(&e.energy)?,
                randic_energy: printed(&e.randic_energy)?,
            });
        }
        let permanents = raw
            .permanents
            .iter()
            .map(|p| {
                p.permanent
                    .parse::<BigInt>()
                    .map(|v| (p.name.clone(), v))
                    .map_err(|e| Error::Parse(format!("bad permanent for {}: {e}", p.name)))
            })
            .collect::<Result<_>>()?;
        let matrices = raw
            .matrices
            .iter()
            .map(|(name, rows)| {
                let bits: Vec<Vec<u8>> = rows
                    .iter()
                    .map(|r| r.bytes().map(|b| b.wrapping_sub(b'0')).collect())
                    .collect();
                Graph::from_adjacency_rows(&bits).map(|g| (name.clone(), g))
            })
            .collect::<Result<_>>()?;
        Ok(PaperTables { rows, permanents, matrices })
    }

    pub fn row(&self, name: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    pub fn matrix(&self, name: &str) -> Option<&Graph> {
        self.matrices.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }
}
