//! The named catalog of cubic graphs on 10 vertices.
//!
//! Names `G_1 ..= G_21` are attached by exact characteristic polynomial
//! against the printed reference table. A printed polynomial that matches no
//! enumerated graph is paired with the one remaining graph whose energy
//! agrees with the printed energy; such entries are marked
//! [`MatchKind::PrintedEnergy`] and the polynomial disagreement stays visible
//! in [`verify_tables`].

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::census::enumerate_cubic_with_charpolys;
use crate::charpoly::charpoly_adjacency;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{graph6_decode, graph6_encode};
use crate::permanent::permanent_of_graph;
use crate::poly::IntPolynomial;
use crate::report::Report;
use crate::spectral::{adjacency_spectrum, Spectrum};
use crate::tables::PaperTables;

/// Tolerance absorbing the 4-decimal printing of reference energies.
pub const PRINTED_VALUE_TOL: f64 = 2e-4;

const EMBEDDED_G6: &str = include_str!("../data/cubic10.g6");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatchKind {
    ExactCharpoly,
    PrintedEnergy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub graph6: String,
    pub charpoly: IntPolynomial,
    pub spectrum: Spectrum,
    pub energy: f64,
    pub randic_energy: f64,
    pub permanent: BigInt,
    pub connected: bool,
    pub matched_by: MatchKind,
}

impl CatalogEntry {
    fn new(name: &str, graph: Graph, charpoly: IntPolynomial, matched_by: MatchKind) -> Result<Self> {
        let spectrum = adjacency_spectrum(&graph)?;
        let energy = spectrum.abs_sum();
        let k = graph.regularity().unwrap_or(0);
        if k == 0 {
            return Err(Error::CatalogMismatch(format!("{name} is not a regular graph")));
        }
        Ok(CatalogEntry {
            name: name.to_string(),
            graph6: graph6_encode(&graph)?,
            permanent: permanent_of_graph(&graph)?,
            connected: graph.is_connected(),
            randic_energy: energy / k as f64,
            energy,
            spectrum,
            charpoly,
            graph,
            matched_by,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// One graph6 line per entry, in catalog order.
    pub fn to_g6(&self) -> String {
        self.entries.iter().map(|e| format!("{}\n", e.graph6)).collect()
    }

    /// Loads the catalog from graph6 lines in `G_1 ..= G_21` order. Each
    /// graph must be cubic and its characteristic polynomial is recomputed.
    pub fn from_g6(text: &str, tables: &PaperTables) -> Result<Self> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.len() != tables.rows.len() {
            return Err(Error::CatalogMismatch(format!(
                "expected {} graph6 lines, found {}",
                tables.rows.len(),
                lines.len()
            )));
        }
        let entries = lines
            .iter()
            .zip(&tables.rows)
            .map(|(line, row)| {
                let g = graph6_decode(line.trim())?;
                if g.order() != 10 || g.regularity() != Some(3) {
                    return Err(Error::CatalogMismatch(format!("{} is not cubic of order 10", row.name)));
                }
                let p = charpoly_adjacency(&g)?;
                let kind = if p == row.charpoly {
                    MatchKind::ExactCharpoly
                } else {
                    MatchKind::PrintedEnergy
                };
                CatalogEntry::new(&row.name, g, p, kind)
            })
            .collect::<Result<_>>()?;
        Ok(Catalog { entries })
    }

    /// The catalog shipped in `data/cubic10.g6`.
    pub fn embedded() -> Result<Self> {
        Self::from_g6(EMBEDDED_G6, &PaperTables::embedded())
    }

    pub fn embedded_g6() -> &'static str {
        EMBEDDED_G6
    }
}

/// Enumerates the order-10 cubic graphs and names them against the embedded
/// reference tables.
pub fn build_catalog() -> Result<Catalog> {
    build_catalog_with(&PaperTables::embedded())
}

pub fn build_catalog_with(tables: &PaperTables) -> Result<Catalog> {
    let reps = enumerate_cubic_with_charpolys(10)?;
    if reps.len() != tables.rows.len() {
        return Err(Error::CatalogMismatch(format!(
            "census found {} representatives, table has {} rows",
            reps.len(),
            tables.rows.len()
        )));
    }
    let mut assigned: Vec<Option<(usize, MatchKind)>> = vec![None; tables.rows.len()];
    let mut used = vec![false; reps.len()];
    for (row_idx, row) in tables.rows.iter().enumerate() {
        if let Some(i) = reps.iter().position(|r| r.charpoly == row.charpoly) {
            if used[i] {
                return Err(Error::CatalogMismatch(format!(
                    "{} matches an already assigned graph",
                    row.name
                )));
            }
            used[i] = true;
            assigned[row_idx] = Some((i, MatchKind::ExactCharpoly));
        }
    }

    // Rows without an exact match: pair by printed energy, and require the
    // pairing to be unique in both directions.
    let leftover: Vec<usize> = (0..reps.len()).filter(|&i| !used[i]).collect();
    let energies: Vec<f64> = leftover
        .iter()
        .map(|&i| adjacency_spectrum(&reps[i].graph).map(|s| s.abs_sum()))
        .collect::<Result<_>>()?;
    for (row_idx, row) in tables.rows.iter().enumerate() {
        if assigned[row_idx].is_some() {
            continue;
        }
        let candidates: Vec<usize> = leftover
            .iter()
            .zip(&energies)
            .filter(|(&i, &e)| !used[i] && (e - row.energy.value).abs() <= PRINTED_VALUE_TOL)
            .map(|(&i, _)| i)
            .collect();
        match candidates.as_slice() {
            [i] => {
                used[*i] = true;
                assigned[row_idx] = Some((*i, MatchKind::PrintedEnergy));
            }
            _ => {
                return Err(Error::CatalogMismatch(format!(
                    "{} has no exact characteristic polynomial match and {} energy candidates",
                    row.name,
                    candidates.len()
                )))
            }
        }
    }

    let entries = tables
        .rows
        .iter()
        .zip(assigned)
        .map(|(row, slot)| {
            let (i, kind) = slot.expect("every row assigned above");
            CatalogEntry::new(&row.name, reps[i].graph.clone(), reps[i].charpoly.clone(), kind)
        })
        .collect::<Result<_>>()?;
    Ok(Catalog { entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnergyKey {
    Energy,
    RandicEnergy,
}

impl EnergyKey {
    fn of(self, e: &CatalogEntry) -> f64 {
        match self {
            EnergyKey::Energy => e.energy,
            EnergyKey::RandicEnergy => e.randic_energy,
        }
    }
}

impl fmt::Display for EnergyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergyKey::Energy => "energy",
            EnergyKey::RandicEnergy => "randic-energy",
        })
    }
}

impl std::str::FromStr for EnergyKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "energy" => Ok(EnergyKey::Energy),
            "randic" | "randic-energy" | "randic_energy" => Ok(EnergyKey::RandicEnergy),
            _ => Err(Error::InvalidParameter(format!("unknown energy key {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalenceClasses {
    pub key: EnergyKey,
    pub tol: f64,
    /// Classes of entry names; members in catalog order, classes ordered by
    /// their first member.
    pub classes: Vec<Vec<String>>,
}

impl EquivalenceClasses {
    pub fn non_singletons(&self) -> impl Iterator<Item = &Vec<String>> {
        self.classes.iter().filter(|c| c.len() > 1)
    }
}

impl fmt::Display for EquivalenceClasses {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.classes {
            writeln!(f, "{{{}}}", c.join(", "))?;
        }
        Ok(())
    }
}

/// Single-linkage grouping of entries whose key values differ by at most
/// `tol`.
pub fn equivalence_classes(entries: &[CatalogEntry], key: EnergyKey, tol: f64) -> Result<EquivalenceClasses> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&a, &b| key.of(&entries[a]).total_cmp(&key.of(&entries[b])).then(a.cmp(&b)));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (pos, &idx) in order.iter().enumerate() {
        let joins = pos > 0 && key.of(&entries[idx]) - key.of(&entries[order[pos - 1]]) <= tol;
        match groups.last_mut() {
            Some(g) if joins => g.push(idx),
            _ => groups.push(vec![idx]),
        }
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    groups.sort_by_key(|g| g[0]);
    Ok(EquivalenceClasses {
        key,
        tol,
        classes: groups
            .into_iter()
            .map(|g| g.into_iter().map(|i| entries[i].name.clone()).collect())
            .collect(),
    })
}

/// Compares the catalog against the printed reference tables.
///
/// (a) exact characteristic polynomials, (b) energies and Randić energies
/// within `tol`, (c) the printed permanents, (d) the printed `A(G_1)`
/// matrix against the `G_1` polynomial and permanent.
pub fn verify_tables(catalog: &Catalog, tables: &PaperTables, tol: f64) -> Result<Report> {
    let mut report = Report::new();
    for row in &tables.rows {
        let entry = catalog
            .get(&row.name)
            .ok_or_else(|| Error::CatalogMismatch(format!("{} missing from catalog", row.name)))?;
        let ok = entry.charpoly == row.charpoly;
        let detail = if ok {
            entry.charpoly.to_string()
        } else {
            format!("printed {} | computed {}", row.charpoly, entry.charpoly)
        };
        report.push(format!("table1 {}", row.name), ok, detail);
    }
    for row in &tables.rows {
        let entry = catalog.get(&row.name).expect("checked above");
        for (label, printed, actual) in [
            ("E", &row.energy, entry.energy),
            ("RE", &row.randic_energy, entry.randic_energy),
        ] {
            let diff = (actual - printed.value).abs();
            report.push(
                format!("table2 {label}({})", row.name),
                diff <= tol,
                format!("printed {} computed {actual:.6} |diff| {diff:.2e}", printed.text),
            );
        }
    }
    for (name, expected) in &tables.permanents {
        let actual = catalog.get(name).map(|e| e.permanent.clone());
        report.push(
            format!("permanent {name}"),
            actual.as_ref() == Some(expected),
            format!(
                "printed {expected} computed {}",
                actual.map_or_else(|| "missing".to_string(), |v| v.to_string())
            ),
        );
    }
    if let (Some(printed), Some(row)) = (tables.matrix("G_1"), tables.row("G_1")) {
        let p = charpoly_adjacency(printed)?;
        report.push("printed A(G_1) charpoly", p == row.charpoly, p.to_string());
        let per = permanent_of_graph(printed)?;
        let expected = tables.permanents.iter().find(|(n, _)| n == "G_1").map(|(_, v)| v);
        report.push("printed A(G_1) permanent", Some(&per) == expected, per.to_string());
    }
    Ok(report)
}
