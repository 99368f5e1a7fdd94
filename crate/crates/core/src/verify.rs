//! Verification harnesses that combine the modules: census counts, energy
//! classes with their spectral differences, and the windmill product
//! identity checked against numeric Randić spectra.

use crate::catalog::{equivalence_classes, Catalog, EnergyKey};
use crate::census::enumerate_cubic;
use crate::charpoly::randic_charpoly_windmill;
use crate::error::{Error, Result};
use crate::graph::{make_dutch_windmill, make_petersen};
use crate::report::Report;
use crate::spectral::{adjacency_spectrum, randic_matrix, eigenvalues_symmetric, spectra_difference, DEFAULT_EIGEN_TOL, DEFAULT_MATCH_TOL};

/// Expected representative counts per order.
pub const CENSUS_COUNTS: [(usize, usize); 3] = [(4, 1), (6, 2), (10, 21)];

pub fn verify_census() -> Result<Report> {
    let mut report = Report::new();
    for (n, expected) in CENSUS_COUNTS {
        let start = std::time::Instant::now();
        let reps = enumerate_cubic(n)?;
        let elapsed = start.elapsed();
        report.push(
            format!("census n={n}"),
            reps.len() == expected,
            format!("{} representatives (expected {expected}) in {:.2?}", reps.len(), elapsed),
        );
        if n == 10 {
            let disconnected = reps.iter().filter(|g| !g.is_connected()).count();
            report.push("census n=10 disconnected", disconnected == 2, format!("{disconnected} disconnected"));
        }
    }
    Ok(report)
}

/// The tied pairs, both keys, and `spectra_difference = 3` within each pair.
pub fn verify_classes(catalog: &Catalog, tol: f64) -> Result<Report> {
    let expected: Vec<Vec<String>> = [["G_1", "G_8"], ["G_12", "G_17"], ["G_16", "G_20"]]
        .iter()
        .map(|p| p.iter().map(|s| s.to_string()).collect())
        .collect();
    let mut report = Report::new();
    for key in [EnergyKey::Energy, EnergyKey::RandicEnergy] {
        let classes = equivalence_classes(&catalog.entries, key, tol)?;
        let pairs: Vec<Vec<String>> = classes.non_singletons().cloned().collect();
        let singletons = classes.classes.iter().filter(|c| c.len() == 1).count();
        report.push(
            format!("classes by {key}"),
            pairs == expected && singletons == catalog.entries.len() - 6,
            format!("{pairs:?} plus {singletons} singletons"),
        );
    }
    for pair in &expected {
        let spectrum = |name: &str| {
            catalog
                .get(name)
                .map(|e| e.spectrum.clone())
                .ok_or_else(|| Error::CatalogMismatch(format!("{name} missing")))
        };
        let d = spectra_difference(&spectrum(&pair[0])?, &spectrum(&pair[1])?, DEFAULT_MATCH_TOL)?;
        report.push(format!("spectra differ {} vs {}", pair[0], pair[1]), d == 3, format!("{d} values differ"));
    }

    let petersen = adjacency_spectrum(&make_petersen())?;
    let same: Vec<&str> = catalog
        .entries
        .iter()
        .filter(|e| {
            (e.energy - 16.0).abs() <= 1e-9
                && spectra_difference(&e.spectrum, &petersen, DEFAULT_MATCH_TOL) == Ok(0)
        })
        .map(|e| e.name.as_str())
        .collect();
    report.push("Petersen identified", same == ["G_17"], format!("matches {same:?}"));
    Ok(report)
}

/// Evaluates the windmill product polynomial at every numeric eigenvalue of
/// `R(D_m^n)`.
pub fn verify_windmill(ms: &[usize], ns: &[usize], tol: f64) -> Result<Report> {
    let mut report = Report::new();
    for &m in ms {
        for &n in ns {
            let g = make_dutch_windmill(m, n)?;
            let poly = randic_charpoly_windmill(m, n)?;
            let spectrum = eigenvalues_symmetric(&randic_matrix(&g), DEFAULT_EIGEN_TOL)?;
            let worst = spectrum
                .values
                .iter()
                .map(|&x| poly.eval_f64(x).abs())
                .fold(0.0, f64::max);
            let order = (m - 1) * n + 1;
            let sizes_ok = poly.degree() == Some(order) && g.order() == order;
            report.push(
                format!("windmill D_{m}^{n}"),
                worst <= tol && sizes_ok,
                format!(
                    "degree {}, order {}, max |RP(ρ)| {worst:.2e}",
                    poly.degree().map_or("-".to_string(), |d| d.to_string()),
                    g.order()
                ),
            );
        }
    }
    Ok(report)
}
