//! Graph energy and Randić energy.
//!
//! - [`graph`]: simple graphs and the cycle, windmill, `K_{m,n} − e` and
//!   Petersen constructors; [`graph6`] serialization.
//! - [`poly`] and [`charpoly`]: exact polynomials, adjacency characteristic
//!   polynomials over big integers, Randić characteristic polynomials of
//!   cycles, regular graphs and Dutch windmills over the rationals.
//! - [`spectral`]: Jacobi eigensolver, Randić matrix, energies.
//! - [`permanent`]: Ryser's formula.
//! - [`census`] and [`catalog`]: the cubic graphs on 10 vertices, named
//!   against the published reference tables in `data/paper_tables.json`.
//! - [`families`]: closed-form Randić energies and the density probe.
//! - [`verify`]: cross-module verification harnesses.

pub mod catalog;
pub mod census;
pub mod charpoly;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod permanent;
pub mod poly;
pub mod report;
pub mod spectral;
pub mod tables;
pub mod verify;

pub use catalog::{
    build_catalog, equivalence_classes, verify_tables, Catalog, CatalogEntry, EnergyKey,
    EquivalenceClasses, MatchKind,
};
pub use census::enumerate_cubic;
pub use charpoly::{
    charpoly_adjacency, lambda_recurrence, randic_charpoly_cycle, randic_charpoly_regular,
    randic_charpoly_windmill,
};
pub use error::{Error, Result};
pub use families::{closed_form_re, density_probe, verify_closed_forms, FamilySpec, QuadraticSurd, Witness};
pub use graph::{
    disjoint_union, make_complete_bipartite_minus_edge, make_cycle, make_dutch_windmill,
    make_petersen, AdjacencyMatrix, Graph,
};
pub use graph6::{graph6_decode, graph6_encode};
pub use permanent::{permanent_of_graph, permanent_ryser, IntMatrix};
pub use poly::{IntPolynomial, Poly, RatPolynomial};
pub use report::{Check, Report};
pub use spectral::{
    eigenvalues_symmetric, energy, randic_energy, randic_matrix, spectra_difference, EnergyMethod,
    EnergyReport, Spectrum, SymMatrix,
};
pub use tables::PaperTables;
