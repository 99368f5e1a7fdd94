//! Numeric spectra: a cyclic Jacobi eigensolver, the Randić matrix, energy
//! and Randić energy.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default bound on `max_i ‖M v_i − λ_i v_i‖₂`.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-12;
/// Default tolerance when matching eigenvalue multisets.
pub const DEFAULT_MATCH_TOL: f64 = 1e-6;

const OFF_DIAGONAL_RATIO: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix in row-major order. Symmetry is kept exact by
/// writing both triangles on every update.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    /// Takes the upper triangle of `rows` and mirrors it.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidParameter("matrix is not square".into()));
            }
            for (j, &v) in row.iter().enumerate().skip(i) {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }

    fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

/// Adjacency matrix as floats.
pub fn adjacency_sym(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.order());
    for &(i, j) in g.edges() {
        m.set(i, j, 1.0);
    }
    m
}

/// Randić matrix: `1/√(d_i d_j)` on edges, zero elsewhere. Isolated vertices
/// get zero rows.
pub fn randic_matrix(g: &Graph) -> SymMatrix {
    let d = g.degrees();
    let mut m = SymMatrix::zeros(g.order());
    for &(i, j) in g.edges() {
        m.set(i, j, 1.0 / ((d[i] * d[j]) as f64).sqrt());
    }
    m
}

/// Real spectrum of a symmetric matrix, sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// `max_i ‖M v_i − λ_i v_i‖₂` for the computed eigenpairs.
    pub residual: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn abs_sum(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }
}

/// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm is at
/// most `1e-13 · ‖M‖_F`, at most 100 sweeps.
pub fn eigenvalues_symmetric(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let n = m.order();
    let mut a = m.clone();
    let mut v = EigenvectorAccumulator::identity(n);
    let threshold = OFF_DIAGONAL_RATIO * m.frobenius();
    let mut converged = a.off_diagonal() <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        converged = a.off_diagonal() <= threshold;
    }

    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (a.get(i, i), i)).collect();
    let mut residual = 0.0f64;
    for &(lambda, k) in &pairs {
        let col = v.column(k);
        let mv = m.mul_vec(&col);
        let r = mv
            .iter()
            .zip(&col)
            .map(|(x, y)| (x - lambda * y).powi(2))
            .sum::<f64>()
            .sqrt();
        residual = residual.max(r);
    }
    if !converged || residual > tol {
        return Err(Error::Convergence { residual });
    }
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    Ok(Spectrum { values: pairs.into_iter().map(|p| p.0).collect(), residual })
}

/// Product of the applied rotations; column `k` is the `k`-th eigenvector.
struct EigenvectorAccumulator {
    n: usize,
    data: Vec<f64>,
}

impl EigenvectorAccumulator {
    fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        EigenvectorAccumulator { n, data }
    }

    fn column(&self, k: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.data[i * self.n + k]).collect()
    }
}

fn rotate(a: &mut SymMatrix, v: &mut EigenvectorAccumulator, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = a.order();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, c * akp - s * akq);
        a.set(k, q, s * akp + c * akq);
    }
    a.set(p, p, app - t * apq);
    a.set(q, q, aqq + t * apq);
    a.set(p, q, 0.0);
    for k in 0..n {
        let vkp = v.data[k * n + p];
        let vkq = v.data[k * n + q];
        v.data[k * n + p] = c * vkp - s * vkq;
        v.data[k * n + q] = s * vkp + c * vkq;
    }
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    eigenvalues_symmetric(&adjacency_sym(g), DEFAULT_EIGEN_TOL)
}

pub fn randic_spectrum(g: &Graph) -> Result<Spectrum> {
    eigenvalues_symmetric(&randic_matrix(g), DEFAULT_EIGEN_TOL)
}

/// `E(G) = Σ|λ_i|` over the adjacency spectrum.
pub fn energy(g: &Graph) -> Result<f64> {
    Ok(adjacency_spectrum(g)?.abs_sum())
}

/// `RE(G) = Σ|ρ_i|` over the Randić spectrum, always computed numerically.
pub fn randic_energy(g: &Graph) -> Result<f64> {
    Ok(randic_spectrum(g)?.abs_sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnergyMethod {
    Numeric,
    /// `RE = E/k` for a `k`-regular graph.
    RegularShortcut,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyReport {
    pub id: String,
    pub n: usize,
    pub edges: usize,
    pub energy: f64,
    pub randic_energy: f64,
    pub method: EnergyMethod,
    pub spectrum: Vec<f64>,
}

impl EnergyReport {
    /// Computes both energies. With `allow_shortcut`, a `k`-regular graph
    /// (`k >= 1`) takes `RE = E/k` instead of a second eigensolve.
    pub fn compute(id: impl Into<String>, g: &Graph, allow_shortcut: bool) -> Result<Self> {
        let spectrum = adjacency_spectrum(g)?;
        let energy = spectrum.abs_sum();
        let (randic_energy, method) = match g.regularity() {
            Some(k) if allow_shortcut && k >= 1 => (energy / k as f64, EnergyMethod::RegularShortcut),
            _ => (randic_energy(g)?, EnergyMethod::Numeric),
        };
        Ok(EnergyReport {
            id: id.into(),
            n: g.order(),
            edges: g.size(),
            energy,
            randic_energy,
            method,
            spectrum: spectrum.values,
        })
    }

    /// JSON with floats rounded to 12 significant digits.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "id": self.id,
            "n": self.n,
            "edges": self.edges,
            "energy": round_sig(self.energy),
            "randic_energy": round_sig(self.randic_energy),
            "method": self.method,
            "spectrum": self.spectrum.iter().map(|&x| round_sig(x)).collect::<Vec<_>>(),
        })
    }
}

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Size of the multiset difference `a \ b`, matching values within `tol`.
///
/// Both spectra are sorted non-increasing, so a two-pointer sweep finds a
/// maximum matching.
pub fn spectra_difference(a: &Spectrum, b: &Spectrum, tol: f64) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::InvalidParameter(format!(
            "spectra have different lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let (mut i, mut j, mut matched) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        let (x, y) = (a.values[i], b.values[j]);
        if (x - y).abs() <= tol {
            matched += 1;
            i += 1;
            j += 1;
        } else if x > y {
            i += 1;
        } else {
            j += 1;
        }
    }
    Ok(a.len() - matched)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        disjoint_union, make_complete_bipartite_minus_edge, make_cycle, make_dutch_windmill,
        make_petersen, Graph,
    };
    use proptest::prelude::*;

    fn assert_values(s: &Spectrum, expected: &[f64], tol: f64) {
        assert_eq!(s.len(), expected.len());
        for (x, y) in s.values.iter().zip(expected) {
            assert!((x - y).abs() <= tol, "{:?} vs {:?}", s.values, expected);
        }
    }

    #[test]
    fn zero_matrix() {
        let s = eigenvalues_symmetric(&SymMatrix::zeros(3), 1e-12).unwrap();
        assert_eq!(s.values, vec![0.0; 3]);
        let s = eigenvalues_symmetric(&SymMatrix::zeros(0), 1e-12).unwrap();
        assert!(s.is_empty());
        assert!(eigenvalues_symmetric(&SymMatrix::zeros(2), 0.0).is_err());
    }

    #[test]
    fn petersen_spectrum() {
        let s = adjacency_spectrum(&make_petersen()).unwrap();
        let mut expected = vec![3.0];
        expected.extend([1.0; 5]);
        expected.extend([-2.0; 4]);
        assert_values(&s, &expected, 1e-10);
        assert!(s.residual <= 1e-12);
    }

    #[test]
    fn cycle_spectrum_closed_form() {
        for m in 3..=12 {
            let mut expected: Vec<f64> = (0..m)
                .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / m as f64).cos())
                .collect();
            expected.sort_by(|a, b| b.total_cmp(a));
            assert_values(&adjacency_spectrum(&make_cycle(m).unwrap()).unwrap(), &expected, 1e-10);
        }
        assert_values(
            &adjacency_spectrum(&make_cycle(4).unwrap()).unwrap(),
            &[2.0, 0.0, 0.0, -2.0],
            1e-10,
        );
    }

    #[test]
    fn randic_matrix_entries() {
        let k2 = randic_matrix(&Graph::complete(2));
        assert_eq!((k2.get(0, 1), k2.get(1, 0), k2.get(0, 0)), (1.0, 1.0, 0.0));
        let c4 = randic_matrix(&make_cycle(4).unwrap());
        assert_eq!((c4.get(0, 1), c4.get(0, 3), c4.get(0, 2)), (0.5, 0.5, 0.0));
        for n in 1..=5 {
            let r = randic_matrix(&make_dutch_windmill(5, n).unwrap());
            let hub: Vec<f64> = (0..r.order()).map(|j| r.get(0, j)).filter(|&x| x != 0.0).collect();
            assert_eq!(hub.len(), 2 * n);
            let expect = 1.0 / (2.0 * (n as f64).sqrt());
            assert!(hub.iter().all(|x| (x - expect).abs() < 1e-15));
        }
        let iso = randic_matrix(&Graph::new(3, [(0, 1)]).unwrap());
        assert!((0..3).all(|j| iso.get(2, j) == 0.0));
    }

    #[test]
    fn energies() {
        assert!((energy(&make_petersen()).unwrap() - 16.0).abs() < 1e-9);
        assert!((randic_energy(&make_petersen()).unwrap() - 16.0 / 3.0).abs() < 1e-9);
        assert_eq!(energy(&Graph::empty(5)).unwrap(), 0.0);
        assert_eq!(randic_energy(&Graph::empty(5)).unwrap(), 0.0);
        let p4 = make_complete_bipartite_minus_edge(2, 2).unwrap();
        assert!((randic_energy(&p4).unwrap() - 3.0).abs() < 1e-9);
        let d52 = make_dutch_windmill(5, 2).unwrap();
        assert!((randic_energy(&d52).unwrap() - (1.0 + 2.0 * 5f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn report_methods() {
        let p = make_petersen();
        let r = EnergyReport::compute("P", &p, true).unwrap();
        assert_eq!(r.method, EnergyMethod::RegularShortcut);
        let r2 = EnergyReport::compute("P", &p, false).unwrap();
        assert_eq!(r2.method, EnergyMethod::Numeric);
        assert!((r.randic_energy - r2.randic_energy).abs() < 1e-9);
        let e = EnergyReport::compute("E", &Graph::empty(3), true).unwrap();
        assert_eq!(e.method, EnergyMethod::Numeric);
        let j = r.to_json();
        assert_eq!(j["method"], "regular-shortcut");
        assert_eq!(j["energy"].as_f64().unwrap(), 16.0);
        assert_eq!(j["randic_energy"].to_string(), "5.33333333333");
    }

    #[test]
    fn multiset_difference() {
        let s = |v: &[f64]| Spectrum { values: v.to_vec(), residual: 0.0 };
        let a = s(&[3.0, 1.0, 1.0, -2.0]);
        assert_eq!(spectra_difference(&a, &a, 1e-6).unwrap(), 0);
        let b = s(&[3.0, 1.0, 0.0, -2.0]);
        assert_eq!(spectra_difference(&a, &b, 1e-6).unwrap(), 1);
        assert!(spectra_difference(&a, &s(&[1.0]), 1e-6).is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]
        #[test]
        fn union_additivity(a in arb_graph(9), b in arb_graph(9)) {
            let u = disjoint_union(&[a.clone(), b.clone()]).unwrap();
            let de = energy(&u).unwrap() - energy(&a).unwrap() - energy(&b).unwrap();
            let dr = randic_energy(&u).unwrap() - randic_energy(&a).unwrap() - randic_energy(&b).unwrap();
            prop_assert!(de.abs() <= 1e-8);
            prop_assert!(dr.abs() <= 1e-8);
        }

        #[test]
        fn randic_energy_at_least_two(g in arb_graph(14)) {
            prop_assume!(g.size() > 0);
            prop_assert!(randic_energy(&g).unwrap() >= 2.0 - 1e-9);
        }

        #[test]
        fn trace_identities(g in arb_graph(14)) {
            let n = g.order() as f64;
            let s = adjacency_spectrum(&g).unwrap();
            prop_assert!(s.values.iter().sum::<f64>().abs() <= 1e-9 * n);
            let sq: f64 = s.values.iter().map(|x| x * x).sum();
            prop_assert!((sq - 2.0 * g.size() as f64).abs() <= 1e-8 * n);
            let r = randic_spectrum(&g).unwrap();
            prop_assert!(r.values.iter().sum::<f64>().abs() <= 1e-9 * n);
            prop_assert!(r.values.windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
