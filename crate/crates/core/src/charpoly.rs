//! Exact characteristic polynomials.
//!
//! [`charpoly_adjacency`] runs Faddeev–LeVerrier over big integers. The
//! division by `k` at step `k` is always exact for an integer matrix; a
//! nonzero remainder is reported as [`Error::InternalConsistency`] instead of
//! being rounded away.
//!
//! The remaining functions build Randić characteristic polynomials over the
//! rationals from the tridiagonal determinant sequence
//! `Λ_1 = λ`, `Λ_2 = λ² − 1/4`, `Λ_k = λΛ_{k−1} − (1/4)Λ_{k−2}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{rat, IntPolynomial, RatPolynomial};

/// `det(λI − A(G))` with exact integer coefficients.
///
/// Also checks the trace identities: the `λ^{n−1}` coefficient is zero and
/// the `λ^{n−2}` coefficient is `−|E|`.
pub fn charpoly_adjacency(g: &Graph) -> Result<IntPolynomial> {
    let n = g.order();
    let adj = g.adjacency_lists();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::from(1);
    // m holds M_k; starts as M_0 = 0
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for &l in &adj[i] {
                for (x, y) in row.iter_mut().zip(&m[l]) {
                    *x += y;
                }
            }
            row[i] += &c[n - k + 1];
        }
        m = next;
        // tr(A M_k) = sum over edges of M_k[j][i] + M_k[i][j]
        let mut tr = BigInt::zero();
        for &(i, j) in g.edges() {
            tr += &m[i][j];
            tr += &m[j][i];
        }
        let kk = BigInt::from(k);
        if !(&tr % &kk).is_zero() {
            return Err(Error::InternalConsistency(format!(
                "Faddeev–LeVerrier step {k}: trace {tr} not divisible by {k}"
            )));
        }
        c[n - k] = -(tr / kk);
    }
    let p = IntPolynomial::new(c);
    check_trace_identities(&p, g)?;
    Ok(p)
}

fn check_trace_identities(p: &IntPolynomial, g: &Graph) -> Result<()> {
    let n = g.order();
    if p.degree() != Some(n) || !p.is_monic() {
        return Err(Error::InternalConsistency(format!(
            "characteristic polynomial is not monic of degree {n}"
        )));
    }
    if n >= 1 && !p.coeff(n - 1).is_zero() {
        return Err(Error::InternalConsistency(
            "λ^(n-1) coefficient of an adjacency characteristic polynomial must vanish".into(),
        ));
    }
    if n >= 2 && p.coeff(n - 2) != -BigInt::from(g.size()) {
        return Err(Error::InternalConsistency(format!(
            "λ^(n-2) coefficient {} differs from -|E| = -{}",
            p.coeff(n - 2),
            g.size()
        )));
    }
    Ok(())
}

/// `Λ_k` for `k >= 1`.
pub fn lambda_recurrence(k: usize) -> Result<RatPolynomial> {
    if k < 1 {
        return Err(Error::InvalidParameter("Λ_k is defined for k >= 1".into()));
    }
    Ok(lambda_sequence(k).pop().expect("sequence is nonempty"))
}

/// `[Λ_0, Λ_1, ..., Λ_k]` with `Λ_0 = 1`, which is consistent with the
/// stated `Λ_2`.
fn lambda_sequence(k: usize) -> Vec<RatPolynomial> {
    let x = RatPolynomial::x();
    let quarter = rat(1, 4);
    let mut seq = vec![RatPolynomial::one(), x.clone()];
    for i in 2..=k {
        let next = &(&x * &seq[i - 1]) - &seq[i - 2].scale(&quarter);
        seq.push(next);
    }
    seq.truncate(k + 1);
    seq
}

/// Randić characteristic polynomial of `C_m`:
/// `λΛ_{m−1} − (1/2)Λ_{m−2} − (1/2)^{m−1}`.
pub fn randic_charpoly_cycle(m: usize) -> Result<RatPolynomial> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs m >= 3, got {m}")));
    }
    let seq = lambda_sequence(m - 1);
    let half = rat(1, 2);
    let tail: BigRational = Pow::pow(&half, (m - 1) as u32);
    let head = &(&RatPolynomial::x() * &seq[m - 1]) - &seq[m - 2].scale(&half);
    Ok(&head - &RatPolynomial::constant(tail))
}

/// For a `k`-regular graph `R(G) = A(G)/k`, so `RP(G, λ) = k^{−n} P(G, kλ)`.
pub fn randic_charpoly_regular(g: &Graph, k: usize) -> Result<RatPolynomial> {
    if k < 1 || g.regularity() != Some(k) {
        return Err(Error::NotRegular { k });
    }
    let p = charpoly_adjacency(g)?;
    let n = g.order() as u32;
    let kk = BigInt::from(k);
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| BigRational::new(c * Pow::pow(&kk, i as u32), Pow::pow(&kk, n)))
        .collect();
    Ok(RatPolynomial::new(coeffs))
}

/// Randić characteristic polynomial of the Dutch windmill `D_m^n`:
/// `Λ_{m−1}^{n−1} · RP(C_m, λ)`.
pub fn randic_charpoly_windmill(m: usize, n: usize) -> Result<RatPolynomial> {
    if m < 3 || n < 1 {
        return Err(Error::InvalidParameter(format!(
            "windmill needs m >= 3 and n >= 1, got m={m}, n={n}"
        )));
    }
    let blade = lambda_recurrence(m - 1)?;
    Ok(&blade.pow((n - 1) as u32) * &randic_charpoly_cycle(m)?)
}
