//! Closed-form Randić energies of the windmill and bipartite families, and a
//! numeric probe of which values in an interval they reach.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    make_complete_bipartite_minus_edge, make_dutch_windmill, make_friendship, Graph,
};
use crate::report::Report;
use crate::spectral::randic_energy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `F_n = D_3^n`
    Friendship { n: usize },
    /// `D_4^n`
    Windmill4 { n: usize },
    /// `D_5^n`
    Windmill5 { n: usize },
    /// `K_{m,n} − e`
    CompleteBipartiteMinusEdge { m: usize, n: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Friendship { n }
            | FamilySpec::Windmill4 { n }
            | FamilySpec::Windmill5 { n } => n >= 1,
            FamilySpec::CompleteBipartiteMinusEdge { m, n } => m >= 2 && n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("parameters out of range for {self}")))
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Friendship { .. } => "friendship",
            FamilySpec::Windmill4 { .. } => "windmill4",
            FamilySpec::Windmill5 { .. } => "windmill5",
            FamilySpec::CompleteBipartiteMinusEdge { .. } => "complete-bipartite-minus-edge",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::Friendship { n }
            | FamilySpec::Windmill4 { n }
            | FamilySpec::Windmill5 { n } => vec![n],
            FamilySpec::CompleteBipartiteMinusEdge { m, n } => vec![m, n],
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            FamilySpec::Friendship { n } => make_friendship(n),
            FamilySpec::Windmill4 { n } => make_dutch_windmill(4, n),
            FamilySpec::Windmill5 { n } => make_dutch_windmill(5, n),
            FamilySpec::CompleteBipartiteMinusEdge { m, n } => make_complete_bipartite_minus_edge(m, n),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.params().iter().map(|x| x.to_string()).collect();
        write!(f, "{}:{}", self.tag(), p.join(","))
    }
}

/// Parses `friendship:4`, `windmill4:3`, `windmill5:2`,
/// `complete-bipartite-minus-edge:3,4` (alias `kmn-e:3,4`).
impl FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (tag, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidParameter(format!("expected family:params, got {s:?}")))?;
        let nums = rest
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidParameter(format!("bad parameters in {s:?}: {e}")))?;
        let spec = match (tag, nums.as_slice()) {
            ("friendship", &[n]) => FamilySpec::Friendship { n },
            ("windmill4", &[n]) => FamilySpec::Windmill4 { n },
            ("windmill5", &[n]) => FamilySpec::Windmill5 { n },
            ("complete-bipartite-minus-edge" | "kmn-e", &[m, n]) => {
                FamilySpec::CompleteBipartiteMinusEdge { m, n }
            }
            _ => return Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// `a + b√c` with rational `a`, `b` and square-free `c >= 1`. When `c = 1`
/// the radical part is folded into `a`, so equal values compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    pub a: Rational64,
    pub b: Rational64,
    pub c: u64,
}

impl QuadraticSurd {
    pub fn new(a: Rational64, b: Rational64, radicand: u64) -> Self {
        let (s, c) = square_free_split(radicand);
        let b = b * Rational64::from_integer(s as i64);
        if c == 1 {
            Self::rational(a + b)
        } else if b.is_zero() {
            Self::rational(a)
        } else {
            QuadraticSurd { a, b, c }
        }
    }

    pub fn rational(a: Rational64) -> Self {
        QuadraticSurd { a, b: Rational64::zero(), c: 1 }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * (self.c as f64).sqrt()
    }
}

/// `r = s² c` with `c` square-free.
fn square_free_split(mut r: u64) -> (u64, u64) {
    let mut s = 1;
    let mut c = 1;
    let mut p = 2;
    while p * p <= r {
        let mut e = 0;
        while r.is_multiple_of(p) {
            r /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            c *= p;
        }
        p += 1;
    }
    (s, c * r)
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let radical = if self.b.abs() == Rational64::from_integer(1) {
            format!("√{}", self.c)
        } else if self.b.is_integer() {
            format!("{}√{}", self.b.abs(), self.c)
        } else {
            format!("({})√{}", self.b.abs(), self.c)
        };
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, false) => write!(f, "{radical}"),
            (true, true) => write!(f, "-{radical}"),
            (false, false) => write!(f, "{}+{radical}", self.a),
            (false, true) => write!(f, "{}-{radical}", self.a),
        }
    }
}

impl Serialize for QuadraticSurd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Closed-form Randić energy:
/// `RE(F_n) = n+1`, `RE(D_4^n) = 2+(n−1)√2`, `RE(D_5^n) = 1+n√5`,
/// `RE(K_{m,n}−e) = 2 + 2/√(mn)`.
pub fn closed_form_re(spec: &FamilySpec) -> Result<QuadraticSurd> {
    spec.validate()?;
    let int = |x: usize| Rational64::from_integer(x as i64);
    Ok(match *spec {
        FamilySpec::Friendship { n } => QuadraticSurd::rational(int(n + 1)),
        FamilySpec::Windmill4 { n } => QuadraticSurd::new(int(2), int(n - 1), 2),
        FamilySpec::Windmill5 { n } => QuadraticSurd::new(int(1), int(n), 5),
        FamilySpec::CompleteBipartiteMinusEdge { m, n } => {
            // 2/√p = (2/p)√p
            let p = (m * n) as i64;
            QuadraticSurd::new(int(2), Rational64::new(2, p), p as u64)
        }
    })
}

/// Builds each family member with parameters up to `max_n` and compares the
/// numeric Randić energy with the closed form.
pub fn verify_closed_forms(max_n: usize, tol: f64) -> Result<Report> {
    if max_n < 1 {
        return Err(Error::InvalidParameter("max_n must be at least 1".into()));
    }
    let mut specs = Vec::new();
    for n in 1..=max_n {
        specs.push(FamilySpec::Friendship { n });
        specs.push(FamilySpec::Windmill4 { n });
        specs.push(FamilySpec::Windmill5 { n });
    }
    for m in 2..=max_n.max(2) {
        for n in 2..=max_n.max(2) {
            specs.push(FamilySpec::CompleteBipartiteMinusEdge { m, n });
        }
    }
    let mut report = Report::new();
    for spec in specs {
        let exact = closed_form_re(&spec)?;
        let numeric = randic_energy(&spec.graph()?)?;
        let diff = (numeric - exact.to_f64()).abs();
        report.push(
            format!("closed form {spec}"),
            diff <= tol,
            format!("RE = {exact} = {:.12}, numeric {numeric:.12}, |diff| {diff:.2e}", exact.to_f64()),
        );
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    #[serde(flatten)]
    pub spec: FamilySpec,
    pub re_exact: QuadraticSurd,
    pub re_float: f64,
}

/// Limits of the probe search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeLimits {
    /// Upper bound on every family parameter.
    pub param_cap: usize,
    /// Upper bound on `mn` for the bipartite family.
    pub product_cap: usize,
}

impl Default for ProbeLimits {
    fn default() -> Self {
        ProbeLimits { param_cap: 10_000, product_cap: 1_000_000 }
    }
}

/// Family members whose closed-form Randić energy lies in `[lo, hi]`, in
/// increasing order of energy.
///
/// `RE(K_{m,n}−e)` depends only on `mn`, so that family contributes one
/// witness per product value, with the smallest admissible `m`.
pub fn density_probe(lo: f64, hi: f64) -> Result<Vec<Witness>> {
    density_probe_with(lo, hi, ProbeLimits::default())
}

pub fn density_probe_with(lo: f64, hi: f64, limits: ProbeLimits) -> Result<Vec<Witness>> {
    if lo.is_nan() || lo < 2.0 {
        return Err(Error::InvalidParameter(format!(
            "lower bound {lo} is below 2, the minimum Randić energy of a graph with an edge"
        )));
    }
    if hi.is_nan() || hi <= lo {
        return Err(Error::InvalidParameter(format!("empty interval [{lo}, {hi}]")));
    }
    let mut out = Vec::new();
    let mut push = |spec: FamilySpec| -> Result<()> {
        let exact = closed_form_re(&spec)?;
        let v = exact.to_f64();
        if v >= lo && v <= hi {
            out.push(Witness { spec, re_exact: exact, re_float: v });
        }
        Ok(())
    };
    let cap = limits.param_cap;
    // n+1, 2+(n-1)√2 and 1+n√5 are increasing in n; walk the candidate range
    let range = |offset: f64, slope: f64, first: usize| {
        let from = ((lo - offset) / slope).floor().max(first as f64) as usize;
        let to = (((hi - offset) / slope).ceil() as usize).min(cap);
        from.max(first)..=to
    };
    for n in range(1.0, 1.0, 1) {
        push(FamilySpec::Friendship { n })?;
    }
    for n in range(2.0 - 2f64.sqrt(), 2f64.sqrt(), 1) {
        push(FamilySpec::Windmill4 { n })?;
    }
    for n in range(1.0, 5f64.sqrt(), 1) {
        push(FamilySpec::Windmill5 { n })?;
    }
    // 2 + 2/√p ∈ [lo, hi]  ⇔  4/(hi−2)² <= p <= 4/(lo−2)²
    let p_min = (4.0 / (hi - 2.0).powi(2)).floor().max(4.0) as usize;
    let p_max = if lo > 2.0 { (4.0 / (lo - 2.0).powi(2)).ceil() } else { f64::INFINITY };
    let p_max = (p_max.min(limits.product_cap as f64) as usize).min(cap.saturating_mul(cap));
    for p in p_min..=p_max {
        if let Some(m) = smallest_factor_pair(p, cap) {
            push(FamilySpec::CompleteBipartiteMinusEdge { m, n: p / m })?;
        }
    }
    out.sort_by(|a, b| a.re_float.total_cmp(&b.re_float));
    Ok(out)
}

/// Smallest `m >= 2` with `m | p`, `m <= p/m` and `p/m <= cap`.
fn smallest_factor_pair(p: usize, cap: usize) -> Option<usize> {
    let start = 2.max(p.div_ceil(cap));
    (start..).take_while(|m| m * m <= p).find(|m| p.is_multiple_of(*m))
}
