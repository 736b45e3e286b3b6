//! Clamped B-spline bases on [0, 1]: knot sequences, Cox-de Boor
//! evaluation, Greville nodes, unit-integral normalization and exact
//! derivatives of spline range elements.

use crate::error::{Error, Result};

/// Extended knot sequence of degree `k` with `n` interior intervals,
/// clamped at both ends:
///
/// `0 = x_{-k} = ... = x_0 < x_1 < ... < x_{n-1} < x_n = ... = x_{n+k} = 1`
///
/// Interior knots are simple (strictly increasing). The B-spline basis
/// has `n + k` elements indexed `j = -k, ..., n-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotSequence {
    degree: usize,
    interior: usize,
    /// Distinct breakpoints x_0 .. x_n including the endpoints 0 and 1.
    breakpoints: Vec<f64>,
    /// Full extended vector x_{-k} .. x_{n+k}, length n + 2k + 1.
    knots: Vec<f64>,
}

impl KnotSequence {
    /// Build a clamped sequence from the distinct breakpoints
    /// `x_0 = 0 < x_1 < ... < x_n = 1`.
    pub fn new(degree: usize, breakpoints: &[f64]) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::InvalidInput(
                "need at least the two endpoint breakpoints".into(),
            ));
        }
        let n = breakpoints.len() - 1;
        if (breakpoints[0] - 0.0).abs() > 1e-14 || (breakpoints[n] - 1.0).abs() > 1e-14 {
            return Err(Error::InvalidInput(
                "breakpoints must span exactly [0, 1]".into(),
            ));
        }
        for w in breakpoints.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidInput(
                    "breakpoints must be strictly increasing (simple interior knots)".into(),
                ));
            }
        }
        let mut knots = Vec::with_capacity(n + 2 * degree + 1);
        knots.extend(std::iter::repeat(0.0).take(degree));
        knots.extend_from_slice(breakpoints);
        knots.extend(std::iter::repeat(1.0).take(degree));
        Ok(Self {
            degree,
            interior: n,
            breakpoints: breakpoints.to_vec(),
            knots,
        })
    }

    /// Uniform breakpoints j/n.
    pub fn uniform(degree: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        let bp: Vec<f64> = (0..=n).map(|j| j as f64 / n as f64).collect();
        Self::new(degree, &bp)
    }

    /// Chebyshev-distributed breakpoints (1 - cos(j pi / n)) / 2.
    pub fn chebyshev(degree: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        let bp: Vec<f64> = (0..=n)
            .map(|j| 0.5 * (1.0 - (j as f64 * std::f64::consts::PI / n as f64).cos()))
            .collect();
        Self::new(degree, &bp)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of interior intervals n.
    pub fn interior_count(&self) -> usize {
        self.interior
    }

    /// Number of basis functions, n + k.
    pub fn basis_count(&self) -> usize {
        self.interior + self.degree
    }

    /// Knot x_i for i in [-k, n+k].
    pub fn knot(&self, i: isize) -> f64 {
        self.knots[(i + self.degree as isize) as usize]
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Smallest distance between consecutive breakpoints.
    pub fn min_mesh_gauge(&self) -> f64 {
        self.breakpoints
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }

    /// Same breakpoints, degree k + 1.
    pub fn elevate_degree(&self) -> Self {
        Self::new(self.degree + 1, &self.breakpoints).expect("valid by construction")
    }

    /// Same breakpoints, degree k - 1.
    pub fn reduce_degree(&self) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::Capability("cannot reduce degree below 0".into()));
        }
        Self::new(self.degree - 1, &self.breakpoints)
    }

    fn check_index(&self, j: isize) -> Result<()> {
        let k = self.degree as isize;
        let n = self.interior as isize;
        if j < -k || j > n - 1 {
            return Err(Error::InvalidInput(format!(
                "basis index {j} outside [{}, {}]",
                -k,
                n - 1
            )));
        }
        Ok(())
    }

    /// Degree-zero piece: half-open intervals, closed at the right end
    /// of the domain so the partition of unity holds on all of [0, 1].
    fn deg0(&self, i: usize, x: f64) -> f64 {
        let t = &self.knots;
        if t[i] <= x && x < t[i + 1] {
            1.0
        } else if x >= 1.0 && t[i] < t[i + 1] && t[i + 1] >= 1.0 {
            1.0
        } else {
            0.0
        }
    }

    fn basis_rec(&self, i: usize, d: usize, x: f64) -> f64 {
        if d == 0 {
            return self.deg0(i, x);
        }
        let t = &self.knots;
        let mut v = 0.0;
        let den1 = t[i + d] - t[i];
        if den1 > 0.0 {
            let b = self.basis_rec(i, d - 1, x);
            if b != 0.0 {
                v += (x - t[i]) / den1 * b;
            }
        }
        let den2 = t[i + d + 1] - t[i + 1];
        if den2 > 0.0 {
            let b = self.basis_rec(i + 1, d - 1, x);
            if b != 0.0 {
                v += (t[i + d + 1] - x) / den2 * b;
            }
        }
        v
    }

    /// Value of the normalized B-spline N_{j,k}(x) via the Cox-de Boor
    /// recurrence. Zero outside [x_j, x_{j+k+1}].
    pub fn eval_basis(&self, j: isize, x: f64) -> Result<f64> {
        self.check_index(j)?;
        if !(0.0..=1.0).contains(&x) {
            return Ok(0.0);
        }
        Ok(self.basis_rec((j + self.degree as isize) as usize, self.degree, x))
    }

    /// All n + k basis values at x, indexed from j = -k upward.
    pub fn eval_all_basis(&self, x: f64) -> Vec<f64> {
        let m = self.basis_count();
        if !(0.0..=1.0).contains(&x) {
            return vec![0.0; m];
        }
        (0..m)
            .map(|jj| self.basis_rec(jj, self.degree, x))
            .collect()
    }

    /// Greville nodes xi_{j,k} = (x_{j+1} + ... + x_{j+k}) / k for
    /// j = -k, ..., n-1. Strictly increasing, first 0, last 1.
    pub fn greville_nodes(&self) -> Vec<f64> {
        assert!(self.degree >= 1, "Greville nodes need degree >= 1");
        let k = self.degree as isize;
        let n = self.interior as isize;
        (-k..n)
            .map(|j| {
                let sum: f64 = (1..=k).map(|i| self.knot(j + i)).sum();
                sum / self.degree as f64
            })
            .collect()
    }

    /// Widths xi_{j,k+1} - xi_{j-1,k+1} of the Greville intervals of the
    /// degree-elevated sequence, for j = -k, ..., n-1. These are the
    /// normalization constants of the unit-integral B-splines and equal
    /// (x_{j+k+1} - x_j) / (k + 1).
    pub fn mspline_weights(&self) -> Vec<f64> {
        let elevated = self.elevate_degree();
        let g = elevated.greville_nodes();
        g.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Unit-integral B-spline M_{j,k}(x) = N_{j,k}(x) / (xi_{j,k+1} - xi_{j-1,k+1}).
    pub fn eval_mspline(&self, j: isize, x: f64) -> Result<f64> {
        self.check_index(j)?;
        let w = self.mspline_weights();
        let jj = (j + self.degree as isize) as usize;
        Ok(self.eval_basis(j, x)? / w[jj])
    }

    /// Text form: header `k=<degree> n=<interior count>`, then the n + 1
    /// breakpoints, one per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("k={} n={}\n", self.degree, self.interior);
        for b in &self.breakpoints {
            s.push_str(&format!("{b:.17}\n"));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidInput("empty knot file".into()))?;
        let mut degree = None;
        let mut n = None;
        for tok in header.split_whitespace() {
            if let Some(v) = tok.strip_prefix("k=") {
                degree = v.parse::<usize>().ok();
            } else if let Some(v) = tok.strip_prefix("n=") {
                n = v.parse::<usize>().ok();
            }
        }
        let (degree, n) = match (degree, n) {
            (Some(k), Some(n)) => (k, n),
            _ => {
                return Err(Error::InvalidInput(
                    "knot file header must be `k=<degree> n=<interior count>`".into(),
                ))
            }
        };
        let bp: Vec<f64> = lines
            .map(|l| {
                l.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::InvalidInput(format!("bad knot value `{l}`: {e}")))
            })
            .collect::<Result<_>>()?;
        if bp.len() != n + 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} breakpoints, found {}",
                n + 1,
                bp.len()
            )));
        }
        Self::new(degree, &bp)
    }
}

/// A spline in the B-spline basis of a knot sequence; the range-element
/// representation used by the Schoenberg-type operators.
#[derive(Debug, Clone, PartialEq)]
pub struct SplineCoefficients {
    knots: KnotSequence,
    /// c_{-k} .. c_{n-1}, length n + k.
    coeffs: Vec<f64>,
}

impl SplineCoefficients {
    pub fn new(knots: KnotSequence, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != knots.basis_count() {
            return Err(Error::InvalidInput(format!(
                "coefficient length {} does not match basis count {}",
                coeffs.len(),
                knots.basis_count()
            )));
        }
        Ok(Self { knots, coeffs })
    }

    pub fn knots(&self) -> &KnotSequence {
        &self.knots
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> f64 {
        let basis = self.knots.eval_all_basis(x);
        basis
            .iter()
            .zip(&self.coeffs)
            .map(|(b, c)| b * c)
            .sum()
    }

    /// Exact derivative via the B-spline derivative recurrence; the
    /// result lives on the degree-(k-1) sequence with the same
    /// breakpoints.
    pub fn derivative(&self) -> Result<SplineCoefficients> {
        let k = self.knots.degree();
        if k == 0 {
            return Err(Error::Capability(
                "derivative of a degree-0 spline is a jump measure".into(),
            ));
        }
        let reduced = self.knots.reduce_degree()?;
        let n = self.knots.interior_count() as isize;
        let ki = k as isize;
        // d_j = k (c_j - c_{j-1}) / (x_{j+k} - x_j) for j = -(k-1) .. n-1.
        let mut d = Vec::with_capacity(reduced.basis_count());
        for j in (1 - ki)..n {
            let c_j = self.coeffs[(j + ki) as usize];
            let c_jm1 = self.coeffs[(j + ki - 1) as usize];
            let den = self.knots.knot(j + ki) - self.knots.knot(j);
            d.push(k as f64 * (c_j - c_jm1) / den);
        }
        SplineCoefficients::new(reduced, d)
    }

    /// r-th derivative; r larger than the degree is rejected.
    pub fn derivative_n(&self, r: usize) -> Result<SplineCoefficients> {
        let mut s = self.clone();
        for _ in 0..r {
            s = s.derivative()?;
        }
        Ok(s)
    }
}
