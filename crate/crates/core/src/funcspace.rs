//! Sampled functions on [0, 1] with optional exact descriptors, Lp
//! norms, forward differences, moduli of smoothness, semi-norms and
//! K-functional upper estimates.

use crate::error::{Error, Result};
use crate::splines::SplineCoefficients;

/// Number of nodes of the default uniform grid.
pub const DEFAULT_GRID_POINTS: usize = 4097;

/// Spatial dimension of the domain. Kept as a named constant so the
/// d^{r/2} factor appears literally in the inequality code.
pub const DIMENSION: f64 = 1.0;

/// How many leading grid spans of the step-size ladder get a
/// golden-section refinement in the modulus of smoothness. Refining a
/// fixed prefix keeps the candidate set nested in t, so the modulus
/// stays monotone in t by construction.
const MODULUS_REFINE_SPANS: usize = 64;

/// The domain: an interval [a, b] in dimension d. This artifact fixes
/// d = 1 and [a, b] = [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainDescriptor {
    pub dimension: u32,
    pub a: f64,
    pub b: f64,
}

impl DomainDescriptor {
    pub fn unit_interval() -> Self {
        Self {
            dimension: 1,
            a: 0.0,
            b: 1.0,
        }
    }
}

/// An Lp exponent: finite p >= 1 or the sup norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PNorm {
    Finite(f64),
    Infinity,
}

impl PNorm {
    pub fn new(p: f64) -> Result<Self> {
        if p < 1.0 || !p.is_finite() {
            return Err(Error::InvalidInput(format!("p must be in [1, inf), got {p}")));
        }
        Ok(PNorm::Finite(p))
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "oo" => Ok(PNorm::Infinity),
            other => {
                let p: f64 = other
                    .parse()
                    .map_err(|e| Error::InvalidInput(format!("bad p `{other}`: {e}")))?;
                PNorm::new(p)
            }
        }
    }
}

impl std::fmt::Display for PNorm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PNorm::Finite(p) => write!(f, "{p}"),
            PNorm::Infinity => write!(f, "inf"),
        }
    }
}

/// Strictly increasing nodes spanning [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    nodes: Vec<f64>,
}

impl Grid {
    pub fn uniform(len: usize) -> Result<Self> {
        if len < 2 {
            return Err(Error::InvalidInput("grid needs at least 2 nodes".into()));
        }
        let n = len - 1;
        Ok(Self {
            nodes: (0..=n).map(|i| i as f64 / n as f64).collect(),
        })
    }

    pub fn from_nodes(nodes: Vec<f64>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::InvalidInput("grid needs at least 2 nodes".into()));
        }
        if (nodes[0]).abs() > 1e-14 || (nodes[nodes.len() - 1] - 1.0).abs() > 1e-14 {
            return Err(Error::InvalidInput("grid must span [0, 1]".into()));
        }
        if nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidInput("grid nodes must be strictly increasing".into()));
        }
        Ok(Self { nodes })
    }

    pub fn default_grid() -> Self {
        Self::uniform(DEFAULT_GRID_POINTS).expect("constant is >= 2")
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Smallest node spacing.
    pub fn min_spacing(&self) -> f64 {
        self.nodes
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }
}

/// Closed-form descriptor enabling exact off-grid evaluation, exact
/// derivatives where they exist, and exact integrals for the functional
/// evaluations of the operators.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactFn {
    /// a_0 + a_1 x + a_2 x^2 + ...
    Polynomial(Vec<f64>),
    /// amplitude * sin(omega x + phase)
    Sinusoid { amplitude: f64, omega: f64, phase: f64 },
    /// sqrt(x)
    Sqrt,
    /// |x - center|
    Abs { center: f64 },
    /// Piecewise-linear triangle wave with `teeth` full periods on [0, 1],
    /// range [0, 1], slope +-2*teeth.
    Sawtooth { teeth: u32 },
    /// Polynomial in the Bernstein basis of degree len - 1.
    Bernstein(Vec<f64>),
    /// Spline in a B-spline basis.
    Spline(SplineCoefficients),
    /// scale * inner
    Scaled(f64, Box<ExactFn>),
}

fn de_casteljau(coeffs: &[f64], x: f64) -> f64 {
    let mut c = coeffs.to_vec();
    let n = c.len();
    for level in 1..n {
        for i in 0..n - level {
            c[i] = (1.0 - x) * c[i] + x * c[i + 1];
        }
    }
    c[0]
}

fn bernstein_derivative_coeffs(coeffs: &[f64]) -> Vec<f64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return vec![0.0];
    }
    coeffs
        .windows(2)
        .map(|w| n as f64 * (w[1] - w[0]))
        .collect()
}

impl ExactFn {
    pub fn sin_pi() -> Self {
        ExactFn::Sinusoid {
            amplitude: 1.0,
            omega: std::f64::consts::PI,
            phase: 0.0,
        }
    }

    pub fn constant(c: f64) -> Self {
        ExactFn::Polynomial(vec![c])
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            ExactFn::Polynomial(a) => a.iter().rev().fold(0.0, |acc, &c| acc * x + c),
            ExactFn::Sinusoid { amplitude, omega, phase } => amplitude * (omega * x + phase).sin(),
            ExactFn::Sqrt => x.max(0.0).sqrt(),
            ExactFn::Abs { center } => (x - center).abs(),
            ExactFn::Sawtooth { teeth } => {
                let u = *teeth as f64 * x;
                let s = u - u.floor();
                1.0 - 2.0 * (s - 0.5).abs()
            }
            ExactFn::Bernstein(c) => de_casteljau(c, x),
            ExactFn::Spline(s) => s.eval(x),
            ExactFn::Scaled(c, inner) => c * inner.eval(x),
        }
    }

    /// Largest r for which D^r is a bounded (a.e.-defined) function.
    pub fn derivative_order(&self) -> usize {
        match self {
            ExactFn::Polynomial(_) | ExactFn::Sinusoid { .. } | ExactFn::Bernstein(_) => usize::MAX,
            ExactFn::Sqrt => 0,
            ExactFn::Abs { .. } | ExactFn::Sawtooth { .. } => 1,
            ExactFn::Spline(s) => s.knots().degree(),
            ExactFn::Scaled(_, inner) => inner.derivative_order(),
        }
    }

    /// D^r at x, where defined (one-sided at kinks).
    pub fn eval_derivative(&self, r: usize, x: f64) -> Option<f64> {
        if r == 0 {
            return Some(self.eval(x));
        }
        if r > self.derivative_order() {
            return None;
        }
        match self {
            ExactFn::Polynomial(a) => {
                let mut c = a.clone();
                for _ in 0..r {
                    c = c
                        .iter()
                        .enumerate()
                        .skip(1)
                        .map(|(i, v)| i as f64 * v)
                        .collect();
                    if c.is_empty() {
                        return Some(0.0);
                    }
                }
                Some(c.iter().rev().fold(0.0, |acc, &v| acc * x + v))
            }
            ExactFn::Sinusoid { amplitude, omega, phase } => {
                let amp = amplitude * omega.powi(r as i32);
                Some(amp * (omega * x + phase + r as f64 * std::f64::consts::FRAC_PI_2).sin())
            }
            ExactFn::Sqrt => None,
            ExactFn::Abs { center } => Some(if x >= *center { 1.0 } else { -1.0 }),
            ExactFn::Sawtooth { teeth } => {
                let m = *teeth as f64;
                let u = m * x;
                let s = u - u.floor();
                Some(if s < 0.5 { 2.0 * m } else { -2.0 * m })
            }
            ExactFn::Bernstein(c) => {
                let mut d = c.clone();
                for _ in 0..r {
                    d = bernstein_derivative_coeffs(&d);
                }
                Some(de_casteljau(&d, x))
            }
            ExactFn::Spline(s) => s.derivative_n(r).ok().map(|d| d.eval(x)),
            ExactFn::Scaled(c, inner) => inner.eval_derivative(r, x).map(|v| c * v),
        }
    }

    /// The derivative as a new descriptor, when closed-form.
    pub fn derivative(&self) -> Option<ExactFn> {
        match self {
            ExactFn::Polynomial(a) => {
                let d: Vec<f64> = a
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(i, v)| i as f64 * v)
                    .collect();
                Some(ExactFn::Polynomial(if d.is_empty() { vec![0.0] } else { d }))
            }
            ExactFn::Sinusoid { amplitude, omega, phase } => Some(ExactFn::Sinusoid {
                amplitude: amplitude * omega,
                omega: *omega,
                phase: phase + std::f64::consts::FRAC_PI_2,
            }),
            ExactFn::Bernstein(c) => Some(ExactFn::Bernstein(bernstein_derivative_coeffs(c))),
            ExactFn::Spline(s) => s.derivative().ok().map(ExactFn::Spline),
            ExactFn::Scaled(c, inner) => inner
                .derivative()
                .map(|d| ExactFn::Scaled(*c, Box::new(d))),
            _ => None,
        }
    }

    /// Exact integral over [a, b] when a closed form exists.
    pub fn integral(&self, a: f64, b: f64) -> Option<f64> {
        match self {
            ExactFn::Polynomial(c) => {
                let anti = |x: f64| -> f64 {
                    c.iter()
                        .enumerate()
                        .map(|(i, v)| v * x.powi(i as i32 + 1) / (i as f64 + 1.0))
                        .sum()
                };
                Some(anti(b) - anti(a))
            }
            ExactFn::Sinusoid { amplitude, omega, phase } => {
                if *omega == 0.0 {
                    Some(amplitude * phase.sin() * (b - a))
                } else {
                    Some(-amplitude / omega * ((omega * b + phase).cos() - (omega * a + phase).cos()))
                }
            }
            ExactFn::Sqrt => Some(2.0 / 3.0 * (b.max(0.0).powf(1.5) - a.max(0.0).powf(1.5))),
            ExactFn::Abs { center } => {
                let anti = |x: f64| 0.5 * (x - center) * (x - center).abs();
                Some(anti(b) - anti(a))
            }
            ExactFn::Sawtooth { teeth } => {
                let m = *teeth as f64;
                // Antiderivative of the unit triangle wave.
                let cell = |u: f64| -> f64 {
                    let i = u.floor();
                    let s = u - i;
                    let h = if s <= 0.5 { s * s } else { 2.0 * s - s * s - 0.5 };
                    0.5 * i + h
                };
                Some((cell(m * b) - cell(m * a)) / m)
            }
            ExactFn::Bernstein(c) => {
                let n = c.len() - 1;
                // Antiderivative is degree n + 1 with prefix-sum coefficients.
                let mut anti = vec![0.0; c.len() + 1];
                let mut acc = 0.0;
                for (i, v) in c.iter().enumerate() {
                    acc += v / (n as f64 + 1.0);
                    anti[i + 1] = acc;
                }
                Some(de_casteljau(&anti, b) - de_casteljau(&anti, a))
            }
            ExactFn::Spline(_) => None,
            ExactFn::Scaled(c, inner) => inner.integral(a, b).map(|v| c * v),
        }
    }

    /// Kink locations, used to align quadrature panels.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            ExactFn::Abs { center } => vec![*center],
            ExactFn::Sawtooth { teeth } => {
                let m = 2 * teeth;
                (1..m).map(|j| j as f64 / m as f64).collect()
            }
            ExactFn::Spline(s) => s.knots().breakpoints().to_vec(),
            ExactFn::Scaled(_, inner) => inner.breakpoints(),
            _ => Vec::new(),
        }
    }
}

/// A function on [0, 1]: values on a grid plus an optional exact
/// descriptor used for evaluation off the grid.
#[derive(Debug, Clone)]
pub struct SampledFunction {
    label: String,
    grid: Grid,
    values: Vec<f64>,
    exact: Option<ExactFn>,
}

impl SampledFunction {
    pub fn from_exact(label: impl Into<String>, exact: ExactFn, grid: Grid) -> Self {
        let values = grid.nodes().iter().map(|&x| exact.eval(x)).collect();
        Self {
            label: label.into(),
            grid,
            values,
            exact: Some(exact),
        }
    }

    pub fn from_values(label: impl Into<String>, grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidInput(format!(
                "values length {} does not match grid length {}",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self {
            label: label.into(),
            grid,
            values,
            exact: None,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn exact(&self) -> Option<&ExactFn> {
        self.exact.as_ref()
    }

    /// Evaluate at x: exact descriptor when present, else linear
    /// interpolation on the grid (clamped to [0, 1]).
    pub fn eval(&self, x: f64) -> f64 {
        if let Some(exact) = &self.exact {
            return exact.eval(x);
        }
        let nodes = self.grid.nodes();
        let x = x.clamp(nodes[0], nodes[nodes.len() - 1]);
        let hi = nodes.partition_point(|&n| n < x).min(nodes.len() - 1).max(1);
        let lo = hi - 1;
        let w = (x - nodes[lo]) / (nodes[hi] - nodes[lo]);
        self.values[lo] * (1.0 - w) + self.values[hi] * w
    }

    /// c * f, with the exact descriptor scaled as well.
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            label: format!("{}*{}", c, self.label),
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| c * v).collect(),
            exact: self
                .exact
                .clone()
                .map(|e| ExactFn::Scaled(c, Box::new(e))),
        }
    }
}

pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// p-norm of samples over a node partition: max for p = inf, composite
/// trapezoid of |v|^p otherwise.
fn partition_norm(nodes: &[f64], vals: &[f64], p: PNorm) -> f64 {
    match p {
        PNorm::Infinity => vals.iter().fold(0.0f64, |m, v| m.max(v.abs())),
        PNorm::Finite(p) => {
            if nodes.len() < 2 {
                return 0.0;
            }
            let mut acc = 0.0;
            for i in 0..nodes.len() - 1 {
                let dx = nodes[i + 1] - nodes[i];
                acc += 0.5 * dx * (vals[i].abs().powf(p) + vals[i + 1].abs().powf(p));
            }
            acc.powf(1.0 / p)
        }
    }
}

/// ||f||_p on [0, 1]: max of |values| for p = inf, composite trapezoid
/// approximation of the integral otherwise.
pub fn norm(f: &SampledFunction, p: PNorm) -> f64 {
    partition_norm(f.grid.nodes(), &f.values, p)
}

/// ||f - g||_p, with g evaluated on f's grid.
pub fn norm_of_difference(f: &SampledFunction, g: &SampledFunction, p: PNorm) -> f64 {
    let vals: Vec<f64> = f
        .grid
        .nodes()
        .iter()
        .zip(&f.values)
        .map(|(&x, &v)| v - g.eval(x))
        .collect();
    partition_norm(f.grid.nodes(), &vals, p)
}

/// Forward difference of order r with step h at x.
pub fn forward_difference(f: &SampledFunction, h: f64, r: usize, x: f64) -> Result<f64> {
    if x < -1e-12 || x + r as f64 * h > 1.0 + 1e-12 {
        return Err(Error::DomainViolation(format!(
            "x + r h = {} leaves [0, 1]",
            x + r as f64 * h
        )));
    }
    Ok(forward_difference_unchecked(f, h, r, x))
}

fn forward_difference_unchecked(f: &SampledFunction, h: f64, r: usize, x: f64) -> f64 {
    let mut acc = 0.0;
    for l in 0..=r {
        let sign = if (r - l) % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binomial(r, l) * f.eval(x + l as f64 * h);
    }
    acc
}

/// p-norm of x -> D_h^r f(x) over the admissible set {x : x + r h <= 1}.
fn difference_norm(f: &SampledFunction, h: f64, r: usize, p: PNorm) -> f64 {
    let upper = 1.0 - r as f64 * h;
    if upper < 0.0 {
        return 0.0;
    }
    let mut xs: Vec<f64> = f
        .grid
        .nodes()
        .iter()
        .copied()
        .take_while(|&x| x <= upper)
        .collect();
    if xs.is_empty() || *xs.last().unwrap() < upper - 1e-15 {
        xs.push(upper);
    }
    let vals: Vec<f64> = xs
        .iter()
        .map(|&x| forward_difference_unchecked(f, h, r, x))
        .collect();
    partition_norm(&xs, &vals, p)
}

pub(crate) fn golden_max(mut g: impl FnMut(f64) -> f64, lo: f64, hi: f64, iters: usize) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut a = lo;
    let mut b = hi;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = g(c);
    let mut fd = g(d);
    let mut best = g(lo).max(g(hi)).max(fc).max(fd);
    for _ in 0..iters {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = g(c);
            best = best.max(fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = g(d);
            best = best.max(fd);
        }
    }
    best
}

/// r-th modulus of smoothness omega_{r,p}(f, t): sup over 0 < h <= t of
/// the p-norm of the r-th forward difference restricted to the points
/// whose translates stay in [0, 1].
///
/// The sup is discretized over the nested ladder h = j * dx together
/// with the endpoint h = t itself, plus a golden-section refinement of
/// the leading grid spans and of the partial tail span when an exact
/// descriptor is available. The nested ladder keeps the result
/// non-decreasing in t up to the refinement resolution.
pub fn modulus_of_smoothness(f: &SampledFunction, r: usize, t: f64, p: PNorm) -> Result<f64> {
    if t <= 0.0 {
        return Err(Error::InvalidInput(format!("t must be positive, got {t}")));
    }
    if r == 0 {
        return Ok(norm(f, p));
    }
    let dx = f.grid.min_spacing();
    let hmax = t.min(1.0 / r as f64);
    let jmax = (hmax / dx + 1e-12).floor() as usize;
    // In the small-t regime every span is refined, so the tail up to
    // h = hmax can be included without breaking the ladder nesting that
    // keeps the result monotone in t. For larger t the ladder is dense
    // relative to t and is used as-is.
    let small_regime = jmax < MODULUS_REFINE_SPANS;
    let mut best = if small_regime {
        difference_norm(f, hmax, r, p)
    } else {
        0.0
    };
    for j in 1..=jmax {
        best = best.max(difference_norm(f, j as f64 * dx, r, p));
    }
    if f.exact.is_some() {
        for j in 1..=jmax.min(MODULUS_REFINE_SPANS) {
            let lo = if j == 1 { dx * 1e-3 } else { (j - 1) as f64 * dx };
            let hi = j as f64 * dx;
            best = best.max(golden_max(|h| difference_norm(f, h, r, p), lo, hi, 40));
        }
        if small_regime {
            // Partial tail span [jmax dx, hmax].
            let lo = if jmax == 0 { hmax * 1e-3 } else { jmax as f64 * dx };
            if hmax > lo {
                best = best.max(golden_max(|h| difference_norm(f, h, r, p), lo, hmax, 40));
            }
        }
    }
    Ok(best)
}

/// A semi-norm value together with the flag telling whether it came
/// from the finite-difference fallback.
#[derive(Debug, Clone, Copy)]
pub struct SeminormValue {
    pub value: f64,
    pub finite_difference: bool,
}

/// |f|_{p,r} = ||D^r f||_p. Uses the exact descriptor when it is
/// r-times differentiable; otherwise falls back to order-2 central
/// differences when the caller allows it.
pub fn seminorm(
    f: &SampledFunction,
    r: usize,
    p: PNorm,
    allow_finite_difference: bool,
) -> Result<SeminormValue> {
    if r == 0 {
        return Err(Error::InvalidInput("seminorm order r must be positive".into()));
    }
    if let Some(exact) = &f.exact {
        if r <= exact.derivative_order() {
            let vals: Vec<f64> = f
                .grid
                .nodes()
                .iter()
                .map(|&x| exact.eval_derivative(r, x).unwrap_or(0.0))
                .collect();
            return Ok(SeminormValue {
                value: partition_norm(f.grid.nodes(), &vals, p),
                finite_difference: false,
            });
        }
    }
    if !allow_finite_difference {
        return Err(Error::Capability(format!(
            "no exact {r}-times differentiable descriptor and finite differences not allowed"
        )));
    }
    if f.exact.is_some() {
        // Exact point evaluation is available, so a small central
        // difference step balances truncation against rounding.
        let h = f64::EPSILON.powf(1.0 / (r as f64 + 2.0));
        let half_span = r as f64 * h / 2.0;
        let vals: Vec<f64> = f
            .grid
            .nodes()
            .iter()
            .map(|&x| {
                let xc = x.clamp(half_span, 1.0 - half_span);
                let mut acc = 0.0;
                for l in 0..=r {
                    let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
                    acc += sign * binomial(r, l) * f.eval(xc + (r as f64 / 2.0 - l as f64) * h);
                }
                acc / h.powi(r as i32)
            })
            .collect();
        return Ok(SeminormValue {
            value: partition_norm(f.grid.nodes(), &vals, p),
            finite_difference: true,
        });
    }
    // Grid data only: r! times the r-th divided difference over r + 1
    // consecutive nodes approximates D^r f at the stencil center to
    // second order; the endpoint values come from linear extrapolation
    // of the first/last two centers.
    let xs = f.grid.nodes();
    let vs = &f.values;
    let n = xs.len();
    if n < r + 2 {
        return Err(Error::InvalidInput(format!(
            "grid with {n} nodes is too coarse for an order-{r} difference"
        )));
    }
    let rfact: f64 = (1..=r).map(|i| i as f64).product();
    let mut centers = Vec::with_capacity(n - r);
    let mut derivs = Vec::with_capacity(n - r);
    for i in 0..n - r {
        let mut table: Vec<f64> = vs[i..=i + r].to_vec();
        for level in 1..=r {
            for j in 0..=r - level {
                table[j] = (table[j + 1] - table[j]) / (xs[i + j + level] - xs[i + j]);
            }
        }
        centers.push(xs[i..=i + r].iter().sum::<f64>() / (r as f64 + 1.0));
        derivs.push(rfact * table[0]);
    }
    let extrapolate = |x: f64, c0: f64, v0: f64, c1: f64, v1: f64| -> f64 {
        v0 + (v1 - v0) * (x - c0) / (c1 - c0)
    };
    let m = derivs.len();
    let mut pts = Vec::with_capacity(m + 2);
    let mut vals = Vec::with_capacity(m + 2);
    if m >= 2 {
        pts.push(0.0);
        vals.push(extrapolate(0.0, centers[0], derivs[0], centers[1], derivs[1]));
    }
    pts.extend_from_slice(&centers);
    vals.extend_from_slice(&derivs);
    if m >= 2 {
        pts.push(1.0);
        vals.push(extrapolate(
            1.0,
            centers[m - 2],
            derivs[m - 2],
            centers[m - 1],
            derivs[m - 1],
        ));
    }
    Ok(SeminormValue {
        value: partition_norm(&pts, &vals, p),
        finite_difference: true,
    })
}

/// Upper estimate of the K-functional K_{r,p}(f, t^r): the minimum of
/// ||f - g||_p + t^r |g|_{p,r} over the given candidates, with the
/// index of the minimizing witness. The true infimum over all smooth g
/// can only be smaller.
pub fn k_functional_upper(
    f: &SampledFunction,
    r: usize,
    t: f64,
    p: PNorm,
    candidates: &[SampledFunction],
) -> Result<(f64, usize)> {
    if candidates.is_empty() {
        return Err(Error::InvalidInput("empty candidate list".into()));
    }
    let mut best = f64::INFINITY;
    let mut witness = 0;
    for (i, g) in candidates.iter().enumerate() {
        let sm = seminorm(g, r, p, true)?;
        let value = norm_of_difference(f, g, p) + t.powi(r as i32) * sm.value;
        if value < best {
            best = value;
            witness = i;
        }
    }
    Ok((best, witness))
}

/// Result of checking one two-sided inequality.
#[derive(Debug, Clone, Copy)]
pub struct BoundCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
}

/// Check omega_{r,p}(f, t) <= 2^r ||f - g||_p + d^{r/2} t^r |g|_{p,r}
/// with d = 1.
pub fn check_mos_kfunc_inequality(
    f: &SampledFunction,
    g: &SampledFunction,
    r: usize,
    t: f64,
    p: PNorm,
) -> Result<BoundCheck> {
    let lhs = modulus_of_smoothness(f, r, t, p)?;
    let sm = seminorm(g, r, p, true)?;
    let rhs = 2.0f64.powi(r as i32) * norm_of_difference(f, g, p)
        + DIMENSION.powf(r as f64 / 2.0) * t.powi(r as i32) * sm.value;
    let margin = rhs - lhs;
    Ok(BoundCheck {
        lhs,
        rhs,
        margin,
        holds: margin >= -1e-9,
    })
}
