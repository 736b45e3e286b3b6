//! Certificates for the lower-estimate inequalities: the range
//! semi-norm lemma, the main two-sided theorem, the uniform corollary
//! with its operator-adapted step delta, the four operator-specific
//! corollaries, and the abstract K-functional bound with a caller
//! supplied seminorm.

use crate::error::{Error, Result};
use crate::funcspace::{
    modulus_of_smoothness, norm, norm_of_difference, PNorm, SampledFunction, DIMENSION,
};
use crate::operators::{
    make_bernstein, make_kantorovich, make_integral_schoenberg, make_schoenberg,
    range_derivative_norm, FiniteRankOperator, RangeElement,
};
use crate::spectral::{eigendecompose, spectral_location_check};
use crate::splines::KnotSequence;
use serde::Serialize;

/// Slack absorbing quadrature and eigensolver noise.
pub const SLACK: f64 = 1e-9;

/// Which estimate of the range derivative norm N enters the constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RangeNormChoice {
    /// Use the analytic bound when one exists, else fall back to the
    /// numeric estimate.
    #[default]
    Analytic,
    /// Always use the numeric estimate (sharper delta).
    Numeric,
}

/// Options shared by the verifiers.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Spline constant the analytic Schoenberg-type bounds need.
    pub d_const: Option<f64>,
    pub range_norm: RangeNormChoice,
}

/// The quantities a bound is built from: order r, norm p, spectral gap
/// gamma, range derivative norm N with its provenance, dimension d = 1
/// and the derived step delta = ((1-gamma)/N)^(1/r).
#[derive(Debug, Clone)]
pub struct BoundParameters {
    pub r: usize,
    pub p: PNorm,
    pub gamma: f64,
    pub n_range: f64,
    pub n_provenance: &'static str,
    pub dimension: f64,
    pub delta: f64,
}

/// delta = ((1 - gamma) / N)^(1/r).
pub fn compute_delta(gamma: f64, n_range: f64, r: usize) -> Result<f64> {
    if !(0.0..1.0).contains(&gamma) {
        return Err(Error::InvalidInput(format!(
            "no spectral gap: gamma = {gamma} must lie in [0, 1)"
        )));
    }
    if n_range <= 0.0 || r == 0 {
        return Err(Error::InvalidInput(
            "need N > 0 and r >= 1 to form delta".into(),
        ));
    }
    Ok(((1.0 - gamma) / n_range).powf(1.0 / r as f64))
}

impl BoundParameters {
    pub fn for_operator(
        op: &FiniteRankOperator,
        r: usize,
        p: PNorm,
        opts: &VerifyOptions,
    ) -> Result<Self> {
        let spectrum = eigendecompose(&op.collocation_matrix())?;
        if !spectral_location_check(&spectrum) {
            return Err(Error::Computation(format!(
                "{}: spectrum leaves the unit ball minus {{1}}",
                op.name()
            )));
        }
        let rn = range_derivative_norm(op, r, opts.d_const)?;
        let (n_range, n_provenance) = match (opts.range_norm, rn.analytic) {
            (RangeNormChoice::Analytic, Some(a)) => (a, "analytic"),
            _ => (rn.numeric, "numeric"),
        };
        let delta = compute_delta(spectrum.gamma, n_range, r)?;
        Ok(Self {
            r,
            p,
            gamma: spectrum.gamma,
            n_range,
            n_provenance,
            dimension: DIMENSION,
            delta,
        })
    }
}

/// Intermediate quantities stored inside a certificate so it can be
/// re-derived without recomputation.
#[derive(Debug, Clone, Serialize)]
pub struct Intermediates {
    pub omega: Option<f64>,
    #[serde(rename = "seminorm_Tf")]
    pub seminorm_tf: Option<f64>,
    pub err_norm: f64,
    pub gamma: Option<f64>,
    #[serde(rename = "N")]
    pub n_range: Option<f64>,
    #[serde(rename = "N_provenance")]
    pub n_provenance: Option<String>,
}

/// A single certified inequality instance.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCertificate {
    pub inequality_id: String,
    pub operator: String,
    pub function: String,
    pub r: usize,
    pub p: String,
    pub t_or_delta: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
    /// Margin was negative but within the numerical slack.
    pub holds_with_slack: bool,
    pub intermediates: Intermediates,
}

#[allow(clippy::too_many_arguments)]
fn certificate(
    inequality_id: &str,
    operator: String,
    function: String,
    r: usize,
    p: PNorm,
    t_or_delta: Option<f64>,
    lhs: f64,
    rhs: f64,
    intermediates: Intermediates,
) -> BoundCertificate {
    let margin = rhs - lhs;
    BoundCertificate {
        inequality_id: inequality_id.to_string(),
        operator,
        function,
        r,
        p: p.to_string(),
        t_or_delta,
        lhs,
        rhs,
        margin,
        holds: margin >= -SLACK,
        holds_with_slack: margin < 0.0 && margin >= -SLACK,
        intermediates,
    }
}

/// ||D^r (Tf)||_p from the exact derivative of the range element.
fn range_seminorm(elem: &RangeElement, r: usize, p: PNorm, f: &SampledFunction) -> Result<f64> {
    if r > elem.basis().max_degree() {
        return Ok(0.0);
    }
    let dr = elem.derivative_n(r)?;
    let sampled = dr.to_sampled("range-derivative", f.grid().clone());
    Ok(norm(&sampled, p))
}

/// Semi-norm lemma: |Tf|_{p,r} <= (N / (1 - gamma)) ||Tf - f||_p.
pub fn verify_seminorm_lemma(
    op: &FiniteRankOperator,
    f: &SampledFunction,
    r: usize,
    p: PNorm,
    opts: &VerifyOptions,
) -> Result<BoundCertificate> {
    let params = BoundParameters::for_operator(op, r, p, opts)?;
    let (elem, tf) = op.apply(f)?;
    let lhs = range_seminorm(&elem, r, p, f)?;
    let err = norm_of_difference(&tf, f, p);
    let rhs = params.n_range / (1.0 - params.gamma) * err;
    Ok(certificate(
        "seminorm-lemma",
        op.name(),
        f.label().to_string(),
        r,
        p,
        None,
        lhs,
        rhs,
        Intermediates {
            omega: None,
            seminorm_tf: Some(lhs),
            err_norm: err,
            gamma: Some(params.gamma),
            n_range: Some(params.n_range),
            n_provenance: Some(params.n_provenance.to_string()),
        },
    ))
}

/// Main theorem, both halves:
/// omega_{r,p}(f, t) <= (2^r + d^{r/2} t^r N/(1-gamma)) ||Tf - f||_p and
/// K-upper(f, t^r; g = Tf)  <= (1 + t^r N/(1-gamma)) ||Tf - f||_p.
pub fn verify_main_theorem(
    op: &FiniteRankOperator,
    f: &SampledFunction,
    r: usize,
    t: f64,
    p: PNorm,
    opts: &VerifyOptions,
) -> Result<Vec<BoundCertificate>> {
    if t <= 0.0 {
        return Err(Error::InvalidInput(format!("t must be positive, got {t}")));
    }
    let params = BoundParameters::for_operator(op, r, p, opts)?;
    let (elem, tf) = op.apply(f)?;
    let err = norm_of_difference(&tf, f, p);
    let sem_tf = range_seminorm(&elem, r, p, f)?;
    let factor = params.n_range / (1.0 - params.gamma);
    let tr = t.powi(r as i32);

    let omega = modulus_of_smoothness(f, r, t, p)?;
    let rhs_omega = (2.0f64.powi(r as i32) + params.dimension.powf(r as f64 / 2.0) * tr * factor) * err;
    let inter = |omega: Option<f64>| Intermediates {
        omega,
        seminorm_tf: Some(sem_tf),
        err_norm: err,
        gamma: Some(params.gamma),
        n_range: Some(params.n_range),
        n_provenance: Some(params.n_provenance.to_string()),
    };
    let omega_cert = certificate(
        "main-theorem-omega",
        op.name(),
        f.label().to_string(),
        r,
        p,
        Some(t),
        omega,
        rhs_omega,
        inter(Some(omega)),
    );

    // K-functional upper bound with the explicit witness g = Tf.
    let k_upper = err + tr * sem_tf;
    let rhs_k = (1.0 + tr * factor) * err;
    let k_cert = certificate(
        "main-theorem-k",
        op.name(),
        f.label().to_string(),
        r,
        p,
        Some(t),
        k_upper,
        rhs_k,
        inter(None),
    );
    Ok(vec![omega_cert, k_cert])
}

/// Uniform corollary at the operator-adapted step delta:
/// omega_{r,p}(f, delta) <= (2^r + d^{r/2}) ||Tf - f||_p and
/// ||f - Tf|| + delta^r |Tf| <= 2 ||Tf - f||_p.
pub fn verify_uniform_corollary(
    op: &FiniteRankOperator,
    f: &SampledFunction,
    r: usize,
    p: PNorm,
    opts: &VerifyOptions,
) -> Result<Vec<BoundCertificate>> {
    let params = BoundParameters::for_operator(op, r, p, opts)?;
    let (elem, tf) = op.apply(f)?;
    let err = norm_of_difference(&tf, f, p);
    let sem_tf = range_seminorm(&elem, r, p, f)?;
    let delta = params.delta;

    let omega = modulus_of_smoothness(f, r, delta, p)?;
    let rhs_omega = (2.0f64.powi(r as i32) + params.dimension.powf(r as f64 / 2.0)) * err;
    let inter = |omega: Option<f64>| Intermediates {
        omega,
        seminorm_tf: Some(sem_tf),
        err_norm: err,
        gamma: Some(params.gamma),
        n_range: Some(params.n_range),
        n_provenance: Some(params.n_provenance.to_string()),
    };
    let omega_cert = certificate(
        "uniform-corollary-omega",
        op.name(),
        f.label().to_string(),
        r,
        p,
        Some(delta),
        omega,
        rhs_omega,
        inter(Some(omega)),
    );
    let k_upper = err + delta.powi(r as i32) * sem_tf;
    let k_cert = certificate(
        "uniform-corollary-k",
        op.name(),
        f.label().to_string(),
        r,
        p,
        Some(delta),
        k_upper,
        2.0 * err,
        inter(None),
    );
    Ok(vec![omega_cert, k_cert])
}

/// Bernstein corollary: (1/8) omega_2(f, n^{-3/2}) <= ||B_n f - f||_inf.
pub fn verify_bernstein_corollary(f: &SampledFunction, n: usize) -> Result<BoundCertificate> {
    if n < 2 {
        return Err(Error::InvalidInput("Bernstein corollary needs n >= 2".into()));
    }
    let op = make_bernstein(n)?;
    let (_, tf) = op.apply(f)?;
    let p = PNorm::Infinity;
    let err = norm_of_difference(&tf, f, p);
    let t = (n as f64).powf(-1.5);
    let omega = modulus_of_smoothness(f, 2, t, p)?;
    Ok(certificate(
        "bernstein-corollary",
        op.name(),
        f.label().to_string(),
        2,
        p,
        Some(t),
        omega / 8.0,
        err,
        Intermediates {
            omega: Some(omega),
            seminorm_tf: None,
            err_norm: err,
            gamma: Some((n as f64 - 1.0) / n as f64),
            n_range: None,
            n_provenance: None,
        },
    ))
}

/// Kantorovic corollary:
/// (1/6) omega_{1,p}(f, 1/(n^3 + n^2)) <= ||K_n f - f||_p.
pub fn verify_kantorovich_corollary(
    f: &SampledFunction,
    n: usize,
    p: PNorm,
) -> Result<BoundCertificate> {
    if n < 1 {
        return Err(Error::InvalidInput("Kantorovic corollary needs n >= 1".into()));
    }
    let op = make_kantorovich(n)?;
    let (_, tf) = op.apply(f)?;
    let err = norm_of_difference(&tf, f, p);
    let nf = n as f64;
    let t = 1.0 / (nf.powi(3) + nf.powi(2));
    let omega = modulus_of_smoothness(f, 1, t, p)?;
    Ok(certificate(
        "kantorovich-corollary",
        op.name(),
        f.label().to_string(),
        1,
        p,
        Some(t),
        omega / 6.0,
        err,
        Intermediates {
            omega: Some(omega),
            seminorm_tf: None,
            err_norm: err,
            gamma: None,
            n_range: None,
            n_provenance: None,
        },
    ))
}

/// Schoenberg corollary, k > r >= 2:
/// (1/2^{r+1}) omega_r(f, t) <= ||f - S f||_inf with
/// t = (|mesh|_min / k) ((1 - gamma) / d_k)^{1/r}.
pub fn verify_schoenberg_corollary(
    f: &SampledFunction,
    seq: &KnotSequence,
    r: usize,
    d_k: f64,
) -> Result<BoundCertificate> {
    let k = seq.degree();
    if !(r >= 2 && k > r) {
        return Err(Error::InvalidInput(format!(
            "Schoenberg corollary needs k > r >= 2, got k = {k}, r = {r}"
        )));
    }
    if d_k <= 0.0 {
        return Err(Error::InvalidInput("d_k must be positive".into()));
    }
    let op = make_schoenberg(seq.clone())?;
    let spectrum = eigendecompose(&op.collocation_matrix())?;
    let gamma = spectrum.gamma;
    let t = (seq.min_mesh_gauge() / k as f64) * ((1.0 - gamma) / d_k).powf(1.0 / r as f64);
    let (_, tf) = op.apply(f)?;
    let p = PNorm::Infinity;
    let err = norm_of_difference(&tf, f, p);
    let omega = modulus_of_smoothness(f, r, t, p)?;
    Ok(certificate(
        "schoenberg-corollary",
        op.name(),
        f.label().to_string(),
        r,
        p,
        Some(t),
        omega / 2.0f64.powi(r as i32 + 1),
        err,
        Intermediates {
            omega: Some(omega),
            seminorm_tf: None,
            err_norm: err,
            gamma: Some(gamma),
            n_range: Some(d_k * (k as f64 / seq.min_mesh_gauge()).powi(r as i32)),
            n_provenance: Some("analytic".to_string()),
        },
    ))
}

/// Integral Schoenberg corollary:
/// (1/6) omega_{1,p}(f, t) <= ||V f - f||_p with
/// t = (|mesh|^2_min / (k+1)^2) (1 - gamma) / d_{k+1}, falling back to
/// t = (1 - gamma) / N_numeric when d_{k+1} is not supplied.
pub fn verify_integral_schoenberg_corollary(
    f: &SampledFunction,
    seq: &KnotSequence,
    p: PNorm,
    d_k1: Option<f64>,
) -> Result<BoundCertificate> {
    let k = seq.degree();
    let op = make_integral_schoenberg(seq.clone())?;
    let spectrum = eigendecompose(&op.collocation_matrix())?;
    let gamma = spectrum.gamma;
    let (t, n_range, provenance) = match d_k1 {
        Some(d) => {
            if d <= 0.0 {
                return Err(Error::InvalidInput("d_{k+1} must be positive".into()));
            }
            let gauge = seq.min_mesh_gauge();
            let t = gauge * gauge / ((k as f64 + 1.0) * (k as f64 + 1.0)) * (1.0 - gamma) / d;
            let n = (2.0 * (k as f64 + 1.0) / gauge).powi(2) * d;
            (t, n, "analytic")
        }
        None => {
            let rn = range_derivative_norm(&op, 1, None)?;
            ((1.0 - gamma) / rn.numeric, rn.numeric, "numeric")
        }
    };
    let (_, tf) = op.apply(f)?;
    let err = norm_of_difference(&tf, f, p);
    let omega = modulus_of_smoothness(f, 1, t, p)?;
    Ok(certificate(
        "integral-schoenberg-corollary",
        op.name(),
        f.label().to_string(),
        1,
        p,
        Some(t),
        omega / 6.0,
        err,
        Intermediates {
            omega: Some(omega),
            seminorm_tf: None,
            err_norm: err,
            gamma: Some(gamma),
            n_range: Some(n_range),
            n_provenance: Some(provenance.to_string()),
        },
    ))
}

/// Abstract K-functional bound for a caller-supplied seminorm on the
/// operator range:
/// (1/2) min_g (||f - g||_inf + delta^r seminorm(g)) <= ||Tf - f||_inf
/// with delta^r = (1 - gamma) / N_cb where N_cb estimates the sup of
/// the seminorm over the unit ball of im(T).
///
/// The seminorm must annihilate ker(T - I); this is checked on a basis
/// of the fixed space before anything else.
pub fn verify_abstract_k_bound(
    op: &FiniteRankOperator,
    f: &SampledFunction,
    seminorm_cb: &dyn Fn(&RangeElement) -> Result<f64>,
    r: usize,
) -> Result<BoundCertificate> {
    for fixed in op.fixed_space_elements() {
        let v = seminorm_cb(&fixed)?;
        if v.abs() > 1e-8 {
            return Err(Error::InvalidInput(format!(
                "seminorm does not annihilate the fixed space (value {v})"
            )));
        }
    }
    let spectrum = eigendecompose(&op.collocation_matrix())?;
    if !spectral_location_check(&spectrum) {
        return Err(Error::Computation(format!(
            "{}: spectrum leaves the unit ball minus {{1}}",
            op.name()
        )));
    }
    let gamma = spectrum.gamma;
    let n_cb = seminorm_sup_ratio(op, seminorm_cb)?;
    if n_cb <= 0.0 {
        return Err(Error::Computation(
            "seminorm vanishes on the sampled unit ball of the range".into(),
        ));
    }
    let delta_r = (1.0 - gamma) / n_cb;

    let p = PNorm::Infinity;
    let (tf_elem, tf) = op.apply(f)?;
    let err = norm_of_difference(&tf, f, p);
    // Candidate witnesses g = Tf and g = T(Tf).
    let (ttf_elem, ttf) = op.apply(&tf)?;
    let mut best = f64::INFINITY;
    let mut sem_tf = 0.0;
    for (elem, sampled) in [(&tf_elem, &tf), (&ttf_elem, &ttf)] {
        let sem = seminorm_cb(elem)?;
        if std::ptr::eq(elem, &tf_elem) {
            sem_tf = sem;
        }
        let val = norm_of_difference(f, sampled, p) + delta_r * sem;
        best = best.min(val);
    }
    Ok(certificate(
        "abstract-k-bound",
        op.name(),
        f.label().to_string(),
        r,
        p,
        Some(delta_r.powf(1.0 / r as f64)),
        0.5 * best,
        err,
        Intermediates {
            omega: None,
            seminorm_tf: Some(sem_tf),
            err_norm: err,
            gamma: Some(gamma),
            n_range: Some(n_cb),
            n_provenance: Some("numeric".to_string()),
        },
    ))
}

/// Deterministic estimate of sup { seminorm(g) : g in im(T),
/// ||g||_inf <= 1 } over coordinate elements, sign patterns and seeded
/// random coefficient vectors, each normalized to unit sup norm.
fn seminorm_sup_ratio(
    op: &FiniteRankOperator,
    seminorm_cb: &dyn Fn(&RangeElement) -> Result<f64>,
) -> Result<f64> {
    use rand::{Rng, SeedableRng};
    let m = op.rank();
    let mut candidates: Vec<Vec<f64>> = Vec::new();
    for j in 0..m {
        let mut c = vec![0.0; m];
        c[j] = 1.0;
        candidates.push(c);
    }
    candidates.push((0..m).map(|j| if j % 2 == 0 { 1.0 } else { -1.0 }).collect());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..64 {
        candidates.push((0..m).map(|_| rng.gen_range(-1.0..=1.0)).collect());
        candidates.push((0..m).map(|_| if rng.gen::<bool>() { 1.0 } else { -1.0 }).collect());
    }
    let grid = crate::funcspace::Grid::default_grid();
    let mut best = 0.0f64;
    for c in candidates {
        let elem = RangeElement::new(op.basis().clone(), c)?;
        let sup = grid
            .nodes()
            .iter()
            .map(|&x| elem.eval(x).abs())
            .fold(0.0f64, f64::max);
        if sup <= 0.0 {
            continue;
        }
        let ratio = seminorm_cb(&elem)? / sup;
        best = best.max(ratio);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcspace::{ExactFn, Grid};
    use approx::assert_abs_diff_eq;

    fn sampled(label: &str, e: ExactFn) -> SampledFunction {
        SampledFunction::from_exact(label, e, Grid::uniform(1025).unwrap())
    }

    fn x_squared() -> SampledFunction {
        sampled("x^2", ExactFn::Polynomial(vec![0.0, 0.0, 1.0]))
    }

    fn linear() -> SampledFunction {
        sampled("x", ExactFn::Polynomial(vec![0.0, 1.0]))
    }

    #[test]
    fn delta_examples() {
        assert_abs_diff_eq!(compute_delta(0.0, 1.0, 1).unwrap(), 1.0);
        for n in [4usize, 8] {
            let nf = n as f64;
            let gamma = (nf - 1.0) / nf;
            let big_n = 4.0 * nf * (nf - 1.0);
            let expect = (1.0 / (4.0 * nf * nf * (nf - 1.0))).sqrt();
            assert_abs_diff_eq!(compute_delta(gamma, big_n, 2).unwrap(), expect, epsilon = 1e-14);
        }
        // gamma -> 1 drives delta -> 0.
        assert!(compute_delta(0.999_999, 1.0, 1).unwrap() < 1e-5);
        assert!(compute_delta(1.0, 1.0, 1).is_err());
    }

    #[test]
    fn seminorm_lemma_examples() {
        // Fixed point: both sides vanish.
        let op = make_bernstein(6).unwrap();
        let cert = verify_seminorm_lemma(&op, &linear(), 2, PNorm::Infinity, &VerifyOptions::default())
            .unwrap();
        assert!(cert.holds);
        assert!(cert.lhs.abs() <= 1e-9 && cert.rhs.abs() <= 1e-9);

        // f = x^2: |B_n x^2|_2 = 2(n-1)/n and ||B_n x^2 - x^2|| = 1/(4n).
        for n in [4usize, 8, 16] {
            let op = make_bernstein(n).unwrap();
            let cert =
                verify_seminorm_lemma(&op, &x_squared(), 2, PNorm::Infinity, &VerifyOptions::default())
                    .unwrap();
            let nf = n as f64;
            assert_abs_diff_eq!(cert.lhs, 2.0 * (nf - 1.0) / nf, epsilon = 1e-9);
            assert_abs_diff_eq!(cert.intermediates.err_norm, 1.0 / (4.0 * nf), epsilon = 1e-9);
            assert!(cert.holds && cert.margin > 0.0, "n={n}");
        }

        // Spline operator on a kink function.
        let seq = KnotSequence::uniform(3, 8).unwrap();
        let op = make_schoenberg(seq).unwrap();
        let f = sampled("|x-1/2|", ExactFn::Abs { center: 0.5 });
        let opts = VerifyOptions {
            range_norm: RangeNormChoice::Numeric,
            ..Default::default()
        };
        let cert = verify_seminorm_lemma(&op, &f, 2, PNorm::Infinity, &opts).unwrap();
        assert!(cert.holds, "margin {}", cert.margin);
    }

    #[test]
    fn main_theorem_examples() {
        let op = make_bernstein(8).unwrap();
        for t in [0.05, 0.1, 0.2] {
            let certs =
                verify_main_theorem(&op, &x_squared(), 2, t, PNorm::Infinity, &VerifyOptions::default())
                    .unwrap();
            assert_eq!(certs.len(), 2);
            for c in &certs {
                assert!(c.holds, "{} t={t}: margin {}", c.inequality_id, c.margin);
            }
        }

        let op = make_kantorovich(8).unwrap();
        let f = sampled("sin(pi x)", ExactFn::sin_pi());
        let certs =
            verify_main_theorem(&op, &f, 1, 0.1, PNorm::Finite(1.0), &VerifyOptions::default())
                .unwrap();
        for c in &certs {
            assert!(c.holds, "{}: margin {}", c.inequality_id, c.margin);
        }

        // Fixed point: everything vanishes.
        let op = make_bernstein(5).unwrap();
        let certs =
            verify_main_theorem(&op, &linear(), 2, 0.1, PNorm::Infinity, &VerifyOptions::default())
                .unwrap();
        for c in &certs {
            assert!(c.holds && c.lhs.abs() <= 1e-9);
        }
    }

    #[test]
    fn uniform_corollary_and_lemma_implication() {
        // The K-part follows from the lemma certificate with identical
        // data; assert the implication numerically.
        let corpus = [
            x_squared(),
            sampled("sin(pi x)", ExactFn::sin_pi()),
            sampled("|x-1/2|", ExactFn::Abs { center: 0.5 }),
        ];
        for n in [4usize, 8, 16] {
            let op = make_bernstein(n).unwrap();
            for f in &corpus {
                let lemma =
                    verify_seminorm_lemma(&op, f, 2, PNorm::Infinity, &VerifyOptions::default())
                        .unwrap();
                let certs =
                    verify_uniform_corollary(&op, f, 2, PNorm::Infinity, &VerifyOptions::default())
                        .unwrap();
                let (omega_cert, k_cert) = (&certs[0], &certs[1]);
                assert!(omega_cert.holds, "omega n={n} {}", f.label());
                assert!(k_cert.holds, "k n={n} {}", f.label());
                if lemma.holds {
                    // err + delta^r |Tf| <= 2 err given |Tf| <= N/(1-gamma) err
                    // and delta^r = (1-gamma)/N.
                    assert!(k_cert.lhs <= 2.0 * k_cert.intermediates.err_norm + 1e-9);
                }
                // Realized constant of the omega part is 2^r + 1.
                assert_abs_diff_eq!(
                    omega_cert.rhs,
                    5.0 * omega_cert.intermediates.err_norm,
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn bernstein_corollary_examples() {
        let cert = verify_bernstein_corollary(&linear(), 8).unwrap();
        assert!(cert.holds && cert.lhs.abs() <= 1e-10);

        let cert = verify_bernstein_corollary(&x_squared(), 16).unwrap();
        // omega_2(x^2, t) = 2 t^2 -> LHS = 2 n^{-3} / 8.
        assert_abs_diff_eq!(cert.lhs, 1.0 / 16384.0, epsilon = 1e-9);
        assert_abs_diff_eq!(cert.rhs, 1.0 / 64.0, epsilon = 1e-9);
        assert!(cert.holds);

        let f = sampled("|x-1/2|", ExactFn::Abs { center: 0.5 });
        let mut last_margin = f64::NEG_INFINITY;
        for n in [4usize, 8, 16, 32, 64] {
            let cert = verify_bernstein_corollary(&f, n).unwrap();
            assert!(cert.holds, "n={n}: margin {}", cert.margin);
            let _ = last_margin;
            last_margin = cert.margin;
        }
        assert!(verify_bernstein_corollary(&linear(), 1).is_err());
    }

    #[test]
    fn kantorovich_corollary_examples() {
        let c = sampled("1", ExactFn::constant(1.0));
        let cert = verify_kantorovich_corollary(&c, 4, PNorm::Infinity).unwrap();
        assert!(cert.holds && cert.lhs.abs() <= 1e-12 && cert.rhs.abs() <= 1e-12);

        // f = x: RHS = 1/(2(n+1)), LHS = (1/6)/(n^3+n^2).
        let cert = verify_kantorovich_corollary(&linear(), 8, PNorm::Infinity).unwrap();
        assert_abs_diff_eq!(cert.rhs, 1.0 / 18.0, epsilon = 1e-9);
        assert_abs_diff_eq!(cert.lhs, 1.0 / (6.0 * 576.0), epsilon = 1e-12);
        assert!(cert.holds);

        for p in [PNorm::Finite(1.0), PNorm::Infinity] {
            for f in [x_squared(), sampled("sqrt", ExactFn::Sqrt)] {
                let cert = verify_kantorovich_corollary(&f, 6, p).unwrap();
                assert!(cert.holds, "{} p={p}: margin {}", f.label(), cert.margin);
            }
        }
        assert!(verify_kantorovich_corollary(&linear(), 0, PNorm::Infinity).is_err());
    }

    #[test]
    fn schoenberg_corollary_examples() {
        let seq = KnotSequence::uniform(3, 8).unwrap();
        let cert = verify_schoenberg_corollary(&linear(), &seq, 2, 1.0).unwrap();
        assert!(cert.holds && cert.lhs.abs() <= 1e-10);

        let cert = verify_schoenberg_corollary(&x_squared(), &seq, 2, 1.0).unwrap();
        assert!(cert.holds, "margin {}", cert.margin);

        // t decreases as the mesh refines.
        let mut last_t = f64::INFINITY;
        for n in [4usize, 8, 16] {
            let seq = KnotSequence::uniform(3, n).unwrap();
            let cert = verify_schoenberg_corollary(&x_squared(), &seq, 2, 1.0).unwrap();
            let t = cert.t_or_delta.unwrap();
            assert!(t < last_t, "n={n}");
            last_t = t;
        }

        // k <= r rejected.
        let seq = KnotSequence::uniform(2, 4).unwrap();
        assert!(verify_schoenberg_corollary(&x_squared(), &seq, 2, 1.0).is_err());
    }

    #[test]
    fn integral_schoenberg_corollary_examples() {
        let seq = KnotSequence::uniform(2, 6).unwrap();
        let c = sampled("1", ExactFn::constant(1.0));
        let cert = verify_integral_schoenberg_corollary(&c, &seq, PNorm::Infinity, Some(1.0)).unwrap();
        assert!(cert.holds && cert.lhs.abs() <= 1e-12);

        let cert =
            verify_integral_schoenberg_corollary(&linear(), &seq, PNorm::Infinity, Some(1.0)).unwrap();
        assert!(cert.holds, "margin {}", cert.margin);

        // Numeric fallback when d_{k+1} is not supplied.
        for f in [linear(), x_squared(), sampled("sin(pi x)", ExactFn::sin_pi())] {
            for p in [PNorm::Finite(1.0), PNorm::Infinity] {
                let cert = verify_integral_schoenberg_corollary(&f, &seq, p, None).unwrap();
                assert!(cert.holds, "{} p={p}: margin {}", f.label(), cert.margin);
                assert_eq!(cert.intermediates.n_provenance.as_deref(), Some("numeric"));
            }
        }
    }

    #[test]
    fn abstract_k_bound_examples() {
        // Derivative-order-2 seminorm on the Bernstein range reduces to
        // the K-part data of the uniform corollary.
        let op = make_bernstein(6).unwrap();
        let grid = Grid::default_grid();
        let sem = |elem: &RangeElement| -> Result<f64> {
            let d2 = elem.derivative_n(2)?;
            Ok(grid
                .nodes()
                .iter()
                .map(|&x| d2.eval(x).abs())
                .fold(0.0f64, f64::max))
        };
        let cert = verify_abstract_k_bound(&op, &x_squared(), &sem, 2).unwrap();
        assert!(cert.holds, "margin {}", cert.margin);

        // Fixed point.
        let cert = verify_abstract_k_bound(&op, &linear(), &sem, 2).unwrap();
        assert!(cert.holds && cert.lhs.abs() <= 1e-9);

        // Total variation of the first derivative on a cubic spline range.
        let seq = KnotSequence::uniform(3, 6).unwrap();
        let op = make_schoenberg(seq).unwrap();
        let tv = |elem: &RangeElement| -> Result<f64> {
            let d1 = elem.derivative()?;
            let nodes = Grid::default_grid();
            let mut total = 0.0;
            let mut prev = d1.eval(0.0);
            for &x in &nodes.nodes()[1..] {
                let v = d1.eval(x);
                total += (v - prev).abs();
                prev = v;
            }
            Ok(total)
        };
        let f = sampled("sin(pi x)", ExactFn::sin_pi());
        let cert = verify_abstract_k_bound(&op, &f, &tv, 1).unwrap();
        assert!(cert.holds, "margin {}", cert.margin);

        // A seminorm that fails annihilation is rejected.
        let bad = |elem: &RangeElement| -> Result<f64> { Ok(elem.eval(0.5).abs()) };
        assert!(verify_abstract_k_bound(&op, &f, &bad, 1).is_err());
    }

    #[test]
    fn scaling_invariance() {
        let op = make_bernstein(8).unwrap();
        let f = sampled("sin(pi x)", ExactFn::sin_pi());
        for c in [0.5, 3.0] {
            let fc = f.scaled(c);
            let base =
                verify_seminorm_lemma(&op, &f, 2, PNorm::Infinity, &VerifyOptions::default()).unwrap();
            let scaled =
                verify_seminorm_lemma(&op, &fc, 2, PNorm::Infinity, &VerifyOptions::default()).unwrap();
            assert_abs_diff_eq!(scaled.margin, c * base.margin, epsilon = 1e-10);

            let base = verify_bernstein_corollary(&f, 8).unwrap();
            let scaled = verify_bernstein_corollary(&fc, 8).unwrap();
            assert_abs_diff_eq!(scaled.margin, c * base.margin, epsilon = 1e-10);
        }
    }

    #[test]
    fn certificates_are_self_contained() {
        let op = make_bernstein(8).unwrap();
        let cert =
            verify_seminorm_lemma(&op, &x_squared(), 2, PNorm::Infinity, &VerifyOptions::default())
                .unwrap();
        // Recompute RHS from stored intermediates: bit-identical margin.
        let rhs = cert.intermediates.n_range.unwrap() / (1.0 - cert.intermediates.gamma.unwrap())
            * cert.intermediates.err_norm;
        assert_eq!(rhs, cert.rhs);
        assert_eq!(cert.margin, cert.rhs - cert.lhs);
        assert_eq!(cert.holds, cert.margin >= -SLACK);
    }
}
