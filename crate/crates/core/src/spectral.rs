//! Dense spectra of collocation matrices, the spectral gap, the
//! fixed-point projection reached by the operator iterates, geometric
//! decay traces, and total-positivity / oscillatory classification with
//! the Schoenberg eigenvalue-pattern check.

use crate::error::{Error, Result};
use crate::operators::make_schoenberg;
use crate::splines::KnotSequence;
use itertools::Itertools;
use nalgebra::{Complex, DMatrix};
use serde::Serialize;

/// Absolute tolerance for identifying an eigenvalue with 1.
pub const UNIT_EIGEN_TOL: f64 = 1e-8;
/// Default tolerance for minor non-negativity.
pub const TP_TOL: f64 = 1e-10;

/// Eigenvalues sorted by descending modulus, the multiplicity of the
/// eigenvalue 1, and the spectral gap gamma (largest modulus among the
/// eigenvalues not identified with 1).
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<Complex<f64>>,
    pub unit_multiplicity: usize,
    pub gamma: f64,
}

/// Eigendecomposition of a square real matrix (eigenvalues only).
pub fn eigendecompose(a: &DMatrix<f64>) -> Result<Spectrum> {
    if a.nrows() != a.ncols() {
        return Err(Error::InvalidInput(format!(
            "matrix is {}x{}, expected square",
            a.nrows(),
            a.ncols()
        )));
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    let mut ev: Vec<Complex<f64>> = a.clone().complex_eigenvalues().iter().copied().collect();
    ev.sort_by(|x, y| {
        y.norm()
            .partial_cmp(&x.norm())
            .unwrap()
            .then(y.re.partial_cmp(&x.re).unwrap())
            .then(y.im.partial_cmp(&x.im).unwrap())
    });
    let is_unit = |l: &Complex<f64>| (l - Complex::new(1.0, 0.0)).norm() <= UNIT_EIGEN_TOL;
    let unit_multiplicity = ev.iter().filter(|l| is_unit(l)).count();
    let gamma = ev
        .iter()
        .filter(|l| !is_unit(l))
        .map(|l| l.norm())
        .fold(0.0f64, f64::max);
    Ok(Spectrum {
        eigenvalues: ev,
        unit_multiplicity,
        gamma,
    })
}

/// True iff the spectrum lies in the open unit ball together with the
/// point 1 (the convergence criterion for the iterates).
pub fn spectral_location_check(s: &Spectrum) -> bool {
    s.eigenvalues.iter().all(|l| {
        l.norm() < 1.0 - UNIT_EIGEN_TOL || (l - Complex::new(1.0, 0.0)).norm() <= UNIT_EIGEN_TOL
    })
}

/// The limit projection of the matrix iterates.
#[derive(Debug, Clone)]
pub struct ProjectionMatrix {
    pub matrix: DMatrix<f64>,
    pub rank: usize,
}

fn null_space_basis(a: &DMatrix<f64>, dim: usize) -> DMatrix<f64> {
    let n = a.ncols();
    let svd = a.clone().svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    // Smallest singular values come last; their right singular vectors
    // span the (numerical) null space.
    let mut basis = DMatrix::zeros(n, dim);
    for j in 0..dim {
        let row = v_t.row(n - dim + j);
        for i in 0..n {
            basis[(i, j)] = row[i];
        }
    }
    basis
}

/// The projection onto ker(A - I) along the complementary spectral
/// subspace: Pi = R (L^T R)^{-1} L^T with R, L the right/left null
/// spaces of A - I. This is the limit of A^m when the spectral location
/// check passes.
pub fn fixed_point_projection(a: &DMatrix<f64>) -> Result<ProjectionMatrix> {
    let s = eigendecompose(a)?;
    if !spectral_location_check(&s) {
        return Err(Error::Computation(
            "spectrum leaves the unit ball minus {1}; iterates do not converge".into(),
        ));
    }
    let n = a.nrows();
    let rank = s.unit_multiplicity;
    if rank == 0 {
        return Ok(ProjectionMatrix {
            matrix: DMatrix::zeros(n, n),
            rank: 0,
        });
    }
    let shifted = a - DMatrix::identity(n, n);
    let right = null_space_basis(&shifted, rank);
    let left = null_space_basis(&shifted.transpose(), rank);
    let cross = left.transpose() * &right;
    let inv = cross.try_inverse().ok_or_else(|| {
        Error::Computation("left/right fixed spaces are numerically degenerate".into())
    })?;
    let pi = &right * inv * left.transpose();
    let check = |m: &DMatrix<f64>| m.iter().map(|v| v.abs()).fold(0.0f64, f64::max);
    if check(&(&pi * &pi - &pi)) > 1e-8
        || check(&(a * &pi - &pi)) > 1e-8
        || check(&(&pi * a - &pi)) > 1e-8
    {
        return Err(Error::Computation(
            "computed projection fails its consistency checks".into(),
        ));
    }
    Ok(ProjectionMatrix { matrix: pi, rank })
}

/// Decay of the iterates toward the projection: rho_m = ||A^m - Pi||
/// in the induced infinity norm, with a geometric least-squares fit and
/// the empirical verdict on the bound rho_m <= gamma^(m-1).
#[derive(Debug, Clone)]
pub struct DecayTrace {
    /// rho_m for m = 1 ..= m_max.
    pub rhos: Vec<f64>,
    pub c_fit: f64,
    pub fitted_rate: f64,
    pub gamma: f64,
    /// Whether rho_m <= gamma^(m-1) held for every m.
    pub paper_bound_holds: bool,
}

fn inf_norm(a: &DMatrix<f64>) -> f64 {
    (0..a.nrows())
        .map(|i| a.row(i).iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0f64, f64::max)
}

pub fn iterate_decay(a: &DMatrix<f64>, pi: &ProjectionMatrix, m_max: usize) -> Result<DecayTrace> {
    if m_max == 0 {
        return Err(Error::InvalidInput("m_max must be >= 1".into()));
    }
    let s = eigendecompose(a)?;
    let gamma = s.gamma;
    let mut rhos = Vec::with_capacity(m_max);
    let mut power = a.clone();
    for _ in 0..m_max {
        if power.iter().any(|v| !v.is_finite()) {
            return Err(Error::Computation("overflow while forming matrix powers".into()));
        }
        rhos.push(inf_norm(&(&power - &pi.matrix)));
        power = &power * a;
    }
    // Geometric fit log rho_m = log C + m log rate over the tail after a
    // burn-in, ignoring values at the numerical floor.
    let floor = 1e-13 * rhos[0].max(1.0);
    // Fit window starts at m = 5.
    let burn_in = if m_max > 8 { 4 } else { 0 };
    let pts: Vec<(f64, f64)> = rhos
        .iter()
        .enumerate()
        .skip(burn_in)
        .filter(|(_, &r)| r > floor)
        .map(|(i, &r)| ((i + 1) as f64, r.ln()))
        .collect();
    let (c_fit, fitted_rate) = if pts.len() >= 2 {
        let n = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        let intercept = (sy - slope * sx) / n;
        (intercept.exp(), slope.exp())
    } else {
        (0.0, 0.0)
    };
    let paper_bound_holds = rhos.iter().enumerate().all(|(i, &r)| {
        let m = (i + 1) as f64;
        r <= gamma.powf(m - 1.0) + 1e-9
    });
    Ok(DecayTrace {
        rhos,
        c_fit,
        fitted_rate,
        gamma,
        paper_bound_holds,
    })
}

/// How minor non-negativity was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinorMethod {
    Exhaustive,
    EliminationBased,
}

/// Verdict of the total-positivity test.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TPVerdict {
    pub holds: bool,
    pub min_minor: f64,
    pub method: MinorMethod,
}

/// All minors of all orders for matrices of size <= 10, otherwise a
/// Neville-elimination test (pivots and multipliers of A and A^T must
/// stay non-negative).
pub fn is_totally_positive(a: &DMatrix<f64>, tol: f64) -> TPVerdict {
    let n = a.nrows().min(a.ncols());
    if a.nrows() <= 10 && a.ncols() <= 10 {
        let mut min_minor = f64::INFINITY;
        for order in 1..=n {
            for rows in (0..a.nrows()).combinations(order) {
                for cols in (0..a.ncols()).combinations(order) {
                    let sub = DMatrix::from_fn(order, order, |i, j| a[(rows[i], cols[j])]);
                    let det = sub.determinant();
                    if det < min_minor {
                        min_minor = det;
                    }
                }
            }
        }
        TPVerdict {
            holds: min_minor >= -tol,
            min_minor,
            method: MinorMethod::Exhaustive,
        }
    } else {
        let (ok_a, min_a) = neville_nonneg(a, tol);
        let (ok_t, min_t) = neville_nonneg(&a.transpose(), tol);
        TPVerdict {
            holds: ok_a && ok_t,
            min_minor: min_a.min(min_t),
            method: MinorMethod::EliminationBased,
        }
    }
}

/// Elimination-based verdict regardless of size (used to cross-check
/// the exhaustive enumeration on small matrices).
pub fn is_totally_positive_by_elimination(a: &DMatrix<f64>, tol: f64) -> TPVerdict {
    let (ok_a, min_a) = neville_nonneg(a, tol);
    let (ok_t, min_t) = neville_nonneg(&a.transpose(), tol);
    TPVerdict {
        holds: ok_a && ok_t,
        min_minor: min_a.min(min_t),
        method: MinorMethod::EliminationBased,
    }
}

/// Neville elimination: zero out below the diagonal column by column by
/// subtracting multiples of the *adjacent* row above. For a totally
/// positive matrix all pivots and multipliers stay non-negative and no
/// row exchange is ever needed.
fn neville_nonneg(a: &DMatrix<f64>, tol: f64) -> (bool, f64) {
    let mut m = a.clone();
    let n = m.nrows();
    let mut min_seen = f64::INFINITY;
    for j in 0..n.min(m.ncols()) {
        for i in (j + 1..n).rev() {
            let above = m[(i - 1, j)];
            let here = m[(i, j)];
            if above.abs() <= tol {
                if here.abs() > tol {
                    // A zero entry sitting above a nonzero one forces a
                    // row exchange: not totally positive.
                    return (false, here.min(min_seen));
                }
                continue;
            }
            let mult = here / above;
            min_seen = min_seen.min(mult);
            if mult < -tol {
                return (false, min_seen);
            }
            for c in j..m.ncols() {
                let upd = m[(i, c)] - mult * m[(i - 1, c)];
                m[(i, c)] = upd;
            }
            m[(i, j)] = 0.0;
        }
        if j < n.min(m.ncols()) {
            let pivot = m[(j, j)];
            min_seen = min_seen.min(pivot);
            if pivot < -tol {
                return (false, min_seen);
            }
        }
    }
    (true, min_seen)
}

/// Gantmacher criterion report: oscillatory = totally positive +
/// nonsingular + strictly positive super- and sub-diagonals.
#[derive(Debug, Clone, Serialize)]
pub struct TPReport {
    pub nonsingular: bool,
    pub superdiagonal_positive: bool,
    pub subdiagonal_positive: bool,
    pub minors_nonnegative: bool,
    pub minor_method: MinorMethod,
    pub min_minor: f64,
    pub oscillatory: bool,
}

pub fn is_oscillatory(a: &DMatrix<f64>) -> TPReport {
    is_oscillatory_with_tol(a, TP_TOL)
}

pub fn is_oscillatory_with_tol(a: &DMatrix<f64>, tol: f64) -> TPReport {
    let n = a.nrows();
    let nonsingular = n == a.ncols() && a.clone().determinant().abs() > 1e-12;
    let superdiagonal_positive = (0..n.saturating_sub(1)).all(|i| a[(i, i + 1)] > 0.0);
    let subdiagonal_positive = (0..n.saturating_sub(1)).all(|i| a[(i + 1, i)] > 0.0);
    let tp = is_totally_positive(a, tol);
    TPReport {
        nonsingular,
        superdiagonal_positive,
        subdiagonal_positive,
        minors_nonnegative: tp.holds,
        minor_method: tp.method,
        min_minor: tp.min_minor,
        oscillatory: nonsingular && superdiagonal_positive && subdiagonal_positive && tp.holds,
    }
}

/// Findings of the Schoenberg eigenvalue-pattern check
/// 1 = lambda_0 = lambda_1 > lambda_2 > ... > 0.
#[derive(Debug, Clone, Serialize)]
pub struct EigenPatternReport {
    pub moduli: Vec<f64>,
    pub two_unit_eigenvalues: bool,
    pub all_real: bool,
    pub all_positive: bool,
    pub strictly_decreasing: bool,
    pub holds: bool,
    pub mismatches: Vec<String>,
}

/// Check the eigenvalue pattern of the Schoenberg collocation matrix.
pub fn check_schoenberg_eigen_pattern(seq: &KnotSequence) -> Result<EigenPatternReport> {
    let op = make_schoenberg(seq.clone())?;
    let a = op.collocation_matrix();
    let s = eigendecompose(&a)?;
    let mut mismatches = Vec::new();

    let two_unit_eigenvalues = s.unit_multiplicity == 2;
    if !two_unit_eigenvalues {
        mismatches.push(format!(
            "expected exactly two unit eigenvalues, found {}",
            s.unit_multiplicity
        ));
    }
    let all_real = s.eigenvalues.iter().all(|l| l.im.abs() <= 1e-8);
    if !all_real {
        mismatches.push("eigenvalues with non-negligible imaginary part".into());
    }
    let all_positive = s.eigenvalues.iter().all(|l| l.re > 0.0);
    if !all_positive {
        mismatches.push("non-positive eigenvalue".into());
    }
    let moduli: Vec<f64> = s.eigenvalues.iter().map(|l| l.norm()).collect();
    // Strict decrease with relative gap > 1e-8 after the double unit
    // eigenvalue.
    let mut strictly_decreasing = true;
    for (i, w) in moduli.windows(2).enumerate() {
        if i == 0 {
            continue; // lambda_0 = lambda_1 = 1 is expected.
        }
        if w[0] <= 0.0 || (w[0] - w[1]) / w[0] <= 1e-8 {
            strictly_decreasing = false;
            mismatches.push(format!(
                "eigenvalues {} and {} are not separated: {} vs {}",
                i,
                i + 1,
                w[0],
                w[1]
            ));
        }
    }
    let holds = two_unit_eigenvalues && all_real && all_positive && strictly_decreasing;
    Ok(EigenPatternReport {
        moduli,
        two_unit_eigenvalues,
        all_real,
        all_positive,
        strictly_decreasing,
        holds,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{
        bernstein_eigenvalues_exact, make_bernstein, make_integral_schoenberg,
    };
    use approx::assert_abs_diff_eq;

    #[test]
    fn eigendecompose_examples() {
        let s = eigendecompose(&DMatrix::identity(4, 4)).unwrap();
        assert_eq!(s.unit_multiplicity, 4);
        assert_abs_diff_eq!(s.gamma, 0.0);

        let a = DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        let s = eigendecompose(&a).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0].re, 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues[1].re, 1.0, epsilon = 1e-12);

        let b3 = make_bernstein(3).unwrap().collocation_matrix();
        let s = eigendecompose(&b3).unwrap();
        let expect = [1.0, 1.0, 2.0 / 3.0, 2.0 / 9.0];
        for (l, e) in s.eigenvalues.iter().zip(expect) {
            assert_abs_diff_eq!(l.re, e, epsilon = 1e-12);
            assert_abs_diff_eq!(l.im, 0.0, epsilon = 1e-12);
        }

        let bad = DMatrix::from_row_slice(1, 2, &[1.0, 2.0]);
        assert!(eigendecompose(&bad).is_err());
    }

    #[test]
    fn bernstein_spectral_gap_matches_formula() {
        for n in 2..=20usize {
            let a = make_bernstein(n).unwrap().collocation_matrix();
            let s = eigendecompose(&a).unwrap();
            assert_eq!(s.unit_multiplicity, 2, "n={n}");
            let expect = (n as f64 - 1.0) / n as f64;
            assert!(
                (s.gamma - expect).abs() <= 1e-9,
                "n={n}: gamma {} vs {expect}",
                s.gamma
            );
            // Whole exact spectrum reproduced.
            for (l, e) in s.eigenvalues.iter().zip({
                let mut ev = bernstein_eigenvalues_exact(n);
                ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
                ev
            }) {
                assert!((l.re - e).abs() <= 1e-9 * e.max(1e-8), "n={n}");
            }
            assert!(spectral_location_check(&s));
        }
    }

    #[test]
    fn location_check_examples() {
        let s = Spectrum {
            eigenvalues: vec![Complex::new(-1.0, 0.0)],
            unit_multiplicity: 0,
            gamma: 1.0,
        };
        assert!(!spectral_location_check(&s));
        let s = Spectrum {
            eigenvalues: vec![
                Complex::new(1.0, 0.0),
                Complex::new(0.5, 0.0),
                Complex::new(0.5, 0.0),
            ],
            unit_multiplicity: 1,
            gamma: 0.5,
        };
        assert!(spectral_location_check(&s));
    }

    #[test]
    fn projection_examples() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.5]);
        let p = fixed_point_projection(&a).unwrap();
        assert_eq!(p.rank, 1);
        assert_abs_diff_eq!(p.matrix[(0, 0)], 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(p.matrix[(1, 1)], 0.0, epsilon = 1e-10);

        let id = DMatrix::identity(3, 3);
        let p = fixed_point_projection(&id).unwrap();
        assert_eq!(p.rank, 3);
        assert!(inf_norm(&(&p.matrix - &id)) <= 1e-10);

        for n in [3usize, 6, 10] {
            let a = make_bernstein(n).unwrap().collocation_matrix();
            let p = fixed_point_projection(&a).unwrap();
            assert_eq!(p.rank, 2, "n={n}");
            // Compare against the power limit.
            let mut pw = a.clone();
            for _ in 0..2000 {
                pw = &pw * &a;
            }
            assert!(inf_norm(&(&pw - &p.matrix)) <= 1e-7, "n={n}");
        }

        // Rotation by 90 degrees has spectrum {i, -i}: divergent.
        let rot = DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]);
        assert!(fixed_point_projection(&rot).is_err());
    }

    #[test]
    fn decay_examples() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.5]);
        let p = fixed_point_projection(&a).unwrap();
        let trace = iterate_decay(&a, &p, 30).unwrap();
        for (i, &r) in trace.rhos.iter().enumerate() {
            assert_abs_diff_eq!(r, 0.5f64.powi(i as i32 + 1), epsilon = 1e-10);
        }
        assert!(trace.paper_bound_holds);

        // A already a projection: rho_m = 0.
        let pi2 = fixed_point_projection(&p.matrix).unwrap();
        let trace = iterate_decay(&p.matrix, &pi2, 10).unwrap();
        assert!(trace.rhos.iter().all(|&r| r <= 1e-12));

        // Fitted rate close to gamma for Bernstein n = 5.
        let a = make_bernstein(5).unwrap().collocation_matrix();
        let p = fixed_point_projection(&a).unwrap();
        let trace = iterate_decay(&a, &p, 60).unwrap();
        assert!((trace.fitted_rate - trace.gamma).abs() <= 0.05 * trace.gamma);
        // Asymptotic geometric decay: the ratio approaches gamma from
        // above like gamma + O(gamma^m) for this non-normal matrix, so
        // the early window needs a looser cap than the late one.
        for w in trace.rhos.windows(2).skip(5) {
            assert!(w[1] <= w[0] * (trace.gamma + 1e-4));
        }
        for w in trace.rhos.windows(2).skip(10) {
            assert!(w[1] <= w[0] * (trace.gamma + 1e-6));
        }
    }

    #[test]
    fn tp_examples() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, 2.0]);
        let v = is_totally_positive(&a, TP_TOL);
        assert!(v.holds);
        assert_abs_diff_eq!(v.min_minor, 1.0, epsilon = 1e-14);
        assert_eq!(v.method, MinorMethod::Exhaustive);

        let b = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        assert!(!is_totally_positive(&b, TP_TOL).holds);

        let seq = KnotSequence::uniform(2, 4).unwrap();
        let coll = make_integral_schoenberg(seq).unwrap().collocation_matrix();
        assert!(coll.nrows() <= 10);
        assert!(is_totally_positive(&coll, TP_TOL).holds);
    }

    #[test]
    fn exhaustive_and_elimination_agree() {
        let mut cases: Vec<DMatrix<f64>> = vec![
            DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, 2.0]),
            DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]),
            DMatrix::from_row_slice(3, 3, &[1.0, 1.0, 0.0, 1.0, 2.0, 1.0, 0.0, 1.0, 2.0]),
            DMatrix::from_row_slice(3, 3, &[1.0, 2.0, 1.0, 2.0, 1.0, 2.0, 1.0, 2.0, 1.0]),
        ];
        for n in [3usize, 5, 7] {
            cases.push(make_bernstein(n).unwrap().collocation_matrix());
        }
        for (k, n) in [(1usize, 4usize), (2, 4), (3, 4)] {
            let seq = KnotSequence::uniform(k, n).unwrap();
            cases.push(make_integral_schoenberg(seq).unwrap().collocation_matrix());
        }
        for (i, a) in cases.iter().enumerate() {
            assert!(a.nrows() <= 8, "case {i} too large for this test");
            let exhaustive = is_totally_positive(a, TP_TOL);
            let (ok_a, _) = neville_nonneg(a, TP_TOL);
            let (ok_t, _) = neville_nonneg(&a.transpose(), TP_TOL);
            assert_eq!(exhaustive.holds, ok_a && ok_t, "case {i}");
        }
    }

    #[test]
    fn oscillatory_examples() {
        let a = DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        assert!(is_oscillatory(&a).oscillatory);

        let d = DMatrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 3.0]);
        let rep = is_oscillatory(&d);
        assert!(!rep.oscillatory);
        assert!(!rep.superdiagonal_positive);

        let seq = KnotSequence::uniform(2, 4).unwrap();
        let coll = make_integral_schoenberg(seq).unwrap().collocation_matrix();
        let rep = is_oscillatory(&coll);
        assert!(rep.oscillatory, "{rep:?}");
        assert!(rep.nonsingular && rep.minors_nonnegative);
    }

    #[test]
    fn schoenberg_eigen_pattern() {
        let seq = KnotSequence::uniform(2, 4).unwrap();
        let rep = check_schoenberg_eigen_pattern(&seq).unwrap();
        assert!(rep.holds, "{:?}", rep.mismatches);
        assert_abs_diff_eq!(rep.moduli[0], 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(rep.moduli[1], 1.0, epsilon = 1e-10);

        // Smallest smoke case: degree 1 interpolates at the breakpoints,
        // so the collocation matrix is the identity and the report
        // records the pattern mismatch instead of erroring.
        let seq = KnotSequence::uniform(1, 2).unwrap();
        let rep = check_schoenberg_eigen_pattern(&seq).unwrap();
        assert_eq!(rep.moduli.len(), 3);
        assert!(!rep.holds && !rep.mismatches.is_empty());
    }
}
