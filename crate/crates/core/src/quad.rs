//! Gauss-Legendre quadrature on panels.
//!
//! Panels are aligned to the breakpoints of the integrand, so piecewise
//! polynomials of degree <= 2q-1 per panel are integrated to machine
//! precision.

/// Nodes and weights of the q-point Gauss-Legendre rule on [-1, 1].
///
/// Computed by Newton iteration on the Legendre polynomial, good to
/// machine precision for the small q used here.
pub fn gauss_legendre(q: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(q >= 1);
    let mut nodes = vec![0.0; q];
    let mut weights = vec![0.0; q];
    let m = q.div_ceil(2);
    for i in 0..m {
        // Chebyshev initial guess for the i-th positive root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (q as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(q, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[q - 1 - i] = x;
        weights[i] = w;
        weights[q - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(q: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=q {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let d = q as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integrate `f` over [a, b] with the q-point rule.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, q: usize) -> f64 {
    if b <= a {
        return 0.0;
    }
    let (nodes, weights) = gauss_legendre(q);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Integrate `f` over [a, b], splitting the interval at every cut that
/// falls strictly inside it.
pub fn integrate_with_cuts(f: impl Fn(f64) -> f64, a: f64, b: f64, cuts: &[f64], q: usize) -> f64 {
    if b <= a {
        return 0.0;
    }
    let mut edges: Vec<f64> = vec![a];
    for &c in cuts {
        if c > a + 1e-15 && c < b - 1e-15 {
            edges.push(c);
        }
    }
    edges.push(b);
    edges.sort_by(|x, y| x.partial_cmp(y).unwrap());
    edges.dedup();
    let mut acc = 0.0;
    for w in edges.windows(2) {
        acc += integrate(&f, w[0], w[1], q);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_exact_on_polynomials() {
        // q points integrate degree 2q-1 exactly.
        for q in 1..=8 {
            let deg = 2 * q - 1;
            let val = integrate(|x| x.powi(deg as i32), 0.0, 1.0, q);
            let exact = 1.0 / (deg as f64 + 1.0);
            assert!((val - exact).abs() < 1e-14, "q={q} deg={deg}");
        }
    }

    #[test]
    fn cuts_handle_kinks() {
        let val = integrate_with_cuts(|x| (x - 0.5).abs(), 0.0, 1.0, &[0.5], 4);
        assert!((val - 0.25).abs() < 1e-15);
    }
}
