//! Quadrature building blocks on the circle: Gauss-Legendre panels graded
//! geometrically toward breakpoints, and golden-section line search.

use std::f64::consts::{PI, TAU};
use std::sync::OnceLock;

/// Nodes per Gauss-Legendre panel.
pub const GL_ORDER: usize = 16;

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        dp = if d != 0.0 { d } else { dp };
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn gl_table() -> &'static (Vec<f64>, Vec<f64>) {
    static TABLE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    TABLE.get_or_init(|| gauss_legendre(GL_ORDER))
}

/// Composite Gauss-Legendre over `[a, b]` split into `pieces` equal panels.
pub fn gl_integrate<G: Fn(f64) -> f64 + ?Sized>(g: &G, a: f64, b: f64, pieces: usize) -> f64 {
    let (x, w) = gl_table();
    let h = (b - a) / pieces as f64;
    let mut total = 0.0;
    for i in 0..pieces {
        let lo = a + h * i as f64;
        let mid = lo + 0.5 * h;
        let s: f64 = x.iter().zip(w).map(|(xi, wi)| wi * g(mid + 0.5 * h * xi)).sum();
        total += 0.5 * h * s;
    }
    total
}

/// Panel edges on `[a, a + len]` graded geometrically toward `a`
/// (ratio 1/2) down to a width of `min_width`.
fn graded_edges(len: f64, min_width: f64) -> Vec<f64> {
    let mut offsets = vec![len];
    let mut w = len;
    while w > min_width {
        w *= 0.5;
        offsets.push(w);
    }
    offsets.push(0.0);
    offsets.reverse();
    offsets
}

/// `∫ g` over the arc `[a, b]`, with panels refined geometrically toward both
/// endpoints, every panel subdivided into `pieces` Gauss-Legendre panels.
pub fn graded_arc<G: Fn(f64) -> f64 + ?Sized>(g: &G, a: f64, b: f64, pieces: usize) -> f64 {
    let half = 0.5 * (b - a);
    let min_width = 1e-15 * (1.0 + a.abs().max(b.abs()));
    let edges = graded_edges(half, min_width);
    let mut total = 0.0;
    for win in edges.windows(2) {
        // left half graded toward a, right half mirrored toward b
        total += gl_integrate(g, a + win[0], a + win[1], pieces);
        total += gl_integrate(g, b - win[1], b - win[0], pieces);
    }
    total
}

/// Mean `(1/2pi) ∫_0^{2pi} g` with grading toward each breakpoint.
/// `breakpoints` are angles; they need not be sorted or reduced.
pub fn graded_circle_mean<G: Fn(f64) -> f64 + ?Sized>(g: &G, breakpoints: &[f64], pieces: usize) -> f64 {
    let mut pts: Vec<f64> = breakpoints.iter().map(|t| t.rem_euclid(TAU)).collect();
    pts.sort_by(|a, b| a.total_cmp(b));
    pts.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    if pts.is_empty() {
        pts.push(0.0);
    }
    let mut total = 0.0;
    for i in 0..pts.len() {
        let a = pts[i];
        let b = if i + 1 < pts.len() { pts[i + 1] } else { pts[0] + TAU };
        if b - a > 0.0 {
            total += graded_arc(g, a, b, pieces);
        }
    }
    total / TAU
}

/// Maximise a unimodal `g` on `[a, b]` by golden-section search.
/// Returns `(argmax, max)`.
pub fn golden_max<G: Fn(f64) -> f64 + ?Sized>(g: &G, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let mut gc = g(c);
    let mut gd = g(d);
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if gc >= gd {
            b = d;
            d = c;
            gd = gc;
            c = b - r * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + r * (b - a);
            gd = g(d);
        }
    }
    if gc >= gd {
        (c, gc)
    } else {
        (d, gd)
    }
}

/// Minimise a unimodal `g` on `[a, b]`.
pub fn golden_min<G: Fn(f64) -> f64 + ?Sized>(g: &G, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (x, v) = golden_max(&|t| -g(t), a, b, tol);
    (x, -v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_integrates_polynomials_exactly() {
        // exact through degree 2n - 1
        let g = |x: f64| x.powi(31) + 3.0 * x.powi(30) - x * x;
        let exact = 3.0 * 2.0 / 31.0 - 2.0 / 3.0;
        assert!((gl_integrate(&g, -1.0, 1.0, 1) - exact).abs() < 1e-13);
        let (_, w) = gauss_legendre(GL_ORDER);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn graded_arc_handles_endpoint_cusp() {
        // ∫_0^1 sqrt(x) dx = 2/3
        let v = graded_arc(&|x: f64| x.sqrt(), 0.0, 1.0, 1);
        assert!((v - 2.0 / 3.0).abs() < 1e-13, "{v}");
        // ∫_0^1 x^{-1/2} dx = 2, integrable singularity
        let v = graded_arc(&|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, 1);
        assert!((v - 2.0).abs() < 1e-6, "{v}");
    }

    #[test]
    fn circle_mean_of_constant() {
        let v = graded_circle_mean(&|_t: f64| 3.0, &[0.3, 2.0, 5.0], 1);
        assert!((v - 3.0).abs() < 1e-14);
    }

    #[test]
    fn golden_section_finds_extremum() {
        let (x, v) = golden_max(&|t: f64| -(t - 0.3).powi(2) + 2.0, 0.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-6);
        assert!((v - 2.0).abs() < 1e-12);
        let (x, _) = golden_min(&|t: f64| (t - 0.7).abs(), 0.0, 1.0, 1e-14);
        assert!((x - 0.7).abs() < 1e-12);
    }
}
