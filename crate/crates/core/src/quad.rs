//! Gauss–Legendre quadrature on [0, 1] with cached rules and node doubling.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Nodes and weights on [0, 1].
#[derive(Debug, Clone)]
pub struct GlRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GlRule {
    fn compute(n: usize) -> Self {
        assert!(n >= 1);
        // Newton iteration on P_n over [-1, 1], exploiting root symmetry.
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            weights[i] = w;
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = w;
        }
        // map [-1, 1] -> [0, 1]
        for x in &mut nodes {
            *x = 0.5 * (*x + 1.0);
        }
        for w in &mut weights {
            *w *= 0.5;
        }
        GlRule { nodes, weights }
    }
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Shared rule cache; grids across threads request the same sizes.
pub fn gl_rule(n: usize) -> Arc<GlRule> {
    static RULES: OnceLock<Mutex<HashMap<usize, Arc<GlRule>>>> = OnceLock::new();
    let cache = RULES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().unwrap().get(&n) {
        return Arc::clone(r);
    }
    let rule = Arc::new(GlRule::compute(n));
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&rule))
        .clone()
}

/// Fixed-size rule applied to a fallible complex integrand on [0, 1].
pub fn integrate_complex<F>(f: &F, n: usize) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let rule = gl_rule(n);
    let mut acc = Complex64::ZERO;
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        acc += f(x)? * w;
    }
    Ok(acc)
}

pub const MAX_QUAD_NODES: usize = 16_384;

/// Doubles the node count until two successive levels agree within tol
/// (relative to max(1, |I|)). The integrands here are analytic on [0, 1],
/// so convergence is geometric and the first agreement is trustworthy.
pub fn integrate_adaptive<F>(f: &F, start_nodes: usize, tol: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let mut n = start_nodes.max(8);
    let mut prev = integrate_complex(f, n)?;
    loop {
        n *= 2;
        if n > MAX_QUAD_NODES {
            return Err(Error::QuadratureDivergence(MAX_QUAD_NODES));
        }
        let cur = integrate_complex(f, n)?;
        if (cur - prev).norm() <= tol * cur.norm().max(1.0) {
            return Ok(cur);
        }
        prev = cur;
    }
}
