//! Tensor-product Gauss–Legendre quadrature on the unit cube and its faces.
//!
//! An `n`-point rule integrates every polynomial whose degree in each
//! variable is at most `2n - 1` exactly.

use crate::error::{Error, Result};
use crate::tensor::Vec3;

/// Gauss–Legendre nodes and weights mapped to `[0, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a quadrature rule needs at least one point");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            // Tricomi initial guess, then Newton on P_n
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, z);
                dp = d;
                let dz = p / d;
                z -= dz;
                if dz.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, z);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - z * z) * dp * dp);
            // map [-1, 1] -> [0, 1]
            nodes[i] = 0.5 * (1.0 - z);
            nodes[n - 1 - i] = 0.5 * (1.0 + z);
            weights[i] = 0.5 * w;
            weights[n - 1 - i] = 0.5 * w;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Highest per-variable degree integrated exactly.
    pub fn exact_degree(&self) -> u32 {
        (2 * self.len() - 1) as u32
    }
}

/// `(P_n(z), P_n'(z))` by the three-term recurrence.
fn legendre(n: usize, z: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, z);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

/// Smallest order that is exact for the given per-variable degree.
pub fn required_order(degree: u32) -> usize {
    (degree as usize + 2) / 2
}

pub fn ensure_exact(order: usize, degree: u32) -> Result<()> {
    let required = required_order(degree).max(1);
    if order < required {
        return Err(Error::QuadratureOrder {
            given: order,
            degree,
            required,
        });
    }
    Ok(())
}

/// `∫_{[0,1]³} f dv`.
pub fn integrate_cube(order: usize, mut f: impl FnMut(&Vec3) -> f64) -> f64 {
    let rule = GaussLegendre::new(order);
    let mut total = 0.0;
    for (a, wa) in rule.nodes.iter().zip(&rule.weights) {
        let mut plane = 0.0;
        for (b, wb) in rule.nodes.iter().zip(&rule.weights) {
            let mut line = 0.0;
            for (c, wc) in rule.nodes.iter().zip(&rule.weights) {
                line += wc * f(&[*a, *b, *c]);
            }
            plane += wb * line;
        }
        total += wa * plane;
    }
    total
}

/// `∮_{∂[0,1]³} f(x, n) dσ` with `n` the outward unit normal.
pub fn integrate_cube_boundary(order: usize, mut f: impl FnMut(&Vec3, &Vec3) -> f64) -> f64 {
    let rule = GaussLegendre::new(order);
    let mut total = 0.0;
    for axis in 0..3 {
        let (p, q) = ((axis + 1) % 3, (axis + 2) % 3);
        for (side, sign) in [(0.0, -1.0), (1.0, 1.0)] {
            let mut normal = [0.0; 3];
            normal[axis] = sign;
            let mut face = 0.0;
            for (s, ws) in rule.nodes.iter().zip(&rule.weights) {
                for (t, wt) in rule.nodes.iter().zip(&rule.weights) {
                    let mut x = [0.0; 3];
                    x[axis] = side;
                    x[p] = *s;
                    x[q] = *t;
                    face += ws * wt * f(&x, &normal);
                }
            }
            total += face;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_one_and_nodes_symmetric() {
        for n in 1..=16 {
            let r = GaussLegendre::new(n);
            let s: f64 = r.weights.iter().sum();
            assert!((s - 1.0).abs() < 1e-14, "n = {n}: {s}");
            for i in 0..n {
                assert!((r.nodes[i] + r.nodes[n - 1 - i] - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn monomials_integrated_exactly() {
        for order in 1..=8 {
            let top = 2 * order - 1;
            for a in 0..=top {
                for b in 0..=(top - a).min(3) {
                    let c = (top - a - b).min(top);
                    let exact = 1.0 / ((a + 1) * (b + 1) * (c + 1)) as f64;
                    let got = integrate_cube(order, |x| {
                        x[0].powi(a as i32) * x[1].powi(b as i32) * x[2].powi(c as i32)
                    });
                    assert!(((got - exact) / exact).abs() <= 1e-14, "order {order}: {a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn boundary_flux_of_position_is_three() {
        // ∮ x · n dσ = ∫ div x dv = 3
        let flux = integrate_cube_boundary(2, |x, n| x[0] * n[0] + x[1] * n[1] + x[2] * n[2]);
        assert!((flux - 3.0).abs() < 1e-14);
    }

    #[test]
    fn order_check() {
        assert_eq!(required_order(0), 1);
        assert_eq!(required_order(1), 1);
        assert_eq!(required_order(2), 2);
        assert_eq!(required_order(15), 8);
        assert!(ensure_exact(8, 15).is_ok());
        assert!(matches!(
            ensure_exact(8, 16),
            Err(Error::QuadratureOrder { required: 9, .. })
        ));
    }
}
