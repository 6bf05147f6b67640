//! Degree-two null Lagrangians generated by three functions `Sᵅ(x, y)`.
//!
//! With `S^α_i = ∂S^α/∂y^i` and `S^α_|β = ∂S^α/∂x^β` the coefficients are the
//! 2×2 determinants
//!
//! ```text
//! D(α₁,α₂; i₁,i₂) = S^α₁_i₁ S^α₂_i₂ − S^α₂_i₁ S^α₁_i₂
//! D(α₁; i₁)       = Σ_α₂ S^α₁_i₁ S^α₂_|α₂ − S^α₂_i₁ S^α₁_|α₂
//! D(0; 0)         = Σ_α₁,α₂ S^α₁_|α₁ S^α₂_|α₂ − S^α₂_|α₁ S^α₁_|α₂
//! ```
//!
//! and `Ψ = ½ D(α₁,α₂;i₁,i₂) y^i₁_α₁ y^i₂_α₂ + D(α₁;i₁) y^i₁_α₁ + ½ D(0;0)`
//! is a null Lagrangian for arbitrary generators. Polynomials in `(x, y)` use
//! variables `x` at `0..3` and `y^i` at `3 + i`.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::tensor::Vec3;
use crate::variational::{LagrangianEvaluator, Vars};

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    n: usize,
    s: [Poly; 3],
    s_y: Vec<Poly>,
    s_x: Vec<Poly>,
}

impl GeneratorSet {
    pub fn new(n: usize, s: [Poly; 3]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("generator arity must be positive".into()));
        }
        for p in &s {
            if p.nvars() != 3 + n {
                return Err(Error::Arity {
                    expected: 3 + n,
                    found: p.nvars(),
                });
            }
            if p.terms().any(|(_, c)| !c.is_finite()) {
                return Err(Error::NonFinite {
                    what: "generator coefficient".into(),
                    index: 0,
                });
            }
        }
        let s_y = (0..3)
            .flat_map(|a| (0..n).map(move |i| (a, i)))
            .map(|(a, i)| s[a].diff(3 + i))
            .collect();
        let s_x = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .map(|(a, b)| s[a].diff(b))
            .collect();
        Ok(Self { n, s, s_y, s_x })
    }

    /// Generators for fields of arity `n`; checks `n` against the arity of the
    /// model being compared.
    pub fn for_model(n: usize, model_arity: usize, s: [Poly; 3]) -> Result<Self> {
        if n != model_arity {
            return Err(Error::Arity {
                expected: model_arity,
                found: n,
            });
        }
        Self::new(n, s)
    }

    pub fn random<R: rand::Rng + ?Sized>(n: usize, degree: u32, rng: &mut R) -> Self {
        let s = std::array::from_fn(|_| Poly::random_dyadic(3 + n, degree, rng));
        Self::new(n, s).expect("random generators are valid")
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Poly; 3] {
        &self.s
    }

    pub fn degree(&self) -> u32 {
        self.s.iter().map(Poly::degree).max().unwrap_or(0)
    }

    /// `∂S^α/∂y^i`.
    pub fn s_y(&self, alpha: usize, i: usize) -> &Poly {
        &self.s_y[alpha * self.n + i]
    }

    /// `∂S^α/∂x^β`.
    pub fn s_x(&self, alpha: usize, beta: usize) -> &Poly {
        &self.s_x[alpha * 3 + beta]
    }

    fn point(&self, x: &Vec3, y: &[f64]) -> Result<Vec<f64>> {
        if y.len() != self.n {
            return Err(Error::Arity {
                expected: self.n,
                found: y.len(),
            });
        }
        Ok(x.iter().chain(y).copied().collect())
    }

    /// Coefficients as exact polynomials in `(x, y)`.
    pub fn coefficient_polys(&self) -> RundPolys {
        let n = self.n;
        let det = |a: &Poly, b: &Poly, c: &Poly, d: &Poly| &(a * d) - &(b * c);
        let mut d2 = Vec::with_capacity(9 * n * n);
        for a1 in 0..3 {
            for a2 in 0..3 {
                for i1 in 0..n {
                    for i2 in 0..n {
                        d2.push(det(
                            self.s_y(a1, i1),
                            self.s_y(a2, i1),
                            self.s_y(a1, i2),
                            self.s_y(a2, i2),
                        ));
                    }
                }
            }
        }
        let mut d1 = Vec::with_capacity(3 * n);
        for a1 in 0..3 {
            for i1 in 0..n {
                let mut acc = Poly::zero(3 + n);
                for a2 in 0..3 {
                    acc = &acc + &det(self.s_y(a1, i1), self.s_y(a2, i1), self.s_x(a1, a2), self.s_x(a2, a2));
                }
                d1.push(acc);
            }
        }
        let mut d0 = Poly::zero(3 + n);
        for a1 in 0..3 {
            for a2 in 0..3 {
                d0 = &d0 + &det(self.s_x(a1, a1), self.s_x(a2, a1), self.s_x(a1, a2), self.s_x(a2, a2));
            }
        }
        RundPolys { n, d2, d1, d0 }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: Vec<Vec<GeneratorTerm>> = serde_json::from_str(text)?;
        if file.len() != 3 {
            return Err(Error::Length {
                what: "generator list".into(),
                expected: 3,
                found: file.len(),
            });
        }
        let nvars = file.iter().flatten().map(|t| t.exponents.len()).next().unwrap_or(3);
        if nvars <= 3 {
            return Err(Error::Invalid(
                "generator exponents must cover x and at least one y".into(),
            ));
        }
        let mut polys = Vec::with_capacity(3);
        for terms in &file {
            let terms = terms
                .iter()
                .map(|t| Ok((t.exponents.clone(), parse_rational(&t.coeff)?)))
                .collect::<Result<Vec<_>>>()?;
            polys.push(Poly::from_terms(nvars, terms)?);
        }
        let s: [Poly; 3] = polys.try_into().expect("three generators");
        Self::new(nvars - 3, s)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Serializes with shortest round-trip decimal coefficients.
    pub fn to_json(&self) -> String {
        let file: Vec<Vec<GeneratorTerm>> = self
            .s
            .iter()
            .map(|p| {
                p.terms()
                    .map(|(e, c)| GeneratorTerm {
                        exponents: e.clone(),
                        coeff: c.to_string(),
                    })
                    .collect()
            })
            .collect();
        serde_json::to_string_pretty(&file).expect("plain data serializes")
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorTerm {
    exponents: Vec<u32>,
    coeff: String,
}

/// Parses `"p/q"`, an integer or a decimal.
pub fn parse_rational(s: &str) -> Result<f64> {
    let bad = || Error::Invalid(format!("bad coefficient {s:?}"));
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0.0 {
                return Err(bad());
            }
            p / q
        }
        None => s.trim().parse().map_err(|_| bad())?,
    };
    if !v.is_finite() {
        return Err(bad());
    }
    Ok(v)
}

/// Determinant coefficients as polynomials in `(x, y)`; index layouts match
/// [`RundCoefficients`].
#[derive(Clone, Debug, PartialEq)]
pub struct RundPolys {
    pub n: usize,
    pub d2: Vec<Poly>,
    pub d1: Vec<Poly>,
    pub d0: Poly,
}

/// Coefficients at one point `(x, y)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RundCoefficients {
    pub n: usize,
    /// `D(α₁,α₂;i₁,i₂)` at `((α₁·3 + α₂)·n + i₁)·n + i₂`.
    pub d2: Vec<f64>,
    /// `D(α₁;i₁)` at `α₁·n + i₁`.
    pub d1: Vec<f64>,
    pub d0: f64,
}

impl RundCoefficients {
    pub fn d2(&self, a1: usize, a2: usize, i1: usize, i2: usize) -> f64 {
        self.d2[((a1 * 3 + a2) * self.n + i1) * self.n + i2]
    }

    pub fn d1(&self, a1: usize, i1: usize) -> f64 {
        self.d1[a1 * self.n + i1]
    }

    /// `Ψ` for gradient `p` laid out as `p[i·3 + α] = y^i_α`.
    pub fn lagrangian(&self, p: &[f64]) -> f64 {
        let n = self.n;
        let mut quad = 0.0;
        let mut lin = 0.0;
        for a1 in 0..3 {
            for i1 in 0..n {
                let p1 = p[i1 * 3 + a1];
                if p1 == 0.0 {
                    continue;
                }
                lin += self.d1(a1, i1) * p1;
                for a2 in 0..3 {
                    for i2 in 0..n {
                        quad += self.d2(a1, a2, i1, i2) * p1 * p[i2 * 3 + a2];
                    }
                }
            }
        }
        0.5 * quad + lin + 0.5 * self.d0
    }
}

impl RundPolys {
    pub fn eval(&self, point: &[f64]) -> RundCoefficients {
        RundCoefficients {
            n: self.n,
            d2: self.d2.iter().map(|p| p.eval(point)).collect(),
            d1: self.d1.iter().map(|p| p.eval(point)).collect(),
            d0: self.d0.eval(point),
        }
    }
}

pub fn rund_coefficients(g: &GeneratorSet, x: &Vec3, y: &[f64]) -> Result<RundCoefficients> {
    let pt = g.point(x, y)?;
    let n = g.n;
    let sy: Vec<f64> = g.s_y.iter().map(|p| p.eval(&pt)).collect();
    let sx: Vec<f64> = g.s_x.iter().map(|p| p.eval(&pt)).collect();
    Ok(coefficients_from_partials(n, &sy, &sx))
}

fn coefficients_from_partials(n: usize, sy: &[f64], sx: &[f64]) -> RundCoefficients {
    let s_y = |a: usize, i: usize| sy[a * n + i];
    let s_x = |a: usize, b: usize| sx[a * 3 + b];
    let det = |a: f64, b: f64, c: f64, d: f64| a * d - b * c;
    let mut d2 = vec![0.0; 9 * n * n];
    let mut d1 = vec![0.0; 3 * n];
    let mut d0 = 0.0;
    for a1 in 0..3 {
        for a2 in 0..3 {
            for i1 in 0..n {
                for i2 in 0..n {
                    d2[((a1 * 3 + a2) * n + i1) * n + i2] = det(s_y(a1, i1), s_y(a2, i1), s_y(a1, i2), s_y(a2, i2));
                }
                d1[a1 * n + i1] += det(s_y(a1, i1), s_y(a2, i1), s_x(a1, a2), s_x(a2, a2));
            }
            d0 += det(s_x(a1, a1), s_x(a2, a1), s_x(a1, a2), s_x(a2, a2));
        }
    }
    RundCoefficients { n, d2, d1, d0 }
}

/// `Ψ` as a black-box evaluator, coefficients recomputed at every `(x, y)`.
/// Its total degree is at most twice the generator degree.
pub fn build_null_lagrangian(g: &GeneratorSet) -> LagrangianEvaluator {
    let n = g.n;
    let g = Arc::new(g.clone());
    let degree = 2 * g.degree();
    LagrangianEvaluator::function(n, Some(degree), move |x, y, p| {
        let pt: Vec<f64> = x.iter().chain(y).copied().collect();
        let sy: Vec<f64> = g.s_y.iter().map(|q| q.eval(&pt)).collect();
        let sx: Vec<f64> = g.s_x.iter().map(|q| q.eval(&pt)).collect();
        coefficients_from_partials(n, &sy, &sx).lagrangian(p)
    })
}

/// `Ψ` as an exact polynomial: half the sum of the 2×2 determinants of the
/// total derivatives `d_α S^β = S^β_|α + S^β_i y^i_α`.
pub fn null_lagrangian_polynomial(g: &GeneratorSet) -> Result<LagrangianEvaluator> {
    let n = g.n;
    let v = Vars::new(n);
    let map: Vec<usize> = (0..3 + n).collect();
    let total = |beta: usize, alpha: usize| -> Poly {
        let mut acc = g.s_x(beta, alpha).embed(v.count(), &map);
        for i in 0..n {
            acc = &acc + &(&g.s_y(beta, i).embed(v.count(), &map) * &v.p_poly(i, alpha));
        }
        acc
    };
    let t: Vec<Vec<Poly>> = (0..3).map(|a| (0..3).map(|b| total(b, a)).collect()).collect();
    let mut psi = Poly::zero(v.count());
    for a1 in 0..3 {
        for a2 in a1 + 1..3 {
            psi = &psi + &(&(&t[a1][a1] * &t[a2][a2]) - &(&t[a1][a2] * &t[a2][a1]));
        }
    }
    LagrangianEvaluator::polynomial(n, psi)
}

/// Blocks for `y = (u, φ)`: indices `i ≤ 3` form the `u` block, the rest the
/// `φ` block with `i' = i − 3`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MicropolarBlocks {
    /// `[α₁][α₂][i₁][i₂]` flattened like [`RundCoefficients::d2`] with `n = 3`.
    pub d2_uu: Vec<f64>,
    pub d2_phiphi: Vec<f64>,
    /// `u` index first, `φ` index second.
    pub d2_uphi: Vec<f64>,
    pub d1_u: Vec<f64>,
    pub d1_phi: Vec<f64>,
    pub d0: f64,
}

impl MicropolarBlocks {
    /// Reassembles the full coefficient set.
    pub fn reassemble(&self) -> RundCoefficients {
        let mut d2 = vec![0.0; 9 * 36];
        for a in 0..9 {
            for i1 in 0..3 {
                for i2 in 0..3 {
                    let b = (a * 3 + i1) * 3 + i2;
                    d2[(a * 6 + i1) * 6 + i2] = self.d2_uu[b];
                    d2[(a * 6 + i1 + 3) * 6 + i2 + 3] = self.d2_phiphi[b];
                    d2[(a * 6 + i1) * 6 + i2 + 3] = self.d2_uphi[b];
                    // D(α₁,α₂;i₂,i₁) = D(α₂,α₁;i₁,i₂)
                    let swapped = ((a % 3) * 3 + a / 3) * 9 + i1 * 3 + i2;
                    d2[(a * 6 + i2 + 3) * 6 + i1] = self.d2_uphi[swapped];
                }
            }
        }
        let mut d1 = vec![0.0; 18];
        for a in 0..3 {
            for i in 0..3 {
                d1[a * 6 + i] = self.d1_u[a * 3 + i];
                d1[a * 6 + i + 3] = self.d1_phi[a * 3 + i];
            }
        }
        RundCoefficients {
            n: 6,
            d2,
            d1,
            d0: self.d0,
        }
    }
}

pub fn micropolar_block_view(g: &GeneratorSet, x: &Vec3, y: &[f64]) -> Result<MicropolarBlocks> {
    if g.n != 6 {
        return Err(Error::Arity {
            expected: 6,
            found: g.n,
        });
    }
    let c = rund_coefficients(g, x, y)?;
    let block = |o1: usize, o2: usize| -> Vec<f64> {
        let mut out = Vec::with_capacity(81);
        for a1 in 0..3 {
            for a2 in 0..3 {
                for i1 in 0..3 {
                    for i2 in 0..3 {
                        out.push(c.d2(a1, a2, i1 + o1, i2 + o2));
                    }
                }
            }
        }
        out
    };
    let d1 = |o: usize| -> Vec<f64> {
        (0..3)
            .flat_map(|a| (0..3).map(move |i| (a, i)))
            .map(|(a, i)| c.d1(a, i + o))
            .collect()
    };
    Ok(MicropolarBlocks {
        d2_uu: block(0, 0),
        d2_phiphi: block(3, 3),
        d2_uphi: block(0, 3),
        d1_u: d1(0),
        d1_phi: d1(3),
        d0: c.d0,
    })
}

/// Residuals of the coefficient identities behind the null property:
///
/// ```text
/// rq[i]          = 2 Σ_α ∂D(α;i)/∂x^α − ∂D(0;0)/∂y^i
/// rl1[k][i₂][α₂] = Σ_γ ∂D(γ,α₂;k,i₂)/∂x^γ + ∂D(α₂;k)/∂y^i₂ − ∂D(α₂;i₂)/∂y^k
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityResiduals {
    pub rq: Vec<f64>,
    /// Indexed `(k·n + i₂)·3 + α₂`.
    pub rl1: Vec<f64>,
    /// `1 +` the largest magnitude of any individual term.
    pub scale: f64,
}

impl IdentityResiduals {
    pub fn max_abs(&self) -> f64 {
        self.rq.iter().chain(&self.rl1).fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn normalized(&self) -> f64 {
        self.max_abs() / self.scale
    }
}

/// Differentiated coefficient polynomials, reusable across points.
#[derive(Clone, Debug)]
pub struct IdentityPolys {
    n: usize,
    // per i: (Σ_α ∂D(α;i)/∂x^α, ∂D0/∂y^i)
    rq: Vec<(Poly, Poly)>,
    // per (k, i₂, α₂): the three terms
    rl1: Vec<[Poly; 3]>,
}

impl IdentityPolys {
    pub fn new(g: &GeneratorSet) -> Self {
        let n = g.n;
        let c = g.coefficient_polys();
        let rq = (0..n)
            .map(|i| {
                let mut div = Poly::zero(3 + n);
                for a in 0..3 {
                    div = &div + &c.d1[a * n + i].diff(a);
                }
                (div, c.d0.diff(3 + i))
            })
            .collect();
        let mut rl1 = Vec::with_capacity(3 * n * n);
        for k in 0..n {
            for i2 in 0..n {
                for a2 in 0..3 {
                    let mut div = Poly::zero(3 + n);
                    for gm in 0..3 {
                        div = &div + &c.d2[((gm * 3 + a2) * n + k) * n + i2].diff(gm);
                    }
                    rl1.push([div, c.d1[a2 * n + k].diff(3 + i2), c.d1[a2 * n + i2].diff(3 + k)]);
                }
            }
        }
        Self { n, rq, rl1 }
    }

    pub fn eval(&self, x: &Vec3, y: &[f64]) -> Result<IdentityResiduals> {
        if y.len() != self.n {
            return Err(Error::Arity {
                expected: self.n,
                found: y.len(),
            });
        }
        let pt: Vec<f64> = x.iter().chain(y).copied().collect();
        let mut scale: f64 = 0.0;
        let rq = self
            .rq
            .iter()
            .map(|(div, dy)| {
                let (a, b) = (2.0 * div.eval(&pt), dy.eval(&pt));
                scale = scale.max(a.abs()).max(b.abs());
                a - b
            })
            .collect();
        let rl1 = self
            .rl1
            .iter()
            .map(|[t0, t1, t2]| {
                let (a, b, c) = (t0.eval(&pt), t1.eval(&pt), t2.eval(&pt));
                scale = scale.max(a.abs()).max(b.abs()).max(c.abs());
                a + b - c
            })
            .collect();
        Ok(IdentityResiduals {
            rq,
            rl1,
            scale: 1.0 + scale,
        })
    }
}

pub fn appendix_identity_residuals(g: &GeneratorSet, x: &Vec3, y: &[f64]) -> Result<IdentityResiduals> {
    IdentityPolys::new(g).eval(x, y)
}
