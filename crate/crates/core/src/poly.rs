//! Sparse multivariate polynomials with exact differentiation.
//!
//! Coefficients are `f64`. Differentiation and products only multiply
//! coefficients by small integers or by each other, so polynomials whose
//! coefficients are dyadic rationals of moderate size stay exact.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, RngExt};

use crate::error::{Error, Result};
use crate::tensor::{Matrix3, Vec3};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, f64>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: f64) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The coordinate polynomial `x_var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::monomial(nvars, var, 1, 1.0)
    }

    /// `coeff · x_var^power`.
    pub fn monomial(nvars: usize, var: usize, power: u32, coeff: f64) -> Self {
        assert!(var < nvars);
        let mut e = vec![0; nvars];
        e[var] = power;
        let mut p = Self::zero(nvars);
        p.add_term(e, coeff);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, f64)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Length {
                    what: "monomial exponents".into(),
                    expected: nvars,
                    found: e.len(),
                });
            }
            if !c.is_finite() {
                return Err(Error::Invalid("non-finite polynomial coefficient".into()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, f64)> {
        self.terms.iter().map(|(e, c)| (e, *c))
    }

    pub fn add_term(&mut self, exps: Monomial, coeff: f64) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff == 0.0 {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0.0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Largest exponent of one variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn eval(&self, point: &[f64]) -> f64 {
        debug_assert_eq!(point.len(), self.nvars);
        let mut s = 0.0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (x, &k) in point.iter().zip(e.iter()) {
                if k != 0 {
                    t *= x.powi(k as i32);
                }
            }
            s += t;
        }
        s
    }

    /// Exact partial derivative with respect to `var`.
    pub fn diff(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var];
            if k == 0 {
                continue;
            }
            let mut d = e.clone();
            d[var] -= 1;
            out.add_term(d, c * f64::from(k));
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = Self::zero(self.nvars);
        if s != 0.0 {
            for (e, c) in &self.terms {
                out.add_term(e.clone(), c * s);
            }
        }
        out
    }

    /// Substitute variables: `var_i ↦ images[i]`, all images sharing one variable count.
    pub fn compose(&self, images: &[Poly]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let nv = images.first().map_or(0, |p| p.nvars);
        let mut out = Poly::zero(nv);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(nv, *c);
            for (img, &k) in images.iter().zip(e.iter()) {
                for _ in 0..k {
                    t = &t * img;
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Re-embeds the polynomial into a larger variable set; variable `i` goes to `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Poly::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] += k;
            }
            out.add_term(ne, *c);
        }
        out
    }

    /// Random polynomial with every monomial of total degree `<= degree`
    /// and coefficients uniform in `[-1, 1]`.
    pub fn random<R: Rng + ?Sized>(nvars: usize, degree: u32, rng: &mut R) -> Self {
        let mut p = Self::zero(nvars);
        for e in monomials_up_to(nvars, degree) {
            p.add_term(e, rng.random_range(-1.0..=1.0));
        }
        p
    }

    /// Like [`Poly::random`] with coefficients on the grid `k / 8`, `k ∈ [-8, 8]`,
    /// so that products and derivatives stay exact in floating point.
    pub fn random_dyadic<R: Rng + ?Sized>(nvars: usize, degree: u32, rng: &mut R) -> Self {
        let mut p = Self::zero(nvars);
        for e in monomials_up_to(nvars, degree) {
            let k: i32 = rng.random_range(-8..=8);
            p.add_term(e, f64::from(k) / 8.0);
        }
        p
    }
}

/// All exponent vectors in `nvars` variables with total degree `<= degree`.
pub fn monomials_up_to(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if prefix.len() == nvars {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=left {
            prefix.push(k);
            rec(nvars, left - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &rhs.scale(-1.0)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1.0)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Monomial = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// fields over R^3

/// Value, gradient and Hessian of a vector field at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    /// `y^i`
    pub value: Vec<f64>,
    /// `y^i_α`, flat `[i * 3 + α]`
    pub grad: Vec<f64>,
    /// `∂²y^i / ∂x^β ∂x^γ`, flat `[(i * 3 + β) * 3 + γ]`
    pub hess: Vec<f64>,
}

impl Jet {
    pub fn arity(&self) -> usize {
        self.value.len()
    }

    /// Gradient of the 3-component block starting at `start` as a matrix `M_ij = y^{start+i}_j`.
    pub fn grad_block(&self, start: usize) -> Matrix3 {
        Matrix3::from_fn(|i, j| self.grad[(start + i) * 3 + j])
    }

    pub fn value_block(&self, start: usize) -> Vec3 {
        [self.value[start], self.value[start + 1], self.value[start + 2]]
    }

    /// `y^{start+k}_{,lj}`
    pub fn hess_at(&self, comp: usize, l: usize, j: usize) -> f64 {
        self.hess[(comp * 3 + l) * 3 + j]
    }
}

/// Polynomial map `R³ → R^N` with cached exact first and second derivatives.
#[derive(Clone, Debug)]
pub struct PolyField {
    comps: Vec<Poly>,
    grads: Vec<Poly>,
    hessians: Vec<Poly>,
}

impl PolyField {
    pub fn new(comps: Vec<Poly>) -> Result<Self> {
        if let Some(bad) = comps.iter().find(|p| p.nvars() != 3) {
            return Err(Error::Arity {
                expected: 3,
                found: bad.nvars(),
            });
        }
        let grads: Vec<Poly> = comps.iter().flat_map(|p| (0..3).map(move |a| p.diff(a))).collect();
        let hessians: Vec<Poly> = grads.iter().flat_map(|g| (0..3).map(move |b| g.diff(b))).collect();
        Ok(Self { comps, grads, hessians })
    }

    pub fn zero(arity: usize) -> Self {
        Self::new(vec![Poly::zero(3); arity]).expect("zero polynomials have three variables")
    }

    /// Field with constant components.
    pub fn constant(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&v| Poly::constant(3, v)).collect()).expect("three variables")
    }

    pub fn random<R: Rng + ?Sized>(arity: usize, degree: u32, rng: &mut R) -> Self {
        Self::new((0..arity).map(|_| Poly::random(3, degree, rng)).collect()).expect("three variables")
    }

    /// Gradient field `∇χ` of a scalar polynomial.
    pub fn gradient_of(chi: &Poly) -> Result<Self> {
        if chi.nvars() != 3 {
            return Err(Error::Arity {
                expected: 3,
                found: chi.nvars(),
            });
        }
        Self::new((0..3).map(|a| chi.diff(a)).collect())
    }

    pub fn arity(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.comps[i]
    }

    /// Concatenate several fields into one (e.g. `y = (u, φ)`).
    pub fn concat(parts: &[&PolyField]) -> Self {
        Self::new(parts.iter().flat_map(|p| p.comps.iter().cloned()).collect()).expect("three variables")
    }

    /// Components `start..start + len`.
    pub fn slice(&self, start: usize, len: usize) -> Self {
        Self::new(self.comps[start..start + len].to_vec()).expect("three variables")
    }

    pub fn add(&self, other: &PolyField) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(Error::Arity {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        Self::new(self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect())
    }

    /// Every component multiplied by the same scalar polynomial.
    pub fn times(&self, factor: &Poly) -> Self {
        Self::new(self.comps.iter().map(|c| c * factor).collect()).expect("three variables")
    }

    /// Largest per-variable degree over all components.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.comps.iter().map(|p| p.degree_in(var)).max().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.comps.iter().map(Poly::degree).max().unwrap_or(0)
    }

    pub fn eval(&self, x: &Vec3) -> Vec<f64> {
        self.comps.iter().map(|p| p.eval(x)).collect()
    }

    pub fn jet(&self, x: &Vec3) -> Jet {
        Jet {
            value: self.eval(x),
            grad: self.grads.iter().map(|p| p.eval(x)).collect(),
            hess: self.hessians.iter().map(|p| p.eval(x)).collect(),
        }
    }

    /// Exact gradient `∂y^i/∂x^α` as polynomials, flat `[i * 3 + α]`.
    pub fn gradient_polys(&self) -> &[Poly] {
        &self.grads
    }
}

/// 3×3 matrix of polynomials in `x`, e.g. a strain field.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn from_fn(f: impl Fn(usize, usize) -> Poly) -> Self {
        let entries: Vec<Poly> = (0..9).map(|p| f(p / 3, p % 3)).collect();
        assert!(entries.iter().all(|p| p.nvars() == 3), "entries are polynomials in x");
        Self { entries }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| Poly::zero(3))
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * 3 + j]
    }

    pub fn eval(&self, x: &Vec3) -> Matrix3 {
        Matrix3::from_fn(|i, j| self.get(i, j).eval(x))
    }

    /// Row divergence `Σ_j ∂M_ij/∂x_j`.
    pub fn divergence(&self) -> [Poly; 3] {
        std::array::from_fn(|i| {
            let mut acc = Poly::zero(3);
            for j in 0..3 {
                acc = &acc + &self.get(i, j).diff(j);
            }
            acc
        })
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.entries.iter().map(|p| p.degree_in(var)).max().unwrap_or(0)
    }
}

/// `∏_α x_α (1 - x_α)`: vanishes on the boundary of the unit cube.
pub fn bubble() -> Poly {
    let mut b = Poly::constant(3, 1.0);
    for a in 0..3 {
        let x = Poly::var(3, a);
        let one_minus = &Poly::constant(3, 1.0) - &x;
        b = &b * &(&x * &one_minus);
    }
    b
}
