//! Dense tensors of order 1 to 4 in dimension three.
//!
//! Indices are 0-based in code. Storage is contiguous row-major, so the
//! flat position of `T_ijkl` is `27 i + 9 j + 3 k + l`. The same order is
//! used by the JSON encoding (`{"order": 4, "data": [81 numbers]}`).

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use rand::{Rng, RngExt};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vec3 = [f64; 3];

/// Kronecker delta as a float.
#[inline]
pub fn delta(i: usize, j: usize) -> f64 {
    if i == j {
        1.0
    } else {
        0.0
    }
}

/// Flat row-major position of a multi-index of dimension three.
#[inline]
pub fn flat(index: &[usize]) -> usize {
    index.iter().fold(0, |acc, &i| acc * 3 + i)
}

/// Inverse of [`flat`] for a given tensor order.
pub fn unflat(mut pos: usize, order: usize) -> Vec<usize> {
    let mut index = vec![0; order];
    for slot in index.iter_mut().rev() {
        *slot = pos % 3;
        pos /= 3;
    }
    index
}

/// Read-only access shared by all tensor orders.
pub trait TensorData {
    fn order(&self) -> usize;
    fn as_slice(&self) -> &[f64];

    fn norm_inf(&self) -> f64 {
        self.as_slice().iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

fn check_finite(what: &str, data: &[f64]) -> Result<()> {
    match data.iter().position(|v| !v.is_finite()) {
        Some(index) => Err(Error::NonFinite {
            what: what.to_string(),
            index,
        }),
        None => Ok(()),
    }
}

fn check_len(what: &str, data: &[f64], expected: usize) -> Result<()> {
    if data.len() != expected {
        return Err(Error::Length {
            what: what.to_string(),
            expected,
            found: data.len(),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Matrix3

/// Second-order tensor (strain, wryness, stress, couple stress, ...).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Matrix3(pub [[f64; 3]; 3]);

impl Matrix3 {
    pub fn zeros() -> Self {
        Self([[0.0; 3]; 3])
    }

    pub fn identity() -> Self {
        Self::from_fn(delta)
    }

    /// Entries uniform in `[-1, 1]`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut m = Self::zeros();
        for row in m.0.iter_mut() {
            for v in row.iter_mut() {
                *v = rng.random_range(-1.0..=1.0);
            }
        }
        m
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = f(i, j);
            }
        }
        Self(m)
    }

    pub fn from_slice(data: &[f64]) -> Result<Self> {
        check_len("order-2 tensor", data, 9)?;
        check_finite("order-2 tensor", data)?;
        Ok(Self::from_fn(|i, j| data[3 * i + j]))
    }

    /// Skew tensor `W` with `W a = w ∧ a`.
    pub fn skew_from_axial(w: Vec3) -> Self {
        let e = levi_civita();
        Self::from_fn(|i, j| -(0..3).map(|k| e.get(i, j, k) * w[k]).sum::<f64>())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    pub fn sym(&self) -> Self {
        Self::from_fn(|i, j| 0.5 * (self.0[i][j] + self.0[j][i]))
    }

    pub fn skew(&self) -> Self {
        Self::from_fn(|i, j| 0.5 * (self.0[i][j] - self.0[j][i]))
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    /// Inner product `A · B = A_ij B_ij`.
    pub fn dot(&self, other: &Matrix3) -> f64 {
        let mut s = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                s += self.0[i][j] * other.0[i][j];
            }
        }
        s
    }

    /// `M_ij M_ji`, written `M · Mᵀ` in the mechanics literature.
    pub fn dot_transpose(&self) -> f64 {
        self.dot(&self.transpose())
    }

    pub fn deviatoric(&self) -> Self {
        let t = self.trace() / 3.0;
        Self::from_fn(|i, j| self.0[i][j] - t * delta(i, j))
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (0..3).all(|i| (0..3).all(|j| (self.0[i][j] - self.0[j][i]).abs() <= tol))
    }

    pub fn mul_vec(&self, v: Vec3) -> Vec3 {
        let mut out = [0.0; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..3).map(|j| self.0[i][j] * v[j]).sum();
        }
        out
    }
}

impl Index<(usize, usize)> for Matrix3 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Matrix3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.0[i][j]
    }
}

impl Add for Matrix3 {
    type Output = Matrix3;
    fn add(self, rhs: Matrix3) -> Matrix3 {
        Matrix3::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl Sub for Matrix3 {
    type Output = Matrix3;
    fn sub(self, rhs: Matrix3) -> Matrix3 {
        Matrix3::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl Mul<f64> for Matrix3 {
    type Output = Matrix3;
    fn mul(self, s: f64) -> Matrix3 {
        Matrix3::from_fn(|i, j| self.0[i][j] * s)
    }
}

impl Neg for Matrix3 {
    type Output = Matrix3;
    fn neg(self) -> Matrix3 {
        self * -1.0
    }
}

impl TensorData for Matrix3 {
    fn order(&self) -> usize {
        2
    }
    fn as_slice(&self) -> &[f64] {
        self.0.as_flattened()
    }
}

/// Scalar invariants of a second-order tensor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Invariants2 {
    pub trace: f64,
    /// `I₂(M) = ½((tr M)² − tr M²)`.
    pub i2: f64,
    /// `M_ij M_ji`.
    pub dot_transpose: f64,
}

pub fn invariants2(m: &Matrix3) -> Invariants2 {
    let trace = m.trace();
    let dt = m.dot_transpose();
    Invariants2 {
        trace,
        i2: 0.5 * (trace * trace - dt),
        dot_transpose: dt,
    }
}

// ---------------------------------------------------------------------------
// Tensor3

/// Third-order tensor: the alternator and the piezo couplings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tensor3(pub [f64; 27]);

impl Default for Tensor3 {
    fn default() -> Self {
        Self::zeros()
    }
}

impl Tensor3 {
    pub fn zeros() -> Self {
        Self([0.0; 27])
    }

    /// Entries uniform in `[-1, 1]`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut t = Self::zeros();
        for v in t.0.iter_mut() {
            *v = rng.random_range(-1.0..=1.0);
        }
        t
    }

    pub fn from_fn(f: impl Fn(usize, usize, usize) -> f64) -> Self {
        let mut t = [0.0; 27];
        for (pos, v) in t.iter_mut().enumerate() {
            *v = f(pos / 9, (pos / 3) % 3, pos % 3);
        }
        Self(t)
    }

    pub fn from_slice(data: &[f64]) -> Result<Self> {
        check_len("order-3 tensor", data, 27)?;
        check_finite("order-3 tensor", data)?;
        let mut t = [0.0; 27];
        t.copy_from_slice(data);
        Ok(Self(t))
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.0[9 * i + 3 * j + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: f64) {
        self.0[9 * i + 3 * j + k] = v;
    }

    /// `(T ε)_k = T_kij ε_ij`.
    pub fn contract_last2(&self, m: &Matrix3) -> Vec3 {
        let mut out = [0.0; 3];
        for (k, o) in out.iter_mut().enumerate() {
            for i in 0..3 {
                for j in 0..3 {
                    *o += self.get(k, i, j) * m[(i, j)];
                }
            }
        }
        out
    }

    /// Adjoint action `(Tᵀ e)_ij = T_kij e_k`.
    pub fn adjoint_apply(&self, e: Vec3) -> Matrix3 {
        Matrix3::from_fn(|i, j| (0..3).map(|k| self.get(k, i, j) * e[k]).sum())
    }
}

impl TensorData for Tensor3 {
    fn order(&self) -> usize {
        3
    }
    fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// The alternating tensor, `ᴇ_ijk = e_i · e_j ∧ e_k`.
pub fn levi_civita() -> Tensor3 {
    Tensor3::from_fn(|i, j, k| {
        // (j - i)(k - i)(k - j) / 2 on {0,1,2}
        let (i, j, k) = (i as i32, j as i32, k as i32);
        f64::from((j - i) * (k - i) * (k - j) / 2)
    })
}

// ---------------------------------------------------------------------------
// Tensor4

/// Fourth-order tensor: elastic moduli and their parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tensor4(pub [f64; 81]);

impl Default for Tensor4 {
    fn default() -> Self {
        Self::zeros()
    }
}

impl Tensor4 {
    pub fn zeros() -> Self {
        Self([0.0; 81])
    }

    pub fn from_fn(f: impl Fn(usize, usize, usize, usize) -> f64) -> Self {
        let mut t = [0.0; 81];
        for (pos, v) in t.iter_mut().enumerate() {
            *v = f(pos / 27, (pos / 9) % 3, (pos / 3) % 3, pos % 3);
        }
        Self(t)
    }

    pub fn from_slice(data: &[f64]) -> Result<Self> {
        check_len("order-4 tensor", data, 81)?;
        check_finite("order-4 tensor", data)?;
        let mut t = [0.0; 81];
        t.copy_from_slice(data);
        Ok(Self(t))
    }

    /// Entries uniform in `[-1, 1]`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut t = [0.0; 81];
        for v in t.iter_mut() {
            *v = rng.random_range(-1.0..=1.0);
        }
        Self(t)
    }

    /// `½(T + T_klij)` of a random tensor.
    pub fn random_major_symmetric<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let t = Self::random(rng);
        (t + t.major_transpose()) * 0.5
    }

    /// `δ_ik δ_jl`: maps every second-order tensor to itself.
    pub fn identity_pairing() -> Self {
        Self::from_fn(|i, j, k, l| delta(i, k) * delta(j, l))
    }

    /// `δ_il δ_jk`: maps a second-order tensor to its transpose.
    pub fn transposer() -> Self {
        Self::from_fn(|i, j, k, l| delta(i, l) * delta(j, k))
    }

    /// `δ_ij δ_kl`.
    pub fn trace_pairing() -> Self {
        Self::from_fn(|i, j, k, l| delta(i, j) * delta(k, l))
    }

    /// `a δ_ij δ_kl + b δ_ik δ_jl + c δ_il δ_jk`.
    pub fn isotropic(a: f64, b: f64, c: f64) -> Self {
        Self::from_fn(|i, j, k, l| {
            a * delta(i, j) * delta(k, l) + b * delta(i, k) * delta(j, l) + c * delta(i, l) * delta(j, k)
        })
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.0[27 * i + 9 * j + 3 * k + l]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, v: f64) {
        self.0[27 * i + 9 * j + 3 * k + l] = v;
    }

    /// `(T[M])_ij = T_ijkl M_kl`.
    pub fn apply(&self, m: &Matrix3) -> Matrix3 {
        Matrix3::from_fn(|i, j| {
            let mut s = 0.0;
            for k in 0..3 {
                for l in 0..3 {
                    s += self.get(i, j, k, l) * m[(k, l)];
                }
            }
            s
        })
    }

    /// `M · T[N]`.
    pub fn bilinear(&self, m: &Matrix3, n: &Matrix3) -> f64 {
        m.dot(&self.apply(n))
    }

    /// Entry-wise permutation `out_{idx} = T_{idx∘perm}`, i.e.
    /// `out[i0,i1,i2,i3] = T[i_perm[0], .., i_perm[3]]`.
    pub fn permuted(&self, perm: [usize; 4]) -> Self {
        Self::from_fn(|i, j, k, l| {
            let idx = [i, j, k, l];
            self.get(idx[perm[0]], idx[perm[1]], idx[perm[2]], idx[perm[3]])
        })
    }

    /// `T_klij`.
    pub fn major_transpose(&self) -> Self {
        self.permuted([2, 3, 0, 1])
    }

    /// `T_ilkj`.
    pub fn swap24(&self) -> Self {
        self.permuted([0, 3, 2, 1])
    }

    /// `T_kjil`.
    pub fn swap13(&self) -> Self {
        self.permuted([2, 1, 0, 3])
    }

    pub fn max_abs_diff(&self, other: &Tensor4) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|v| *v == 0.0)
    }
}

impl Add for Tensor4 {
    type Output = Tensor4;
    fn add(self, rhs: Tensor4) -> Tensor4 {
        let mut out = self;
        out.0.iter_mut().zip(rhs.0.iter()).for_each(|(a, b)| *a += b);
        out
    }
}

impl Sub for Tensor4 {
    type Output = Tensor4;
    fn sub(self, rhs: Tensor4) -> Tensor4 {
        let mut out = self;
        out.0.iter_mut().zip(rhs.0.iter()).for_each(|(a, b)| *a -= b);
        out
    }
}

impl Mul<f64> for Tensor4 {
    type Output = Tensor4;
    fn mul(self, s: f64) -> Tensor4 {
        let mut out = self;
        out.0.iter_mut().for_each(|a| *a *= s);
        out
    }
}

impl TensorData for Tensor4 {
    fn order(&self) -> usize {
        4
    }
    fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

// ---------------------------------------------------------------------------
// JSON encoding

/// Wire form of a tensor: `{"order": n, "data": [3^n numbers]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorJson {
    pub order: usize,
    pub data: Vec<f64>,
}

impl TensorJson {
    fn expect_order(&self, order: usize) -> Result<()> {
        if self.order != order {
            return Err(Error::Invalid(format!(
                "tensor order {} where order {order} was expected",
                self.order
            )));
        }
        Ok(())
    }
}

macro_rules! json_conversions {
    ($ty:ty, $order:expr) => {
        impl TryFrom<TensorJson> for $ty {
            type Error = Error;
            fn try_from(j: TensorJson) -> Result<Self> {
                j.expect_order($order)?;
                <$ty>::from_slice(&j.data)
            }
        }

        impl From<$ty> for TensorJson {
            fn from(t: $ty) -> TensorJson {
                TensorJson {
                    order: $order,
                    data: t.as_slice().to_vec(),
                }
            }
        }

        impl Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                TensorJson::from(*self).serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let j = TensorJson::deserialize(d)?;
                <$ty>::try_from(j).map_err(serde::de::Error::custom)
            }
        }
    };
}

json_conversions!(Matrix3, 2);
json_conversions!(Tensor3, 3);
json_conversions!(Tensor4, 4);
