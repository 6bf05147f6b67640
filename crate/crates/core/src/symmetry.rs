//! Index-symmetry classes for tensors of order 3 and 4.
//!
//! A [`SymmetryClass`] is plain data: a list of signed index permutations
//! `T_{π(idx)} = s T_idx` and zero predicates `T_idx = 0 if idx_a = idx_b`.
//! Every relation is checked by enumerating all index tuples.
//!
//! Two projectors are provided. [`SymmetryClass::project`] averages over the
//! finite group generated by the permutation relations (Reynolds operator)
//! and then clears the group-closed zero set. [`LinearConstraints`] projects
//! orthogonally onto the kernel of an arbitrary set of linear equations on
//! the entries, which covers conditions involving the alternator.

use std::collections::BTreeSet;
use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::tensor::{flat, unflat, TensorData};

/// One linear relation on tensor entries.
#[derive(Clone, Debug, PartialEq)]
pub enum Relation {
    /// `T[idx∘perm] = sign · T[idx]` for every index tuple.
    Permutation { perm: Vec<usize>, sign: f64 },
    /// `T[idx] = 0` whenever `idx[a] == idx[b]` for any listed position pair.
    ZeroIf { pairs: Vec<(usize, usize)> },
}

impl Relation {
    fn order_ok(&self, order: usize) -> bool {
        match self {
            Relation::Permutation { perm, .. } => {
                let mut seen = perm.clone();
                seen.sort_unstable();
                seen == (0..order).collect::<Vec<_>>()
            }
            Relation::ZeroIf { pairs } => pairs.iter().all(|&(a, b)| a < order && b < order),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [char; 4] = ['i', 'j', 'k', 'l'];
        match self {
            Relation::Permutation { perm, sign } => {
                let lhs: String = NAMES[..perm.len()].iter().collect();
                let rhs: String = perm.iter().map(|&p| NAMES[p]).collect();
                let s = if *sign < 0.0 { "-" } else { "" };
                write!(f, "T_{rhs} = {s}T_{lhs}")
            }
            Relation::ZeroIf { pairs } => {
                let preds: Vec<String> = pairs
                    .iter()
                    .map(|&(a, b)| format!("{}={}", NAMES[a], NAMES[b]))
                    .collect();
                write!(f, "T = 0 if {}", preds.join(" or "))
            }
        }
    }
}

/// A named finite set of relations on entries of a tensor of fixed order.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryClass {
    pub name: String,
    pub order: usize,
    pub relations: Vec<Relation>,
}

impl SymmetryClass {
    pub fn new(name: impl Into<String>, order: usize, relations: Vec<Relation>) -> Self {
        assert!(
            order == 3 || order == 4,
            "symmetry classes are defined for orders 3 and 4"
        );
        assert!(
            relations.iter().all(|r| r.order_ok(order)),
            "relation does not match tensor order"
        );
        Self {
            name: name.into(),
            order,
            relations,
        }
    }

    fn perm4(name: &str, perm: [usize; 4], sign: f64) -> Self {
        Self::new(
            name,
            4,
            vec![Relation::Permutation {
                perm: perm.to_vec(),
                sign,
            }],
        )
    }

    /// `T_ijkl = T_klij`.
    pub fn major() -> Self {
        Self::perm4("MAJOR", [2, 3, 0, 1], 1.0)
    }

    /// `T_ijkl = T_jikl`.
    pub fn minor_left() -> Self {
        Self::perm4("MINOR_LEFT", [1, 0, 2, 3], 1.0)
    }

    /// `T_ijkl = T_ijlk`.
    pub fn minor_right() -> Self {
        Self::perm4("MINOR_RIGHT", [0, 1, 3, 2], 1.0)
    }

    /// `T_ilkj = -T_ijkl`.
    pub fn swap24_anti() -> Self {
        Self::perm4("SWAP24_ANTI", [0, 3, 2, 1], -1.0)
    }

    /// `T_kjil = -T_ijkl`.
    pub fn swap13_anti() -> Self {
        Self::perm4("SWAP13_ANTI", [2, 1, 0, 3], -1.0)
    }

    /// `T_ijkl = 0` if `i = k` or `j = l`.
    pub fn zero_if_ik_or_jl() -> Self {
        Self::new(
            "ZERO_IF_IK_OR_JL",
            4,
            vec![Relation::ZeroIf {
                pairs: vec![(0, 2), (1, 3)],
            }],
        )
    }

    /// `T_ijkl = 0` if `j = l`.
    pub fn zero_if_jl() -> Self {
        Self::new("ZERO_IF_JL", 4, vec![Relation::ZeroIf { pairs: vec![(1, 3)] }])
    }

    /// Look up a preset by its name.
    pub fn named(name: &str) -> Option<Self> {
        Some(match name {
            "MAJOR" => Self::major(),
            "MINOR_LEFT" => Self::minor_left(),
            "MINOR_RIGHT" => Self::minor_right(),
            "SWAP24_ANTI" => Self::swap24_anti(),
            "SWAP13_ANTI" => Self::swap13_anti(),
            "ZERO_IF_IK_OR_JL" => Self::zero_if_ik_or_jl(),
            "ZERO_IF_JL" => Self::zero_if_jl(),
            _ => return None,
        })
    }

    /// Conjunction of several classes of the same order.
    pub fn all_of(name: impl Into<String>, parts: &[SymmetryClass]) -> Self {
        let order = parts.first().map_or(4, |p| p.order);
        assert!(parts.iter().all(|p| p.order == order));
        let relations = parts.iter().flat_map(|p| p.relations.iter().cloned()).collect();
        Self::new(name, order, relations)
    }

    /// The class obeyed by the null part `B̃` of a major-symmetric tensor.
    pub fn tilde() -> Self {
        Self::all_of(
            "TILDE",
            &[
                Self::major(),
                Self::swap24_anti(),
                Self::swap13_anti(),
                Self::zero_if_ik_or_jl(),
            ],
        )
    }

    /// Largest violation of each relation, in declaration order.
    pub fn violations(&self, t: &dyn TensorData) -> Vec<f64> {
        assert_eq!(t.order(), self.order, "tensor order does not match symmetry class");
        let data = t.as_slice();
        self.relations
            .iter()
            .map(|rel| relation_violation(rel, data, self.order))
            .collect()
    }

    /// Images of the entry `idx` under the relation group: each pair
    /// `(image, s)` means `T[image] = s · T[idx]` for tensors of the class.
    pub fn orbit(&self, idx: &[usize]) -> Vec<(Vec<usize>, f64)> {
        assert_eq!(idx.len(), self.order);
        self.group()
            .into_iter()
            .map(|(p, s)| (p.iter().map(|&pi| idx[pi]).collect(), s))
            .collect()
    }

    /// Whether a zero predicate of the class applies to `idx` directly.
    pub fn zero_predicate(&self, idx: &[usize]) -> bool {
        self.relations.iter().any(|r| match r {
            Relation::ZeroIf { pairs } => pairs.iter().any(|&(a, b)| idx[a] == idx[b]),
            Relation::Permutation { .. } => false,
        })
    }

    /// The group generated by the permutation relations, as (perm, sign) pairs.
    fn group(&self) -> Vec<(Vec<usize>, f64)> {
        let gens: Vec<(Vec<usize>, f64)> = self
            .relations
            .iter()
            .filter_map(|r| match r {
                Relation::Permutation { perm, sign } => Some((perm.clone(), *sign)),
                Relation::ZeroIf { .. } => None,
            })
            .collect();
        let identity: Vec<usize> = (0..self.order).collect();
        let mut elems: Vec<(Vec<usize>, f64)> = vec![(identity, 1.0)];
        let mut frontier = elems.clone();
        while let Some((p, s)) = frontier.pop() {
            for (g, gs) in &gens {
                // composing two index maps: (idx∘p)∘g
                let comp: Vec<usize> = g.iter().map(|&gi| p[gi]).collect();
                let cs = s * gs;
                if !elems.iter().any(|(e, es)| *e == comp && *es == cs) {
                    elems.push((comp.clone(), cs));
                    frontier.push((comp, cs));
                }
            }
        }
        elems
    }

    /// Orthogonal projection onto the class by group averaging.
    ///
    /// Test utility: tensors produced this way satisfy every relation of the
    /// class exactly (violation 0).
    pub fn project(&self, data: &[f64]) -> Vec<f64> {
        let n = 3usize.pow(self.order as u32);
        assert_eq!(data.len(), n);
        let group = self.group();
        let inv = 1.0 / group.len() as f64;

        // zero set closed under the group
        let mut zero: BTreeSet<usize> = BTreeSet::new();
        for rel in &self.relations {
            if let Relation::ZeroIf { pairs } = rel {
                for pos in 0..n {
                    let idx = unflat(pos, self.order);
                    if pairs.iter().any(|&(a, b)| idx[a] == idx[b]) {
                        for (p, _) in &group {
                            let image: Vec<usize> = p.iter().map(|&pi| idx[pi]).collect();
                            zero.insert(flat(&image));
                        }
                        zero.insert(pos);
                    }
                }
            }
        }

        let mut out = vec![0.0; n];
        for (pos, o) in out.iter_mut().enumerate() {
            if zero.contains(&pos) {
                continue;
            }
            let idx = unflat(pos, self.order);
            let mut acc = 0.0;
            for (p, s) in &group {
                let image: Vec<usize> = p.iter().map(|&pi| idx[pi]).collect();
                acc += s * data[flat(&image)];
            }
            *o = acc * inv;
        }
        out
    }

    /// Number of entries forced to zero by the class (group-closed).
    pub fn structural_zero_count(&self) -> usize {
        let n = 3usize.pow(self.order as u32);
        let probe: Vec<f64> = (0..n).map(|p| (1.0 + p as f64).sqrt().fract() + 0.5).collect();
        // an entry is structurally zero iff its projection vanishes for a generic input
        self.project(&probe).iter().filter(|v| v.abs() < 1e-14).count()
    }
}

fn relation_violation(rel: &Relation, data: &[f64], order: usize) -> f64 {
    let n = data.len();
    let mut worst = 0.0f64;
    for (pos, &value) in data.iter().enumerate().take(n) {
        let idx = unflat(pos, order);
        let v = match rel {
            Relation::Permutation { perm, sign } => {
                let image: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
                (data[flat(&image)] - sign * value).abs()
            }
            Relation::ZeroIf { pairs } => {
                if pairs.iter().any(|&(a, b)| idx[a] == idx[b]) {
                    value.abs()
                } else {
                    0.0
                }
            }
        };
        worst = worst.max(v);
    }
    worst
}

/// Largest violation over all relations of `class`; 0 means the class holds exactly.
pub fn check_symmetry(t: &dyn TensorData, class: &SymmetryClass) -> f64 {
    class.violations(t).into_iter().fold(0.0, f64::max)
}

/// A homogeneous system of linear equations on the entries of a flattened tensor.
#[derive(Clone, Debug)]
pub struct LinearConstraints {
    dim: usize,
    rows: Vec<Vec<(usize, f64)>>,
}

impl LinearConstraints {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Add the equation `Σ coeff · x[pos] = 0`; repeated positions are summed.
    pub fn push(&mut self, terms: impl IntoIterator<Item = (usize, f64)>) {
        let mut dense: Vec<(usize, f64)> = Vec::new();
        for (pos, c) in terms {
            assert!(pos < self.dim);
            match dense.iter_mut().find(|(p, _)| *p == pos) {
                Some((_, acc)) => *acc += c,
                None => dense.push((pos, c)),
            }
        }
        dense.retain(|(_, c)| *c != 0.0);
        if !dense.is_empty() {
            self.rows.push(dense);
        }
    }

    pub fn extend(&mut self, other: &LinearConstraints) {
        assert_eq!(self.dim, other.dim);
        self.rows.extend(other.rows.iter().cloned());
    }

    /// Adds the relations of a symmetry class as equations.
    pub fn push_class(&mut self, class: &SymmetryClass) {
        let order = class.order;
        assert_eq!(self.dim, 3usize.pow(order as u32));
        for rel in &class.relations {
            for pos in 0..self.dim {
                let idx = unflat(pos, order);
                match rel {
                    Relation::Permutation { perm, sign } => {
                        let image: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
                        self.push([(flat(&image), 1.0), (pos, -sign)]);
                    }
                    Relation::ZeroIf { pairs } => {
                        if pairs.iter().any(|&(a, b)| idx[a] == idx[b]) {
                            self.push([(pos, 1.0)]);
                        }
                    }
                }
            }
        }
    }

    /// Max over equations of `|Σ coeff · x[pos]|`.
    pub fn max_residual(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.dim);
        self.rows
            .iter()
            .map(|r| r.iter().map(|(p, c)| c * x[*p]).sum::<f64>().abs())
            .fold(0.0, f64::max)
    }

    /// Orthonormal basis of the solution space, one column per basis vector.
    pub fn kernel_basis(&self) -> DMatrix<f64> {
        let n = self.dim;
        let mut gram = DMatrix::<f64>::zeros(n, n);
        for row in &self.rows {
            for &(p, a) in row {
                for &(q, b) in row {
                    gram[(p, q)] += a * b;
                }
            }
        }
        let scale = gram.amax().max(1.0);
        let eig = SymmetricEigen::new(gram);
        let cols: Vec<usize> = (0..n).filter(|&c| eig.eigenvalues[c].abs() <= 1e-9 * scale).collect();
        let mut basis = DMatrix::<f64>::zeros(n, cols.len());
        for (dst, &src) in cols.iter().enumerate() {
            basis.set_column(dst, &eig.eigenvectors.column(src));
        }
        basis
    }

    pub fn projector(&self) -> Projector {
        Projector {
            basis: self.kernel_basis(),
        }
    }
}

/// Orthogonal projector onto the kernel of a [`LinearConstraints`] system.
#[derive(Clone, Debug)]
pub struct Projector {
    basis: DMatrix<f64>,
}

impl Projector {
    /// Dimension of the solution space.
    pub fn rank(&self) -> usize {
        self.basis.ncols()
    }

    pub fn project(&self, x: &[f64]) -> Vec<f64> {
        let n = self.basis.nrows();
        assert_eq!(x.len(), n);
        if self.basis.ncols() == 0 {
            return vec![0.0; n];
        }
        let v = nalgebra::DVector::from_column_slice(x);
        let coeffs = self.basis.transpose() * v;
        (&self.basis * coeffs).as_slice().to_vec()
    }
}
