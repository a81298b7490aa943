//! Dense tensors over a frame `X_1..X_{2n}`.
//!
//! Components are stored row-major with slot 0 as the most significant
//! index. Slot 0 is the leftmost argument, so a (0,3) tensor `T` has
//! `T[[i, j, k]] = T(X_i, X_j, X_k)`. Tensors that map arguments to a vector
//! put the output (up) slot last: a (1,2) tensor `B` has
//! `B[[i, j, k]] = (B(X_i, X_j))^k`, a (1,1) endomorphism `E` has
//! `E[[i, k]] = (E X_i)^k`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Up,
    Down,
}

impl Slot {
    pub fn flipped(self) -> Slot {
        match self {
            Slot::Up => Slot::Down,
            Slot::Down => Slot::Up,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variance(Vec<Slot>);

impl Variance {
    pub fn new(slots: Vec<Slot>) -> Self {
        Variance(slots)
    }

    pub fn scalar() -> Self {
        Variance(Vec::new())
    }

    pub fn down(rank: usize) -> Self {
        Variance(vec![Slot::Down; rank])
    }

    /// `down` covariant slots followed by one up slot.
    pub fn vector_valued(down: usize) -> Self {
        let mut v = vec![Slot::Down; down];
        v.push(Slot::Up);
        Variance(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.0
    }

    pub fn count_up(&self) -> usize {
        self.0.iter().filter(|s| **s == Slot::Up).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    variance: Variance,
    components: Vec<Polynomial>,
}

/// Iterates all multi-indices in `[0, dim)^rank` in row-major order.
pub fn multi_indices(dim: usize, rank: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(rank as u32);
    (0..total).map(move |mut flat| {
        let mut idx = vec![0; rank];
        for slot in (0..rank).rev() {
            idx[slot] = flat % dim;
            flat /= dim;
        }
        idx
    })
}

impl Tensor {
    pub fn zeros(dim: usize, variance: Variance) -> Self {
        let n = dim.pow(variance.rank() as u32);
        Tensor {
            dim,
            variance,
            components: vec![Polynomial::zero(); n],
        }
    }

    pub fn from_fn<F>(dim: usize, variance: Variance, mut f: F) -> Self
    where
        F: FnMut(&[usize]) -> Polynomial,
    {
        let components = multi_indices(dim, variance.rank())
            .map(|idx| f(&idx))
            .collect();
        Tensor {
            dim,
            variance,
            components,
        }
    }

    pub fn from_components(dim: usize, variance: Variance, components: Vec<Polynomial>) -> Result<Self> {
        if components.len() != dim.pow(variance.rank() as u32) {
            return Err(Error::Structural(format!(
                "{} components for rank {} in dimension {dim}",
                components.len(),
                variance.rank()
            )));
        }
        Ok(Tensor {
            dim,
            variance,
            components,
        })
    }

    pub fn scalar(value: Polynomial) -> Self {
        Tensor {
            dim: 1,
            variance: Variance::scalar(),
            components: vec![value],
        }
    }

    /// The identity endomorphism as a (1,1) tensor.
    pub fn identity(dim: usize) -> Self {
        Tensor::from_fn(dim, Variance::vector_valued(1), |i| {
            if i[0] == i[1] {
                Polynomial::one()
            } else {
                Polynomial::zero()
            }
        })
    }

    /// A (0,2) tensor from a matrix `m[i][j] = T(X_i, X_j)`.
    pub fn bilinear_from_matrix(m: &[Vec<Polynomial>]) -> Result<Self> {
        let dim = m.len();
        if m.iter().any(|row| row.len() != dim) {
            return Err(Error::Structural("matrix is not square".into()));
        }
        Ok(Tensor::from_fn(dim, Variance::down(2), |i| m[i[0]][i[1]].clone()))
    }

    /// A (1,1) endomorphism from its matrix: column `j` holds the components
    /// of the image of `X_j`, i.e. `m[k][j] = (E X_j)^k`.
    pub fn endomorphism_from_matrix(m: &[Vec<Polynomial>]) -> Result<Self> {
        let dim = m.len();
        if m.iter().any(|row| row.len() != dim) {
            return Err(Error::Structural("matrix is not square".into()));
        }
        Ok(Tensor::from_fn(dim, Variance::vector_valued(1), |i| {
            m[i[1]][i[0]].clone()
        }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.variance.rank()
    }

    pub fn variance(&self) -> &Variance {
        &self.variance
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank());
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Polynomial {
        &self.components[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Polynomial) {
        let k = self.flat(idx);
        self.components[k] = value;
    }

    /// Scalar value of a rank-0 tensor.
    pub fn value(&self) -> &Polynomial {
        assert_eq!(self.rank(), 0, "value() on a tensor of rank {}", self.rank());
        &self.components[0]
    }

    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> {
        multi_indices(self.dim, self.rank())
    }

    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &Polynomial)> {
        self.indices().zip(self.components.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        self.entries().find(|(_, p)| !p.is_zero()).map(|(i, _)| i)
    }

    /// First index at which two same-shaped tensors disagree.
    pub fn first_difference(&self, other: &Tensor) -> Option<Vec<usize>> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        self.entries()
            .zip(other.components.iter())
            .find(|((_, a), b)| a != b)
            .map(|((i, _), _)| i)
    }

    pub fn map<F: FnMut(&Polynomial) -> Polynomial>(&self, f: F) -> Tensor {
        Tensor {
            dim: self.dim,
            variance: self.variance.clone(),
            components: self.components.iter().map(f).collect(),
        }
    }

    fn check_same_shape(&self, other: &Tensor) -> Result<()> {
        if self.dim != other.dim || self.variance != other.variance {
            return Err(Error::Structural(format!(
                "shape mismatch: dim {} {:?} vs dim {} {:?}",
                self.dim,
                self.variance.slots(),
                other.dim,
                other.variance.slots()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Tensor) -> Result<Tensor> {
        self.check_same_shape(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(Tensor {
            dim: self.dim,
            variance: self.variance.clone(),
            components,
        })
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        self.checked_add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Tensor {
        self.map(|p| -p)
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        self.map(|p| p.scale(c))
    }

    pub fn scale_poly(&self, c: &Polynomial) -> Tensor {
        self.map(|p| p * c)
    }

    pub fn outer(&self, other: &Tensor) -> Tensor {
        assert!(
            self.rank() == 0 || other.rank() == 0 || self.dim == other.dim,
            "dimension mismatch"
        );
        let dim = if self.rank() == 0 { other.dim } else { self.dim };
        let mut slots = self.variance.0.clone();
        slots.extend_from_slice(&other.variance.0);
        let r = self.rank();
        Tensor::from_fn(dim, Variance(slots), |idx| {
            self.get(&idx[..r]) * other.get(&idx[r..])
        })
    }

    /// Contracts an up slot against a down slot.
    pub fn contract(&self, slot_a: usize, slot_b: usize) -> Result<Tensor> {
        let rank = self.rank();
        if slot_a >= rank || slot_b >= rank {
            return Err(Error::Structural(format!(
                "contraction slots ({slot_a},{slot_b}) out of range for rank {rank}"
            )));
        }
        if slot_a == slot_b {
            return Err(Error::Structural("cannot contract a slot with itself".into()));
        }
        let slots = self.variance.slots();
        if slots[slot_a] == slots[slot_b] {
            return Err(Error::Structural(format!(
                "slots {slot_a} and {slot_b} have the same variance"
            )));
        }
        let kept: Vec<Slot> = slots
            .iter()
            .enumerate()
            .filter(|(s, _)| *s != slot_a && *s != slot_b)
            .map(|(_, v)| *v)
            .collect();
        let mut full = vec![0; rank];
        Ok(Tensor::from_fn(self.dim, Variance(kept), |idx| {
            let mut rest = idx.iter();
            for (s, v) in full.iter_mut().enumerate() {
                if s != slot_a && s != slot_b {
                    *v = *rest.next().expect("index arity");
                }
            }
            let mut sum = Polynomial::zero();
            for m in 0..self.dim {
                full[slot_a] = m;
                full[slot_b] = m;
                sum = sum + self.get(&full);
            }
            sum
        }))
    }

    /// Rearranges slots: slot `s` of the result is slot `perm[s]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.rank(), "permutation arity");
        let slots = perm.iter().map(|&p| self.variance.0[p]).collect();
        let mut src = vec![0; self.rank()];
        Tensor::from_fn(self.dim, Variance(slots), |idx| {
            for (s, &p) in perm.iter().enumerate() {
                src[p] = idx[s];
            }
            self.get(&src).clone()
        })
    }

    /// Inserts an endomorphism `E` at `slot`. On a down slot the argument is
    /// replaced by `E x`; on an up slot `E` is applied to the output vector.
    pub fn compose_slot(&self, slot: usize, endo: &Tensor) -> Tensor {
        assert_eq!(endo.variance, Variance::vector_valued(1), "expected a (1,1) tensor");
        assert_eq!(endo.dim, self.dim, "dimension mismatch");
        let up = self.variance.0[slot] == Slot::Up;
        let mut src = vec![0; self.rank()];
        Tensor::from_fn(self.dim, self.variance.clone(), |idx| {
            src.copy_from_slice(idx);
            let a = idx[slot];
            let mut sum = Polynomial::zero();
            for m in 0..self.dim {
                // down: T(.., E e_a, ..) = E[a][m] T(.., e_m, ..)
                // up:   (E v)^a = E[m][a] v^m
                let e = if up { endo.get(&[m, a]) } else { endo.get(&[a, m]) };
                if e.is_zero() {
                    continue;
                }
                src[slot] = m;
                sum = sum + e * self.get(&src);
            }
            sum
        })
    }

    pub fn lower_index(&self, slot: usize, metric: &MetricPair) -> Result<Tensor> {
        self.move_index(slot, Slot::Up, metric.g())
    }

    pub fn raise_index(&self, slot: usize, metric: &MetricPair) -> Result<Tensor> {
        self.move_index(slot, Slot::Down, metric.inverse())
    }

    fn move_index(&self, slot: usize, expected: Slot, m: &Tensor) -> Result<Tensor> {
        if slot >= self.rank() {
            return Err(Error::Structural(format!("slot {slot} out of range")));
        }
        if self.variance.0[slot] != expected {
            return Err(Error::Structural(format!(
                "slot {slot} is {:?}, cannot move it",
                self.variance.0[slot]
            )));
        }
        let mut slots = self.variance.0.clone();
        slots[slot] = expected.flipped();
        let mut src = vec![0; self.rank()];
        Ok(Tensor::from_fn(self.dim, Variance(slots), |idx| {
            src.copy_from_slice(idx);
            let a = idx[slot];
            let mut sum = Polynomial::zero();
            for k in 0..self.dim {
                let mk = m.get(&[a, k]);
                if mk.is_zero() {
                    continue;
                }
                src[slot] = k;
                sum = sum + mk * self.get(&src);
            }
            sum
        }))
    }

    /// Full metric trace over two down slots: `g^{ab} T(.., e_a, .., e_b, ..)`.
    pub fn trace_with(&self, slot_a: usize, slot_b: usize, metric: &MetricPair) -> Result<Tensor> {
        self.raise_index(slot_a, metric)?.contract(slot_a, slot_b)
    }

    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> Tensor {
        self.map(|p| p.substitute(assignment))
    }

    /// Rows `i j k : value` with 1-based indices.
    pub fn table_rows(&self, include_zero: bool) -> Vec<(Vec<usize>, &Polynomial)> {
        self.entries()
            .filter(|(_, p)| include_zero || !p.is_zero())
            .map(|(i, p)| (i.iter().map(|x| x + 1).collect(), p))
            .collect()
    }

    pub fn to_table_text(&self, include_zero: bool) -> String {
        let mut out = String::new();
        for (idx, p) in self.table_rows(include_zero) {
            let label: Vec<String> = idx.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{} : {}", label.join(" "), p);
        }
        out
    }

    pub fn to_table_csv(&self, include_zero: bool) -> String {
        let mut out = String::new();
        let header: Vec<String> = (0..self.rank()).map(|s| format!("i{}", s + 1)).collect();
        let _ = writeln!(out, "{},value", header.join(","));
        for (idx, p) in self.table_rows(include_zero) {
            let label: Vec<String> = idx.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{},{}", label.join(","), p);
        }
        out
    }
}

/// A rational, symmetric, nondegenerate (0,2) metric with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricPair {
    g: Tensor,
    g_inv: Tensor,
}

impl MetricPair {
    pub fn new(g: Tensor) -> Result<Self> {
        let g_inv = metric_inverse(&g)?;
        Ok(MetricPair { g, g_inv })
    }

    pub fn g(&self) -> &Tensor {
        &self.g
    }

    pub fn inverse(&self) -> &Tensor {
        &self.g_inv
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    /// `g(x, y)` for frame vectors.
    pub fn at(&self, i: usize, j: usize) -> &Polynomial {
        self.g.get(&[i, j])
    }

    pub fn neg(&self) -> MetricPair {
        MetricPair {
            g: self.g.neg(),
            g_inv: self.g_inv.neg(),
        }
    }
}

/// Exact inverse of a rational symmetric (0,2) metric, as a (2,0) tensor.
pub fn metric_inverse(g: &Tensor) -> Result<Tensor> {
    if g.rank() != 2 || g.variance().slots() != [Slot::Down, Slot::Down] {
        return Err(Error::Structural("metric must be a (0,2) tensor".into()));
    }
    let n = g.dim();
    let mut a: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(2 * n);
        for j in 0..n {
            if g.get(&[i, j]) != g.get(&[j, i]) {
                return Err(Error::Structural(format!(
                    "metric is not symmetric at ({},{})",
                    i + 1,
                    j + 1
                )));
            }
            row.push(g.get(&[i, j]).constant_value().ok_or(Error::UnsupportedMetric)?);
        }
        row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
        a.push(row);
    }
    // Gauss-Jordan over the rationals
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::DegenerateMetric)?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..2 * n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    Ok(Tensor::from_fn(
        n,
        Variance::new(vec![Slot::Up, Slot::Up]),
        |i| Polynomial::constant(a[i[0]][n + i[1]].clone()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, vars};

    fn diag(entries: &[i64]) -> Tensor {
        Tensor::from_fn(entries.len(), Variance::down(2), |i| {
            if i[0] == i[1] {
                Polynomial::from_int(entries[i[0]])
            } else {
                Polynomial::zero()
            }
        })
    }

    fn matrix(rows: &[[i64; 4]]) -> Tensor {
        Tensor::from_fn(4, Variance::down(2), |i| Polynomial::from_int(rows[i[0]][i[1]]))
    }

    #[test]
    fn trace_of_identity() {
        let id = Tensor::identity(4);
        let tr = id.contract(0, 1).unwrap();
        assert_eq!(tr.rank(), 0);
        assert_eq!(tr.value(), &Polynomial::from_int(4));
    }

    #[test]
    fn inverse_times_metric_is_identity() {
        let g = matrix(&[[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]]);
        let m = MetricPair::new(g.clone()).unwrap();
        // g^{ik} g_{kj}: slots (i up, k up, k down, j down) contract 1 with 2
        let prod = m.inverse().outer(&g).contract(1, 2).unwrap();
        assert_eq!(prod.variance().slots(), [Slot::Up, Slot::Down]);
        let id = Tensor::identity(4).permute(&[1, 0]);
        assert_eq!(prod, id);
    }

    #[test]
    fn inverse_examples() {
        let g = diag(&[1, 1, -1, -1]);
        let inv = metric_inverse(&g).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(inv.get(&[i, j]), g.get(&[i, j]));
            }
        }
        // antidiagonal -1 blocks: entries at (1,3),(3,1),(2,4),(4,2)
        let tg = matrix(&[[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]]);
        let inv = metric_inverse(&tg).unwrap();
        let expected = [[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(inv.get(&[i, j]), &Polynomial::from_int(expected[i][j]));
            }
        }
        let id = diag(&[1, 1, 1, 1]);
        assert_eq!(metric_inverse(&id).unwrap().components(), id.components());
    }

    #[test]
    fn inverse_of_non_diagonal_metric() {
        // brute-force check of g * g^-1 = I over a non-trivial rational metric
        let g = matrix(&[[2, 1, 0, 0], [1, 0, 3, 0], [0, 3, -1, 1], [0, 0, 1, 5]]);
        let inv = metric_inverse(&g).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let s: Polynomial = (0..4).map(|k| g.get(&[i, k]) * inv.get(&[k, j])).sum();
                let e = if i == j { 1 } else { 0 };
                assert_eq!(s, Polynomial::from_int(e));
            }
        }
        let back = metric_inverse(&inv.relabel_down()).unwrap();
        assert_eq!(back.components(), g.components());
    }

    #[test]
    fn metric_errors() {
        let v = vars(&["a"]);
        let mut g = diag(&[1, 1, -1, -1]);
        g.set(&[0, 0], Polynomial::var(&v, 0));
        assert_eq!(metric_inverse(&g), Err(Error::UnsupportedMetric));
        assert_eq!(metric_inverse(&diag(&[1, 0, -1, -1])), Err(Error::DegenerateMetric));
        let mut asym = diag(&[1, 1, 1, 1]);
        asym.set(&[0, 1], Polynomial::from_int(2));
        assert!(matches!(metric_inverse(&asym), Err(Error::Structural(_))));
    }

    #[test]
    fn raise_and_lower_one_form() {
        // f = (-4 l4, -4 l3, 4 l2, 4 l1) raised with diag(1,1,-1,-1)
        let v = vars(&["l1", "l2", "l3", "l4"]);
        let l = |k: usize, c: i64| Polynomial::var(&v, k).scale(&int(c));
        let f = Tensor::from_components(
            4,
            Variance::down(1),
            vec![l(3, -4), l(2, -4), l(1, 4), l(0, 4)],
        )
        .unwrap();
        let m = MetricPair::new(diag(&[1, 1, -1, -1])).unwrap();
        let sharp = f.raise_index(0, &m).unwrap();
        let expected = [l(3, -4), l(2, -4), l(1, -4), l(0, -4)];
        assert_eq!(sharp.components(), expected);
        assert_eq!(sharp.lower_index(0, &m).unwrap(), f);
    }

    #[test]
    fn variance_errors() {
        let m = MetricPair::new(diag(&[1, 1, -1, -1])).unwrap();
        let t = Tensor::zeros(4, Variance::down(2));
        assert!(t.lower_index(0, &m).is_err());
        assert!(t.contract(0, 1).is_err());
        assert!(t.contract(0, 2).is_err());
        let id = Tensor::identity(4);
        assert!(id.contract(1, 1).is_err());
    }

    #[test]
    fn compose_slot_on_up_and_down() {
        // J X1 = X3, J X3 = -X1 in dimension 4 (plus X2 <-> X4)
        let mut j = Tensor::zeros(4, Variance::vector_valued(1));
        j.set(&[0, 2], Polynomial::one());
        j.set(&[1, 3], Polynomial::one());
        j.set(&[2, 0], Polynomial::from_int(-1));
        j.set(&[3, 1], Polynomial::from_int(-1));
        let id = Tensor::identity(4);
        // J∘id on the output slot and id∘J on the input slot both give J
        assert_eq!(id.compose_slot(1, &j), j);
        assert_eq!(id.compose_slot(0, &j), j);
        let jj = j.compose_slot(1, &j);
        assert_eq!(jj, Tensor::identity(4).neg());
    }

    #[test]
    fn table_emission() {
        let mut t = Tensor::zeros(2, Variance::down(2));
        t.set(&[0, 1], Polynomial::from_int(3));
        assert_eq!(t.to_table_text(false), "1 2 : 3\n");
        assert_eq!(t.to_table_text(true).lines().count(), 4);
        assert_eq!(t.to_table_csv(false), "i1,i2,value\n1,2,3\n");
    }

    impl Tensor {
        fn relabel_down(&self) -> Tensor {
            Tensor::from_components(self.dim, Variance::down(self.rank()), self.components.clone())
                .unwrap()
        }
    }
}
