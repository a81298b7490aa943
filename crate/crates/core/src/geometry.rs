//! Differential geometry of a Lie group presented by a left-invariant frame.
//!
//! Every vector field is a constant combination of the frame `X_1..X_{2n}`,
//! so directional derivatives of component functions vanish and all
//! constructions reduce to algebra on the structure constants
//! `[X_i, X_j] = c^k_{ij} X_k`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalars::{int, rational, Polynomial, Rational, Vars};
use crate::tensor::{MetricPair, Slot, Tensor, Variance};

/// Complete description of an almost Norden Lie algebra: structure
/// constants, almost complex structure and metric, over a frame of even
/// dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameSpec {
    params: Vars,
    /// `brackets[[i, j, k]] = c^k_{ij}`.
    brackets: Tensor,
    j: Tensor,
    g: Tensor,
}

impl FrameSpec {
    /// Assembles a spec after shape checks only. Use [`FrameSpec::validate`]
    /// for the algebraic conditions.
    pub fn new(params: Vars, brackets: Tensor, j: Tensor, g: Tensor) -> Result<Self> {
        let dim = j.dim();
        if dim == 0 || !dim.is_multiple_of(2) {
            return Err(Error::Structural("dimension must be even".into()));
        }
        if brackets.dim() != dim || g.dim() != dim {
            return Err(Error::Structural("inconsistent dimensions".into()));
        }
        if brackets.variance() != &Variance::vector_valued(2) {
            return Err(Error::Structural("brackets must be a (1,2) tensor".into()));
        }
        if j.variance() != &Variance::vector_valued(1) {
            return Err(Error::Structural("J must be a (1,1) tensor".into()));
        }
        if g.variance() != &Variance::down(2) {
            return Err(Error::Structural("g must be a (0,2) tensor".into()));
        }
        Ok(FrameSpec {
            params,
            brackets,
            j,
            g,
        })
    }

    pub fn dim(&self) -> usize {
        self.j.dim()
    }

    /// Half the dimension.
    pub fn n(&self) -> usize {
        self.dim() / 2
    }

    pub fn params(&self) -> &Vars {
        &self.params
    }

    pub fn brackets(&self) -> &Tensor {
        &self.brackets
    }

    pub fn j(&self) -> &Tensor {
        &self.j
    }

    pub fn g(&self) -> &Tensor {
        &self.g
    }

    pub fn metric(&self) -> Result<MetricPair> {
        MetricPair::new(self.g.clone())
    }

    /// `[X_i, X_j]` as a component vector.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<Polynomial> {
        (0..self.dim())
            .map(|k| self.brackets.get(&[i, j, k]).clone())
            .collect()
    }

    pub fn validate(&self) -> ValidationReport {
        validate_spec(self)
    }

    pub fn validated(self) -> Result<Self> {
        self.validate().into_result()?;
        Ok(self)
    }

    /// Replaces (some of) the parameters by rational values.
    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> FrameSpec {
        FrameSpec {
            params: self.params.clone(),
            brackets: self.brackets.substitute(assignment),
            j: self.j.substitute(assignment),
            g: self.g.substitute(assignment),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationCheck {
    pub condition: &'static str,
    pub passed: bool,
    /// First violating 0-based index tuple.
    pub violation: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
    /// `[JX_i, JX_j] = [X_i, X_j]` for all i, j. Informational only.
    pub abelian_j: bool,
}

pub const COND_ANTISYMMETRY: &str = "bracket antisymmetry";
pub const COND_JACOBI: &str = "Jacobi identity";
pub const COND_J_SQUARED: &str = "J²=−I";
pub const COND_METRIC_SYMMETRIC: &str = "metric symmetry";
pub const COND_NORDEN: &str = "Norden condition g(Jx,Jy)=−g(x,y)";
pub const COND_NONDEGENERATE: &str = "rational nondegenerate metric";

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, condition: &str) -> Option<&ValidationCheck> {
        self.checks.iter().find(|c| c.condition == condition)
    }

    pub fn first_failure(&self) -> Option<&ValidationCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn into_result(self) -> Result<()> {
        match self.first_failure() {
            None => Ok(()),
            Some(c) => Err(Error::Validation {
                condition: c.condition.to_string(),
                index: c.violation.clone().unwrap_or_default(),
            }),
        }
    }
}

fn outcome(condition: &'static str, violation: Option<Vec<usize>>) -> ValidationCheck {
    ValidationCheck {
        condition,
        passed: violation.is_none(),
        violation,
    }
}

pub fn validate_spec(spec: &FrameSpec) -> ValidationReport {
    let dim = spec.dim();
    let c = &spec.brackets;
    let j = &spec.j;

    let antisym = c.first_difference(&c.permute(&[1, 0, 2]).neg());

    let mut jacobi = None;
    'outer: for a in 0..dim {
        for b in a + 1..dim {
            for d in b + 1..dim {
                for l in 0..dim {
                    // [[a,b],d] + [[b,d],a] + [[d,a],b]
                    let mut sum = Polynomial::zero();
                    for m in 0..dim {
                        sum = sum
                            + c.get(&[a, b, m]) * c.get(&[m, d, l])
                            + c.get(&[b, d, m]) * c.get(&[m, a, l])
                            + c.get(&[d, a, m]) * c.get(&[m, b, l]);
                    }
                    if !sum.is_zero() {
                        jacobi = Some(vec![a, b, d]);
                        break 'outer;
                    }
                }
            }
        }
    }

    let j_squared = j.compose_slot(1, j).first_difference(&Tensor::identity(dim).neg());
    let g = &spec.g;
    let g_sym = g.first_difference(&g.permute(&[1, 0]));
    let norden = g
        .compose_slot(0, j)
        .compose_slot(1, j)
        .first_difference(&g.neg());
    let nondegenerate = match MetricPair::new(g.clone()) {
        Ok(_) => None,
        Err(_) => Some(Vec::new()),
    };

    let abelian_j = c
        .compose_slot(0, j)
        .compose_slot(1, j)
        .first_difference(c)
        .is_none();

    ValidationReport {
        checks: vec![
            outcome(COND_ANTISYMMETRY, antisym),
            outcome(COND_JACOBI, jacobi),
            outcome(COND_J_SQUARED, j_squared),
            outcome(COND_METRIC_SYMMETRIC, g_sym),
            outcome(COND_NORDEN, norden),
            outcome(COND_NONDEGENERATE, nondegenerate),
        ],
        abelian_j,
    }
}

/// `g̃(x, y) = g(x, J y)` for any (0,2) tensor `g`.
pub fn associated_metric(g: &Tensor, j: &Tensor) -> Tensor {
    g.compose_slot(1, j)
}

pub fn twin_metric(spec: &FrameSpec) -> Tensor {
    associated_metric(&spec.g, &spec.j)
}

/// Coefficients `Γ^k_{ij}` with `∇_{X_i} X_j = Γ^k_{ij} X_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    gamma: Tensor,
}

impl Connection {
    pub fn new(gamma: Tensor) -> Result<Self> {
        if gamma.variance() != &Variance::vector_valued(2) {
            return Err(Error::Structural("connection coefficients must be (1,2)".into()));
        }
        Ok(Connection { gamma })
    }

    pub fn zero(dim: usize) -> Self {
        Connection {
            gamma: Tensor::zeros(dim, Variance::vector_valued(2)),
        }
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    pub fn gamma(&self) -> &Tensor {
        &self.gamma
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &Polynomial {
        self.gamma.get(&[i, j, k])
    }

    /// `∇_{X_i} X_j` as a component vector.
    pub fn derivative(&self, i: usize, j: usize) -> Vec<Polynomial> {
        (0..self.dim()).map(|k| self.coefficient(i, j, k).clone()).collect()
    }

    pub fn with_coefficient(&self, i: usize, j: usize, k: usize, value: Polynomial) -> Connection {
        let mut gamma = self.gamma.clone();
        gamma.set(&[i, j, k], value);
        Connection { gamma }
    }

    /// `T(x, y) = ∇_x y − ∇_y x − [x, y]`.
    pub fn torsion(&self, spec: &FrameSpec) -> Tensor {
        self.gamma
            .sub(&self.gamma.permute(&[1, 0, 2]))
            .sub(spec.brackets())
    }

    pub fn is_torsion_free(&self, spec: &FrameSpec) -> bool {
        self.torsion(spec).is_zero()
    }

    pub fn substitute(&self, assignment: &BTreeMap<String, Rational>) -> Connection {
        Connection {
            gamma: self.gamma.substitute(assignment),
        }
    }
}

/// Levi-Civita connection of `metric` via the Koszul formula. Left
/// invariance kills the derivative terms, leaving
/// `2 g(∇_x y, z) = g([x,y],z) + g([z,x],y) + g([z,y],x)`.
pub fn levi_civita(spec: &FrameSpec, metric: &MetricPair) -> Result<Connection> {
    let low = spec.brackets.lower_index(2, metric)?;
    let half = rational(1, 2);
    let koszul = Tensor::from_fn(spec.dim(), Variance::down(3), |idx| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        (low.get(&[x, y, z]) + low.get(&[z, x, y]) + low.get(&[z, y, x])).scale(&half)
    });
    Connection::new(koszul.raise_index(2, metric)?)
}

/// Covariant derivative of an invariant tensor (constant frame components).
/// The derivative direction becomes a new leading down slot.
pub fn covariant_derivative(conn: &Connection, t: &Tensor) -> Tensor {
    let dim = t.dim();
    let rank = t.rank();
    let mut slots = vec![Slot::Down];
    slots.extend_from_slice(t.variance().slots());
    let mut src = vec![0; rank];
    Tensor::from_fn(dim, Variance::new(slots), |idx| {
        let a = idx[0];
        let base = &idx[1..];
        let mut sum = Polynomial::zero();
        for (s, slot) in t.variance().slots().iter().enumerate() {
            src.copy_from_slice(base);
            for m in 0..dim {
                let (gamma, sign) = match slot {
                    // + Γ^k_{am} T^{..m..}
                    Slot::Up => (conn.coefficient(a, m, base[s]), 1),
                    // − Γ^m_{a i} T_{..m..}
                    Slot::Down => (conn.coefficient(a, base[s], m), -1),
                };
                if gamma.is_zero() {
                    continue;
                }
                src[s] = m;
                let term = gamma * t.get(&src);
                sum = if sign > 0 { sum + term } else { sum - term };
            }
        }
        sum
    })
}

/// `R(x,y)z = ∇_x∇_y z − ∇_y∇_x z − ∇_{[x,y]} z` as a (1,3) tensor with
/// slots `(x, y, z, out)`.
pub fn curvature(conn: &Connection, spec: &FrameSpec) -> Tensor {
    let dim = spec.dim();
    let c = spec.brackets();
    Tensor::from_fn(dim, Variance::vector_valued(3), |idx| {
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        let mut sum = Polynomial::zero();
        for m in 0..dim {
            sum = sum + conn.coefficient(j, k, m) * conn.coefficient(i, m, l)
                - conn.coefficient(i, k, m) * conn.coefficient(j, m, l)
                - c.get(&[i, j, m]) * conn.coefficient(m, k, l);
        }
        sum
    })
}

/// `R(x,y,z,w) = g(R(x,y)z, w)`.
pub fn lower_curvature(r13: &Tensor, metric: &MetricPair) -> Result<Tensor> {
    r13.lower_index(3, metric)
}

/// Returns the first violated identity and index tuple, if any.
pub fn curvature_like_violation(t: &Tensor) -> Option<(&'static str, Vec<usize>)> {
    assert_eq!(t.variance(), &Variance::down(4), "expected a (0,4) tensor");
    if let Some(i) = t.first_difference(&t.permute(&[1, 0, 2, 3]).neg()) {
        return Some(("R(x,y,z,w)=−R(y,x,z,w)", i));
    }
    if let Some(i) = t.first_difference(&t.permute(&[0, 1, 3, 2]).neg()) {
        return Some(("R(x,y,z,w)=−R(x,y,w,z)", i));
    }
    // R(y,z,x,w): result slot order (x,y,z,w) reads source (y,z,x,w)
    let cyc1 = t.permute(&[2, 0, 1, 3]);
    let cyc2 = t.permute(&[1, 2, 0, 3]);
    let bianchi = t.add(&cyc1).add(&cyc2);
    bianchi.first_nonzero().map(|i| ("first Bianchi identity", i))
}

pub fn curvature_like_check(t: &Tensor) -> bool {
    curvature_like_violation(t).is_none()
}

/// Ricci tensor `ρ(y,z) = g^{ij} R(e_i,y,z,e_j)` and scalar curvature
/// `τ = g^{ij} ρ(e_i,e_j)` of a (0,4) tensor.
pub fn ricci_and_scalar(r04: &Tensor, metric: &MetricPair) -> Result<(Tensor, Polynomial)> {
    let rho = r04.trace_with(0, 3, metric)?;
    let tau = rho.trace_with(0, 1, metric)?;
    Ok((rho, tau.value().clone()))
}

/// `(a∧b)(x,y,z,w) = a(x,z)b(y,w) − a(y,z)b(x,w) + a(y,w)b(x,z) − a(x,w)b(y,z)`.
pub fn kulkarni_nomizu(a: &Tensor, b: &Tensor) -> Tensor {
    Tensor::from_fn(a.dim(), Variance::down(4), |idx| {
        let (x, y, z, w) = (idx[0], idx[1], idx[2], idx[3]);
        a.get(&[x, z]) * b.get(&[y, w]) - a.get(&[y, z]) * b.get(&[x, w])
            + a.get(&[y, w]) * b.get(&[x, z])
            - a.get(&[x, w]) * b.get(&[y, z])
    })
}

/// `W = R + 1/(2(n−1)) g∧ρ − τ/(4(n−1)(2n−1)) g∧g` in dimension `2n ≥ 4`.
pub fn weyl(r04: &Tensor, metric: &MetricPair) -> Result<Tensor> {
    let dim = r04.dim();
    if dim < 4 || !dim.is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "Weyl tensor needs even dimension at least 4, got {dim}"
        )));
    }
    let n = (dim / 2) as i64;
    let (rho, tau) = ricci_and_scalar(r04, metric)?;
    let g = metric.g();
    let g_rho = kulkarni_nomizu(g, &rho).scale(&rational(1, 2 * (n - 1)));
    let g_g = kulkarni_nomizu(g, g)
        .scale_poly(&tau)
        .scale(&rational(1, 4 * (n - 1) * (2 * n - 1)));
    Ok(r04.add(&g_rho).sub(&g_g))
}

/// `dω(X_i, X_j) = −ω([X_i, X_j])` for an invariant 1-form.
pub fn exterior_derivative_1form(omega: &Tensor, spec: &FrameSpec) -> Tensor {
    assert_eq!(omega.variance(), &Variance::down(1), "expected a 1-form");
    let c = spec.brackets();
    let minus = int(-1);
    Tensor::from_fn(spec.dim(), Variance::down(2), |idx| {
        let s: Polynomial = (0..spec.dim())
            .map(|k| c.get(&[idx[0], idx[1], k]) * omega.get(&[k]))
            .sum();
        s.scale(&minus)
    })
}

/// Checks `∇g = 0`.
pub fn is_metric_compatible(conn: &Connection, metric: &MetricPair) -> bool {
    covariant_derivative(conn, metric.g()).is_zero()
}

/// Frame components of a vector as a (1,0) tensor.
pub fn vector(components: Vec<Polynomial>) -> Tensor {
    let dim = components.len();
    Tensor::from_components(dim, Variance::new(vec![Slot::Up]), components)
        .expect("vector arity matches")
}
