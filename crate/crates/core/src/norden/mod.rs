//! Norden-specific tensors built from a metric playing the role of `g`, its
//! Levi-Civita connection `∇`, and the connection `∇̃` of the associated
//! metric.
//!
//! All tensors follow the slot conventions of [`crate::tensor`]: (1,2) and
//! (1,3) tensors put the output vector last, so `Φ12[[x, y, k]]` is the k-th
//! component of `Φ(X_x, X_y)` and `Q13[[x, y, z, k]]` that of `Q(X_x,X_y)X_z`.

mod classes;
mod criteria;
mod main_class;

pub use classes::{basic_classes_from_f, class_conditions, classify, ClassConditions, ClassLabel};
pub use criteria::{theorem3_criteria, PolynomialCondition, RoleScalarConditions, Theorem3Report};
pub use main_class::{main_class_twin_f, w1_specials, MainClassForms};

use crate::error::{Error, Result};
use crate::geometry::{
    covariant_derivative, curvature, is_metric_compatible, lower_curvature, ricci_and_scalar,
    weyl, Connection, FrameSpec,
};
use crate::scalars::{rational, Polynomial};
use crate::tensor::{MetricPair, Tensor, Variance};

fn consistency(what: &str, index: Vec<usize>) -> Error {
    Error::Consistency {
        what: what.to_string(),
        index,
    }
}

fn ensure_equal(what: &str, a: &Tensor, b: &Tensor) -> Result<()> {
    match a.first_difference(b) {
        None => Ok(()),
        Some(i) => Err(consistency(what, i)),
    }
}

/// `F(x,y,z) = g((∇_x J) y, z)` without checking its symmetries.
pub fn fundamental_tensor(conn: &Connection, j: &Tensor, metric: &MetricPair) -> Tensor {
    covariant_derivative(conn, j)
        .lower_index(2, metric)
        .expect("(∇J) has an up output slot")
}

/// `F(x,y,z) = g((∇_x J) y, z)`, checked against
/// `F(x,y,z) = F(x,z,y) = F(x,Jy,Jz)`.
pub fn fundamental_f(conn: &Connection, spec: &FrameSpec, metric: &MetricPair) -> Result<Tensor> {
    let f = fundamental_tensor(conn, spec.j(), metric);
    check_f_symmetries(&f, spec.j())?;
    Ok(f)
}

pub fn check_f_symmetries(f: &Tensor, j: &Tensor) -> Result<()> {
    ensure_equal("F(x,y,z)=F(x,z,y)", f, &f.permute(&[0, 2, 1]))?;
    ensure_equal(
        "F(x,y,z)=F(x,Jy,Jz)",
        f,
        &f.compose_slot(1, j).compose_slot(2, j),
    )
}

/// Lee forms `θ(z) = g^{ij}F(e_i,e_j,z)` and `θ*(z) = g^{ij}F(e_i,Je_j,z)`.
pub fn lee_forms(f: &Tensor, metric: &MetricPair, spec: &FrameSpec) -> Result<(Tensor, Tensor)> {
    let theta = f.trace_with(0, 1, metric)?;
    let theta_star = f.compose_slot(1, spec.j()).trace_with(0, 1, metric)?;
    Ok((theta, theta_star))
}

/// `Φ(x,y) = ∇̃_x y − ∇_x y`, and `Φ(x,y,z) = g(Φ(x,y),z)`. Both inputs must
/// be torsion-free, which shows up as symmetry of the difference.
pub fn potential_phi(
    conn: &Connection,
    conn_twin: &Connection,
    metric: &MetricPair,
) -> Result<(Tensor, Tensor)> {
    let phi12 = conn_twin.gamma().sub(conn.gamma());
    if let Some(i) = phi12.first_difference(&phi12.permute(&[1, 0, 2])) {
        return Err(Error::Structural(format!(
            "potential is not symmetric at {}; an input connection has torsion",
            crate::error::format_index(&i)
        )));
    }
    let phi03 = phi12.lower_index(2, metric)?;
    Ok((phi12, phi03))
}

/// `Φ(x,y,z) = ½{F(Jz,x,y) − F(x,y,Jz) − F(y,x,Jz)}`.
pub fn phi_from_f(f: &Tensor, j: &Tensor) -> Tensor {
    let fj0 = f.compose_slot(0, j);
    let fj2 = f.compose_slot(2, j);
    let half = rational(1, 2);
    Tensor::from_fn(f.dim(), Variance::down(3), |i| {
        let (x, y, z) = (i[0], i[1], i[2]);
        (fj0.get(&[z, x, y]) - fj2.get(&[x, y, z]) - fj2.get(&[y, x, z])).scale(&half)
    })
}

/// `F(x,y,z) = Φ(x,y,Jz) + Φ(x,z,Jy)`.
pub fn f_from_phi(phi03: &Tensor, j: &Tensor) -> Tensor {
    let pj = phi03.compose_slot(2, j);
    Tensor::from_fn(phi03.dim(), Variance::down(3), |i| {
        pj.get(&[i[0], i[1], i[2]]) + pj.get(&[i[0], i[2], i[1]])
    })
}

/// `f(z) = g^{ij}Φ(e_i,e_j,z)` and `f*(z) = g^{ij}Φ(e_i,Je_j,z)`.
pub fn f_forms(phi03: &Tensor, metric: &MetricPair, spec: &FrameSpec) -> Result<(Tensor, Tensor)> {
    let f = phi03.trace_with(0, 1, metric)?;
    let f_star = phi03.compose_slot(1, spec.j()).trace_with(0, 1, metric)?;
    Ok((f, f_star))
}

/// `{J,J}`-type combination `B(Jx,Jy) − B(x,y) − J B(Jx,y) − J B(x,Jy)` of a
/// bilinear vector-valued map.
fn j_bracket_form(b: &Tensor, j: &Tensor) -> Tensor {
    let bjj = b.compose_slot(0, j).compose_slot(1, j);
    let jbj0 = b.compose_slot(0, j).compose_slot(2, j);
    let jbj1 = b.compose_slot(1, j).compose_slot(2, j);
    bjj.sub(b).sub(&jbj0).sub(&jbj1)
}

/// Nijenhuis tensor `N(x,y) = [Jx,Jy] − [x,y] − J[Jx,y] − J[x,Jy]`.
pub fn nijenhuis(spec: &FrameSpec) -> Tensor {
    j_bracket_form(spec.brackets(), spec.j())
}

/// Associated Nijenhuis tensor `S(x,y) = {Jx,Jy} − {x,y} − J{Jx,y} − J{x,Jy}`
/// with `{x,y} = ∇_x y + ∇_y x`.
pub fn associated_nijenhuis(conn: &Connection, spec: &FrameSpec) -> Tensor {
    let gamma = conn.gamma();
    let braces = gamma.add(&gamma.permute(&[1, 0, 2]));
    j_bracket_form(&braces, spec.j())
}

/// `‖∇J‖ = g^{ij} g^{kl} g^{pq} F_{ikp} F_{jlq}`.
pub fn square_norm_nabla_j(f: &Tensor, metric: &MetricPair) -> Result<Polynomial> {
    let up = f
        .raise_index(0, metric)?
        .raise_index(1, metric)?
        .raise_index(2, metric)?;
    Ok(f.components()
        .iter()
        .zip(up.components())
        .map(|(a, b)| a * b)
        .sum())
}

/// `A(x,y)z = Φ(x,Φ(y,z)) − Φ(y,Φ(x,z))`.
pub fn a_tensor(phi12: &Tensor) -> Tensor {
    let dim = phi12.dim();
    // Φ(x, Φ(y,z))^l = Σ_m Φ(y,z)^m Φ(x,e_m)^l
    let nested = Tensor::from_fn(dim, Variance::vector_valued(3), |i| {
        let (x, y, z, l) = (i[0], i[1], i[2], i[3]);
        (0..dim)
            .map(|m| phi12.get(&[y, z, m]) * phi12.get(&[x, m, l]))
            .sum()
    });
    nested.sub(&nested.permute(&[1, 0, 2, 3]))
}

/// `Q(x,y)z = (∇_xΦ)(y,z) − (∇_yΦ)(x,z) + Φ(x,Φ(y,z)) − Φ(y,Φ(x,z))`.
pub fn q_tensor(conn: &Connection, phi12: &Tensor) -> Tensor {
    let nabla_phi = covariant_derivative(conn, phi12);
    nabla_phi
        .sub(&nabla_phi.permute(&[1, 0, 2, 3]))
        .add(&a_tensor(phi12))
}

/// `D = ½(∇ + ∇̃)`.
pub fn average_connection(conn: &Connection, conn_twin: &Connection) -> Connection {
    Connection::new(conn.gamma().add(conn_twin.gamma()).scale(&rational(1, 2)))
        .expect("sum of connection coefficients")
}

/// `P(x,y)z = R(x,y)z + ½Q(x,y)z`.
pub fn p_tensor(r13: &Tensor, q13: &Tensor) -> Tensor {
    r13.add(&q13.scale(&rational(1, 2)))
}

/// `R + ½Q − ¼A`.
pub fn k_from_parts(r13: &Tensor, q13: &Tensor, a13: &Tensor) -> Tensor {
    r13.add(&q13.scale(&rational(1, 2)))
        .sub(&a13.scale(&rational(1, 4)))
}

/// Curvature of the average connection, cross-checked against
/// `R + ½Q − ¼A`.
pub fn k_tensor(
    d: &Connection,
    spec: &FrameSpec,
    r13: &Tensor,
    q13: &Tensor,
    a13: &Tensor,
) -> Result<Tensor> {
    let k = curvature(d, spec);
    ensure_equal("K = R + ½Q − ¼A", &k, &k_from_parts(r13, q13, a13))?;
    Ok(k)
}

/// Every object attached to one choice of the metric playing `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NordenObjects {
    pub fundamental: Tensor,
    pub phi12: Tensor,
    pub phi03: Tensor,
    pub theta: Tensor,
    pub theta_star: Tensor,
    pub f: Tensor,
    pub f_star: Tensor,
    pub n12: Tensor,
    pub s12: Tensor,
    pub nabla_j_sqnorm: Polynomial,
    pub r13: Tensor,
    pub r04: Tensor,
    pub ricci: Tensor,
    pub scalar_curvature: Polynomial,
    pub weyl: Tensor,
    pub q13: Tensor,
    pub a13: Tensor,
    pub k13: Tensor,
    pub p13: Tensor,
    pub d: Connection,
}

impl NordenObjects {
    /// Builds every object from `metric`, its connection `conn` and the
    /// connection `conn_other` of the associated metric. No identities are
    /// enforced here; see [`NordenObjects::verify`].
    pub fn compute(
        spec: &FrameSpec,
        metric: &MetricPair,
        conn: &Connection,
        conn_other: &Connection,
    ) -> Result<Self> {
        let j = spec.j();
        let fundamental = fundamental_tensor(conn, j, metric);
        let (theta, theta_star) = lee_forms(&fundamental, metric, spec)?;
        let phi12 = conn_other.gamma().sub(conn.gamma());
        let phi03 = phi12.lower_index(2, metric)?;
        let (f, f_star) = f_forms(&phi03, metric, spec)?;
        let n12 = nijenhuis(spec);
        let s12 = associated_nijenhuis(conn, spec);
        let nabla_j_sqnorm = square_norm_nabla_j(&fundamental, metric)?;
        let r13 = curvature(conn, spec);
        let r04 = lower_curvature(&r13, metric)?;
        let (ricci, scalar_curvature) = ricci_and_scalar(&r04, metric)?;
        let weyl = weyl(&r04, metric)?;
        let q13 = q_tensor(conn, &phi12);
        let a13 = a_tensor(&phi12);
        let d = average_connection(conn, conn_other);
        let k13 = curvature(&d, spec);
        let p13 = p_tensor(&r13, &q13);
        Ok(NordenObjects {
            fundamental,
            phi12,
            phi03,
            theta,
            theta_star,
            f,
            f_star,
            n12,
            s12,
            nabla_j_sqnorm,
            r13,
            r04,
            ricci,
            scalar_curvature,
            weyl,
            q13,
            a13,
            k13,
            p13,
            d,
        })
    }

    /// Enforces the identities that hold on every almost Norden manifold for
    /// objects built from a Levi-Civita pair. A failure signals a convention
    /// bug or a non-Levi-Civita input.
    pub fn verify(&self, spec: &FrameSpec, metric: &MetricPair, conn: &Connection) -> Result<()> {
        let j = spec.j();
        if !conn.is_torsion_free(spec) {
            let i = conn.torsion(spec).first_nonzero().unwrap_or_default();
            return Err(consistency("torsion-free ∇", i));
        }
        if !is_metric_compatible(conn, metric) {
            return Err(consistency("∇g = 0", Vec::new()));
        }
        check_f_symmetries(&self.fundamental, j)?;
        ensure_equal("Φ(x,y)=Φ(y,x)", &self.phi12, &self.phi12.permute(&[1, 0, 2]))?;
        ensure_equal("Φ from F", &self.phi03, &phi_from_f(&self.fundamental, j))?;
        ensure_equal("F from Φ", &self.fundamental, &f_from_phi(&self.phi03, j))?;
        ensure_equal(
            "θ* = −θ∘J",
            &self.theta_star,
            &self.theta.compose_slot(0, j).neg(),
        )?;
        ensure_equal("f = θ*", &self.f, &self.theta_star)?;
        ensure_equal("f* = −θ", &self.f_star, &self.theta.neg())?;
        ensure_equal("f(z) = f*(Jz)", &self.f, &self.f_star.compose_slot(0, j))?;
        ensure_equal(
            "K = R + ½Q − ¼A",
            &self.k13,
            &k_from_parts(&self.r13, &self.q13, &self.a13),
        )?;
        ensure_equal(
            "K = P − ¼A",
            &self.k13,
            &self.p13.sub(&self.a13.scale(&rational(1, 4))),
        )
    }

    pub fn class(&self, metric: &MetricPair, spec: &FrameSpec) -> ClassLabel {
        classify(&self.phi03, &self.f, metric, spec)
    }
}
