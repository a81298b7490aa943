//! Conformal-Kähler, conformal-flatness and scalar-flat/isotropic criteria
//! for a context, reduced to explicit polynomial conditions.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::geometry::{exterior_derivative_1form, kulkarni_nomizu};
use crate::scalars::{rational, Polynomial, Rational};
use crate::tensor::Tensor;
use crate::twin::GeometryContext;

/// A set of normalized polynomials whose simultaneous vanishing is the
/// criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialCondition {
    pub polynomials: Vec<Polynomial>,
}

impl PolynomialCondition {
    /// Collects the distinct nonzero values up to a rational factor.
    pub fn from_values<'a, I: IntoIterator<Item = &'a Polynomial>>(values: I) -> Self {
        let mut polynomials: Vec<Polynomial> = Vec::new();
        for v in values {
            if v.is_zero() {
                continue;
            }
            let (_, n) = v.normalized();
            if !polynomials.contains(&n) {
                polynomials.push(n);
            }
        }
        polynomials.sort_by_key(|p| p.to_string());
        PolynomialCondition { polynomials }
    }

    /// Holds identically.
    pub fn holds(&self) -> bool {
        self.polynomials.is_empty()
    }

    pub fn holds_at(&self, assignment: &BTreeMap<String, Rational>) -> bool {
        self.polynomials
            .iter()
            .all(|p| p.substitute(assignment).is_zero())
    }

    pub fn union(&self, other: &PolynomialCondition) -> PolynomialCondition {
        PolynomialCondition::from_values(self.polynomials.iter().chain(&other.polynomials))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoleScalarConditions {
    pub scalar_curvature: Polynomial,
    pub nabla_j_sqnorm: Polynomial,
    /// `‖∇J‖ / τ` when both are nonzero and proportional.
    pub norm_to_scalar_ratio: Option<Rational>,
    pub condition: PolynomialCondition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem3Report {
    pub d_theta: Tensor,
    pub d_theta_star: Tensor,
    pub d_theta_twin: Tensor,
    pub d_theta_star_twin: Tensor,
    /// Both Lee forms closed, for both metrics.
    pub closed_lee_forms: PolynomialCondition,
    pub weyl_vanishes: bool,
    pub weyl_twin_vanishes: bool,
    /// `R = −1/(2(n−1)) g∧ρ + τ/(4(n−1)(2n−1)) g∧g`, and the same for `R̃`.
    pub curvature_form_holds: bool,
    pub curvature_form_twin_holds: bool,
    pub scalar_flat_isotropic: RoleScalarConditions,
    pub scalar_flat_isotropic_twin: RoleScalarConditions,
}

#[derive(Serialize)]
struct ConditionJson {
    polynomials: Vec<String>,
    holds: bool,
}

impl Theorem3Report {
    pub fn conformally_flat(&self) -> bool {
        self.weyl_vanishes
            && self.weyl_twin_vanishes
            && self.curvature_form_holds
            && self.curvature_form_twin_holds
    }

    /// Union of the scalar-flat/isotropic conditions of both metrics.
    pub fn scalar_flat_isotropic_union(&self) -> PolynomialCondition {
        self.scalar_flat_isotropic
            .condition
            .union(&self.scalar_flat_isotropic_twin.condition)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cond = |c: &PolynomialCondition| ConditionJson {
            polynomials: c.polynomials.iter().map(ToString::to_string).collect(),
            holds: c.holds(),
        };
        let role = |r: &RoleScalarConditions| {
            serde_json::json!({
                "scalar_curvature": r.scalar_curvature.to_string(),
                "nabla_j_sqnorm": r.nabla_j_sqnorm.to_string(),
                "norm_to_scalar_ratio": r.norm_to_scalar_ratio.as_ref().map(ToString::to_string),
                "condition": cond(&r.condition),
            })
        };
        serde_json::json!({
            "closed_lee_forms": cond(&self.closed_lee_forms),
            "conformally_flat": self.conformally_flat(),
            "weyl_vanishes": [self.weyl_vanishes, self.weyl_twin_vanishes],
            "curvature_form_holds": [self.curvature_form_holds, self.curvature_form_twin_holds],
            "scalar_flat_isotropic": role(&self.scalar_flat_isotropic),
            "scalar_flat_isotropic_twin": role(&self.scalar_flat_isotropic_twin),
        })
    }
}

fn ratio(a: &Polynomial, b: &Polynomial) -> Option<Rational> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let (ca, na) = a.normalized();
    let (cb, nb) = b.normalized();
    (na == nb).then(|| ca / cb)
}

fn curvature_form(r04: &Tensor, rho: &Tensor, tau: &Polynomial, g: &Tensor, n: i64) -> bool {
    let expected = kulkarni_nomizu(g, rho)
        .scale(&rational(-1, 2 * (n - 1)))
        .add(
            &kulkarni_nomizu(g, g)
                .scale_poly(tau)
                .scale(&rational(1, 4 * (n - 1) * (2 * n - 1))),
        );
    r04.first_difference(&expected).is_none()
}

pub fn theorem3_criteria(ctx: &GeometryContext) -> Theorem3Report {
    let spec = &ctx.spec;
    let n = spec.n() as i64;
    let o = &ctx.objects;
    let t = &ctx.objects_twin;
    let d_theta = exterior_derivative_1form(&o.theta, spec);
    let d_theta_star = exterior_derivative_1form(&o.theta_star, spec);
    let d_theta_twin = exterior_derivative_1form(&t.theta, spec);
    let d_theta_star_twin = exterior_derivative_1form(&t.theta_star, spec);
    let closed_lee_forms = PolynomialCondition::from_values(
        d_theta
            .components()
            .iter()
            .chain(d_theta_star.components())
            .chain(d_theta_twin.components())
            .chain(d_theta_star_twin.components()),
    );
    let role = |obj: &crate::norden::NordenObjects| RoleScalarConditions {
        scalar_curvature: obj.scalar_curvature.clone(),
        nabla_j_sqnorm: obj.nabla_j_sqnorm.clone(),
        norm_to_scalar_ratio: ratio(&obj.nabla_j_sqnorm, &obj.scalar_curvature),
        condition: PolynomialCondition::from_values([&obj.scalar_curvature, &obj.nabla_j_sqnorm]),
    };
    let (cf, cf_twin) = if n >= 2 {
        (
            curvature_form(&o.r04, &o.ricci, &o.scalar_curvature, ctx.metric.g(), n),
            curvature_form(&t.r04, &t.ricci, &t.scalar_curvature, ctx.twin_metric.g(), n),
        )
    } else {
        (false, false)
    };
    Theorem3Report {
        closed_lee_forms,
        weyl_vanishes: o.weyl.is_zero(),
        weyl_twin_vanishes: t.weyl.is_zero(),
        curvature_form_holds: cf,
        curvature_form_twin_holds: cf_twin,
        scalar_flat_isotropic: role(o),
        scalar_flat_isotropic_twin: role(t),
        d_theta,
        d_theta_star,
        d_theta_twin,
        d_theta_star_twin,
    }
}
