//! The twin interchange: swapping `(g, ∇)` with `(g̃, ∇̃)`.
//!
//! Tilde objects are produced by running the same constructors with the
//! roles swapped. The relations between the two sides are then checked as
//! polynomial identities by [`invariance_suite`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{curvature, levi_civita, twin_metric, Connection, FrameSpec};
use crate::norden::{k_from_parts, p_tensor, ClassLabel, NordenObjects};
use crate::scalars::rational;
use crate::tensor::{MetricPair, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryContext {
    pub spec: FrameSpec,
    /// The metric currently playing `g`.
    pub metric: MetricPair,
    /// The metric currently playing `g̃`.
    pub twin_metric: MetricPair,
    pub conn: Connection,
    pub conn_twin: Connection,
    pub objects: NordenObjects,
    pub objects_twin: NordenObjects,
}

/// Validates `spec` and builds both roles, enforcing the identities every
/// Levi-Civita pair must satisfy.
pub fn build_context(spec: &FrameSpec) -> Result<GeometryContext> {
    spec.validate().into_result()?;
    let metric = spec.metric()?;
    let twin = MetricPair::new(twin_metric(spec))?;
    let ctx = GeometryContext::from_roles(spec.clone(), metric, twin)?;
    ctx.verify()?;
    Ok(ctx)
}

impl GeometryContext {
    fn from_roles(spec: FrameSpec, metric: MetricPair, twin: MetricPair) -> Result<Self> {
        let conn = levi_civita(&spec, &metric)?;
        let conn_twin = levi_civita(&spec, &twin)?;
        let objects = NordenObjects::compute(&spec, &metric, &conn, &conn_twin)?;
        let objects_twin = NordenObjects::compute(&spec, &twin, &conn_twin, &conn)?;
        Ok(GeometryContext {
            spec,
            metric,
            twin_metric: twin,
            conn,
            conn_twin,
            objects,
            objects_twin,
        })
    }

    /// Internal consistency of both roles plus `R̃ = R + Q`.
    pub fn verify(&self) -> Result<()> {
        self.objects.verify(&self.spec, &self.metric, &self.conn)?;
        self.objects_twin
            .verify(&self.spec, &self.twin_metric, &self.conn_twin)?;
        let r_plus_q = self.objects.r13.add(&self.objects.q13);
        if let Some(i) = self.objects_twin.r13.first_difference(&r_plus_q) {
            return Err(Error::Consistency {
                what: "R̃ = R + Q".into(),
                index: i,
            });
        }
        Ok(())
    }

    /// Replaces `∇` by an arbitrary connection and recomputes the primary
    /// role only, leaving the twin role as built. Used to probe the suite
    /// with corrupted inputs.
    pub fn with_connection_override(&self, conn: Connection) -> Result<Self> {
        let objects = NordenObjects::compute(&self.spec, &self.metric, &conn, &self.conn_twin)?;
        Ok(GeometryContext {
            conn,
            objects,
            ..self.clone()
        })
    }

    pub fn class(&self) -> ClassLabel {
        self.objects.class(&self.metric, &self.spec)
    }

    pub fn twin_class(&self) -> ClassLabel {
        self.objects_twin.class(&self.twin_metric, &self.spec)
    }
}

/// Context with the roles exchanged. The new twin metric is the associated
/// metric of `g̃`, which is `−g`; its Levi-Civita connection is `∇` again.
pub fn twin_of(ctx: &GeometryContext) -> Result<GeometryContext> {
    let spec = ctx.spec.clone();
    let new_twin = MetricPair::new(crate::geometry::associated_metric(
        ctx.twin_metric.g(),
        spec.j(),
    ))?;
    let conn_twin = levi_civita(&spec, &new_twin)?;
    let objects_twin =
        NordenObjects::compute(&spec, &new_twin, &conn_twin, &ctx.conn_twin)?;
    Ok(GeometryContext {
        spec,
        metric: ctx.twin_metric.clone(),
        twin_metric: new_twin,
        conn: ctx.conn_twin.clone(),
        conn_twin,
        objects: ctx.objects_twin.clone(),
        objects_twin,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    InvariantVerified,
    AntiInvariantVerified,
    Failed,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::InvariantVerified => "invariant-verified",
            CheckStatus::AntiInvariantVerified => "anti-invariant-verified",
            CheckStatus::Failed => "failed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub number: usize,
    pub name: &'static str,
    /// The identity being verified.
    pub statement: &'static str,
    pub status: CheckStatus,
    /// Which sub-identity failed and where (1-based indices).
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Failed
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub checks: Vec<CheckResult>,
}

impl InvarianceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, number: usize) -> &CheckResult {
        &self.checks[number - 1]
    }
}

/// Sub-identities of a check; the first failing one is reported.
struct Identities(Vec<(&'static str, Option<Vec<usize>>)>);

impl Identities {
    fn new() -> Self {
        Identities(Vec::new())
    }

    fn equal(mut self, label: &'static str, a: &Tensor, b: &Tensor) -> Self {
        self.0.push((label, a.first_difference(b)));
        self
    }

    fn holds(mut self, label: &'static str, ok: bool) -> Self {
        self.0.push((label, if ok { None } else { Some(Vec::new()) }));
        self
    }

    fn failure(&self) -> Option<String> {
        self.0.iter().find_map(|(label, at)| {
            at.as_ref().map(|idx| {
                if idx.is_empty() {
                    (*label).to_string()
                } else {
                    format!("{label} at {}", crate::error::format_index(idx))
                }
            })
        })
    }
}

const CHECKS: [(&str, &str, CheckStatus); 13] = [
    ("potential", "Φ̃(x,y) = −Φ(x,y), Φ̃(x,y,z) = −Φ(x,y,Jz)", CheckStatus::AntiInvariantVerified),
    ("fundamental-tensor", "F̃(x,y,z) = ½{F(Jy,z,x) − F(y,Jz,x) + F(Jz,y,x) − F(z,Jy,x)}", CheckStatus::InvariantVerified),
    ("potential-forms", "f̃ = f, f̃* = f*", CheckStatus::InvariantVerified),
    ("lee-forms", "θ̃ = θ, θ̃* = θ*", CheckStatus::InvariantVerified),
    ("class", "class(g) = class(g̃)", CheckStatus::InvariantVerified),
    ("average-connection", "D̃ = D", CheckStatus::InvariantVerified),
    ("nijenhuis", "Ñ(x,y) = N(x,y), Ñ(x,y,z) = N(x,y,Jz)", CheckStatus::InvariantVerified),
    ("associated-nijenhuis", "S̃(x,y) = −S(x,y), S̃(x,y,z) = −S(x,y,Jz)", CheckStatus::AntiInvariantVerified),
    ("A-tensor", "Ã = A", CheckStatus::InvariantVerified),
    ("Q-tensor", "Q̃ = −Q", CheckStatus::AntiInvariantVerified),
    ("K-tensor", "K̃ = R̃ + ½Q̃ − ¼Ã = K", CheckStatus::InvariantVerified),
    ("P-tensor", "P̃ = R̃ + ½Q̃ = P", CheckStatus::InvariantVerified),
    ("vanishing-criteria", "K = 0 ⇔ R = −½Q + ¼A, P = 0 ⇔ R = −½Q", CheckStatus::InvariantVerified),
];

/// Runs the thirteen twin-interchange identities on a context.
pub fn invariance_suite(ctx: &GeometryContext) -> InvarianceReport {
    let j = ctx.spec.j();
    let o = &ctx.objects;
    let t = &ctx.objects_twin;
    let half = rational(1, 2);
    let quarter = rational(1, 4);

    let mut results: Vec<Identities> = Vec::with_capacity(13);

    results.push(
        Identities::new()
            .equal("Φ̃ = −Φ", &t.phi12, &o.phi12.neg())
            .equal("Φ̃(x,y,z) = −Φ(x,y,Jz)", &t.phi03, &o.phi03.compose_slot(2, j).neg()),
    );

    let f = &o.fundamental;
    let fj0 = f.compose_slot(0, j);
    let fj1 = f.compose_slot(1, j);
    let f_twin_expected = Tensor::from_fn(f.dim(), f.variance().clone(), |i| {
        let (x, y, z) = (i[0], i[1], i[2]);
        (fj0.get(&[y, z, x]) - fj1.get(&[y, z, x]) + fj0.get(&[z, y, x]) - fj1.get(&[z, y, x]))
            .scale(&half)
    });
    results.push(Identities::new().equal("F̃ relation", &t.fundamental, &f_twin_expected));

    results.push(
        Identities::new()
            .equal("f̃ = f", &t.f, &o.f)
            .equal("f̃* = f*", &t.f_star, &o.f_star),
    );
    results.push(
        Identities::new()
            .equal("θ̃ = θ", &t.theta, &o.theta)
            .equal("θ̃* = θ*", &t.theta_star, &o.theta_star),
    );

    let class = o.class(&ctx.metric, &ctx.spec);
    let class_twin = t.class(&ctx.twin_metric, &ctx.spec);
    results.push(Identities::new().holds("class labels differ", class == class_twin));

    results.push(Identities::new().equal("D̃ = D", t.d.gamma(), o.d.gamma()));

    let n03 = o.n12.lower_index(2, &ctx.metric).expect("N is (1,2)");
    let n03_twin = t.n12.lower_index(2, &ctx.twin_metric).expect("N is (1,2)");
    results.push(
        Identities::new()
            .equal("Ñ = N", &t.n12, &o.n12)
            .equal("Ñ(x,y,z) = N(x,y,Jz)", &n03_twin, &n03.compose_slot(2, j)),
    );

    let s03 = o.s12.lower_index(2, &ctx.metric).expect("S is (1,2)");
    let s03_twin = t.s12.lower_index(2, &ctx.twin_metric).expect("S is (1,2)");
    results.push(
        Identities::new()
            .equal("S̃ = −S", &t.s12, &o.s12.neg())
            .equal("S̃(x,y,z) = −S(x,y,Jz)", &s03_twin, &s03.compose_slot(2, j).neg()),
    );

    results.push(Identities::new().equal("Ã = A", &t.a13, &o.a13));
    results.push(Identities::new().equal("Q̃ = −Q", &t.q13, &o.q13.neg()));

    let k_twin_parts = k_from_parts(&t.r13, &t.q13, &t.a13);
    let k_twin_curv = curvature(&t.d, &ctx.spec);
    results.push(
        Identities::new()
            .equal("K̃ = R̃ + ½Q̃ − ¼Ã = K", &k_twin_parts, &o.k13)
            .equal("curvature of D̃ = K", &k_twin_curv, &o.k13),
    );

    results.push(
        Identities::new()
            .equal("P̃ = P", &p_tensor(&t.r13, &t.q13), &o.p13)
            .equal("P = ½(R + R̃)", &o.p13, &o.r13.add(&t.r13).scale(&half)),
    );

    // The equivalences follow from K − (R + ½Q − ¼A) ≡ 0 and P − (R + ½Q) ≡ 0
    // holding identically, so they survive every specialisation.
    let k_rhs = o.q13.scale(&half).neg().add(&o.a13.scale(&quarter));
    let p_rhs = o.q13.scale(&half).neg();
    results.push(
        Identities::new()
            .equal("K = R + ½Q − ¼A", &o.k13, &o.r13.sub(&k_rhs))
            .equal("P = R + ½Q", &o.p13, &o.r13.sub(&p_rhs)),
    );

    let checks = CHECKS
        .iter()
        .zip(results)
        .enumerate()
        .map(|(k, ((name, statement, kind), ids))| {
            let failure = ids.failure();
            CheckResult {
                number: k + 1,
                name,
                statement,
                status: if failure.is_some() { CheckStatus::Failed } else { *kind },
                failure,
            }
        })
        .collect();
    InvarianceReport { checks }
}

/// If `D = 0` then `∇ = ∇̃ = 0`, `Φ = 0` and both metrics are Kähler-Norden.
/// Vacuously true when `D ≠ 0`.
pub fn zero_average_connection_check(ctx: &GeometryContext) -> bool {
    if !ctx.objects.d.gamma().is_zero() {
        return true;
    }
    ctx.conn.gamma().is_zero()
        && ctx.conn_twin.gamma().is_zero()
        && ctx.objects.phi12.is_zero()
        && ctx.class() == ClassLabel::W0
        && ctx.twin_class() == ClassLabel::W0
}
