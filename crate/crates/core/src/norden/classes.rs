use std::fmt;

use serde::Serialize;

use crate::geometry::{associated_metric, FrameSpec};
use crate::scalars::{rational, Polynomial};
use crate::tensor::{MetricPair, Tensor, Variance};

/// The eight classes of almost Norden manifolds, by the potential `Φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassLabel {
    W0,
    W1,
    W2,
    W3,
    W1W2,
    W1W3,
    W2W3,
    W1W2W3,
}

impl ClassLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassLabel::W0 => "W0",
            ClassLabel::W1 => "W1",
            ClassLabel::W2 => "W2",
            ClassLabel::W3 => "W3",
            ClassLabel::W1W2 => "W1⊕W2",
            ClassLabel::W1W3 => "W1⊕W3",
            ClassLabel::W2W3 => "W2⊕W3",
            ClassLabel::W1W2W3 => "W1⊕W2⊕W3",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which defining identities hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct ClassConditions {
    pub w0: bool,
    pub w1: bool,
    pub w2: bool,
    pub w3: bool,
    pub w1_w2: bool,
    pub w1_w3: bool,
    pub w2_w3: bool,
}

impl ClassConditions {
    /// Minimal class, testing in containment order.
    pub fn label(&self) -> ClassLabel {
        [
            (self.w0, ClassLabel::W0),
            (self.w1, ClassLabel::W1),
            (self.w2, ClassLabel::W2),
            (self.w3, ClassLabel::W3),
            (self.w1_w2, ClassLabel::W1W2),
            (self.w1_w3, ClassLabel::W1W3),
            (self.w2_w3, ClassLabel::W2W3),
        ]
        .into_iter()
        .find(|(holds, _)| *holds)
        .map(|(_, l)| l)
        .unwrap_or(ClassLabel::W1W2W3)
    }
}

/// `g(x,y) f(z) + g(x,Jy) f(Jz)` as a (0,3) tensor.
fn metric_times_form(metric: &MetricPair, j: &Tensor, form: &Tensor) -> Tensor {
    let g = metric.g();
    let gj = associated_metric(g, j);
    let form_j = form.compose_slot(0, j);
    Tensor::from_fn(g.dim(), Variance::down(3), |i| {
        g.get(&[i[0], i[1]]) * form.get(&[i[2]]) + gj.get(&[i[0], i[1]]) * form_j.get(&[i[2]])
    })
}

/// Evaluates the defining identities of each class on `(Φ, f)`.
pub fn class_conditions(
    phi03: &Tensor,
    f: &Tensor,
    metric: &MetricPair,
    spec: &FrameSpec,
) -> ClassConditions {
    let j = spec.j();
    let n = spec.n() as i64;
    let phi_jj = phi03.compose_slot(0, j).compose_slot(1, j);
    let gf = metric_times_form(metric, j, f);
    let f_zero = f.is_zero();
    let w1_w2 = phi03.add(&phi_jj).is_zero();
    let w3 = phi03.sub(&phi_jj).is_zero();
    ClassConditions {
        w0: phi03.is_zero(),
        w1: phi03.sub(&gf.scale(&rational(1, 2 * n))).is_zero(),
        w2: w1_w2 && f_zero,
        w3,
        w1_w2,
        w1_w3: phi03.sub(&phi_jj).sub(&gf.scale(&rational(1, n))).is_zero(),
        w2_w3: f_zero,
    }
}

pub fn classify(phi03: &Tensor, f: &Tensor, metric: &MetricPair, spec: &FrameSpec) -> ClassLabel {
    class_conditions(phi03, f, metric, spec).label()
}

/// Membership in `[W0, W1, W2, W3]` decided by the fundamental tensor `F`
/// and its Lee form `θ`. The W3 identity is the cyclic sum of `F`.
pub fn basic_classes_from_f(
    fundamental: &Tensor,
    theta: &Tensor,
    metric: &MetricPair,
    spec: &FrameSpec,
) -> [bool; 4] {
    let j = spec.j();
    let n = spec.n() as i64;
    let f = fundamental;
    let g = metric.g();
    let gj = associated_metric(g, j);
    let theta_j = theta.compose_slot(0, j);
    let w1_form = Tensor::from_fn(f.dim(), Variance::down(3), |i| {
        let (x, y, z) = (i[0], i[1], i[2]);
        g.get(&[x, y]) * theta.get(&[z])
            + gj.get(&[x, y]) * theta_j.get(&[z])
            + g.get(&[x, z]) * theta.get(&[y])
            + gj.get(&[x, z]) * theta_j.get(&[y])
    });
    let fj = f.compose_slot(2, j);
    let cyclic = |t: &Tensor| {
        Tensor::from_fn(f.dim(), Variance::down(3), |i| {
            let (x, y, z) = (i[0], i[1], i[2]);
            let s: Polynomial = t.get(&[x, y, z]) + t.get(&[y, z, x]) + t.get(&[z, x, y]);
            s
        })
    };
    [
        f.is_zero(),
        f.sub(&w1_form.scale(&rational(1, 2 * n))).is_zero(),
        cyclic(&fj).is_zero() && theta.is_zero(),
        cyclic(f).is_zero(),
    ]
}
