//! Closed forms on the main class W1, where `Φ` is determined by the metric
//! and the 1-form `f`.

use crate::error::{Error, Result};
use crate::geometry::{associated_metric, covariant_derivative, Connection, FrameSpec};
use crate::scalars::{rational, Polynomial};
use crate::tensor::{MetricPair, Slot, Tensor, Variance};

use super::classes::{classify, ClassLabel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainClassForms {
    /// `D_x y = ∇_x y + 1/(4n) {g(x,y) f♯ + g(x,Jy) J f♯}`.
    pub d: Connection,
    /// `Q`, equal to `q13_printed + q13_correction`.
    pub q13: Tensor,
    /// `1/(2n) {g(y,z) p(x) + g(y,Jz) Jp(x) − g(x,z) p(y) − g(x,Jz) Jp(y)}`.
    pub q13_printed: Tensor,
    /// `1/(4n²) {f(f♯)(g(y,z) x − g(x,z) y) + f(Jf♯)(g(y,z) Jx − g(x,z) Jy)}`.
    /// The shape `g(y,z) p(x) + g(y,Jz) Jp(x)` alone misses this term.
    pub q13_correction: Tensor,
    pub a13: Tensor,
    /// `p(x) = ∇_x f♯ + 1/(2n) {f(x) f♯ − f(f♯) x − f(Jf♯) Jx}`, slots `(x, out)`.
    pub p: Tensor,
    /// `h(x) = f(x) f♯ + f(Jx) J f♯`, slots `(x, out)`.
    pub h: Tensor,
    pub f_sharp: Tensor,
}

/// Twin of the fundamental tensor on a W1 manifold: `F̃(x,y,z) = F(Jx,y,z)`.
pub fn main_class_twin_f(fundamental: &Tensor, j: &Tensor) -> Tensor {
    fundamental.compose_slot(0, j)
}

/// `{g(y,z) v(x) + g(y,Jz) (Jv)(x) − g(x,z) v(y) − g(x,Jz) (Jv)(y)}` where `v`
/// and `jv` are (1,1) tensors with slots `(argument, out)`.
fn curvature_shape(g: &Tensor, gj: &Tensor, v: &Tensor, jv: &Tensor) -> Tensor {
    Tensor::from_fn(g.dim(), Variance::vector_valued(3), |i| {
        let (x, y, z, l) = (i[0], i[1], i[2], i[3]);
        g.get(&[y, z]) * v.get(&[x, l]) + gj.get(&[y, z]) * jv.get(&[x, l])
            - g.get(&[x, z]) * v.get(&[y, l])
            - gj.get(&[x, z]) * jv.get(&[y, l])
    })
}

/// Main-class forms of `D`, `Q` and `A`. Fails with a class mismatch unless
/// `(Φ, f)` lies in W1 (W0 included).
pub fn w1_specials(
    phi03: &Tensor,
    f: &Tensor,
    metric: &MetricPair,
    spec: &FrameSpec,
    conn: &Connection,
) -> Result<MainClassForms> {
    let label = classify(phi03, f, metric, spec);
    if !matches!(label, ClassLabel::W0 | ClassLabel::W1) {
        return Err(Error::ClassMismatch {
            expected: ClassLabel::W1.to_string(),
            found: label.to_string(),
        });
    }
    let dim = spec.dim();
    let n = spec.n() as i64;
    let j = spec.j();
    let g = metric.g();
    let gj = associated_metric(g, j);

    let f_sharp = f.raise_index(0, metric)?;
    let jf_sharp = f_sharp.compose_slot(0, j);
    let f_of_f_sharp: Polynomial = (0..dim).map(|k| f.get(&[k]) * f_sharp.get(&[k])).sum();
    let f_of_jf_sharp: Polynomial = (0..dim).map(|k| f.get(&[k]) * jf_sharp.get(&[k])).sum();
    let f_j = f.compose_slot(0, j);

    let q = rational(1, 4 * n);
    let gamma = Tensor::from_fn(dim, Variance::vector_valued(2), |i| {
        let (x, y, k) = (i[0], i[1], i[2]);
        conn.coefficient(x, y, k)
            + (g.get(&[x, y]) * f_sharp.get(&[k]) + gj.get(&[x, y]) * jf_sharp.get(&[k])).scale(&q)
    });
    let d = Connection::new(gamma)?;

    let nabla_f_sharp = covariant_derivative(conn, &f_sharp);
    debug_assert_eq!(nabla_f_sharp.variance().slots(), [Slot::Down, Slot::Up]);
    let inv_2n = rational(1, 2 * n);
    let p = Tensor::from_fn(dim, Variance::vector_valued(1), |i| {
        let (x, k) = (i[0], i[1]);
        let delta = if x == k { Polynomial::one() } else { Polynomial::zero() };
        let bracket = f.get(&[x]) * f_sharp.get(&[k])
            - &f_of_f_sharp * &delta
            - &f_of_jf_sharp * j.get(&[x, k]);
        nabla_f_sharp.get(&[x, k]) + bracket.scale(&inv_2n)
    });
    let h = Tensor::from_fn(dim, Variance::vector_valued(1), |i| {
        let (x, k) = (i[0], i[1]);
        f.get(&[x]) * f_sharp.get(&[k]) + f_j.get(&[x]) * jf_sharp.get(&[k])
    });

    let jp = p.compose_slot(1, j);
    let q13_printed = curvature_shape(g, &gj, &p, &jp).scale(&inv_2n);
    let inv_4n2 = rational(1, 4 * n * n);
    let q13_correction = Tensor::from_fn(dim, Variance::vector_valued(3), |i| {
        let (x, y, z, l) = (i[0], i[1], i[2], i[3]);
        let delta = |a: usize| if a == l { Polynomial::one() } else { Polynomial::zero() };
        let t = &f_of_f_sharp * &(g.get(&[y, z]) * delta(x) - g.get(&[x, z]) * delta(y))
            + &f_of_jf_sharp * &(g.get(&[y, z]) * j.get(&[x, l]) - g.get(&[x, z]) * j.get(&[y, l]));
        t.scale(&inv_4n2)
    });
    let q13 = q13_printed.add(&q13_correction);
    let hj = h.compose_slot(0, j);
    let a13 = curvature_shape(g, &gj, &h, &hj).scale(&inv_4n2);

    Ok(MainClassForms {
        d,
        q13,
        q13_printed,
        q13_correction,
        a13,
        p,
        h,
        f_sharp,
    })
}
