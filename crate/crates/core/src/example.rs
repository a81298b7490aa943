//! The four-parameter family of W1 Lie groups.

use crate::geometry::FrameSpec;
use crate::scalars::{vars, Polynomial};
use crate::tensor::{Tensor, Variance};

pub const EXAMPLE_PARAMS: [&str; 4] = ["l1", "l2", "l3", "l4"];

/// `JX1 = X3, JX2 = X4`, `g = diag(1, 1, −1, −1)` and
///
/// ```text
/// [X1,X4] = [X2,X3] = l1 X1 + l2 X2 + l3 X3 + l4 X4
/// [X1,X3] = [X4,X2] = l2 X1 − l1 X2 + l4 X3 − l3 X4
/// ```
pub fn builtin_example() -> FrameSpec {
    let params = vars(&EXAMPLE_PARAMS);
    let l: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(&params, i)).collect();
    let a = [l[0].clone(), l[1].clone(), l[2].clone(), l[3].clone()];
    let b = [l[1].clone(), -&l[0], l[3].clone(), -&l[2]];

    let mut c = Tensor::zeros(4, Variance::vector_valued(2));
    let mut put = |i: usize, j: usize, v: &[Polynomial; 4]| {
        for (k, x) in v.iter().enumerate() {
            c.set(&[i, j, k], x.clone());
            c.set(&[j, i, k], -x);
        }
    };
    put(0, 3, &a);
    put(1, 2, &a);
    put(0, 2, &b);
    put(3, 1, &b);

    let one = Polynomial::one;
    let zero = Polynomial::zero;
    let mut j = Tensor::zeros(4, Variance::vector_valued(1));
    j.set(&[0, 2], one());
    j.set(&[1, 3], one());
    j.set(&[2, 0], -one());
    j.set(&[3, 1], -one());

    let g = Tensor::from_fn(4, Variance::down(2), |i| {
        if i[0] != i[1] {
            zero()
        } else if i[0] < 2 {
            one()
        } else {
            -one()
        }
    });
    FrameSpec::new(params, c, j, g).expect("example shapes are consistent")
}

/// JSON text of [`builtin_example`] in the spec-file format.
pub fn builtin_example_file() -> String {
    crate::specfile::emit_spec(&builtin_example())
}
