#![allow(dead_code)]

pub mod tables;

use std::collections::BTreeMap;

use norden_core::geometry::FrameSpec;
use norden_core::scalars::{int, rational, vars, Polynomial, Rational, Vars};
use norden_core::tensor::{Tensor, Variance};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn example_vars() -> Vars {
    vars(&["l1", "l2", "l3", "l4"])
}

pub fn poly(text: &str) -> Polynomial {
    Polynomial::parse(text, &example_vars()).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// One printed or symmetry-derived component value.
#[derive(Clone, Debug)]
pub struct Claim {
    pub name: String,
    pub idx: Vec<usize>,
    pub value: Polynomial,
    /// The printed entry this claim comes from, e.g. `P1234 = 1/2*l4^2`.
    pub origin: String,
}

/// Expected components gathered from chains such as
/// `1/2*l1^2 = P3421 = -P2341` or `[0, 0, l2, l1] = N11 = -Nt24`.
///
/// The left side is a scalar or a bracketed component vector; every term on
/// the right is `[coef] NAME digits` and states `coef * NAME_digits = value`.
/// A vector value fills the last index.
#[derive(Default)]
pub struct Table {
    pub claims: Vec<Claim>,
}

impl Table {
    pub fn parse(text: &str) -> Table {
        let mut t = Table::default();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let mut parts = line.split('=').map(str::trim);
            let lhs = parts.next().unwrap();
            let values: Vec<Polynomial> = match lhs.strip_prefix('[') {
                Some(rest) => rest.trim_end_matches(']').split(',').map(|s| poly(s.trim())).collect(),
                None => vec![poly(lhs)],
            };
            for term in parts {
                let (coef, sym) = match term.rsplit_once(' ') {
                    Some((c, s)) => (parse_coef(c.trim()), s),
                    None => match term.strip_prefix('-') {
                        Some(s) => (int(-1), s),
                        None => (int(1), term),
                    },
                };
                let split = sym.find(|c: char| c.is_ascii_digit()).expect("index digits");
                let (name, digits) = sym.split_at(split);
                let idx: Vec<usize> = digits.bytes().map(|b| (b - b'1') as usize).collect();
                let inv = coef.recip();
                for (k, v) in values.iter().enumerate() {
                    let mut full = idx.clone();
                    if values.len() > 1 {
                        full.push(k);
                    }
                    let value = v.scale(&inv);
                    let origin = format!("{name}{} = {value}", label(&full));
                    t.claims.push(Claim {
                        name: name.to_string(),
                        idx: full,
                        value,
                        origin,
                    });
                }
            }
        }
        t
    }

    /// Adds the images of every claim on `name` under a set of signed index
    /// permutations, closed under composition.
    pub fn close_under(&mut self, name: &str, symmetries: &[(&[usize], i64)]) {
        let printed: Vec<Claim> = self.claims.iter().filter(|c| c.name == name).cloned().collect();
        for claim in printed {
            let mut seen = vec![claim.idx.clone()];
            let mut todo = vec![(claim.idx.clone(), claim.value.clone())];
            while let Some((idx, v)) = todo.pop() {
                for (perm, sign) in symmetries {
                    let image: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
                    if seen.contains(&image) {
                        continue;
                    }
                    let value = v.scale(&int(*sign));
                    seen.push(image.clone());
                    todo.push((image.clone(), value.clone()));
                    self.claims.push(Claim {
                        name: name.to_string(),
                        idx: image,
                        value,
                        origin: claim.origin.clone(),
                    });
                }
            }
        }
    }

    pub fn claims_on<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Claim> + 'a {
        self.claims.iter().filter(move |c| c.name == name)
    }

    pub fn count(&self, name: &str) -> usize {
        let mut idx: Vec<&Vec<usize>> = self.claims_on(name).map(|c| &c.idx).collect();
        idx.sort();
        idx.dedup();
        idx.len()
    }

    /// Components claimed with two different values.
    pub fn conflicts(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (k, a) in self.claims.iter().enumerate() {
            for b in &self.claims[k + 1..] {
                if a.name == b.name && a.idx == b.idx && a.value != b.value {
                    let msg = format!("{}{} claimed by `{}` and `{}`", a.name, label(&a.idx), a.origin, b.origin);
                    if !out.contains(&msg) {
                        out.push(msg);
                    }
                }
            }
        }
        out
    }

    /// The claimed components as a dense tensor, zero elsewhere. The first
    /// claim wins on conflicts.
    pub fn tensor(&self, name: &str, variance: Variance) -> Tensor {
        let mut t = Tensor::zeros(4, variance);
        for c in self.claims_on(name).collect::<Vec<_>>().into_iter().rev() {
            t.set(&c.idx, c.value.clone());
        }
        t
    }
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub idx: Vec<usize>,
    pub expected: Polynomial,
    pub computed: Polynomial,
    /// `None` for a nonzero component the table does not mention.
    pub origin: Option<String>,
}

impl Mismatch {
    pub fn describe(&self, name: &str) -> String {
        match &self.origin {
            Some(o) => format!("{name}{}: printed {} (from `{o}`), computed {}", label(&self.idx), self.expected, self.computed),
            None => format!("{name}{}: unlisted, computed {}", label(&self.idx), self.computed),
        }
    }
}

fn parse_coef(text: &str) -> Rational {
    match text {
        "-" => int(-1),
        _ => norden_core::scalars::parse_rational(text).unwrap_or_else(|e| panic!("{text}: {e}")),
    }
}

pub fn label(idx: &[usize]) -> String {
    idx.iter().map(|i| (i + 1).to_string()).collect()
}

/// Claims on `name` that disagree with `tensor`. With `complete`, nonzero
/// components the table never mentions are reported as well.
pub fn mismatches(table: &Table, name: &str, tensor: &Tensor, complete: bool) -> Vec<Mismatch> {
    let mut bad = Vec::new();
    for c in table.claims_on(name) {
        let got = tensor.get(&c.idx);
        if *got != c.value {
            bad.push(Mismatch {
                idx: c.idx.clone(),
                expected: c.value.clone(),
                computed: got.clone(),
                origin: Some(c.origin.clone()),
            });
        }
    }
    if complete {
        for (idx, got) in tensor.entries() {
            if !got.is_zero() && !table.claims_on(name).any(|c| c.idx == idx) {
                bad.push(Mismatch {
                    idx,
                    expected: Polynomial::zero(),
                    computed: got.clone(),
                    origin: None,
                });
            }
        }
    }
    bad
}

/// Plain-text form of [`mismatches`].
pub fn compare(table: &Table, name: &str, shown_as: &str, tensor: &Tensor, complete: bool) -> Vec<String> {
    mismatches(table, name, tensor, complete)
        .iter()
        .map(|m| m.describe(shown_as))
        .collect()
}

pub fn random_rational(rng: &mut ChaCha8Rng, range: i64, max_den: i64) -> Rational {
    rational(rng.gen_range(-range..=range), rng.gen_range(1..=max_den))
}

pub fn random_assignment(rng: &mut ChaCha8Rng, names: &[&str]) -> BTreeMap<String, Rational> {
    names
        .iter()
        .map(|n| (n.to_string(), random_rational(rng, 9, 5)))
        .collect()
}

fn constant_matrix(m: &[[i64; 4]; 4]) -> Vec<Vec<Polynomial>> {
    m.iter()
        .map(|r| r.iter().map(|&x| Polynomial::from_int(x)).collect())
        .collect()
}

fn mat_mul(a: &[[i64; 4]; 4], b: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Random unimodular integer matrix and its inverse, from elementary row
/// operations.
fn random_unimodular(rng: &mut ChaCha8Rng) -> ([[i64; 4]; 4], [[i64; 4]; 4]) {
    let mut m = [[0i64; 4]; 4];
    let mut inv = [[0i64; 4]; 4];
    for i in 0..4 {
        m[i][i] = 1;
        inv[i][i] = 1;
    }
    for _ in 0..3 {
        let a = rng.gen_range(0..4);
        let mut b = rng.gen_range(0..4);
        if a == b {
            b = (b + 1) % 4;
        }
        let c = rng.gen_range(-1..=1i64);
        let mut e = [[0i64; 4]; 4];
        let mut e_inv = [[0i64; 4]; 4];
        for i in 0..4 {
            e[i][i] = 1;
            e_inv[i][i] = 1;
        }
        e[a][b] = c;
        e_inv[a][b] = -c;
        m = mat_mul(&e, &m);
        inv = mat_mul(&inv, &e_inv);
    }
    (m, inv)
}

/// A random valid 4-dimensional spec with rational structure constants.
///
/// The algebra is a semidirect product in which `e4` acts on the abelian
/// ideal `span(e1, e2, e3)` by a random matrix, written in a randomly
/// changed integer basis; `(J, g)` is the standard Norden pair, optionally
/// conjugated by another unimodular matrix.
pub fn random_spec(rng: &mut ChaCha8Rng) -> FrameSpec {
    let params = vars::<&str>(&[]);
    let mut action = vec![vec![rational(0, 1); 3]; 3];
    for row in action.iter_mut() {
        for x in row.iter_mut() {
            if rng.gen_bool(0.6) {
                *x = random_rational(rng, 3, 2);
            }
        }
    }
    // [e4, e_a] = A e_a in the original basis.
    let mut c0 = vec![vec![vec![rational(0, 1); 4]; 4]; 4];
    for a in 0..3 {
        for k in 0..3 {
            c0[3][a][k] = action[k][a].clone();
            c0[a][3][k] = -action[k][a].clone();
        }
    }
    // New basis X_i = Σ_p P[p][i] e_p.
    let (p, p_inv) = random_unimodular(rng);
    let mut c = Tensor::zeros(4, Variance::vector_valued(2));
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let mut s = rational(0, 1);
                for a in 0..4 {
                    for b in 0..4 {
                        if p[a][i] == 0 || p[b][j] == 0 {
                            continue;
                        }
                        for q in 0..4 {
                            s += int(p[a][i] * p[b][j] * p_inv[k][q]) * &c0[a][b][q];
                        }
                    }
                }
                c.set(&[i, j, k], Polynomial::constant(s));
            }
        }
    }

    let j0 = [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]];
    let g0 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]];
    let (jm, gm) = if rng.gen_bool(0.5) {
        let (b, b_inv) = random_unimodular(rng);
        let bt = transpose(&b);
        (mat_mul(&b_inv, &mat_mul(&j0, &b)), mat_mul(&bt, &mat_mul(&g0, &b)))
    } else {
        (j0, g0)
    };
    let j = Tensor::endomorphism_from_matrix(&constant_matrix(&jm)).unwrap();
    let g = Tensor::bilinear_from_matrix(&constant_matrix(&gm)).unwrap();
    let spec = FrameSpec::new(params, c, j, g).unwrap();
    assert!(spec.validate().is_valid(), "generator produced an invalid spec");
    spec
}

fn transpose(m: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = m[j][i];
        }
    }
    out
}
