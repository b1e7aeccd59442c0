//! Verification layer: ping-pong free-group certification, word
//! enumeration for discreteness margins, the semidirect-product lifting
//! construction, and density evidence (rank and bounded-exponent
//! independence checks).

pub mod density;
pub mod lift;
pub mod pingpong;
pub mod words;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("word enumeration exceeded the configured cap of {0} elements")]
    ExplosionGuard(usize),
    #[error("kernel sample does not span the translation space")]
    SpanDeficient,
    #[error("generator set does not match the spec's ambient shape: {0}")]
    ShapeMismatch(String),
    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),
}

/// A group element in one of the shapes the verifier understands.
#[derive(Clone, Debug, PartialEq)]
pub enum Element {
    /// Diagonal linear part and translation, both of the same dimension.
    Affine {
        diag: Vec<Complex64>,
        trans: Vec<Complex64>,
    },
    /// A 2x2 complex matrix.
    Mat { m: [[Complex64; 2]; 2] },
    /// A 2x2 matrix linear part acting on C^2 plus a translation.
    MatAffine {
        m: [[Complex64; 2]; 2],
        trans: [Complex64; 2],
    },
}

fn mat_mul(a: &[[Complex64; 2]; 2], b: &[[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn mat_inv(a: &[[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    [
        [a[1][1] / det, -a[0][1] / det],
        [-a[1][0] / det, a[0][0] / det],
    ]
}

fn mat_apply(a: &[[Complex64; 2]; 2], v: &[Complex64; 2]) -> [Complex64; 2] {
    [
        a[0][0] * v[0] + a[0][1] * v[1],
        a[1][0] * v[0] + a[1][1] * v[1],
    ]
}

impl Element {
    pub fn identity_like(&self) -> Element {
        match self {
            Element::Affine { diag, trans } => Element::Affine {
                diag: vec![Complex64::new(1.0, 0.0); diag.len()],
                trans: vec![Complex64::new(0.0, 0.0); trans.len()],
            },
            Element::Mat { .. } => Element::Mat {
                m: [
                    [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
                    [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
                ],
            },
            Element::MatAffine { .. } => Element::MatAffine {
                m: [
                    [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
                    [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
                ],
                trans: [Complex64::new(0.0, 0.0); 2],
            },
        }
    }

    pub fn mul(&self, other: &Element) -> Element {
        match (self, other) {
            (
                Element::Affine { diag: d1, trans: t1 },
                Element::Affine { diag: d2, trans: t2 },
            ) => Element::Affine {
                diag: d1.iter().zip(d2).map(|(a, b)| a * b).collect(),
                trans: t1
                    .iter()
                    .zip(d1.iter().zip(t2))
                    .map(|(t, (d, s))| t + d * s)
                    .collect(),
            },
            (Element::Mat { m: a }, Element::Mat { m: b }) => Element::Mat { m: mat_mul(a, b) },
            (
                Element::MatAffine { m: a, trans: t1 },
                Element::MatAffine { m: b, trans: t2 },
            ) => {
                let at2 = mat_apply(a, t2);
                Element::MatAffine {
                    m: mat_mul(a, b),
                    trans: [t1[0] + at2[0], t1[1] + at2[1]],
                }
            }
            _ => panic!("mixed element kinds"),
        }
    }

    pub fn inverse(&self) -> Element {
        match self {
            Element::Affine { diag, trans } => {
                let inv_diag: Vec<Complex64> = diag.iter().map(|d| 1.0 / d).collect();
                Element::Affine {
                    trans: inv_diag.iter().zip(trans).map(|(d, t)| -d * t).collect(),
                    diag: inv_diag,
                }
            }
            Element::Mat { m } => Element::Mat { m: mat_inv(m) },
            Element::MatAffine { m, trans } => {
                let mi = mat_inv(m);
                let t = mat_apply(&mi, trans);
                Element::MatAffine {
                    m: mi,
                    trans: [-t[0], -t[1]],
                }
            }
        }
    }

    /// Distance from the identity: the maximum of the linear part's
    /// deviation (Frobenius norm of M - I, or max |d_i - 1| for
    /// diagonals) and the Euclidean norm of the translation.
    pub fn dist_from_identity(&self) -> f64 {
        match self {
            Element::Affine { diag, trans } => {
                let lin = diag
                    .iter()
                    .map(|d| (d - 1.0).norm())
                    .fold(0.0, f64::max);
                let tr = trans.iter().map(|t| t.norm_sqr()).sum::<f64>().sqrt();
                lin.max(tr)
            }
            Element::Mat { m } => frobenius_from_identity(m),
            Element::MatAffine { m, trans } => {
                let tr = (trans[0].norm_sqr() + trans[1].norm_sqr()).sqrt();
                frobenius_from_identity(m).max(tr)
            }
        }
    }

    /// Flat coordinate list used for tolerance-based deduplication.
    pub fn coords(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut push = |z: &Complex64| {
            out.push(z.re);
            out.push(z.im);
        };
        match self {
            Element::Affine { diag, trans } => {
                diag.iter().for_each(&mut push);
                trans.iter().for_each(&mut push);
            }
            Element::Mat { m } => m.iter().flatten().for_each(&mut push),
            Element::MatAffine { m, trans } => {
                m.iter().flatten().for_each(&mut push);
                trans.iter().for_each(&mut push);
            }
        }
        out
    }
}

fn frobenius_from_identity(m: &[[Complex64; 2]; 2]) -> f64 {
    let mut s = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let target = if i == j { 1.0 } else { 0.0 };
            s += (m[i][j] - target).norm_sqr();
        }
    }
    s.sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Affine { dim: usize },
    Matrix2x2,
    MatrixAffine,
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub kind: GenKind,
    pub elements: Vec<Element>,
}

impl GeneratorSet {
    pub fn new(kind: GenKind, elements: Vec<Element>) -> Result<Self, VerifyError> {
        for e in &elements {
            let ok = match (&kind, e) {
                (GenKind::Affine { dim }, Element::Affine { diag, trans }) => {
                    diag.len() == *dim
                        && trans.len() == *dim
                        && diag.iter().all(|d| d.norm() > 0.0)
                }
                (GenKind::Matrix2x2, Element::Mat { .. }) => true,
                (GenKind::MatrixAffine, Element::MatAffine { .. }) => true,
                _ => false,
            };
            if !ok {
                return Err(VerifyError::InvalidGenerators(
                    "element shape does not match the declared kind".into(),
                ));
            }
        }
        Ok(GeneratorSet { kind, elements })
    }
}
