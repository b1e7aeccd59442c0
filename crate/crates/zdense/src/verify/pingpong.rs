//! Ping-pong certification for pairs of 2x2 integer matrices, plus an
//! exact word-search oracle. Certification is one-sided: `certified =
//! false` means "not certified by this table", never "not free".

use num_complex::Complex64;

/// Exact 2x2 integer matrix (entries stay well inside i128 for the word
/// lengths used here).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IMat(pub [[i128; 2]; 2]);

pub const IDENTITY: IMat = IMat([[1, 0], [0, 1]]);

impl IMat {
    pub fn mul(&self, o: &IMat) -> IMat {
        let a = &self.0;
        let b = &o.0;
        IMat([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn det(&self) -> i128 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// Inverse for determinant +-1 matrices.
    pub fn inv_unimodular(&self) -> IMat {
        let d = self.det();
        assert!(d == 1 || d == -1, "inverse requires det +-1");
        IMat([
            [self.0[1][1] * d, -self.0[0][1] * d],
            [-self.0[1][0] * d, self.0[0][0] * d],
        ])
    }

    pub fn is_identity(&self) -> bool {
        *self == IDENTITY
    }

    pub fn to_c64(&self) -> [[Complex64; 2]; 2] {
        let c = |v: i128| Complex64::new(v as f64, 0.0);
        [
            [c(self.0[0][0]), c(self.0[0][1])],
            [c(self.0[1][0]), c(self.0[1][1])],
        ]
    }
}

#[derive(Clone, Debug)]
pub struct PingPongCertificate {
    pub certified: bool,
    /// Human-readable description of the stable regions when certified.
    pub regions: Option<String>,
    pub reason: String,
}

fn is_upper_unipotent(m: &IMat) -> Option<i128> {
    let a = &m.0;
    (a[0][0] == 1 && a[1][1] == 1 && a[1][0] == 0).then_some(a[0][1])
}

fn is_lower_unipotent(m: &IMat) -> Option<i128> {
    let a = &m.0;
    (a[0][0] == 1 && a[1][1] == 1 && a[0][1] == 0).then_some(a[1][0])
}

/// Classical two-unipotent table: an upper-triangular unipotent with
/// off-diagonal entry of absolute value >= 2 and a lower-triangular one
/// likewise have the stable regions |x/y| > 1 and |x/y| < 1 on the
/// projective line, so they generate a free group of rank 2.
pub fn pingpong_certificate(a: &IMat, b: &IMat) -> PingPongCertificate {
    if a.det() == 0 || b.det() == 0 {
        return PingPongCertificate {
            certified: false,
            regions: None,
            reason: "a generator is singular".into(),
        };
    }
    if a.is_identity() || b.is_identity() {
        return PingPongCertificate {
            certified: false,
            regions: None,
            reason: "a generator is the identity".into(),
        };
    }
    let pair = match (is_upper_unipotent(a), is_lower_unipotent(b)) {
        (Some(x), Some(y)) => Some((x, y)),
        _ => match (is_lower_unipotent(a), is_upper_unipotent(b)) {
            (Some(x), Some(y)) => Some((x, y)),
            _ => None,
        },
    };
    match pair {
        Some((x, y)) if x.abs() >= 2 && y.abs() >= 2 => PingPongCertificate {
            certified: true,
            regions: Some(
                "projective coordinate x/y: region X = {|x/y| > 1}, region Y = {|x/y| < 1}; \
                 nonzero powers of the upper generator map Y into X, nonzero powers of the \
                 lower generator map X into Y"
                    .into(),
            ),
            reason: format!("opposite unipotents with off-diagonal entries {x} and {y}"),
        },
        Some((x, y)) => PingPongCertificate {
            certified: false,
            regions: None,
            reason: format!(
                "off-diagonal entries {x}, {y} too small for the standard regions (need \
                 absolute value >= 2)"
            ),
        },
        None => PingPongCertificate {
            certified: false,
            regions: None,
            reason: "generators are not an opposite unipotent pair; no table implemented".into(),
        },
    }
}

/// Exhaustive exact check: no nontrivial reduced word in a, b and their
/// inverses of length <= max_len equals the identity. Letters must have
/// determinant +-1.
pub fn no_identity_words(a: &IMat, b: &IMat, max_len: usize) -> bool {
    let letters = [*a, a.inv_unimodular(), *b, b.inv_unimodular()];
    // (element, last letter index)
    let mut frontier: Vec<(IMat, usize)> =
        letters.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    for _ in 0..max_len {
        for (m, _) in &frontier {
            if m.is_identity() {
                return false;
            }
        }
        if frontier.len() * 3 > 4_000_000 {
            break; // depth limit reached for the memory budget
        }
        let mut next = Vec::with_capacity(frontier.len() * 3);
        for (m, last) in &frontier {
            for (i, l) in letters.iter().enumerate() {
                if i / 2 == last / 2 && i % 2 != last % 2 {
                    continue; // unreduced
                }
                next.push((m.mul(l), i));
            }
        }
        frontier = next;
    }
    true
}

pub fn sanov_pair() -> (IMat, IMat) {
    (IMat([[1, 2], [0, 1]]), IMat([[1, 0], [2, 1]]))
}
