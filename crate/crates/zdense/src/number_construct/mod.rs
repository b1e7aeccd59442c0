//! Number-field construction pipeline: signature, certified embeddings,
//! fundamental units, and explicit generators for the semidirect product
//! of the unit group acting on the integer lattice of the field.

pub mod construct;
pub mod poly;
pub mod units;

use crate::bigdec::{CDec, Dec};
use poly::IntPoly;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum NfError {
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is reducible over Q")]
    NotIrreducible,
    #[error("irreducibility not verified for degree {0}; pass the trusted flag to proceed")]
    IrreducibilityUnverified(usize),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("precision target unreachable: {0}")]
    PrecisionUnreachable(String),
    #[error("unit search exhausted at coefficient bound {0}")]
    SearchExhausted(i64),
    #[error("supplied units are multiplicatively dependent")]
    RankDeficient,
    #[error("unit group has rank 0 (torsion only)")]
    TorsionOnly,
    #[error("degree {0} unit search not supported; supply candidate units")]
    DegreeUnsupported(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A number field Q[x]/(f) together with its signature.
#[derive(Clone, Debug)]
pub struct NumberFieldSpec {
    pub poly: IntPoly,
    pub r1: usize,
    pub r2: usize,
    /// Unit rank r1 + r2 - 1.
    pub r: usize,
}

impl NumberFieldSpec {
    pub fn new(poly: IntPoly) -> Result<Self, NfError> {
        Self::with_trust(poly, false)
    }

    /// `trusted` skips the irreducibility check for degrees where no
    /// exact test is implemented (> 4).
    pub fn with_trust(poly: IntPoly, trusted: bool) -> Result<Self, NfError> {
        if poly.degree() < 2 {
            return Err(NfError::InvalidPolynomial("degree must be >= 2".into()));
        }
        if !poly.is_monic() {
            return Err(NfError::InvalidPolynomial("polynomial must be monic".into()));
        }
        if !poly::is_squarefree(&poly) {
            return Err(NfError::NotSquarefree);
        }
        match poly::is_irreducible(&poly) {
            Some(true) => {}
            Some(false) => return Err(NfError::NotIrreducible),
            None => {
                if !trusted {
                    return Err(NfError::IrreducibilityUnverified(poly.degree()));
                }
            }
        }
        let (r1, r2) = signature(&poly)?;
        Ok(NumberFieldSpec {
            poly,
            r1,
            r2,
            r: r1 + r2 - 1,
        })
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }
}

/// (number of real roots, number of conjugate complex pairs).
pub fn signature(poly: &IntPoly) -> Result<(usize, usize), NfError> {
    if !poly::is_squarefree(poly) {
        return Err(NfError::NotSquarefree);
    }
    let r1 = poly::count_real_roots(poly);
    Ok((r1, (poly.degree() - r1) / 2))
}

/// Certified roots of the defining polynomial: the real embeddings in
/// ascending order, then one representative per conjugate pair (positive
/// imaginary part, sorted by real part then imaginary part).
#[derive(Clone, Debug)]
pub struct EmbeddingData {
    /// r1 + r2 embedding slots.
    pub roots: Vec<CDec>,
    pub r1: usize,
    pub r2: usize,
    /// Certified absolute precision: every root has |f(root)| below the
    /// residual bound at 10^-digits.
    pub digits: u32,
    /// Working scale of the stored `Dec` mantissas.
    pub scale: u32,
}

/// Compute all embeddings to `digits` decimal digits, doubling the
/// working precision on certification failure (at most 4 doublings).
pub fn compute_embeddings(poly: &IntPoly, digits: u32) -> Result<EmbeddingData, NfError> {
    if !poly::is_squarefree(poly) {
        return Err(NfError::NotSquarefree);
    }
    let (r1, r2) = signature(poly)?;
    let mut want = digits;
    for _ in 0..=4 {
        let scale = want + 10;
        let roots = poly::complex_roots(poly, scale)?;
        if certify_roots(poly, &roots, want, scale) {
            return Ok(EmbeddingData {
                roots,
                r1,
                r2,
                digits: want,
                scale,
            });
        }
        want *= 2;
    }
    Err(NfError::PrecisionUnreachable(format!(
        "root certification failed after 4 precision doublings (target 1e-{digits})"
    )))
}

fn certify_roots(poly: &IntPoly, roots: &[CDec], digits: u32, scale: u32) -> bool {
    let eps = Dec::eps(digits, scale);
    let d = poly.degree() as i64;
    let coeff_bound = Dec::from_bigint(&poly.max_abs_coeff(), scale).add(&Dec::from_i64(1, scale));
    let resid_bound = Dec::from_i64(d, scale).mul(&eps).mul(&coeff_bound);
    let sep = Dec::from_i64(10, scale).mul(&eps);
    for (i, z) in roots.iter().enumerate() {
        if poly.eval_cdec(z).abs().cmp_dec(&resid_bound) != std::cmp::Ordering::Less {
            return false;
        }
        // complex representatives must be separated from their conjugate
        if !z.im.is_zero() {
            let twice_im = z.im.abs().add(&z.im.abs());
            if twice_im.cmp_dec(&sep) != std::cmp::Ordering::Greater {
                return false;
            }
        }
        for w in roots.iter().skip(i + 1) {
            if z.sub(w).abs().cmp_dec(&sep) != std::cmp::Ordering::Greater {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures_of_reference_fields() {
        assert_eq!(signature(&IntPoly::from_i64(&[-2, 0, 1])).unwrap(), (2, 0));
        assert_eq!(signature(&IntPoly::from_i64(&[-1, -1, 0, 1])).unwrap(), (1, 1));
        assert_eq!(signature(&IntPoly::from_i64(&[1, 0, 1])).unwrap(), (0, 1));
    }

    #[test]
    fn field_spec_validation() {
        let nf = NumberFieldSpec::new(IntPoly::from_i64(&[-2, 0, 1])).unwrap();
        assert_eq!((nf.r1, nf.r2, nf.r), (2, 0, 1));
        assert!(matches!(
            NumberFieldSpec::new(IntPoly::from_i64(&[-1, 0, 1])),
            Err(NfError::NotIrreducible)
        ));
        assert!(matches!(
            NumberFieldSpec::new(IntPoly::from_i64(&[1, 2, 1])),
            Err(NfError::NotSquarefree)
        ));
        // degree 5: needs trust
        let quintic = IntPoly::from_i64(&[-2, 0, 0, 0, 0, 1]);
        assert!(matches!(
            NumberFieldSpec::new(quintic.clone()),
            Err(NfError::IrreducibilityUnverified(5))
        ));
        assert!(NumberFieldSpec::with_trust(quintic, true).is_ok());
    }

    #[test]
    fn embeddings_are_certified() {
        let emb = compute_embeddings(&IntPoly::from_i64(&[-2, 0, 1]), 30).unwrap();
        assert_eq!(emb.roots.len(), 2);
        assert!(emb.roots[0].re.is_negative());
        assert!((emb.roots[1].re.to_f64() - 2f64.sqrt()).abs() < 1e-14);

        let emb3 = compute_embeddings(&IntPoly::from_i64(&[-1, -1, 0, 1]), 30).unwrap();
        assert_eq!(emb3.roots.len(), 2);
        assert_eq!((emb3.r1, emb3.r2), (1, 1));
        assert!(emb3.roots[1].im.to_f64() > 0.0);

        let gauss = compute_embeddings(&IntPoly::from_i64(&[1, 0, 1]), 30).unwrap();
        assert_eq!(gauss.roots.len(), 1);
        assert!((gauss.roots[0].im.to_f64() - 1.0).abs() < 1e-20);
        assert!(gauss.roots[0].re.to_f64().abs() < 1e-20);
    }
}
