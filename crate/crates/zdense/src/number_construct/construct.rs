//! Assembling the explicit generator data: diagonal torus generators
//! from unit embeddings, the lattice embedding of the power basis, the
//! totally-real cocompact variant, and the bounded search for
//! multiplicative relations that pins down the torus-closure dimension.

use super::units::{field_norm, NfElement, UnitGroup};
use super::{EmbeddingData, NfError, NumberFieldSpec};
use crate::bigdec::{CDec, Dec};
use crate::exact::numeric_rank;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct CocompactData {
    /// Norm +1 unit coordinates (squares of the fundamental units where
    /// the norm is -1).
    pub delta_coords: Vec<NfElement>,
    pub delta_gens: Vec<Vec<CDec>>,
    /// Doubled lattice: the power-basis images and their i-multiples.
    pub lattice: Vec<Vec<CDec>>,
}

#[derive(Clone, Debug)]
pub struct ConstructedGroup {
    pub field: NumberFieldSpec,
    pub unit_coords: Vec<NfElement>,
    pub unit_norms: Vec<i64>,
    /// One diagonal (r+1)-tuple per fundamental unit.
    pub torus_gens: Vec<Vec<CDec>>,
    /// Images of 1, theta, ..., theta^{d-1}; d vectors in C^{r+1}.
    pub lattice_gens: Vec<Vec<CDec>>,
    pub totally_real: bool,
    pub cocompact: Option<CocompactData>,
    pub digits: u32,
    pub scale: u32,
}

fn embed_all(elem: &NfElement, emb: &EmbeddingData) -> Vec<CDec> {
    emb.roots.iter().map(|root| elem.embed(root)).collect()
}

/// Product over all d embeddings: real slots once, complex slots via
/// |value|^2 per conjugate pair.
fn full_embedding_product(slots: &[Vec<CDec>], idx: usize, emb: &EmbeddingData) -> CDec {
    let scale = emb.scale;
    let mut prod = CDec::one(scale);
    for (i, v) in slots[idx].iter().enumerate() {
        prod = prod.mul(v);
        if i >= emb.r1 {
            prod = prod.mul(&v.conj());
        }
    }
    prod
}

pub fn build_construction(
    nf: &NumberFieldSpec,
    units: &UnitGroup,
    emb: &EmbeddingData,
) -> Result<ConstructedGroup, NfError> {
    let scale = emb.scale;
    let d = nf.degree();
    let tol = Dec::eps(emb.digits.saturating_sub(5).max(10), scale);

    let unit_norms: Vec<i64> = units
        .fundamental_units
        .iter()
        .map(|u| {
            field_norm(u, &nf.poly)
                .to_i64()
                .expect("unit norm is +-1")
        })
        .collect();
    let torus_gens: Vec<Vec<CDec>> = units
        .fundamental_units
        .iter()
        .map(|u| embed_all(u, emb))
        .collect();
    // exact/numeric consistency: product of all embeddings = field norm
    for (idx, &norm) in unit_norms.iter().enumerate() {
        let prod = full_embedding_product(&torus_gens, idx, emb);
        let defect = prod.sub(&CDec::from_real(Dec::from_i64(norm, scale))).abs();
        if defect.cmp_dec(&tol) != Ordering::Less {
            return Err(NfError::PrecisionUnreachable(
                "embedding product does not match the exact norm".into(),
            ));
        }
    }

    let lattice_gens: Vec<Vec<CDec>> = (0..d)
        .map(|j| emb.roots.iter().map(|root| root.powi(j as i64)).collect())
        .collect();
    // density of the lattice: complex span is all of C^{r+1}, real span
    // has real dimension d
    let slots = emb.roots.len();
    let cplx: Vec<Vec<Complex64>> = lattice_gens
        .iter()
        .map(|v| v.iter().map(|z| z.to_c64()).collect())
        .collect();
    if numeric_rank(&cplx, 1e-9) != slots {
        return Err(NfError::RankDeficient);
    }
    let real_rows: Vec<Vec<Complex64>> = lattice_gens
        .iter()
        .map(|v| {
            v.iter()
                .flat_map(|z| {
                    [
                        Complex64::new(z.re.to_f64(), 0.0),
                        Complex64::new(z.im.to_f64(), 0.0),
                    ]
                })
                .collect()
        })
        .collect();
    if numeric_rank(&real_rows, 1e-9) != d {
        return Err(NfError::RankDeficient);
    }

    let totally_real = nf.r2 == 0;
    let cocompact = if totally_real {
        let i_unit = CDec::new(Dec::zero(scale), Dec::from_i64(1, scale));
        let mut delta_coords = Vec::new();
        let mut delta_gens = Vec::new();
        for (u, &norm) in units.fundamental_units.iter().zip(&unit_norms) {
            let delta = if norm == 1 {
                u.clone()
            } else {
                u.mul_mod(u, &nf.poly)
            };
            let gens = embed_all(&delta, emb);
            let mut det = CDec::one(scale);
            for g in &gens {
                det = det.mul(g);
            }
            let defect = det.sub(&CDec::one(scale)).abs();
            if defect.cmp_dec(&tol) != Ordering::Less {
                return Err(NfError::PrecisionUnreachable(
                    "determinant-one selection failed certification".into(),
                ));
            }
            delta_coords.push(delta);
            delta_gens.push(gens);
        }
        let mut lattice = lattice_gens.clone();
        for v in &lattice_gens {
            lattice.push(v.iter().map(|z| z.mul(&i_unit)).collect());
        }
        Some(CocompactData {
            delta_coords,
            delta_gens,
            lattice,
        })
    } else {
        None
    };

    Ok(ConstructedGroup {
        field: nf.clone(),
        unit_coords: units.fundamental_units.clone(),
        unit_norms,
        torus_gens,
        lattice_gens,
        totally_real,
        cocompact,
        digits: emb.digits,
        scale,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureFlag {
    /// An infinite-order multiplicative relation was exhibited.
    Witnessed,
    /// No relation within the exponent bound; the reported dimension is
    /// only an upper bound certificate.
    BoundLimited,
}

#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub m: usize,
    pub flag: ClosureFlag,
    pub relation: Option<Vec<i64>>,
    /// Torsion relations found and discarded: (exponent vector, order of
    /// the common character value).
    pub torsion_relations: Vec<(Vec<i64>, u32)>,
    pub exponent_bound: i64,
}

fn next_vector(v: &mut [i64], bound: i64) -> bool {
    for x in v.iter_mut().rev() {
        *x += 1;
        if *x <= bound {
            return true;
        }
        *x = -bound;
    }
    false
}

fn is_primitive(v: &[i64]) -> bool {
    let mut g: i64 = 0;
    for &x in v {
        g = g.gcd(&x);
    }
    g == 1
}

/// Dimension of the closure of the diagonal unit embeddings inside the
/// (r+1)-torus, determined by a bounded search for character relations.
/// Character values that are roots of unity (order <= 12) are recorded
/// but do not count: a torsion character does not cut the dimension of
/// the closure of an infinite cyclic part.
pub fn torus_closure_dim(
    group: &ConstructedGroup,
    exponent_bound: i64,
) -> Result<ClosureReport, NfError> {
    let r = group.unit_coords.len();
    if r == 0 {
        return Err(NfError::TorsionOnly);
    }
    let slots = group.torus_gens[0].len();
    let scale = group.scale;
    let tol = Dec::eps(20.min(scale - 5), scale);
    let mut torsion_relations = Vec::new();
    let mut a = vec![-exponent_bound; slots];
    loop {
        let nonzero = a.iter().any(|&x| x != 0);
        // canonical representative: first nonzero entry positive
        let canonical = a.iter().find(|&&x| x != 0).map(|&x| x > 0).unwrap_or(false);
        if nonzero && canonical && is_primitive(&a) {
            let values: Vec<CDec> = group
                .torus_gens
                .iter()
                .map(|gen| {
                    let mut v = CDec::one(scale);
                    for (slot, &e) in gen.iter().zip(&a) {
                        if e != 0 {
                            v = v.mul(&slot.powi(e));
                        }
                    }
                    v
                })
                .collect();
            let order = (1..=12u32).find(|&k| {
                values.iter().all(|v| {
                    v.powi(k as i64)
                        .sub(&CDec::one(scale))
                        .abs()
                        .cmp_dec(&tol)
                        == Ordering::Less
                })
            });
            match order {
                Some(1) => {
                    return Ok(ClosureReport {
                        m: r,
                        flag: ClosureFlag::Witnessed,
                        relation: Some(a.clone()),
                        torsion_relations,
                        exponent_bound,
                    });
                }
                Some(k) => torsion_relations.push((a.clone(), k)),
                None => {}
            }
        }
        if !next_vector(&mut a, exponent_bound) {
            break;
        }
    }
    Ok(ClosureReport {
        m: r + 1,
        flag: ClosureFlag::BoundLimited,
        relation: None,
        torsion_relations,
        exponent_bound,
    })
}

/// Weight patterns the number-field construction can realize. The only
/// implemented pattern is the split-rank-1 pair (1, -1): a totally real
/// quadratic field whose unit acts on the two embedding eigenlines.
pub fn match_constructible_pattern(weights: &[i64]) -> Option<super::poly::IntPoly> {
    let mut w = weights.to_vec();
    w.sort_unstable();
    (w == [-1, 1]).then(|| super::poly::IntPoly::from_i64(&[-2, 0, 1]))
}

/// End-to-end pipeline from a defining polynomial.
pub fn construct_from_poly(
    poly: &super::poly::IntPoly,
    coeff_bound: i64,
    digits: u32,
    trusted: bool,
) -> Result<(ConstructedGroup, UnitGroup, EmbeddingData), NfError> {
    let nf = NumberFieldSpec::with_trust(poly.clone(), trusted)?;
    let emb = super::compute_embeddings(&nf.poly, digits)?;
    let units = super::units::find_fundamental_units(&nf, &emb, coeff_bound)?;
    let group = build_construction(&nf, &units, &emb)?;
    Ok((group, units, emb))
}
