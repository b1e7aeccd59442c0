//! Density evidence for generator sets: bounded-exponent multiplicative
//! independence of torus values (numeric and exact variants) and the
//! three-part density check (torus independence, translation span, full
//! support).

use super::{Element, GenKind, GeneratorSet, VerifyError};
use crate::bigdec::{CDec, Dec};
use crate::exact::numeric_rank;
use crate::group_spec::GroupSpec;
use crate::number_construct::construct::ConstructedGroup;
use crate::number_construct::poly::IntPoly;
use crate::number_construct::units::NfElement;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// Outcome of a bounded-exponent independence scan.
#[derive(Clone, Debug)]
pub struct IndependenceReport {
    pub exponent_bound: i64,
    /// First exact relation found (canonical representative: first
    /// nonzero exponent positive, lexicographic scan order), if any.
    pub relation: Option<Vec<i64>>,
    /// Torsion hits seen along the way: primitive exponent vectors whose
    /// character value is a root of unity of the recorded order.
    pub torsion_relations: Vec<(Vec<i64>, u32)>,
}

impl IndependenceReport {
    pub fn independent(&self) -> bool {
        self.relation.is_none()
    }
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd64(b, a % b)
    }
}

fn is_canonical(v: &[i64]) -> bool {
    matches!(v.iter().find(|&&x| x != 0), Some(&x) if x > 0)
}

fn is_primitive(v: &[i64]) -> bool {
    v.iter().copied().fold(0i64, gcd64) == 1
}

/// Iterate exponent vectors in [-bound, bound]^k in lexicographic order,
/// keeping one representative per sign pair (first nonzero entry
/// positive).
fn canonical_vectors(k: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut v = vec![-bound; k];
    loop {
        if is_canonical(&v) {
            out.push(v.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < bound {
                v[i] += 1;
                for x in v.iter_mut().skip(i + 1) {
                    *x = -bound;
                }
                break;
            }
        }
    }
}

const MAX_TORSION_ORDER: i64 = 12;

/// Scan exponent vectors with entries bounded by `bound` for an exact
/// multiplicative relation among the values, at fixed-point tolerance
/// 10^-20. Torsion hits (character value a root of unity) are recorded
/// separately and do not count as relations; the first genuine relation
/// in scan order stops the search.
pub fn multiplicative_independence(values: &[CDec], bound: i64) -> IndependenceReport {
    assert!(bound >= 1);
    let mut report = IndependenceReport {
        exponent_bound: bound,
        relation: None,
        torsion_relations: Vec::new(),
    };
    if values.is_empty() {
        return report;
    }
    let scale = values[0].re.scale();
    let tol = Dec::eps(20.min(scale.saturating_sub(5)), scale);
    let fast: Vec<Complex64> = values.iter().map(|v| v.to_c64()).collect();
    let one64 = Complex64::new(1.0, 0.0);
    for v in canonical_vectors(values.len(), bound) {
        // cheap screen in double precision
        let mut p64 = one64;
        for (x, n) in fast.iter().zip(&v) {
            p64 *= x.powi(*n as i32);
        }
        let mut near_unity = (p64 - one64).norm() < 1e-6;
        let mut near_torsion = false;
        if !near_unity {
            let mut q = p64;
            for _ in 1..MAX_TORSION_ORDER {
                q *= p64;
                if (q - one64).norm() < 1e-6 {
                    near_torsion = true;
                    break;
                }
            }
        }
        if !near_unity && !near_torsion {
            continue;
        }
        // confirm at full precision
        let mut prod = CDec::one(scale);
        for (x, n) in values.iter().zip(&v) {
            prod = prod.mul(&x.powi(*n));
        }
        near_unity = prod.sub(&CDec::one(scale)).abs().cmp_dec(&tol) == Ordering::Less;
        if near_unity {
            report.relation = Some(v);
            return report;
        }
        if is_primitive(&v) {
            let mut q = prod.clone();
            for k in 2..=MAX_TORSION_ORDER {
                q = q.mul(&prod);
                if q.sub(&CDec::one(scale)).abs().cmp_dec(&tol) == Ordering::Less {
                    report.torsion_relations.push((v, k as u32));
                    break;
                }
            }
        }
    }
    report
}

/// Field element with rational coordinates in the power basis of a monic
/// integer polynomial; supports the exact independence scan.
pub type QNf = Vec<BigRational>;

pub fn qnf_from_int(e: &NfElement, degree: usize) -> QNf {
    let mut out: QNf = e
        .coords
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    out.resize(degree, BigRational::zero());
    out
}

pub fn qnf_one(degree: usize) -> QNf {
    let mut v = vec![BigRational::zero(); degree];
    v[0] = BigRational::one();
    v
}

fn qnf_is_one(a: &QNf) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
}

/// Multiply modulo the monic defining polynomial.
pub fn qnf_mul(a: &QNf, b: &QNf, f: &IntPoly) -> QNf {
    let d = f.degree();
    let mut long = vec![BigRational::zero(); 2 * d];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                long[i + j] += x * y;
            }
        }
    }
    // reduce: theta^d = -(f_0 + f_1 theta + ... + f_{d-1} theta^{d-1})
    for k in (d..2 * d).rev() {
        let c = std::mem::replace(&mut long[k], BigRational::zero());
        if c.is_zero() {
            continue;
        }
        for j in 0..d {
            let fj = BigRational::from_integer(f.coeffs[j].clone());
            long[k - d + j] -= &c * fj;
        }
    }
    long.truncate(d);
    long
}

/// Invert by solving the linear system (a * theta^j basis) x = 1 over Q.
pub fn qnf_inv(a: &QNf, f: &IntPoly) -> Option<QNf> {
    let d = f.degree();
    // columns: coordinates of a * theta^j
    let mut cols: Vec<QNf> = Vec::with_capacity(d);
    let mut cur = a.clone();
    for _ in 0..d {
        cols.push(cur.clone());
        let mut theta = vec![BigRational::zero(); d];
        if d > 1 {
            theta[1] = BigRational::one();
        }
        cur = qnf_mul(&cur, &theta, f);
    }
    // augmented Gaussian elimination: M x = e0 with M[i][j] = cols[j][i]
    let mut m: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..d).map(|j| cols[j][i].clone()).collect();
            row.push(if i == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            });
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=d {
                    let sub = &factor * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some((0..d).map(|i| m[i][d].clone()).collect())
}

fn qnf_pow(a: &QNf, n: i64, f: &IntPoly) -> Option<QNf> {
    let d = f.degree();
    if n == 0 {
        return Some(qnf_one(d));
    }
    let base = if n < 0 { qnf_inv(a, f)? } else { a.clone() };
    let mut acc = qnf_one(d);
    let mut b = base;
    let mut e = n.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc = qnf_mul(&acc, &b, f);
        }
        b = qnf_mul(&b, &b, f);
        e >>= 1;
    }
    Some(acc)
}

/// Exact bounded-exponent independence over the field Q[x]/(f): a
/// relation among the field elements holds iff it holds simultaneously
/// at every embedding, so exact field arithmetic decides it with no
/// tolerance at all. Intended for unit groups in low-degree fields.
pub fn multiplicative_independence_exact(
    elems: &[NfElement],
    f: &IntPoly,
    bound: i64,
) -> IndependenceReport {
    assert!(bound >= 1);
    assert!(f.is_monic());
    let d = f.degree();
    let mut report = IndependenceReport {
        exponent_bound: bound,
        relation: None,
        torsion_relations: Vec::new(),
    };
    if elems.is_empty() {
        return report;
    }
    let vals: Vec<QNf> = elems.iter().map(|e| qnf_from_int(e, d)).collect();
    for v in canonical_vectors(elems.len(), bound) {
        let mut prod = qnf_one(d);
        let mut invertible = true;
        for (x, n) in vals.iter().zip(&v) {
            match qnf_pow(x, *n, f) {
                Some(p) => prod = qnf_mul(&prod, &p, f),
                None => {
                    invertible = false;
                    break;
                }
            }
        }
        if !invertible {
            continue;
        }
        if qnf_is_one(&prod) {
            report.relation = Some(v);
            return report;
        }
        if is_primitive(&v) {
            let mut q = prod.clone();
            for k in 2..=MAX_TORSION_ORDER {
                q = qnf_mul(&q, &prod, f);
                if qnf_is_one(&q) {
                    report.torsion_relations.push((v, k as u32));
                    break;
                }
            }
        }
    }
    report
}

#[derive(Clone, Debug)]
pub struct DensityReport {
    /// Torus part: per-coordinate values are present, not all torsion,
    /// and free of non-torsion bounded relations. (For matrix-affine
    /// sets: the linear parts do not commute.)
    pub torus_independent: bool,
    /// Translations of generators and commutators span the translation
    /// space over C.
    pub translation_span: bool,
    /// Some accumulated translation has every coordinate nonzero.
    pub full_support: bool,
    pub exponent_bound: i64,
    pub details: Vec<String>,
}

impl DensityReport {
    pub fn pass(&self) -> bool {
        self.torus_independent && self.translation_span && self.full_support
    }
}

const NUM_TOL: f64 = 1e-9;

fn is_numeric_torsion(v: Complex64) -> bool {
    if (v.norm() - 1.0).abs() > NUM_TOL {
        return false;
    }
    let mut q = Complex64::new(1.0, 0.0);
    for _ in 0..MAX_TORSION_ORDER {
        q *= v;
        if (q - Complex64::new(1.0, 0.0)).norm() < NUM_TOL {
            return true;
        }
    }
    false
}

fn commutator(a: &Element, b: &Element) -> Element {
    a.mul(b).mul(&a.inverse()).mul(&b.inverse())
}

/// Evidence-style density check of a generator set against a solvable
/// spec (diagonal-affine shape) or a matrix-affine lift. Passing is
/// necessary-style evidence for a dense closure, not a proof; a clean
/// failure pinpoints which ingredient is missing.
pub fn density_check(
    gens: &GeneratorSet,
    spec: &GroupSpec,
    exp_bound: i64,
) -> Result<DensityReport, VerifyError> {
    match gens.kind {
        GenKind::Affine { dim } => {
            let sd = match spec {
                GroupSpec::Solvable(sd) => sd,
                _ => {
                    return Err(VerifyError::ShapeMismatch(
                        "diagonal-affine generators require a solvable spec".into(),
                    ))
                }
            };
            if sd.unipotent.dim != dim {
                return Err(VerifyError::ShapeMismatch(format!(
                    "generator dimension {dim} != spec translation dimension {}",
                    sd.unipotent.dim
                )));
            }
            density_check_affine(gens, dim, sd.torus.split_rank + sd.torus.anisotropic_rank, exp_bound)
        }
        GenKind::MatrixAffine => {
            if let GroupSpec::Solvable(_) = spec {
                return Err(VerifyError::ShapeMismatch(
                    "matrix-affine generators require a non-solvable ambient spec".into(),
                ));
            }
            density_check_mat_affine(gens, exp_bound)
        }
        GenKind::Matrix2x2 => Err(VerifyError::ShapeMismatch(
            "pure matrix sets carry no translation part to check".into(),
        )),
    }
}

fn density_check_affine(
    gens: &GeneratorSet,
    dim: usize,
    torus_rank: usize,
    exp_bound: i64,
) -> Result<DensityReport, VerifyError> {
    let mut details = Vec::new();

    // (a) per-coordinate torus values: nontrivial, not all torsion, no
    // bounded non-torsion relation
    let mut torus_ok = true;
    if torus_rank > 0 {
        for j in 0..dim {
            let mut values: Vec<Complex64> = Vec::new();
            for e in &gens.elements {
                if let Element::Affine { diag, .. } = e {
                    let v = diag[j];
                    if (v - Complex64::new(1.0, 0.0)).norm() > NUM_TOL {
                        values.push(v);
                    }
                }
            }
            if values.is_empty() {
                torus_ok = false;
                details.push(format!("coordinate {j}: no nontrivial torus value"));
                continue;
            }
            if values.iter().all(|&v| is_numeric_torsion(v)) {
                torus_ok = false;
                details.push(format!("coordinate {j}: all torus values are torsion"));
                continue;
            }
            let scale = 40;
            let cdec: Vec<CDec> = values
                .iter()
                .map(|v| CDec::from_f64(v.re, v.im, scale))
                .collect();
            let rep = multiplicative_independence(&cdec, exp_bound);
            if let Some(rel) = rep.relation {
                torus_ok = false;
                details.push(format!("coordinate {j}: exact relation {rel:?}"));
            }
        }
    }
    if torus_ok {
        details.push("torus values independent on every coordinate".into());
    }

    // accumulate translations: generators, pairwise products, commutators
    let mut translations: Vec<Vec<Complex64>> = Vec::new();
    let mut push_trans = |e: &Element| {
        if let Element::Affine { trans, .. } = e {
            if trans.iter().any(|t| t.norm() > NUM_TOL) {
                translations.push(trans.clone());
            }
        }
    };
    for e in &gens.elements {
        push_trans(e);
    }
    for (i, a) in gens.elements.iter().enumerate() {
        for (k, b) in gens.elements.iter().enumerate() {
            if i != k {
                push_trans(&a.mul(b));
                push_trans(&commutator(a, b));
            }
        }
    }

    // (b) span over C
    let rank = numeric_rank(&translations, NUM_TOL);
    let span_ok = rank == dim;
    details.push(format!("translation span rank {rank} of {dim}"));

    // (c) full support
    let support_ok = translations
        .iter()
        .any(|t| t.iter().all(|x| x.norm() > NUM_TOL));
    if !support_ok {
        details.push("no accumulated translation touches every coordinate".into());
    }

    Ok(DensityReport {
        torus_independent: torus_ok,
        translation_span: span_ok,
        full_support: support_ok,
        exponent_bound: exp_bound,
        details,
    })
}

fn density_check_mat_affine(
    gens: &GeneratorSet,
    exp_bound: i64,
) -> Result<DensityReport, VerifyError> {
    let mut details = Vec::new();
    // (a) linear parts must not all commute: a commuting linear image
    // sits inside a torus or unipotent line and cannot be Zariski-dense
    // in the matrix factor
    let mut noncomm = false;
    'outer: for (i, a) in gens.elements.iter().enumerate() {
        for b in gens.elements.iter().skip(i + 1) {
            let (ma, mb) = match (a, b) {
                (Element::MatAffine { m: ma, .. }, Element::MatAffine { m: mb, .. }) => (ma, mb),
                _ => continue,
            };
            let ab = super::mat_mul(ma, mb);
            let ba = super::mat_mul(mb, ma);
            let diff: f64 = ab
                .iter()
                .flatten()
                .zip(ba.iter().flatten())
                .map(|(x, y)| (x - y).norm())
                .sum();
            if diff > NUM_TOL {
                noncomm = true;
                break 'outer;
            }
        }
    }
    details.push(if noncomm {
        "linear parts are noncommutative".into()
    } else {
        "linear parts all commute".into()
    });

    let mut translations: Vec<Vec<Complex64>> = Vec::new();
    let mut push_trans = |e: &Element| {
        if let Element::MatAffine { trans, .. } = e {
            if trans.iter().any(|t| t.norm() > NUM_TOL) {
                translations.push(trans.to_vec());
            }
        }
    };
    for e in &gens.elements {
        push_trans(e);
    }
    for (i, a) in gens.elements.iter().enumerate() {
        for (k, b) in gens.elements.iter().enumerate() {
            if i != k {
                push_trans(&a.mul(b));
                push_trans(&commutator(a, b));
            }
        }
    }
    let rank = numeric_rank(&translations, NUM_TOL);
    let span_ok = rank == 2;
    details.push(format!("translation span rank {rank} of 2"));
    let support_ok = translations
        .iter()
        .any(|t| t.iter().all(|x| x.norm() > NUM_TOL));
    Ok(DensityReport {
        torus_independent: noncomm,
        translation_span: span_ok,
        full_support: support_ok,
        exponent_bound: exp_bound,
        details,
    })
}

/// Package a constructed number-field group as a diagonal-affine
/// generator set: one diagonal generator per torus generator, one pure
/// translation per lattice vector. Uses the doubled real-and-imaginary
/// lattice when the cocompact extension is present.
pub fn gens_from_construction(cg: &ConstructedGroup) -> Result<GeneratorSet, VerifyError> {
    let dim = cg.field.degree();
    let (diags, lattice): (&Vec<Vec<CDec>>, &Vec<Vec<CDec>>) = match &cg.cocompact {
        Some(cc) => (&cc.delta_gens, &cc.lattice),
        None => (&cg.torus_gens, &cg.lattice_gens),
    };
    let mut elements = Vec::new();
    for dg in diags {
        elements.push(Element::Affine {
            diag: dg.iter().map(|x| x.to_c64()).collect(),
            trans: vec![Complex64::new(0.0, 0.0); dim],
        });
    }
    for v in lattice {
        elements.push(Element::Affine {
            diag: vec![Complex64::new(1.0, 0.0); dim],
            trans: v.iter().map(|x| x.to_c64()).collect(),
        });
    }
    GeneratorSet::new(GenKind::Affine { dim }, elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_spec::fixtures;
    use num_bigint::BigInt;
    use crate::number_construct::construct::construct_from_poly;
    use crate::number_construct::poly::IntPoly;
    use crate::verify::lift::lift_discrete_dense;
    use crate::verify::pingpong::sanov_pair;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn independence_finds_power_relation() {
        let scale = 40;
        let vals = vec![
            CDec::from_f64(2.0, 0.0, scale),
            CDec::from_f64(4.0, 0.0, scale),
        ];
        let rep = multiplicative_independence(&vals, 5);
        assert_eq!(rep.relation, Some(vec![2, -1]));
    }

    #[test]
    fn independence_of_sqrt2_and_3() {
        let scale = 40;
        let vals = vec![
            CDec::from_real(crate::bigdec::Dec::from_i64(2, scale).sqrt()),
            CDec::from_f64(3.0, 0.0, scale),
        ];
        let rep = multiplicative_independence(&vals, 8);
        assert!(rep.independent());
    }

    #[test]
    fn torsion_recorded_not_counted() {
        let scale = 40;
        let vals = vec![CDec::from_f64(-1.0, 0.0, scale)];
        let rep = multiplicative_independence(&vals, 4);
        // (-1)^2 = 1 is a genuine relation; the primitive vector (1) is
        // a torsion hit of order 2 recorded before the relation at (2)
        assert_eq!(rep.relation, Some(vec![2]));
        assert!(rep.torsion_relations.contains(&(vec![1], 2)));
    }

    #[test]
    fn exact_field_arithmetic() {
        let f = IntPoly::parse("x^2-2").unwrap();
        let u = qnf_from_int(&NfElement::from_i64(&[1, 1]), 2);
        let ui = qnf_inv(&u, &f).unwrap();
        assert!(qnf_is_one(&qnf_mul(&u, &ui, &f)));
        // (1+t)(1-t) = 1 - t^2 = -1
        let ubar = qnf_from_int(&NfElement::from_i64(&[1, -1]), 2);
        let prod = qnf_mul(&u, &ubar, &f);
        assert_eq!(prod[0], BigRational::from_integer(BigInt::from(-1)));
        assert!(prod[1].is_zero());
    }

    #[test]
    fn exact_independence_unit_and_conjugate() {
        let f = IntPoly::parse("x^2-2").unwrap();
        let elems = vec![NfElement::from_i64(&[1, 1]), NfElement::from_i64(&[1, -1])];
        let rep = multiplicative_independence_exact(&elems, &f, 5);
        assert_eq!(rep.relation, Some(vec![2, 2]));
        assert!(rep.torsion_relations.contains(&(vec![1, 1], 2)));
    }

    #[test]
    fn exact_independence_of_single_unit() {
        let f = IntPoly::parse("x^2-2").unwrap();
        let rep =
            multiplicative_independence_exact(&[NfElement::from_i64(&[1, 1])], &f, 10);
        assert!(rep.independent());
        assert!(rep.torsion_relations.is_empty());
    }

    #[test]
    fn constructed_sqrt2_group_passes() {
        let f = IntPoly::parse("x^2-2").unwrap();
        let (cg, _, _) = construct_from_poly(&f, 6, 30, false).unwrap();
        let gens = gens_from_construction(&cg).unwrap();
        let spec = fixtures::metabelian(&[1, -1]);
        let rep = density_check(&gens, &spec, 8).unwrap();
        assert!(rep.torus_independent, "{:?}", rep.details);
        assert!(rep.translation_span, "{:?}", rep.details);
        assert!(rep.full_support, "{:?}", rep.details);
        assert!(rep.pass());
    }

    #[test]
    fn torsion_only_torus_fails() {
        let gens = GeneratorSet::new(
            GenKind::Affine { dim: 2 },
            vec![
                Element::Affine {
                    diag: vec![c(0.0, 1.0), c(0.0, -1.0)],
                    trans: vec![c(0.0, 0.0); 2],
                },
                Element::Affine {
                    diag: vec![c(1.0, 0.0); 2],
                    trans: vec![c(1.0, 0.0), c(1.0, 0.0)],
                },
                Element::Affine {
                    diag: vec![c(1.0, 0.0); 2],
                    trans: vec![c(0.0, 1.0), c(0.0, -1.0)],
                },
            ],
        )
        .unwrap();
        let spec = fixtures::metabelian(&[1, -1]);
        let rep = density_check(&gens, &spec, 6).unwrap();
        assert!(!rep.torus_independent);
    }

    #[test]
    fn deficient_translation_span_fails() {
        let gens = GeneratorSet::new(
            GenKind::Affine { dim: 2 },
            vec![
                Element::Affine {
                    diag: vec![c(2.0, 0.0), c(0.5, 0.0)],
                    trans: vec![c(0.0, 0.0); 2],
                },
                Element::Affine {
                    diag: vec![c(1.0, 0.0); 2],
                    trans: vec![c(1.0, 0.0), c(0.0, 0.0)],
                },
            ],
        )
        .unwrap();
        let spec = fixtures::metabelian(&[1, -1]);
        let rep = density_check(&gens, &spec, 6).unwrap();
        assert!(!rep.translation_span);
        assert!(!rep.pass());
    }

    #[test]
    fn shape_mismatch_detected() {
        let gens = GeneratorSet::new(
            GenKind::Affine { dim: 3 },
            vec![Element::Affine {
                diag: vec![c(1.0, 0.0); 3],
                trans: vec![c(1.0, 0.0); 3],
            }],
        )
        .unwrap();
        let spec = fixtures::metabelian(&[1, -1]); // dim 2
        assert!(matches!(
            density_check(&gens, &spec, 6),
            Err(VerifyError::ShapeMismatch(_))
        ));
    }

    #[test]
    fn lifted_generators_pass() {
        let (a, b) = sanov_pair();
        let kernel = vec![
            [c(1.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0, 0.0)],
            [c(0.0, 1.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 1.0)],
        ];
        let lift = lift_discrete_dense(&a, &b, &kernel, &[]).unwrap();
        let spec = GroupSpec::Semisimple(crate::group_spec::SemisimpleFlags {
            isotropic: true,
            anisotropic_factor_present: false,
        });
        let rep = density_check(&lift.gens, &spec, 6).unwrap();
        assert!(rep.torus_independent, "{:?}", rep.details);
        assert!(rep.translation_span);
        assert!(rep.full_support, "{:?}", rep.details);
    }

    #[test]
    fn commutator_span_matches_derived_translation_dim() {
        // weight (1,-1) group: commutators of the diagonal generator
        // with pure translations land in the translation space and span
        // exactly the nonzero-weight lines (both of them)
        let f = IntPoly::parse("x^2-2").unwrap();
        let (cg, _, _) = construct_from_poly(&f, 6, 30, false).unwrap();
        let gens = gens_from_construction(&cg).unwrap();
        let mut comm_trans: Vec<Vec<Complex64>> = Vec::new();
        for (i, a) in gens.elements.iter().enumerate() {
            for (k, b) in gens.elements.iter().enumerate() {
                if i != k {
                    if let Element::Affine { trans, .. } = commutator(a, b) {
                        if trans.iter().any(|t| t.norm() > 1e-9) {
                            comm_trans.push(trans);
                        }
                    }
                }
            }
        }
        assert_eq!(numeric_rank(&comm_trans, 1e-9), 2);
    }
}
