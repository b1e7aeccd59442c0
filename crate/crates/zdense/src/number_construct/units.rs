//! Ring-of-integers elements in the power basis, exact field norms, and
//! fundamental-unit search (continued fractions for real quadratic
//! fields, exhaustive coefficient boxes for cubics).

use super::poly::{resultant, IntPoly};
use super::{EmbeddingData, NfError, NumberFieldSpec};
use crate::bigdec::CDec;
use crate::exact::numeric_rank;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Element of Z[theta] in power-basis coordinates (length = degree).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NfElement {
    pub coords: Vec<BigInt>,
}

impl NfElement {
    pub fn from_i64(coords: &[i64]) -> Self {
        NfElement {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut coords = vec![BigInt::zero(); degree];
        coords[0] = BigInt::one();
        NfElement { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.coords.clone())
    }

    /// Product in Z[theta]: polynomial multiplication reduced mod the
    /// (monic) defining polynomial — exact integer arithmetic.
    pub fn mul_mod(&self, other: &Self, f: &IntPoly) -> Self {
        let d = f.degree();
        let mut prod = vec![BigInt::zero(); 2 * d];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        for k in (d..2 * d).rev() {
            if prod[k].is_zero() {
                continue;
            }
            let lead = prod[k].clone();
            for (i, c) in f.coeffs.iter().take(d).enumerate() {
                prod[k - d + i] -= &lead * c;
            }
            prod[k] = BigInt::zero();
        }
        prod.truncate(d);
        NfElement { coords: prod }
    }

    /// Image under the embedding sending theta to `root`.
    pub fn embed(&self, root: &CDec) -> CDec {
        let scale = root.re.scale();
        let mut acc = CDec::zero(scale);
        for c in self.coords.iter().rev() {
            acc = acc
                .mul(root)
                .add(&CDec::from_real(crate::bigdec::Dec::from_bigint(c, scale)));
        }
        acc
    }

    pub fn embed_f64(&self, root: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coords.iter().rev() {
            acc = acc * root + c.to_f64().unwrap_or(0.0);
        }
        acc
    }
}

/// Exact field norm N(g(theta)) = resultant(f, g) for monic f.
pub fn field_norm(elem: &NfElement, f: &IntPoly) -> BigInt {
    resultant(f, &elem.to_poly())
}

#[derive(Clone, Debug)]
pub struct UnitGroup {
    pub fundamental_units: Vec<NfElement>,
    pub torsion_order: u32,
    /// Height (max |log of an embedding|) up to which the search was
    /// exhaustive — fundamentality is certified only below this height.
    pub searched_height: f64,
}

fn torsion_order(nf: &NumberFieldSpec) -> u32 {
    if nf.r1 > 0 {
        return 2; // only +-1 when a real embedding exists
    }
    // imaginary quadratic special cases with extra roots of unity
    let c = &nf.poly.coeffs;
    if nf.degree() == 2 {
        if c[0] == BigInt::one() && c[1].is_zero() {
            return 4; // x^2+1, Z[i]
        }
        if c[0] == BigInt::one() && c[1].abs() == BigInt::one() {
            return 6; // x^2+-x+1, Eisenstein-type
        }
    }
    2
}

/// Log-embedding row (r1 real slots, then doubled complex slots).
fn log_row(u: &NfElement, emb: &EmbeddingData) -> Vec<f64> {
    emb.roots
        .iter()
        .enumerate()
        .map(|(i, root)| {
            let v = u.embed_f64(root.to_c64()).norm().ln();
            if i < emb.r1 {
                v
            } else {
                2.0 * v
            }
        })
        .collect()
}

fn log_height(u: &NfElement, emb: &EmbeddingData) -> f64 {
    emb.roots
        .iter()
        .map(|root| u.embed_f64(root.to_c64()).norm().ln().abs())
        .fold(0.0, f64::max)
}

fn rank_f64(rows: &[Vec<f64>], tol: f64) -> usize {
    let m: Vec<Vec<Complex64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
        .collect();
    numeric_rank(&m, tol)
}

/// Fundamental solution of x^2 - D y^2 = +-1 by the continued-fraction
/// expansion of sqrt(D); D positive and not a perfect square.
fn pell_fundamental(d: &BigInt) -> (BigInt, BigInt) {
    let a0 = d.sqrt();
    assert!(&a0 * &a0 != *d, "perfect square");
    let mut m = BigInt::zero();
    let mut den = BigInt::one();
    let mut a = a0.clone();
    let (mut h_prev, mut h) = (BigInt::one(), a0.clone());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    loop {
        let val = &h * &h - d * &k * &k;
        if val.abs().is_one() {
            return (h, k);
        }
        m = &den * &a - &m;
        den = (d - &m * &m) / &den;
        a = (&a0 + &m) / &den;
        let h_new = &a * &h + &h_prev;
        let k_new = &a * &k + &k_prev;
        h_prev = h;
        k_prev = k;
        h = h_new;
        k = k_new;
    }
}

/// Search for r independent units. Real quadratic fields x^2-D take the
/// Pell fast path; otherwise (degree <= 3) an exhaustive coefficient box
/// |a_i| <= coeff_bound filtered by exact norm +-1, ordered by log
/// height with a deterministic tie-break.
pub fn find_fundamental_units(
    nf: &NumberFieldSpec,
    emb: &EmbeddingData,
    coeff_bound: i64,
) -> Result<UnitGroup, NfError> {
    let torsion = torsion_order(nf);
    if nf.r == 0 {
        return Ok(UnitGroup {
            fundamental_units: vec![],
            torsion_order: torsion,
            searched_height: 0.0,
        });
    }
    let d = nf.degree();
    let c = &nf.poly.coeffs;
    if d == 2 && nf.r1 == 2 && c[1].is_zero() {
        // x^2 - D
        let disc = -c[0].clone();
        let (x, y) = pell_fundamental(&disc);
        let u = NfElement {
            coords: vec![x, y],
        };
        let norm = field_norm(&u, &nf.poly);
        debug_assert!(norm.abs().is_one());
        return finish_units(nf, emb, vec![u], torsion, f64::INFINITY);
    }
    if d > 3 {
        return Err(NfError::DegreeUnsupported(d));
    }
    box_search(nf, emb, coeff_bound, torsion)
}

/// Verify user-supplied candidate units: exact norm +-1 and full
/// log-rank.
pub fn verify_candidate_units(
    nf: &NumberFieldSpec,
    emb: &EmbeddingData,
    candidates: Vec<NfElement>,
) -> Result<UnitGroup, NfError> {
    for u in &candidates {
        if !field_norm(u, &nf.poly).abs().is_one() {
            return Err(NfError::RankDeficient);
        }
    }
    finish_units(nf, emb, candidates, torsion_order(nf), 0.0)
}

fn finish_units(
    nf: &NumberFieldSpec,
    emb: &EmbeddingData,
    units: Vec<NfElement>,
    torsion: u32,
    searched_height: f64,
) -> Result<UnitGroup, NfError> {
    let rows: Vec<Vec<f64>> = units.iter().map(|u| log_row(u, emb)).collect();
    if units.len() != nf.r || rank_f64(&rows, 1e-12) != nf.r {
        return Err(NfError::RankDeficient);
    }
    Ok(UnitGroup {
        fundamental_units: units,
        torsion_order: torsion,
        searched_height,
    })
}

fn box_search(
    nf: &NumberFieldSpec,
    emb: &EmbeddingData,
    coeff_bound: i64,
    torsion: u32,
) -> Result<UnitGroup, NfError> {
    let d = nf.degree();
    struct Cand {
        height: f64,
        preferred: bool,
        elem: NfElement,
        row: Vec<f64>,
    }
    let mut cands: Vec<Cand> = Vec::new();
    let mut coords = vec![-coeff_bound; d];
    let mut max_height = 0.0f64;
    'outer: loop {
        let elem = NfElement {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        };
        if !elem.is_zero() {
            let norm = field_norm(&elem, &nf.poly);
            if norm.abs().is_one() {
                let height = log_height(&elem, emb);
                max_height = max_height.max(height);
                if height > 1e-9 {
                    // nontrivial (nontorsion) unit; prefer the orientation
                    // whose largest real embedding exceeds 1
                    let anchor = &emb.roots[emb.r1.saturating_sub(1).min(emb.roots.len() - 1)];
                    let val = elem.embed_f64(anchor.to_c64());
                    let preferred = emb.r1 > 0 && val.im.abs() < 1e-9 && val.re > 1.0;
                    cands.push(Cand {
                        height,
                        preferred,
                        row: log_row(&elem, emb),
                        elem,
                    });
                }
            }
        }
        // odometer increment
        for i in (0..d).rev() {
            coords[i] += 1;
            if coords[i] <= coeff_bound {
                continue 'outer;
            }
            coords[i] = -coeff_bound;
        }
        break;
    }
    // minimum height first; ties by orientation preference then
    // lexicographic coordinates (deterministic output)
    cands.sort_by(|a, b| {
        let qa = (a.height / 1e-9).round() as i64;
        let qb = (b.height / 1e-9).round() as i64;
        qa.cmp(&qb)
            .then(b.preferred.cmp(&a.preferred))
            .then(a.elem.coords.cmp(&b.elem.coords))
    });
    let mut selected: Vec<NfElement> = Vec::new();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for c in cands {
        let mut trial = rows.clone();
        trial.push(c.row.clone());
        if rank_f64(&trial, 1e-9) > rows.len() {
            rows = trial;
            selected.push(c.elem);
            if selected.len() == nf.r {
                break;
            }
        }
    }
    if selected.len() < nf.r {
        return Err(NfError::SearchExhausted(coeff_bound));
    }
    finish_units(nf, emb, selected, torsion, max_height)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_construct::compute_embeddings;

    fn field(coeffs: &[i64]) -> (NumberFieldSpec, EmbeddingData) {
        let nf = NumberFieldSpec::new(IntPoly::from_i64(coeffs)).unwrap();
        let emb = compute_embeddings(&nf.poly, 30).unwrap();
        (nf, emb)
    }

    #[test]
    fn norm_examples() {
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(field_norm(&NfElement::from_i64(&[1, 0]), &f), BigInt::from(1));
        assert_eq!(field_norm(&NfElement::from_i64(&[1, 1]), &f), BigInt::from(-1));
        let f3 = IntPoly::from_i64(&[-1, -1, 0, 1]);
        assert_eq!(
            field_norm(&NfElement::from_i64(&[0, 1, 0]), &f3),
            BigInt::from(1)
        );
    }

    #[test]
    fn norm_matches_embedded_product() {
        let (nf, emb) = field(&[-1, -1, 0, 1]);
        let theta = NfElement::from_i64(&[0, 1, 0]);
        let mut prod = 1.0;
        for (i, root) in emb.roots.iter().enumerate() {
            let v = theta.embed_f64(root.to_c64()).norm();
            prod *= if i < emb.r1 { v } else { v * v };
        }
        let norm = field_norm(&theta, &nf.poly).to_f64().unwrap();
        assert!((prod - norm.abs()).abs() < 1e-12);
    }

    #[test]
    fn mul_mod_reduces() {
        // (1+theta)^2 = 3 + 2 theta in Q(sqrt 2)
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let u = NfElement::from_i64(&[1, 1]);
        assert_eq!(u.mul_mod(&u, &f), NfElement::from_i64(&[3, 2]));
        // theta * theta^2 = theta^3 = theta + 1 for x^3-x-1
        let f3 = IntPoly::from_i64(&[-1, -1, 0, 1]);
        let t = NfElement::from_i64(&[0, 1, 0]);
        let t2 = NfElement::from_i64(&[0, 0, 1]);
        assert_eq!(t.mul_mod(&t2, &f3), NfElement::from_i64(&[1, 1, 0]));
    }

    #[test]
    fn pell_path_sqrt2() {
        let (nf, emb) = field(&[-2, 0, 1]);
        let ug = find_fundamental_units(&nf, &emb, 10).unwrap();
        assert_eq!(ug.fundamental_units.len(), 1);
        assert_eq!(ug.fundamental_units[0], NfElement::from_i64(&[1, 1]));
        assert_eq!(field_norm(&ug.fundamental_units[0], &nf.poly), BigInt::from(-1));
        assert_eq!(ug.torsion_order, 2);
    }

    #[test]
    fn pell_other_discriminants() {
        // x^2-3: fundamental solution 2+sqrt(3), norm +1
        let (nf, emb) = field(&[-3, 0, 1]);
        let ug = find_fundamental_units(&nf, &emb, 10).unwrap();
        assert_eq!(ug.fundamental_units[0], NfElement::from_i64(&[2, 1]));
    }

    #[test]
    fn cubic_box_search_finds_theta() {
        let (nf, emb) = field(&[-1, -1, 0, 1]);
        let ug = find_fundamental_units(&nf, &emb, 10).unwrap();
        assert_eq!(ug.fundamental_units.len(), 1);
        assert_eq!(ug.fundamental_units[0], NfElement::from_i64(&[0, 1, 0]));
        assert_eq!(
            field_norm(&ug.fundamental_units[0], &nf.poly),
            BigInt::from(1)
        );
    }

    #[test]
    fn gaussian_field_is_torsion_only() {
        let (nf, emb) = field(&[1, 0, 1]);
        let ug = find_fundamental_units(&nf, &emb, 5).unwrap();
        assert!(ug.fundamental_units.is_empty());
        assert_eq!(ug.torsion_order, 4);
    }

    #[test]
    fn candidate_verification() {
        let (nf, emb) = field(&[-2, 0, 1]);
        let ok = verify_candidate_units(&nf, &emb, vec![NfElement::from_i64(&[3, 2])]);
        assert!(ok.is_ok()); // (1+sqrt2)^2, independent though not fundamental
        let bad = verify_candidate_units(&nf, &emb, vec![NfElement::from_i64(&[1, 0])]);
        assert!(matches!(bad, Err(NfError::RankDeficient))); // torsion: rank 0
        let nonunit = verify_candidate_units(&nf, &emb, vec![NfElement::from_i64(&[0, 1])]);
        assert!(matches!(nonunit, Err(NfError::RankDeficient))); // norm -2
    }
}
