//! Positive-characteristic gallery arithmetic: truncated Laurent series
//! over F_p, length-2 Witt vectors, and three executable scans showing
//! (1) Frobenius-image cosets of units, (2) a compact unipotent group cut
//! out by coefficient recurrences, and (3) a p-th-power map whose kernel
//! contains a line.
//!
//! Every claim here is "verified at truncation": reports always carry
//! the horizon they were computed at and never assert more.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LwError {
    #[error("operation needs coefficient at exponent {needed} beyond horizon {horizon}")]
    HorizonUnderflow { needed: i64, horizon: i64 },
    #[error("series have different characteristics")]
    PrimeMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the zero series has no inverse")]
    ZeroInverse,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// --- arithmetic in F_p -------------------------------------------------

fn fadd(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

fn fsub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

fn fmul(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn fpow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = fmul(acc, a, p);
        }
        a = fmul(a, a, p);
        e >>= 1;
    }
    acc
}

fn finv(a: u64, p: u64) -> u64 {
    fpow(a, p - 2, p)
}

/// Dense polynomial over F_p, lowest degree first. Used for the Witt
/// addition polynomial and small symbolic checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0;
        for c in self.coeffs.iter().rev() {
            acc = fadd(fmul(acc, x, self.p), *c, self.p);
        }
        acc
    }

    pub fn add(&self, o: &FpPoly) -> FpPoly {
        assert_eq!(self.p, o.p);
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                fadd(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    o.coeffs.get(i).copied().unwrap_or(0),
                    self.p,
                )
            })
            .collect();
        FpPoly::new(self.p, coeffs)
    }

    pub fn mul(&self, o: &FpPoly) -> FpPoly {
        assert_eq!(self.p, o.p);
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return FpPoly::new(self.p, vec![]);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = fadd(coeffs[i + j], fmul(*a, *b, self.p), self.p);
            }
        }
        FpPoly::new(self.p, coeffs)
    }
}

// --- truncated Laurent series ------------------------------------------

/// Laurent series over F_p known exactly for exponents <= `horizon`;
/// coefficients are stored densely from `v_min` and the zero series is
/// canonical (empty coefficient vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLaurent {
    pub p: u64,
    pub v_min: i64,
    pub horizon: i64,
    coeffs: Vec<u64>,
}

impl TruncatedLaurent {
    pub fn zero(p: u64, horizon: i64) -> Self {
        TruncatedLaurent {
            p,
            v_min: 0,
            horizon,
            coeffs: vec![],
        }
    }

    pub fn from_terms(p: u64, terms: &[(i64, u64)], horizon: i64) -> Self {
        let mut s = TruncatedLaurent::zero(p, horizon);
        for &(e, c) in terms {
            assert!(e <= horizon, "term beyond horizon");
            s = s
                .add(&TruncatedLaurent {
                    p,
                    v_min: e,
                    horizon,
                    coeffs: vec![c % p],
                })
                .unwrap();
        }
        s
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.first() == Some(&0) {
            self.coeffs.remove(0);
            self.v_min += 1;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.v_min = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at exponent `e`; asking beyond the horizon is an
    /// error rather than a silent zero.
    pub fn coeff(&self, e: i64) -> Result<u64, LwError> {
        if e > self.horizon {
            return Err(LwError::HorizonUnderflow {
                needed: e,
                horizon: self.horizon,
            });
        }
        if e < self.v_min || e - self.v_min >= self.coeffs.len() as i64 {
            return Ok(0);
        }
        Ok(self.coeffs[(e - self.v_min) as usize])
    }

    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.v_min)
    }

    pub fn support(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| self.v_min + i as i64)
            .collect()
    }

    pub fn add(&self, o: &TruncatedLaurent) -> Result<TruncatedLaurent, LwError> {
        if self.p != o.p {
            return Err(LwError::PrimeMismatch);
        }
        let horizon = self.horizon.min(o.horizon);
        if self.is_zero() {
            return Ok(o.truncated(horizon));
        }
        if o.is_zero() {
            return Ok(self.truncated(horizon));
        }
        let v_min = self.v_min.min(o.v_min);
        let len = (horizon - v_min + 1).max(0) as usize;
        let mut coeffs = vec![0u64; len];
        for s in [self, o] {
            for (i, &c) in s.coeffs.iter().enumerate() {
                let e = s.v_min + i as i64;
                if e <= horizon {
                    let idx = (e - v_min) as usize;
                    coeffs[idx] = fadd(coeffs[idx], c, self.p);
                }
            }
        }
        Ok(TruncatedLaurent {
            p: self.p,
            v_min,
            horizon,
            coeffs,
        }
        .normalize())
    }

    pub fn neg(&self) -> TruncatedLaurent {
        let coeffs = self.coeffs.iter().map(|&c| fsub(0, c, self.p)).collect();
        TruncatedLaurent {
            coeffs,
            ..self.clone()
        }
    }

    pub fn sub(&self, o: &TruncatedLaurent) -> Result<TruncatedLaurent, LwError> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &TruncatedLaurent) -> Result<TruncatedLaurent, LwError> {
        if self.p != o.p {
            return Err(LwError::PrimeMismatch);
        }
        if self.is_zero() || o.is_zero() {
            return Ok(TruncatedLaurent::zero(self.p, self.horizon.min(o.horizon)));
        }
        // the coefficient at exponent e needs both factors up to
        // e - (other valuation), so the product is valid up to:
        let horizon = (self.horizon + o.v_min).min(o.horizon + self.v_min);
        let v_min = self.v_min + o.v_min;
        let len = (horizon - v_min + 1).max(0) as usize;
        let mut coeffs = vec![0u64; len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                let e = self.v_min + i as i64 + o.v_min + j as i64;
                if e <= horizon {
                    let idx = (e - v_min) as usize;
                    coeffs[idx] = fadd(coeffs[idx], fmul(a, b, self.p), self.p);
                }
            }
        }
        Ok(TruncatedLaurent {
            p: self.p,
            v_min,
            horizon,
            coeffs,
        }
        .normalize())
    }

    /// p-th power: exponent k maps to kp and coefficients are fixed
    /// (x^p = x in F_p), so the result is exact out to p * horizon.
    pub fn frobenius(&self) -> TruncatedLaurent {
        let p = self.p;
        let horizon = p as i64 * self.horizon;
        if self.is_zero() {
            return TruncatedLaurent::zero(p, horizon);
        }
        let v_min = p as i64 * self.v_min;
        let len = (p as i64 * (self.coeffs.len() as i64 - 1) + 1) as usize;
        let mut coeffs = vec![0u64; len];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * p as usize] = fpow(c, p, p);
        }
        TruncatedLaurent {
            p,
            v_min,
            horizon,
            coeffs,
        }
        .normalize()
    }

    /// Multiplicative inverse of a nonzero series; the result's horizon
    /// shrinks by twice the valuation.
    pub fn inverse(&self) -> Result<TruncatedLaurent, LwError> {
        if self.is_zero() {
            return Err(LwError::ZeroInverse);
        }
        let p = self.p;
        let v = self.v_min;
        let horizon = self.horizon - 2 * v;
        let lead_inv = finv(self.coeffs[0], p);
        let len = (horizon + v + 1).max(0) as usize; // exponents -v .. horizon
        let mut out = vec![0u64; len];
        // convolution identity: sum_j a_{v+j} d_{e-j} = [e == 0]
        for idx in 0..len {
            let mut acc = if idx == 0 { 1 } else { 0 };
            for j in 1..=idx {
                if j < self.coeffs.len() {
                    acc = fsub(acc, fmul(self.coeffs[j], out[idx - j], p), p);
                }
            }
            out[idx] = fmul(acc, lead_inv, p);
        }
        Ok(TruncatedLaurent {
            p,
            v_min: -v,
            horizon,
            coeffs: out,
        }
        .normalize())
    }

    pub fn truncated(&self, horizon: i64) -> TruncatedLaurent {
        let mut coeffs = self.coeffs.clone();
        if !self.is_zero() {
            let keep = (horizon - self.v_min + 1).max(0) as usize;
            coeffs.truncate(keep);
        }
        TruncatedLaurent {
            p: self.p,
            v_min: self.v_min,
            horizon: horizon.min(self.horizon),
            coeffs,
        }
        .normalize()
    }

    /// Equality of all coefficients up to the smaller horizon.
    pub fn agrees_with(&self, o: &TruncatedLaurent) -> bool {
        if self.p != o.p {
            return false;
        }
        let h = self.horizon.min(o.horizon);
        let lo = match (self.valuation(), o.valuation()) {
            (None, None) => return true,
            (a, b) => a.unwrap_or(i64::MAX).min(b.unwrap_or(i64::MAX)),
        };
        (lo..=h).all(|e| self.coeff(e).unwrap_or(0) == o.coeff(e).unwrap_or(0))
    }
}

impl fmt::Display for TruncatedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (mod t^{})", self.horizon + 1);
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = self.v_min + i as i64;
            let term = match (c, e) {
                (_, 0) => format!("{c}"),
                (1, 1) => "t".to_string(),
                (1, _) => format!("t^{e}"),
                (_, 1) => format!("{c}*t"),
                (_, _) => format!("{c}*t^{e}"),
            };
            parts.push(term);
        }
        write!(f, "{} (mod t^{})", parts.join(" + "), self.horizon + 1)
    }
}

// --- length-2 Witt vectors ---------------------------------------------

/// Coefficients c_1..c_{p-1} of the Witt carry polynomial
/// F(x,z) = sum_i c_i x^i z^{p-i}, where c_i = -C(p,i)/p reduced mod p.
/// The binomial divisibility C(p,i) = 0 mod p (0 < i < p) is checked
/// with exact integers.
pub fn witt_carry_coeffs(p: u64) -> Result<Vec<u64>, LwError> {
    if !is_prime(p) {
        return Err(LwError::NotPrime(p));
    }
    let mut out = Vec::with_capacity(p as usize - 1);
    let mut binom: u128 = 1;
    for i in 1..p {
        // C(p,i) built incrementally: C(p,i) = C(p,i-1) * (p-i+1) / i
        binom = binom * (p - i + 1) as u128 / i as u128;
        assert!(
            binom % p as u128 == 0,
            "binomial C({p},{i}) = {binom} not divisible by {p}"
        );
        let reduced = (binom / p as u128 % p as u128) as u64;
        out.push(fsub(0, reduced, p)); // minus sign
    }
    Ok(out)
}

/// Length-2 Witt vector over F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WittVector2 {
    pub x0: u64,
    pub x1: u64,
}

/// (x0,x1) + (z0,z1) = (x0+z0, x1+z1+F(x0,z0)).
pub fn witt_add(a: WittVector2, b: WittVector2, p: u64) -> Result<WittVector2, LwError> {
    let carry = witt_carry_value(a.x0, b.x0, p)?;
    Ok(WittVector2 {
        x0: fadd(a.x0, b.x0, p),
        x1: fadd(fadd(a.x1, b.x1, p), carry, p),
    })
}

fn witt_carry_value(x: u64, z: u64, p: u64) -> Result<u64, LwError> {
    let coeffs = witt_carry_coeffs(p)?;
    let mut acc = 0;
    for (i, &c) in coeffs.iter().enumerate() {
        let i = i as u64 + 1;
        let term = fmul(fmul(c, fpow(x, i, p), p), fpow(z, p - i, p), p);
        acc = fadd(acc, term, p);
    }
    Ok(acc)
}

pub fn witt_neg(a: WittVector2, p: u64) -> Result<WittVector2, LwError> {
    let x0 = fsub(0, a.x0, p);
    // solve (a + b) = 0 in the second coordinate
    let carry = witt_carry_value(a.x0, x0, p)?;
    Ok(WittVector2 {
        x0,
        x1: fsub(0, fadd(a.x1, carry, p), p),
    })
}

/// Length-2 Witt vector with Laurent-series entries (W_2 over the local
/// field); used by the p-th-power scan.
#[derive(Clone, Debug)]
pub struct WittSeries2 {
    pub x0: TruncatedLaurent,
    pub x1: TruncatedLaurent,
}

pub fn witt_add_series(a: &WittSeries2, b: &WittSeries2, p: u64) -> Result<WittSeries2, LwError> {
    let coeffs = witt_carry_coeffs(p)?;
    let mut carry = TruncatedLaurent::zero(p, a.x0.horizon.min(b.x0.horizon));
    for (i, &c) in coeffs.iter().enumerate() {
        let i = i as u64 + 1;
        let mut term = TruncatedLaurent::from_terms(p, &[(0, c)], i64::MAX / 4);
        for _ in 0..i {
            term = term.mul(&a.x0)?;
        }
        for _ in 0..(p - i) {
            term = term.mul(&b.x0)?;
        }
        carry = carry.add(&term)?;
    }
    Ok(WittSeries2 {
        x0: a.x0.add(&b.x0)?,
        x1: a.x1.add(&b.x1)?.add(&carry)?,
    })
}

// --- gallery scans -----------------------------------------------------

/// Report for the Frobenius-coset scan: enumerated unit-group elements
/// of the shape 1 + t + (terms supported on exponents divisible by p),
/// checked pairwise to lie in distinct cosets of the group of p-th
/// powers. A p-th power supports only exponents divisible by p, so a
/// quotient with support off the p-grid witnesses distinctness.
#[derive(Clone, Debug)]
pub struct Ex1Report {
    pub p: u64,
    pub horizon: i64,
    pub enumerated: usize,
    pub pairs_checked: usize,
    pub all_distinct: bool,
}

pub fn ex1_frobenius_coset_scan(p: u64, horizon: i64) -> Result<Ex1Report, LwError> {
    if !is_prime(p) {
        return Err(LwError::NotPrime(p));
    }
    assert!(horizon >= 2 * p as i64, "horizon must be >= 2p");
    // free coefficients a_k at exponents kp <= horizon - 1 (the last
    // slot is excluded so a first difference always has a visible
    // off-grid successor exponent within the horizon)
    let kmax = ((horizon - 1) / p as i64).max(0) as usize;
    let mut elements = Vec::new();
    let mut choice = vec![0u64; kmax];
    loop {
        let mut terms = vec![(0i64, 1u64), (1, 1)];
        for (k, &c) in choice.iter().enumerate() {
            terms.push(((k as i64 + 1) * p as i64, c));
        }
        elements.push(TruncatedLaurent::from_terms(p, &terms, horizon));
        // odometer
        let mut i = 0;
        loop {
            if i == kmax {
                break;
            }
            choice[i] += 1;
            if choice[i] < p {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == kmax {
            break;
        }
    }
    let mut pairs = 0;
    let mut all_distinct = true;
    for i in 0..elements.len() {
        for j in (i + 1)..elements.len() {
            pairs += 1;
            let q = elements[i].mul(&elements[j].inverse()?)?;
            // distinct cosets iff the quotient is NOT a p-th power:
            // witness = nonzero coefficient at an exponent not
            // divisible by p
            let witness = q.support().iter().any(|e| e.rem_euclid(p as i64) != 0);
            if !witness {
                all_distinct = false;
            }
        }
    }
    Ok(Ex1Report {
        p,
        horizon,
        enumerated: elements.len(),
        pairs_checked: pairs,
        all_distinct,
    })
}

/// The two coefficient recurrences cutting out the compact unipotent
/// group {(x,y): x^p - x = t y^p}, exactly as printed.
pub const EX3_RECURRENCES: [&str; 2] = ["a_k^p=a_{kp}", "-a_{kp+1}=b_k^p"];

#[derive(Clone, Debug)]
pub struct Ex3Report {
    pub p: u64,
    pub horizon: i64,
    pub free_parameters: usize,
    pub solution_count: u64,
    /// Every enumerated solution satisfies the recurrences and has
    /// valuation >= 0 in both coordinates.
    pub all_valuations_nonneg: bool,
    pub min_valuation: Option<i64>,
    pub recurrences: [&'static str; 2],
}

/// One truncated candidate: coefficient maps for x and y over the
/// exponent window [-horizon, horizon] (absent = 0).
#[derive(Clone, Debug, Default)]
pub struct Ex3Candidate {
    pub a: BTreeMap<i64, u64>,
    pub b: BTreeMap<i64, u64>,
}

/// Check a candidate against the recurrences; coefficients below
/// -horizon are zero (a Laurent series has finite principal part), and
/// conditions reaching above the horizon are not imposed.
pub fn ex3_check_candidate(
    cand: &Ex3Candidate,
    p: u64,
    horizon: i64,
) -> Result<(), String> {
    let get = |m: &BTreeMap<i64, u64>, k: i64| -> u64 {
        if k < -horizon {
            0
        } else {
            m.get(&k).copied().unwrap_or(0) % p
        }
    };
    for k in -horizon..=horizon {
        let ak = get(&cand.a, k);
        if k.rem_euclid(p as i64) > 1 && ak != 0 {
            return Err(format!("a_{k} must vanish (index {k} mod {p} not in {{0,1}})"));
        }
        let kp = k.checked_mul(p as i64).unwrap();
        if kp <= horizon {
            // below -horizon the target coefficient is zero by the
            // finite-principal-part constraint, so the condition is
            // still imposed
            let akp = get(&cand.a, kp);
            if fpow(ak, p, p) != akp {
                return Err(format!("a_{k}^{p} = a_{kp} violated"));
            }
        }
        let bk = get(&cand.b, k);
        if kp + 1 <= horizon {
            let target = fsub(0, get(&cand.a, kp + 1), p);
            if fpow(bk, p, p) != target {
                return Err(format!("-a_{} = b_{k}^{p} violated", kp + 1));
            }
        }
    }
    Ok(())
}

/// Solve the recurrences for all truncated solutions and verify each
/// one: negative-index coefficients are forced to zero by chasing
/// a_k -> a_{kp} below the principal-part cutoff, so every solution has
/// valuation >= 0 in both coordinates.
pub fn ex3_scan(p: u64, horizon: i64) -> Result<Ex3Report, LwError> {
    if !is_prime(p) {
        return Err(LwError::NotPrime(p));
    }
    let n = horizon;
    // free a-indices: 0 and positive k ≡ 1 (mod p); all other in-window
    // indices are forced (zero pattern, or determined along the
    // division-by-p chain since x -> x^p is the identity on F_p)
    let mut free_a: Vec<i64> = vec![0];
    for k in 1..=n {
        if k.rem_euclid(p as i64) == 1 {
            free_a.push(k);
        }
    }
    // free b-indices: those whose defining coefficient a_{kp+1} sits
    // beyond the horizon
    let free_b: Vec<i64> = (-n..=n)
        .filter(|&k| k.checked_mul(p as i64).unwrap() + 1 > n)
        .collect();
    let nfree = free_a.len() + free_b.len();
    let total: u64 = (p as u64).checked_pow(nfree as u32).expect("overflow");
    let mut all_nonneg = true;
    let mut min_val: Option<i64> = None;
    let mut choice = vec![0u64; nfree];
    let mut count = 0u64;
    loop {
        count += 1;
        let cand = ex3_instantiate(&choice, &free_a, &free_b, p, n);
        ex3_check_candidate(&cand, p, n)
            .unwrap_or_else(|e| panic!("solver produced an invalid solution: {e}"));
        let val = |m: &BTreeMap<i64, u64>| m.iter().find(|(_, &c)| c != 0).map(|(&k, _)| k);
        for v in [val(&cand.a), val(&cand.b)].into_iter().flatten() {
            min_val = Some(min_val.map_or(v, |m: i64| m.min(v)));
            if v < 0 {
                all_nonneg = false;
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == nfree {
                break;
            }
            choice[i] += 1;
            if choice[i] < p {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == nfree {
            break;
        }
    }
    assert_eq!(count, total);
    Ok(Ex3Report {
        p,
        horizon,
        free_parameters: nfree,
        solution_count: count,
        all_valuations_nonneg: all_nonneg,
        min_valuation: min_val,
        recurrences: EX3_RECURRENCES,
    })
}

fn ex3_instantiate(
    choice: &[u64],
    free_a: &[i64],
    free_b: &[i64],
    p: u64,
    n: i64,
) -> Ex3Candidate {
    let mut cand = Ex3Candidate::default();
    for (i, &k) in free_a.iter().enumerate() {
        if choice[i] != 0 {
            cand.a.insert(k, choice[i]);
        }
    }
    for (i, &k) in free_b.iter().enumerate() {
        if choice[free_a.len() + i] != 0 {
            cand.b.insert(k, choice[free_a.len() + i]);
        }
    }
    // propagate a_{kp} = a_k^p = a_k up the chains
    loop {
        let mut changed = false;
        let snapshot: Vec<(i64, u64)> = cand.a.iter().map(|(&k, &c)| (k, c)).collect();
        for (k, c) in snapshot {
            let kp = k * p as i64;
            if kp != k && kp.abs() <= n && cand.a.get(&kp).copied().unwrap_or(0) != c {
                cand.a.insert(kp, c);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    // determined b-coefficients: b_k = -a_{kp+1} (p-th roots are the
    // identity on F_p)
    for k in -n..=n {
        let kp1 = k * p as i64 + 1;
        if kp1 <= n {
            let v = fsub(0, cand.a.get(&kp1).copied().unwrap_or(0), p);
            if v != 0 {
                cand.b.insert(k, v);
            }
        }
    }
    cand
}

#[derive(Clone, Debug)]
pub struct Ex4Report {
    pub p: u64,
    pub horizon: i64,
    pub sample_size: usize,
    /// phi(0, (0, z)) = (0, (0, 0)) verified exactly for sampled z.
    pub kernel_contains_line: bool,
    /// Valuation of the image z-component per sample (None = zero image).
    pub image_valuations: Vec<Option<i64>>,
    pub valuation_histogram: BTreeMap<i64, usize>,
    /// The report records measured image valuations only; it does not
    /// assert any compactness conclusion beyond the computation.
    pub note: &'static str,
}

/// Sample elements (x, (y, z)) of H = {x^p - x = t y} (y determined by
/// x since t is invertible, z free), apply the p-th power map
/// phi(x,(y,z)) = (0, (0, y^p)), and record image valuations. The line
/// A = {(0,0,z)} maps to the identity exactly.
pub fn ex4_ppower_scan(
    p: u64,
    horizon: i64,
    sample_size: usize,
    seed: u64,
) -> Result<Ex4Report, LwError> {
    if !is_prime(p) {
        return Err(LwError::NotPrime(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // kernel line: phi(0,(0,z)) has y = (0^p - 0)/t = 0, image (0,(0,0))
    let mut kernel_ok = true;
    for _ in 0..8 {
        let z = random_series(&mut rng, p, -2, horizon);
        let x = TruncatedLaurent::zero(p, horizon);
        let y = h_second_coordinate(&x)?;
        if !y.is_zero() {
            kernel_ok = false;
        }
        let image_z = y.frobenius();
        if !image_z.is_zero() {
            kernel_ok = false;
        }
        let _ = z; // z is free and does not influence the image
    }
    let mut image_valuations = Vec::with_capacity(sample_size);
    let mut histogram: BTreeMap<i64, usize> = BTreeMap::new();
    for i in 0..sample_size {
        // spread sampled valuations from -horizon upward
        let v_min = -(i as i64 % (horizon.max(1))) - 1;
        let x = random_series(&mut rng, p, v_min, horizon);
        let y = h_second_coordinate(&x)?;
        let image_z = y.frobenius();
        let val = image_z.valuation();
        if let Some(v) = val {
            *histogram.entry(v).or_insert(0) += 1;
        }
        image_valuations.push(val);
    }
    Ok(Ex4Report {
        p,
        horizon,
        sample_size,
        kernel_contains_line: kernel_ok,
        image_valuations,
        valuation_histogram: histogram,
        note: "image valuations are reported as computed at this horizon; no compactness \
               claim is made",
    })
}

/// y = (x^p - x) / t, the second coordinate forced by membership in H.
pub fn h_second_coordinate(x: &TruncatedLaurent) -> Result<TruncatedLaurent, LwError> {
    let p = x.p;
    let num = x.frobenius().sub(x)?;
    let t_inv = TruncatedLaurent::from_terms(p, &[(-1, 1)], num.horizon + 1);
    num.mul(&t_inv)
}

fn random_series(rng: &mut ChaCha8Rng, p: u64, v_min: i64, horizon: i64) -> TruncatedLaurent {
    let terms: Vec<(i64, u64)> = (v_min..=horizon)
        .map(|e| (e, rng.gen_range(0..p)))
        .collect();
    TruncatedLaurent::from_terms(p, &terms, horizon)
}
