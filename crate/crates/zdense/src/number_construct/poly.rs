//! Integer polynomials: parsing, Sturm sequences, resultants and root
//! isolation/refinement to a requested decimal precision.

use super::NfError;
use crate::bigdec::{CDec, Dec};
use crate::exact::bareiss_det;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Dense integer polynomial, `coeffs[k]` the coefficient of x^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.degree() == 0 {
            return IntPoly::new(vec![BigInt::zero()]);
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_dec(&self, x: &Dec) -> Dec {
        let scale = x.scale();
        let mut acc = Dec::zero(scale);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Dec::from_bigint(c, scale));
        }
        acc
    }

    pub fn eval_cdec(&self, z: &CDec) -> CDec {
        let scale = z.re.scale();
        let mut acc = CDec::zero(scale);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z).add(&CDec::from_real(Dec::from_bigint(c, scale)));
        }
        acc
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_f64().unwrap_or(0.0);
        }
        acc
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Parse expressions like "x^3-x-1", "x^2 + 1", "2*x^2 - 3x + 4".
    pub fn parse(input: &str) -> Result<IntPoly, NfError> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(NfError::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(BigInt, usize)> = Vec::new();
        let mut rest = s.as_str();
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        while !rest.is_empty() {
            let end = rest
                .char_indices()
                .skip(1)
                .find(|(_, c)| *c == '+' || *c == '-')
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let term = &rest[..end];
            let (coeff, exp) = parse_term(term)?;
            terms.push((coeff * BigInt::from(sign), exp));
            if end == rest.len() {
                break;
            }
            sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
            rest = &rest[end + 1..];
        }
        let deg = terms.iter().map(|(_, e)| *e).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (c, e) in terms {
            coeffs[e] += c;
        }
        Ok(IntPoly::new(coeffs))
    }
}

fn parse_term(term: &str) -> Result<(BigInt, usize), NfError> {
    let bad = || NfError::Parse(format!("bad term {term:?}"));
    if let Some(x_pos) = term.find('x') {
        let coeff_str = term[..x_pos].trim_end_matches('*');
        let coeff: BigInt = if coeff_str.is_empty() {
            BigInt::one()
        } else {
            coeff_str.parse().map_err(|_| bad())?
        };
        let after = &term[x_pos + 1..];
        let exp: usize = if after.is_empty() {
            1
        } else {
            after.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
        };
        Ok((coeff, exp))
    } else {
        Ok((term.parse().map_err(|_| bad())?, 0))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(e == 0 && first) {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match e {
                0 => mag.to_string(),
                _ => {
                    let var = if e == 1 { "x".to_string() } else { format!("x^{e}") };
                    if mag.is_one() {
                        var
                    } else {
                        format!("{mag}{var}")
                    }
                }
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

// --- rational polynomial helpers (Sturm chains) ---

type RatPoly = Vec<BigRational>;

fn rp_trim(mut p: RatPoly) -> RatPoly {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn rp_is_zero(p: &RatPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn rp_rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    while r.len() > db && !rp_is_zero(&r) {
        let dr = r.len() - 1;
        let q = r.last().unwrap() / &lead;
        for i in 0..=db {
            let idx = dr - db + i;
            let sub = &q * &b[i];
            r[idx] = &r[idx] - sub;
        }
        r = rp_trim(r[..dr].to_vec());
        if r.is_empty() {
            r.push(BigRational::zero());
        }
    }
    rp_trim(r)
}

fn int_to_rat(p: &IntPoly) -> RatPoly {
    p.coeffs
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect()
}

/// Sturm chain of f.
pub fn sturm_chain(f: &IntPoly) -> Vec<RatPoly> {
    let mut chain = vec![rp_trim(int_to_rat(f)), rp_trim(int_to_rat(&f.derivative()))];
    loop {
        let last = &chain[chain.len() - 1];
        if rp_is_zero(last) || last.len() == 1 && last[0].is_zero() {
            chain.pop();
            break;
        }
        let prev = &chain[chain.len() - 2];
        if last.len() == 1 {
            break;
        }
        let rem = rp_rem(prev, last);
        if rp_is_zero(&rem) {
            break;
        }
        chain.push(rem.iter().map(|c| -c).collect());
    }
    chain
}

fn rp_eval(p: &RatPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn sign_variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
    let mut count = 0;
    let mut last = Ordering::Equal;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[RatPoly], x: &BigRational) -> usize {
    sign_variations(chain.iter().map(|p| rp_eval(p, x).cmp(&BigRational::zero())))
}

fn variations_at_inf(chain: &[RatPoly], positive: bool) -> usize {
    sign_variations(chain.iter().map(|p| {
        let lead = p.last().unwrap();
        let deg = p.len() - 1;
        let s = lead.cmp(&BigRational::zero());
        if positive || deg % 2 == 0 {
            s
        } else {
            s.reverse()
        }
    }))
}

/// Number of distinct real roots of a squarefree f.
pub fn count_real_roots(f: &IntPoly) -> usize {
    let chain = sturm_chain(f);
    variations_at_inf(&chain, false) - variations_at_inf(&chain, true)
}

fn roots_in(chain: &[RatPoly], lo: &BigRational, hi: &BigRational) -> usize {
    variations_at(chain, lo) - variations_at(chain, hi)
}

/// Cauchy bound: all roots lie in |x| < bound.
pub fn root_bound(f: &IntPoly) -> BigRational {
    let lead = BigRational::from(f.coeffs.last().unwrap().clone());
    let max = f
        .coeffs
        .iter()
        .take(f.degree())
        .map(|c| BigRational::from(c.abs()))
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    BigRational::one() + max / lead.abs()
}

/// Isolating intervals (lo, hi] for the real roots of squarefree f, in
/// ascending order.
pub fn isolate_real_roots(f: &IntPoly) -> Vec<(BigRational, BigRational)> {
    let chain = sturm_chain(f);
    let bound = root_bound(f);
    let mut stack = vec![(-bound.clone(), bound.clone())];
    let mut isolated = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let n = roots_in(&chain, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            isolated.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    isolated.sort_by(|a, b| a.0.cmp(&b.0));
    isolated
}

/// Shrink an isolating interval by bisection until its width is below
/// 10^-(scale-2), then return the midpoint as a `Dec`.
pub fn refine_real_root(f: &IntPoly, lo: &BigRational, hi: &BigRational, scale: u32) -> Dec {
    let two = BigRational::from(BigInt::from(2));
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let target = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(scale - 2));
    // sign at hi side determines the bisection branch
    let mut f_hi = f.eval_rational(&hi);
    if f_hi.is_zero() {
        return Dec::from_ratio(&hi, scale);
    }
    loop {
        let width = &hi - &lo;
        if width < target {
            break;
        }
        let mid = (&lo + &hi) / &two;
        let f_mid = f.eval_rational(&mid);
        if f_mid.is_zero() {
            return Dec::from_ratio(&mid, scale);
        }
        if (f_mid > BigRational::zero()) == (f_hi > BigRational::zero()) {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
        }
    }
    Dec::from_ratio(&((&lo + &hi) / &two), scale)
}

/// Squarefree test: deg gcd(f, f') == 0, via the Sturm chain's last
/// nonzero term being constant.
pub fn is_squarefree(f: &IntPoly) -> bool {
    if f.degree() == 0 {
        return true;
    }
    // gcd(f, f') over Q by plain Euclid
    let mut a = rp_trim(int_to_rat(f));
    let mut b = rp_trim(int_to_rat(&f.derivative()));
    while !rp_is_zero(&b) && b.len() > 1 {
        let r = rp_rem(&a, &b);
        a = b;
        b = r;
    }
    !rp_is_zero(&b) // nonzero constant remainder
}

/// Irreducibility over Q for monic integer polynomials of degree <= 4
/// (rational root test plus, for quartics, a monic quadratic-factor
/// search). Larger degrees return `None` (caller decides how to proceed).
pub fn is_irreducible(f: &IntPoly) -> Option<bool> {
    let d = f.degree();
    if !f.is_monic() {
        return None;
    }
    if d == 1 {
        return Some(true);
    }
    if d > 4 {
        return None;
    }
    if has_rational_root(f) {
        return Some(false);
    }
    if d <= 3 {
        return Some(true);
    }
    Some(!has_monic_quadratic_factor(f))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::zero()];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

fn has_rational_root(f: &IntPoly) -> bool {
    // monic: rational roots are integer divisors of the constant term
    let c0 = &f.coeffs[0];
    if c0.is_zero() {
        return true;
    }
    for d in divisors(c0) {
        for cand in [d.clone(), -d] {
            let x = BigRational::from(cand);
            if f.eval_rational(&x).is_zero() {
                return true;
            }
        }
    }
    false
}

fn has_monic_quadratic_factor(f: &IntPoly) -> bool {
    // f = (x^2+ax+b)(x^2+cx+e) with be = f0, so b | f0
    let f0 = &f.coeffs[0];
    if f0.is_zero() {
        return true;
    }
    let f1 = &f.coeffs[1];
    let f2 = &f.coeffs[2];
    let f3 = &f.coeffs[3];
    for b_abs in divisors(f0) {
        for b in [b_abs.clone(), -b_abs] {
            if b.is_zero() || !(f0 % &b).is_zero() {
                continue;
            }
            let e = f0 / &b;
            // coefficient matching: a+c = f3, b+e+ac = f2, ae+bc = f1
            // solve a from the linear system when possible
            let s = f3.clone();
            let q = f2 - &b - &e; // ac
            // a+c = s, ac = q -> a root of t^2 - s t + q
            let disc = &s * &s - BigInt::from(4) * &q;
            if disc < BigInt::zero() {
                continue;
            }
            let sq = disc.sqrt();
            if &sq * &sq != disc {
                continue;
            }
            for a2 in [&s + &sq, &s - &sq] {
                if (&a2 % BigInt::from(2)).is_zero() {
                    let a = a2 / BigInt::from(2);
                    let c = &s - &a;
                    if &a * &e + &b * &c == *f1 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Resultant of f and g via the Sylvester matrix (exact integer).
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    if g.is_zero() {
        return BigInt::zero();
    }
    let n = f.degree();
    let m = g.degree();
    if m == 0 {
        return g.coeffs[0].pow(n as u32);
    }
    if n == 0 {
        return f.coeffs[0].pow(m as u32);
    }
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..m {
        for (k, c) in f.coeffs.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..n {
        for (k, c) in g.coeffs.iter().rev().enumerate() {
            mat[m + row][row + k] = c.clone();
        }
    }
    bareiss_det(&mat)
}

// --- complex root finding ---

fn durand_kerner(f: &IntPoly) -> Vec<Complex64> {
    let d = f.degree();
    let lead = f.coeffs[d].to_f64().unwrap_or(1.0);
    let mut roots: Vec<Complex64> = (0..d)
        .map(|k| Complex64::new(0.4, 0.9).powu(k as u32 + 1))
        .collect();
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..d {
            let mut denom = Complex64::new(lead, 0.0);
            for j in 0..d {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() < 1e-300 {
                continue;
            }
            let step = f.eval_c64(roots[i]) / denom;
            roots[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 {
            break;
        }
    }
    roots
}

fn newton_polish(f: &IntPoly, fp: &IntPoly, start: Complex64, scale: u32) -> CDec {
    let mut z = CDec::from_f64(start.re, start.im, scale);
    // f64 seed carries ~15 good digits; quadratic convergence from there
    let iters = 3 + (scale as f64 / 15.0).log2().ceil().max(0.0) as u32;
    for _ in 0..iters.max(4) {
        let val = f.eval_cdec(&z);
        let der = fp.eval_cdec(&z);
        if der.is_zero() {
            break;
        }
        z = z.sub(&val.div(&der));
    }
    z
}

/// All complex roots of a squarefree polynomial at the given scale.
/// Real roots come from exact Sturm isolation, the complex ones from
/// Durand-Kerner seeds polished by high-precision Newton.
pub fn complex_roots(f: &IntPoly, scale: u32) -> Result<Vec<CDec>, NfError> {
    if !is_squarefree(f) {
        return Err(NfError::NotSquarefree);
    }
    let d = f.degree();
    let fp = f.derivative();
    let real_isolated = isolate_real_roots(f);
    let r1 = real_isolated.len();
    let mut out: Vec<CDec> = real_isolated
        .iter()
        .map(|(lo, hi)| CDec::from_real(refine_real_root(f, lo, hi, scale)))
        .collect();
    if r1 < d {
        let approx = durand_kerner(f);
        let mut complex_seeds: Vec<Complex64> = approx
            .into_iter()
            .filter(|z| z.im.abs() > 1e-9)
            .filter(|z| z.im > 0.0)
            .collect();
        complex_seeds.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap()
                .then(a.im.partial_cmp(&b.im).unwrap())
        });
        if complex_seeds.len() * 2 != d - r1 {
            return Err(NfError::PrecisionUnreachable(
                "complex/real root classification mismatch".into(),
            ));
        }
        for seed in complex_seeds {
            out.push(newton_polish(f, &fp, seed, scale));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    #[test]
    fn parses_standard_forms() {
        assert_eq!(IntPoly::parse("x^3-x-1").unwrap(), IntPoly::from_i64(&[-1, -1, 0, 1]));
        assert_eq!(IntPoly::parse("x^2 + 1").unwrap(), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(IntPoly::parse("-x+2").unwrap(), IntPoly::from_i64(&[2, -1]));
        assert_eq!(IntPoly::parse("2*x^2-3x+4").unwrap(), IntPoly::from_i64(&[4, -3, 2]));
        assert!(IntPoly::parse("x^").is_err());
    }

    #[test]
    fn display_roundtrip() {
        let p = IntPoly::from_i64(&[-1, -1, 0, 1]);
        assert_eq!(p.to_string(), "x^3-x-1");
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(count_real_roots(&IntPoly::from_i64(&[-2, 0, 1])), 2); // x^2-2
        assert_eq!(count_real_roots(&IntPoly::from_i64(&[1, 0, 1])), 0); // x^2+1
        assert_eq!(count_real_roots(&IntPoly::from_i64(&[-1, -1, 0, 1])), 1); // x^3-x-1
        assert_eq!(count_real_roots(&IntPoly::from_i64(&[-1, -3, 0, 1])), 3); // x^3-3x-1
    }

    #[test]
    fn squarefree_detection() {
        assert!(is_squarefree(&IntPoly::from_i64(&[-2, 0, 1])));
        assert!(!is_squarefree(&IntPoly::from_i64(&[1, 2, 1]))); // (x+1)^2
    }

    #[test]
    fn irreducibility_small_degrees() {
        assert_eq!(is_irreducible(&IntPoly::from_i64(&[-2, 0, 1])), Some(true));
        assert_eq!(is_irreducible(&IntPoly::from_i64(&[-1, -1, 0, 1])), Some(true));
        assert_eq!(is_irreducible(&IntPoly::from_i64(&[-1, 0, 1])), Some(false)); // x^2-1
        // x^4+4 = (x^2-2x+2)(x^2+2x+2)
        assert_eq!(is_irreducible(&IntPoly::from_i64(&[4, 0, 0, 0, 1])), Some(false));
        // x^4+1 irreducible over Q
        assert_eq!(is_irreducible(&IntPoly::from_i64(&[1, 0, 0, 0, 1])), Some(true));
    }

    #[test]
    fn resultant_examples() {
        // res(x^2-2, x+1) = f(-1) = -1
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let g = IntPoly::from_i64(&[1, 1]);
        assert_eq!(resultant(&f, &g), BigInt::from(-1));
        // res(x^3-x-1, x) = product of roots = 1
        let f3 = IntPoly::from_i64(&[-1, -1, 0, 1]);
        let x = IntPoly::from_i64(&[0, 1]);
        assert_eq!(resultant(&f3, &x), BigInt::from(1));
    }

    #[test]
    fn sqrt2_root_refinement() {
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let intervals = isolate_real_roots(&f);
        assert_eq!(intervals.len(), 2);
        let hi = refine_real_root(&f, &intervals[1].0, &intervals[1].1, 40);
        let err = (hi.to_f64() - 2f64.sqrt()).abs();
        assert!(err < 1e-14);
        // residual check at full precision
        let resid = f.eval_dec(&hi).abs();
        assert!(resid.cmp_dec(&Dec::eps(35, 40)) == std::cmp::Ordering::Less);
    }

    #[test]
    fn cubic_complex_roots() {
        let f = IntPoly::from_i64(&[-1, -1, 0, 1]);
        let roots = complex_roots(&f, 40).unwrap();
        assert_eq!(roots.len(), 2); // one real + one representative of the pair
        let real = &roots[0];
        assert!((real.re.to_f64() - 1.3247179572447460).abs() < 1e-14);
        assert!(real.im.is_zero());
        let cplx = &roots[1];
        assert!((cplx.re.to_f64() + 0.6623589786223730).abs() < 1e-12);
        assert!((cplx.im.to_f64() - 0.5622795120623013).abs() < 1e-12);
        // certified residual
        let resid = f.eval_cdec(cplx).abs();
        assert!(resid.cmp_dec(&Dec::eps(35, 40)) == std::cmp::Ordering::Less);
    }

    #[test]
    fn roots_in_interval_helper() {
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let chain = sturm_chain(&f);
        assert_eq!(roots_in(&chain, &rat_int(0), &rat_int(2)), 1);
        assert_eq!(roots_in(&chain, &rat_int(-2), &rat_int(2)), 2);
    }
}
