//! Breadth-first word enumeration: the discreteness margin of a
//! generator set is the minimum distance from the identity over all
//! nontrivial short words inside a ball.

use super::{Element, GeneratorSet, VerifyError};
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct MarginReport {
    pub word_length: usize,
    pub ball_radius: f64,
    /// None encodes the +infinity marker: no nontrivial element in the
    /// ball at all.
    pub min_distance: Option<f64>,
    pub attained_word: Option<String>,
    /// Distinct elements visited (identity excluded).
    pub element_count: usize,
    pub cap: usize,
}

const DEDUP_TOL: f64 = 1e-12;

fn dedup_key(coords: &[f64]) -> Vec<i64> {
    coords
        .iter()
        .map(|&x| {
            let q = (x / DEDUP_TOL).round();
            if q.abs() < 9.0e18 {
                q as i64
            } else {
                i64::MAX
            }
        })
        .collect()
}

/// Letter index i encodes generator i/2, inverted when i is odd.
fn letter_name(letter: usize) -> String {
    let g = letter / 2 + 1;
    if letter % 2 == 0 {
        format!("g{g}")
    } else {
        format!("g{g}^-1")
    }
}

fn word_name(word: &[usize]) -> String {
    word.iter()
        .map(|&l| letter_name(l))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Enumerate all reduced words of length <= `max_len` (deduplicated at
/// tolerance 1e-12) and report the minimum distance from the identity
/// among the nontrivial ones inside the radius-`ball` neighborhood.
pub fn discreteness_margin(
    gens: &GeneratorSet,
    max_len: usize,
    ball: f64,
    cap: usize,
) -> Result<MarginReport, VerifyError> {
    assert!(max_len >= 1, "word length must be >= 1");
    assert!(ball > 0.0, "ball radius must be positive");
    let letters: Vec<Element> = gens
        .elements
        .iter()
        .flat_map(|g| [g.clone(), g.inverse()])
        .collect();
    let nletters = letters.len();
    if nletters == 0 {
        return Ok(MarginReport {
            word_length: max_len,
            ball_radius: ball,
            min_distance: None,
            attained_word: None,
            element_count: 0,
            cap,
        });
    }
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let id = letters[0].identity_like();
    seen.insert(dedup_key(&id.coords()), ());

    let mut best: Option<(f64, Vec<usize>)> = None;
    // frontier entries: (element, word, last letter)
    let mut frontier: Vec<(Element, Vec<usize>, usize)> = Vec::new();
    let mut visited = 0usize;
    for (i, e) in letters.iter().enumerate() {
        frontier.push((e.clone(), vec![i], i));
    }
    for _depth in 0..max_len {
        let mut next = Vec::new();
        for (elem, word, last) in frontier {
            visited += 1;
            if visited > cap {
                return Err(VerifyError::ExplosionGuard(cap));
            }
            let key = dedup_key(&elem.coords());
            let dist = elem.dist_from_identity();
            let is_new = !seen.contains_key(&key);
            if is_new || dist <= DEDUP_TOL {
                // near-identity nontrivial words always count, even when
                // they collide with the identity bucket
                if dist <= ball {
                    let better = match &best {
                        None => true,
                        Some((d, w)) => {
                            dist < *d - 1e-18 || (dist <= *d + 1e-18 && word < *w)
                        }
                    };
                    if better {
                        best = Some((dist, word.clone()));
                    }
                }
            }
            if !is_new {
                continue;
            }
            seen.insert(key, ());
            if word.len() < max_len {
                for l in 0..nletters {
                    // skip the immediate inverse letter (unreduced word)
                    if l / 2 == last / 2 && l % 2 != last % 2 {
                        continue;
                    }
                    let mut w = word.clone();
                    w.push(l);
                    next.push((elem.mul(&letters[l]), w, l));
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(MarginReport {
        word_length: max_len,
        ball_radius: ball,
        min_distance: best.as_ref().map(|(d, _)| *d),
        attained_word: best.map(|(_, w)| word_name(&w)),
        element_count: seen.len() - 1,
        cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::GenKind;
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn translation_gen(v: f64) -> GeneratorSet {
        GeneratorSet::new(
            GenKind::Affine { dim: 1 },
            vec![Element::Affine {
                diag: vec![c(1.0)],
                trans: vec![c(v)],
            }],
        )
        .unwrap()
    }

    #[test]
    fn translation_outside_ball_gives_infinity_marker() {
        let r = discreteness_margin(&translation_gen(1.0), 5, 0.5, 1_000_000).unwrap();
        assert!(r.min_distance.is_none());
        assert!(r.attained_word.is_none());
    }

    #[test]
    fn identity_generator_gives_zero_margin() {
        let gens = GeneratorSet::new(
            GenKind::Affine { dim: 1 },
            vec![Element::Affine {
                diag: vec![c(1.0)],
                trans: vec![c(0.0)],
            }],
        )
        .unwrap();
        let r = discreteness_margin(&gens, 3, 10.0, 1_000_000).unwrap();
        assert_eq!(r.min_distance, Some(0.0));
        assert_eq!(r.attained_word.as_deref(), Some("g1"));
    }

    #[test]
    fn integer_lattice_margin_is_one() {
        let gens = GeneratorSet::new(
            GenKind::Affine { dim: 2 },
            vec![
                Element::Affine {
                    diag: vec![c(1.0), c(1.0)],
                    trans: vec![c(1.0), c(0.0)],
                },
                Element::Affine {
                    diag: vec![c(1.0), c(1.0)],
                    trans: vec![c(0.0), c(1.0)],
                },
            ],
        )
        .unwrap();
        let r = discreteness_margin(&gens, 4, 10.0, 1_000_000).unwrap();
        assert!((r.min_distance.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn margin_is_antitone_in_length_and_radius() {
        let gens = GeneratorSet::new(
            GenKind::Affine { dim: 1 },
            vec![
                Element::Affine {
                    diag: vec![c(2.0)],
                    trans: vec![c(0.0)],
                },
                Element::Affine {
                    diag: vec![c(1.0)],
                    trans: vec![c(1.0)],
                },
            ],
        )
        .unwrap();
        let mut prev = f64::INFINITY;
        for len in 1..=6 {
            let r = discreteness_margin(&gens, len, 100.0, 1_000_000).unwrap();
            let d = r.min_distance.unwrap_or(f64::INFINITY);
            assert!(d <= prev + 1e-15, "len {len}: {d} > {prev}");
            prev = d;
        }
        let narrow = discreteness_margin(&gens, 6, 0.8, 1_000_000)
            .unwrap()
            .min_distance
            .unwrap_or(f64::INFINITY);
        let wide = discreteness_margin(&gens, 6, 100.0, 1_000_000)
            .unwrap()
            .min_distance
            .unwrap_or(f64::INFINITY);
        assert!(wide <= narrow);
    }

    #[test]
    fn explosion_guard_fires() {
        let gens = GeneratorSet::new(
            GenKind::Affine { dim: 1 },
            vec![
                Element::Affine {
                    diag: vec![c(2.0)],
                    trans: vec![c(1.0)],
                },
                Element::Affine {
                    diag: vec![c(3.0)],
                    trans: vec![c(-1.0)],
                },
                Element::Affine {
                    diag: vec![Complex64::new(0.0, 1.0)],
                    trans: vec![c(0.5)],
                },
            ],
        )
        .unwrap();
        let r = discreteness_margin(&gens, 12, 10.0, 500);
        assert!(matches!(r, Err(VerifyError::ExplosionGuard(500))));
    }
}
