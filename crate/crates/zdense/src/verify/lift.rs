//! Lifting a certified free pair into a semidirect product with a
//! translation part, with an injectivity certificate for the projection
//! back to the matrix factor.
//!
//! The lifted generators project to the free family a_i = A^i B A^{-i}
//! (i >= 0) rather than to A and B themselves: words in powers of
//! distinct members of a free family are trivial only when formally
//! trivial, which is exactly what makes the projection injective on the
//! lifted group.

use super::pingpong::{pingpong_certificate, IMat};
use super::{Element, GenKind, GeneratorSet, VerifyError};
use crate::exact::numeric_rank;
use num_complex::Complex64;
use std::collections::HashMap;

/// Reduced word in the free group on A, B: letters +-1 (A), +-2 (B).
pub type FreeWord = Vec<i32>;

fn reduce(word: &[i32]) -> FreeWord {
    let mut out: FreeWord = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// a_i = A^i B A^{-i} as a reduced word.
pub fn conjugate_generator_word(i: usize) -> FreeWord {
    let mut w = Vec::with_capacity(2 * i + 1);
    w.extend(std::iter::repeat(1).take(i));
    w.push(2);
    w.extend(std::iter::repeat(-1).take(i));
    w
}

fn word_power(w: &[i32], n: i64) -> FreeWord {
    let base: FreeWord = if n >= 0 {
        w.to_vec()
    } else {
        w.iter().rev().map(|&l| -l).collect()
    };
    let mut out = Vec::new();
    for _ in 0..n.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    reduce(&out)
}

fn word_to_matrix(w: &[i32], a: &IMat, b: &IMat) -> IMat {
    let ai = a.inv_unimodular();
    let bi = b.inv_unimodular();
    let mut m = super::pingpong::IDENTITY;
    for &l in w {
        let f = match l {
            1 => a,
            -1 => &ai,
            2 => b,
            -2 => &bi,
            _ => unreachable!(),
        };
        m = m.mul(f);
    }
    m
}

#[derive(Clone, Debug)]
pub struct LiftResult {
    pub gens: GeneratorSet,
    /// Projection of each emitted generator as a reduced word in A, B.
    pub image_words: Vec<FreeWord>,
    /// Exact matrices of the projections.
    pub image_mats: Vec<IMat>,
}

/// Lift the free pair (A, B) into SL2 x| C^2: two pure matrix-factor
/// lifts of a_0 and a_1, then one generator per kernel-sample vector v
/// carrying the matrix part a_{i}^{n_i} and the translation v.
pub fn lift_discrete_dense(
    a: &IMat,
    b: &IMat,
    kernel_sample: &[[Complex64; 2]],
    twist_exponents: &[i64],
) -> Result<LiftResult, VerifyError> {
    if !pingpong_certificate(a, b).certified {
        return Err(VerifyError::InvalidGenerators(
            "free pair is not ping-pong certified".into(),
        ));
    }
    if kernel_sample.is_empty() {
        // no translation part: the free pair itself is the answer
        let gens = GeneratorSet::new(
            GenKind::Matrix2x2,
            vec![Element::Mat { m: a.to_c64() }, Element::Mat { m: b.to_c64() }],
        )?;
        return Ok(LiftResult {
            gens,
            image_words: vec![vec![1], vec![2]],
            image_mats: vec![*a, *b],
        });
    }
    let rows: Vec<Vec<Complex64>> = kernel_sample.iter().map(|v| v.to_vec()).collect();
    if numeric_rank(&rows, 1e-9) != 2 {
        return Err(VerifyError::SpanDeficient);
    }
    let m = kernel_sample.len();
    let twists: Vec<i64> = if twist_exponents.is_empty() {
        vec![1; m]
    } else {
        if twist_exponents.len() != m {
            return Err(VerifyError::InvalidGenerators(
                "one twist exponent per kernel vector required".into(),
            ));
        }
        if twist_exponents.iter().any(|&n| n < 1) {
            return Err(VerifyError::InvalidGenerators(
                "twist exponents must be >= 1".into(),
            ));
        }
        twist_exponents.to_vec()
    };
    let mut image_words: Vec<FreeWord> = Vec::new();
    let mut elements: Vec<Element> = Vec::new();
    // b_0, b_1: pure lifts of a_0 = B and a_1 = A B A^-1
    for i in 0..2 {
        let w = conjugate_generator_word(i);
        let mat = word_to_matrix(&w, a, b);
        elements.push(Element::MatAffine {
            m: mat.to_c64(),
            trans: [Complex64::new(0.0, 0.0); 2],
        });
        image_words.push(w);
    }
    // b_{i+2} = c s with c = a_{i+2}^{n_i} in the matrix factor and s the
    // translation by the kernel vector
    for (idx, v) in kernel_sample.iter().enumerate() {
        let base = conjugate_generator_word(idx + 2);
        let w = word_power(&base, twists[idx]);
        let mat = word_to_matrix(&w, a, b);
        let mc = mat.to_c64();
        let mv = [
            mc[0][0] * v[0] + mc[0][1] * v[1],
            mc[1][0] * v[0] + mc[1][1] * v[1],
        ];
        elements.push(Element::MatAffine { m: mc, trans: mv });
        image_words.push(w);
    }
    let image_mats = image_words.iter().map(|w| word_to_matrix(w, a, b)).collect();
    let gens = GeneratorSet::new(GenKind::MatrixAffine, elements)?;
    Ok(LiftResult {
        gens,
        image_words,
        image_mats,
    })
}

#[derive(Clone, Debug)]
pub struct InjectivityCertificate {
    /// True when the image words form a free basis of the subgroup they
    /// generate; the projection is then injective on *all* words, not
    /// just enumerated ones.
    pub injective: bool,
    pub generator_count: usize,
    pub subgroup_rank: usize,
}

/// Certify projection injectivity by Stallings folding: fold the bouquet
/// of the image words; the subgroup's rank is E - V + 1 of the folded
/// core graph. A generating set whose size equals the subgroup rank is a
/// free basis, so a nontrivial reduced word in the lifted generators
/// always projects to a nontrivial element.
pub fn projection_injectivity(image_words: &[FreeWord]) -> InjectivityCertificate {
    let (vertices, edges) = folded_graph(image_words);
    let rank = edges + 1 - vertices;
    InjectivityCertificate {
        injective: rank == image_words.len(),
        generator_count: image_words.len(),
        subgroup_rank: rank,
    }
}

/// Build the bouquet of loops, fold to a deterministic labeled graph,
/// trim to the core, and return (V, E).
fn folded_graph(words: &[FreeWord]) -> (usize, usize) {
    // union-find
    let mut parent: Vec<usize> = vec![0];
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    // adjacency: vertex -> signed label -> vertex
    let mut adj: Vec<HashMap<i32, usize>> = vec![HashMap::new()];
    let mut pending: Vec<(usize, i32, usize)> = Vec::new();
    for w in words {
        let mut cur = 0usize;
        for (k, &l) in w.iter().enumerate() {
            let nxt = if k + 1 == w.len() {
                0
            } else {
                parent.push(parent.len());
                adj.push(HashMap::new());
                parent.len() - 1
            };
            pending.push((cur, l, nxt));
            cur = nxt;
        }
    }
    // insert edges, folding on conflicts
    while let Some((u, l, v)) = pending.pop() {
        let u = find(&mut parent, u);
        let v = find(&mut parent, v);
        let mut merge: Option<(usize, usize)> = None;
        match adj[u].get(&l) {
            Some(&w0) => {
                let w0 = find(&mut parent, w0);
                if w0 != v {
                    merge = Some((w0, v));
                }
            }
            None => {
                adj[u].insert(l, v);
                // reverse edge
                let existing_rev = adj[v].get(&-l).map(|&w| find(&mut parent, w));
                match existing_rev {
                    Some(w0) if w0 != u => merge = Some((w0, u)),
                    Some(_) => {}
                    None => {
                        adj[v].insert(-l, u);
                    }
                }
            }
        }
        if let Some((x, y)) = merge {
            // merge y into x and reinsert y's edges
            parent[y] = x;
            let edges: Vec<(i32, usize)> = adj[y].drain().collect();
            for (l2, w2) in edges {
                pending.push((x, l2, w2));
            }
        }
    }
    // collect the folded graph
    let mut vset: Vec<usize> = Vec::new();
    let mut eset: Vec<(usize, i32, usize)> = Vec::new();
    for u in 0..adj.len() {
        if find(&mut parent, u) != u {
            continue;
        }
        vset.push(u);
    }
    for u in vset.clone() {
        let items: Vec<(i32, usize)> = adj[u].iter().map(|(&l, &v)| (l, v)).collect();
        for (l, v) in items {
            if l > 0 {
                let vr = find(&mut parent, v);
                eset.push((u, l, vr));
            }
        }
    }
    // trim non-base degree-1 vertices (core graph)
    loop {
        let mut degree: HashMap<usize, usize> = HashMap::new();
        for &(u, _, v) in &eset {
            *degree.entry(u).or_insert(0) += 1;
            *degree.entry(v).or_insert(0) += 1;
        }
        let base = find(&mut parent, 0);
        let leaf = vset
            .iter()
            .copied()
            .find(|&v| v != base && degree.get(&v).copied().unwrap_or(0) <= 1);
        match leaf {
            Some(v) => {
                vset.retain(|&x| x != v);
                eset.retain(|&(a, _, b)| a != v && b != v);
            }
            None => break,
        }
    }
    (vset.len(), eset.len())
}

/// Exhaustive cross-check: no nontrivial reduced word of length <=
/// `max_len` in the lifted generators projects to the identity matrix.
/// Exact integer arithmetic; returns the number of words inspected.
pub fn exhaustive_projection_check(image_mats: &[IMat], max_len: usize) -> (bool, u64) {
    let letters: Vec<IMat> = image_mats
        .iter()
        .flat_map(|m| [*m, m.inv_unimodular()])
        .collect();
    let n = letters.len();
    let mut count = 0u64;
    // iterative DFS over reduced words
    let mut stack: Vec<(IMat, usize, usize)> = Vec::new(); // (matrix, last letter, depth)
    for i in 0..n {
        stack.push((letters[i], i, 1));
    }
    while let Some((m, last, depth)) = stack.pop() {
        count += 1;
        if m.is_identity() {
            return (false, count);
        }
        if depth < max_len {
            for i in 0..n {
                if i / 2 == last / 2 && i % 2 != last % 2 {
                    continue;
                }
                stack.push((m.mul(&letters[i]), i, depth + 1));
            }
        }
    }
    (true, count)
}
