use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{ExtDescriptor, ExtElem, RatFunc, Scalar, SqMatrix, UniPoly, NVARS};
use crate::error::{Error, Result};

const LETTERS: [&str; 4] = ["g", "g^-1", "h", "h^-1"];
/// Random evaluation points tried before falling back to exact arithmetic.
const POINT_ATTEMPTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordSampleReport {
    pub generators: String,
    pub max_len: usize,
    pub count: usize,
    pub seed: u64,
    /// Sampled words that evaluate to the identity.
    pub failures: Vec<String>,
}

impl WordSampleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn inverse_letter(l: usize) -> usize {
    l ^ 1
}

fn word_text(w: &[usize]) -> String {
    w.iter().map(|&l| LETTERS[l]).collect::<Vec<_>>().join(" ")
}

type Mat<F> = SqMatrix<ExtElem<F>>;

/// The four generators with every coefficient evaluated at `point`, or
/// `None` if some denominator vanishes there.
fn specialize<F: Scalar>(gens: &[Mat<F>; 4], point: &[F; NVARS]) -> Option<[Mat<F>; 4]> {
    let desc = gens[0].get(0, 0).descriptor();
    let at = |c: &RatFunc<F>| c.eval(point).map(RatFunc::constant);
    let minpoly = desc
        .minpoly()
        .coeffs()
        .iter()
        .map(at)
        .collect::<Option<Vec<_>>>()?;
    let local: Arc<ExtDescriptor<F>> = ExtDescriptor::new(desc.generator(), UniPoly::new(minpoly)).ok()?;
    let out = gens
        .iter()
        .map(|m| {
            let rows = m
                .rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| {
                            let cs = e.coeffs().iter().map(at).collect::<Option<Vec<_>>>()?;
                            Some(ExtElem::new(&local, cs))
                        })
                        .collect::<Option<Vec<_>>>()
                })
                .collect::<Option<Vec<_>>>()?;
            SqMatrix::new(rows).ok()
        })
        .collect::<Option<Vec<_>>>()?;
    out.try_into().ok()
}

fn evaluate<F: Scalar>(gens: &[Mat<F>; 4], w: &[usize]) -> Mat<F> {
    let mut acc = gens[w[0]].clone();
    for &l in &w[1..] {
        acc = acc.mul(&gens[l]);
    }
    acc
}

/// Evaluates `count` random reduced words of length `1..=max_len` in
/// `g^±1, h^±1` and reports those equal to the identity.
///
/// Each word is first evaluated at random specializations of the function
/// field variables; a non-identity value there proves the exact word is not
/// the identity. Words that survive every attempt are evaluated exactly.
pub fn sample_words<F: Scalar>(
    g: &Mat<F>,
    h: &Mat<F>,
    max_len: usize,
    count: usize,
    seed: u64,
) -> Result<WordSampleReport> {
    if g.n() != h.n() {
        return Err(Error::DimensionMismatch);
    }
    let gens = [g.clone(), g.inverse()?, h.clone(), h.inverse()?];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::new();
    for _ in 0..POINT_ATTEMPTS * 4 {
        if points.len() == POINT_ATTEMPTS {
            break;
        }
        let p: [F; NVARS] = std::array::from_fn(|_| F::random(&mut rng));
        if let Some(s) = specialize(&gens, &p) {
            points.push(s);
        }
    }
    let mut failures = Vec::new();
    for _ in 0..count {
        let len = rng.gen_range(1..=max_len.max(1));
        let mut w: Vec<usize> = Vec::with_capacity(len);
        while w.len() < len {
            let l = rng.gen_range(0..4);
            if w.last().is_some_and(|&p| p == inverse_letter(l)) {
                continue;
            }
            w.push(l);
        }
        let separated = points.iter().any(|s| !evaluate(s, &w).is_identity());
        if !separated && evaluate(&gens, &w).is_identity() {
            failures.push(word_text(&w));
        }
    }
    Ok(WordSampleReport {
        generators: format!("g = {g}; h = {h}"),
        max_len,
        count,
        seed,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_ext;
    use crate::arith::Q;

    fn m(rows: &[&[&str]]) -> Mat<Q> {
        let l = ExtDescriptor::quadratic_a();
        SqMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|s| parse_ext(s, &l).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn equal_generators_fail() {
        let g = m(&[&["1", "1"], &["0", "1"]]);
        let r = sample_words(&g, &g, 8, 50, 7).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn commuting_pair_fails() {
        let g = m(&[&["2", "0"], &["0", "1"]]);
        let h = m(&[&["1", "0"], &["0", "2"]]);
        let r = sample_words(&g, &h, 8, 200, 7).unwrap();
        assert!(!r.passed());
        assert!(r.failures.iter().all(|w| !w.is_empty()));
    }

    #[test]
    fn sanov_pair_passes() {
        let g = m(&[&["1", "2"], &["0", "1"]]);
        let h = m(&[&["1", "0"], &["2", "1"]]);
        let r = sample_words(&g, &h, 8, 200, 7).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r, sample_words(&g, &h, 8, 200, 7).unwrap());
    }
}
