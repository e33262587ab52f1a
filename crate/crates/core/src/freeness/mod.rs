//! Ping-pong freeness certificates for pairs `{A, B^-1 A B}` of matrices
//! over a valued field, plus a random-word falsifier.
//!
//! A certificate is issued when the diagonal matrix `A` has a unique entry of
//! largest valuation and a unique entry of smallest valuation, and every entry
//! of `B` and `B^-1` is a valuation unit.

mod words;

pub use words::{sample_words, WordSampleReport};

use serde::{Deserialize, Serialize};

use crate::arith::{ExtElem, FieldElem, Scalar, SqMatrix};
use crate::error::{Error, Result};
use crate::places::{valuation_by_lifting, Place};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertVerdict {
    Certified,
    Failed,
    Inapplicable,
}

/// What a certificate proves about the pair a scenario is after.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Strength {
    /// The target pair is literally `{A, B^-1 A B}`.
    ExactPair,
    /// The certified pair lies in the group generated by the target pair.
    SubgroupWitness,
}

/// The two matrices whose freeness is certified, as canonical strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedPair {
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "Binv_A_B")]
    pub conjugate: Vec<Vec<String>>,
}

/// Valuation data for a candidate pair. Zero entries have no valuation and
/// are recorded as `null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessCertificate {
    pub place: String,
    pub eigen_valuations: Vec<i64>,
    #[serde(rename = "B_valuations")]
    pub b_valuations: Vec<Vec<Option<i64>>>,
    #[serde(rename = "Binv_valuations")]
    pub binv_valuations: Vec<Vec<Option<i64>>>,
    pub verdict: CertVerdict,
    pub strength: Strength,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<CertifiedPair>,
}

/// The certificate rule applied to recorded valuations.
pub fn verdict_from(eigen: &[i64], b: &[Vec<Option<i64>>], binv: &[Vec<Option<i64>>]) -> CertVerdict {
    let unique = |target: i64| eigen.iter().filter(|&&v| v == target).count() == 1;
    let extremes = match (eigen.iter().max(), eigen.iter().min()) {
        (Some(&hi), Some(&lo)) => hi != lo && unique(hi) && unique(lo),
        _ => false,
    };
    let units = b.iter().chain(binv).flatten().all(|v| *v == Some(0));
    if extremes && units {
        CertVerdict::Certified
    } else {
        CertVerdict::Failed
    }
}

fn valuations<F: Scalar>(
    m: &SqMatrix<ExtElem<F>>,
    nu: &impl Fn(&ExtElem<F>) -> Result<i64>,
) -> Result<Vec<Vec<Option<i64>>>> {
    m.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| if e.is_zero() { Ok(None) } else { nu(e).map(Some) })
                .collect()
        })
        .collect()
}

fn check_dims<F: Scalar>(a: &SqMatrix<ExtElem<F>>, b: &SqMatrix<ExtElem<F>>) -> Result<()> {
    if a.n() != b.n() || a.n() < 2 {
        return Err(Error::DimensionMismatch);
    }
    Ok(())
}

/// Builds the certificate for `{A, B^-1 A B}` at `place`.
///
/// A non-diagonal `A` gives an `INAPPLICABLE` certificate with no
/// valuations; singular matrices and entries outside the place's field are
/// errors.
pub fn certify<F: Scalar>(
    a: &SqMatrix<ExtElem<F>>,
    b: &SqMatrix<ExtElem<F>>,
    place: &Place<F>,
    strength: Strength,
) -> Result<FreenessCertificate> {
    check_dims(a, b)?;
    if !a.is_diagonal() {
        return Ok(FreenessCertificate {
            place: place.name().to_string(),
            eigen_valuations: vec![],
            b_valuations: vec![],
            binv_valuations: vec![],
            verdict: CertVerdict::Inapplicable,
            strength,
            pair: None,
        });
    }
    let nu = |e: &ExtElem<F>| place.valuation(e);
    let eigen = a.diagonal().iter().map(&nu).collect::<Result<Vec<_>>>()?;
    let binv = b.inverse()?;
    let bv = valuations(b, &nu)?;
    let biv = valuations(&binv, &nu)?;
    let conj = binv.mul(a).mul(b);
    Ok(FreenessCertificate {
        place: place.name().to_string(),
        verdict: verdict_from(&eigen, &bv, &biv),
        eigen_valuations: eigen,
        b_valuations: bv,
        binv_valuations: biv,
        strength,
        pair: Some(CertifiedPair {
            a: a.to_strings(),
            conjugate: conj.to_strings(),
        }),
    })
}

/// Recomputes every valuation of `cert` by p-adic lifting and checks the
/// recorded verdict. Returns the list of disagreements (empty when sound).
pub fn recheck<F: Scalar>(
    cert: &FreenessCertificate,
    a: &SqMatrix<ExtElem<F>>,
    b: &SqMatrix<ExtElem<F>>,
    place: &Place<F>,
) -> Result<Vec<String>> {
    check_dims(a, b)?;
    let mut issues = Vec::new();
    if cert.place != place.name() {
        issues.push(format!("place {} recorded, {} supplied", cert.place, place.name()));
    }
    if !a.is_diagonal() {
        if cert.verdict != CertVerdict::Inapplicable {
            issues.push("A is not diagonal but the verdict is not INAPPLICABLE".into());
        }
        return Ok(issues);
    }
    let nu = |e: &ExtElem<F>| valuation_by_lifting(place, e);
    let eigen = a.diagonal().iter().map(&nu).collect::<Result<Vec<_>>>()?;
    let bv = valuations(b, &nu)?;
    let biv = valuations(&b.inverse()?, &nu)?;
    if eigen != cert.eigen_valuations {
        issues.push(format!("eigen valuations {eigen:?} differ from {:?}", cert.eigen_valuations));
    }
    if bv != cert.b_valuations {
        issues.push(format!("B valuations {bv:?} differ from {:?}", cert.b_valuations));
    }
    if biv != cert.binv_valuations {
        issues.push(format!("B^-1 valuations {biv:?} differ from {:?}", cert.binv_valuations));
    }
    let v = verdict_from(&eigen, &bv, &biv);
    if v != cert.verdict {
        issues.push(format!("verdict {v:?} differs from recorded {:?}", cert.verdict));
    }
    Ok(issues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::{parse_ext, parse_ratfunc};
    use crate::arith::{ExtDescriptor, Var, Q};

    fn place_one_plus_i() -> Place<Q> {
        let l = ExtDescriptor::quadratic_a();
        let p = parse_ratfunc::<Q>("1-a").unwrap().num().clone();
        let r = Place::residue_field_for(Var::A, &p).unwrap();
        Place::new("P(1+i)", &l, Var::A, &p, &parse_ext("-1", &r).unwrap(), &parse_ext("1+i", &l).unwrap()).unwrap()
    }

    fn mat(pl: &Place<Q>, rows: &[&[&str]]) -> SqMatrix<ExtElem<Q>> {
        SqMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|s| parse_ext(s, pl.descriptor()).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_fails_and_non_diagonal_is_inapplicable() {
        let pl = place_one_plus_i();
        let id = mat(&pl, &[&["1", "0"], &["0", "1"]]);
        let b = mat(&pl, &[&["1", "b"], &["0", "1"]]);
        let c = certify(&id, &b, &pl, Strength::ExactPair).unwrap();
        assert_eq!(c.verdict, CertVerdict::Failed);
        assert_eq!(c.eigen_valuations, vec![0, 0]);
        let c = certify(&b, &id, &pl, Strength::ExactPair).unwrap();
        assert_eq!(c.verdict, CertVerdict::Inapplicable);
    }

    #[test]
    fn zero_entries_block_certification() {
        let pl = place_one_plus_i();
        let a = mat(&pl, &[&["1+i", "0"], &["0", "-1+i"]]);
        let b = mat(&pl, &[&["1", "b"], &["0", "1"]]);
        let c = certify(&a, &b, &pl, Strength::ExactPair).unwrap();
        assert_eq!(c.b_valuations, vec![vec![Some(0), Some(0)], vec![None, Some(0)]]);
        assert_eq!(c.verdict, CertVerdict::Failed);
        assert!(recheck(&c, &a, &b, &pl).unwrap().is_empty());
    }

    #[test]
    fn json_keys() {
        let pl = place_one_plus_i();
        let a = mat(&pl, &[&["1+i", "0"], &["0", "-1+i"]]);
        let b = mat(&pl, &[&["1", "b"], &["1", "-1"]]);
        let c = certify(&a, &b, &pl, Strength::ExactPair).unwrap();
        assert_eq!(c.verdict, CertVerdict::Certified);
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        for k in ["place", "eigen_valuations", "B_valuations", "Binv_valuations", "verdict", "strength"] {
            assert!(v.get(k).is_some(), "{k}");
        }
        assert_eq!(v["verdict"], "CERTIFIED");
        assert_eq!(v["strength"], "EXACT_PAIR");
        let back: FreenessCertificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }
}
