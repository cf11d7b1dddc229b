//! Canonical JSON documents for index sets, generalized numbers and
//! quaternions. Rationals and coefficients are carried as strings in the
//! expression syntax so no precision is lost.

use serde::{Deserialize, Serialize};

use crate::epsset::IndexSet;
use crate::error::{Error, Result};
use crate::gennum::GenNumber;
use crate::quat::GenQuaternion;
use crate::scalar::{fmt_rational, parse_rational, Coeff, ExtRational};
use crate::series::PuiseuxSeries;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSetDoc {
    pub m: u64,
    #[serde(rename = "T")]
    pub residues: Vec<u64>,
    #[serde(rename = "N")]
    pub threshold: u64,
    #[serde(rename = "in")]
    pub exceptions_in: Vec<u64>,
    #[serde(rename = "out")]
    pub exceptions_out: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    /// `[exponent, coefficient]` pairs in increasing exponent order.
    pub terms: Vec<[String; 2]>,
    /// `"inf"` for exact series.
    pub order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceDoc {
    pub region: IndexSetDoc,
    pub series: SeriesDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenNumberDoc {
    pub pieces: Vec<PieceDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuaternionDoc {
    pub x0: GenNumberDoc,
    pub x1: GenNumberDoc,
    pub x2: GenNumberDoc,
    pub x3: GenNumberDoc,
}

impl From<&IndexSet> for IndexSetDoc {
    fn from(s: &IndexSet) -> Self {
        IndexSetDoc {
            m: s.modulus(),
            residues: s.residues().iter().copied().collect(),
            threshold: s.threshold(),
            exceptions_in: s.exceptions_in().iter().copied().collect(),
            exceptions_out: s.exceptions_out().iter().copied().collect(),
        }
    }
}

impl TryFrom<&IndexSetDoc> for IndexSet {
    type Error = Error;
    fn try_from(d: &IndexSetDoc) -> Result<IndexSet> {
        IndexSet::make_periodic(d.m, d.residues.clone(), d.threshold, d.exceptions_in.clone(), d.exceptions_out.clone())
    }
}

impl From<&PuiseuxSeries> for SeriesDoc {
    fn from(s: &PuiseuxSeries) -> Self {
        SeriesDoc {
            terms: s.terms().iter().map(|(q, c)| [fmt_rational(q), c.to_string()]).collect(),
            order: s.order().to_string(),
        }
    }
}

impl TryFrom<&SeriesDoc> for PuiseuxSeries {
    type Error = Error;
    fn try_from(d: &SeriesDoc) -> Result<PuiseuxSeries> {
        let terms = d
            .terms
            .iter()
            .map(|[q, c]| Ok((parse_rational(q)?, c.parse::<Coeff>()?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(PuiseuxSeries::new(terms, d.order.parse::<ExtRational>()?))
    }
}

impl From<&GenNumber> for GenNumberDoc {
    fn from(x: &GenNumber) -> Self {
        GenNumberDoc {
            pieces: x
                .pieces()
                .into_iter()
                .map(|(region, s)| PieceDoc { region: (&region).into(), series: s.into() })
                .collect(),
        }
    }
}

impl TryFrom<&GenNumberDoc> for GenNumber {
    type Error = Error;
    fn try_from(d: &GenNumberDoc) -> Result<GenNumber> {
        let pieces = d
            .pieces
            .iter()
            .map(|p| Ok((IndexSet::try_from(&p.region)?, PuiseuxSeries::try_from(&p.series)?)))
            .collect::<Result<Vec<_>>>()?;
        GenNumber::from_pieces(pieces)
    }
}

impl From<&GenQuaternion> for QuaternionDoc {
    fn from(q: &GenQuaternion) -> Self {
        let [a, b, c, d] = q.parts();
        QuaternionDoc { x0: a.into(), x1: b.into(), x2: c.into(), x3: d.into() }
    }
}

impl TryFrom<&QuaternionDoc> for GenQuaternion {
    type Error = Error;
    fn try_from(d: &QuaternionDoc) -> Result<GenQuaternion> {
        GenQuaternion::new((&d.x0).try_into()?, (&d.x1).try_into()?, (&d.x2).try_into()?, (&d.x3).try_into()?)
    }
}

pub fn gennum_to_json(x: &GenNumber) -> String {
    serde_json::to_string(&GenNumberDoc::from(x)).expect("plain data serializes")
}

pub fn gennum_from_json(text: &str) -> Result<GenNumber> {
    let doc: GenNumberDoc = serde_json::from_str(text).map_err(|e| Error::Evaluation(e.to_string()))?;
    GenNumber::try_from(&doc)
}

pub fn quaternion_to_json(q: &GenQuaternion) -> String {
    serde_json::to_string(&QuaternionDoc::from(q)).expect("plain data serializes")
}

pub fn quaternion_from_json(text: &str) -> Result<GenQuaternion> {
    let doc: QuaternionDoc = serde_json::from_str(text).map_err(|e| Error::Evaluation(e.to_string()))?;
    GenQuaternion::try_from(&doc)
}
