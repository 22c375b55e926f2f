//! Wire formats for forms and maps. Coefficients travel as fraction strings
//! (`"-1/2"`, `"3"`) so nothing is lost to floating point.

use serde::{Deserialize, Serialize};

use super::form::{KForm, LinearMap, DIM};
use super::matrix::Matrix;
use super::scalar::{format_scalar, parse_scalar};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub idx: Vec<usize>,
    pub coef: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KFormJson {
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMapJson {
    pub cols: Vec<Vec<String>>,
}

impl From<&KForm> for KFormJson {
    fn from(f: &KForm) -> Self {
        KFormJson {
            degree: f.degree(),
            terms: f
                .terms()
                .map(|(idx, c)| TermJson { idx: idx.indices(), coef: format_scalar(c) })
                .collect(),
        }
    }
}

impl TryFrom<KFormJson> for KForm {
    type Error = Error;

    fn try_from(j: KFormJson) -> Result<KForm> {
        let terms = j
            .terms
            .into_iter()
            .map(|t| Ok((t.idx, parse_scalar(&t.coef)?)))
            .collect::<Result<Vec<_>>>()?;
        KForm::from_terms(j.degree, terms)
    }
}

impl From<&LinearMap> for LinearMapJson {
    fn from(g: &LinearMap) -> Self {
        LinearMapJson {
            cols: (0..DIM)
                .map(|j| g.column(j).coords.iter().map(format_scalar).collect())
                .collect(),
        }
    }
}

impl TryFrom<LinearMapJson> for LinearMap {
    type Error = Error;

    fn try_from(j: LinearMapJson) -> Result<LinearMap> {
        if j.cols.len() != DIM || j.cols.iter().any(|c| c.len() != DIM) {
            return Err(Error::DimensionMismatch("a map needs 7 columns of 7 entries".into()));
        }
        let mut m = Matrix::zeros(DIM, DIM);
        for (c, col) in j.cols.iter().enumerate() {
            for (r, s) in col.iter().enumerate() {
                m[(r, c)] = parse_scalar(s)?;
            }
        }
        LinearMap::from_matrix(m)
    }
}

impl KForm {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&KFormJson::from(self)).expect("serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&KFormJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<KForm> {
        let j: KFormJson = serde_json::from_str(s)?;
        KForm::try_from(j)
    }
}

impl LinearMap {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&LinearMapJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<LinearMap> {
        let j: LinearMapJson = serde_json::from_str(s)?;
        LinearMap::try_from(j)
    }
}
