use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Free cohomology data of a closed 7-manifold in degrees 2 and 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyModel {
    pub name: String,
    pub r2: usize,
    pub r4: usize,
    /// `cup[i][j]` is the class of `x_i ∪ x_j` in `Z^{r4}`.
    pub cup: Vec<Vec<Vec<i64>>>,
    pub p1: Vec<i64>,
    /// Mod-2 reduction of a lift of `w₂` to the free part of `H²`.
    pub w2: Vec<u8>,
    pub orientable: bool,
    pub spin: bool,
    #[serde(rename = "W3_zero")]
    pub w3_zero: bool,
    pub simply_connected: bool,
}

impl CohomologyModel {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Model(format!("{}: {msg}", self.name)));
        if self.cup.len() != self.r2 || self.cup.iter().any(|row| row.len() != self.r2) {
            return bad(format!("cup must be {0}x{0}", self.r2));
        }
        for (i, row) in self.cup.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.len() != self.r4 {
                    return bad(format!("cup[{i}][{j}] has length {}, expected {}", v.len(), self.r4));
                }
                if *v != self.cup[j][i] {
                    return bad(format!("cup tensor is not symmetric at ({i}, {j})"));
                }
            }
        }
        if self.p1.len() != self.r4 {
            return bad(format!("p1 has length {}, expected {}", self.p1.len(), self.r4));
        }
        if self.w2.len() != self.r2 {
            return bad(format!("w2 has length {}, expected {}", self.w2.len(), self.r2));
        }
        if self.w2.iter().any(|&b| b > 1) {
            return bad("w2 entries must be 0 or 1".into());
        }
        if self.spin && self.w2.iter().any(|&b| b != 0) {
            return bad("spin model with nonzero w2".into());
        }
        if self.spin && !self.w3_zero {
            return bad("spin model with W3 nonzero".into());
        }
        if self.spin && !self.orientable {
            return bad("spin model that is not orientable".into());
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let m: CohomologyModel = serde_json::from_str(s)?;
        m.validate()?;
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

pub fn load_model(path: impl AsRef<Path>) -> Result<CohomologyModel> {
    CohomologyModel::from_json(&std::fs::read_to_string(path)?)
}

const BUNDLED: [(&str, &str); 4] = [
    ("s7", include_str!("../../models/s7.json")),
    ("cp3xs1", include_str!("../../models/cp3xs1.json")),
    ("s5xs2", include_str!("../../models/s5xs2.json")),
    ("cp2xs3", include_str!("../../models/cp2xs3.json")),
];

/// Names of the models shipped with the crate.
pub fn bundled_names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}

/// A bundled model by name, with or without the `.json` suffix.
pub fn bundled(name: &str) -> Result<CohomologyModel> {
    let key = name.strip_suffix(".json").unwrap_or(name);
    let (_, src) = BUNDLED
        .iter()
        .find(|(n, _)| *n == key)
        .ok_or_else(|| Error::Model(format!("no bundled model `{name}`")))?;
    CohomologyModel::from_json(src)
}

/// `Σ e_i f_j cup[i][j]`.
pub fn cup_eval(model: &CohomologyModel, e: &[i64], f: &[i64]) -> Result<Vec<i64>> {
    if e.len() != model.r2 || f.len() != model.r2 {
        return Err(Error::DimensionMismatch(format!(
            "classes of length {} and {} for r2 = {}",
            e.len(),
            f.len(),
            model.r2
        )));
    }
    let mut out = vec![0i64; model.r4];
    for (i, ei) in e.iter().enumerate() {
        for (j, fj) in f.iter().enumerate() {
            for (k, c) in model.cup[i][j].iter().enumerate() {
                out[k] += ei * fj * c;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_models_load() {
        for n in bundled_names() {
            bundled(n).unwrap();
        }
        let m = bundled("cp3xs1.json").unwrap();
        assert_eq!((m.r2, m.r4, m.p1.clone()), (1, 1, vec![4]));
        assert!(!m.simply_connected);
        assert!(bundled("t7").is_err());
    }

    #[test]
    fn cup_eval_examples() {
        let m = bundled("cp3xs1").unwrap();
        assert_eq!(cup_eval(&m, &[0], &[0]).unwrap(), vec![0]);
        assert_eq!(cup_eval(&m, &[2], &[2]).unwrap(), vec![4]);
        assert!(cup_eval(&m, &[1, 2], &[0]).is_err());
    }

    #[test]
    fn rejects_inconsistent_models() {
        let base = r#"{"name":"x","r2":2,"r4":1,"cup":[[[1],[2]],[[3],[0]]],"p1":[0],"w2":[0,0],
            "orientable":true,"spin":true,"W3_zero":true,"simply_connected":true}"#;
        let err = CohomologyModel::from_json(base).unwrap_err().to_string();
        assert!(err.contains("not symmetric"), "{err}");
        let spin_w2 = r#"{"name":"x","r2":1,"r4":1,"cup":[[[1]]],"p1":[0],"w2":[1],
            "orientable":true,"spin":true,"W3_zero":true,"simply_connected":true}"#;
        assert!(CohomologyModel::from_json(spin_w2).unwrap_err().to_string().contains("w2"));
        let missing = r#"{"name":"x","r2":0,"r4":0}"#;
        assert!(matches!(CohomologyModel::from_json(missing), Err(Error::Json(_))));
        let short = r#"{"name":"x","r2":1,"r4":1,"cup":[[[1]]],"p1":[],"w2":[0],
            "orientable":true,"spin":true,"W3_zero":true,"simply_connected":true}"#;
        assert!(CohomologyModel::from_json(short).is_err());
    }

    #[test]
    fn load_from_file() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("m.json");
        std::fs::write(&p, bundled("s5xs2").unwrap().to_json()).unwrap();
        assert_eq!(load_model(&p).unwrap(), bundled("s5xs2").unwrap());
        assert!(matches!(load_model(dir.path().join("none.json")), Err(Error::Io(_))));
    }
}
