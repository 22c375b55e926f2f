use crate::exterior::{pullback, KForm, LinearMap};
use crate::forms7::canonical::{self, canonical, omega2_change, omega5_change, Variant};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormRef {
    pub orbit: u8,
    pub variant: Variant,
}

impl FormRef {
    pub const fn standard(orbit: u8) -> Self {
        Self { orbit, variant: Variant::Standard }
    }

    pub const fn prime(orbit: u8) -> Self {
        Self { orbit, variant: Variant::Prime }
    }

    pub fn form(&self) -> Result<KForm> {
        Ok(canonical(self.orbit, self.variant)?.form)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// `g* target = target`.
    Stabilizes,
    /// `g* target = other`.
    CarriesTo(FormRef),
}

#[derive(Debug, Clone)]
pub struct NamedTransformation {
    pub name: &'static str,
    pub map: LinearMap,
    pub target: FormRef,
    pub claim: Claim,
    pub note: Option<&'static str>,
}

impl NamedTransformation {
    pub fn verify(&self) -> Result<bool> {
        let image = pullback(&self.map, &self.target.form()?);
        let want = match self.claim {
            Claim::Stabilizes => self.target.form()?,
            Claim::CarriesTo(other) => other.form()?,
        };
        Ok(image == want)
    }
}

fn perm(images: [(usize, i64); 7]) -> LinearMap {
    LinearMap::signed_permutation(images).expect("catalog maps are signed permutations")
}

/// The printed images for the second component of `K₆`, as
/// `(source, target, sign)`. Source 5 appears twice and 6 never does, so this
/// is not a map of `V`.
pub const PRINTED_K6_COMPONENT: [(usize, usize, i64); 7] =
    [(1, 2, 1), (2, 1, 1), (3, 3, -1), (4, 4, 1), (5, 6, 1), (5, 6, 1), (7, 7, -1)];

/// Every displayed transformation, with the corrected second component of
/// `K₆`.
pub fn catalog() -> Vec<NamedTransformation> {
    vec![
        NamedTransformation {
            name: "eq-other-comp-of-K1",
            map: perm([(2, 1), (1, 1), (5, 1), (6, 1), (3, 1), (4, 1), (7, -1)]),
            target: FormRef::standard(1),
            claim: Claim::Stabilizes,
            note: None,
        },
        NamedTransformation {
            name: "eq-2-component-of-torus",
            map: perm([(1, -1), (2, 1), (3, -1), (5, -1), (4, -1), (7, 1), (6, 1)]),
            target: FormRef::prime(2),
            claim: Claim::Stabilizes,
            note: Some("written in the f basis"),
        },
        NamedTransformation {
            name: "eq-2-component-of-K2",
            map: perm([(1, 1), (2, 1), (3, -1), (7, 1), (6, 1), (5, 1), (4, 1)]),
            target: FormRef::prime(2),
            claim: Claim::Stabilizes,
            note: Some("written in the f basis"),
        },
        NamedTransformation {
            name: "eq-components-of-k3",
            map: perm([(1, -1), (2, 1), (3, -1), (4, 1), (5, -1), (6, 1), (7, -1)]),
            target: FormRef::standard(3),
            claim: Claim::Stabilizes,
            note: None,
        },
        NamedTransformation {
            name: "eq-components-of-k4",
            map: perm([(1, -1), (2, 1), (3, 1), (4, 1), (5, -1), (6, -1), (7, -1)]),
            target: FormRef::standard(4),
            claim: Claim::Stabilizes,
            note: None,
        },
        NamedTransformation {
            name: "eq-second-component-of-k6",
            map: perm([(2, 1), (1, 1), (3, -1), (4, 1), (6, 1), (5, 1), (7, -1)]),
            target: FormRef::standard(6),
            claim: Claim::Stabilizes,
            note: Some(
                "printed list sends e5 to e6 twice and omits e6; e5<->e6 is the only signed completion that stabilizes",
            ),
        },
        NamedTransformation {
            name: "f-basis-omega2",
            map: omega2_change(),
            target: FormRef::standard(2),
            claim: Claim::CarriesTo(FormRef::prime(2)),
            note: Some("columns f1/2, f2/2, f3/2, sqrt2 f4, .., sqrt2 f7"),
        },
        NamedTransformation {
            name: "omega5-to-omega5-prime",
            map: omega5_change(),
            target: FormRef::standard(5),
            claim: Claim::CarriesTo(FormRef::prime(5)),
            note: None,
        },
        NamedTransformation {
            name: "bv-map-omega6",
            map: canonical::omega6_relation_map().inverse().expect("signed permutation"),
            target: FormRef::standard(6),
            claim: Claim::CarriesTo(FormRef::prime(6)),
            note: Some("map is g^-1 for the listed g"),
        },
        NamedTransformation {
            name: "bv-map-omega7",
            map: canonical::omega7_relation_map().inverse().expect("signed permutation"),
            target: FormRef::standard(7),
            claim: Claim::CarriesTo(FormRef::prime(7)),
            note: Some("map is g^-1 for the listed g"),
        },
    ]
}

/// All signed permutations that agree with the printed `K₆` list on
/// `e₁, e₂, e₃, e₄, e₇` and stabilize `ω₆`. The images of `e₅, e₆` range over
/// the two unused targets with either sign.
pub fn k6_completions() -> Result<Vec<LinearMap>> {
    let w6 = canonical::omega(6)?;
    let mut found = Vec::new();
    for (t5, t6) in [(5, 6), (6, 5)] {
        for s5 in [1, -1] {
            for s6 in [1, -1] {
                let mut images: [(usize, i64); 7] = std::array::from_fn(|i| {
                    let (_, t, s) = PRINTED_K6_COMPONENT[i];
                    (t, s)
                });
                images[4] = (t5, s5);
                images[5] = (t6, s6);
                let g = LinearMap::signed_permutation(images)?;
                if pullback(&g, &w6) == w6 {
                    found.push(g);
                }
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_verifies() {
        for t in catalog() {
            assert!(t.verify().unwrap(), "{}", t.name);
        }
    }

    #[test]
    fn printed_k6_list_is_not_a_map() {
        let mut sources: Vec<usize> = PRINTED_K6_COMPONENT.iter().map(|x| x.0).collect();
        sources.dedup();
        assert_eq!(sources.len(), 6);
        assert!(!sources.contains(&6));
    }

    #[test]
    fn k6_completion_is_unique() {
        let found = k6_completions().unwrap();
        assert_eq!(found.len(), 1);
        let stored = catalog().into_iter().find(|t| t.name == "eq-second-component-of-k6").unwrap();
        assert_eq!(found[0], stored.map);
    }
}
