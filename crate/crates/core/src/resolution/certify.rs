use serde::{Deserialize, Serialize};

use crate::bp::{iso_link, iso_test};
use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::hecke::{smallness, FiberProfile, HeckeAlgebra, SmallnessCertificate};

use super::data::{validate, ResolutionData};

/// How a resolution was produced. Certification never depends on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Smooth,
    Zelevinskii,
    CompleteBp,
    CompleteBpInverse,
    EquivariantRecursive,
    Exhaustive,
    Components,
    Glue,
    Reverse,
    Given,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Smooth => "smooth",
            Route::Zelevinskii => "zelevinskii",
            Route::CompleteBp => "complete-bp",
            Route::CompleteBpInverse => "complete-bp-inverse",
            Route::EquivariantRecursive => "equivariant-recursive",
            Route::Exhaustive => "exhaustive",
            Route::Components => "components",
            Route::Glue => "glue",
            Route::Reverse => "reverse",
            Route::Given => "given",
        }
    }
}

/// Resolution data together with its oracle-verified smallness certificate.
#[derive(Clone, Debug)]
pub struct CertifiedResolution {
    pub data: ResolutionData,
    pub profile: FiberProfile,
    pub certificate: SmallnessCertificate,
    pub eq_left: bool,
    pub eq_right: bool,
    pub route: Route,
}

impl CertifiedResolution {
    pub fn is_equivariant(&self) -> bool {
        self.eq_left && self.eq_right
    }
}

/// Validates `data` from scratch and demands a small verdict.
pub fn certify(h: &HeckeAlgebra<'_>, data: &ResolutionData, route: Route) -> Result<CertifiedResolution> {
    let g = h.group();
    let profile = validate(h, data)?;
    let certificate = smallness(g, &profile)?;
    if let Some(bad) = certificate.witness() {
        return Err(Error::NotSmall {
            witness: bad.u.clone(),
            fiber_dim: bad.fiber_dim,
            codim: certificate.len - bad.len,
        });
    }
    Ok(CertifiedResolution {
        eq_left: data.first() == g.left_descents(data.w),
        eq_right: data.last() == g.right_descents(data.w),
        data: data.clone(),
        profile,
        certificate,
        route,
    })
}

/// Concatenates resolutions of `v` and `w` into one of `v * w`, provided the
/// two-factor map `(v, w)` is an isomorphism whose link is the induced one.
pub fn glue(
    h: &HeckeAlgebra<'_>,
    left: &CertifiedResolution,
    right: &CertifiedResolution,
) -> Result<CertifiedResolution> {
    let g = h.group();
    let (v, w) = (left.data.w, right.data.w);
    if !iso_test(g, v, w) {
        return Err(Error::NotIso {
            left: g.format(v),
            right: g.format(w),
        });
    }
    let expected = iso_link(g, v, w);
    let actual = left.data.last().intersection(right.data.first());
    if expected != actual {
        return Err(Error::IncompatibleLink { expected, actual });
    }
    let mut sets = left.data.sets.clone();
    sets.extend_from_slice(&right.data.sets);
    let data = ResolutionData::new(g.demazure(v, w), sets).normalize();
    certify(h, &data, Route::Glue)
}

/// The reversed data resolves `X_{w^{-1}}`.
pub fn reverse(h: &HeckeAlgebra<'_>, r: &CertifiedResolution) -> Result<CertifiedResolution> {
    let g: &CoxeterGroup = h.group();
    certify(h, &r.data.reversed(g), Route::Reverse)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zelevinskii_examples_certify() {
        let g = CoxeterGroup::type_a(3).unwrap();
        let h = HeckeAlgebra::new(&g);
        let w = g.parse("4 2 3 1").unwrap();
        for text in ["1,3|2,3|1,3", "1,3|1,2|1,3"] {
            let c = certify(&h, &ResolutionData::parse(w, text).unwrap(), Route::Given).unwrap();
            assert!(c.is_equivariant());
            let r = reverse(&h, &c).unwrap();
            assert_eq!(r.data.sets, c.data.sets);
        }
    }

    #[test]
    fn not_small_reports_witness() {
        let g = CoxeterGroup::type_a(2).unwrap();
        let h = HeckeAlgebra::new(&g);
        let w = g.longest(g.all_simple());
        let err = certify(&h, &ResolutionData::parse(w, "1|2|1").unwrap(), Route::Given).unwrap_err();
        assert_eq!(
            err,
            Error::NotSmall {
                witness: "2 1 3".into(),
                fiber_dim: 1,
                codim: 2
            }
        );
    }

    #[test]
    fn glue_table_row() {
        let g = CoxeterGroup::type_a(4).unwrap();
        let h = HeckeAlgebra::new(&g);
        let a = g.longest("2,4".parse().unwrap());
        let b = g.parse("2 1 5 4 3").unwrap();
        let left = certify(&h, &ResolutionData::parse(a, "2,4").unwrap(), Route::Given).unwrap();
        let mid = certify(&h, &ResolutionData::parse(b, "1,3,4").unwrap(), Route::Given).unwrap();
        let ab = glue(&h, &left, &mid).unwrap();
        assert_eq!(ab.data.to_string(), "2,4|1,3,4");
        // closing on the right is not an isomorphism, only small
        assert!(matches!(glue(&h, &ab, &left), Err(Error::NotIso { .. })));
        let w = g.parse("3 5 1 4 2").unwrap();
        let abc = certify(&h, &ResolutionData::parse(w, "2,4|1,3,4|2,4").unwrap(), Route::Given).unwrap();
        assert!(abc.is_equivariant());
        assert!(abc.certificate.is_small());
    }

    #[test]
    fn glue_disjoint_supports() {
        let g = CoxeterGroup::type_a(4).unwrap();
        let h = HeckeAlgebra::new(&g);
        let a = g.longest("1".parse().unwrap());
        let b = g.longest("3,4".parse().unwrap());
        let left = certify(&h, &ResolutionData::parse(a, "1").unwrap(), Route::Given).unwrap();
        let right = certify(&h, &ResolutionData::parse(b, "3,4").unwrap(), Route::Given).unwrap();
        let c = glue(&h, &left, &right).unwrap();
        assert_eq!(c.data.to_string(), "1|3,4");
    }

    #[test]
    fn glue_rejects_non_isomorphism() {
        let g = CoxeterGroup::type_a(2).unwrap();
        let h = HeckeAlgebra::new(&g);
        let s1 = g.simple(1);
        let s2 = g.simple(2);
        let a = certify(&h, &ResolutionData::new(s1, vec!["1".parse().unwrap()]), Route::Given).unwrap();
        let b = certify(&h, &ResolutionData::new(s2, vec!["2".parse().unwrap()]), Route::Given).unwrap();
        let ab = glue(&h, &a, &b).unwrap();
        assert!(matches!(glue(&h, &ab, &a), Err(Error::NotIso { .. })));
    }
}
