use std::collections::HashMap;
use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use schubert::bp::{complete_bp, is_smooth, simply_laced_factorization, FactorChain};
use schubert::hecke::{fiber_profile, HeckeAlgebra, HeckeElement, ProfileReport};
use schubert::resolution::{
    certify, classify, ClassifyConfig, CertifiedResolution, ResolutionData, Route, SearchConfig, Searcher,
};
use schubert::{CartanType, CoxeterGroup, Elem, ParabolicSet};

fn err(e: schubert::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sets_to_lists(sets: &[ParabolicSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().collect()).collect()
}

/// A finite Weyl group. Elements are passed as strings: one-line notation for
/// type A ("4 2 3 1"), reduced words such as "s2s1s2" otherwise.
#[pyclass(name = "Group", frozen)]
struct PyGroup {
    g: Arc<CoxeterGroup>,
}

impl PyGroup {
    fn elem(&self, w: &str) -> PyResult<Elem> {
        self.g.parse(w).map_err(err)
    }
}

/// A certified small resolution.
#[pyclass(name = "Resolution", frozen, get_all)]
struct PyResolution {
    w: String,
    route: String,
    data: Vec<Vec<usize>>,
    eq_left: bool,
    eq_right: bool,
    /// `(u, [c0, c1, ...])` for every cell with nonzero fiber.
    profile: Vec<(String, Vec<i128>)>,
}

#[pymethods]
impl PyResolution {
    fn data_string(&self) -> String {
        self.data
            .iter()
            .map(|s| s.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("|")
    }

    fn __repr__(&self) -> String {
        format!("Resolution(w='{}', route='{}', data='{}')", self.w, self.route, self.data_string())
    }
}

impl PyResolution {
    fn new(g: &CoxeterGroup, r: &CertifiedResolution) -> Self {
        PyResolution {
            w: g.format(r.data.w),
            route: r.route.as_str().to_string(),
            data: r.data.to_index_lists(),
            eq_left: r.eq_left,
            eq_right: r.eq_right,
            profile: r
                .profile
                .cells
                .iter()
                .map(|(u, n)| (g.format(*u), n.coeffs().to_vec()))
                .collect(),
        }
    }
}

fn terms(g: &CoxeterGroup, h: &HeckeElement) -> Vec<(String, Vec<i128>)> {
    h.terms().map(|(w, c)| (g.format(w), c.coeffs().to_vec())).collect()
}

#[pymethods]
impl PyGroup {
    /// `Group("A", 3)` or `Group("C2")`.
    #[new]
    #[pyo3(signature = (kind, rank=None))]
    fn new(kind: &str, rank: Option<usize>) -> PyResult<Self> {
        let name = match rank {
            Some(r) => format!("{kind}{r}"),
            None => kind.to_string(),
        };
        let t: CartanType = name.parse().map_err(err)?;
        Ok(PyGroup {
            g: Arc::new(CoxeterGroup::new(t).map_err(err)?),
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.g.rank()
    }

    #[getter]
    fn order(&self) -> usize {
        self.g.order()
    }

    fn elements(&self) -> Vec<String> {
        self.g.elements().map(|w| self.g.format(w)).collect()
    }

    fn length(&self, w: &str) -> PyResult<usize> {
        Ok(self.g.length(self.elem(w)?))
    }

    fn inverse(&self, w: &str) -> PyResult<String> {
        Ok(self.g.format(self.g.inverse(self.elem(w)?)))
    }

    fn reduced_word(&self, w: &str) -> PyResult<Vec<usize>> {
        Ok(self.g.reduced_word(self.elem(w)?))
    }

    fn right_descents(&self, w: &str) -> PyResult<Vec<usize>> {
        Ok(self.g.right_descents(self.elem(w)?).iter().collect())
    }

    fn left_descents(&self, w: &str) -> PyResult<Vec<usize>> {
        Ok(self.g.left_descents(self.elem(w)?).iter().collect())
    }

    fn demazure(&self, a: &str, b: &str) -> PyResult<String> {
        Ok(self.g.format(self.g.demazure(self.elem(a)?, self.elem(b)?)))
    }

    fn multiply(&self, a: &str, b: &str) -> PyResult<String> {
        Ok(self.g.format(self.g.multiply(self.elem(a)?, self.elem(b)?)))
    }

    fn bruhat_leq(&self, a: &str, b: &str) -> PyResult<bool> {
        Ok(self.g.bruhat_leq(self.elem(a)?, self.elem(b)?))
    }

    fn is_smooth(&self, w: &str) -> PyResult<bool> {
        Ok(is_smooth(&self.g, self.elem(w)?))
    }

    /// Chain factors `w_0, ..., w_m` of a complete BP decomposition, if one exists.
    fn complete_bp(&self, w: &str) -> PyResult<Option<Vec<String>>> {
        let g = &self.g;
        if !g.is_type_a() {
            return Err(err(schubert::Error::NotTypeA));
        }
        Ok(complete_bp(g, self.elem(w)?).map(|c| c.chain_factors(g).factors.iter().map(|&f| g.format(f)).collect()))
    }

    /// Parabolic data of a smooth element in a simply-laced group.
    fn smooth_factorization(&self, w: &str) -> PyResult<Vec<Vec<usize>>> {
        let sets = simply_laced_factorization(&self.g, self.elem(w)?).map_err(err)?;
        Ok(sets_to_lists(&sets))
    }

    /// Hecke product `T_{s_1} ... T_{s_k}` as `[(w, coeffs)]`.
    fn hecke_word(&self, word: Vec<usize>) -> PyResult<Vec<(String, Vec<i128>)>> {
        let g = &*self.g;
        let h = HeckeAlgebra::new(g);
        let mut acc = HeckeElement::basis(g.identity());
        for s in word {
            if s == 0 || s > g.rank() {
                return Err(PyValueError::new_err(format!("generator {s} out of range")));
            }
            acc = h.mul_generator_right(&acc, s);
        }
        Ok(terms(g, &acc))
    }

    /// Fiber profile of parabolic data "2|1|2" as JSON text.
    fn profile_json(&self, data: &str) -> PyResult<String> {
        let g = &*self.g;
        let sets = data
            .split('|')
            .map(|p| p.parse::<ParabolicSet>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let chain = FactorChain::parabolic(g, &sets).map_err(err)?;
        let p = fiber_profile(&HeckeAlgebra::new(g), &chain).map_err(err)?;
        serde_json::to_string(&ProfileReport::new(g, &p)).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Validates data and requires a small verdict; raises `ValueError` otherwise.
    fn certify(&self, w: &str, data: &str) -> PyResult<PyResolution> {
        let g = &*self.g;
        let d = ResolutionData::parse(self.elem(w)?, data).map_err(err)?;
        let r = certify(&HeckeAlgebra::new(g), &d, Route::Given).map_err(err)?;
        Ok(PyResolution::new(g, &r))
    }

    /// Runs the search pipeline; `None` when nothing is found within the budget.
    #[pyo3(signature = (w, budget=None))]
    fn resolve(&self, py: Python<'_>, w: &str, budget: Option<usize>) -> PyResult<Option<PyResolution>> {
        let g = self.g.clone();
        let w = self.elem(w)?;
        let cfg = SearchConfig {
            budget: budget.unwrap_or(SearchConfig::default().budget),
            ..SearchConfig::default()
        };
        Ok(py.detach(move || {
            let h = HeckeAlgebra::new(&g);
            let found = Searcher::new(&h, cfg).search_small(w).resolution;
            found.map(|r| PyResolution::new(&g, &r))
        }))
    }

    /// Counts `{"total", "small", "smooth", "none"}` and the elements without a resolution.
    #[pyo3(signature = (budget=None, workers=0))]
    fn classify(
        &self,
        py: Python<'_>,
        budget: Option<usize>,
        workers: usize,
    ) -> PyResult<(HashMap<String, usize>, Vec<String>)> {
        let g = self.g.clone();
        let cfg = ClassifyConfig {
            search: SearchConfig {
                budget: budget.unwrap_or(SearchConfig::default().budget),
                ..SearchConfig::default()
            },
            workers,
            timings: false,
        };
        let report = py.detach(move || classify(&g, cfg)).map_err(err)?;
        let c = report.counts;
        let counts = HashMap::from([
            ("total".to_string(), c.total),
            ("small".to_string(), c.small),
            ("smooth".to_string(), c.smooth),
            ("none".to_string(), c.none),
        ]);
        Ok((counts, report.failures().into_iter().map(str::to_string).collect()))
    }

    fn __repr__(&self) -> String {
        format!("Group('{}')", self.g.cartan_type())
    }
}

#[pymodule]
fn pyschubert(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyResolution>()?;
    Ok(())
}
