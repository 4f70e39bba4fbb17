//! The polynomial de Rham algebra M[t,dt] with its evaluation morphisms,
//! and the path-object DGLA {(l, m) : e₀(m) = 0, e₁(m) = χ(l)} whose
//! t-weight slices recover the cohomology of the suspended cone.

use std::collections::BTreeMap;

use crate::complex::CochainComplex;
use crate::cone::suspended_cone;
use crate::dgla::{Dgla, DglaMorphism};
use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedSpace, LinearMap};
use crate::matrix::Mat;
use crate::rational::{rint, rone, rzero, sign_pow, Rat};

/// A sparse element of M[t,dt]: coefficients indexed by (t-power, has-dt).
/// The value at (k, false) is the M-element m with m·t^k; at (k, true)
/// the M-element n with n·t^k·dt (total degree |n| + 1).
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PolyElem {
    parts: BTreeMap<(usize, bool), GradedElement>,
}

impl PolyElem {
    pub fn zero() -> Self {
        PolyElem::default()
    }

    pub fn monomial(m: &GradedElement, k: usize, dt: bool) -> Self {
        let mut out = PolyElem::zero();
        out.insert(k, dt, m.clone());
        out
    }

    fn insert(&mut self, k: usize, dt: bool, v: GradedElement) {
        if v.is_zero() {
            return;
        }
        let slot = self.parts.entry((k, dt)).or_insert_with(GradedElement::zero);
        *slot = slot.add(&v);
        if slot.is_zero() {
            self.parts.remove(&(k, dt));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn add(&self, other: &PolyElem) -> PolyElem {
        let mut out = self.clone();
        for (&(k, dt), v) in &other.parts {
            out.insert(k, dt, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> PolyElem {
        let mut out = PolyElem::zero();
        for (&(k, dt), v) in &self.parts {
            out.insert(k, dt, v.scale(c));
        }
        out
    }

    pub fn sub(&self, other: &PolyElem) -> PolyElem {
        self.add(&other.scale(&-rone()))
    }

    pub fn parts(&self) -> &BTreeMap<(usize, bool), GradedElement> {
        &self.parts
    }
}

/// Splits an element into its homogeneous pieces.
fn homogeneous_parts(x: &GradedElement) -> Vec<(i32, GradedElement)> {
    x.coords_map()
        .iter()
        .map(|(&d, v)| (d, GradedElement::from_degree(d, v.clone())))
        .collect()
}

/// M[t,dt] for a fixed base DGLA, with differential, bracket and the
/// evaluation morphisms e_a.
#[derive(Clone, Debug)]
pub struct PolyDeRham {
    pub base: Dgla,
}

impl PolyDeRham {
    /// m ↦ m·t⁰.
    pub fn include(&self, m: &GradedElement) -> PolyElem {
        PolyElem::monomial(m, 0, false)
    }

    /// d(m t^k) = dm t^k + (−1)^{|m|} k·m t^{k−1} dt;
    /// d(n t^k dt) = dn t^k dt.
    pub fn d(&self, x: &PolyElem) -> PolyElem {
        let mut out = PolyElem::zero();
        for (&(k, dt), v) in &x.parts {
            out.insert(k, dt, self.base.apply_d(v));
            if !dt && k >= 1 {
                for (deg, part) in homogeneous_parts(v) {
                    out.insert(
                        k - 1,
                        true,
                        part.scale(&(sign_pow(deg as i64) * rint(k as i64))),
                    );
                }
            }
        }
        out
    }

    /// [x t^i (dt?), y t^j (dt?)] with the Koszul sign for the dt factor
    /// crossing y.
    pub fn bracket(&self, x: &PolyElem, y: &PolyElem) -> PolyElem {
        let mut out = PolyElem::zero();
        for (&(k1, dt1), v1) in &x.parts {
            for (&(k2, dt2), v2) in &y.parts {
                if dt1 && dt2 {
                    continue;
                }
                if dt1 {
                    for (deg, part) in homogeneous_parts(v2) {
                        out.insert(
                            k1 + k2,
                            true,
                            self.base.bracket(v1, &part).scale(&sign_pow(deg as i64)),
                        );
                    }
                } else {
                    out.insert(k1 + k2, dt2, self.base.bracket(v1, v2));
                }
            }
        }
        out
    }

    /// e_a(Σ m_k t^k + n_k t^k dt) = Σ m_k a^k.
    pub fn eval(&self, a: &Rat, x: &PolyElem) -> GradedElement {
        let mut out = GradedElement::zero();
        for (&(k, dt), v) in &x.parts {
            if dt {
                continue;
            }
            let mut c = rone();
            for _ in 0..k {
                c *= a;
            }
            out = out.add(&v.scale(&c));
        }
        out
    }

    pub fn e0(&self, x: &PolyElem) -> GradedElement {
        self.eval(&rzero(), x)
    }

    pub fn e1(&self, x: &PolyElem) -> GradedElement {
        self.eval(&rone(), x)
    }

    /// Checks on generating samples that e_a is a DGLA morphism: it
    /// commutes with d and preserves brackets, over basis monomials of
    /// t-power ≤ bound (with and without dt).
    pub fn evaluation_is_morphism(&self, a: &Rat, bound: usize) -> bool {
        let mut samples = Vec::new();
        for deg in self.base.space().degrees() {
            for idx in 0..self.base.dim(deg) {
                let m = self.base.space().basis_element(deg, idx);
                for k in 0..=bound {
                    samples.push(PolyElem::monomial(&m, k, false));
                    samples.push(PolyElem::monomial(&m, k, true));
                }
            }
        }
        for p in &samples {
            if self.eval(a, &self.d(p)) != self.base.apply_d(&self.eval(a, p)) {
                return false;
            }
            for q in &samples {
                let lhs = self.eval(a, &self.bracket(p, q));
                let rhs = self.base.bracket(&self.eval(a, p), &self.eval(a, q));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Builds M[t,dt] and verifies the evaluation morphisms at a = 0, 1, 2
/// on basis samples.
pub fn path_algebra(m: &Dgla) -> Result<PolyDeRham> {
    let p = PolyDeRham { base: m.clone() };
    for a in [rzero(), rone(), rint(2)] {
        if !p.evaluation_is_morphism(&a, 2) {
            return Err(Error::InvalidDgla(format!(
                "evaluation at {a} fails to be a morphism"
            )));
        }
    }
    Ok(p)
}

/// A pair (l, m) with l in L and m in M[t,dt]; membership in the path
/// object requires e₀(m) = 0 and e₁(m) = χ(l).
#[derive(Clone, Debug, PartialEq)]
pub struct FiberElem {
    pub l: GradedElement,
    pub m: PolyElem,
}

/// The path object of χ: the fiber-product DGLA on exact sparse
/// polynomial data, plus the machinery to slice it by t-weight.
#[derive(Clone, Debug)]
pub struct FiberDgla {
    pub chi: DglaMorphism,
    pub poly: PolyDeRham,
}

impl FiberDgla {
    pub fn new(chi: &DglaMorphism) -> Result<FiberDgla> {
        let poly = path_algebra(&chi.target)?;
        Ok(FiberDgla {
            chi: chi.clone(),
            poly,
        })
    }

    /// Whether both defining constraints hold, on the exact data.
    pub fn contains(&self, x: &FiberElem) -> bool {
        self.poly.e0(&x.m).is_zero() && self.poly.e1(&x.m) == self.chi.apply(&x.l)
    }

    /// Componentwise differential; preserves both constraints.
    pub fn d(&self, x: &FiberElem) -> FiberElem {
        FiberElem {
            l: self.chi.source.apply_d(&x.l),
            m: self.poly.d(&x.m),
        }
    }

    /// Componentwise bracket; may raise t-weight, storage stays sparse.
    pub fn bracket(&self, x: &FiberElem, y: &FiberElem) -> FiberElem {
        FiberElem {
            l: self.chi.source.bracket(&x.l, &y.l),
            m: self.poly.bracket(&x.m, &y.m),
        }
    }
}

/// One t-weight slice of the path object as a finite cochain complex.
/// Weight of t^k is k; weight of t^k dt is k + 1; d preserves weight, the
/// constraints do not — they are imposed on the exact data first.
#[derive(Clone, Debug)]
pub struct PathSlice {
    pub weight_bound: usize,
    pub complex: CochainComplex,
    pub cohomology_dims: BTreeMap<i32, usize>,
}

/// The degrees at which the ambient slice can be nonzero.
fn ambient_degrees(chi: &DglaMorphism) -> Vec<i32> {
    let mut set = std::collections::BTreeSet::new();
    for d in chi.source.space().degrees() {
        set.insert(d);
    }
    for d in chi.target.space().degrees() {
        set.insert(d);
        set.insert(d + 1);
    }
    set.into_iter().collect()
}

/// Extracts the weight-≤N slice: ambient (l, Σ_{k≤N} m_k t^k,
/// Σ_{k<N} n_k t^k dt), cut down by m_0 = 0 and Σ m_k = χ(l), with the
/// restricted differential.
pub fn path_object_slice(chi: &DglaMorphism, n: usize) -> Result<PathSlice> {
    if n < 1 {
        return Err(Error::OutOfRange(format!("weight bound must be >= 1, got {n}")));
    }
    let l_alg = &chi.source;
    let m_alg = &chi.target;
    let degrees = ambient_degrees(chi);
    // ambient layout per degree i: [L^i | M^i × (N+1) | M^{i−1} × N]
    let amb_dim = |i: i32| l_alg.dim(i) + m_alg.dim(i) * (n + 1) + m_alg.dim(i - 1) * n;
    // constraint matrix per degree: rows for m_0 = 0 and Σ m_k − χ(l) = 0
    let mut sub_bases: BTreeMap<i32, Mat> = BTreeMap::new();
    for &i in &degrees {
        let dl = l_alg.dim(i);
        let dm = m_alg.dim(i);
        let total = amb_dim(i);
        let mut cons = Mat::zeros(2 * dm, total);
        let chi_block = chi.map.block(i);
        for r in 0..dm {
            // m_0 component sits at offset dl + 0·dm + r
            cons.set(r, dl + r, rone());
            for k in 0..=n {
                cons.set(dm + r, dl + k * dm + r, rone());
            }
            for c in 0..dl {
                cons.set(dm + r, c, -chi_block.get(r, c));
            }
        }
        sub_bases.insert(i, cons.nullspace());
    }
    // ambient differential block i → i+1
    let amb_d = |i: i32| -> Mat {
        let rows = amb_dim(i + 1);
        let dl = l_alg.dim(i);
        let dm = m_alg.dim(i);
        let dn = m_alg.dim(i - 1);
        let dl1 = l_alg.dim(i + 1);
        let dm1 = m_alg.dim(i + 1);
        let mut d = Mat::zeros(rows, amb_dim(i));
        let d_l = l_alg.d().block(i);
        let d_m = m_alg.d().block(i);
        let d_n = m_alg.d().block(i - 1);
        // dl part
        for r in 0..dl1 {
            for c in 0..dl {
                d.set(r, c, d_l.get(r, c).clone());
            }
        }
        // m_k ↦ dm_k at t^k, plus (−1)^i k·m_k at t^{k−1} dt
        for k in 0..=n {
            for r in 0..dm1 {
                for c in 0..dm {
                    d.set(dl1 + k * dm1 + r, dl + k * dm + c, d_m.get(r, c).clone());
                }
            }
            if k >= 1 {
                let s = sign_pow(i as i64) * rint(k as i64);
                for c in 0..dm {
                    // target dt slot: degree i+1, index (k−1)·dm + c in the
                    // dt block (M^i coefficients)
                    d.set(
                        dl1 + (n + 1) * dm1 + (k - 1) * dm + c,
                        dl + k * dm + c,
                        s.clone(),
                    );
                }
            }
        }
        // n_k t^k dt ↦ dn_k t^k dt
        for k in 0..n {
            for r in 0..dm {
                for c in 0..dn {
                    d.set(
                        dl1 + (n + 1) * dm1 + k * dm + r,
                        dl + (n + 1) * dm + k * dn + c,
                        d_n.get(r, c).clone(),
                    );
                }
            }
        }
        d
    };
    // build the subcomplex
    let mut dims = Vec::new();
    for &i in &degrees {
        let b = &sub_bases[&i];
        if b.cols() > 0 {
            dims.push((i, b.cols()));
        }
    }
    let space = GradedSpace::with_dims(&dims, "h");
    let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
    for &i in &degrees {
        let b = &sub_bases[&i];
        if b.cols() == 0 {
            continue;
        }
        let img = amb_d(i).mul(b);
        if img.is_zero() {
            continue;
        }
        let b_next = sub_bases
            .get(&(i + 1))
            .cloned()
            .unwrap_or_else(|| Mat::zeros(amb_dim(i + 1), 0));
        // the slice is closed under d: express the image in the subbasis
        let block = b_next.solve_mat(&img)?;
        d.set_block(i, block);
    }
    let complex = CochainComplex::new(space, d)?;
    let h = complex.cohomology()?;
    let mut cohomology_dims = BTreeMap::new();
    for &i in &degrees {
        cohomology_dims.insert(i, h.dim(i));
    }
    Ok(PathSlice {
        weight_bound: n,
        complex,
        cohomology_dims,
    })
}

/// Per-slice cohomology dimensions with the stabilization verdict:
/// stabilization means two consecutive slices with equal dimension
/// vectors, which must then match H^*(C_χ).
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct PathObjectReport {
    pub slices: Vec<(usize, BTreeMap<i32, usize>)>,
    pub stabilized_at: Option<usize>,
    pub cone_dims: BTreeMap<i32, usize>,
    pub matches_cone: bool,
}

/// Computes slices up to weight `n_max` and detects stabilization.
pub fn path_object(chi: &DglaMorphism, n_max: usize) -> Result<PathObjectReport> {
    let cone = suspended_cone(chi)?;
    let h = cone.cohomology()?;
    let degrees = ambient_degrees(chi);
    let mut cone_dims = BTreeMap::new();
    for &i in &degrees {
        cone_dims.insert(i, h.dim(i));
    }
    let mut slices = Vec::new();
    let mut stabilized_at = None;
    for n in 1..=n_max {
        let s = path_object_slice(chi, n)?;
        if stabilized_at.is_none() {
            if let Some((_, prev)) = slices.last() {
                if *prev == s.cohomology_dims {
                    stabilized_at = Some(n);
                }
            }
        }
        slices.push((n, s.cohomology_dims));
    }
    let matches_cone = match stabilized_at {
        Some(n) => slices[n - 1].1 == cone_dims,
        None => false,
    };
    Ok(PathObjectReport {
        slices,
        stabilized_at,
        cone_dims,
        matches_cone,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{corpus, uwz, uwz_inclusion};
    use crate::rational::rat;

    #[test]
    fn poly_calculus_rules() {
        let p = path_algebra(&uwz()).unwrap();
        let u = p.base.space().basis_element(0, 0);
        // d(u t²) = w t² + 2 u t dt
        let x = PolyElem::monomial(&u, 2, false);
        let dx = p.d(&x);
        let w = p.base.space().basis_element(1, 0);
        let mut expect = PolyElem::monomial(&w, 2, false);
        expect = expect.add(&PolyElem::monomial(&u.scale(&rint(2)), 1, true));
        assert_eq!(dx, expect);
        // e₁(t² − t)·u = 0, e₀ kills positive powers
        let tsq_minus_t = PolyElem::monomial(&u, 2, false).sub(&PolyElem::monomial(&u, 1, false));
        assert!(p.e1(&tsq_minus_t).is_zero());
        assert!(p.e0(&PolyElem::monomial(&u, 3, false)).is_zero());
        assert_eq!(p.e0(&p.include(&u)), u);
        // e_a ∘ inclusion = id
        assert_eq!(p.eval(&rat(7, 3), &p.include(&w)), w);
        // dt · dt = 0
        let a = PolyElem::monomial(&u, 0, true);
        assert!(p.bracket(&a, &a).is_zero());
    }

    #[test]
    fn evaluations_are_morphisms() {
        for f in corpus() {
            let p = path_algebra(&f.chi.target).unwrap();
            assert!(p.evaluation_is_morphism(&rat(-1, 2), 2), "{}", f.name);
        }
    }

    #[test]
    fn fiber_membership_closed_under_d_and_bracket() {
        let chi = uwz_inclusion();
        let fib = FiberDgla::new(&chi).unwrap();
        // (w, w·t): e₀ = 0, e₁ = w = χ(w)
        let w_sub = chi.source.space().basis_element(1, 0);
        let w = chi.target.space().basis_element(1, 0);
        let x = FiberElem {
            l: w_sub.clone(),
            m: PolyElem::monomial(&w, 1, false),
        };
        assert!(fib.contains(&x));
        assert!(fib.contains(&fib.d(&x)));
        assert!(fib.contains(&fib.bracket(&x, &x)));
        // constraint violation detected
        let bad = FiberElem {
            l: w_sub,
            m: PolyElem::monomial(&w, 0, false),
        };
        assert!(!fib.contains(&bad));
    }

    #[test]
    fn identity_path_object_acyclic() {
        let g = uwz();
        let chi = DglaMorphism::identity(&g);
        let report = path_object(&chi, 4).unwrap();
        for (_, dims) in &report.slices {
            assert!(dims.values().all(|&d| d == 0));
        }
        assert_eq!(report.stabilized_at, Some(2));
        assert!(report.matches_cone);
    }

    #[test]
    fn shift_path_object_matches_shifted_cohomology() {
        // χ: 0 → M gives H^i = H^{i−1}(M)
        let g = uwz();
        let chi = DglaMorphism::zero_to(&g);
        let report = path_object(&chi, 5).unwrap();
        assert!(report.matches_cone);
        let n = report.stabilized_at.unwrap();
        let dims = &report.slices[n - 1].1;
        // H(uwz): degree 0 → 0 (du = w), degree 1 → span{z}
        assert_eq!(dims.get(&1), Some(&0));
        assert_eq!(dims.get(&2), Some(&1));
    }

    #[test]
    fn uwz_inclusion_stabilizes_to_cone_dims() {
        let report = path_object(&uwz_inclusion(), 6).unwrap();
        assert!(report.matches_cone);
        let n = report.stabilized_at.unwrap();
        let dims = &report.slices[n - 1].1;
        assert_eq!(dims.get(&0), Some(&0));
        assert_eq!(dims.get(&1), Some(&1));
        assert_eq!(dims.get(&2), Some(&1));
    }

    #[test]
    fn whole_corpus_stabilizes_to_cone() {
        for f in corpus() {
            let report = path_object(&f.chi, 6).unwrap();
            assert!(report.matches_cone, "{}: {:?}", f.name, report);
        }
    }
}
