//! Htp(V,W) = Hom*(V[1], W), the derived bracket {f,g} = f∂g ∓ g∂f on
//! Htp(ker ∂, A/∂A) for a finite bicomplex model, and the Cartan-formula
//! checker for contraction data.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::coeff::CoefficientAlgebra;
use crate::complex::{CochainComplex, HomComplex};
use crate::dgla::{BasisKey, Dgla, DglaMorphism};
use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedSpace, LinearMap};
use crate::matrix::Mat;
use crate::rational::{sign_pow, Rat};
use crate::whitehead::ComplexQuotient;

/// Htp(V,W) = Hom*(V[1], W): the Hom complex of the shifted source, whose
/// differential is δ(f) = d_W f + (−1)^i f d_V and whose degree i part is
/// Hom^{i−1}(V,W).
pub fn htp_complex(v: &CochainComplex, w: &CochainComplex) -> Result<HomComplex> {
    HomComplex::new(&v.shift(1), w)
}

/// A finite-dimensional graded-commutative algebra with two
/// anticommuting square-zero derivations ∂ and ∂̄.
#[derive(Clone, Debug)]
pub struct FiniteBicomplexModel {
    /// the algebra carrying ∂ as its differential
    pub with_del: CoefficientAlgebra,
    /// the same algebra carrying ∂̄
    pub with_delbar: CoefficientAlgebra,
}

impl FiniteBicomplexModel {
    pub fn new(
        space: GradedSpace,
        del: LinearMap,
        delbar: LinearMap,
        mult: Vec<(BasisKey, BasisKey, GradedElement)>,
    ) -> Result<FiniteBicomplexModel> {
        let cx_del = CochainComplex::new(space.clone(), del)?;
        let cx_delbar = CochainComplex::new(space, delbar)?;
        let with_del = CoefficientAlgebra::new(cx_del, mult.clone())?;
        let with_delbar = CoefficientAlgebra::new(cx_delbar, mult)?;
        let model = FiniteBicomplexModel {
            with_del,
            with_delbar,
        };
        for alg in [&model.with_del, &model.with_delbar] {
            let report = alg.validate();
            if !report.is_valid() {
                return Err(Error::InvalidCoefficientAlgebra(format!(
                    "bicomplex model axiom failure: {:?}",
                    report.violations[0]
                )));
            }
        }
        // ∂∂̄ + ∂̄∂ = 0
        let d = model.del();
        let db = model.delbar();
        if !d.compose(db).add(&db.compose(d)).is_zero() {
            return Err(Error::InvalidCoefficientAlgebra(
                "the two differentials do not anticommute".into(),
            ));
        }
        Ok(model)
    }

    pub fn space(&self) -> &GradedSpace {
        self.with_del.space()
    }

    pub fn del(&self) -> &LinearMap {
        &self.with_del.complex.d
    }

    pub fn delbar(&self) -> &LinearMap {
        &self.with_delbar.complex.d
    }
}

/// The derived-bracket DGLA of a model, on Htp(ker ∂, A/∂A) with the
/// complex structure coming from ∂̄.
pub struct DerivedBracket {
    pub model: FiniteBicomplexModel,
    /// ker ∂ with the ∂̄ differential
    pub kernel: CochainComplex,
    /// columns embedding the kernel into A, per degree
    pub kernel_basis: BTreeMap<i32, Mat>,
    /// A/∂A with the induced ∂̄
    pub quotient: ComplexQuotient,
    /// Hom*(ker ∂ [1], A/∂A) with its canonical basis
    pub htp: HomComplex,
    pub dgla: Dgla,
}

/// Builds the derived-bracket DGLA {f,g} = f∂g − (−1)^{|f||g|} g∂f and
/// verifies the full DGLA axiom set on its structure constants.
pub fn derived_bracket_dgla(model: &FiniteBicomplexModel) -> Result<DerivedBracket> {
    let space = model.space().clone();
    // ker ∂ with ∂̄ restricted
    let mut kernel_basis = BTreeMap::new();
    let mut kdims = Vec::new();
    for i in space.degrees() {
        let b = model.del().block(i).nullspace();
        if b.cols() > 0 {
            kdims.push((i, b.cols()));
        }
        kernel_basis.insert(i, b);
    }
    let kspace = GradedSpace::with_dims(&kdims, "k");
    let mut kd = LinearMap::zero(kspace.clone(), kspace.clone(), 1);
    for i in space.degrees() {
        let b = &kernel_basis[&i];
        if b.cols() == 0 || kspace.dim(i + 1) == 0 {
            continue;
        }
        let img = model.delbar().block(i).mul(b);
        let block = kernel_basis[&(i + 1)].solve_mat(&img)?;
        kd.set_block(i, block);
    }
    let kernel = CochainComplex::new(kspace, kd)?;
    // A/∂A with ∂̄ induced
    let mut image = BTreeMap::new();
    for i in space.degrees() {
        image.insert(i, model.del().block(i - 1).column_space_basis());
    }
    let quotient = ComplexQuotient::new(&model.with_delbar.complex, &image)?;
    let htp = htp_complex(&kernel, &quotient.complex)?;
    // ∂ descends to a degree-0 map A/∂A → ker∂[1] (on class reps)
    let shifted = kernel.shift(1);
    let mut p = LinearMap::zero(
        quotient.complex.space.clone(),
        shifted.space.clone(),
        0,
    );
    for i in quotient.complex.space.degrees() {
        let n = quotient.complex.dim(i);
        if n == 0 || shifted.space.dim(i) == 0 {
            continue;
        }
        let mut cols = Vec::new();
        for k in 0..n {
            let rep = quotient.lift(&quotient.complex.space.basis_element(i, k));
            let da = model.del().apply(&rep);
            let coords = da.degree_part(i + 1, space.dim(i + 1));
            cols.push(kernel_basis[&(i + 1)].solve(&coords)?);
        }
        p.set_block(i, Mat::from_columns(shifted.space.dim(i), &cols));
    }
    // structure constants of {f,g} on the Htp basis
    let mut entries = Vec::new();
    let keys = htp.complex.space.basis();
    for (ia, &a) in keys.iter().enumerate() {
        for &b in keys.iter().skip(ia) {
            if a == b && a.0 % 2 == 0 {
                continue;
            }
            let fa = htp.to_linear_map(a.0, &unit(htp.dim(a.0), a.1));
            let fb = htp.to_linear_map(b.0, &unit(htp.dim(b.0), b.1));
            let fg = fa.compose(&p).compose(&fb);
            let gf = fb
                .compose(&p)
                .compose(&fa)
                .scale(&sign_pow((a.0 * b.0) as i64));
            let br = fg.sub(&gf);
            if br.is_zero() {
                continue;
            }
            let coords = htp.coords_of_map(a.0 + b.0, &br);
            entries.push((a, b, GradedElement::from_degree(a.0 + b.0, coords)));
        }
    }
    let dgla = Dgla::new(htp.complex.clone(), entries)?;
    Ok(DerivedBracket {
        model: model.clone(),
        kernel,
        kernel_basis,
        quotient,
        htp,
        dgla,
    })
}

fn unit(n: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![crate::rational::rzero(); n];
    v[k] = crate::rational::rone();
    v
}

/// Graded commutator of two graded linear maps on the same space.
fn graded_commutator(f: &LinearMap, g: &LinearMap) -> LinearMap {
    f.compose(g)
        .sub(&g.compose(f).scale(&sign_pow((f.degree * g.degree) as i64)))
}

/// One failed Cartan identity instance.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct CartanFailure {
    pub identity: String,
    pub witness: String,
}

/// Outcome of checking the Cartan formulas for contraction data
/// i: g → End(A) (each i_a of degree |a| − 1).
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct CartanReport {
    pub failures: Vec<CartanFailure>,
    /// whether a ↦ [i_a] also defines a DGLA morphism into the
    /// derived-bracket DGLA (checked when all identities hold)
    pub morphism_into_derived: Option<bool>,
    pub passed: bool,
}

/// Contraction data: a degree −1 assignment from the basis of g to
/// endomorphisms of the model algebra.
pub struct Contraction {
    pub maps: BTreeMap<BasisKey, LinearMap>,
}

impl Contraction {
    /// The map attached to a homogeneous element, by linearity.
    fn of(&self, model: &FiniteBicomplexModel, x: &GradedElement, degree: i32) -> LinearMap {
        let mut acc = LinearMap::zero(model.space().clone(), model.space().clone(), degree - 1);
        for (&deg, coords) in x.coords_map() {
            for (idx, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                acc = acc.add(&self.maps[&(deg, idx)].scale(c));
            }
        }
        acc
    }
}

/// Checks the three Cartan formulas on all basis pairs of g:
/// i_{da} = [∂̄, i_a], i_{[a,b]} = [[i_a, ∂], i_b], [i_a, i_b] = 0.
pub fn cartan_check(
    model: &FiniteBicomplexModel,
    g: &Dgla,
    contraction: &Contraction,
) -> Result<CartanReport> {
    // shape checks: every basis element covered, degrees −1
    for key in g.space().basis() {
        let m = contraction
            .maps
            .get(&key)
            .ok_or_else(|| Error::OutOfRange(format!("no contraction for basis {key:?}")))?;
        if m.degree != key.0 - 1 {
            return Err(Error::WrongDegree {
                expected: key.0 - 1,
                got: m.degree,
            });
        }
    }
    let mut failures = Vec::new();
    let keys = g.space().basis();
    for &a in &keys {
        let ia = &contraction.maps[&a];
        let da = g.apply_d(&g.space().basis_element(a.0, a.1));
        let i_da = contraction.of(model, &da, a.0 + 1);
        let rhs = graded_commutator(model.delbar(), ia);
        if !i_da.sub(&rhs).is_zero() {
            failures.push(CartanFailure {
                identity: "i_{da} = [delbar, i_a]".into(),
                witness: format!("{a:?}"),
            });
        }
        for &b in &keys {
            let ib = &contraction.maps[&b];
            let ab = g.bracket_basis(a, b);
            let i_ab = contraction.of(model, &ab, a.0 + b.0);
            let lie = graded_commutator(&graded_commutator(ia, model.del()), ib);
            if !i_ab.sub(&lie).is_zero() {
                failures.push(CartanFailure {
                    identity: "i_{[a,b]} = [[i_a, del], i_b]".into(),
                    witness: format!("{a:?}, {b:?}"),
                });
            }
            if !graded_commutator(ia, ib).is_zero() {
                failures.push(CartanFailure {
                    identity: "[i_a, i_b] = 0".into(),
                    witness: format!("{a:?}, {b:?}"),
                });
            }
        }
    }
    let morphism_into_derived = if failures.is_empty() {
        Some(contraction_is_morphism(model, g, contraction)?)
    } else {
        None
    };
    Ok(CartanReport {
        passed: failures.is_empty() && morphism_into_derived == Some(true),
        failures,
        morphism_into_derived,
    })
}

/// Verifies directly that a ↦ (class of i_a on Htp(ker ∂, A/∂A)) is a
/// DGLA morphism into the derived-bracket DGLA.
fn contraction_is_morphism(
    model: &FiniteBicomplexModel,
    g: &Dgla,
    contraction: &Contraction,
) -> Result<bool> {
    let derived = derived_bracket_dgla(model)?;
    // i_a restricted to ker ∂ and projected to A/∂A, as an Htp element
    let mut blocks: BTreeMap<i32, Mat> = BTreeMap::new();
    for key in g.space().basis() {
        let ia = &contraction.maps[&key];
        let mut f = LinearMap::zero(
            derived.kernel.shift(1).space.clone(),
            derived.quotient.complex.space.clone(),
            key.0,
        );
        for i in derived.kernel.space.degrees() {
            let kb = &derived.kernel_basis[&i];
            if kb.cols() == 0 {
                continue;
            }
            let mut cols = Vec::new();
            for k in 0..kb.cols() {
                let amb = GradedElement::from_degree(i, kb.column(k));
                let img = ia.apply(&amb);
                let cls = derived.quotient.project(&img)?;
                cols.push(cls.degree_part(
                    i + key.0 - 1,
                    derived.quotient.complex.dim(i + key.0 - 1),
                ));
            }
            // source degree in the shifted space is i − 1
            f.set_block(
                i - 1,
                Mat::from_columns(derived.quotient.complex.dim(i + key.0 - 1), &cols),
            );
        }
        let coords = derived.htp.coords_of_map(key.0, &f);
        let block = blocks.entry(key.0).or_insert_with(|| {
            Mat::zeros(derived.dgla.dim(key.0), g.dim(key.0))
        });
        for (r, v) in coords.into_iter().enumerate() {
            block.set(r, key.1, v);
        }
    }
    let mut map = LinearMap::zero(g.space().clone(), derived.dgla.space().clone(), 0);
    for (deg, b) in blocks {
        map.set_block(deg, b);
    }
    Ok(DglaMorphism::new(g.clone(), derived.dgla.clone(), map).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::HomComplex;
    use crate::corpus::sign_mutations;
    use crate::graded::GradedSpace;
    use crate::matrix::Mat;
    use crate::rational::rint;

    fn point_complex() -> CochainComplex {
        CochainComplex::with_zero_d(GradedSpace::with_dims(&[(0, 1)], "v"))
    }

    #[test]
    fn htp_degree_shift() {
        let v = point_complex();
        let h = htp_complex(&v, &v).unwrap();
        assert_eq!(h.dim(1), 1);
        assert_eq!(h.dim(0), 0);
        // dims consistency against the unshifted Hom complex
        let v2 = CochainComplex::with_zero_d(GradedSpace::with_dims(&[(0, 1), (1, 2)], "v"));
        let plain = HomComplex::new(&v2, &v2).unwrap();
        let htp = htp_complex(&v2, &v2).unwrap();
        for i in -2..=3 {
            assert_eq!(htp.dim(i), plain.dim(i - 1), "degree {i}");
        }
    }

    #[test]
    fn htp_cohomology_is_shifted_hom_cohomology() {
        let space = GradedSpace::with_dims(&[(0, 1), (1, 1)], "v");
        let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
        d.set_block(0, Mat::from_int_rows(&[&[1]]));
        let v = CochainComplex::new(space, d).unwrap();
        let plain = HomComplex::new(&v, &v).unwrap();
        let htp = htp_complex(&v, &v).unwrap();
        let hp = plain.complex.cohomology().unwrap();
        let hh = htp.complex.cohomology().unwrap();
        for i in -2..=3 {
            assert_eq!(hh.dim(i), hp.dim(i - 1), "degree {i}");
        }
    }

    /// Exterior-style model: x in degree 1, y = ∂x in degree 2, xy in
    /// degree 3; ∂̄ = 0.
    fn xy_model() -> FiniteBicomplexModel {
        let space = GradedSpace::new(
            [
                (1, vec!["x".to_string()]),
                (2, vec!["y".to_string()]),
                (3, vec!["xy".to_string()]),
            ]
            .into(),
        )
        .unwrap();
        let mut del = LinearMap::zero(space.clone(), space.clone(), 1);
        del.set_block(1, Mat::from_int_rows(&[&[1]]));
        let delbar = LinearMap::zero(space.clone(), space.clone(), 1);
        let xy = space.basis_element(3, 0);
        FiniteBicomplexModel::new(space, del, delbar, vec![((1, 0), (2, 0), xy)]).unwrap()
    }

    #[test]
    fn derived_bracket_abelian_when_del_zero() {
        let space = GradedSpace::with_dims(&[(1, 2)], "e");
        let zero = LinearMap::zero(space.clone(), space.clone(), 1);
        let model =
            FiniteBicomplexModel::new(space, zero.clone(), zero, Vec::new()).unwrap();
        let derived = derived_bracket_dgla(&model).unwrap();
        assert!(derived.dgla.is_abelian());
        assert!(derived.dgla.validate().is_valid());
    }

    #[test]
    fn derived_bracket_xy_model_validates_and_is_nonabelian() {
        let model = xy_model();
        let derived = derived_bracket_dgla(&model).unwrap();
        assert!(derived.dgla.validate().is_valid());
        assert!(!derived.dgla.is_abelian());
        // mutation testing: flipped structure constants are rejected
        let muts = sign_mutations(&derived.dgla);
        assert!(!muts.is_empty());
        let rejected = muts.iter().filter(|m| !m.validate().is_valid()).count();
        assert!(rejected > 0, "no mutation caught");
    }

    #[test]
    fn cartan_trivial_contraction() {
        let model = xy_model();
        let g = Dgla::abelian(CochainComplex::with_zero_d(GradedSpace::with_dims(
            &[(1, 1)],
            "a",
        )));
        let maps = [(
            (1, 0),
            LinearMap::zero(model.space().clone(), model.space().clone(), 0),
        )]
        .into();
        let report = cartan_check(&model, &g, &Contraction { maps }).unwrap();
        assert!(report.passed, "{:?}", report.failures);
        assert_eq!(report.morphism_into_derived, Some(true));
    }

    #[test]
    fn cartan_substitution_contraction_on_free_generators() {
        // free graded-commutative on two degree-1 generators, no
        // differentials; g abelian in degree 0 contracting e1 away
        let space = GradedSpace::new(
            [
                (1, vec!["e1".to_string(), "e2".to_string()]),
                (2, vec!["e12".to_string()]),
            ]
            .into(),
        )
        .unwrap();
        let zero = LinearMap::zero(space.clone(), space.clone(), 1);
        let e12 = space.basis_element(2, 0);
        let model = FiniteBicomplexModel::new(
            space.clone(),
            zero.clone(),
            zero,
            vec![((1, 0), (1, 1), e12)],
        )
        .unwrap();
        let g = Dgla::abelian(CochainComplex::with_zero_d(GradedSpace::with_dims(
            &[(0, 2)],
            "a",
        )));
        // i_{a1}: e1 ↦ 0, e2 ↦ 0, e12 ↦ e2; i_{a2}: e12 ↦ −e1
        let mut i1 = LinearMap::zero(space.clone(), space.clone(), -1);
        i1.set_block(2, Mat::from_int_rows(&[&[0], &[1]]));
        let mut i2 = LinearMap::zero(space.clone(), space.clone(), -1);
        i2.set_block(2, Mat::from_int_rows(&[&[-1], &[0]]));
        let maps = [((0, 0), i1), ((0, 1), i2)].into();
        let report = cartan_check(&model, &g, &Contraction { maps }).unwrap();
        assert!(report.passed, "{:?}", report.failures);
    }

    #[test]
    fn cartan_perturbed_contraction_fails() {
        // i_a with [[i_a, ∂], i_a] ≠ 0 against an abelian g breaks the
        // bracket identity with an explicit witness
        let model = xy_model();
        let g = Dgla::abelian(CochainComplex::with_zero_d(GradedSpace::with_dims(
            &[(1, 1)],
            "a",
        )));
        let mut ia = LinearMap::zero(model.space().clone(), model.space().clone(), 0);
        ia.set_block(1, Mat::identity(1));
        ia.set_block(3, Mat::identity(1));
        let maps = [((1, 0), ia)].into();
        let report = cartan_check(&model, &g, &Contraction { maps }).unwrap();
        assert!(!report.passed);
        assert!(report
            .failures
            .iter()
            .any(|f| f.identity.contains("i_{[a,b]}")));
        let _ = rint(0);
    }
}
