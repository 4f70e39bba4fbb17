//! Finite-dimensional nilpotent graded-commutative dg-algebras (the
//! coefficient rings of deformation functors), small extensions, and the
//! tensor DGLA L⊗A.
//!
//! Only the maximal ideal is ever stored for Artinian coefficients; the
//! unit plays no role in the functors computed here.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::complex::CochainComplex;
use crate::dgla::{BasisKey, Dgla, DglaMorphism, ValidationReport, Violation};
use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedSpace, LinearMap};
use crate::matrix::Mat;
use crate::rational::{rone, rzero, sign_pow, Rat};

/// A finite-dimensional nilpotent graded-commutative dg-algebra
/// (without unit), given by a structure-constant table.
///
/// The table stores every ordered basis pair; constructors complete
/// missing mirrors by graded commutativity a·b = (−1)^{|a||b|} b·a.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientAlgebra {
    pub complex: CochainComplex,
    mult: BTreeMap<(BasisKey, BasisKey), GradedElement>,
    pub nilpotency_class: usize,
}

impl CoefficientAlgebra {
    /// Builds and validates eagerly (commutativity, associativity,
    /// derivation rule, certified nilpotency).
    pub fn new(
        complex: CochainComplex,
        entries: Vec<(BasisKey, BasisKey, GradedElement)>,
    ) -> Result<CoefficientAlgebra> {
        let a = CoefficientAlgebra::from_table_unchecked(complex, entries)?;
        let report = a.validate();
        if !report.is_valid() {
            let v = &report.violations[0];
            return Err(Error::InvalidCoefficientAlgebra(format!(
                "{}: {}",
                v.axiom, v.witness
            )));
        }
        Ok(a)
    }

    /// Shape checks and mirror completion only; no axiom validation.
    pub fn from_table_unchecked(
        complex: CochainComplex,
        entries: Vec<(BasisKey, BasisKey, GradedElement)>,
    ) -> Result<CoefficientAlgebra> {
        let mut mult: BTreeMap<(BasisKey, BasisKey), GradedElement> = BTreeMap::new();
        for (a, b, val) in entries {
            if a.1 >= complex.dim(a.0) || b.1 >= complex.dim(b.0) {
                return Err(Error::DimensionMismatch(format!(
                    "product entry references missing basis element ({},{}) or ({},{})",
                    a.0, a.1, b.0, b.1
                )));
            }
            if val.is_zero() {
                continue;
            }
            val.check_in(&complex.space)?;
            if val.homogeneous_degree() != Some(a.0 + b.0) {
                return Err(Error::DimensionMismatch(format!(
                    "product of degrees ({},{}) must be homogeneous of degree {}",
                    a.0,
                    b.0,
                    a.0 + b.0
                )));
            }
            match mult.get(&(a, b)) {
                None => {
                    mult.insert((a, b), val);
                }
                Some(old) if *old == val => {}
                Some(_) => {
                    return Err(Error::InvalidCoefficientAlgebra(format!(
                        "conflicting duplicate product entry for (({},{}),({},{}))",
                        a.0, a.1, b.0, b.1
                    )));
                }
            }
        }
        let keys: Vec<(BasisKey, BasisKey)> = mult.keys().copied().collect();
        for (a, b) in keys {
            if a != b && !mult.contains_key(&(b, a)) {
                let mirror = mult[&(a, b)].scale(&sign_pow((a.0 * b.0) as i64));
                mult.insert((b, a), mirror);
            }
        }
        mult.retain(|_, v| !v.is_zero());
        let mut alg = CoefficientAlgebra {
            complex,
            mult,
            nilpotency_class: 0,
        };
        alg.nilpotency_class = alg.power_filtration_class()?;
        Ok(alg)
    }

    pub fn space(&self) -> &GradedSpace {
        &self.complex.space
    }

    pub fn dim(&self, deg: i32) -> usize {
        self.complex.dim(deg)
    }

    pub fn basis(&self) -> Vec<BasisKey> {
        self.space().basis()
    }

    pub fn mult_basis(&self, a: BasisKey, b: BasisKey) -> GradedElement {
        self.mult
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(GradedElement::zero)
    }

    pub fn mult(&self, x: &GradedElement, y: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for (&dx, vx) in x.coords_map() {
            for (&dy, vy) in y.coords_map() {
                for (p, cx) in vx.iter().enumerate() {
                    if cx.is_zero() {
                        continue;
                    }
                    for (q, cy) in vy.iter().enumerate() {
                        if cy.is_zero() {
                            continue;
                        }
                        let m = self.mult_basis((dx, p), (dy, q));
                        if !m.is_zero() {
                            out = out.add(&m.scale(&(cx * cy)));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn apply_d(&self, x: &GradedElement) -> GradedElement {
        self.complex.d.apply(x)
    }

    pub fn stored_entries(&self) -> &BTreeMap<(BasisKey, BasisKey), GradedElement> {
        &self.mult
    }

    /// Least k with all k-fold products zero, computed from the power
    /// filtration A ⊇ A·A ⊇ A·A·A ⊇ …; errors if it does not terminate.
    fn power_filtration_class(&self) -> Result<usize> {
        // per-degree span of the current power
        let mut current: BTreeMap<i32, Mat> = self
            .space()
            .degrees()
            .into_iter()
            .map(|d| (d, Mat::identity(self.dim(d))))
            .collect();
        let mut k = 1usize;
        let bound = self.space().total_dim() + 2;
        while current.values().any(|m| m.cols() > 0) {
            if k > bound {
                return Err(Error::InvalidCoefficientAlgebra(
                    "power filtration does not terminate: algebra is not nilpotent".into(),
                ));
            }
            // next = span { basis * current }
            let mut cols: BTreeMap<i32, Vec<Vec<Rat>>> = BTreeMap::new();
            for a in self.basis() {
                let xa = self.space().basis_element(a.0, a.1);
                for (&deg, m) in &current {
                    for c in 0..m.cols() {
                        let y = GradedElement::from_degree(deg, m.column(c));
                        let prod = self.mult(&xa, &y);
                        for (&pd, v) in prod.coords_map() {
                            cols.entry(pd).or_default().push(v.clone());
                        }
                    }
                }
            }
            let mut next = BTreeMap::new();
            for deg in self.space().degrees() {
                let n = self.dim(deg);
                let m = match cols.get(&deg) {
                    Some(cs) => Mat::from_columns(n, cs).column_space_basis(),
                    None => Mat::zeros(n, 0),
                };
                next.insert(deg, m);
            }
            current = next;
            k += 1;
        }
        Ok(k)
    }

    /// Full axiom validation: graded commutativity, associativity,
    /// derivation rule for d, square-zero differential.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if let Err(e) = self.complex.check_square_zero() {
            report.violations.push(Violation {
                axiom: "square-zero differential".into(),
                witness: e.to_string(),
            });
        }
        let basis = self.basis();
        for (i, &a) in basis.iter().enumerate() {
            for &b in basis.iter().skip(i) {
                let diff = self
                    .mult_basis(a, b)
                    .sub(&self.mult_basis(b, a).scale(&sign_pow((a.0 * b.0) as i64)));
                if !diff.is_zero() {
                    report.violations.push(Violation {
                        axiom: "graded commutativity".into(),
                        witness: format!("pair (({},{}),({},{}))", a.0, a.1, b.0, b.1),
                    });
                }
            }
        }
        for &a in &basis {
            for &b in &basis {
                let xa = self.space().basis_element(a.0, a.1);
                let xb = self.space().basis_element(b.0, b.1);
                // derivation: d(ab) = (da)b + (-1)^{|a|} a(db)
                let lhs = self.apply_d(&self.mult_basis(a, b));
                let rhs = self
                    .mult(&self.apply_d(&xa), &xb)
                    .add(&self.mult(&xa, &self.apply_d(&xb)).scale(&sign_pow(a.0 as i64)));
                if lhs != rhs {
                    report.violations.push(Violation {
                        axiom: "d is a derivation".into(),
                        witness: format!("pair (({},{}),({},{}))", a.0, a.1, b.0, b.1),
                    });
                }
                for &c in &basis {
                    let xc = self.space().basis_element(c.0, c.1);
                    let lhs = self.mult(&self.mult_basis(a, b), &xc);
                    let rhs = self.mult(&xa, &self.mult_basis(b, c));
                    if lhs != rhs {
                        report.violations.push(Violation {
                            axiom: "associativity".into(),
                            witness: format!(
                                "triple (({},{}),({},{}),({},{}))",
                                a.0, a.1, b.0, b.1, c.0, c.1
                            ),
                        });
                    }
                }
            }
        }
        report
    }

    /// True when every product vanishes (objects of the subcategory of
    /// square-zero algebras).
    pub fn is_square_zero(&self) -> bool {
        self.mult.is_empty()
    }

    /// Sub-algebra on per-degree column spans; checks closure under d and
    /// multiplication. Returns the algebra on a fresh basis with the
    /// inclusion morphism.
    pub fn subalgebra(
        &self,
        sub_basis: &BTreeMap<i32, Mat>,
        prefix: &str,
    ) -> Result<(CoefficientAlgebra, CoeffMorphism)> {
        let mut dims = Vec::new();
        for (&deg, m) in sub_basis {
            assert_eq!(m.rows(), self.dim(deg));
            dims.push((deg, m.cols()));
        }
        let space = GradedSpace::with_dims(&dims, prefix);
        let sub_elem = |deg: i32, col: usize| -> GradedElement {
            GradedElement::from_degree(deg, sub_basis[&deg].column(col))
        };
        let express = |x: &GradedElement| -> Result<GradedElement> {
            let mut out = GradedElement::zero();
            for (&deg, v) in x.coords_map() {
                let m = sub_basis.get(&deg).ok_or_else(|| {
                    Error::DimensionMismatch(format!(
                        "subspace not closed: hit degree {deg} with no sub-basis"
                    ))
                })?;
                let coords = m.solve(v).map_err(|_| {
                    Error::DimensionMismatch(format!("subspace not closed in degree {deg}"))
                })?;
                out.set_degree(deg, coords);
            }
            Ok(out)
        };
        let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
        for (&deg, m) in sub_basis {
            if space.dim(deg + 1) == 0 {
                for c in 0..m.cols() {
                    if !self.apply_d(&sub_elem(deg, c)).is_zero() {
                        return Err(Error::DimensionMismatch(format!(
                            "subspace not closed under d at degree {deg}"
                        )));
                    }
                }
                continue;
            }
            let mut block = Mat::zeros(space.dim(deg + 1), m.cols());
            for c in 0..m.cols() {
                let coords = express(&self.apply_d(&sub_elem(deg, c)))?;
                for (r, val) in coords
                    .degree_part(deg + 1, space.dim(deg + 1))
                    .into_iter()
                    .enumerate()
                {
                    block.set(r, c, val);
                }
            }
            d.set_block(deg, block);
        }
        let complex = CochainComplex::new(space.clone(), d)?;
        let keys: Vec<BasisKey> = space.basis();
        let mut entries = Vec::new();
        for (i, &a) in keys.iter().enumerate() {
            for &b in keys.iter().skip(i) {
                let img = self.mult(&sub_elem(a.0, a.1), &sub_elem(b.0, b.1));
                if img.is_zero() {
                    continue;
                }
                entries.push((a, b, express(&img)?));
            }
        }
        let sub = CoefficientAlgebra::from_table_unchecked(complex, entries)?;
        let mut incl = LinearMap::zero(space, self.space().clone(), 0);
        for (&deg, m) in sub_basis {
            if m.cols() > 0 && self.dim(deg) > 0 {
                incl.set_block(deg, m.clone());
            }
        }
        let morphism = CoeffMorphism::from_parts(sub.clone(), self.clone(), incl);
        Ok((sub, morphism))
    }
}

/// A morphism of coefficient algebras: degree-0 chain map preserving
/// multiplication.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffMorphism {
    pub source: CoefficientAlgebra,
    pub target: CoefficientAlgebra,
    pub map: LinearMap,
}

impl CoeffMorphism {
    pub fn new(
        source: CoefficientAlgebra,
        target: CoefficientAlgebra,
        map: LinearMap,
    ) -> Result<CoeffMorphism> {
        let m = CoeffMorphism::from_parts(source, target, map);
        let report = m.validate();
        if !report.is_valid() {
            let v = &report.violations[0];
            return Err(Error::InvalidMorphism(format!("{}: {}", v.axiom, v.witness)));
        }
        Ok(m)
    }

    pub fn from_parts(
        source: CoefficientAlgebra,
        target: CoefficientAlgebra,
        map: LinearMap,
    ) -> CoeffMorphism {
        CoeffMorphism { source, target, map }
    }

    pub fn identity(a: &CoefficientAlgebra) -> CoeffMorphism {
        CoeffMorphism::from_parts(a.clone(), a.clone(), LinearMap::identity(a.space()))
    }

    pub fn to_zero(a: &CoefficientAlgebra) -> CoeffMorphism {
        let z = zero_algebra();
        let map = LinearMap::zero(a.space().clone(), z.space().clone(), 0);
        CoeffMorphism::from_parts(a.clone(), z, map)
    }

    pub fn apply(&self, x: &GradedElement) -> GradedElement {
        self.map.apply(x)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.map.degree != 0 {
            report.violations.push(Violation {
                axiom: "degree-0 map".into(),
                witness: format!("degree {}", self.map.degree),
            });
            return report;
        }
        if let Some(deg) = self
            .map
            .chain_map_defect(&self.source.complex.d, &self.target.complex.d)
        {
            report.violations.push(Violation {
                axiom: "chain map".into(),
                witness: format!("source degree {deg}"),
            });
        }
        let basis = self.source.basis();
        for &a in &basis {
            for &b in &basis {
                let xa = self.source.space().basis_element(a.0, a.1);
                let xb = self.source.space().basis_element(b.0, b.1);
                let lhs = self.apply(&self.source.mult_basis(a, b));
                let rhs = self.target.mult(&self.apply(&xa), &self.apply(&xb));
                if lhs != rhs {
                    report.violations.push(Violation {
                        axiom: "multiplicativity".into(),
                        witness: format!("pair (({},{}),({},{}))", a.0, a.1, b.0, b.1),
                    });
                }
            }
        }
        report
    }
}

/// The zero coefficient algebra.
pub fn zero_algebra() -> CoefficientAlgebra {
    CoefficientAlgebra {
        complex: CochainComplex::zero(),
        mult: BTreeMap::new(),
        nilpotency_class: 1,
    }
}

/// The maximal ideal (t)/(t^n) of Q[t]/(t^n): degree-0 basis
/// t, t², …, t^{n−1} with t^i·t^j = t^{i+j} (zero once the exponent
/// reaches n), zero differential, nilpotency class n.
pub fn artinian_ideal(n: usize) -> Result<CoefficientAlgebra> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "artinian ideal needs n >= 2, got {n}"
        )));
    }
    let labels: Vec<String> = (1..n)
        .map(|i| if i == 1 { "t".to_string() } else { format!("t^{i}") })
        .collect();
    let space = GradedSpace::new(BTreeMap::from([(0, labels)]))?;
    let complex = CochainComplex::with_zero_d(space.clone());
    let mut entries = Vec::new();
    for i in 1..n {
        for j in i..n {
            if i + j < n {
                entries.push((
                    (0, i - 1),
                    (0, j - 1),
                    space.basis_element(0, i + j - 1),
                ));
            }
        }
    }
    CoefficientAlgebra::new(complex, entries)
}

/// One square-zero generator in degree −n (for n = 0 this is exactly the
/// dual numbers' ideal, so the Artinian construction is reused verbatim).
pub fn dg_point(n: i32) -> CoefficientAlgebra {
    if n == 0 {
        return artinian_ideal(2).unwrap();
    }
    let space = GradedSpace::new(BTreeMap::from([(-n, vec!["eps".to_string()])])).unwrap();
    let complex = CochainComplex::with_zero_d(space);
    CoefficientAlgebra::new(complex, Vec::new()).unwrap()
}

/// A small extension 0 → I → A → B → 0 in the coefficient category, with
/// A·I = 0.
#[derive(Clone, Debug)]
pub struct SmallExtension {
    pub ideal: CoefficientAlgebra,
    pub total: CoefficientAlgebra,
    pub quotient: CoefficientAlgebra,
    /// I → A
    pub iota: CoeffMorphism,
    /// A → B
    pub alpha: CoeffMorphism,
    /// whether I is acyclic as a complex
    pub acyclic: bool,
}

impl SmallExtension {
    pub fn new(
        ideal: CoefficientAlgebra,
        total: CoefficientAlgebra,
        quotient: CoefficientAlgebra,
        iota: CoeffMorphism,
        alpha: CoeffMorphism,
    ) -> Result<SmallExtension> {
        for r in [iota.validate(), alpha.validate()] {
            if !r.is_valid() {
                return Err(Error::InvalidMorphism(format!(
                    "{}: {}",
                    r.violations[0].axiom, r.violations[0].witness
                )));
            }
        }
        // exactness: iota injective, ker(alpha) = im(iota), alpha surjective
        let mut degs: std::collections::BTreeSet<i32> =
            total.space().degrees().into_iter().collect();
        degs.extend(ideal.space().degrees());
        degs.extend(quotient.space().degrees());
        for &deg in &degs {
            let bi = iota.map.block(deg);
            let ba = alpha.map.block(deg);
            if bi.rank() != ideal.dim(deg) {
                return Err(Error::InvalidCoefficientAlgebra(format!(
                    "extension not exact: inclusion not injective in degree {deg}"
                )));
            }
            if ba.rank() != quotient.dim(deg) {
                return Err(Error::InvalidCoefficientAlgebra(format!(
                    "extension not exact: projection not surjective in degree {deg}"
                )));
            }
            let ker = ba.nullspace();
            if ker.cols() != bi.rank() || !same_column_span(&ker, &bi) {
                return Err(Error::InvalidCoefficientAlgebra(format!(
                    "extension not exact: kernel != image in degree {deg}"
                )));
            }
        }
        // smallness: A·I = 0
        for a in total.basis() {
            let xa = total.space().basis_element(a.0, a.1);
            for i in ideal.basis() {
                let xi = iota.apply(&ideal.space().basis_element(i.0, i.1));
                if !total.mult(&xa, &xi).is_zero() {
                    return Err(Error::InvalidCoefficientAlgebra(format!(
                        "extension not small: A·I != 0 at (({},{}),({},{}))",
                        a.0, a.1, i.0, i.1
                    )));
                }
            }
        }
        let acyclic = ideal.complex.cohomology()?.total_dim() == 0;
        Ok(SmallExtension {
            ideal,
            total,
            quotient,
            iota,
            alpha,
            acyclic,
        })
    }
}

fn same_column_span(a: &Mat, b: &Mat) -> bool {
    if a.rows() != b.rows() {
        return false;
    }
    let ra = a.rank();
    let rb = b.rank();
    ra == rb && a.hstack(b).rank() == ra
}

/// The step extension 0 → (t^{n−1}) → (t)/(tⁿ) → (t)/(t^{n−1}) → 0.
pub fn small_extension_step(n: usize) -> Result<SmallExtension> {
    if n < 3 {
        return Err(Error::OutOfRange(format!(
            "small extension step needs n >= 3, got {n}"
        )));
    }
    let total = artinian_ideal(n)?;
    let quotient = artinian_ideal(n - 1)?;
    // ideal: one generator t^{n-1}, square zero
    let ispace = GradedSpace::new(BTreeMap::from([(0, vec![format!("t^{}", n - 1)])]))?;
    let ideal = CoefficientAlgebra::new(CochainComplex::with_zero_d(ispace.clone()), Vec::new())?;
    let mut iota = LinearMap::zero(ispace, total.space().clone(), 0);
    let mut col = Mat::zeros(n - 1, 1);
    col.set(n - 2, 0, rone());
    iota.set_block(0, col);
    let mut alpha = LinearMap::zero(total.space().clone(), quotient.space().clone(), 0);
    let mut proj = Mat::zeros(n - 2, n - 1);
    for i in 0..n - 2 {
        proj.set(i, i, rone());
    }
    alpha.set_block(0, proj);
    SmallExtension::new(
        ideal.clone(),
        total.clone(),
        quotient.clone(),
        CoeffMorphism::from_parts(ideal, total.clone(), iota),
        CoeffMorphism::from_parts(total, quotient, alpha),
    )
}

/// Product A × B in the coefficient category (componentwise structure),
/// with its projections.
pub fn coeff_product(
    a: &CoefficientAlgebra,
    b: &CoefficientAlgebra,
) -> Result<(CoefficientAlgebra, CoeffMorphism, CoeffMorphism)> {
    let mut labels: BTreeMap<i32, Vec<String>> = BTreeMap::new();
    let mut degs: std::collections::BTreeSet<i32> = a.space().degrees().into_iter().collect();
    degs.extend(b.space().degrees());
    for &deg in &degs {
        let mut names: Vec<String> =
            a.space().labels(deg).iter().map(|l| format!("l.{l}")).collect();
        names.extend(b.space().labels(deg).iter().map(|l| format!("r.{l}")));
        labels.insert(deg, names);
    }
    let space = GradedSpace::new(labels)?;
    let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
    for &deg in &degs {
        let (rows, cols) = (space.dim(deg + 1), space.dim(deg));
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut block = Mat::zeros(rows, cols);
        let ba = a.complex.d.block(deg);
        for r in 0..ba.rows() {
            for c in 0..ba.cols() {
                block.set(r, c, ba.get(r, c).clone());
            }
        }
        let bb = b.complex.d.block(deg);
        let (ro, co) = (a.dim(deg + 1), a.dim(deg));
        for r in 0..bb.rows() {
            for c in 0..bb.cols() {
                block.set(ro + r, co + c, bb.get(r, c).clone());
            }
        }
        d.set_block(deg, block);
    }
    let complex = CochainComplex::new(space.clone(), d)?;
    let embed = |x: &GradedElement, from_b: bool| -> GradedElement {
        let mut out = GradedElement::zero();
        for (&deg, v) in x.coords_map() {
            let mut w = vec![rzero(); space.dim(deg)];
            let off = if from_b { a.dim(deg) } else { 0 };
            for (i, c) in v.iter().enumerate() {
                w[off + i] = c.clone();
            }
            out.set_degree(deg, w);
        }
        out
    };
    let mut entries = Vec::new();
    for (&(ka, kb), v) in a.stored_entries() {
        entries.push((ka, kb, embed(v, false)));
    }
    for (&(ka, kb), v) in b.stored_entries() {
        let ka2 = (ka.0, a.dim(ka.0) + ka.1);
        let kb2 = (kb.0, a.dim(kb.0) + kb.1);
        entries.push((ka2, kb2, embed(v, true)));
    }
    let prod = CoefficientAlgebra::from_table_unchecked(complex, entries)?;
    let mut pa = LinearMap::zero(space.clone(), a.space().clone(), 0);
    let mut pb = LinearMap::zero(space, b.space().clone(), 0);
    for &deg in &degs {
        let (na, nb) = (a.dim(deg), b.dim(deg));
        if na > 0 {
            let mut m = Mat::zeros(na, na + nb);
            for i in 0..na {
                m.set(i, i, rone());
            }
            pa.set_block(deg, m);
        }
        if nb > 0 {
            let mut m = Mat::zeros(nb, na + nb);
            for i in 0..nb {
                m.set(i, na + i, rone());
            }
            pb.set_block(deg, m);
        }
    }
    let proj_a = CoeffMorphism::from_parts(prod.clone(), a.clone(), pa);
    let proj_b = CoeffMorphism::from_parts(prod.clone(), b.clone(), pb);
    Ok((prod, proj_a, proj_b))
}

/// Fiber product A ×_C B of `alpha: A → C` and `beta: B → C`, with its
/// projections. Inputs are re-validated.
pub fn coeff_fiber_product(
    alpha: &CoeffMorphism,
    beta: &CoeffMorphism,
) -> Result<(CoefficientAlgebra, CoeffMorphism, CoeffMorphism)> {
    if alpha.target != beta.target {
        return Err(Error::DimensionMismatch("fiber product targets differ".into()));
    }
    for r in [alpha.validate(), beta.validate()] {
        if !r.is_valid() {
            return Err(Error::InvalidMorphism(format!(
                "{}: {}",
                r.violations[0].axiom, r.violations[0].witness
            )));
        }
    }
    let (prod, pa, pb) = coeff_product(&alpha.source, &beta.source)?;
    let diff = alpha.map.compose(&pa.map).sub(&beta.map.compose(&pb.map));
    let mut sub_basis = BTreeMap::new();
    for deg in prod.space().degrees() {
        sub_basis.insert(deg, diff.block(deg).nullspace());
    }
    let (fp, incl) = prod.subalgebra(&sub_basis, "p")?;
    let proj_a = CoeffMorphism::from_parts(fp.clone(), alpha.source.clone(), pa.map.compose(&incl.map));
    let proj_b = CoeffMorphism::from_parts(fp.clone(), beta.source.clone(), pb.map.compose(&incl.map));
    Ok((fp, proj_a, proj_b))
}

/// The nilpotent DGLA L⊗A with the Koszul sign rules
/// d(x⊗a) = dx⊗a + (−1)^{|x|} x⊗da and
/// [x⊗a, y⊗b] = (−1)^{|a||y|} [x,y]⊗ab.
#[derive(Clone, Debug)]
pub struct TensorDgla {
    pub base: Dgla,
    pub coeff: CoefficientAlgebra,
    pub dgla: Dgla,
    /// tensor degree -> ordered (base basis key, coefficient basis key)
    basis: BTreeMap<i32, Vec<(BasisKey, BasisKey)>>,
}

impl TensorDgla {
    pub fn basis_pairs(&self, i: i32) -> &[(BasisKey, BasisKey)] {
        self.basis.get(&i).map_or(&[], |v| v.as_slice())
    }

    pub fn pair_index(&self, l: BasisKey, a: BasisKey) -> Option<usize> {
        self.basis
            .get(&(l.0 + a.0))?
            .iter()
            .position(|&p| p == (l, a))
    }

    /// Tensor of an element of L with an element of A (bilinear; no sign).
    pub fn tensor_elem(&self, x: &GradedElement, a: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for (&dl, vl) in x.coords_map() {
            for (&da, va) in a.coords_map() {
                let deg = dl + da;
                let n = self.dgla.dim(deg);
                if n == 0 {
                    continue;
                }
                let mut part = out.degree_part(deg, n);
                for (p, cl) in vl.iter().enumerate() {
                    if cl.is_zero() {
                        continue;
                    }
                    for (q, ca) in va.iter().enumerate() {
                        if ca.is_zero() {
                            continue;
                        }
                        let idx = self
                            .pair_index((dl, p), (da, q))
                            .expect("tensor basis pair missing");
                        part[idx] += cl * ca;
                    }
                }
                out.set_degree(deg, part);
            }
        }
        out
    }

    /// Lie-nilpotency class of the underlying DGLA, computed as the length
    /// of the lower central series.
    pub fn lower_central_series_length(&self) -> usize {
        let g = &self.dgla;
        let mut current: BTreeMap<i32, Mat> = g
            .space()
            .degrees()
            .into_iter()
            .map(|d| (d, Mat::identity(g.dim(d))))
            .collect();
        let mut k = 1usize;
        while current.values().any(|m| m.cols() > 0) {
            let mut cols: BTreeMap<i32, Vec<Vec<Rat>>> = BTreeMap::new();
            for a in g.basis() {
                let xa = g.space().basis_element(a.0, a.1);
                for (&deg, m) in &current {
                    for c in 0..m.cols() {
                        let y = GradedElement::from_degree(deg, m.column(c));
                        let br = g.bracket(&xa, &y);
                        for (&pd, v) in br.coords_map() {
                            cols.entry(pd).or_default().push(v.clone());
                        }
                    }
                }
            }
            let mut next = BTreeMap::new();
            for deg in g.space().degrees() {
                let n = g.dim(deg);
                let m = match cols.get(&deg) {
                    Some(cs) => Mat::from_columns(n, cs).column_space_basis(),
                    None => Mat::zeros(n, 0),
                };
                next.insert(deg, m);
            }
            current = next;
            k += 1;
            if k > g.space().total_dim() + 2 {
                break; // not nilpotent; caller's validation will notice
            }
        }
        k
    }
}

/// Builds L⊗A.
pub fn tensor(base: &Dgla, coeff: &CoefficientAlgebra) -> Result<TensorDgla> {
    let mut basis: BTreeMap<i32, Vec<(BasisKey, BasisKey)>> = BTreeMap::new();
    let mut labels: BTreeMap<i32, Vec<String>> = BTreeMap::new();
    for l in base.basis() {
        for a in coeff.basis() {
            let deg = l.0 + a.0;
            basis.entry(deg).or_default().push((l, a));
            labels.entry(deg).or_default().push(format!(
                "{}⊗{}",
                base.space().labels(l.0)[l.1],
                coeff.space().labels(a.0)[a.1]
            ));
        }
    }
    for (deg, entry) in basis.iter_mut() {
        let lab = labels.get_mut(deg).unwrap();
        let mut idx: Vec<usize> = (0..entry.len()).collect();
        idx.sort_by_key(|&k| entry[k]);
        *entry = idx.iter().map(|&k| entry[k]).collect();
        *lab = idx.iter().map(|&k| lab[k].clone()).collect();
    }
    let space = GradedSpace::new(labels)?;
    let mut t = TensorDgla {
        base: base.clone(),
        coeff: coeff.clone(),
        dgla: Dgla::abelian(CochainComplex::with_zero_d(space.clone())),
        basis,
    };
    // differential
    let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
    for i in space.degrees() {
        let n = space.dim(i);
        let m = space.dim(i + 1);
        if n == 0 || m == 0 {
            continue;
        }
        let mut block = Mat::zeros(m, n);
        for (col, &(l, a)) in t.basis_pairs(i).to_vec().iter().enumerate() {
            let xl = base.space().basis_element(l.0, l.1);
            let xa = coeff.space().basis_element(a.0, a.1);
            let img = t
                .tensor_elem(&base.apply_d(&xl), &xa)
                .add(&t.tensor_elem(&xl, &coeff.apply_d(&xa)).scale(&sign_pow(l.0 as i64)));
            for (r, val) in img.degree_part(i + 1, m).into_iter().enumerate() {
                block.set(r, col, val);
            }
        }
        d.set_block(i, block);
    }
    let complex = CochainComplex::new(space.clone(), d)?;
    // bracket: all ordered pairs straight from the sign rule
    let mut entries = Vec::new();
    for i in space.degrees() {
        for (p, &(l1, a1)) in t.basis_pairs(i).to_vec().iter().enumerate() {
            for j in space.degrees() {
                for (q, &(l2, a2)) in t.basis_pairs(j).to_vec().iter().enumerate() {
                    let br = base.bracket_basis(l1, l2);
                    let ab = coeff.mult_basis(a1, a2);
                    if br.is_zero() || ab.is_zero() {
                        continue;
                    }
                    let val = t
                        .tensor_elem(&br, &ab)
                        .scale(&sign_pow((a1.0 * l2.0) as i64));
                    if !val.is_zero() {
                        entries.push(((i, p), (j, q), val));
                    }
                }
            }
        }
    }
    t.dgla = Dgla::from_table_unchecked(complex, entries)?;
    Ok(t)
}

/// The induced morphism χ⊗id : L⊗A → M⊗A of a DGLA morphism.
pub fn tensor_morphism(
    chi: &DglaMorphism,
    src: &TensorDgla,
    dst: &TensorDgla,
) -> Result<DglaMorphism> {
    if src.base != chi.source || dst.base != chi.target || src.coeff != dst.coeff {
        return Err(Error::DimensionMismatch(
            "tensor morphism endpoints do not match".into(),
        ));
    }
    let mut map = LinearMap::zero(
        src.dgla.space().clone(),
        dst.dgla.space().clone(),
        0,
    );
    for i in src.dgla.space().degrees() {
        let n = src.dgla.dim(i);
        let m = dst.dgla.dim(i);
        if n == 0 || m == 0 {
            continue;
        }
        let mut block = Mat::zeros(m, n);
        for (col, &(l, a)) in src.basis_pairs(i).iter().enumerate() {
            let xl = chi.apply(&chi.source.space().basis_element(l.0, l.1));
            let xa = src.coeff.space().basis_element(a.0, a.1);
            let img = dst.tensor_elem(&xl, &xa);
            for (r, val) in img.degree_part(i, m).into_iter().enumerate() {
                block.set(r, col, val);
            }
        }
        map.set_block(i, block);
    }
    Ok(DglaMorphism::from_parts(
        src.dgla.clone(),
        dst.dgla.clone(),
        map,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::uwz;
    use crate::dgla::sl2;

    #[test]
    fn artinian_ideal_basics() {
        assert!(artinian_ideal(1).is_err());
        let a2 = artinian_ideal(2).unwrap();
        assert_eq!(a2.space().total_dim(), 1);
        let t = a2.space().basis_element(0, 0);
        assert!(a2.mult(&t, &t).is_zero());
        assert_eq!(a2.nilpotency_class, 2);

        let a3 = artinian_ideal(3).unwrap();
        let t = a3.space().basis_element(0, 0);
        let t2 = a3.space().basis_element(0, 1);
        assert_eq!(a3.mult(&t, &t), t2);
        assert!(a3.mult(&t, &t2).is_zero());
        assert_eq!(a3.nilpotency_class, 3);

        assert_eq!(artinian_ideal(5).unwrap().nilpotency_class, 5);
    }

    #[test]
    fn dg_point_conventions() {
        assert_eq!(dg_point(0), artinian_ideal(2).unwrap());
        let p = dg_point(1);
        assert_eq!(p.dim(-1), 1);
        assert!(p.is_square_zero());
        // (L ⊗ dg_point(n))^1 has dimension dim L^{1+n}
        let g = uwz();
        for n in 0..3 {
            let t = tensor(&g, &dg_point(n)).unwrap();
            assert_eq!(t.dgla.dim(1), g.dim(1 + n), "n = {n}");
        }
    }

    #[test]
    fn tensor_signs_and_validity() {
        let g = uwz();
        let a3 = artinian_ideal(3).unwrap();
        let t = tensor(&g, &a3).unwrap();
        assert!(t.dgla.validate().is_valid());
        // [u⊗t, w⊗t] = z⊗t^2
        let u = g.space().basis_element(0, 0);
        let w = g.space().basis_element(1, 0);
        let z = g.space().basis_element(1, 1);
        let tt = a3.space().basis_element(0, 0);
        let t2 = a3.space().basis_element(0, 1);
        let ut = t.tensor_elem(&u, &tt);
        let wt = t.tensor_elem(&w, &tt);
        assert_eq!(t.dgla.bracket(&ut, &wt), t.tensor_elem(&z, &t2));
        // d(u⊗t) = w⊗t
        assert_eq!(t.dgla.apply_d(&ut), wt);
    }

    #[test]
    fn tensor_with_square_zero_is_abelian() {
        let t = tensor(&sl2(), &artinian_ideal(2).unwrap()).unwrap();
        assert!(t.dgla.is_abelian());
        let t2 = tensor(&sl2(), &dg_point(1)).unwrap();
        assert!(t2.dgla.is_abelian());
    }

    #[test]
    fn tensor_nilpotency_certified() {
        let t = tensor(&sl2(), &artinian_ideal(4).unwrap()).unwrap();
        assert!(t.lower_central_series_length() <= 4 + 1);
        assert!(t.dgla.validate().is_valid());
    }

    #[test]
    fn small_extension_steps() {
        assert!(small_extension_step(2).is_err());
        let e3 = small_extension_step(3).unwrap();
        assert_eq!(e3.ideal.space().total_dim(), 1);
        assert!(!e3.acyclic);
        let e5 = small_extension_step(5).unwrap();
        assert_eq!(e5.ideal.space().total_dim(), 1);
        assert!(!e5.acyclic);
    }

    #[test]
    fn products_and_fiber_products() {
        let a = artinian_ideal(3).unwrap();
        let b = artinian_ideal(2).unwrap();
        let (p, pa, pb) = coeff_product(&a, &b).unwrap();
        assert!(p.validate().is_valid());
        assert!(pa.validate().is_valid());
        assert!(pb.validate().is_valid());
        assert_eq!(p.space().total_dim(), 3);
        // A x_A A via two identities: diagonal, dims of A
        let id1 = CoeffMorphism::identity(&a);
        let (fp, q1, q2) = coeff_fiber_product(&id1, &id1).unwrap();
        assert_eq!(fp.space().total_dim(), a.space().total_dim());
        assert_eq!(
            q1.map.compose(&LinearMap::identity(fp.space())),
            q2.map
        );
        assert!(fp.validate().is_valid());
        // A x_0 B = A x B
        let za = CoeffMorphism::to_zero(&a);
        let zb = CoeffMorphism::to_zero(&b);
        let (fp2, _, _) = coeff_fiber_product(&za, &zb).unwrap();
        assert_eq!(fp2.space().total_dim(), 3);
    }

    #[test]
    fn tensor_distributes_over_product() {
        let g = uwz();
        let a = artinian_ideal(3).unwrap();
        let b = artinian_ideal(2).unwrap();
        let (p, _, _) = coeff_product(&a, &b).unwrap();
        let tp = tensor(&g, &p).unwrap();
        let ta = tensor(&g, &a).unwrap();
        let tb = tensor(&g, &b).unwrap();
        for deg in tp.dgla.space().degrees() {
            assert_eq!(tp.dgla.dim(deg), ta.dgla.dim(deg) + tb.dgla.dim(deg));
        }
    }

    #[test]
    fn tensor_morphism_is_valid() {
        let incl = crate::corpus::uwz_inclusion();
        let a = artinian_ideal(3).unwrap();
        let src = tensor(&incl.source, &a).unwrap();
        let dst = tensor(&incl.target, &a).unwrap();
        let m = tensor_morphism(&incl, &src, &dst).unwrap();
        assert!(m.validate().is_valid());
    }
}
