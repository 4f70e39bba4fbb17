//! DGLAs presented by structure constants, axiom validation, morphisms,
//! kernels, sub- and quotient structures, and the Hom*(V,V) DGLA.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::complex::{CochainComplex, HomComplex};
use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedSpace, LinearMap};
use crate::matrix::Mat;
use crate::rational::{rat, rone, sign_pow, Rat};

pub type BasisKey = (i32, usize);

fn odd(deg: i32) -> bool {
    deg.rem_euclid(2) == 1
}

/// A differential graded Lie algebra over Q, presented by structure
/// constants on a finite basis.
///
/// The table holds every ordered basis pair. Constructors accept entries
/// in either orientation and complete missing mirrors by graded
/// antisymmetry, so consistent input never stores a contradiction; the
/// raw form exists so that `validate` can detect antisymmetry violations
/// in deliberately corrupted tables.
#[derive(Clone, Debug, PartialEq)]
pub struct Dgla {
    pub complex: CochainComplex,
    bracket: BTreeMap<(BasisKey, BasisKey), GradedElement>,
}

/// One violated axiom instance.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize, PartialEq)]
pub struct Violation {
    pub axiom: String,
    pub witness: String,
}

/// Validation outcome; empty iff valid.
#[derive(Clone, Debug, Default, serde::Serialize, serde::Deserialize, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, axiom: &str, witness: String) {
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            witness,
        });
    }
}

impl Dgla {
    /// Builds and validates eagerly; fails fast with a precise witness.
    pub fn new(
        complex: CochainComplex,
        entries: Vec<(BasisKey, BasisKey, GradedElement)>,
    ) -> Result<Dgla> {
        let g = Dgla::from_table_unchecked(complex, entries)?;
        let report = g.validate();
        if !report.is_valid() {
            let v = &report.violations[0];
            return Err(Error::InvalidDgla(format!("{}: {}", v.axiom, v.witness)));
        }
        Ok(g)
    }

    /// Builds without axiom validation (shape checks only). Entries may be
    /// given in either orientation; missing mirrors are filled in by graded
    /// antisymmetry. Intended for mutation testing against `validate`.
    pub fn from_table_unchecked(
        complex: CochainComplex,
        entries: Vec<(BasisKey, BasisKey, GradedElement)>,
    ) -> Result<Dgla> {
        let mut bracket: BTreeMap<(BasisKey, BasisKey), GradedElement> = BTreeMap::new();
        for (a, b, val) in entries {
            if a.1 >= complex.dim(a.0) || b.1 >= complex.dim(b.0) {
                return Err(Error::DimensionMismatch(format!(
                    "bracket entry references missing basis element ({},{}) or ({},{})",
                    a.0, a.1, b.0, b.1
                )));
            }
            if val.is_zero() {
                continue;
            }
            val.check_in(&complex.space)?;
            if val.homogeneous_degree() != Some(a.0 + b.0) {
                return Err(Error::DimensionMismatch(format!(
                    "bracket of degrees ({},{}) must be homogeneous of degree {}",
                    a.0,
                    b.0,
                    a.0 + b.0
                )));
            }
            match bracket.get(&(a, b)) {
                None => {
                    bracket.insert((a, b), val);
                }
                Some(old) if *old == val => {}
                Some(_) => {
                    return Err(Error::InvalidDgla(format!(
                        "conflicting duplicate bracket entry for (({},{}),({},{}))",
                        a.0, a.1, b.0, b.1
                    )));
                }
            }
        }
        // complete missing mirrors by antisymmetry
        let keys: Vec<(BasisKey, BasisKey)> = bracket.keys().copied().collect();
        for (a, b) in keys {
            if a != b && !bracket.contains_key(&(b, a)) {
                let mirror = bracket[&(a, b)].scale(&-sign_pow((a.0 * b.0) as i64));
                bracket.insert((b, a), mirror);
            }
        }
        bracket.retain(|_, v| !v.is_zero());
        Ok(Dgla { complex, bracket })
    }

    /// Builds from a fully raw ordered-pair table with no mirror
    /// completion; for mutation testing only.
    pub fn from_raw_unchecked(
        complex: CochainComplex,
        bracket: BTreeMap<(BasisKey, BasisKey), GradedElement>,
    ) -> Dgla {
        let mut bracket = bracket;
        bracket.retain(|_, v| !v.is_zero());
        Dgla { complex, bracket }
    }

    /// Abelian DGLA on a complex.
    pub fn abelian(complex: CochainComplex) -> Dgla {
        Dgla {
            complex,
            bracket: BTreeMap::new(),
        }
    }

    pub fn zero() -> Dgla {
        Dgla::abelian(CochainComplex::zero())
    }

    pub fn space(&self) -> &GradedSpace {
        &self.complex.space
    }

    pub fn d(&self) -> &LinearMap {
        &self.complex.d
    }

    pub fn basis(&self) -> Vec<BasisKey> {
        self.space().basis()
    }

    pub fn stored_entries(&self) -> &BTreeMap<(BasisKey, BasisKey), GradedElement> {
        &self.bracket
    }

    /// Bracket of two basis elements (raw table lookup).
    pub fn bracket_basis(&self, a: BasisKey, b: BasisKey) -> GradedElement {
        self.bracket
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(GradedElement::zero)
    }

    /// Bilinear bracket of arbitrary elements.
    pub fn bracket(&self, x: &GradedElement, y: &GradedElement) -> GradedElement {
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
                        let b = self.bracket_basis((dx, p), (dy, q));
                        if !b.is_zero() {
                            out = out.add(&b.scale(&(cx * cy)));
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

    /// Full axiom validation: complex well-formedness, graded Jacobi and
    /// graded Leibniz on all basis triples/pairs. The report lists every
    /// violated instance.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if let Err(e) = self.complex.check_square_zero() {
            report.push("square-zero differential", e.to_string());
        }
        let basis = self.basis();
        // antisymmetry: [x,y] + (-1)^{|x||y|} [y,x] = 0; for even-degree
        // diagonals this forces [x,x] = 0
        for (i, &a) in basis.iter().enumerate() {
            for &b in basis.iter().skip(i) {
                let sum = self
                    .bracket_basis(a, b)
                    .add(&self.bracket_basis(b, a).scale(&sign_pow((a.0 * b.0) as i64)));
                if !sum.is_zero() {
                    report.push(
                        "graded antisymmetry",
                        format!("pair (({},{}),({},{}))", a.0, a.1, b.0, b.1),
                    );
                }
            }
        }
        // Leibniz: d[x,y] = [dx,y] + (-1)^{|x|} [x,dy]
        for &a in &basis {
            for &b in &basis {
                let xa = self.space().basis_element(a.0, a.1);
                let xb = self.space().basis_element(b.0, b.1);
                let lhs = self.apply_d(&self.bracket_basis(a, b));
                let rhs = self
                    .bracket(&self.apply_d(&xa), &xb)
                    .add(&self.bracket(&xa, &self.apply_d(&xb)).scale(&sign_pow(a.0 as i64)));
                if lhs != rhs {
                    report.push(
                        "graded Leibniz",
                        format!("pair (({},{}),({},{}))", a.0, a.1, b.0, b.1),
                    );
                }
            }
        }
        // Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        for &a in &basis {
            for &b in &basis {
                for &c in &basis {
                    let xa = self.space().basis_element(a.0, a.1);
                    let xb = self.space().basis_element(b.0, b.1);
                    let xc = self.space().basis_element(c.0, c.1);
                    let lhs = self.bracket(&xa, &self.bracket(&xb, &xc));
                    let rhs = self
                        .bracket(&self.bracket(&xa, &xb), &xc)
                        .add(&self.bracket(&xb, &self.bracket(&xa, &xc)).scale(&sign_pow((a.0 * b.0) as i64)));
                    if lhs != rhs {
                        let diff = lhs.sub(&rhs);
                        report.push(
                            "graded Jacobi",
                            format!(
                                "triple (({},{}),({},{}),({},{})), residual support {:?}",
                                a.0, a.1, b.0, b.1, c.0, c.1,
                                diff.support()
                            ),
                        );
                    }
                }
            }
        }
        report
    }

    pub fn dim(&self, deg: i32) -> usize {
        self.complex.dim(deg)
    }

    /// Whether the bracket vanishes identically.
    pub fn is_abelian(&self) -> bool {
        self.bracket.values().all(GradedElement::is_zero)
    }

    /// The DGLA on a subspace given by per-degree column bases; checks
    /// closure under the differential and the bracket. Returns the sub-DGLA
    /// on a fresh basis together with the inclusion morphism.
    pub fn subalgebra(&self, sub_basis: &BTreeMap<i32, Mat>, prefix: &str) -> Result<(Dgla, DglaMorphism)> {
        // fresh space
        let mut dims = Vec::new();
        for (&deg, m) in sub_basis {
            assert_eq!(m.rows(), self.dim(deg));
            dims.push((deg, m.cols()));
        }
        let space = GradedSpace::with_dims(&dims, prefix);
        let sub_elem = |deg: i32, col: usize| -> GradedElement {
            GradedElement::from_degree(deg, sub_basis[&deg].column(col))
        };
        // express an ambient element in the sub-basis
        let express = |x: &GradedElement| -> Result<GradedElement> {
            let mut out = GradedElement::zero();
            for (&deg, v) in x.coords_map() {
                let m = sub_basis.get(&deg).ok_or(Error::DimensionMismatch(format!(
                    "subspace not closed: hit degree {deg} with no sub-basis"
                )))?;
                let coords = m.solve(v).map_err(|_| {
                    Error::DimensionMismatch(format!("subspace not closed in degree {deg}"))
                })?;
                out.set_degree(deg, coords);
            }
            Ok(out)
        };
        // differential
        let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
        for (&deg, m) in sub_basis {
            if space.dim(deg + 1) == 0 {
                let img_zero = (0..m.cols()).all(|c| self.apply_d(&sub_elem(deg, c)).is_zero());
                if !img_zero {
                    return Err(Error::DimensionMismatch(format!(
                        "subspace not closed under d at degree {deg}"
                    )));
                }
                continue;
            }
            let mut block = Mat::zeros(space.dim(deg + 1), m.cols());
            for c in 0..m.cols() {
                let img = self.apply_d(&sub_elem(deg, c));
                let coords = express(&img)?;
                for (r, val) in coords.degree_part(deg + 1, space.dim(deg + 1)).into_iter().enumerate() {
                    block.set(r, c, val);
                }
            }
            d.set_block(deg, block);
        }
        let complex = CochainComplex::new(space.clone(), d)?;
        // bracket table
        let keys: Vec<BasisKey> = space.basis();
        let mut entries = Vec::new();
        for (i, &a) in keys.iter().enumerate() {
            for &b in keys.iter().skip(i) {
                if a == b && !odd(a.0) {
                    continue;
                }
                let img = self.bracket(&sub_elem(a.0, a.1), &sub_elem(b.0, b.1));
                if img.is_zero() {
                    continue;
                }
                entries.push((a, b, express(&img)?));
            }
        }
        let sub = Dgla::from_table_unchecked(complex, entries)?;
        // inclusion
        let mut incl = LinearMap::zero(space, self.space().clone(), 0);
        for (&deg, m) in sub_basis {
            if m.cols() > 0 && self.dim(deg) > 0 {
                incl.set_block(deg, m.clone());
            }
        }
        let inclusion = DglaMorphism::from_parts(sub.clone(), self.clone(), incl);
        Ok((sub, inclusion))
    }
}

/// A morphism of DGLAs: a degree-0 linear map commuting with differentials
/// and preserving brackets.
#[derive(Clone, Debug, PartialEq)]
pub struct DglaMorphism {
    pub source: Dgla,
    pub target: Dgla,
    pub map: LinearMap,
}

impl DglaMorphism {
    /// Builds and validates eagerly.
    pub fn new(source: Dgla, target: Dgla, map: LinearMap) -> Result<DglaMorphism> {
        let m = DglaMorphism::from_parts(source, target, map);
        let report = m.validate();
        if !report.is_valid() {
            let v = &report.violations[0];
            return Err(Error::InvalidMorphism(format!("{}: {}", v.axiom, v.witness)));
        }
        Ok(m)
    }

    /// Builds without validation; intended for mutation testing.
    pub fn from_parts(source: Dgla, target: Dgla, map: LinearMap) -> DglaMorphism {
        DglaMorphism { source, target, map }
    }

    pub fn identity(g: &Dgla) -> DglaMorphism {
        DglaMorphism::from_parts(g.clone(), g.clone(), LinearMap::identity(g.space()))
    }

    pub fn zero_to(g: &Dgla) -> DglaMorphism {
        let z = Dgla::zero();
        let map = LinearMap::zero(z.space().clone(), g.space().clone(), 0);
        DglaMorphism::from_parts(z, g.clone(), map)
    }

    pub fn to_zero(g: &Dgla) -> DglaMorphism {
        let z = Dgla::zero();
        let map = LinearMap::zero(g.space().clone(), z.space().clone(), 0);
        DglaMorphism::from_parts(g.clone(), z, map)
    }

    pub fn zero_map(source: &Dgla, target: &Dgla) -> DglaMorphism {
        let map = LinearMap::zero(source.space().clone(), target.space().clone(), 0);
        DglaMorphism::from_parts(source.clone(), target.clone(), map)
    }

    pub fn apply(&self, x: &GradedElement) -> GradedElement {
        self.map.apply(x)
    }

    /// Chain-map and bracket-preservation checks on all basis pairs.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.map.degree != 0 {
            report.push("degree-0 map", format!("degree {}", self.map.degree));
            return report;
        }
        if let Some(deg) = self.map.chain_map_defect(self.source.d(), self.target.d()) {
            report.push("chain map", format!("source degree {deg}"));
        }
        let basis = self.source.basis();
        for &a in &basis {
            for &b in &basis {
                let xa = self.source.space().basis_element(a.0, a.1);
                let xb = self.source.space().basis_element(b.0, b.1);
                let lhs = self.apply(&self.source.bracket_basis(a, b));
                let rhs = self.target.bracket(&self.apply(&xa), &self.apply(&xb));
                if lhs != rhs {
                    report.push(
                        "bracket preservation",
                        format!("pair (({},{}),({},{}))", a.0, a.1, b.0, b.1),
                    );
                }
            }
        }
        report
    }

    pub fn is_injective(&self) -> Result<()> {
        for deg in self.source.space().degrees() {
            let b = self.map.block(deg);
            if b.rank() < self.source.dim(deg) {
                return Err(Error::NotInjective { degree: deg });
            }
        }
        Ok(())
    }

    /// Kernel sub-DGLA with its inclusion into the source.
    pub fn kernel(&self) -> Result<(Dgla, DglaMorphism)> {
        let mut sub_basis = BTreeMap::new();
        for deg in self.source.space().degrees() {
            let ns = self.map.block(deg).nullspace();
            sub_basis.insert(deg, ns);
        }
        self.source.subalgebra(&sub_basis, "k")
    }
}

/// A commutative square of DGLA morphisms
/// `f: L -> H`, `f2: M -> I`, `chi: L -> M`, `eta: H -> I`
/// with `eta ∘ f = f2 ∘ chi`.
#[derive(Clone, Debug)]
pub struct CommutativeSquare {
    pub chi: DglaMorphism,
    pub eta: DglaMorphism,
    pub f: DglaMorphism,
    pub f2: DglaMorphism,
}

impl CommutativeSquare {
    pub fn new(
        chi: DglaMorphism,
        eta: DglaMorphism,
        f: DglaMorphism,
        f2: DglaMorphism,
    ) -> Result<CommutativeSquare> {
        if f.source != chi.source
            || f.target != eta.source
            || f2.source != chi.target
            || f2.target != eta.target
        {
            return Err(Error::DimensionMismatch(
                "square corners do not line up".into(),
            ));
        }
        let lhs = eta.map.compose(&f.map);
        let rhs = f2.map.compose(&chi.map);
        let diff = lhs.sub(&rhs);
        if let Some(&deg) = diff.blocks_map().keys().next() {
            return Err(Error::SquareNotCommuting { degree: deg });
        }
        Ok(CommutativeSquare { chi, eta, f, f2 })
    }
}

/// The DGLA `Hom*(V,V)` with bracket `[f,g] = f∘g - (-1)^{|f||g|} g∘f`.
#[derive(Clone, Debug)]
pub struct HomDgla {
    pub hom: HomComplex,
    pub dgla: Dgla,
}

/// Builds the full endomorphism DGLA of a complex.
pub fn hom_dgla(v: &CochainComplex) -> Result<HomDgla> {
    build_hom_dgla(v, i32::MIN)
}

/// Builds `Hom^+(V) = ⊕_{i>=0} Hom^i(V,V)`, the nonnegative part.
pub fn hom_dgla_plus(v: &CochainComplex) -> Result<HomDgla> {
    build_hom_dgla(v, 0)
}

fn build_hom_dgla(v: &CochainComplex, min_degree: i32) -> Result<HomDgla> {
    let full = HomComplex::new(v, v)?;
    // restrict the underlying space to degrees >= min_degree
    let mut labels = BTreeMap::new();
    for i in full.degrees() {
        if i >= min_degree {
            labels.insert(i, full.complex.space.labels(i).to_vec());
        }
    }
    let space = GradedSpace::new(labels)?;
    let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
    for i in space.degrees() {
        if space.dim(i + 1) > 0 {
            d.set_block(i, full.complex.d.block(i));
        }
    }
    let complex = CochainComplex::new(space.clone(), d)?;
    let mut entries = Vec::new();
    let keys = space.basis();
    for (idx, &a) in keys.iter().enumerate() {
        for &b in keys.iter().skip(idx) {
            if a == b && !odd(a.0) {
                continue;
            }
            let fa = full.to_linear_map(a.0, &unit(space.dim(a.0), a.1));
            let fb = full.to_linear_map(b.0, &unit(space.dim(b.0), b.1));
            let fg = fa.compose(&fb);
            let gf = fb.compose(&fa).scale(&sign_pow((a.0 * b.0) as i64));
            let br = fg.sub(&gf);
            if br.is_zero() {
                continue;
            }
            let coords = full.coords_of_map(a.0 + b.0, &br);
            let val = GradedElement::from_degree(a.0 + b.0, coords);
            if space.dim(a.0 + b.0) != full.dim(a.0 + b.0) {
                return Err(Error::InvalidDgla(
                    "Hom^+ bracket left the nonnegative part".into(),
                ));
            }
            entries.push((a, b, val));
        }
    }
    let dgla = Dgla::from_table_unchecked(complex, entries)?;
    Ok(HomDgla { hom: full, dgla })
}

fn unit(n: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![crate::rational::rzero(); n];
    v[k] = rone();
    v
}

/// Direct product of two DGLAs with its projections.
pub fn product(a: &Dgla, b: &Dgla) -> Result<(Dgla, DglaMorphism, DglaMorphism)> {
    let mut labels: BTreeMap<i32, Vec<String>> = BTreeMap::new();
    let mut degs: std::collections::BTreeSet<i32> = a.space().degrees().into_iter().collect();
    degs.extend(b.space().degrees());
    for &deg in &degs {
        let mut names: Vec<String> = a.space().labels(deg).iter().map(|l| format!("l.{l}")).collect();
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
        let ba = a.d().block(deg);
        for r in 0..ba.rows() {
            for c in 0..ba.cols() {
                block.set(r, c, ba.get(r, c).clone());
            }
        }
        let bb = b.d().block(deg);
        let (ro, co) = (a.dim(deg + 1), a.dim(deg));
        for r in 0..bb.rows() {
            for c in 0..bb.cols() {
                block.set(ro + r, co + c, bb.get(r, c).clone());
            }
        }
        d.set_block(deg, block);
    }
    let complex = CochainComplex::new(space.clone(), d)?;
    // embed an element of a factor into the product
    let embed = |x: &GradedElement, from_b: bool| -> GradedElement {
        let mut out = GradedElement::zero();
        for (&deg, v) in x.coords_map() {
            let mut w = vec![crate::rational::rzero(); space.dim(deg)];
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
    let prod = Dgla::from_table_unchecked(complex, entries)?;
    let mut pa = LinearMap::zero(space.clone(), a.space().clone(), 0);
    let mut pb = LinearMap::zero(space.clone(), b.space().clone(), 0);
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
    let proj_a = DglaMorphism::from_parts(prod.clone(), a.clone(), pa);
    let proj_b = DglaMorphism::from_parts(prod.clone(), b.clone(), pb);
    Ok((prod, proj_a, proj_b))
}

/// Fiber product of `f: A -> C` and `g: B -> C`: the sub-DGLA of A x B
/// where both images agree, with its two projections.
pub fn fiber_product(
    f: &DglaMorphism,
    g: &DglaMorphism,
) -> Result<(Dgla, DglaMorphism, DglaMorphism)> {
    if f.target != g.target {
        return Err(Error::DimensionMismatch(
            "fiber product targets differ".into(),
        ));
    }
    let (prod, pa, pb) = product(&f.source, &g.source)?;
    let diff = f.map.compose(&pa.map).sub(&g.map.compose(&pb.map));
    let mut sub_basis = BTreeMap::new();
    for deg in prod.space().degrees() {
        sub_basis.insert(deg, diff.block(deg).nullspace());
    }
    let (fp, incl) = prod.subalgebra(&sub_basis, "p")?;
    let proj_a = DglaMorphism::from_parts(fp.clone(), f.source.clone(), pa.map.compose(&incl.map));
    let proj_b = DglaMorphism::from_parts(fp.clone(), g.source.clone(), pb.map.compose(&incl.map));
    Ok((fp, proj_a, proj_b))
}

/// sl2 in degree 0: basis e, f, h with [h,e]=2e, [h,f]=-2f, [e,f]=h.
pub fn sl2() -> Dgla {
    let space = GradedSpace::new(BTreeMap::from([(
        0,
        vec!["e".to_string(), "f".to_string(), "h".to_string()],
    )]))
    .unwrap();
    let complex = CochainComplex::with_zero_d(space.clone());
    let elem = |idx: usize, c: Rat| {
        let mut v = vec![crate::rational::rzero(); 3];
        v[idx] = c;
        GradedElement::from_degree(0, v)
    };
    let entries = vec![
        ((0, 0), (0, 1), elem(2, rone())),          // [e,f] = h
        ((0, 0), (0, 2), elem(0, rat(-2, 1))),      // [e,h] = -2e
        ((0, 1), (0, 2), elem(1, rat(2, 1))),       // [f,h] = 2f
    ];
    Dgla::new(complex, entries).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rint, rzero};

    #[test]
    fn abelian_is_valid() {
        let c = CochainComplex::with_zero_d(GradedSpace::with_dims(&[(0, 2), (1, 3)], "a"));
        assert!(Dgla::abelian(c).validate().is_valid());
    }

    #[test]
    fn sl2_valid_and_mutation_rejected() {
        let g = sl2();
        assert!(g.validate().is_valid());
        // flip [e,h] = -2e to [e,h] = 2e: Jacobi breaks
        let mut entries: Vec<_> = g
            .stored_entries()
            .iter()
            .map(|(&(a, b), v)| (a, b, v.clone()))
            .collect();
        for (a, b, v) in entries.iter_mut() {
            if (*a, *b) == ((0, 0), (0, 2)) {
                *v = v.scale(&rint(-1));
            }
        }
        let bad = Dgla::from_table_unchecked(g.complex.clone(), entries).unwrap();
        let report = bad.validate();
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.axiom == "graded Jacobi"));
    }

    #[test]
    fn hom_dgla_of_point_is_gl1() {
        let v = CochainComplex::with_zero_d(GradedSpace::with_dims(&[(0, 1)], "v"));
        let h = hom_dgla(&v).unwrap();
        assert_eq!(h.dgla.dim(0), 1);
        assert!(h.dgla.validate().is_valid());
        assert!(h.dgla.is_abelian()); // gl(1) is abelian
    }

    #[test]
    fn hom_dgla_three_step() {
        let v = CochainComplex::with_zero_d(GradedSpace::with_dims(&[(0, 1), (1, 1), (2, 1)], "v"));
        let h = hom_dgla(&v).unwrap();
        assert_eq!(h.dgla.dim(1), 2);
        assert_eq!(h.dgla.dim(2), 1);
        assert!(h.dgla.validate().is_valid());
        // [x,x] = 2 x∘x for odd x: take x = phi + psi
        let phi = h.dgla.space().basis_element(1, 0);
        let psi = h.dgla.space().basis_element(1, 1);
        let x = phi.add(&psi);
        let sq = h.dgla.bracket(&x, &x);
        assert!(!sq.is_zero());
        // compare against 2 x∘x computed through linear maps
        let fx = h.hom.to_linear_map(1, &x.degree_part(1, 2));
        let xx = fx.compose(&fx);
        let expect = GradedElement::from_degree(2, h.hom.coords_of_map(2, &xx)).scale(&rint(2));
        assert_eq!(sq, expect);
    }

    #[test]
    fn hom_dgla_delta_is_bracket_with_d() {
        // dims {0:1,1:1}, d = [1]
        let space = GradedSpace::with_dims(&[(0, 1), (1, 1)], "v");
        let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
        d.set_block(0, Mat::from_int_rows(&[&[1]]));
        let v = CochainComplex::new(space, d).unwrap();
        let h = hom_dgla(&v).unwrap();
        assert!(h.dgla.validate().is_valid());
        // delta(f) = [d, f] for every basis f
        let d_elem = h.hom.element_of_map(&v.d);
        for (deg, idx) in h.dgla.basis() {
            let f = h.dgla.space().basis_element(deg, idx);
            let lhs = h.dgla.apply_d(&f);
            let rhs = h.dgla.bracket(&d_elem, &f);
            assert_eq!(lhs, rhs, "delta(f) != [d,f] at ({deg},{idx})");
        }
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let g = sl2();
        let id = DglaMorphism::identity(&g);
        let (k, _) = id.kernel().unwrap();
        assert_eq!(k.space().total_dim(), 0);
        let z = DglaMorphism::new(g.clone(), Dgla::zero(), LinearMap::zero(g.space().clone(), GradedSpace::zero(), 0)).unwrap();
        let (k2, incl) = z.kernel().unwrap();
        assert_eq!(k2.space().total_dim(), 3);
        assert!(incl.validate().is_valid());
        assert!(k2.validate().is_valid());
    }

    #[test]
    fn morphism_validation_catches_non_bracket_map() {
        let g = sl2();
        // map e -> f, f -> e, h -> h is not a Lie morphism
        let mut m = LinearMap::zero(g.space().clone(), g.space().clone(), 0);
        m.set_block(0, Mat::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]));
        let bad = DglaMorphism::from_parts(g.clone(), g.clone(), m);
        let report = bad.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == "bracket preservation"));
        let _ = rzero();
    }
}
