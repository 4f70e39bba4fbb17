//! Deformations of the differential of a complex: MC elements of
//! Hom⁺(V,V) ⊗ (t)/(tⁿ), deformed cohomology as a module over ℚ[t]/(tⁿ)
//! with its cyclic decomposition, the gauge-triviality decision for
//! bounded complexes, the truncation morphism T_i, and the formality
//! zig-zag through the sub-DGLA of maps preserving a subcomplex.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::coeff::{artinian_ideal, tensor, TensorDgla};
use crate::complex::{quasi_iso_check, CochainComplex};
use crate::dgla::{hom_dgla, hom_dgla_plus, Dgla, DglaMorphism, HomDgla};
use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedSpace, LinearMap};
use crate::matrix::{Mat, Subquotient};
use crate::mc::{bch, gauge_action, mc_residual};
use crate::rational::{rone, rzero, Rat};

/// A deformation of the differential of V over A = ℚ[t]/(tⁿ): an MC
/// element x of Hom⁺(V,V) ⊗ (t)/(tⁿ), i.e. (d + x)² = 0 exactly.
#[derive(Clone, Debug)]
pub struct DeformedComplex {
    pub base: CochainComplex,
    pub n: usize,
    pub hom: HomDgla,
    pub tensor: TensorDgla,
    pub x: GradedElement,
}

impl DeformedComplex {
    pub fn new(base: &CochainComplex, n: usize, x: GradedElement) -> Result<DeformedComplex> {
        let hom = hom_dgla_plus(base)?;
        let ideal = artinian_ideal(n)?;
        let tensor = tensor(&hom.dgla, &ideal)?;
        let dc = DeformedComplex {
            base: base.clone(),
            n,
            hom,
            tensor,
            x,
        };
        if !mc_residual(&dc.tensor.dgla, &dc.x)?.is_zero() {
            return Err(Error::NotMaurerCartan);
        }
        Ok(dc)
    }

    /// The element Σ f_k ⊗ t^{k} from (power, map) terms; powers must be
    /// in 1..n and each map must have degree 1.
    pub fn element_from_terms(
        base: &CochainComplex,
        n: usize,
        terms: &[(usize, LinearMap)],
    ) -> Result<GradedElement> {
        let hom = hom_dgla_plus(base)?;
        let ideal = artinian_ideal(n)?;
        let t = tensor(&hom.dgla, &ideal)?;
        let mut out = GradedElement::zero();
        for (k, f) in terms {
            if *k < 1 || *k >= n {
                return Err(Error::OutOfRange(format!("t-power {k} outside 1..{n}")));
            }
            let fe = hom.hom.element_of_map(f);
            let tk = ideal.space().basis_element(0, k - 1);
            out = out.add(&t.tensor_elem(&fe, &tk));
        }
        Ok(out)
    }

    /// The ℚ-matrix of d + x on V ⊗ A from degree i to i + 1, with basis
    /// v_p ⊗ t^a indexed as a·dim + p (a ∈ 0..n, a = 0 the unit).
    pub fn total_differential(&self, i: i32) -> Mat {
        let n = self.n;
        let src = self.base.dim(i);
        let dst = self.base.dim(i + 1);
        let mut out = Mat::zeros(dst * n, src * n);
        let d = self.base.d.block(i);
        for a in 0..n {
            for p in 0..src {
                for r in 0..dst {
                    out.set(a * dst + r, a * src + p, d.get(r, p).clone());
                }
            }
        }
        // x-action: each tensor pair (hom basis element, t^m)
        for (&deg, coords) in self.x.coords_map() {
            for (idx, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (hk, ak) = self.tensor.basis_pairs(deg)[idx];
                let m = ak.1 + 1; // t-power of the coefficient basis vector
                let triple = self.hom.hom.basis_triples(hk.0)[hk.1];
                let (j, p, q) = triple;
                if j != i {
                    continue;
                }
                for a in 0..n {
                    if a + m >= n {
                        continue;
                    }
                    let cur = out.get((a + m) * dst + q, a * src + p).clone();
                    out.set((a + m) * dst + q, a * src + p, cur + c);
                }
            }
        }
        out
    }

    /// The t-multiplication matrix on V^i ⊗ A.
    fn t_action(&self, i: i32) -> Mat {
        let n = self.n;
        let dim = self.base.dim(i);
        let mut t = Mat::zeros(dim * n, dim * n);
        for a in 0..n - 1 {
            for p in 0..dim {
                t.set((a + 1) * dim + p, a * dim + p, rone());
            }
        }
        t
    }
}

/// A finitely generated module over ℚ[t]/(tⁿ), presented by a nilpotent
/// t-action matrix, with its certified cyclic decomposition
/// ⊕ ℚ[t]/(t^{e}).
#[derive(Clone, Debug)]
pub struct ArtinModule {
    pub n: usize,
    pub t: Mat,
    /// cyclic exponents, descending; Σ = ℚ-dimension
    pub exponents: Vec<usize>,
}

impl ArtinModule {
    pub fn new(n: usize, t: Mat) -> Result<ArtinModule> {
        if t.rows() != t.cols() {
            return Err(Error::DimensionMismatch("t-action must be square".into()));
        }
        if !t.pow(n).is_zero() {
            return Err(Error::OutOfRange(format!("t-action is not t^{n}-torsion")));
        }
        let dim = t.rows();
        // block sizes from the rank sequence of powers of t
        let ranks: Vec<usize> = (0..=n + 1).map(|s| t.pow(s).rank()).collect();
        let mut exponents = Vec::new();
        for s in (1..=n).rev() {
            // #blocks of size exactly s
            let count = ranks[s - 1] + ranks[s + 1] - 2 * ranks[s];
            for _ in 0..count {
                exponents.push(s);
            }
        }
        // certification: the decomposition accounts for the whole module
        if exponents.iter().sum::<usize>() != dim {
            return Err(Error::OutOfRange(
                "cyclic decomposition does not exhaust the module".into(),
            ));
        }
        Ok(ArtinModule { n, t, exponents })
    }

    pub fn q_dim(&self) -> usize {
        self.t.rows()
    }

    /// Minimal number of generators (= dim of the module mod t).
    pub fn generator_count(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_free(&self) -> bool {
        self.exponents.iter().all(|&e| e == self.n)
    }
}

/// H^i(V ⊗ A, d + x) as a module over ℚ[t]/(tⁿ).
pub fn deformed_cohomology(dc: &DeformedComplex, i: i32) -> Result<ArtinModule> {
    let cocycles = dc.total_differential(i).nullspace();
    let boundaries = dc.total_differential(i - 1).column_space_basis();
    let sq = Subquotient::new(&cocycles, &boundaries);
    let t = dc.t_action(i);
    // induced t-action on classes
    let mut cols = Vec::new();
    for k in 0..sq.dim() {
        let rep = sq.reps.column(k);
        cols.push(sq.project(&t.mul_vec(&rep))?);
    }
    ArtinModule::new(dc.n, Mat::from_columns(sq.dim(), &cols))
}

/// Whether H^i deforms: the module is free of rank dim H^i(V, d).
pub fn is_deformation(dc: &DeformedComplex, i: i32) -> Result<bool> {
    let module = deformed_cohomology(dc, i)?;
    let h = dc.base.cohomology()?;
    Ok(module.is_free() && module.generator_count() == h.dim(i))
}

/// Outcome of the gauge-triviality decision.
#[derive(Clone, Debug)]
pub enum GaugeDecision {
    /// a verified witness a with e^a ∗ x = 0
    Trivial { witness: GradedElement },
    /// the first degree whose cohomology fails to deform, with the
    /// offending cyclic exponents
    NotTrivial { degree: i32, exponents: Vec<usize> },
}

impl GaugeDecision {
    pub fn is_trivial(&self) -> bool {
        matches!(self, GaugeDecision::Trivial { .. })
    }
}

/// Decides whether x is gauge equivalent to 0: true exactly when every
/// H^i deforms; in that case an explicit witness is built by
/// order-by-order solving and verified.
pub fn gauge_trivial_decision(dc: &DeformedComplex) -> Result<GaugeDecision> {
    let h = dc.base.cohomology()?;
    for i in dc.base.space.degrees() {
        let module = deformed_cohomology(dc, i)?;
        if !(module.is_free() && module.generator_count() == h.dim(i)) {
            return Ok(GaugeDecision::NotTrivial {
                degree: i,
                exponents: module.exponents,
            });
        }
    }
    // order-by-order: kill the lowest surviving t-power with an exact
    // correction dh = x_m, gauge by h ⊗ t^m, repeat
    let g = &dc.tensor.dgla;
    let mut cur = dc.x.clone();
    let mut witness = GradedElement::zero();
    let hom_d0 = dc.hom.dgla.d().block(0);
    let ideal = artinian_ideal(dc.n)?;
    while !cur.is_zero() {
        let (m, part) = lowest_order_part(&dc.tensor, &cur, 1);
        let rhs = part.degree_part(1, dc.hom.dgla.dim(1));
        let hcoords = hom_d0.solve(&rhs).map_err(|_| {
            Error::NoSolution
        })?;
        let helem = GradedElement::from_degree(0, hcoords);
        let tk = ideal.space().basis_element(0, m - 1);
        let a = dc.tensor.tensor_elem(&helem, &tk);
        cur = gauge_action(g, &a, &cur)?;
        witness = bch(g, &a, &witness, dc.n)?;
    }
    let acted = gauge_action(g, &witness, &dc.x)?;
    if !acted.is_zero() {
        return Err(Error::NoSolution);
    }
    Ok(GaugeDecision::Trivial { witness })
}

/// The lowest t-power m with a nonzero coefficient in the given tensor
/// degree, and the hom-side element at that power.
fn lowest_order_part(t: &TensorDgla, v: &GradedElement, deg: i32) -> (usize, GradedElement) {
    let dim = t.dgla.dim(deg);
    let coords = v.degree_part(deg, dim);
    let pairs = t.basis_pairs(deg);
    let mut best: Option<usize> = None;
    for (idx, c) in coords.iter().enumerate() {
        if !c.is_zero() {
            let m = pairs[idx].1 .1 + 1;
            best = Some(best.map_or(m, |b| b.min(m)));
        }
    }
    let m = best.expect("element is zero in this degree");
    let mut out = GradedElement::zero();
    for (idx, c) in coords.iter().enumerate() {
        if !c.is_zero() && pairs[idx].1 .1 + 1 == m {
            let hk = pairs[idx].0;
            let dimh = t.base.dim(hk.0);
            let mut p = out.degree_part(hk.0, dimh);
            p[hk.1] += c;
            out.set_degree(hk.0, p);
        }
    }
    (m, out)
}

/// The three-term truncation V^{i−1} → V^i → V^{i+1}.
pub fn truncated_complex(v: &CochainComplex, i: i32) -> Result<CochainComplex> {
    let mut labels = BTreeMap::new();
    for j in [i - 1, i, i + 1] {
        if v.dim(j) > 0 {
            labels.insert(j, v.space.labels(j).to_vec());
        }
    }
    let space = GradedSpace::new(labels)?;
    let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
    for j in [i - 1, i] {
        if space.dim(j) > 0 && space.dim(j + 1) > 0 {
            d.set_block(j, v.d.block(j));
        }
    }
    CochainComplex::new(space, d)
}

/// The truncation morphism and its surroundings.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub window: i32,
    pub t_iv: CochainComplex,
    pub source: HomDgla,
    pub target: HomDgla,
    pub morphism: DglaMorphism,
}

/// T_i: Hom⁺(V,V) → Hom*(T_iV, T_iV), keeping exactly the components
/// whose source and target degrees lie in the window {i−1, i, i+1}.
pub fn truncation_morphism(v: &CochainComplex, i: i32) -> Result<Truncation> {
    let t_iv = truncated_complex(v, i)?;
    let source = hom_dgla_plus(v)?;
    let target = hom_dgla(&t_iv)?;
    let mut map = LinearMap::zero(
        source.dgla.space().clone(),
        target.dgla.space().clone(),
        0,
    );
    for deg in source.dgla.space().degrees() {
        let src_dim = source.dgla.dim(deg);
        let dst_dim = target.dgla.dim(deg);
        if src_dim == 0 || dst_dim == 0 {
            continue;
        }
        let mut block = Mat::zeros(dst_dim, src_dim);
        let dst_triples = target.hom.basis_triples(deg);
        for (k, &(j, p, q)) in source.hom.basis_triples(deg).iter().enumerate() {
            let in_window = |x: i32| (i - 1..=i + 1).contains(&x);
            if in_window(j) && in_window(j + deg) {
                let r = dst_triples
                    .iter()
                    .position(|&t| t == (j, p, q))
                    .expect("window component present in truncated hom basis");
                block.set(r, k, rone());
            }
        }
        map.set_block(deg, block);
    }
    let morphism = DglaMorphism::new(source.dgla.clone(), target.dgla.clone(), map)?;
    Ok(Truncation {
        window: i,
        t_iv,
        source,
        target,
        morphism,
    })
}

/// Whether [x] lies in the image of the truncated deformation functor:
/// decided by the gauge-triviality of T_i(x) on the bounded complex T_iV.
pub fn in_image_of_truncated(dc: &DeformedComplex, i: i32) -> Result<bool> {
    let tr = truncation_morphism(&dc.base, i)?;
    let ideal = artinian_ideal(dc.n)?;
    let target_tensor = tensor(&tr.target.dgla, &ideal)?;
    // push x through T_i ⊗ id
    let mut tx = GradedElement::zero();
    for (&deg, coords) in dc.x.coords_map() {
        for (idx, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (hk, ak) = dc.tensor.basis_pairs(deg)[idx];
            let he = dc.hom.dgla.space().basis_element(hk.0, hk.1);
            let mapped = tr.morphism.apply(&he);
            let a = ideal.space().basis_element(ak.0, ak.1);
            tx = tx.add(&target_tensor.tensor_elem(&mapped, &a).scale(c));
        }
    }
    let tdc = TruncatedDeformation::new(&tr, dc.n, tx)?;
    Ok(tdc.gauge_trivial()?.is_trivial())
}

/// The same deformation machinery on T_iV, with the full Hom* DGLA
/// (degree-0 gauge elements of the truncated complex).
struct TruncatedDeformation {
    dc: DeformedComplex,
}

impl TruncatedDeformation {
    fn new(tr: &Truncation, n: usize, tx: GradedElement) -> Result<TruncatedDeformation> {
        // the truncated complex is bounded, so Hom⁺ suffices for both the
        // MC element (degree 1) and the gauge group (degree 0)
        let dc = DeformedComplex::new(&tr.t_iv, n, tx)?;
        Ok(TruncatedDeformation { dc })
    }

    fn gauge_trivial(&self) -> Result<GaugeDecision> {
        gauge_trivial_decision(&self.dc)
    }
}

/// The zig-zag Hom*(W,W) ←α− K −β→ Hom*(V,V) through
/// K = {f : f(V) ⊆ V}, for a quasi-isomorphic inclusion V ⊆ W.
#[derive(Clone, Debug)]
pub struct FormalityZigzag {
    pub k: Dgla,
    pub alpha: DglaMorphism,
    pub beta: DglaMorphism,
    pub alpha_quasi_iso: bool,
    pub beta_quasi_iso: bool,
}

pub fn formality_zigzag(
    v: &CochainComplex,
    w: &CochainComplex,
    incl: &LinearMap,
) -> Result<FormalityZigzag> {
    if let Some(deg) = incl.chain_map_defect(&v.d, &w.d) {
        return Err(Error::NotChainMap { degree: deg });
    }
    for j in v.space.degrees() {
        if incl.block(j).rank() != v.dim(j) {
            return Err(Error::NotInjective { degree: j });
        }
    }
    let report = quasi_iso_check(incl, v, w)?;
    if !report.is_quasi_iso {
        return Err(Error::InvalidMorphism(
            "inclusion is not a quasi-isomorphism".into(),
        ));
    }
    let hom_w = hom_dgla(w)?;
    let hom_v = hom_dgla(v)?;
    // K^deg = {f : f(incl V^j) ⊆ incl V^{j+deg} for all j}
    let mut sub = BTreeMap::new();
    for deg in hom_w.dgla.space().degrees() {
        let triples = hom_w.hom.basis_triples(deg);
        let dim = triples.len();
        // condition rows: (coker of incl at j+deg) ∘ f ∘ incl at j = 0
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for j in v.space.degrees() {
            let tgt = j + deg;
            let inc_j = incl.block(j);
            // annihilators of im(incl) in degree tgt
            let ann = incl.block(tgt).transpose().nullspace();
            if ann.cols() == 0 {
                continue;
            }
            for a in 0..ann.cols() {
                for p in 0..v.dim(j) {
                    let mut row = vec![rzero(); dim];
                    // entry for basis (jj, pp, qq): contributes when the
                    // composite ann_a^T · E · incl e_p is nonzero
                    for (kidx, &(jj, pp, qq)) in triples.iter().enumerate() {
                        if jj != j {
                            continue;
                        }
                        // E maps w^{j}_{pp} ↦ w^{j+deg}_{qq}
                        let coeff = inc_j.get(pp, p).clone() * ann.get(qq, a).clone();
                        row[kidx] = coeff;
                    }
                    rows.push(row);
                }
            }
        }
        let mut cons = Mat::zeros(rows.len(), dim);
        for (r, row) in rows.iter().enumerate() {
            for (c, val) in row.iter().enumerate() {
                cons.set(r, c, val.clone());
            }
        }
        sub.insert(deg, cons.nullspace());
    }
    let (k, alpha) = hom_w.dgla.subalgebra(&sub, "k")?;
    // beta: restrict to V through the inclusion
    let mut beta_map = LinearMap::zero(k.space().clone(), hom_v.dgla.space().clone(), 0);
    for deg in k.space().degrees() {
        let kd = k.dim(deg);
        let vd = hom_v.dgla.dim(deg);
        if kd == 0 {
            continue;
        }
        let mut block = Mat::zeros(vd, kd);
        for c in 0..kd {
            let fw = hom_w.hom.to_linear_map(
                deg,
                &alpha
                    .apply(&k.space().basis_element(deg, c))
                    .degree_part(deg, hom_w.dgla.dim(deg)),
            );
            // solve incl ∘ g = fw ∘ incl for g: V → V
            let mut g = LinearMap::zero(v.space.clone(), v.space.clone(), deg);
            for j in v.space.degrees() {
                let rhs = fw.block(j).mul(&incl.block(j));
                if v.dim(j + deg) == 0 {
                    if !rhs.is_zero() {
                        return Err(Error::InvalidMorphism(
                            "restriction leaves the subcomplex".into(),
                        ));
                    }
                    continue;
                }
                let sol = incl.block(j + deg).solve_mat(&rhs)?;
                g.set_block(j, sol);
            }
            let coords = hom_v.hom.coords_of_map(deg, &g);
            for (r, val) in coords.into_iter().enumerate() {
                block.set(r, c, val);
            }
        }
        beta_map.set_block(deg, block);
    }
    let beta = DglaMorphism::new(k.clone(), hom_v.dgla.clone(), beta_map)?;
    let alpha_report = quasi_iso_check(&alpha.map, &k.complex, &hom_w.dgla.complex)?;
    let beta_report = quasi_iso_check(&beta.map, &k.complex, &hom_v.dgla.complex)?;
    Ok(FormalityZigzag {
        k,
        alpha_quasi_iso: alpha_report.is_quasi_iso,
        beta_quasi_iso: beta_report.is_quasi_iso,
        alpha,
        beta,
    })
}
