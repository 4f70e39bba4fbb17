//! Maurer-Cartan elements, the gauge action, the truncated
//! Baker-Campbell-Hausdorff product, MC pairs for a morphism, obstruction
//! classes and order-by-order lifting.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::coeff::{artinian_ideal, tensor, tensor_morphism, SmallExtension, TensorDgla};
use crate::cone::{suspended_cone, SuspendedCone};
use crate::complex::Cohomology;
use crate::dgla::{BasisKey, CommutativeSquare, Dgla, DglaMorphism};
use crate::error::{Error, Result};
use crate::graded::GradedElement;
use crate::matrix::Mat;
use crate::rational::{factorial, rat, rone, rzero, sign_pow, Rat};

/// Hard cap on BCH word length: coefficients beyond this are not tabulated.
pub const BCH_SUPPORTED_BOUND: usize = 8;

fn check_degree(x: &GradedElement, expected: i32) -> Result<()> {
    match x.homogeneous_degree() {
        None if x.is_zero() => Ok(()),
        Some(d) if d == expected => Ok(()),
        other => Err(Error::WrongDegree {
            expected,
            got: other.unwrap_or(0),
        }),
    }
}

/// The Maurer-Cartan residual dx + ½[x,x] of a degree-1 element.
pub fn mc_residual(g: &Dgla, x: &GradedElement) -> Result<GradedElement> {
    check_degree(x, 1)?;
    Ok(g.apply_d(x).add(&g.bracket(x, x).scale(&rat(1, 2))))
}

/// The gauge action
/// e^a ∗ w = w + Σ_{n≥0} ad_a^n/(n+1)! ([a,w] − da),
/// truncated by nilpotency (the series must die out within the cap).
pub fn gauge_action(g: &Dgla, a: &GradedElement, w: &GradedElement) -> Result<GradedElement> {
    check_degree(a, 0)?;
    check_degree(w, 1)?;
    let mut out = w.clone();
    let mut cur = g.bracket(a, w).sub(&g.apply_d(a));
    let mut n = 0usize;
    while !cur.is_zero() {
        if n > 2 * BCH_SUPPORTED_BOUND {
            return Err(Error::OutOfRange(
                "gauge series does not terminate: algebra not nilpotent enough".into(),
            ));
        }
        out = out.add(&cur.scale(&(rone() / factorial(n + 1))));
        cur = g.bracket(a, &cur);
        n += 1;
    }
    Ok(out)
}

/// Enumerates the Dynkin compositions ((p_1,q_1),…,(p_n,q_n)), each pair
/// nonzero, with total letter count ≤ max_len, and feeds each to `f`.
fn for_each_composition(max_len: usize, f: &mut impl FnMut(&[(usize, usize)])) {
    fn rec(
        max_len: usize,
        used: usize,
        cur: &mut Vec<(usize, usize)>,
        f: &mut impl FnMut(&[(usize, usize)]),
    ) {
        if !cur.is_empty() {
            f(cur);
        }
        for p in 0..=(max_len - used) {
            for q in 0..=(max_len - used - p) {
                if p + q == 0 {
                    continue;
                }
                cur.push((p, q));
                rec(max_len, used + p + q, cur, f);
                cur.pop();
            }
        }
    }
    let mut cur = Vec::new();
    rec(max_len, 0, &mut cur, f);
}

/// The Baker-Campbell-Hausdorff product of two degree-0 elements by the
/// Dynkin explicit series, truncated at word length `class_bound − 1`
/// (all longer brackets vanish in an algebra of nilpotency class
/// ≤ class_bound).
pub fn bch(
    g: &Dgla,
    a: &GradedElement,
    b: &GradedElement,
    class_bound: usize,
) -> Result<GradedElement> {
    check_degree(a, 0)?;
    check_degree(b, 0)?;
    let max_len = class_bound.saturating_sub(1);
    if max_len > BCH_SUPPORTED_BOUND {
        return Err(Error::BchBoundExceeded {
            requested: max_len,
            supported: BCH_SUPPORTED_BOUND,
        });
    }
    let mut out = GradedElement::zero();
    for_each_composition(max_len, &mut |comp| {
        let n = comp.len();
        let m: usize = comp.iter().map(|&(p, q)| p + q).sum();
        // the right-nested bracket over the word a^{p_1} b^{q_1} … :
        // fold from the rightmost letter
        let mut letters: Vec<&GradedElement> = Vec::with_capacity(m);
        for &(p, q) in comp {
            for _ in 0..p {
                letters.push(a);
            }
            for _ in 0..q {
                letters.push(b);
            }
        }
        let mut term = letters[m - 1].clone();
        for &l in letters[..m - 1].iter().rev() {
            term = g.bracket(l, &term);
            if term.is_zero() {
                break;
            }
        }
        if term.is_zero() {
            return;
        }
        let mut denom = factorial(0);
        for &(p, q) in comp {
            denom *= factorial(p) * factorial(q);
        }
        let coeff = sign_pow((n - 1) as i64)
            / (rat(n as i64, 1) * rat(m as i64, 1) * denom);
        out = out.add(&term.scale(&coeff));
    });
    Ok(out)
}

/// Whether e^a ∗ (e^b ∗ w) = e^{bch(a,b)} ∗ w, exactly.
pub fn gauge_group_law_check(
    g: &Dgla,
    a: &GradedElement,
    b: &GradedElement,
    w: &GradedElement,
    class_bound: usize,
) -> Result<bool> {
    let lhs = gauge_action(g, a, &gauge_action(g, b, w)?)?;
    let rhs = gauge_action(g, &bch(g, a, b, class_bound)?, w)?;
    Ok(lhs == rhs)
}

/// A verified irrelevant-stabilizer witness: e^{[x,h]+dh} fixes x.
#[derive(Clone, Debug)]
pub struct StabilizerWitness {
    pub h: GradedElement,
    pub exponent: GradedElement,
}

pub fn irrelevant_stabilizer(
    g: &Dgla,
    x: &GradedElement,
    h: &GradedElement,
) -> Result<StabilizerWitness> {
    if !mc_residual(g, x)?.is_zero() {
        return Err(Error::NotMaurerCartan);
    }
    check_degree(h, -1)?;
    let exponent = g.bracket(x, h).add(&g.apply_d(h));
    let acted = gauge_action(g, &exponent, x)?;
    if acted != *x {
        return Err(Error::OutOfRange(
            "stabilizer exponent does not fix the element".into(),
        ));
    }
    Ok(StabilizerWitness {
        h: h.clone(),
        exponent,
    })
}

/// Everything needed to talk about MC pairs of `chi` with coefficients
/// in a fixed nilpotent algebra: both tensor DGLAs and the tensored
/// morphism.
#[derive(Clone, Debug)]
pub struct McSetting {
    pub chi: DglaMorphism,
    pub tl: TensorDgla,
    pub tm: TensorDgla,
    pub tchi: DglaMorphism,
}

impl McSetting {
    pub fn new(chi: &DglaMorphism, coeff: &crate::coeff::CoefficientAlgebra) -> Result<McSetting> {
        let tl = tensor(&chi.source, coeff)?;
        let tm = tensor(&chi.target, coeff)?;
        let tchi = tensor_morphism(chi, &tl, &tm)?;
        Ok(McSetting {
            chi: chi.clone(),
            tl,
            tm,
            tchi,
        })
    }
}

/// Outcome of checking the two MC-pair conditions; both residuals are
/// reported.
#[derive(Clone, Debug)]
pub struct McPairCheck {
    pub mc_residual: GradedElement,
    pub gauge_residual: GradedElement,
    pub valid: bool,
}

/// A verified MC pair (x, e^a) for chi: dx + ½[x,x] = 0 and e^a ∗ χ(x) = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct McPair {
    pub x: GradedElement,
    pub a: GradedElement,
}

pub fn mc_pair_check(s: &McSetting, x: &GradedElement, a: &GradedElement) -> Result<McPairCheck> {
    check_degree(x, 1)?;
    check_degree(a, 0)?;
    let res = mc_residual(&s.tl.dgla, x)?;
    let gauge = gauge_action(&s.tm.dgla, a, &s.tchi.apply(x))?;
    Ok(McPairCheck {
        valid: res.is_zero() && gauge.is_zero(),
        mc_residual: res,
        gauge_residual: gauge,
    })
}

pub fn mc_pair(s: &McSetting, x: &GradedElement, a: &GradedElement) -> Result<McPair> {
    let check = mc_pair_check(s, x, a)?;
    if !check.valid {
        return Err(Error::NotMaurerCartan);
    }
    Ok(McPair {
        x: x.clone(),
        a: a.clone(),
    })
}

/// Whether (e^l, e^{dm}) moves pair₁ to pair₂:
/// (x₂, a₂) = (e^l ∗ x₁, dm ∙ a₁ ∙ (−χ(l))) with ∙ the BCH product.
pub fn pairs_equivalent_witness_check(
    s: &McSetting,
    p1: &McPair,
    p2: &McPair,
    l: &GradedElement,
    m: &GradedElement,
    class_bound: usize,
) -> Result<bool> {
    check_degree(l, 0)?;
    check_degree(m, -1)?;
    let moved_x = gauge_action(&s.tl.dgla, l, &p1.x)?;
    let dm = s.tm.dgla.apply_d(m);
    let chil = s.tchi.apply(l);
    let inner = bch(&s.tm.dgla, &p1.a, &chil.scale(&-rone()), class_bound)?;
    let moved_a = bch(&s.tm.dgla, &dm, &inner, class_bound)?;
    Ok(moved_x == p2.x && moved_a == p2.a)
}

/// An obstruction class for lifting an MC pair across a small extension:
/// the cocycle (h, r) with h = dy + ½[y,y] and r = e^p ∗ χ(y), and its
/// class in H²(C_χ).
#[derive(Clone, Debug)]
pub struct ObstructionClass {
    /// h with the ideal factor stripped, in L²
    pub h: GradedElement,
    /// r with the ideal factor stripped, in M¹
    pub r: GradedElement,
    /// coordinates in the canonical basis of H²(C_χ)
    pub class: Vec<Rat>,
}

impl ObstructionClass {
    pub fn is_zero(&self) -> bool {
        self.class.iter().all(Zero::is_zero)
    }
}

/// The basis key of the (one-dimensional) ideal generator inside the
/// total algebra.
fn ideal_generator_key(ext: &SmallExtension) -> Result<BasisKey> {
    if ext.ideal.space().total_dim() != 1 {
        return Err(Error::OutOfRange(
            "obstruction calculus implemented for one-dimensional ideals".into(),
        ));
    }
    let gdeg = ext.ideal.space().degrees()[0];
    let img = ext.iota.apply(&ext.ideal.space().basis_element(gdeg, 0));
    let v = img.degree_part(gdeg, ext.total.dim(gdeg));
    let mut key = None;
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if *c != rone() || key.is_some() {
            return Err(Error::OutOfRange(
                "ideal generator must map to a single basis vector".into(),
            ));
        }
        key = Some((gdeg, i));
    }
    key.ok_or_else(|| Error::OutOfRange("ideal generator maps to zero".into()))
}

/// Strips the ideal factor: expects v supported on pairs (·, gen) and
/// returns the base-side element.
fn strip_ideal_factor(
    t: &TensorDgla,
    v: &GradedElement,
    gen: BasisKey,
) -> Result<GradedElement> {
    let mut out = GradedElement::zero();
    for (&deg, coords) in v.coords_map() {
        for (idx, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (l, a) = t.basis_pairs(deg)[idx];
            if a != gen {
                return Err(Error::OutOfRange(format!(
                    "element does not lie in the ideal layer at tensor degree {deg}"
                )));
            }
            let n = t.base.dim(l.0);
            let mut part = out.degree_part(l.0, n);
            part[l.1] += c;
            out.set_degree(l.0, part);
        }
    }
    Ok(out)
}

/// The canonical linear section of the quotient map of a small extension
/// (earliest-pivot solve, free variables zero), as per-degree matrices
/// B → A.
pub fn canonical_section(ext: &SmallExtension) -> Result<BTreeMap<i32, Mat>> {
    let mut out = BTreeMap::new();
    for deg in ext.quotient.space().degrees() {
        let nb = ext.quotient.dim(deg);
        let na = ext.total.dim(deg);
        let alpha = ext.alpha.map.block(deg);
        let mut cols = Vec::new();
        for q in 0..nb {
            let mut e = vec![rzero(); nb];
            e[q] = rone();
            cols.push(alpha.solve(&e)?);
        }
        out.insert(deg, Mat::from_columns(na, &cols));
    }
    Ok(out)
}

/// Applies a section (coefficient-side) to lift an element of L⊗B into
/// L⊗A.
fn lift_element(
    from: &TensorDgla,
    to: &TensorDgla,
    section: &BTreeMap<i32, Mat>,
    v: &GradedElement,
) -> GradedElement {
    let mut out = GradedElement::zero();
    for (&deg, coords) in v.coords_map() {
        for (idx, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (l, b) = from.basis_pairs(deg)[idx];
            let sec = &section[&b.0];
            let lifted = GradedElement::from_degree(b.0, sec.column(b.1));
            let xl = from.base.space().basis_element(l.0, l.1);
            out = out.add(&to.tensor_elem(&xl, &lifted).scale(c));
        }
    }
    out
}

/// Computes the obstruction to lifting an MC pair over B across a small
/// extension, using a caller-chosen section of the quotient map.
pub fn obstruction_class_with_section(
    chi: &DglaMorphism,
    ext: &SmallExtension,
    pair: &McPair,
    setting_b: &McSetting,
    section: &BTreeMap<i32, Mat>,
) -> Result<ObstructionClass> {
    // re-verify the pair over B
    let check = mc_pair_check(setting_b, &pair.x, &pair.a)?;
    if !check.valid {
        return Err(Error::NotMaurerCartan);
    }
    let setting_a = McSetting::new(chi, &ext.total)?;
    let y = lift_element(&setting_b.tl, &setting_a.tl, section, &pair.x);
    let p = lift_element(&setting_b.tm, &setting_a.tm, section, &pair.a);
    let h = mc_residual(&setting_a.tl.dgla, &y)?;
    let r = gauge_action(&setting_a.tm.dgla, &p, &setting_a.tchi.apply(&y))?;
    let gen = ideal_generator_key(ext)?;
    let h0 = strip_ideal_factor(&setting_a.tl, &h, gen)?;
    let r0 = strip_ideal_factor(&setting_a.tm, &r, gen)?;
    let cone = suspended_cone(chi)?;
    let rep = cone.pair(&h0, &r0);
    // the pair must be a cocycle of the suspended cone
    if !cone.complex.d.apply(&rep).is_zero() {
        return Err(Error::NotCocycle { degree: 2 });
    }
    let hh = cone.cohomology()?;
    let class = hh.project(2, &rep)?;
    Ok(ObstructionClass {
        h: h0,
        r: r0,
        class,
    })
}

/// Obstruction class with the canonical section.
pub fn obstruction_class(
    chi: &DglaMorphism,
    ext: &SmallExtension,
    pair: &McPair,
    setting_b: &McSetting,
) -> Result<ObstructionClass> {
    let section = canonical_section(ext)?;
    obstruction_class_with_section(chi, ext, pair, setting_b, &section)
}

/// The primary obstruction of a tangent class:
/// (x, a) ↦ ½([x,x], [a, χ(x)]) as a class in H²(C_χ).
pub fn primary_obstruction(
    chi: &DglaMorphism,
    cone: &SuspendedCone,
    h: &Cohomology,
    x: &GradedElement,
    a: &GradedElement,
) -> Result<Vec<Rat>> {
    let rep = cone.pair(x, a);
    if !cone.complex.d.apply(&rep).is_zero() {
        return Err(Error::NotCocycle { degree: 1 });
    }
    let hx = chi.source.bracket(x, x).scale(&rat(1, 2));
    let ha = chi.target.bracket(a, &chi.apply(x)).scale(&rat(1, 2));
    let out = cone.pair(&hx, &ha);
    h.project(2, &out)
}

/// One step of an order-by-order lifting transcript.
#[derive(Clone, Debug)]
pub struct LiftStep {
    /// lifting into t-order `order` (coefficients in the ideal of
    /// Q[t]/(t^{order+1}))
    pub order: usize,
    pub class: Vec<Rat>,
    /// the cone degree-1 correction (l, m) applied when the class is zero
    pub correction: Option<(GradedElement, GradedElement)>,
}

/// Transcript of lifting a tangent seed over Q[t]/(t^n).
#[derive(Clone, Debug)]
pub struct LiftTranscript {
    pub seed: Vec<Rat>,
    pub steps: Vec<LiftStep>,
    /// the highest n with a constructed MC pair over the ideal of
    /// Q[t]/(t^n)
    pub reached: usize,
    /// final pair over the ideal of Q[t]/(t^reached)
    pub pair: McPair,
    pub obstructed: bool,
}

/// Lifts a tangent class order by order up to Q[t]/(t^n), correcting with
/// the canonical solve at each unobstructed step.
pub fn mc_lift(chi: &DglaMorphism, n: usize, seed: &[Rat]) -> Result<LiftTranscript> {
    mc_lift_branch(chi, n, seed, &mut |_, _| Vec::new())
}

/// Exhaustive variant: at every solvable step, `offsets` may return
/// degree-1 cone cocycle offsets (as coordinate vectors over the H¹
/// basis) to add to the canonical correction; every branch is explored.
pub fn mc_lift_with_offsets(
    chi: &DglaMorphism,
    n: usize,
    seed: &[Rat],
    grid: &[Rat],
) -> Result<Vec<LiftTranscript>> {
    let cone = suspended_cone(chi)?;
    let h = cone.cohomology()?;
    let dim = h.dim(1);
    // all offset vectors over the grid
    let mut offsets: Vec<Vec<Rat>> = vec![Vec::new()];
    for _ in 0..dim {
        let mut next = Vec::new();
        for v in &offsets {
            for gpt in grid {
                let mut w = v.clone();
                w.push(gpt.clone());
                next.push(w);
            }
        }
        offsets = next;
    }
    if offsets.is_empty() {
        offsets.push(Vec::new());
    }
    let mut out = Vec::new();
    // enumerate one offset choice applied uniformly at every step; the
    // branching is over the choice vector
    for off in &offsets {
        let t = mc_lift_branch(chi, n, seed, &mut |_, _| off.clone())?;
        out.push(t);
    }
    Ok(out)
}

fn mc_lift_branch(
    chi: &DglaMorphism,
    n: usize,
    seed: &[Rat],
    offset_for_step: &mut impl FnMut(usize, &Cohomology) -> Vec<Rat>,
) -> Result<LiftTranscript> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("lift order must be >= 2, got {n}")));
    }
    let cone = suspended_cone(chi)?;
    let h = cone.cohomology()?;
    if seed.len() != h.dim(1) {
        return Err(Error::DimensionMismatch(format!(
            "seed has {} coordinates, H¹ has dimension {}",
            seed.len(),
            h.dim(1)
        )));
    }
    // tangent representative (x1, a1)
    let mut x1 = GradedElement::zero();
    let mut a1 = GradedElement::zero();
    for (k, c) in seed.iter().enumerate() {
        let rep = h.representative(1, k);
        let (l, m) = cone.split(&rep);
        x1 = x1.add(&l.scale(c));
        a1 = a1.add(&m.scale(c));
    }
    // initial pair over the dual numbers' ideal
    let b2 = artinian_ideal(2)?;
    let mut setting = McSetting::new(chi, &b2)?;
    let t_gen = b2.space().basis_element(0, 0);
    let mut pair = {
        let x = setting.tl.tensor_elem(&x1, &t_gen);
        let a = setting.tm.tensor_elem(&a1, &t_gen);
        mc_pair(&setting, &x, &a)?
    };
    let mut steps = Vec::new();
    let mut reached = 2usize;
    let mut obstructed = false;
    for k in 3..=n {
        let ext = crate::coeff::small_extension_step(k)?;
        let section = canonical_section(&ext)?;
        let ob = obstruction_class_with_section(chi, &ext, &pair, &setting, &section)?;
        if !ob.is_zero() {
            steps.push(LiftStep {
                order: k,
                class: ob.class,
                correction: None,
            });
            obstructed = true;
            break;
        }
        // solve δ(c_l, c_m) = (h0, r0) in the cone
        let cone_d1 = cone.complex.d.block(1);
        let rhs_elem = cone.pair(&ob.h, &ob.r);
        let rhs = rhs_elem.degree_part(2, cone.complex.dim(2));
        let mut sol = cone_d1.solve(&rhs)?;
        // optional exploration offset (coordinates over H¹ basis reps)
        let off = offset_for_step(k, &h);
        if !off.is_empty() {
            let mut extra = GradedElement::zero();
            for (idx, c) in off.iter().enumerate() {
                extra = extra.add(&h.representative(1, idx).scale(c));
            }
            let extra_coords = extra.degree_part(1, cone.complex.dim(1));
            for (s, e) in sol.iter_mut().zip(extra_coords) {
                *s += e;
            }
        }
        let sol_elem = GradedElement::from_degree(1, sol);
        let (c_l, c_m) = cone.split(&sol_elem);
        // move to the next order and correct at top degree
        let ak = ext.total.clone();
        let next_setting = McSetting::new(chi, &ak)?;
        let y = lift_element(&setting.tl, &next_setting.tl, &section, &pair.x);
        let p = lift_element(&setting.tm, &next_setting.tm, &section, &pair.a);
        let tk = ak.space().basis_element(0, k - 2); // t^{k-1}
        let x_next = y.sub(&next_setting.tl.tensor_elem(&c_l, &tk));
        let a_next = p.sub(&next_setting.tm.tensor_elem(&c_m, &tk));
        pair = mc_pair(&next_setting, &x_next, &a_next)?;
        setting = next_setting;
        reached = k;
        steps.push(LiftStep {
            order: k,
            class: ob.class,
            correction: Some((c_l, c_m)),
        });
    }
    Ok(LiftTranscript {
        seed: seed.to_vec(),
        steps,
        reached,
        pair,
        obstructed,
    })
}

/// Smoothness verdict from the two syntactic criteria.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SmoothnessVerdict {
    SmoothByL1Zero,
    SmoothByAbelianConditions,
    Inconclusive,
}

/// Checks the sufficient smoothness criteria: L¹ = 0, or
/// [L¹,L¹] = 0 together with [M⁰, dM⁰] = 0.
pub fn smoothness_criteria(chi: &DglaMorphism) -> SmoothnessVerdict {
    let l = &chi.source;
    let m = &chi.target;
    if l.dim(1) == 0 {
        return SmoothnessVerdict::SmoothByL1Zero;
    }
    let l1_abelian = (0..l.dim(1)).all(|p| {
        (0..l.dim(1)).all(|q| l.bracket_basis((1, p), (1, q)).is_zero())
    });
    let m0_condition = (0..m.dim(0)).all(|p| {
        (0..m.dim(0)).all(|q| {
            let b = m.space().basis_element(0, q);
            let db = m.apply_d(&b);
            m.bracket(&m.space().basis_element(0, p), &db).is_zero()
        })
    });
    if l1_abelian && m0_condition {
        SmoothnessVerdict::SmoothByAbelianConditions
    } else {
        SmoothnessVerdict::Inconclusive
    }
}

/// Per-class outcome of mapping obstruction classes through the cone map
/// of a commutative square.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct ObstructionVanishingReport {
    pub mapped_to_zero: Vec<bool>,
    pub all_vanish: bool,
}

/// Verifies that each obstruction class (given by its cone cocycle
/// (h, r)) maps to zero in H²(C_η) under the induced cone map.
pub fn obstruction_vanishing_check(
    square: &CommutativeSquare,
    classes: &[(GradedElement, GradedElement)],
) -> Result<ObstructionVanishingReport> {
    let icm = crate::cone::induced_cone_map(square)?;
    let h_target = icm.target.cohomology()?;
    let mut mapped_to_zero = Vec::new();
    for (hh, rr) in classes {
        let rep = icm.source.pair(hh, rr);
        if !icm.source.complex.d.apply(&rep).is_zero() {
            return Err(Error::NotCocycle { degree: 2 });
        }
        let img = icm.map.apply(&rep);
        let coords = h_target.project(2, &img)?;
        mapped_to_zero.push(coords.iter().all(Zero::is_zero));
    }
    Ok(ObstructionVanishingReport {
        all_vanish: mapped_to_zero.iter().all(|&b| b),
        mapped_to_zero,
    })
}
