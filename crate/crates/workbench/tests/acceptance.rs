//! Acceptance gate: every shipped capability is exercised end to end,
//! with one printed verdict line per criterion.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use dgla_workbench::coeff::{artinian_ideal, small_extension_step, tensor};
use dgla_workbench::cohdef::{
    formality_zigzag, gauge_trivial_decision, in_image_of_truncated, is_deformation,
    DeformedComplex, GaugeDecision,
};
use dgla_workbench::complex::CochainComplex;
use dgla_workbench::cone::{
    extended_tangent, induced_cone_map, long_exact_sequence, suspended_cone, tangent_space,
};
use dgla_workbench::corpus::{corpus, sign_mutations, uwz_inclusion};
use dgla_workbench::dgla::{hom_dgla_plus, sl2, CommutativeSquare, Dgla, DglaMorphism};
use dgla_workbench::doc::{corpus_documents, emit_document, parse_document, resolve};
use dgla_workbench::graded::{GradedElement, GradedSpace, LinearMap};
use dgla_workbench::htp::{cartan_check, derived_bracket_dgla, Contraction, FiniteBicomplexModel};
use dgla_workbench::matrix::Mat;
use dgla_workbench::mc::{
    bch, gauge_action, gauge_group_law_check, irrelevant_stabilizer, mc_lift,
    mc_lift_with_offsets, mc_pair, mc_residual, obstruction_class, primary_obstruction, McSetting,
};
use dgla_workbench::path::path_object;
use dgla_workbench::rational::{rat, rint};
use dgla_workbench::run::{run_all, Report};
use dgla_workbench::whitehead::{
    connecting_iso, primary_obstruction_correspondence, whitehead_axioms_check, Whitehead,
};
use dgla_workbench::{Error, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ok(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn s(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn random_elem(g: &Dgla, deg: i32, rng: &mut ChaCha8Rng) -> GradedElement {
    let coords = (0..g.dim(deg)).map(|_| rint(rng.gen_range(-2..=2))).collect();
    GradedElement::from_degree(deg, coords)
}

fn unit_seed(dim: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![rint(0); dim];
    v[k] = rint(1);
    v
}

/// All vectors of the given length over the given values.
fn grid_vectors(len: usize, vals: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|v| {
                vals.iter().map(move |x| {
                    let mut w = v.clone();
                    w.push(*x);
                    w
                })
            })
            .collect();
    }
    out
}

// ---------------------------------------------------------------------
// 1. structure validation and mutation testing

fn c1_axiom_suite() -> Result<(), String> {
    let fixtures = corpus();
    ok(fixtures.len() >= 10, format!("corpus too small: {}", fixtures.len()))?;
    for f in &fixtures {
        ok(f.dgla().validate().is_valid(), format!("{}: algebra invalid", f.name))?;
        ok(f.chi.validate().is_valid(), format!("{}: morphism invalid", f.name))?;
    }
    for (name, g) in [("sl2", sl2()), ("uwz", dgla_workbench::corpus::uwz())] {
        let muts = sign_mutations(&g);
        ok(!muts.is_empty(), format!("{name}: no mutations generated"))?;
        for (i, m) in muts.iter().enumerate() {
            let report = m.validate();
            ok(!report.is_valid(), format!("{name}: mutation {i} not rejected"))?;
            ok(
                !report.violations.is_empty() && !report.violations[0].witness.is_empty(),
                format!("{name}: mutation {i} rejected without witness"),
            )?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// 2. tangent space over the dual numbers

fn c2_tangent_coincidence() -> Result<(), String> {
    for f in corpus() {
        let ts = tangent_space(&f.chi).map_err(s)?;
        ok(
            ts.dim == ts.def_side.dim,
            format!("{}: H1 dim {} vs functor dim {}", f.name, ts.dim, ts.def_side.dim),
        )?;
        if ts.dim > 0 {
            ok(ts.iso.inverse().is_ok(), format!("{}: tangent iso not invertible", f.name))?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// 3. extended tangents on shifted points

fn c3_extended_tangents() -> Result<(), String> {
    for f in corpus() {
        for n in -1..=3 {
            let et = extended_tangent(&f.chi, n).map_err(s)?;
            ok(
                et.cone_dim == et.def_side.dim,
                format!("{}: degree {n}: {} vs {}", f.name, et.cone_dim, et.def_side.dim),
            )?;
            ok(
                et.iso.rank() == et.cone_dim,
                format!("{}: degree {n}: iso not invertible", f.name),
            )?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// 4. long exact sequence of the cone

fn c4_les_exactness() -> Result<(), String> {
    for f in corpus() {
        let les = long_exact_sequence(&f.chi).map_err(s)?;
        ok(!les.nodes.is_empty(), format!("{}: empty sequence", f.name))?;
        for node in &les.nodes {
            ok(node.exact, format!("{}: not exact at {} degree {}", f.name, node.at, node.degree))?;
        }
        ok(les.exact, format!("{}: sequence flagged inexact", f.name))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------
// 5. gauge and BCH laws on random nilpotent samples

fn c5_gauge_bch_laws() -> Result<(), String> {
    for (fi, f) in corpus().iter().enumerate() {
        let start = Instant::now();
        let tensors: Vec<_> = (2..=5)
            .map(|c| (c, tensor(f.dgla(), &artinian_ideal(c).unwrap()).unwrap()))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(40 + fi as u64);
        for _ in 0..100 {
            let (class, t) = &tensors[rng.gen_range(0..tensors.len())];
            let g = &t.dgla;
            let a = random_elem(g, 0, &mut rng);
            let b = random_elem(g, 0, &mut rng);
            let c = random_elem(g, 0, &mut rng);
            let w = random_elem(g, 1, &mut rng);
            // identity
            ok(
                gauge_action(g, &GradedElement::zero(), &w).map_err(s)? == w,
                format!("{}: identity action moved w", f.name),
            )?;
            // group law e^{bch(a,b)} * w = e^a * (e^b * w)
            ok(
                gauge_group_law_check(g, &a, &b, &w, *class).map_err(s)?,
                format!("{}: group law fails", f.name),
            )?;
            // BCH associativity
            let lhs = bch(g, &bch(g, &a, &b, *class).map_err(s)?, &c, *class).map_err(s)?;
            let rhs = bch(g, &a, &bch(g, &b, &c, *class).map_err(s)?, *class).map_err(s)?;
            ok(lhs == rhs, format!("{}: BCH not associative", f.name))?;
            // the gauge orbit of a Maurer-Cartan element stays Maurer-Cartan
            let x = gauge_action(g, &a, &GradedElement::zero()).map_err(s)?;
            ok(
                mc_residual(g, &x).map_err(s)?.is_zero(),
                format!("{}: gauge broke the MC equation", f.name),
            )?;
            // irrelevant stabilizer fixed points (verified inside the call)
            if g.dim(-1) > 0 {
                let h = random_elem(g, -1, &mut rng);
                irrelevant_stabilizer(g, &x, &h)
                    .map_err(|e| format!("{}: stabilizer: {e}", f.name))?;
            }
        }
        let elapsed = start.elapsed();
        ok(
            elapsed.as_secs() < 10,
            format!("{}: 100 samples took {elapsed:?}", f.name),
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------
// 6. obstruction calculus

fn c6_obstruction_calculus() -> Result<(), String> {
    // (a) gauge invariance of the obstruction class: ten gauged
    // representatives of the same tangent class get the same class
    let chi = corpus()
        .into_iter()
        .find(|f| f.name == "three-step-to-zero")
        .map(|f| f.chi)
        .ok_or("three-step fixture missing")?;
    let cone = suspended_cone(&chi).map_err(s)?;
    let h = cone.cohomology().map_err(s)?;
    ok(h.dim(1) == 2, format!("unexpected tangent dim {}", h.dim(1)))?;
    let ext = small_extension_step(3).map_err(s)?;
    let setting = McSetting::new(&chi, &ext.quotient).map_err(s)?;
    let t1 = ext.quotient.space().basis_element(0, 0);
    for seed in [vec![rint(1), rint(1)], vec![rint(1), rint(0)]] {
        let mut xl = GradedElement::zero();
        for (k, c) in seed.iter().enumerate() {
            let (l, _) = cone.split(&h.representative(1, k));
            xl = xl.add(&l.scale(c));
        }
        let x = setting.tl.tensor_elem(&xl, &t1);
        let pair = mc_pair(&setting, &x, &GradedElement::zero()).map_err(s)?;
        let base = obstruction_class(&chi, &ext, &pair, &setting).map_err(s)?.class;
        let mut rng = ChaCha8Rng::seed_from_u64(606);
        for trial in 0..10 {
            let l0 = random_elem(&chi.source, 0, &mut rng);
            let l = setting.tl.tensor_elem(&l0, &t1);
            let moved = gauge_action(&setting.tl.dgla, &l, &x).map_err(s)?;
            let pair2 = mc_pair(&setting, &moved, &GradedElement::zero()).map_err(s)?;
            let cls = obstruction_class(&chi, &ext, &pair2, &setting).map_err(s)?.class;
            ok(cls == base, format!("gauge lift {trial} changed the class"))?;
        }
    }

    // (b) class zero <=> the lift continues; known endpoints
    for f in corpus() {
        let fcone = suspended_cone(&f.chi).map_err(s)?;
        let fh = fcone.cohomology().map_err(s)?;
        for k in 0..fh.dim(1) {
            let tr = mc_lift(&f.chi, 5, &unit_seed(fh.dim(1), k)).map_err(s)?;
            let hit = tr.steps.iter().any(|st| st.class.iter().any(|c| c != &rint(0)));
            ok(tr.obstructed == hit, format!("{}: seed {k}: flag vs classes", f.name))?;
            if !tr.obstructed {
                ok(tr.reached == 5, format!("{}: seed {k}: unobstructed but stalled", f.name))?;
            }
        }
    }
    let three = corpus().into_iter().find(|f| f.name == "three-step-to-zero").unwrap();
    let tr = mc_lift(&three.chi, 5, &[rint(1), rint(1)]).map_err(s)?;
    ok(tr.obstructed && tr.reached == 2, "known obstructed seed lifted")?;
    ok(tr.steps.last().unwrap().class == vec![rint(1)], "obstructed class is not [1]")?;
    let tr = mc_lift(&three.chi, 5, &[rint(1), rint(0)]).map_err(s)?;
    ok(!tr.obstructed && tr.reached == 5, "known free seed obstructed")?;
    let inc = uwz_inclusion();
    let tr = mc_lift(&inc, 5, &[rint(1)]).map_err(s)?;
    ok(tr.obstructed && tr.steps[0].class == vec![rat(1, 2)], "inclusion class is not [1/2]")?;

    // (c) the first lift obstruction is the primary obstruction, seed by seed
    for f in corpus() {
        let fcone = suspended_cone(&f.chi).map_err(s)?;
        let fh = fcone.cohomology().map_err(s)?;
        for k in 0..fh.dim(1) {
            let (x, a) = fcone.split(&fh.representative(1, k));
            let po = primary_obstruction(&f.chi, &fcone, &fh, &x, &a).map_err(s)?;
            let tr = mc_lift(&f.chi, 3, &unit_seed(fh.dim(1), k)).map_err(s)?;
            let step = tr
                .steps
                .iter()
                .find(|st| st.order == 3)
                .ok_or_else(|| format!("{}: seed {k}: no first lift step", f.name))?;
            ok(step.class == po, format!("{}: seed {k}: primary vs lift class", f.name))?;
        }
    }

    // (d) branch exploration: across 25 correction branches the first
    // obstruction class is lift-independent, and flags match classes
    let branches = mc_lift_with_offsets(
        &three.chi,
        4,
        &[rint(1), rint(0)],
        &[rint(-2), rint(-1), rint(0), rint(1), rint(2)],
    )
    .map_err(s)?;
    ok(branches.len() >= 10, format!("only {} branches", branches.len()))?;
    for (i, b) in branches.iter().enumerate() {
        ok(
            b.steps[0].class == branches[0].steps[0].class,
            format!("branch {i} first class differs"),
        )?;
        let hit = b.steps.iter().any(|st| st.class.iter().any(|c| c != &rint(0)));
        ok(b.obstructed == hit, format!("branch {i}: flag vs classes"))?;
    }
    // the canonical branch (all offsets zero) completes the lift
    ok(
        branches.iter().any(|b| !b.obstructed && b.reached == 4),
        "no branch completed the lift",
    )?;
    Ok(())
}

// ---------------------------------------------------------------------
// 7. path-object slices stabilize to cone cohomology

fn c7_path_object() -> Result<(), String> {
    for f in corpus() {
        let report = path_object(&f.chi, 6).map_err(s)?;
        let st = report.stabilized_at.ok_or(format!("{}: no stabilization by 6", f.name))?;
        ok(st <= 6, format!("{}: stabilized late at {st}", f.name))?;
        ok(report.matches_cone, format!("{}: dims differ from cone", f.name))?;
        if f.name.ends_with("-identity") {
            ok(
                report.cone_dims.values().all(|&d| d == 0),
                format!("{}: identity cone not acyclic", f.name),
            )?;
        }
        if f.name == "zero-into-uwz" {
            let hm = f.chi.target.complex.cohomology().map_err(s)?.dims();
            for (&deg, &dim) in &hm {
                ok(
                    report.cone_dims.get(&(deg + 1)) == Some(&dim),
                    format!("cone dims not the shifted target cohomology at {deg}"),
                )?;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// 8. cohomological deformation criteria

fn check_deformation_grid(v: &CochainComplex, n: usize) -> Result<usize, String> {
    let hom = hom_dgla_plus(v).map_err(s)?;
    let dim1 = hom.dgla.dim(1);
    let ideal = artinian_ideal(n).map_err(s)?;
    let t = tensor(&hom.dgla, &ideal).map_err(s)?;
    let degrees: Vec<i32> = v.space.degrees();
    let mut checked = 0;
    for coords in grid_vectors(dim1 * (n - 1), &[-1, 0, 1]) {
        let mut x = GradedElement::zero();
        for p in 0..n - 1 {
            let xp = GradedElement::from_degree(
                1,
                coords[p * dim1..(p + 1) * dim1].iter().map(|&c| rint(c)).collect(),
            );
            x = x.add(&t.tensor_elem(&xp, &ideal.space().basis_element(0, p)));
        }
        let dc = match DeformedComplex::new(v, n, x) {
            Ok(dc) => dc,
            Err(Error::NotMaurerCartan) => continue,
            Err(e) => return Err(s(e)),
        };
        checked += 1;
        let mut defs = BTreeMap::new();
        for &i in &degrees {
            let d = is_deformation(&dc, i).map_err(s)?;
            // detection through the three-term truncation agrees
            ok(
                in_image_of_truncated(&dc, i).map_err(s)? == d,
                format!("truncation disagrees at {coords:?}, i = {i}"),
            )?;
            defs.insert(i, d);
        }
        // sandwich: deformations at i-1 and i+1 force one at i
        for w in degrees.windows(3) {
            if defs[&w[0]] && defs[&w[2]] {
                ok(defs[&w[1]], format!("sandwich fails at {coords:?}"))?;
            }
        }
        // gauge triviality <=> every degree deforms, with a verified witness
        let decision = gauge_trivial_decision(&dc).map_err(s)?;
        ok(
            decision.is_trivial() == defs.values().all(|&d| d),
            format!("equivalence fails at {coords:?}"),
        )?;
        if let GaugeDecision::Trivial { witness } = decision {
            let acted = gauge_action(&dc.tensor.dgla, &witness, &dc.x).map_err(s)?;
            ok(acted.is_zero(), format!("witness fails at {coords:?}"))?;
        }
    }
    Ok(checked)
}

fn c8_deformation_suite() -> Result<(), String> {
    let two = CochainComplex::with_zero_d(GradedSpace::with_dims(&[(0, 1), (1, 1)], "v"));
    let three = CochainComplex::with_zero_d(GradedSpace::with_dims(&[(0, 1), (1, 1), (2, 1)], "v"));
    let mut total = 0;
    for v in [&two, &three] {
        for n in [2, 3] {
            total += check_deformation_grid(v, n)?;
        }
    }
    ok(total > 50, format!("grid too sparse: {total} points"))?;

    // formality zigzag certificates on three inclusions
    let mut cases = Vec::new();
    // identity inclusion
    let mut d = LinearMap::zero(two.space.clone(), two.space.clone(), 1);
    d.set_block(0, Mat::from_int_rows(&[&[1]]));
    let w = CochainComplex::new(two.space.clone(), d).map_err(s)?;
    cases.push(("identity", w.clone(), w.clone(), LinearMap::identity(&w.space)));
    // cohomology embedded in a bigger complex
    let wspace = GradedSpace::with_dims(&[(0, 1), (1, 2)], "w");
    let mut dw = LinearMap::zero(wspace.clone(), wspace.clone(), 1);
    dw.set_block(0, Mat::from_int_rows(&[&[0], &[1]]));
    let big = CochainComplex::new(wspace.clone(), dw).map_err(s)?;
    let vspace = GradedSpace::with_dims(&[(1, 1)], "h");
    let small = CochainComplex::with_zero_d(vspace.clone());
    let mut incl = LinearMap::zero(vspace, wspace, 0);
    incl.set_block(1, Mat::from_int_rows(&[&[1], &[0]]));
    cases.push(("embedding", small, big, incl));
    // acyclic summand split off
    let wspace = GradedSpace::with_dims(&[(0, 2), (1, 1)], "w");
    let mut dw = LinearMap::zero(wspace.clone(), wspace.clone(), 1);
    dw.set_block(0, Mat::from_int_rows(&[&[0, 1]]));
    let big = CochainComplex::new(wspace.clone(), dw).map_err(s)?;
    let vspace = GradedSpace::with_dims(&[(0, 1)], "v");
    let small = CochainComplex::with_zero_d(vspace.clone());
    let mut incl = LinearMap::zero(vspace, wspace, 0);
    incl.set_block(0, Mat::from_int_rows(&[&[1], &[0]]));
    cases.push(("summand", small, big, incl));
    for (name, v, w, incl) in cases {
        let z = formality_zigzag(&v, &w, &incl).map_err(s)?;
        ok(z.alpha_quasi_iso, format!("{name}: alpha not a quasi-iso"))?;
        ok(z.beta_quasi_iso, format!("{name}: beta not a quasi-iso"))?;
        ok(z.alpha.validate().is_valid(), format!("{name}: alpha invalid"))?;
        ok(z.beta.validate().is_valid(), format!("{name}: beta invalid"))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------
// 9. products on the quotient of an injective morphism

fn c9_quotient_products() -> Result<(), String> {
    let mut seen = 0;
    for f in corpus() {
        if f.chi.is_injective().is_err() {
            continue;
        }
        seen += 1;
        let ax = whitehead_axioms_check(&f.chi).map_err(s)?;
        ok(ax.passed, format!("{}: axioms fail: {:?}", f.name, ax.failures))?;
        let corr = primary_obstruction_correspondence(&f.chi).map_err(s)?;
        ok(corr.passed, format!("{}: correspondence fails", f.name))?;
        // lift independence on every tangent-level basis class
        let wh = Whitehead::new(&f.chi).map_err(s)?;
        for k in 0..wh.h.dim(0) {
            let a = unit_seed(wh.h.dim(0), k);
            let direct = wh.product(0, &a, 0, &a).map_err(s)?;
            let audited = wh.product_audited(0, &a, 0, &a, 11 + k as u64, 10).map_err(s)?;
            ok(direct == audited, format!("{}: class {k}: lifts disagree", f.name))?;
        }
    }
    ok(seen >= 3, format!("only {seen} injective fixtures"))?;

    // the known value on the inclusion: [u,u] = z in H^1 of the quotient,
    // and half of it transports to the cone-side primary obstruction
    let chi = uwz_inclusion();
    let wh = Whitehead::new(&chi).map_err(s)?;
    let sq = wh.product(0, &[rint(1)], 0, &[rint(1)]).map_err(s)?;
    ok(sq == vec![rint(1)], format!("[u,u] is {sq:?}, not z"))?;
    let cone = suspended_cone(&chi).map_err(s)?;
    let h = cone.cohomology().map_err(s)?;
    let x = chi.source.space().basis_element(1, 0);
    let a = chi.target.space().basis_element(0, 0);
    let po = primary_obstruction(&chi, &cone, &h, &x, &a).map_err(s)?;
    ok(po == vec![rat(1, 2)], format!("primary obstruction is {po:?}"))?;
    let transported = connecting_iso(&wh, &cone, &h, 1, &[rat(1, 2)]).map_err(s)?;
    ok(transported == po, format!("transported {transported:?} vs {po:?}"))?;
    Ok(())
}

// ---------------------------------------------------------------------
// 10. derived brackets and the Cartan-formula checker

fn xy_model() -> FiniteBicomplexModel {
    let space = GradedSpace::new(BTreeMap::from([
        (1, vec!["x".to_string()]),
        (2, vec!["y".to_string()]),
        (3, vec!["xy".to_string()]),
    ]))
    .unwrap();
    let mut del = LinearMap::zero(space.clone(), space.clone(), 1);
    del.set_block(1, Mat::from_int_rows(&[&[1]]));
    let delbar = LinearMap::zero(space.clone(), space.clone(), 1);
    let xy = space.basis_element(3, 0);
    FiniteBicomplexModel::new(space, del, delbar, vec![((1, 0), (2, 0), xy)]).unwrap()
}

fn two_cell_model() -> FiniteBicomplexModel {
    let space = GradedSpace::new(BTreeMap::from([
        (1, vec!["x".to_string()]),
        (2, vec!["y".to_string()]),
    ]))
    .unwrap();
    let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
    d.set_block(1, Mat::from_int_rows(&[&[1]]));
    FiniteBicomplexModel::new(space, d.clone(), d, vec![]).unwrap()
}

fn c10_cartan_suite() -> Result<(), String> {
    // derived brackets on valid models
    let model = xy_model();
    let derived = derived_bracket_dgla(&model).map_err(s)?;
    ok(derived.dgla.validate().is_valid(), "xy-model derived algebra invalid")?;
    ok(!derived.dgla.is_abelian(), "xy-model derived algebra unexpectedly abelian")?;
    for (i, m) in sign_mutations(&derived.dgla).iter().enumerate() {
        ok(!m.validate().is_valid(), format!("derived mutation {i} not rejected"))?;
    }
    let m2 = two_cell_model();
    let d2 = derived_bracket_dgla(&m2).map_err(s)?;
    ok(d2.dgla.validate().is_valid(), "two-cell derived algebra invalid")?;

    // accepted contractions: the zero contraction, and a substitution
    // contraction on free degree-1 generators
    let g1 = Dgla::abelian(CochainComplex::with_zero_d(GradedSpace::with_dims(&[(1, 1)], "a")));
    let zero = LinearMap::zero(m2.space().clone(), m2.space().clone(), 0);
    let report = cartan_check(&m2, &g1, &Contraction { maps: BTreeMap::from([((1, 0), zero)]) })
        .map_err(s)?;
    ok(report.passed, format!("zero contraction rejected: {:?}", report.failures))?;
    ok(report.morphism_into_derived == Some(true), "zero contraction not a morphism")?;

    let space = GradedSpace::new(BTreeMap::from([
        (1, vec!["e1".to_string(), "e2".to_string()]),
        (2, vec!["e12".to_string()]),
    ]))
    .unwrap();
    let zero = LinearMap::zero(space.clone(), space.clone(), 1);
    let e12 = space.basis_element(2, 0);
    let free = FiniteBicomplexModel::new(space.clone(), zero.clone(), zero, vec![((1, 0), (1, 1), e12)])
        .map_err(s)?;
    let g2 = Dgla::abelian(CochainComplex::with_zero_d(GradedSpace::with_dims(&[(0, 2)], "a")));
    let mut i1 = LinearMap::zero(space.clone(), space.clone(), -1);
    i1.set_block(2, Mat::from_int_rows(&[&[0], &[1]]));
    let mut i2 = LinearMap::zero(space.clone(), space.clone(), -1);
    i2.set_block(2, Mat::from_int_rows(&[&[-1], &[0]]));
    let report = cartan_check(
        &free,
        &g2,
        &Contraction { maps: BTreeMap::from([((0, 0), i1), ((0, 1), i2)]) },
    )
    .map_err(s)?;
    ok(report.passed, format!("substitution contraction rejected: {:?}", report.failures))?;

    // every single-entry perturbation of the valid zero contraction on the
    // two-cell model breaks a Cartan identity
    for (deg, val) in [(1, 1), (1, -1), (2, 1), (2, -1)] {
        let mut p = LinearMap::zero(m2.space().clone(), m2.space().clone(), 0);
        p.set_block(deg, Mat::from_int_rows(&[&[val]]));
        let report =
            cartan_check(&m2, &g1, &Contraction { maps: BTreeMap::from([((1, 0), p)]) })
                .map_err(s)?;
        ok(!report.passed, format!("perturbation at degree {deg}, value {val} accepted"))?;
        ok(
            !report.failures.is_empty() && !report.failures[0].witness.is_empty(),
            format!("perturbation at degree {deg} rejected without witness"),
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------
// 11. invariance under quasi-isomorphic squares

fn check_square(square: &CommutativeSquare) -> Result<(), String> {
    let icm = induced_cone_map(square).map_err(s)?;
    ok(icm.verdict.is_quasi_iso, "cone map is not a quasi-iso")?;
    for n in -1..=3 {
        let a = extended_tangent(&square.chi, n).map_err(s)?;
        let b = extended_tangent(&square.eta, n).map_err(s)?;
        ok(a.def_side.dim == b.def_side.dim, format!("tangents differ in degree {n}"))?;
    }
    let hs = icm.source.cohomology().map_err(s)?;
    let ht = icm.target.cohomology().map_err(s)?;
    for k in 0..hs.dim(1) {
        let rep = hs.representative(1, k);
        let (x, a) = icm.source.split(&rep);
        let po_s = primary_obstruction(&square.chi, &icm.source, &hs, &x, &a).map_err(s)?;
        let (x2, a2) = icm.target.split(&icm.map.apply(&rep));
        let po_t = primary_obstruction(&square.eta, &icm.target, &ht, &x2, &a2).map_err(s)?;
        // transport the source class through the induced map on H^2
        let mut rep2 = GradedElement::zero();
        for (j, c) in po_s.iter().enumerate() {
            rep2 = rep2.add(&hs.representative(2, j).scale(c));
        }
        let transported = ht.project(2, &icm.map.apply(&rep2)).map_err(s)?;
        ok(transported == po_t, format!("class {k}: {transported:?} vs {po_t:?}"))?;
    }
    Ok(())
}

fn c11_quasi_iso_invariance() -> Result<(), String> {
    for f in corpus() {
        let square = CommutativeSquare::new(
            f.chi.clone(),
            f.chi.clone(),
            DglaMorphism::identity(&f.chi.source),
            DglaMorphism::identity(&f.chi.target),
        )
        .map_err(s)?;
        check_square(&square).map_err(|e| format!("{}: {e}", f.name))?;
    }
    // a non-identity square: rescaling the inclusion by compatible weights
    let chi = uwz_inclusion();
    let fmap = LinearMap::identity(chi.source.space()).scale(&rint(2));
    let f = DglaMorphism::new(chi.source.clone(), chi.source.clone(), fmap).map_err(s)?;
    let mut f2map = LinearMap::zero(chi.target.space().clone(), chi.target.space().clone(), 0);
    f2map.set_block(0, Mat::from_int_rows(&[&[2]]));
    f2map.set_block(1, Mat::from_int_rows(&[&[2, 0], &[0, 4]]));
    let f2 = DglaMorphism::new(chi.target.clone(), chi.target.clone(), f2map).map_err(s)?;
    let square = CommutativeSquare::new(chi.clone(), chi, f, f2).map_err(s)?;
    check_square(&square).map_err(|e| format!("rescaled square: {e}"))
}

// ---------------------------------------------------------------------
// 12. documents, fixtures, and the command-line driver

fn c12_cli_round_trip() -> Result<(), String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for (name, doc) in corpus_documents() {
        let path = dir.join(format!("{name}.json"));
        let text = std::fs::read_to_string(&path).map_err(s)?;
        let on_disk = parse_document(&text).map_err(|e| format!("{name}: {e:?}"))?;
        ok(on_disk == doc, format!("{name}: fixture drifted from its builder"))?;
        let round = parse_document(&emit_document(&on_disk)).map_err(|e| format!("{name}: {e:?}"))?;
        ok(round == on_disk, format!("{name}: emit/parse not a round trip"))?;

        let resolved = resolve(&doc).map_err(|e| format!("{name}: {e:?}"))?;
        let reports = run_all(&doc, &resolved).map_err(s)?;
        let expected: Vec<Report> = serde_json::from_str(
            &std::fs::read_to_string(dir.join(format!("{name}.expected.json"))).map_err(s)?,
        )
        .map_err(s)?;
        ok(reports == expected, format!("{name}: library run differs from expected reports"))?;
        let again = run_all(&doc, &resolved).map_err(s)?;
        ok(reports == again, format!("{name}: rerun not deterministic"))?;

        let out = Command::new(env!("CARGO_BIN_EXE_workbench"))
            .args(["run", "--input", path.to_str().unwrap(), "--format", "machine"])
            .output()
            .map_err(s)?;
        ok(out.status.success(), format!("{name}: driver failed: {out:?}"))?;
        let got: Vec<Report> = serde_json::from_slice(&out.stdout).map_err(s)?;
        ok(got == reports, format!("{name}: driver output differs from the library"))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------

#[test]
fn acceptance() {
    let checks: Vec<(&str, fn() -> Result<(), String>)> = vec![
        ("1 structure axioms and sign-mutation rejection", c1_axiom_suite),
        ("2 tangent space equals H1 of the cone", c2_tangent_coincidence),
        ("3 extended tangents on shifted points", c3_extended_tangents),
        ("4 long exact sequence exactness", c4_les_exactness),
        ("5 gauge and BCH laws on random samples", c5_gauge_bch_laws),
        ("6 obstruction calculus and order-by-order lifting", c6_obstruction_calculus),
        ("7 path-object slices stabilize to cone cohomology", c7_path_object),
        ("8 deformation criteria, truncations, and zigzags", c8_deformation_suite),
        ("9 quotient products match cone obstructions", c9_quotient_products),
        ("10 derived brackets and Cartan formulas", c10_cartan_suite),
        ("11 invariance under quasi-isomorphic squares", c11_quasi_iso_invariance),
        ("12 document round-trips and the driver", c12_cli_round_trip),
    ];
    let mut failed = Vec::new();
    for (name, check) in checks {
        match check() {
            Ok(()) => println!("PASS criterion {name}"),
            Err(e) => {
                println!("FAIL criterion {name}: {e}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
