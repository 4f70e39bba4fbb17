//! Named example fixtures: small DGLA morphisms exercising every feature.

use std::collections::BTreeMap;

use crate::complex::CochainComplex;
use crate::dgla::{hom_dgla, sl2, Dgla, DglaMorphism};
use crate::graded::{GradedSpace, LinearMap};
use crate::matrix::Mat;
use crate::rational::rone;

/// A named DGLA morphism `chi: L -> M`; the algebra of interest is the
/// source.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub chi: DglaMorphism,
}

impl Fixture {
    pub fn dgla(&self) -> &Dgla {
        &self.chi.source
    }
}

/// The three-dimensional algebra with u in degree 0, w and z in degree 1,
/// du = w, dz = 0 and [u,w] = z as the only nonzero bracket.
pub fn uwz() -> Dgla {
    let space = GradedSpace::new(BTreeMap::from([
        (0, vec!["u".to_string()]),
        (1, vec!["w".to_string(), "z".to_string()]),
    ]))
    .unwrap();
    let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
    d.set_block(0, Mat::from_int_rows(&[&[1], &[0]]));
    let complex = CochainComplex::new(space.clone(), d).unwrap();
    let z = space.basis_element(1, 1);
    Dgla::new(complex, vec![((0, 0), (1, 0), z)]).unwrap()
}

/// span{w} inside `uwz` as a one-dimensional abelian DGLA in degree 1,
/// with its inclusion.
pub fn uwz_inclusion() -> DglaMorphism {
    let g = uwz();
    let mut sub = BTreeMap::new();
    sub.insert(1, Mat::from_columns(2, &[vec![rone(), crate::rational::rzero()]]));
    let (_, incl) = g.subalgebra(&sub, "w").unwrap();
    incl
}

/// The quotient uwz / span{z}: u in degree 0, w in degree 1, du = w,
/// abelian; with the projection from `uwz`.
pub fn uwz_surjection() -> DglaMorphism {
    let space = GradedSpace::new(BTreeMap::from([
        (0, vec!["u".to_string()]),
        (1, vec!["w".to_string()]),
    ]))
    .unwrap();
    let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
    d.set_block(0, Mat::from_int_rows(&[&[1]]));
    let q = Dgla::abelian(CochainComplex::new(space.clone(), d).unwrap());
    let g = uwz();
    let mut pi = LinearMap::zero(g.space().clone(), space, 0);
    pi.set_block(0, Mat::identity(1));
    pi.set_block(1, Mat::from_int_rows(&[&[1, 0]]));
    DglaMorphism::new(g, q, pi).unwrap()
}

/// The endomorphism DGLA of the complex with one basis vector in each of
/// degrees 0, 1, 2 and zero differential.
pub fn three_step() -> Dgla {
    let v = CochainComplex::with_zero_d(GradedSpace::new(BTreeMap::from([
        (0, vec!["v0".to_string()]),
        (1, vec!["v1".to_string()]),
        (2, vec!["v2".to_string()]),
    ]))
    .unwrap());
    hom_dgla(&v).unwrap().dgla
}

/// An acyclic abelian DGLA: two terms with an isomorphism differential.
pub fn acyclic_abelian() -> Dgla {
    let space = GradedSpace::with_dims(&[(0, 1), (1, 1)], "a");
    let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
    d.set_block(0, Mat::from_int_rows(&[&[1]]));
    Dgla::abelian(CochainComplex::new(space, d).unwrap())
}

/// The full fixture list; every entry's morphism validates.
pub fn corpus() -> Vec<Fixture> {
    let one_point = Dgla::abelian(CochainComplex::with_zero_d(GradedSpace::with_dims(
        &[(0, 1)],
        "x",
    )));
    let two_term = Dgla::abelian(CochainComplex::with_zero_d(GradedSpace::with_dims(
        &[(0, 1), (1, 1)],
        "y",
    )));
    let line_deg1 = Dgla::abelian(CochainComplex::with_zero_d(GradedSpace::with_dims(
        &[(1, 1)],
        "m",
    )));
    let acyclic = acyclic_abelian();
    let sl2 = sl2();
    let three = three_step();
    let g = uwz();
    vec![
        Fixture {
            name: "abelian-point-identity",
            chi: DglaMorphism::identity(&one_point),
        },
        Fixture {
            name: "abelian-two-term-identity",
            chi: DglaMorphism::identity(&two_term),
        },
        Fixture {
            name: "acyclic-to-zero",
            chi: DglaMorphism::to_zero(&acyclic),
        },
        Fixture {
            name: "line-into-acyclic",
            chi: DglaMorphism::zero_map(&line_deg1, &acyclic),
        },
        Fixture {
            name: "sl2-identity",
            chi: DglaMorphism::identity(&sl2),
        },
        Fixture {
            name: "sl2-to-zero",
            chi: DglaMorphism::to_zero(&sl2),
        },
        Fixture {
            name: "three-step-to-zero",
            chi: DglaMorphism::to_zero(&three),
        },
        Fixture {
            name: "uwz-identity",
            chi: DglaMorphism::identity(&g),
        },
        Fixture {
            name: "uwz-inclusion",
            chi: uwz_inclusion(),
        },
        Fixture {
            name: "uwz-surjection",
            chi: uwz_surjection(),
        },
        Fixture {
            name: "zero-into-uwz",
            chi: DglaMorphism::zero_to(&g),
        },
    ]
}

/// Every sign mutation of the raw structure-constant table: one ordered
/// pair's value negated, its mirror left alone. Each mutant must be
/// rejected by `validate` (antisymmetry or Jacobi).
pub fn sign_mutations(g: &Dgla) -> Vec<Dgla> {
    let raw = g.stored_entries().clone();
    let mut out = Vec::new();
    for key in raw.keys() {
        let mut m = raw.clone();
        let v = m[key].scale(&-rone());
        m.insert(*key, v);
        out.push(Dgla::from_raw_unchecked(g.complex.clone(), m));
    }
    out
}
