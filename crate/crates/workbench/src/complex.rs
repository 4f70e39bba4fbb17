//! Cochain complexes, cohomology with explicit representatives, shifts,
//! Hom complexes and quasi-isomorphism checks.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graded::{GradedElement, GradedSpace, LinearMap};
use crate::matrix::{Mat, Subquotient};
use crate::rational::{sign_pow, Rat};

/// A graded space with a square-zero degree +1 differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    pub space: GradedSpace,
    pub d: LinearMap,
}

impl CochainComplex {
    pub fn new(space: GradedSpace, d: LinearMap) -> Result<Self> {
        if d.degree != 1 {
            return Err(Error::DimensionMismatch(format!(
                "differential must have degree 1, got {}",
                d.degree
            )));
        }
        if d.source != space || d.target != space {
            return Err(Error::DimensionMismatch(
                "differential source/target must equal the underlying space".into(),
            ));
        }
        let c = CochainComplex { space, d };
        c.check_square_zero()?;
        Ok(c)
    }

    /// Complex with zero differential.
    pub fn with_zero_d(space: GradedSpace) -> Self {
        let d = LinearMap::zero(space.clone(), space.clone(), 1);
        CochainComplex { space, d }
    }

    pub fn zero() -> Self {
        CochainComplex::with_zero_d(GradedSpace::zero())
    }

    pub fn check_square_zero(&self) -> Result<()> {
        for j in self.space.degrees() {
            let dd = self.d.block(j + 1).mul(&self.d.block(j));
            if !dd.is_zero() {
                return Err(Error::DifferentialNotSquareZero { degree: j });
            }
        }
        Ok(())
    }

    pub fn dim(&self, deg: i32) -> usize {
        self.space.dim(deg)
    }

    /// Shifted complex: `shift(c,i)` has degree-j piece `c^{i+j}` and
    /// differential `(-1)^i d`.
    pub fn shift(&self, i: i32) -> CochainComplex {
        let space = self.space.shifted(i);
        let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
        let sign = sign_pow(i as i64);
        for j in self.space.degrees() {
            let b = self.d.block(j).scale(&sign);
            if space.dim(j - i + 1) > 0 && space.dim(j - i) > 0 {
                d.set_block(j - i, b);
            }
        }
        CochainComplex { space, d }
    }

    pub fn cohomology(&self) -> Result<Cohomology> {
        self.check_square_zero()?;
        let mut degs = BTreeMap::new();
        for i in self.space.degree_range(0) {
            let dim = self.dim(i);
            if dim == 0 {
                continue;
            }
            let cocycles = self.d.block(i).nullspace();
            let boundaries = self.d.block(i - 1).column_space_basis();
            degs.insert(i, Subquotient::new(&cocycles, &boundaries));
        }
        Ok(Cohomology {
            complex: self.clone(),
            degs,
        })
    }
}

/// Cohomology of a complex: per-degree dimension, explicit cocycle
/// representatives and a projection from cocycles to class coordinates.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub complex: CochainComplex,
    degs: BTreeMap<i32, Subquotient>,
}

impl Cohomology {
    pub fn dim(&self, deg: i32) -> usize {
        self.degs.get(&deg).map_or(0, |s| s.dim())
    }

    pub fn dims(&self) -> BTreeMap<i32, usize> {
        self.degs
            .iter()
            .map(|(&d, s)| (d, s.dim()))
            .filter(|&(_, n)| n > 0)
            .collect()
    }

    pub fn total_dim(&self) -> usize {
        self.degs.values().map(|s| s.dim()).sum()
    }

    /// Representative cocycle of the k-th basis class in a degree.
    pub fn representative(&self, deg: i32, k: usize) -> GradedElement {
        let s = self.degs.get(&deg).expect("degree outside support");
        GradedElement::from_degree(deg, s.reps.column(k))
    }

    /// Class coordinates of a cocycle; rejects non-cocycles.
    pub fn project(&self, deg: i32, v: &GradedElement) -> Result<Vec<Rat>> {
        let dim = self.complex.dim(deg);
        let coords = v.degree_part(deg, dim);
        match self.degs.get(&deg) {
            None => {
                if coords.iter().all(num_traits::Zero::is_zero) {
                    Ok(Vec::new())
                } else {
                    Err(Error::NotCocycle { degree: deg })
                }
            }
            Some(s) => s.project(&coords).map_err(|_| Error::NotCocycle { degree: deg }),
        }
    }
}

/// The Hom complex `Hom*(V,W)` with its canonical basis bookkeeping.
///
/// Degree-i basis vectors are triples `(j, p, q)`: the map sending basis
/// vector `p` of `V^j` to basis vector `q` of `W^{i+j}`, ordered by
/// `(j, p, q)`.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub v: CochainComplex,
    pub w: CochainComplex,
    pub complex: CochainComplex,
    basis: BTreeMap<i32, Vec<(i32, usize, usize)>>,
}

impl HomComplex {
    pub fn new(v: &CochainComplex, w: &CochainComplex) -> Result<HomComplex> {
        v.check_square_zero()?;
        w.check_square_zero()?;
        let mut basis: BTreeMap<i32, Vec<(i32, usize, usize)>> = BTreeMap::new();
        let mut labels: BTreeMap<i32, Vec<String>> = BTreeMap::new();
        for j in v.space.degrees() {
            for wi in w.space.degrees() {
                let i = wi - j;
                let entry = basis.entry(i).or_default();
                let lab = labels.entry(i).or_default();
                for p in 0..v.dim(j) {
                    for q in 0..w.dim(wi) {
                        entry.push((j, p, q));
                        lab.push(format!(
                            "[{}:{}->{}:{}]",
                            j,
                            v.space.labels(j)[p],
                            wi,
                            w.space.labels(wi)[q]
                        ));
                    }
                }
            }
        }
        // keep (j,p,q) ordering consistent with label order
        for (i, entry) in basis.iter_mut() {
            let lab = labels.get_mut(i).unwrap();
            let mut idx: Vec<usize> = (0..entry.len()).collect();
            idx.sort_by_key(|&k| entry[k]);
            *entry = idx.iter().map(|&k| entry[k].clone()).collect();
            *lab = idx.iter().map(|&k| lab[k].clone()).collect();
        }
        let space = GradedSpace::new(labels)?;
        let mut hc = HomComplex {
            v: v.clone(),
            w: w.clone(),
            complex: CochainComplex::with_zero_d(space.clone()),
            basis,
        };
        // differential: delta(f) = d_W f - (-1)^{deg f} f d_V
        let mut d = LinearMap::zero(space.clone(), space, 1);
        for i in hc.degrees() {
            let n = hc.dim(i);
            let m = hc.dim(i + 1);
            if n == 0 || m == 0 {
                continue;
            }
            let mut block = Mat::zeros(m, n);
            for k in 0..n {
                let f = hc.to_linear_map(i, &unit_vec(n, k));
                let df = hc
                    .w
                    .d
                    .compose(&f)
                    .sub(&f.compose(&hc.v.d).scale(&sign_pow(i as i64)));
                let coords = hc.coords_of_map(i + 1, &df);
                for (r, val) in coords.into_iter().enumerate() {
                    block.set(r, k, val);
                }
            }
            d.set_block(i, block);
        }
        hc.complex = CochainComplex::new(hc.complex.space.clone(), d)?;
        Ok(hc)
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.basis.keys().copied().collect()
    }

    pub fn dim(&self, i: i32) -> usize {
        self.basis.get(&i).map_or(0, |b| b.len())
    }

    pub fn basis_triples(&self, i: i32) -> &[(i32, usize, usize)] {
        self.basis.get(&i).map_or(&[], |b| b.as_slice())
    }

    /// The linear map of degree `i` with the given coordinates.
    pub fn to_linear_map(&self, i: i32, coords: &[Rat]) -> LinearMap {
        let triples = self.basis_triples(i);
        assert_eq!(coords.len(), triples.len());
        let mut f = LinearMap::zero(self.v.space.clone(), self.w.space.clone(), i);
        let mut blocks: BTreeMap<i32, Mat> = BTreeMap::new();
        for (t, c) in triples.iter().zip(coords.iter()) {
            if c.is_zero() {
                continue;
            }
            let (j, p, q) = *t;
            let b = blocks
                .entry(j)
                .or_insert_with(|| Mat::zeros(self.w.dim(i + j), self.v.dim(j)));
            let cur = b.get(q, p).clone();
            b.set(q, p, cur + c);
        }
        for (j, b) in blocks {
            f.set_block(j, b);
        }
        f
    }

    /// Coordinates of a degree-i linear map in the Hom basis.
    pub fn coords_of_map(&self, i: i32, f: &LinearMap) -> Vec<Rat> {
        assert_eq!(f.degree, i);
        let triples = self.basis_triples(i);
        triples
            .iter()
            .map(|&(j, p, q)| f.block(j).get(q, p).clone())
            .collect()
    }

    /// Element (in the Hom complex) representing a degree-i linear map.
    pub fn element_of_map(&self, f: &LinearMap) -> GradedElement {
        GradedElement::from_degree(f.degree, self.coords_of_map(f.degree, f))
    }
}

fn unit_vec(n: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![crate::rational::rzero(); n];
    v[k] = crate::rational::rone();
    v
}

/// The map induced on cohomology by a chain map `f` (a cocycle of the Hom
/// complex). Rejects non-cocycles.
pub fn induced_map_on_cohomology(
    f: &LinearMap,
    hv: &Cohomology,
    hw: &Cohomology,
) -> Result<BTreeMap<i32, Mat>> {
    // cocycle condition: d_W f = (-1)^{deg f} f d_V
    let lhs = hw.complex.d.compose(f);
    let rhs = f.compose(&hv.complex.d).scale(&sign_pow(f.degree as i64));
    if !lhs.sub(&rhs).is_zero() {
        return Err(Error::NotCocycle { degree: f.degree });
    }
    let mut out = BTreeMap::new();
    for i in hv.complex.space.degree_range(0) {
        let n = hv.dim(i);
        let m = hw.dim(i + f.degree);
        if n == 0 && m == 0 {
            continue;
        }
        let mut block = Mat::zeros(m, n);
        for k in 0..n {
            let rep = hv.representative(i, k);
            let img = f.apply(&rep);
            let coords = hw.project(i + f.degree, &img)?;
            for (r, val) in coords.into_iter().enumerate() {
                block.set(r, k, val);
            }
        }
        out.insert(i, block);
    }
    Ok(out)
}

/// Per-degree report of a quasi-isomorphism check.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize, PartialEq)]
pub struct QuasiIsoReport {
    pub is_quasi_iso: bool,
    /// degree -> (dim H source, dim H target, induced map bijective)
    pub per_degree: BTreeMap<i32, (usize, usize, bool)>,
}

/// Checks whether a degree-0 chain map induces isomorphisms on all
/// cohomology. Rejects non-chain-maps with the offending degree.
pub fn quasi_iso_check(
    f: &LinearMap,
    v: &CochainComplex,
    w: &CochainComplex,
) -> Result<QuasiIsoReport> {
    if f.degree != 0 {
        return Err(Error::WrongDegree {
            expected: 0,
            got: f.degree,
        });
    }
    if let Some(deg) = f.chain_map_defect(&v.d, &w.d) {
        return Err(Error::NotChainMap { degree: deg });
    }
    let hv = v.cohomology()?;
    let hw = w.cohomology()?;
    let blocks = induced_map_on_cohomology(f, &hv, &hw)?;
    let mut per_degree = BTreeMap::new();
    let mut ok = true;
    let mut degs: std::collections::BTreeSet<i32> = hv.dims().keys().copied().collect();
    degs.extend(hw.dims().keys().copied());
    for i in degs {
        let n = hv.dim(i);
        let m = hw.dim(i);
        let bij = match blocks.get(&i) {
            Some(b) => b.rank() == n && n == m,
            None => n == 0 && m == 0,
        };
        ok &= bij;
        per_degree.insert(i, (n, m, bij));
    }
    Ok(QuasiIsoReport {
        is_quasi_iso: ok,
        per_degree,
    })
}
