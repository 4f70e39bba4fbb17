//! Finite-support Z-graded rational vector spaces, graded elements and
//! degree-homogeneous linear maps stored as per-degree blocks.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::rational::{rzero, Rat};

/// A finite-support Z-graded vector space with named basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    labels: BTreeMap<i32, Vec<String>>,
}

impl GradedSpace {
    pub fn zero() -> Self {
        GradedSpace {
            labels: BTreeMap::new(),
        }
    }

    pub fn new(labels: BTreeMap<i32, Vec<String>>) -> Result<Self> {
        for (deg, names) in &labels {
            let mut seen = std::collections::BTreeSet::new();
            for n in names {
                if !seen.insert(n) {
                    return Err(Error::DimensionMismatch(format!(
                        "duplicate basis label `{n}` in degree {deg}"
                    )));
                }
            }
        }
        let labels = labels.into_iter().filter(|(_, v)| !v.is_empty()).collect();
        Ok(GradedSpace { labels })
    }

    /// Space with anonymous labels `prefix{deg}_{idx}` and given dimensions.
    pub fn with_dims(dims: &[(i32, usize)], prefix: &str) -> Self {
        let mut labels = BTreeMap::new();
        for &(deg, n) in dims {
            if n == 0 {
                continue;
            }
            labels.insert(
                deg,
                (0..n).map(|i| format!("{prefix}{deg}_{i}")).collect(),
            );
        }
        GradedSpace { labels }
    }

    pub fn dim(&self, deg: i32) -> usize {
        self.labels.get(&deg).map_or(0, |v| v.len())
    }

    pub fn total_dim(&self) -> usize {
        self.labels.values().map(|v| v.len()).sum()
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.labels.keys().copied().collect()
    }

    /// Degrees d such that either V^d or V^{d+shift_window} could matter;
    /// here simply min..=max support bounds extended by `pad`.
    pub fn degree_range(&self, pad: i32) -> std::ops::RangeInclusive<i32> {
        match (self.labels.keys().min(), self.labels.keys().max()) {
            (Some(&lo), Some(&hi)) => (lo - pad)..=(hi + pad),
            _ => 0..=0,
        }
    }

    pub fn labels(&self, deg: i32) -> &[String] {
        self.labels.get(&deg).map_or(&[], |v| v.as_slice())
    }

    pub fn label_index(&self, deg: i32, label: &str) -> Option<usize> {
        self.labels(deg).iter().position(|l| l == label)
    }

    pub fn dims_map(&self) -> BTreeMap<i32, usize> {
        self.labels.iter().map(|(d, v)| (*d, v.len())).collect()
    }

    pub fn labels_map(&self) -> &BTreeMap<i32, Vec<String>> {
        &self.labels
    }

    /// Basis element by degree and index.
    pub fn basis_element(&self, deg: i32, idx: usize) -> GradedElement {
        assert!(idx < self.dim(deg));
        let mut v = vec![rzero(); self.dim(deg)];
        v[idx] = crate::rational::rone();
        GradedElement::from_degree(deg, v)
    }

    pub fn basis(&self) -> Vec<(i32, usize)> {
        let mut out = Vec::new();
        for (&deg, names) in &self.labels {
            for i in 0..names.len() {
                out.push((deg, i));
            }
        }
        out
    }

    /// Shifted space: result degree j holds the input's degree i+j piece.
    pub fn shifted(&self, i: i32) -> GradedSpace {
        GradedSpace {
            labels: self
                .labels
                .iter()
                .map(|(&d, v)| (d - i, v.clone()))
                .collect(),
        }
    }
}

/// A finite-support element of a graded space; zero degrees are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    coords: BTreeMap<i32, Vec<Rat>>,
}

impl GradedElement {
    pub fn zero() -> Self {
        GradedElement {
            coords: BTreeMap::new(),
        }
    }

    pub fn from_degree(deg: i32, v: Vec<Rat>) -> Self {
        let mut e = GradedElement::zero();
        e.set_degree(deg, v);
        e
    }

    pub fn set_degree(&mut self, deg: i32, v: Vec<Rat>) {
        if v.iter().all(|x| x.is_zero()) {
            self.coords.remove(&deg);
        } else {
            self.coords.insert(deg, v);
        }
    }

    pub fn degree_part(&self, deg: i32, dim: usize) -> Vec<Rat> {
        match self.coords.get(&deg) {
            Some(v) => {
                assert_eq!(v.len(), dim, "degree {deg} coordinate length mismatch");
                v.clone()
            }
            None => vec![rzero(); dim],
        }
    }

    pub fn support(&self) -> Vec<i32> {
        self.coords.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// The single degree of a homogeneous element, if any.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let degs = self.support();
        match degs.len() {
            0 => None,
            1 => Some(degs[0]),
            _ => None,
        }
    }

    pub fn add(&self, other: &GradedElement) -> GradedElement {
        let mut out = self.clone();
        for (&deg, v) in &other.coords {
            let mut cur = out.coords.remove(&deg).unwrap_or_else(|| vec![rzero(); v.len()]);
            assert_eq!(cur.len(), v.len());
            for (a, b) in cur.iter_mut().zip(v.iter()) {
                *a += b;
            }
            out.set_degree(deg, cur);
        }
        out
    }

    pub fn sub(&self, other: &GradedElement) -> GradedElement {
        self.add(&other.scale(&-crate::rational::rone()))
    }

    pub fn scale(&self, s: &Rat) -> GradedElement {
        if s.is_zero() {
            return GradedElement::zero();
        }
        let mut out = self.clone();
        for v in out.coords.values_mut() {
            for a in v.iter_mut() {
                *a *= s;
            }
        }
        out
    }

    /// Validates membership in a space (degree support and lengths).
    pub fn check_in(&self, space: &GradedSpace) -> Result<()> {
        for (&deg, v) in &self.coords {
            if v.len() != space.dim(deg) {
                return Err(Error::DimensionMismatch(format!(
                    "element has {} coordinates in degree {deg}, space has dimension {}",
                    v.len(),
                    space.dim(deg)
                )));
            }
        }
        Ok(())
    }

    pub fn coords_map(&self) -> &BTreeMap<i32, Vec<Rat>> {
        &self.coords
    }
}

/// A degree-homogeneous linear map between graded spaces, stored as one
/// rational block per source degree. Missing blocks are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub source: GradedSpace,
    pub target: GradedSpace,
    pub degree: i32,
    blocks: BTreeMap<i32, Mat>,
}

impl LinearMap {
    pub fn zero(source: GradedSpace, target: GradedSpace, degree: i32) -> Self {
        LinearMap {
            source,
            target,
            degree,
            blocks: BTreeMap::new(),
        }
    }

    pub fn identity(space: &GradedSpace) -> Self {
        let mut m = LinearMap::zero(space.clone(), space.clone(), 0);
        for deg in space.degrees() {
            m.set_block(deg, Mat::identity(space.dim(deg)));
        }
        m
    }

    pub fn new(
        source: GradedSpace,
        target: GradedSpace,
        degree: i32,
        blocks: BTreeMap<i32, Mat>,
    ) -> Result<Self> {
        for (&j, b) in &blocks {
            let (rows, cols) = (target.dim(j + degree), source.dim(j));
            if (b.rows(), b.cols()) != (rows, cols) {
                return Err(Error::DimensionMismatch(format!(
                    "block at source degree {j}: expected {rows}x{cols}, got {}x{}",
                    b.rows(),
                    b.cols()
                )));
            }
        }
        let blocks = blocks.into_iter().filter(|(_, b)| !b.is_zero()).collect();
        Ok(LinearMap {
            source,
            target,
            degree,
            blocks,
        })
    }

    pub fn set_block(&mut self, src_deg: i32, block: Mat) {
        assert_eq!(block.cols(), self.source.dim(src_deg));
        assert_eq!(block.rows(), self.target.dim(src_deg + self.degree));
        if block.is_zero() {
            self.blocks.remove(&src_deg);
        } else {
            self.blocks.insert(src_deg, block);
        }
    }

    /// The block out of source degree `j` (zero matrix when absent).
    pub fn block(&self, j: i32) -> Mat {
        match self.blocks.get(&j) {
            Some(b) => b.clone(),
            None => Mat::zeros(self.target.dim(j + self.degree), self.source.dim(j)),
        }
    }

    pub fn apply(&self, x: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for (&j, v) in x.coords_map() {
            if self.source.dim(j) == 0 {
                continue;
            }
            let b = self.block(j);
            let y = b.mul_vec(v);
            let tdeg = j + self.degree;
            let cur = out.degree_part(tdeg, self.target.dim(tdeg));
            let sum: Vec<Rat> = cur.iter().zip(y.iter()).map(|(a, b)| a + b).collect();
            out.set_degree(tdeg, sum);
        }
        out
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(other.target, self.source, "composition source mismatch");
        let mut out = LinearMap::zero(
            other.source.clone(),
            self.target.clone(),
            self.degree + other.degree,
        );
        for j in other.source.degrees() {
            let mid = j + other.degree;
            if self.source.dim(mid) == 0 || out.target.dim(j + out.degree) == 0 {
                continue;
            }
            out.set_block(j, self.block(mid).mul(&other.block(j)));
        }
        out
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let mut out = LinearMap::zero(self.source.clone(), self.target.clone(), self.degree);
        for j in self.source.degrees() {
            if self.target.dim(j + self.degree) == 0 {
                continue;
            }
            out.set_block(j, self.block(j).add(&other.block(j)));
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> LinearMap {
        let mut out = self.clone();
        let keys: Vec<i32> = out.blocks.keys().copied().collect();
        for j in keys {
            let b = out.blocks.remove(&j).unwrap().scale(s);
            if !b.is_zero() {
                out.blocks.insert(j, b);
            }
        }
        out
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        self.add(&other.scale(&-crate::rational::rone()))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks_map(&self) -> &BTreeMap<i32, Mat> {
        &self.blocks
    }

    /// First source degree where `d_T ∘ f - f ∘ d_S` is nonzero, or None
    /// when `self` is a chain map.
    pub fn chain_map_defect(&self, d_source: &LinearMap, d_target: &LinearMap) -> Option<i32> {
        let diff = d_target.compose(self).sub(&self.compose(d_source));
        diff.blocks.keys().next().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rint;

    fn two_term() -> GradedSpace {
        GradedSpace::with_dims(&[(0, 1), (1, 1)], "e")
    }

    #[test]
    fn apply_and_compose() {
        let v = two_term();
        let mut d = LinearMap::zero(v.clone(), v.clone(), 1);
        d.set_block(0, Mat::from_int_rows(&[&[2]]));
        let x = v.basis_element(0, 0);
        let y = d.apply(&x);
        assert_eq!(y.degree_part(1, 1), vec![rint(2)]);
        // d^2 = 0 automatically: block out of degree 1 lands in empty degree 2
        let dd = d.compose(&d);
        assert!(dd.is_zero());
    }

    #[test]
    fn element_arithmetic_normalizes() {
        let v = two_term();
        let x = v.basis_element(0, 0);
        let z = x.sub(&x);
        assert!(z.is_zero());
        assert_eq!(z.support(), Vec::<i32>::new());
    }
}
