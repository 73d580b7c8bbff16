use num_rational::BigRational;
use num_traits::Zero;

use super::{Diagram, Side};

/// A two-chain: one integer coefficient per region.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domain {
    pub coeffs: Vec<i64>,
}

/// Coefficients of a domain in the four quadrants around a vertex, in rotation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerData {
    pub vertex: usize,
    pub quadrants: [i64; 4],
}

impl Domain {
    pub fn zero(n_regions: usize) -> Self {
        Domain { coeffs: vec![0; n_regions] }
    }

    pub fn region(n_regions: usize, r: usize) -> Self {
        let mut d = Domain::zero(n_regions);
        d.coeffs[r] = 1;
        d
    }

    /// The fundamental class: every region with coefficient one.
    pub fn whole(n_regions: usize) -> Self {
        Domain { coeffs: vec![1; n_regions] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&r| self.coeffs[r] != 0).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Domain) -> Domain {
        Domain { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Domain) -> Domain {
        Domain { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, k: i64) -> Domain {
        Domain { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Multiplicity at basepoint `i`.
    pub fn n_z(&self, d: &Diagram, i: usize) -> i64 {
        self.coeffs[d.basepoints()[i]]
    }

    /// Sum of multiplicities at all basepoints.
    pub fn n_z_total(&self, d: &Diagram) -> i64 {
        d.basepoints().iter().map(|&r| self.coeffs[r]).sum()
    }

    /// Whether every basepoint has multiplicity zero.
    pub fn avoids_basepoints(&self, d: &Diagram) -> bool {
        d.basepoints().iter().all(|&r| self.coeffs[r] == 0)
    }

    pub fn corner_data(&self, d: &Diagram, v: usize) -> CornerData {
        CornerData { vertex: v, quadrants: d.quadrants(v).map(|r| self.coeffs[r]) }
    }

    /// Average of the four quadrant coefficients at `v`, as a rational.
    pub fn point_measure(&self, d: &Diagram, v: usize) -> BigRational {
        let q = self.corner_data(d, v).quadrants;
        BigRational::new((q.iter().sum::<i64>()).into(), 4.into())
    }

    pub fn boundary(&self, d: &Diagram) -> Vec<i64> {
        domain_boundary(d, self)
    }

    pub fn euler_measure(&self, d: &Diagram) -> BigRational {
        euler_measure(d, self)
    }
}

/// Euler measure of a single region: `chi - corners / 4`.
pub fn region_euler_measure(d: &Diagram, r: usize) -> BigRational {
    let chi = d.regions()[r].euler_characteristic();
    BigRational::new((4 * chi - d.corner_count(r) as i64).into(), 4.into())
}

pub fn euler_measure(d: &Diagram, dom: &Domain) -> BigRational {
    let mut quarters = 0i64;
    for (r, &c) in dom.coeffs.iter().enumerate() {
        if c != 0 {
            let chi = d.regions()[r].euler_characteristic();
            quarters += c * (4 * chi - d.corner_count(r) as i64);
        }
    }
    if quarters == 0 {
        return BigRational::zero();
    }
    BigRational::new(quarters.into(), 4.into())
}

/// Per-edge multiplicity of the boundary, oriented along the edge:
/// coefficient on the left minus coefficient on the right.
pub fn domain_boundary(d: &Diagram, dom: &Domain) -> Vec<i64> {
    d.edges().iter().map(|e| dom.coeffs[e.left] - dom.coeffs[e.right]).collect()
}

/// Boundary multiplicity along a side (positive if the side is traversed with the domain on its left).
pub fn side_multiplicity(d: &Diagram, dom: &Domain, s: Side) -> i64 {
    let e = &d.edges()[s.edge];
    let m = dom.coeffs[e.left] - dom.coeffs[e.right];
    if s.forward {
        m
    } else {
        -m
    }
}
