use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{CurveClass, Diagram, Domain};
use crate::lattice::{kernel, Hnf, IVec};
use crate::lp;

impl Diagram {
    /// Sign of each edge relative to the orientation of its curve (see [`Diagram::curve_sides`]).
    pub fn edge_signs(&self) -> Vec<i64> {
        let mut sign = vec![0; self.edges().len()];
        for c in self.curves() {
            for s in self.curve_sides(c) {
                sign[s.edge] = if s.forward { 1 } else { -1 };
            }
        }
        sign
    }

    /// Integral basis of the domains whose boundary is a combination of whole
    /// curves of `classes`, normalised to vanish in every region listed in
    /// `zero_regions`. The basis is in Hermite normal form, so it is canonical.
    pub fn periodic_lattice(&self, classes: &[CurveClass], zero_regions: &[usize]) -> Vec<Domain> {
        let nr = self.regions().len();
        let curves: Vec<_> = self.curves().filter(|c| classes.contains(&c.class)).collect();
        let width = nr + curves.len();
        let sign = self.edge_signs();
        let mut rows: Vec<IVec> = Vec::new();
        for (e, edge) in self.edges().iter().enumerate() {
            let mut row = vec![BigInt::zero(); width];
            row[edge.left] += 1;
            row[edge.right] -= 1;
            if let Some(ci) = curves.iter().position(|&c| c == edge.curve) {
                row[nr + ci] -= sign[e];
            }
            rows.push(row);
        }
        for &r in zero_regions {
            let mut row = vec![BigInt::zero(); width];
            row[r] = BigInt::one();
            rows.push(row);
        }
        let projected: Vec<IVec> = kernel(&rows, width).into_iter().map(|v| v[..nr].to_vec()).collect();
        Hnf::without_relations(&projected, nr)
            .rows
            .into_iter()
            .map(|v| Domain { coeffs: v.iter().map(|x| x.to_i64().expect("small periodic domain")).collect() })
            .collect()
    }

    /// Periodic domains for the given classes, modulo the fundamental class
    /// (normalised to multiplicity zero at the first basepoint).
    pub fn periodic_domain_basis(&self, classes: &[CurveClass]) -> Vec<Domain> {
        self.periodic_lattice(classes, &self.basepoints()[..1])
    }

    /// A nonzero periodic domain (for all classes present) that is nonnegative
    /// everywhere and vanishes at every basepoint, if one exists.
    pub fn admissibility_witness(&self) -> Option<Domain> {
        let basis = self.periodic_lattice(&self.classes(), self.basepoints());
        if basis.is_empty() {
            return None;
        }
        let nr = self.regions().len();
        let q = |x: i64| BigRational::from_integer(x.into());
        let mut a: Vec<Vec<BigRational>> = (0..nr).map(|r| basis.iter().map(|p| q(p.coeffs[r])).collect()).collect();
        let mut b = vec![BigRational::zero(); nr];
        a.push(basis.iter().map(|p| q(p.coeffs.iter().sum())).collect());
        b.push(BigRational::one());
        let w = lp::feasible(&a, &b)?;
        let denom = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let coeffs: Vec<BigInt> = w.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect();
        let g = coeffs.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let mut dom = Domain::zero(nr);
        for (p, c) in basis.iter().zip(&coeffs) {
            let c = (c / &g).to_i64().expect("small witness");
            dom = dom.add(&p.scale(c));
        }
        debug_assert!(dom.is_nonnegative() && !dom.is_zero() && !g.is_negative());
        Some(dom)
    }

    /// No nonzero nonnegative periodic domain avoids all basepoints.
    pub fn is_weakly_admissible(&self) -> bool {
        self.admissibility_witness().is_none()
    }
}
