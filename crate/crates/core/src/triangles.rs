//! Embedded triangles in nice triple diagrams, their overlaps, and the
//! triangle map `x -> F(x ⊗ Θ)` split by Spin^c class.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{HfError, Result};
use crate::floer::{Connections, FloerComplex, Generator};
use crate::gf2::Gf2Matrix;
use crate::lattice::{Hnf, IVec};
use crate::surface::{CurveClass, CurveId, Diagram, Domain};

/// An embedded triangle with corners on alpha∩beta, beta∩gamma and alpha∩gamma.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EmbeddedTriangle {
    /// Corners `[x, w, y]`: the alpha∩beta, beta∩gamma and alpha∩gamma vertices.
    pub corners: [usize; 3],
    /// Whether the boundary runs x -alpha-> y -gamma-> w -beta-> x with the
    /// triangle on its left. Only positive triangles contribute to the map.
    pub positive: bool,
    pub domain: Domain,
}

impl EmbeddedTriangle {
    pub fn euler_measure(&self, d: &Diagram) -> BigRational {
        self.domain.euler_measure(d)
    }

    /// Index of this triangle as a one-component collection: `2e - chi + m/2` with chi = m = 1.
    pub fn index(&self, d: &Diagram) -> BigRational {
        triangle_index(&self.euler_measure(d), 1, 1)
    }

    /// Whether the triangle's quadrant at a corner vertex lies in `dom`.
    fn corner_in(&self, d: &Diagram, v: usize, dom: &Domain) -> bool {
        let q = self.domain.corner_data(d, v).quadrants;
        let quads = d.quadrants(v);
        (0..4).any(|i| q[i] == 1 && dom.coeffs[quads[i]] == 1)
    }
}

/// `mu = 2 e(D) - chi(S) + m / 2`.
pub fn triangle_index(e: &BigRational, chi_s: i64, m: i64) -> BigRational {
    e * BigRational::from_integer(2.into()) - BigRational::from_integer(chi_s.into())
        + BigRational::new(m.into(), 2.into())
}

/// `mu = e(D) + br - m / 4`, with `br` the branching.
pub fn triangle_index_branch(e: &BigRational, br: &BigRational, m: i64) -> BigRational {
    e + br - BigRational::new(m.into(), 4.into())
}

/// Euler characteristic of the source from the branching: `chi(S) = e(D) + 3m/4 - br`.
pub fn source_euler_from_branch(e: &BigRational, br: &BigRational, m: i64) -> BigRational {
    e + BigRational::new((3 * m).into(), 4.into()) - br
}

fn class_pair(d: &Diagram, v: usize) -> (CurveClass, CurveClass) {
    let (a, b) = d.vertex_curves(v);
    if a.class < b.class {
        (a.class, b.class)
    } else {
        (b.class, a.class)
    }
}

/// Checks shared by the search and the brute-force oracle: a 0/1 domain
/// avoiding basepoints whose support is an embedded disk with exactly three
/// convex corners, one of each crossing type. Returns the triangle if so.
pub fn as_triangle(d: &Diagram, dom: &Domain) -> Option<EmbeddedTriangle> {
    if dom.is_zero() || !dom.avoids_basepoints(d) {
        return None;
    }
    let shape = d.shape(dom)?;
    if !shape.is_embedded_disk() || shape.convex.len() != 3 {
        return None;
    }
    use CurveClass::*;
    let mut corners = [usize::MAX; 3];
    let mut positive = None;
    for &(v, quadrant) in &shape.convex {
        let slot = match class_pair(d, v) {
            (Alpha, Beta) => 0,
            (Beta, Gamma) => 1,
            (Alpha, Gamma) => 2,
            _ => return None,
        };
        if corners[slot] != usize::MAX {
            return None;
        }
        corners[slot] = v;
        if slot == 0 {
            // The boundary leaves the corner along the ray bounding the covered quadrant on its right.
            let out = d.rays(v)[quadrant];
            positive = Some(d.edges()[out.edge].curve.class == Alpha);
        }
    }
    if corners.contains(&usize::MAX) {
        return None;
    }
    // With three convex corners and no other turning, the three sides lie on single curves,
    // so the corner vertices must pairwise share those curves.
    let (x, w, y) = (corners[0], corners[1], corners[2]);
    let on = |v: usize, c: CurveClass| d.vertex_curve_of(v, c);
    if on(x, Alpha) != on(y, Alpha) || on(x, Beta) != on(w, Beta) || on(w, Gamma) != on(y, Gamma) {
        return None;
    }
    Some(EmbeddedTriangle { corners, positive: positive?, domain: dom.clone() })
}

/// All embedded triangles avoiding the basepoints, found by trying every
/// corner triple and every choice of boundary arcs. Sorted.
pub fn enumerate_triangles(d: &Diagram) -> Result<Vec<EmbeddedTriangle>> {
    if !d.is_triple() {
        return Err(HfError::rejected("triangles need a triple diagram"));
    }
    let ne = d.edges().len();
    let base = d.basepoints()[0];
    let ab = d.crossings(CurveClass::Alpha, CurveClass::Beta);
    let bg = d.crossings(CurveClass::Beta, CurveClass::Gamma);
    let ag = d.crossings(CurveClass::Alpha, CurveClass::Gamma);
    let found: Vec<Vec<EmbeddedTriangle>> = ab
        .par_iter()
        .map(|&x| {
            let alpha = d.vertex_curve_of(x, CurveClass::Alpha).expect("alpha corner");
            let beta = d.vertex_curve_of(x, CurveClass::Beta).expect("beta corner");
            let mut out = Vec::new();
            for &w in bg.iter().filter(|&&w| d.vertex_curve_of(w, CurveClass::Beta) == Some(beta)) {
                let gamma = d.vertex_curve_of(w, CurveClass::Gamma).expect("gamma corner");
                for &y in ag.iter().filter(|&&y| {
                    d.vertex_curve_of(y, CurveClass::Alpha) == Some(alpha)
                        && d.vertex_curve_of(y, CurveClass::Gamma) == Some(gamma)
                }) {
                    // Positive: alpha x->y, gamma y->w, beta w->x; negative: the reverse cycle.
                    let cycles: [[(CurveId, usize, usize); 3]; 2] =
                        [[(alpha, x, y), (gamma, y, w), (beta, w, x)], [(alpha, y, x), (beta, x, w), (gamma, w, y)]];
                    for arcs in cycles {
                        for mask in 0..8u32 {
                            let mut chain = vec![0i64; ne];
                            for (bit, &(c, from, to)) in arcs.iter().enumerate() {
                                d.add_arc(&mut chain, c, from, to, mask >> bit & 1 == 0).expect("corner on curve");
                            }
                            if let Some(dom) = d.domain_with_boundary(&chain, base) {
                                if let Some(t) = as_triangle(d, &dom) {
                                    out.push(t);
                                }
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    let mut all: Vec<EmbeddedTriangle> = found.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    for t in &all {
        if t.euler_measure(d) != BigRational::new(1.into(), 4.into()) {
            return Err(HfError::consistency(format!("triangle with corners {:?} has Euler measure {}", t.corners, t.euler_measure(d))));
        }
    }
    Ok(all)
}

/// Reference enumeration: every 0/1 domain, filtered by [`as_triangle`].
/// Exponential in the number of regions; meant for small diagrams.
pub fn brute_force_triangles(d: &Diagram) -> Vec<EmbeddedTriangle> {
    let nr = d.regions().len();
    assert!(nr <= 24, "brute force over {nr} regions is too large");
    let mut out: Vec<EmbeddedTriangle> = (1u32..1 << nr)
        .into_par_iter()
        .filter_map(|mask| {
            let dom = Domain { coeffs: (0..nr).map(|r| (mask >> r & 1) as i64).collect() };
            as_triangle(d, &dom)
        })
        .collect();
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Overlap {
    Disjoint,
    HeadToTail,
    Forbidden,
}

/// Classify how two embedded triangles overlap.
pub fn overlap_type(d: &Diagram, t: &EmbeddedTriangle, u: &EmbeddedTriangle) -> Overlap {
    let inter = Domain { coeffs: t.domain.coeffs.iter().zip(&u.domain.coeffs).map(|(a, b)| a.min(b).to_owned()).collect() };
    if inter.is_zero() {
        return Overlap::Disjoint;
    }
    if inter == t.domain || inter == u.domain {
        return Overlap::Forbidden;
    }
    let Some(shape) = d.shape(&inter) else { return Overlap::Forbidden };
    if !shape.is_embedded_disk() || shape.convex.len() != 3 {
        return Overlap::Forbidden;
    }
    let in_t = t.corners.iter().filter(|&&v| t.corner_in(d, v, &inter)).count();
    let in_u = u.corners.iter().filter(|&&v| u.corner_in(d, v, &inter)).count();
    match (in_t, in_u) {
        (1, 0) | (0, 1) => Overlap::HeadToTail,
        _ => Overlap::Forbidden,
    }
}

/// Spin^c label of a triangle collection on the triple diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriangleClassLabel {
    /// Spin^c classes of the three corner generators in their double diagrams.
    pub corner_classes: [usize; 3],
    /// Canonical residue of the normalised total domain.
    pub residue: IVec,
}

/// One of the three double diagrams of a triple diagram, with its complex and
/// the translation between its vertex ids and those of the triple diagram.
#[derive(Clone, Debug)]
pub struct PairComplex {
    pub classes: (CurveClass, CurveClass),
    pub complex: FloerComplex,
    /// Triple-diagram vertex of each vertex of the pair diagram.
    pub vertex: Vec<usize>,
    /// Pair-diagram region containing each triple-diagram region.
    pub region: Vec<usize>,
    /// Generators in triple-diagram vertex ids.
    pub generators: Vec<Generator>,
    pub index: BTreeMap<Generator, usize>,
    conn: Connections,
}

impl PairComplex {
    pub fn new(d: &Diagram, a: CurveClass, b: CurveClass) -> Result<PairComplex> {
        let (pd, region) = d.pair(a, b)?;
        let vertex = d.crossings(a, b);
        if vertex.len() != pd.vertices().len() {
            return Err(HfError::consistency("pair diagram vertex count mismatch"));
        }
        let complex = FloerComplex::new(&pd)?;
        let generators: Vec<Generator> =
            complex.generators.iter().map(|g| g.iter().map(|&v| vertex[v]).collect()).collect();
        let index = generators.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        let conn = Connections::new(&pd);
        Ok(PairComplex { classes: (a, b), complex, vertex, region, generators, index, conn })
    }

    /// A domain of the pair diagram, seen on the regions of the triple diagram.
    pub fn pull_back(&self, dom: &Domain) -> Domain {
        Domain { coeffs: self.region.iter().map(|&r| dom.coeffs[r]).collect() }
    }

    /// Some domain of the pair diagram from `x` to `y` (triple vertex ids), pulled back.
    pub fn connecting(&self, x: &[usize], y: &[usize]) -> Option<Domain> {
        let inv: BTreeMap<usize, usize> = self.vertex.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let px: Vec<usize> = x.iter().map(|v| inv[v]).collect();
        let py: Vec<usize> = y.iter().map(|v| inv[v]).collect();
        self.conn.connecting_domain(&px, &py).map(|dm| self.pull_back(&dm))
    }

    pub fn periodic_pulled_back(&self) -> Vec<Domain> {
        self.conn
            .periodic_domains()
            .iter()
            .map(|p| self.pull_back(p))
            .collect()
    }
}

/// The triangle map `x -> F(x ⊗ Θ)` of a nice triple diagram, one matrix per Spin^c class.
#[derive(Clone, Debug)]
pub struct TriangleMap {
    pub ab: PairComplex,
    pub bg: PairComplex,
    pub ag: PairComplex,
    /// Θ as a cycle: indices of beta-gamma generators.
    pub theta: Vec<usize>,
    pub triangles: Vec<EmbeddedTriangle>,
    pub labels: Vec<TriangleClassLabel>,
    /// Per class: rows are alpha-gamma generators, columns alpha-beta generators.
    pub matrices: Vec<Gf2Matrix>,
    /// Number of counted collections (before reduction mod 2), for reporting.
    pub collections: usize,
}

impl TriangleMap {
    pub fn new(d: &Diagram) -> Result<TriangleMap> {
        if !d.is_triple() {
            return Err(HfError::rejected("the triangle map needs a triple diagram"));
        }
        if !d.is_nice() {
            return Err(HfError::rejected("triangle counting needs a nice triple diagram"));
        }
        if !d.is_weakly_admissible() {
            return Err(HfError::rejected("triple diagram is not weakly admissible"));
        }
        use CurveClass::*;
        let ab = PairComplex::new(d, Alpha, Beta)?;
        let bg = PairComplex::new(d, Beta, Gamma)?;
        let ag = PairComplex::new(d, Alpha, Gamma)?;
        let theta = bg.complex.theta_top()?;
        let triangles = enumerate_triangles(d)?;
        let positive: Vec<&EmbeddedTriangle> = triangles.iter().filter(|t| t.positive).collect();

        let nr = d.regions().len();
        let lattice_gens: Vec<IVec> = [&ab, &bg, &ag]
            .iter()
            .flat_map(|p| p.periodic_pulled_back())
            .map(|p| p.coeffs.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        let lattice = Hnf::without_relations(&lattice_gens, nr);

        let w_class = bg.complex.class_of[theta[0]];
        let w_ref = &bg.generators[bg.complex.classes[w_class].members[0]];

        let overlaps: BTreeMap<(usize, usize), Overlap> = (0..positive.len())
            .flat_map(|i| (i + 1..positive.len()).map(move |j| (i, j)))
            .map(|(i, j)| ((i, j), overlap_type(d, positive[i], positive[j])))
            .collect();

        // Θ may be a sum of generators; the map is linear in it.
        let mut counts: BTreeMap<(TriangleClassLabel, usize, usize), usize> = BTreeMap::new();
        let mut collections = 0;
        for &wi in &theta {
            let w = &bg.generators[wi];
            let w_fix = bg.connecting(w_ref, w).ok_or_else(|| HfError::consistency("theta not connected to its class"))?;
            for (xi, x) in ab.generators.iter().enumerate() {
                // For each coordinate, the positive triangles starting at x_i and using w's point on the same beta curve.
                let mut options: Vec<Vec<usize>> = Vec::new();
                for &p in x {
                    let beta = d.vertex_curve_of(p, Beta).expect("beta");
                    let wp = *w.iter().find(|&&q| d.vertex_curve_of(q, Beta) == Some(beta)).expect("theta covers beta");
                    options.push(
                        (0..positive.len()).filter(|&t| positive[t].corners[0] == p && positive[t].corners[1] == wp).collect(),
                    );
                }
                let mut chosen = Vec::new();
                let mut found: Vec<Vec<usize>> = Vec::new();
                choose(&options, &overlaps, &mut chosen, &mut found);
                for combo in found {
                    collections += 1;
                    let y: Generator = combo.iter().map(|&t| positive[t].corners[2]).collect();
                    let yi = *ag.index.get(&y).ok_or_else(|| HfError::consistency("collection ends at a non-generator"))?;
                    let mut total = Domain::zero(nr);
                    for &t in &combo {
                        total = total.add(&positive[t].domain);
                    }
                    let label = collection_label(&ab, &ag, &lattice, &w_fix, w_class, xi, yi, &total)?;
                    *counts.entry((label, yi, xi)).or_default() += 1;
                }
            }
        }

        let mut labels: Vec<TriangleClassLabel> = counts.keys().map(|(l, _, _)| l.clone()).collect();
        labels.dedup();
        let mut matrices = vec![Gf2Matrix::zeros(ag.generators.len(), ab.generators.len()); labels.len()];
        for ((label, yi, xi), n) in &counts {
            let c = labels.binary_search(label).expect("label listed");
            if n % 2 == 1 {
                matrices[c].toggle(*yi, *xi);
            }
        }
        let map = TriangleMap { ab, bg, ag, theta, triangles, labels, matrices, collections };
        map.check_chain_map()?;
        Ok(map)
    }

    /// `∂_ag F = F ∂_ab` for every class.
    pub fn check_chain_map(&self) -> Result<()> {
        for (c, m) in self.matrices.iter().enumerate() {
            let lhs = self.ag.complex.differential.mul(m);
            let rhs = m.mul(&self.ab.complex.differential);
            if lhs != rhs {
                return Err(HfError::consistency(format!("triangle map of class {c} is not a chain map")));
            }
        }
        Ok(())
    }

    /// Rank of the map induced on homology by the class-`c` matrix.
    pub fn rank(&self, c: usize) -> usize {
        crate::gf2::induced_rank(&self.matrices[c], &self.ab.complex.differential, &self.ag.complex.differential)
    }

    /// Rank on homology of the sum over all classes.
    pub fn total_rank(&self) -> usize {
        let sum = self
            .matrices
            .iter()
            .fold(Gf2Matrix::zeros(self.ag.generators.len(), self.ab.generators.len()), |acc, m| acc.add(m));
        crate::gf2::induced_rank(&sum, &self.ab.complex.differential, &self.ag.complex.differential)
    }

    /// The generators summing to Θ, in triple-diagram vertex ids.
    pub fn theta_generators(&self) -> Vec<&Generator> {
        self.theta.iter().map(|&i| &self.bg.generators[i]).collect()
    }
}

fn choose(options: &[Vec<usize>], overlaps: &BTreeMap<(usize, usize), Overlap>, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if chosen.len() == options.len() {
        out.push(chosen.clone());
        return;
    }
    for &t in &options[chosen.len()] {
        let ok = chosen.iter().all(|&s| {
            s != t && {
                let key = if s < t { (s, t) } else { (t, s) };
                overlaps[&key] != Overlap::Forbidden
            }
        });
        if ok {
            chosen.push(t);
            choose(options, overlaps, chosen, out);
            chosen.pop();
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn collection_label(
    ab: &PairComplex,
    ag: &PairComplex,
    lattice: &Hnf,
    w_fix: &Domain,
    w_class: usize,
    xi: usize,
    yi: usize,
    total: &Domain,
) -> Result<TriangleClassLabel> {
    let x_class = ab.complex.class_of[xi];
    let y_class = ag.complex.class_of[yi];
    let x_ref = &ab.generators[ab.complex.classes[x_class].members[0]];
    let y_ref = &ag.generators[ag.complex.classes[y_class].members[0]];
    let to_x = ab.connecting(x_ref, &ab.generators[xi]).ok_or_else(|| HfError::consistency("no alpha-beta connecting domain"))?;
    let from_y = ag.connecting(&ag.generators[yi], y_ref).ok_or_else(|| HfError::consistency("no alpha-gamma connecting domain"))?;
    let normalised = total.add(&to_x).add(w_fix).add(&from_y);
    let v: IVec = normalised.coeffs.iter().map(|&c| BigInt::from(c)).collect();
    Ok(TriangleClassLabel { corner_classes: [x_class, w_class, y_class], residue: lattice.residue(&v) })
}
