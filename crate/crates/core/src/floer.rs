//! The hat Heegaard Floer chain complex of a nice double diagram: generators,
//! Spin^c classes, relative gradings, and the differential counting empty
//! embedded bigons and rectangles.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{HfError, Result};
use crate::gf2::{BitVec, Echelon, Gf2Matrix};
use crate::lattice::{Hnf, IVec};
use crate::surface::{CurveClass, CurveId, Diagram, Domain};

/// One intersection point on each alpha curve (indexed by alpha curve), using
/// every beta curve exactly once.
pub type Generator = Vec<usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DiskKind {
    Bigon,
    Rectangle,
}

/// An empty embedded bigon or rectangle from generator `from` to generator `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disk {
    pub from: usize,
    pub to: usize,
    pub kind: DiskKind,
    pub domain: Domain,
}

/// Intersection data of a double diagram, shared by generator enumeration and disk search.
#[derive(Clone, Debug)]
pub struct Crossings {
    /// Alpha and beta curve index of each vertex.
    pub alpha_of: Vec<usize>,
    pub beta_of: Vec<usize>,
    /// Vertices on `alpha_i` and `beta_j`, ascending.
    pub between: Vec<Vec<Vec<usize>>>,
}

impl Crossings {
    pub fn new(d: &Diagram) -> Crossings {
        let n = d.curves_per_class();
        let mut alpha_of = Vec::new();
        let mut beta_of = Vec::new();
        let mut between = vec![vec![Vec::new(); n]; n];
        for v in 0..d.vertices().len() {
            let a = d.vertex_curve_of(v, CurveClass::Alpha).map_or(usize::MAX, |c| c.index);
            let b = d.vertex_curve_of(v, CurveClass::Beta).map_or(usize::MAX, |c| c.index);
            alpha_of.push(a);
            beta_of.push(b);
            if a != usize::MAX && b != usize::MAX {
                between[a][b].push(v);
            }
        }
        Crossings { alpha_of, beta_of, between }
    }
}

/// All generators, in the order found by a depth-first search over alpha
/// curves (ascending), trying crossings in ascending vertex order.
pub fn enumerate_generators(d: &Diagram) -> Vec<Generator> {
    let cx = Crossings::new(d);
    let n = d.curves_per_class();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(i: usize, n: usize, d: &Diagram, cx: &Crossings, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Generator>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for v in d.curve_vertices(CurveId::new(CurveClass::Alpha, i)) {
            let b = cx.beta_of[v];
            if b == usize::MAX || used[b] {
                continue;
            }
            used[b] = true;
            cur.push(v);
            go(i + 1, n, d, cx, cur, used, out);
            cur.pop();
            used[b] = false;
        }
    }
    go(0, n, d, &cx, &mut current, &mut used, &mut out);
    out
}

/// Integer linear algebra for domains connecting generators.
///
/// A domain `D` connects `x` to `y` when the alpha part of its boundary has
/// boundary `y - x` and the beta part has boundary `x - y`. These are linear
/// conditions, one per (vertex, curve through it).
#[derive(Clone, Debug)]
pub struct Connections {
    hnf: Hnf,
    n_vertices: usize,
    n_regions: usize,
}

impl Connections {
    pub fn new(d: &Diagram) -> Connections {
        let nv = d.vertices().len();
        let nr = d.regions().len();
        let mut columns: Vec<IVec> = vec![vec![BigInt::zero(); 2 * nv]; nr];
        for v in 0..nv {
            for ee in d.vertices()[v].rotation {
                let edge = &d.edges()[ee.edge];
                let row = if edge.curve.class == CurveClass::Alpha { 2 * v } else { 2 * v + 1 };
                // An edge ending at v contributes +m(e), one starting at v contributes -m(e).
                let sign = if ee.end == crate::surface::End::Target { 1 } else { -1 };
                columns[edge.left][row] += sign;
                columns[edge.right][row] -= sign;
            }
        }
        Connections { hnf: Hnf::new(&columns, 2 * nv), n_vertices: nv, n_regions: nr }
    }

    fn phi(&self, x: &[usize]) -> IVec {
        let mut v = vec![BigInt::zero(); 2 * self.n_vertices];
        for &p in x {
            v[2 * p] -= 1;
            v[2 * p + 1] += 1;
        }
        v
    }

    /// Canonical label of the Spin^c class of a generator.
    pub fn label(&self, x: &[usize]) -> IVec {
        self.hnf.residue(&self.phi(x))
    }

    /// Some domain from `x` to `y`, if they are in the same class.
    pub fn connecting_domain(&self, x: &[usize], y: &[usize]) -> Option<Domain> {
        let t: IVec = self.phi(x).iter().zip(self.phi(y)).map(|(a, b)| a - b).collect();
        let c = self.hnf.solve(&t)?;
        Some(Domain { coeffs: c.iter().map(|v| v.to_i64().expect("small domain")).collect() })
    }

    /// Basis of the periodic domains (all multiplicities at basepoints allowed).
    pub fn periodic_domains(&self) -> Vec<Domain> {
        self.hnf
            .relations
            .iter()
            .map(|r| Domain { coeffs: r.iter().map(|v| v.to_i64().expect("small domain")).collect() })
            .collect()
    }

    pub fn n_regions(&self) -> usize {
        self.n_regions
    }
}

/// Maslov index of a domain from `x` to `y`: Euler measure plus the average
/// multiplicities at the points of `x` and of `y`.
pub fn maslov_index(d: &Diagram, dom: &Domain, x: &[usize], y: &[usize]) -> BigRational {
    let mut mu = dom.euler_measure(d);
    for &p in x.iter().chain(y) {
        mu += dom.point_measure(d, p);
    }
    mu
}

/// `gr(x) - gr(y)` for a domain from `x` to `y`.
pub fn grading_difference(d: &Diagram, dom: &Domain, x: &[usize], y: &[usize]) -> BigRational {
    maslov_index(d, dom, x, y) - BigRational::from_integer((2 * dom.n_z_total(d)).into())
}

/// All empty embedded bigons and rectangles leaving generator `x`, as
/// (target generator, kind, domain), deduplicated and sorted.
pub fn disks_from(d: &Diagram, cx: &Crossings, x: &[usize]) -> Vec<(Generator, DiskKind, Domain)> {
    let ne = d.edges().len();
    let base = d.basepoints()[0];
    let alpha = |i| CurveId::new(CurveClass::Alpha, i);
    let beta = |j| CurveId::new(CurveClass::Beta, j);
    let mut found: Vec<(Generator, DiskKind, Domain)> = Vec::new();
    let mut consider = |y: Generator, kind: DiskKind, arcs: &[(CurveId, usize, usize)]| {
        for mask in 0..(1u32 << arcs.len()) {
            let mut chain = vec![0i64; ne];
            for (bit, &(c, from, to)) in arcs.iter().enumerate() {
                d.add_arc(&mut chain, c, from, to, mask >> bit & 1 == 0).expect("arc endpoints on curve");
            }
            let Some(dom) = d.domain_with_boundary(&chain, base) else { continue };
            if is_empty_disk(d, &dom, x, &y) {
                found.push((y.clone(), kind, dom));
            }
        }
    };
    let n = x.len();
    for i in 0..n {
        let p = x[i];
        let j = cx.beta_of[p];
        for &q in &cx.between[i][j] {
            if q == p {
                continue;
            }
            let mut y = x.to_vec();
            y[i] = q;
            consider(y, DiskKind::Bigon, &[(alpha(i), p, q), (beta(j), q, p)]);
        }
    }
    for i in 0..n {
        for k in i + 1..n {
            let (p1, p2) = (x[i], x[k]);
            let (j, l) = (cx.beta_of[p1], cx.beta_of[p2]);
            for &q1 in &cx.between[i][l] {
                for &q2 in &cx.between[k][j] {
                    let mut y = x.to_vec();
                    y[i] = q1;
                    y[k] = q2;
                    consider(
                        y,
                        DiskKind::Rectangle,
                        &[(alpha(i), p1, q1), (alpha(k), p2, q2), (beta(l), q1, p2), (beta(j), q2, p1)],
                    );
                }
            }
        }
    }
    found.sort_by(|a, b| (&a.0, a.1, &a.2).cmp(&(&b.0, b.1, &b.2)));
    found.dedup();
    found
}

/// The conditions on a 0/1 domain to count in the differential from `x` to `y`.
pub fn is_empty_disk(d: &Diagram, dom: &Domain, x: &[usize], y: &[usize]) -> bool {
    if !dom.avoids_basepoints(d) {
        return false;
    }
    let Some(shape) = d.shape(dom) else { return false };
    if !shape.is_embedded_disk() {
        return false;
    }
    let mut corners: Vec<usize> = x.iter().zip(y).filter(|(a, b)| a != b).flat_map(|(&a, &b)| [a, b]).collect();
    corners.sort_unstable();
    let mut convex: Vec<usize> = shape.convex.iter().map(|&(v, _)| v).collect();
    convex.sort_unstable();
    if convex != corners {
        return false;
    }
    x.iter().zip(y).filter(|(a, b)| a == b).all(|(&p, _)| dom.corner_data(d, p).quadrants == [0; 4])
}

/// A Spin^c class of generators with its relative gradings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpincClass {
    /// Generator indices, ascending.
    pub members: Vec<usize>,
    /// Canonical residue identifying the class.
    pub residue: IVec,
    /// Whether relative gradings are integers well defined on the class.
    pub graded: bool,
}

/// The hat complex of a nice double diagram.
#[derive(Clone, Debug)]
pub struct FloerComplex {
    pub diagram: Diagram,
    pub generators: Vec<Generator>,
    pub classes: Vec<SpincClass>,
    pub class_of: Vec<usize>,
    /// Relative grading per generator, normalised so each class has minimum 0; `None` if undefined.
    pub gradings: Vec<Option<i64>>,
    /// Entry `(y, x)` is the count of disks from `x` to `y`.
    pub differential: Gf2Matrix,
    pub disks: Vec<Disk>,
}

impl FloerComplex {
    /// Build the complex and check `d^2 = 0`, block-diagonality and the grading drop.
    pub fn new(d: &Diagram) -> Result<FloerComplex> {
        if d.is_triple() {
            return Err(HfError::rejected("the hat complex needs a double diagram; use Diagram::pair first"));
        }
        if !d.is_nice() {
            return Err(HfError::rejected("disk counting needs a nice diagram"));
        }
        let generators = enumerate_generators(d);
        let conn = Connections::new(d);
        let (mut classes, class_of) = spinc_partition(&conn, &generators);
        let gradings = relative_gradings(d, &conn, &generators, &mut classes)?;

        let cx = Crossings::new(d);
        let index: BTreeMap<&Generator, usize> = generators.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let per_x: Vec<Vec<(Generator, DiskKind, Domain)>> =
            generators.par_iter().map(|x| disks_from(d, &cx, x)).collect();
        let n = generators.len();
        let mut differential = Gf2Matrix::zeros(n, n);
        let mut disks = Vec::new();
        for (xi, list) in per_x.into_iter().enumerate() {
            for (y, kind, domain) in list {
                let yi = *index.get(&y).ok_or_else(|| HfError::consistency("disk ends at a non-generator"))?;
                differential.toggle(yi, xi);
                disks.push(Disk { from: xi, to: yi, kind, domain });
            }
        }
        let c = FloerComplex { diagram: d.clone(), generators, classes, class_of, gradings, differential, disks };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<()> {
        if !self.differential.mul(&self.differential).is_zero() {
            return Err(HfError::consistency("d^2 != 0"));
        }
        for (y, x) in self.differential.nonzero_entries() {
            if self.class_of[x] != self.class_of[y] {
                return Err(HfError::consistency(format!("differential joins Spin^c classes ({x} -> {y})")));
            }
            if let (Some(gx), Some(gy)) = (self.gradings[x], self.gradings[y]) {
                if gx - gy != 1 {
                    return Err(HfError::consistency(format!("differential {x} -> {y} changes grading by {}", gx - gy)));
                }
            }
        }
        for disk in &self.disks {
            let x = &self.generators[disk.from];
            let y = &self.generators[disk.to];
            let mu = maslov_index(&self.diagram, &disk.domain, x, y);
            if mu != BigRational::from_integer(1.into()) {
                return Err(HfError::consistency(format!("disk {} -> {} has index {mu}", disk.from, disk.to)));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Differential restricted to one Spin^c class (rows and columns in member order).
    pub fn class_block(&self, class: usize) -> Gf2Matrix {
        let m = &self.classes[class].members;
        self.differential.submatrix(m, m)
    }

    pub fn class_rank(&self, class: usize) -> usize {
        let block = self.class_block(class);
        block.cols() - 2 * block.rank()
    }

    /// Homology rank per grading for one class, ascending by grading; `None` if gradings are undefined.
    pub fn class_rank_by_grading(&self, class: usize) -> Option<Vec<(i64, usize)>> {
        let members = &self.classes[class].members;
        if !self.classes[class].graded {
            return None;
        }
        let mut by: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for &g in members {
            by.entry(self.gradings[g].expect("graded class")).or_default().push(g);
        }
        let mut out = Vec::new();
        for (&k, gens) in &by {
            let below = by.get(&(k - 1)).cloned().unwrap_or_default();
            let above = by.get(&(k + 1)).cloned().unwrap_or_default();
            let out_map = self.differential.submatrix(&below, gens);
            let in_map = self.differential.submatrix(gens, &above);
            let cycles = gens.len() - out_map.rank();
            let rank = cycles - in_map.rank();
            if rank > 0 {
                out.push((k, rank));
            }
        }
        Some(out)
    }

    pub fn total_rank(&self) -> usize {
        let r = self.differential.rank();
        self.len() - 2 * r
    }

    /// A cycle representing the top-graded homology class, as a sorted list of
    /// generator indices.
    ///
    /// Exactly one Spin^c class may carry homology, and its top nonzero grading
    /// must have rank one. Among the cycles in that grading, the one with the
    /// lexicographically smallest support that is not a boundary is returned.
    pub fn theta_top(&self) -> Result<Vec<usize>> {
        let candidates: Vec<usize> = (0..self.classes.len()).filter(|&c| self.class_rank(c) > 0).collect();
        let class = match candidates.as_slice() {
            [c] => *c,
            [] => return Err(HfError::rejected("no Spin^c class carries homology, so there is no top generator")),
            many => {
                return Err(HfError::rejected(format!(
                    "top generator is ambiguous: classes {many:?} all carry homology"
                )))
            }
        };
        let table = self
            .class_rank_by_grading(class)
            .ok_or_else(|| HfError::rejected(format!("class {class} has no well-defined relative grading")))?;
        let &(top, rank) = table.last().expect("class carries homology");
        if rank != 1 {
            return Err(HfError::rejected(format!("top-graded homology has rank {rank}, expected 1")));
        }
        let members = &self.classes[class].members;
        let at = |k: i64| -> Vec<usize> { members.iter().copied().filter(|&g| self.gradings[g] == Some(k)).collect() };
        let (here, above) = (at(top), at(top + 1));
        let mut boundaries = Echelon::default();
        for &g in &above {
            boundaries.insert(self.differential.column(g));
        }
        let all: Vec<usize> = (0..self.len()).collect();
        let mut cycles: Vec<Vec<usize>> = self
            .differential
            .submatrix(&all, &here)
            .kernel()
            .iter()
            .map(|z| z.ones().map(|i| here[i]).collect())
            .collect();
        // Smallest supports first, so a single generator is preferred when it works.
        cycles.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        cycles
            .into_iter()
            .find(|z| !boundaries.contains(&BitVec::from_indices(self.len(), z.iter().copied())))
            .ok_or_else(|| HfError::consistency("top-graded homology is nonzero but every cycle is a boundary"))
    }
}

/// Group generators into Spin^c classes, numbered by first appearance.
pub fn spinc_partition(conn: &Connections, generators: &[Generator]) -> (Vec<SpincClass>, Vec<usize>) {
    let mut classes: Vec<SpincClass> = Vec::new();
    let mut by_label: BTreeMap<IVec, usize> = BTreeMap::new();
    let mut class_of = Vec::with_capacity(generators.len());
    for (i, x) in generators.iter().enumerate() {
        let label = conn.label(x);
        let c = *by_label.entry(label.clone()).or_insert_with(|| {
            classes.push(SpincClass { members: Vec::new(), residue: label, graded: true });
            classes.len() - 1
        });
        classes[c].members.push(i);
        class_of.push(c);
    }
    (classes, class_of)
}

fn relative_gradings(
    d: &Diagram,
    conn: &Connections,
    generators: &[Generator],
    classes: &mut [SpincClass],
) -> Result<Vec<Option<i64>>> {
    let periodic = conn.periodic_domains();
    let mut gradings = vec![None; generators.len()];
    for class in classes.iter_mut() {
        let x0 = &generators[class.members[0]];
        class.graded = periodic.iter().all(|p| grading_difference(d, p, x0, x0).is_zero());
        if !class.graded {
            continue;
        }
        let mut raw = Vec::new();
        for &g in &class.members {
            let dom = conn
                .connecting_domain(x0, &generators[g])
                .ok_or_else(|| HfError::consistency("generators in one class without a connecting domain"))?;
            let diff = grading_difference(d, &dom, x0, &generators[g]);
            if !diff.is_integer() {
                return Err(HfError::consistency(format!("non-integral grading difference {diff}")));
            }
            raw.push(-diff.to_integer().to_i64().expect("small grading"));
        }
        let min = *raw.iter().min().expect("nonempty class");
        for (&g, r) in class.members.iter().zip(raw) {
            gradings[g] = Some(r - min);
        }
    }
    Ok(gradings)
}
