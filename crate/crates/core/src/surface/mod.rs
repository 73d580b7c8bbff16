//! Combinatorial model of multi-pointed Heegaard diagrams.
//!
//! A [`Diagram`] is a cell decomposition of a closed oriented surface cut out by
//! transverse curve systems. Vertices are crossings (always 4-valent), edges are
//! arcs of curves between crossings, and regions are the components of the
//! complement. Regions need not be disks: each one records its boundary cycles
//! and its internal genus, so a region's Euler characteristic is
//! `2 - 2 * genus - #cycles`.
//!
//! Orientation is part of the data. The four edge-ends at a vertex are listed
//! counterclockwise, and every edge names the region on its left and on its
//! right with respect to its own direction. Boundary cycles of a region are
//! traversed with the region on the left.

mod builder;
mod checks;
pub(crate) mod complex;
mod domain;
mod format;
mod periodic;
mod shape;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{HfError, Result};

pub use builder::DiagramBuilder;
pub use checks::{AdjacencyCheck, Niceness};
pub use shape::{Chain, Shape};
pub use domain::{domain_boundary, euler_measure, region_euler_measure, side_multiplicity, CornerData, Domain};
pub use format::parse_diagram;

/// The three curve systems of a (triple) Heegaard diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveClass {
    Alpha,
    Beta,
    Gamma,
}

impl CurveClass {
    pub const ALL: [CurveClass; 3] = [CurveClass::Alpha, CurveClass::Beta, CurveClass::Gamma];

    pub fn symbol(self) -> char {
        match self {
            CurveClass::Alpha => 'a',
            CurveClass::Beta => 'b',
            CurveClass::Gamma => 'g',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'a' => Some(CurveClass::Alpha),
            'b' => Some(CurveClass::Beta),
            'g' => Some(CurveClass::Gamma),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CurveClass::Alpha => "alpha",
            CurveClass::Beta => "beta",
            CurveClass::Gamma => "gamma",
        }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveId {
    pub class: CurveClass,
    pub index: usize,
}

impl std::str::FromStr for CurveId {
    type Err = HfError;

    /// Parses `a0`, `b12`, `g3`.
    fn from_str(s: &str) -> Result<CurveId> {
        format::parse_curve(s).ok_or_else(|| HfError::invalid(format!("bad curve `{s}`")))
    }
}

impl CurveId {
    pub fn new(class: CurveClass, index: usize) -> Self {
        CurveId { class, index }
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class.symbol(), self.index)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Source,
    Target,
}

/// One end of an edge, as seen from the vertex it is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeEnd {
    pub edge: usize,
    pub end: End,
}

impl EdgeEnd {
    /// The side of the edge that leaves the vertex along this end.
    pub fn outgoing(self) -> Side {
        Side { edge: self.edge, forward: self.end == End::Source }
    }
}

/// An edge traversed in one direction; the region on its left is the region
/// the side belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Side {
    pub edge: usize,
    pub forward: bool,
}

impl Side {
    pub fn new(edge: usize, forward: bool) -> Self {
        Side { edge, forward }
    }

    pub fn flip(self) -> Side {
        Side { edge: self.edge, forward: !self.forward }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.edge, if self.forward { '+' } else { '-' })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    /// Counterclockwise.
    pub rotation: [EdgeEnd; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub curve: CurveId,
    /// `None` for a curve without crossings, which is a single closed edge.
    pub ends: Option<(usize, usize)>,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub genus: u32,
    /// Boundary cycles, each traversed with the region on the left.
    pub cycles: Vec<Vec<Side>>,
    /// Indices into [`Diagram::basepoints`].
    pub basepoints: Vec<usize>,
}

impl Region {
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.cycles.len() as i64
    }

    pub fn is_punctured(&self) -> bool {
        !self.basepoints.is_empty()
    }

    pub fn is_disk(&self) -> bool {
        self.genus == 0 && self.cycles.len() == 1
    }
}

/// Raw contents of a diagram, before validation.
#[derive(Clone, Debug, Default)]
pub struct DiagramParts {
    pub genus: u32,
    pub k: usize,
    pub triple: bool,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub regions: Vec<Region>,
    /// Region of each basepoint `z1 .. z(k+1)`.
    pub basepoints: Vec<usize>,
    /// Corner counts stated in the input, checked against the cycles.
    pub stated_corners: Vec<Option<usize>>,
}

/// A validated multi-pointed double or triple Heegaard diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    genus: u32,
    k: usize,
    triple: bool,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    regions: Vec<Region>,
    basepoints: Vec<usize>,
    curve_edges: BTreeMap<CurveId, Vec<usize>>,
}

impl Diagram {
    /// Validate `parts` and build a diagram. Region cycles are put in canonical
    /// form, so two descriptions of the same cell complex compare equal.
    pub fn from_parts(parts: DiagramParts) -> Result<Diagram> {
        let DiagramParts { genus, k, triple, vertices, edges, mut regions, basepoints, stated_corners } = parts;
        let nv = vertices.len();
        let nr = regions.len();
        if regions.is_empty() {
            return Err(HfError::invalid("diagram has no regions"));
        }

        for (e, edge) in edges.iter().enumerate() {
            if edge.left >= nr || edge.right >= nr {
                return Err(HfError::invalid(format!("edge {e} refers to a missing region")));
            }
            if let Some((s, t)) = edge.ends {
                if s >= nv || t >= nv {
                    return Err(HfError::invalid(format!("edge {e} refers to a missing vertex")));
                }
            }
            if edge.curve.class == CurveClass::Gamma && !triple {
                return Err(HfError::invalid(format!("edge {e} is on a gamma curve but the diagram is not triple")));
            }
        }

        // Every edge end must appear exactly once, at the vertex the edge names.
        let mut seen = vec![[false; 2]; edges.len()];
        for (v, vertex) in vertices.iter().enumerate() {
            for ee in vertex.rotation {
                let edge = edges
                    .get(ee.edge)
                    .ok_or_else(|| HfError::invalid(format!("vertex {v} refers to missing edge {}", ee.edge)))?;
                let (s, t) = edge
                    .ends
                    .ok_or_else(|| HfError::invalid(format!("vertex {v} uses closed edge {}", ee.edge)))?;
                let (at, slot) = match ee.end {
                    End::Source => (s, 0),
                    End::Target => (t, 1),
                };
                if at != v {
                    return Err(HfError::invalid(format!("edge {} does not end at vertex {v}", ee.edge)));
                }
                if seen[ee.edge][slot] {
                    return Err(HfError::invalid(format!("edge end {}:{slot} listed twice", ee.edge)));
                }
                seen[ee.edge][slot] = true;
            }
        }
        for (e, edge) in edges.iter().enumerate() {
            if edge.ends.is_some() && !(seen[e][0] && seen[e][1]) {
                return Err(HfError::invalid(format!("edge {e} is not attached at both ends (non-4-valent vertex)")));
            }
        }

        // Transversality: opposite rays share a curve, adjacent rays are on curves of different classes.
        for (v, vertex) in vertices.iter().enumerate() {
            let c: Vec<CurveId> = vertex.rotation.iter().map(|ee| edges[ee.edge].curve).collect();
            if c[0] != c[2] || c[1] != c[3] {
                return Err(HfError::invalid(format!("vertex {v}: edge-ends do not alternate curves")));
            }
            if c[0].class == c[1].class {
                return Err(HfError::invalid(format!("vertex {v}: same-class crossing of {} and {}", c[0], c[1])));
            }
        }

        // Quadrant consistency: the region left of ray i is the region right of ray i+1.
        let side_region = |s: Side, edges: &[Edge]| if s.forward { edges[s.edge].left } else { edges[s.edge].right };
        for (v, vertex) in vertices.iter().enumerate() {
            for i in 0..4 {
                let a = vertex.rotation[i].outgoing();
                let b = vertex.rotation[(i + 1) % 4].outgoing();
                if side_region(a, &edges) != side_region(b.flip(), &edges) {
                    return Err(HfError::invalid(format!(
                        "vertex {v}: regions around the crossing are inconsistent between rays {i} and {}",
                        (i + 1) % 4
                    )));
                }
            }
        }

        // Curves, traced straight through crossings.
        let mut curve_edges: BTreeMap<CurveId, Vec<usize>> = BTreeMap::new();
        for (e, edge) in edges.iter().enumerate() {
            curve_edges.entry(edge.curve).or_default().push(e);
        }
        let n_curves = genus as usize + k;
        for class in CurveClass::ALL {
            let present: Vec<usize> = curve_edges.keys().filter(|c| c.class == class).map(|c| c.index).collect();
            let expected = class != CurveClass::Gamma || triple;
            if expected && present != (0..n_curves).collect::<Vec<_>>() {
                return Err(HfError::invalid(format!(
                    "{class} curves must be numbered 0..{n_curves} (g+k), found {present:?}"
                )));
            }
        }
        for (curve, list) in &curve_edges {
            let order = trace_curve(&vertices, &edges, list[0]);
            if order.len() != list.len() {
                return Err(HfError::invalid(format!("edges of curve {curve} do not form a single closed cycle")));
            }
        }

        // Regions against traced faces.
        let orbits = face_orbits(&vertices, &edges);
        let mut orbit_of_side: BTreeMap<Side, usize> = BTreeMap::new();
        for (i, o) in orbits.iter().enumerate() {
            for s in o {
                orbit_of_side.insert(*s, i);
            }
        }
        let mut orbit_claimed = vec![false; orbits.len()];
        for (r, region) in regions.iter_mut().enumerate() {
            if region.cycles.is_empty() {
                return Err(HfError::invalid(format!("region {r} has no boundary cycles")));
            }
            for cycle in region.cycles.iter_mut() {
                if cycle.is_empty() {
                    return Err(HfError::invalid(format!("region {r} has an empty cycle")));
                }
                for s in cycle.iter() {
                    if s.edge >= edges.len() {
                        return Err(HfError::invalid(format!("region {r} cycle uses missing edge {}", s.edge)));
                    }
                    if side_region(*s, &edges) != r {
                        return Err(HfError::invalid(format!("region {r}: side {s} does not have region {r} on its left")));
                    }
                }
                let oi = orbit_of_side[&cycle[0]];
                let canon = canonical_cycle(cycle);
                if canon != orbits[oi] {
                    return Err(HfError::invalid(format!("region {r}: cycle does not match the traced boundary")));
                }
                if orbit_claimed[oi] {
                    return Err(HfError::invalid(format!("region {r}: boundary cycle listed twice")));
                }
                orbit_claimed[oi] = true;
                *cycle = canon;
            }
            region.cycles.sort();
            region.basepoints.clear();
        }
        if let Some(i) = orbit_claimed.iter().position(|c| !c) {
            return Err(HfError::invalid(format!("boundary cycle through side {} belongs to no region", orbits[i][0])));
        }

        for (r, stated) in stated_corners.iter().enumerate() {
            if let (Some(n), Some(region)) = (stated, regions.get(r)) {
                let actual = corner_count(region, &edges);
                if *n != actual {
                    return Err(HfError::invalid(format!(
                        "region {r}: corner count mismatch (stated {n}, boundary has {actual})"
                    )));
                }
            }
        }

        // Global Euler characteristic. A closed edge without vertices is a circle and contributes nothing.
        let n_arcs = edges.iter().filter(|e| e.ends.is_some()).count() as i64;
        let chi: i64 = regions.iter().map(Region::euler_characteristic).sum::<i64>() - n_arcs + nv as i64;
        if chi != 2 - 2 * genus as i64 {
            return Err(HfError::invalid(format!(
                "Euler characteristic mismatch: regions - edges + vertices = {chi}, expected {} for genus {genus}",
                2 - 2 * genus as i64
            )));
        }

        if basepoints.len() != k + 1 {
            return Err(HfError::invalid(format!("expected {} basepoints (k+1), found {}", k + 1, basepoints.len())));
        }
        for (i, &r) in basepoints.iter().enumerate() {
            if r >= nr {
                return Err(HfError::invalid(format!("basepoint z{} in missing region {r}", i + 1)));
            }
            regions[r].basepoints.push(i);
        }

        let d = Diagram { genus, k, triple, vertices, edges, regions, basepoints, curve_edges };
        for class in d.classes() {
            let comps = d.components_without(class);
            if comps.len() != k + 1 {
                return Err(HfError::invalid(format!(
                    "surface minus the {class} curves has {} components, expected k+1 = {}",
                    comps.len(),
                    k + 1
                )));
            }
            for comp in &comps {
                let n: usize = comp.iter().map(|&r| d.regions[r].basepoints.len()).sum();
                if n != 1 {
                    return Err(HfError::invalid(format!(
                        "a component of the surface minus the {class} curves holds {n} basepoints (basepoint-count violation)"
                    )));
                }
            }
        }
        Ok(d)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Number of extra basepoints; each curve system has `genus + k` curves.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_triple(&self) -> bool {
        self.triple
    }

    pub fn curves_per_class(&self) -> usize {
        self.genus as usize + self.k
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    /// Region holding each basepoint.
    pub fn basepoints(&self) -> &[usize] {
        &self.basepoints
    }

    pub fn classes(&self) -> Vec<CurveClass> {
        if self.triple {
            CurveClass::ALL.to_vec()
        } else {
            vec![CurveClass::Alpha, CurveClass::Beta]
        }
    }

    pub fn has_class(&self, class: CurveClass) -> bool {
        class != CurveClass::Gamma || self.triple
    }

    pub fn curves(&self) -> impl Iterator<Item = CurveId> + '_ {
        self.curve_edges.keys().copied()
    }

    pub fn curves_of(&self, class: CurveClass) -> Vec<CurveId> {
        self.curves().filter(|c| c.class == class).collect()
    }

    /// Sides along a curve in traversal order. The curve is oriented so that
    /// its lowest edge is traversed forward.
    pub fn curve_sides(&self, curve: CurveId) -> Vec<Side> {
        match self.curve_edges.get(&curve) {
            Some(list) => trace_curve(&self.vertices, &self.edges, list[0]),
            None => Vec::new(),
        }
    }

    /// Edges of a curve, ascending.
    pub fn curve_edges(&self, curve: CurveId) -> &[usize] {
        self.curve_edges.get(&curve).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Crossings on a curve, in ascending id order.
    pub fn curve_vertices(&self, curve: CurveId) -> Vec<usize> {
        let mut vs: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| {
                let (a, b) = self.vertex_curves(v);
                a == curve || b == curve
            })
            .collect();
        vs.sort_unstable();
        vs
    }

    /// Outgoing sides at a vertex, counterclockwise.
    pub fn rays(&self, v: usize) -> [Side; 4] {
        self.vertices[v].rotation.map(EdgeEnd::outgoing)
    }

    /// The curves through a vertex: the one carrying rays 0 and 2, then the one carrying rays 1 and 3.
    pub fn vertex_curves(&self, v: usize) -> (CurveId, CurveId) {
        let r = &self.vertices[v].rotation;
        (self.edges[r[0].edge].curve, self.edges[r[1].edge].curve)
    }

    /// The curve of `class` through `v`, if any.
    pub fn vertex_curve_of(&self, v: usize, class: CurveClass) -> Option<CurveId> {
        let (a, b) = self.vertex_curves(v);
        [a, b].into_iter().find(|c| c.class == class)
    }

    /// Crossings between a curve of class `a` and a curve of class `b`.
    pub fn crossings(&self, a: CurveClass, b: CurveClass) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| {
                let (x, y) = self.vertex_curves(v);
                (x.class == a && y.class == b) || (x.class == b && y.class == a)
            })
            .collect()
    }

    /// Region on the left of a side.
    pub fn side_region(&self, s: Side) -> usize {
        let e = &self.edges[s.edge];
        if s.forward {
            e.left
        } else {
            e.right
        }
    }

    pub fn tail(&self, s: Side) -> Option<usize> {
        self.edges[s.edge].ends.map(|(a, b)| if s.forward { a } else { b })
    }

    pub fn head(&self, s: Side) -> Option<usize> {
        self.edges[s.edge].ends.map(|(a, b)| if s.forward { b } else { a })
    }

    /// Regions in the four quadrants around a crossing. Quadrant `i` lies
    /// between ray `i` and ray `i + 1`.
    pub fn quadrants(&self, v: usize) -> [usize; 4] {
        self.rays(v).map(|s| self.side_region(s))
    }

    pub fn basepoint_regions(&self) -> Vec<usize> {
        let mut r = self.basepoints.clone();
        r.sort_unstable();
        r.dedup();
        r
    }

    pub fn corner_count(&self, r: usize) -> usize {
        corner_count(&self.regions[r], &self.edges)
    }
}

pub(crate) fn corner_count(region: &Region, edges: &[Edge]) -> usize {
    region.cycles.iter().flatten().filter(|s| edges[s.edge].ends.is_some()).count()
}

/// Next side along the boundary of the face on the left of `s`.
pub(crate) fn next_in_face(vertices: &[Vertex], edges: &[Edge], s: Side) -> Side {
    let Some((a, b)) = edges[s.edge].ends else {
        return s;
    };
    let head = if s.forward { b } else { a };
    let twin = s.flip();
    let rays = vertices[head].rotation.map(EdgeEnd::outgoing);
    let i = rays.iter().position(|&r| r == twin).expect("edge end attached at its head");
    rays[(i + 3) % 4]
}

pub(crate) fn canonical_cycle(cycle: &[Side]) -> Vec<Side> {
    let start = cycle.iter().enumerate().min_by_key(|(_, s)| **s).map(|(i, _)| i).unwrap_or(0);
    cycle[start..].iter().chain(&cycle[..start]).copied().collect()
}

/// All face boundary orbits, each in canonical rotation, sorted.
pub(crate) fn face_orbits(vertices: &[Vertex], edges: &[Edge]) -> Vec<Vec<Side>> {
    let mut done = vec![[false; 2]; edges.len()];
    let mut orbits = Vec::new();
    for e in 0..edges.len() {
        for forward in [true, false] {
            if done[e][forward as usize] {
                continue;
            }
            let start = Side::new(e, forward);
            let mut orbit = Vec::new();
            let mut s = start;
            loop {
                done[s.edge][s.forward as usize] = true;
                orbit.push(s);
                s = next_in_face(vertices, edges, s);
                if s == start {
                    break;
                }
                if orbit.len() > 2 * edges.len() {
                    break;
                }
            }
            orbits.push(canonical_cycle(&orbit));
        }
    }
    orbits.sort();
    orbits
}

/// Sides along the curve through edge `start`, following the curve straight
/// through crossings. The first side is `start` traversed forward.
pub(crate) fn trace_curve(vertices: &[Vertex], edges: &[Edge], start: usize) -> Vec<Side> {
    let mut order = vec![Side::new(start, true)];
    let Some((_, mut at)) = edges[start].ends else {
        return order;
    };
    let mut arriving = EdgeEnd { edge: start, end: End::Target };
    loop {
        let rot = &vertices[at].rotation;
        let Some(i) = rot.iter().position(|&ee| ee == arriving) else {
            return order;
        };
        let out = rot[(i + 2) % 4];
        if out.edge == start && out.end == End::Source {
            return order;
        }
        if order.len() > edges.len() {
            return order;
        }
        order.push(out.outgoing());
        let (s, t) = edges[out.edge].ends.expect("attached edge");
        let (next, end) = if out.end == End::Source { (t, End::Target) } else { (s, End::Source) };
        arriving = EdgeEnd { edge: out.edge, end };
        at = next;
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::serialize(self))
    }
}
