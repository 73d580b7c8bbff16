use super::{face_orbits, CurveId, Diagram, DiagramParts, Edge, EdgeEnd, End, Region, Side, Vertex};
use crate::error::{HfError, Result};

/// Build a diagram from its rotation system alone: faces are traced, and each
/// face becomes a planar region unless faces are explicitly joined.
///
/// ```
/// use hfcalc::surface::{DiagramBuilder, CurveClass, CurveId, Side};
/// let mut b = DiagramBuilder::new(0, false);
/// let v = b.vertex();
/// let a = b.edge(CurveId::new(CurveClass::Alpha, 0), v, v);
/// let c = b.edge(CurveId::new(CurveClass::Beta, 0), v, v);
/// b.rotate(v, [b.src(a), b.src(c), b.dst(a), b.dst(c)]);
/// b.basepoint(Side::new(a, true));
/// let d = b.build().unwrap();
/// assert_eq!(d.genus(), 1);
/// assert_eq!(d.regions().len(), 1);
/// ```
#[derive(Clone, Debug, Default)]
pub struct DiagramBuilder {
    k: usize,
    triple: bool,
    rotations: Vec<Option<[EdgeEnd; 4]>>,
    edges: Vec<(CurveId, Option<(usize, usize)>)>,
    joins: Vec<(Side, Side)>,
    genera: Vec<(Side, u32)>,
    basepoints: Vec<Side>,
}

impl DiagramBuilder {
    pub fn new(k: usize, triple: bool) -> Self {
        DiagramBuilder { k, triple, ..Default::default() }
    }

    pub fn vertex(&mut self) -> usize {
        self.rotations.push(None);
        self.rotations.len() - 1
    }

    pub fn edge(&mut self, curve: CurveId, from: usize, to: usize) -> usize {
        self.edges.push((curve, Some((from, to))));
        self.edges.len() - 1
    }

    /// A curve without crossings.
    pub fn circle(&mut self, curve: CurveId) -> usize {
        self.edges.push((curve, None));
        self.edges.len() - 1
    }

    pub fn src(&self, e: usize) -> EdgeEnd {
        EdgeEnd { edge: e, end: End::Source }
    }

    pub fn dst(&self, e: usize) -> EdgeEnd {
        EdgeEnd { edge: e, end: End::Target }
    }

    /// Set the counterclockwise order of edge-ends at `v`.
    pub fn rotate(&mut self, v: usize, ends: [EdgeEnd; 4]) {
        self.rotations[v] = Some(ends);
    }

    /// Declare that the faces on the left of `a` and of `b` are boundary cycles of one region.
    pub fn join(&mut self, a: Side, b: Side) {
        self.joins.push((a, b));
    }

    /// Give the region on the left of `s` internal genus `h`.
    pub fn genus(&mut self, s: Side, h: u32) {
        self.genera.push((s, h));
    }

    /// Place the next basepoint in the region on the left of `s`.
    pub fn basepoint(&mut self, s: Side) {
        self.basepoints.push(s);
    }

    fn raw(&self) -> Result<(Vec<Vertex>, Vec<Edge>)> {
        let vertices: Vec<Vertex> = self
            .rotations
            .iter()
            .enumerate()
            .map(|(v, r)| r.map(|rotation| Vertex { rotation }).ok_or_else(|| HfError::invalid(format!("vertex {v} has no rotation"))))
            .collect::<Result<_>>()?;
        let edges: Vec<Edge> = self.edges.iter().map(|&(curve, ends)| Edge { curve, ends, left: 0, right: 0 }).collect();
        Ok((vertices, edges))
    }

    /// The traced faces, each a boundary cycle in canonical form.
    pub fn faces(&self) -> Result<Vec<Vec<Side>>> {
        let (vertices, edges) = self.raw()?;
        Ok(face_orbits(&vertices, &edges))
    }

    pub fn build(&self) -> Result<Diagram> {
        let (vertices, mut edges) = self.raw()?;
        let orbits = face_orbits(&vertices, &edges);
        let orbit_of = |s: Side| orbits.iter().position(|o| o.contains(&s)).expect("every side lies on a face");

        let mut group: Vec<usize> = (0..orbits.len()).collect();
        fn root(g: &mut [usize], mut x: usize) -> usize {
            while g[x] != x {
                x = g[x];
            }
            x
        }
        for &(a, b) in &self.joins {
            let (x, y) = (root(&mut group, orbit_of(a)), root(&mut group, orbit_of(b)));
            group[x.max(y)] = x.min(y);
        }
        let mut region_of_orbit = vec![0; orbits.len()];
        let mut regions: Vec<Region> = Vec::new();
        let mut region_of_root = vec![usize::MAX; orbits.len()];
        for (i, orbit) in orbits.iter().enumerate() {
            let r = root(&mut group, i);
            if region_of_root[r] == usize::MAX {
                region_of_root[r] = regions.len();
                regions.push(Region { genus: 0, cycles: Vec::new(), basepoints: Vec::new() });
            }
            region_of_orbit[i] = region_of_root[r];
            regions[region_of_root[r]].cycles.push(orbit.clone());
        }
        for (i, orbit) in orbits.iter().enumerate() {
            for s in orbit {
                if s.forward {
                    edges[s.edge].left = region_of_orbit[i];
                } else {
                    edges[s.edge].right = region_of_orbit[i];
                }
            }
        }
        for &(s, h) in &self.genera {
            regions[region_of_orbit[orbit_of(s)]].genus = h;
        }
        let basepoints = self.basepoints.iter().map(|&s| region_of_orbit[orbit_of(s)]).collect();
        let n_arcs = edges.iter().filter(|e| e.ends.is_some()).count() as i64;
        let chi: i64 = regions.iter().map(Region::euler_characteristic).sum::<i64>() - n_arcs + vertices.len() as i64;
        if chi > 2 || chi % 2 != 0 {
            return Err(HfError::invalid(format!("faces give Euler characteristic {chi}")));
        }
        Diagram::from_parts(DiagramParts {
            genus: ((2 - chi) / 2) as u32,
            k: self.k,
            triple: self.triple,
            vertices,
            edges,
            regions,
            basepoints,
            stated_corners: Vec::new(),
        })
    }
}
