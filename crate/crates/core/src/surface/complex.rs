//! Mutable cell complex used to implement local surgeries on diagrams.
//!
//! Vertices may temporarily have degree 2 (points marked on an edge) and ids
//! may have gaps; [`Complex::finalize`] smooths nothing on its own, compacts
//! ids, recomputes region boundaries and genera, and runs full validation.
//!
//! Each region carries its Euler characteristic. Every primitive updates it so
//! that `sum(chi) - #arcs + #vertices` stays equal to the Euler characteristic
//! of the surface (closed vertex-free edges count as circles, contributing 0).

use std::collections::BTreeMap;

use super::{CurveId, Diagram, DiagramParts, Edge, EdgeEnd, End, Region, Side, Vertex};
use crate::error::{HfError, Result};

#[derive(Clone, Debug)]
pub(crate) struct CEdge {
    pub curve: CurveId,
    pub ends: Option<(usize, usize)>,
    pub left: usize,
    pub right: usize,
}

/// A corner at a vertex: the gap after ray `after` in the rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Corner {
    pub vertex: usize,
    pub after: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct Complex {
    pub k: usize,
    pub triple: bool,
    /// Counterclockwise edge-ends per vertex; `None` once removed.
    pub rot: Vec<Option<Vec<EdgeEnd>>>,
    pub edges: Vec<Option<CEdge>>,
    /// Euler characteristic per region; `None` once merged away.
    pub chi: Vec<Option<i64>>,
    /// Region of each basepoint.
    pub basepoints: Vec<usize>,
    /// Merge forest over region ids, for tracking where old regions went.
    parent: Vec<usize>,
}

impl Complex {
    pub fn from_diagram(d: &Diagram) -> Complex {
        let n = d.regions().len();
        Complex {
            k: d.k(),
            triple: d.is_triple(),
            rot: d.vertices().iter().map(|v| Some(v.rotation.to_vec())).collect(),
            edges: d
                .edges()
                .iter()
                .map(|e| Some(CEdge { curve: e.curve, ends: e.ends, left: e.left, right: e.right }))
                .collect(),
            chi: d.regions().iter().map(|r| Some(r.euler_characteristic())).collect(),
            basepoints: d.basepoints().to_vec(),
            parent: (0..n).collect(),
        }
    }

    pub fn edge(&self, e: usize) -> &CEdge {
        self.edges[e].as_ref().expect("live edge")
    }

    fn edge_mut(&mut self, e: usize) -> &mut CEdge {
        self.edges[e].as_mut().expect("live edge")
    }

    pub fn rotation(&self, v: usize) -> &Vec<EdgeEnd> {
        self.rot[v].as_ref().expect("live vertex")
    }

    fn rotation_mut(&mut self, v: usize) -> &mut Vec<EdgeEnd> {
        self.rot[v].as_mut().expect("live vertex")
    }

    pub fn side_region(&self, s: Side) -> usize {
        let e = self.edge(s.edge);
        if s.forward {
            e.left
        } else {
            e.right
        }
    }

    pub fn set_side_region(&mut self, s: Side, r: usize) {
        let e = self.edge_mut(s.edge);
        if s.forward {
            e.left = r;
        } else {
            e.right = r;
        }
    }

    pub fn head(&self, s: Side) -> Option<usize> {
        self.edge(s.edge).ends.map(|(a, b)| if s.forward { b } else { a })
    }

    pub fn tail(&self, s: Side) -> Option<usize> {
        self.edge(s.edge).ends.map(|(a, b)| if s.forward { a } else { b })
    }

    /// Index of an outgoing side in the rotation at its tail.
    pub fn ray_index(&self, s: Side) -> usize {
        let v = self.tail(s).expect("side with a tail");
        let ee = EdgeEnd { edge: s.edge, end: if s.forward { End::Source } else { End::Target } };
        self.rotation(v).iter().position(|&x| x == ee).expect("edge end at its vertex")
    }

    /// The corner on the left of outgoing side `s`, at its tail.
    pub fn corner_left_of(&self, s: Side) -> Corner {
        Corner { vertex: self.tail(s).expect("side with a tail"), after: self.ray_index(s) }
    }

    pub fn corner_region(&self, c: Corner) -> usize {
        self.side_region(self.rotation(c.vertex)[c.after].outgoing())
    }

    pub fn next_in_face(&self, s: Side) -> Side {
        let Some(h) = self.head(s) else {
            return s;
        };
        let rot = self.rotation(h);
        let twin = s.flip();
        let ee = EdgeEnd { edge: twin.edge, end: if twin.forward { End::Source } else { End::Target } };
        let i = rot.iter().position(|&x| x == ee).expect("edge end at its head");
        rot[(i + rot.len() - 1) % rot.len()].outgoing()
    }

    pub fn orbit(&self, start: Side) -> Vec<Side> {
        let mut out = vec![start];
        let mut s = self.next_in_face(start);
        while s != start {
            out.push(s);
            s = self.next_in_face(s);
        }
        out
    }

    pub fn new_region(&mut self, chi: i64) -> usize {
        self.chi.push(Some(chi));
        self.parent.push(self.parent.len());
        self.chi.len() - 1
    }

    pub fn region_chi(&self, r: usize) -> i64 {
        self.chi[r].expect("live region")
    }

    pub fn adjust_chi(&mut self, r: usize, delta: i64) {
        *self.chi[r].as_mut().expect("live region") += delta;
    }

    pub fn add_vertex(&mut self, rotation: Vec<EdgeEnd>) -> usize {
        self.rot.push(Some(rotation));
        self.rot.len() - 1
    }

    pub fn add_edge(&mut self, curve: CurveId, ends: Option<(usize, usize)>, left: usize, right: usize) -> usize {
        self.edges.push(Some(CEdge { curve, ends, left, right }));
        self.edges.len() - 1
    }

    /// Current id of a region that may since have been merged into another.
    pub fn find(&self, mut r: usize) -> usize {
        while self.parent[r] != r {
            r = self.parent[r];
        }
        r
    }

    /// Mark a point on edge `e`, splitting it. The part of `e` before the point
    /// keeps the id `e`; returns the new degree-2 vertex and the edge after it
    /// (which is `e` again if the edge was a closed loop without vertices).
    pub fn subdivide(&mut self, e: usize) -> (usize, usize) {
        let edge = self.edge(e).clone();
        match edge.ends {
            None => {
                let w = self.add_vertex(vec![EdgeEnd { edge: e, end: End::Target }, EdgeEnd { edge: e, end: End::Source }]);
                self.edge_mut(e).ends = Some((w, w));
                (w, e)
            }
            Some((s, t)) => {
                let w = self.rot.len();
                let e2 = self.add_edge(edge.curve, Some((w, t)), edge.left, edge.right);
                self.add_vertex(vec![EdgeEnd { edge: e, end: End::Target }, EdgeEnd { edge: e2, end: End::Source }]);
                self.edge_mut(e).ends = Some((s, w));
                let old = EdgeEnd { edge: e, end: End::Target };
                let pos = self.rotation(t).iter().position(|&x| x == old).expect("target end present");
                self.rotation_mut(t)[pos] = EdgeEnd { edge: e2, end: End::Target };
                (w, e2)
            }
        }
    }

    /// Add an edge of `curve` from corner `a` to corner `b`, both in the same
    /// region. If the chord cuts a boundary cycle in two, the piece on the left
    /// of the new edge becomes a fresh disk region and the right piece keeps
    /// the old region's id, topology and basepoints.
    pub fn add_chord(&mut self, a: Corner, b: Corner, curve: CurveId) -> Result<usize> {
        if a.vertex == b.vertex {
            return Err(HfError::consistency("chord with both ends at one vertex"));
        }
        let r = self.corner_region(a);
        if self.corner_region(b) != r {
            return Err(HfError::consistency(format!(
                "chord corners lie in different regions ({r} and {})",
                self.corner_region(b)
            )));
        }
        let ray_a = self.rotation(a.vertex)[a.after].outgoing();
        let ray_b = self.rotation(b.vertex)[b.after].outgoing();
        let same_orbit = self.orbit(ray_a).contains(&ray_b);

        let c = self.add_edge(curve, Some((a.vertex, b.vertex)), r, r);
        self.rotation_mut(a.vertex).insert(a.after + 1, EdgeEnd { edge: c, end: End::Source });
        self.rotation_mut(b.vertex).insert(b.after + 1, EdgeEnd { edge: c, end: End::Target });

        if same_orbit {
            let fresh = self.new_region(1);
            for s in self.orbit(Side::new(c, true)) {
                self.set_side_region(s, fresh);
            }
        } else {
            self.adjust_chi(r, 1);
        }
        Ok(c)
    }

    fn merge_regions(&mut self, a: usize, b: usize, chi: i64) -> usize {
        if a == b {
            self.chi[a] = Some(chi);
            return a;
        }
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        self.chi[keep] = Some(chi);
        self.chi[gone] = None;
        self.parent[gone] = keep;
        for e in self.edges.iter_mut().flatten() {
            if e.left == gone {
                e.left = keep;
            }
            if e.right == gone {
                e.right = keep;
            }
        }
        for z in self.basepoints.iter_mut() {
            if *z == gone {
                *z = keep;
            }
        }
        keep
    }

    /// Remove an edge, merging the regions on its two sides.
    pub fn delete_edge(&mut self, e: usize) -> usize {
        let edge = self.edge(e).clone();
        if let Some((s, t)) = edge.ends {
            self.rotation_mut(s).retain(|x| !(x.edge == e && x.end == End::Source));
            self.rotation_mut(t).retain(|x| !(x.edge == e && x.end == End::Target));
        }
        self.edges[e] = None;
        let arc = edge.ends.is_some() as i64;
        let chi = if edge.left == edge.right {
            self.region_chi(edge.left) - arc
        } else {
            self.region_chi(edge.left) + self.region_chi(edge.right) - arc
        };
        self.merge_regions(edge.left, edge.right, chi)
    }

    pub fn reverse_edge(&mut self, e: usize) {
        let edge = self.edge_mut(e);
        std::mem::swap(&mut edge.left, &mut edge.right);
        let Some((s, t)) = edge.ends else {
            return;
        };
        edge.ends = Some((t, s));
        for v in [s, t] {
            for x in self.rotation_mut(v).iter_mut() {
                if x.edge == e {
                    x.end = if x.end == End::Source { End::Target } else { End::Source };
                }
            }
            if s == t {
                break;
            }
        }
    }

    /// Remove a degree-2 vertex, joining its two edges into one.
    pub fn smooth(&mut self, v: usize) -> Result<usize> {
        let rot = self.rotation(v).clone();
        if rot.len() != 2 {
            return Err(HfError::consistency(format!("cannot smooth vertex of degree {}", rot.len())));
        }
        let (a, b) = (rot[0].edge, rot[1].edge);
        if self.edge(a).curve != self.edge(b).curve {
            return Err(HfError::consistency("smoothing would join two different curves"));
        }
        if a == b {
            self.rot[v] = None;
            self.edge_mut(a).ends = None;
            return Ok(a);
        }
        if rot[0].end == End::Source {
            self.reverse_edge(a);
        }
        if rot[1].end == End::Target {
            self.reverse_edge(b);
        }
        self.rot[v] = None;
        let (x, _) = self.edge(a).ends.expect("arc");
        let (_, y) = self.edge(b).ends.expect("arc");
        if self.edge(a).left != self.edge(b).left || self.edge(a).right != self.edge(b).right {
            return Err(HfError::consistency("regions disagree across a smoothed point"));
        }
        self.edge_mut(a).ends = Some((x, y));
        let old = EdgeEnd { edge: b, end: End::Target };
        let pos = self.rotation(y).iter().position(|&z| z == old).expect("target end present");
        self.rotation_mut(y)[pos] = EdgeEnd { edge: a, end: End::Target };
        self.edges[b] = None;
        Ok(a)
    }

    /// Smooth every remaining degree-2 vertex.
    pub fn smooth_all(&mut self) -> Result<()> {
        for v in 0..self.rot.len() {
            if self.rot[v].as_ref().is_some_and(|r| r.len() == 2) {
                self.smooth(v)?;
            }
        }
        Ok(())
    }

    pub fn live_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| self.edges[e].is_some())
    }

    /// Compact ids, recompute region boundaries and genera, and validate.
    /// Also returns, for every region id ever used, its id in the result (if it survived).
    pub fn finalize(self) -> Result<(Diagram, Vec<Option<usize>>)> {
        let vmap = compact(self.rot.iter().map(Option::is_some));
        let emap = compact(self.edges.iter().map(Option::is_some));
        let rmap = compact(self.chi.iter().map(Option::is_some));

        let mut vertices = Vec::new();
        for rot in self.rot.iter().flatten() {
            if rot.len() != 4 {
                return Err(HfError::consistency(format!("vertex of degree {} left after a move", rot.len())));
            }
            let r: Vec<EdgeEnd> = rot.iter().map(|x| EdgeEnd { edge: emap[x.edge].expect("live"), end: x.end }).collect();
            vertices.push(Vertex { rotation: r.try_into().expect("degree 4") });
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .flatten()
            .map(|e| Edge {
                curve: e.curve,
                ends: e.ends.map(|(s, t)| (vmap[s].expect("live"), vmap[t].expect("live"))),
                left: rmap[e.left].expect("live"),
                right: rmap[e.right].expect("live"),
            })
            .collect();
        let chis: Vec<i64> = self.chi.iter().flatten().copied().collect();

        let mut cycles: Vec<Vec<Vec<Side>>> = vec![Vec::new(); chis.len()];
        for orbit in super::face_orbits(&vertices, &edges) {
            let s = orbit[0];
            let r = if s.forward { edges[s.edge].left } else { edges[s.edge].right };
            cycles[r].push(orbit);
        }
        let mut regions = Vec::new();
        for (r, (chi, cyc)) in chis.iter().zip(cycles).enumerate() {
            let twice_genus = 2 - chi - cyc.len() as i64;
            if cyc.is_empty() || twice_genus < 0 || twice_genus % 2 != 0 {
                return Err(HfError::consistency(format!(
                    "region {r} has chi {chi} and {} boundary cycles",
                    cyc.len()
                )));
            }
            regions.push(Region { genus: (twice_genus / 2) as u32, cycles: cyc, basepoints: Vec::new() });
        }
        let n_arcs = edges.iter().filter(|e| e.ends.is_some()).count() as i64;
        let total = chis.iter().sum::<i64>() - n_arcs + vertices.len() as i64;
        if total > 2 || total % 2 != 0 {
            return Err(HfError::consistency(format!("surface Euler characteristic {total} after a move")));
        }
        let genus = ((2 - total) / 2) as u32;
        let parts = DiagramParts {
            genus,
            k: self.k,
            triple: self.triple,
            vertices,
            edges,
            regions,
            basepoints: self.basepoints.iter().map(|&r| rmap[r].expect("basepoint region live")).collect(),
            stated_corners: Vec::new(),
        };
        let d = Diagram::from_parts(parts).map_err(|e| HfError::consistency(format!("move produced an invalid diagram: {e}")))?;
        let region_map = (0..self.parent.len()).map(|r| rmap[self.find(r)]).collect();
        Ok((d, region_map))
    }

    /// Whether a 1-chain (signed multiplicity per edge id) is the boundary of
    /// an integer combination of regions.
    pub fn bounds(&self, chain: &BTreeMap<usize, i64>) -> bool {
        let mut coeff: Vec<Option<i64>> = vec![None; self.chi.len()];
        let mut adj: Vec<Vec<(usize, i64, bool)>> = vec![Vec::new(); self.chi.len()];
        for e in self.live_edges() {
            let edge = self.edge(e);
            let c = chain.get(&e).copied().unwrap_or(0);
            adj[edge.left].push((edge.right, c, true));
            adj[edge.right].push((edge.left, c, false));
        }
        let Some(start) = (0..self.chi.len()).find(|&r| self.chi[r].is_some()) else { return true };
        coeff[start] = Some(0);
        let mut stack = vec![start];
        while let Some(r) = stack.pop() {
            let n = coeff[r].expect("visited");
            for &(other, c, r_is_left) in &adj[r] {
                // The boundary of a domain has multiplicity n(left) - n(right) on each edge.
                let want = if r_is_left { n - c } else { n + c };
                match coeff[other] {
                    None => {
                        coeff[other] = Some(want);
                        stack.push(other);
                    }
                    Some(x) if x != want => return false,
                    Some(_) => {}
                }
            }
        }
        chain.keys().all(|&e| self.edges[e].is_some())
    }

    /// Reverse the orientation of the surface.
    pub fn mirror(&mut self) {
        for rot in self.rot.iter_mut().flatten() {
            rot.reverse();
        }
        for e in self.edges.iter_mut().flatten() {
            std::mem::swap(&mut e.left, &mut e.right);
        }
    }
}

fn compact(live: impl Iterator<Item = bool>) -> Vec<Option<usize>> {
    let mut next = 0;
    live.map(|l| {
        l.then(|| {
            next += 1;
            next - 1
        })
    })
    .collect()
}
