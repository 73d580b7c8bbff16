//! Boundary arcs, solving for a domain from its boundary, and the local shape
//! of 0/1 domains (corners, embeddedness, Euler characteristic of the support).

use super::{CurveId, Diagram, Domain};

/// A 1-chain: signed multiplicity per edge.
pub type Chain = Vec<i64>;

impl Diagram {
    /// Position of each vertex along `curve` (index of the side leaving it in [`Diagram::curve_sides`]).
    pub fn curve_position(&self, curve: CurveId, v: usize) -> Option<usize> {
        self.curve_sides(curve).iter().position(|&s| self.tail(s) == Some(v))
    }

    /// Add to `chain` the arc of `curve` from vertex `from` to vertex `to`,
    /// travelling with (`forward`) or against the curve orientation.
    pub fn add_arc(&self, chain: &mut Chain, curve: CurveId, from: usize, to: usize, forward: bool) -> Option<()> {
        let sides = self.curve_sides(curve);
        let n = sides.len();
        let pos = |v: usize| sides.iter().position(|&s| self.tail(s) == Some(v));
        let (i, j) = (pos(from)?, pos(to)?);
        if forward {
            let mut k = i;
            loop {
                let s = sides[k];
                chain[s.edge] += if s.forward { 1 } else { -1 };
                k = (k + 1) % n;
                if k == j {
                    break;
                }
            }
        } else {
            let mut k = i;
            loop {
                k = (k + n - 1) % n;
                let s = sides[k];
                chain[s.edge] -= if s.forward { 1 } else { -1 };
                if k == j {
                    break;
                }
            }
        }
        Some(())
    }

    /// The domain with boundary `chain` and multiplicity zero in region `base`, if one exists.
    pub fn domain_with_boundary(&self, chain: &[i64], base: usize) -> Option<Domain> {
        let nr = self.regions().len();
        let mut coeffs: Vec<Option<i64>> = vec![None; nr];
        coeffs[base] = Some(0);
        let mut stack = vec![base];
        let adj = self.region_adjacency();
        while let Some(r) = stack.pop() {
            let c = coeffs[r].expect("visited");
            for &(e, r_is_left) in &adj[r] {
                let edge = &self.edges()[e];
                let (other, val) = if r_is_left { (edge.right, c - chain[e]) } else { (edge.left, c + chain[e]) };
                match coeffs[other] {
                    None => {
                        coeffs[other] = Some(val);
                        stack.push(other);
                    }
                    Some(x) if x != val => return None,
                    Some(_) => {}
                }
            }
        }
        let coeffs: Vec<i64> = coeffs.into_iter().collect::<Option<_>>()?;
        let dom = Domain { coeffs };
        (dom.boundary(self) == chain).then_some(dom)
    }

    /// For each region, the edges on its boundary with a flag telling whether the region is on the edge's left.
    pub fn region_adjacency(&self) -> Vec<Vec<(usize, bool)>> {
        let mut adj = vec![Vec::new(); self.regions().len()];
        for (e, edge) in self.edges().iter().enumerate() {
            adj[edge.left].push((e, true));
            adj[edge.right].push((e, false));
        }
        adj
    }

    /// Local shape of a domain with coefficients in {0, 1}; `None` otherwise.
    pub fn shape(&self, dom: &Domain) -> Option<Shape> {
        if dom.coeffs.iter().any(|&c| c != 0 && c != 1) {
            return None;
        }
        let mut convex = Vec::new();
        let mut singular = Vec::new();
        let mut interior_vertices = 0i64;
        for v in 0..self.vertices().len() {
            let q = dom.corner_data(self, v).quadrants;
            match q.iter().sum::<i64>() {
                0 => {}
                1 => convex.push((v, q.iter().position(|&x| x == 1).expect("one quadrant"))),
                2 => {
                    if q[0] == q[2] {
                        singular.push(v);
                    }
                }
                3 => singular.push(v),
                _ => interior_vertices += 1,
            }
        }
        let support = dom.support();
        let mut parent: Vec<usize> = (0..self.regions().len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut interior_edges = 0i64;
        for e in self.edges() {
            if dom.coeffs[e.left] == 1 && dom.coeffs[e.right] == 1 {
                if e.ends.is_some() {
                    interior_edges += 1;
                }
                let (a, b) = (find(&mut parent, e.left), find(&mut parent, e.right));
                parent[a] = b;
            }
        }
        let components = {
            let mut roots: Vec<usize> = support.iter().map(|&r| find(&mut parent, r)).collect();
            roots.sort_unstable();
            roots.dedup();
            roots.len()
        };
        let euler = support.iter().map(|&r| self.regions()[r].euler_characteristic()).sum::<i64>() - interior_edges
            + interior_vertices;
        Some(Shape { convex, singular, euler, components })
    }
}

/// Local structure of a 0/1 domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    /// Vertices where exactly one quadrant is covered, with that quadrant's index.
    pub convex: Vec<(usize, usize)>,
    /// Vertices with three covered quadrants, or two opposite ones.
    pub singular: Vec<usize>,
    /// Euler characteristic of the support, glued along interior edges and vertices.
    pub euler: i64,
    pub components: usize,
}

impl Shape {
    /// The support is an embedded disk whose boundary only turns at convex corners.
    pub fn is_embedded_disk(&self) -> bool {
        self.singular.is_empty() && self.components == 1 && self.euler == 1
    }
}
