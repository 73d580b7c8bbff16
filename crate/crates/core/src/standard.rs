//! Small diagrams built programmatically: the lens spaces, S^1 x S^2, and the
//! genus-one triple diagram of three pairwise once-crossing curves.

use crate::error::Result;
use crate::surface::{CurveClass, CurveId, Diagram, DiagramBuilder, Side};

fn alpha(i: usize) -> CurveId {
    CurveId::new(CurveClass::Alpha, i)
}

fn beta(i: usize) -> CurveId {
    CurveId::new(CurveClass::Beta, i)
}

fn gamma(i: usize) -> CurveId {
    CurveId::new(CurveClass::Gamma, i)
}

/// Genus-one diagram of `L(p, 1)`: one alpha and one beta curve crossing `p`
/// times with the same sign. For `p = 1` this is the standard diagram of S^3.
pub fn lens_space(p: usize) -> Result<Diagram> {
    assert!(p >= 1, "lens space needs p >= 1");
    let mut b = DiagramBuilder::new(0, false);
    let vs: Vec<usize> = (0..p).map(|_| b.vertex()).collect();
    let a: Vec<usize> = (0..p).map(|i| b.edge(alpha(0), vs[i], vs[(i + 1) % p])).collect();
    let c: Vec<usize> = (0..p).map(|i| b.edge(beta(0), vs[i], vs[(i + 1) % p])).collect();
    for i in 0..p {
        let prev = (i + p - 1) % p;
        b.rotate(vs[i], [b.src(a[i]), b.src(c[i]), b.dst(a[prev]), b.dst(c[prev])]);
    }
    b.basepoint(Side::new(a[0], true));
    b.build()
}

pub fn sphere() -> Result<Diagram> {
    lens_space(1)
}

/// Genus-one diagram of S^1 x S^2: the two curves cross twice with opposite
/// signs, cutting out two bigons and an annulus that holds the basepoint.
pub fn s1_cross_s2() -> Result<Diagram> {
    let mut b = DiagramBuilder::new(0, false);
    let (v0, v1) = (b.vertex(), b.vertex());
    let a0 = b.edge(alpha(0), v0, v1);
    let a1 = b.edge(alpha(0), v1, v0);
    let b0 = b.edge(beta(0), v0, v1);
    let b1 = b.edge(beta(0), v1, v0);
    b.rotate(v0, [b.src(a0), b.src(b0), b.dst(a1), b.dst(b1)]);
    b.rotate(v1, [b.src(a1), b.dst(b0), b.dst(a0), b.src(b1)]);
    // The faces left of a0 and of a1 both run along the annulus.
    b.join(Side::new(a1, true), Side::new(a0, false));
    b.basepoint(Side::new(a1, true));
    b.build()
}

/// Genus-one triple diagram with alpha, beta and gamma crossing pairwise once.
/// The complement is two triangles and a hexagon; the basepoint sits in the hexagon.
pub fn toy_triple() -> Result<Diagram> {
    let mut b = DiagramBuilder::new(0, true);
    let (p, q, r) = (b.vertex(), b.vertex(), b.vertex());
    let a0 = b.edge(alpha(0), p, q);
    let a1 = b.edge(alpha(0), q, p);
    let b0 = b.edge(beta(0), p, r);
    let b1 = b.edge(beta(0), r, p);
    let c0 = b.edge(gamma(0), r, q);
    let c1 = b.edge(gamma(0), q, r);
    b.rotate(p, [b.src(a0), b.src(b0), b.dst(a1), b.dst(b1)]);
    b.rotate(q, [b.src(a1), b.dst(c0), b.dst(a0), b.src(c1)]);
    b.rotate(r, [b.src(b1), b.dst(c1), b.dst(b0), b.src(c0)]);
    let hexagon = b.faces()?.into_iter().find(|f| f.len() == 6).expect("toy has a hexagon");
    b.basepoint(hexagon[0]);
    b.build()
}

/// Genus-one diagram with two parallel curves and no crossings. The annulus
/// without the basepoint is a nonnegative periodic domain, so the diagram is
/// not weakly admissible.
pub fn parallel_curves() -> Result<Diagram> {
    let mut b = DiagramBuilder::new(0, false);
    let a = b.circle(alpha(0));
    let c = b.circle(beta(0));
    b.join(Side::new(a, true), Side::new(c, false));
    b.join(Side::new(a, false), Side::new(c, true));
    b.basepoint(Side::new(a, true));
    b.build()
}

/// Planar arrangement of counterclockwise round circles in the sphere, each
/// pair crossing twice. The first basepoint goes in the outer face and the
/// second in the face inside every circle.
fn circle_arrangement(circles: &[(CurveId, (f64, f64), f64)], triple: bool) -> Result<Diagram> {
    let mut b = DiagramBuilder::new(1, triple);
    // (position, circle i, circle j) for every crossing.
    let mut points: Vec<((f64, f64), usize, usize)> = Vec::new();
    for i in 0..circles.len() {
        for j in i + 1..circles.len() {
            let ((x1, y1), r1) = (circles[i].1, circles[i].2);
            let ((x2, y2), r2) = (circles[j].1, circles[j].2);
            let (dx, dy) = (x2 - x1, y2 - y1);
            let d = (dx * dx + dy * dy).sqrt();
            let a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
            let h = (r1 * r1 - a * a).sqrt();
            let (mx, my) = (x1 + a * dx / d, y1 + a * dy / d);
            points.push(((mx - h * dy / d, my + h * dx / d), i, j));
            points.push(((mx + h * dy / d, my - h * dx / d), i, j));
        }
    }
    let vs: Vec<usize> = points.iter().map(|_| b.vertex()).collect();
    let angle = |c: usize, p: (f64, f64)| (p.1 - circles[c].1 .1).atan2(p.0 - circles[c].1 .0);
    // Edges of each circle, counterclockwise between consecutive crossings.
    let mut out_edge = vec![[usize::MAX; 2]; points.len()];
    let mut in_edge = vec![[usize::MAX; 2]; points.len()];
    for (c, circle) in circles.iter().enumerate() {
        let mut on: Vec<usize> = (0..points.len()).filter(|&p| points[p].1 == c || points[p].2 == c).collect();
        on.sort_by(|&p, &q| angle(c, points[p].0).total_cmp(&angle(c, points[q].0)));
        for k in 0..on.len() {
            let (p, q) = (on[k], on[(k + 1) % on.len()]);
            let e = b.edge(circle.0, vs[p], vs[q]);
            out_edge[p][(points[p].2 == c) as usize] = e;
            in_edge[q][(points[q].2 == c) as usize] = e;
        }
    }
    for (p, &(pos, i, j)) in points.iter().enumerate() {
        let mut rays = Vec::new();
        for (slot, c) in [i, j].into_iter().enumerate() {
            let t = angle(c, pos) + std::f64::consts::FRAC_PI_2;
            rays.push((t, b.src(out_edge[p][slot])));
            rays.push((t + std::f64::consts::PI, b.dst(in_edge[p][slot])));
        }
        for r in rays.iter_mut() {
            r.0 = r.0.rem_euclid(std::f64::consts::TAU);
        }
        rays.sort_by(|x, y| x.0.total_cmp(&y.0));
        b.rotate(vs[p], [rays[0].1, rays[1].1, rays[2].1, rays[3].1]);
    }
    let faces = b.faces()?;
    let outer = faces.iter().find(|f| f.iter().all(|s| !s.forward)).expect("outer face");
    let inner = faces.iter().find(|f| f.iter().all(|s| s.forward)).expect("common inner face");
    b.basepoint(outer[0]);
    b.basepoint(inner[0]);
    b.build()
}

/// Two-pointed sphere: one alpha and one beta circle crossing twice, with a
/// basepoint outside and one in the lens. Inserted by [`crate::moves::add_point`].
pub fn two_point_sphere() -> Result<Diagram> {
    circle_arrangement(&[(alpha(0), (-0.5, 0.0), 1.0), (beta(0), (0.5, 0.0), 1.0)], false)
}

/// Two-pointed triple diagram on the sphere: three circles in Venn position,
/// with a basepoint outside and one in the central triangle.
pub fn two_point_sphere_triple() -> Result<Diagram> {
    let c = |k: f64| {
        let t = std::f64::consts::FRAC_PI_2 + k * std::f64::consts::TAU / 3.0;
        (0.6 * t.cos(), 0.6 * t.sin())
    };
    circle_arrangement(&[(alpha(0), c(0.0), 1.0), (beta(0), c(1.0), 1.0), (gamma(0), c(2.0), 1.0)], true)
}

/// Genus-one piece for stabilizing a triple diagram: alpha and beta meet once,
/// and gamma is a pushoff of beta meeting it twice (and alpha once). The
/// basepoint sits in the octagon; the other faces are two triangles and a bigon.
pub fn triple_stabilization_piece() -> Result<Diagram> {
    let mut b = DiagramBuilder::new(0, true);
    let [r1, p, q, r2] = [b.vertex(), b.vertex(), b.vertex(), b.vertex()];
    let a0 = b.edge(alpha(0), p, q);
    let a1 = b.edge(alpha(0), q, p);
    let b0 = b.edge(beta(0), r1, p);
    let b1 = b.edge(beta(0), p, r2);
    let b2 = b.edge(beta(0), r2, r1);
    let g0 = b.edge(gamma(0), r1, q);
    let g1 = b.edge(gamma(0), q, r2);
    let g2 = b.edge(gamma(0), r2, r1);
    b.rotate(r1, [b.src(g0), b.src(b0), b.dst(g2), b.dst(b2)]);
    b.rotate(p, [b.src(a0), b.src(b1), b.dst(a1), b.dst(b0)]);
    b.rotate(q, [b.src(a1), b.src(g1), b.dst(a0), b.dst(g0)]);
    b.rotate(r2, [b.src(b2), b.src(g2), b.dst(b1), b.dst(g1)]);
    let faces = b.faces()?;
    let big = faces.iter().max_by_key(|f| f.len()).expect("faces");
    b.basepoint(big[0]);
    b.build()
}
