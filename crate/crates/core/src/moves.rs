//! Diagram moves as local surgeries on the cell complex: stabilization, finger
//! moves, handleslides, Dehn twists and extra basepoints. Every move returns a
//! new, fully validated diagram.
//!
//! New curve arcs are added as chords inside regions. When a chord cuts a
//! region in two, the piece on the chord's left becomes a fresh disk, so each
//! chord below is oriented to leave the thin piece (strip, bigon, sliver) on
//! its left and the original region's topology and basepoints on its right.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{HfError, Result};
use crate::standard;
use crate::surface::complex::{Complex, Corner};
use crate::surface::{CurveClass, CurveId, Diagram, EdgeEnd, End, Side};

fn check_region(d: &Diagram, r: usize) -> Result<()> {
    if r >= d.regions().len() {
        return Err(HfError::rejected(format!("no region {r} (diagram has {})", d.regions().len())));
    }
    Ok(())
}

fn check_curve(d: &Diagram, c: CurveId) -> Result<()> {
    if !d.has_class(c.class) || c.index >= d.curves_per_class() {
        return Err(HfError::rejected(format!("no curve {c}")));
    }
    Ok(())
}

/// Splice a closed piece (a diagram whose first basepoint sits in a disk
/// region) into region `host`: that disk is glued to a disk removed from
/// `host`. Curve indices of the piece are shifted by `offset`, and its other
/// basepoints become new basepoints.
fn insert_piece(cx: &mut Complex, piece: &Diagram, host: usize, offset: usize) {
    let outer = piece.basepoints()[0];
    debug_assert!(piece.regions()[outer].is_disk());
    let e0 = cx.edges.len();
    let v0 = cx.rot.len();
    let region_of: Vec<usize> = piece
        .regions()
        .iter()
        .enumerate()
        .map(|(r, region)| {
            if r == outer {
                cx.adjust_chi(host, region.euler_characteristic() - 2);
                host
            } else {
                cx.new_region(region.euler_characteristic())
            }
        })
        .collect();
    for e in piece.edges() {
        cx.add_edge(
            CurveId::new(e.curve.class, e.curve.index + offset),
            e.ends.map(|(a, b)| (a + v0, b + v0)),
            region_of[e.left],
            region_of[e.right],
        );
    }
    for v in piece.vertices() {
        cx.add_vertex(v.rotation.iter().map(|x| EdgeEnd { edge: x.edge + e0, end: x.end }).collect());
    }
    for &z in &piece.basepoints()[1..] {
        cx.basepoints.push(region_of[z]);
    }
    cx.k += piece.k();
}

/// Add a handle with feet in `r1` and `r2`, carrying a new alpha and beta
/// meeting once. For triple diagrams the handle also carries a new gamma, a
/// pushoff of the new beta meeting it twice, so the cobordism is unchanged.
///
/// Only `r1 == r2` is supported: with feet in different regions the new beta
/// curve would also need a return path across the surface.
pub fn stabilize(d: &Diagram, r1: usize, r2: usize) -> Result<Diagram> {
    check_region(d, r1)?;
    check_region(d, r2)?;
    if r1 != r2 {
        return Err(HfError::rejected(
            "stabilization with feet in two different regions needs a return path for the new curve; give the same region twice",
        ));
    }
    let piece = if d.is_triple() { standard::triple_stabilization_piece()? } else { standard::sphere()? };
    let mut cx = Complex::from_diagram(d);
    insert_piece(&mut cx, &piece, r1, d.curves_per_class());
    Ok(cx.finalize()?.0)
}

/// Add a basepoint in `region`, together with a new small alpha and beta
/// circle (and gamma, for triple diagrams) around it, pairwise crossing twice.
/// The 3-manifold is unchanged and `k` grows by one.
pub fn add_point(d: &Diagram, region: usize) -> Result<Diagram> {
    check_region(d, region)?;
    let piece = if d.is_triple() { standard::two_point_sphere_triple()? } else { standard::two_point_sphere()? };
    let mut cx = Complex::from_diagram(d);
    insert_piece(&mut cx, &piece, region, d.curves_per_class());
    Ok(cx.finalize()?.0)
}

/// A marked point on an edge, with the pieces of that edge before and after
/// it (relative to the edge's original direction).
#[derive(Clone, Copy, Debug)]
struct Mark {
    v: usize,
    before: usize,
    after: usize,
}

impl Mark {
    /// The corner at this point on the left (`true`) or right side of the original edge.
    fn corner(self, cx: &Complex, left: bool) -> Corner {
        if left {
            cx.corner_left_of(Side::new(self.after, true))
        } else {
            cx.corner_left_of(Side::new(self.before, false))
        }
    }
}

/// Where on an edge a point is requested: ordered by key along the edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    NearTail,
    Middle(u8),
    NearHead,
}

/// The slot next to the tail of an outgoing side.
fn near(s: Side) -> Slot {
    if s.forward {
        Slot::NearTail
    } else {
        Slot::NearHead
    }
}

/// Subdivide edges at the requested slots; returns one mark per request.
fn place(cx: &mut Complex, requests: &[(usize, Slot)]) -> Result<Vec<Mark>> {
    let mut by_edge: BTreeMap<usize, Vec<(Slot, usize)>> = BTreeMap::new();
    for (i, &(e, slot)) in requests.iter().enumerate() {
        by_edge.entry(e).or_default().push((slot, i));
    }
    let mut vertex = vec![usize::MAX; requests.len()];
    for (e, mut list) in by_edge {
        list.sort();
        if list.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(HfError::rejected(format!("edge {e} would need two points at the same place")));
        }
        let mut cur = e;
        for (_, i) in list {
            let (w, next) = cx.subdivide(cur);
            vertex[i] = w;
            cur = next;
        }
    }
    Ok(vertex
        .into_iter()
        .map(|v| {
            let rot = cx.rotation(v);
            debug_assert!(rot[0].end == End::Target && rot[1].end == End::Source);
            Mark { v, before: rot[0].edge, after: rot[1].edge }
        })
        .collect())
}

fn chord(cx: &mut Complex, a: Corner, b: Corner, curve: CurveId) -> Result<usize> {
    cx.add_chord(a, b, curve).map_err(|e| match e {
        HfError::Consistency(msg) => HfError::rejected(format!("move cannot be drawn along the given regions: {msg}")),
        other => other,
    })
}

/// The edge between two consecutive marks on one original edge.
fn between(first: Mark, second: Mark) -> usize {
    debug_assert_eq!(first.after, second.before);
    first.after
}

/// Remove the old arc between two marks and smooth the now-bivalent points.
fn cut_and_smooth(cx: &mut Complex, segments: &[usize], points: &[usize]) -> Result<()> {
    for &e in segments {
        cx.delete_edge(e);
    }
    for &v in points {
        if cx.rot[v].is_some() {
            cx.smooth(v)?;
        }
    }
    Ok(())
}

/// The edges crossed by a finger along `path`, with whether each step leaves
/// through the left side of the crossed edge.
fn crossings_along(d: &Diagram, class: CurveClass, mut used: BTreeSet<usize>, path: &[usize]) -> Result<Vec<(usize, bool)>> {
    let mut out = Vec::new();
    for w in path.windows(2) {
        let (a, b) = (w[0], w[1]);
        let shared: Vec<usize> = (0..d.edges().len())
            .filter(|&f| {
                let e = &d.edges()[f];
                (e.left == a && e.right == b) || (e.left == b && e.right == a)
            })
            .filter(|f| !used.contains(f))
            .collect();
        let Some(&f) = shared.iter().find(|&&f| d.edges()[f].curve.class != class) else {
            return Err(HfError::rejected(if shared.is_empty() {
                format!("regions {a} and {b} share no unused edge")
            } else {
                format!("regions {a} and {b} are only separated by {class} curves; a finger move cannot cross its own class")
            }));
        };
        used.insert(f);
        out.push((f, d.edges()[f].left == a));
    }
    Ok(out)
}

/// Push a finger of the curve through edge `e` along the regions `path`,
/// starting into `path[0]` (a region beside `e`). Each step crosses the
/// lowest-numbered unused edge between consecutive regions and adds two
/// crossings. Paths of length 0 or 1 change nothing.
pub fn finger_move(d: &Diagram, e: usize, path: &[usize]) -> Result<Diagram> {
    finger_move_with_map(d, e, path).map(|(d, _)| d)
}

/// [`finger_move`], also returning where each old region id ended up.
pub fn finger_move_with_map(d: &Diagram, e: usize, path: &[usize]) -> Result<(Diagram, Vec<Option<usize>>)> {
    if e >= d.edges().len() {
        return Err(HfError::rejected(format!("no edge {e}")));
    }
    for &r in path {
        check_region(d, r)?;
    }
    let edge = d.edges()[e].clone();
    if let Some(&r) = path.first() {
        if edge.left != r && edge.right != r {
            return Err(HfError::rejected(format!("finger path starts in region {r}, which is not beside edge {e}")));
        }
    }
    if path.len() <= 1 {
        return Ok((d.clone(), (0..d.regions().len()).map(Some).collect()));
    }
    let crossed = crossings_along(d, edge.curve.class, BTreeSet::from([e]), path)?;
    let n = crossed.len();
    let r1_left = edge.left == path[0];

    let mut cx = Complex::from_diagram(d);
    let mut requests = vec![(e, Slot::Middle(0)), (e, Slot::Middle(1))];
    for &(f, _) in &crossed {
        requests.push((f, Slot::Middle(0)));
        requests.push((f, Slot::Middle(1)));
    }
    let marks = place(&mut cx, &requests)?;
    let (w1, w2) = (marks[0], marks[1]);
    let (s1, s2) = if r1_left { (w1, w2) } else { (w2, w1) };
    // Outbound point u_i and return point u'_i on each crossed edge.
    let (u, u2): (Vec<Mark>, Vec<Mark>) = crossed
        .iter()
        .enumerate()
        .map(|(i, &(_, left))| {
            let (p1, p2) = (marks[2 + 2 * i], marks[3 + 2 * i]);
            if left {
                (p2, p1)
            } else {
                (p1, p2)
            }
        })
        .unzip();
    let curve = edge.curve;
    // The side of crossed edge i facing path[i] (`true`) or path[i + 1].
    let side = |i: usize, before: bool| if before { crossed[i].1 } else { !crossed[i].1 };

    for i in 0..n {
        let from = if i == 0 { s1.corner(&cx, r1_left) } else { u[i - 1].corner(&cx, side(i - 1, false)) };
        let to = u[i].corner(&cx, side(i, true));
        chord(&mut cx, from, to, curve)?;
    }
    let tip_from = u2[n - 1].corner(&cx, side(n - 1, false));
    let tip_to = u[n - 1].corner(&cx, side(n - 1, false));
    chord(&mut cx, tip_from, tip_to, curve)?;
    for i in (0..n).rev() {
        let from = if i == 0 { s2.corner(&cx, r1_left) } else { u2[i - 1].corner(&cx, side(i - 1, false)) };
        let to = u2[i].corner(&cx, side(i, true));
        chord(&mut cx, from, to, curve)?;
    }
    cut_and_smooth(&mut cx, &[between(w1, w2)], &[w1.v, w2.v])?;
    let (out, map) = cx.finalize()?;
    if out.vertices().len() != d.vertices().len() + 2 * n {
        return Err(HfError::consistency("finger move did not add two crossings per step"));
    }
    Ok((out, map))
}

/// The sides of `curve` in order, starting with `first` and running in its direction.
fn sides_from(d: &Diagram, curve: CurveId, first: Side) -> Vec<Side> {
    let mut sides = d.curve_sides(curve);
    if !sides.contains(&first) {
        sides = sides.iter().rev().map(|s| s.flip()).collect();
    }
    let start = sides.iter().position(|&s| s == first).expect("side of the curve");
    sides.rotate_left(start);
    sides
}

fn ray_index(d: &Diagram, s: Side) -> usize {
    let v = d.tail(s).expect("side with a tail");
    d.rays(v).iter().position(|&r| r == s).expect("ray at its tail")
}

fn chain_of(sides: &[Side], sign: i64, chain: &mut BTreeMap<usize, i64>) {
    for s in sides {
        *chain.entry(s.edge).or_default() += if s.forward { sign } else { -sign };
    }
}

/// Replace `c` by its band sum with a parallel copy of `over`, the band running
/// along `path` from a region beside `c` to a region beside `over`. For paths
/// longer than one region this is a finger move of `c` followed by a slide
/// inside the last region. The new curve is checked to be homologous to
/// `c ± over`.
pub fn handleslide(d: &Diagram, c: CurveId, over: CurveId, path: &[usize]) -> Result<Diagram> {
    check_curve(d, c)?;
    check_curve(d, over)?;
    if c == over || c.class != over.class {
        return Err(HfError::rejected("a handleslide needs two different curves of the same class"));
    }
    let Some(&first) = path.first() else {
        return Err(HfError::rejected("handleslide needs a nonempty region path"));
    };
    for &r in path {
        check_region(d, r)?;
    }
    let beside = |d: &Diagram, curve: CurveId, r: usize| {
        d.curve_edges(curve).iter().copied().find(|&e| d.edges()[e].left == r || d.edges()[e].right == r)
    };
    let Some(start) = beside(d, c, first) else {
        return Err(HfError::rejected(format!("region {first} is not beside {c}")));
    };
    let (d1, region) = if path.len() > 1 {
        let (d1, map) = finger_move_with_map(d, start, path)?;
        let last = map[*path.last().expect("nonempty")].expect("path region survives");
        (d1, last)
    } else {
        (d.clone(), first)
    };
    slide_in_region(&d1, c, over, region)
}

/// Handleslide of `c` over `over` with the band inside a single region beside both.
fn slide_in_region(d: &Diagram, c: CurveId, over: CurveId, region: usize) -> Result<Diagram> {
    let edge_of = |curve: CurveId| {
        d.curve_edges(curve).iter().copied().find(|&e| d.edges()[e].left == region || d.edges()[e].right == region)
    };
    let Some(ec) = edge_of(c) else {
        return Err(HfError::rejected(format!("region {region} is not beside {c}")));
    };
    let Some(eo) = edge_of(over) else {
        return Err(HfError::rejected(format!("region {region} is not beside {over}")));
    };
    if d.edges()[eo].ends.is_none() {
        return Err(HfError::rejected(format!("{over} crosses nothing, so there is no room to slide over it")));
    }
    // Walk `over` with `region` on the left; the parallel copy runs on that side.
    let sigma0 = Side::new(eo, d.edges()[eo].left == region);
    let sigma = sides_from(d, over, sigma0);
    let m = sigma.len();
    let t: Vec<Side> = sigma.iter().map(|&s| d.rays(d.tail(s).expect("vertex"))[(ray_index(d, s) + 1) % 4]).collect();
    let rc_left = d.edges()[ec].left == region;

    let mut cx = Complex::from_diagram(d);
    let mut requests = vec![(ec, Slot::Middle(0)), (ec, Slot::Middle(1))];
    requests.extend(t.iter().map(|&s| (s.edge, near(s))));
    let marks = place(&mut cx, &requests)?;
    let (w1, w2) = (marks[0], marks[1]);
    let (s1, s2) = if rc_left { (w1, w2) } else { (w2, w1) };
    let a = &marks[2..];
    // Corner at a_j facing L_j (right of t_j) or L_{j-1} (left of t_j), as seen on the original edge.
    let toward_next = |j: usize| !t[j].forward;
    let toward_prev = |j: usize| t[j].forward;

    let c1_from = a[0].corner(&cx, toward_next(0));
    let c1_to = s2.corner(&cx, rc_left);
    let c1 = chord(&mut cx, c1_from, c1_to, c)?;
    let j1 = 1 % m;
    let c2_from = a[j1].corner(&cx, toward_prev(j1));
    let c2_to = s1.corner(&cx, rc_left);
    let c2 = chord(&mut cx, c2_from, c2_to, c)?;
    let mut pushoff = Vec::new();
    for j in 1..m {
        let next = (j + 1) % m;
        let from = a[next].corner(&cx, toward_prev(next));
        let to = a[j].corner(&cx, toward_next(j));
        pushoff.push(chord(&mut cx, from, to, c)?);
    }
    let mid = between(w1, w2);
    let mut chain: BTreeMap<usize, i64> = BTreeMap::new();
    *chain.entry(c1).or_default() -= 1;
    *chain.entry(c2).or_default() += 1;
    for p in pushoff {
        *chain.entry(p).or_default() += 1;
    }
    // The middle segment, run from s1 to s2.
    *chain.entry(mid).or_default() += if s1.v == w1.v { 1 } else { -1 };
    let homologous = [1, -1].iter().any(|&sign| {
        let mut z = chain.clone();
        chain_of(&sigma, sign, &mut z);
        cx.bounds(&z)
    });
    if !homologous {
        return Err(HfError::consistency(format!("slid curve is not homologous to {c} ± {over}")));
    }
    cut_and_smooth(&mut cx, &[mid], &[w1.v, w2.v])?;
    Ok(cx.finalize()?.0)
}

/// Apply `count` Dehn twists of `curve` along `around` (right-handed for
/// positive counts). `curve` must cross `around` exactly once; each twist
/// then adds `[around]` to the class of `curve`.
pub fn twist(d: &Diagram, curve: CurveId, around: CurveId, count: i64) -> Result<Diagram> {
    check_curve(d, curve)?;
    check_curve(d, around)?;
    if curve.class == around.class {
        return Err(HfError::rejected("twisting along a curve of the same class does nothing"));
    }
    let mut out = d.clone();
    for _ in 0..count.unsigned_abs() {
        out = if count > 0 { twist_once(&out, curve, around)? } else { mirror(&twist_once(&mirror(&out)?, curve, around)?)? };
    }
    Ok(out)
}

/// The same diagram on the oppositely oriented surface.
pub fn mirror(d: &Diagram) -> Result<Diagram> {
    let mut cx = Complex::from_diagram(d);
    cx.mirror();
    Ok(cx.finalize()?.0)
}

fn twist_once(d: &Diagram, curve: CurveId, around: CurveId) -> Result<Diagram> {
    let shared: Vec<usize> = d.curve_vertices(around).into_iter().filter(|&v| d.vertex_curve_of(v, curve.class) == Some(curve)).collect();
    let [p] = shared[..] else {
        return Err(HfError::rejected(format!("{curve} meets {around} {} times; twisting needs exactly one crossing", shared.len())));
    };
    let rays = d.rays(p);
    let a_plus = *sides_from(d, around, d.curve_sides(around)[0]).iter().find(|&&s| d.tail(s) == Some(p)).expect("around passes p");
    let i = ray_index(d, a_plus);
    let (c_up, a_minus, c_down) = (rays[(i + 1) % 4], rays[(i + 2) % 4], rays[(i + 3) % 4]);
    let sigma = sides_from(d, around, a_plus);
    let m = sigma.len();
    // Transverse rays on the right of `around` at its other vertices.
    let t: Vec<Side> = sigma[1..].iter().map(|&s| d.rays(d.tail(s).expect("vertex"))[(ray_index(d, s) + 3) % 4]).collect();

    let mut cx = Complex::from_diagram(d);
    let mut requests = vec![(c_down.edge, near(c_down)), (c_up.edge, near(c_up)), (a_minus.edge, near(a_minus))];
    requests.extend(t.iter().map(|&s| (s.edge, near(s))));
    let marks = place(&mut cx, &requests)?;
    let (s, q, p2) = (marks[0], marks[1], marks[2]);
    let b = &marks[3..];
    // Sides of a mark relative to the original edge: the ray's left is the
    // original left when the ray runs along the edge.
    let left_of = |ray: Side| ray.forward;
    let right_of = |ray: Side| !ray.forward;

    let mut pieces = Vec::new();
    let mut from = s.corner(&cx, left_of(c_down));
    for j in 1..m {
        let to = b[j - 1].corner(&cx, right_of(t[j - 1]));
        pieces.push((chord(&mut cx, from, to, curve)?, 1));
        from = b[j - 1].corner(&cx, left_of(t[j - 1]));
    }
    // Arrive at the new crossing from the right of `around` (the left of a_minus).
    let to = p2.corner(&cx, left_of(a_minus));
    pieces.push((chord(&mut cx, from, to, curve)?, 1));
    let q_corner = q.corner(&cx, left_of(c_up));
    let p2_corner = p2.corner(&cx, right_of(a_minus));
    pieces.push((chord(&mut cx, q_corner, p2_corner, curve)?, -1));

    // Old segments p..s (down) and p..q (up).
    let seg = |mark: Mark, ray: Side| if ray.forward { mark.before } else { mark.after };
    let (down, up) = (seg(s, c_down), seg(q, c_up));
    let mut chain: BTreeMap<usize, i64> = BTreeMap::new();
    for (e, sign) in pieces {
        *chain.entry(e).or_default() += sign;
    }
    // Close the loop: from q back to p and from p down to s.
    *chain.entry(up).or_default() += if c_up.forward { -1 } else { 1 };
    *chain.entry(down).or_default() += if c_down.forward { 1 } else { -1 };
    let homologous = [1, -1].iter().any(|&sign| {
        let mut z = chain.clone();
        chain_of(&sigma, sign, &mut z);
        // The new crossing split an edge of `around`; its second piece carries the same multiplicity.
        let m = z.get(&p2.before).copied().unwrap_or(0);
        z.insert(p2.after, m);
        cx.bounds(&z)
    });
    if !homologous {
        return Err(HfError::consistency(format!("twisted curve is not homologous to {curve} ± {around}")));
    }
    cut_and_smooth(&mut cx, &[down, up], &[p, s.v, q.v])?;
    Ok(cx.finalize()?.0)
}

/// One line of a move script.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    Stabilize { r1: usize, r2: usize },
    Finger { edge: usize, path: Vec<usize> },
    Handleslide { curve: CurveId, over: CurveId, path: Vec<usize> },
    Twist { curve: CurveId, around: CurveId, count: i64 },
    AddPoint { region: usize },
}

impl Move {
    pub fn apply(&self, d: &Diagram) -> Result<Diagram> {
        match self {
            Move::Stabilize { r1, r2 } => stabilize(d, *r1, *r2),
            Move::Finger { edge, path } => finger_move(d, *edge, path),
            Move::Handleslide { curve, over, path } => handleslide(d, *curve, *over, path),
            Move::Twist { curve, around, count } => twist(d, *curve, *around, *count),
            Move::AddPoint { region } => add_point(d, *region),
        }
    }
}

fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", items.join(", "))
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Stabilize { r1, r2 } => write!(f, "stabilize({r1}, {r2})"),
            Move::Finger { edge, path } => write!(f, "finger({edge}, {})", list(path)),
            Move::Handleslide { curve, over, path } => write!(f, "handleslide({curve}, {over}, {})", list(path)),
            Move::Twist { curve, around, count } => write!(f, "twist({curve}, {around}, {count})"),
            Move::AddPoint { region } => write!(f, "add_point({region})"),
        }
    }
}

/// An ordered list of moves separated by newlines or `;`, e.g. `finger(3, [0, 2])`.
/// Blank lines and `#` comments are ignored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveScript {
    pub moves: Vec<Move>,
}

impl MoveScript {
    pub fn parse(text: &str) -> Result<MoveScript> {
        let mut moves = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            for part in line.split(';').map(str::trim).filter(|p| !p.is_empty()) {
                moves.push(parse_move(part).map_err(|msg| HfError::Syntax { line: i + 1, msg })?);
            }
        }
        Ok(MoveScript { moves })
    }

    /// Run the moves in order; an error names the failing line's move.
    pub fn apply(&self, d: &Diagram) -> Result<Diagram> {
        let mut cur = d.clone();
        for (i, m) in self.moves.iter().enumerate() {
            cur = m.apply(&cur).map_err(|e| match e {
                HfError::Rejected(msg) => HfError::rejected(format!("move {} ({m}): {msg}", i + 1)),
                other => other,
            })?;
        }
        Ok(cur)
    }
}

impl fmt::Display for MoveScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.moves {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Split `name(a, [b, c], d)` into the name and its top-level arguments.
fn split_call(line: &str) -> std::result::Result<(&str, Vec<&str>), String> {
    let open = line.find('(').ok_or("expected `name(arguments)`")?;
    let inner = line[open + 1..].strip_suffix(')').ok_or("missing closing parenthesis")?;
    let mut args = Vec::new();
    let (mut depth, mut start) = (0, 0);
    for (i, ch) in inner.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                args.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if !inner.trim().is_empty() {
        args.push(inner[start..].trim());
    }
    Ok((line[..open].trim(), args))
}

fn parse_move(line: &str) -> std::result::Result<Move, String> {
    let (name, args) = split_call(line)?;
    let int = |s: &str| s.parse::<usize>().map_err(|_| format!("expected a nonnegative integer, got `{s}`"));
    let curve = |s: &str| s.parse::<CurveId>().map_err(|_| format!("expected a curve like a0, got `{s}`"));
    let path = |s: &str| -> std::result::Result<Vec<usize>, String> {
        let inner = s.strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or(format!("expected a region list like [0, 2], got `{s}`"))?;
        inner.split(',').map(str::trim).filter(|x| !x.is_empty()).map(int).collect()
    };
    let arity = |n: usize| if args.len() == n { Ok(()) } else { Err(format!("{name} takes {n} arguments, got {}", args.len())) };
    match name {
        "stabilize" => {
            arity(2)?;
            Ok(Move::Stabilize { r1: int(args[0])?, r2: int(args[1])? })
        }
        "finger" => {
            arity(2)?;
            Ok(Move::Finger { edge: int(args[0])?, path: path(args[1])? })
        }
        "handleslide" => {
            arity(3)?;
            Ok(Move::Handleslide { curve: curve(args[0])?, over: curve(args[1])?, path: path(args[2])? })
        }
        "twist" => {
            arity(3)?;
            let count = args[2].parse::<i64>().map_err(|_| format!("expected a twist count, got `{}`", args[2]))?;
            Ok(Move::Twist { curve: curve(args[0])?, around: curve(args[1])?, count })
        }
        "add_point" => {
            arity(1)?;
            Ok(Move::AddPoint { region: int(args[0])? })
        }
        other => Err(format!("unknown move `{other}`")),
    }
}
