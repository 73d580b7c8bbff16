use super::complex::Complex;
use super::{CurveClass, CurveId, Diagram};
use crate::error::{HfError, Result};

/// Outcome of the niceness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Niceness {
    Nice,
    /// Unpunctured regions that are not bigons, rectangles (or triangles, for triple diagrams).
    Bad(Vec<usize>),
}

impl Niceness {
    pub fn is_nice(&self) -> bool {
        matches!(self, Niceness::Nice)
    }
}

/// Outcome of looking for a punctured region along one side of a curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdjacencyCheck {
    /// A punctured region on the requested side, and an edge of the curve it touches.
    Found { region: usize, edge: usize },
    /// No punctured region touches that side; the input cannot have been nice.
    HypothesisViolated,
}

impl Diagram {
    /// Connected components of the surface cut along the curves of `class`,
    /// as sorted lists of region ids, ordered by smallest region.
    pub fn components_without(&self, class: CurveClass) -> Vec<Vec<usize>> {
        let n = self.regions.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            if e.curve.class != class {
                let (a, b) = (find(&mut parent, e.left), find(&mut parent, e.right));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; n];
        for r in 0..n {
            let root = find(&mut parent, r);
            if index[root] == usize::MAX {
                index[root] = comps.len();
                comps.push(Vec::new());
            }
            comps[index[root]].push(r);
        }
        comps
    }

    /// A region is good if it is a disk with 2 or 4 corners, or 3 corners in a
    /// triple diagram. Regions holding a basepoint are exempt.
    pub fn is_region_good(&self, r: usize) -> bool {
        let region = &self.regions[r];
        if !region.is_disk() {
            return false;
        }
        match self.corner_count(r) {
            2 | 4 => true,
            3 => self.triple,
            _ => false,
        }
    }

    pub fn niceness(&self) -> Niceness {
        let bad: Vec<usize> =
            (0..self.regions.len()).filter(|&r| !self.regions[r].is_punctured() && !self.is_region_good(r)).collect();
        if bad.is_empty() {
            Niceness::Nice
        } else {
            Niceness::Bad(bad)
        }
    }

    pub fn is_nice(&self) -> bool {
        self.niceness().is_nice()
    }

    /// The double diagram obtained by erasing the curves of `class`.
    pub fn forget_class(&self, class: CurveClass) -> Result<Diagram> {
        self.forget_class_with_map(class).map(|(d, _)| d)
    }

    /// Like [`Diagram::forget_class`], also returning the region of the result
    /// that contains each region of `self`.
    pub fn forget_class_with_map(&self, class: CurveClass) -> Result<(Diagram, Vec<usize>)> {
        if !self.triple {
            return Err(HfError::rejected("only triple diagrams have a class to forget"));
        }
        let mut cx = Complex::from_diagram(self);
        let doomed: Vec<usize> = (0..self.edges.len()).filter(|&e| self.edges[e].curve.class == class).collect();
        for e in doomed {
            cx.delete_edge(e);
        }
        cx.smooth_all()?;
        cx.triple = false;
        if class != CurveClass::Gamma {
            // Keep the remaining two classes named alpha and beta, in their original order.
            let (first, second) = match class {
                CurveClass::Alpha => (CurveClass::Beta, CurveClass::Gamma),
                _ => (CurveClass::Alpha, CurveClass::Gamma),
            };
            for e in cx.edges.iter_mut().flatten() {
                if e.curve.class == first {
                    e.curve.class = CurveClass::Alpha;
                } else if e.curve.class == second {
                    e.curve.class = CurveClass::Beta;
                }
            }
        }
        let n = self.regions.len();
        let (d, map) = cx.finalize()?;
        let map = map[..n].iter().map(|r| r.expect("every old region survives inside a merged one")).collect();
        Ok((d, map))
    }

    /// The double diagram made of two of the three classes, with the first
    /// renamed alpha and the second beta.
    pub fn pair(&self, a: CurveClass, b: CurveClass) -> Result<(Diagram, Vec<usize>)> {
        if !self.triple {
            if (a, b) == (CurveClass::Alpha, CurveClass::Beta) {
                return Ok((self.clone(), (0..self.regions.len()).collect()));
            }
            return Err(HfError::rejected(format!("a double diagram has no {a}/{b} pair")));
        }
        if a == b {
            return Err(HfError::rejected("pair needs two different classes"));
        }
        let forget = CurveClass::ALL.into_iter().find(|&c| c != a && c != b).expect("three classes");
        if a > b {
            return Err(HfError::rejected(format!("pairs are taken in class order ({b} before {a})")));
        }
        self.forget_class_with_map(forget)
    }

    /// Look for a punctured region lying to the left (`left = true`) or right
    /// of `curve`, orienting the curve by [`Diagram::curve_sides`].
    pub fn left_adjacency_check(&self, curve: CurveId, left: bool) -> AdjacencyCheck {
        for s in self.curve_sides(curve) {
            let side = if left { s } else { s.flip() };
            let r = self.side_region(side);
            if self.regions[r].is_punctured() {
                return AdjacencyCheck::Found { region: r, edge: s.edge };
            }
        }
        AdjacencyCheck::HypothesisViolated
    }
}
