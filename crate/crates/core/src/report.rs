//! Plain-text and TSV renderings shared by the CLI and the corpus runner.
//!
//! All output is a pure function of the input, so reports can be diffed.

use std::fmt::Write as _;

use crate::cobordism::{ClassRank, RankReport};
use crate::floer::FloerComplex;
use crate::surface::{AdjacencyCheck, Diagram, Niceness};
use crate::triangles::{triangle_index, triangle_index_branch, EmbeddedTriangle, TriangleMap};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn grading_table(t: &[(i64, usize)]) -> String {
    t.iter().map(|(g, r)| format!("{g}:{r}")).collect::<Vec<_>>().join(" ")
}

pub fn info(d: &Diagram) -> String {
    let mut s = String::new();
    writeln!(s, "genus {}", d.genus()).unwrap();
    writeln!(s, "k {}", d.k()).unwrap();
    writeln!(s, "triple {}", yes(d.is_triple())).unwrap();
    writeln!(s, "vertices {}", d.vertices().len()).unwrap();
    writeln!(s, "edges {}", d.edges().len()).unwrap();
    writeln!(s, "regions {}", d.regions().len()).unwrap();
    writeln!(s, "basepoint regions {}", list(d.basepoint_regions())).unwrap();
    writeln!(s, "curves {}", d.curves().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")).unwrap();
    s
}

/// Niceness, admissibility and the left-adjacency property.
///
/// Returns the text and whether every check passed.
pub fn validate(d: &Diagram) -> (String, bool) {
    let mut s = String::new();
    let mut ok = true;
    match d.niceness() {
        Niceness::Nice => writeln!(s, "nice yes").unwrap(),
        Niceness::Bad(r) => {
            ok = false;
            writeln!(s, "nice no (bad regions {})", list(r)).unwrap();
        }
    }
    let admissible = d.is_weakly_admissible();
    ok &= admissible;
    writeln!(s, "weakly admissible {}", yes(admissible)).unwrap();
    let mut violations = Vec::new();
    for c in d.curves() {
        for left in [true, false] {
            if d.left_adjacency_check(c, left) == AdjacencyCheck::HypothesisViolated {
                violations.push(format!("{c} {}", if left { "left" } else { "right" }));
            }
        }
    }
    if violations.is_empty() {
        writeln!(s, "punctured region beside every curve yes").unwrap();
    } else {
        ok = false;
        writeln!(s, "punctured region beside every curve no ({})", violations.join(", ")).unwrap();
    }
    (s, ok)
}

pub fn hf(cx: &FloerComplex, tsv: bool) -> String {
    let mut s = String::new();
    if tsv {
        s.push_str("class\tgrading\trank\n");
        for c in 0..cx.classes.len() {
            match cx.class_rank_by_grading(c) {
                Some(t) => {
                    for (g, r) in t {
                        writeln!(s, "{c}\t{g}\t{r}").unwrap();
                    }
                }
                None => writeln!(s, "{c}\t-\t{}", cx.class_rank(c)).unwrap(),
            }
        }
        return s;
    }
    writeln!(s, "rank {}", cx.total_rank()).unwrap();
    writeln!(s, "generators {}", cx.len()).unwrap();
    writeln!(s, "classes {}", cx.classes.len()).unwrap();
    for c in 0..cx.classes.len() {
        let gradings = match cx.class_rank_by_grading(c) {
            Some(t) => grading_table(&t),
            None => "ungraded".to_string(),
        };
        writeln!(s, "class {c}: generators {} rank {} gradings {gradings}", cx.classes[c].members.len(), cx.class_rank(c))
            .unwrap();
    }
    s
}

pub fn triangles(d: &Diagram, tris: &[EmbeddedTriangle], tsv: bool) -> String {
    let mut s = String::new();
    if tsv {
        s.push_str("triangle\tcorners\tpositive\teuler\tindex\tregions\n");
    } else {
        writeln!(s, "triangles {}", tris.len()).unwrap();
        writeln!(s, "positive {}", tris.iter().filter(|t| t.positive).count()).unwrap();
    }
    for (i, t) in tris.iter().enumerate() {
        let e = t.euler_measure(d);
        let zero = num_rational::BigRational::from_integer(0.into());
        let i1 = triangle_index(&e, 1, 1);
        let i2 = triangle_index_branch(&e, &zero, 1);
        let index = if i1 == i2 { i1.to_string() } else { format!("{i1}/{i2}") };
        let corners = list(t.corners);
        let regions = list(t.domain.support());
        if tsv {
            writeln!(s, "{i}\t{corners}\t{}\t{e}\t{index}\t{regions}", yes(t.positive)).unwrap();
        } else {
            writeln!(
                s,
                "triangle {i}: corners {corners} positive {} e {e} index {index} regions {regions}",
                yes(t.positive)
            )
            .unwrap();
        }
    }
    s
}

fn class_name(c: &ClassRank) -> String {
    let [x, w, y] = c.label.corner_classes;
    format!("{} (ab {x}, bg {w}, ag {y})", c.class)
}

/// The triangle map, per class. `raw` adds the matrices with a caveat.
pub fn map(m: &TriangleMap, classes: &[ClassRank], raw: bool, tsv: bool) -> String {
    let mut s = String::new();
    if tsv {
        s.push_str("class\tcorner_classes\traw_rank\trank\n");
        for c in classes {
            writeln!(s, "{}\t{}\t{}\t{}", c.class, list(c.label.corner_classes), c.raw, c.rank).unwrap();
        }
    } else {
        let theta: Vec<String> = m.theta_generators().into_iter().map(|g| list(g.iter())).collect();
        writeln!(s, "theta {}", theta.join(" + ")).unwrap();
        writeln!(s, "triangles {} (positive {})", m.triangles.len(), m.triangles.iter().filter(|t| t.positive).count())
            .unwrap();
        writeln!(s, "collections {}", m.collections).unwrap();
        writeln!(s, "classes {}", m.labels.len()).unwrap();
        for c in classes {
            writeln!(s, "class {}: rank {} (raw {})", class_name(c), c.rank, c.raw).unwrap();
        }
    }
    if raw {
        s.push_str("# matrices are defined only up to automorphisms of source and target; compare ranks, not entries\n");
        for c in classes {
            writeln!(s, "# class {} ({} x {})", c.class, m.matrices[c.class].rows(), m.matrices[c.class].cols()).unwrap();
            write!(s, "{}", m.matrices[c.class]).unwrap();
        }
    }
    s
}

pub fn rank(r: &RankReport, tsv: bool) -> String {
    let mut s = String::new();
    if tsv {
        s.push_str("class\tgrading\trank\thypotheses\n");
        for c in &r.classes {
            match &c.by_grading {
                Some(t) => {
                    for (g, k) in t {
                        writeln!(s, "{}\t{g}\t{k}\t{}", c.class, r.hypotheses).unwrap();
                    }
                }
                None => writeln!(s, "{}\t-\t{}\t{}", c.class, c.rank, r.hypotheses).unwrap(),
            }
        }
        return s;
    }
    writeln!(s, "rank {}", r.total()).unwrap();
    writeln!(s, "l {} one-handles {} three-handles {}", r.l, r.one_handles, r.three_handles).unwrap();
    writeln!(s, "hypotheses: {}", r.hypotheses).unwrap();
    for c in &r.classes {
        let gradings = match &c.by_grading {
            Some(t) => grading_table(t),
            None => "ungraded".to_string(),
        };
        writeln!(s, "class {}: rank {} gradings {gradings}", class_name(c), c.rank).unwrap();
    }
    s
}
