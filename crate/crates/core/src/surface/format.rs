//! The line-based `.hd` diagram format.
//!
//! ```text
//! hd 1 genus=1 k=0 triple=0
//! vertex 0 0:s 1:s 0:t 1:t
//! edge 0 a0 0 0 left=0 right=0
//! edge 1 b0 0 0 left=0 right=0
//! region 0 genus=0 cycles=1 corners=4
//! cycle 0:- 1:- 0:+ 1:+
//! basepoint z1 region=0
//! ```
//!
//! Closed edges of curves without crossings use `-` for both endpoints. The
//! `corners=` field on region lines is optional; when present it is checked.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{CurveClass, CurveId, Diagram, DiagramParts, Edge, EdgeEnd, End, Region, Side, Vertex};
use crate::error::{HfError, Result};

fn syntax(line: usize, msg: impl Into<String>) -> HfError {
    HfError::Syntax { line, msg: msg.into() }
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| syntax(line, format!("expected {what}, found `{tok}`")))
}

fn parse_key<T: std::str::FromStr>(line: usize, tok: Option<&str>, key: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing `{key}=`")))?;
    let val = tok
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| syntax(line, format!("expected `{key}=...`, found `{tok}`")))?;
    parse_num(line, val, key)
}

pub(crate) fn parse_curve(tok: &str) -> Option<CurveId> {
    let mut chars = tok.chars();
    let class = CurveClass::from_symbol(chars.next()?)?;
    let index = chars.as_str().parse().ok()?;
    Some(CurveId { class, index })
}

fn parse_side(line: usize, tok: &str) -> Result<Side> {
    let (e, dir) = tok.split_once(':').ok_or_else(|| syntax(line, format!("bad side `{tok}`")))?;
    let forward = match dir {
        "+" => true,
        "-" => false,
        _ => return Err(syntax(line, format!("bad side direction in `{tok}`"))),
    };
    Ok(Side { edge: parse_num(line, e, "edge id")?, forward })
}

fn parse_end(line: usize, tok: &str) -> Result<EdgeEnd> {
    let (e, end) = tok.split_once(':').ok_or_else(|| syntax(line, format!("bad edge end `{tok}`")))?;
    let end = match end {
        "s" => End::Source,
        "t" => End::Target,
        _ => return Err(syntax(line, format!("edge end must be `s` or `t` in `{tok}`"))),
    };
    Ok(EdgeEnd { edge: parse_num(line, e, "edge id")?, end })
}

fn insert_unique<T>(map: &mut BTreeMap<usize, T>, id: usize, v: T, line: usize, what: &str) -> Result<()> {
    if map.insert(id, v).is_some() {
        return Err(syntax(line, format!("duplicate {what} id {id}")));
    }
    Ok(())
}

fn dense<T>(map: BTreeMap<usize, T>, what: &str) -> Result<Vec<T>> {
    let n = map.len();
    if let Some((&max, _)) = map.last_key_value() {
        if max + 1 != n {
            return Err(HfError::invalid(format!("{what} ids must be 0..{n}, found id {max}")));
        }
    }
    Ok(map.into_values().collect())
}

/// Parse and validate a diagram file.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut header: Option<(u32, usize, bool)> = None;
    let mut vertices = BTreeMap::new();
    let mut edges = BTreeMap::new();
    let mut regions: BTreeMap<usize, (Region, Option<usize>, usize)> = BTreeMap::new();
    let mut basepoints = BTreeMap::new();
    // Region currently collecting `cycle` lines, with the number still expected.
    let mut open: Option<(usize, usize)> = None;

    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let kw = toks.next().unwrap_or("");
        if kw != "cycle" {
            if let Some((r, left)) = open {
                if left > 0 {
                    return Err(syntax(ln, format!("region {r} expects {left} more cycle line(s)")));
                }
            }
            open = None;
        }
        if kw != "hd" && header.is_none() {
            return Err(syntax(ln, "file must start with an `hd 1 ...` header"));
        }
        match kw {
            "hd" => {
                if header.is_some() {
                    return Err(syntax(ln, "duplicate header"));
                }
                let version: u32 = parse_num(ln, toks.next().unwrap_or(""), "format version")?;
                if version != 1 {
                    return Err(syntax(ln, format!("unsupported format version {version}")));
                }
                let genus = parse_key(ln, toks.next(), "genus")?;
                let k = parse_key(ln, toks.next(), "k")?;
                let triple: u8 = parse_key(ln, toks.next(), "triple")?;
                if triple > 1 {
                    return Err(syntax(ln, "triple must be 0 or 1"));
                }
                header = Some((genus, k, triple == 1));
            }
            "vertex" => {
                let id = parse_num(ln, toks.next().unwrap_or(""), "vertex id")?;
                let ends: Vec<EdgeEnd> = toks.by_ref().map(|t| parse_end(ln, t)).collect::<Result<_>>()?;
                let rotation: [EdgeEnd; 4] = ends
                    .try_into()
                    .map_err(|v: Vec<EdgeEnd>| syntax(ln, format!("vertex {id} lists {} edge ends, expected 4 (non-4-valent vertex)", v.len())))?;
                insert_unique(&mut vertices, id, Vertex { rotation }, ln, "vertex")?;
            }
            "edge" => {
                let id = parse_num(ln, toks.next().unwrap_or(""), "edge id")?;
                let ctok = toks.next().unwrap_or("");
                let curve = parse_curve(ctok).ok_or_else(|| syntax(ln, format!("bad curve `{ctok}`")))?;
                let from = toks.next().ok_or_else(|| syntax(ln, "missing source vertex"))?;
                let to = toks.next().ok_or_else(|| syntax(ln, "missing target vertex"))?;
                let ends = match (from, to) {
                    ("-", "-") => None,
                    ("-", _) | (_, "-") => return Err(syntax(ln, "closed edges use `-` for both endpoints")),
                    (f, t) => Some((parse_num(ln, f, "vertex id")?, parse_num(ln, t, "vertex id")?)),
                };
                let left = parse_key(ln, toks.next(), "left")?;
                let right = parse_key(ln, toks.next(), "right")?;
                insert_unique(&mut edges, id, Edge { curve, ends, left, right }, ln, "edge")?;
            }
            "region" => {
                let id = parse_num(ln, toks.next().unwrap_or(""), "region id")?;
                let genus = parse_key(ln, toks.next(), "genus")?;
                let n: usize = parse_key(ln, toks.next(), "cycles")?;
                let corners = match toks.next() {
                    Some(t) => Some(parse_key(ln, Some(t), "corners")?),
                    None => None,
                };
                let region = Region { genus, cycles: Vec::new(), basepoints: Vec::new() };
                insert_unique(&mut regions, id, (region, corners, ln), ln, "region")?;
                open = Some((id, n));
            }
            "cycle" => {
                let Some((r, left)) = open.as_mut() else {
                    return Err(syntax(ln, "`cycle` line outside a region"));
                };
                if *left == 0 {
                    return Err(syntax(ln, format!("region {r} has more cycle lines than declared")));
                }
                *left -= 1;
                let cycle: Vec<Side> = toks.by_ref().map(|t| parse_side(ln, t)).collect::<Result<_>>()?;
                if cycle.is_empty() {
                    return Err(syntax(ln, "empty cycle"));
                }
                regions.get_mut(r).expect("open region exists").0.cycles.push(cycle);
                continue;
            }
            "basepoint" => {
                let name = toks.next().unwrap_or("");
                let idx: usize = name
                    .strip_prefix('z')
                    .and_then(|n| n.parse().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| syntax(ln, format!("basepoint name must be z1, z2, ..., found `{name}`")))?;
                let region: usize = parse_key(ln, toks.next(), "region")?;
                insert_unique(&mut basepoints, idx - 1, region, ln, "basepoint")?;
            }
            other => return Err(syntax(ln, format!("unknown keyword `{other}`"))),
        }
        if let Some(extra) = toks.next() {
            return Err(syntax(ln, format!("unexpected token `{extra}`")));
        }
    }
    if let Some((r, left)) = open {
        if left > 0 {
            return Err(HfError::invalid(format!("region {r} expects {left} more cycle line(s)")));
        }
    }
    let (genus, k, triple) = header.ok_or_else(|| syntax(1, "missing header"))?;
    let regions = dense(regions, "region")?;
    let stated_corners = regions.iter().map(|(_, c, _)| *c).collect();
    let parts = DiagramParts {
        genus,
        k,
        triple,
        vertices: dense(vertices, "vertex")?,
        edges: dense(edges, "edge")?,
        regions: regions.into_iter().map(|(r, _, _)| r).collect(),
        basepoints: dense(basepoints, "basepoint")?,
        stated_corners,
    };
    Diagram::from_parts(parts)
}

/// Canonical text form: ids ascending, cycles in canonical rotation.
pub(crate) fn serialize(d: &Diagram) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "hd 1 genus={} k={} triple={}", d.genus, d.k, d.triple as u8);
    for (v, vertex) in d.vertices.iter().enumerate() {
        let _ = write!(out, "vertex {v}");
        for ee in vertex.rotation {
            let _ = write!(out, " {}:{}", ee.edge, if ee.end == End::Source { 's' } else { 't' });
        }
        out.push('\n');
    }
    for (e, edge) in d.edges.iter().enumerate() {
        let (s, t) = match edge.ends {
            Some((s, t)) => (s.to_string(), t.to_string()),
            None => ("-".into(), "-".into()),
        };
        let _ = writeln!(out, "edge {e} {} {s} {t} left={} right={}", edge.curve, edge.left, edge.right);
    }
    for (r, region) in d.regions.iter().enumerate() {
        let _ = writeln!(
            out,
            "region {r} genus={} cycles={} corners={}",
            region.genus,
            region.cycles.len(),
            d.corner_count(r)
        );
        for cycle in &region.cycles {
            out.push_str("cycle");
            for s in cycle {
                let _ = write!(out, " {s}");
            }
            out.push('\n');
        }
    }
    for (i, r) in d.basepoints.iter().enumerate() {
        let _ = writeln!(out, "basepoint z{} region={r}", i + 1);
    }
    out
}
