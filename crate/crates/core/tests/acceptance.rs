//! Acceptance checks. Prints one pass/fail line per criterion, then fails if any failed.
//!
//! ```text
//! cargo test --release --test acceptance -- --nocapture
//! ```

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use hfcalc::cobordism::two_handle_rank;
use hfcalc::corpus::run_corpus;
use hfcalc::floer::FloerComplex;
use hfcalc::moves::{finger_move, MoveScript};
use hfcalc::standard::{lens_space, s1_cross_s2, sphere, toy_triple};
use hfcalc::surface::{AdjacencyCheck, Diagram};
use hfcalc::triangles::{
    brute_force_triangles, enumerate_triangles, source_euler_from_branch, triangle_index, triangle_index_branch, TriangleMap,
};

use common::{corpus_diagrams, corpus_dir, corpus_doubles, manifest};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn hf(d: &Diagram) -> Result<FloerComplex, String> {
    FloerComplex::new(d).map_err(|e| e.to_string())
}

/// Nonzero ranks per class, sorted.
fn ranks(d: &Diagram) -> Result<Vec<usize>, String> {
    let mut r: Vec<usize> = if d.is_triple() {
        let m = TriangleMap::new(d).map_err(|e| e.to_string())?;
        (0..m.labels.len()).map(|c| m.rank(c)).collect()
    } else {
        let cx = hf(d)?;
        (0..cx.classes.len()).map(|c| cx.class_rank(c)).collect()
    };
    r.retain(|&x| x > 0);
    r.sort_unstable();
    Ok(r)
}

fn rank_table() -> Check {
    let start = Instant::now();
    let s3 = hf(&sphere().unwrap())?;
    ensure(s3.total_rank() == 1, format!("S^3 rank {}", s3.total_rank()))?;
    let s1s2 = hf(&s1_cross_s2().unwrap())?;
    let split: Vec<Option<Vec<(i64, usize)>>> = (0..s1s2.classes.len()).map(|c| s1s2.class_rank_by_grading(c)).collect();
    ensure(
        s1s2.total_rank() == 2 && split == vec![Some(vec![(0, 1), (1, 1)])],
        format!("S^1 x S^2 rank {} split {split:?}", s1s2.total_rank()),
    )?;
    for p in [2, 3, 5] {
        let cx = hf(&lens_space(p).unwrap())?;
        let per: Vec<usize> = (0..cx.classes.len()).map(|c| cx.class_rank(c)).collect();
        ensure(per == vec![1; p], format!("L({p},1) ranks {per:?}"))?;
    }
    let t = start.elapsed().as_secs_f64();
    ensure(t < 5.0, format!("took {t:.2} s"))?;
    Ok(format!("S^3 1, S^1xS^2 1+1 in gradings 0,1, L(p,1) p classes of rank 1 for p = 2,3,5 ({t:.3} s)"))
}

fn differential() -> Check {
    let mut n = 0;
    let mut entries = 0;
    for (name, d) in corpus_doubles() {
        let cx = hf(&d).map_err(|e| format!("{name}: {e}"))?;
        ensure(cx.differential.mul(&cx.differential).is_zero(), format!("{name}: d^2 != 0"))?;
        for (y, x) in cx.differential.nonzero_entries() {
            entries += 1;
            ensure(cx.class_of[x] == cx.class_of[y], format!("{name}: {x} -> {y} crosses classes"))?;
            if let (Some(gx), Some(gy)) = (cx.gradings[x], cx.gradings[y]) {
                ensure(gx - gy == 1, format!("{name}: {x} -> {y} drops grading by {}", gx - gy))?;
            }
        }
        n += 1;
    }
    Ok(format!("{n} double diagrams, {entries} nonzero entries"))
}

fn admissibility() -> Check {
    let corpus = corpus_diagrams();
    let mut nice = 0;
    for (name, d) in &corpus {
        if d.is_nice() {
            nice += 1;
            ensure(d.is_weakly_admissible(), format!("{name} is nice but not weakly admissible"))?;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let (mut moved, mut moved_nice, mut attempts) = (0, 0, 0);
    while moved < 50 {
        attempts += 1;
        ensure(attempts < 100_000, "could not generate 50 finger moves")?;
        let (_, d) = &corpus[rng.random_range(0..corpus.len())];
        let e = rng.random_range(0..d.edges().len());
        let r1 = if rng.random::<bool>() { d.edges()[e].left } else { d.edges()[e].right };
        let mut path = vec![r1, rng.random_range(0..d.regions().len())];
        if rng.random::<bool>() {
            path.push(rng.random_range(0..d.regions().len()));
        }
        let Ok(f) = finger_move(d, e, &path) else { continue };
        moved += 1;
        if f.is_nice() {
            moved_nice += 1;
            ensure(f.is_weakly_admissible(), format!("finger({e}, {path:?}) is nice but not weakly admissible"))?;
        }
    }
    Ok(format!("{nice} nice corpus diagrams; 50 random finger moves ({moved_nice} nice) from {attempts} attempts"))
}

fn left_adjacency() -> Check {
    let mut checks = 0;
    for (name, d) in corpus_diagrams() {
        if !d.is_nice() {
            continue;
        }
        for c in d.curves() {
            for left in [true, false] {
                ensure(
                    d.left_adjacency_check(c, left) != AdjacencyCheck::HypothesisViolated,
                    format!("{name}: no punctured region {} of {c}", if left { "left" } else { "right" }),
                )?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} curve sides"))
}

fn triangle_enumeration() -> Check {
    let start = Instant::now();
    let quarter = BigRational::new(1.into(), 4.into());
    let zero = BigRational::from_integer(0.into());
    let one = BigRational::from_integer(1.into());
    let (mut diagrams, mut total) = (0, 0);
    let mut cases: Vec<(String, Diagram)> = corpus_diagrams().into_iter().filter(|(_, d)| d.is_triple()).collect();
    // Finger moves on the triples give less regular diagrams to compare on.
    let mut extra = Vec::new();
    for (name, d) in &cases {
        for e in 0..d.edges().len() {
            for r2 in 0..d.regions().len() {
                if let Ok(f) = finger_move(d, e, &[d.edges()[e].left, r2]) {
                    if f.vertices().len() > d.vertices().len() && extra.len() < 40 {
                        extra.push((format!("{name} finger({e}, [{}, {r2}])", d.edges()[e].left), f));
                    }
                }
            }
        }
    }
    cases.extend(extra);
    for (name, d) in cases {
        if d.regions().len() > 16 {
            continue;
        }
        let fast = enumerate_triangles(&d).map_err(|e| format!("{name}: {e}"))?;
        let a: BTreeSet<Vec<i64>> = fast.iter().map(|t| t.domain.coeffs.clone()).collect();
        let b: BTreeSet<Vec<i64>> = brute_force_triangles(&d).into_iter().map(|t| t.domain.coeffs).collect();
        ensure(a == b && a.len() == fast.len(), format!("{name}: enumeration differs from exhaustive search"))?;
        for t in &fast {
            let e = t.euler_measure(&d);
            ensure(e == quarter, format!("{name}: triangle with e = {e}"))?;
            ensure(triangle_index(&e, 1, 1) == zero, format!("{name}: index via 2e - chi + m/2 is nonzero"))?;
            ensure(triangle_index_branch(&e, &zero, 1) == zero, format!("{name}: index via e + br - m/4 is nonzero"))?;
            ensure(source_euler_from_branch(&e, &zero, 1) == one, format!("{name}: branch formula gives chi != 1"))?;
        }
        diagrams += 1;
        total += fast.len();
    }
    ensure(diagrams > 0, "no triple diagram checked")?;
    let t = start.elapsed().as_secs_f64();
    ensure(t < 10.0, format!("took {t:.2} s"))?;
    Ok(format!("{diagrams} triple diagrams, {total} triangles, all e = 1/4 and index 0 ({t:.3} s)"))
}

fn toy() -> Check {
    let d = toy_triple().unwrap();
    let tris = enumerate_triangles(&d).map_err(|e| e.to_string())?;
    let unpunctured = tris.iter().filter(|t| t.domain.avoids_basepoints(&d)).count();
    ensure(tris.len() == 2 && unpunctured == 2, format!("{} triangles, {unpunctured} unpunctured", tris.len()))?;
    let map = TriangleMap::new(&d).map_err(|e| e.to_string())?;
    let per: Vec<usize> = (0..map.labels.len()).map(|c| map.rank(c)).collect();
    ensure(per == vec![1, 1], format!("ranks per class {per:?}"))?;
    map.check_chain_map().map_err(|e| e.to_string())?;
    Ok("2 triangles, 2 classes of rank 1, chain map".into())
}

fn move_invariance() -> Check {
    let m = manifest();
    let base = |file: &std::path::Path| -> Result<Diagram, String> {
        let text = std::fs::read_to_string(corpus_dir().join(file)).map_err(|e| e.to_string())?;
        hfcalc::surface::parse_diagram(&text).map_err(|e| e.to_string())
    };
    let mut covered = BTreeSet::new();
    for e in m.entry.iter().filter(|e| e.script.is_some()) {
        let script = MoveScript::parse(e.script.as_deref().unwrap()).map_err(|err| err.to_string())?;
        let text = script.to_string();
        ensure(text.starts_with("stabilize("), format!("{}: script does not start with a stabilization", e.name))?;
        ensure(text.matches("finger(").count() >= 3, format!("{}: fewer than 3 finger moves", e.name))?;
        let d = base(&e.file)?;
        let moved = script.apply(&d).map_err(|err| format!("{}: {err}", e.name))?;
        let (before, after) = (ranks(&d)?, ranks(&moved)?);
        ensure(before == after, format!("{}: ranks {before:?} became {after:?}", e.name))?;
        covered.insert(e.file.clone());
    }
    let plain: BTreeSet<_> =
        m.entry.iter().filter(|e| e.script.is_none() && e.error.is_none() && !e.file.to_string_lossy().contains('-')).map(|e| e.file.clone()).collect();
    let missing: Vec<_> = plain.difference(&covered).collect();
    ensure(missing.is_empty(), format!("no move script for {missing:?}"))?;
    let toy = toy_triple().unwrap();
    let stab = MoveScript::parse("stabilize(0, 0)").unwrap().apply(&toy).map_err(|e| e.to_string())?;
    ensure(ranks(&stab)? == ranks(&toy)?, "stabilized toy changed its map ranks")?;
    Ok(format!("{} base diagrams moved; stabilized toy map ranks {:?}", covered.len(), ranks(&stab)?))
}

fn divisibility() -> Check {
    let toy = toy_triple().unwrap();
    let two = MoveScript::parse("add_point(0)").unwrap().apply(&toy).map_err(|e| e.to_string())?;
    let l = two.k() + 1;
    ensure(l == 2, format!("built diagram has l = {l}"))?;
    let map = TriangleMap::new(&two).map_err(|e| e.to_string())?;
    let raw: Vec<usize> = (0..map.labels.len()).map(|c| map.rank(c)).collect();
    ensure(raw.iter().all(|r| r % 2 == 0), format!("raw ranks {raw:?} not all even"))?;
    let mut corrected: Vec<usize> = raw.iter().map(|&r| two_handle_rank(r, l)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    corrected.sort_unstable();
    corrected.retain(|&r| r > 0);
    let single = ranks(&toy)?;
    ensure(corrected == single, format!("corrected {corrected:?} vs l = 1 {single:?}"))?;
    Ok(format!("raw {raw:?}, corrected {corrected:?} = l = 1 ranks"))
}

fn determinism() -> Check {
    let m = manifest();
    let a = run_corpus(&m, &corpus_dir()).render();
    let b = run_corpus(&m, &corpus_dir()).render();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let c = pool.install(|| run_corpus(&m, &corpus_dir()).render());
    ensure(a == b && b == c, "corpus reports differ between runs")?;
    ensure(a.contains(&format!("{} entries, {0} passed", m.entry.len())), "corpus does not pass")?;
    Ok(format!("3 runs, {} bytes each", a.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("rank table", rank_table),
        ("differential squares to zero, block diagonal, drops grading by 1", differential),
        ("nice implies weakly admissible", admissibility),
        ("punctured region beside every curve", left_adjacency),
        ("triangle enumeration", triangle_enumeration),
        ("toy triple", toy),
        ("move invariance", move_invariance),
        ("2^(l-1) divisibility", divisibility),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
