//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num::{BigRational, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{bell, chain, fixture, fixture_path, random_acyclic, FIXTURES};
use gbpkit::gbp::gbp_equivalent;
use gbpkit::io::dot::{gbp_dot, quiver_dot};
use gbpkit::io::report::{expand_json, search_json};
use gbpkit::partition::SetPartitions;
use gbpkit::simplify::{
    build_simplification, canonical_labelling, classify_relation, enumerate_labellings, is_coherent, is_compatible,
    partition_from_gbp, round_trip_holds, search_simplifications, ClosureMode, RelationClass, SearchOptions,
};
use gbpkit::{Admissibility, BoundPathAlgebra, GbpAlgebra, Limits, LinComb, Path, Quiver, VertexPartition};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(format!("{took:.2?} < {limit:?}"))
}

fn lib<T>(r: gbpkit::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn mono(ids: &[&str]) -> LinComb {
    LinComb::path(Path::Arrows(ids.iter().map(|s| s.to_string()).collect()))
}

fn labels(g: &GbpAlgebra) -> Vec<String> {
    g.family().values().map(|a| a.label.clone()).collect()
}

fn gbp_fixtures() -> Vec<(String, GbpAlgebra)> {
    FIXTURES
        .iter()
        .flat_map(|f| {
            let doc = fixture(f);
            doc.gbps().map(|(n, g)| (n.to_string(), g.algebra.clone())).collect::<Vec<_>>()
        })
        .collect()
}

fn algebra_fixtures() -> Vec<(String, BoundPathAlgebra)> {
    FIXTURES
        .iter()
        .flat_map(|f| {
            let doc = fixture(f);
            doc.algebras().map(|(n, a)| (n.to_string(), a.clone())).collect::<Vec<_>>()
        })
        .collect()
}

fn expansion() -> Outcome {
    let start = Instant::now();
    let l = Limits::default();
    let doc = fixture("chain_expansion.gbp");
    let g = &doc.gbp("Lambda").ok_or("missing Lambda")?.algebra;
    let ex = lib(g.expand(&l))?;
    let q = ex.algebra.quiver();
    ensure(q.vertex_count() == 5 && q.arrow_count() == 11, || {
        format!("{} vertices, {} arrows", q.vertex_count(), q.arrow_count())
    })?;
    ensure(ex.internal_relations == vec![mono(&["2.delta", "2.epsilon"])], || {
        format!("internal {:?}", ex.internal_relations)
    })?;
    let want: BTreeSet<LinComb> = [
        &["alpha__1__2.1", "beta__2.1__3"][..],
        &["alpha__1__2.1", "2.delta", "beta__2.2__3"],
        &["alpha__1__2.1", "2.delta", "2.epsilon", "beta__2.3__3"],
        &["alpha__1__2.2", "beta__2.2__3"],
        &["alpha__1__2.2", "2.epsilon", "beta__2.3__3"],
        &["alpha__1__2.3", "beta__2.3__3"],
    ]
    .into_iter()
    .map(mono)
    .collect();
    let got: BTreeSet<LinComb> = ex.induced_relations.iter().cloned().collect();
    ensure(got == want && ex.induced_relations.len() == 6, || format!("induced {got:?}"))?;
    Ok(format!("5 vertices, 11 arrows, 1 internal, 6 induced; {}", within(start, Duration::from_secs(1))?))
}

fn square_compatibility() -> Outcome {
    let start = Instant::now();
    let l = Limits::default();
    let doc = fixture("square.gbp");
    let p = VertexPartition::parse("1|2,3|4").unwrap();
    let comm = doc.algebra("Commutative").ok_or("missing Commutative")?;
    let z = lib(canonical_labelling(comm.quiver(), &p))?;
    match lib(is_compatible(comm, &p, &z, ClosureMode::Ideal, &l))? {
        Err(v) if v.clause == 1 && v.detail.contains("alpha*beta - gamma*delta") => {}
        other => return Err(format!("commutative square: {other:?}")),
    }
    let zero = doc.algebra("Zero").ok_or("missing Zero")?;
    let z = lib(canonical_labelling(zero.quiver(), &p))?;
    lib(is_compatible(zero, &p, &z, ClosureMode::Ideal, &l))?.map_err(|v| format!("zero square: {v}"))?;
    let g = lib(build_simplification(zero, &p, &z, &l))?;
    let gamma = g.gamma();
    ensure(labels(&g) == ["k", "k^2", "k"], || format!("labels {:?}", labels(&g)))?;
    ensure(
        gamma.count_between("4", "2+3") == 1 && gamma.count_between("2+3", "1") == 1 && gamma.arrow_count() == 2,
        || format!("gamma {gamma:?}"),
    )?;
    ensure(g.relations().len() == 1, || format!("I = {:?}", g.relations()))?;
    let reference = &doc.gbp("ZeroSimplified").ok_or("missing ZeroSimplified")?.algebra;
    ensure(lib(gbp_equivalent(&g, reference, &l))?, || "differs from the reference gbp".into())?;
    Ok(format!(
        "clause (1) names alpha*beta - gamma*delta; k <- k^2 <- k with 1 relation; {}",
        within(start, Duration::from_secs(1))?
    ))
}

/// Injective arrow choices: for each pair x, y in different blocks, the
/// `[x, y]` arrows go to distinct arrows among the `m` parallel ones of
/// the quotient.
fn labelling_count(q: &Quiver, p: &VertexPartition) -> usize {
    let mut m: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut pairs: BTreeMap<(String, String), usize> = BTreeMap::new();
    for a in q.arrows() {
        let (bi, bj) = (p.block_index(&a.source).unwrap(), p.block_index(&a.target).unwrap());
        if bi != bj {
            *pairs.entry((a.source.clone(), a.target.clone())).or_default() += 1;
        }
    }
    for ((x, y), c) in &pairs {
        let key = (p.block_index(x).unwrap(), p.block_index(y).unwrap());
        let e = m.entry(key).or_default();
        *e = (*e).max(*c);
    }
    pairs
        .iter()
        .map(|((x, y), c)| {
            let total = m[&(p.block_index(x).unwrap(), p.block_index(y).unwrap())];
            (total - c + 1..=total).product::<usize>()
        })
        .product()
}

fn fan_example() -> Outcome {
    let start = Instant::now();
    let l = Limits::default();
    let doc = fixture("fan.gbp");
    let a = doc.algebra("Fan").ok_or("missing Fan")?;
    let p = VertexPartition::parse("1,2|3|4,5,6").unwrap();
    lib(is_coherent(a.quiver(), &p))?.map_err(|v| format!("incoherent: {v}"))?;
    let (zs, truncated) = lib(enumerate_labellings(a.quiver(), &p, 1024))?;
    let expected = labelling_count(a.quiver(), &p);
    ensure(!truncated && zs.len() == expected && expected == 4, || {
        format!("{} labellings, independent count {expected}", zs.len())
    })?;
    let z = &zs[0];
    ensure(a.relations().len() == 7, || format!("{} relations", a.relations().len()))?;
    let mut internal = 0;
    for r in a.relations() {
        match lib(classify_relation(a.quiver(), r, &p, z))? {
            RelationClass::Internal => internal += 1,
            RelationClass::External => {}
            RelationClass::Neither => return Err(format!("{r} is neither internal nor external")),
        }
    }
    ensure(internal == 1, || format!("{internal} internal relations"))?;
    lib(is_compatible(a, &p, z, ClosureMode::Ideal, &l))?.map_err(|v| format!("incompatible: {v}"))?;
    let g = lib(build_simplification(a, &p, z, &l))?;
    ensure(labels(&g) == ["k^2", "k", "A[4+5+6]"], || format!("labels {:?}", labels(&g)))?;
    let gamma = g.gamma();
    ensure(
        gamma.count_between("1+2", "3") == 2 && gamma.count_between("3", "4+5+6") == 1 && gamma.arrow_count() == 3,
        || format!("gamma {gamma:?}"),
    )?;
    let block = &g.vertex_algebra("4+5+6").unwrap().algebra;
    ensure(block.relations() == [mono(&["delta", "epsilon"])], || format!("A = {:?}", block.relations()))?;
    let alpha = z.arrow("alpha1").unwrap();
    let gamma1 = z.arrow("gamma1").unwrap();
    ensure(g.relations() == [mono(&[alpha, gamma1])], || format!("I = {:?}", g.relations()))?;
    let reference = &doc.gbp("FanSimplified").ok_or("missing FanSimplified")?.algebra;
    ensure(lib(gbp_equivalent(&g, reference, &l))?, || "differs from the reference gbp".into())?;
    Ok(format!(
        "4 labellings (independent count), 7 relations classified, k^2 => k -> A with alpha*gamma = 0; {}",
        within(start, Duration::from_secs(5))?
    ))
}

fn build_round_trip() -> Outcome {
    let start = Instant::now();
    let l = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut inputs = algebra_fixtures();
    for i in 0..200 {
        inputs.push((format!("random #{i}"), random_acyclic(&mut rng, 6, 8, 2)));
    }
    // one labelling per orbit of parallel-arrow permutations; the round trip
    // is invariant under renaming the arrows of the quotient
    let opts = SearchOptions { limits: l.clone(), labelling_orbits: true, ..SearchOptions::default() };
    let (mut checked, mut failures) = (0usize, Vec::new());
    for (name, a) in &inputs {
        let report = lib(search_simplifications(a, &opts))?;
        ensure(report.complete, || format!("{name}: search incomplete {:?}", report.diagnostics))?;
        for r in &report.results {
            let g = lib(build_simplification(a, &r.partition, &r.labelling, &l))?;
            checked += 1;
            if !lib(round_trip_holds(a, &r.labelling, &g, &l))? {
                failures.push(format!("{name} over {}", r.partition));
            }
        }
    }
    ensure(failures.is_empty(), || format!("{} failures, first {}", failures.len(), failures[0]))?;
    Ok(format!(
        "{} algebras, {checked} simplifications, 0 failures; {}",
        inputs.len(),
        within(start, Duration::from_secs(60))?
    ))
}

fn reverse_round_trip() -> Outcome {
    let l = Limits::default();
    let gbps = gbp_fixtures();
    for (name, g) in &gbps {
        let rec = lib(partition_from_gbp(g, &l))?;
        let a = &rec.presentation;
        lib(is_coherent(a.quiver(), &rec.partition))?.map_err(|v| format!("{name}: incoherent: {v}"))?;
        lib(is_compatible(a, &rec.partition, &rec.labelling, ClosureMode::Ideal, &l))?
            .map_err(|v| format!("{name}: incompatible: {v}"))?;
        let rebuilt = lib(build_simplification(a, &rec.partition, &rec.labelling, &l))?;
        ensure(lib(gbp_equivalent(&rebuilt, g, &l))?, || format!("{name}: rebuilt gbp is not equivalent"))?;
    }
    Ok(format!("{} gbp fixtures recovered and rebuilt", gbps.len()))
}

/// Paths of a DAG minus the rank of the span of the relations.
fn dag_dimension(a: &BoundPathAlgebra) -> usize {
    let q = a.quiver();
    let mut ending: BTreeMap<&str, usize> = q.vertices().map(|v| (v, 1)).collect();
    let mut paths = ending.len();
    for _ in 0..q.arrow_count() {
        let mut next: BTreeMap<&str, usize> = q.vertices().map(|v| (v, 0)).collect();
        for ar in q.arrows() {
            *next.get_mut(ar.target.as_str()).unwrap() += ending[ar.source.as_str()];
        }
        paths += next.values().sum::<usize>();
        ending = next;
    }
    let support: Vec<&Path> =
        a.relations().iter().flat_map(|r| r.paths()).collect::<BTreeSet<_>>().into_iter().collect();
    let mut rows: Vec<Vec<BigRational>> =
        a.relations().iter().map(|r| support.iter().map(|p| r.coefficient(p)).collect()).collect();
    let mut rank = 0;
    for col in 0..support.len() {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, pivot);
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = &rows[i][col] / &rows[rank][col];
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    paths - rank
}

fn dimensions() -> Outcome {
    let l = Limits::default();
    for n in 1..=8 {
        let d = lib(chain(n).dimension(&l))?;
        ensure(d == n * (n + 1) / 2, || format!("A_{n}: {d}"))?;
    }
    let small = fixture("small.gbp");
    let dual = lib(small.algebra("DualNumbers").unwrap().dimension(&l))?;
    ensure(dual == 2, || format!("x^2 = 0: {dual}"))?;
    let square = fixture("square.gbp");
    let zero = square.algebra("Zero").unwrap();
    let (d, oracle) = (lib(zero.dimension(&l))?, dag_dimension(zero));
    ensure(d == 8 && oracle == 8, || format!("square: {d}, oracle {oracle}"))?;
    Ok("A_1..A_8 = n(n+1)/2, x^2 = 0 gives 2, zero square gives 8 (path count minus rank)".into())
}

fn search() -> Outcome {
    let start = Instant::now();
    let opts = SearchOptions::default();
    let fan = fixture("fan.gbp");
    let r = lib(search_simplifications(fan.algebra("Fan").unwrap(), &opts))?;
    ensure(r.simplifiable, || "fan not simplifiable".into())?;
    ensure(r.results.iter().any(|x| !x.trivial && x.partition.to_string() == "1,2|3|4,5,6"), || {
        "partition 1,2|3|4,5,6 missing".into()
    })?;
    let small = fixture("small.gbp");
    let r = lib(search_simplifications(small.algebra("A2").unwrap(), &opts))?;
    ensure(!r.simplifiable && r.partitions_examined == 2, || {
        format!("A2: simplifiable {}, {} partitions", r.simplifiable, r.partitions_examined)
    })?;
    for n in 0..=6 {
        let items: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let count = SetPartitions::new(items).count();
        ensure(count == bell(n), || format!("{count} partitions of {n}, Bell {}", bell(n)))?;
    }
    Ok(format!(
        "fan simplifiable over 1,2|3|4,5,6; A2 not, 2 partitions; Bell(0..6); {}",
        within(start, Duration::from_secs(10))?
    ))
}

fn admissible_expansions() -> Outcome {
    let l = Limits::default();
    let gbps = gbp_fixtures();
    for (name, g) in &gbps {
        ensure(g.validate(&l).is_empty(), || format!("{name} invalid"))?;
        let ex = lib(g.expand(&l))?;
        match lib(ex.algebra.check_admissible(&l))? {
            Admissibility::Admissible(_) => {}
            other => return Err(format!("{name}: {other:?}")),
        }
    }
    Ok(format!("{} expansions admissible", gbps.len()))
}

fn run_bin(args: &[&str]) -> Result<Vec<u8>, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_gbpkit")).args(args).output().map_err(|e| e.to_string())?;
    ensure(o.status.success(), || format!("{args:?} exited with {:?}", o.status.code()))?;
    Ok(o.stdout)
}

fn determinism() -> Outcome {
    let l = Limits::default();
    let mut runs = 0;
    for f in FIXTURES {
        let doc = fixture(f);
        let file = fixture_path(f).to_string_lossy().into_owned();
        for (name, a) in doc.algebras() {
            let seq = SearchOptions { parallel: false, ..SearchOptions::default() };
            let par = lib(search_simplifications(a, &SearchOptions::default()))?;
            let par = search_json(name, &par);
            let seq = search_json(name, &lib(search_simplifications(a, &seq))?);
            ensure(par == seq, || format!("{name}: parallel and sequential JSON differ"))?;
            let first = run_bin(&["search", &file, "--algebra", name, "--json"])?;
            ensure(first == par.as_bytes(), || format!("{name}: binary JSON differs from library JSON"))?;
            ensure(first == run_bin(&["search", &file, "--algebra", name, "--json"])?, || format!("{name}: search"))?;
            ensure(run_bin(&["dot", &file, "--target", name])? == quiver_dot(name, a.quiver()).as_bytes(), || {
                format!("{name}: dot")
            })?;
            runs += 2;
        }
        for (name, g) in doc.gbps() {
            let ex = lib(g.algebra.expand(&l))?;
            let json = expand_json(name, &ex);
            for _ in 0..2 {
                ensure(run_bin(&["expand", &file, "--gbp", name, "--json"])? == json.as_bytes(), || {
                    format!("{name}: expand")
                })?;
                ensure(run_bin(&["dot", &file, "--target", name])? == gbp_dot(name, &g.algebra).as_bytes(), || {
                    format!("{name}: dot")
                })?;
                runs += 2;
            }
        }
    }
    Ok(format!("{runs} repeated binary runs byte-identical, parallel = sequential"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("expansion of the chain gbp", expansion),
        ("square compatibility and simplification", square_compatibility),
        ("fan coherence, labellings, compatibility, simplification", fan_example),
        ("build then expand recovers the ideal", build_round_trip),
        ("partition recovered from a gbp rebuilds it", reverse_round_trip),
        ("dimensions against independent counts", dimensions),
        ("search at desk scale", search),
        ("expansions are admissible", admissible_expansions),
        ("byte-stable output", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
