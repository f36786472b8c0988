//! Acceptance suite: each criterion prints one `PASS`/`FAIL` line, and the
//! process exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use raagkit::bb::{closed_walks, cn_relator, xi, BbContext, HomotopyMove};
use raagkit::complex::{ComplexError, DEFAULT_TIETZE_BUDGET};
use raagkit::corpus;
use raagkit::facering::{group_euler_characteristic, hilbert_series, FinitenessReport, FpLevel, TriState};
use raagkit::snf::{smith_normal_form, IntMatrix};
use raagkit::{Alphabet, DirectedCycle, FlagComplex, RaagContext, Word};
use rand::Rng;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn named_corpus() -> Vec<(String, FlagComplex)> {
    let mut out = vec![
        ("point".to_string(), corpus::point()),
        ("2 points".to_string(), corpus::points(2)),
        ("3 points".to_string(), corpus::points(3)),
        ("edge".to_string(), corpus::edge()),
        ("path a-b-c".to_string(), corpus::path3()),
        ("K3".to_string(), corpus::k3()),
        ("C4".to_string(), corpus::square()),
        ("octahedron".to_string(), corpus::octahedron()),
        ("join of 3 pairs".to_string(), corpus::join_of_pairs(3)),
    ];
    let mut rng = common::rng(0xACCE);
    for i in 0..3 {
        let n = rng.random_range(4..=8);
        out.push((format!("random {i} (|V|={n})"), common::random_connected_complex(&mut rng, n, 0.45)));
    }
    out
}

fn criterion_1(corpus: &[(String, FlagComplex)]) -> Check {
    let mut checked = 0usize;
    let mut rejected = 0usize;
    for (name, c) in corpus {
        let ctx = match BbContext::new(c, 0) {
            Ok(ctx) => ctx,
            Err(raagkit::bb::BbError::Complex(ComplexError::Disconnected)) => {
                // no presentation is emitted for a disconnected complex
                rejected += 1;
                continue;
            }
            Err(e) => return Err(format!("{name}: {e}")),
        };
        let truncated = ctx.relators_theorem1(6, 3).map_err(err)?;
        let finite = ctx.finite_presentation(&[], 3).map_err(err)?;
        for p in [&truncated.presentation, &finite.presentation] {
            let results = ctx.verify_presentation(p).map_err(err)?;
            if let Some(i) = results.iter().position(|ok| !ok) {
                return Err(format!("{name}: relator {} fails: {}", i, p.render_relator(&p.relators()[i])));
            }
            checked += results.len();
        }
    }
    Ok(format!("{checked} relators verified; {rejected} disconnected complexes rejected before emission"))
}

fn connected(corpus: &[(String, FlagComplex)]) -> impl Iterator<Item = &(String, FlagComplex)> {
    corpus.iter().filter(|(_, c)| c.is_connected())
}

fn criterion_2(corpus: &[(String, FlagComplex)]) -> Check {
    let mut rng = common::rng(2);
    let mut total = 0;
    for (name, c) in connected(corpus) {
        let raag = RaagContext::new(c);
        for _ in 0..1000 {
            let a = rng.random_range(0..c.num_vertices());
            let ctx = BbContext::new(c, a).map_err(err)?;
            let w = common::random_zero_sum_word(&mut rng, c.num_vertices(), 16);
            let e = ctx.express_in_kernel(&w).map_err(err)?;
            let image = ctx.phi(&e).map_err(err)?;
            ensure(raag.equal(&image, &w).map_err(err)?, || format!("{name}: {} not recovered", w.display(c)))?;
            total += 1;
        }
    }
    Ok(format!("{total} words round-tripped"))
}

fn criterion_3() -> Check {
    let mut total = 0;
    for (name, c) in [("C4", corpus::square()), ("K3", corpus::k3())] {
        let raag = RaagContext::new(&c);
        for len in 0..=6 {
            for w in common::all_words(c.num_vertices(), len) {
                let ours = raag.is_identity(&common::vertex_word(&w)).map_err(err)?;
                let oracle = common::shuffle_closure_is_identity(&c, &w);
                ensure(ours == oracle, || format!("{name}: disagreement on {w:?}"))?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} words agree with the shuffle-closure oracle"))
}

fn criterion_4() -> Check {
    let oct = corpus::octahedron();
    let r = FinitenessReport::new(&oct, DEFAULT_TIETZE_BUDGET).map_err(err)?;
    ensure(r.finitely_generated && r.finitely_presented == TriState::Yes, || "octahedron: not f.p.".into())?;
    ensure(r.corollary7_applies && !r.fp_level.has_fp(3), || "octahedron: FP not refuted".into())?;
    ensure((r.chi_delta, r.chi_group) == (2, -1), || format!("octahedron: chi {} {}", r.chi_delta, r.chi_group))?;
    ensure(group_euler_characteristic(&oct) == Ok(-1), || "octahedron: chi_G".into())?;
    ensure(hilbert_series(&oct) == Ok(vec![1, 6, 12, 8]), || "octahedron: hilbert".into())?;
    let betti = oct.homology(false).map_err(err)?.betti_numbers();
    ensure(betti == vec![1, 0, 1], || format!("octahedron: betti {betti:?}"))?;

    let c4 = FinitenessReport::new(&corpus::square(), DEFAULT_TIETZE_BUDGET).map_err(err)?;
    ensure(c4.finitely_generated, || "C4: not f.g.".into())?;
    ensure(c4.fp_level == FpLevel::Finite(1), || format!("C4: {:?}", c4.fp_level))?;
    ensure(c4.finitely_presented == TriState::No, || "C4: f.p. not refuted".into())?;

    let two = FinitenessReport::new(&corpus::points(2), DEFAULT_TIETZE_BUDGET).map_err(err)?;
    ensure(!two.finitely_generated, || "2 points: f.g.".into())?;
    Ok("octahedron, C4 and 2-point reports match".to_string())
}

fn criterion_5() -> Check {
    let c = corpus::k3();
    let ctx = BbContext::new(&c, 0).map_err(err)?;
    let p = ctx.finite_presentation(&[], 1).map_err(err)?.presentation;
    let ab = p.abelianization();
    ensure(ab.rank == 2 && ab.torsion.is_empty(), || format!("abelianization {ab:?}"))?;
    let mut checked = 0;
    for cyc in closed_walks(&c, 3).into_iter().filter(|cy| cy.len() == 3) {
        for n in (-4..=4).filter(|&n| n != 0) {
            let folded = ctx.fold(&cn_relator(&cyc, n).map_err(err)?);
            let v = folded.exponent_vector(p.generators().len());
            ensure(p.relator_lattice_contains(&v), || format!("c^[{n}] of {} outside lattice", cyc.display(&c)))?;
            checked += 1;
        }
    }
    Ok(format!("rank 2, {checked} triangle relators in the lattice"))
}

fn random_move(rng: &mut rand::rngs::StdRng, c: &FlagComplex, cycle: &DirectedCycle) -> HomotopyMove {
    let len = cycle.len();
    let ne = c.num_directed_edges();
    match rng.random_range(0..4) {
        0 => HomotopyMove::Rotate { k: rng.random_range(0..len) },
        1 => HomotopyMove::Delete { pos: rng.random_range(0..len) },
        2 => HomotopyMove::Insert { pos: rng.random_range(0..=len), edge: rng.random_range(0..ne) },
        _ => {
            let pos = rng.random_range(0..len);
            let e = cycle.edges()[pos];
            let de = c.directed_edge(e);
            let w = rng.random_range(0..c.num_vertices());
            let f = c.directed_edge_id(raagkit::DirectedEdge { initial: de.terminal, terminal: w });
            let g = c.directed_edge_id(raagkit::DirectedEdge { initial: w, terminal: de.initial });
            match (f, g) {
                (Some(f), Some(g)) => HomotopyMove::Triangle { pos, e, f, g },
                _ => HomotopyMove::Rotate { k: 0 },
            }
        }
    }
}

fn criterion_6(corpus: &[(String, FlagComplex)]) -> Check {
    let mut rng = common::rng(6);
    let pool: Vec<&(String, FlagComplex)> = connected(corpus).filter(|(_, c)| !c.edges().is_empty()).collect();
    let mut steps = 0;
    for _ in 0..500 {
        let (name, c) = pool[rng.random_range(0..pool.len())];
        let ctx = BbContext::new(c, 0).map_err(err)?;
        let walks = closed_walks(c, 4);
        let mut cycle = walks[rng.random_range(0..walks.len())].clone();
        let mut n = rng.random_range(1..=3);
        if rng.random_bool(0.5) {
            n = -n;
        }
        let mut relator = cn_relator(&cycle, n).map_err(err)?;
        ensure(ctx.verify_relator(&relator).map_err(err)?, || format!("{name}: start relator fails"))?;
        let target = rng.random_range(1..=10);
        let mut applied = 0;
        let mut attempts = 0;
        while applied < target && attempts < 1000 {
            attempts += 1;
            let mv = random_move(&mut rng, c, &cycle);
            let Ok(next) = mv.apply(c, &cycle) else { continue };
            let moved = ctx.apply_homotopy_move(&relator, &mv, n).map_err(err)?;
            ensure(moved == cn_relator(&next, n).map_err(err)?, || format!("{name}: relator and walk disagree"))?;
            ensure(ctx.verify_relator(&moved).map_err(err)?, || {
                format!("{name}: {} fails after {}", moved.display(c), mv.render(c))
            })?;
            cycle = next;
            relator = moved;
            applied += 1;
            steps += 1;
        }
    }
    Ok(format!("500 sequences, {steps} moves, every intermediate relator verified"))
}

fn criterion_7(corpus: &[(String, FlagComplex)]) -> Check {
    let mut rng = common::rng(7);
    let mut checks = 0;
    for (name, c) in connected(corpus) {
        let raag = RaagContext::new(c);
        for a in 0..c.num_vertices() {
            let ctx = BbContext::new(c, a).map_err(err)?;
            let av = Word::generator(Alphabet::Vertices, a);
            for e in 0..c.num_directed_edges() {
                let ew = Word::generator(Alphabet::DirectedEdges, e);
                let lhs = ctx.phi(&ctx.psi(&ew).map_err(err)?).map_err(err)?;
                let rhs = Word::product(Alphabet::Vertices, [&av, &ctx.phi(&ew).map_err(err)?, &av.inverse()])
                    .map_err(err)?;
                ensure(raag.equal(&lhs, &rhs).map_err(err)?, || format!("{name}: phi psi_{a} on edge {e}"))?;
                let round = ctx.psi(&xi(&ctx.psi(&xi(&ew)).map_err(err)?)).map_err(err)?;
                ensure(raag.equal(&ctx.phi(&round).map_err(err)?, &ctx.phi(&ew).map_err(err)?).map_err(err)?, || {
                    format!("{name}: psi xi psi xi on edge {e}")
                })?;
                checks += 2;
            }
            for b in 0..c.num_vertices() {
                let t = ctx.phi_tilde(&ctx.theta(b).map_err(err)?).map_err(err)?;
                ensure(raag.equal(&t, &Word::generator(Alphabet::Vertices, b)).map_err(err)?, || {
                    format!("{name}: phi~ theta({b}) at basepoint {a}")
                })?;
                checks += 1;
            }
        }
        if c.num_directed_edges() > 0 {
            for _ in 0..100 {
                let len = rng.random_range(0..12);
                let w = Word::new(
                    Alphabet::DirectedEdges,
                    (0..len).map(|_| raagkit::Letter {
                        gen: rng.random_range(0..c.num_directed_edges()),
                        inverse: rng.random_bool(0.5),
                    }),
                );
                ensure(xi(&xi(&w)) == w, || format!("{name}: xi xi"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} identities hold"))
}

fn criterion_8() -> Check {
    let mut rng = common::rng(8);
    for i in 0..200 {
        let (r, c) = (rng.random_range(1..=8), rng.random_range(1..=8));
        let m = common::random_matrix(&mut rng, r, c, 9);
        let ours: Vec<String> =
            smith_normal_form(&IntMatrix::from_rows(&m)).invariant_factors.iter().map(|x| x.to_string()).collect();
        let oracle: Vec<String> = common::naive_invariant_factors(&m).iter().map(|x| x.to_string()).collect();
        ensure(ours == oracle, || format!("matrix {i}: {ours:?} vs {oracle:?}"))?;
    }
    Ok("200 matrices, identical invariant factors".to_string())
}

fn main() -> ExitCode {
    let corpus = named_corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 corpus identities", Box::new(|| criterion_1(&corpus))),
        ("2 kernel roundtrip", Box::new(|| criterion_2(&corpus))),
        ("3 normal form vs shuffle oracle", Box::new(criterion_3)),
        ("4 named groups", Box::new(criterion_4)),
        ("5 abelianized triangle relators", Box::new(criterion_5)),
        ("6 homotopy-move soundness", Box::new(|| criterion_6(&corpus))),
        ("7 homomorphism contracts", Box::new(|| criterion_7(&corpus))),
        ("8 Smith normal form vs oracle", Box::new(criterion_8)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} ({secs:.2}s)");
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
