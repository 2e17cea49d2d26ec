//! Acceptance criteria 1-12. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::process::Command;
use std::time::Instant;

use num_rational::Ratio;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use snake_cli::{parse_kv, Document, Kind};
use snake_core::certify::{
    block_weight, brute_force_max_weight, build_odd_blocks, density_cnf, dpll,
    max_weight_pseudosnake, max_weight_pseudosnake_with, odd_upper_bound_certificate,
    path_weight_bound, SolverOptions,
};
use snake_core::graph::{set_degree, trace_cycle};
use snake_core::king::{
    all_lifts, build_king_0mod4_cycle, enumerate_stamp_foldings, find_free_cycles,
    stamp_to_ham_path, StampFolding,
};
use snake_core::knight::{
    build_knight_cycle, build_knight_u, build_pancake, build_tesseract_set, pancake_cover,
    WeightedCellSet, KNIGHT_CYCLE_SLACK,
};
use snake_core::leaper::{
    build_fers_snake, build_leaper_pseudosnake, build_wazir_pseudosnake, halffree_fold,
    stitch_wazir_snake, SnakeMode, FERS_SLACK, WAZIR_SLACK,
};
use snake_core::search::{
    enumerate_grid_ham_paths, enumerate_maxima, enumerate_near_ham_cycles,
    longest_snake_checkpointed, max_free_cycles, verify_cycle_lift_bijection,
    verify_lift_bijection, Mode, Objective, SearchOptions,
};
use snake_core::{Board, Cell, CellSet, MoveRule, PieceGraph};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn king(n: u32) -> PieceGraph {
    PieceGraph::square(MoveRule::King, n).unwrap()
}

fn c1_even_king() -> Outcome {
    let mut classes = Vec::new();
    for (n, max, total, want) in [(2u32, 1usize, 6u64, 2usize), (4, 7, 28, 4), (6, 17, 96, 13)] {
        let r = enumerate_maxima(&king(n), Mode::Path).map_err(|e| e.to_string())?;
        ensure!(r.max_length == Some(max), "n={n}: max {:?}", r.max_length);
        ensure!(r.total_count == total, "n={n}: total {}", r.total_count);
        ensure!(
            r.distinct_count == want,
            "n={n}: classes {}",
            r.distinct_count
        );
        classes.push(r.distinct_count);
    }
    Ok(format!(
        "max/total exact; classes {classes:?} (n=6 gives 2n+1 = 13)"
    ))
}

fn c2_odd_king() -> Outcome {
    let stamps: Vec<usize> = (2..=5)
        .map(|s| enumerate_stamp_foldings(s).unwrap().len())
        .collect();
    ensure!(stamps[..3] == [2, 6, 16], "stamp counts {stamps:?}");
    for (i, (n, max)) in [(3u32, 4usize), (5, 12), (7, 24), (9, 40)]
        .into_iter()
        .enumerate()
    {
        let r = enumerate_maxima(&king(n), Mode::Path).map_err(|e| e.to_string())?;
        ensure!(r.max_length == Some(max), "n={n}: max {:?}", r.max_length);
        let want = 2 * stamps[i] as u64;
        ensure!(
            r.total_count == want,
            "n={n}: {} maxima, want {want}",
            r.total_count
        );
    }
    Ok("max 4/12/24/40, maxima 4/12/32/100 = 2 N_stamp".into())
}

fn c3_lift_bijection() -> Outcome {
    let mut sizes = Vec::new();
    for n in [3u32, 5, 7] {
        let r = verify_lift_bijection(n).map_err(|e| e.to_string())?;
        ensure!(
            r.lifts == r.maxima,
            "n={n}: {} lifts vs {} maxima",
            r.lifts,
            r.maxima
        );
        sizes.push(r.lifts);
    }
    Ok(format!("lift sets equal the maxima: {sizes:?}"))
}

fn c4_blocks() -> Outcome {
    for n in (5..=41u32).step_by(2) {
        let b = odd_upper_bound_certificate(n).map_err(|e| e.to_string())?;
        ensure!(b == ((n * n - 1) / 2) as usize, "n={n}: {b}");
    }
    let d = build_odd_blocks(5).unwrap();
    let g = king(5);
    let mut paths = 0;
    for len in 0..=12 {
        let opts =
            SearchOptions::new(Mode::Path, Objective::EnumerateLength(len)).with_symmetry(false);
        let r = snake_core::search::longest_snake(&g, &opts).map_err(|e| e.to_string())?;
        for p in &r.solutions {
            ensure!(
                d.blocks
                    .iter()
                    .all(|b| block_weight(b, p).2 <= b.capacity()),
                "block over capacity on {p:?}"
            );
            ensure!(path_weight_bound(5, p).unwrap(), "chain fails on {p:?}");
        }
        paths += r.solutions.len();
    }
    Ok(format!(
        "n = 5..41 certified; {paths} snake paths of the 5x5 board checked"
    ))
}

fn c5_stamps() -> Outcome {
    let sizes: Vec<usize> = (1..=5)
        .map(|s| enumerate_stamp_foldings(s).unwrap().len())
        .collect();
    ensure!(sizes == [1, 2, 6, 16, 50], "stamp sizes {sizes:?}");
    for s in 2..=5u32 {
        let fewest = 2 * s as usize - 2;
        let e = enumerate_grid_ham_paths(s, fewest).map_err(|e| e.to_string())?;
        ensure!(
            e.count == 2 * sizes[s as usize - 1],
            "s={s}: {} paths",
            e.count
        );
        ensure!(
            e.min_turns == Some(fewest),
            "s={s}: min turns {:?}",
            e.min_turns
        );
        let below = enumerate_grid_ham_paths(s, fewest - 1).map_err(|e| e.to_string())?;
        ensure!(below.count == 0, "s={s}: path with {} turns", fewest - 1);
    }
    Ok("sizes 1,2,6,16,50; fewest-turn paths 4,12,32,100 at 2s-2 turns".into())
}

fn c6_free_cycles() -> Outcome {
    for k in 5..=8u32 {
        let (f, gp) = max_free_cycles(k).map_err(|e| e.to_string())?;
        let want = k as usize - 5;
        ensure!(f == want, "k={k}: f={f}");
        ensure!(all_lifts(&gp).len() == 1 << f, "k={k}: lifts");
        let mut sigma = vec![0];
        sigma.extend(2..k as usize);
        sigma.push(1);
        let w = stamp_to_ham_path(&StampFolding::new(sigma).unwrap(), false).unwrap();
        ensure!(find_free_cycles(&w).len() == want, "k={k}: witness");
        ensure!(all_lifts(&w).len() == 1 << want, "k={k}: witness lifts");
    }
    Ok("max f = k-5 for k = 5..8, attained by 0,2,3,...,k-1,1".into())
}

fn c7_knight() -> Outcome {
    for k in 2..=5u32 {
        let min = 8 * k as i32 - 5;
        for len in [min, min + 2, min + 4] {
            let u = build_knight_u(k, 0, len - 1).map_err(|e| e.to_string())?;
            ensure!(
                u.iter().all(|c| set_degree(MoveRule::Knight, &u, c) == 2),
                "k={k} |I|={len}: degree"
            );
            ensure!(
                trace_cycle(MoveRule::Knight, &u).is_some(),
                "k={k} |I|={len}: not one cycle"
            );
        }
    }
    let mut worst: f64 = 0.0;
    for n in [40u32, 44, 48] {
        let w = build_knight_cycle(38, n).map_err(|e| e.to_string())?;
        let path = trace_cycle(MoveRule::Knight, &w).ok_or("not a cycle")?;
        let g = PieceGraph::new(MoveRule::Knight, Board::new(38, n).unwrap());
        ensure!(g.is_snake_cycle(&path), "38x{n}: not a snake cycle");
        let c = ((38 * n) as f64 / 2.0 - w.len() as f64) / (38 + n) as f64;
        ensure!(c <= KNIGHT_CYCLE_SLACK as f64, "38x{n}: C = {c:.2}");
        worst = worst.max(c);
    }
    Ok(format!(
        "skein cycles k=2..5; W on 38x{{40,44,48}} with C = {worst:.2} <= {KNIGHT_CYCLE_SLACK}"
    ))
}

fn c8_density() -> Outcome {
    let tess = WeightedCellSet::uniform(&build_tesseract_set());
    let t = max_weight_pseudosnake(&tess, MoveRule::Knight, u64::MAX).map_err(|e| e.to_string())?;
    ensure!(
        t.optimum == 9 && t.proven_optimal,
        "tesseract {}",
        t.optimum
    );
    ensure!(
        dpll(&density_cnf(&tess, MoveRule::Knight, 9)).is_some(),
        "CNF at 9 unsat"
    );
    ensure!(
        dpll(&density_cnf(&tess, MoveRule::Knight, 10)).is_none(),
        "CNF at 10 sat"
    );
    let start = Instant::now();
    let cover = pancake_cover();
    let p = max_weight_pseudosnake_with(
        &build_pancake(),
        MoveRule::Knight,
        &SolverOptions::default(),
        Some(&cover),
    )
    .map_err(|e| e.to_string())?;
    ensure!(p.optimum == 96 && p.proven_optimal, "pancake {}", p.optimum);
    let pancake_time = start.elapsed();
    let mut runner = TestRunner::new_with_rng(
        Config {
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let strat = (
        proptest::collection::btree_map((0i32..6, 0i32..6), 1u64..6, 1..=20),
        prop_oneof![
            Just(MoveRule::King),
            Just(MoveRule::Knight),
            Just(MoveRule::Wazir)
        ],
    );
    let mut mismatches = 0;
    for _ in 0..100 {
        let (m, rule) = strat.new_tree(&mut runner).unwrap().current();
        let g =
            WeightedCellSet::from_weights(m.into_iter().map(|((x, y), w)| (Cell::new(x, y), w)))
                .unwrap();
        let s = max_weight_pseudosnake(&g, rule, u64::MAX).map_err(|e| e.to_string())?;
        if s.optimum != brute_force_max_weight(&g, rule).unwrap().0 {
            mismatches += 1;
        }
    }
    ensure!(mismatches == 0, "{mismatches} mismatches with brute force");
    Ok(format!(
        "tesseract 9, pancake 96 ({} nodes, {:.1?}), 100 random instances agree",
        p.nodes, pancake_time
    ))
}

fn c9_cycles() -> Outcome {
    let r4 = enumerate_maxima(&king(4), Mode::Cycle).map_err(|e| e.to_string())?;
    ensure!(
        (r4.max_length, r4.total_count) == (Some(8), 1),
        "4x4: {:?}",
        (r4.max_length, r4.total_count)
    );
    let r7 = verify_cycle_lift_bijection(7).map_err(|e| e.to_string())?;
    ensure!(r7.max_length == 24 && r7.lifts == r7.maxima, "7x7 cycles");
    let n3 = enumerate_near_ham_cycles(3, 4).map_err(|e| e.to_string())?;
    ensure!(
        (n3.count, n3.min_turns) == (1, Some(4)),
        "k=3 near-Hamiltonian"
    );
    let n5 = enumerate_near_ham_cycles(5, 10).map_err(|e| e.to_string())?;
    ensure!(
        (n5.count, n5.classes, n5.min_turns) == (16, 2, Some(10)),
        "k=5 near-Hamiltonian"
    );
    ensure!(
        enumerate_near_ham_cycles(5, 9).unwrap().count == 0,
        "k=5 below 10 turns"
    );
    let r8 = enumerate_maxima(&king(8), Mode::Cycle).map_err(|e| e.to_string())?;
    ensure!(
        (r8.max_length, r8.total_count, r8.distinct_count) == (Some(31), 48, 6),
        "8x8: {:?}",
        (r8.max_length, r8.total_count, r8.distinct_count)
    );
    let built = build_king_0mod4_cycle(8).unwrap();
    ensure!(
        r8.solutions.iter().any(|s| s.normalized() == built),
        "construction not among the 8x8 maxima"
    );
    Ok("4x4 unique 8; 7x7 24 with lift bijection; near-Hamiltonian 1 and 16/2; 8x8 31/48/6".into())
}

fn c10_knight_records() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let g = PieceGraph::square(MoveRule::Knight, 8).unwrap();
    let mut out = Vec::new();
    for (mode, want_len, want_classes) in [(Mode::Path, 33usize, 1usize), (Mode::Cycle, 32, 4)] {
        let ck = dir.path().join(format!("{mode:?}.ck"));
        let opts = SearchOptions::new(mode, Objective::EnumerateMax);
        let first = longest_snake_checkpointed(&g, &opts, &ck).map_err(|e| e.to_string())?;
        ensure!(
            first.max_length == Some(want_len),
            "{mode:?}: {:?}",
            first.max_length
        );
        ensure!(
            first.distinct_count == want_classes,
            "{mode:?}: {} classes",
            first.distinct_count
        );
        let resumed = longest_snake_checkpointed(&g, &opts, &ck).map_err(|e| e.to_string())?;
        ensure!(
            resumed.solutions == first.solutions,
            "{mode:?}: resumed run differs"
        );
        out.push(format!("{mode:?} {want_len}/{want_classes}"));
    }
    Ok(format!(
        "{} (checkpointed, resume identical)",
        out.join(", ")
    ))
}

fn c11_leapers() -> Outcome {
    for m in 1..=12u32 {
        for n in 1..=12u32 {
            let g = PieceGraph::new(MoveRule::Wazir, Board::new(m, n).unwrap());
            ensure!(
                g.is_pseudosnake(&build_wazir_pseudosnake(m, n).unwrap()),
                "{m}x{n}"
            );
        }
    }
    let (mut cw, mut cf): (f64, f64) = (0.0, 0.0);
    for m in [10u32, 12] {
        for n in 10..=30u32 {
            for mode in [SnakeMode::Path, SnakeMode::Cycle] {
                let w =
                    stitch_wazir_snake(m, n, mode).map_err(|e| format!("wazir {m}x{n}: {e}"))?;
                let c = (2.0 * (m * n) as f64 / 3.0 - w.cells().len() as f64) / (m + n) as f64;
                ensure!(c <= WAZIR_SLACK, "wazir {m}x{n}: C = {c:.2}");
                cw = cw.max(c);
                let fm = m.max(12);
                let f = build_fers_snake(fm, n.max(12), mode)
                    .map_err(|e| format!("fers {fm}x{n}: {e}"))?;
                let c = ((fm * n.max(12)) as f64 / 3.0 - f.cells().len() as f64)
                    / (fm + n.max(12)) as f64;
                ensure!(c <= FERS_SLACK, "fers {fm}x{n}: C = {c:.2}");
                cf = cf.max(c);
            }
        }
    }
    let window = Board::with_origin(60, 60, Cell::new(-17, -23)).unwrap();
    for (p, q) in [(1u32, 2u32), (1, 4), (2, 3), (3, 4)] {
        let pat = build_leaper_pseudosnake(p, q).map_err(|e| e.to_string())?;
        let rule = MoveRule::leaper(p, q).unwrap();
        ensure!(pat.density() == Ratio::new(1, 2), "({p},{q}) density");
        ensure!(
            pat.interior_degree_is(rule, &window, 2 * q as i32, 2),
            "({p},{q}) degree"
        );
    }
    let a = Cell::new(5, 7);
    let fold = |c: Cell| {
        halffree_fold(&[c].into_iter().collect::<CellSet>(), 0)
            .unwrap()
            .iter()
            .next()
            .unwrap()
    };
    let images: std::collections::BTreeSet<Cell> = MoveRule::Leaper(1, 3)
        .moves()
        .into_iter()
        .map(|v| fold(a + v) - fold(a))
        .collect();
    ensure!(
        images == MoveRule::Knight.moves().into_iter().collect(),
        "fold images {images:?}"
    );
    Ok(format!(
        "mod 3 pattern up to 12x12; wazir C = {cw:.2} <= {WAZIR_SLACK}; fers C = {cf:.2} <= {FERS_SLACK}; leapers degree 2, density 1/2; fold exact"
    ))
}

fn snake(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_snake"))
        .args(args)
        .output()
        .expect("run snake");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn documents() -> impl Strategy<Value = Document> {
    let rule = prop_oneof![
        Just(MoveRule::King),
        Just(MoveRule::Knight),
        Just(MoveRule::Wazir),
        Just(MoveRule::Fers),
        (0u32..5, 1u32..7).prop_map(|(p, q)| MoveRule::leaper(p, q).unwrap()),
    ];
    let kind = prop_oneof![
        Just(Kind::Path),
        Just(Kind::Cycle),
        Just(Kind::Set),
        Just(Kind::WeightedSet)
    ];
    (rule, 1u32..12, 1u32..12, kind).prop_flat_map(|(rule, m, n, kind)| {
        let cell = (0..n as i32, 0..m as i32).prop_map(|(x, y)| Cell::new(x, y));
        let cells = match kind {
            Kind::Path | Kind::Cycle => proptest::collection::vec(cell, 0..20).boxed(),
            _ => proptest::collection::btree_set(cell, 0..20)
                .prop_map(|s| s.into_iter().collect())
                .boxed(),
        };
        (cells, proptest::collection::vec(1u64..1_000_000, 20)).prop_map(move |(cells, w)| {
            let weights = if kind == Kind::WeightedSet {
                w[..cells.len()].to_vec()
            } else {
                Vec::new()
            };
            Document {
                rule,
                m,
                n,
                kind,
                cells,
                weights,
            }
        })
    })
}

fn c12_tooling() -> Outcome {
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: 1000,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    runner
        .run(&documents(), |d| {
            prop_assert_eq!(Document::parse(&d.emit()).unwrap(), d);
            Ok(())
        })
        .map_err(|e| format!("round trip: {e}"))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let gens: [&[&str]; 11] = [
        &["king-even-spiral", "--n", "8"],
        &["king-odd-comb", "--n", "9"],
        &["king-cycle", "--n", "12"],
        &["knight-U", "--k", "4", "--interval", "0:32"],
        &["knight-cycle", "--m", "38", "--n", "40"],
        &["tesseract"],
        &["pancake"],
        &["wazir-pattern", "--n", "12"],
        &["wazir", "--m", "12", "--n", "20", "--mode", "cycle"],
        &["fers", "--m", "12", "--n", "15"],
        &["leaper-pattern", "--p", "2", "--q", "3", "--n", "16"],
    ];
    for g in gens {
        let file = dir.path().join(format!("{}.doc", g[0]));
        let f = file.to_str().unwrap();
        let mut args = vec!["construct", "--gen"];
        args.extend_from_slice(g);
        args.extend_from_slice(&["-o", f]);
        let (code, _, err) = snake(&args);
        ensure!(code == 0, "construct {g:?}: exit {code}: {err}");
        let (code, out, _) = snake(&["--report", "kv", "verify", f]);
        let kv = parse_kv(&out);
        ensure!(
            code == 0 && kv.contains(&("status".into(), "ok".into())),
            "verify {g:?}: exit {code}\n{out}"
        );
    }
    let spiral = dir.path().join("king-even-spiral.doc");
    let doc = Document::parse(&std::fs::read_to_string(&spiral).unwrap()).unwrap();
    ensure!(
        doc.cells.len() == 32,
        "spiral has {} cells",
        doc.cells.len()
    );
    let pancake =
        Document::parse(&std::fs::read_to_string(dir.path().join("pancake.doc")).unwrap()).unwrap();
    ensure!(
        pancake.cells.len() == 68 && pancake.weighted_set().total_weight() == 192,
        "pancake document"
    );

    let chord = dir.path().join("chord.doc");
    std::fs::write(&chord, "snake/1 king 3 3 path\n0 0\n1 0\n1 1\n").unwrap();
    let garbage = dir.path().join("garbage.doc");
    std::fs::write(&garbage, "snake/1 king three 3 path\n").unwrap();
    let codes = [
        (snake(&["verify", spiral.to_str().unwrap()]).0, 0),
        (snake(&["verify", chord.to_str().unwrap()]).0, 1),
        (snake(&["verify", garbage.to_str().unwrap()]).0, 2),
        (
            snake(&["construct", "--gen", "king-even-spiral", "--n", "7"]).0,
            2,
        ),
        (snake(&["no-such-command"]).0, 2),
        (
            snake(&["search", "--rule", "knight", "--n", "8", "--budget", "1000"]).0,
            3,
        ),
    ];
    ensure!(
        codes.iter().all(|(got, want)| got == want),
        "exit codes {codes:?}"
    );

    for (file, cells, edges) in [
        (spiral.clone(), 64, 31),
        (dir.path().join("king-cycle.doc"), 144, 71),
    ] {
        let (code, svg, _) = snake(&["render", "--format", "svg", file.to_str().unwrap()]);
        ensure!(code == 0, "render exit {code}");
        let xml = roxmltree::Document::parse(&svg).map_err(|e| format!("svg: {e}"))?;
        let count = |tag: &str, class: &str| {
            xml.descendants()
                .filter(|n| n.has_tag_name(tag) && n.attribute("class") == Some(class))
                .count()
        };
        ensure!(
            count("rect", "cell") == cells,
            "{} cell rects",
            count("rect", "cell")
        );
        ensure!(
            count("line", "edge") == edges,
            "{} edge lines",
            count("line", "edge")
        );
    }
    let (_, blocks, _) = snake(&["render", "--format", "svg", "--blocks", "11"]);
    ensure!(
        roxmltree::Document::parse(&blocks).is_ok(),
        "blocks svg is not XML"
    );
    Ok(
        "1000 round trips; 11 generators construct+verify; exit codes 0/1/2/3; SVG counts match"
            .into(),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("even king paths", c1_even_king),
        ("odd king paths", c2_odd_king),
        ("lift bijection", c3_lift_bijection),
        ("block certificate", c4_blocks),
        ("stamp foldings", c5_stamps),
        ("free cycles", c6_free_cycles),
        ("knight constructions", c7_knight),
        ("density solver", c8_density),
        ("king cycles", c9_cycles),
        ("knight 8x8 records", c10_knight_records),
        ("wazir/fers/leapers", c11_leapers),
        ("tooling", c12_tooling),
    ];
    let results: Vec<(Outcome, std::time::Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, f)| {
                s.spawn(move || {
                    let t = Instant::now();
                    let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
                    (r, t.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut failed = 0;
    for (i, ((name, _), (r, t))) in criteria.iter().zip(&results).enumerate() {
        match r {
            Ok(msg) => println!("criterion {:>2} PASS  {name} [{t:.1?}]: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} [{t:.1?}]: {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
