//! One PASS/FAIL line per acceptance criterion. Runs as a plain binary so
//! the lines appear in `cargo test` output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use brace_core::algebra::{is_orthogonal, unit_order};
use brace_core::bounds::{
    divides_orthogonal_order, find_orthogonal_element, minimal_witness_dimension, nu,
    orthogonal_group_order, theorem_main2_bounds, OrthoKind, SearchStrategy, SEARCH_BUDGET,
};
use brace_core::brace::{
    check_axioms, is_ideal, is_simple, AxiomMode, Certificate, AXIOM_BUDGET, CLOSURE_BUDGET,
};
use brace_core::constructions::{
    build_cycle_family, build_matrix_family, catalog, simplicity_witness_j, solve_exponents,
    CycleBlock, CycleFamilySpec, FamilyBrace,
};
use brace_core::group::{
    additive_decomposition_unique, group_report, is_a_group, sylow_left_ideals,
};
use brace_core::ybe::{check_solution, solution_from_brace, BraidCheck};
use brace_core::{Brace, Error};
use brace_tools::pipeline::prime_example;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cf72() -> Result<FamilyBrace, String> {
    build_cycle_family(&catalog::cf72()).map_err(fail)
}

fn criterion_1() -> Outcome {
    let b = cf72()?;
    ensure(b.order() == 72, format!("order {}", b.order()))?;
    let ax = check_axioms(&b, AxiomMode::Exhaustive, AXIOM_BUDGET).map_err(fail)?;
    ensure(ax.all_hold(), format!("axioms fail: {ax:?}"))?;
    ensure(
        ax.triples_checked == 72 * 72 * 72,
        format!("{} triples", ax.triples_checked),
    )?;
    let s = is_simple(&b, CLOSURE_BUDGET).map_err(fail)?;
    ensure(
        s.simple && s.certificate == Certificate::AllClosuresFull { closures: 71 },
        format!("{s:?}"),
    )?;
    Ok("order 72, 373248 triples, 71 full closures".into())
}

fn criterion_2() -> Outcome {
    let b = build_cycle_family(&catalog::ns216()).map_err(fail)?;
    ensure(b.order() == 216, format!("order {}", b.order()))?;
    let j = simplicity_witness_j(&b).map_err(fail)?;
    ensure(j.len() == 72, format!("|J| = {}", j.len()))?;
    ensure(is_ideal(&b, &j.members).map_err(fail)?, "J is not an ideal")?;
    let s = is_simple(&b, CLOSURE_BUDGET).map_err(fail)?;
    let Certificate::ProperIdeal(cert) = s.certificate else {
        return Err("no proper ideal found".into());
    };
    ensure(!s.simple && cert.is_subset_of(&j), "certificate outside J")?;
    Ok(format!(
        "|J| = 72, certificate of size {} inside J",
        cert.len()
    ))
}

fn criterion_3() -> Outcome {
    let b = build_matrix_family(&catalog::mf72()).map_err(fail)?;
    ensure(b.order() == 72, format!("order {}", b.order()))?;
    ensure(
        check_axioms(&b, AxiomMode::Exhaustive, AXIOM_BUDGET)
            .map_err(fail)?
            .all_hold(),
        "axioms fail",
    )?;
    ensure(
        is_simple(&b, CLOSURE_BUDGET).map_err(fail)?.simple,
        "not simple",
    )?;
    Ok("order 72, simple".into())
}

fn criterion_4() -> Outcome {
    let mut sizes = Vec::new();
    for b in [
        cf72()?,
        build_cycle_family(&catalog::ns216()).map_err(fail)?,
    ] {
        let blocks = sylow_left_ideals(&b).map_err(fail)?;
        for (p, blk) in &blocks {
            ensure(blk.is_left_ideal, format!("block {p} is not a left ideal"))?;
            for &i in &blk.members {
                let x = b.element_at(i).map_err(fail)?;
                for &j in &blk.members {
                    let y = b.element_at(j).map_err(fail)?;
                    ensure(
                        b.mul(&x, &y) == b.mul(&y, &x),
                        format!("block {p} is not abelian"),
                    )?;
                }
            }
            sizes.push(blk.len());
        }
        ensure(
            additive_decomposition_unique(&b, &blocks),
            "decomposition not unique",
        )?;
        ensure(is_a_group(&b, &blocks), "not an A-group")?;
        let g = group_report(&b, CLOSURE_BUDGET).map_err(fail)?;
        ensure(
            !g.is_abelian && g.is_metabelian && g.is_a_group,
            format!("{g:?}"),
        )?;
    }
    Ok(format!("block sizes {sizes:?}"))
}

fn criterion_5() -> Outcome {
    let b = cf72()?;
    let ax = check_axioms(&b, AxiomMode::Exhaustive, AXIOM_BUDGET).map_err(fail)?;
    let t = solution_from_brace(&b, &ax).map_err(fail)?;
    let r = check_solution(&t);
    ensure(r.all_pass(), format!("{r:?}"))?;
    ensure(
        r.braid_mode == BraidCheck::Exhaustive && r.braid_triples == 72 * 72 * 72,
        "braid not exhaustive",
    )?;
    Ok("involutive, nondegenerate, braid on 373248 triples".into())
}

fn criterion_6() -> Outcome {
    ensure((nu(1), nu(2), nu(6)) == (2, 1, 1), "nu table")?;
    ensure(
        unit_order(3, 7).map_err(fail)? == 6 && unit_order(7, 3).map_err(fail)? == 1,
        "unit orders",
    )?;
    let r = theorem_main2_bounds(&[3, 7]).map_err(fail)?;
    ensure(r.l() == [42, 18], format!("l = {:?}", r.l()))?;
    let mut cells = 0;
    for p1 in [3u32, 5, 7, 11, 13, 17, 19] {
        for p in [2u32, 3, 5, 7].into_iter().filter(|&p| p != p1) {
            for kind in OrthoKind::ALL {
                if (p == 2) != matches!(kind, OrthoKind::Sp2 | OrthoKind::OOdd2 | OrthoKind::OEven2)
                {
                    continue;
                }
                for m in 1..=4 {
                    let literal =
                        orthogonal_group_order(kind, m, p).map_err(fail)? % p1 as u128 == 0;
                    let rule = divides_orthogonal_order(p1, p, kind, m).map_err(fail)?;
                    ensure(
                        rule == literal,
                        format!("p1 = {p1}, p = {p}, {}, m = {m}", kind.name()),
                    )?;
                    cells += 1;
                }
            }
        }
    }
    Ok(format!("l = (42,18), {cells}/{cells} grid cells agree"))
}

fn witness_ok(p: u32, p1: u32, dim: usize, strategy: SearchStrategy) -> Result<(), String> {
    let w = find_orthogonal_element(p, p1, dim, strategy, SEARCH_BUDGET)
        .map_err(|e| format!("({p},{p1},{dim}): {e}"))?;
    let ok = is_orthogonal(w.matrix(), w.form()).map_err(fail)?
        && w.order() == p1 as u64
        && w.minus_id_bijective();
    ensure(ok, format!("({p},{p1},{dim}) witness does not verify"))
}

fn criterion_7() -> Outcome {
    for (p, p1) in [(2, 3), (3, 2), (5, 2), (7, 2), (2, 5)] {
        let d = minimal_witness_dimension(p, p1).map_err(fail)?;
        witness_ok(p, p1, d, SearchStrategy::Exhaustive)?;
        for below in 1..d {
            let r =
                find_orthogonal_element(p, p1, below, SearchStrategy::Exhaustive, SEARCH_BUDGET);
            ensure(
                matches!(r, Err(Error::NoWitness(_))),
                format!("({p},{p1}) has a witness in dimension {below}"),
            )?;
        }
    }
    witness_ok(
        3,
        7,
        minimal_witness_dimension(3, 7).map_err(fail)?,
        SearchStrategy::Auto,
    )?;
    witness_ok(
        7,
        3,
        minimal_witness_dimension(7, 3).map_err(fail)?,
        SearchStrategy::Auto,
    )?;
    Ok("5 cells sharp by exhaustive search, (3,7) and (7,3) constructive".into())
}

fn criterion_8() -> Outcome {
    let r = prime_example(200, 0, false, CLOSURE_BUDGET).map_err(fail)?;
    ensure(r.order == 92160, format!("order {}", r.order))?;
    ensure(r.passed(), format!("{r:?}"))?;
    Ok(format!(
        "order 92160, |A x {{0}}| = {}, 200 + 200 seeds, prime, not simple",
        r.left_factor_size
    ))
}

fn criterion_9() -> Outcome {
    let split = solve_exponents(&[6, 2], &[7, 3]).map_err(fail)?;
    ensure(
        split.iter().all(|s| s.m_prime == 1 && s.r == 1),
        format!("{split:?}"),
    )?;
    let block = |p: u32, p1: u32, dim: usize| -> Result<CycleBlock, String> {
        let w = find_orthogonal_element(p, p1, dim, SearchStrategy::Auto, SEARCH_BUDGET)
            .map_err(fail)?;
        Ok(CycleBlock {
            p,
            gram: w.form().gram().clone(),
            f: w.matrix().clone(),
            m: 1,
            r: 1,
        })
    };
    let spec = CycleFamilySpec {
        blocks: vec![block(3, 7, 6)?, block(7, 3, 2)?],
    };
    let b = build_cycle_family(&spec).map_err(fail)?;
    ensure(
        b.order() == 3usize.pow(7) * 7usize.pow(3),
        format!("order {}", b.order()),
    )?;
    let ax = check_axioms(
        &b,
        AxiomMode::Sampled {
            seed: 0,
            trials: 100_000,
        },
        AXIOM_BUDGET,
    )
    .map_err(fail)?;
    ensure(
        ax.all_hold() && ax.triples_checked == 100_000,
        format!("{ax:?}"),
    )?;
    Ok("m' = r = (1,1), order 750141, 100000 sampled triples".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("CF72 pipeline", criterion_1, Duration::from_secs(10)),
        (
            "NS216 negative control",
            criterion_2,
            Duration::from_secs(30),
        ),
        ("MF72 matrix family", criterion_3, Duration::from_secs(10)),
        ("block structure", criterion_4, Duration::from_secs(10)),
        ("YBE suite", criterion_5, Duration::from_secs(60)),
        ("bounds suite", criterion_6, Duration::from_secs(10)),
        (
            "minimal-dimension witnesses",
            criterion_7,
            Duration::from_secs(300),
        ),
        (
            "prime non-simple example",
            criterion_8,
            Duration::from_secs(600),
        ),
        ("order 3^7 7^3", criterion_9, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if outcome.is_ok() && took > limit {
            outcome = Err(format!("took {took:.1?}, limit {limit:?}"));
        }
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({took:.1?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({took:.1?}): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
