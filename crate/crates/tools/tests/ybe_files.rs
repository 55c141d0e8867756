use brace_core::brace::{check_axioms, AxiomMode, AXIOM_BUDGET};
use brace_core::constructions::{build_cycle_family, catalog};
use brace_core::ybe::{solution_from_brace, SolutionTable};
use brace_tools::{export_solution, import_solution, render_solution, ToolError};

#[test]
fn cf72_round_trip() {
    let b = build_cycle_family(&catalog::cf72()).unwrap();
    let t = solution_from_brace(
        &b,
        &check_axioms(&b, AxiomMode::Exhaustive, AXIOM_BUDGET).unwrap(),
    )
    .unwrap();
    let mut bytes = Vec::new();
    let written = export_solution(&t, &mut bytes).unwrap();
    assert_eq!(written, bytes.len());
    let text = String::from_utf8(bytes).unwrap();
    assert!(text.starts_with("YBE v1 N=72\n"));
    assert_eq!(import_solution(&text).unwrap(), t);
}

#[test]
fn single_point_file_is_exact() {
    assert_eq!(
        render_solution(&SolutionTable::flip(1)),
        "YBE v1 N=1\n0\n\n0\n"
    );
    let two = render_solution(&SolutionTable::flip(2));
    assert_eq!(two, "YBE v1 N=2\n0 1\n0 1\n\n0 0\n1 1\n");
}

#[test]
fn malformed_files_are_rejected() {
    let good = render_solution(&SolutionTable::flip(2));
    let bad = [
        good.replace("v1", "v2"),
        good.trim_end().to_string(),
        good.replace("\n\n", "\n"),
        good.replace("0 1\n0 1", "0 1\n0"),
        good.replace("1 1\n", "1 2\n"),
        format!("{good}0\n"),
    ];
    for text in bad {
        assert!(
            matches!(import_solution(&text), Err(ToolError::Ybe(_))),
            "accepted {text:?}"
        );
    }
}
