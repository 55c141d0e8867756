use brace_core::brace::{
    check_axioms, ideal_closure, is_ideal, is_left_ideal, is_prime, is_simple, list_ideals,
    star_span, AxiomMode, Certificate, ClosureMode, AXIOM_BUDGET, CLOSURE_BUDGET,
};
use brace_core::constructions::{
    build_cycle_family, build_matrix_family, build_prime_example, catalog, simplicity_witness_j,
    validate_cycle_spec, validate_matrix_spec, CycleFamilySpec, FamilyBrace,
};
use brace_core::error::Error;
use brace_core::group::{
    additive_decomposition_unique, derived_subgroup, group_report, is_a_group, sylow_blocks_closed,
    sylow_left_ideals,
};
use brace_core::Brace;

fn cf72() -> FamilyBrace {
    build_cycle_family(&catalog::cf72()).unwrap()
}

fn ns216() -> FamilyBrace {
    build_cycle_family(&catalog::ns216()).unwrap()
}

#[test]
fn cf72_is_a_simple_brace_of_order_72() {
    let b = cf72();
    assert_eq!(b.order(), 72);
    let report = check_axioms(&b, AxiomMode::Exhaustive, AXIOM_BUDGET).unwrap();
    assert!(report.all_hold(), "{report:?}");
    assert_eq!(report.triples_checked, 72 * 72 * 72);
    let s = is_simple(&b, CLOSURE_BUDGET).unwrap();
    assert!(s.simple);
    assert_eq!(s.certificate, Certificate::AllClosuresFull { closures: 71 });
}

#[test]
fn cf72_spec_report() {
    let r = validate_cycle_spec(&catalog::cf72());
    assert!(r.is_valid(), "{:?}", r.first_failure());
    assert!(r.predicts_simple());

    let mut bad = catalog::cf72();
    bad.blocks[0].m = 0;
    assert!(!validate_cycle_spec(&bad).is_valid());
    assert!(matches!(
        build_cycle_family(&bad),
        Err(Error::SpecInvalid(_))
    ));
}

#[test]
fn cf72_last_element_has_maximal_coordinates() {
    let b = cf72();
    let last = b.element_at(71).unwrap();
    assert_eq!(last.coords(), &[1, 1, 1, 2, 2]);
    for i in 0..72 {
        assert_eq!(b.index_of(&b.element_at(i).unwrap()).unwrap(), i);
    }
    assert!(matches!(b.element_at(72), Err(Error::OutOfRange { .. })));
}

#[test]
fn cf72_star_is_nontrivial_and_spans() {
    let b = cf72();
    let all: Vec<usize> = (0..72).collect();
    assert_eq!(star_span(&b, &all, &all), all);
    assert_eq!(star_span(&b, &[0], &all), vec![0]);
    let lattice = list_ideals(&b, CLOSURE_BUDGET).unwrap();
    assert_eq!(lattice.len(), 2);
    assert!(is_prime(&b, &lattice).unwrap());
}

#[test]
fn ns216_has_the_witness_ideal() {
    let spec = catalog::ns216();
    let r = validate_cycle_spec(&spec);
    assert!(r.is_valid());
    assert_eq!(r.minus_id_bijective, vec![true, false]);

    let b = ns216();
    assert_eq!(b.order(), 216);
    let j = simplicity_witness_j(&b).unwrap();
    assert_eq!(j.len(), 72);
    assert!(j.is_ideal);
    assert!(is_ideal(&b, &j.members).unwrap());

    let s = is_simple(&b, CLOSURE_BUDGET).unwrap();
    assert!(!s.simple);
    match s.certificate {
        Certificate::ProperIdeal(ideal) => assert!(ideal.len() < 216 && !ideal.is_zero()),
        other => panic!("unexpected certificate {other:?}"),
    }

    let inside = b.element_at(j.members[5]).unwrap();
    let closure = ideal_closure(&b, &[inside], ClosureMode::TwoSided).unwrap();
    assert!(closure.is_subset_of(&j));

    let lattice = list_ideals(&b, CLOSURE_BUDGET).unwrap();
    assert!(lattice.iter().any(|i| i.members == j.members));
    assert!(lattice.iter().any(|i| i.len() == 216));
}

#[test]
fn ns216_certificate_is_inside_j() {
    let b = ns216();
    let j = simplicity_witness_j(&b).unwrap();
    let Certificate::ProperIdeal(ideal) = is_simple(&b, CLOSURE_BUDGET).unwrap().certificate else {
        panic!("expected a proper ideal");
    };
    assert!(
        ideal.is_subset_of(&j),
        "certificate of size {} not inside J",
        ideal.len()
    );
}

#[test]
fn cf72_has_no_witness() {
    assert!(matches!(
        simplicity_witness_j(&cf72()),
        Err(Error::NoWitness(_))
    ));
}

#[test]
fn identity_map_gives_a_degenerate_witness() {
    let mut spec: CycleFamilySpec = catalog::cf72();
    spec.blocks[1].f = brace_core::algebra::Matrix::identity(1, 3).unwrap();
    assert!(!validate_cycle_spec(&spec).is_valid());
    let b = brace_core::constructions::build_cycle_family_relaxed(&spec).unwrap();
    let j = simplicity_witness_j(&b).unwrap();
    assert!(j.is_ideal);
    let t_free = 72 / 3;
    assert_eq!(j.len(), t_free);
}

#[test]
fn mf72_is_simple_and_matches_cf72() {
    let spec = catalog::mf72();
    assert!(validate_matrix_spec(&spec).is_valid());
    let b = build_matrix_family(&spec).unwrap();
    assert_eq!(b.order(), 72);
    assert!(check_axioms(&b, AxiomMode::Exhaustive, AXIOM_BUDGET)
        .unwrap()
        .all_hold());
    assert!(is_simple(&b, CLOSURE_BUDGET).unwrap().simple);

    let c = cf72();
    for i in 0..72 {
        for j in 0..72 {
            let (x, y) = (c.element_at(i).unwrap(), c.element_at(j).unwrap());
            assert_eq!(b.mul(&x, &y), c.mul(&x, &y));
            assert_eq!(b.add(&x, &y), c.add(&x, &y));
        }
    }
}

#[test]
fn matrix_variant_with_singular_map_is_not_simple() {
    let b = build_matrix_family(&catalog::ns_matrix216()).unwrap();
    assert_eq!(b.order(), 216);
    assert!(!is_simple(&b, CLOSURE_BUDGET).unwrap().simple);
}

fn check_block_structure(b: &FamilyBrace, sizes: &[(u32, usize)]) {
    let blocks = sylow_left_ideals(b).unwrap();
    assert_eq!(
        blocks
            .iter()
            .map(|(p, blk)| (*p, blk.len()))
            .collect::<Vec<_>>(),
        sizes
    );
    for (z, (_, blk)) in blocks.iter().enumerate() {
        assert!(blk.is_left_ideal);
        assert!(!blk.is_ideal);
        assert!(is_left_ideal(b, &blk.members).unwrap());
        assert_eq!(blk.members, b.sylow_block(z));
    }
    assert!(sylow_blocks_closed(b, &blocks));
    assert!(is_a_group(b, &blocks));
    assert!(additive_decomposition_unique(b, &blocks));
    let g = group_report(b, CLOSURE_BUDGET).unwrap();
    assert!(!g.is_abelian);
    assert!(g.is_metabelian);
    assert!(g.is_a_group);
}

#[test]
fn family_group_structure() {
    check_block_structure(&cf72(), &[(2, 8), (3, 9)]);
    check_block_structure(&ns216(), &[(2, 8), (3, 27)]);
}

#[test]
fn cf72_derived_subgroup_is_t() {
    let d = derived_subgroup(&cf72(), CLOSURE_BUDGET).unwrap();
    assert_eq!(d.len(), 12);
}

#[test]
fn prime_example_rejects_other_parameters() {
    assert!(matches!(
        build_prime_example(4),
        Err(Error::UnsupportedParameter(_))
    ));
}

#[test]
fn prime_example_left_factor_is_an_ideal() {
    let b = build_prime_example(5).unwrap();
    assert_eq!(b.order(), 92160);
    let a = b.left_ideal_indices();
    assert_eq!(a.len(), 18432);
    assert!(is_ideal(&b, &a).unwrap());
    assert_eq!(star_span(&b, &a, &a), a);
}

#[test]
fn simplicity_matches_the_predicate() {
    use brace_core::algebra::Matrix;
    let maps: [[[i64; 2]; 2]; 4] = [
        [[-1, 0], [0, -1]],
        [[-1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1], [-1, 0]],
    ];
    let mut seen = [false; 2];
    for f2 in maps {
        for (m1, m2) in [(1, 1), (2, 1), (1, 2)] {
            let mut spec = catalog::ns216();
            spec.blocks[1].f = Matrix::from_rows(3, &f2).unwrap();
            spec.blocks[0].m = m1;
            spec.blocks[1].m = m2;
            let report = validate_cycle_spec(&spec);
            assert!(report.is_valid(), "{:?}", report.first_failure());
            let b = build_cycle_family(&spec).unwrap();
            let simple = is_simple(&b, CLOSURE_BUDGET).unwrap().simple;
            assert_eq!(
                simple,
                report.predicts_simple(),
                "f_2 = {f2:?}, m = ({m1}, {m2})"
            );
            seen[simple as usize] = true;
        }
    }
    assert_eq!(seen, [true, true]);
}
