use brace_core::algebra::{is_orthogonal, unit_order, Matrix};
use brace_core::bounds::{
    divides_orthogonal_order, find_orthogonal_element, minimal_witness_dimension, nu,
    orthogonal_group_order, theorem_main2_bounds, OrthoKind, SearchStrategy, SEARCH_BUDGET,
};
use brace_core::constructions::solve_exponents;
use brace_core::error::Error;

const SMALL_PRIMES: [u32; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

#[test]
fn nu_table() {
    assert_eq!(nu(1), 2);
    assert_eq!(nu(2), 1);
    assert_eq!(nu(6), 1);
    assert_eq!(nu(7), 2);
}

#[test]
fn unit_orders() {
    assert_eq!(unit_order(3, 7).unwrap(), 6);
    assert_eq!(unit_order(7, 3).unwrap(), 1);
    assert_eq!(unit_order(2, 3).unwrap(), 2);
    assert!(matches!(unit_order(6, 3), Err(Error::NotAUnit { .. })));
}

#[test]
fn group_orders() {
    assert_eq!(orthogonal_group_order(OrthoKind::GoOdd, 1, 3).unwrap(), 48);
    assert_eq!(orthogonal_group_order(OrthoKind::Sp2, 1, 2).unwrap(), 6);
    assert_eq!(orthogonal_group_order(OrthoKind::GoPlus, 1, 3).unwrap(), 4);
    assert_eq!(orthogonal_group_order(OrthoKind::GoMinus, 1, 3).unwrap(), 8);
    assert!(matches!(
        orthogonal_group_order(OrthoKind::Sp2, 1, 3),
        Err(Error::KindPrimeMismatch { .. })
    ));
    assert!(matches!(
        orthogonal_group_order(OrthoKind::GoOdd, 1, 2),
        Err(Error::KindPrimeMismatch { .. })
    ));
}

#[test]
fn divisibility_examples() {
    assert!(divides_orthogonal_order(7, 3, OrthoKind::GoOdd, 3).unwrap());
    assert!(!divides_orthogonal_order(7, 3, OrthoKind::GoOdd, 2).unwrap());
    assert!(divides_orthogonal_order(3, 2, OrthoKind::Sp2, 2).unwrap());
}

#[test]
fn divisibility_rules_match_literal_orders() {
    let mut cells = 0;
    for &p1 in &SMALL_PRIMES[1..] {
        for &p in SMALL_PRIMES.iter().filter(|&&p| p < 10 && p != p1) {
            for kind in OrthoKind::ALL {
                if (p == 2) != matches!(kind, OrthoKind::Sp2 | OrthoKind::OOdd2 | OrthoKind::OEven2)
                {
                    continue;
                }
                for m in 1..=4 {
                    let order = orthogonal_group_order(kind, m, p).unwrap();
                    let literal = order.is_multiple_of(p1 as u128);
                    assert_eq!(
                        divides_orthogonal_order(p1, p, kind, m).unwrap(),
                        literal,
                        "p1 = {p1}, p = {p}, {}, m = {m}",
                        kind.name()
                    );
                    cells += 1;
                }
            }
        }
    }
    assert!(cells > 200);
}

#[test]
fn minimal_dimensions() {
    assert_eq!(minimal_witness_dimension(3, 7).unwrap(), 6);
    assert_eq!(minimal_witness_dimension(7, 3).unwrap(), 2);
    assert_eq!(minimal_witness_dimension(5, 2).unwrap(), 1);
    assert!(matches!(
        minimal_witness_dimension(5, 5),
        Err(Error::EqualPrimes(5))
    ));
}

#[test]
fn main2_bounds() {
    let r = theorem_main2_bounds(&[3, 7]).unwrap();
    assert_eq!(r.k(), vec![6, 1]);
    assert_eq!(r.l(), vec![42, 18]);
    let r = theorem_main2_bounds(&[2, 3]).unwrap();
    assert_eq!(r.k(), vec![2, 1]);
    assert_eq!(r.l(), vec![6, 4]);
    assert!(matches!(
        theorem_main2_bounds(&[5, 5]),
        Err(Error::EqualPrimes(5))
    ));
}

fn assert_witness(p: u32, p1: u32, dim: usize, strategy: SearchStrategy) {
    let w = find_orthogonal_element(p, p1, dim, strategy, SEARCH_BUDGET)
        .unwrap_or_else(|e| panic!("no witness for ({p}, {p1}, {dim}): {e}"));
    assert_eq!(w.matrix().rows(), dim);
    assert!(is_orthogonal(w.matrix(), w.form()).unwrap());
    assert_eq!(w.order(), p1 as u64);
    assert!(w.minus_id_bijective());
    assert!(w.form().gram().is_symmetric());
}

#[test]
fn witness_for_two_three() {
    let w = find_orthogonal_element(2, 3, 2, SearchStrategy::Auto, SEARCH_BUDGET).unwrap();
    assert_eq!(
        w.matrix(),
        &Matrix::from_rows(2, &[[0, 1], [1, 1]]).unwrap()
    );
    assert!(w.form().is_alternating());
    let w = find_orthogonal_element(5, 2, 1, SearchStrategy::Auto, SEARCH_BUDGET).unwrap();
    assert_eq!(w.matrix().entries(), &[4]);
    assert_eq!(w.form().gram().entries(), &[1]);
    assert!(matches!(
        find_orthogonal_element(2, 3, 1, SearchStrategy::Auto, SEARCH_BUDGET),
        Err(Error::NoWitness(_))
    ));
}

#[test]
fn minimal_dimension_is_sharp() {
    for (p, p1) in [(2, 3), (3, 2), (5, 2), (7, 2), (2, 5)] {
        let d = minimal_witness_dimension(p, p1).unwrap();
        assert_witness(p, p1, d, SearchStrategy::Auto);
        if (p as u128).pow((d * d) as u32) <= SEARCH_BUDGET {
            assert_witness(p, p1, d, SearchStrategy::Exhaustive);
        }
        for below in 1..d {
            assert!(
                matches!(
                    find_orthogonal_element(
                        p,
                        p1,
                        below,
                        SearchStrategy::Exhaustive,
                        SEARCH_BUDGET
                    ),
                    Err(Error::NoWitness(_))
                ),
                "({p}, {p1}) has a witness in dimension {below}"
            );
        }
    }
}

#[test]
fn constructive_witnesses_for_three_seven() {
    assert_witness(3, 7, 6, SearchStrategy::Auto);
    assert_witness(7, 3, 2, SearchStrategy::Auto);
    assert_witness(7, 3, 4, SearchStrategy::Auto);
    assert!(matches!(
        find_orthogonal_element(3, 7, 5, SearchStrategy::Auto, SEARCH_BUDGET),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn exponent_splits() {
    let s = solve_exponents(&[6, 2], &[7, 3]).unwrap();
    assert_eq!(
        s.iter().map(|e| (e.m_prime, e.r)).collect::<Vec<_>>(),
        vec![(1, 1), (1, 1)]
    );
    let s = solve_exponents(&[6, 2], &[42, 18]).unwrap();
    assert_eq!(
        s.iter().map(|e| (e.m_prime, e.r)).collect::<Vec<_>>(),
        vec![(6, 6), (8, 2)]
    );
    assert!(matches!(
        solve_exponents(&[6, 2], &[5, 3]),
        Err(Error::BelowBound { block: 0, .. })
    ));
}
