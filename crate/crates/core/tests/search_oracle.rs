use bkrel_core::lattice::{FiniteLattice, Lattice};
use bkrel_core::morphism::{Direction, Unknown};
use bkrel_core::search::{
    check_bootstrap, check_pseudo_assoc, check_solver_maximality, AssocLaw, SearchSpace, Verdict,
};

fn chain3() -> Lattice {
    Lattice::from_table(FiniteLattice::godel_chain(3)).unwrap()
}

#[test]
fn bootstrap_on_three_valued_grids() {
    for lattice in [Lattice::Lukasiewicz, Lattice::Godel, chain3()] {
        let space = SearchSpace::default_for(lattice.clone(), [2, 2, 2, 1]).unwrap();
        let out = check_bootstrap(&space).unwrap();
        assert_eq!(out.verdict, Verdict::VerifiedExhaustive, "{lattice}");
        assert_eq!(out.instances_checked, 3u64.pow(4 + 4 + 4));
    }
}

#[test]
fn law_two_is_exhaustively_verified() {
    for lattice in [
        Lattice::boolean(),
        Lattice::Lukasiewicz,
        Lattice::Product,
        chain3(),
    ] {
        let space = SearchSpace::default_for(lattice.clone(), [2, 2, 1, 2]).unwrap();
        let out = check_pseudo_assoc(&space, AssocLaw::SubSub).unwrap();
        assert_eq!(out.verdict, Verdict::VerifiedExhaustive, "{lattice}");
    }
}

#[test]
fn law_three_as_stated_fails_even_crisply() {
    let space = SearchSpace::default_for(Lattice::boolean(), [2, 2, 2, 2]).unwrap();
    let out = check_pseudo_assoc(&space, AssocLaw::SupSup).unwrap();
    assert_eq!(out.verdict, Verdict::Counterexample);
    // The all-zero tuple is the first instance: Q ▷ (0 ▷ 0) = 0 but Q ▷ 0 = 1.
    assert_eq!(out.instances_checked, 1);
    let cell = out.witness.as_ref().unwrap().cell.clone().unwrap();
    assert_eq!((cell.lhs.as_str(), cell.rhs.as_str()), ("0", "1"));
    assert!(out.replay(&space).unwrap());
}

#[test]
fn outcomes_are_deterministic() {
    let space = SearchSpace::default_for(Lattice::Lukasiewicz, [2, 1, 2, 1]).unwrap();
    let a = serde_json::to_string(&check_pseudo_assoc(&space, AssocLaw::SupSup).unwrap()).unwrap();
    let b = serde_json::to_string(&check_pseudo_assoc(&space, AssocLaw::SupSup).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn s_solver_boolean_sizes_two() {
    let space = SearchSpace::default_for(Lattice::boolean(), [2, 2, 2, 2]).unwrap();
    let out = check_solver_maximality(&space, Unknown::S, Direction::Backward).unwrap();
    assert_eq!(out.verdict, Verdict::VerifiedExhaustive);
    assert_eq!(out.total_instances, (1 << 12) * 16);
}

#[test]
fn f_solver_forward_on_three_element_lattice() {
    let space = SearchSpace::default_for(chain3(), [2, 1, 2, 1]).unwrap();
    let out = check_solver_maximality(&space, Unknown::F, Direction::Forward).unwrap();
    assert_eq!(out.verdict, Verdict::VerifiedExhaustive);
}

#[test]
fn g_solvers_on_three_valued_grids() {
    let space = SearchSpace::default_for(Lattice::Godel, [1, 2, 1, 2]).unwrap();
    let out = check_solver_maximality(&space, Unknown::G, Direction::Forward).unwrap();
    assert_eq!(out.verdict, Verdict::VerifiedExhaustive);
    let space = SearchSpace::default_for(Lattice::Lukasiewicz, [1, 2, 1, 2]).unwrap();
    let out = check_solver_maximality(&space, Unknown::G, Direction::Backward).unwrap();
    assert_eq!(out.verdict, Verdict::VerifiedExhaustive);
}

#[test]
fn off_grid_bounds_still_verify() {
    // Product residua such as ½ → 0.25 leave {0, ½, 1}; the oracle then checks
    // feasibility against the bound rather than equality.
    let space = SearchSpace::default_for(Lattice::Product, [1, 2, 1, 2]).unwrap();
    for (u, d) in [
        (Unknown::R, Direction::Forward),
        (Unknown::F, Direction::Backward),
    ] {
        let out = check_solver_maximality(&space, u, d).unwrap();
        assert_eq!(out.verdict, Verdict::VerifiedExhaustive, "{u} {d}");
    }
}
