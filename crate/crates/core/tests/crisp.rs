use std::sync::Arc;

use bkrel_core::lattice::Lattice;
use bkrel_core::morphism::{is_homomorphism, MorphismSquare};
use bkrel_core::relation::{Domain, Relation};

fn domain(name: &str) -> Arc<Domain> {
    Arc::new(Domain::indexed(name, &name.to_lowercase(), 2).unwrap())
}

/// Crisp 2×2 relation whose cells are the bits of `code`, first cell most significant.
fn crisp(name: &str, src: &Arc<Domain>, dst: &Arc<Domain>, code: usize) -> Relation {
    let l = Lattice::boolean();
    let (bot, top) = (l.bottom(), l.top());
    Relation::from_fn(name, src.clone(), dst.clone(), l, |i, j| {
        if code >> (3 - (i * 2 + j)) & 1 == 1 {
            top
        } else {
            bot
        }
    })
    .unwrap()
}

/// Graph of `x ↦ image[x]`.
fn function(name: &str, src: &Arc<Domain>, dst: &Arc<Domain>, image: [usize; 2]) -> Relation {
    crisp(
        name,
        src,
        dst,
        image
            .iter()
            .enumerate()
            .map(|(i, &j)| 1 << (3 - (i * 2 + j)))
            .sum(),
    )
}

fn image_and_preimage_agree(r: &Relation, s: &Relation, f: &Relation, g: &Relation) -> bool {
    let m = MorphismSquare::new(r.clone(), s.clone(), f.clone(), g.clone()).unwrap();
    (m.forward_image() == *s) == (m.backward_image() == *r)
}

#[test]
fn image_preimage_equivalence_holds_for_bijections() {
    let (a, b, c, d) = (domain("A"), domain("B"), domain("C"), domain("D"));
    for fi in [[0, 1], [1, 0]] {
        for gi in [[0, 1], [1, 0]] {
            let (f, g) = (function("F", &a, &c, fi), function("G", &b, &d, gi));
            for rc in 0..16 {
                for sc in 0..16 {
                    let (r, s) = (crisp("R", &a, &b, rc), crisp("S", &c, &d, sc));
                    assert!(
                        image_and_preimage_agree(&r, &s, &f, &g),
                        "f={fi:?} g={gi:?} R={rc} S={sc}"
                    );
                }
            }
        }
    }
}

#[test]
fn image_preimage_equivalence_fails_for_a_constant_function() {
    // F collapses A onto c1; R = {(a1, b1)} has image S = {(c1, d1)}, but the
    // preimage of S is {(a1, b1), (a2, b1)} ≠ R.
    let (a, b, c, d) = (domain("A"), domain("B"), domain("C"), domain("D"));
    let (f, g) = (function("F", &a, &c, [0, 0]), function("G", &b, &d, [0, 1]));
    let r = crisp("R", &a, &b, 0b1000);
    let s = crisp("S", &c, &d, 0b1000);
    let m = MorphismSquare::new(r.clone(), s.clone(), f.clone(), g.clone()).unwrap();
    assert_eq!(m.forward_image(), s);
    assert_ne!(m.backward_image(), r);
    assert!(!image_and_preimage_agree(&r, &s, &f, &g));
    // The predicate requires both equalities, so this square is not a homomorphism.
    assert!(!is_homomorphism(&m).unwrap());
}
