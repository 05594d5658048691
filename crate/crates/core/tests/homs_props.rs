use num_bigint::BigInt;
use proptest::prelude::*;

use tilegroups::artin::{presentation_from_graph, Presentation};
use tilegroups::braid::{underlying_permutation, BraidWord, WreathElement};
use tilegroups::homs::{
    block_swap, chain_classes, check_relations, discrepancy, gram_matrix, mirrored_pair, omega_gamma, phi, phi1,
    phi_tile, theta, BraidTarget, CheckStatus, EdgeTransvectionRep, GroupTarget, HomError, IntegerMatrices,
    MirroredPair,
};
use tilegroups::linalg::{is_symplectic, Matrix, SymplecticForm};
use tilegroups::tiles::{tree_of, TileExpr};
use tilegroups::verify::{random_pure_braid, random_tile_from, Rng};
use tilegroups::IntMatrix;

fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let gens = strands as i32 - 1;
    proptest::collection::vec((1..=gens.max(1), any::<bool>()), 0..=max_len).prop_map(move |v| {
        if gens == 0 {
            return BraidWord::identity(strands);
        }
        let l: Vec<i32> = v.into_iter().map(|(i, s)| if s { i } else { -i }).collect();
        BraidWord::from_signed(strands, &l).unwrap()
    })
}

fn rng(seed: u64) -> Rng {
    <Rng as rand::SeedableRng>::seed_from_u64(seed)
}

fn chain_matrix(g: usize) -> IntMatrix {
    let chain = chain_classes::<BigInt>(g);
    let mut c = Matrix::zeros(2 * g, chain.len());
    for (j, cl) in chain.iter().enumerate() {
        for i in 0..2 * g {
            c[(i, j)] = cl.coords()[i].clone();
        }
    }
    c
}

proptest! {
    #[test]
    fn phi_agrees_with_edge_transvections_on_the_chain((g, w) in (1usize..=4).prop_flat_map(|g| (Just(g), word(2 * g, 12)))) {
        let rep = EdgeTransvectionRep::from_pairing(
            &tree_of(&TileExpr::f_power(g)),
            gram_matrix(&chain_classes::<BigInt>(g)),
        )
        .unwrap();
        let c = chain_matrix(g);
        let lhs = &phi::<BigInt>(g, &w).unwrap() * &c;
        prop_assert_eq!(lhs, &c * &rep.image(&w.signed_letters()).unwrap());
    }

    #[test]
    fn phi_tile_respects_relators_for_random_signs(seed in any::<u64>(), source in 0usize..=3) {
        let mut r = rng(seed);
        let graph = tree_of(&random_tile_from(&mut r, source, 3));
        let pairs = EdgeTransvectionRep::<i64>::meeting_pairs(&graph);
        let signs: Vec<bool> = (0..pairs).map(|_| rand::Rng::gen_bool(&mut r, 0.5)).collect();
        let rep = EdgeTransvectionRep::<i64>::with_signs(&graph, &signs).unwrap();
        let images: Vec<Matrix<i64>> = (0..rep.dim()).map(|e| rep.generator(e, false)).collect();
        let report = check_relations(&presentation_from_graph(&graph), &images, &IntegerMatrices::<i64>::new(rep.dim())).unwrap();
        prop_assert!(report.all_passed());
    }

    #[test]
    fn theta_respects_relators_on_random_tiles(seed in any::<u64>(), source in 0usize..=3) {
        let tile = random_tile_from(&mut rng(seed), source, 3);
        let graph = tree_of(&tile);
        let images: Vec<BraidWord> = (1..=graph.edges().len() as i32).map(|e| theta(&tile, &[e]).unwrap()).collect();
        let report = check_relations(&presentation_from_graph(&graph), &images, &BraidTarget { strands: graph.vertex_count().max(1) }).unwrap();
        prop_assert!(report.all_passed());
    }

    #[test]
    fn omega_gamma_is_a_symplectic_homomorphism(
        (q, g, s1, s2, m1, m2) in (1usize..=3, 1usize..=2).prop_flat_map(|(q, g)| (
            Just(q), Just(g), word(q, 5), word(q, 5),
            proptest::collection::vec(word(2 * g, 5), q), proptest::collection::vec(word(2 * g, 5), q),
        ))
    ) {
        let x = WreathElement::new(s1, m1).unwrap();
        let y = WreathElement::new(s2, m2).unwrap();
        let img = |e: &WreathElement| -> IntMatrix {
            let fs: Vec<IntMatrix> = e.mus.iter().map(|m| phi(g, m).unwrap()).collect();
            omega_gamma(&e.sigma, &fs).unwrap()
        };
        let xy = img(&x.then(&y).unwrap());
        prop_assert!(is_symplectic(&xy, &SymplecticForm::new(q * g)).unwrap());
        prop_assert_eq!(xy, &img(&x) * &img(&y));
    }

    #[test]
    fn phi1_factors_through_permutations(b in word(4, 10), seed in any::<u64>(), g in 1usize..=2) {
        let b2 = b.then(&random_pure_braid(&mut rng(seed), 4, 3, 4)).unwrap();
        prop_assert_eq!(underlying_permutation(&b), underlying_permutation(&b2));
        prop_assert_eq!(phi1::<i64>(g, &b), phi1::<i64>(g, &b2));
    }

    #[test]
    fn mirrored_pairs_lie_in_the_pullback(b in word(5, 12), c in word(5, 12)) {
        let m = mirrored_pair(&b);
        prop_assert!(MirroredPair::new(m.first().clone(), m.second().clone()).is_ok());
        let prod = m.then(&mirrored_pair(&c)).unwrap();
        prop_assert_eq!(prod, mirrored_pair(&b.then(&c).unwrap()));
    }
}

#[test]
fn phi_satisfies_braid_relations_up_to_genus_five() {
    for g in 1..=5 {
        let n = 2 * g;
        let images: Vec<IntMatrix> = (1..n).map(|i| phi(g, &BraidWord::generator(n, i).unwrap()).unwrap()).collect();
        let r = check_relations(&Presentation::braid_group(n), &images, &IntegerMatrices::<BigInt>::new(n)).unwrap();
        assert!(r.all_passed(), "genus {g}");
    }
}

#[test]
fn theta_on_powers_of_f_hits_the_standard_generators() {
    for k in 1..=4 {
        let t = TileExpr::f_power(k);
        for e in 1..2 * k {
            assert_eq!(theta(&t, &[e as i32]).unwrap(), BraidWord::generator(2 * k, e).unwrap());
        }
    }
}

#[test]
fn phi_tile_examples() {
    let t: TileExpr = "(F + F) ; P".parse().unwrap();
    assert!(phi_tile::<i64>(&t, &[]).unwrap().is_identity());
    // edges 1 and 2 meet, 1 and 3 do not
    let braid = |a: i32, b: i32| phi_tile::<i64>(&t, &[a, b, a]).unwrap() == phi_tile::<i64>(&t, &[b, a, b]).unwrap();
    assert!(braid(1, 2));
    assert_eq!(phi_tile::<i64>(&t, &[1, 3]).unwrap(), phi_tile::<i64>(&t, &[3, 1]).unwrap());
    assert!(matches!(phi_tile::<i64>(&t, &[9]), Err(HomError::EdgeOutOfRange { .. })));
}

#[test]
fn omega_gamma_examples() {
    let f = phi::<i64>(1, &BraidWord::from_signed(2, &[1, 1, -1]).unwrap()).unwrap();
    let id = Matrix::<i64>::identity(2);
    let eps = BraidWord::identity(2);
    assert_eq!(omega_gamma(&eps, &[f.clone(), id.clone()]).unwrap(), Matrix::block_diagonal(&[f, id.clone()]));
    let swap = omega_gamma(&BraidWord::generator(2, 1).unwrap(), &[id.clone(), id]).unwrap();
    assert_eq!(swap, block_swap::<i64>(2, 2, 1));
    assert!(is_symplectic(&swap, &SymplecticForm::new(2)).unwrap());
    assert!(!swap.is_identity());
}

#[test]
fn phi1_examples() {
    let w = |l: &[i32]| BraidWord::from_signed(3, l).unwrap();
    assert!(phi1::<i64>(2, &w(&[1, 1])).is_identity());
    assert_eq!(phi1::<i64>(1, &w(&[1, 2, 1])), phi1::<i64>(1, &w(&[2, 1, 2])));
}

#[test]
fn mirrored_pair_examples() {
    let s1 = BraidWord::generator(2, 1).unwrap();
    let m = mirrored_pair(&s1);
    assert_eq!(m.second(), &BraidWord::from_signed(2, &[-1]).unwrap());
    assert!(MirroredPair::new(s1.clone(), s1.pow(2)).is_err());
}

#[test]
fn discrepancy_examples() {
    let e = BraidWord::identity(2);
    let s1 = BraidWord::generator(2, 1).unwrap();
    let d = discrepancy::<BigInt>(1, &s1, &[e.clone(), e.clone()]).unwrap();
    assert!(!d.commutes);
    let d2 = discrepancy::<BigInt>(1, &s1.pow(2), &[e.clone(), e.clone()]).unwrap();
    assert!(d2.permuted_blocks.is_identity());
    assert!(!d2.twisted_cable.is_identity());
    let d3 = discrepancy::<BigInt>(1, &e, &[s1.clone(), s1.inverse()]).unwrap();
    assert!(d3.commutes);
}

/// Braids whose product forgets its second factor.
struct Broken;

impl GroupTarget for Broken {
    type Element = BraidWord;
    fn identity(&self) -> BraidWord {
        BraidWord::identity(3)
    }
    fn multiply(&self, a: &BraidWord, _b: &BraidWord) -> Result<BraidWord, HomError> {
        Ok(a.then(&BraidWord::generator(3, 1).unwrap())?)
    }
    fn inverse(&self, a: &BraidWord) -> Result<BraidWord, HomError> {
        Ok(a.inverse())
    }
    fn is_identity(&self, a: &BraidWord) -> Result<bool, HomError> {
        Ok(tilegroups::braid::is_trivial(a)?)
    }
}

#[test]
fn check_relations_controls() {
    let p = Presentation::braid_group(3);
    let swapped = vec![BraidWord::generator(3, 2).unwrap(), BraidWord::generator(3, 1).unwrap()];
    let bad = check_relations(&p, &swapped, &Broken).unwrap();
    assert!(bad.checks.iter().any(|c| c.status == CheckStatus::Fail));
    assert!(!bad.all_passed());
    // the swap itself is an automorphism, so the honest target passes
    assert!(check_relations(&p, &swapped, &BraidTarget { strands: 3 }).unwrap().all_passed());
    let empty = Presentation::new(vec!["x".into()], vec![]).unwrap();
    let r = check_relations(&empty, &[BraidWord::identity(3)], &BraidTarget { strands: 3 }).unwrap();
    assert!(r.all_passed() && r.checks.is_empty());
}
