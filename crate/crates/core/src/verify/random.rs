//! Randomized property checks beyond the fixed acceptance suite.

use rand::Rng as _;

use super::gen::{random_braid, random_tile_from, rng};
use super::{Outcome, SuiteConfig, VerificationReport};
use crate::artin::presentation_from_graph;
use crate::braid::{artin_action, handle_reduce, underlying_permutation, WreathElement};
use crate::homs::{
    chain_classes, check_relations, gram_matrix, omega_gamma, phi, EdgeTransvectionRep, IntegerMatrices,
};
use crate::linalg::{is_symplectic, Matrix, SymplecticForm};
use crate::tiles::{forests_up_to, normal_form, tree_of, TileExpr};
use crate::{IntMatrix, Integer};

const SAMPLES: usize = 200;

pub fn random_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut r = VerificationReport::new("random");
    r.run("oracle-agreement", true, || oracle_agreement(cfg));
    r.run("permutation-homomorphism", true, || permutation_homomorphism(cfg));
    r.run("phi-symplectic", true, || phi_symplectic(cfg));
    r.run("phi-chain-compatibility", true, || chain_compatibility(cfg));
    r.run("phitile-sign-assignments", true, || phitile_signs(cfg));
    r.run("omega-gamma-homomorphism", true, || omega_gamma_hom(cfg));
    r.run("tile-associativity", true, || tile_associativity(cfg));
    r
}

fn oracle_agreement(cfg: &SuiteConfig) -> Outcome {
    let mut g = rng(cfg.seed, 101);
    for _ in 0..SAMPLES {
        let n = g.gen_range(2..=6);
        let w = random_braid(&mut g, n, cfg.max_len);
        // a word times its own inverse in scrambled form exercises the trivial side
        let w = if g.gen_bool(0.5) { w.then(&w.inverse()).expect("same strands") } else { w };
        if artin_action(&w).is_identity() != handle_reduce(&w.signed_letters()).is_empty() {
            return Outcome::fail(format!("disagreement on {w}"));
        }
    }
    Outcome::pass(format!("{SAMPLES} words on 2..=6 strands"))
}

fn permutation_homomorphism(cfg: &SuiteConfig) -> Outcome {
    let mut g = rng(cfg.seed, 102);
    for _ in 0..SAMPLES {
        let n = g.gen_range(2..=6);
        let a = random_braid(&mut g, n, cfg.max_len);
        let b = random_braid(&mut g, n, cfg.max_len);
        let ab = a.then(&b).expect("same strands");
        if underlying_permutation(&ab) != underlying_permutation(&a).then(&underlying_permutation(&b)) {
            return Outcome::fail(format!("π not multiplicative on {a}, {b}"));
        }
        if artin_action(&ab) != artin_action(&a).then(&artin_action(&b)) {
            return Outcome::fail(format!("free group action not multiplicative on {a}, {b}"));
        }
    }
    Outcome::pass(format!("{SAMPLES} pairs"))
}

fn phi_symplectic(cfg: &SuiteConfig) -> Outcome {
    let mut g = rng(cfg.seed, 103);
    for _ in 0..SAMPLES / 4 {
        let genus = g.gen_range(1..=cfg.genus.max(1));
        let w = random_braid(&mut g, 2 * genus, cfg.max_len);
        let m: IntMatrix = phi(genus, &w).expect("strands match");
        if is_symplectic(&m, &SymplecticForm::new(genus)) != Ok(true) {
            return Outcome::fail(format!("phi({w}) is not symplectic"));
        }
    }
    Outcome::pass(format!("{} words, genus ≤ {}", SAMPLES / 4, cfg.genus.max(1)))
}

fn chain_compatibility(cfg: &SuiteConfig) -> Outcome {
    let mut g = rng(cfg.seed, 104);
    for _ in 0..SAMPLES / 4 {
        let genus = g.gen_range(1..=cfg.genus.max(1));
        let chain = chain_classes::<Integer>(genus);
        let graph = tree_of(&TileExpr::f_power(genus));
        let rep = match EdgeTransvectionRep::from_pairing(&graph, gram_matrix(&chain)) {
            Ok(r) => r,
            Err(e) => return Outcome::fail(e.to_string()),
        };
        let mut c = Matrix::zeros(2 * genus, chain.len());
        for (j, cl) in chain.iter().enumerate() {
            for i in 0..2 * genus {
                c[(i, j)] = cl.coords()[i].clone();
            }
        }
        let w = random_braid(&mut g, 2 * genus, cfg.max_len);
        let lhs = &phi::<Integer>(genus, &w).expect("strands match") * &c;
        let rhs = &c * &rep.image(&w.signed_letters()).expect("edges match");
        if lhs != rhs {
            return Outcome::fail(format!("genus {genus}, word {w}"));
        }
    }
    Outcome::pass(format!("{} words", SAMPLES / 4))
}

/// Exhaustive sign assignments for up to 6 meeting pairs, sampled beyond.
fn phitile_signs(cfg: &SuiteConfig) -> Outcome {
    let mut g = rng(cfg.seed, 105);
    let mut seen = std::collections::HashSet::new();
    let mut runs = 0;
    for nf in forests_up_to(5) {
        let graph = tree_of(&nf.to_expr());
        if !seen.insert((graph.vertex_count(), graph.edges().to_vec())) || graph.edges().is_empty() {
            continue;
        }
        let pairs = EdgeTransvectionRep::<Integer>::meeting_pairs(&graph);
        let assignments: Vec<Vec<bool>> = if pairs <= 6 {
            (0..1u32 << pairs).map(|m| (0..pairs).map(|b| m >> b & 1 == 1).collect()).collect()
        } else {
            (0..64).map(|_| (0..pairs).map(|_| g.gen_bool(0.5)).collect()).collect()
        };
        let p = presentation_from_graph(&graph);
        for signs in assignments {
            let rep = EdgeTransvectionRep::<Integer>::with_signs(&graph, &signs).expect("enough signs");
            let images: Vec<IntMatrix> = (0..rep.dim()).map(|e| rep.generator(e, false)).collect();
            match check_relations(&p, &images, &IntegerMatrices::<Integer>::new(rep.dim())) {
                Ok(r) if r.all_passed() => runs += 1,
                Ok(_) => return Outcome::fail(format!("graph {:?}, signs {signs:?}", graph.labelled_edges())),
                Err(e) => return Outcome::fail(e.to_string()),
            }
        }
    }
    Outcome::pass(format!("{} graphs, {runs} sign assignments", seen.len()))
}

fn omega_gamma_hom(cfg: &SuiteConfig) -> Outcome {
    let mut g = rng(cfg.seed, 106);
    let len = cfg.max_len.min(8);
    for _ in 0..SAMPLES / 4 {
        let q = g.gen_range(1..=3);
        let genus = g.gen_range(1..=2);
        let mut elt = || {
            let sigma = random_braid(&mut g, q, len);
            let mus = (0..q).map(|_| random_braid(&mut g, 2 * genus, len)).collect();
            WreathElement::new(sigma, mus).expect("arities")
        };
        let (x, y) = (elt(), elt());
        let img = |e: &WreathElement| -> IntMatrix {
            let fs: Vec<IntMatrix> = e.mus.iter().map(|m| phi(genus, m).expect("strands")).collect();
            omega_gamma(&e.sigma, &fs).expect("arities")
        };
        let xy = img(&x.then(&y).expect("arities"));
        if xy != &img(&x) * &img(&y) {
            return Outcome::fail(format!("q={q}, genus {genus}: {} ; {}", x.sigma, y.sigma));
        }
        if is_symplectic(&xy, &SymplecticForm::new(q * genus)) != Ok(true) {
            return Outcome::fail("image is not symplectic");
        }
    }
    Outcome::pass(format!("{} pairs", SAMPLES / 4))
}

fn tile_associativity(cfg: &SuiteConfig) -> Outcome {
    let mut g = rng(cfg.seed, 107);
    for _ in 0..SAMPLES / 2 {
        let s = g.gen_range(0..=3);
        let a = random_tile_from(&mut g, s, 2);
        let b = random_tile_from(&mut g, a.target(), 2);
        let c = random_tile_from(&mut g, b.target(), 2);
        let left = TileExpr::compose(TileExpr::compose(a.clone(), b.clone()).expect("arity"), c.clone()).expect("arity");
        let right = TileExpr::compose(a.clone(), TileExpr::compose(b.clone(), c.clone()).expect("arity")).expect("arity");
        let u1 = TileExpr::union(TileExpr::union(a.clone(), b.clone()), c.clone());
        let u2 = TileExpr::union(a, TileExpr::union(b, c));
        if normal_form(&left) != normal_form(&right) || normal_form(&u1) != normal_form(&u2) {
            return Outcome::fail(format!("associativity fails for {left}"));
        }
        let back: TileExpr = match normal_form(&left).to_expr().to_string().parse() {
            Ok(t) => t,
            Err(e) => return Outcome::fail(format!("{e}")),
        };
        if normal_form(&back) != normal_form(&left) {
            return Outcome::fail(format!("printing loses information for {left}"));
        }
    }
    Outcome::pass(format!("{} triples; normal forms round-trip through text", SAMPLES / 2))
}
