//! The fixed acceptance suite.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::gen::{random_braid, random_pure_braid, random_tile_from, rng};
use super::{Outcome, SuiteConfig, VerificationReport};
use crate::artin::{abelianization, certify_nontrivial, Certificate, Presentation};
use crate::braid::{
    artin_action_bounded, equal, handle_reduce, is_trivial, underlying_permutation, BraidWord,
    WreathElement,
};
use crate::homs::{
    chain_classes, check_relations, discrepancy, gram_matrix, mirrored_pair, phi, phi1, theta, theta_images,
    BraidTarget, IntegerMatrices, MirroredPair,
};
use crate::linalg::{is_symplectic, SymplecticForm};
use crate::tiles::{endo_group, forests_up_to, normal_form, star_tile, tree_of, Atom, MarkedGraph, TileExpr};
use crate::{IntMatrix, Integer};

/// Free-group image size beyond which the oracle gives up.
const ORACLE_LIMIT: usize = 5_000_000;

/// Runs every acceptance check in declaration order.
pub fn paper_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut r = VerificationReport::new("paper");
    r.run("word-problem-oracle", true, || word_problem_oracle(cfg));
    r.run("star-tree-relations", true, star_tree_relations);
    r.run("theta-well-defined", true, theta_well_defined);
    r.run("star-commutator-theta-trivial", true, star_commutator_theta);
    r.run("star-commutator-coxeter-nontrivial", false, star_commutator_coxeter);
    r.run("phi-relations", true, || phi_relations(cfg.genus.max(2)));
    r.run("chain-pairing", true, chain_pairing);
    r.run("cabling-homomorphism", true, || cabling_homomorphism(cfg));
    r.run("discrepancy-witness", true, discrepancy_witness);
    r.run("tile-algebra", true, || tile_algebra(cfg));
    r.run("abelianizations", true, abelianizations);
    r.run("phi1-and-mirror", true, || phi1_and_mirror(cfg));
    r
}

fn words(strands: usize, len: usize) -> Vec<Vec<i32>> {
    let alphabet: Vec<i32> = (1..strands as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<i32>| {
                alphabet.iter().map(move |&a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// `None` when the oracle runs out of budget.
fn oracle_agrees(w: &BraidWord) -> Option<bool> {
    let oracle = artin_action_bounded(w, ORACLE_LIMIT)?.is_identity();
    Some(oracle == handle_reduce(&w.signed_letters()).is_empty())
}

fn word_problem_oracle(cfg: &SuiteConfig) -> Outcome {
    let mut checked = 0;
    let mut trivial = 0;
    let mut skipped = 0;
    let mut bad = Vec::new();
    let mut sample = |w: BraidWord| {
        checked += 1;
        match oracle_agrees(&w) {
            Some(true) => trivial += usize::from(handle_reduce(&w.signed_letters()).is_empty()),
            Some(false) => bad.push(w.to_string()),
            None => skipped += 1,
        }
    };
    for w in words(3, 8) {
        sample(BraidWord::from_signed(3, &w).expect("in range"));
    }
    let mut g = rng(cfg.seed, 1);
    for _ in 0..1000 {
        sample(random_braid(&mut g, 5, cfg.max_len));
    }
    let details = format!("{checked} words, {trivial} trivial, {} disagreements, {skipped} over budget", bad.len());
    if !bad.is_empty() {
        Outcome::fail(format!("{details}; first: {}", bad[0]))
    } else if skipped > 0 {
        Outcome::inconclusive(details)
    } else {
        Outcome::pass(details)
    }
}

fn star_tree_relations() -> Outcome {
    let b = |l: &[i32]| BraidWord::from_signed(5, l).expect("in range");
    let tau = b(&[3, 2, -3]);
    let s3 = b(&[3]);
    let lhs = tau.then(&s3).and_then(|x| x.then(&tau));
    let rhs = s3.then(&tau).and_then(|x| x.then(&s3));
    let displayed = match (lhs, rhs) {
        (Ok(l), Ok(r)) => equal(&l, &r),
        _ => return Outcome::fail("composition failed"),
    };
    if displayed != Ok(true) {
        return Outcome::fail(format!("τσ3τ = σ3τσ3 gave {displayed:?}"));
    }
    let graph = tree_of(&star_tile());
    let p = endo_group(&star_tile());
    match check_relations(&p, &theta_images(&graph), &BraidTarget { strands: 5 }) {
        Ok(rep) if rep.all_passed() => Outcome::pass(format!(
            "τσ3τ = σ3τσ3; {} relators of the star tree map to trivial braids",
            rep.summary.total
        )),
        Ok(rep) => Outcome::fail(format!("{} relator images nontrivial", rep.summary.failed)),
        Err(e) => Outcome::fail(e.to_string()),
    }
}

/// Tiles with at most `atoms` atoms, one per distinct labelled graph.
fn distinct_graphs(atoms: usize) -> Vec<MarkedGraph> {
    let mut seen = HashSet::new();
    forests_up_to(atoms)
        .into_iter()
        .map(|nf| tree_of(&nf.to_expr()))
        .filter(|g| seen.insert((g.vertex_count(), g.edges().to_vec())))
        .collect()
}

fn theta_well_defined() -> Outcome {
    let tiles = forests_up_to(5).len();
    let mut relators = 0;
    let mut failures = Vec::new();
    let graphs = distinct_graphs(5);
    for g in &graphs {
        let p = crate::artin::presentation_from_graph(g);
        match check_relations(&p, &theta_images(g), &BraidTarget { strands: g.vertex_count().max(1) }) {
            Ok(rep) => {
                relators += rep.summary.total;
                if !rep.all_passed() {
                    failures.push(format!("{:?}", g.labelled_edges()));
                }
            }
            Err(e) => failures.push(e.to_string()),
        }
    }
    Outcome::from_bool(
        failures.is_empty(),
        format!(
            "{tiles} tiles, {} distinct graphs, {relators} relators, {} failures{}",
            graphs.len(),
            failures.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

/// `[g3^-1 g2 g3, g4]` on the star tree.
pub(crate) const STAR_COMMUTATOR: [i32; 8] = [-3, 2, 3, 4, -3, -2, 3, -4];

fn star_commutator_theta() -> Outcome {
    match theta(&star_tile(), &STAR_COMMUTATOR).map(|b| is_trivial(&b)) {
        Ok(Ok(true)) => Outcome::pass("image in β5 is trivial"),
        Ok(Ok(false)) => Outcome::fail("image in β5 is nontrivial"),
        Ok(Err(e)) => Outcome::fail(e.to_string()),
        Err(e) => Outcome::fail(e.to_string()),
    }
}

fn star_commutator_coxeter() -> Outcome {
    match certify_nontrivial(&tree_of(&star_tile()), &STAR_COMMUTATOR) {
        Ok(Certificate::Nontrivial) => Outcome::pass("Tits image is not the identity: nontrivial in the Artin group"),
        Ok(Certificate::Inconclusive) => Outcome::inconclusive("Tits image is the identity"),
        Err(e) => Outcome::fail(e.to_string()),
    }
}

fn phi_relations(max_genus: usize) -> Outcome {
    let mut relators = 0;
    for g in 2..=max_genus {
        let p = Presentation::braid_group(2 * g);
        let images: Vec<IntMatrix> = (1..2 * g)
            .map(|i| phi(g, &BraidWord::generator(2 * g, i).expect("in range")).expect("strands match"))
            .collect();
        let form = SymplecticForm::new(g);
        if !images.iter().all(|m| is_symplectic(m, &form) == Ok(true)) {
            return Outcome::fail(format!("a generator image is not symplectic at genus {g}"));
        }
        match check_relations(&p, &images, &IntegerMatrices::<BigInt>::new(2 * g)) {
            Ok(rep) if rep.all_passed() => relators += rep.summary.total,
            Ok(rep) => return Outcome::fail(format!("genus {g}: {} relators fail", rep.summary.failed)),
            Err(e) => return Outcome::fail(e.to_string()),
        }
    }
    Outcome::pass(format!("genus 2..={max_genus}: {relators} relators map to the identity"))
}

fn chain_pairing() -> Outcome {
    for g in 1..=6 {
        let m = gram_matrix(&chain_classes::<Integer>(g));
        let n = m.rows();
        for i in 0..n {
            for j in 0..n {
                let v = &m[(i, j)];
                let ok = if i.abs_diff(j) == 1 { v.abs().is_one() } else { v.is_zero() };
                if !ok {
                    return Outcome::fail(format!("genus {g}: entry ({}, {}) = {v}", i + 1, j + 1));
                }
            }
        }
    }
    Outcome::pass("genus 1..=6: tridiagonal with ±1 off the diagonal")
}

fn random_wreath(g: &mut super::Rng, q: usize, k: usize, max_len: usize) -> WreathElement {
    let sigma = random_braid(g, q, max_len);
    let mus = (0..q).map(|_| random_braid(g, k, max_len)).collect();
    WreathElement::new(sigma, mus).expect("consistent arities")
}

fn cabling_homomorphism(cfg: &SuiteConfig) -> Outcome {
    let mut g = rng(cfg.seed, 7);
    let len = cfg.max_len.min(6);
    for n in 0..200 {
        let q = 1 + n % 3;
        let k = 1 + (n / 3) % 2;
        let x = random_wreath(&mut g, q, k, len);
        let y = random_wreath(&mut g, q, k, len);
        let ok = (|| -> Result<bool, crate::braid::BraidError> {
            let lhs = x.then(&y)?.cable()?;
            let rhs = x.cable()?.then(&y.cable()?)?;
            equal(&lhs, &rhs)
        })();
        match ok {
            Ok(true) => {}
            Ok(false) => return Outcome::fail(format!("pair {n} (q={q}, k={k}): {} ; {}", x.sigma, y.sigma)),
            Err(e) => return Outcome::fail(e.to_string()),
        }
    }
    Outcome::pass("200 pairs with q ≤ 3, k ≤ 2")
}

fn discrepancy_witness() -> Outcome {
    let mus: Vec<BraidWord> = words(2, 2)
        .iter()
        .map(|w| BraidWord::from_signed(2, w).expect("in range"))
        .collect();
    let mut witness = None;
    let mut unequal = 0;
    let mut total = 0;
    for sigma in [[1].as_slice(), &[1, 1]] {
        let sigma = BraidWord::from_signed(2, sigma).expect("in range");
        for a in &mus {
            for b in &mus {
                let d = match discrepancy::<Integer>(1, &sigma, &[a.clone(), b.clone()]) {
                    Ok(d) => d,
                    Err(e) => return Outcome::fail(e.to_string()),
                };
                total += 1;
                if !d.commutes {
                    unequal += 1;
                    witness.get_or_insert_with(|| format!("σ = {sigma}, μ = ({a}, {b})"));
                }
            }
        }
    }
    let identity = BraidWord::identity(2);
    for a in &mus {
        for b in &mus {
            match discrepancy::<Integer>(1, &identity, &[a.clone(), b.clone()]) {
                Ok(d) if d.commutes => {}
                Ok(_) => return Outcome::fail(format!("σ = ε, μ = ({a}, {b}) differs")),
                Err(e) => return Outcome::fail(e.to_string()),
            }
        }
    }
    match witness {
        Some(w) => Outcome::pass(format!(
            "{unequal}/{total} inputs differ, first {w}; all {} inputs with σ = ε agree",
            mus.len() * mus.len()
        )),
        None => Outcome::fail(format!("no difference among {total} inputs")),
    }
}

fn tile_algebra(cfg: &SuiteConfig) -> Outcome {
    let mut g = rng(cfg.seed, 9);
    for n in 0..100 {
        let (s1, s2) = (rand::Rng::gen_range(&mut g, 0..=3), rand::Rng::gen_range(&mut g, 0..=3));
        let a = random_tile_from(&mut g, s1, 2);
        let c = random_tile_from(&mut g, s2, 2);
        let b = random_tile_from(&mut g, a.target(), 2);
        let d = random_tile_from(&mut g, c.target(), 2);
        let lhs = TileExpr::union(
            TileExpr::compose(a.clone(), b.clone()).expect("arity"),
            TileExpr::compose(c.clone(), d.clone()).expect("arity"),
        );
        let rhs = TileExpr::compose(TileExpr::union(a, c), TileExpr::union(b, d)).expect("arity");
        if normal_form(&lhs) != normal_form(&rhs) {
            return Outcome::fail(format!("interchange fails for pair {n}: {lhs} vs {rhs}"));
        }
    }
    let fp = TileExpr::union(TileExpr::atom(Atom::F), TileExpr::atom(Atom::P));
    let pf = TileExpr::union(TileExpr::atom(Atom::P), TileExpr::atom(Atom::F));
    if normal_form(&fp) == normal_form(&pf) {
        return Outcome::fail("F + P and P + F have equal normal forms");
    }
    for k in 1..=4 {
        let p = endo_group(&TileExpr::f_power(k));
        let std = Presentation::braid_group(2 * k);
        let sorted = |p: &Presentation| {
            let mut v = p.relators().to_vec();
            v.sort();
            v
        };
        if p.generator_count() != 2 * k - 1 || sorted(&p) != sorted(&std) {
            return Outcome::fail(format!("endomorphisms of F^{k} differ from the braid presentation"));
        }
    }
    Outcome::pass("interchange on 100 pairs; F + P ≠ P + F; F^k gives β_2k for k ≤ 4")
}

fn abelianizations() -> Outcome {
    for k in 3..=8 {
        let a = abelianization(&Presentation::braid_group(k));
        if a.free_rank != 1 || !a.torsion.is_empty() {
            return Outcome::fail(format!("β_{k} abelianizes to {a}"));
        }
    }
    let mut connected = 0;
    for g in distinct_graphs(5) {
        if g.edges().is_empty() || g.components().iter().filter(|c| c.len() > 1).count() != 1 {
            continue;
        }
        connected += 1;
        let a = abelianization(&crate::artin::presentation_from_graph(&g));
        if a.free_rank != 1 || !a.torsion.is_empty() {
            return Outcome::fail(format!("graph {:?} abelianizes to {a}", g.labelled_edges()));
        }
    }
    let disjoint = MarkedGraph::from_edges(4, &[(0, 1), (2, 3)]);
    let a = abelianization(&crate::artin::presentation_from_graph(&disjoint));
    Outcome::from_bool(
        a.free_rank == 2 && a.torsion.is_empty(),
        format!("β_3..β_8 → Z; {connected} connected graphs → Z; two disjoint edges → {a}"),
    )
}

fn phi1_and_mirror(cfg: &SuiteConfig) -> Outcome {
    let mut g = rng(cfg.seed, 11);
    let genus = 1;
    for n in 0..100 {
        let k = 2 + n % 4;
        let b = random_braid(&mut g, k, cfg.max_len);
        let p = random_pure_braid(&mut g, k, 3, 4);
        let b2 = b.then(&p).expect("same strands");
        if underlying_permutation(&b) != underlying_permutation(&b2) {
            return Outcome::fail("pure factor changed the permutation");
        }
        if phi1::<Integer>(genus, &b) != phi1::<Integer>(genus, &b2) {
            return Outcome::fail(format!("phi1 differs on {b} and {b2}"));
        }
        let m = mirrored_pair(&b);
        if MirroredPair::new(m.first().clone(), m.second().clone()).is_err() {
            return Outcome::fail(format!("mirrored pair of {b} leaves the pullback"));
        }
        let c = random_braid(&mut g, k, cfg.max_len);
        let prod = match mirrored_pair(&b).then(&mirrored_pair(&c)) {
            Ok(x) => x,
            Err(e) => return Outcome::fail(e.to_string()),
        };
        let whole = mirrored_pair(&b.then(&c).expect("same strands"));
        let same = equal(prod.first(), whole.first()).and_then(|x| Ok(x && equal(prod.second(), whole.second())?));
        match same {
            Ok(true) => {}
            Ok(false) => return Outcome::fail(format!("mirroring is not multiplicative on {b}, {c}")),
            Err(e) => return Outcome::fail(e.to_string()),
        }
    }
    // spot checks
    let s = |l: &[i32]| BraidWord::from_signed(3, l).expect("in range");
    let ok = phi1::<Integer>(1, &s(&[1, 1])).is_identity() && phi1::<Integer>(1, &s(&[1, 2, 1])) == phi1(1, &s(&[2, 1, 2]));
    Outcome::from_bool(ok, "100 pairs with equal permutations; 100 mirrored pairs in the pullback and multiplicative")
}
