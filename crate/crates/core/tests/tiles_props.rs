use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use tilegroups::artin::{
    abelianization, certify_nontrivial, coxeter_image, presentation_from_graph, Certificate, CoxeterSystem,
    Presentation,
};
use tilegroups::tiles::{normal_form, trees_with_atoms, tree_of, MarkedGraph, TileExpr, TileNormalForm};
use tilegroups::verify::{random_tile_from, Rng};

fn tile_from(source: usize) -> impl Strategy<Value = TileExpr> {
    (any::<u64>(), 0usize..=3).prop_map(move |(seed, layers)| {
        let mut rng = <Rng as rand::SeedableRng>::seed_from_u64(seed);
        random_tile_from(&mut rng, source, layers)
    })
}

fn tile() -> impl Strategy<Value = TileExpr> {
    (0usize..=3).prop_flat_map(tile_from)
}

fn composable() -> impl Strategy<Value = (TileExpr, TileExpr)> {
    tile().prop_flat_map(|a| {
        let t = a.target();
        (Just(a), tile_from(t))
    })
}

fn composable3() -> impl Strategy<Value = (TileExpr, TileExpr, TileExpr)> {
    composable().prop_flat_map(|(a, b)| {
        let t = b.target();
        (Just(a), Just(b), tile_from(t))
    })
}

/// Tiles with as many outputs as inputs.
fn endo(width: usize) -> impl Strategy<Value = TileExpr> {
    let pieces = ["F", "1_1", "(D + 1_1) ; P", "(1_1 + D) ; P", "F ; F", "F ; ((1_1 + D) ; P)"];
    proptest::collection::vec(0..pieces.len(), width).prop_map(move |ix| {
        ix.into_iter()
            .map(|i| pieces[i].parse::<TileExpr>().unwrap())
            .reduce(TileExpr::union)
            .unwrap_or(TileExpr::identity(0))
    })
}

fn single_tree() -> impl Strategy<Value = TileExpr> {
    (1usize..=3, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let trees = trees_with_atoms(n);
        TileNormalForm::from_roots(vec![trees[i.index(trees.len())].clone()]).to_expr()
    })
}

fn nf(t: &TileExpr) -> TileNormalForm {
    normal_form(t)
}

fn compose(a: &TileExpr, b: &TileExpr) -> TileExpr {
    TileExpr::compose(a.clone(), b.clone()).unwrap()
}

fn union(a: &TileExpr, b: &TileExpr) -> TileExpr {
    TileExpr::union(a.clone(), b.clone())
}

proptest! {
    #[test]
    fn composition_is_associative((a, b, c) in composable3()) {
        prop_assert_eq!(nf(&compose(&compose(&a, &b), &c)), nf(&compose(&a, &compose(&b, &c))));
    }

    #[test]
    fn union_is_associative_and_unital(a in tile(), b in tile(), c in tile()) {
        prop_assert_eq!(nf(&union(&union(&a, &b), &c)), nf(&union(&a, &union(&b, &c))));
        let unit = TileExpr::identity(0);
        prop_assert_eq!(nf(&union(&a, &unit)), nf(&a));
        prop_assert_eq!(nf(&union(&unit, &a)), nf(&a));
    }

    #[test]
    fn interchange((n, m, t1, t2) in (1usize..=3, 1usize..=3).prop_flat_map(|(n, m)| (Just(n), Just(m), endo(n), endo(m)))) {
        let (i_n, i_m) = (TileExpr::identity(n), TileExpr::identity(m));
        let side = nf(&union(&t1, &t2));
        prop_assert_eq!(nf(&compose(&union(&t1, &i_m), &union(&i_n, &t2))), side.clone());
        prop_assert_eq!(nf(&compose(&union(&i_n, &t2), &union(&t1, &i_m))), side);
    }

    #[test]
    fn union_is_not_symmetric_on_trees(a in single_tree(), b in single_tree()) {
        let swapped = nf(&union(&a, &b)) == nf(&union(&b, &a));
        prop_assert_eq!(swapped, nf(&a) == nf(&b));
    }

    #[test]
    fn sigma_is_functorial((a, b) in composable()) {
        let atoms_a = a.atom_count();
        for (whole, offset_b) in [(compose(&a, &b), atoms_a), (union(&a, &b), atoms_a)] {
            let big = tree_of(&whole);
            for (part, offset) in [(&a, 0), (&b, offset_b)] {
                let small = tree_of(part);
                let map = |v: usize| {
                    let x = small.vertices()[v];
                    big.find_vertex(x.origin + offset, x.slot)
                };
                for v in 0..small.vertex_count() {
                    prop_assert!(map(v).is_some());
                }
                for &(u, v) in small.edges() {
                    let (x, y) = (map(u).unwrap(), map(v).unwrap());
                    prop_assert!(big.edges().contains(&(x.min(y), x.max(y))), "edge lost in {}", whole);
                }
            }
            prop_assert_eq!(
                big.vertex_count(),
                tree_of(&a).vertex_count() + tree_of(&b).vertex_count()
            );
        }
    }

    #[test]
    fn sigma_is_a_noncrossing_forest_of_degree_at_most_three(a in tile()) {
        let g = tree_of(&a);
        prop_assert!(g.is_forest());
        prop_assert!(g.max_degree() <= 3);
        prop_assert!(g.is_noncrossing());
    }

    #[test]
    fn text_round_trip(a in tile()) {
        let back: TileExpr = a.to_string().parse().unwrap();
        prop_assert_eq!(&back, &a);
        let canon = nf(&a).to_expr();
        prop_assert_eq!(nf(&canon.to_string().parse().unwrap()), nf(&a));
    }

    #[test]
    fn consequences_of_relators_are_never_certified(a in tile(), seed in any::<u64>()) {
        let g = tree_of(&a);
        let p = presentation_from_graph(&g);
        prop_assume!(!p.relators().is_empty());
        let mut rng = <Rng as rand::SeedableRng>::seed_from_u64(seed);
        // product of conjugates of relators and their inverses
        let mut w = Vec::new();
        for _ in 0..3 {
            let r = &p.relators()[rand::Rng::gen_range(&mut rng, 0..p.relators().len())];
            let c: Vec<i32> = (0..rand::Rng::gen_range(&mut rng, 0..4))
                .map(|_| {
                    let e = rand::Rng::gen_range(&mut rng, 1..=p.generator_count() as i32);
                    if rand::Rng::gen_bool(&mut rng, 0.5) { e } else { -e }
                })
                .collect();
            w.extend(c.iter().copied());
            if rand::Rng::gen_bool(&mut rng, 0.5) {
                w.extend(r.iter().copied());
            } else {
                w.extend(r.iter().rev().map(|x| -x));
            }
            w.extend(c.iter().rev().map(|x| -x));
        }
        prop_assert_eq!(certify_nontrivial(&g, &w).unwrap(), Certificate::Inconclusive);
    }

    #[test]
    fn abelianization_matches_exponent_sums(
        n in 1usize..=3,
        rels in proptest::collection::vec(proptest::collection::vec((1i32..=3, any::<bool>()), 0..6), 0..4),
    ) {
        let relators: Vec<Vec<i32>> = rels
            .iter()
            .map(|r| r.iter().filter(|(g, _)| *g as usize <= n).map(|&(g, s)| if s { g } else { -g }).collect())
            .collect();
        let p = Presentation::new((1..=n).map(|i| format!("x{i}")).collect(), relators.clone()).unwrap();
        let a = abelianization(&p);
        // brute force: rank and gcd of maximal nonzero minors of the exponent-sum matrix
        let rows: Vec<Vec<i64>> = relators
            .iter()
            .map(|r| (1..=n as i32).map(|g| r.iter().map(|&l| if l == g { 1 } else if l == -g { -1 } else { 0 }).sum()).collect())
            .collect();
        let (rank, divisor) = minors(&rows, n);
        prop_assert_eq!(a.free_rank, n - rank);
        let torsion: BigInt = a.torsion.iter().fold(BigInt::one(), |acc, d| acc * d);
        prop_assert_eq!(torsion, BigInt::from(divisor));
    }
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Largest `k` with a nonzero `k x k` minor, and the gcd of those minors.
fn minors(rows: &[Vec<i64>], cols: usize) -> (usize, i64) {
    for k in (1..=rows.len().min(cols)).rev() {
        let mut g = 0i64;
        for rs in subsets(rows.len(), k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c]).collect()).collect();
                g = num_integer::gcd(g, det(&sub));
            }
        }
        if g != 0 {
            return (k, g.abs());
        }
    }
    (0, 1)
}

#[test]
fn coxeter_generators_are_reflections_and_relators_hold() {
    let mut seen = std::collections::HashSet::new();
    for f in tilegroups::tiles::forests_up_to(5) {
        let g = tree_of(&f.to_expr());
        if !seen.insert(g.edges().to_vec()) {
            continue;
        }
        let sys = CoxeterSystem::from_graph(&g);
        for s in 0..sys.rank() {
            let r = sys.reflection(s);
            assert!((&r * &r).is_identity());
            assert!((r.determinant().unwrap() + num_rational::BigRational::one()).is_zero());
        }
        for rel in presentation_from_graph(&g).relators() {
            assert!(coxeter_image(&sys, rel).unwrap().is_identity());
        }
    }
}

#[test]
fn disjoint_edges_abelianize_to_rank_two() {
    let g = MarkedGraph::from_edges(4, &[(0, 1), (2, 3)]);
    let a = abelianization(&presentation_from_graph(&g));
    assert_eq!(a.free_rank, 2);
    assert!(a.torsion.iter().all(|d| d.is_positive()));
}
