//! Library results checked against independent brute-force oracles.

mod common;

use std::collections::BTreeMap;

use common::*;
use semilex::exec::Exec;
use semilex::iterated::box_points;
use semilex::order::check_b_axioms_with;
use semilex::semigroup::check_associative_with;
use semilex::*;

#[test]
fn two_element_z2_table_is_associative() {
    // s0*s0 = s1, s0*s1 = s0, s1*s0 = s0, s1*s1 = s1
    let t: Table = vec![vec![1, 0], vec![0, 1]];
    assert_eq!(oracle_first_assoc_violation(&t), None);
    assert!(check_associative(&make("s", t)).is_pass());
}

#[test]
fn associativity_matches_oracle_on_every_small_table() {
    for n in 1..=3usize {
        let cells = n * n;
        for code in 0..n.pow(cells as u32) {
            let mut c = code;
            let t: Table = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let v = c % n;
                            c /= n;
                            v
                        })
                        .collect()
                })
                .collect();
            let s = make("x", t.clone());
            let expect = oracle_first_assoc_violation(&t);
            for exec in [Exec::Sequential, Exec::Parallel] {
                let got = check_associative_with(&s, exec);
                assert_eq!(got.violation().map(|v| v.triple), expect, "{t:?}");
            }
            assert_eq!(check_abelian(&s).is_pass(), oracle_commutative(&t));
            let ids = oracle_identities(&t);
            assert!(ids.len() <= 1);
            assert_eq!(
                find_identity(&s).unwrap().map(|e| e.index),
                ids.first().copied()
            );
            let zs = oracle_zeros(&t);
            assert!(zs.len() <= 1);
            assert_eq!(find_zero(&s).unwrap().map(|e| e.index), zs.first().copied());
            assert_eq!(
                check_b_axioms_with(&s, Exec::Sequential).is_pass(),
                oracle_b_axioms(&t),
                "{t:?}"
            );
        }
    }
}

#[test]
fn every_order_on_up_to_six_elements_round_trips() {
    for n in 1..=6 {
        for ranks in all_permutations(n) {
            let order = TotalOrder::from_ranks(labels("e", n), ranks.clone()).unwrap();
            let min = min_semigroup(&order);
            assert_eq!(min.rows(), oracle_min_table(&ranks));
            assert!(check_b_axioms(&min).is_pass());
            assert_eq!(order_from_semigroup(&min).unwrap(), order);
            let max = max_semigroup(&order);
            assert!(check_b_axioms(&max).is_pass());
            assert_eq!(order_from_semigroup(&max).unwrap(), order.reverse());
            assert_eq!(max, min_semigroup(&order.reverse()));
        }
    }
}

#[test]
fn only_the_reversing_bijection_carries_min_chain_to_max_chain() {
    let chain = TotalOrder::from_ranked_labels(labels("s", 3)).unwrap();
    let min = min_semigroup(&chain);
    let max = max_semigroup(&chain);
    for perm in all_permutations(3) {
        let map: BTreeMap<String, String> = (0..3)
            .map(|i| (format!("s{i}"), format!("s{}", perm[i])))
            .collect();
        // Oracle: f(min(a,b)) == max(f(a), f(b)) for all a, b.
        let expect = (0..3).all(|a: usize| (0..3).all(|b: usize| perm[a.min(b)] == perm[a].max(perm[b])));
        assert_eq!(equal_under_relabeling(&min, &max, &map).unwrap(), expect);
        assert_eq!(expect, perm == vec![2, 1, 0]);
    }
}

#[test]
fn lex_compare_agrees_with_vec_ordering() {
    let pts = box_points(3, -2, 2);
    for a in &pts {
        for b in &pts {
            let x = IntTuple::signed(a.clone()).unwrap();
            let y = IntTuple::signed(b.clone()).unwrap();
            assert_eq!(lex_compare(&x, &y).unwrap(), a.cmp(b));
        }
    }
}

#[test]
fn tn_tables_match_the_vec_ordering_oracle() {
    for (n, b) in [(1, 8), (2, 4), (3, 3)] {
        let t = build_tn(n, b, CarrierLimit::default()).unwrap();
        let g = t.underlying();
        for x in 0..g.len() {
            for y in 0..g.len() {
                let (i, j) = (t.tuple(x).coords(), t.tuple(y).coords());
                let want = if lex_less_eq(i, j) { i } else { j };
                assert_eq!(t.tuple(g.product(x, y)).coords(), want);
            }
        }
    }
}

#[test]
fn vn_tables_match_the_vec_ordering_oracle() {
    for (n, b) in [(1, 4), (2, 2), (3, 1)] {
        let v = build_vn(n, b, CarrierLimit::default()).unwrap();
        let g = v.underlying();
        assert_eq!(g.len(), (2 * b + 1).pow(n as u32));
        for x in 0..g.len() {
            for y in 0..g.len() {
                let (i, j) = (v.tuple(x).coords(), v.tuple(y).coords());
                let want = if lex_less_eq(i, j) { i } else { j };
                assert_eq!(v.tuple(g.product(x, y)).coords(), want);
            }
        }
    }
}

#[test]
fn lex_min_grid_induces_lex_order() {
    // On {0,1,2}^2 the order read off the lex_min table agrees with
    // lex_compare.
    let s = direct_lex_semigroup(2, 0, 2, CarrierLimit::default()).unwrap();
    let order = order_from_semigroup(s.underlying()).unwrap();
    for a in 0..9 {
        for b in 0..9 {
            let lex = lex_compare(s.tuple(a), s.tuple(b)).unwrap();
            assert_eq!(order.le(a, b), lex.is_le());
        }
    }
}

#[test]
fn replacement_of_chains_gives_lex_pairs() {
    for b in 2..=4usize {
        let base = TotalOrder::from_ranked_labels((0..b).map(|i| format!("s{i}")).collect()).unwrap();
        let parts = (0..b)
            .map(|i| {
                TotalOrder::from_ranked_labels(
                    (0..b).map(|j| index_label(&[i as i64, j as i64])).collect(),
                )
                .unwrap()
            })
            .collect();
        let out = replace_elements(&OrderedFamily::new(base, parts).unwrap());
        assert_eq!(out.len(), b * b);
        for x in 0..out.len() {
            for y in 0..out.len() {
                let i = parse_index_label(&out.labels()[x]).unwrap();
                let j = parse_index_label(&out.labels()[y]).unwrap();
                assert_eq!(out.le(x, y), i <= j);
            }
        }
    }
}

fn chain_of(labels: Vec<String>, ranks: Vec<usize>) -> TotalOrder {
    TotalOrder::from_ranks(labels, ranks).unwrap()
}

#[test]
fn replacement_in_two_stages_equals_composed_replacement() {
    let mut r = rng(11);
    for _ in 0..50 {
        // Three levels: base B, blocks P_s, sub-blocks Q_p. At most 24 points.
        let nb = 1 + rand::Rng::gen_range(&mut r, 0..3);
        let base = chain_of(labels("b", nb), random_ranks(&mut r, nb));
        let mut parts = Vec::new();
        let mut sub = Vec::new();
        for s in 0..nb {
            let np = 1 + rand::Rng::gen_range(&mut r, 0..3);
            parts.push(chain_of(
                (0..np).map(|p| format!("p{s}.{p}")).collect(),
                random_ranks(&mut r, np),
            ));
            let mut q_for_s = Vec::new();
            for p in 0..np {
                let nq = 1 + rand::Rng::gen_range(&mut r, 0..2);
                q_for_s.push(chain_of(
                    (0..nq).map(|q| format!("q{s}.{p}.{q}")).collect(),
                    random_ranks(&mut r, nq),
                ));
            }
            sub.push(q_for_s);
        }

        // Stage-wise: B with P, then the result with Q.
        let mid = replace_elements(&OrderedFamily::new(base.clone(), parts.clone()).unwrap());
        let q_by_label: BTreeMap<String, TotalOrder> = parts
            .iter()
            .zip(&sub)
            .flat_map(|(p, qs)| p.labels().iter().cloned().zip(qs.iter().cloned()))
            .collect();
        let mid_parts = mid.labels().iter().map(|l| q_by_label[l].clone()).collect();
        let staged = replace_elements(&OrderedFamily::new(mid, mid_parts).unwrap());

        // Composed: B with (P_s with Q).
        let inner = parts
            .iter()
            .zip(&sub)
            .map(|(p, qs)| replace_elements(&OrderedFamily::new(p.clone(), qs.clone()).unwrap()))
            .collect();
        let composed = replace_elements(&OrderedFamily::new(base, inner).unwrap());

        assert!(staged.len() <= 24);
        assert_eq!(staged, composed);
        assert!(check_total_order(staged.labels(), &staged.pairs())
            .unwrap()
            .is_pass());
    }
}

#[test]
fn monomial_checker_agrees_with_direct_recheck() {
    let mut r = rng(5);
    for _ in 0..200 {
        let n = rand::Rng::gen_range(&mut r, 1..=4);
        let mut gen = || -> Vec<i64> { (0..n).map(|_| rand::Rng::gen_range(&mut r, 0..=10)).collect() };
        let (a, b, c) = (gen(), gen(), gen());
        // direct re-check with Vec ordering
        let ac: Vec<i64> = a.iter().zip(&c).map(|(x, y)| x + y).collect();
        let bc: Vec<i64> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
        if a <= b {
            assert!(ac <= bc);
        } else {
            assert!(bc <= ac);
        }
        let u = |v: &Vec<i64>| IntTuple::unsigned(v.clone()).unwrap();
        let report = check_monomial_order_sample(n, &[(u(&a), u(&b), u(&c))], &[u(&a), u(&b), u(&c)]).unwrap();
        assert!(report.is_pass());
        let sum = tuple_add(&u(&a), &u(&c)).unwrap();
        assert_eq!(sum.coords(), ac.as_slice());
    }
}
