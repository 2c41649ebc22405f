//! Acceptance suite: one line per criterion, nonzero exit if any gating
//! criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use tamari::bijection::beta;
use tamari::catalan::{
    dec_forest_of_tree, dyck_from_tree, enumerate_trees, inc_forest_of_tree, tree_from_dec_forest,
    tree_from_dyck, tree_from_inc_forest, RotationOracle,
};
use tamari::flows::{
    enumerate_closed_flows, exit_rate, flow_stats, flow_to_interval_poset, interval_poset_to_flow,
    poset_flow_stats, validate_flow,
};
use tamari::format::{parse_object, render_object, Kind, Object};
use tamari::interval::tamari_leq;
use tamari::poly::{binomial, TriPoly};
use tamari::verify::{
    check_beta_involution, check_flow_theorem, check_functional_equations, check_symmetry,
    count_formula, enumerate_forests, interval_posets_up_to, phi,
};
use tamari::{Flow, IntervalPoset, PlanarForest};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn interval_counts() -> Check {
    let expected = [1u32, 3, 13, 68, 399, 2530];
    let start = Instant::now();
    let table = interval_posets_up_to(6);
    let elapsed = start.elapsed();
    for (n, e) in (1..=6).zip(expected) {
        let got = table[n].len();
        ensure(got == e as usize, || {
            format!("n={n}: enumerated {got}, expected {e}")
        })?;
        let formula = count_formula(n).map_err(|e| e.to_string())?;
        ensure(formula == BigUint::from(e), || {
            format!("n={n}: formula gives {formula}")
        })?;
    }
    ensure(elapsed <= Duration::from_secs(10), || {
        format!("sweep took {elapsed:?}")
    })?;
    let start = Instant::now();
    let seven = interval_posets_up_to(7)[7].len();
    let t7 = start.elapsed();
    let formula7 = count_formula(7).map_err(|e| e.to_string())?;
    let note = if BigUint::from(seven) == formula7 && t7 <= Duration::from_secs(60) {
        "ok"
    } else {
        "not met"
    };
    Ok(format!(
        "n=1..6 in {:.2?}; optional n=7: {seven} in {:.2?} ({note})",
        elapsed, t7
    ))
}

fn phi_golden() -> Check {
    // Coefficients of y^1..y^3 as (size, trees, ir, coefficient).
    let golden = [
        (1, 1, 1, 1),
        (2, 2, 2, 1),
        (2, 2, 1, 1),
        (2, 1, 2, 1),
        (3, 3, 3, 1),
        (3, 3, 2, 2),
        (3, 3, 1, 2),
        (3, 2, 3, 2),
        (3, 2, 2, 2),
        (3, 2, 1, 1),
        (3, 1, 3, 2),
        (3, 1, 2, 1),
    ];
    let mut expected = TriPoly::one();
    for (a, b, c, k) in golden {
        expected.add_term((a, b, c), k.into());
    }
    let got = phi(3);
    ensure(got == expected, || format!("phi(3) = {got}"))?;
    Ok(format!("{} terms", got.num_terms()))
}

fn symmetry() -> Check {
    ensure(check_symmetry(7), || {
        "Phi truncated at 7 is not symmetric".into()
    })?;
    Ok("sizes <= 7".into())
}

fn functional_equations() -> Check {
    let (a, b) = check_functional_equations(7).map_err(|e| e.to_string())?;
    ensure(a && b, || format!("first: {a}, second: {b}"))?;
    Ok("both hold up to y^7".into())
}

fn beta_contract() -> Check {
    let table = interval_posets_up_to(7);
    for (n, level) in table.iter().enumerate() {
        let mut images = HashSet::new();
        for i in level {
            let b = beta(i);
            let (s, t) = (i.stats(), b.stats());
            ensure(
                s.size == t.size && s.trees == t.ir && s.ir == t.trees,
                || format!("statistics not swapped on {i}"),
            )?;
            images.insert(b);
        }
        ensure(images.len() == level.len(), || {
            format!("not injective at n={n}")
        })?;
    }
    let input: IntervalPoset = "6: 3->2, 5->4, 1->2, 2->4, 3->4, 5->6"
        .parse()
        .map_err(|e| format!("{e}"))?;
    let output = beta(&input).to_string();
    let expected = "6: 2->1, 3->2, 4->3, 5->2, 6->1, 2->6, 3->6, 4->5, 5->6";
    ensure(output == expected, || {
        format!("worked example gives {output}")
    })?;
    Ok("sizes <= 7, worked example exact".into())
}

fn involution() -> Check {
    let reports = check_beta_involution(7);
    for r in reports.iter().filter(|r| r.n <= 6) {
        ensure(r.involution, || format!("beta o beta != id at n={}", r.n))?;
    }
    let seven = reports.iter().find(|r| r.n == 7).map(|r| r.involution);
    Ok(format!("sizes <= 6; size 7 (non-gating): {seven:?}"))
}

fn flow_theorem() -> Check {
    ensure(check_flow_theorem(5), || {
        "closed-flow count differs from ideal size".into()
    })?;
    let six_node_forest: PlanarForest = "(())()(()())".parse().map_err(|e| format!("{e}"))?;
    let n = enumerate_closed_flows(&six_node_forest).len();
    ensure(n == 6, || format!("(())()(()()) has {n} closed flows"))?;
    Ok("forests <= 5; (())()(()()) has 6".into())
}

fn eleven_vertex_flow() -> (Flow, IntervalPoset) {
    let flow = "(-1 (-1 (1) (1 (0))) (-1 (-1 (2)))) (-1 (0) (1))"
        .parse()
        .unwrap();
    let poset = "11: 1->9, 2->6, 3->4, 4->6, 5->6, 6->9, 7->9, 8->9, 10->11, \
                 2->1, 3->2, 4->1, 7->6, 8->7, 10->9, 11->9"
        .parse()
        .unwrap();
    (flow, poset)
}

fn flow_bijection() -> Check {
    let mut flows = 0;
    for n in 1..=5 {
        for forest in enumerate_forests(n) {
            for f in enumerate_closed_flows(&forest) {
                let p = flow_to_interval_poset(&f).map_err(|e| e.to_string())?;
                ensure(interval_poset_to_flow(&p) == f, || {
                    format!("round trip fails on {f}")
                })?;
                flows += 1;
            }
        }
    }
    let table = interval_posets_up_to(5);
    let posets: Vec<&IntervalPoset> = table.iter().skip(1).flatten().collect();
    for &p in &posets {
        let f = interval_poset_to_flow(p);
        let back = flow_to_interval_poset(&f).map_err(|e| e.to_string())?;
        ensure(back == *p, || format!("round trip fails on {p}"))?;
    }
    let (flow, poset) = eleven_vertex_flow();
    let got = flow_to_interval_poset(&flow).map_err(|e| e.to_string())?;
    ensure(got == poset, || format!("eleven-vertex flow maps to {got}"))?;
    Ok(format!("{flows} closed flows, {} posets", posets.len()))
}

fn flow_statistics() -> Check {
    for n in 1..=5 {
        for forest in enumerate_forests(n) {
            for f in enumerate_closed_flows(&forest) {
                let p = flow_to_interval_poset(&f).map_err(|e| e.to_string())?;
                let (a, b) = (flow_stats(&f), poset_flow_stats(&p));
                ensure((a.leaks, a.rate_sum) == (b.leaks, b.rate_sum), || {
                    format!("statistics differ on {f}")
                })?;
            }
        }
    }
    let (flow, poset) = eleven_vertex_flow();
    let (a, b) = (flow_stats(&flow), poset_flow_stats(&poset));
    ensure(
        (a.leaks, a.rate_sum) == (5, 7) && (b.leaks, b.rate_sum) == (5, 7),
        || format!("eleven-vertex flow gives ({}, {})", a.leaks, a.rate_sum),
    )?;
    Ok("sizes <= 5; eleven-vertex flow (5, 7)".into())
}

/// Counts flows by trying every input vector in `[-1, k + n]^n`.
fn brute_force_flows(forest: &PlanarForest, k: i64) -> usize {
    let n = forest.size();
    let top = k + n as i64;
    let mut v = vec![-1i64; n];
    let mut count = 0;
    loop {
        if let Ok(f) = validate_flow(forest.clone(), v.clone()) {
            if exit_rate(&f) == k {
                count += 1;
            }
        }
        let Some(pos) = (0..n).rev().find(|&p| v[p] < top) else {
            return count;
        };
        v[pos] += 1;
        v[pos + 1..].fill(-1);
    }
}

fn open_flow_series() -> Check {
    for n in 1..=4 {
        for forest in enumerate_forests(n) {
            let rs: Vec<usize> = enumerate_closed_flows(&forest)
                .iter()
                .map(|f| flow_to_interval_poset(f).unwrap().stat_trees())
                .collect();
            for k in 0..=4u64 {
                let expected: BigUint = rs
                    .iter()
                    .map(|&r| binomial(k + r as u64 - 1, r as i64 - 1))
                    .sum();
                let got = brute_force_flows(&forest, k as i64);
                ensure(BigUint::from(got) == expected, || {
                    format!("forest {forest}, k={k}: {got} flows, series gives {expected}")
                })?;
            }
        }
    }
    Ok("forests <= 4, k <= 4".into())
}

fn oracle_equivalence() -> Check {
    let mut pairs = 0;
    for n in 0..=5 {
        let oracle = RotationOracle::new(n);
        for a in oracle.trees() {
            for b in oracle.trees() {
                let fast = tamari_leq(a, b).map_err(|e| e.to_string())?;
                let slow = oracle.leq(a, b).map_err(|e| e.to_string())?;
                ensure(fast == slow, || format!("disagree on {a} <= {b}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn round_trip(kind: Kind, o: Object) -> Result<(), String> {
    let text = render_object(&o);
    let back = parse_object(kind, &text).map_err(|e| format!("{text}: {e}"))?;
    ensure(back == o, || format!("{kind} round trip fails on {text}"))
}

fn round_trips() -> Check {
    for n in 0..=8 {
        for t in enumerate_trees(n) {
            ensure(tree_from_dyck(&dyck_from_tree(&t)) == t, || {
                format!("dyck: {t}")
            })?;
            ensure(tree_from_dec_forest(&dec_forest_of_tree(&t)) == t, || {
                format!("dec: {t}")
            })?;
            ensure(tree_from_inc_forest(&inc_forest_of_tree(&t)) == t, || {
                format!("inc: {t}")
            })?;
        }
    }
    let table = interval_posets_up_to(6);
    for p in table.iter().flatten() {
        let (lo, hi) = (p.lower_tree(), p.upper_tree());
        let back = IntervalPoset::from_tree_pair(&lo, &hi).map_err(|e| e.to_string())?;
        ensure(back == *p, || format!("tree pair: {p}"))?;
    }
    for n in 0..=5 {
        let trees = enumerate_trees(n);
        for t in &trees {
            round_trip(Kind::Tree, Object::Tree(t.clone()))?;
            round_trip(Kind::Dyck, Object::Dyck(dyck_from_tree(t)))?;
            if n > 0 {
                let f = dec_forest_of_tree(t);
                round_trip(Kind::Forest, Object::Forest(f.clone()))?;
                for flow in enumerate_closed_flows(&f) {
                    round_trip(Kind::Flow, Object::Flow(flow))?;
                }
            }
            for u in &trees {
                round_trip(Kind::TreePair, Object::TreePair(t.clone(), u.clone()))?;
            }
        }
    }
    for p in interval_posets_up_to(5).into_iter().flatten() {
        round_trip(Kind::Poset, Object::Poset(p))?;
    }
    Ok("trees <= 8, tree pairs <= 6, text formats <= 5".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("interval counts", interval_counts),
        ("generating function golden data", phi_golden),
        ("x/z symmetry", symmetry),
        ("functional equations", functional_equations),
        ("beta contract", beta_contract),
        ("beta involution", involution),
        ("flow theorem", flow_theorem),
        ("flow bijection", flow_bijection),
        ("flow statistics", flow_statistics),
        ("open-flow series", open_flow_series),
        ("oracle equivalence", oracle_equivalence),
        ("round trips", round_trips),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:2} {name}: PASS ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} {name}: FAIL ({why}) [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
