//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`) and enforcing its runtime
//! budget. All comparisons are exact integer equalities.

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use tokenaut::graph::{make_family, FamilySpec, Graph};
use tokenaut::group::PermGroup;
use tokenaut::perm::Permutation;
use tokenaut::search::{
    complement_involution, find_automorphism_group, induced_automorphism, induced_subgroup,
    SearchConfig,
};
use tokenaut::subsets::binomial;
use tokenaut::theorems::{
    check_cycle_structure, check_cycle_theorem, check_fan_theorem, check_grid_counterexample,
    check_johnson, check_path_theorem, check_star_theorem, check_wheel_theorem, CheckContext,
    VerdictStatus,
};
use tokenaut::token::TokenGraph;
use tokenaut::distance::verify_distance_formula;

struct Criterion {
    name: &'static str,
    budget: Duration,
    started: Instant,
    failures: Vec<String>,
}

impl Criterion {
    fn new(name: &'static str, budget: Duration) -> Self {
        Criterion {
            name,
            budget,
            started: Instant::now(),
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    /// Prints the one-line outcome and fails the test on any violation.
    fn gate(mut self) {
        let elapsed = self.started.elapsed();
        if elapsed > self.budget {
            self.failures.push(format!(
                "runtime {:.2?} exceeds the {:.2?} budget",
                elapsed, self.budget
            ));
        }
        if self.failures.is_empty() {
            println!("{}: PASS ({:.2?})", self.name, elapsed);
        } else {
            println!(
                "{}: FAIL ({:.2?}) — {}",
                self.name,
                elapsed,
                self.failures.join("; ")
            );
            panic!("{} failed: {}", self.name, self.failures.join("; "));
        }
    }
}

fn ctx() -> CheckContext {
    CheckContext::default()
}

fn aut_order(g: &Graph) -> BigUint {
    find_automorphism_group(g, &SearchConfig::default())
        .unwrap()
        .order()
}

/// Criterion 1: cycle theorem orders for n in {3, 5..14} plus the published
/// exceptional value at n = 4.
///
/// The n = 4 clause asserts the published order 16 and is expected RED: the
/// pair graph of the 4-cycle is the complete bipartite K_{2,4}, whose group
/// is S_2 x S_4 of order 48 (confirmed independently by exhaustive
/// enumeration over all 720 bijections). The harness reports this as a
/// refutation with a witness; asserting the published value here keeps the
/// record honest rather than repinning the test to the computed value.
#[test]
fn criterion_1_cycle_theorem() {
    let mut c = Criterion::new("criterion 1 (cycle theorem)", Duration::from_secs(5));
    let context = ctx();
    for n in (3..=14).filter(|&n| n != 4) {
        let v = check_cycle_theorem(n, &context).unwrap();
        c.check(
            v.status == VerdictStatus::Verified && v.witness.orders["aut"] == (2 * n).to_string(),
            format!("n={n}: expected verified order {}, got {:?}", 2 * n, v.witness.orders),
        );
    }
    let v4 = check_cycle_theorem(4, &context).unwrap();
    c.check(
        v4.witness.orders["aut"] == "16",
        format!(
            "n=4: published order 16 is refuted; both engines compute {} (F_2(C_4) = K_{{2,4}}, Aut = S_2 x S_4)",
            v4.witness.orders["aut"]
        ),
    );
    c.gate();
}

/// Criterion 2: star theorem orders via generators and the stabilizer
/// chain, never element enumeration.
#[test]
fn criterion_2_star_theorem() {
    let mut c = Criterion::new("criterion 2 (star theorem)", Duration::from_secs(5));
    let context = ctx();
    let factorial = |m: usize| (1..=m).fold(BigUint::from(1u32), |a, i| a * BigUint::from(i));
    for n in 5..=9 {
        let v = check_star_theorem(n, &context).unwrap();
        c.check(
            v.status == VerdictStatus::Verified
                && v.witness.orders["aut"] == factorial(n - 1).to_string(),
            format!("n={n}: expected verified order {}, got {:?}", factorial(n - 1), v.witness.orders),
        );
    }
    let v4 = check_star_theorem(4, &context).unwrap();
    c.check(
        v4.status == VerdictStatus::Verified && v4.witness.orders["aut"] == "12",
        "n=4 should give order 12",
    );
    c.gate();
}

/// Criterion 3: fan and wheel theorems on rims 4..10, plus the exceptional
/// 3-fan whose base group has order 4 (the paper's computer-checked
/// statement is about the base graph).
#[test]
fn criterion_3_fan_and_wheel_theorems() {
    let mut c = Criterion::new("criterion 3 (fan and wheel theorems)", Duration::from_secs(30));
    let context = ctx();
    for n in 4..=10 {
        let fan = check_fan_theorem(n, &context).unwrap();
        c.check(
            fan.status == VerdictStatus::Verified && fan.witness.orders["aut"] == "2",
            format!("fan rim {n}: expected verified order 2, got {:?}", fan.witness.orders),
        );
        let wheel = check_wheel_theorem(n, &context).unwrap();
        c.check(
            wheel.status == VerdictStatus::Verified
                && wheel.witness.orders["aut"] == (2 * n).to_string(),
            format!("wheel rim {n}: expected verified order {}, got {:?}", 2 * n, wheel.witness.orders),
        );
    }
    let fan3 = check_fan_theorem(3, &context).unwrap();
    c.check(
        fan3.status == VerdictStatus::Verified && fan3.witness.orders["base_aut"] == "4",
        "the 3-fan should give the order-4 group",
    );
    c.gate();
}

/// Criterion 4: path theorem for all (n, k) with n <= 10; the n = 2k
/// instances with k >= 2 give order 4 (conjecture-consistent). The (2, 1)
/// corner is the 2-path itself, order 2 with equality.
#[test]
fn criterion_4_path_theorem() {
    let mut c = Criterion::new("criterion 4 (path theorem)", Duration::from_secs(60));
    let context = ctx();
    for n in 2..=10 {
        for k in 1..n {
            let v = check_path_theorem(n, k, &context).unwrap();
            if n == 2 * k && k >= 2 {
                c.check(
                    v.status == VerdictStatus::Verified
                        && v.label == "conjecture-consistent"
                        && v.witness.orders["aut"] == "4",
                    format!("(n,k)=({n},{k}): expected conjecture-consistent order 4, got {:?}", v.witness.orders),
                );
            } else {
                c.check(
                    v.status == VerdictStatus::Verified && v.witness.orders["aut"] == "2",
                    format!("(n,k)=({n},{k}): expected verified order 2, got {:?}", v.witness.orders),
                );
            }
        }
    }
    c.gate();
}

/// Criterion 5: the known token-graph orders of complete graphs.
#[test]
fn criterion_5_johnson_regression() {
    let mut c = Criterion::new("criterion 5 (complete-graph regression)", Duration::from_secs(30));
    let context = ctx();
    for (n, k, expected) in [(5, 2, 120u64), (6, 2, 720), (6, 3, 1440), (7, 3, 5040)] {
        let v = check_johnson(n, k, &context).unwrap();
        c.check(
            v.status == VerdictStatus::Verified && v.witness.orders["aut"] == expected.to_string(),
            format!("(n,k)=({n},{k}): expected verified order {expected}, got {:?}", v.witness.orders),
        );
    }
    c.gate();
}

/// Criterion 6: the 2x3 grid counterexample orders, exactly 4 and 8.
#[test]
fn criterion_6_grid_counterexample() {
    let mut c = Criterion::new("criterion 6 (grid counterexample)", Duration::from_secs(1));
    let v = check_grid_counterexample(&ctx()).unwrap();
    c.check(
        v.status == VerdictStatus::Verified
            && v.witness.orders["base_aut"] == "4"
            && v.witness.orders["aut"] == "8",
        format!("expected orders 4 and 8, got {:?}", v.witness.orders),
    );
    c.gate();
}

/// Criterion 7: the coordinate distance formula equals BFS on every vertex
/// pair of F_k(P_n), for every (n, k) with at most 1000 token vertices
/// (swept over n <= 14), zero mismatches.
#[test]
fn criterion_7_distance_oracle() {
    let mut c = Criterion::new("criterion 7 (distance oracle)", Duration::from_secs(30));
    let mut instances = 0;
    for n in 2..=14 {
        for k in 1..n {
            if binomial(n, k).unwrap() > 1000 {
                continue;
            }
            let base = make_family(FamilySpec::Path { n }).unwrap();
            let tg = TokenGraph::new(&base, k).unwrap();
            match verify_distance_formula(&tg) {
                Ok(_) => instances += 1,
                Err(e) => c.check(false, format!("(n,k)=({n},{k}): {e}")),
            }
        }
    }
    c.check(instances > 50, format!("only {instances} instances swept"));
    c.gate();
}

/// Brute force over all n! bijections; the criterion-8 oracle.
fn count_automorphisms_by_all_bijections(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0u64;
    // Heap's algorithm, iterative
    let mut stack = vec![0usize; n];
    let preserves = |p: &[usize]| {
        g.edges().all(|(u, v)| g.has_edge(p[u], p[v]))
            && (0..n).all(|u| (u + 1..n).all(|v| !g.has_edge(u, v) || g.has_edge(p[u], p[v])))
    };
    if preserves(&perm) {
        count += 1;
    }
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            if preserves(&perm) {
                count += 1;
            }
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    count
}

/// Closure of a generating set by repeated multiplication; the criterion-8
/// group-order oracle.
fn closure_order(degree: usize, gens: &[Permutation], cap: usize) -> Option<usize> {
    let mut elements: BTreeSet<Permutation> = BTreeSet::new();
    elements.insert(Permutation::identity(degree));
    let mut frontier = vec![Permutation::identity(degree)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = p.then(g);
            if elements.insert(q.clone()) {
                if elements.len() > cap {
                    return None;
                }
                frontier.push(q);
            }
        }
    }
    Some(elements.len())
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Criterion 8: oracle equivalences with zero tolerance.
///   - search order vs brute-force enumeration of all n! bijections on a
///     200-graph random corpus (n <= 8)
///   - stabilizer-chain order vs closure for generated groups of order
///     <= 5000
///   - the induced-map homomorphism law on all generator pairs
///   - the complement involution is a fixed-point-free involution outside
///     the induced group on every tested n = 2k instance
#[test]
fn criterion_8_property_suites() {
    let mut c = Criterion::new("criterion 8 (oracle equivalence)", Duration::from_secs(240));
    let cfg = SearchConfig::default();

    // 8a: 200 random graphs on up to 8 vertices
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    for i in 0..200 {
        let n = 4 + (i % 5); // 4..=8
        let p = [0.2, 0.35, 0.5, 0.65, 0.8][(i / 5) % 5];
        let g = random_graph(&mut rng, n, p);
        let searched = find_automorphism_group(&g, &cfg).unwrap().order();
        let brute = count_automorphisms_by_all_bijections(&g);
        if searched != BigUint::from(brute) {
            c.check(
                false,
                format!("graph {i} (n={n}): search {searched} vs brute force {brute}"),
            );
            break;
        }
    }

    // 8b: chain order vs closure on generated groups of order <= 5000
    let mut group_corpus: Vec<(usize, Vec<Permutation>)> = Vec::new();
    for n in 3..=7usize {
        let rotation = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        let swap = Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
        group_corpus.push((n, vec![rotation.clone()]));
        group_corpus.push((n, vec![rotation.clone(), reflection]));
        group_corpus.push((n, vec![rotation, swap]));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeed_beef);
    for _ in 0..30 {
        let degree = 4 + rng.gen_range(0..5);
        let random_perm = |rng: &mut ChaCha8Rng| {
            let mut items: Vec<usize> = (0..degree).collect();
            for i in (1..degree).rev() {
                let j = rng.gen_range(0..=i);
                items.swap(i, j);
            }
            Permutation::from_images(items).unwrap()
        };
        group_corpus.push((degree, vec![random_perm(&mut rng), random_perm(&mut rng)]));
    }
    let mut compared = 0;
    for (degree, gens) in &group_corpus {
        match closure_order(*degree, gens, 5000) {
            Some(expected) => {
                compared += 1;
                let group = PermGroup::new(*degree, gens.clone()).unwrap();
                c.check(
                    group.order() == BigUint::from(expected),
                    format!(
                        "degree {degree}: chain order {} vs closure {expected}",
                        group.order()
                    ),
                );
            }
            None => {} // beyond the 5000 cap, outside the criterion
        }
    }
    c.check(compared >= 20, format!("only {compared} groups within the order cap"));

    // 8c: induced maps compose like their base automorphisms
    for (spec, k) in [
        (FamilySpec::Star { total: 6 }, 2),
        (FamilySpec::Cycle { n: 6 }, 2),
        (FamilySpec::Wheel { rim: 5 }, 2),
        (FamilySpec::Grid { rows: 2, cols: 3 }, 2),
        (FamilySpec::Path { n: 7 }, 3),
    ] {
        let g = make_family(spec).unwrap();
        let tg = TokenGraph::new(&g, k).unwrap();
        let base = find_automorphism_group(&g, &cfg).unwrap();
        for a in base.generators() {
            for b in base.generators() {
                let fa = induced_automorphism(a, &tg).unwrap();
                let fb = induced_automorphism(b, &tg).unwrap();
                let fab = induced_automorphism(&a.then(b), &tg).unwrap();
                c.check(
                    fa.then(&fb) == fab,
                    format!("homomorphism law fails for {spec:?} k={k}"),
                );
            }
        }
    }

    // 8d: the complement involution on every tested n = 2k instance
    for (spec, k) in [
        (FamilySpec::Complete { n: 4 }, 2),
        (FamilySpec::Cycle { n: 4 }, 2),
        (FamilySpec::Cycle { n: 6 }, 3),
        (FamilySpec::Path { n: 6 }, 3),
        (FamilySpec::Path { n: 8 }, 4),
        (FamilySpec::Star { total: 6 }, 3),
        (FamilySpec::Grid { rows: 2, cols: 3 }, 3),
    ] {
        let g = make_family(spec).unwrap();
        let tg = TokenGraph::new(&g, k).unwrap();
        // construction verifies: automorphism, involution, fixed-point
        // free, and not induced (k >= 2)
        match complement_involution(&tg) {
            Ok(f) => {
                let base = find_automorphism_group(&g, &cfg).unwrap();
                let ind = induced_subgroup(&base, &tg).unwrap();
                c.check(
                    !ind.contains(&f).unwrap(),
                    format!("complement involution is induced for {spec:?}"),
                );
            }
            Err(e) => c.check(false, format!("complement involution fails for {spec:?}: {e}")),
        }
    }
    c.gate();
}

/// Criterion 9: the structural propositions, each exact.
#[test]
fn criterion_9_structural_propositions() {
    let mut c = Criterion::new("criterion 9 (structural propositions)", Duration::from_secs(120));
    let context = ctx();

    // ring sizes and partition for all n, the double cycle for n in 6..=12
    for n in 3..=12 {
        for v in check_cycle_structure(n, &context).unwrap() {
            c.check(
                v.status == VerdictStatus::Verified,
                format!("{} n={n}: {:?}", v.claim_id, v.witness.failures),
            );
        }
    }

    // star bipartition degrees ride along the star theorem checks
    for n in 3..=9 {
        let v = check_star_theorem(n, &context).unwrap();
        c.check(
            v.status == VerdictStatus::Verified,
            format!("star n={n}: {:?}", v.witness.failures),
        );
    }

    // fan degree census on rims 5..=10
    for n in 5..=10 {
        let v = check_fan_theorem(n, &context).unwrap();
        c.check(
            v.status == VerdictStatus::Verified,
            format!("fan rim {n}: {:?}", v.witness.failures),
        );
    }

    // wheel rim/hub decomposition on rims 6..=10
    for n in 6..=10 {
        let v = check_wheel_theorem(n, &context).unwrap();
        c.check(
            v.status == VerdictStatus::Verified,
            format!("wheel rim {n}: {:?}", v.witness.failures),
        );
    }

    // path degree observations for n <= 10
    for n in 4..=10 {
        for k in 2..=n - 2 {
            let v = check_path_theorem(n, k, &context).unwrap();
            c.check(
                v.status == VerdictStatus::Verified,
                format!("path (n,k)=({n},{k}): {:?}", v.witness.failures),
            );
        }
    }
    c.gate();
}
