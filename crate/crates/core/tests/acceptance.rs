//! One line per acceptance criterion. Every comparison is exact: integer
//! equality of ranks and coefficients, equality of reduced bases over the
//! rationals. Exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use weylinv::combinat::{fake_degree, partitions_of, Partition, QPolynomial};
use weylinv::generators::Shape;
use weylinv::invmod::{coset_span_check, graded_rank_polynomial, hilbert_of_m, isotypic_containment_check};
use weylinv::polyring::{coinvariant_dimensions, isotypic_dimension, top_degree};
use weylinv::weylmod::{
    gram_nondegeneracy_check, highest_weight_dimension, lowering_string_suite, property_suite,
    schur_weyl_dimension_check, theorem3_degree_check,
};

const SEED: u64 = 20_240_917;
const PROPERTY_INSTANCES: usize = 1000;
const MAX_ENTRY: u32 = 4;
const CRITERION_10_BUDGET: Duration = Duration::from_secs(600);

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, checked: usize) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: format!("{checked} instances, exact") }
    } else {
        let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
        Outcome { pass: false, detail: format!("{} of {checked} failed: {}", failures.len(), shown.join("; ")) }
    }
}

fn shapes(k: usize) -> Vec<Shape> {
    partitions_of(k, None).into_iter().map(|p| Shape::new(p).unwrap()).collect()
}

fn series_coeff(xi: &Partition, k: usize, s: u32) -> u64 {
    fake_degree(xi).times_invariant_series(k, s as usize)[s as usize]
}

fn graded_rank() -> Outcome {
    let mut fails = Vec::new();
    let mut n = 0;
    let spot = [vec![5, 1], vec![4, 2], vec![3, 3], vec![2, 2, 2]];
    let all = (1..=5).flat_map(shapes).chain(spot.iter().map(|p| Shape::from_parts(p).unwrap()));
    for sh in all {
        n += 1;
        let got = graded_rank_polynomial(&sh);
        let want = fake_degree(sh.xi());
        if got != want {
            fails.push(format!("{sh}: {got} vs {want}"));
        }
    }
    outcome(fails, n)
}

fn kostka_convention() -> Outcome {
    let mut fails = Vec::new();
    let mut n = 0;
    for k in 1..=5 {
        for xi in partitions_of(k, None) {
            n += 1;
            let want = fake_degree(&xi).padded(top_degree(k) as usize + 1);
            let got: Vec<u64> =
                (0..=top_degree(k)).map(|s| isotypic_dimension(&xi, s) as u64 / xi.dimension()).collect();
            let whole = (0..=top_degree(k)).all(|s| (isotypic_dimension(&xi, s) as u64).is_multiple_of(xi.dimension()));
            if got != want || !whole {
                fails.push(format!("{xi}: {got:?} vs {want:?}"));
            }
        }
    }
    outcome(fails, n)
}

fn coinvariant_dimension() -> Outcome {
    let mut fails = Vec::new();
    for k in 1..=5 {
        let dims: Vec<u64> = coinvariant_dimensions(k).into_iter().map(|d| d as u64).collect();
        let got = QPolynomial::from_coeffs(dims);
        let fact: u64 = (1..=k as u64).product();
        if got != QPolynomial::q_factorial(k) || got.eval_one() != fact {
            fails.push(format!("k={k}: {got}"));
        }
    }
    outcome(fails, 5)
}

fn freeness() -> Outcome {
    let mut fails = Vec::new();
    let mut n = 0;
    for k in 1..=4 {
        let max = top_degree(k) + 2;
        for sh in shapes(k) {
            n += 1;
            let got: Vec<u64> = hilbert_of_m(&sh, max).into_iter().map(|d| d as u64).collect();
            let want = fake_degree(sh.xi()).times_invariant_series(k, max as usize);
            if got != want {
                fails.push(format!("{sh}: {got:?} vs {want:?}"));
            }
        }
    }
    outcome(fails, n)
}

fn isotypic_and_coset() -> Outcome {
    let mut fails = Vec::new();
    let mut n = 0;
    for k in 1..=4 {
        for sh in shapes(k) {
            for s in 0..=top_degree(k) {
                n += 1;
                if !isotypic_containment_check(&sh, s) || !coset_span_check(&sh, s) {
                    fails.push(format!("{sh} s={s}"));
                }
            }
        }
    }
    outcome(fails, n)
}

/// Shapes of size `k` that fit `sl_{n+1}`.
fn fitting(k: usize, n: usize) -> Vec<Shape> {
    partitions_of(k, Some(n + 1)).into_iter().map(|p| Shape::new(p).unwrap()).collect()
}

fn highest_weight_ranks() -> Outcome {
    let mut fails = Vec::new();
    let mut count = 0;
    let mut grid: Vec<(usize, usize, u32)> = Vec::new();
    for n in 1..=2 {
        for k in 1..=4 {
            grid.push((k, n, top_degree(k)));
        }
    }
    grid.push((5, 1, 4));
    for (k, n, max) in grid {
        for sh in fitting(k, n) {
            for s in 0..=max {
                count += 1;
                let got = highest_weight_dimension(k, n, &sh, s).unwrap() as u64;
                let want = series_coeff(sh.xi(), k, s);
                if got != want {
                    fails.push(format!("k={k} n={n} {sh} s={s}: {got} vs {want}"));
                }
            }
        }
    }
    outcome(fails, count)
}

fn pairing() -> Outcome {
    let mut fails = Vec::new();
    let mut count = 0;
    for n in 1..=2 {
        for k in 1..=4 {
            for sh in fitting(k, n) {
                for s in 0..=top_degree(k) {
                    count += 1;
                    let c = theorem3_degree_check(&sh, n, s).unwrap();
                    if !c.pass() {
                        fails.push(format!("n={n} {sh} s={s}: {c:?}"));
                    }
                }
            }
        }
    }
    outcome(fails, count)
}

fn generator_strings() -> Outcome {
    let mut fails = Vec::new();
    let mut count = 0;
    let mut constants = Vec::new();
    for k in 1..=4 {
        for sh in shapes(k) {
            let suite = lowering_string_suite(&sh, MAX_ENTRY).unwrap();
            count += suite.instances;
            match &suite.constant {
                Some(c) => constants.push(format!("{sh}:{c}")),
                None => fails.push(format!("{sh}: no nonzero constant")),
            }
            if !suite.pass {
                fails.push(format!("{sh}: {:?}", suite.failures));
            }
        }
    }
    let mut o = outcome(fails, count);
    o.detail = format!("{}; c per shape {}", o.detail, constants.join(" "));
    o
}

fn schur_weyl_and_forms() -> Outcome {
    let mut fails = Vec::new();
    let mut count = 0;
    for n in 1..=3 {
        for k in 1..=6 {
            for xi in partitions_of(k, Some(n + 1)) {
                count += 1;
                if !schur_weyl_dimension_check(k, n, &xi).unwrap() || !gram_nondegeneracy_check(k, n, &xi).unwrap() {
                    fails.push(format!("k={k} n={n} {xi}"));
                }
            }
        }
    }
    let props = property_suite(SEED, PROPERTY_INSTANCES);
    if !props.pass() || props.bimodule[1] < PROPERTY_INSTANCES || props.contravariance[1] < PROPERTY_INSTANCES {
        fails.push(format!("properties {props:?}"));
    }
    let mut o = outcome(fails, count);
    o.detail = format!(
        "{}; seed {SEED}: bimodule {}/{}, contravariance {}/{}",
        o.detail, props.bimodule[0], props.bimodule[1], props.contravariance[0], props.contravariance[1]
    );
    o
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_weylinv");
    let start = Instant::now();
    let run = || Command::new(bin).args(["verify", "all", "--max-k", "4"]).output().expect("binary runs");
    let a = run();
    let b = run();
    let elapsed = start.elapsed();
    let codes = (a.status.code(), b.status.code());
    let identical = a.stdout == b.stdout && !a.stdout.is_empty();
    let pass = identical && codes == (Some(0), Some(0)) && elapsed < CRITERION_10_BUDGET;
    Outcome {
        pass,
        detail: format!(
            "byte-identical {identical}, exit codes {codes:?}, {} bytes, two runs in {:.1}s",
            a.stdout.len(),
            elapsed.as_secs_f64()
        ),
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("graded rank equals fake degree, k<=5 and k=6 spot shapes", graded_rank),
        ("fake degree equals isotypic multiplicity, k<=5", kostka_convention),
        ("coinvariant Hilbert series equals [k]_q!, k<=5", coinvariant_dimension),
        ("Hilbert series of M equals fake degree over invariants, k<=4", freeness),
        ("isotypic containment and coset span, k<=4", isotypic_and_coset),
        ("highest-weight ranks, n<=2 k<=4 and (k,n)=(5,1) s<=4", highest_weight_ranks),
        ("pairing image equals module, injective, n<=2 k<=4", pairing),
        ("generator strings with entries <=4, k<=4", generator_strings),
        ("Schur-Weyl, Gram, and property suites", schur_weyl_and_forms),
        ("byte-identical verify all --max-k 4", determinism),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        all &= o.pass;
        println!(
            "criterion {:>2} {} {name} ({}; {:.1}s)",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if !all {
        std::process::exit(1);
    }
}
