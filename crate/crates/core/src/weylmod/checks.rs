use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    act_current, act_matrix_unit, e_vector, form_k, gram_nondegeneracy_check, highest_weight_dimension,
    highest_weight_space, pair, schur_weyl_dimension_check, CurrentGenerator, TensorElement, Word,
};
use crate::combinat::{fake_degree, Permutation};
use crate::error::Result;
use crate::exactla::Rational;
use crate::generators::{p_poly, IndexTuple, Shape};
use crate::invmod::{coset_span_check, isotypic_containment_check, module_degree_span};
use crate::polyring::{monomial_basis, top_degree, GradedSubspace, Monomial, Polynomial};
use crate::report::{CheckRecord, VerificationReport};

/// `dim` of the highest-weight invariants in degree `s` against the
/// coefficient of `q^s` in `fake_degree(ξ) · Π (1 − q^i)^{−1}`.
pub fn theorem2_rank_check(k: usize, n: usize, shape: &Shape, s: u32) -> Result<bool> {
    let want = fake_degree(shape.xi()).times_invariant_series(k, s as usize)[s as usize];
    Ok(highest_weight_dimension(k, n, shape, s)? as u64 == want)
}

/// Span of `⟨w, e(ξ) ⊗ 1⟩` over the highest-weight invariants `w` of
/// degree `s`.
pub fn pairing_image(shape: &Shape, n: usize, s: u32) -> Result<GradedSubspace> {
    let k = shape.k();
    let e = e_vector(shape, n)?;
    let polys: Vec<Polynomial> = highest_weight_space(k, n, shape, s)?.iter().map(|w| pair(w, &e)).collect();
    GradedSubspace::span(k, s, &polys)
}

/// Outcome of the pairing comparison in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingComparison {
    pub degree: u32,
    pub highest_weight_dim: usize,
    pub image_rank: usize,
    pub module_rank: usize,
    pub equal_spans: bool,
}

impl PairingComparison {
    pub fn pass(&self) -> bool {
        self.equal_spans && self.image_rank == self.highest_weight_dim
    }
}

/// The pairing image equals `M_{k,ξ}[s]` and the pairing is injective.
pub fn theorem3_degree_check(shape: &Shape, n: usize, s: u32) -> Result<PairingComparison> {
    let k = shape.k();
    let image = pairing_image(shape, n, s)?;
    let module = module_degree_span(shape, s);
    Ok(PairingComparison {
        degree: s,
        highest_weight_dim: highest_weight_dimension(k, n, shape, s)?,
        image_rank: image.rank(),
        module_rank: module.rank(),
        equal_spans: image == *module,
    })
}

/// The two forms of the string of current generators attached to `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoweringOutcome {
    /// `Π (e_{1,ℓ} ⊗ t^{r_{ℓ,p}})` applied to `e(ξ) ⊗ 1`, read off at
    /// `v_{ω_1}^{⊗k}`.
    pub direct: Polynomial,
    /// `⟨Π (e_{ℓ,1} ⊗ t^{r_{ℓ,p}}) v_{ω_1}^{⊗k} ⊗ 1, e(ξ) ⊗ 1⟩`.
    pub pairing: Polynomial,
    pub p: Polynomial,
    /// `c` with `direct = c · p(r)`; `None` when `p(r) = 0`.
    pub constant: Option<Rational>,
    /// Direct string landed entirely on `v_{ω_1}^{⊗k}`.
    pub lands_on_highest: bool,
    pub pass: bool,
}

fn string_generators(r: &IndexTuple, raising: bool) -> Vec<CurrentGenerator> {
    r.rows()
        .iter()
        .enumerate()
        .flat_map(|(row, es)| {
            let l = row + 2;
            es.iter().map(move |&e| {
                if raising {
                    CurrentGenerator::Unit { i: 1, j: l, r: e }
                } else {
                    CurrentGenerator::Unit { i: l, j: 1, r: e }
                }
            })
        })
        .collect()
}

pub fn lowering_string_check(shape: &Shape, r: &IndexTuple) -> Result<LoweringOutcome> {
    r.check(shape)?;
    let k = shape.k();
    let n = shape.n().max(1);
    let e = e_vector(shape, n)?;
    let p = p_poly(shape, r)?;

    let mut up = e.clone();
    for g in string_generators(r, true) {
        up = act_current(&g, &up);
    }
    let top: Word = vec![0; k];
    let lands_on_highest = up.terms().all(|(w, _, _)| *w == top);
    let direct = up.polynomial_at(&top);

    let mut down = TensorElement::highest_vector(k, n);
    for g in string_generators(r, false) {
        down = act_current(&g, &down);
    }
    let pairing = pair(&down, &e);

    let constant = p.leading_monomial().map(|m| &direct.coefficient(m) / &p.coefficient(m));
    let matches = match &constant {
        Some(c) => !c.is_zero() && direct == p.scale(c),
        None => direct.is_zero(),
    };
    let pass = lands_on_highest && matches && pairing == direct;
    Ok(LoweringOutcome { direct, pairing, p, constant, lands_on_highest, pass })
}

/// Summary of [`lowering_string_check`] over all indices with entries
/// bounded by `max_entry`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoweringSuite {
    pub instances: usize,
    pub zero_branch: usize,
    pub constant: Option<Rational>,
    pub failures: Vec<IndexTuple>,
    pub pass: bool,
}

pub fn lowering_string_suite(shape: &Shape, max_entry: u32) -> Result<LoweringSuite> {
    let lens = shape.index_lengths();
    let total: usize = lens.iter().sum();
    let mut flat = vec![0u32; total];
    let mut out = LoweringSuite { instances: 0, zero_branch: 0, constant: None, failures: Vec::new(), pass: true };
    let mut uniform = true;
    loop {
        let mut rows = Vec::new();
        let mut at = 0;
        for &l in lens {
            rows.push(flat[at..at + l].to_vec());
            at += l;
        }
        let r = IndexTuple::new(rows);
        let o = lowering_string_check(shape, &r)?;
        out.instances += 1;
        if r.entries().any(|x| x == 0) {
            out.zero_branch += 1;
            if !o.pairing.is_zero() || !o.direct.is_zero() {
                out.failures.push(r.clone());
            }
        }
        if !o.pass {
            out.failures.push(r.clone());
        }
        if let Some(c) = o.constant {
            match &out.constant {
                None => out.constant = Some(c),
                Some(c0) if *c0 != c => uniform = false,
                _ => {}
            }
        }
        let Some(i) = (0..total).find(|&i| flat[i] < max_entry) else { break };
        flat[i] += 1;
        flat[..i].iter_mut().for_each(|x| *x = 0);
    }
    out.failures.dedup();
    out.pass = out.failures.is_empty() && uniform && (out.constant.is_some() || total == 0 || max_entry == 0);
    if total == 0 {
        // one-row shapes: the empty string leaves e(ξ) = v^{⊗k}, p = 1
        out.pass &= out.constant == Some(Rational::ONE);
    }
    Ok(out)
}

/// Default bound on index entries for [`lowering_string_suite`].
pub const LOWERING_MAX_ENTRY: u32 = 4;

/// Default degree bound for the tensor-side checks.
pub fn default_tensor_degree(k: usize) -> u32 {
    top_degree(k)
}

/// Ranks of highest-weight invariants against the series, plus the
/// Schur–Weyl dimension and Gram nondegeneracy for the same weight.
pub fn verify_theorem2(shape: &Shape, n: usize, max_degree: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    let k = shape.k();
    let top = max_degree;
    let dims = (0..=top).map(|s| highest_weight_dimension(k, n, shape, s)).collect::<Result<Vec<_>>>()?;
    let series = fake_degree(shape.xi()).times_invariant_series(k, top as usize);
    let dims: Vec<u64> = dims.into_iter().map(|d| d as u64).collect();
    let sw = schur_weyl_dimension_check(k, n, shape.xi())?;
    let gram = gram_nondegeneracy_check(k, n, shape.xi())?;
    let checks = vec![
        CheckRecord::new("highest_weight_ranks", dims, series),
        CheckRecord::new("schur_weyl_dimension", sw, true),
        CheckRecord::new("gram_nondegenerate", gram, true),
    ];
    let mut report = VerificationReport::new("theorem2", k, Some(n), shape.xi().parts(), [0, top], checks);
    report.millis = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Pairing image against `M_{k,ξ}[s]` with injectivity, the coset span
/// and containment identities, and the generator strings.
pub fn verify_theorem3(shape: &Shape, n: usize, max_degree: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    let k = shape.k();
    let top = max_degree;
    let cmp = (0..=top).map(|s| theorem3_degree_check(shape, n, s)).collect::<Result<Vec<_>>>()?;
    let image: Vec<usize> = cmp.iter().map(|c| c.image_rank).collect();
    let hw: Vec<usize> = cmp.iter().map(|c| c.highest_weight_dim).collect();
    let module: Vec<usize> = cmp.iter().map(|c| c.module_rank).collect();
    let spans_equal: Vec<u32> = cmp.iter().filter(|c| !c.equal_spans).map(|c| c.degree).collect();
    let coset_fail: Vec<u32> = (0..=top).filter(|&s| !coset_span_check(shape, s)).collect();
    let contain_fail: Vec<u32> = (0..=top).filter(|&s| !isotypic_containment_check(shape, s)).collect();
    let strings = lowering_string_suite(shape, LOWERING_MAX_ENTRY)?;
    let checks = vec![
        CheckRecord::new("pairing_image_rank", &image, &module),
        CheckRecord::new("pairing_injective", &image, &hw),
        CheckRecord::new("pairing_image_equals_module", spans_equal, Vec::<u32>::new()),
        CheckRecord::new("coset_span", coset_fail, Vec::<u32>::new()),
        CheckRecord::new("isotypic_containment", contain_fail, Vec::<u32>::new()),
        CheckRecord::with_verdict(
            "generator_string",
            serde_json::json!({
                "instances": strings.instances,
                "zero_branch": strings.zero_branch,
                "constant": strings.constant,
                "failures": strings.failures,
            }),
            serde_json::json!({ "max_entry": LOWERING_MAX_ENTRY, "constant": "nonzero, uniform" }),
            strings.pass,
        ),
    ];
    let mut report = VerificationReport::new("theorem3", k, Some(n), shape.xi().parts(), [0, top], checks);
    report.millis = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Pass counts of the seeded random property suites.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCounts {
    pub bimodule: [usize; 2],
    pub contravariance: [usize; 2],
    pub form_contravariance: [usize; 2],
    pub lie_relations: [usize; 2],
    pub weight_orthogonality: [usize; 2],
}

impl PropertyCounts {
    pub fn pass(&self) -> bool {
        [self.bimodule, self.contravariance, self.form_contravariance, self.lie_relations, self.weight_orthogonality]
            .iter()
            .all(|[ok, total]| ok == total)
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut n = rng.gen_range(-5..=5);
    if n == 0 {
        n = 1;
    }
    Rational::new(n, rng.gen_range(1..=3))
}

fn random_word(rng: &mut ChaCha8Rng, k: usize, n: usize) -> Word {
    (0..k).map(|_| rng.gen_range(0..=n) as u8).collect()
}

fn random_element(rng: &mut ChaCha8Rng, k: usize, n: usize, max_deg: u32) -> TensorElement {
    let mut v = TensorElement::zero(k, n);
    for _ in 0..rng.gen_range(1..=4) {
        let b = monomial_basis(k, rng.gen_range(0..=max_deg));
        let m = b.monomial(rng.gen_range(0..b.len())).clone();
        v.add_term(random_word(rng, k, n), m, &random_rational(rng));
    }
    v
}

fn random_generator(rng: &mut ChaCha8Rng, n: usize) -> CurrentGenerator {
    let r = rng.gen_range(0..=2);
    if rng.gen_bool(0.2) {
        return CurrentGenerator::Cartan { i: rng.gen_range(1..=n), r };
    }
    let i = rng.gen_range(1..=n + 1);
    let mut j = rng.gen_range(1..=n);
    if j >= i {
        j += 1;
    }
    CurrentGenerator::Unit { i, j, r }
}

fn random_permutation(rng: &mut ChaCha8Rng, k: usize) -> Permutation {
    let mut v: Vec<usize> = (0..k).collect();
    for i in (1..k).rev() {
        v.swap(i, rng.gen_range(0..=i));
    }
    Permutation::new(v).expect("shuffle is a permutation")
}

fn tally(slot: &mut [usize; 2], ok: bool) {
    slot[1] += 1;
    if ok {
        slot[0] += 1;
    }
}

/// Runs every property on `instances` random inputs drawn from `seed`
/// (`k ≤ 4`, `n ≤ 3`).
pub fn property_suite(seed: u64, instances: usize) -> PropertyCounts {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = PropertyCounts::default();
    for _ in 0..instances {
        let k = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=3);
        let v = random_element(&mut rng, k, n, 2);
        let w = random_element(&mut rng, k, n, 2);
        let g = random_generator(&mut rng, n);
        let sigma = random_permutation(&mut rng, k);

        let lhs = act_current(&g, &v.act_symmetric_group(&sigma));
        let rhs = act_current(&g, &v).act_symmetric_group(&sigma);
        tally(&mut counts.bimodule, lhs == rhs);

        let a = pair(&act_current(&g, &v), &w);
        let b = pair(&v, &act_current(&g.omega(), &w));
        tally(&mut counts.contravariance, a == b);

        // the same statement for ( , )_k on constant elements
        let v0 = random_element(&mut rng, k, n, 0);
        let w0 = random_element(&mut rng, k, n, 0);
        let g0 = match random_generator(&mut rng, n) {
            CurrentGenerator::Unit { i, j, .. } => CurrentGenerator::Unit { i, j, r: 0 },
            CurrentGenerator::Cartan { i, .. } => CurrentGenerator::Cartan { i, r: 0 },
        };
        let a = form_k(&act_current(&g0, &v0), &w0).expect("constant");
        let b = form_k(&v0, &act_current(&g0.omega(), &w0)).expect("constant");
        tally(&mut counts.form_contravariance, a == b);

        // [e_{i,j} t^a, e_{j,l} t^b] = e_{i,l} t^{a+b} − δ_{il} e_{j,j} t^{a+b}
        let i = rng.gen_range(1..=n + 1);
        let mut j = rng.gen_range(1..=n);
        if j >= i {
            j += 1;
        }
        let mut l = rng.gen_range(1..=n);
        if l >= j {
            l += 1;
        }
        let (ea, eb) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let x = |u: &TensorElement| act_matrix_unit(i, j, ea, u);
        let y = |u: &TensorElement| act_matrix_unit(j, l, eb, u);
        let comm = x(&y(&v)).sub(&y(&x(&v)));
        let mut expect = act_matrix_unit(i, l, ea + eb, &v);
        if i == l {
            expect.add_scaled(&-Rational::ONE, &act_matrix_unit(j, j, ea + eb, &v));
        }
        tally(&mut counts.lie_relations, comm == expect);

        // distinct contents are orthogonal
        let wa = random_word(&mut rng, k, n);
        let wb = random_word(&mut rng, k, n);
        let ca = TensorElement::content(&wa, n);
        let cb = TensorElement::content(&wb, n);
        if ca != cb {
            let mut a = TensorElement::zero(k, n);
            let mut b = TensorElement::zero(k, n);
            for _ in 0..3 {
                let pa = random_permutation(&mut rng, k);
                let pb = random_permutation(&mut rng, k);
                let wa2: Word = pa.images().iter().map(|&p| wa[p]).collect();
                let wb2: Word = pb.images().iter().map(|&p| wb[p]).collect();
                a.add_term(wa2, Monomial::one(k), &random_rational(&mut rng));
                b.add_term(wb2, Monomial::one(k), &random_rational(&mut rng));
            }
            tally(&mut counts.weight_orthogonality, form_k(&a, &b).expect("constant").is_zero());
        }
    }
    counts
}
