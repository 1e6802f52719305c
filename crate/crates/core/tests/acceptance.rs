//! Acceptance gate: seven criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use design_forge::codebuild::{build_cyclic_codeword_c1, cyclic_c1_basis};
use design_forge::designs::{full_design_report, lambda_from_identity};
use design_forge::invariance::{affine_orbit_check, closure_check};
use design_forge::polyops::{cyclotomic_coset, defining_set_of_family};
use design_forge::spectrum::{
    closed_form_c1, closed_form_c1_cyclic, closed_form_c2_cyclic, closed_form_c2_extended, code_weight_distribution,
    exp_sum, extend_distribution, pless_verify, quadform_rank, weight_distribution, weight_from_sum,
};
use design_forge::{CodeSpec, FieldElement, FieldSpec, WeightDistribution, Workers};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Wall-clock ceilings, with slack over the targets for slow machines.
const ENUMERATOR_M6_LIMIT: Duration = Duration::from_secs(1);
const ENUMERATOR_M8_LIMIT: Duration = Duration::from_secs(60);
const DESIGNS_LIMIT: Duration = Duration::from_secs(30);
/// Random tuples checked at m = 8.
const M8_SAMPLES: usize = 10_000;
const SEED: u64 = 0x5eed_2d35;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
/// Code, t, expected (k, λ) pairs.
type DesignCase = (CodeSpec, u32, Vec<(u32, u64)>);

fn field(m: u32) -> FieldSpec {
    FieldSpec::new(m, None).unwrap()
}

fn dist(len: u32, dim: u32, pairs: &[(u32, u64)]) -> WeightDistribution {
    WeightDistribution::from_pairs(len, dim, pairs)
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn workers() -> Workers {
    Workers::available()
}

fn golden_enumerators() -> Outcome {
    let m4 = [(0, 1), (4, 140), (6, 448), (8, 870), (10, 448), (12, 140), (16, 1)];
    let cases: Vec<(&str, CodeSpec, WeightDistribution)> = vec![
        (
            "c1 s=3",
            CodeSpec::c1(3).unwrap(),
            dist(
                64,
                19,
                &[(0, 1), (16, 252), (24, 37632), (28, 107520), (32, 233478), (36, 107520), (40, 37632), (48, 252), (64, 1)],
            ),
        ),
        ("c1 s=2", CodeSpec::c1(2).unwrap(), dist(16, 11, &m4)),
        ("c2 s=2 l=1", CodeSpec::c2(2, 1).unwrap(), dist(16, 11, &m4)),
        (
            "c2 s=3 l=2",
            CodeSpec::c2(3, 2).unwrap(),
            dist(64, 16, &[(0, 1), (24, 5040), (28, 12544), (32, 30366), (36, 12544), (40, 5040), (64, 1)]),
        ),
        (
            "c2 s=3 l=1",
            CodeSpec::c2(3, 1).unwrap(),
            dist(
                64,
                16,
                &[(0, 1), (16, 84), (24, 3360), (28, 17920), (32, 22806), (36, 17920), (40, 3360), (48, 84), (64, 1)],
            ),
        ),
        (
            "c1 s=4",
            CodeSpec::c1(4).unwrap(),
            dist(
                256,
                25,
                &[
                    (0, 1),
                    (96, 17136),
                    (112, 2437120),
                    (120, 6754304),
                    (128, 15137310),
                    (136, 6754304),
                    (144, 2437120),
                    (160, 17136),
                    (256, 1),
                ],
            ),
        ),
    ];
    let mut timings = Vec::new();
    for (name, spec, want) in cases {
        let start = Instant::now();
        let got = weight_distribution(&spec, &field(spec.m()), workers()).map_err(|e| format!("{name}: {e}"))?;
        let took = start.elapsed();
        check(got == want, || format!("{name}: differs at {:?}", got.diff(&want)))?;
        check(got.min_nonzero_weight() == want.min_nonzero_weight(), || format!("{name}: minimum distance"))?;
        let limit = if spec.m() <= 6 { ENUMERATOR_M6_LIMIT } else { ENUMERATOR_M8_LIMIT };
        check(took <= limit, || format!("{name}: took {took:?}, limit {limit:?}"))?;
        timings.push(format!("{name} {:.2}s", took.as_secs_f64()));
    }
    Ok(timings.join(", "))
}

fn closed_form_consistency() -> Outcome {
    for s in [3, 4] {
        let spec = CodeSpec::c1(s).unwrap();
        let cf = closed_form_c1(s).map_err(|e| format!("c1 s={s}: {e}"))?;
        let en = weight_distribution(&spec, &field(2 * s), workers()).unwrap();
        check(cf == en, || format!("c1 s={s}: {:?}", cf.diff(&en)))?;
        let cyc = code_weight_distribution(&cyclic_c1_basis(&field(2 * s)).unwrap(), workers()).unwrap();
        let cfc = closed_form_c1_cyclic(s).map_err(|e| format!("cyclic c1 s={s}: {e}"))?;
        check(cfc == cyc, || format!("cyclic c1 s={s}: {:?}", cfc.diff(&cyc)))?;
    }
    for (s, l) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)] {
        let spec = CodeSpec::c2(s, l).unwrap();
        let cf = closed_form_c2_extended(s, l).map_err(|e| format!("c2 s={s} l={l}: {e}"))?;
        let en = weight_distribution(&spec, &field(2 * s), workers()).unwrap();
        check(cf == en, || format!("c2 s={s} l={l}: {:?}", cf.diff(&en)))?;
    }
    let mut pairs = 0;
    for s in 2..=6u32 {
        if s >= 3 {
            let ext = extend_distribution(&closed_form_c1_cyclic(s).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let table = closed_form_c1(s).map_err(|e| e.to_string())?;
            check(ext == table, || format!("c1 s={s}: extended cyclic table differs"))?;
            pairs += 1;
        }
        for l in 1..s {
            let Ok(cyc) = closed_form_c2_cyclic(s, l) else {
                continue;
            };
            let ext = extend_distribution(&cyc).map_err(|e| e.to_string())?;
            let table = closed_form_c2_extended(s, l).map_err(|e| format!("c2 s={s} l={l}: {e}"))?;
            check(ext == table, || format!("c2 s={s} l={l}: extended cyclic table differs"))?;
            pairs += 1;
        }
    }
    Ok(format!("7 enumerated codes + cyclic c1 s=3,4 match; {pairs} table extensions agree"))
}

fn design_verification() -> Outcome {
    let start = Instant::now();
    let cases: Vec<DesignCase> = vec![
        (
            CodeSpec::c1(3).unwrap(),
            2,
            vec![(16, 15), (24, 5152), (28, 20160), (32, 57443), (36, 33600), (40, 14560), (48, 141)],
        ),
        (CodeSpec::c2(2, 1).unwrap(), 2, vec![(4, 7), (6, 56), (8, 203), (10, 168), (12, 77)]),
        (
            CodeSpec::c2(3, 2).unwrap(),
            2,
            vec![(24, 690), (28, 2352), (32, 7471), (36, 3920), (40, 1950)],
        ),
        (
            CodeSpec::c2(3, 1).unwrap(),
            2,
            vec![(16, 5), (24, 460), (28, 3360), (32, 5611), (36, 5600), (40, 1300), (48, 47)],
        ),
        (CodeSpec::c1(2).unwrap(), 3, vec![(4, 1), (6, 16), (8, 87), (10, 96), (12, 55)]),
    ];
    let mut classes = 0;
    for (spec, t, want) in cases {
        let name = format!("{} s={} l={} t={t}", spec.family(), spec.s(), spec.l());
        let rows = full_design_report(&spec, &field(spec.m()), t, workers(), false).map_err(|e| format!("{name}: {e}"))?;
        let got: Vec<(u32, Option<u64>)> = rows.iter().map(|r| (r.k, r.lambda)).collect();
        let expect: Vec<(u32, Option<u64>)> = want.iter().map(|&(k, l)| (k, Some(l))).collect();
        check(got == expect, || format!("{name}: got {got:?}"))?;
        for r in &rows {
            check(r.verified && !r.skipped && r.matches != Some(false), || format!("{name} k={}: {r:?}", r.k))?;
            let lam = BigUint::from(r.lambda.unwrap());
            let id = lambda_from_identity(&r.b, r.k, r.v, t).map_err(|e| e.to_string())?;
            check(id == lam, || format!("{name} k={}: identity gives {id}", r.k))?;
        }
        classes += rows.len();
    }
    let took = start.elapsed();
    check(took <= DESIGNS_LIMIT, || format!("took {took:?}"))?;
    Ok(format!("{classes} weight classes verified in {:.2}s", took.as_secs_f64()))
}

fn affine_invariance() -> Outcome {
    let mut closed = 0;
    for s in 2..=8u32 {
        let mut specs = vec![CodeSpec::c1(s).unwrap()];
        specs.extend((1..s).filter_map(|l| CodeSpec::c2(s, l).ok()));
        for spec in specs {
            let r = closure_check(&defining_set_of_family(&spec), spec.m());
            check(r.closed, || format!("{} s={} l={}: witness {:?}", spec.family(), spec.s(), spec.l(), r.witness))?;
            closed += 1;
        }
    }
    let orbit_specs = [
        CodeSpec::c1(2).unwrap(),
        CodeSpec::c1(3).unwrap(),
        CodeSpec::c2(2, 1).unwrap(),
        CodeSpec::c2(3, 1).unwrap(),
        CodeSpec::c2(3, 2).unwrap(),
    ];
    for spec in &orbit_specs {
        let ok = affine_orbit_check(spec, &field(spec.m())).map_err(|e| e.to_string())?;
        check(ok, || format!("orbit check failed for {} s={}", spec.family(), spec.s()))?;
    }
    let mut t: BTreeSet<u64> = BTreeSet::from([0]);
    t.extend(cyclotomic_coset(7, 15).unwrap().members);
    let neg = closure_check(&t, 4);
    check(!neg.closed && neg.witness == Some((7, 3)), || format!("negative case gave {neg:?}"))?;
    Ok(format!(
        "{closed} defining sets closed, {} orbit checks pass, negative witness (7,3)",
        orbit_specs.len()
    ))
}

fn pless_suite() -> Outcome {
    for s in [3u32, 4] {
        let f = field(2 * s);
        let code = cyclic_c1_basis(&f).unwrap();
        let k = code.dimension() as u32;
        check(k == 6 * s, || format!("s={s}: dimension {k}"))?;
        let d = code_weight_distribution(&code, workers()).unwrap();
        let rep = pless_verify(&d, f.n() as u64, k);
        check(rep.holds, || format!("s={s}: identity {:?} fails", rep.first_failure))?;
        let mut entries = d.entries().clone();
        let w = d.min_nonzero_weight().unwrap();
        *entries.get_mut(&w).unwrap() += 1u32;
        let bumped = WeightDistribution::new(d.length(), d.dimension(), entries);
        check(!pless_verify(&bumped, f.n() as u64, k).holds, || format!("s={s}: perturbation missed"))?;
    }
    Ok("all seven identities hold for s=3,4; perturbation detected".into())
}

// Rank of the alternating form Q(x+y)+Q(x)+Q(y), Q(x) = tr(a x^5 + b x^3).
fn bilinear_rank(a: FieldElement, b: FieldElement, f: &FieldSpec) -> u32 {
    let q = |x: FieldElement| {
        let x3 = f.pow(x, 3);
        f.trace(f.add(f.mul(a, f.mul(x3, f.square(x))), f.mul(b, x3)))
    };
    let m = f.m() as usize;
    let mut rows: Vec<u32> = (0..m)
        .map(|i| {
            (0..m).fold(0, |acc, j| {
                let (x, y) = (FieldElement(1 << i), FieldElement(1 << j));
                acc | (q(f.add(x, y)) ^ q(x) ^ q(y)) << j
            })
        })
        .collect();
    let mut rank = 0;
    for col in 0..m {
        if let Some(p) = (rank..m).find(|&r| rows[r] >> col & 1 == 1) {
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row >> col & 1 == 1 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
    }
    rank as u32
}

fn check_tuple(a: FieldElement, b: FieldElement, c: FieldElement, f: &FieldSpec) -> Result<(), String> {
    let m = f.m();
    let sum = exp_sum(a, b, c, f);
    if a.is_zero() && b.is_zero() {
        let want = if c.is_zero() { 1i64 << m } else { 0 };
        check(sum == want, || format!("linear sum {sum} for c={c:?}"))?;
    } else {
        let p = quadform_rank(a, b, f).map_err(|e| e.to_string())?;
        let r = bilinear_rank(a, b, f);
        check(p.rank == r, || format!("rank {} vs matrix rank {r} at {a:?},{b:?}", p.rank))?;
        check([m, m - 2, m - 4].contains(&r), || format!("rank {r}"))?;
        let mag = 1i64 << (m - r / 2);
        check(sum == 0 || sum.abs() == mag, || format!("S={sum} with rank {r}"))?;
    }
    let w = weight_from_sum(sum, m / 2).map_err(|e| e.to_string())?;
    let word = build_cyclic_codeword_c1(a, b, c, f);
    check(word.weight() as i64 == w, || {
        format!("weight {} vs {w} at {a:?},{b:?},{c:?}", word.weight())
    })
}

fn expsum_rank() -> Outcome {
    let mut checked = 0usize;
    for m in [4, 6] {
        let f = field(m);
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    check_tuple(a, b, c, &f).map_err(|e| format!("m={m}: {e}"))?;
                    checked += 1;
                }
            }
        }
    }
    let f = field(8);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..M8_SAMPLES {
        let mut draw = || FieldElement(rng.gen_range(0..256));
        let (a, b, c) = (draw(), draw(), draw());
        check_tuple(a, b, c, &f).map_err(|e| format!("m=8: {e}"))?;
    }
    Ok(format!("{checked} exhaustive tuples (m=4,6) + {M8_SAMPLES} random (m=8)"))
}

fn determinism() -> Outcome {
    let specs = [
        CodeSpec::c1(2).unwrap(),
        CodeSpec::c1(3).unwrap(),
        CodeSpec::c2(3, 1).unwrap(),
        CodeSpec::c1(4).unwrap(),
    ];
    for spec in &specs {
        let f = field(spec.m());
        let run = |n: usize| -> Result<(String, String), String> {
            let w = Workers::new(n);
            let d = weight_distribution(spec, &f, w).map_err(|e| e.to_string())?;
            let rows = full_design_report(spec, &f, 2, w, false).map_err(|e| e.to_string())?;
            Ok((serde_json::to_string(&d).unwrap(), serde_json::to_string(&rows).unwrap()))
        };
        let base = run(1)?;
        for n in [2, 8] {
            check(run(n)? == base, || format!("{} s={}: output differs with {n} workers", spec.family(), spec.s()))?;
        }
    }
    Ok(format!("{} codes byte-identical across 1, 2, 8 workers", specs.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 7] = [
        ("golden enumerators", golden_enumerators),
        ("closed-form consistency", closed_form_consistency),
        ("design verification", design_verification),
        ("affine invariance", affine_invariance),
        ("power moments", pless_suite),
        ("exponential sums and ranks", expsum_rank),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    println!();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("[{}] {name}: PASS ({detail})", i + 1),
            Err(why) => {
                println!("[{}] {name}: FAIL ({why})", i + 1);
                failed.push(*name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
