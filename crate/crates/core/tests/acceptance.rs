//! The acceptance suite: twelve criteria, each run in full and reported on one
//! line. Run with `cargo test -p taukit-core --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use taukit_core::characters::{
    character_table_uncached, cyclotomic_quotient_kernel, cyclotomic_quotient_map, modular_quotient_order, ClassFunction,
    RepIdeal, SeminormalRep,
};
use taukit_core::check::CheckRecord;
use taukit_core::exact_arith::{binomial, ratio, Cyclotomic, Rational, F31};
use taukit_core::groups::{cyclic, partitions, symmetric, Permutation};
use taukit_core::gset_geometry::{binomial_identity_sum, congruence_grid, k1_tensor_power};
use taukit_core::koszul_graded::{
    alpha_surjective, diagonal_conormal, invariant_sections_generate, linear_kernel_oracle, AlphaMode, KoszulComplex, Poly,
};
use taukit_core::kspaces::identities::{
    adams_congruence, kunneth, negation, route_agreement, tau_of_lambda, tensor_trace,
};
use taukit_core::kspaces::rr::{
    adams_riemann_roch, closed_immersion, multiplier_congruence, tau_form_congruence, worked_zero_section_values,
};
use taukit_core::kspaces::{random_decomposed, tau_checked, BundleSum, DecomposedClass, EqKClass, KClassPn};
use taukit_core::lambda::{cartier_identity_check, curve_theta_inverse, AugmentedTruncated};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Fails on the first record that did not pass; otherwise reports the count.
fn all_passed(records: &[CheckRecord]) -> Result<usize, String> {
    match records.iter().find(|r| !r.passed) {
        Some(r) => Err(format!("{}: {} != {}", r.name, r.left, r.right)),
        None => Ok(records.len()),
    }
}

fn within(elapsed: Duration, limit: Duration, detail: String) -> Outcome {
    if elapsed < limit {
        Ok(detail)
    } else {
        Err(format!("{detail}, but took {elapsed:.2?} (limit {limit:?})"))
    }
}

/// Multisets of twists in `-1..=1` of total rank `1..=max_rank`.
fn small_bundles(max_rank: u64) -> Vec<BundleSum> {
    let mut out = Vec::new();
    for a in 0..=max_rank {
        for b in 0..=max_rank - a {
            for c in 0..=max_rank - a - b {
                if a + b + c == 0 {
                    continue;
                }
                let terms: Vec<(i64, u64)> =
                    [(-1, a), (0, b), (1, c)].into_iter().filter(|&(_, k)| k > 0).collect();
                out.push(BundleSum::new(&terms));
            }
        }
    }
    out
}

fn character_tables() -> Outcome {
    let start = Instant::now();
    let mut compared = 0;
    for l in 1..=6 {
        let g = symmetric(l);
        let table = character_table_uncached(&g).map_err(err)?;
        table.validate().map_err(err)?;
        if l > 5 {
            continue;
        }
        let parts = table.partitions().ok_or("symmetric table without partition labels")?.to_vec();
        for lambda in partitions(l) {
            let rep = SeminormalRep::new(&lambda).map_err(err)?;
            if !rep.satisfies_relations() {
                return Err(format!("seminormal matrices for {lambda:?} violate the Coxeter relations"));
            }
            let row = parts.iter().position(|p| *p == lambda).ok_or(format!("no row for {lambda:?}"))?;
            for (c, class) in g.classes().classes.iter().enumerate() {
                let sigma: &Permutation = g.element(class.representative);
                let brute = Cyclotomic::from_rational(rep.character(sigma).map_err(err)?);
                if table.row(row)[c] != brute {
                    return Err(format!("chi_{lambda:?}({:?}) = {} but matrices give {brute}", class.cycle_type, table.row(row)[c]));
                }
                compared += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(10), format!("l <= 6 orthogonal, {compared} values match seminormal matrices for l <= 5"))
}

fn equivariant_binomial() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a75);
    let mut count = 0;
    for n in 0..=2 {
        for l in 1..=4 {
            for _ in 0..17 {
                let x = random_decomposed(&mut rng, n, 2);
                let r = route_agreement(&x, l).map_err(err)?;
                if !r.passed {
                    return Err(format!("{}: {} vs {}", r.name, r.left, r.right));
                }
                count += 1;
            }
        }
    }
    if count < 200 {
        return Err(format!("only {count} seeded classes"));
    }
    let mut zeros = 0;
    for n in 0..=2 {
        let zero = DecomposedClass::new(n, BundleSum::zero(), BundleSum::zero());
        let tau = tau_checked(&zero, 2).map_err(err)?;
        if tau != EqKClass::zero(&symmetric(2), n).map_err(err)? {
            return Err(format!("tau^2(0) = {tau} on P^{n}"));
        }
        zeros += 1;
    }
    let mut negations = 0;
    for n in 0..=2 {
        for f in small_bundles(2) {
            for l in 1..=4 {
                let r = negation(&f, n, l).map_err(err)?;
                if !r.passed {
                    return Err(format!("{}: {} vs {}", r.name, r.left, r.right));
                }
                negations += 1;
            }
        }
    }
    within(
        start.elapsed(),
        Duration::from_secs(30),
        format!("{count} seeded route agreements, {zeros} zero classes, {negations} negation instances"),
    )
}

fn tau_of_lambda_minus_one() -> Outcome {
    let mut count = 0;
    for f in small_bundles(3) {
        for n in 0..=2 {
            for l in 1..=4 {
                count += all_passed(&tau_of_lambda(&f, n, l).map_err(err)?)?;
            }
        }
    }
    Ok(format!("{count} equalities over rank <= 3, n <= 2, l <= 4"))
}

fn adams_congruences() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xada5);
    let mut count = 0;
    for l in [2, 3, 5] {
        for n in 0..=2 {
            for _ in 0..6 {
                let x = random_decomposed(&mut rng, n, 2);
                let r = adams_congruence(&x, l).map_err(err)?;
                if !r.passed || r.witness.is_none() {
                    return Err(format!("{} without a witness: {}", r.name, r.left));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} seeded classes, each with an ideal witness"))
}

fn k1_and_binomial_sum() -> Outcome {
    for l in [2usize, 3, 5, 7] {
        let e = k1_tensor_power(l, 1).map_err(err)?;
        let mut expected = vec![-1i64; l];
        expected[0] = l as i64 - 1;
        if e.exponents != expected {
            return Err(format!("l = {l}: exponents {:?}", e.exponents));
        }
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        let s = binomial_identity_sum(p);
        if s != Rational::from_integer((-1).into()) {
            return Err(format!("l = {p}: sum {s}"));
        }
    }
    Ok("exponents (l-1, -1, ..., -1) for l in {2,3,5,7}; sum -1 for primes <= 13".into())
}

fn kunneth_and_trace() -> Outcome {
    let mut count = 0;
    for n in 0..=2 {
        for m in 0..=3 {
            for l in 1..=4 {
                count += all_passed(&kunneth(n, m, l).map_err(err)?)?;
            }
        }
    }
    let mut traces = 0;
    for d in 0..=4 {
        for l in 1..=3 {
            traces += all_passed(&[tensor_trace(d, l).map_err(err)?])?;
        }
    }
    Ok(format!("{count} push-forward comparisons, {traces} matrix-trace comparisons"))
}

fn zero_section() -> Outcome {
    let mut count = 0;
    for y in -2..=2 {
        for n in 0..=3 {
            for l in 1..=4 {
                count += all_passed(&[closed_immersion(y, n, l).map_err(err)?])?;
            }
        }
    }
    let values = worked_zero_section_values().map_err(err)?;
    let expected = vec![KClassPn::zero(1), KClassPn::u_pow(1, 1).scale(&Rational::from_integer(2.into()))];
    if values != expected {
        let shown: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        return Err(format!("worked instance gives ({})", shown.join(", ")));
    }
    Ok(format!("{count} instances; l=2, n=1 evaluates to (0, 2u)"))
}

fn adams_riemann_roch_suite() -> Outcome {
    let mut count = 0;
    for n in 0..=3 {
        for m in -3..=3 {
            for l in [2u32, 3] {
                count += all_passed(&[adams_riemann_roch(n, m, l).map_err(err)?])?;
                count += all_passed(&[tau_form_congruence(n, m, l as usize).map_err(err)?])?;
            }
        }
        for l in [2usize, 3] {
            count += all_passed(&[multiplier_congruence(n, l).map_err(err)?])?;
        }
    }
    Ok(format!("{count} ARR, tensor-power-form and multiplier checks"))
}

fn ideal_structure() -> Outcome {
    let mut powers = 0;
    for l in [2usize, 3, 5, 7] {
        let g = cyclic(l);
        let perm = ClassFunction::natural_permutation(&g);
        let regular = ClassFunction::regular(&g);
        for i in 1..l {
            let c = binomial(l as i64, i as i64);
            let expected = regular.scale(&Rational::new(c, BigInt::from(l)));
            if perm.exterior_power(i).map_err(err)? != expected {
                return Err(format!("Lambda^{i} of the permutation module of C_{l} is not free"));
            }
            powers += 1;
        }
    }
    for p in [2u64, 3, 5] {
        let order = modular_quotient_order(p).map_err(err)?;
        if order != BigInt::from(p) {
            return Err(format!("p = {p}: quotient of order {order}"));
        }
    }
    for l in [2usize, 3, 5, 7] {
        let g = cyclic(l);
        let regular = ClassFunction::regular(&g);
        if !cyclotomic_quotient_map(&regular).map_err(err)?.is_zero() {
            return Err(format!("regular representation of C_{l} survives in Z[zeta]"));
        }
        let kernel = cyclotomic_quotient_kernel(l);
        let ones = vec![BigInt::from(1); l];
        let negated: Vec<BigInt> = ones.iter().map(|x| -x).collect();
        if kernel.len() != 1 || (kernel[0] != ones && kernel[0] != negated) {
            return Err(format!("kernel for l = {l} has basis {kernel:?}"));
        }
        let ideal = RepIdeal::new(&g, vec![regular.clone()]).map_err(err)?;
        let kernel_class = ClassFunction::from_multiplicities(&g, &kernel[0]).map_err(err)?;
        if ideal.contains(&kernel_class).map_err(err)?.is_none() {
            return Err(format!("kernel generator for l = {l} is outside ([regular])"));
        }
    }
    Ok(format!("{powers} free exterior powers; modular quotient orders 2, 3, 5; kernels equal ([regular]) for l <= 7"))
}

fn finite_group_congruence() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for g in [cyclic(3), cyclic(4), symmetric(3)] {
        count += all_passed(&congruence_grid(&g, 5).map_err(err)?)?;
    }
    within(start.elapsed(), Duration::from_secs(60), format!("{count} checks over C3, C4, S3 with l <= 5"))
}

fn koszul_suite() -> Outcome {
    let lin = |c: &[i64]| Poly::<Rational>::linear(c);
    let gens = vec![lin(&[1, 0]), lin(&[0, 1]), lin(&[1, 1])];
    let table = KoszulComplex::new(2, gens.clone()).map_err(err)?.homology_dimensions(5);
    let oracle = linear_kernel_oracle(2, &gens, 5).map_err(err)?;
    let expected = vec![vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0], vec![0; 6], vec![0; 6]];
    if table != oracle || table.dims != expected {
        return Err(format!("homology {table} vs kernel oracle {oracle}"));
    }
    let mut conormal = 0;
    for n in 1..=2 {
        for l in 1..=3 {
            let r = diagonal_conormal(n, l, 3).map_err(err)?;
            if !r.passed() {
                return Err(format!("conormal comparison failed: {r}"));
            }
            conormal += 1;
        }
    }
    let mut sections = 0;
    let mut alphas = 0;
    for r in 0..=2 {
        for l in 1..=3 {
            let cert = invariant_sections_generate::<F31>(r, l, 4).map_err(err)?;
            if !cert.passed() {
                return Err(format!("no section certificate within N <= 4: {cert}"));
            }
            sections += 1;
            let proj = alpha_surjective(AlphaMode::Projective, r, l, 4).map_err(err)?;
            if !proj.passed() {
                return Err(format!("projective alpha not surjective by degree 4: {proj}"));
            }
            alphas += 1;
        }
    }
    for size in 1..=2 {
        for l in 1..=3 {
            let aff = alpha_surjective(AlphaMode::Affine, size, l, 4).map_err(err)?;
            if !aff.passed() {
                return Err(format!("affine alpha not surjective: {aff}"));
            }
            alphas += 1;
        }
    }
    Ok(format!(
        "3-generator homology to degree 5, {conormal} conormal comparisons, {sections} section and {alphas} alpha certificates"
    ))
}

fn char_p_suite() -> Outcome {
    for n in 1..=3 {
        for p in [2u32, 3, 5] {
            if !cartier_identity_check(n, p).map_err(err)? {
                return Err(format!("Cartier identity fails for n = {n}, p = {p}"));
            }
        }
    }
    let inv = curve_theta_inverse(2).map_err(err)?;
    let omega = AugmentedTruncated::line(2, "Omega").map_err(err)?;
    let expected = AugmentedTruncated::scalar(2, Rational::from_integer(3.into()))
        .map_err(err)?
        .sub(&omega)
        .scale(&ratio(1, 4).map_err(err)?);
    if inv != expected {
        return Err(format!("theta^2(Omega)^-1 = {inv}"));
    }
    Ok("Cartier identity for n <= 3, p in {2,3,5}; theta^2(Omega)^-1 = (3 - Omega)/4".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 12] = [
        ("character tables", character_tables),
        ("equivariant binomial routes", equivariant_binomial),
        ("tau of lambda_-1", tau_of_lambda_minus_one),
        ("Adams congruence", adams_congruences),
        ("K1 tensor power", k1_and_binomial_sum),
        ("Kunneth push-forward", kunneth_and_trace),
        ("zero-section Riemann-Roch", zero_section),
        ("Adams-Riemann-Roch", adams_riemann_roch_suite),
        ("ideal structure", ideal_structure),
        ("finite-group congruence", finite_group_congruence),
        ("Koszul certificates", koszul_suite),
        ("characteristic p", char_p_suite),
    ];
    let mut failures = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match &outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.2?}): {detail}", k + 1),
            Err(reason) => {
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {reason}", k + 1);
                failures.push(*name);
            }
        }
    }
    assert!(failures.is_empty(), "failed: {failures:?}");
}
