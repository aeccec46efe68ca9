//! The registry of verification suites. Each suite declares its parameter
//! schema and expands a validated parameter set into independent tasks.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use taukit_core::characters::{
    character_table, cyclotomic_quotient_kernel, cyclotomic_quotient_map, modular_quotient_order, trivial_injection_checks,
    ClassFunction, RepIdeal,
};
use taukit_core::check::CheckRecord;
use taukit_core::error::Result;
use taukit_core::exact_arith::{binomial, Rational, F31};
use taukit_core::groups::{all_subgroups, cyclic, symmetric, FiniteGroup};
use taukit_core::gset_geometry::{binomial_identity_sum, congruence_grid, induction_adams, k1_tensor_power};
use taukit_core::koszul_graded::{
    alpha_surjective, diagonal_conormal, invariant_sections_generate, linear_kernel_oracle, summation_homotopy_holds,
    AlphaMode, KoszulComplex, Poly,
};
use taukit_core::kspaces::identities::{
    additivity, adams_congruence, bott_congruence, kunneth, multiplicativity, negation, restriction, route_agreement,
    tau_of_lambda, tensor_trace, IdealVariant,
};
use taukit_core::kspaces::rr::{
    adams_riemann_roch, closed_immersion, ideal_is_unit, multiplier_congruence, tau_form_congruence,
    worked_zero_section_values,
};
use taukit_core::kspaces::{random_decomposed, tau_checked, BundleSum, DecomposedClass, EqKClass, KClassPn};
use taukit_core::lambda::{cartier_identity_check, AugmentedTruncated};

use crate::params::{ParamSpec, Params};

/// One independent unit of work; tasks of a suite may run in any order.
pub type Task = Box<dyn Fn() -> Result<Vec<CheckRecord>> + Send + Sync>;

pub struct Suite {
    pub name: &'static str,
    /// The statement the suite verifies, in one line.
    pub statement: &'static str,
    pub params: &'static [ParamSpec],
    pub build: fn(&Params) -> Vec<Task>,
}

const N: ParamSpec = ParamSpec::int("n", 0, 3, "1", "dimension of P^n");
const CORPUS: ParamSpec = ParamSpec::int("corpus", 1, 2000, "20", "number of seeded random classes");
const COEFF: ParamSpec = ParamSpec::int("coeff", 1, 4, "2", "bound on line multiplicities in random classes");
const PRIMES: &[i64] = &[2, 3, 5, 7];

pub const SUITES: &[Suite] = &[
    Suite {
        name: "equivariant-binomial",
        statement: "equivariant binomial theorem: symbol, cross-product and brute-force routes to tau^l agree on K_0(P^n)",
        params: &[N, ParamSpec::int("l", 0, 5, "3", "tensor power"), CORPUS, COEFF],
        build: equivariant_binomial,
    },
    Suite {
        name: "tau-mult",
        statement: "tau^l is additive in the equivariant sense and multiplicative",
        params: &[N, ParamSpec::int("l", 0, 4, "3", "tensor power"), CORPUS, COEFF],
        build: tau_mult,
    },
    Suite {
        name: "tau-negation",
        statement: "tau^l(-[F]) = (-1)^l times the sign-twisted l-th tensor power of F",
        params: &[N, ParamSpec::int("l", 0, 5, "3", "tensor power"), CORPUS, COEFF],
        build: tau_negation,
    },
    Suite {
        name: "tau-restriction",
        statement: "restricting tau^(i+j) to S_i x S_j gives the external product of tau^i and tau^j",
        params: &[N, ParamSpec::int("l", 2, 5, "3", "tensor power, split as i + j"), CORPUS, COEFF],
        build: tau_restriction,
    },
    Suite {
        name: "lambda-bott",
        statement: "tau^l(lambda_-1 F) = lambda_-1(F (x) O[I_l]) and theta^l congruent to lambda_-1(F (x) H) modulo exterior powers",
        params: &[
            N,
            ParamSpec::int("l", 1, 4, "3", "tensor power"),
            ParamSpec::int("rank", 1, 3, "2", "maximal rank of F"),
            ParamSpec::word("variant", &["proper", "all"], "proper", "exterior powers i = 1..l-1 (proper) or 1..l (all)"),
        ],
        build: lambda_bott,
    },
    Suite {
        name: "adams-congruence",
        statement: "tau^l(x) - psi^l(x) lies in ([O[C_l]]) K_0(C_l, P^n), with an explicit witness",
        params: &[N, ParamSpec::one_of("l", PRIMES, "3", "prime order of the cyclic group"), CORPUS, COEFF],
        build: adams_congruence_suite,
    },
    Suite {
        name: "k1-tensor",
        statement: "tau^l of the unit beta in K_1 of a point is (beta^(l-1), beta^-1, ..., beta^-1)",
        params: &[
            ParamSpec::one_of("l", &[2, 3, 5, 7, 11, 13], "5", "prime tensor power"),
            ParamSpec::int("e", -3, 3, "1", "exponent of beta"),
        ],
        build: k1_tensor,
    },
    Suite {
        name: "binomial-identity",
        statement: "sum over 0 < i < l of (-1)^(l-i) C(l,i) i / l equals -1 for a prime l",
        params: &[ParamSpec::one_of("l", &[2, 3, 5, 7, 11, 13, 17, 19, 23], "13", "prime")],
        build: binomial_identity,
    },
    Suite {
        name: "kunneth",
        statement: "Kunneth formula: pushing tau^l forward along (P^n)^l -> point equals tau^l of the push-forward",
        params: &[
            N,
            ParamSpec::int("m", 0, 5, "3", "largest twist O(m)"),
            ParamSpec::int("l", 1, 5, "3", "tensor power"),
            ParamSpec::int("d", 0, 5, "3", "largest dimension for the matrix-trace oracle"),
        ],
        build: kunneth_suite,
    },
    Suite {
        name: "closed-immersion-rr",
        statement: "Riemann-Roch for the zero section: tau^l(i_* y) = i_*(lambda_-1(n H) tau^l(y))",
        params: &[
            ParamSpec::int("n", 0, 4, "2", "rank of the trivial bundle"),
            ParamSpec::int("l", 1, 5, "3", "tensor power"),
            ParamSpec::int("y", 0, 5, "2", "integers y range over -y..=y"),
        ],
        build: closed_immersion_suite,
    },
    Suite {
        name: "arr",
        statement: "Adams-Riemann-Roch for P^n -> point over Z[1/l], and its tensor-power form modulo the ideal",
        params: &[
            ParamSpec::int("n", 0, 4, "2", "dimension of P^n"),
            ParamSpec::int("m", 0, 5, "3", "twists h^m range over -m..=m"),
            ParamSpec::one_of("l", PRIMES, "2", "prime"),
        ],
        build: arr_suite,
    },
    Suite {
        name: "ideal-structure",
        statement: "exterior powers of O[I_l] are free, R(C_l)/([regular]) is Z[zeta_l] over C and Z/l over F_l, and K_0 injects",
        params: &[ParamSpec::one_of("l", PRIMES, "5", "prime order of the cyclic group")],
        build: ideal_structure,
    },
    Suite {
        name: "gbundle-rr",
        statement: "tensor powers of G-bundles on finite G-sets commute with push-forward modulo ([O[C_l]]); Adams operations commute with induction",
        params: &[
            ParamSpec::word("group", &["C2", "C3", "C4", "C5", "S3"], "C3", "acting group"),
            ParamSpec::int("l", 2, 7, "5", "largest prime tensor power"),
        ],
        build: gbundle_rr,
    },
    Suite {
        name: "koszul",
        statement: "Koszul homology, the conormal module of the diagonal, invariant sections and surjectivity of alpha",
        params: &[
            ParamSpec::int("n", 1, 2, "2", "variables of B = k[x_1..x_n]"),
            ParamSpec::int("r", 0, 2, "2", "projective space P^r for sections and alpha"),
            ParamSpec::int("l", 1, 3, "3", "tensor power"),
            ParamSpec::int("bound", 1, 5, "4", "degree bound D and section bound N"),
        ],
        build: koszul_suite,
    },
    Suite {
        name: "charp",
        statement: "prod(1 - x_i^p) = lambda_-1 times theta^p as symmetric functions, and theta^p(Omega)^-1 on a curve",
        params: &[ParamSpec::int("n", 1, 4, "3", "number of variables"), ParamSpec::one_of("p", PRIMES, "3", "prime")],
        build: charp_suite,
    },
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

fn task(f: impl Fn() -> Result<Vec<CheckRecord>> + Send + Sync + 'static) -> Task {
    Box::new(f)
}

fn one(f: impl Fn() -> Result<CheckRecord> + Send + Sync + 'static) -> Task {
    Box::new(move || Ok(vec![f()?]))
}

fn rng(p: &Params) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(p.seed())
}

/// A seeded sum of at most three lines with twists in `-2..=2`.
fn random_bundle(rng: &mut ChaCha8Rng, bound: u64) -> BundleSum {
    let k = rng.gen_range(1..=3);
    let terms: Vec<(i64, u64)> = (0..k).map(|_| (rng.gen_range(-2..=2), rng.gen_range(1..=bound))).collect();
    BundleSum::new(&terms)
}

fn corpus(p: &Params) -> Vec<DecomposedClass> {
    let mut r = rng(p);
    (0..p.usize("corpus")).map(|_| random_decomposed(&mut r, p.usize("n"), p.int("coeff") as u64)).collect()
}

fn equivariant_binomial(p: &Params) -> Vec<Task> {
    let (n, l) = (p.usize("n"), p.usize("l"));
    let mut tasks: Vec<Task> = corpus(p).into_iter().map(|x| one(move || route_agreement(&x, l))).collect();
    tasks.push(one(move || {
        let zero = DecomposedClass::new(n, BundleSum::zero(), BundleSum::zero());
        let expected = if l == 0 { EqKClass::one(&symmetric(0), n)? } else { EqKClass::zero(&symmetric(l), n)? };
        Ok(CheckRecord::equality(format!("tau^{l}(0) on P^{n}"), &tau_checked(&zero, l)?, &expected))
    }));
    tasks
}

fn tau_mult(p: &Params) -> Vec<Task> {
    let l = p.usize("l");
    let xs = corpus(p);
    let ys = corpus(&{
        let mut q = p.clone();
        q.0.insert("seed".into(), crate::params::ParamValue::Int(p.seed().wrapping_add(1) as i64));
        q
    });
    xs.into_iter()
        .zip(ys)
        .map(|(x, y)| task(move || Ok(vec![additivity(&x, &y, l)?, multiplicativity(&x, &y, l)?])))
        .collect()
}

fn tau_negation(p: &Params) -> Vec<Task> {
    let (n, l) = (p.usize("n"), p.usize("l"));
    let mut r = rng(p);
    (0..p.usize("corpus"))
        .map(|_| {
            let f = random_bundle(&mut r, p.int("coeff") as u64);
            one(move || negation(&f, n, l))
        })
        .collect()
}

fn tau_restriction(p: &Params) -> Vec<Task> {
    let l = p.usize("l");
    corpus(p)
        .into_iter()
        .map(|x| task(move || (1..l).map(|i| restriction(&x, i, l - i)).collect()))
        .collect()
}

fn lambda_bott(p: &Params) -> Vec<Task> {
    let (n, l, rank) = (p.usize("n"), p.usize("l"), p.int("rank") as u64);
    let variant = if p.word("variant") == "all" { IdealVariant::AllPowers } else { IdealVariant::ProperPowers };
    let mut tasks = Vec::new();
    for a in 0..=rank {
        for b in 0..=rank - a {
            for c in 0..=rank - a - b {
                if a + b + c == 0 {
                    continue;
                }
                let terms: Vec<(i64, u64)> = [(-1, a), (0, b), (1, c)].into_iter().filter(|&(_, k)| k > 0).collect();
                let f = BundleSum::new(&terms);
                tasks.push(task(move || tau_of_lambda(&f, n, l)));
            }
        }
    }
    if l >= 2 {
        tasks.push(task(move || {
            let g = symmetric(l);
            let k = character_table(&g)?.num_irreducibles();
            let mut out = Vec::new();
            for i in 0..k {
                let v = ClassFunction::irreducible(&g, i)?;
                for m in -1..=1 {
                    out.push(bott_congruence(&v, m, n, variant)?);
                }
            }
            Ok(out)
        }));
    }
    tasks
}

fn adams_congruence_suite(p: &Params) -> Vec<Task> {
    let l = p.usize("l");
    corpus(p)
        .into_iter()
        .map(|x| {
            one(move || {
                let r = adams_congruence(&x, l)?;
                Ok(if r.witness.is_none() { CheckRecord { passed: false, ..r } } else { r })
            })
        })
        .collect()
}

fn k1_tensor(p: &Params) -> Vec<Task> {
    let (l, e) = (p.usize("l"), p.int("e"));
    vec![one(move || {
        let got = k1_tensor_power(l, e)?;
        let mut expected = vec![-e; l];
        expected[0] = (l as i64 - 1) * e;
        let expected = taukit_core::gset_geometry::K1Element { l, exponents: expected };
        Ok(CheckRecord::equality(format!("tau^{l}(beta^{e}) in K_1(C_l, pt)"), &got, &expected))
    })]
}

fn binomial_identity(p: &Params) -> Vec<Task> {
    let l = p.int("l") as u64;
    vec![one(move || {
        Ok(CheckRecord::equality(
            format!("sum of (-1)^(l-i) C(l,i) i / l for l = {l}"),
            &binomial_identity_sum(l),
            &Rational::from_integer((-1).into()),
        ))
    })]
}

fn kunneth_suite(p: &Params) -> Vec<Task> {
    let (n, l) = (p.usize("n"), p.usize("l"));
    let mut tasks: Vec<Task> = (0..=p.int("m")).map(|m| task(move || kunneth(n, m, l))).collect();
    for d in 0..=p.usize("d") {
        tasks.push(one(move || tensor_trace(d, l.min(3))));
    }
    tasks
}

fn closed_immersion_suite(p: &Params) -> Vec<Task> {
    let (n, l, y) = (p.usize("n"), p.usize("l"), p.int("y"));
    let mut tasks: Vec<Task> = (-y..=y).map(|y| one(move || closed_immersion(y, n, l))).collect();
    tasks.push(one(|| {
        let values = worked_zero_section_values()?;
        let expected = vec![KClassPn::zero(1), KClassPn::u_pow(1, 1).scale(&Rational::from_integer(2.into()))];
        let show = |v: &[KClassPn]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        Ok(CheckRecord::boolean(
            "tau^2(i_*(1)) on P^1 has class values (0, 2u)",
            values == expected,
            format!("({})", show(&values)),
            format!("({})", show(&expected)),
        ))
    }));
    tasks
}

fn arr_suite(p: &Params) -> Vec<Task> {
    let (n, l, m) = (p.usize("n"), p.usize("l"), p.int("m"));
    let mut tasks: Vec<Task> = (-m..=m)
        .map(|m| task(move || Ok(vec![adams_riemann_roch(n, m, l as u32)?, tau_form_congruence(n, m, l)?])))
        .collect();
    tasks.push(one(move || multiplier_congruence(n, l)));
    tasks
}

fn ideal_structure(p: &Params) -> Vec<Task> {
    let l = p.usize("l");
    vec![
        task(move || {
            let g = cyclic(l);
            let perm = ClassFunction::natural_permutation(&g);
            let regular = ClassFunction::regular(&g);
            (1..l)
                .map(|i| {
                    let expected = regular.scale(&Rational::new(binomial(l as i64, i as i64), (l as i64).into()));
                    Ok(CheckRecord::equality(
                        format!("Lambda^{i}(O[I_{l}]) = (C({l},{i})/{l}) O[C_{l}]"),
                        &perm.exterior_power(i)?,
                        &expected,
                    ))
                })
                .collect()
        }),
        one(move || {
            let order = modular_quotient_order(l as u64)?;
            Ok(CheckRecord::equality(format!("order of K_0(C_{l}, F_{l})/([F_{l}[C_{l}]])"), &order, &(l as u64).into()))
        }),
        task(move || {
            let g = cyclic(l);
            let regular = ClassFunction::regular(&g);
            let image = cyclotomic_quotient_map(&regular)?;
            let kernel = cyclotomic_quotient_kernel(l);
            let ideal = RepIdeal::new(&g, vec![regular])?;
            let mut out = vec![CheckRecord::boolean(
                format!("O[C_{l}] maps to 0 in Z[zeta_{l}]"),
                image.is_zero(),
                image.to_string(),
                "0",
            )];
            out.push(CheckRecord::boolean(
                format!("kernel of R(C_{l}) -> Z[zeta_{l}] has rank 1"),
                kernel.len() == 1,
                format!("{} generators", kernel.len()),
                "1 generator",
            ));
            for v in &kernel {
                let x = ClassFunction::from_multiplicities(&g, v)?;
                let w = ideal.contains(&x)?;
                out.push(CheckRecord::membership(
                    format!("kernel generator of R(C_{l}) -> Z[zeta_{l}] in ([O[C_{l}]])"),
                    &x,
                    "([O[C_l]])",
                    w.map(|w| w.multipliers.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("; ")),
                ));
            }
            Ok(out)
        }),
        task(move || trivial_injection_checks(l)),
        task(move || {
            let g = cyclic(l);
            let proper = ideal_is_unit(&g, IdealVariant::ProperPowers, None)?;
            let all = ideal_is_unit(&g, IdealVariant::AllPowers, None)?;
            Ok(vec![
                CheckRecord::boolean(
                    format!("(Lambda^i O[I_{l}], i < {l}) is a proper ideal of R(C_{l})"),
                    !proper,
                    format!("unit: {proper}"),
                    "unit: false",
                ),
                CheckRecord::boolean(
                    format!("(Lambda^i O[I_{l}], i <= {l}) is the unit ideal of R(C_{l})"),
                    all,
                    format!("unit: {all}"),
                    "unit: true",
                ),
            ])
        }),
    ]
}

fn named_group(name: &str) -> Arc<FiniteGroup> {
    match name {
        "S3" => symmetric(3),
        c => cyclic(c[1..].parse().expect("schema admits C<k> only")),
    }
}

fn gbundle_rr(p: &Params) -> Vec<Task> {
    let group = p.word("group").to_string();
    let max_l = p.usize("l");
    let mut tasks: Vec<Task> = vec![task({
        let group = group.clone();
        move || congruence_grid(&named_group(&group), max_l)
    })];
    tasks.push(task(move || {
        let g = named_group(&group);
        let mut out = Vec::new();
        for l in (2..=max_l).filter(|&l| taukit_core::exact_arith::is_prime(l as u64) && !g.order().is_multiple_of(l)) {
            for emb in all_subgroups(&g)? {
                let k = character_table(emb.sub())?.num_irreducibles();
                for i in 0..k {
                    out.push(induction_adams(&emb, &ClassFunction::irreducible(emb.sub(), i)?, l)?);
                }
            }
        }
        Ok(out)
    }));
    tasks
}

fn koszul_suite(p: &Params) -> Vec<Task> {
    let (n, r, l, bound) = (p.usize("n"), p.usize("r"), p.usize("l"), p.int("bound") as u32);
    let mut tasks: Vec<Task> = vec![task(move || {
        let lin = |c: &[i64]| Poly::<Rational>::linear(c);
        let mut out = Vec::new();
        for (label, gens) in [
            ("(x, y)", vec![lin(&[1, 0]), lin(&[0, 1])]),
            ("(x, y, x + y)", vec![lin(&[1, 0]), lin(&[0, 1]), lin(&[1, 1])]),
            ("(1, x)", vec![Poly::constant(2, Rational::from_integer(1.into())), lin(&[1, 0])]),
        ] {
            let complex = KoszulComplex::new(2, gens.clone())?;
            out.push(CheckRecord::boolean(
                format!("Koszul differentials of {label} square to zero"),
                complex.d_squared_vanishes(bound)?,
                "d^2 = 0",
                "d^2 = 0",
            ));
            let table = complex.homology_dimensions(bound + 1);
            let oracle = linear_kernel_oracle(2, &gens, bound + 1)?;
            out.push(CheckRecord::equality(format!("Koszul homology of {label} in k[x, y]"), &table, &oracle));
        }
        Ok(out)
    })];
    tasks.push(task(move || {
        (1..=l)
            .map(|k| {
                Ok(CheckRecord::boolean(
                    format!("Koszul complex of k^{k} -> k is contracted by e_0 ^ -"),
                    summation_homotopy_holds::<Rational>(k),
                    "dh + hd = id",
                    "dh + hd = id",
                ))
            })
            .collect()
    }));
    for nn in 1..=n {
        for ll in 1..=l {
            tasks.push(one(move || {
                let rep = diagonal_conormal(nn, ll, bound.min(3))?;
                Ok(CheckRecord::boolean(
                    format!("I/I^2 = Omega (x) H for B = k[{nn} vars], l = {ll}"),
                    rep.passed(),
                    rep.to_string(),
                    "characters of Omega (x) H, alpha bijective and equivariant",
                ))
            }));
            tasks.push(one(move || {
                let rep = alpha_surjective(AlphaMode::Affine, nn, ll, bound)?;
                Ok(CheckRecord::boolean(format!("affine alpha onto I, {nn} generators, l = {ll}"), rep.passed(), rep.to_string(), "surjective"))
            }));
        }
    }
    for rr in 0..=r {
        for ll in 1..=l {
            tasks.push(one(move || {
                let cert = invariant_sections_generate::<F31>(rr, ll, bound)?;
                Ok(CheckRecord::boolean(
                    format!("invariant sections generate on (P^{rr})^{ll}, N <= {bound}"),
                    cert.passed(),
                    cert.to_string(),
                    "certified",
                ))
            }));
            tasks.push(one(move || {
                let rep = alpha_surjective(AlphaMode::Projective, rr, ll, bound)?;
                Ok(CheckRecord::boolean(
                    format!("projective alpha on P^{rr}, l = {ll}, D = {bound}"),
                    rep.passed(),
                    rep.to_string(),
                    "surjective in high degrees",
                ))
            }));
        }
    }
    tasks
}

fn charp_suite(p: &Params) -> Vec<Task> {
    let (n, prime) = (p.usize("n"), p.int("p") as u64);
    vec![
        one(move || {
            Ok(CheckRecord::boolean(
                format!("prod (1 - x_i^{prime}) = prod (1 - x_i) prod (1 + ... + x_i^{}) in {n} variables", prime - 1),
                cartier_identity_check(n, prime as u32)?,
                "polynomial and elementary-symmetric forms agree",
                "agree",
            ))
        }),
        one(move || {
            let omega = AugmentedTruncated::line(prime, "Omega")?;
            let theta = omega.bott_theta_line();
            let direct = theta.inverse()?;
            let pq = Rational::from_integer(prime.into());
            let closed = AugmentedTruncated::scalar(prime, Rational::from_integer(2.into()) / &pq)?
                .sub(&theta.scale(&(Rational::from_integer(1.into()) / (&pq * &pq))));
            Ok(CheckRecord::equality(format!("theta^{prime}(Omega)^-1 = 2/p - theta^{prime}(Omega)/p^2"), &direct, &closed))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_consistent() {
        assert!(SUITES.len() >= 14);
        for (i, s) in SUITES.iter().enumerate() {
            assert!(SUITES[i + 1..].iter().all(|t| t.name != s.name), "duplicate {}", s.name);
            for spec in s.params {
                assert!(spec.parse(spec.default).is_ok(), "{}: default of {}", s.name, spec.key);
                assert_ne!(spec.key, "seed");
            }
        }
    }
}
