//! Acceptance run. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reestype::monres::{mapping_cone_resolution, pairwise_syzygy_matrix, verify_rank_height, MonomialIdeal};
use reestype::multipliers::{colon_transfer_check, rt_perturbation_experiment};
use reestype::quotient::{fedder_fpure, sample_frobenius_closure};
use reestype::ramsey::{bound_constants, longest_chain, ramsey_number_search, search_oracle, RamseySearch, TupleSequence};
use reestype::rees::{is_relation, rees_presentation, reducible_to_lower_degree, relation_type, two_param_descent, Descent, ReesRing};
use reestype::{Ideal, Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField, QuotientRing};

type Outcome = Result<String, String>;

fn quotient(p: u64, names: &[&str], rels: &str) -> QuotientRing {
    let ring = Arc::new(PolyRing::grevlex(p, names).unwrap());
    let rels = if rels.is_empty() { Vec::new() } else { ring.parse_list(rels).unwrap() };
    QuotientRing::new(ring, rels).unwrap()
}

fn example21() -> QuotientRing {
    quotient(32003, &["x", "y", "z", "w"], "w^2, w*z")
}

fn planes() -> QuotientRing {
    quotient(32003, &["a", "b", "c", "d"], "a*b, a*d, c*b, c*d")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn criterion_1() -> Outcome {
    let r = example21();
    let s = r.ring();
    let mut found = Vec::new();
    for n in [2u32, 3] {
        let start = Instant::now();
        let gens = s.parse_list(&format!("x^{}*y + z^{n}, x^{n}, y^{n}", n - 1)).map_err(e)?;
        let p = rees_presentation(&r, &gens).map_err(e)?;
        let rt = relation_type(&p).map_err(e)?;
        let rel = p.rees_ring().parse(&format!("w*T1^{n} - w*T2^{}*T3", n - 1)).map_err(e)?;
        ensure(is_relation(p.rees_ring(), &rel, &gens).map_err(e)?, || format!("n={n}: wT1^n - wT2^(n-1)T3 is not a relation"))?;
        ensure(!reducible_to_lower_degree(&p, &rel).map_err(e)?, || format!("n={n}: relation reduces to lower degree"))?;
        ensure(rt >= n, || format!("n={n}: rt = {rt} < n"))?;
        within(start, Duration::from_secs(120))?;
        found.push(format!("rt(I_{n}) = {rt} in {:.2?}", start.elapsed()));
    }
    Ok(found.join(", "))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let r = quotient(32003, &["x1", "x2", "x3", "x4"], "");
    let s = r.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for trial in 0..20 {
        let len = rng.gen_range(1..=4);
        let mut vars: Vec<usize> = (0..4).collect();
        for i in (1..4).rev() {
            vars.swap(i, rng.gen_range(0..=i));
        }
        let gens: Vec<Polynomial> = vars[..len]
            .iter()
            .map(|&v| s.scale(rng.gen_range(1..32003), &s.pow(&s.var(v), rng.gen_range(1..=3))))
            .collect();
        let rt = relation_type(&rees_presentation(&r, &gens).map_err(e)?).map_err(e)?;
        let shown: Vec<String> = gens.iter().map(|g| s.format(g)).collect();
        ensure(rt == 1, || format!("trial {trial}: rt({}) = {rt}", shown.join(", ")))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("20 sequences of linear type in {:.2?}", start.elapsed()))
}

/// Relation type read off a Groebner basis of the elimination ideal
/// `(T_i - t g_i) ∩ k[T, x, y]`: the largest T-degree of a basis element
/// that is not already in the ideal of lower-degree basis elements.
fn elimination_oracle(gens: &[&str]) -> Result<u32, String> {
    let names = ["t", "T1", "T2", "T3", "x", "y"].map(String::from).to_vec();
    let e_ring = Arc::new(PolyRing::new(PrimeField::new(32003).map_err(e)?, names, MonomialOrder::Grevlex).map_err(e)?);
    let mut eqs = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        eqs.push(e_ring.parse(&format!("T{} - t*({g})", i + 1)).map_err(e)?);
    }
    let q = Ideal::new(e_ring.clone(), eqs).eliminate(&[0]).map_err(e)?;
    let t_degree = |f: &Polynomial| {
        f.terms().iter().map(|t| (1..=3).map(|i| t.mono.exponent(i)).sum::<u32>()).max().unwrap_or(0)
    };
    let mut basis: Vec<Polynomial> = q.gb().map_err(e)?.to_vec();
    basis.sort_by_key(t_degree);
    let mut rt = 1;
    for (i, g) in basis.iter().enumerate() {
        let d = t_degree(g);
        let lower: Vec<Polynomial> = basis[..i].iter().filter(|h| t_degree(h) < d).cloned().collect();
        if !Ideal::new(e_ring.clone(), lower).contains(g).map_err(e)? {
            rt = rt.max(d);
        }
    }
    Ok(rt)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let r = quotient(32003, &["x", "y"], "");
    let gens = r.ring().parse_list("x^2, x*y, y^2").map_err(e)?;
    let rt = relation_type(&rees_presentation(&r, &gens).map_err(e)?).map_err(e)?;
    let oracle = elimination_oracle(&["x^2", "x*y", "y^2"])?;
    ensure(rt == 2 && oracle == 2, || format!("rt = {rt}, oracle = {oracle}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("rt = oracle = 2 in {:.2?}", start.elapsed()))
}

fn criterion_4() -> Outcome {
    let cases: [(QuotientRing, &str, &str, usize); 4] = [
        (planes(), "a+b, c+d", "a", 0),
        (planes(), "a+b, c+d", "c", 1),
        (example21(), "x, y, z+w", "w", 2),
        (example21(), "x+w, y, z", "w", 0),
    ];
    let mut certified = 0;
    for (r, sop, alpha, idx) in &cases {
        let sop = r.ring().parse_list(sop).map_err(e)?;
        let alpha = r.parse(alpha).map_err(e)?;
        let rep = rt_perturbation_experiment(r, &sop, &alpha, *idx).map_err(e)?;
        ensure(rep.equal(), || format!("rt {} != {} after perturbing", rep.rt_original, rep.rt_perturbed))?;
        if rep.certified {
            certified += 1;
        }
    }
    ensure(certified >= 3, || format!("only {certified} certified instances"))?;
    Ok(format!("{certified} certified instances, all with equal rt"))
}

fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, max_exp: u32) -> Monomial {
    let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
    Monomial::from_exponents(&exps).unwrap()
}

fn random_monomial_ideal(rng: &mut ChaCha8Rng, nvars: usize, ngens: usize) -> MonomialIdeal {
    loop {
        let gens: Vec<Monomial> = (0..ngens).map(|_| random_monomial(rng, nvars, 3)).collect();
        let ideal = MonomialIdeal::new(nvars, gens);
        if !ideal.is_unit() {
            return ideal;
        }
    }
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let r = example21();
    let sop = r.ring().parse_list("x, y, z+w").map_err(e)?;
    let w = r.parse("w").map_err(e)?;
    let one = r.ring().one();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut instances = Vec::new();
    for _ in 0..10 {
        let ngens = rng.gen_range(1..=3);
        instances.push((random_monomial_ideal(&mut rng, 3, ngens), random_monomial(&mut rng, 3, 2)));
    }
    let mut failures_with_one = 0;
    for (iexp, m) in &instances {
        ensure(colon_transfer_check(&r, &w, &sop, iexp, m).map_err(e)?.passes(), || {
            format!("z = w fails on I = {:?}, m = {:?}", iexp.gens(), m)
        })?;
        if !colon_transfer_check(&r, &one, &sop, iexp, m).map_err(e)?.passes() {
            failures_with_one += 1;
        }
    }
    // A deterministic instance where R fails to be Cohen-Macaulay.
    let fixed = MonomialIdeal::new(3, [Monomial::from_exponents(&[1, 0, 0]).unwrap(), Monomial::from_exponents(&[0, 1, 0]).unwrap()]);
    let x3 = Monomial::from_exponents(&[0, 0, 1]).unwrap();
    ensure(colon_transfer_check(&r, &w, &sop, &fixed, &x3).map_err(e)?.passes(), || "z = w fails on (X1, X2) : X3".into())?;
    if !colon_transfer_check(&r, &one, &sop, &fixed, &x3).map_err(e)?.passes() {
        failures_with_one += 1;
    }
    ensure(failures_with_one >= 1, || "z = 1 never fails".into())?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("z = w passes 11 instances, z = 1 fails {failures_with_one} in {:.2?}", start.elapsed()))
}

// Generators of total degree 2..=4, so that few of them absorb the rest.
fn monomial_corpus() -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    (0..20)
        .map(|_| {
            let nvars = rng.gen_range(2..=4);
            let ngens = rng.gen_range(1..=6);
            let gens: Vec<Monomial> = (0..ngens)
                .map(|_| {
                    let mut exps = vec![0u32; nvars];
                    for _ in 0..rng.gen_range(2..=4) {
                        exps[rng.gen_range(0..nvars)] += 1;
                    }
                    Monomial::from_exponents(&exps).unwrap()
                })
                .collect();
            MonomialIdeal::new(nvars, gens)
        })
        .collect()
}

fn ring_for(nvars: usize) -> Arc<PolyRing> {
    let names: Vec<&str> = ["x1", "x2", "x3", "x4"][..nvars].to_vec();
    Arc::new(PolyRing::grevlex(32003, &names).unwrap())
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    for ideal in monomial_corpus() {
        let s = ring_for(ideal.nvars());
        let r = QuotientRing::polynomial(s.clone());
        let c = mapping_cone_resolution(&s, &ideal).map_err(e)?;
        let label = || format!("{:?}", ideal.to_polynomials(&s).iter().map(|g| s.format(g)).collect::<Vec<_>>());
        ensure(c.length() <= ideal.nvars(), || format!("{}: length {} > d", label(), c.length()))?;
        ensure(c.is_complex(&r).map_err(e)?, || format!("{}: differentials do not compose to zero", label()))?;
        let vars: Vec<Polynomial> = (0..s.nvars()).map(|i| s.var(i)).collect();
        let rep = verify_rank_height(&r, &c, Some(&vars)).map_err(e)?;
        ensure(rep.rank_ok() && rep.height_ok(), || format!("{}: rank/height table {:?}", label(), rep.rows))?;
        ensure(rep.radical_ok(), || format!("{}: radical containment fails", label()))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("20 resolutions verified in {:.2?}", start.elapsed()))
}

fn criterion_7() -> Outcome {
    let mut columns = 0;
    for ideal in monomial_corpus().into_iter().filter(|i| i.gens().len() >= 2) {
        let s = ring_for(ideal.nvars());
        let m = pairwise_syzygy_matrix(&s, ideal.gens()).map_err(e)?;
        let gens = ideal.to_polynomials(&s);
        for j in 0..m.cols {
            let col = m.column(j);
            let nonzero = col.iter().filter(|p| !p.is_zero()).count();
            ensure(nonzero == 2, || format!("column {j} has {nonzero} nonzero entries"))?;
            let total = col.iter().zip(&gens).fold(s.zero(), |acc, (c, g)| s.add(&acc, &s.mul(c, g)));
            ensure(total.is_zero(), || format!("column {j} is not a syzygy"))?;
            columns += 1;
        }
    }
    Ok(format!("{columns} columns checked"))
}

fn random_sequence(rng: &mut ChaCha8Rng, d: usize, k: u32, len: usize) -> TupleSequence {
    let tuples = (0..len)
        .map(|i| {
            let total = k + i as u32 + 1;
            let mut t = vec![0u32; d];
            for _ in 0..total {
                t[rng.gen_range(0..d)] += 1;
            }
            t
        })
        .collect();
    TupleSequence::new(d, k, tuples).unwrap()
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    for k in 0..=3 {
        for l in 1..=5 {
            let m = ramsey_number_search(1, k, l, 20).map_err(e)?.value();
            ensure(m == Some(l), || format!("M(1,{k},{l}) = {m:?}"))?;
        }
    }
    let RamseySearch::Found { m, witness } = ramsey_number_search(2, 0, 2, 10).map_err(e)? else {
        return Err("M(2,0,2) not found".into());
    };
    ensure(m == 3 && witness.len() == 2, || format!("M(2,0,2) = {m}, witness length {}", witness.len()))?;
    ensure(longest_chain(&witness).len() < 2, || "witness contains a 2-chain".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut params = Vec::new();
    for (d, k, l) in [(2usize, 0u32, 2usize), (2, 1, 3), (3, 0, 2), (1, 3, 4)] {
        let m = ramsey_number_search(d, k, l, 20).map_err(e)?.value().ok_or("threshold not found")?;
        params.push((d, k, l, m));
    }
    for trial in 0..1000 {
        let (d, k, l, m) = params[trial % params.len()];
        let seq = random_sequence(&mut rng, d, k, m);
        let chain = longest_chain(&seq);
        ensure(chain.len() >= l, || format!("{:?} has no {l}-chain", seq.tuples()))?;
        ensure(chain.windows(2).all(|w| w[0] < w[1] && reestype::ramsey::dominated(&seq.tuples()[w[0]], &seq.tuples()[w[1]])), || {
            format!("bad chain {chain:?}")
        })?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("thresholds confirmed, 1000 random sequences in {:.2?}", start.elapsed()))
}

/// Counts `(i-1)`-tuples of nonnegative integers with sum at most `bound`.
fn enumerate_tuples(width: usize, bound: u128) -> u128 {
    if width == 0 {
        return 1;
    }
    (0..=bound).map(|first| enumerate_tuples(width - 1, bound - first)).sum()
}

fn criterion_9() -> Outcome {
    let mut summary = Vec::new();
    for (d, l) in [(1usize, 2u128), (1, 1), (2, 1)] {
        let bc = bound_constants(d, l, 3, search_oracle(80)).map_err(e)?;
        for i in 1..bc.k.len() {
            ensure(bc.k[i] >= 2 * bc.k[i - 1], || format!("d={d} L={l}: K_{} < 2 K_{}", i + 1, i))?;
            let direct = enumerate_tuples(i, bc.k[i - 1]);
            ensure(bc.m[i] == direct, || format!("d={d} L={l}: M_{} = {} but enumeration gives {direct}", i + 1, bc.m[i]))?;
        }
        summary.push(format!("d={d} L={l} K={:?}", bc.k));
    }
    Ok(summary.join("; "))
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let cases = [
        (2u64, &["x", "y"][..], "x*y", true),
        (2, &["x"][..], "x^2", false),
        (3, &["x", "y"][..], "", true),
        (2, &["x", "y"][..], "y^2 + x^3", false),
        (3, &["x", "y", "z"][..], "x*y, x*z, y*z", true),
    ];
    for (p, names, rels, expected) in cases {
        let r = quotient(p, names, rels);
        let pure = fedder_fpure(r.defining(), p as u32).map_err(e)?;
        let witness = sample_frobenius_closure(&r, 200, p * 1000 + names.len() as u64).map_err(e)?;
        ensure(pure == expected, || format!("({rels}) over F_{p}: criterion says {pure}"))?;
        ensure(pure == witness.is_none(), || format!("({rels}) over F_{p}: sampling disagrees with the criterion"))?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("5 decisions agree with sampling in {:.2?}", start.elapsed()))
}

fn criterion_11() -> Outcome {
    let r = planes();
    let s = r.ring();
    let x = s.parse("a+b").map_err(e)?;
    let y = s.parse("c+d").map_err(e)?;
    let gamma = s.parse("a+b+c+d").map_err(e)?;
    let gens = [x.clone(), y.clone()];
    let rt = relation_type(&rees_presentation(&r, &gens).map_err(e)?).map_err(e)?;
    let rees = ReesRing::new(&r, 2).map_err(e)?;
    let mut degrees = Vec::new();
    for text in ["T1^2*((a-b)*T2 - (c-d)*T1)", "(T1^2 + T2^2)*((a-b)*T2 - (c-d)*T1)"] {
        let f = rees.parse(text).map_err(e)?;
        ensure(is_relation(&rees, &f, &gens).map_err(e)?, || format!("{text} is not a relation"))?;
        let n = rees.relation(f.clone()).map_err(e)?.degree;
        let lead = |g: &Polynomial, deg: u32| {
            rees.coefficients(g).into_iter().find(|(ex, _)| ex[0] == deg && ex[1] == 0).map(|(_, c)| c).unwrap_or_else(|| s.zero())
        };
        let Descent::Lowered { relation, .. } = two_param_descent(&rees, &x, &y, &f, &gamma).map_err(e)? else {
            return Err(format!("{text}: descent did not lower the degree"));
        };
        let g = &relation.poly;
        ensure(is_relation(&rees, g, &gens).map_err(e)?, || format!("{text}: output is not a relation"))?;
        ensure(relation.degree < n, || format!("{text}: degree {} not below {n}", relation.degree))?;
        let (lf, lg) = (lead(&f, n), lead(g, relation.degree));
        ensure(r.is_zero(&s.sub(&lf, &lg)).map_err(e)?, || {
            format!("{text}: leading coefficient {} != {}", s.format(&lg), s.format(&lf))
        })?;
        ensure(rt <= relation.degree.max(1) && rt < n, || format!("{text}: inconsistent with rt = {rt}"))?;
        degrees.push(format!("{n} -> {}", relation.degree));
    }
    Ok(format!("degrees {}, rt = {rt}", degrees.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("example family has rt >= n", criterion_1),
        ("regular sequences are of linear type", criterion_2),
        ("rt(x^2, xy, y^2) matches elimination oracle", criterion_3),
        ("rt unchanged by certified perturbation", criterion_4),
        ("colon transfer with z = w", criterion_5),
        ("mapping-cone corpus satisfies rank and height conditions", criterion_6),
        ("pairwise syzygy columns", criterion_7),
        ("chain thresholds", criterion_8),
        ("bound constants", criterion_9),
        ("Fedder criterion vs Frobenius-closure sampling", criterion_10),
        ("two-parameter descent", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
