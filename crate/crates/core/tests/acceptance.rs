use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use torbord::bier::{facet_cone_check, h_vector, h_vector_bier, BierSphere};
use torbord::bordism::{self, basis_expansions, decompose_alpha, generator_from_alpha};
use torbord::charnum::{self, immersion_bounds_for_m, sharp_immersion_family, xi_values};
use torbord::complex::fixtures::{e1, e3, e4, e5a, e5b, k};
use torbord::enumerate::{all_complexes, enumerate, sample_complexes, write_jsonl};
use torbord::enumerate::{EnumerateOptions, Find, Source};
use torbord::gamma::{gamma_table, gamma_vector, is_eigenvector, product_chern};
use torbord::oracle::{oracle_chern_equal, verify};
use torbord::symfun::{matrix_a, matrix_b, partitions, todd_coefficients, Partition};
use torbord::vectors::{
    alpha_vector, egf_identity_holds, mu_vector, stirling_identity_holds, Mode,
};
use torbord::SimplicialComplex;

type Check = Result<(), String>;

type Criterion = (&'static str, &'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: torbord::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec())
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn three_points() -> SimplicialComplex {
    k(4, &[&[1], &[2], &[3]])
}

fn ac1() -> Check {
    let expect: [(usize, &[usize], &[i64]); 4] = [
        (3, &[1, 1], &[9, 8, 8]),
        (3, &[2], &[3, 4, 4]),
        (4, &[1, 1, 1], &[64, 56, 48, 48]),
        (4, &[2, 1], &[24, 24, 24, 24]),
    ];
    for (m, p, v) in expect {
        let g = lib(gamma_table(m))?;
        let got = g.get(&part(p)).ok_or(format!("no gamma for {p:?}"))?;
        ensure(got.values() == big(v).as_slice(), || format!("gamma_{p:?} = {:?}", got.values()))?;
    }
    Ok(())
}

fn ac2() -> Check {
    let p = part(&[1, 1, 1]);
    let prod = lib(product_chern(4, 1, &p))?;
    let g = lib(gamma_vector(4, &p))?;
    ensure(prod == BigInt::from(54), || format!("product_chern = {prod}"))?;
    ensure(*g.get(1) == BigInt::from(56), || format!("gamma_111,1 = {}", g.get(1)))?;
    for j in 0..4 {
        let pj = lib(product_chern(4, j, &p))?;
        ensure(!(g.get(j) - &pj).bit(0), || format!("mod 2 differs at j = {j}"))?;
    }
    Ok(())
}

fn ac3() -> Check {
    let at = matrix_a(4).transpose();
    let shown = vec![
        vec![-1, 4, -6, 4],
        vec![0, 1, -3, 3],
        vec![0, 0, -1, 2],
        vec![0, 0, 0, 1],
    ];
    ensure(at == shown, || format!("A^t = {at:?}"))?;
    for m in 1..=12 {
        ensure(matrix_a(m).is_involution(), || format!("A^2 != E at m = {m}"))?;
        ensure(matrix_b(m).is_involution(), || format!("B^2 != E at m = {m}"))?;
    }
    Ok(())
}

fn ac4() -> Check {
    let k = e1();
    let alpha = lib(alpha_vector(&k, Mode::Checked))?;
    let mu = lib(mu_vector(&k, Mode::Checked))?;
    ensure(alpha == [-1, 1, 0, 1], || format!("alpha = {alpha:?}"))?;
    ensure(mu == [1, -3, 3, 0], || format!("mu = {mu:?}"))?;
    let from_alpha = lib(decompose_alpha(&alpha))?;
    let from_mu = lib(decompose_alpha(&mu))?;
    ensure(from_alpha.reduced == from_mu.reduced, || {
        format!("{} vs {}", from_alpha.reduced_expression(), from_mu.reduced_expression())
    })?;
    for p in partitions(3) {
        let g = lib(gamma_vector(4, &p))?;
        ensure(g.pair(&alpha) == g.pair(&mu), || format!("pairing differs at {p}"))?;
    }
    // basis order is [X_3], [X_1]
    let rows = lib(basis_expansions(4))?;
    ensure(rows[2] == big(&[1, 0]), || format!("[X_2] = {:?}", rows[2]))?;
    let two_x1_minus_x2: Vec<BigInt> =
        rows[1].iter().zip(&rows[2]).map(|(a, b)| a * 2 - b).collect();
    ensure(rows[0] == two_x1_minus_x2, || format!("[X_0] = {:?}", rows[0]))?;
    ensure(from_alpha.reduced_expression() == "2[X_3] - [X_1]", || from_alpha.reduced_expression())
}

fn ac5() -> Check {
    for (a, b) in [(three_points(), e1()), (e5a(), e5b())] {
        ensure(lib(bordism::f_criterion(&a, &b))?, || format!("f-criterion fails for {a} / {b}"))?;
        ensure(lib(bordism::h_criterion(&a, &b))?, || format!("h-criterion fails for {a} / {b}"))?;
        ensure(lib(oracle_chern_equal(&a, &b))?, || format!("oracle Chern numbers differ for {a} / {b}"))?;
    }
    ensure(!lib(bordism::f_criterion(&e1(), &e4()))?, || "E1 / E4 wrongly bordant".into())
}

fn ac6() -> Check {
    let td2 = todd_coefficients(2);
    let want2 = [(part(&[2]), ratio(1, 12)), (part(&[1, 1]), ratio(1, 12))];
    for (p, t) in &want2 {
        let got = td2.iter().find(|(q, _)| q == p).map(|(_, r)| r.clone());
        ensure(got.as_ref() == Some(t), || format!("tau_{p} = {got:?}"))?;
    }
    for (p, t) in todd_coefficients(3) {
        let want = if p == part(&[2, 1]) { ratio(1, 24) } else { ratio(0, 1) };
        ensure(t == want, || format!("tau_{p} = {t}"))?;
    }
    for m in 3..=7 {
        let xi = lib(xi_values(m))?;
        ensure(xi.iter().all(|x| x.is_one()), || format!("xi at m = {m}: {xi:?}"))?;
    }
    let mut tested = 0;
    for m in 3..=5 {
        for k in lib(all_complexes(m))?.iter().step_by(if m == 5 { 25 } else { 1 }) {
            ensure(lib(charnum::todd_genus(k))?.is_one(), || format!("Td != 1 for {k}"))?;
            tested += 1;
        }
    }
    for m in 6..=7 {
        for k in lib(sample_complexes(m, 40, 6))? {
            ensure(lib(charnum::todd_genus(&k))?.is_one(), || format!("Td != 1 for {k}"))?;
            tested += 1;
        }
    }
    ensure(tested > 400, || format!("only {tested} complexes tested"))
}

fn ac7() -> Check {
    let mut complexes = Vec::new();
    for m in 2..=4 {
        complexes.extend(lib(all_complexes(m))?);
    }
    for m in 5..=7 {
        let sample = lib(sample_complexes(m, 200, 2024 + m as u64))?;
        ensure(sample.len() >= 200, || format!("only {} samples at m = {m}", sample.len()))?;
        complexes.extend(sample);
    }
    let mut compared = 0;
    for k in &complexes {
        let r = lib(verify(k))?;
        compared += r.compared;
        if let Some(mm) = r.mismatches.first() {
            return Err(format!("{k}: {mm}"));
        }
    }
    ensure(compared > 0, || "nothing compared".into())
}

fn invariants(k: &SimplicialComplex) -> Check {
    let m = k.m();
    let alpha = lib(alpha_vector(k, Mode::Checked))?;
    let mu = lib(mu_vector(k, Mode::Checked))?;
    let chi = k.euler_characteristic();
    let dual = k.alexander_dual();
    ensure(alpha.iter().sum::<i64>() == 1, || format!("sum alpha != 1 for {k}"))?;
    ensure(alpha[0] == 1 - chi, || format!("alpha_0 != 1 - chi for {k}"))?;
    ensure(mu == lib(alpha_vector(&dual, Mode::Checked))?, || format!("mu != alpha(dual) for {k}"))?;
    ensure(dual.alexander_dual() == *k, || format!("dual not an involution for {k}"))?;
    let bier = BierSphere::new(k);
    let h = h_vector(&bier.f_vector(), m - 1);
    ensure(h.iter().eq(h.iter().rev()), || format!("h(Bier) not palindromic for {k}"))?;
    ensure(h == h_vector_bier(k), || format!("h(Bier) formula differs for {k}"))?;
    let chi_y = lib(charnum::chi_y(k))?;
    ensure(chi_y.is_palindromic(), || format!("chi_y not palindromic for {k}"))?;
    let euler = lib(charnum::euler_characteristic_x(k))?;
    let by_alpha: i64 = alpha.iter().enumerate().map(|(p, a)| a * (1 << p) * (m - p) as i64).sum();
    let top = *bier.f_vector().last().unwrap();
    ensure(euler == top && euler == by_alpha, || format!("chi(X) routes differ for {k}"))?;
    let sign = lib(charnum::signature(k))?;
    let want = if m % 2 == 1 { 1 - chi } else { 0 };
    ensure(sign == want, || format!("signature {sign} for {k}"))?;
    ensure(egf_identity_holds(&alpha, &mu), || format!("EGF identity fails for {k}"))?;
    ensure(stirling_identity_holds(&alpha, &k.f_vector(), 6), || format!("Stirling identity fails for {k}"))?;
    if m <= 6 {
        ensure(lib(facet_cone_check(k))?, || format!("fan not unimodular for {k}"))?;
    }
    let g = lib(generator_from_alpha(&alpha))?;
    ensure(g.is_generator == (g.milnor.abs() == g.milnor_divisor), || format!("generator verdict for {k}"))
}

fn ac8() -> Check {
    for m in 2..=5 {
        for k in lib(all_complexes(m))? {
            invariants(&k)?;
        }
    }
    for m in 6..=7 {
        for k in lib(sample_complexes(m, 300, 8))? {
            invariants(&k)?;
        }
    }
    for m in 2..=8 {
        for g in lib(gamma_table(m))?.entries() {
            ensure(is_eigenvector(g), || format!("A^t gamma != gamma at m = {m}, I = {}", g.partition()))?;
        }
    }
    Ok(())
}

fn ac9() -> Check {
    let void5 = lib(SimplicialComplex::void(5))?;
    let cases = [(e3(), 3), (e4(), 2), (void5, 5)];
    for (k, s) in cases {
        let cert = lib(bordism::is_polynomial_generator(&k))?;
        ensure(cert.is_generator, || format!("{k} not flagged"))?;
        ensure(cert.milnor.abs() == s && cert.milnor_divisor == s, || {
            format!("{k}: s = {}, m = {}", cert.milnor, cert.milnor_divisor)
        })?;
    }
    let e1c = lib(bordism::is_polynomial_generator(&e1()))?;
    ensure(e1c.is_generator && e1c.witness == Some(-1), || format!("E1: {e1c:?}"))?;
    let void4 = lib(SimplicialComplex::void(4))?;
    let c = lib(bordism::is_polynomial_generator(&void4))?;
    ensure(!c.is_generator && c.witness == Some(2), || format!("void on [4]: {c:?}"))
}

fn ac10() -> Check {
    let b = immersion_bounds_for_m(5);
    ensure(b.k_max == 3 && b.n_real_min == 7 && b.n_complex_min == 14, || format!("{b:?}"))?;
    for n in 2..=4 {
        let fam = lib(sharp_immersion_family(n))?;
        let want = 2 * n - n.count_ones() as usize;
        ensure(fam.bound() == want && fam.product_bound() == want, || {
            format!("n = {n}: bound {} / {}", fam.bound(), fam.product_bound())
        })?;
    }
    Ok(())
}

fn ac11() -> Check {
    let run = |source| -> Result<Vec<u8>, String> {
        let hits = lib(enumerate(&EnumerateOptions { m: 4, find: Find::All, source }))?;
        let mut buf = Vec::new();
        write_jsonl(&hits, &mut buf).map_err(|e| e.to_string())?;
        Ok(buf)
    };
    let a = run(Source::Exhaustive)?;
    let b = run(Source::Exhaustive)?;
    ensure(!a.is_empty() && a == b, || "exhaustive runs differ".into())?;
    let c = run(Source::Sample { count: 50, seed: 11 })?;
    let d = run(Source::Sample { count: 50, seed: 11 })?;
    ensure(c == d, || "seeded runs differ".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC1", "gamma tables for m = 3, 4", ac1, Duration::from_secs(1)),
        ("AC2", "product structure 54 vs 56", ac2, Duration::from_secs(1)),
        ("AC3", "matrix fixtures and involutions", ac3, Duration::from_secs(1)),
        ("AC4", "alpha, mu and reduction of E1", ac4, Duration::from_secs(1)),
        ("AC5", "bordant pairs at m = 4, 5", ac5, Duration::from_secs(5)),
        ("AC6", "Todd identities", ac6, Duration::from_secs(30)),
        ("AC7", "oracle equivalence sweep", ac7, Duration::from_secs(600)),
        ("AC8", "invariant suites", ac8, Duration::from_secs(300)),
        ("AC9", "generator fixtures", ac9, Duration::from_secs(1)),
        ("AC10", "immersion bounds", ac10, Duration::from_secs(1)),
        ("AC11", "enumerate determinism", ac11, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        match result {
            Ok(()) if took <= limit => println!("PASS {id:<5} {name} ({took:.2?})"),
            Ok(()) => {
                failed += 1;
                println!("FAIL {id:<5} {name}: took {took:.2?}, limit {limit:?}");
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {id:<5} {name}: {e}");
            }
        }
    }
    if failed == 0 {
        println!("all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
