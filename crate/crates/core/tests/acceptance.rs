//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::time::Instant;

use fmodule::extension::{
    enumerate_candidates, defect_walkthrough, splitting_search, square_defect, test_element, theta_split,
    CandidateSplitting, ExtensionL, LElt,
};
use fmodule::frobenius::{theta_e, theta_e_inv, theta_r, theta_r_inv, theta_rx, theta_rx_inv, Twist};
use fmodule::hom::{anchors, phi, psi, split_indices, theta_hom, theta_hom_inv, HomFRxE, HomRxE};
use fmodule::modules::{EElt, GradedModule, Pair, RxElt};
use fmodule::ring::{Field, Fq, Poly};
use fmodule::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `c/(x^a y^b)` summed termwise, dropping terms with an exponent below one.
fn inverse_terms(field: Field, terms: impl IntoIterator<Item = (i64, i64, Fq)>) -> EElt {
    let kept = terms.into_iter().filter(|&(a, b, _)| a >= 1 && b >= 1).map(|(a, b, c)| ((a as u32, b as u32), c));
    EElt::from_terms(field, kept)
}

/// `−1/(x²y^{αp+1}) + t/(x^{α+1}y^{αp+2}) − t^p/(x^{αp+1}y^{αp+2})` expanded by hand.
fn obstruction_oracle(field: Field, alpha: u32, t: &Poly) -> EElt {
    let (p, alpha) = (field.characteristic() as i64, alpha as i64);
    let b0 = alpha * p + 2;
    let minus = |c: Fq| field.zero() - c;
    let mut terms = vec![(2, b0 - 1, minus(field.one()))];
    for ((i, j), c) in t.terms() {
        let (i, j) = (i as i64, j as i64);
        terms.push((alpha + 1 - i, b0 - j, c));
        terms.push((alpha * p + 1 - p * i, b0 - p * j, minus(c.pow(p as u64))));
    }
    let mut out = EElt::zero(field);
    for term in terms {
        out = out.add(&inverse_terms(field, [term]));
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for p in [2u64, 3, 5] {
        let field = gf(p);
        let expected = 1 + (0..=3).map(|a| (p - 1) * p.pow(a)).sum::<u64>() as usize;
        ensure(enumerate_candidates(field, 3).len() == expected, || format!("p = {p}: wrong candidate count"))?;
        let report = splitting_search(field, 3, &Twist::y_over_x(field)).map_err(|e| e.to_string())?;
        ensure(report.results.len() == expected, || format!("p = {p}: searched {} candidates", report.results.len()))?;
        for r in &report.results {
            let g = &r.candidate;
            ensure(r.rejected(), || format!("p = {p}: {g} commutes"))?;
            let oracle = obstruction_oracle(field, g.alpha(), g.t());
            ensure(r.defect.0.is_zero() && r.defect.1 == oracle, || {
                format!("p = {p}: {g}: defect {} vs closed form {oracle}", r.defect)
            })?;
        }
        total += expected;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.2} s"))?;
    Ok(format!("{total} candidates rejected for p in {{2,3,5}}, defects match the closed form, {secs:.2} s"))
}

fn exact_hom(rng: &mut ChaCha8Rng, field: Field, d: i64) -> HomRxE {
    let len = rng.gen_range(0..12);
    HomRxE::from_y_coeffs(field, d, (0..len).map(|_| sample::fq(rng, field)).collect(), None)
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for p in [2u64, 3, 5] {
        let field = gf(p);
        let split = ExtensionL::split(field);
        let identity = CandidateSplitting::identity(field);
        for trial in 0..20 {
            let d = rng.gen_range(-10..=2);
            let x: LElt = Pair(exact_hom(&mut rng, field, d), sample::e(&mut rng, field, d));
            let defect = square_defect(&split, &identity, &x).map_err(|e| e.to_string())?;
            ensure(defect.is_zero(), || format!("p = {p}, trial {trial}: defect {defect} on {x}"))?;
            let back = split.theta_l_inv(&theta_split(&x).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            ensure(back == x, || format!("p = {p}: split structure map does not invert"))?;
        }
    }
    Ok("u = 0, t = 0 has zero defect on 20 exact test elements per p".into())
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p in [2u64, 3] {
        let field = gf(p);
        for trial in 0..200 {
            let d = rng.gen_range(-10..=2);
            let h = sample::hom_frx(&mut rng, field, d, 40);
            let t = phi(&h).map_err(|e| e.to_string())?;
            let back = psi(&t, d).map_err(|e| e.to_string())?;
            ensure(back == h, || format!("p = {p}, trial {trial}: psi(phi({h})) = {back}"))?;
            ensure(h.is_zero() || t.degree() == Some(d), || format!("p = {p}: phi changes degree of {h}"))?;

            let t = sample::hom_tensor(&mut rng, field, d, 40);
            let h = psi(&t, d).map_err(|e| e.to_string())?;
            let again = phi(&h).map_err(|e| e.to_string())?;
            ensure(again == t, || format!("p = {p}, trial {trial}: phi(psi({t})) = {again}"))?;
        }
    }
    Ok("psi . phi and phi . psi are the identity on 200 truncated elements per p in {2,3}".into())
}

fn criterion_4() -> Outcome {
    let field = gf(2);
    for alpha in 0..=1u32 {
        let t = Poly::monomial(field.one(), 0, alpha);
        let w = defect_walkthrough(field, alpha, t.clone()).map_err(|e| e.to_string())?;
        if let Some(s) = w.stages.iter().find(|s| !s.ok) {
            return Err(format!("alpha = {alpha}, stage {}: got {} expected {}", s.name, s.computed, s.expected));
        }
        // E-component of θ^{-1}((id⊗g)(θ(test))), by hand
        let b0 = (alpha * 2 + 2) as i64;
        let tp = t.frobenius();
        let mut oracle = inverse_terms(field, [(1, b0, field.one())]);
        for ((i, j), c) in tp.terms() {
            oracle = oracle.add(&inverse_terms(field, [(alpha as i64 * 2 + 1 - i as i64, b0 - j as i64, c)]));
        }
        let g = CandidateSplitting::new(alpha, t).map_err(|e| e.to_string())?;
        let x = test_element(field, alpha);
        let via_split = theta_split(&x).and_then(|s| s.map_slots(|m| g.apply(m))).map_err(|e| e.to_string())?;
        let back = ExtensionL::split(field).theta_l_inv(&via_split).map_err(|e| e.to_string())?;
        ensure(back.1 == oracle, || format!("alpha = {alpha}: E-component {} vs {oracle}", back.1))?;
    }
    Ok("every intermediate matches for p = 2, alpha in {0,1}, t = y^alpha".into())
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for p in [2u64, 3, 5] {
        let field = gf(p);
        let twist = Twist::y_over_x(field);
        let ext = ExtensionL::new(twist.clone());
        for trial in 0..200 {
            let d: i64 = rng.gen_range(-10..=2);
            let ctx = |map: &str| format!("p = {p}, trial {trial}, d = {d}: {map}");
            let err = |e: fmodule::Error| e.to_string();

            let rd = d.unsigned_abs() as u32;
            let r = sample::homogeneous_poly(&mut rng, field, rd);
            let tr = sample::r_tensor(&mut rng, field, rd as i64);
            let img = theta_r(&r).map_err(err)?;
            ensure(theta_r_inv(&img) == r && theta_r(&theta_r_inv(&tr)).map_err(err)? == tr, || ctx("theta_R"))?;
            ensure(r.is_zero() || img.degree() == Some(rd as i64), || ctx("theta_R degree"))?;

            let m = sample::rx(&mut rng, field, d);
            let tm = sample::rx_tensor(&mut rng, field, d);
            let img = theta_rx(&m).map_err(err)?;
            ensure(theta_rx_inv(&img) == m && theta_rx(&theta_rx_inv(&tm)).map_err(err)? == tm, || ctx("theta_Rx"))?;
            ensure(m.is_zero() || img.degree() == Some(d), || ctx("theta_Rx degree"))?;

            let ed = -2 - d.abs();
            let e = sample::e(&mut rng, field, ed);
            let te = sample::e_tensor(&mut rng, field, ed);
            let img = theta_e(&e).map_err(err)?;
            ensure(theta_e_inv(&img) == e && theta_e(&theta_e_inv(&te)).map_err(err)? == te, || ctx("theta_E"))?;
            ensure(e.is_zero() || img.degree() == Some(ed), || ctx("theta_E degree"))?;

            let mn = sample::rx(&mut rng, field, d);
            let rn = if d >= 0 { sample::homogeneous_poly(&mut rng, field, d as u32) } else { Poly::zero(field) };
            let tn = sample::n_tensor(&mut rng, field, d);
            let img = twist.theta_n((&mn, &rn)).map_err(err)?;
            let inv = twist.theta_n_inv(&tn);
            ensure(twist.theta_n_inv(&img) == Pair(mn.clone(), rn.clone()), || ctx("theta_N inverse"))?;
            ensure(twist.theta_n((&inv.0, &inv.1)).map_err(err)? == tn, || ctx("theta_N"))?;
            ensure(img.is_zero() || img.degree() == Some(d), || ctx("theta_N degree"))?;

            let f = sample::hom_rx(&mut rng, field, d, 40);
            let tf = sample::hom_tensor(&mut rng, field, d, 40);
            let img = theta_hom(&f).map_err(err)?;
            ensure(theta_hom_inv(&img, d).map_err(err)? == f, || ctx("theta_hom inverse"))?;
            ensure(theta_hom(&theta_hom_inv(&tf, d).map_err(err)?).map_err(err)? == tf, || ctx("theta_hom"))?;
            ensure(f.is_zero() || img.degree() == Some(d), || ctx("theta_hom degree"))?;

            let x = sample::l_elt(&mut rng, field, d, 40);
            let tl = sample::l_tensor(&mut rng, field, d, 40);
            let img = ext.theta_l(&x).map_err(err)?;
            ensure(ext.theta_l_inv(&img).map_err(err)? == x, || ctx("theta_L inverse"))?;
            ensure(ext.theta_l(&ext.theta_l_inv(&tl).map_err(err)?).map_err(err)? == tl, || ctx("theta_L"))?;
            ensure(x.is_zero() || img.degree() == Some(d), || ctx("theta_L degree"))?;
        }
    }
    Ok("theta_R, theta_Rx, theta_E, theta_N, theta_hom, theta_L invert and keep degree, 200 trials per p".into())
}

/// `(xy)^r·h ∈ (x^{A+r}, y^{B+r})` for some `r ≤ r_max`, termwise.
fn cech_oracle(h: &Poly, a: u32, b: u32, r_max: u32) -> bool {
    (0..=r_max).any(|r| h.terms().all(|((i, j), _)| i + r >= a + r || j + r >= b + r))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut zeros = 0;
    for p in [2u64, 3, 5] {
        let field = gf(p);
        for trial in 0..500 {
            let terms = rng.gen_range(1..=5);
            let h = sample::poly(&mut rng, field, 6, terms);
            let (a, b) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
            let normal = EElt::from_fraction(&h, a, b).is_empty();
            let bound = EElt::default_cech_bound(&h, a, b);
            let cech = EElt::is_zero_cech(&h, a, b, bound);
            let oracle = cech_oracle(&h, a, b, bound);
            ensure(normal == cech && cech == oracle, || {
                format!("p = {p}, trial {trial}: ({h})/(x^{a}y^{b}) normal {normal}, cech {cech}, oracle {oracle}")
            })?;
            zeros += normal as usize;
        }
    }
    ensure(zeros > 0 && zeros < 1500, || "sampled only one outcome".into())?;
    Ok(format!("1500 fractions agree, {zeros} of them zero"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for p in [2u64, 3, 5] {
        let field = gf(p);
        let pi = p as i64;
        for beta in (2 - pi)..=1 {
            for alpha in 0..=2i64 {
                let d = (alpha - 1) * pi - beta;
                ensure(anchors(p as u32, d) == (alpha, beta), || format!("p = {p}, d = {d}: anchors"))?;
                let coeffs: Vec<Fq> =
                    (0..210).map(|i| if beta + i < 1 { field.zero() } else { sample::fq(&mut rng, field) }).collect();
                let h = HomFRxE::new(field, d, &coeffs, Some(210)).map_err(|e| e.to_string())?;
                for (i, &c) in coeffs.iter().enumerate().take(200) {
                    if beta + (i as i64) < 1 {
                        ensure(split_indices(p as u32, i, alpha, beta).is_err(), || format!("index {i} accepted"))?;
                        continue;
                    }
                    let s = split_indices(p as u32, i, alpha, beta).map_err(|e| e.to_string())?;
                    let ctx = || format!("p = {p}, beta = {beta}, alpha = {alpha}, i = {i}: {s:?}");
                    ensure(s.m < p as u32 && s.n < p as u32 && s.l >= 0, ctx)?;
                    ensure((s.l - s.k as i64) * pi - s.m as i64 - s.n as i64 - 2 == d, ctx)?;
                    let r = Poly::monomial(field.one(), s.m, s.n);
                    let m = RxElt::new(Poly::monomial(field.one(), 0, s.k), s.l as u32);
                    let value = h.eval_tensor(&r, &m).map_err(|e| e.to_string())?;
                    let expected = EElt::inverse_monomial(c, 1, 1);
                    ensure(value == expected, || format!("{}: value {value}, expected {expected}", ctx()))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} index vectors satisfy the defining and degree identities"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("non-splitting certified by exhaustive search", criterion_1),
        ("split control", criterion_2),
        ("phi/psi roundtrips", criterion_3),
        ("walkthrough intermediates", criterion_4),
        ("structure-map identities", criterion_5),
        ("zero-test equivalence", criterion_6),
        ("split_indices identities", criterion_7),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", n + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
