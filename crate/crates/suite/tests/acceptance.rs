//! Acceptance suite: one PASS/FAIL line per criterion, then a summary.
//! Exits non-zero when any criterion fails.

use mpg4_core::chrompoly::{
    chromatic_polynomial, evaluate, five_contract_decomposition, four_contract_decomposition, quad_twist_ops,
    tutte_identity_checks, Golden, GoldenConstants, Scalar,
};
use mpg4_core::coloring::{count_proper_colorings, enumerate_partitions, kempe_interchange, Coloring};
use mpg4_core::corpus::appendix::{appendix1, clean_listing};
use mpg4_core::corpus::{
    enumerate_mpg, theorem_sweep, verify_appendix1, verify_appendix2, verify_fwf22_counts, verify_order13_existence,
    verify_table_counts, Status, VerificationReport,
};
use mpg4_core::fwf::{alternative_coloring, enumerate_fwf22, star_extension_natural_coloring, Fwf22};
use mpg4_core::triangulation::{canonical_certificate, Triangulation};
use mpg4_core::wheelops::{all_extension_sites, contract_wheel, extend_wheel};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::time::Instant;

type Outcome = (bool, String);

fn corpus(orders: std::ops::RangeInclusive<usize>, min_degree: usize) -> Vec<Triangulation> {
    orders.flat_map(|n| enumerate_mpg(n, min_degree).expect("order within cap").graphs).collect()
}

fn find<'a>(reports: &'a [VerificationReport], claim: &str) -> &'a VerificationReport {
    reports.iter().find(|r| r.claim == claim).unwrap_or_else(|| panic!("no report {claim}"))
}

fn c1_oracle() -> Outcome {
    let gs = corpus(4..=10, 3);
    let bad: usize = gs
        .par_iter()
        .map(|g| {
            let p = chromatic_polynomial(g).expect("small graph");
            (0..=6)
                .filter(|&k| evaluate(&p, &Scalar::Int(BigInt::from(k))) != Scalar::Int(BigInt::from(count_proper_colorings(g, k))))
                .count()
        })
        .sum();
    (bad == 0, format!("{} graphs x k in 0..=6, {bad} disagreements", gs.len()))
}

fn c2_four_contract() -> Outcome {
    let oct = four_contract_decomposition(&Triangulation::octahedron(), 0).expect("degree 4");
    let oct_ok = oct.f_g == BigInt::from(96) && oct.f_g1 == BigInt::from(48) && oct.f_g2 == BigInt::from(48);
    let gs = corpus(6..=11, 4);
    let (checked, bad) = gs
        .par_iter()
        .map(|g| {
            let vs: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == 4).collect();
            let bad = vs.iter().filter(|&&v| !four_contract_decomposition(g, v).is_ok_and(|d| d.holds())).count();
            (vs.len(), bad)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    (
        oct_ok && bad == 0 && checked > 0,
        format!("octahedron {} = {} + {}; {checked} degree-4 vertices, {bad} failures", oct.f_g, oct.f_g1, oct.f_g2),
    )
}

fn c3_five_contract() -> Outcome {
    let mut gs = corpus(6..=12, 3);
    gs.push(Triangulation::icosahedron());
    let rows: Vec<(usize, usize, usize, usize)> = gs
        .par_iter()
        .map(|g| {
            let (mut n, mut bad, mut printed_fails) = (0, 0, 0);
            for v in (0..g.order()).filter(|&v| g.degree(v) == 5) {
                n += 1;
                match five_contract_decomposition(g, v) {
                    Ok(d) => {
                        bad += usize::from(!(d.holds() && d.nonnegative()));
                        printed_fails += usize::from(!d.printed_holds());
                    }
                    Err(_) => bad += 1,
                }
            }
            (n, bad, printed_fails, usize::from(printed_fails > 0))
        })
        .collect();
    let checked: usize = rows.iter().map(|r| r.0).sum();
    let bad: usize = rows.iter().map(|r| r.1).sum();
    let printed: usize = rows.iter().map(|r| r.2).sum();
    let graphs_printed: usize = rows.iter().map(|r| r.3).sum();
    (
        bad == 0 && checked > 0,
        format!(
            "{checked} degree-5 vertices, {bad} failures; G3 in the third bracket. With G1 as printed, the sum fails at {printed} vertices in {graphs_printed} graphs"
        ),
    )
}

fn c4_golden() -> Outcome {
    let gs = corpus(4..=10, 3);
    let bad = gs.par_iter().filter(|g| !tutte_identity_checks(g, 128).is_ok_and(|r| r.all_hold(1e-6))).count();
    let k3 = chromatic_polynomial(&Triangulation::k3()).unwrap();
    let c = GoldenConstants::new(128);
    let Scalar::Real(v) = evaluate(&k3, &Scalar::Real(c.tau_sqrt5)) else { unreachable!() };
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let closed = phi.powi(3) * (phi + 2.0);
    let exact = k3.eval_golden(&Golden::tau_sqrt5());
    let k3_ok = (v.to_f64() - closed).abs() < 1e-9 && (closed - 15.3262).abs() < 1e-4 && (exact.to_f64() - closed).abs() < 1e-9;
    (bad == 0 && k3_ok, format!("{} graphs, {bad} failures; f(K3, tau*sqrt5) = {:.10}", gs.len(), v.to_f64()))
}

fn c5_quad_twist() -> Outcome {
    let gs = corpus(5..=9, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut quads = Vec::new();
    for g in &gs {
        for (x, z) in g.edges() {
            let (y, l) = (g.succ(z, x), g.succ(x, z));
            if !g.adjacent(y, l) {
                quads.push((g, [x, y, z, l]));
            }
        }
    }
    quads.shuffle(&mut rng);
    quads.truncate(40);
    let mut poly_bad = 0;
    let mut worst = 0f64;
    let mut errors = 0;
    for (g, q) in &quads {
        match quad_twist_ops(g, *q) {
            Ok(t) => {
                poly_bad += usize::from(!t.residual.is_zero());
                worst = worst.max(t.golden_rel_residual);
            }
            Err(_) => errors += 1,
        }
    }
    (
        quads.len() >= 20 && poly_bad == 0 && errors == 0 && worst < 1e-9,
        format!("{} quads, {poly_bad} nonzero polynomial residuals, {errors} errors, worst relative residual {worst:.2e}", quads.len()),
    )
}

fn c6_counts() -> Outcome {
    match verify_table_counts() {
        Ok(r) => {
            let exact = r.iter().take(4).all(|x| x.status == Status::Match);
            let agree = r.iter().all(|x| x.evidence["strategies_agree"] == true);
            let row: Vec<String> = r.iter().map(|x| format!("{}:{}/{}", &x.claim[15..], x.computed, x.claimed)).collect();
            (exact && agree && r.len() == 6, format!("computed/printed {}; strategies agree", row.join(" ")))
        }
        Err(e) => (false, format!("strategies disagree: {e}")),
    }
}

fn c7_appendix1() -> Outcome {
    let reports = verify_appendix1().expect("appendix audit runs");
    let a1 = appendix1();
    let exact = |idx: usize, g: Triangulation| {
        let set = enumerate_partitions(&g, 4);
        let item = &a1.items[idx];
        let c = clean_listing(&item.partitions, g.order());
        let r = find(&reports, &format!("appendix1/item-{}", item.id));
        let reproduced = r.evidence["reproduced"].as_u64().unwrap_or(0) as usize;
        let ok = c.malformed.is_empty() && c.duplicates.is_empty() && reproduced == set.len() && c.partitions.len() == set.len();
        (ok, set.len(), reproduced, c.partitions.len())
    };
    let (o6, n6, r6, l6) = exact(0, Triangulation::octahedron());
    let g7 = enumerate_mpg(7, 4).unwrap().graphs.remove(0);
    let (o7, n7, r7, l7) = exact(1, g7);
    let unflagged: Vec<&str> = reports
        .iter()
        .filter(|r| r.claim.starts_with("appendix1/item-") && !r.claim.ends_with("uniquely-3-colorable"))
        .filter(|r| {
            let unrepro = r.evidence["unreproduced"].as_array().is_some_and(|a| !a.is_empty());
            let bad_entries = r.evidence["malformed"].as_array().is_some_and(|a| !a.is_empty());
            (unrepro || bad_entries) && r.status != Status::PaperInternalConflict && r.status != Status::Mismatch
        })
        .map(|r| r.claim.as_str())
        .collect();
    let consistency = find(&reports, "appendix1/f4-equals-falling-factorial-sum").status == Status::Match;
    (
        o6 && o7 && unflagged.is_empty() && consistency,
        format!(
            "order 6: {n6} computed, {r6} of {l6} listed reproduced{}; order 7: {n7} computed, {r7} of {l7} reproduced; unflagged diffs {unflagged:?}; f(G,4) = sum of falling factorials: {consistency}",
            if o6 { "" } else { " (a listed entry puts two adjacent vertices in one class)" }
        ),
    )
}

fn c8_appendix2() -> Outcome {
    let t = Instant::now();
    let ex = verify_order13_existence().expect("order 13 enumerates");
    let parts = verify_appendix2().expect("listing audit runs");
    let unique = find(&ex, "appendix2/unique-order-13").status == Status::Match;
    let seq = find(&ex, "appendix2/degree-sequence").status == Status::Match;
    let none = find(&ex, "appendix2/none-below-13").status == Status::Match;
    let p = &parts[0];
    let diffed = p.evidence["reproduced"].is_number();
    let fast = t.elapsed().as_secs() < 30 * 60;
    (
        unique && seq && none && diffed && fast,
        format!(
            "unique order-13 graph {unique}, degree sequence 4555555555566 {seq}, none at 11-12 {none}; {} partitions computed vs {} stated, {} lines listed ({:?}); {:.0?}",
            p.computed, p.claimed["stated_count"], p.claimed["listed_lines"], p.status, t.elapsed()
        ),
    )
}

fn c9_to_11(sweep: &[VerificationReport]) -> [Outcome; 3] {
    let u = find(sweep, "unique-iff-fwf");
    let c9 = (u.status == Status::Match, format!("{} graphs of order <= 11, exceptions {}", u.computed["checked"], u.computed["exceptions"]));
    let d5 = find(sweep, "colored-contraction/degree-5");
    let d6 = find(sweep, "colored-contraction/degree-6");
    let c10 = (
        d5.status == Status::Match && d6.status == Status::Match,
        format!(
            "5-wheel {} contractions, {} exceptions; 6-wheel {} contractions {}, {} exceptions",
            d5.computed["checked"], d5.computed["exceptions"], d6.computed["checked"], d6.evidence["detail"]["types"], d6.computed["exceptions"]
        ),
    );
    // every isomorphism class, not only those reachable from a colour sequence
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 5..=10 {
        for f in fwf22_graphs(n) {
            checked += 1;
            let ok = star_extension_natural_coloring(&f).and_then(|s| alternative_coloring(&s)).is_ok();
            if !ok {
                bad.push(f.sequence.to_string());
            }
        }
    }
    let c11 = (bad.is_empty() && checked > 0, format!("{checked} bases of order <= 10, failures {bad:?}"));
    [c9, c10, c11]
}

fn fwf22_graphs(n: usize) -> Vec<Fwf22> {
    enumerate_fwf22(n)
        .sequences
        .iter()
        .map(|s| {
            let s = s.as_ref().expect("every (2,2)-FWF graph has a colour sequence");
            mpg4_core::fwf::fwf22_from_color_sequence(&s.parse().unwrap()).unwrap()
        })
        .collect()
}

fn c12_gamma() -> Outcome {
    let r = verify_fwf22_counts();
    let get = |n: usize| find(&r, &format!("fwf22-count/order-{n}"));
    let ok6 = get(6).computed == 1;
    let ok7 = get(7).computed == 2;
    let g8 = get(8);
    let ok8 = g8.status == Status::PaperInternalConflict;
    (ok6 && ok7 && ok8, format!("gamma6 = {}, gamma7 = {}, gamma8 = {} (printed {} vs {} in the argument)", get(6).computed, get(7).computed, g8.computed, g8.claimed["formula"], g8.claimed["prose"]))
}

fn random_coloring(g: &Triangulation, rng: &mut ChaCha8Rng) -> Coloring {
    let set = enumerate_partitions(g, 4);
    let p = &set.partitions[rng.gen_range(0..set.len())];
    let mut perm = [1u8, 2, 3, 4];
    perm.shuffle(rng);
    let mut colors = vec![0u8; g.order()];
    for (i, c) in p.classes.iter().enumerate() {
        for &v in c {
            colors[v] = perm[i];
        }
    }
    Coloring::new(colors, 4)
}

/// Isomorphism by trying every degree-preserving bijection.
fn brute_isomorphic(a: &Triangulation, b: &Triangulation) -> bool {
    fn extend(a: &Triangulation, b: &Triangulation, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == a.order() {
            return true;
        }
        for j in 0..b.order() {
            if used[j] || a.degree(i) != b.degree(j) {
                continue;
            }
            if (0..i).any(|p| a.adjacent(p, i) != b.adjacent(map[p], j)) {
                continue;
            }
            map.push(j);
            used[j] = true;
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[j] = false;
        }
        false
    }
    a.order() == b.order() && a.degree_sequence() == b.degree_sequence() && extend(a, b, &mut Vec::new(), &mut vec![false; b.order()])
}

fn c13_properties() -> Outcome {
    // Kempe interchanges
    let gs = corpus(4..=10, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut kempe_bad = 0;
    for _ in 0..10_000 {
        let g = &gs[rng.gen_range(0..gs.len())];
        let f = random_coloring(g, &mut rng);
        let v = rng.gen_range(0..g.order());
        let i = f.colors[v];
        let j = loop {
            let j = rng.gen_range(1..=4u8);
            if j != i {
                break j;
            }
        };
        let ok = match kempe_interchange(g, &f, i, j, v) {
            Ok(h) => h.is_proper(g) && kempe_interchange(g, &h, i, j, v).is_ok_and(|back| back == f),
            Err(_) => false,
        };
        kempe_bad += usize::from(!ok);
    }

    // extend / contract round trips
    let small = corpus(4..=9, 3);
    let (trips, trip_bad) = small
        .par_iter()
        .map(|g| {
            let cert = canonical_certificate(g);
            let mut n = 0;
            let mut bad = 0;
            for site in all_extension_sites(g) {
                let Ok((h, step)) = extend_wheel(g, site) else { continue };
                n += 1;
                let back = step.apply(&h).is_ok_and(|x| canonical_certificate(&x) == cert);
                let again = step.recover(g).is_ok_and(|(x, _)| canonical_certificate(&x) == canonical_certificate(&h));
                bad += usize::from(!(back && again));
            }
            for v in 0..g.order() {
                let k = g.degree(v);
                if !(3..=5).contains(&k) {
                    continue;
                }
                let Ok((h, step)) = contract_wheel(g, v, k) else { continue };
                n += 1;
                bad += usize::from(!step.recover(&h).is_ok_and(|(x, _)| canonical_certificate(&x) == cert));
            }
            (n, bad)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));

    // certificates against brute force, with relabelled and mirrored copies
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut pool: Vec<Triangulation> = Vec::new();
    for g in corpus(4..=8, 3) {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        pool.push(g.relabel(&perm));
        pool.push(g.mirror());
        pool.push(g);
    }
    let certs: Vec<_> = pool.iter().map(canonical_certificate).collect();
    let mut iso_bad = 0;
    let mut pairs = 0;
    for i in 0..pool.len() {
        for j in i..pool.len() {
            pairs += 1;
            iso_bad += usize::from((certs[i] == certs[j]) != brute_isomorphic(&pool[i], &pool[j]));
        }
    }
    (
        kempe_bad == 0 && trip_bad == 0 && iso_bad == 0 && trips > 0,
        format!(
            "Kempe 10000 cases, {kempe_bad} failures; {trips} extend/contract round trips, {trip_bad} failures; {pairs} certificate pairs, {iso_bad} disagreements"
        ),
    )
}

fn main() {
    let start = Instant::now();
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut run = |id: usize, name: &'static str, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let (ok, detail) = f();
        println!("[{}] {id:>2} {name}: {detail} ({:.1?})", if ok { "PASS" } else { "FAIL" }, t.elapsed());
        results.push((id, name, (ok, detail)));
    };
    run(1, "chromatic polynomial equals colouring count", &c1_oracle);
    run(2, "degree-4 split of f(G,4)", &c2_four_contract);
    run(3, "degree-5 bracket split of f(G,4)", &c3_five_contract);
    run(4, "golden identity and positivity at tau*sqrt5", &c4_golden);
    run(5, "quadrilateral twist identities", &c5_quad_twist);
    run(6, "triangulation counts, orders 6-11", &c6_counts);
    run(7, "partition listings, orders 6-10", &c7_appendix1);
    run(8, "order-13 graph and its listing", &c8_appendix2);
    let t = Instant::now();
    let sweep = theorem_sweep(11).expect("theorem sweep runs");
    println!("       shared theorem sweep over orders <= 11 ({:.1?})", t.elapsed());
    let [c9, c10, c11] = c9_to_11(&sweep);
    run(9, "uniquely 4-colourable iff FWF, order <= 11", &|| c9.clone());
    run(10, "coloured 5- and 6-wheel contractions", &|| c10.clone());
    run(11, "alternative colouring of star extensions", &|| c11.clone());
    run(12, "(2,2)-FWF counts", &c12_gamma);
    run(13, "property suites", &c13_properties);
    let failed: Vec<usize> = results.iter().filter(|r| !r.2 .0).map(|r| r.0).collect();
    println!(
        "acceptance: {} of {} criteria pass{} ({:.1?})",
        results.len() - failed.len(),
        results.len(),
        if failed.is_empty() { String::new() } else { format!("; failing {failed:?}") },
        start.elapsed()
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
