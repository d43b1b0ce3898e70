//! The acceptance battery: twelve numbered checks, each reduced to a
//! pass/fail outcome with a few lines of evidence. Outcomes carry no
//! timings, so a suite run is reproducible byte for byte.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::closure::{
    abelian_member, ar_closure_probe, battery, canonical_rotation, corridor_member, exists_hl_factor,
    minimal_subshift_probe_4letter, offset_order_member, periodic_census, periodic_members, scan_in_index,
    HlKind, MembershipVerdict,
};
use crate::error::{invalid, Result};
use crate::exactnum::{circle_distance, qe_compare, reduce_mod1, QuadExt};
use crate::generators::{
    arc, thue_morse, tribonacci, ArnouxRauzy, BinaryRotation, Convention, TernaryRotation, TernarySpec,
};
use crate::spec::parse_word_spec;
use crate::subshift::{
    bounded_language, golden_mean, legal, nonsofic_witness, sft_counterexample_report, binary_sft_report,
};
use crate::words::{factor_sets, is_balanced, AbelianIndex, FactorTrie, InfiniteWord, Letter, WordRef};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

pub const CRITERIA: [(u8, &str); 12] = [
    (1, "Thue-Morse abelian complexity"),
    (2, "Sturmian signature"),
    (3, "corridor criterion vs abelian membership"),
    (4, "closure of 0011(001101)^w"),
    (5, "periodic census of (0^(2k-1)11)^w"),
    (6, "interleaving over fib"),
    (7, "1-2 heavy/light geometry vs scan"),
    (8, "offset order asymmetry"),
    (9, "minimal-complexity closures"),
    (10, "Arnoux-Rauzy closure"),
    (11, "subshift fixtures"),
    (12, "determinism"),
];

/// Named subsets accepted by `verify --suite`: `all`, `words` (1-4),
/// `closure` (5-10), `subshift` (11), `determinism` (12), or a comma
/// separated list of ids.
pub fn suite_ids(name: &str) -> Result<Vec<u8>> {
    let range = |a: u8, b: u8| Ok((a..=b).collect());
    match name {
        "all" => range(1, 12),
        "words" => range(1, 4),
        "closure" => range(5, 10),
        "subshift" => range(11, 11),
        "determinism" => range(12, 12),
        list => {
            let mut ids = BTreeSet::new();
            for part in list.split(',') {
                match part.trim().parse::<u8>() {
                    Ok(i) if (1..=12).contains(&i) => {
                        ids.insert(i);
                    }
                    _ => {
                        return invalid(format!(
                            "unknown suite `{name}` (expected all, words, closure, subshift, determinism or ids 1-12)"
                        ))
                    }
                }
            }
            Ok(ids.into_iter().collect())
        }
    }
}

/// Runs the given criteria in parallel; the result follows `ids` order.
pub fn run_suite(ids: &[u8]) -> Vec<CriterionOutcome> {
    ids.par_iter().map(|&i| run_criterion(i)).collect()
}

pub fn run_criterion(id: u8) -> CriterionOutcome {
    let title = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .map(|c| c.1)
        .unwrap_or("unknown criterion");
    let res = match id {
        1 => c1_thue_morse(),
        2 => c2_sturmian(),
        3 => c3_corridor(),
        4 => c4_periodic_huge(),
        5 => c5_census(),
        6 => c6_interleave(),
        7 => c7_heavy_light(),
        8 => c8_offsets(),
        9 => c9_min_complexity(),
        10 => c10_arnoux_rauzy(),
        11 => c11_subshifts(),
        12 => c12_determinism(),
        _ => invalid(format!("no criterion {id}")),
    };
    let (passed, details) = res.unwrap_or_else(|e| (false, vec![format!("error: {e}")]));
    CriterionOutcome { id, title, passed, details }
}

type Check = Result<(bool, Vec<String>)>;

fn word(s: &str) -> Result<WordRef> {
    parse_word_spec(s)
}

fn verdict_line(v: &MembershipVerdict) -> String {
    match &v.witness {
        None => format!("{}: member up to {}", v.query, v.max_len),
        Some(w) => format!("{}: rejected, witness {} (n = {}, at {})", v.query, w.factor, w.length, w.position),
    }
}

fn c1_thue_morse() -> Check {
    let tm = thue_morse();
    let (ix, st) = AbelianIndex::stabilized(&tm, 200, 1024, 1 << 16)?;
    let bad: Vec<usize> = (1..=200)
        .filter(|&n| {
            let want = if n % 2 == 1 { 2 } else { 3 };
            ix.parikhs(n).map(|s| s.len() != want).unwrap_or(true)
        })
        .collect();
    Ok((
        st.stabilized && bad.is_empty(),
        vec![
            format!("window {} (stabilized: {})", st.window, st.stabilized),
            format!("n = 1..200: odd lengths 2 classes, even lengths 3; mismatches at {bad:?}"),
        ],
    ))
}

fn c2_sturmian() -> Check {
    let slopes = [
        ("(3-sqrt5)/2", QuadExt::quad(3, 2, -1, 2, 5)),
        ("sqrt2-1", QuadExt::quad(-1, 1, 1, 1, 2)),
        ("sqrt2/2", QuadExt::quad(0, 1, 1, 2, 2)),
    ];
    let rows = slopes
        .par_iter()
        .map(|(label, alpha)| -> Result<(bool, String)> {
            let x = BinaryRotation::new(alpha.clone(), QuadExt::zero(), Convention::Under)?;
            let w = x.prefix(20_000)?;
            let ix = AbelianIndex::from_word(w.clone(), 2, 100)?;
            let trie = FactorTrie::new(&w, 2, 100);
            let mut bad = Vec::new();
            for n in 1..=100usize {
                let fl = alpha.scale(n as i64).floor();
                let fl = u32::try_from(fl).map_err(|_| crate::Error::InvalidSpec("slope out of range".into()))?;
                let ok = ix.parikhs(n)?.len() == 2 && trie.count(n) == n + 1 && ix.corridor(1, n)? == (fl, fl + 1);
                if !ok {
                    bad.push(n);
                }
            }
            Ok((
                bad.is_empty(),
                format!("alpha = {label}: abelian 2, factor n+1, corridor [floor(n alpha), +1] for n <= 100; failures {bad:?}"),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((rows.iter().all(|r| r.0), rows.into_iter().map(|r| r.1).collect()))
}

const BINARY_FIXTURES: [&str; 10] = [
    "fib",
    "tm",
    "sturmian(alpha=quad(-1,1,2))",
    "periodic(01)",
    "periodic(0011)",
    "preperiodic(0011, 001101)",
    "periodic(001)",
    "shift(5; fib)",
    "sturmian(alpha=quad(3/2,-1/2,5), rho=1/3)",
    "periodic(00101)",
];

const BINARY_PAIRS: [(usize, usize); 20] = [
    (7, 0),
    (0, 7),
    (8, 0),
    (3, 0),
    (0, 3),
    (1, 5),
    (5, 1),
    (3, 1),
    (4, 1),
    (6, 0),
    (9, 0),
    (0, 9),
    (2, 0),
    (0, 2),
    (2, 2),
    (4, 4),
    (6, 6),
    (3, 4),
    (4, 3),
    (1, 1),
];

fn c3_corridor() -> Check {
    let words = BINARY_FIXTURES.iter().map(|s| word(s)).collect::<Result<Vec<_>>>()?;
    let rows = BINARY_PAIRS
        .par_iter()
        .map(|&(y, x)| -> Result<(bool, bool)> {
            let a = abelian_member(words[y].as_ref(), words[x].as_ref(), 30, 4000)?;
            let c = corridor_member(words[y].as_ref(), words[x].as_ref(), 30, 4000)?;
            Ok((a.is_member(), c.is_member()))
        })
        .collect::<Result<Vec<_>>>()?;
    let disagree: Vec<String> = BINARY_PAIRS
        .iter()
        .zip(&rows)
        .filter(|(_, r)| r.0 != r.1)
        .map(|(&(y, x), _)| format!("{} vs {}", BINARY_FIXTURES[y], BINARY_FIXTURES[x]))
        .collect();
    let members = rows.iter().filter(|r| r.0).count();
    Ok((
        disagree.is_empty(),
        vec![
            format!("{} pairs at L = 30, N = 4000: {members} members, {} rejected", rows.len(), rows.len() - members),
            format!("disagreements: {}", disagree.len()),
        ]
        .into_iter()
        .chain(disagree)
        .collect(),
    ))
}

/// `00(10)^k0` for some `k >= 0`.
fn is_zero_zero_shape(f: &str) -> bool {
    f.len() >= 3
        && f.starts_with("00")
        && f.ends_with('0')
        && f[2..f.len() - 1].len().is_multiple_of(2)
        && f.as_bytes()[2..f.len() - 1].chunks(2).all(|c| c == b"10")
}

fn c4_periodic_huge() -> Check {
    let tm = word("tm")?;
    let x = word("preperiodic(0011, 001101)")?;
    let y = word("preperiodic(00, 10)")?;
    let z = word("periodic(0010)")?;
    let tm_in_x = abelian_member(tm.as_ref(), x.as_ref(), 60, 4000)?;
    let x_in_tm = abelian_member(x.as_ref(), tm.as_ref(), 60, 4000)?;
    let y_in_tm = abelian_member(y.as_ref(), tm.as_ref(), 60, 4000)?;
    let z_in_tm = abelian_member(z.as_ref(), tm.as_ref(), 60, 4000)?;
    let shaped = |v: &MembershipVerdict| v.witness.as_ref().is_some_and(|w| is_zero_zero_shape(&w.factor));
    let y_ok = !y_in_tm.is_member() && shaped(&y_in_tm);
    Ok((
        tm_in_x.is_member() && x_in_tm.is_member() && y_ok,
        vec![
            verdict_line(&tm_in_x),
            verdict_line(&x_in_tm),
            format!("{} (expected a rejection with a 00(10)^k0 witness)", verdict_line(&y_in_tm)),
            format!(
                "informative: {}; witness shape 00(10)^k0: {}",
                verdict_line(&z_in_tm),
                shaped(&z_in_tm)
            ),
        ],
    ))
}

fn expected_orbits(k: usize) -> Vec<String> {
    let mut v: Vec<Vec<Letter>> = (0..k)
        .map(|i| {
            let mut w = vec![0; 2 * k - 1 - i];
            w.push(1);
            w.extend(std::iter::repeat_n(0, i));
            w.push(1);
            canonical_rotation(&w).into_inner()
        })
        .collect();
    v.sort();
    v.dedup();
    v.iter()
        .map(|w| format!("({})^w", w.iter().map(|l| char::from(b'0' + l)).collect::<String>()))
        .collect()
}

fn c5_census() -> Check {
    let rows = (1..=5usize)
        .into_par_iter()
        .map(|k| -> Result<(bool, String)> {
            let z = word(&format!("periodic({}11)", "0".repeat(2 * k - 1)))?;
            let c = periodic_census(z.as_ref(), 500)?;
            let e = periodic_members(z.as_ref(), 500, 2 * k + 1)?;
            let want: BTreeSet<String> = expected_orbits(k).into_iter().collect();
            let got: BTreeSet<String> = c.orbits.iter().cloned().collect();
            let exh: BTreeSet<String> = e.orbits.iter().cloned().collect();
            let ok = c.orbits.len() == k && got == want && exh == want;
            Ok((
                ok,
                format!(
                    "k = {k}: n0 = {}, L = {}, {} orbits {:?}; exhaustive over q <= {} ({} candidates) agrees: {}",
                    c.n0,
                    c.max_len,
                    c.orbits.len(),
                    c.orbits,
                    2 * k + 1,
                    e.candidates,
                    exh == want
                ),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((rows.iter().all(|r| r.0), rows.into_iter().map(|r| r.1).collect()))
}

fn c6_interleave() -> Check {
    let s = word("interleave(fib; periodic(0102); periodic(ab))")?;
    let p = s.alphabet().render(&s.prefix(20)?);
    let prefix_ok = p == "0a10b2a01b02a0b10a2b";
    let bal = is_balanced(s.as_ref(), 60, 20_000)?;
    let member = word("interleave(shift(3; fib); periodic(2010); periodic(ba))")?;
    let other = word("interleave(sturmian(alpha=quad(-1,1,2)); periodic(0102); periodic(ab))")?;
    let vm = abelian_member(member.as_ref(), s.as_ref(), 60, 20_000)?;
    let vo = abelian_member(other.as_ref(), s.as_ref(), 60, 20_000)?;
    Ok((
        prefix_ok && bal.is_none() && vm.is_member() && !vo.is_member(),
        vec![
            format!("prefix(20) = {p}"),
            match &bal {
                None => "balanced up to 60".into(),
                Some(b) => format!("unbalanced at n = {}: {:?} vs {:?}", b.n, b.light, b.heavy),
            },
            verdict_line(&vm),
            verdict_line(&vo),
        ],
    ))
}

/// Ternary specs over `α = √2-1`; the last five sit on a boundary
/// `ζ = {±mα}` for `m = 6` or `11`.
fn hl_specs() -> Vec<(&'static str, TernarySpec)> {
    let a = QuadExt::quad(-1, 1, 1, 1, 2);
    let q = |p0: i64, p1: i64| QuadExt::quad(p0, 1, p1, 1, 2);
    let r = QuadExt::from_ratio;
    let t = |z: QuadExt, rho: QuadExt, j1: bool, j2: bool| TernarySpec::new(a.clone(), z, rho, j1, j2);
    vec![
        ("zeta 9/20", t(r(9, 20), QuadExt::zero(), false, false)),
        ("zeta 1/2, both closed", t(r(1, 2), r(1, 3), true, true)),
        ("zeta alpha", t(a.clone(), q(-2, 2), false, true)),
        ("zeta 1-alpha", t(q(2, -1), r(1, 5), true, false)),
        ("zeta {-11a}, orbit hits zeta", t(q(16, -11), q(16, -11), true, false)),
        ("zeta {-11a}, open", t(q(16, -11), QuadExt::zero(), false, false)),
        ("zeta {6a}, orbit hits 0", t(q(-8, 6), q(5, -3), true, false)),
        ("zeta {-6a}, orbit hits zeta", t(q(9, -6), q(16, -11), false, true)),
        ("zeta {11a}, orbit hits 0", t(q(-15, 11), QuadExt::zero(), false, true)),
    ]
}

fn c7_heavy_light() -> Check {
    const M: usize = 40;
    let rows = hl_specs()
        .into_par_iter()
        .map(|(label, spec)| -> Result<(usize, usize, Vec<String>)> {
            let x = TernaryRotation::new(spec.clone())?;
            let ix = AbelianIndex::build(&x, M, 20_000)?;
            let mut bad = Vec::new();
            let mut boundary = 0;
            for m in 1..=M {
                for kind in HlKind::ALL {
                    let geo = exists_hl_factor(kind, &spec, m)?;
                    if geo.branch.starts_with("boundary") {
                        boundary += 1;
                    }
                    if geo.value != scan_in_index(kind, &ix, m)? {
                        bad.push(format!("{label}: {kind} at m = {m} ({})", geo.branch));
                    }
                }
            }
            Ok((boundary, bad.len(), bad))
        })
        .collect::<Result<Vec<_>>>()?;
    let boundary: usize = rows.iter().map(|r| r.0).sum();
    let bad: Vec<String> = rows.into_iter().flat_map(|r| r.2).collect();
    let mut details = vec![
        format!("{} specs x m <= {M} x 4 kinds on windows of 20000", hl_specs().len()),
        format!("boundary cases: {boundary}; disagreements: {}", bad.len()),
    ];
    details.extend(bad.iter().take(10).cloned());
    Ok((bad.is_empty() && boundary > 0, details))
}

fn c8_offsets() -> Check {
    let a = QuadExt::quad(-1, 1, 1, 1, 2);
    let r = QuadExt::from_ratio;
    let chain = [
        TernarySpec::new(a.clone(), r(43, 100), QuadExt::zero(), false, false),
        TernarySpec::new(a.clone(), r(23, 50), r(1, 3), false, false),
        TernarySpec::new(a.clone(), r(49, 100), QuadExt::quad(0, 1, 1, 2, 2), false, false),
    ];
    let pairs = [(0usize, 1usize), (1, 2), (0, 2)];
    let rows = pairs
        .par_iter()
        .map(|&(lo, hi)| -> Result<(bool, Vec<String>)> {
            let o = offset_order_member(&chain[hi], &chain[lo], 40, 20_000)?;
            let mut ok = o.consistent && o.larger == "A";
            let mut lines = vec![verdict_line(&o.a_in_b), verdict_line(&o.b_in_a)];
            match &o.light_witness {
                Some(w) => {
                    let mu = reduce_mod1(&a.scale(-(w.m as i64)));
                    let zhi = circle_distance(&chain[hi].zeta);
                    let zlo = circle_distance(&chain[lo].zeta);
                    let gap = qe_compare(&zhi, mu.value())? == Ordering::Greater
                        && qe_compare(mu.value(), &zlo)? == Ordering::Greater;
                    ok &= gap;
                    lines.push(format!(
                        "light witness {} at m = {}: {} > {{-m alpha}} = {} > {} holds exactly: {gap}",
                        w.factor, w.m, zhi, mu, zlo
                    ));
                }
                None => lines.push("no light witness".into()),
            }
            Ok((ok, lines))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((rows.iter().all(|r| r.0), rows.into_iter().flat_map(|r| r.1).collect()))
}

fn c9_min_complexity() -> Check {
    let mut details = Vec::new();

    // case (2): a letter-to-block image of fib
    let u = word("image(0->02, 1->12; fib)")?;
    let accept = [
        "image(0->02, 1->12; fib)",
        "shift(1; image(0->02, 1->12; fib))",
        "shift(2; image(0->02, 1->12; fib))",
        "shift(7; image(0->02, 1->12; fib))",
        "image(0->02, 1->12; sturmian(alpha=quad(3/2,-1/2,5), rho=1/3))",
    ];
    let reject = [
        "image(0->02, 1->12; sturmian(alpha=quad(-1,1,2)))",
        "periodic(0212)",
        "prefixed(0; image(0->02, 1->12; fib))",
        "prefixed(1212; image(0->02, 1->12; fib))",
        "image(0->12, 1->02; fib)",
    ];
    let mut cands = Vec::new();
    for (list, expect) in [(&accept, true), (&reject, false)] {
        for s in list.iter() {
            cands.push((s.to_string(), word(s)?, expect));
        }
    }
    let case2 = battery("case-2", u.as_ref(), cands, 40, 10_000)?;
    for e in &case2.entries {
        details.push(format!("case 2: {} [{}]", verdict_line(&e.verdict), if e.ok { "ok" } else { "UNEXPECTED" }));
    }

    // case (3): t_{α,α,{2α}}
    let a = QuadExt::quad(-1, 1, 1, 1, 2);
    let q = |p0: i64, p1: i64| QuadExt::quad(p0, 1, p1, 1, 2);
    let r = QuadExt::from_ratio;
    let base = TernarySpec::new(a.clone(), a.clone(), q(-2, 2), false, false);
    let t = TernaryRotation::new(base.clone())?;
    let offsets = [
        ("zeta alpha, rho 0", base.with_rho(QuadExt::zero())),
        ("zeta 9/20", base.with_zeta(r(9, 20)).with_rho(r(1, 7))),
        ("zeta 1/2", base.with_zeta(r(1, 2)).with_rho(QuadExt::zero())),
        ("zeta 11/20", base.with_zeta(r(11, 20)).with_rho(r(2, 3))),
        ("zeta 1-alpha", base.with_zeta(q(2, -1)).with_rho(r(1, 2))),
        ("zeta {-11a}", base.with_zeta(q(16, -11)).with_rho(r(1, 4))),
    ];
    let mut cands: Vec<(String, WordRef, bool)> = Vec::new();
    for (label, spec) in offsets.iter() {
        cands.push((label.to_string(), arc(TernaryRotation::new(spec.clone())?), true));
    }
    cands.push(("02u".into(), word(&format!("prefixed(02; {})", t.name()))?, true));
    cands.push((
        "other slope".into(),
        arc(TernaryRotation::new(TernarySpec::new(
            QuadExt::quad(3, 2, -1, 2, 5),
            r(1, 2),
            QuadExt::zero(),
            false,
            false,
        ))?),
        false,
    ));
    let case3 = crate::closure::np2_closure_probe(&base, cands, 40, 20_000)?;
    let accepted = case3.entries.iter().take(offsets.len()).filter(|e| e.verdict.is_member()).count();
    let case3_ok = accepted >= 5 && case3.entries.iter().skip(offsets.len()).all(|e| e.ok);
    for e in &case3.entries {
        details.push(format!("case 3: {} [{}]", verdict_line(&e.verdict), if e.ok { "ok" } else { "UNEXPECTED" }));
    }
    details.push(format!("case 3: {accepted} of {} sampled offsets accepted", offsets.len()));

    let fm = minimal_subshift_probe_4letter("23", "0", "1", word("fib")?, 30, 3000)?;
    for e in &fm.entries {
        details.push(format!("fm: {} [{}]", verdict_line(&e.verdict), if e.ok { "ok" } else { "UNEXPECTED" }));
    }
    Ok((case2.passed && case3_ok && fm.passed, details))
}

fn c10_arnoux_rauzy() -> Check {
    let psi = ArnouxRauzy::new(word("periodic(012)")?);
    let trib = tribonacci();
    let render = |x: &dyn InfiniteWord| -> Result<Vec<Vec<String>>> {
        Ok(factor_sets(x, 20, 1000)?
            .iter()
            .map(|s| s.iter().map(|f| x.alphabet().render(f)).collect())
            .collect())
    };
    let (fp, ft) = (render(&psi)?, render(&trib)?);
    let diff: Vec<usize> = (0..=20).filter(|&n| fp[n] != ft[n]).collect();
    let probe = ar_closure_probe(word("periodic(012)")?, 50, 5000, 10)?;
    Ok((
        diff.is_empty() && probe.passed,
        vec![
            format!("factor sets of psi((012)^w) and trib up to 20 on 1000: differ at {diff:?}"),
            verdict_line(&probe.member),
            format!("factor of 20c absent from L(c): {:?}", probe.absent_factor),
        ],
    ))
}

fn c11_subshifts() -> Check {
    let f = golden_mean();
    let lang = bounded_language(&f, 10)?;
    let mut mismatches = 0;
    for n in 1..=10usize {
        for code in 0..1u32 << n {
            let w: Vec<Letter> = (0..n).rev().map(|i| ((code >> i) & 1) as Letter).collect();
            if lang.abelian_legal(&w)? != legal(&w, &f) {
                mismatches += 1;
            }
        }
    }
    let mut ok = mismatches == 0;
    let mut details = vec![format!("golden mean, lengths <= 10: abelian-legal vs legal mismatches {mismatches}")];
    for n in [4, 10] {
        let r = sft_counterexample_report(n)?;
        ok &= r.passed;
        details.push(format!(
            "three-letter SFT n = {n}: short factors ok {}, {} rejected {}",
            r.short_factors_ok, r.long_factor, r.long_factor_rejected
        ));
    }
    let ns = nonsofic_witness(8)?;
    ok &= ns.matches_unbalanced;
    let counts: Vec<String> = ns.counts.iter().map(|(n, (f, e))| format!("{n}:{f}/{e}")).collect();
    details.push(format!(
        "non-sofic witnesses L = 8: equal to unbalanced cwd {}; counts {}",
        ns.matches_unbalanced,
        counts.join(" ")
    ));
    for k in 1..=2 {
        let b = binary_sft_report(k)?;
        details.push(format!(
            "informative: binary order-6 SFT k = {k}: accepted {}, witness {:?}",
            b.accepted_ok, b.rejected_witness
        ));
    }
    Ok((ok, details))
}

/// In-process check across pools of 1 and 8 workers on a sample of the
/// parallel criteria; cross-process identity of the full suite is left to
/// the caller that can launch the binary.
fn c12_determinism() -> Check {
    let sample = [3u8, 5, 7];
    let run = |n: usize| -> Result<String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| crate::Error::InvalidSpec(e.to_string()))?;
        let out = pool.install(|| run_suite(&sample));
        Ok(out
            .iter()
            .map(|o| format!("{} {} {}", o.id, o.passed, o.details.join("|")))
            .collect::<Vec<_>>()
            .join("\n"))
    };
    let one = run(1)?;
    let eight = run(8)?;
    let again = run(8)?;
    Ok((
        one == eight && eight == again,
        vec![format!(
            "criteria {sample:?} under 1 and 8 workers: identical {}, repeat identical {}",
            one == eight,
            eight == again
        )],
    ))
}
