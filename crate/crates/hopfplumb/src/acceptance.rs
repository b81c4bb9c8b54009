//! The acceptance criteria as runnable checks with pinned limits.
//!
//! Every quantity is exact, so all comparisons are equalities or integer
//! inequalities; the only tolerances are the wall-clock limits below.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use hopfplumb_core::alexander::{burau_alexander, torus_alexander};
use hopfplumb_core::braid::DEFAULT_SEARCH_BUDGET;
use hopfplumb_core::curve::{self, Monodromy, TwistFactor};
use hopfplumb_core::hironaka::{hironaka_max_n, hironaka_solve};
use hopfplumb_core::linalg;
use hopfplumb_core::plumbing::{
    detect_chain_with, torus_braid, torus_summand_report, trefoil_step,
};
use hopfplumb_core::{BraidWord, FatGraphSurface, LaurentPolynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus;
use crate::sampling;

pub const LIMIT_1: Duration = Duration::from_millis(100);
pub const LIMIT_2: Duration = Duration::from_secs(30);
pub const LIMIT_3: Duration = Duration::from_secs(30);
pub const LIMIT_4: Duration = Duration::from_secs(60);
pub const LIMIT_5: Duration = Duration::from_secs(600);
pub const LIMIT_6: Duration = Duration::from_secs(60);
pub const LIMIT_7: Duration = Duration::from_secs(60);

/// Largest crossing number of the exhaustive knot corpus.
pub const CORPUS_MAX_CROSSINGS: usize = 12;
pub const RANDOM_PAIRS: usize = 1000;
pub const RANDOM_WORDS: usize = 100;
pub const SEED: u64 = 0x05ee_d0fb_4a1d;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{verdict}] criterion {}: {} | {} | {:.3}s",
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(l) = self.limit {
            write!(f, " (limit {}s)", l.as_secs_f64())?;
        }
        Ok(())
    }
}

/// A certified chain, kept for the obstruction check.
#[derive(Debug, Clone)]
pub struct ChainRecord {
    pub label: String,
    pub word: BraidWord,
    pub n: usize,
}

struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(
        self,
        id: u8,
        title: &'static str,
        start: Instant,
        limit: Option<Duration>,
    ) -> Outcome {
        let elapsed = start.elapsed();
        let mut failures = self.failures;
        if let Some(l) = limit {
            if elapsed > l {
                failures.push(format!("took {:.3}s", elapsed.as_secs_f64()));
            }
        }
        let passed = failures.is_empty();
        let mut detail = self.notes.join("; ");
        if !passed {
            let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
            detail = format!("{} failure(s): {}", failures.len(), shown.join("; "));
        }
        Outcome {
            id,
            title,
            passed,
            detail,
            elapsed,
            limit,
        }
    }
}

fn poly(c: &[i64]) -> LaurentPolynomial {
    LaurentPolynomial::from_coeffs(c)
}

fn coprime(a: usize, b: usize) -> bool {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a == 1
}

pub fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut ck = Check::new();
    match torus_alexander(3, 7) {
        Ok(delta) => {
            let q = &delta * &poly(&[1, 1]);
            let expected = poly(&[1, 0, -1, 1, 0, -1, 1, 1, -1, 0, 1, -1, 0, 1]);
            ck.require(q == expected, || format!("(t+1)Δ = {q}"));
            let sol = [1i8, -1].iter().find_map(|&e| hironaka_solve(&delta, 7, e));
            match sol {
                Some(s) => {
                    let p = poly(&[1, -1, 0, 1, -1, 0, 1]);
                    ck.require(s.p == p, || format!("P = {}", s.p));
                    ck.notes.push(format!("(t+1)Δ = {q}; n = 7, P = {}", s.p));
                }
                None => ck.require(false, || "no solution at n = 7".into()),
            }
        }
        Err(e) => ck.require(false, || e.to_string()),
    }
    ck.finish(1, "T(3,7) identity", start, Some(LIMIT_1))
}

pub fn criterion_2(chains: &mut Vec<ChainRecord>) -> Outcome {
    let start = Instant::now();
    let mut ck = Check::new();
    let mut seen = Vec::new();
    for k in 1..=4usize {
        for (q, bound, detect) in [
            (3 * k + 1, 3 * k + 1, 3 * k),
            (3 * k + 2, 3 * k + 3, 3 * k + 2),
        ] {
            match torus_summand_report(3, q, true) {
                Ok(r) => {
                    let n_max = r.bound.as_ref().map(|b| b.n_max);
                    ck.require(n_max == Some(bound), || {
                        format!("T(3,{q}): n_max {n_max:?}, want {bound}")
                    });
                    ck.require(r.detector_n == detect, || {
                        format!("T(3,{q}): detector {} want {detect}", r.detector_n)
                    });
                    chains.push(ChainRecord {
                        label: format!("T(3,{q})"),
                        word: r.certificate.word.clone(),
                        n: r.detector_n,
                    });
                    seen.push(format!("T(3,{q}) {}/{}", r.detector_n, bound - 1));
                }
                Err(e) => ck.require(false, || format!("T(3,{q}): {e}")),
            }
        }
    }
    ck.notes
        .push(format!("detector/bound: {}", seen.join(", ")));
    ck.finish(
        2,
        "three-strand torus knots: detector meets bound",
        start,
        Some(LIMIT_2),
    )
}

fn top_left_chain(w: &BraidWord) -> Result<usize, hopfplumb_core::Error> {
    let s = FatGraphSurface::new(w)?;
    let m = Monodromy::new(&s)?;
    let cert = detect_chain_with(&s, &m, 0, s.first_betti())?;
    cert.verify()?;
    Ok(cert.n)
}

pub fn criterion_3(chains: &mut Vec<ChainRecord>) -> Outcome {
    let start = Instant::now();
    let mut ck = Check::new();
    let mut count = 0;
    for p in 2..=5usize {
        for q in p + 1..=9usize {
            if !coprime(p, q) {
                continue;
            }
            let w = torus_braid(p, q).expect("torus word");
            match top_left_chain(&w) {
                Ok(n) => {
                    ck.require(n + 1 >= p, || format!("T({p},{q}): n = {n}"));
                    chains.push(ChainRecord {
                        label: format!("T({p},{q})"),
                        word: w,
                        n,
                    });
                    count += 1;
                }
                Err(e) => ck.require(false, || format!("T({p},{q}): {e}")),
            }
        }
    }
    for q in 2..=9usize {
        let w = torus_braid(2, q).expect("torus word");
        match top_left_chain(&w) {
            Ok(n) => {
                ck.require(n == q - 1, || format!("σ1^{q}: n = {n}"));
                chains.push(ChainRecord {
                    label: format!("σ1^{q}"),
                    word: w,
                    n,
                });
            }
            Err(e) => ck.require(false, || format!("σ1^{q}: {e}")),
        }
    }
    ck.notes.push(format!(
        "{count} torus knots with n >= p - 1; σ1^q gives q - 1 for q = 2..9"
    ));
    ck.finish(3, "torus lower bound p - 1", start, Some(LIMIT_3))
}

pub fn criterion_4(chains: &mut Vec<ChainRecord>) -> Outcome {
    let start = Instant::now();
    let mut ck = Check::new();
    match torus_summand_report(5, 7, false) {
        Ok(r) => {
            let n = r.detector_n;
            ck.require(n >= 14, || format!("n = {n}"));
            ck.require(r.certificate.verify().is_ok(), || {
                "certificate does not re-validate".into()
            });
            ck.notes.push(format!(
                "n = {n} (seed rectangle {}), target 5*4/2 + 5 - 1 = 14",
                r.certificate.seed
            ));
            chains.push(ChainRecord {
                label: "T(5,7)".into(),
                word: r.certificate.word.clone(),
                n,
            });
        }
        Err(e) => ck.require(false, || e.to_string()),
    }
    ck.finish(4, "T(5,7) carries a 14-chain", start, Some(LIMIT_4))
}

/// Decomposes one corpus word, reusing remainders already decomposed.
/// Returns the number of trefoil steps.
fn decompose_memo(w: &BraidWord, done: &mut HashSet<(usize, Vec<u8>)>) -> Result<usize, String> {
    let mut steps = 0;
    let mut current = w.clone();
    let mut fresh = Vec::new();
    while current.first_betti() > 0 {
        let key = (
            current.strands(),
            current.canonical_rotation().0.letters().to_vec(),
        );
        if done.contains(&key) {
            steps += current.first_betti() / 2;
            current = BraidWord::new(1, Vec::new()).expect("empty word");
            break;
        }
        let step =
            trefoil_step(&current, DEFAULT_SEARCH_BUDGET).map_err(|e| format!("{current}: {e}"))?;
        step.verify().map_err(|e| format!("{current}: {e}"))?;
        if step.traversals != 0 {
            return Err(format!(
                "{current}: φ(R) crosses the arc {} times",
                step.traversals
            ));
        }
        fresh.push(key);
        steps += 1;
        current = step.after;
    }
    let end = current.fully_destabilized();
    if !(end.is_empty() && end.strands() == 1) {
        return Err(format!("{w}: remainder {current} is not trivial"));
    }
    done.extend(fresh);
    Ok(steps)
}

pub fn criterion_5() -> Outcome {
    criterion_5_up_to(CORPUS_MAX_CROSSINGS)
}

pub fn criterion_5_up_to(max_c: usize) -> Outcome {
    let start = Instant::now();
    let mut ck = Check::new();
    let words = corpus::reduced_knot_words(max_c);
    let mut done = HashSet::new();
    let mut max_genus = 0;
    for w in &words {
        let genus = w.first_betti() / 2;
        max_genus = max_genus.max(genus);
        match decompose_memo(w, &mut done) {
            Ok(steps) => ck.require(steps == genus, || {
                format!("{w}: {steps} steps, genus {genus}")
            }),
            Err(e) => ck.require(false, || e),
        }
    }
    ck.notes.push(format!(
        "{} knot words with c <= {max_c}, genus up to {max_genus}; steps = ribbon twists = genus; {} distinct remainders",
        words.len(),
        done.len()
    ));
    ck.finish(
        5,
        "trefoil decomposition of every small positive braid knot",
        start,
        Some(LIMIT_5),
    )
}

pub fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut ck = Check::new();
    let mut torus_cases = 0;
    for p in 2..=5usize {
        for q in 1..=9usize {
            if !coprime(p, q) {
                continue;
            }
            let w = torus_braid(p, q).expect("torus word");
            let formula = torus_alexander(p as u32, q as u32).expect("coprime");
            let burau = burau_alexander(&w).expect("connected");
            let mono = FatGraphSurface::new(&w)
                .expect("connected")
                .alexander_from_monodromy();
            ck.require(
                formula.eq_up_to_unit(&burau) && burau.eq_up_to_unit(&mono),
                || format!("T({p},{q}): {formula} / {burau} / {mono}"),
            );
            torus_cases += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_WORDS {
        let s = rng.gen_range(2..=6);
        let c = rng.gen_range(s - 1..=12);
        let w = sampling::connected_word(&mut rng, s, c);
        let burau = burau_alexander(&w).expect("connected");
        let mono = FatGraphSurface::new(&w)
            .expect("connected")
            .alexander_from_monodromy();
        ck.require(burau.eq_up_to_unit(&mono), || {
            format!("{w}: {burau} vs {mono}")
        });
    }
    ck.notes.push(format!(
        "{torus_cases} torus knots three ways, {RANDOM_WORDS} random words two ways"
    ));
    ck.finish(6, "Alexander polynomial agreement", start, Some(LIMIT_6))
}

fn random_surface(rng: &mut ChaCha8Rng) -> FatGraphSurface {
    loop {
        let s = rng.gen_range(2..=5);
        let c = rng.gen_range(s + 1..=11);
        let w = sampling::connected_word(rng, s, c);
        let surface = FatGraphSurface::new(&w).expect("connected");
        if surface.first_betti() >= 2 {
            return surface;
        }
    }
}

pub fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut ck = Check::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);

    // (a) Picard–Lefschetz for single twists.
    let mut done = 0;
    while done < RANDOM_PAIRS {
        let s = random_surface(&mut rng);
        let (Some(g), Some(x)) = (
            sampling::simple_curve(&mut rng, &s, 3),
            sampling::closed_walk(&mut rng, &s, 8),
        ) else {
            continue;
        };
        let j = s.intersection_form();
        let (hx, hg) = (x.homology(&s), g.homology(&s));
        let pairing = linalg::bilinear(&j, &hx, &hg);
        let t = TwistFactor::right(&s, &g).expect("simple core");
        let y = t.apply(&x).expect("twist");
        let expect: Vec<i64> = hx.iter().zip(&hg).map(|(a, b)| a + pairing * b).collect();
        ck.require(y.homology(&s) == expect, || {
            format!(
                "{}: twist of {:?} along {:?}",
                s.word(),
                x.steps(),
                g.steps()
            )
        });
        ck.require(curve::intersection_pairing(&s, &x, &g) == pairing, || {
            format!("{}: signed count differs from the form", s.word())
        });
        ck.require(t.inverse().apply(&y).as_ref() == Ok(&x), || {
            format!("{}: twist not inverted", s.word())
        });
        done += 1;
    }

    // (b) homological pairing bounded by geometric intersection.
    let mut done_b = 0;
    let mut sharp = 0;
    while done_b < RANDOM_PAIRS {
        let s = random_surface(&mut rng);
        let (Some(x), Some(y)) = (
            sampling::closed_walk(&mut rng, &s, 8),
            sampling::closed_walk(&mut rng, &s, 8),
        ) else {
            continue;
        };
        let pairing = linalg::bilinear(&s.intersection_form(), &x.homology(&s), &y.homology(&s));
        let i = curve::geometric_intersection(&s, &x, &y);
        ck.require(pairing.unsigned_abs() as usize <= i, || {
            format!("{}: |{pairing}| > {i}", s.word())
        });
        if pairing.unsigned_abs() as usize == i {
            sharp += 1;
        }
        done_b += 1;
    }

    // (c) torus orbit facts.
    let orbit = |p: usize, q: usize, power: usize, column: usize, index: usize| -> bool {
        let s = FatGraphSurface::new(&torus_braid(p, q).expect("torus")).expect("connected");
        let Ok(m) = Monodromy::new(&s) else {
            return false;
        };
        let Ok(r) = s.rectangle_curve(s.column_rectangles(1)[0]) else {
            return false;
        };
        let Ok(img) = m.apply_power(&r, power) else {
            return false;
        };
        let target = s
            .rectangle_curve(s.column_rectangles(column)[index])
            .expect("rectangle");
        img.same_unoriented(&target)
    };
    for k in 1..=2 {
        ck.require(orbit(4, 3, k, k + 1, 0), || {
            format!("T(4,3): φ^{k}(R) is not R_{}", k + 1)
        });
    }
    ck.require(orbit(3, 8, 3, 1, 3), || {
        "T(3,8): φ^3(R) is not R shifted down 3".into()
    });
    ck.require(orbit(5, 7, 5, 1, 5), || {
        "T(5,7): φ^5(R) is not R shifted down 5".into()
    });

    ck.notes.push(format!(
        "{done} twist pairs, {done_b} intersection pairs ({sharp} with equality), 4 orbit facts"
    ));
    ck.finish(7, "curve engine properties", start, Some(LIMIT_7))
}

pub fn criterion_8(chains: &[ChainRecord]) -> Outcome {
    let start = Instant::now();
    let mut ck = Check::new();
    for c in chains {
        let bound = burau_alexander(&c.word).and_then(|d| hironaka_max_n(&d));
        match bound {
            Ok(b) => ck.require(b.n_max > c.n, || {
                format!("{}: chain {} but n_max {}", c.label, c.n, b.n_max)
            }),
            Err(e) => ck.require(false, || format!("{}: {e}", c.label)),
        }
    }
    ck.notes.push(format!(
        "{} chains checked against the coefficient bound",
        chains.len()
    ));
    ck.finish(8, "chains respect the Alexander obstruction", start, None)
}

/// Runs all eight criteria in order.
pub fn run_all() -> Vec<Outcome> {
    run_with(None, |_| {})
}

/// Runs every criterion in order, calling `report` after each one.
/// `max_crossings` caps the exhaustive corpus of criterion 5.
pub fn run_with(max_crossings: Option<usize>, mut report: impl FnMut(&Outcome)) -> Vec<Outcome> {
    let mut chains = Vec::new();
    let mut out = Vec::with_capacity(8);
    let mut push = |o: Outcome| {
        report(&o);
        out.push(o);
    };
    push(criterion_1());
    push(criterion_2(&mut chains));
    push(criterion_3(&mut chains));
    push(criterion_4(&mut chains));
    push(criterion_5_up_to(
        max_crossings.unwrap_or(CORPUS_MAX_CROSSINGS),
    ));
    push(criterion_6());
    push(criterion_7());
    push(criterion_8(&chains));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_criteria() {
        assert!(criterion_1().passed);
        let o = criterion_5_up_to(8);
        assert!(o.passed, "{o}");
    }

    #[test]
    fn memo_counts_remaining_genus() {
        let mut done = HashSet::new();
        let w = torus_braid(3, 4).unwrap();
        assert_eq!(decompose_memo(&w, &mut done), Ok(3));
        assert_eq!(decompose_memo(&w.rotated(2), &mut done), Ok(3));
    }
}
