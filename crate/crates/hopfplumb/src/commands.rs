//! Command implementations behind the binary, returning JSON values.

use std::fmt;
use std::io;
use std::path::{Path, PathBuf};

use hopfplumb_core::alexander::{burau_alexander, torus_alexander};
use hopfplumb_core::hironaka::hironaka_max_n;
use hopfplumb_core::plumbing::{
    detect_chain_with, torus_braid, torus_summand_report, trefoil_decompose,
};
use hopfplumb_core::{BraidWord, Error, FatGraphSurface, Monodromy, NormalCurve};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::json::{
    BoundDto, Certificate, ChainDto, DecompositionDto, ErrorDto, InvariantsDto, PolyReport,
    TorusDto, WordDto,
};
use crate::{acceptance, svg, write_atomic};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Io(io::Error),
    Json(serde_json::Error),
    Usage(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(e) if e.is_internal() => EXIT_INTERNAL,
            Failure::Io(_) => EXIT_INTERNAL,
            _ => EXIT_DOMAIN,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Failure::Core(e) => serde_json::to_value(ErrorDto::from(e)).expect("serializable"),
            Failure::Io(e) => json!({"error": "io", "message": e.to_string(), "internal": true}),
            Failure::Json(e) => {
                json!({"error": "json", "message": e.to_string(), "internal": false})
            }
            Failure::Usage(m) => json!({"error": "usage", "message": m, "internal": false}),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
            Failure::Json(e) => write!(f, "{e}"),
            Failure::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Json(e)
    }
}

pub type Outcome = Result<Value, Failure>;

/// A braid word, or the torus braid `(σ_1 … σ_{p-1})^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source<'a> {
    Word {
        text: &'a str,
        strands: Option<usize>,
    },
    Torus {
        p: usize,
        q: usize,
    },
}

impl Source<'_> {
    pub fn word(&self) -> Result<BraidWord, Failure> {
        match *self {
            Source::Word { text, strands } => Ok(BraidWord::parse(text, strands)?),
            Source::Torus { p, q } => Ok(torus_braid(p, q)?),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub seed: Option<usize>,
    pub max_n: Option<usize>,
    pub budget: Option<usize>,
    pub power: Option<usize>,
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Decompose,
    Chain,
    Bound,
    Orbit,
}

fn value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn svg_out(
    path: Option<&Path>,
    s: &FatGraphSurface,
    curves: &[NormalCurve],
) -> Result<(), Failure> {
    if let Some(p) = path {
        svg::write(s, curves, p)?;
    }
    Ok(())
}

pub fn run(cmd: Command, src: Source<'_>, opts: &Options) -> Outcome {
    let w = src.word()?;
    match cmd {
        Command::Analyze => analyze(&w, src, opts),
        Command::Decompose => decompose(&w, opts),
        Command::Chain => chain(&w, opts),
        Command::Bound => bound(&w, src),
        Command::Orbit => orbit(&w, opts),
    }
}

pub fn analyze(w: &BraidWord, src: Source<'_>, opts: &Options) -> Outcome {
    let inv = w.invariants()?;
    let s = FatGraphSurface::new(w)?;
    s.check_invariants()?;
    let burau = burau_alexander(w)?;
    let mono = s.alexander_from_monodromy();
    let torus = match src {
        Source::Torus { p, q } => torus_alexander(p as u32, q as u32).ok(),
        Source::Word { .. } => None,
    };
    let agree =
        burau.eq_up_to_unit(&mono) && torus.as_ref().is_none_or(|t| t.eq_up_to_unit(&burau));
    if !agree {
        return Err(
            Error::CertificateMismatch("Alexander polynomial methods disagree".into()).into(),
        );
    }
    svg_out(opts.svg.as_deref(), &s, &[])?;
    let rectangles: Vec<Value> = s
        .rectangles()
        .iter()
        .map(|r| json!({"column": r.column, "top": r.top, "bottom": r.bottom}))
        .collect();
    Ok(json!({
        "word": value(&WordDto::from(w)),
        "invariants": value(&InvariantsDto::from(&inv)),
        "surface": {
            "euler_characteristic": s.euler_characteristic(),
            "boundary_components": s.boundary_count(),
            "genus": s.genus(),
            "rectangles": rectangles,
            "twist_order": s.twist_order(),
            "intersection_form": s.intersection_form(),
            "homological_monodromy": s.homological_monodromy(),
        },
        "alexander": {
            "torus_formula": torus.as_ref().map(|t| value(&PolyReport::from(t))),
            "burau": value(&PolyReport::from(&burau)),
            "monodromy": value(&PolyReport::from(&mono)),
            "agree": agree,
        },
    }))
}

pub fn decompose(w: &BraidWord, opts: &Options) -> Outcome {
    let budget = opts
        .budget
        .unwrap_or(hopfplumb_core::braid::DEFAULT_SEARCH_BUDGET);
    let d = trefoil_decompose(w, budget)?;
    d.verify()?;
    if let Some(first) = d.steps.first() {
        let s = FatGraphSurface::new(&first.normalized)?;
        svg_out(
            opts.svg.as_deref(),
            &s,
            &[first.r.clone(), first.phi_r.clone()],
        )?;
    }
    Ok(value(&Certificate::TrefoilDecomposition(
        DecompositionDto::from(&d),
    )))
}

pub fn chain(w: &BraidWord, opts: &Options) -> Outcome {
    let s = FatGraphSurface::new(w)?;
    let m = Monodromy::new(&s)?;
    let seed = opts.seed.unwrap_or(0);
    let cert = detect_chain_with(&s, &m, seed, opts.max_n.unwrap_or(s.first_betti()))?;
    cert.verify()?;
    svg_out(opts.svg.as_deref(), &s, &cert.curves)?;
    Ok(value(&Certificate::Chain(ChainDto::from(&cert))))
}

pub fn bound(w: &BraidWord, src: Source<'_>) -> Outcome {
    let delta = match src {
        Source::Torus { p, q } => torus_alexander(p as u32, q as u32)?,
        Source::Word { .. } => burau_alexander(w)?,
    };
    let b = hironaka_max_n(&delta)?;
    Ok(json!({"word": value(&WordDto::from(w)), "bound": value(&BoundDto::from(&b))}))
}

pub fn orbit(w: &BraidWord, opts: &Options) -> Outcome {
    let s = FatGraphSurface::new(w)?;
    let m = Monodromy::new(&s)?;
    let seed = opts.seed.unwrap_or(0);
    let power = opts.power.unwrap_or(1);
    let mut curves = vec![s.rectangle_curve(seed)?];
    for _ in 0..power {
        curves.push(m.apply(curves.last().expect("nonempty"))?);
    }
    svg_out(opts.svg.as_deref(), &s, &curves)?;
    let entries: Vec<Value> = curves
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let single = (0..s.first_betti())
                .find(|&r| s.rectangle_curve(r).is_ok_and(|rc| rc.same_unoriented(c)));
            json!({
                "k": k,
                "curve": c.steps(),
                "support": c.edge_support(),
                "homology": c.homology(&s),
                "rectangle": single,
            })
        })
        .collect();
    Ok(json!({"word": value(&WordDto::from(w)), "seed": seed, "orbit": entries}))
}

pub fn torus(p: usize, q: usize, opts: &Options) -> Outcome {
    let r = torus_summand_report(p, q, true)?;
    r.certificate.verify()?;
    let s = FatGraphSurface::new(&r.certificate.word)?;
    svg_out(opts.svg.as_deref(), &s, &r.certificate.curves)?;
    Ok(value(&TorusDto::from(&r)))
}

pub fn verify_file(path: &Path) -> Outcome {
    let text = std::fs::read_to_string(path)?;
    let cert: Certificate = serde_json::from_str(&text)?;
    cert.verify()?;
    let kind = match cert {
        Certificate::TrefoilDecomposition(_) => "trefoil_decomposition",
        Certificate::Chain(_) => "chain",
    };
    Ok(json!({"kind": kind, "valid": true}))
}

/// Runs the acceptance suite, printing one line per criterion.
pub fn selftest(max_crossings: Option<usize>, print: bool) -> (Value, bool) {
    let outcomes = acceptance::run_with(max_crossings, |o| {
        if print {
            eprintln!("{o}");
        }
    });
    let all = outcomes.iter().all(|o| o.passed);
    let list: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({"criterion": o.id, "title": o.title, "passed": o.passed, "detail": o.detail}))
        .collect();
    (json!({"passed": all, "criteria": list}), all)
}

/// One input per non-empty, non-comment line, processed in parallel.
/// Results keep the input order.
pub fn batch(cmd: Command, lines: &str, strands: Option<usize>, opts: &Options) -> (Value, i32) {
    let inputs: Vec<&str> = lines
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let opts = Options {
        svg: None,
        ..opts.clone()
    };
    let results: Vec<(Value, i32)> = inputs
        .par_iter()
        .map(
            |text| match run(cmd, Source::Word { text, strands }, &opts) {
                Ok(v) => (json!({"input": text, "result": v}), EXIT_OK),
                Err(e) => (json!({"input": text, "error": e.to_json()}), e.exit_code()),
            },
        )
        .collect();
    let code = results.iter().map(|r| r.1).max().unwrap_or(EXIT_OK);
    (
        Value::Array(results.into_iter().map(|r| r.0).collect()),
        code,
    )
}

pub fn emit(v: &Value, json_path: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v)? + "\n";
    if let Some(p) = json_path {
        write_atomic(p, text.as_bytes())?;
    }
    print!("{text}");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(t: &str) -> Source<'_> {
        Source::Word {
            text: t,
            strands: None,
        }
    }

    #[test]
    fn analyze_unknot() {
        let v = run(Command::Analyze, word("1 2"), &Options::default()).unwrap();
        assert_eq!(v["invariants"]["genus"], 0);
        assert_eq!(v["alexander"]["burau"]["sparse"], json!({"0": 1}));
    }

    #[test]
    fn decompose_trefoil() {
        let v = run(Command::Decompose, word("1 1 1"), &Options::default()).unwrap();
        assert_eq!(v["kind"], "trefoil_decomposition");
        assert_eq!(v["steps"].as_array().unwrap().len(), 1);
        assert_eq!(v["ribbon_twists"], 1);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["kind", "word", "steps", "genus", "ribbon_twists"]);
    }

    #[test]
    fn errors_map_to_exit_codes() {
        let e = run(Command::Decompose, word("1 2 1 2 1 2"), &Options::default()).unwrap_err();
        assert_eq!(e.exit_code(), EXIT_DOMAIN);
        assert_eq!(e.to_json()["error"], "not_a_knot");
        assert_eq!(
            Failure::Core(Error::DisjointnessFailure { traversals: 1 }).exit_code(),
            EXIT_INTERNAL
        );
    }

    #[test]
    fn batch_keeps_order() {
        let (v, code) = batch(
            Command::Analyze,
            "1 1 1\n# skip\n\n0 1\n1 2 1 2\n",
            None,
            &Options::default(),
        );
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 3);
        assert_eq!(arr[0]["input"], "1 1 1");
        assert_eq!(arr[1]["error"]["error"], "invalid_generator");
        assert_eq!(code, EXIT_DOMAIN);
    }
}
