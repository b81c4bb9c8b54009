//! JSON documents for reports and certificates.
//!
//! Field order is fixed by the struct definitions, so identical inputs
//! serialize to identical bytes. Polynomials are `{exponent: coefficient}`
//! maps, curves are arrays of signed 1-based band indices.

use std::collections::BTreeMap;

use hopfplumb_core::braid::BraidInvariants;
use hopfplumb_core::hironaka::{FeasibilityRow, HironakaBound, HironakaSolution};
use hopfplumb_core::plumbing::{
    ChainCertificate, TorusReport, TrefoilDecomposition, TrefoilStep, Verdict,
};
use hopfplumb_core::{
    BraidWord, Direction, Error, FatGraphSurface, LaurentPolynomial, NormalCurve, RewriteMove,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordDto {
    pub strands: usize,
    pub letters: Vec<u8>,
}

impl From<&BraidWord> for WordDto {
    fn from(w: &BraidWord) -> Self {
        Self {
            strands: w.strands(),
            letters: w.letters().to_vec(),
        }
    }
}

impl WordDto {
    pub fn to_word(&self) -> Result<BraidWord, Error> {
        BraidWord::new(self.strands, self.letters.clone())
    }
}

pub type PolyDto = BTreeMap<i64, i64>;

pub fn poly(p: &LaurentPolynomial) -> PolyDto {
    p.terms().collect()
}

pub fn poly_from(d: &PolyDto) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(d.iter().map(|(&e, &c)| (e, c)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum MoveDto {
    CyclicConjugate { shift: usize },
    BraidRelation { position: usize, raise: bool },
    CommutationSwap { position: usize },
    Destabilize { generator: usize },
}

impl From<&RewriteMove> for MoveDto {
    fn from(m: &RewriteMove) -> Self {
        match *m {
            RewriteMove::CyclicConjugate { shift } => Self::CyclicConjugate { shift },
            RewriteMove::BraidRelation {
                position,
                direction,
            } => Self::BraidRelation {
                position,
                raise: direction == Direction::Raise,
            },
            RewriteMove::CommutationSwap { position } => Self::CommutationSwap { position },
            RewriteMove::Destabilize { generator } => Self::Destabilize { generator },
        }
    }
}

impl From<&MoveDto> for RewriteMove {
    fn from(m: &MoveDto) -> Self {
        match *m {
            MoveDto::CyclicConjugate { shift } => Self::CyclicConjugate { shift },
            MoveDto::BraidRelation { position, raise } => Self::BraidRelation {
                position,
                direction: if raise {
                    Direction::Raise
                } else {
                    Direction::Lower
                },
            },
            MoveDto::CommutationSwap { position } => Self::CommutationSwap { position },
            MoveDto::Destabilize { generator } => Self::Destabilize { generator },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDto {
    pub before: WordDto,
    pub moves: Vec<MoveDto>,
    pub m: usize,
    #[serde(rename = "R")]
    pub r: Vec<i32>,
    #[serde(rename = "phiR")]
    pub phi_r: Vec<i32>,
    pub traversals: usize,
    pub after: WordDto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDto {
    pub word: WordDto,
    pub steps: Vec<StepDto>,
    pub genus: usize,
    pub ribbon_twists: usize,
}

impl From<&TrefoilDecomposition> for DecompositionDto {
    fn from(d: &TrefoilDecomposition) -> Self {
        Self {
            word: (&d.word).into(),
            steps: d
                .steps
                .iter()
                .map(|s| StepDto {
                    before: (&s.before).into(),
                    moves: s.moves.iter().map(MoveDto::from).collect(),
                    m: s.m,
                    r: s.r.steps().to_vec(),
                    phi_r: s.phi_r.steps().to_vec(),
                    traversals: s.traversals,
                    after: (&s.after).into(),
                })
                .collect(),
            genus: d.genus,
            ribbon_twists: d.ribbon_twists(),
        }
    }
}

impl DecompositionDto {
    /// Rebuilds the decomposition and re-validates every step.
    pub fn to_verified(&self) -> Result<TrefoilDecomposition, Error> {
        let mut steps = Vec::with_capacity(self.steps.len());
        for st in &self.steps {
            let before = st.before.to_word()?;
            let moves: Vec<RewriteMove> = st.moves.iter().map(RewriteMove::from).collect();
            let mut normalized = before.clone();
            for mv in &moves {
                normalized = normalized.apply_move(mv)?;
            }
            let s = FatGraphSurface::new(&normalized)?;
            steps.push(TrefoilStep {
                before,
                moves,
                r: NormalCurve::new(&s, &st.r)?,
                phi_r: NormalCurve::new(&s, &st.phi_r)?,
                normalized,
                m: st.m,
                traversals: st.traversals,
                after: st.after.to_word()?,
            });
        }
        let word = self.word.to_word()?;
        let final_word = steps
            .last()
            .map_or_else(|| word.clone(), |s| s.after.clone());
        let d = TrefoilDecomposition {
            word,
            steps,
            final_word,
            genus: self.genus,
        };
        d.verify()?;
        if d.ribbon_twists() != self.ribbon_twists {
            return Err(Error::CertificateMismatch("ribbon twist count".into()));
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDto {
    pub word: WordDto,
    pub n: usize,
    pub curves: Vec<Vec<i32>>,
    pub intersections: Vec<Vec<usize>>,
    pub rank: usize,
    pub seed: usize,
    pub arc_rank: usize,
    pub cut_connected: bool,
}

impl From<&ChainCertificate> for ChainDto {
    fn from(c: &ChainCertificate) -> Self {
        Self {
            word: (&c.word).into(),
            n: c.n,
            curves: c.curves.iter().map(|x| x.steps().to_vec()).collect(),
            intersections: c.intersections.clone(),
            rank: c.rank,
            seed: c.seed,
            arc_rank: c.arc_rank,
            cut_connected: c.cut_connected(),
        }
    }
}

impl ChainDto {
    pub fn to_verified(&self) -> Result<ChainCertificate, Error> {
        let word = self.word.to_word()?;
        let s = FatGraphSurface::new(&word)?;
        let curves = self
            .curves
            .iter()
            .map(|c| NormalCurve::new(&s, c))
            .collect::<Result<Vec<_>, _>>()?;
        let cert = ChainCertificate {
            word,
            seed: self.seed,
            n: self.n,
            curves,
            intersections: self.intersections.clone(),
            rank: self.rank,
            arc_rank: self.arc_rank,
        };
        cert.verify()?;
        if cert.cut_connected() != self.cut_connected {
            return Err(Error::CertificateMismatch("cut connectivity flag".into()));
        }
        Ok(cert)
    }
}

/// Either certificate kind, tagged for reloading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    TrefoilDecomposition(DecompositionDto),
    Chain(ChainDto),
}

impl Certificate {
    pub fn verify(&self) -> Result<(), Error> {
        match self {
            Certificate::TrefoilDecomposition(d) => d.to_verified().map(|_| ()),
            Certificate::Chain(c) => c.to_verified().map(|_| ()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsDto {
    pub crossings: usize,
    pub strands: usize,
    pub first_betti: usize,
    pub components: usize,
    pub genus: Option<usize>,
    pub reduced: bool,
    pub connected: bool,
}

impl From<&BraidInvariants> for InvariantsDto {
    fn from(i: &BraidInvariants) -> Self {
        Self {
            crossings: i.crossings,
            strands: i.strands,
            first_betti: i.first_betti,
            components: i.components,
            genus: i.genus,
            reduced: i.reduced,
            connected: i.connected,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SolutionDto {
    pub n: usize,
    pub epsilon: i8,
    pub d: usize,
    #[serde(rename = "P")]
    pub p: PolyDto,
    pub degree_p: Option<i64>,
    pub attains_degree: bool,
    pub negated: bool,
}

impl From<&HironakaSolution> for SolutionDto {
    fn from(s: &HironakaSolution) -> Self {
        Self {
            n: s.n,
            epsilon: s.epsilon,
            d: s.d,
            p: poly(&s.p),
            degree_p: s.degree(),
            attains_degree: s.attains_degree(),
            negated: s.negated,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FeasibilityDto {
    pub n: usize,
    pub epsilon: i8,
    pub feasible: bool,
    pub solution: Option<SolutionDto>,
}

impl From<&FeasibilityRow> for FeasibilityDto {
    fn from(r: &FeasibilityRow) -> Self {
        Self {
            n: r.n,
            epsilon: r.epsilon,
            feasible: r.solution.is_some(),
            solution: r.solution.as_ref().map(SolutionDto::from),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundDto {
    pub delta: PolyDto,
    pub n_max: usize,
    pub n_max_strict: Option<usize>,
    pub plumbing_bound: usize,
    pub table: Vec<FeasibilityDto>,
}

impl From<&HironakaBound> for BoundDto {
    fn from(b: &HironakaBound) -> Self {
        Self {
            delta: poly(&b.delta),
            n_max: b.n_max,
            n_max_strict: b.n_max_strict,
            plumbing_bound: b.plumbing_bound(),
            table: b.table.iter().map(FeasibilityDto::from).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TorusDto {
    pub p: usize,
    pub q: usize,
    pub detector_n: usize,
    pub hironaka_max_plumbing: Option<usize>,
    pub verdict: &'static str,
    pub certificate: Certificate,
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Exact => "exact",
        Verdict::Gap => "gap",
        Verdict::Unbounded => "unbounded",
    }
}

impl From<&TorusReport> for TorusDto {
    fn from(r: &TorusReport) -> Self {
        Self {
            p: r.p,
            q: r.q,
            detector_n: r.detector_n,
            hironaka_max_plumbing: r.hironaka_max_plumbing(),
            verdict: verdict_name(r.verdict),
            certificate: Certificate::Chain((&r.certificate).into()),
        }
    }
}

/// Polynomial in sparse and dense form.
#[derive(Debug, Clone, Serialize)]
pub struct PolyReport {
    pub sparse: PolyDto,
    pub dense: Vec<i64>,
    pub text: String,
}

impl From<&LaurentPolynomial> for PolyReport {
    fn from(p: &LaurentPolynomial) -> Self {
        Self {
            sparse: poly(p),
            dense: p.dense().1,
            text: p.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorDto {
    pub error: &'static str,
    pub message: String,
    pub internal: bool,
}

impl From<&Error> for ErrorDto {
    fn from(e: &Error) -> Self {
        Self {
            error: e.code(),
            message: e.to_string(),
            internal: e.is_internal(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfplumb_core::braid::DEFAULT_SEARCH_BUDGET;
    use hopfplumb_core::plumbing::{detect_chain, trefoil_decompose};

    #[test]
    fn polynomial_maps_use_exponent_keys() {
        let p = LaurentPolynomial::from_coeffs(&[1, -1, 1]);
        assert_eq!(
            serde_json::to_string(&poly(&p)).unwrap(),
            r#"{"0":1,"1":-1,"2":1}"#
        );
        assert_eq!(poly_from(&poly(&p)), p);
    }

    #[test]
    fn decomposition_round_trip() {
        let w = BraidWord::parse("1 2 1 2 1 2 1 2", None).unwrap();
        let d = trefoil_decompose(&w, DEFAULT_SEARCH_BUDGET).unwrap();
        let cert = Certificate::TrefoilDecomposition((&d).into());
        let text = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
        back.verify().unwrap();
    }

    #[test]
    fn chain_round_trip_and_tamper() {
        let w = BraidWord::parse("1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2", None).unwrap();
        let s = FatGraphSurface::new(&w).unwrap();
        let c = detect_chain(&s, 0, 20).unwrap();
        let dto = ChainDto::from(&c);
        assert_eq!(dto.to_verified().unwrap(), c);
        let mut bad = dto.clone();
        bad.curves[1] = bad.curves[0].clone();
        assert!(bad.to_verified().unwrap_err().is_internal());
    }
}
