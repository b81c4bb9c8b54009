//! Plumbing summands: monodromy-orbit chains, trefoil deplumbing and torus braids.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::alexander::torus_alexander;
use crate::braid::{BraidWord, RewriteMove};
use crate::curve::{self, Monodromy, NormalCurve};
use crate::error::{Error, Result};
use crate::hironaka::{hironaka_max_n, HironakaBound};
use crate::linalg;
use crate::surface::FatGraphSurface;

/// Evidence that `C_k = φ^k(C_0)`, `k < n`, is a chain of homologically
/// independent embedded curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCertificate {
    pub word: BraidWord,
    /// Basis index of the seed rectangle.
    pub seed: usize,
    pub n: usize,
    pub curves: Vec<NormalCurve>,
    /// Geometric intersection numbers `i(C_a, C_b)`.
    pub intersections: Vec<Vec<usize>>,
    /// Rank over the rationals of the homology classes.
    pub rank: usize,
    /// Rank over `Z/2` of the cutting arcs `φ^k(I)`, `k < n`; equal to `n`
    /// exactly when the surface stays connected after cutting.
    pub arc_rank: usize,
}

impl ChainCertificate {
    pub fn cut_connected(&self) -> bool {
        self.arc_rank == self.n
    }

    /// Recomputes every stored quantity from the word and the curves.
    pub fn verify(&self) -> Result<()> {
        let s = FatGraphSurface::new(&self.word)?;
        let mismatch = |what: &str| Err(Error::CertificateMismatch(what.into()));
        if self.curves.len() != self.n || self.n == 0 {
            return mismatch("curve count differs from n");
        }
        let m = Monodromy::new(&s)?;
        if self.curves[0] != s.rectangle_curve(self.seed)? {
            return mismatch("first curve is not the seed rectangle");
        }
        for k in 1..self.n {
            if m.apply(&self.curves[k - 1])? != self.curves[k] {
                return mismatch("curves are not consecutive monodromy images");
            }
        }
        let table = intersection_table(&s, &self.curves);
        if table != self.intersections {
            return mismatch("intersection table");
        }
        if !is_chain(&table) {
            return mismatch("curves do not form a chain");
        }
        if self.curves.iter().any(|c| !c.is_embedded(&s)) {
            return mismatch("a chain curve is not embedded");
        }
        if homology_rank(&s, &self.curves) != self.rank || self.rank != self.n {
            return mismatch("homology rank");
        }
        let j0 = s.rectangles()[self.seed].top;
        if arc_rank(&s, j0, self.n) != self.arc_rank {
            return mismatch("arc rank");
        }
        Ok(())
    }
}

fn intersection_table(s: &FatGraphSurface, curves: &[NormalCurve]) -> Vec<Vec<usize>> {
    let n = curves.len();
    let mut t = vec![vec![0; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let i = curve::geometric_intersection(s, &curves[a], &curves[b]);
            t[a][b] = i;
            t[b][a] = i;
        }
    }
    t
}

fn is_chain(t: &[Vec<usize>]) -> bool {
    (0..t.len()).all(|a| {
        (0..t.len()).all(|b| match a.abs_diff(b) {
            0 => true,
            1 => t[a][b] == 1,
            _ => t[a][b] == 0,
        })
    })
}

fn homology_rank(s: &FatGraphSurface, curves: &[NormalCurve]) -> usize {
    let rows: Vec<Vec<i64>> = curves.iter().map(|c| c.homology(s)).collect();
    linalg::rank_q(&rows)
}

/// `Z/2` rank of the functionals `x -> <x, φ^k(I)> = z_j(H^{-k} x)`,
/// `k < n`, where `I` is the cocore arc of band `j`.
fn arc_rank(s: &FatGraphSurface, j: usize, n: usize) -> usize {
    let b = s.first_betti();
    let h = s.homological_monodromy();
    let Some(h_inv) = linalg::inverse_unimodular(&h) else {
        return 0;
    };
    let mut f: Vec<i64> = (0..b)
        .map(|a| {
            let mut e = vec![0i64; b];
            e[a] = 1;
            s.edges_of_homology(&e)[j]
        })
        .collect();
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        rows.push(f.clone());
        // f <- f H^{-1}
        f = (0..b)
            .map(|c| (0..b).map(|r| f[r] * h_inv[r][c]).sum())
            .collect();
    }
    linalg::rank_mod2(&rows)
}

/// Longest chain prefix of the monodromy orbit of a rectangle curve, up to `max_n`.
pub fn detect_chain(s: &FatGraphSurface, seed: usize, max_n: usize) -> Result<ChainCertificate> {
    let m = Monodromy::new(s)?;
    detect_chain_with(s, &m, seed, max_n)
}

pub fn detect_chain_with(
    s: &FatGraphSurface,
    m: &Monodromy,
    seed: usize,
    max_n: usize,
) -> Result<ChainCertificate> {
    let first = s.rectangle_curve(seed)?;
    let limit = max_n.clamp(1, s.first_betti().max(1));
    let mut curves = vec![first];
    let mut homology = vec![curves[0].homology(s)];
    while curves.len() < limit {
        let next = m.apply(curves.last().unwrap())?;
        let k = curves.len();
        let chained = curves.iter().enumerate().all(|(a, c)| {
            let want = usize::from(a + 1 == k);
            curve::geometric_intersection(s, c, &next) == want
        });
        if !chained || !next.is_embedded(s) {
            break;
        }
        homology.push(next.homology(s));
        if linalg::rank_q(&homology) != k + 1 {
            break;
        }
        curves.push(next);
    }
    let n = curves.len();
    let j0 = s.rectangles()[seed].top;
    Ok(ChainCertificate {
        word: s.word().clone(),
        seed,
        n,
        intersections: intersection_table(s, &curves),
        rank: homology_rank(s, &curves),
        arc_rank: arc_rank(s, j0, n),
        curves,
    })
}

/// One trefoil deplumbing: normalize to `σ_m² σ_{m-1}^+ … σ_1^+ …`, check
/// that `φ(R)` avoids the top `σ_m` band, and remove `σ_m²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrefoilStep {
    pub before: BraidWord,
    pub moves: Vec<RewriteMove>,
    pub normalized: BraidWord,
    pub m: usize,
    /// The top rectangle curve of column `m` on the normalized surface.
    pub r: NormalCurve,
    pub phi_r: NormalCurve,
    /// Traversals of band 0 by `φ(R)`.
    pub traversals: usize,
    pub after: BraidWord,
}

impl TrefoilStep {
    pub fn verify(&self) -> Result<()> {
        let mismatch = |what: &str| Err(Error::CertificateMismatch(what.into()));
        let mut w = self.before.clone();
        for mv in &self.moves {
            w = w.apply_move(mv)?;
        }
        if w != self.normalized {
            return mismatch("moves do not produce the normalized word");
        }
        if self.normalized.square_prefix() != Some(self.m) {
            return mismatch("normalized word lacks the square prefix");
        }
        let s = FatGraphSurface::new(&self.normalized)?;
        let r =
            curve::curve_from_rectangle(&s, &s.rectangles()[s.top_rectangle(self.m).unwrap_or(0)])?;
        if r != self.r || r.traverses_band(0) != 1 {
            return mismatch("R is not the top rectangle of column m");
        }
        let phi_r = Monodromy::new(&s)?.apply(&r)?;
        if phi_r != self.phi_r {
            return mismatch("φ(R)");
        }
        let traversals = phi_r.traverses_band(0);
        if traversals != self.traversals {
            return mismatch("traversal count");
        }
        if traversals != 0 {
            return Err(Error::DisjointnessFailure { traversals });
        }
        let after = BraidWord::new(
            self.normalized.strands(),
            self.normalized.letters()[2..].to_vec(),
        )?;
        if after != self.after {
            return mismatch("word after removal");
        }
        if after.first_betti() + 2 != self.normalized.first_betti() {
            return mismatch("first Betti number did not drop by two");
        }
        Ok(())
    }
}

fn knot_genus(w: &BraidWord) -> Result<usize> {
    let components = w.component_count();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    Ok(w.first_betti() / 2)
}

pub fn trefoil_step(w: &BraidWord, budget: usize) -> Result<TrefoilStep> {
    if knot_genus(w)? == 0 {
        return Err(Error::TrivialKnot);
    }
    let norm = w.normalize_to_square(budget)?;
    let word = norm.word;
    let s = FatGraphSurface::new(&word)?;
    let top = s
        .top_rectangle(norm.m)
        .ok_or_else(|| Error::CertificateMismatch(format!("no rectangle in column {}", norm.m)))?;
    let r = s.rectangle_curve(top)?;
    let phi_r = Monodromy::new(&s)?.apply(&r)?;
    let traversals = phi_r.traverses_band(0);
    if traversals != 0 {
        return Err(Error::DisjointnessFailure { traversals });
    }
    let after = BraidWord::new(word.strands(), word.letters()[2..].to_vec())?;
    Ok(TrefoilStep {
        before: w.clone(),
        moves: norm.moves,
        normalized: word,
        m: norm.m,
        r,
        phi_r,
        traversals,
        after,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrefoilDecomposition {
    pub word: BraidWord,
    pub steps: Vec<TrefoilStep>,
    /// The last remainder, which destabilizes to the empty word.
    pub final_word: BraidWord,
    pub genus: usize,
}

impl TrefoilDecomposition {
    /// Number of ribbon twists that untwist the fibre surface: one per step.
    pub fn ribbon_twists(&self) -> usize {
        self.steps.len()
    }

    pub fn verify(&self) -> Result<()> {
        let mismatch = |what: &str| Err(Error::CertificateMismatch(what.into()));
        if knot_genus(&self.word)? != self.genus || self.steps.len() != self.genus {
            return mismatch("step count differs from genus");
        }
        let mut current = &self.word;
        for step in &self.steps {
            if &step.before != current {
                return mismatch("steps are not chained");
            }
            step.verify()?;
            current = &step.after;
        }
        if current != &self.final_word {
            return mismatch("final word");
        }
        let end = self.final_word.fully_destabilized();
        if !(end.is_empty() && end.strands() == 1) {
            return mismatch("final word does not destabilize to the empty word");
        }
        Ok(())
    }
}

pub fn trefoil_decompose(w: &BraidWord, budget: usize) -> Result<TrefoilDecomposition> {
    let genus = knot_genus(w)?;
    let mut steps = Vec::with_capacity(genus);
    let mut current = w.clone();
    while current.first_betti() > 0 {
        let step = trefoil_step(&current, budget)?;
        current = step.after.clone();
        steps.push(step);
    }
    let d = TrefoilDecomposition {
        word: w.clone(),
        steps,
        final_word: current,
        genus,
    };
    if d.steps.len() != genus || !d.final_word.fully_destabilized().is_empty() {
        return Err(Error::CertificateMismatch(
            "decomposition did not reach the unknot".into(),
        ));
    }
    Ok(d)
}

/// `(σ_1 σ_2 … σ_{p-1})^q` on `p` strands.
pub fn torus_braid(p: usize, q: usize) -> Result<BraidWord> {
    let letters: Vec<usize> = (0..q).flat_map(|_| 1..p).collect();
    let letters = letters.into_iter().map(|g| g as u8).collect();
    BraidWord::new(p.max(1), letters)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The detected chain meets the coefficient-matching bound.
    Exact,
    /// A gap remains between detector and bound.
    Gap,
    /// No bound was computed.
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct TorusReport {
    pub p: usize,
    pub q: usize,
    pub detector_n: usize,
    pub certificate: ChainCertificate,
    pub bound: Option<HironakaBound>,
    pub verdict: Verdict,
}

impl TorusReport {
    pub fn hironaka_max_plumbing(&self) -> Option<usize> {
        self.bound.as_ref().map(HironakaBound::plumbing_bound)
    }
}

/// Best chain over the column-1 seeds of `T(p, q)`, compared with the
/// bound from the torus knot's Alexander polynomial when requested.
pub fn torus_summand_report(p: usize, q: usize, with_bound: bool) -> Result<TorusReport> {
    let w = torus_braid(p, q)?;
    let s = FatGraphSurface::new(&w)?;
    let m = Monodromy::new(&s)?;
    let mut best: Option<ChainCertificate> = None;
    for seed in s.column_rectangles(1) {
        let cert = detect_chain_with(&s, &m, seed, s.first_betti())?;
        if best.as_ref().is_none_or(|b| cert.n > b.n) {
            best = Some(cert);
        }
    }
    let certificate = best.ok_or(Error::InvalidRectangle(0))?;
    let bound = if with_bound {
        let delta = torus_alexander(p as u32, q as u32)?;
        Some(hironaka_max_n(&delta)?)
    } else {
        None
    };
    let detector_n = certificate.n;
    let verdict = match &bound {
        None => Verdict::Unbounded,
        Some(b) if b.plumbing_bound() == detector_n => Verdict::Exact,
        Some(b) if b.plumbing_bound() > detector_n => Verdict::Gap,
        Some(_) => {
            return Err(Error::CertificateMismatch(format!(
                "chain of length {detector_n} exceeds the coefficient bound"
            )))
        }
    };
    Ok(TorusReport {
        p,
        q,
        detector_n,
        certificate,
        bound,
        verdict,
    })
}
