use alloc::string::String;
use core::fmt;

use crate::laurent::LaurentPolynomial;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A token of a braid word is not an integer.
    InvalidToken(String),
    /// Generator index 0 or negative.
    InvalidGenerator(i64),
    /// Generator index not below the strand count.
    GeneratorOutOfRange {
        generator: usize,
        strands: usize,
    },
    TooManyStrands(usize),
    /// Some generator in `1..strands` never occurs, so the closure splits.
    DisconnectedWord {
        missing: usize,
    },
    IllegalMove(String),
    /// The closure is the unknot (or the word destabilizes to nothing).
    TrivialLink,
    SearchBudgetExceeded {
        budget: usize,
    },
    NotAKnot {
        components: usize,
    },
    TrivialKnot,
    /// `phi(R)` crosses the arc it must avoid. Never expected; indicates an engine bug.
    DisjointnessFailure {
        traversals: usize,
    },
    NotDivisible {
        remainder: LaurentPolynomial,
    },
    NotCoprime {
        p: u32,
        q: u32,
    },
    ZeroPolynomial,
    EmptyCurve,
    NonEmbeddedCore {
        self_intersection: usize,
    },
    BoundaryParallelCore,
    InvalidCurve(String),
    InvalidRectangle(usize),
    /// A certificate did not re-validate.
    CertificateMismatch(String),
}

impl Error {
    /// Errors that signal a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::DisjointnessFailure { .. } | Error::CertificateMismatch(_)
        )
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidToken(_) => "invalid_token",
            Error::InvalidGenerator(_) => "invalid_generator",
            Error::GeneratorOutOfRange { .. } => "generator_out_of_range",
            Error::TooManyStrands(_) => "too_many_strands",
            Error::DisconnectedWord { .. } => "disconnected_word",
            Error::IllegalMove(_) => "illegal_move",
            Error::TrivialLink => "trivial_link",
            Error::SearchBudgetExceeded { .. } => "search_budget_exceeded",
            Error::NotAKnot { .. } => "not_a_knot",
            Error::TrivialKnot => "trivial_knot",
            Error::DisjointnessFailure { .. } => "disjointness_failure",
            Error::NotDivisible { .. } => "not_divisible",
            Error::NotCoprime { .. } => "not_coprime",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::EmptyCurve => "empty_curve",
            Error::NonEmbeddedCore { .. } => "non_embedded_core",
            Error::BoundaryParallelCore => "boundary_parallel_core",
            Error::InvalidCurve(_) => "invalid_curve",
            Error::InvalidRectangle(_) => "invalid_rectangle",
            Error::CertificateMismatch(_) => "certificate_mismatch",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidToken(t) => write!(f, "not a generator index: {t:?}"),
            Error::InvalidGenerator(g) => write!(f, "generator index must be positive, got {g}"),
            Error::GeneratorOutOfRange { generator, strands } => {
                write!(f, "generator {generator} needs more than {strands} strands")
            }
            Error::TooManyStrands(s) => {
                write!(f, "{s} strands exceeds the supported maximum of 255")
            }
            Error::DisconnectedWord { missing } => {
                write!(
                    f,
                    "generator {missing} does not occur; the closure is split"
                )
            }
            Error::IllegalMove(why) => write!(f, "illegal move: {why}"),
            Error::TrivialLink => write!(f, "closure is the trivial knot"),
            Error::SearchBudgetExceeded { budget } => {
                write!(f, "rewrite search exhausted its budget of {budget} nodes")
            }
            Error::NotAKnot { components } => {
                write!(f, "closure has {components} components, expected a knot")
            }
            Error::TrivialKnot => write!(f, "closure is the unknot (genus 0)"),
            Error::DisjointnessFailure { traversals } => write!(
                f,
                "internal consistency failure: phi(R) crosses the deplumbing arc {traversals} times"
            ),
            Error::NotDivisible { remainder } => write!(f, "not divisible, remainder {remainder}"),
            Error::NotCoprime { p, q } => write!(f, "T({p},{q}) is not a knot: gcd({p},{q}) > 1"),
            Error::ZeroPolynomial => write!(f, "polynomial is zero"),
            Error::EmptyCurve => write!(f, "curve is null-homotopic"),
            Error::NonEmbeddedCore { self_intersection } => write!(
                f,
                "twist core is not embedded (self-intersection {self_intersection})"
            ),
            Error::BoundaryParallelCore => write!(f, "twist core is boundary parallel"),
            Error::InvalidCurve(why) => write!(f, "invalid curve: {why}"),
            Error::InvalidRectangle(i) => write!(f, "no rectangle with index {i}"),
            Error::CertificateMismatch(why) => write!(f, "certificate does not validate: {why}"),
        }
    }
}

impl core::error::Error for Error {}
