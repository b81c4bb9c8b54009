//! Seeded random words and curves for the randomized acceptance checks.

use hopfplumb_core::curve::{Handedness, NormalCurve, TwistFactor};
use hopfplumb_core::{BraidWord, FatGraphSurface};
use rand::seq::SliceRandom;
use rand::Rng;

/// A uniformly random connected positive word with `strands` strands and
/// `c` letters (rejection sampling; needs `c >= strands - 1`).
pub fn connected_word<R: Rng>(rng: &mut R, strands: usize, c: usize) -> BraidWord {
    assert!(strands >= 2 && c + 1 >= strands);
    loop {
        let letters: Vec<u8> = (0..c).map(|_| rng.gen_range(1..strands) as u8).collect();
        let w = BraidWord::new(strands, letters).expect("letters in range");
        if w.is_connected() {
            return w;
        }
    }
}

fn step_along(s: &FatGraphSurface, v: usize, p: usize) -> (i32, usize) {
    if s.lo(p) == v {
        ((p + 1) as i32, s.hi(p))
    } else {
        (-((p + 1) as i32), s.lo(p))
    }
}

/// A random closed walk on the spine: `len` free steps, then straight back.
pub fn closed_walk<R: Rng>(rng: &mut R, s: &FatGraphSurface, len: usize) -> Option<NormalCurve> {
    let home = rng.gen_range(0..s.strands());
    let mut v = home;
    let mut path = Vec::with_capacity(2 * len);
    for _ in 0..len {
        let p = *s.vertex_slots(v).choose(rng)?;
        let (st, next) = step_along(s, v, p);
        path.push(st);
        v = next;
    }
    while v != home {
        let column = if home > v { v + 1 } else { v };
        let p = *s.column_positions(column).choose(rng)?;
        let (st, next) = step_along(s, v, p);
        path.push(st);
        v = next;
    }
    NormalCurve::new(s, &path).ok()
}

/// A random essential simple closed curve: a rectangle curve moved by a
/// few random rectangle twists.
pub fn simple_curve<R: Rng>(
    rng: &mut R,
    s: &FatGraphSurface,
    twists: usize,
) -> Option<NormalCurve> {
    let n = s.first_betti();
    if n == 0 {
        return None;
    }
    let mut c = s.rectangle_curve(rng.gen_range(0..n)).ok()?;
    for _ in 0..twists {
        let core = s.rectangle_curve(rng.gen_range(0..n)).ok()?;
        let hand = if rng.gen_bool(0.5) {
            Handedness::Right
        } else {
            Handedness::Left
        };
        if let Ok(t) = TwistFactor::new(s, &core, hand) {
            c = t.apply(&c).ok()?;
        }
    }
    (!c.is_boundary_parallel(s)).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let w = connected_word(&mut rng, 4, 9);
            assert!(w.is_connected());
            let s = FatGraphSurface::new(&w).unwrap();
            if let Some(c) = simple_curve(&mut rng, &s, 3) {
                assert!(c.is_embedded(&s));
            }
            let _ = closed_walk(&mut rng, &s, 6);
        }
    }
}
