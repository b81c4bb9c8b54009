//! Closed curves on the fibre surface as reduced cyclic edge words.
//!
//! A step `+(p + 1)` runs along band `p` from its `lo` vertex to its `hi`
//! vertex and `-(p + 1)` runs back. Curves are stored in their least
//! rotation, so equality of values is equality of oriented free homotopy
//! classes.

use alloc::vec;
use alloc::vec::Vec;

use crate::braid::least_rotation;
use crate::error::{Error, Result};
use crate::surface::{FatGraphSurface, Rectangle};

/// Global handedness flag: sign of the loop spliced in by a right-handed
/// twist relative to the geometric rule "turn right at the core".
const TWIST_SIGN: i32 = 1;

/// Orientation of the algebraic intersection pairing, chosen so that a
/// right-handed twist acts on homology by `x -> x + <x, γ> γ`.
const PAIRING_SIGN: i64 = -1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    pub fn inverse(self) -> Self {
        match self {
            Self::Right => Self::Left,
            Self::Left => Self::Right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalCurve {
    steps: Vec<i32>,
}

fn edge(step: i32) -> usize {
    step.unsigned_abs() as usize - 1
}

fn start_vertex(s: &FatGraphSurface, step: i32) -> usize {
    if step > 0 {
        s.lo(edge(step))
    } else {
        s.hi(edge(step))
    }
}

fn end_vertex(s: &FatGraphSurface, step: i32) -> usize {
    if step > 0 {
        s.hi(edge(step))
    } else {
        s.lo(edge(step))
    }
}

fn invert(path: &[i32]) -> Vec<i32> {
    path.iter().rev().map(|&x| -x).collect()
}

/// Free reduction of a path.
fn reduce_path(path: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for x in path {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Cyclic free reduction.
fn reduce_cyclic(path: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let w = reduce_path(path);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

fn canonical(mut w: Vec<i32>) -> Vec<i32> {
    let r = least_rotation(&w);
    w.rotate_left(r);
    w
}

/// Primitive root `u` and exponent `k` with `w = u^k`.
fn primitive_root(w: &[i32]) -> (&[i32], usize) {
    let n = w.len();
    for d in 1..=n {
        if n.is_multiple_of(d) && (d..n).all(|i| w[i] == w[i - d]) {
            return (&w[..d], n / d);
        }
    }
    (w, 1)
}

fn rotation_of(a: &[i32], b: &[i32]) -> bool {
    a.len() == b.len() && canonical(a.to_vec()) == canonical(b.to_vec())
}

impl NormalCurve {
    /// Validates that consecutive steps meet at a vertex and reduces.
    pub fn new(surface: &FatGraphSurface, steps: &[i32]) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptyCurve);
        }
        let c = surface.edge_count();
        for &st in steps {
            if st == 0 || st.unsigned_abs() as usize > c {
                return Err(Error::InvalidCurve(alloc::format!("no band {st}")));
            }
        }
        for k in 0..steps.len() {
            let (a, b) = (steps[k], steps[(k + 1) % steps.len()]);
            if end_vertex(surface, a) != start_vertex(surface, b) {
                return Err(Error::InvalidCurve(alloc::format!(
                    "steps {a} and {b} do not meet"
                )));
            }
        }
        Self::from_closed_path(steps.iter().copied())
    }

    fn from_closed_path(path: impl IntoIterator<Item = i32>) -> Result<Self> {
        let w = reduce_cyclic(path);
        if w.is_empty() {
            return Err(Error::EmptyCurve);
        }
        Ok(Self {
            steps: canonical(w),
        })
    }

    pub fn steps(&self) -> &[i32] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Same curve with the opposite orientation.
    pub fn reversed(&self) -> Self {
        Self {
            steps: canonical(invert(&self.steps)),
        }
    }

    /// Equality of unoriented free homotopy classes.
    pub fn same_unoriented(&self, other: &Self) -> bool {
        self == other || *self == other.reversed()
    }

    /// Bands traversed, ascending and without repetition.
    pub fn edge_support(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.steps.iter().map(|&s| edge(s)).collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// Number of traversals of band `p`, in either direction.
    pub fn traverses_band(&self, p: usize) -> usize {
        self.steps.iter().filter(|&&s| edge(s) == p).count()
    }

    pub fn edge_vector(&self, surface: &FatGraphSurface) -> Vec<i64> {
        surface.edge_vector(&self.steps)
    }

    pub fn homology(&self, surface: &FatGraphSurface) -> Vec<i64> {
        surface.homology_of_steps(&self.steps)
    }

    /// `u^k` decomposition: the number of times the curve wraps around
    /// its primitive root.
    pub fn multiplicity(&self) -> usize {
        primitive_root(&self.steps).1
    }

    pub fn is_embedded(&self, surface: &FatGraphSurface) -> bool {
        self_intersection(surface, self) == 0
    }

    /// Whether the curve is freely homotopic to a boundary component.
    pub fn is_boundary_parallel(&self, surface: &FatGraphSurface) -> bool {
        surface.boundary_cycles().iter().any(|b| {
            Self::from_closed_path(b.iter().copied()).is_ok_and(|b| self.same_unoriented(&b))
        })
    }
}

/// The two-band cycle of a rectangle: up its top band, back along its bottom band.
pub fn curve_from_rectangle(surface: &FatGraphSurface, rect: &Rectangle) -> Result<NormalCurve> {
    if surface.rectangle_index(rect).is_none() {
        return Err(Error::InvalidRectangle(rect.top));
    }
    NormalCurve::new(
        surface,
        &[(rect.top + 1) as i32, -((rect.bottom + 1) as i32)],
    )
}

/// Is slot `x` strictly inside the counterclockwise interval from `out`
/// to `inn` at a vertex, i.e. on the left of a transit entering at `inn`
/// and leaving at `out`?
fn on_left(c: usize, inn: usize, out: usize, x: usize) -> bool {
    let d = |y: usize| (y + c - out) % c;
    let dx = d(x);
    dx > 0 && dx < d(inn)
}

#[derive(Debug, Default, Clone, Copy)]
struct Tally {
    count: usize,
    signed: i64,
}

/// Linked-pair count between two primitive cyclic words.
///
/// Each maximal common segment (traversed in the same or opposite
/// direction) contributes one crossing when the two curves leave it on
/// opposite sides. When `same` is set the words are one curve and the
/// diagonal pairs are skipped; every crossing is then seen twice.
fn linked_pairs(s: &FatGraphSurface, a: &[i32], b: &[i32], same: bool) -> Tally {
    let c = s.edge_count();
    let (la, lb) = (a.len(), b.len());
    let cap = la + lb;
    let brev = invert(b);
    let mut t = Tally::default();
    for (reverse, bw) in [(false, b), (true, brev.as_slice())] {
        for i in 0..la {
            let v = end_vertex(s, a[i]);
            for j in 0..lb {
                if same && !reverse && i == j {
                    continue;
                }
                if a[i] == bw[j] || end_vertex(s, bw[j]) != v {
                    continue;
                }
                let mut k = 0;
                while k < cap && a[(i + 1 + k) % la] == bw[(j + 1 + k) % lb] {
                    k += 1;
                }
                if k >= cap {
                    continue;
                }
                let (a_in, a_out) = (edge(a[i]), edge(a[(i + 1) % la]));
                let (b_in, b_out) = (edge(bw[j]), edge(bw[(j + 1) % lb]));
                let start = on_left(c, a_in, a_out, b_in);
                let end = if k == 0 {
                    // A single shared vertex: the chords must use four distinct slots.
                    if reverse || b_in == a_out || b_out == a_in {
                        continue;
                    }
                    on_left(c, a_in, a_out, b_out)
                } else {
                    let e = i + k;
                    let (e_in, e_out) = (edge(a[e % la]), edge(a[(e + 1) % la]));
                    on_left(c, e_in, e_out, edge(bw[(j + k + 1) % lb]))
                };
                if start != end {
                    t.count += 1;
                    let sign = if end { 1 } else { -1 };
                    t.signed += if reverse { -sign } else { sign };
                }
            }
        }
    }
    t
}

fn pair_tally(s: &FatGraphSurface, x: &NormalCurve, y: &NormalCurve) -> Tally {
    let (u, a) = primitive_root(&x.steps);
    let (v, b) = primitive_root(&y.steps);
    if rotation_of(u, v) || rotation_of(u, &invert(v)) {
        return Tally::default();
    }
    let t = linked_pairs(s, u, v, false);
    let m = (a * b) as i64;
    Tally {
        count: t.count * a * b,
        signed: t.signed * m,
    }
}

/// Minimal number of transverse intersections of the two free homotopy classes.
pub fn geometric_intersection(s: &FatGraphSurface, x: &NormalCurve, y: &NormalCurve) -> usize {
    pair_tally(s, x, y).count
}

/// Signed count of the crossings in minimal position, with the raw
/// orientation of the slot test.
pub fn algebraic_intersection(s: &FatGraphSurface, x: &NormalCurve, y: &NormalCurve) -> i64 {
    pair_tally(s, x, y).signed
}

/// The pairing `<x, y>` used by the Picard–Lefschetz formula.
pub fn intersection_pairing(s: &FatGraphSurface, x: &NormalCurve, y: &NormalCurve) -> i64 {
    PAIRING_SIGN * algebraic_intersection(s, x, y)
}

/// Minimal number of self-crossings. A `k`-fold power of a primitive
/// curve `u` needs `k² i(u) + k - 1`.
pub fn self_intersection(s: &FatGraphSurface, x: &NormalCurve) -> usize {
    let (u, k) = primitive_root(&x.steps);
    let own = linked_pairs(s, u, u, true).count / 2;
    k * k * own + k - 1
}

/// A Dehn twist along an embedded curve, realized as a map of the spine.
#[derive(Debug, Clone)]
pub struct TwistFactor {
    core: NormalCurve,
    handedness: Handedness,
    /// Image path of each band traversed `lo -> hi`.
    images: Vec<Vec<i32>>,
    inverse_images: Vec<Vec<i32>>,
}

impl TwistFactor {
    pub fn new(
        surface: &FatGraphSurface,
        core: &NormalCurve,
        handedness: Handedness,
    ) -> Result<Self> {
        let si = self_intersection(surface, core);
        if si != 0 {
            return Err(Error::NonEmbeddedCore {
                self_intersection: si,
            });
        }
        if core.is_boundary_parallel(surface) {
            return Err(Error::BoundaryParallelCore);
        }
        let images = twist_images(surface, core.steps(), handedness)?;
        let inverse_images = twist_images(surface, core.steps(), handedness.inverse())?;
        Ok(Self {
            core: core.clone(),
            handedness,
            images,
            inverse_images,
        })
    }

    pub fn right(surface: &FatGraphSurface, core: &NormalCurve) -> Result<Self> {
        Self::new(surface, core, Handedness::Right)
    }

    pub fn core(&self) -> &NormalCurve {
        &self.core
    }

    pub fn handedness(&self) -> Handedness {
        self.handedness
    }

    /// The twist of opposite handedness along the same core.
    pub fn inverse(&self) -> Self {
        Self {
            core: self.core.clone(),
            handedness: self.handedness.inverse(),
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    fn map_path(&self, path: &[i32]) -> Vec<i32> {
        let mut out = Vec::new();
        for &st in path {
            let img = &self.images[edge(st)];
            if st > 0 {
                out.extend_from_slice(img);
            } else {
                out.extend(img.iter().rev().map(|&x| -x));
            }
        }
        out
    }

    pub fn apply(&self, x: &NormalCurve) -> Result<NormalCurve> {
        NormalCurve::from_closed_path(self.map_path(&x.steps))
    }
}

pub fn dehn_twist(f: &TwistFactor, x: &NormalCurve) -> Result<NormalCurve> {
    f.apply(x)
}

/// Spine map of the twist along `g`.
///
/// The strands of `g` run parallel inside the bands it traverses; they are
/// ordered by following pairs of strands until they diverge. Every
/// radial segment from a vertex centre to a band attachment then crosses a
/// nested family of transit chords, and crossing a chord splices in a copy
/// of `g` based at that transit, turning right for a right-handed twist.
fn twist_images(s: &FatGraphSurface, g: &[i32], handedness: Handedness) -> Result<Vec<Vec<i32>>> {
    let c = s.edge_count();
    let l = g.len();
    // Walker through step k, oriented lo -> hi along its band.
    let walk = |k: usize, m: usize| -> i32 {
        if g[k] > 0 {
            g[(k + m) % l]
        } else {
            -g[(k + l - m % l) % l]
        }
    };
    let mut strands: Vec<Vec<usize>> = vec![Vec::new(); c];
    for k in 0..l {
        strands[edge(g[k])].push(k);
    }
    let mut inconsistent = false;
    for list in strands.iter_mut() {
        list.sort_by(|&ka, &kb| {
            if ka == kb {
                return core::cmp::Ordering::Equal;
            }
            for m in 1..=2 * l + 2 {
                let (va, vb) = (walk(ka, m), walk(kb, m));
                if va != vb {
                    let t = edge(walk(ka, m - 1));
                    let da = (edge(va) + c - t) % c;
                    let db = (edge(vb) + c - t) % c;
                    // The strand leaving first counterclockwise lies later
                    // in the counterclockwise order at the hi end.
                    return db.cmp(&da);
                }
            }
            inconsistent = true;
            core::cmp::Ordering::Equal
        });
    }
    if inconsistent {
        return Err(Error::InvalidCurve("core is not primitive".into()));
    }
    let width = (l + 2) as u64;
    let mut rank = vec![0usize; l];
    for list in &strands {
        for (r, &k) in list.iter().enumerate() {
            rank[k] = r;
        }
    }
    let hi_coord = |k: usize| edge(g[k]) as u64 * width + 1 + rank[k] as u64;
    let lo_coord = |k: usize| {
        let p = edge(g[k]);
        p as u64 * width + (strands[p].len() - 1 - rank[k]) as u64
    };
    // Transit chords per vertex: (low coordinate, high coordinate, centre on the left, step index).
    let mut chords: Vec<Vec<(u64, u64, bool, usize)>> = vec![Vec::new(); s.strands()];
    for k in 0..l {
        let next = (k + 1) % l;
        let v = end_vertex(s, g[k]);
        let inn = if g[k] > 0 { hi_coord(k) } else { lo_coord(k) };
        let out = if g[next] > 0 {
            lo_coord(next)
        } else {
            hi_coord(next)
        };
        chords[v].push((inn.min(out), inn.max(out), inn < out, k));
    }
    let forward_loop = |k: usize| -> Vec<i32> { (1..=l).map(|m| g[(k + m) % l]).collect() };
    let sign = match handedness {
        Handedness::Right => TWIST_SIGN,
        Handedness::Left => -TWIST_SIGN,
    };
    // Loops met walking outward from the centre of `v` to the spine point `point`.
    let outward = |v: usize, point: u64| -> Vec<Vec<i32>> {
        let mut hit: Vec<&(u64, u64, bool, usize)> = chords[v]
            .iter()
            .filter(|ch| ch.0 < point && point < ch.1)
            .collect();
        hit.sort_by_key(|ch| ch.0);
        hit.into_iter()
            .map(|&(_, _, centre_left, k)| {
                // Crossing from the core's left to its right: turning right runs against it.
                let along = if centre_left { -sign } else { sign };
                let lp = forward_loop(k);
                if along > 0 {
                    lp
                } else {
                    invert(&lp)
                }
            })
            .collect()
    };
    let mut images = Vec::with_capacity(c);
    for (p, band) in strands.iter().enumerate() {
        let n = band.len() as u64;
        let lo_point = p as u64 * width + n;
        let hi_point = p as u64 * width;
        let mut img = Vec::new();
        for lp in outward(s.lo(p), lo_point) {
            img.extend(lp);
        }
        img.push((p + 1) as i32);
        for lp in outward(s.hi(p), hi_point).into_iter().rev() {
            img.extend(invert(&lp));
        }
        images.push(reduce_path(img));
    }
    Ok(images)
}

/// The monodromy: the rectangle twists in twist order, first factor acting first.
#[derive(Debug, Clone)]
pub struct Monodromy {
    factors: Vec<TwistFactor>,
}

impl Monodromy {
    /// Twists along boundary-parallel rectangles are left out: they act
    /// trivially on free homotopy classes.
    pub fn new(surface: &FatGraphSurface) -> Result<Self> {
        let mut factors = Vec::with_capacity(surface.twist_order().len());
        for &r in surface.twist_order() {
            match TwistFactor::right(surface, &surface.rectangle_curve(r)?) {
                Ok(f) => factors.push(f),
                Err(Error::BoundaryParallelCore) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[TwistFactor] {
        &self.factors
    }

    pub fn apply(&self, x: &NormalCurve) -> Result<NormalCurve> {
        self.factors
            .iter()
            .try_fold(x.clone(), |acc, f| f.apply(&acc))
    }

    pub fn apply_power(&self, x: &NormalCurve, power: usize) -> Result<NormalCurve> {
        (0..power).try_fold(x.clone(), |acc, _| self.apply(&acc))
    }

    /// Inverse monodromy: left twists in reverse order.
    pub fn apply_inverse(&self, x: &NormalCurve) -> Result<NormalCurve> {
        self.factors
            .iter()
            .rev()
            .try_fold(x.clone(), |acc, f| f.inverse().apply(&acc))
    }
}

pub fn apply_monodromy(
    surface: &FatGraphSurface,
    x: &NormalCurve,
    power: usize,
) -> Result<NormalCurve> {
    Monodromy::new(surface)?.apply_power(x, power)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::linalg;
    use proptest::prelude::*;

    fn surf(gens: &[usize]) -> FatGraphSurface {
        FatGraphSurface::new(&BraidWord::from_generators(gens).unwrap()).unwrap()
    }

    fn torus(p: usize, q: usize) -> FatGraphSurface {
        let g: Vec<usize> = (0..q).flat_map(|_| 1..p).collect();
        surf(&g)
    }

    fn rect(s: &FatGraphSurface, k: usize) -> NormalCurve {
        s.rectangle_curve(k).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let s = surf(&[1, 1, 1, 1]);
        let c = NormalCurve::new(&s, &[1, -1, 2, -3]).unwrap();
        assert_eq!(c, NormalCurve::new(&s, &[2, -3]).unwrap());
        assert_eq!(NormalCurve::new(&s, c.steps()).unwrap(), c);
        assert_eq!(NormalCurve::new(&s, &[1, -1]), Err(Error::EmptyCurve));
        assert!(matches!(
            NormalCurve::new(&s, &[1, 2]),
            Err(Error::InvalidCurve(_))
        ));
    }

    #[test]
    fn rectangle_curves() {
        let s = surf(&[1, 1, 1]);
        let (a, b) = (rect(&s, 0), rect(&s, 1));
        assert_eq!(a, NormalCurve::new(&s, &[1, -2]).unwrap());
        assert!(a.is_embedded(&s) && b.is_embedded(&s));
        assert_eq!(geometric_intersection(&s, &a, &b), 1);
        assert_eq!(a.traverses_band(0), 1);

        let s = surf(&[1, 2, 3, 1, 2, 3]);
        let (c1, c3) = (rect(&s, 0), rect(&s, 2));
        assert_eq!(geometric_intersection(&s, &c1, &c3), 0);
    }

    #[test]
    fn twist_fixes_disjoint_curves_and_its_core() {
        let s = surf(&[1, 1, 1, 2, 2, 2]);
        let a = rect(&s, 0);
        let far = rect(&s, 3);
        let t = TwistFactor::right(&s, &a).unwrap();
        assert_eq!(t.apply(&far).unwrap(), far);
        assert_eq!(t.apply(&a).unwrap(), a);
    }

    #[test]
    fn trefoil_monodromy_on_curves() {
        let s = surf(&[1, 1, 1]);
        let m = Monodromy::new(&s).unwrap();
        // Bottom twist first: r1 -> r1 - r2 -> -r2 and r2 -> r2 -> r1 + r2.
        let r1 = m.apply(&rect(&s, 0)).unwrap();
        assert!(r1.same_unoriented(&rect(&s, 1)));
        assert_eq!(r1.homology(&s), alloc::vec![0, -1]);
        let r2 = m.apply(&rect(&s, 1)).unwrap();
        assert_eq!(r2.homology(&s), alloc::vec![1, 1]);
        let h = s.homological_monodromy();
        assert_eq!(h, alloc::vec![alloc::vec![0, 1], alloc::vec![-1, 1]]);
    }

    #[test]
    fn core_validation() {
        let s = surf(&[1, 1]);
        assert_eq!(
            TwistFactor::right(&s, &rect(&s, 0)).err(),
            Some(Error::BoundaryParallelCore)
        );
        let s = surf(&[1, 1, 1]);
        let twice = NormalCurve::new(&s, &[1, -2, 1, -2]).unwrap();
        assert_eq!(twice.multiplicity(), 2);
        assert_eq!(self_intersection(&s, &twice), 1);
        assert!(matches!(
            TwistFactor::right(&s, &twice),
            Err(Error::NonEmbeddedCore { .. })
        ));
    }

    #[test]
    fn torus_orbit_rules() {
        for (p, q) in [(3, 4), (4, 3), (3, 7), (4, 5), (5, 7), (5, 3)] {
            let s = torus(p, q);
            let m = Monodromy::new(&s).unwrap();
            for k in 1..p - 1 {
                let r = rect(&s, s.top_rectangle(k).unwrap());
                let next = rect(&s, s.top_rectangle(k + 1).unwrap());
                assert_eq!(m.apply(&r).unwrap(), next, "T({p},{q}) column {k}");
            }
        }
    }

    #[test]
    fn torus_shift_down_by_p() {
        for (p, q) in [(3, 8), (3, 7), (4, 9), (5, 7)] {
            let s = torus(p, q);
            let col = s.column_rectangles(1);
            let r = rect(&s, col[0]);
            let img = apply_monodromy(&s, &r, p).unwrap();
            assert_eq!(img, rect(&s, col[p]), "T({p},{q})");
        }
    }

    // Random connected positive words and random curves on their surfaces.

    fn word() -> impl Strategy<Value = BraidWord> {
        (2usize..=4)
            .prop_flat_map(|s| proptest::collection::vec(1..s, (s + 1)..=10))
            .prop_filter_map("connected", |g| {
                let w = BraidWord::from_generators(&g).ok()?;
                w.is_connected().then_some(w)
            })
    }

    struct Picks(Vec<u16>, usize);

    impl Picks {
        fn next(&mut self, n: usize) -> usize {
            let v = self.0[self.1 % self.0.len()];
            self.1 += 1;
            v as usize % n
        }
    }

    /// A random closed walk on the spine.
    fn random_curve(s: &FatGraphSurface, picks: &mut Picks) -> Option<NormalCurve> {
        let v0 = picks.next(s.strands());
        let mut v = v0;
        let mut path = Vec::new();
        let len = 2 + picks.next(8);
        for step in 0.. {
            if step >= len && v == v0 {
                break;
            }
            let slots = s.vertex_slots(v);
            let toward_home = step >= len;
            let mut p = slots[picks.next(slots.len())];
            if toward_home {
                let candidates: Vec<usize> = slots
                    .iter()
                    .copied()
                    .filter(|&p| {
                        (s.lo(p) as i64 - v0 as i64).abs() < (v as i64 - v0 as i64).abs()
                            || s.hi(p).abs_diff(v0) < v.abs_diff(v0)
                    })
                    .collect();
                p = candidates[picks.next(candidates.len())];
            }
            if s.lo(p) == v {
                path.push((p + 1) as i32);
                v = s.hi(p);
            } else {
                path.push(-((p + 1) as i32));
                v = s.lo(p);
            }
        }
        NormalCurve::new(s, &path).ok()
    }

    /// A random essential embedded curve: a rectangle moved by random twists.
    fn random_simple(s: &FatGraphSurface, picks: &mut Picks) -> Option<NormalCurve> {
        let n = s.first_betti();
        let mut c = rect(s, picks.next(n));
        for _ in 0..picks.next(3) {
            let core = rect(s, picks.next(n));
            let hand = if picks.next(2) == 0 {
                Handedness::Right
            } else {
                Handedness::Left
            };
            let Ok(t) = TwistFactor::new(s, &core, hand) else {
                continue;
            };
            c = t.apply(&c).ok()?;
        }
        (!c.is_boundary_parallel(s)).then_some(c)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(250))]

        #[test]
        fn picard_lefschetz(w in word(), picks in proptest::collection::vec(any::<u16>(), 16)) {
            let s = FatGraphSurface::new(&w).unwrap();
            let mut picks = Picks(picks, 0);
            let (Some(g), Some(x)) = (random_simple(&s, &mut picks), random_curve(&s, &mut picks)) else {
                return Ok(());
            };
            let j = s.intersection_form();
            let (hx, hg) = (x.homology(&s), g.homology(&s));
            let pairing = linalg::bilinear(&j, &hx, &hg);
            prop_assert_eq!(intersection_pairing(&s, &x, &g), pairing);
            for hand in [Handedness::Right, Handedness::Left] {
                let t = TwistFactor::new(&s, &g, hand).unwrap();
                let sign = if hand == Handedness::Right { 1 } else { -1 };
                let y = t.apply(&x).unwrap();
                let expect: Vec<i64> = hx.iter().zip(&hg).map(|(a, b)| a + sign * pairing * b).collect();
                prop_assert_eq!(y.homology(&s), expect);
                prop_assert_eq!(geometric_intersection(&s, &y, &g), geometric_intersection(&s, &x, &g));
                prop_assert_eq!(t.inverse().apply(&y).unwrap(), x.clone());
            }
        }

        #[test]
        fn algebraic_bounded_by_geometric(w in word(), picks in proptest::collection::vec(any::<u16>(), 24)) {
            let s = FatGraphSurface::new(&w).unwrap();
            let mut picks = Picks(picks, 0);
            let (Some(x), Some(y)) = (random_curve(&s, &mut picks), random_curve(&s, &mut picks)) else {
                return Ok(());
            };
            let i = geometric_intersection(&s, &x, &y);
            prop_assert_eq!(i, geometric_intersection(&s, &y, &x));
            prop_assert!(algebraic_intersection(&s, &x, &y).unsigned_abs() as usize <= i);
            prop_assert_eq!(i % 2, algebraic_intersection(&s, &x, &y).unsigned_abs() as usize % 2);
        }

        #[test]
        fn twist_power_intersection_formula(w in word(), picks in proptest::collection::vec(any::<u16>(), 16), k in 1usize..3) {
            let s = FatGraphSurface::new(&w).unwrap();
            let mut picks = Picks(picks, 0);
            let (Some(g), Some(x)) = (random_simple(&s, &mut picks), random_simple(&s, &mut picks)) else {
                return Ok(());
            };
            prop_assert!(g.is_embedded(&s) && x.is_embedded(&s));
            let t = TwistFactor::right(&s, &g).unwrap();
            let mut y = x.clone();
            for _ in 0..k {
                y = t.apply(&y).unwrap();
            }
            prop_assert!(y.is_embedded(&s));
            let i = geometric_intersection(&s, &x, &g);
            prop_assert_eq!(geometric_intersection(&s, &y, &x), k * i * i);
        }

        #[test]
        fn twists_preserve_intersections(w in word(), picks in proptest::collection::vec(any::<u16>(), 32)) {
            let s = FatGraphSurface::new(&w).unwrap();
            let mut picks = Picks(picks, 0);
            let (Some(g), Some(x), Some(y)) = (
                random_simple(&s, &mut picks),
                random_curve(&s, &mut picks),
                random_curve(&s, &mut picks),
            ) else {
                return Ok(());
            };
            let t = TwistFactor::right(&s, &g).unwrap();
            let (tx, ty) = (t.apply(&x).unwrap(), t.apply(&y).unwrap());
            prop_assert_eq!(geometric_intersection(&s, &tx, &ty), geometric_intersection(&s, &x, &y));
            prop_assert_eq!(self_intersection(&s, &tx), self_intersection(&s, &x));
        }
    }
}
