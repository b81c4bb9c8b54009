//! The ribbon-graph spine of the fibre surface of a positive braid.
//!
//! Each strand is a vertex disk and each crossing a band. Edge `p` (the
//! crossing at word position `p`, generator `i`) joins vertex `i - 1` to
//! vertex `i` (0-based strands); we call these its `lo` and `hi` ends. The
//! cyclic order of band attachments around every vertex is ascending word
//! position, which is what makes the thickening the fibre surface rather
//! than the planar checkerboard surface of the brick diagram.

use alloc::vec;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::curve::{self, NormalCurve};
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::linalg::{self, IntMatrix};

/// Two consecutive crossings of one generator: a rectangle of the brick diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rectangle {
    /// Generator index `i` (1-based), i.e. the column of the brick diagram.
    pub column: usize,
    /// Word position of the upper crossing.
    pub top: usize,
    /// Word position of the next crossing of the same generator.
    pub bottom: usize,
}

#[derive(Debug, Clone)]
pub struct FatGraphSurface {
    word: BraidWord,
    /// `columns[i]`: ascending word positions of generator `i` (index 0 unused).
    columns: Vec<Vec<usize>>,
    /// Ascending positions of the bands attached to each vertex.
    vertex_slots: Vec<Vec<usize>>,
    rectangles: Vec<Rectangle>,
    twist_order: Vec<usize>,
    boundary: Vec<Vec<i32>>,
}

/// A half-edge: band `edge` at its `lo` (false) or `hi` (true) end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct HalfEdge {
    edge: usize,
    hi: bool,
}

impl FatGraphSurface {
    pub fn new(word: &BraidWord) -> Result<Self> {
        word.require_connected()?;
        let s = word.strands();
        let mut columns = vec![Vec::new(); s];
        let mut vertex_slots = vec![Vec::new(); s];
        for (p, g) in word.generators().enumerate() {
            columns[g].push(p);
            vertex_slots[g - 1].push(p);
            vertex_slots[g].push(p);
        }
        let mut rectangles = Vec::new();
        for (column, positions) in columns.iter().enumerate().skip(1) {
            for pair in positions.windows(2) {
                rectangles.push(Rectangle {
                    column,
                    top: pair[0],
                    bottom: pair[1],
                });
            }
        }
        // Columns right to left, each filled bottom to top.
        let mut twist_order: Vec<usize> = (0..rectangles.len()).collect();
        twist_order.sort_by(|&a, &b| {
            let (ra, rb) = (rectangles[a], rectangles[b]);
            rb.column.cmp(&ra.column).then(rb.top.cmp(&ra.top))
        });
        let mut surface = Self {
            word: word.clone(),
            columns,
            vertex_slots,
            rectangles,
            twist_order,
            boundary: Vec::new(),
        };
        surface.boundary = surface.trace_boundary();
        Ok(surface)
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    pub fn edge_count(&self) -> usize {
        self.word.len()
    }

    /// Generator of band `p`.
    pub fn column_of(&self, p: usize) -> usize {
        usize::from(self.word.letters()[p])
    }

    pub fn lo(&self, p: usize) -> usize {
        self.column_of(p) - 1
    }

    pub fn hi(&self, p: usize) -> usize {
        self.column_of(p)
    }

    /// Positions of generator `i`, ascending.
    pub fn column_positions(&self, i: usize) -> &[usize] {
        &self.columns[i]
    }

    pub fn vertex_slots(&self, v: usize) -> &[usize] {
        &self.vertex_slots[v]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.strands() as i64 - self.edge_count() as i64
    }

    pub fn first_betti(&self) -> usize {
        self.rectangles.len()
    }

    /// Genus from `χ = 2 - 2g - b`.
    pub fn genus(&self) -> usize {
        let g2 = 2 - self.euler_characteristic() - self.boundary.len() as i64;
        (g2 / 2) as usize
    }

    /// Rectangles in basis order: columns left to right, each top to bottom.
    pub fn rectangles(&self) -> &[Rectangle] {
        &self.rectangles
    }

    pub fn rectangle(&self, index: usize) -> Result<Rectangle> {
        self.rectangles
            .get(index)
            .copied()
            .ok_or(Error::InvalidRectangle(index))
    }

    pub fn rectangle_index(&self, rect: &Rectangle) -> Option<usize> {
        self.rectangles.iter().position(|r| r == rect)
    }

    /// Rectangles of one column, top to bottom, as basis indices.
    pub fn column_rectangles(&self, column: usize) -> Vec<usize> {
        (0..self.rectangles.len())
            .filter(|&k| self.rectangles[k].column == column)
            .collect()
    }

    /// Basis index of the uppermost rectangle of a column.
    pub fn top_rectangle(&self, column: usize) -> Option<usize> {
        self.column_rectangles(column).first().copied()
    }

    /// Order in which the rectangle twists act: the bottom rectangle of
    /// the rightmost column first, the top-left rectangle last.
    pub fn twist_order(&self) -> &[usize] {
        &self.twist_order
    }

    /// Boundary cycles as cyclic edge words.
    pub fn boundary_cycles(&self) -> &[Vec<i32>] {
        &self.boundary
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary.len()
    }

    fn vertex_of(&self, h: HalfEdge) -> usize {
        if h.hi {
            self.hi(h.edge)
        } else {
            self.lo(h.edge)
        }
    }

    /// Next band attachment counterclockwise around the vertex of `h`.
    fn next_at_vertex(&self, h: HalfEdge) -> HalfEdge {
        let v = self.vertex_of(h);
        let slots = &self.vertex_slots[v];
        let k = slots.iter().position(|&p| p == h.edge).unwrap();
        let edge = slots[(k + 1) % slots.len()];
        HalfEdge {
            edge,
            hi: self.hi(edge) == v,
        }
    }

    fn trace_boundary(&self) -> Vec<Vec<i32>> {
        let c = self.edge_count();
        let mut used = vec![[false; 2]; c];
        let mut cycles = Vec::new();
        for start_edge in 0..c {
            for start_hi in [false, true] {
                if used[start_edge][usize::from(start_hi)] {
                    continue;
                }
                let start = HalfEdge {
                    edge: start_edge,
                    hi: start_hi,
                };
                let mut h = start;
                let mut cycle = Vec::new();
                loop {
                    used[h.edge][usize::from(h.hi)] = true;
                    // Leave through h, arrive at the opposite end.
                    let step = (h.edge + 1) as i32;
                    cycle.push(if h.hi { -step } else { step });
                    let arrived = HalfEdge {
                        edge: h.edge,
                        hi: !h.hi,
                    };
                    h = self.next_at_vertex(arrived);
                    if h == start {
                        break;
                    }
                }
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Signed traversal counts of each band.
    pub fn edge_vector(&self, steps: &[i32]) -> Vec<i64> {
        let mut z = vec![0i64; self.edge_count()];
        for &st in steps {
            let p = st.unsigned_abs() as usize - 1;
            z[p] += i64::from(st.signum());
        }
        z
    }

    /// Coordinates of a cycle in the rectangle basis.
    ///
    /// Within a column the coefficient of the `t`-th rectangle is the
    /// partial sum of the band coefficients of its first `t` crossings.
    pub fn homology_of_edges(&self, z: &[i64]) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.rectangles.len());
        for positions in self.columns.iter().skip(1) {
            let mut acc = 0;
            for &p in positions.iter().take(positions.len().saturating_sub(1)) {
                acc += z[p];
                out.push(acc);
            }
        }
        out
    }

    pub fn homology_of_steps(&self, steps: &[i32]) -> Vec<i64> {
        self.homology_of_edges(&self.edge_vector(steps))
    }

    /// Edge vector of a homology class given in the rectangle basis.
    pub fn edges_of_homology(&self, h: &[i64]) -> Vec<i64> {
        let mut z = vec![0i64; self.edge_count()];
        for (r, &coef) in self.rectangles.iter().zip(h) {
            z[r.top] += coef;
            z[r.bottom] -= coef;
        }
        z
    }

    pub fn rectangle_curve(&self, index: usize) -> Result<NormalCurve> {
        let r = self.rectangle(index)?;
        curve::curve_from_rectangle(self, &r)
    }

    /// Algebraic intersection numbers of the rectangle curves, with the
    /// sign for which a right-handed twist acts on homology by
    /// `x -> x + <x, γ> γ`.
    pub fn intersection_form(&self) -> IntMatrix {
        let n = self.rectangles.len();
        let curves: Vec<NormalCurve> = (0..n)
            .map(|k| self.rectangle_curve(k).expect("rectangle index in range"))
            .collect();
        let mut j = vec![vec![0i64; n]; n];
        for a in 0..n {
            for b in (a + 1)..n {
                let (ra, rb) = (self.rectangles[a], self.rectangles[b]);
                if ra.column.abs_diff(rb.column) > 1 {
                    continue;
                }
                let v = curve::intersection_pairing(self, &curves[a], &curves[b]);
                j[a][b] = v;
                j[b][a] = -v;
            }
        }
        j
    }

    /// Matrix of the monodromy on `H_1` in the rectangle basis: the product
    /// of the rectangle transvections in twist order.
    pub fn homological_monodromy(&self) -> IntMatrix {
        self.homological_monodromy_with(&self.intersection_form())
    }

    pub fn homological_monodromy_with(&self, j: &IntMatrix) -> IntMatrix {
        let n = self.rectangles.len();
        let mut h = linalg::identity(n);
        for &r in &self.twist_order {
            let mut t = linalg::identity(n);
            for a in 0..n {
                t[r][a] += j[a][r];
            }
            h = linalg::mat_mul(&t, &h);
        }
        h
    }

    /// `det(t I - H)` normalized to positive constant term.
    pub fn alexander_from_monodromy(&self) -> LaurentPolynomial {
        linalg::charpoly(&self.homological_monodromy()).normalized()
    }

    /// Consistency of the combinatorial data.
    pub fn check_invariants(&self) -> Result<()> {
        let mismatch = |why: &str| Err(Error::CertificateMismatch(why.into()));
        if self.boundary.len() != self.word.component_count() {
            return mismatch("boundary count differs from closure components");
        }
        if self.rectangles.len() != self.word.first_betti() {
            return mismatch("rectangle count differs from c - s + 1");
        }
        if 1 - self.euler_characteristic() != self.rectangles.len() as i64 {
            return mismatch("Euler characteristic inconsistent with rectangle count");
        }
        let incidence: Vec<Vec<i64>> = (0..self.rectangles.len())
            .map(|k| {
                let mut h = vec![0i64; self.rectangles.len()];
                h[k] = 1;
                self.edges_of_homology(&h)
            })
            .collect();
        if linalg::rank_q(&incidence) != self.rectangles.len() {
            return mismatch("rectangle cycles are dependent");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(gens: &[usize]) -> FatGraphSurface {
        FatGraphSurface::new(&BraidWord::from_generators(gens).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_surface() {
        let s = surf(&[1, 1, 1]);
        assert_eq!(s.euler_characteristic(), -1);
        assert_eq!(s.boundary_count(), 1);
        assert_eq!(s.first_betti(), 2);
        assert_eq!(s.genus(), 1);
        s.check_invariants().unwrap();
    }

    #[test]
    fn hopf_band_is_an_annulus() {
        let s = surf(&[1, 1]);
        assert_eq!(s.euler_characteristic(), 0);
        assert_eq!(s.boundary_count(), 2);
        assert_eq!(s.first_betti(), 1);
        assert_eq!(s.homological_monodromy(), vec![vec![1]]);
        assert_eq!(
            s.alexander_from_monodromy(),
            LaurentPolynomial::from_coeffs(&[-1, 1]).normalized()
        );
    }

    #[test]
    fn torus_4_3_surface() {
        let s = surf(&[1, 2, 3, 1, 2, 3, 1, 2, 3]);
        assert_eq!(s.first_betti(), 6);
        assert_eq!(s.boundary_count(), 1);
        assert_eq!(s.genus(), 3);
    }

    #[test]
    fn split_word_rejected() {
        let w = BraidWord::new(4, alloc::vec![1, 2]).unwrap();
        assert!(matches!(
            FatGraphSurface::new(&w),
            Err(Error::DisconnectedWord { .. })
        ));
    }

    #[test]
    fn twist_order_runs_right_to_left_bottom_to_top() {
        let s = surf(&[1, 2, 1, 2, 1, 2]);
        let order: Vec<Rectangle> = s.twist_order().iter().map(|&k| s.rectangles()[k]).collect();
        assert_eq!(
            order,
            alloc::vec![
                Rectangle {
                    column: 2,
                    top: 3,
                    bottom: 5
                },
                Rectangle {
                    column: 2,
                    top: 1,
                    bottom: 3
                },
                Rectangle {
                    column: 1,
                    top: 2,
                    bottom: 4
                },
                Rectangle {
                    column: 1,
                    top: 0,
                    bottom: 2
                },
            ]
        );
    }

    #[test]
    fn intersection_form_configurations() {
        let s = surf(&[1, 1, 1]);
        assert_eq!(s.intersection_form()[0][1].abs(), 1);
        let s = surf(&[1, 1, 2, 2]);
        assert_eq!(s.intersection_form()[0][1], 0);
        let s = surf(&[1, 2, 1, 2]);
        assert_eq!(s.intersection_form()[0][1].abs(), 1);
    }

    #[test]
    fn monodromy_preserves_form_and_is_unimodular() {
        for gens in [
            &[1usize, 1, 1][..],
            &[1, 2, 1, 2, 1, 2, 1, 2],
            &[3, 1, 2, 2, 3, 1, 2, 1],
        ] {
            let s = surf(gens);
            let j = s.intersection_form();
            let h = s.homological_monodromy();
            let lhs = linalg::mat_mul(&linalg::mat_mul(&linalg::transpose(&h), &j), &h);
            assert_eq!(lhs, j);
            assert_eq!(linalg::det(&h).abs(), 1);
        }
    }

    #[test]
    fn trefoil_alexander_from_monodromy() {
        let s = surf(&[1, 1, 1]);
        assert_eq!(
            s.alexander_from_monodromy(),
            LaurentPolynomial::from_coeffs(&[1, -1, 1])
        );
    }

    #[test]
    fn torus_3_7_alexander_from_monodromy() {
        let gens: Vec<usize> = (0..7).flat_map(|_| [1, 2]).collect();
        let s = surf(&gens);
        let expected = LaurentPolynomial::from_coeffs(&[1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1]);
        assert_eq!(s.alexander_from_monodromy(), expected);
    }

    #[test]
    fn homology_round_trip() {
        let s = surf(&[1, 2, 1, 2, 2, 1]);
        for k in 0..s.first_betti() {
            let c = s.rectangle_curve(k).unwrap();
            let mut e = vec![0i64; s.first_betti()];
            e[k] = 1;
            assert_eq!(c.homology(&s), e);
        }
    }
}
