//! Faces of a real line arrangement as sign vectors.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::geometry::{sign, LineArrangement, Point};

pub type SignVector = Vec<i8>;

/// A one-dimensional face: an open segment or ray of a single line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub line: usize,
    pub signs: SignVector,
    /// Vertex indices of the finite endpoints, in the order of the line's
    /// direction `(-b, a)`.
    pub ends: [Option<usize>; 2],
}

impl Edge {
    /// The adjacent chamber on the given side (`±1`) of the edge's line.
    pub fn side(&self, s: i8) -> SignVector {
        let mut v = self.signs.clone();
        v[self.line] = s;
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub point: Point,
    pub signs: SignVector,
    /// Lines through the vertex, ascending.
    pub lines: Vec<usize>,
    /// Incident edges in counterclockwise order.
    pub rays: Vec<usize>,
    /// `sectors[j]` is the chamber between `rays[j]` and `rays[j + 1]`.
    pub sectors: Vec<usize>,
}

impl Vertex {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

/// All nonempty faces of an arrangement, graded by dimension.
///
/// Chambers are sorted lexicographically by sign vector, edges by line and
/// then position along the line, vertices by coordinates.
#[derive(Clone, Debug)]
pub struct FacePoset {
    pub n_lines: usize,
    pub chambers: Vec<SignVector>,
    pub edges: Vec<Edge>,
    pub vertices: Vec<Vertex>,
    chamber_index: BTreeMap<SignVector, usize>,
}

/// `face ≤ chamber` in the closure order: every nonzero sign agrees.
pub fn is_face_of(face: &[i8], chamber: &[i8]) -> bool {
    face.iter().zip(chamber).all(|(f, c)| *f == 0 || f == c)
}

/// Sign-vector composition `F∘G`: `F` where nonzero, `G` elsewhere.
pub fn compose(f: &[i8], g: &[i8]) -> SignVector {
    f.iter().zip(g).map(|(a, b)| if *a != 0 { *a } else { *b }).collect()
}

/// Counterclockwise angle order of nonzero direction vectors, starting at the
/// positive x axis.
fn angle_cmp(u: &Point, v: &Point) -> Ordering {
    let half = |p: &Point| {
        if p.y.is_positive() || (p.y.is_zero() && p.x.is_positive()) {
            0
        } else {
            1
        }
    };
    half(u).cmp(&half(v)).then_with(|| {
        let c = u.cross(v);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

impl FacePoset {
    pub fn new(arr: &LineArrangement) -> FacePoset {
        let lines = arr.lines();
        let n = lines.len();

        let mut points: BTreeMap<Point, BTreeSet<usize>> = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                if let Some(p) = lines[i].intersection(&lines[j]) {
                    let set = points.entry(p).or_default();
                    set.insert(i);
                    set.insert(j);
                }
            }
        }
        let vertex_index: BTreeMap<Point, usize> = points.keys().cloned().enumerate().map(|(k, p)| (p, k)).collect();

        let mut edges = Vec::new();
        for (i, line) in lines.iter().enumerate() {
            let dir = line.direction();
            let mut on_line: Vec<&Point> = points.iter().filter(|(_, s)| s.contains(&i)).map(|(p, _)| p).collect();
            on_line.sort_by_key(|p| p.dot(&dir));

            let mut push = |sample: Point, ends: [Option<usize>; 2]| {
                edges.push(Edge { line: i, signs: arr.sign_vector(&sample), ends });
            };
            match (on_line.first(), on_line.last()) {
                (Some(first), Some(last)) => {
                    push(first.sub(&dir), [None, Some(vertex_index[*first])]);
                    for w in on_line.windows(2) {
                        push(w[0].midpoint(w[1]), [Some(vertex_index[w[0]]), Some(vertex_index[w[1]])]);
                    }
                    push(last.add(&dir), [Some(vertex_index[*last]), None]);
                }
                _ => push(line.anchor(), [None, None]),
            }
        }

        let chambers: BTreeSet<SignVector> = edges.iter().flat_map(|e| [e.side(-1), e.side(1)]).collect();
        let chambers: Vec<SignVector> = chambers.into_iter().collect();
        let chamber_index: BTreeMap<SignVector, usize> =
            chambers.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();

        let mut vertices = Vec::with_capacity(points.len());
        for (k, (point, through)) in points.into_iter().enumerate() {
            let signs = arr.sign_vector(&point);
            // Each incident edge with its direction pointing away from the vertex.
            let mut rays: Vec<(usize, Point)> = Vec::new();
            for (e, edge) in edges.iter().enumerate() {
                let dir = lines[edge.line].direction();
                if edge.ends[0] == Some(k) {
                    rays.push((e, dir));
                } else if edge.ends[1] == Some(k) {
                    rays.push((e, Point { x: -dir.x, y: -dir.y }));
                }
            }
            rays.sort_by(|a, b| angle_cmp(&a.1, &b.1));
            let sectors = (0..rays.len())
                .map(|j| {
                    let bisector = rays[j].1.add(&rays[(j + 1) % rays.len()].1);
                    let chamber: SignVector = signs
                        .iter()
                        .enumerate()
                        .map(|(l, &s)| if s != 0 { s } else { lines[l].side_of_direction(&bisector) })
                        .collect();
                    chamber_index[&chamber]
                })
                .collect();
            vertices.push(Vertex {
                point,
                signs,
                lines: through.into_iter().collect(),
                rays: rays.into_iter().map(|(e, _)| e).collect(),
                sectors,
            });
        }

        FacePoset { n_lines: n, chambers, edges, vertices, chamber_index }
    }

    pub fn chamber_index(&self, signs: &[i8]) -> Option<usize> {
        self.chamber_index.get(signs).copied()
    }

    /// Chambers whose closure contains the face with the given sign vector.
    pub fn adjacent_chambers(&self, face: &[i8]) -> Vec<usize> {
        (0..self.chambers.len()).filter(|&c| is_face_of(face, &self.chambers[c])).collect()
    }

    /// `#chambers - #edges + #vertices`; equal to 1 for every nonempty
    /// affine line arrangement.
    pub fn euler_count(&self) -> i64 {
        self.chambers.len() as i64 - self.edges.len() as i64 + self.vertices.len() as i64
    }

    /// The chamber containing `(ε, ε²)` for all small `ε > 0`: on each line
    /// the sign is that of the first nonzero of `c`, `a`, `b`.
    pub fn generic_base_chamber(&self, arr: &LineArrangement) -> usize {
        let signs: SignVector = arr
            .lines()
            .iter()
            .map(|l| {
                let first = [&l.c, &l.a, &l.b].into_iter().find(|v| !v.is_zero()).expect("a or b nonzero");
                sign(&BigRational::from_integer(first.clone()))
            })
            .collect();
        self.chamber_index(&signs).expect("perturbed origin lies in a chamber")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(lines: &[[i64; 3]]) -> (usize, usize, usize) {
        let p = FacePoset::new(&LineArrangement::from_ints(lines).unwrap());
        (p.chambers.len(), p.edges.len(), p.vertices.len())
    }

    #[test]
    fn face_counts() {
        assert_eq!(counts(&[[1, 0, 0]]), (2, 1, 0));
        assert_eq!(counts(&[[1, 0, 0], [0, 1, 0]]), (4, 4, 1));
        assert_eq!(counts(&[[1, 0, 0], [0, 1, 0], [1, 1, -1]]), (7, 9, 3));
        assert_eq!(counts(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]), (6, 6, 1));
        assert_eq!(counts(&[[1, 0, 0], [1, 0, -1]]), (3, 2, 0));
    }

    #[test]
    fn euler_count_is_one() {
        for lines in [
            vec![[1, 0, 0]],
            vec![[1, 0, 0], [1, 0, 1], [0, 1, 0], [1, 1, 0], [1, -1, 2]],
            vec![[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0]],
        ] {
            let p = FacePoset::new(&LineArrangement::from_ints(&lines).unwrap());
            assert_eq!(p.euler_count(), 1);
        }
    }

    #[test]
    fn vertex_sectors_are_adjacent_chambers() {
        let arr = LineArrangement::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 3]]).unwrap();
        let p = FacePoset::new(&arr);
        for v in &p.vertices {
            assert_eq!(v.rays.len(), 2 * v.multiplicity());
            let mut sectors = v.sectors.clone();
            sectors.sort_unstable();
            sectors.dedup();
            assert_eq!(sectors.len(), v.sectors.len());
            assert_eq!(sectors, p.adjacent_chambers(&v.signs));
            // Consecutive sectors differ across exactly the ray between them.
            for j in 0..v.rays.len() {
                let before = &p.chambers[v.sectors[(j + v.rays.len() - 1) % v.rays.len()]];
                let after = &p.chambers[v.sectors[j]];
                let edge = &p.edges[v.rays[j]];
                assert!(is_face_of(&edge.signs, before) && is_face_of(&edge.signs, after));
                let diff: Vec<usize> = (0..p.n_lines).filter(|&l| before[l] != after[l]).collect();
                assert_eq!(diff, vec![edge.line]);
            }
        }
    }

    #[test]
    fn edges_have_two_chambers() {
        let arr = LineArrangement::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 1, -1]]).unwrap();
        let p = FacePoset::new(&arr);
        for e in &p.edges {
            assert_eq!(p.adjacent_chambers(&e.signs).len(), 2);
            assert_eq!(compose(&e.signs, &e.side(1)), e.side(1));
        }
    }

    #[test]
    fn base_chamber_avoids_lines_through_origin() {
        let arr = LineArrangement::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 1, -1]]).unwrap();
        let p = FacePoset::new(&arr);
        let base = p.generic_base_chamber(&arr);
        assert_eq!(p.chambers[base], vec![1, 1, -1]);
    }
}
