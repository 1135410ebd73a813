//! Finite abstract simplicial complexes.
//!
//! A complex is stored as its full set of nonempty faces. The empty face is
//! never included, so f-vectors start at `f_0`, the vertex count.
//!
//! [`Complex::barycentric_subdivide`] builds the subdivision combinatorially
//! (vertices are faces, simplices are chains under inclusion). It does not
//! consult the Stirling-number formula, which makes it an independent check
//! on [`crate::subdivision::sd_fvector`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fps::{Coefficient, Series};
use crate::subdivision::{sd_fvector, sd_fvector_iterates};

/// No operation materializes a complex with more faces than this.
pub const FACE_LIMIT: usize = 1_000_000;

/// A face: a nonempty, strictly increasing list of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Face(Vec<u32>);

impl Face {
    /// Sorts the vertices. Rejects empty input and repeated vertices.
    pub fn new(mut vertices: Vec<u32>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.is_empty() || vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFace);
        }
        Ok(Face(vertices))
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }

    /// Every nonempty subset, including the face itself.
    fn subfaces(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        (1u32..(1u32 << n)).map(move |mask| {
            Face(
                (0..n)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    faces: BTreeSet<Face>,
}

fn too_many(faces: impl Into<BigInt>) -> Error {
    let faces: BigInt = faces.into();
    Error::FaceLimit {
        faces: faces.to_u128().unwrap_or(u128::MAX),
        limit: FACE_LIMIT,
    }
}

impl Complex {
    /// The downward closure of the given faces.
    pub fn from_maximal(maximal: impl IntoIterator<Item = Face>) -> Result<Self> {
        let mut faces = BTreeSet::new();
        for top in maximal {
            // A k-vertex face alone brings 2^k - 1 faces.
            let own = (1u128 << top.0.len().min(127)) - 1;
            if own > FACE_LIMIT as u128 {
                return Err(too_many(own));
            }
            if faces.contains(&top) {
                continue;
            }
            faces.extend(top.subfaces());
            if faces.len() > FACE_LIMIT {
                return Err(too_many(faces.len()));
            }
        }
        if faces.is_empty() {
            return Err(Error::EmptyComplex);
        }
        Ok(Complex { faces })
    }

    pub fn from_vertex_lists(maximal: &[Vec<u32>]) -> Result<Self> {
        Self::from_maximal(
            maximal
                .iter()
                .map(|f| Face::new(f.clone()))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// The full `n`-simplex on vertices `0..=n`.
    pub fn simplex(n: usize) -> Result<Self> {
        if n >= 32 {
            return Err(too_many(BigInt::from(2).pow(n as u32 + 1) - 1));
        }
        Self::from_maximal([Face::new((0..=n as u32).collect())?])
    }

    /// The boundary of the `n`-simplex: every `n`-vertex subset of `0..=n`.
    /// Needs `n >= 1`.
    pub fn simplex_boundary(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyComplex);
        }
        if n >= 32 {
            return Err(too_many(BigInt::from(2).pow(n as u32 + 1) - 2));
        }
        let all: Vec<u32> = (0..=n as u32).collect();
        let facets = (0..=n).map(|skip| {
            let mut v = all.clone();
            v.remove(skip);
            Face(v)
        });
        Self::from_maximal(facets)
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.faces.contains(face)
    }

    pub fn dimension(&self) -> usize {
        self.faces
            .iter()
            .map(Face::dimension)
            .max()
            .expect("complexes are nonempty")
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.faces
            .iter()
            .filter(|f| f.0.len() == 1)
            .map(|f| f.0[0])
            .collect()
    }

    /// Faces not contained in any other face.
    pub fn maximal_faces(&self) -> Vec<Face> {
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .faces
                    .iter()
                    .any(|g| g.0.len() > f.0.len() && f.is_subset_of(g))
            })
            .cloned()
            .collect()
    }

    /// `(f_0, ..., f_m)`, `f_i` the number of `i`-dimensional faces.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dimension() + 1];
        for face in &self.faces {
            f[face.dimension()] += 1;
        }
        f
    }

    /// The Euler characteristic `f_0 - f_1 + f_2 - ...`.
    pub fn chi(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// `sum_k g_k f_k`, the face-count combination weighted by `g`.
    /// Needs a coefficient for every dimension of the complex.
    pub fn chi_weighted(&self, g: &Series) -> Result<Coefficient> {
        let dimension = self.dimension();
        if g.precision() <= dimension {
            return Err(Error::InsufficientPrecision {
                precision: g.precision(),
                dimension,
            });
        }
        Ok(self
            .f_vector()
            .iter()
            .zip(g.coeffs())
            .filter(|(_, w)| !w.is_zero())
            .map(|(&n, w)| w * Coefficient::from_integer(BigInt::from(n)))
            .sum())
    }

    /// One barycentric subdivision.
    ///
    /// New vertex `i` stands for the `i`-th face of `self` in lexicographic
    /// order of vertex tuples; a face of the result is a chain of faces of
    /// `self` strictly increasing under inclusion.
    pub fn barycentric_subdivide(&self) -> Result<Self> {
        let predicted: BigInt = sd_fvector(&self.f_vector()).into_iter().sum();
        if predicted > BigInt::from(FACE_LIMIT) {
            return Err(too_many(predicted));
        }
        let index: HashMap<&Face, u32> = self
            .faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f, i as u32))
            .collect();

        let mut faces = BTreeSet::new();
        let mut chain = Vec::new();
        for top in &self.faces {
            collect_chains(top, &index, &mut chain, &mut faces);
        }
        Ok(Complex { faces })
    }

    /// `k` successive barycentric subdivisions; `k = 0` returns a copy.
    pub fn iterate_sd(&self, k: usize) -> Result<Self> {
        let rows = sd_fvector_iterates(&self.f_vector(), k);
        let largest: BigInt = rows
            .iter()
            .map(|r| r.iter().sum::<BigInt>())
            .max()
            .expect("at least one row");
        if largest > BigInt::from(FACE_LIMIT) {
            return Err(too_many(largest));
        }
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur.barycentric_subdivide()?;
        }
        Ok(cur)
    }

    /// Parses `{"maximal": [[0,1,2],[2,3]]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ComplexFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Self::from_vertex_lists(&file.maximal)
    }

    /// Writes the maximal faces in the same format `from_json` reads.
    pub fn to_json(&self) -> String {
        let file = ComplexFile {
            maximal: self.maximal_faces().into_iter().map(|f| f.0).collect(),
        };
        serde_json::to_string(&file).expect("plain integer arrays serialize")
    }
}

/// Adds every chain whose largest element is `top` and whose elements above
/// it are `above` (listed from the top down).
fn collect_chains(
    top: &Face,
    index: &HashMap<&Face, u32>,
    above: &mut Vec<u32>,
    out: &mut BTreeSet<Face>,
) {
    above.push(index[top]);
    let mut ids = above.clone();
    ids.sort_unstable();
    out.insert(Face(ids));
    for sub in top.subfaces() {
        if sub.0.len() < top.0.len() {
            collect_chains(&sub, index, above, out);
        }
    }
    above.pop();
}

#[derive(Serialize, Deserialize)]
struct ComplexFile {
    maximal: Vec<Vec<u32>>,
}

/// A random complex on at most `max_vertices` vertices: the closure of one
/// to four random nonempty vertex subsets.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, max_vertices: u32) -> Complex {
    assert!(
        (1..=16).contains(&max_vertices),
        "max_vertices must be in 1..=16"
    );
    let vertices = rng.random_range(1..=max_vertices);
    let tops = rng.random_range(1..=4);
    let maximal: Vec<Face> = (0..tops)
        .map(|_| {
            let mask: u32 = rng.random_range(1..(1u32 << vertices));
            Face((0..vertices).filter(|i| mask & (1 << i) != 0).collect())
        })
        .collect();
    Complex::from_maximal(maximal).expect("at most 2^16 faces")
}
