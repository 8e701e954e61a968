use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::tower::Tower;
use crate::error::{QctError, Result};
use crate::linalg::Matrix;

/// Node budget for the lexicographic self-dual basis search before it falls
/// back to seeded random restarts.
pub const SELF_DUAL_NODE_BUDGET: u64 = 20_000_000;
const RANDOM_RESTARTS: usize = 20_000;

/// A basis of GF(q^m) over GF(q), stored with its trace-dual basis.
#[derive(Clone, Debug)]
pub struct ExtensionBasis {
    tower: Tower,
    elements: Vec<u32>,
    dual: Vec<u32>,
}

impl PartialEq for ExtensionBasis {
    fn eq(&self, other: &Self) -> bool {
        self.tower == other.tower && self.elements == other.elements
    }
}

impl ExtensionBasis {
    /// Validates `elements` (extension indices) as a basis: exactly m of them
    /// with a nonsingular trace Gram matrix.
    pub fn new(tower: &Tower, elements: Vec<u32>) -> Result<ExtensionBasis> {
        let m = tower.degree() as usize;
        if elements.len() != m {
            return Err(QctError::InvalidBasis(format!(
                "{} elements given, extension degree is {m}",
                elements.len()
            )));
        }
        if let Some(&bad) = elements.iter().find(|&&x| !tower.ext().contains(x)) {
            return Err(QctError::InvalidBasis(format!(
                "{bad} is not an element of {}",
                tower.ext()
            )));
        }
        let gram = gram_matrix(tower, &elements, &elements);
        let inv = gram.inverse(tower.sub()).ok_or_else(|| {
            QctError::InvalidBasis("trace Gram matrix is singular; elements are dependent".into())
        })?;
        // beta_j = sum_k (G^-1)_{jk} alpha_k
        let ext = tower.ext();
        let dual = (0..m)
            .map(|j| {
                (0..m).fold(0u32, |acc, k| {
                    let c = tower.embed(inv.get(j, k));
                    ext.add(acc, ext.mul(c, elements[k]))
                })
            })
            .collect();
        Ok(ExtensionBasis {
            tower: tower.clone(),
            elements,
            dual,
        })
    }

    /// {1, w, ..., w^(m-1)} for the extension's fixed generator w.
    pub fn polynomial(tower: &Tower) -> Result<ExtensionBasis> {
        let ext = tower.ext();
        let elements = (0..tower.degree() as u64).map(|i| ext.exp(i)).collect();
        ExtensionBasis::new(tower, elements)
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The trace-dual basis B' with Tr(alpha_i beta_j) = delta_ij.
    pub fn dual(&self) -> ExtensionBasis {
        ExtensionBasis {
            tower: self.tower.clone(),
            elements: self.dual.clone(),
            dual: self.elements.clone(),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.elements == self.dual
    }

    /// m x m matrix [Tr(alpha_i alpha_j)] over the subfield.
    pub fn gram(&self) -> Matrix {
        gram_matrix(&self.tower, &self.elements, &self.elements)
    }

    /// Psi_B: coordinates of x in this basis, as subfield indices.
    pub fn coordinates(&self, x: u32) -> Vec<u32> {
        let ext = self.tower.ext();
        self.dual
            .iter()
            .map(|&b| self.tower.trace(ext.mul(x, b)))
            .collect()
    }

    /// Inverse of [`coordinates`](Self::coordinates).
    pub fn combine(&self, coords: &[u32]) -> u32 {
        let ext = self.tower.ext();
        coords
            .iter()
            .zip(&self.elements)
            .fold(0u32, |acc, (&a, &alpha)| {
                ext.add(acc, ext.mul(self.tower.embed(a), alpha))
            })
    }

    /// Applies x -> x^q to every element (q = subfield order).
    pub fn conjugate(&self) -> ExtensionBasis {
        let f = |v: &[u32]| v.iter().map(|&x| self.tower.frobenius(x)).collect();
        ExtensionBasis {
            tower: self.tower.clone(),
            elements: f(&self.elements),
            dual: f(&self.dual),
        }
    }
}

/// [Tr(a_i b_j)] as a matrix over the subfield.
pub fn gram_matrix(tower: &Tower, a: &[u32], b: &[u32]) -> Matrix {
    let ext = tower.ext();
    let mut g = Matrix::zeros(a.len(), b.len());
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            g.set(i, j, tower.trace(ext.mul(x, y)));
        }
    }
    g
}

pub fn find_dual_basis(b: &ExtensionBasis) -> ExtensionBasis {
    b.dual()
}

/// GF(q^m) has a self-dual basis over GF(q) iff q is even or q and m are both odd.
pub fn self_dual_basis_exists(q: u32, m: u32) -> bool {
    q.is_multiple_of(2) || m % 2 == 1
}

#[derive(Debug, Clone, PartialEq)]
pub enum SelfDualSearch {
    Found(ExtensionBasis),
    /// The whole candidate space was exhausted.
    NoneExists,
}

/// Searches for a self-dual basis without consulting the existence theorem.
///
/// Candidates are extension elements with Tr(x^2) = 1; m-subsets are tried in
/// lexicographic index order with pairwise trace-orthogonality pruning. When
/// the node budget runs out, seeded random greedy restarts are tried before
/// giving up with [`QctError::SearchCapExceeded`].
pub fn search_self_dual_basis(
    tower: &Tower,
    node_budget: u64,
    seed: u64,
) -> Result<SelfDualSearch> {
    let ext = tower.ext();
    let m = tower.degree() as usize;
    let candidates: Vec<u32> = ext
        .elements()
        .filter(|&x| x != 0 && tower.trace(ext.mul(x, x)) == 1)
        .collect();
    let orthogonal = |x: u32, y: u32| tower.trace(ext.mul(x, y)) == 0;

    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    let mut nodes = 0u64;
    let mut exhausted = true;
    // iterative DFS over increasing candidate positions
    let mut next = 0usize;
    loop {
        if chosen.len() == m {
            let elements = chosen.iter().map(|&i| candidates[i]).collect();
            return Ok(SelfDualSearch::Found(ExtensionBasis::new(tower, elements)?));
        }
        let remaining_needed = m - chosen.len();
        let mut advanced = false;
        while next + remaining_needed <= candidates.len() {
            nodes += 1;
            let c = candidates[next];
            if chosen.iter().all(|&i| orthogonal(candidates[i], c)) {
                chosen.push(next);
                next += 1;
                advanced = true;
                break;
            }
            next += 1;
        }
        if nodes > node_budget {
            exhausted = false;
            break;
        }
        if !advanced {
            match chosen.pop() {
                Some(last) => next = last + 1,
                None => break,
            }
        }
    }
    if exhausted {
        return Ok(SelfDualSearch::NoneExists);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order = candidates.clone();
    for _ in 0..RANDOM_RESTARTS {
        order.shuffle(&mut rng);
        let mut picked: Vec<u32> = Vec::with_capacity(m);
        for &c in &order {
            if picked.iter().all(|&x| orthogonal(x, c)) {
                picked.push(c);
                if picked.len() == m {
                    break;
                }
            }
        }
        if picked.len() == m {
            picked.sort_unstable();
            return Ok(SelfDualSearch::Found(ExtensionBasis::new(tower, picked)?));
        }
    }
    Err(QctError::SearchCapExceeded(format!(
        "self-dual basis search for {tower:?} exceeded {node_budget} nodes and {RANDOM_RESTARTS} random restarts"
    )))
}

/// A self-dual basis of the tower when one exists, `None` otherwise.
pub fn find_self_dual_basis(tower: &Tower, seed: u64) -> Result<Option<ExtensionBasis>> {
    let exists = self_dual_basis_exists(tower.sub().order(), tower.degree());
    if !exists {
        return Ok(None);
    }
    match search_self_dual_basis(tower, SELF_DUAL_NODE_BUDGET, seed)? {
        SelfDualSearch::Found(b) => Ok(Some(b)),
        SelfDualSearch::NoneExists => Err(QctError::SearchCapExceeded(format!(
            "no self-dual basis found for {tower:?} although one must exist"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;
    use crate::linalg::Matrix;

    fn tower(p: u32, e: u32, m: u32) -> Tower {
        Tower::new(&build_field(p, e).unwrap(), m).unwrap()
    }

    #[test]
    fn trivial_extension() {
        let t = tower(2, 1, 1);
        let b = ExtensionBasis::new(&t, vec![1]).unwrap();
        assert_eq!(b.dual().elements(), &[1]);
    }

    #[test]
    fn dual_of_one_w_in_gf4() {
        let t = tower(2, 1, 2);
        let ext = t.ext();
        let w = ext.generator();
        let b = ExtensionBasis::new(&t, vec![1, w]).unwrap();
        // {1, w}' = {w^2, 1}
        assert_eq!(b.dual().elements(), &[ext.mul(w, w), 1]);
        assert_eq!(
            gram_matrix(&t, b.elements(), b.dual().elements()),
            Matrix::identity(2)
        );
    }

    #[test]
    fn dependent_elements_rejected() {
        let t = tower(2, 1, 2);
        assert!(ExtensionBasis::new(&t, vec![1, 1]).is_err());
        assert!(ExtensionBasis::new(&t, vec![1]).is_err());
    }

    #[test]
    fn self_dual_gf4() {
        let t = tower(2, 1, 2);
        let ext = t.ext();
        let w = ext.generator();
        let b = find_self_dual_basis(&t, 1).unwrap().unwrap();
        let mut got = b.elements().to_vec();
        got.sort_unstable();
        let mut want = vec![w, ext.mul(w, w)];
        want.sort_unstable();
        assert_eq!(got, want);
        assert!(b.is_self_dual());
    }

    #[test]
    fn gf9_over_gf3_has_none() {
        let t = tower(3, 1, 2);
        assert!(find_self_dual_basis(&t, 1).unwrap().is_none());
        assert_eq!(
            search_self_dual_basis(&t, SELF_DUAL_NODE_BUDGET, 1).unwrap(),
            SelfDualSearch::NoneExists
        );
    }

    #[test]
    fn gf27_over_gf3_has_one() {
        let t = tower(3, 1, 3);
        let b = find_self_dual_basis(&t, 1).unwrap().unwrap();
        assert_eq!(b.gram(), Matrix::identity(3));
    }

    #[test]
    fn coordinates_round_trip() {
        let t = tower(3, 1, 2);
        let b = ExtensionBasis::polynomial(&t).unwrap();
        for x in t.ext().elements() {
            let c = b.coordinates(x);
            assert_eq!(b.combine(&c), x);
        }
    }

    #[test]
    fn randomized_fallback_finds_basis() {
        // zero node budget forces the seeded restarts
        let t = tower(2, 1, 4);
        match search_self_dual_basis(&t, 0, 7).unwrap() {
            SelfDualSearch::Found(b) => assert_eq!(b.gram(), Matrix::identity(4)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
