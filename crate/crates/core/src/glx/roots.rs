use std::fmt;

use serde::{Deserialize, Serialize};

use super::shape::GLXShape;
use super::weight::GWeight;
use crate::error::{Error, Result};
use crate::verp::VerpObject;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootClass {
    Ordinary,
    Mixed,
}

/// A tensor factor in the word labelling a root space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TensorSlot {
    Unit,
    Summand(usize),
    Dual(usize),
}

/// `ε_i - ε_j` for summand indices `i != j` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
    pub class: RootClass,
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i + 1, self.j + 1)
    }
}

impl Root {
    pub fn new(shape: &GLXShape, i: usize, j: usize) -> Result<Root> {
        let n = shape.rank();
        if i == j || i >= n || j >= n {
            return Err(Error::invalid(format!("({i}, {j}) is not a root for n = {n}")));
        }
        let s = shape.summands();
        let class = if s[i] == s[j] { RootClass::Ordinary } else { RootClass::Mixed };
        Ok(Root { i, j, class })
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }

    pub fn weight(&self, shape: &GLXShape) -> GWeight {
        GWeight::root(shape, self.i, self.j)
    }

    /// The word `1 ⊗ … ⊗ X_i ⊗ … ⊗ X_j^* ⊗ … ⊗ 1` of length `n`.
    pub fn tensor_word(&self, shape: &GLXShape) -> Vec<TensorSlot> {
        let s = shape.summands();
        (0..shape.rank())
            .map(|t| {
                if t == self.i {
                    TensorSlot::Summand(s[t])
                } else if t == self.j {
                    TensorSlot::Dual(s[t])
                } else {
                    TensorSlot::Unit
                }
            })
            .collect()
    }
}

/// All `n(n-1)` roots, ordered by `(i, j)`.
pub fn roots(shape: &GLXShape) -> Vec<Root> {
    let n = shape.rank();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(Root::new(shape, i, j).expect("indices in range"));
            }
        }
    }
    out
}

pub fn positive_roots(shape: &GLXShape) -> Vec<Root> {
    roots(shape).into_iter().filter(Root::is_positive).collect()
}

pub fn simple_roots(shape: &GLXShape) -> Vec<Root> {
    roots(shape).into_iter().filter(Root::is_simple).collect()
}

/// `X_i ⊗ X_j^*`. Every simple of `Ver_p` is self-dual.
pub fn root_space(shape: &GLXShape, root: &Root) -> Result<VerpObject> {
    pair_space(shape, root.i, root.j)
}

/// `gl(X_i) = X_i ⊗ X_i^*`.
pub fn diagonal_space(shape: &GLXShape, i: usize) -> Result<VerpObject> {
    pair_space(shape, i, i)
}

fn pair_space(shape: &GLXShape, i: usize, j: usize) -> Result<VerpObject> {
    let s = shape.summands();
    if i >= s.len() || j >= s.len() {
        return Err(Error::OutOfRange { index: i.max(j) as i64, lo: 0, hi: s.len() as i64 - 1 });
    }
    let p = shape.prime();
    VerpObject::simple(p, s[i])?.fuse(&VerpObject::simple(p, s[j])?.dual())
}

/// All of `gl(X) = X ⊗ X^*`.
pub fn gl_content(shape: &GLXShape) -> Result<VerpObject> {
    let mut total = VerpObject::zero(shape.prime());
    for i in 0..shape.rank() {
        for j in 0..shape.rank() {
            total = total.direct_sum(&pair_space(shape, i, j)?)?;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prime::Prime;

    fn shape(p: u32, s: &str) -> GLXShape {
        GLXShape::parse(Prime::new(p).unwrap(), s).unwrap()
    }

    fn obj(p: u32, terms: &[(usize, u64)]) -> VerpObject {
        VerpObject::from_terms(Prime::new(p).unwrap(), terms.iter().copied()).unwrap()
    }

    fn classes(sh: &GLXShape) -> (usize, usize) {
        let r = roots(sh);
        let ord = r.iter().filter(|x| x.class == RootClass::Ordinary).count();
        (ord, r.len() - ord)
    }

    #[test]
    fn root_classification() {
        assert_eq!(classes(&shape(5, "L2:2")), (2, 0));
        assert_eq!(classes(&shape(5, "L1:1,L2:1")), (0, 2));
        assert_eq!(classes(&shape(5, "L1:2,L3:1")), (2, 4));
        assert!(roots(&shape(5, "L4:1")).is_empty());
    }

    #[test]
    fn root_spaces() {
        let sh = shape(5, "L2:2");
        let r = Root::new(&sh, 0, 1).unwrap();
        assert_eq!(root_space(&sh, &r).unwrap(), obj(5, &[(1, 1), (3, 1)]));
        let sh = shape(5, "L1:1,L3:1");
        let r = Root::new(&sh, 0, 1).unwrap();
        assert_eq!(root_space(&sh, &r).unwrap(), obj(5, &[(3, 1)]));
        let sh = shape(5, "L2:1,L3:1");
        let r = Root::new(&sh, 0, 1).unwrap();
        assert_eq!(root_space(&sh, &r).unwrap(), obj(5, &[(2, 1), (4, 1)]));
    }

    #[test]
    fn words_and_weights() {
        let sh = shape(7, "L1:2,L3:1");
        let r = Root::new(&sh, 0, 2).unwrap();
        assert_eq!(r.class, RootClass::Mixed);
        assert_eq!(r.tensor_word(&sh), vec![TensorSlot::Summand(1), TensorSlot::Unit, TensorSlot::Dual(3)]);
        assert_eq!(r.weight(&sh).entries(), &[1, 0, -1]);
        assert_eq!(simple_roots(&sh).len(), 2);
        assert_eq!(positive_roots(&sh).len(), 3);
        assert!(Root::new(&sh, 1, 1).is_err());
    }

    #[test]
    fn unit_part_is_even_dimension() {
        for (p, s) in [(5, "L1:2,L3:1"), (7, "L2:2,L5:3"), (11, "L1:1,L4:2,L10:1")] {
            let sh = shape(p, s);
            assert_eq!(gl_content(&sh).unwrap().unit_multiplicity(), sh.even_dim());
            let n = sh.rank() as u64;
            assert_eq!(roots(&sh).len() as u64, n * (n - 1));
        }
    }
}
