use std::fmt;

use serde::{Deserialize, Serialize};

use super::shape::GLXShape;
use super::weight::GWeight;
use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::versln::{enumerate_simples, AlcoveWeight, SLnParams};

/// Labels of the simples of `Ver_p^+(SL(k))`. For `k = 1` the only label is
/// the empty partition.
pub fn plus_labels(p: Prime, k: usize) -> Result<Vec<Vec<u32>>> {
    if k == 0 || k >= p.as_usize() {
        return Err(Error::OutOfRange { index: k as i64, lo: 1, hi: p.as_i64() - 1 });
    }
    if k == 1 {
        return Ok(vec![Vec::new()]);
    }
    let params = SLnParams::new(p, k as u32)?;
    Ok(enumerate_simples(params)
        .into_iter()
        .filter(AlcoveWeight::is_plus)
        .map(|w| w.parts().to_vec())
        .collect())
}

/// For each nonempty block `L_k^{n_k}` of the shape, `n_k` plus labels of
/// `SL(k)`: a simple of `⊠_k Ver_p^+(SL(k))^{⊠ n_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawVTuple", into = "RawVTuple")]
pub struct VTuple {
    shape: GLXShape,
    blocks: Vec<Vec<Vec<u32>>>,
}

#[derive(Serialize, Deserialize)]
struct RawVTuple {
    shape: GLXShape,
    blocks: Vec<Vec<Vec<u32>>>,
}

impl TryFrom<RawVTuple> for VTuple {
    type Error = Error;
    fn try_from(r: RawVTuple) -> Result<Self> {
        VTuple::new(&r.shape, r.blocks)
    }
}

impl From<VTuple> for RawVTuple {
    fn from(v: VTuple) -> Self {
        RawVTuple { shape: v.shape, blocks: v.blocks }
    }
}

/// `|` between blocks, `;` between copies, `,` between parts. A block whose
/// copies are all trivial prints as nothing.
impl fmt::Display for VTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|copies| {
                if copies.iter().all(Vec::is_empty) {
                    String::new()
                } else {
                    copies
                        .iter()
                        .map(|c| c.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                        .collect::<Vec<_>>()
                        .join(";")
                }
            })
            .collect();
        write!(f, "{}", blocks.join("|"))
    }
}

impl VTuple {
    pub fn new(shape: &GLXShape, blocks: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let shape_blocks: Vec<_> = shape.blocks().collect();
        if blocks.len() != shape_blocks.len() {
            return Err(Error::invalid(format!(
                "V has {} blocks, shape {shape} has {}",
                blocks.len(),
                shape_blocks.len()
            )));
        }
        let mut clean = Vec::with_capacity(blocks.len());
        for (copies, b) in blocks.into_iter().zip(&shape_blocks) {
            if copies.len() != b.size {
                return Err(Error::invalid(format!(
                    "block L{} needs {} labels, got {}",
                    b.label,
                    b.size,
                    copies.len()
                )));
            }
            let mut out = Vec::with_capacity(copies.len());
            for c in copies {
                out.push(check_label(shape.prime(), b.label, &c)?);
            }
            clean.push(out);
        }
        Ok(VTuple { shape: shape.clone(), blocks: clean })
    }

    pub fn trivial(shape: &GLXShape) -> Self {
        let blocks = shape.blocks().map(|b| vec![Vec::new(); b.size]).collect();
        VTuple { shape: shape.clone(), blocks }
    }

    pub fn parse(shape: &GLXShape, s: &str) -> Result<Self> {
        let s = s.trim();
        let shape_blocks: Vec<_> = shape.blocks().collect();
        if s.is_empty() {
            return Ok(Self::trivial(shape));
        }
        let groups: Vec<&str> = s.split('|').collect();
        if groups.len() != shape_blocks.len() {
            return Err(Error::invalid(format!(
                "V {s:?} has {} blocks, shape {shape} has {}",
                groups.len(),
                shape_blocks.len()
            )));
        }
        let mut blocks = Vec::with_capacity(groups.len());
        for (g, b) in groups.iter().zip(&shape_blocks) {
            let g = g.trim();
            if g.is_empty() {
                blocks.push(vec![Vec::new(); b.size]);
                continue;
            }
            let copies = g
                .split(';')
                .map(|c| {
                    c.split(',')
                        .map(str::trim)
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse::<u32>().map_err(|_| Error::invalid(format!("bad part {t:?}"))))
                        .collect::<Result<Vec<u32>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(copies);
        }
        Self::new(shape, blocks)
    }

    pub fn shape(&self) -> &GLXShape {
        &self.shape
    }

    pub fn blocks(&self) -> &[Vec<Vec<u32>>] {
        &self.blocks
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().flatten().all(Vec::is_empty)
    }
}

fn check_label(p: Prime, k: usize, parts: &[u32]) -> Result<Vec<u32>> {
    if k == 1 {
        if parts.iter().any(|&x| x != 0) {
            return Err(Error::invalid(format!("L1 blocks only carry the trivial label, got {parts:?}")));
        }
        return Ok(Vec::new());
    }
    let w = AlcoveWeight::new(SLnParams::new(p, k as u32)?, parts)?;
    if !w.is_plus() {
        return Err(Error::invalid(format!("{w} is not in the plus part of Ver_{p}(SL({k}))")));
    }
    Ok(w.parts().to_vec())
}

/// `(λ, V)` indexing the simple `L(λ, V)` of `GL(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawIndex", into = "RawIndex")]
pub struct SimpleIndex {
    lambda: GWeight,
    v: VTuple,
}

#[derive(Serialize, Deserialize)]
struct RawIndex {
    lambda: GWeight,
    v: VTuple,
}

impl TryFrom<RawIndex> for SimpleIndex {
    type Error = Error;
    fn try_from(r: RawIndex) -> Result<Self> {
        SimpleIndex::new(r.lambda, r.v)
    }
}

impl From<SimpleIndex> for RawIndex {
    fn from(s: SimpleIndex) -> Self {
        RawIndex { lambda: s.lambda, v: s.v }
    }
}

impl SimpleIndex {
    pub fn new(lambda: GWeight, v: VTuple) -> Result<Self> {
        if lambda.shape() != v.shape() {
            return Err(Error::Mismatch(format!("weight on {} but V on {}", lambda.shape(), v.shape())));
        }
        if !lambda.is_dominant() {
            return Err(Error::invalid(format!("{lambda} is not dominant")));
        }
        Ok(SimpleIndex { lambda, v })
    }

    pub fn with_trivial_v(lambda: GWeight) -> Result<Self> {
        let v = VTuple::trivial(lambda.shape());
        Self::new(lambda, v)
    }

    pub fn lambda(&self) -> &GWeight {
        &self.lambda
    }

    pub fn v(&self) -> &VTuple {
        &self.v
    }

    pub fn shape(&self) -> &GLXShape {
        self.lambda.shape()
    }
}

/// Whether `L(λ, V)` and `L(μ, W)` restrict to the same simple of the
/// `r`-th Frobenius kernel.
pub fn frobkernel_equiv(a: (&GWeight, &VTuple), b: (&GWeight, &VTuple), r: u32) -> Result<bool> {
    let shape = a.0.shape();
    if b.0.shape() != shape || a.1.shape() != shape || b.1.shape() != shape {
        return Err(Error::Mismatch("frobenius kernel comparison across shapes".into()));
    }
    let q = shape.prime().checked_pow(r).ok_or_else(|| Error::Unsupported(format!("p^{r} overflows")))?;
    let diff = a.0.sub(b.0)?;
    Ok(diff.entries().iter().all(|d| d % q == 0) && a.1 == b.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::versln::binomial;

    fn p(x: u32) -> Prime {
        Prime::new(x).unwrap()
    }

    #[test]
    fn plus_label_counts() {
        for q in [5u32, 7, 11, 13] {
            for k in 1..q as usize {
                let want = binomial(q as u64 - 1, k as u64 - 1) / k as u64;
                assert_eq!(plus_labels(p(q), k).unwrap().len() as u64, want, "p={q} k={k}");
            }
        }
        assert!(plus_labels(p(5), 5).is_err());
    }

    #[test]
    fn validation() {
        let sh = GLXShape::parse(p(7), "L1:1,L3:2").unwrap();
        let v = VTuple::parse(&sh, "|2,1;3").unwrap();
        assert_eq!(v.blocks()[1], vec![vec![2, 1], vec![3]]);
        assert_eq!(v.to_string(), "|2,1;3");
        assert_eq!(VTuple::parse(&sh, &v.to_string()).unwrap(), v);
        // (1) has size 1, not divisible by 3
        assert!(VTuple::parse(&sh, "|1;").is_err());
        assert!(VTuple::parse(&sh, "|2,1").is_err());
        assert!(VTuple::parse(&sh, "1|;").is_err());
        assert!(VTuple::parse(&sh, "").unwrap().is_trivial());
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<VTuple>(&json).unwrap(), v);
    }

    #[test]
    fn index_requires_dominance() {
        let sh = GLXShape::parse(p(5), "L1:2").unwrap();
        let good = GWeight::new(&sh, vec![3, 1]).unwrap();
        let bad = GWeight::new(&sh, vec![1, 3]).unwrap();
        assert!(SimpleIndex::with_trivial_v(good).is_ok());
        assert!(SimpleIndex::with_trivial_v(bad).is_err());
    }

    #[test]
    fn frobenius_kernel_classes() {
        let sh = GLXShape::parse(p(5), "L1:1").unwrap();
        let v = VTuple::trivial(&sh);
        let w = |e: &[i64]| GWeight::new(&sh, e.to_vec()).unwrap();
        assert!(frobkernel_equiv((&w(&[0]), &v), (&w(&[5]), &v), 1).unwrap());
        assert!(!frobkernel_equiv((&w(&[0]), &v), (&w(&[1]), &v), 1).unwrap());
        let sh = GLXShape::parse(p(5), "L1:2").unwrap();
        let v = VTuple::trivial(&sh);
        let w = |e: &[i64]| GWeight::new(&sh, e.to_vec()).unwrap();
        assert!(frobkernel_equiv((&w(&[5, 0]), &v), (&w(&[0, 0]), &v), 1).unwrap());
        assert!(!frobkernel_equiv((&w(&[5, 0]), &v), (&w(&[0, 0]), &v), 2).unwrap());
    }

    #[test]
    fn class_count_on_a_box() {
        let sh = GLXShape::parse(p(5), "L1:2").unwrap();
        let v = VTuple::trivial(&sh);
        for r in 1..=2u32 {
            let side = 2 * 5i64.pow(r);
            let mut reps: Vec<GWeight> = Vec::new();
            for a in 0..side {
                for b in 0..side {
                    let w = GWeight::new(&sh, vec![a, b]).unwrap();
                    if !reps.iter().any(|x| frobkernel_equiv((x, &v), (&w, &v), r).unwrap()) {
                        reps.push(w);
                    }
                }
            }
            assert_eq!(reps.len() as i64, 5i64.pow(2 * r));
        }
    }

    #[test]
    fn different_v_is_never_equivalent() {
        let sh = GLXShape::parse(p(7), "L3:1").unwrap();
        let a = VTuple::parse(&sh, "").unwrap();
        let b = VTuple::parse(&sh, "3").unwrap();
        let w = GWeight::zero(&sh);
        assert!(!frobkernel_equiv((&w, &a), (&w, &b), 1).unwrap());
    }
}
