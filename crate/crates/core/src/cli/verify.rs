//! Property suites behind `verlinde verify`.
//!
//! Items are checked in a fixed enumeration order (parallel where it pays),
//! and the first failing item in that order is reported.

use std::collections::HashMap;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{CommandResult, Status};
use crate::charoracle::{dist2_simple_sl2, steinberg_sl2_check, verify_factorization_chars};
use crate::error::Result;
use crate::glx::{hc_pair, kernel_coord_dims, steinberg_factorize, GLXShape, GWeight, Selector, SimpleIndex};
use crate::prime::Prime;
use crate::qcyclo::CycNum;
use crate::verp::{convolve, semisimplify, sym_algebra_dims, tensor_jordan, JordanModule, VerpObject};
use crate::versln::{binomial, enumerate_simples, fuse_sln, AlcoveWeight, FusionExpansion, SLnParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    VerpOracle,
    QdimHom,
    SlnRing,
    SlnCount,
    Dictionary,
    Stacking,
    Padic,
    Factorize,
    Sl2Steinberg,
    KernelDims,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::VerpOracle => "verp-oracle",
            Suite::QdimHom => "qdim-hom",
            Suite::SlnRing => "sln-ring",
            Suite::SlnCount => "sln-count",
            Suite::Dictionary => "dictionary",
            Suite::Stacking => "stacking",
            Suite::Padic => "padic",
            Suite::Factorize => "factorize",
            Suite::Sl2Steinberg => "sl2-steinberg",
            Suite::KernelDims => "kernel-dims",
            Suite::All => "all",
        }
    }

    const EACH: [Suite; 10] = [
        Suite::VerpOracle,
        Suite::QdimHom,
        Suite::SlnRing,
        Suite::SlnCount,
        Suite::Dictionary,
        Suite::Stacking,
        Suite::Padic,
        Suite::Factorize,
        Suite::Sl2Steinberg,
        Suite::KernelDims,
    ];

    fn default_primes(self) -> Vec<u32> {
        match self {
            Suite::VerpOracle | Suite::QdimHom => vec![5, 7, 11, 13],
            Suite::SlnRing | Suite::SlnCount | Suite::Stacking => vec![5, 7],
            Suite::Dictionary => vec![5, 7, 11],
            Suite::Padic => vec![5, 7],
            Suite::Factorize | Suite::Sl2Steinberg | Suite::KernelDims | Suite::All => vec![5],
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    /// Empty means the suite's default.
    pub primes: Vec<u32>,
    pub ranks: Vec<u32>,
    pub seed: u64,
    pub samples: usize,
}

/// Outcome of one suite: how many items were checked and the first failure.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checked: u64,
    pub counterexample: Option<Value>,
}

impl Report {
    fn check(&mut self, ok: bool, item: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(item());
        }
    }

    /// Record parallel results computed in enumeration order.
    fn absorb(&mut self, results: Vec<(bool, Value)>) {
        for (ok, item) in results {
            self.check(ok, || item);
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn primes(opts: &Options, suite: Suite) -> Result<Vec<Prime>> {
    let raw = if opts.primes.is_empty() { suite.default_primes() } else { opts.primes.clone() };
    raw.into_iter().map(Prime::new).collect()
}

/// `(p, n)` pairs with `2 <= n < p`.
fn sln_params(opts: &Options, suite: Suite) -> Result<Vec<SLnParams>> {
    let ranks = if opts.ranks.is_empty() { vec![2, 3, 4] } else { opts.ranks.clone() };
    let mut out = Vec::new();
    for p in primes(opts, suite)? {
        for &n in &ranks {
            if n >= 2 && n < p.get() {
                out.push(SLnParams::new(p, n)?);
            }
        }
    }
    Ok(out)
}

pub fn run_named(suite: Suite, opts: &Options) -> Result<Report> {
    match suite {
        Suite::VerpOracle => verp_oracle(&primes(opts, suite)?),
        Suite::QdimHom => qdim_hom(&primes(opts, suite)?),
        Suite::SlnRing => sln_ring(&sln_params(opts, suite)?, opts.seed, opts.samples),
        Suite::SlnCount => sln_count(&sln_params(opts, suite)?),
        Suite::Dictionary => dictionary(&primes(opts, suite)?),
        Suite::Stacking => stacking(&sln_params(opts, suite)?),
        Suite::Padic => padic(&primes(opts, suite)?, opts.seed, opts.samples),
        Suite::Factorize => factorize(&primes(opts, suite)?),
        Suite::Sl2Steinberg => sl2_steinberg(&primes(opts, suite)?),
        Suite::KernelDims => kernel_dims(&primes(opts, suite)?),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

fn report_json(suite: Suite, r: &Report) -> Value {
    let mut v = json!({
        "suite": suite.name(),
        "status": if r.passed() { "ok" } else { "property-violation" },
        "checked": r.checked,
    });
    if let Some(c) = &r.counterexample {
        v["counterexample"] = c.clone();
    }
    v
}

pub fn run_suite(suite: Suite, opts: &Options) -> Result<CommandResult> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut results = Vec::new();
    let mut all_ok = true;
    for s in suites {
        let r = run_named(s, opts)?;
        all_ok &= r.passed();
        results.push(report_json(s, &r));
    }
    let payload = if suite == Suite::All {
        json!({
            "suite": "all",
            "status": if all_ok { "ok" } else { "property-violation" },
            "results": results,
        })
    } else {
        results.pop().expect("one suite")
    };
    let status = if all_ok { Status::Ok } else { Status::PropertyViolation };
    Ok(CommandResult { status, payload })
}

fn simple(p: Prime, k: usize) -> VerpObject {
    VerpObject::simple(p, k).expect("label in range")
}

fn verp_oracle(ps: &[Prime]) -> Result<Report> {
    let mut rep = Report::default();
    for &p in ps {
        let q = p.as_usize();
        let pairs: Vec<(usize, usize)> = (1..q).flat_map(|m| (1..q).map(move |n| (m, n))).collect();
        let res: Vec<(bool, Value)> = pairs
            .par_iter()
            .map(|&(m, n)| {
                let jm = JordanModule::block(p, m).expect("block");
                let jn = JordanModule::block(p, n).expect("block");
                let oracle = semisimplify(&tensor_jordan(&jm, &jn).expect("same prime"));
                let fused = simple(p, m).fuse(&simple(p, n)).expect("same prime");
                let ok = oracle == fused;
                (ok, json!({ "p": p.get(), "m": m, "n": n, "oracle": oracle.to_string(), "fuse": fused.to_string() }))
            })
            .collect();
        rep.absorb(res);
    }
    Ok(rep)
}

fn qdim_hom(ps: &[Prime]) -> Result<Report> {
    let mut rep = Report::default();
    for &p in ps {
        let q = p.as_usize();
        let qd: Vec<CycNum> = (1..q).map(|k| simple(p, k).qdim()).collect();
        for m in 1..q {
            for n in 1..q {
                let prod = simple(p, m).fuse(&simple(p, n))?;
                let want = qd[m - 1].mul(&qd[n - 1])?;
                let q_ok = prod.qdim() == want;
                let f_ok = prod.fpdim() as usize == (m * n) % q;
                let d_ok = m + n > q || prod.underlying_dim() == (m * n) as u64;
                rep.check(
                    q_ok && f_ok && d_ok,
                    || json!({ "p": p.get(), "m": m, "n": n, "qdim": q_ok, "fpdim": f_ok, "dim": d_ok }),
                );
            }
        }
    }
    Ok(rep)
}

fn expansion(w: &AlcoveWeight) -> FusionExpansion {
    FusionExpansion::single(w.clone())
}

fn sln_ring(params: &[SLnParams], seed: u64, samples: usize) -> Result<Report> {
    const EXHAUSTIVE_MAX: usize = 30;
    let mut rep = Report::default();
    for &pp in params {
        let simples = enumerate_simples(pp);
        let k = simples.len();
        let tag = |extra: Value| {
            let mut v = json!({ "p": pp.prime().get(), "n": pp.n() });
            if let (Some(o), Value::Object(e)) = (v.as_object_mut(), extra) {
                o.extend(e);
            }
            v
        };
        let triples: Vec<(usize, usize, usize)> = if k <= EXHAUSTIVE_MAX {
            (0..k).flat_map(|a| (0..k).flat_map(move |b| (0..k).map(move |c| (a, b, c)))).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((pp.prime().get() as u64) << 32 | pp.n() as u64));
            (0..samples).map(|_| (rng.gen_range(0..k), rng.gen_range(0..k), rng.gen_range(0..k))).collect()
        };
        let res: Vec<(bool, Value)> = triples
            .par_iter()
            .map(|&(a, b, c)| {
                let (x, y, z) = (&simples[a], &simples[b], &simples[c]);
                let left = fuse_sln(x, y).and_then(|xy| xy.fuse(&expansion(z)));
                let right = fuse_sln(y, z).and_then(|yz| expansion(x).fuse(&yz));
                let ok = matches!((&left, &right), (Ok(l), Ok(r)) if l == r);
                (ok, json!({ "law": "associativity", "triple": [x.to_string(), y.to_string(), z.to_string()] }))
            })
            .collect();
        for (ok, item) in res {
            rep.check(ok, || tag(item));
        }
        let unit = AlcoveWeight::empty(pp);
        let qdims: HashMap<&AlcoveWeight, CycNum> = if k <= EXHAUSTIVE_MAX {
            simples.iter().map(|w| (w, w.qdim())).collect()
        } else {
            HashMap::new()
        };
        let n = pp.n();
        for x in &simples {
            let ux = fuse_sln(&unit, x)?;
            rep.check(ux == expansion(x), || tag(json!({ "law": "unit", "lambda": x.to_string() })));
            for y in &simples {
                let xy = fuse_sln(x, y)?;
                let dual_mult = xy.multiplicity(&unit);
                let want = u64::from(*y == x.dual());
                rep.check(dual_mult == want, || {
                    tag(json!({ "law": "duality", "lambda": x.to_string(), "mu": y.to_string(), "unit_mult": dual_mult }))
                });
                let grade = (x.size() + y.size()) % n;
                let graded = xy.terms().keys().all(|w| w.size() % n == grade);
                rep.check(graded, || {
                    tag(json!({ "law": "grading", "lambda": x.to_string(), "mu": y.to_string() }))
                });
                if k > EXHAUSTIVE_MAX {
                    continue;
                }
                let yx = fuse_sln(y, x)?;
                rep.check(xy == yx, || {
                    tag(json!({ "law": "commutativity", "lambda": x.to_string(), "mu": y.to_string() }))
                });
                let mut total = CycNum::zero(pp.prime());
                for (w, &m) in xy.terms() {
                    total = total.add(&qdims[w].scale_int(m as i64))?;
                }
                let ok = total == qdims[x].mul(&qdims[y])?;
                rep.check(ok, || tag(json!({ "law": "qdim", "lambda": x.to_string(), "mu": y.to_string() })));
            }
        }
    }
    Ok(rep)
}

fn sln_count(params: &[SLnParams]) -> Result<Report> {
    let mut rep = Report::default();
    for &pp in params {
        let simples = enumerate_simples(pp);
        let want = binomial(pp.prime().get() as u64 - 1, pp.n() as u64 - 1);
        let plus = simples.iter().filter(|w| w.is_plus()).count() as u64;
        let ok = simples.len() as u64 == want && plus * pp.n() as u64 == want;
        rep.check(ok, || {
            json!({ "p": pp.prime().get(), "n": pp.n(), "simples": simples.len(), "plus": plus, "expected": want })
        });
    }
    Ok(rep)
}

fn dictionary(ps: &[Prime]) -> Result<Report> {
    let mut rep = Report::default();
    for &p in ps {
        let pp = SLnParams::new(p, 2)?;
        let q = p.as_usize();
        for m in 1..q {
            for n in 1..q {
                let a = AlcoveWeight::new(pp, &[m as u32 - 1])?;
                let b = AlcoveWeight::new(pp, &[n as u32 - 1])?;
                let via_sln = fuse_sln(&a, &b)?;
                let translated = VerpObject::from_terms(
                    p,
                    via_sln.terms().iter().map(|(w, &c)| (w.size() as usize + 1, c)),
                )?;
                let direct = simple(p, m).fuse(&simple(p, n))?;
                rep.check(translated == direct, || {
                    json!({ "p": p.get(), "m": m, "n": n, "sln": translated.to_string(), "verp": direct.to_string() })
                });
            }
        }
    }
    Ok(rep)
}

fn stacking(params: &[SLnParams]) -> Result<Report> {
    let mut rep = Report::default();
    for &pp in params {
        let g = AlcoveWeight::generator(pp);
        for w in enumerate_simples(pp) {
            let prod = fuse_sln(&g, &w)?;
            let stacked = w.invertible_action();
            let ok = prod == expansion(&stacked);
            rep.check(ok, || {
                json!({ "p": pp.prime().get(), "n": pp.n(), "lambda": w.to_string(), "stacked": stacked.to_string(), "fused": prod.to_string() })
            });
        }
    }
    Ok(rep)
}

/// Shapes valid at every prime `p >= 5`.
pub const PADIC_SHAPES: [&str; 6] = ["L1:1", "L1:2", "L1:3", "L2:2,L3:1", "L1:1,L2:1,L4:2", "L1:2,L3:2"];

fn random_dominant(rng: &mut ChaCha8Rng, shape: &GLXShape, bound: i64) -> GWeight {
    let mut e: Vec<i64> = (0..shape.rank()).map(|_| rng.gen_range(-bound..=bound)).collect();
    for b in shape.blocks() {
        e[b.range()].sort_unstable_by(|x, y| y.cmp(x));
    }
    GWeight::new(shape, e).expect("length matches")
}

fn padic(ps: &[Prime], seed: u64, samples: usize) -> Result<Report> {
    let mut rep = Report::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &p in ps {
        let q = p.as_i64();
        let shapes: Vec<GLXShape> =
            PADIC_SHAPES.iter().map(|s| GLXShape::parse(p, s)).collect::<Result<_>>()?;
        for i in 0..samples {
            let shape = &shapes[i % shapes.len()];
            let lambda = random_dominant(&mut rng, shape, 10_000);
            let (base, mu) = lambda.padic_decompose()?;
            let round_trip = base.add(&mu.scale(q))? == lambda;
            let canonical = base.block_entries().all(|b| (0..q).contains(&b[b.len() - 1]))
                && base.entries().iter().zip(lambda.entries()).all(|(a, l)| (a - l).rem_euclid(q) == 0);
            let stable = base.add(&mu.scale(q))?.padic_decompose()? == (base.clone(), mu.clone());
            let idx = SimpleIndex::with_trivial_v(lambda.clone())?;
            let f = steinberg_factorize(&idx)?;
            let reassembled = f.reassemble()? == lambda;
            let pieces_restricted =
                f.base.lambda().is_restricted(1) && f.twists.iter().all(|t| t.is_restricted(1));
            let again = steinberg_factorize(&f.base)?;
            let idempotent = again.twists.is_empty() && again.base == f.base;
            let ok = round_trip
                && base.is_restricted(1)
                && mu.is_dominant()
                && canonical
                && stable
                && reassembled
                && pieces_restricted
                && idempotent;
            rep.check(ok, || {
                json!({
                    "p": p.get(),
                    "shape": shape.to_string(),
                    "lambda": lambda.to_string(),
                    "base": base.to_string(),
                    "mu": mu.to_string(),
                })
            });
        }
    }
    Ok(rep)
}

/// GL(1) and GL(2) weights with `0 <= a - b < p²` and `|b| <= 3`.
fn factorize(ps: &[Prime]) -> Result<Report> {
    let mut rep = Report::default();
    for &p in ps {
        let q = p.as_i64();
        let gl2 = GLXShape::parse(p, "L1:2")?;
        let gl1 = GLXShape::parse(p, "L1:1")?;
        let mut items = Vec::new();
        for b in -3..=3i64 {
            for d in 0..q * q {
                items.push(GWeight::new(&gl2, vec![b + d, b])?);
            }
        }
        for a in -2 * q * q..=2 * q * q {
            items.push(GWeight::new(&gl1, vec![a])?);
        }
        let res: Vec<(bool, Value)> = items
            .par_iter()
            .map(|w| {
                let ok = SimpleIndex::with_trivial_v(w.clone())
                    .and_then(|idx| verify_factorization_chars(&idx))
                    .unwrap_or(false);
                (ok, json!({ "p": p.get(), "shape": w.shape().to_string(), "lambda": w.to_string() }))
            })
            .collect();
        rep.absorb(res);
    }
    Ok(rep)
}

fn sl2_steinberg(ps: &[Prime]) -> Result<Report> {
    let mut rep = Report::default();
    for &p in ps {
        let q = p.get();
        let dims: Vec<(bool, Value)> = (0..q * q)
            .into_par_iter()
            .map(|lambda| {
                let want = (lambda % q + 1) * (lambda / q + 1);
                let got = dist2_simple_sl2(p, lambda).map(|m| m.dim() as u32);
                (
                    got.as_ref().ok() == Some(&want),
                    json!({ "p": q, "lambda": lambda, "dim": got.ok(), "expected": want }),
                )
            })
            .collect();
        rep.absorb(dims);
        let pairs: Vec<(bool, Value)> = (0..q * q)
            .into_par_iter()
            .map(|i| {
                let (r, s) = (i / q, i % q);
                let ok = steinberg_sl2_check(p, r, s).unwrap_or(false);
                (ok, json!({ "p": q, "r": r, "s": s }))
            })
            .collect();
        rep.absorb(pairs);
    }
    Ok(rep)
}

fn kernel_dims(ps: &[Prime]) -> Result<Report> {
    let mut rep = Report::default();
    for &p in ps {
        for m in 1..=3usize {
            let shape = GLXShape::new(p, vec![m])?;
            for r in 1..=2u32 {
                let d = kernel_coord_dims(&shape, r)?;
                let ok = d.sym_dims == [1] && d.even_exponent == r as u64 * (m * m) as u64;
                rep.check(ok, || json!({ "p": p.get(), "shape": shape.to_string(), "r": r }));
            }
        }
        for s in ["L2:1", "L1:1,L2:1"] {
            let shape = GLXShape::parse(p, s)?;
            let d = kernel_coord_dims(&shape, 1)?;
            let odd = hc_pair(&shape, Selector::G)?.odd_part()?;
            // split the odd part into its first simple summand and the rest
            let (k, _) = odd.iter().next().expect("odd part is nonzero here");
            let a = simple(p, k);
            let mut rest = odd.mults().to_vec();
            rest[k - 1] -= 1;
            let b = VerpObject::from_mults(p, rest)?;
            let sa = sym_algebra_dims(&a)?;
            let conv = if b.is_zero() { sa } else { convolve(&sa, &sym_algebra_dims(&b)?)? };
            let conv_dims: Vec<u64> = conv.iter().map(VerpObject::underlying_dim).collect();
            let stable = kernel_coord_dims(&shape, 1)? == d;
            rep.check(
                conv_dims == d.sym_dims && stable,
                || json!({ "p": p.get(), "shape": s, "sym_dims": d.sym_dims, "convolution": conv_dims }),
            );
        }
        for s in PADIC_SHAPES {
            let shape = GLXShape::parse(p, s)?;
            for sel in
                [Selector::G, Selector::T, Selector::B, Selector::NMinus, Selector::P, Selector::Kernel(1)]
            {
                let ok = hc_pair(&shape, sel).is_ok();
                rep.check(ok, || json!({ "p": p.get(), "shape": s, "selector": sel.to_string() }));
            }
        }
    }
    Ok(rep)
}
