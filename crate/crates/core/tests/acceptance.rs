//! Acceptance suite. Runs without the libtest harness so every check prints
//! one status line even when output capture is on. Pass `--ignored` or
//! `--include-ignored` (or set VERLINDE_SLOW=1) to add the p = 7 Steinberg run.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use verlinde::charoracle::{dist2_simple_sl2, steinberg_sl2_check, verify_factorization_chars};
use verlinde::glx::{
    hc_pair, kernel_coord_dims, steinberg_factorize, GLXShape, GWeight, Selector, SimpleIndex,
};
use verlinde::qcyclo::CycNum;
use verlinde::verp::{
    semisimplify, sym_algebra_dims, sym_power_jordan, tensor_jordan, JordanModule, VerpObject,
};
use verlinde::versln::{enumerate_simples, fuse_sln, AlcoveWeight, FusionExpansion, SLnParams};
use verlinde::Prime;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn prime(p: u32) -> Prime {
    Prime::new(p).unwrap()
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

const EXHAUSTIVE: [(u32, u32); 5] = [(5, 2), (5, 3), (7, 2), (7, 3), (7, 4)];

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// ---------------------------------------------------------------- Ver_p

fn fusion_oracle() -> Check {
    let mut pairs = 0;
    for p in [5, 7, 11, 13] {
        let pp = prime(p);
        for m in 1..p as usize {
            for n in 1..p as usize {
                let jm = JordanModule::block(pp, m).map_err(e2s)?;
                let jn = JordanModule::block(pp, n).map_err(e2s)?;
                let oracle = semisimplify(&tensor_jordan(&jm, &jn).map_err(e2s)?);
                let got = VerpObject::simple(pp, m)
                    .and_then(|a| a.fuse(&VerpObject::simple(pp, n)?))
                    .map_err(e2s)?;
                ensure!(oracle == got, "p={p}: L{m} x L{n}: oracle {oracle}, fuse {got}");
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn dimension_homomorphisms() -> Check {
    let mut checked = 0;
    for p in [5u32, 7, 11, 13] {
        let pp = prime(p);
        let q = |k: usize| ((k as f64) * PI / p as f64).sin() / (PI / p as f64).sin();
        for m in 1..p as usize {
            for n in 1..p as usize {
                let (a, b) = (VerpObject::simple(pp, m).unwrap(), VerpObject::simple(pp, n).unwrap());
                let prod = a.fuse(&b).map_err(e2s)?;
                let want: CycNum = a.qdim().mul(&b.qdim()).map_err(e2s)?;
                ensure!(prod.qdim() == want, "p={p}: qdim(L{m} x L{n}) not multiplicative");
                ensure!(
                    (prod.qdim().to_float() - q(m) * q(n)).abs() < 1e-9,
                    "p={p}: qdim(L{m} x L{n}) off the sine formula"
                );
                ensure!(
                    prod.fpdim() as usize == (m * n) % p as usize,
                    "p={p}: fpdim(L{m} x L{n}) = {}",
                    prod.fpdim()
                );
                if m + n <= p as usize {
                    ensure!(prod.underlying_dim() == (m * n) as u64, "p={p}: dim(L{m} x L{n}) != {}", m * n);
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} products"))
}

// ---------------------------------------------------------------- Ver_p(SL(n))

fn params(p: u32, n: u32) -> SLnParams {
    SLnParams::new(prime(p), n).unwrap()
}

fn padded(w: &AlcoveWeight, n: usize) -> Vec<i64> {
    let mut v: Vec<i64> = w.parts().iter().map(|&x| x as i64).collect();
    v.resize(n, 0);
    v
}

fn permutations(n: usize) -> Vec<(Vec<usize>, f64)> {
    fn go(rest: Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, f64)>) {
        if rest.is_empty() {
            let inv = (0..cur.len())
                .flat_map(|i| (i + 1..cur.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| cur[i] > cur[j])
                .count();
            out.push((cur.clone(), if inv % 2 == 0 { 1.0 } else { -1.0 }));
            return;
        }
        for (i, &x) in rest.iter().enumerate() {
            let mut r = rest.clone();
            r.remove(i);
            cur.push(x);
            go(r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go((0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Fusion coefficients of SU(n) at level p - n from the Kac-Peterson S-matrix.
struct VerlindeOracle {
    simples: Vec<AlcoveWeight>,
    ratio: Vec<Vec<Complex64>>,
    weight: Vec<f64>,
}

impl VerlindeOracle {
    fn new(p: u32, n: u32) -> Self {
        let simples = enumerate_simples(params(p, n));
        let nn = n as usize;
        let shifted: Vec<Vec<f64>> = simples
            .iter()
            .map(|w| {
                padded(w, nn).iter().enumerate().map(|(i, &x)| (x + (nn - 1 - i) as i64) as f64).collect()
            })
            .collect();
        let pairing = |a: &[f64], b: &[f64]| {
            let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
            dot - a.iter().sum::<f64>() * b.iter().sum::<f64>() / n as f64
        };
        let perms = permutations(nn);
        let s = |a: &[f64], b: &[f64]| {
            perms.iter().fold(Complex64::new(0.0, 0.0), |acc, (w, sign)| {
                let wa: Vec<f64> = w.iter().map(|&i| a[i]).collect();
                acc + Complex64::from_polar(*sign, -2.0 * PI * pairing(&wa, b) / p as f64)
            })
        };
        let zero = simples.iter().position(|w| w.parts().is_empty()).unwrap();
        let smat: Vec<Vec<Complex64>> =
            shifted.iter().map(|a| shifted.iter().map(|b| s(a, b)).collect()).collect();
        let norm: f64 = smat[zero].iter().map(|z| z.norm_sqr()).sum();
        let weight = smat[zero].iter().map(|z| z.norm_sqr() / norm).collect();
        let ratio =
            smat.iter().map(|row| row.iter().zip(&smat[zero]).map(|(x, z)| x / z).collect()).collect();
        VerlindeOracle { simples, ratio, weight }
    }

    fn coefficient(&self, a: usize, b: usize, c: usize) -> Complex64 {
        (0..self.simples.len())
            .map(|s| self.ratio[a][s] * self.ratio[b][s] * self.ratio[c][s].conj() * self.weight[s])
            .sum()
    }
}

fn triple_assoc(a: &AlcoveWeight, b: &AlcoveWeight, c: &AlcoveWeight) -> Result<bool, String> {
    let (ea, eb, ec) = (
        FusionExpansion::single(a.clone()),
        FusionExpansion::single(b.clone()),
        FusionExpansion::single(c.clone()),
    );
    let left = ea.fuse(&eb).and_then(|x| x.fuse(&ec)).map_err(e2s)?;
    let right = eb.fuse(&ec).and_then(|x| ea.fuse(&x)).map_err(e2s)?;
    Ok(left == right)
}

fn sln_ring_axioms() -> Check {
    let mut assoc = 0usize;
    let mut verlinde = 0usize;
    for (p, n) in EXHAUSTIVE {
        let pp = params(p, n);
        let simples = enumerate_simples(pp);
        let unit = AlcoveWeight::empty(pp);
        let oracle = VerlindeOracle::new(p, n);
        for (i, a) in simples.iter().enumerate() {
            ensure!(
                fuse_sln(&unit, a).map_err(e2s)? == FusionExpansion::single(a.clone()),
                "({p},{n}): unit on {a}"
            );
            for (j, b) in simples.iter().enumerate() {
                let prod = fuse_sln(a, b).map_err(e2s)?;
                let dual_mult = prod.multiplicity(&unit);
                ensure!(
                    dual_mult == u64::from(*b == a.dual()),
                    "({p},{n}): unit in {a} x {b} is {dual_mult}"
                );
                for w in prod.terms().keys() {
                    ensure!(
                        (w.size() + n - (a.size() + b.size()) % n) % n == 0,
                        "({p},{n}): {w} in {a} x {b} breaks the grading"
                    );
                }
                for (k, c) in simples.iter().enumerate() {
                    let want = oracle.coefficient(i, j, k);
                    let got = prod.multiplicity(c) as f64;
                    ensure!(
                        (want - got).norm() < 1e-6,
                        "({p},{n}): N({a},{b};{c}) = {got}, S-matrix gives {want:.6}"
                    );
                    verlinde += 1;
                    ensure!(triple_assoc(a, b, c)?, "({p},{n}): associativity fails on {a},{b},{c}");
                    assoc += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut sampled = 0usize;
    for (p, n) in [(11, 3), (11, 4), (13, 3)] {
        let simples = enumerate_simples(params(p, n));
        let unit = AlcoveWeight::empty(params(p, n));
        for a in &simples {
            ensure!(
                fuse_sln(&unit, a).map_err(e2s)? == FusionExpansion::single(a.clone()),
                "({p},{n}): unit on {a}"
            );
            for b in &simples {
                let prod = fuse_sln(a, b).map_err(e2s)?;
                ensure!(
                    prod.multiplicity(&unit) == u64::from(*b == a.dual()),
                    "({p},{n}): duality on {a},{b}"
                );
                for w in prod.terms().keys() {
                    ensure!(
                        (w.size() + n - (a.size() + b.size()) % n) % n == 0,
                        "({p},{n}): grading on {a},{b}"
                    );
                }
            }
        }
        for _ in 0..500 {
            let pick = |rng: &mut ChaCha8Rng| &simples[rng.gen_range(0..simples.len())];
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            ensure!(triple_assoc(a, b, c)?, "({p},{n}): associativity fails on {a},{b},{c}");
            sampled += 1;
        }
    }
    Ok(format!("{assoc} exhaustive triples, {sampled} sampled, {verlinde} S-matrix coefficients"))
}

fn counting() -> Check {
    for (p, n) in EXHAUSTIVE {
        let simples = enumerate_simples(params(p, n));
        // independent count: partitions with at most n-1 parts and first part <= p-n
        let rows = n as usize - 1;
        let k = p - n;
        let mut brute = 0u64;
        let mut brute_plus = 0u64;
        let mut stack = vec![(0usize, k, 0u32)];
        while let Some((depth, bound, size)) = stack.pop() {
            if depth == rows {
                brute += 1;
                brute_plus += u64::from(size % n == 0);
                continue;
            }
            for x in 0..=bound {
                stack.push((depth + 1, x, size + x));
            }
        }
        let want = binom(u64::from(p) - 1, u64::from(n) - 1);
        let plus = simples.iter().filter(|w| w.is_plus()).count() as u64;
        ensure!(
            simples.len() as u64 == want && brute == want,
            "({p},{n}): {} simples, want {want}",
            simples.len()
        );
        ensure!(plus * u64::from(n) == want && brute_plus == plus, "({p},{n}): {plus} plus simples");
        if (p, n) == (5, 3) {
            ensure!(want == 6 && plus == 2, "(5,3) counts");
        }
    }
    Ok(format!("{} rings", EXHAUSTIVE.len()))
}

fn sl2_dictionary() -> Check {
    let mut pairs = 0;
    for p in [5u32, 7, 11] {
        let pp = params(p, 2);
        for a in 0..=p - 2 {
            for b in 0..=p - 2 {
                let wa = AlcoveWeight::new(pp, &[a]).map_err(e2s)?;
                let wb = AlcoveWeight::new(pp, &[b]).map_err(e2s)?;
                let sl = fuse_sln(&wa, &wb).map_err(e2s)?;
                let mapped = VerpObject::from_terms(
                    prime(p),
                    sl.terms()
                        .iter()
                        .map(|(w, &m)| (w.parts().first().copied().unwrap_or(0) as usize + 1, m)),
                )
                .map_err(e2s)?;
                let vp = VerpObject::simple(prime(p), a as usize + 1)
                    .and_then(|x| x.fuse(&VerpObject::simple(prime(p), b as usize + 1)?))
                    .map_err(e2s)?;
                ensure!(mapped == vp, "p={p}: ({a}) x ({b}) maps to {mapped}, Ver_p gives {vp}");
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn stacking_rule() -> Check {
    let mut checked = 0;
    for (p, n) in EXHAUSTIVE {
        let pp = params(p, n);
        let g = AlcoveWeight::generator(pp);
        for l in enumerate_simples(pp) {
            let prod = fuse_sln(&g, &l).map_err(e2s)?;
            ensure!(prod.terms().len() == 1, "({p},{n}): generator x {l} has {} terms", prod.terms().len());
            let (w, &m) = prod.terms().iter().next().unwrap();
            ensure!(m == 1 && *w == l.invertible_action(), "({p},{n}): generator x {l} = {w} (x{m})");
            // stack a full row of length p - n on top, then strip full columns
            let mut rows = vec![i64::from(p - n)];
            rows.extend(padded(&l, n as usize - 1));
            let last = rows[n as usize - 1];
            let want: Vec<u32> = rows.iter().map(|&x| (x - last) as u32).collect();
            ensure!(*w == AlcoveWeight::new(pp, &want).map_err(e2s)?, "({p},{n}): stacking {l}");
            checked += 1;
        }
    }
    Ok(format!("{checked} simples"))
}

// ---------------------------------------------------------------- GL(X) weights

const SHAPES: [(u32, &str); 6] =
    [(5, "L1:2"), (5, "L1:3"), (7, "L2:2,L3:1"), (5, "L1:1,L2:1,L4:2"), (7, "L1:2,L3:2"), (11, "L1:1,L5:3")];

fn random_dominant(shape: &GLXShape, rng: &mut ChaCha8Rng) -> GWeight {
    let p2 = i64::from(shape.prime().get()).pow(2);
    let mut entries = vec![0i64; shape.rank()];
    for block in shape.blocks() {
        let r = block.range();
        let mut cur = rng.gen_range(-3 * p2..=3 * p2);
        for i in r.rev() {
            entries[i] = cur;
            cur += rng.gen_range(0..3 * p2);
        }
    }
    GWeight::new(shape, entries).unwrap()
}

/// Canonical digits computed directly: last entry of each block reduced into
/// [0, p), consecutive differences reduced into [0, p).
fn canonical_base(w: &GWeight, p: i64) -> Vec<i64> {
    let mut out = Vec::new();
    for block in w.block_entries() {
        let m = block.len();
        let mut b = vec![0i64; m];
        b[m - 1] = block[m - 1].rem_euclid(p);
        for i in (0..m - 1).rev() {
            b[i] = b[i + 1] + (block[i] - block[i + 1]).rem_euclid(p);
        }
        out.extend(b);
    }
    out
}

fn padic_round_trip() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10_000);
    let mut samples = 0;
    let per_shape = 10_000usize.div_ceil(SHAPES.len());
    for (p, spec) in SHAPES {
        let shape = GLXShape::parse(prime(p), spec).map_err(e2s)?;
        for _ in 0..per_shape {
            let lambda = random_dominant(&shape, &mut rng);
            let (base, mu) = lambda.padic_decompose().map_err(e2s)?;
            ensure!(
                base.add(&mu.scale(i64::from(p))).map_err(e2s)? == lambda,
                "{spec}: {lambda} does not reassemble"
            );
            ensure!(base.is_restricted(1), "{spec}: base {base} of {lambda} not restricted");
            ensure!(mu.is_dominant(), "{spec}: mu {mu} of {lambda} not dominant");
            ensure!(
                base.entries() == canonical_base(&lambda, i64::from(p)).as_slice(),
                "{spec}: {lambda} base {base} not canonical"
            );

            let idx = SimpleIndex::with_trivial_v(lambda.clone()).map_err(e2s)?;
            let f = steinberg_factorize(&idx).map_err(e2s)?;
            ensure!(
                f.reassemble().map_err(e2s)? == lambda,
                "{spec}: factorization of {lambda} does not reassemble"
            );
            ensure!(f.base.lambda().is_restricted(1), "{spec}: factorization base not restricted");
            let again = steinberg_factorize(&f.base).map_err(e2s)?;
            ensure!(
                again.twists.is_empty() && again.base == f.base,
                "{spec}: not idempotent on {}",
                f.base.lambda()
            );
            samples += 1;
        }
    }
    Ok(format!("{samples} weights over {} shapes", SHAPES.len()))
}

// ---------------------------------------------------------------- brute-force SL(2)

fn classical_steinberg(p: u32) -> Check {
    let pp = prime(p);
    for lambda in 0..p * p {
        let (l0, l1) = (lambda % p, lambda / p);
        let d = dist2_simple_sl2(pp, lambda).map_err(e2s)?.dim();
        ensure!(d as u32 == (l0 + 1) * (l1 + 1), "p={p}: dim L({lambda}) = {d}");
    }
    for r in 0..p {
        for s in 0..p {
            ensure!(
                steinberg_sl2_check(pp, r, s).map_err(e2s)?,
                "p={p}: L({r}) x L({s})^[1] is not L({})",
                r + p * s
            );
        }
    }
    Ok(format!("{} dims, {} pairs", p * p, p * p))
}

fn character_factorization() -> Check {
    let shape = GLXShape::parse(prime(5), "L1:2").map_err(e2s)?;
    let mut n = 0;
    for b in -2..=2i64 {
        for d in 0..25i64 {
            let idx = SimpleIndex::with_trivial_v(GWeight::new(&shape, vec![b + d, b]).map_err(e2s)?)
                .map_err(e2s)?;
            ensure!(verify_factorization_chars(&idx).map_err(e2s)?, "characters differ at ({},{b})", b + d);
            n += 1;
        }
    }
    Ok(format!("{n} weights"))
}

// ---------------------------------------------------------------- kernels

fn kernel_dims() -> Check {
    for p in [5u32, 7] {
        for m in 1..=3usize {
            for r in 1..=2u32 {
                let shape = GLXShape::new(prime(p), vec![m]).map_err(e2s)?;
                let d = kernel_coord_dims(&shape, r).map_err(e2s)?;
                let want = num_bigint::BigUint::from(p).pow(r * (m * m) as u32);
                ensure!(d.total(p) == want, "p={p} m={m} r={r}: total {}", d.total(p));
            }
        }
    }
    let p = prime(5);
    for spec in ["L2:1", "L1:1,L2:1"] {
        let shape = GLXShape::parse(p, spec).map_err(e2s)?;
        let d = kernel_coord_dims(&shape, 1).map_err(e2s)?;
        ensure!(d == kernel_coord_dims(&shape, 1).map_err(e2s)?, "{spec}: unstable");
        let odd = hc_pair(&shape, Selector::G).and_then(|h| h.odd_part()).map_err(e2s)?;
        // split the odd part into two pieces and convolve their series by hand
        let (mut a, mut b) = (vec![0u64; p.get() as usize - 1], vec![0u64; p.get() as usize - 1]);
        let mut flip = true;
        for (k, mult) in odd.iter() {
            for _ in 0..mult {
                if flip {
                    a[k - 1] += 1
                } else {
                    b[k - 1] += 1
                }
                flip = !flip;
            }
        }
        let sa = sym_algebra_dims(&VerpObject::from_mults(p, a).map_err(e2s)?).map_err(e2s)?;
        let sb = sym_algebra_dims(&VerpObject::from_mults(p, b).map_err(e2s)?).map_err(e2s)?;
        let mut conv = vec![0u64; sa.len() + sb.len() - 1];
        for (i, x) in sa.iter().enumerate() {
            for (j, y) in sb.iter().enumerate() {
                conv[i + j] += x.fuse(y).map_err(e2s)?.underlying_dim();
            }
        }
        while conv.last() == Some(&0) {
            conv.pop();
        }
        ensure!(conv == d.sym_dims, "{spec}: convolution {conv:?} vs {:?}", d.sym_dims);
        // below degree p the symmetric powers of a lift semisimplify to the
        // symmetric powers in Ver_p
        let whole = sym_algebra_dims(&odd).map_err(e2s)?;
        for (deg, s) in whole.iter().enumerate().take(p.get() as usize) {
            let jordan = semisimplify(&sym_power_jordan(&odd.lift(), deg).map_err(e2s)?);
            ensure!(jordan == *s, "{spec}: S^{deg} is {s}, lift gives {jordan}");
        }
    }
    Ok("L1^m totals, L2 and L1+L2 series".into())
}

fn v_component_boundary() -> Check {
    // Only the bookkeeping around V is checkable: lengths multiply along the
    // factorization.
    let shape = GLXShape::parse(prime(7), "L1:1,L3:2").map_err(e2s)?;
    let idx = SimpleIndex::new(
        GWeight::parse(&shape, "40|9,2").map_err(e2s)?,
        verlinde::glx::VTuple::parse(&shape, "|3;2,1").map_err(e2s)?,
    )
    .map_err(e2s)?;
    let f = steinberg_factorize(&idx).map_err(e2s)?;
    let dims = f.twist_dims().ok_or("no twist dims")?;
    ensure!(f.length_multiplier() == Some(dims.iter().product()), "length multiplier");
    Err("SKIP".into())
}

// ---------------------------------------------------------------- runner

struct Criterion {
    id: &'static str,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let slow = args.iter().any(|a| a == "--ignored" || a == "--include-ignored")
        || std::env::var_os("VERLINDE_SLOW").is_some();

    let criteria: Vec<Criterion> = vec![
        Criterion {
            id: "1",
            name: "fusion matches Jordan-type oracle",
            limit: Some(Duration::from_secs(30)),
            run: fusion_oracle,
        },
        Criterion {
            id: "2",
            name: "qdim and fpdim are ring homomorphisms",
            limit: None,
            run: dimension_homomorphisms,
        },
        Criterion {
            id: "3",
            name: "SL(n) ring axioms and S-matrix coefficients",
            limit: Some(Duration::from_secs(120)),
            run: sln_ring_axioms,
        },
        Criterion { id: "4", name: "simple and plus counts", limit: None, run: counting },
        Criterion { id: "5", name: "n = 2 dictionary with Ver_p", limit: None, run: sl2_dictionary },
        Criterion { id: "6", name: "generator action is the stacking rule", limit: None, run: stacking_rule },
        Criterion {
            id: "7",
            name: "p-adic decomposition and factorization round trip",
            limit: None,
            run: padic_round_trip,
        },
        Criterion {
            id: "8",
            name: "SL(2) Steinberg tensor product, p = 5",
            limit: Some(Duration::from_secs(60)),
            run: || classical_steinberg(5),
        },
        Criterion {
            id: "9",
            name: "GL(2) character factorization",
            limit: None,
            run: character_factorization,
        },
        Criterion { id: "10", name: "Frobenius kernel coordinate dimensions", limit: None, run: kernel_dims },
        Criterion { id: "11", name: "V-component isomorphism", limit: None, run: v_component_boundary },
    ];
    let mut list = criteria;
    if slow {
        list.push(Criterion {
            id: "8+",
            name: "SL(2) Steinberg tensor product, p = 7",
            limit: None,
            run: || classical_steinberg(7),
        });
    }

    let mut failed = 0;
    for c in &list {
        let start = Instant::now();
        let res = (c.run)();
        let took = start.elapsed();
        let over = c.limit.is_some_and(|l| took > l);
        match res {
            Ok(detail) if !over => println!("PASS [{}] {}: {detail} ({:.2?})", c.id, c.name, took),
            Ok(detail) => {
                failed += 1;
                println!(
                    "FAIL [{}] {}: {detail}, took {:.2?} > {:.0?}",
                    c.id,
                    c.name,
                    took,
                    c.limit.unwrap()
                );
            }
            Err(msg) if msg == "SKIP" => println!(
                "SKIP [{}] {}: not independently verifiable without a module engine for group schemes \
                 in Ver_p; only index bookkeeping ([4], [7]) and length consistency are checked",
                c.id, c.name
            ),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{}] {}: {msg} ({:.2?})", c.id, c.name, took);
            }
        }
    }
    if !slow {
        println!("note: p = 7 Steinberg run skipped, pass --include-ignored or set VERLINDE_SLOW=1");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
