//! Exhaustive list decoding of folded codes, syndromes, and the quantum
//! pipeline: syndrome pair → two classical lists → paired Pauli candidates.
//!
//! Radii are absolute counts of blocks. The exhaustive decoder is the
//! reference; anything implementing [`ListDecoder`] can replace it.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::code::{CodeError, LinearCode, Weight};
use crate::folding::FoldedCode;
use crate::gf::Field;
use crate::quantum::CssCode;

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("shape mismatch: {got_blocks} blocks of {got_m} vs {blocks} blocks of {m}")]
    Shape {
        got_blocks: usize,
        got_m: usize,
        blocks: usize,
        m: usize,
    },
    #[error("length mismatch: got {got}, expected {expected}")]
    Length { got: usize, expected: usize },
    #[error("enumeration needs {needed} steps, budget is {budget}")]
    OverBudget { needed: u128, budget: u64 },
    #[error("weight {weight} exceeds the {blocks} available blocks")]
    Weight { weight: usize, blocks: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// A word over `F^m`: `N` blocks stored flat.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FoldedWord {
    m: usize,
    symbols: Vec<u16>,
}

impl FoldedWord {
    pub fn new(m: usize, symbols: Vec<u16>) -> Result<Self, DecodeError> {
        if m == 0 || !symbols.len().is_multiple_of(m) {
            return Err(DecodeError::Length {
                got: symbols.len(),
                expected: symbols.len().next_multiple_of(m.max(1)),
            });
        }
        Ok(FoldedWord { m, symbols })
    }

    pub fn from_blocks(blocks: &[Vec<u16>]) -> Result<Self, DecodeError> {
        let m = blocks.first().map_or(1, Vec::len);
        if let Some(b) = blocks.iter().find(|b| b.len() != m) {
            return Err(DecodeError::Length {
                got: b.len(),
                expected: m,
            });
        }
        Self::new(m, blocks.concat())
    }

    pub fn zero(blocks: usize, m: usize) -> Self {
        FoldedWord {
            m,
            symbols: vec![0; blocks * m],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of blocks `N`.
    pub fn len(&self) -> usize {
        self.symbols.len() / self.m
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u16] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u16> {
        self.symbols
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[u16]> {
        self.symbols.chunks(self.m)
    }

    fn check_shape(&self, blocks: usize, m: usize) -> Result<(), DecodeError> {
        if self.m != m || self.len() != blocks {
            return Err(DecodeError::Shape {
                got_blocks: self.len(),
                got_m: self.m,
                blocks,
                m,
            });
        }
        Ok(())
    }
}

/// Number of blocks where the two words differ.
pub fn folded_hamming_distance(a: &FoldedWord, b: &FoldedWord) -> Result<usize, DecodeError> {
    b.check_shape(a.len(), a.m)?;
    Ok(a.blocks().zip(b.blocks()).filter(|(x, y)| x != y).count())
}

fn block_distance(a: &[u16], b: &[u16], m: usize) -> usize {
    a.chunks(m).zip(b.chunks(m)).filter(|(x, y)| x != y).count()
}

fn check_budget(needed: u128, budget: u64) -> Result<(), DecodeError> {
    if needed > budget as u128 {
        return Err(DecodeError::OverBudget { needed, budget });
    }
    Ok(())
}

/// Every codeword within `radius` blocks of `y`, by enumerating all messages.
pub fn list_decode_exhaustive(
    fc: &FoldedCode,
    y: &FoldedWord,
    radius: usize,
    budget: u64,
) -> Result<Vec<FoldedWord>, DecodeError> {
    y.check_shape(fc.len(), fc.m())?;
    let words = ExhaustiveDecoder { budget }.decode(fc.code(), y.symbols(), radius, fc.weight())?;
    Ok(words
        .into_iter()
        .map(|symbols| FoldedWord { m: fc.m(), symbols })
        .collect())
}

/// A classical list decoder: all codewords within `radius` of `received`
/// under `metric`.
pub trait ListDecoder {
    fn decode(
        &self,
        code: &LinearCode,
        received: &[u16],
        radius: usize,
        metric: Weight,
    ) -> Result<Vec<Vec<u16>>, DecodeError>;
}

/// Enumerates the whole code; refuses codes with more than `budget` words.
#[derive(Debug, Clone, Copy)]
pub struct ExhaustiveDecoder {
    pub budget: u64,
}

impl ListDecoder for ExhaustiveDecoder {
    fn decode(
        &self,
        code: &LinearCode,
        received: &[u16],
        radius: usize,
        metric: Weight,
    ) -> Result<Vec<Vec<u16>>, DecodeError> {
        if received.len() != code.len() {
            return Err(DecodeError::Length {
                got: received.len(),
                expected: code.len(),
            });
        }
        check_budget(code.size(), self.budget)?;
        let m = metric.block_size();
        let mut out = Vec::new();
        code.for_each_codeword(|w, _| {
            if block_distance(w, received, m) <= radius {
                out.push(w.to_vec());
            }
            ControlFlow::Continue(())
        });
        out.sort();
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every coset of the code; a certified maximum.
    Exhaustive,
    /// Uniform random received words; the observed maximum.
    Sampled { trials: u64, seed: u64 },
}

/// Outcome of [`verify_list_decodable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ListSize {
    pub radius: usize,
    pub max_list: usize,
    /// `false` for sampled runs: `max_list` is only a lower bound on `L`.
    pub certified: bool,
    /// Cosets examined (exhaustive) or words sampled.
    pub received_words: u128,
}

impl ListSize {
    pub fn label(&self) -> &'static str {
        if self.certified {
            "exact"
        } else {
            "lower bound on L"
        }
    }
}

/// Calls `visit` on every vector of `F^len` in odometer order.
pub fn for_each_vector<F>(field: &Field, len: usize, mut visit: F)
where
    F: FnMut(&[u16]) -> ControlFlow<()>,
{
    let order = field.order() as u16;
    let mut v = vec![0u16; len];
    loop {
        if visit(&v).is_break() {
            return;
        }
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            v[i] += 1;
            if v[i] < order {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

/// Canonical coset representative with syndrome `s`: `s` placed on the
/// pivot columns of the reduced parity-check matrix `dual`.
fn syndrome_preimage(dual: &LinearCode, s: &[u16]) -> Vec<u16> {
    let mut e = vec![0u16; dual.len()];
    for (&p, &v) in dual.pivots().iter().zip(s) {
        e[p] = v;
    }
    e
}

/// `L(r)` for every radius `r = 0..=N`, maximised over all received words.
///
/// The number of codewords near `y` depends only on the coset `y + C`, so
/// one representative per coset suffices.
pub fn list_size_profile(fc: &FoldedCode, budget: u64) -> Result<Vec<usize>, DecodeError> {
    let code = fc.code();
    let dual = code.dual();
    let cosets = crate::code::span_size(code.field().order(), dual.dim());
    check_budget(cosets.saturating_mul(code.size()), budget)?;
    let (blocks, m) = (fc.len(), fc.m());
    let mut best = vec![0usize; blocks + 1];
    let mut hist = vec![0usize; blocks + 1];
    for_each_vector(code.field(), dual.dim(), |s| {
        let y = syndrome_preimage(&dual, s);
        hist.iter_mut().for_each(|h| *h = 0);
        code.for_each_codeword(|w, _| {
            hist[block_distance(w, &y, m)] += 1;
            ControlFlow::Continue(())
        });
        let mut acc = 0;
        for (r, h) in hist.iter().enumerate() {
            acc += h;
            best[r] = best[r].max(acc);
        }
        ControlFlow::Continue(())
    });
    Ok(best)
}

/// Largest list at `radius` over received words.
pub fn verify_list_decodable(
    fc: &FoldedCode,
    radius: usize,
    mode: Mode,
    budget: u64,
) -> Result<ListSize, DecodeError> {
    let radius_idx = radius.min(fc.len());
    match mode {
        Mode::Exhaustive => {
            let profile = list_size_profile(fc, budget)?;
            let code = fc.code();
            Ok(ListSize {
                radius,
                max_list: profile[radius_idx],
                certified: true,
                received_words: crate::code::span_size(
                    code.field().order(),
                    code.len() - code.dim(),
                ),
            })
        }
        Mode::Sampled { trials, seed } => {
            let code = fc.code();
            check_budget(code.size().saturating_mul(trials as u128), budget)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let order = code.field().order() as u16;
            let m = fc.m();
            let mut max_list = 0;
            for _ in 0..trials {
                let y: Vec<u16> = (0..code.len()).map(|_| rng.gen_range(0..order)).collect();
                let mut count = 0;
                code.for_each_codeword(|w, _| {
                    if block_distance(w, &y, m) <= radius {
                        count += 1;
                    }
                    ControlFlow::Continue(())
                });
                max_list = max_list.max(count);
            }
            Ok(ListSize {
                radius,
                max_list,
                certified: false,
                received_words: trials as u128,
            })
        }
    }
}

/// `H e` for the reduced parity-check matrix `H` of `code`.
pub fn syndrome(code: &LinearCode, e: &[u16]) -> Result<Vec<u16>, DecodeError> {
    if e.len() != code.len() {
        return Err(DecodeError::Length {
            got: e.len(),
            expected: code.len(),
        });
    }
    Ok(code.parity_check().mul_vec(code.field(), e))
}

/// A Pauli correction `X(x) Z(z)` with the canonical representatives of its
/// logical class: `x` modulo `C2^⊥` and `z` modulo `C1^⊥`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PauliCandidate {
    pub x: Vec<u16>,
    pub z: Vec<u16>,
    pub x_class: Vec<u16>,
    pub z_class: Vec<u16>,
}

impl PauliCandidate {
    /// Blocks where the X-part or the Z-part is nonzero.
    pub fn weight(&self, m: usize) -> usize {
        self.x
            .chunks(m)
            .zip(self.z.chunks(m))
            .filter(|(a, b)| a.iter().chain(b.iter()).any(|&v| v != 0))
            .count()
    }

    pub fn same_class(&self, other: &PauliCandidate) -> bool {
        self.x_class == other.x_class && self.z_class == other.z_class
    }
}

/// Logically distinct errors of weight at most `radius` with syndrome `s`
/// against `code`, one lightest representative per class modulo `stab`.
fn error_list(
    code: &LinearCode,
    parity: &LinearCode,
    stab: &LinearCode,
    s: &[u16],
    radius: usize,
    metric: Weight,
    decoder: &dyn ListDecoder,
) -> Result<BTreeMap<Vec<u16>, Vec<u16>>, DecodeError> {
    if s.len() != parity.dim() {
        return Err(DecodeError::Length {
            got: s.len(),
            expected: parity.dim(),
        });
    }
    let field = code.field();
    let e0 = syndrome_preimage(parity, s);
    let mut classes: BTreeMap<Vec<u16>, Vec<u16>> = BTreeMap::new();
    for c in decoder.decode(code, &e0, radius, metric)? {
        let e: Vec<u16> = e0.iter().zip(&c).map(|(&a, &b)| field.sub(a, b)).collect();
        let class = stab.reduce(&e);
        let key = (metric.of(&e), e.clone());
        classes
            .entry(class)
            .and_modify(|cur| {
                if key < (metric.of(cur), cur.clone()) {
                    *cur = e.clone();
                }
            })
            .or_insert(e);
    }
    Ok(classes)
}

/// X-errors consistent with `sx` (checks of `C1`) and Z-errors consistent
/// with `sz` (checks of `C2`), each within `radius` blocks, paired into the
/// full product list. An inconsistent syndrome gives an empty list.
pub fn quantum_list_decode(
    css: &CssCode,
    sx: &[u16],
    sz: &[u16],
    radius: usize,
    decoder: &dyn ListDecoder,
) -> Result<Vec<PauliCandidate>, DecodeError> {
    let metric = css.weight();
    let xs = error_list(
        css.c1(),
        css.c1_dual(),
        css.c2_dual(),
        sx,
        radius,
        metric,
        decoder,
    )?;
    let zs = error_list(
        css.c2(),
        css.c2_dual(),
        css.c1_dual(),
        sz,
        radius,
        metric,
        decoder,
    )?;
    let mut out = Vec::with_capacity(xs.len() * zs.len());
    for (xc, x) in &xs {
        for (zc, z) in &zs {
            out.push(PauliCandidate {
                x: x.clone(),
                z: z.clone(),
                x_class: xc.clone(),
                z_class: zc.clone(),
            });
        }
    }
    Ok(out)
}

/// Syndromes of a Pauli error `X(x) Z(z)`: `(H1 x, H2 z)`.
pub fn pauli_syndromes(
    css: &CssCode,
    x: &[u16],
    z: &[u16],
) -> Result<(Vec<u16>, Vec<u16>), DecodeError> {
    Ok((syndrome(css.c1(), x)?, syndrome(css.c2(), z)?))
}

/// Decodes the syndromes of `X(x) Z(z)` and reports whether its class came back.
pub fn plant_and_recover(
    css: &CssCode,
    x: &[u16],
    z: &[u16],
    radius: usize,
    decoder: &dyn ListDecoder,
) -> Result<(usize, bool), DecodeError> {
    let (sx, sz) = pauli_syndromes(css, x, z)?;
    let list = quantum_list_decode(css, &sx, &sz, radius, decoder)?;
    let (xc, zc) = (css.c2_dual().reduce(x), css.c1_dual().reduce(z));
    let recovered = list.iter().any(|p| p.x_class == xc && p.z_class == zc);
    Ok((list.len(), recovered))
}

/// `seed weight listsize recovered`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialRecord {
    pub seed: u64,
    pub weight: usize,
    pub list_size: usize,
    pub recovered: bool,
}

impl TrialRecord {
    pub fn record(&self) -> String {
        format!(
            "{} {} {} {}",
            self.seed,
            self.weight,
            self.list_size,
            u8::from(self.recovered)
        )
    }
}

/// Samples a Pauli error supported on exactly `weight` uniformly chosen
/// blocks, each carrying a uniformly random nonzero `(X, Z)` pair, then
/// decodes it at `radius`.
pub fn pauli_channel_trial(
    css: &CssCode,
    weight: usize,
    radius: usize,
    seed: u64,
    decoder: &dyn ListDecoder,
) -> Result<TrialRecord, DecodeError> {
    let (blocks, m) = (css.length(), css.m());
    if weight > blocks {
        return Err(DecodeError::Weight { weight, blocks });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = css.c1().field().order() as u16;
    let n = css.c1().len();
    let (mut x, mut z) = (vec![0u16; n], vec![0u16; n]);
    for b in sample(&mut rng, blocks, weight).into_vec() {
        let span = b * m..(b + 1) * m;
        loop {
            for i in span.clone() {
                x[i] = rng.gen_range(0..order);
                z[i] = rng.gen_range(0..order);
            }
            if x[span.clone()]
                .iter()
                .chain(&z[span.clone()])
                .any(|&v| v != 0)
            {
                break;
            }
        }
    }
    let (list_size, recovered) = plant_and_recover(css, &x, &z, radius, decoder)?;
    Ok(TrialRecord {
        seed,
        weight,
        list_size,
        recovered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_BUDGET;
    use crate::folding::{orbit_chains, HermitianAutomorphism};
    use crate::hermitian::HermitianCurve;
    use crate::quantum::fqhc_construct;

    fn example_one() -> (FoldedCode, CssCode) {
        let c = HermitianCurve::new(2).unwrap();
        let s = HermitianAutomorphism::on(&c, 0, 1).unwrap();
        let ch = orbit_chains(&s, &c, 2).unwrap();
        let c1 = FoldedCode::hermitian(&c, 4, &ch).unwrap();
        let f = fqhc_construct(&c, 4, 6, 2, Some(s), DEFAULT_BUDGET).unwrap();
        (c1, f.css)
    }

    #[test]
    fn folded_distance_basics() {
        let a = FoldedWord::from_blocks(&[vec![1, 2], vec![0, 0], vec![3, 3]]).unwrap();
        let mut b = a.clone();
        assert_eq!(folded_hamming_distance(&a, &b).unwrap(), 0);
        b.symbols[1] = 0;
        assert_eq!(folded_hamming_distance(&a, &b).unwrap(), 1);
        let short = FoldedWord::zero(2, 2);
        assert!(matches!(
            folded_hamming_distance(&a, &short),
            Err(DecodeError::Shape { .. })
        ));
        assert!(FoldedWord::new(2, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn decode_codeword_radius_zero() {
        let (c1, _) = example_one();
        let w = c1.code().encode(&[1, 2, 3, 0]).unwrap();
        let y = FoldedWord::new(2, w.clone()).unwrap();
        let list = list_decode_exhaustive(&c1, &y, 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(list, vec![y.clone()]);
        let all = list_decode_exhaustive(&c1, &y, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(all.len(), 256);
        assert!(matches!(
            list_decode_exhaustive(&c1, &y, 1, 10),
            Err(DecodeError::OverBudget { .. })
        ));
    }

    #[test]
    fn profile_is_monotone_and_unique_at_half_distance() {
        let (c1, _) = example_one();
        let d = c1.min_distance(DEFAULT_BUDGET).unwrap().value();
        let p = list_size_profile(&c1, DEFAULT_BUDGET).unwrap();
        assert_eq!(p.len(), 5);
        assert!(p.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(p[(d - 1) / 2], 1);
        assert_eq!(p[4], 256);
        let sampled = verify_list_decodable(
            &c1,
            1,
            Mode::Sampled {
                trials: 50,
                seed: 7,
            },
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(!sampled.certified && sampled.max_list <= p[1]);
    }

    #[test]
    fn syndrome_linearity() {
        let (c1, _) = example_one();
        let code = c1.code();
        let h = code.parity_check();
        assert!(syndrome(code, &[0; 8]).unwrap().iter().all(|&v| v == 0));
        let mut w = code.encode(&[3, 1, 0, 2]).unwrap();
        assert!(syndrome(code, &w).unwrap().iter().all(|&v| v == 0));
        w[5] = code.field().add(w[5], 1);
        let col: Vec<u16> = (0..h.rows()).map(|r| h.get(r, 5)).collect();
        assert_eq!(syndrome(code, &w).unwrap(), col);
        assert!(syndrome(code, &[0; 3]).is_err());
    }

    #[test]
    fn identity_in_zero_syndrome_list() {
        let (_, css) = example_one();
        let dec = ExhaustiveDecoder {
            budget: DEFAULT_BUDGET,
        };
        let sx = vec![0; css.c1_dual().dim()];
        let sz = vec![0; css.c2_dual().dim()];
        let list = quantum_list_decode(&css, &sx, &sz, 0, &dec).unwrap();
        assert_eq!(list.len(), 1);
        assert!(list[0].x.iter().chain(&list[0].z).all(|&v| v == 0));
    }

    #[test]
    fn trials_are_deterministic() {
        let (_, css) = example_one();
        let dec = ExhaustiveDecoder {
            budget: DEFAULT_BUDGET,
        };
        let a = pauli_channel_trial(&css, 1, 1, 42, &dec).unwrap();
        let b = pauli_channel_trial(&css, 1, 1, 42, &dec).unwrap();
        assert_eq!(a, b);
        assert!(a.recovered);
        let zero = pauli_channel_trial(&css, 0, 0, 1, &dec).unwrap();
        assert!(zero.recovered && zero.list_size == 1);
        assert!(pauli_channel_trial(&css, 5, 1, 1, &dec).is_err());
    }
}
