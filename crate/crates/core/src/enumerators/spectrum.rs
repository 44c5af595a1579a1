//! Weight spectra of codes and the MacWilliams transform between a code
//! and its dual.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::enumerate::{check_cap, par_fold};
use crate::algebra::{Field, LinearCode};
use crate::enumerators::krawtchouk;
use crate::error::{Error, Result};

/// Below this many words spectra are tallied on the calling thread.
const PARALLEL_THRESHOLD_LOG2: usize = 16;

/// Counts A₀..A_n of codewords by Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<serde_json::Number>", try_from = "Vec<serde_json::Number>")]
pub struct WeightSpectrum {
    counts: Vec<BigUint>,
}

/// Counts N₀..N_n of codewords by GC-weight.
pub type GCSpectrum = WeightSpectrum;

impl WeightSpectrum {
    pub fn new(counts: Vec<BigUint>) -> WeightSpectrum {
        assert!(!counts.is_empty(), "a spectrum has at least one entry");
        WeightSpectrum { counts }
    }

    pub fn from_u64(counts: &[u64]) -> WeightSpectrum {
        WeightSpectrum::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn get(&self, i: usize) -> &BigUint {
        &self.counts[i]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<u32> {
        (1..self.counts.len()).find(|&i| !self.counts[i].is_zero()).map(|i| i as u32)
    }

    /// Multiplies every coefficient by `factor`.
    pub fn scaled(&self, factor: &BigUint) -> WeightSpectrum {
        WeightSpectrum::new(self.counts.iter().map(|c| c * factor).collect())
    }
}

impl From<WeightSpectrum> for Vec<serde_json::Number> {
    fn from(s: WeightSpectrum) -> Self {
        s.counts.iter().map(|c| c.to_string().parse().expect("decimal integers are valid JSON numbers")).collect()
    }
}

impl TryFrom<Vec<serde_json::Number>> for WeightSpectrum {
    type Error = String;

    fn try_from(v: Vec<serde_json::Number>) -> std::result::Result<Self, String> {
        if v.is_empty() {
            return Err("empty spectrum".into());
        }
        let counts = v
            .iter()
            .map(|n| n.to_string().parse::<BigUint>().map_err(|e| format!("bad count {n}: {e}")))
            .collect::<std::result::Result<_, _>>()?;
        Ok(WeightSpectrum { counts })
    }
}

/// Hamming spectrum by direct enumeration of the code.
pub fn hamming_spectrum_enumerated(code: &LinearCode, cap: u64) -> Result<WeightSpectrum> {
    let dim = code.f2_dim();
    check_cap(dim, cap)?;
    let n = code.len();
    let counts = if dim < PARALLEL_THRESHOLD_LOG2 {
        let mut counts = vec![0u64; n + 1];
        for v in code.codewords(cap)? {
            counts[v.weight() as usize] += 1;
        }
        counts
    } else {
        par_fold(n, &code.f2_basis(), || vec![0u64; n + 1], |acc, v| acc[v.weight() as usize] += 1, add_tallies)
    };
    Ok(WeightSpectrum::from_u64(&counts))
}

/// Hamming spectrum of `code` obtained from its dual's spectrum.
pub fn hamming_spectrum_via_dual(code: &LinearCode, cap: u64) -> Result<WeightSpectrum> {
    let dual = code.dual();
    let dual_spec = hamming_spectrum_enumerated(&dual, cap)?;
    macwilliams(&dual_spec, code.field().size())
}

/// Hamming spectrum through whichever side of the duality is cheaper.
pub fn hamming_spectrum(code: &LinearCode, cap: u64) -> Result<WeightSpectrum> {
    let own = code.f2_dim();
    let other = (code.len() - code.dim()) * code.field().degree() as usize;
    if own <= other {
        hamming_spectrum_enumerated(code, cap).or_else(|_| hamming_spectrum_via_dual(code, cap))
    } else {
        hamming_spectrum_via_dual(code, cap).or_else(|_| hamming_spectrum_enumerated(code, cap))
    }
}

pub(crate) fn add_tallies(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// MacWilliams transform: given the spectrum of C⊥ over an alphabet of size
/// `q`, returns the spectrum of C.
///
/// `A_s = (1/|C⊥|) Σ_i A'_i K_s(i; n, q)`.
pub fn macwilliams(dual: &WeightSpectrum, q: u32) -> Result<WeightSpectrum> {
    let n = dual.n() as u32;
    let total = dual.total();
    if !is_power_of(&total, q) {
        return Err(Error::InconsistentSpectrum(format!("total {total} is not a power of {q}")));
    }
    if dual.get(0) != &BigUint::from(1u32) {
        return Err(Error::InconsistentSpectrum("A'_0 must be 1 for a linear code".into()));
    }
    let table = krawtchouk::table(n, q);
    let total = BigInt::from(total);
    let mut counts = Vec::with_capacity(n as usize + 1);
    for s in 0..=n {
        let sum: BigInt = dual
            .counts()
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| BigInt::from(a.clone()) * table.get(s, i as u32))
            .sum();
        let (quot, rem) = sum.div_rem(&total);
        if !rem.is_zero() || quot.sign() == Sign::Minus {
            return Err(Error::InconsistentSpectrum(format!("A_{s} = {sum}/{total} is not a nonnegative integer")));
        }
        counts.push(quot.to_biguint().expect("nonnegative"));
    }
    Ok(WeightSpectrum::new(counts))
}

fn is_power_of(x: &BigUint, q: u32) -> bool {
    let mut x = x.clone();
    if x.is_zero() {
        return false;
    }
    let q = BigUint::from(q);
    while x > BigUint::from(1u32) {
        let (d, r) = x.div_rem(&q);
        if !r.is_zero() {
            return false;
        }
        x = d;
    }
    true
}

/// Complete weight enumerator of a GF(4) code: a sparse map from
/// `(n₀, n₁, n_w, n_{w²})` to the number of codewords with those symbol
/// counts.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CompleteWE {
    n: usize,
    terms: BTreeMap<[u32; 4], u64>,
}

impl CompleteWE {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 4], u64> {
        &self.terms
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// GCW(a, b) = CWE(a, a, b, b).
    pub fn gc_spectrum(&self) -> GCSpectrum {
        let mut counts = vec![0u64; self.n + 1];
        for (k, &c) in &self.terms {
            counts[(k[2] + k[3]) as usize] += c;
        }
        WeightSpectrum::from_u64(&counts)
    }

    /// Rows `[n₀, n₁, n_w, n_{w²}, count]`.
    pub fn to_rows(&self) -> Vec<[u64; 5]> {
        self.terms.iter().map(|(k, &c)| [k[0] as u64, k[1] as u64, k[2] as u64, k[3] as u64, c]).collect()
    }
}

impl Serialize for CompleteWE {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

/// Tallies the complete weight enumerator by brute-force enumeration.
pub fn complete_weight_enumerator(code: &LinearCode, cap: u64) -> Result<CompleteWE> {
    if code.field() != Field::F4 {
        return Err(Error::FieldMismatch { expected: Field::F4, found: code.field() });
    }
    let dim = code.f2_dim();
    check_cap(dim, cap)?;
    let n = code.len();
    let w = n + 1;
    // dense tally over (n₁, n_w, n_{w²}); n₀ is implied
    let index = |v: &crate::algebra::Vector| {
        let (lo, hi) = (v.lo(), v.hi());
        let n3 = (lo & hi).count_ones() as usize;
        let n2 = (hi & !lo).count_ones() as usize;
        let n1 = (lo & !hi).count_ones() as usize;
        (n1 * w + n2) * w + n3
    };
    let dense = if dim < PARALLEL_THRESHOLD_LOG2 {
        let mut t = vec![0u64; w * w * w];
        for v in code.codewords(cap)? {
            t[index(&v)] += 1;
        }
        t
    } else {
        par_fold(n, &code.f2_basis(), || vec![0u64; w * w * w], |t, v| t[index(v)] += 1, add_tallies)
    };
    let mut terms = BTreeMap::new();
    for (i, &c) in dense.iter().enumerate() {
        if c > 0 {
            let n3 = i % w;
            let n2 = (i / w) % w;
            let n1 = i / (w * w);
            let n0 = n - n1 - n2 - n3;
            terms.insert([n0 as u32, n1 as u32, n2 as u32, n3 as u32], c);
        }
    }
    Ok(CompleteWE { n, terms })
}

/// GC spectrum by direct enumeration of the GF(4) code.
pub fn gc_spectrum_brute_force(code: &LinearCode, cap: u64) -> Result<GCSpectrum> {
    let dim = code.f2_dim();
    check_cap(dim, cap)?;
    let n = code.len();
    let counts = if dim < PARALLEL_THRESHOLD_LOG2 {
        let mut counts = vec![0u64; n + 1];
        for v in code.codewords(cap)? {
            counts[v.gc_weight() as usize] += 1;
        }
        counts
    } else {
        par_fold(n, &code.f2_basis(), || vec![0u64; n + 1], |acc, v| acc[v.gc_weight() as usize] += 1, add_tallies)
    };
    Ok(WeightSpectrum::from_u64(&counts))
}
