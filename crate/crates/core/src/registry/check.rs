use crate::error::{Error, Result};
use crate::exact::{Field, QRatFunc, Rational};
use crate::pfd::{Decomposition, QBasisTerms};
use crate::poly::Poly;
use crate::qcomb::{validate_numeric_q, QComb};
use crate::ratfunc::RatFuncX;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Largest order of root of unity a numeric `q` must avoid; covers every
/// `1 - q^k` denominator reachable from the catalog's parameter caps.
pub const MAX_Q_ORDER: u32 = 22;

/// How `q` is treated during certification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode", content = "q")]
pub enum Mode {
    SymbolicQ,
    NumericQ(Rational),
}

/// Evaluation context shared by all instances of a sweep.
pub enum Env {
    Symbolic(QComb<QRatFunc>),
    Numeric(QComb<Rational>),
}

impl Env {
    pub fn new(mode: &Mode) -> Result<Self> {
        match mode {
            Mode::SymbolicQ => Ok(Env::Symbolic(QComb::symbolic())),
            Mode::NumericQ(q) => {
                validate_numeric_q(q, MAX_Q_ORDER)?;
                Ok(Env::Numeric(QComb::numeric(q.clone())?))
            }
        }
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self, Env::Numeric(_))
    }
}

/// One exact equality recorded by a check.
#[derive(Clone, Debug, PartialEq)]
pub struct Claim {
    pub label: String,
    pub passed: bool,
    pub residual: Option<String>,
}

const RESIDUAL_LIMIT: usize = 600;

fn clip(s: String) -> String {
    if s.len() <= RESIDUAL_LIMIT {
        return s;
    }
    let mut end = RESIDUAL_LIMIT;
    while !s.is_char_boundary(end) {
        end -= 1;
    }
    format!("{} ... ({} chars)", &s[..end], s.len())
}

/// Collects the claims of one identity instance.
///
/// With `mutate` set, every claim's right-hand side is perturbed by one so
/// that a correct identity must fail; this exercises the failure path end to
/// end.
pub struct Checker<'a, K: Field> {
    qc: &'a QComb<K>,
    seed: u64,
    mutate: bool,
    claims: Vec<Claim>,
    notes: Vec<String>,
    context: Vec<String>,
}

impl<'a, K: Field> Checker<'a, K> {
    pub fn new(qc: &'a QComb<K>, seed: u64, mutate: bool) -> Self {
        Checker {
            qc,
            seed,
            mutate,
            claims: Vec::new(),
            notes: Vec::new(),
            context: Vec::new(),
        }
    }

    pub fn qc(&self) -> &'a QComb<K> {
        self.qc
    }

    pub fn is_symbolic(&self) -> bool {
        K::has_symbolic_q()
    }

    /// Deterministic generator for one instance, keyed by a tag and integer
    /// coordinates so that different entries can share instances.
    pub fn rng(&self, tag: &str, coords: &[u64]) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(instance_seed(self.seed, tag, coords))
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Describes the instance; reported only if some claim fails.
    pub fn context(&mut self, s: impl Into<String>) {
        self.context.push(s.into());
    }

    fn push(&mut self, label: &str, passed: bool, residual: Option<String>) {
        self.claims.push(Claim {
            label: label.to_string(),
            passed,
            residual: residual.map(clip),
        });
    }

    pub fn flag(&mut self, label: &str, ok: bool) {
        let ok = ok && !self.mutate;
        self.push(label, ok, (!ok).then(|| "condition does not hold".to_string()));
    }

    /// `lhs = rhs` in a field.
    pub fn scalar<L: Field>(&mut self, label: &str, lhs: &L, rhs: &L) {
        let rhs = self.perturb(rhs);
        let diff = lhs.sub(&rhs);
        let ok = diff.is_zero();
        self.push(label, ok, (!ok).then(|| diff.canonical_text()));
    }

    /// `lhs = rhs` as rational functions in `x`, by cross-multiplication,
    /// re-confirmed by evaluation at three exact sample points.
    pub fn ratfunc<L: Field>(&mut self, label: &str, lhs: &RatFuncX<L>, rhs: &RatFuncX<L>) {
        let rhs = if self.mutate {
            rhs.add(&RatFuncX::from_poly(Poly::one()))
        } else {
            rhs.clone()
        };
        let equal = lhs.equals(&rhs);
        if !equal {
            let r = lhs.residual(&rhs);
            self.push(label, false, Some(r.to_text()));
            return;
        }
        let mut rng = self.rng(label, &[]);
        match samples_agree(lhs, &rhs, &mut rng) {
            Ok(()) => self.push(label, true, None),
            Err(msg) => self.push(label, false, Some(msg)),
        }
    }

    /// Term-by-term equality of two decompositions in the same basis.
    pub fn decomposition(&mut self, label: &str, a: &Decomposition<K>, b: &Decomposition<K>) {
        let b = if self.mutate {
            let mut b = b.clone();
            b.accumulate(0, 1, K::one());
            b
        } else {
            b.clone()
        };
        let mut bad = Vec::new();
        let keys: std::collections::BTreeSet<(usize, u32)> = a
            .terms()
            .chain(b.terms())
            .map(|(j, e, _)| (j, e))
            .collect();
        for (j, e) in keys {
            let d = a.get(j, e).sub(&b.get(j, e));
            if !d.is_zero() {
                bad.push(format!("(j={j}, e={e}): {}", d.canonical_text()));
            }
        }
        let ok = bad.is_empty();
        self.push(label, ok, (!ok).then(|| bad.join(", ")));
    }

    /// Term-by-term equality in the `1/(1 - x q^j)^e` basis.
    pub fn q_terms(&mut self, label: &str, a: &QBasisTerms<K>, b: &QBasisTerms<K>) {
        let b = if self.mutate {
            let mut b = b.clone();
            b.accumulate(0, 1, K::one());
            b
        } else {
            b.clone()
        };
        let mut bad = Vec::new();
        let keys: std::collections::BTreeSet<(usize, u32)> = a
            .terms()
            .chain(b.terms())
            .map(|(j, e, _)| (j, e))
            .collect();
        for (j, e) in keys {
            let d = a.get(j, e).sub(&b.get(j, e));
            if !d.is_zero() {
                bad.push(format!("(j={j}, e={e}): {}", d.canonical_text()));
            }
        }
        let ok = bad.is_empty();
        self.push(label, ok, (!ok).then(|| bad.join(", ")));
    }

    fn perturb<L: Field>(&self, v: &L) -> L {
        if self.mutate {
            v.add(&L::one())
        } else {
            v.clone()
        }
    }

    pub(crate) fn finish(self) -> (Vec<Claim>, Vec<String>) {
        let mut notes = self.notes;
        if self.claims.iter().any(|c| !c.passed) {
            notes.extend(self.context);
        }
        (self.claims, notes)
    }
}

/// Sample points `(x, q)` with small numerators and denominators.
fn sample_point(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    let mut draw = || {
        let num = rng.gen_range(-23i64..=23);
        let den = rng.gen_range(2i64..=7);
        Rational::frac(num, den)
    };
    (draw(), draw())
}

fn eval_at<L: Field>(p: &Poly<L>, x: &Rational, q: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&c.specialize_q(q)?);
    }
    Ok(acc)
}

fn value_at<L: Field>(f: &RatFuncX<L>, x: &Rational, q: &Rational) -> Result<Rational> {
    let d = eval_at(f.denom(), x, q)?;
    if d.is_zero() {
        return Err(Error::PoleAtSample(format!("x = {x}, q = {q}")));
    }
    eval_at(f.numer(), x, q)?.div(&d)
}

fn samples_agree<L: Field>(
    lhs: &RatFuncX<L>,
    rhs: &RatFuncX<L>,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<(), String> {
    let mut checked = 0;
    for _ in 0..40 {
        let (x, q) = sample_point(rng);
        if let (Ok(a), Ok(b)) = (value_at(lhs, &x, &q), value_at(rhs, &x, &q)) {
            if a != b {
                return Err(format!(
                    "cross-multiplication agrees but values differ at x = {x}, q = {q}"
                ));
            }
            checked += 1;
            if checked == 3 {
                return Ok(());
            }
        }
    }
    Err("no admissible sample point found".into())
}

/// Mixes the sweep seed with an instance tag and coordinates.
pub fn instance_seed(seed: u64, tag: &str, coords: &[u64]) -> u64 {
    // FNV-1a over the tag, then splitmix64 steps over the coordinates.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut z = seed ^ h;
    for &c in coords.iter().chain(std::iter::once(&(coords.len() as u64))) {
        z = splitmix(z ^ c.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    }
    z
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A random polynomial of degree exactly `degree`. Lower coefficients are
/// `a + b q` with `|a|, |b| <= 9`; the leading coefficient is a nonzero
/// integer so the degree survives any specialization of `q`.
pub fn random_qpoly<K: Field>(rng: &mut ChaCha8Rng, qc: &QComb<K>, degree: usize) -> Poly<K> {
    let mut coeffs = Vec::with_capacity(degree + 1);
    for _ in 0..degree {
        let a = rng.gen_range(-9i64..=9);
        let b = rng.gen_range(-9i64..=9);
        coeffs.push(K::from_i64(a).add(&qc.q().mul(&K::from_i64(b))));
    }
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-9i64..=9);
    }
    coeffs.push(K::from_i64(lead));
    Poly::new(coeffs)
}
