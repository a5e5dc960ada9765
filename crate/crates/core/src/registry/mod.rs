//! Catalog of certifiable identities.
//!
//! Every entry expands a parameter grid into independent instances; each
//! instance builds both sides of its identity exactly and compares them
//! (scalars structurally in the ground field, rational functions in `x` by
//! cross-multiplication). A report passes iff every recorded claim has a
//! zero residual.

mod check;
mod classical;
mod hypergeo;
mod pfd_ids;
mod qapery;
mod sums;

pub use check::{instance_seed, random_qpoly, Checker, Claim, Env, Mode, MAX_Q_ORDER};

use crate::error::{Error, Result};
use crate::exact::{Field, QRatFunc, Rational};
use crate::qcomb::QComb;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

/// Named parameters of one identity instance.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<String, Value>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), v.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.get(key)
    }

    /// Integer parameter; panics if the catalog entry did not declare it.
    pub fn u(&self, key: &str) -> u32 {
        self.0
            .get(key)
            .and_then(Value::as_u64)
            .unwrap_or_else(|| panic!("missing integer parameter `{key}`")) as u32
    }

    pub fn s(&self, key: &str) -> &str {
        self.0
            .get(key)
            .and_then(Value::as_str)
            .unwrap_or_else(|| panic!("missing string parameter `{key}`"))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Value)> {
        self.0.iter()
    }
}

/// User-selected bounds on the parameter grid. Each catalog entry clamps
/// these to its own declared space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub n_max: Option<u32>,
    pub m_max: Option<u32>,
    pub l: Option<u32>,
    pub trials: Option<u32>,
    pub seed: u64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            n_max: None,
            m_max: None,
            l: None,
            trials: None,
            seed: 20240917,
        }
    }
}

impl Grid {
    pub fn n_range(&self, lo: u32, cap: u32) -> std::ops::RangeInclusive<u32> {
        lo..=self.n_max.map_or(cap, |n| n.min(cap))
    }

    pub fn m_range(&self, cap: u32) -> std::ops::RangeInclusive<u32> {
        1..=self.m_max.map_or(cap, |m| m.min(cap))
    }

    pub fn l_allowed(&self, l: u32) -> bool {
        self.l.is_none_or(|v| v == l)
    }

    pub fn trials(&self, default: u32) -> u32 {
        self.trials.unwrap_or(default)
    }
}

type CheckFn<K> = fn(&mut Checker<'_, K>, &Params) -> Result<()>;

/// One catalog entry.
pub struct IdentityDescriptor {
    pub name: &'static str,
    /// What the identity asserts, in words.
    pub statement: &'static str,
    /// Declared parameter space (desk-scale bounds).
    pub space: &'static str,
    instances: fn(&Grid) -> Vec<Params>,
    check_symbolic: CheckFn<QRatFunc>,
    check_numeric: CheckFn<Rational>,
}

impl IdentityDescriptor {
    pub fn instances(&self, grid: &Grid) -> Vec<Params> {
        (self.instances)(grid)
    }

    /// Certifies one instance in the given environment.
    pub fn run(&self, env: &Env, params: &Params, grid: &Grid, mutate: bool) -> IdentityReport {
        let start = Instant::now();
        let (outcome, claims, notes) = match env {
            Env::Symbolic(e) => run_with(e, params, grid, mutate, self.check_symbolic),
            Env::Numeric(e) => run_with(e, params, grid, mutate, self.check_numeric),
        };
        let failing: Vec<String> = claims
            .iter()
            .filter(|c| !c.passed)
            .map(|c| match &c.residual {
                Some(r) => format!("{}: {}", c.label, r),
                None => c.label.clone(),
            })
            .collect();
        let (status, residual) = match outcome {
            Ok(()) if failing.is_empty() && !claims.is_empty() => (Status::Pass, None),
            Ok(()) if claims.is_empty() => (Status::Fail, Some("no claims recorded".into())),
            Ok(()) => (Status::Fail, Some(failing.join("; "))),
            Err(e @ (Error::PoleAtSample(_) | Error::DivisionByZero)) if env.is_numeric() => {
                (Status::Skipped, Some(e.to_string()))
            }
            Err(e) => (Status::Fail, Some(e.to_string())),
        };
        IdentityReport {
            name: self.name.to_string(),
            params: params.clone(),
            status,
            residual,
            claims: claims.len(),
            note: if notes.is_empty() {
                None
            } else {
                Some(notes.join("; "))
            },
            elapsed: start.elapsed(),
        }
    }
}

fn run_with<K: Field>(
    qc: &QComb<K>,
    params: &Params,
    grid: &Grid,
    mutate: bool,
    f: CheckFn<K>,
) -> (Result<()>, Vec<Claim>, Vec<String>) {
    let mut c = Checker::new(qc, grid.seed, mutate);
    let r = f(&mut c, params);
    let (claims, notes) = c.finish();
    (r, claims, notes)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of certifying one identity instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub params: Params,
    pub status: Status,
    /// `label: LHS - RHS` for every failing claim.
    pub residual: Option<String>,
    /// Number of exact equalities checked.
    pub claims: usize,
    pub note: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

macro_rules! entry {
    ($name:literal, $statement:literal, $space:literal, $inst:path, $module:ident :: $check:ident) => {
        IdentityDescriptor {
            name: $name,
            statement: $statement,
            space: $space,
            instances: $inst,
            check_symbolic: $module::$check::<QRatFunc>,
            check_numeric: $module::$check::<Rational>,
        }
    };
}

static CATALOG: [IdentityDescriptor; 28] = [
    entry!(
        "thm1_generic",
        "closed-form partial fractions for Q/prod (x-a_j)^m match the linear-system solution and recombine to Q/P",
        "s in 1..=4, m in 1..=3, trial in 0..9 (random rational poles in [-9,9], random Q)",
        pfd_ids::thm1_instances,
        pfd_ids::thm1_generic
    ),
    entry!(
        "thm2_q_poles",
        "(q;q)_n^m Q(x)/(x;q)_{n+1}^m equals the q-binomial / Bell triple sum over the poles q^{-j}",
        "n in 0..=6, m in 1..=3, trial in 0..5 (random Q with coefficients a+bq, |a|,|b|<=9)",
        pfd_ids::thm2_instances,
        pfd_ids::thm2_q_poles
    ),
    entry!(
        "cor_m2_pfd",
        "explicit m=2 decomposition with q-harmonic first Bell argument",
        "n in 0..=8, trial in 0..3",
        pfd_ids::cor_m2_instances,
        pfd_ids::cor_m2_pfd
    ),
    entry!(
        "m2_unit_numerator",
        "Q=1 case of the m=2 decomposition, and its x=0 specialization for (q;q)_n^2",
        "n in 0..=8",
        pfd_ids::n_upto_8,
        pfd_ids::m2_unit_numerator
    ),
    entry!(
        "zheng",
        "x^{2n}(q/x;q)_n^2/((1-x)(xq;q)_n^2) = 1/(1-x) + sum_{j>=1} [n j]^2[n+j j]^2 q^{j(j-2n)} ((q^j-1)/(1-xq^j)^2 + (1-4[j]H_j+2[j]H_{n+j}+2q[j]H_{n-j}(1/q))/(1-xq^j)), plus the Q(q^{-j}) and Q'(q^{-j}) evaluations behind it",
        "n in 0..=6",
        pfd_ids::n_upto_6,
        qapery::zheng
    ),
    entry!(
        "zheng_sum",
        "sum_k q^{k(k-2n)}[n k]^2[n+k k]^2 (2H_k(q) - H_{n+k}(q) - q H_{n-k}(1/q)) = 0",
        "n in 0..=8",
        pfd_ids::n_upto_8,
        qapery::zheng_sum
    ),
    entry!(
        "ckra_explicit",
        "explicit decomposition of (xq^{-n};q)_n^2/(x;q)_{n+1}^2; coefficients agree with the linear-system solution",
        "n in 0..=6",
        pfd_ids::n_upto_6,
        qapery::ckra_explicit
    ),
    entry!(
        "ckra_at_zero",
        "x=0 specialization: sum [n j]^2[n+j j]^2 q^{j(j+1)-2nj}(1-q+4H_j-2qH_{n-j}(1/q)-2H_{n+j}) = q^{n(n+1)}(1-q)",
        "n in 0..=8",
        pfd_ids::n_upto_8,
        qapery::ckra_at_zero
    ),
    entry!(
        "q_apery_normalizations",
        "sum_k a_q(n,k)/q^k scaled by q^{n(2n+1)} and q^{n(n+1)} gives the two q-binomial forms of the q-Apery numbers",
        "n in 0..=8",
        pfd_ids::n_upto_8,
        qapery::q_apery_normalizations
    ),
    entry!(
        "cor_monomial",
        "decomposition of (q;q)_n^m x^l/(x;q)_{n+1}^m with binomial(l,i) weights",
        "n in 0..=4, m in 1..=3, l in 0..(n+1)m",
        pfd_ids::monomial_instances,
        pfd_ids::cor_monomial
    ),
    entry!(
        "cor_unit_numerator",
        "decomposition of (q;q)_n^m/(x;q)_{n+1}^m for general m",
        "n in 0..=6, m in 1..=3",
        pfd_ids::nm_instances,
        pfd_ids::cor_unit_numerator
    ),
    entry!(
        "cor_m1_pfd",
        "(q;q)_n Q(x)/(x;q)_{n+1} = sum (-1)^j [n j] q^{C(j+1,2)} Q(q^{-j})/(1-xq^j)",
        "n in 0..=6, trial in 0..5 (same random Q as thm2_q_poles with m=1)",
        pfd_ids::m1_instances,
        pfd_ids::cor_m1_pfd
    ),
    entry!(
        "limit_sum",
        "x -> infinity limit of the q-pole decomposition: weighted Bell sum vanishes below degree m(n+1)-1 and equals the leading-coefficient term at it",
        "n in 0..=6, m in 1..=3, l in 0..m(n+1)",
        sums::limit_instances,
        sums::limit_sum
    ),
    entry!(
        "cor_m1_sum",
        "sum [n j] q^{C(j,2)} (-1)^j Q(q^{-j}) is 0 for deg Q < n and (-1)^n (q;q)_n q^{-C(n+1,2)} a_n at deg Q = n",
        "n in 1..=8, l in 0..=n",
        sums::nl_upto_8,
        sums::cor_m1_sum
    ),
    entry!(
        "q_euler",
        "sum [n j] q^{C(j,2)-jl} (-1)^j [j]^l is 0 for l < n and (-1)^n (q;q)_n/(1-q)^n q^{-C(n+1,2)} for l = n",
        "n in 1..=8, l in 0..=n",
        sums::nl_upto_8,
        sums::q_euler
    ),
    entry!(
        "euler_classical",
        "sum C(n,j) (-1)^j j^l is 0 for l < n and (-1)^n n! for l = n (over Q)",
        "n in 1..=10, l in 0..=n",
        sums::nl_upto_10,
        classical::euler_classical
    ),
    entry!(
        "cor_m2_sum",
        "m=2 limit sum with q-harmonic weights: 0 below degree 2n+1, (q;q)_n^2 q^{-n(n+1)} a_l at degree 2n+1",
        "n in 0..=6, l in 0..=2n+1",
        sums::m2_sum_instances,
        sums::cor_m2_sum
    ),
    entry!(
        "harmonic_square_sum",
        "sum [n j]^2 q^{j^2} (H_j(q) - q H_{n-j}(1/q)) = 0",
        "n in 0..=10",
        sums::n_upto_10,
        sums::harmonic_square_sum
    ),
    entry!(
        "qapery_harmonic_variant",
        "q-Apery harmonic sum equal to q^{-n(n+1)}; both printed variants of the last harmonic term are tested and exactly one must hold",
        "n in 1..=6",
        sums::n_from_1_upto_6,
        sums::qapery_harmonic_variant
    ),
    entry!(
        "y_family",
        "sum (-1)^j [n j] q^{C(j+1,2)-jn} (y;q)_{n+j}/((y;q)_j (1-xq^j)) = (q;q)_n (y/x;q)_n x^n/(x;q)_{n+1}, certified at 2n+2 exact y samples",
        "n in 0..=6, y_mode in {rational, q_power}",
        hypergeo::y_instances,
        hypergeo::y_family
    ),
    entry!(
        "yq_part1",
        "sum (-1)^j [n j][n+j j] q^{C(j+1,2)-jn}/(1-xq^j) = x^n (q/x;q)_n/(x;q)_{n+1}",
        "n in 0..=6",
        pfd_ids::n_upto_6,
        hypergeo::yq_part1
    ),
    entry!(
        "yq_part2",
        "sum (-1)^j [n j][n+j j] q^{C(j+1,2)-jn}/(1-q^{j+l}) = 0",
        "n in 1..=8, l in 1..=n",
        hypergeo::nl_positive,
        hypergeo::yq_part2
    ),
    entry!(
        "yq_part3",
        "sum_{j<n} (-1)^{n+1+j} [n j][n+j j] (1-q^{n+l})/(1-q^{j+l}) q^{C(j+1,2)+n^2-jn} = [2n n] q^{C(n+1,2)}",
        "n in 1..=8, l in 1..=n",
        hypergeo::nl_positive,
        hypergeo::yq_part3
    ),
    entry!(
        "yq_part4",
        "q^{C(n+1,2)} = sum (-1)^{n-j} [n j][n+j j] q^{C(j+1,2)-jn}",
        "n in 0..=10",
        sums::n_upto_10,
        hypergeo::yq_part4
    ),
    entry!(
        "harmonic_x",
        "sum (-1)^j [n j][n+j j] q^{C(j,2)-jn} (H_{m+j,q}(x) - H_{j,q}(x)) = (-1)^n q^{C(n+1,2)} sum_{i<=m} q^i (xq^{i-n};q)_n/(xq^i;q)_{n+1}",
        "n in 1..=5, m in 1..=n",
        hypergeo::harmonic_x_instances,
        hypergeo::harmonic_x
    ),
    entry!(
        "apery_numbers",
        "A(n) = sum C(n,k)^2 C(n+k,k)^2 agrees with the three-term Apery recurrence; A(0..3) = 1, 5, 73, 1445",
        "n in 0..=10",
        sums::n_upto_10,
        classical::apery_numbers
    ),
    entry!(
        "ahlgren_ono",
        "sum_{k>=1} C(n,k)^2 C(n+k,k)^2 (1 + 2k H_{n+k} + 2k H_{n-k} - 4k H_k) = 0 (over Q)",
        "n in 0..=10",
        sums::n_upto_10,
        classical::ahlgren_ono
    ),
    entry!(
        "chu",
        "sum C(n,j)^2 C(n+j,j)^2 (-j/(x+j)^2 + (1 + 2j(H_{n+j}-H_j) + 2j(H_{n-j}-H_j))/(x+j)) = x (1-x)_n^2/(x)_{n+1}^2 (over Q(x))",
        "n in 0..=6",
        pfd_ids::n_upto_6,
        classical::chu
    ),
];

/// `C(k, 2)` for signed `k`.
pub(crate) fn c2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// One instance per `n` in `lo..=cap` (clamped by the grid).
pub(crate) fn n_params(grid: &Grid, lo: u32, cap: u32) -> Vec<Params> {
    grid.n_range(lo, cap)
        .map(|n| Params::new().with("n", n))
        .collect()
}

/// One instance per `(n, l)` with `n` in `lo..=cap` and `l` in `l_lo..=n`.
pub(crate) fn nl_params(grid: &Grid, lo: u32, cap: u32, l_lo: u32) -> Vec<Params> {
    let mut out = Vec::new();
    for n in grid.n_range(lo, cap) {
        for l in (l_lo..=n).filter(|&l| grid.l_allowed(l)) {
            out.push(Params::new().with("n", n).with("l", l));
        }
    }
    out
}

/// The full catalog in its documented, stable order.
pub fn catalog() -> &'static [IdentityDescriptor] {
    &CATALOG
}

pub fn lookup(name: &str) -> Result<&'static IdentityDescriptor> {
    CATALOG
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::NotFound(name.to_string()))
}

/// Entries whose name matches `pattern`: `all`, an exact name, or a glob
/// with `*` wildcards. An exact or glob pattern that matches nothing is an
/// error.
pub fn select(pattern: &str) -> Result<Vec<&'static IdentityDescriptor>> {
    if pattern == "all" {
        return Ok(CATALOG.iter().collect());
    }
    let hits: Vec<_> = CATALOG
        .iter()
        .filter(|d| glob_match(pattern, d.name))
        .collect();
    if hits.is_empty() {
        return Err(Error::NotFound(pattern.to_string()));
    }
    Ok(hits)
}

fn glob_match(pattern: &str, name: &str) -> bool {
    let parts: Vec<&str> = pattern.split('*').collect();
    if parts.len() == 1 {
        return pattern == name;
    }
    let mut rest = name;
    for (i, part) in parts.iter().enumerate() {
        if i == 0 {
            let Some(r) = rest.strip_prefix(part) else {
                return false;
            };
            rest = r;
        } else if i == parts.len() - 1 {
            return rest.ends_with(part);
        } else {
            match rest.find(part) {
                Some(pos) => rest = &rest[pos + part.len()..],
                None => return false,
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = catalog().iter().map(|d| d.name).collect();
        let len = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), len);
        assert!(len >= 18);
    }

    #[test]
    fn lookup_and_select() {
        assert!(lookup("zheng").is_ok());
        assert_eq!(lookup("nope").err(), Some(Error::NotFound("nope".into())));
        assert_eq!(select("yq_part*").unwrap().len(), 4);
        assert_eq!(select("*_sum").unwrap().len(), 5);
        assert_eq!(select("all").unwrap().len(), catalog().len());
        assert!(select("zz*").is_err());
    }

    #[test]
    fn globbing() {
        assert!(glob_match("a*c", "abc"));
        assert!(glob_match("*", "x"));
        assert!(!glob_match("a*c", "abd"));
        assert!(glob_match("a*b*c", "a1b2c"));
    }
}
