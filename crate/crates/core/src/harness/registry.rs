//! The closed claim registry: ids, parameter signatures, default scan
//! spaces and evaluators.

use std::fmt;

use super::sample::{self, DEFAULT_SEED};
use super::space::{ParamDomain, ParamSet, ParamSpace};
use crate::check::{CheckResult, Params};
use crate::conjectures::{self, ConjectureId};
use crate::error::{Error, Result};
use crate::identities::{self as ids, AlternatingIdentity, Corollary, SummationLemma};
use crate::qpoly::{self, Thm51Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimKind {
    Theorem,
    Lemma,
    Conjecture,
}

impl ClaimKind {
    /// Failures of proven statements are defects; conjecture failures are data.
    pub fn failure_is_fatal(self) -> bool {
        self != ClaimKind::Conjecture
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimKind::Theorem => "theorem",
            ClaimKind::Lemma => "lemma",
            ClaimKind::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamType {
    Int,
    List,
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSig {
    pub name: &'static str,
    pub ty: ParamType,
}

const fn int(name: &'static str) -> ParamSig {
    ParamSig {
        name,
        ty: ParamType::Int,
    }
}

const fn list(name: &'static str) -> ParamSig {
    ParamSig {
        name,
        ty: ParamType::List,
    }
}

/// One registered claim.
#[derive(Clone, Copy)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub kind: ClaimKind,
    /// Parameter order; range bounds may only refer to earlier names.
    pub params: &'static [ParamSig],
    pub summary: &'static str,
    eval: fn(&Params) -> Result<CheckResult>,
    default_space: fn() -> ParamSpace,
}

impl fmt::Debug for ClaimInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClaimInfo")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

impl ClaimInfo {
    /// Runs the check; the result carries `params` exactly as given, in
    /// signature order.
    pub fn evaluate(&self, params: &Params) -> Result<CheckResult> {
        let mut res = (self.eval)(params)?;
        res.params = params.clone();
        Ok(res)
    }

    pub fn default_space(&self) -> ParamSpace {
        (self.default_space)()
    }

    pub fn param_names(&self) -> Vec<&'static str> {
        self.params.iter().map(|p| p.name).collect()
    }

    pub fn param_type(&self, name: &str) -> Option<ParamType> {
        self.params.iter().find(|p| p.name == name).map(|p| p.ty)
    }
}

pub fn lookup(id: &str) -> Result<&'static ClaimInfo> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

pub fn all_claims() -> &'static [ClaimInfo] {
    REGISTRY
}

// parameter access -----------------------------------------------------------

fn get(p: &Params, name: &str) -> Result<i64> {
    p.int(name)
        .ok_or_else(|| Error::BadParams(format!("missing integer parameter `{name}`")))
}

fn get_u(p: &Params, name: &str) -> Result<u64> {
    let v = get(p, name)?;
    u64::try_from(v).map_err(|_| Error::BadDomain(format!("{name} must be ≥ 0, got {v}")))
}

fn get_list<'a>(p: &'a Params, name: &str) -> Result<&'a [i64]> {
    p.list(name)
        .ok_or_else(|| Error::BadParams(format!("missing list parameter `{name}`")))
}

// default spaces --------------------------------------------------------------

fn grid(dims: &[(&str, ParamSet)]) -> ParamSpace {
    ParamSpace::Grid(
        dims.iter()
            .map(|(n, s)| (n.to_string(), ParamDomain::Scalar(s.clone())))
            .collect(),
    )
}

fn r(lo: i64, hi: i64) -> ParamSet {
    ParamSet::range(lo, hi)
}

fn primes_5_97() -> ParamSpace {
    grid(&[("p", ParamSet::Primes { lo: 5, hi: 97 })])
}

fn n_r_150() -> ParamSpace {
    grid(&[("n", r(1, 150)), ("r", r(0, 4))])
}

fn n_r_eps_150() -> ParamSpace {
    grid(&[
        ("n", r(1, 150)),
        ("r", r(0, 4)),
        ("eps", ParamSet::Explicit(vec![-1, 1])),
    ])
}

fn n_r_200() -> ParamSpace {
    grid(&[("n", r(1, 200)), ("r", r(0, 4))])
}

fn n_150() -> ParamSpace {
    grid(&[("n", r(1, 150))])
}

fn gcd_binom_space() -> ParamSpace {
    let mut ts = sample::gcd_binom_tuples(DEFAULT_SEED, 500);
    ts.extend(sample::gcd_binom_structured(30));
    ParamSpace::Tuples(ts)
}

fn gen_bino_space() -> ParamSpace {
    let mut ts = sample::gen_bino_tuples(DEFAULT_SEED, 500);
    ts.extend(sample::gen_bino_structured(30));
    ParamSpace::Tuples(ts)
}

fn n_r_s_40() -> ParamSpace {
    grid(&[("n", r(1, 40)), ("r", r(0, 3)), ("s", r(0, 3))])
}

fn calkin_space() -> ParamSpace {
    grid(&[("n", r(0, 60)), ("s", r(0, 4))])
}

fn lem22_space() -> ParamSpace {
    grid(&[
        ("n", r(1, 40)),
        ("k", ParamSet::up_to_param(0, "n", -1)),
        ("a", r(0, 10)),
    ])
}

fn lem23_space() -> ParamSpace {
    grid(&[
        ("n", r(1, 40)),
        ("k", ParamSet::up_to_param(0, "n", 0)),
        ("a", r(0, 10)),
    ])
}

fn n_k_40() -> ParamSpace {
    grid(&[("n", r(1, 40)), ("k", ParamSet::up_to_param(0, "n", -1))])
}

fn n_300() -> ParamSpace {
    grid(&[("n", r(1, 300))])
}

fn n_60() -> ParamSpace {
    grid(&[("n", r(1, 60))])
}

fn qchu_space() -> ParamSpace {
    grid(&[("m", r(0, 12)), ("n", r(0, 12)), ("h", r(0, 12))])
}

fn qlucas_space() -> ParamSpace {
    grid(&[
        ("d", r(2, 8)),
        ("a", r(0, 4)),
        ("b", ParamSet::up_to_param(0, "d", -1)),
        ("r", r(0, 4)),
        ("s", ParamSet::up_to_param(0, "d", -1)),
    ])
}

fn thm51_space() -> ParamSpace {
    ParamSpace::Tuples(sample::thm51_tuples(DEFAULT_SEED, 100))
}

fn n_30() -> ParamSpace {
    grid(&[("n", r(1, 30))])
}

fn n_24() -> ParamSpace {
    grid(&[("n", r(1, 24))])
}

fn conj56_space() -> ParamSpace {
    let mut ts = Vec::new();
    for p in [2i64, 3, 5] {
        let mut e = 1u32;
        while p.pow(e) <= 32 {
            ts.push(Params::new().with("p", p).with("e", e as i64));
            e += 1;
        }
    }
    ParamSpace::Tuples(ts)
}

fn conj31_space() -> ParamSpace {
    grid(&[("n", ParamSet::PowersOfTwo { lo: 2, hi: 64 })])
}

fn conj_gen_space() -> ParamSpace {
    ParamSpace::Tuples(sample::conj_gen_tuples(DEFAULT_SEED, 200))
}

fn pow2_space() -> ParamSpace {
    grid(&[("n", r(1, 64)), ("r", r(1, 3))])
}

fn cases_space() -> ParamSpace {
    grid(&[("n", r(1, 40)), ("s", r(1, 3)), ("t", r(1, 3))])
}

// evaluators -------------------------------------------------------------------

fn wolst_pick(p: &Params, idx: usize) -> Result<CheckResult> {
    Ok(ids::check_wolstenholme_suite(get(p, "p")?)?.swap_remove(idx))
}

fn lemma(which: SummationLemma, p: &Params) -> Result<CheckResult> {
    let a = if which == SummationLemma::Gsun {
        get(p, "a")?
    } else {
        0
    };
    ids::check_summation_lemma(which, get(p, "n")?, get(p, "k")?, a)
}

fn corollary(which: Corollary, p: &Params) -> Result<CheckResult> {
    let r = if which == Corollary::Calkin {
        0
    } else {
        get(p, "r")?
    };
    ids::check_corollary(which, get(p, "n")?, r, get(p, "s")?)
}

fn thm51(v: Thm51Variant, p: &Params) -> Result<CheckResult> {
    qpoly::check_thm51(v, get_u(p, "n")?, get_list(p, "a")?, get_list(p, "b")?)
}

fn conj(id: ConjectureId, p: &Params) -> Result<CheckResult> {
    conjectures::check_conjecture(id, p)
}

const N_R: &[ParamSig] = &[int("n"), int("r")];
const N_R_EPS: &[ParamSig] = &[int("n"), int("r"), int("eps")];
const N: &[ParamSig] = &[int("n")];
const P: &[ParamSig] = &[int("p")];
const N_A_B: &[ParamSig] = &[int("n"), list("a"), list("b")];
const N_R_S: &[ParamSig] = &[int("n"), int("r"), int("s")];
const N_K_A: &[ParamSig] = &[int("n"), int("k"), int("a")];
const N_K: &[ParamSig] = &[int("n"), int("k")];

static REGISTRY: &[ClaimInfo] = &[
    ClaimInfo {
        id: "thm1.1a",
        kind: ClaimKind::Theorem,
        params: N_R,
        summary: "Σ_{k<n}(2k+1)k^r(k+1)^r A_k ≡ 0 (mod n)",
        eval: |p| Ok(ids::check_thm_apery(get(p, "n")?, get(p, "r")?)?.0),
        default_space: n_r_150,
    },
    ClaimInfo {
        id: "thm1.1b",
        kind: ClaimKind::Theorem,
        params: N_R,
        summary: "alternating Apéry sum ≡ 0 (mod n)",
        eval: |p| Ok(ids::check_thm_apery(get(p, "n")?, get(p, "r")?)?.1),
        default_space: n_r_150,
    },
    ClaimInfo {
        id: "thm1.2a",
        kind: ClaimKind::Theorem,
        params: N_R_EPS,
        summary: "Σ_{k<n}ε^k(2k+1)k^r(k+1)^r D_k ≡ 0 (mod n)",
        eval: |p| Ok(ids::check_thm_delannoy(get(p, "n")?, get(p, "r")?, get(p, "eps")?)?.0),
        default_space: n_r_eps_150,
    },
    ClaimInfo {
        id: "thm1.2b",
        kind: ClaimKind::Theorem,
        params: N_R_EPS,
        summary: "second Delannoy weighted sum congruence",
        eval: |p| Ok(ids::check_thm_delannoy(get(p, "n")?, get(p, "r")?, get(p, "eps")?)?.1),
        default_space: n_r_eps_150,
    },
    ClaimInfo {
        id: "thm1.3a",
        kind: ClaimKind::Theorem,
        params: N,
        summary: "Σ_{k<n}(2k+1)³A_k ≡ 0 (mod n)",
        eval: |p| ids::check_akcubic(get(p, "n")?),
        default_space: n_150,
    },
    ClaimInfo {
        id: "thm1.3b",
        kind: ClaimKind::Theorem,
        params: P,
        summary: "Σ_{k<p}(2k+1)³A_k ≡ p³ (mod 2p⁶), p > 3 prime",
        eval: |p| ids::check_akcubic_prime(get(p, "p")?),
        default_space: primes_5_97,
    },
    ClaimInfo {
        id: "thm1.4",
        kind: ClaimKind::Theorem,
        params: N_A_B,
        summary: "Σ C(n−1,k)² ∏C(a_i+k,b_i+k) ≡ 0 (mod gcd)",
        eval: |p| ids::check_gcd_binom(get(p, "n")?, get_list(p, "a")?, get_list(p, "b")?),
        default_space: gcd_binom_space,
    },
    ClaimInfo {
        id: "thm3.1a",
        kind: ClaimKind::Theorem,
        params: N_R,
        summary: "Delannoy weighted sum ≡ n (mod 2n) refinement",
        eval: |p| Ok(ids::check_thm_delref(get(p, "n")?, get(p, "r")?)?.0),
        default_space: n_r_200,
    },
    ClaimInfo {
        id: "thm3.1b",
        kind: ClaimKind::Theorem,
        params: N_R,
        summary: "alternating Delannoy refinement mod 2n",
        eval: |p| Ok(ids::check_thm_delref(get(p, "n")?, get(p, "r")?)?.1),
        default_space: n_r_200,
    },
    ClaimInfo {
        id: "thm5.3",
        kind: ClaimKind::Theorem,
        params: N_A_B,
        summary: "Σ(−1)^{mk}∏C(a_i−1,b_i+k) ≡ 0 (mod gcd)",
        eval: |p| ids::check_gen_bino(get(p, "n")?, get_list(p, "a")?, get_list(p, "b")?),
        default_space: gen_bino_space,
    },
    ClaimInfo {
        id: "cor5.1a",
        kind: ClaimKind::Theorem,
        params: N_R_S,
        summary: "Σ C(n+k,k)^r C(n−1,k)^{2s} ≡ 0 (mod n)",
        eval: |p| corollary(Corollary::Cor51a, p),
        default_space: n_r_s_40,
    },
    ClaimInfo {
        id: "cor5.1b",
        kind: ClaimKind::Theorem,
        params: N_R_S,
        summary: "Σ(−1)^k C(n+k,k)^r C(n−1,k)^{2s+1} ≡ 0 (mod n)",
        eval: |p| corollary(Corollary::Cor51b, p),
        default_space: n_r_s_40,
    },
    ClaimInfo {
        id: "cor5.2",
        kind: ClaimKind::Theorem,
        params: N_R_S,
        summary: "Σ(−1)^{(r+s)k}C(n−1,k)^r C(2n−1,k)^s ≡ 0 (mod n)",
        eval: |p| corollary(Corollary::Cor52, p),
        default_space: n_r_s_40,
    },
    ClaimInfo {
        id: "calkin",
        kind: ClaimKind::Theorem,
        params: &[int("n"), int("s")],
        summary: "Σ_{k≤n} C(n,k)^{2s} ≡ 0 (mod n+1)",
        eval: |p| corollary(Corollary::Calkin, p),
        default_space: calkin_space,
    },
    ClaimInfo {
        id: "lem2.2",
        kind: ClaimKind::Lemma,
        params: N_K_A,
        summary: "closed form of Σ(2m+1)C(m+k,2k)C(m+k+a,2k+2a)",
        eval: |p| lemma(SummationLemma::Gsun, p),
        default_space: lem22_space,
    },
    ClaimInfo {
        id: "lem2.3",
        kind: ClaimKind::Lemma,
        params: N_K_A,
        summary: "integrality of the certificate quotient",
        eval: |p| ids::check_lemma23(get(p, "n")?, get(p, "k")?, get(p, "a")?),
        default_space: lem23_space,
    },
    ClaimInfo {
        id: "lem3.1+",
        kind: ClaimKind::Lemma,
        params: N_K,
        summary: "closed form of Σ_{m<n}(2m+1)C(m+k,2k)",
        eval: |p| lemma(SummationLemma::SunPlus, p),
        default_space: n_k_40,
    },
    ClaimInfo {
        id: "lem3.1-",
        kind: ClaimKind::Lemma,
        params: N_K,
        summary: "closed form of Σ_{m<n}(−1)^m(2m+1)C(m+k,2k)",
        eval: |p| lemma(SummationLemma::SunMinus, p),
        default_space: n_k_40,
    },
    ClaimInfo {
        id: "lem4.1",
        kind: ClaimKind::Lemma,
        params: N_K,
        summary: "closed form of Σ_{m<n}(2m+1)³C(m+k,2k)²",
        eval: |p| lemma(SummationLemma::Cubic, p),
        default_space: n_k_40,
    },
    ClaimInfo {
        id: "lem4.2a",
        kind: ClaimKind::Lemma,
        params: P,
        summary: "Σ C(p+k,k+1)C(p+k,k)C(p−1,k)² ≡ p (mod 2p⁴)",
        eval: |p| wolst_pick(p, 2),
        default_space: primes_5_97,
    },
    ClaimInfo {
        id: "lem4.2b",
        kind: ClaimKind::Lemma,
        params: P,
        summary: "companion binomial sum ≡ 1 (mod 2p³)",
        eval: |p| wolst_pick(p, 3),
        default_space: primes_5_97,
    },
    ClaimInfo {
        id: "wolst1",
        kind: ClaimKind::Lemma,
        params: P,
        summary: "numerator of H_{p−1} ≡ 0 (mod p²)",
        eval: |p| wolst_pick(p, 0),
        default_space: primes_5_97,
    },
    ClaimInfo {
        id: "wolst2",
        kind: ClaimKind::Lemma,
        params: P,
        summary: "numerator of H^{(2)}_{p−1} ≡ 0 (mod p)",
        eval: |p| wolst_pick(p, 1),
        default_space: primes_5_97,
    },
    ClaimInfo {
        id: "eq-particular1",
        kind: ClaimKind::Theorem,
        params: N,
        summary: "Σ C(n+k,k)²C(n−1,k)² ≡ 0 (mod n)",
        eval: |p| ids::check_particular1(get(p, "n")?),
        default_space: n_300,
    },
    ClaimInfo {
        id: "alt-unit",
        kind: ClaimKind::Lemma,
        params: N,
        summary: "Σ(−1)^k C(n+k,n)C(n,k+1) = (−1)^{n−1}",
        eval: |p| ids::check_alternating_identity(AlternatingIdentity::Unit, get(p, "n")?),
        default_space: n_60,
    },
    ClaimInfo {
        id: "alt-n",
        kind: ClaimKind::Lemma,
        params: N,
        summary: "Σ(−1)^k C(n+k,n)C(n−1,k) = (−1)^{n−1}n",
        eval: |p| ids::check_alternating_identity(AlternatingIdentity::TimesN, get(p, "n")?),
        default_space: n_60,
    },
    ClaimInfo {
        id: "qchu",
        kind: ClaimKind::Lemma,
        params: &[int("m"), int("n"), int("h")],
        summary: "q-Chu–Vandermonde convolution",
        eval: |p| {
            Ok(qpoly::check_qchu(
                get_u(p, "m")?,
                get_u(p, "n")?,
                get_u(p, "h")?,
            ))
        },
        default_space: qchu_space,
    },
    ClaimInfo {
        id: "qlucas",
        kind: ClaimKind::Lemma,
        params: &[int("d"), int("a"), int("b"), int("r"), int("s")],
        summary: "q-Lucas reduction modulo Φ_d",
        eval: |p| {
            qpoly::check_qlucas(
                get_u(p, "a")?,
                get_u(p, "b")?,
                get_u(p, "r")?,
                get_u(p, "s")?,
                get_u(p, "d")?,
            )
        },
        default_space: qlucas_space,
    },
    ClaimInfo {
        id: "thm5.1v1",
        kind: ClaimKind::Theorem,
        params: N_A_B,
        summary: "q-analogue, weight q^{k²}",
        eval: |p| thm51(Thm51Variant::SquareWeight, p),
        default_space: thm51_space,
    },
    ClaimInfo {
        id: "thm5.1v2",
        kind: ClaimKind::Theorem,
        params: N_A_B,
        summary: "q-analogue, shifted square weight",
        eval: |p| thm51(Thm51Variant::ShiftedSquareWeight, p),
        default_space: thm51_space,
    },
    ClaimInfo {
        id: "thm5.1v3",
        kind: ClaimKind::Theorem,
        params: N_A_B,
        summary: "q-analogue, linear weight",
        eval: |p| thm51(Thm51Variant::Linear, p),
        default_space: thm51_space,
    },
    ClaimInfo {
        id: "thm5.1v4",
        kind: ClaimKind::Theorem,
        params: N_A_B,
        summary: "q-analogue, reversed weight",
        eval: |p| thm51(Thm51Variant::Reversed, p),
        default_space: thm51_space,
    },
    ClaimInfo {
        id: "lem5.5",
        kind: ClaimKind::Lemma,
        params: N,
        summary: "q-sum ≡ 0 (mod [n]_q)",
        eval: |p| qpoly::check_lemma55(get_u(p, "n")?),
        default_space: n_30,
    },
    ClaimInfo {
        id: "thm5.4",
        kind: ClaimKind::Theorem,
        params: N,
        summary: "q-congruence with even/odd case split",
        eval: |p| qpoly::check_thm54(get_u(p, "n")?),
        default_space: n_24,
    },
    ClaimInfo {
        id: "conj3.1",
        kind: ClaimKind::Conjecture,
        params: N,
        summary: "Σ(−1)^k(2k+1)³D_k ≡ 2n² (mod n³), n a power of 2",
        eval: |p| conj(ConjectureId::Delannoy2Adic, p),
        default_space: conj31_space,
    },
    ClaimInfo {
        id: "conj5.gen",
        kind: ClaimKind::Conjecture,
        params: &[int("n"), int("r"), int("eps"), list("a"), list("b")],
        summary: "signed weighted binomial products ≡ 0 (mod gcd)",
        eval: |p| conj(ConjectureId::General, p),
        default_space: conj_gen_space,
    },
    ClaimInfo {
        id: "conj5.pow2a",
        kind: ClaimKind::Conjecture,
        params: N_R,
        summary: "Σ C(n−1,k)^{2r} ≡ n·[n = 2^a] (mod 2n)",
        eval: |p| conj(ConjectureId::PowerOfTwoA, p),
        default_space: pow2_space,
    },
    ClaimInfo {
        id: "conj5.pow2b",
        kind: ClaimKind::Conjecture,
        params: N_R,
        summary: "Σ C(2n−1,k)^{2r} ≡ n·[n = 2^a] (mod 2n)",
        eval: |p| conj(ConjectureId::PowerOfTwoB, p),
        default_space: pow2_space,
    },
    ClaimInfo {
        id: "conj5.cases",
        kind: ClaimKind::Conjecture,
        params: &[int("n"), int("s"), int("t")],
        summary: "Σ(−1)^{kt}C(n+k,k)^s C(n−1,k)^t mod 2n case split",
        eval: |p| conj(ConjectureId::Cases, p),
        default_space: cases_space,
    },
    ClaimInfo {
        id: "conj5.6",
        kind: ClaimKind::Conjecture,
        params: &[int("p"), int("e")],
        summary: "q-congruence modulo [p]_{q^{n/p}}², n = p^e",
        eval: |p| conj(ConjectureId::QSquare, p),
        default_space: conj56_space,
    },
];
