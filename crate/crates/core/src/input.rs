//! JSON scenario files.
//!
//! Exact quantities are strings `"n/d"` (or integers); complex quantities may
//! be such a string, a JSON number, or a pair `[re, im]` of either.
//!
//! ```json
//! {
//!   "local_scenarios": [
//!     {"q": 2, "symbol": "inert", "lambda": {"piF": "1"},
//!      "satake": {"u0": "1", "u1": "1", "u2": "1"}, "omega": "1"}
//!   ],
//!   "arch_scenarios": [
//!     {"l": 12, "q": "0", "ir": "11", "D": 4, "s": "3/2", "a_plus": "1"}
//!   ],
//!   "global_input": {
//!     "l": 12, "D": 3, "N": 2,
//!     "lambda_classvals": ["1"], "fourier_classvals": ["1"],
//!     "a1": 1e-8, "ir": "11",
//!     "primes": [{"p": 2, "satake": {"u0": "1", "u1": "1", "u2": "1"}, "tau": {"steinberg": -1}}]
//!   }
//! }
//! ```

use num_complex::Complex64;
use serde::Deserialize;

use crate::arch::ArchScenario;
use crate::error::{invalid, Error, Result};
use crate::exact::{parse_rational, rational_to_f64, Rational};
use crate::global::{GlobalInput, PrimeEntry, TauLocal};
use crate::local_field::{splitting_symbol, LocalQuadData, SplittingSymbol};
use crate::local_integral::ScenarioData;
use crate::satake::{SatakeParams, SteinbergData};

#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
enum Exact {
    Int(i64),
    Text(String),
}

#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
enum Scalar {
    Number(f64),
    Text(String),
}

#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
enum ComplexRepr {
    Pair([Scalar; 2]),
    One(Scalar),
}

#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
enum SymbolRepr {
    Value(i32),
    Name(String),
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
struct RawLambda {
    #[serde(rename = "piF")]
    pi_f: Option<Exact>,
    #[serde(rename = "piL")]
    pi_l: Option<Exact>,
    #[serde(rename = "piF_over_piL")]
    pi_f_over_pi_l: Option<Exact>,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
struct RawSatake<T> {
    u0: T,
    u1: T,
    u2: T,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
struct RawLocal {
    q: u32,
    symbol: SymbolRepr,
    lambda: RawLambda,
    satake: RawSatake<Exact>,
    omega: Exact,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
struct RawArch {
    l: u32,
    q: ComplexRepr,
    ir: ComplexRepr,
    #[serde(rename = "D")]
    d: u64,
    s: ComplexRepr,
    a_plus: ComplexRepr,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields, rename_all = "lowercase")]
enum RawTau {
    Steinberg(i32),
    Alpha([ComplexRepr; 2]),
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
struct RawPrime {
    p: u64,
    symbol: Option<SymbolRepr>,
    #[serde(rename = "lambda_piL")]
    lambda_pi_l: Option<ComplexRepr>,
    satake: RawSatake<ComplexRepr>,
    tau: RawTau,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
struct RawGlobal {
    l: u32,
    l1: Option<i64>,
    #[serde(rename = "D")]
    d: u64,
    #[serde(rename = "N")]
    n: u64,
    lambda_classvals: Vec<ComplexRepr>,
    fourier_classvals: Vec<ComplexRepr>,
    a1: ComplexRepr,
    ir: ComplexRepr,
    #[serde(default)]
    primes: Vec<RawPrime>,
    #[serde(default)]
    s: Vec<ComplexRepr>,
    petersson_phi: Option<f64>,
    petersson_psi: Option<f64>,
}

#[derive(Deserialize, Debug, Clone, Default)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default)]
    local_scenarios: Vec<RawLocal>,
    #[serde(default)]
    arch_scenarios: Vec<RawArch>,
    global_input: Option<RawGlobal>,
}

/// A parsed scenario file.
#[derive(Clone, Debug, Default)]
pub struct InputFile {
    pub local_scenarios: Vec<ScenarioData>,
    pub arch_scenarios: Vec<ArchScenario>,
    pub global_input: Option<GlobalInput>,
    /// Evaluation points for `global`; empty means `s = l/6 − 1/2`.
    pub global_s: Vec<Complex64>,
}

fn at(path: &str, e: Error) -> Error {
    Error::Invalid(format!("{path}: {e}"))
}

fn exact(v: &Exact, path: &str) -> Result<Rational> {
    match v {
        Exact::Int(n) => Ok(Rational::from_integer((*n).into())),
        Exact::Text(s) => parse_rational(s).ok_or_else(|| invalid(format!("{path}: expected \"num/den\", got {s:?}"))),
    }
}

fn scalar(v: &Scalar, path: &str) -> Result<f64> {
    match v {
        Scalar::Number(x) => Ok(*x),
        Scalar::Text(s) => parse_rational(s)
            .map(|r| rational_to_f64(&r))
            .or_else(|| s.trim().parse::<f64>().ok())
            .ok_or_else(|| invalid(format!("{path}: cannot read {s:?} as a number"))),
    }
}

fn complex(v: &ComplexRepr, path: &str) -> Result<Complex64> {
    match v {
        ComplexRepr::One(x) => Ok(Complex64::new(scalar(x, path)?, 0.0)),
        ComplexRepr::Pair([a, b]) => Ok(Complex64::new(scalar(a, path)?, scalar(b, path)?)),
    }
}

fn symbol(v: &SymbolRepr, path: &str) -> Result<SplittingSymbol> {
    match v {
        SymbolRepr::Value(n) => SplittingSymbol::try_from(*n).map_err(|e| at(path, e)),
        SymbolRepr::Name(s) => SplittingSymbol::ALL
            .into_iter()
            .find(|x| x.name() == s.as_str())
            .ok_or_else(|| invalid(format!("{path}: unknown splitting symbol {s:?}"))),
    }
}

fn local(raw: &RawLocal, path: &str) -> Result<ScenarioData> {
    let sym = symbol(&raw.symbol, &format!("{path}.symbol"))?;
    let opt = |v: &Option<Exact>, name: &str| v.as_ref().map(|x| exact(x, &format!("{path}.lambda.{name}"))).transpose();
    let pi_f = opt(&raw.lambda.pi_f, "piF")?;
    let pi_l = opt(&raw.lambda.pi_l, "piL")?;
    let ratio = opt(&raw.lambda.pi_f_over_pi_l, "piF_over_piL")?;
    let pi_f = match (pi_f, sym, &pi_l, &ratio) {
        (Some(v), _, _, _) => v,
        (None, SplittingSymbol::Ramified, Some(l), _) => l * l,
        (None, SplittingSymbol::Split, Some(l), Some(r)) => l * r,
        _ => return Err(invalid(format!("{path}.lambda: piF missing and not derivable"))),
    };
    let data = LocalQuadData::new(raw.q, sym, pi_f, pi_l, ratio).map_err(|e| at(&format!("{path}.lambda"), e))?;
    let sat = SatakeParams::new(
        exact(&raw.satake.u0, &format!("{path}.satake.u0"))?,
        exact(&raw.satake.u1, &format!("{path}.satake.u1"))?,
        exact(&raw.satake.u2, &format!("{path}.satake.u2"))?,
    )
    .map_err(|e| at(&format!("{path}.satake"), e))?;
    let st = SteinbergData::new(exact(&raw.omega, &format!("{path}.omega"))?).map_err(|e| at(&format!("{path}.omega"), e))?;
    ScenarioData::new(data, sat, st).map_err(|e| at(path, e))
}

fn arch(raw: &RawArch, path: &str) -> Result<ArchScenario> {
    ArchScenario::new(
        raw.l,
        complex(&raw.q, &format!("{path}.q"))?,
        complex(&raw.ir, &format!("{path}.ir"))?,
        raw.d,
        complex(&raw.s, &format!("{path}.s"))?,
        complex(&raw.a_plus, &format!("{path}.a_plus"))?,
    )
    .map_err(|e| at(path, e))
}

fn prime(raw: &RawPrime, disc: u64, path: &str) -> Result<PrimeEntry> {
    let sym = match &raw.symbol {
        Some(v) => symbol(v, &format!("{path}.symbol"))?,
        None => splitting_symbol(-(disc as i64), raw.p).map_err(|e| at(path, e))?,
    };
    let tau = match &raw.tau {
        RawTau::Steinberg(w) => TauLocal::Steinberg { omega: f64::from(*w) },
        RawTau::Alpha([a, b]) => TauLocal::Unramified {
            alpha: [complex(a, &format!("{path}.tau.alpha[0]"))?, complex(b, &format!("{path}.tau.alpha[1]"))?],
        },
    };
    Ok(PrimeEntry {
        p: raw.p,
        symbol: sym,
        lambda_pi_l: raw.lambda_pi_l.as_ref().map(|v| complex(v, &format!("{path}.lambda_piL"))).transpose()?,
        satake: [
            complex(&raw.satake.u0, &format!("{path}.satake.u0"))?,
            complex(&raw.satake.u1, &format!("{path}.satake.u1"))?,
            complex(&raw.satake.u2, &format!("{path}.satake.u2"))?,
        ],
        tau,
    })
}

fn global(raw: &RawGlobal) -> Result<(GlobalInput, Vec<Complex64>)> {
    let list = |v: &[ComplexRepr], name: &str| -> Result<Vec<Complex64>> {
        v.iter().enumerate().map(|(i, x)| complex(x, &format!("global_input.{name}[{i}]"))).collect()
    };
    let primes = raw
        .primes
        .iter()
        .enumerate()
        .map(|(i, p)| prime(p, raw.d, &format!("global_input.primes[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let gi = GlobalInput {
        l: raw.l,
        l1: raw.l1.unwrap_or(i64::from(raw.l)),
        disc: raw.d,
        level: raw.n,
        lambda_classvals: list(&raw.lambda_classvals, "lambda_classvals")?,
        fourier_classvals: list(&raw.fourier_classvals, "fourier_classvals")?,
        a1: complex(&raw.a1, "global_input.a1")?,
        ir: complex(&raw.ir, "global_input.ir")?,
        primes,
        petersson_phi: raw.petersson_phi,
        petersson_psi: raw.petersson_psi,
    }
    .validated()
    .map_err(|e| at("global_input", e))?;
    Ok((gi, list(&raw.s, "s")?))
}

/// Parses a scenario document; syntax errors carry line and column.
pub fn parse_input(text: &str) -> Result<InputFile> {
    let raw: RawFile = serde_json::from_str(text)
        .map_err(|e| Error::Invalid(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let local_scenarios = raw
        .local_scenarios
        .iter()
        .enumerate()
        .map(|(i, r)| local(r, &format!("local_scenarios[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let arch_scenarios = raw
        .arch_scenarios
        .iter()
        .enumerate()
        .map(|(i, r)| arch(r, &format!("arch_scenarios[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let (global_input, global_s) = match &raw.global_input {
        Some(g) => {
            let (gi, s) = global(g)?;
            (Some(gi), s)
        }
        None => (None, Vec::new()),
    };
    Ok(InputFile { local_scenarios, arch_scenarios, global_input, global_s })
}
